//! Rational slopes, Farey neighbours and Farey chains between 0/1 and 1/1.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::par;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FareyError {
    #[error("slope 0/0 is undefined")]
    ZeroVector,
    #[error("cannot parse slope {0:?}: expected \"p/q\"")]
    Parse(String),
    #[error("{} and {} are not Farey neighbours", .0.0, .0.1)]
    NotNeighbours(Box<(Slope, Slope)>),
    #[error("chain must start at 0/1 and end at 1/1")]
    ChainEndpoints,
    #[error("chain is not increasing at {}, {}", .0.0, .0.1)]
    ChainOrder(Box<(Slope, Slope)>),
}

/// An unoriented rational slope `p/q`, including `1/0`.
///
/// Always stored reduced with `q > 0`, or as exactly `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, FareyError> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(FareyError::ZeroVector);
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn zero() -> Self {
        Slope {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Slope {
            p: BigInt::one(),
            q: BigInt::one(),
        }
    }

    pub fn infinity() -> Self {
        Slope {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    /// `p·s − q·r` for `self = p/q`, `other = r/s`.
    pub fn det(&self, other: &Slope) -> BigInt {
        &self.p * &other.q - &self.q * &other.p
    }

    pub fn is_neighbour(&self, other: &Slope) -> bool {
        self.det(other).abs().is_one()
    }

    /// The Stern–Brocot child `(p+r)/(q+s)` of two Farey neighbours.
    pub fn mediant(&self, other: &Slope) -> Result<Slope, FareyError> {
        if !self.is_neighbour(other) {
            return Err(FareyError::NotNeighbours(Box::new((
                self.clone(),
                other.clone(),
            ))));
        }
        Slope::new(&self.p + &other.p, &self.q + &other.q)
    }

    // 0 for [0, ∞), 1 for 1/0, 2 for negative slopes.
    fn arc_class(&self) -> u8 {
        if self.q.is_zero() {
            1
        } else if self.p.is_negative() {
            2
        } else {
            0
        }
    }

    /// Counter-clockwise order on the Farey circle starting at 0/1:
    /// `0/1 < … < 1/1 < … < 1/0 < … < −1/1 < …`.
    pub fn circular_cmp(&self, other: &Slope) -> Ordering {
        self.arc_class()
            .cmp(&other.arc_class())
            .then_with(|| (&self.p * &other.q).cmp(&(&other.p * &self.q)))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.circular_cmp(other)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FareyError::Parse(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A chain `0/1 = γ₀ < γ₁ < … < γₙ = 1/1` of consecutive Farey neighbours.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyChain(Vec<Slope>);

impl FareyChain {
    pub fn new(entries: Vec<Slope>) -> Result<Self, FareyError> {
        if entries.len() < 2
            || entries[0] != Slope::zero()
            || entries[entries.len() - 1] != Slope::one()
        {
            return Err(FareyError::ChainEndpoints);
        }
        for w in entries.windows(2) {
            if w[0] >= w[1] {
                return Err(FareyError::ChainOrder(Box::new((
                    w[0].clone(),
                    w[1].clone(),
                ))));
            }
            if !w[0].is_neighbour(&w[1]) {
                return Err(FareyError::NotNeighbours(Box::new((
                    w[0].clone(),
                    w[1].clone(),
                ))));
            }
        }
        Ok(FareyChain(entries))
    }

    /// The one-gap chain `[0/1, 1/1]`.
    pub fn trivial() -> Self {
        FareyChain(vec![Slope::zero(), Slope::one()])
    }

    pub fn entries(&self) -> &[Slope] {
        &self.0
    }

    /// Number of gaps, i.e. the number of link components it parametrizes.
    pub fn gaps(&self) -> usize {
        self.0.len() - 1
    }

    /// Inserts the mediant into gap `i` (between entries `i` and `i+1`).
    pub fn refine(&self, i: usize) -> FareyChain {
        let m = self.0[i]
            .mediant(&self.0[i + 1])
            .expect("chain entries are neighbours");
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..=i]);
        v.push(m);
        v.extend_from_slice(&self.0[i + 1..]);
        FareyChain(v)
    }
}

impl fmt::Display for FareyChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FareyChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for FareyChain {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FareyChain {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        FareyChain::new(Vec::<Slope>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl FromStr for FareyChain {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Slope>, _>>()?;
        FareyChain::new(entries)
    }
}

fn refine_level(level: &[FareyChain], parallel: bool) -> Vec<FareyChain> {
    let expand = |c: &FareyChain| (0..c.gaps()).map(|i| c.refine(i)).collect::<Vec<_>>();
    let batches = if parallel {
        par::map(level, expand)
    } else {
        par::map_seq(level, expand)
    };
    batches
        .into_iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn enumerate_with(n: usize, parallel: bool) -> Vec<FareyChain> {
    assert!(n >= 1, "a chain has at least one gap");
    let mut level = vec![FareyChain::trivial()];
    for _ in 1..n {
        level = refine_level(&level, parallel);
    }
    level
}

/// All Farey chains from 0/1 to 1/1 with exactly `n` gaps, sorted.
///
/// Built level by level by inserting a mediant into every gap of every chain
/// and deduplicating.
pub fn enumerate_chains(n: usize) -> Vec<FareyChain> {
    enumerate_with(n, true)
}

pub fn enumerate_chains_seq(n: usize) -> Vec<FareyChain> {
    enumerate_with(n, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn construction_reduces_and_canonicalizes() {
        assert_eq!(s(2, 4), s(1, 2));
        assert_eq!(s(-1, 0), Slope::infinity());
        assert_eq!(s(3, -6).to_string(), "-1/2");
        assert_eq!(Slope::new(0, 0), Err(FareyError::ZeroVector));
        assert_eq!(s(0, -5), Slope::zero());
    }

    #[test]
    fn neighbours() {
        assert!(s(1, 3).is_neighbour(&s(1, 2)));
        assert!(!s(1, 3).is_neighbour(&s(2, 3)));
        assert!(s(0, 1).is_neighbour(&s(1, 0)));
    }

    #[test]
    fn mediants() {
        assert_eq!(s(0, 1).mediant(&s(1, 1)).unwrap(), s(1, 2));
        assert_eq!(s(0, 1).mediant(&s(1, 2)).unwrap(), s(1, 3));
        assert_eq!(s(1, 2).mediant(&s(1, 1)).unwrap(), s(2, 3));
        assert!(matches!(
            s(1, 3).mediant(&s(2, 3)),
            Err(FareyError::NotNeighbours(..))
        ));
    }

    #[test]
    fn circular_order_examples() {
        assert!(s(1, 3) < s(1, 2));
        assert!(s(1, 1) < Slope::infinity());
        assert!(Slope::infinity() < s(-1, 1));
        assert!(s(-1, 1) < s(-1, 2));
        assert!(s(0, 1) < s(1, 100));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/-6".parse::<Slope>().unwrap(), s(-1, 2));
        assert!("1:2".parse::<Slope>().is_err());
        let c: FareyChain = "0/1,1/3,1/2,1/1".parse().unwrap();
        assert_eq!(c.to_string(), "0/1,1/3,1/2,1/1");
        assert!("0/1,2/3,1/1".parse::<FareyChain>().is_err());
        assert!("0/1,1/2".parse::<FareyChain>().is_err());
    }

    #[test]
    fn small_chain_sets() {
        assert_eq!(enumerate_chains(1), vec![FareyChain::trivial()]);
        let two: Vec<String> = enumerate_chains(2).iter().map(|c| c.to_string()).collect();
        assert_eq!(two, ["0/1,1/2,1/1"]);
        let three: Vec<String> = enumerate_chains(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(three, ["0/1,1/3,1/2,1/1", "0/1,1/2,2/3,1/1"]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for n in 1..=7 {
            assert_eq!(enumerate_chains(n), enumerate_chains_seq(n));
        }
    }

    fn arb_slope() -> impl Strategy<Value = Slope> {
        (-40i64..40, -40i64..40)
            .prop_filter("nonzero", |(p, q)| *p != 0 || *q != 0)
            .prop_map(|(p, q)| s(p, q))
    }

    proptest! {
        #[test]
        fn mediant_neighbours_both_parents(path in proptest::collection::vec(any::<bool>(), 0..40)) {
            // Descend the Stern–Brocot tree; every step keeps a neighbour pair.
            let (mut a, mut b) = (Slope::zero(), Slope::infinity());
            for right in path {
                let m = a.mediant(&b).unwrap();
                if right { a = m } else { b = m }
            }
            prop_assert!(a.is_neighbour(&b));
            let m = a.mediant(&b).unwrap();
            prop_assert!(m.is_neighbour(&a));
            prop_assert!(m.is_neighbour(&b));
        }

        #[test]
        fn circular_order_is_strict_total(a in arb_slope(), b in arb_slope(), c in arb_slope()) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
            if a < b && b < c {
                prop_assert!(a < c);
            }
        }
    }
}
