//! Integer 2×2 matrices, LR-words, oriented curves on the punctured torus and
//! the slope-to-geodesic translation.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::farey::Slope;
use crate::io::bigint_json;
use crate::modular::{ConjugacyClass, ModularWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Psl2Error {
    #[error("determinant {0} is not ±1")]
    Determinant(BigInt),
    #[error("empty LR-word")]
    EmptyWord,
    #[error("cannot parse LR-word {0:?}")]
    ParseWord(String),
    #[error("({0}, {1}) is not a primitive integer vector")]
    NotPrimitive(BigInt, BigInt),
    #[error("curve {0} is too long to spell out")]
    TooLong(Slope),
    #[error("curve {slope} did not map to a hyperbolic class ({class:?})")]
    NotHyperbolic { slope: Slope, class: ConjugacyClass },
}

/// `[[a, b], [c, d]]` with determinant ±1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, Psl2Error> {
        let m = Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det();
        if det.abs().is_one() {
            Ok(m)
        } else {
            Err(Psl2Error::Determinant(det))
        }
    }

    fn raw(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Result<Self, Psl2Error> {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn identity() -> Self {
        Mat2::raw(1, 0, 0, 1)
    }

    pub fn u() -> Self {
        Mat2::raw(0, -1, 1, 0)
    }

    pub fn v() -> Self {
        Mat2::raw(0, -1, 1, -1)
    }

    pub fn l() -> Self {
        Mat2::raw(1, 1, 0, 1)
    }

    pub fn r() -> Self {
        Mat2::raw(1, 0, 1, 1)
    }

    /// The order-6 deck transformation of the punctured torus over the
    /// modular surface.
    pub fn nu() -> Self {
        Mat2::raw(0, 1, -1, 1)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Mat2 {
        let adj = Mat2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        };
        if self.det().is_one() {
            adj
        } else {
            -adj
        }
    }

    pub fn pow(&self, k: i64) -> Mat2 {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2::identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// Equality in `PSL₂(ℤ)`, i.e. up to a global sign.
    pub fn eq_psl(&self, other: &Mat2) -> bool {
        self == other || *self == -other.clone()
    }

    pub fn apply(&self, v: &UVector) -> UVector {
        UVector {
            x: &self.a * &v.x + &self.b * &v.y,
            y: &self.c * &v.x + &self.d * &v.y,
        }
    }

    /// `Some(k)` when the matrix is `±[[1, 0], [k, 1]]`, the stabilizer of
    /// the curve `(0, 1)ᵀ`.
    pub fn lower_unipotent_power(&self) -> Option<BigInt> {
        let m = if self.d.is_negative() {
            -self.clone()
        } else {
            self.clone()
        };
        (m.a.is_one() && m.b.is_zero() && m.d.is_one()).then_some(m.c)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct Row(
    #[serde(with = "bigint_json")] BigInt,
    #[serde(with = "bigint_json")] BigInt,
);

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [
            Row(self.a.clone(), self.b.clone()),
            Row(self.c.clone(), self.d.clone()),
        ]
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [Row(a, b), Row(c, dd)] = <[Row; 2]>::deserialize(d)?;
        Mat2::new(a, b, c, dd).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::L => Mat2::l(),
            Letter::R => Mat2::r(),
        }
    }
}

/// A nonempty word in the letters `L`, `R`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LrWord(Vec<Letter>);

impl LrWord {
    /// Panics on an empty letter list; use `FromStr` for untrusted input.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        assert!(!letters.is_empty(), "LR-words are nonempty");
        LrWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Product of the letter matrices in reading order (`LR` = `L·R`).
    pub fn to_matrix(&self) -> Mat2 {
        self.0
            .iter()
            .fold(Mat2::identity(), |acc, l| &acc * &l.matrix())
    }

    /// `false` when the word is a proper power `u^k`, `k ≥ 2`.
    pub fn is_primitive(&self) -> bool {
        let n = self.0.len();
        !(1..n).any(|d| n.is_multiple_of(d) && self.0.chunks(d).all(|c| c == &self.0[..d]))
    }

    pub fn rotate(&self, k: usize) -> LrWord {
        let mut v = self.0.clone();
        let k = k % v.len();
        v.rotate_left(k);
        LrWord(v)
    }

    /// Lexicographically least rotation with `L < R`.
    pub fn cyclic_normalize(&self) -> LrWord {
        self.rotate(least_rotation(&self.0))
    }

    /// `#R − #L`.
    pub fn rademacher(&self) -> i64 {
        self.0
            .iter()
            .map(|l| match l {
                Letter::L => -1,
                Letter::R => 1,
            })
            .sum()
    }

    pub fn concat(&self, other: &LrWord) -> LrWord {
        LrWord([self.0.as_slice(), other.0.as_slice()].concat())
    }

    pub fn is_single_letter(&self) -> bool {
        self.0.iter().all(|&l| l == self.0[0])
    }
}

/// Start of the lexicographically least rotation (Booth's algorithm).
fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let at = |i: usize| &s[i % n];
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0;
    for j in 1..2 * n {
        let mut i = fail[j - k - 1];
        while i != usize::MAX && at(j) != at(k + i + 1) {
            if at(j) < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = i.wrapping_add(1);
        }
    }
    k % n
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::L => "L",
                Letter::R => "R",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts plain words (`LLRR`) and exponent sugar (`L2R2`, `L^2R^2`).
impl FromStr for LrWord {
    type Err = Psl2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Psl2Error::ParseWord(s.to_string());
        let mut letters = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'L' | 'l' => Letter::L,
                'R' | 'r' => Letter::R,
                _ => return Err(bad()),
            };
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let count: usize = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            if count == 0 {
                return Err(bad());
            }
            letters.extend(std::iter::repeat_n(letter, count));
        }
        if letters.is_empty() {
            return Err(Psl2Error::EmptyWord);
        }
        Ok(LrWord(letters))
    }
}

impl Serialize for LrWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LrWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// An oriented essential simple closed curve on the punctured torus, as a
/// primitive integer vector `(x, y)ᵀ` of slope `x/y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UVector {
    x: BigInt,
    y: BigInt,
}

impl UVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self, Psl2Error> {
        let (x, y) = (x.into(), y.into());
        if x.gcd(&y).is_one() {
            Ok(UVector { x, y })
        } else {
            Err(Psl2Error::NotPrimitive(x, y))
        }
    }

    /// The orientation of `s` with positive second coordinate (`1/0` ↦ `(1, 0)`).
    pub fn from_slope(s: &Slope) -> Self {
        UVector {
            x: s.p().clone(),
            y: s.q().clone(),
        }
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn slope(&self) -> Slope {
        Slope::new(self.x.clone(), self.y.clone()).expect("primitive vectors are nonzero")
    }

    pub fn nu(&self) -> UVector {
        Mat2::nu().apply(self)
    }

    /// `det[self | other] = x·y' − x'·y`.
    pub fn det(&self, other: &UVector) -> BigInt {
        &self.x * &other.y - &other.x * &self.y
    }

    /// The six preimages of the projected canonical lift, in the order
    /// `v, νv, ν²v, −v, −νv, −ν²v`.
    pub fn six_lifts(&self) -> [UVector; 6] {
        let v1 = self.nu();
        let v2 = v1.nu();
        [
            self.clone(),
            v1.clone(),
            v2.clone(),
            -self.clone(),
            -v1,
            -v2,
        ]
    }
}

impl Neg for UVector {
    type Output = UVector;

    fn neg(self) -> UVector {
        UVector {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl fmt::Display for UVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for UVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for UVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Row(self.x.clone(), self.y.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for UVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let Row(x, y) = Row::deserialize(d)?;
        UVector::new(x, y).map_err(serde::de::Error::custom)
    }
}

/// Free basis `(g₁, g₂) = (LR, RL)` of the commutator subgroup of `PSL₂(ℤ)`,
/// the fundamental group of the punctured torus.
///
/// `g₁` is the curve `0/1` and `g₂` the curve `1/1`, so that `ν` acts on
/// homology as conjugation by `L⁻¹`. A curve `(p, q)ᵀ` then has homology
/// class `(q − p)·g₁ + p·g₂`.
pub const FREE_BASIS: [&str; 2] = ["LR", "RL"];

/// Homology coordinates of `(p, q)ᵀ` in the basis [`FREE_BASIS`].
pub fn basis_coordinates(v: &UVector) -> (BigInt, BigInt) {
    (&v.y - &v.x, v.x.clone())
}

/// Lower Christoffel word with `m` copies of `a` (`false`) and `k` copies of
/// `b` (`true`), `m, k ≥ 0`, `gcd(m, k) = 1`.
pub fn christoffel(m: u64, k: u64) -> Vec<bool> {
    let n = m + k;
    (1..=n)
        .map(|i| {
            let (i, k, n) = (i as u128, k as u128, n as u128);
            i * k / n > (i - 1) * k / n
        })
        .collect()
}

/// The cyclic-canonical LR-word of the closed geodesic on the modular
/// surface covered by the simple closed curve of slope `s`.
///
/// The curve's homology class in [`FREE_BASIS`] is spelled as a Christoffel
/// word, substituted by the LR-expressions of the basis, and reduced to the
/// positive LR normal form of its conjugacy class.
pub fn slope_to_word(s: &Slope) -> Result<LrWord, Psl2Error> {
    let (mut m, mut k) = basis_coordinates(&UVector::from_slope(s));
    if m.is_negative() || (m.is_zero() && k.is_negative()) {
        m = -m;
        k = -k;
    }
    let b_inverse = k.is_negative();
    let (m, k) = match (m.to_u64(), k.abs().to_u64()) {
        (Some(m), Some(k)) if m.checked_add(k).is_some_and(|n| n < (1 << 40)) => (m, k),
        _ => return Err(Psl2Error::TooLong(s.clone())),
    };
    let g1 = [(Letter::L, false), (Letter::R, false)];
    let g2 = [(Letter::R, false), (Letter::L, false)];
    let g2_inv = [(Letter::L, true), (Letter::R, true)];
    let letters = christoffel(m, k)
        .into_iter()
        .flat_map(|is_b| match (is_b, b_inverse) {
            (false, _) => g1,
            (true, false) => g2,
            (true, true) => g2_inv,
        });
    match ModularWord::from_signed_letters(letters).conjugacy_class() {
        ConjugacyClass::Hyperbolic(w) => Ok(w),
        class => Err(Psl2Error::NotHyperbolic {
            slope: s.clone(),
            class,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2::from_rows(rows).unwrap()
    }

    fn w(s: &str) -> LrWord {
        s.parse().unwrap()
    }

    fn v(x: i64, y: i64) -> UVector {
        UVector::new(x, y).unwrap()
    }

    #[test]
    fn generator_orders() {
        let nu = Mat2::nu();
        assert_eq!(nu.pow(3), -Mat2::identity());
        assert_eq!(nu.pow(2), m([[-1, 1], [-1, 0]]));
        assert_eq!(nu.pow(6), Mat2::identity());
        assert!(Mat2::v().pow(3).eq_psl(&Mat2::identity()));
        assert!(Mat2::u().pow(2).eq_psl(&Mat2::identity()));
        assert_eq!(Mat2::v(), -Mat2::nu());
        assert_eq!(nu.pow(-2), m([[0, -1], [1, -1]]));
    }

    #[test]
    fn determinant_is_enforced() {
        assert!(matches!(
            Mat2::from_rows([[2, 0], [0, 1]]),
            Err(Psl2Error::Determinant(_))
        ));
        assert!(Mat2::from_rows([[0, 1], [1, 0]]).is_ok());
        assert_eq!(m([[0, 1], [1, 0]]).inverse(), m([[0, 1], [1, 0]]));
    }

    #[test]
    fn word_products() {
        assert_eq!(w("LR").to_matrix(), m([[2, 1], [1, 1]]));
        assert_eq!(w("LLRR").to_matrix(), m([[5, 2], [2, 1]]));
        assert_eq!(w("L").to_matrix(), Mat2::l());
    }

    #[test]
    fn primitivity() {
        assert!(!w("LRLR").is_primitive());
        assert!(w("LR").is_primitive());
        assert!(w("LLRLRR").is_primitive());
        assert!(!w("LLRLLR").is_primitive());
        assert!(w("L").is_primitive());
        assert!(!w("LL").is_primitive());
    }

    #[test]
    fn normalization() {
        assert_eq!(w("RL").cyclic_normalize(), w("LR"));
        assert_eq!(w("RLLRRL").cyclic_normalize(), w("LLRRLR"));
        assert_eq!(w("LR").cyclic_normalize(), w("LR"));
    }

    #[test]
    fn parsing() {
        assert_eq!(w("L2R2"), w("LLRR"));
        assert_eq!(w("L^2RLR^2"), w("LLRLRR"));
        assert_eq!(w("L2R2").to_string(), "LLRR");
        assert_eq!("".parse::<LrWord>(), Err(Psl2Error::EmptyWord));
        assert!("LXR".parse::<LrWord>().is_err());
        assert!("L0".parse::<LrWord>().is_err());
    }

    #[test]
    fn rademacher_counts() {
        assert_eq!(w("LR").rademacher(), 0);
        assert_eq!(w("LLRRR").rademacher(), 1);
        assert_eq!(w("LLRLRR").rademacher(), 0);
    }

    #[test]
    fn six_lift_formula() {
        let lifts = v(1, 2).six_lifts();
        let expected = [v(1, 2), v(2, 1), v(1, -1), v(-1, -2), v(-2, -1), v(-1, 1)];
        assert_eq!(lifts, expected);
        let mut d0: Vec<_> = v(0, 1).six_lifts().to_vec();
        d0.sort();
        let mut exp = vec![v(0, 1), v(0, -1), v(1, 1), v(-1, -1), v(1, 0), v(-1, 0)];
        exp.sort();
        assert_eq!(d0, exp);
        let mut d1: Vec<_> = v(1, 1).six_lifts().to_vec();
        d1.sort();
        assert_eq!(d1, exp);
    }

    #[test]
    fn primitive_vectors_only() {
        assert!(UVector::new(2, 4).is_err());
        assert!(UVector::new(0, 2).is_err());
        assert!(UVector::new(0, -1).is_ok());
    }

    #[test]
    fn christoffel_words() {
        let show = |m, k| -> String {
            christoffel(m, k)
                .into_iter()
                .map(|b| if b { 'b' } else { 'a' })
                .collect()
        };
        assert_eq!(show(1, 0), "a");
        assert_eq!(show(0, 1), "b");
        assert_eq!(show(1, 1), "ab");
        assert_eq!(show(2, 1), "aab");
        assert_eq!(show(3, 2), "aabab");
    }

    #[test]
    fn slope_words() {
        let sw = |p: i64, q: i64| {
            slope_to_word(&Slope::new(p, q).unwrap())
                .unwrap()
                .to_string()
        };
        assert_eq!(sw(0, 1), "LR");
        assert_eq!(sw(1, 1), "LR");
        assert_eq!(sw(1, 0), "LR");
        assert_eq!(sw(1, 2), "LLRR");
        assert_eq!(sw(1, 3), "LLRLRR");
        assert_eq!(sw(2, 3), "LLRRLR");
    }

    #[test]
    fn slope_words_are_nu_equivariant() {
        for q in 0i64..=8 {
            for p in -30i64..=30 {
                let Ok(s) = Slope::new(p, q) else { continue };
                if s.q().is_zero() && p != 1 {
                    continue;
                }
                let image = UVector::from_slope(&s).nu().slope();
                assert_eq!(
                    slope_to_word(&s).unwrap(),
                    slope_to_word(&image).unwrap(),
                    "{s} vs {image}"
                );
            }
        }
    }

    #[test]
    fn rotations_are_conjugate_up_to_length_twelve() {
        for len in 1..=12usize {
            for bits in 0u32..(1 << len) {
                let word = LrWord::from_letters(
                    (0..len)
                        .map(|i| {
                            if bits >> i & 1 == 1 {
                                Letter::R
                            } else {
                                Letter::L
                            }
                        })
                        .collect(),
                );
                let t = word.to_matrix().trace();
                for k in 1..len {
                    assert_eq!(word.rotate(k).to_matrix().trace(), t);
                }
                if !word.is_single_letter() {
                    assert!(t >= BigInt::from(3), "{word}");
                }
            }
        }
        assert_eq!(w("LR").to_matrix().trace(), BigInt::from(3));
    }

    #[test]
    fn rotation_is_an_explicit_conjugation() {
        let word = w("LLRLRR");
        let first = word.letters()[0].matrix();
        let rotated = word.rotate(1).to_matrix();
        assert_eq!(rotated, &(&first.inverse() * &word.to_matrix()) * &first);
    }

    fn arb_word() -> impl Strategy<Value = LrWord> {
        proptest::collection::vec(any::<bool>(), 1..30).prop_map(|bits| {
            LrWord::from_letters(
                bits.into_iter()
                    .map(|b| if b { Letter::R } else { Letter::L })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn least_rotation_matches_naive(bits in proptest::collection::vec(any::<bool>(), 1..40)) {
            let naive = (0..bits.len())
                .map(|k| [&bits[k..], &bits[..k]].concat())
                .min()
                .unwrap();
            let k = least_rotation(&bits);
            prop_assert_eq!([&bits[k..], &bits[..k]].concat(), naive);
        }

        #[test]
        fn rademacher_cyclic_and_additive(a in arb_word(), b in arb_word(), k in 0usize..40) {
            prop_assert_eq!(a.rotate(k).rademacher(), a.rademacher());
            prop_assert_eq!(a.concat(&b).rademacher(), a.rademacher() + b.rademacher());
        }

        #[test]
        fn six_lifts_are_nu_stable(x in -50i64..=50, y in -50i64..=50) {
            let Ok(vec) = UVector::new(x, y) else { return Ok(()) };
            let lifts = vec.six_lifts();
            for l in &lifts {
                prop_assert!(lifts.contains(&l.nu()));
            }
        }

        #[test]
        fn normal_form_is_a_rotation_fixed_point(a in arb_word(), k in 0usize..40) {
            prop_assert_eq!(a.rotate(k).cyclic_normalize(), a.cyclic_normalize());
        }
    }
}
