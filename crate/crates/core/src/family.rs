//! ν-invariant Farey sets on the punctured torus and the modular links they
//! project to.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::farey::{self, FareyChain, FareyError, Slope};
use crate::par;
use crate::psl2::{self, LrWord, Psl2Error, UVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("Δ has no curve {0}")]
    MissingEndpoint(Slope),
    #[error("consecutive curves {} and {} are not Farey neighbours", .0.0, .0.1)]
    NotNeighbours(Box<(Slope, Slope)>),
    #[error("ν-orbit of {0} is not contained in Δ")]
    IncompleteOrbit(UVector),
    #[error("Δ is {verdict}: {detail}")]
    Rejected { verdict: Verdict, detail: String },
    #[error(transparent)]
    Word(#[from] Psl2Error),
}

/// A finite set of oriented curves on the punctured torus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeltaSet(BTreeSet<UVector>);

impl DeltaSet {
    pub fn new(vectors: impl IntoIterator<Item = UVector>) -> Self {
        DeltaSet(vectors.into_iter().collect())
    }

    /// `{±(0,1), ±(1,1), ±(1,0)}`.
    pub fn delta0() -> Self {
        DeltaSet::new(UVector::from_slope(&Slope::zero()).six_lifts())
    }

    /// The ν-closure (with signs) of the chain's curves; contains Δ₀.
    pub fn from_chain(chain: &FareyChain) -> Self {
        let entries = chain.entries();
        DeltaSet::new(
            entries[..entries.len() - 1]
                .iter()
                .flat_map(|s| UVector::from_slope(s).six_lifts()),
        )
    }

    pub fn vectors(&self) -> impl Iterator<Item = &UVector> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &UVector) -> bool {
        self.0.contains(v)
    }

    pub fn is_superset(&self, other: &DeltaSet) -> bool {
        self.0.is_superset(&other.0)
    }

    /// Unoriented curves, in circular order from 0/1.
    pub fn slopes(&self) -> Vec<Slope> {
        self.0
            .iter()
            .map(UVector::slope)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vector(UVector),
    Pair(Slope, Slope),
    Empty,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vector(v) => write!(f, "{v}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Empty => f.write_str("empty set"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Witness),
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Pass => f.write_str("pass"),
            Check::Fail(w) => write!(f, "FAIL at {w}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// All conditions hold, including consecutive curves being Farey neighbours.
    Valid,
    /// The three stated conditions hold but some consecutive curves are not
    /// Farey neighbours; such sets are not certified.
    WeakOnly,
    Invalid,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "valid",
            Verdict::WeakOnly => "weak-only",
            Verdict::Invalid => "invalid",
        })
    }
}

/// Outcome of each membership condition, in the order they are checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Nonempty and finite.
    pub finite: Check,
    pub nu_invariant: Check,
    /// Every curve has a predecessor and a successor at determinant +1.
    pub determinant_neighbours: Check,
    /// Curves consecutive in circular order are Farey neighbours.
    pub farey_consecutive: Check,
}

impl ValidationReport {
    pub fn verdict(&self) -> Verdict {
        if !(self.finite.passed()
            && self.nu_invariant.passed()
            && self.determinant_neighbours.passed())
        {
            Verdict::Invalid
        } else if !self.farey_consecutive.passed() {
            Verdict::WeakOnly
        } else {
            Verdict::Valid
        }
    }

    /// The first failed condition, if any.
    pub fn first_failure(&self) -> Option<(&'static str, &Witness)> {
        self.checks().into_iter().find_map(|(name, c)| match c {
            Check::Fail(w) => Some((name, w)),
            Check::Pass => None,
        })
    }

    pub fn checks(&self) -> [(&'static str, &Check); 4] {
        [
            ("finite", &self.finite),
            ("nu-invariant", &self.nu_invariant),
            ("determinant-neighbours", &self.determinant_neighbours),
            ("farey-consecutive", &self.farey_consecutive),
        ]
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, c) in self.checks() {
            writeln!(f, "  {name:<24} {c}")?;
        }
        write!(f, "  verdict                  {}", self.verdict())
    }
}

pub fn validate(delta: &DeltaSet) -> ValidationReport {
    let finite = if delta.is_empty() {
        Check::Fail(Witness::Empty)
    } else {
        Check::Pass
    };

    let nu_invariant = match delta.vectors().find(|v| !delta.contains(&v.nu())) {
        Some(v) => Check::Fail(Witness::Vector(v.clone())),
        None => Check::Pass,
    };

    let determinant_neighbours = match lacks_determinant_neighbours(delta) {
        Some(v) => Check::Fail(Witness::Vector(v.clone())),
        None => Check::Pass,
    };

    let slopes = delta.slopes();
    let farey_consecutive = if slopes.len() < 2 {
        match slopes.first() {
            Some(s) => Check::Fail(Witness::Pair(s.clone(), s.clone())),
            None => Check::Fail(Witness::Empty),
        }
    } else {
        let bad = (0..slopes.len()).find_map(|i| {
            let (a, b) = (&slopes[i], &slopes[(i + 1) % slopes.len()]);
            (!a.is_neighbour(b)).then(|| Witness::Pair(a.clone(), b.clone()))
        });
        bad.map_or(Check::Pass, Check::Fail)
    };

    ValidationReport {
        finite,
        nu_invariant,
        determinant_neighbours,
        farey_consecutive,
    }
}

fn lacks_determinant_neighbours(delta: &DeltaSet) -> Option<&UVector> {
    let small: Option<Vec<(i64, i64)>> = delta
        .vectors()
        .map(|v| Some((v.x().to_i64()?, v.y().to_i64()?)))
        .collect();
    if let Some(small) = small {
        let det =
            |a: (i64, i64), b: (i64, i64)| a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        let bad = small.iter().position(|&v| {
            !(small.iter().any(|&u| det(u, v) == 1) && small.iter().any(|&w| det(v, w) == 1))
        })?;
        return delta.vectors().nth(bad);
    }
    let one = num_bigint::BigInt::from(1);
    delta.vectors().find(|v| {
        let has_pred = delta.vectors().any(|u| u.det(v) == one);
        let has_succ = delta.vectors().any(|w| v.det(w) == one);
        !(has_pred && has_succ)
    })
}

/// The curves of Δ in `[0/1, 1/1]`, increasing, as a Farey chain.
pub fn chain_of(delta: &DeltaSet) -> Result<FareyChain, FamilyError> {
    let (zero, one) = (Slope::zero(), Slope::one());
    let inside: Vec<Slope> = delta.slopes().into_iter().filter(|s| *s <= one).collect();
    for end in [&zero, &one] {
        if !inside.contains(end) {
            return Err(FamilyError::MissingEndpoint(end.clone()));
        }
    }
    FareyChain::new(inside).map_err(|e| match e {
        FareyError::NotNeighbours(pair) => FamilyError::NotNeighbours(pair),
        other => unreachable!("sorted slopes between the endpoints: {other}"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// The orientation of the chain curve `γᵢ` in this orbit.
    pub representative: UVector,
    pub orbit: [UVector; 6],
    pub word: LrWord,
}

/// A modular link together with the Δ-set and drilling chain describing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularLink {
    delta: DeltaSet,
    chain: FareyChain,
    components: Vec<Component>,
}

impl ModularLink {
    pub fn delta(&self) -> &DeltaSet {
        &self.delta
    }

    pub fn chain(&self) -> &FareyChain {
        &self.chain
    }

    /// Components in chain order: component `i` contains `γᵢ`.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn words(&self) -> Vec<LrWord> {
        self.components.iter().map(|c| c.word.clone()).collect()
    }
}

/// Splits a valid Δ into its six-element ν-orbits and labels each with the
/// LR-word of the geodesic it covers.
pub fn components(delta: &DeltaSet) -> Result<ModularLink, FamilyError> {
    let chain = chain_of(delta)?;
    let entries = chain.entries();
    let components = entries[..entries.len() - 1]
        .iter()
        .map(|s| {
            let representative = UVector::from_slope(s);
            let orbit = representative.six_lifts();
            if let Some(l) = orbit.iter().find(|l| !delta.contains(l)) {
                return Err(FamilyError::IncompleteOrbit(l.clone()));
            }
            Ok(Component {
                orbit,
                word: psl2::slope_to_word(s)?,
                representative,
            })
        })
        .collect::<Result<Vec<_>, FamilyError>>()?;
    // The chain orbits are disjoint, so they exhaust Δ exactly when the sizes agree.
    if 6 * components.len() != delta.len() {
        let covered: BTreeSet<&UVector> = components.iter().flat_map(|c| &c.orbit).collect();
        let stray = delta
            .vectors()
            .find(|v| !covered.contains(v))
            .expect("Δ is larger than its chain orbits");
        return Err(FamilyError::IncompleteOrbit(stray.clone()));
    }
    Ok(ModularLink {
        delta: delta.clone(),
        chain,
        components,
    })
}

fn link_of_chain(chain: &FareyChain) -> Result<ModularLink, FamilyError> {
    let delta = DeltaSet::from_chain(chain);
    let report = validate(&delta);
    match report.verdict() {
        Verdict::Valid => components(&delta),
        verdict => Err(FamilyError::Rejected {
            verdict,
            detail: report
                .first_failure()
                .map(|(n, w)| format!("{n} at {w}"))
                .unwrap_or_default(),
        }),
    }
}

/// Every `n`-component member of the family, sorted by drilling chain.
pub fn enumerate_family(n: usize) -> Result<Vec<ModularLink>, FamilyError> {
    par::map(&farey::enumerate_chains(n), link_of_chain)
        .into_iter()
        .collect()
}

pub fn enumerate_family_seq(n: usize) -> Result<Vec<ModularLink>, FamilyError> {
    par::map_seq(&farey::enumerate_chains_seq(n), link_of_chain)
        .into_iter()
        .collect()
}
