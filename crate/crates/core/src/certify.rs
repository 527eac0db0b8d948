//! Integer-matrix certificates that a family link complement is the
//! complement of an augmented chainlink.
//!
//! Both manifolds are punctured-torus bundles drilled along one curve per
//! level. The modular side is drilled at the chain `γ₀ < … < γₙ` with
//! monodromy `ν`; the cover side at `νⁱ(0,1)ᵀ` with monodromy `νⁿ`. Level by
//! level, the unique orientation-preserving linear map `hᵢ` sending the pair
//! `(γᵢ, γᵢ₊₁)` to `(νⁱe, νⁱ⁺¹e)` identifies the slabs, and the two gluings
//! then differ by `D = ν⁻ⁿ·h_{n−1}·ν`, which must fix `e = (0,1)ᵀ`.
//!
//! The certificate only covers this linear algebra. That a homeomorphism of
//! the thrice-punctured sphere preserving the punctures is determined up to
//! isotopy by its action on them is taken on faith.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{self, DeltaSet, FamilyError, Verdict};
use crate::farey::FareyChain;
use crate::io::bigint_json;
use crate::par;
use crate::psl2::{Mat2, UVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("{} and {} are linearly dependent", .0.0, .0.1)]
    Dependent(Box<(UVector, UVector)>),
    #[error("no integral map sends {src:?} to {dst:?}")]
    NonIntegral {
        src: Box<[UVector; 2]>,
        dst: Box<[UVector; 2]>,
    },
    #[error("Δ is {0} and cannot be certified")]
    NotCertifiable(Verdict),
    #[error("no orientation gives determinant +1 at level {level}: {matrix}")]
    NoOrientation { level: usize, matrix: Box<Mat2> },
    #[error("discrepancy {0} does not fix the curve (0,1)")]
    NotTwist(Box<Mat2>),
    #[error(transparent)]
    Family(Box<FamilyError>),
}

impl From<FamilyError> for CertifyError {
    fn from(e: FamilyError) -> Self {
        CertifyError::Family(Box::new(e))
    }
}

/// A punctured-torus bundle drilled along one curve per level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleDescription {
    pub n: usize,
    pub drilled: Vec<(usize, UVector)>,
    pub monodromy: Mat2,
}

fn e() -> UVector {
    UVector::new(0, 1).expect("primitive")
}

fn nu_power(i: i64) -> Mat2 {
    Mat2::nu().pow(i)
}

fn chain_vectors(chain: &FareyChain) -> Vec<UVector> {
    chain.entries().iter().map(UVector::from_slope).collect()
}

/// Levels drilled at the chain of Δ, glued by `ν`.
pub fn build_modular_bundle(delta: &DeltaSet) -> Result<BundleDescription, CertifyError> {
    let chain = family::chain_of(delta)?;
    Ok(BundleDescription {
        n: chain.gaps(),
        drilled: chain_vectors(&chain).into_iter().enumerate().collect(),
        monodromy: Mat2::nu(),
    })
}

/// The `n`-fold cyclic cover of the bundle of Δ₀.
pub fn build_cover_bundle(n: usize) -> BundleDescription {
    BundleDescription {
        n,
        drilled: (0..=n)
            .map(|i| (i, nu_power(i as i64).apply(&e())))
            .collect(),
        monodromy: nu_power(n as i64),
    }
}

/// The integer matrix `A` with `A·src1 = dst1` and `A·src2 = dst2`.
pub fn solve_pair(
    src1: &UVector,
    dst1: &UVector,
    src2: &UVector,
    dst2: &UVector,
) -> Result<Mat2, CertifyError> {
    let det = src1.det(src2);
    if det.is_zero() {
        return Err(CertifyError::Dependent(Box::new((
            src1.clone(),
            src2.clone(),
        ))));
    }
    // A = [dst1 dst2] · adj([src1 src2]) / det
    let (s1x, s1y, s2x, s2y) = (src1.x(), src1.y(), src2.x(), src2.y());
    let (d1x, d1y, d2x, d2y) = (dst1.x(), dst1.y(), dst2.x(), dst2.y());
    let raw = [
        d1x * s2y - d2x * s1y,
        d2x * s1x - d1x * s2x,
        d1y * s2y - d2y * s1y,
        d2y * s1x - d1y * s2x,
    ];
    let non_integral = || CertifyError::NonIntegral {
        src: Box::new([src1.clone(), src2.clone()]),
        dst: Box::new([dst1.clone(), dst2.clone()]),
    };
    if raw.iter().any(|x| !x.is_multiple_of(&det)) {
        return Err(non_integral());
    }
    let [a, b, c, d] = raw.map(|x| x / &det);
    Mat2::new(a, b, c, d).map_err(|_| non_integral())
}

/// Witness of the level-by-level identification and the twist discrepancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeoCertificate {
    pub n: usize,
    pub chain: FareyChain,
    pub h: Vec<Mat2>,
    /// Orientation of the source vector `γᵢ₊₁` used for `hᵢ`, as `±1`.
    pub signs: Vec<i8>,
    pub discrepancy: Mat2,
    #[serde(with = "bigint_json")]
    pub twist_power: BigInt,
}

impl fmt::Display for HomeoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "chain = [{}]", self.chain)?;
        for (i, (h, s)) in self.h.iter().zip(&self.signs).enumerate() {
            writeln!(f, "h{i} = {h}  sign {s:+}")?;
        }
        writeln!(f, "D = {}", self.discrepancy)?;
        write!(f, "twist power = {}", self.twist_power)
    }
}

fn level_map(i: usize, src: &UVector, next: &UVector, sign: i8) -> Result<Mat2, CertifyError> {
    let next = if sign < 0 {
        -next.clone()
    } else {
        next.clone()
    };
    let t0 = nu_power(i as i64).apply(&e());
    let t1 = nu_power(i as i64 + 1).apply(&e());
    solve_pair(src, &t0, &next, &t1)
}

/// Certificate for a Δ that passes the strong validation.
pub fn certify(delta: &DeltaSet) -> Result<HomeoCertificate, CertifyError> {
    let verdict = family::validate(delta).verdict();
    if verdict != Verdict::Valid {
        return Err(CertifyError::NotCertifiable(verdict));
    }
    let chain = family::chain_of(delta)?;
    certify_chain(&chain)
}

pub fn certify_chain(chain: &FareyChain) -> Result<HomeoCertificate, CertifyError> {
    let n = chain.gaps();
    let gammas = chain_vectors(chain);
    let mut h = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(n);
    for i in 0..n {
        let mut sign = 1i8;
        let mut m = level_map(i, &gammas[i], &gammas[i + 1], sign)?;
        if !m.det().is_one() {
            sign = -1;
            m = level_map(i, &gammas[i], &gammas[i + 1], sign)?;
        }
        if !m.det().is_one() {
            return Err(CertifyError::NoOrientation {
                level: i,
                matrix: Box::new(m),
            });
        }
        h.push(m);
        signs.push(sign);
    }
    let discrepancy = discrepancy(n, &h[n - 1]);
    let twist_power = twist_of(&discrepancy)?;
    Ok(HomeoCertificate {
        n,
        chain: chain.clone(),
        h,
        signs,
        discrepancy,
        twist_power,
    })
}

fn discrepancy(n: usize, last: &Mat2) -> Mat2 {
    &(&nu_power(-(n as i64)) * last) * &Mat2::nu()
}

fn twist_of(d: &Mat2) -> Result<BigInt, CertifyError> {
    let image = d.apply(&e());
    if image != e() && image != -e() {
        return Err(CertifyError::NotTwist(Box::new(d.clone())));
    }
    d.lower_unipotent_power()
        .ok_or_else(|| CertifyError::NotTwist(Box::new(d.clone())))
}

/// Re-checks every claim of a certificate from its chain alone.
pub fn verify(cert: &HomeoCertificate) -> Result<(), String> {
    let n = cert.n;
    let chain =
        FareyChain::new(cert.chain.entries().to_vec()).map_err(|e| format!("chain: {e}"))?;
    if chain.gaps() != n || cert.h.len() != n || cert.signs.len() != n {
        return Err(format!(
            "length mismatch: n = {n}, chain gaps = {}, |h| = {}, |signs| = {}",
            chain.gaps(),
            cert.h.len(),
            cert.signs.len()
        ));
    }
    let gammas = chain_vectors(&chain);
    for (i, (h, &sign)) in cert.h.iter().zip(&cert.signs).enumerate() {
        if sign != 1 && sign != -1 {
            return Err(format!("sign {sign} at level {i} is not ±1"));
        }
        if !h.det().is_one() {
            return Err(format!("h{i} = {h} has determinant {}", h.det()));
        }
        let next = if sign < 0 {
            -gammas[i + 1].clone()
        } else {
            gammas[i + 1].clone()
        };
        let checks = [
            (&gammas[i], nu_power(i as i64).apply(&e())),
            (&next, nu_power(i as i64 + 1).apply(&e())),
        ];
        for (src, dst) in checks {
            let got = h.apply(src);
            if got != dst {
                return Err(format!("h{i} sends {src} to {got}, expected {dst}"));
            }
        }
    }
    let d = discrepancy(n, &cert.h[n - 1]);
    if d != cert.discrepancy {
        return Err(format!(
            "discrepancy is {d}, certificate records {}",
            cert.discrepancy
        ));
    }
    let k = twist_of(&cert.discrepancy).map_err(|e| e.to_string())?;
    if k != cert.twist_power {
        return Err(format!(
            "twist power is {k}, certificate records {}",
            cert.twist_power
        ));
    }
    Ok(())
}

/// Certificates for every `n`-component family member, in chain order.
pub fn certify_family(n: usize) -> Result<Vec<HomeoCertificate>, CertifyError> {
    par::map(&crate::farey::enumerate_chains(n), certify_chain)
        .into_iter()
        .collect()
}

pub fn certify_family_seq(n: usize) -> Result<Vec<HomeoCertificate>, CertifyError> {
    par::map_seq(&crate::farey::enumerate_chains_seq(n), certify_chain)
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> UVector {
        UVector::new(x, y).unwrap()
    }

    fn m(rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2::from_rows(rows).unwrap()
    }

    fn delta(chain: &str) -> DeltaSet {
        DeltaSet::from_chain(&chain.parse().unwrap())
    }

    #[test]
    fn solve_pair_examples() {
        assert_eq!(
            solve_pair(&v(0, 1), &v(0, 1), &v(1, 2), &v(1, 1)).unwrap(),
            m([[1, 0], [-1, 1]])
        );
        assert_eq!(
            solve_pair(&v(1, 2), &v(1, 1), &v(1, 1), &v(1, 0)).unwrap(),
            m([[1, 0], [-1, 1]])
        );
        assert_eq!(
            solve_pair(&v(0, 1), &v(0, 1), &v(1, 0), &v(1, 0)).unwrap(),
            Mat2::identity()
        );
        assert!(matches!(
            solve_pair(&v(1, 1), &v(0, 1), &v(-1, -1), &v(1, 0)),
            Err(CertifyError::Dependent(_))
        ));
        assert!(matches!(
            solve_pair(&v(1, 0), &v(1, 0), &v(1, 3), &v(0, 1)),
            Err(CertifyError::NonIntegral { .. })
        ));
    }

    #[test]
    fn bundles() {
        let b0 = build_modular_bundle(&DeltaSet::delta0()).unwrap();
        assert_eq!(b0.n, 1);
        assert_eq!(b0.drilled, vec![(0, v(0, 1)), (1, v(1, 1))]);
        assert_eq!(b0.monodromy, Mat2::nu());
        assert_eq!(
            build_modular_bundle(&delta("0/1,1/2,1/1")).unwrap().drilled[1],
            (1, v(1, 2))
        );
        let c2 = build_cover_bundle(2);
        assert_eq!(c2.drilled, vec![(0, v(0, 1)), (1, v(1, 1)), (2, v(1, 0))]);
        assert_eq!(c2.monodromy, m([[-1, 1], [-1, 0]]));
        assert_eq!(build_cover_bundle(3).monodromy, -Mat2::identity());
        assert_eq!(
            build_cover_bundle(1),
            BundleDescription {
                monodromy: Mat2::nu(),
                ..b0
            }
        );
    }

    #[test]
    fn delta0_certificate() {
        let c = certify(&DeltaSet::delta0()).unwrap();
        assert_eq!(c.h, vec![Mat2::identity()]);
        assert_eq!(c.discrepancy, Mat2::identity());
        assert_eq!(c.twist_power, BigInt::zero());
        assert_eq!(verify(&c), Ok(()));
    }

    #[test]
    fn two_component_certificate() {
        let c = certify(&delta("0/1,1/2,1/1")).unwrap();
        assert_eq!(c.h, vec![m([[1, 0], [-1, 1]]); 2]);
        assert_eq!(c.signs, vec![1, 1]);
        assert_eq!(c.discrepancy, m([[1, 0], [1, 1]]));
        assert_eq!(c.twist_power, BigInt::one());
        assert_eq!(&c.h[1] * &Mat2::nu(), m([[0, 1], [-1, 0]]));
        assert_eq!(verify(&c), Ok(()));
    }

    #[test]
    fn three_component_certificates() {
        for chain in ["0/1,1/3,1/2,1/1", "0/1,1/2,2/3,1/1"] {
            let c = certify(&delta(chain)).unwrap();
            assert_eq!(c.discrepancy.apply(&v(0, 1)), v(0, 1));
            assert_eq!(verify(&c), Ok(()));
        }
    }

    #[test]
    fn tampered_certificates_fail() {
        let good = certify(&delta("0/1,1/2,1/1")).unwrap();
        let mut bad = good.clone();
        bad.discrepancy = Mat2::nu();
        assert!(verify(&bad).is_err());
        let mut bad = good.clone();
        bad.twist_power += 1;
        assert!(verify(&bad).is_err());
        let mut bad = good.clone();
        bad.signs[0] = -1;
        assert!(verify(&bad).is_err());
        let mut bad = good;
        bad.h.pop();
        assert!(verify(&bad).is_err());
    }

    #[test]
    fn weak_only_sets_are_refused() {
        let d = DeltaSet::new(v(0, 1).six_lifts().into_iter().chain(v(1, 3).six_lifts()));
        assert_eq!(
            certify(&d),
            Err(CertifyError::NotCertifiable(Verdict::WeakOnly))
        );
    }

    #[test]
    fn json_field_order() {
        let c = certify(&delta("0/1,1/2,1/1")).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"chain":["0/1","1/2","1/1"],"h":[[[1,0],[-1,1]],[[1,0],[-1,1]]],"signs":[1,1],"discrepancy":[[1,0],[1,1]],"twist_power":1}"#
        );
        let back: HomeoCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn family_certificates_match_sequential() {
        assert_eq!(certify_family(5).unwrap(), certify_family_seq(5).unwrap());
    }
}
