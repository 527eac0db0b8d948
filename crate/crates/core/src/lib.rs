//! Exact arithmetic for the arithmetic modular links of the once-punctured
//! torus cover of the modular surface.
//!
//! The crate enumerates the family of ν-invariant Farey sets, labels each
//! component by its LR-word, realizes the components as periodic orbits of
//! the Lorenz template, and produces integer-matrix certificates identifying
//! each link complement with the complement of an augmented chainlink.
//! The augmented chainlinks themselves are built as planar diagrams by
//! cyclically unrolling the Whitehead link around its axis component.
//!
//! Everything is computed with arbitrary-precision integers; no floating
//! point is used anywhere.

pub mod certify;
pub mod chainlink;
pub mod cli;
pub mod family;
pub mod farey;
pub mod io;
pub mod lorenz;
pub mod modular;
pub mod par;
pub mod psl2;

pub use certify::{certify, verify, BundleDescription, HomeoCertificate};
pub use chainlink::{AnnularTangle, LinkingMatrix, PdCode};
pub use family::{DeltaSet, ModularLink, ValidationReport, Verdict};
pub use farey::{FareyChain, Slope};
pub use lorenz::{LorenzBraid, TemplateOrbit};
pub use psl2::{LrWord, Mat2, UVector};
