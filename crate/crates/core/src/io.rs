//! File formats shared by the library and the command line.
//!
//! Δ-set documents are JSON objects
//!
//! ```json
//! { "n": 2, "vectors": [[0, 1], [1, 1], ...], "chain": ["0/1", "1/2", "1/1"] }
//! ```
//!
//! and a file may hold one document or an array of them. Integers are
//! written as plain JSON numbers of arbitrary size.

use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{DeltaSet, ModularLink};
use crate::farey::Slope;
use crate::psl2::UVector;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
}

/// Arbitrary-size integers as bare JSON numbers.
pub mod bigint_json {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Number::from_str(&x.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = Number::deserialize(d)?;
        n.to_string()
            .parse()
            .map_err(|_| serde::de::Error::custom(format!("{n} is not an integer")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaDocument {
    pub n: usize,
    pub vectors: Vec<UVector>,
    #[serde(default)]
    pub chain: Vec<Slope>,
}

impl DeltaDocument {
    pub fn from_link(link: &ModularLink) -> Self {
        DeltaDocument {
            n: link.components().len(),
            vectors: link.delta().vectors().cloned().collect(),
            chain: link.chain().entries().to_vec(),
        }
    }

    pub fn delta(&self) -> DeltaSet {
        DeltaSet::new(self.vectors.iter().cloned())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    Many(Vec<DeltaDocument>),
    One(DeltaDocument),
}

pub fn parse_delta_documents(text: &str) -> Result<Vec<DeltaDocument>, FormatError> {
    Ok(match serde_json::from_str(text)? {
        OneOrMany::Many(v) => v,
        OneOrMany::One(d) => vec![d],
    })
}

pub fn to_pretty_json<T: Serialize + ?Sized>(value: &T) -> Result<String, FormatError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes through a sibling temporary file and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}
