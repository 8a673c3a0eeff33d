//! JSON interchange for basis sets.
//!
//! ```json
//! {"d": 2, "provenance": "...", "bases": [{"label": "Z", "vectors": [[[1.0, 0.0], [0.0, 0.0]], ...]}]}
//! ```
//!
//! Each amplitude is a `[re, im]` pair. Parsing checks shapes only;
//! orthonormality is left to [`crate::linalg::validate_basis_set`] so that
//! damaged files can still be loaded and diagnosed.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Basis, BasisSet, CVector};
use crate::scalar::Real;

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Real")]
struct BasisRepr<T> {
    label: String,
    vectors: Vec<Vec<[T; 2]>>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Real")]
struct BasisSetRepr<T> {
    d: usize,
    provenance: String,
    bases: Vec<BasisRepr<T>>,
}

fn to_repr<T: Real>(set: &BasisSet<T>) -> BasisSetRepr<T> {
    BasisSetRepr {
        d: set.dim(),
        provenance: set.provenance().to_string(),
        bases: set
            .bases()
            .iter()
            .map(|b| BasisRepr {
                label: b.label().to_string(),
                vectors: b.vectors().iter().map(|v| v.amplitudes().iter().map(|a| [a.re, a.im]).collect()).collect(),
            })
            .collect(),
    }
}

fn from_repr<T: Real>(repr: BasisSetRepr<T>) -> Result<BasisSet<T>> {
    let d = repr.d;
    if d == 0 {
        return Err(Error::Serialization("\"d\" must be positive".into()));
    }
    let bases = repr
        .bases
        .into_iter()
        .enumerate()
        .map(|(bi, b)| {
            if b.vectors.len() != d {
                return Err(Error::Serialization(format!(
                    "basis {bi} ({}) has {} vectors, expected {d}",
                    b.label,
                    b.vectors.len()
                )));
            }
            let vectors = b
                .vectors
                .into_iter()
                .enumerate()
                .map(|(vi, v)| {
                    if v.len() != d {
                        return Err(Error::Serialization(format!(
                            "basis {bi} vector {vi} has {} amplitudes, expected {d}",
                            v.len()
                        )));
                    }
                    Ok(CVector::new(v.into_iter().map(|[re, im]| Complex::new(re, im)).collect()))
                })
                .collect::<Result<Vec<_>>>()?;
            Basis::new(b.label, vectors)
        })
        .collect::<Result<Vec<_>>>()?;
    BasisSet::new(repr.provenance, bases)
}

pub fn basis_set_to_json<T: Real>(set: &BasisSet<T>) -> Result<String> {
    Ok(serde_json::to_string(&to_repr(set))?)
}

/// Same as [`basis_set_to_json`] as a `serde_json::Value`, for embedding in larger documents.
pub fn basis_set_to_value<T: Real>(set: &BasisSet<T>) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(to_repr(set))?)
}

pub fn basis_set_from_json<T: Real>(json: &str) -> Result<BasisSet<T>> {
    from_repr(serde_json::from_str(json)?)
}

pub fn basis_set_from_value<T: Real>(value: serde_json::Value) -> Result<BasisSet<T>> {
    from_repr(serde_json::from_value(value)?)
}
