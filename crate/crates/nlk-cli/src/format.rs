//! The algebra interchange format.
//!
//! ```json
//! {
//!   "arity": 3,
//!   "dim": 5,
//!   "basis_labels": ["e1", "e2", "e3", "e4", "e5"],
//!   "brackets": [
//!     { "args": [2, 3, 4], "value": { "1": "1" } }
//!   ],
//!   "form": [["0","0","0","0","1"], ...]
//! }
//! ```
//!
//! `args` are strictly increasing 1-based indices of length `arity`;
//! `value` maps 1-based indices to scalar strings (`"p"` or `"p/q"`),
//! omitted coordinates are zero; `form` is an optional row-major Gram
//! matrix. Emission writes reduced scalars, sorted bracket tuples, and
//! numerically ordered value keys, so equal algebras produce identical
//! bytes.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use nlk_core::{Algebra, Form, Mat, Scalar, StructureTensor, Vector};

use crate::CliError;

/// A parsed algebra file: the bracket table plus an optional form. Nothing
/// is verified here beyond the schema; laws are the checkers' business.
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub form: Option<Form>,
}

#[derive(Deserialize)]
struct RawFile {
    arity: usize,
    dim: usize,
    #[serde(default)]
    basis_labels: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
    #[serde(default)]
    form: Option<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
struct RawBracket {
    args: Vec<usize>,
    value: BTreeMap<String, String>,
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, CliError> {
    let raw: RawFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid JSON: {e}")))?;
    let mut tensor = StructureTensor::new(raw.arity, raw.dim)?;
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for entry in raw.brackets {
        if seen.contains(&entry.args) {
            return Err(CliError::Parse(format!(
                "duplicate bracket tuple {:?}",
                entry.args
            )));
        }
        seen.push(entry.args.clone());
        let mut entries = vec![Scalar::zero(); raw.dim];
        for (key, scalar) in &entry.value {
            let idx: usize = key
                .parse()
                .map_err(|_| CliError::Parse(format!("bad coordinate index {key:?}")))?;
            if idx < 1 || idx > raw.dim {
                return Err(CliError::Parse(format!(
                    "coordinate index {idx} outside 1..={}",
                    raw.dim
                )));
            }
            entries[idx - 1] = Scalar::parse(scalar)?;
        }
        tensor.insert(entry.args, Vector::from_entries(entries))?;
    }
    let mut algebra = Algebra::new(tensor);
    if let Some(labels) = raw.basis_labels {
        if labels.len() != raw.dim {
            return Err(CliError::Parse(format!(
                "{} basis labels for dimension {}",
                labels.len(),
                raw.dim
            )));
        }
        algebra.set_labels(Some(labels))?;
    }
    let form = match raw.form {
        None => None,
        Some(rows) => {
            if rows.len() != raw.dim || rows.iter().any(|r| r.len() != raw.dim) {
                return Err(CliError::Parse(format!(
                    "form must be a {0}x{0} matrix",
                    raw.dim
                )));
            }
            let mut gram = Mat::zero(raw.dim, raw.dim);
            for (r, row) in rows.iter().enumerate() {
                for (c, s) in row.iter().enumerate() {
                    gram[(r, c)] = Scalar::parse(s)?;
                }
            }
            Some(Form::new(gram)?)
        }
    };
    Ok(AlgebraFile { algebra, form })
}

/// Deterministic emission; see the module docs for the layout.
pub fn emit_algebra_file(algebra: &Algebra, form: Option<&Form>) -> String {
    let mut root = Map::new();
    root.insert("arity".into(), json!(algebra.arity()));
    root.insert("dim".into(), json!(algebra.dim()));
    if let Some(labels) = algebra.labels() {
        root.insert("basis_labels".into(), json!(labels));
    }
    let mut brackets = Vec::new();
    for (tuple, value) in algebra.tensor().entries() {
        let mut coords = Map::new();
        for j in 1..=algebra.dim() {
            let c = value.coord1(j);
            if !c.is_zero() {
                coords.insert(j.to_string(), Value::String(c.to_string()));
            }
        }
        let mut entry = Map::new();
        entry.insert("args".into(), json!(tuple));
        entry.insert("value".into(), Value::Object(coords));
        brackets.push(Value::Object(entry));
    }
    root.insert("brackets".into(), Value::Array(brackets));
    if let Some(form) = form {
        let rows: Vec<Value> = (0..form.dim())
            .map(|r| {
                Value::Array(
                    (0..form.dim())
                        .map(|c| Value::String(form.gram()[(r, c)].to_string()))
                        .collect(),
                )
            })
            .collect();
        root.insert("form".into(), Value::Array(rows));
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(root)).expect("valid JSON value");
    out.push('\n');
    out
}
