//! Command-line vector syntax: semicolon-separated comma-lists of scalar
//! strings, e.g. `--ideal "1,0,0,0,0;0,1,0,0,0"`.

use nlk_core::{Scalar, Subspace, Vector};

use crate::CliError;

pub fn parse_vector(text: &str, dim: usize) -> Result<Vector, CliError> {
    let entries: Vec<Scalar> = text
        .split(',')
        .map(|s| Scalar::parse(s).map_err(CliError::from))
        .collect::<Result<_, _>>()?;
    if entries.len() != dim {
        return Err(CliError::Parse(format!(
            "vector {text:?} has {} coordinates, expected {dim}",
            entries.len()
        )));
    }
    Ok(Vector::from_entries(entries))
}

pub fn parse_vector_list(text: &str, dim: usize) -> Result<Vec<Vector>, CliError> {
    text.split(';')
        .filter(|chunk| !chunk.trim().is_empty())
        .map(|chunk| parse_vector(chunk.trim(), dim))
        .collect()
}

/// The span of the listed vectors; an empty list is the zero subspace.
pub fn parse_span(text: &str, dim: usize) -> Result<Subspace, CliError> {
    let vectors = parse_vector_list(text, dim)?;
    if vectors.is_empty() {
        return Ok(Subspace::zero(dim));
    }
    Subspace::span(&vectors).map_err(CliError::from)
}
