//! Invariant-based classification of (n+k)-dimensional metric n-Lie
//! algebras for 2 <= k <= n+1.
//!
//! The case is decided from computed invariants alone (center isotropy and
//! the center/derived intersection), never by searching for an isomorphism
//! to a normal form. Inputs outside the corank window are labeled
//! `out_of_range` so their invariant profile can still be printed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::MetricAlgebra;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    Abelian,
    Case1IsotropicCenter,
    Case2Reductive,
    Case3Mixed,
    OutOfRange,
}

/// The invariants the decision is based on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub dim_center: usize,
    pub dim_derived: usize,
    pub center_isotropic: bool,
    pub dim_center_cap_derived: usize,
    pub solvable: bool,
    pub perfect: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub case: Case,
    pub n: usize,
    pub d: usize,
    pub k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<usize>,
    pub profile: InvariantProfile,
}

/// Classifies a verified metric n-Lie algebra by its invariants.
///
/// Inside the corank window the case parameters must satisfy the structure
/// theory's dimension equalities; a mismatch is reported as a distinct
/// inconsistency error since it signals an input outside the hypotheses or
/// an internal bug.
pub fn classify(ma: &MetricAlgebra) -> Result<ClassificationReport> {
    ma.require_verified()?;
    let algebra = ma.algebra();
    let form = ma.form();
    let n = algebra.arity();
    let d = algebra.dim();
    let k = d as i64 - n as i64;

    let center = algebra.center();
    let derived = algebra.derived_algebra();
    let cap = center.intersect(&derived)?;
    let profile = InvariantProfile {
        dim_center: center.dim(),
        dim_derived: derived.dim(),
        center_isotropic: form.is_isotropic(&center)?,
        dim_center_cap_derived: cap.dim(),
        solvable: algebra.is_solvable(&algebra.full_space())?,
        perfect: derived == Subspace::full(d),
    };

    let mut report = ClassificationReport {
        case: Case::OutOfRange,
        n,
        d,
        k,
        l: None,
        k1: None,
        profile,
    };
    if k < 2 || k > n as i64 + 1 {
        return Ok(report);
    }
    let k = k as usize;

    if algebra.is_abelian() {
        report.case = Case::Abelian;
        return Ok(report);
    }

    if derived.contains_subspace(&center)? {
        // isotropic center
        if center.dim() != k - 1 {
            return Err(Error::Inconsistent(format!(
                "isotropic center of dimension {}, expected {}",
                center.dim(),
                k - 1
            )));
        }
        if derived.dim() != n + 1 {
            return Err(Error::Inconsistent(format!(
                "derived algebra of dimension {}, expected {}",
                derived.dim(),
                n + 1
            )));
        }
        report.case = Case::Case1IsotropicCenter;
        return Ok(report);
    }

    if cap.is_zero() {
        // reductive: center (+) derived = g with a simple derived part
        if center.sum(&derived)? != Subspace::full(d) {
            return Err(Error::Inconsistent(
                "reductive profile but center + derived is not everything".into(),
            ));
        }
        if derived.dim() != n + 1 {
            return Err(Error::Inconsistent(format!(
                "derived algebra of dimension {}, expected {}",
                derived.dim(),
                n + 1
            )));
        }
        let simple_part = algebra.restrict(&derived).map_err(|_| {
            Error::Inconsistent("derived algebra is not a subalgebra".into())
        })?;
        if simple_part.derived_algebra() != Subspace::full(n + 1) {
            return Err(Error::Inconsistent(
                "derived algebra of a reductive input is not perfect".into(),
            ));
        }
        report.case = Case::Case2Reductive;
        return Ok(report);
    }

    let k1 = cap.dim();
    let l = k
        .checked_sub(k1 + 1)
        .ok_or_else(|| Error::Inconsistent(format!("k1 = {k1} exceeds k - 1 = {}", k - 1)))?;
    if l < 1 || l + 1 >= k {
        return Err(Error::Inconsistent(format!(
            "mixed-center parameters out of range: l = {l}, k = {k}"
        )));
    }
    report.case = Case::Case3Mixed;
    report.l = Some(l);
    report.k1 = Some(k1);
    Ok(report)
}
