//! Structured findings from the axiom checkers.
//!
//! Checkers never fail with an `Err` on mathematical grounds; they collect
//! every witness of every broken law into a [`ViolationReport`] so that
//! invalid tables can be held, inspected, and printed.

use serde::Serialize;

use crate::linalg::Vector;
use crate::scalar::Scalar;

/// Which law a witness breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The arity-n substitution law relating nested brackets.
    FundamentalIdentity,
    /// The bracket/form compatibility law.
    Invariance,
    /// Gram matrix symmetry.
    Symmetry,
    /// Full rank of the Gram matrix.
    Nondegeneracy,
    /// A claimed simple factor is not a perfect (n+1)-dimensional subalgebra.
    LeviSimpleFactor,
    /// Claimed simple factors are not bracket-orthogonal, or the claimed
    /// semisimple-plus-radical split is not direct.
    LeviSplit,
    /// The claimed radical is not a solvable ideal.
    LeviRadical,
    /// Centralizer identities of the radical fail.
    LeviCentralizer,
    /// The claimed isotropic ideal fails its sandwich conditions.
    LeviIsotropicIdeal,
    /// An isotropic radical must equal its own orthogonal complement.
    LeviSelfDualRadical,
}

impl ViolationKind {
    /// Human-readable label of the law being checked.
    pub fn label(self) -> &'static str {
        match self {
            ViolationKind::FundamentalIdentity => "fundamental identity",
            ViolationKind::Invariance => "form invariance",
            ViolationKind::Symmetry => "form symmetry",
            ViolationKind::Nondegeneracy => "form nondegeneracy",
            ViolationKind::LeviSimpleFactor => "simple factor shape",
            ViolationKind::LeviSplit => "semisimple/radical split",
            ViolationKind::LeviRadical => "radical solvability",
            ViolationKind::LeviCentralizer => "radical centralizer identities",
            ViolationKind::LeviIsotropicIdeal => "isotropic ideal sandwich",
            ViolationKind::LeviSelfDualRadical => "isotropic radical self-duality",
        }
    }
}

/// One witness: the tuples that expose the failure and the nonzero residual.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// 1-based bracket tuple (x-side for the fundamental identity).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_tuple: Option<Vec<usize>>,
    /// 1-based y-side tuple, when the law has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_tuple: Option<Vec<usize>>,
    /// 1-based basis pair (p, q) for form laws.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_vector: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_scalar: Option<Scalar>,
    /// Free-form detail for findings without a tuple shape.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Violation {
    pub fn new(kind: ViolationKind) -> Self {
        Violation {
            kind,
            x_tuple: None,
            y_tuple: None,
            pair: None,
            residual_vector: None,
            residual_scalar: None,
            detail: None,
        }
    }

    pub fn with_x_tuple(mut self, t: Vec<usize>) -> Self {
        self.x_tuple = Some(t);
        self
    }

    pub fn with_y_tuple(mut self, t: Vec<usize>) -> Self {
        self.y_tuple = Some(t);
        self
    }

    pub fn with_pair(mut self, p: usize, q: usize) -> Self {
        self.pair = Some((p, q));
        self
    }

    pub fn with_residual_vector(mut self, v: Vector) -> Self {
        self.residual_vector = Some(v);
        self
    }

    pub fn with_residual_scalar(mut self, s: Scalar) -> Self {
        self.residual_scalar = Some(s);
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

/// All witnesses found by a check; empty iff the check passed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn new() -> Self {
        ViolationReport::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn merge(&mut self, other: ViolationReport) {
        self.violations.extend(other.violations);
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Witnesses of one kind only.
    pub fn of_kind(&self, kind: ViolationKind) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.kind == kind)
    }
}
