//! Exact-arithmetic kernels for metric n-Lie (Filippov) algebras.
//!
//! The crate is organized around a handful of immutable value types:
//!
//! * [`Scalar`], [`Vector`], [`Mat`], [`Subspace`] — rational linear algebra
//!   with canonical RREF subspace representatives ([`linalg`], [`subspace`]);
//! * [`Algebra`] — an antisymmetric n-linear bracket given by structure
//!   constants on strictly increasing basis tuples ([`nlie`]);
//! * [`Form`] and [`MetricAlgebra`] — an invariant symmetric bilinear form
//!   paired with an algebra, plus everything built on orthogonality:
//!   isotropy, metric quotients, arity reduction ([`metric`]);
//! * [`catalog`] — deterministic builders for the families realizing every
//!   small-corank metric n-Lie algebra;
//! * [`classify`] — the invariant-based trichotomy for (n+k)-dimensional
//!   metric n-Lie algebras with 2 <= k <= n+1.
//!
//! All arithmetic is exact; checks either pass or produce a
//! [`ViolationReport`] carrying concrete witnesses. Every operation is a
//! pure function on immutable values and is safe to call from any thread.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod metric;
pub mod nlie;
pub mod report;
pub mod scalar;
pub mod subspace;

pub use catalog::ortho_direct_sum;
pub use classify::{classify, Case, ClassificationReport, InvariantProfile};
pub use error::{Error, Result};
pub use linalg::{Mat, Vector};
pub use metric::{invariant_form_space, Form, LeviAnnotation, MetricAlgebra, VerificationStatus};
pub use nlie::{index_tuples, Algebra, StructureTensor};
pub use report::{Violation, ViolationKind, ViolationReport};
pub use scalar::Scalar;
pub use subspace::{nullspace, Subspace};
