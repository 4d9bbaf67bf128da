//! n-ary Lie algebras with exact structure constants.
//!
//! The bracket is stored canonically: only strictly increasing basis tuples
//! appear as keys, antisymmetry supplies every other ordering. Evaluation on
//! general vectors contracts each stored tuple against the determinant of
//! the corresponding coordinate minor, which is exactly the antisymmetrized
//! coefficient sum.
//!
//! Basis indices are 1-based throughout the public API, reports, and files;
//! only coordinate storage inside [`Vector`] and [`Mat`] is 0-based.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{Mat, Vector};
use crate::report::{Violation, ViolationKind, ViolationReport};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Sorts a tuple of basis indices, tracking the permutation sign.
///
/// Returns `None` when an index repeats (the bracket vanishes).
fn sign_and_sort(idxs: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut sorted = idxs.to_vec();
    let mut negative = false;
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((negative, sorted))
}

/// Strictly increasing `k`-tuples from `1..=d`.
pub fn index_tuples(d: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=d).combinations(k)
}

/// Structure constants of an antisymmetric n-linear bracket.
///
/// Maps strictly increasing 1-based index tuples to the coefficient vector
/// of the corresponding basis bracket; absent tuples bracket to zero, and no
/// zero vector is ever stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    arity: usize,
    dim: usize,
    table: BTreeMap<Vec<usize>, Vector>,
}

impl StructureTensor {
    pub fn new(arity: usize, dim: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidParameter(format!("arity {arity} < 2")));
        }
        Ok(StructureTensor {
            arity,
            dim,
            table: BTreeMap::new(),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    /// Sets the bracket of a strictly increasing tuple. Zero values erase.
    pub fn insert(&mut self, tuple: Vec<usize>, value: Vector) -> Result<()> {
        if tuple.len() != self.arity
            || tuple.windows(2).any(|w| w[0] >= w[1])
            || tuple.first().is_some_and(|&i| i < 1)
            || tuple.last().is_some_and(|&i| i > self.dim)
        {
            return Err(Error::BadTuple(tuple));
        }
        if value.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket value of length {} in dimension {}",
                value.dim(),
                self.dim
            )));
        }
        if value.is_zero() {
            self.table.remove(&tuple);
        } else {
            self.table.insert(tuple, value);
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.table.iter()
    }

    /// Signed lookup of an arbitrary-order tuple; `None` means zero.
    fn lookup(&self, idxs: &[usize]) -> Option<(bool, &Vector)> {
        let (negative, sorted) = sign_and_sort(idxs)?;
        self.table.get(&sorted).map(|v| (negative, v))
    }
}

/// An n-Lie algebra candidate: a structure tensor plus optional basis names.
///
/// Construction performs no law checking; whether the fundamental identity
/// holds is established by [`Algebra::check_fundamental_identity`] and
/// carried separately, so invalid tables can be held and reported on.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    tensor: StructureTensor,
    labels: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(tensor: StructureTensor) -> Self {
        Algebra {
            tensor,
            labels: None,
        }
    }

    pub fn with_labels(tensor: StructureTensor, labels: Vec<String>) -> Result<Self> {
        if labels.len() != tensor.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                tensor.dim()
            )));
        }
        Ok(Algebra {
            tensor,
            labels: Some(labels),
        })
    }

    /// The abelian algebra: empty table.
    pub fn abelian(arity: usize, dim: usize) -> Result<Self> {
        Ok(Algebra::new(StructureTensor::new(arity, dim)?))
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) -> Result<()> {
        if let Some(ref l) = labels {
            if l.len() != self.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "{} labels for dimension {}",
                    l.len(),
                    self.dim()
                )));
            }
        }
        self.labels = labels;
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.tensor.arity
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.tensor.is_empty()
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Bracket of basis vectors given by an arbitrary-order index tuple.
    pub fn bracket_indices(&self, idxs: &[usize]) -> Vector {
        match self.tensor.lookup(idxs) {
            None => Vector::zero(self.dim()),
            Some((true, v)) => -v,
            Some((false, v)) => v.clone(),
        }
    }

    /// Full multilinear bracket of general vectors.
    ///
    /// For each stored tuple the antisymmetrized coefficient is the
    /// determinant of the arguments' coordinates at the tuple's columns.
    pub fn bracket(&self, args: &[Vector]) -> Result<Vector> {
        let n = self.arity();
        if args.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket of {} arguments in an arity-{} algebra",
                args.len(),
                n
            )));
        }
        for a in args {
            if a.dim() != self.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "argument of length {} in dimension {}",
                    a.dim(),
                    self.dim()
                )));
            }
        }
        let mut acc = Vector::zero(self.dim());
        for (tuple, value) in self.tensor.entries() {
            let mut minor = Mat::zero(n, n);
            for (s, arg) in args.iter().enumerate() {
                for (t, &j) in tuple.iter().enumerate() {
                    minor[(s, t)] = arg.coord1(j).clone();
                }
            }
            let coeff = minor.det();
            if !coeff.is_zero() {
                acc.axpy(&coeff, value);
            }
        }
        Ok(acc)
    }

    /// Bracket with exactly one general vector among basis vectors: expands
    /// the general slot only. `pre` and `post` are the basis indices before
    /// and after the general argument, in slot order.
    pub fn bracket_mixed(&self, pre: &[usize], v: &Vector, post: &[usize]) -> Vector {
        debug_assert_eq!(pre.len() + 1 + post.len(), self.arity());
        let mut acc = Vector::zero(self.dim());
        let mut idxs = Vec::with_capacity(self.arity());
        for j in 1..=self.dim() {
            let c = v.coord1(j);
            if c.is_zero() {
                continue;
            }
            idxs.clear();
            idxs.extend_from_slice(pre);
            idxs.push(j);
            idxs.extend_from_slice(post);
            if let Some((negative, value)) = self.tensor.lookup(&idxs) {
                let coeff = if negative { -c } else { c.clone() };
                acc.axpy(&coeff, value);
            }
        }
        acc
    }

    /// Checks the substitution law on every pair of basis tuples.
    ///
    /// Passing on basis tuples implies the law for all vectors by
    /// multilinearity. Witnesses carry the x-tuple, y-tuple, and residual.
    pub fn check_fundamental_identity(&self) -> ViolationReport {
        self.check_fundamental_identity_with_workers(1)
    }

    /// Same check with the x-tuple sweep partitioned across `workers`
    /// threads; the merged report is identical to the sequential one.
    pub fn check_fundamental_identity_with_workers(&self, workers: usize) -> ViolationReport {
        let n = self.arity();
        let d = self.dim();
        let x_tuples: Vec<Vec<usize>> = index_tuples(d, n).collect();
        let workers = workers.max(1).min(x_tuples.len().max(1));

        let sweep = |chunk: &[Vec<usize>]| -> Vec<Violation> {
            let mut found = Vec::new();
            let mut idxs = Vec::with_capacity(n);
            for x in chunk {
                for y in index_tuples(d, n - 1) {
                    let lhs = match self.tensor.table.get(x) {
                        Some(w) => self.bracket_mixed(&[], w, &y),
                        None => Vector::zero(d),
                    };
                    let mut rhs = Vector::zero(d);
                    for i in 0..n {
                        idxs.clear();
                        idxs.push(x[i]);
                        idxs.extend_from_slice(&y);
                        if let Some((negative, inner)) = self.tensor.lookup(&idxs) {
                            let term = self.bracket_mixed(&x[..i], inner, &x[i + 1..]);
                            if negative {
                                rhs = &rhs - &term;
                            } else {
                                rhs = &rhs + &term;
                            }
                        }
                    }
                    let residual = &lhs - &rhs;
                    if !residual.is_zero() {
                        found.push(
                            Violation::new(ViolationKind::FundamentalIdentity)
                                .with_x_tuple(x.clone())
                                .with_y_tuple(y.clone())
                                .with_residual_vector(residual),
                        );
                    }
                }
            }
            found
        };

        let mut report = ViolationReport::new();
        if workers <= 1 {
            report.violations = sweep(&x_tuples);
            return report;
        }
        let chunk_size = x_tuples.len().div_ceil(workers);
        let chunks: Vec<&[Vec<usize>]> = x_tuples.chunks(chunk_size).collect();
        let results: Vec<Vec<Violation>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| scope.spawn(move || sweep(chunk)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for part in results {
            report.violations.extend(part);
        }
        report
    }

    /// Span of all brackets with the i-th argument drawn from `slots[i]`.
    pub fn bracket_span(&self, slots: &[Subspace]) -> Result<Subspace> {
        let n = self.arity();
        let d = self.dim();
        if slots.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} slots for arity {}",
                slots.len(),
                n
            )));
        }
        for s in slots {
            if s.ambient_dim() != d {
                return Err(Error::DimensionMismatch(format!(
                    "slot of ambient dimension {} in dimension {}",
                    s.ambient_dim(),
                    d
                )));
            }
        }
        // Group runs of identical subspaces: within a run, antisymmetry lets
        // us take strictly increasing basis-row choices only.
        let mut runs: Vec<(&Subspace, usize)> = Vec::new();
        for s in slots {
            match runs.last_mut() {
                Some((prev, count)) if *prev == s => *count += 1,
                _ => runs.push((s, 1)),
            }
        }
        let mut per_run_choices: Vec<Vec<Vec<usize>>> = Vec::new();
        for &(s, count) in &runs {
            let choices: Vec<Vec<usize>> = (0..s.dim()).combinations(count).collect();
            if choices.is_empty() {
                return Ok(Subspace::zero(d));
            }
            per_run_choices.push(choices);
        }
        let mut results: Vec<Vector> = Vec::new();
        let mut args: Vec<Vector> = Vec::with_capacity(n);
        for assignment in per_run_choices.iter().multi_cartesian_product() {
            args.clear();
            for (run_idx, rows) in assignment.iter().enumerate() {
                let basis = runs[run_idx].0.basis_rows();
                for &r in rows.iter() {
                    args.push(basis.row(r));
                }
            }
            let value = self.bracket(&args)?;
            if !value.is_zero() {
                results.push(value);
            }
        }
        if results.is_empty() {
            return Ok(Subspace::zero(d));
        }
        Ok(Subspace::from_rows(Mat::from_rows(results)))
    }

    /// Span of all brackets: the derived algebra.
    pub fn derived_algebra(&self) -> Subspace {
        let mut span = Vec::new();
        for (_, value) in self.tensor.entries() {
            span.push(value.clone());
        }
        if span.is_empty() {
            return Subspace::zero(self.dim());
        }
        Subspace::from_rows(Mat::from_rows(span))
    }

    /// Iterated self-brackets of `start` until stabilization.
    pub fn derived_series(&self, start: &Subspace) -> Result<Vec<Subspace>> {
        let n = self.arity();
        let mut series = vec![start.clone()];
        loop {
            let last = series.last().unwrap();
            let slots = vec![last.clone(); n];
            let next = self.bracket_span(&slots)?;
            if &next == last {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    /// Whether the derived series of `start` reaches zero. Meaningful when
    /// `start` is an ideal; callers check that themselves when needed.
    pub fn is_solvable(&self, start: &Subspace) -> Result<bool> {
        Ok(self.derived_series(start)?.last().unwrap().is_zero())
    }

    /// Elements annihilating `w` in every bracket with `w` and anything:
    /// the null space of the stacked linear maps `x -> [x, w, e_B]`.
    pub fn centralizer(&self, w: &Subspace) -> Result<Subspace> {
        let n = self.arity();
        let d = self.dim();
        if w.ambient_dim() != d {
            return Err(Error::DimensionMismatch(format!(
                "centralizer of ambient dimension {} in dimension {}",
                w.ambient_dim(),
                d
            )));
        }
        let mut rows: Vec<Vector> = Vec::new();
        for wv in w.basis_vectors() {
            for fill in index_tuples(d, n - 2) {
                // columns of the map x -> [x, wv, e_fill]
                let cols: Vec<Vector> = (1..=d)
                    .map(|j| self.bracket_mixed(&[j], &wv, &fill))
                    .collect();
                for out in 0..d {
                    let row =
                        Vector::from_entries(cols.iter().map(|c| c[out].clone()).collect());
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(d));
        }
        Ok(crate::subspace::nullspace(&Mat::from_rows(rows)))
    }

    /// Elements bracketing to zero with everything.
    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full_space())
            .expect("full space has matching ambient dimension")
    }

    pub fn is_ideal(&self, w: &Subspace) -> Result<bool> {
        let mut slots = vec![self.full_space(); self.arity()];
        slots[0] = w.clone();
        let image = self.bracket_span(&slots)?;
        w.contains_subspace(&image)
    }

    /// An ideal whose brackets with itself and anything vanish.
    pub fn is_abelian_ideal(&self, w: &Subspace) -> Result<bool> {
        if !self.is_ideal(w)? {
            return Ok(false);
        }
        let mut slots = vec![self.full_space(); self.arity()];
        slots[0] = w.clone();
        slots[1] = w.clone();
        Ok(self.bracket_span(&slots)?.is_zero())
    }

    pub fn is_subalgebra(&self, w: &Subspace) -> Result<bool> {
        let slots = vec![w.clone(); self.arity()];
        let image = self.bracket_span(&slots)?;
        w.contains_subspace(&image)
    }

    /// Quotient by an ideal, with the coordinate projection onto the
    /// complement basis. The quotient basis is the set of standard basis
    /// vectors at the ideal's non-pivot columns, in increasing order.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Mat)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let d = self.dim();
        let free = ideal.free_cols1();
        let m = free.len();
        let pivots = ideal.pivot_cols1();
        let basis = ideal.basis_rows();

        // projection: subtract the pivot components along the ideal's RREF
        // rows, then read off the free coordinates
        let mut proj = Mat::zero(m, d);
        for (a, &q) in free.iter().enumerate() {
            proj[(a, q - 1)] = Scalar::one();
            for (t, &p) in pivots.iter().enumerate() {
                proj[(a, p - 1)] = -&basis[(t, q - 1)];
            }
        }

        let mut tensor = StructureTensor::new(self.arity(), m)?;
        for rows in index_tuples(m, self.arity()) {
            let idxs: Vec<usize> = rows.iter().map(|&a| free[a - 1]).collect();
            let value = self.bracket_indices(&idxs);
            if value.is_zero() {
                continue;
            }
            tensor.insert(rows, proj.mul_vec(&value))?;
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| free.iter().map(|&q| l[q - 1].clone()).collect());
        let mut quotient = Algebra::new(tensor);
        quotient.labels = labels;
        Ok((quotient, proj))
    }

    /// The bracket re-expressed on a subalgebra's canonical basis.
    pub fn restrict(&self, w: &Subspace) -> Result<Algebra> {
        if !self.is_subalgebra(w)? {
            return Err(Error::NotSubalgebra);
        }
        let m = w.dim();
        let rows = w.basis_vectors();
        let mut tensor = StructureTensor::new(self.arity(), m)?;
        for tuple in index_tuples(m, self.arity()) {
            let args: Vec<Vector> = tuple.iter().map(|&r| rows[r - 1].clone()).collect();
            let value = self.bracket(&args)?;
            if value.is_zero() {
                continue;
            }
            let coords = w.coordinates(&value).map_err(|_| Error::NotSubalgebra)?;
            tensor.insert(tuple, coords)?;
        }
        Ok(Algebra::new(tensor))
    }

    /// Relabels basis vectors by a permutation: new index of old `i` is
    /// `perm[i-1]`. Structure constants and labels are transported.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<Algebra> {
        let d = self.dim();
        let mut seen = vec![false; d];
        if perm.len() != d {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        for &p in perm {
            if p < 1 || p > d || seen[p - 1] {
                return Err(Error::InvalidParameter("not a permutation of 1..=dim".into()));
            }
            seen[p - 1] = true;
        }
        let mut tensor = StructureTensor::new(self.arity(), d)?;
        for (tuple, value) in self.tensor.entries() {
            let mapped: Vec<usize> = tuple.iter().map(|&i| perm[i - 1]).collect();
            let (negative, sorted) =
                sign_and_sort(&mapped).expect("permutation preserves distinctness");
            let mut entries = vec![Scalar::zero(); d];
            for j in 1..=d {
                entries[perm[j - 1] - 1] = value.coord1(j).clone();
            }
            let moved = Vector::from_entries(entries);
            tensor.insert(sorted, if negative { -&moved } else { moved })?;
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); d];
            for j in 1..=d {
                out[perm[j - 1] - 1] = l[j - 1].clone();
            }
            out
        });
        let mut out = Algebra::new(tensor);
        out.labels = labels;
        Ok(out)
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Algebra(arity {}, dim {})", self.arity(), self.dim())?;
        for (tuple, value) in self.tensor.entries() {
            writeln!(f, "  {tuple:?} -> {value:?}")?;
        }
        Ok(())
    }
}
