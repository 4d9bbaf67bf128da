//! Bilinear forms on n-Lie algebras and the structure theory they carry:
//! invariance checking, orthogonal complements, isotropy, the invariant-form
//! solver, metric quotients by isotropic ideals, the orthogonal center
//! split, arity reduction along dual isotropic pairs, and verification of
//! annotated Levi decompositions.

use crate::error::{Error, Result};
use crate::linalg::{Mat, Vector};
use crate::nlie::{index_tuples, Algebra, StructureTensor};
use crate::report::{Violation, ViolationKind, ViolationReport};
use crate::scalar::Scalar;
use crate::subspace::{nullspace, Subspace};

/// A bilinear form given by its Gram matrix on the standard basis.
///
/// Construction only requires squareness; symmetry and nondegeneracy are
/// checked, not assumed, so broken inputs can be held and reported on.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    gram: Mat,
}

impl Form {
    pub fn new(gram: Mat) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::DimensionMismatch(format!(
                "gram matrix is {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(Form { gram })
    }

    pub fn identity(dim: usize) -> Self {
        Form {
            gram: Mat::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.is_symmetric()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    /// `B(u, v)`.
    pub fn pairing(&self, u: &Vector, v: &Vector) -> Scalar {
        u.dot(&self.gram.mul_vec(v))
    }

    /// `B(e_p, e_q)` with 1-based indices.
    pub fn pairing_basis(&self, p: usize, q: usize) -> &Scalar {
        &self.gram[(p - 1, q - 1)]
    }

    /// `{ x : B(w, x) = 0 for all w in W }`: the null space of
    /// `basis_rows(W) . gram`.
    pub fn orthogonal_complement(&self, w: &Subspace) -> Result<Subspace> {
        self.check_dim(w)?;
        if w.is_zero() {
            return Ok(Subspace::full(self.dim()));
        }
        Ok(nullspace(&w.basis_rows().mul_mat(&self.gram)))
    }

    /// The Gram matrix of the form restricted to `W`'s canonical basis.
    pub fn restricted_gram(&self, w: &Subspace) -> Result<Mat> {
        self.check_dim(w)?;
        let rows = w.basis_rows();
        Ok(rows.mul_mat(&self.gram).mul_mat(&rows.transpose()))
    }

    /// `W` is contained in its own orthogonal complement, equivalently the
    /// restricted Gram matrix vanishes.
    pub fn is_isotropic(&self, w: &Subspace) -> Result<bool> {
        Ok(self.restricted_gram(w)?.is_zero())
    }

    pub fn is_coisotropic(&self, w: &Subspace) -> Result<bool> {
        let perp = self.orthogonal_complement(w)?;
        w.contains_subspace(&perp)
    }

    /// `W` meets its orthogonal complement trivially.
    pub fn is_nondegenerate_subspace(&self, w: &Subspace) -> Result<bool> {
        Ok(self.form_radical(w)?.is_zero())
    }

    /// `W` intersected with its orthogonal complement.
    pub fn form_radical(&self, w: &Subspace) -> Result<Subspace> {
        let perp = self.orthogonal_complement(w)?;
        w.intersect(&perp)
    }

    /// Transports the form along a basis relabeling.
    pub fn permute_basis(&self, perm: &[usize]) -> Form {
        let d = self.dim();
        let mut gram = Mat::zero(d, d);
        for p in 1..=d {
            for q in 1..=d {
                gram[(perm[p - 1] - 1, perm[q - 1] - 1)] = self.gram[(p - 1, q - 1)].clone();
            }
        }
        Form { gram }
    }

    fn check_dim(&self, w: &Subspace) -> Result<()> {
        if w.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of ambient dimension {} under a form of dimension {}",
                w.ambient_dim(),
                self.dim()
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Form{:?}", self.gram)
    }
}

/// Reports asymmetric Gram entries.
pub fn check_symmetry(form: &Form) -> ViolationReport {
    let mut report = ViolationReport::new();
    let d = form.dim();
    for p in 1..=d {
        for q in p + 1..=d {
            let a = form.pairing_basis(p, q);
            let b = form.pairing_basis(q, p);
            if a != b {
                report.push(
                    Violation::new(ViolationKind::Symmetry)
                        .with_pair(p, q)
                        .with_residual_scalar(a - b),
                );
            }
        }
    }
    report
}

/// Reports a rank defect of the Gram matrix.
pub fn check_nondegeneracy(form: &Form) -> ViolationReport {
    let mut report = ViolationReport::new();
    let rank = form.rank();
    if rank < form.dim() {
        report.push(Violation::new(ViolationKind::Nondegeneracy).with_detail(format!(
            "gram matrix has rank {} in dimension {}",
            rank,
            form.dim()
        )));
    }
    report
}

/// Checks the bracket/form compatibility law on every basis tuple: for each
/// strictly increasing (n-1)-tuple `T` and basis pair `p <= q`, the residual
/// `B([e_T, e_p], e_q) + B([e_T, e_q], e_p)` must vanish.
///
/// Passing on basis tuples implies the law for all vectors.
pub fn check_invariance(algebra: &Algebra, form: &Form) -> Result<ViolationReport> {
    if algebra.dim() != form.dim() {
        return Err(Error::DimensionMismatch(format!(
            "algebra of dimension {} with form of dimension {}",
            algebra.dim(),
            form.dim()
        )));
    }
    let d = algebra.dim();
    let n = algebra.arity();
    let mut report = ViolationReport::new();
    let mut idxs = Vec::with_capacity(n);
    for t in index_tuples(d, n - 1) {
        let images: Vec<Vector> = (1..=d)
            .map(|p| {
                idxs.clear();
                idxs.extend_from_slice(&t);
                idxs.push(p);
                algebra.bracket_indices(&idxs)
            })
            .collect();
        for p in 1..=d {
            for q in p..=d {
                if images[p - 1].is_zero() && images[q - 1].is_zero() {
                    continue;
                }
                let mut residual = form.pairing(&images[p - 1], &Vector::unit(d, q));
                residual += &form.pairing(&images[q - 1], &Vector::unit(d, p));
                if !residual.is_zero() {
                    report.push(
                        Violation::new(ViolationKind::Invariance)
                            .with_x_tuple(t.clone())
                            .with_pair(p, q)
                            .with_residual_scalar(residual),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Outcome flags of the metric-algebra checkers. `None` means not yet run;
/// flags are set only by [`MetricAlgebra::verify`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerificationStatus {
    pub fundamental_identity_ok: Option<bool>,
    /// Invariance of the form, including Gram symmetry.
    pub invariance_ok: Option<bool>,
    pub nondegenerate_ok: Option<bool>,
}

impl VerificationStatus {
    pub fn all_ok(&self) -> bool {
        self.fundamental_identity_ok == Some(true)
            && self.invariance_ok == Some(true)
            && self.nondegenerate_ok == Some(true)
    }
}

/// An n-Lie algebra paired with a candidate metric.
#[derive(Clone)]
pub struct MetricAlgebra {
    algebra: Algebra,
    form: Form,
    status: VerificationStatus,
}

impl MetricAlgebra {
    pub fn new(algebra: Algebra, form: Form) -> Result<Self> {
        if algebra.dim() != form.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dimension {} with form of dimension {}",
                algebra.dim(),
                form.dim()
            )));
        }
        Ok(MetricAlgebra {
            algebra,
            form,
            status: VerificationStatus::default(),
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn status(&self) -> &VerificationStatus {
        &self.status
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn arity(&self) -> usize {
        self.algebra.arity()
    }

    /// Runs all checkers, records the flags, and returns every witness.
    pub fn verify(&mut self) -> ViolationReport {
        self.verify_with_workers(1)
    }

    pub fn verify_with_workers(&mut self, workers: usize) -> ViolationReport {
        let fi = self.algebra.check_fundamental_identity_with_workers(workers);
        let mut inv = check_symmetry(&self.form);
        inv.merge(
            check_invariance(&self.algebra, &self.form)
                .expect("dimensions agree by construction"),
        );
        let nd = check_nondegeneracy(&self.form);
        self.status.fundamental_identity_ok = Some(fi.passed());
        self.status.invariance_ok = Some(inv.passed());
        self.status.nondegenerate_ok = Some(nd.passed());
        let mut all = fi;
        all.merge(inv);
        all.merge(nd);
        all
    }

    /// Verifies and returns self, or the first reason verification failed.
    pub fn into_verified(mut self) -> Result<Self> {
        let report = self.verify();
        if !report.passed() {
            let first = &report.violations[0];
            return Err(Error::VerificationFailed(format!(
                "{} ({} witnesses)",
                first.kind.label(),
                report.len()
            )));
        }
        Ok(self)
    }

    pub fn require_verified(&self) -> Result<()> {
        if self.status.all_ok() {
            Ok(())
        } else {
            Err(Error::Unverified)
        }
    }

    /// Relabels basis vectors; structure constants, labels, and Gram matrix
    /// are transported. Verification flags carry over unchanged.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<MetricAlgebra> {
        let algebra = self.algebra.permute_basis(perm)?;
        let form = self.form.permute_basis(perm);
        Ok(MetricAlgebra {
            algebra,
            form,
            status: self.status,
        })
    }
}

impl std::fmt::Debug for MetricAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Metric{:?}{:?}", self.algebra, self.form)
    }
}

/// Index of the unknown `B(e_i, e_j)`, `i <= j` 1-based, in the packed
/// symmetric coordinate vector.
fn sym_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= d);
    // entries (1,1)..(1,d), (2,2)..(2,d), ...
    let row_start: usize = (0..i - 1).map(|r| d - r).sum();
    row_start + (j - i)
}

/// Solves for all symmetric bilinear forms compatible with the bracket.
///
/// Assembles the invariance residuals over all basis tuples as linear
/// constraints in the d(d+1)/2 packed unknowns and returns the canonical
/// basis of the solution space. No nondegeneracy claim is made about
/// individual basis elements; the returned dimension is the dimension of
/// the full solution space.
pub fn invariant_form_space(algebra: &Algebra) -> (Vec<Form>, usize) {
    let d = algebra.dim();
    let n = algebra.arity();
    let unknowns = d * (d + 1) / 2;
    let mut rows: Vec<Vector> = Vec::new();
    let mut idxs = Vec::with_capacity(n);
    for t in index_tuples(d, n - 1) {
        let images: Vec<Vector> = (1..=d)
            .map(|p| {
                idxs.clear();
                idxs.extend_from_slice(&t);
                idxs.push(p);
                algebra.bracket_indices(&idxs)
            })
            .collect();
        for p in 1..=d {
            for q in p..=d {
                if images[p - 1].is_zero() && images[q - 1].is_zero() {
                    continue;
                }
                let mut row = vec![Scalar::zero(); unknowns];
                for j in 1..=d {
                    let c = images[p - 1].coord1(j);
                    if !c.is_zero() {
                        let k = sym_index(d, j.min(q), j.max(q));
                        row[k] += c;
                    }
                    let c = images[q - 1].coord1(j);
                    if !c.is_zero() {
                        let k = sym_index(d, j.min(p), j.max(p));
                        row[k] += c;
                    }
                }
                let row = Vector::from_entries(row);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    let solution = if rows.is_empty() {
        Subspace::full(unknowns)
    } else {
        nullspace(&Mat::from_rows(rows))
    };
    let mut basis = Vec::with_capacity(solution.dim());
    for packed in solution.basis_vectors() {
        let mut gram = Mat::zero(d, d);
        for i in 1..=d {
            for j in i..=d {
                let v = packed[sym_index(d, i, j)].clone();
                gram[(i - 1, j - 1)] = v.clone();
                gram[(j - 1, i - 1)] = v;
            }
        }
        basis.push(Form::new(gram).expect("gram is square"));
    }
    let dim = basis.len();
    (basis, dim)
}

/// Metric quotient by an isotropic ideal: the induced algebra and form on
/// (a canonical transversal of) `I-perp / I`.
///
/// The transversal is `complement(I)` intersected with `I-perp`, computed
/// canonically. When `I = I-perp` the quotient is the empty metric algebra.
pub fn metric_quotient(ma: &MetricAlgebra, ideal: &Subspace) -> Result<MetricAlgebra> {
    ma.require_verified()?;
    let algebra = ma.algebra();
    let form = ma.form();
    if !algebra.is_ideal(ideal)? {
        return Err(Error::NotIdeal);
    }
    if !form.is_isotropic(ideal)? {
        return Err(Error::NotIsotropic);
    }
    if ideal.is_zero() {
        return Ok(ma.clone());
    }
    let perp = form.orthogonal_complement(ideal)?;
    let transversal = ideal.complement().intersect(&perp)?;
    let m = transversal.dim();
    let n = algebra.arity();

    let mut tensor = StructureTensor::new(n, m)?;
    if m > 0 {
        // columns of the coordinate solve: ideal basis then transversal basis
        let mut cols: Vec<Vector> = ideal.basis_vectors();
        cols.extend(transversal.basis_vectors());
        let solve_mat = Mat::from_rows(cols).transpose();
        let t_rows = transversal.basis_vectors();
        for tuple in index_tuples(m, n) {
            let args: Vec<Vector> = tuple.iter().map(|&r| t_rows[r - 1].clone()).collect();
            let value = algebra.bracket(&args)?;
            if value.is_zero() {
                continue;
            }
            // value lies in I-perp = I (+) transversal; reduce mod I
            let coords = solve_mat.solve(&value)?;
            let reduced = Vector::from_entries(
                coords.entries()[ideal.dim()..].to_vec(),
            );
            tensor.insert(tuple, reduced)?;
        }
    }
    let gram = form.restricted_gram(&transversal)?;
    let quotient = MetricAlgebra::new(Algebra::new(tensor), Form::new(gram)?)?;
    quotient.into_verified().map_err(|_| {
        Error::VerificationFailed("metric quotient failed re-verification".into())
    })
}

/// Splits off the nondegenerate part of the center: returns `(C1, g1)` with
/// `g = C1 (+) g1` an orthogonal direct sum of ideals, `C1` a nondegenerate
/// central complement of `C(g) \cap g^1`, and the center of `g1` isotropic.
///
/// `C1` is grown greedily over the center's canonical basis; its
/// nondegeneracy is verified post hoc rather than assumed.
pub fn ortho_split(ma: &MetricAlgebra) -> Result<(Subspace, Subspace)> {
    ma.require_verified()?;
    let algebra = ma.algebra();
    let form = ma.form();
    let d = ma.dim();
    let center = algebra.center();
    let derived = algebra.derived_algebra();
    let k = center.intersect(&derived)?;

    let mut grown = k.clone();
    let mut chosen: Vec<Vector> = Vec::new();
    for v in center.basis_vectors() {
        if !grown.contains(&v)? {
            chosen.push(v.clone());
            grown = grown.sum(&Subspace::span(&[v])?)?;
        }
    }
    let c1 = if chosen.is_empty() {
        Subspace::zero(d)
    } else {
        Subspace::span(&chosen)?
    };
    let g1 = form.orthogonal_complement(&c1)?;

    // postconditions, all exact
    let ok = form.is_nondegenerate_subspace(&c1)?
        && form.is_nondegenerate_subspace(&g1)?
        && algebra.is_ideal(&c1)?
        && algebra.is_ideal(&g1)?
        && c1.sum(&g1)? == Subspace::full(d)
        && c1.intersect(&g1)?.is_zero();
    if !ok {
        return Err(Error::VerificationFailed(
            "orthogonal center split postconditions failed".into(),
        ));
    }
    let g1_algebra = algebra.restrict(&g1)?;
    let g1_form = Form::new(form.restricted_gram(&g1)?)?;
    if !g1_form.is_isotropic(&g1_algebra.center())? {
        return Err(Error::VerificationFailed(
            "center of the split complement is not isotropic".into(),
        ));
    }
    Ok((c1, g1))
}

/// A dual family for an isotropic subspace: vectors `e'_1..e'_l` with
/// `B(c_r, e'_s) = delta_rs` against the canonical basis of `C` and
/// `B(e'_r, e'_s) = 0`, built by hyperbolic-pair completion.
pub fn dual_isotropic_basis(ma: &MetricAlgebra, c: &Subspace) -> Result<Vec<Vector>> {
    let form = ma.form();
    if !form.is_isotropic(c)? {
        return Err(Error::NotIsotropic);
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let l = c.dim();
    if l == 0 {
        return Ok(Vec::new());
    }
    // raw duals: B(c_r, f_s) = delta_rs, canonical particular solutions
    let pairing_rows = c.basis_rows().mul_mat(form.gram());
    let raw: Vec<Vector> = (1..=l)
        .map(|s| pairing_rows.solve(&Vector::unit(l, s)))
        .collect::<Result<_>>()?;
    // isotropy correction: subtract half the mutual pairings back along C;
    // this leaves the delta pairings intact because C is isotropic
    let half = Scalar::ratio(1, 2).expect("nonzero denominator");
    let c_rows = c.basis_vectors();
    let duals: Vec<Vector> = (0..l)
        .map(|s| {
            let mut v = raw[s].clone();
            for (r, c_row) in c_rows.iter().enumerate() {
                let coeff = -&(&form.pairing(&raw[r], &raw[s]) * &half);
                v.axpy(&coeff, c_row);
            }
            v
        })
        .collect();
    for (r, cr) in c_rows.iter().enumerate() {
        for (s, dual) in duals.iter().enumerate() {
            let expected = if r == s { Scalar::one() } else { Scalar::zero() };
            if form.pairing(cr, dual) != expected {
                return Err(Error::VerificationFailed("dual pairing drifted".into()));
            }
        }
    }
    for a in &duals {
        for b in &duals {
            if !form.pairing(a, b).is_zero() {
                return Err(Error::VerificationFailed("dual side is not isotropic".into()));
            }
        }
    }
    Ok(duals)
}

/// Reduces arity by bracketing in `l` dual partners of the first `l`
/// canonical central basis vectors: the arity-(n-l) bracket
/// `[x_1..x_{n-l}]_0 = [x_1..x_{n-l}, e'_1..e'_l]` on the same space with
/// the same form. The result is re-verified and must pass all checks.
pub fn reduce_by_center(ma: &MetricAlgebra, l: usize) -> Result<MetricAlgebra> {
    ma.require_verified()?;
    if l == 0 {
        return Ok(ma.clone());
    }
    let algebra = ma.algebra();
    let n = algebra.arity();
    let d = algebra.dim();
    if n < l + 2 {
        return Err(Error::InvalidParameter(format!(
            "reduction by {l} would leave arity {} < 2",
            n as isize - l as isize
        )));
    }
    let center = algebra.center();
    if center.dim() < l {
        return Err(Error::InvalidParameter(format!(
            "center has dimension {} < {l}",
            center.dim()
        )));
    }
    let first_rows: Vec<Vector> = center.basis_vectors().into_iter().take(l).collect();
    let z = Subspace::span(&first_rows)?;
    if !ma.form().is_isotropic(&z)? {
        return Err(Error::NotIsotropic);
    }
    let duals = dual_isotropic_basis(ma, &z)?;

    let mut tensor = StructureTensor::new(n - l, d)?;
    for tuple in index_tuples(d, n - l) {
        let mut args: Vec<Vector> = tuple.iter().map(|&i| Vector::unit(d, i)).collect();
        args.extend(duals.iter().cloned());
        let value = algebra.bracket(&args)?;
        if value.is_zero() {
            continue;
        }
        tensor.insert(tuple, value)?;
    }
    let mut reduced_algebra = Algebra::new(tensor);
    reduced_algebra.set_labels(algebra.labels().map(|l| l.to_vec()))?;
    let reduced = MetricAlgebra::new(reduced_algebra, ma.form().clone())?;
    reduced.into_verified().map_err(|_| {
        Error::VerificationFailed("arity reduction failed re-verification".into())
    })
}

/// A claimed Levi decomposition: simple factors, solvable radical, and
/// optionally an isotropic ideal to test against the radical sandwich.
#[derive(Clone, Debug)]
pub struct LeviAnnotation {
    pub s_parts: Vec<Subspace>,
    pub r: Subspace,
    pub iso_ideal: Option<Subspace>,
}

/// Verifies the necessary conditions an annotated Levi decomposition of a
/// metric n-Lie algebra must satisfy; every failure is reported separately.
pub fn verify_levi(ma: &MetricAlgebra, ann: &LeviAnnotation) -> Result<ViolationReport> {
    let algebra = ma.algebra();
    let form = ma.form();
    let n = algebra.arity();
    let d = algebra.dim();
    let full = Subspace::full(d);
    let mut report = ViolationReport::new();

    // (a) each factor is a perfect subalgebra of dimension n+1, hence a copy
    // of the unique simple algebra
    for (idx, s) in ann.s_parts.iter().enumerate() {
        if s.dim() != n + 1 {
            report.push(
                Violation::new(ViolationKind::LeviSimpleFactor).with_detail(format!(
                    "factor {} has dimension {}, expected {}",
                    idx + 1,
                    s.dim(),
                    n + 1
                )),
            );
            continue;
        }
        if !algebra.is_subalgebra(s)? {
            report.push(
                Violation::new(ViolationKind::LeviSimpleFactor)
                    .with_detail(format!("factor {} is not a subalgebra", idx + 1)),
            );
            continue;
        }
        let restricted = algebra.restrict(s)?;
        if restricted.derived_algebra() != Subspace::full(s.dim()) {
            report.push(
                Violation::new(ViolationKind::LeviSimpleFactor)
                    .with_detail(format!("factor {} is not perfect", idx + 1)),
            );
        }
    }

    // (b) pairwise bracket-orthogonality and directness of s (+) r = g
    for i in 0..ann.s_parts.len() {
        for j in i + 1..ann.s_parts.len() {
            let mut slots = vec![full.clone(); n];
            slots[0] = ann.s_parts[i].clone();
            slots[1] = ann.s_parts[j].clone();
            if !algebra.bracket_span(&slots)?.is_zero() {
                report.push(
                    Violation::new(ViolationKind::LeviSplit).with_detail(format!(
                        "factors {} and {} have nonzero mutual brackets",
                        i + 1,
                        j + 1
                    )),
                );
            }
        }
    }
    let mut semisimple = Subspace::zero(d);
    for s in &ann.s_parts {
        semisimple = semisimple.sum(s)?;
    }
    if semisimple.dim() != ann.s_parts.iter().map(Subspace::dim).sum::<usize>() {
        report.push(
            Violation::new(ViolationKind::LeviSplit)
                .with_detail("sum of simple factors is not direct"),
        );
    }
    if !semisimple.intersect(&ann.r)?.is_zero() {
        report.push(
            Violation::new(ViolationKind::LeviSplit)
                .with_detail("semisimple part meets the radical"),
        );
    }
    if semisimple.sum(&ann.r)? != full {
        report.push(
            Violation::new(ViolationKind::LeviSplit)
                .with_detail("semisimple part plus radical is not the whole algebra"),
        );
    }

    // (c) the radical is a solvable ideal
    if !algebra.is_ideal(&ann.r)? {
        report.push(Violation::new(ViolationKind::LeviRadical).with_detail("radical is not an ideal"));
    } else if !algebra.is_solvable(&ann.r)? {
        report.push(Violation::new(ViolationKind::LeviRadical).with_detail("radical is not solvable"));
    }

    // (d) centralizer identities against the radical's orthogonal complement
    let r_perp = form.orthogonal_complement(&ann.r)?;
    let centralizer = algebra.centralizer(&ann.r)?;
    let expected = algebra.center().sum(&r_perp)?;
    if centralizer != expected {
        report.push(
            Violation::new(ViolationKind::LeviCentralizer).with_detail(
                "centralizer of the radical differs from center + radical-perp",
            ),
        );
    }
    if !semisimple.is_zero() || !r_perp.is_zero() {
        let mut slots = vec![semisimple.clone(); n];
        slots[n - 1] = r_perp.clone();
        if algebra.bracket_span(&slots)? != r_perp {
            report.push(
                Violation::new(ViolationKind::LeviCentralizer).with_detail(
                    "brackets of the semisimple part against radical-perp do not fill it",
                ),
            );
        }
    }

    // (e) the claimed isotropic ideal is sandwiched between r cap r-perp and r
    if let Some(iso) = &ann.iso_ideal {
        if !algebra.is_ideal(iso)? {
            report.push(
                Violation::new(ViolationKind::LeviIsotropicIdeal)
                    .with_detail("claimed ideal is not an ideal"),
            );
        }
        if !form.is_isotropic(iso)? {
            report.push(
                Violation::new(ViolationKind::LeviIsotropicIdeal)
                    .with_detail("claimed ideal is not isotropic"),
            );
        }
        let core = ann.r.intersect(&r_perp)?;
        if !iso.contains_subspace(&core)? {
            report.push(
                Violation::new(ViolationKind::LeviIsotropicIdeal)
                    .with_detail("ideal does not contain radical cap radical-perp"),
            );
        }
        if !ann.r.contains_subspace(iso)? {
            report.push(
                Violation::new(ViolationKind::LeviIsotropicIdeal)
                    .with_detail("ideal is not contained in the radical"),
            );
        }
    }

    // (f) an isotropic radical equals its own orthogonal complement
    if form.is_isotropic(&ann.r)? && ann.r != r_perp {
        report.push(
            Violation::new(ViolationKind::LeviSelfDualRadical)
                .with_detail("isotropic radical differs from its orthogonal complement"),
        );
    }

    Ok(report)
}
