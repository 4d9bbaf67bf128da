//! Deterministic builders for the metric n-Lie algebra families used
//! throughout: the abelian algebras, the unique simple algebra, the
//! double of the simple algebra by its regular module, and the three
//! small-corank families with isotropic, nondegenerate, and mixed centers.
//!
//! Structure-constant signs are pinned by the fundamental identity: the
//! axiom sweeps in this crate's tests fail on any single sign flip.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Vector};
use crate::metric::{Form, MetricAlgebra};
use crate::nlie::{Algebra, StructureTensor};
use crate::scalar::Scalar;

/// Which builder a parameter set addresses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Abelian,
    Simple,
    G0,
    Case1,
    Case2,
    Case3,
    OrthoSum,
}

/// Parameters of a catalog family, as accepted by the CLI `build` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Scalar>,
}

/// Dispatches to the family builders. `OrthoSum` is composed from already
/// built algebras and has no parameter form; see [`ortho_direct_sum`].
pub fn build_family(params: &FamilyParams) -> Result<MetricAlgebra> {
    let n = params.n;
    match params.family {
        Family::Abelian => {
            let d = params
                .d
                .ok_or_else(|| Error::InvalidParameter("abelian needs d".into()))?;
            build_abelian(n, d, None)
        }
        Family::Simple => {
            let c = params
                .c
                .clone()
                .ok_or_else(|| Error::InvalidParameter("simple needs c".into()))?;
            build_simple(n, c)
        }
        Family::G0 => {
            let lambda = params.lambda.clone().unwrap_or_else(Scalar::one);
            let mu = params.mu.clone().unwrap_or_else(Scalar::one);
            build_g0(n, lambda, mu)
        }
        Family::Case1 => {
            let k = params
                .k
                .ok_or_else(|| Error::InvalidParameter("case1 needs k".into()))?;
            let a = params
                .a
                .clone()
                .ok_or_else(|| Error::InvalidParameter("case1 needs a".into()))?;
            build_case1(n, k, a)
        }
        Family::Case2 => {
            let k = params
                .k
                .ok_or_else(|| Error::InvalidParameter("case2 needs k".into()))?;
            let c = params
                .c
                .clone()
                .ok_or_else(|| Error::InvalidParameter("case2 needs c".into()))?;
            build_case2(n, k, c)
        }
        Family::Case3 => {
            let k = params
                .k
                .ok_or_else(|| Error::InvalidParameter("case3 needs k".into()))?;
            let l = params
                .l
                .ok_or_else(|| Error::InvalidParameter("case3 needs l".into()))?;
            let a = params
                .a
                .clone()
                .ok_or_else(|| Error::InvalidParameter("case3 needs a".into()))?;
            build_case3(n, k, l, a)
        }
        Family::OrthoSum => Err(Error::InvalidParameter(
            "ortho_sum is composed from built algebras, not parameters".into(),
        )),
    }
}

fn check_arity(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("arity {n} < 2")));
    }
    Ok(())
}

fn labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// The abelian metric algebra: empty bracket table, any nondegenerate
/// symmetric form (identity by default).
pub fn build_abelian(n: usize, d: usize, gram: Option<Mat>) -> Result<MetricAlgebra> {
    check_arity(n)?;
    let gram = gram.unwrap_or_else(|| Mat::identity(d));
    let form = Form::new(gram)?;
    if form.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "gram of dimension {} for abelian algebra of dimension {d}",
            form.dim()
        )));
    }
    if !form.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let mut algebra = Algebra::abelian(n, d)?;
    algebra.set_labels(Some(labels("e", d)))?;
    MetricAlgebra::new(algebra, form)
}

/// The unique simple n-Lie algebra: dimension n+1, each bracket omits one
/// basis vector and returns it with alternating sign, identity form.
pub fn build_simple(n: usize, c: Scalar) -> Result<MetricAlgebra> {
    check_arity(n)?;
    if c.is_zero() {
        return Err(Error::InvalidParameter("simple algebra needs c != 0".into()));
    }
    let d = n + 1;
    let mut tensor = StructureTensor::new(n, d)?;
    for r in 1..=d {
        let tuple: Vec<usize> = (1..=d).filter(|&i| i != r).collect();
        let sign_positive = (r + 1).is_multiple_of(2);
        let value = Vector::unit(d, r).scale(&if sign_positive { c.clone() } else { -&c });
        tensor.insert(tuple, value)?;
    }
    let algebra = Algebra::with_labels(tensor, labels("e", d))?;
    MetricAlgebra::new(algebra, Form::identity(d))
}

/// The double of the simple algebra by its regular module: generators
/// `x_1..x_{n+1}` spanning a copy of the simple algebra, `y_1..y_{n+1}`
/// spanning an abelian ideal on which the `x` side acts as on itself, and
/// the two-parameter pairing `B(x_i,x_j) = lambda delta`,
/// `B(x_i,y_j) = mu delta`, `B(y_i,y_j) = 0`.
pub fn build_g0(n: usize, lambda: Scalar, mu: Scalar) -> Result<MetricAlgebra> {
    check_arity(n)?;
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::InvalidParameter("g0 needs lambda * mu != 0".into()));
    }
    let m = n + 1;
    let d = 2 * m;
    let mut tensor = StructureTensor::new(n, d)?;
    // pure x side: omit x_i, produce (-1)^i x_i
    for i in 1..=m {
        let tuple: Vec<usize> = (1..=m).filter(|&t| t != i).collect();
        let value = signed_unit(d, i, i.is_multiple_of(2));
        tensor.insert(tuple, value)?;
    }
    // mixed side: for each omitted pair {p, q} of x's, the bracket of the
    // remaining x-run with y_arg is the regular-module transport of the
    // same bracket with x_arg in place of y_arg
    for p in 1..=m {
        for q in p + 1..=m {
            let run: Vec<usize> = (1..=m).filter(|&t| t != p && t != q).collect();
            for (arg, other) in [(q, p), (p, q)] {
                let hops = run.iter().filter(|&&t| t > arg).count();
                let mut tuple = run.clone();
                tuple.push(m + arg);
                let value = signed_unit(d, m + other, (hops + other).is_multiple_of(2));
                tensor.insert(tuple, value)?;
            }
        }
    }
    let mut names = labels("x", m);
    names.extend(labels("y", m));
    let algebra = Algebra::with_labels(tensor, names)?;

    let mut gram = Mat::zero(d, d);
    for i in 0..m {
        gram[(i, i)] = lambda.clone();
        gram[(i, m + i)] = mu.clone();
        gram[(m + i, i)] = mu.clone();
    }
    MetricAlgebra::new(algebra, Form::new(gram)?)
}

/// The (n+k)-dimensional family with isotropic center: center
/// `e_1..e_{k-1}`, middle block `e_k..e_{n+1}` with identity pairing, dual
/// block `e_{n+2}..e_{n+k}` pairing hyperbolically against the center.
/// Requires `2 <= k <= n+1` and `a != 0`.
pub fn build_case1(n: usize, k: usize, a: Scalar) -> Result<MetricAlgebra> {
    check_arity(n)?;
    if k < 2 || k > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "case1 needs 2 <= k <= n+1, got k={k}, n={n}"
        )));
    }
    if a.is_zero() {
        return Err(Error::InvalidParameter("case1 needs a != 0".into()));
    }
    let d = n + k;
    let mut tensor = StructureTensor::new(n, d)?;
    // the n+1 active generators e_k..e_{n+k}; each bracket omits one
    for i in k..=n + 1 {
        let tuple: Vec<usize> = (k..=d).filter(|&t| t != i).collect();
        let value = signed_unit(d, i, (n + i).is_multiple_of(2)).scale(&a);
        tensor.insert(tuple, value)?;
    }
    for r in 1..=k - 1 {
        let tuple: Vec<usize> = (k..=d).filter(|&t| t != n + 1 + r).collect();
        let value = signed_unit(d, r, (r + 1).is_multiple_of(2)).scale(&a);
        tensor.insert(tuple, value)?;
    }
    let algebra = Algebra::with_labels(tensor, labels("e", d))?;

    let mut gram = Mat::zero(d, d);
    for r in 1..=k - 1 {
        gram[(r - 1, n + r)] = Scalar::one();
        gram[(n + r, r - 1)] = Scalar::one();
    }
    for i in k..=n + 1 {
        gram[(i - 1, i - 1)] = Scalar::one();
    }
    MetricAlgebra::new(algebra, Form::new(gram)?)
}

/// The reductive (n+k)-dimensional family: a nondegenerate abelian center
/// `x_1..x_{k-1}` orthogonal to a copy of the simple algebra.
pub fn build_case2(n: usize, k: usize, c: Scalar) -> Result<MetricAlgebra> {
    check_arity(n)?;
    if k < 2 || k > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "case2 needs 2 <= k <= n+1, got k={k}, n={n}"
        )));
    }
    let parts = [build_abelian(n, k - 1, None)?, build_simple(n, c)?];
    let sum = ortho_direct_sum(&parts)?;
    let mut names = labels("x", k - 1);
    names.extend(labels("e", n + 1));
    let mut algebra = sum.algebra().clone();
    algebra.set_labels(Some(names))?;
    MetricAlgebra::new(algebra, sum.form().clone())
}

/// The mixed (n+k)-dimensional family: a nondegenerate abelian block of
/// dimension `l` orthogonal to the isotropic-center family of corank `k-l`.
/// Requires `1 <= l < k-1` (so both blocks are present).
pub fn build_case3(n: usize, k: usize, l: usize, a: Scalar) -> Result<MetricAlgebra> {
    check_arity(n)?;
    if k < 2 || k > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "case3 needs 2 <= k <= n+1, got k={k}, n={n}"
        )));
    }
    if l < 1 || l + 1 >= k {
        return Err(Error::InvalidParameter(format!(
            "case3 needs 1 <= l < k-1, got l={l}, k={k}"
        )));
    }
    let parts = [build_abelian(n, l, None)?, build_case1(n, k - l, a)?];
    let sum = ortho_direct_sum(&parts)?;
    let mut names = labels("x", l);
    names.extend(labels("e", n + k - l));
    let mut algebra = sum.algebra().clone();
    algebra.set_labels(Some(names))?;
    MetricAlgebra::new(algebra, sum.form().clone())
}

/// Block-diagonal sum: cross brackets and cross pairings vanish.
pub fn ortho_direct_sum(parts: &[MetricAlgebra]) -> Result<MetricAlgebra> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidParameter("orthogonal sum of no parts".into()));
    };
    let n = first.arity();
    if parts.iter().any(|p| p.arity() != n) {
        return Err(Error::InvalidParameter(
            "orthogonal sum of algebras of different arities".into(),
        ));
    }
    let total: usize = parts.iter().map(MetricAlgebra::dim).sum();
    let mut tensor = StructureTensor::new(n, total)?;
    let mut gram = Mat::zero(total, total);
    let mut offset = 0;
    for part in parts {
        let dp = part.dim();
        for (tuple, value) in part.algebra().tensor().entries() {
            let shifted: Vec<usize> = tuple.iter().map(|&i| i + offset).collect();
            let mut entries = vec![Scalar::zero(); total];
            for j in 1..=dp {
                entries[offset + j - 1] = value.coord1(j).clone();
            }
            tensor.insert(shifted, Vector::from_entries(entries))?;
        }
        for r in 0..dp {
            for c in 0..dp {
                gram[(offset + r, offset + c)] = part.form().gram()[(r, c)].clone();
            }
        }
        offset += dp;
    }
    let mut algebra = Algebra::new(tensor);
    let all_labels: Option<Vec<String>> = parts
        .iter()
        .map(|p| p.algebra().labels().map(|l| l.to_vec()))
        .collect::<Option<Vec<_>>>()
        .map(|ls| ls.concat());
    if let Some(ls) = all_labels {
        let unique: std::collections::BTreeSet<&String> = ls.iter().collect();
        if unique.len() == ls.len() {
            algebra.set_labels(Some(ls))?;
        }
    }
    MetricAlgebra::new(algebra, Form::new(gram)?)
}

fn signed_unit(d: usize, i: usize, positive: bool) -> Vector {
    let u = Vector::unit(d, i);
    if positive {
        u
    } else {
        -&u
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::invariant_form_space;
    use crate::subspace::Subspace;

    fn e(d: usize, i: usize) -> Vector {
        Vector::unit(d, i)
    }

    #[test]
    fn simple_bracket_values() {
        let s = build_simple(3, Scalar::one()).unwrap();
        let a = s.algebra();
        assert_eq!(a.bracket_indices(&[2, 3, 4]), e(4, 1));
        assert_eq!(a.bracket_indices(&[3, 2, 4]), -&e(4, 1));
        assert_eq!(a.bracket_indices(&[1, 3, 4]), -&e(4, 2));
        let repeated = a.bracket(&[e(4, 2), e(4, 2), e(4, 4)]).unwrap();
        assert!(repeated.is_zero());
    }

    #[test]
    fn simple_is_perfect_with_zero_center() {
        let mut s = build_simple(3, Scalar::one()).unwrap();
        assert!(s.verify().passed());
        assert_eq!(s.algebra().derived_algebra(), Subspace::full(4));
        assert!(s.algebra().center().is_zero());
        let (_, dim) = invariant_form_space(s.algebra());
        assert_eq!(dim, 1);
    }

    #[test]
    fn simple_rejects_zero_parameter() {
        assert!(build_simple(3, Scalar::zero()).is_err());
    }

    #[test]
    fn g0_tuple_census_at_arity_three() {
        let g = build_g0(3, Scalar::one(), Scalar::one()).unwrap();
        let pure = g
            .algebra()
            .tensor()
            .entries()
            .filter(|(t, _)| t.iter().all(|&i| i <= 4))
            .count();
        assert_eq!(pure, 4);
        assert_eq!(g.algebra().tensor().len(), 16);
    }

    #[test]
    fn g0_mixed_bracket_is_the_module_transport() {
        let g = build_g0(3, Scalar::one(), Scalar::one()).unwrap();
        let a = g.algebra();
        // transport of [x3, x4, x2] = -x1; one sign flip here fails the
        // fundamental-identity sweep below
        assert_eq!(a.bracket_indices(&[3, 4, 6]), -&e(8, 5));
        // two module arguments annihilate
        let two_y = a.bracket(&[e(8, 5), e(8, 6), e(8, 1)]).unwrap();
        assert!(two_y.is_zero());
    }

    #[test]
    fn g0_passes_all_checks_and_is_perfect() {
        let mut g = build_g0(2, Scalar::one(), Scalar::from_int(2)).unwrap();
        assert!(g.verify().passed());
        assert_eq!(g.algebra().derived_algebra(), Subspace::full(6));
        assert!(g.algebra().center().is_zero());
    }

    #[test]
    fn g0_rejects_degenerate_parameters() {
        assert!(build_g0(3, Scalar::zero(), Scalar::one()).is_err());
        assert!(build_g0(3, Scalar::one(), Scalar::zero()).is_err());
    }

    #[test]
    fn case1_small_instance() {
        let mut m = build_case1(3, 2, Scalar::one()).unwrap();
        assert!(m.verify().passed());
        let a = m.algebra();
        assert_eq!(a.bracket_indices(&[2, 3, 4]), e(5, 1));
        assert_eq!(a.bracket_indices(&[3, 4, 5]), -&e(5, 2));
        let center = a.center();
        assert_eq!(center, Subspace::coordinate_span(5, &[1]));
        assert!(m.form().is_isotropic(&center).unwrap());
        assert_eq!(a.derived_algebra(), Subspace::coordinate_span(5, &[1, 2, 3, 4]));
        assert!(a.is_solvable(&a.full_space()).unwrap());
    }

    #[test]
    fn case1_derived_series_shape() {
        let m = build_case1(3, 2, Scalar::one()).unwrap();
        let series = m.algebra().derived_series(&m.algebra().full_space()).unwrap();
        let dims: Vec<usize> = series.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![5, 4, 1, 0]);
    }

    #[test]
    fn case1_bracket_spans() {
        let m = build_case1(3, 2, Scalar::one()).unwrap();
        let a = m.algebra();
        let derived = a.derived_algebra();
        // brackets entirely inside the derived algebra only reach the center
        let inside = a
            .bracket_span(&[derived.clone(), derived.clone(), derived.clone()])
            .unwrap();
        assert_eq!(inside, Subspace::coordinate_span(5, &[1]));
        // two derived slots against the whole algebra reach everything the
        // table produces, so the derived algebra is not abelian as an ideal
        let two_slots = a
            .bracket_span(&[derived.clone(), derived.clone(), a.full_space()])
            .unwrap();
        assert_eq!(two_slots, Subspace::coordinate_span(5, &[1, 2, 3, 4]));
        assert!(!a.is_abelian_ideal(&derived).unwrap());
        assert!(a.is_abelian_ideal(&a.center()).unwrap());
    }

    #[test]
    fn simple_bracket_span_fills_the_space() {
        let m = build_simple(3, Scalar::one()).unwrap();
        let a = m.algebra();
        let g = a.full_space();
        assert_eq!(
            a.bracket_span(&[g.clone(), g.clone(), g]).unwrap(),
            Subspace::full(4)
        );
    }

    #[test]
    fn simple_centralizer_of_an_axis() {
        let m = build_simple(3, Scalar::one()).unwrap();
        let axis = Subspace::coordinate_span(4, &[1]);
        assert_eq!(m.algebra().centralizer(&axis).unwrap(), axis);
    }

    #[test]
    fn case1_center_is_derived_perp() {
        let m = build_case1(4, 3, Scalar::ratio(3, 2).unwrap()).unwrap();
        let center = m.algebra().center();
        let derived = m.algebra().derived_algebra();
        assert_eq!(m.form().orthogonal_complement(&derived).unwrap(), center);
        assert_eq!(m.form().orthogonal_complement(&center).unwrap(), derived);
    }

    #[test]
    fn case1_parameter_validation() {
        assert!(build_case1(3, 1, Scalar::one()).is_err());
        assert!(build_case1(3, 5, Scalar::one()).is_err());
        assert!(build_case1(3, 2, Scalar::zero()).is_err());
    }

    #[test]
    fn case2_is_reductive() {
        let mut m = build_case2(3, 3, Scalar::one()).unwrap();
        assert!(m.verify().passed());
        let a = m.algebra();
        let center = a.center();
        let derived = a.derived_algebra();
        assert_eq!(center, Subspace::coordinate_span(6, &[1, 2]));
        assert_eq!(derived.dim(), 4);
        assert!(center.intersect(&derived).unwrap().is_zero());
        assert_eq!(center.sum(&derived).unwrap(), Subspace::full(6));
        assert!(m.form().is_nondegenerate_subspace(&center).unwrap());
    }

    #[test]
    fn case3_mixed_center() {
        let mut m = build_case3(3, 4, 1, Scalar::one()).unwrap();
        assert!(m.verify().passed());
        assert_eq!(m.dim(), 7);
        let a = m.algebra();
        let center = a.center();
        let derived = a.derived_algebra();
        assert_eq!(center.dim(), 3);
        assert_eq!(derived.dim(), 4);
        assert_eq!(center.intersect(&derived).unwrap().dim(), 2);
    }

    #[test]
    fn case3_parameter_validation() {
        // l = k-1 leaves no isotropic part
        assert!(build_case3(3, 3, 2, Scalar::one()).is_err());
        assert!(build_case3(3, 3, 0, Scalar::one()).is_err());
        assert!(build_case3(3, 2, 1, Scalar::one()).is_err());
    }

    #[test]
    fn abelian_form_space_is_everything() {
        let m = build_abelian(3, 5, None).unwrap();
        let (_, dim) = invariant_form_space(m.algebra());
        assert_eq!(dim, 15);
        assert_eq!(m.algebra().center(), Subspace::full(5));
    }

    #[test]
    fn abelian_rejects_degenerate_gram() {
        let gram = Mat::from_int_rows(&[&[1, 0], &[0, 0]]);
        assert!(matches!(
            build_abelian(3, 2, Some(gram)),
            Err(Error::DegenerateForm)
        ));
        let skew = Mat::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert!(matches!(
            build_abelian(3, 2, Some(skew)),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn ortho_sum_identity_and_degenerate_cases() {
        let m = build_simple(3, Scalar::one()).unwrap();
        let zero = build_abelian(3, 0, None).unwrap();
        let sum = ortho_direct_sum(&[m.clone(), zero]).unwrap();
        assert_eq!(sum.algebra().tensor(), m.algebra().tensor());
        assert_eq!(sum.form().gram(), m.form().gram());

        let ab = ortho_direct_sum(&[
            build_abelian(3, 2, None).unwrap(),
            build_abelian(3, 3, None).unwrap(),
        ])
        .unwrap();
        assert!(ab.algebra().is_abelian());
        assert_eq!(ab.dim(), 5);

        let other_arity = build_simple(2, Scalar::one()).unwrap();
        assert!(ortho_direct_sum(&[m, other_arity]).is_err());
    }

    #[test]
    fn family_params_dispatch() {
        let params = FamilyParams {
            family: Family::Case1,
            n: 3,
            d: None,
            k: Some(2),
            l: None,
            a: Some(Scalar::one()),
            c: None,
            lambda: None,
            mu: None,
        };
        let ma = build_family(&params).unwrap();
        assert_eq!(ma.dim(), 5);
        let missing = FamilyParams { a: None, ..params.clone() };
        assert!(build_family(&missing).is_err());
        let sum = FamilyParams {
            family: Family::OrthoSum,
            ..params
        };
        assert!(build_family(&sum).is_err());
    }

    #[test]
    fn ortho_sum_of_two_g0_copies() {
        let g = build_g0(2, Scalar::one(), Scalar::one()).unwrap();
        let mut sum = ortho_direct_sum(&[g.clone(), g]).unwrap();
        assert_eq!(sum.dim(), 12);
        assert!(sum.verify().passed());
        let (_, dim) = invariant_form_space(sum.algebra());
        assert_eq!(dim, 4);
    }
}
