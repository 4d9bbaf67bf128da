//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Everything here is exact arithmetic, so every assertion is an equality
//! with zero tolerance. Time bounds are asserted where stated.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use nlk_core::catalog::{
    build_abelian, build_case1, build_case2, build_case3, build_g0, build_simple,
    ortho_direct_sum,
};
use nlk_core::metric::{
    check_invariance, dual_isotropic_basis, metric_quotient, reduce_by_center, verify_levi,
    LeviAnnotation,
};
use nlk_core::{
    classify, invariant_form_space, Algebra, Case, Form, Mat, MetricAlgebra, Scalar, Subspace,
    Vector,
};

fn a_values() -> Vec<Scalar> {
    vec![Scalar::one(), Scalar::ratio(3, 2).unwrap()]
}

struct GridInstance {
    name: String,
    ma: MetricAlgebra,
    expected: Case,
    n: usize,
    k: usize,
    l: Option<usize>,
}

/// The full builder grid: n in 2..=5, k in 2..=n+1, both parameter values,
/// case 3 over every legal l, plus simple, the doubled simple algebra, and
/// an abelian instance per arity.
fn grid() -> Vec<GridInstance> {
    let mut out = Vec::new();
    for n in 2..=5usize {
        for k in 2..=n + 1 {
            for a in a_values() {
                out.push(GridInstance {
                    name: format!("case1(n={n},k={k},a={a})"),
                    ma: build_case1(n, k, a.clone()).unwrap(),
                    expected: Case::Case1IsotropicCenter,
                    n,
                    k,
                    l: None,
                });
                out.push(GridInstance {
                    name: format!("case2(n={n},k={k},c={a})"),
                    ma: build_case2(n, k, a.clone()).unwrap(),
                    expected: Case::Case2Reductive,
                    n,
                    k,
                    l: None,
                });
                for l in 1..k.saturating_sub(1) {
                    out.push(GridInstance {
                        name: format!("case3(n={n},k={k},l={l},a={a})"),
                        ma: build_case3(n, k, l, a.clone()).unwrap(),
                        expected: Case::Case3Mixed,
                        n,
                        k,
                        l: Some(l),
                    });
                }
            }
        }
        for c in a_values() {
            out.push(GridInstance {
                name: format!("simple(n={n},c={c})"),
                ma: build_simple(n, c).unwrap(),
                expected: Case::OutOfRange,
                n,
                k: 1,
                l: None,
            });
        }
        for lambda in [1i64, 2] {
            for mu in [1i64, 2] {
                out.push(GridInstance {
                    name: format!("g0(n={n},lambda={lambda},mu={mu})"),
                    ma: build_g0(n, Scalar::from_int(lambda), Scalar::from_int(mu)).unwrap(),
                    expected: Case::OutOfRange,
                    n,
                    k: n + 2,
                    l: None,
                });
            }
        }
        out.push(GridInstance {
            name: format!("abelian(n={n},d={})", n + 2),
            ma: build_abelian(n, n + 2, None).unwrap(),
            expected: Case::Abelian,
            n,
            k: 2,
            l: None,
        });
    }
    out
}

/// A small representative catalog for the randomized law and oracle
/// criteria.
fn representative_catalog() -> Vec<(String, MetricAlgebra)> {
    let one = Scalar::one();
    let three_halves = Scalar::ratio(3, 2).unwrap();
    vec![
        ("case1(3,2,1)".into(), build_case1(3, 2, one.clone()).unwrap()),
        ("case1(3,3,1)".into(), build_case1(3, 3, one.clone()).unwrap()),
        ("case1(4,3,3/2)".into(), build_case1(4, 3, three_halves).unwrap()),
        ("case2(2,3,1)".into(), build_case2(2, 3, one.clone()).unwrap()),
        ("case2(3,3,1)".into(), build_case2(3, 3, one.clone()).unwrap()),
        ("case3(3,4,1,1)".into(), build_case3(3, 4, 1, one.clone()).unwrap()),
        ("simple(3,1)".into(), build_simple(3, one.clone()).unwrap()),
        ("g0(3,1,1)".into(), build_g0(3, one.clone(), one.clone()).unwrap()),
        ("abelian(3,5)".into(), build_abelian(3, 5, None).unwrap()),
    ]
}

fn verified(mut ma: MetricAlgebra) -> MetricAlgebra {
    let report = ma.verify();
    assert!(report.passed(), "verification failed: {:?}", report.violations);
    ma
}

fn random_scalar(rng: &mut StdRng) -> Scalar {
    Scalar::ratio(rng.random_range(-4..=4), rng.random_range(1..=3)).unwrap()
}

fn random_vector(rng: &mut StdRng, d: usize) -> Vector {
    Vector::from_entries((0..d).map(|_| random_scalar(rng)).collect())
}

fn random_subspace(rng: &mut StdRng, d: usize) -> Subspace {
    let rows = rng.random_range(0..=3usize.min(d));
    if rows == 0 {
        return Subspace::zero(d);
    }
    Subspace::from_rows(Mat::from_rows(
        (0..rows).map(|_| random_vector(rng, d)).collect(),
    ))
}

#[test]
fn criterion_1_axiom_suite_over_the_grid() {
    let suite_start = Instant::now();
    let mut count = 0;
    for instance in grid() {
        let mut ma = instance.ma;
        let start = Instant::now();
        let report = ma.verify();
        let elapsed = start.elapsed();
        assert!(
            report.passed(),
            "{} has {} violations: {:?}",
            instance.name,
            report.len(),
            report.violations.first()
        );
        assert!(
            elapsed <= Duration::from_secs(10),
            "{} took {elapsed:?}",
            instance.name
        );
        count += 1;
    }
    let total = suite_start.elapsed();
    assert!(total <= Duration::from_secs(300), "grid took {total:?}");
    println!("criterion 1 (axiom suite, {count} instances in {total:?}): PASS");
}

#[test]
fn criterion_2_isotropic_center_dimensions() {
    for n in 2..=5usize {
        for k in 2..=n + 1 {
            for a in a_values() {
                let ma = verified(build_case1(n, k, a).unwrap());
                let center = ma.algebra().center();
                let derived = ma.algebra().derived_algebra();
                assert_eq!(center.dim(), k - 1, "center of case1({n},{k})");
                assert_eq!(derived.dim(), n + 1, "derived of case1({n},{k})");
                assert!(ma.form().is_isotropic(&center).unwrap());
                assert_eq!(
                    ma.form().orthogonal_complement(&derived).unwrap(),
                    center,
                    "center of case1({n},{k}) is not derived-perp"
                );
            }
        }
    }
    println!("criterion 2 (center dimension k-1, derived dimension n+1): PASS");
}

/// Independent route for the invariant-form dimension: a dense
/// antisymmetrized tensor and constraints enumerated over all index tuples,
/// not just strictly increasing ones.
fn dense_invariant_form_dimension(algebra: &Algebra) -> usize {
    let d = algebra.dim();
    let n = algebra.arity();
    let mut dense: HashMap<Vec<usize>, Vector> = HashMap::new();
    for (tuple, value) in algebra.tensor().entries() {
        for perm in tuple.iter().copied().permutations(n) {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let signed = if inversions % 2 == 1 { -value } else { value.clone() };
            dense.insert(perm, signed);
        }
    }
    let dense_bracket = |idxs: &[usize]| -> Vector {
        dense
            .get(idxs)
            .cloned()
            .unwrap_or_else(|| Vector::zero(d))
    };
    let unknowns = d * (d + 1) / 2;
    let pack = |i: usize, j: usize| -> usize {
        let (i, j) = (i.min(j), i.max(j));
        (0..i - 1).map(|r| d - r).sum::<usize>() + (j - i)
    };
    let mut rows: Vec<Vector> = Vec::new();
    for t in (0..n - 1).map(|_| 1..=d).multi_cartesian_product() {
        for p in 1..=d {
            for q in 1..=d {
                let mut left = t.clone();
                left.push(p);
                let wp = dense_bracket(&left);
                let mut right = t.clone();
                right.push(q);
                let wq = dense_bracket(&right);
                if wp.is_zero() && wq.is_zero() {
                    continue;
                }
                let mut row = vec![Scalar::zero(); unknowns];
                for j in 1..=d {
                    let c = wp.coord1(j);
                    if !c.is_zero() {
                        row[pack(j, q)] += c;
                    }
                    let c = wq.coord1(j);
                    if !c.is_zero() {
                        row[pack(j, p)] += c;
                    }
                }
                rows.push(Vector::from_entries(row));
            }
        }
    }
    if rows.is_empty() {
        unknowns
    } else {
        nlk_core::nullspace(&Mat::from_rows(rows)).dim()
    }
}

#[test]
fn criterion_3_metric_dimension() {
    for n in 2..=4usize {
        let g = build_g0(n, Scalar::one(), Scalar::one()).unwrap();
        let (basis, dim) = invariant_form_space(g.algebra());
        assert_eq!(dim, 2, "metric dimension of g0({n},1,1)");
        for form in &basis {
            assert!(form.is_symmetric());
            assert!(check_invariance(g.algebra(), form).unwrap().passed());
        }
    }
    for n in 2..=3usize {
        for m in 2..=3usize {
            let copy = build_g0(n, Scalar::one(), Scalar::one()).unwrap();
            let sum = ortho_direct_sum(&vec![copy; m]).unwrap();
            let (basis, dim) = invariant_form_space(sum.algebra());
            assert_eq!(dim, 2 * m, "metric dimension of {m} copies of g0({n},1,1)");
            for form in &basis {
                assert!(form.is_symmetric());
                assert!(check_invariance(sum.algebra(), form).unwrap().passed());
            }
        }
    }
    // form spaces add over orthogonal sums of perfect algebras
    let mixed = ortho_direct_sum(&[
        build_simple(3, Scalar::one()).unwrap(),
        build_g0(3, Scalar::one(), Scalar::one()).unwrap(),
    ])
    .unwrap();
    assert_eq!(invariant_form_space(mixed.algebra()).1, 1 + 2);

    // independent dense oracle for the simple algebra
    let simple = build_simple(3, Scalar::one()).unwrap();
    let (basis, dim) = invariant_form_space(simple.algebra());
    let oracle_dim = dense_invariant_form_dimension(simple.algebra());
    assert_eq!(oracle_dim, 1);
    assert_eq!(dim, 1);
    // the one-dimensional solution space is spanned by a multiple of the
    // identity gram
    let gram = basis[0].gram();
    let pivot = gram[(0, 0)].clone();
    assert!(!pivot.is_zero());
    for p in 0..4 {
        for q in 0..4 {
            let expected = if p == q { pivot.clone() } else { Scalar::zero() };
            assert_eq!(gram[(p, q)], expected);
        }
    }
    println!("criterion 3 (invariant-form dimensions, with dense oracle): PASS");
}

#[test]
fn criterion_4_classifier_round_trip() {
    let mut rng = StdRng::seed_from_u64(0x6e6c6b34);
    let mut instances = 0;
    for instance in grid() {
        let ma = verified(instance.ma);
        let report = classify(&ma).unwrap();
        assert_eq!(report.case, instance.expected, "{}", instance.name);
        assert_eq!(report.n, instance.n, "{}", instance.name);
        if instance.expected != Case::OutOfRange {
            assert_eq!(report.k, instance.k as i64, "{}", instance.name);
        }
        if let Some(l) = instance.l {
            assert_eq!(report.l, Some(l), "{}", instance.name);
            assert_eq!(report.k1, Some(instance.k - l - 1), "{}", instance.name);
        }
        for _ in 0..10 {
            let mut perm: Vec<usize> = (1..=ma.dim()).collect();
            perm.shuffle(&mut rng);
            let permuted = ma.permute_basis(&perm).unwrap();
            let permuted_report = classify(&permuted).unwrap();
            assert_eq!(permuted_report.case, report.case, "{}", instance.name);
            assert_eq!(permuted_report.l, report.l, "{}", instance.name);
            assert_eq!(permuted_report.k1, report.k1, "{}", instance.name);
            assert_eq!(permuted_report.profile, report.profile, "{}", instance.name);
        }
        instances += 1;
    }
    println!("criterion 4 (classifier round trip, {instances} instances x 10 permutations): PASS");
}

#[test]
fn criterion_5_quotient_and_reduction() {
    for n in 2..=5usize {
        for k in 2..=n + 1 {
            let ma = verified(build_case1(n, k, Scalar::one()).unwrap());
            let center = ma.algebra().center();
            let q = metric_quotient(&ma, &center).unwrap();
            assert!(q.algebra().is_abelian(), "quotient of case1({n},{k})");
            assert_eq!(q.dim(), n + 2 - k, "quotient dimension for case1({n},{k})");
            assert!(q.form().is_nondegenerate());
            assert!(q.status().all_ok());

            // arity reduction by the full center where legal
            let l = k - 1;
            if n - l >= 2 {
                let reduced = reduce_by_center(&ma, l).unwrap();
                assert_eq!(reduced.arity(), n - l);
                assert!(reduced.status().all_ok());
                let derived = reduced.algebra().derived_algebra();
                assert_eq!(derived.dim(), n - l + 1, "reduce case1({n},{k}) by {l}");
                let core = reduced.algebra().restrict(&derived).unwrap();
                assert_eq!(
                    core.derived_algebra(),
                    Subspace::full(n - l + 1),
                    "reduction core of case1({n},{k}) is not perfect"
                );
                // the reduction splits as center plus derived
                let center0 = reduced.algebra().center();
                assert_eq!(center0.sum(&derived).unwrap(), Subspace::full(ma.dim()));
                assert!(center0.intersect(&derived).unwrap().is_zero());
            }
        }
    }
    println!("criterion 5 (metric quotients and arity reductions): PASS");
}

/// Totally isotropic coordinate sets read off the Gram matrix greedily; the
/// forward pass finds blocks like an isotropic center, the reverse pass
/// finds their hyperbolic partners.
fn greedy_isotropic_seed(form: &Form, indices: impl Iterator<Item = usize>) -> Subspace {
    let mut chosen: Vec<usize> = Vec::new();
    for i in indices {
        if form.pairing_basis(i, i).is_zero()
            && chosen.iter().all(|&j| form.pairing_basis(i, j).is_zero())
        {
            chosen.push(i);
        }
    }
    Subspace::coordinate_span(form.dim(), &chosen)
}

/// A random subspace of `seed` spanned by random combinations of its basis.
fn random_inside(rng: &mut StdRng, seed: &Subspace) -> Subspace {
    let d = seed.ambient_dim();
    if seed.is_zero() {
        return Subspace::zero(d);
    }
    let basis = seed.basis_vectors();
    let count = rng.random_range(1..=basis.len());
    let rows: Vec<Vector> = (0..count)
        .map(|_| {
            let mut v = Vector::zero(d);
            for b in &basis {
                v.axpy(&random_scalar(rng), b);
            }
            v
        })
        .collect();
    Subspace::from_rows(Mat::from_rows(rows))
}

#[test]
fn criterion_6_orthogonality_laws_on_random_subspaces() {
    let mut rng = StdRng::seed_from_u64(0x6e6c6b36);
    let mut isotropic_sums = 0usize;
    let mut non_isotropic_sums = 0usize;
    for (name, ma) in representative_catalog() {
        let ma = verified(ma);
        let form = ma.form();
        let algebra = ma.algebra();
        let d = ma.dim();
        let mut seeds = vec![
            algebra.center().intersect(&algebra.derived_algebra()).unwrap(),
            greedy_isotropic_seed(form, 1..=d),
            greedy_isotropic_seed(form, (1..=d).rev()),
        ];
        seeds.retain(|s| !s.is_zero());
        for _ in 0..200 {
            let w = random_subspace(&mut rng, d);
            let perp = form.orthogonal_complement(&w).unwrap();
            assert_eq!(w.dim() + perp.dim(), d, "{name}");
            assert_eq!(form.orthogonal_complement(&perp).unwrap(), w, "{name}");

            // isotropic pairs: radicals of random subspaces, plus random
            // subspaces of the structural isotropic seeds
            let pick = |rng: &mut StdRng| -> Subspace {
                if seeds.is_empty() || rng.random_bool(0.5) {
                    form.form_radical(&random_subspace(rng, d)).unwrap()
                } else {
                    let idx = rng.random_range(0..seeds.len());
                    random_inside(rng, &seeds[idx])
                }
            };
            let j1 = pick(&mut rng);
            let j2 = pick(&mut rng);
            assert!(form.is_isotropic(&j1).unwrap());
            assert!(form.is_isotropic(&j2).unwrap());
            let cross = j1
                .basis_rows()
                .mul_mat(form.gram())
                .mul_mat(&j2.basis_rows().transpose());
            let sum_isotropic = form.is_isotropic(&j1.sum(&j2).unwrap()).unwrap();
            assert_eq!(sum_isotropic, cross.is_zero(), "{name}");
            if !j1.is_zero() && !j2.is_zero() {
                if sum_isotropic {
                    isotropic_sums += 1;
                } else {
                    non_isotropic_sums += 1;
                }
            }
        }

        // structural identities that hold for every verified metric algebra
        let center = algebra.center();
        let derived = algebra.derived_algebra();
        assert!(algebra.is_ideal(&center).unwrap(), "{name}: center is not an ideal");
        assert!(algebra.is_ideal(&derived).unwrap(), "{name}: derived is not an ideal");
        assert_eq!(
            form.orthogonal_complement(&center).unwrap(),
            derived,
            "{name}: derived algebra is not the center's perp"
        );
        assert_eq!(
            form.is_isotropic(&center).unwrap(),
            derived.contains_subspace(&center).unwrap(),
            "{name}: center isotropy disagrees with center <= derived"
        );

        // natural ideals: structural subspaces and their complements
        let mut candidates = vec![
            Subspace::zero(d),
            Subspace::full(d),
            center.clone(),
            derived.clone(),
            center.intersect(&derived).unwrap(),
            center.sum(&derived).unwrap(),
            form.orthogonal_complement(&center).unwrap(),
            form.orthogonal_complement(&derived).unwrap(),
        ];
        candidates.dedup_by(|a, b| a == b);
        for ideal in candidates {
            if !algebra.is_ideal(&ideal).unwrap() {
                continue;
            }
            let centralizer = algebra.centralizer(&ideal).unwrap();
            let mut slots = vec![algebra.full_space(); ma.arity()];
            slots[0] = ideal.clone();
            let image = algebra.bracket_span(&slots).unwrap();
            assert_eq!(
                centralizer,
                form.orthogonal_complement(&image).unwrap(),
                "{name}: centralizer of an ideal is not the bracket image's perp"
            );
            assert!(
                algebra.is_ideal(&centralizer).unwrap(),
                "{name}: centralizer of an ideal is not an ideal"
            );
            if form.is_isotropic(&ideal).unwrap() {
                assert!(
                    algebra.is_abelian_ideal(&ideal).unwrap(),
                    "{name}: isotropic ideal is not abelian"
                );
            }
        }
    }
    assert!(isotropic_sums > 0, "no isotropic sums were exercised");
    assert!(non_isotropic_sums > 0, "no non-isotropic sums were exercised");
    println!(
        "criterion 6 (orthogonality laws, 200 subspaces per algebra, {isotropic_sums}/{non_isotropic_sums} isotropic/non-isotropic sums): PASS"
    );
}

/// The dense-tensor route: every permutation of every stored tuple,
/// evaluated by plain coefficient products with no sorting or signs at
/// evaluation time.
struct DenseBracket {
    dim: usize,
    entries: Vec<(Vec<usize>, Vector)>,
}

impl DenseBracket {
    fn build(algebra: &Algebra) -> Self {
        let n = algebra.arity();
        let mut entries = Vec::new();
        for (tuple, value) in algebra.tensor().entries() {
            for perm in tuple.iter().copied().permutations(n) {
                let mut inversions = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inversions += 1;
                        }
                    }
                }
                let signed = if inversions % 2 == 1 { -value } else { value.clone() };
                entries.push((perm, signed));
            }
        }
        DenseBracket {
            dim: algebra.dim(),
            entries,
        }
    }

    fn bracket(&self, args: &[Vector]) -> Vector {
        let mut acc = Vector::zero(self.dim);
        for (key, value) in &self.entries {
            let mut coeff = Scalar::one();
            for (s, &j) in key.iter().enumerate() {
                coeff = coeff * args[s].coord1(j);
                if coeff.is_zero() {
                    break;
                }
            }
            if !coeff.is_zero() {
                acc.axpy(&coeff, value);
            }
        }
        acc
    }
}

#[test]
fn criterion_7_bracket_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x6e6c6b37);
    for (name, ma) in representative_catalog() {
        let algebra = ma.algebra();
        let dense = DenseBracket::build(algebra);
        for _ in 0..100 {
            let args: Vec<Vector> = (0..ma.arity())
                .map(|_| random_vector(&mut rng, ma.dim()))
                .collect();
            let canonical = algebra.bracket(&args).unwrap();
            let naive = dense.bracket(&args);
            assert_eq!(canonical, naive, "{name}");
        }
    }
    println!("criterion 7 (canonical vs dense-tensor bracket, 100 inputs per algebra): PASS");
}

#[test]
fn criterion_8_levi_verification_on_g0() {
    let ma = verified(build_g0(3, Scalar::one(), Scalar::one()).unwrap());
    let s = Subspace::coordinate_span(8, &[1, 2, 3, 4]);
    let r = Subspace::coordinate_span(8, &[5, 6, 7, 8]);
    let ann = LeviAnnotation {
        s_parts: vec![s.clone()],
        r: r.clone(),
        iso_ideal: Some(r.clone()),
    };
    let report = verify_levi(&ma, &ann).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    // the two headline identities, asserted directly as well
    let r_perp = ma.form().orthogonal_complement(&r).unwrap();
    assert_eq!(r_perp, r);
    let mut slots = vec![s; 3];
    slots[2] = r_perp.clone();
    assert_eq!(ma.algebra().bracket_span(&slots).unwrap(), r_perp);
    // the dual family to the radical pairs hyperbolically, staying exact
    let duals = dual_isotropic_basis(&ma, &r).unwrap();
    assert_eq!(duals.len(), 4);
    println!("criterion 8 (annotated Levi verification on the doubled simple algebra): PASS");
}

#[test]
fn criterion_9_sweep_performance_and_scaling() {
    let parts = [
        build_case1(4, 2, Scalar::one()).unwrap(),
        build_case2(4, 2, Scalar::one()).unwrap(),
    ];
    let ma = ortho_direct_sum(&parts).unwrap();
    assert_eq!(ma.dim(), 12);
    assert_eq!(ma.arity(), 4);

    let start = Instant::now();
    let sequential = ma.algebra().check_fundamental_identity();
    let sequential_time = start.elapsed();
    assert!(sequential.passed());
    assert!(
        sequential_time <= Duration::from_secs(30),
        "single-threaded sweep took {sequential_time:?}"
    );

    let workers: usize = std::env::var("NLK_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(4);
    let start = Instant::now();
    let partitioned = ma
        .algebra()
        .check_fundamental_identity_with_workers(workers);
    let partitioned_time = start.elapsed();
    assert!(partitioned.passed());
    assert_eq!(partitioned.len(), sequential.len());
    println!(
        "criterion 9 (n=4, d=12 sweep: {sequential_time:?} single-threaded, {partitioned_time:?} with {workers} workers): PASS"
    );
}
