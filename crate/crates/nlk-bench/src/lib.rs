//! Shared fixtures for the kernel benchmarks.

use nlk_core::catalog::{build_case1, build_case2, build_g0, ortho_direct_sum};
use nlk_core::{Mat, MetricAlgebra, Scalar, Vector};

/// A 12-dimensional arity-4 algebra: the largest sweep target benchmarked.
pub fn wide_arity4() -> MetricAlgebra {
    let parts = [
        build_case1(4, 2, Scalar::one()).unwrap(),
        build_case2(4, 2, Scalar::one()).unwrap(),
    ];
    ortho_direct_sum(&parts).unwrap()
}

/// The doubled simple algebra at arity 4 (dimension 10).
pub fn doubled_arity4() -> MetricAlgebra {
    build_g0(4, Scalar::one(), Scalar::one()).unwrap()
}

/// A deterministic dense rational matrix with mixed denominators.
pub fn dense_matrix(rows: usize, cols: usize) -> Mat {
    let mut vectors = Vec::with_capacity(rows);
    for r in 0..rows {
        let entries = (0..cols)
            .map(|c| {
                let p = ((r * 31 + c * 17) % 13) as i64 - 6;
                let q = ((r + 2 * c) % 3) as i64 + 1;
                Scalar::ratio(p, q).unwrap()
            })
            .collect();
        vectors.push(Vector::from_entries(entries));
    }
    Mat::from_rows(vectors)
}

/// Deterministic pseudo-random vectors in the algebra's coordinate space.
pub fn argument_vectors(dim: usize, count: usize) -> Vec<Vector> {
    (0..count)
        .map(|s| {
            let entries = (0..dim)
                .map(|j| {
                    let p = ((s * 37 + j * 11) % 9) as i64 - 4;
                    Scalar::from_int(p)
                })
                .collect();
            Vector::from_entries(entries)
        })
        .collect()
}
