//! Small helpers over the dense linear-algebra backend.

use faer::{c64, Mat, MatRef, Side};

use crate::{Error, Result};

/// Hermitian eigendecomposition with eigenvalues in ascending order.
///
/// Only the lower triangle of `a` is read.
pub fn hermitian_eigen(a: MatRef<'_, c64>) -> Result<(Vec<f64>, Mat<c64>)> {
    let n = a.nrows();
    let eig = a
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Internal(format!("eigendecomposition failed: {e:?}")))?;
    let mut order: Vec<usize> = (0..n).collect();
    let s = eig.S();
    order.sort_by(|&p, &q| {
        s[p].re
            .partial_cmp(&s[q].re)
            .expect("eigenvalue comparison")
    });
    let vals: Vec<f64> = order.iter().map(|&p| s[p].re).collect();
    let mut vecs = Mat::<c64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vecs[(r, dst)] = eig.U()[(r, src)];
        }
    }
    Ok((vals, vecs))
}

/// Von Neumann entropy `-tr(rho ln rho)` in nats of a Hermitian,
/// positive-semidefinite matrix. Eigenvalues below `1e-14` are treated as
/// exact zeros.
pub fn von_neumann_entropy(rho: MatRef<'_, c64>) -> Result<f64> {
    let (vals, _) = hermitian_eigen(rho)?;
    Ok(vals
        .iter()
        .filter(|&&p| p > 1e-14)
        .map(|&p| -p * p.ln())
        .sum())
}

/// Maximum absolute deviation from Hermiticity.
pub fn hermiticity_defect(a: MatRef<'_, c64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (a[(i, j)] - a[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_of_diagonal_is_sorted() {
        let mut a = Mat::<c64>::zeros(3, 3);
        a[(0, 0)] = c64::new(2.0, 0.0);
        a[(1, 1)] = c64::new(-1.0, 0.0);
        a[(2, 2)] = c64::new(0.5, 0.0);
        let (vals, _) = hermitian_eigen(a.as_ref()).unwrap();
        assert_eq!(vals, vec![-1.0, 0.5, 2.0]);
    }

    #[test]
    fn entropy_of_pure_and_mixed() {
        let mut pure = Mat::<c64>::zeros(2, 2);
        pure[(0, 0)] = c64::new(1.0, 0.0);
        assert!(von_neumann_entropy(pure.as_ref()).unwrap().abs() < 1e-12);

        let mut mixed = Mat::<c64>::zeros(2, 2);
        mixed[(0, 0)] = c64::new(0.5, 0.0);
        mixed[(1, 1)] = c64::new(0.5, 0.0);
        let s = von_neumann_entropy(mixed.as_ref()).unwrap();
        assert!((s - std::f64::consts::LN_2).abs() < 1e-12);
    }
}
