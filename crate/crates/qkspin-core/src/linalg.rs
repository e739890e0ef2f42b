//! Dense linear-algebra helpers shared by the verification modules.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_traits::Float;

use crate::{CMat, CVec, Cx, RMat};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
///
/// The input is symmetrized first so accumulated round-off in Hermitian-by-
/// construction operators cannot push nalgebra off the symmetric path.
pub fn hermitian_eigen(a: &CMat) -> (Vec<f64>, CMat) {
    let h = (a + a.adjoint()).scale(0.5);
    let se = h.symmetric_eigen();
    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMat::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(i));
    }
    (vals, vecs)
}

/// Group ascending values into clusters whose consecutive gaps are below `tol`.
/// Returns (cluster mean, multiplicity) pairs in ascending order.
pub fn cluster_eigenvalues(vals: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < vals.len() {
        let mut j = i + 1;
        while j < vals.len() && (vals[j] - vals[j - 1]).abs() < tol {
            j += 1;
        }
        let mean = vals[i..j].iter().sum::<f64>() / (j - i) as f64;
        out.push((mean, j - i));
        i = j;
    }
    out
}

/// Columns of `vecs` whose eigenvalue lies within `tol` of `target`.
pub fn eigenspace_basis(vals: &[f64], vecs: &CMat, target: f64, tol: f64) -> CMat {
    let cols: Vec<usize> =
        (0..vals.len()).filter(|&i| (vals[i] - target).abs() < tol).collect();
    let mut out = CMat::zeros(vecs.nrows(), cols.len());
    for (k, &c) in cols.iter().enumerate() {
        out.set_column(k, &vecs.column(c));
    }
    out
}

/// Kronecker product of complex matrices.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = CMat::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let s = a[(i, j)];
            if s != Cx::new(0.0, 0.0) {
                for k in 0..br {
                    for l in 0..bc {
                        out[(i * br + k, j * bc + l)] = s * b[(k, l)];
                    }
                }
            }
        }
    }
    out
}

pub fn to_complex(a: &RMat) -> CMat {
    CMat::from_fn(a.nrows(), a.ncols(), |i, j| Cx::new(a[(i, j)], 0.0))
}

pub fn int_to_real(a: &DMatrix<i64>) -> RMat {
    RMat::from_fn(a.nrows(), a.ncols(), |i, j| a[(i, j)] as f64)
}

/// Numeric rank from singular values, threshold relative to the largest.
pub fn rank(a: &CMat, tol: f64) -> usize {
    let sv = a.clone().singular_values();
    let top = sv.iter().cloned().fold(0.0f64, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * top).count()
}

/// Orthonormal basis of the (right) nullspace of `a`, as matrix columns.
pub fn nullspace(a: &CMat, tol: f64) -> CMat {
    let n = a.ncols();
    let svd = a.clone().svd(false, true);
    let vt = svd.v_t.expect("svd requested v_t");
    let sv = &svd.singular_values;
    let top = sv.iter().cloned().fold(0.0f64, f64::max).max(1.0);
    let mut cols: Vec<usize> = (0..sv.len()).filter(|&i| sv[i] <= tol * top).collect();
    // Rows of v_t beyond the singular-value count always belong to the kernel.
    cols.extend(sv.len()..vt.nrows());
    let mut out = CMat::zeros(n, cols.len());
    for (k, &i) in cols.iter().enumerate() {
        out.set_column(k, &vt.row(i).adjoint());
    }
    out
}

/// Frobenius norm of `ab - ba`.
pub fn commutator_norm(a: &CMat, b: &CMat) -> f64 {
    (a * b - b * a).norm()
}

/// Largest entry magnitude.
pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Squared Hermitian norm of a vector.
pub fn norm2(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Relative deviation |x - y| / max(|x|, |y|, 1).
pub fn rel_err(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(1.0)
}

/// Orthonormal basis (columns) of the range of a Hermitian projector.
/// `expected_rank` pins the count; eigenvalues must cluster at 0 and 1.
pub fn projector_range_basis(p: &CMat, expected_rank: usize) -> CMat {
    let (vals, vecs) = hermitian_eigen(p);
    let n = vals.len();
    let mut out = CMat::zeros(n, expected_rank);
    // Eigenvalues ascend, so the range eigenvectors sit at the top.
    for k in 0..expected_rank {
        out.set_column(k, &vecs.column(n - expected_rank + k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_sorted_and_orthonormal() {
        let mut a = CMat::zeros(3, 3);
        a[(0, 0)] = Cx::new(2.0, 0.0);
        a[(1, 1)] = Cx::new(-1.0, 0.0);
        a[(0, 1)] = Cx::new(0.0, 1.0);
        a[(1, 0)] = Cx::new(0.0, -1.0);
        let (vals, vecs) = hermitian_eigen(&a);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        let gram = vecs.adjoint() * &vecs;
        assert!((gram - CMat::identity(3, 3)).norm() < 1e-12);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let mut a = CMat::zeros(2, 3);
        a[(0, 0)] = Cx::new(1.0, 0.0);
        let ns = nullspace(&a, 1e-12);
        assert_eq!(ns.ncols(), 2);
        assert!((&a * &ns).norm() < 1e-12);
        assert_eq!(rank(&a, 1e-12), 1);
    }

    #[test]
    fn kron_matches_block_structure() {
        let a = CMat::from_row_slice(2, 2, &[
            Cx::new(1.0, 0.0), Cx::new(2.0, 0.0),
            Cx::new(0.0, 0.0), Cx::new(1.0, 0.0),
        ]);
        let b = CMat::identity(2, 2);
        let k = kron(&a, &b);
        assert_eq!(k.shape(), (4, 4));
        assert_eq!(k[(0, 2)], Cx::new(2.0, 0.0));
        assert_eq!(k[(1, 3)], Cx::new(2.0, 0.0));
    }

    #[test]
    fn clustering_merges_near_values() {
        let vals = [0.0, 1e-12, 1.0, 1.0 + 1e-12, 1.0 + 2e-12, 5.0];
        let cl = cluster_eigenvalues(&vals, 1e-9);
        let mults: Vec<usize> = cl.iter().map(|c| c.1).collect();
        assert_eq!(mults, vec![2, 3, 1]);
    }
}
