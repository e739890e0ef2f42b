//! Quaternionic structure on the fiber and the fundamental 4-form.
//!
//! The fiber `R^{4m}` is identified with `H^m`, coordinates ordered
//! `(1, i, j, k)` per quaternionic block. `J_1, J_2, J_3` are right
//! multiplications by `i`, `j`, `-k`, which makes `J_1 J_2 = +J_3`. The
//! Kähler 2-forms act on spinors through the Clifford module, and
//! `Omega = Σ_a (Omega_a·)^2 + 6m` splits the spinor space into the
//! eigenbundles `S_r`, eigenvalue `mu_r = 6m - 4r(r+2)`.

use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::clifford::{build_gamma, CliffordModule, SpinorOperator};
use crate::gauss::GaussMat;
use crate::linalg::{self, cluster_eigenvalues, hermitian_eigen};
use crate::{CMat, Cx, Error, RMat, Result, MAX_QUATERNIONIC_DIM};

/// The three right-multiplication blocks on one quaternionic coordinate.
fn quaternion_blocks() -> [DMatrix<i64>; 3] {
    let ri = DMatrix::from_row_slice(4, 4, &[
        0, -1, 0, 0,
        1, 0, 0, 0,
        0, 0, 0, 1,
        0, 0, -1, 0,
    ]);
    let rj = DMatrix::from_row_slice(4, 4, &[
        0, 0, -1, 0,
        0, 0, 0, -1,
        1, 0, 0, 0,
        0, 1, 0, 0,
    ]);
    let rk = DMatrix::from_row_slice(4, 4, &[
        0, 0, 0, -1,
        0, 0, 1, 0,
        0, -1, 0, 0,
        1, 0, 0, 0,
    ]);
    [ri, rj, -rk]
}

fn block_diag(m: usize, b: &DMatrix<i64>) -> DMatrix<i64> {
    let mut out = DMatrix::zeros(4 * m, 4 * m);
    for blk in 0..m {
        for i in 0..4 {
            for j in 0..4 {
                out[(4 * blk + i, 4 * blk + j)] = b[(i, j)];
            }
        }
    }
    out
}

/// The quaternionic fiber: complex structures, Kähler-form actions, the
/// 4-form operator, and its eigen-projectors.
#[derive(Debug, Clone)]
pub struct QKFiber {
    m: usize,
    module: CliffordModule,
    j_exact: Vec<DMatrix<i64>>,
    j_real: Vec<RMat>,
    omega_forms: Vec<RMat>,
    omega_ops: Vec<SpinorOperator>,
    omega_exact: GaussMat,
    omega: SpinorOperator,
    projectors: Vec<SpinorOperator>,
    mus: Vec<i64>,
}

/// Build the fiber structure for quaternionic dimension `1 <= m <= 4`.
pub fn build_qk_fiber(m: usize) -> Result<QKFiber> {
    if m < 1 || m > MAX_QUATERNIONIC_DIM {
        return Err(Error::QuaternionicDimOutOfRange(m));
    }
    let q = 4 * m;
    let module = build_gamma(q)?;
    let j_exact: Vec<DMatrix<i64>> =
        quaternion_blocks().iter().map(|b| block_diag(m, b)).collect();
    let j_real: Vec<RMat> = j_exact.iter().map(linalg::int_to_real).collect();
    let omega_forms: Vec<RMat> = j_real.iter().map(|j| j.transpose()).collect();

    let omega_forms_exact: Vec<DMatrix<i64>> = j_exact.iter().map(|j| j.transpose()).collect();
    let omega_ops_exact: Vec<GaussMat> =
        omega_forms_exact.iter().map(|f| module.two_form_action_exact(f)).collect();

    let n = module.spinor_dim();
    let mut omega_exact = GaussMat::identity(n).scale(6 * m as i64, 0);
    for op in &omega_ops_exact {
        omega_exact = omega_exact.add(&op.mul(op));
    }

    let omega_ops: Vec<SpinorOperator> =
        omega_ops_exact.iter().map(|g| SpinorOperator { mat: g.to_cmat() }).collect();
    let omega = SpinorOperator { mat: omega_exact.to_cmat() };

    let mus: Vec<i64> = (0..=m as i64).map(|r| 6 * m as i64 - 4 * r * (r + 2)).collect();

    // Lagrange interpolation in Omega over the distinct mu_r, then Hermitian
    // symmetrization. The mu gaps are >= 8, so this is well conditioned.
    let mut projectors = Vec::with_capacity(m + 1);
    for r in 0..=m {
        let mut p = CMat::identity(n, n);
        for s in 0..=m {
            if s == r {
                continue;
            }
            let factor = (&omega.mat - CMat::identity(n, n).scale(mus[s] as f64))
                .scale(1.0 / (mus[r] - mus[s]) as f64);
            p = &p * factor;
        }
        let herm = (&p + p.adjoint()).scale(0.5);
        projectors.push(SpinorOperator { mat: herm });
    }

    Ok(QKFiber { m, module, j_exact, j_real, omega_forms, omega_ops, omega_exact, omega, projectors, mus })
}

impl QKFiber {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        4 * self.m
    }

    pub fn spinor_dim(&self) -> usize {
        self.module.spinor_dim()
    }

    pub fn module(&self) -> &CliffordModule {
        &self.module
    }

    pub fn j(&self, alpha: usize) -> &RMat {
        &self.j_real[alpha]
    }

    pub fn j_exact(&self, alpha: usize) -> &DMatrix<i64> {
        &self.j_exact[alpha]
    }

    pub fn omega_form(&self, alpha: usize) -> &RMat {
        &self.omega_forms[alpha]
    }

    pub fn omega_op(&self, alpha: usize) -> &SpinorOperator {
        &self.omega_ops[alpha]
    }

    pub fn omega(&self) -> &SpinorOperator {
        &self.omega
    }

    /// Eigenvalues `mu_r = 6m - 4r(r+2)`, `r = 0..=m`.
    pub fn mus(&self) -> &[i64] {
        &self.mus
    }

    /// Eigen-projectors `P_0 ..= P_m` built by polynomial interpolation.
    pub fn eigenprojectors(&self) -> &[SpinorOperator] {
        &self.projectors
    }

    pub fn projector(&self, r: usize) -> Result<&SpinorOperator> {
        self.projectors.get(r).ok_or(Error::GradeOutOfRange { r, m: self.m })
    }

    /// Theoretical dimension of `S_r` (also `trace P_r`; cross-checked in the
    /// verification suites against the Weyl formula and the eigensolver).
    pub fn s_dim(&self, r: usize) -> Result<usize> {
        let p = self.projector(r)?;
        let tr: f64 = (0..p.dim()).map(|i| p.mat[(i, i)].re).sum();
        Ok(libm::round(tr) as usize)
    }

    /// Orthonormal basis of `S_r`, as columns, from the projector's spectrum.
    pub fn s_basis(&self, r: usize) -> Result<CMat> {
        let p = self.projector(r)?;
        let d = self.s_dim(r)?;
        Ok(linalg::projector_range_basis(&p.mat, d))
    }

    /// Measured spectrum of Omega: (eigenvalue cluster mean, multiplicity),
    /// ascending. Oracle route, independent of the interpolation projectors.
    pub fn omega_spectrum(&self) -> Vec<(f64, usize)> {
        let (vals, _) = hermitian_eigen(&self.omega.mat);
        cluster_eigenvalues(&vals, 1e-6)
    }

    /// All nine quaternion products against `-delta + eps J`, exact.
    pub fn quaternion_relations_exact(&self) -> bool {
        let q = self.q();
        let eps = |a: usize, b: usize, c: usize| -> i64 {
            match (a, b, c) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
                _ => 0,
            }
        };
        for a in 0..3 {
            for b in 0..3 {
                let mut expect = DMatrix::<i64>::zeros(q, q);
                if a == b {
                    for i in 0..q {
                        expect[(i, i)] = -1;
                    }
                }
                for c in 0..3 {
                    let e = eps(a, b, c);
                    if e != 0 {
                        expect += self.j_exact[c].scale(e);
                    }
                }
                if &self.j_exact[a] * &self.j_exact[b] != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Each `J_a` orthogonal (`J^T J = Id`) and skew (`J^T = -J`), exact.
    pub fn j_metric_compatible_exact(&self) -> bool {
        let q = self.q();
        let id = DMatrix::<i64>::identity(q, q);
        self.j_exact.iter().all(|j| {
            j.transpose() * j == id && j.transpose() == -j.clone()
        })
    }

    /// The independent 4-form route: assemble `Σ_a Omega_a ∧ Omega_a` as a
    /// genuine 4-form and act by `Σ_{i<j<k<l} w_ijkl g_i g_j g_k g_l`, in
    /// exact integer arithmetic. Equals [`QKFiber::omega`] identically.
    pub fn four_form_action_exact(&self) -> GaussMat {
        let q = self.q();
        let n = self.spinor_dim();
        let mut acc = GaussMat::zeros(n);
        let forms: Vec<&DMatrix<i64>> = self.j_exact.iter().collect();
        for i in 0..q {
            for j in (i + 1)..q {
                for k in (j + 1)..q {
                    for l in (k + 1)..q {
                        let mut coeff = 0i64;
                        for jm in &forms {
                            // (Omega_a)_xy = (J_a)_yx
                            let a = |x: usize, y: usize| jm[(y, x)];
                            coeff += 2 * (a(i, j) * a(k, l) - a(i, k) * a(j, l) + a(i, l) * a(j, k));
                        }
                        if coeff != 0 {
                            let prod = self
                                .module
                                .gamma_exact(i)
                                .mul(self.module.gamma_exact(j))
                                .mul(self.module.gamma_exact(k))
                                .mul(self.module.gamma_exact(l));
                            acc = acc.add(&prod.scale(coeff, 0));
                        }
                    }
                }
            }
        }
        acc
    }

    pub fn omega_exact(&self) -> &GaussMat {
        &self.omega_exact
    }

    /// Distance of `v` from `S_r`, for membership checks.
    pub fn subspace_deviation(&self, r: usize, v: &crate::CVec) -> Result<f64> {
        let p = self.projector(r)?;
        let residual = v - &p.mat * v;
        Ok(residual.norm() / v.norm().max(1.0))
    }
}

/// Convenience: complexified `J_a` for building operators on `Q^C`.
pub fn j_complex(fiber: &QKFiber, alpha: usize) -> CMat {
    CMat::from_fn(fiber.q(), fiber.q(), |i, j| Cx::new(fiber.j(alpha)[(i, j)], 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator_norm, max_abs};

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(build_qk_fiber(0), Err(Error::QuaternionicDimOutOfRange(0))));
        assert!(matches!(build_qk_fiber(5), Err(Error::QuaternionicDimOutOfRange(5))));
    }

    #[test]
    fn m1_quaternion_products() {
        let f = build_qk_fiber(1).unwrap();
        assert!(f.quaternion_relations_exact());
        assert!(f.j_metric_compatible_exact());
        // J1 J2 = J3 and J1^2 = -Id, exactly.
        assert_eq!(f.j_exact(0) * f.j_exact(1), f.j_exact(2).clone());
        assert_eq!(f.j_exact(0) * f.j_exact(0), -DMatrix::<i64>::identity(4, 4));
    }

    #[test]
    fn m2_all_products_integer_exact() {
        let f = build_qk_fiber(2).unwrap();
        assert!(f.quaternion_relations_exact());
    }

    #[test]
    fn omega_spectrum_m1() {
        let f = build_qk_fiber(1).unwrap();
        let spec = f.omega_spectrum();
        let vals: Vec<i64> = spec.iter().map(|c| libm::round(c.0) as i64).collect();
        let mults: Vec<usize> = spec.iter().map(|c| c.1).collect();
        assert_eq!(vals, alloc::vec![-6, 6]);
        assert_eq!(mults, alloc::vec![2, 2]);
        for (mean, _) in &spec {
            assert!((mean - libm::round(*mean)).abs() < 1e-9);
        }
    }

    #[test]
    fn omega_spectrum_m2_with_multiplicities() {
        let f = build_qk_fiber(2).unwrap();
        let spec = f.omega_spectrum();
        let pairs: Vec<(i64, usize)> =
            spec.iter().map(|c| (libm::round(c.0) as i64, c.1)).collect();
        assert_eq!(pairs, alloc::vec![(-20, 3), (0, 8), (12, 5)]);
        let total: usize = spec.iter().map(|c| c.1).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn projector_invariants_m2() {
        let f = build_qk_fiber(2).unwrap();
        let n = f.spinor_dim();
        let mut sum = CMat::zeros(n, n);
        for p in f.eigenprojectors() {
            sum += &p.mat;
            assert!(p.is_hermitian(1e-10));
        }
        assert!((sum - CMat::identity(n, n)).norm() < 1e-10);
        for r in 0..=2usize {
            for s in 0..=2usize {
                let prod = &f.projector(r).unwrap().mat * &f.projector(s).unwrap().mat;
                let expect = if r == s { f.projector(r).unwrap().mat.clone() } else { CMat::zeros(n, n) };
                assert!((prod - expect).norm() < 1e-10, "P_{r} P_{s}");
            }
        }
        // P0 Omega P0 = mu_0 P0 (here at m=2: 12 P0).
        let p0 = &f.projector(0).unwrap().mat;
        let lhs = p0 * &f.omega().mat * p0;
        assert!((lhs - p0.scale(12.0)).norm() < 1e-9);
        assert_eq!(f.s_dim(0).unwrap(), 5);
        assert_eq!(f.s_dim(1).unwrap(), 8);
        assert_eq!(f.s_dim(2).unwrap(), 3);
    }

    #[test]
    fn m1_projector_eigen_relation() {
        let f = build_qk_fiber(1).unwrap();
        let p0 = &f.projector(0).unwrap().mat;
        let lhs = p0 * &f.omega().mat * p0;
        assert!((lhs - p0.scale(6.0)).norm() < 1e-10);
    }

    #[test]
    fn four_form_wedge_route_matches_exactly() {
        for m in 1..=2 {
            let f = build_qk_fiber(m).unwrap();
            assert_eq!(f.four_form_action_exact(), f.omega_exact().clone(), "m={m}");
        }
    }

    #[test]
    fn omega_commutes_with_each_kaehler_action() {
        let f = build_qk_fiber(2).unwrap();
        for a in 0..3 {
            let c = commutator_norm(&f.omega().mat, &f.omega_op(a).mat);
            assert!(c < 1e-10, "[Omega, Omega_{a}.] = {c}");
        }
    }

    #[test]
    fn s_basis_orthonormal_and_in_eigenspace() {
        let f = build_qk_fiber(2).unwrap();
        for r in 0..=2usize {
            let u = f.s_basis(r).unwrap();
            let d = f.s_dim(r).unwrap();
            assert_eq!(u.ncols(), d);
            let gram = u.adjoint() * &u;
            assert!((gram - CMat::identity(d, d)).norm() < 1e-10);
            let resid = &f.omega().mat * &u - u.scale(f.mus()[r] as f64);
            assert!(max_abs(&resid) < 1e-9);
        }
    }
}
