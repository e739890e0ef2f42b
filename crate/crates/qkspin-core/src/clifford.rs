//! Complex Clifford module of an even-dimensional Euclidean fiber.
//!
//! Conventions (see [`crate::conventions`]): generators satisfy
//! `γ_i γ_j + γ_j γ_i = -2 δ_ij Id`, each `γ_i` is skew-Hermitian and unitary,
//! and a 2-form `F` acts as `Σ_{i<j} F_ij γ_i γ_j`. Generators come from the
//! tensor-product (Jordan–Wigner) recursion, so every entry is one of
//! `{0, ±1, ±i}` and the defining relations are checked in exact integer
//! arithmetic at construction time.

use alloc::vec::Vec;

use crate::gauss::GaussMat;
use crate::{CMat, CVec, Cx, Error, RMat, Result, MAX_FIBER_DIM};

/// Operator on the `2^{q/2}`-dimensional spinor space.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorOperator {
    pub mat: CMat,
}

impl SpinorOperator {
    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn adjoint(&self) -> SpinorOperator {
        SpinorOperator { mat: self.mat.adjoint() }
    }

    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        (&self.mat + self.mat.adjoint()).norm() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (&self.mat - self.mat.adjoint()).norm() <= tol
    }
}

/// Generators of the rank-`q` complex Clifford algebra on `2^{q/2}` spinors,
/// kept both as exact Gaussian-integer matrices and as complex floats.
#[derive(Debug, Clone)]
pub struct CliffordModule {
    q: usize,
    exact: Vec<GaussMat>,
    gammas: Vec<CMat>,
}

/// Build the Clifford module for even `q` with `2 <= q <= 16`.
pub fn build_gamma(q: usize) -> Result<CliffordModule> {
    if q % 2 != 0 {
        return Err(Error::OddFiberDimension(q));
    }
    if q < 2 || q > MAX_FIBER_DIM {
        return Err(Error::FiberDimensionOutOfRange(q));
    }

    // Pauli blocks as Gaussian-integer matrices.
    let mut s1 = GaussMat::zeros(2);
    s1.set(0, 1, 1, 0);
    s1.set(1, 0, 1, 0);
    let mut s2 = GaussMat::zeros(2);
    s2.set(0, 1, 0, -1);
    s2.set(1, 0, 0, 1);
    let mut s3 = GaussMat::zeros(2);
    s3.set(0, 0, 1, 0);
    s3.set(1, 1, -1, 0);
    let id2 = GaussMat::identity(2);

    let pairs = q / 2;
    let mut exact = Vec::with_capacity(q);
    for j in 0..pairs {
        for odd in [true, false] {
            let mut acc = GaussMat::identity(1);
            for t in 0..pairs {
                let factor = if t < j {
                    &s3
                } else if t == j {
                    if odd {
                        &s1
                    } else {
                        &s2
                    }
                } else {
                    &id2
                };
                acc = acc.kron(factor);
            }
            // i * (Hermitian, square = Id) is skew-Hermitian with square -Id.
            exact.push(acc.scale(0, 1));
        }
    }

    let gammas = exact.iter().map(GaussMat::to_cmat).collect();
    Ok(CliffordModule { q, exact, gammas })
}

impl CliffordModule {
    pub fn q(&self) -> usize {
        self.q
    }

    /// Dimension of the spinor space, `2^{q/2}`.
    pub fn spinor_dim(&self) -> usize {
        1 << (self.q / 2)
    }

    pub fn gamma(&self, i: usize) -> &CMat {
        &self.gammas[i]
    }

    pub fn gamma_exact(&self, i: usize) -> &GaussMat {
        &self.exact[i]
    }

    /// `γ_i γ_j + γ_j γ_i + 2 δ_ij Id = 0` for all pairs, in integer arithmetic.
    pub fn anticommutation_exact(&self) -> bool {
        let id = GaussMat::identity(self.spinor_dim());
        for i in 0..self.q {
            for j in 0..self.q {
                let mut acc = self.exact[i].mul(&self.exact[j]).add(&self.exact[j].mul(&self.exact[i]));
                if i == j {
                    acc = acc.add(&id.scale(2, 0));
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Each generator is skew-Hermitian, in integer arithmetic.
    pub fn skew_hermitian_exact(&self) -> bool {
        self.exact.iter().all(|g| g.adjoint().add(g).is_zero())
    }

    /// Each generator is unitary (`γ_i† γ_i = Id`), in integer arithmetic.
    pub fn unitary_exact(&self) -> bool {
        let id = GaussMat::identity(self.spinor_dim());
        self.exact.iter().all(|g| g.adjoint().mul(g) == id)
    }

    /// Clifford action of a vector: `Σ_i v_i γ_i`.
    pub fn vector_action(&self, v: &CVec) -> Result<SpinorOperator> {
        if v.len() != self.q {
            return Err(Error::LengthMismatch { expected: self.q, got: v.len() });
        }
        let n = self.spinor_dim();
        let mut mat = CMat::zeros(n, n);
        for i in 0..self.q {
            if v[i] != Cx::new(0.0, 0.0) {
                mat += &self.gammas[i] * v[i];
            }
        }
        Ok(SpinorOperator { mat })
    }

    /// Clifford action of a real vector given as a slice.
    pub fn vector_action_real(&self, v: &[f64]) -> Result<SpinorOperator> {
        let cv = CVec::from_iterator(v.len(), v.iter().map(|&x| Cx::new(x, 0.0)));
        self.vector_action(&cv)
    }

    /// Clifford action of a real antisymmetric 2-form: `Σ_{i<j} F_ij γ_i γ_j`.
    pub fn two_form_action(&self, f: &RMat) -> Result<SpinorOperator> {
        if f.shape() != (self.q, self.q) {
            return Err(Error::ShapeMismatch { expected: (self.q, self.q), got: f.shape() });
        }
        let dev = (f + f.transpose()).norm();
        if dev > 1e-12 {
            return Err(Error::NotAntisymmetric { deviation: dev });
        }
        let n = self.spinor_dim();
        let mut mat = CMat::zeros(n, n);
        for i in 0..self.q {
            for j in (i + 1)..self.q {
                if f[(i, j)] != 0.0 {
                    mat += (&self.gammas[i] * &self.gammas[j]) * Cx::new(f[(i, j)], 0.0);
                }
            }
        }
        Ok(SpinorOperator { mat })
    }

    /// Exact 2-form action for an integer antisymmetric form.
    pub fn two_form_action_exact(&self, f: &nalgebra::DMatrix<i64>) -> GaussMat {
        let n = self.spinor_dim();
        let mut acc = GaussMat::zeros(n);
        for i in 0..self.q {
            for j in (i + 1)..self.q {
                if f[(i, j)] != 0 {
                    acc = acc.add(&self.exact[i].mul(&self.exact[j]).scale(f[(i, j)], 0));
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigen, max_abs};
    use crate::rng::SplitRng;

    #[test]
    fn rejects_bad_dimension() {
        assert_eq!(build_gamma(5).unwrap_err(), Error::OddFiberDimension(5));
        assert_eq!(build_gamma(18).unwrap_err(), Error::FiberDimensionOutOfRange(18));
        assert_eq!(build_gamma(0).unwrap_err(), Error::FiberDimensionOutOfRange(0));
    }

    #[test]
    fn q4_relations_exact() {
        let module = build_gamma(4).unwrap();
        assert_eq!(module.spinor_dim(), 4);
        assert!(module.anticommutation_exact());
        assert!(module.skew_hermitian_exact());
        assert!(module.unitary_exact());

        // gamma_1 gamma_2 + gamma_2 gamma_1 = 0
        let g1g2 = module.gamma_exact(0).mul(module.gamma_exact(1));
        let g2g1 = module.gamma_exact(1).mul(module.gamma_exact(0));
        assert!(g1g2.add(&g2g1).is_zero());
        // gamma_1^2 = -Id
        let sq = module.gamma_exact(0).mul(module.gamma_exact(0));
        assert_eq!(sq, GaussMat::identity(4).scale(-1, 0));
    }

    #[test]
    fn q8_trace_orthogonality() {
        // Oracle: direct multiply-and-trace over all 64 pairs.
        let module = build_gamma(8).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let tr = module.gamma_exact(i).mul(module.gamma_exact(j)).trace();
                let expected = if i == j { (-16, 0) } else { (0, 0) };
                assert_eq!(tr, expected, "trace(g_{i} g_{j})");
            }
        }
    }

    #[test]
    fn vector_action_basis_and_square() {
        let module = build_gamma(4).unwrap();
        let e1 = module.vector_action_real(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(&e1.mat, module.gamma(0));

        let v = module.vector_action_real(&[1.0, 1.0, 0.0, 0.0]).unwrap();
        let sq = &v.mat * &v.mat + CMat::identity(4, 4).scale(2.0);
        assert!(max_abs(&sq) < 1e-14);

        let bad = module.vector_action_real(&[1.0, 0.0]);
        assert!(matches!(bad, Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn vector_action_square_random_q8() {
        let module = build_gamma(8).unwrap();
        let n = module.spinor_dim();
        let mut rng = SplitRng::new(42).derive("clifford.test.square", 8, 0);
        for _ in 0..20 {
            let v: alloc::vec::Vec<f64> = (0..8).map(|_| rng.standard_normal()).collect();
            let norm2: f64 = v.iter().map(|x| x * x).sum();
            let op = module.vector_action_real(&v).unwrap();
            let resid = &op.mat * &op.mat + CMat::identity(n, n).scale(norm2);
            assert!(resid.norm() < 1e-12);
        }
    }

    #[test]
    fn vector_action_isometry() {
        let module = build_gamma(4).unwrap();
        let mut rng = SplitRng::new(42).derive("clifford.test.isometry", 4, 0);
        let v: alloc::vec::Vec<f64> = (0..4).map(|_| rng.standard_normal()).collect();
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        let op = module.vector_action_real(&v).unwrap();
        let phi = rng.complex_gaussian_vec(4);
        let psi = rng.complex_gaussian_vec(4);
        let lhs = (&op.mat * &phi).dotc(&(&op.mat * &psi));
        let rhs = phi.dotc(&psi) * norm2;
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn two_form_definition_case() {
        let module = build_gamma(4).unwrap();
        let mut f = RMat::zeros(4, 4);
        f[(0, 1)] = 1.0;
        f[(1, 0)] = -1.0;
        let op = module.two_form_action(&f).unwrap();
        let expected = module.gamma(0) * module.gamma(1);
        assert!((op.mat - expected).norm() < 1e-15);

        assert!(module.two_form_action(&RMat::zeros(4, 4)).unwrap().mat.iter().all(|z| z.norm() == 0.0));

        let mut bad = RMat::zeros(4, 4);
        bad[(0, 1)] = 1.0;
        assert!(matches!(module.two_form_action(&bad), Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn two_form_symplectic_spectrum() {
        // Oracle: dense eigensolver; i F acts with integer spectrum {0,0,±2}.
        let module = build_gamma(4).unwrap();
        let mut f = RMat::zeros(4, 4);
        f[(0, 1)] = 1.0;
        f[(1, 0)] = -1.0;
        f[(2, 3)] = 1.0;
        f[(3, 2)] = -1.0;
        let op = module.two_form_action(&f).unwrap();
        assert!(op.is_skew_hermitian(1e-14));
        let herm = &op.mat * Cx::new(0.0, -1.0);
        let (vals, _) = hermitian_eigen(&herm);
        let rounded: alloc::vec::Vec<i64> = vals.iter().map(|v| v.round() as i64).collect();
        assert_eq!(rounded, alloc::vec![-2, 0, 0, 2]);
        for (v, r) in vals.iter().zip(&rounded) {
            assert!((v - *r as f64).abs() < 1e-12);
        }
    }
}
