//! Exact matrices over the Gaussian integers.
//!
//! The gamma matrices, the quaternionic structure matrices, and everything
//! assembled from them by products and integer-weighted sums have entries in
//! `Z[i]`, so the defining relations can be checked with integer arithmetic
//! before any floating point enters. Entries stay tiny (bounded by small
//! multiples of the fiber dimension); `i64` components are ample.

use alloc::vec;
use alloc::vec::Vec;

use crate::{CMat, Cx};

/// Dense square matrix with Gaussian-integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussMat {
    n: usize,
    re: Vec<i64>,
    im: Vec<i64>,
}

impl GaussMat {
    pub fn zeros(n: usize) -> Self {
        GaussMat { n, re: vec![0; n * n], im: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.re[i * n + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> (i64, i64) {
        (self.re[i * self.n + j], self.im[i * self.n + j])
    }

    pub fn set(&mut self, i: usize, j: usize, re: i64, im: i64) {
        self.re[i * self.n + j] = re;
        self.im[i * self.n + j] = im;
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().all(|&x| x == 0) && self.im.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let (ar, ai) = self.get(i, k);
                if ar == 0 && ai == 0 {
                    continue;
                }
                for j in 0..n {
                    let (br, bi) = other.get(k, j);
                    if br == 0 && bi == 0 {
                        continue;
                    }
                    out.re[i * n + j] += ar * br - ai * bi;
                    out.im[i * n + j] += ar * bi + ai * br;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (x, y) in out.re.iter_mut().zip(&other.re) {
            *x += y;
        }
        for (x, y) in out.im.iter_mut().zip(&other.im) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (x, y) in out.re.iter_mut().zip(&other.re) {
            *x -= y;
        }
        for (x, y) in out.im.iter_mut().zip(&other.im) {
            *x -= y;
        }
        out
    }

    /// Multiply every entry by the Gaussian integer `s_re + i s_im`.
    pub fn scale(&self, s_re: i64, s_im: i64) -> Self {
        let mut out = Self::zeros(self.n);
        for idx in 0..self.n * self.n {
            out.re[idx] = s_re * self.re[idx] - s_im * self.im[idx];
            out.im[idx] = s_re * self.im[idx] + s_im * self.re[idx];
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let (r, im) = self.get(i, j);
                out.set(j, i, r, -im);
            }
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (n, p) = (self.n, other.n);
        let mut out = Self::zeros(n * p);
        for i in 0..n {
            for j in 0..n {
                let (ar, ai) = self.get(i, j);
                if ar == 0 && ai == 0 {
                    continue;
                }
                for k in 0..p {
                    for l in 0..p {
                        let (br, bi) = other.get(k, l);
                        if br == 0 && bi == 0 {
                            continue;
                        }
                        out.set(i * p + k, j * p + l, ar * br - ai * bi, ar * bi + ai * br);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> (i64, i64) {
        let mut tr = (0, 0);
        for i in 0..self.n {
            let (r, im) = self.get(i, i);
            tr.0 += r;
            tr.1 += im;
        }
        tr
    }

    pub fn to_cmat(&self) -> CMat {
        CMat::from_fn(self.n, self.n, |i, j| {
            let (r, im) = self.get(i, j);
            Cx::new(r as f64, im as f64)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pauli_x() -> GaussMat {
        let mut m = GaussMat::zeros(2);
        m.set(0, 1, 1, 0);
        m.set(1, 0, 1, 0);
        m
    }

    fn pauli_y() -> GaussMat {
        let mut m = GaussMat::zeros(2);
        m.set(0, 1, 0, -1);
        m.set(1, 0, 0, 1);
        m
    }

    #[test]
    fn products_match_pauli_algebra() {
        let (x, y) = (pauli_x(), pauli_y());
        // x*y = i z
        let xy = x.mul(&y);
        let mut iz = GaussMat::zeros(2);
        iz.set(0, 0, 0, 1);
        iz.set(1, 1, 0, -1);
        assert_eq!(xy, iz);
        assert_eq!(x.mul(&x), GaussMat::identity(2));
    }

    #[test]
    fn adjoint_and_scale() {
        let y = pauli_y();
        assert_eq!(y.adjoint(), y);
        let iy = y.scale(0, 1);
        assert_eq!(iy.adjoint(), iy.scale(-1, 0));
    }

    #[test]
    fn kron_dimensions_and_identity() {
        let id2 = GaussMat::identity(2);
        let k = id2.kron(&pauli_x());
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(0, 1), (1, 0));
        assert_eq!(k.get(2, 3), (1, 0));
        assert_eq!(k.get(0, 3), (0, 0));
    }
}
