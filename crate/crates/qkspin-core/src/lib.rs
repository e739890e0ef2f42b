//! Fiberwise spinor algebra of quaternion-Kähler geometry.
//!
//! Everything here lives on a single flat fiber `R^{4m}` carrying three
//! anticommuting complex structures: the complex Clifford module and its
//! vector/2-form actions ([`clifford`]), the fundamental 4-form with its
//! eigenspace splitting ([`qk`]), the six-component isotypic decomposition of
//! `Q ⊗ S_r` with its Schur constants and norm identities ([`decomp`]),
//! Weyl-formula dimension cross-checks ([`weyl`]), the twistor operator and
//! the limiting-case constraint algebra ([`limit`]), and exact-rational
//! certification of the eigenvalue-bound coefficient algebra ([`bound`]).
//!
//! Each verification produces [`report::CheckRow`] records; [`suites`] groups
//! them into runnable suites. The crate is `no_std`-compatible (`alloc`
//! required); disable the default `std` feature for embedded use.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bound;
pub mod clifford;
pub mod conventions;
pub mod decomp;
pub mod gauss;
pub mod limit;
pub mod linalg;
pub mod qk;
pub mod report;
pub mod rng;
pub mod suites;
pub mod weyl;

use alloc::string::String;
use core::fmt;

/// Complex scalar used throughout the numeric layer.
pub type Cx = num_complex::Complex<f64>;
/// Dense complex matrix.
pub type CMat = nalgebra::DMatrix<Cx>;
/// Dense complex column vector.
pub type CVec = nalgebra::DVector<Cx>;
/// Dense real matrix.
pub type RMat = nalgebra::DMatrix<f64>;

/// Largest fiber dimension the Clifford constructor accepts (q = 4m = 16).
pub const MAX_FIBER_DIM: usize = 16;
/// Largest quaternionic dimension the fiber constructor accepts.
pub const MAX_QUATERNIONIC_DIM: usize = MAX_FIBER_DIM / 4;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Clifford algebras are built for even fiber dimension only.
    OddFiberDimension(usize),
    /// Fiber dimension outside the supported range.
    FiberDimensionOutOfRange(usize),
    /// Quaternionic dimension outside the supported range.
    QuaternionicDimOutOfRange(usize),
    /// Vector length does not match the fiber dimension.
    LengthMismatch { expected: usize, got: usize },
    /// A 2-form argument was not antisymmetric.
    NotAntisymmetric { deviation: f64 },
    /// Matrix dimensions inconsistent with the module.
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },
    /// Eigenbundle index outside 0..=m.
    GradeOutOfRange { r: usize, m: usize },
    /// Argument does not lie in the requested eigenbundle slice.
    NotInSubspace { deviation: f64 },
    /// Weight is not weakly decreasing and nonnegative.
    NonDominantWeight(String),
    /// Joint diagonalization could not separate the expected components.
    DegenerateSplit(String),
    /// Rational coefficient requested at a pole (r = m) or out of range.
    CoefficientOutOfRange { m: i64, r: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddFiberDimension(q) => write!(f, "fiber dimension {q} is odd"),
            Error::FiberDimensionOutOfRange(q) => {
                write!(f, "fiber dimension {q} outside 2..={MAX_FIBER_DIM}")
            }
            Error::QuaternionicDimOutOfRange(m) => {
                write!(f, "quaternionic dimension {m} outside 1..={MAX_QUATERNIONIC_DIM}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "vector length {got}, expected {expected}")
            }
            Error::NotAntisymmetric { deviation } => {
                write!(f, "matrix is not antisymmetric (deviation {deviation:.3e})")
            }
            Error::ShapeMismatch { expected, got } => {
                write!(f, "matrix shape {got:?}, expected {expected:?}")
            }
            Error::GradeOutOfRange { r, m } => write!(f, "grade r={r} outside 0..={m}"),
            Error::NotInSubspace { deviation } => {
                write!(f, "argument outside the requested eigenbundle (deviation {deviation:.3e})")
            }
            Error::NonDominantWeight(w) => write!(f, "weight {w} is not dominant"),
            Error::DegenerateSplit(detail) => write!(f, "isotypic split degenerate: {detail}"),
            Error::CoefficientOutOfRange { m, r } => {
                write!(f, "coefficients undefined for m={m}, r={r} (need m >= 1, 0 <= r <= m-1)")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
