//! Exact integer arithmetic and sparse multivariate polynomial algebra.

mod expr;
mod poly;
mod symmetric;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use thiserror::Error;

pub use expr::Expr;
pub use poly::{MultiPoly, Var};
pub use symmetric::{
    decompose_elementary, is_symmetric_under, violating_transposition, ElemSymBasis,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("not symmetric: swapping `{left}` and `{right}` changes the polynomial")]
    NotSymmetric { left: String, right: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The commutative-ring surface shared by exact integers and polynomials, so
/// each parametric family is written once and evaluated either numerically or
/// symbolically.
pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn power(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_i64(1);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for num_rational::BigRational {
    fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }
}
