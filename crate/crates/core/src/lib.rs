//! Polynomial identities for the bilinear operation of Lie-Yamaguti algebras.
//!
//! The crate enumerates binary-ternary association types, lifts the defining
//! identities to higher degrees, and decides which consequences involve the
//! bracket alone by row reduction in each irreducible representation of the
//! symmetric group.

pub mod error;

pub mod exactla;
pub mod freealg;
pub mod idfile;
pub mod liftgen;
pub mod evallab;
pub mod pipeline;


pub mod perm;
pub mod symrep;



pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
