//! Exact polynomial arithmetic over the rationals and Gröbner-basis-backed
//! ideal operations.

mod groebner;
mod ideal;
mod monomial;
mod polynomial;
mod ring;

pub use groebner::{groebner_basis, normal_form};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
pub use ring::Ring;

use crate::error::Result;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> bool {
    ideal.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    a.equals(b)
}

pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Ideal {
    ideal.saturate(f)
}

pub fn eliminate(ideal: &Ideal, vars: &[&str]) -> Result<Ideal> {
    ideal.eliminate_named(vars)
}

pub fn exact_divide(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.exact_divide(g)
}
