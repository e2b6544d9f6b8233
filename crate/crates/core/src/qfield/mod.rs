//! Exact arithmetic in `Q(q)`.

mod field;
mod parse;
mod poly;
mod ratfunc;

pub use field::{Field, Rational};
pub use poly::IntPoly;
pub use ratfunc::RatFunc;

use crate::error::{invalid, Result};

/// Quantum integer `[i] = 1 + q^2 + ... + q^{2(i-1)}`.
pub fn quantum_integer(i: i64) -> Result<RatFunc> {
    if i <= 0 {
        return invalid(format!("quantum integer needs i >= 1, got {i}"));
    }
    let mut coeffs = vec![num_bigint::BigInt::from(0); 2 * (i as usize) - 1];
    for c in coeffs.iter_mut().step_by(2) {
        *c = 1.into();
    }
    Ok(RatFunc::from_poly(IntPoly::new(coeffs)))
}

/// `[k]! = [1][2]...[k]`, with `[0]! = 1`.
pub fn quantum_factorial(k: usize) -> RatFunc {
    (1..=k as i64).fold(RatFunc::one(), |acc, i| acc.mul(&quantum_integer(i).expect("i >= 1")))
}

/// Exact value of `f` at the rational point `q0`.
pub fn specialize(f: &RatFunc, q0: &Rational) -> Result<Rational> {
    f.specialize(q0)
}

/// Parse an integer or fraction such as `-3/4` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let f: RatFunc = s.parse()?;
    if !f.is_constant() {
        return Err(crate::Error::Parse(format!("{s:?} is not a rational constant")));
    }
    f.specialize(&Rational::from_integer(0.into()))
}
