use num_traits::Zero;

use super::assignment::Assignment;
use super::expr::Gen;
use crate::error::{invalid, Result};
use crate::matrix::Matrix;
use crate::qfield::{quantum_factorial, Field, RatFunc, Rational};

/// Where to evaluate the parameter conditions.
#[derive(Clone, Debug, PartialEq)]
pub enum QPoint {
    /// `q` an indeterminate.
    Symbolic,
    At(Rational),
}

impl QPoint {
    fn check(&self) -> Result<()> {
        match self {
            QPoint::At(q0) if Zero::is_zero(q0) => invalid("q must be nonzero"),
            _ => Ok(()),
        }
    }

    fn is_zero(&self, f: &RatFunc) -> Result<bool> {
        match self {
            QPoint::Symbolic => Ok(f.is_zero()),
            QPoint::At(q0) => Ok(Zero::is_zero(&f.specialize(q0)?)),
        }
    }
}

/// `q^{2d} a != b` for all `-k < d < k`.
fn separated(a: &RatFunc, b: &RatFunc, k: usize, at: &QPoint) -> Result<bool> {
    let k = k as i64;
    for d in 1 - k..k {
        if at.is_zero(&RatFunc::q_pow(2 * d).mul(a).sub(b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Semisimplicity of the cyclotomic Hecke algebra with parameters `u`.
pub fn semisimple_cyclotomic(k: usize, u: &[RatFunc], at: &QPoint) -> Result<bool> {
    at.check()?;
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if !separated(&u[i], &u[j], k, at)? {
                return Ok(false);
            }
        }
    }
    Ok(!at.is_zero(&quantum_factorial(k))?)
}

/// Semisimplicity of the two-parameter quotient algebra.
pub fn semisimple_a(k: usize, u1: &RatFunc, u2: &RatFunc, at: &QPoint) -> Result<bool> {
    at.check()?;
    if at.is_zero(u2)? {
        return invalid("u2 must be nonzero");
    }
    Ok(separated(u1, u2, k, at)? && !at.is_zero(&quantum_factorial(k))?)
}

/// Semisimplicity of the q-rook monoid algebra.
pub fn semisimple_rook(k: usize, at: &QPoint) -> Result<bool> {
    at.check()?;
    Ok(!at.is_zero(&quantum_factorial(k))?)
}

/// Two-dimensional module with `X_1` a Jordan block at `u1` and every
/// `T_i = q`.
pub fn indecomposable_witness(k: usize, u1: &RatFunc) -> Result<Assignment<RatFunc>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let mut a = Assignment::new(2);
    a.insert(
        Gen::x(1),
        Matrix::from_rows(vec![
            vec![u1.clone(), RatFunc::one()],
            vec![RatFunc::zero(), u1.clone()],
        ]),
    )?;
    for i in 1..k {
        a.insert(Gen::t(i), Matrix::scalar(2, RatFunc::q()))?;
    }
    Ok(a)
}

/// For a 2-dimensional module in which the first basis vector spans an
/// invariant line, whether some other line is invariant too.
///
/// Returns `None` when the first basis line is not invariant.
pub fn invariant_line_has_complement<F: Field>(a: &Assignment<F>) -> Result<Option<bool>> {
    if a.dim() != 2 {
        return invalid("only 2-dimensional modules are supported");
    }
    if a.matrices().values().any(|m| !m.get(1, 0).is_zero()) {
        return Ok(None);
    }
    // span(t e_1 + e_2) is invariant under M iff (m22 - m11) t = m12.
    let mut t: Option<F> = None;
    for m in a.matrices().values() {
        let slope = m.get(1, 1).minus(m.get(0, 0));
        let m12 = m.get(0, 1);
        if slope.is_zero() {
            if !m12.is_zero() {
                return Ok(Some(false));
            }
            continue;
        }
        let tm = m12.quotient(&slope)?;
        match &t {
            Some(prev) if *prev != tm => return Ok(Some(false)),
            _ => t = Some(tm),
        }
    }
    Ok(Some(true))
}
