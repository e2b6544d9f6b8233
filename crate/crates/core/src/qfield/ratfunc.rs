use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rational};
use super::parse;
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Element of `Q(q)` in canonical form.
///
/// `num/den` with `gcd(num, den) = 1` over `Q[q]`, the two contents sharing no
/// common integer factor, and `den` having a positive leading coefficient.
/// Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(IntPoly::constant(n.into()))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::from_parts_unchecked(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::from_parts_unchecked(p, IntPoly::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::from_poly(IntPoly::q())
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    /// `c * q^e`
    pub fn monomial(c: &Rational, e: i64) -> Self {
        Self::from_rational(c).mul(&Self::q_pow(e))
    }

    /// `q - q^{-1}`, the constant of the Hecke quadratic relation.
    pub fn q_minus_qinv() -> Self {
        Self::q().sub(&Self::q_pow(-1))
    }

    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts_unchecked(num, den))
    }

    fn from_parts_unchecked(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Self::normalize_content(num, den)
    }

    /// Fix the integer scaling once `num` and `den` are coprime.
    fn normalize_content(num: IntPoly, den: IntPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.lead().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.div_scalar_exact(&c),
                den: den.div_scalar_exact(&c),
            }
        }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element is a constant (no `q` dependence).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::from_parts_unchecked(self.num.add(&other.num), self.den.clone());
        }
        if other.den.is_one() {
            // gcd(a + c*b, b) = gcd(a, b) = 1
            let num = self.num.add(&other.num.mul(&self.den));
            return Self::normalize_content(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = other.num.add(&self.num.mul(&other.den));
            return Self::normalize_content(num, other.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::from_parts_unchecked(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = self.num.div_exact(&g1);
        let d = other.den.div_exact(&g1);
        let c = other.num.div_exact(&g2);
        let b = self.den.div_exact(&g2);
        Self::normalize_content(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact value at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0);
        if Zero::is_zero(&d) {
            return Err(Error::PoleAtPoint(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn negate(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
    fn size_cmp(&self, other: &Self) -> Ordering {
        self.num
            .cmp_height(&other.num)
            .then_with(|| self.den.cmp_height(&other.den))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inherent:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$inherent(self, rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$inherent(&self, &rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$inherent(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::div`] for the checked form.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::div(self, rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_ratfunc(s)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn add_q_and_q_inverse() {
        let r = RatFunc::q().add(&RatFunc::q_pow(-1));
        assert_eq!(r.to_string(), "(q^2+1)/(q)");
    }

    #[test]
    fn mul_clears_laurent_denominator() {
        let r = RatFunc::q_minus_qinv().mul(&RatFunc::q());
        assert_eq!(r.to_string(), "q^2-1");
    }

    #[test]
    fn inverse_swaps() {
        assert_eq!(rf("(q^2+1)/(q)").inv().unwrap().to_string(), "(q)/(q^2+1)");
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_content_and_sign() {
        let r = RatFunc::from_parts(IntPoly::from_i64s(&[2, 4]), IntPoly::from_i64s(&[0, -6])).unwrap();
        assert_eq!(r.to_string(), "(-2*q-1)/(3*q)");
        assert_eq!(rf("2/3").to_string(), "(2)/(3)");
        assert_eq!(rf("-4/6"), rf("-2/3"));
    }

    #[test]
    fn specialization() {
        let r = RatFunc::q_minus_qinv();
        assert_eq!(
            r.specialize(&Rational::from_integer(1.into())).unwrap(),
            <Rational as Zero>::zero()
        );
        let pole = rf("1/(q-1)");
        assert!(matches!(
            pole.specialize(&Rational::from_integer(1.into())),
            Err(Error::PoleAtPoint(_))
        ));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::from_parts(IntPoly::one(), IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }
}
