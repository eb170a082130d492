//! Exact arithmetic: arbitrary-precision rationals and the field
//! extension `a + b*pi` that weighted inner products live in.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Arithmetic never rounds; division by zero is an explicit [`Error`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    /// `num/den` for small constants known to have a nonzero denominator.
    ///
    /// Panics if `den == 0`; use [`Rational::new`] for untrusted input.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_parts(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as a non-negative machine integer, if it is one.
    pub fn to_u32(&self) -> Option<u32> {
        if self.0.is_integer() {
            self.0.numer().to_u32()
        } else {
            None
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(self.0.pow(exp as i32))
    }

    /// Nearest double. Errors if either part falls outside the finite range.
    pub fn to_f64(&self) -> Result<f64, Error> {
        let n = self.0.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = self.0.denom().to_f64().unwrap_or(f64::INFINITY);
        let v = n / d;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::FloatOverflow)
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

/// Panicking division, for internal formulas whose divisors are nonzero by
/// construction (binomials, factorials, k+1 recursion steps).
impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional sign.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid rational: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                Rational::from_parts(num, den)
            }
            None => {
                let num = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational::from_bigint(num))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// Exact value `rat + pi_coeff * pi`.
///
/// Closed under addition and scaling by [`Rational`]. `1` and `pi` are
/// linearly independent over the rationals, so the zero test is exact:
/// both parts must vanish. Multiplication of two values with nonzero
/// `pi` parts would leave the field (a `pi^2` term) and is an error.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiRational {
    #[serde(rename = "rat")]
    pub rat_part: Rational,
    #[serde(rename = "pi")]
    pub pi_part: Rational,
}

impl PiRational {
    pub fn new(rat_part: Rational, pi_part: Rational) -> Self {
        PiRational { rat_part, pi_part }
    }

    pub fn zero() -> Self {
        PiRational::new(Rational::zero(), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        PiRational::new(r, Rational::zero())
    }

    pub fn pi_times(c: Rational) -> Self {
        PiRational::new(Rational::zero(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.rat_part.is_zero() && self.pi_part.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PiRational::new(c * &self.rat_part, c * &self.pi_part)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        if !self.pi_part.is_zero() && !rhs.pi_part.is_zero() {
            return Err(Error::PiSquared);
        }
        Ok(PiRational::new(
            &self.rat_part * &rhs.rat_part,
            &self.rat_part * &rhs.pi_part + &self.pi_part * &rhs.rat_part,
        ))
    }

    pub fn to_f64(&self) -> Result<f64, Error> {
        let v = self.rat_part.to_f64()? + self.pi_part.to_f64()? * std::f64::consts::PI;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::FloatOverflow)
        }
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        PiRational::new(self.rat_part + rhs.rat_part, self.pi_part + rhs.pi_part)
    }
}

impl AddAssign<&PiRational> for PiRational {
    fn add_assign(&mut self, rhs: &PiRational) {
        self.rat_part += &rhs.rat_part;
        self.pi_part += &rhs.pi_part;
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: PiRational) -> PiRational {
        PiRational::new(self.rat_part - rhs.rat_part, self.pi_part - rhs.pi_part)
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational::new(-self.rat_part, -self.pi_part)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_part.is_zero() {
            write!(f, "{}", self.rat_part)
        } else if self.rat_part.is_zero() {
            write!(f, "{}*pi", self.pi_part)
        } else {
            write!(f, "{} + {}*pi", self.rat_part, self.pi_part)
        }
    }
}

impl fmt::Debug for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn addition_in_lowest_terms() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
    }

    #[test]
    fn normalized_on_construction() {
        let x = r(2, 4);
        assert_eq!(x, r(1, 2));
        assert_eq!(x.to_string(), "1/2");
        // Sign lives in the numerator.
        assert_eq!(r(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn multiplicative_inverse() {
        assert_eq!(r(3, 7) * r(7, 3), Rational::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            r(1, 2).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["1", "-2", "5/6", "-7/3", "0"] {
            let v: Rational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn pi_rational_to_float() {
        let half_pi = PiRational::pi_times(r(1, 2));
        assert_eq!(half_pi.to_f64().unwrap(), std::f64::consts::FRAC_PI_2);
        assert_eq!(
            PiRational::from_rational(Rational::one()).to_f64().unwrap(),
            1.0
        );
        assert_eq!(PiRational::zero().to_f64().unwrap(), 0.0);
    }

    #[test]
    fn pi_squared_rejected() {
        let x = PiRational::pi_times(Rational::one());
        assert!(matches!(x.checked_mul(&x), Err(Error::PiSquared)));
        // One factor rational is fine.
        let y = PiRational::from_rational(r(2, 1));
        assert_eq!(x.checked_mul(&y).unwrap(), PiRational::pi_times(r(2, 1)));
    }

    #[test]
    fn exact_zero_test() {
        let a = PiRational::new(r(1, 3), r(-1, 3));
        let b = PiRational::new(r(-1, 3), r(1, 3));
        assert!((a + b).is_zero());
        assert!(!PiRational::new(Rational::zero(), r(1, 1_000_000)).is_zero());
    }

    #[test]
    fn json_serialization() {
        let x = PiRational::new(r(0, 1), r(-3, 2));
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"rat":"0","pi":"-3/2"}"#);
        let back: PiRational = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
    }
}
