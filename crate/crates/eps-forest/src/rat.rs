//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals; there is
//! no floating point anywhere. The antipode series needs exact `1/n!` factors.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// An exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q`. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    /// `1/n!`, used by the antipode series.
    pub fn inv_factorial(n: usize) -> Self {
        let mut f = BigInt::one();
        for k in 2..=n {
            f *= BigInt::from(k);
        }
        Rat(BigRational::new(BigInt::one(), f))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error produced when parsing a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{input}`")]
pub struct ParseRatError {
    pub input: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRatError { input: s.to_string() };
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: BigInt = num.trim().parse().map_err(|_| err())?;
        let q: BigInt = den.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        Ok(Rat(BigRational::new(p, q)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn display_integer_without_denominator() {
        assert_eq!(Rat::from_int(7).to_string(), "7");
        assert_eq!(Rat::new(3, 2).to_string(), "3/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-5", "3/2", "-7/3"] {
            let q: Rat = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn inv_factorial() {
        assert_eq!(Rat::inv_factorial(0), Rat::one());
        assert_eq!(Rat::inv_factorial(4), Rat::new(1, 24));
    }
}
