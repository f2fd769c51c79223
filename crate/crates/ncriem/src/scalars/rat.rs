use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        Rat(&self.0 - &rhs.0)
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

macro_rules! forward_owned_ops {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(&self, &rhs) }
        }
    )*};
}
forward_owned_ops!(Rat, Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rat::new(6, 4), Rat::new(3, 2));
        assert_eq!(Rat::new(1, -2), Rat::new(-1, 2));
        assert_eq!(Rat::new(-3, -6), Rat::new(1, 2));
        assert!(Rat::new(-3, 6).denom().is_positive());
    }

    #[test]
    fn display_matches_text_format() {
        assert_eq!(Rat::new(-3, 2).to_string(), "-3/2");
        assert_eq!(Rat::from_int(5).to_string(), "5");
        assert_eq!(Rat::new(4, 2).to_string(), "2");
    }

    #[test]
    fn inverse() {
        assert_eq!(Rat::new(3, 2).inv().unwrap(), Rat::new(2, 3));
        assert!(Rat::zero().inv().is_none());
    }
}
