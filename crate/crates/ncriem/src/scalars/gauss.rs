use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rand::Rng;

use super::rat::Rat;

/// Gaussian rational: an element of Q(i) with exact real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::from_rat(Rat::from_int(n))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        GaussRat::from_rat(Rat::new(num, den))
    }

    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn zero() -> Self {
        GaussRat::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_rat(Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    /// |z|^2 as a rational.
    pub fn norm_sq(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Option<GaussRat> {
        let n = self.norm_sq();
        let ninv = n.inv()?;
        Some(GaussRat {
            re: &self.re * &ninv,
            im: &(-&self.im) * &ninv,
        })
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
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
forward_owned_ops!(GaussRat, Add::add, Sub::sub, Mul::mul);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

// Imaginary part rendered as "i", "-i", "2i", "2i/3" so that e.g. 3/4 + (1/2)i
// prints as "3/4+i/2" and round-trips through the parser.
fn write_im(f: &mut fmt::Formatter<'_>, im: &Rat, with_sign: bool) -> fmt::Result {
    let (sign, a) = if im.is_negative() { ("-", im.abs()) } else { (if with_sign { "+" } else { "" }, im.abs()) };
    let num = a.numer();
    let den = a.denom();
    write!(f, "{sign}")?;
    if num == &BigInt::from(1) {
        write!(f, "i")?;
    } else {
        write!(f, "{num}i")?;
    }
    if den != &BigInt::from(1) {
        write!(f, "/{den}")?;
    }
    Ok(())
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write_im(f, &self.im, false);
        }
        write!(f, "{}", self.re)?;
        write_im(f, &self.im, true)
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Uniformly random Gaussian rational with numerators in [-bound, bound] and
/// denominators in [1, bound]; deterministic under a seeded generator.
pub fn random_point<R: Rng>(bound: i64, rng: &mut R) -> GaussRat {
    assert!(bound >= 2, "bound must be at least 2");
    let part = |rng: &mut R| {
        let num = rng.random_range(-bound..=bound);
        let den = rng.random_range(1..=bound);
        Rat::new(num, den)
    };
    GaussRat { re: part(rng), im: part(rng) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn conjugation_is_gaussian() {
        let z = GaussRat::new(Rat::from_int(1), Rat::from_int(2));
        assert_eq!(z.conj(), GaussRat::new(Rat::from_int(1), Rat::from_int(-2)));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn inverse_via_norm() {
        let z = GaussRat::new(Rat::from_int(1), Rat::from_int(2));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussRat::one());
        assert!(GaussRat::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::new(Rat::new(3, 4), Rat::new(1, 2)).to_string(), "3/4+i/2");
        assert_eq!(GaussRat::new(Rat::from_int(1), Rat::from_int(-2)).to_string(), "1-2i");
        assert_eq!(GaussRat::new(Rat::zero(), Rat::new(-2, 3)).to_string(), "-2i/3");
        assert_eq!(GaussRat::i().to_string(), "i");
    }

    #[test]
    fn random_point_is_seeded_and_bounded() {
        let mut r1 = ChaCha8Rng::seed_from_u64(0);
        let mut r2 = ChaCha8Rng::seed_from_u64(0);
        let a = random_point(1000, &mut r1);
        let b = random_point(1000, &mut r2);
        assert_eq!(a, b);
        for _ in 0..50 {
            let z = random_point(2, &mut r1);
            assert!(z.re.abs() <= Rat::from_int(2) && z.im.abs() <= Rat::from_int(2));
        }
    }
}
