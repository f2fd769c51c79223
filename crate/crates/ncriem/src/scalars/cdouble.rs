use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Complex double with tolerance-based comparison; the approximate backend
/// for continuous moduli and irrational roots.
#[derive(Clone, Copy, PartialEq)]
pub struct CDouble {
    pub re: f64,
    pub im: f64,
}

/// Default comparison tolerance for the approximate backend.
pub const DEFAULT_EPS: f64 = 1e-9;

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0 // normalize -0.0 so formatting is stable
    } else {
        x
    }
}

impl CDouble {
    pub fn new(re: f64, im: f64) -> Self {
        CDouble { re: clean(re), im: clean(im) }
    }

    pub fn real(re: f64) -> Self {
        CDouble::new(re, 0.0)
    }

    pub fn i() -> Self {
        CDouble::new(0.0, 1.0)
    }

    pub fn zero() -> Self {
        CDouble::new(0.0, 0.0)
    }

    pub fn one() -> Self {
        CDouble::new(1.0, 0.0)
    }

    pub fn conj(&self) -> Self {
        CDouble::new(self.re, -self.im)
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sq(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn inv(&self) -> Option<CDouble> {
        let n = self.norm_sq();
        if n == 0.0 {
            return None;
        }
        Some(CDouble::new(self.re / n, -self.im / n))
    }

    pub fn sqrt(&self) -> CDouble {
        let r = self.abs();
        let re = ((r + self.re) / 2.0).max(0.0).sqrt();
        let mut im = ((r - self.re) / 2.0).max(0.0).sqrt();
        if self.im < 0.0 {
            im = -im;
        }
        CDouble::new(re, im)
    }

    pub fn from_polar(r: f64, theta: f64) -> CDouble {
        CDouble::new(r * theta.cos(), r * theta.sin())
    }

    pub fn approx_zero(&self, eps: f64) -> bool {
        self.re.abs() <= eps && self.im.abs() <= eps
    }
}

impl Add for CDouble {
    type Output = CDouble;
    fn add(self, rhs: CDouble) -> CDouble {
        CDouble::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for CDouble {
    type Output = CDouble;
    fn sub(self, rhs: CDouble) -> CDouble {
        CDouble::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for CDouble {
    type Output = CDouble;
    fn mul(self, rhs: CDouble) -> CDouble {
        CDouble::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for CDouble {
    type Output = CDouble;
    fn neg(self) -> CDouble {
        CDouble::new(-self.re, -self.im)
    }
}

impl fmt::Display for CDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            return write!(f, "{}", self.re);
        }
        if self.re == 0.0 {
            if self.im < 0.0 {
                return write!(f, "-{}i", -self.im);
            }
            return write!(f, "{}i", self.im);
        }
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for CDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip_shapes() {
        assert_eq!(CDouble::new(1.25, -0.5).to_string(), "1.25-0.5i");
        assert_eq!(CDouble::new(0.0, 2.0).to_string(), "2i");
        assert_eq!(CDouble::real(-3.5).to_string(), "-3.5");
    }

    #[test]
    fn sqrt_principal_branch() {
        let z = CDouble::new(-1.0, 0.0).sqrt();
        assert!((z.re - 0.0).abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);
        let w = CDouble::real(4.0).sqrt();
        assert!((w.re - 2.0).abs() < 1e-15 && w.im == 0.0);
    }
}
