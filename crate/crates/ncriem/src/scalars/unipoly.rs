use std::fmt;

use super::gauss::GaussRat;

/// Univariate polynomial in q with Gaussian-rational coefficients.
/// Coefficient k is the coefficient of q^k; the vector carries no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly(Vec<GaussRat>);

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![GaussRat::one()])
    }

    pub fn constant(c: GaussRat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The monomial q^k.
    pub fn q_pow(k: usize) -> Self {
        let mut v = vec![GaussRat::zero(); k + 1];
        v[k] = GaussRat::one();
        UniPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.0
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.0.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c == &GaussRat::one())
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.0.get(k).cloned().unwrap_or_else(GaussRat::zero);
            let b = rhs.0.get(k).cloned().unwrap_or_else(GaussRat::zero);
            out.push(&a + &b);
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussRat) -> UniPoly {
        UniPoly::from_coeffs(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dlead = div.leading().unwrap().inv().unwrap();
        let dd = div.0.len() - 1;
        let mut rem = self.0.clone();
        let mut quot = vec![GaussRat::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd || (rem.len() == dd && dd == 0 && !rem.is_empty()) {
            while rem.last().is_some_and(GaussRat::is_zero) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
            let shift = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1].clone() * &dlead;
            for (j, b) in div.0.iter().enumerate() {
                let t = &factor * b;
                rem[shift + j] = &rem[shift + j] - &t;
            }
            quot[shift] = factor;
            while rem.last().is_some_and(GaussRat::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => a.scale(&l.inv().unwrap()),
            None => a,
        }
    }

    pub fn conj(&self) -> UniPoly {
        UniPoly(self.0.iter().map(GaussRat::conj).collect())
    }

    pub fn eval(&self, q0: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * q0) + c;
        }
        acc
    }

    pub fn eval_f64(&self, q0: f64) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for c in self.0.iter().rev() {
            let (cr, ci) = c.to_f64_pair();
            re = re * q0 + cr;
            im = im * q0 + ci;
        }
        (re, im)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &GaussRat, k: usize, first: bool) -> fmt::Result {
    let neg_one = -GaussRat::one();
    if k == 0 {
        // Additive structure inside the coefficient is safe to inline here.
        let s = c.to_string();
        if !first && !s.starts_with('-') {
            write!(f, "+")?;
        }
        return write!(f, "{s}");
    }
    if c == &GaussRat::one() {
        if !first {
            write!(f, "+")?;
        }
    } else if c == &neg_one {
        write!(f, "-")?;
    } else {
        if !first {
            write!(f, "+")?;
        }
        write!(f, "({c})*")?;
    }
    if k == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{k}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat::Rat;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn divrem_roundtrip() {
        // (q^2 - 1) = (q + 1)(q - 1)
        let p = UniPoly::from_coeffs(vec![g(-1), g(0), g(1)]);
        let d = UniPoly::from_coeffs(vec![g(1), g(1)]);
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_coeffs(vec![g(-1), g(1)]));
        assert_eq!(d.mul(&q).add(&r), p);
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(2q^2 - 2, 4q + 4) = q + 1
        let p = UniPoly::from_coeffs(vec![g(-2), g(0), g(2)]);
        let d = UniPoly::from_coeffs(vec![g(4), g(4)]);
        assert_eq!(p.gcd(&d), UniPoly::from_coeffs(vec![g(1), g(1)]));
    }

    #[test]
    fn eval_horner() {
        let p = UniPoly::from_coeffs(vec![g(1), g(0), g(1)]); // 1 + q^2
        assert_eq!(p.eval(&GaussRat::from_int(2)), g(5));
        assert_eq!(
            p.eval(&GaussRat::i()),
            GaussRat::zero()
        );
        let _ = Rat::zero();
    }
}
