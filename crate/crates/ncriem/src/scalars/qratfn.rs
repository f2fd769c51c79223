use std::fmt;

use super::gauss::GaussRat;
use super::unipoly::UniPoly;
use super::{Scalar, ScalarError};

/// Rational function in q over the Gaussian rationals: numerator/denominator
/// coprime, denominator monic. q is treated as a real indeterminate, so
/// conjugation acts on coefficients only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFn {
    num: UniPoly,
    den: UniPoly,
}

impl QRatFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalized(num, den)
    }

    fn normalized(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return QRatFn { num: UniPoly::zero(), den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > Some(0) || g.is_zero() {
            (num.divrem(&g).0, den.divrem(&g).0)
        } else {
            (num, den)
        };
        let lead = den.leading().unwrap().inv().unwrap();
        QRatFn { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_gauss_c(c: GaussRat) -> Self {
        QRatFn { num: UniPoly::constant(c), den: UniPoly::one() }
    }

    /// The generator q.
    pub fn q() -> Self {
        QRatFn { num: UniPoly::q_pow(1), den: UniPoly::one() }
    }

    /// q^k for any integer k.
    pub fn q_int_pow(k: i64) -> Self {
        if k >= 0 {
            QRatFn { num: UniPoly::q_pow(k as usize), den: UniPoly::one() }
        } else {
            QRatFn { num: UniPoly::one(), den: UniPoly::q_pow((-k) as usize) }
        }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree() <= Some(0) && self.den.degree() == Some(0)
    }

    /// Returns the value when the function is a constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.is_constant() {
            return Some(self.num.coeffs()[0].clone());
        }
        None
    }

    /// Evaluate at a point of any backend; errors when the denominator vanishes there.
    pub fn eval_in<K: Scalar>(&self, q0: &K) -> Result<K, ScalarError> {
        let poly_at = |p: &UniPoly| -> K {
            let mut acc = K::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(q0).add(&K::from_gauss(c));
            }
            acc
        };
        let d = poly_at(&self.den);
        let dinv = d.inv().ok_or_else(|| ScalarError::PoleAtPoint {
            func: self.to_string(),
            at: q0.to_string(),
        })?;
        Ok(poly_at(&self.num).mul(&dinv))
    }
}

impl QRatFn {
    pub(super) fn zero_v() -> Self {
        QRatFn { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub(super) fn one_v() -> Self {
        QRatFn { num: UniPoly::one(), den: UniPoly::one() }
    }

    pub(super) fn is_zero_v(&self) -> bool {
        self.num.is_zero()
    }

    pub(super) fn add_v(&self, rhs: &QRatFn) -> QRatFn {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::normalized(num, den)
    }

    pub(super) fn neg_v(&self) -> QRatFn {
        QRatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub(super) fn mul_v(&self, rhs: &QRatFn) -> QRatFn {
        // Cross-reduce before multiplying to curb coefficient growth.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.degree() > Some(0) {
            (self.num.divrem(&g1).0, rhs.den.divrem(&g1).0)
        } else {
            (self.num.clone(), rhs.den.clone())
        };
        let (n2, d1) = if g2.degree() > Some(0) {
            (rhs.num.divrem(&g2).0, self.den.divrem(&g2).0)
        } else {
            (rhs.num.clone(), self.den.clone())
        };
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub(super) fn inv_v(&self) -> Option<QRatFn> {
        if self.is_zero_v() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    pub(super) fn conj_v(&self) -> QRatFn {
        // Denominator stays monic because conjugation fixes the leading 1.
        QRatFn { num: self.num.conj(), den: self.den.conj() }
    }
}

fn needs_parens(p: &UniPoly) -> bool {
    let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if terms != 1 {
        return terms > 1;
    }
    let (k, c) = p
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .unwrap();
    if k == 0 {
        // A lone coefficient only needs parens when it is an interior sum.
        let s = c.to_string();
        return s[1..].contains(['+', '-']);
    }
    !(c == &GaussRat::one() || c == &(-GaussRat::one()))
}

impl fmt::Display for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        if needs_parens(&self.den) {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

impl fmt::Debug for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat::Rat;

    fn one_plus_q2_over_q4() -> QRatFn {
        let q = QRatFn::q();
        let q2 = q.mul_v(&q);
        let num = QRatFn::one_v().add_v(&q2);
        num.mul_v(&QRatFn::q_int_pow(-4))
    }

    #[test]
    fn conjugation_fixes_q() {
        let f = one_plus_q2_over_q4();
        assert_eq!(f.conj_v(), f);
        let iq = QRatFn::from_gauss_c(GaussRat::i()).mul_v(&QRatFn::q());
        assert_eq!(iq.conj_v(), iq.neg_v());
    }

    #[test]
    fn eval_examples() {
        let f = one_plus_q2_over_q4();
        let v = f.eval_in(&GaussRat::from_int(2)).unwrap();
        assert_eq!(v, GaussRat::from_rat(Rat::new(5, 16)));

        // [2; q^-2] = 1 + q^-2 at q = 1 evaluates to 2
        let g = QRatFn::one_v().add_v(&QRatFn::q_int_pow(-2));
        assert_eq!(g.eval_in(&GaussRat::one()).unwrap(), GaussRat::from_int(2));

        // 2/(q^2 - 1) has a pole at q = 1
        let q2m1 = QRatFn::q_int_pow(2).add_v(&QRatFn::one_v().neg_v());
        let h = QRatFn::from_gauss_c(GaussRat::from_int(2)).mul_v(&q2m1.inv_v().unwrap());
        assert!(h.eval_in(&GaussRat::one()).is_err());
    }

    #[test]
    fn display_canonical() {
        assert_eq!(one_plus_q2_over_q4().to_string(), "(1+q^2)/q^4");
        assert_eq!(QRatFn::q_int_pow(-1).to_string(), "1/q");
        assert_eq!(QRatFn::q().to_string(), "q");
    }
}
