//! Scalar backends: exact Gaussian rationals, exact rational functions in q,
//! and complex doubles, all behind one field contract.
//!
//! Every predicate in the crate is generic over [`Scalar`]. The exact backends
//! satisfy the field axioms exactly; the double backend compares with a
//! configurable tolerance (default 1e-9). Conjugation is involutive on all
//! three and fixes q on [`QRatFn`], since q is treated as real.

mod cdouble;
mod gauss;
mod rat;
mod unipoly;
mod qratfn;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

pub use cdouble::{CDouble, DEFAULT_EPS};
pub use gauss::{random_point, GaussRat};
pub use rat::Rat;
pub use qratfn::QRatFn;
pub use unipoly::UniPoly;

#[derive(Debug, Error)]
pub enum ScalarError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("pole: denominator of {func} vanishes at q = {at}")]
    PoleAtPoint { func: String, at: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// Identifies which scalar field a value (or a matrix of values) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Gauss,
    QRatFn,
    CDouble,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Gauss => "gauss",
            Backend::QRatFn => "qratfn",
            Backend::CDouble => "cdouble",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gauss" => Ok(Backend::Gauss),
            "qratfn" => Ok(Backend::QRatFn),
            "cdouble" => Ok(Backend::CDouble),
            other => Err(format!("unknown backend `{other}` (expected gauss|qratfn|cdouble)")),
        }
    }
}

/// The field contract shared by all scalar backends.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn backend() -> Backend;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_gauss(g: &GaussRat) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Tolerance-aware zero test; exact backends ignore `eps`.
    fn is_zero_eps(&self, eps: f64) -> bool;
    /// Magnitude when one is meaningful (constants and numeric values).
    fn approx_abs(&self) -> Option<f64>;

    fn from_int(n: i64) -> Self {
        Self::from_gauss(&GaussRat::from_int(n))
    }

    fn from_rat(r: &Rat) -> Self {
        Self::from_gauss(&GaussRat::from_rat(r.clone()))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn is_exact() -> bool {
        Self::backend() != Backend::CDouble
    }

    fn eq_eps(&self, rhs: &Self, eps: f64) -> bool {
        self.sub(rhs).is_zero_eps(eps)
    }

    fn is_real_eps(&self, eps: f64) -> bool {
        self.sub(&self.conj()).is_zero_eps(eps)
    }

    /// Size of a residual: 0 when exactly zero, the magnitude when one exists.
    fn residual(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.approx_abs().unwrap_or(f64::INFINITY)
        }
    }

    /// Pivot quality for elimination; only the numeric backend grades pivots.
    fn pivot_score(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.approx_abs().unwrap_or(1.0).max(f64::MIN_POSITIVE)
        }
    }

    fn pow_i64(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Some(acc)
    }

    /// The generator q when the backend has one.
    fn q_gen() -> Option<Self> {
        None
    }

    /// Lift of a float literal; only the numeric backend accepts them.
    fn from_f64(_x: f64) -> Option<Self> {
        None
    }

    fn parse(s: &str) -> Result<Self, ScalarError> {
        parse_scalar::<Self>(s)
    }
}

impl Scalar for GaussRat {
    fn backend() -> Backend {
        Backend::Gauss
    }
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn from_gauss(g: &GaussRat) -> Self {
        g.clone()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Option<Self> {
        GaussRat::inv(self)
    }
    fn conj(&self) -> Self {
        GaussRat::conj(self)
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn is_zero_eps(&self, _eps: f64) -> bool {
        GaussRat::is_zero(self)
    }
    fn approx_abs(&self) -> Option<f64> {
        Some(self.norm_sq().to_f64().sqrt())
    }
}

impl Scalar for QRatFn {
    fn backend() -> Backend {
        Backend::QRatFn
    }
    fn zero() -> Self {
        QRatFn::zero_v()
    }
    fn one() -> Self {
        QRatFn::one_v()
    }
    fn from_gauss(g: &GaussRat) -> Self {
        QRatFn::from_gauss_c(g.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_v(rhs)
    }
    fn neg(&self) -> Self {
        self.neg_v()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_v(rhs)
    }
    fn inv(&self) -> Option<Self> {
        self.inv_v()
    }
    fn conj(&self) -> Self {
        self.conj_v()
    }
    fn is_zero(&self) -> bool {
        self.is_zero_v()
    }
    fn is_zero_eps(&self, _eps: f64) -> bool {
        self.is_zero_v()
    }
    fn approx_abs(&self) -> Option<f64> {
        self.as_constant().and_then(|c| c.approx_abs())
    }
    fn q_gen() -> Option<Self> {
        Some(QRatFn::q())
    }
}

impl Scalar for CDouble {
    fn backend() -> Backend {
        Backend::CDouble
    }
    fn zero() -> Self {
        CDouble::zero()
    }
    fn one() -> Self {
        CDouble::one()
    }
    fn from_gauss(g: &GaussRat) -> Self {
        let (re, im) = g.to_f64_pair();
        CDouble::new(re, im)
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn inv(&self) -> Option<Self> {
        CDouble::inv(self)
    }
    fn conj(&self) -> Self {
        CDouble::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.approx_zero(DEFAULT_EPS)
    }
    fn is_zero_eps(&self, eps: f64) -> bool {
        self.approx_zero(eps)
    }
    fn approx_abs(&self) -> Option<f64> {
        Some(self.abs())
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(CDouble::real(x))
    }
}

// ---------------------------------------------------------------------------
// Text format parsing, shared by all backends.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Int(BigInt),
    Float(f64),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LPar,
    RPar,
}

pub(crate) fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let s = input.replace('\u{2212}', "-").replace('\u{00b7}', "*");
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                toks.push((pos, Tok::Plus));
                pos += 1;
            }
            '-' => {
                toks.push((pos, Tok::Minus));
                pos += 1;
            }
            '*' => {
                toks.push((pos, Tok::Star));
                pos += 1;
            }
            '/' => {
                toks.push((pos, Tok::Slash));
                pos += 1;
            }
            '^' => {
                toks.push((pos, Tok::Caret));
                pos += 1;
            }
            '(' => {
                toks.push((pos, Tok::LPar));
                pos += 1;
            }
            ')' => {
                toks.push((pos, Tok::RPar));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let mut is_float = false;
                if pos < bytes.len() && bytes[pos] == b'.' {
                    is_float = true;
                    pos += 1;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                }
                // Exponent part, accepted only when it is followed by digits.
                if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
                    let mut look = pos + 1;
                    if look < bytes.len() && (bytes[look] == b'+' || bytes[look] == b'-') {
                        look += 1;
                    }
                    if look < bytes.len() && bytes[look].is_ascii_digit() {
                        is_float = true;
                        pos = look;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                    }
                }
                let text = &s[start..pos];
                if is_float {
                    let v: f64 = text.parse().map_err(|_| ScalarError::Parse {
                        pos: start,
                        msg: format!("bad float literal `{text}`"),
                    })?;
                    toks.push((start, Tok::Float(v)));
                } else {
                    let v: BigInt = text.parse().expect("digits parse as BigInt");
                    toks.push((start, Tok::Int(v)));
                }
            }
            c if c.is_ascii_alphabetic() => {
                toks.push((pos, Tok::Sym(c)));
                pos += 1;
            }
            other => {
                return Err(ScalarError::Parse {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> ScalarError {
        let pos = self.toks.get(self.pos).map_or(usize::MAX, |(p, _)| *p);
        ScalarError::Parse { pos, msg: msg.into() }
    }

    fn expr<K: Scalar>(&mut self) -> Result<K, ScalarError> {
        let mut acc = self.term::<K>()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term::<K>()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term::<K>()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<K: Scalar>(&mut self) -> Result<K, ScalarError> {
        let mut acc = self.unary::<K>()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.unary::<K>()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let d = self.unary::<K>()?;
                    acc = acc.div(&d).ok_or(ScalarError::DivisionByZero)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<K: Scalar>(&mut self) -> Result<K, ScalarError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                Ok(self.unary::<K>()?.neg())
            }
            Some(Tok::Plus) => {
                self.next();
                self.unary::<K>()
            }
            _ => self.power::<K>(),
        }
    }

    fn power<K: Scalar>(&mut self) -> Result<K, ScalarError> {
        let base = self.primary::<K>()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let k = self.exponent()?;
            return base.pow_i64(k).ok_or(ScalarError::DivisionByZero);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ScalarError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Int(v)) => {
                let k = v.to_i64().filter(|k| k.abs() <= 10_000).ok_or_else(|| ScalarError::Parse {
                    pos: usize::MAX,
                    msg: "exponent out of range".into(),
                })?;
                Ok(if neg { -k } else { k })
            }
            _ => Err(self.err("expected integer exponent")),
        }
    }

    fn primary<K: Scalar>(&mut self) -> Result<K, ScalarError> {
        match self.next().cloned() {
            Some(Tok::Int(v)) => {
                let val = K::from_gauss(&GaussRat::from_rat(Rat::from_big(v, BigInt::from(1))));
                if self.peek() == Some(&Tok::Sym('i')) {
                    self.next();
                    return Ok(val.mul(&K::from_gauss(&GaussRat::i())));
                }
                Ok(val)
            }
            Some(Tok::Float(v)) => {
                let val = K::from_f64(v)
                    .ok_or_else(|| self.err("float literals need the cdouble backend"))?;
                if self.peek() == Some(&Tok::Sym('i')) {
                    self.next();
                    return Ok(val.mul(&K::from_gauss(&GaussRat::i())));
                }
                Ok(val)
            }
            Some(Tok::Sym('i')) => Ok(K::from_gauss(&GaussRat::i())),
            Some(Tok::Sym('q')) => {
                K::q_gen().ok_or_else(|| self.err("symbol `q` needs the qratfn backend"))
            }
            Some(Tok::LPar) => {
                let v = self.expr::<K>()?;
                match self.next() {
                    Some(Tok::RPar) => Ok(v),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_scalar<K: Scalar>(s: &str) -> Result<K, ScalarError> {
    let toks = lex(s)?;
    let mut p = Parser { toks: &toks, pos: 0 };
    let v = p.expr::<K>()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_text_formats() {
        assert_eq!(GaussRat::parse("-3/2").unwrap(), GaussRat::rational(-3, 2));
        assert_eq!(GaussRat::parse("6/4").unwrap(), GaussRat::rational(3, 2));
        assert_eq!(
            GaussRat::parse("(1-2i)/3").unwrap(),
            GaussRat::new(Rat::new(1, 3), Rat::new(-2, 3))
        );
        assert_eq!(
            GaussRat::parse("3/4+i/2").unwrap(),
            GaussRat::new(Rat::new(3, 4), Rat::new(1, 2))
        );
        let f = QRatFn::parse("(1+q^2)/q^4").unwrap();
        assert_eq!(f.to_string(), "(1+q^2)/q^4");
        assert_eq!(QRatFn::parse("q^-4").unwrap().to_string(), "1/q^4");
        let z = CDouble::parse("1.25-0.5i").unwrap();
        assert_eq!(z, CDouble::new(1.25, -0.5));
        assert!(GaussRat::parse("1.5").is_err());
        assert!(GaussRat::parse("q").is_err());
    }

    #[test]
    fn conjugate_examples() {
        let z = GaussRat::parse("1+2i").unwrap();
        assert_eq!(Scalar::conj(&z).to_string(), "1-2i");
        let f = QRatFn::parse("(1+q^2)/q^4").unwrap();
        assert_eq!(Scalar::conj(&f), f);
        let iq = QRatFn::parse("i*q").unwrap();
        assert_eq!(Scalar::conj(&iq), iq.neg());
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRat> {
        (-40i64..40, 1i64..20, -40i64..40, 1i64..20)
            .prop_map(|(a, b, c, d)| GaussRat::new(Rat::new(a, b), Rat::new(c, d)))
    }

    fn arb_qratfn() -> impl Strategy<Value = QRatFn> {
        (
            proptest::collection::vec((-9i64..9, -9i64..9), 1..3),
            proptest::collection::vec((-9i64..9, -9i64..9), 1..3),
        )
            .prop_map(|(n, d)| {
                let poly = |cs: Vec<(i64, i64)>| {
                    UniPoly::from_coeffs(
                        cs.into_iter()
                            .map(|(re, im)| GaussRat::new(Rat::from_int(re), Rat::from_int(im)))
                            .collect(),
                    )
                };
                let den = {
                    let d = poly(d);
                    if d.is_zero() {
                        UniPoly::one()
                    } else {
                        d
                    }
                };
                QRatFn::new(poly(n), den)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn gauss_field_axioms(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(Scalar::conj(&Scalar::conj(&a)), a.clone());
            if !Scalar::is_zero(&a) {
                prop_assert_eq!(a.mul(&Scalar::inv(&a).unwrap()), GaussRat::one());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn qratfn_field_axioms(a in arb_qratfn(), b in arb_qratfn(), c in arb_qratfn()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(Scalar::conj(&Scalar::conj(&a)), a.clone());
            if !Scalar::is_zero(&a) {
                prop_assert_eq!(a.mul(&Scalar::inv(&a).unwrap()), QRatFn::one_v());
            }
        }

        #[test]
        fn eval_is_a_homomorphism(f in arb_qratfn(), g in arb_qratfn(), q0 in arb_gauss()) {
            let ef = f.eval_in(&q0);
            let eg = g.eval_in(&q0);
            if let (Ok(ef), Ok(eg)) = (ef, eg) {
                if let Ok(sum) = f.add(&g).eval_in(&q0) {
                    prop_assert_eq!(sum, ef.add(&eg));
                }
                if let Ok(prod) = f.mul(&g).eval_in(&q0) {
                    prop_assert_eq!(prod, ef.mul(&eg));
                }
            }
        }

        #[test]
        fn format_parse_round_trip(a in arb_gauss(), f in arb_qratfn()) {
            prop_assert_eq!(GaussRat::parse(&a.to_string()).unwrap(), a);
            prop_assert_eq!(QRatFn::parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn random_point_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            assert_eq!(random_point(1000, &mut r1), random_point(1000, &mut r2));
        }
    }
}
