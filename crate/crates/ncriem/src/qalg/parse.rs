//! Text format for algebra elements: sums of `*`-joined factors over the
//! generators a, b, c, d with coefficients such as `q^-1` or `(1+q^2)/2`,
//! e.g. `q^-1*b*c + 1`. Multiplication order is preserved (the generators do
//! not commute); division is only by scalar factors.

use thiserror::Error;

use super::{Gen, QPoly};
use crate::scalars::{lex, QRatFn, Scalar, ScalarError, Tok};

pub const DEFAULT_DEGREE_CAP: u32 = 8;

#[derive(Debug, Error)]
pub enum QParseError {
    #[error(transparent)]
    Lex(#[from] ScalarError),
    #[error("parse error at token {0}: {1}")]
    Syntax(usize, String),
    #[error("division by a non-scalar element")]
    NonScalarDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("generator powers must be non-negative")]
    NegativeGeneratorPower,
    #[error("element degree {got} exceeds the cap {cap}")]
    DegreeCap { got: u32, cap: u32 },
}

struct P<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
}

impl<'a> P<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> QParseError {
        QParseError::Syntax(self.pos, msg.into())
    }

    fn expr(&mut self) -> Result<QPoly, QParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly, QParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.factor()?;
                    let s = d.as_scalar().ok_or(QParseError::NonScalarDivision)?;
                    let inv = s.inv().ok_or(QParseError::DivisionByZero)?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QPoly, QParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QPoly, QParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.bump();
                true
            } else {
                false
            };
            let Some(Tok::Int(n)) = self.bump() else {
                return Err(self.err("expected integer exponent"));
            };
            let k: i64 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
            let k = if neg { -k } else { k };
            if k < 0 {
                // negative powers only for scalar factors
                let s = base.as_scalar().ok_or(QParseError::NegativeGeneratorPower)?;
                let p = s.pow_i64(k).ok_or(QParseError::DivisionByZero)?;
                return Ok(QPoly::scalar(p));
            }
            let mut acc = QPoly::one();
            for _ in 0..k {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QPoly, QParseError> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                let digits = n.to_string();
                let scalar = QRatFn::parse(&digits).map_err(QParseError::Lex)?;
                Ok(QPoly::scalar(scalar))
            }
            Some(Tok::Sym('q')) => Ok(QPoly::scalar(QRatFn::q())),
            Some(Tok::Sym('i')) => {
                Ok(QPoly::scalar(QRatFn::from_gauss_c(crate::scalars::GaussRat::i())))
            }
            Some(Tok::Sym('a')) => Ok(QPoly::gen(Gen::A)),
            Some(Tok::Sym('b')) => Ok(QPoly::gen(Gen::B)),
            Some(Tok::Sym('c')) => Ok(QPoly::gen(Gen::C)),
            Some(Tok::Sym('d')) => Ok(QPoly::gen(Gen::D)),
            Some(Tok::LPar) => {
                let v = self.expr()?;
                match self.bump() {
                    Some(Tok::RPar) => Ok(v),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses an algebra element; `degree_cap` guards runaway inputs.
pub fn parse_qpoly(s: &str, degree_cap: u32) -> Result<QPoly, QParseError> {
    let toks = lex(s)?;
    let mut p = P { toks: &toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    let got = v.max_degree();
    if got > degree_cap {
        return Err(QParseError::DegreeCap { got, cap: degree_cap });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_examples() {
        let p = parse_qpoly("q^-1*b*c + 1", DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(p.num_terms(), 2);
        // noncommutative order matters: b*a normalizes to q*a*b
        let ba = parse_qpoly("b*a", DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(ba.to_string(), "q*a*b");
        let ad = parse_qpoly("a*d", DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(ad, parse_qpoly("1 + q^-1*b*c", DEFAULT_DEGREE_CAP).unwrap());
    }

    #[test]
    fn guards() {
        assert!(matches!(
            parse_qpoly("a^9", DEFAULT_DEGREE_CAP),
            Err(QParseError::DegreeCap { .. })
        ));
        assert!(matches!(parse_qpoly("a^-1", 8), Err(QParseError::NegativeGeneratorPower)));
        assert!(matches!(parse_qpoly("1/b", 8), Err(QParseError::NonScalarDivision)));
        assert!(matches!(parse_qpoly("1/0", 8), Err(QParseError::DivisionByZero)));
    }
}
