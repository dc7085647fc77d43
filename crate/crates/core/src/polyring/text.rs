//! Canonical text form of polynomials.
//!
//! ```text
//! poly   := term (("+"|"-") term)*
//! term   := integer ("*" factor)* | factor ("*" factor)*
//! factor := var ("^" posint)?
//! var    := "t1" | "t2" | "xi" | "xi_" index | "c1" | "c2"
//! ```
//!
//! Terms are printed in descending term order separated by `" + "` or
//! `" - "`, a unit coefficient is omitted and a leading negative term starts
//! with `-`. The parser accepts any whitespace and a leading sign.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{Monomial, Var};
use super::poly::Polynomial;
use crate::error::Error;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn var(&mut self) -> Result<Var, Error> {
        let rest = &self.src[self.pos..];
        let (v, len) = if rest.starts_with(b"t1") {
            (Var::T1, 2)
        } else if rest.starts_with(b"t2") {
            (Var::T2, 2)
        } else if rest.starts_with(b"c1") {
            (Var::C1, 2)
        } else if rest.starts_with(b"c2") {
            (Var::C2, 2)
        } else if rest.starts_with(b"xi_") {
            self.pos += 3;
            let d = self.digits().ok_or_else(|| self.err("expected factor index after xi_"))?;
            let j: u16 = d.parse().map_err(|_| self.err("factor index too large"))?;
            if j == 0 {
                return Err(self.err("factor indices start at 1"));
            }
            return Ok(Var::XiFactor(j));
        } else if rest.starts_with(b"xi") {
            (Var::Xi, 2)
        } else {
            return Err(self.err("expected a variable"));
        };
        self.pos += len;
        Ok(v)
    }

    fn factor(&mut self) -> Result<(Var, u32), Error> {
        self.skip_ws();
        let v = self.var()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: u32 = d.parse().map_err(|_| self.err("exponent too large"))?;
            if e == 0 {
                return Err(self.err("exponent must be positive"));
            }
            return Ok((v, e));
        }
        Ok((v, 1))
    }

    fn term(&mut self) -> Result<(BigInt, Monomial), Error> {
        let mut coeff = BigInt::one();
        let mut pairs = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                coeff = d.parse().map_err(|_| self.err("bad integer"))?;
            }
            _ => pairs.push(self.factor()?),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            pairs.push(self.factor()?);
        }
        Ok((coeff, Monomial::from_pairs(pairs)))
    }

    fn poly(&mut self) -> Result<Polynomial, Error> {
        let mut out = Polynomial::zero();
        let mut sign = BigInt::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (c, m) = self.term()?;
            out.add_term(&sign * c, m);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                Some(_) => return Err(self.err("expected `+`, `-` or end of input")),
            }
            self.pos += 1;
        }
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        if p.peek().is_none() {
            return Err(p.err("empty input"));
        }
        p.poly()
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
