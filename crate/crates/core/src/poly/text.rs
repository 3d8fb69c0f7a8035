//! Human-readable polynomial text form.
//!
//! Terms are written `c*x1^e1*...*xn^en` with exact rational coefficients
//! `p/q`; a unit coefficient is omitted. The parser is whitespace-insensitive
//! and accepts the coefficient anywhere among the factors of a term.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::Rational;

/// Default variable names `v1, ..., vn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = |m: &str| Error::Parse {
        position: 0,
        message: format!("{m}: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// Canonical text: terms in descending `order`, signs folded into separators.
pub fn format_poly(p: &Polynomial, names: &[String], order: MonomialOrder) -> String {
    assert_eq!(names.len(), p.nvars());
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

pub fn format_default(p: &Polynomial) -> String {
    format_poly(p, &default_names(p.nvars()), MonomialOrder::DegRevLex)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
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

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let b = self.src[self.pos];
            if b.is_ascii_alphanumeric() || b == b'_' || b == b'\'' || b == b'.' {
                self.pos += 1;
            } else {
                break;
            }
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match self.names.iter().position(|n| n == s) {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                self.err(format!("unknown variable {s:?}"))
            }
        }
    }

    fn term(&mut self, n: usize) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u16; n];
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.integer()?;
                    let mut c = Rational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den = self.integer()?;
                        if den.is_zero() {
                            return self.err("zero denominator");
                        }
                        c /= Rational::from_integer(den);
                    }
                    coeff *= c;
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let i = self.ident()?;
                    let mut e: u16 = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let k = self.integer()?;
                        e = match u16::try_from(k) {
                            Ok(v) => v,
                            Err(_) => return self.err("exponent too large"),
                        };
                    }
                    exps[i] += e;
                }
                _ => return self.err("expected a coefficient or a variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }
}

/// Parse the text form against the given variable names.
pub fn parse_poly(s: &str, names: &[String]) -> Result<Polynomial> {
    let n = names.len();
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        names,
    };
    let mut out = Polynomial::zero(n);
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match p.peek() {
            None if !first => break,
            None => return p.err("empty polynomial"),
            Some(b'+') => p.pos += 1,
            Some(b'-') => {
                p.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return p.err("expected '+' or '-'"),
        }
        let (m, c) = p.term(n)?;
        out.add_term(m, c * sign);
        first = false;
    }
    Ok(out)
}

/// Parse with the default names `v1..vn`.
pub fn parse_default(s: &str, n: usize) -> Result<Polynomial> {
    parse_poly(s, &default_names(n))
}
