//! Canonical text for polynomials and its parser.
//!
//! Grammar: `term (("+" | "-") term)*` with `term = factor ("*" factor)*`
//! and `factor = integer | var ("^" exp)?`. Exponents of `a` and `b` may be
//! written `n/2`; exponents of `alpha` and `beta` may be negative.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use super::{HalfExpPoly, HalfMonomial, Monomial, MultiPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("unexpected '{found}' at offset {offset}")]
    Unexpected { offset: usize, found: String },
    #[error("unexpected end of input")]
    End,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("exponent {exp} not allowed on {var}")]
    BadExponent { var: String, exp: String },
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigInt, Vec<String>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, factors) in terms {
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mut parts = Vec::with_capacity(factors.len() + 1);
        if !magnitude.is_one() || factors.is_empty() {
            parts.push(magnitude.to_string());
        }
        parts.extend(factors);
        f.write_str(&parts.join("*"))?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().into_iter().map(|(m, c)| {
            let factors = m
                .factors()
                .into_iter()
                .map(|(v, n)| if n == 1 { v.to_string() } else { format!("{v}^{n}") })
                .collect();
            (c, factors)
        });
        write_terms(f, terms)
    }
}

fn half_exponent(name: &str, doubled: u32) -> Option<String> {
    match doubled {
        0 => None,
        2 => Some(name.to_string()),
        n if n % 2 == 0 => Some(format!("{name}^{}", n / 2)),
        n => Some(format!("{name}^{n}/2")),
    }
}

fn int_exponent(name: &str, n: i32) -> Option<String> {
    match n {
        0 => None,
        1 => Some(name.to_string()),
        n => Some(format!("{name}^{n}")),
    }
}

impl fmt::Display for HalfExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().into_iter().map(|(m, c)| {
            let factors = [
                int_exponent("alpha", m.alpha),
                int_exponent("beta", m.beta),
                half_exponent("a", m.a2),
                half_exponent("b", m.b2),
            ]
            .into_iter()
            .flatten()
            .collect();
            (c, factors)
        });
        write_terms(f, terms)
    }
}

/// Exponent as written: `num` or `num/2`.
#[derive(Clone, Copy, Debug)]
struct Exponent {
    num: i64,
    halved: bool,
}

enum Factor {
    Int(BigInt),
    Var(String, Exponent),
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn unexpected(&self) -> TextError {
        match self.s.get(self.pos) {
            Some(&c) => TextError::Unexpected { offset: self.pos, found: (c as char).to_string() },
            None => TextError::End,
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, TextError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn signed(&mut self) -> Result<i64, TextError> {
        self.skip_ws();
        let negative = self.eat(b'-');
        self.skip_ws();
        let offset = self.pos;
        let d = self.digits()?;
        let n: i64 = d.parse().map_err(|_| TextError::Unexpected { offset, found: d.to_string() })?;
        Ok(if negative { -n } else { n })
    }

    fn factor(&mut self) -> Result<Factor, TextError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(Factor::Int(d.parse().expect("digits")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let mut name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii").to_string();
                if self.s.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    let negative = self.s.get(self.pos) == Some(&b'-');
                    if negative {
                        self.pos += 1;
                    }
                    let d = self.digits()?;
                    name = format!("{name}_{}{d}", if negative { "-" } else { "" });
                }
                let mut exp = Exponent { num: 1, halved: false };
                if self.eat(b'^') {
                    exp.num = self.signed()?;
                    if self.eat(b'/') {
                        self.skip_ws();
                        if self.digits()? != "2" {
                            return Err(TextError::BadExponent { var: name, exp: format!("{}/?", exp.num) });
                        }
                        exp.halved = true;
                    }
                }
                Ok(Factor::Var(name, exp))
            }
            _ => Err(self.unexpected()),
        }
    }

    /// Sum of signed products of factors.
    fn sum(&mut self) -> Result<Vec<(bool, Vec<Factor>)>, TextError> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let mut factors = vec![self.factor()?];
            while self.eat(b'*') {
                factors.push(self.factor()?);
            }
            terms.push((negative, factors));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else if self.peek().is_none() {
                return Ok(terms);
            } else {
                return Err(self.unexpected());
            }
        }
    }
}

fn coefficient(negative: bool, factors: &[Factor]) -> BigInt {
    let c: BigInt = factors.iter().filter_map(|f| if let Factor::Int(n) = f { Some(n.clone()) } else { None }).product();
    if negative {
        -c
    } else {
        c
    }
}

fn parse_var(name: &str) -> Option<Var> {
    match name {
        "x" => Some(Var::X),
        "y" => Some(Var::Y),
        _ => {
            let (family, index) = name.split_once('_')?;
            let i: i64 = index.parse().ok()?;
            match family {
                "x" => Some(Var::XG(i)),
                "y" => Some(Var::YG(i)),
                _ => None,
            }
        }
    }
}

impl FromStr for MultiPoly {
    type Err = TextError;

    fn from_str(s: &str) -> Result<MultiPoly, TextError> {
        let mut lexer = Lexer { s: s.as_bytes(), pos: 0 };
        let mut p = MultiPoly::zero();
        for (negative, factors) in lexer.sum()? {
            let mut m = Monomial::one();
            for f in &factors {
                if let Factor::Var(name, exp) = f {
                    let v = parse_var(name).ok_or_else(|| TextError::UnknownVariable(name.clone()))?;
                    if exp.halved || exp.num < 0 {
                        return Err(TextError::BadExponent { var: name.clone(), exp: format!("{}", exp.num) });
                    }
                    m = m.with(v, exp.num as u32);
                }
            }
            p.add_term(m, coefficient(negative, &factors));
        }
        Ok(p)
    }
}

impl FromStr for HalfExpPoly {
    type Err = TextError;

    fn from_str(s: &str) -> Result<HalfExpPoly, TextError> {
        let mut lexer = Lexer { s: s.as_bytes(), pos: 0 };
        let mut p = HalfExpPoly::zero();
        for (negative, factors) in lexer.sum()? {
            let mut m = HalfMonomial::default();
            for f in &factors {
                let Factor::Var(name, exp) = f else { continue };
                let bad = || TextError::BadExponent { var: name.clone(), exp: exp.num.to_string() };
                match name.as_str() {
                    "alpha" | "beta" => {
                        if exp.halved {
                            return Err(bad());
                        }
                        let n = i32::try_from(exp.num).map_err(|_| bad())?;
                        if name == "alpha" {
                            m.alpha += n;
                        } else {
                            m.beta += n;
                        }
                    }
                    "a" | "b" => {
                        let doubled = if exp.halved { exp.num } else { 2 * exp.num };
                        let n = u32::try_from(doubled).map_err(|_| bad())?;
                        if name == "a" {
                            m.a2 += n;
                        } else {
                            m.b2 += n;
                        }
                    }
                    _ => return Err(TextError::UnknownVariable(name.clone())),
                }
            }
            p.add_term(m, coefficient(negative, &factors));
        }
        Ok(p)
    }
}
