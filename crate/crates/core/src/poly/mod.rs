//! Sparse polynomials with arbitrary-precision integer coefficients.
//!
//! [`MultiPoly`] lives over `x`, `y` and the indexed families `x_i`, `y_i`.
//! [`HalfExpPoly`] lives over `alpha`, `beta`, `a`, `b`, where `a` and `b`
//! may carry half-integer exponents (stored doubled).

mod half;
mod text;

pub use half::{HalfExpPoly, HalfMonomial};
pub use text::TextError;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    XG(i64),
    YG(i64),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => f.write_str("x"),
            Var::Y => f.write_str("y"),
            Var::XG(i) => write!(f, "x_{i}"),
            Var::YG(i) => write!(f, "y_{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} has an odd index and cannot be halved")]
    OddIndex(Var),
    #[error("negative exponent {exp} of {var} has no image")]
    NegativeExponent { var: &'static str, exp: i64 },
}

/// Exponent vector. Zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    ex: u32,
    ey: u32,
    xg: BTreeMap<i64, u32>,
    yg: BTreeMap<i64, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::one().with(v, 1)
    }

    /// Multiplies in `v^n`.
    pub fn with(mut self, v: Var, n: u32) -> Monomial {
        if n == 0 {
            return self;
        }
        match v {
            Var::X => self.ex += n,
            Var::Y => self.ey += n,
            Var::XG(i) => *self.xg.entry(i).or_insert(0) += n,
            Var::YG(i) => *self.yg.entry(i).or_insert(0) += n,
        }
        self
    }

    pub fn ex(&self) -> u32 {
        self.ex
    }

    pub fn ey(&self) -> u32 {
        self.ey
    }

    pub fn xg(&self) -> &BTreeMap<i64, u32> {
        &self.xg
    }

    pub fn yg(&self) -> &BTreeMap<i64, u32> {
        &self.yg
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X => self.ex,
            Var::Y => self.ey,
            Var::XG(i) => self.xg.get(&i).copied().unwrap_or(0),
            Var::YG(i) => self.yg.get(&i).copied().unwrap_or(0),
        }
    }

    /// Variables with their exponents in display order.
    pub fn factors(&self) -> Vec<(Var, u32)> {
        let mut out = Vec::new();
        if self.ex > 0 {
            out.push((Var::X, self.ex));
        }
        if self.ey > 0 {
            out.push((Var::Y, self.ey));
        }
        out.extend(self.xg.iter().map(|(&i, &n)| (Var::XG(i), n)));
        out.extend(self.yg.iter().map(|(&i, &n)| (Var::YG(i), n)));
        out
    }

    pub fn degree(&self) -> u32 {
        self.ex + self.ey + self.xg.values().sum::<u32>() + self.yg.values().sum::<u32>()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        other.factors().into_iter().fold(self.clone(), |m, (v, n)| m.with(v, n))
    }

    fn display_key(&self) -> impl Ord {
        let xg: Vec<(i64, u32)> = self.xg.iter().map(|(&i, &n)| (i, n)).collect();
        let yg: Vec<(i64, u32)> = self.yg.iter().map(|(&i, &n)| (i, n)).collect();
        std::cmp::Reverse((self.degree(), self.ex, self.ey, xg, yg))
    }
}

/// Commutative ring with integer constants, the target of substitutions.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(c: &BigInt) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_integer(c: &BigInt) -> Self {
        c.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::monomial(Monomial::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> MultiPoly {
        MultiPoly::monomial(Monomial::one(), c)
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::monomial(Monomial::var(v), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms in canonical display order.
    pub fn terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by_cached_key(|(m, _)| m.display_key());
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        Ring::pow(self, n)
    }

    /// Homomorphic image under `f` on the variables.
    pub fn substitute<R: Ring, E>(&self, mut f: impl FnMut(Var) -> Result<R, E>) -> Result<R, E> {
        let mut images: BTreeMap<Var, R> = BTreeMap::new();
        let mut total = R::zero();
        for (m, c) in &self.terms {
            let mut term = R::from_integer(c);
            for (v, n) in m.factors() {
                let image = match images.get(&v) {
                    Some(r) => r.clone(),
                    None => {
                        let r = f(v)?;
                        images.insert(v, r.clone());
                        r
                    }
                };
                term = term.mul(&image.pow(n));
            }
            total = total.add(&term);
        }
        Ok(total)
    }

    /// Renames variables monomial by monomial; `f` must be injective on
    /// the variables that occur.
    pub fn rename(&self, f: impl Fn(Var) -> Result<Var, PolyError>) -> Result<MultiPoly, PolyError> {
        self.substitute(|v| f(v).map(MultiPoly::var))
    }

    /// `x_i -> x_{i/2}`, `y_i -> y_{i/2}`; fails on an odd index.
    pub fn reindex_half(&self) -> Result<MultiPoly, PolyError> {
        self.rename(|v| match v {
            Var::XG(i) | Var::YG(i) if i % 2 != 0 => Err(PolyError::OddIndex(v)),
            Var::XG(i) => Ok(Var::XG(i / 2)),
            Var::YG(i) => Ok(Var::YG(i / 2)),
            other => Ok(other),
        })
    }

    /// Exchanges `x` with `y` and `x_i` with `y_i`.
    pub fn swap_xy(&self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let swapped = Monomial { ex: m.ey, ey: m.ex, xg: m.yg.clone(), yg: m.xg.clone() };
                (swapped, c.clone())
            })
            .collect();
        MultiPoly { terms }
    }

    /// Every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn from_integer(c: &BigInt) -> Self {
        MultiPoly::constant(c.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: MultiPoly) -> MultiPoly {
        &self + &other
    }
}

impl std::ops::AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: &MultiPoly) -> MultiPoly {
        self + &(-other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: MultiPoly) -> MultiPoly {
        &self * &other
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn xg(i: i64) -> MultiPoly {
        MultiPoly::var(Var::XG(i))
    }
    fn yg(i: i64) -> MultiPoly {
        MultiPoly::var(Var::YG(i))
    }

    #[test]
    fn products_and_cancellation() {
        let p = &xg(0) * &yg(0);
        assert_eq!(&p * &yg(0), MultiPoly::monomial(Monomial::var(Var::XG(0)).with(Var::YG(0), 2), 1));
        assert!((&p - &p).is_zero());
        assert!((&p + &p.scale(&BigInt::from(-1))).is_zero());
        assert_eq!(p.scale(&<BigInt as Zero>::zero()), MultiPoly::zero());
    }

    #[test]
    fn example_expansion() {
        // x(x x_2 y_0 (x y_0 + 1) + y x_0 y_0 (x y_0 + 1)) + 2xy x_0 y_0 + x^2 x_2 y_0 + y^2 x_0 y_2
        let inner = &(&x() * &yg(0)) + &MultiPoly::one();
        let left = &(&(&x() * &xg(2)) * &yg(0)) * &inner;
        let right = &(&(&y() * &xg(0)) * &yg(0)) * &inner;
        let factored = &x() * &(&left + &right);
        let rest = &(&(&(&x() * &y()) * &(&xg(0) * &yg(0))).scale(&BigInt::from(2))
            + &(&(&x() * &x()) * &(&xg(2) * &yg(0))))
            + &(&(&y() * &y()) * &(&xg(0) * &yg(2)));
        let total = &factored + &rest;
        assert_eq!(total.to_string(), "x^3*x_2*y_0^2 + x^2*y*x_0*y_0^2 + 2*x^2*x_2*y_0 + 3*x*y*x_0*y_0 + y^2*x_0*y_2");
    }

    #[test]
    fn reindex_and_swap() {
        let p = &(&x() * &x()) * &(&xg(2) * &yg(0));
        assert_eq!(p.reindex_half().unwrap(), &(&x() * &x()) * &(&xg(1) * &yg(0)));
        assert_eq!(xg(1).reindex_half(), Err(PolyError::OddIndex(Var::XG(1))));
        assert_eq!(p.swap_xy().swap_xy(), p);
        assert_eq!(p.swap_xy(), &(&y() * &y()) * &(&yg(2) * &xg(0)));
    }

    #[test]
    fn substitution_into_integers() {
        let p = &(&x() + &y()).pow(3) - &xg(4);
        let value: Result<BigInt, ()> = p.substitute(|v| {
            Ok(match v {
                Var::X => BigInt::from(2),
                Var::Y => BigInt::from(-1),
                _ => BigInt::from(5),
            })
        });
        assert_eq!(value.unwrap(), BigInt::from(-4));
    }
}
