use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{PolyError, Ring};

/// `alpha^alpha * beta^beta * a^(a2/2) * b^(b2/2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfMonomial {
    pub alpha: i32,
    pub beta: i32,
    pub a2: u32,
    pub b2: u32,
}

impl HalfMonomial {
    pub fn times(self, o: HalfMonomial) -> HalfMonomial {
        HalfMonomial { alpha: self.alpha + o.alpha, beta: self.beta + o.beta, a2: self.a2 + o.a2, b2: self.b2 + o.b2 }
    }

    /// Doubled total degree.
    fn degree2(self) -> i64 {
        2 * (self.alpha as i64 + self.beta as i64) + self.a2 as i64 + self.b2 as i64
    }

    fn display_key(self) -> impl Ord {
        std::cmp::Reverse((self.degree2(), self.alpha, self.beta, self.a2, self.b2))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfExpPoly {
    terms: BTreeMap<HalfMonomial, BigInt>,
}

impl HalfExpPoly {
    pub fn zero() -> HalfExpPoly {
        HalfExpPoly::default()
    }

    pub fn one() -> HalfExpPoly {
        HalfExpPoly::monomial(HalfMonomial::default(), 1)
    }

    pub fn monomial(m: HalfMonomial, c: impl Into<BigInt>) -> HalfExpPoly {
        let mut p = HalfExpPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn alpha() -> HalfExpPoly {
        HalfExpPoly::monomial(HalfMonomial { alpha: 1, ..Default::default() }, 1)
    }

    pub fn beta() -> HalfExpPoly {
        HalfExpPoly::monomial(HalfMonomial { beta: 1, ..Default::default() }, 1)
    }

    /// `a^(n/2)`.
    pub fn a_half(n: u32) -> HalfExpPoly {
        HalfExpPoly::monomial(HalfMonomial { a2: n, ..Default::default() }, 1)
    }

    /// `b^(n/2)`.
    pub fn b_half(n: u32) -> HalfExpPoly {
        HalfExpPoly::monomial(HalfMonomial { b2: n, ..Default::default() }, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: HalfMonomial, c: BigInt) {
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

    pub fn terms(&self) -> Vec<(HalfMonomial, &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().map(|(&m, c)| (m, c)).collect();
        out.sort_by_key(|(m, _)| m.display_key());
        out
    }

    pub fn mul_monomial(&self, m: HalfMonomial) -> HalfExpPoly {
        HalfExpPoly { terms: self.terms.iter().map(|(&n, c)| (n.times(m), c.clone())).collect() }
    }

    /// Image in `R` given images of `alpha`, `beta`, `a^(1/2)` and `b^(1/2)`.
    /// Negative powers of `alpha` or `beta` have no image.
    pub fn substitute<R: Ring>(&self, alpha: &R, beta: &R, sqrt_a: &R, sqrt_b: &R) -> Result<R, PolyError> {
        let mut total = R::zero();
        for (m, c) in &self.terms {
            for (var, exp) in [("alpha", m.alpha), ("beta", m.beta)] {
                if exp < 0 {
                    return Err(PolyError::NegativeExponent { var, exp: exp as i64 });
                }
            }
            let term = R::from_integer(c)
                .mul(&alpha.pow(m.alpha as u32))
                .mul(&beta.pow(m.beta as u32))
                .mul(&sqrt_a.pow(m.a2))
                .mul(&sqrt_b.pow(m.b2));
            total = total.add(&term);
        }
        Ok(total)
    }
}

impl Ring for HalfExpPoly {
    fn zero() -> Self {
        HalfExpPoly::zero()
    }
    fn one() -> Self {
        HalfExpPoly::one()
    }
    fn from_integer(c: &BigInt) -> Self {
        HalfExpPoly::monomial(HalfMonomial::default(), c.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Add for &HalfExpPoly {
    type Output = HalfExpPoly;
    fn add(self, other: &HalfExpPoly) -> HalfExpPoly {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &HalfExpPoly {
    type Output = HalfExpPoly;
    fn sub(self, other: &HalfExpPoly) -> HalfExpPoly {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, -c);
        }
        out
    }
}

impl Mul for &HalfExpPoly {
    type Output = HalfExpPoly;
    fn mul(self, other: &HalfExpPoly) -> HalfExpPoly {
        let mut out = HalfExpPoly::zero();
        for (&m, c) in &self.terms {
            for (&n, d) in &other.terms {
                out.add_term(m.times(n), c * d);
            }
        }
        out
    }
}

impl std::ops::AddAssign<&HalfExpPoly> for HalfExpPoly {
    fn add_assign(&mut self, other: &HalfExpPoly) {
        for (&m, c) in &other.terms {
            self.add_term(m, c.clone());
        }
    }
}

impl std::iter::Sum for HalfExpPoly {
    fn sum<I: Iterator<Item = HalfExpPoly>>(iter: I) -> HalfExpPoly {
        iter.fold(HalfExpPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MultiPoly, Var};

    #[test]
    fn negative_powers_cancel() {
        let inv = HalfExpPoly::monomial(HalfMonomial { alpha: -1, beta: -1, ..Default::default() }, 1);
        let p = &(&HalfExpPoly::alpha() * &HalfExpPoly::beta()) * &inv;
        assert_eq!(p, HalfExpPoly::one());
    }

    #[test]
    fn half_powers_multiply() {
        let p = &HalfExpPoly::a_half(1) * &HalfExpPoly::a_half(1);
        assert_eq!(p, HalfExpPoly::a_half(2));
        assert_eq!(p.to_string(), "a");
        assert_eq!(HalfExpPoly::b_half(3).to_string(), "b^3/2");
    }

    #[test]
    fn substitute_into_multipoly() {
        let p = &(&HalfExpPoly::alpha() * &HalfExpPoly::alpha()) + &HalfExpPoly::b_half(2);
        let x1 = &MultiPoly::var(Var::X) - &MultiPoly::one();
        let image = p.substitute(&x1, &MultiPoly::one(), &MultiPoly::one(), &MultiPoly::var(Var::Y)).unwrap();
        assert_eq!(image.to_string(), "x^2 + y^2 - 2*x + 1");
        let bad = HalfExpPoly::monomial(HalfMonomial { alpha: -1, ..Default::default() }, 1);
        assert!(bad.substitute(&x1, &x1, &x1, &x1).is_err());
    }
}
