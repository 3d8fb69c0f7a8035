use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::Rational;

/// Total degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation; fails when the operands live in different rings.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if a.nvars != b.nvars {
        return Err(Error::DimensionMismatch(a.nvars, b.nvars));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Rational::one());
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity does not match ring");
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum_i coeffs[i] * v_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.degree())
            .max()
            .map(Degree::Finite)
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coeff(&self, order: MonomialOrder) -> Option<&Rational> {
        self.leading_term(order).map(|(_, c)| c)
    }

    /// Scale so that the leading coefficient under `order` is 1; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_coeff(order) {
            None => self.clone(),
            Some(c) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                out.add_term(m.with_exponent(var, e - 1), c * Rational::from_integer(e.into()));
            }
        }
        Ok(out)
    }

    /// Directional derivative `sum_i chi_i * d/dv_i`.
    pub fn directional_derivative(&self, chi: &[Rational]) -> Polynomial {
        assert_eq!(chi.len(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (i, c) in chi.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.partial_derivative(i).expect("index in range").scale(c);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(self.nvars, point.len()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute `images[i]` for variable `i`. The result lives in the ring
    /// of the images.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch(self.nvars, images.len()));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(p.nvars)]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().expect("nonempty") * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return if self.is_zero() { Some(self.clone()) } else { None };
        }
        let order = MonomialOrder::DegRevLex;
        let (lm, lc) = d.leading_term(order).map(|(m, c)| (m.clone(), c.clone()))?;
        if d.terms.len() == 1 {
            let inv = lc.recip();
            let mut q = Polynomial::zero(self.nvars);
            for (m, c) in &self.terms {
                q.terms.insert(m.div(&lm)?, c * &inv);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_exact(self).is_some()
    }

    /// Multivariate division: returns `(quotients, remainder)` with the
    /// remainder fully reduced modulo the leading terms of `divisors`.
    pub fn divide_by(&self, divisors: &[Polynomial], order: MonomialOrder) -> (Vec<Polynomial>, Polynomial) {
        let lts: Vec<_> = divisors
            .iter()
            .map(|d| d.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
            .collect();
        let mut quots = vec![Polynomial::zero(self.nvars); divisors.len()];
        let mut p = self.clone();
        let mut rem = Polynomial::zero(self.nvars);
        while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            let hit = lts.iter().enumerate().find_map(|(k, lt)| {
                let (lm, lc) = lt.as_ref()?;
                m.div(lm).map(|q| (k, q, &c / lc))
            });
            match hit {
                Some((k, qm, qc)) => {
                    p = &p - &divisors[k].mul_monomial(&qm, &qc);
                    quots[k].add_term(qm, qc);
                }
                None => {
                    p.terms.remove(&m);
                    rem.add_term(m, c);
                }
            }
        }
        (quots, rem)
    }

    /// Embed into a ring with more variables, keeping variable positions.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.resize(nvars, 0);
                    (Monomial::from_exponents(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn cmp_leading(&self, other: &Polynomial, order: MonomialOrder) -> Ordering {
        match (self.leading_monomial(order), other.leading_monomial(order)) {
            (Some(a), Some(b)) => order.cmp(a, b),
            (a, b) => a.is_some().cmp(&b.is_some()),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring dimension mismatch");
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring dimension mismatch");
        let mut acc: std::collections::HashMap<Monomial, Rational> = std::collections::HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let prod = c1 * c2;
                let e = acc.entry(m1.mul(m2)).or_insert_with(Rational::zero);
                *e += prod;
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn additive_identity_and_difference_of_squares() {
        let v3 = parse_default("v3", 6).unwrap();
        assert_eq!(poly_arith(&v3, &Polynomial::zero(6), ArithOp::Add).unwrap(), v3);
        let a = parse_default("v2 + v3", 6).unwrap();
        let b = parse_default("v2 - v3", 6).unwrap();
        assert_eq!(
            poly_arith(&a, &b, ArithOp::Mul).unwrap(),
            parse_default("v2^2 - v3^2", 6).unwrap()
        );
    }

    #[test]
    fn builds_first_l6_invariant() {
        let a = parse_default("v5^2", 6).unwrap();
        let b = parse_default("-2*v4*v6", 6).unwrap();
        let f1 = poly_arith(&a, &b, ArithOp::Add).unwrap();
        assert_eq!(f1, parse_default("v5^2 - 2*v4*v6", 6).unwrap());
        let pt: Vec<Rational> = [0, 0, 0, 1, 2, 3].iter().map(|&x| q(x, 1)).collect();
        assert_eq!(f1.evaluate(&pt).unwrap(), q(-2, 1));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Polynomial::var(3, 0);
        let b = Polynomial::var(4, 0);
        assert_eq!(poly_arith(&a, &b, ArithOp::Add), Err(Error::DimensionMismatch(3, 4)));
        assert!(a.evaluate(&[q(1, 1)]).is_err());
    }

    #[test]
    fn derivatives() {
        let f = parse_default("v3^2", 4).unwrap();
        assert_eq!(f.partial_derivative(2).unwrap(), parse_default("2*v3", 4).unwrap());
        let inv = parse_default("v2*v4 - 1/2*v3^2", 4).unwrap();
        assert_eq!(inv.partial_derivative(2).unwrap(), parse_default("-v3", 4).unwrap());
        assert!(Polynomial::constant(4, q(5, 1))
            .partial_derivative(1)
            .unwrap()
            .is_zero());
        assert!(f.partial_derivative(4).is_err());
    }

    #[test]
    fn evaluation() {
        let f = parse_default("v2*v4", 4).unwrap();
        assert_eq!(f.evaluate(&[q(0, 1), q(1, 1), q(0, 1), q(1, 1)]).unwrap(), q(1, 1));
        let g = parse_default("v3^2", 3).unwrap();
        assert_eq!(g.evaluate(&[q(0, 1), q(0, 1), q(2, 1)]).unwrap(), q(4, 1));
    }

    #[test]
    fn zero_has_negative_infinite_degree() {
        assert_eq!(Polynomial::zero(2).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn exact_division() {
        let a = parse_default("v1^2 - v2^2", 2).unwrap();
        let b = parse_default("v1 + v2", 2).unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), parse_default("v1 - v2", 2).unwrap());
        assert!(b.div_exact(&a).is_none());
        assert!(parse_default("v1 + 1", 2).unwrap().div_exact(&b).is_none());
    }
}
