//! Dense univariate polynomials over the rationals: characteristic and
//! minimal polynomials, squarefree parts and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Rational::one()])
    }

    /// `t - a`
    pub fn linear_root(a: Rational) -> Self {
        UniPoly(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                UniPoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Rational::zero)
                        + o.0.get(i).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.0.len() - 1;
        let lc = d.0[dd].clone();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic gcd (Euclid over Q).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Rational roots with multiplicity, plus the degree of the cofactor that
    /// has no rational root (zero iff the polynomial splits over Q).
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, usize) {
        let mut p = self.clone();
        let mut roots = Vec::new();
        if p.is_zero() {
            return (roots, 0);
        }
        let mut zero_mult = 0;
        while p.0.first().map(|c| c.is_zero()).unwrap_or(false) {
            p.0.remove(0);
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        for r in candidate_roots(&p) {
            let mut mult = 0;
            loop {
                if p.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, rem) = p.div_rem(&UniPoly::linear_root(r.clone()));
                if rem.is_zero() {
                    p = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, p.degree().unwrap_or(0))
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    if let Some(v) = n.to_u64() {
        let mut d = 1u64;
        while d * d <= v {
            if v % d == 0 {
                small.push(BigInt::from(d));
                if d * d != v {
                    large.push(BigInt::from(v / d));
                }
            }
            d += 1;
        }
    } else {
        // huge constant terms do not arise from desk-scale structure constants
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                small.push(d.clone());
                if &d * &d != n {
                    large.push(&n / &d);
                }
            }
            d += 1;
        }
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational root theorem candidates of a polynomial with nonzero constant term.
fn candidate_roots(p: &UniPoly) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    // clear denominators
    let lcm = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        p.0.iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
    let a0 = ints.first().cloned().unwrap_or_default();
    let an = ints.last().cloned().unwrap_or_default();
    let mut out = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for s in [1, -1] {
                let r = Rational::new(&num * BigInt::from(s), den.clone());
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out.retain(|r| p.eval(r).is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (t - 1)^2 (t + 1) t (2t - 1)
        let p = up(&[-1, 1])
            .mul(&up(&[-1, 1]))
            .mul(&up(&[1, 1]))
            .mul(&up(&[0, 1]))
            .mul(&up(&[-1, 2]));
        let (roots, rest) = p.rational_roots();
        assert_eq!(rest, 0);
        let got: Vec<(String, usize)> = roots.iter().map(|(r, m)| (r.to_string(), *m)).collect();
        assert_eq!(
            got,
            vec![("-1".into(), 1), ("0".into(), 1), ("1/2".into(), 1), ("1".into(), 2)]
        );
    }

    #[test]
    fn irreducible_quadratic_is_reported() {
        let p = up(&[1, 0, 1]).mul(&up(&[-3, 1]));
        let (roots, rest) = p.rational_roots();
        assert_eq!(roots.len(), 1);
        assert_eq!(rest, 2);
    }

    #[test]
    fn squarefree_part_drops_repeats() {
        let p = up(&[-1, 1]).mul(&up(&[-1, 1])).mul(&up(&[2, 1]));
        assert_eq!(p.squarefree_part(), up(&[-1, 1]).mul(&up(&[2, 1])));
        assert!(!p.is_squarefree());
        assert!(p.squarefree_part().is_squarefree());
    }
}
