//! Buchberger's algorithm, normal forms and Krull dimension.
//!
//! Polynomials are handled internally as term lists sorted ascending under
//! the active order, so the leading term is the last element.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::Rational;

/// Hard caps on Gröbner work. Hitting any of them is reported as
/// [`Error::BudgetExceeded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_vars: usize,
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_pairs: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget {
            max_vars: 10,
            max_basis: 400,
            max_degree: 40,
            max_pairs: 50_000,
        }
    }
}

/// Reduced, monic Gröbner basis sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

/// Dimension of an affine zero set; `Empty` for the unit ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Empty,
    Finite(usize),
}

type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &Polynomial, order: MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&a.0, &b.0));
    t
}

fn to_poly(nvars: usize, t: Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t)
}

/// `a - c * m * b`, both ascending.
fn sub_mul(a: &Terms, c: &Rational, m: &Monomial, b: &Terms, order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |k: usize| (b[k].0.mul(m), &b[k].1 * c);
    let mut next_b = if b.is_empty() { None } else { Some(shifted(0)) };
    while i < a.len() || next_b.is_some() {
        let ord = match (&next_b, a.get(i)) {
            (None, _) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some((mb, _)), Some((ma, _))) => order.cmp(ma, mb),
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (mb, cb) = next_b.take().expect("checked");
                out.push((mb, -cb));
                j += 1;
                next_b = (j < b.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let (mb, cb) = next_b.take().expect("checked");
                let v = &a[i].1 - cb;
                if !v.is_zero() {
                    out.push((mb, v));
                }
                i += 1;
                j += 1;
                next_b = (j < b.len()).then(|| shifted(j));
            }
        }
    }
    out
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.last() {
        let inv = lc.recip();
        for (_, c) in t.iter_mut() {
            *c *= &inv;
        }
    }
}

/// Full reduction of `f` by monic `basis`.
fn reduce_terms(f: Terms, basis: &[Terms], order: MonomialOrder) -> Terms {
    let mut f = f;
    let mut rem: Terms = Vec::new();
    while let Some((lm, lc)) = f.last().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.last().map(|(gm, _)| gm.divides(&lm)).unwrap_or(false));
        match divisor {
            Some(g) => {
                let (gm, _) = g.last().expect("nonempty");
                let q = lm.div(gm).expect("divides");
                f = sub_mul(&f, &lc, &q, g, order);
            }
            None => {
                f.pop();
                rem.push((lm, lc));
            }
        }
    }
    rem.reverse();
    rem
}

fn s_poly(a: &Terms, b: &Terms, order: MonomialOrder) -> Terms {
    let (am, ac) = a.last().expect("nonzero");
    let (bm, bc) = b.last().expect("nonzero");
    let l = am.lcm(bm);
    let qa = l.div(am).expect("lcm");
    let qb = l.div(bm).expect("lcm");
    let scaled_a: Terms = a.iter().map(|(m, c)| (m.mul(&qa), c / ac)).collect();
    sub_mul(&scaled_a, &bc.recip(), &qb, b, order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn degree_of(t: &Terms) -> u32 {
    t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// Reduced Gröbner basis with the default budget.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(gens, order, &GroebnerBudget::default())
}

pub fn buchberger_with_budget(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: &GroebnerBudget,
) -> Result<GroebnerBasis> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Err(Error::InvalidInput("ideal needs at least one generator".into())),
    };
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::DimensionMismatch(nvars, g.nvars()));
    }
    if nvars > budget.max_vars {
        return Err(Error::BudgetExceeded(format!(
            "{nvars} variables exceeds the cap of {}",
            budget.max_vars
        )));
    }
    let mut basis: Vec<Terms> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    let add = |t: Terms, s: u32, basis: &mut Vec<Terms>, sugar: &mut Vec<u32>, pairs: &mut Vec<Pair>| -> Result<()> {
        let k = basis.len();
        let lm = t.last().expect("nonzero").0.clone();
        for (i, g) in basis.iter().enumerate() {
            let gm = &g.last().expect("nonzero").0;
            if gm.is_coprime(&lm) {
                continue; // product criterion
            }
            let l = gm.lcm(&lm);
            let ps = (sugar[i] + l.degree() - gm.degree()).max(s + l.degree() - lm.degree());
            pairs.push(Pair {
                i,
                j: k,
                lcm: l,
                sugar: ps,
            });
        }
        basis.push(t);
        sugar.push(s);
        if basis.len() > budget.max_basis {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis grew beyond {} elements",
                budget.max_basis
            )));
        }
        Ok(())
    };

    let mut inputs: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(g, order))
        .collect();
    inputs.sort_by(|a, b| {
        let (ma, mb) = (&a.last().expect("nonzero").0, &b.last().expect("nonzero").0);
        order.cmp(ma, mb)
    });
    for f in inputs {
        let s = degree_of(&f);
        let mut r = reduce_terms(f, &basis, order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        add(r, s, &mut basis, &mut sugar, &mut pairs)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {} critical pairs",
                budget.max_pairs
            )));
        }
        if p.sugar > budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "pair degree {} exceeds the cap of {}",
                p.sugar, budget.max_degree
            )));
        }
        let s = s_poly(&basis[p.i], &basis[p.j], order);
        let mut r = reduce_terms(s, &basis, order);
        if r.is_empty() {
            continue;
        }
        if degree_of(&r) > budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "basis element of degree {} exceeds the cap of {}",
                degree_of(&r),
                budget.max_degree
            )));
        }
        make_monic(&mut r);
        add(r, p.sugar, &mut basis, &mut sugar, &mut pairs)?;
    }

    let reduced = interreduce(basis, order);
    let gb = GroebnerBasis {
        nvars,
        order,
        elements: reduced.into_iter().map(|t| to_poly(nvars, t)).collect(),
    };
    if !gb.s_pairs_reduce_to_zero() {
        return Err(Error::Internal("Gröbner basis fails the S-pair check".into()));
    }
    Ok(gb)
}

fn interreduce(basis: Vec<Terms>, order: MonomialOrder) -> Vec<Terms> {
    // drop elements whose leading monomial is divisible by another's
    let lms: Vec<Monomial> = basis.iter().map(|t| t.last().expect("nonzero").0.clone()).collect();
    let mut keep: Vec<Terms> = Vec::new();
    for (k, t) in basis.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(l, m)| l != k && m.divides(&lms[k]) && (m != &lms[k] || l < k));
        if !redundant {
            keep.push(t.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Terms> = keep
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, t)| t.clone())
            .collect();
        let mut t = keep[k].clone();
        let lead = t.pop().expect("nonzero");
        let mut tail = reduce_terms(t, &others, order);
        tail.push(lead);
        make_monic(&mut tail);
        out.push(tail);
    }
    out.sort_by(|a, b| order.cmp(&b.last().expect("nonzero").0, &a.last().expect("nonzero").0));
    out
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    fn term_lists(&self) -> Vec<Terms> {
        self.elements.iter().map(|g| to_terms(g, self.order)).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let basis = self.term_lists();
        to_poly(self.nvars, reduce_terms(to_terms(f, self.order), &basis, self.order))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let basis = self.term_lists();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = s_poly(&basis[i], &basis[j], self.order);
                if !reduce_terms(s, &basis, self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("nonzero").clone())
            .collect()
    }

    /// Krull dimension of the quotient ring: the largest set of variables
    /// containing the support of no leading monomial.
    pub fn krull_dimension(&self) -> Dimension {
        if self.is_unit_ideal() {
            return Dimension::Empty;
        }
        let masks: Vec<u64> = self.leading_monomials().iter().map(|m| m.support_mask()).collect();
        let n = self.nvars;
        let mut best = 0;
        for s in 0u64..(1u64 << n) {
            let size = s.count_ones() as usize;
            if size <= best {
                continue;
            }
            if masks.iter().all(|&m| m & !s != 0) {
                best = size;
            }
        }
        Dimension::Finite(best)
    }
}

pub fn ideal_membership(f: &Polynomial, g: &GroebnerBasis) -> bool {
    g.contains(f)
}

pub fn krull_dimension(g: &GroebnerBasis) -> Dimension {
    g.krull_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_default(s, n).unwrap()
    }

    #[test]
    fn principal_and_monomial_ideals() {
        let g = buchberger(&[p("v3", 5)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.elements(), &[p("v3", 5)]);
        let g = buchberger(&[p("v3", 5), p("v4", 5), p("v5", 5)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.elements().len(), 3);
        assert_eq!(g.krull_dimension(), Dimension::Finite(2));
    }

    #[test]
    fn twisted_cubic() {
        let gens = [p("v1^2 - v2", 3), p("v1*v3 - 1", 3)];
        let g = buchberger(&gens, MonomialOrder::Lex).unwrap();
        assert!(g.s_pairs_reduce_to_zero());
        for f in &gens {
            assert!(g.contains(f));
        }
        assert_eq!(g.krull_dimension(), Dimension::Finite(1));
        let again = buchberger(g.elements(), MonomialOrder::Lex).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let g = buchberger(&[p("v1", 2), p("v1 + 1", 2)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.krull_dimension(), Dimension::Empty);
        let z = buchberger(&[Polynomial::zero(5)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(z.krull_dimension(), Dimension::Finite(5));
    }

    #[test]
    fn budget_is_enforced() {
        let tight = GroebnerBudget {
            max_vars: 2,
            ..GroebnerBudget::default()
        };
        let r = buchberger_with_budget(&[p("v3", 3)], MonomialOrder::DegRevLex, &tight);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }
}
