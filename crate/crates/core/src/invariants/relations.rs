//! Relations among generators, found degree by degree as linear
//! dependencies among products.

use std::collections::HashMap;

use super::graded::MonomialBasis;
use super::SemiInvariant;
use crate::error::{Error, Result};
use crate::grobner::buchberger;
use crate::linalg::{linear_dependencies, Echelon, SparseSubspace, SparseVec};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::Rational;

/// A weighted-homogeneous polynomial in formal symbols `f1..fr` that vanishes
/// after substituting the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub poly: Polynomial,
    pub degree: u32,
}

pub fn formal_names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("f{i}")).collect()
}

/// Cap on formal monomials of one weighted degree.
pub const DEFAULT_FORMAL_MONOMIAL_CAP: usize = 20_000;

/// Exponent vectors `a` with `sum a_i * degrees[i] = e`.
fn weighted_monomials(degrees: &[u32], e: u32, cap: usize) -> Result<Vec<Monomial>> {
    let r = degrees.len();
    let mut out = Vec::new();
    let mut cur = vec![0u16; r];
    fn rec(
        i: usize,
        left: u32,
        degrees: &[u32],
        cur: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
        cap: usize,
    ) -> Result<()> {
        if i == degrees.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(cur.clone()));
                if out.len() > cap {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {cap} formal monomials in one degree"
                    )));
                }
            }
            return Ok(());
        }
        let mut k = 0u32;
        while k * degrees[i] <= left {
            cur[i] = k as u16;
            rec(i + 1, left - k * degrees[i], degrees, cur, out, cap)?;
            if degrees[i] == 0 {
                break;
            }
            k += 1;
        }
        cur[i] = 0;
        Ok(())
    }
    rec(0, e, degrees, &mut cur, &mut out, cap)?;
    out.sort_by(|a, b| MonomialOrder::GrLex.cmp(b, a));
    Ok(out)
}

struct Expander<'a> {
    gens: &'a [Polynomial],
    nvars: usize,
    memo: HashMap<Monomial, Polynomial>,
}

impl<'a> Expander<'a> {
    fn expand(&mut self, a: &Monomial) -> Polynomial {
        if a.is_one() {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = self.memo.get(a) {
            return p.clone();
        }
        let i = a.exponents().iter().position(|&e| e > 0).expect("not one");
        let prev = a.div(&Monomial::var(a.nvars(), i)).expect("positive exponent");
        let p = &self.expand(&prev) * &self.gens[i];
        self.memo.insert(a.clone(), p.clone());
        p
    }

    fn substitute(&mut self, rel: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in rel.terms() {
            acc = &acc + &self.expand(m).scale(c);
        }
        acc
    }
}

pub fn find_relations(gens: &[SemiInvariant], bound: u32, order: MonomialOrder) -> Result<Vec<Relation>> {
    find_relations_with_budget(gens, bound, order, DEFAULT_FORMAL_MONOMIAL_CAP)
}

/// For each weighted degree up to `bound`, relations are the kernel of the
/// expansion map modulo formal multiples of lower relations; each is monic in
/// its grlex-largest formal monomial.
pub fn find_relations_with_budget(
    gens: &[SemiInvariant],
    bound: u32,
    order: MonomialOrder,
    cap: usize,
) -> Result<Vec<Relation>> {
    let r = gens.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let nvars = gens[0].poly.nvars();
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree).collect();
    if degrees.contains(&0) {
        return Err(Error::InvalidInput("generators must have positive degree".into()));
    }
    let polys: Vec<Polynomial> = gens.iter().map(|g| g.poly.clone()).collect();
    let mut ex = Expander {
        gens: &polys,
        nvars,
        memo: HashMap::new(),
    };
    let mut relations: Vec<Relation> = Vec::new();
    let mut formal_by_degree: Vec<Vec<Monomial>> = vec![vec![Monomial::one(r)]];
    for e in 1..=bound {
        let cols = weighted_monomials(&degrees, e, cap)?;
        formal_by_degree.push(cols.clone());
        if cols.len() < 2 {
            continue;
        }
        let basis = MonomialBasis::new(nvars, e, order);
        let images: Vec<SparseVec> = cols.iter().map(|a| basis.to_sparse(&ex.expand(a))).collect();
        let kernel = linear_dependencies(&images);
        if kernel.is_empty() {
            continue;
        }
        let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let to_vec = |p: &Polynomial| -> SparseVec {
            let mut v: SparseVec = p.terms().map(|(m, c)| (index[m], c.clone())).collect();
            v.sort_by_key(|x| x.0);
            v
        };
        let mut multiples = Echelon::new(cols.len());
        for rel in &relations {
            for mu in &formal_by_degree[(e - rel.degree) as usize] {
                multiples.insert(&to_vec(&rel.poly.mul_monomial(mu, &Rational::from_integer(1.into()))));
            }
        }
        let fresh = SparseSubspace::new(
            cols.len(),
            kernel.iter().map(|v| multiples.reduce(v)).filter(|v| !v.is_empty()),
        );
        let earlier: Vec<Polynomial> = relations.iter().map(|x| x.poly.clone()).collect();
        let gb = if earlier.is_empty() || r > 10 {
            None
        } else {
            Some(buchberger(&earlier, MonomialOrder::DegRevLex)?)
        };
        for row in fresh.rows() {
            let p = Polynomial::from_terms(r, row.iter().map(|(k, c)| (cols[*k].clone(), c.clone())));
            if !ex.substitute(&p).is_zero() {
                return Err(Error::Internal("relation does not vanish on the generators".into()));
            }
            if let Some(gb) = &gb {
                if gb.contains(&p) {
                    return Err(Error::Internal("new relation lies in the ideal of earlier ones".into()));
                }
            }
            relations.push(Relation { poly: p, degree: e });
        }
    }
    Ok(relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn inv(s: &str, n: usize) -> SemiInvariant {
        let poly = parse_default(s, n).unwrap();
        let degree = poly.degree().finite().unwrap();
        SemiInvariant {
            poly,
            weight: vec![Rational::from_integer(0.into()); n],
            degree,
        }
    }

    #[test]
    fn square_relation() {
        let rels = find_relations(&[inv("v3", 3), inv("v3^2", 3)], 2, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].poly, parse_default("v1^2 - v2", 2).unwrap());
        assert_eq!(rels[0].degree, 2);
    }

    #[test]
    fn free_generators_have_no_relations() {
        let rels = find_relations(&[inv("v4", 4), inv("v3^2 - 2*v2*v4", 4)], 6, MonomialOrder::DegRevLex).unwrap();
        assert!(rels.is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let gens: Vec<SemiInvariant> = (1..=4).map(|i| inv(&format!("v{i}"), 4)).collect();
        let r = find_relations_with_budget(&gens, 6, MonomialOrder::DegRevLex, 10);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }
}
