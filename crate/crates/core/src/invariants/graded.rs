//! Semi-invariants of one degree, split by weight.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Representation;
use crate::linalg::{Echelon, Matrix, SparseSubspace, SparseVec};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};
use crate::Rational;

/// Monomials of one degree, sorted descending; vectors index into this list.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, d: u32, order: MonomialOrder) -> Self {
        let monomials = monomials_of_degree(nvars, d, order);
        let index = monomials.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        MonomialBasis {
            nvars,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn to_poly(&self, v: &SparseVec) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            v.iter().map(|(k, c)| (self.monomials[*k].clone(), c.clone())),
        )
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn to_sparse(&self, p: &Polynomial) -> SparseVec {
        let mut v: SparseVec = p
            .terms()
            .map(|(m, c)| (*self.index.get(m).expect("polynomial of the basis degree"), c.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Column `c` is the image of monomial `c` under the derivation that
    /// sends `v_k` to the linear form in column `k` of `op`.
    pub fn derivation_columns(&self, op: &Matrix) -> Vec<SparseVec> {
        let n = self.nvars;
        self.monomials
            .iter()
            .map(|m| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                let e = m.exponents();
                for k in 0..n {
                    if e[k] == 0 {
                        continue;
                    }
                    let ek = Rational::from_integer(BigInt::from(e[k]));
                    for l in 0..n {
                        let c = op.get(l, k);
                        if c.is_zero() {
                            continue;
                        }
                        let mut t = e.to_vec();
                        t[k] -= 1;
                        t[l] += 1;
                        let idx = self.index[&Monomial::from_exponents(t)];
                        let entry = acc.entry(idx).or_insert_with(Rational::zero);
                        *entry += &ek * c;
                        if entry.is_zero() {
                            acc.remove(&idx);
                        }
                    }
                }
                acc.into_iter().collect()
            })
            .collect()
    }
}

/// Apply a linear map given by columns to a sparse vector.
pub(crate) fn apply_columns(cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, x) in v {
        for (r, y) in &cols[*c] {
            let e = acc.entry(*r).or_insert_with(Rational::zero);
            *e += x * y;
            if e.is_zero() {
                acc.remove(r);
            }
        }
    }
    acc.into_iter().collect()
}

#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Vec<Rational>,
    pub space: SparseSubspace,
}

#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub basis: MonomialBasis,
    pub spaces: Vec<WeightSpace>,
    /// Some operator had a characteristic polynomial with a factor without
    /// rational roots, so weights outside Q may have been missed.
    pub irrational_weights_possible: bool,
}

impl GradedPiece {
    pub fn polys(&self, w: &WeightSpace) -> Vec<Polynomial> {
        w.space.rows().iter().map(|r| self.basis.to_poly(r)).collect()
    }

    pub fn weight_space(&self, weight: &[Rational]) -> Option<&WeightSpace> {
        self.spaces.iter().find(|w| w.weight == weight)
    }

    pub fn invariants(&self) -> Option<&WeightSpace> {
        self.spaces.iter().find(|w| super::is_zero_weight(&w.weight))
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|w| w.space.dim()).sum()
    }
}

/// Distinct sums of `d` elements (with repetition) of `roots`.
fn d_fold_sums(roots: &[Rational], d: u32) -> Vec<Rational> {
    let mut sums = vec![Rational::zero()];
    for _ in 0..d {
        let mut next: Vec<Rational> = Vec::new();
        for s in &sums {
            for r in roots {
                let t = s + r;
                if !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        sums = next;
    }
    sums.sort();
    sums
}

/// Degree-`d` semi-invariants of `rep`, split into rational weight spaces.
///
/// Elements killed by the derived subalgebra form a subspace preserved by the
/// remaining basis elements, which commute on it; it is split into joint
/// eigenspaces one operator at a time.
pub fn graded_semi_invariants(rep: &Representation, d: u32, order: MonomialOrder) -> GradedPiece {
    let m = rep.nvars();
    let basis = MonomialBasis::new(m, d, order);
    let ncols = basis.len();
    let derived = rep.derived_subalgebra();

    let common = if derived.dim() == 0 {
        SparseSubspace::new(ncols, (0..ncols).map(|c| vec![(c, Rational::one())]))
    } else {
        let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (wi, w) in derived.basis().iter().enumerate() {
            let cols = basis.derivation_columns(&rep.op(w));
            for (c, col) in cols.iter().enumerate() {
                for (r, x) in col {
                    rows.entry((wi, *r)).or_default().push((c, x.clone()));
                }
            }
        }
        let mut e = Echelon::new(ncols);
        for row in rows.values() {
            if e.rank() == ncols {
                break;
            }
            e.insert(row);
        }
        SparseSubspace::new(ncols, e.null_space())
    };

    let complement = derived.complement_columns();
    let mut pieces: Vec<(Vec<Rational>, SparseSubspace)> = Vec::new();
    if common.dim() > 0 {
        pieces.push((Vec::new(), common));
    }
    let mut irrational = false;
    for &u in &complement {
        let op = rep.op(&rep.basis_vector(u));
        let cols = basis.derivation_columns(&op);
        let (roots, leftover) = op.charpoly().rational_roots();
        let root_values: Vec<Rational> = roots.into_iter().map(|(r, _)| r).collect();
        let mut next = Vec::new();
        for (prefix, space) in pieces {
            let k = space.dim();
            let mut mat = Matrix::zeros(k, k);
            for (c, row) in space.rows().iter().enumerate() {
                let img = apply_columns(&cols, row);
                debug_assert!(space.echelon().contains(&img), "operator preserves the subspace");
                for (l, x) in space.coords(&img).into_iter().enumerate() {
                    mat.set(l, c, x);
                }
            }
            let candidates = if leftover == 0 {
                d_fold_sums(&root_values, d)
            } else {
                let (r, left) = mat.charpoly().rational_roots();
                if left > 0 {
                    irrational = true;
                }
                r.into_iter().map(|(x, _)| x).collect()
            };
            for lambda in candidates {
                let shifted = mat.sub(&Matrix::identity(k).scale(&lambda));
                let ns = shifted.null_space();
                if ns.is_empty() {
                    continue;
                }
                let sub = if ns.len() == k {
                    space.clone()
                } else {
                    SparseSubspace::new(ncols, ns.iter().map(|c| space.combine(c)))
                };
                let mut p = prefix.clone();
                p.push(lambda);
                next.push((p, sub));
            }
        }
        pieces = next;
    }

    let n = rep.algebra().dim();
    let mut spaces: Vec<WeightSpace> = pieces
        .into_iter()
        .map(|(lambdas, space)| {
            let mut chi = vec![Rational::zero(); n];
            for (&c, l) in complement.iter().zip(&lambdas) {
                chi[c] = l.clone();
            }
            for (row, &p) in derived.basis().iter().zip(derived.pivots()) {
                let s: Rational = complement.iter().map(|&c| &row[c] * &chi[c]).sum();
                chi[p] = -s;
            }
            WeightSpace { weight: chi, space }
        })
        .collect();
    spaces.sort_by(|a, b| a.weight.cmp(&b.weight));

    let piece = GradedPiece {
        degree: d,
        basis,
        spaces,
        irrational_weights_possible: irrational,
    };
    for w in &piece.spaces {
        for b in derived.basis() {
            let val: Rational = b.iter().zip(&w.weight).map(|(x, y)| x * y).sum();
            assert!(val.is_zero(), "weight vanishes on the derived subalgebra");
        }
        for f in piece.polys(w) {
            assert!(rep.is_semi_invariant(&f, &w.weight), "semi-invariant identity");
        }
    }
    piece
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;
    use crate::poly::text::parse_default;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn panyushev() -> LieAlgebra {
        LieAlgebra::from_sparse(
            "panyushev",
            crate::poly::default_names(4),
            &[
                (0, 1, vec![(1, q(1))]),
                (0, 2, vec![(2, q(1))]),
                (0, 3, vec![(3, q(-1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn panyushev_linear_and_quadratic() {
        let rep = Representation::adjoint(&panyushev());
        let p1 = graded_semi_invariants(&rep, 1, MonomialOrder::DegRevLex);
        assert!(p1.invariants().is_none());
        let weights: Vec<Rational> = p1.spaces.iter().map(|w| w.weight[0].clone()).collect();
        assert_eq!(weights, vec![q(-1), q(1)]);
        assert_eq!(p1.spaces[0].space.dim(), 1);
        assert_eq!(p1.spaces[1].space.dim(), 2);
        let p2 = graded_semi_invariants(&rep, 2, MonomialOrder::DegRevLex);
        let inv = p2.polys(p2.invariants().unwrap());
        let v = |s: &str| parse_default(s, 4).unwrap();
        assert_eq!(inv, vec![v("v2*v4"), v("v3*v4")]);
    }

    #[test]
    fn rotation_weights_are_flagged() {
        // [t, x] = y, [t, y] = -x: ad t has eigenvalues +-i on span(x, y)
        let g = LieAlgebra::from_sparse(
            "rot",
            vec!["t".into(), "x".into(), "y".into()],
            &[(0, 1, vec![(2, q(1))]), (0, 2, vec![(1, q(-1))])],
        )
        .unwrap();
        let rep = Representation::adjoint(&g);
        let p2 = graded_semi_invariants(&rep, 2, MonomialOrder::DegRevLex);
        let inv = p2.polys(p2.invariants().unwrap());
        let names: Vec<String> = vec!["t".into(), "x".into(), "y".into()];
        let expect = crate::poly::parse_poly("x^2 + y^2", &names).unwrap();
        assert!(inv.contains(&expect));
        assert!(p2.irrational_weights_possible);
    }
}
