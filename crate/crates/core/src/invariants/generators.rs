//! Minimal generators of the (semi-)invariant subalgebra up to a degree
//! bound, algebraic independence and derived numerical checks.

use serde::Serialize;

use super::graded::{graded_semi_invariants, GradedPiece};
use super::relations::Relation;
use super::{is_zero_weight, Representation, SemiInvariant};
use crate::lie::LieAlgebra;
use crate::linalg::{Echelon, SparseSubspace};
use crate::poly::{MonomialOrder, Polynomial};
use crate::polymatrix::{jacobian, poly_matrix_rank};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    InvariantsOnly,
    AllSemiInvariants,
}

/// Generators found degree by degree; complete only up to `degree_bound`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub generators: Vec<SemiInvariant>,
    pub mode: Mode,
    pub degree_bound: u32,
    pub order: MonomialOrder,
    pub nvars: usize,
    /// Dimension of the degree-`d` part of the searched subalgebra, for `d = 1..=degree_bound`.
    pub graded_dims: Vec<usize>,
    /// Degrees at which weights outside Q could not be excluded.
    pub irrational_degrees: Vec<u32>,
    /// Some nonzero weight occurred among the semi-invariants up to the bound.
    pub proper_semi_invariants_seen: bool,
}

impl GeneratorSet {
    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn degree_sum(&self) -> u32 {
        self.generators.iter().map(|g| g.degree).sum()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn invariant_generators(&self) -> Vec<SemiInvariant> {
        self.generators.iter().filter(|g| g.is_invariant()).cloned().collect()
    }

    pub fn has_proper_generators(&self) -> bool {
        self.generators.iter().any(|g| !g.is_invariant())
    }
}

struct Product {
    poly: Polynomial,
    weight: Vec<Rational>,
    max_gen: usize,
}

fn add_weights(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn minimal_generators(g: &LieAlgebra, bound: u32, mode: Mode, order: MonomialOrder) -> GeneratorSet {
    minimal_generators_for(&Representation::adjoint(g), bound, mode, order)
}

/// For each degree, new generators span a complement of the products of
/// earlier generators inside each weight space. Both the product span and
/// the complement are taken in reduced echelon form over the monomial basis,
/// so generators are monic and independent of internal choices.
pub fn minimal_generators_for(rep: &Representation, bound: u32, mode: Mode, order: MonomialOrder) -> GeneratorSet {
    let n = rep.algebra().dim();
    let nvars = rep.nvars();
    let mut generators: Vec<SemiInvariant> = Vec::new();
    let mut products: Vec<Vec<Product>> = vec![vec![Product {
        poly: Polynomial::one(nvars),
        weight: vec![Rational::from_integer(0.into()); n],
        max_gen: 0,
    }]];
    let mut graded_dims = Vec::new();
    let mut irrational_degrees = Vec::new();
    let mut proper_seen = false;

    for d in 1..=bound {
        let piece: GradedPiece = graded_semi_invariants(rep, d, order);
        if piece.irrational_weights_possible {
            irrational_degrees.push(d);
        }
        if piece.spaces.iter().any(|w| !is_zero_weight(&w.weight)) {
            proper_seen = true;
        }
        let mut level: Vec<Product> = Vec::new();
        for (i, gen) in generators.iter().enumerate() {
            let rest = d - gen.degree;
            if rest == 0 {
                continue;
            }
            for p in &products[rest as usize] {
                if p.max_gen <= i {
                    level.push(Product {
                        poly: &p.poly * &gen.poly,
                        weight: add_weights(&p.weight, &gen.weight),
                        max_gen: i,
                    });
                }
            }
        }

        let mut found: Vec<(usize, SemiInvariant)> = Vec::new();
        let mut dim_here = 0;
        for ws in &piece.spaces {
            if mode == Mode::InvariantsOnly && !is_zero_weight(&ws.weight) {
                continue;
            }
            dim_here += ws.space.dim();
            let mut prod_span = Echelon::new(piece.basis.len());
            for p in level.iter().filter(|p| p.weight == ws.weight) {
                prod_span.insert(&piece.basis.to_sparse(&p.poly));
            }
            let reduced = ws
                .space
                .rows()
                .iter()
                .map(|r| prod_span.reduce(r))
                .filter(|r| !r.is_empty());
            let fresh = SparseSubspace::new(piece.basis.len(), reduced);
            for row in fresh.rows() {
                found.push((
                    row[0].0,
                    SemiInvariant {
                        poly: piece.basis.to_poly(row),
                        weight: ws.weight.clone(),
                        degree: d,
                    },
                ));
            }
        }
        graded_dims.push(dim_here);
        found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.weight.cmp(&b.1.weight)));
        for (_, s) in found {
            let idx = generators.len();
            level.push(Product {
                poly: s.poly.clone(),
                weight: s.weight.clone(),
                max_gen: idx,
            });
            generators.push(s);
        }
        products.push(level);
    }

    GeneratorSet {
        generators,
        mode,
        degree_bound: bound,
        order,
        nvars,
        graded_dims,
        irrational_degrees,
        proper_semi_invariants_seen: proper_seen,
    }
}

/// Jacobian rank over the fraction field, with a nonzero minor as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Independence {
    pub independent: bool,
    pub rank: usize,
    pub minor_rows: Vec<usize>,
    pub minor_cols: Vec<usize>,
    pub minor: Polynomial,
}

pub fn algebraically_independent(polys: &[Polynomial], nvars: usize) -> Independence {
    let r = poly_matrix_rank(&jacobian(polys, nvars), nvars);
    Independence {
        independent: r.rank == polys.len(),
        rank: r.rank,
        minor_rows: r.rows,
        minor_cols: r.cols,
        minor: r.minor,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum TrdegVerdict {
    /// Jacobian rank of the invariant generators equals `dim - r`.
    Consistent {
        rank: usize,
    },
    /// Fewer independent invariants than predicted; more may exist above the bound.
    Deficient {
        rank: usize,
        expected: usize,
        degree_bound: u32,
    },
    /// More independent invariants than the transcendence degree allows.
    Contradiction {
        rank: usize,
        expected: usize,
    },
    NotApplicable {
        reason: String,
    },
}

/// Compare the number of algebraically independent invariants with
/// `dim g - r(g)`; meaningful only when no proper semi-invariant exists.
pub fn trdeg_check(gens: &GeneratorSet, dim: usize, rank: usize) -> TrdegVerdict {
    if gens.mode != Mode::AllSemiInvariants {
        return TrdegVerdict::NotApplicable {
            reason: "search was restricted to invariants, so proper semi-invariants were not looked for".into(),
        };
    }
    if gens.proper_semi_invariants_seen {
        return TrdegVerdict::NotApplicable {
            reason: "proper semi-invariants exist".into(),
        };
    }
    let polys: Vec<Polynomial> = gens.invariant_generators().into_iter().map(|g| g.poly).collect();
    let expected = dim - rank;
    let r = if polys.is_empty() {
        0
    } else {
        algebraically_independent(&polys, gens.nvars).rank
    };
    match r.cmp(&expected) {
        std::cmp::Ordering::Equal => TrdegVerdict::Consistent { rank: r },
        std::cmp::Ordering::Less => TrdegVerdict::Deficient {
            rank: r,
            expected,
            degree_bound: gens.degree_bound,
        },
        std::cmp::Ordering::Greater => TrdegVerdict::Contradiction { rank: r, expected },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GorensteinValue {
    Defined {
        value: i64,
        generator_degree_sum: u32,
        relation_degree_sum: u32,
    },
    Undefined {
        reason: String,
    },
}

/// `sum deg f_i - sum deg p_j` for a polynomial ring or a complete
/// intersection presentation.
pub fn gorenstein_invariant(gen_degrees: &[u32], relations: &[Relation], jacobian_rank: usize) -> GorensteinValue {
    let gsum: u32 = gen_degrees.iter().sum();
    let rsum: u32 = relations.iter().map(|r| r.degree).sum();
    let codim = gen_degrees.len().saturating_sub(jacobian_rank);
    if relations.len() == codim {
        GorensteinValue::Defined {
            value: gsum as i64 - rsum as i64,
            generator_degree_sum: gsum,
            relation_degree_sum: rsum,
        }
    } else {
        GorensteinValue::Undefined {
            reason: format!(
                "{} relations for {} generators of Jacobian rank {}: not a complete intersection",
                relations.len(),
                gen_degrees.len(),
                jacobian_rank
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn filiform(n: usize) -> LieAlgebra {
        let one = Rational::from_integer(1.into());
        let data: Vec<_> = (1..n - 1).map(|i| (0, i, vec![(i + 1, one.clone())])).collect();
        LieAlgebra::from_sparse("L", crate::poly::default_names(n), &data).unwrap()
    }

    #[test]
    fn filiform_four_generators() {
        let gens = minimal_generators(&filiform(4), 3, Mode::InvariantsOnly, MonomialOrder::DegRevLex);
        assert_eq!(gens.degrees(), vec![1, 2]);
        let v = |s: &str| parse_default(s, 4).unwrap();
        assert_eq!(gens.generators[0].poly, v("v4"));
        // monic under degrevlex: the leading monomial v3^2 comes first
        assert_eq!(gens.generators[1].poly, v("v3^2 - 2*v2*v4"));
        let ind = algebraically_independent(&gens.polys(), 4);
        assert!(ind.independent);
        assert_eq!(ind.rank, 2);
    }

    #[test]
    fn abelian_generators_are_coordinates() {
        let gens = minimal_generators(
            &LieAlgebra::abelian(2),
            2,
            Mode::AllSemiInvariants,
            MonomialOrder::DegRevLex,
        );
        assert_eq!(gens.degrees(), vec![1, 1]);
        assert_eq!(gens.graded_dims, vec![2, 3]);
    }

    #[test]
    fn dependent_pair() {
        let v = |s: &str| parse_default(s, 4).unwrap();
        let ind = algebraically_independent(&[v("v3"), v("v3^2")], 4);
        assert!(!ind.independent);
        assert_eq!(ind.rank, 1);
    }
}
