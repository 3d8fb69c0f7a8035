use std::sync::OnceLock;

use num_traits::{One, Zero};
use proptest::prelude::*;

use semicenter::catalog::{filiform, sample_catalog};
use semicenter::invariants::{minimal_generators, poisson_bracket, GeneratorSet, Mode};
use semicenter::kernel::{apply_structure_matrix, kernel_of_rho};
use semicenter::lie::LieAlgebra;
use semicenter::linalg::Matrix;
use semicenter::pfaffian::{certified_rank, fundamental_semi_invariant, pfaffian, singular_locus_codim, DEFAULT_SEED};
use semicenter::poly::poly_gcd;
use semicenter::reduction::{reduce_one_step, Branch};
use semicenter::{Monomial, MonomialOrder, Polynomial, Rational};

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn catalog() -> &'static [LieAlgebra] {
    static CELL: OnceLock<Vec<LieAlgebra>> = OnceLock::new();
    CELL.get_or_init(sample_catalog)
}

/// Semi-invariant generators of every catalog entry up to degree 3.
fn catalog_generators() -> &'static [GeneratorSet] {
    static CELL: OnceLock<Vec<GeneratorSet>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog()
            .iter()
            .map(|g| minimal_generators(g, 3, Mode::AllSemiInvariants, ORDER))
            .collect()
    })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn arb_poly(nvars: usize, max_deg: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), arb_rational()), 0..5).prop_map(move |terms| {
        Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)))
    })
}

fn arb_point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(arb_rational(), n)
}

/// `v_i . f = sum_j [v_i, v_j] df/dv_j`, written out from the brackets.
fn act_by_basis(g: &LieAlgebra, i: usize, f: &Polynomial) -> Polynomial {
    let n = g.dim();
    let mut out = Polynomial::zero(n);
    for j in 0..n {
        let df = f.partial_derivative(j).unwrap();
        if df.is_zero() {
            continue;
        }
        out = &out + &(&Polynomial::linear(&g.bracket(i, j)) * &df);
    }
    out
}

fn act(g: &LieAlgebra, x: &[Rational], f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(g.dim());
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            out = &out + &act_by_basis(g, i, f).scale(c);
        }
    }
    out
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    d
}

/// The same algebra in the basis `u_a = sum_k p[k][a] v_k`.
fn change_basis(g: &LieAlgebra, p: &Matrix) -> LieAlgebra {
    let n = g.dim();
    let inv = p.inverse().expect("invertible");
    let mut data = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let w = g.bracket_vec(&p.col(a), &p.col(b));
            let u = inv.mul_vec(&w);
            let entries: Vec<(usize, Rational)> = u.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if !entries.is_empty() {
                data.push((a, b, entries));
            }
        }
    }
    let names = (1..=n).map(|i| format!("u{i}")).collect();
    LieAlgebra::from_sparse("changed", names, &data).expect("still a Lie algebra")
}

/// Unit upper triangular times unit lower triangular, so always invertible.
fn arb_basis_change(n: usize) -> impl Strategy<Value = Matrix> {
    (
        prop::collection::vec(-2i64..=2, n * n),
        prop::collection::vec(-2i64..=2, n * n),
    )
        .prop_map(move |(a, b)| {
            let upper = Matrix::from_rows(
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i == j {
                                    q(1)
                                } else if i < j {
                                    q(a[i * n + j])
                                } else {
                                    q(0)
                                }
                            })
                            .collect()
                    })
                    .collect(),
            );
            let lower = Matrix::from_rows(
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i == j {
                                    q(1)
                                } else if i > j {
                                    q(b[i * n + j])
                                } else {
                                    q(0)
                                }
                            })
                            .collect()
                    })
                    .collect(),
            );
            upper.mul(&lower)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in arb_poly(3, 2), b in arb_poly(3, 2), c in arb_poly(3, 2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(3, 3), b in arb_poly(3, 3), x in arb_point(3)) {
        let ea = a.evaluate(&x).unwrap();
        let eb = b.evaluate(&x).unwrap();
        prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), ea + eb);
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(a in arb_poly(3, 2), b in arb_poly(3, 2), c in arb_poly(3, 2)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let ac = &a * &c;
        let bc = &b * &c;
        let g = poly_gcd(&ac, &bc).unwrap();
        prop_assert!(g.divides(&ac));
        prop_assert!(g.divides(&bc));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn adjoint_action_is_a_derivation(idx in 0usize..64, f in arb_poly(6, 2), h in arb_poly(6, 2), x in arb_point(6)) {
        let six: Vec<&LieAlgebra> = catalog().iter().filter(|g| g.dim() == 6).collect();
        let g = six[idx % six.len()];
        let f = f.homogeneous_part(2);
        let h = h.homogeneous_part(1);
        let lhs = g.ad_poly(&x, &(&f * &h));
        let rhs = &(&g.ad_poly(&x, &f) * &h) + &(&f * &g.ad_poly(&x, &h));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, act(g, &x, &(&f * &h)));
    }

    #[test]
    fn generators_are_semi_invariants(idx in 0usize..64, x in arb_point(8)) {
        let all = catalog_generators();
        let k = idx % all.len();
        let g = &catalog()[k];
        let x = &x[..g.dim()];
        for s in &all[k].generators {
            let chi: Rational = s.weight.iter().zip(x).map(|(a, b)| a * b).sum();
            prop_assert_eq!(act(g, x, &s.poly), s.poly.scale(&chi));
        }
    }

    #[test]
    fn pfaffian_squared_is_determinant(idx in 0usize..64, x in arb_point(8), pick in any::<u8>()) {
        let g = &catalog()[idx % catalog().len()];
        let n = g.dim();
        let x = &x[..n];
        let mut rows: Vec<usize> = (0..n).filter(|i| pick >> i & 1 == 1).collect();
        if rows.len() % 2 == 1 {
            rows.pop();
        }
        let b = g.structure_matrix();
        let pf = pfaffian(&b, &rows).unwrap().evaluate(x).unwrap();
        let block: Vec<Vec<Rational>> = rows
            .iter()
            .map(|&i| rows.iter().map(|&j| b[i][j].evaluate(x).unwrap()).collect())
            .collect();
        prop_assert_eq!(&pf * &pf, det(block));
    }

    #[test]
    fn index_and_semi_invariant_degree_survive_basis_change(idx in 0usize..64, p in arb_basis_change(4)) {
        let four: Vec<&LieAlgebra> = catalog().iter().filter(|g| g.dim() == 4).collect();
        let g = four[idx % four.len()];
        let h = change_basis(g, &p);
        let rg = certified_rank(&g.structure_matrix(), DEFAULT_SEED).rank;
        let rh = certified_rank(&h.structure_matrix(), DEFAULT_SEED).rank;
        prop_assert_eq!(rg, rh);
        prop_assert_eq!(rg % 2, 0);
        prop_assert_eq!(
            fundamental_semi_invariant(g, rg).degree,
            fundamental_semi_invariant(&h, rh).degree
        );
        prop_assert_eq!(g.is_nilpotent(), h.is_nilpotent());
    }
}

#[test]
fn semi_invariants_poisson_commute() {
    for (g, gens) in catalog().iter().zip(catalog_generators()) {
        for a in &gens.generators {
            for b in &gens.generators {
                assert!(poisson_bracket(&a.poly, &b.poly, g).is_zero(), "{}", g.name());
            }
        }
    }
}

#[test]
fn weights_vanish_on_derived_algebra() {
    for (g, gens) in catalog().iter().zip(catalog_generators()) {
        for s in &gens.generators {
            for v in g.derived_subalgebra().basis() {
                let x: Rational = s.weight.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(x.is_zero(), "{}", g.name());
            }
        }
    }
}

#[test]
fn nilpotent_algebras_have_only_invariants() {
    for (g, gens) in catalog().iter().zip(catalog_generators()) {
        if g.is_nilpotent() {
            assert!(gens.generators.iter().all(|s| s.is_invariant()), "{}", g.name());
        }
    }
}

#[test]
fn trivial_fundamental_semi_invariant_iff_codim_at_least_two() {
    for g in catalog() {
        let r = certified_rank(&g.structure_matrix(), DEFAULT_SEED).rank;
        let d = fundamental_semi_invariant(g, r).degree;
        let codim = singular_locus_codim(g, r, ORDER).unwrap();
        let big = codim.is_none_or(|c| c >= 2);
        assert_eq!(d == 0, big, "{}: d = {d}, codim {codim:?}", g.name());
    }
}

#[test]
fn kernel_elements_annihilate_structure_matrix() {
    for g in catalog() {
        let r = certified_rank(&g.structure_matrix(), DEFAULT_SEED).rank;
        let k = kernel_of_rho(g, 3, g.dim() - r, ORDER).unwrap();
        let b = g.structure_matrix();
        for w in &k.generators {
            assert!(apply_structure_matrix(&w.components, &b)
                .iter()
                .all(Polynomial::is_zero));
        }
        assert!(k.generators.len() >= k.generator_rank);
    }
}

#[test]
fn decided_reductions_preserve_c_value() {
    for (g, gens) in catalog().iter().zip(catalog_generators()) {
        for s in gens.generators.iter().filter(|s| !s.is_invariant()) {
            let step = reduce_one_step(g, &s.weight, 3, ORDER, DEFAULT_SEED).unwrap();
            if step.branch != Branch::Undecided {
                assert_eq!(step.c_value_preserved(), Some(true), "{}", g.name());
            }
        }
    }
}

#[test]
fn catalog_json_round_trip() {
    for g in catalog() {
        assert_eq!(&LieAlgebra::from_json_str(&g.to_json_string()).unwrap(), g);
    }
}

#[test]
fn degree_sum_grows_with_bound() {
    let g = filiform(5).unwrap();
    let sums: Vec<u32> = (1..=5)
        .map(|d| minimal_generators(&g, d, Mode::InvariantsOnly, ORDER).degree_sum())
        .collect();
    assert!(sums.windows(2).all(|w| w[0] <= w[1]), "{sums:?}");
    assert_eq!(sums, vec![1, 3, 6, 10, 10]);
}
