//! The kernel of the anchor map `rho: Sg (x) g -> Der(Sg)`, computed degree by
//! degree as the solutions `A` of `sum_i A_i [v_i, v_j] = 0`.

use serde::Serialize;

use crate::criteria::{Certainty, CriterionVerdict, Status};
use crate::error::{Error, Result};
use crate::invariants::MonomialBasis;
use crate::lie::{LieAlgebra, SkewPolyMatrix};
use crate::linalg::{linear_dependencies, Echelon, SparseSubspace, SparseVec};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};
use crate::polymatrix::poly_matrix_rank;

/// A homogeneous element of `Sg^n` annihilating every column of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelElement {
    pub components: Vec<Polynomial>,
    pub degree: u32,
}

/// `sum_k coefficients[k] * generators[k] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub coefficients: Vec<Polynomial>,
    pub degree: u32,
}

#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub generators: Vec<KernelElement>,
    pub degree_bound: u32,
    /// Rank of `ker rho` as a module, `dim g - r(g)`.
    pub rank: usize,
    /// Rank of the generator matrix over the fraction field.
    pub generator_rank: usize,
    pub syzygy: Option<Syzygy>,
    pub order: MonomialOrder,
}

/// Caps the unknowns of a single syzygy search degree.
pub const SYZYGY_UNKNOWN_CAP: usize = 40_000;

struct Layout {
    n: usize,
    basis: MonomialBasis,
}

impl Layout {
    fn new(n: usize, d: u32, order: MonomialOrder) -> Self {
        Layout {
            n,
            basis: MonomialBasis::new(n, d, order),
        }
    }

    fn ncols(&self) -> usize {
        self.n * self.basis.len()
    }

    /// Component-major coordinates of a vector of homogeneous polynomials.
    fn to_sparse(&self, comps: &[Polynomial]) -> SparseVec {
        let len = self.basis.len();
        let mut out = SparseVec::new();
        for (i, p) in comps.iter().enumerate() {
            out.extend(self.basis.to_sparse(p).into_iter().map(|(k, c)| (i * len + k, c)));
        }
        out
    }

    fn to_components(&self, v: &SparseVec) -> Vec<Polynomial> {
        let len = self.basis.len();
        let mut parts: Vec<SparseVec> = vec![Vec::new(); self.n];
        for (c, x) in v {
            parts[c / len].push((c % len, x.clone()));
        }
        parts.iter().map(|p| self.basis.to_poly(p)).collect()
    }
}

/// `A . B` as the row vector `(sum_i A_i B[i][j])_j`.
pub fn apply_structure_matrix(a: &[Polynomial], b: &SkewPolyMatrix) -> Vec<Polynomial> {
    let n = b.len();
    (0..n)
        .map(|j| {
            let mut acc = Polynomial::zero(n);
            for i in 0..n {
                if !a[i].is_zero() && !b[i][j].is_zero() {
                    acc = &acc + &(&a[i] * &b[i][j]);
                }
            }
            acc
        })
        .collect()
}

fn degree_d_kernel(b: &SkewPolyMatrix, layout: &Layout, next: &MonomialBasis) -> Vec<SparseVec> {
    let n = layout.n;
    let len_next = next.len();
    let mut images: Vec<SparseVec> = Vec::with_capacity(layout.ncols());
    for i in 0..n {
        for m in layout.basis.monomials() {
            let mono = Polynomial::from_terms(n, [(m.clone(), crate::Rational::from_integer(1.into()))]);
            let mut img = SparseVec::new();
            for j in 0..n {
                if b[i][j].is_zero() {
                    continue;
                }
                let prod = &mono * &b[i][j];
                img.extend(next.to_sparse(&prod).into_iter().map(|(k, c)| (j * len_next + k, c)));
            }
            img.sort_by_key(|e| e.0);
            images.push(img);
        }
    }
    linear_dependencies(&images)
}

/// Minimal homogeneous generators of `ker rho` in degrees `0..=bound`, each a
/// reduced echelon row over (component, monomial) coordinates, together with
/// a syzygy among them when there are more generators than the rank.
pub fn kernel_of_rho(g: &LieAlgebra, bound: u32, index: usize, order: MonomialOrder) -> Result<KernelBasis> {
    let n = g.dim();
    let b = g.structure_matrix();
    let mut generators: Vec<KernelElement> = Vec::new();
    for d in 0..=bound {
        let layout = Layout::new(n, d, order);
        let next = MonomialBasis::new(n, d + 1, order);
        let kernel = degree_d_kernel(&b, &layout, &next);
        if kernel.is_empty() {
            continue;
        }
        let mut multiples = Echelon::new(layout.ncols());
        for w in &generators {
            for mu in monomials_of_degree(n, d - w.degree, order) {
                let comps: Vec<Polynomial> = w
                    .components
                    .iter()
                    .map(|p| p.mul_monomial(&mu, &crate::Rational::from_integer(1.into())))
                    .collect();
                multiples.insert(&layout.to_sparse(&comps));
            }
        }
        let fresh = SparseSubspace::new(
            layout.ncols(),
            kernel.iter().map(|v| multiples.reduce(v)).filter(|v| !v.is_empty()),
        );
        for row in fresh.rows() {
            let components = layout.to_components(row);
            if apply_structure_matrix(&components, &b).iter().any(|p| !p.is_zero()) {
                return Err(Error::Internal("kernel element does not annihilate B".into()));
            }
            generators.push(KernelElement { components, degree: d });
        }
    }
    let generator_rank = if generators.is_empty() {
        0
    } else {
        let m: Vec<Vec<Polynomial>> = generators.iter().map(|w| w.components.clone()).collect();
        poly_matrix_rank(&m, n).rank
    };
    if generator_rank > index {
        return Err(Error::Internal(format!(
            "kernel generators have rank {generator_rank} above the index {index}"
        )));
    }
    let syzygy = if generators.len() > generator_rank {
        find_syzygy(&generators, n, bound + 2, order)?
    } else {
        None
    };
    Ok(KernelBasis {
        generators,
        degree_bound: bound,
        rank: index,
        generator_rank,
        syzygy,
        order,
    })
}

/// Lowest-degree relation `sum_k c_k w_k = 0` with homogeneous `c_k`,
/// searched up to total degree `max_total`.
pub fn find_syzygy(gens: &[KernelElement], n: usize, max_total: u32, order: MonomialOrder) -> Result<Option<Syzygy>> {
    let min = gens.iter().map(|w| w.degree).min().unwrap_or(0);
    for t in min..=max_total {
        let layout = Layout::new(n, t, order);
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for (k, w) in gens.iter().enumerate() {
            if w.degree <= t {
                unknowns.extend(monomials_of_degree(n, t - w.degree, order).into_iter().map(|m| (k, m)));
            }
        }
        if unknowns.len() > SYZYGY_UNKNOWN_CAP {
            return Err(Error::BudgetExceeded(format!(
                "syzygy search in degree {t} needs {} unknowns",
                unknowns.len()
            )));
        }
        let one = crate::Rational::from_integer(1.into());
        let images: Vec<SparseVec> = unknowns
            .iter()
            .map(|(k, m)| {
                let comps: Vec<Polynomial> = gens[*k].components.iter().map(|p| p.mul_monomial(m, &one)).collect();
                layout.to_sparse(&comps)
            })
            .collect();
        let kernel = linear_dependencies(&images);
        if let Some(v) = SparseSubspace::new(unknowns.len(), kernel).rows().first() {
            let mut coefficients = vec![Polynomial::zero(n); gens.len()];
            for (u, c) in v {
                let (k, m) = &unknowns[*u];
                coefficients[*k] = &coefficients[*k] + &Polynomial::from_terms(n, [(m.clone(), c.clone())]);
            }
            return Ok(Some(Syzygy {
                coefficients,
                degree: t,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Freeness {
    /// More minimal generators than the rank, so the module is not free.
    NotFree,
    /// As many generators as the rank and independent, as far as the bound reaches.
    FreeUpToDegree,
    Undetermined,
}

impl KernelBasis {
    pub fn freeness(&self) -> Freeness {
        let count = self.generators.len();
        if count > self.rank {
            Freeness::NotFree
        } else if count == self.rank && self.generator_rank == self.rank {
            Freeness::FreeUpToDegree
        } else {
            Freeness::Undetermined
        }
    }
}

pub const KERNEL_FREENESS: &str = "kernel-freeness";

/// A graded torsion-free module minimally generated by more elements than
/// its rank is not free, so that verdict is unconditional.
pub fn freeness_verdict(k: &KernelBasis) -> CriterionVerdict {
    let count = k.generators.len() as i64;
    let rank = k.rank as i64;
    let display = format!("{count} generators, rank {rank}");
    let mut v = CriterionVerdict::new(
        KERNEL_FREENESS,
        "the kernel of the anchor map is a free Sg-module",
        Status::Unknown,
        Certainty::UpToDegree { degree: k.degree_bound },
    )
    .with_values(count, rank, display);
    match k.freeness() {
        Freeness::NotFree => {
            v.status = Status::Fails;
            v.certainty = Certainty::Certified;
            let mut w = format!("{count} minimal generators exceed the rank {rank}");
            if let Some(s) = &k.syzygy {
                w.push_str(&format!("; syzygy of degree {}", s.degree));
            }
            v.witness = Some(w);
        }
        Freeness::FreeUpToDegree => v.status = Status::Holds,
        Freeness::Undetermined => v.notes.push(format!(
            "generators found up to degree {} do not yet reach the rank",
            k.degree_bound
        )),
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::filiform;
    use crate::poly::text::parse_default;

    #[test]
    fn filiform_five_generators() {
        let g = filiform(5).unwrap();
        let k = kernel_of_rho(&g, 2, 3, MonomialOrder::DegRevLex).unwrap();
        let v = |s: &str| parse_default(s, 5).unwrap();
        let z = Polynomial::zero(5);
        let one = Polynomial::one(5);
        let got: Vec<Vec<Polynomial>> = k.generators.iter().map(|w| w.components.clone()).collect();
        assert_eq!(
            got,
            vec![
                vec![z.clone(), z.clone(), z.clone(), z.clone(), one],
                vec![z.clone(), v("v4"), v("-v3"), z.clone(), z.clone()],
                vec![z.clone(), v("v5"), z.clone(), v("-v3"), z.clone()],
                vec![z.clone(), z.clone(), v("v5"), v("-v4"), z.clone()],
            ]
        );
        assert_eq!(k.freeness(), Freeness::NotFree);
        let s = k.syzygy.unwrap();
        assert_eq!(s.degree, 2);
        assert_eq!(s.coefficients, vec![z, v("v5"), v("-v4"), v("v3")]);
    }

    #[test]
    fn filiform_four_is_free() {
        let k = kernel_of_rho(&filiform(4).unwrap(), 2, 2, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(k.generators.len(), 2);
        assert_eq!(k.freeness(), Freeness::FreeUpToDegree);
        assert!(k.syzygy.is_none());
    }

    #[test]
    fn abelian_kernel_is_everything() {
        let k = kernel_of_rho(&LieAlgebra::abelian(3), 1, 3, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(k.generators.len(), 3);
        assert!(k.generators.iter().all(|w| w.degree == 0));
        assert_eq!(freeness_verdict(&k).status, Status::Holds);
    }
}
