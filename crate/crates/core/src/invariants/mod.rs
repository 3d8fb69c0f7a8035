//! Semi-invariants of a Lie algebra acting on a polynomial ring.
//!
//! The usual case is the adjoint action on `Sg`, but the search works for
//! any representation `V` of a Lie algebra, acting on `SV` by derivations.
//! The one-step reduction needs this to compare `(Sh)^k` with `(Sh)^h`.

mod generators;
mod graded;
mod poisson;
mod relations;

pub use generators::{
    algebraically_independent, gorenstein_invariant, minimal_generators, minimal_generators_for, trdeg_check,
    GeneratorSet, GorensteinValue, Independence, Mode, TrdegVerdict,
};
pub use graded::{graded_semi_invariants, GradedPiece, MonomialBasis, WeightSpace};
pub use poisson::{poisson_bracket, poisson_bracket_matrix};
pub use relations::{find_relations, find_relations_with_budget, formal_names, Relation};

use num_traits::Zero;

use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::poly::Polynomial;
use crate::Rational;

/// A Lie algebra `L` acting linearly on `V`; `ops[i]` is the matrix of the
/// `i`-th basis element of `L` (column `k` is the image of the `k`-th basis
/// vector of `V`).
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: LieAlgebra,
    ops: Vec<Matrix>,
    var_names: Vec<String>,
}

impl Representation {
    pub fn adjoint(g: &LieAlgebra) -> Self {
        Representation {
            algebra: g.clone(),
            ops: (0..g.dim()).map(|i| g.ad_basis(i)).collect(),
            var_names: g.basis_names().to_vec(),
        }
    }

    /// Caller guarantees `ops` is a representation of `algebra`.
    pub fn new(algebra: LieAlgebra, ops: Vec<Matrix>, var_names: Vec<String>) -> Self {
        assert_eq!(ops.len(), algebra.dim());
        let m = var_names.len();
        assert!(ops.iter().all(|o| o.rows() == m && o.cols() == m));
        Representation {
            algebra,
            ops,
            var_names,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Matrix of `x = sum x_i e_i` acting on `V`.
    pub fn op(&self, x: &[Rational]) -> Matrix {
        let m = self.nvars();
        let mut acc = Matrix::zeros(m, m);
        for (c, o) in x.iter().zip(&self.ops) {
            if !c.is_zero() {
                acc = acc.add(&o.scale(c));
            }
        }
        acc
    }

    /// Images of the variables under `x`, as linear forms.
    pub fn linear_images(&self, x: &[Rational]) -> Vec<Polynomial> {
        let o = self.op(x);
        (0..self.nvars()).map(|k| Polynomial::linear(&o.col(k))).collect()
    }

    /// `x` acting on `SV` as a derivation.
    pub fn act(&self, x: &[Rational], f: &Polynomial) -> Polynomial {
        crate::lie::apply_derivation(&self.linear_images(x), f)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.algebra.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    /// `x f = chi(x) f` for every basis element `x`.
    pub fn is_semi_invariant(&self, f: &Polynomial, weight: &[Rational]) -> bool {
        (0..self.algebra.dim()).all(|i| {
            let lhs = self.act(&self.basis_vector(i), f);
            lhs == f.scale(&weight[i])
        })
    }

    /// The weight of `f` if it is a nonzero semi-invariant.
    pub fn weight_of(&self, f: &Polynomial) -> Option<Vec<Rational>> {
        let (m, c) = f.terms().next()?;
        let mut weight = Vec::with_capacity(self.algebra.dim());
        for i in 0..self.algebra.dim() {
            let img = self.act(&self.basis_vector(i), f);
            let lambda = img.coeff(m) / c;
            if img != f.scale(&lambda) {
                return None;
            }
            weight.push(lambda);
        }
        Some(weight)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        self.algebra.derived_subalgebra()
    }
}

/// A homogeneous semi-invariant together with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiInvariant {
    pub poly: Polynomial,
    pub weight: Vec<Rational>,
    pub degree: u32,
}

impl SemiInvariant {
    pub fn is_invariant(&self) -> bool {
        self.weight.iter().all(|c| c.is_zero())
    }
}

pub fn is_zero_weight(w: &[Rational]) -> bool {
    w.iter().all(|c| c.is_zero())
}
