//! Exact linear algebra over the rationals.

mod dense;
pub mod sparse;

pub use dense::Matrix;
pub use sparse::{linear_dependencies, null_space, Echelon, SparseSubspace, SparseVec};

use num_traits::Zero;

use crate::Rational;

/// A subspace of `Q^n` held as reduced row echelon rows, so equal subspaces
/// have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &Matrix::identity(ambient).to_rows())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if !f.is_zero() {
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Unit vectors at the non-pivot columns: a canonical complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Orthogonal complement with respect to the standard pairing,
    /// i.e. the linear functionals vanishing on this subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let ns = Matrix::from_rows(self.basis.clone()).null_space();
        Subspace::span(self.ambient, &ns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_is_canonical() {
        let q = |x: i64| Rational::from_integer(x.into());
        let a = Subspace::span(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        let b = Subspace::span(3, &[vec![q(1), q(0), q(-1)], vec![q(2), q(3), q(1)]]);
        assert_eq!(a, b);
        assert_eq!(a.complement_columns(), vec![2]);
        assert_eq!(a.annihilator().dim(), 1);
        assert!(a.contains(&[q(1), q(2), q(1)]));
    }
}
