//! Rational Jordan–Chevalley decomposition.

use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanChevalley {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Split `d = s + p` with `s` semisimple, `p` nilpotent and `sp = ps`.
///
/// Newton's iteration `A <- A - q(A) q'(A)^{-1}` on the squarefree part `q`
/// of the characteristic polynomial converges in finitely many steps to the
/// semisimple part, and every iterate is a polynomial in `d`.
pub fn jordan_chevalley(d: &Matrix) -> JordanChevalley {
    assert!(d.is_square(), "Jordan–Chevalley needs a square matrix");
    let n = d.rows();
    let q = d.charpoly().squarefree_part();
    let dq = q.derivative();
    let mut a = d.clone();
    for _ in 0..=n.max(1) {
        let qa = a.eval_poly(&q);
        if qa.is_zero() {
            break;
        }
        let inv = a
            .eval_poly(&dq)
            .inverse()
            .expect("q'(A) is invertible because q is squarefree");
        a = a.sub(&qa.mul(&inv));
    }
    let p = d.sub(&a);
    let out = JordanChevalley {
        semisimple: a,
        nilpotent: p,
    };
    debug_assert!(out.is_valid_for(d));
    out
}

impl JordanChevalley {
    /// The defining checks: sum, commuting, nilpotent part, squarefree
    /// minimal polynomial of the semisimple part.
    pub fn is_valid_for(&self, d: &Matrix) -> bool {
        let (s, p) = (&self.semisimple, &self.nilpotent);
        s.add(p) == *d && s.mul(p) == p.mul(s) && p.is_nilpotent() && s.minimal_polynomial().is_squarefree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipotent_block() {
        let d = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let jc = jordan_chevalley(&d);
        assert_eq!(jc.semisimple, Matrix::identity(2));
        assert_eq!(jc.nilpotent, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert!(jc.is_valid_for(&d));
    }

    #[test]
    fn pure_cases() {
        let n = Matrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let jc = jordan_chevalley(&n);
        assert!(jc.semisimple.is_zero());
        assert_eq!(jc.nilpotent, n);
        let s = Matrix::from_i64(&[&[2, 0], &[0, -3]]);
        let jc = jordan_chevalley(&s);
        assert_eq!(jc.semisimple, s);
        assert!(jc.nilpotent.is_zero());
    }

    #[test]
    fn non_diagonalizable_over_q() {
        // rotation-like block with a nilpotent coupling
        let d = Matrix::from_i64(&[&[0, -1, 1, 0], &[1, 0, 0, 1], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let jc = jordan_chevalley(&d);
        assert!(jc.is_valid_for(&d));
        assert!(!jc.nilpotent.is_zero());
    }
}
