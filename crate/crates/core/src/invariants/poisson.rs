//! The Lie–Poisson bracket on `Sg`: `{a, b} = sum_ij d_i(a) d_j(b) [v_i, v_j]`.

use crate::lie::{LieAlgebra, SkewPolyMatrix};
use crate::poly::Polynomial;

pub fn poisson_bracket_matrix(a: &Polynomial, b: &Polynomial, bm: &SkewPolyMatrix) -> Polynomial {
    let n = a.nvars();
    let da: Vec<Polynomial> = (0..n).map(|i| a.partial_derivative(i).expect("in range")).collect();
    let db: Vec<Polynomial> = (0..n).map(|j| b.partial_derivative(j).expect("in range")).collect();
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        if da[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if i == j || db[j].is_zero() || bm[i][j].is_zero() {
                continue;
            }
            out = &out + &(&(&da[i] * &db[j]) * &bm[i][j]);
        }
    }
    out
}

pub fn poisson_bracket(a: &Polynomial, b: &Polynomial, g: &LieAlgebra) -> Polynomial {
    poisson_bracket_matrix(a, b, &g.structure_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;
    use crate::Rational;

    #[test]
    fn brackets_of_filiform() {
        let one = Rational::from_integer(1.into());
        let g = LieAlgebra::from_sparse(
            "L",
            crate::poly::default_names(4),
            &[(0, 1, vec![(2, one.clone())]), (0, 2, vec![(3, one)])],
        )
        .unwrap();
        let v = |s: &str| parse_default(s, 4).unwrap();
        assert_eq!(poisson_bracket(&v("v1"), &v("v2"), &g), v("v3"));
        assert!(poisson_bracket(&v("v2*v4 - 1/2*v3^2"), &v("v1"), &g).is_zero());
        let f = v("v1*v2 + v3^2");
        assert!(poisson_bracket(&f, &f, &g).is_zero());
    }
}
