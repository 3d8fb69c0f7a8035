//! Rank of polynomial matrices over the fraction field.
//!
//! Fraction-free Bareiss elimination with full pivoting; every division is
//! exact, and the last pivot is (up to sign) the minor on the chosen rows and
//! columns, which serves as a certificate that the rank is at least the
//! number of elimination steps.

use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRank {
    pub rank: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// A nonzero `rank x rank` minor on `rows x cols`, up to sign; `1` when the rank is zero.
    pub minor: Polynomial,
}

pub fn poly_matrix_rank(m: &[Vec<Polynomial>], nvars: usize) -> PolyRank {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut row_perm: Vec<usize> = (0..nrows).collect();
    let mut col_perm: Vec<usize> = (0..ncols).collect();
    let mut prev = Polynomial::one(nvars);
    let mut k = 0;
    while k < nrows.min(ncols) {
        // sparsest nonzero pivot in the trailing block
        let mut best: Option<(usize, usize, usize)> = None;
        for i in k..nrows {
            for j in k..ncols {
                let t = a[i][j].num_terms();
                if t > 0 && best.map(|b| t < b.2).unwrap_or(true) {
                    best = Some((i, j, t));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(k, pi);
        row_perm.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        col_perm.swap(k, pj);
        let pivot = a[k][k].clone();
        for i in k + 1..nrows {
            for j in k + 1..ncols {
                let num = &(&pivot * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero(nvars);
        }
        prev = pivot;
        k += 1;
    }
    let mut rows = row_perm[..k].to_vec();
    let mut cols = col_perm[..k].to_vec();
    rows.sort_unstable();
    cols.sort_unstable();
    PolyRank {
        rank: k,
        rows,
        cols,
        minor: prev,
    }
}

/// Jacobian matrix `(d f_i / d v_j)`.
pub fn jacobian(polys: &[Polynomial], nvars: usize) -> Vec<Vec<Polynomial>> {
    polys
        .iter()
        .map(|f| {
            (0..nvars)
                .map(|j| f.partial_derivative(j).expect("index in range"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn p(s: &str) -> Polynomial {
        parse_default(s, 4).unwrap()
    }

    #[test]
    fn jacobian_rank_of_filiform_invariants() {
        let gens = [p("v4"), p("v2*v4 - 1/2*v3^2")];
        let r = poly_matrix_rank(&jacobian(&gens, 4), 4);
        assert_eq!(r.rank, 2);
        assert!(!r.minor.is_zero());
        let dep = [p("v3"), p("v3^2")];
        assert_eq!(poly_matrix_rank(&jacobian(&dep, 4), 4).rank, 1);
    }

    #[test]
    fn minor_is_determinant_up_to_sign() {
        let m = vec![vec![p("v1"), p("v2")], vec![p("v3"), p("v4")]];
        let r = poly_matrix_rank(&m, 4);
        assert_eq!(r.rank, 2);
        let det = p("v1*v4 - v2*v3");
        assert!(r.minor == det || r.minor == -&det);
    }
}
