//! Pfaffians of the structure matrix, certified generic rank, index,
//! fundamental semi-invariant and the non-regular locus.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grobner::{buchberger, Dimension};
use crate::lie::{LieAlgebra, SkewPolyMatrix};
use crate::linalg::Matrix;
use crate::poly::{gcd_all, MonomialOrder, Polynomial};
use crate::Rational;

/// Seed used for rank probes unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 20240;

/// Memoized Pfaffians of principal submatrices, keyed by index bitmask.
pub struct PfaffianTable<'a> {
    b: &'a SkewPolyMatrix,
    nvars: usize,
    memo: HashMap<u64, Polynomial>,
}

impl<'a> PfaffianTable<'a> {
    pub fn new(b: &'a SkewPolyMatrix) -> Self {
        let nvars = b.first().and_then(|r| r.first()).map(|p| p.nvars()).unwrap_or(0);
        assert!(b.len() <= 64, "index sets are bitmasks");
        PfaffianTable {
            b,
            nvars,
            memo: HashMap::new(),
        }
    }

    pub fn pfaffian(&mut self, rows: &[usize]) -> Result<Polynomial> {
        if rows.len() % 2 == 1 {
            return Err(Error::OddPfaffian(rows.len()));
        }
        let mut mask = 0u64;
        for &r in rows {
            if r >= self.b.len() {
                return Err(Error::VariableOutOfRange {
                    index: r,
                    nvars: self.b.len(),
                });
            }
            mask |= 1 << r;
        }
        if mask.count_ones() as usize != rows.len() {
            return Err(Error::InvalidInput("repeated index in Pfaffian row set".into()));
        }
        Ok(self.by_mask(mask))
    }

    fn by_mask(&mut self, mask: u64) -> Polynomial {
        if mask == 0 {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        // expand along the first row
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << first);
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_positive = true;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let entry = &self.b[first][j];
            if !entry.is_zero() {
                let minor = self.by_mask(rest & !(1u64 << j));
                if !minor.is_zero() {
                    let term = entry * &minor;
                    acc = if sign_positive { &acc + &term } else { &acc - &term };
                }
            }
            sign_positive = !sign_positive;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

pub fn pfaffian(b: &SkewPolyMatrix, rows: &[usize]) -> Result<Polynomial> {
    PfaffianTable::new(b).pfaffian(rows)
}

/// Exact generic rank of a skew matrix of polynomials.
///
/// `witness` carries a nonzero principal Pfaffian; every Pfaffian on
/// `witness + {a, b}` vanishes identically, so the Schur complement of the
/// witness block is zero and the rank is exactly `witness.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub witness: Vec<usize>,
    #[serde(skip)]
    pub witness_pfaffian: Polynomial,
    pub bordered_checked: usize,
    pub seed: u64,
    pub probe_ranks: Vec<usize>,
}

fn evaluate_matrix(b: &SkewPolyMatrix, point: &[Rational]) -> Matrix {
    Matrix::from_rows(
        b.iter()
            .map(|row| row.iter().map(|p| p.evaluate(point).expect("point length")).collect())
            .collect(),
    )
}

pub const PROBES: usize = 5;

pub fn certified_rank(b: &SkewPolyMatrix, seed: u64) -> RankCertificate {
    let n = b.len();
    let nvars = b.first().and_then(|r| r.first()).map(|p| p.nvars()).unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Matrix)> = None;
    let mut probe_ranks = Vec::new();
    for _ in 0..PROBES {
        let point: Vec<Rational> = (0..nvars)
            .map(|_| Rational::from_integer(rng.gen_range(-7i64..=7).into()))
            .collect();
        let m = evaluate_matrix(b, &point);
        let r = m.rank();
        probe_ranks.push(r);
        if best.as_ref().map(|(br, _)| r > *br).unwrap_or(true) {
            best = Some((r, m));
        }
    }
    // rows spanning the row space of a skew matrix give a nonsingular
    // principal block
    let mut witness: Vec<usize> = match &best {
        Some((_, m)) => m.rref().1,
        None => Vec::new(),
    };
    let mut table = PfaffianTable::new(b);
    let mut checked = 0;
    'grow: loop {
        let pf = table.pfaffian(&witness).expect("even witness");
        assert!(!pf.is_zero(), "witness block chosen from a nonsingular evaluation");
        let outside: Vec<usize> = (0..n).filter(|i| !witness.contains(i)).collect();
        for (x, &a) in outside.iter().enumerate() {
            for &c in &outside[x + 1..] {
                let mut rows = witness.clone();
                rows.push(a);
                rows.push(c);
                rows.sort_unstable();
                checked += 1;
                if !table.pfaffian(&rows).expect("even").is_zero() {
                    witness = rows;
                    continue 'grow;
                }
            }
        }
        return RankCertificate {
            rank: witness.len(),
            witness,
            witness_pfaffian: pf,
            bordered_checked: checked,
            seed,
            probe_ranks,
        };
    }
}

pub fn index(g: &LieAlgebra) -> usize {
    index_with_seed(g, DEFAULT_SEED)
}

pub fn index_with_seed(g: &LieAlgebra, seed: u64) -> usize {
    g.dim() - certified_rank(&g.structure_matrix(), seed).rank
}

/// `(dim g + i(g)) / 2`, an integer because the rank is even.
pub fn c_value_from(dim: usize, index: usize) -> usize {
    assert_eq!((dim + index) % 2, 0, "rank of a skew matrix is even");
    (dim + index) / 2
}

pub fn c_value(g: &LieAlgebra) -> usize {
    c_value_from(g.dim(), index(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalSemiInvariant {
    pub pfaffian_gcd: Polynomial,
    pub value: Polynomial,
    pub degree: u32,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All principal Pfaffians of size `r`, in lexicographic order of index sets.
pub fn principal_pfaffians(b: &SkewPolyMatrix, r: usize) -> Vec<(Vec<usize>, Polynomial)> {
    let mut table = PfaffianTable::new(b);
    subsets(b.len(), r)
        .into_iter()
        .map(|s| {
            let p = table.pfaffian(&s).expect("even size");
            (s, p)
        })
        .collect()
}

pub fn fundamental_semi_invariant(g: &LieAlgebra, rank: usize) -> FundamentalSemiInvariant {
    let n = g.dim();
    if g.is_abelian() {
        return FundamentalSemiInvariant {
            pfaffian_gcd: Polynomial::one(n),
            value: Polynomial::one(n),
            degree: 0,
        };
    }
    let pf = principal_pfaffians(&g.structure_matrix(), rank);
    let gcd = gcd_all(pf.iter().map(|(_, p)| p)).expect("a nonzero principal Pfaffian exists");
    let value = &gcd * &gcd;
    let degree = value.degree().finite().unwrap_or(0);
    FundamentalSemiInvariant {
        pfaffian_gcd: gcd,
        value,
        degree,
    }
}

/// Codimension of the non-regular locus; `None` when the locus is empty.
pub fn singular_locus_codim(g: &LieAlgebra, rank: usize, order: MonomialOrder) -> Result<Option<usize>> {
    let pf: Vec<Polynomial> = principal_pfaffians(&g.structure_matrix(), rank)
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| !p.is_zero())
        .collect();
    let gb = buchberger(&pf, order)?;
    Ok(match gb.krull_dimension() {
        Dimension::Empty => None,
        Dimension::Finite(k) => Some(g.dim() - k),
    })
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
    fn small_pfaffians() {
        let b = filiform(5).structure_matrix();
        let v = |s: &str| parse_default(s, 5).unwrap();
        assert_eq!(pfaffian(&b, &[0, 1]).unwrap(), v("v3"));
        assert_eq!(pfaffian(&b, &[0, 2]).unwrap(), v("v4"));
        assert_eq!(pfaffian(&b, &[0, 3]).unwrap(), v("v5"));
        assert_eq!(pfaffian(&b, &[]).unwrap(), v("1"));
        assert_eq!(pfaffian(&b, &[0]), Err(Error::OddPfaffian(1)));
    }

    #[test]
    fn filiform_rank_and_codim() {
        for n in 3..=6 {
            let g = filiform(n);
            let cert = certified_rank(&g.structure_matrix(), DEFAULT_SEED);
            assert_eq!(cert.rank, 2);
            assert_eq!(index(&g), n - 2);
            assert_eq!(
                singular_locus_codim(&g, 2, MonomialOrder::DegRevLex).unwrap(),
                Some(n - 2)
            );
        }
        let f = fundamental_semi_invariant(&filiform(3), 2);
        assert_eq!(f.value, parse_default("v3^2", 3).unwrap());
        assert_eq!(f.degree, 2);
        assert_eq!(fundamental_semi_invariant(&filiform(5), 2).degree, 0);
    }

    #[test]
    fn abelian_conventions() {
        let g = LieAlgebra::abelian(3);
        let cert = certified_rank(&g.structure_matrix(), 1);
        assert_eq!(cert.rank, 0);
        assert_eq!(fundamental_semi_invariant(&g, 0).degree, 0);
        assert_eq!(singular_locus_codim(&g, 0, MonomialOrder::DegRevLex).unwrap(), None);
        assert_eq!(c_value(&g), 3);
    }
}
