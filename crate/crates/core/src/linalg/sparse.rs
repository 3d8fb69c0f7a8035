//! Sparse row echelon forms for the graded linear systems.
//!
//! Rows are sorted `(column, value)` lists. A pivot row is normalized with
//! coefficient 1 at its smallest column, and every row is reduced against the
//! pivots present when it was inserted, so each row only touches columns at or
//! after its own pivot.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn sparse_scale(v: &SparseVec, c: &Rational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// `a + c * b`
pub fn sparse_axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = a.iter().cloned().collect();
    for (i, x) in b {
        let e = acc.entry(*i).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(i);
        }
    }
    acc.into_iter().collect()
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    /// Eliminate every pivot column from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = acc
                .range(cursor..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, f)) = next else { break };
            for (j, x) in &self.rows[&col] {
                let e = acc.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * x;
                if e.is_zero() {
                    acc.remove(j);
                }
            }
            cursor = col + 1;
        }
        acc.into_iter().collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert a row; returns its new pivot column if it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (col, lead) = r.first().cloned()?;
        let inv = lead.recip();
        let row: SparseVec = r.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        self.rows.insert(col, row);
        Some(col)
    }

    /// Fully reduced rows sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&col, row) in self.rows.iter().rev() {
            let mut acc: BTreeMap<usize, Rational> = row.iter().cloned().collect();
            for (&pc, prow) in done.iter() {
                if let Some(f) = acc.get(&pc).cloned() {
                    for (j, x) in prow {
                        let e = acc.entry(*j).or_insert_with(Rational::zero);
                        *e -= &f * x;
                        if e.is_zero() {
                            acc.remove(j);
                        }
                    }
                }
            }
            done.insert(col, acc.into_iter().collect());
        }
        done.into_values().collect()
    }

    /// Basis of the space of vectors orthogonal to every row (solutions of
    /// the homogeneous system), one per free column, in increasing order of
    /// the free column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let rref = self.rref_rows();
        // column -> list of (pivot, coefficient) entries in that column
        let mut by_col: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for row in &rref {
            let p = row[0].0;
            for (j, x) in row.iter().skip(1) {
                by_col.entry(*j).or_default().push((p, x.clone()));
            }
        }
        (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|f| {
                let mut v: SparseVec = by_col
                    .get(&f)
                    .map(|entries| entries.iter().map(|(p, x)| (*p, -x.clone())).collect())
                    .unwrap_or_default();
                v.push((f, Rational::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

/// Null space of the system whose rows are `equations` in `ncols` unknowns.
pub fn null_space(equations: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new(ncols);
    for row in equations {
        e.insert(row);
        if e.rank() == ncols {
            return Vec::new();
        }
    }
    e.null_space()
}

/// Coefficient vectors `c` with `sum_k c_k * images[k] = 0`.
pub fn linear_dependencies(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (k, img) in images.iter().enumerate() {
        for (m, x) in img {
            rows.entry(*m).or_default().push((k, x.clone()));
        }
    }
    let eqs: Vec<SparseVec> = rows.into_values().collect();
    null_space(&eqs, images.len())
}

/// Subspace of `Q^ncols` held as fully reduced sparse rows; each row has a
/// 1 at its pivot (smallest) column and zeros at the other pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseSubspace {
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseSubspace {
    pub fn new(ncols: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(ncols);
        for v in vectors {
            e.insert(&v);
        }
        Self::from_echelon(&e)
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        SparseSubspace {
            ncols: e.ncols(),
            rows: e.rref_rows(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Coordinates of a vector of the subspace in the row basis.
    pub fn coords(&self, v: &SparseVec) -> Vec<Rational> {
        let piv = self.pivots();
        let mut out = vec![Rational::zero(); piv.len()];
        let mut k = 0;
        for (c, x) in v {
            while k < piv.len() && piv[k] < *c {
                k += 1;
            }
            if k < piv.len() && piv[k] == *c {
                out[k] = x.clone();
            }
        }
        out
    }

    /// `sum_k c_k * rows[k]`
    pub fn combine(&self, c: &[Rational]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (row, f) in self.rows.iter().zip(c) {
            if f.is_zero() {
                continue;
            }
            for (j, x) in row {
                let e = acc.entry(*j).or_insert_with(Rational::zero);
                *e += f * x;
                if e.is_zero() {
                    acc.remove(j);
                }
            }
        }
        acc.into_iter().collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ncols);
        for r in &self.rows {
            e.insert(r);
        }
        e
    }
}
