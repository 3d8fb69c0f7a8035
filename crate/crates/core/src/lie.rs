//! Lie algebras given by structure constants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{format_rational, monomials_of_degree, parse_rational, MonomialOrder, Polynomial};
use crate::Rational;

/// A Lie algebra with basis `v_1..v_n` and `[v_i, v_j] = sum_k c_ijk v_k`.
///
/// Only pairs `i < j` are stored; `bracket` supplies the sign for the rest.
/// Construction checks the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    table: Vec<Vec<Rational>>,
}

/// Skew-symmetric matrix of linear forms `B_ij = [v_i, v_j]`.
pub type SkewPolyMatrix = Vec<Vec<Polynomial>>;

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

impl LieAlgebra {
    /// Build from bracket data with 0-based indices in either order.
    /// Entries for `(j, i)` are negated; conflicting duplicates are rejected.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: &[(usize, usize, Vec<Rational>)],
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty basis".into()));
        }
        for (k, b) in basis.iter().enumerate() {
            if basis[..k].contains(b) {
                return Err(Error::InvalidInput(format!("duplicate basis name {b:?}")));
            }
        }
        let mut table = vec![vec![Rational::zero(); n]; n * (n - 1) / 2];
        let mut seen = vec![false; table.len()];
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!(
                    "bracket ({}, {}) out of range for dimension {n}",
                    i + 1,
                    j + 1
                )));
            }
            if coeffs.len() != n {
                return Err(Error::DimensionMismatch(n, coeffs.len()));
            }
            if i == j {
                if coeffs.iter().any(|c| !c.is_zero()) {
                    return Err(Error::AntisymmetryViolation { i: i + 1, j: j + 1 });
                }
                continue;
            }
            let (a, b, sign) = if i < j { (i, j, q(1)) } else { (j, i, q(-1)) };
            let v: Vec<Rational> = coeffs.iter().map(|c| c * &sign).collect();
            let idx = pair_index(n, a, b);
            if seen[idx] && table[idx] != v {
                return Err(Error::AntisymmetryViolation { i: i + 1, j: j + 1 });
            }
            seen[idx] = true;
            table[idx] = v;
        }
        let g = LieAlgebra {
            name: name.into(),
            basis,
            table,
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Build from sparse bracket data `(i, j, [(k, c)])`, all indices 0-based.
    pub fn from_sparse(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Rational)>)],
    ) -> Result<Self> {
        let n = basis.len();
        let mut dense = Vec::with_capacity(brackets.len());
        for (i, j, entries) in brackets {
            let mut v = vec![Rational::zero(); n];
            for (k, c) in entries {
                if *k >= n {
                    return Err(Error::InvalidInput(format!("basis index {} out of range", k + 1)));
                }
                v[*k] += c;
            }
            dense.push((*i, *j, v));
        }
        Self::new(name, basis, &dense)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            name: format!("abelian:{n}"),
            basis: crate::poly::default_names(n),
            table: vec![vec![Rational::zero(); n]; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// `[v_i, v_j]` as a coordinate vector (0-based).
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![Rational::zero(); n],
            std::cmp::Ordering::Less => self.table[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.table[pair_index(n, j, i)].iter().map(|c| -c).collect(),
        }
    }

    /// Bracket of arbitrary vectors.
    pub fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(self.bracket(i, j)) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(|c| c.is_zero()))
    }

    fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Residual of the Jacobi sum for one triple.
    pub fn jacobi_residual(&self, i: usize, j: usize, l: usize) -> Vec<Rational> {
        let (ei, ej, el) = (self.unit(i), self.unit(j), self.unit(l));
        let a = self.bracket_vec(&ei, &self.bracket(j, l));
        let b = self.bracket_vec(&ej, &self.bracket(l, i));
        let c = self.bracket_vec(&el, &self.bracket(i, j));
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect()
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let r = self.jacobi_residual(i, j, l);
                    if r.iter().any(|c| !c.is_zero()) {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            l: l + 1,
                            residual: r,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `ad(x)` on g: column `k` is `[x, v_k]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|k| self.bracket_vec(x, &self.unit(k))).collect();
        Matrix::from_cols(&cols, n)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&self.unit(i))
    }

    pub fn structure_matrix(&self) -> SkewPolyMatrix {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| Polynomial::linear(&self.bracket(i, j))).collect())
            .collect()
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x is central iff [x, v_k] = 0 for every k; stack the conditions
        let mut rows = Vec::new();
        for k in 0..n {
            for m in 0..n {
                rows.push((0..n).map(|i| self.bracket(i, k)[m].clone()).collect::<Vec<_>>());
            }
        }
        Subspace::span(n, &Matrix::from_rows(rows).null_space())
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        Subspace::span(self.dim(), &self.table)
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// Lower central series reaches zero.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.dim();
        let mut cur = Subspace::full(n);
        loop {
            let mut next = Vec::new();
            for x in cur.basis() {
                for k in 0..n {
                    next.push(self.bracket_vec(x, &self.unit(k)));
                }
            }
            let next = Subspace::span(n, &next);
            if next.dim() == 0 {
                return true;
            }
            if next.dim() == cur.dim() {
                return false;
            }
            cur = next;
        }
    }

    /// Image of a linear form under `ad(x)`: `v_k -> [x, v_k]`.
    pub fn ad_linear(&self, x: &[Rational]) -> Vec<Polynomial> {
        let n = self.dim();
        (0..n)
            .map(|k| Polynomial::linear(&self.bracket_vec(x, &self.unit(k))))
            .collect()
    }

    /// `ad(x)` acting on Sg as a derivation.
    pub fn ad_poly(&self, x: &[Rational], f: &Polynomial) -> Polynomial {
        let images = self.ad_linear(x);
        apply_derivation(&images, f)
    }

    /// Matrix of `ad(x)` on `S^d g` in the monomial basis sorted descending
    /// under `order`.
    pub fn ad_on_graded(&self, x: &[Rational], d: u32, order: MonomialOrder) -> Matrix {
        let basis = monomials_of_degree(self.dim(), d, order);
        let index: BTreeMap<_, _> = basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        let images = self.ad_linear(x);
        let mut m = Matrix::zeros(basis.len(), basis.len());
        for (col, mono) in basis.iter().enumerate() {
            let img = apply_derivation(&images, &Polynomial::monomial(mono.clone(), Rational::one()));
            for (t, c) in img.terms() {
                m.set(index[t], col, c.clone());
            }
        }
        m
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn to_json(&self) -> AlgebraFile {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.table[pair_index(n, i, j)];
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let coeffs = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| ((k + 1).to_string(), format_rational(c)))
                    .collect();
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
        AlgebraFile {
            name: self.name.clone(),
            basis: self.basis.clone(),
            brackets,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(s).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("line {}: {e}", e.line()),
        })?;
        file.into_algebra()
    }
}

/// Apply the derivation of Sg determined by `v_k -> images[k]`.
pub fn apply_derivation(images: &[Polynomial], f: &Polynomial) -> Polynomial {
    let n = f.nvars();
    let mut out = Polynomial::zero(n);
    for (k, img) in images.iter().enumerate() {
        if img.is_zero() || f.degree_in(k) == 0 {
            continue;
        }
        let df = f.partial_derivative(k).expect("index in range");
        out = &out + &(&df * img);
    }
    out
}

/// On-disk algebra description; indices are 1-based and only `i < j` is
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let mut data = Vec::new();
        for (pos, b) in self.brackets.iter().enumerate() {
            let ctx = |m: String| Error::InvalidInput(format!("brackets[{pos}]: {m}"));
            if b.i == 0 || b.j == 0 || b.i > n || b.j > n {
                return Err(ctx(format!("indices ({}, {}) outside 1..={n}", b.i, b.j)));
            }
            if b.i >= b.j {
                return Err(ctx(format!("only i < j entries are allowed, got ({}, {})", b.i, b.j)));
            }
            let mut entries = Vec::new();
            for (k, c) in &b.coeffs {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| ctx(format!("coefficient key {k:?} is not an index")))?;
                if k == 0 || k > n {
                    return Err(ctx(format!("coefficient index {k} outside 1..={n}")));
                }
                let c = parse_rational(c).map_err(|e| ctx(e.to_string()))?;
                entries.push((k - 1, c));
            }
            data.push((b.i - 1, b.j - 1, entries));
        }
        LieAlgebra::from_sparse(self.name, self.basis, &data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_default;

    fn names(n: usize) -> Vec<String> {
        crate::poly::default_names(n)
    }

    fn filiform(n: usize) -> LieAlgebra {
        let data: Vec<_> = (1..n - 1).map(|i| (0, i, vec![(i + 1, q(1))])).collect();
        LieAlgebra::from_sparse("L", names(n), &data).unwrap()
    }

    #[test]
    fn jacobi_violation_reports_residual() {
        let data = vec![
            (0, 1, vec![(2, q(1))]),
            (1, 2, vec![(0, q(1))]),
            (0, 2, vec![(0, q(1))]),
        ];
        let e = LieAlgebra::from_sparse("bad", names(3), &data).unwrap_err();
        assert_eq!(
            e,
            Error::JacobiViolation {
                i: 1,
                j: 2,
                l: 3,
                residual: vec![q(0), q(0), q(1)]
            }
        );
    }

    #[test]
    fn conflicting_entries_are_rejected() {
        let data = vec![(0, 1, vec![(1, q(1))]), (1, 0, vec![(1, q(1))])];
        assert!(matches!(
            LieAlgebra::from_sparse("bad", names(2), &data),
            Err(Error::AntisymmetryViolation { .. })
        ));
        let ok = vec![(0, 1, vec![(1, q(1))]), (1, 0, vec![(1, q(-1))])];
        assert!(LieAlgebra::from_sparse("ok", names(2), &ok).is_ok());
    }

    #[test]
    fn filiform_structure() {
        let g = filiform(5);
        let b = g.structure_matrix();
        let row: Vec<String> = b[0].iter().map(crate::poly::text::format_default).collect();
        assert_eq!(row, vec!["0", "v3", "v4", "v5", "0"]);
        assert_eq!(g.center().dim(), 1);
        assert_eq!(g.center().basis()[0], vec![q(0), q(0), q(0), q(0), q(1)]);
        assert_eq!(g.derived_subalgebra().dim(), 3);
        assert!(g.is_unimodular());
        assert!(g.is_nilpotent());
    }

    #[test]
    fn graded_action_kills_invariant() {
        let g = filiform(4);
        let f = parse_default("v2*v4 - 1/2*v3^2", 4).unwrap();
        let e1 = g.unit(0);
        assert!(g.ad_poly(&e1, &f).is_zero());
        let m = g.ad_on_graded(&e1, 1, MonomialOrder::DegRevLex);
        // degree-one basis in degrevlex descending is v1, v2, v3, v4
        assert_eq!(m.col(1), vec![q(0), q(0), q(1), q(0)]);
    }

    #[test]
    fn json_round_trip_and_strictness() {
        let g = filiform(4).with_name("L:4");
        let s = g.to_json_string();
        assert_eq!(LieAlgebra::from_json_str(&s).unwrap(), g);
        let bad = r#"{"name":"x","basis":["a","b"],"brackets":[{"i":2,"j":1,"coeffs":{"1":"1"}}]}"#;
        assert!(LieAlgebra::from_json_str(bad).is_err());
        let bad = r#"{"name":"x","basis":["a","b"],"brackets":[{"i":1,"j":2,"coeffs":{"1":"1/0"}}]}"#;
        assert!(LieAlgebra::from_json_str(bad).is_err());
    }
}
