//! One step of the reduction that removes a proper weight: pass to
//! `h = ker chi`, or to `k = h + kp` where `p` acts on `h` by the nilpotent
//! part of `ad c` for some `c` with `chi(c) = 1`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{graded_semi_invariants, Representation};
use crate::jordan::jordan_chevalley;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::pfaffian::{c_value_from, certified_rank};
use crate::poly::{MonomialOrder, Polynomial};
use crate::polymatrix::poly_matrix_rank;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    HBranch,
    KBranch,
    Undecided,
}

/// Dimensions of degree-`d` parts of semi-centers, `d = 1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiCenterDims {
    /// `(Sg)^g_si`
    pub g_on_sg: Vec<usize>,
    /// `(Sh)^h_si`
    pub h_on_sh: Vec<usize>,
    /// `(Sh)^g_si`
    pub g_on_sh: Vec<usize>,
    /// `(Sh)^k_si`
    pub k_on_sh: Vec<usize>,
    /// `(Sk)^k_si`
    pub k_on_sk: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub input: LieAlgebra,
    pub weight: Vec<Rational>,
    /// `c` in coordinates of `g`.
    pub c: Vec<Rational>,
    pub h: LieAlgebra,
    pub k: LieAlgebra,
    /// Parts of `ad c` restricted to `h`, in the basis of `h`.
    pub semisimple_part: Matrix,
    pub nilpotent_part: Matrix,
    pub rank_g: usize,
    pub rank_h: usize,
    pub rank_k: usize,
    /// Generic rank of `k` acting on `h`.
    pub rank_k_on_h: usize,
    pub branch: Branch,
    pub c_value_input: usize,
    pub c_value_chosen: Option<usize>,
    pub degree_bound: u32,
    pub dims: SemiCenterDims,
    /// `(Sh)^g_si`, `(Sh)^h_si` and `(Sg)^g_si` agree up to the bound.
    pub both_equal: bool,
    pub notes: Vec<String>,
}

impl ReductionStep {
    pub fn chosen(&self) -> Option<&LieAlgebra> {
        match self.branch {
            Branch::HBranch => Some(&self.h),
            Branch::KBranch => Some(&self.k),
            Branch::Undecided => None,
        }
    }

    pub fn c_value_preserved(&self) -> Option<bool> {
        self.c_value_chosen.map(|c| c == self.c_value_input)
    }
}

/// Action of `l` on an ideal spanned by `ideal` (columns in `l`-coordinates
/// whose coordinates are read off at `keep`).
fn restricted_ops(l: &LieAlgebra, ideal: &[Vec<Rational>], keep: &[usize]) -> Vec<Matrix> {
    let m = ideal.len();
    (0..l.dim())
        .map(|x| {
            let mut op = Matrix::zeros(m, m);
            for (col, b) in ideal.iter().enumerate() {
                let mut ex = vec![Rational::zero(); l.dim()];
                ex[x] = Rational::one();
                let img = l.bracket_vec(&ex, b);
                for (row, &k) in keep.iter().enumerate() {
                    op.set(row, col, img[k].clone());
                }
            }
            op
        })
        .collect()
}

fn graded_dims(rep: &Representation, bound: u32, order: MonomialOrder) -> Vec<usize> {
    (1..=bound)
        .map(|d| graded_semi_invariants(rep, d, order).total_dim())
        .collect()
}

/// Generic rank of the matrix `(x_a . w_b)` of linear forms in `SV`.
fn action_rank(rep: &Representation) -> usize {
    let m = rep.nvars();
    let rows: Vec<Vec<Polynomial>> = (0..rep.algebra().dim())
        .map(|a| rep.linear_images(&rep.basis_vector(a)))
        .collect();
    poly_matrix_rank(&rows, m).rank
}

pub fn check_weight(g: &LieAlgebra, weight: &[Rational]) -> Result<()> {
    if weight.len() != g.dim() {
        return Err(Error::DimensionMismatch(g.dim(), weight.len()));
    }
    if weight.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidInput("the weight is zero; nothing to reduce".into()));
    }
    for b in g.derived_subalgebra().basis() {
        let v: Rational = b.iter().zip(weight).map(|(x, y)| x * y).sum();
        if !v.is_zero() {
            return Err(Error::NotAWeight);
        }
    }
    Ok(())
}

pub fn reduce_one_step(
    g: &LieAlgebra,
    weight: &[Rational],
    bound: u32,
    order: MonomialOrder,
    seed: u64,
) -> Result<ReductionStep> {
    check_weight(g, weight)?;
    let n = g.dim();
    let i = weight.iter().position(|c| !c.is_zero()).expect("nonzero weight");
    let keep: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let names = g.basis_names();

    // h = ker chi with basis b_j = e_j - (chi_j / chi_i) e_i
    let h_basis: Vec<Vec<Rational>> = keep
        .iter()
        .map(|&j| {
            let mut b = vec![Rational::zero(); n];
            b[j] = Rational::one();
            b[i] = -(&weight[j] / &weight[i]);
            b
        })
        .collect();
    let h_names: Vec<String> = keep
        .iter()
        .map(|&j| {
            if weight[j].is_zero() {
                names[j].clone()
            } else {
                format!("{}'", names[j])
            }
        })
        .collect();
    let m = n - 1;
    let mut h_brackets = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let br = g.bracket_vec(&h_basis[a], &h_basis[b]);
            let coords: Vec<(usize, Rational)> = keep
                .iter()
                .enumerate()
                .filter(|(_, &k)| !br[k].is_zero())
                .map(|(r, &k)| (r, br[k].clone()))
                .collect();
            if !coords.is_empty() {
                h_brackets.push((a, b, coords));
            }
        }
    }
    let h = LieAlgebra::from_sparse(format!("ker-chi({})", g.name()), h_names.clone(), &h_brackets)?;

    let mut c = vec![Rational::zero(); n];
    c[i] = Rational::one() / &weight[i];
    let g_ops = restricted_ops(g, &h_basis, &keep);
    let ad_c = g_ops[i].scale(&c[i]);
    let jc = jordan_chevalley(&ad_c);
    if !jc.is_valid_for(&ad_c) {
        return Err(Error::Internal(
            "Jordan-Chevalley decomposition failed its checks".into(),
        ));
    }
    let dp = jc.nilpotent.clone();
    for a in 0..m {
        for b in a + 1..m {
            let ea = unit(m, a);
            let eb = unit(m, b);
            let lhs = dp.mul_vec(&h.bracket_vec(&ea, &eb));
            let r1 = h.bracket_vec(&dp.mul_vec(&ea), &eb);
            let r2 = h.bracket_vec(&ea, &dp.mul_vec(&eb));
            let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Err(Error::Internal("nilpotent part is not a derivation of h".into()));
            }
        }
    }

    // k = h + kp, with p placed where c was
    let to_k = |r: usize| if r < i { r } else { r + 1 };
    let mut k_names: Vec<String> = h_names.clone();
    k_names.insert(i, names[i].clone());
    let mut k_brackets: Vec<(usize, usize, Vec<(usize, Rational)>)> = h_brackets
        .iter()
        .map(|(a, b, v)| {
            (
                to_k(*a),
                to_k(*b),
                v.iter().map(|(r, x)| (to_k(*r), x.clone())).collect(),
            )
        })
        .collect();
    for col in 0..m {
        let img: Vec<(usize, Rational)> = (0..m)
            .filter(|&r| !dp.get(r, col).is_zero())
            .map(|r| (to_k(r), dp.get(r, col).clone()))
            .collect();
        if !img.is_empty() {
            k_brackets.push((i, to_k(col), img));
        }
    }
    let k = LieAlgebra::from_sparse(format!("k({})", g.name()), k_names, &k_brackets)?;

    let rank_g = certified_rank(&g.structure_matrix(), seed).rank;
    let rank_h = certified_rank(&h.structure_matrix(), seed).rank;
    let rank_k = certified_rank(&k.structure_matrix(), seed).rank;

    let k_basis_in_k: Vec<Vec<Rational>> = (0..m).map(|r| unit(n, to_k(r))).collect();
    let k_keep: Vec<usize> = (0..m).map(to_k).collect();
    let k_on_h = Representation::new(k.clone(), restricted_ops(&k, &k_basis_in_k, &k_keep), h_names.clone());
    let g_on_h = Representation::new(g.clone(), g_ops, h_names);
    let rank_k_on_h = action_rank(&k_on_h);

    let dims = SemiCenterDims {
        g_on_sg: graded_dims(&Representation::adjoint(g), bound, order),
        h_on_sh: graded_dims(&Representation::adjoint(&h), bound, order),
        g_on_sh: graded_dims(&g_on_h, bound, order),
        k_on_sh: graded_dims(&k_on_h, bound, order),
        k_on_sk: graded_dims(&Representation::adjoint(&k), bound, order),
    };

    let mut notes = Vec::new();
    let branch = if rank_k_on_h == rank_h {
        notes.push(format!(
            "k and h act on h with equal generic rank {rank_h}, so (Sh)^k_si = (Sh)^h_si"
        ));
        Branch::HBranch
    } else if dims.k_on_sh != dims.h_on_sh {
        notes.push(format!(
            "(Sh)^k_si and (Sh)^h_si differ below degree {}, so (Sh)^k_si = (Sk)^k_si",
            bound + 1
        ));
        Branch::KBranch
    } else {
        notes.push(format!(
            "k acts on h with rank {rank_k_on_h} > {rank_h}, yet (Sh)^k_si and (Sh)^h_si agree up to degree {bound}"
        ));
        Branch::Undecided
    };

    let c_value_input = c_value_from(n, n - rank_g);
    let c_value_chosen = match branch {
        Branch::HBranch => Some(c_value_from(m, m - rank_h)),
        Branch::KBranch => Some(c_value_from(n, n - rank_k)),
        Branch::Undecided => None,
    };
    if dims.g_on_sg != dims.k_on_sh {
        notes.push("mismatch: (Sg)^g_si and (Sh)^k_si differ up to the bound".into());
    }
    let chosen_dims = match branch {
        Branch::HBranch => Some(&dims.h_on_sh),
        Branch::KBranch => Some(&dims.k_on_sk),
        Branch::Undecided => None,
    };
    if let Some(d) = chosen_dims {
        if *d != dims.g_on_sg {
            notes.push("mismatch: the chosen algebra's semi-center differs from that of g up to the bound".into());
        }
    }
    let both_equal = dims.g_on_sh == dims.h_on_sh && dims.g_on_sh == dims.g_on_sg;
    if both_equal {
        notes.push(format!(
            "both inclusions (Sh)^g_si in (Sh)^h_si and in (Sg)^g_si are equalities up to degree {bound}"
        ));
    }
    if c_value_chosen.is_some_and(|cv| cv != c_value_input) {
        notes.push("mismatch: c-value not preserved".into());
    }

    Ok(ReductionStep {
        input: g.clone(),
        weight: weight.to_vec(),
        c,
        h,
        k,
        semisimple_part: jc.semisimple,
        nilpotent_part: dp,
        rank_g,
        rank_h,
        rank_k,
        rank_k_on_h,
        branch,
        c_value_input,
        c_value_chosen,
        degree_bound: bound,
        dims,
        both_equal,
        notes,
    })
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
