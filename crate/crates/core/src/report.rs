//! The full analysis pipeline and its serializable report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::criteria::{evaluate_criteria, CriteriaInputs, CriterionVerdict, Status};
use crate::invariants::{
    algebraically_independent, find_relations, formal_names, gorenstein_invariant, minimal_generators, trdeg_check,
    GeneratorSet, GorensteinValue, Mode, Relation, TrdegVerdict,
};
use crate::kernel::{kernel_of_rho, Freeness, KernelBasis};
use crate::lie::{AlgebraFile, LieAlgebra};
use crate::pfaffian::{c_value_from, certified_rank, fundamental_semi_invariant, singular_locus_codim, DEFAULT_SEED};
use crate::poly::{format_poly, format_rational, MonomialOrder, Polynomial};
use crate::reduction::{Branch, ReductionStep};
use crate::Rational;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    /// Defaults to `dim g`.
    pub max_degree: Option<u32>,
    pub seed: u64,
    pub order: MonomialOrder,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_degree: None,
            seed: DEFAULT_SEED,
            order: MonomialOrder::DegRevLex,
        }
    }
}

impl AnalysisOptions {
    pub fn bound_for(&self, g: &LieAlgebra) -> u32 {
        self.max_degree.unwrap_or(g.dim() as u32).max(1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorEntry {
    pub degree: u32,
    pub weight: Vec<String>,
    pub polynomial: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationEntry {
    pub degree: u32,
    pub polynomial: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub mode: Mode,
    pub degree_bound: u32,
    pub generators: Vec<GeneratorEntry>,
    pub degrees: Vec<u32>,
    pub degree_sum: u32,
    pub graded_dims: Vec<usize>,
    pub irrational_degrees: Vec<u32>,
    pub proper_semi_invariants_found: bool,
    pub jacobian_rank: usize,
    /// `None` when the search hit its budget; see `relations_error`.
    pub relations: Option<Vec<RelationEntry>>,
    pub relations_error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelGenerator {
    pub degree: u32,
    pub components: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SyzygyEntry {
    pub degree: u32,
    pub coefficients: Vec<String>,
    pub display: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub degree_bound: u32,
    pub rank: usize,
    pub generator_rank: usize,
    pub generators: Vec<KernelGenerator>,
    pub syzygy: Option<SyzygyEntry>,
    pub freeness: Freeness,
}

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalReport {
    pub polynomial: String,
    pub pfaffian_gcd: String,
    pub degree: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub rank: usize,
    /// 1-based rows of a nonsingular principal block.
    pub witness: Vec<usize>,
    pub witness_pfaffian: String,
    pub bordered_pfaffians_checked: usize,
    pub probe_ranks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularLocusReport {
    /// `None` when the locus is empty or the computation hit its budget.
    pub codim: Option<usize>,
    pub empty: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Flags {
    pub degree_bound: u32,
    pub irrational_weights_possible: bool,
    pub proper_semi_invariants_found: bool,
    pub budget_exceeded: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub algebra: AlgebraFile,
    pub order: &'static str,
    pub seed: u64,
    pub dim: usize,
    pub index: usize,
    pub rank: usize,
    pub c_value: usize,
    pub d_value: u32,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_unimodular: bool,
    pub rank_certificate: RankReport,
    pub fundamental_semi_invariant: FundamentalReport,
    pub singular_locus: SingularLocusReport,
    pub semi_invariants: GeneratorReport,
    pub invariants: GeneratorReport,
    pub trdeg: TrdegVerdict,
    pub gorenstein: GorensteinValue,
    pub kernel: Option<KernelReport>,
    pub kernel_error: Option<String>,
    pub criteria: Vec<CriterionVerdict>,
    pub flags: Flags,
}

pub fn weight_strings(w: &[Rational]) -> Vec<String> {
    w.iter().map(format_rational).collect()
}

fn generator_report(
    g: &LieAlgebra,
    gens: &GeneratorSet,
    relations: &Result<Vec<Relation>, String>,
    jacobian_rank: usize,
) -> GeneratorReport {
    let names = g.basis_names();
    let formal = formal_names(gens.generators.len());
    GeneratorReport {
        mode: gens.mode,
        degree_bound: gens.degree_bound,
        generators: gens
            .generators
            .iter()
            .map(|s| GeneratorEntry {
                degree: s.degree,
                weight: weight_strings(&s.weight),
                polynomial: format_poly(&s.poly, names, gens.order),
            })
            .collect(),
        degrees: gens.degrees(),
        degree_sum: gens.degree_sum(),
        graded_dims: gens.graded_dims.clone(),
        irrational_degrees: gens.irrational_degrees.clone(),
        proper_semi_invariants_found: gens.proper_semi_invariants_seen,
        jacobian_rank,
        relations: relations.as_ref().ok().map(|rs| {
            rs.iter()
                .map(|r| RelationEntry {
                    degree: r.degree,
                    polynomial: format_poly(&r.poly, &formal, MonomialOrder::GrLex),
                })
                .collect()
        }),
        relations_error: relations.as_ref().err().cloned(),
    }
}

pub fn kernel_report(g: &LieAlgebra, k: &KernelBasis) -> KernelReport {
    let names = g.basis_names();
    let fmt = |p: &Polynomial| format_poly(p, names, k.order);
    KernelReport {
        degree_bound: k.degree_bound,
        rank: k.rank,
        generator_rank: k.generator_rank,
        generators: k
            .generators
            .iter()
            .map(|w| KernelGenerator {
                degree: w.degree,
                components: w.components.iter().map(fmt).collect(),
            })
            .collect(),
        syzygy: k.syzygy.as_ref().map(|s| {
            let terms: Vec<String> = s
                .coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("({})*w{}", fmt(c), i + 1))
                .collect();
            SyzygyEntry {
                degree: s.degree,
                coefficients: s.coefficients.iter().map(fmt).collect(),
                display: format!("{} = 0", terms.join(" + ")),
            }
        }),
        freeness: k.freeness(),
    }
}

fn jacobian_rank(gens: &GeneratorSet) -> usize {
    if gens.generators.is_empty() {
        0
    } else {
        algebraically_independent(&gens.polys(), gens.nvars).rank
    }
}

/// Run every computation on `g` and evaluate the criteria.
pub fn analyze(g: &LieAlgebra, opts: &AnalysisOptions) -> AnalysisReport {
    let n = g.dim();
    let order = opts.order;
    let bound = opts.bound_for(g);
    let mut budget = Vec::new();

    let cert = certified_rank(&g.structure_matrix(), opts.seed);
    let rank = cert.rank;
    let index = n - rank;
    let fsi = fundamental_semi_invariant(g, rank);
    let codim: Result<Option<usize>, String> = singular_locus_codim(g, rank, order).map_err(|e| e.to_string());
    if let Err(e) = &codim {
        budget.push(format!("singular locus: {e}"));
    }

    let semi = minimal_generators(g, bound, Mode::AllSemiInvariants, order);
    let inv = minimal_generators(g, bound, Mode::InvariantsOnly, order);
    let relations = |gens: &GeneratorSet, what: &str, budget: &mut Vec<String>| {
        let r = find_relations(&gens.generators, bound, order).map_err(|e| e.to_string());
        if let Err(e) = &r {
            budget.push(format!("{what} relations: {e}"));
        }
        r
    };
    let inv_rel = relations(&inv, "invariant", &mut budget);
    let semi_rel = if semi.proper_semi_invariants_seen {
        relations(&semi, "semi-invariant", &mut budget)
    } else {
        inv_rel.clone()
    };
    let inv_jac = jacobian_rank(&inv);
    let semi_jac = if semi.proper_semi_invariants_seen {
        jacobian_rank(&semi)
    } else {
        inv_jac
    };
    let trdeg = trdeg_check(&semi, n, rank);
    let gorenstein = match &inv_rel {
        Ok(r) => gorenstein_invariant(&inv.degrees(), r, inv_jac),
        Err(e) => GorensteinValue::Undefined { reason: e.clone() },
    };
    let kernel = kernel_of_rho(g, bound, index, order).map_err(|e| e.to_string());
    if let Err(e) = &kernel {
        budget.push(format!("kernel: {e}"));
    }

    let criteria = evaluate_criteria(&CriteriaInputs {
        dim: n,
        index,
        center_dim: g.center().dim(),
        fundamental_degree: fsi.degree,
        is_abelian: g.is_abelian(),
        is_nilpotent: g.is_nilpotent(),
        codim: &codim,
        semi_invariants: &semi,
        invariants: &inv,
        invariant_relations: &inv_rel,
        invariant_jacobian_rank: inv_jac,
        gorenstein: &gorenstein,
        trdeg: &trdeg,
        kernel: &kernel,
    });

    let names = g.basis_names();
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        algebra: g.to_json(),
        order: order.name(),
        seed: opts.seed,
        dim: n,
        index,
        rank,
        c_value: c_value_from(n, index),
        d_value: fsi.degree,
        center_dim: g.center().dim(),
        derived_dim: g.derived_subalgebra().dim(),
        is_abelian: g.is_abelian(),
        is_nilpotent: g.is_nilpotent(),
        is_unimodular: g.is_unimodular(),
        rank_certificate: RankReport {
            rank,
            witness: cert.witness.iter().map(|i| i + 1).collect(),
            witness_pfaffian: format_poly(&cert.witness_pfaffian, names, order),
            bordered_pfaffians_checked: cert.bordered_checked,
            probe_ranks: cert.probe_ranks.clone(),
        },
        fundamental_semi_invariant: FundamentalReport {
            polynomial: format_poly(&fsi.value, names, order),
            pfaffian_gcd: format_poly(&fsi.pfaffian_gcd, names, order),
            degree: fsi.degree,
        },
        singular_locus: SingularLocusReport {
            codim: codim.as_ref().ok().copied().flatten(),
            empty: matches!(codim, Ok(None)),
            error: codim.as_ref().err().cloned(),
        },
        semi_invariants: generator_report(g, &semi, &semi_rel, semi_jac),
        invariants: generator_report(g, &inv, &inv_rel, inv_jac),
        trdeg,
        gorenstein,
        kernel: kernel.as_ref().ok().map(|k| kernel_report(g, k)),
        kernel_error: kernel.as_ref().err().cloned(),
        criteria,
        flags: Flags {
            degree_bound: bound,
            irrational_weights_possible: !semi.irrational_degrees.is_empty(),
            proper_semi_invariants_found: semi.proper_semi_invariants_seen,
            budget_exceeded: budget,
        },
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn criterion(&self, id: &str) -> Option<&CriterionVerdict> {
        self.criteria.iter().find(|c| c.id == id)
    }

    pub fn text_summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra {} (dim {})", self.algebra.name, self.dim);
        let _ = writeln!(
            s,
            "index i = {}, rank r = {}, c = (1/2)({}+{}) = {}, d = {}, dim Z = {}",
            self.index, self.rank, self.dim, self.index, self.c_value, self.d_value, self.center_dim
        );
        let _ = writeln!(
            s,
            "fundamental semi-invariant: {}",
            self.fundamental_semi_invariant.polynomial
        );
        let codim = match (
            &self.singular_locus.codim,
            self.singular_locus.empty,
            &self.singular_locus.error,
        ) {
            (_, _, Some(e)) => format!("unknown ({e})"),
            (_, true, _) => "empty locus".into(),
            (Some(c), _, _) => c.to_string(),
            (None, false, None) => "unknown".into(),
        };
        let _ = writeln!(s, "codim of the non-regular locus: {codim}");
        let _ = writeln!(s, "degree bound D = {}", self.flags.degree_bound);
        write_generators(&mut s, "semi-invariant generators", &self.semi_invariants);
        if self.semi_invariants.proper_semi_invariants_found {
            write_generators(&mut s, "invariant generators", &self.invariants);
        }
        if let Some(k) = &self.kernel {
            let _ = writeln!(
                s,
                "kernel of rho: {} generators up to degree {}, rank {}",
                k.generators.len(),
                k.degree_bound,
                k.rank
            );
            for (i, w) in k.generators.iter().enumerate() {
                let _ = writeln!(s, "  w{} = ({})", i + 1, w.components.join(", "));
            }
            if let Some(z) = &k.syzygy {
                let _ = writeln!(s, "  syzygy: {}", z.display);
            }
        }
        let _ = writeln!(s, "criteria:");
        for c in &self.criteria {
            let status = match c.status {
                Status::Holds => "Holds",
                Status::Fails => "Fails",
                Status::Unknown => "Unknown",
            };
            let cert = match &c.certainty {
                crate::criteria::Certainty::Certified => "certified".to_string(),
                crate::criteria::Certainty::UpToDegree { degree } => format!("up to degree {degree}"),
                crate::criteria::Certainty::BudgetExceeded { .. } => "budget exceeded".to_string(),
            };
            let _ = writeln!(s, "  [{status}] {} ({cert}): {}", c.id, c.display);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "      witness: {w}");
            }
            for note in &c.notes {
                let _ = writeln!(s, "      note: {note}");
            }
        }
        if self.flags.irrational_weights_possible {
            let _ = writeln!(s, "flag: weights outside Q may have been omitted");
        }
        for b in &self.flags.budget_exceeded {
            let _ = writeln!(s, "flag: budget exceeded: {b}");
        }
        s
    }
}

fn write_generators(s: &mut String, title: &str, r: &GeneratorReport) {
    let _ = writeln!(s, "{title} (degrees {:?}, sum {}):", r.degrees, r.degree_sum);
    for (i, gen) in r.generators.iter().enumerate() {
        let w = if gen.weight.iter().all(|x| x == "0") {
            String::new()
        } else {
            format!("  weight ({})", gen.weight.join(", "))
        };
        let _ = writeln!(s, "  f{} = {}  [degree {}]{w}", i + 1, gen.polynomial, gen.degree);
    }
    match (&r.relations, &r.relations_error) {
        (Some(rels), _) => {
            for rel in rels {
                let _ = writeln!(s, "  relation (degree {}): {} = 0", rel.degree, rel.polynomial);
            }
        }
        (None, Some(e)) => {
            let _ = writeln!(s, "  relations: {e}");
        }
        _ => {}
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub algebra: AlgebraFile,
    pub index: usize,
    pub c_value: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub schema_version: u32,
    pub input: AlgebraFile,
    pub weight: Vec<String>,
    pub c: Vec<String>,
    pub h: AlgebraSummary,
    pub k: AlgebraSummary,
    pub semisimple_part: Vec<Vec<String>>,
    pub nilpotent_part: Vec<Vec<String>>,
    pub rank_g: usize,
    pub rank_h: usize,
    pub rank_k: usize,
    pub rank_k_on_h: usize,
    pub branch: Branch,
    pub chosen: Option<AlgebraFile>,
    pub c_value_input: usize,
    pub c_value_chosen: Option<usize>,
    pub c_value_preserved: Option<bool>,
    pub degree_bound: u32,
    pub semi_center_dims: crate::reduction::SemiCenterDims,
    pub both_equal: bool,
    pub notes: Vec<String>,
}

fn matrix_strings(m: &crate::linalg::Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| weight_strings(r)).collect()
}

impl ReductionReport {
    pub fn new(s: &ReductionStep) -> Self {
        let summary = |l: &LieAlgebra, r: usize| AlgebraSummary {
            algebra: l.to_json(),
            index: l.dim() - r,
            c_value: c_value_from(l.dim(), l.dim() - r),
        };
        ReductionReport {
            schema_version: SCHEMA_VERSION,
            input: s.input.to_json(),
            weight: weight_strings(&s.weight),
            c: weight_strings(&s.c),
            h: summary(&s.h, s.rank_h),
            k: summary(&s.k, s.rank_k),
            semisimple_part: matrix_strings(&s.semisimple_part),
            nilpotent_part: matrix_strings(&s.nilpotent_part),
            rank_g: s.rank_g,
            rank_h: s.rank_h,
            rank_k: s.rank_k,
            rank_k_on_h: s.rank_k_on_h,
            branch: s.branch,
            chosen: s.chosen().map(|l| l.to_json()),
            c_value_input: s.c_value_input,
            c_value_chosen: s.c_value_chosen,
            c_value_preserved: s.c_value_preserved(),
            degree_bound: s.degree_bound,
            semi_center_dims: s.dims.clone(),
            both_equal: s.both_equal,
            notes: s.notes.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn text_summary(&self, step: &ReductionStep) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "reduction step for {}", self.input.name);
        let _ = writeln!(s, "weight chi = ({})", self.weight.join(", "));
        let _ = writeln!(s, "h = ker chi: {}", brackets_text(&step.h));
        let _ = writeln!(s, "k = h + kp: {}", brackets_text(&step.k));
        let _ = writeln!(
            s,
            "ranks: r(g) = {}, r(h) = {}, r(k) = {}, k acting on h: {}",
            self.rank_g, self.rank_h, self.rank_k, self.rank_k_on_h
        );
        let branch = match self.branch {
            Branch::HBranch => "h-branch",
            Branch::KBranch => "k-branch",
            Branch::Undecided => "undecided",
        };
        let _ = writeln!(s, "chosen: {branch}");
        if let Some(l) = step.chosen() {
            let _ = writeln!(s, "result: {}", brackets_text(l));
        }
        let _ = writeln!(
            s,
            "c-value: input {}, chosen {}{}",
            self.c_value_input,
            self.c_value_chosen.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
            match self.c_value_preserved {
                Some(true) => " (preserved)",
                Some(false) => " (NOT preserved)",
                None => "",
            }
        );
        let d = &self.semi_center_dims;
        let _ = writeln!(s, "graded dimensions up to degree {}:", self.degree_bound);
        let _ = writeln!(s, "  (Sg)^g_si  {:?}", d.g_on_sg);
        let _ = writeln!(s, "  (Sh)^h_si  {:?}", d.h_on_sh);
        let _ = writeln!(s, "  (Sh)^g_si  {:?}", d.g_on_sh);
        let _ = writeln!(s, "  (Sh)^k_si  {:?}", d.k_on_sh);
        let _ = writeln!(s, "  (Sk)^k_si  {:?}", d.k_on_sk);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

/// `[a,b] = ...` for every nonzero bracket, or "abelian".
pub fn brackets_text(l: &LieAlgebra) -> String {
    let names = l.basis_names();
    let mut parts = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let v = l.bracket(i, j);
            if v.iter().all(num_traits::Zero::is_zero) {
                continue;
            }
            let p = Polynomial::linear(&v);
            parts.push(format!(
                "[{},{}] = {}",
                names[i],
                names[j],
                format_poly(&p, names, MonomialOrder::DegRevLex)
            ));
        }
    }
    if parts.is_empty() {
        format!("abelian on {}", names.join(", "))
    } else {
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::filiform;
    use crate::criteria::*;

    #[test]
    fn filiform_four_report() {
        let r = analyze(&filiform(4).unwrap(), &AnalysisOptions::default());
        assert_eq!((r.index, r.c_value, r.d_value), (2, 3, 0));
        let eq = r.criterion(DEGREE_SUM_EQUALITY).unwrap();
        assert_eq!(eq.status, Status::Holds);
        assert_eq!(eq.display, "1+2 = (1/2)(4+2-0)");
        assert_eq!(r.criterion(GORENSTEIN_EQUALITY).unwrap().status, Status::Holds);
        assert_eq!(r.criterion(INDEX_CENTER_BOUND).unwrap().status, Status::Holds);
    }

    #[test]
    fn report_is_deterministic() {
        let g = filiform(5).unwrap();
        let a = analyze(&g, &AnalysisOptions::default()).to_json();
        let b = analyze(&g, &AnalysisOptions::default()).to_json();
        assert_eq!(a, b);
    }
}
