//! Numerical necessary conditions for coregularity, each evaluated with an
//! explicit status, certainty and applicability gate.

use serde::Serialize;

use crate::invariants::{GeneratorSet, GorensteinValue, TrdegVerdict};
use crate::kernel::{freeness_verdict, KernelBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certainty {
    Certified,
    UpToDegree { degree: u32 },
    BudgetExceeded { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub certainty: Certainty,
    /// False when a hypothesis is known to fail; the status is then `Unknown`.
    pub applicable: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub display: String,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl CriterionVerdict {
    pub fn new(id: &'static str, statement: &'static str, status: Status, certainty: Certainty) -> Self {
        CriterionVerdict {
            id,
            statement,
            status,
            certainty,
            applicable: true,
            lhs: None,
            rhs: None,
            display: String::new(),
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn with_values(mut self, lhs: i64, rhs: i64, display: String) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.display = display;
        self
    }

    fn not_applicable(mut self, reason: String) -> Self {
        self.status = Status::Unknown;
        self.applicable = false;
        self.notes.push(format!("not applicable: {reason}"));
        self
    }

    fn fails(mut self, certainty: Certainty, witness: String) -> Self {
        self.status = Status::Fails;
        self.certainty = certainty;
        self.witness = Some(witness);
        self
    }
}

pub const DEGREE_SUM_BOUND: &str = "degree-sum-bound";
pub const INDEX_CENTER_BOUND: &str = "index-center-bound";
pub const DEGREE_SUM_EQUALITY: &str = "degree-sum-equality";
pub const EQUALITY_IFF_CODIM2: &str = "equality-iff-codim2";
pub const SINGULAR_CODIM_LE_3: &str = "singular-codim-le-3";
pub const GORENSTEIN_EQUALITY: &str = "gorenstein-equality";
pub const TRANSCENDENCE_DEGREE: &str = "transcendence-degree";
pub const PURE_CODIM_3: &str = "pure-codim-3-locus";

/// Everything the criteria read, computed for one algebra.
pub struct CriteriaInputs<'a> {
    pub dim: usize,
    pub index: usize,
    pub center_dim: usize,
    pub fundamental_degree: u32,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    /// `Ok(None)`: the non-regular locus is empty.
    pub codim: &'a Result<Option<usize>, String>,
    pub semi_invariants: &'a GeneratorSet,
    pub invariants: &'a GeneratorSet,
    /// Relations among the invariant generators, or the budget failure.
    pub invariant_relations: &'a Result<Vec<crate::invariants::Relation>, String>,
    /// Jacobian rank of the invariant generators.
    pub invariant_jacobian_rank: usize,
    pub gorenstein: &'a GorensteinValue,
    pub trdeg: &'a TrdegVerdict,
    pub kernel: &'a Result<KernelBasis, String>,
}

impl CriteriaInputs<'_> {
    fn c(&self) -> i64 {
        ((self.dim + self.index) / 2) as i64
    }

    fn bound(&self) -> u32 {
        self.semi_invariants.degree_bound
    }

    fn irrational(&self) -> bool {
        !self.semi_invariants.irrational_degrees.is_empty()
    }

    /// `None` when no proper semi-invariant is known; otherwise the reason.
    fn semi_invariant_gate(&self) -> Option<String> {
        if self.semi_invariants.proper_semi_invariants_seen {
            Some(format!(
                "proper semi-invariants exist (found up to degree {})",
                self.bound()
            ))
        } else {
            None
        }
    }

    /// Certainty of "no proper semi-invariants": nilpotent algebras have none.
    fn gate_certainty(&self) -> Certainty {
        if self.is_nilpotent && !self.irrational() {
            Certainty::Certified
        } else {
            Certainty::UpToDegree { degree: self.bound() }
        }
    }

    /// The invariant generators found are algebraically independent and
    /// satisfy no relation up to the bound.
    fn presentation_polynomial(&self) -> Result<bool, String> {
        if self.invariant_jacobian_rank < self.invariants.generators.len() {
            return Ok(false);
        }
        match self.invariant_relations {
            Ok(r) => Ok(r.is_empty()),
            Err(e) => Err(e.clone()),
        }
    }

    fn rhs_equality(&self) -> i64 {
        (self.dim as i64 + self.index as i64 - self.fundamental_degree as i64) / 2
    }

    fn equality_display(&self, lhs_terms: &str) -> String {
        format!(
            "{} = (1/2)({}+{}-{})",
            lhs_terms, self.dim, self.index, self.fundamental_degree
        )
    }
}

fn sum_display(degrees: &[u32]) -> String {
    if degrees.is_empty() {
        "0".into()
    } else {
        degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("+")
    }
}

fn degree_sum_bound(x: &CriteriaInputs) -> CriterionVerdict {
    let degs = x.semi_invariants.degrees();
    let lhs = x.semi_invariants.degree_sum() as i64;
    let rhs = x.c();
    let mut v = CriterionVerdict::new(
        DEGREE_SUM_BOUND,
        "if the semi-center is a polynomial ring, the generator degrees sum to at most (dim g + i(g))/2",
        Status::Holds,
        Certainty::UpToDegree { degree: x.bound() },
    )
    .with_values(
        lhs,
        rhs,
        format!("{} <= (1/2)({}+{})", sum_display(&degs), x.dim, x.index),
    );
    if lhs > rhs {
        if x.irrational() {
            v.status = Status::Unknown;
            v.notes
                .push("semi-invariants with irrational weights may make some generators redundant".into());
        } else {
            // minimal generators up to the bound persist in every complete
            // generating set, so the sum only grows
            v = v.fails(
                Certainty::Certified,
                format!("minimal semi-invariant generators of degrees {degs:?} sum to {lhs} > {rhs}; the semi-center is not a polynomial ring"),
            );
        }
    }
    let inv = x.invariants.degree_sum() as i64;
    if x.semi_invariants.proper_semi_invariants_seen && inv != lhs {
        v.notes.push(format!(
            "invariant generators alone have degree sum {} ({}), compared with the bound {}",
            inv,
            sum_display(&x.invariants.degrees()),
            rhs
        ));
    }
    v
}

fn index_center_bound(x: &CriteriaInputs) -> CriterionVerdict {
    let lhs = 3 * x.index as i64;
    let rhs = (x.dim + 2 * x.center_dim) as i64;
    let v = CriterionVerdict::new(
        INDEX_CENTER_BOUND,
        "without proper semi-invariants, coregularity forces 3 i(g) <= dim g + 2 dim Z(g)",
        Status::Holds,
        Certainty::Certified,
    )
    .with_values(lhs, rhs, format!("3*{} <= {}+2*{}", x.index, x.dim, x.center_dim));
    if let Some(reason) = x.semi_invariant_gate() {
        return v.not_applicable(reason);
    }
    if lhs > rhs {
        v.fails(x.gate_certainty(), format!("{lhs} > {rhs}: not coregular"))
    } else {
        v
    }
}

fn degree_sum_equality(x: &CriteriaInputs) -> CriterionVerdict {
    let degs = x.invariants.degrees();
    let lhs = x.invariants.degree_sum() as i64;
    let rhs = x.rhs_equality();
    let mut v = CriterionVerdict::new(
        DEGREE_SUM_EQUALITY,
        "without proper semi-invariants and if coregular, the invariant generator degrees sum to (dim g + i(g) - d(g))/2",
        Status::Holds,
        Certainty::UpToDegree { degree: x.bound() },
    )
    .with_values(lhs, rhs, x.equality_display(&sum_display(&degs)));
    if let Some(reason) = x.semi_invariant_gate() {
        return v.not_applicable(reason);
    }
    match x.presentation_polynomial() {
        Err(e) => {
            v.status = Status::Unknown;
            v.certainty = Certainty::BudgetExceeded { detail: e };
            return v;
        }
        Ok(false) => return v.not_applicable("the minimal invariant generators are algebraically dependent, so the invariants do not form a polynomial ring".into()),
        Ok(true) => {}
    }
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Equal => v,
        std::cmp::Ordering::Greater => {
            let c = x.gate_certainty();
            v.fails(c, format!("{lhs} > {rhs}: not coregular"))
        }
        std::cmp::Ordering::Less => {
            v.status = Status::Unknown;
            v.notes.push(format!(
                "degree sum {lhs} < {rhs}: generators above degree {} may be missing",
                x.bound()
            ));
            v
        }
    }
}

fn codim_at_least_2(codim: &Option<usize>) -> bool {
    codim.map(|c| c >= 2).unwrap_or(true)
}

fn equality_iff_codim2(x: &CriteriaInputs) -> CriterionVerdict {
    let lhs = x.invariants.degree_sum() as i64;
    let c = x.c();
    let mut v = CriterionVerdict::new(
        EQUALITY_IFF_CODIM2,
        "without proper semi-invariants and if coregular, the degree sum equals (dim g + i(g))/2 exactly when the non-regular locus has codimension >= 2",
        Status::Holds,
        Certainty::UpToDegree { degree: x.bound() },
    );
    let codim = match x.codim {
        Ok(c) => *c,
        Err(e) => {
            v.status = Status::Unknown;
            v.certainty = Certainty::BudgetExceeded { detail: e.clone() };
            return v;
        }
    };
    let eq = lhs == c;
    let big = codim_at_least_2(&codim);
    v.display = format!(
        "({} = {}) is {}, codim {} >= 2 is {}",
        lhs,
        c,
        eq,
        codim.map(|c| c.to_string()).unwrap_or_else(|| "inf".into()),
        big
    );
    v.lhs = Some(eq as i64);
    v.rhs = Some(big as i64);
    if (x.fundamental_degree == 0) != big {
        v.notes
            .push("internal mismatch: d(g) = 0 should hold exactly when codim >= 2".into());
    }
    if let Some(reason) = x.semi_invariant_gate() {
        return v.not_applicable(reason);
    }
    match x.presentation_polynomial() {
        Err(e) => {
            v.status = Status::Unknown;
            v.certainty = Certainty::BudgetExceeded { detail: e };
            return v;
        }
        Ok(false) => return v.not_applicable("the invariants do not form a polynomial ring".into()),
        Ok(true) => {}
    }
    if eq != big {
        if eq || lhs > c {
            let cert = x.gate_certainty();
            v = v.fails(
                cert,
                format!("degree sum {lhs} vs {c} disagrees with codim >= 2 = {big}: not coregular"),
            );
        } else {
            v.status = Status::Unknown;
            v.notes
                .push(format!("degree sum {lhs} < {c} may grow above degree {}", x.bound()));
        }
    }
    v
}

fn singular_codim(x: &CriteriaInputs) -> CriterionVerdict {
    let mut v = CriterionVerdict::new(
        SINGULAR_CODIM_LE_3,
        "without proper semi-invariants, a coregular non-abelian algebra has non-regular locus of codimension <= 3",
        Status::Holds,
        Certainty::Certified,
    );
    if x.is_abelian {
        v.display = "abelian: nothing to check".into();
        v.notes.push("holds vacuously for abelian algebras".into());
        return v;
    }
    let codim = match x.codim {
        Ok(c) => *c,
        Err(e) => {
            v.status = Status::Unknown;
            v.certainty = Certainty::BudgetExceeded { detail: e.clone() };
            return v;
        }
    };
    let Some(codim) = codim else {
        v.display = "non-regular locus is empty".into();
        return v;
    };
    v = v.with_values(codim as i64, 3, format!("codim {codim} <= 3"));
    if let Some(reason) = x.semi_invariant_gate() {
        return v.not_applicable(reason);
    }
    if codim > 3 {
        let cert = x.gate_certainty();
        v = v.fails(cert, format!("codim {codim} > 3: not coregular"));
    }
    v
}

fn kernel_freeness(x: &CriteriaInputs) -> CriterionVerdict {
    match x.kernel {
        Ok(k) => {
            let mut v = freeness_verdict(k);
            if let Some(reason) = x.semi_invariant_gate() {
                v.notes.push(format!(
                    "the verdict is about the module only; it says nothing about coregularity because {reason}"
                ));
            } else if v.status == Status::Fails {
                v.notes.push("not coregular".into());
            }
            v
        }
        Err(e) => CriterionVerdict::new(
            crate::kernel::KERNEL_FREENESS,
            "the kernel of the anchor map is a free Sg-module",
            Status::Unknown,
            Certainty::BudgetExceeded { detail: e.clone() },
        ),
    }
}

fn gorenstein_equality(x: &CriteriaInputs) -> CriterionVerdict {
    let rhs = x.rhs_equality();
    let mut v = CriterionVerdict::new(
        GORENSTEIN_EQUALITY,
        "without proper semi-invariants, a(invariants) = (dim g + i(g) - d(g))/2",
        Status::Holds,
        Certainty::UpToDegree { degree: x.bound() },
    );
    if let Err(e) = x.invariant_relations {
        v.status = Status::Unknown;
        v.certainty = Certainty::BudgetExceeded { detail: e.clone() };
        return v;
    }
    match x.gorenstein {
        GorensteinValue::Defined {
            value,
            relation_degree_sum,
            ..
        } => {
            let lhs_terms = if *relation_degree_sum == 0 {
                sum_display(&x.invariants.degrees())
            } else {
                format!(
                    "{}-{} = {}",
                    sum_display(&x.invariants.degrees()),
                    relation_degree_sum,
                    value
                )
            };
            v = v.with_values(*value, rhs, x.equality_display(&lhs_terms));
            if let Some(reason) = x.semi_invariant_gate() {
                return v.not_applicable(reason);
            }
            if *value != rhs {
                v = v.fails(
                    Certainty::UpToDegree { degree: x.bound() },
                    format!(
                        "a = {value} but (1/2)({}+{}-{}) = {rhs}",
                        x.dim, x.index, x.fundamental_degree
                    ),
                );
                v.notes
                    .push("generators or relations above the degree bound could change a".into());
            }
            v
        }
        GorensteinValue::Undefined { reason } => {
            v.rhs = Some(rhs);
            v.status = Status::Unknown;
            v.notes
                .push(format!("a is undefined for the discovered presentation: {reason}"));
            v
        }
    }
}

fn transcendence_degree(x: &CriteriaInputs) -> CriterionVerdict {
    let expected = x.index as i64;
    let mut v = CriterionVerdict::new(
        TRANSCENDENCE_DEGREE,
        "without proper semi-invariants, the invariants have transcendence degree dim g - r(g)",
        Status::Holds,
        Certainty::UpToDegree { degree: x.bound() },
    );
    match x.trdeg {
        TrdegVerdict::Consistent { rank } => {
            v = v.with_values(*rank as i64, expected, format!("Jacobian rank {rank} = {expected}"));
        }
        TrdegVerdict::Deficient {
            rank,
            expected,
            degree_bound,
        } => {
            v = v.with_values(
                *rank as i64,
                *expected as i64,
                format!("Jacobian rank {rank} < {expected}"),
            );
            v.status = Status::Unknown;
            v.notes
                .push(format!("more invariants may exist above degree {degree_bound}"));
        }
        TrdegVerdict::Contradiction { rank, expected } => {
            v = v.with_values(
                *rank as i64,
                *expected as i64,
                format!("Jacobian rank {rank} > {expected}"),
            );
            v = v.fails(
                Certainty::Certified,
                format!("{rank} algebraically independent invariants exceed {expected}"),
            );
        }
        TrdegVerdict::NotApplicable { reason } => {
            v.display = "not applicable".into();
            return v.not_applicable(reason.clone());
        }
    }
    v
}

fn purity() -> CriterionVerdict {
    let mut v = CriterionVerdict::new(
        PURE_CODIM_3,
        "if the non-regular locus has codimension 3 it is purely of codimension 3",
        Status::Unknown,
        Certainty::Certified,
    );
    v.applicable = false;
    v.display = "not checked".into();
    v.notes.push("not checked: needs primary decomposition".into());
    v
}

pub fn evaluate_criteria(x: &CriteriaInputs) -> Vec<CriterionVerdict> {
    vec![
        degree_sum_bound(x),
        index_center_bound(x),
        degree_sum_equality(x),
        equality_iff_codim2(x),
        singular_codim(x),
        kernel_freeness(x),
        gorenstein_equality(x),
        transcendence_degree(x),
        purity(),
    ]
}
