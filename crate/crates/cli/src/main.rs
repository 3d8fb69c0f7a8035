use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use semicenter::catalog::{catalog_entries, lookup};
use semicenter::criteria::Status;
use semicenter::invariants::{find_relations, formal_names, is_zero_weight, minimal_generators, Mode, Representation};
use semicenter::kernel::{freeness_verdict, kernel_of_rho};
use semicenter::lie::LieAlgebra;
use semicenter::pfaffian::{certified_rank, DEFAULT_SEED};
use semicenter::poly::{format_poly, parse_poly};
use semicenter::reduction::reduce_one_step;
use semicenter::report::{analyze, kernel_report, weight_strings, AnalysisOptions, ReductionReport};
use semicenter::MonomialOrder;

#[derive(Parser)]
#[command(
    name = "semicenter",
    version,
    about = "Invariants and semi-invariants of Lie algebras given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in algebras.
    Catalog,
    /// Index, fundamental semi-invariant, generators, kernel and all criteria.
    Analyze(Common),
    /// Generators of the semi-center and of the invariants, with relations.
    Invariants(Common),
    /// Minimal generators of the kernel of the anchor map and a syzygy.
    Kernel(Common),
    /// One reduction step along the weight of a semi-invariant.
    Reduce {
        #[command(flatten)]
        common: Common,
        /// Semi-invariant whose weight drives the step, e.g. "v3". Defaults
        /// to the first generator with a nonzero weight.
        #[arg(long)]
        weight_of: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Catalog entry, NAME[:PARAM]; see `semicenter catalog`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    catalog: Option<String>,
    /// JSON file with `name`, `basis` and `brackets`.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Degree bound D for the graded searches; defaults to dim g.
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report to PATH ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// degrevlex, grlex or lex.
    #[arg(long, default_value = "degrevlex", value_parser = parse_order)]
    order: MonomialOrder,
}

fn parse_order(s: &str) -> std::result::Result<MonomialOrder, String> {
    MonomialOrder::parse(s).ok_or_else(|| format!("unknown monomial order {s:?}; use degrevlex, grlex or lex"))
}

impl Common {
    fn algebra(&self) -> Result<LieAlgebra> {
        if let Some(spec) = &self.catalog {
            return lookup(spec).with_context(|| format!("catalog entry {spec:?}"));
        }
        let path = self.file.as_ref().expect("clap enforces a source");
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        LieAlgebra::from_json_str(&text).with_context(|| format!("in {}", path.display()))
    }

    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            max_degree: self.max_degree,
            seed: self.seed,
            order: self.order,
        }
    }

    fn emit(&self, text: &str, json: impl FnOnce() -> String) -> Result<()> {
        match &self.json {
            Some(p) if p.as_os_str() == "-" => println!("{}", json()),
            Some(p) => {
                print!("{text}");
                std::fs::write(p, json() + "\n").with_context(|| format!("writing {}", p.display()))?;
            }
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn run_invariants(c: &Common) -> Result<()> {
    let g = c.algebra()?;
    let opts = c.options();
    let bound = opts.bound_for(&g);
    let names = g.basis_names();
    let mut text = String::new();
    let mut sections = Vec::new();
    for (title, label, mode) in [
        ("semi_invariants", "semi-invariant", Mode::AllSemiInvariants),
        ("invariants", "invariant", Mode::InvariantsOnly),
    ] {
        let gens = minimal_generators(&g, bound, mode, c.order);
        let rels = find_relations(&gens.generators, bound, c.order);
        text.push_str(&format!(
            "{label} generators up to degree {bound} (degrees {:?}):\n",
            gens.degrees()
        ));
        let mut list = Vec::new();
        for (i, s) in gens.generators.iter().enumerate() {
            let p = format_poly(&s.poly, names, c.order);
            text.push_str(&format!(
                "  f{} = {p}  weight ({})\n",
                i + 1,
                weight_strings(&s.weight).join(", ")
            ));
            list.push(serde_json::json!({
                "degree": s.degree,
                "weight": weight_strings(&s.weight),
                "polynomial": p,
            }));
        }
        let rel_json = match &rels {
            Ok(rs) => {
                let formal = formal_names(gens.generators.len());
                let shown: Vec<String> = rs
                    .iter()
                    .map(|r| format_poly(&r.poly, &formal, MonomialOrder::GrLex))
                    .collect();
                for r in &shown {
                    text.push_str(&format!("  relation: {r} = 0\n"));
                }
                serde_json::json!(shown)
            }
            Err(e) => {
                text.push_str(&format!("  relations: {e}\n"));
                serde_json::Value::Null
            }
        };
        sections.push((
            title,
            serde_json::json!({
                "generators": list,
                "degrees": gens.degrees(),
                "graded_dims": gens.graded_dims,
                "relations": rel_json,
                "irrational_degrees": gens.irrational_degrees,
            }),
        ));
    }
    c.emit(&text, || {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "algebra".into(),
            serde_json::to_value(g.to_json()).expect("serializable"),
        );
        obj.insert("degree_bound".into(), bound.into());
        for (k, v) in sections {
            obj.insert(k.into(), v);
        }
        serde_json::to_string_pretty(&obj).expect("serializable")
    })
}

fn run_kernel(c: &Common) -> Result<()> {
    let g = c.algebra()?;
    let bound = c.options().bound_for(&g);
    let rank = certified_rank(&g.structure_matrix(), c.seed).rank;
    let index = g.dim() - rank;
    let k = kernel_of_rho(&g, bound, index, c.order)?;
    let report = kernel_report(&g, &k);
    let verdict = freeness_verdict(&k);
    let mut text = format!(
        "kernel of rho for {}: {} generators up to degree {bound}, rank {}\n",
        g.name(),
        report.generators.len(),
        report.rank
    );
    for (i, w) in report.generators.iter().enumerate() {
        text.push_str(&format!("  w{} = ({})\n", i + 1, w.components.join(", ")));
    }
    if let Some(s) = &report.syzygy {
        text.push_str(&format!("  syzygy: {}\n", s.display));
    }
    let free = match verdict.status {
        Status::Holds => format!("free up to degree {bound}"),
        Status::Fails => "not free".to_string(),
        Status::Unknown => "undetermined".to_string(),
    };
    text.push_str(&format!("{free}\n"));
    c.emit(&text, || {
        serde_json::to_string_pretty(&serde_json::json!({
            "algebra": g.to_json(),
            "kernel": report,
            "verdict": verdict,
        }))
        .expect("serializable")
    })
}

fn run_reduce(c: &Common, weight_of: Option<&str>) -> Result<()> {
    let g = c.algebra()?;
    let bound = c.options().bound_for(&g);
    let weight = match weight_of {
        Some(s) => {
            let f = parse_poly(s, g.basis_names()).with_context(|| format!("--weight-of {s:?}"))?;
            Representation::adjoint(&g)
                .weight_of(&f)
                .ok_or_else(|| anyhow!("{s} is not a semi-invariant of {}", g.name()))?
        }
        None => {
            let gens = minimal_generators(&g, bound, Mode::AllSemiInvariants, c.order);
            match gens.generators.iter().find(|s| !s.is_invariant()) {
                Some(s) => s.weight.clone(),
                None => {
                    println!("nothing to reduce: no semi-invariant with a nonzero weight up to degree {bound}");
                    return Ok(());
                }
            }
        }
    };
    if is_zero_weight(&weight) {
        bail!("the semi-invariant is an invariant (weight zero); nothing to reduce");
    }
    let step = reduce_one_step(&g, &weight, bound, c.order, c.seed)?;
    let report = ReductionReport::new(&step);
    c.emit(&report.text_summary(&step), || report.to_json())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Catalog => {
            for e in catalog_entries() {
                println!("{:<14} {}", e.key, e.description);
            }
            Ok(())
        }
        Command::Analyze(c) => {
            let g = c.algebra()?;
            let report = analyze(&g, &c.options());
            c.emit(&report.text_summary(), || report.to_json())
        }
        Command::Invariants(c) => run_invariants(&c),
        Command::Kernel(c) => run_kernel(&c),
        Command::Reduce { common, weight_of } => run_reduce(&common, weight_of.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
