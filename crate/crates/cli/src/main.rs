//! `gderiv`: JSON reports for derivation-type spaces of ω-Lie superalgebras.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gderiv::extension::ExtensionSpaces;
use gderiv::theorems::{check, Dims};
use gderiv::{
    catalog, classify_samples, gder_witness, load_algebra, AlgebraSpaces, Error, GradedMap, Matrix, OmegaSuperAlgebra,
    Parity, SolveOptions, SpaceKind, StatementId, TheoremReport,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gderiv",
    version,
    about = "Exact generalized-derivation computations for omega-Lie superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra.
    Validate(Source),
    /// Solve a derivation-type space.
    Spaces(SpacesArgs),
    /// Evaluate structural statements.
    Theorems(TheoremArgs),
    /// Build the t/t² extension and evaluate the extension statements.
    Extend(Source),
    /// Classify Jordan structures of random elements of a space.
    Jordan(JordanArgs),
    /// Print an algebra in the document format.
    Export(Source),
}

#[derive(Args, Serialize)]
struct Source {
    /// Catalog id or path to an algebra document.
    #[arg(long)]
    algebra: String,
}

#[derive(Args, Serialize)]
struct SpacesArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Degree::Both)]
    degree: Degree,
    /// Restrict to maps compatible with ω.
    #[arg(long)]
    compatible: bool,
    /// Also require the witness maps to be compatible (not part of the standard definitions).
    #[arg(long)]
    strict_witnesses: bool,
}

#[derive(Args, Serialize)]
struct TheoremArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: Source,
    /// Statement id or `all`.
    #[arg(long, default_value = "all")]
    statement: String,
}

#[derive(Args, Serialize)]
struct JordanArgs {
    #[command(flatten)]
    #[serde(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Kind::Gder)]
    kind: Kind,
    #[arg(long)]
    compatible: bool,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Der,
    Gder,
    Qder,
    Cent,
    Qcent,
    Zder,
}

impl From<Kind> for SpaceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Der => SpaceKind::Der,
            Kind::Gder => SpaceKind::GDer,
            Kind::Qder => SpaceKind::QDer,
            Kind::Cent => SpaceKind::Cent,
            Kind::Qcent => SpaceKind::QCent,
            Kind::Zder => SpaceKind::ZDer,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Degree {
    Even,
    Odd,
    Both,
}

impl Degree {
    fn parities(self) -> &'static [Parity] {
        match self {
            Degree::Even => &[Parity::Even],
            Degree::Odd => &[Parity::Odd],
            Degree::Both => &Parity::BOTH,
        }
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    inputs: Value,
    results: Value,
    version: &'static str,
}

/// Outcome of a command: payload, one-line summary, and whether a
/// statement was falsified.
struct Outcome {
    results: Value,
    summary: String,
    falsified: bool,
}

fn load(source: &str) -> Result<OmegaSuperAlgebra, Error> {
    match catalog::get(source) {
        Ok(entry) => Ok(entry.algebra),
        Err(unknown) => {
            let path = Path::new(source);
            if !path.exists() {
                return Err(unknown);
            }
            let text = std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("{source}: {e}")))?;
            load_algebra(&text)
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn validate(alg: &OmegaSuperAlgebra) -> Outcome {
    let axioms = alg.validate();
    let summary = format!(
        "{}: closure {}, skew {}, omega grading {}, omega-Jacobi {} ({} failing triples)",
        alg.name(),
        axioms.closure_ok,
        axioms.skew_ok,
        axioms.mixed_omega_ok,
        axioms.jacobi_ok,
        axioms.jacobi_failures.len()
    );
    Outcome {
        results: json!({ "algebra": alg.to_document(), "axioms": axioms }),
        summary,
        falsified: false,
    }
}

#[derive(Serialize)]
struct Witness {
    d: Matrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_prime: Option<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_double_prime: Option<Matrix>,
}

fn witness(alg: &OmegaSuperAlgebra, space: &gderiv::MapSpace, d: &GradedMap) -> Result<Witness, Error> {
    let (a, b) = gder_witness(alg, space, d)?;
    Ok(match space.kind {
        SpaceKind::GDer => Witness {
            d: d.matrix().clone(),
            d_prime: Some(a.matrix().clone()),
            d_double_prime: Some(b.matrix().clone()),
        },
        _ => Witness {
            d: d.matrix().clone(),
            d_prime: Some(b.matrix().clone()),
            d_double_prime: None,
        },
    })
}

fn spaces(alg: &OmegaSuperAlgebra, args: &SpacesArgs) -> Result<Outcome, Error> {
    let kind = SpaceKind::from(args.kind);
    let opts = SolveOptions {
        compatible: args.compatible,
        strict_witnesses: args.strict_witnesses,
    };
    let mut parts = Vec::new();
    let mut dims = BTreeMap::new();
    for &p in args.degree.parities() {
        let space = gderiv::solve_space(alg, kind, p, opts);
        let basis: Vec<Matrix> = space.elements().iter().map(|d| d.matrix().clone()).collect();
        let witnesses = if kind.blocks() > 1 {
            let w: Result<Vec<_>, _> = space.elements().iter().map(|d| witness(alg, &space, d)).collect();
            Some(w?)
        } else {
            None
        };
        dims.insert(p.to_string(), space.dim());
        parts.push(json!({
            "degree": p,
            "dim": space.dim(),
            "coordinates": space.coords.entries(),
            "basis": basis,
            "witnesses": witnesses,
        }));
    }
    let total: usize = dims.values().sum();
    dims.insert("total".into(), total);
    let label = format!("{}{}", kind.label(), if args.compatible { "ω" } else { "" });
    Ok(Outcome {
        summary: format!("{} {label}: dims {dims:?}", alg.name()),
        results: json!({
            "kind": kind,
            "compatible": args.compatible,
            "strict_witnesses": args.strict_witnesses,
            "dims": dims,
            "parts": parts,
        }),
        falsified: false,
    })
}

fn summarize(reports: &[TheoremReport]) -> (String, bool) {
    let mut lines = Vec::new();
    let mut falsified = false;
    for r in reports {
        falsified |= r.is_falsified();
        lines.push(format!("{}: {:?}", r.statement, r.conclusion));
    }
    (lines.join("\n"), falsified)
}

fn theorems(alg: &OmegaSuperAlgebra, statement: &str) -> Result<Outcome, Error> {
    let ids: Vec<StatementId> = if statement == "all" {
        StatementId::all().collect()
    } else {
        vec![statement.parse()?]
    };
    let needs_algebra = ids.iter().any(|id| StatementId::ALGEBRA.contains(id));
    let needs_extension = ids.iter().any(|id| StatementId::EXTENSION.contains(id));
    let spaces = needs_algebra.then(|| AlgebraSpaces::compute(alg));
    let ext = if needs_extension {
        Some(ExtensionSpaces::compute(alg)?)
    } else {
        None
    };
    let mut reports = Vec::new();
    for id in ids {
        let report = match (&spaces, &ext) {
            (Some(s), _) if StatementId::ALGEBRA.contains(&id) => check(s, id)?,
            (_, Some(e)) => e.check(id)?,
            _ => unreachable!("spaces computed for every requested family"),
        };
        reports.push(report);
    }
    let (summary, falsified) = summarize(&reports);
    Ok(Outcome {
        results: json!({ "algebra": alg.name(), "reports": reports }),
        summary,
        falsified,
    })
}

fn extend(alg: &OmegaSuperAlgebra) -> Result<Outcome, Error> {
    let ext = ExtensionSpaces::compute(alg)?;
    let reports = ext.check_all()?;
    let dims: BTreeMap<String, Dims> = ext.dims().into_iter().collect();
    let phi: Vec<Value> = ext
        .phi_qder
        .iter()
        .map(|p| {
            json!({
                "d": p.d.matrix(),
                "degree": p.d.degree(),
                "d_prime": p.d_prime.matrix(),
                "phi": p.map.matrix(),
                "witness_independent": p.witness_independent,
                "compatible": ext.qder_omega.contains(&p.d),
            })
        })
        .collect();
    let (mut summary, falsified) = summarize(&reports);
    summary = format!(
        "{}: omega-Jacobi on the extension {} ({} failing triples)\n{summary}",
        ext.breve.breve.name(),
        ext.breve.axioms.jacobi_ok,
        ext.breve.axioms.jacobi_failures.len()
    );
    Ok(Outcome {
        results: json!({
            "base": alg.name(),
            "extension": ext.breve.breve.to_document(),
            "derived": ext.breve.derived,
            "complement": ext.breve.complement,
            "projection": ext.breve.projection(),
            "axioms": ext.breve.axioms,
            "dims": dims,
            "phi": phi,
            "reports": reports,
        }),
        summary,
        falsified,
    })
}

fn jordan(alg: &OmegaSuperAlgebra, args: &JordanArgs) -> Result<Outcome, Error> {
    let tally = classify_samples(alg, args.kind.into(), args.compatible, args.samples, args.seed)?;
    let falsified = tally.pattern_set.is_some() && !tally.mismatches.is_empty();
    let summary = format!(
        "{} samples classified of {}, {} mismatches, {} not split, patterns {:?}, shapes {:?}",
        tally.classified,
        tally.requested,
        tally.mismatches.len(),
        tally.not_split,
        tally.by_pattern,
        tally.by_shape
    );
    Ok(Outcome {
        results: to_value(&tally),
        summary,
        falsified,
    })
}

fn run(cli: &Cli) -> (&'static str, Value, Result<Outcome, Error>) {
    match &cli.command {
        Command::Validate(s) => ("validate", to_value(s), load(&s.algebra).map(|a| validate(&a))),
        Command::Spaces(a) => (
            "spaces",
            to_value(a),
            load(&a.source.algebra).and_then(|alg| spaces(&alg, a)),
        ),
        Command::Theorems(a) => (
            "theorems",
            to_value(a),
            load(&a.source.algebra).and_then(|alg| theorems(&alg, &a.statement)),
        ),
        Command::Extend(s) => ("extend", to_value(s), load(&s.algebra).and_then(|a| extend(&a))),
        Command::Jordan(a) => (
            "jordan",
            to_value(a),
            load(&a.source.algebra).and_then(|alg| jordan(&alg, a)),
        ),
        Command::Export(s) => (
            "export",
            to_value(s),
            load(&s.algebra).map(|a| Outcome {
                summary: format!("{}: {} even, {} odd", a.name(), a.dim_even(), a.dim_odd()),
                results: to_value(&a.to_document()),
                falsified: false,
            }),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, inputs, outcome) = run(&cli);
    let (results, code) = match outcome {
        Ok(o) => {
            eprintln!("{}", o.summary);
            let code = if o.falsified { 1 } else { 0 };
            (o.results, code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (json!({ "error": e.to_string() }), 2)
        }
    };
    let report = RunReport {
        command,
        inputs,
        results,
        version: env!("CARGO_PKG_VERSION"),
    };
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    ExitCode::from(code)
}
