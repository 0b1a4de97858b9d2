//! The `homalg` command line: `snf`, `derive`, `grouphom` and `verify`.
//!
//! Every command is first turned into a validated [`Job`] (files read, expressions
//! parsed, ranges checked) and only then executed, so malformed input never starts a
//! computation. Exit statuses: 0 success, 1 a violated invariant, 2 malformed input,
//! 3 a resource budget exceeded.

mod grammar;
mod json;
mod presets;
pub mod verify;

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use grammar::{parse_group, render_group};
pub use json::{
    group_from_json, group_to_json, matrix_from_json, matrix_to_json, parse_matrix,
    presentation_from_json, presentation_to_json, table_from_json, table_to_json, GroupFileJson,
    GroupJson, MatrixJson, PresentationJson, TableJson,
};
pub use presets::{all_presets, parse_group_file, preset, preset_names, GroupFixture};

use crate::abgrp::{canonical_form, FgAbGroup};
use crate::error::{Error, Result};
use crate::exactla::{snf, IntMatrix};
use crate::grouphom::{
    augmentation_ideal, group_ring, homology_bar, homology_cyclic, magnus_sequence, GModuleFree,
    DEFAULT_BAR_BUDGET,
};
use crate::koszul::{derived_from_presentation, presentation_from_group};
use crate::powerfun::{Functor, FunctorKind};
use verify::{SuiteReport, VerifyConfig, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctorArg {
    Sym,
    Ext,
    Tensor,
}

impl From<FunctorArg> for Functor {
    fn from(f: FunctorArg) -> Functor {
        match f {
            FunctorArg::Sym => Functor::Sym,
            FunctorArg::Ext => Functor::Ext,
            FunctorArg::Tensor => Functor::Tensor,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Coeff {
    /// `Z` with trivial action.
    Trivial,
    /// The group ring `Z[G]`.
    Regular,
    /// The augmentation ideal of `Z[G]`.
    Augmentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Periodic resolution (cyclic groups only).
    Periodic,
    /// Normalized bar complex.
    Bar,
    /// Both, reporting whether they agree.
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FourTerm,
    KoszulD2,
    Functoriality,
    Independence,
    Magnus,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "homalg",
    version,
    about = "Exact integer homological algebra: Smith forms, derived functors of power functors, group homology"
)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of a matrix given as JSON {"rows","cols","entries"}.
    Snf {
        #[arg(long)]
        input: PathBuf,
    },
    /// Derived functors L_i T(A) from a Koszul-type complex of a presentation of A.
    Derive {
        #[arg(long, value_enum)]
        functor: FunctorArg,
        #[arg(long)]
        n: usize,
        /// e.g. "Z/4", "Z + Z/3", "Z^2 + Z/2 + Z/4".
        #[arg(long)]
        group: String,
        /// Redundant generators added to the minimal presentation.
        #[arg(long, default_value_t = 0)]
        padding: usize,
        /// Recompute with every padding in --paddings and compare.
        #[arg(long)]
        check_independence: bool,
        /// Comma-separated paddings for --check-independence (default 0,1,2).
        #[arg(long, value_delimiter = ',', requires = "check_independence")]
        paddings: Vec<usize>,
    },
    /// Homology H_i(G, M) of a finite group.
    Grouphom {
        /// One of Z2, Z3, Z4, Z2xZ2.
        #[arg(
            long,
            required_unless_present = "group_file",
            conflicts_with = "group_file"
        )]
        preset: Option<String>,
        /// JSON {"table": {"order","mult"}, "presentations": [...]}.
        #[arg(long)]
        group_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Coeff::Trivial)]
        coeff: Coeff,
        /// Inclusive range "A..B" or a single degree.
        #[arg(long, default_value = "0..4")]
        degrees: String,
        #[arg(long, value_enum, default_value_t = Method::Bar)]
        method: Method,
        /// Largest bar differential, in matrix entries.
        #[arg(long, default_value_t = DEFAULT_BAR_BUDGET)]
        budget: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest bar differential, in matrix entries.
        #[arg(long, default_value_t = DEFAULT_BAR_BUDGET)]
        budget: usize,
        /// Restrict the four-term suite to one preset.
        #[arg(long)]
        preset: Option<String>,
        /// Restrict the four-term suite to one n.
        #[arg(long)]
        n: Option<usize>,
    },
}

/// A command with all of its inputs read and validated.
#[derive(Debug)]
pub enum Job {
    Snf(IntMatrix),
    Derive {
        functor: FunctorKind,
        group: FgAbGroup,
        padding: usize,
        independence: Option<Vec<usize>>,
    },
    Grouphom {
        fixture: GroupFixture,
        coeff: Coeff,
        degrees: RangeInclusive<usize>,
        method: Method,
        budget: usize,
    },
    Verify {
        suite: Suite,
        config: VerifyConfig,
    },
}

/// A finished report in both renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

/// What the process should print and exit with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: Option<String>,
    pub error: Option<String>,
}

pub fn exit_status(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Unsupported(_) => EXIT_INPUT,
        Error::ComplexValidity(_) => EXIT_VERIFICATION,
        Error::Resource(_) => EXIT_RESOURCE,
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Input(format!("bad degree range '{s}' (expected A..B or A)"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), s.trim()),
    };
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

pub fn prepare(cli: &Cli) -> Result<Job> {
    match &cli.command {
        Command::Snf { input } => Ok(Job::Snf(parse_matrix(&read(input)?)?)),
        Command::Derive {
            functor,
            n,
            group,
            padding,
            check_independence,
            paddings,
        } => Ok(Job::Derive {
            functor: FunctorKind::new((*functor).into(), *n)?,
            group: parse_group(group)?,
            padding: *padding,
            independence: check_independence.then(|| {
                if paddings.is_empty() {
                    vec![0, 1, 2]
                } else {
                    paddings.clone()
                }
            }),
        }),
        Command::Grouphom {
            preset: name,
            group_file,
            coeff,
            degrees,
            method,
            budget,
        } => {
            let fixture = match (name, group_file) {
                (Some(n), _) => preset(n)?,
                (None, Some(path)) => {
                    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("group");
                    parse_group_file(&read(path)?, stem)?
                }
                (None, None) => return Err(Error::Input("give --preset or --group-file".into())),
            };
            if *method != Method::Bar && fixture.table.cyclic_generator().is_none() {
                return Err(Error::Input(format!(
                    "{} is not cyclic; the periodic method needs a cyclic group",
                    fixture.name
                )));
            }
            Ok(Job::Grouphom {
                fixture,
                coeff: *coeff,
                degrees: parse_degrees(degrees)?,
                method: *method,
                budget: *budget,
            })
        }
        Command::Verify {
            suite,
            seed,
            budget,
            preset: name,
            n,
        } => {
            if let Some(name) = name {
                preset(name)?;
            }
            if *n == Some(0) {
                return Err(Error::Input("--n must be at least 1".into()));
            }
            Ok(Job::Verify {
                suite: *suite,
                config: VerifyConfig {
                    seed: *seed,
                    budget: *budget,
                    preset: name.clone(),
                    n: *n,
                },
            })
        }
    }
}

pub fn execute(job: &Job) -> Result<Report> {
    match job {
        Job::Snf(m) => run_snf(m),
        Job::Derive {
            functor,
            group,
            padding,
            independence,
        } => run_derive(*functor, group, *padding, independence.as_deref()),
        Job::Grouphom {
            fixture,
            coeff,
            degrees,
            method,
            budget,
        } => run_grouphom(fixture, *coeff, degrees.clone(), *method, *budget),
        Job::Verify { suite, config } => run_verify(*suite, config),
    }
}

/// Validates, executes and renders; never panics on bad input.
pub fn run(cli: &Cli) -> Outcome {
    let result = prepare(cli).and_then(|job| execute(&job));
    match result {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Text => report.text,
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
                    s.push('\n');
                    s
                }
            };
            Outcome {
                status: if report.passed {
                    EXIT_OK
                } else {
                    EXIT_VERIFICATION
                },
                report: Some(rendered),
                error: None,
            }
        }
        Err(e) => Outcome {
            status: exit_status(&e),
            report: None,
            error: Some(format!("error: {e}")),
        },
    }
}

/// The binary's entry point: parses `args`, runs, writes the report and returns the
/// exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let outcome = run(&cli);
    if let Some(err) = &outcome.error {
        eprintln!("{err}");
    }
    if let Some(report) = &outcome.report {
        match &cli.output {
            Some(path) => {
                if let Err(e) = fs::write(path, report) {
                    eprintln!("error: {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            None => print!("{report}"),
        }
    }
    outcome.status
}

fn matrix_text(m: &IntMatrix) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("  ({}x{} empty)\n", m.rows(), m.cols());
    }
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", padded.join(" "));
    }
    out
}

fn run_snf(a: &IntMatrix) -> Result<Report> {
    let s = snf(a);
    let check = (&(&s.u * a) * &s.v) == s.d;
    let diag: Vec<String> = s.diagonal().iter().map(|d| d.to_string()).collect();
    let coker = canonical_form(a);
    let mut text = String::new();
    let _ = writeln!(text, "input: {}x{}", a.rows(), a.cols());
    let _ = writeln!(text, "diagonal: [{}]", diag.join(", "));
    let _ = writeln!(text, "rank: {}", s.rank());
    let _ = writeln!(text, "cokernel: {}", render_group(&coker));
    let _ = writeln!(text, "U·A·V = D: {}", if check { "PASS" } else { "FAIL" });
    for (name, m) in [("U", &s.u), ("D", &s.d), ("V", &s.v)] {
        let _ = writeln!(text, "{name} =");
        text.push_str(&matrix_text(m));
    }
    let json = json!({
        "command": "snf",
        "input": matrix_to_json(a),
        "u": matrix_to_json(&s.u),
        "d": matrix_to_json(&s.d),
        "v": matrix_to_json(&s.v),
        "diagonal": diag,
        "rank": s.rank(),
        "cokernel": group_to_json(&coker),
        "check_passed": check,
    });
    Ok(Report {
        passed: check,
        text,
        json,
    })
}

fn values_json(values: &[FgAbGroup]) -> Value {
    Value::Array(
        values
            .iter()
            .enumerate()
            .map(|(i, g)| json!({"degree": i, "group": group_to_json(g), "text": render_group(g)}))
            .collect(),
    )
}

fn run_derive(
    f: FunctorKind,
    a: &FgAbGroup,
    padding: usize,
    independence: Option<&[usize]>,
) -> Result<Report> {
    let p = presentation_from_group(a, padding);
    let result = derived_from_presentation(f, &p)?;
    let right_exact = result.right_exact_agrees()?;
    let label = format!("{}^{}", f.kind(), f.degree());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "L_i {label}({}) from a presentation with F = Z^{}, H = Z^{} (padding {padding})",
        render_group(a),
        p.f_rank(),
        p.h_rank()
    );
    for (i, g) in result.values.iter().enumerate() {
        let _ = writeln!(text, "  L_{i} = {}", render_group(g));
    }
    let _ = writeln!(
        text,
        "L_0 agrees with {label} of the group: {}",
        if right_exact { "PASS" } else { "FAIL" }
    );
    let mut passed = right_exact;
    let mut json = json!({
        "command": "derive",
        "functor": f.kind().name(),
        "n": f.degree(),
        "group": group_to_json(a),
        "group_text": render_group(a),
        "padding": padding,
        "presentation": {"f_rank": p.f_rank(), "h_rank": p.h_rank()},
        "values": values_json(&result.values),
        "right_exact_agrees": right_exact,
    });
    if let Some(paddings) = independence {
        let mut per = Vec::new();
        let mut consistent = true;
        for &k in paddings {
            let other = derived_from_presentation(f, &presentation_from_group(a, k))?;
            consistent &= other.values == result.values;
            per.push(json!({"padding": k, "values": values_json(&other.values)}));
            let rendered: Vec<String> = other.values.iter().map(render_group).collect();
            let _ = writeln!(text, "  padding {k}: ({})", rendered.join(", "));
        }
        let list: Vec<String> = paddings.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(
            text,
            "independence over paddings {}: {}",
            list.join(", "),
            if consistent { "PASS" } else { "FAIL" }
        );
        passed &= consistent;
        json["independence"] =
            json!({"paddings": paddings, "results": per, "consistent": consistent});
    }
    Ok(Report { passed, text, json })
}

fn coefficient_module(g: &Arc<crate::grouphom::FiniteGroupTable>, coeff: Coeff) -> GModuleFree {
    match coeff {
        Coeff::Trivial => GModuleFree::trivial(g.clone(), 1),
        Coeff::Regular => group_ring(g),
        Coeff::Augmentation => augmentation_ideal(g),
    }
}

fn run_grouphom(
    fx: &GroupFixture,
    coeff: Coeff,
    degrees: RangeInclusive<usize>,
    method: Method,
    budget: usize,
) -> Result<Report> {
    let g = &fx.table;
    let m = coefficient_module(g, coeff);
    let coeff_name = match coeff {
        Coeff::Trivial => "Z",
        Coeff::Regular => "Z[G]",
        Coeff::Augmentation => "I(G)",
    };
    let mut text = String::new();
    let _ = writeln!(text, "H_i({}, {coeff_name}), |G| = {}", fx.name, g.order());
    let mut passed = true;
    let mut rows = Vec::new();
    for i in degrees {
        let periodic = match method {
            Method::Bar => None,
            _ => Some(homology_cyclic(g.order(), &m, i)?),
        };
        let bar = match method {
            Method::Periodic => None,
            _ => Some(homology_bar(g, &m, i, budget)?),
        };
        let agree = match (&periodic, &bar) {
            (Some(p), Some(b)) => Some(p == b),
            _ => None,
        };
        passed &= agree != Some(false);
        let shown = periodic
            .as_ref()
            .or(bar.as_ref())
            .expect("at least one method");
        let mut line = format!("  H_{i} = {}", render_group(shown));
        match agree {
            Some(true) => line.push_str("  (periodic = bar)"),
            Some(false) => {
                let _ = write!(
                    line,
                    "  MISMATCH: bar gives {}",
                    render_group(bar.as_ref().expect("bar"))
                );
            }
            None => {}
        }
        let _ = writeln!(text, "{line}");
        rows.push(json!({
            "degree": i,
            "periodic": periodic.as_ref().map(group_to_json),
            "bar": bar.as_ref().map(group_to_json),
            "text": render_group(shown),
            "agree": agree,
        }));
    }
    let mut magnus = Vec::new();
    for p in &fx.presentations {
        let seq = magnus_sequence(p);
        let expected = g.order() * p.generator_count() - g.order() + 1;
        let onto = canonical_form(&seq.sigma).is_trivial();
        let ok = onto && seq.relation_module.rank() == expected;
        passed &= ok;
        let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
        let _ = writeln!(
            text,
            "presentation <{} | {}>: rank R_ab = {} (expected {expected}), σ {}",
            p.generators().join(", "),
            rels.join(", "),
            seq.relation_module.rank(),
            if onto { "onto" } else { "NOT onto" }
        );
        magnus.push(json!({
            "presentation": presentation_to_json(p),
            "relation_module_rank": seq.relation_module.rank(),
            "expected_rank": expected,
            "sigma_surjective": onto,
        }));
    }
    let json = json!({
        "command": "grouphom",
        "group": fx.name,
        "order": g.order(),
        "coefficients": coeff_name,
        "homology": rows,
        "presentations": magnus,
    });
    Ok(Report { passed, text, json })
}

fn run_verify(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    let reports: Vec<SuiteReport> = match suite {
        Suite::FourTerm => vec![verify::four_term_suite(cfg)?],
        Suite::KoszulD2 => vec![verify::koszul_d2_suite(cfg, verify::KOSZUL_CASES)?],
        Suite::Functoriality => vec![verify::functoriality_suite(
            cfg,
            verify::FUNCTORIALITY_CASES,
        )?],
        Suite::Independence => vec![verify::independence_suite(cfg, verify::RANDOM_PADDINGS)?],
        Suite::Magnus => vec![verify::magnus_suite()?],
        Suite::All => vec![
            verify::four_term_suite(cfg)?,
            verify::koszul_d2_suite(cfg, verify::KOSZUL_CASES)?,
            verify::functoriality_suite(cfg, verify::FUNCTORIALITY_CASES)?,
            verify::independence_suite(cfg, verify::RANDOM_PADDINGS)?,
            verify::magnus_suite()?,
        ],
    };
    let passed = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        for c in &r.cases {
            let _ = writeln!(
                text,
                "{} {} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                r.suite,
                c.name,
                c.detail
            );
        }
        let _ = writeln!(
            text,
            "== {}: {}/{} passed",
            r.suite,
            r.cases.len() - r.failures(),
            r.cases.len()
        );
    }
    let _ = writeln!(text, "{}", if passed { "PASS" } else { "FAIL" });
    let json = json!({
        "command": "verify",
        "seed": cfg.seed,
        "passed": passed,
        "suites": reports,
    });
    Ok(Report { passed, text, json })
}
