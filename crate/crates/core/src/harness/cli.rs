use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::Field;
use crate::graded::{default_cap, minimal_free_resolution};

use super::checks::{run_instance, RunOptions};
use super::instance::{parse_instance, AnyInstance, ComplexDef, ProblemInstance};
use super::syntax::{CheckDecl, CheckKind};

#[derive(Parser, Debug)]
#[command(name = "totalbetti", version, about = "Resolutions, Betti numbers and total-rank checks for graded modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the minimal free resolution of every module in the file.
    Resolve(CommonArgs),
    /// Print the Betti table of every module in the file.
    Betti(CommonArgs),
    /// Run the checks declared in the file (default: beh, binomial, equality).
    Check(CommonArgs),
    /// Run the Frobenius / Dutta check on every module and complex in the file.
    Dutta(CommonArgs),
}

#[derive(clap::Args, Debug, Clone)]
pub struct CommonArgs {
    /// Instance file.
    pub file: PathBuf,
    /// Largest Frobenius iterate.
    #[arg(long)]
    pub emax: Option<u32>,
    /// Maximal number of resolution steps.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cross-check every homology computation against dense linear algebra.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Runs the command line, writing results to `out` and diagnostics to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    let (args, kind) = match &cli.command {
        Command::Resolve(a) => (a, Kind::Resolve),
        Command::Betti(a) => (a, Kind::Betti),
        Command::Check(a) => (a, Kind::Check),
        Command::Dutta(a) => (a, Kind::Dutta),
    };
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", args.file.display());
            return EXIT_INPUT;
        }
    };
    let inst = match parse_instance(&text) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.file.display());
            return EXIT_INPUT;
        }
    };
    let (body, code) = match &inst {
        AnyInstance::Prime(i) => execute(i, kind, args),
        AnyInstance::Rational(i) => execute(i, kind, args),
    };
    let _ = out.write_all(body.as_bytes());
    code
}

#[derive(Clone, Copy)]
enum Kind {
    Resolve,
    Betti,
    Check,
    Dutta,
}

fn execute<F: Field>(inst: &ProblemInstance<F>, kind: Kind, args: &CommonArgs) -> (String, i32) {
    let opts = RunOptions { emax: args.emax, cap: args.cap, oracle: args.oracle };
    match kind {
        Kind::Resolve | Kind::Betti => resolutions(inst, matches!(kind, Kind::Resolve), args),
        Kind::Check | Kind::Dutta => {
            let mut inst = inst.clone();
            if matches!(kind, Kind::Dutta) {
                inst.checks = dutta_targets(&inst);
            }
            let report = run_instance(&inst, &opts);
            let code = if report.any_fails() { EXIT_FAIL } else { EXIT_OK };
            let body = match args.format {
                Format::Text => report.to_text(),
                Format::Machine => report.to_machine(),
            };
            (body, code)
        }
    }
}

fn dutta_targets<F: Field>(inst: &ProblemInstance<F>) -> Vec<CheckDecl> {
    let resolved: Vec<&str> = inst
        .complexes
        .iter()
        .filter_map(|c| match &c.def {
            ComplexDef::Resolve { module } => Some(module.as_str()),
            ComplexDef::Koszul { .. } => None,
        })
        .collect();
    let modules = inst.modules.iter().map(|m| &m.name).filter(|n| !resolved.contains(&n.as_str()));
    let complexes = inst.complexes.iter().map(|c| &c.name);
    modules
        .chain(complexes)
        .map(|name| CheckDecl { kind: CheckKind::Dutta, target: name.clone(), emax: None, cap: None, line: 0 })
        .collect()
}

fn resolutions<F: Field>(inst: &ProblemInstance<F>, full: bool, args: &CommonArgs) -> (String, i32) {
    let cap = args.cap.unwrap_or_else(|| default_cap(&inst.ring));
    let mut code = EXIT_OK;
    let mut text = String::new();
    let mut records = Vec::new();
    for m in &inst.modules {
        match minimal_free_resolution(&m.presentation, cap) {
            Ok(res) => {
                let _ = writeln!(text, "module {} = {}", m.name, m.presentation.render());
                if full {
                    text.push_str(&res.complex.render());
                }
                let _ = write!(text, "{}", res.betti);
                let diffs: Vec<String> =
                    res.complex.differentials().iter().map(|d| d.render(&inst.ring)).collect();
                let twists: Vec<&Vec<i64>> = res.complex.modules().iter().map(|f| &f.twists).collect();
                let mut rec = json!({ "name": m.name, "betti": res.betti, "projective_dimension": res.projective_dimension() });
                if full {
                    rec["twists"] = json!(twists);
                    rec["differentials"] = json!(diffs);
                }
                records.push(rec);
            }
            Err(e) => {
                code = EXIT_FAIL;
                let _ = writeln!(text, "module {}: {e}", m.name);
                records.push(json!({ "name": m.name, "error": e.to_string() }));
            }
        }
    }
    let body = match args.format {
        Format::Text => text,
        Format::Machine => {
            let doc = json!({ "ring": inst.ring_name, "presentation": inst.ring.describe(), "modules": records });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    (body, code)
}
