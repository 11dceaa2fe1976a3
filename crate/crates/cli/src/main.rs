//! `logcoh` command-line interface.
//!
//! Exit codes: 0 success, 1 corpus expectation mismatch, 2 input error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use logcoh::corpus::{corpus_run, Corpus};
use logcoh::jetlocal::{self, LctVerdict};
use logcoh::localcoh::CohElem;
use logcoh::logvf;
use logcoh::polyring::{parse_poly, Weights};
use logcoh::report::{self, GeneratorSummary, DEFAULT_TRUNCATION};
use logcoh::{analyze, emit_report, AnalysisJob, AnalysisOptions, Error, Format};

#[derive(Parser)]
#[command(name = "logcoh", version, about = "Exact analysis of isolated hypersurface singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Comma-separated variable names; inferred from the polynomial when omitted
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Largest truncation order searched for colength stabilization
    #[arg(long, env = "LOGCOH_CUTOFF", default_value_t = jetlocal::DEFAULT_CUTOFF)]
    cutoff: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: gates, mu, tau, weights, LCT, Der(-log D), theorem check
    Analyze {
        f: String,
        #[command(flatten)]
        common: Common,
        /// Pole order bound for the injectivity check
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: u32,
    },
    /// Generators of Der(-log D)
    Derlog {
        f: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether d1 kills a class in H
    Kernel {
        f: String,
        #[command(flatten)]
        common: Common,
        /// Term COEFF:a1,..,an of the class, meaning COEFF*[1/(x1^a1..xn^an)];
        /// repeatable, defaults to [1/(x1..xn)]
        #[arg(long = "term")]
        terms: Vec<String>,
    },
    /// Graded LCT criterion for a quasihomogeneous germ
    Lct {
        f: String,
        #[command(flatten)]
        common: Common,
        /// Comma-separated positive weights; found automatically when omitted
        #[arg(long)]
        weights: Option<String>,
    },
    /// Run an annotated corpus and compare against its expectations
    Corpus {
        /// Corpus TOML file; the bundled corpus when omitted
        path: Option<PathBuf>,
        #[arg(long, env = "LOGCOH_CUTOFF", default_value_t = jetlocal::DEFAULT_CUTOFF)]
        cutoff: usize,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: u32,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

enum Failure {
    Mismatch,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Identifiers in order of first appearance.
fn infer_vars(f: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = String::new();
    for c in f.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_alphanumeric() || c == '_' {
            if cur.is_empty() && c.is_ascii_digit() {
                continue;
            }
            cur.push(c);
        } else if !cur.is_empty() {
            if !out.contains(&cur) {
                out.push(cur.clone());
            }
            cur.clear();
        }
    }
    out
}

fn vars_for(common: &Common, f: &str) -> Vec<String> {
    common.vars.clone().unwrap_or_else(|| infer_vars(f))
}

fn write_out(bytes: &[u8]) -> Result<(), Failure> {
    std::io::stdout().write_all(bytes).map_err(|e| Failure::Input(e.to_string()))
}

fn json_out(v: serde_json::Value) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Failure::Input(e.to_string()))?;
    s.push('\n');
    write_out(s.as_bytes())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { f, common, truncation } => {
            let vars = vars_for(&common, &f);
            let options = AnalysisOptions { cutoff: common.cutoff, truncation, tags: vec![] };
            let r = analyze(&AnalysisJob::parse(&f, &vars, options)?)?;
            write_out(&emit_report(&r, common.format.into())?)
        }
        Command::Derlog { f, common } => {
            let vars = vars_for(&common, &f);
            let poly = parse_poly(&f, &vars)?;
            let module = logvf::derlog_generators(&poly);
            if !module.verify() {
                return Err(Failure::Input("generator failed verification".into()));
            }
            match common.format {
                OutFormat::Json => {
                    let gens: Vec<GeneratorSummary> =
                        module.generators.iter().map(|d| GeneratorSummary::new(d, &vars)).collect();
                    json_out(json!({ "f": poly.render(&vars), "vars": vars, "generators": gens }))
                }
                OutFormat::Text => {
                    let mut s = String::new();
                    for d in &module.generators {
                        s.push_str(&format!("{}   multiplier {}\n", d.render(&vars), d.multiplier.render(&vars)));
                    }
                    write_out(s.as_bytes())
                }
            }
        }
        Command::Kernel { f, common, terms } => {
            let vars = vars_for(&common, &f);
            let poly = parse_poly(&f, &vars)?;
            let n = vars.len();
            let g = if terms.is_empty() {
                CohElem::unit(n)
            } else {
                let parsed = terms.iter().map(|t| report::parse_class_term(t, n)).collect::<Result<Vec<_>, _>>()?;
                CohElem::from_terms(n, parsed)?
            };
            let k = report::kernel_report(&poly, &vars, &g, common.cutoff)?;
            match common.format {
                OutFormat::Json => json_out(serde_json::to_value(&k).map_err(|e| Failure::Input(e.to_string()))?),
                OutFormat::Text => write_out(report::render_kernel_report(&k, &poly, &vars)?.as_bytes()),
            }
        }
        Command::Lct { f, common, weights } => {
            let vars = vars_for(&common, &f);
            let poly = parse_poly(&f, &vars)?;
            let w = match weights {
                Some(s) => Weights::parse(&s)?,
                None => logvf::find_weights(&poly)
                    .ok_or_else(|| Failure::Input("no positive weights found; pass --weights".into()))?,
            };
            let verdict = jetlocal::lct_check(&poly, &w)?;
            let total = jetlocal::graded_milnor_total(&poly, &w)?;
            match common.format {
                OutFormat::Json => json_out(json!({
                    "f": poly.render(&vars),
                    "weights": w.to_string(),
                    "lct": verdict,
                    "graded_milnor_total": total,
                })),
                OutFormat::Text => {
                    let v = match verdict {
                        LctVerdict::Holds => "holds".to_string(),
                        LctVerdict::Fails { k } => format!("fails (k = {k})"),
                    };
                    write_out(format!("weights {w}\nlct: {v}\nsum of graded Milnor pieces: {total}\n").as_bytes())
                }
            }
        }
        Command::Corpus { path, cutoff, truncation, format } => {
            let corpus = match path {
                Some(p) => Corpus::load(&p)?,
                None => Corpus::bundled(),
            };
            let options = AnalysisOptions { cutoff, truncation, tags: vec![] };
            options.validate()?;
            let summary = corpus_run(&corpus, &options)?;
            match format {
                OutFormat::Text => write_out(summary.table().as_bytes())?,
                OutFormat::Json => {
                    let rows: Vec<serde_json::Value> = summary
                        .rows
                        .iter()
                        .map(|r| json!({ "name": r.name, "report": r.report, "mismatches": r.mismatches }))
                        .collect();
                    json_out(json!({ "all_passed": summary.all_passed(), "entries": rows }))?
                }
            }
            if summary.all_passed() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_variables_in_order() {
        assert_eq!(infer_vars("y^2 + x1*y - 3/2*z"), vec!["y", "x1", "z"]);
        assert!(infer_vars("2 + 3").is_empty());
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
