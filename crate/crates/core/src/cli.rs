//! Command-line front end.
//!
//! Exit codes: 0 for success, equality or a verified basis; 1 for
//! distinctness or a failed verification; 2 for an unknown answer or a
//! truncated completion; 64 for usage errors and 65 for bad input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::completion::{CompletionLimits, CompletionReport, Decision, System};
use crate::error::Error;
use crate::frontend::{
    parse_presentation, render_basis, render_monomial, render_polynomial, render_trace,
    report_json, Presentation,
};
use crate::oracle::{self, Bounds, ClosureOutcome, DegreeMeasure, Rules};
use crate::presets;
use crate::terms::Polynomial;
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INPUT: i32 = 65;

#[derive(Debug, Parser)]
#[command(
    name = "gsrig",
    version,
    about = "Groebner-Shirshov bases and normal forms for free semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct LimitArgs {
    /// Largest component degree of an ambiguity that completion resolves.
    #[arg(long = "max-deg", default_value_t = CompletionLimits::default().max_ambiguity_degree)]
    max_deg: usize,
    /// Maximum number of compositions processed.
    #[arg(long = "max-steps", default_value_t = CompletionLimits::default().max_steps)]
    max_steps: usize,
    /// Seed for tie-breaking between ambiguities of equal rank.
    #[arg(long)]
    seed: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> CompletionLimits {
        CompletionLimits {
            max_ambiguity_degree: self.max_deg,
            max_steps: self.max_steps,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run completion and print the reduced basis.
    Complete {
        file: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check whether the relations of FILE already form a basis.
    Verify {
        file: PathBuf,
        #[arg(long = "list-ambiguities")]
        list_ambiguities: bool,
    },
    /// Normal form of an expression.
    Nf {
        file: PathBuf,
        expr: String,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Decide whether two expressions are equal in the presented semiring.
    Eq {
        file: PathBuf,
        lhs: String,
        rhs: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// List irreducible monomials within bounds.
    Irr {
        file: PathBuf,
        /// Maximum total degree of listed monomials.
        #[arg(long = "max-deg")]
        max_deg: usize,
        /// Maximum number of components.
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// Minimalize and autoreduce the relations of FILE without completing.
    ReduceBasis { file: PathBuf },
    /// Search the congruence class by brute force.
    OracleEq {
        file: PathBuf,
        lhs: String,
        rhs: String,
        #[arg(long = "max-deg", default_value_t = Bounds::default().max_degree)]
        max_deg: usize,
        #[arg(long = "max-len", default_value_t = Bounds::default().max_len)]
        max_len: usize,
        #[arg(long = "max-expansions", default_value_t = Bounds::default().max_expansions)]
        max_expansions: usize,
        /// Bound the largest component degree instead of the total degree.
        #[arg(long = "component-degree")]
        component_degree: bool,
    },
    /// Print a built-in presentation file.
    Preset {
        name: String,
        /// Print the claimed basis instead of the defining relations.
        #[arg(long)]
        basis: bool,
    },
    /// Run a built-in scenario and report each check.
    Demo { name: String },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parse `args` (program name first) and run the command.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(EXIT_OK, text)
            };
        }
    };
    match run(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::fail(EXIT_INPUT, format!("error: {e}\n")),
    }
}

fn load(path: &PathBuf) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn complete(
    p: &Presentation,
    limits: &CompletionLimits,
) -> crate::Result<CompletionReport<Rational>> {
    p.system::<Rational>()?.complete(limits)
}

fn status_code(report: &CompletionReport<Rational>) -> i32 {
    if report.is_complete() {
        EXIT_OK
    } else {
        EXIT_UNKNOWN
    }
}

fn render_nf(p: &Polynomial<Rational>, sys: &System<Rational>) -> String {
    let monomial = p
        .terms()
        .next()
        .filter(|(_, c)| p.len() == 1 && **c == Rational::from_integer(1.into()));
    match monomial {
        Some((m, _)) => render_monomial(m, sys.alphabet(), sys.order()),
        None => render_polynomial(p, sys.alphabet(), sys.order()),
    }
}

fn run(cmd: Command) -> Result<Outcome, String> {
    let e = |err: Error| err.to_string();
    let mut out = String::new();
    let code = match cmd {
        Command::Complete { file, limits, json } => {
            let p = load(&file)?;
            let report = complete(&p, &limits.limits()).map_err(e)?;
            if json {
                let v = report_json(&report);
                writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
            } else {
                writeln!(out, "status: {}", report.status).unwrap();
                out.push_str(&render_basis(&report.basis));
                let s = &report.stats;
                writeln!(
                    out,
                    "stats: {} pairs examined, {} compositions processed, {} relations added, max ambiguity degree {}",
                    s.pairs_examined, s.compositions_processed, s.relations_added, s.max_ambiguity_degree
                )
                .unwrap();
            }
            status_code(&report)
        }
        Command::Verify {
            file,
            list_ambiguities,
        } => {
            let sys = load(&file)?.system::<Rational>().map_err(e)?;
            let v = sys.verify().map_err(e)?;
            let (a, o) = (sys.alphabet(), sys.order());
            if list_ambiguities {
                for r in &v.records {
                    writeln!(
                        out,
                        "(#{}, #{}) {} w = {} spoly = {}",
                        r.f_id + 1,
                        r.g_id + 1,
                        r.kind,
                        render_monomial(&r.ambiguity, a, o),
                        render_polynomial(&r.spoly, a, o)
                    )
                    .unwrap();
                }
            }
            if v.ok {
                writeln!(
                    out,
                    "verified: all {} compositions are trivial",
                    v.records.len()
                )
                .unwrap();
                EXIT_OK
            } else {
                writeln!(
                    out,
                    "not a basis: {} of {} compositions are non-trivial",
                    v.witnesses.len(),
                    v.records.len()
                )
                .unwrap();
                for (r, nf) in &v.witnesses {
                    writeln!(
                        out,
                        "(#{}, #{}) {} w = {} nf = {}",
                        r.f_id + 1,
                        r.g_id + 1,
                        r.kind,
                        render_monomial(&r.ambiguity, a, o),
                        render_polynomial(nf, a, o)
                    )
                    .unwrap();
                }
                EXIT_NO
            }
        }
        Command::Nf {
            file,
            expr,
            trace,
            limits,
        } => {
            let p = load(&file)?;
            let m = p.parse_expr(&expr).map_err(e)?;
            let report = complete(&p, &limits.limits()).map_err(e)?;
            let sys = &report.basis;
            let (nf, tr) = sys.normal_form(&Polynomial::monomial(m)).map_err(e)?;
            if trace {
                writeln!(out, "basis ({}):", report.status).unwrap();
                out.push_str(&render_basis(sys));
                writeln!(out, "trace:").unwrap();
                out.push_str(&render_trace(&tr, sys.alphabet(), sys.order()));
            }
            writeln!(out, "nf = {}", render_nf(&nf, sys)).unwrap();
            status_code(&report)
        }
        Command::Eq {
            file,
            lhs,
            rhs,
            limits,
        } => {
            let p = load(&file)?;
            let (u, v) = (
                p.parse_expr(&lhs).map_err(e)?,
                p.parse_expr(&rhs).map_err(e)?,
            );
            let report = complete(&p, &limits.limits()).map_err(e)?;
            let sys = &report.basis;
            let nu = sys.reduce_monomial(&u).map_err(e)?;
            let nv = sys.reduce_monomial(&v).map_err(e)?;
            match report.decide_eq(&u, &v).map_err(e)? {
                Decision::Equal => {
                    writeln!(out, "EQUAL, nf = {}", render_nf(&nu, sys)).unwrap();
                    EXIT_OK
                }
                d => {
                    writeln!(
                        out,
                        "{d}, nf = {} vs {}",
                        render_nf(&nu, sys),
                        render_nf(&nv, sys)
                    )
                    .unwrap();
                    if d == Decision::Distinct {
                        EXIT_NO
                    } else {
                        EXIT_UNKNOWN
                    }
                }
            }
        }
        Command::Irr {
            file,
            max_deg,
            max_len,
        } => {
            let p = load(&file)?;
            let report = complete(&p, &CompletionLimits::default()).map_err(e)?;
            let sys = &report.basis;
            for m in sys.enum_irr(max_deg, max_len) {
                writeln!(out, "{}", render_monomial(&m, sys.alphabet(), sys.order())).unwrap();
            }
            status_code(&report)
        }
        Command::ReduceBasis { file } => {
            let sys = load(&file)?.system::<Rational>().map_err(e)?;
            let reduced = sys.reduced().map_err(e)?;
            out.push_str(&Presentation::from_system(&reduced).map_err(e)?.render());
            EXIT_OK
        }
        Command::OracleEq {
            file,
            lhs,
            rhs,
            max_deg,
            max_len,
            max_expansions,
            component_degree,
        } => {
            let p = load(&file)?;
            let (u, v) = (
                p.parse_expr(&lhs).map_err(e)?,
                p.parse_expr(&rhs).map_err(e)?,
            );
            let rules = Rules::new(p.mode, p.alphabet.symbols().collect(), p.relations.clone());
            let bounds = Bounds {
                max_degree: max_deg,
                max_len,
                max_expansions,
                measure: if component_degree {
                    DegreeMeasure::Component
                } else {
                    DegreeMeasure::Total
                },
            };
            match oracle::closure_eq(&u, &v, &rules, &bounds) {
                ClosureOutcome::Congruent(path) => {
                    writeln!(out, "CONGRUENT in {} steps", path.len()).unwrap();
                    let visited = path.replay(&rules).expect("search paths replay");
                    for (i, m) in visited.iter().enumerate() {
                        let note = match i.checked_sub(1).map(|k| &path.steps[k]) {
                            Some(st) => format!(
                                "  by rel #{} {}",
                                st.relation + 1,
                                if st.forward { "->" } else { "<-" }
                            ),
                            None => String::new(),
                        };
                        writeln!(out, "{}{note}", p.render_monomial(m)).unwrap();
                    }
                    EXIT_OK
                }
                ClosureOutcome::NotFoundWithinBounds => {
                    writeln!(out, "NOT FOUND within bounds").unwrap();
                    EXIT_UNKNOWN
                }
            }
        }
        Command::Preset { name, basis } => {
            let preset = presets::preset(&name).map_err(e)?;
            let p = if basis {
                preset
                    .basis
                    .ok_or_else(|| format!("preset `{name}` has no finite basis"))?
            } else {
                preset.presentation
            };
            out.push_str(&p.render());
            EXIT_OK
        }
        Command::Demo { name } => {
            let checks = presets::demo(&name).map_err(e)?;
            let mut all = true;
            for c in &checks {
                all &= c.passed;
                writeln!(
                    out,
                    "[{}] {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.label
                )
                .unwrap();
            }
            writeln!(
                out,
                "{}",
                if all {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            )
            .unwrap();
            if all {
                EXIT_OK
            } else {
                EXIT_NO
            }
        }
    };
    Ok(Outcome::ok(code, out))
}
