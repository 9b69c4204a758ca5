//! Command-line frontend for `unigrob`: problem files in, verdicts and
//! canonical text (or JSON-lines records) out.
//!
//! Exit codes: 0 for a "yes" verdict, 1 for a "no" verdict, 2 for usage,
//! input and precondition errors.

pub mod problem;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use unigrob::{
    build_truncation, check_groebner, complete, decompose_with, divide, enumerate_basis, is_member,
    s_polynomials, verify_pbw, Alphabet, DivisionStep, Error, GenSet, Membership, Poly, Strategy,
    Verdict, DEFAULT_STEP_BUDGET,
};

pub use problem::Problem;

#[derive(Debug, Parser)]
#[command(
    name = "unigrob",
    version,
    about = "Unital Gröbner bases over Z, Q and Z/n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether every leading coefficient is a unit.
    CheckUnital(Common),
    /// List the S-polynomials of every overlap ambiguity.
    Spolys(Common),
    /// Run the Buchberger criterion.
    CheckGb(Common),
    /// Adjoin reduced S-polynomials until the criterion holds.
    Complete {
        #[command(flatten)]
        common: Common,
        /// Largest ambiguity length considered.
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
        #[arg(long, default_value_t = 10)]
        rounds: usize,
    },
    /// Divide a polynomial and print the trace.
    NormalForm(WithPoly),
    /// Enumerate normal words by degree.
    QuotientBasis {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        strict: StrictFlag,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
    },
    /// Split a polynomial into its ideal part and normal part.
    Decompose(WithPoly),
    /// Check the PBW system of the file's `lie` block.
    Pbw {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
    },
    /// Decide membership within the span of products up to a degree bound.
    Member {
        #[command(flatten)]
        common: Common,
        /// Polynomial in the problem's alphabet.
        poly: String,
        /// Defaults to the larger of the polynomial and generator degrees.
        #[arg(long)]
        max_deg: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Problem file.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct StrictFlag {
    /// Require a verified Gröbner basis (default).
    #[arg(long, overrides_with = "no_strict")]
    strict: bool,
    #[arg(long = "no-strict")]
    no_strict: bool,
}

impl StrictFlag {
    fn on(&self) -> bool {
        !self.no_strict
    }
}

#[derive(Debug, Args)]
struct WithPoly {
    #[command(flatten)]
    common: Common,
    /// Polynomial in the problem's alphabet.
    poly: String,
    /// `first` or `seeded:<n>`.
    #[arg(long, default_value = "first", value_parser = parse_strategy)]
    strategy: Strategy,
    #[command(flatten)]
    strict: StrictFlag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    if s == "first" {
        return Ok(Strategy::FirstMatch);
    }
    s.strip_prefix("seeded:")
        .and_then(|n| n.parse().ok())
        .map(Strategy::Seeded)
        .ok_or_else(|| format!("expected `first` or `seeded:<n>`, got `{s}`"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// A mathematical "no" reported by the engine.
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotUnital { .. }
            | Error::NotAGroebnerBasis { .. }
            | Error::InvalidLie(_)
            | Error::NonUnitalRemainder(_)
            | Error::RoundsExceeded(_)
            | Error::BudgetExceeded(_) => Failure::Negative(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Output::default();
    match execute(cli.command, &mut out) {
        Ok(yes) => Outcome {
            code: if yes { 0 } else { 1 },
            stdout: out.finish(),
            stderr: String::new(),
        },
        Err(Failure::Negative(msg)) => Outcome {
            code: 1,
            stdout: out.finish(),
            stderr: format!("no: {msg}\n"),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

#[derive(Default)]
struct Output {
    format: Option<Format>,
    text: String,
    records: Vec<Value>,
}

impl Output {
    fn text(&mut self, s: &str) {
        self.text.push_str(s);
    }

    fn record(&mut self, v: Value) {
        self.records.push(v);
    }

    fn finish(self) -> String {
        match self.format {
            Some(Format::Records) => self.records.iter().map(|r| format!("{r}\n")).collect(),
            _ => self.text,
        }
    }
}

fn load(common: &Common, out: &mut Output) -> Result<Problem, Failure> {
    out.format = Some(common.format);
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| Failure::Usage(format!("{}: {e}", common.file.display())))?;
    Problem::parse(&text)
        .map_err(|e| Failure::Usage(format!("{}:{}", common.file.display(), located(e))))
}

fn located(e: Error) -> String {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => format!("{line}:{column}: {message}"),
        other => format!(" {other}"),
    }
}

fn parse_arg(problem: &Problem, text: &str) -> Result<Poly, Failure> {
    problem
        .parse_poly(text)
        .map_err(|e| Failure::Usage(format!("polynomial argument:{}", located(e))))
}

fn steps_json(steps: &[DivisionStep], a: &Alphabet) -> Value {
    steps
        .iter()
        .map(|s| {
            json!({
                "lambda": s.lambda.to_string(),
                "u": a.format_word(&s.u),
                "gen": s.gen_index,
                "v": a.format_word(&s.v),
            })
        })
        .collect()
}

fn require_groebner(gens: &GenSet) -> Result<(), Failure> {
    let report = check_groebner(gens)?;
    if report.verdict == Verdict::IsGroebner {
        Ok(())
    } else {
        Err(Error::NotAGroebnerBasis {
            failures: report.witnesses.len(),
        }
        .into())
    }
}

fn execute(command: Command, out: &mut Output) -> Result<bool, Failure> {
    match command {
        Command::CheckUnital(common) => {
            let p = load(&common, out)?;
            let gens = p.gen_set()?;
            let a = &p.alphabet;
            let mut unital = true;
            for (i, g) in gens.gens().iter().enumerate() {
                let lc = g.lc().expect("generators are nonzero");
                unital &= lc.is_unit();
                let status = if lc.is_unit() { "unit" } else { "not a unit" };
                out.text(&format!(
                    "g{i}: {} ; leading coefficient {lc} ({status})\n",
                    g.format(a)
                ));
                out.record(json!({
                    "kind": "generator",
                    "index": i,
                    "poly": g.format(a),
                    "leading_coefficient": lc.to_string(),
                    "unit": lc.is_unit(),
                }));
            }
            out.text(&format!("unital: {}\n", if unital { "yes" } else { "no" }));
            out.record(json!({ "kind": "verdict", "unital": unital }));
            Ok(unital)
        }
        Command::Spolys(common) => {
            let p = load(&common, out)?;
            let gens = p.gen_set()?;
            let a = &p.alphabet;
            let spolys = s_polynomials(&gens)?;
            out.text(&format!("s-polynomials: {}\n", spolys.len()));
            for sp in &spolys {
                let w = a.format_word(&sp.overlap.ambiguity);
                out.text(&format!(
                    "({}, {}) at {w}: {}\n",
                    sp.i,
                    sp.j,
                    sp.value.format(a)
                ));
                out.record(json!({
                    "kind": "s-polynomial",
                    "i": sp.i,
                    "j": sp.j,
                    "ambiguity": w,
                    "value": sp.value.format(a),
                }));
            }
            Ok(true)
        }
        Command::CheckGb(common) => {
            let p = load(&common, out)?;
            let gens = p.gen_set()?;
            let a = &p.alphabet;
            let report = check_groebner(&gens)?;
            out.text(&report.format(a));
            out.record(json!({
                "kind": "verdict",
                "verdict": format!("{:?}", report.verdict),
                "pairs_checked": report.pairs_checked,
            }));
            for (sp, trace) in &report.witnesses {
                out.record(json!({
                    "kind": "witness",
                    "i": sp.i,
                    "j": sp.j,
                    "ambiguity": a.format_word(&sp.overlap.ambiguity),
                    "s_polynomial": sp.value.format(a),
                    "steps": steps_json(&trace.steps, a),
                    "remainder": trace.remainder.format(a),
                }));
            }
            Ok(report.verdict == Verdict::IsGroebner)
        }
        Command::Complete {
            common,
            max_deg,
            rounds,
        } => {
            let p = load(&common, out)?;
            let gens = p.gen_set()?;
            let done = complete(&gens, max_deg, rounds)?;
            let added = done.len() - gens.len();
            let completed = Problem {
                gens: done.gens().to_vec(),
                lie: None,
                ..p
            };
            out.text(&format!("# adjoined: {added}\n"));
            out.text(&completed.print());
            let a = &completed.alphabet;
            out.record(json!({ "kind": "completion", "added": added }));
            for (i, g) in done.gens().iter().enumerate() {
                out.record(json!({ "kind": "generator", "index": i, "poly": g.format(a) }));
            }
            Ok(true)
        }
        Command::NormalForm(args) => {
            let p = load(&args.common, out)?;
            let gens = p.gen_set()?;
            let f = parse_arg(&p, &args.poly)?;
            if args.strict.on() {
                require_groebner(&gens)?;
            }
            let trace = divide(&f, &gens, args.strategy, DEFAULT_STEP_BUDGET)?;
            let a = &p.alphabet;
            out.text(&trace.format(a));
            out.record(json!({
                "kind": "division",
                "input": f.format(a),
                "steps": steps_json(&trace.steps, a),
                "remainder": trace.remainder.format(a),
            }));
            Ok(true)
        }
        Command::QuotientBasis {
            common,
            strict,
            max_deg,
        } => {
            let p = load(&common, out)?;
            let gens = p.gen_set()?;
            let basis = enumerate_basis(&gens, max_deg, strict.on())?;
            let a = &p.alphabet;
            out.text(&basis.format(a));
            for (d, words) in basis.by_degree.iter().enumerate() {
                let words: Vec<String> = words.iter().map(|w| a.format_word(w)).collect();
                out.record(
                    json!({ "kind": "degree", "degree": d, "count": words.len(), "words": words }),
                );
            }
            out.record(
                json!({ "kind": "total", "total": basis.total(), "verified": basis.verified }),
            );
            Ok(true)
        }
        Command::Decompose(args) => {
            let p = load(&args.common, out)?;
            let gens = p.gen_set()?;
            let f = parse_arg(&p, &args.poly)?;
            if args.strict.on() {
                require_groebner(&gens)?;
            }
            let (ideal, normal) = decompose_with(&f, &gens, args.strategy)?;
            let a = &p.alphabet;
            out.text(&format!(
                "ideal part: {}\nnormal part: {}\n",
                ideal.format(a),
                normal.format(a)
            ));
            out.record(json!({
                "kind": "decomposition",
                "input": f.format(a),
                "ideal_part": ideal.format(a),
                "normal_part": normal.format(a),
            }));
            Ok(true)
        }
        Command::Pbw { common, max_deg } => {
            let p = load(&common, out)?;
            let Some(lie) = &p.lie else {
                return Err(Failure::Usage(format!(
                    "{}: no `lie` block",
                    common.file.display()
                )));
            };
            let report = verify_pbw(lie, max_deg)?;
            let a = &p.alphabet;
            let list = |v: &[usize]| {
                v.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut text = String::new();
            if report.lie.is_ok() {
                text.push_str("jacobi: ok\n");
            } else {
                let _ = writeln!(
                    text,
                    "jacobi: {} violations",
                    report.lie.jacobi_violations.len() + report.lie.antisymmetry_violations.len()
                );
                for v in &report.lie.jacobi_violations {
                    let _ = writeln!(
                        text,
                        "  ({}, {}, {})",
                        a.name(v.i as u32),
                        a.name(v.j as u32),
                        a.name(v.k as u32)
                    );
                }
            }
            let _ = writeln!(text, "verdict: {:?}", report.groebner.verdict);
            let _ = writeln!(text, "counts: {}", list(&report.basis.counts()));
            let _ = writeln!(text, "expected: {}", list(&report.expected_counts));
            let _ = writeln!(
                text,
                "non-decreasing: {}",
                if report.all_non_decreasing {
                    "yes"
                } else {
                    "no"
                }
            );
            let _ = writeln!(
                text,
                "pbw: {}",
                if report.passed() {
                    "verified"
                } else {
                    "failed"
                }
            );
            out.text(&text);
            out.record(json!({
                "kind": "pbw",
                "jacobi_ok": report.lie.is_ok(),
                "verdict": format!("{:?}", report.groebner.verdict),
                "counts": report.basis.counts(),
                "expected": report.expected_counts,
                "non_decreasing": report.all_non_decreasing,
                "passed": report.passed(),
            }));
            Ok(report.passed())
        }
        Command::Member {
            common,
            poly,
            max_deg,
        } => {
            let p = load(&common, out)?;
            let gens = p.gen_set()?;
            let f = parse_arg(&p, &poly)?;
            let bound = max_deg.unwrap_or_else(|| {
                let gen_deg = gens
                    .gens()
                    .iter()
                    .filter_map(Poly::degree)
                    .max()
                    .unwrap_or(0);
                f.degree().unwrap_or(0).max(gen_deg)
            });
            let module = build_truncation(&gens, bound)?;
            let verdict = is_member(&f, &module)?;
            let a = &p.alphabet;
            out.text(&verdict.format(a, bound));
            out.record(match &verdict {
                Membership::Member(steps) => {
                    json!({ "kind": "membership", "member": true, "bound": bound, "steps": steps_json(steps, a) })
                }
                Membership::NotMemberAtBound => json!({ "kind": "membership", "member": false, "bound": bound }),
            });
            Ok(verdict.is_member())
        }
    }
}
