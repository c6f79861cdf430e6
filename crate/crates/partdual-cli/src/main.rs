use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use partdual::coideal::{build_quotient, certify_coideal};
use partdual::document::{expect_field, parse, serialize, Object};
use partdual::examples::{
    bismash_product, group_algebra, matched_pair_hopf, pams_from_split_projection, taft4_hopf, taft4_pams, FiniteGroup,
    MatchedPair,
};
use partdual::hopf::{biopposite, coopposite, dual, opposite, verify_hopf, HopfAlgebra};
use partdual::linalg::{Field, Matrix};
use partdual::pams::{
    certify_pams, find_pams, induced_pams, pams_report, InducedKind, Pams, SearchStrategy, DEFAULT_SEED,
};
use partdual::partial_dual::{build_left, build_right};
use partdual::report::Report;

/// Exact partial duals of finite-dimensional Hopf algebras.
///
/// Documents go to stdout and reports to stderr, except for the `verify` commands,
/// which print their report to stdout. FILE may be `-` (the default) for stdin.
#[derive(Parser)]
#[command(name = "partdual", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Checks the Hopf algebra axioms.
    VerifyHopf { file: Option<String> },
    /// Emits the dual Hopf algebra.
    Dual { file: Option<String> },
    /// Emits the opposite Hopf algebra.
    Op { file: Option<String> },
    /// Emits the co-opposite Hopf algebra.
    Cop { file: Option<String> },
    /// Emits the biopposite Hopf algebra.
    Biop { file: Option<String> },
    /// Certifies a left coideal subalgebra given by an inclusion map.
    Coideal {
        file: Option<String>,
        /// A `linear-map` or `coideal` document holding ι.
        #[arg(long)]
        iota: String,
    },
    /// Systems of partially admissible maps.
    Pams {
        #[command(subcommand)]
        command: PamsCommand,
    },
    /// Builds a partial dual from a system.
    PartialDual { side: Side, file: Option<String> },
    /// Checks the quasi-Hopf axioms of a quasi-Hopf or coquasi-Hopf document.
    VerifyQuasiHopf { file: Option<String> },
    /// Built-in inputs.
    Example {
        #[command(subcommand)]
        command: ExampleCommand,
    },
}

#[derive(Subcommand)]
enum PamsCommand {
    /// Searches for a biunitary cointegral and emits the certified system.
    Find {
        file: Option<String>,
        /// A `coideal` or `linear-map` document for B.
        #[arg(long)]
        coideal: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        bound: u64,
        #[arg(long, default_value_t = 512)]
        max: usize,
    },
    /// Checks every identity of a system.
    Verify { file: Option<String> },
    /// Emits one of the six induced systems.
    Induce {
        file: Option<String>,
        /// given, op, cop, dual-biop, dual-cop, dual-op, or the row number 1 to 6.
        #[arg(long)]
        kind: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// The Taft algebra system with parameter λ.
    Taft4 {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// The Taft algebra alone.
    Taft4Hopf {
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// A group algebra: `s3` or `c<N>`.
    Group {
        name: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// The system `(π_F, ι_G*)` on k(F⋈G), or the pair itself with `--pair`.
    MatchedPair {
        /// `s3`, `c<N>xc<M>`, or a `matched-pair` document.
        source: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        pair: bool,
    },
    /// The bismash product k^G # kF from its closed formulas.
    Bismash {
        /// `s3`, `c<N>xc<M>`, or a `matched-pair` document.
        source: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// The system of a split projection π: H → A with section γ.
    SplitProjection {
        /// The Hopf algebra H.
        file: String,
        /// The Hopf algebra A.
        #[arg(long)]
        target: String,
        /// A `linear-map` document for π.
        #[arg(long)]
        pi: String,
        /// A `linear-map` document for γ.
        #[arg(long)]
        gamma: String,
    },
}

/// Outcome of a command: an optional document, a report, and whether it passed.
struct Outcome {
    document: Option<Object>,
    report: Report,
    report_to_stdout: bool,
}

impl Outcome {
    fn emit(obj: Object) -> Outcome {
        Outcome { document: Some(obj), report: Report::new(), report_to_stdout: false }
    }

    fn with_report(obj: Object, report: Report) -> Outcome {
        Outcome { document: Some(obj), report, report_to_stdout: false }
    }

    fn verify(report: Report) -> Outcome {
        Outcome { document: None, report, report_to_stdout: true }
    }
}

fn read_text(path: Option<&str>) -> Result<String> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {p}")),
    }
}

fn load(path: Option<&str>) -> Result<Object> {
    let name = path.unwrap_or("-");
    parse(&read_text(path)?).with_context(|| format!("parsing {name}"))
}

fn load_hopf(path: Option<&str>) -> Result<HopfAlgebra> {
    match load(path)? {
        Object::Hopf(h) => Ok(h),
        other => bail!("expected a hopf document, found {:?}", other.kind()),
    }
}

fn load_map(path: &str) -> Result<Matrix> {
    match load(Some(path))? {
        Object::LinearMap(m) => Ok(m),
        Object::Coideal { iota, .. } => Ok(iota),
        other => bail!("expected a linear-map document, found {:?}", other.kind()),
    }
}

fn load_pams(path: Option<&str>) -> Result<Pams> {
    match load(path)? {
        Object::Pams { hopf, iota, zeta, gamma } => {
            let b = certify_coideal(&hopf, &iota)?;
            let q = build_quotient(&b)?;
            Ok(certify_pams(&q, &zeta, &gamma)?)
        }
        other => bail!("expected a pams document, found {:?}", other.kind()),
    }
}

fn field(text: &str) -> Result<Field> {
    Field::from_descriptor(text).map_err(|e| anyhow!("{e}"))
}

fn named_group(name: &str) -> Result<FiniteGroup> {
    if name == "s3" {
        return Ok(FiniteGroup::symmetric3());
    }
    match name.strip_prefix('c').map(str::parse::<usize>) {
        Some(Ok(n)) if n > 0 => Ok(FiniteGroup::cyclic(n)),
        _ => bail!("unknown group {name:?}; use s3 or c<N>"),
    }
}

fn matched_pair(source: &str) -> Result<MatchedPair> {
    if source == "s3" {
        return Ok(MatchedPair::s3());
    }
    if let Some((f, g)) = source.split_once('x') {
        if let (Ok(f), Ok(g)) = (named_group(f), named_group(g)) {
            return Ok(MatchedPair::direct_product(f, g));
        }
    }
    match load(Some(source))? {
        Object::MatchedPair(mp) => Ok(mp),
        other => bail!("expected a matched-pair document, found {:?}", other.kind()),
    }
}

fn verified_hopf(path: Option<&str>) -> Result<HopfAlgebra> {
    let h = load_hopf(path)?;
    let r = verify_hopf(&h);
    if let Some(c) = r.first_failure() {
        bail!("input is not a Hopf algebra: {} fails at {}", c.name, c.witness.clone().unwrap_or_default());
    }
    Ok(h)
}

fn run(cli: Cli) -> Result<Outcome> {
    Ok(match cli.command {
        Command::VerifyHopf { file } => Outcome::verify(verify_hopf(&load_hopf(file.as_deref())?)),
        Command::Dual { file } => Outcome::emit(Object::Hopf(dual(&verified_hopf(file.as_deref())?)?)),
        Command::Op { file } => Outcome::emit(Object::Hopf(opposite(&verified_hopf(file.as_deref())?)?)),
        Command::Cop { file } => Outcome::emit(Object::Hopf(coopposite(&verified_hopf(file.as_deref())?)?)),
        Command::Biop { file } => Outcome::emit(Object::Hopf(biopposite(&verified_hopf(file.as_deref())?)?)),
        Command::Coideal { file, iota } => {
            let h = verified_hopf(file.as_deref())?;
            let iota = load_map(&iota)?;
            expect_field(h.field(), iota.field())?;
            let b = certify_coideal(&h, &iota)?;
            let q = build_quotient(&b)?;
            let mut report = q.report().clone();
            report.pass(format!("dim H = dim B · dim C = {} · {}", b.dim(), q.dim()));
            Outcome::with_report(Object::Coideal { hopf: h, iota }, report)
        }
        Command::Pams { command } => match command {
            PamsCommand::Find { file, coideal, seed, bound, max } => {
                let h = verified_hopf(file.as_deref())?;
                let iota = load_map(&coideal)?;
                expect_field(h.field(), iota.field())?;
                let q = build_quotient(&certify_coideal(&h, &iota)?)?;
                let strategy = SearchStrategy::Deterministic { seed, bound, max_attempts: max };
                let p = find_pams(&q, &strategy)?;
                Outcome::with_report(Object::from(&p), p.report().clone())
            }
            PamsCommand::Verify { file } => match load(file.as_deref())? {
                Object::Pams { hopf, iota, zeta, gamma } => {
                    let mut report = verify_hopf(&hopf);
                    match certify_coideal(&hopf, &iota).and_then(|b| build_quotient(&b)) {
                        Err(e) => report.fail("coideal", e.to_string()),
                        Ok(q) => match pams_report(&q, &zeta, &gamma) {
                            Ok(r) => report.extend("", r),
                            Err(e) => report.fail("shapes", e.to_string()),
                        },
                    }
                    Outcome::verify(report)
                }
                other => bail!("expected a pams document, found {:?}", other.kind()),
            },
            PamsCommand::Induce { file, kind } => {
                let kind = InducedKind::parse(&kind).ok_or_else(|| anyhow!("unknown row {kind:?}"))?;
                let p = load_pams(file.as_deref())?;
                let row = induced_pams(&p, kind)?;
                Outcome::with_report(Object::from(&row.pams), row.report.clone())
            }
        },
        Command::PartialDual { side, file } => {
            let p = load_pams(file.as_deref())?;
            let left = build_left(&p)?;
            match side {
                Side::Left => {
                    let report = left.report().clone();
                    Outcome::with_report(Object::QuasiHopf(left), report)
                }
                Side::Right => {
                    let r = build_right(&p, &left)?;
                    let mut report = r.report().clone();
                    report.extend("transposed ", left.report().clone());
                    Outcome::with_report(Object::CoquasiHopf(r), report)
                }
            }
        }
        Command::VerifyQuasiHopf { file } => match load(file.as_deref())? {
            Object::QuasiHopf(q) => Outcome::verify(q.report().clone()),
            Object::CoquasiHopf(r) => Outcome::verify(r.report().clone()),
            other => bail!("expected a quasi-hopf or coquasi-hopf document, found {:?}", other.kind()),
        },
        Command::Example { command } => match command {
            ExampleCommand::Taft4 { lambda, field: f } => {
                let f = field(&f)?;
                let l = f.parse(&lambda).map_err(|e| anyhow!("{e}"))?;
                let p = taft4_pams(f, &l)?;
                Outcome::with_report(Object::from(&p), p.report().clone())
            }
            ExampleCommand::Taft4Hopf { field: f } => Outcome::emit(Object::Hopf(taft4_hopf(field(&f)?)?)),
            ExampleCommand::Group { name, field: f } => {
                Outcome::emit(Object::Hopf(group_algebra(&named_group(&name)?, field(&f)?)))
            }
            ExampleCommand::MatchedPair { source, field: f, pair } => {
                let mp = matched_pair(&source)?;
                if pair {
                    Outcome::emit(Object::MatchedPair(mp))
                } else {
                    let (_, _, p) = matched_pair_hopf(&mp, field(&f)?)?;
                    Outcome::with_report(Object::from(&p), p.report().clone())
                }
            }
            ExampleCommand::Bismash { source, field: f } => {
                let h = bismash_product(&matched_pair(&source)?, field(&f)?)?;
                let report = verify_hopf(&h);
                Outcome::with_report(Object::Hopf(h), report)
            }
            ExampleCommand::SplitProjection { file, target, pi, gamma } => {
                let h = verified_hopf(Some(&file))?;
                let a = verified_hopf(Some(&target))?;
                expect_field(h.field(), a.field())?;
                let p = pams_from_split_projection(&h, &a, &load_map(&pi)?, &load_map(&gamma)?)?;
                Outcome::with_report(Object::from(&p), p.report().clone())
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Ok(out) => {
            let passed = out.report.all_passed();
            if out.report_to_stdout {
                print!("{}", out.report);
            } else if !out.report.checks.is_empty() {
                eprint!("{}", out.report);
            }
            if let Some(obj) = out.document {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(serialize(&obj).as_bytes()).is_err() {
                    return ExitCode::from(2);
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                if let Some(c) = out.report.first_failure() {
                    eprintln!("first failure: {} [{}]", c.name, c.witness.as_deref().unwrap_or(""));
                }
                ExitCode::from(1)
            }
        }
    }
}
