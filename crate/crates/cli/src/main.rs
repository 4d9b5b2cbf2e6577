mod output;

use std::io::{self, BufRead};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;
use tep_core::completeness::{
    coverage_deg2, coverage_deg3, enumerate_ideal_deg2, enumerate_ideal_deg3, search_triads,
    verify_dickson_equivalence, Equivalence,
};
use tep_core::identities::{self, IdentityReport};
use tep_core::record::{
    bigint_str, CoverageRecord, SolutionRecord, TriadRecord, TriadSearchRecord,
};
use tep_core::*;

use output::{Emitter, Format};

const EXIT_USAGE: u8 = 1;
const EXIT_FAILED: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tep",
    version,
    about = "Ideal solutions of the Tarry-Escott problem"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a parametric family.
    Generate {
        family: Family,
        /// Comma-separated parameters in declaration order.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        params: IntList,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check equal power sums. Without --x/--y, reads JSON records from stdin.
    Verify {
        #[arg(long, requires_all = ["x", "y"])]
        k: Option<u32>,
        /// Exponent set, e.g. 1,2,4 (default 1..=k).
        #[arg(long, value_parser = parse_list_u32, conflicts_with = "k", requires_all = ["x", "y"])]
        exponents: Option<ExponentList>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        x: Option<IntList>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        y: Option<IntList>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Prove the power-sum identities of every family symbolically.
    Identities {
        /// Print every residual and check, not only the verdicts.
        #[arg(long)]
        emit_residuals: bool,
    },
    /// Brute-force search over a window [0, H] (triads: [1, H]).
    Search {
        target: SearchTarget,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fraction of enumerated solutions matched by a parametric family.
    Coverage {
        target: CoverageTarget,
        #[command(flatten)]
        search: SearchArgs,
        /// Identify solutions up to translation as well as scaling (degree 3).
        #[arg(long)]
        modulo_translation: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Map Dickson parameters A,B,C,D,G to the six-parameter degree-2 family.
    DicksonMap {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        params: IntList,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write records to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    height: u32,
    /// Parameter bound for the degree-3 family.
    #[arg(long, default_value_t = 6)]
    param_bound: u32,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Deg2,
    Dickson,
    Triads,
    Deg3,
    Deg124,
    Deg5,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchTarget {
    Deg2,
    Deg3,
    Triads,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoverageTarget {
    Deg2,
    Deg3,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// A comma-separated list of exact integers.
#[derive(Clone, Debug)]
struct IntList(Vec<BigInt>);

#[derive(Clone, Debug)]
struct ExponentList(Vec<u32>);

fn parse_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|t| {
            BigInt::from_str(t.trim()).map_err(|_| format!("`{}` is not an integer", t.trim()))
        })
        .collect::<Result<_, _>>()
        .map(IntList)
}

fn parse_list_u32(s: &str) -> Result<ExponentList, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| format!("`{}` is not an exponent", t.trim()))
        })
        .collect::<Result<_, _>>()
        .map(ExponentList)
}

fn fixed<const N: usize>(params: Vec<BigInt>, names: &str) -> Result<[BigInt; N], Failure> {
    let got = params.len();
    params
        .try_into()
        .map_err(|_| Failure::Usage(format!("expected {N} parameters ({names}), got {got}")))
}

fn exec(jobs: usize) -> Exec {
    Exec::with_jobs(jobs)
}

fn generate(family: Family, params: Vec<BigInt>, out: &mut Emitter) -> Result<(), Failure> {
    const SIX: &str = "p,q,r,a,b,c";
    const FOUR: &str = "p,q,r,s";
    let sol = match family {
        Family::Deg2 => gen_deg2(&Deg2Params::from_array(fixed(params, SIX)?)),
        Family::Dickson => gen_dickson(&DicksonParams::from_array(fixed(params, "A,B,C,D,G")?)),
        Family::Triads => {
            let pair = gen_triads(&QuadParams::from_array(fixed(params, FOUR)?));
            return Ok(out.triads(&TriadRecord::from_pair(&pair))?);
        }
        Family::Deg3 => gen_deg3(&QuadParams::from_array(fixed(params, FOUR)?)),
        Family::Deg124 => gen_eqsums124(&Deg2Params::from_array(fixed(params, SIX)?)),
        Family::Deg5 => gen_deg5(&Deg2Params::from_array(fixed(params, SIX)?)),
    };
    Ok(out.solution(&SolutionRecord::from_solution(&sol))?)
}

/// Checks one stdin record; returns whether it holds.
fn verify_record(line: &str, out: &mut Emitter) -> Result<bool, String> {
    let value: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let kind = value.get("kind").and_then(Value::as_str).map(str::to_owned);
    match kind.as_deref() {
        Some(TriadRecord::KIND) => {
            let rec: TriadRecord = serde_json::from_value(value).map_err(|e| e.to_string())?;
            let pair = rec.to_pair().ok_or("triads need three entries per side")?;
            let checked = TriadRecord::from_pair(&pair);
            out.triads(&checked).map_err(|e| e.to_string())?;
            Ok(checked.valid)
        }
        Some(TriadSearchRecord::KIND) => {
            let rec: TriadSearchRecord =
                serde_json::from_value(value).map_err(|e| e.to_string())?;
            out.triad_search(&rec).map_err(|e| e.to_string())?;
            Ok(rec.holds())
        }
        Some(other) => Err(format!("unknown record kind `{other}`")),
        None => {
            let rec: SolutionRecord = serde_json::from_value(value).map_err(|e| e.to_string())?;
            let checked =
                SolutionRecord::from_solution(&rec.to_solution().map_err(|e| e.to_string())?);
            out.solution(&checked).map_err(|e| e.to_string())?;
            Ok(checked.valid)
        }
    }
}

fn verify_stdin(out: &mut Emitter) -> Result<(), Failure> {
    let mut failed = 0usize;
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match verify_record(&line, out) {
            Ok(true) => {}
            Ok(false) => failed += 1,
            Err(e) => return Err(Failure::Usage(format!("stdin line {}: {e}", i + 1))),
        }
    }
    if failed > 0 {
        return Err(Failure::Failed(format!(
            "{failed} record(s) failed verification"
        )));
    }
    Ok(())
}

fn identities(emit_residuals: bool) -> Result<(), Failure> {
    let reports: Vec<IdentityReport> = identities::prove_all();
    for r in &reports {
        if emit_residuals {
            print!("{r}");
        } else {
            println!("{}: {}", r.name, if r.pass { "PASS" } else { "FAIL" });
        }
    }
    match reports.iter().filter(|r| !r.pass).count() {
        0 => Ok(()),
        n => Err(Failure::Failed(format!("{n} identity report(s) failed"))),
    }
}

fn search(target: SearchTarget, args: &SearchArgs, out: &mut Emitter) -> Result<(), Failure> {
    let exec = exec(args.jobs);
    let solutions = match target {
        SearchTarget::Deg2 => enumerate_ideal_deg2(args.height, exec),
        SearchTarget::Deg3 => enumerate_ideal_deg3(args.height, exec),
        SearchTarget::Triads => {
            for (u, v) in search_triads(args.height, exec) {
                out.triad_search(&TriadSearchRecord::new(u, v))?;
            }
            return Ok(());
        }
    };
    for s in &solutions {
        out.solution(&SolutionRecord::from_solution(s))?;
    }
    Ok(())
}

fn coverage(
    target: CoverageTarget,
    args: &SearchArgs,
    modulo_translation: bool,
    out: &mut Emitter,
) -> Result<(), Failure> {
    let exec = exec(args.jobs);
    let report = match target {
        CoverageTarget::Deg2 => coverage_deg2(args.height, exec),
        CoverageTarget::Deg3 => {
            let eq = if modulo_translation {
                Equivalence::Affine
            } else {
                Equivalence::Scalar
            };
            coverage_deg3(args.height, args.param_bound, eq, exec)
        }
    };
    out.coverage(&CoverageRecord::from_report(&report))?;
    match target {
        CoverageTarget::Deg2 if !report.is_complete() => Err(Failure::Failed(format!(
            "{} degree-2 solution(s) not generated by the family",
            report.found - report.covered
        ))),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct DicksonMapRecord {
    #[serde(with = "bigint_str::vec")]
    dickson_params: Vec<BigInt>,
    #[serde(with = "bigint_str::vec")]
    theorem1_params: Vec<BigInt>,
    #[serde(with = "bigint_str")]
    factor: BigInt,
    dickson: SolutionRecord,
    theorem1: SolutionRecord,
    equivalent: bool,
}

fn dickson_map(params: Vec<BigInt>, format: Format, out: &mut Emitter) -> Result<(), Failure> {
    let params = DicksonParams::from_array(fixed(params, "A,B,C,D,G")?);
    let mapped = dickson_to_theorem1(&params);
    let rec = DicksonMapRecord {
        dickson_params: params.to_array().to_vec(),
        theorem1_params: mapped.to_array().to_vec(),
        factor: &params.D + &params.G,
        dickson: SolutionRecord::from_solution(&gen_dickson(&params)),
        theorem1: SolutionRecord::from_solution(&gen_deg2(&mapped)),
        equivalent: verify_dickson_equivalence(&params),
    };
    let list = |v: &[BigInt]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    match format {
        Format::Json => out.line(&serde_json::to_string(&rec).map_err(io::Error::other)?)?,
        Format::Csv => {
            out.line("A;B;C;D;G,p;q;r;a;b;c,factor,equivalent")?;
            out.line(&format!(
                "{},{},{},{}",
                list(&rec.dickson_params).replace(',', ";"),
                list(&rec.theorem1_params).replace(',', ";"),
                rec.factor,
                rec.equivalent
            ))?;
        }
        Format::Pretty => {
            out.line(&format!("(p,q,r,a,b,c) = ({})", list(&rec.theorem1_params)))?;
            out.solution(&rec.dickson)?;
            out.solution(&rec.theorem1)?;
            out.line(&format!(
                "factor D+G = {}, equivalent: {}",
                rec.factor, rec.equivalent
            ))?;
        }
    }
    if !rec.equivalent {
        return Err(Failure::Failed("Dickson equivalence does not hold".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            family,
            params,
            out,
        } => {
            let mut e = Emitter::new(out.format, out.out.as_deref())?;
            generate(family, params.0, &mut e)?;
            Ok(e.flush()?)
        }
        Command::Verify {
            k,
            exponents,
            x,
            y,
            out,
        } => {
            let mut e = Emitter::new(out.format, out.out.as_deref())?;
            let result = match (x, y) {
                (Some(IntList(x)), Some(IntList(y))) => {
                    let sol = match exponents {
                        Some(ExponentList(ex)) => TepSolution::with_exponents(ex, x, y)?,
                        None => {
                            TepSolution::new(k.unwrap_or(x.len().saturating_sub(1) as u32), x, y)?
                        }
                    };
                    let rec = SolutionRecord::from_solution(&sol);
                    e.solution(&rec)?;
                    if rec.valid {
                        Ok(())
                    } else {
                        Err(Failure::Failed(format!(
                            "power sums differ at j={}",
                            sol.verify().first_failure().unwrap_or_default()
                        )))
                    }
                }
                (None, None) => verify_stdin(&mut e),
                _ => Err(Failure::Usage("--x and --y must be given together".into())),
            };
            e.flush()?;
            result
        }
        Command::Identities { emit_residuals } => identities(emit_residuals),
        Command::Search {
            target,
            search: args,
            out,
        } => {
            let mut e = Emitter::new(out.format, out.out.as_deref())?;
            search(target, &args, &mut e)?;
            Ok(e.flush()?)
        }
        Command::Coverage {
            target,
            search: args,
            modulo_translation,
            out,
        } => {
            let mut e = Emitter::new(out.format, out.out.as_deref())?;
            let result = coverage(target, &args, modulo_translation, &mut e);
            e.flush()?;
            result
        }
        Command::DicksonMap { params, out } => {
            let mut e = Emitter::new(out.format, out.out.as_deref())?;
            let result = dickson_map(params.0, out.format, &mut e);
            e.flush()?;
            result
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}
