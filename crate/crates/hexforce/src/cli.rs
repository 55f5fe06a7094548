//! Command-line front end.
//!
//! `describe`, `enumerate`, `poly`, `spectrum` and `minforce` act on one
//! system, given as JSON inline or as a path to a JSON file; `verify`
//! sweeps every system within given bounds and cross-checks the
//! recurrence engine against brute-force search. Exit codes: 0 success,
//! 2 invalid input, 3 enumeration budget exceeded, 4 engine mismatch,
//! 64 usage error. The env var `FORCING_BUDGET` caps how many matchings
//! any brute-force step may enumerate.

use std::fs;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::graph::HexGraph;
use crate::matching::{
    count_matchings, enumerate_sequences, sequence_to_matching, MatchingSequence,
};
use crate::oracle;
use crate::recurrence;
use crate::spec::AnySpec;
use crate::sweep::{all_monotonic_specs, all_turning_specs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "hexforce",
    version,
    about = "Forcing polynomials, spectra and minimum forcing sets \
             of constructable hexagonal systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A spec argument is either inline JSON (starts with `{`) or a path to a
/// JSON file. Monotonic systems are `{"rows":[{"k":3,"h":1},..]}`, systems
/// with one turning `{"upper":{..},"lower":{..}}`.
#[derive(Subcommand)]
enum Command {
    /// Validate a spec and print its basic counts.
    Describe {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every perfect matching as its column sequence.
    Enumerate {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the forcing polynomial.
    Poly {
        spec: String,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Print the forcing spectrum, the exponent support of the polynomial.
    Spectrum {
        spec: String,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute a minimum forcing set of one matching, given as its column
    /// sequence, e.g. "0,3,3,4,4" or "(0,1,1,5|0,0,3)".
    Minforce {
        spec: String,
        #[arg(long)]
        matching: String,
    },
    /// Cross-check the recurrence engine against brute force over every
    /// system within the bounds, printing one line per system.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_rows: usize,
        #[arg(long, default_value_t = 3)]
        max_k: i64,
        /// Sweep systems with one turning instead of monotonic ones.
        #[arg(long)]
        turning: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recurrence,
    Bruteforce,
    Both,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

/// Parse the process arguments and run; returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("hexforce: {}", f.message);
            f.code
        }
    }
}

fn load_spec(arg: &str) -> Result<AnySpec, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)
            .map_err(|e| fail(EXIT_INVALID, format!("cannot read {arg}: {e}")))?
    };
    Ok(AnySpec::from_json(&text)?)
}

fn budget() -> Result<u128, Failure> {
    match std::env::var("FORCING_BUDGET") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            fail(EXIT_INVALID, format!("FORCING_BUDGET is not a count: {raw:?}"))
        }),
        Err(_) => Ok(crate::DEFAULT_MATCHING_BUDGET),
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Describe { spec, format } => describe(&load_spec(&spec)?, format),
        Command::Enumerate { spec, format } => enumerate(&load_spec(&spec)?, format),
        Command::Poly { spec, method, format } => poly(&load_spec(&spec)?, method, format),
        Command::Spectrum { spec, method, format } => {
            spectrum(&load_spec(&spec)?, method, format)
        }
        Command::Minforce { spec, matching } => minforce(&load_spec(&spec)?, &matching),
        Command::Verify { max_rows, max_k, turning } => verify(max_rows, max_k, turning),
    }
}

fn describe(spec: &AnySpec, format: Format) -> Result<(), Failure> {
    let graph = HexGraph::build(spec);
    let matchings = count_matchings(spec);
    match format {
        Format::Text => {
            println!("spec: {spec}");
            match spec {
                AnySpec::Monotonic(s) => println!("rows: {}", s.row_count()),
                AnySpec::Turning(s) => println!(
                    "rows: {} upper, {} lower",
                    s.upper().row_count(),
                    s.lower().row_count()
                ),
            }
            println!("hexagons: {}", spec.hexagon_count());
            println!("vertices: {}", graph.vertex_count());
            println!("edges: {}", graph.edge_count());
            println!("matchings: {matchings}");
        }
        Format::Json => {
            let spec_value: serde_json::Value =
                serde_json::from_str(&spec.to_json()).expect("spec serializes");
            let value = serde_json::json!({
                "spec": spec_value,
                "display": spec.to_string(),
                "hexagons": spec.hexagon_count(),
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "matchings": matchings.to_string(),
            });
            println!("{value}");
        }
    }
    Ok(())
}

fn enumerate(spec: &AnySpec, format: Format) -> Result<(), Failure> {
    let sequences = enumerate_sequences(spec, budget()?)?;
    match format {
        Format::Text => {
            for seq in sequences {
                println!("{seq}");
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = sequences
                .iter()
                .map(|seq| match &seq.lower {
                    None => serde_json::json!(seq.upper),
                    Some(lower) => serde_json::json!({"upper": seq.upper, "lower": lower}),
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
    Ok(())
}

fn compute_polynomial(spec: &AnySpec, method: Method) -> Result<crate::Polynomial, Failure> {
    let by_recurrence = || recurrence::forcing_polynomial(spec);
    let by_force = || -> Result<crate::Polynomial, Failure> {
        let graph = HexGraph::build(spec);
        Ok(oracle::forcing_polynomial(&graph, budget()?)?)
    };
    match method {
        Method::Recurrence => Ok(by_recurrence()),
        Method::Bruteforce => by_force(),
        Method::Both => {
            let fast = by_recurrence();
            let slow = by_force()?;
            if fast != slow {
                return Err(fail(
                    EXIT_MISMATCH,
                    format!("engines disagree on {spec}: recurrence {fast}, brute force {slow}"),
                ));
            }
            Ok(fast)
        }
    }
}

fn poly(spec: &AnySpec, method: Method, format: PolyFormat) -> Result<(), Failure> {
    let poly = compute_polynomial(spec, method)?;
    match format {
        PolyFormat::Text => println!("{poly}"),
        PolyFormat::Json => {
            println!("{}", serde_json::to_string(&poly).expect("polynomial serializes"))
        }
        PolyFormat::Latex => println!("{}", poly.to_latex()),
    }
    Ok(())
}

fn spectrum(spec: &AnySpec, method: Method, format: Format) -> Result<(), Failure> {
    let support = compute_polynomial(spec, method)?.support();
    match format {
        Format::Text => {
            let parts: Vec<String> = support.iter().map(|e| e.to_string()).collect();
            println!("{{{}}}", parts.join(","));
        }
        Format::Json => println!("{}", serde_json::json!(support)),
    }
    Ok(())
}

fn minforce(spec: &AnySpec, matching: &str) -> Result<(), Failure> {
    let seq: MatchingSequence =
        matching.parse().map_err(|e: Error| Failure::from(e))?;
    seq.validate(spec)?;
    let labels: Vec<String> = match spec {
        AnySpec::Monotonic(chs) => crate::minforce::minimum_forcing_set(chs, &seq.upper)?
            .edges
            .iter()
            .map(|l| l.to_string())
            .collect(),
        AnySpec::Turning(_) => {
            let graph = HexGraph::build(spec);
            let pm = sequence_to_matching(&graph, &seq)?;
            oracle::minimum_forcing_set(&graph, &pm)
                .iter()
                .map(|&id| graph.edge_label(id).to_string())
                .collect()
        }
    };
    println!("{}", labels.join(" "));
    Ok(())
}

fn verify(max_rows: usize, max_k: i64, turning: bool) -> Result<(), Failure> {
    let budget = budget()?;
    let specs: Vec<AnySpec> = if turning {
        all_turning_specs(max_rows, max_k).into_iter().map(AnySpec::Turning).collect()
    } else {
        all_monotonic_specs(max_rows, max_k).into_iter().map(AnySpec::Monotonic).collect()
    };
    let (mut ok, mut skipped, mut mismatched) = (0u64, 0u64, 0u64);
    for spec in &specs {
        let fast = recurrence::forcing_polynomial(spec);
        let graph = HexGraph::build(spec);
        match oracle::forcing_polynomial(&graph, budget) {
            Ok(slow) if slow == fast => {
                ok += 1;
                println!("ok       {spec}  {fast}");
            }
            Ok(slow) => {
                mismatched += 1;
                println!("MISMATCH {spec}  recurrence {fast}, brute force {slow}");
            }
            Err(Error::BudgetExceeded { required, .. }) => {
                skipped += 1;
                println!("skip     {spec}  {required} matchings over budget");
            }
            Err(e) => return Err(e.into()),
        }
    }
    println!(
        "checked {} systems: {ok} ok, {skipped} skipped, {mismatched} mismatched",
        specs.len()
    );
    if mismatched > 0 {
        return Err(fail(EXIT_MISMATCH, format!("{mismatched} systems disagree")));
    }
    Ok(())
}
