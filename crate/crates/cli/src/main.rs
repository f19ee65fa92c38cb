use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pigraph::analyze::select_primes;
use pigraph::report::{AnalysisReport, SweepReport, Table1Report};
use pigraph::{
    analyze, parse_ab, sweep, table1, text, AnalysisConfig, Caps, Checks, CliError, Family,
    PrimeSelector, SweepConfig, Target,
};
use pigraph_core::{RingSpec, SplitGraph};
use serde::Serialize;

/// Prime ideal graphs of finite rings and the powers of their edge ideals.
#[derive(Debug, Parser)]
#[command(name = "pigraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the graph of a ring and prime (or an abstract K_a v co-K_b) and check its edge ideal powers.
    Analyze(AnalyzeArgs),
    /// Recompute the published generator counts for Z6 and Z8.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Generator counts over a family of rings.
    Sweep(SweepArgs),
    /// Print the graph as an adjacency list or JSON.
    Graph {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "input")]
struct InputArgs {
    /// Ring such as `Z8` or `Z2xZ3`.
    #[arg(long)]
    ring: Option<String>,
    /// Abstract parameters `a,b`.
    #[arg(long, value_name = "A,B")]
    ab: Option<String>,
}

#[derive(Debug, Args)]
struct TargetArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Generator of a principal prime ideal, e.g. `3` or `(1,0)`.
    #[arg(long, requires = "ring", conflicts_with = "prime_set")]
    prime: Option<String>,
    /// Members of the prime ideal, e.g. `0,2,4` or `(0,0),(0,1)`.
    #[arg(long, requires = "ring")]
    prime_set: Option<String>,
    /// Largest ring order enumerated.
    #[arg(long, default_value_t = Caps::default().ring)]
    cap_ring: u64,
}

impl TargetArgs {
    fn target(&self) -> Result<Target, CliError> {
        if let Some(ab) = &self.input.ab {
            let (a, b) = parse_ab(ab)?;
            return Ok(Target::Abstract { a, b });
        }
        let spec = self.input.ring.clone().expect("clap enforces one input");
        let selector = match (&self.prime, &self.prime_set) {
            (Some(g), _) => Some(PrimeSelector::Generator(g.clone())),
            (_, Some(s)) => Some(PrimeSelector::Members(s.clone())),
            _ => None,
        };
        Ok(Target::Ring { spec, selector })
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, default_value_t = 3)]
    max_power: u32,
    /// `all`, `none`, or a subset of oracle,polymatroid,linquot,primary,covers.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long)]
    json: bool,
    /// Largest generator set built by multiplication or enumeration.
    #[arg(long, default_value_t = Caps::default().gens)]
    cap_gens: usize,
    /// Largest ideal checked for the exchange property.
    #[arg(long, default_value_t = Caps::default().exchange)]
    cap_exchange: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    Zpm,
    Zn,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    primes: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    exponents: Vec<u32>,
    #[arg(long, default_value_t = 2)]
    from: u64,
    #[arg(long, default_value_t = 30)]
    to: u64,
    #[arg(long, default_value_t = 1)]
    max_power: u32,
    /// Skip the brute-force power computation.
    #[arg(long)]
    no_oracle: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = Caps::default().gens)]
    cap_gens: usize,
    #[arg(long, default_value_t = Caps::default().ring)]
    cap_ring: u64,
}

fn emit<T: Serialize>(
    json: bool,
    value: &T,
    render: impl FnOnce(&T) -> String,
) -> Result<(), CliError> {
    let out = if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        render(value)
    };
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.as_bytes());
    Ok(())
}

fn status(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Analyze(args) => {
            let mut cfg = AnalysisConfig::new(args.target.target()?, args.max_power)?;
            cfg.checks = args.checks.parse::<Checks>()?;
            cfg.caps.gens = args.cap_gens;
            cfg.caps.exchange = args.cap_exchange;
            cfg.caps.ring = args.target.cap_ring;
            let report: AnalysisReport = analyze(&cfg)?;
            emit(args.json, &report, text::analysis)?;
            Ok(status(report.passed))
        }
        Command::Table1 { json } => {
            let report: Table1Report = table1()?;
            emit(json, &report, text::table1)?;
            Ok(status(report.status == "PASS"))
        }
        Command::Sweep(args) => {
            let family = match args.family {
                FamilyName::Zpm => Family::Zpm {
                    primes: args.primes,
                    exponents: args.exponents,
                },
                FamilyName::Zn => Family::Zn {
                    from: args.from,
                    to: args.to,
                },
            };
            let caps = Caps {
                gens: args.cap_gens,
                ring: args.cap_ring,
                ..Caps::default()
            };
            let cfg = SweepConfig {
                family,
                max_power: args.max_power,
                oracle: !args.no_oracle,
                caps,
            };
            let report: SweepReport = sweep(&cfg)?;
            emit(args.json, &report, text::sweep)?;
            Ok(status(report.passed))
        }
        Command::Graph { target, json } => {
            let graphs = build_graphs(&target)?;
            if json {
                let exports: Vec<_> = graphs.iter().map(SplitGraph::export).collect();
                if exports.len() == 1 {
                    emit(true, &exports[0], |_| String::new())?;
                } else {
                    emit(true, &exports, |_| String::new())?;
                }
            } else {
                let text: Vec<String> = graphs.iter().map(SplitGraph::adjacency_list).collect();
                emit(false, &(), |_| text.join("\n"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_graphs(args: &TargetArgs) -> Result<Vec<SplitGraph>, CliError> {
    match args.target()? {
        Target::Abstract { a, b } => Ok(vec![SplitGraph::abstract_split(a, b)?]),
        Target::Ring { spec, selector } => {
            let ring: RingSpec = spec.parse()?;
            ring.check_cap(args.cap_ring)?;
            let primes = select_primes(&ring, selector.as_ref(), args.cap_ring)?;
            primes
                .iter()
                .map(|p| Ok(SplitGraph::from_prime(&ring, p)?))
                .collect()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
