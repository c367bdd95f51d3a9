use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sumhard::translation::{build_comb_pair, CombParams};
use sumhard::workbench::{
    audit, bench, generate, reduce_file, render_svg, solve_instance, svg_string, to_csv, validate_chain, BenchSolver,
    Config, GenMode, Instance, InstanceFile, Kind, RenderObject,
};
use sumhard::Error;

#[derive(Parser)]
#[command(name = "sumhard", version, about = "Generate, reduce, solve and audit 3SUM-hard geometry instances")]
struct Cli {
    /// Seed for generation and benchmarking.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// key = value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Generate one instance.
    Gen {
        kind: Kind,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value = "random")]
        mode: GenMode,
    },
    /// Apply reductions to an instance file; `--to` may repeat.
    Reduce {
        input: PathBuf,
        #[arg(long, required = true, value_delimiter = ',')]
        to: Vec<Kind>,
    },
    /// Solve an instance and print the stage record as JSON.
    Solve { input: PathBuf },
    /// Run instances through a reduction chain and compare every answer.
    /// Without input files a seeded corpus is generated instead.
    Audit {
        inputs: Vec<PathBuf>,
        /// Comma-separated kinds, e.g. 3sum-prime,eqdist,segcontpnt.
        #[arg(long, required = true, value_delimiter = ',')]
        chain: Vec<Kind>,
        /// Corpus size when no inputs are given.
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Smallest and largest n of the generated corpus.
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Time a solver and print CSV.
    Bench {
        solver: BenchSolver,
        #[arg(long, required = true, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Draw an instance as SVG: combs for segcontpnt/polycont, wedges for
    /// rotation/rigid, the line gadget for hausdorff.
    Render { input: PathBuf },
}

/// Errors caused by bad user input map to exit code 2.
fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn load_config(path: Option<&Path>) -> Result<Config, Error> {
    match path {
        Some(p) => Config::parse(&std::fs::read_to_string(p)?),
        None => Ok(Config::default()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_object(file: &InstanceFile) -> Result<RenderObject, Error> {
    Ok(match &file.instance {
        Instance::SegContPnt(s) => {
            let (p, q) = build_comb_pair(s, &CombParams::default_for(s))?;
            RenderObject::CombPair(p, q)
        }
        Instance::PolyCont { p, q } => RenderObject::CombPair(p.clone(), q.clone()),
        Instance::Rotation { a, b } | Instance::Rigid { a, b } => RenderObject::WedgePair(a.clone(), b.clone()),
        Instance::Hausdorff { a, b, eps } => {
            RenderObject::HausdorffGadget { a: a.clone(), b: b.clone(), eps: eps.clone() }
        }
        other => {
            return Err(Error::InvalidInstance(format!("nothing to draw for kind {}", other.kind())));
        }
    })
}

fn corpus(kind: Kind, count: u64, min_n: usize, max_n: usize, seed: u64, config: &Config) -> Result<Vec<(String, InstanceFile)>, Error> {
    if min_n > max_n {
        return Err(Error::BoundsExceeded(format!("min_n {min_n} > max_n {max_n}")));
    }
    let span = (max_n - min_n + 1) as u64;
    (0..count)
        .map(|i| {
            let mode = if i % 2 == 0 { GenMode::PlantedYes } else { GenMode::AdversarialNo };
            let n = min_n + (i % span) as usize;
            let file = generate(kind, n, mode, seed.wrapping_add(i), config)?;
            Ok((format!("{i:06}"), file))
        })
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let config = load_config(cli.config.as_deref())?;
    let out = cli.out.as_deref();
    match cli.verb {
        Verb::Gen { kind, n, mode } => emit(out, &generate(kind, n, mode, cli.seed, &config)?.to_json())?,
        Verb::Reduce { input, to } => {
            let mut file = InstanceFile::read(&input)?;
            for k in validate_chain(file.kind(), &to)? {
                file = reduce_file(&file, k)?;
            }
            emit(out, &file.to_json())?;
        }
        Verb::Solve { input } => {
            let file = InstanceFile::read(&input)?;
            emit(out, &json(&solve_instance(&file.instance, &config)?))?;
        }
        Verb::Audit { inputs, chain, count, min_n, max_n } => {
            let files = if inputs.is_empty() {
                let start = *chain.first().expect("clap requires a chain");
                corpus(start, count, min_n, max_n, cli.seed, &config)?
            } else {
                inputs
                    .iter()
                    .map(|p| Ok((p.display().to_string(), InstanceFile::read(p)?)))
                    .collect::<Result<Vec<_>, Error>>()?
            };
            let report = audit(&files, &chain, &config)?;
            emit(out, &json(&report))?;
            let s = &report.summary;
            eprintln!(
                "{} instances, {} agree, {} disagree, {} oracle checks, {} skipped, {} undecided stages",
                s.instances, s.agreements, s.disagreements, s.oracle_checks, s.oracle_skipped, s.undecided_stages
            );
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Verb::Bench { solver, sizes, reps } => emit(out, &to_csv(&bench(solver, &sizes, reps, cli.seed)))?,
        Verb::Render { input } => {
            let object = render_object(&InstanceFile::read(&input)?)?;
            match out {
                Some(p) => render_svg(&object, p)?,
                None => print!("{}", svg_string(&object)),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(fail)
}

