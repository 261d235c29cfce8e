use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use uavcov::mec::{mec_bruteforce, mec_welzl, Seed};
use uavcov::scenario::{
    generate_scenario, load_scenario, report_to_json, run_pipeline, save_scenario, PipelineError,
    ScenarioError,
};
use uavcov::svg::render_svg;

const EXIT_PARSE: u8 = 2;
const EXIT_ALGORITHM: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "uavcov", version, about = "UAV placement over weighted sensor nodes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random scenario file
    Generate {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        capacity: usize,
        #[arg(long, default_value_t = 1000.0)]
        extent: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the placement pipeline on a scenario and write the report
    Run {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the minimum enclosing circle of the scenario nodes
    Mec {
        #[arg(long)]
        scenario: PathBuf,
        /// Cross-check against the brute-force enumeration
        #[arg(long)]
        oracle: bool,
    },
    /// Print the version
    Version,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}

fn parse_failure(e: &ScenarioError) -> u8 {
    match e {
        ScenarioError::Io(_) => EXIT_IO,
        _ => EXIT_PARSE,
    }
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.command {
        Command::Generate {
            count,
            capacity,
            extent,
            seed,
            out,
        } => {
            if count < 2 {
                eprintln!("error: --count must be at least 2");
                return Err(EXIT_PARSE);
            }
            if capacity < 2 {
                eprintln!("error: --capacity must be at least 2");
                return Err(EXIT_PARSE);
            }
            let scenario = generate_scenario(count, capacity, extent, Seed(seed));
            save_scenario(&scenario, &out).map_err(|e| {
                eprintln!("error: cannot write {}: {e}", out.display());
                EXIT_IO
            })?;
            println!("wrote {}", out.display());
            Ok(())
        }
        Command::Run { scenario, out, svg } => {
            let s = load_scenario(&scenario).map_err(|e| {
                eprintln!("error: {e}");
                parse_failure(&e)
            })?;
            let report = run_pipeline(&s).map_err(|e| {
                let PipelineError::Algorithm(inner) = &e;
                eprintln!("error: {inner}");
                EXIT_ALGORITHM
            })?;
            std::fs::write(&out, report_to_json(&report)).map_err(|e| {
                eprintln!("error: cannot write {}: {e}", out.display());
                EXIT_IO
            })?;
            if let Some(svg_path) = svg {
                render_svg(&s, &report, &svg_path).map_err(|e| {
                    eprintln!("error: cannot write {}: {e}", svg_path.display());
                    EXIT_IO
                })?;
            }
            println!(
                "circle center ({:.6}, {:.6}) radius {:.6}, {} selected, weight {:.6}",
                report.circle.cx,
                report.circle.cy,
                report.circle.r,
                report.selected.len(),
                report.weight_sum
            );
            Ok(())
        }
        Command::Mec { scenario, oracle } => {
            let s = load_scenario(&scenario).map_err(|e| {
                eprintln!("error: {e}");
                parse_failure(&e)
            })?;
            let tol = s.tolerance();
            let points: Vec<_> = s.weighted_points().iter().map(|w| w.point).collect();
            let result = mec_welzl(&points, Seed(s.seed), &tol).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_ALGORITHM
            })?;
            println!(
                "mec center ({:.9}, {:.9}) radius {:.9} support {:?}",
                result.circle.center.x, result.circle.center.y, result.circle.radius, result.support
            );
            if oracle {
                let brute = mec_bruteforce(&points, &tol).map_err(|e| {
                    eprintln!("error: {e}");
                    EXIT_ALGORITHM
                })?;
                let diff = (result.circle.radius - brute.circle.radius).abs();
                println!(
                    "oracle center ({:.9}, {:.9}) radius {:.9} (radius diff {:.3e})",
                    brute.circle.center.x, brute.circle.center.y, brute.circle.radius, diff
                );
                if diff > 1e-9 * result.circle.radius.max(1.0) {
                    eprintln!("error: randomized and brute-force radii disagree");
                    return Err(EXIT_ALGORITHM);
                }
            }
            Ok(())
        }
        Command::Version => {
            println!("uavcov {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
    }
}
