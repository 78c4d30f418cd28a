use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superspecial::cli::{self, Format, RunConfig};
use superspecial::graph::Subgraph;
use superspecial::walk::WalkConfig;
use superspecial::Result;

#[derive(Parser)]
#[command(name = "ssgraph", version, about = "Superspecial (2,2)-isogeny graphs")]
struct Args {
    /// Output directory
    #[arg(long, global = true, env = "SSGRAPH_OUT", default_value = "out")]
    out: PathBuf,
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = superspecial::field::DEFAULT_SEED)]
    seed: u64,
    /// Largest graph handled by the dense eigensolver
    #[arg(long, global = true, default_value_t = superspecial::spectra::DENSE_THRESHOLD)]
    dense_threshold: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the graph and write JSON, DOT and a summary
    Build {
        #[arg(short, long)]
        prime: u64,
        /// Also write this format (csv adds an edge list)
        #[arg(long)]
        format: Option<Format>,
    },
    /// Diameters and scaled eigenvalues, one CSV row per prime
    Spectra {
        /// A prime or an inclusive range such as 17..101
        #[arg(short, long)]
        prime: String,
    },
    /// Seeded random walk statistics
    Walk {
        #[arg(short, long)]
        prime: u64,
        #[arg(short = 'n', long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value = "full")]
        subgraph: Subgraph,
    },
    /// Run the invariant suite; nonzero exit status on any failure
    Verify {
        /// A prime or an inclusive range
        #[arg(short, long, required_unless_present = "graph")]
        prime: Option<String>,
        /// Check a graph JSON file instead of building
        #[arg(long, conflicts_with = "prime")]
        graph: Option<PathBuf>,
        /// Also transport every dual kernel to the stored codomain model
        #[arg(long)]
        extended_checks: bool,
    },
}

fn run(args: Args) -> Result<bool> {
    let mut cfg = RunConfig::new(args.out);
    cfg.seed = args.seed;
    cfg.dense_threshold = args.dense_threshold;
    match args.cmd {
        Cmd::Build { prime, format } => {
            cfg.format = format;
            let g = cli::cmd_build(prime, &cfg)?;
            print!("{}", cli::summary(&g));
            println!("wrote {}", cfg.out.display());
        }
        Cmd::Spectra { prime } => {
            let primes = cli::parse_primes(&prime)?;
            let (rows, notes) = cli::cmd_spectra(&primes, &cfg)?;
            let mut out = Vec::new();
            cli::write_spectra_csv(&rows, &mut out).expect("writing to memory");
            print!("{}", String::from_utf8_lossy(&out));
            for n in notes {
                println!("# {n}");
            }
        }
        Cmd::Walk { prime, steps, subgraph } => {
            let mut w = WalkConfig::new(steps, cfg.seed);
            w.subgraph = subgraph;
            let s = cli::cmd_walk(prime, &w, &cfg)?;
            println!(
                "p = {}: {} steps, {} at products, ratio·p = {:.4}, stationary product mass·p = {:.4}",
                s.p,
                steps,
                s.product_hits,
                s.scaled_ratio,
                s.expected_product_mass_f64 * s.p as f64
            );
        }
        Cmd::Verify {
            prime,
            graph,
            extended_checks,
        } => {
            cfg.extended_checks = extended_checks;
            let mut ok = true;
            if let Some(path) = graph {
                let r = cli::verify_file(&path)?;
                print!("{r}");
                ok &= r.passed();
            }
            for p in prime.map(|s| cli::parse_primes(&s)).transpose()?.unwrap_or_default() {
                println!("p = {p}");
                let r = cli::cmd_verify(p, &cfg)?;
                print!("{r}");
                ok &= r.passed();
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
