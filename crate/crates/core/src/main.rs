use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use unruh_sim::cli::{self, resolve_output_dir};
use unruh_sim::config::{load_config, SimulationConfig};
use unruh_sim::Error;

#[derive(Debug, Parser)]
#[command(name = "unruh-sim", version, about = "Simulated Unruh temperature from Bose-Einstein thermal baths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Heat-capacity curves per bath and the critical-temperature table.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the Unruh ratio and write kappa_fit.json.
    Fit {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of one bath.
    Spectrum {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        ne: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bogoliubov-invariance residuals for a comma-separated g tau list.
    Invariance {
        #[arg(long, allow_hyphen_values = true)]
        gtau: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Sweep { config, out } => {
            let cfg = load_config(&config)?;
            let dir = resolve_output_dir(out.as_deref(), &cfg.output_dir);
            let files = cli::cmd_sweep(&cfg, &dir)?;
            println!("wrote {} files to {}", files.len(), dir.display());
        }
        Command::Fit { config, out } => {
            let cfg = load_config(&config)?;
            let dir = resolve_output_dir(out.as_deref(), &cfg.output_dir);
            let (path, fit) = cli::cmd_fit(&cfg, &dir)?;
            println!(
                "kappa = {:.4} pK s ({} baths, ratio to theory {:.4}); wrote {}",
                fit.kappa,
                fit.n_points,
                fit.kappa_theory_ratio,
                path.display()
            );
        }
        Command::Spectrum { config, ne, out } => {
            let cfg = load_config(&config)?;
            let dir = resolve_output_dir(out.as_deref(), &cfg.output_dir);
            let path = cli::cmd_spectrum(&cfg, ne, &dir)?;
            println!("wrote {}", path.display());
        }
        Command::Invariance { gtau, out } => {
            let values = cli::parse_gtau_list(&gtau)?;
            let dir = resolve_output_dir(out.as_deref(), &SimulationConfig::default().output_dir);
            let path = cli::cmd_invariance(&values, &dir)?;
            println!("all residuals within thresholds; wrote {}", path.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
