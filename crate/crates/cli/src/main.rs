use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qutrit_teleport::hypergraph::{canonical, hypergraph_name};
use qutrit_teleport::verify::{run_verify, DEFAULT_DRAWS, DEFAULT_SEED};
use qutrit_teleport::{ChannelKind, NonMarkovConstants, StatePreset};
use qutrit_teleport_cli::{run_sweep, CliError, CliResult, SweepOptions};

#[derive(Debug, Parser)]
#[command(
    name = "qtele",
    version,
    about = "Qutrit teleportation over hypergraph resource states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Sweep a channel parameter and write fidelities as CSV.
    Sweep(SweepOptions),
    /// Check every closed-form expression against simulation on seeded draws.
    Verify(VerifyArgs),
    /// List channels, hypergraphs and state presets.
    List,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_DRAWS)]
    draws: usize,
    #[arg(long)]
    g: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: Option<&PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn sweep(opts: SweepOptions) -> CliResult<()> {
    let config = opts.resolve()?;
    let mut out = output(config.out.as_ref())?;
    let result = run_sweep(&config, &mut out);
    out.flush()?;
    let summary = result?;
    if let Some(err) = summary.max_abs_err {
        eprintln!("{} rows, max abs_err {err:.3e}", summary.rows);
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> CliResult<()> {
    let d = NonMarkovConstants::default();
    let constants = NonMarkovConstants {
        g: args.g.unwrap_or(d.g),
        gamma: args.gamma.unwrap_or(d.gamma),
        eta: args.eta.unwrap_or(d.eta),
        beta: args.beta.unwrap_or(d.beta),
    };
    if args.draws == 0 {
        return Err(CliError::Usage("--draws must be positive".into()));
    }
    let report =
        run_verify(args.seed, args.draws, constants).map_err(|source| CliError::Numerical {
            context: format!("verify seed {}", args.seed),
            source,
        })?;
    let mut out = output(args.out.as_ref())?;
    out.write_all(report.render().as_bytes())?;
    out.flush()?;
    if report.all_passed() {
        Ok(())
    } else {
        let keys: Vec<String> = report.failures().map(|r| r.key.to_string()).collect();
        Err(CliError::Verification(keys.join(", ")))
    }
}

fn list() -> CliResult<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "channels:")?;
    for kind in ChannelKind::ALL {
        writeln!(out, "  {:<26} {}", kind.name(), kind.param_name())?;
    }
    writeln!(out, "hypergraphs:")?;
    for h in 1..=5 {
        let edges: Vec<String> = canonical(h)
            .expect("canonical index")
            .edges()
            .iter()
            .map(|e| {
                let v: Vec<String> = e.vertices().iter().map(usize::to_string).collect();
                format!("({})", v.join(","))
            })
            .collect();
        writeln!(out, "  {:<26} {}", hypergraph_name(h), edges.join(" "))?;
    }
    writeln!(out, "states:")?;
    for preset in [StatePreset::Plus, StatePreset::ZeroTwo, StatePreset::Zero] {
        let s = preset.params();
        writeln!(
            out,
            "  {:<26} theta1={:.6} theta2={:.6}",
            preset.name(),
            s.theta1,
            s.theta2
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(opts) => sweep(opts),
        Command::Verify(args) => verify(args),
        Command::List => list(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qtele: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
