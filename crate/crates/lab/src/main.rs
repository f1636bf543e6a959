use std::path::PathBuf;
use std::process::ExitCode;

use bispinor_lab::config::{ConfigOverrides, GridSpec, Literal};
use bispinor_lab::verify::{run_suite, Level, VerifyOptions};
use bispinor_lab::{sweep, write_table, Result};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bispinor", version, about = "Entanglement of boosted two-particle Dirac bispinor states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Run a scenario sweep and write its CSV.
    Run(RunArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RunArgs {
    /// fig1_mean_vs_theta, parallel_negativities, parallel_delta_means,
    /// perp_negativities, perp_delta_means, eggtray or spinspin_projection_vs_trace
    #[arg(long)]
    scenario: Option<String>,
    /// Spin superposition angle, e.g. `pi/4`.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Momentum superposition angle.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Initial rapidity.
    #[arg(long)]
    xi0: Option<String>,
    /// Boost rapidity grid `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    /// Theta grid for `fig1_mean_vs_theta` and `eggtray`.
    #[arg(long)]
    theta_grid: Option<String>,
    /// Alpha grid for `eggtray`.
    #[arg(long)]
    alpha_grid: Option<String>,
    /// Wigner angle for `eggtray`.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    mass: Option<String>,
    /// Output CSV path; `-` for standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with ScenarioConfig fields; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Include the random-direction and six-qubit sweeps.
    #[arg(long)]
    full: bool,
    /// Offset added to reference values (negative control).
    #[arg(long, hide = true, default_value_t = 0.0)]
    perturb: f64,
}

impl RunArgs {
    fn overrides(&self) -> ConfigOverrides {
        let lit = |s: &Option<String>| s.clone().map(Literal::Text);
        let grid = |s: &Option<String>| s.clone().map(GridSpec::Text);
        ConfigOverrides {
            scenario: self.scenario.clone(),
            theta: lit(&self.theta),
            alpha: lit(&self.alpha),
            xi0: lit(&self.xi0),
            omega_grid: grid(&self.omega),
            theta_grid: grid(&self.theta_grid),
            alpha_grid: grid(&self.alpha_grid),
            delta: lit(&self.delta),
            mass: lit(&self.mass),
            output_path: self.out.clone(),
        }
    }
}

fn run(args: &RunArgs) -> Result<()> {
    let file = match &args.config {
        Some(path) => ConfigOverrides::from_file(path)?,
        None => ConfigOverrides::default(),
    };
    let config = file.merge(args.overrides()).resolve()?;
    let output = sweep::run(&config)?;
    write_table(&output.table, &config.output_path)?;
    let mut summary = format!(
        "{}: {} rows x {} columns -> {}",
        config.scenario,
        output.table.rows().len(),
        output.table.header().len(),
        config.output_path.display()
    );
    if let Some(w) = output.wigner {
        summary.push_str(&format!(" (xi0 = omega = {:.10}, delta = {:.10}", w.xi0, w.delta));
        summary.push_str(if w.asymptotic { ", asymptotic cap)" } else { ")" });
    }
    // keep stdout clean when the CSV itself goes there
    if config.output_path.as_os_str() == "-" {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> ExitCode {
    let level = if args.full { Level::Full } else { Level::Fast };
    let checks = run_suite(&VerifyOptions { level, perturbation: args.perturb });
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} of {} checks passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Run(args) => match run(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
        Command::Verify(args) => verify(args),
    }
}
