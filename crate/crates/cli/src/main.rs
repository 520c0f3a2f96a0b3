use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dissonance_core::correlations::{analyze, MeasurementAxis};
use dissonance_core::states::{counterexample_state, ppt_check, read_state_file};
use dissonance_core::sweep::{format_real, run_sweep_csv, SweepConfig};
use dissonance_core::{ComplexMatrix, CorrelationReport, Error};

mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const BAD_STATE: u8 = 2;
    pub const ENTANGLED: u8 = 3;
    pub const NUMERICAL: u8 = 4;
}

/// Relative-entropy correlations (T, Q, C, L) of two-qubit separable states.
#[derive(Debug, Parser)]
#[command(name = "dissonance", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a state file.
    Analyze {
        path: PathBuf,
        #[arg(long, default_value_t = 32)]
        grid_n: usize,
        /// Skip simplex refinement after the grid scan.
        #[arg(long)]
        no_refine: bool,
        /// Diagnostics only: analyze entangled input as if it were its own closest separable state.
        #[arg(long)]
        force_sigma_eq_rho: bool,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the built-in counterexample and compare with reference values.
    Counterexample {
        #[arg(long, default_value_t = 64)]
        grid_n: usize,
    },
    /// Monte-Carlo sweep over random separable states, written as CSV.
    Sweep {
        #[arg(long, default_value_t = 1000)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long, default_value_t = 16)]
        grid_n: usize,
        /// CSV destination; stdout when omitted (the summary then goes to stderr).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_refine: bool,
        /// Make every odd row a PPT Bell-diagonal state.
        #[arg(long)]
        bell_diagonal: bool,
        /// Add the counterexample as a final row.
        #[arg(long)]
        append_counterexample: bool,
    },
    /// Peres-Horodecki check of a state file.
    Ppt { path: PathBuf },
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code(&e), e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(exit::USAGE, e.to_string())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::InvalidConfig(_) => exit::USAGE,
        Error::NotHermitian(_)
        | Error::InvalidTrace(_)
        | Error::NotPsd(_)
        | Error::NonFinite
        | Error::DimensionMismatch(..)
        | Error::UnsupportedDims(..)
        | Error::InvalidSpec(_)
        | Error::InvariantViolation(_) => exit::BAD_STATE,
        Error::NegativeEigenvalue(_) | Error::NoConvergence(_) | Error::Sweep { .. } => {
            exit::NUMERICAL
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            });
        }
    };
    let result = match cli.command {
        Command::Analyze {
            path,
            grid_n,
            no_refine,
            force_sigma_eq_rho,
            json,
        } => cmd_analyze(&path, grid_n, !no_refine, force_sigma_eq_rho, json),
        Command::Counterexample { grid_n } => cmd_counterexample(grid_n),
        Command::Sweep {
            n,
            seed,
            k_min,
            k_max,
            grid_n,
            out,
            no_refine,
            bell_diagonal,
            append_counterexample,
        } => {
            let cfg = SweepConfig {
                n,
                master_seed: seed,
                k_min,
                k_max,
                grid_n,
                refine: !no_refine,
                include_bell_diagonal: bell_diagonal,
                append_counterexample,
            };
            cmd_sweep(&cfg, out)
        }
        Command::Ppt { path } => cmd_ppt(&path),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn check_grid(grid_n: usize) -> Result<(), Failure> {
    let min = dissonance_core::correlations::MIN_GRID_N;
    if grid_n < min {
        return Err(Failure::new(
            exit::USAGE,
            format!("--grid-n must be at least {min}"),
        ));
    }
    Ok(())
}

fn cmd_analyze(
    path: &PathBuf,
    grid_n: usize,
    refine: bool,
    force: bool,
    json: bool,
) -> Result<u8, Failure> {
    check_grid(grid_n)?;
    let rho = read_state_file(path)?;
    let ppt = ppt_check(&rho)?;
    if !ppt.separable {
        if !force {
            return Err(Failure::new(
                exit::ENTANGLED,
                format!(
                    "state fails the PPT test (min eigenvalue of the partial transpose {}), so it is entangled. \
                     These measures take the closest separable state to be the state itself, which only holds \
                     for separable input. Pass --force-sigma-eq-rho to run anyway as a diagnostic.",
                    format_real(ppt.min_eigenvalue)
                ),
            ));
        }
        eprintln!(
            "warning: DIAGNOSTIC OVERRIDE: input is entangled (PPT min eigenvalue {}); \
             results assume sigma = rho and are not correlation measures of this state",
            format_real(ppt.min_eigenvalue)
        );
    }
    let report = analyze(&rho, grid_n, refine)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if json {
        let text = serde_json::to_string_pretty(&report)
            .map_err(|e| Failure::new(exit::NUMERICAL, e.to_string()))?;
        writeln!(out, "{text}")?;
    } else {
        if !ppt.separable {
            writeln!(
                out,
                "mode: DIAGNOSTIC (sigma = rho forced on entangled input)"
            )?;
        }
        write_report(&mut out, &report)?;
    }
    Ok(if report.is_consistent() {
        exit::OK
    } else {
        exit::NUMERICAL
    })
}

fn write_report<W: Write>(out: &mut W, r: &CorrelationReport) -> io::Result<()> {
    for (name, value) in [
        ("T", r.t),
        ("Q", r.q),
        ("C", r.c),
        ("L", r.l),
        ("residual", r.identity_residual),
    ] {
        writeln!(out, "{name:<9}{}", format_real(value))?;
    }
    writeln!(out, "{:<9}{}", "axis_a", axis_label(&r.axes.0))?;
    writeln!(out, "{:<9}{}", "axis_b", axis_label(&r.axes.1))?;
    if r.superadditive {
        writeln!(out, "SUPERADDITIVE (T <= Q+C)")?;
    } else {
        writeln!(out, "VIOLATION")?;
    }
    for (name, m) in [
        ("chi", r.chi.rho().matrix()),
        ("pi_rho", r.pi_rho.matrix()),
        ("pi_chi", r.pi_chi.matrix()),
    ] {
        writeln!(out)?;
        writeln!(out, "{name} =")?;
        write_matrix(out, m)?;
    }
    Ok(())
}

fn axis_label(a: &MeasurementAxis) -> String {
    format!("theta={:.6} phi={:.6}", a.theta(), a.phi())
}

fn write_matrix<W: Write>(out: &mut W, m: &ComplexMatrix) -> io::Result<()> {
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|j| {
                let z = m[(i, j)];
                // Avoid printing "-0.000000".
                let re = if z.re.abs() < 5e-7 { 0.0 } else { z.re };
                let im = if z.im.abs() < 5e-7 { 0.0 } else { z.im };
                format!("{re:9.6}{im:+.6}i")
            })
            .collect();
        writeln!(out, "  {}", row.join("  "))?;
    }
    Ok(())
}

const REFERENCE: [(&str, f64, f64); 4] = [
    ("T", 0.601, 1e-3),
    ("Q", 0.5, 1e-4),
    ("C", 0.311, 1e-3),
    ("L", 0.210, 1e-3),
];

const RESIDUAL_TOL: f64 = 1e-8;

fn cmd_counterexample(grid_n: usize) -> Result<u8, Failure> {
    check_grid(grid_n)?;
    let r = analyze(&counterexample_state(), grid_n, true)?;
    let computed = [r.t, r.q, r.c, r.l];
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(
        out,
        "{:<10}{:>18}{:>12}{:>14}{:>10}  status",
        "quantity", "computed", "reference", "|delta|", "tol"
    )?;
    let mut ok = true;
    for ((name, reference, tol), value) in REFERENCE.iter().zip(computed) {
        let delta = (value - reference).abs();
        let pass = delta <= *tol;
        ok &= pass;
        writeln!(
            out,
            "{name:<10}{:>18}{:>12}{:>14}{:>10}  {}",
            format_real(value),
            format_real(*reference),
            format!("{delta:.3e}"),
            format!("{tol:.0e}"),
            if pass { "ok" } else { "FAIL" }
        )?;
    }
    let pass = r.identity_residual <= RESIDUAL_TOL;
    ok &= pass;
    writeln!(
        out,
        "{:<10}{:>18}{:>12}{:>14}{:>10}  {}",
        "residual",
        format!("{:.3e}", r.identity_residual),
        "0",
        format!("{:.3e}", r.identity_residual),
        format!("{RESIDUAL_TOL:.0e}"),
        if pass { "ok" } else { "FAIL" }
    )?;
    writeln!(
        out,
        "axes      {} | {}",
        axis_label(&r.axes.0),
        axis_label(&r.axes.1)
    )?;
    writeln!(
        out,
        "{}",
        if r.superadditive {
            "SUPERADDITIVE (T <= Q+C)"
        } else {
            "VIOLATION"
        }
    )?;
    Ok(if ok { exit::OK } else { exit::NUMERICAL })
}

fn cmd_sweep(cfg: &SweepConfig, out: Option<PathBuf>) -> Result<u8, Failure> {
    cfg.validate()?;
    let summary = match &out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::new(exit::USAGE, format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            let s = run_sweep_csv(cfg, &mut w)?;
            w.flush()?;
            println!("{}", s.summary_line());
            s
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            let s = run_sweep_csv(cfg, &mut w)?;
            w.flush()?;
            eprintln!("{}", s.summary_line());
            s
        }
    };
    if summary.violations.is_empty() {
        Ok(exit::OK)
    } else {
        eprintln!("violating rows: {:?}", summary.violations);
        Ok(exit::NUMERICAL)
    }
}

fn cmd_ppt(path: &PathBuf) -> Result<u8, Failure> {
    let rho = read_state_file(path)?;
    let r = ppt_check(&rho)?;
    println!(
        "min_eig={} separable={}",
        format_real(r.min_eigenvalue),
        r.separable
    );
    Ok(exit::OK)
}
