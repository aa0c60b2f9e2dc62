//! Command-line front end: state generation, sweeping, statistics, density
//! tables, histograms, and the reference-table report.
//!
//! Exit codes: 0 on success, 1 for usage and argument validation failures,
//! 2 for I/O and state-file format errors. Every subcommand is
//! deterministic given its flags; no timestamps or absolute paths are
//! embedded in any output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::distribution::{
    density_table, empirical_stats, histogram, sweep_with_cap, write_density_csv,
    write_histogram_csv, AnalyticParams, MuMode, StatsReport, SweepResult, DEFAULT_SWEEP_CAP,
};
use crate::error::{Error, Result};
use crate::io::{load_state, save_state};
use crate::reference::reference_for;
use crate::state::{PureState, RandomSeed, Topology, MAX_QUBITS};

/// Environment variable overriding the qubit cap (default 16 for commands
/// that sweep, 24 for `gen` and `density`).
pub const ENV_MAX_N: &str = "ENTSPEC_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "entspec",
    version,
    about = "Balanced-bipartition entanglement sweeps for n-qubit pure states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Ghz,
    W,
    Cluster,
    Random,
}

impl StateKind {
    fn name(self) -> &'static str {
        match self {
            StateKind::Ghz => "ghz",
            StateKind::W => "w",
            StateKind::Cluster => "cluster",
            StateKind::Random => "random",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TopologyArg {
    Chain,
    Ring,
}

impl From<TopologyArg> for Topology {
    fn from(value: TopologyArg) -> Topology {
        match value {
            TopologyArg::Chain => Topology::Chain,
            TopologyArg::Ring => Topology::Ring,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MuArg {
    Exact,
    Asymptotic,
}

impl From<MuArg> for MuMode {
    fn from(value: MuArg) -> MuMode {
        match value {
            MuArg::Exact => MuMode::Exact,
            MuArg::Asymptotic => MuMode::Asymptotic,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a state and write it as a QSV1 file
    Gen {
        /// State family
        #[arg(long = "type", value_enum)]
        kind: StateKind,
        /// Qubit count
        #[arg(long)]
        n: u32,
        /// Seed for random states
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cluster graph
        #[arg(long, value_enum, default_value_t = TopologyArg::Chain)]
        topology: TopologyArg,
        /// Output path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Sweep every balanced bipartition of a state file, emitting CSV
    Sweep {
        /// Input state file (QSV1 binary or text)
        input: PathBuf,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads (default: all available)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Empirical and analytic statistics of a state's sweep, as JSON
    Stats {
        /// Input state file (QSV1 binary or text)
        input: PathBuf,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads (default: all available)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Sample the analytic participation-number density, as CSV
    Density {
        /// Qubit count
        #[arg(long)]
        n: u32,
        /// Sample points, equally spaced over (1, 2^⌊n/2⌋]
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Which mean enters the density
        #[arg(long, value_enum, default_value_t = MuArg::Exact)]
        mu: MuArg,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Histogram of a state's sweep, as CSV
    Hist {
        /// Input state file (QSV1 binary or text)
        input: PathBuf,
        /// Equal-width bins over (1, 2^⌊n/2⌋)
        #[arg(long, default_value_t = 40)]
        bins: usize,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads (default: all available)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Mean participation of the four state families over a range of n,
    /// with deviations from the embedded reference values
    Table {
        #[arg(long, default_value_t = 5)]
        nmin: u32,
        #[arg(long, default_value_t = 12)]
        nmax: u32,
        /// Haar samples averaged for the random column
        #[arg(long, default_value_t = 20)]
        samples: u64,
        /// Base seed; sample i draws from seed + i
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Cluster graph
        #[arg(long, value_enum, default_value_t = TopologyArg::Chain)]
        topology: TopologyArg,
        /// CSV output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads (default: all available)
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// Parse the process arguments, run the selected command, and return the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(err @ (Error::InvalidArgument(_) | Error::AboveCap { .. })) => {
            eprintln!("error: {err}");
            1
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

pub fn execute(command: Command) -> Result<()> {
    match command {
        Command::Gen {
            kind,
            n,
            seed,
            topology,
            output,
        } => cmd_gen(kind, n, seed, topology.into(), &output),
        Command::Sweep {
            input,
            output,
            threads,
        } => cmd_sweep(&input, output.as_deref(), threads),
        Command::Stats {
            input,
            output,
            threads,
        } => cmd_stats(&input, output.as_deref(), threads),
        Command::Density {
            n,
            points,
            mu,
            output,
        } => cmd_density(n, points, mu.into(), output.as_deref()),
        Command::Hist {
            input,
            bins,
            output,
            threads,
        } => cmd_hist(&input, bins, output.as_deref(), threads),
        Command::Table {
            nmin,
            nmax,
            samples,
            seed,
            topology,
            output,
            threads,
        } => cmd_table(
            nmin,
            nmax,
            samples,
            seed,
            topology.into(),
            output.as_deref(),
            threads,
        ),
    }
}

fn cap_from_env(default_cap: u32) -> u32 {
    std::env::var(ENV_MAX_N)
        .ok()
        .and_then(|value| value.parse().ok())
        .unwrap_or(default_cap)
}

fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(count) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn write_artifact(
    path: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match path {
        Some(p) => {
            let mut writer = BufWriter::new(File::create(p)?);
            write(&mut writer)?;
            writer.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Human-readable summaries go to stdout when the artifact went to a file,
/// to stderr when the artifact occupies stdout.
fn summary(artifact_to_file: bool, line: &str) {
    if artifact_to_file {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn cmd_gen(kind: StateKind, n: u32, seed: u64, topology: Topology, output: &Path) -> Result<()> {
    let cap = cap_from_env(MAX_QUBITS).min(MAX_QUBITS);
    if n > cap {
        return Err(Error::AboveCap {
            operation: "state generation",
            cap,
            n,
        });
    }
    let state = match kind {
        StateKind::Ghz => PureState::ghz(n)?,
        StateKind::W => PureState::w(n)?,
        StateKind::Cluster => PureState::cluster(n, topology)?,
        StateKind::Random => PureState::haar_random(n, RandomSeed(seed))?,
    };
    save_state(&state, output)?;
    println!(
        "gen: type={} n={} norm={:.12} file={}",
        kind.name(),
        n,
        state.norm_sqr().sqrt(),
        output.display()
    );
    Ok(())
}

fn load_and_sweep(input: &Path, threads: Option<usize>) -> Result<SweepResult> {
    let state = load_state(input)?;
    let cap = cap_from_env(DEFAULT_SWEEP_CAP);
    in_pool(threads, || sweep_with_cap(&state, cap))?
}

fn cmd_sweep(input: &Path, output: Option<&Path>, threads: Option<usize>) -> Result<()> {
    let result = load_and_sweep(input, threads)?;
    let stats = empirical_stats(&result)?;
    write_artifact(output, |w| result.write_csv(w).map_err(Error::Io))?;
    summary(
        output.is_some(),
        &format!(
            "sweep: n={} n_A={} n_p={} mean_participation={:.16e} std_participation={:.16e}",
            result.qubit_count(),
            result.n_a(),
            result.n_p(),
            stats.mean_participation,
            stats.std_participation
        ),
    );
    Ok(())
}

fn cmd_stats(input: &Path, output: Option<&Path>, threads: Option<usize>) -> Result<()> {
    let result = load_and_sweep(input, threads)?;
    let report = StatsReport::new(&result)?;
    write_artifact(output, |w| report.write_json(w))
}

fn cmd_density(n: u32, points: usize, mode: MuMode, output: Option<&Path>) -> Result<()> {
    let cap = cap_from_env(MAX_QUBITS).min(MAX_QUBITS);
    if n > cap {
        return Err(Error::AboveCap {
            operation: "density table",
            cap,
            n,
        });
    }
    let params = AnalyticParams::for_qubit_count(n)?;
    let rows = density_table(&params, points, mode)?;
    write_artifact(output, |w| write_density_csv(&rows, w).map_err(Error::Io))
}

fn cmd_hist(input: &Path, bins: usize, output: Option<&Path>, threads: Option<usize>) -> Result<()> {
    let result = load_and_sweep(input, threads)?;
    let hist = histogram(&result, bins, None)?;
    write_artifact(output, |w| write_histogram_csv(&hist, w).map_err(Error::Io))?;
    summary(
        output.is_some(),
        &format!(
            "hist: n={} bins={} total={}",
            result.qubit_count(),
            bins,
            result.n_p()
        ),
    );
    Ok(())
}

struct TableRow {
    n: u32,
    ghz: f64,
    w: f64,
    cluster: f64,
    random: f64,
}

fn sweep_mean(state: &PureState, cap: u32) -> Result<f64> {
    let result = sweep_with_cap(state, cap)?;
    Ok(empirical_stats(&result)?.mean_participation)
}

fn cmd_table(
    nmin: u32,
    nmax: u32,
    samples: u64,
    seed: u64,
    topology: Topology,
    output: Option<&Path>,
    threads: Option<usize>,
) -> Result<()> {
    if nmin < 2 || nmin > nmax {
        return Err(Error::invalid(format!(
            "need 2 ≤ nmin ≤ nmax, got nmin = {nmin}, nmax = {nmax}"
        )));
    }
    if samples < 1 {
        return Err(Error::invalid("need at least one random sample"));
    }
    let cap = cap_from_env(DEFAULT_SWEEP_CAP);
    if nmax > cap {
        return Err(Error::AboveCap {
            operation: "table sweep",
            cap,
            n: nmax,
        });
    }

    let rows = in_pool(threads, || -> Result<Vec<TableRow>> {
        (nmin..=nmax)
            .map(|n| {
                let ghz = sweep_mean(&PureState::ghz(n)?, cap)?;
                let w = sweep_mean(&PureState::w(n)?, cap)?;
                let cluster = sweep_mean(&PureState::cluster(n, topology)?, cap)?;
                let mut random_acc = 0.0;
                for i in 0..samples {
                    let state = PureState::haar_random(n, RandomSeed(seed.wrapping_add(i)))?;
                    random_acc += sweep_mean(&state, cap)?;
                }
                Ok(TableRow {
                    n,
                    ghz,
                    w,
                    cluster,
                    random: random_acc / samples as f64,
                })
            })
            .collect()
    })??;

    write_artifact(output, |writer| {
        writeln!(writer, "n,ghz,w,cluster,random")?;
        for row in &rows {
            writeln!(
                writer,
                "{},{:.16e},{:.16e},{:.16e},{:.16e}",
                row.n, row.ghz, row.w, row.cluster, row.random
            )?;
        }
        Ok(())
    })?;

    let to_file = output.is_some();
    summary(
        to_file,
        &format!(
            "table: topology={} samples={samples} seed={seed} (Δ = computed − reference)",
            match topology {
                Topology::Chain => "chain",
                Topology::Ring => "ring",
            }
        ),
    );
    summary(
        to_file,
        &format!(
            "{:>3}  {:>16}  {:>16}  {:>16}  {:>16}",
            "n", "ghz", "w", "cluster", "random"
        ),
    );
    for row in &rows {
        let cell = |value: f64, reference: Option<f64>| match reference {
            Some(r) => format!("{:8.3} ({:+.3})", value, value - r),
            None => format!("{:8.3} (  -  )", value),
        };
        let reference = reference_for(row.n);
        summary(
            to_file,
            &format!(
                "{:>3}  {}  {}  {}  {}",
                row.n,
                cell(row.ghz, reference.map(|r| r.ghz)),
                cell(row.w, reference.map(|r| r.w)),
                cell(row.cluster, reference.map(|r| r.cluster)),
                cell(row.random, reference.map(|r| r.random)),
            ),
        );
    }
    Ok(())
}
