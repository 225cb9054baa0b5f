use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fpp_regular::fpp_core::graph::SimpleMode;
use fpp_regular::harness::{ExperimentConfig, Mode, OutputFormat};
use fpp_regular::{output, run};

#[derive(Parser)]
#[command(
    name = "fpp-regular",
    version,
    about = "First-passage percolation on random regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hop flooding and weighted eccentricity from one source.
    Flood(RunArgs),
    /// All-pairs hop and weighted diameter.
    Diameter(RunArgs),
    /// Hopcount and weight between two vertices.
    Pair(RunArgs),
    /// Exploration-process traces.
    Explore(RunArgs),
    /// Compare explored H_k with the Bernoulli-sum sampler.
    CoupleCheck(RunArgs),
    /// Print the limiting constants for degree d as JSON.
    Constants {
        #[arg(long, default_value_t = 3)]
        d: u32,
        #[arg(long)]
        out_file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SimpleArg {
    Reject,
    Multigraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Csv,
    Json,
}

#[derive(Args)]
struct RunArgs {
    /// Degree.
    #[arg(long, default_value_t = 3)]
    d: u32,
    /// Graph size; repeat for a grid. Defaults depend on the mode.
    #[arg(long = "n")]
    n: Vec<usize>,
    /// Trials per size.
    #[arg(long)]
    trials: Option<usize>,
    /// Master seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "reject")]
    simple_mode: SimpleArg,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputArg,
    /// Write records here instead of stdout.
    #[arg(long)]
    out_file: Option<PathBuf>,
    /// Largest n accepted in diameter mode.
    #[arg(long)]
    all_pairs_cap: Option<usize>,
    /// Pairings drawn per instance before giving up on a simple graph.
    #[arg(long)]
    max_attempts: Option<u32>,
    /// Exploration steps (explore mode).
    #[arg(long)]
    k_max: Option<usize>,
    /// Steps compared in couple-check mode; repeatable.
    #[arg(long = "k")]
    k: Vec<usize>,
    /// Record per-trial wall time (output is then not reproducible).
    #[arg(long)]
    timing: bool,
    /// Write every sampled weighted graph to this directory.
    #[arg(long)]
    dump_dir: Option<PathBuf>,
    /// Write every exploration trace to this directory.
    #[arg(long)]
    trace_dir: Option<PathBuf>,
    /// Do not print the summary table to stderr.
    #[arg(long)]
    quiet: bool,
}

impl RunArgs {
    fn config(&self, mode: Mode) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(mode, self.d);
        if !self.n.is_empty() {
            c.n_grid = self.n.clone();
        }
        if let Some(t) = self.trials {
            c.trials = t;
        }
        c.master_seed = self.seed;
        c.simple_mode = match self.simple_mode {
            SimpleArg::Reject => SimpleMode::Reject,
            SimpleArg::Multigraph => SimpleMode::Multigraph,
        };
        c.output = match self.output {
            OutputArg::Csv => OutputFormat::Csv,
            OutputArg::Json => OutputFormat::Json,
        };
        if let Some(cap) = self.all_pairs_cap {
            c.all_pairs_cap = cap;
        }
        if let Some(m) = self.max_attempts {
            c.max_attempts = m;
        }
        if let Some(k) = self.k_max {
            c.k_max = k;
        }
        if !self.k.is_empty() {
            c.k_list = self.k.clone();
        }
        c.timing = self.timing;
        c.dump_dir = self.dump_dir.clone();
        c.trace_dir = self.trace_dir.clone();
        c
    }
}

fn sink(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn execute(cli: Cli) -> fpp_regular::Result<()> {
    let (mode, args) = match cli.command {
        Command::Constants { d, out_file } => {
            let mut config = ExperimentConfig::new(Mode::Constants, d);
            config.output = OutputFormat::Json;
            let out = run(&config)?;
            let mut w = sink(out_file.as_ref())?;
            output::write_constants(&mut w, &out.constants)?;
            w.flush()?;
            return Ok(());
        }
        Command::Flood(a) => (Mode::Flood, a),
        Command::Diameter(a) => (Mode::Diameter, a),
        Command::Pair(a) => (Mode::Pair, a),
        Command::Explore(a) => (Mode::Explore, a),
        Command::CoupleCheck(a) => (Mode::CoupleCheck, a),
    };
    let config = args.config(mode);
    let out = run(&config)?;
    let mut w = sink(args.out_file.as_ref())?;
    output::write_records(&mut w, &out.records, config.output)?;
    w.flush()?;
    if !args.quiet {
        output::write_report(&mut io::stderr().lock(), &out)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
