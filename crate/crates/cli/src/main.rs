mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use neurocode::sweep::DEFAULT_SEED;

/// Combinatorial neural codes: canonical forms, code graphs, elementary
/// maps, exact realizations and verification sweeps.
#[derive(Debug, Parser)]
#[command(name = "neurocode", version)]
struct Cli {
    /// Emit the full run report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "NEUROCODE_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Code text such as "{};{1,2};{2,3}" or "n=4;1;12". Use - for stdin or
    /// @path to read a file.
    pub code: Option<String>,

    /// A named family instead of code text: cc:<m> or cr:<k>.
    #[arg(long, conflicts_with = "code")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GraphKind {
    Ccg,
    Grg,
    GrComplex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form of the neural ideal.
    Cf {
        #[command(flatten)]
        input: Input,
        /// Cross-check against the brute-force vanishing oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Codeword containment graph, general relationship graph or complex.
    Graph {
        #[arg(value_enum)]
        which: GraphKind,
        #[command(flatten)]
        input: Input,
        /// A canonical form (JSON or "x1*x2, x2*(1-x3)") instead of a code;
        /// grg and gr-complex only.
        #[arg(long, conflicts_with_all = ["code", "family"])]
        cf: Option<String>,
        /// Neuron count for --cf when it cannot be read off the input.
        #[arg(long, requires = "cf")]
        n: Option<usize>,
        /// Print the graph in DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Apply an elementary code map and compare the predicted canonical form
    /// of the image with the computed one.
    #[command(group(ArgGroup::new("spec").required(true).args(["permute", "add_on", "add_off", "duplicate", "delete", "include"])))]
    Map {
        #[command(flatten)]
        input: Input,
        /// New labels of neurons 1..n, e.g. "2,1,3".
        #[arg(long)]
        permute: Option<String>,
        /// Add a neuron that is always on.
        #[arg(long)]
        add_on: bool,
        /// Add a neuron that is always off.
        #[arg(long)]
        add_off: bool,
        /// Append a copy of this neuron.
        #[arg(long)]
        duplicate: Option<usize>,
        /// Remove this neuron.
        #[arg(long)]
        delete: Option<usize>,
        /// Include into this larger code.
        #[arg(long)]
        include: Option<String>,
    },
    /// Code realized by an interval or segment cover.
    Realize {
        /// Cover JSON, - for stdin, or @path.
        #[arg(conflicts_with = "family")]
        cover: Option<String>,
        /// cc:<m> for the interval realization, cr:<k> for the polygon.
        #[arg(long)]
        family: Option<String>,
        /// Also read the canonical form off the cover (intervals only).
        #[arg(long)]
        cf: bool,
    },
    /// Run a verification sweep.
    Verify {
        /// parity, union-closure, preserve-connected, preserve-complete,
        /// complete-iso, cf-theorems, grg-families or realizations.
        suite: String,
        /// Neuron count (exhaustive) or largest neuron count (sampled).
        #[arg(long)]
        n: Option<usize>,
        /// Scan every code on n neurons (n <= 4).
        #[arg(long)]
        exhaustive: bool,
        /// Random inputs per check.
        #[arg(long, visible_alias = "trials", default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest family parameter.
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
    /// Print a named family: cc:<m> or cr:<k>.
    Family { spec: String },
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let command = report::command_line(&args);
    let result = match cli.command {
        Command::Cf { input, oracle } => commands::cf(command, &input, oracle),
        Command::Graph {
            which,
            input,
            cf,
            n,
            dot,
        } => commands::graph(command, which, &input, cf.as_deref(), n, dot && !cli.json),
        Command::Map {
            input,
            permute,
            add_on,
            add_off,
            duplicate,
            delete,
            include,
        } => {
            let spec = commands::SpecArgs {
                permute,
                add_on,
                add_off,
                duplicate,
                delete,
                include,
            };
            commands::map(command, &input, &spec)
        }
        Command::Realize { cover, family, cf } => {
            commands::realize(command, cover.as_deref(), family.as_deref(), cf)
        }
        Command::Verify {
            suite,
            n,
            exhaustive,
            samples,
            seed,
            max,
        } => commands::verify(command, &suite, n, exhaustive, samples, seed, max),
        Command::Family { spec } => commands::family(command, &spec),
    };
    match result {
        Ok(commands::Output::Report(report)) => {
            let text = if cli.json {
                report.to_json() + "\n"
            } else {
                report.render_text()
            };
            emit(&text);
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Ok(commands::Output::Raw(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
