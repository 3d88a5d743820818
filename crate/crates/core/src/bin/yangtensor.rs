use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use yangtensor::cli::{
    cmd_check, cmd_diagram, cmd_intertwiner, cmd_oracle, parse_specs, parse_window, read_input, run_sweep, to_json,
    write_sweep, CliError, Criterion, SweepFormat, SweepJob, DIM_CAP_ENV, EXIT_INCONSISTENT,
};

#[derive(Parser)]
#[command(name = "yangtensor", version, about = "Irreducibility of tensor products of elementary Yangian modules")]
struct Cli {
    /// Default dimension cap for realized modules.
    #[arg(long, global = true, env = DIM_CAP_ENV, default_value_t = yangtensor::yangian::DEFAULT_DIM_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial data of a module: boxes, contents, counts, Drinfeld roots.
    Diagram { input: PathBuf },
    /// Evaluate a combinatorial criterion on a module list.
    #[command(group(ArgGroup::new("criterion").required(true).args(["thm33", "thm34", "thm23"])))]
    Check {
        input: PathBuf,
        /// Sufficient irreducibility condition for arbitrary modules.
        #[arg(long)]
        thm33: bool,
        /// Irreducibility criterion for rectangular modules.
        #[arg(long)]
        thm34: bool,
        /// Invertibility of the intertwiner of a (reversed Young, Young) pair.
        #[arg(long)]
        thm23: bool,
    },
    /// Realize the tensor product and decide irreducibility by brute force.
    Oracle { input: PathBuf },
    /// Build and verify the intertwiner of two modules.
    Intertwiner {
        input: PathBuf,
        /// Include the matrix in the report.
        #[arg(long)]
        matrix: bool,
    },
    /// Sweep integer shifts of `h` and compare criteria with the oracles.
    Sweep {
        job: PathBuf,
        /// Inclusive window `a..b` (overrides the job file).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: SweepFormat,
    },
}

fn emit(text: &str) -> Result<(), CliError> {
    io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io {
        path: "<stdout>".into(),
        source: e,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Diagram { input } => {
            let specs = parse_specs(&read_input(&input)?)?;
            let reports = specs.iter().map(cmd_diagram).collect::<Result<Vec<_>, _>>()?;
            match reports.as_slice() {
                [one] => emit(&to_json(one)?),
                many => emit(&to_json(&many)?),
            }
        }
        Command::Check { input, thm33, thm34, .. } => {
            let specs = parse_specs(&read_input(&input)?)?;
            let criterion = if thm33 {
                Criterion::Thm33
            } else if thm34 {
                Criterion::Thm34
            } else {
                Criterion::Thm23
            };
            emit(&to_json(&cmd_check(&specs, criterion)?)?)
        }
        Command::Oracle { input } => {
            let specs = parse_specs(&read_input(&input)?)?;
            emit(&to_json(&cmd_oracle(&specs, cli.cap)?)?)
        }
        Command::Intertwiner { input, matrix } => {
            let specs = parse_specs(&read_input(&input)?)?;
            emit(&to_json(&cmd_intertwiner(&specs, cli.cap, matrix)?)?)
        }
        Command::Sweep { job, window, out, format } => {
            let job: SweepJob = serde_json::from_str(&read_input(&job)?)?;
            let window = window.as_deref().map(parse_window).transpose()?;
            // An explicit --cap or the environment variable wins over the job file.
            let cap_given = std::env::args().any(|a| a == "--cap" || a.starts_with("--cap="))
                || std::env::var_os(DIM_CAP_ENV).is_some();
            let table = run_sweep(&job, window, cap_given.then_some(cli.cap))?;
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    write_sweep(&table, format, BufWriter::new(file))?;
                }
                None => write_sweep(&table, format, io::stdout().lock())?,
            }
            if table.disagreements > 0 {
                return Err(CliError::Inconsistent(format!(
                    "{} sweep row(s) contradict a proven criterion",
                    table.disagreements
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            debug_assert!(code == 2 || code == EXIT_INCONSISTENT);
            ExitCode::from(code as u8)
        }
    }
}
