use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod error;
mod generate;
mod job;
mod run;
mod sample;

use error::Failure;
use run::Format;

/// Exact rational PH curves with rational arc length.
#[derive(Parser)]
#[command(name = "phcurves", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    /// Job file (JSON).
    #[arg(long)]
    job: Option<PathBuf>,
    /// Output directory; artifacts go to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Restrict the artifacts written (`sample` supports csv and svg).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Base for relative paths.
    #[arg(long, env = "PHCURVES_WORKDIR")]
    workdir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Writes a random basis job.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "PHCURVES_WORKDIR")]
        workdir: Option<PathBuf>,
    },
}

fn resolve(workdir: Option<&Path>, p: &Path) -> PathBuf {
    match workdir {
        Some(w) if p.is_relative() => w.join(p),
        _ => p.to_path_buf(),
    }
}

fn emit(artifacts: &[(String, Vec<u8>)], out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for (name, bytes) in artifacts {
                fs::write(dir.join(name), bytes)?;
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            for (_, bytes) in artifacts {
                stdout.write_all(bytes)?;
            }
        }
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<(), Failure> {
    if let Some(Command::Generate { seed, out, workdir }) = cli.command {
        let job = generate::generate(seed);
        let mut bytes = serde_json::to_vec_pretty(&job).map_err(Failure::invalid)?;
        bytes.push(b'\n');
        let out = out.map(|o| resolve(workdir.as_deref(), &o));
        return emit(&[("job.json".to_string(), bytes)], out.as_deref());
    }
    let workdir = cli.workdir.as_deref();
    let path = cli
        .job
        .ok_or_else(|| Failure::invalid("--job is required"))?;
    let path = resolve(workdir, &path);
    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    let job: job::Job = serde_json::from_str(&text)
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    let artifacts = run::run(&job, cli.format)?;
    let out = cli.out.map(|o| resolve(workdir, &o));
    emit(&artifacts, out.as_deref())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
