use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use prodis_cli::{catalog, catalog_lines, execute, CliError, ExperimentConfig};

#[derive(Parser)]
#[command(name = "prodis", version, about = "Simulate product disintegrations and check their limit laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and write its CSV, SVG and report files.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Override one configuration key, as key=value.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
    },
    /// List the experiment catalog.
    List {
        #[arg(long)]
        json_lines: bool,
    },
}

fn run(config: PathBuf, set: Vec<String>) -> Result<bool, CliError> {
    let text = fs::read_to_string(&config).map_err(|e| CliError::io(&config, e))?;
    let config = ExperimentConfig::load(&text, &set)?;
    let (report, paths) = execute(&config)?;
    for m in &report.metrics {
        println!(
            "{} {}: value={} target={} band={}",
            if m.pass { "PASS" } else { "FAIL" },
            m.name,
            m.value,
            m.target,
            m.band
        );
    }
    println!("wrote {}", paths.csv.display());
    println!("wrote {}", paths.svg.display());
    println!("wrote {}", paths.report.display());
    println!("{}: {}", report.experiment, if report.pass() { "pass" } else { "fail" });
    Ok(report.pass())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::List { json_lines } => {
            let lines: Vec<String> = if json_lines {
                catalog().iter().map(|e| serde_json::to_string(e).expect("catalog serializes")).collect()
            } else {
                catalog_lines()
            };
            let mut out = std::io::stdout().lock();
            for line in lines {
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Command::Run { config, set } => match run(config, set) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
    }
}
