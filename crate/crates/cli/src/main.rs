use std::process::ExitCode;

use bbw_cli::{run_checks, CheckId};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "verify", version, about = "Verify cohomology and moduli counts for cubics and their Fano schemes")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Smallest d (the cubic lives in P^{d+1}).
    #[arg(long, default_value_t = 3)]
    d_min: usize,

    /// Largest d.
    #[arg(long, default_value_t = 12)]
    d_max: usize,

    /// Run only these checks; repeatable. Defaults to the whole catalog.
    #[arg(long = "check", value_enum)]
    checks: Vec<CheckId>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Exit with code 3 when a computed value contradicts a reference value.
    #[arg(long)]
    strict_paper: bool,

    /// Leave the timestamp out so that reruns are byte-identical.
    #[arg(long)]
    no_timestamp: bool,

    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the check catalog.
    ListChecks {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn list_checks(format: Format) {
    match format {
        Format::Text => {
            for c in CheckId::ALL {
                let tag = if c.informational() { " [informational]" } else { "" };
                println!("{:<18} {}{tag}", c.id(), c.description());
            }
        }
        Format::Json => {
            let entries: Vec<_> = CheckId::ALL
                .iter()
                .map(|c| json!({"id": c.id(), "description": c.description(), "informational": c.informational()}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).expect("catalog serializes"));
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(Command::ListChecks { format }) = cli.command {
        list_checks(format);
        return ExitCode::SUCCESS;
    }

    let timestamp = (!cli.no_timestamp).then(|| chrono::Utc::now().to_rfc3339());
    let report = match run_checks(cli.d_min, cli.d_max, &cli.checks, cli.strict_paper, cli.jobs, timestamp) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code(cli.strict_paper))
}
