use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use fano_verify::cases;
use fano_verify::Error;

const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact-arithmetic verification suite for the degree bound -K^3 <= 72 of
/// canonical Gorenstein Fano threefolds.
#[derive(Debug, Parser)]
#[command(name = "fano-verify", version)]
struct Cli {
    /// `all`, a case id, or a dotted id prefix such as `sublemma54`.
    #[arg(default_value = "all")]
    selector: String,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Exit with status 2 when any case is flagged.
    #[arg(long)]
    strict_flags: bool,

    /// Print `id<TAB>anchor` for every registered case and exit.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if cli.list {
        let mut out = std::io::stdout().lock();
        for spec in cases::REGISTRY {
            if writeln!(out, "{}\t{}", spec.id, spec.anchor).is_err() {
                return ExitCode::from(EXIT_IO);
            }
        }
        return ExitCode::SUCCESS;
    }

    let report = match cases::run(&cli.selector) {
        Ok(r) => r,
        Err(Error::UnknownSelector { selector, valid }) => {
            eprintln!("error: unknown case selector '{selector}'");
            eprintln!("valid case ids:");
            for id in valid {
                eprintln!("  {id}");
            }
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered).map_err(|e| (path.display().to_string(), e)),
        None => std::io::stdout()
            .lock()
            .write_all(rendered.as_bytes())
            .map_err(|e| ("stdout".to_string(), e)),
    };
    if let Err((dest, e)) = written {
        eprintln!("error: cannot write report to {dest}: {e}");
        return ExitCode::from(EXIT_IO);
    }
    ExitCode::from(report.exit_code(cli.strict_flags) as u8)
}
