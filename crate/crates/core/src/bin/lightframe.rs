use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lightframe::cli::{catalog, emit_report, run_suites, Format, SUITES};

#[derive(Parser)]
#[command(name = "lightframe", version, about = "Exact checks for lightlike hypersurfaces of indefinite S-manifolds")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run check suites on a manifest.
    Check {
        /// Manifest path, or the name of a bundled manifest.
        manifest: String,
        /// Suite to run; defaults to the manifest's [checks] suites, else all.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value = "human")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<String>,
    },
    /// List the available suites.
    Suites,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.cmd {
        Cmd::Suites => {
            for (name, about) in SUITES {
                println!("{name:<14} {about}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Check { manifest, suite, format, output } => {
            let m = match catalog::resolve(&manifest) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let suites = match suite {
                Some(s) => vec![s],
                None if m.suites.is_empty() => vec!["all".to_string()],
                None => m.suites.clone(),
            };
            let rep = match run_suites(&m, &suites) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let text = emit_report(&rep, format);
            match output {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, &text) {
                        eprintln!("error: cannot write {p}: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if rep.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
