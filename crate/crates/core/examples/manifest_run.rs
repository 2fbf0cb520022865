//! Loads a manifest (a path or a bundled name) and runs its suites as JSON.

use lightframe::cli::{catalog, emit_report, run_suites, Format};

fn main() -> lightframe::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "example-4-2.lm".into());
    let m = catalog::resolve(&name)?;
    let suites = if m.suites.is_empty() { vec!["all".to_string()] } else { m.suites.clone() };
    let rep = run_suites(&m, &suites)?;
    print!("{}", emit_report(&rep, Format::Json));
    eprintln!("all passed: {}", rep.all_passed());
    Ok(())
}
