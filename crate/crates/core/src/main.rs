use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = hopf_galois::cli::configure_threads() {
        eprintln!("{e}");
        return ExitCode::from(2);
    }
    let outcome = hopf_galois::cli::run(std::env::args_os());
    let report = &outcome.report;
    match &report.body {
        // a document or help text stands alone; clap usage errors go to stderr
        Some(body) if report.entries().is_empty() => {
            if outcome.code == 0 {
                print!("{body}");
            } else {
                eprint!("{body}");
            }
        }
        body => {
            print!("{}", report.render(true));
            if let Some(body) = body {
                print!("{body}");
            }
        }
    }
    ExitCode::from(outcome.code as u8)
}
