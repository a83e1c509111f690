use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tenscat::args::Cli;
use tenscat::{run, JobSpec, Status};

fn main() -> ExitCode {
    // clap prints usage and exits with status 2 on parse errors
    let spec = JobSpec::from(Cli::parse());
    let report = run(&spec);
    let text = report.render(spec.format);
    if report.status == Status::UsageError {
        eprint!("{text}");
    } else {
        let _ = std::io::stdout().lock().write_all(text.as_bytes());
    }
    ExitCode::from(report.status.code())
}
