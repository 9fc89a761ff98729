mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use lie_ext::random::seeded_rng;
use lie_ext::{Error, Result};

use args::{Cli, Command, DemoCommand, Format, VerifyCommand};
use report::Report;

const EXIT_CERTIFICATE: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn command_line(cli: &Cli) -> String {
    match &cli.command {
        Command::Info { src } => format!("info {src}"),
        Command::Der { src } => format!("der {src}"),
        Command::Nilradical { src } => format!("nilradical {src}"),
        Command::Cartan { src } => format!("cartan {src}"),
        Command::Torus { src } => format!("torus {src}"),
        Command::Extend {
            by: Some(p), src, ..
        } => format!("extend --by {} {src}", p.display()),
        Command::Extend { src, .. } => format!("extend --standard {src}"),
        Command::Split { src } => format!("split {src}"),
        Command::Fingerprint { src } => format!("fingerprint {src}"),
        Command::Verify {
            check: VerifyCommand::RankBound { src },
        } => format!("verify rank-bound {src}"),
        Command::Verify {
            check: VerifyCommand::Togo { src_a, src_b },
        } => format!("verify togo {src_a} {src_b}"),
        Command::Demo {
            demo: DemoCommand::Snobl,
        } => "demo snobl".into(),
    }
}

fn run(cli: &Cli, report: &mut Report) -> Result<()> {
    let mut rng = seeded_rng(cli.seed);
    match &cli.command {
        Command::Info { src } => commands::info(report, src),
        Command::Der { src } => commands::der(report, src),
        Command::Nilradical { src } => commands::nilradical(report, src, &mut rng),
        Command::Cartan { src } => commands::cartan(report, src, &mut rng),
        Command::Torus { src } => commands::torus(report, src, &mut rng),
        Command::Extend { by, src, .. } => commands::extend(report, src, by.as_deref(), &mut rng),
        Command::Split { src } => commands::split(report, src, &mut rng),
        Command::Fingerprint { src } => commands::fingerprint_cmd(report, src),
        Command::Verify { check } => match check {
            VerifyCommand::RankBound { src } => commands::rank_bound(report, src),
            VerifyCommand::Togo { src_a, src_b } => commands::togo(report, src_a, src_b),
        },
        Command::Demo {
            demo: DemoCommand::Snobl,
        } => commands::snobl(report),
    }
}

/// Failed internal certificates and violated expectations are mathematical failures;
/// everything else is a problem with the input.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Contract { .. }
        | Error::NilradicalMismatch { .. }
        | Error::InvariantMismatch { .. } => EXIT_CERTIFICATE,
        _ => EXIT_INPUT,
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(command_line(&cli));
    let start = Instant::now();
    let outcome = run(&cli, &mut report);
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    if let Err(e) = outcome {
        match &e {
            Error::UnknownEntry(_) => eprintln!("error: {e}, and no file exists at that path"),
            _ => eprintln!("error: {e}"),
        }
        return ExitCode::from(exit_code(&e));
    }
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    if report.all_certified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CERTIFICATE)
    }
}
