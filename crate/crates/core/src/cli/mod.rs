//! Command-line front end.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::hgpipeline::{self, Target, VerificationReport, LEMMA_IDS};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when any check fails.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for malformed invocations and out-of-range parameters.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "hgchow", version, about = "Integral Chow ring of the stack of hyperelliptic curves of even genus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = one per core)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Include certificate bodies
    #[arg(long, action = clap::ArgAction::Set)]
    pub certificates: Option<bool>,
    /// Include wall-clock timings (makes output run-dependent)
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive the presentation of A^*(H_g)
    Presentation {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Check one lemma, or all of them
    Verify {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        genus: Option<u32>,
        #[arg(long = "N", id = "n")]
        n: Option<u32>,
        /// Lemma id, or `all`
        #[arg(long, default_value = "all")]
        lemma: String,
        #[command(flatten)]
        output: Output,
    },
    /// Order of the Picard group
    Picard {
        #[arg(long)]
        genus: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Graded pieces of A^*(H_g)
    Table {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[command(flatten)]
        output: Output,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidGenus(_)
        | Error::UnknownLemma(_)
        | Error::IndexOutOfRange { .. }
        | Error::InvalidParameter(_)
        | Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

struct Rendered {
    body: String,
    ok: bool,
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_reports(mut reports: Vec<VerificationReport>, output: &Output) -> Rendered {
    let ok = reports.iter().all(VerificationReport::is_verified);
    let certificates = output.certificates.unwrap_or(true);
    for r in &mut reports {
        if !output.timing {
            r.timing_ms = None;
        }
        if !certificates {
            r.witness.strip_certificates();
        }
    }
    let body = match output.format {
        Format::Json => to_json(&reports),
        Format::Text => render::reports_text(&reports, certificates && reports.len() == 1),
        Format::Latex => render::reports_latex(&reports),
    };
    Rendered { body, ok }
}

fn execute(command: &Command) -> Result<Rendered, Error> {
    match command {
        Command::Presentation {
            genus,
            max_degree,
            output,
        } => {
            let mut p = hgpipeline::presentation(*genus, *max_degree)?;
            if !output.certificates.unwrap_or(false) {
                p.strip_certificates();
            }
            let body = match output.format {
                Format::Json => to_json(&p),
                Format::Text => render::presentation_text(&p),
                Format::Latex => render::presentation_latex(&p),
            };
            Ok(Rendered { body, ok: true })
        }
        Command::Verify { genus, n, lemma, output } => {
            let target = match (genus, n) {
                (Some(g), _) => Target::Genus(*g),
                (None, Some(n)) => Target::N(*n),
                (None, None) => return Err(Error::InvalidParameter("--genus or --N is required".into())),
            };
            let reports = if lemma == "all" {
                match target {
                    Target::Genus(g) => hgpipeline::verify_all(g, output.jobs)?,
                    Target::N(n) => {
                        let work: Vec<(Target, &str)> = LEMMA_IDS
                            .iter()
                            .filter(|id| hgpipeline::applies(id, Target::N(n)))
                            .map(|id| (Target::N(n), *id))
                            .collect();
                        if work.is_empty() {
                            return Err(Error::InvalidParameter(format!("no lemma applies at N = {n}")));
                        }
                        hgpipeline::run_jobs(output.jobs, work)?
                    }
                }
            } else {
                hgpipeline::run_jobs(output.jobs, vec![(target, lemma.as_str())])?
            };
            Ok(render_reports(reports, output))
        }
        Command::Picard { genus, output } => {
            let order = hgpipeline::picard(*genus)?;
            let body = match output.format {
                Format::Json => to_json(&serde_json::json!({ "genus": genus, "picard_order": order })),
                Format::Text => format!("Pic = Z/{order}\n"),
                Format::Latex => format!(
                    "\\[ \\operatorname{{Pic}}(\\mathcal{{H}}_{{{genus}}}) = \\mathbb{{Z}}/{order} \\]\n"
                ),
            };
            Ok(Rendered { body, ok: true })
        }
        Command::Table {
            genus,
            max_degree,
            output,
        } => {
            let graded = hgpipeline::chow_table(*genus, *max_degree)?;
            let body = match output.format {
                Format::Json => to_json(&serde_json::json!({ "genus": genus, "graded": graded })),
                Format::Text => render::table_text(&graded),
                Format::Latex => render::table_latex(&graded),
            };
            Ok(Rendered { body, ok: true })
        }
    }
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Presentation { output, .. }
        | Command::Verify { output, .. }
        | Command::Picard { output, .. }
        | Command::Table { output, .. } => output,
    }
}

/// Runs the command line and returns the process exit status. Output goes
/// to `stdout` (or `--out`), diagnostics to `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let rendered = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Error::VerificationFailed(report) = &e {
                let _ = stderr.write_all(render::reports_text(std::slice::from_ref(report), true).as_bytes());
            }
            return exit_code(&e);
        }
    };
    let output = output_of(&cli.command);
    let written = match &output.out {
        Some(path) => std::fs::write(path, rendered.body.as_bytes()),
        None => stdout.write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_FAILED;
    }
    if rendered.ok {
        EXIT_OK
    } else {
        let _ = writeln!(stderr, "error: verification failed");
        EXIT_FAILED
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("hgchow").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn presentation_text() {
        let (code, out, _) = run_capture(&["presentation", "--genus", "2", "--format", "text"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "Z[c1,c2]/(10*c1, 2*c1^2 - 24*c2)");
        assert_eq!(lines[1], "Pic = Z/10");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["presentation", "--genus", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["presentation"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["presentation", "--genus", "two"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--genus", "2", "--lemma", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--genus", "2", "--N", "6"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_single_lemma_json() {
        let (code, out, _) = run_capture(&["verify", "--N", "6", "--lemma", "eq-th0", "--format", "json", "--jobs", "1"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["lemma"], "eq-th0");
        assert_eq!(v[0]["status"], "verified");
        assert_eq!(v[0]["params"]["N"], 6);
        assert!(v[0].get("timing_ms").is_none());
    }

    #[test]
    fn picard_and_table() {
        let (code, out, _) = run_capture(&["picard", "--genus", "4"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "Pic = Z/18\n"));
        let (code, out, _) = run_capture(&["table", "--genus", "2", "--max-degree", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "A^0 = Z\nA^1 = Z/10\nA^2 = Z/2 + Z/120\n");
    }
}
