use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncsmooth::front::{self, emit_report, now_timestamp, Format, FIXED_TIMESTAMP};
use ncsmooth::rewrite::{estimate_gkdim, ideal_quotient_dims, PresentedAlgebra, RewriteSystem};
use ncsmooth::verify::{smoothness_report, Verdict};
use ncsmooth::zoo::{self, Subject};

#[derive(Parser)]
#[command(name = "ncsmooth", version, about = "Degree-bounded smoothness checks for twisted calculi")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List built-in presets.
    List,
    /// Print a subject as a spec file, followed by its oriented rules.
    Show { subject: String },
    /// Normal form of an expression.
    Nf {
        subject: String,
        #[arg(long)]
        expr: String,
    },
    /// Resolve all ambiguities up to a degree.
    Confluence {
        subject: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Irreducible-word counts per degree.
    Hilbert {
        subject: String,
        #[arg(long)]
        max_degree: u32,
        /// Also compute dimensions by exact rank of the ideal.
        #[arg(long)]
        oracle: bool,
    },
    /// Estimate the GK dimension from the Hilbert function.
    Gkdim {
        subject: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// Run every smoothness check and print the report.
    Check {
        subject: String,
        #[arg(long)]
        max_degree: u32,
        /// Also write the JSON report to this path.
        #[arg(long)]
        report: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        /// Write the fixed epoch timestamp instead of the current time.
        #[arg(long)]
        fixed_timestamp: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn algebra_of(subject: &Subject) -> Result<&PresentedAlgebra, String> {
    subject
        .algebra()
        .ok_or_else(|| format!("`{}` is a metadata record without relations", subject.name()))
}

fn rewrite_system(subject: &Subject) -> Result<RewriteSystem, String> {
    RewriteSystem::build(algebra_of(subject)?).map_err(|e| e.to_string())
}

fn list_u64(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn run(command: Command) -> Result<u8, String> {
    let mut out = std::io::stdout().lock();
    let resolve = |s: &str| front::resolve_subject(s).map_err(|e| e.to_string());
    match command {
        Command::List => {
            for p in zoo::CATALOG {
                writeln!(out, "{p}").map_err(|e| e.to_string())?;
            }
        }
        Command::Show { subject } => {
            let subject = resolve(&subject)?;
            write!(out, "{}", front::serialize_spec(&subject)).map_err(|e| e.to_string())?;
            if let Some(alg) = subject.algebra() {
                let rs = RewriteSystem::build(alg).map_err(|e| e.to_string())?;
                writeln!(out, "\n# oriented rules ({})", rs.order()).map_err(|e| e.to_string())?;
                for r in rs.rules() {
                    writeln!(out, "# {}", r.display(rs.gens())).map_err(|e| e.to_string())?;
                }
            }
        }
        Command::Nf { subject, expr } => {
            let subject = resolve(&subject)?;
            let rs = rewrite_system(&subject)?;
            let p = front::parse_poly(&expr, rs.gens()).map_err(|e| format!("--expr: {e}"))?;
            let nf = rs.normal_form(&p).map_err(|e| e.to_string())?;
            writeln!(out, "{nf}").map_err(|e| e.to_string())?;
        }
        Command::Confluence { subject, max_degree } => {
            let subject = resolve(&subject)?;
            let rs = rewrite_system(&subject)?;
            let d = max_degree.unwrap_or_else(|| 2 * rs.max_rule_degree().max(1) - 1);
            let report = rs.check_confluence(d).map_err(|e| e.to_string())?;
            for a in &report.ambiguities {
                writeln!(
                    out,
                    "{:?} {} (rules {}, {}): {} | {} -> {}",
                    a.kind,
                    a.word.display(rs.gens()),
                    a.rules.0 + 1,
                    a.rules.1 + 1,
                    a.left,
                    a.right,
                    if a.resolved { "resolved" } else { "UNRESOLVED" }
                )
                .map_err(|e| e.to_string())?;
            }
            writeln!(
                out,
                "ambiguities: {}, unresolved: {}, all_resolved = {}",
                report.ambiguities.len(),
                report.unresolved_count(),
                report.all_resolved
            )
            .map_err(|e| e.to_string())?;
        }
        Command::Hilbert {
            subject,
            max_degree,
            oracle,
        } => {
            let subject = resolve(&subject)?;
            let alg = algebra_of(&subject)?;
            let rs = rewrite_system(&subject)?;
            let exact = rs
                .check_confluence(2 * rs.max_rule_degree().max(1))
                .map_err(|e| e.to_string())?
                .all_resolved;
            let h = rs.hilbert_function(max_degree);
            let note = if exact { "" } else { " (upper bound only)" };
            writeln!(out, "irreducible: {}{note}", list_u64(&h)).map_err(|e| e.to_string())?;
            if oracle {
                let o = ideal_quotient_dims(alg, max_degree).map_err(|e| e.to_string())?;
                writeln!(out, "oracle:      {}", list_u64(&o)).map_err(|e| e.to_string())?;
            }
        }
        Command::Gkdim { subject, max_degree } => {
            let subject = resolve(&subject)?;
            let rs = rewrite_system(&subject)?;
            let h = rs.hilbert_function(max_degree);
            writeln!(out, "dimensions: {}", list_u64(&h)).map_err(|e| e.to_string())?;
            match estimate_gkdim(&h).map_err(|e| e.to_string())? {
                Some(g) => writeln!(out, "gkdim estimate: {g}"),
                None => writeln!(out, "gkdim estimate: none"),
            }
            .map_err(|e| e.to_string())?;
        }
        Command::Check {
            subject,
            max_degree,
            report,
            format,
            fixed_timestamp,
        } => {
            let subject = resolve(&subject)?;
            let rep = smoothness_report(&subject, max_degree).map_err(|e| e.to_string())?;
            let ts = if fixed_timestamp {
                FIXED_TIMESTAMP.to_string()
            } else {
                now_timestamp()
            };
            let fmt = match format {
                OutFormat::Text => Format::Text,
                OutFormat::Json => Format::Json,
            };
            out.write_all(&emit_report(&rep, fmt, &ts)).map_err(|e| e.to_string())?;
            if let Some(path) = report {
                std::fs::write(&path, emit_report(&rep, Format::Json, &ts)).map_err(|e| format!("{path}: {e}"))?;
            }
            return Ok(match rep.verdict {
                Verdict::NotSmooth | Verdict::AxiomFailure => 2,
                Verdict::SmoothEvidence(_) | Verdict::Inconclusive => 0,
            });
        }
    }
    Ok(0)
}
