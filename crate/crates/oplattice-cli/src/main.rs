//! `oplattice`: batch interface over the lattice orthogonal-polynomial
//! toolkit.
//!
//! Exit codes: 0 success, 2 invalid input, 3 mathematical degeneracy
//! (a regularity failure truncated the requested computation).

mod doc;

use clap::{Args, Parser, Subcommand};
use doc::{
    format_lattice_map, ClassifyOut, GramOut, JobDocument, LatticeDoc, OffDiagonalOut,
    ParaKrawtchoukOut, PkRunOut, Rat, RecurrenceOut, RegularityOut, SweepOut, SweepRecordOut,
    TableDoc, VerdictOut,
};
use oplattice::detector::{classify, Verdict};
use oplattice::error::Error as LibError;
use oplattice::lattice::Lattice;
use oplattice::para_krawtchouk::{pk_casestudy, pk_casestudy_on, ParaKrawtchoukParams};
use oplattice::pearson::RecurrenceEngine;
use oplattice::scalar::format_scalar;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "oplattice",
    version,
    about = "Classical orthogonal polynomials on lattices, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Input job document (JSON)
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Print the machine-readable document on stdout instead of the summary
    #[arg(long)]
    json: bool,
    /// Write the machine-readable document to a file
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Override the document's verification depth
    #[arg(long = "verify-to", value_name = "K")]
    verify_to: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Recurrence coefficients and regularity from Pearson data
    Recurrence(CommonArgs),
    /// Decide classicality of a recurrence table on a lattice
    Classify(ClassifyArgs),
    /// Run the para-Krawtchouk case study
    ParaKrawtchouk(CommonArgs),
    /// Classify a grid of parameters against a list of lattices
    Sweep(CommonArgs),
}

/// Human summary + machine document + exit code.
struct Outcome {
    summary: String,
    document: String,
    code: u8,
}

fn input_error(msg: impl Into<String>) -> String {
    msg.into()
}

fn read_job(path: &Path) -> Result<JobDocument, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_error(format!("invalid job document: {e}")))
}

fn render<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("output serializes");
    s.push('\n');
    s
}

fn require_lattice(job: &JobDocument) -> Result<Lattice, String> {
    job.lattice
        .as_ref()
        .ok_or_else(|| input_error("document needs a \"lattice\" section"))?
        .to_lattice()
}

fn cmd_recurrence(job: &JobDocument) -> Result<Outcome, String> {
    let lattice = require_lattice(job)?;
    let pd = job
        .pearson
        .as_ref()
        .ok_or_else(|| input_error("document needs a \"pearson\" section"))?
        .to_pearson()?;
    let n_max = job
        .n_max
        .ok_or_else(|| input_error("document needs \"n_max\""))?;
    if n_max == 0 {
        return Err(input_error("n_max must be at least 1"));
    }

    let engine = RecurrenceEngine::new(&pd, &lattice);
    let report = engine.regularity(n_max - 1);
    let stop = report.first_failure.as_ref().map(|f| f.n).unwrap_or(n_max);

    let mut b = Vec::new();
    let mut c = Vec::new();
    let mut truncated_at = report.first_failure.as_ref().map(|f| f.n);
    for n in 0..stop {
        match engine.pair(n) {
            Ok((bn, cn)) => {
                b.push(Rat(bn));
                c.push(Rat(cn));
            }
            Err(LibError::DivisionByZeroInFormula { n }) => {
                truncated_at = Some(n);
                break;
            }
            Err(e) => return Err(e.to_string()),
        }
    }

    let summary = match truncated_at {
        None => format!(
            "Computed {n_max} recurrence pairs; regular through n = {}.",
            n_max - 1
        ),
        Some(t) => format!(
            "Regularity fails at n = {t}; emitted {} pairs before truncation.",
            b.len()
        ),
    };
    let out = RecurrenceOut {
        command: "recurrence",
        table: TableDoc { b, c },
        regularity: RegularityOut::from_report(&report),
        truncated_at,
    };
    Ok(Outcome {
        summary,
        document: render(&out),
        code: if truncated_at.is_some() { 3 } else { 0 },
    })
}

fn verdict_summary(verdict: &Verdict, lattice: &Lattice) -> String {
    let xs = format_lattice_map(lattice);
    match verdict {
        Verdict::Classical { pd, .. } => format!(
            "The sequence is classical for x(s) = {xs}\n  a = {}\n  b = {}\n  c = {}\n  e = {}",
            format_scalar(&pd.a),
            format_scalar(&pd.b),
            format_scalar(&pd.c),
            format_scalar(&pd.e)
        ),
        Verdict::NotClassical { .. } => {
            format!("The sequence is not classical for x(s) = {xs}")
        }
        Verdict::Degenerate { reason } => {
            format!("The sequence is degenerate for x(s) = {xs} ({reason})")
        }
    }
}

fn cmd_classify(job: &JobDocument, flag_verify_to: Option<usize>) -> Result<Outcome, String> {
    let lattice = require_lattice(job)?;
    let table = job
        .table
        .as_ref()
        .ok_or_else(|| input_error("document needs a \"table\" section"))?
        .to_table()?;
    let verify_to = flag_verify_to.or(job.verify_to).unwrap_or(12);
    let verdict = classify(&table, &lattice, verify_to).map_err(|e| e.to_string())?;

    let out = ClassifyOut {
        command: "classify",
        verdict: VerdictOut::from_verdict(&verdict),
    };
    Ok(Outcome {
        summary: verdict_summary(&verdict, &lattice),
        document: render(&out),
        code: 0,
    })
}

fn cmd_para_krawtchouk(job: &JobDocument) -> Result<Outcome, String> {
    let pk = job
        .pk
        .as_ref()
        .ok_or_else(|| input_error("document needs a \"pk\" section"))?;
    let params = ParaKrawtchoukParams::new(pk.n, pk.gamma.0.clone()).map_err(|e| e.to_string())?;
    let report = match &job.lattice {
        Some(doc) => pk_casestudy_on(&params, &[doc.to_lattice()?]),
        None => pk_casestudy(&params),
    };

    let mut summary_lines = Vec::new();
    let runs: Vec<PkRunOut> = report
        .runs
        .iter()
        .map(|(lattice, verdict)| {
            let v = match verdict {
                Some(v) => {
                    summary_lines.push(verdict_summary(v, lattice));
                    VerdictOut::from_verdict(v)
                }
                None => {
                    summary_lines.push(format!(
                        "Classification skipped for x(s) = {} (table too short)",
                        format_lattice_map(lattice)
                    ));
                    VerdictOut::not_evaluated("table too short to classify (N = 1)")
                }
            };
            PkRunOut {
                lattice: LatticeDoc::from_lattice(lattice),
                verdict: v,
            }
        })
        .collect();
    summary_lines.push(format!(
        "Sum of weights = {}",
        format_scalar(&report.weight_sum)
    ));
    summary_lines.push(format!(
        "Gram matrix diagonal: {}",
        if report.gram.orthogonal { "yes" } else { "NO" }
    ));

    let out = ParaKrawtchoukOut {
        command: "para-krawtchouk",
        n: params.n(),
        gamma: Rat(params.gamma().clone()),
        nodes: report.functional.nodes().iter().cloned().map(Rat).collect(),
        weights: report
            .functional
            .weights()
            .iter()
            .cloned()
            .map(Rat)
            .collect(),
        weight_sum: Rat(report.weight_sum.clone()),
        table: TableDoc {
            b: report.table.b_slice().iter().cloned().map(Rat).collect(),
            c: report.table.c_slice().iter().cloned().map(Rat).collect(),
        },
        runs,
        gram: GramOut {
            orthogonal: report.gram.orthogonal,
            norm_ratios_ok: report.gram.norm_ratios_ok,
            first_off_diagonal: report.gram.first_off_diagonal.as_ref().map(|(n, m, v)| {
                OffDiagonalOut {
                    n: *n,
                    m: *m,
                    value: Rat(v.clone()),
                }
            }),
        },
    };
    Ok(Outcome {
        summary: summary_lines.join("\n"),
        document: render(&out),
        code: 0,
    })
}

fn cmd_sweep(job: &JobDocument) -> Result<Outcome, String> {
    let grid = job
        .grid
        .as_ref()
        .ok_or_else(|| input_error("document needs a \"grid\" section"))?;

    // validate the whole grid before running any point
    let mut params = Vec::new();
    for &n in &grid.n {
        for gamma in &grid.gamma {
            params.push(
                ParaKrawtchoukParams::new(n, gamma.0.clone())
                    .map_err(|e| input_error(format!("invalid grid point: {e}")))?,
            );
        }
    }
    let lattices: Vec<Lattice> = grid
        .lattices
        .iter()
        .map(|d| d.to_lattice())
        .collect::<Result<_, _>>()?;

    let mut records = Vec::new();
    let mut summary_lines = Vec::new();
    for p in &params {
        let table = oplattice::para_krawtchouk::pk_table(p);
        for lattice in &lattices {
            let verdict = if p.n() >= 3 {
                Some(
                    classify(&table, lattice, p.n() as usize - 1)
                        .map_err(|e| input_error(e.to_string()))?,
                )
            } else {
                None
            };
            let v = match &verdict {
                Some(v) => VerdictOut::from_verdict(v),
                None => VerdictOut::not_evaluated("table too short to classify (N = 1)"),
            };
            summary_lines.push(format!(
                "N = {}, gamma = {}, x(s) = {}: {}",
                p.n(),
                format_scalar(p.gamma()),
                format_lattice_map(lattice),
                v.verdict
            ));
            records.push(SweepRecordOut {
                n: p.n(),
                gamma: Rat(p.gamma().clone()),
                lattice: LatticeDoc::from_lattice(lattice),
                verdict: v,
            });
        }
    }
    let out = SweepOut {
        command: "sweep",
        records,
    };
    Ok(Outcome {
        summary: if summary_lines.is_empty() {
            "Empty grid; no records.".to_string()
        } else {
            summary_lines.join("\n")
        },
        document: render(&out),
        code: 0,
    })
}

fn run() -> Result<(Outcome, CommonArgs), String> {
    let cli = Cli::parse();
    let (outcome, common) = match cli.command {
        Command::Recurrence(common) => (cmd_recurrence(&read_job(&common.input)?)?, common),
        Command::Classify(args) => (
            cmd_classify(&read_job(&args.common.input)?, args.verify_to)?,
            args.common,
        ),
        Command::ParaKrawtchouk(common) => {
            (cmd_para_krawtchouk(&read_job(&common.input)?)?, common)
        }
        Command::Sweep(common) => (cmd_sweep(&read_job(&common.input)?)?, common),
    };
    Ok((outcome, common))
}

fn main() -> ExitCode {
    match run() {
        Ok((outcome, common)) => {
            if let Some(path) = &common.out {
                if let Err(e) = std::fs::write(path, &outcome.document) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if common.json {
                print!("{}", outcome.document);
            } else {
                println!("{}", outcome.summary);
            }
            ExitCode::from(outcome.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
