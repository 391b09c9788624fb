use std::io::Read;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use sierpinski_codes::constructions::{conjecture_bound, construct_and_check};
use sierpinski_codes::graph::export;
use sierpinski_codes::solver::{certify_closed_form, min_code_sierpinski, CertifyMethod};
use sierpinski_codes::verify::verify as check;
use sierpinski_codes::{Adjacency, Code, CodeKind, ExportFormat, SierpinskiGraph, SolveOptions, SolveStatus};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_INFEASIBLE: u8 = 4;

pub fn gen(n: usize, k: usize, format: ExportFormat) -> Result<u8> {
    let g = SierpinskiGraph::new(n, k)?;
    print!("{}", export(&g, format));
    Ok(EXIT_OK)
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

pub fn verify(n: usize, k: usize, kind: CodeKind, path: &str) -> Result<u8> {
    let g = SierpinskiGraph::new(n, k)?;
    let code = Code::parse(&g, &read_input(path)?)?;
    let report = check(&g, code.members(), kind);
    if report.valid {
        println!("VALID");
        Ok(EXIT_OK)
    } else {
        println!("{}", report.to_json(|u| g.label(u).to_string()));
        Ok(EXIT_INVALID)
    }
}

pub fn construct(n: usize, k: usize, kind: CodeKind) -> Result<u8> {
    let g = SierpinskiGraph::new(n, k)?;
    let (code, summary) = construct_and_check(&g, kind)?;
    print!("{}", code.to_file_string(&g));
    println!(
        "# size={} predicted={} verified={}",
        summary.size, summary.predicted, summary.verified
    );
    Ok(EXIT_OK)
}

pub struct SolveFlags {
    pub timeout: Option<f64>,
    pub node_budget: u64,
    pub deterministic: bool,
    pub jobs: usize,
    pub structural: bool,
}

pub fn solve(n: usize, k: usize, kind: CodeKind, flags: SolveFlags) -> Result<u8> {
    let g = SierpinskiGraph::new(n, k)?;
    let mut opts = SolveOptions::new(kind)
        .node_budget(flags.node_budget)
        .structural(flags.structural);
    if let Some(secs) = flags.timeout {
        if !(secs > 0.0 && secs.is_finite()) {
            bail!("--timeout must be a positive number of seconds");
        }
        opts = opts.time_budget(Duration::from_secs_f64(secs));
    }
    opts = opts.jobs(if flags.deterministic { 1 } else { flags.jobs });
    let result = min_code_sierpinski(&g, &opts)?;
    println!("{}", result.to_json(n, k, |u| g.label(u).to_string()));
    Ok(match result.status {
        SolveStatus::ProvedOptimal => EXIT_OK,
        SolveStatus::BudgetExhausted => EXIT_BUDGET,
        SolveStatus::Infeasible => EXIT_INFEASIBLE,
    })
}

pub fn conjecture(n: usize, k: usize) -> Result<u8> {
    let g = SierpinskiGraph::new(n, k)?;
    let bound = conjecture_bound(n, k)?;
    let report = certify_closed_form(n, k, CodeKind::Identifying, &SolveOptions::new(CodeKind::Identifying))?;
    let (minimum, source) = match (report.value, report.method) {
        (Some(v), CertifyMethod::BoundsMet) => (v, "bounds-met"),
        (Some(v), CertifyMethod::Searched) => (v, "searched"),
        (None, _) => (report.predicted, "predicted"),
    };
    let verdict = if minimum == bound { "ATTAINED" } else { "NOT-ATTAINED" };
    println!(
        "n={n} k={k} vertices={} max_degree={} bound={bound} id-min={minimum} source={source} {verdict}",
        g.vertex_count(),
        g.max_degree()
    );
    Ok(EXIT_OK)
}
