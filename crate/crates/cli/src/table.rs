use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use sierpinski_codes::constructions::{construct_and_check, predicted_size};
use sierpinski_codes::solver::min_code_sierpinski;
use sierpinski_codes::{Adjacency, CodeKind, SierpinskiGraph, SolveOptions, SolveStatus};

use crate::commands::EXIT_OK;

const TABLE_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub kind: CodeKind,
    pub predicted: usize,
    pub constructed: Option<usize>,
    pub solved: Option<usize>,
    pub status: &'static str,
}

/// `"3"`, `"2,3,5"`, `"2-4"` or a mix such as `"2-3,6"`.
pub fn parse_range(spec: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim) {
        match part.split_once('-') {
            Some((lo, hi)) => {
                let lo: usize = lo.trim().parse().with_context(|| format!("bad range `{part}`"))?;
                let hi: usize = hi.trim().parse().with_context(|| format!("bad range `{part}`"))?;
                if lo > hi {
                    bail!("empty range `{part}`");
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().with_context(|| format!("bad value `{part}`"))?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn build_row(n: usize, k: usize, kind: CodeKind, solve_cap: Option<usize>) -> Result<TableRow> {
    let predicted = predicted_size(kind, n, k)?;
    let g = SierpinskiGraph::new(n, k)?;
    let (constructed, verified) = match construct_and_check(&g, kind) {
        Ok((code, summary)) => (Some(code.len()), summary.verified),
        Err(_) => (None, false),
    };
    let within_cap = solve_cap.is_some_and(|cap| g.vertex_count() <= cap);
    let (solved, solve_status) = if within_cap {
        let r = min_code_sierpinski(&g, &SolveOptions::new(kind).node_budget(TABLE_NODE_BUDGET))?;
        let size = (r.status == SolveStatus::ProvedOptimal).then_some(r.min_size).flatten();
        (size, Some(r.status))
    } else {
        (None, None)
    };

    let consistent = constructed.is_none_or(|c| c == predicted && verified) && solved.is_none_or(|s| s == predicted);
    let status = match solve_status {
        _ if !consistent => "MISMATCH",
        Some(SolveStatus::ProvedOptimal) => "proved",
        Some(SolveStatus::BudgetExhausted) => "budget",
        Some(SolveStatus::Infeasible) => "infeasible",
        None if constructed.is_some() => "verified",
        None => "formula",
    };
    Ok(TableRow {
        n,
        k,
        kind,
        predicted,
        constructed,
        solved,
        status,
    })
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn render(rows: &[TableRow], format: &str) -> Result<String> {
    let header = ["n", "k", "kind", "predicted", "constructed", "solved", "status"];
    let fields = |r: &TableRow| {
        [
            r.n.to_string(),
            r.k.to_string(),
            r.kind.to_string(),
            r.predicted.to_string(),
            cell(r.constructed),
            cell(r.solved),
            r.status.to_string(),
        ]
    };
    let mut out = String::new();
    match format {
        "csv" => {
            writeln!(out, "{}", header.join(","))?;
            for r in rows {
                writeln!(out, "{}", fields(r).join(","))?;
            }
        }
        "markdown" | "md" => {
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(header.len()))?;
            for r in rows {
                writeln!(out, "| {} |", fields(r).join(" | "))?;
            }
        }
        other => bail!("unknown table format `{other}` (expected csv or markdown)"),
    }
    Ok(out)
}

pub fn run(n_spec: &str, k_spec: &str, kinds: &str, format: &str, solve_cap: Option<usize>) -> Result<u8> {
    let ns = parse_range(n_spec)?;
    let ks = parse_range(k_spec)?;
    let kinds = kinds
        .split(',')
        .map(|s| s.trim().parse::<CodeKind>())
        .collect::<Result<Vec<_>, _>>()?;
    if ns.is_empty() || ks.is_empty() || kinds.is_empty() {
        bail!("ranges must be nonempty");
    }
    // validate the format before doing any work
    render(&[], format)?;
    let mut rows = Vec::new();
    for &n in &ns {
        for &k in &ks {
            for &kind in &kinds {
                rows.push(build_row(n, k, kind, solve_cap)?);
            }
        }
    }
    print!("{}", render(&rows, format)?);
    Ok(EXIT_OK)
}
