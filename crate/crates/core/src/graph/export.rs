use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{Adjacency, SierpinskiGraph};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    EdgeList,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "edgelist" => Ok(Self::EdgeList),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    k: usize,
    edges: Vec<[usize; 2]>,
}

/// Serialises `g`. Edges appear once, smaller endpoint first, in
/// lexicographic order, so output is byte-for-byte reproducible.
pub fn export(g: &SierpinskiGraph, format: ExportFormat) -> String {
    let edges = g.edges();
    match format {
        ExportFormat::EdgeList => {
            let mut out = String::with_capacity(edges.len() * 8);
            for (u, v) in edges {
                writeln!(out, "{u} {v}").unwrap();
            }
            out
        }
        ExportFormat::Json => {
            let doc = JsonGraph {
                n: g.n(),
                k: g.k(),
                edges: edges.into_iter().map(|(u, v)| [u, v]).collect(),
            };
            let mut out = serde_json::to_string(&doc).expect("plain data serialises");
            out.push('\n');
            out
        }
        ExportFormat::Dot => {
            let names: Vec<String> = (0..g.vertex_count()).map(|u| g.label(u).to_string()).collect();
            let mut out = String::new();
            writeln!(out, "graph \"S({},{})\" {{", g.n(), g.k()).unwrap();
            for name in &names {
                writeln!(out, "  \"{name}\";").unwrap();
            }
            for (u, v) in edges {
                writeln!(out, "  \"{}\" -- \"{}\";", names[u], names[v]).unwrap();
            }
            out.push_str("}\n");
            out
        }
    }
}
