//! Codes (vertex subsets) on a Sierpiński graph and their text format.
//!
//! The file format is one vertex label per line, coordinates separated by
//! commas. Blank lines and anything after `#` are ignored.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, SierpinskiGraph, VertexId, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CodeKind {
    #[serde(rename = "dom")]
    Dominating,
    #[serde(rename = "td")]
    TotalDominating,
    #[serde(rename = "id")]
    Identifying,
    #[serde(rename = "ld")]
    LocatingDominating,
}

impl CodeKind {
    pub const ALL: [CodeKind; 4] = [
        CodeKind::Dominating,
        CodeKind::TotalDominating,
        CodeKind::Identifying,
        CodeKind::LocatingDominating,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            CodeKind::Dominating => "dom",
            CodeKind::TotalDominating => "td",
            CodeKind::Identifying => "id",
            CodeKind::LocatingDominating => "ld",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dom" | "dominating" => Ok(CodeKind::Dominating),
            "td" | "total-dominating" => Ok(CodeKind::TotalDominating),
            "id" | "identifying" => Ok(CodeKind::Identifying),
            "ld" | "locating-dominating" => Ok(CodeKind::LocatingDominating),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// A subset of the vertices of a particular S(n,k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    n: usize,
    k: usize,
    members: VertexSet,
}

impl Code {
    pub fn empty(g: &SierpinskiGraph) -> Self {
        Self {
            n: g.n(),
            k: g.k(),
            members: VertexSet::new(g.vertex_count()),
        }
    }

    pub fn from_ids<I: IntoIterator<Item = VertexId>>(g: &SierpinskiGraph, ids: I) -> Self {
        Self {
            n: g.n(),
            k: g.k(),
            members: VertexSet::from_ids(g.vertex_count(), ids),
        }
    }

    /// Wraps a vertex set; fails if it was built for a different vertex count.
    pub fn from_set(g: &SierpinskiGraph, members: VertexSet) -> Result<Self> {
        if members.universe() != g.vertex_count() {
            return Err(Error::OutOfRange(format!(
                "set over {} vertices does not fit S({},{})",
                members.universe(),
                g.n(),
                g.k()
            )));
        }
        Ok(Self {
            n: g.n(),
            k: g.k(),
            members,
        })
    }

    pub fn from_labels<'a, I>(g: &SierpinskiGraph, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut code = Self::empty(g);
        for l in labels {
            code.insert(g.id_of(&l.parse()?)?);
        }
        Ok(code)
    }

    /// `(n, k)` of the graph this code lives on.
    pub fn signature(&self) -> (usize, usize) {
        (self.n, self.k)
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn into_members(self) -> VertexSet {
        self.members
    }

    pub fn insert(&mut self, id: VertexId) -> bool {
        self.members.insert(id)
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.members.contains(id)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self, g: &SierpinskiGraph) -> Vec<VertexLabel> {
        self.members.iter().map(|u| g.label(u)).collect()
    }

    /// Parses the line-oriented code format against `g`.
    pub fn parse(g: &SierpinskiGraph, text: &str) -> Result<Self> {
        let mut code = Self::empty(g);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at_line = |e: Error| match e {
                Error::Parse { message, .. } | Error::OutOfRange(message) => Error::Parse { line: i + 1, message },
                other => other,
            };
            let label: VertexLabel = line.parse().map_err(at_line)?;
            let id = g.id_of(&label).map_err(at_line)?;
            code.insert(id);
        }
        Ok(code)
    }

    /// One label per line in increasing id order.
    pub fn to_file_string(&self, g: &SierpinskiGraph) -> String {
        let mut out = String::new();
        for l in self.labels(g) {
            writeln!(out, "{l}").unwrap();
        }
        out
    }
}
