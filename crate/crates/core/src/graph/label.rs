use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex of S(n,k) written as its coordinate tuple in `{0, .., k-1}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel(Vec<usize>);

impl VertexLabel {
    /// Builds a label and checks it belongs to S(n,k) for `n = coords.len()`.
    pub fn new(coords: Vec<usize>, k: usize) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::OutOfRange("label needs at least one coordinate".into()));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= k) {
            return Err(Error::OutOfRange(format!("coordinate {bad} not below k = {k}")));
        }
        Ok(Self(coords))
    }

    pub(crate) fn from_raw(coords: Vec<usize>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_extreme(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `"0,1,2"`. Range checks against `k` happen when the label is
/// resolved against a graph.
impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("bad coordinate `{}` in `{s}`", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(coords))
    }
}

/// The adjacency rule of S(n,k) evaluated on raw coordinate slices: equal
/// prefix up to some index `h`, different symbols at `h`, and after `h` the
/// first tuple repeats the second's symbol at `h` while the second repeats
/// the first's.
pub fn labels_adjacent(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(h) = a.iter().zip(b).position(|(x, y)| x != y) else {
        return false;
    };
    let (ah, bh) = (a[h], b[h]);
    a[h + 1..].iter().all(|&x| x == bh) && b[h + 1..].iter().all(|&y| y == ah)
}

/// The neighbour of an inner vertex outside its clique, or `None` for an
/// extreme vertex.
pub fn partner_coords(a: &[usize]) -> Option<Vec<usize>> {
    let c = *a.last()?;
    let h = a.iter().rposition(|&x| x != c)?;
    let mut out = a.to_vec();
    out[h] = c;
    for x in &mut out[h + 1..] {
        *x = a[h];
    }
    Some(out)
}
