//! Integer sequences of `J_n(f)` invariants, tabulated for `n = 1..=n_max`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::jaco::{JacoGraph, LinearFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// ε(J_n)
    Edges,
    /// Gut(J*_n)
    Gutman,
    /// size of the Jaconian set
    JaconianCardinality,
    /// dist(v_1, v_n) in J*_n
    V1VnDistance,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::Edges,
        SequenceKind::Gutman,
        SequenceKind::JaconianCardinality,
        SequenceKind::V1VnDistance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Edges => "edges",
            SequenceKind::Gutman => "gutman",
            SequenceKind::JaconianCardinality => "jaconian_cardinality",
            SequenceKind::V1VnDistance => "v1_vn_distance",
        }
    }

    fn value(self, j: &JacoGraph) -> Result<BigCount> {
        Ok(match self {
            SequenceKind::Edges => BigCount::from(j.arcs().len()),
            SequenceKind::Gutman => j.underlying().gutman_index()?,
            SequenceKind::JaconianCardinality => {
                BigCount::from(j.jaconian_info().jaconian_set.len())
            }
            SequenceKind::V1VnDistance => {
                let dist = j.underlying().all_pairs_distances();
                BigCount::from(dist.finite(1, j.order())?)
            }
        })
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown sequence '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub name: &'static str,
    /// `(n, value)`, strictly increasing in `n`.
    pub rows: Vec<(usize, BigCount)>,
}

/// Tabulates `kind` over `J_1(f), ..., J_{n_max}(f)`.
pub fn tabulate(kind: SequenceKind, f: LinearFunction, n_max: usize) -> Result<SequenceTable> {
    let rows = (1..=n_max)
        .map(|n| {
            let j = JacoGraph::build(f, n)?;
            Ok((n, kind.value(&j)?))
        })
        .collect::<Result<_>>()?;
    Ok(SequenceTable {
        name: kind.name(),
        rows,
    })
}
