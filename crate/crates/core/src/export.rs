//! Text serialisations: DOT, JSON and CSV.
//!
//! All integers are written as exact decimals. Output is deterministic and
//! newline-terminated.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jaco::{JacoGraph, LinearFunction};
use crate::joint::{self, JointTrace};
use crate::recursion::{self, DeltaTrace};
use crate::sequences::SequenceTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::Parse(format!("unknown format '{other}'"))),
        }
    }
}

/// Wire form of a Jaco graph: `{"m","c","n","arcs":[[i,j],...]}`.
#[derive(Debug, Serialize, Deserialize)]
struct GraphRecord {
    m: u64,
    c: u64,
    n: usize,
    arcs: Vec<[usize; 2]>,
}

pub fn graph_to_json(j: &JacoGraph) -> String {
    let f = j.function();
    let record = GraphRecord {
        m: f.m,
        c: f.c,
        n: j.order(),
        arcs: j.arcs().iter().map(|&(a, b)| [a, b]).collect(),
    };
    let mut out = serde_json::to_string(&record).expect("plain integers serialise");
    out.push('\n');
    out
}

/// Reads the JSON produced by [`graph_to_json`]. The arcs are taken as
/// given, not rebuilt from `(m, c, n)`.
pub fn graph_from_json(text: &str) -> Result<JacoGraph> {
    let record: GraphRecord =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    JacoGraph::from_arcs(
        LinearFunction::new(record.m, record.c),
        record.n,
        record.arcs.into_iter().map(|[a, b]| (a, b)),
    )
}

pub fn graph_to_csv(j: &JacoGraph) -> String {
    let mut out = String::from("i,j\n");
    for &(a, b) in j.arcs() {
        let _ = writeln!(out, "{a},{b}");
    }
    out
}

/// Undirected DOT of `J*_n` (`--` edges), or the arc structure of `J_n`
/// (`->` arcs) when `directed` is set. Every vertex gets its own node line
/// so isolated vertices survive.
pub fn graph_to_dot(j: &JacoGraph, directed: bool) -> String {
    let f = j.function();
    let (kind, sep) = if directed {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = format!("{kind} jaco_{}_{}_{} {{\n", f.m, f.c, j.order());
    for v in 1..=j.order() {
        let _ = writeln!(out, "v{v};");
    }
    for &(a, b) in j.arcs() {
        let _ = writeln!(out, "v{a} {sep} v{b};");
    }
    out.push_str("}\n");
    out
}

pub fn render_graph(j: &JacoGraph, format: ExportFormat, directed: bool) -> String {
    match format {
        ExportFormat::Dot => graph_to_dot(j, directed),
        ExportFormat::Json => graph_to_json(j),
        ExportFormat::Csv => graph_to_csv(j),
    }
}

pub const RECURSION_HEADER: &str = "n,i,paper_rhs,exact_rhs,direct,delta_paper";

pub fn recursion_csv(rows: &[DeltaTrace]) -> String {
    let mut out = format!("{RECURSION_HEADER}\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n, r.i, r.stated_rhs, r.exact_rhs, r.direct, r.delta_stated
        );
    }
    out
}

fn json_lines<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain integers serialise");
    out.push('\n');
    out
}

pub fn recursion_json(rows: &[DeltaTrace]) -> String {
    json_lines(&rows)
}

/// CSV for one joint trace. The published-formula columns are only
/// present when that formula applies.
pub fn joint_csv(t: &JointTrace) -> String {
    if let (Some(stated), Some(delta)) = (t.stated_rhs, t.delta_stated) {
        format!(
            "n,m,vi,uj,direct,closed_form,paper_rhs,delta_paper\n{},{},{},{},{},{},{},{}\n",
            t.n, t.m, t.vi, t.uj, t.direct, t.closed_form, stated, delta
        )
    } else {
        format!(
            "n,m,vi,uj,direct,closed_form\n{},{},{},{},{},{}\n",
            t.n, t.m, t.vi, t.uj, t.direct, t.closed_form
        )
    }
}

pub fn joint_json(t: &JointTrace) -> String {
    json_lines(t)
}

pub fn sequence_csv(table: &SequenceTable) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in &table.rows {
        let _ = writeln!(out, "{n},{v}");
    }
    out
}

pub fn sequences_json(tables: &[SequenceTable]) -> String {
    json_lines(&tables)
}

/// Combined audit report: recursion rows, trivial-joint rows and
/// non-trivial-anchor joint rows, each as a `# name` headed CSV section
/// carrying the per-term `stated - exact` deltas.
pub fn erratum_csv(
    recursion_rows: &[DeltaTrace],
    joint_rows: &[JointTrace],
    anchor_rows: &[JointTrace],
) -> Result<String> {
    let mut out = String::from("# recursion\n");
    out.push_str(RECURSION_HEADER);
    out.push_str(",exact_matches_direct");
    for name in recursion::TERM_NAMES {
        let _ = write!(out, ",delta_{name}");
    }
    out.push('\n');
    for r in recursion_rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.i,
            r.stated_rhs,
            r.exact_rhs,
            r.direct,
            r.delta_stated,
            r.exact_matches_direct()
        );
        for d in r.term_deltas()? {
            let _ = write!(out, ",{d}");
        }
        out.push('\n');
    }

    out.push_str("\n# edge_joint\nn,m,paper_rhs,closed_form,direct,delta_paper,predicted_block,paper_plus_block_matches");
    for name in joint::TERM_NAMES {
        let _ = write!(out, ",delta_{name}");
    }
    out.push('\n');
    for t in joint_rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{}",
            t.n,
            t.m,
            t.stated_rhs.map(|v| v.to_string()).unwrap_or_default(),
            t.closed_form,
            t.direct,
            t.delta_stated.map(|v| v.to_string()).unwrap_or_default(),
            t.predicted_block,
            t.stated_plus_block_matches()
                .map(|b| b.to_string())
                .unwrap_or_default()
        );
        for term in &t.terms {
            let _ = write!(out, ",{}", term.delta()?);
        }
        out.push('\n');
    }

    out.push_str("\n# edge_joint_nontrivial\nn,m,vi,uj,closed_form,direct\n");
    for t in anchor_rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            t.n, t.m, t.vi, t.uj, t.closed_form, t.direct
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::recursion_delta_report;

    #[test]
    fn json_schema() {
        let j = JacoGraph::build(LinearFunction::IDENTITY, 5).unwrap();
        assert_eq!(
            graph_to_json(&j),
            "{\"m\":1,\"c\":0,\"n\":5,\"arcs\":[[1,2],[2,3],[3,4],[3,5],[4,5]]}\n"
        );
    }

    #[test]
    fn json_round_trip() {
        let j = JacoGraph::build(LinearFunction::new(2, 1), 12).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&j)).unwrap(), j);
        assert!(graph_from_json("{\"m\":1}").is_err());
        assert!(graph_from_json("{\"m\":1,\"c\":0,\"n\":2,\"arcs\":[[2,1]]}").is_err());
    }

    #[test]
    fn csv_null_graph() {
        let j = JacoGraph::build(LinearFunction::new(0, 0), 4).unwrap();
        assert_eq!(graph_to_csv(&j), "i,j\n");
    }

    #[test]
    fn dot_forms() {
        let j = JacoGraph::build(LinearFunction::IDENTITY, 3).unwrap();
        let dot = graph_to_dot(&j, false);
        assert!(dot.starts_with("graph "));
        assert!(dot.lines().any(|l| l == "v1 -- v2;"));
        assert!(dot.lines().any(|l| l == "v2 -- v3;"));
        assert!(!dot.contains("->"));
        let dot = graph_to_dot(&j, true);
        assert!(dot.starts_with("digraph "));
        assert!(dot.lines().any(|l| l == "v1 -> v2;"));
    }

    #[test]
    fn format_names() {
        assert_eq!("dot".parse(), Ok(ExportFormat::Dot));
        assert_eq!("json".parse(), Ok(ExportFormat::Json));
        assert_eq!("csv".parse(), Ok(ExportFormat::Csv));
        assert!("xml".parse::<ExportFormat>().is_err());
    }

    #[test]
    fn recursion_table() {
        let rows = recursion_delta_report(4).unwrap();
        assert_eq!(
            recursion_csv(&rows),
            "n,i,paper_rhs,exact_rhs,direct,delta_paper\n2,1,5,6,6,-1\n3,2,17,19,19,-2\n4,2,58,58,58,0\n"
        );
        let json: serde_json::Value = serde_json::from_str(&recursion_json(&rows)).unwrap();
        assert_eq!(json[0]["paper_rhs"], 5);
        assert_eq!(json[0]["delta_paper"], -1);
    }

    #[test]
    fn joint_columns_follow_applicability() {
        let t = joint::joint_trace(2, 2, 1, 1).unwrap();
        assert_eq!(
            joint_csv(&t),
            "n,m,vi,uj,direct,closed_form,paper_rhs,delta_paper\n2,2,1,1,19,19,15,-4\n"
        );
        let t = joint::joint_trace(5, 4, 3, 2).unwrap();
        assert!(joint_csv(&t).starts_with("n,m,vi,uj,direct,closed_form\n"));
        assert!(!joint_json(&t).contains("paper_rhs"));
    }
}
