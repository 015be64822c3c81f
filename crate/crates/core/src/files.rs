//! Plain-text instance and arc-model files plus the JSON result document.
//! Both text formats round-trip bit-exactly through their writers.

use crate::arcs::ArcModel;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::reductions::{ReductionTrace, StepKind};
use crate::verdict::{Answer, DisconnectedPartition, Verdict};
use serde::{Deserialize, Serialize};

/// Parses the instance format: a `n m` header followed by exactly m `u v`
/// edge lines (0-based); `#` lines are comments. Errors carry the 1-based
/// line number.
pub fn parse_instance(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::invalid("line 1: missing `n m` header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::invalid(format!("line {}: bad vertex count", line_no + 1)))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::invalid(format!("line {}: bad edge count", line_no + 1)))?;
    if it.next().is_some() {
        return Err(Error::invalid(format!(
            "line {}: trailing tokens after `n m`",
            line_no + 1
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::invalid(format!("expected {m} edge lines, found {}", edges.len())))?;
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::invalid(format!("line {}: bad edge line", line_no + 1)))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::invalid(format!(
                "line {}: trailing tokens after edge",
                line_no + 1
            )));
        }
        if u >= n || v >= n {
            return Err(Error::invalid(format!(
                "line {}: endpoint out of range 0..{n}",
                line_no + 1
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("line {}: self-loop", line_no + 1)));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::invalid(format!(
            "line {}: trailing content after {m} edges",
            line_no + 1
        )));
    }
    Graph::build(n, &edges)
}

pub fn write_instance(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Arc model format: a line holding `n`, then n lines `l r`; the 2n values
/// must be a permutation of 1..2n.
pub fn parse_arcs(text: &str) -> Result<ArcModel> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::invalid("line 1: missing arc count"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("line {}: bad arc count", line_no + 1)))?;
    let mut arcs = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::invalid(format!("expected {n} arc lines, found {}", arcs.len())))?;
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::invalid(format!("line {}: bad arc line", line_no + 1)))
        };
        let l = parse(it.next())?;
        let r = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::invalid(format!(
                "line {}: trailing tokens after arc",
                line_no + 1
            )));
        }
        arcs.push((l, r));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::invalid(format!(
            "line {}: trailing content after {n} arcs",
            line_no + 1
        )));
    }
    ArcModel::new(arcs)
}

pub fn write_arcs(m: &ArcModel) -> String {
    let mut out = format!("{}\n", m.n());
    for v in 0..m.n() {
        let (l, r) = m.arc(v);
        out.push_str(&format!("{l} {r}\n"));
    }
    out
}

/// Serialized reduction step in original-graph labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TraceStep {
    #[serde(rename = "nested")]
    Nested { u: usize, v: usize },
    #[serde(rename = "wjoin")]
    Wjoin {
        #[serde(rename = "A")]
        a_side: Vec<usize>,
        #[serde(rename = "B")]
        b_side: Vec<usize>,
        a: usize,
        b: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultStats {
    pub n: usize,
    pub m: usize,
    pub diameter: Option<usize>,
    pub alpha_gt_3: Option<bool>,
    pub reductions: usize,
    pub elapsed_ms: u64,
}

/// The machine-readable outcome of a solve run. Vertex arrays are sorted
/// and the key order is fixed, so re-serialization is stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub answer: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
    pub reason: String,
    pub class: String,
    pub trace: Vec<TraceStep>,
    pub stats: ResultStats,
}

pub fn trace_steps(trace: &ReductionTrace) -> Vec<TraceStep> {
    trace
        .steps_in_original_labels()
        .into_iter()
        .map(|kind| match kind {
            StepKind::NestedRemoval { u, v } => TraceStep::Nested { u, v },
            StepKind::WJoinContraction { a_side, b_side, a, b } => TraceStep::Wjoin {
                a_side,
                b_side,
                a,
                b,
            },
        })
        .collect()
}

pub fn result_document(
    g: &Graph,
    verdict: &Verdict,
    class: &str,
    trace: Option<&ReductionTrace>,
    elapsed_ms: u64,
) -> ResultDocument {
    let answer = match verdict.answer {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Unresolved => "unresolved",
    };
    let partition = verdict
        .certificate
        .as_ref()
        .map(|p| p.to_sorted_vecs().to_vec());
    let alpha_gt_3 = if g.n() <= 400 {
        Some(g.independence_exceeds_three().is_some())
    } else {
        None
    };
    ResultDocument {
        answer: answer.to_string(),
        partition,
        reason: verdict.reason.code().to_string(),
        class: class.to_string(),
        trace: trace.map(trace_steps).unwrap_or_default(),
        stats: ResultStats {
            n: g.n(),
            m: g.m(),
            diameter: g.diameter(),
            alpha_gt_3,
            reductions: trace.map(|t| t.len()).unwrap_or(0),
            elapsed_ms,
        },
    }
}

/// Rebuilds the partition from a document against a given graph; vertex
/// range errors are invalid input.
pub fn partition_from_document(g: &Graph, doc: &ResultDocument) -> Result<DisconnectedPartition> {
    let parts = doc
        .partition
        .as_ref()
        .ok_or_else(|| Error::invalid("document carries no partition"))?;
    if parts.len() != 4 {
        return Err(Error::invalid("partition must have exactly 4 parts"));
    }
    let mut sets: Vec<VertexSet> = Vec::with_capacity(4);
    for part in parts {
        let mut s = VertexSet::new(g.n());
        for &v in part {
            if v >= g.n() {
                return Err(Error::invalid(format!(
                    "partition vertex {v} out of range 0..{}",
                    g.n()
                )));
            }
            s.insert(v);
        }
        sets.push(s);
    }
    Ok(DisconnectedPartition::new([
        sets[0].clone(),
        sets[1].clone(),
        sets[2].clone(),
        sets[3].clone(),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::verdict::Reason;

    #[test]
    fn instance_roundtrip_and_diagnostics() {
        let g = named::petersen();
        let text = write_instance(&g);
        let back = parse_instance(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_instance(&back), text);

        assert!(parse_instance("").is_err());
        assert!(parse_instance("2 1\n0 2\n").is_err());
        assert!(parse_instance("2 1\n1 1\n").is_err());
        assert!(parse_instance("2 2\n0 1\n").is_err());
        assert!(parse_instance("3 1\n0 1\n0 2\n").is_err());
        let ok = parse_instance("# comment\n3 2\n0 1\n# another\n1 2\n").unwrap();
        assert_eq!((ok.n(), ok.m()), (3, 2));
    }

    #[test]
    fn arcs_roundtrip() {
        let m = ArcModel::new(vec![(7, 2), (1, 4), (3, 6), (5, 8)]).unwrap();
        let text = write_arcs(&m);
        let back = parse_arcs(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_arcs(&back), text);
        assert!(parse_arcs("2\n1 1\n2 3\n").is_err());
    }

    #[test]
    fn document_reserialization_is_stable() {
        let g = named::cycle(4);
        let v = crate::oracle::oracle_disconnected_cut(&g, u64::MAX).unwrap();
        let doc = result_document(&g, &v, "oracle", None, 1);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back: ResultDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
        let p = partition_from_document(&g, &doc).unwrap();
        assert!(crate::oracle::check_partition(&g, &p).is_ok());
    }

    #[test]
    fn trace_step_wire_format() {
        let step = TraceStep::Wjoin {
            a_side: vec![0, 1],
            b_side: vec![2, 3],
            a: 0,
            b: 2,
        };
        let json = serde_json::to_string(&step).unwrap();
        assert_eq!(json, r#"{"kind":"wjoin","A":[0,1],"B":[2,3],"a":0,"b":2}"#);
        let nested = TraceStep::Nested { u: 3, v: 1 };
        assert_eq!(
            serde_json::to_string(&nested).unwrap(),
            r#"{"kind":"nested","u":3,"v":1}"#
        );
        let no = Verdict::no(Reason::Diameter1);
        let doc = result_document(&named::complete(4), &no, "auto", None, 0);
        assert!(doc.partition.is_none());
        assert_eq!(doc.reason, "diameter-1");
    }
}
