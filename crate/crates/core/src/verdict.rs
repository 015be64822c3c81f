//! Verdicts and the four-set certificate every "yes" answer carries.

use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unresolved,
}

/// Why a verdict was reached. The codes are stable strings used in result
/// documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    Diameter1,
    DiameterAtLeast3,
    DominatingVertex,
    DisconnectedNeighbourhood,
    CompleteMultipartite,
    NoInducedLongCycle,
    CoveringClique,
    CaseAnalysis,
    UniversalPair,
    UniversalPairAbsent,
    DominatingEdge,
    TriangleOrStarRoot,
    TwoSat,
    ComplementComponents,
    Oracle,
    BudgetExceeded,
    TooFewVertices,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Diameter1 => "diameter-1",
            Reason::DiameterAtLeast3 => "diameter-at-least-3",
            Reason::DominatingVertex => "dominating-vertex",
            Reason::DisconnectedNeighbourhood => "disconnected-neighbourhood",
            Reason::CompleteMultipartite => "complete-multipartite",
            Reason::NoInducedLongCycle => "no-induced-long-cycle",
            Reason::CoveringClique => "covering-clique",
            Reason::CaseAnalysis => "case-analysis",
            Reason::UniversalPair => "universal-pair",
            Reason::UniversalPairAbsent => "universal-pair-absent",
            Reason::DominatingEdge => "dominating-edge",
            Reason::TriangleOrStarRoot => "triangle-or-star-root",
            Reason::TwoSat => "two-sat",
            Reason::ComplementComponents => "complement-components",
            Reason::Oracle => "oracle",
            Reason::BudgetExceeded => "budget-exceeded",
            Reason::TooFewVertices => "too-few-vertices",
        }
    }
}

/// Four pairwise disjoint, non-empty sets covering all vertices, with no
/// edges between parts 1 and 3 nor between parts 2 and 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectedPartition {
    parts: [VertexSet; 4],
}

impl DisconnectedPartition {
    pub fn new(parts: [VertexSet; 4]) -> Self {
        DisconnectedPartition { parts }
    }

    pub fn parts(&self) -> &[VertexSet; 4] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i]
    }

    pub fn part_mut(&mut self, i: usize) -> &mut VertexSet {
        &mut self.parts[i]
    }

    pub fn universe(&self) -> usize {
        self.parts[0].universe()
    }

    /// Index of the part containing `v`, if any.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        (0..4).find(|&i| self.parts[i].contains(v))
    }

    /// Sorted member lists, for result documents.
    pub fn to_sorted_vecs(&self) -> [Vec<usize>; 4] {
        [
            self.parts[0].to_vec(),
            self.parts[1].to_vec(),
            self.parts[2].to_vec(),
            self.parts[3].to_vec(),
        ]
    }
}

/// Answer plus certificate plus reason. A `Yes` always carries a
/// checker-valid partition; `Unresolved` only ever means a budget ran out.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub answer: Answer,
    pub certificate: Option<DisconnectedPartition>,
    pub reason: Reason,
}

impl Verdict {
    pub fn yes(certificate: DisconnectedPartition, reason: Reason) -> Self {
        Verdict {
            answer: Answer::Yes,
            certificate: Some(certificate),
            reason,
        }
    }

    pub fn no(reason: Reason) -> Self {
        Verdict {
            answer: Answer::No,
            certificate: None,
            reason,
        }
    }

    pub fn unresolved() -> Self {
        Verdict {
            answer: Answer::Unresolved,
            certificate: None,
            reason: Reason::BudgetExceeded,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub fn is_no(&self) -> bool {
        self.answer == Answer::No
    }

    pub fn is_unresolved(&self) -> bool {
        self.answer == Answer::Unresolved
    }
}
