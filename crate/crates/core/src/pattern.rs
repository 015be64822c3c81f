//! Fixed ≤5-vertex patterns and exhaustive induced-subgraph detection.
//!
//! The matcher is a backtracking search over ordered vertex tuples with
//! bitset candidate filtering; it is exhaustive, deterministic (ascending
//! candidates) and returns the occurrence in pattern vertex order.

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternId {
    C3,
    C4,
    C5,
    P4,
    Claw,
    Paw,
    Diamond,
    TwoP2,
    P1P3,
    TwoP1P2,
    C3P1,
    FourP1,
    K4,
}

impl PatternId {
    pub fn all() -> &'static [PatternId] {
        use PatternId::*;
        &[
            C3, C4, C5, P4, Claw, Paw, Diamond, TwoP2, P1P3, TwoP1P2, C3P1, FourP1, K4,
        ]
    }

    pub fn vertex_count(self) -> usize {
        match self {
            PatternId::C3 => 3,
            PatternId::C5 => 5,
            _ => 4,
        }
    }

    /// Edges over `0..vertex_count()`. Vertex order is chosen so that each
    /// new vertex is as constrained as possible by the previous ones.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            PatternId::C3 => &[(0, 1), (1, 2), (0, 2)],
            PatternId::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            PatternId::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            PatternId::P4 => &[(0, 1), (1, 2), (2, 3)],
            PatternId::Claw => &[(0, 1), (0, 2), (0, 3)],
            PatternId::Paw => &[(0, 1), (0, 2), (1, 2), (0, 3)],
            PatternId::Diamond => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            PatternId::TwoP2 => &[(0, 1), (2, 3)],
            PatternId::P1P3 => &[(0, 1), (1, 2)],
            PatternId::TwoP1P2 => &[(0, 1)],
            PatternId::C3P1 => &[(0, 1), (1, 2), (0, 2)],
            PatternId::FourP1 => &[],
            PatternId::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternId::C3 => "C3",
            PatternId::C4 => "C4",
            PatternId::C5 => "C5",
            PatternId::P4 => "P4",
            PatternId::Claw => "claw",
            PatternId::Paw => "paw",
            PatternId::Diamond => "diamond",
            PatternId::TwoP2 => "2P2",
            PatternId::P1P3 => "P1+P3",
            PatternId::TwoP1P2 => "2P1+P2",
            PatternId::C3P1 => "C3+P1",
            PatternId::FourP1 => "4P1",
            PatternId::K4 => "K4",
        }
    }

    pub fn as_graph(self) -> Graph {
        Graph::build(self.vertex_count(), self.edges()).unwrap()
    }

    fn adjacency_matrix(self) -> [[bool; 5]; 5] {
        let mut m = [[false; 5]; 5];
        for &(a, b) in self.edges() {
            m[a][b] = true;
            m[b][a] = true;
        }
        m
    }
}

/// First induced occurrence of `p` in `g`, as a tuple in pattern order, or
/// `None` after exhausting all tuples.
pub fn find_induced_pattern(g: &Graph, p: PatternId) -> Option<Vec<usize>> {
    let mut found = None;
    visit_induced(g, p, &mut |occ| {
        found = Some(occ.to_vec());
        false
    });
    found
}

/// Calls `visit` on every induced occurrence (in every vertex order that
/// matches the pattern); stop early by returning `false`.
pub fn visit_induced(g: &Graph, p: PatternId, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let k = p.vertex_count();
    if g.n() < k {
        return;
    }
    let pat = p.adjacency_matrix();
    let mut assigned = vec![0usize; k];
    let mut used = VertexSet::new(g.n());
    dfs(g, &pat, k, 0, &mut assigned, &mut used, visit);
}

fn dfs(
    g: &Graph,
    pat: &[[bool; 5]; 5],
    k: usize,
    depth: usize,
    assigned: &mut [usize],
    used: &mut VertexSet,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == k {
        return visit(assigned);
    }
    let mut cand = VertexSet::full(g.n());
    cand.difference_with(used);
    for j in 0..depth {
        let w = assigned[j];
        if pat[depth][j] {
            cand.intersect_with(g.neighbours(w));
        } else {
            cand.difference_with(g.neighbours(w));
        }
    }
    for v in cand.to_vec() {
        assigned[depth] = v;
        used.insert(v);
        let keep_going = dfs(g, pat, k, depth + 1, assigned, used, visit);
        used.remove(v);
        if !keep_going {
            return false;
        }
    }
    true
}

pub fn is_free_of(g: &Graph, p: PatternId) -> bool {
    find_induced_pattern(g, p).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn star_is_a_claw() {
        let w = find_induced_pattern(&named::star(3), PatternId::Claw).unwrap();
        assert_eq!(w[0], 0); // centre first in pattern order
    }

    #[test]
    fn c5_has_p4_but_no_2p2() {
        let c5 = named::cycle(5);
        let w = find_induced_pattern(&c5, PatternId::P4).unwrap();
        // Consecutive path check in pattern order.
        assert!(c5.adjacent(w[0], w[1]) && c5.adjacent(w[1], w[2]) && c5.adjacent(w[2], w[3]));
        assert!(!c5.adjacent(w[0], w[2]) && !c5.adjacent(w[0], w[3]) && !c5.adjacent(w[1], w[3]));
        assert!(find_induced_pattern(&c5, PatternId::TwoP2).is_none());
    }

    #[test]
    fn named_graphs_match_their_own_patterns() {
        assert!(find_induced_pattern(&named::paw(), PatternId::Paw).is_some());
        assert!(find_induced_pattern(&named::diamond(), PatternId::Diamond).is_some());
        assert!(find_induced_pattern(&named::complete(4), PatternId::K4).is_some());
        assert!(find_induced_pattern(&named::petersen(), PatternId::C3).is_none());
        assert!(find_induced_pattern(&named::petersen(), PatternId::C5).is_some());
        // P5 contains an induced 2P2 (its two end edges).
        assert!(find_induced_pattern(&named::path(5), PatternId::TwoP2).is_some());
        assert!(find_induced_pattern(&named::complete(4), PatternId::TwoP2).is_none());
    }

    #[test]
    fn induced_means_induced() {
        // K4 contains C3 but no induced C4 / P4 / diamond.
        let k4 = named::complete(4);
        assert!(find_induced_pattern(&k4, PatternId::C3).is_some());
        assert!(find_induced_pattern(&k4, PatternId::C4).is_none());
        assert!(find_induced_pattern(&k4, PatternId::P4).is_none());
        assert!(find_induced_pattern(&k4, PatternId::Diamond).is_none());
    }
}
