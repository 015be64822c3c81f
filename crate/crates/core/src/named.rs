//! Small named graphs used across tests and the acceptance corpus.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::build(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::build(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Star K_{1,k} with centre 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::build(k + 1, &edges).unwrap()
}

pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::build(s + t, &edges).unwrap()
}

/// K4 minus one edge; vertices 2,3 are the false twins.
pub fn diamond() -> Graph {
    Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// Triangle 0,1,2 with pendant 3 at 0.
pub fn paw() -> Graph {
    Graph::build(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
}

/// K_{2,2,2} = L(K4).
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            // Opposite pairs (0,1), (2,3), (4,5) stay non-adjacent.
            if !(u / 2 == v / 2) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(6, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer C5
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    Graph::build(10, &edges).unwrap()
}

/// The 6-vertex W-join gadget: A = {0,1}, B = {2,3} cliques with cross edges
/// 0-2 and 1-3, vertex 4 complete to A, vertex 5 complete to B, edge 4-5.
pub fn wjoin_gadget6() -> Graph {
    Graph::build(
        6,
        &[
            (0, 1),
            (2, 3),
            (0, 2),
            (1, 3),
            (4, 0),
            (4, 1),
            (5, 2),
            (5, 3),
            (4, 5),
        ],
    )
    .unwrap()
}

/// The s×s rook's graph: line graph of K_{s,s}. Claw-free, diameter 2,
/// independence number s.
pub fn rook(s: usize) -> Graph {
    let mut edges = Vec::new();
    let id = |r: usize, c: usize| r * s + c;
    for r in 0..s {
        for c in 0..s {
            for c2 in c + 1..s {
                edges.push((id(r, c), id(r, c2)));
            }
            for r2 in r + 1..s {
                edges.push((id(r, c), id(r2, c)));
            }
        }
    }
    Graph::build(s * s, &edges).unwrap()
}

/// Appends a true twin of `v` (same closed neighbourhood) as the new last
/// vertex. Preserves claw-freeness and the diameter.
pub fn with_true_twin(g: &Graph, v: usize) -> Graph {
    let t = g.n();
    let mut edges = g.edges();
    edges.push((v, t));
    for w in g.neighbours(v).to_vec() {
        edges.push((w, t));
    }
    Graph::build(g.n() + 1, &edges).unwrap()
}

/// Blows the adjacent pair (u, v) into two 2-cliques with a
/// perfect-matching cross pattern, copying all outside adjacencies: the new
/// pair of cliques is a proper W-join of the result. The copies of u are
/// the original u and the second-to-last vertex; the copies of v are the
/// original v and the last vertex. Claw-freeness of the result depends on
/// the host and must be checked by the caller.
pub fn thicken_matching_pair(g: &Graph, u: usize, v: usize) -> Graph {
    assert!(g.adjacent(u, v));
    let u2 = g.n();
    let v2 = g.n() + 1;
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        if (a, b) == (u.min(v), u.max(v)) {
            continue; // cross pattern handled below
        }
        edges.push((a, b));
        let lift = |x: usize| if x == u { Some(u2) } else if x == v { Some(v2) } else { None };
        if let Some(a2) = lift(a) {
            edges.push((a2, b));
        }
        if let Some(b2) = lift(b) {
            edges.push((a, b2));
        }
    }
    edges.push((u, u2));
    edges.push((v, v2));
    edges.push((u, v));
    edges.push((u2, v2));
    Graph::build(g.n() + 2, &edges).unwrap()
}

/// Matching-pattern gadget with |A| = |B| = k: A = 0..k, B = k..2k, cross
/// edges i–(k+i), vertex 2k complete to A, 2k+1 complete to B, plus the edge
/// between them.
pub fn wjoin_gadget(k: usize) -> Graph {
    assert!(k >= 2);
    let p = 2 * k;
    let q = 2 * k + 1;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
            edges.push((k + i, k + j));
        }
        edges.push((i, k + i));
        edges.push((p, i));
        edges.push((q, k + i));
    }
    edges.push((p, q));
    Graph::build(2 * k + 2, &edges).unwrap()
}
