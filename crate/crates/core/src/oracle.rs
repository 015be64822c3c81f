//! Exponential ground-truth oracles, the certificate checker, the
//! constructive short-cycle finder and the seeded generators behind the test
//! corpus.
//!
//! `oracle_disconnected_cut` enumerates all vertex subsets U (increasing
//! popcount, lexicographic within) and answers Yes iff some U induces a
//! disconnected subgraph whose complement is disconnected too. Everything
//! polynomial in this crate is measured against it.

use crate::arcs::ArcModel;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linegraph;
use crate::reductions::WJoin;
use crate::verdict::{DisconnectedPartition, Reason, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A concrete reason a partition is not a disconnected partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionViolation {
    EmptyPart { part: usize },
    Overlap { vertex: usize, part_a: usize, part_b: usize },
    Uncovered { vertex: usize },
    EdgeV1V3 { u: usize, v: usize },
    EdgeV2V4 { u: usize, v: usize },
}

impl std::fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionViolation::EmptyPart { part } => write!(f, "part V{} is empty", part + 1),
            PartitionViolation::Overlap { vertex, part_a, part_b } => write!(
                f,
                "vertex {vertex} appears in both V{} and V{}",
                part_a + 1,
                part_b + 1
            ),
            PartitionViolation::Uncovered { vertex } => {
                write!(f, "vertex {vertex} is in no part")
            }
            PartitionViolation::EdgeV1V3 { u, v } => {
                write!(f, "edge ({u},{v}) joins V1 and V3")
            }
            PartitionViolation::EdgeV2V4 { u, v } => {
                write!(f, "edge ({u},{v}) joins V2 and V4")
            }
        }
    }
}

/// Checks the full disconnected-partition contract: four non-empty, pairwise
/// disjoint parts covering all vertices, V1 anticomplete to V3 and V2
/// anticomplete to V4. Returns the first violation in a fixed scan order.
pub fn check_partition(
    g: &Graph,
    p: &DisconnectedPartition,
) -> std::result::Result<(), PartitionViolation> {
    debug_assert_eq!(p.universe(), g.n());
    for i in 0..4 {
        if p.part(i).is_empty() {
            return Err(PartitionViolation::EmptyPart { part: i });
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if let Some(vertex) = p.part(i).intersection(p.part(j)).first() {
                return Err(PartitionViolation::Overlap {
                    vertex,
                    part_a: i,
                    part_b: j,
                });
            }
        }
    }
    let mut covered = VertexSet::new(g.n());
    for i in 0..4 {
        covered.union_with(p.part(i));
    }
    if let Some(vertex) = covered.complement().first() {
        return Err(PartitionViolation::Uncovered { vertex });
    }
    for (a, b, make) in [
        (0usize, 2usize, true),
        (1, 3, false),
    ] {
        for u in p.part(a).to_vec() {
            let hit = g.neighbours(u).intersection(p.part(b));
            if let Some(v) = hit.first() {
                return Err(if make {
                    PartitionViolation::EdgeV1V3 { u, v }
                } else {
                    PartitionViolation::EdgeV2V4 { u, v }
                });
            }
        }
    }
    Ok(())
}

fn mask_is_disconnected(adj: &[u64], mask: u64) -> bool {
    debug_assert!(mask != 0);
    let start = mask & mask.wrapping_neg();
    let mut visited = start;
    let mut pending = start;
    while pending != 0 {
        let v = pending.trailing_zeros() as usize;
        pending &= pending - 1;
        let add = adj[v] & mask & !visited;
        visited |= add;
        pending |= add;
    }
    visited != mask
}

fn mask_components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut comps = Vec::new();
    let mut remaining = mask;
    while remaining != 0 {
        let start = remaining & remaining.wrapping_neg();
        let mut comp = start;
        let mut pending = start;
        while pending != 0 {
            let v = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let add = adj[v] & remaining & !comp;
            comp |= add;
            pending |= add;
        }
        comps.push(comp);
        remaining &= !comp;
    }
    comps
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    let mut s = VertexSet::new(n);
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        s.insert(v);
    }
    s
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    debug_assert!(g.n() <= 64);
    (0..g.n())
        .map(|u| {
            let mut w = 0u64;
            for v in g.neighbours(u).iter() {
                w |= 1 << v;
            }
            w
        })
        .collect()
}

/// Exhaustive subset oracle. Enumerates every U with ∅ ⊂ U ⊂ V by
/// increasing popcount (lexicographic within); Yes iff both `G[U]` and `G-U` are
/// disconnected. The certificate splits each side's components into a first
/// component and the rest. `budget` caps the number of subsets examined.
pub fn oracle_disconnected_cut(g: &Graph, budget: u64) -> Result<Verdict> {
    if !g.is_connected() {
        return Err(Error::invalid("oracle requires a connected graph"));
    }
    let n = g.n();
    if n >= 64 {
        return Ok(Verdict::unresolved());
    }
    let adj = adjacency_masks(g);
    let full: u64 = (1u64 << n) - 1;
    let mut examined: u64 = 0;
    for k in 1..n {
        let mut u: u64 = (1u64 << k) - 1;
        loop {
            examined += 1;
            if examined > budget {
                return Ok(Verdict::unresolved());
            }
            let comp = full & !u;
            if mask_is_disconnected(&adj, u) && mask_is_disconnected(&adj, comp) {
                let cu = mask_components(&adj, u);
                let cc = mask_components(&adj, comp);
                let v1 = cu[0];
                let v3 = u & !v1;
                let v2 = cc[0];
                let v4 = comp & !v2;
                let cert = DisconnectedPartition::new([
                    mask_to_set(n, v1),
                    mask_to_set(n, v2),
                    mask_to_set(n, v3),
                    mask_to_set(n, v4),
                ]);
                debug_assert!(check_partition(g, &cert).is_ok());
                return Ok(Verdict::yes(cert, Reason::Oracle));
            }
            // Gosper's hack: next mask with the same popcount.
            let c = u & u.wrapping_neg();
            let r = u + c;
            if r > full {
                break;
            }
            u = (((r ^ u) >> 2) / c) | r;
            if u > full {
                break;
            }
        }
    }
    Ok(Verdict::no(Reason::Oracle))
}

fn cross_mixed(adj: &[u64], a: u64, b: u64) -> bool {
    let mut edge = false;
    let mut nonedge = false;
    let mut m = a;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let hits = adj[v] & b;
        if hits != 0 {
            edge = true;
        }
        if hits != b {
            nonedge = true;
        }
        if edge && nonedge {
            return true;
        }
    }
    false
}

fn mask_is_clique(adj: &[u64], a: u64) -> bool {
    let mut m = a;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if a & !(adj[v] | (1 << v)) != 0 {
            return false;
        }
    }
    true
}

/// Full W-join test on vertex masks: disjoint non-empty cliques,
/// |A|+|B| > 2, A neither complete nor anticomplete to B, every outside
/// vertex complete-or-anticomplete to each of A and B.
pub(crate) fn masks_form_wjoin(adj: &[u64], n: usize, a: u64, b: u64) -> bool {
    if a == 0 || b == 0 || a & b != 0 {
        return false;
    }
    if (a.count_ones() + b.count_ones()) as usize <= 2 {
        return false;
    }
    if !mask_is_clique(adj, a) || !mask_is_clique(adj, b) {
        return false;
    }
    if !cross_mixed(adj, a, b) {
        return false;
    }
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut outside = full & !(a | b);
    while outside != 0 {
        let x = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        let ha = adj[x] & a;
        if ha != 0 && ha != a {
            return false;
        }
        let hb = adj[x] & b;
        if hb != 0 && hb != b {
            return false;
        }
    }
    true
}

pub(crate) fn masks_proper(adj: &[u64], a: u64, b: u64) -> bool {
    let mut m = a;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let h = adj[v] & b;
        if h == 0 || h == b {
            return false;
        }
    }
    let mut m = b;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let h = adj[v] & a;
        if h == 0 || h == a {
            return false;
        }
    }
    true
}

/// Components of the bipartite cross-edge graph on A ∪ B (edges inside A or
/// inside B removed), as masks over the original vertex universe.
pub(crate) fn cross_graph_components(adj: &[u64], a: u64, b: u64) -> Vec<u64> {
    let cross_adj = |v: usize, a: u64, b: u64| -> u64 {
        if a >> v & 1 == 1 {
            adj[v] & b
        } else {
            adj[v] & a
        }
    };
    let mut comps = Vec::new();
    let mut remaining = a | b;
    while remaining != 0 {
        let start = remaining & remaining.wrapping_neg();
        let mut comp = start;
        let mut pending = start;
        while pending != 0 {
            let v = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let add = cross_adj(v, a, b) & remaining & !comp;
            comp |= add;
            pending |= add;
        }
        comps.push(comp);
        remaining &= !comp;
    }
    comps
}

fn shatterable(adj: &[u64], n: usize, a: u64, b: u64) -> bool {
    let comps = cross_graph_components(adj, a, b);
    if comps.len() < 2 {
        return false;
    }
    // A proper W-join is shatterable iff some grouping of cross-graph
    // components into two halves makes a half a proper W-join again.
    let k = comps.len();
    for sub in 1..(1u32 << k) - 1 {
        let mut half = 0u64;
        for (i, c) in comps.iter().enumerate() {
            if sub >> i & 1 == 1 {
                half |= c;
            }
        }
        let (ha, hb) = (half & a, half & b);
        if ha == 0 || hb == 0 || (a & !half) == 0 || (b & !half) == 0 {
            continue;
        }
        if masks_form_wjoin(adj, n, ha, hb) && masks_proper(adj, ha, hb) {
            return true;
        }
    }
    false
}

/// All W-joins of `g` by exhaustive 3-way labelling (every vertex into A, B
/// or outside), canonicalized so the smallest labelled vertex sits in A.
/// Requires n ≤ 12.
pub fn oracle_wjoins(g: &Graph) -> Result<Vec<WJoin>> {
    if g.n() > 12 {
        return Err(Error::invalid("oracle_wjoins is limited to n <= 12"));
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u64, u64)> = vec![(0, 0, 0)];
    while let Some((i, a, b)) = stack.pop() {
        if i == n {
            if a != 0 && b != 0 && masks_form_wjoin(&adj, n, a, b) {
                let proper = masks_proper(&adj, a, b);
                let unshatterable = proper && !shatterable(&adj, n, a, b);
                out.push(WJoin {
                    a_side: mask_to_set(n, a),
                    b_side: mask_to_set(n, b),
                    proper,
                    unshatterable,
                });
            }
            continue;
        }
        let bit = 1u64 << i;
        // Clique pruning on both sides; gating B on a non-empty A
        // canonicalizes (A,B) vs (B,A). Push order is irrelevant to the
        // final sorted output.
        if a != 0 && b & !adj[i] == 0 {
            stack.push((i + 1, a, b | bit));
        }
        if a & !adj[i] == 0 {
            stack.push((i + 1, a | bit, b));
        }
        stack.push((i + 1, a, b));
    }
    out.sort_by(|x, y| {
        (x.a_side.to_vec(), x.b_side.to_vec()).cmp(&(y.a_side.to_vec(), y.b_side.to_vec()))
    });
    Ok(out)
}

fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for &v in cycle {
        if !seen.insert(v) {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Constructive short-cycle finder for diameter-2 graphs with a valid
/// disconnected partition: returns an induced C4 or C5 meeting all four
/// parts. Construction failure would falsify the underlying guarantee, so it
/// surfaces as an internal error.
pub fn find_partition_cycle(g: &Graph, p: &DisconnectedPartition) -> Result<Vec<usize>> {
    if let Err(v) = check_partition(g, p) {
        return Err(Error::precondition(format!("partition invalid: {v}")));
    }
    let mut parts = p.parts().clone();
    let fail = |msg: &str| Error::internal(format!("partition cycle construction failed: {msg}"));

    let u1 = parts[0].first().unwrap();
    let u3 = parts[2].first().unwrap();
    let common = g.neighbours(u1).intersection(g.neighbours(u3));
    let u2 = common.first().ok_or_else(|| fail("no V1–V3 common neighbour"))?;
    if parts[3].contains(u2) {
        parts.swap(1, 3);
    }
    let u4 = parts[3].first().unwrap();
    let common2 = g.neighbours(u2).intersection(g.neighbours(u4));
    let u1p = common2
        .first()
        .ok_or_else(|| fail("no V2–V4 common neighbour"))?;
    let (u1p, u3) = if parts[2].contains(u1p) {
        parts.swap(0, 2);
        (u1p, u1)
    } else {
        (u1p, u3)
    };

    let cycle = if g.adjacent(u3, u4) {
        vec![u1p, u2, u3, u4]
    } else {
        let w_set = g.neighbours(u3).intersection(g.neighbours(u4));
        let w = w_set.first().ok_or_else(|| fail("no V3–V4 common neighbour"))?;
        if parts[2].contains(w) {
            if g.adjacent(u2, w) {
                vec![u1p, u2, w, u4]
            } else {
                vec![u1p, u2, u3, w, u4]
            }
        } else if parts[3].contains(w) {
            if g.adjacent(u1p, w) {
                vec![u1p, u2, u3, w]
            } else {
                vec![u1p, u2, u3, w, u4]
            }
        } else {
            return Err(fail("common neighbour escaped V3 ∪ V4"));
        }
    };

    if !is_induced_cycle(g, &cycle) {
        return Err(fail("constructed cycle is not induced"));
    }
    let mut touched = [false; 4];
    for &v in &cycle {
        touched[p.part_of(v).unwrap()] = true;
    }
    if touched != [true; 4] {
        return Err(fail("cycle misses a part"));
    }
    Ok(cycle)
}

/// Seeded generator families for the test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Gnp,
    LineOfRandom,
    ProperCircularArc,
    ComplementOfTriangleFree,
    WJoinGadget,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Gnp => "gnp",
            GeneratorKind::LineOfRandom => "line-of-random",
            GeneratorKind::ProperCircularArc => "proper-circular-arc",
            GeneratorKind::ComplementOfTriangleFree => "complement-of-triangle-free",
            GeneratorKind::WJoinGadget => "wjoin-gadget",
        }
    }

    pub fn parse(s: &str) -> Option<GeneratorKind> {
        match s {
            "gnp" => Some(GeneratorKind::Gnp),
            "line-of-random" => Some(GeneratorKind::LineOfRandom),
            "proper-circular-arc" => Some(GeneratorKind::ProperCircularArc),
            "complement-of-triangle-free" => Some(GeneratorKind::ComplementOfTriangleFree),
            "wjoin-gadget" => Some(GeneratorKind::WJoinGadget),
            _ => None,
        }
    }
}

/// Identical specs always produce identical graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub density: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, density: f64, seed: u64) -> Self {
        GeneratorSpec { kind, n, density, seed }
    }
}

fn rng_for(spec: &GeneratorSpec) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(spec.seed)
}

fn gen_gnp(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let p = density.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

fn gen_line_of_random(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = n.max(1);
    // Source graph size tuned so its edge count n gives density near 1/2.
    let k = (((1.0 + (1.0 + 16.0 * n as f64).sqrt()) / 2.0).round() as usize).clamp(2, n + 1);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n);
    for i in 1..k {
        let parent = rng.gen_range(0..i);
        edges.push((parent, i));
    }
    let mut rest: Vec<(usize, usize)> = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if !edges.contains(&(u, v)) {
                rest.push((u, v));
            }
        }
    }
    // Fisher–Yates on the remaining non-edges.
    for i in (1..rest.len()).rev() {
        let j = rng.gen_range(0..=i);
        rest.swap(i, j);
    }
    for &e in rest.iter().take(n.saturating_sub(k - 1)) {
        edges.push(e);
    }
    let root = Graph::build(k, &edges).unwrap();
    linegraph::line_graph_of(&root).expect("source has edges").0
}

fn gen_complement_of_triangle_free(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    for i in (1..pairs.len()).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    let target = (density.clamp(0.0, 1.0) * pairs.len() as f64).round() as usize;
    let mut adj = vec![VertexSet::new(n); n];
    let mut edges = Vec::new();
    for &(u, v) in &pairs {
        if edges.len() >= target {
            break;
        }
        if adj[u].is_disjoint(&adj[v]) {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).unwrap().complement()
}

fn gen_wjoin_gadget(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 6 {
        return Err(Error::invalid("wjoin-gadget needs n >= 6"));
    }
    let k = (n - 2) / 2;
    let base = crate::named::wjoin_gadget(k);
    let mut edges = base.edges();
    let extra = n % 2 == 1;
    if extra {
        // One spare vertex hanging off both attachment cliques.
        let r = n - 1;
        edges.push((2 * k, r));
        edges.push((2 * k + 1, r));
    }
    // Seeded relabelling keeps the family non-trivial for detector tests.
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let relabelled: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::build(n, &relabelled)
}

fn frac(x: f64) -> f64 {
    x - x.floor()
}

fn gen_proper_circular_arc(n: usize, density: f64, rng: &mut ChaCha8Rng) -> (Graph, ArcModel) {
    let base = density.clamp(0.15, 0.85);
    let mut ends: Vec<(f64, usize, bool)> = Vec::with_capacity(2 * n);
    for v in 0..n {
        let len = base * (0.9 + 0.2 * rng.gen::<f64>());
        let centre = rng.gen::<f64>();
        ends.push((frac(centre - len / 2.0), v, false));
        ends.push((frac(centre + len / 2.0), v, true));
    }
    ends.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut arcs = vec![(0usize, 0usize); n];
    for (rank, &(_, v, right)) in ends.iter().enumerate() {
        if right {
            arcs[v].1 = rank + 1;
        } else {
            arcs[v].0 = rank + 1;
        }
    }
    // Swap right endpoints of nested pairs until no arc contains another;
    // each swap strictly reduces the length spread, so this terminates.
    let span = |l: usize, r: usize| (r + 2 * n - l) % (2 * n) + 1;
    let contains = |outer: (usize, usize), inner: (usize, usize)| {
        let a = (inner.0 + 2 * n - outer.0) % (2 * n);
        let b = (inner.1 + 2 * n - outer.0) % (2 * n);
        let s = (outer.1 + 2 * n - outer.0) % (2 * n);
        a <= b && b <= s
    };
    loop {
        let mut swapped = false;
        'outer: for i in 0..n {
            for j in 0..n {
                if i != j && span(arcs[i].0, arcs[i].1) > span(arcs[j].0, arcs[j].1)
                    && contains(arcs[i], arcs[j])
                {
                    let tmp = arcs[i].1;
                    arcs[i].1 = arcs[j].1;
                    arcs[j].1 = tmp;
                    swapped = true;
                    break 'outer;
                }
            }
        }
        if !swapped {
            break;
        }
    }
    let model = ArcModel::new(arcs).expect("constructed endpoints form a permutation");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if model.arcs_intersect(u, v) {
                edges.push((u, v));
            }
        }
    }
    (Graph::build(n, &edges).unwrap(), model)
}

/// Deterministic instance generation; `proper-circular-arc` also yields the
/// intersection model that produced the graph.
pub fn generate(spec: &GeneratorSpec) -> Result<(Graph, Option<ArcModel>)> {
    if spec.n == 0 {
        return Err(Error::invalid("generator needs n >= 1"));
    }
    let mut rng = rng_for(spec);
    match spec.kind {
        GeneratorKind::Gnp => Ok((gen_gnp(spec.n, spec.density, &mut rng), None)),
        GeneratorKind::LineOfRandom => Ok((gen_line_of_random(spec.n, &mut rng), None)),
        GeneratorKind::ProperCircularArc => {
            let (g, m) = gen_proper_circular_arc(spec.n, spec.density, &mut rng);
            Ok((g, Some(m)))
        }
        GeneratorKind::ComplementOfTriangleFree => Ok((
            gen_complement_of_triangle_free(spec.n, spec.density, &mut rng),
            None,
        )),
        GeneratorKind::WJoinGadget => Ok((gen_wjoin_gadget(spec.n, &mut rng)?, None)),
    }
}
