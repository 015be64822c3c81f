//! Module-level invariants on seeded corpora: certificate validity,
//! agreement with independent re-implementations, reduction soundness, and
//! the structural facts the solvers lean on.

mod common;

use common::{gnp_connected, mix, oracle_answer};
use discut::arcs::{self, Recognition};
use discut::graph::{classify_by_diameter, DiameterOutcome, Graph};
use discut::linegraph;
use discut::oracle::{
    check_partition, find_partition_cycle, generate, oracle_disconnected_cut, oracle_wjoins,
    GeneratorKind, GeneratorSpec,
};
use discut::pattern::{self, PatternId};
use discut::reductions::{
    detect_proper_wjoin, lift_certificate, make_unshatterable, remove_nested_exhaustively,
    sets_form_wjoin, sets_proper,
};

/// Independent induced-pattern matcher: all |V(p)|-subsets, all permutations.
fn independent_find(g: &Graph, p: PatternId) -> bool {
    let k = p.vertex_count();
    if g.n() < k {
        return false;
    }
    let pattern_edges = p.edges();
    let mut subset: Vec<usize> = Vec::new();
    fn subsets(
        n: usize,
        k: usize,
        from: usize,
        cur: &mut Vec<usize>,
        found: &mut bool,
        test: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        if *found {
            return;
        }
        if cur.len() == k {
            if test(cur) {
                *found = true;
            }
            return;
        }
        for v in from..n {
            cur.push(v);
            subsets(n, k, v + 1, cur, found, test);
            cur.pop();
        }
    }
    fn permutations(items: &[usize], test: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let mut perm = items.to_vec();
        heap(&mut perm, items.len(), test)
    }
    fn heap(perm: &mut Vec<usize>, k: usize, test: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == 1 {
            return test(perm);
        }
        for i in 0..k {
            if heap(perm, k - 1, test) {
                return true;
            }
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
        false
    }
    let mut found = false;
    subsets(g.n(), k, 0, &mut subset, &mut found, &mut |sub| {
        permutations(sub, &mut |perm| {
            (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    let want = pattern_edges.contains(&(i, j)) || pattern_edges.contains(&(j, i));
                    g.adjacent(perm[i], perm[j]) == want
                })
            })
        })
    });
    found
}

#[test]
fn pattern_matcher_agrees_with_independent_enumeration() {
    for i in 0..60u64 {
        let (n, d) = mix(11, i, 4, 9);
        let g = gnp_connected(n, d, 500 + i);
        for &p in PatternId::all() {
            if p.vertex_count() > g.n() {
                continue;
            }
            let fast = pattern::find_induced_pattern(&g, p).is_some();
            let slow = independent_find(&g, p);
            assert_eq!(fast, slow, "pattern {p:?} on {g:?}");
        }
    }
}

#[test]
fn classify_certificates_and_oracle_agreement() {
    for i in 0..150u64 {
        let (n, d) = mix(77, i, 4, 14);
        let g = gnp_connected(n, d, 900 + i);
        match classify_by_diameter(&g).unwrap() {
            DiameterOutcome::Resolved(v) => {
                if let Some(c) = &v.certificate {
                    check_partition(&g, c).unwrap();
                }
                if g.n() <= 12 {
                    assert_eq!(v.is_yes(), oracle_answer(&g));
                }
            }
            DiameterOutcome::NeedsDiameterTwoWork => {
                assert_eq!(g.diameter(), Some(2));
            }
        }
    }
}

/// Independent ground truth: enumerate all 4-part assignments directly.
fn partition_enumeration_oracle(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 8);
    let mut assign = vec![0usize; n];
    fn rec(g: &Graph, assign: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            let mut count = [0usize; 4];
            for &a in assign.iter() {
                count[a] += 1;
            }
            if count.contains(&0) {
                return false;
            }
            for u in 0..g.n() {
                for w in u + 1..g.n() {
                    if g.adjacent(u, w) {
                        let (a, b) = (assign[u].min(assign[w]), assign[u].max(assign[w]));
                        if (a, b) == (0, 2) || (a, b) == (1, 3) {
                            return false;
                        }
                    }
                }
            }
            return true;
        }
        (0..4).any(|p| {
            assign[v] = p;
            rec(g, assign, v + 1)
        })
    }
    rec(g, &mut assign, 0)
}

#[test]
fn subset_oracle_agrees_with_partition_enumeration() {
    for i in 0..120u64 {
        let (n, d) = mix(3, i, 4, 8);
        let g = gnp_connected(n, d, 40 + i);
        assert_eq!(oracle_answer(&g), partition_enumeration_oracle(&g));
    }
}

#[test]
fn complete_multipartite_invariant() {
    for i in 0..80u64 {
        let (n, d) = mix(5, i, 4, 10);
        let g = gnp_connected(n, d, 61 + i);
        if let Some(classes) = g.complete_multipartite_classes() {
            let comp = g.complement();
            let comps = comp.components();
            assert_eq!(comps.len(), classes.len());
            for c in &classes {
                assert!(comps.contains(c));
            }
        }
        // Octahedron-style positives.
        let octa = discut::named::octahedron();
        assert_eq!(octa.complete_multipartite_classes().unwrap().len(), 3);
    }
}

#[test]
fn universal_pair_literal_conditions() {
    for i in 0..120u64 {
        let (n, d) = mix(9, i, 4, 10);
        let g = gnp_connected(n, d, 71 + i);
        match g.universal_pair() {
            Some(up) => {
                assert!(up.x != up.y);
                assert!(up.x != up.u && up.x != up.v && up.y != up.u && up.y != up.v);
                assert!(g.adjacent(up.x, up.u) && g.adjacent(up.y, up.v));
                for w in 0..g.n() {
                    if w != up.u && w != up.v {
                        assert!(g.adjacent(w, up.u) || g.adjacent(w, up.v));
                    }
                }
            }
            None => {
                // Brute re-scan confirms absence.
                for u in 0..g.n() {
                    for v in u + 1..g.n() {
                        let dominating = (0..g.n())
                            .filter(|&w| w != u && w != v)
                            .all(|w| g.adjacent(w, u) || g.adjacent(w, v));
                        if !dominating {
                            continue;
                        }
                        let wu: Vec<usize> = g
                            .neighbours(u)
                            .iter()
                            .filter(|&w| w != u && w != v)
                            .collect();
                        let wv: Vec<usize> = g
                            .neighbours(v)
                            .iter()
                            .filter(|&w| w != u && w != v)
                            .collect();
                        let witnesses = wu
                            .iter()
                            .any(|&x| wv.iter().any(|&y| x != y));
                        assert!(!witnesses, "missed universal pair ({u},{v})");
                    }
                }
            }
        }
    }
}

#[test]
fn partition_cycle_property() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 150 {
        let (n, d) = mix(13, i, 5, 12);
        i += 1;
        let g = gnp_connected(n, d, 81 + i);
        if g.diameter() != Some(2) {
            continue;
        }
        let v = oracle_disconnected_cut(&g, u64::MAX).unwrap();
        if !v.is_yes() {
            continue;
        }
        let p = v.certificate.unwrap();
        let cycle = find_partition_cycle(&g, &p).unwrap();
        assert!(cycle.len() == 4 || cycle.len() == 5);
        checked += 1;
    }
}

#[test]
fn nested_removal_preserves_answers_and_diameter() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 120 {
        let (n, d) = mix(17, i, 5, 11);
        i += 1;
        let g = gnp_connected(n, d, 131 + i);
        if g.diameter() != Some(2) || g.nested_pair().is_none() {
            continue;
        }
        let (reduced, trace) = remove_nested_exhaustively(&g).unwrap();
        assert!(reduced.adjacent_nested_pair().is_none());
        let graphs = trace.replay();
        let expect = oracle_answer(&g);
        for h in &graphs {
            assert!(h.diameter().is_some_and(|d| d <= 2));
            assert_eq!(oracle_answer(h), expect, "answer changed along the chain");
        }
        // Lift a certificate back when the answer is yes.
        if expect && graphs.last().unwrap().n() >= 4 {
            let last = graphs.last().unwrap();
            if let Some(cert) = oracle_disconnected_cut(last, u64::MAX).unwrap().certificate {
                let lifted = lift_certificate(&trace, &cert).unwrap();
                check_partition(&g, &lifted).unwrap();
            }
        }
        checked += 1;
    }
}

#[test]
fn detector_is_complete_on_distinct_neighbourhood_graphs() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 60 {
        let (n, d) = mix(23, i, 5, 10);
        i += 1;
        let g = gnp_connected(n, d, 171 + i);
        if g.nested_pair().is_some() {
            continue;
        }
        let joins = oracle_wjoins(&g).unwrap();
        match detect_proper_wjoin(&g) {
            None => assert!(joins.is_empty(), "detector missed a W-join on {g:?}"),
            Some(w) => {
                assert!(sets_form_wjoin(&g, &w.a_side, &w.b_side));
                assert!(sets_proper(&g, &w.a_side, &w.b_side));
                assert!(joins.iter().any(|j| {
                    (w.a_side.is_subset_of(&j.a_side) && w.b_side.is_subset_of(&j.b_side))
                        || (w.a_side.is_subset_of(&j.b_side) && w.b_side.is_subset_of(&j.a_side))
                }));
            }
        }
        checked += 1;
    }
    // Gadget family positives at several widths.
    for k in 2..=5 {
        let g = discut::named::wjoin_gadget(k);
        let w = detect_proper_wjoin(&g).expect("gadget W-join must be found");
        let u = make_unshatterable(&g, &w).unwrap();
        assert!(u.unshatterable);
    }
}

#[test]
fn pca_generator_and_solver_agree_with_oracle() {
    let mut checked = 0;
    let mut scattered = 0;
    let mut i = 0u64;
    while checked < 150 {
        let (n, d) = mix(29, i, 4, 12);
        i += 1;
        let spec = GeneratorSpec::new(GeneratorKind::ProperCircularArc, n, d, 2000 + i);
        let (g, model) = generate(&spec).unwrap();
        if !g.is_connected() {
            continue;
        }
        let model = model.unwrap();
        let v = arcs::solve_circular_arc(&g, &model).unwrap();
        assert!(!v.is_unresolved());
        assert_eq!(v.is_yes(), oracle_answer(&g), "mismatch on {g:?}");
        if g.diameter() == Some(2) && oracle_answer(&g) {
            for cert in some_valid_partitions(&g, 4) {
                if (0..4).any(|k| !g.is_set_connected(cert.part(k))) {
                    scattered += 1;
                }
                let q = arcs::connectify_partition(&g, &model, &cert).unwrap();
                check_partition(&g, &q).unwrap();
                for part in 0..4 {
                    assert!(g.is_set_connected(q.part(part)));
                }
            }
        }
        if let Some(c) = &v.certificate {
            check_partition(&g, c).unwrap();
        }
        checked += 1;
    }
    // Scattered (disconnected-part) partitions never showed up in this
    // corpus: diameter-2 circular-arc cuts split into exactly two arc
    // regions per side here, so connectification is exercised on its full
    // contract but the stray-vertex branch stays idle.
    let _ = scattered;
}

/// A few valid disconnected partitions per graph, preferring cuts whose
/// side splits into three or more components (those yield partitions with
/// a disconnected part when grouped two-and-rest).
fn some_valid_partitions(g: &Graph, cap: usize) -> Vec<discut::DisconnectedPartition> {
    use discut::graph::VertexSet;
    let n = g.n();
    assert!(n <= 16);
    let full = VertexSet::full(n);
    let mut plain = Vec::new();
    let mut scattered = Vec::new();
    for mask in 1u32..(1 << n) - 1 {
        if scattered.len() >= cap {
            break;
        }
        let side = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let rest = full.difference(&side);
        let cs = g.components_of(&side);
        let cr = g.components_of(&rest);
        if cs.len() < 2 || cr.len() < 2 {
            continue;
        }
        let mut v1 = cs[0].clone();
        let mut v3 = VertexSet::new(n);
        for c in &cs[1..] {
            v3.union_with(c);
        }
        let v2 = cr[0].clone();
        let mut v4 = VertexSet::new(n);
        for c in &cr[1..] {
            v4.union_with(c);
        }
        let multi = cs.len() >= 3 || cr.len() >= 3;
        if cs.len() >= 3 {
            // Group two components together so V1 comes out disconnected.
            v1.union_with(&cs[1]);
            v3.difference_with(&cs[1]);
        }
        let p = discut::DisconnectedPartition::new([v1, v2, v3, v4]);
        if check_partition(g, &p).is_ok() {
            if multi {
                scattered.push(p);
            } else if plain.len() < cap {
                plain.push(p);
            }
        }
    }
    scattered.extend(plain.into_iter().take(cap.saturating_sub(scattered.len())));
    scattered.truncate(cap);
    scattered
}

#[test]
fn planted_wjoins_are_detected_in_arbitrary_hosts() {
    // Blowing an adjacent pair into a matching-pattern pair plants a proper
    // W-join; on hosts without nested pairs the detector must find a join
    // contained in one the exponential oracle lists.
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 40 {
        let (n, d) = mix(59, i, 4, 8);
        i += 1;
        let host = gnp_connected(n, d, 9_000 + i);
        if host.m() == 0 {
            continue;
        }
        let (u, v) = host.edges()[0];
        let g = discut::named::thicken_matching_pair(&host, u, v);
        if g.nested_pair().is_some() || g.n() > 10 {
            continue;
        }
        let joins = oracle_wjoins(&g).unwrap();
        assert!(!joins.is_empty(), "planted join missing from oracle on {g:?}");
        let w = detect_proper_wjoin(&g).expect("detector must find the planted join");
        assert!(joins.iter().any(|j| {
            (w.a_side.is_subset_of(&j.a_side) && w.b_side.is_subset_of(&j.b_side))
                || (w.a_side.is_subset_of(&j.b_side) && w.b_side.is_subset_of(&j.a_side))
        }));
        let uw = make_unshatterable(&g, &w).unwrap();
        assert!(uw.unshatterable);
        checked += 1;
    }
}

#[test]
fn greedy_cycle_arcs_cover_the_circle() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 80 {
        let (n, d) = mix(31, i, 5, 12);
        i += 1;
        let (g, model) = generate(&GeneratorSpec::new(
            GeneratorKind::ProperCircularArc,
            n,
            d,
            3000 + i,
        ))
        .unwrap();
        if !g.is_connected() {
            continue;
        }
        let model = model.unwrap();
        if let Some(cycle) = arcs::greedy_induced_cycle(&model) {
            assert!(cycle.len() >= 4);
            let mut covered = vec![false; 2 * g.n() + 1];
            for &v in &cycle {
                let (l, r) = model.arc(v);
                let mut p = l;
                loop {
                    covered[p] = true;
                    if p == r {
                        break;
                    }
                    p = p % (2 * g.n()) + 1;
                }
            }
            assert!(covered[1..].iter().all(|&c| c), "cycle arcs leave a gap");
        }
        checked += 1;
    }
}

#[test]
fn recognition_round_trips_on_generated_pca_instances() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 25 {
        let (n, d) = mix(37, i, 4, 9);
        i += 1;
        let (g, _) = generate(&GeneratorSpec::new(
            GeneratorKind::ProperCircularArc,
            n,
            d,
            4000 + i,
        ))
        .unwrap();
        if !g.is_connected() {
            continue;
        }
        match arcs::recognize_arcs(&g, 10_000_000) {
            Recognition::Model(m) => {
                assert!(arcs::validate_arc_model(&g, &m).unwrap().is_ok())
            }
            other => panic!("known circular-arc graph not recognized: {other:?}"),
        }
        checked += 1;
    }
}

#[test]
fn line_graph_roundtrip_at_full_density_range() {
    // Reconstruction round-trips for roots up to n = 9 at any density, the
    // Whitney K3 exception aside (no oracle involved, so no edge cap).
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 60 {
        let (n, d) = mix(61, i, 3, 9);
        i += 1;
        let g = gnp_connected(n, 0.2 + d, 9_500 + i);
        if g.m() == 0 {
            continue;
        }
        let (l, _) = linegraph::line_graph_of(&g).unwrap();
        let rm = linegraph::reconstruct_root(&l).expect("line graphs must reconstruct");
        assert!(
            discut::iso::isomorphic(&rm.root, &g) || (l.n() == 3 && l.m() == 3),
            "root mismatch for {g:?}"
        );
        checked += 1;
    }
}

#[test]
fn line_graph_roundtrip_and_solver_agreement() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 80 {
        let (n, mut d) = mix(41, i, 4, 9);
        d = d.min(0.55); // keep line graphs small enough for the oracle
        i += 1;
        let g = gnp_connected(n, d, 5000 + i);
        if g.m() == 0 || g.m() > 20 {
            continue;
        }
        let (l, _) = linegraph::line_graph_of(&g).unwrap();
        let rm = linegraph::reconstruct_root(&l).unwrap();
        let (l2, _) = linegraph::line_graph_of(&rm.root).unwrap();
        assert!(discut::iso::isomorphic(&l, &l2), "roundtrip failed for {g:?}");
        assert!(
            discut::iso::isomorphic(&rm.root, &g) || (g.n() == 3 && g.m() == 3),
            "root not isomorphic to the source"
        );
        let v = linegraph::solve_line_graph(&l).unwrap();
        assert!(!v.is_unresolved());
        assert_eq!(v.is_yes(), oracle_answer(&l), "solver mismatch for root {g:?}");
        if let Some(c) = &v.certificate {
            check_partition(&l, c).unwrap();
        }
        checked += 1;
    }
}

#[test]
fn line_diameter_equivalence_and_root_transfer() {
    let mut both_diam2 = 0;
    let mut i = 0u64;
    while both_diam2 < 40 && i < 4000 {
        let (n, d) = mix(43, i, 4, 9);
        i += 1;
        let g = gnp_connected(n, d.min(0.6), 6000 + i);
        if g.m() == 0 || g.m() > 20 || linegraph::is_triangle(&g) || linegraph::is_star(&g) {
            continue;
        }
        let (l, _) = linegraph::line_graph_of(&g).unwrap();
        // L has diameter 2 iff the root has no induced pair of disjoint edges.
        let free = linegraph::root_is_2p2_free(&g).unwrap();
        assert_eq!(l.diameter() == Some(2), free);
        if g.diameter() == Some(2) && l.diameter() == Some(2) {
            assert_eq!(oracle_answer(&g), oracle_answer(&l));
            both_diam2 += 1;
        }
    }
    assert!(both_diam2 >= 20, "corpus too thin: {both_diam2}");
}

#[test]
fn diameter_three_roots_cycle_part_bound() {
    // For roots of diameter 3 that reach the final case of the line-graph
    // solver, every induced C4/C5 meets at most three parts of any valid
    // partition of the root.
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 25 && i < 6000 {
        let (n, d) = mix(47, i, 5, 9);
        i += 1;
        let g = gnp_connected(n, d.min(0.5), 7000 + i);
        if g.m() == 0
            || g.m() > 20
            || linegraph::is_triangle(&g)
            || linegraph::is_star(&g)
            || g.diameter() != Some(3)
        {
            continue;
        }
        if !linegraph::root_is_2p2_free(&g).unwrap() {
            continue;
        }
        // The bound holds in the solver's final case, i.e. when no edge has
        // two branching endpoints without a common neighbour (the line
        // graph has no vertex with a disconnected neighbourhood).
        let has_split_edge = g.edges().iter().any(|&(u, v)| {
            g.degree(u) >= 2
                && g.degree(v) >= 2
                && g.neighbours(u).intersection(g.neighbours(v)).is_empty()
        });
        if has_split_edge {
            continue;
        }
        let v = oracle_disconnected_cut(&g, u64::MAX).unwrap();
        let p = match v.certificate {
            Some(p) => p,
            None => continue,
        };
        for pat in [PatternId::C4, PatternId::C5] {
            pattern::visit_induced(&g, pat, &mut |occ| {
                let mut touched = std::collections::HashSet::new();
                for &x in occ {
                    touched.insert(p.part_of(x).unwrap());
                }
                assert!(
                    touched.len() <= 3,
                    "induced {pat:?} meets {} parts in {g:?}",
                    touched.len()
                );
                true
            });
        }
        checked += 1;
    }
}

#[test]
fn wjoins_are_proper_without_nested_pairs() {
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 60 {
        let (n, d) = mix(53, i, 5, 10);
        i += 1;
        let g = gnp_connected(n, d, 8000 + i);
        if g.nested_pair().is_some() {
            continue;
        }
        for j in oracle_wjoins(&g).unwrap() {
            assert!(j.proper, "improper W-join in a distinct-neighbourhood graph");
        }
        checked += 1;
    }
}
