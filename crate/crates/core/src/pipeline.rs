//! The claw-free orchestrator and the auto-dispatcher.
//!
//! The claw-free route loops: small graphs go straight to the oracle, the
//! diameter trichotomy and the independence bound are rechecked after every
//! change, adjacent nested pairs are deleted one at a time, detected proper
//! W-joins are shrunk to unshatterable ones and contracted. When nothing
//! applies the reduced graph is guaranteed to be a line graph or a
//! (proper) circular-arc graph; recognition failure falls back to the
//! oracle and is counted, since that path indicates a bug or a budget
//! shortfall rather than a legitimate outcome.

use crate::arcs::{self, ArcModel, Recognition};
use crate::error::{Error, Result};
use crate::graph::{classify_by_diameter, DiameterOutcome, Graph};
use crate::hfree;
use crate::linegraph;
use crate::oracle::{check_partition, oracle_disconnected_cut};
use crate::pattern::{self, PatternId};
use crate::reductions::{
    contract_wjoin, detect_proper_wjoin, lift_certificate, make_unshatterable,
    nested_removal_step, ReductionTrace,
};
use crate::verdict::Verdict;

/// Work limits for the budgeted substitutes of the cited subroutines.
/// Exceeding a budget yields Unresolved, never a wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Max subsets the exponential oracle may examine.
    pub oracle_subsets: u64,
    /// Max node expansions of the arc-model search.
    pub recognition_expansions: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            oracle_subsets: 1 << 22,
            recognition_expansions: 10_000_000,
        }
    }
}

/// Verdict plus the reduction trace (certificates are already lifted to the
/// original graph), the route taken, and audit counters.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    pub trace: ReductionTrace,
    pub route: String,
    /// Times the reduced graph was accepted by neither the line-graph nor
    /// the circular-arc recognizer. Expected to stay 0.
    pub oracle_fallbacks: u32,
    /// Times a contraction left a graph of diameter other than 2.
    pub diameter_shifts: u32,
}

/// The claw-free decision pipeline. Certificates are lifted through the
/// trace and checker-verified on the original graph.
pub fn solve_claw_free(g: &Graph, budgets: &Budgets) -> Result<SolveOutcome> {
    solve_claw_free_with_arcs(g, budgets, None)
}

/// Same pipeline with an optional user-supplied arc model of the original
/// graph, preferred over recognition at the circular-arc base case.
pub fn solve_claw_free_with_arcs(
    g: &Graph,
    budgets: &Budgets,
    user_arcs: Option<&ArcModel>,
) -> Result<SolveOutcome> {
    if !g.is_connected() {
        return Err(Error::invalid("claw-free pipeline needs a connected graph"));
    }
    if let Some(w) = pattern::find_induced_pattern(g, PatternId::Claw) {
        return Err(Error::invalid(format!(
            "input is not claw-free: induced claw at centre {} with leaves {}, {}, {}",
            w[0], w[1], w[2], w[3]
        )));
    }
    if let Some(m) = user_arcs {
        if arcs::validate_arc_model(g, m)?.is_err() {
            return Err(Error::invalid("supplied arc model disagrees with the graph"));
        }
    }

    let mut trace = ReductionTrace::new(g.clone());
    let mut h = g.clone();
    let mut oracle_fallbacks = 0u32;
    let mut diameter_shifts = 0u32;
    let (verdict, route) = loop {
        if h.n() < 4 {
            break (Verdict::no(crate::verdict::Reason::TooFewVertices), "trivial");
        }
        match classify_by_diameter(&h)? {
            DiameterOutcome::Resolved(v) => break (v, "diameter"),
            DiameterOutcome::NeedsDiameterTwoWork => {}
        }
        if h.n() <= 13 {
            break (
                oracle_disconnected_cut(&h, budgets.oracle_subsets)?,
                "oracle-small",
            );
        }
        if h.independence_exceeds_three().is_none() {
            break (
                hfree::solve_small_independence(&h, budgets.oracle_subsets)?,
                "small-independence",
            );
        }
        if let Some((next, step)) = nested_removal_step(&h) {
            trace.push(step);
            h = next;
            continue;
        }
        if let Some(w) = detect_proper_wjoin(&h) {
            let w = make_unshatterable(&h, &w)?;
            let (next, step) = contract_wjoin(&h, &w)?;
            if next.n() >= h.n() {
                return Err(Error::internal("contraction failed to shrink the graph"));
            }
            if next.diameter() != Some(2) {
                diameter_shifts += 1;
            }
            trace.push(step);
            h = next;
            continue;
        }
        // Base case: line graph or circular-arc graph.
        if linegraph::reconstruct_root(&h).is_some() {
            break (linegraph::solve_line_graph(&h)?, "line");
        }
        if let Some(model) = user_arcs {
            let map = trace.reduced_to_original();
            let restricted = model.restrict(&map);
            if arcs::validate_arc_model(&h, &restricted)?.is_ok() {
                break (arcs::solve_circular_arc(&h, &restricted)?, "circular-arc");
            }
        }
        match arcs::recognize_arcs(&h, budgets.recognition_expansions) {
            Recognition::Model(model) => {
                break (arcs::solve_circular_arc(&h, &model)?, "circular-arc")
            }
            Recognition::NotCircularArc | Recognition::Unresolved => {
                oracle_fallbacks += 1;
                break (
                    oracle_disconnected_cut(&h, budgets.oracle_subsets)?,
                    "oracle-fallback",
                );
            }
        }
    };

    let verdict = if verdict.is_yes() {
        let cert = verdict.certificate.as_ref().unwrap();
        let lifted = lift_certificate(&trace, cert)?;
        check_partition(g, &lifted)
            .map_err(|e| Error::internal(format!("lifted certificate failed: {e}")))?;
        Verdict::yes(lifted, verdict.reason)
    } else {
        verdict
    };
    Ok(SolveOutcome {
        verdict,
        trace,
        route: route.to_string(),
        oracle_fallbacks,
        diameter_shifts,
    })
}

/// Routes claw-free inputs to the pipeline and everything else to the
/// 4-vertex-class dispatcher.
pub fn solve_auto(g: &Graph, budgets: &Budgets) -> Result<SolveOutcome> {
    solve_auto_with_arcs(g, budgets, None)
}

pub fn solve_auto_with_arcs(
    g: &Graph,
    budgets: &Budgets,
    user_arcs: Option<&ArcModel>,
) -> Result<SolveOutcome> {
    if !g.is_connected() {
        return Err(Error::invalid("solver needs a connected graph"));
    }
    if g.n() >= 4 && pattern::is_free_of(g, PatternId::Claw) {
        let mut outcome = solve_claw_free_with_arcs(g, budgets, user_arcs)?;
        outcome.route = format!("clawfree/{}", outcome.route);
        return Ok(outcome);
    }
    let routed = hfree::dispatch_hfree(g, budgets)?;
    Ok(SolveOutcome {
        verdict: routed.verdict,
        trace: ReductionTrace::new(g.clone()),
        route: routed.route,
        oracle_fallbacks: 0,
        diameter_shifts: 0,
    })
}

fn diameter_two_clawfree_gate(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::invalid("graph must be connected"));
    }
    if let Some(w) = pattern::find_induced_pattern(g, PatternId::Claw) {
        return Err(Error::OutOfScope(format!(
            "input is not claw-free (claw at centre {})",
            w[0]
        )));
    }
    if g.diameter() != Some(2) {
        return Err(Error::OutOfScope(
            "only diameter-2 inputs are supported".into(),
        ));
    }
    Ok(())
}

/// Contractibility to the 4-cycle for claw-free graphs of diameter 2 is
/// equivalent to having a disconnected cut; the partition is the witness
/// (the contraction map interpretation is documented, not computed).
pub fn c4_contractibility_clawfree(g: &Graph, budgets: &Budgets) -> Result<Verdict> {
    diameter_two_clawfree_gate(g)?;
    Ok(solve_claw_free(g, budgets)?.verdict)
}

/// Compaction onto the reflexive 4-cycle, same equivalence at diameter 2.
pub fn c4_compaction_clawfree(g: &Graph, budgets: &Budgets) -> Result<Verdict> {
    diameter_two_clawfree_gate(g)?;
    Ok(solve_claw_free(g, budgets)?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn oracle_yes(g: &Graph) -> bool {
        oracle_disconnected_cut(g, u64::MAX).unwrap().is_yes()
    }

    #[test]
    fn clawfree_named_cases() {
        let budgets = Budgets::default();
        let v = solve_claw_free(&named::cycle(5), &budgets).unwrap();
        assert!(v.verdict.is_yes());
        check_partition(&named::cycle(5), v.verdict.certificate.as_ref().unwrap()).unwrap();

        let v = solve_claw_free(&named::cycle(7), &budgets).unwrap();
        assert!(v.verdict.is_yes());

        let v = solve_claw_free(&named::wjoin_gadget6(), &budgets).unwrap();
        assert!(v.verdict.is_yes());
        assert_eq!(v.oracle_fallbacks, 0);

        // A claw is rejected with a witness.
        let err = solve_claw_free(&named::star(3), &budgets).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn pipeline_exercises_reductions_above_oracle_cutoff() {
        // The attachment-clique gadget has independence number 2, so above
        // the oracle cutoff it resolves through the small-independence
        // branch.
        let budgets = Budgets::default();
        let g = named::wjoin_gadget(7); // |A| = |B| = 7, n = 16
        assert!(pattern::is_free_of(&g, PatternId::Claw));
        let out = solve_claw_free(&g, &budgets).unwrap();
        assert_eq!(out.verdict.is_yes(), oracle_yes(&g));
        if let Some(c) = &out.verdict.certificate {
            check_partition(&g, c).unwrap();
        }
        assert_eq!(out.oracle_fallbacks, 0);
        assert_eq!(out.route, "small-independence");
    }

    #[test]
    fn pipeline_removes_nested_twin_and_lands_on_the_line_base() {
        // Rook 4×4 plus a true twin: diameter 2, independence 4, one
        // adjacent nested pair. The pipeline must delete the twin and
        // finish on the line base with a lifted certificate.
        let budgets = Budgets::default();
        let g = named::with_true_twin(&named::rook(4), 0);
        assert!(pattern::is_free_of(&g, PatternId::Claw));
        assert_eq!(g.diameter(), Some(2));
        assert!(g.independence_exceeds_three().is_some());
        let out = solve_claw_free(&g, &budgets).unwrap();
        assert_eq!(out.route, "line");
        assert_eq!(out.oracle_fallbacks, 0);
        assert!(out
            .trace
            .steps()
            .iter()
            .any(|s| matches!(s.kind, crate::reductions::StepKind::NestedRemoval { .. })));
        // The rook's own answer (yes: opposite corners vs the rest is not a
        // partition — trust the oracle instead of intuition).
        assert_eq!(out.verdict.is_yes(), oracle_yes(&g));
        if let Some(c) = &out.verdict.certificate {
            check_partition(&g, c).unwrap();
        }
    }

    #[test]
    fn thickened_pair_is_detected_and_contracted() {
        // A matching-pattern thickening of an adjacent pair is a proper
        // W-join of the result; the detector must find one and contraction
        // with lifting must preserve answers. The pipeline itself checks
        // independence before W-joins, so this machinery is exercised at
        // the reductions level.
        use crate::reductions::{contract_wjoin, lift_certificate, make_unshatterable, ReductionTrace};
        let host = named::cycle(5);
        let g = named::thicken_matching_pair(&host, 0, 1);
        assert!(pattern::is_free_of(&g, PatternId::Claw));
        let w = crate::reductions::detect_proper_wjoin(&g).expect("planted W-join");
        let w = make_unshatterable(&g, &w).unwrap();
        let (h, step) = contract_wjoin(&g, &w).unwrap();
        assert_eq!(oracle_yes(&g), oracle_yes(&h));
        let mut trace = ReductionTrace::new(g.clone());
        trace.push(step);
        if let Some(cert) = oracle_disconnected_cut(&h, u64::MAX).unwrap().certificate {
            let lifted = lift_certificate(&trace, &cert).unwrap();
            check_partition(&g, &lifted).unwrap();
        }
    }

    #[test]
    fn auto_routes() {
        let budgets = Budgets::default();
        let v = solve_auto(&named::petersen(), &budgets).unwrap();
        assert!(v.verdict.is_yes());
        let v = solve_auto(&named::complete(4), &budgets).unwrap();
        assert!(v.verdict.is_no());
        let v = solve_auto(&named::star(5), &budgets).unwrap();
        assert!(v.verdict.is_no());
    }

    #[test]
    fn c4_aliases() {
        let budgets = Budgets::default();
        assert!(c4_contractibility_clawfree(&named::cycle(5), &budgets)
            .unwrap()
            .is_yes());
        assert!(c4_compaction_clawfree(&named::cycle(5), &budgets)
            .unwrap()
            .is_yes());
        assert!(matches!(
            c4_contractibility_clawfree(&named::complete(5), &budgets),
            Err(Error::OutOfScope(_))
        ));
        let g = named::wjoin_gadget6();
        assert!(c4_contractibility_clawfree(&g, &budgets).unwrap().is_yes());
    }
}
