//! JSON views of graphs, colorings, certificates and validation records.
//!
//! Key order is fixed and no timings are included, so equal inputs give
//! byte-identical output.

use serde_json::{json, Value};

use epg_core::awning::OrderProbe;
use epg_core::classifier::{AwningProbes, StrategyStatus};
use epg_core::rainbow::{LowerBound, StopReason};
use epg_core::{
    AwningCertificate, AwningVerdict, CyclicDecomposition, EdgeColoring, FiniteGroup, IcsReport, Prediction,
    RcKind, RcResult, SimpleGraph, ValidationRecord, Verdict,
};

pub fn graph_json(g: &SimpleGraph, labels: &[String]) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        "labels": labels,
    })
}

pub fn coloring_json(g: &SimpleGraph, c: &EdgeColoring) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .zip(c.colors())
        .map(|(&(u, v), &color)| json!({"u": u, "v": v, "color": color}))
        .collect();
    json!({"k": c.k(), "edges": edges})
}

pub fn certificate_json(cert: &AwningCertificate) -> Value {
    let witnesses: Vec<Value> = cert
        .entries()
        .map(|(i, j, h, side)| json!({"i": i, "j": j, "element": h, "side": side.as_str()}))
        .collect();
    json!({"order": cert.order(), "witnesses": witnesses})
}

pub fn awning_json(v: &AwningVerdict) -> Value {
    json!({
        "verdict": v.name(),
        "certificate": v.certificate().map(certificate_json),
    })
}

pub fn lower_bound_json(lb: &LowerBound) -> Value {
    json!({"value": lb.value, "source": lb.source.name()})
}

pub fn rc_json(g: &SimpleGraph, r: &RcResult) -> Value {
    let kind = match r.kind {
        RcKind::Exact(v) => json!({"kind": "EXACT", "value": v}),
        RcKind::Interval { lb, ub } => json!({"kind": "INTERVAL", "lb": lb, "ub": ub}),
    };
    let stop = r.stop.map(|s| match s {
        StopReason::BudgetExceeded { k } => json!({"reason": "BUDGET_EXCEEDED", "k": k}),
        StopReason::Gated { k } => json!({"reason": "EXHAUSTIVE_GATE", "k": k}),
    });
    json!({
        "result": kind,
        "lower_bound": lower_bound_json(&r.lower_bound),
        "refuted": r.refuted,
        "stop": stop,
        "certificate_origin": r.certificate_origin.as_ref().map(ToString::to_string),
        "upper_bound_certificate": r.upper_bound_certificate.as_ref().map(|c| coloring_json(g, c)),
        "search_stats": {"nodes": r.stats.nodes, "colorings_tested": r.stats.colorings_tested},
    })
}

pub fn prediction_json(p: &Prediction) -> Value {
    let (verdict, value, note) = match &p.verdict {
        Verdict::Value(v) => ("VALUE", Some(*v), None),
        Verdict::Uncovered => ("UNCOVERED", None, None),
        Verdict::Suspect { value, note } => ("SUSPECT", Some(*value), Some(note.clone())),
    };
    json!({
        "rule": p.rule.name(),
        "verdict": verdict,
        "value": value,
        "note": note,
        "inputs": {
            "m": p.inputs.m,
            "icn": p.inputs.icn,
            "invmax": p.inputs.invmax,
            "awning": p.inputs.awning.name(),
            "is_cyclic": p.inputs.is_cyclic,
        },
    })
}

pub fn probe_json(p: &OrderProbe) -> Value {
    json!({
        "orders_tried": p.orders_tried,
        "found_for": p.found_for,
        "not_found_for": p.not_found_for,
        "unknown_for": p.unknown_for,
        "exhaustive": p.exhaustive,
        "order_invariant": p.order_invariant(),
    })
}

pub fn awning_probes_json(p: &AwningProbes) -> Value {
    json!({
        "awning_and_m_ge_3_implies_icn_le_1": p.awning_icn_at_most_one,
        "m_eq_2_implies_awning_and_icn_0_or_2": p.two_entries,
        "awning_implies_icn_eq_1": p.awning_icn_exactly_one,
        "awning_iff_rc_eq_2": p.awning_iff_rc_two,
    })
}

pub fn decomposition_json(g: &FiniteGroup, d: &CyclicDecomposition) -> Value {
    let m = d.m();
    let subgroups: Vec<Value> = (0..m)
        .map(|i| {
            json!({
                "generator": d.generator(i),
                "label": g.label(d.generator(i)),
                "order": d.members(i).len(),
                "members": d.members(i).to_vec(),
            })
        })
        .collect();
    let sizes: Vec<Vec<usize>> =
        (0..m).map(|i| (0..m).map(|j| d.intersection(i, j).len()).collect()).collect();
    json!({"m": m, "subgroups": subgroups, "intersection_sizes": sizes})
}

/// Structural report: decomposition, independence cyclic set and awning.
pub fn invariants_json(
    g: &FiniteGroup,
    d: &CyclicDecomposition,
    ics: &IcsReport,
    awning: &AwningVerdict,
    probe: Option<&OrderProbe>,
) -> Value {
    let label = |i: usize| g.label(d.generator(i)).to_string();
    json!({
        "order": g.order(),
        "is_cyclic": d.m() == 1,
        "decomposition": decomposition_json(g, d),
        "icn": ics.icn,
        "ics": ics.ics_indices,
        "ics_generators": ics.ics_indices.iter().map(|&i| label(i)).collect::<Vec<_>>(),
        "invmax": ics.invmax_indices,
        "invmax_count": ics.invmax_indices.len(),
        "awning": awning_json(awning),
        "order_probe": probe.map(probe_json),
    })
}

/// Everything a validation produced, certificates included.
pub fn record_json(g: &FiniteGroup, r: &ValidationRecord) -> Value {
    let strategies: Vec<Value> = r
        .strategies
        .iter()
        .map(|o| {
            let failing = match &o.status {
                StrategyStatus::Verified => None,
                StrategyStatus::Failed(p) => Some(json!([p.u, p.v])),
            };
            json!({
                "strategy": o.kind.name(),
                "label": o.label,
                "verified": failing.is_none(),
                "failing_pair": failing,
                "coloring": coloring_json(&r.graph, &o.coloring),
            })
        })
        .collect();
    let discrepancies: Vec<Value> =
        r.discrepancies.iter().map(|d| json!({"kind": d.kind.name(), "detail": d.detail})).collect();
    let power = r.power.as_ref().map(|p| {
        let pg = epg_core::graph::power_graph(g);
        rc_json(&pg, p)
    });
    json!({
        "order": r.order,
        "decomposition": decomposition_json(g, &r.decomposition),
        "icn": r.ics.icn,
        "ics": r.ics.ics_indices,
        "invmax": r.ics.invmax_indices,
        "edges": r.graph.edge_count(),
        "awning": awning_json(&r.awning),
        "literal_awning": {
            "verdict": r.literal_awning.name(),
            "certificate": r.literal_awning.certificate().map(certificate_json),
            "coloring_verifies": r.literal_awning_colors,
        },
        "order_probe": r.probe.as_ref().map(probe_json),
        "prediction": prediction_json(&r.prediction),
        "structural_lower_bound": lower_bound_json(&r.lower_bound),
        "oracle": rc_json(&r.graph, &r.oracle),
        "agreement": r.agreement.name(),
        "inconclusive_reason": r.inconclusive_reason,
        "strategies": strategies,
        "awning_probes": awning_probes_json(&r.probes),
        "power_graph_oracle": power,
        "discrepancies": discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use epg_core::Side;

    #[test]
    fn coloring_and_graph_shapes() {
        let g = SimpleGraph::star(2);
        let c = EdgeColoring::new(2, vec![1, 2]).unwrap();
        assert_eq!(
            coloring_json(&g, &c).to_string(),
            r#"{"k":2,"edges":[{"u":0,"v":1,"color":1},{"u":0,"v":2,"color":2}]}"#
        );
        let labels = vec!["e".to_string(), "a".to_string(), "b".to_string()];
        assert_eq!(graph_json(&g, &labels).to_string(), r#"{"n":3,"edges":[[0,1],[0,2]],"labels":["e","a","b"]}"#);
    }

    #[test]
    fn certificate_shape() {
        let cert = AwningCertificate::new(vec![1, 0, 2], vec![4, 4, 0], vec![Side::A, Side::B, Side::B]);
        assert_eq!(
            certificate_json(&cert).to_string(),
            concat!(
                r#"{"order":[1,0,2],"witnesses":[{"i":0,"j":1,"element":4,"side":"A"},"#,
                r#"{"i":0,"j":2,"element":4,"side":"B"},{"i":1,"j":2,"element":0,"side":"B"}]}"#
            )
        );
    }
}
