//! Plain-text reports for terminals.

use std::fmt::Write;

use epg_core::awning::OrderProbe;
use epg_core::classifier::StrategyStatus;
use epg_core::rainbow::StopReason;
use epg_core::{
    AwningVerdict, CyclicDecomposition, FiniteGroup, IcsReport, RcKind, RcResult, ValidationRecord, Verdict,
};

use crate::sweep::SweepReport;

fn rc_summary(r: &RcResult) -> String {
    let mut s = match r.kind {
        RcKind::Exact(v) => format!("EXACT {v}"),
        RcKind::Interval { lb, ub } => format!("INTERVAL [{lb}, {ub}]"),
    };
    match r.stop {
        Some(StopReason::BudgetExceeded { k }) => write!(s, " (budget exceeded at k={k})").unwrap(),
        Some(StopReason::Gated { k }) => write!(s, " (exhaustive gate at k={k})").unwrap(),
        None => {}
    }
    s
}

fn verdict_summary(v: &Verdict) -> String {
    match v {
        Verdict::Value(v) => format!("VALUE {v}"),
        Verdict::Uncovered => "UNCOVERED".into(),
        Verdict::Suspect { value, .. } => format!("SUSPECT {value}"),
    }
}

fn probe_line(p: &OrderProbe) -> String {
    let invariant = match p.order_invariant() {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undetermined",
    };
    format!(
        "{} orders ({}): found {}, none {}, unknown {}; order invariant: {invariant}",
        p.orders_tried.len(),
        if p.exhaustive { "all" } else { "sampled" },
        p.found_for.len(),
        p.not_found_for.len(),
        p.unknown_for.len(),
    )
}

pub fn invariants_text(
    g: &FiniteGroup,
    d: &CyclicDecomposition,
    ics: &IcsReport,
    awning: &AwningVerdict,
    probe: Option<&OrderProbe>,
) -> String {
    let mut out = String::new();
    let m = d.m();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "m: {m}").unwrap();
    for i in 0..m {
        let gen = d.generator(i);
        writeln!(out, "  x{i} = {} (order {})", g.label(gen), d.members(i).len()).unwrap();
    }
    if m > 1 {
        writeln!(out, "intersection sizes:").unwrap();
        for i in 0..m {
            let row: Vec<String> = (0..m).map(|j| d.intersection(i, j).len().to_string()).collect();
            writeln!(out, "  {}", row.join(" ")).unwrap();
        }
    }
    let names = |idx: &[usize]| -> String {
        idx.iter().map(|&i| format!("x{i}")).collect::<Vec<_>>().join(", ")
    };
    writeln!(out, "icn: {}", ics.icn).unwrap();
    writeln!(out, "ics: {{{}}}", names(&ics.ics_indices)).unwrap();
    writeln!(out, "|InvMax|: {} {{{}}}", ics.invmax_indices.len(), names(&ics.invmax_indices)).unwrap();
    writeln!(out, "awning: {}", awning.name()).unwrap();
    if let Some(cert) = awning.certificate() {
        let order: Vec<String> = cert.order().iter().map(|i| format!("x{i}")).collect();
        writeln!(out, "  order: {}", order.join(" < ")).unwrap();
        for (i, j, h, side) in cert.entries() {
            writeln!(out, "  ({i},{j}): {} side {}", g.label(h), side.as_str()).unwrap();
        }
    }
    if let Some(p) = probe {
        writeln!(out, "order probe: {}", probe_line(p)).unwrap();
    }
    out
}

pub fn rc_text(r: &ValidationRecord, show_enhanced: bool) -> String {
    let mut out = String::new();
    writeln!(out, "order: {}  m: {}  icn: {}  |InvMax|: {}", r.order, r.decomposition.m(), r.ics.icn, r.ics.invmax_indices.len())
        .unwrap();
    if show_enhanced {
        writeln!(out, "enhanced power graph: {} edges", r.graph.edge_count()).unwrap();
        writeln!(out, "  prediction: {} by {}", verdict_summary(&r.prediction.verdict), r.prediction.rule).unwrap();
        writeln!(out, "  lower bound: {} ({})", r.lower_bound.value, r.lower_bound.source.name()).unwrap();
        writeln!(out, "  rc: {}", rc_summary(&r.oracle)).unwrap();
        if let Some(origin) = &r.oracle.certificate_origin {
            writeln!(out, "  certificate: {origin}").unwrap();
        }
        writeln!(out, "  agreement: {}", r.agreement.name()).unwrap();
        if let Some(reason) = &r.inconclusive_reason {
            writeln!(out, "  reason: {reason}").unwrap();
        }
        for s in &r.strategies {
            let status = match &s.status {
                StrategyStatus::Verified => "verified".to_string(),
                StrategyStatus::Failed(p) => format!("fails at ({}, {})", p.u, p.v),
            };
            writeln!(out, "  strategy {}: {} colors, {status}", s.label, s.coloring.used_colors()).unwrap();
        }
    }
    if let Some(p) = &r.power {
        writeln!(out, "power graph:").unwrap();
        writeln!(out, "  rc: {}", rc_summary(p)).unwrap();
    }
    for d in &r.discrepancies {
        writeln!(out, "discrepancy {}: {}", d.kind.name(), d.detail).unwrap();
    }
    out
}

/// One row per catalog entry, then the totals.
pub fn sweep_text(report: &SweepReport) -> String {
    let mut out = String::new();
    for w in &report.warnings {
        writeln!(out, "warning: line {}: {}: {}", w.line, w.text, w.message).unwrap();
    }
    writeln!(out, "{:<44} {:>5} {:>3} {:>4} {:<6} {:<12} {:<16} {:<12}", "group", "order", "m", "icn", "rule", "prediction", "oracle", "agreement")
        .unwrap();
    for item in &report.items {
        let spec = item.spec.to_string();
        match &item.outcome {
            Err(e) => writeln!(out, "{spec:<44} error: {e}").unwrap(),
            Ok((_, r)) => {
                let flag = if r.has_discrepancy() { " *" } else { "" };
                writeln!(
                    out,
                    "{spec:<44} {:>5} {:>3} {:>4} {:<6} {:<12} {:<16} {:<12}{flag}",
                    r.order,
                    r.decomposition.m(),
                    r.ics.icn,
                    r.prediction.rule.name(),
                    verdict_summary(&r.prediction.verdict),
                    rc_summary(&r.oracle).split(" (").next().unwrap_or(""),
                    r.agreement.name(),
                )
                .unwrap()
            }
        }
    }
    let c = report.counts();
    writeln!(
        out,
        "{} groups: {} match, {} mismatch, {} inconclusive, {} errors, {} flagged",
        report.items.len(),
        c.matches,
        c.mismatches,
        c.inconclusive,
        c.errors,
        c.flagged
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use epg_core::awning::find_awning;
    use epg_core::{AwningSearch, GroupSpec};

    #[test]
    fn quaternion_invariants() {
        let g = FiniteGroup::construct(&GroupSpec::Dicyclic(2), 720).unwrap();
        let d = CyclicDecomposition::of_group(&g);
        let ics = d.ics_report();
        let (awning, _) = find_awning(&d, &[0, 1, 2], &AwningSearch::default());
        let text = invariants_text(&g, &d, &ics, &awning, None);
        assert!(text.contains("m: 3\n"));
        assert!(text.contains("icn: 0\n"));
        assert!(text.contains("awning: FOUND\n"));
        assert!(text.contains("intersection sizes:\n  4 2 2\n"));
    }

    #[test]
    fn cyclic_has_no_intersection_table() {
        let g = FiniteGroup::construct(&GroupSpec::Cyclic(7), 720).unwrap();
        let d = CyclicDecomposition::of_group(&g);
        let text = invariants_text(&g, &d, &d.ics_report(), &AwningVerdict::NotApplicable, None);
        assert!(text.contains("m: 1\n"));
        assert!(!text.contains("intersection"));
    }
}
