//! Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
//! exits nonzero if any criterion fails.

#[path = "../../core/tests/support/naive.rs"]
mod naive;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use epg_rainbow::catalog::Catalog;
use epg_rainbow::sweep::{run_sweep, SweepConfig};
use epg_core::awning::{find_awning, verify_awning};
use epg_core::classifier::{strategy_outcomes, DiscrepancyKind, StrategyStatus};
use epg_core::graph::{enhanced_power_graph, power_graph};
use epg_core::group::DEFAULT_ORDER_CAP;
use epg_core::rainbow::{build_coloring, check_rainbow, rc_exact, BRowReading, StrategyKind};
use epg_core::{
    cross_validate, Agreement, AwningSearch, AwningVerdict, CyclicDecomposition, FiniteGroup, GroupSpec, RuleId,
    SearchConfig, SimpleGraph, Strategy, ValidationConfig, ValidationRecord, Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:.2?}, limit {limit:?}"))
}

fn group(spec: &str) -> FiniteGroup {
    FiniteGroup::construct(&spec.parse::<GroupSpec>().unwrap(), DEFAULT_ORDER_CAP).unwrap()
}

fn validate(spec: &str) -> ValidationRecord {
    cross_validate(&group(spec), &ValidationConfig::default())
}

fn expect_exact(spec: &str, r: &ValidationRecord, value: usize, rule: RuleId) -> Result<(), String> {
    ensure(r.oracle.exact() == Some(value), || format!("{spec}: oracle {:?}, expected {value}", r.oracle.kind))?;
    ensure(r.prediction.rule == rule, || format!("{spec}: rule {}, expected {rule}", r.prediction.rule))?;
    ensure(r.prediction.verdict == Verdict::Value(value), || format!("{spec}: verdict {:?}", r.prediction.verdict))?;
    ensure(r.agreement == Agreement::Match, || format!("{spec}: {}", r.agreement.name()))?;
    let cert = r.oracle.upper_bound_certificate.as_ref().ok_or_else(|| format!("{spec}: no certificate"))?;
    ensure(check_rainbow(&r.graph, cert).is_ok(), || format!("{spec}: certificate fails"))
}

fn cyclic_baseline() -> Outcome {
    let start = Instant::now();
    for n in 2..=24 {
        let spec = format!("cyclic({n})");
        let r = validate(&spec);
        ensure(r.graph.is_complete(), || format!("{spec}: graph not complete"))?;
        expect_exact(&spec, &r, 1, RuleId::R1)?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("Z_2..Z_24 complete, rc 1, R1 MATCH in {:.2?}", start.elapsed()))
}

fn involution_stars() -> Outcome {
    let mut notes = Vec::new();
    for (spec, value) in [("elementary_abelian(2,2)", 3), ("elementary_abelian(2,3)", 7)] {
        let start = Instant::now();
        let r = validate(spec);
        within(start, Duration::from_secs(1))?;
        ensure(r.decomposition.m() == value, || format!("{spec}: m = {}", r.decomposition.m()))?;
        expect_exact(spec, &r, value, RuleId::R4)?;
        notes.push(format!("{spec} rc {value} in {:.2?}", start.elapsed()));
    }
    Ok(notes.join(", "))
}

fn quaternion_awning() -> Outcome {
    let start = Instant::now();
    let g = group("dicyclic(2)");
    let d = CyclicDecomposition::of_group(&g);
    let graph = enhanced_power_graph(&d);
    let (verdict, _) = find_awning(&d, &[0, 1, 2], &AwningSearch::default());
    let AwningVerdict::Found(cert) = verdict else {
        return Err(format!("awning search returned {}", verdict.name()));
    };
    verify_awning(&d, &cert).map_err(|e| format!("certificate fails: {e}"))?;
    let readings: Vec<&str> = [(BRowReading::Swapped, "swapped"), (BRowReading::Literal, "literal")]
        .into_iter()
        .filter(|(reading, _)| {
            let s = Strategy::Awning { certificate: cert.clone(), reading: *reading };
            build_coloring(&s, &d, &graph).is_ok_and(|c| c.used_colors() <= 2 && check_rainbow(&graph, &c).is_ok())
        })
        .map(|(_, name)| name)
        .collect();
    ensure(!readings.is_empty(), || "no reading of the awning gives a rainbow 2-coloring".into())?;

    let plain = rc_exact(&graph, &SearchConfig { node_budget: 1 << 15, ..SearchConfig::default() });
    ensure(plain.exact() == Some(2), || format!("exact search gave {:?}", plain.kind))?;
    ensure(plain.stats.nodes <= 1 << 15, || format!("{} nodes", plain.stats.nodes))?;
    let r = cross_validate(&g, &ValidationConfig::default());
    expect_exact("Q8", &r, 2, RuleId::R2)?;
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "awning verifies, 2-coloring under {} reading, search {} nodes, R2 MATCH",
        readings.join("+"),
        plain.stats.nodes
    ))
}

fn two_by_four() -> Outcome {
    let start = Instant::now();
    let spec = "product(cyclic(2),cyclic(4))";
    let r = validate(spec);
    ensure(r.graph.edge_count() == 13, || format!("{} edges", r.graph.edge_count()))?;
    ensure(r.decomposition.m() == 4 && r.ics.icn == 2, || "expected m = 4, icn = 2".into())?;
    expect_exact(spec, &r, 3, RuleId::R6)?;
    let plain = rc_exact(&r.graph, &SearchConfig::default());
    ensure(plain.refuted.contains(&2), || format!("level 2 not refuted: {:?}", plain.refuted))?;
    ensure(plain.exact() == Some(3), || format!("plain search gave {:?}", plain.kind))?;
    let cert = plain.upper_bound_certificate.as_ref().unwrap();
    ensure(check_rainbow(&r.graph, cert).is_ok(), || "3-coloring fails".into())?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("no rainbow 2-coloring ({} nodes), 3-coloring verified, R6 MATCH", plain.stats.nodes))
}

fn involution_rich() -> Outcome {
    let start = Instant::now();
    for (spec, value) in [("symmetric(3)", 3), ("dihedral(4)", 4)] {
        let r = validate(spec);
        ensure(r.ics.invmax_indices.len() == value, || format!("{spec}: |InvMax| = {}", r.ics.invmax_indices.len()))?;
        ensure(r.ics.icn >= 3, || format!("{spec}: icn = {}", r.ics.icn))?;
        expect_exact(spec, &r, value, RuleId::R7)?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("S3 rc 3, D4 rc 4, R7 MATCH in {:.2?}", start.elapsed()))
}

fn subgraph_comparison() -> Outcome {
    let start = Instant::now();
    let catalog = Catalog::builtin();
    let config = ValidationConfig { power_graph: true, ..ValidationConfig::default() };
    let mut compared = 0;
    for entry in &catalog.entries {
        let g = catalog.build(&entry.spec, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        if g.order() > 12 {
            continue;
        }
        let r = cross_validate(&g, &config);
        let d = CyclicDecomposition::of_group(&g);
        ensure(power_graph(&g).is_subgraph_of(&enhanced_power_graph(&d)), || format!("{}: not a subgraph", entry.spec))?;
        if let (Some(e), Some(p)) = (r.oracle.exact(), r.power.as_ref().and_then(|p| p.exact())) {
            ensure(e <= p, || format!("{}: enhanced {e} > power {p}", entry.spec))?;
            compared += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{compared} groups of order <= 12 compared"))
}

fn oracle_self_consistency() -> Outcome {
    let start = Instant::now();
    let graph = |edges: &[(usize, usize)]| SimpleGraph::from_edges(naive::vertex_count(edges), edges.iter().copied());
    let mut count = 0;
    for level in naive::connected_graphs(7) {
        for edges in level {
            let g = graph(&edges);
            let r = rc_exact(&g, &SearchConfig::default());
            let expected = naive::rc(&edges);
            ensure(r.exact() == Some(expected), || format!("{edges:?}: {:?} vs brute force {expected}", r.kind))?;
            let cert = r.upper_bound_certificate.as_ref().ok_or_else(|| format!("{edges:?}: no certificate"))?;
            ensure(check_rainbow(&g, cert).is_ok(), || format!("{edges:?}: certificate fails"))?;
            count += 1;
        }
    }
    let path = |n: usize| SimpleGraph::path(n);
    let mut closed: Vec<(String, SimpleGraph, usize)> = Vec::new();
    for n in 2..=6 {
        closed.push((format!("K{n}"), SimpleGraph::complete(n), 1));
        closed.push((format!("P{n}"), path(n), n - 1));
    }
    closed.push(("C4".into(), SimpleGraph::cycle(4), 2));
    closed.push(("C5".into(), SimpleGraph::cycle(5), 3));
    for k in 1..=7 {
        closed.push((format!("K1,{k}"), SimpleGraph::star(k), k));
    }
    for (name, g, value) in &closed {
        let edges: Vec<(usize, usize)> = g.edges().to_vec();
        ensure(naive::rc(&edges) == *value, || format!("{name}: brute force disagrees with {value}"))?;
        let r = rc_exact(g, &SearchConfig::default());
        ensure(r.exact() == Some(*value), || format!("{name}: {:?}", r.kind))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{count} graphs agree with brute force, {} closed forms pinned", closed.len()))
}

const CONSTRUCTIVE_STRATEGIES: [StrategyKind; 7] = [
    StrategyKind::TwoMax,
    StrategyKind::StarIcn1,
    StrategyKind::StarIcn3,
    StrategyKind::InvmaxEqMax,
    StrategyKind::DistinctWitness,
    StrategyKind::Awning,
    StrategyKind::InvmaxGe3,
];

fn coloring_soundness() -> Outcome {
    let start = Instant::now();
    let catalog = Catalog::builtin();
    let report = run_sweep(&catalog, &SweepConfig { validation: ValidationConfig::default(), size_cap: DEFAULT_ORDER_CAP });
    let json = report.to_json();
    let mut fired = BTreeSet::new();
    let mut flagged = 0;
    for (idx, item) in report.items.iter().enumerate() {
        let (g, r) = item.outcome.as_ref().map_err(|e| format!("{}: {e}", item.spec))?;
        let d = CyclicDecomposition::of_group(g);
        let outcomes = strategy_outcomes(&d, &r.graph, &r.awning);
        ensure(outcomes == r.strategies, || format!("{}: strategy outcomes not reproducible", item.spec))?;
        let awning_ok = outcomes.iter().any(|o| o.kind == StrategyKind::Awning && o.status == StrategyStatus::Verified);
        for o in &outcomes {
            fired.insert(o.kind);
            if o.status == StrategyStatus::Verified || (o.kind == StrategyKind::Awning && awning_ok) {
                continue;
            }
            let reported = r.discrepancies.iter().any(|x| x.kind == DiscrepancyKind::StrategyFailed && x.detail.contains(&o.label));
            let bundled = !json["records"][idx]["reproduction"].is_null();
            ensure(reported && bundled, || format!("{}: {} fails silently", item.spec, o.label))?;
            flagged += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    let missing: Vec<&str> = CONSTRUCTIVE_STRATEGIES.iter().filter(|k| !fired.contains(k)).map(|k| k.name()).collect();
    ensure(missing.is_empty(), || format!("no catalog group meets the hypothesis of {}", missing.join(", ")))?;
    Ok(format!("{} records, {flagged} flagged failures, every strategy fired", report.items.len()))
}

fn corollary_probes() -> Outcome {
    let start = Instant::now();
    let catalog = Catalog::builtin();
    let validation = ValidationConfig { probe_orders: Some(720), ..ValidationConfig::default() };
    let report = run_sweep(&catalog, &SweepConfig { validation, size_cap: DEFAULT_ORDER_CAP });
    let json = report.to_json();
    let records = json["records"].as_array().ok_or("report has no records")?;
    ensure(records.len() == catalog.entries.len(), || "report is missing records".into())?;
    let (mut probed, mut suspect) = (0, 0);
    for (item, rec) in report.items.iter().zip(records) {
        let (_, r) = item.outcome.as_ref().map_err(|e| format!("{}: {e}", item.spec))?;
        ensure(rec["awning_probes"].is_object(), || format!("{}: probes not reported", item.spec))?;
        let p = r.probes;
        let is_suspect = matches!(r.prediction.verdict, Verdict::Suspect { .. });
        let has_probe = [p.awning_icn_at_most_one, p.two_entries, p.awning_icn_exactly_one, p.awning_iff_rc_two]
            .iter()
            .any(Option::is_some);
        if has_probe || is_suspect {
            ensure(r.oracle.exact().is_some(), || format!("{}: probed but oracle is {:?}", item.spec, r.oracle.kind))?;
            probed += 1;
        }
        if is_suspect {
            ensure(r.agreement != Agreement::Match, || format!("{}: SUSPECT counted as MATCH", item.spec))?;
            suspect += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{probed} probed groups with exact oracle values, {suspect} SUSPECT records kept out of MATCH"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("cyclic baseline", cyclic_baseline),
        ("maximal involution stars", involution_stars),
        ("quaternion awning", quaternion_awning),
        ("Z2 x Z4", two_by_four),
        ("S3 and D4 involutions", involution_rich),
        ("power graph comparison", subgraph_comparison),
        ("oracle self-consistency", oracle_self_consistency),
        ("coloring soundness", coloring_soundness),
        ("corollary probes", corollary_probes),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
