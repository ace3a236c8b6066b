//! Rule table predicting `rc` of the enhanced power graph from
//! `(m, icn, |InvMax|, awning, cyclic)`, and a validator that checks the
//! prediction and every applicable constructive coloring against the
//! exact search.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::awning::{find_awning, verify_awning, AwningMode, AwningSearch, AwningVerdict, OrderProbe};
use crate::cyclic::{CyclicDecomposition, IcsReport};
use crate::graph::{enhanced_power_graph, power_graph, SimpleGraph};
use crate::group::FiniteGroup;
use crate::rainbow::{
    build_coloring, check_rainbow, hub_fallback_coloring, rc_exact_with_candidates, rc_lower_bound,
    BRowReading, EdgeColoring, FailingPair, LowerBound, RcKind, RcResult, SearchConfig, Strategy,
    StrategyKind, StructuralHint,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AwningStatus {
    Found,
    None,
    Unknown,
    NotApplicable,
}

impl AwningStatus {
    pub fn of(v: &AwningVerdict) -> Self {
        match v {
            AwningVerdict::Found(_) => AwningStatus::Found,
            AwningVerdict::None => AwningStatus::None,
            AwningVerdict::Unknown => AwningStatus::Unknown,
            AwningVerdict::NotApplicable => AwningStatus::NotApplicable,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AwningStatus::Found => "FOUND",
            AwningStatus::None => "NONE",
            AwningStatus::Unknown => "UNKNOWN",
            AwningStatus::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InputsSnapshot {
    pub m: usize,
    pub icn: usize,
    pub invmax: usize,
    pub awning: AwningStatus,
    pub is_cyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Value(usize),
    Uncovered,
    Suspect { value: usize, note: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    Fallback,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::Fallback,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::Fallback => "FALLBACK",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            RuleId::R1 => "cyclic group: complete graph",
            RuleId::R2 => "awning found, not cyclic",
            RuleId::R3 => "two maximal cyclic subgroups",
            RuleId::R4 => "every maximal cyclic subgroup has order 2",
            RuleId::R5 => "icn <= 1, m >= 3, no awning",
            RuleId::R6 => "icn = 2, m >= 4",
            RuleId::R7 => "icn >= 3, at least three maximal involutions",
            RuleId::R8 => "icn >= 3, fewer than three maximal involutions",
            RuleId::Fallback => "no rule applies",
        }
    }

    /// The rule's own hypothesis, ignoring the rules before it.
    pub fn hypothesis_holds(self, s: &InputsSnapshot) -> bool {
        match self {
            RuleId::R1 => s.is_cyclic,
            RuleId::R2 => s.awning == AwningStatus::Found && !s.is_cyclic,
            RuleId::R3 => s.m == 2,
            RuleId::R4 => s.m >= 1 && s.invmax == s.m,
            RuleId::R5 => s.icn <= 1 && s.m >= 3 && s.awning == AwningStatus::None,
            RuleId::R6 => s.icn == 2 && s.m >= 4,
            RuleId::R7 => s.icn >= 3 && s.invmax >= 3,
            RuleId::R8 => s.icn >= 3 && s.invmax < 3,
            RuleId::Fallback => true,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub verdict: Verdict,
    pub rule: RuleId,
    pub inputs: InputsSnapshot,
}

impl Prediction {
    pub fn value(&self) -> Option<usize> {
        match self.verdict {
            Verdict::Value(v) => Some(v),
            _ => None,
        }
    }
}

/// The first rule, in table order, whose hypothesis holds.
pub fn classify_inputs(inputs: &InputsSnapshot) -> Prediction {
    let rule = RuleId::ALL.into_iter().find(|r| r.hypothesis_holds(inputs)).unwrap_or(RuleId::Fallback);
    let verdict = match rule {
        RuleId::R1 => Verdict::Value(1),
        RuleId::R2 | RuleId::R3 => Verdict::Value(2),
        RuleId::R4 => Verdict::Value(inputs.m),
        RuleId::R5 | RuleId::R6 => Verdict::Value(3),
        RuleId::R7 => Verdict::Value(inputs.invmax),
        RuleId::R8 => Verdict::Suspect {
            value: 3,
            note: format!(
                "literal value |InvMax| = {} is below the lower bound 3 from three independent entries",
                inputs.invmax
            ),
        },
        RuleId::Fallback => Verdict::Uncovered,
    };
    Prediction { verdict, rule, inputs: *inputs }
}

pub fn classify(g: &FiniteGroup, d: &CyclicDecomposition, ics: &IcsReport, awning: &AwningVerdict) -> Prediction {
    classify_inputs(&InputsSnapshot {
        m: d.m(),
        icn: ics.icn,
        invmax: ics.invmax_indices.len(),
        awning: AwningStatus::of(awning),
        is_cyclic: g.is_cyclic().is_some(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Match,
    Mismatch,
    Inconclusive,
}

impl Agreement {
    pub fn name(self) -> &'static str {
        match self {
            Agreement::Match => "MATCH",
            Agreement::Mismatch => "MISMATCH",
            Agreement::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Agreement plus the reason when it is inconclusive.
pub fn agreement(prediction: &Prediction, oracle: &RcResult) -> (Agreement, Option<String>) {
    match (&prediction.verdict, oracle.kind) {
        (Verdict::Uncovered, _) => (Agreement::Inconclusive, Some("no rule covers this group".into())),
        (Verdict::Suspect { .. }, _) => {
            (Agreement::Inconclusive, Some("prediction comes from a suspect rule".into()))
        }
        (Verdict::Value(_), RcKind::Interval { lb, ub }) => {
            (Agreement::Inconclusive, Some(format!("oracle stopped with rc in [{lb}, {ub}]")))
        }
        (Verdict::Value(v), RcKind::Exact(x)) if *v == x => (Agreement::Match, None),
        (Verdict::Value(_), RcKind::Exact(_)) => (Agreement::Mismatch, None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyStatus {
    Verified,
    Failed(FailingPair),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyOutcome {
    pub kind: StrategyKind,
    pub label: String,
    pub coloring: EdgeColoring,
    pub status: StrategyStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscrepancyKind {
    /// A strategy whose hypothesis holds produced no rainbow coloring.
    StrategyFailed,
    Mismatch,
    BelowLowerBound,
    /// `rc` of the power graph came out below that of the enhanced power graph.
    PowerBelowEnhanced,
    /// The search returned a certificate that does not verify.
    InvalidCertificate,
}

impl DiscrepancyKind {
    pub fn name(self) -> &'static str {
        match self {
            DiscrepancyKind::StrategyFailed => "STRATEGY_FAILED",
            DiscrepancyKind::Mismatch => "MISMATCH",
            DiscrepancyKind::BelowLowerBound => "BELOW_LOWER_BOUND",
            DiscrepancyKind::PowerBelowEnhanced => "POWER_BELOW_ENHANCED",
            DiscrepancyKind::InvalidCertificate => "INVALID_CERTIFICATE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub detail: String,
}

/// Empirical checks of implications between awnings and `icn`. `None`
/// when the premise does not hold or the awning verdict is not definite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AwningProbes {
    /// awning and `m >= 3` imply `icn <= 1`.
    pub awning_icn_at_most_one: Option<bool>,
    /// `m = 2` implies `icn` in `{0, 2}` and an awning.
    pub two_entries: Option<bool>,
    /// awning implies `icn = 1`.
    pub awning_icn_exactly_one: Option<bool>,
    /// The exact `rc` equals 2 iff an awning was found (non-cyclic only).
    pub awning_iff_rc_two: Option<bool>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ValidationConfig {
    pub rc: SearchConfig,
    pub awning: AwningSearch,
    /// Also compute `rc` of the power graph.
    pub power_graph: bool,
    /// Orders to try in the awning order probe; `None` skips the probe.
    pub probe_orders: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationRecord {
    pub order: usize,
    pub decomposition: CyclicDecomposition,
    pub ics: IcsReport,
    pub graph: SimpleGraph,
    /// Verdict under the configured search mode, default order.
    pub awning: AwningVerdict,
    /// Verdict with condition-3 pruning only, default order.
    pub literal_awning: AwningVerdict,
    /// Whether the literal certificate's coloring verifies under some reading.
    pub literal_awning_colors: Option<bool>,
    pub probe: Option<OrderProbe>,
    pub prediction: Prediction,
    pub lower_bound: LowerBound,
    pub oracle: RcResult,
    pub agreement: Agreement,
    pub inconclusive_reason: Option<String>,
    pub strategies: Vec<StrategyOutcome>,
    pub probes: AwningProbes,
    pub power: Option<RcResult>,
    pub discrepancies: Vec<Discrepancy>,
}

impl ValidationRecord {
    pub fn has_discrepancy(&self) -> bool {
        !self.discrepancies.is_empty()
    }
}

fn attempt(
    strategy: Strategy,
    d: &CyclicDecomposition,
    g: &SimpleGraph,
    out: &mut Vec<StrategyOutcome>,
) {
    let Ok(coloring) = build_coloring(&strategy, d, g) else {
        return;
    };
    let status = match check_rainbow(g, &coloring) {
        Ok(()) => StrategyStatus::Verified,
        Err(p) => StrategyStatus::Failed(p),
    };
    out.push(StrategyOutcome { kind: strategy.kind(), label: strategy.label(), coloring, status });
}

/// Every constructive coloring whose hypothesis holds for `d`, checked on `g`.
pub fn strategy_outcomes(d: &CyclicDecomposition, g: &SimpleGraph, awning: &AwningVerdict) -> Vec<StrategyOutcome> {
    let mut out = Vec::new();
    for s in [Strategy::TwoMax, Strategy::StarIcn1, Strategy::StarIcn3, Strategy::Icn3Star, Strategy::InvmaxEqMax] {
        attempt(s, d, g, &mut out);
    }
    if let Some(w) = d.distinct_witnesses() {
        attempt(Strategy::DistinctWitness(w), d, g, &mut out);
    }
    if let AwningVerdict::Found(cert) = awning {
        for reading in [BRowReading::Swapped, BRowReading::Literal] {
            attempt(Strategy::Awning { certificate: cert.clone(), reading }, d, g, &mut out);
        }
    }
    attempt(Strategy::InvmaxGe3, d, g, &mut out);
    out
}

fn awning_colors(d: &CyclicDecomposition, g: &SimpleGraph, awning: &AwningVerdict) -> Option<bool> {
    let AwningVerdict::Found(cert) = awning else {
        return None;
    };
    Some([BRowReading::Swapped, BRowReading::Literal].into_iter().any(|reading| {
        build_coloring(&Strategy::Awning { certificate: cert.clone(), reading }, d, g)
            .is_ok_and(|c| check_rainbow(g, &c).is_ok())
    }))
}

fn probes(inputs: &InputsSnapshot, oracle: &RcResult) -> AwningProbes {
    let definite = matches!(inputs.awning, AwningStatus::Found | AwningStatus::None);
    let found = inputs.awning == AwningStatus::Found;
    AwningProbes {
        awning_icn_at_most_one: (found && inputs.m >= 3).then_some(inputs.icn <= 1),
        two_entries: (inputs.m == 2 && definite).then_some(found && (inputs.icn == 0 || inputs.icn == 2)),
        awning_icn_exactly_one: found.then_some(inputs.icn == 1),
        awning_iff_rc_two: (definite && !inputs.is_cyclic)
            .then(|| oracle.exact().map(|rc| found == (rc == 2)))
            .flatten(),
    }
}

/// Decomposition, awning search, prediction and exact search for one group,
/// with every certificate and discrepancy attached.
pub fn cross_validate(g: &FiniteGroup, config: &ValidationConfig) -> ValidationRecord {
    let d = CyclicDecomposition::of_group(g);
    let ics = d.ics_report();
    let graph = enhanced_power_graph(&d);
    let default_order: Vec<usize> = (0..d.m()).collect();

    let (awning, _) = find_awning(&d, &default_order, &config.awning);
    let literal_awning = if config.awning.mode == AwningMode::Literal {
        awning.clone()
    } else {
        find_awning(&d, &default_order, &AwningSearch { mode: AwningMode::Literal, ..config.awning }).0
    };
    let probe = config.probe_orders.map(|n| crate::awning::awning_order_probe(&d, n, &config.awning));
    let prediction = classify(g, &d, &ics, &awning);

    let mut discrepancies = Vec::new();
    for v in [&awning, &literal_awning] {
        if let Some(cert) = v.certificate() {
            if let Err(e) = verify_awning(&d, cert) {
                discrepancies.push(Discrepancy {
                    kind: DiscrepancyKind::InvalidCertificate,
                    detail: format!("awning search returned a certificate that fails: {e}"),
                });
            }
        }
    }

    let strategies = strategy_outcomes(&d, &graph, &awning);
    let awning_ok = strategies.iter().any(|o| o.kind == StrategyKind::Awning && o.status == StrategyStatus::Verified);
    for o in &strategies {
        if let StrategyStatus::Failed(p) = &o.status {
            if o.kind == StrategyKind::Awning && awning_ok {
                continue;
            }
            discrepancies.push(Discrepancy {
                kind: DiscrepancyKind::StrategyFailed,
                detail: format!("{} coloring has no rainbow path between {} and {}", o.label, p.u, p.v),
            });
        }
    }

    let mut candidates: Vec<(String, EdgeColoring)> = strategies
        .iter()
        .filter(|o| o.status == StrategyStatus::Verified)
        .map(|o| (o.label.clone(), o.coloring.clone()))
        .collect();
    candidates.push(("HUB_FALLBACK".into(), hub_fallback_coloring(&d, &graph)));
    let oracle = rc_exact_with_candidates(&graph, &config.rc, &candidates);

    let hint = StructuralHint { icn: ics.icn, invmax: ics.invmax_indices.len() };
    let lower_bound = if graph.is_complete() { rc_lower_bound(&graph, None) } else { rc_lower_bound(&graph, Some(hint)) };
    if let Some(v) = prediction.value() {
        if v < lower_bound.value {
            discrepancies.push(Discrepancy {
                kind: DiscrepancyKind::BelowLowerBound,
                detail: format!("predicted {v} is below the {} bound {}", lower_bound.source.name(), lower_bound.value),
            });
        }
    }
    let (agreement, inconclusive_reason) = agreement(&prediction, &oracle);
    if agreement == Agreement::Mismatch {
        discrepancies.push(Discrepancy {
            kind: DiscrepancyKind::Mismatch,
            detail: format!(
                "{} predicts {} but the exact value is {}",
                prediction.rule,
                prediction.value().unwrap_or(0),
                oracle.exact().unwrap_or(0)
            ),
        });
    }

    let power = config.power_graph.then(|| {
        let pg = power_graph(g);
        let mut cands: Vec<(String, EdgeColoring)> = candidates
            .iter()
            .filter(|(label, _)| label != "HUB_FALLBACK")
            .map(|(label, c)| (label.clone(), c.restricted(&graph, &pg)))
            .collect();
        cands.push(("HUB_FALLBACK".into(), hub_fallback_coloring(&d, &pg)));
        rc_exact_with_candidates(&pg, &config.rc, &cands)
    });
    if let (Some(p), Some(e)) = (power.as_ref().and_then(RcResult::exact), oracle.exact()) {
        if p < e {
            discrepancies.push(Discrepancy {
                kind: DiscrepancyKind::PowerBelowEnhanced,
                detail: format!("power graph rc {p} is below enhanced power graph rc {e}"),
            });
        }
    }

    ValidationRecord {
        order: g.order(),
        literal_awning_colors: awning_colors(&d, &graph, &literal_awning),
        probes: probes(&prediction.inputs, &oracle),
        decomposition: d,
        ics,
        graph,
        awning,
        literal_awning,
        probe,
        prediction,
        lower_bound,
        oracle,
        agreement,
        inconclusive_reason,
        strategies,
        power,
        discrepancies,
    }
}
