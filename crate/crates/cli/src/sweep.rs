//! Cross-validation over a catalog, one group per rayon task.

use rayon::prelude::*;
use serde_json::{json, Value};

use epg_core::classifier::StrategyStatus;
use epg_core::{cross_validate, Agreement, FiniteGroup, GroupSpec, ValidationConfig, ValidationRecord};

use crate::catalog::{Catalog, CatalogWarning};
use crate::cayley::write_cayley;
use crate::json::{certificate_json, coloring_json, record_json};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub validation: ValidationConfig,
    pub size_cap: usize,
}

pub struct SweepItem {
    pub line: usize,
    pub spec: GroupSpec,
    pub outcome: Result<(FiniteGroup, ValidationRecord), String>,
}

pub struct SweepReport {
    pub items: Vec<SweepItem>,
    pub warnings: Vec<CatalogWarning>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepCounts {
    pub matches: usize,
    pub mismatches: usize,
    pub inconclusive: usize,
    pub errors: usize,
    /// Records with at least one discrepancy of any kind.
    pub flagged: usize,
}

/// Validates every catalog entry. Records come back in catalog order
/// whatever the thread count.
pub fn run_sweep(catalog: &Catalog, config: &SweepConfig) -> SweepReport {
    let items = catalog
        .entries
        .par_iter()
        .map(|entry| {
            let outcome = catalog
                .build(&entry.spec, config.size_cap)
                .map(|g| {
                    let r = cross_validate(&g, &config.validation);
                    (g, r)
                })
                .map_err(|e| e.to_string());
            SweepItem { line: entry.line, spec: entry.spec.clone(), outcome }
        })
        .collect();
    SweepReport { items, warnings: catalog.warnings.clone() }
}

impl SweepReport {
    pub fn counts(&self) -> SweepCounts {
        let mut c = SweepCounts::default();
        for item in &self.items {
            match &item.outcome {
                Err(_) => c.errors += 1,
                Ok((_, r)) => {
                    match r.agreement {
                        Agreement::Match => c.matches += 1,
                        Agreement::Mismatch => c.mismatches += 1,
                        Agreement::Inconclusive => c.inconclusive += 1,
                    }
                    if r.has_discrepancy() {
                        c.flagged += 1;
                    }
                }
            }
        }
        c
    }

    pub fn to_json(&self) -> Value {
        let c = self.counts();
        let records: Vec<Value> = self
            .items
            .iter()
            .map(|item| {
                let body = match &item.outcome {
                    Ok((g, r)) => {
                        let mut v = record_json(g, r);
                        if r.has_discrepancy() {
                            v["reproduction"] = reproduction_bundle(g, r);
                        }
                        v
                    }
                    Err(e) => json!({"error": e}),
                };
                let mut out = json!({"line": item.line, "spec": item.spec.to_string()});
                if let (Some(head), Value::Object(mut body)) = (out.as_object_mut(), body) {
                    head.append(&mut body);
                }
                out
            })
            .collect();
        let warnings: Vec<Value> = self
            .warnings
            .iter()
            .map(|w| json!({"line": w.line, "text": w.text, "message": w.message}))
            .collect();
        json!({
            "summary": {
                "groups": self.items.len(),
                "match": c.matches,
                "mismatch": c.mismatches,
                "inconclusive": c.inconclusive,
                "errors": c.errors,
                "flagged": c.flagged,
            },
            "warnings": warnings,
            "records": records,
        })
    }
}

/// Cayley table plus every certificate behind a flagged record, enough
/// to replay it without the catalog.
pub fn reproduction_bundle(g: &FiniteGroup, r: &ValidationRecord) -> Value {
    let failed: Vec<Value> = r
        .strategies
        .iter()
        .filter(|o| o.status != StrategyStatus::Verified)
        .map(|o| json!({"label": o.label, "coloring": coloring_json(&r.graph, &o.coloring)}))
        .collect();
    json!({
        "cayley": write_cayley(g),
        "awning_certificate": r.awning.certificate().map(certificate_json),
        "literal_awning_certificate": r.literal_awning.certificate().map(certificate_json),
        "failed_colorings": failed,
        "oracle_certificate": r.oracle.upper_bound_certificate.as_ref().map(|c| coloring_json(&r.graph, c)),
    })
}
