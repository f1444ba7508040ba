//! Full analysis of one configuration, as deterministic JSON or plain text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::config::Origin;
use crate::error::Result;
use crate::geometry::Flat;
use crate::scalar;
use crate::verify::{self, ClaimReport, Facts, Status};
use crate::weighted::WeightFn;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Claim checks to skip entirely (only the structural data is reported).
    pub skip_claims: bool,
    pub expectations: BTreeMap<String, i64>,
}

pub struct Analysis {
    pub json: Value,
    pub claims: Vec<ClaimReport>,
}

impl Analysis {
    /// True when no claim failed.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }
}

fn flat_json(f: &Flat) -> Value {
    json!(f
        .basis()
        .iter()
        .map(|r| r.iter().map(scalar::format).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>())
}

pub fn analyze(facts: &Facts, opts: &AnalyzeOptions) -> Result<Analysis> {
    let fv = &facts.fvector;
    let config = &facts.config;
    let origin = match config.origin() {
        None => Value::Null,
        Some(Origin::Index(i)) => json!({"index": i}),
        Some(Origin::Point(p)) => {
            json!({"point": p.coords().iter().map(scalar::format).collect::<Vec<_>>()})
        }
    };
    let histograms: BTreeMap<String, BTreeMap<String, u64>> = fv
        .histograms
        .iter()
        .enumerate()
        .map(|(k, h)| {
            (
                k.to_string(),
                h.iter().map(|(c, v)| (c.to_string(), *v)).collect(),
            )
        })
        .collect();
    let origin_split = fv.origin_split.as_ref().map(|s| {
        s.iter()
            .enumerate()
            .map(|(k, x)| json!({"k": k, "through": x.through, "off": x.off}))
            .collect::<Vec<_>>()
    });
    let rich_lines: BTreeMap<String, u64> = if fv.k_max() >= 1 {
        let top = fv.histograms[1].keys().max().copied().unwrap_or(0);
        (2..=top)
            .map(|t| (t.to_string(), fv.at_least(1, t)))
            .collect()
    } else {
        BTreeMap::new()
    };

    let deg = facts.degeneracy()?;
    let n = facts.n();
    let witnesses: Vec<Value> = deg
        .witnesses
        .iter()
        .enumerate()
        .map(|(k, w)| {
            json!({
                "k": k,
                "total_dim": w.total_dim(),
                "cardinality": w.cardinality(),
                "covered": w.covered(),
                "flats": w.flats().iter().map(flat_json).collect::<Vec<_>>(),
            })
        })
        .collect();

    let mut claims = Vec::new();
    if !opts.skip_claims {
        claims.push(verify::flat_count_drop(facts, None)?);
        claims.push(verify::debruijn_erdos(facts)?);
        claims.push(verify::weighted_monotone(
            facts,
            None,
            &WeightFn::Reciprocal,
        )?);
        claims.push(verify::projection_rewrite(facts, 1, &WeightFn::Reciprocal)?);
        claims.push(verify::contained_flats(facts)?);
        claims.push(verify::witness_minimality(facts)?);
        claims.push(verify::projection_degeneracy(facts)?);
        if config.ambient_dim() >= 1 {
            claims.push(verify::partition_bound(
                config,
                &verify::default_partition(n),
                1,
            )?);
        }
        claims.push(verify::log_concavity(facts)?);
        if !opts.expectations.is_empty() {
            claims.push(verify::expected_stats(facts, &opts.expectations)?);
        }
    }

    let json = json!({
        "schema": SCHEMA,
        "n": n,
        "ambient_dim": config.ambient_dim(),
        "enumeration_depth": facts.enumeration.k_max(),
        "origin": origin,
        "f_vector": fv.counts,
        "histograms": histograms,
        "origin_split": origin_split,
        "rich_lines": rich_lines,
        "essential_dim": deg.essential_dim,
        "g": deg.g,
        "n_minus_g": deg.g.iter().map(|g| n - g).collect::<Vec<_>>(),
        "witnesses": witnesses,
        "claims": claims,
    });
    Ok(Analysis { json, claims })
}

/// Human-readable rendering of an analysis.
pub fn render_text(a: &Analysis) -> String {
    let j = &a.json;
    let mut out = String::new();
    let _ = writeln!(out, "points:            {}", j["n"]);
    let _ = writeln!(out, "ambient dimension: {}", j["ambient_dim"]);
    let fvec: Vec<String> = j["f_vector"]
        .as_array()
        .unwrap()
        .iter()
        .map(Value::to_string)
        .collect();
    let _ = writeln!(out, "f-vector (f_-1..): ({})", fvec.join(", "));
    if let Some(split) = j["origin_split"].as_array() {
        for s in split {
            let _ = writeln!(
                out,
                "  k={}: through origin {}, off origin {}",
                s["k"], s["through"], s["off"]
            );
        }
    }
    if let Some(h) = j["histograms"].as_object() {
        for (k, m) in h {
            let parts: Vec<String> = m
                .as_object()
                .unwrap()
                .iter()
                .map(|(c, v)| format!("{c}:{v}"))
                .collect();
            let _ = writeln!(out, "  multiplicities k={k}: {}", parts.join(" "));
        }
    }
    match j["essential_dim"].as_u64() {
        Some(k) => {
            let _ = writeln!(out, "essential dimension: {k}");
        }
        None => {
            let _ = writeln!(out, "essential dimension: above enumeration depth");
        }
    }
    let g: Vec<String> = j["g"]
        .as_array()
        .unwrap()
        .iter()
        .map(Value::to_string)
        .collect();
    let _ = writeln!(out, "g: ({})", g.join(", "));
    for w in j["witnesses"].as_array().unwrap() {
        if w["cardinality"] == 0 {
            continue;
        }
        let _ = writeln!(
            out,
            "  G_{}: {} flat(s), total dim {}, covers {}",
            w["k"],
            w["cardinality"],
            w["total_dim"],
            w["covered"].as_array().unwrap().len()
        );
    }
    for c in &a.claims {
        let _ = writeln!(out, "[{}] {}", c.status.as_str(), c.claim_id);
    }
    out
}
