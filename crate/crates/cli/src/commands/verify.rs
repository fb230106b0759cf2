//! Sampled reproduction of the classification results across the catalog.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use liefields_core::catalog::{instantiate, sample_field_vectors, sample_params, TypeId};
use liefields_core::connection::divergence;
use liefields_core::exactnum::Rational;
use liefields_core::liealg::FieldVector;
use liefields_core::solvers::{analyze, OneHarmonic};
use rayon::prelude::*;
use serde::Serialize;

use super::Output;
use crate::error::CliError;
use crate::report::{span, TOOL, VERSION};

/// Random ξ per sample on which the divergence must vanish.
const DIVERGENCE_PROBES: usize = 10;

pub const CHECKS: [&str; 8] = [
    "jacobi",
    "nilpotent",
    "killing_equals_center",
    "killing_dim",
    "one_harmonic_equals_killing",
    "conformal_equals_killing",
    "concurrent_empty",
    "divergence_free",
];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub types: Vec<TypeId>,
    pub samples: u64,
    pub seed: u64,
    pub bound: u64,
    pub json: bool,
}

#[derive(Serialize)]
struct SampleRecord {
    index: u64,
    params: BTreeMap<String, String>,
    killing_dim: usize,
    ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failed: Vec<&'static str>,
}

struct SampleOutcome {
    record: SampleRecord,
    details: Vec<String>,
}

#[derive(Serialize)]
struct TypeSummary {
    #[serde(rename = "type")]
    type_id: String,
    expected_killing_dim: usize,
    samples: u64,
    passed: u64,
    failed: u64,
    check_failures: BTreeMap<&'static str, u64>,
    records: Vec<SampleRecord>,
}

#[derive(Serialize)]
struct Summary {
    tool: &'static str,
    version: &'static str,
    seed: u64,
    samples: u64,
    bound: u64,
    analyses: u64,
    failures: u64,
    types: Vec<TypeSummary>,
}

fn encode(basis: &[FieldVector<Rational>]) -> Vec<Vec<String>> {
    basis
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect()
}

fn run_sample(ty: TypeId, seed: u64, index: u64, bound: u64) -> Result<SampleOutcome, CliError> {
    let params = sample_params(ty, seed, index, bound)?;
    let alg = instantiate(ty, &params)?;
    let report = analyze(&alg)?;
    let mut failed = Vec::new();
    let mut details = Vec::new();
    let mut fail = |name: &'static str, detail: String| {
        failed.push(name);
        details.push(format!("{name}: {detail}"));
    };

    if let Err(v) = alg.jacobi_check() {
        fail("jacobi", v.to_string());
    }
    let series = alg.lower_central_series();
    if series.last() != Some(&0) {
        fail("nilpotent", format!("lower central series {series:?}"));
    }
    let killing = encode(&report.killing);
    if !report.flags.killing_equals_center {
        fail(
            "killing_equals_center",
            format!("Killing {} vs center {}", span(&killing), span(&encode(&report.center))),
        );
    }
    if report.killing.len() != ty.expected_killing_dim() {
        fail(
            "killing_dim",
            format!("got {}, expected {}", report.killing.len(), ty.expected_killing_dim()),
        );
    }
    match (&report.one_harmonic, report.flags.one_harmonic_equals_killing) {
        (_, Some(true)) => {}
        (OneHarmonic::Basis(b), _) => fail(
            "one_harmonic_equals_killing",
            format!("one-harmonic {} vs Killing {}", span(&encode(b)), span(&killing)),
        ),
        (OneHarmonic::Skipped, _) => fail("one_harmonic_equals_killing", "skipped".into()),
    }
    if !report.flags.conformal_equals_killing {
        fail(
            "conformal_equals_killing",
            format!("conformal {} vs Killing {}", span(&encode(&report.conformal)), span(&killing)),
        );
    }
    if !report.flags.concurrent_empty {
        fail("concurrent_empty", "R_ξ = id is solvable".into());
    }
    for xi in sample_field_vectors(ty, seed, index, DIVERGENCE_PROBES, bound)? {
        let d = divergence(&alg, &xi)?;
        if !d.is_zero() {
            let comps: Vec<String> = xi.iter().map(ToString::to_string).collect();
            fail("divergence_free", format!("div({}) = {d}", comps.join(", ")));
            break;
        }
    }

    let record = SampleRecord {
        index,
        params: params.iter().map(|(v, r)| (v.name().to_string(), r.to_string())).collect(),
        killing_dim: report.killing.len(),
        ok: failed.is_empty(),
        failed,
    };
    Ok(SampleOutcome { record, details })
}

/// Samples every selected type, analyses each instance, and checks the
/// expected relations between the computed spaces. Samples are evaluated in
/// parallel; output order is (type, index) regardless of scheduling.
pub fn verify(opts: &VerifyOptions) -> Result<Output, CliError> {
    if opts.bound < 1 {
        return Err(liefields_core::Error::InvalidBound(opts.bound).into());
    }
    let jobs: Vec<(TypeId, u64)> = opts
        .types
        .iter()
        .flat_map(|&ty| (0..opts.samples).map(move |i| (ty, i)))
        .collect();
    let outcomes: Vec<SampleOutcome> = jobs
        .into_par_iter()
        .map(|(ty, i)| run_sample(ty, opts.seed, i, opts.bound))
        .collect::<Result<_, _>>()?;

    let mut outcomes = outcomes.into_iter();
    let mut text = String::new();
    let mut types = Vec::new();
    let mut failures = 0;
    for &ty in &opts.types {
        let mut check_failures: BTreeMap<&'static str, u64> = CHECKS.iter().map(|&c| (c, 0)).collect();
        let mut records = Vec::new();
        let mut dims = BTreeSet::new();
        let mut detail_lines = String::new();
        for outcome in outcomes.by_ref().take(opts.samples as usize) {
            let r = &outcome.record;
            dims.insert(r.killing_dim);
            for name in &r.failed {
                *check_failures.get_mut(name).expect("known check") += 1;
            }
            if !r.ok {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(detail_lines, "  FAIL sample {} ({})", r.index, params.join(", "));
                for d in &outcome.details {
                    let _ = writeln!(detail_lines, "    {d}");
                }
            }
            records.push(outcome.record);
        }
        let passed = records.iter().filter(|r| r.ok).count() as u64;
        let failed = opts.samples - passed;
        failures += failed;
        let dims: Vec<String> = dims.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            text,
            "{ty}: {passed}/{} samples passed (Killing dimension {}, expected {})",
            opts.samples,
            if dims.is_empty() { "-".to_string() } else { dims.join(", ") },
            ty.expected_killing_dim()
        );
        text.push_str(&detail_lines);
        types.push(TypeSummary {
            type_id: ty.to_string(),
            expected_killing_dim: ty.expected_killing_dim(),
            samples: opts.samples,
            passed,
            failed,
            check_failures,
            records,
        });
    }
    let analyses = opts.samples * opts.types.len() as u64;
    let _ = writeln!(text, "total: {analyses} analyses, {failures} failures");

    let text = if opts.json {
        let summary = Summary {
            tool: TOOL,
            version: VERSION,
            seed: opts.seed,
            samples: opts.samples,
            bound: opts.bound,
            analyses,
            failures,
            types,
        };
        let mut s = serde_json::to_string_pretty(&summary).expect("plain data serializes");
        s.push('\n');
        s
    } else {
        text
    };
    Ok(Output {
        text,
        passed: failures == 0,
    })
}
