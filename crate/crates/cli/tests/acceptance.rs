//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use liefields_core::catalog::{instantiate, sample_field_vectors, sample_params, verify_determinants, TypeId};
use liefields_core::connection::{ad_matrix, ad_star_matrix, j_matrix, levi_civita_l};
use liefields_core::exactnum::Rational;
use liefields_core::liealg::{FieldVector, MetricLieAlgebra};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_liefields");
const SWEEP: [&str; 10] = [
    "verify", "--type", "all", "--samples", "100", "--seed", "42", "--bound", "10", "--json",
];
/// Killing dimensions per type, in catalog order.
const EXPECTED_DIMS: [(&str, usize); 10] = [
    ("5A1", 5),
    ("A5_4", 1),
    ("A3_1+2A1", 3),
    ("A4_1+A1_I", 2),
    ("A4_1+A1_II", 2),
    ("A5_6", 1),
    ("A5_5", 1),
    ("A5_3", 2),
    ("A5_1", 2),
    ("A5_2", 1),
];
const CONNECTION_SAMPLES: u64 = 20;
const TRIPLES: usize = 25;
const CONNECTION_SEED: u64 = 2024;

struct Run {
    stdout: Vec<u8>,
    success: bool,
    elapsed: Duration,
}

fn run(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    Run {
        stdout: out.stdout,
        success: out.status.success(),
        elapsed: start.elapsed(),
    }
}

/// Every type present in order with 100 samples, and no sample failing `check`.
fn sweep_clean(summary: &Value, checks: &[&str]) -> Result<(), String> {
    let types = summary["types"].as_array().ok_or("no types array")?;
    if types.len() != 10 {
        return Err(format!("{} types in sweep", types.len()));
    }
    for t in types {
        if t["samples"] != 100 {
            return Err(format!("{}: {} samples", t["type"], t["samples"]));
        }
        for c in checks {
            let n = t["check_failures"][c].as_u64().ok_or_else(|| format!("missing check {c}"))?;
            if n != 0 {
                return Err(format!("{}: {c} failed on {n} samples", t["type"]));
            }
        }
    }
    Ok(())
}

fn dims_match(summary: &Value) -> Result<(), String> {
    let types = summary["types"].as_array().ok_or("no types array")?;
    for (t, (name, dim)) in types.iter().zip(EXPECTED_DIMS) {
        if t["type"] != name {
            return Err(format!("expected {name}, found {}", t["type"]));
        }
        let records = t["records"].as_array().ok_or("no records")?;
        if records.len() != 100 {
            return Err(format!("{name}: {} records", records.len()));
        }
        if let Some(r) = records.iter().find(|r| r["killing_dim"] != dim) {
            return Err(format!("{name} sample {}: dimension {}, expected {dim}", r["index"], r["killing_dim"]));
        }
    }
    Ok(())
}

type Triple = (FieldVector<Rational>, FieldVector<Rational>, FieldVector<Rational>);

fn connection_cases() -> Vec<(TypeId, u64, MetricLieAlgebra<Rational>, Vec<Triple>)> {
    let mut cases = Vec::new();
    for ty in TypeId::ALL {
        for i in 0..CONNECTION_SAMPLES {
            let alg = instantiate(ty, &sample_params(ty, CONNECTION_SEED, i, 10).unwrap()).unwrap();
            let vs = sample_field_vectors(ty, CONNECTION_SEED, i, 3 * TRIPLES, 10).unwrap();
            let triples = vs
                .chunks(3)
                .map(|c| (c[0].clone(), c[1].clone(), c[2].clone()))
                .collect();
            cases.push((ty, i, alg, triples));
        }
    }
    cases
}

fn levi_civita(cases: &[(TypeId, u64, MetricLieAlgebra<Rational>, Vec<Triple>)]) -> Result<usize, String> {
    let mut count = 0;
    for (ty, i, alg, triples) in cases {
        let fail = |what: &str| Err(format!("{ty} sample {i}: {what}"));
        for (u, v, w) in triples {
            let lu = levi_civita_l(alg, u).unwrap();
            let luv = lu.apply(v).unwrap();
            let lvu = levi_civita_l(alg, v).unwrap().apply(u).unwrap();
            if luv.sub(&lvu) != alg.bracket(u, v).unwrap() {
                return fail("L_u v - L_v u != [u, v]");
            }
            let luw = lu.apply(w).unwrap();
            if !(alg.inner(&luv, w).unwrap() + alg.inner(v, &luw).unwrap()).is_zero() {
                return fail("<L_u v, w> + <v, L_u w> != 0");
            }
            count += 1;
        }
    }
    Ok(count)
}

fn structural(cases: &[(TypeId, u64, MetricLieAlgebra<Rational>, Vec<Triple>)]) -> Result<usize, String> {
    let mut count = 0;
    for (ty, i, alg, triples) in cases {
        let fail = |what: String| Err(format!("{ty} sample {i}: {what}"));
        if let Err(v) = alg.jacobi_check() {
            return fail(v.to_string());
        }
        if !alg.is_nilpotent() {
            return fail("not nilpotent".into());
        }
        for (u, v, w) in triples {
            let ju = j_matrix(alg, u).unwrap();
            let lhs = alg.inner(&ju.apply(v).unwrap(), w).unwrap();
            let rhs = alg.inner(v, &ju.apply(w).unwrap()).unwrap();
            if !(lhs + rhs).is_zero() {
                return fail("J_u is not skew".into());
            }
            let ad = ad_matrix(alg, u).unwrap().apply(v).unwrap();
            let star = ad_star_matrix(alg, u).unwrap().apply(w).unwrap();
            if alg.inner(&ad, w).unwrap() != alg.inner(v, &star).unwrap() {
                return fail("ad_u and ad*_u are not adjoint".into());
            }
            count += 1;
        }
    }
    Ok(count)
}

fn main() -> ExitCode {
    let mut results: Vec<(u8, String, Result<String, String>)> = Vec::new();

    let first = run(&SWEEP);
    let second = run(&SWEEP);
    let summary: Result<Value, String> = if first.success {
        serde_json::from_slice(&first.stdout).map_err(|e| format!("unparseable output: {e}"))
    } else {
        Err("verify exited unsuccessfully".into())
    };
    let on_sweep = |f: &dyn Fn(&Value) -> Result<(), String>, ok: &str| match &summary {
        Ok(s) => f(s).map(|()| ok.to_string()),
        Err(e) => Err(e.clone()),
    };

    let c1 = on_sweep(&|s| sweep_clean(s, &["killing_equals_center"]), "1000 analyses").and_then(|m| {
        if first.elapsed < Duration::from_secs(30) {
            Ok(format!("{m} in {:.2?}", first.elapsed))
        } else {
            Err(format!("took {:.2?}", first.elapsed))
        }
    });
    results.push((1, "Killing fields equal the center".into(), c1));
    results.push((2, "Killing dimensions per type".into(), on_sweep(&dims_match, "5,1,3,2,2,1,1,2,2,1")));
    results.push((
        3,
        "one-harmonic fields equal Killing fields".into(),
        on_sweep(&|s| sweep_clean(s, &["one_harmonic_equals_killing"]), "every sample"),
    ));
    results.push((
        4,
        "conformal fields are Killing, divergence vanishes".into(),
        on_sweep(
            &|s| sweep_clean(s, &["conformal_equals_killing", "divergence_free"]),
            "every sample, 10 probes each",
        ),
    ));
    results.push((
        5,
        "no concurrent fields".into(),
        on_sweep(&|s| sweep_clean(s, &["concurrent_empty"]), "every sample including 5A1"),
    ));

    let sym = run(&["verify-symbolic", "--type", "all"]);
    let text = String::from_utf8_lossy(&sym.stdout);
    let tables = text.lines().filter(|l| l.starts_with("table ") && l.ends_with(": ok")).count();
    let c6 = if !sym.success || tables != 10 {
        Err(format!("{tables}/10 tables match"))
    } else if sym.elapsed >= Duration::from_secs(5) {
        Err(format!("took {:.2?}", sym.elapsed))
    } else {
        Ok(format!("10/10 tables in {:.2?}", sym.elapsed))
    };
    results.push((6, "symbolic operator tables".into(), c6));

    let c7 = match verify_determinants() {
        Ok(()) => Ok("all exact".to_string()),
        Err(bad) => Err(bad.iter().map(|c| c.label).collect::<Vec<_>>().join("; ")),
    };
    results.push((7, "determinant identities".into(), c7));

    let cases = connection_cases();
    results.push((
        8,
        "Levi-Civita torsion-free and metric".into(),
        levi_civita(&cases).map(|n| format!("{n} triples")),
    ));
    let c9 = structural(&cases).and_then(|n| {
        on_sweep(&|s| sweep_clean(s, &["jacobi", "nilpotent"]), "").map(|_| format!("{n} triples, 1000 sweep algebras"))
    });
    results.push((9, "Jacobi, nilpotency, J skew, ad adjointness".into(), c9));

    let c10 = if first.stdout.is_empty() {
        Err("empty output".into())
    } else if first.stdout == second.stdout {
        Ok(format!("{} identical bytes", first.stdout.len()))
    } else {
        Err("outputs differ".into())
    };
    results.push((10, "deterministic structured output".into(), c10));

    let mut all = true;
    for (n, name, r) in &results {
        match r {
            Ok(m) => println!("[PASS] criterion {n}: {name} ({m})"),
            Err(m) => {
                all = false;
                println!("[FAIL] criterion {n}: {name} ({m})");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
