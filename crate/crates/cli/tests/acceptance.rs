//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use flatspan::constructions::{
    crosspolytope_construction, hypercube, hypercube_construction, near_pencil, skew_lines,
};
use flatspan::essential::CoverSearch;
use flatspan::scalar::ratio;
use flatspan::verify::{self, Facts, Status};
use flatspan::weighted::{weighted_sum, weighted_sum_via_projection, WeightFn};
use flatspan::{enumerate_spanned, f_vector, g_vector, Config};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{oracle, random_points, to_config};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn deficiency(c: &Config, k: usize) -> usize {
    c.len() - CoverSearch::for_config(c).unwrap().g(k).unwrap()
}

fn hypercube_table() -> Outcome {
    let fv = f_vector(&hypercube(3).unwrap()).unwrap();
    let got = [
        fv.through_origin(1).unwrap(),
        fv.off_origin(1).unwrap(),
        fv.through_origin(2).unwrap(),
        fv.off_origin(2).unwrap(),
    ];
    outcome(
        got == [4, 24, 6, 14],
        format!(
            "f1^o={} f1^off={} f2^o={} f2^off={}",
            got[0], got[1], got[2], got[3]
        ),
    )
}

fn hypercube_constructions() -> Outcome {
    let s2 = hypercube_construction(2, 10).unwrap();
    let s3 = hypercube_construction(3, 20).unwrap();
    let f2 = f_vector(&s2).unwrap();
    let f3 = f_vector(&s3).unwrap();
    let (d2, d3) = (deficiency(&s2, 2), deficiency(&s3, 3));
    let ok = s2.len() == 14
        && s3.len() == 28
        && (f2.f(1), f2.f(2)) == (47, 43)
        && (f3.f(2), f3.f(3)) == (504, 287)
        && d2 == 2
        && d3 == 4;
    outcome(
        ok,
        format!(
            "S2: f1={} f2={} n-g2={}; S3: f2={} f3={} n-g3={}",
            f2.f(1),
            f2.f(2),
            d2,
            f3.f(2),
            f3.f(3),
            d3
        ),
    )
}

fn skew_lines_example() -> Outcome {
    let c = skew_lines(4, 2, 3).unwrap();
    let fv = f_vector(&c).unwrap();
    let gv = g_vector(&c).unwrap();
    let n = c.len() as u64;
    let ok = fv.counts == [1, 8, 18, 8, 1]
        && fv.f(1) == (n / 2).pow(2) + 2
        && fv.f(2) == n
        && gv.essential_dim == 2
        && gv.g[2] == 8;
    outcome(
        ok,
        format!("f={:?} K={} g2={}", fv.counts, gv.essential_dim, gv.g[2]),
    )
}

fn cross_polytope_constructions() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let mut counts = Vec::new();
    for m in [40usize, 50] {
        let t = crosspolytope_construction(2, m).unwrap();
        let fv = f_vector(&t).unwrap();
        let (f4, f5, f6) = (fv.f(4), fv.f(5), fv.f(6));
        let (d6, d5) = (deficiency(&t, 6), deficiency(&t, 5));
        ok &= f6 < f5 && f5 < f4 && d6 == 2 && d5 == 4;
        parts.push(format!(
            "m={m}: f4={f4} f5={f5} f6={f6} n-g6={d6} n-g5={d5}"
        ));
        counts.push(fv);
    }
    for i in [5u32, 6] {
        let diff = counts[1].f(i as isize) - counts[0].f(i as isize);
        let want = 10 * 2u64.pow(i) * binomial(6, i as u64);
        ok &= diff == want;
        parts.push(format!("df{i}={diff} (want {want})"));
    }
    outcome(ok, parts.join("; "))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let mut bad = Vec::new();
    let mut covers = 0;
    for case in 0..200 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=9);
        let pts = random_points(&mut rng, n, d, 2);
        let c = to_config(d, &pts);
        let en = enumerate_spanned(&c, d).unwrap();
        let ours: BTreeSet<(usize, Vec<usize>)> = en
            .flats_in_dims(0, d)
            .map(|r| (r.dim() as usize, r.incident().to_vec()))
            .collect();
        if ours != oracle::spanned_flats(&pts) {
            bad.push(format!("#{case} flats"));
            continue;
        }
        let gv = g_vector(&c).unwrap();
        if gv.essential_dim != oracle::essential_dimension(&pts) {
            bad.push(format!("#{case} K"));
            continue;
        }
        for k in 0..=gv.essential_dim {
            covers += 1;
            if (gv.g[k], gv.witnesses[k].cardinality()) != oracle::cover(&pts, k) {
                bad.push(format!("#{case} g_{k}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("200 configs, {covers} cover values; mismatches: {bad:?}"),
    )
}

fn projection_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x31);
    let mut checked = 0;
    let mut bad = Vec::new();
    for case in 0..50 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(2..=8);
        let pts = random_points(&mut rng, n, d, 2);
        let weights = (0..n)
            .map(|_| {
                let b = rng.gen_range(1..=4);
                ratio(b + rng.gen_range(0..=2 * b), b)
            })
            .collect();
        let c = to_config(d, &pts).with_weights(weights).unwrap();
        for f in [WeightFn::One, WeightFn::Reciprocal] {
            for k in 1..=2 {
                checked += 1;
                let lhs = weighted_sum(&c, k, &f).unwrap();
                let rhs = weighted_sum_via_projection(&c, k, &f).unwrap();
                if lhs != rhs {
                    bad.push(format!("#{case} {f} k={k}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} identities; mismatches: {bad:?}"),
    )
}

/// Random points on a few random flats of `P^3` whose dimensions sum to at
/// most 3, so the essential dimension is at most that sum.
fn sprinkled(rng: &mut ChaCha8Rng) -> Config {
    let shapes: [&[usize]; 5] = [&[1], &[1, 1], &[2], &[2, 1], &[1, 1, 1]];
    let shape = shapes[rng.gen_range(0..shapes.len())];
    let mut pts: Vec<Vec<i64>> = Vec::new();
    for &dim in shape {
        let basis = loop {
            let b = random_points(rng, dim + 1, 3, 3);
            if oracle::rank(&b) == dim + 1 {
                break b;
            }
        };
        let want = rng.gen_range(dim + 1..=dim + 4);
        let mut placed = 0;
        let mut tries = 0;
        while placed < want && tries < 200 {
            tries += 1;
            let coef: Vec<i64> = (0..=dim).map(|_| rng.gen_range(-3..=3)).collect();
            let v: Vec<i64> = (0..4)
                .map(|j| basis.iter().zip(&coef).map(|(b, c)| b[j] * c).sum())
                .collect();
            if v.iter().all(|x| *x == 0) || pts.iter().any(|p| oracle::same_point(p, &v)) {
                continue;
            }
            pts.push(v);
            placed += 1;
        }
    }
    to_config(3, &pts)
}

fn flat_count_drop() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x71);
    let mut checks = 0;
    let mut bad = Vec::new();
    for case in 0..100 {
        let c = sprinkled(&mut rng);
        let facts = Facts::new(c, None).unwrap();
        let kk = facts.degeneracy().unwrap().essential_dim.unwrap();
        for k in kk.max(1)..=3 {
            checks += 1;
            let r = verify::flat_count_drop(&facts, Some(k)).unwrap();
            if r.status != Status::Pass {
                bad.push(format!("#{case} k={k} {:?}", r.details));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("100 configs, {checks} (config, k) checks; failures: {bad:?}"),
    )
}

fn structural_lemmas() -> Outcome {
    let mut configs: Vec<(String, Config)> = vec![
        ("C^3".into(), hypercube(3).unwrap()),
        ("S^2 m=10".into(), hypercube_construction(2, 10).unwrap()),
        ("S^3 m=20".into(), hypercube_construction(3, 20).unwrap()),
        ("T^1 m=6".into(), crosspolytope_construction(1, 6).unwrap()),
        (
            "T^2 m=40".into(),
            crosspolytope_construction(2, 40).unwrap(),
        ),
        (
            "T^2 m=50".into(),
            crosspolytope_construction(2, 50).unwrap(),
        ),
        ("skew 4x2".into(), skew_lines(4, 2, 3).unwrap()),
        ("skew 3x3".into(), skew_lines(3, 3, 5).unwrap()),
        ("near-pencil 6".into(), near_pencil(6).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x88);
    for i in 0..60 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(2..=9);
        configs.push((
            format!("random #{i}"),
            to_config(d, &random_points(&mut rng, n, d, 2)),
        ));
    }
    for i in 0..20 {
        configs.push((format!("sprinkled #{i}"), sprinkled(&mut rng)));
    }
    let mut bad = Vec::new();
    let mut cases = 0u64;
    for (name, c) in configs.iter() {
        let facts = Facts::new(c.clone(), None).unwrap();
        for r in [
            verify::contained_flats(&facts).unwrap(),
            verify::witness_minimality(&facts).unwrap(),
            verify::projection_degeneracy(&facts).unwrap(),
        ] {
            if let Some(v) = r.details.get("cases") {
                cases += v.as_u64().unwrap_or(0);
            }
            if r.status == Status::Fail {
                bad.push(format!("{name}: {}", r.claim_id));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} configs, {cases} projection cases; failures: {bad:?}",
            configs.len()
        ),
    )
}

fn partition_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x99);
    let mut bad = Vec::new();
    for case in 0..100 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(2..=10);
        let c = to_config(d, &random_points(&mut rng, n, d, 2));
        let mut part = FixedBitSet::with_capacity(n);
        for i in 0..n {
            if rng.gen_bool(0.5) {
                part.insert(i);
            }
        }
        let k = rng.gen_range(0..=d);
        let r = verify::partition_bound(&c, &part, k).unwrap();
        if r.status != Status::Pass {
            bad.push(format!("#{case} {:?}", r.details));
        }
    }
    outcome(bad.is_empty(), format!("100 triples; failures: {bad:?}"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_flatspan");
    let dir = tempfile::tempdir().unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, params) in [("s2", ["2", "10"]), ("s3", ["3", "20"])] {
        let file = dir.path().join(format!("{name}.txt"));
        let st = Command::new(bin)
            .args(["gen", "hypercube-raised", params[0], params[1], "-o"])
            .arg(&file)
            .status()
            .unwrap();
        ok &= st.success();
        let outputs: Vec<Vec<u8>> = ["1", "3"]
            .iter()
            .map(|t| {
                Command::new(bin)
                    .env("FLATSPAN_THREADS", t)
                    .args(["analyze", "--json"])
                    .arg(&file)
                    .output()
                    .unwrap()
                    .stdout
            })
            .collect();
        let same = !outputs[0].is_empty() && outputs[0] == outputs[1];
        ok &= same;
        parts.push(format!(
            "{name}: {} bytes, identical={same}",
            outputs[0].len()
        ));
    }
    outcome(ok, parts.join("; "))
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            1,
            "hypercube C^3 origin split",
            Duration::from_secs(1),
            hypercube_table,
        ),
        (
            2,
            "hypercube constructions S^2, S^3",
            Duration::from_secs(30),
            hypercube_constructions,
        ),
        (
            3,
            "skew lines n=8",
            Duration::from_secs(1),
            skew_lines_example,
        ),
        (
            4,
            "cross-polytope construction T^2",
            Duration::from_secs(600),
            cross_polytope_constructions,
        ),
        (
            5,
            "oracle equivalence (200 configs)",
            Duration::from_secs(300),
            oracle_equivalence,
        ),
        (
            6,
            "projection rewrite identity (50 weighted)",
            Duration::MAX,
            projection_identity,
        ),
        (
            7,
            "flat-count drop for K <= k (100 configs)",
            Duration::MAX,
            flat_count_drop,
        ),
        (
            8,
            "structural lemmas on test configs",
            Duration::MAX,
            structural_lemmas,
        ),
        (
            9,
            "partition upper bound (100 triples)",
            Duration::MAX,
            partition_bound,
        ),
        (
            10,
            "determinism across worker counts",
            Duration::MAX,
            determinism,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= limit;
        let pass = out.ok && in_time;
        failed += usize::from(!pass);
        let budget = if limit == Duration::MAX {
            String::new()
        } else {
            format!(", limit {} s", limit.as_secs())
        };
        println!(
            "criterion {id:>2} {}: {name} — {} [{:.2} s{budget}]",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
