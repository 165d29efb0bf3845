//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero on any failure.

mod common;

use std::time::{Duration, Instant};

use common::*;
use fourier_mds::fieldsearch::{euler_phi, gcd, order_mod};
use fourier_mds::planner::{self, Rate};
use fourier_mds::verify::{hamming_distance, min_distance, OracleDecoder};
use fourier_mds::{codec, demo, fieldsearch, CodeSpec, Field, FourierCtx, Matrix};
use rand::Rng;

type Outcome = Result<String, String>;
type Visit<'a> = &'a mut dyn FnMut(&[(usize, u64)]);
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_demo() -> Outcome {
    let report = demo::run().map_err(|e| e.to_string())?;
    if let Some(m) = report.mismatch {
        return Err(m);
    }
    for needle in [
        "s = 2 9 12 10 11 11",
        "a = 3 12 7 0 1 0 1 2 4 0 10 12",
        "positions = [3, 5, 9]",
        "magnitudes = 10 1 4",
        "c = 8 9 2 9 3 2 10 8 4 10 5 7",
        "data = 1 2 3 4 5 6",
    ] {
        ensure(report.transcript.contains(needle), || format!("transcript lacks '{needle}'"))?;
    }
    Ok("all intermediates match".into())
}

fn brute_force_distances() -> Outcome {
    let mut cases: Vec<(CodeSpec, usize, &str)> = Vec::new();
    let gf8 = FourierCtx::with_default_root(Field::new(2, 3).unwrap(), 7).unwrap();
    for (r, d) in [(5, 3), (3, 5), (1, 7)] {
        cases.push((CodeSpec::consecutive(gf8.clone(), r).unwrap(), d, "GF(2^3)"));
    }
    for (r, d) in [(8, 3), (6, 5), (4, 7), (2, 9)] {
        cases.push((prime_code(11, 10, r), d, "GF(11)"));
    }
    let gf13 = FourierCtx::new(Field::prime(13).unwrap(), 12, Field::prime(13).unwrap().from_int(2).unwrap()).unwrap();
    cases.push((CodeSpec::new(gf13.clone(), 6, 0, 1).unwrap(), 7, "GF(13)"));
    cases.push((CodeSpec::new(gf13, 6, 1, 5).unwrap(), 7, "GF(13)"));
    let mut seen = Vec::new();
    for (code, want, name) in &cases {
        let d = min_distance(code.field(), &code.generator_matrix()).map_err(|e| e.to_string())?;
        ensure(d == *want, || format!("({}, {}) over {name}: d = {d}, expected {want}", code.n(), code.r()))?;
        seen.push(format!("({},{},{})", code.n(), code.r(), d));
    }
    Ok(seen.join(" "))
}

/// Calls `visit` with every error pattern of weight 1..=max_weight, given as
/// (position, non-zero value) pairs.
fn for_each_pattern(n: usize, q: u64, max_weight: usize, visit: Visit) {
    fn rec(n: usize, q: u64, left: usize, start: usize, acc: &mut Vec<(usize, u64)>, visit: Visit) {
        if !acc.is_empty() {
            visit(acc);
        }
        if left == 0 {
            return;
        }
        for m in start..n {
            for v in 1..q {
                acc.push((m, v));
                rec(n, q, left - 1, m + 1, acc, visit);
                acc.pop();
            }
        }
    }
    rec(n, q, max_weight, 0, &mut Vec::new(), visit);
}

fn exhaustive_decode_equivalence() -> Outcome {
    let code = prime_code(11, 10, 4);
    let f = code.field();
    let oracle = OracleDecoder::new(&code).map_err(|e| e.to_string())?;
    let mut rng = rng(0xAC3);
    let mut decodes = 0u64;
    for _ in 0..20 {
        let (u, c) = random_codeword(&mut rng, &code);
        let mut failure: Option<String> = None;
        let mut check = |w: &[fourier_mds::Fe]| {
            decodes += 1;
            let expected = oracle.decode(w).map_err(|e| e.to_string());
            let got = codec::decode(&code, w).map(|d| (d.codeword, d.data)).map_err(|e| e.to_string());
            let agree = match (&expected, &got) {
                (Ok(o), Ok((cw, data))) => o == cw && o == &c && data == &u,
                _ => false,
            };
            if !agree && failure.is_none() {
                failure = Some(format!("w = {w:?}: oracle {expected:?}, decoder {got:?}"));
            }
        };
        check(&c);
        for_each_pattern(code.n(), f.order(), code.t(), &mut |pattern| {
            let mut w = c.clone();
            for &(m, v) in pattern {
                w[m] = f.add(w[m], f.from_int(v).unwrap());
            }
            check(&w);
        });
        if let Some(msg) = failure {
            return Err(msg);
        }
    }
    Ok(format!("{decodes} decodes agree with the oracle"))
}

fn large_field_roundtrip() -> Outcome {
    let f257 = Field::prime(257).unwrap();
    let ctx = FourierCtx::new(f257.clone(), 256, f257.from_int(3).unwrap()).map_err(|e| e.to_string())?;
    let big = CodeSpec::consecutive(ctx, 224).unwrap();
    let large = prime_code(509, 508, 486);
    let mut rng = rng(0xAC4);
    for (code, trials) in [(&big, 1000), (&large, 100)] {
        ensure(code.t() == (code.n() - code.r()) / 2, || "t mismatch".into())?;
        for trial in 0..trials {
            let (u, c) = random_codeword(&mut rng, code);
            let e = rng.gen_range(0..=code.t());
            let (w, positions) = corrupt(&mut rng, code.field(), &c, e);
            let out = codec::decode(code, &w).map_err(|err| format!("({}, {}) trial {trial}: {err}", code.n(), code.r()))?;
            ensure(out.data == u && out.positions == positions, || {
                format!("({}, {}) trial {trial}: wrong correction", code.n(), code.r())
            })?;
        }
    }
    Ok("(256,224)/GF(257) x1000, (508,486)/GF(509) x100: all recovered".into())
}

fn naive_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

fn naive_phi(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

fn field_search() -> Outcome {
    let orders = [
        (3u64, 400u64, 20u64),
        (7, 400, 4),
        (2, 399, 18),
        (3, 52, 6),
        (5, 52, 4),
        (3, 257, 256),
        (11, 10009, 10008),
    ];
    for (a, m, want) in orders {
        let got = order_mod(a, m).map_err(|e| e.to_string())?;
        ensure(got == want && naive_order(a, m) == want, || format!("ord_{m}({a}) = {got}, expected {want}"))?;
    }
    for (m, want) in [(256u64, 128u64), (10008, 3312)] {
        let got = euler_phi(m);
        ensure(got == want && naive_phi(m) == want, || format!("phi({m}) = {got}, expected {want}"))?;
    }
    let gf401 = fieldsearch::find_field(400, 401).map_err(|e| e.to_string())?;
    ensure(gf401.degree() == 1, || "GF(401) expected for n = 400".into())?;
    Ok("orders and totients exact".into())
}

fn planner_tables() -> Outcome {
    let rate = |a, b| Rate::new(a, b);
    let plan = planner::plan(rate(7, 8), 25, None).map_err(|e| e.to_string())?;
    ensure((plan.n, plan.r, plan.d) == (400, 350, 51), || format!("plan {plan:?}"))?;

    let table = |n, r, p, count| -> Result<Vec<(u64, u64, u64, String)>, String> {
        Ok(planner::series_multiples(n, r, p, count)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|e| (e.n, e.r, e.d, e.field_name()))
            .collect())
    };
    let s = |v: &str| v.to_string();
    let two = table(9, 7, 2, 4)?;
    let want_two = vec![
        (9, 7, 3, s("GF(2^6)")),
        (27, 21, 7, s("GF(2^18)")),
        (45, 35, 11, s("GF(2^12)")),
        (63, 49, 15, s("GF(2^6)")),
    ];
    ensure(two == want_two, || format!("characteristic 2 series {two:?}"))?;
    let three = table(10, 7, 3, 6)?;
    let params: Vec<_> = three.iter().map(|e| (e.0, e.1, e.2)).collect();
    let fields: Vec<&str> = three.iter().map(|e| e.3.as_str()).collect();
    ensure(
        params == [(10, 7, 4), (20, 14, 7), (40, 28, 13), (50, 35, 16), (70, 49, 22), (80, 56, 25)]
            && fields == ["GF(3^4)", "GF(3^4)", "GF(3^4)", "GF(3^20)", "GF(3^12)", "GF(3^4)"],
        || format!("characteristic 3 series {three:?}"),
    )?;
    let primes = planner::primes_congruent(1, 4, 2, 5);
    let prime = planner::prime_series(rate(3, 4), &primes, 5).map_err(|e| e.to_string())?;
    let got: Vec<_> = prime.iter().map(|e| (e.n, e.r, e.d)).collect();
    ensure(
        got == [(4, 3, 2), (12, 9, 4), (16, 12, 5), (28, 21, 8), (36, 27, 10)],
        || format!("prime series {got:?}"),
    )?;
    Ok("(400,350,51), both characteristic series, prime series".into())
}

fn property_suites() -> Outcome {
    for (p, n) in [(5u64, 4usize), (2, 7), (13, 12), (2, 15), (2, 31)] {
        let field = fieldsearch::find_field(n as u64, p).map_err(|e| e.to_string())?;
        let ctx = FourierCtx::with_default_root(field.clone(), n).unwrap();
        let prod = ctx.matrix().mul(&field, &ctx.star_matrix()).unwrap();
        let n_id = Matrix::identity(n).scale(&field, field.from_integer(n as u64));
        ensure(prod == n_id, || format!("F F* != nI for n = {n}"))?;
    }

    let mut rng = rng(0xAC7);
    for _ in 0..200 {
        let code = random_code(&mut rng, 30);
        let f = code.field();
        let g = code.generator_matrix();
        ensure(g.mul(f, &code.check_matrix_t()).unwrap().is_zero(), || "G H^T != 0".into())?;
        ensure(
            g.mul(f, &code.right_inverse()).unwrap() == Matrix::identity(code.r()),
            || "G K != I".into(),
        )?;
    }

    let mut scaled = 0;
    while scaled < 100 {
        let code = random_code(&mut rng, 40);
        if code.t() == 0 {
            continue;
        }
        let f = code.field();
        let (_, c) = random_codeword(&mut rng, &code);
        let e = rng.gen_range(1..=code.t());
        let (w, _) = corrupt(&mut rng, f, &c, e);
        let s = codec::syndrome(&code, &w).unwrap();
        let x = codec::hankel_kernel(f, &s, code.t()).map_err(|e| e.to_string())?;
        let lambda = random_nonzero(&mut rng, f);
        let y: Vec<_> = x.iter().map(|&v| f.mul(v, lambda)).collect();
        ensure(
            codec::locate(&code, &x).unwrap() == codec::locate(&code, &y).unwrap(),
            || "locator zeros changed under scaling".into(),
        )?;
        scaled += 1;
    }

    let (mut successes, mut failures) = (0, 0);
    for trial in 0..10_000 {
        let code = random_code(&mut rng, 30);
        let t = code.t();
        let (_, c) = random_codeword(&mut rng, &code);
        let e = (t + rng.gen_range(1..=3)).min(code.n());
        let (w, _) = corrupt(&mut rng, code.field(), &c, e);
        match codec::decode(&code, &w) {
            Ok(out) => {
                let valid = codec::syndrome(&code, &out.codeword).unwrap().is_zero()
                    && hamming_distance(&out.codeword, &w) <= t;
                ensure(valid, || format!("fuzz trial {trial}: success without a valid codeword within t"))?;
                successes += 1;
            }
            Err(_) => failures += 1,
        }
    }
    Ok(format!(
        "F F* = nI, 200 codes G H^T = 0 and G K = I, 100 scalings, fuzz {successes} valid successes / {failures} failures"
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("golden demo", golden_demo, Duration::from_secs(1)),
        ("brute-force MDS distances", brute_force_distances, Duration::from_secs(120)),
        ("exhaustive decode equivalence", exhaustive_decode_equivalence, Duration::from_secs(300)),
        ("large-field roundtrip", large_field_roundtrip, Duration::from_secs(60)),
        ("field search", field_search, Duration::ZERO),
        ("planner tables", planner_tables, Duration::ZERO),
        ("property suites", property_suites, Duration::ZERO),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = !budget.is_zero() && elapsed > *budget;
        let limit = if budget.is_zero() {
            String::new()
        } else {
            format!(", budget {:.0?}", budget)
        };
        match (&outcome, over) {
            (Ok(detail), false) => println!("PASS {} {name}: {detail} ({elapsed:.2?}{limit})", i + 1),
            (Ok(detail), true) => {
                failed += 1;
                println!("FAIL {} {name}: over budget, {detail} ({elapsed:.2?}{limit})", i + 1);
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({elapsed:.2?}{limit})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
