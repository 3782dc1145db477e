//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails. Arithmetic is exact, so every comparison is
//! equality.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unitform::cyclotomic::{cyclotomic_polynomial, CyclotomicRing};
use unitform::format::{format_matrix, parse_matrix};
use unitform::oracle::{brute_force_equivalent, enumerate_standard_forms};
use unitform::standard_form::{Condition, Location};
use unitform::{
    apply_col_transform, apply_row_transform, gram_weight_check, is_standard_form, legacy_standardize_traced,
    standardize, GramVerdict, GroupSpec, OracleBudget, OrderSpec,
};

use common::*;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let elapsed = start.elapsed();
    ensure!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    Ok(())
}

fn counterexample_regression() -> Outcome {
    let start = Instant::now();
    let order = example_order();
    let w = example_w();
    let (out, cert, trace) = legacy_standardize_traced(&w, &order).map_err(|e| e.to_string())?;
    ensure!(trace.w1 == w, "W(1) differs from W");
    ensure!(format_matrix(&trace.w2) == fixture_text("example_w2.t0"), "W(2) not byte-identical:\n{}", trace.w2);
    ensure!(trace.w3 == trace.w2, "W(3) differs from W(2)");
    ensure!(format_matrix(&trace.w4) == fixture_text("example_w4.t0"), "W(4) not byte-identical:\n{}", trace.w4);
    ensure!(out == trace.w4, "returned matrix is not W(4)");
    ensure!(cert.verify(&w, &out) == Ok(true), "legacy certificate invalid");
    let (ok, report) = is_standard_form(&order, &out);
    ensure!(!ok, "W(4) reported as standard");
    let s2 = report.first(Condition::S2).ok_or("no S2 violation")?;
    ensure!(
        matches!(s2.location, Location::Cell { col: 5, .. }),
        "S2 violation at {:?}, expected column 6",
        s2.location
    );
    within(Duration::from_secs(1), start)
}

fn standard_form_of_counterexample() -> Outcome {
    let start = Instant::now();
    let order = example_order();
    let w = example_w();
    let (s, cert) = standardize(&w, &order).map_err(|e| e.to_string())?;
    let (ok, report) = is_standard_form(&order, &s);
    ensure!(ok, "output not standard: {report:?}");
    ensure!(cert.verify(&w, &s) == Ok(true), "certificate invalid");
    within(Duration::from_secs(1), start)
}

fn unit_weighing_verification() -> Outcome {
    let w = example_w();
    let ring = CyclotomicRing::new(4).map_err(|e| e.to_string())?;
    ensure!(ring.modulus() == [1, 0, 1], "Φ_4 = {:?}", ring.modulus());
    let verdict = gram_weight_check(&w).map_err(|e| e.to_string())?;
    ensure!(verdict == GramVerdict::UnitWeighing { weight: 4 }, "W: {verdict:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..100 {
        let ma = random_monomial(&mut rng, 4, 6);
        let mb = random_monomial(&mut rng, 4, 6);
        let moved = apply_col_transform(&apply_row_transform(&ma, &w).unwrap(), &mb).unwrap();
        let v = gram_weight_check(&moved).map_err(|e| e.to_string())?;
        ensure!(v == GramVerdict::UnitWeighing { weight: 4 }, "trial {trial}: {v:?}");
    }
    Ok(())
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..1000 {
        let k = GROUP_ORDERS[rng.gen_range(0..GROUP_ORDERS.len())];
        let density = ZERO_DENSITIES[rng.gen_range(0..ZERO_DENSITIES.len())];
        let (m, n) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        let order = random_order(&mut rng, k);
        let w = random_matrix(&mut rng, k, m, n, density);
        let (s, cert) = standardize(&w, &order).map_err(|e| e.to_string())?;
        let (ok, report) = is_standard_form(&order, &s);
        ensure!(ok, "trial {trial}: not standard {report:?}\n{w}");
        ensure!(cert.verify(&w, &s) == Ok(true), "trial {trial}: certificate invalid");
        let (s2, cert2) = standardize(&w, &order).map_err(|e| e.to_string())?;
        ensure!(
            format_matrix(&s2) == format_matrix(&s) && cert2 == cert,
            "trial {trial}: nondeterministic"
        );
    }
    within(Duration::from_secs(30), start)
}

fn oracle_cross_check() -> Outcome {
    let start = Instant::now();
    let order = OrderSpec::default_for(2).unwrap();
    let budget = OracleBudget::default();
    let forms: Vec<_> = enumerate_standard_forms(2, 2, &order, &budget)
        .map_err(|e| e.to_string())?
        .collect();
    let family = all_matrices(2, 2, 2);
    ensure!(family.len() == 81, "family has {} members", family.len());
    for a in &family {
        let (s, _) = standardize(a, &order).map_err(|e| e.to_string())?;
        let found = brute_force_equivalent(a, &s, &budget).map_err(|e| e.to_string())?;
        let cert = found.ok_or_else(|| format!("no certificate found for\n{a}"))?;
        ensure!(cert.verify(a, &s) == Ok(true), "oracle certificate invalid");
        ensure!(forms.contains(&s), "output not among enumerated standard forms:\n{s}");
    }
    within(Duration::from_secs(60), start)
}

fn equivalence_closure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for trial in 0..200 {
        let k = GROUP_ORDERS[rng.gen_range(0..GROUP_ORDERS.len())];
        let density = ZERO_DENSITIES[rng.gen_range(0..ZERO_DENSITIES.len())];
        let (m, n) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        let order = random_order(&mut rng, k);
        let w = random_matrix(&mut rng, k, m, n, density);
        let ma = random_monomial(&mut rng, k, m);
        let mb = random_monomial(&mut rng, k, n);
        let moved = apply_col_transform(&apply_row_transform(&ma, &w).unwrap(), &mb).unwrap();
        let (s, cert) = standardize(&w, &order).map_err(|e| e.to_string())?;
        let composed = cert.transported(&ma, &mb).map_err(|e| e.to_string())?;
        ensure!(composed.verify(&moved, &s) == Ok(true), "trial {trial}: composed certificate invalid");
        let (s_moved, _) = standardize(&moved, &order).map_err(|e| e.to_string())?;
        ensure!(is_standard_form(&order, &s_moved).0, "trial {trial}: transformed input not standardized");
    }
    Ok(())
}

// Independent route to Φ_k: Φ_k = ∏_{d | k} (x^d − 1)^{μ(k/d)}.
fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by x^d − 1.
fn div_xd_minus_1(p: &[i64], d: usize) -> Vec<i64> {
    let deg = p.len() - 1;
    let mut rem = p.to_vec();
    let mut q = vec![0; deg - d + 1];
    for i in (0..q.len()).rev() {
        q[i] = rem[i + d];
        rem[i + d] = 0;
        rem[i] += q[i];
    }
    assert!(rem.iter().all(|&c| c == 0));
    q
}

fn x_pow_minus_1(d: usize) -> Vec<i64> {
    let mut p = vec![0; d + 1];
    p[0] = -1;
    p[d] = 1;
    p
}

fn mobius_cyclotomic(k: u32) -> Vec<i64> {
    let divs: Vec<u32> = (1..=k).filter(|d| k.is_multiple_of(*d)).collect();
    let mut num = vec![1];
    for &d in &divs {
        if mobius(k / d) == 1 {
            num = mul(&num, &x_pow_minus_1(d as usize));
        }
    }
    for &d in &divs {
        if mobius(k / d) == -1 {
            num = div_xd_minus_1(&num, d as usize);
        }
    }
    num
}

fn cyclotomic_unit_tests() -> Outcome {
    let frozen: [(u32, &[i64]); 12] = [
        (1, &[-1, 1]),
        (2, &[1, 1]),
        (3, &[1, 1, 1]),
        (4, &[1, 0, 1]),
        (5, &[1, 1, 1, 1, 1]),
        (6, &[1, -1, 1]),
        (7, &[1, 1, 1, 1, 1, 1, 1]),
        (8, &[1, 0, 0, 0, 1]),
        (9, &[1, 0, 0, 1, 0, 0, 1]),
        (10, &[1, -1, 1, -1, 1]),
        (11, &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
        (12, &[1, 0, -1, 0, 1]),
    ];
    for (k, expected) in frozen {
        let phi = cyclotomic_polynomial(k).map_err(|e| e.to_string())?;
        ensure!(phi == expected, "Φ_{k} = {phi:?}, expected {expected:?}");
        ensure!(mobius_cyclotomic(k) == expected, "Möbius oracle disagrees at k = {k}");
    }
    for k in 1..=24u32 {
        let mut product = vec![1];
        for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
            product = mul(&product, &cyclotomic_polynomial(d).map_err(|e| e.to_string())?);
        }
        ensure!(product == x_pow_minus_1(k as usize), "∏ Φ_d ≠ x^{k} − 1");
    }
    for k in 1..=12 {
        let g = GroupSpec::new(k).unwrap();
        let ring = CyclotomicRing::new(k).unwrap();
        for a in g.elements().filter(|e| !e.is_zero()) {
            let p = ring.mul(&ring.embed(a).unwrap(), &ring.embed(g.conj(a)).unwrap()).unwrap();
            ensure!(p == ring.one(), "k = {k}: embed({a}) · embed(conj) = {p}");
        }
    }
    Ok(())
}

fn format_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..500 {
        let k = rng.gen_range(1..=12);
        let density = ZERO_DENSITIES[rng.gen_range(0..ZERO_DENSITIES.len())];
        let (m, n) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        let w = random_matrix(&mut rng, k, m, n, density);
        let parsed = parse_matrix(&format_matrix(&w)).map_err(|e| e.to_string())?;
        ensure!(parsed == w, "trial {trial}: round trip changed the matrix");
    }
    ensure!(fixture("example_w.t0") == example_w(), "example_w.t0 differs from W");
    ensure!(fixture("example_w2.t0") == example_w2(), "example_w2.t0 differs from W(2)");
    ensure!(fixture("example_w4.t0") == example_w4(), "example_w4.t0 differs from W(4)");
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 counterexample regression", counterexample_regression),
        ("2 standardize on the counterexample", standard_form_of_counterexample),
        ("3 unit-weighing verification", unit_weighing_verification),
        ("4 property suite (1000 matrices)", property_suite),
        ("5 oracle cross-check (81 matrices)", oracle_cross_check),
        ("6 equivalence closure (200 triples)", equivalence_closure),
        ("7 cyclotomic unit tests", cyclotomic_unit_tests),
        ("8 format round trip", format_round_trip),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS  criterion {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
