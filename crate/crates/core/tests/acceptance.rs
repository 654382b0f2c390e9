//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use fatpoints_core::geometry::{make_config, FatPointConfig, ProductPoint};
use fatpoints_core::invariants::{
    alpha, alpha_search, alpha_star, grid_minus_point_alpha, grid_sequence, waldschmidt_bounds,
    Accel, Variant,
};
use fatpoints_core::linsys::{conditions_matrix, h0, mult_at, witness_form, BiDegree};
use fatpoints_core::matrix::Matrix;
use fatpoints_core::presets;
use fatpoints_core::verifier::{
    check_alpha_plus_jump1, check_chudnovsky, check_grid_formula, check_no_double_stagnation,
    check_stagnation_implies_grid, EnumSpec,
};
use fatpoints_core::Scalar;
use num::bigint::BigInt;
use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn report(name: &str, ok: bool, detail: &str) {
    println!(
        "acceptance {}: {} {}",
        name,
        if ok { "PASS" } else { "FAIL" },
        detail
    );
    assert!(ok, "{name}: {detail}");
}

#[test]
fn criterion_01_staircase_alpha_star_table() {
    let start = Instant::now();
    let z = presets::staircase_four();
    let got: Vec<usize> = (1..=5).map(|m| alpha_star(&z, m)).collect();
    let elapsed = start.elapsed();
    let ok = got == vec![2, 3, 4, 5, 6] && elapsed.as_secs() < 10;
    report(
        "01 staircase alpha-star table",
        ok,
        &format!("got {got:?} in {elapsed:?} (want [2,3,4,5,6] in < 10s)"),
    );
}

#[test]
fn criterion_02_zigzag_alpha_plus() {
    let start = Instant::now();
    let z = presets::zigzag_six();
    let a1 = alpha(&z, Variant::Plus, 1, Accel::default());
    let a2 = alpha(&z, Variant::Plus, 2, Accel::default());
    let elapsed = start.elapsed();
    let ok = (a1, a2) == (4, 6) && elapsed.as_secs() < 10;
    report(
        "02 zigzag alpha-plus",
        ok,
        &format!("got ({a1}, {a2}) in {elapsed:?} (want (4, 6) in < 10s)"),
    );
}

#[test]
fn criterion_03_grid_closed_form_oracle() {
    let start = Instant::now();
    let rep = check_grid_formula(4, 4, 8);
    let elapsed = start.elapsed();
    let ok = rep.passed() && elapsed.as_secs() < 300;
    report(
        "03 grid closed form vs linear algebra",
        ok,
        &format!(
            "{} mismatches over a,b<=4, m<=8 in {elapsed:?} (< 5 min)",
            rep.violations.len()
        ),
    );
}

#[test]
fn criterion_04_single_point_waldschmidt() {
    let z = FatPointConfig::reduced(vec![ProductPoint::affine(0, 0)]).unwrap();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let one = BigRational::from_integer(BigInt::from(1));
    let star = waldschmidt_bounds(&z, Variant::Star, 2).unwrap();
    let plus = waldschmidt_bounds(&z, Variant::Plus, 3).unwrap();
    let ok = star.lower == Some(half.clone())
        && star.upper == half
        && plus.upper == one
        && plus.lower.is_none();
    report(
        "04 single-point Waldschmidt bounds",
        ok,
        &format!(
            "star [{:?}, {}], plus [{:?}, {}]",
            star.lower, star.upper, plus.lower, plus.upper
        ),
    );
}

#[test]
fn criterion_05_grid_minus_point_closed_form() {
    let start = Instant::now();
    let z = presets::grid_minus_point_config(5);
    let got: Vec<u64> = (1..=4).map(|m| alpha_star(&z, m) as u64).collect();
    let want: Vec<u64> = (1..=4)
        .map(|m| grid_minus_point_alpha(5, m).unwrap())
        .collect();
    let elapsed = start.elapsed();
    let ok = got == want && got == vec![4, 5, 9, 10] && elapsed.as_secs() < 60;
    report(
        "05 5x5-grid minus a point",
        ok,
        &format!("got {got:?} in {elapsed:?} (want [4,5,9,10] in < 60s)"),
    );
}

fn sweep_specs() -> (EnumSpec, EnumSpec) {
    let exhaustive = EnumSpec::integer_box(&[0, 1, 2], &[0, 1, 2], 1, 4);
    let sampled = EnumSpec::integer_box(&[0, 1, 2], &[0, 1, 2], 5, 6).with_sample(200, 42);
    (exhaustive, sampled)
}

#[test]
fn criterion_06_stagnation_implies_grid_sweep() {
    let start = Instant::now();
    let (exhaustive, sampled) = sweep_specs();
    let r1 = check_stagnation_implies_grid(&exhaustive, 2).unwrap();
    let r2 = check_stagnation_implies_grid(&sampled, 2).unwrap();
    let elapsed = start.elapsed();
    let ok = r1.passed() && r2.passed() && elapsed.as_secs() < 600;
    report(
        "06 stagnation implies grid",
        ok,
        &format!(
            "{} + {} configs, {} violations in {elapsed:?} (< 10 min)",
            r1.configs_tested,
            r2.configs_tested,
            r1.violations.len() + r2.violations.len()
        ),
    );
}

#[test]
fn criterion_07_no_double_stagnation_and_chudnovsky() {
    let (exhaustive, sampled) = sweep_specs();
    let mut violations = 0;
    for spec in [&exhaustive, &sampled] {
        violations += check_no_double_stagnation(spec, 3).unwrap().violations.len();
        violations += check_chudnovsky(spec, 3).unwrap().violations.len();
    }
    report(
        "07 no double stagnation + Chudnovsky bound",
        violations == 0,
        &format!("{violations} violations over both corpora, m <= 3"),
    );
}

#[test]
fn criterion_08_alpha_plus_monotone_and_jump1_fiber() {
    let (exhaustive, sampled) = sweep_specs();
    let mut violations = 0;
    for spec in [&exhaustive, &sampled] {
        violations += check_alpha_plus_jump1(spec, 3).unwrap().violations.len();
    }
    report(
        "08 alpha-plus strict growth and jump-1 fibers",
        violations == 0,
        &format!("{violations} violations over both corpora, m <= 3"),
    );
}

#[test]
fn criterion_09_grid_sequence_properties() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for a in 1..=6u32 {
        for b in 1..=6u32 {
            for m in 0..=50u32 {
                let s = grid_sequence(a, b, m).unwrap();
                // bound a_m < b_m + b + 1
                if s.a_m >= s.b_m + b as u64 + 1 {
                    ok = false;
                    detail = format!("bound fails at a={a} b={b} m={m}");
                }
            }
            // periodicity with period a+b and shift (ab, ab)
            for m in 0..=20u32 {
                let s = grid_sequence(a, b, m).unwrap();
                let t = grid_sequence(a, b, m + a + b).unwrap();
                let ab = (a * b) as u64;
                if (t.a_m, t.b_m) != (s.a_m + ab, s.b_m + ab) {
                    ok = false;
                    detail = format!("periodicity fails at a={a} b={b} m={m}");
                }
            }
            // one full period of jumps contains a 0 and a min(a,b)
            let value = |m: u32| {
                let s = grid_sequence(a, b, m).unwrap();
                s.a_m.max(s.b_m)
            };
            let jumps: Vec<u64> = (1..=a + b).map(|m| value(m) - value(m - 1)).collect();
            if !jumps.contains(&0) || !jumps.contains(&(a.min(b) as u64)) {
                ok = false;
                detail = format!("jump spread fails at a={a} b={b}: {jumps:?}");
            }
        }
    }
    let elapsed = start.elapsed();
    ok = ok && elapsed.as_secs() < 1;
    report(
        "09 grid recursion bound, periodicity, jump spread",
        ok,
        &format!("a,b <= 6, m <= 50 in {elapsed:?} (< 1s) {detail}"),
    );
}

// ---- criterion 10: randomized invariant suites, fixed seeds ----

const INSTANCES: usize = 500;

fn random_config(rng: &mut ChaCha8Rng, max_s: usize, max_mult: u32) -> FatPointConfig {
    loop {
        let s = rng.gen_range(1..=max_s);
        let mut pts = Vec::new();
        while pts.len() < s {
            let p = ProductPoint::affine(rng.gen_range(0..5), rng.gen_range(0..5));
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let mults = (0..s).map(|_| rng.gen_range(1..=max_mult)).collect();
        if let Ok(cfg) = make_config(pts, mults) {
            return cfg;
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix {
    let r = rng.gen_range(1..=5);
    let c = rng.gen_range(1..=5);
    let entries = (0..r * c)
        .map(|_| Scalar::from_fraction(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
        .collect();
    Matrix::new(r, c, entries).unwrap()
}

#[test]
fn criterion_10a_h0_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut violations = 0;
    for _ in 0..INSTANCES {
        let z = random_config(&mut rng, 3, 2);
        let d = BiDegree::new(rng.gen_range(0..=3), rng.gen_range(0..=3));
        let base = h0(&z, d);
        // raising the degree never decreases h0
        if h0(&z, BiDegree::new(d.d1 + 1, d.d2)) < base
            || h0(&z, BiDegree::new(d.d1, d.d2 + 1)) < base
        {
            violations += 1;
            continue;
        }
        // adding a point never increases h0
        let mut pts: Vec<ProductPoint> = z.points().to_vec();
        let mut mults: Vec<u32> = z.mults().to_vec();
        let mut extra = ProductPoint::affine(5, 5);
        let mut salt = 0;
        while pts.contains(&extra) {
            salt += 1;
            extra = ProductPoint::affine(5 + salt, 5);
        }
        pts.push(extra);
        mults.push(1);
        let bigger = make_config(pts, mults).unwrap();
        if h0(&bigger, d) > base {
            violations += 1;
            continue;
        }
        // raising a multiplicity never increases h0
        let idx = rng.gen_range(0..z.len());
        let mut mults: Vec<u32> = z.mults().to_vec();
        mults[idx] += 1;
        let fatter = make_config(z.points().to_vec(), mults).unwrap();
        if h0(&fatter, d) > base {
            violations += 1;
        }
    }
    report(
        "10a h0 monotonicity",
        violations == 0,
        &format!("{violations} violations over {INSTANCES} instances"),
    );
}

#[test]
fn criterion_10b_expected_dimension_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let mut violations = 0;
    for _ in 0..INSTANCES {
        let z = random_config(&mut rng, 4, 3);
        let d = BiDegree::new(rng.gen_range(0..=4), rng.gen_range(0..=4));
        let expected = d.monomials() as i64 - z.condition_count() as i64;
        if (h0(&z, d) as i64) < expected {
            violations += 1;
        }
    }
    report(
        "10b expected-dimension lower bound",
        violations == 0,
        &format!("{violations} violations over {INSTANCES} instances"),
    );
}

#[test]
fn criterion_10c_witness_multiplicities() {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let mut violations = 0;
    for _ in 0..INSTANCES {
        let z = random_config(&mut rng, 3, 2);
        let variant = if rng.gen_bool(0.5) {
            Variant::Star
        } else {
            Variant::Plus
        };
        let (_, at) = alpha_search(&z, variant, Accel::default());
        let w = witness_form(&z, at).expect("h0 > 0 at the initial degree");
        for (p, m) in z.iter() {
            if mult_at(&w, p) < m as usize {
                violations += 1;
            }
        }
    }
    report(
        "10c witness multiplicities at least prescribed",
        violations == 0,
        &format!("{violations} violations over {INSTANCES} instances"),
    );
}

#[test]
fn criterion_10d_kernel_exactness() {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let mut violations = 0;
    for _ in 0..INSTANCES {
        let m = random_matrix(&mut rng);
        let kernel = m.kernel_basis();
        if m.rank() + kernel.len() != m.cols() {
            violations += 1;
            continue;
        }
        for v in &kernel {
            if m.apply(v).iter().any(|e| !e.is_zero()) {
                violations += 1;
            }
        }
    }
    report(
        "10d kernel exactness",
        violations == 0,
        &format!("{violations} violations over {INSTANCES} instances"),
    );
}

#[test]
fn criterion_10e_alpha_subadditivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut violations = 0;
    for _ in 0..INSTANCES {
        let z = random_config(&mut rng, 3, 1);
        let m = rng.gen_range(1..=2u32);
        let k = rng.gen_range(1..=2u32);
        for variant in [Variant::Star, Variant::Plus] {
            let am = alpha(&z, variant, m, Accel::default());
            let ak = alpha(&z, variant, k, Accel::default());
            let amk = alpha(&z, variant, m + k, Accel::default());
            if amk > am + ak {
                violations += 1;
            }
        }
    }
    report(
        "10e alpha subadditivity",
        violations == 0,
        &format!("{violations} violations over {INSTANCES} instances"),
    );
}

#[test]
fn criterion_10f_modular_rank_bounded_by_rational() {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    let primes = [2u64, 3, 5, 7, 1_000_003];
    let mut violations = 0;
    let mut tested = 0;
    for _ in 0..INSTANCES {
        let m = random_matrix(&mut rng);
        let p = primes[rng.gen_range(0..primes.len())];
        match m.rank_modp(p) {
            Ok(rp) => {
                tested += 1;
                if rp > m.rank() {
                    violations += 1;
                }
            }
            // p divides a denominator; skip, the reduction is undefined
            Err(_) => {}
        }
    }
    report(
        "10f modular rank <= rational rank",
        violations == 0 && tested > INSTANCES / 2,
        &format!("{violations} violations over {tested} reducible instances"),
    );
}

// Not a numbered criterion: the conditions matrix shape contract used by
// several of the sweeps above.
#[test]
fn conditions_matrix_shape() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let z = random_config(&mut rng, 3, 3);
        let d = BiDegree::new(rng.gen_range(0..=3), rng.gen_range(0..=3));
        let cm = conditions_matrix(&z, d);
        assert_eq!(cm.matrix.rows(), z.condition_count());
        assert_eq!(cm.matrix.cols(), d.monomials());
        assert_eq!(cm.row_labels.len(), cm.matrix.rows());
        assert_eq!(cm.col_labels.len(), cm.matrix.cols());
    }
}
