//! Desk-scale verification of the classification statements: enumerate small
//! configurations, compute their invariants and record any violation as a
//! replayable witness.

use crate::geometry::{is_grid, on_single_fiber, FatPointConfig, ProductPoint, ProjCoord};
use crate::invariants::{
    alpha, alpha_star, grid_alpha_star, waldschmidt_bounds, Accel, Variant,
};
use crate::presets;
use crate::scalar::Scalar;
use num::bigint::BigInt;
use num::rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error("coordinate list is empty")]
    EmptyCoordinateList,
    #[error("duplicate coordinate in box")]
    DuplicateCoordinate,
    #[error("s range ({s_min}, {s_max}) exceeds box size {box_size}")]
    BadSizeRange {
        s_min: usize,
        s_max: usize,
        box_size: usize,
    },
}

/// Seeded subsampling of the enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sample {
    pub count: usize,
    pub seed: u64,
}

/// A coordinate box with a range of subset sizes to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub x_values: Vec<Scalar>,
    pub y_values: Vec<Scalar>,
    pub s_min: usize,
    pub s_max: usize,
    pub sample: Option<Sample>,
}

impl EnumSpec {
    /// Box on integer affine coordinates.
    pub fn integer_box(xs: &[i64], ys: &[i64], s_min: usize, s_max: usize) -> Self {
        EnumSpec {
            x_values: xs.iter().map(|&n| Scalar::from_integer(n)).collect(),
            y_values: ys.iter().map(|&n| Scalar::from_integer(n)).collect(),
            s_min,
            s_max,
            sample: None,
        }
    }

    pub fn with_sample(mut self, count: usize, seed: u64) -> Self {
        self.sample = Some(Sample { count, seed });
        self
    }

    fn validate(&self) -> Result<(), VerifierError> {
        if self.x_values.is_empty() || self.y_values.is_empty() {
            return Err(VerifierError::EmptyCoordinateList);
        }
        for list in [&self.x_values, &self.y_values] {
            let mut sorted = list.clone();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(VerifierError::DuplicateCoordinate);
            }
        }
        let box_size = self.x_values.len() * self.y_values.len();
        if self.s_max > box_size {
            return Err(VerifierError::BadSizeRange {
                s_min: self.s_min,
                s_max: self.s_max,
                box_size,
            });
        }
        Ok(())
    }

    fn box_points(&self) -> Vec<ProductPoint> {
        let mut pts: Vec<ProductPoint> = self
            .x_values
            .iter()
            .flat_map(|x| {
                self.y_values.iter().map(move |y| {
                    ProductPoint::new(
                        ProjCoord::new(Scalar::from_integer(1), x.clone()).unwrap(),
                        ProjCoord::new(Scalar::from_integer(1), y.clone()).unwrap(),
                    )
                })
            })
            .collect();
        pts.sort();
        pts
    }
}

/// All multiplicity-1 configurations on subsets of the box with sizes in the
/// range, in canonical order: size ascending, subsets lexicographic. With a
/// sample, a seeded pseudo-random subset of the same stream, still in
/// canonical order.
pub fn enumerate_configs(spec: &EnumSpec) -> Result<Vec<FatPointConfig>, VerifierError> {
    spec.validate()?;
    let pts = spec.box_points();
    let n = pts.len();
    if spec.s_min > spec.s_max {
        return Ok(Vec::new());
    }
    let counts: Vec<u64> = (spec.s_min..=spec.s_max).map(|s| binomial(n, s)).collect();
    let total: u64 = counts.iter().sum();

    let ranks: Vec<u64> = match spec.sample {
        Some(Sample { count, seed }) if (count as u64) < total => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen = std::collections::BTreeSet::new();
            while chosen.len() < count {
                chosen.insert(rand::Rng::gen_range(&mut rng, 0..total));
            }
            chosen.into_iter().collect()
        }
        _ => (0..total).collect(),
    };

    let mut configs = Vec::with_capacity(ranks.len());
    for rank in ranks {
        let mut rank = rank;
        let mut s = spec.s_min;
        for &c in &counts {
            if rank < c {
                break;
            }
            rank -= c;
            s += 1;
        }
        let subset = unrank_subset(n, s, rank);
        let chosen: Vec<ProductPoint> = subset.into_iter().map(|i| pts[i].clone()).collect();
        configs.push(FatPointConfig::reduced(chosen).expect("box points are distinct"));
    }
    Ok(configs)
}

// Lexicographic unranking of size-s subsets of {0..n-1}.
fn unrank_subset(n: usize, s: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(s);
    let mut next = 0usize;
    for remaining in (1..=s).rev() {
        loop {
            let with_next = binomial(n - next - 1, remaining - 1);
            if rank < with_next {
                out.push(next);
                next += 1;
                break;
            }
            rank -= with_next;
            next += 1;
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// A failed assertion, replayable from the recorded configuration and power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub config: String,
    pub m: u32,
    pub details: String,
}

/// Outcome of one check over a corpus of configurations.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub check_name: String,
    pub configs_tested: usize,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn config_display(z: &FatPointConfig) -> String {
    z.points()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_check<F>(name: &str, configs: &[FatPointConfig], per_config: F) -> VerifyReport
where
    F: Fn(&FatPointConfig) -> Vec<Violation> + Sync,
{
    let start = Instant::now();
    let violations: Vec<Violation> = configs
        .par_iter()
        .map(|z| per_config(z))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerifyReport {
        check_name: name.to_string(),
        configs_tested: configs.len(),
        violations,
        elapsed: start.elapsed(),
    }
}

fn star_sequence(z: &FatPointConfig, max_m: u32) -> Vec<usize> {
    (1..=max_m).map(|m| alpha_star(z, m)).collect()
}

/// Wherever alpha-star stagnates between consecutive symbolic powers, the
/// configuration must be a grid.
pub fn check_stagnation_implies_grid(spec: &EnumSpec, max_m: u32) -> Result<VerifyReport, VerifierError> {
    let configs = enumerate_configs(spec)?;
    Ok(run_check("stagnation-implies-grid", &configs, |z| {
        let seq = star_sequence(z, max_m);
        let mut out = Vec::new();
        for m in 1..max_m as usize {
            if seq[m - 1] == seq[m] && !is_grid(z).is_grid {
                out.push(Violation {
                    config: config_display(z),
                    m: m as u32,
                    details: format!(
                        "alpha-star stagnates at {} from m={} to m={} but the support is not a grid",
                        seq[m - 1],
                        m,
                        m + 1
                    ),
                });
            }
        }
        out
    }))
}

/// alpha-star can never take the same value at three consecutive powers.
pub fn check_no_double_stagnation(spec: &EnumSpec, max_m: u32) -> Result<VerifyReport, VerifierError> {
    let configs = enumerate_configs(spec)?;
    Ok(run_check("no-double-stagnation", &configs, |z| {
        let seq = star_sequence(z, max_m);
        let mut out = Vec::new();
        for m in 1..=max_m.saturating_sub(2) as usize {
            if seq[m - 1] == seq[m] && seq[m] == seq[m + 1] {
                out.push(Violation {
                    config: config_display(z),
                    m: m as u32,
                    details: format!("alpha-star equals {} at m, m+1 and m+2", seq[m - 1]),
                });
            }
        }
        out
    }))
}

/// Chudnovsky-type bound: alpha-star(I^(m))/m >= alpha-star(I)/2, exactly.
pub fn check_chudnovsky(spec: &EnumSpec, max_m: u32) -> Result<VerifyReport, VerifierError> {
    let configs = enumerate_configs(spec)?;
    Ok(run_check("chudnovsky-bound", &configs, |z| {
        let seq = star_sequence(z, max_m);
        let a1 = seq[0];
        let mut out = Vec::new();
        for m in 1..=max_m as usize {
            let lhs = BigRational::new(BigInt::from(seq[m - 1]), BigInt::from(m));
            let rhs = BigRational::new(BigInt::from(a1), BigInt::from(2));
            if lhs < rhs {
                out.push(Violation {
                    config: config_display(z),
                    m: m as u32,
                    details: format!("alpha-star(I^({m}))/{m} = {lhs} < {rhs} = alpha-star(I)/2"),
                });
            }
        }
        out
    }))
}

/// alpha-plus is strictly increasing, and a jump of exactly 1 forces all
/// points onto a single fiber.
pub fn check_alpha_plus_jump1(spec: &EnumSpec, max_m: u32) -> Result<VerifyReport, VerifierError> {
    let configs = enumerate_configs(spec)?;
    Ok(run_check("alpha-plus-jump-one", &configs, |z| {
        let seq: Vec<usize> = (1..=max_m).map(|m| alpha(z, Variant::Plus, m, Accel::default())).collect();
        let mut out = Vec::new();
        for m in 1..max_m as usize {
            if seq[m] <= seq[m - 1] {
                out.push(Violation {
                    config: config_display(z),
                    m: m as u32,
                    details: format!(
                        "alpha-plus not strictly increasing: {} then {}",
                        seq[m - 1],
                        seq[m]
                    ),
                });
            } else if seq[m] == seq[m - 1] + 1
                && on_single_fiber(z).expect("nonempty").is_none()
            {
                out.push(Violation {
                    config: config_display(z),
                    m: m as u32,
                    details: "alpha-plus jump of 1 but points are not on a single fiber".into(),
                });
            }
        }
        out
    }))
}

/// If alpha-star climbs by exactly 1 at each of the first five steps, the
/// points must lie on a divisor of bi-degree (1,1).
pub fn check_five_jumps(z: &FatPointConfig) -> VerifyReport {
    let start = Instant::now();
    let seq = star_sequence(z, 6);
    let hypothesis = (1..6).all(|m| seq[m] == seq[0] + m);
    let mut violations = Vec::new();
    if hypothesis && seq[0] != 1 {
        violations.push(Violation {
            config: config_display(z),
            m: 6,
            details: format!(
                "five unit jumps but alpha-star(I) = {} instead of 1",
                seq[0]
            ),
        });
    }
    VerifyReport {
        check_name: "five-unit-jumps".into(),
        configs_tested: 1,
        violations,
        elapsed: start.elapsed(),
    }
}

/// The grid recursion closed form agrees with the interpolation-matrix
/// computation on explicit grids.
pub fn check_grid_formula(a_max: u32, b_max: u32, max_m: u32) -> VerifyReport {
    let start = Instant::now();
    let cases: Vec<(u32, u32, u32)> = (1..=a_max)
        .flat_map(|a| (1..=b_max).flat_map(move |b| (1..=max_m).map(move |m| (a, b, m))))
        .collect();
    let violations: Vec<Violation> = cases
        .par_iter()
        .filter_map(|&(a, b, m)| {
            let z = presets::grid_config(a, b);
            let closed = grid_alpha_star(a, b, m).unwrap();
            let computed = alpha_star(&z, m) as u64;
            (closed != computed).then(|| Violation {
                config: format!("{a}x{b} grid"),
                m,
                details: format!("closed form {closed} != computed {computed}"),
            })
        })
        .collect();
    VerifyReport {
        check_name: "grid-closed-form".into(),
        configs_tested: (a_max * b_max) as usize,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Regressions against the worked examples: the four-point staircase table,
/// the six-point zigzag alpha-plus values and the single-point Waldschmidt
/// bounds.
pub fn check_regressions() -> VerifyReport {
    let start = Instant::now();
    let mut violations = Vec::new();

    let staircase = presets::staircase_four();
    for (m, want) in (1..=5).zip([2usize, 3, 4, 5, 6]) {
        let got = alpha_star(&staircase, m);
        if got != want {
            violations.push(Violation {
                config: config_display(&staircase),
                m,
                details: format!("alpha-star = {got}, expected {want}"),
            });
        }
    }

    let zigzag = presets::zigzag_six();
    for (m, want) in [(1u32, 4usize), (2, 6)] {
        let got = alpha(&zigzag, Variant::Plus, m, Accel::default());
        if got != want {
            violations.push(Violation {
                config: config_display(&zigzag),
                m,
                details: format!("alpha-plus = {got}, expected {want}"),
            });
        }
    }

    let point = FatPointConfig::reduced(vec![ProductPoint::affine(0, 0)]).unwrap();
    let star = waldschmidt_bounds(&point, Variant::Star, 2).unwrap();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    if star.upper != half || star.lower != Some(half.clone()) {
        violations.push(Violation {
            config: config_display(&point),
            m: 2,
            details: format!("single-point star bounds {:?}/{}, expected 1/2", star.lower, star.upper),
        });
    }
    let plus = waldschmidt_bounds(&point, Variant::Plus, 3).unwrap();
    if plus.upper != BigRational::from_integer(BigInt::from(1)) || plus.lower.is_some() {
        violations.push(Violation {
            config: config_display(&point),
            m: 3,
            details: format!("single-point plus bounds {:?}/{}, expected -/1", plus.lower, plus.upper),
        });
    }

    VerifyReport {
        check_name: "worked-example-regressions".into(),
        configs_tested: 3,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Run every check on the given corpus and aggregate the reports.
pub fn run_suite(spec: &EnumSpec, max_m: u32) -> Vec<VerifyReport> {
    let mut reports = Vec::new();
    let mut push = |r: Result<VerifyReport, VerifierError>, name: &str| match r {
        Ok(rep) => reports.push(rep),
        Err(e) => reports.push(VerifyReport {
            check_name: name.into(),
            configs_tested: 0,
            violations: vec![Violation {
                config: String::new(),
                m: 0,
                details: format!("check failed to run: {e}"),
            }],
            elapsed: Duration::ZERO,
        }),
    };
    push(check_stagnation_implies_grid(spec, max_m), "stagnation-implies-grid");
    push(check_no_double_stagnation(spec, max_m), "no-double-stagnation");
    push(check_chudnovsky(spec, max_m), "chudnovsky-bound");
    push(check_alpha_plus_jump1(spec, max_m), "alpha-plus-jump-one");
    reports.push(check_grid_formula(3, 3, max_m.max(4)));
    reports.push(check_five_jumps(&presets::staircase_four()));
    reports.push(check_regressions());
    reports
}
