//! Initial-degree invariants of symbolic powers: alpha-star and alpha-plus,
//! jump vectors, Waldschmidt bounds, the grid recursion and grid recovery.

use crate::geometry::FatPointConfig;
use crate::linsys::{h0, h0_modp, BiDegree};
use crate::scalar::DEFAULT_PRIME;
use num::bigint::BigInt;
use num::rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("degenerate grid: a and b must both be at least 1")]
    DegenerateGrid,
    #[error("jump vector too short: no entry smaller than the first jump")]
    JumpVectorTooShort,
    #[error("grid recovery needs a star-variant jump vector")]
    WrongVariant,
    #[error("closed form requires a >= 5, got {a}")]
    GridTooSmall { a: u32 },
    #[error("configuration is empty")]
    EmptyConfig,
}

/// Which initial degree: diagonal (star) or total (plus).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Least k with a section of bi-degree (k, k).
    Star,
    /// Least k1 + k2 with a section of bi-degree (k1, k2).
    Plus,
}

/// How degree scans are run. Modular scanning only pre-filters: a zero
/// modular h0 certifies a zero rational h0, while a positive one is always
/// confirmed by a rational rank before the degree is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accel {
    Rational,
    Modular(u64),
}

impl Default for Accel {
    fn default() -> Self {
        Accel::Modular(DEFAULT_PRIME)
    }
}

fn h0_positive(z: &FatPointConfig, d: BiDegree, accel: Accel) -> bool {
    if let Accel::Modular(p) = accel {
        match h0_modp(z, d, p) {
            Ok(0) => return false,
            Ok(_) => {}
            // unlucky prime for these coordinates; fall through to rational
            Err(_) => {}
        }
    }
    h0(z, d) > 0
}

// Degree of a union of fibers through all points, one fiber per distinct
// coordinate with the largest multiplicity on it. Guarantees the scans stop.
fn fiber_union_bound(z: &FatPointConfig) -> usize {
    let bound_along = |coord_of: &dyn Fn(&crate::geometry::ProductPoint) -> &crate::geometry::ProjCoord| {
        let mut total = 0usize;
        for c in z
            .points()
            .iter()
            .map(|p| coord_of(p))
            .collect::<std::collections::BTreeSet<_>>()
        {
            let max_m = z
                .iter()
                .filter(|(p, _)| coord_of(p) == c)
                .map(|(_, m)| m)
                .max()
                .unwrap_or(0);
            total += max_m as usize;
        }
        total
    };
    let vertical = bound_along(&|p| &p.x);
    let horizontal = bound_along(&|p| &p.y);
    vertical.min(horizontal)
}

/// Initial degree of the weighted scheme held in the configuration, together
/// with the first bi-degree realizing it.
pub fn alpha_search(
    z: &FatPointConfig,
    variant: Variant,
    accel: Accel,
) -> (usize, BiDegree) {
    if z.is_empty() {
        return (0, BiDegree::new(0, 0));
    }
    let bound = fiber_union_bound(z);
    match variant {
        Variant::Star => {
            for k in 0..=bound {
                if h0_positive(z, BiDegree::new(k, k), accel) {
                    return (k, BiDegree::new(k, k));
                }
            }
            unreachable!("fiber-union bound guarantees a section by bi-degree ({bound},{bound})")
        }
        Variant::Plus => {
            for d in 0..=2 * bound {
                for k in 0..=d {
                    let bd = BiDegree::new(k, d - k);
                    if h0_positive(z, bd, accel) {
                        return (d, bd);
                    }
                }
            }
            unreachable!("fiber-union bound guarantees a section by total degree {}", 2 * bound)
        }
    }
}

/// alpha of the m-th symbolic power of the ideal of Z (uniform fattening of
/// the stored multiplicities).
pub fn alpha(z: &FatPointConfig, variant: Variant, m: u32, accel: Accel) -> usize {
    alpha_search(&z.scaled(m), variant, accel).0
}

/// alpha-star of I^(m), modular scan with rational confirmation.
pub fn alpha_star(z: &FatPointConfig, m: u32) -> usize {
    alpha(z, Variant::Star, m, Accel::default())
}

/// alpha-plus of I^(m), modular scan with rational confirmation.
pub fn alpha_plus(z: &FatPointConfig, m: u32) -> usize {
    alpha(z, Variant::Plus, m, Accel::default())
}

/// alpha on the stored (possibly non-uniform) multiplicity vector.
pub fn alpha_weighted(z: &FatPointConfig, variant: Variant) -> usize {
    alpha_search(z, variant, Accel::default()).0
}

/// Increments of alpha along symbolic powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpVector {
    pub variant: Variant,
    /// values[m-1] = alpha(I^(m)) - alpha(I^(m-1)), with alpha(I^(0)) = 0.
    pub values: Vec<usize>,
}

pub fn jump_vector(z: &FatPointConfig, max_m: u32, variant: Variant) -> JumpVector {
    assert!(max_m >= 1);
    let mut values = Vec::with_capacity(max_m as usize);
    let mut prev = 0usize;
    for m in 1..=max_m {
        let a = alpha(z, variant, m, Accel::default());
        values.push(a - prev);
        prev = a;
    }
    JumpVector { variant, values }
}

/// One step of the grid recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSequenceState {
    pub a_m: u64,
    pub b_m: u64,
    pub m: u32,
}

/// The exact recursion for an (a,b)-grid: starting from (0,0), each step
/// adds a to the first component when a_m + a <= b_m + b, otherwise b to
/// the second. Ties take the first branch.
pub fn grid_sequence(a: u32, b: u32, m: u32) -> Result<GridSequenceState, InvariantError> {
    if a == 0 || b == 0 {
        return Err(InvariantError::DegenerateGrid);
    }
    let (a, b) = (a as u64, b as u64);
    let (mut am, mut bm) = (0u64, 0u64);
    for _ in 0..m {
        if am + a <= bm + b {
            am += a;
        } else {
            bm += b;
        }
    }
    Ok(GridSequenceState { a_m: am, b_m: bm, m })
}

/// Closed-form alpha-star of the m-th symbolic power for an (a,b)-grid:
/// max(a_m, b_m).
pub fn grid_alpha_star(a: u32, b: u32, m: u32) -> Result<u64, InvariantError> {
    let s = grid_sequence(a, b, m)?;
    Ok(s.a_m.max(s.b_m))
}

/// Recover (a, b) of a grid from its star jump vector: a is the first jump,
/// and b is the partial sum up to the first jump smaller than a.
pub fn recover_grid(j: &JumpVector) -> Result<(usize, usize), InvariantError> {
    if j.variant != Variant::Star {
        return Err(InvariantError::WrongVariant);
    }
    let a = *j.values.first().ok_or(InvariantError::JumpVectorTooShort)?;
    let r = j
        .values
        .iter()
        .position(|&f| f < a)
        .ok_or(InvariantError::JumpVectorTooShort)?;
    let b = j.values[..=r].iter().sum();
    Ok((a, b))
}

/// Closed form for an (a,a)-grid minus one point, valid for a >= 5:
/// alpha-star of I^(2k-1) is k a - 1 and of I^(2k) is k a.
pub fn grid_minus_point_alpha(a: u32, m: u32) -> Result<u64, InvariantError> {
    if a < 5 {
        return Err(InvariantError::GridTooSmall { a });
    }
    let k = (m as u64 + 1) / 2;
    if m % 2 == 1 {
        Ok(k * a as u64 - 1)
    } else {
        Ok(k * a as u64)
    }
}

/// Exact bounds on the Waldschmidt constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaldschmidtBounds {
    pub variant: Variant,
    /// Chudnovsky-type lower bound alpha-star(I)/2; absent for the plus
    /// variant, where no such bound is available.
    pub lower: Option<BigRational>,
    /// min over m <= m_used of alpha(I^(m))/m; valid since the constant is
    /// an infimum of exactly these quotients.
    pub upper: BigRational,
    pub m_used: u32,
}

pub fn waldschmidt_bounds(
    z: &FatPointConfig,
    variant: Variant,
    max_m: u32,
) -> Result<WaldschmidtBounds, InvariantError> {
    if z.is_empty() {
        return Err(InvariantError::EmptyConfig);
    }
    assert!(max_m >= 1);
    let ratio = |a: usize, m: u32| BigRational::new(BigInt::from(a), BigInt::from(m));
    let alpha1 = alpha(z, variant, 1, Accel::default());
    let mut upper = ratio(alpha1, 1);
    for m in 2..=max_m {
        let q = ratio(alpha(z, variant, m, Accel::default()), m);
        if q < upper {
            upper = q;
        }
    }
    let lower = match variant {
        Variant::Star => Some(BigRational::new(BigInt::from(alpha1), BigInt::from(2))),
        Variant::Plus => None,
    };
    Ok(WaldschmidtBounds {
        variant,
        lower,
        upper,
        m_used: max_m,
    })
}
