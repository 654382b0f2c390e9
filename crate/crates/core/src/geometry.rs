//! Points of P1 x P1, fat-point configurations and fiber/grid predicates.
//!
//! Every projective coordinate pair is kept in the canonical form "first
//! nonzero entry equals 1", so point equality is componentwise and
//! configurations can be sorted deterministically.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("(0, 0) is not a projective point")]
    NotAProjectivePoint,
    #[error("points and multiplicities have different lengths ({points} vs {mults})")]
    LengthMismatch { points: usize, mults: usize },
    #[error("duplicate point at indices {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },
    #[error("configuration is empty")]
    EmptyConfig,
}

/// A point [u:v] of one P1 factor, canonical (first nonzero entry = 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjCoord {
    u: Scalar,
    v: Scalar,
}

impl ProjCoord {
    pub fn new(u: Scalar, v: Scalar) -> Result<Self, GeometryError> {
        if u.is_zero() && v.is_zero() {
            return Err(GeometryError::NotAProjectivePoint);
        }
        if !u.is_zero() {
            let inv = u.inv().expect("nonzero");
            Ok(ProjCoord {
                u: Scalar::one(inv.mode()),
                v: v.mul(&inv),
            })
        } else {
            Ok(ProjCoord {
                u,
                v: Scalar::one(v.mode()),
            })
        }
    }

    /// The affine point [1:a].
    pub fn affine(a: i64) -> Self {
        ProjCoord::new(Scalar::from_integer(1), Scalar::from_integer(a)).unwrap()
    }

    /// The point at infinity [0:1].
    pub fn infinity() -> Self {
        ProjCoord::new(Scalar::from_integer(0), Scalar::from_integer(1)).unwrap()
    }

    pub fn u(&self) -> &Scalar {
        &self.u
    }

    pub fn v(&self) -> &Scalar {
        &self.v
    }

    pub fn is_infinity(&self) -> bool {
        self.u.is_zero()
    }
}

impl fmt::Display for ProjCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.u, self.v)
    }
}

/// A point of P1 x P1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductPoint {
    pub x: ProjCoord,
    pub y: ProjCoord,
}

impl ProductPoint {
    pub fn new(x: ProjCoord, y: ProjCoord) -> Self {
        ProductPoint { x, y }
    }

    /// The point ([1:a], [1:b]).
    pub fn affine(a: i64, b: i64) -> Self {
        ProductPoint::new(ProjCoord::affine(a), ProjCoord::affine(b))
    }
}

impl fmt::Display for ProductPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Canonicalize a pair of raw homogeneous coordinate pairs into a point.
pub fn normalize_point(
    rawx: (Scalar, Scalar),
    rawy: (Scalar, Scalar),
) -> Result<ProductPoint, GeometryError> {
    Ok(ProductPoint::new(
        ProjCoord::new(rawx.0, rawx.1)?,
        ProjCoord::new(rawy.0, rawy.1)?,
    ))
}

/// Distinct points with positive multiplicities, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointConfig {
    points: Vec<ProductPoint>,
    mults: Vec<u32>,
}

impl FatPointConfig {
    pub fn empty() -> Self {
        FatPointConfig {
            points: Vec::new(),
            mults: Vec::new(),
        }
    }

    /// Simple (multiplicity 1) configuration on the given points.
    pub fn reduced(points: Vec<ProductPoint>) -> Result<Self, GeometryError> {
        let mults = vec![1; points.len()];
        make_config(points, mults)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProductPoint] {
        &self.points
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProductPoint, u32)> {
        self.points.iter().zip(self.mults.iter().copied())
    }

    /// Scale all multiplicities by m (the m-th symbolic power of the
    /// weighted scheme).
    pub fn scaled(&self, m: u32) -> FatPointConfig {
        if m == 0 {
            return FatPointConfig::empty();
        }
        FatPointConfig {
            points: self.points.clone(),
            mults: self.mults.iter().map(|&mi| mi * m).collect(),
        }
    }

    /// Number of vanishing conditions, sum of m_i (m_i + 1) / 2.
    pub fn condition_count(&self) -> usize {
        self.mults
            .iter()
            .map(|&m| (m as usize) * (m as usize + 1) / 2)
            .sum()
    }

    /// Distinct first-factor coordinates, in order.
    pub fn x_coords(&self) -> Vec<ProjCoord> {
        let set: BTreeSet<_> = self.points.iter().map(|p| p.x.clone()).collect();
        set.into_iter().collect()
    }

    /// Distinct second-factor coordinates, in order.
    pub fn y_coords(&self) -> Vec<ProjCoord> {
        let set: BTreeSet<_> = self.points.iter().map(|p| p.y.clone()).collect();
        set.into_iter().collect()
    }
}

/// Build a configuration: canonicalize, drop multiplicity-0 entries, reject
/// duplicates, sort lexicographically.
pub fn make_config(
    points: Vec<ProductPoint>,
    mults: Vec<u32>,
) -> Result<FatPointConfig, GeometryError> {
    if points.len() != mults.len() {
        return Err(GeometryError::LengthMismatch {
            points: points.len(),
            mults: mults.len(),
        });
    }
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(GeometryError::DuplicatePoint { first: i, second: j });
            }
        }
    }
    let mut pairs: Vec<(ProductPoint, u32)> = points
        .into_iter()
        .zip(mults)
        .filter(|&(_, m)| m > 0)
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    let (points, mults) = pairs.into_iter().unzip();
    Ok(FatPointConfig { points, mults })
}

/// Direction of a fiber of one of the two projections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberDirection {
    /// Bi-degree (1,0): constant first coordinate.
    Vertical,
    /// Bi-degree (0,1): constant second coordinate.
    Horizontal,
}

/// A fiber of a projection, a curve of bi-degree (1,0) or (0,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub direction: FiberDirection,
    pub base: ProjCoord,
}

impl Fiber {
    pub fn vertical(base: ProjCoord) -> Self {
        Fiber {
            direction: FiberDirection::Vertical,
            base,
        }
    }

    pub fn horizontal(base: ProjCoord) -> Self {
        Fiber {
            direction: FiberDirection::Horizontal,
            base,
        }
    }

    pub fn contains(&self, p: &ProductPoint) -> bool {
        match self.direction {
            FiberDirection::Vertical => p.x == self.base,
            FiberDirection::Horizontal => p.y == self.base,
        }
    }
}

/// Grid decomposition of a configuration.
#[derive(Debug, Clone)]
pub struct GridCheck {
    pub is_grid: bool,
    pub x_coords: Vec<ProjCoord>,
    pub y_coords: Vec<ProjCoord>,
    /// A product pair absent from the configuration, when it is not a grid.
    pub missing: Option<(ProjCoord, ProjCoord)>,
}

/// Decide whether the support of Z is a full product Z_V x Z_H.
pub fn is_grid(z: &FatPointConfig) -> GridCheck {
    let x_coords = z.x_coords();
    let y_coords = z.y_coords();
    let mut missing = None;
    'outer: for x in &x_coords {
        for y in &y_coords {
            if !z.points().iter().any(|p| &p.x == x && &p.y == y) {
                missing = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }
    GridCheck {
        is_grid: missing.is_none(),
        x_coords,
        y_coords,
        missing,
    }
}

/// A fiber containing all points of Z, if any. A single point lies on both;
/// the vertical one is returned.
pub fn on_single_fiber(z: &FatPointConfig) -> Result<Option<Fiber>, GeometryError> {
    let first = z.points().first().ok_or(GeometryError::EmptyConfig)?;
    if z.points().iter().all(|p| p.x == first.x) {
        return Ok(Some(Fiber::vertical(first.x.clone())));
    }
    if z.points().iter().all(|p| p.y == first.y) {
        return Ok(Some(Fiber::horizontal(first.y.clone())));
    }
    Ok(None)
}

/// 2x2 coordinate changes (A, B) moving P to ([1:0], [1:0]).
///
/// Canonical coordinates are either [1:c] or [0:1], so A is the shear
/// [[1,0],[-c,1]] or the swap matrix, and likewise for B.
pub fn chart_transform(p: &ProductPoint) -> (Matrix, Matrix) {
    (factor_transform(&p.x), factor_transform(&p.y))
}

fn factor_transform(c: &ProjCoord) -> Matrix {
    let mode = c.v().mode();
    if c.is_infinity() {
        Matrix::from_rows(vec![
            vec![Scalar::zero(mode), Scalar::one(mode)],
            vec![Scalar::one(mode), Scalar::zero(mode)],
        ])
        .unwrap()
    } else {
        Matrix::from_rows(vec![
            vec![Scalar::one(mode), Scalar::zero(mode)],
            vec![c.v().neg(), Scalar::one(mode)],
        ])
        .unwrap()
    }
}

/// Inverse of a factor transform: the substitution expressing the original
/// coordinates in terms of the chart coordinates.
pub fn factor_transform_inverse(c: &ProjCoord) -> Matrix {
    let mode = c.v().mode();
    if c.is_infinity() {
        // swap is its own inverse
        factor_transform(c)
    } else {
        Matrix::from_rows(vec![
            vec![Scalar::one(mode), Scalar::zero(mode)],
            vec![c.v().clone(), Scalar::one(mode)],
        ])
        .unwrap()
    }
}
