//! Standard point configurations used by tests, the verifier and the CLI.

use crate::geometry::{FatPointConfig, ProductPoint, ProjCoord};

/// The full a x b grid on affine coordinates {0..a-1} x {0..b-1}.
pub fn grid_config(a: u32, b: u32) -> FatPointConfig {
    let pts = (0..a as i64)
        .flat_map(|x| (0..b as i64).map(move |y| ProductPoint::affine(x, y)))
        .collect();
    FatPointConfig::reduced(pts).expect("grid points are distinct")
}

/// The a x a grid minus its last point (a-1, a-1).
pub fn grid_minus_point_config(a: u32) -> FatPointConfig {
    let last = a as i64 - 1;
    let pts = (0..a as i64)
        .flat_map(|x| (0..a as i64).map(move |y| ProductPoint::affine(x, y)))
        .filter(|p| *p != ProductPoint::affine(last, last))
        .collect();
    FatPointConfig::reduced(pts).expect("grid points are distinct")
}

/// Four points with one at infinity: ([1:0],[1:0]), ([1:0],[1:1]),
/// ([1:1],[1:0]), ([0:1],[1:1]). Its alpha-star sequence jumps by 1 at
/// every step from 2 onwards.
pub fn staircase_four() -> FatPointConfig {
    FatPointConfig::reduced(vec![
        ProductPoint::affine(0, 0),
        ProductPoint::affine(0, 1),
        ProductPoint::affine(1, 0),
        ProductPoint::new(ProjCoord::infinity(), ProjCoord::affine(1)),
    ])
    .expect("points are distinct")
}

/// Six affine points (0,0), (1,1), (1,2), (2,2), (3,0), (3,3) whose
/// alpha-plus values are 4 at m = 1 and 6 at m = 2.
pub fn zigzag_six() -> FatPointConfig {
    FatPointConfig::reduced(vec![
        ProductPoint::affine(0, 0),
        ProductPoint::affine(1, 1),
        ProductPoint::affine(1, 2),
        ProductPoint::affine(2, 2),
        ProductPoint::affine(3, 0),
        ProductPoint::affine(3, 3),
    ])
    .expect("points are distinct")
}
