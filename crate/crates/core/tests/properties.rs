//! Property tests for the exact linear algebra and geometry layers.

use fatpoints_core::geometry::{normalize_point, ProductPoint, ProjCoord};
use fatpoints_core::linsys::{divide_by_fiber, BiDegree, BiForm};
use fatpoints_core::matrix::Matrix;
use fatpoints_core::{Fiber, Scalar};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::from_fraction(n, d))
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rational(), r * c)
            .prop_map(move |entries| Matrix::new(r, c, entries).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_equals_rank_of_transpose(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_kernel_dimension_is_cols(m in small_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            for e in m.apply(v) {
                prop_assert!(e.is_zero());
            }
        }
    }

    #[test]
    fn modular_rank_never_exceeds_rational_rank(m in small_matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7, 1_000_003])) {
        if let Ok(rp) = m.rank_modp(p) {
            prop_assert!(rp <= m.rank());
        }
    }

    #[test]
    fn normalize_point_is_idempotent(
        a in small_rational(), b in small_rational(),
        c in small_rational(), d in small_rational(),
    ) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        prop_assume!(!(c.is_zero() && d.is_zero()));
        let p = normalize_point((a, b), (c, d)).unwrap();
        let again = normalize_point(
            (p.x.u().clone(), p.x.v().clone()),
            (p.y.u().clone(), p.y.v().clone()),
        )
        .unwrap();
        prop_assert_eq!(p, again);
    }

    #[test]
    fn chart_transform_sends_point_to_origin(
        xv in small_rational(), yv in small_rational(), at_inf in any::<bool>(),
    ) {
        let x = if at_inf {
            ProjCoord::infinity()
        } else {
            ProjCoord::new(Scalar::from_integer(1), xv).unwrap()
        };
        let y = ProjCoord::new(Scalar::from_integer(1), yv).unwrap();
        let p = ProductPoint::new(x, y);
        let (a, b) = fatpoints_core::geometry::chart_transform(&p);
        let ax = a.apply(&[p.x.u().clone(), p.x.v().clone()]);
        let by = b.apply(&[p.y.u().clone(), p.y.v().clone()]);
        let img = normalize_point((ax[0].clone(), ax[1].clone()), (by[0].clone(), by[1].clone())).unwrap();
        prop_assert_eq!(img, ProductPoint::affine(0, 0));
    }

    #[test]
    fn fiber_division_inverts_multiplication(
        coeffs in proptest::collection::vec(small_rational(), 6),
        base in small_rational(),
        vertical in any::<bool>(),
    ) {
        prop_assume!(coeffs.iter().any(|c| !c.is_zero()));
        let g = BiForm::new(BiDegree::new(1, 2), coeffs).unwrap();
        let fiber = if vertical {
            Fiber::vertical(ProjCoord::new(Scalar::from_integer(1), base).unwrap())
        } else {
            Fiber::horizontal(ProjCoord::new(Scalar::from_integer(1), base).unwrap())
        };
        let f = g.mul(&BiForm::fiber_form(&fiber));
        let q = divide_by_fiber(&f, &fiber).expect("constructed to divide");
        prop_assert_eq!(q, g);
    }
}
