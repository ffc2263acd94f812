use curvext::cohomology::{
    self, h0, h0_hyperelliptic, h0_k_minus_trigonal, h0_points_on_quartic, h0_trigonal, h1,
    h1_hyperelliptic, BundleExpr, CurveClass, CurveKind,
};
use curvext::Error;
use proptest::prelude::*;

#[test]
fn riemann_roch_hyperelliptic_sweep() {
    let mut checked = 0;
    for g in 2..=15 {
        for a in 0..=2 * g {
            for k in 0..=10 {
                let h0 = h0_hyperelliptic(g, a, k).unwrap();
                let h1 = h1_hyperelliptic(g, a, k).unwrap();
                assert_eq!(h0 - h1, 2 * a + k - g + 1, "g={g} a={a} k={k}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, (2..=15).map(|g| (2 * g + 1) * 11).sum::<i64>());
}

#[test]
fn negative_pencils_forced_or_refused() {
    for g in 2..=12 {
        for a in -2 * g..0 {
            for k in 0..=3 * g {
                match (h0_hyperelliptic(g, a, k), h1_hyperelliptic(g, a, k)) {
                    (Ok(h0), Ok(h1)) => assert_eq!(h0 - h1, 2 * a + k - g + 1),
                    (Err(Error::Domain(_)), Err(Error::Domain(_))) => {
                        assert!(k > 0 && (0..=2 * g - 2).contains(&(2 * a + k)))
                    }
                    other => panic!("g={g} a={a} k={k}: inconsistent {other:?}"),
                }
            }
        }
    }
}

#[test]
fn serre_duality_on_pencil_multiples() {
    for g in 2..=40 {
        for a in 0..g {
            assert_eq!(h1_hyperelliptic(g, a, 0).unwrap(), h0_hyperelliptic(g, g - 1 - a, 0).unwrap());
        }
    }
}

#[test]
fn monotone_in_both_arguments() {
    for g in 2..=15 {
        for a in 0..=2 * g {
            for k in 0..=10 {
                let (h0, h1) = (h0_hyperelliptic(g, a, k).unwrap(), h1_hyperelliptic(g, a, k).unwrap());
                let up_a = (h0_hyperelliptic(g, a + 1, k).unwrap(), h1_hyperelliptic(g, a + 1, k).unwrap());
                let up_k = (h0_hyperelliptic(g, a, k + 1).unwrap(), h1_hyperelliptic(g, a, k + 1).unwrap());
                assert!(up_a.0 >= h0 && up_a.1 <= h1);
                assert!(up_k.0 >= h0 && up_k.1 <= h1);
            }
        }
    }
}

#[test]
fn clifford_bound() {
    for g in 2..=20 {
        for a in 0..=2 * g {
            for k in 0..=2 * g {
                let h0 = h0_hyperelliptic(g, a, k).unwrap();
                let h1 = h1_hyperelliptic(g, a, k).unwrap();
                if h0 == 0 || h1 == 0 {
                    continue;
                }
                let d = 2 * a + k;
                assert!(2 * (h0 - 1) <= d, "g={g} a={a} k={k}");
                assert_eq!(2 * (h0 - 1) == d, k == 0, "g={g} a={a} k={k}");
            }
        }
    }
}

#[test]
fn trigonal_serre_duality() {
    for g in 5..=14 {
        for a in 1..=g {
            let b = g + 2 - a;
            if !cohomology::is_valid_maroni(g, a, b) {
                continue;
            }
            let curve = CurveClass::trigonal(g, a, b).unwrap();
            for n in 0..=g {
                let l = BundleExpr::TrigBundle { c_k: 0, n };
                let d = 3 * n;
                let h0l = h0(&curve, &l).unwrap();
                let h1l = h1(&curve, &l).unwrap();
                assert_eq!(h0l - h1l, d - g + 1, "g={g} ({a},{b}) n={n}");
                if d <= 2 * g - 2 {
                    assert_eq!(h1l, h0_k_minus_trigonal(g, a, b, n).unwrap());
                }
                let dual = BundleExpr::TrigBundle { c_k: 1, n: -n };
                assert_eq!(h0(&curve, &dual).unwrap(), h1l);
            }
        }
    }
}

#[test]
fn genus3_riemann_roch() {
    let curve = CurveClass::genus3_quartic();
    for c in -2..=6 {
        for r in 0..=12 {
            for aligned in [false, true] {
                if aligned && r < 3 {
                    continue;
                }
                let l = BundleExpr::G3Bundle { c, r, aligned };
                let d = 4 * c - r;
                let h0l = h0(&curve, &l).unwrap();
                let h1l = h1(&curve, &l).unwrap();
                assert_eq!(h0l - h1l, d - 2, "{l}");
            }
        }
    }
    // h^0(D) for r points against Riemann–Roch with h^0(K - D).
    for r in 1..=16 {
        for aligned in [false, true] {
            let k_minus_d = h0(&curve, &BundleExpr::G3Bundle { c: 1, r, aligned }).unwrap();
            assert_eq!(h0_points_on_quartic(r, aligned).unwrap(), r - 2 + k_minus_d, "r={r}");
        }
    }
}

#[test]
fn trigonal_table_columns() {
    let expected = [
        (5, 3, 4, 2, 3),
        (6, 4, 4, 3, 2),
        (6, 3, 5, 3, 2),
        (7, 4, 5, 4, 1),
        (7, 3, 6, 5, 2),
        (8, 5, 5, 5, 0),
        (8, 4, 6, 6, 1),
        (9, 5, 6, 7, 0),
        (9, 4, 7, 8, 1),
        (10, 6, 6, 9, 0),
        (10, 5, 7, 9, 0),
        (10, 4, 8, 10, 1),
    ];
    for (g, a, b, pencil, k_minus) in expected {
        assert_eq!(h0_trigonal(g, a, b, g - 4).unwrap(), pencil);
        assert_eq!(h0_k_minus_trigonal(g, a, b, g - 4).unwrap(), k_minus);
    }
}

#[test]
fn clifford_indices() {
    let c = |g, kind| cohomology::clifford_index_of(&CurveClass::new(g, kind).unwrap());
    assert_eq!(c(7, CurveKind::Hyperelliptic).unwrap(), 0);
    assert_eq!(c(7, CurveKind::Trigonal { maroni_a: 4, maroni_b: 5 }).unwrap(), 1);
    assert_eq!(c(6, CurveKind::PlaneQuintic).unwrap(), 1);
    assert_eq!(c(10, CurveKind::PlaneSextic).unwrap(), 2);
    assert_eq!(c(8, CurveKind::Bielliptic).unwrap(), 2);
    assert_eq!(c(7, CurveKind::DelPezzoBianticanonical).unwrap(), 2);
    assert_eq!(c(11, CurveKind::GeneralClifford(4)).unwrap(), 4);
    assert!(c(5, CurveKind::Bielliptic).is_err());
}

proptest! {
    #[test]
    fn riemann_roch_for_general_hyperelliptic(g in 2i64..60, d in -10i64..200) {
        let curve = CurveClass::hyperelliptic(g).unwrap();
        let l = BundleExpr::HypGeneral { d };
        prop_assert_eq!(h0(&curve, &l).unwrap() - h1(&curve, &l).unwrap(), d - g + 1);
    }

    #[test]
    fn degree_is_additive_in_points(g in 2i64..30, a in 0i64..40, k in 0i64..40) {
        let curve = CurveClass::hyperelliptic(g).unwrap();
        let d0 = cohomology::degree(&curve, &BundleExpr::HypBundle { a, k }).unwrap();
        let d1 = cohomology::degree(&curve, &BundleExpr::HypBundle { a, k: k + 1 }).unwrap();
        prop_assert_eq!(d1, d0 + 1);
    }

    #[test]
    fn mismatched_families_are_rejected(g in 5i64..12) {
        let curve = CurveClass::hyperelliptic(g).unwrap();
        let l = BundleExpr::G3Bundle { c: 1, r: 0, aligned: false };
        prop_assert!(
            matches!(h0(&curve, &l), Err(Error::KindMismatch { .. })),
            "expected a kind mismatch"
        );
    }
}
