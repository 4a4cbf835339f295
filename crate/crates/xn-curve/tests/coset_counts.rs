//! Brute-force oracles for the group-theoretic invariants.

use xn_arith::{ratio, Level};
use xn_curve::{brute_psl2_order, counted_psl2_order, curve_data, cusp_equivalent, cusp_zero_xi, CuspRep};

#[test]
fn index_matches_full_enumeration() {
    for n in [15u64, 21, 33] {
        assert_eq!(curve_data(n as i64).unwrap().index, brute_psl2_order(n), "N={n}");
    }
}

#[test]
fn index_matches_counted_enumeration_up_to_105() {
    for n in 3i64..=105 {
        let Ok(c) = curve_data(n) else { continue };
        assert_eq!(c.index, counted_psl2_order(n as u64), "N={n}");
    }
}

#[test]
fn riemann_hurwitz_integrality() {
    for n in 3i64..=1000 {
        if let Ok(c) = curve_data(n) {
            // 2g - 2 = index/6 - cusps for Γ(N) with N >= 3 (no elliptic points)
            let lhs = 2 * c.genus as i64 - 2;
            let rhs = ratio(c.index as i64, 6) - ratio(c.cusp_count as i64, 1);
            assert_eq!(ratio(lhs, 1), rhs, "N={n}");
        }
    }
}

#[test]
fn zero_xi_cusps_pairwise_inequivalent() {
    for n in [15i64, 21, 33, 35] {
        let lv = Level::new(n).unwrap();
        let cusps: Vec<CuspRep> = lv.unit_reps().iter().map(|&u| cusp_zero_xi(lv, u as i64).unwrap().0).collect();
        assert_eq!(cusps.len() as u64, lv.phi() / 2);
        for (i, a) in cusps.iter().enumerate() {
            assert!(!cusp_equivalent(a, &CuspRep::infinity(lv), lv));
            for b in &cusps[i + 1..] {
                assert!(!cusp_equivalent(a, b, lv), "N={n}: {}/{} ~ {}/{}", a.alpha, a.beta, b.alpha, b.beta);
            }
        }
    }
}
