use eulerian::classical::{self, ConstructionMethod};
use eulerian::general::{self, Progression};
use eulerian::oracle::{self, SLOW_BOUND};
use eulerian::qeulerian::{self, SLOW_Q_BOUND};
use eulerian::{Poly, Rat, Var};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rat::new(p, q).unwrap())
}

fn progression() -> impl Strategy<Value = Progression> {
    (rat(), rat()).prop_map(|(a, d)| Progression::new(a, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn general_recurrence_matches_closed_form(prog in progression(), n in 0usize..=7) {
        let tri = general::general_triangle(&prog, n);
        for k in -1..n as i64 {
            prop_assert_eq!(tri.get(n, k), general::general_number_closed(n, k, &prog));
        }
    }

    #[test]
    fn general_row_sum_and_boundaries(prog in progression(), n in 1usize..=7) {
        prop_assert!(general::general_row_sum_check(n, &prog).passed());
        let tri = general::general_triangle(&prog, n);
        prop_assert_eq!(tri.get(n, -1), (&prog.d - &prog.a).pow(n as u32));
        prop_assert_eq!(tri.get(n, n as i64 - 1), prog.a.pow(n as u32));
    }

    #[test]
    fn reflection(prog in progression(), n in 0usize..=7) {
        prop_assert!(general::reflection_symmetry_check(n, &prog).passed());
    }

    #[test]
    fn bridge(prog in progression(), n in 0usize..=7) {
        prop_assert!(general::general_poly_bridge_check(n, &prog).passed());
    }

    #[test]
    fn power_sum_against_direct(prog in progression(), n in 1usize..=6, m in 1u64..=12) {
        prop_assert!(general::general_power_sum_check(&prog, n, m).unwrap().passed());
    }

    #[test]
    fn weighted_sum_closed_form(prog in progression(), n in 0usize..=5, m in 1u64..=8, t in rat()) {
        let direct = oracle::direct_weighted_sum(&prog, n as u32, m, 1).eval(&t);
        prop_assert_eq!(general::weighted_power_sum(&prog, n, m, &t), direct);
    }

    #[test]
    fn worpitzky_general(prog in progression(), n in 1usize..=6, i in 1u64..=12) {
        prop_assert!(general::general_worpitzky_check(n, &prog, i).unwrap().passed());
    }

    #[test]
    fn full_sum_identity(prog in progression(), n in 0usize..=5, m in 1u64..=8) {
        prop_assert!(general::full_sum_identity_check(&prog, n, m).unwrap().passed());
    }

    #[test]
    fn q_polynomial_at_one_is_classical(n in 1usize..=8) {
        let qp = qeulerian::q_poly(n).unwrap();
        prop_assert_eq!(qp.at_q(&Rat::one()), classical::classical_poly(n, ConstructionMethod::Triangle));
    }
}

#[test]
fn constructions_agree_through_ten() {
    let base = classical::classical_polys(10, ConstructionMethod::Triangle);
    for m in ConstructionMethod::ALL {
        assert_eq!(classical::classical_polys(10, m), base);
    }
}

#[test]
fn classical_poly_at_one_is_factorial() {
    let polys = classical::classical_polys(10, ConstructionMethod::Triangle);
    let mut fact = Rat::one();
    for (n, p) in polys.iter().enumerate().skip(1) {
        fact = fact * Rat::from(n as i64);
        assert_eq!(p.eval(&Rat::one()), fact);
    }
}

#[test]
fn q_triangle_boundary_entries() {
    // A(n,k)(q) has constant term zero unless k = n-1, and A(n,n-1)(q) = 1.
    let tri = qeulerian::q_triangle(6).unwrap();
    for n in 1..=6 {
        assert_eq!(tri.get(n, n as i64 - 1), Poly::one(Var::Q));
        for k in 0..n as i64 - 1 {
            assert!(tri.get(n, k).coeff(0).is_zero());
        }
    }
}

#[test]
#[ignore = "slow tier: permutation enumeration at n = 9, 10 and q at n = 7"]
fn slow_tier_enumeration() {
    for n in 9..=SLOW_BOUND {
        let counts = oracle::eulerian_by_enumeration(n, SLOW_BOUND).unwrap();
        let tri = classical::classical_triangle(n);
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(Rat::from(*c as i64), Rat::from(tri.get(n, k as i64)));
        }
    }
    assert!(qeulerian::q_combinatorial_check(SLOW_Q_BOUND, SLOW_Q_BOUND).unwrap().passed());
}
