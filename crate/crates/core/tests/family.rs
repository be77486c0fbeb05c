//! Grid checks of the family identities and of the quantities the zero
//! bounds are built from.

use narayana_core::exactcore::{int, rat, Rational};
use narayana_core::narayana::{
    apply_recurrence, catalan, diff_poly, gn_poly, narayana_number, recurrence_coeffs, verify_recurrence,
};
use narayana_core::theorems::{induction_step, root_census, theorem31_bounds, verify_bounds};
use narayana_core::FamilyIndex;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn idx(n: u32, m: u32) -> FamilyIndex {
    FamilyIndex::new(n, m)
}

#[test]
fn classical_reduction_and_catalan() {
    for m in 0..=20u32 {
        let p = gn_poly(idx(m + 1, m));
        assert_eq!(p.degree(), Some(m as usize));
        for k in 0..=m + 1 {
            assert_eq!(p.coeff(k as usize), narayana_number(i64::from(m) + 1, i64::from(k)).unwrap());
        }
        assert_eq!(p.eval(&int(1)), catalan(m + 1));
        let row: Rational = (0..=m).map(|k| narayana_number(i64::from(m) + 1, i64::from(k)).unwrap()).sum();
        assert_eq!(row, catalan(m + 1));
    }
}

#[test]
fn degree_law() {
    for m in 0..12u32 {
        for n in m + 1..m + 20 {
            let expected = if n == m + 1 { m } else { m + 1 };
            assert_eq!(gn_poly(idx(n, m)).degree(), Some(expected as usize), "{n},{m}");
        }
    }
}

#[test]
fn difference_closed_form_is_positive() {
    for m in 0..10u32 {
        for n in m + 2..m + 25 {
            let d = diff_poly(idx(n, m)).unwrap();
            assert_eq!(d, &gn_poly(idx(n - 1, m)) - &gn_poly(idx(n, m)), "{n},{m}");
            assert!(d.coeffs().iter().all(|c| !c.is_negative()));
            assert!(d.coeffs().iter().any(|c| c.is_positive()));
        }
    }
}

#[test]
fn recurrence_and_its_normalized_form() {
    for m in 0..=12u32 {
        for n in 1..=25u32 {
            assert!(verify_recurrence(idx(n, m)).unwrap(), "{n},{m}");
            if n != m + 1 && n != m + 2 {
                assert_eq!(apply_recurrence(idx(n, m)).unwrap(), gn_poly(idx(n, m + 1)), "{n},{m}");
            }
        }
    }
}

#[test]
fn bracket_signs() {
    for m in 0..=10u32 {
        for n in m + 3..=m + 23 {
            let w = verify_bounds(idx(n, m)).unwrap();
            assert!(w.value_at_lower.is_positive());
            if m == 0 {
                assert!(w.value_at_upper.is_zero());
            } else {
                assert!(w.value_at_upper.is_negative());
            }
            assert!(w.bounds.lower.is_positive() && w.bounds.lower < w.bounds.upper);
            assert!(w.bounds.upper <= rat(1, 3));
            if w.bounds.upper == rat(1, 3) {
                assert_eq!(n, m + 3);
            }
        }
    }
}

/// Closed forms used in the inductive step, written out independently of
/// the library and compared against exact evaluation.
#[test]
fn induction_step_closed_forms() {
    for m in 0..=10i64 {
        for n in m + 4..=m + 30 {
            let s = induction_step(idx(n as u32, m as u32)).unwrap();
            let q = (n + m + 4) * (n - m - 2) + 1;

            assert_eq!(s.x2, rat(2, (m + 1 - n) * (m + 2 - n)));
            assert_eq!(s.x1, rat(2 * (n + 1), (n - m - 2) * q));
            assert!(s.b_x2.is_zero());
            assert_eq!(s.a_x2, rat(2 * (m + 1) * (n - m - 3), n - m - 1));
            assert_eq!(s.a_x1, rat(-2 * (n - m - 3) * (n - m - 1), q));

            let inner = &int((m + 2 - n) * (m + 1 - n)) * &s.x1 - int(2);
            assert_eq!(inner, rat(-2 * (m + 2) * (n - m - 3), q));

            let num = int(2 * (n + 1) * (n - m - 3) * (n - m - 1) * ((n - m - 3) * (m + 1) * (n + m + 4) - 2));
            let den = int(q) * int(q) * int(n - m - 2);
            assert_eq!(&s.a_x1 + &s.b_x1, num / den);
            assert!((&s.a_x1 + &s.b_x1).is_positive());

            let gap = rat(-2 * (n - m - 3) * (n - m - 1), (n - m - 2) * q * (n * n - (m + 1) * (m + 3)));
            assert_eq!(&s.x1 - &s.previous_lower, gap);

            assert!(s.verdict().is_pass(), "{n},{m}: {}", s.verdict());
        }
    }
}

#[test]
fn inductive_values_for_m_one() {
    for n in 4..=60i64 {
        let p = gn_poly(idx(n as u32, 1));
        let lower = theorem31_bounds(idx(n as u32, 1)).unwrap().lower;
        let expected = rat(
            2 * (n - 3) * ((n - 1) * (2 * n * n + n - 25) + 24),
            3 * (n - 2) * (n * n + 2 * n - 7) * (n * n + 2 * n - 7),
        );
        assert_eq!(p.eval(&lower), expected);
    }
    for n in 5..=60i64 {
        let x1 = theorem31_bounds(idx(n as u32, 2)).unwrap().lower;
        let poly_n = n.pow(5) - 52 * n.pow(4) + 123 * n.pow(3) + 1018 * n * n - 4666 * n + 5292;
        let den = 3 * (n - 3) * (n - 3) * (n * n + 2 * n - 14) * (n * n + 2 * n - 14);
        assert_eq!(gn_poly(idx(n as u32, 1)).eval(&x1), rat(poly_n, den), "n = {n}");
    }
}

#[test]
fn root_census_grid() {
    for m in 0..=8u32 {
        for n in m + 2..=m + 20 {
            assert!(root_census(idx(n, m)).unwrap().is_pass(), "{n},{m}");
        }
    }
}

proptest! {
    #[test]
    fn auxiliary_constants_cross_check(n in 1u32..200, m in 0u32..200) {
        let rc = recurrence_coeffs(idx(n, m)).unwrap();
        prop_assert_eq!(&rc.aux_a, &(&rc.aux_c + &rc.aux_d));
        prop_assert_eq!(&rc.aux_c, &(&rc.aux_b + int(2 * i64::from(n))));
        prop_assert_eq!(rc.a.coeff(1), rc.aux_a.clone());
        prop_assert_eq!(rc.b.coeff(2), rc.aux_b.clone());
        prop_assert_eq!(rc.b.coeff(1), -rc.aux_c.clone());
    }

    #[test]
    fn recurrence_far_out(n in 1u32..60, m in 0u32..30) {
        prop_assert!(verify_recurrence(idx(n, m)).unwrap());
    }
}
