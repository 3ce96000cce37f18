//! Randomized cross-route properties: every kernel with two independent
//! computation paths must agree on arbitrary inputs, not only on the
//! curated verification ranges.

use classrel::arith::{lambda1, sigma1, sigma1_chi, sigma1_chi_table, sigma1_table};
use classrel::classnum::{hurwitz, r3, r3_table, HurwitzTable};
use classrel::qseries::QSeries;
use classrel::zsqrt2::{
    correction_sum, correction_sum_conjugation_orbits, ideals_of_norm, ideals_of_norm_brute,
    PrimeElementCache,
};
use num_rational::Rational64;
use proptest::prelude::*;

fn series_from(coeffs: &[i64], constant: i64, trunc: i64) -> QSeries {
    let mut s = QSeries::zero(trunc);
    s.set(0, Rational64::from_integer(constant));
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            s.set(i as i64 + 1, Rational64::from_integer(c));
        }
    }
    s
}

proptest! {
    #[test]
    fn div_unit_inverts_multiply(
        f in proptest::collection::vec(-5i64..=5, 1..20),
        g in proptest::collection::vec(-5i64..=5, 1..20),
        c in -5i64..=5,
    ) {
        let trunc = 40;
        let fs = series_from(&f, c, trunc);
        let gs = series_from(&g, 1, trunc);
        let quotient = fs.multiply(&gs).div_unit(&gs);
        for k in 0..trunc {
            prop_assert_eq!(quotient.coeff(k), fs.coeff(k), "coefficient {}", k);
        }
    }

    #[test]
    fn div_unit_matches_invert_unit(g in proptest::collection::vec(-3i64..=3, 1..12)) {
        let trunc = 24;
        let gs = series_from(&g, 1, trunc);
        let one = QSeries::one(trunc);
        let via_div = one.div_unit(&gs);
        let via_inv = gs.invert_unit();
        for k in 0..trunc {
            prop_assert_eq!(via_div.coeff(k), via_inv.coeff(k), "coefficient {}", k);
        }
    }

    #[test]
    fn sieved_tables_match_trial_division(n in 1u64..2000) {
        let s = sigma1_table(n);
        let sc = sigma1_chi_table(n);
        prop_assert_eq!(s[n as usize], sigma1(n));
        prop_assert_eq!(sc[n as usize], sigma1_chi(n));
    }

    #[test]
    fn lambda1_bounded_by_sigma1(n in 1u64..2000) {
        // 2 lambda1(n) counts each divisor by its smaller partner
        let l = lambda1(n) * 2;
        prop_assert!(l <= Rational64::from_integer(sigma1(n)));
        prop_assert!(l >= Rational64::from_integer(1));
    }

    #[test]
    fn hurwitz_table_matches_single_values(n in 1u64..1500) {
        let table = HurwitzTable::build(n);
        prop_assert_eq!(table.get(n), hurwitz(n));
    }

    #[test]
    fn r3_table_matches_single_values(n in 0u64..1500) {
        let table = r3_table(n);
        prop_assert_eq!(table[n as usize], r3(n));
    }

    #[test]
    fn ideal_enumeration_routes_agree(m in 1u64..800) {
        let mut cache = PrimeElementCache::new();
        let fast = ideals_of_norm(m, &mut cache);
        let brute = ideals_of_norm_brute(m);
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn correction_sum_routes_agree(m in 1u64..800) {
        let mut cache = PrimeElementCache::new();
        let per_ideal = correction_sum(m, &mut cache);
        let per_orbit = correction_sum_conjugation_orbits(m, &mut cache);
        prop_assert_eq!(per_ideal, per_orbit);
    }
}
