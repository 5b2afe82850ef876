use laumon::cells::{conjectured_dim_polynomial, enumerate_cells};
use laumon::cohomology::{laumon_poincare, laumon_poincare_aggregated, shifted_poincare};
use laumon::kostant::{enumerate_kostant, kostant_count};
use laumon::quiverfilt::{count_filtrations, rep_at_distinct_points, FiltrationType};
use laumon::rootdata::weyl_poincare;
use laumon::{Caps, CorootVector, RootSystem};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_case() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(0u32..=2, n - 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn conjectured_dims_stay_in_range((n, a) in arb_case()) {
        let rs = RootSystem::new(n).unwrap();
        let alpha = CorootVector::new(a);
        let top = rs.dim_flag() as i64 + 2 * alpha.norm() as i64;
        for cell in enumerate_cells(&rs, &alpha, &Caps::default()).unwrap() {
            let d = cell.conjectured_dim();
            prop_assert!((0..=top).contains(&d), "{d} outside [0, {top}]");
        }
    }

    #[test]
    fn both_cousin_routes_agree((n, a) in arb_case()) {
        let rs = RootSystem::new(n).unwrap();
        let alpha = CorootVector::new(a);
        prop_assert_eq!(
            laumon_poincare(&rs, &alpha, &Caps::default()).unwrap(),
            laumon_poincare_aggregated(&rs, &alpha).unwrap()
        );
    }

    #[test]
    fn poincare_is_a_polynomial_of_the_right_degree((n, a) in arb_case()) {
        let rs = RootSystem::new(n).unwrap();
        let alpha = CorootVector::new(a);
        let p = laumon_poincare(&rs, &alpha, &Caps::default()).unwrap();
        prop_assert_eq!(p.min_exp(), Some(0));
        prop_assert_eq!(p.max_exp(), Some(2 * (rs.dim_flag() as i64 + 2 * alpha.norm() as i64)));
        prop_assert!(p.has_nonnegative_coeffs());
        prop_assert!(shifted_poincare(&rs, &alpha, &Caps::default()).unwrap().is_palindromic());
    }

    #[test]
    fn enumeration_size_matches_count((n, a) in arb_case()) {
        let rs = RootSystem::new(n).unwrap();
        let gamma = CorootVector::new(a);
        let listed = enumerate_kostant(&rs, &gamma, &Caps::default()).unwrap();
        prop_assert_eq!(BigUint::from(listed.len()), kostant_count(&rs, &gamma).unwrap());
        prop_assert!(listed.iter().all(|k| k.weight() == gamma));
    }

    #[test]
    fn distinct_points_are_always_rigid((n, a) in arb_case()) {
        let rs = RootSystem::new(n).unwrap();
        let gamma = CorootVector::new(a);
        for kappa in enumerate_kostant(&rs, &gamma, &Caps::default()).unwrap() {
            let rep = rep_at_distinct_points(&kappa);
            let ty = FiltrationType::new(kappa.parts_expanded());
            let c = count_filtrations(&rep, &ty, &Caps::default()).unwrap();
            prop_assert_eq!(c.over_f2, c.over_f3);
        }
    }
}

#[test]
fn zero_degree_is_the_flag_variety() {
    for n in 2..=5 {
        let rs = RootSystem::new(n).unwrap();
        let zero = CorootVector::zero(n - 1);
        let w = weyl_poincare(n);
        assert_eq!(laumon_poincare(&rs, &zero, &Caps::default()).unwrap(), w);
        assert_eq!(
            conjectured_dim_polynomial(&rs, &zero, &Caps::default()).unwrap(),
            w
        );
    }
}
