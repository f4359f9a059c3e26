mod support;

use mcgdim::groups::{lambda_bounds, omega};
use mcgdim::{
    check_criterion, enumerate_signatures, parse_signature, ActionRow, FiniteGroup, Mode, Rational,
};
use proptest::prelude::*;
use support::strategies::{noisy_text, signature};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_parse_round_trip(sig in signature(), seed in any::<u64>()) {
        let text = sig.to_string();
        prop_assert_eq!(parse_signature(&text).unwrap(), sig.clone());
        prop_assert_eq!(parse_signature(&noisy_text(&sig, seed)).unwrap(), sig.clone());
        prop_assert_eq!(parse_signature(&text).unwrap().to_string(), text);
    }

    #[test]
    fn rh_order_agrees_with_euler(sig in signature(), g in 3u32..20) {
        if let Some(order) = sig.rh_order(g) {
            prop_assert_eq!(sig.orbifold_euler() * Rational::from(order), Rational::from(2 - g as i64));
        }
    }

    #[test]
    fn enumeration_is_sound(g in 3u32..9, order in 2u64..200) {
        for sig in enumerate_signatures(g, order) {
            prop_assert_eq!(sig.rh_order(g), Some(order));
            prop_assert!(sig.stabilizers_divide(order));
            prop_assert!(!(!sig.is_orientable() && sig.genus() == 1 && sig.elliptic_count() + sig.boundary_count() == 0));
        }
    }

    #[test]
    fn lambda_bound_chain(order in 4u64..100_000) {
        let b = lambda_bounds(order);
        prop_assert!(b.omega <= b.log2_floor);
        prop_assert!(Rational::from(b.log2_floor) <= b.half);
    }

    #[test]
    fn tightening_lambda_never_raises_m_star(cut in prop::collection::vec(0u32..8, 40)) {
        let rows: Vec<ActionRow> = (2..=60u64)
            .flat_map(|o| enumerate_signatures(5, o).into_iter().map(move |s| (o, s)))
            .map(|(order, signature)| ActionRow { genus: 5, order, signature, lambda_max: None })
            .collect();
        let loose = check_criterion(5, Mode::Database, Some(&rows), None).unwrap();
        let tight: Vec<ActionRow> = rows
            .iter()
            .zip(cut.iter().cycle())
            .map(|(r, &l)| ActionRow { lambda_max: Some(l), ..r.clone() })
            .collect();
        let tight = check_criterion(5, Mode::Database, Some(&tight), None).unwrap();
        prop_assert!(tight.m_star <= loose.m_star);
    }
}

#[test]
fn lambda_of_products_is_superadditive() {
    let bases = [
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::cyclic(4).unwrap(),
        FiniteGroup::cyclic(6).unwrap(),
        FiniteGroup::dihedral(3).unwrap(),
        FiniteGroup::dihedral(4).unwrap(),
        FiniteGroup::symmetric(4).unwrap(),
    ];
    for (i, a) in bases.iter().enumerate() {
        for b in &bases[i..] {
            let Ok(p) = FiniteGroup::direct_product_with_cap(a, b, 200) else {
                continue;
            };
            let (la, lb, lp) = (a.lambda_exact(), b.lambda_exact(), p.lambda_exact());
            assert!(lp >= la + lb, "{} {} {}", a.order(), b.order(), p.order());
            assert!(lp <= omega(p.order() as u64));
        }
    }
}

#[test]
fn lambda_of_cyclic_prime_powers() {
    for p in [2usize, 3, 5, 7, 11, 13] {
        let mut k = 1;
        while p.pow(k) <= 200 {
            assert_eq!(FiniteGroup::cyclic(p.pow(k)).unwrap().lambda_exact(), k);
            k += 1;
        }
    }
}
