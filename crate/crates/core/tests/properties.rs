use num_bigint::BigInt;
use proptest::prelude::*;
use tep_core::completeness::{
    recover_arranged, theorem1_represents, verify_dickson_equivalence, Arrangement,
};
use tep_core::*;

const R: i64 = 100;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

fn multiset(v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    v.sort();
    v
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn deg2_family_is_valid(p in prop::array::uniform6(-R..=R)) {
        let sol = gen_deg2(&Deg2Params::new(p));
        prop_assert!(sol.verify().valid);
    }

    #[test]
    fn deg2_transposition_swaps_sides([p, q, r, a, b, c] in prop::array::uniform6(-R..=R)) {
        let base = gen_deg2(&Deg2Params::new([p, q, r, a, b, c]));
        for swapped in [[p, q, r, b, a, c], [p, q, r, a, c, b], [p, q, r, c, b, a]] {
            let t = gen_deg2(&Deg2Params::new(swapped));
            prop_assert_eq!(multiset(t.xs()), multiset(base.ys()));
            prop_assert_eq!(multiset(t.ys()), multiset(base.xs()));
        }
    }

    #[test]
    fn dickson_family_and_equivalence(d in prop::array::uniform5(-R..=R)) {
        let params = DicksonParams::new(d);
        prop_assert!(gen_dickson(&params).verify().valid);
        prop_assert!(verify_dickson_equivalence(&params));
        let rec = recover_arranged(&gen_dickson(&params), Arrangement::IDENTITY).unwrap();
        prop_assert!(rec.consistent);
    }

    #[test]
    fn triads_hold_and_square(p in prop::array::uniform4(-R..=R)) {
        let t = gen_triads(&QuadParams::new(p));
        prop_assert!(t.holds());
        let (x, y) = t.squared();
        prop_assert_eq!(x.iter().sum::<BigInt>(), y.iter().sum::<BigInt>());
        prop_assert_eq!(x.iter().product::<BigInt>(), y.iter().product::<BigInt>());
    }

    #[test]
    fn deg3_families_are_valid(p in prop::array::uniform4(-R..=R)) {
        let params = QuadParams::new(p);
        prop_assert!(gen_deg3(&params).verify().valid);
        prop_assert!(gen_deg3_interim(&params).verify().valid);
    }

    #[test]
    fn exponents_124_and_deg5(p in prop::array::uniform6(-R..=R)) {
        let params = Deg2Params::new(p);
        let three = gen_eqsums124(&params).verify();
        prop_assert!(three.valid);
        let s = &three.sums_x;
        prop_assert_eq!(BigInt::from(2) * &s[2], &s[1] * &s[1]);

        let six = gen_deg5(&params).verify();
        prop_assert!(six.valid);
        let s = &six.sums_x;
        prop_assert!(s[0] == BigInt::from(0) && s[2] == BigInt::from(0) && s[4] == BigInt::from(0));
        prop_assert_eq!(BigInt::from(4) * &s[3], &s[1] * &s[1]);
    }

    #[test]
    fn small_deg2_outputs_are_represented(p in prop::array::uniform6(-6i64..=6)) {
        let sol = gen_deg2(&Deg2Params::new(p));
        prop_assume!(!sol.is_trivial());
        prop_assert!(theorem1_represents(&sol));
    }
}
