use knotforge::presentation::{fox_derivative, GroupRingElt, Word};
use proptest::prelude::*;

const GENS: usize = 4;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0..GENS, any::<bool>()), 0..24)
        .prop_map(|ls| Word::from_pairs(&ls.into_iter().map(|(g, inv)| (g, if inv { -1 } else { 1 })).collect::<Vec<_>>()))
}

fn minus_one(w: &Word) -> GroupRingElt {
    GroupRingElt::from_word(w.clone()).sub(&GroupRingElt::from_word(Word::identity()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fox_fundamental_identity(w in word()) {
        let mut sum = GroupRingElt::zero();
        for j in 0..GENS {
            sum = sum.add(&fox_derivative(&w, j).mul(&minus_one(&Word::gen(j))));
        }
        prop_assert_eq!(sum, minus_one(&w));
    }

    #[test]
    fn fox_product_rule(u in word(), v in word(), j in 0..GENS) {
        let lhs = fox_derivative(&u.mul(&v), j);
        let rhs = fox_derivative(&u, j).add(&GroupRingElt::from_word(u.clone()).mul(&fox_derivative(&v, j)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_reduction(u in word(), v in word()) {
        prop_assert!(u.mul(&u.inverse()).is_empty());
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert_eq!(u.mul(&v).exponent_sum(), u.exponent_sum() + v.exponent_sum());
    }
}
