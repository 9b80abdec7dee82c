use std::cmp::Ordering;

use braidwo::special::{
    b_k, compare_special, ord_sp, parse_special, population, step_sp, theta_sp, Insertion, OrdConvention, SkewTree,
};
use braidwo::Nat;
use proptest::prelude::*;

fn tree() -> impl Strategy<Value = SkewTree> {
    let leaf = (0u64..4).prop_map(SkewTree::leaf);
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop::collection::vec(inner, 2..=3).prop_filter_map("level", |cs| {
            let n = cs.iter().map(|c| c.level()).max().unwrap().max(2) + 1;
            let mut cs = cs;
            if cs[0].is_trivial() {
                cs[0] = SkewTree::leaf(1);
            }
            SkewTree::node(n, cs).ok()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn text_form_round_trips(x in tree()) {
        prop_assert_eq!(x.to_string().parse::<SkewTree>().unwrap(), x);
    }

    #[test]
    fn words_parse_back(x in tree()) {
        let n = x.level().max(2);
        prop_assert_eq!(parse_special(n, &x.word().unwrap()).unwrap(), x);
    }

    #[test]
    fn steps_descend(x in tree(), t in 1u64..12) {
        prop_assume!(!x.is_trivial());
        let y = step_sp(&x, &Nat::from(t), Insertion::MirrorExact).unwrap();
        prop_assert_eq!(compare_special(&y, &x), Ordering::Less);
    }
}

#[test]
fn theta_words() {
    let w = |n: u8, t: u32| theta_sp(n, &Nat::from(t)).unwrap().word().unwrap();
    assert_eq!(w(2, 3), vec![1, 1, 1]);
    assert_eq!(w(3, 1), vec![1]);
    assert_eq!(w(3, 2), vec![1, 2, 2, 2, 1]);
}

#[test]
fn non_special_words_are_rejected() {
    assert!(parse_special(3, &[2, 1]).is_err());
    assert!(parse_special(3, &[1, 2, 2, 1, 1, 2]).is_err());
}

#[test]
fn conventions_differ_on_b_k() {
    for k in 0..=3u8 {
        let d = ord_sp(&b_k(k), OrdConvention::Default);
        let p = ord_sp(&b_k(k), OrdConvention::Printed);
        assert_ne!(d, p);
    }
}

#[test]
fn population_is_sorted_consistently() {
    let mut pop = population(4, 4, 3);
    pop.sort_by(compare_special);
    for w in pop.windows(2) {
        assert_eq!(compare_special(&w[0], &w[1]), Ordering::Less, "{} {}", w[0], w[1]);
    }
}
