use std::cmp::Ordering;

use braidwo::expseq::{is_normal_raw, normalize_letters, sigma_positive_witness, word_of, WitnessOutcome};
use braidwo::garside::{complexity, complexity_word, greedy_nf_word};
use braidwo::hydra::ord3;
use braidwo::ordinal::ord_cmp;
use braidwo::verify::braids_up_to;
use braidwo::ExpSeq;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1u8..=2, 0..max)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn normalize_is_idempotent_and_length_preserving(w in word(60)) {
        let e = normalize_letters(&w);
        let back = word_of(&e).unwrap().into_letters();
        prop_assert_eq!(back.len(), w.len());
        prop_assert!(is_normal_raw(&braidwo::expseq::block_decompose(&back)));
        prop_assert_eq!(normalize_letters(&back), e);
    }

    #[test]
    fn left_invariance_on_long_words(u in word(20), a in word(30), b in word(30)) {
        let ua: Vec<u8> = u.iter().chain(&a).copied().collect();
        let ub: Vec<u8> = u.iter().chain(&b).copied().collect();
        prop_assert_eq!(
            normalize_letters(&a).cmp(&normalize_letters(&b)),
            normalize_letters(&ua).cmp(&normalize_letters(&ub))
        );
    }

    #[test]
    fn sandwich_on_long_words(w in word(80)) {
        let n = complexity_word(&w);
        let len = w.len() as u64;
        prop_assert!(n <= len && len <= 3 * n);
        let g = greedy_nf_word(&w);
        prop_assert!(g.is_chained());
        prop_assert_eq!(normalize_letters(&g.word()), normalize_letters(&w));
        prop_assert_eq!(complexity(&normalize_letters(&w)).unwrap(), n);
    }
}

#[test]
fn witness_is_one_sided() {
    let braids = braids_up_to(5);
    let mut witnesses = 0;
    for (a, _) in &braids {
        for (b, _) in &braids {
            if let WitnessOutcome::Witness(_) = sigma_positive_witness(a, b, 4096).unwrap() {
                witnesses += 1;
                assert_eq!(a.cmp(b), Ordering::Less, "{a} vs {b}");
            }
        }
    }
    assert!(witnesses > 0);
}

#[test]
fn order_matches_ordinal_rank() {
    let braids: Vec<ExpSeq> = braids_up_to(10).into_iter().map(|x| x.0).collect();
    let ords: Vec<_> = braids.iter().map(ord3).collect();
    for i in 0..braids.len() {
        for j in 0..braids.len() {
            assert_eq!(
                braids[i].cmp(&braids[j]),
                ord_cmp(&ords[i], &ords[j]),
                "{} vs {}",
                braids[i],
                braids[j]
            );
        }
    }
}
