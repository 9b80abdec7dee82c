use braidwo::divisors::{
    cached_divisors, card_s, divisor_count, enumerate_divisors, load_table, s_by_prefix, save_table, EnumMode,
};
use braidwo::expseq::delta3;
use braidwo::Nat;
use num_traits::ToPrimitive;

#[test]
fn totals_match_closed_form() {
    for l in 0..=8 {
        let t = enumerate_divisors(l, EnumMode::Recursive).unwrap();
        assert_eq!(Nat::from(t.len()), divisor_count(l), "ℓ = {l}");
        assert!(t.is_increasing());
    }
    for l in 0..=5 {
        let t = enumerate_divisors(l, EnumMode::Brute).unwrap();
        assert_eq!(Nat::from(t.len()), divisor_count(l), "ℓ = {l} brute");
    }
}

#[test]
fn delta_power_rank_is_card_s() {
    for l in 1..=8 {
        let t = enumerate_divisors(l, EnumMode::Recursive).unwrap();
        for k in 1..=l {
            let r = t.rank_of(&delta3(k)).unwrap();
            assert_eq!(Nat::from(r), card_s(k, l).unwrap(), "k={k}, ℓ={l}");
            assert_eq!(s_by_prefix(k, &t).len(), r);
        }
    }
}

fn factorial(n: u64) -> f64 {
    (1..=n).map(|x| x as f64).product()
}

#[test]
fn card_s_grows_like_l_to_the_k_plus_one() {
    for k in 1..=3u64 {
        let l = 60u64;
        let c = card_s(k, l).unwrap().to_f64().unwrap();
        let ratio = c * factorial(k + 1) / (l as f64).powi(k as i32 + 1);
        assert!((ratio - 1.0).abs() <= 0.2, "k={k}: ratio {ratio}");
        // the lower bound already holds from ℓ = k on
        for l in k..=200 {
            let c = card_s(k, l).unwrap().to_f64().unwrap();
            assert!(
                c >= (l as f64).powi(k as i32 + 1) / (2.0 * factorial(k + 1)),
                "k={k}, ℓ={l}"
            );
        }
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    assert!(load_table(dir.path(), 4).unwrap().is_none());
    let t = enumerate_divisors(4, EnumMode::Recursive).unwrap();
    let path = save_table(dir.path(), &t).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# braidwo-div v1 l=4 count=109\n"));
    assert!(text.contains("\n1\t()\n"));
    let back = load_table(dir.path(), 4).unwrap().unwrap();
    assert_eq!(back.entries(), t.entries());
    assert_eq!(cached_divisors(dir.path(), 4).unwrap().entries(), t.entries());

    std::fs::write(&path, "# braidwo-div v1 l=4 count=109\n1\t()\n").unwrap();
    assert!(load_table(dir.path(), 4).is_err());
}
