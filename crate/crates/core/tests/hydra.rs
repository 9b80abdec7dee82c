use std::cmp::Ordering;

use braidwo::hydra::{game_step, hydra_length, hydra_length_fast, ord3, permitted_positions, run, step_u64};
use braidwo::ordinal::ord_cmp;
use braidwo::verify::braids_up_to;
use braidwo::Nat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn steps_descend_and_stay_normal() {
    for (b, _) in braids_up_to(12) {
        if b.is_trivial() {
            continue;
        }
        for t in 1..=25 {
            let c = step_u64(&b, t).unwrap();
            assert_eq!(c.cmp(&b), Ordering::Less, "{b} t={t}");
            assert!(braidwo::expseq::is_normal_raw(c.exps()));
        }
    }
}

#[test]
fn slow_and_fast_lengths_agree() {
    let mut compared = 0;
    for (b, _) in braids_up_to(8) {
        if let Ok(slow) = hydra_length(&b, 100_000) {
            compared += 1;
            assert_eq!(hydra_length_fast(&b, 1 << 20).unwrap(), slow, "{b}");
        }
    }
    assert!(compared > 50);
}

#[test]
fn traces_export_one_line_per_state() {
    let tr = run(&braidwo::expseq::delta3(1), 100);
    assert!(tr.terminated);
    assert_eq!(tr.export().lines().count(), tr.states.len());
    assert!(tr.export().starts_with("0\t(1,1,1)\t"));
}

// Random permitted choices; every move must lower the ordinal, and the
// cheap starts must actually finish.
#[test]
fn random_battles_descend() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut finished = 0;
    for (b0, _) in braids_up_to(6) {
        for _ in 0..100 {
            let mut b = b0.clone();
            let mut o = ord3(&b);
            let mut t = 0u64;
            while !b.is_trivial() && t < 2000 {
                t += 1;
                let ps = permitted_positions(&b);
                let r = ps[rng.gen_range(0..ps.len())];
                b = game_step(&b, &Nat::from(t), r).unwrap();
                let o2 = ord3(&b);
                assert_eq!(ord_cmp(&o2, &o), Ordering::Less, "{b0}: ordinal did not drop at t={t}");
                o = o2;
            }
            if b.is_trivial() {
                finished += 1;
            }
        }
    }
    assert!(finished > 0);
}
