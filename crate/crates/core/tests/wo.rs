use braidwo::expseq::delta3;
use braidwo::garside::complexity;
use braidwo::growth::GrowthFn;
use braidwo::verify::braids_up_to;
use braidwo::wo::{h_of, is_simple, longest_simple, wo_experiment, Outcome, Violation};
use braidwo::ExpSeq;

#[test]
fn low_complexity_starts_sit_below_delta_power() {
    for (b, _) in braids_up_to(12) {
        let n = complexity(&b).unwrap();
        for k in n..=6 {
            assert!(b <= delta3(k), "{b} has complexity {n} but exceeds Delta^{k}");
        }
    }
}

#[test]
fn greedy_witnesses_are_simple() {
    for k in 0..=3 {
        for (f, cap) in [
            (GrowthFn::Const(0), 2000),
            (GrowthFn::Const(1), 2000),
            (GrowthFn::Square, 4),
            (GrowthFn::FOmega, 40),
        ] {
            let r = longest_simple(k, f, cap).unwrap();
            assert_eq!(r.witness.len() as u64, r.length);
            assert_eq!(is_simple(&r.witness, k, f).unwrap(), None, "k={k}, f={f}");
            if r.outcome == Outcome::TrueMax {
                assert!(r.witness.last().unwrap().is_trivial());
            }
        }
    }
}

#[test]
fn violations_are_located() {
    let d = delta3(1);
    let s1: ExpSeq = "(1)".parse().unwrap();
    assert_eq!(
        is_simple(&[s1.clone(), d.clone()], 1, GrowthFn::Const(0)).unwrap(),
        Some(Violation::NotDescending(1))
    );
    match is_simple(&[delta3(2)], 1, GrowthFn::Const(0)).unwrap() {
        Some(Violation::TooComplex {
            t: 0, complexity: 2, ..
        }) => {}
        v => panic!("{v:?}"),
    }
}

#[test]
fn h_values() {
    assert_eq!(h_of(1, 16).unwrap().h, 176);
    let r = h_of(2, 16).unwrap();
    assert_eq!(r.h, 8_415_801);
    assert!(r.lhs_monotone && r.rhs_monotone);
    assert_eq!(h_of(3, 16).unwrap().h, 82_671_028_454_547);
}

#[test]
fn experiment_reports_serialize() {
    let r = wo_experiment(1, GrowthFn::Const(0), 100).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["outcome"], "TRUE_MAX");
    assert_eq!(v["length"], 6);
    assert_eq!(v["witness"][0], "(1,1,1)");
}
