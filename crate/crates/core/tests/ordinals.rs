use std::cmp::Ordering;

use braidwo::growth::{f_omega, f_r};
use braidwo::ordinal::{fund_seq, hardy, ord_cmp, Ordinal, Variant};
use braidwo::{Error, Nat};
use proptest::prelude::*;

/// Builds Σ ω^i·cs[i] for i in `from..`, highest first.
fn from_coeffs(cs: &[u64], from: usize) -> Ordinal {
    let mut s = String::new();
    for (i, c) in cs.iter().enumerate().skip(from).rev() {
        if *c == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('+');
        }
        match i {
            0 => s.push_str(&c.to_string()),
            1 => s.push_str(&format!("w*{c}")),
            _ => s.push_str(&format!("w^({i})*{c}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s.parse().unwrap()
}

/// Ordinals below ω^6 with small coefficients.
fn small_ordinal() -> impl Strategy<Value = Ordinal> {
    prop::collection::vec(0u64..4, 1..=6).prop_map(|cs| from_coeffs(&cs, 0))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn display_round_trips(a in small_ordinal()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn fundamental_sequences_climb(cs in prop::collection::vec(0u64..4, 2..=6), top in 1u64..4, x in 0u64..20, d in 1u64..10) {
        let mut cs = cs;
        cs[0] = 0;
        let n = cs.len();
        cs[n - 1] = top;
        let a = from_coeffs(&cs, 0);
        let y = (x + d).min(20);
        prop_assume!(y > x);
        let ax = fund_seq(&a, &Nat::from(x));
        let ay = fund_seq(&a, &Nat::from(y));
        prop_assert_eq!(ord_cmp(&ax, &ay), Ordering::Less);
        prop_assert_eq!(ord_cmp(&ay, &a), Ordering::Less);
    }

    #[test]
    fn hardy_is_additive(cs in prop::collection::vec(0u64..4, 1..=5), split in 0usize..5, x in 0u64..6) {
        // α takes the exponents ≥ split and β the rest, so α + β is already in normal form
        let a = from_coeffs(&cs, split.min(cs.len()));
        let b = from_coeffs(&cs[..split.min(cs.len())], 0);
        // the braid variant is only additive while β stays below ω²
        let below_w2 = ord_cmp(&b, &"w^(2)".parse().unwrap()) == Ordering::Less;
        for v in [Variant::Standard, Variant::Braid] {
            if v == Variant::Braid && !below_w2 {
                continue;
            }
            let sum = a.add(&b);
            let (Ok(inner), Ok(whole)) = (hardy(&b, &Nat::from(x), v, 128), hardy(&sum, &Nat::from(x), v, 128)) else {
                continue;
            };
            if let Ok(outer) = hardy(&a, &inner, v, 128) {
                prop_assert_eq!(outer, whole);
            }
        }
    }
}

#[test]
fn omega_omega_unrolls_once() {
    let ww: Ordinal = "w^(w)".parse().unwrap();
    for k in 0..=3u64 {
        let wk = Ordinal::omega_pow(Ordinal::from_u64(k));
        let a = hardy(&ww, &Nat::from(k), Variant::Standard, 4096);
        let b = hardy(&wk, &Nat::from(k + 1), Variant::Standard, 4096);
        match (&a, &b) {
            (Ok(x), Ok(y)) => assert_eq!(x, y),
            (Err(Error::Exhausted(_)), Err(Error::Exhausted(_))) => {}
            _ => panic!("k={k}: {a:?} vs {b:?}"),
        }
    }
    assert_eq!(
        hardy(&ww, &Nat::from(2u32), Variant::Standard, 64).unwrap(),
        Nat::from(39u32)
    );
}

#[test]
fn growth_functions_are_nondecreasing() {
    let mut prev_w = Nat::from(0u32);
    let mut prev: Vec<Nat> = vec![Nat::from(0u32); 4];
    for x in 0..5000u64 {
        let xn = Nat::from(x);
        let w = f_omega(&xn);
        assert!(w >= prev_w, "f_w at {x}");
        prev_w = w;
        for (r, p) in prev.iter_mut().enumerate() {
            let v = f_r(r as u64, &xn);
            assert!(v >= *p, "f_{r} at {x}");
            *p = v;
        }
    }
}
