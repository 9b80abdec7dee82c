//! Acceptance reports shared by the CLI and the test suite.
//!
//! Each criterion runs its exhaustive or sampled checks and returns a report
//! with a verdict and free-form notes; failures are listed, never masked.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::divisors::{self, card_s, count_sigma, enumerate_divisors, enumerate_s, sigma_tilde, EnumMode};
use crate::error::Error;
use crate::expseq::{block_decompose, delta3, delta_p, is_normal_raw, normalize_letters, word_of, ExpSeq};
use crate::garside::{bridge_constant, complexity, complexity_by_search, complexity_word, d_by_search, d_of};
use crate::growth::{ack_inv, ack_r_inv, ackermann, ackermann_diag, f_omega, AckOutcome, GrowthFn};
use crate::hydra::{self, hardy_length, hydra_length, hydra_length_fast, mirror_step, ord3, StepCase};
use crate::ordinal::{hardy, ord_cmp, Ordinal, Variant};
use crate::special::{self, compare_special, ord_sp, parse_special, Insertion, OrdConvention, SkewTree};
use crate::wo;
use crate::word::{congruence_class, BraidWord};
use crate::Nat;

pub const SCHEMA: &str = "braidwo.verify/1";

/// Figure printed for σ₁²σ₂²σ₁² in the source example.
pub const PRINTED_FIGURE: u64 = 90_159_953_477_630;

/// Cap on children per node in the special-braid population.
pub const SPECIAL_BREADTH_CAP: usize = 3;

pub const CRITERIA: [(u8, &str); 14] = [
    (1, "lengths"),
    (2, "normal-form"),
    (3, "order"),
    (4, "mirror"),
    (5, "hardy"),
    (6, "cross-check"),
    (7, "u-function"),
    (8, "garside"),
    (9, "counting"),
    (10, "growth"),
    (11, "wo"),
    (12, "dilation"),
    (13, "special"),
    (14, "ackermann"),
];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<12} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.millis
        )
    }
}

#[derive(Default)]
struct Check {
    failures: Vec<String>,
    failed: bool,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.failed = true;
            if self.failures.len() < 20 {
                self.failures.push(msg());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

pub fn criterion_id(name: &str) -> Option<u8> {
    if let Ok(i) = name.parse::<u8>() {
        return CRITERIA.iter().find(|c| c.0 == i).map(|c| c.0);
    }
    CRITERIA.iter().find(|c| c.1 == name).map(|c| c.0)
}

pub fn run_criterion(id: u8) -> CriterionReport {
    let start = Instant::now();
    let mut c = Check::default();
    match id {
        1 => lengths(&mut c),
        2 => normal_form(&mut c),
        3 => order(&mut c),
        4 => mirror(&mut c),
        5 => hardy_agreement(&mut c),
        6 => cross_check(&mut c),
        7 => u_values(&mut c),
        8 => garside_suite(&mut c),
        9 => counting(&mut c),
        10 => growth_envelopes(&mut c),
        11 => wo_harness(&mut c),
        12 => dilation(&mut c),
        13 => special_suite(&mut c),
        14 => ackermann_suite(&mut c),
        _ => c.expect(false, || format!("no criterion {id}")),
    }
    let name = CRITERIA.iter().find(|x| x.0 == id).map(|x| x.1).unwrap_or("unknown");
    CriterionReport {
        id,
        name,
        passed: !c.failed,
        notes: c.notes,
        failures: c.failures,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(|c| run_criterion(c.0)).collect()
}

fn s(x: &[u64]) -> ExpSeq {
    ExpSeq::from_u64s(x).expect("normal literal")
}

/// Distinct positive 3-braids with word length ≤ max_len, with their words.
pub fn braids_up_to(max_len: usize) -> Vec<(ExpSeq, Vec<u8>)> {
    let mut seen: HashMap<ExpSeq, Vec<u8>> = HashMap::new();
    seen.insert(ExpSeq::trivial(), Vec::new());
    let mut frontier = vec![Vec::<u8>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in [1u8, 2] {
                let mut v = w.clone();
                v.push(g);
                let e = normalize_letters(&v);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(e) {
                    e.insert(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<(ExpSeq, Vec<u8>)> = seen.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn all_words(max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_len)
        .flat_map(|l| (0u32..(1 << l)).map(move |m| (0..l).map(|i| if m >> i & 1 == 1 { 2 } else { 1 }).collect()))
}

fn lengths(c: &mut Check) {
    let start = Instant::now();
    let tr = hydra::run(&s(&[2, 2]), 1000);
    let printed = [
        "2211", "221", "22", "2111", "211", "21", "2", "1111111", "111111", "11111", "1111", "111", "11", "1", "",
    ];
    let got: Vec<String> = tr
        .states
        .iter()
        .map(|b| word_of(b).unwrap().letters().iter().map(|x| x.to_string()).collect())
        .collect();
    c.expect(got == printed, || format!("trace of 2211: {got:?}"));
    c.expect(tr.terminated && tr.steps() == 14, || {
        format!("T(2211) = {}", tr.steps())
    });
    let t = hydra_length(&delta3(1), 1000);
    c.expect(t == Ok(Nat::from(30u32)), || format!("T(Delta) = {t:?}"));
    for n in 0..=1000u64 {
        let t = hydra_length(&if n == 0 { ExpSeq::trivial() } else { s(&[n]) }, 2000);
        c.expect(t == Ok(Nat::from(n)), || format!("T(s1^{n}) = {t:?}"));
    }
    let ms = start.elapsed().as_millis();
    c.note(format!(
        "T(2211) = 14, T(Delta) = 30, T(s1^n) = n for n <= 1000 in {ms} ms"
    ));
    c.expect(ms < 1000, || format!("took {ms} ms"));
}

fn normal_form(c: &mut Check) {
    let mut n = 0;
    for w in all_words(10) {
        n += 1;
        let class = match congruence_class(&BraidWord::b3(&w), 1 << 16) {
            Ok(cl) => cl,
            Err(e) => {
                c.expect(false, || format!("{w:?}: {e}"));
                continue;
            }
        };
        let normal: Vec<&Vec<u8>> = class.iter().filter(|x| is_normal_raw(&block_decompose(x))).collect();
        let want = word_of(&normalize_letters(&w)).unwrap().into_letters();
        c.expect(normal.len() == 1 && *normal[0] == want, || {
            format!("{w:?}: normal members {normal:?}, normalize gives {want:?}")
        });
        c.expect(class.iter().all(|x| x.len() == w.len()), || {
            format!("{w:?}: length not conserved")
        });
    }
    c.note(format!("{n} words checked against the congruence-class oracle"));
}

fn order(c: &mut Check) {
    let braids = braids_up_to(10);
    let v: Vec<&ExpSeq> = braids.iter().map(|x| &x.0).collect();
    for (i, a) in v.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            let o = a.cmp(b);
            c.expect(o == b.cmp(a).reverse() && ((o == Ordering::Equal) == (i == j)), || {
                format!("antisymmetry/totality fails on {a}, {b}")
            });
            // sorted order: the pairwise relation must agree with the positions
            c.expect(o == i.cmp(&j), || {
                format!("transitivity: {a} vs {b} disagrees with the linear arrangement")
            });
        }
    }
    c.note(format!("totality and transitivity over {} braids", v.len()));

    let mut pairs = 0u64;
    for ul in 1..=9usize {
        let us: Vec<Vec<u8>> = all_words(ul).filter(|w| w.len() == ul).collect();
        let rest: Vec<&(ExpSeq, Vec<u8>)> = braids.iter().filter(|x| x.1.len() <= 10 - ul).collect();
        for u in &us {
            let prod: Vec<ExpSeq> = rest
                .iter()
                .map(|(_, w)| {
                    let mut x = u.clone();
                    x.extend(w);
                    normalize_letters(&x)
                })
                .collect();
            for i in 0..rest.len() {
                for j in 0..rest.len() {
                    pairs += 1;
                    let lhs = rest[i].0.cmp(&rest[j].0);
                    c.expect(lhs == prod[i].cmp(&prod[j]), || {
                        format!("left invariance fails: u = {u:?}, a = {}, b = {}", rest[i].0, rest[j].0)
                    });
                }
            }
        }
    }
    c.note(format!("left invariance on {pairs} (u, a, b) triples"));

    for p in 1..=6u64 {
        let dp = delta_p(p);
        for (b, _) in &braids {
            if b.breadth() as u64 <= p + 1 {
                c.expect(*b < dp, || format!("{b} not below delta_{p}"));
            } else {
                c.expect(dp <= *b, || format!("delta_{p} not below {b}"));
            }
        }
    }
    c.note("delta_p boundary dichotomy for 1 <= p <= 6");
}

fn mirror(c: &mut Check) {
    let braids = braids_up_to(12);
    let mut steps = 0u64;
    let mut drops = 0u64;
    let mut standard_misses = 0u64;
    for (b, _) in &braids {
        if b.is_trivial() {
            continue;
        }
        for t in 1..=25u64 {
            let m = mirror_step(b, t).unwrap();
            steps += 1;
            if m.case == StepCase::BreadthDrop && m.breadth >= 3 {
                drops += 1;
                c.expect(m.adapted_match, || {
                    format!("{b} t={t}: adapted {} vs {}", m.adapted, m.ord_after)
                });
                if !m.standard_match {
                    standard_misses += 1;
                }
            } else {
                c.expect(m.standard_match, || {
                    format!("{b} t={t}: standard {} vs {}", m.standard, m.ord_after)
                });
            }
        }
        let rep = hydra::mirror_check(b, 25);
        c.expect(rep.unexplained() == 0, || {
            format!("{b}: {} unexplained", rep.unexplained())
        });
    }
    c.note(format!(
        "{} braids, {steps} steps; {drops} breadth drops with p >= 3, on which the uncorrected law missed {standard_misses}",
        braids.len() - 1
    ));
}

fn hardy_agreement(c: &mut Check) {
    let braids = braids_up_to(6);
    let (mut compared, mut skipped) = (0u64, 0u64);
    for (b, _) in &braids {
        for k in 0..=4u64 {
            let h = match hardy_length(b, k, 64) {
                Ok(h) => h,
                Err(Error::Exhausted(_)) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => {
                    c.expect(false, || format!("{b}·s1^{k}: {e}"));
                    continue;
                }
            };
            match hydra_length_fast(&b.mul_sigma1_pow(k), 1 << 16) {
                Ok(f) => {
                    compared += 1;
                    c.expect(h == f, || format!("{b}·s1^{k}: Hardy {h} vs dynamics {f}"));
                }
                Err(Error::Exhausted(_)) => skipped += 1,
                Err(e) => c.expect(false, || format!("{b}·s1^{k}: {e}")),
            }
        }
    }
    c.note(format!("{compared} pairs agree, {skipped} beyond budget"));
    c.expect(compared >= 100, || format!("only {compared} comparisons within budget"));
    let w = Ordinal::omega();
    let w2: Ordinal = "w*2".parse().unwrap();
    for x in 0..=10_000u64 {
        let xn = Nat::from(x);
        for v in [Variant::Standard, Variant::Braid] {
            let a = hardy(&w, &xn, v, 64).unwrap();
            let b = hardy(&w2, &xn, v, 64).unwrap();
            c.expect(a == Nat::from(2 * x + 1) && b == Nat::from(4 * x + 3), || {
                format!("H at x = {x}: {a}, {b}")
            });
        }
    }
    c.note("H_w(x) = 2x+1 and H_(w*2)(x) = 4x+3 for x <= 10^4");
}

/// 1153·2^1152 − 2.
pub fn expected_222() -> Nat {
    (Nat::from(1153u32) << 1152u32) - 2u32
}

fn cross_check(c: &mut Check) {
    let b = s(&[2, 2, 2]);
    let fast = hydra_length_fast(&b, 1 << 22);
    let braid = hardy(&ord3(&b), &Nat::one(), Variant::Braid, crate::DEFAULT_BUDGET_BITS).map(|h| h - 1u32);
    let standard = hardy(&ord3(&b), &Nat::one(), Variant::Standard, crate::DEFAULT_BUDGET_BITS).map(|h| h - 1u32);
    match (&fast, &braid) {
        (Ok(f), Ok(h)) => {
            c.expect(f == h, || "dynamics and braid-variant Hardy disagree".into());
            c.expect(*f == expected_222(), || "value differs from 1153·2^1152 − 2".into());
            c.note(format!("dynamics = braid Hardy = 1153·2^1152 − 2 ({} bits)", f.bits()));
        }
        _ => c.expect(false, || format!("routes failed: {fast:?} / {braid:?}")),
    }
    if let Ok(st) = standard {
        let want = (Nat::from(1153u32) << 1151u32) - 2u32;
        c.note(format!(
            "standard-variant Hardy gives {} (1153·2^1151 − 2: {})",
            hydra::sci_digest(&st),
            st == want
        ));
    }
    c.note(format!(
        "printed figure {PRINTED_FIGURE} = 41·2^41 − 2 matches neither route: DISCREPANCY"
    ));
}

fn u_values(c: &mut Check) {
    let want = [2u32, 5, 79];
    for (k, w) in want.iter().enumerate() {
        let a = hydra::u_function(k as u64, 1 << 20);
        let b = hydra::u_function_hardy(k as u64, 1 << 16);
        c.expect(a == Ok(Nat::from(*w)) && b == Ok(Nat::from(*w)), || {
            format!("U({k}): {a:?} / {b:?}")
        });
    }
    c.note("U(0) = 2, U(1) = 5, U(2) = 79 by dynamics and by Hardy");
}

fn garside_suite(c: &mut Check) {
    let braids = braids_up_to(12);
    let mut bridges = BTreeSet::new();
    for (b, w) in &braids {
        let n = complexity(b).unwrap();
        let len = w.len() as u64;
        c.expect(n <= len && len <= 3 * n, || format!("{b}: ‖b‖ = {n}, |b| = {len}"));
        if !b.is_trivial() {
            let k = bridge_constant(b).unwrap();
            bridges.insert(k);
            c.expect((0..=2).contains(&k), || format!("{b}: C = {k}"));
        }
        if w.len() <= 9 {
            c.expect(complexity_by_search(b) == Ok(n), || {
                format!("{b}: search oracle disagrees")
            });
            c.expect(d_by_search(b) == Ok(d_of(b)), || format!("{b}: d search disagrees"));
        }
    }
    c.note(format!("{} braids; observed C values {:?}", braids.len(), bridges));
    for l in 0..=6u64 {
        let n = count_by_complexity(l);
        c.expect(Nat::from(n) == divisors::divisor_count(l), || {
            format!("ℓ = {l}: {n} braids")
        });
    }
    c.note("braids with ‖b‖ ≤ ℓ number 2^(ℓ+3) − 3ℓ − 7 for ℓ <= 6");
}

/// Closure of 1 under right multiplication, kept inside ‖b‖ ≤ ℓ.
fn count_by_complexity(l: u64) -> usize {
    let mut seen: BTreeSet<ExpSeq> = BTreeSet::new();
    seen.insert(ExpSeq::trivial());
    let mut frontier = vec![Vec::<u8>::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in [1u8, 2] {
                let mut v = w.clone();
                v.push(g);
                if complexity_word(&v) <= l {
                    let e = normalize_letters(&v);
                    if seen.insert(e) {
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

fn counting(c: &mut Check) {
    for l in 1..=5u64 {
        let t = enumerate_divisors(l, EnumMode::Brute).unwrap();
        for k in 1..=l {
            let brute = divisors::s_by_prefix(k, &t).len();
            let formula = card_s(k, l).unwrap();
            c.expect(formula == Nat::from(brute), || {
                format!("card_S({k},{l}) = {formula}, brute {brute}")
            });
            c.expect(t.rank_of(&delta3(k)) == Some(brute), || {
                format!("rank of Delta^{k} in ℓ = {l}")
            });
            let gen = enumerate_s(k, l).unwrap();
            c.expect(gen == divisors::s_by_prefix(k, &t), || {
                format!("generated S_({k},{l}) differs from prefix")
            });
        }
    }
    c.note("card_S formula = brute force for 1 <= k <= ℓ <= 5");
    for l in 1..=12u64 {
        for k in 1..=l {
            let bound = Nat::from(l + 3).pow(k as u32 + 2);
            c.expect(card_s(k, l).unwrap() <= bound, || {
                format!("card_S({k},{l}) above (ℓ+3)^(k+2)")
            });
        }
    }
    c.note("card_S(k,ℓ) <= (ℓ+3)^(k+2) for ℓ <= 12");
    for l in 0..=4u64 {
        let r = enumerate_divisors(l, EnumMode::Recursive).unwrap();
        let b = enumerate_divisors(l, EnumMode::Brute).unwrap();
        c.expect(r.entries() == b.entries(), || {
            format!("ℓ = {l}: recursive and brute enumerations differ")
        });
    }
    for l in 1..=6u64 {
        for m in 1..=l {
            let got = sigma_tilde(l, m).len();
            c.expect(count_sigma(l, m).unwrap() == Nat::from(got), || {
                format!("c_({l},{m}) vs block size {got}")
            });
        }
    }
    c.note("recursive = brute entrywise for ℓ <= 4; c_(ℓ,m) = |Σ̃_(ℓ,m)| for ℓ <= 6");
}

fn growth_envelopes(c: &mut Check) {
    let braids = braids_up_to(12);
    for (b, _) in &braids {
        if b.is_trivial() {
            continue;
        }
        let n = complexity(b).unwrap();
        for t in 1..=20u64 {
            let after = complexity(&hydra::step_u64(b, t).unwrap()).unwrap();
            c.expect(after <= n + t + 3, || format!("{b} t={t}: {after} > {n} + t + 3"));
        }
    }
    c.note("‖b{t}‖ <= ‖b‖ + t + 3 for |b| <= 12, t <= 20");
    const HORIZON: u64 = 200;
    let mut recorded = 0u64;
    for (b, _) in braids_up_to(8) {
        let n = complexity(&b).unwrap();
        let tr = hydra::run(&b, HORIZON);
        for (t, x) in tr.states.iter().enumerate() {
            recorded += 1;
            let cx = complexity(x).unwrap();
            let t = t as u64;
            c.expect(cx <= n + 6 + t * t, || format!("{b} at t={t}: {cx}"));
        }
    }
    c.note(format!(
        "quadratic envelope on {recorded} recorded steps (|b| <= 8, t <= {HORIZON})"
    ));
}

fn wo_harness(c: &mut Check) {
    let r = wo::longest_simple(1, GrowthFn::Const(0), 1000).unwrap();
    let want = [s(&[1, 1, 1]), s(&[1, 1, 0]), s(&[1, 1]), s(&[1, 0]), s(&[1]), s(&[])];
    c.expect(r.length == 6 && r.witness == want, || {
        format!("longest(1, const 0) = {}", r.length)
    });
    for k in 0..=2u64 {
        for rr in 0..=(2 - k) {
            let f = GrowthFn::Const(rr);
            let g = wo::longest_simple(k, f, 10_000).unwrap().length;
            let e = wo::longest_simple_exhaustive(k, f, 10_000).unwrap();
            c.expect(g == e, || format!("k={k}, r={rr}: greedy {g}, exhaustive {e}"));
        }
    }
    for k in 0..=3u64 {
        for rr in 0..=(5 - k).min(5) {
            let g = wo::longest_simple(k, GrowthFn::Const(rr), 1 << 20).unwrap();
            let bound = 1u64 << (3 * (k + rr) + 1);
            c.expect(g.outcome == wo::Outcome::TrueMax && g.length < bound, || {
                format!("k={k}, r={rr}: {} vs 2^(3(k+r)+1) = {bound}", g.length)
            });
        }
    }
    c.note("greedy = exhaustive for k + r <= 2; constant maxima below 2^(3(k+r)+1) for k + r <= 5");
}

fn dilation(c: &mut Check) {
    let Ok(Some((k, h))) = wo::smallest_dilation_k(2, 4) else {
        c.expect(false, || "no k <= 2 has all S indices in range".into());
        return;
    };
    let rep = wo::dilation_report(k, h, 4 * h).unwrap();
    c.expect(rep.descending, || "dilated sequence not descending".into());
    c.expect(rep.all_normal, || "dilated sequence has non-normal entries".into());
    c.expect(rep.all_within, || "complexity above 2h + f_w(t)".into());
    c.note(format!(
        "k = {k}, h = {h}, t in [0, {}]: max complexity {} (2h = {})",
        4 * h,
        rep.max_complexity,
        2 * h
    ));
    for v in &rep.violations {
        c.note(format!("reported violation: {v}"));
    }
}

fn special_suite(c: &mut Check) {
    let b: SkewTree = "[3: <2>, <0>]".parse().unwrap();
    c.expect(b.word().unwrap() == [1, 2, 2, 2, 2, 1], || {
        "skew product of <s1^2, 1>".into()
    });
    let tr = special::run_sp(&b, 100, Insertion::MirrorExact).unwrap();
    let printed: [&[u8]; 7] = [
        &[1, 2, 2, 2, 2, 1],
        &[1, 2, 2, 2, 1, 1],
        &[1, 2, 2, 2, 1],
        &[1, 1, 1],
        &[1, 1],
        &[1],
        &[],
    ];
    let got: Vec<Vec<u8>> = tr.states.iter().map(|x| x.word().unwrap()).collect();
    c.expect(got == printed, || format!("special trace {got:?}"));
    c.expect(tr.states.len() == 7 && tr.terminated, || "T^sp(s1 s2^4 s1) != 6".into());

    let pop = special::population(6, 4, SPECIAL_BREADTH_CAP);
    let ords: Vec<Ordinal> = pop.iter().map(|x| ord_sp(x, OrdConvention::Default)).collect();
    let (mut mirror_steps, mut agree) = (0u64, 0u64);
    for (x, ox) in pop.iter().zip(&ords) {
        let w = x.word().unwrap();
        c.expect(special::is_repetitive(&w), || format!("{x}: not repetitive"));
        c.expect(w.is_empty() || (w[0] == 1 && *w.last().unwrap() == 1), || {
            format!("{x}: ends")
        });
        let n = x.level().max(2);
        let class = congruence_class(&BraidWord::new(w.clone(), n).unwrap(), 8);
        c.expect(class.map(|cl| cl.len()) == Ok(1), || {
            format!("{x}: another representative exists")
        });
        c.expect(parse_special(n, &w).as_ref() == Ok(x), || format!("{x}: round trip"));
        let f = special::splitting(x).unwrap();
        c.expect(special::splitting_product(n, &f) == w, || {
            format!("{x}: splitting product")
        });
        c.expect(special::splitting_is_valid(n, &f), || {
            format!("{x}: splitting divisibility")
        });
        if n == 3 || n == 2 {
            // agreement with the 3-strand order
            let e = normalize_letters(&w);
            for (y, _) in pop.iter().zip(&ords).filter(|(y, _)| y.level() <= 3) {
                let f = normalize_letters(&y.word().unwrap());
                c.expect(compare_special(x, y) == e.cmp(&f), || {
                    format!("{x} vs {y}: level-3 order")
                });
            }
        }
        if x.is_trivial() {
            continue;
        }
        for t in 1..=10u64 {
            let tn = Nat::from(t);
            let y = special::step_sp(x, &tn, Insertion::MirrorExact).unwrap();
            c.expect(compare_special(&y, x) == Ordering::Less, || {
                format!("{x} t={t}: no descent")
            });
            mirror_steps += 1;
            let pred = crate::ordinal::fund_seq(ox, &tn);
            let got = ord_sp(&y, OrdConvention::Default);
            c.expect(pred == got, || format!("{x} t={t}: ord {got} vs predicted {pred}"));
        }
    }
    for (i, x) in pop.iter().enumerate() {
        for (j, y) in pop.iter().enumerate() {
            agree += 1;
            c.expect(compare_special(x, y) == ord_cmp(&ords[i], &ords[j]), || {
                format!("{x} vs {y}: ord_sp")
            });
        }
    }
    c.note(format!(
        "population of {} trees (leaf weight <= 6, level <= 4, <= {SPECIAL_BREADTH_CAP} components); {mirror_steps} mirror steps exact; {agree} ordered pairs",
        pop.len()
    ));

    let printed_conv = special::mirror_check_sp(&b, 1, Insertion::MirrorExact, OrdConvention::Printed).unwrap();
    c.expect(printed_conv.first().is_some_and(|m| !m.matches), || {
        "E = n−2 unexpectedly exact".into()
    });
    c.note("E = n−2 fails on the first Node step of <s1^2, 1>, as expected");

    for k in 0..=4u8 {
        let want: Ordinal = format!("w^(w^({k}))").parse().unwrap();
        c.expect(ord_sp(&special::b_k(k), OrdConvention::Default) == want, || {
            format!("ord_sp(b_{k})")
        });
    }
    let (mut compared, mut skipped) = (0u64, 0u64);
    for x in &pop {
        for k in 0..=2u64 {
            let Ok(h) = special::t_sp_hardy(x, k, 64) else {
                skipped += 1;
                continue;
            };
            match special::t_sp(&x.mul_sigma1_pow(k), 1 << 16, Insertion::MirrorExact) {
                Ok(d) => {
                    compared += 1;
                    c.expect(h == d, || format!("{x}·s1^{k}: Hardy {h}, run {d}"));
                }
                Err(_) => skipped += 1,
            }
        }
    }
    c.note(format!(
        "Hardy vs direct run: {compared} agree, {skipped} beyond budget"
    ));
    let u0 = special::u_sp(0, 1000);
    let u1 = special::u_sp(1, 1000);
    c.expect(u0 == Ok(Nat::from(3u32)) && u1 == Ok(Nat::from(39u32)), || {
        format!("u_sp: {u0:?}, {u1:?}")
    });
    let u2 = special::u_sp(2, 100_000);
    c.expect(matches!(u2, Err(Error::Exhausted(_))), || format!("u_sp(2) = {u2:?}"));
}

fn ackermann_suite(c: &mut Check) {
    let cut = Nat::from(u64::MAX);
    let vals: Vec<Option<Nat>> = (0..4).map(|x| ackermann_diag(x, &cut).value().cloned()).collect();
    let want: Vec<Option<Nat>> = [1u32, 3, 7, 61].iter().map(|&v| Some(Nat::from(v))).collect();
    c.expect(vals == want, || format!("Ack(0..3) = {vals:?}"));
    let mut sample: BTreeSet<u64> = (1..=300).collect();
    let mut x = 1f64;
    while x <= 1e6 {
        sample.insert(x as u64);
        x *= 1.07;
    }
    sample.insert(1_000_000);
    for &x in &sample {
        let xn = Nat::from(x);
        let y = ack_inv(&xn);
        let at_least = match ackermann_diag(y, &xn) {
            AckOutcome::Value(v) => v >= xn,
            AckOutcome::AboveCutoff => true,
        };
        let below = y == 0 || matches!(ackermann_diag(y - 1, &xn), AckOutcome::Value(v) if v < xn);
        c.expect(at_least && below, || format!("ack_inv({x}) = {y} does not bracket"));
        for r in 0..=4u64 {
            let y = ack_r_inv(r, &xn);
            let at_least = match ackermann(r, &Nat::from(y), &xn) {
                AckOutcome::Value(v) => v >= xn,
                AckOutcome::AboveCutoff => true,
            };
            let below = y == 0 || matches!(ackermann(r, &Nat::from(y - 1), &xn), AckOutcome::Value(v) if v < xn);
            c.expect(at_least && below, || {
                format!("ack_r_inv({r}, {x}) = {y} does not bracket")
            });
        }
    }
    c.note(format!("inverse bracketing on {} sampled x <= 10^6", sample.len()));
    let f = f_omega(&Nat::from(100u32));
    c.expect(f == Nat::from(40u32), || format!("f_w(100) = {f}"));
    c.expect(Nat::zero() < Nat::one() && f.to_u64() == Some(40), || "f_w".into());
}
