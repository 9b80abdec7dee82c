//! The 𝒢₃-sequence b, b{1}, b{1}{2}, … and its ordinal mirror.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expseq::{delta3, emin, ExpSeq};
use crate::ordinal::{fund_seq, hardy, Ordinal, Term, Variant};
use crate::Nat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StepCase {
    /// r = 1: one σ₁ stripped.
    Strip,
    /// 2 ≤ r < p.
    Interior,
    /// r = p with e_p ≥ 2.
    LeadingDecrement,
    /// r = p with e_p = 1: the leading block disappears.
    BreadthDrop,
}

impl fmt::Display for StepCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepCase::Strip => "r=1",
            StepCase::Interior => "interior",
            StepCase::LeadingDecrement => "leading-decrement",
            StepCase::BreadthDrop => "breadth-drop",
        })
    }
}

/// Least r < p with e_r > e_r^min, else p.
pub fn critical_position(b: &ExpSeq) -> Result<usize> {
    let p = b.breadth();
    if p == 0 {
        return Err(Error::Trivial);
    }
    Ok((1..p).find(|&k| *b.e(k) > Nat::from(emin(k))).unwrap_or(p))
}

/// Positions a player may choose: r < p with e_r > e_r^min, and r = p.
pub fn permitted_positions(b: &ExpSeq) -> Vec<usize> {
    let p = b.breadth();
    let mut out: Vec<usize> = (1..p).filter(|&k| *b.e(k) > Nat::from(emin(k))).collect();
    if p > 0 {
        out.push(p);
    }
    out
}

/// Case tag of the rewrite at position r.
pub fn case_at(b: &ExpSeq, r: usize) -> StepCase {
    let p = b.breadth();
    if r == 1 {
        StepCase::Strip
    } else if r < p {
        StepCase::Interior
    } else if *b.e(p) >= Nat::from(2u32) {
        StepCase::LeadingDecrement
    } else {
        StepCase::BreadthDrop
    }
}

/// Rewrite at a given position; the position is assumed permitted.
fn rewrite_at(b: &ExpSeq, r: usize, t: &Nat) -> ExpSeq {
    let p = b.breadth();
    let mut e = b.exps().to_vec();
    let idx = |k: usize| p - k;
    if r == 1 {
        e[idx(1)] -= 1u32;
        if p == 1 && e[0].is_zero() {
            e.clear();
        }
    } else if r < p || *b.e(p) >= Nat::from(2u32) {
        e[idx(r)] -= 1u32;
        e[idx(r - 1)] += t;
    } else {
        let lead = &e[1] + t;
        e.remove(0);
        e[0] = lead;
    }
    ExpSeq::from_vec_unchecked(e)
}

/// b{t}.
pub fn step(b: &ExpSeq, t: &Nat) -> Result<ExpSeq> {
    let r = critical_position(b)?;
    Ok(rewrite_at(b, r, t))
}

pub fn step_u64(b: &ExpSeq, t: u64) -> Result<ExpSeq> {
    step(b, &Nat::from(t))
}

/// Game variant: the rewrite at a chosen permitted position.
pub fn game_step(b: &ExpSeq, t: &Nat, r: usize) -> Result<ExpSeq> {
    let permitted = permitted_positions(b);
    if b.is_trivial() {
        return Err(Error::Trivial);
    }
    if !permitted.contains(&r) {
        return Err(Error::NotPermitted { chosen: r, permitted });
    }
    Ok(rewrite_at(b, r, t))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HydraState {
    pub braid: ExpSeq,
    pub t: Nat,
}

#[derive(Debug, Clone)]
pub struct Trace {
    /// b_0, b_1, …; states[t] is the braid after t steps.
    pub states: Vec<ExpSeq>,
    pub terminated: bool,
}

impl Trace {
    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }

    /// One record per line: step index, exponent sequence, ordinal.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (t, b) in self.states.iter().enumerate() {
            out.push_str(&format!("{t}\t{b}\t{}\n", ord3(b)));
        }
        out
    }
}

/// Runs with t = 1, 2, … for at most `max_steps` steps.
pub fn run(b: &ExpSeq, max_steps: u64) -> Trace {
    run_with_increment(b, max_steps, |t| t.clone())
}

/// Runs with the amount added at step t given by `inc(t)` instead of t.
pub fn run_with_increment(b: &ExpSeq, max_steps: u64, inc: impl Fn(&Nat) -> Nat) -> Trace {
    let mut states = vec![b.clone()];
    let mut t = Nat::zero();
    for _ in 0..max_steps {
        let cur = states.last().unwrap();
        if cur.is_trivial() {
            break;
        }
        t += 1u32;
        let next = step(cur, &inc(&t)).expect("nontrivial");
        states.push(next);
    }
    let terminated = states.last().unwrap().is_trivial();
    Trace { states, terminated }
}

/// T(b) by literal iteration.
pub fn hydra_length(b: &ExpSeq, max_steps: u64) -> Result<Nat> {
    let mut cur = b.clone();
    let mut t = 0u64;
    while !cur.is_trivial() {
        if t >= max_steps {
            return Err(Error::Exhausted(format!("T exceeds {max_steps} steps")));
        }
        t += 1;
        cur = step_u64(&cur, t)?;
    }
    Ok(Nat::from(t))
}

/// Default cap on non-strip moves for `hydra_length_fast`.
pub const DEFAULT_FAST_MOVES: u64 = 1 << 24;

/// T(b) with every stripping run e_1 jumped in one move.
pub fn hydra_length_fast(b: &ExpSeq, max_moves: u64) -> Result<Nat> {
    let mut e: Vec<Nat> = b.exps().to_vec();
    let mut t = Nat::zero();
    let mut moves = 0u64;
    while !e.is_empty() {
        moves += 1;
        if moves > max_moves {
            return Err(Error::Exhausted(format!("more than {max_moves} non-strip moves")));
        }
        let last = e.len() - 1;
        if !e[last].is_zero() {
            t += &e[last];
            e[last].set_zero();
            if e.len() == 1 {
                e.clear();
            }
            continue;
        }
        t += 1u32;
        let cur = ExpSeq::from_vec_unchecked(e);
        e = step(&cur, &t)?.into_exps();
    }
    Ok(t)
}

/// ω^{p−1}·e_p + Σ_{k<p} ω^{k−1}·(e_k − e_k^min).
pub fn ord3(b: &ExpSeq) -> Ordinal {
    let p = b.breadth();
    let mut terms = Vec::new();
    for k in (1..=p).rev() {
        let c = if k == p {
            b.e(k).clone()
        } else {
            b.e(k) - Nat::from(emin(k))
        };
        if !c.is_zero() {
            terms.push(Term {
                exp: Ordinal::from_u64(k as u64 - 1),
                coeff: c,
            });
        }
    }
    Ordinal::from_terms(terms).expect("decreasing exponents")
}

#[derive(Debug, Clone, Serialize)]
pub struct MirrorStep {
    pub t: u64,
    pub case: StepCase,
    pub breadth: usize,
    pub ord_before: String,
    pub ord_after: String,
    pub standard: String,
    pub adapted: String,
    pub standard_match: bool,
    pub adapted_match: bool,
}

impl MirrorStep {
    /// A mismatch not accounted for by the breadth-drop offset.
    pub fn unexplained(&self) -> bool {
        !self.adapted_match || (!self.standard_match && !(self.case == StepCase::BreadthDrop && self.breadth >= 3))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MirrorReport {
    pub start: String,
    pub steps: Vec<MirrorStep>,
}

impl MirrorReport {
    pub fn unexplained(&self) -> usize {
        self.steps.iter().filter(|s| s.unexplained()).count()
    }

    pub fn standard_mismatches(&self) -> usize {
        self.steps.iter().filter(|s| !s.standard_match).count()
    }
}

/// One mirror record for the step b → b{t}.
pub fn mirror_step(b: &ExpSeq, t: u64) -> Result<MirrorStep> {
    let r = critical_position(b)?;
    let case = case_at(b, r);
    let p = b.breadth();
    let after = rewrite_at(b, r, &Nat::from(t));
    let before_o = ord3(b);
    let after_o = ord3(&after);
    let standard = fund_seq(&before_o, &Nat::from(t));
    let c = if case == StepCase::BreadthDrop && p >= 3 {
        emin(p - 1)
    } else {
        0
    };
    let adapted = fund_seq(&before_o, &Nat::from(t + c));
    Ok(MirrorStep {
        t,
        case,
        breadth: p,
        standard_match: standard == after_o,
        adapted_match: adapted == after_o,
        ord_before: before_o.to_string(),
        ord_after: after_o.to_string(),
        standard: standard.to_string(),
        adapted: adapted.to_string(),
    })
}

/// Runs up to `horizon` steps recording both mirror predictions.
pub fn mirror_check(b: &ExpSeq, horizon: u64) -> MirrorReport {
    let mut steps = Vec::new();
    let mut cur = b.clone();
    for t in 1..=horizon {
        if cur.is_trivial() {
            break;
        }
        steps.push(mirror_step(&cur, t).expect("nontrivial"));
        cur = step_u64(&cur, t).expect("nontrivial");
    }
    MirrorReport {
        start: b.to_string(),
        steps,
    }
}

/// T(b·σ₁^k) through H'_{ord(b)}(k+1) − 1.
pub fn hardy_length(b: &ExpSeq, k: u64, budget_bits: u64) -> Result<Nat> {
    let h = hardy(&ord3(b), &Nat::from(k + 1), Variant::Braid, budget_bits)?;
    Ok(h - 1u32)
}

/// U(0) = 2, U(1) = 5, U(k) = T(Δ₃^{k−1}σ₁) + 1.
pub fn u_function(k: u64, max_moves: u64) -> Result<Nat> {
    match k {
        0 => Ok(Nat::from(2u32)),
        1 => Ok(Nat::from(5u32)),
        _ => {
            let b = delta3(k - 1).mul_sigma1_pow(1);
            Ok(hydra_length_fast(&b, max_moves)? + 1u32)
        }
    }
}

/// U(k) via the braid-variant Hardy route.
pub fn u_function_hardy(k: u64, budget_bits: u64) -> Result<Nat> {
    match k {
        0 => Ok(Nat::from(2u32)),
        1 => Ok(Nat::from(5u32)),
        _ => Ok(hardy_length(&delta3(k - 1), 1, budget_bits)? + 1u32),
    }
}

/// Compact rendering of a huge natural number: leading digits and bit length.
pub fn sci_digest(x: &Nat) -> String {
    let s = x.to_string();
    if s.len() <= 24 {
        return s;
    }
    format!("{}…({} digits, {} bits)", &s[..12], s.len(), x.bits())
}

pub fn nat_to_u64(x: &Nat) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn s(x: &[u64]) -> ExpSeq {
        ExpSeq::from_u64s(x).unwrap()
    }

    #[test]
    fn critical_examples() {
        assert_eq!(critical_position(&s(&[2, 3, 1, 0])).unwrap(), 3);
        assert_eq!(critical_position(&s(&[1, 2, 2, 1, 0])).unwrap(), 5);
        assert_eq!(critical_position(&s(&[1, 1, 1])).unwrap(), 1);
        assert!(critical_position(&ExpSeq::trivial()).is_err());
    }

    #[test]
    fn step_examples() {
        assert_eq!(step_u64(&s(&[2, 2]), 1).unwrap(), s(&[2, 1]));
        assert_eq!(step_u64(&s(&[2, 0]), 3).unwrap(), s(&[1, 3]));
        assert_eq!(step_u64(&s(&[1, 0]), 7).unwrap(), s(&[7]));
        assert_eq!(step_u64(&s(&[1]), 9).unwrap(), ExpSeq::trivial());
    }

    #[test]
    fn example_trace() {
        let tr = run(&s(&[2, 2]), 100);
        assert!(tr.terminated);
        assert_eq!(tr.steps(), 14);
        let want = [
            "(2,2)", "(2,1)", "(2,0)", "(1,3)", "(1,2)", "(1,1)", "(1,0)", "(7)", "(6)", "(5)", "(4)", "(3)", "(2)",
            "(1)", "()",
        ];
        let got: Vec<String> = tr.states.iter().map(|b| b.to_string()).collect();
        assert_eq!(got, want);
        assert!(run(&ExpSeq::trivial(), 10).states.len() == 1);
    }

    #[test]
    fn lengths() {
        assert_eq!(hydra_length(&delta3(1), 1000).unwrap(), Nat::from(30u32));
        assert_eq!(hydra_length_fast(&delta3(1), 1000).unwrap(), Nat::from(30u32));
        assert_eq!(hydra_length_fast(&s(&[1, 1, 2]), 1000).unwrap(), Nat::from(78u32));
        assert!(hydra_length(&delta3(2), 1000).is_err());
    }

    #[test]
    fn ord_examples() {
        use crate::expseq::delta_p;
        for p in 1..6 {
            assert_eq!(ord3(&delta_p(p)).to_string(), format!("w^({})", p + 1));
            assert_eq!(ord3(&delta3(p)).to_string(), format!("w^({})+{}", p + 1, p));
        }
        assert_eq!(ord3(&s(&[4])).to_string(), "4");
        assert_eq!(ord3(&s(&[2, 2])).to_string(), "w*2+2");
    }

    #[test]
    fn mirror_examples() {
        let m = mirror_step(&s(&[2, 0]), 7).unwrap();
        assert!(m.standard_match && m.adapted_match);
        assert_eq!(m.ord_after, "w+7");
        let m = mirror_step(&s(&[1, 1, 0]), 2).unwrap();
        assert_eq!(m.case, StepCase::BreadthDrop);
        assert_eq!(m.ord_after, "w*3");
        assert!(!m.standard_match && m.adapted_match && !m.unexplained());
        let m = mirror_step(&s(&[5]), 1).unwrap();
        assert!(m.standard_match && m.adapted_match);
    }

    #[test]
    fn hardy_route() {
        let b = crate::DEFAULT_BUDGET_BITS;
        assert_eq!(hardy_length(&s(&[2, 0]), 2, b).unwrap(), Nat::from(14u32));
        assert_eq!(hardy_length(&s(&[1, 1, 0]), 1, b).unwrap(), Nat::from(30u32));
        assert_eq!(hardy_length(&ExpSeq::trivial(), 9, b).unwrap(), Nat::from(9u32));
    }

    #[test]
    fn game() {
        assert_eq!(game_step(&s(&[2, 3, 1, 0]), &Nat::one(), 4).unwrap(), s(&[1, 4, 1, 0]));
        assert_eq!(
            game_step(&s(&[2, 3, 1, 0]), &Nat::one(), 3).unwrap(),
            step_u64(&s(&[2, 3, 1, 0]), 1).unwrap()
        );
        match game_step(&s(&[1, 1, 1]), &Nat::one(), 2) {
            Err(Error::NotPermitted { permitted, .. }) => assert_eq!(permitted, vec![1, 3]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn u_values() {
        assert_eq!(u_function(0, 10).unwrap(), Nat::from(2u32));
        assert_eq!(u_function(1, 10).unwrap(), Nat::from(5u32));
        assert_eq!(u_function(2, 1000).unwrap(), Nat::from(79u32));
        assert_eq!(u_function_hardy(2, 1 << 20).unwrap(), Nat::from(79u32));
    }
}
