//! Exponent sequences of φ-normal 3-braids and the braid order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::garside;
use crate::word::{self, BraidWord, HandleOutcome, SignedWord};
use crate::Nat;

/// Longest word `word_of` will materialize.
pub const MAX_WORD_LEN: usize = 1 << 26;

/// (e_p, …, e_1), stored leading-first. Always normal once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpSeq {
    exps: Vec<Nat>,
}

/// Minimal legal exponent at position k < p.
pub fn emin(k: usize) -> u64 {
    match k {
        1 => 0,
        2 => 1,
        _ => 2,
    }
}

/// Generator of the block at position k: σ₁ for odd k, σ₂ for even k.
pub fn block_letter(k: usize) -> u8 {
    if k % 2 == 1 {
        1
    } else {
        2
    }
}

pub fn is_normal_raw<T: Clone + Into<Nat>>(exps: &[T]) -> bool {
    let p = exps.len();
    if p == 0 {
        return true;
    }
    if exps[0].clone().into().is_zero() {
        return false;
    }
    (1..p).all(|k| exps[p - k].clone().into() >= Nat::from(emin(k)))
}

impl ExpSeq {
    pub fn trivial() -> Self {
        ExpSeq { exps: Vec::new() }
    }

    pub fn new(exps: Vec<Nat>) -> Result<Self> {
        if !is_normal_raw(&exps) {
            return Err(Error::NotNormal(fmt_seq(&exps)));
        }
        Ok(ExpSeq { exps })
    }

    pub fn from_u64s(exps: &[u64]) -> Result<Self> {
        ExpSeq::new(exps.iter().map(|&x| Nat::from(x)).collect())
    }

    /// Builds without checking; callers guarantee normality.
    pub(crate) fn from_vec_unchecked(exps: Vec<Nat>) -> Self {
        debug_assert!(is_normal_raw(&exps), "{}", fmt_seq(&exps));
        ExpSeq { exps }
    }

    pub fn exps(&self) -> &[Nat] {
        &self.exps
    }

    pub fn into_exps(self) -> Vec<Nat> {
        self.exps
    }

    pub fn breadth(&self) -> usize {
        self.exps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.is_empty()
    }

    /// e_k for 1 ≤ k ≤ p.
    pub fn e(&self, k: usize) -> &Nat {
        &self.exps[self.exps.len() - k]
    }

    pub fn e_u64(&self, k: usize) -> Option<u64> {
        self.e(k).to_u64()
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.exps.iter().map(|x| x.to_u64()).collect()
    }

    /// |b|, the word length.
    pub fn length(&self) -> Nat {
        self.exps.iter().sum()
    }

    /// b·σ₁^k.
    pub fn mul_sigma1_pow(&self, k: u64) -> ExpSeq {
        if k == 0 {
            return self.clone();
        }
        let mut exps = self.exps.clone();
        if exps.is_empty() {
            exps.push(Nat::from(k));
        } else {
            *exps.last_mut().unwrap() += k;
        }
        ExpSeq { exps }
    }

    pub fn word(&self) -> Result<BraidWord> {
        word_of(self)
    }
}

impl Ord for ExpSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for ExpSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_seq(exps: &[Nat]) -> String {
    let parts: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for ExpSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_seq(&self.exps))
    }
}

impl FromStr for ExpSeq {
    type Err = Error;

    /// Accepts "(2,3,1,0)", "2,3,1,0" or "()".
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let exps = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Nat>().map_err(|e| Error::Parse {
                    what: "exponent sequence",
                    detail: format!("{t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ExpSeq::new(exps)
    }
}

/// Reads the blocks of a word over {1,2}: minimal p with
/// w = σ_[p]^{e_p}…σ₂^{e_2}σ₁^{e_1}. Only e_1 may be zero.
pub fn block_decompose(w: &[u8]) -> Vec<u64> {
    let mut exps: Vec<u64> = Vec::new();
    let mut last = 0u8;
    for &x in w {
        if x == last {
            *exps.last_mut().unwrap() += 1;
        } else {
            exps.push(1);
            last = x;
        }
    }
    if last == 2 {
        exps.push(0);
    }
    exps
}

/// The φ-normal exponent sequence of the braid represented by `w`.
pub fn normalize(w: &BraidWord) -> ExpSeq {
    normalize_letters(w.letters())
}

pub fn normalize_letters(w: &[u8]) -> ExpSeq {
    let form = garside::peel(w);
    garside::expseq_of_delta_form(&form)
}

/// Normalizes a possibly non-normal raw block sequence.
pub fn normalize_raw(exps: &[u64]) -> ExpSeq {
    normalize_letters(&word_of_raw(exps))
}

pub fn word_of_raw(exps: &[u64]) -> Vec<u8> {
    let p = exps.len();
    let mut w = Vec::with_capacity(exps.iter().sum::<u64>() as usize);
    for (i, &x) in exps.iter().enumerate() {
        let g = block_letter(p - i);
        w.extend(std::iter::repeat_n(g, x as usize));
    }
    w
}

/// The unique φ-normal word of `e`.
pub fn word_of(e: &ExpSeq) -> Result<BraidWord> {
    let len = e.length();
    let n = len
        .to_usize()
        .filter(|&n| n <= MAX_WORD_LEN)
        .ok_or_else(|| Error::TooLong(len.to_string()))?;
    let raw: Vec<u64> = e.exps.iter().map(|x| x.to_u64().unwrap()).collect();
    let w = word_of_raw(&raw);
    debug_assert_eq!(w.len(), n);
    Ok(BraidWord::new(w, 3).expect("letters are 1 or 2"))
}

/// ShortLex comparison of normal sequences.
pub fn compare(a: &ExpSeq, b: &ExpSeq) -> Ordering {
    a.cmp(b)
}

/// Comparison on raw block sequences, normalizing first.
pub fn compare_raw(a: &[u64], b: &[u64]) -> Ordering {
    normalize_raw(a).cmp(&normalize_raw(b))
}

/// Δ₃^k = (1, 2^{(k−1)}, 1, k).
pub fn delta3(k: u64) -> ExpSeq {
    if k == 0 {
        return ExpSeq::trivial();
    }
    let mut exps = vec![Nat::from(1u32)];
    exps.extend(std::iter::repeat_n(Nat::from(2u32), k as usize - 1));
    exps.push(Nat::from(1u32));
    exps.push(Nat::from(k));
    ExpSeq::from_vec_unchecked(exps)
}

/// δ_p = (1, 2^{(p−1)}, 1, 0), with δ_0 = 1.
pub fn delta_p(p: u64) -> ExpSeq {
    if p == 0 {
        return ExpSeq::trivial();
    }
    let mut exps = vec![Nat::from(1u32)];
    exps.extend(std::iter::repeat_n(Nat::from(2u32), p as usize - 1));
    exps.push(Nat::from(1u32));
    exps.push(Nat::zero());
    ExpSeq::from_vec_unchecked(exps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// a⁻¹b rewritten so that its main generator occurs only positively.
    Witness(SignedWord),
    /// The reduction finished without such an expression: a⁻¹b is trivial or negative.
    NoWitness,
    Exhausted,
}

/// Looks for an expression of a⁻¹b whose highest generator occurs only positively.
pub fn sigma_positive_witness(a: &ExpSeq, b: &ExpSeq, budget: usize) -> Result<WitnessOutcome> {
    let wa = word_of(a)?;
    let wb = word_of(b)?;
    let mut w = word::inverse(wa.letters());
    w.extend(word::positive(wb.letters()));
    Ok(match word::handle_reduce(&w, budget, budget.max(64) * 4) {
        HandleOutcome::Positive(x) => WitnessOutcome::Witness(x),
        HandleOutcome::Negative(_) | HandleOutcome::Trivial => WitnessOutcome::NoWitness,
        HandleOutcome::Exhausted => WitnessOutcome::Exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &[u64]) -> ExpSeq {
        ExpSeq::from_u64s(x).unwrap()
    }

    #[test]
    fn blocks() {
        assert_eq!(block_decompose(&[2, 1, 2]), vec![1, 1, 1, 0]);
        assert_eq!(block_decompose(&[]), Vec::<u64>::new());
        assert_eq!(block_decompose(&[1, 1, 2, 2, 1, 1]), vec![2, 2, 2]);
        assert_eq!(word_of_raw(&[2, 2, 2]), vec![1, 1, 2, 2, 1, 1]);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&BraidWord::b3(&[2, 1, 2])), s(&[1, 1, 1]));
        assert_eq!(normalize(&BraidWord::b3(&[1, 2, 1, 1, 2, 1])), s(&[1, 2, 1, 2]));
        assert_eq!(normalize(&BraidWord::b3(&[1; 5])), s(&[5]));
        assert_eq!(normalize(&BraidWord::b3(&[])), ExpSeq::trivial());
    }

    #[test]
    fn word_of_examples() {
        assert_eq!(word_of(&s(&[1, 1, 1])).unwrap().letters(), &[1, 2, 1]);
        assert!(word_of(&ExpSeq::trivial()).unwrap().is_empty());
        assert_eq!(word_of(&s(&[2, 3, 1, 0])).unwrap().letters(), &[2, 2, 1, 1, 1, 2]);
    }

    #[test]
    fn deltas() {
        assert_eq!(delta3(1), s(&[1, 1, 1]));
        assert_eq!(delta3(0), ExpSeq::trivial());
        assert_eq!(delta_p(2), s(&[1, 2, 1, 0]));
        for p in 0..8 {
            assert_eq!(delta3(p), delta_p(p).mul_sigma1_pow(p));
            assert_eq!(normalize(&BraidWord::b3(&[1, 2, 1].repeat(p as usize))), delta3(p));
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(compare(&s(&[1, 0]), &s(&[1, 1, 0])), Ordering::Less);
        assert_eq!(compare(&s(&[2, 2]), &s(&[2, 2])), Ordering::Equal);
        assert_eq!(compare_raw(&[1, 1, 1, 0], &[1, 1, 1]), Ordering::Equal);
    }

    #[test]
    fn normality() {
        assert!(ExpSeq::from_u64s(&[1, 1, 1, 0]).is_err());
        assert!(ExpSeq::from_u64s(&[0]).is_err());
        assert!(ExpSeq::from_u64s(&[1, 0]).is_ok());
        assert_eq!("(2,3,1,0)".parse::<ExpSeq>().unwrap(), s(&[2, 3, 1, 0]));
        assert_eq!("()".parse::<ExpSeq>().unwrap(), ExpSeq::trivial());
        assert_eq!(s(&[2, 3, 1, 0]).to_string(), "(2,3,1,0)");
    }

    #[test]
    fn witnesses() {
        let w = sigma_positive_witness(&s(&[1, 0]), &s(&[1, 1, 0]), 1000).unwrap();
        assert_eq!(w, WitnessOutcome::Witness(vec![1, 2, -1]));
        let w = sigma_positive_witness(&s(&[1]), &s(&[2]), 1000).unwrap();
        assert_eq!(w, WitnessOutcome::Witness(vec![1]));
        let w = sigma_positive_witness(&s(&[2]), &s(&[1]), 1000).unwrap();
        assert_eq!(w, WitnessOutcome::NoWitness);
    }
}
