//! Right greedy normal form of 3-braids and the Garside complexity ‖b‖.

use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expseq::{block_decompose, word_of, ExpSeq};
use crate::word;
use crate::Nat;

/// b = u·Δ^d with u containing no factor σ₁σ₂σ₁ or σ₂σ₁σ₂.
///
/// Such a u admits no relation, so it is the only word of its braid and the
/// pair (u, d) is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaForm {
    pub u: Vec<u8>,
    pub d: u64,
}

/// Extracts Δ factors left to right. Letters arriving after d extractions are
/// flipped d times, since Δ·x = φ(x)·Δ.
pub fn peel(w: &[u8]) -> DeltaForm {
    let mut u: Vec<u8> = Vec::with_capacity(w.len());
    let mut d = 0u64;
    for &x in w {
        let y = if d % 2 == 1 { 3 - x } else { x };
        u.push(y);
        let n = u.len();
        if n >= 3 && u[n - 1] == u[n - 3] && u[n - 1] != u[n - 2] {
            u.truncate(n - 3);
            d += 1;
        }
    }
    DeltaForm { u, d }
}

/// Exponent sequence of u·Δ^d.
pub fn expseq_of_delta_form(form: &DeltaForm) -> ExpSeq {
    let b = block_decompose(&form.u);
    let d = form.d;
    if d == 0 {
        return ExpSeq::from_vec_unchecked(b.into_iter().map(Nat::from).collect());
    }
    let q = b.len();
    // dk(1) = d_1, dk(2) = d_2, … with missing entries read as 0.
    let dk = |k: usize| if k <= q { b[q - k] } else { 0 };
    let twos = std::iter::repeat_n(2u64, d as usize - 1);
    let mut out: Vec<u64>;
    if q == 0 {
        out = vec![1];
        out.extend(twos);
        out.extend([1, d]);
    } else if d.is_multiple_of(2) {
        // σ₁^{d_1} commutes with Δ^d; the σ₂ block fuses with Δ^d's leading σ₂.
        out = b[..q.saturating_sub(2)].to_vec();
        out.push(dk(2) + 1);
        out.extend(twos);
        out.extend([1, d + dk(1)]);
    } else if dk(1) > 0 {
        out = b[..q.saturating_sub(2)].to_vec();
        if q >= 2 {
            out.push(dk(2));
        }
        out.push(dk(1) + 1);
        out.extend(twos);
        out.extend([1, d]);
    } else {
        // u ends in σ₂^{d_2}, which crosses the odd power Δ^d as σ₁^{d_2}.
        out = b[..q.saturating_sub(3)].to_vec();
        out.push(dk(3) + 1);
        out.extend(twos);
        out.extend([1, d + dk(2)]);
    }
    ExpSeq::from_vec_unchecked(out.into_iter().map(Nat::from).collect())
}

/// The four proper simple factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Simple {
    S1,
    S2,
    S12,
    S21,
}

impl Simple {
    pub fn letters(self) -> &'static [u8] {
        match self {
            Simple::S1 => &[1],
            Simple::S2 => &[2],
            Simple::S12 => &[1, 2],
            Simple::S21 => &[2, 1],
        }
    }

    fn from_letters(w: &[u8]) -> Simple {
        match w {
            [1] => Simple::S1,
            [2] => Simple::S2,
            [1, 2] => Simple::S12,
            [2, 1] => Simple::S21,
            _ => unreachable!("not a proper simple factor: {w:?}"),
        }
    }
}

/// w_r…w_1·Δ^d with the last letter of w_{k+1} equal to the first letter of w_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyNF {
    pub d: u64,
    /// Leftmost factor first.
    pub factors: Vec<Simple>,
}

impl GreedyNF {
    pub fn complexity(&self) -> u64 {
        self.factors.len() as u64 + self.d
    }

    pub fn word(&self) -> Vec<u8> {
        let mut w: Vec<u8> = self.factors.iter().flat_map(|f| f.letters().iter().copied()).collect();
        for _ in 0..self.d {
            w.extend_from_slice(&[1, 2, 1]);
        }
        w
    }

    pub fn is_chained(&self) -> bool {
        self.factors
            .windows(2)
            .all(|p| p[0].letters().last() == p[1].letters().first())
    }
}

impl fmt::Display for GreedyNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|s| s.letters().iter().map(|x| x.to_string()).collect::<String>())
            .collect();
        write!(f, "[{}] D^{}", parts.join("|"), self.d)
    }
}

/// Cuts a Δ-free word between equal adjacent letters.
fn chain_factors(u: &[u8]) -> Vec<Simple> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=u.len() {
        if i == u.len() || u[i] == u[i - 1] {
            if i > start {
                out.push(Simple::from_letters(&u[start..i]));
            }
            start = i;
        }
    }
    out
}

pub fn greedy_nf_word(w: &[u8]) -> GreedyNF {
    let form = peel(w);
    GreedyNF {
        d: form.d,
        factors: chain_factors(&form.u),
    }
}

pub fn greedy_nf(b: &ExpSeq) -> Result<GreedyNF> {
    Ok(greedy_nf_word(word_of(b)?.letters()))
}

/// ‖w‖ for a positive 3-strand word.
pub fn complexity_word(w: &[u8]) -> u64 {
    let form = peel(w);
    let changes = form.u.windows(2).filter(|p| p[0] != p[1]).count();
    (form.u.len() - changes) as u64 + form.d
}

/// ‖b‖ = r + d.
pub fn complexity(b: &ExpSeq) -> Result<u64> {
    Ok(complexity_word(word_of(b)?.letters()))
}

/// Maximal d with the suffix pattern e_1 ≥ d, e_2 = 1, e_3 = … = e_{d+1} = 2, e_{d+2} ≥ 1.
pub fn d_of(b: &ExpSeq) -> u64 {
    let p = b.breadth();
    if p < 3 || *b.e(2) != Nat::from(1u32) {
        return 0;
    }
    let mut best = 0u64;
    let mut d = 1usize;
    while d + 2 <= p {
        if *b.e(1) < Nat::from(d) {
            break;
        }
        // e_{d+1} must be 2 for this d (vacuous for d = 1).
        if d >= 2 && *b.e(d + 1) != Nat::from(2u32) {
            break;
        }
        if !b.e(d + 2).is_zero() {
            best = d as u64;
        }
        d += 1;
    }
    best
}

/// C = ‖b‖ − |b| + p + d(b).
pub fn bridge_constant(b: &ExpSeq) -> Result<i64> {
    if b.is_trivial() {
        return Err(Error::Trivial);
    }
    let c = complexity(b)? as i64;
    let len = b
        .length()
        .to_i64()
        .ok_or_else(|| Error::TooLong(b.length().to_string()))?;
    Ok(c - len + b.breadth() as i64 + d_of(b) as i64)
}

pub fn delta_word(l: u64) -> Vec<u8> {
    [1, 2, 1].repeat(l as usize)
}

/// b ≼ Δ^ℓ, decided by subword reversing (independent of `peel`).
pub fn divides_delta_pow(b: &ExpSeq, l: u64) -> Result<bool> {
    Ok(word::left_divides(word_of(b)?.letters(), &delta_word(l)))
}

/// min{ℓ : b ≼ Δ^ℓ} by repeated divisibility tests.
pub fn complexity_by_search(b: &ExpSeq) -> Result<u64> {
    let w = word_of(b)?;
    let mut l = 0;
    while !word::left_divides(w.letters(), &delta_word(l)) {
        l += 1;
    }
    Ok(l)
}

/// Maximal d with b = b'·Δ^d, by right-divisibility tests.
pub fn d_by_search(b: &ExpSeq) -> Result<u64> {
    let w = word_of(b)?;
    let mut d = 0;
    while 3 * (d + 1) as usize <= w.len() && word::right_divides(&delta_word(d + 1), w.letters()) {
        d += 1;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expseq::{delta3, normalize_letters};

    fn s(x: &[u64]) -> ExpSeq {
        ExpSeq::from_u64s(x).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let g = greedy_nf(&delta3(1)).unwrap();
        assert_eq!((g.d, g.factors.len()), (1, 0));
        let g = greedy_nf(&s(&[1, 1])).unwrap();
        assert_eq!((g.d, g.factors.clone()), (0, vec![Simple::S21]));
        let g = greedy_nf(&s(&[4])).unwrap();
        assert_eq!(g.factors, vec![Simple::S1; 4]);
        assert!(g.is_chained());
    }

    #[test]
    fn complexity_examples() {
        for l in 0..6 {
            assert_eq!(complexity(&delta3(l)).unwrap(), l);
        }
        assert_eq!(complexity(&s(&[7])).unwrap(), 7);
        assert_eq!(complexity(&ExpSeq::trivial()).unwrap(), 0);
        assert_eq!(complexity_by_search(&s(&[7])).unwrap(), 7);
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_of(&delta3(3)), 3);
        assert_eq!(d_of(&s(&[5])), 0);
        assert_eq!(d_of(&s(&[1, 2, 1, 2])), 2);
        assert_eq!(d_of(&s(&[1, 2, 1, 5])), 2);
        assert_eq!(d_by_search(&s(&[1, 2, 1, 5])).unwrap(), 2);
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(bridge_constant(&delta3(1)).unwrap(), 2);
        assert_eq!(bridge_constant(&s(&[3])).unwrap(), 1);
        assert_eq!(bridge_constant(&delta3(2)).unwrap(), 2);
        assert!(bridge_constant(&ExpSeq::trivial()).is_err());
    }

    #[test]
    fn divides_examples() {
        assert!(divides_delta_pow(&s(&[2]), 2).unwrap());
        assert!(!divides_delta_pow(&delta3(1), 0).unwrap());
        assert!(divides_delta_pow(&ExpSeq::trivial(), 0).unwrap());
    }

    #[test]
    fn peel_round_trip() {
        let w = [2, 1, 2, 2, 1, 1, 2, 1];
        let g = greedy_nf_word(&w);
        assert_eq!(normalize_letters(&g.word()), normalize_letters(&w));
    }
}
