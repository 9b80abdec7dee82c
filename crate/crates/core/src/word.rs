//! Positive braid words, signed words, and the word-level oracles.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A positive braid word on `strands` strands. Letter `i` stands for σ_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    letters: Vec<u8>,
    strands: u8,
}

impl BraidWord {
    pub fn new(letters: Vec<u8>, strands: u8) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Precondition(format!("{strands} strands")));
        }
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x >= strands) {
            return Err(Error::LetterRange {
                letter: bad as u32,
                strands: strands as u32,
            });
        }
        Ok(BraidWord { letters, strands })
    }

    /// Word on three strands; panics on letters outside {1,2}.
    pub fn b3(letters: &[u8]) -> Self {
        BraidWord::new(letters.to_vec(), 3).expect("3-strand letters are 1 or 2")
    }

    pub fn trivial(strands: u8) -> Self {
        BraidWord {
            letters: Vec::new(),
            strands,
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn strands(&self) -> u8 {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parse "1121" (digits) or "1 10 2" (whitespace separated). "" and "e" are the trivial word.
    pub fn parse(s: &str, strands: u8) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(BraidWord::trivial(strands));
        }
        let letters: Vec<u8> = if s.chars().all(|c| c.is_ascii_digit()) {
            s.bytes().map(|b| b - b'0').collect()
        } else {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u8>().map_err(|e| Error::Parse {
                        what: "braid word",
                        detail: format!("{t:?}: {e}"),
                    })
                })
                .collect::<Result<_>>()?
        };
        BraidWord::new(letters, strands)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            letters,
            strands: self.strands.max(other.strands),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        if self.letters.iter().all(|&x| x <= 9) {
            for x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Flip automorphism σ_i ↦ σ_{n−i}.
pub fn flip(n: u8, w: &[u8]) -> Vec<u8> {
    w.iter().map(|&x| n - x).collect()
}

/// All positive words equivalent to `w` under the braid relations.
///
/// Relations preserve length so the class is finite; `budget` caps its size.
pub fn congruence_class(w: &BraidWord, budget: usize) -> Result<BTreeSet<Vec<u8>>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.letters.clone());
    queue.push_back(w.letters.clone());
    while let Some(x) = queue.pop_front() {
        for y in neighbours(&x) {
            if !seen.contains(&y) {
                if seen.len() >= budget {
                    return Err(Error::Exhausted(format!("congruence class exceeds {budget} words")));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

fn neighbours(x: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..x.len().saturating_sub(1) {
        let (a, b) = (x[i], x[i + 1]);
        if a.abs_diff(b) >= 2 {
            let mut y = x.to_vec();
            y.swap(i, i + 1);
            out.push(y);
        } else if a.abs_diff(b) == 1 && i + 2 < x.len() && x[i + 2] == a {
            let mut y = x.to_vec();
            y[i] = b;
            y[i + 1] = a;
            y[i + 2] = b;
            out.push(y);
        }
    }
    out
}

/// A word in the letters σ_i^{±1}; `+i` is σ_i and `-i` its inverse.
pub type SignedWord = Vec<i16>;

pub fn inverse(w: &[u8]) -> SignedWord {
    w.iter().rev().map(|&x| -(x as i16)).collect()
}

pub fn positive(w: &[u8]) -> SignedWord {
    w.iter().map(|&x| x as i16).collect()
}

/// Right reversing of a signed word to the shape P·N⁻¹.
///
/// Returns `(numerator, denominator)` as positive words. Reversing is complete
/// for Artin monoids of spherical type, so it terminates; `max_steps` guards
/// against misuse.
pub fn right_reverse(w: &[i16], max_steps: usize) -> Result<(Vec<u8>, Vec<u8>)> {
    let mut w = w.to_vec();
    let mut steps = 0usize;
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] < 0 && w[i + 1] > 0) {
        steps += 1;
        if steps > max_steps {
            return Err(Error::Exhausted(format!("reversing exceeded {max_steps} steps")));
        }
        let a = -w[i];
        let b = w[i + 1];
        let repl: Vec<i16> = if a == b {
            vec![]
        } else if a.abs_diff(b) >= 2 {
            vec![b, -a]
        } else {
            vec![b, a, -b, -a]
        };
        w.splice(i..i + 2, repl);
    }
    let split = w.iter().position(|&x| x < 0).unwrap_or(w.len());
    let num = w[..split].iter().map(|&x| x as u8).collect();
    let den = w[split..].iter().rev().map(|&x| (-x) as u8).collect();
    Ok((num, den))
}

/// u ≼ v: some positive c has u·c = v.
pub fn left_divides(u: &[u8], v: &[u8]) -> bool {
    let mut w = inverse(u);
    w.extend(positive(v));
    let (_, den) = right_reverse(&w, 1 << 22).expect("reversing terminates on positive input");
    den.is_empty()
}

/// u ≽ v on the right: v = c·u for some positive c.
pub fn right_divides(u: &[u8], v: &[u8]) -> bool {
    let ru: Vec<u8> = u.iter().rev().copied().collect();
    let rv: Vec<u8> = v.iter().rev().copied().collect();
    left_divides(&ru, &rv)
}

/// Result of reducing a signed word with handle reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HandleOutcome {
    /// Main generator occurs only positively.
    Positive(SignedWord),
    /// Main generator occurs only negatively.
    Negative(SignedWord),
    /// The word reduced to the empty word.
    Trivial,
    Exhausted,
}

/// Dehornoy handle reduction, highest-index convention.
///
/// A σ_i-handle is σ_i^e·u·σ_i^{−e} with u free of σ_j^{±1} for j ≥ i; it is
/// replaced by u with each σ_{i−1}^d rewritten as σ_{i−1}^{−e}σ_i^dσ_{i−1}^e.
pub fn handle_reduce(w: &[i16], max_steps: usize, max_len: usize) -> HandleOutcome {
    let mut w = w.to_vec();
    for _ in 0..max_steps {
        let Some((j, k)) = first_handle(&w) else {
            let main = w.iter().map(|x| x.unsigned_abs()).max();
            return match main {
                None => HandleOutcome::Trivial,
                Some(m) if w.contains(&(m as i16)) => HandleOutcome::Positive(w),
                Some(_) => HandleOutcome::Negative(w),
            };
        };
        let i = w[j].abs();
        let e = w[j].signum();
        let mut mid = Vec::with_capacity(k - j + 4);
        for &x in &w[j + 1..k] {
            if x.abs() == i - 1 {
                mid.extend_from_slice(&[-e * (i - 1), x.signum() * i, e * (i - 1)]);
            } else {
                mid.push(x);
            }
        }
        w.splice(j..=k, mid);
        free_reduce(&mut w);
        if w.len() > max_len {
            return HandleOutcome::Exhausted;
        }
    }
    HandleOutcome::Exhausted
}

fn first_handle(w: &[i16]) -> Option<(usize, usize)> {
    for k in 1..w.len() {
        let x = w[k];
        let i = x.abs();
        for j in (0..k).rev() {
            let y = w[j];
            if y.abs() > i {
                break;
            }
            if y.abs() == i {
                if y == -x {
                    return Some((j, k));
                }
                break;
            }
        }
    }
    None
}

fn free_reduce(w: &mut Vec<i16>) {
    let mut out: Vec<i16> = Vec::with_capacity(w.len());
    for &x in w.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    *w = out;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(BraidWord::parse("212", 3).unwrap().letters(), &[2, 1, 2]);
        assert_eq!(BraidWord::parse("1 10 2", 12).unwrap().letters(), &[1, 10, 2]);
        assert!(BraidWord::parse("", 3).unwrap().is_empty());
        assert!(BraidWord::parse("13", 3).is_err());
        assert_eq!(BraidWord::b3(&[1, 1, 2]).to_string(), "112");
    }

    #[test]
    fn class_examples() {
        let c = congruence_class(&BraidWord::b3(&[2, 1, 2]), 100).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&vec![1, 2, 1]));
        let c = congruence_class(&BraidWord::b3(&[1, 2, 1, 1, 2, 1]), 100).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.contains(&vec![2, 1, 2, 2, 1, 2]));
        assert!(congruence_class(&BraidWord::b3(&[1, 2, 1, 1, 2, 1]), 7).is_err());
    }

    #[test]
    fn four_strand_commutation() {
        let w = BraidWord::new(vec![1, 3], 4).unwrap();
        assert_eq!(congruence_class(&w, 10).unwrap().len(), 2);
    }

    #[test]
    fn divisibility_by_reversing() {
        let delta = [1, 2, 1];
        for u in [&[][..], &[1], &[2], &[1, 2], &[2, 1], &[2, 1, 2]] {
            assert!(left_divides(u, &delta), "{u:?}");
        }
        assert!(!left_divides(&[1, 1], &delta));
        assert!(left_divides(&[1, 1], &[1, 2, 1, 1, 2, 1]));
        assert!(right_divides(&[1, 2], &[2, 1, 2]));
        assert!(!right_divides(&[2, 2], &[2, 1, 2]));
    }

    #[test]
    fn handle_examples() {
        let mut w = inverse(&[2]);
        w.extend(positive(&[1, 2]));
        assert_eq!(handle_reduce(&w, 100, 100), HandleOutcome::Positive(vec![1, 2, -1]));
        let mut w = inverse(&[1]);
        w.extend(positive(&[1, 1]));
        assert_eq!(handle_reduce(&w, 100, 100), HandleOutcome::Positive(vec![1]));
        assert_eq!(handle_reduce(&[1, -1], 10, 10), HandleOutcome::Trivial);
    }
}
