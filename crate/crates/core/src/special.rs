//! Special braids: skew products of special braids on one strand fewer.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordinal::{fund_seq, hardy, ord_add, Ordinal, Variant};
use crate::word::flip;
use crate::Nat;

/// Canonical form: a Node has p ≥ 2 children, each of level < n, the leading
/// one nontrivial. The trivial braid is `Leaf(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SkewTree {
    Leaf(Nat),
    Node { n: u8, children: Vec<SkewTree> },
}

/// Which θ braid the step inserts at a deletion below the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Insertion {
    /// θ_{2,t} into level-2 slots, θ_{n−1,t+1} above.
    MirrorExact,
    /// θ_{n−1,t} everywhere.
    PaperLiteral,
}

/// Exponent E in ω^{ω^E·(j−1)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrdConvention {
    /// E = n − 3.
    Default,
    /// E = n − 2.
    Printed,
}

impl FromStr for Insertion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mirror-exact" => Ok(Insertion::MirrorExact),
            "paper-literal" => Ok(Insertion::PaperLiteral),
            _ => Err(Error::Parse {
                what: "insertion convention",
                detail: s.into(),
            }),
        }
    }
}

impl FromStr for OrdConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n-3" => Ok(OrdConvention::Default),
            "n-2" => Ok(OrdConvention::Printed),
            _ => Err(Error::Parse {
                what: "exponent convention",
                detail: s.into(),
            }),
        }
    }
}

impl SkewTree {
    pub fn trivial() -> Self {
        SkewTree::Leaf(Nat::zero())
    }

    pub fn leaf(e: u64) -> Self {
        SkewTree::Leaf(Nat::from(e))
    }

    /// ⟨children⟩ at level n, reduced to canonical form.
    pub fn node(n: u8, children: Vec<SkewTree>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("skew product needs n ≥ 3, got {n}")));
        }
        if let Some(c) = children.iter().find(|c| c.level() >= n) {
            return Err(Error::Precondition(format!("child {c} is not {}-special", n - 1)));
        }
        match children.first() {
            None => Ok(SkewTree::trivial()),
            Some(c) if c.is_trivial() => Err(Error::Precondition("leading child is trivial".into())),
            Some(_) if children.len() == 1 => Ok(children.into_iter().next().unwrap()),
            Some(_) => Ok(SkewTree::Node { n, children }),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, SkewTree::Leaf(e) if e.is_zero())
    }

    /// Least n with the braid in B_n⁺.
    pub fn level(&self) -> u8 {
        match self {
            SkewTree::Leaf(_) => 2,
            SkewTree::Node { n, .. } => *n,
        }
    }

    /// Children (b_p, …, b_1) when viewed at level n ≥ own level.
    fn children_at(&self, n: u8) -> Vec<SkewTree> {
        match self {
            SkewTree::Node { n: m, children } if *m == n => children.clone(),
            _ if self.is_trivial() => Vec::new(),
            _ => vec![self.clone()],
        }
    }

    pub fn leaf_weight(&self) -> Nat {
        match self {
            SkewTree::Leaf(e) => e.clone(),
            SkewTree::Node { children, .. } => children.iter().map(|c| c.leaf_weight()).sum(),
        }
    }

    /// The unique word of the braid.
    pub fn word(&self) -> Result<Vec<u8>> {
        skew_word(self)
    }

    /// b·σ₁^k.
    pub fn mul_sigma1_pow(&self, k: u64) -> SkewTree {
        match self {
            SkewTree::Leaf(e) => SkewTree::Leaf(e + k),
            SkewTree::Node { n, children } => {
                let mut c = children.clone();
                let last = c.last_mut().unwrap();
                *last = last.mul_sigma1_pow(k);
                SkewTree::Node { n: *n, children: c }
            }
        }
    }
}

impl fmt::Display for SkewTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkewTree::Leaf(e) => write!(f, "<{e}>"),
            SkewTree::Node { n, children } => {
                write!(f, "[{n}: ")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl FromStr for SkewTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(tree_err(s, pos));
        }
        Ok(t)
    }
}

fn tree_err(s: impl fmt::Display, pos: usize) -> Error {
    Error::Parse {
        what: "skew tree",
        detail: format!("{s} (at {pos})"),
    }
}

fn parse_tree(c: &[char], pos: &mut usize) -> Result<SkewTree> {
    let src: String = c.iter().collect();
    let digits = |pos: &mut usize| -> Result<String> {
        let start = *pos;
        while *pos < c.len() && c[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(tree_err(&src, start));
        }
        Ok(c[start..*pos].iter().collect())
    };
    let expect = |pos: &mut usize, ch: char| -> Result<()> {
        if c.get(*pos) == Some(&ch) {
            *pos += 1;
            Ok(())
        } else {
            Err(tree_err(&src, *pos))
        }
    };
    match c.get(*pos) {
        Some('<') => {
            *pos += 1;
            let e: Nat = digits(pos)?.parse().map_err(|_| tree_err(&src, *pos))?;
            expect(pos, '>')?;
            Ok(SkewTree::Leaf(e))
        }
        Some('[') => {
            *pos += 1;
            let n: u8 = digits(pos)?.parse().map_err(|_| tree_err(&src, *pos))?;
            expect(pos, ':')?;
            let mut children = vec![parse_tree(c, pos)?];
            while c.get(*pos) == Some(&',') {
                *pos += 1;
                children.push(parse_tree(c, pos)?);
            }
            expect(pos, ']')?;
            SkewTree::node(n, children)
        }
        _ => Err(tree_err(&src, *pos)),
    }
}

/// σ₁σ₂²…σ_{n−2}²σ_{n−1}.
fn prefix_p(n: u8) -> Vec<u8> {
    let mut w = vec![1];
    for i in 2..n - 1 {
        w.extend([i, i]);
    }
    w.push(n - 1);
    w
}

/// τ_n = σ_{n−2}²…σ₂²σ₁.
fn tau(n: u8) -> Vec<u8> {
    let mut w = Vec::new();
    for i in (2..n - 1).rev() {
        w.extend([i, i]);
    }
    w.push(1);
    w
}

/// φ̃_n b = P·φ_n b·S with S the reverse of P.
fn tilde_flip(n: u8, w: &[u8]) -> Vec<u8> {
    let p = prefix_p(n);
    let mut out = p.clone();
    out.extend(flip(n, w));
    out.extend(p.iter().rev());
    out
}

fn skew_word(t: &SkewTree) -> Result<Vec<u8>> {
    match t {
        SkewTree::Leaf(e) => {
            let e = e.to_usize().filter(|&e| e <= crate::expseq::MAX_WORD_LEN);
            Ok(vec![1; e.ok_or_else(|| Error::TooLong(t.to_string()))?])
        }
        SkewTree::Node { n, children } => {
            let p = children.len();
            let mut w = Vec::new();
            for (i, c) in children.iter().enumerate() {
                let k = p - i;
                let cw = skew_word(c)?;
                if k % 2 == 0 {
                    w.extend(tilde_flip(*n, &cw));
                } else {
                    w.extend(cw);
                }
                if w.len() > crate::expseq::MAX_WORD_LEN {
                    return Err(Error::TooLong(t.to_string()));
                }
            }
            Ok(w)
        }
    }
}

/// Word of ⟨children⟩_{n,p}; the leading child must be nontrivial.
pub fn skew_product(n: u8, children: Vec<SkewTree>) -> Result<Vec<u8>> {
    SkewTree::node(n, children)?.word()
}

/// Runs of equal letters as (letter, count).
fn runs(w: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &x in w {
        match out.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Every inner run has length ≥ 2 and consecutive letters differ by at most one.
pub fn is_repetitive(w: &[u8]) -> bool {
    let r = runs(w);
    let inner_ok = r.len() < 3 || r[1..r.len() - 1].iter().all(|&(_, c)| c >= 2);
    inner_ok && r.windows(2).all(|p| p[0].0.abs_diff(p[1].0) <= 1)
}

/// Inverts the skew product on a word with letters < n.
pub fn parse_special(n: u8, w: &[u8]) -> Result<SkewTree> {
    if let Some(i) = w.iter().position(|&x| x == 0 || x >= n.max(2)) {
        return Err(Error::LetterRange {
            letter: w[i] as u32,
            strands: n as u32,
        });
    }
    let t = parse_at(n, w, 0)?;
    let back = t.word()?;
    if back != w {
        let pos = back
            .iter()
            .zip(w)
            .position(|(a, b)| a != b)
            .unwrap_or(back.len().min(w.len()));
        return Err(Error::NotSpecial { position: pos });
    }
    Ok(t)
}

fn parse_at(n: u8, w: &[u8], offset: usize) -> Result<SkewTree> {
    let not_special = |i: usize| Error::NotSpecial { position: offset + i };
    if n <= 2 || !w.contains(&(n - 1)) {
        if n <= 2 {
            if let Some(i) = w.iter().position(|&x| x != 1) {
                return Err(not_special(i));
            }
            return Ok(SkewTree::Leaf(Nat::from(w.len())));
        }
        return parse_at(n - 1, w, offset);
    }
    // Flipped factors: σ₁, a σ₁-free run containing σ_{n−1}, σ₁.
    let mut flipped: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        if w[i] == 1 {
            i += 1;
            continue;
        }
        let start = i;
        while i < w.len() && w[i] != 1 {
            i += 1;
        }
        if w[start..i].contains(&(n - 1)) {
            if start == 0 {
                return Err(not_special(0));
            }
            if i == w.len() {
                return Err(not_special(i - 1));
            }
            if let Some(&(_, prev_end)) = flipped.last() {
                if prev_end > start - 1 {
                    return Err(not_special(start - 1));
                }
            }
            flipped.push((start - 1, i + 1));
            i += 1;
        }
    }
    let q = prefix_p(n)[1..].to_vec();
    let mut children = Vec::new();
    let mut cursor = 0;
    for (fi, &(a, b)) in flipped.iter().enumerate() {
        let gap = &w[cursor..a];
        if fi > 0 || !gap.is_empty() {
            children.push(parse_at(n - 1, gap, offset + cursor)?);
        }
        let run = &w[a + 1..b - 1];
        let ql = q.len();
        if run.len() < 2 * ql || run[..ql] != q[..] || !run[run.len() - ql..].iter().rev().eq(q.iter()) {
            return Err(not_special(a + 1));
        }
        let mid = &run[ql..run.len() - ql];
        if let Some(j) = mid.iter().position(|&x| x < 2) {
            return Err(not_special(a + 1 + ql + j));
        }
        children.push(parse_at(n - 1, &flip(n, mid), offset + a + 1 + ql)?);
        cursor = b;
    }
    children.push(parse_at(n - 1, &w[cursor..], offset + cursor)?);
    // Flipped children sit at even k counted from the right.
    let p = children.len();
    for (idx, &(a, _)) in flipped.iter().enumerate() {
        let from_left = 2 * idx + usize::from(p % 2 == 1);
        if (p - from_left) % 2 != 0 {
            return Err(not_special(a));
        }
    }
    SkewTree::node(n, children).map_err(|_| not_special(0))
}

/// ShortLex comparison after promotion to a common level.
pub fn compare_special(a: &SkewTree, b: &SkewTree) -> Ordering {
    if let (SkewTree::Leaf(x), SkewTree::Leaf(y)) = (a, b) {
        return x.cmp(y);
    }
    let n = a.level().max(b.level());
    let ca = a.children_at(n);
    let cb = b.children_at(n);
    ca.len().cmp(&cb.len()).then_with(|| {
        ca.iter()
            .zip(&cb)
            .map(|(x, y)| compare_special(x, y))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    })
}

/// θ_{n,t} = ⟨σ₁, 1, …, 1⟩_{n,t}, with θ_{2,t} = σ₁^t.
pub fn theta_sp(n: u8, t: &Nat) -> Result<SkewTree> {
    if n <= 2 || t.is_one() {
        return Ok(SkewTree::Leaf(t.clone()));
    }
    if t.is_zero() {
        return Err(Error::Precondition("θ_{n,t} needs t ≥ 1".into()));
    }
    let t = t
        .to_usize()
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| Error::Cap(format!("θ_{{{n},{t}}} has too many components")))?;
    let mut children = vec![SkewTree::leaf(1)];
    children.resize(t, SkewTree::trivial());
    SkewTree::node(n, children)
}

fn inserted_theta(n: u8, t: &Nat, ins: Insertion) -> Result<SkewTree> {
    let lvl = n - 1;
    match ins {
        Insertion::MirrorExact if lvl > 2 => theta_sp(lvl, &(t + 1u32)),
        _ => theta_sp(lvl, t),
    }
}

/// b{t}^sp together with whether the step deleted the final σ₁ of b.
fn step_inner(b: &SkewTree, t: &Nat, ins: Insertion) -> Result<(SkewTree, bool)> {
    match b {
        SkewTree::Leaf(e) => {
            if e.is_zero() {
                return Err(Error::Trivial);
            }
            Ok((SkewTree::Leaf(e - 1u32), true))
        }
        SkewTree::Node { n, children } => {
            let p = children.len();
            let i = children
                .iter()
                .rposition(|c| !c.is_trivial())
                .expect("leading nontrivial");
            let r = p - i;
            let (child, deleted) = step_inner(&children[i], t, ins)?;
            let mut c = children.clone();
            if r == 1 || !deleted {
                c[i] = child;
                return Ok((SkewTree::node(*n, c)?, r == 1 && deleted));
            }
            let theta = inserted_theta(*n, t, ins)?;
            if !child.is_trivial() || p > r {
                c[i] = child;
                c[i + 1] = theta;
                Ok((SkewTree::node(*n, c)?, false))
            } else {
                let mut c = vec![theta];
                c.resize(p - 1, SkewTree::trivial());
                Ok((SkewTree::node(*n, c)?, false))
            }
        }
    }
}

pub fn step_sp(b: &SkewTree, t: &Nat, ins: Insertion) -> Result<SkewTree> {
    step_inner(b, t, ins).map(|(x, _)| x)
}

#[derive(Debug, Clone)]
pub struct SpTrace {
    pub states: Vec<SkewTree>,
    pub terminated: bool,
}

pub fn run_sp(b: &SkewTree, max_steps: u64, ins: Insertion) -> Result<SpTrace> {
    let mut states = vec![b.clone()];
    let mut t = Nat::zero();
    for _ in 0..max_steps {
        let cur = states.last().unwrap();
        if cur.is_trivial() {
            break;
        }
        t += 1u32;
        let next = step_sp(cur, &t, ins)?;
        states.push(next);
    }
    let terminated = states.last().unwrap().is_trivial();
    Ok(SpTrace { states, terminated })
}

/// T^sp(b) by iteration.
pub fn t_sp(b: &SkewTree, max_steps: u64, ins: Insertion) -> Result<Nat> {
    let tr = run_sp(b, max_steps, ins)?;
    if !tr.terminated {
        return Err(Error::Exhausted(format!("T^sp exceeds {max_steps} steps")));
    }
    Ok(Nat::from(tr.states.len() - 1))
}

pub fn ord_sp(b: &SkewTree, conv: OrdConvention) -> Ordinal {
    match b {
        SkewTree::Leaf(e) => Ordinal::from_nat(e.clone()),
        SkewTree::Node { n, children } => {
            let e = match conv {
                OrdConvention::Default => *n as u64 - 3,
                OrdConvention::Printed => *n as u64 - 2,
            };
            let p = children.len();
            let mut sum = Ordinal::zero();
            for (i, c) in children.iter().enumerate() {
                let j = (p - i) as u64;
                let x = Ordinal::term(Ordinal::from_u64(e), Nat::from(j - 1));
                sum = ord_add(&sum, &ord_sp(c, conv).mul_omega_pow(&x));
            }
            sum
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpMirrorStep {
    pub t: u64,
    pub insertion: Insertion,
    pub convention: OrdConvention,
    pub ord_before: String,
    pub ord_after: String,
    pub predicted: String,
    pub matches: bool,
}

/// Runs up to `horizon` steps under one insertion rule and checks Eq 4.8 style
/// agreement of ord_sp with the fundamental sequence.
pub fn mirror_check_sp(b: &SkewTree, horizon: u64, ins: Insertion, conv: OrdConvention) -> Result<Vec<SpMirrorStep>> {
    let mut out = Vec::new();
    let mut cur = b.clone();
    for t in 1..=horizon {
        if cur.is_trivial() {
            break;
        }
        let tn = Nat::from(t);
        let next = step_sp(&cur, &tn, ins)?;
        let before = ord_sp(&cur, conv);
        let after = ord_sp(&next, conv);
        let pred = fund_seq(&before, &tn);
        out.push(SpMirrorStep {
            t,
            insertion: ins,
            convention: conv,
            matches: pred == after,
            ord_before: before.to_string(),
            ord_after: after.to_string(),
            predicted: pred.to_string(),
        });
        cur = next;
    }
    Ok(out)
}

/// All four (insertion, convention) combinations.
pub fn mirror_check_sp_all(b: &SkewTree, horizon: u64) -> Result<Vec<SpMirrorStep>> {
    let mut out = Vec::new();
    for ins in [Insertion::MirrorExact, Insertion::PaperLiteral] {
        for conv in [OrdConvention::Default, OrdConvention::Printed] {
            out.extend(mirror_check_sp(b, horizon, ins, conv)?);
        }
    }
    Ok(out)
}

/// T^sp(b·σ₁^k) through H_{ord_sp(b)}(k+1) − 1.
pub fn t_sp_hardy(b: &SkewTree, k: u64, budget_bits: u64) -> Result<Nat> {
    let h = hardy(
        &ord_sp(b, OrdConvention::Default),
        &Nat::from(k + 1),
        Variant::Standard,
        budget_bits,
    )?;
    Ok(h - 1u32)
}

/// b_k = ⟨σ₁, 1⟩_{k+3,2}.
pub fn b_k(k: u8) -> SkewTree {
    SkewTree::Node {
        n: k + 3,
        children: vec![SkewTree::leaf(1), SkewTree::trivial()],
    }
}

/// U^sp(k) = T^sp(b_k σ₁^k) + 1 by direct iteration.
pub fn u_sp(k: u8, max_steps: u64) -> Result<Nat> {
    let b = b_k(k).mul_sigma1_pow(k as u64);
    Ok(t_sp(&b, max_steps, Insertion::MirrorExact)? + 1u32)
}

/// The B_{n−1}⁺-splitting (s_P, …, s_1) of a special n-braid as words; s_k is
/// flipped in the product exactly when k is even.
pub fn splitting(b: &SkewTree) -> Result<Vec<Vec<u8>>> {
    let SkewTree::Node { n, children } = b else {
        return Ok(vec![b.word()?]);
    };
    let n = *n;
    let p = children.len();
    let tau = tau(n);
    let mut out = Vec::new();
    if p % 2 == 0 {
        out.push(vec![1]);
    }
    for (i, c) in children.iter().enumerate() {
        let k = p - i;
        let mut w = Vec::new();
        if !(p % 2 == 1 && k == p) {
            w.extend(&tau);
        }
        w.extend(c.word()?);
        if k > 1 {
            w.push(1);
        }
        out.push(w);
    }
    Ok(out)
}

/// Product φ^{P−1}s_P ⋯ φ s₂·s₁ at level n.
pub fn splitting_product(n: u8, factors: &[Vec<u8>]) -> Vec<u8> {
    let total = factors.len();
    let mut w = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let k = total - i;
        if k.is_multiple_of(2) {
            w.extend(flip(n, f));
        } else {
            w.extend(f);
        }
    }
    w
}

/// Each partial product φ^{P−k}s_P ⋯ s_k is repetitive and ends with σ₁.
pub fn splitting_is_valid(n: u8, factors: &[Vec<u8>]) -> bool {
    let total = factors.len();
    (1..=total).all(|k| {
        let head = &factors[..=total - k];
        let w = splitting_product(n, head);
        w.is_empty() || (w.last() == Some(&1) && is_repetitive(&w))
    })
}

/// Canonical trees with leaves ≤ `max_weight` in total, level ≤ `max_level`,
/// and at most `max_children` components per node.
pub fn population(max_weight: u64, max_level: u8, max_children: usize) -> Vec<SkewTree> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(trees_exact(w, max_level, max_children));
    }
    out
}

/// Trees of level ≤ lvl with leaf weight exactly w.
fn trees_exact(w: u64, lvl: u8, max_children: usize) -> Vec<SkewTree> {
    let mut out = vec![SkewTree::leaf(w)];
    for n in 3..=lvl {
        for p in 2..=max_children {
            for comp in compositions(w, p) {
                if comp[0] == 0 {
                    continue;
                }
                let options: Vec<Vec<SkewTree>> = comp.iter().map(|&x| trees_exact(x, n - 1, max_children)).collect();
                let mut acc = Vec::new();
                product(&options, &mut acc, &mut |cs| {
                    if !cs[0].is_trivial() {
                        out.push(SkewTree::Node {
                            n,
                            children: cs.to_vec(),
                        });
                    }
                });
            }
        }
    }
    out
}

fn compositions(w: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 1 {
        return vec![vec![w]];
    }
    let mut out = Vec::new();
    for first in 0..=w {
        for mut rest in compositions(w - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn product(options: &[Vec<SkewTree>], acc: &mut Vec<SkewTree>, f: &mut impl FnMut(&[SkewTree])) {
    if acc.len() == options.len() {
        f(acc);
        return;
    }
    for o in &options[acc.len()] {
        acc.push(o.clone());
        product(options, acc, f);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SkewTree {
        s.parse().unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(t("[3: <2>, <0>]").word().unwrap(), vec![1, 2, 2, 2, 2, 1]);
        assert_eq!(t("[3: <1>, <0>, <0>]").word().unwrap(), vec![1, 1, 2, 2, 1]);
        assert_eq!(t("<1>").word().unwrap(), vec![1]);
        assert!("[3: <0>, <1>]".parse::<SkewTree>().is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_special(3, &[1, 2, 2, 2, 2, 1]).unwrap(), t("[3: <2>, <0>]"));
        assert!(matches!(parse_special(3, &[2, 1, 2]), Err(Error::NotSpecial { .. })));
        assert_eq!(parse_special(3, &[1, 1, 1]).unwrap(), SkewTree::leaf(3));
    }

    #[test]
    fn thetas() {
        let one = Nat::one();
        assert_eq!(theta_sp(3, &one).unwrap().word().unwrap(), vec![1]);
        assert_eq!(
            theta_sp(3, &Nat::from(2u32)).unwrap().word().unwrap(),
            vec![1, 2, 2, 2, 1]
        );
        assert_eq!(
            theta_sp(3, &Nat::from(3u32)).unwrap().word().unwrap(),
            vec![1, 1, 2, 2, 1]
        );
        assert_eq!(
            theta_sp(3, &Nat::from(4u32)).unwrap().word().unwrap(),
            vec![1, 2, 2, 2, 1, 1, 2, 2, 1]
        );
    }

    #[test]
    fn example_run() {
        let tr = run_sp(&t("[3: <2>, <0>]"), 100, Insertion::MirrorExact).unwrap();
        let words: Vec<Vec<u8>> = tr.states.iter().map(|s| s.word().unwrap()).collect();
        let want: Vec<Vec<u8>> = vec![
            vec![1, 2, 2, 2, 2, 1],
            vec![1, 2, 2, 2, 1, 1],
            vec![1, 2, 2, 2, 1],
            vec![1, 1, 1],
            vec![1, 1],
            vec![1],
            vec![],
        ];
        assert_eq!(words, want);
    }

    #[test]
    fn ordinals() {
        assert_eq!(ord_sp(&t("[3: <2>, <0>]"), OrdConvention::Default).to_string(), "w*2");
        for k in 0..4u8 {
            let want: Ordinal = format!("w^(w^({k}))").parse().unwrap();
            assert_eq!(ord_sp(&b_k(k), OrdConvention::Default), want);
        }
    }

    #[test]
    fn order() {
        assert_eq!(
            compare_special(&t("[3: <1>, <1>]"), &t("[3: <1>, <0>]")),
            Ordering::Greater
        );
        assert_eq!(
            compare_special(&t("[3: <9>, <9>]"), &t("[4: <1>, <0>]")),
            Ordering::Less
        );
        assert_eq!(compare_special(&SkewTree::leaf(3), &SkewTree::leaf(5)), Ordering::Less);
    }

    #[test]
    fn split_example() {
        let b = t("[3: <2>, <0>]");
        let f = splitting(&b).unwrap();
        assert_eq!(f, vec![vec![1], vec![1, 1, 1, 1], vec![1]]);
        assert_eq!(splitting_product(3, &f), b.word().unwrap());
        assert!(splitting_is_valid(3, &f));
    }

    #[test]
    fn hardy_route() {
        assert_eq!(t_sp_hardy(&t("[3: <2>, <0>]"), 0, 1 << 16).unwrap(), Nat::from(6u32));
        assert_eq!(t_sp_hardy(&SkewTree::leaf(7), 0, 1 << 16).unwrap(), Nat::from(7u32));
        assert_eq!(u_sp(0, 1000).unwrap(), Nat::from(3u32));
    }
}
