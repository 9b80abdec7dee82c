//! (k,f)-simple descending sequences, their longest instances, and the dilated
//! sequence built from a 𝒢₃-sequence.

use std::collections::HashMap;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::divisors::{enumerate_divisors, enumerate_s, EnumMode, EnumTable, RECURSIVE_CAP};
use crate::error::{Error, Result};
use crate::expseq::{delta3, ExpSeq};
use crate::garside::complexity;
use crate::growth::{ackermann_diag, f_omega, f_omega_root, iroot, AckOutcome, GrowthFn};
use crate::hydra;
use crate::Nat;

#[derive(Debug, Clone)]
pub struct SimpleSeq {
    pub k: u64,
    pub f: GrowthFn,
    pub entries: Vec<ExpSeq>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    NotDescending(usize),
    TooComplex { t: usize, complexity: u64, bound: String },
}

/// Checks descent and ‖b_t‖ ≤ k + f(t); reports the first violation.
pub fn is_simple(entries: &[ExpSeq], k: u64, f: GrowthFn) -> Result<Option<Violation>> {
    for (t, b) in entries.iter().enumerate() {
        if t > 0 && entries[t - 1] <= *b {
            return Ok(Some(Violation::NotDescending(t)));
        }
        let c = complexity(b)?;
        let bound = f.eval(t as u64) + k;
        if Nat::from(c) > bound {
            return Ok(Some(Violation::TooComplex {
                t,
                complexity: c,
                bound: bound.to_string(),
            }));
        }
    }
    Ok(None)
}

/// Largest entry of an increasing list strictly below b.
fn largest_below(entries: &[ExpSeq], b: &ExpSeq) -> Option<ExpSeq> {
    let i = entries.partition_point(|x| x < b);
    i.checked_sub(1).map(|i| entries[i].clone())
}

/// The largest braid strictly below b with complexity ≤ ℓ.
pub fn max_below(b: &ExpSeq, l: u64) -> Result<Option<ExpSeq>> {
    let table = enumerate_divisors(l, EnumMode::Recursive)?;
    Ok(max_below_in(&table, b))
}

pub fn max_below_in(table: &EnumTable, b: &ExpSeq) -> Option<ExpSeq> {
    largest_below(table.entries(), b)
}

/// Memoized S_{K,ℓ} tables: every later entry of a sequence starting at or
/// below Δ₃^K lies in S_{K,ℓ}.
struct STables {
    top: u64,
    cache: HashMap<u64, Vec<ExpSeq>>,
}

impl STables {
    fn new(top: u64) -> Self {
        STables {
            top,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, l: u64) -> Result<&[ExpSeq]> {
        if !self.cache.contains_key(&l) {
            let v = if l == 0 {
                vec![ExpSeq::trivial()]
            } else if l <= self.top {
                enumerate_s(l, l)?
            } else if self.top == 0 {
                vec![ExpSeq::trivial()]
            } else {
                enumerate_s(self.top, l)?
            };
            self.cache.insert(l, v);
        }
        Ok(&self.cache[&l])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    #[serde(rename = "TRUE_MAX")]
    TrueMax,
    #[serde(rename = "LOWER_BOUND")]
    LowerBound,
}

#[derive(Debug, Clone, Serialize)]
pub struct Longest {
    pub length: u64,
    pub outcome: Outcome,
    /// Why the search stopped early, for lower bounds.
    pub reason: Option<String>,
    #[serde(serialize_with = "ser_seqs")]
    pub witness: Vec<ExpSeq>,
}

fn ser_seqs<S: serde::Serializer>(v: &[ExpSeq], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

/// Greedy longest (k,f)-simple sequence: start at Δ₃^{k+f(0)} and repeatedly
/// take the largest admissible braid below. `max_len` bounds the length.
pub fn longest_simple(k: u64, f: GrowthFn, max_len: u64) -> Result<Longest> {
    let bound = |t: u64| -> Option<u64> { (f.eval(t) + k).to_u64() };
    let lower = |w: Vec<ExpSeq>, why: String| Longest {
        length: w.len() as u64,
        outcome: Outcome::LowerBound,
        reason: Some(why),
        witness: w,
    };
    let Some(top) = bound(0) else {
        return Ok(lower(Vec::new(), "bound at t = 0 overflows".into()));
    };
    let mut tables = STables::new(top);
    let mut witness = vec![delta3(top)];
    loop {
        let last = witness.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let t = witness.len() as u64;
        if t >= max_len {
            return Ok(lower(witness, format!("length budget {max_len} reached")));
        }
        let Some(l) = bound(t) else {
            return Ok(lower(witness, format!("bound at t = {t} overflows")));
        };
        let entries = match tables.get(l) {
            Ok(e) => e,
            Err(Error::Cap(why)) => return Ok(lower(witness, why)),
            Err(e) => return Err(e),
        };
        let next = largest_below(entries, last).expect("1 lies below every nontrivial braid");
        witness.push(next);
    }
    Ok(Longest {
        length: witness.len() as u64,
        outcome: Outcome::TrueMax,
        reason: None,
        witness,
    })
}

/// Exhaustive maximum by depth-first search over all admissible continuations.
/// Bounds k + f(t) must stay within the recursive enumeration cap.
pub fn longest_simple_exhaustive(k: u64, f: GrowthFn, max_len: u64) -> Result<u64> {
    let mut tables: HashMap<u64, EnumTable> = HashMap::new();
    let mut table_for = |t: u64| -> Result<EnumTable> {
        let l = (f.eval(t) + k)
            .to_u64()
            .filter(|&l| l <= RECURSIVE_CAP)
            .ok_or_else(|| Error::Cap(format!("bound at t = {t} beyond enumeration cap")))?;
        if let std::collections::hash_map::Entry::Vacant(e) = tables.entry(l) {
            e.insert(enumerate_divisors(l, EnumMode::Recursive)?);
        }
        Ok(tables[&l].clone())
    };
    let mut memo: HashMap<(ExpSeq, u64), u64> = HashMap::new();
    // best(b, t) = longest admissible continuation after placing b at index t.
    fn best(
        b: &ExpSeq,
        t: u64,
        max_len: u64,
        table_for: &mut dyn FnMut(u64) -> Result<EnumTable>,
        memo: &mut HashMap<(ExpSeq, u64), u64>,
    ) -> Result<u64> {
        if t + 1 >= max_len || b.is_trivial() {
            return Ok(0);
        }
        if let Some(&v) = memo.get(&(b.clone(), t)) {
            return Ok(v);
        }
        let table = table_for(t + 1)?;
        let mut m = 0;
        for c in table.entries().iter().filter(|c| *c < b) {
            m = m.max(1 + best(c, t + 1, max_len, table_for, memo)?);
        }
        memo.insert((b.clone(), t), m);
        Ok(m)
    }
    let first = table_for(0)?;
    let mut m = 0;
    for b in first.entries() {
        m = m.max(1 + best(b, 0, max_len, &mut table_for, &mut memo)?);
    }
    Ok(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct WoReport {
    pub k: u64,
    pub f: String,
    pub length: u64,
    pub outcome: Outcome,
    pub reason: Option<String>,
    pub millis: u128,
    pub witness: Vec<String>,
}

pub fn wo_experiment(k: u64, f: GrowthFn, max_len: u64) -> Result<WoReport> {
    let start = Instant::now();
    let r = longest_simple(k, f, max_len)?;
    Ok(WoReport {
        k,
        f: f.to_string(),
        length: r.length,
        outcome: r.outcome,
        reason: r.reason,
        millis: start.elapsed().as_millis(),
        witness: r.witness.iter().map(|b| b.to_string()).collect(),
    })
}

fn ilog(t: u64) -> u32 {
    64 - t.leading_zeros()
}

fn iroot_u64(x: u64, k: u32) -> u64 {
    iroot(&Nat::from(x), k).to_u64().expect("root fits")
}

/// Left side of the h(k) inequality: 5k + 11 + (log t)² + 3(k+1)·⌊2^{log t}^{1/(k+1)}⌋.
pub fn h_lhs(k: u64, t: u64) -> u64 {
    let lt = ilog(t) as u64;
    let r = iroot(&(Nat::from(1u32) << lt), k as u32 + 1)
        .to_u64()
        .expect("root fits");
    5 * k + 11 + lt * lt + 3 * (k + 1) * r
}

/// Right side: ⌊t^{1/k}⌋.
pub fn h_rhs(k: u64, t: u64) -> u64 {
    iroot_u64(t, k as u32)
}

#[derive(Debug, Clone, Serialize)]
pub struct HReport {
    pub k: u64,
    pub window: u64,
    pub h: u64,
    pub lhs_monotone: bool,
    pub rhs_monotone: bool,
}

/// Least h ≥ 4k+10 with the inequality on all of [h, h·window].
///
/// The left side is constant on dyadic blocks [2^j, 2^{j+1}) and the right
/// side is nondecreasing, so a failure inside a block is found by bisection
/// from the block's largest failing point.
pub fn h_of(k: u64, window: u64) -> Result<HReport> {
    if k == 0 || window == 0 {
        return Err(Error::Precondition("h_of needs k ≥ 1 and window ≥ 1".into()));
    }
    let holds = |t: u64| h_lhs(k, t) <= h_rhs(k, t);
    let mut h = 4 * k + 10;
    loop {
        let end = h
            .checked_mul(window)
            .ok_or_else(|| Error::Cap("h·window overflows".into()))?;
        let mut pts = vec![h];
        pts.extend((ilog(h)..=ilog(end)).map(|j| 1u64 << j).filter(|&x| x > h && x <= end));
        let mut fail = None;
        for &t in &pts {
            if !holds(t) {
                let mut lo = t;
                let mut hi = ((1u64 << ilog(t)) - 1).min(end);
                while lo < hi {
                    let m = lo + (hi - lo).div_ceil(2);
                    if holds(m) {
                        hi = m - 1;
                    } else {
                        lo = m;
                    }
                }
                fail = Some(lo);
            }
        }
        match fail {
            None => break,
            Some(x) => h = x + 1,
        }
    }
    let end = h * window;
    let mut pts: Vec<u64> = vec![h];
    pts.extend((ilog(h)..=ilog(end)).map(|j| 1u64 << j).filter(|&x| x > h && x <= end));
    pts.push(end);
    Ok(HReport {
        k,
        window,
        h,
        lhs_monotone: pts.windows(2).all(|p| h_lhs(k, p[0]) <= h_lhs(k, p[1])),
        rhs_monotone: pts.windows(2).all(|p| h_rhs(k, p[0]) <= h_rhs(k, p[1])),
    })
}

/// b'_t of the dilated sequence for fixed k and h.
pub struct Dilation {
    pub k: u64,
    pub h: u64,
    g: Vec<ExpSeq>,
    s: HashMap<u64, Vec<ExpSeq>>,
}

impl Dilation {
    pub fn new(k: u64, h: u64) -> Self {
        Dilation {
            k,
            h,
            g: vec![delta3(k)],
            s: HashMap::new(),
        }
    }

    fn g_entry(&mut self, i: usize) -> Result<ExpSeq> {
        while self.g.len() <= i {
            let last = self.g.last().unwrap();
            if last.is_trivial() {
                return Err(Error::IndexRange {
                    index: format!("G3 entry {i}"),
                    size: self.g.len(),
                });
            }
            let next = hydra::step_u64(last, self.g.len() as u64)?;
            self.g.push(next);
        }
        Ok(self.g[i].clone())
    }

    pub fn at(&mut self, t: u64) -> Result<ExpSeq> {
        let k = self.k;
        if t <= self.h {
            let mut v = vec![2u64; 2 * k as usize + 4];
            v.push(self.h + 2 - t);
            return ExpSeq::from_u64s(&v);
        }
        let lt = ilog(t);
        let e = self
            .g_entry(lt as usize)?
            .to_u64s()
            .ok_or_else(|| Error::Cap("huge entry".into()))?;
        let lt_bound = (k + 1) * iroot_u64(1u64 << lt, k as u32 + 1);
        if let std::collections::hash_map::Entry::Vacant(e) = self.s.entry(lt_bound) {
            e.insert(enumerate_s(k, lt_bound)?);
        }
        let s = &self.s[&lt_bound];
        let idx = (1u64 << lt) - t;
        if idx == 0 || idx as usize > s.len() {
            return Err(Error::IndexRange {
                index: format!("S entry {idx} at t = {t}"),
                size: s.len(),
            });
        }
        let ep = s[idx as usize - 1].to_u64s().expect("small");
        let q = ep.len();
        if q > k as usize + 2 {
            return Err(Error::Precondition(format!(
                "S entry of breadth {q} exceeds k + 2 at t = {t}"
            )));
        }
        let p = e.len();
        let mut out: Vec<u64> = e[..p.saturating_sub(2)].to_vec();
        if p >= 2 {
            out.push(e[p - 2] + 1);
        }
        if p >= 1 {
            out.push(e[p - 1] + 2);
        }
        out.extend(std::iter::repeat_n(2, k as usize + 2 - q));
        for (i, x) in ep.iter().enumerate() {
            out.push(if i == 0 { x + 2 } else { *x });
        }
        ExpSeq::from_u64s(&out).map_err(|_| Error::NotNormal(format!("{out:?} at t = {t}")))
    }
}

pub fn dilate(k: u64, t: u64, h: u64) -> Result<ExpSeq> {
    Dilation::new(k, h).at(t)
}

#[derive(Debug, Clone, Serialize)]
pub struct DilationRow {
    pub t: u64,
    pub seq: String,
    pub complexity: u64,
    /// 2h + f_ω(t).
    pub bound: String,
    /// 2h + ⌊t^{1/Ack⁻¹(t)}⌋.
    pub bound_root: String,
    pub within: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DilationReport {
    pub k: u64,
    pub h: u64,
    pub t_max: u64,
    pub rows: Vec<DilationRow>,
    pub descending: bool,
    pub all_normal: bool,
    pub all_within: bool,
    pub max_complexity: u64,
    /// Departures from the assumptions of the construction, reported as found.
    pub violations: Vec<String>,
}

/// Evaluates b'_t for t in [0, t_max] and audits descent, normality, and the bound.
pub fn dilation_report(k: u64, h: u64, t_max: u64) -> Result<DilationReport> {
    let mut d = Dilation::new(k, h);
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut prev: Option<ExpSeq> = None;
    let mut descending = true;
    let mut all_normal = true;
    let cutoff = Nat::from(t_max);
    let ack_k = match ackermann_diag(k, &cutoff) {
        AckOutcome::Value(v) => v.to_u64(),
        AckOutcome::AboveCutoff => None,
    };
    if let Some(a) = ack_k {
        if a < t_max {
            violations.push(format!("t > Ack({k}) = {a} lies outside the regime t ≤ Ack(k)"));
        }
    }
    if h < 4 * k + 10 {
        violations.push(format!("h = {h} below 4k + 10"));
    }
    for t in 0..=t_max {
        let b = match d.at(t) {
            Ok(b) => b,
            Err(Error::NotNormal(s)) => {
                all_normal = false;
                violations.push(format!("not normal: {s}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        if let Some(p) = &prev {
            if b >= *p {
                descending = false;
                violations.push(format!("not descending at t = {t}"));
            }
        }
        let c = complexity(&b)?;
        let tn = Nat::from(t);
        let (fw, fr) = if t == 0 {
            (Nat::from(0u32), Nat::from(0u32))
        } else {
            (f_omega(&tn), f_omega_root(&tn))
        };
        let bound = fw + 2 * h;
        let bound_root = fr + 2 * h;
        let within = Nat::from(c) <= bound;
        rows.push(DilationRow {
            t,
            seq: b.to_string(),
            complexity: c,
            bound: bound.to_string(),
            bound_root: bound_root.to_string(),
            within,
        });
        prev = Some(b);
    }
    Ok(DilationReport {
        k,
        h,
        t_max,
        descending,
        all_normal,
        all_within: rows.iter().all(|r| r.within),
        max_complexity: rows.iter().map(|r| r.complexity).max().unwrap_or(0),
        rows,
        violations,
    })
}

/// Smallest k ≤ max_k for which every S index over [0, window·h(k)] is in range.
pub fn smallest_dilation_k(max_k: u64, window: u64) -> Result<Option<(u64, u64)>> {
    for k in 1..=max_k {
        let h = h_of(k, 16)?.h;
        let mut d = Dilation::new(k, h);
        let mut ok = true;
        for t in (h + 1)..=(window * h) {
            match d.at(t) {
                Ok(_) | Err(Error::NotNormal(_)) => {}
                Err(Error::IndexRange { .. }) | Err(Error::Precondition(_)) | Err(Error::Cap(_)) => {
                    ok = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if ok {
            return Ok(Some((k, h)));
        }
    }
    Ok(None)
}
