//! Increasing enumeration of Div(Δ₃^ℓ), the θ braids, and the counting formulas.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expseq::{delta3, emin, normalize_letters, word_of_raw, ExpSeq};
use crate::garside::{complexity_word, divides_delta_pow};
use crate::Nat;

pub const RECURSIVE_CAP: u64 = 8;
pub const BRUTE_CAP: u64 = 5;
/// Refuse enumerate_S when the candidate space exceeds this many sequences.
pub const S_CANDIDATE_CAP: u64 = 20_000_000;

const CACHE_FORMAT: u32 = 1;

/// Word of θ_ℓ: the length-ℓ suffix of …σ₁²σ₂²σ₁²σ₂.
pub fn theta_word(l: u64) -> Vec<u8> {
    const PAT: [u8; 4] = [2, 1, 1, 2];
    let mut w: Vec<u8> = (0..l as usize).map(|i| PAT[i % 4]).collect();
    w.reverse();
    w
}

pub fn theta(l: u64) -> ExpSeq {
    normalize_letters(&theta_word(l))
}

/// Words of 1, σ₁, …, σ₁^ℓ.
fn sigma1_pows(l: u64) -> impl Iterator<Item = Vec<u8>> {
    (0..=l as usize).map(|i| vec![1u8; i])
}

fn theta_block(m: u64, l: u64) -> Vec<Vec<u8>> {
    let th = theta_word(m);
    sigma1_pows(l)
        .map(|s| {
            let mut w = th.clone();
            w.extend(s);
            w
        })
        .collect()
}

/// Σ_{ℓ,m} as words, by the four-case recursion on m mod 4.
///
/// For odd m the middle block is θ_{m−2}σ₁^{(ℓ−1)} between Σ_{ℓ−1,m−2} and
/// Σ_{ℓ−1,m−1}; for even m it is θ_{m−1}σ₁^{(ℓ−1)} between Σ_{ℓ−1,m−1} and
/// Σ_{ℓ−1,m}.
pub fn sigma_block_words(l: u64, m: u64) -> Vec<Vec<u8>> {
    if l == 0 || m <= 1 || m >= 2 * l {
        return Vec::new();
    }
    let prefix: &[u8] = match m % 4 {
        0 => &[1],
        1 => &[2, 1],
        2 => &[2],
        _ => &[1, 2],
    };
    let (a, th, c) = if m % 2 == 1 {
        (m - 2, m - 2, m - 1)
    } else {
        (m - 1, m - 1, m)
    };
    let mut inner = sigma_block_words(l - 1, a);
    inner.extend(theta_block(th, l - 1));
    inner.extend(sigma_block_words(l - 1, c));
    inner
        .into_iter()
        .map(|w| {
            let mut v = prefix.to_vec();
            v.extend(w);
            v
        })
        .collect()
}

pub fn sigma_block(l: u64, m: u64) -> Vec<ExpSeq> {
    sigma_block_words(l, m).iter().map(|w| normalize_letters(w)).collect()
}

/// Σ̃_{ℓ,m} = Σ_{ℓ,2m−1} + θ_{2m−1}σ₁^{(ℓ)} + Σ_{ℓ,2m}.
pub fn sigma_tilde(l: u64, m: u64) -> Vec<ExpSeq> {
    let mut w = sigma_block_words(l, 2 * m - 1);
    w.extend(theta_block(2 * m - 1, l));
    w.extend(sigma_block_words(l, 2 * m));
    w.iter().map(|x| normalize_letters(x)).collect()
}

/// c_{ℓ,m} = C(ℓ+3, m+1) − ℓ − 3, the size of Σ̃_{ℓ,m} for 1 ≤ m ≤ ℓ.
pub fn count_sigma(l: u64, m: u64) -> Result<Nat> {
    if m < 1 || m > l {
        return Err(Error::Precondition(format!(
            "count_sigma needs 1 ≤ m ≤ ℓ, got ℓ={l}, m={m}"
        )));
    }
    Ok(binomial(Nat::from(l + 3), Nat::from(m + 1)) - Nat::from(l + 3))
}

/// card(S_{k,ℓ}) = Σ_{m=1}^{k} C(ℓ+3, m+1) − k + 1.
pub fn card_s(k: u64, l: u64) -> Result<Nat> {
    if k < 1 || l < k {
        return Err(Error::Precondition(format!("card_S needs ℓ ≥ k ≥ 1, got k={k}, ℓ={l}")));
    }
    let mut s = Nat::zero();
    for m in 1..=k {
        s += binomial(Nat::from(l + 3), Nat::from(m + 1));
    }
    Ok(s + 1u32 - Nat::from(k))
}

pub fn divisor_count(l: u64) -> Nat {
    (Nat::from(1u32) << (l + 3)) - Nat::from(3 * l + 7)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    Recursive,
    Brute,
}

impl std::str::FromStr for EnumMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(EnumMode::Recursive),
            "brute" => Ok(EnumMode::Brute),
            _ => Err(Error::Parse {
                what: "enumeration mode",
                detail: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumTable {
    pub l: u64,
    entries: Vec<ExpSeq>,
    rank: HashMap<ExpSeq, usize>,
}

impl EnumTable {
    fn from_entries(l: u64, entries: Vec<ExpSeq>) -> Self {
        let rank = entries.iter().enumerate().map(|(i, e)| (e.clone(), i + 1)).collect();
        EnumTable { l, entries, rank }
    }

    pub fn entries(&self) -> &[ExpSeq] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rank counted from 1.
    pub fn rank_of(&self, b: &ExpSeq) -> Option<usize> {
        self.rank.get(b).copied()
    }

    pub fn get(&self, rank: usize) -> Option<&ExpSeq> {
        rank.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    pub fn is_increasing(&self) -> bool {
        self.entries.windows(2).all(|p| p[0] < p[1])
    }
}

pub fn enumerate_divisors(l: u64, mode: EnumMode) -> Result<EnumTable> {
    match mode {
        EnumMode::Recursive => {
            if l > RECURSIVE_CAP {
                return Err(Error::Cap(format!(
                    "recursive enumeration capped at ℓ = {RECURSIVE_CAP}"
                )));
            }
            Ok(EnumTable::from_entries(l, sigma_sequence(l)))
        }
        EnumMode::Brute => {
            if l > BRUTE_CAP {
                return Err(Error::Cap(format!("brute enumeration capped at ℓ = {BRUTE_CAP}")));
            }
            let mut v: Vec<ExpSeq> = brute_divisors(l)?.into_iter().collect();
            v.sort();
            Ok(EnumTable::from_entries(l, v))
        }
    }
}

/// Σ_ℓ = θ₀σ₁^{(ℓ)} + Σ_{ℓ,1} + θ₁σ₁^{(ℓ)} + … + θ_{2ℓ}σ₁^{(ℓ)}.
fn sigma_sequence(l: u64) -> Vec<ExpSeq> {
    let mut out = Vec::new();
    for m in 0..=2 * l {
        out.extend(theta_block(m, l).iter().map(|w| normalize_letters(w)));
        if m < 2 * l {
            out.extend(sigma_block(l, m + 1));
        }
    }
    out
}

/// Closure of 1 under right multiplication by σ_i inside Div(Δ₃^ℓ).
fn brute_divisors(l: u64) -> Result<BTreeSet<ExpSeq>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(ExpSeq::trivial());
    queue.push_back(Vec::<u8>::new());
    while let Some(w) = queue.pop_front() {
        for s in [1u8, 2] {
            let mut v = w.clone();
            v.push(s);
            let e = normalize_letters(&v);
            if !seen.contains(&e) && divides_delta_pow(&e, l)? {
                seen.insert(e);
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}

/// Increasing enumeration of S_{k,ℓ} = {b ≤ Δ₃^k : ‖b‖ ≤ ℓ}.
///
/// Generated directly: every such b is either of breadth ≤ k+1 or of the form
/// Δ₃^k-prefix (1,2,…,2,1,e) with e ≤ k, and has length ≤ 3ℓ.
pub fn enumerate_s(k: u64, l: u64) -> Result<Vec<ExpSeq>> {
    if k < 1 || l < k {
        return Err(Error::Precondition(format!(
            "S_{{k,ℓ}} needs ℓ ≥ k ≥ 1, got k={k}, ℓ={l}"
        )));
    }
    let budget = 3 * l;
    let space = binomial(Nat::from(budget + k + 1), Nat::from(k + 1));
    if space > Nat::from(S_CANDIDATE_CAP) {
        return Err(Error::Cap(format!("S_{{{k},{l}}}: candidate space {space} too large")));
    }
    let top = delta3(k);
    let mut out = BTreeSet::new();
    out.insert(ExpSeq::trivial());
    let mut acc = Vec::new();
    for p in 1..=(k as usize + 1) {
        gen_normal(p, budget, &mut acc, &mut |e| {
            let w = word_of_raw(e);
            if complexity_word(&w) <= l {
                out.insert(ExpSeq::from_u64s(e).expect("normal by construction"));
            }
        });
    }
    for e1 in 0..=k {
        let mut v = top.to_u64s().expect("small");
        *v.last_mut().unwrap() = e1;
        let w = word_of_raw(&v);
        if complexity_word(&w) <= l {
            out.insert(ExpSeq::from_u64s(&v).expect("normal"));
        }
    }
    let v: Vec<ExpSeq> = out.into_iter().filter(|b| *b <= top).collect();
    Ok(v)
}

/// All normal sequences of breadth exactly p with sum ≤ budget, leading first.
fn gen_normal(p: usize, budget: u64, acc: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    let i = acc.len();
    if i == p {
        f(acc);
        return;
    }
    let pos = p - i;
    let lo = if i == 0 { 1 } else { emin(pos) };
    let used: u64 = acc.iter().sum();
    // the remaining positions need at least their minima
    let reserve: u64 = (1..pos).map(emin).sum();
    let mut x = lo;
    while used + x + reserve <= budget {
        acc.push(x);
        gen_normal(p, budget, acc, f);
        acc.pop();
        x += 1;
    }
}

/// Directory for cached tables: `BRAIDWO_CACHE_DIR`, else `./.braid-cache`.
pub fn cache_dir() -> PathBuf {
    std::env::var_os("BRAIDWO_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".braid-cache"))
}

fn cache_path(dir: &Path, l: u64) -> PathBuf {
    dir.join(format!("div-{l}.tsv"))
}

/// Writes the table to a temporary file and renames it into place.
pub fn save_table(dir: &Path, table: &EnumTable) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, table.l);
    let tmp = dir.join(format!(".div-{}.tsv.{}.tmp", table.l, std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        writeln!(f, "# braidwo-div v{CACHE_FORMAT} l={} count={}", table.l, table.len())?;
        for (i, e) in table.entries.iter().enumerate() {
            writeln!(f, "{}\t{}", i + 1, e)?;
        }
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn load_table(dir: &Path, l: u64) -> Result<Option<EnumTable>> {
    let path = cache_path(dir, l);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let bad = |d: &str| Error::Parse {
        what: "cache file",
        detail: format!("{}: {d}", path.display()),
    };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty"))?;
    let want = format!("# braidwo-div v{CACHE_FORMAT} l={l} count=");
    let count: usize = header
        .strip_prefix(&want)
        .and_then(|c| c.parse().ok())
        .ok_or_else(|| bad("header"))?;
    let mut entries = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let (r, e) = line.split_once('\t').ok_or_else(|| bad(line))?;
        if r.parse::<usize>().ok() != Some(i + 1) {
            return Err(bad(line));
        }
        entries.push(e.parse::<ExpSeq>()?);
    }
    if entries.len() != count {
        return Err(bad("truncated"));
    }
    Ok(Some(EnumTable::from_entries(l, entries)))
}

/// Loads Div(Δ₃^ℓ) from the cache, building and storing it on a miss.
pub fn cached_divisors(dir: &Path, l: u64) -> Result<EnumTable> {
    if let Some(t) = load_table(dir, l)? {
        return Ok(t);
    }
    let t = enumerate_divisors(l, EnumMode::Recursive)?;
    save_table(dir, &t)?;
    Ok(t)
}

/// Brute-force S_{k,ℓ}: the prefix of the sorted Div(Δ₃^ℓ) up to Δ₃^k.
pub fn s_by_prefix(k: u64, table: &EnumTable) -> Vec<ExpSeq> {
    let top = delta3(k);
    table.entries().iter().filter(|b| **b <= top).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &[u64]) -> ExpSeq {
        ExpSeq::from_u64s(x).unwrap()
    }

    #[test]
    fn thetas() {
        assert_eq!(theta(0), ExpSeq::trivial());
        assert_eq!(theta_word(2), vec![1, 2]);
        for k in 1..6 {
            assert_eq!(theta(2 * k), crate::expseq::delta_p(k));
        }
    }

    #[test]
    fn small_tables() {
        let t = enumerate_divisors(1, EnumMode::Recursive).unwrap();
        let want = [s(&[]), s(&[1]), s(&[1, 0]), s(&[1, 1]), s(&[1, 1, 0]), s(&[1, 1, 1])];
        assert_eq!(t.entries(), want);
        assert_eq!(enumerate_divisors(0, EnumMode::Brute).unwrap().len(), 1);
        assert_eq!(enumerate_divisors(2, EnumMode::Brute).unwrap().len(), 19);
        assert!(enumerate_divisors(9, EnumMode::Recursive).is_err());
        assert!(enumerate_divisors(6, EnumMode::Brute).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_sigma(3, 2).unwrap(), Nat::from(14u32));
        assert_eq!(card_s(1, 1).unwrap(), Nat::from(6u32));
        assert_eq!(card_s(2, 3).unwrap(), Nat::from(34u32));
        assert_eq!(card_s(1, 2).unwrap(), Nat::from(10u32));
        assert!(card_s(3, 2).is_err());
    }

    #[test]
    fn s_ends() {
        let v = enumerate_s(1, 1).unwrap();
        assert_eq!(v.first(), Some(&ExpSeq::trivial()));
        assert_eq!(v.last(), Some(&delta3(1)));
        assert_eq!(enumerate_s(1, 2).unwrap().len(), 10);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let t = cached_divisors(dir.path(), 3).unwrap();
        let u = load_table(dir.path(), 3).unwrap().unwrap();
        assert_eq!(t.entries(), u.entries());
        assert_eq!(u.rank_of(&delta3(3)), Some(u.len()));
    }
}
