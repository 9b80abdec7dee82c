//! Ordinals below ε₀ in Cantor normal form, fundamental sequences and the
//! Hardy hierarchy.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Nat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: Ordinal,
    pub coeff: Nat,
}

/// Σ ω^{exp_i}·coeff_i with strictly decreasing exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from_nat(Nat::one())
    }

    pub fn from_nat(n: Nat) -> Self {
        if n.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exp: Ordinal::zero(),
                coeff: n,
            }],
        }
    }

    pub fn from_u64(n: u64) -> Self {
        Ordinal::from_nat(Nat::from(n))
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// ω^α.
    pub fn omega_pow(alpha: Ordinal) -> Self {
        Ordinal::term(alpha, Nat::one())
    }

    /// ω^α·c.
    pub fn term(alpha: Ordinal, c: Nat) -> Self {
        if c.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exp: alpha, coeff: c }],
        }
    }

    /// Builds from terms, checking strict decrease and positive coefficients.
    pub fn from_terms(terms: Vec<Term>) -> Result<Self> {
        if terms.iter().any(|t| t.coeff.is_zero()) {
            return Err(Error::Parse {
                what: "ordinal",
                detail: "zero coefficient".into(),
            });
        }
        if terms.windows(2).any(|w| w[0].exp <= w[1].exp) {
            return Err(Error::Parse {
                what: "ordinal",
                detail: "exponents not strictly decreasing".into(),
            });
        }
        Ok(Ordinal { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_zero())
    }

    pub fn finite_value(&self) -> Option<Nat> {
        match self.terms.as_slice() {
            [] => Some(Nat::zero()),
            [t] if t.exp.is_zero() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exp.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exp.is_zero())
    }

    /// Ordinal sum, absorbing the terms of `self` below the leading exponent of `other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self.terms.iter().take_while(|t| t.exp >= lead.exp).cloned().collect();
        let mut rest = other.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exp == lead.exp {
                last.coeff += &lead.coeff;
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// ω^x·self.
    pub fn mul_omega_pow(&self, x: &Ordinal) -> Ordinal {
        Ordinal {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: x.add(&t.exp),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Finite exponent of a pure power ω^n (coefficient one), if that is what this is.
    fn pure_power_finite_exp(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [t] if t.coeff.is_one() => t.exp.finite_value().and_then(|n| n.to_u64()),
            _ => None,
        }
    }

    /// α < ω^ω.
    pub fn below_omega_omega(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_finite())
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let c = a.exp.cmp(&b.exp).then_with(|| a.coeff.cmp(&b.coeff));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn ord_cmp(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a.add(b)
}

/// Splits λ = γ + ω^δ into (γ, δ).
fn split_last(lambda: &Ordinal) -> (Ordinal, Ordinal) {
    let mut terms = lambda.terms.clone();
    let last = terms.pop().expect("nonzero");
    let delta = last.exp.clone();
    let c = last.coeff - 1u32;
    if !c.is_zero() {
        terms.push(Term {
            exp: last.exp,
            coeff: c,
        });
    }
    (Ordinal { terms }, delta)
}

/// Appends ω^e·c to γ; e must be below γ's last exponent.
fn push_term(mut gamma: Ordinal, exp: Ordinal, c: Nat) -> Ordinal {
    if !c.is_zero() {
        gamma.terms.push(Term { exp, coeff: c });
    }
    gamma
}

/// δ − 1 for a successor δ.
fn pred(delta: &Ordinal) -> Ordinal {
    let mut terms = delta.terms.clone();
    let last = terms.last_mut().expect("successor");
    last.coeff -= 1u32;
    if last.coeff.is_zero() {
        terms.pop();
    }
    Ordinal { terms }
}

/// λ[x] with the standard assignment: 0[x] = 0, (α+1)[x] = α,
/// (γ+ω^{δ+1})[x] = γ+ω^δ·x, (γ+ω^δ)[x] = γ+ω^{δ[x]} for limit δ.
pub fn fund_seq(lambda: &Ordinal, x: &Nat) -> Ordinal {
    if lambda.is_zero() {
        return Ordinal::zero();
    }
    let (gamma, delta) = split_last(lambda);
    if delta.is_zero() {
        gamma
    } else if delta.is_successor() {
        push_term(gamma, pred(&delta), x.clone())
    } else {
        let d = fund_seq(&delta, x);
        push_term(gamma, d, Nat::one())
    }
}

/// Braid-adapted variant: on ω^{p−1} with p ≥ 3 the result is ω^{p−2}·(x + c),
/// c = 1 for p = 3 and 2 for p ≥ 4. Defined below ω^ω.
pub fn fund_seq_braid(lambda: &Ordinal, x: &Nat) -> Result<Ordinal> {
    if !lambda.below_omega_omega() {
        return Err(Error::Precondition(format!("{lambda} is not below w^(w)")));
    }
    if let Some(n) = lambda.pure_power_finite_exp() {
        if n >= 2 {
            let c = if n == 2 { 1u32 } else { 2 };
            return Ok(Ordinal::term(Ordinal::from_u64(n - 1), x + c));
        }
    }
    Ok(fund_seq(lambda, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    Braid,
}

impl Variant {
    pub fn fund(self, lambda: &Ordinal, x: &Nat) -> Result<Ordinal> {
        match self {
            Variant::Standard => Ok(fund_seq(lambda, x)),
            Variant::Braid => fund_seq_braid(lambda, x),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "braid" => Ok(Variant::Braid),
            _ => Err(Error::Parse {
                what: "variant",
                detail: s.into(),
            }),
        }
    }
}

pub const STEPS_PER_BIT: u64 = 1024;

/// H_α(x), evaluated through α[x][x+1]… until 0.
///
/// Successor runs γ+m are jumped in one move and a trailing ω·m block is
/// collapsed as x ↦ 2^m(x+1) − 1. Fails with `Exhausted` once the running
/// argument would exceed `budget_bits`, or after `STEPS_PER_BIT` limit steps
/// per budget bit. Since H_α(x) ≥ H_{ω²}(x) > 2^x for α ≥ ω², reaching
/// x ≥ budget_bits with such an α also exhausts.
pub fn hardy(alpha: &Ordinal, x: &Nat, variant: Variant, budget_bits: u64) -> Result<Nat> {
    let mut a = alpha.clone();
    let mut x = x.clone();
    let exhausted = || Error::Exhausted(format!("Hardy value exceeds {budget_bits} bits"));
    let two = Ordinal::from_u64(2);
    let mut steps_left = budget_bits.saturating_mul(STEPS_PER_BIT);
    loop {
        let Some(last) = a.terms.last() else {
            return Ok(x);
        };
        if last.exp.is_zero() {
            x += &last.coeff;
            a.terms.pop();
        } else if last.exp.is_one() {
            let m = last
                .coeff
                .to_u64()
                .filter(|&m| m <= budget_bits)
                .ok_or_else(exhausted)?;
            if x.bits() + m > budget_bits {
                return Err(exhausted());
            }
            x = ((x + 1u32) << m) - 1u32;
            a.terms.pop();
        } else {
            if a.terms[0].exp >= two && x >= Nat::from(budget_bits) {
                return Err(exhausted());
            }
            if steps_left == 0 {
                return Err(Error::Exhausted(format!(
                    "Hardy evaluation ran past {budget_bits} bits' worth of steps"
                )));
            }
            steps_left -= 1;
            if variant == Variant::Braid && a.pure_power_finite_exp().is_some_and(|n| n >= 2) {
                a = variant.fund(&a, &x)?;
            } else {
                if variant == Variant::Braid && !a.below_omega_omega() {
                    return Err(Error::Precondition(format!("{a} is not below w^(w)")));
                }
                fund_in_place(&mut a, &x);
            }
            x += 1u32;
        }
        if x.bits() > budget_bits {
            return Err(exhausted());
        }
    }
}

/// Standard λ[x] for limit λ, rewriting only the last term.
fn fund_in_place(a: &mut Ordinal, x: &Nat) {
    let last = a.terms.pop().expect("limit");
    if !last.coeff.is_one() {
        a.terms.push(Term {
            exp: last.exp.clone(),
            coeff: &last.coeff - 1u32,
        });
    }
    let delta = last.exp;
    if delta.is_successor() {
        let p = pred(&delta);
        if !x.is_zero() {
            a.terms.push(Term {
                exp: p,
                coeff: x.clone(),
            });
        }
    } else {
        a.terms.push(Term {
            exp: fund_seq(&delta, x),
            coeff: Nat::one(),
        });
    }
}

impl Ordinal {
    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.exp.is_zero() && t.coeff.is_one())
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if t.exp.is_zero() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            if t.exp.is_one() {
                write!(f, "w")?;
            } else {
                write!(f, "w^({})", t.exp)?;
            }
            if !t.coeff.is_one() {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut p = Parser { s: &bytes, i: 0 };
        let o = p.ordinal()?;
        if p.i != bytes.len() {
            return Err(p.err("trailing input"));
        }
        Ok(o)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            what: "ordinal",
            detail: format!("{msg} at offset {}", self.i),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<Nat> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn ordinal(&mut self) -> Result<Ordinal> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        let terms: Vec<Term> = terms.into_iter().flatten().collect();
        Ordinal::from_terms(terms).map_err(|_| self.err("not in Cantor normal form"))
    }

    fn term(&mut self) -> Result<Option<Term>> {
        if self.eat(b'w') {
            let exp = if self.eat(b'^') {
                if !self.eat(b'(') {
                    return Err(self.err("expected '('"));
                }
                let e = self.ordinal()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                e
            } else {
                Ordinal::one()
            };
            let coeff = if self.eat(b'*') { self.number()? } else { Nat::one() };
            if coeff.is_zero() {
                return Err(self.err("zero coefficient"));
            }
            Ok(Some(Term { exp, coeff }))
        } else {
            let n = self.number()?;
            Ok((!n.is_zero()).then(|| Term {
                exp: Ordinal::zero(),
                coeff: n,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    #[test]
    fn grammar_round_trip() {
        for s in ["0", "5", "w", "w*3+2", "w^(w)", "w^(2)*3+w*2+5", "w^(w^(w)+1)*2+w^(3)"] {
            assert_eq!(o(s).to_string(), s);
        }
        assert!("w+w^(2)".parse::<Ordinal>().is_err());
        assert!("w*0".parse::<Ordinal>().is_err());
        assert!("w^(2".parse::<Ordinal>().is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(ord_cmp(&o("w"), &o("5")), Ordering::Greater);
        assert_eq!(ord_cmp(&o("w^(w)"), &o("w^(3)")), Ordering::Greater);
        assert_eq!(ord_cmp(&o("w^(2)*2+w"), &o("w^(2)*2+1")), Ordering::Greater);
    }

    #[test]
    fn addition() {
        assert_eq!(ord_add(&o("1"), &o("w")), o("w"));
        assert_eq!(ord_add(&o("w"), &o("1")), o("w+1"));
        assert_eq!(ord_add(&o("w^(2)+w"), &o("w^(2)")), o("w^(2)*2"));
    }

    #[test]
    fn fundamental_sequences() {
        assert_eq!(fund_seq(&o("w^(w)"), &n(3)), o("w^(3)"));
        assert_eq!(fund_seq(&o("w^(2)+8"), &n(7)), o("w^(2)+7"));
        assert_eq!(fund_seq(&o("w*2"), &n(3)), o("w+3"));
        assert_eq!(fund_seq(&o("0"), &n(3)), o("0"));
        assert_eq!(fund_seq(&o("w^(w*2)"), &n(2)), o("w^(w+2)"));
    }

    #[test]
    fn braid_fundamental_sequences() {
        assert_eq!(fund_seq_braid(&o("w^(2)"), &n(2)).unwrap(), o("w*3"));
        assert_eq!(fund_seq_braid(&o("w^(3)"), &n(2)).unwrap(), o("w^(2)*4"));
        assert_eq!(fund_seq_braid(&o("w"), &n(7)).unwrap(), o("7"));
        assert_eq!(fund_seq_braid(&o("w^(2)*2"), &n(7)).unwrap(), o("w^(2)+w*7"));
        assert!(fund_seq_braid(&o("w^(w)"), &n(1)).is_err());
    }

    #[test]
    fn hardy_values() {
        let b = crate::DEFAULT_BUDGET_BITS;
        for x in 0..=100u64 {
            assert_eq!(hardy(&o("w"), &n(x), Variant::Standard, b).unwrap(), n(2 * x + 1));
            assert_eq!(hardy(&o("w*2"), &n(x), Variant::Standard, b).unwrap(), n(4 * x + 3));
        }
        assert_eq!(hardy(&o("w^(2)"), &n(2), Variant::Standard, b).unwrap(), n(15));
        assert_eq!(hardy(&o("w^(2)"), &n(2), Variant::Braid, b).unwrap(), n(31));
        assert!(hardy(&o("w^(w)"), &n(4), Variant::Standard, 1000).is_err());
    }
}
