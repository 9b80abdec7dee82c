//! Ackermann levels, their inverses, and the threshold functions f_r, f_ω.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Nat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AckOutcome {
    Value(Nat),
    AboveCutoff,
}

impl AckOutcome {
    pub fn value(&self) -> Option<&Nat> {
        match self {
            AckOutcome::Value(v) => Some(v),
            AckOutcome::AboveCutoff => None,
        }
    }
}

/// Ack_r(x), abandoning the computation once the value provably exceeds `cutoff`.
///
/// Levels 0–3 use the closed forms x+1, x+2, 2x+3, 2^{x+3}−3; higher levels
/// iterate the recursion Ack_r(x+1) = Ack_{r−1}(Ack_r(x)).
pub fn ackermann(r: u64, x: &Nat, cutoff: &Nat) -> AckOutcome {
    let v = match r {
        0 => x + 1u32,
        1 => x + 2u32,
        2 => x * 2u32 + 3u32,
        3 => {
            let bits = cutoff.bits() + 2;
            match x.to_u64() {
                Some(e) if e + 3 <= bits => (Nat::one() << (e + 3)) - 3u32,
                _ => return AckOutcome::AboveCutoff,
            }
        }
        _ => {
            // Ack_r(x) ≥ x + 1, so a large x is already decisive.
            if x > cutoff {
                return AckOutcome::AboveCutoff;
            }
            let mut v = match ackermann(r - 1, &Nat::one(), cutoff) {
                AckOutcome::Value(v) => v,
                above => return above,
            };
            let mut i = Nat::zero();
            while &i < x {
                if &v > cutoff {
                    return AckOutcome::AboveCutoff;
                }
                v = match ackermann(r - 1, &v, cutoff) {
                    AckOutcome::Value(v) => v,
                    above => return above,
                };
                i += 1u32;
            }
            v
        }
    };
    if &v > cutoff {
        AckOutcome::AboveCutoff
    } else {
        AckOutcome::Value(v)
    }
}

/// Ack(x) = Ack_x(x).
pub fn ackermann_diag(x: u64, cutoff: &Nat) -> AckOutcome {
    ackermann(x, &Nat::from(x), cutoff)
}

/// Least y with Ack_r(y) ≥ x.
pub fn ack_r_inv(r: u64, x: &Nat) -> u64 {
    let mut y = 0u64;
    loop {
        match ackermann(r, &Nat::from(y), x) {
            AckOutcome::Value(v) if &v < x => y += 1,
            _ => return y,
        }
    }
}

/// Least y with Ack(y) ≥ x.
pub fn ack_inv(x: &Nat) -> u64 {
    let mut y = 0u64;
    loop {
        match ackermann_diag(y, x) {
            AckOutcome::Value(v) if &v < x => y += 1,
            _ => return y,
        }
    }
}

/// ⌊x^{1/k}⌋.
pub fn iroot(x: &Nat, k: u32) -> Nat {
    assert!(k >= 1, "iroot needs k ≥ 1");
    x.nth_root(k)
}

/// ⌊log₂ x⌋ + 1, with 0 ↦ 0.
pub fn ilog2p1(x: &Nat) -> u64 {
    x.bits()
}

/// ⌊a·√x⌋ computed as isqrt(a²x).
fn scaled_sqrt(a: u64, x: &Nat) -> Nat {
    (Nat::from(a) * Nat::from(a) * x).sqrt()
}

pub fn f_r(r: u64, x: &Nat) -> Nat {
    scaled_sqrt(ack_r_inv(r, x), x)
}

pub fn f_omega(x: &Nat) -> Nat {
    scaled_sqrt(ack_inv(x), x)
}

/// The root reading: ⌊x^{1/a}⌋ with a = Ack_r^{−1}(x) (a = 0 read as 1).
pub fn f_r_root(r: u64, x: &Nat) -> Nat {
    iroot(x, ack_r_inv(r, x).max(1) as u32)
}

pub fn f_omega_root(x: &Nat) -> Nat {
    iroot(x, ack_inv(x).max(1) as u32)
}

/// Named growth functions for (k,f)-simplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrowthFn {
    Const(u64),
    Square,
    FR(u64),
    FOmega,
}

impl GrowthFn {
    pub fn eval(self, t: u64) -> Nat {
        let x = Nat::from(t);
        match self {
            GrowthFn::Const(c) => Nat::from(c),
            GrowthFn::Square => &x * &x,
            GrowthFn::FR(r) if t >= 1 => f_r(r, &x),
            GrowthFn::FOmega if t >= 1 => f_omega(&x),
            // the inverse-based functions start at x = 1
            GrowthFn::FR(_) | GrowthFn::FOmega => Nat::zero(),
        }
    }

    pub fn eval_u64(self, t: u64) -> Option<u64> {
        self.eval(t).to_u64()
    }

    pub fn is_constant(self) -> bool {
        matches!(self, GrowthFn::Const(_))
    }
}

impl fmt::Display for GrowthFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthFn::Const(c) => write!(f, "const:{c}"),
            GrowthFn::Square => write!(f, "square"),
            GrowthFn::FR(r) => write!(f, "f_r:{r}"),
            GrowthFn::FOmega => write!(f, "f_omega"),
        }
    }
}

impl FromStr for GrowthFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "growth function",
            detail: s.to_string(),
        };
        match s.split_once(':') {
            Some(("const", c)) => c.parse().map(GrowthFn::Const).map_err(|_| bad()),
            Some(("f_r", r)) => r.parse().map(GrowthFn::FR).map_err(|_| bad()),
            None if s == "square" => Ok(GrowthFn::Square),
            None if s == "f_omega" => Ok(GrowthFn::FOmega),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    /// Literal recursion, no closed forms.
    fn ack_naive(r: u64, x: u64) -> u64 {
        match (r, x) {
            (0, x) => x + 1,
            (r, 0) => ack_naive(r - 1, 1),
            (r, x) => ack_naive(r - 1, ack_naive(r, x - 1)),
        }
    }

    #[test]
    fn closed_forms_match_recursion() {
        let cut = n(1 << 40);
        for r in 0..=3 {
            for x in 0..8 {
                assert_eq!(ackermann(r, &n(x), &cut), AckOutcome::Value(n(ack_naive(r, x))));
            }
        }
        assert_eq!(ackermann(4, &n(0), &cut), AckOutcome::Value(n(13)));
        assert_eq!(ackermann(4, &n(1), &cut), AckOutcome::Value(n(65533)));
        assert_eq!(ackermann(4, &n(2), &cut), AckOutcome::AboveCutoff);
    }

    #[test]
    fn diagonal_and_inverse() {
        let cut = n(1 << 40);
        let vals: Vec<_> = (0..4).map(|x| ackermann_diag(x, &cut)).collect();
        assert_eq!(vals, [1, 3, 7, 61].map(|v| AckOutcome::Value(n(v))));
        assert_eq!(ack_inv(&n(100)), 4);
        assert_eq!(ack_inv(&n(1)), 0);
        assert_eq!(ack_r_inv(0, &n(5)), 4);
    }

    #[test]
    fn roots_and_logs() {
        assert_eq!(iroot(&n(1 << 10), 2), n(32));
        assert_eq!(iroot(&n(100), 3), n(4));
        assert_eq!(ilog2p1(&n(1)), 1);
        assert_eq!(ilog2p1(&n(0)), 0);
        assert_eq!(ilog2p1(&n(8)), 4);
    }

    #[test]
    fn thresholds() {
        assert_eq!(f_omega(&n(100)), n(40));
        assert_eq!(GrowthFn::Square.eval(7), n(49));
        assert_eq!(GrowthFn::Const(3).eval(12345), n(3));
        assert_eq!(f_omega_root(&n(100)), n(3));
        assert_eq!("f_r:2".parse::<GrowthFn>().unwrap(), GrowthFn::FR(2));
        assert_eq!(
            GrowthFn::FOmega.to_string().parse::<GrowthFn>().unwrap(),
            GrowthFn::FOmega
        );
    }
}
