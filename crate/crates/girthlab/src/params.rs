//! Parameter regimes for `(n, l, a, b)` and the Lucas-digit exponent machinery.
//!
//! A tuple is never rejected for falling outside the proven regimes; it simply
//! carries fewer guarantee flags. Each flag names the rule that produced it.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modmat::is_prime;

/// Generator family `Cay(SL_n(Z/mZ), {A^l, B^l})` before a modulus is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub n: usize,
    pub l: u64,
    pub a: i64,
    pub b: i64,
}

impl Family {
    pub fn new(n: usize, l: u64, a: i64, b: i64) -> Self {
        Self { n, l, a, b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Regime {
    Dim2,
    Dim3,
    DimGeneral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GuaranteeKind {
    Freeness,
    Generation,
    GirthBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guarantee {
    pub kind: GuaranteeKind,
    /// Identifier of the rule that grants the flag, e.g. `generation:dim3:l=4^k`.
    pub clause: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub l: u64,
    pub a: i64,
    pub b: i64,
    /// Auxiliary prime with `n = 1 (mod q)`; `3` for the dimension-3 regime.
    pub q: Option<u64>,
    /// `q^t <= n < q^{t+1}`, present for `n >= 4`.
    pub t: Option<u32>,
    /// `None` only for `n = 2` with `l != 1`.
    pub regime: Option<Regime>,
    pub guarantees: Vec<Guarantee>,
    /// Other admissible auxiliary primes that were not selected.
    pub alternative_q: Vec<u64>,
}

impl GraphSpec {
    pub fn family(&self) -> Family {
        Family::new(self.n, self.l, self.a, self.b)
    }

    pub fn has(&self, kind: GuaranteeKind) -> bool {
        self.guarantees.iter().any(|g| g.kind == kind)
    }
}

fn guarantee(kind: GuaranteeKind, clause: &str) -> Guarantee {
    Guarantee {
        kind,
        clause: clause.to_string(),
    }
}

/// Largest `t` with `q^t <= n`.
pub fn base_q_scale(n: u64, q: u64) -> u32 {
    let mut t = 0;
    let mut pw = q;
    while pw <= n {
        t += 1;
        pw = match pw.checked_mul(q) {
            Some(v) => v,
            None => break,
        };
    }
    t
}

fn is_power_of_four(l: u64) -> bool {
    l >= 4 && l.is_power_of_two() && l.trailing_zeros() % 2 == 0
}

/// `l = q^e + 1` for some `e >= min_exp`.
fn is_q_power_plus_one(l: u64, q: u64, min_exp: u32) -> bool {
    let Some(mut v) = l.checked_sub(1) else {
        return false;
    };
    let mut e = 0;
    if v == 0 {
        return false;
    }
    while v % q == 0 {
        v /= q;
        e += 1;
    }
    v == 1 && e >= min_exp
}

fn prime_divisors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

fn general_guarantees(n: usize, l: u64, a: i64, b: i64, q: u64) -> (u32, Vec<Guarantee>) {
    let t = base_q_scale(n as u64, q);
    let mut g = Vec::new();
    if l >= 3 * (n as u64 - 1) {
        g.push(guarantee(GuaranteeKind::Freeness, "freeness:dimGeneral:l>=3(n-1)"));
    }
    let congruent = a.rem_euclid(q as i64) == 1 && b.rem_euclid(q as i64) == 1;
    if congruent {
        if l == 1 {
            g.push(guarantee(GuaranteeKind::Generation, "generation:dimGeneral:l=1"));
        } else if is_q_power_plus_one(l, q, t + 1) {
            g.push(guarantee(
                GuaranteeKind::Generation,
                "generation:dimGeneral:l=q^(k+1)+1,k>=t",
            ));
        }
        let girth_min_exp = if q == 2 { t + 2 } else { t + 1 };
        if is_q_power_plus_one(l, q, girth_min_exp) {
            let clause = if q == 2 {
                "girth:dimGeneral:l=2^(k+2)+1,k>=t"
            } else {
                "girth:dimGeneral:l=q^(k+1)+1,k>=t"
            };
            g.push(guarantee(GuaranteeKind::GirthBound, clause));
        }
    }
    (t, g)
}

/// Classifies `(n, l, a, b)` and flags every guarantee whose rule it satisfies.
pub fn validate(n: usize, l: u64, a: i64, b: i64) -> Result<GraphSpec> {
    if n < 2 {
        return Err(Error::param(format!("dimension must be at least 2, got {n}")));
    }
    if l < 1 {
        return Err(Error::param("power l must be at least 1"));
    }
    if a < 2 || b < 2 {
        return Err(Error::param(format!(
            "a and b must be at least 2, got a={a}, b={b}"
        )));
    }
    let mut spec = GraphSpec {
        n,
        l,
        a,
        b,
        q: None,
        t: None,
        regime: None,
        guarantees: Vec::new(),
        alternative_q: Vec::new(),
    };
    match n {
        2 => {
            if l == 1 {
                spec.regime = Some(Regime::Dim2);
                spec.guarantees = vec![
                    guarantee(GuaranteeKind::Freeness, "freeness:dim2:l=1"),
                    guarantee(GuaranteeKind::Generation, "generation:dim2:p!|ab"),
                    guarantee(GuaranteeKind::GirthBound, "girth:dim2:p!|ab"),
                ];
            }
        }
        3 => {
            spec.regime = Some(Regime::Dim3);
            spec.q = Some(3);
            if l >= 4 {
                spec.guarantees
                    .push(guarantee(GuaranteeKind::Freeness, "freeness:dim3:l>=4"));
            }
            if a.rem_euclid(3) == 1 && b.rem_euclid(3) == 2 && is_power_of_four(l) {
                spec.guarantees
                    .push(guarantee(GuaranteeKind::Generation, "generation:dim3:l=4^k"));
                spec.guarantees
                    .push(guarantee(GuaranteeKind::GirthBound, "girth:dim3:l=4^k"));
            }
        }
        _ => {
            spec.regime = Some(Regime::DimGeneral);
            let candidates = prime_divisors(n as u64 - 1);
            // strongest guarantee set wins; ties go to the smallest q
            let (best_q, best_t, best) = candidates
                .iter()
                .map(|&q| {
                    let (t, g) = general_guarantees(n, l, a, b, q);
                    (q, t, g)
                })
                .fold(None::<(u64, u32, Vec<Guarantee>)>, |acc, cand| match acc {
                    Some(prev) if prev.2.len() >= cand.2.len() => Some(prev),
                    _ => Some(cand),
                })
                .expect("n - 1 >= 3 has a prime divisor");
            spec.q = Some(best_q);
            spec.t = Some(best_t);
            spec.guarantees = best;
            spec.alternative_q = candidates.into_iter().filter(|&q| q != best_q).collect();
        }
    }
    Ok(spec)
}

fn small_binom_mod(n: u64, k: u64, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let (mut num, mut den) = (1u128, 1u128);
    let qq = q as u128;
    for j in 0..k {
        num = num * ((n - j) as u128 % qq) % qq;
        den = den * ((j + 1) as u128 % qq) % qq;
    }
    // q prime and den is a product of values < q, so it is invertible
    (num * mod_pow(den, qq - 2, qq) % qq) as u64
}

fn mod_pow(mut base: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// `C(alpha, beta) mod q` as the product of base-`q` digit binomials.
pub fn lucas_binom_mod(alpha: u64, beta: u64, q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let (mut x, mut y) = (alpha, beta);
    let mut acc = 1 % q;
    while y > 0 || x > 0 {
        let (dx, dy) = (x % q, y % q);
        if dy > dx {
            return Ok(0);
        }
        acc = ((acc as u128 * small_binom_mod(dx, dy, q) as u128) % q as u128) as u64;
        x /= q;
        y /= q;
    }
    Ok(acc)
}

/// The first `count` powers `l` carrying the girth guarantee for `n >= 4`:
/// `q^{k+1}+1` (`q^{k+2}+1` when `q = 2`) for `k >= t`, keeping only `l >= 3(n-1)`.
pub fn admissible_exponents(n: usize, q: u64, count: usize) -> Result<Vec<u64>> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if n < 2 || (n as u64 - 1) % q != 0 {
        return Err(Error::param(format!("n = {n} is not 1 modulo {q}")));
    }
    let t = base_q_scale(n as u64, q);
    let floor = 3 * (n as u64 - 1);
    let mut exp = if q == 2 { t + 2 } else { t + 1 };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let l = q
            .checked_pow(exp)
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| Error::Overflow(format!("{q}^{exp} + 1 exceeds 64 bits")))?;
        exp += 1;
        if l < floor {
            continue;
        }
        debug_assert!(l % q == 1 % q);
        debug_assert!((2..n as u64).all(|i| matches!(lucas_binom_mod(l, i, q), Ok(0))));
        out.push(l);
    }
    Ok(out)
}

/// Direct big-integer `C(alpha, beta) mod q`; test oracle for the digit route.
pub fn binom_mod_direct(alpha: u64, beta: u64, q: u64) -> u64 {
    if beta > alpha {
        return 0;
    }
    let mut c = BigUint::from(1u32);
    for j in 0..beta {
        c = c * BigUint::from(alpha - j) / BigUint::from(j + 1);
    }
    (c % BigUint::from(q)).to_u64().unwrap()
}
