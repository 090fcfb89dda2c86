//! Exact 64-bit integer utilities: primality, factorization, multiplicative
//! orders, valuations and divisor enumeration.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs, merging repeated
    /// primes and dropping zero exponents.
    pub fn from_pairs(mut pairs: Vec<(u64, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable();
        let mut merged: Vec<(u64, u32)> = Vec::with_capacity(pairs.len());
        for (p, e) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => merged.push((p, e)),
            }
        }
        Self { pairs: merged }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Exponent of `p` in this factorization (0 when absent).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The factored integer. Saturates are impossible for factorizations
    /// produced by [`factorize`].
    pub fn value(&self) -> u128 {
        self.pairs
            .iter()
            .fold(1u128, |acc, &(p, e)| acc * (p as u128).pow(e))
    }

    /// Number of divisors, `∏ (exponent + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.pairs.iter().map(|&(_, e)| e as u64 + 1).product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, `None` on overflow.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `base^exp` as an exact 64-bit integer.
pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const TRIAL_LIMIT: u64 = 1 << 20;

/// Factorizes `n ≥ 1`. Trial division below 2^20, then Brent's variant of
/// Pollard rho with Miller-Rabin certification of every reported prime.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut pairs = Vec::new();
    let mut n = n;
    let push = |pairs: &mut Vec<(u64, u32)>, p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(&mut pairs, 2, &mut n);
    let mut p = 3u64;
    while p < TRIAL_LIMIT && p * p <= n {
        push(&mut pairs, p, &mut n);
        p += 2;
    }
    if n > 1 {
        if p * p > n {
            // trial division passed sqrt(n)
            pairs.push((n, 1));
        } else {
            split_large(n, &mut pairs);
        }
    }
    Factorization::from_pairs(pairs)
}

fn split_large(n: u64, out: &mut Vec<(u64, u32)>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push((n, 1));
        return;
    }
    let d = brent_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Returns a nontrivial factor of the composite, odd `n`.
fn brent_rho(n: u64) -> u64 {
    let isqrt = integer_sqrt(n);
    if isqrt * isqrt == n {
        return isqrt;
    }
    let f = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1u64.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const M: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..M.min(r - k) {
                    y = f(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += M;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys, c);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn integer_sqrt(n: u64) -> u64 {
    n.isqrt()
}

/// p-adic valuation of `n ≥ 1`.
pub fn nu_p(p: u64, mut n: u64) -> u32 {
    debug_assert!(p >= 2 && n >= 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// All divisors in ascending order.
pub fn divisors(fact: &Factorization) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in fact.pairs() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Carmichael function λ(r) as a factorization, given the factorization of r.
fn carmichael(fact: &Factorization) -> Factorization {
    let mut pairs = Vec::new();
    let mut lam_parts: Vec<Factorization> = Vec::new();
    for &(p, e) in fact.pairs() {
        let part = if p == 2 {
            match e {
                1 => Factorization::default(),
                2 => Factorization::from_pairs(vec![(2, 1)]),
                _ => Factorization::from_pairs(vec![(2, e - 2)]),
            }
        } else {
            let mut f = factorize(p - 1);
            if e > 1 {
                f = Factorization::from_pairs(
                    f.pairs.iter().copied().chain([(p, e - 1)]).collect(),
                );
            }
            f
        };
        lam_parts.push(part);
    }
    // lcm: maximum exponent per prime
    for part in &lam_parts {
        for &(p, e) in part.pairs() {
            match pairs.iter_mut().find(|(q, _): &&mut (u64, u32)| *q == p) {
                Some(entry) => entry.1 = entry.1.max(e),
                None => pairs.push((p, e)),
            }
        }
    }
    Factorization::from_pairs(pairs)
}

/// Multiplicative order of `a` modulo `r`, found by stripping prime factors
/// from the Carmichael exponent λ(r).
pub fn mult_order(a: u64, r: u64) -> Result<u64> {
    if r == 0 {
        return Err(Error::NotCoprime { a, r });
    }
    if r == 1 {
        return Ok(1);
    }
    if gcd(a % r, r) != 1 {
        return Err(Error::NotCoprime { a, r });
    }
    let lambda = carmichael(&factorize(r));
    Ok(order_from_exponent(&lambda, |e| pow_mod(a, e, r) == 1))
}

/// Given a factored exponent `n` of a group element (`is_one(n)` holds),
/// returns the exact order by stripping primes while the power stays trivial.
pub fn order_from_exponent(n: &Factorization, is_one: impl Fn(u64) -> bool) -> u64 {
    let mut e = n.value() as u64;
    for &(p, k) in n.pairs() {
        for _ in 0..k {
            if is_one(e / p) {
                e /= p;
            } else {
                break;
            }
        }
    }
    e
}
