//! Iterating the prime step for one prime `k | q - 1` until a polynomial
//! repeats, and what the resulting tail and orbit reveal about the order of
//! the starting polynomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::arith::{self, divisors, factorize};
use crate::constructions::Constructor;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// The sequence `f_0, f_1, …` of repeated `k`-th power minimal polynomials,
/// split into a tail of length `l` and an orbit of length `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationTrace<E> {
    pub prime: u64,
    /// `f_0, …, f_{l+s-1}`, pairwise distinct.
    pub polys: Vec<Poly<E>>,
    pub tail_length: usize,
    pub orbit_length: usize,
    /// `ν_k(q^n - 1)`.
    pub w: u32,
    pub q: u64,
    pub degree: usize,
}

impl<E> IterationTrace<E> {
    pub fn tail(&self) -> &[Poly<E>] {
        &self.polys[..self.tail_length]
    }

    pub fn orbit(&self) -> &[Poly<E>] {
        &self.polys[self.tail_length..]
    }

    /// `f_l`, the first orbit polynomial.
    pub fn orbit_start(&self) -> &Poly<E> {
        &self.polys[self.tail_length]
    }
}

fn nu_u128(p: u64, mut n: u128) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p as u128) {
        n /= p as u128;
        v += 1;
    }
    v
}

/// Applies the prime step for `k` until a polynomial repeats.
pub fn iterate_prime<F: Field>(
    ctor: &Constructor<F>,
    f: &Poly<F::Elem>,
    k: u64,
) -> Result<IterationTrace<F::Elem>> {
    // validates k, f and computes f_1
    let first = ctor.prime_step(f, k)?;
    let zeta = ctor.root_of_unity(k)?;
    let q = ctor.q();
    let n = f.degree().unwrap();
    let qn = (q as u128).checked_pow(n as u32).ok_or(Error::Overflow)?;
    let w = nu_u128(k, qn - 1);
    let cap = u64::try_from(qn).unwrap_or(u64::MAX);

    let mut seen: HashMap<Poly<F::Elem>, usize> = HashMap::new();
    let mut polys = Vec::new();
    seen.insert(f.clone(), 0);
    polys.push(f.clone());
    let mut cur = first;
    loop {
        if let Some(&l) = seen.get(&cur) {
            let s = polys.len() - l;
            debug_assert!(l as u32 <= w, "tail length {l} exceeds nu_k(q^n-1) = {w}");
            return Ok(IterationTrace {
                prime: k,
                polys,
                tail_length: l,
                orbit_length: s,
                w,
                q,
                degree: n,
            });
        }
        if polys.len() as u64 >= cap {
            return Err(Error::IterationCap(cap));
        }
        seen.insert(cur.clone(), polys.len());
        let next = ctor.prime_step_with(&cur, k, &zeta).0;
        polys.push(cur);
        cur = next;
    }
}

/// Witness `(d, j)` for a candidate factor `r`: `s = ord_r(k)/d`, `d` divides
/// `deg f_l`, `ord_r(q^j) = d` and `k^s ≡ q^j (mod r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderCandidate {
    pub order: u64,
    pub r: u64,
    pub d: u64,
    pub j: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCandidates {
    pub k_adic_valuation: usize,
    /// Sorted by order.
    pub candidates: Vec<OrderCandidate>,
}

impl OrderCandidates {
    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.candidates.iter().map(|c| c.order)
    }
}

/// Checks conditions (I)–(III) for one `r`, returning the first witness.
pub fn candidate_witness(k: u64, s: u64, orbit_degree: u64, q: u64, r: u64) -> Option<(u64, u64)> {
    if arith::gcd(k, r) != 1 {
        return None;
    }
    let ord_k = arith::mult_order(k % r.max(1), r).ok()?;
    if ord_k % s != 0 {
        return None;
    }
    let d = ord_k / s;
    if !orbit_degree.is_multiple_of(d) {
        return None;
    }
    let ks = arith::pow_mod(k, s, r);
    (0..orbit_degree).find_map(|j| {
        let qj = arith::pow_mod(q, j, r);
        (qj == ks && arith::mult_order(qj, r).ok()? == d).then_some((d, j))
    })
}

/// All orders `k^l · r` consistent with a trace, `r` ranging over the
/// divisors of `(q^n - 1) / k^{ν_k(q^n-1)}`.
pub fn infer_order<E>(trace: &IterationTrace<E>) -> Result<OrderCandidates> {
    let qn = (trace.q as u128)
        .checked_pow(trace.degree as u32)
        .ok_or(Error::Overflow)?;
    let group = u64::try_from(qn - 1).map_err(|_| Error::Overflow)?;
    let k = trace.prime;
    let cofactor = group / k.pow(trace.w);
    let kl = k.pow(trace.tail_length as u32);
    let orbit_degree = trace.orbit_start().degree().unwrap_or(0) as u64;
    let s = trace.orbit_length as u64;
    let candidates = divisors(&factorize(cofactor))
        .into_iter()
        .filter_map(|r| {
            candidate_witness(k, s, orbit_degree, trace.q, r).map(|(d, j)| OrderCandidate {
                order: kl * r,
                r,
                d,
                j,
            })
        })
        .collect();
    Ok(OrderCandidates {
        k_adic_valuation: trace.tail_length,
        candidates,
    })
}

/// Tail lengths of the traces for each prime: the `p`-adic valuations of
/// the order of `f`.
pub fn combine_valuations<F: Field>(
    ctor: &Constructor<F>,
    f: &Poly<F::Elem>,
    primes: &[u64],
) -> Result<BTreeMap<u64, usize>> {
    primes
        .iter()
        .map(|&p| iterate_prime(ctor, f, p).map(|t| (p, t.tail_length)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn trivial_trace() {
        let f8 = FieldSpec::gf8();
        let c = Constructor::new(f8.clone()).unwrap();
        let f = f8.parse_poly("x+1").unwrap();
        let t = iterate_prime(&c, &f, 7).unwrap();
        assert_eq!((t.tail_length, t.orbit_length), (0, 1));
        let cands = infer_order(&t).unwrap();
        assert!(cands.orders().any(|e| e == 1));
        assert_eq!(combine_valuations(&c, &f, &[7]).unwrap()[&7], 0);
    }

    #[test]
    fn coprime_order_has_no_tail() {
        let f16 = FieldSpec::gf16();
        let c = Constructor::new(f16.clone()).unwrap();
        // a has order 15; X + a has root a, which is coprime to... 15 is not,
        // so take a^3 (order 5) and iterate with 3
        let a3 = f16.pow(&f16.generator(), 3);
        let f = c.ring().from_coeffs(alloc::vec![a3, f16.one()]);
        let t = iterate_prime(&c, &f, 3).unwrap();
        assert_eq!(t.tail_length, 0);
    }

    #[test]
    fn orbit_closure_and_invalid_prime() {
        let f16 = FieldSpec::gf16();
        let c = Constructor::new(f16.clone()).unwrap();
        let f1 = f16.parse_poly("x^8+x^5+x^3+x^2+a").unwrap();
        let t = iterate_prime(&c, &f1, 5).unwrap();
        let mut cur = t.orbit_start().clone();
        for _ in 0..t.orbit_length {
            cur = c.prime_step(&cur, 5).unwrap();
        }
        assert_eq!(&cur, t.orbit_start());
        assert_eq!(t.tail_length, 1);
        assert!(iterate_prime(&c, &f1, 2).is_err());
        assert!(iterate_prime(&c, &f1, 7).is_err());
    }
}
