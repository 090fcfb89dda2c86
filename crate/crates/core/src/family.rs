//! Enumeration of every minimal polynomial reachable from `f` through
//! exponents built from the primes dividing `q - 1`, with weight and
//! `k`-normality statistics.
//!
//! Exponents are walked as `k · p_m^i` where `k` ranges over products of
//! the smaller primes within per-prime caps. Each branch iterates the prime
//! step for the largest prime `p_m` and stops as soon as it reaches a
//! polynomial that is already known, since everything after it is known
//! too.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::arith::factorize;
use crate::constructions::Constructor;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::oracle::ExtensionCtx;
use crate::orbit::iterate_prime;
use crate::poly::{Poly, PolyRing};

/// One orbit of the `p_m`-iteration, with the exponent tuple of the branch
/// that first reached it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord<E> {
    /// Exponents `(i_1, …, i_{m-1})` of the smaller primes.
    pub start: Vec<u32>,
    pub members: Vec<Poly<E>>,
}

#[derive(Clone, Debug)]
pub struct FamilyReport<E> {
    pub base_poly: Poly<E>,
    /// Order of the base polynomial.
    pub order: u64,
    /// Distinct primes of `q - 1`, ascending.
    pub primes: Vec<u64>,
    /// Exponent caps for all primes but the largest.
    pub caps: Vec<u32>,
    /// Distinct members in discovery order.
    pub members: Vec<Poly<E>>,
    pub orbits: Vec<OrbitRecord<E>>,
    pub weight_hist: BTreeMap<usize, usize>,
    /// `(weight, k)` → count; empty until normality is computed.
    pub normality_hist: BTreeMap<(usize, usize), usize>,
}

impl<E: Clone> FamilyReport<E> {
    /// Installs the `k`-normality of each member (aligned with
    /// [`Self::members`]) and rebuilds the joint histogram.
    pub fn set_normalities<F: Field<Elem = E>>(&mut self, ring: &PolyRing<F>, ks: &[usize]) {
        assert_eq!(ks.len(), self.members.len(), "one normality per member");
        let mut hist = BTreeMap::new();
        for (f, &k) in self.members.iter().zip(ks) {
            *hist.entry((ring.weight(f), k)).or_insert(0) += 1;
        }
        self.normality_hist = hist;
    }
}

/// Per-prime caps `v_j + s_j` from single-prime traces of `f`.
pub fn default_caps<F: Field>(
    ctor: &Constructor<F>,
    f: &Poly<F::Elem>,
    primes: &[u64],
) -> Result<Vec<u32>> {
    primes
        .iter()
        .map(|&p| {
            let t = iterate_prime(ctor, f, p)?;
            Ok((t.tail_length + t.orbit_length) as u32)
        })
        .collect()
}

struct Walker<'a, F: Field> {
    ctor: &'a Constructor<F>,
    last: u64,
    last_zeta: F::Elem,
    /// member → index of the orbit it eventually falls into
    owner: HashMap<Poly<F::Elem>, usize>,
    members: Vec<Poly<F::Elem>>,
    orbits: Vec<OrbitRecord<F::Elem>>,
}

impl<F: Field> Walker<'_, F> {
    fn branch(&mut self, base: &Poly<F::Elem>, start: &[u32]) {
        let mut seq: Vec<Poly<F::Elem>> = Vec::new();
        let mut local: HashMap<Poly<F::Elem>, usize> = HashMap::new();
        let mut cur = base.clone();
        let orbit_id = loop {
            if let Some(&id) = self.owner.get(&cur) {
                break id;
            }
            if let Some(&pos) = local.get(&cur) {
                let id = self.orbits.len();
                self.orbits.push(OrbitRecord {
                    start: start.to_vec(),
                    members: seq[pos..].to_vec(),
                });
                break id;
            }
            local.insert(cur.clone(), seq.len());
            let next = self.ctor.prime_step_with(&cur, self.last, &self.last_zeta).0;
            seq.push(cur);
            cur = next;
        };
        for poly in seq {
            self.owner.insert(poly.clone(), orbit_id);
            self.members.push(poly);
        }
    }

    fn walk(
        &mut self,
        others: &[(u64, F::Elem, u32)],
        base: Poly<F::Elem>,
        start: &mut Vec<u32>,
    ) {
        let Some(((prime, zeta, cap), rest)) = others.split_first() else {
            if !self.owner.contains_key(&base) {
                self.branch(&base, start);
            }
            return;
        };
        let mut cur = base;
        for i in 0..=*cap {
            start.push(i);
            self.walk(rest, cur.clone(), start);
            start.pop();
            if i < *cap {
                cur = self.ctor.prime_step_with(&cur, *prime, zeta).0;
            }
        }
    }
}

/// Enumerates the family of `f`. `caps` bounds the exponents of all primes
/// of `q - 1` except the largest; `None` uses [`default_caps`].
pub fn enumerate_family<F: Field>(
    ctor: &Constructor<F>,
    f: &Poly<F::Elem>,
    caps: Option<&[u32]>,
) -> Result<FamilyReport<F::Elem>> {
    let ring = ctor.ring();
    let order = ring.poly_order(f)?;
    if !ring.is_monic(f) {
        return Err(Error::NotMonic);
    }
    let q = ctor.q();
    let primes: Vec<u64> = if q > 2 { factorize(q - 1).primes().collect() } else { Vec::new() };
    let report_base = |members: Vec<Poly<F::Elem>>, orbits, caps| {
        let mut weight_hist = BTreeMap::new();
        for m in &members {
            *weight_hist.entry(ring.weight(m)).or_insert(0) += 1;
        }
        FamilyReport {
            base_poly: f.clone(),
            order,
            primes: primes.clone(),
            caps,
            members,
            orbits,
            weight_hist,
            normality_hist: BTreeMap::new(),
        }
    };
    let Some((&last, others)) = primes.split_last() else {
        return Ok(report_base(vec![f.clone()], Vec::new(), Vec::new()));
    };
    let caps = match caps {
        Some(c) if c.len() == others.len() => c.to_vec(),
        Some(_) => return Err(Error::Parse(alloc::format!(
            "expected {} exponent caps",
            others.len()
        ))),
        None => default_caps(ctor, f, others)?,
    };
    let others_z = others
        .iter()
        .zip(&caps)
        .map(|(&p, &c)| ctor.root_of_unity(p).map(|z| (p, z, c)))
        .collect::<Result<Vec<_>>>()?;
    let mut walker = Walker {
        ctor,
        last,
        last_zeta: ctor.root_of_unity(last)?,
        owner: HashMap::new(),
        members: Vec::new(),
        orbits: Vec::new(),
    };
    walker.walk(&others_z, f.clone(), &mut Vec::new());
    Ok(report_base(walker.members, walker.orbits, caps))
}

/// `A mod e`: the closure of `{1}` under multiplication by each prime,
/// modulo `e`, found by breadth-first search.
pub fn exponent_closure(primes: &[u64], e: u64) -> BTreeSet<u64> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let one = 1 % e;
    seen.insert(one);
    queue.push_back(one);
    while let Some(k) = queue.pop_front() {
        for &p in primes {
            let next = ((k as u128 * p as u128) % e as u128) as u64;
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Products of the primes strictly below `e`, ascending.
pub fn exponents_below(primes: &[u64], e: u64) -> Vec<u64> {
    let mut out = BTreeSet::new();
    let mut queue = VecDeque::from([1u64]);
    out.insert(1);
    while let Some(k) = queue.pop_front() {
        for &p in primes {
            if let Some(next) = k.checked_mul(p).filter(|&n| n < e) {
                if out.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Distinct polynomials `m_{β^k}` over exponents `1 < k < e` built from the
/// primes of `q - 1`, i.e. what an enumeration that never reduces
/// exponents modulo `e` finds besides `f` itself.
pub fn restricted_members<F: Field>(
    ctor: &Constructor<F>,
    f: &Poly<F::Elem>,
) -> Result<Vec<Poly<F::Elem>>> {
    let e = ctor.ring().poly_order(f)?;
    let q = ctor.q();
    let primes: Vec<u64> = if q > 2 { factorize(q - 1).primes().collect() } else { Vec::new() };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in exponents_below(&primes, e).into_iter().filter(|&k| k > 1) {
        let m = ctor.construct_general(f, k)?.output;
        if seen.insert(m.clone()) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Histogram of the number of nonzero coefficients.
pub fn weight_distribution<F: Field>(
    ring: &PolyRing<F>,
    members: &[Poly<F::Elem>],
) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for m in members {
        *hist.entry(ring.weight(m)).or_insert(0) += 1;
    }
    hist
}

/// `deg gcd(g_α, X^n - 1)` over `F_{q^n} = F_q[X]/(f)`, where `α` is the
/// class of `X` and `g_α = α X^{n-1} + α^q X^{n-2} + … + α^{q^{n-1}}`.
/// Zero means `f` is normal.
pub fn k_normality<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Result<usize> {
    if !ring.is_monic(f) {
        return Err(Error::NotMonic);
    }
    if !ring.is_irreducible(f)? {
        return Err(Error::Reducible);
    }
    Ok(k_normality_unchecked(ring, f))
}

/// [`k_normality`] for a polynomial already known to be monic irreducible.
pub fn k_normality_unchecked<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> usize {
    let n = f.degree().expect("nonconstant");
    let ext = ExtensionCtx::new_unchecked(ring.clone(), f.clone());
    let q = ring.field().size();
    let mut conj = Vec::with_capacity(n);
    let mut cur = ext.alpha();
    for _ in 0..n {
        let next = ext.pow(&cur, q);
        conj.push(cur);
        cur = next;
    }
    let big = PolyRing::new(ext.clone());
    // coefficient of X^{n-1-i} is α^{q^i}
    conj.reverse();
    let g = big.from_coeffs(conj);
    let mut xn1 = vec![ext.zero(); n + 1];
    xn1[0] = ext.neg(&ext.one());
    xn1[n] = ext.add(&xn1[n], &ext.one());
    let xn1 = big.from_coeffs(xn1);
    big.gcd(&g, &xn1).degree().unwrap_or(0)
}

/// Joint `(weight, k-normality)` histogram over members.
pub fn normality_distribution<F: Field>(
    ring: &PolyRing<F>,
    members: &[Poly<F::Elem>],
) -> BTreeMap<(usize, usize), usize> {
    let mut hist = BTreeMap::new();
    for m in members {
        let k = k_normality_unchecked(ring, m);
        *hist.entry((ring.weight(m), k)).or_insert(0) += 1;
    }
    hist
}
