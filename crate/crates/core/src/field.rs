//! The field abstraction shared by the base fields `F_q` and the extension
//! fields built on top of them.
//!
//! Fields are context objects: elements are plain values and every
//! operation goes through the field that owns them.

use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use crate::arith::{self, factorize, Factorization};
use crate::error::{Error, Result};

pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// The characteristic `p`.
    fn characteristic(&self) -> u64;
    /// Number of elements.
    fn size(&self) -> u128;
    /// Elements in lexicographic order of their coordinate vectors over the
    /// prime field (degree-0 coordinate most significant); `idx < size()`.
    fn element_at(&self, idx: u128) -> Self::Elem;
    /// The image of the integer `n` under `Z -> F`.
    fn from_u64(&self, n: u64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut exp: u128) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Order of the multiplicative group, `size - 1`, when it fits 64 bits.
    fn group_order(&self) -> Result<u64> {
        u64::try_from(self.size() - 1).map_err(|_| Error::Overflow)
    }
}

/// Multiplicative order of a nonzero element.
pub fn element_order<F: Field>(field: &F, x: &F::Elem) -> Result<u64> {
    if field.is_zero(x) {
        return Err(Error::ZeroInverse);
    }
    let n = factorize(field.group_order()?);
    Ok(arith::order_from_exponent(&n, |e| {
        field.is_one(&field.pow(x, e as u128))
    }))
}

fn has_exact_order<F: Field>(field: &F, x: &F::Elem, k: u64, kf: &Factorization) -> bool {
    !field.is_zero(x)
        && field.is_one(&field.pow(x, k as u128))
        && kf
            .primes()
            .all(|t| !field.is_one(&field.pow(x, (k / t) as u128)))
}

/// Fields up to this size are scanned element by element for a root of
/// unity; larger ones scan for an element whose `(size-1)/k`-th power works.
const DIRECT_SCAN_LIMIT: u128 = 1 << 24;

/// A generator of the group of `k`-th roots of unity, `k | size - 1`.
///
/// Deterministic: the first element of exact order `k` in the enumeration
/// order of [`Field::element_at`]. Above `2^24` elements the scan instead
/// returns `z^((size-1)/k)` for the first `z` for which that power has exact
/// order `k`.
pub fn kth_root_of_unity<F: Field>(field: &F, k: u64) -> Result<F::Elem> {
    let order = field.group_order()?;
    if k == 0 || order % k != 0 {
        return Err(Error::NotDivisorOfGroupOrder { k, order });
    }
    if k == 1 {
        return Ok(field.one());
    }
    let kf = factorize(k);
    let size = field.size();
    for idx in 1..size {
        let z = field.element_at(idx);
        let candidate = if size <= DIRECT_SCAN_LIMIT {
            z
        } else {
            field.pow(&z, (order / k) as u128)
        };
        if has_exact_order(field, &candidate, k, &kf) {
            return Ok(candidate);
        }
    }
    unreachable!("cyclic group of order {order} has an element of order {k}")
}

/// Every primitive `k`-th root of unity, as `ζ^j` for `gcd(j, k) = 1` in
/// increasing `j`, where `ζ` is [`kth_root_of_unity`].
pub fn primitive_roots_of_unity<F: Field>(field: &F, k: u64) -> Result<Vec<F::Elem>> {
    let zeta = kth_root_of_unity(field, k)?;
    Ok((1..=k)
        .filter(|&j| arith::gcd(j, k) == 1)
        .map(|j| field.pow(&zeta, j as u128))
        .collect())
}
