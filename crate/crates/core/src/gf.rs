//! Finite fields `F_q = F_p[Y]/(μ(Y))`.
//!
//! Elements are stored packed: the coefficient vector `(c_0, …, c_{m-1})`
//! of the residue `Σ c_i a^i` is the integer `Σ c_i p^i`. Fields with at
//! most 2^16 elements carry discrete log tables.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, factorize};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::PolyRing;

/// An element of an [`FieldSpec`] in packed form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    /// The packed integer `Σ c_i p^i`.
    pub fn packed(self) -> u32 {
        self.0
    }
}

const TABLE_LIMIT: u64 = 1 << 16;

struct Tables {
    /// `exp[i] = g^i` for `0 ≤ i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` unused.
    log: Vec<u32>,
    /// `zech[n] = log(1 + g^n)`, `u32::MAX` when `1 + g^n = 0`.
    zech: Vec<u32>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u64,
    modulus: Vec<u32>,
    /// `p^i` for `0 ≤ i ≤ m`.
    radix: Vec<u64>,
    tables: Option<Tables>,
}

/// The finite field `F_{p^m}` presented as `F_p[Y]/(μ)`.
///
/// Cloning is cheap; the field data is shared.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec(p={}, m={}, modulus={})", self.p(), self.m(), self.modulus_text())
    }
}

impl FieldSpec {
    /// Builds `F_{p^m}`. `modulus` lists the coefficients of μ over `F_p`,
    /// degree 0 first; it must be monic of degree `m` and irreducible.
    pub fn new(p: u64, m: u32, modulus: &[u64]) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("degree must be positive"));
        }
        let q = (p as u128).checked_pow(m).filter(|&q| q <= 1u128 << 32);
        let q = q.ok_or(Error::FieldTooLarge)? as u64;
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidModulus("modulus degree differs from m"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("coefficient not reduced mod p"));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidModulus("modulus is not monic"));
        }
        let modulus: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        let mut radix = vec![1u64; m as usize + 1];
        for i in 1..=m as usize {
            radix[i] = radix[i - 1] * p;
        }
        let mut spec = FieldSpec {
            inner: Arc::new(Inner {
                p: p as u32,
                m,
                q,
                modulus,
                radix,
                tables: None,
            }),
        };
        if m > 1 {
            let prime = FieldSpec::prime(p)?;
            let ring = PolyRing::new(prime.clone());
            let mu = ring.from_coeffs(
                spec.inner.modulus.iter().map(|&c| FieldElement(c)).collect(),
            );
            if !ring.is_irreducible(&mu)? {
                return Err(Error::ReducibleModulus);
            }
            if q <= TABLE_LIMIT {
                let tables = spec.build_tables();
                Arc::get_mut(&mut spec.inner)
                    .expect("freshly built field is unshared")
                    .tables = Some(tables);
            }
        }
        Ok(spec)
    }

    /// The prime field `F_p`, presented with modulus `Y`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, &[0, 1])
    }

    /// `F_8 = F_2[Y]/(Y^3+Y+1)`.
    pub fn gf8() -> Self {
        Self::new(2, 3, &[1, 1, 0, 1]).expect("Y^3+Y+1 is irreducible over F_2")
    }

    /// `F_16 = F_2[Y]/(Y^4+Y+1)`.
    pub fn gf16() -> Self {
        Self::new(2, 4, &[1, 1, 0, 0, 1]).expect("Y^4+Y+1 is irreducible over F_2")
    }

    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Coefficients of μ, degree 0 first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn modulus_text(&self) -> String {
        crate::syntax::format_prime_poly(&self.inner.modulus, 'y')
    }

    /// The class of `Y`, printed as `a`.
    pub fn generator(&self) -> FieldElement {
        if self.inner.m == 1 {
            // Y ≡ -μ_0 in a prime field
            FieldElement((self.inner.p - self.inner.modulus[0]) % self.inner.p)
        } else {
            FieldElement(self.inner.p)
        }
    }

    /// Builds an element from its coefficient vector (degree 0 first).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        let m = self.inner.m as usize;
        if coeffs.len() != m {
            return Err(Error::FieldMismatch {
                expected: m,
                found: coeffs.len(),
            });
        }
        Ok(self.pack(coeffs.iter().map(|&c| (c % self.p()) as u32)))
    }

    /// Coefficient vector of length `m`, degree 0 first.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let p = self.inner.p;
        let mut v = x.0 as u64;
        (0..self.inner.m)
            .map(|_| {
                let d = (v % p as u64) as u32;
                v /= p as u64;
                d
            })
            .collect()
    }

    fn pack(&self, digits: impl Iterator<Item = u32>) -> FieldElement {
        let mut acc = 0u64;
        for (d, &r) in digits.zip(&self.inner.radix) {
            acc += d as u64 * r;
        }
        FieldElement(acc as u32)
    }

    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        crate::syntax::parse_element(self, text)
    }

    pub fn format_element(&self, x: FieldElement) -> String {
        crate::syntax::format_element(self, x)
    }

    /// `x^d` coefficient-wise Frobenius helper: `x^(p^v)`.
    pub fn frobenius(&self, x: FieldElement, times: u32) -> FieldElement {
        let mut y = x;
        for _ in 0..times {
            y = self.pow(&y, self.inner.p as u128);
        }
        y
    }

    fn slow_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p as u64;
        let m = self.inner.m as usize;
        if m == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let mu = &self.inner.modulus;
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for k in 0..m {
                let sub = c * mu[k] as u64 % p;
                let idx = top - m + k;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        self.pack(prod[..m].iter().map(|&c| c as u32))
    }

    fn digit_add(&self, a: FieldElement, b: FieldElement, negate_b: bool) -> FieldElement {
        let p = self.inner.p as u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut acc = 0u64;
        for &r in &self.inner.radix[..self.inner.m as usize] {
            let dx = x % p;
            let dy = y % p;
            x /= p;
            y /= p;
            let d = if negate_b { (dx + p - dy) % p } else { (dx + dy) % p };
            acc += d * r;
        }
        FieldElement(acc as u32)
    }

    fn build_tables(&self) -> Tables {
        let q = self.inner.q as usize;
        let order = self.inner.q - 1;
        let of = factorize(order);
        let slow_pow = |x: FieldElement, mut e: u64| {
            let mut acc = FieldElement(1);
            let mut b = x;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.slow_mul(acc, b);
                }
                b = self.slow_mul(b, b);
                e >>= 1;
            }
            acc
        };
        let g = (1..q as u32)
            .map(FieldElement)
            .find(|&g| of.primes().all(|t| slow_pow(g, order / t) != FieldElement(1)))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * (q - 1)];
        let mut log = vec![0u32; q];
        let mut cur = FieldElement(1);
        for i in 0..q - 1 {
            exp[i] = cur.0;
            exp[i + q - 1] = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.slow_mul(cur, g);
        }
        let one = FieldElement(1);
        let zech = (0..q - 1)
            .map(|n| {
                let s = self.digit_add(one, FieldElement(exp[n]), false);
                if s.0 == 0 {
                    u32::MAX
                } else {
                    log[s.0 as usize]
                }
            })
            .collect();
        Tables { exp, log, zech }
    }
}

impl Field for FieldSpec {
    type Elem = FieldElement;

    #[inline]
    fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline]
    fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    #[inline]
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.0 == 0
    }

    #[inline]
    fn is_one(&self, a: &FieldElement) -> bool {
        a.0 == 1
    }

    #[inline]
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if inner.m == 1 {
            let s = a.0 as u64 + b.0 as u64;
            let p = inner.p as u64;
            return FieldElement(if s >= p { s - p } else { s } as u32);
        }
        if let Some(t) = &inner.tables {
            if a.0 == 0 {
                return *b;
            }
            if b.0 == 0 {
                return *a;
            }
            let la = t.log[a.0 as usize] as usize;
            let lb = t.log[b.0 as usize] as usize;
            let n = inner.q as usize - 1;
            let diff = if lb >= la { lb - la } else { lb + n - la };
            let z = t.zech[diff];
            if z == u32::MAX {
                return FieldElement(0);
            }
            return FieldElement(t.exp[la + z as usize]);
        }
        self.digit_add(*a, *b, false)
    }

    #[inline]
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        self.add(a, &self.neg(b))
    }

    #[inline]
    fn neg(&self, a: &FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 || a.0 == 0 {
            return *a;
        }
        if inner.m == 1 {
            return FieldElement(inner.p - a.0);
        }
        if let Some(t) = &inner.tables {
            let half = (inner.q as usize - 1) / 2;
            return FieldElement(t.exp[t.log[a.0 as usize] as usize + half]);
        }
        self.digit_add(FieldElement(0), *a, true)
    }

    #[inline]
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            return FieldElement(
                t.exp[t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize],
            );
        }
        self.slow_mul(*a, *b)
    }

    fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            let n = inner.q as usize - 1;
            let l = t.log[a.0 as usize] as usize;
            return Ok(FieldElement(t.exp[(n - l) % n]));
        }
        Ok(self.pow(a, (inner.q - 2) as u128))
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn size(&self) -> u128 {
        self.inner.q as u128
    }

    fn element_at(&self, idx: u128) -> FieldElement {
        // the most significant digit of idx is the degree-0 coefficient
        let p = self.inner.p as u64;
        let m = self.inner.m as usize;
        let mut v = idx as u64;
        let mut digits = vec![0u32; m];
        for i in (0..m).rev() {
            digits[i] = (v % p) as u32;
            v /= p;
        }
        self.pack(digits.into_iter())
    }

    fn from_u64(&self, n: u64) -> FieldElement {
        FieldElement((n % self.p()) as u32)
    }
}
