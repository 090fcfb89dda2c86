//! Brute-force reference computations in extension fields.
//!
//! Everything here works with roots explicitly: `F_{q^n}` is built as
//! `F_q[X]/(f)` and minimal or characteristic polynomials are assembled
//! from conjugates. These routines are slow and exist to check the
//! constructions, which never leave `F_q`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{kth_root_of_unity, Field};
use crate::poly::{Poly, PolyRing};

/// `F_{q^n} = F_q[X]/(f)` with elements stored as reduced residues.
#[derive(Clone, Debug)]
pub struct ExtensionCtx<F: Field> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
    degree: usize,
}

impl<F: Field> ExtensionCtx<F> {
    /// Checks that `f` is monic irreducible before building the field.
    pub fn new(base: F, f: Poly<F::Elem>) -> Result<Self> {
        let ring = PolyRing::new(base);
        if !ring.is_monic(&f) {
            return Err(Error::NotMonic);
        }
        if !ring.is_irreducible(&f)? {
            return Err(Error::Reducible);
        }
        Ok(Self::new_unchecked(ring, f))
    }

    /// Builds the quotient ring without the irreducibility test; the caller
    /// vouches for `f` being monic irreducible.
    pub fn new_unchecked(ring: PolyRing<F>, f: Poly<F::Elem>) -> Self {
        let degree = f.degree().expect("modulus is nonconstant");
        ExtensionCtx {
            ring,
            modulus: f,
            degree,
        }
    }

    pub fn base(&self) -> &F {
        self.ring.field()
    }

    pub fn base_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The class of `X`, a root of the modulus.
    pub fn alpha(&self) -> Poly<F::Elem> {
        self.ring.rem(&self.ring.x(), &self.modulus).expect("modulus is nonzero")
    }

    pub fn embed(&self, c: &F::Elem) -> Poly<F::Elem> {
        self.ring.constant(c.clone())
    }

    /// The base-field value of an element of the embedded copy of `F_q`.
    pub fn descend(&self, x: &Poly<F::Elem>) -> Result<F::Elem> {
        match x.degree() {
            None => Ok(self.base().zero()),
            Some(0) => Ok(x.coeffs()[0].clone()),
            Some(_) => Err(Error::DescentFailure),
        }
    }
}

impl<F: Field> Field for ExtensionCtx<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.ring.one()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.sub(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.neg(a)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring
            .mul_mod(a, b, &self.modulus)
            .expect("modulus is nonzero")
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        self.ring.inv_mod(a, &self.modulus)
    }

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn size(&self) -> u128 {
        self.base()
            .size()
            .checked_pow(self.degree as u32)
            .unwrap_or(u128::MAX)
    }

    fn element_at(&self, mut idx: u128) -> Self::Elem {
        let q = self.base().size();
        let mut coeffs = vec![self.base().zero(); self.degree];
        for i in (0..self.degree).rev() {
            coeffs[i] = self.base().element_at(idx % q);
            idx /= q;
        }
        self.ring.from_coeffs(coeffs)
    }

    fn from_u64(&self, n: u64) -> Self::Elem {
        self.embed(&self.base().from_u64(n))
    }
}

/// `F_{q^n}` with `α` a root of `f`.
pub fn build_extension<F: Field>(base: &F, f: &Poly<F::Elem>) -> Result<ExtensionCtx<F>> {
    ExtensionCtx::new(base.clone(), f.clone())
}

/// The first monic irreducible of degree `s` in the scan order where the
/// coefficient vector is read as a base-`q` counter, `c_0` fastest.
pub fn find_irreducible<F: Field>(base: &F, s: usize) -> Poly<F::Elem> {
    assert!(s >= 1, "degree must be positive");
    let ring = PolyRing::new(base.clone());
    let q = base.size();
    for mut idx in 0u128.. {
        let mut coeffs = Vec::with_capacity(s + 1);
        for _ in 0..s {
            coeffs.push(base.element_at(idx % q));
            idx /= q;
        }
        coeffs.push(base.one());
        let f = ring.from_coeffs(coeffs);
        if ring.is_irreducible(&f).expect("degree is positive") {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn validate_input<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Result<()> {
    if !ring.is_monic(f) {
        return Err(Error::NotMonic);
    }
    if f.coeffs().first().is_none_or(|c| ring.field().is_zero(c)) {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

fn descend_poly<F: Field>(
    ext: &ExtensionCtx<F>,
    h: &Poly<Poly<F::Elem>>,
) -> Result<Poly<F::Elem>> {
    let coeffs = h
        .coeffs()
        .iter()
        .map(|c| ext.descend(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(ext.base_ring().from_coeffs(coeffs))
}

/// `∏ (X - r)` over the extension, descended to `F_q`.
fn product_of_linears<F: Field>(
    ext: &ExtensionCtx<F>,
    roots: &[Poly<F::Elem>],
) -> Result<Poly<F::Elem>> {
    let ring = PolyRing::new(ext.clone());
    let mut acc = ring.one();
    for r in roots {
        let lin = ring.from_coeffs(vec![ext.neg(r), ext.one()]);
        acc = ring.mul(&acc, &lin);
    }
    descend_poly(ext, &acc)
}

/// Minimal polynomial of `β^k` for a root `β` of `f`: the product of
/// `X - γ^(q^i)` over the distinct conjugates of `γ = β^k`.
pub fn min_poly_power<F: Field>(base: &F, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
    let ext = build_extension(base, f)?;
    validate_input(ext.base_ring(), f)?;
    let q = base.size();
    let gamma = ext.pow(&ext.alpha(), k as u128);
    let mut conjugates = vec![gamma.clone()];
    let mut cur = ext.pow(&gamma, q);
    while cur != gamma {
        conjugates.push(cur.clone());
        cur = ext.pow(&cur, q);
    }
    product_of_linears(&ext, &conjugates)
}

/// Characteristic polynomial of `β^k`: `∏_{i<n} (X - β^(k q^i))`.
pub fn char_poly_power<F: Field>(base: &F, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
    let ext = build_extension(base, f)?;
    validate_input(ext.base_ring(), f)?;
    let q = base.size();
    let mut cur = ext.pow(&ext.alpha(), k as u128);
    let mut roots = Vec::with_capacity(ext.degree());
    for _ in 0..ext.degree() {
        roots.push(cur.clone());
        cur = ext.pow(&cur, q);
    }
    product_of_linears(&ext, &roots)
}

/// Splits `k/gcd(q, k)` into its order as a root-of-unity index: the
/// largest divisor coprime to the characteristic.
fn unity_index(q: u64, p: u64, k: u64) -> u64 {
    let mut kp = k / arith::gcd(q, k);
    while kp.is_multiple_of(p) {
        kp /= p;
    }
    kp
}

/// `(-1)^(n(k+1)) ∏_{j=1..k} f(ζ^j X) = χ_{β^k}(X^k)`, where `ζ` generates
/// the roots of unity of index `k' = k / gcd(q, k)`. The product is formed
/// in `F_{q^s}`, `s = ord_{k'}(q)`, and must descend to `F_q`.
pub fn daykin_product<F: Field>(base: &F, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
    let base_ring = PolyRing::new(base.clone());
    validate_input(&base_ring, f)?;
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    let q = u64::try_from(base.size()).map_err(|_| Error::Overflow)?;
    let p = base.characteristic();
    let n = f.degree().ok_or(Error::ConstantPolynomial)?;
    let index = unity_index(q, p, k);
    let s = arith::mult_order(q % index, index)? as usize;
    let ext = ExtensionCtx::new_unchecked(base_ring.clone(), find_irreducible(base, s));
    let zeta = kth_root_of_unity(&ext, index)?;
    let ring = PolyRing::new(ext.clone());
    let lifted: Vec<Poly<F::Elem>> = f.coeffs().iter().map(|c| ext.embed(c)).collect();
    let mut acc = ring.one();
    let mut zj = ext.one();
    for _ in 1..=k {
        zj = ext.mul(&zj, &zeta);
        // f(ζ^j X): coefficient i scaled by ζ^(ji)
        let mut scaled = Vec::with_capacity(n + 1);
        let mut pw = ext.one();
        for c in &lifted {
            scaled.push(ext.mul(c, &pw));
            pw = ext.mul(&pw, &zj);
        }
        acc = ring.mul(&acc, &ring.from_coeffs(scaled));
    }
    let odd_sign = (n as u128 * (k as u128 + 1)) % 2 == 1;
    if odd_sign {
        acc = ring.neg(&acc);
    }
    descend_poly(&ext, &acc)
}

/// Multiplicities of the irreducible factors of `h`, by repeated division
/// with the monic irreducibles of each degree (small inputs only).
pub fn factor_multiplicities<F: Field>(base: &F, h: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let ring = PolyRing::new(base.clone());
    let mut rest = ring.monic(h);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().is_some_and(|deg| deg > 0) {
        // squarefree part of the degree-d factors: gcd with X^(q^d) - X
        let xq = ring
            .pow_mod(&ring.x(), base.size().pow(d as u32), &rest)
            .expect("nonzero modulus");
        let g = ring.gcd(&ring.sub(&xq, &ring.rem(&ring.x(), &rest).unwrap()), &rest);
        if g.degree().is_some_and(|deg| deg > 0) {
            for factor in split_equal_degree(&ring, &g, d) {
                let mut mult = 0;
                loop {
                    let (quot, r) = ring.div_rem(&rest, &factor).unwrap();
                    if !r.is_zero() {
                        break;
                    }
                    rest = quot;
                    mult += 1;
                }
                out.push((factor, mult));
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Splits a squarefree product of degree-`d` irreducibles by brute-force
/// trial division over all monic degree-`d` polynomials.
fn split_equal_degree<F: Field>(
    ring: &PolyRing<F>,
    g: &Poly<F::Elem>,
    d: usize,
) -> Vec<Poly<F::Elem>> {
    let total = g.degree().unwrap() / d;
    if total == 1 {
        return vec![g.clone()];
    }
    let base = ring.field();
    let q = base.size();
    let mut found = Vec::new();
    let mut rest = g.clone();
    for mut idx in 0u128.. {
        if found.len() == total {
            break;
        }
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(base.element_at(idx % q));
            idx /= q;
        }
        coeffs.push(base.one());
        let cand = ring.from_coeffs(coeffs);
        let (quot, r) = ring.div_rem(&rest, &cand).unwrap();
        if r.is_zero() {
            rest = quot;
            found.push(cand);
            if found.len() + 1 == total {
                found.push(ring.monic(&rest));
                break;
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{FieldElement, FieldSpec};

    fn p3(c: &[u64]) -> Poly<FieldElement> {
        let f = FieldSpec::prime(3).unwrap();
        PolyRing::new(f.clone()).from_coeffs(c.iter().map(|&x| f.from_u64(x)).collect())
    }

    #[test]
    fn extension_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let ext = build_extension(&f3, &p3(&[1, 0, 1])).unwrap();
        let a = ext.alpha();
        assert_eq!(ext.mul(&a, &a), ext.neg(&ext.one()));
        assert_eq!(ext.size(), 9);
        assert_eq!(build_extension(&f3, &p3(&[1, 2, 1])).unwrap_err(), Error::Reducible);
        let inv = ext.inv(&ext.add(&a, &ext.one())).unwrap();
        assert_eq!(ext.mul(&inv, &ext.add(&a, &ext.one())), ext.one());
    }

    #[test]
    fn min_poly_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f = p3(&[2, 1, 1]);
        assert_eq!(min_poly_power(&f3, &f, 1).unwrap(), f);
        assert_eq!(min_poly_power(&f3, &f, 2).unwrap(), p3(&[1, 0, 1]));
        assert_eq!(min_poly_power(&f3, &f, 3).unwrap(), f);
    }

    #[test]
    fn char_poly_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f = p3(&[1, 0, 1]);
        assert_eq!(char_poly_power(&f3, &f, 1).unwrap(), f);
        // β has order 4, β² = -1, χ = (X+1)²
        assert_eq!(char_poly_power(&f3, &f, 2).unwrap(), p3(&[1, 2, 1]));
        assert_eq!(min_poly_power(&f3, &f, 2).unwrap(), p3(&[1, 1]));
    }

    #[test]
    fn find_irreducible_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let r2 = PolyRing::new(f2.clone());
        assert_eq!(find_irreducible(&f2, 1), r2.x());
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(find_irreducible(&f3, 2), p3(&[1, 0, 1]));
        let f16 = FieldSpec::gf16();
        let g = find_irreducible(&f16, 3);
        assert!(PolyRing::new(f16).is_irreducible(&g).unwrap());
    }

    #[test]
    fn daykin_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let r = PolyRing::new(f3.clone());
        let f = p3(&[2, 1, 1]);
        assert_eq!(daykin_product(&f3, &f, 1).unwrap(), f);
        // k' = 4 does not divide q - 1 = 2; the product lives in F_9
        let lhs = daykin_product(&f3, &f, 4).unwrap();
        let rhs = r.compose_power(&char_poly_power(&f3, &f, 4).unwrap(), 4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplicities_of_small_products() {
        let f3 = FieldSpec::prime(3).unwrap();
        let r = PolyRing::new(f3.clone());
        let a = p3(&[1, 0, 1]);
        let b = p3(&[1, 1]);
        let h = r.mul(&r.mul(&a, &a), &b);
        assert_eq!(factor_multiplicities(&f3, &h), vec![(a, 2), (b, 1)]);
    }
}
