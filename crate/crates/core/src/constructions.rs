//! Minimal polynomials of powers `β^k` computed from `f = m_β` using only
//! arithmetic in `F_q`.
//!
//! For a prime `k | q - 1` the twists `ζ^{-jn} f(ζ^j X)` multiply to
//! `m_{β^k}(X^k)` unless `f` is already a composition `g(X^k)`, in which
//! case `m_{β^k} = g`. Composite `k` is handled one prime at a time, and a
//! factor of the characteristic by raising coefficients to that power.

use alloc::vec::Vec;

use crate::arith::{self, factorize};
use crate::error::{Error, Result};
use crate::field::{kth_root_of_unity, Field};
use crate::oracle;
use crate::poly::{Poly, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `f = g(X^k)` and the step returned `g` directly.
    Shortcut,
    /// The `k`-fold twisted product followed by `X^k` extraction.
    TwistedProduct,
    /// Coefficients raised to the characteristic.
    Frobenius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub prime: u64,
    pub kind: StepKind,
}

impl Step {
    pub fn shortcut_used(&self) -> bool {
        self.kind == StepKind::Shortcut
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult<E> {
    pub output: Poly<E>,
    pub input_k: u64,
    pub steps: Vec<Step>,
}

/// Runs the constructions over one field, caching a root of unity for each
/// prime divisor of `q - 1`.
#[derive(Clone, Debug)]
pub struct Constructor<F: Field> {
    ring: PolyRing<F>,
    q: u64,
    roots: Vec<(u64, F::Elem)>,
}

impl<F: Field> Constructor<F> {
    pub fn new(field: F) -> Result<Self> {
        let q = u64::try_from(field.size()).map_err(|_| Error::Overflow)?;
        let roots = if q > 2 {
            factorize(q - 1)
                .primes()
                .map(|k| kth_root_of_unity(&field, k).map(|z| (k, z)))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        Ok(Constructor {
            ring: PolyRing::new(field),
            q,
            roots,
        })
    }

    /// Replaces the cached root of unity for `k` (which must have exact
    /// order `k`).
    pub fn with_root(mut self, k: u64, zeta: F::Elem) -> Result<Self> {
        let field = self.ring.field();
        let order = crate::field::element_order(field, &zeta)?;
        if order != k {
            return Err(Error::NotDivisorOfGroupOrder { k, order });
        }
        match self.roots.iter_mut().find(|(p, _)| *p == k) {
            Some(slot) => slot.1 = zeta,
            None => self.roots.push((k, zeta)),
        }
        Ok(self)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The fixed generator `ζ_k` used by this constructor.
    pub fn root_of_unity(&self, k: u64) -> Result<F::Elem> {
        match self.roots.iter().find(|(p, _)| *p == k) {
            Some((_, z)) => Ok(z.clone()),
            None => kth_root_of_unity(self.field(), k),
        }
    }

    fn check_root_exponent(&self, k: u64) -> Result<()> {
        if k == 0 || !(self.q - 1).is_multiple_of(k) {
            return Err(Error::NotDivisorOfGroupOrder { k, order: self.q - 1 });
        }
        Ok(())
    }

    fn check_shape(&self, f: &Poly<F::Elem>) -> Result<()> {
        if f.degree().is_none_or(|d| d == 0) {
            return Err(Error::ConstantPolynomial);
        }
        if !self.ring.is_monic(f) {
            return Err(Error::NotMonic);
        }
        if self.field().is_zero(&f.coeffs()[0]) {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(())
    }

    fn check_irreducible(&self, f: &Poly<F::Elem>) -> Result<()> {
        self.check_shape(f)?;
        if !self.ring.is_irreducible(f)? {
            return Err(Error::Reducible);
        }
        Ok(())
    }

    /// `∏_{j=1..count} ζ^{-jn} f(ζ^j X)`; each factor is monic, so the
    /// product is too.
    pub fn twisted_product(
        &self,
        f: &Poly<F::Elem>,
        zeta: &F::Elem,
        count: u64,
    ) -> Result<Poly<F::Elem>> {
        let field = self.field();
        let mut acc = self.ring.one();
        let mut c = field.one();
        for _ in 0..count {
            c = field.mul(&c, zeta);
            let twist = self.ring.scale_twist(f, &c)?;
            acc = self.ring.mul(&acc, &twist);
        }
        Ok(acc)
    }

    /// Squaring step for odd `q`: `(-1)^n f(X) f(-X) = C(X^2)`.
    pub fn kk_step(&self, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if self.q.is_multiple_of(2) {
            return Err(Error::EvenCharacteristic);
        }
        self.check_irreducible(f)?;
        if self.ring.composition_degree(f, 2)? != 1 {
            return Err(Error::SquareComposition);
        }
        let field = self.field();
        let n = f.degree().unwrap();
        let minus_one = field.neg(&field.one());
        let reflected = self.ring.from_coeffs(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { field.neg(c) } else { c.clone() })
                .collect(),
        );
        let mut prod = self.ring.mul(f, &reflected);
        if n % 2 == 1 {
            prod = self.ring.scale(&minus_one, &prod);
        }
        self.ring.extract_composition(&prod, 2)
    }

    /// `m_{β^k}` for a prime `k | q - 1`.
    pub fn prime_step(&self, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
        Ok(self.prime_step_traced(f, k)?.0)
    }

    /// Like [`Self::prime_step`], also reporting whether the composition
    /// shortcut applied.
    pub fn prime_step_traced(&self, f: &Poly<F::Elem>, k: u64) -> Result<(Poly<F::Elem>, bool)> {
        if !arith::is_prime(k) {
            return Err(Error::NotPrime(k));
        }
        self.check_root_exponent(k)?;
        self.check_shape(f)?;
        let zeta = self.root_of_unity(k)?;
        Ok(self.prime_step_with(f, k, &zeta))
    }

    /// The unchecked prime step used by the iteration loops.
    pub(crate) fn prime_step_with(
        &self,
        f: &Poly<F::Elem>,
        k: u64,
        zeta: &F::Elem,
    ) -> (Poly<F::Elem>, bool) {
        let ring = &self.ring;
        if let Ok(g) = ring.extract_composition(f, k) {
            return (g, true);
        }
        let prod = self
            .twisted_product(f, zeta, k)
            .expect("root of unity is nonzero");
        let out = ring
            .extract_composition(&prod, k)
            .expect("twisted product is a composition with X^k");
        (out, false)
    }

    /// `m_{β^k}` for any `k | q - 1`: with `t` the composition degree,
    /// `f = g(X^t)` and `m_{β^k}` is the `X^{k/t}` extraction of the
    /// `(k/t)`-fold twisted product of `g`.
    pub fn cor8_step(&self, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
        self.check_root_exponent(k)?;
        self.check_shape(f)?;
        if k == 1 {
            return Ok(f.clone());
        }
        let t = self.ring.composition_degree(f, k)?;
        let g = self.ring.extract_composition(f, t)?;
        let rest = k / t;
        if rest == 1 {
            return Ok(g);
        }
        let zeta = self.root_of_unity(rest)?;
        let prod = self.twisted_product(&g, &zeta, rest)?;
        self.ring.extract_composition(&prod, rest)
    }

    /// The literal reading: `m_{β^k}(X^k) = ∏_{j=1..k/t} ζ_k^{-jn} f(ζ_k^j X)`.
    pub fn cor8_direct(&self, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
        self.check_root_exponent(k)?;
        self.check_shape(f)?;
        let t = self.ring.composition_degree(f, k)?;
        let zeta = self.root_of_unity(k)?;
        let prod = self.twisted_product(f, &zeta, k / t)?;
        self.ring.extract_composition(&prod, k)
    }

    /// Raises every coefficient to the power `d = p^v`.
    pub fn frobenius_descent(&self, f: &Poly<F::Elem>, d: u64) -> Result<Poly<F::Elem>> {
        let p = self.field().characteristic();
        let mut rest = d;
        while rest > 1 && rest.is_multiple_of(p) {
            rest /= p;
        }
        if d == 0 || rest != 1 {
            return Err(Error::NotCharacteristicPower(d));
        }
        if d == 1 {
            return Ok(f.clone());
        }
        let field = self.field();
        Ok(self.ring.from_coeffs(
            f.coeffs().iter().map(|c| field.pow(c, d as u128)).collect(),
        ))
    }

    /// `m_{β^k}` for every `k` whose prime factors divide `q(q - 1)`.
    ///
    /// Primes dividing `q - 1` are applied in ascending order with
    /// multiplicity; the characteristic part is applied last.
    pub fn construct_general(&self, f: &Poly<F::Elem>, k: u64) -> Result<ConstructionResult<F::Elem>> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        self.check_irreducible(f)?;
        let p = self.field().characteristic();
        let kf = factorize(k);
        if let Some(prime) = kf
            .primes()
            .find(|&r| r != p && !(self.q - 1).is_multiple_of(r))
        {
            return Err(Error::UnsupportedPrime { prime });
        }
        let mut cur = f.clone();
        let mut steps = Vec::new();
        for &(prime, e) in kf.pairs() {
            if prime == p {
                continue;
            }
            let zeta = self.root_of_unity(prime)?;
            for _ in 0..e {
                let (next, shortcut) = self.prime_step_with(&cur, prime, &zeta);
                cur = next;
                steps.push(Step {
                    prime,
                    kind: if shortcut { StepKind::Shortcut } else { StepKind::TwistedProduct },
                });
            }
        }
        let v = kf.exponent_of(p);
        if v > 0 {
            cur = self.frobenius_descent(&cur, p.pow(v))?;
            steps.extend((0..v).map(|_| Step {
                prime: p,
                kind: StepKind::Frobenius,
            }));
        }
        Ok(ConstructionResult {
            output: cur,
            input_k: k,
            steps,
        })
    }

    /// Reference construction through the characteristic polynomial:
    /// `χ_{β^k}(X^k)` from the product over `k'`-th roots of unity (formed
    /// in an extension when `k' ∤ q - 1`), extraction of `χ_{β^k}`, then
    /// `m_{β^k} = gcd(χ_{β^k}, X^{q^m} - X)` with `m` its degree from the
    /// order of `f`.
    pub fn ad_construct(&self, f: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        self.check_irreducible(f)?;
        let e = self.ring.poly_order(f)?;
        if k > e {
            return Err(Error::ExponentExceedsOrder { k, e });
        }
        if k == 1 {
            return Ok(f.clone());
        }
        let chi_of_power = oracle::daykin_product(self.field(), f, k)?;
        let chi = self.ring.extract_composition(&chi_of_power, k)?;
        let m = min_degree_for_order(self.q, e / arith::gcd(e, k))?;
        let qm = (self.q as u128).checked_pow(m as u32).ok_or(Error::Overflow)?;
        let x = self.ring.x();
        let xqm = self.ring.pow_mod(&x, qm, &chi)?;
        let h = self.ring.sub(&xqm, &self.ring.rem(&x, &chi)?);
        let out = self.ring.gcd(&chi, &h);
        debug_assert_eq!(out.degree(), Some(m as usize));
        Ok(out)
    }
}

/// Least `m ≥ 1` with `order | q^m - 1`.
pub fn min_degree_for_order(q: u64, order: u64) -> Result<u64> {
    if order == 1 {
        return Ok(1);
    }
    arith::mult_order(q % order, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{FieldElement, FieldSpec};

    fn poly(field: &FieldSpec, text: &str) -> Poly<FieldElement> {
        field.parse_poly(text).unwrap()
    }

    #[test]
    fn kk_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let c = Constructor::new(f3.clone()).unwrap();
        let f = poly(&f3, "x^2+x+2");
        assert_eq!(c.kk_step(&f).unwrap(), poly(&f3, "x^2+1"));
        assert_eq!(
            oracle::min_poly_power(&f3, &f, 2).unwrap(),
            poly(&f3, "x^2+1")
        );
        assert_eq!(
            c.kk_step(&poly(&f3, "x^2+1")).unwrap_err(),
            Error::SquareComposition
        );
        let f5 = FieldSpec::prime(5).unwrap();
        let c5 = Constructor::new(f5.clone()).unwrap();
        let lin = poly(&f5, "x+3");
        let expected = oracle::min_poly_power(&f5, &lin, 2).unwrap();
        assert_eq!(c5.kk_step(&lin).unwrap(), expected);
        // root -3 = 2, square 4, minimal polynomial X - 4 = X + 1
        assert_eq!(expected, poly(&f5, "x+1"));
        let c16 = Constructor::new(FieldSpec::gf16()).unwrap();
        assert_eq!(
            c16.kk_step(&poly(&FieldSpec::gf16(), "x+1")).unwrap_err(),
            Error::EvenCharacteristic
        );
    }

    #[test]
    fn prime_step_examples() {
        let f16 = FieldSpec::gf16();
        let c = Constructor::new(f16.clone()).unwrap();
        let ring = c.ring();
        let mut f = poly(&f16, "x^2+a*x+1");
        if !ring.is_irreducible(&f).unwrap() {
            f = oracle::find_irreducible(&f16, 2);
        }
        assert_eq!(
            c.prime_step(&f, 3).unwrap(),
            oracle::min_poly_power(&f16, &f, 3).unwrap()
        );
        // shortcut: f = g(X^3)
        let g = f.clone();
        let composed = ring.compose_power(&g, 3);
        if ring.is_irreducible(&composed).unwrap() {
            assert_eq!(c.prime_step_traced(&composed, 3).unwrap(), (g, true));
        }
        let f3 = FieldSpec::prime(3).unwrap();
        let c3 = Constructor::new(f3.clone()).unwrap();
        assert_eq!(
            c3.prime_step(&poly(&f3, "x^2+x+2"), 2).unwrap(),
            poly(&f3, "x^2+1")
        );
        assert_eq!(c.prime_step(&f, 4).unwrap_err(), Error::NotPrime(4));
        assert!(c.prime_step(&f, 7).is_err());
        assert_eq!(c.prime_step(&ring.x(), 3).unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn shortcut_fires_for_compositions() {
        // X^3 - a over F_16 with a of order 15 is irreducible (3 | 15 and a is
        // not a cube), so it is g(X^3) with g = X - a
        let f16 = FieldSpec::gf16();
        let c = Constructor::new(f16.clone()).unwrap();
        let f = poly(&f16, "x^3 + a");
        assert!(c.ring().is_irreducible(&f).unwrap());
        let (out, shortcut) = c.prime_step_traced(&f, 3).unwrap();
        assert!(shortcut);
        assert_eq!(out, poly(&f16, "x + a"));
        assert_eq!(out, oracle::min_poly_power(&f16, &f, 3).unwrap());
    }

    #[test]
    fn frobenius_examples() {
        let f4 = FieldSpec::new(2, 2, &[1, 1, 1]).unwrap();
        let c = Constructor::new(f4.clone()).unwrap();
        let f = poly(&f4, "x^2+x+a");
        assert!(c.ring().is_irreducible(&f).unwrap());
        let out = c.frobenius_descent(&f, 2).unwrap();
        assert_eq!(out, poly(&f4, "x^2+x+a+1"));
        assert_eq!(out, oracle::min_poly_power(&f4, &f, 2).unwrap());
        assert_eq!(c.frobenius_descent(&f, 1).unwrap(), f);
        assert_eq!(c.frobenius_descent(&f, 6).unwrap_err(), Error::NotCharacteristicPower(6));
        let f5 = FieldSpec::prime(5).unwrap();
        let c5 = Constructor::new(f5.clone()).unwrap();
        let g = poly(&f5, "x^2+2");
        assert_eq!(c5.frobenius_descent(&g, 125).unwrap(), g);
    }

    #[test]
    fn general_examples() {
        let f16 = FieldSpec::gf16();
        let c = Constructor::new(f16.clone()).unwrap();
        let f1 = poly(&f16, "x^8+x^5+x^3+x^2+a");
        let r = c.construct_general(&f1, 1).unwrap();
        assert_eq!(r.output, f1);
        assert!(r.steps.is_empty());
        let r = c.construct_general(&f1, 3 * 5 * 5 * 4).unwrap();
        let primes: Vec<u64> = r.steps.iter().map(|s| s.prime).collect();
        assert_eq!(primes, alloc::vec![3, 5, 5, 2, 2]);
        assert_eq!(primes.iter().product::<u64>(), 300);
        let stepwise = c
            .construct_general(&c.construct_general(&f1, 15).unwrap().output, 20)
            .unwrap();
        assert_eq!(r.output, stepwise.output);
        assert_eq!(
            c.construct_general(&f1, 7).unwrap_err(),
            Error::UnsupportedPrime { prime: 7 }
        );
    }

    #[test]
    fn gf8_primitive_seventh_power() {
        let f8 = FieldSpec::gf8();
        let c = Constructor::new(f8.clone()).unwrap();
        let f = poly(&f8, "x^5 + a*x^4 + x^3 + a*x^2 + (a^2+a)*x + a^2");
        let out = c.construct_general(&f, 7).unwrap().output;
        assert_eq!(out, oracle::min_poly_power(&f8, &f, 7).unwrap());
        assert_eq!(out.degree(), Some(5));
    }

    #[test]
    fn cor8_paths_agree() {
        let f16 = FieldSpec::gf16();
        let c = Constructor::new(f16.clone()).unwrap();
        let f1 = poly(&f16, "x^8+x^5+x^3+x^2+a");
        assert_eq!(c.cor8_step(&f1, 1).unwrap(), f1);
        let m3 = c.cor8_step(&f1, 3).unwrap();
        assert_eq!(m3, oracle::min_poly_power(&f16, &f1, 3).unwrap());
        for k in [3u64, 5, 15] {
            assert_eq!(c.cor8_step(&f1, k).unwrap(), c.cor8_direct(&f1, k).unwrap());
        }
        assert!(c.cor8_step(&f1, 2).is_err());
    }

    #[test]
    fn ad_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let c = Constructor::new(f3.clone()).unwrap();
        let f = poly(&f3, "x^2+x+2");
        assert_eq!(c.ad_construct(&f, 1).unwrap(), f);
        assert_eq!(c.ad_construct(&f, 2).unwrap(), poly(&f3, "x^2+1"));
        assert_eq!(c.ad_construct(&f, 4).unwrap(), c.construct_general(&f, 4).unwrap().output);
        assert_eq!(
            c.ad_construct(&f, 9).unwrap_err(),
            Error::ExponentExceedsOrder { k: 9, e: 8 }
        );
    }
}
