//! Dense univariate polynomials over any [`Field`].

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{self, factorize};
use crate::error::{Error, Result};
use crate::field::Field;

/// A polynomial with coefficients degree 0 first and no trailing zeros;
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Coefficient of `X^i`, `None` past the degree.
    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Polynomial arithmetic over a fixed field.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Wraps a coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c · X^i`.
    pub fn monomial(&self, c: F::Elem, i: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); i];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn is_monic(&self, f: &Poly<F::Elem>) -> bool {
        f.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = self.field.add(o, s);
        }
        self.from_coeffs(out)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = &self.field;
        let mut out = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(b.leading().unwrap())?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), self.from_coeffs(rem)));
        }
        let mut quot = vec![f.zero(); rem.len() - db];
        for top in (db..rem.len()).rev() {
            if f.is_zero(&rem[top]) {
                continue;
            }
            let c = f.mul(&rem[top], &lead_inv);
            for (k, bk) in b.coeffs.iter().enumerate() {
                let idx = top - db + k;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, bk));
            }
            quot[top - db] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.div_rem(a, b)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => Poly::zero(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv, a)
            }
        }
    }

    /// Monic greatest common divisor (`gcd(0, 0) = 0`).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = self.rem(&x, &y).expect("divisor is nonzero");
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
    pub fn inv_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (mut r0, mut r1) = (m.clone(), self.rem(a, m)?);
        let (mut s0, mut s1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1)?;
            let s = self.sub(&s0, &self.mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Err(Error::ZeroInverse);
        }
        let c = self.field.inv(&r0.coeffs[0])?;
        self.rem(&self.scale(&c, &s0), m)
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        self.rem(&self.mul(a, b), m)
    }

    /// `base^exp mod m` by square-and-multiply on residues.
    pub fn pow_mod(
        &self,
        base: &Poly<F::Elem>,
        mut exp: u128,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        let mut acc = self.rem(&self.one(), m)?;
        let mut b = self.rem(base, m)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_mod(&acc, &b, m)?;
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul_mod(&b, &b, m)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, f: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let fld = &self.field;
        f.coeffs
            .iter()
            .rev()
            .fold(fld.zero(), |acc, c| fld.add(&fld.mul(&acc, x), c))
    }

    pub fn pow(&self, f: &Poly<F::Elem>, mut exp: u64) -> Poly<F::Elem> {
        let mut acc = self.one();
        let mut b = f.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// `f(X^k)`.
    pub fn compose_power(&self, f: &Poly<F::Elem>, k: usize) -> Poly<F::Elem> {
        if f.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.field.zero(); (f.coeffs.len() - 1) * k + 1];
        for (i, c) in f.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Poly { coeffs: out }
    }

    /// `X^(q^i) mod f` for `i = 0..=count`.
    fn frobenius_powers(&self, f: &Poly<F::Elem>, count: usize) -> Result<Vec<Poly<F::Elem>>> {
        let q = self.field.size();
        let mut out = Vec::with_capacity(count + 1);
        let mut cur = self.rem(&self.x(), f)?;
        out.push(cur.clone());
        for _ in 0..count {
            cur = self.pow_mod(&cur, q, f)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// Rabin's test: `X^(q^n) ≡ X mod f` and `gcd(X^(q^(n/t)) - X, f) = 1`
    /// for every prime `t | n`.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> Result<bool> {
        let n = match f.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic(f);
        let powers = self.frobenius_powers(&f, n)?;
        let x = self.rem(&self.x(), &f)?;
        if powers[n] != x {
            return Ok(false);
        }
        for t in factorize(n as u64).primes() {
            let h = self.sub(&powers[n / t as usize], &x);
            if self.gcd(&h, &f).degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Order of a monic irreducible `f` with `f(0) ≠ 0`: the least `e` with
    /// `f | X^e - 1`. Strips prime factors from `q^n - 1`.
    pub fn poly_order(&self, f: &Poly<F::Elem>) -> Result<u64> {
        let n = match f.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if self.field.is_zero(&f.coeffs[0]) {
            return Err(Error::ZeroConstantTerm);
        }
        if !self.is_irreducible(f)? {
            return Err(Error::Reducible);
        }
        let f = self.monic(f);
        let group = self.field.size().checked_pow(n as u32).ok_or(Error::Overflow)? - 1;
        let group = u64::try_from(group).map_err(|_| Error::Overflow)?;
        let x = self.x();
        let one = self.one();
        Ok(arith::order_from_exponent(&factorize(group), |e| {
            self.pow_mod(&x, e as u128, &f).map(|r| r == one).unwrap_or(false)
        }))
    }

    /// The twist `c^(-n) f(cX)`: coefficient `i` becomes `a_i c^(i-n)`.
    pub fn scale_twist(&self, f: &Poly<F::Elem>, c: &F::Elem) -> Result<Poly<F::Elem>> {
        let fld = &self.field;
        let c_inv = fld.inv(c)?;
        let n = f.degree().ok_or(Error::ConstantPolynomial)?;
        let mut out = f.coeffs.clone();
        // walk down from the top: factor c^(i-n) = c_inv^(n-i)
        let mut factor = fld.one();
        for i in (0..=n).rev() {
            out[i] = fld.mul(&out[i], &factor);
            factor = fld.mul(&factor, &c_inv);
        }
        Ok(self.from_coeffs(out))
    }

    /// Largest `t | gcd(n, k)` with `f = g(X^t)`, computed as
    /// `gcd(k, gcd of the exponents carrying nonzero coefficients)`.
    pub fn composition_degree(&self, f: &Poly<F::Elem>, k: u64) -> Result<u64> {
        if f.coeffs.first().is_none_or(|c| self.field.is_zero(c)) {
            return Err(Error::ZeroConstantTerm);
        }
        if f.degree() == Some(0) {
            return Err(Error::ConstantPolynomial);
        }
        Ok(arith::gcd(k, support_gcd(&self.field, f)))
    }

    /// The `g` with `g(X^k) = h`.
    pub fn extract_composition(&self, h: &Poly<F::Elem>, k: u64) -> Result<Poly<F::Elem>> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let k = k as usize;
        let mut out = Vec::with_capacity(h.coeffs.len() / k + 1);
        for (i, c) in h.coeffs.iter().enumerate() {
            if i % k == 0 {
                out.push(c.clone());
            } else if !self.field.is_zero(c) {
                return Err(Error::NotAComposition {
                    exponent: i,
                    k: k as u64,
                });
            }
        }
        Ok(self.from_coeffs(out))
    }

    /// `f(X + a)` for nonzero `a`, by Horner's scheme.
    pub fn substitute_shift(&self, f: &Poly<F::Elem>, a: &F::Elem) -> Result<Poly<F::Elem>> {
        if self.field.is_zero(a) {
            return Err(Error::ZeroShift);
        }
        let lin = self.from_coeffs(vec![a.clone(), self.field.one()]);
        let mut acc = Poly::zero();
        for c in f.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, &lin), &self.constant(c.clone()));
        }
        Ok(acc)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self, f: &Poly<F::Elem>) -> usize {
        f.coeffs.iter().filter(|c| !self.field.is_zero(c)).count()
    }

    pub fn derivative(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.field.mul(&self.field.from_u64(i as u64), c))
                .collect(),
        )
    }
}

/// gcd of the exponents carrying nonzero coefficients (0 for constants).
fn support_gcd<F: Field>(field: &F, f: &Poly<F::Elem>) -> u64 {
    f.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .fold(0u64, |g, (i, _)| arith::gcd(g, i as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{FieldElement, FieldSpec};

    fn f3() -> PolyRing<FieldSpec> {
        PolyRing::new(FieldSpec::prime(3).unwrap())
    }

    fn p(ring: &PolyRing<FieldSpec>, c: &[u64]) -> Poly<FieldElement> {
        ring.from_coeffs(c.iter().map(|&x| ring.field().from_u64(x)).collect())
    }

    /// Every monic polynomial of degree `n` over a prime-indexed field.
    fn monics(ring: &PolyRing<FieldSpec>, n: usize) -> Vec<Poly<FieldElement>> {
        let q = ring.field().size() as usize;
        let total = q.pow(n as u32);
        (0..total)
            .map(|mut idx| {
                let mut c = Vec::with_capacity(n + 1);
                for _ in 0..n {
                    c.push(ring.field().element_at((idx % q) as u128));
                    idx /= q;
                }
                c.push(ring.field().one());
                ring.from_coeffs(c)
            })
            .collect()
    }

    /// Irreducibility by trial division with every monic of degree ≤ n/2.
    fn brute_irreducible(ring: &PolyRing<FieldSpec>, f: &Poly<FieldElement>) -> bool {
        let n = f.degree().unwrap();
        (1..=n / 2).all(|d| {
            monics(ring, d)
                .iter()
                .all(|g| !ring.rem(f, g).unwrap().is_zero())
        })
    }

    #[test]
    fn arithmetic_examples() {
        let r = f3();
        let f = p(&r, &[1, 0, 1]);
        assert_eq!(r.gcd(&f, &Poly::zero()), f);
        assert_eq!(r.gcd(&r.scale(&r.field().from_u64(2), &f), &Poly::zero()), f);
        assert_eq!(r.mul(&f, &f), p(&r, &[1, 0, 2, 0, 1]));
        assert_eq!(r.pow_mod(&r.x(), 9, &f).unwrap(), r.x());
        assert_eq!(r.pow_mod(&r.x(), 3, &f).unwrap(), p(&r, &[0, 2]));
        assert_eq!(r.div_rem(&f, &Poly::zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn div_rem_reconstructs() {
        let r = PolyRing::new(FieldSpec::gf16());
        let a = r.from_coeffs((1..9u32).map(FieldElement).collect());
        let b = r.from_coeffs(vec![FieldElement(3), FieldElement(7), FieldElement(5)]);
        let (q, rem) = r.div_rem(&a, &b).unwrap();
        assert!(rem.degree().is_none_or(|d| d < 2));
        assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
        let inv = r.inv_mod(&b, &a).unwrap_or_else(|_| Poly::zero());
        if !inv.is_zero() {
            assert_eq!(r.mul_mod(&inv, &b, &a).unwrap(), r.one());
        }
    }

    #[test]
    fn irreducibility_examples() {
        let r = f3();
        assert!(r.is_irreducible(&p(&r, &[2, 1, 1])).unwrap());
        assert!(!r.is_irreducible(&p(&r, &[1, 2, 1])).unwrap());
        assert_eq!(
            r.is_irreducible(&p(&r, &[1])).unwrap_err(),
            Error::ConstantPolynomial
        );
        let f16 = FieldSpec::gf16();
        let r16 = PolyRing::new(f16.clone());
        let f1 = f16.parse_poly("x^8+x^5+x^3+x^2+a").unwrap();
        assert!(r16.is_irreducible(&f1).unwrap());
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for field in [
            FieldSpec::prime(2).unwrap(),
            FieldSpec::prime(3).unwrap(),
            FieldSpec::new(2, 2, &[1, 1, 1]).unwrap(),
            FieldSpec::prime(5).unwrap(),
        ] {
            let r = PolyRing::new(field.clone());
            let max_deg = match field.q() {
                2 => 6,
                3 => 5,
                _ => 4,
            };
            for n in 1..=max_deg {
                for f in monics(&r, n) {
                    assert_eq!(r.is_irreducible(&f).unwrap(), brute_irreducible(&r, &f));
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        let r = PolyRing::new(FieldSpec::gf8());
        let f = r.from_coeffs(vec![r.field().neg(&r.field().one()), r.field().one()]);
        assert_eq!(r.poly_order(&f).unwrap(), 1);
        assert_eq!(r.poly_order(&r.x()).unwrap_err(), Error::ZeroConstantTerm);
        let f16 = FieldSpec::gf16();
        let r16 = PolyRing::new(f16.clone());
        let f1 = f16.parse_poly("x^8+x^5+x^3+x^2+a").unwrap();
        assert_eq!(r16.poly_order(&f1).unwrap(), 4294967295);
        let f2 = f16
            .parse_poly(
                "x^9 + (a^2+a)*x^8 + (a^3+a^2)*x^7 + a*x^6 + x^5 + (a^3+a^2+a)*x^4 \
                 + (a^2+a+1)*x^3 + a^2*x^2 + a^3*x + a^3+a^2+a",
            )
            .unwrap();
        assert_eq!(r16.poly_order(&f2).unwrap(), 68719476735);
        let red = p(&f3(), &[1, 2, 1]);
        assert_eq!(f3().poly_order(&red).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn order_divides_group_order_and_is_exact() {
        let r = f3();
        for n in 1..=4usize {
            for f in monics(&r, n) {
                if f.coeffs()[0].packed() == 0 || !r.is_irreducible(&f).unwrap() {
                    continue;
                }
                let e = r.poly_order(&f).unwrap();
                let group = 3u64.pow(n as u32) - 1;
                assert_eq!(group % e, 0);
                for d in 1..n {
                    if n % d == 0 {
                        assert_ne!((3u64.pow(d as u32) - 1) % e, 0);
                    }
                }
                // brute: f | X^e - 1 and for no smaller e
                let brute = (1..=group)
                    .find(|&t| r.pow_mod(&r.x(), t as u128, &f).unwrap() == r.one())
                    .unwrap();
                assert_eq!(brute, e);
            }
        }
    }

    #[test]
    fn twist_examples() {
        let r = f3();
        let f = p(&r, &[2, 1, 1]);
        let one = r.field().one();
        let two = r.field().from_u64(2);
        assert_eq!(r.scale_twist(&f, &one).unwrap(), f);
        assert_eq!(r.scale_twist(&f, &two).unwrap(), p(&r, &[2, 2, 1]));
        let back = r.scale_twist(&r.scale_twist(&f, &two).unwrap(), &r.field().inv(&two).unwrap());
        assert_eq!(back.unwrap(), f);
        assert_eq!(r.scale_twist(&f, &r.field().zero()).unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn twist_is_a_group_action() {
        let field = FieldSpec::gf16();
        let r = PolyRing::new(field.clone());
        let f = field.parse_poly("x^5 + a*x^3 + (a^2+1)*x + a^3").unwrap();
        for c in 1..16u32 {
            for d in 1..16u32 {
                let (c, d) = (FieldElement(c), FieldElement(d));
                let lhs = r.scale_twist(&f, &field.mul(&c, &d)).unwrap();
                let rhs = r.scale_twist(&r.scale_twist(&f, &d).unwrap(), &c).unwrap();
                assert_eq!(lhs, rhs);
                assert!(r.is_monic(&lhs));
            }
        }
    }

    #[test]
    fn composition_examples() {
        let r = f3();
        assert_eq!(r.composition_degree(&p(&r, &[2, 1, 1]), 2).unwrap(), 1);
        assert_eq!(r.composition_degree(&p(&r, &[2, 0, 1, 0, 1]), 2).unwrap(), 2);
        assert_eq!(
            r.composition_degree(&p(&r, &[2, 0, 0, 1, 0, 0, 1]), 6).unwrap(),
            3
        );
        assert_eq!(
            r.composition_degree(&p(&r, &[0, 1]), 2).unwrap_err(),
            Error::ZeroConstantTerm
        );
        assert_eq!(
            r.extract_composition(&p(&r, &[1, 0, 0, 0, 1]), 2).unwrap(),
            p(&r, &[1, 0, 1])
        );
        let f = p(&r, &[2, 1, 1]);
        assert_eq!(r.extract_composition(&f, 1).unwrap(), f);
        assert_eq!(
            r.extract_composition(&f, 2).unwrap_err(),
            Error::NotAComposition { exponent: 1, k: 2 }
        );
        let f16 = FieldSpec::gf16();
        let r16 = PolyRing::new(f16.clone());
        let h = f16.parse_poly("x^6 + a*x^3 + 1").unwrap();
        assert_eq!(
            r16.extract_composition(&h, 3).unwrap(),
            f16.parse_poly("x^2 + a*x + 1").unwrap()
        );
    }

    #[test]
    fn shift_examples() {
        let r = f3();
        let f = p(&r, &[1, 0, 1]);
        let one = r.field().one();
        let g = r.substitute_shift(&f, &one).unwrap();
        assert_eq!(g, p(&r, &[2, 2, 1]));
        assert_eq!(r.composition_degree(&g, 2).unwrap(), 1);
        assert_eq!(r.substitute_shift(&f, &r.field().zero()).unwrap_err(), Error::ZeroShift);
    }

    #[test]
    fn weight_examples() {
        let f16 = FieldSpec::gf16();
        let r = PolyRing::new(f16.clone());
        assert_eq!(r.weight(&f16.parse_poly("x^8+x^5+x^3+x^2+a").unwrap()), 5);
        assert_eq!(r.weight(&r.monomial(r.field().one(), 7)), 1);
    }
}
