#![allow(dead_code)]

use irredforge_core::arith::factorize;
use irredforge_core::{Field, FieldElement, FieldSpec, Poly, PolyRing};
use rand::Rng;

pub fn small_fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::prime(2).unwrap(),
        FieldSpec::prime(3).unwrap(),
        FieldSpec::new(2, 2, &[1, 1, 1]).unwrap(),
        FieldSpec::prime(5).unwrap(),
        FieldSpec::prime(7).unwrap(),
        FieldSpec::gf8(),
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap(),
        FieldSpec::prime(11).unwrap(),
        FieldSpec::prime(13).unwrap(),
        FieldSpec::gf16(),
    ]
}

pub fn random_irreducible(field: &FieldSpec, d: usize, rng: &mut impl Rng) -> Poly<FieldElement> {
    let ring = PolyRing::new(field.clone());
    loop {
        let mut coeffs: Vec<FieldElement> = (0..d)
            .map(|_| field.element_at(rng.random_range(0..field.size())))
            .collect();
        if field.is_zero(&coeffs[0]) {
            continue;
        }
        coeffs.push(field.one());
        let f = ring.from_coeffs(coeffs);
        if ring.is_irreducible(&f).unwrap() {
            return f;
        }
    }
}

/// Every monic irreducible of degree `d` with nonzero constant term.
pub fn all_irreducibles(field: &FieldSpec, d: usize) -> Vec<Poly<FieldElement>> {
    let ring = PolyRing::new(field.clone());
    let q = field.size();
    let total = q.pow(d as u32);
    (0..total)
        .filter_map(|mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(field.element_at(idx % q));
                idx /= q;
            }
            coeffs.push(field.one());
            let f = ring.from_coeffs(coeffs);
            (!field.is_zero(&f.coeffs()[0]) && ring.is_irreducible(&f).unwrap()).then_some(f)
        })
        .collect()
}

/// `1 ≤ k ≤ max` with all prime factors dividing `q(q-1)`.
pub fn admissible(q: u64, max: u64) -> Vec<u64> {
    (1..=max)
        .filter(|&k| factorize(k).primes().all(|p| (q * (q - 1)).is_multiple_of(p)))
        .collect()
}

pub fn divisors_of(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
