//! Seeded random cases for agreement sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use irredforge_core::arith::factorize;
use irredforge_core::{Field, FieldElement, FieldSpec, Poly, PolyRing};

/// The small fields used by sweeps, as `(p, m, modulus)`.
pub const SWEEP_FIELDS: [(u64, u32, &str); 9] = [
    (3, 1, ""),
    (2, 2, "y^2+y+1"),
    (5, 1, ""),
    (7, 1, ""),
    (2, 3, "y^3+y+1"),
    (3, 2, "y^2+1"),
    (11, 1, ""),
    (13, 1, ""),
    (2, 4, "y^4+y+1"),
];

pub fn sweep_fields() -> Vec<FieldSpec> {
    SWEEP_FIELDS
        .iter()
        .map(|&(p, m, modulus)| crate::field_from_parts(p, m, modulus).expect("sweep field"))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SweepCase {
    pub field: FieldSpec,
    pub f: Poly<FieldElement>,
    pub k: u64,
}

/// Exponents `1 ≤ k ≤ max` whose prime factors all divide `q(q - 1)`.
pub fn admissible_exponents(q: u64, max: u64) -> Vec<u64> {
    let allowed = q * (q - 1);
    (1..=max)
        .filter(|&k| factorize(k).primes().all(|p| allowed.is_multiple_of(p)))
        .collect()
}

/// A random monic irreducible of degree `d` with nonzero constant term.
pub fn random_irreducible(field: &FieldSpec, d: usize, rng: &mut impl Rng) -> Poly<FieldElement> {
    let ring = PolyRing::new(field.clone());
    let q = field.size();
    loop {
        let mut coeffs: Vec<FieldElement> = (0..d)
            .map(|_| field.element_at(rng.random_range(0..q)))
            .collect();
        if field.is_zero(&coeffs[0]) {
            continue;
        }
        coeffs.push(field.one());
        let f = ring.from_coeffs(coeffs);
        if ring.is_irreducible(&f).expect("nonconstant") {
            return f;
        }
    }
}

/// `count` cases drawn deterministically from `seed`: a field from
/// [`SWEEP_FIELDS`], an irreducible of degree 1 to 6, and an admissible
/// `k ≤ 200`.
pub fn random_cases(seed: u64, count: usize) -> Vec<SweepCase> {
    let fields = sweep_fields();
    let exps: Vec<Vec<u64>> = fields
        .iter()
        .map(|f| admissible_exponents(f.q(), 200))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let i = rng.random_range(0..fields.len());
            let d = rng.random_range(1..=6);
            let f = random_irreducible(&fields[i], d, &mut rng);
            let k = exps[i][rng.random_range(0..exps[i].len())];
            SweepCase {
                field: fields[i].clone(),
                f,
                k,
            }
        })
        .collect()
}
