use irredforge_core::{Constructor, Field, FieldElement, FieldSpec, Poly, PolyRing};
use proptest::prelude::*;

fn gf16_poly(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..16, 0..max_len)
}

fn build(ring: &PolyRing<FieldSpec>, coeffs: &[u32]) -> Poly<FieldElement> {
    let f = ring.field();
    ring.from_coeffs(coeffs.iter().map(|&c| f.element_at(c as u128)).collect())
}

proptest! {
    #[test]
    fn division_reconstructs(a in gf16_poly(12), b in gf16_poly(6)) {
        let ring = PolyRing::new(FieldSpec::gf16());
        let (a, b) = (build(&ring, &a), build(&ring, &b));
        prop_assume!(!b.is_zero());
        let (q, r) = ring.div_rem(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&q, &b), &r), a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn gcd_divides_both(a in gf16_poly(8), b in gf16_poly(8), c in gf16_poly(4)) {
        let ring = PolyRing::new(FieldSpec::gf16());
        let c = build(&ring, &c);
        let a = ring.mul(&build(&ring, &a), &c);
        let b = ring.mul(&build(&ring, &b), &c);
        let g = ring.gcd(&a, &b);
        prop_assume!(!g.is_zero());
        prop_assert!(ring.rem(&a, &g).unwrap().is_zero());
        prop_assert!(ring.rem(&b, &g).unwrap().is_zero());
        if !c.is_zero() {
            prop_assert!(ring.rem(&g, &c).unwrap().is_zero());
        }
    }

    #[test]
    fn composition_round_trips(a in gf16_poly(8), k in 1usize..6) {
        let ring = PolyRing::new(FieldSpec::gf16());
        let a = build(&ring, &a);
        let composed = ring.compose_power(&a, k);
        prop_assert_eq!(ring.extract_composition(&composed, k as u64).unwrap(), a);
    }

    #[test]
    fn twists_are_monic_and_invertible(a in gf16_poly(8), c in 1u32..16) {
        let ring = PolyRing::new(FieldSpec::gf16());
        let field = ring.field().clone();
        let mut a = build(&ring, &a);
        prop_assume!(a.degree().is_some_and(|d| d > 0));
        a = ring.monic(&a);
        let c = field.element_at(c as u128);
        let t = ring.scale_twist(&a, &c).unwrap();
        prop_assert!(ring.is_monic(&t));
        let back = ring.scale_twist(&t, &field.inv(&c).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn field_inverse(v in 1u32..81) {
        let f = FieldSpec::new(3, 4, &[2, 0, 0, 1, 1]).unwrap();
        let x = f.element_at(v as u128);
        prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
    }

    #[test]
    fn prime_steps_commute(seed in 0u64..5000) {
        let field = FieldSpec::prime(7).unwrap();
        let ring = PolyRing::new(field.clone());
        // walk the seed to an irreducible cubic
        let mut idx = seed;
        let f = loop {
            let coeffs = [1 + idx % 6, (idx / 6) % 7, (idx / 42) % 7, 1];
            let f = ring.from_coeffs(coeffs.iter().map(|&c| field.element_at(c as u128)).collect());
            if ring.is_irreducible(&f).unwrap() {
                break f;
            }
            idx += 1;
        };
        let ctor = Constructor::new(field).unwrap();
        let a = ctor.prime_step(&ctor.prime_step(&f, 2).unwrap(), 3).unwrap();
        let b = ctor.prime_step(&ctor.prime_step(&f, 3).unwrap(), 2).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, ctor.construct_general(&f, 6).unwrap().output);
    }
}
