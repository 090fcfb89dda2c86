mod common;

use common::*;
use irredforge_core::arith::{factorize, gcd, pow_mod};
use irredforge_core::orbit::{combine_valuations, infer_order, iterate_prime};
use irredforge_core::{Constructor, FieldSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brute_order(a: u64, r: u64) -> u64 {
    (1..=r).find(|&e| pow_mod(a, e, r) == 1 % r).unwrap()
}

#[test]
fn candidates_contain_true_order_and_satisfy_conditions() {
    let fields: Vec<FieldSpec> = small_fields().into_iter().filter(|f| f.q() > 2).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    for _ in 0..80 {
        let field = &fields[rng.random_range(0..fields.len())];
        let q = field.q();
        let primes: Vec<u64> = factorize(q - 1).primes().collect();
        let k = primes[rng.random_range(0..primes.len())];
        let n = rng.random_range(1..=4);
        let f = random_irreducible(field, n, &mut rng);
        let ctor = Constructor::new(field.clone()).unwrap();
        let e = ctor.ring().poly_order(&f).unwrap();
        let trace = iterate_prime(&ctor, &f, k).unwrap();
        let cands = infer_order(&trace).unwrap();
        assert!(cands.orders().any(|o| o == e), "q={q} k={k} e={e}");
        let l = trace.tail_length as u32;
        let s = trace.orbit_length as u64;
        let deg_l = trace.orbit_start().degree().unwrap() as u64;
        for c in &cands.candidates {
            assert_eq!(c.order, k.pow(l) * c.r);
            assert_eq!(gcd(k, c.r), 1);
            assert_eq!(deg_l % c.d, 0);
            assert_eq!(s * c.d, brute_order(k % c.r.max(1), c.r));
            assert!(c.j < deg_l);
            assert_eq!(brute_order(pow_mod(q, c.j, c.r), c.r), c.d);
            assert_eq!(pow_mod(k, s, c.r), pow_mod(q, c.j, c.r));
        }
        // the tail length is the k-adic valuation of e
        let mut v = 0;
        let mut rest = e;
        while rest.is_multiple_of(k) {
            rest /= k;
            v += 1;
        }
        assert_eq!(trace.tail_length, v);
    }
}

#[test]
fn valuations_for_every_prime() {
    let f16 = FieldSpec::gf16();
    let ctor = Constructor::new(f16.clone()).unwrap();
    let f2 = f16
        .parse_poly(
            "x^9+(a^2+a)x^8+(a^3+a^2)x^7+a x^6+x^5+(a^3+a^2+a)x^4+(a^2+a+1)x^3+a^2x^2+a^3x+a^3+a^2+a",
        )
        .unwrap();
    let v = combine_valuations(&ctor, &f2, &[3, 5]).unwrap();
    assert_eq!(v[&3], 3);
    assert_eq!(v[&5], 1);
}

#[test]
fn seventh_powers_over_eight_elements() {
    let f8 = FieldSpec::gf8();
    let ctor = Constructor::new(f8.clone()).unwrap();
    let f = f8.parse_poly("x^5+a x^4+x^3+a x^2+(a^2+a)x+a^2").unwrap();
    let t = iterate_prime(&ctor, &f, 7).unwrap();
    assert_eq!((t.tail_length, t.orbit_length), (1, 150));
    assert!(infer_order(&t).unwrap().orders().any(|o| o == 32767));
}
