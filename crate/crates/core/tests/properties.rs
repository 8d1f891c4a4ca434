use num_bigint::BigInt;
use proptest::prelude::*;

use hopfinv::cyclo::{cyclotomic_polynomial, divisors, CycNumber, RootOfUnity};
use hopfinv::poly::{expand, factor_cyclotomic, int_poly_mul, RootMultiset};

/// Φ_h from its complex roots, rounded; independent of the library's division-based construction.
fn numeric_cyclotomic(h: u64) -> Vec<i64> {
    let mut coeffs = vec![(1.0f64, 0.0f64)];
    for k in (1..=h).filter(|k| num_integer::gcd(*k, h) == 1) {
        let angle = 2.0 * std::f64::consts::PI * k as f64 / h as f64;
        let (re, im) = (angle.cos(), angle.sin());
        let mut next = vec![(0.0, 0.0); coeffs.len() + 1];
        for (i, &(a, b)) in coeffs.iter().enumerate() {
            next[i + 1].0 += a;
            next[i + 1].1 += b;
            next[i].0 -= a * re - b * im;
            next[i].1 -= a * im + b * re;
        }
        coeffs = next;
    }
    coeffs.iter().map(|(a, _)| a.round() as i64).collect()
}

#[test]
fn cyclotomic_polynomials_match_their_roots() {
    for h in 1..=64 {
        assert_eq!(*cyclotomic_polynomial(h), numeric_cyclotomic(h), "Phi_{h}");
    }
}

#[test]
fn product_over_divisors_is_x_to_the_m_minus_one() {
    for m in 1..=64u64 {
        let mut prod = vec![BigInt::from(1)];
        for d in divisors(m) {
            let phi: Vec<BigInt> = cyclotomic_polynomial(d).iter().map(|&c| BigInt::from(c)).collect();
            prod = int_poly_mul(&prod, &phi);
        }
        let mut expected = vec![BigInt::from(0); m as usize + 1];
        expected[0] = BigInt::from(-1);
        expected[m as usize] = BigInt::from(1);
        assert_eq!(prod, expected, "m = {m}");
    }
}

#[test]
fn all_m_th_roots_expand_to_x_to_the_m_minus_one() {
    for m in 1..=64u64 {
        let mut rs = RootMultiset::empty(m);
        for k in 0..m as i64 {
            rs.insert(RootOfUnity::new(m, k), 1);
        }
        let f = factor_cyclotomic(&rs).unwrap();
        assert_eq!(f.factors.keys().copied().collect::<Vec<_>>(), divisors(m), "m = {m}");
        assert!(f.factors.values().all(|&e| e == 1));
        let c = expand(&rs).integer_coeffs().unwrap();
        assert_eq!(c.first(), Some(&BigInt::from(-1)));
        assert_eq!(c.last(), Some(&BigInt::from(1)));
        assert!(c[1..m as usize].iter().all(|x| *x == BigInt::from(0)));
    }
}

fn arb_element(m: u64) -> impl Strategy<Value = CycNumber> {
    prop::collection::vec((-5i64..6, 1i64..4, 0..m as i64), 1..6).prop_map(move |terms| {
        terms.into_iter().fold(CycNumber::zero(m), |acc, (n, d, k)| acc.add(&CycNumber::scaled_root(m, n, d, k)))
    })
}

fn arb_triple() -> impl Strategy<Value = (CycNumber, CycNumber, CycNumber)> {
    prop::sample::select(vec![1u64, 2, 6, 7, 9, 20, 36])
        .prop_flat_map(|m| (arb_element(m), arb_element(m), arb_element(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms((a, b, c) in arb_triple()) {
        let m = a.conductor();
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&CycNumber::zero(m)), a.clone());
        prop_assert_eq!(a.mul(&CycNumber::one(m)), a.clone());
        prop_assert!(a.add(&a.neg()).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.mul(&a).div(&a).unwrap(), b.clone());
        }
    }

    #[test]
    fn complex_embedding_is_a_ring_map((a, b, _c) in arb_triple()) {
        let close = |x: (f64, f64), y: (f64, f64)| (x.0 - y.0).abs() < 1e-6 && (x.1 - y.1).abs() < 1e-6;
        let (ar, ai) = a.to_complex();
        let (br, bi) = b.to_complex();
        prop_assert!(close(a.mul(&b).to_complex(), (ar * br - ai * bi, ar * bi + ai * br)));
        prop_assert!(close(a.add(&b).to_complex(), (ar + br, ai + bi)));
        prop_assert!(close(a.conj().to_complex(), (ar, -ai)));
    }

    #[test]
    fn roots_of_unity_multiply_like_exponents(m in 1u64..40, j in -80i64..80, k in -80i64..80) {
        let (x, y) = (RootOfUnity::new(m, j), RootOfUnity::new(m, k));
        prop_assert_eq!(x.mul(&y).to_cyc(), x.to_cyc().mul(&y.to_cyc()));
        prop_assert!(x.to_cyc().pow(m as i64).unwrap().is_one());
        prop_assert_eq!(m % x.order(), 0);
    }

    #[test]
    fn galois_closed_multisets_factor(m in 1u64..30, picks in prop::collection::vec((1u64..30, 1u64..3), 0..4)) {
        let mut rs = RootMultiset::empty(m);
        for (h, e) in picks.into_iter().filter(|(h, _)| m % h == 0) {
            for k in (1..=h).filter(|k| num_integer::gcd(*k, h) == 1) {
                rs.insert(RootOfUnity::new(m, (k * (m / h)) as i64), e);
            }
        }
        let f = factor_cyclotomic(&rs).unwrap();
        prop_assert_eq!(expand(&rs).integer_coeffs().unwrap(), f.reconstruct());
    }
}
