//! Exact arithmetic in cyclotomic fields Q(ζ_m).

mod context;
mod number;
mod root;

pub use context::{cyclotomic_polynomial, divisors, euler_phi, lcm, CycloContext};
pub use number::{CycNumber, Rational};
pub use root::RootOfUnity;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,
    #[error("conductor {from} does not divide {to}")]
    IncompatibleConductor { from: u64, to: u64 },
    #[error("cannot parse cyclotomic number {0:?}")]
    Parse(String),
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_cyc(m: u64) -> impl Strategy<Value = CycNumber> {
        let phi = euler_phi(m) as usize;
        prop::collection::vec((-6i64..7, 1i64..5), phi).prop_map(move |cs| {
            let mut acc = CycNumber::zero(m);
            for (k, (n, d)) in cs.into_iter().enumerate() {
                acc = acc.add(&CycNumber::scaled_root(m, n, d, k as i64));
            }
            acc
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CycNumber, CycNumber, CycNumber)> {
        prop::sample::select(vec![3u64, 4, 5, 8, 12, 15, 16, 24])
            .prop_flat_map(|m| (arb_cyc(m), arb_cyc(m), arb_cyc(m)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn embedding_is_a_homomorphism((a, b, _c) in arb_triple(), k in 2u64..4) {
            let big = a.conductor() * k;
            let ea = a.embed(big).unwrap();
            let eb = b.embed(big).unwrap();
            prop_assert_eq!((&a * &b).embed(big).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).embed(big).unwrap(), &ea + &eb);
            prop_assert_eq!(ea, a);
        }
    }
}
