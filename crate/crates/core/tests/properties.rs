use num_bigint::BigInt;
use proptest::prelude::*;
use rrg_core::partition::{decompose, recompose, Partition};
use rrg_core::qseries::{t_series, QPolynomial};

const ORDER: usize = 12;

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-50i64..50, ORDER + 1).prop_map(|c| QPolynomial::from_coeffs(c, ORDER))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..15, 0..12).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap().mul(&r).unwrap(), p.mul(&q.mul(&r).unwrap()).unwrap());
        let left = p.mul(&q.add(&r).unwrap()).unwrap();
        let right = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(p.mul(&QPolynomial::one(ORDER)).unwrap(), p.clone());
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn truncation_commutes_with_mul(p in poly(), q in poly(), low in 0usize..ORDER) {
        let whole = p.mul(&q).unwrap().truncated(low);
        let parts = p.truncated(low).mul(&q.truncated(low)).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn dividing_undoes_multiplying(p in poly(), step in 1usize..6) {
        let mut factor = QPolynomial::one(ORDER);
        factor = factor.sub(&QPolynomial::monomial(step, ORDER)).unwrap();
        let mut back = p.mul(&factor).unwrap();
        back.divide_by_one_minus_q_pow(step);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn decompose_recompose_roundtrip(p in partition()) {
        match decompose(&p) {
            Ok(form) => {
                prop_assert_eq!(2 * form.pair_count() + form.singleton_count(), p.len());
                prop_assert_eq!(recompose(&form).unwrap(), p);
            }
            Err(_) => prop_assert!(p.parts().iter().any(|&v| p.multiplicity(v) > 2)),
        }
    }

    #[test]
    fn text_form_roundtrip(p in partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }
}

#[test]
fn series_truncation_is_coherent() {
    let big = t_series(2, 40, 40);
    let small = t_series(2, 25, 10);
    for x in 0..=10 {
        for q in 0..=25 {
            assert_eq!(small.coeff(x, q), big.coeff(x, q), "x^{x} q^{q}");
        }
    }
    assert_eq!(small.coeff(11, 25), BigInt::from(0));
}
