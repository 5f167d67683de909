use hyperdet_core::exact::{gamma_exact, pochhammer, q, vars, ExactScalar, MultiPoly, Ring, Q};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=8).prop_map(|(a, b)| Q::new(a.into(), b.into()))
}

fn half_integer() -> impl Strategy<Value = Q> {
    (-12i64..=12).prop_map(|a| Q::new(a.into(), 2.into()))
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0u32..3, 0u32..3, 0u32..2), -5i64..=5), 0..6).prop_map(|ts| {
        let v = vars(&["x", "y", "z"]);
        MultiPoly::from_terms(&v, ts.into_iter().map(|((a, b, c), k)| (vec![a, b, c], q(k))))
    })
}

proptest! {
    #[test]
    fn gamma_recurrence(x in half_integer()) {
        let lhs = gamma_exact(&(x.clone() + q(1)));
        let rhs = gamma_exact(&x);
        if x > q(0) {
            prop_assert_eq!(lhs.unwrap(), rhs.unwrap().scale(&x));
        } else {
            prop_assert!(rhs.is_err());
        }
    }

    #[test]
    fn pochhammer_splits(a in rational(), n in 0usize..6, m in 0usize..6) {
        let an = a.clone() + Q::from_integer((n as i64).into());
        prop_assert_eq!(pochhammer(&a, n) * pochhammer(&an, m), pochhammer(&a, n + m));
    }

    #[test]
    fn multipoly_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.mul_ref(&b).try_div(&b), Some(a.clone()));
        }
    }

    #[test]
    fn scalar_text_round_trip(c in rational(), m in 0u32..5) {
        let s = ExactScalar::new(c, m);
        let back: ExactScalar = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn mixed_pi_powers_refuse_addition() {
    let a = ExactScalar::new(q(1), 1);
    let b = ExactScalar::new(q(1), 0);
    assert!(a.checked_add(&b).is_err());
    assert_eq!(ExactScalar::zero().checked_add(&a).unwrap(), a);
}

#[test]
fn half_integer_gamma_values() {
    let g = gamma_exact(&Q::new(1.into(), 2.into())).unwrap();
    assert_eq!(g, ExactScalar::new(q(1), 1));
    let g = gamma_exact(&Q::new(7.into(), 2.into())).unwrap();
    assert_eq!(g, ExactScalar::new(Q::new(15.into(), 8.into()), 1));
    assert!(gamma_exact(&Q::new((-1).into(), 2.into())).is_err());
    assert!(gamma_exact(&Q::new(1.into(), 3.into())).is_err());
    assert_eq!(gamma_exact(&q(5)).unwrap(), ExactScalar::int(24));
}
