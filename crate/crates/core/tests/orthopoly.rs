use hyperdet_core::exact::{factorial_q, q, Poly, Ring, UniPoly, Q};
use hyperdet_core::hyperdet::{hankel_fast, pfaffian, MomentSequence};
use hyperdet_core::orthopoly::{
    bell_polys, binomial_hankel_check, charlier_pprime_closed, check_orthogonal,
    karlin_szego_check, krawtchouk_det_x, lawden_check, lawden_check_u, monic_from_moments,
    pprime_gram, projected_mult_det, MomentFunctional,
};
use hyperdet_core::Error;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gram_schmidt_is_orthogonal(tail in proptest::collection::vec((-9i64..=9, 1i64..=4), 9)) {
        let mut c = vec![q(1)];
        c.extend(tail.into_iter().map(|(a, b)| Q::new(a.into(), b.into())));
        let mu = MomentFunctional::new(c);
        match monic_from_moments(&mu, 4) {
            Ok(fam) => prop_assert!(check_orthogonal(&mu, &fam, 5).is_ok()),
            Err(Error::Degenerate(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}

fn at_zero(p: &Poly<UniPoly>) -> UniPoly {
    p.coeff(0)
}

#[test]
fn shifted_bell_three_ways() {
    let bell = bell_polys(20);
    let mu = MomentFunctional::new(bell.clone());
    let seq = MomentSequence::new(bell.clone());
    for n in 1..=4 {
        let fam = monic_from_moments(&mu, n + 2).unwrap();
        let base = hankel_fast(&seq, n, 1, 0).unwrap();
        for r in 1..=2 {
            let direct = hankel_fast(&seq, n, 1, r).unwrap();
            let projected = projected_mult_det(&fam, r, n).unwrap().mul_ref(&base);
            assert_eq!(direct, projected, "n={n} r={r}");
            let (lhs, rhs) = karlin_szego_check(&mu, n, r).unwrap();
            assert_eq!(lhs, rhs, "n={n} r={r}");
            let mut ks = at_zero(&rhs).scale(&(q(1) / factorial_q(n as u64)));
            if (n * r) % 2 == 1 {
                ks = ks.neg_ref();
            }
            assert_eq!(ks, direct, "n={n} r={r}");
        }
    }
}

#[test]
fn pfaffian_route_factorial_and_bell() {
    let fact: Vec<Q> = (0..20).map(factorial_q).collect();
    let mu = MomentFunctional::new(fact.clone());
    for n in 1..=3 {
        let fam = monic_from_moments(&mu, 2 * n).unwrap();
        for r in 0..=1 {
            let pf = pfaffian(&pprime_gram(&mu, &fam, r, 2 * n).unwrap()).unwrap();
            assert_eq!(pf, hankel_fast(&MomentSequence::new(fact.clone()), n, 2, r).unwrap(), "n={n} r={r}");
        }
    }
    let bell = bell_polys(20);
    let mu = MomentFunctional::new(bell.clone());
    for n in 1..=3 {
        let fam = monic_from_moments(&mu, 2 * n).unwrap();
        for r in 0..=1 {
            let pf = pfaffian(&pprime_gram(&mu, &fam, r, 2 * n).unwrap()).unwrap();
            assert_eq!(pf, hankel_fast(&MomentSequence::new(bell.clone()), n, 2, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn charlier_derivative_gram() {
    let mu = MomentFunctional::new(bell_polys(14));
    let fam = monic_from_moments(&mu, 6).unwrap();
    let m = pprime_gram(&mu, &fam, 0, 6).unwrap();
    for i in 0..6 {
        for j in i + 1..6 {
            assert_eq!(m.get(i, j), charlier_pprime_closed(i, j), "i={i} j={j}");
        }
    }
}

#[test]
fn binomial_moments_product() {
    for top in 1..=3 {
        for n in 1..=3 {
            let (l, r) = binomial_hankel_check(top, n).unwrap();
            assert_eq!(l, r, "N={top} n={n}");
        }
    }
}

#[test]
fn krawtchouk_and_lawden() {
    for n in 1..=4 {
        let (l, r) = krawtchouk_det_x(n).unwrap();
        assert_eq!(l, r, "n={n}");
    }
    for n in 1..=3 {
        let (l, r) = lawden_check(n).unwrap();
        assert_eq!(l, r, "n={n}");
        let (l, r) = lawden_check_u(n).unwrap();
        assert_eq!(l, r, "n={n}");
    }
}
