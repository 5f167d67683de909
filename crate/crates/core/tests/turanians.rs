use hyperdet_core::exact::{q, qf};
use hyperdet_core::turanians::{
    laplacian_power_check, turanian_bruteforce, turanian_closed_form, TuranianFamily, TuranianSpec,
};

fn families() -> Vec<TuranianFamily> {
    vec![
        TuranianFamily::Legendre,
        TuranianFamily::Laguerre { alpha: q(0) },
        TuranianFamily::Laguerre { alpha: q(1) },
        TuranianFamily::Laguerre { alpha: q(2) },
        TuranianFamily::Hermite,
        TuranianFamily::Charlier { a: Some(q(2)) },
        TuranianFamily::Charlier { a: None },
        TuranianFamily::Meixner { beta: q(2), gamma: qf(1, 3) },
        TuranianFamily::Krawtchouk { p: qf(1, 3), n: q(10) },
    ]
}

#[test]
fn closed_forms_match_bruteforce() {
    for fam in families() {
        for n in 1..=3 {
            for k in 1..=2 {
                let spec = TuranianSpec::new(fam.clone(), n, k, 0).unwrap();
                let closed = turanian_closed_form(&spec).unwrap();
                let brute = turanian_bruteforce(&spec).unwrap();
                assert_eq!(closed, brute, "{fam} n={n} k={k}");
            }
        }
    }
}

#[test]
fn shifted_closed_forms_match_bruteforce() {
    for fam in families() {
        for n in 1..=2 {
            for r in 1..=2 {
                let spec = TuranianSpec::new(fam.clone(), n, 1, r).unwrap();
                assert_eq!(
                    turanian_closed_form(&spec).unwrap(),
                    turanian_bruteforce(&spec).unwrap(),
                    "{fam} n={n} r={r}"
                );
            }
        }
    }
}

#[test]
fn hermite_is_constant() {
    for n in 1..=3 {
        for k in 1..=2 {
            let spec = TuranianSpec::new(TuranianFamily::Hermite, n, k, 0).unwrap();
            let b = turanian_bruteforce(&spec).unwrap();
            assert_eq!(b.total_degree().unwrap_or(0), 0, "n={n} k={k}");
        }
    }
}

#[test]
fn laplacian_identity() {
    for (n, k) in [(2, 1), (2, 2), (3, 1)] {
        let rep = laplacian_power_check(n, k).unwrap();
        assert!(rep.all_agree(), "n={n} k={k}: {rep:?}");
    }
}
