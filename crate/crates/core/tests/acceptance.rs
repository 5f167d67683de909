//! Acceptance suite. Prints one PASS/FAIL line per criterion, itemizes the
//! failing sub-checks and exits nonzero when anything fails. Every comparison
//! is exact equality of rationals or polynomials over the rationals.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperdet_core::exact::{factorial_q, q, qf, MultiPoly, Poly, Ring, UniPoly, Vars, Q};
use hyperdet_core::hyperdet::{det4_via_pfaffian, det_even, pfaffian, HyperTensor};
use hyperdet_core::kaneko::{
    heine_hyperdet_check, kaneko_check, leclerc_check, leclerc_wronskian_check, HeineNorm,
    JacobiRoute,
};
use hyperdet_core::orthopoly::{
    bell_polys, bell_triangle, bell_triangle_gf, binomial_hankel_check, karlin_szego_check,
    krawtchouk_det_x, lawden_check, lawden_check_u, monic_from_moments, pprime_gram,
    projected_mult_det, sequence_transform_check, superfactorial, wronskian_at,
    MomentFunctional, ProjectedMultiplication, SequenceTransform,
};
use hyperdet_core::selberg::{
    appendix_a_consistency, closed_form_hankel, hankel_family, hypergeom_r_extract,
    hypergeom_symbols, pseudo_bruteforce, pseudo_closed_form, FamilyMoments, PseudoCase,
    SequenceFamily,
};
use hyperdet_core::symfun::{
    hankel_hyperdet_schur, ubiquitous_identities, Basis, Partition, SymExpansion, UbiquitousCase,
};
use hyperdet_core::turanians::{
    laplacian_power_check, turanian_bruteforce, turanian_closed_form, TuranianFamily,
    TuranianSpec,
};
use hyperdet_core::{hankel_fast, MomentSequence, Result, Value};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    id: &'static str,
    title: &'static str,
    passed: usize,
    failed: Vec<String>,
}

impl Criterion {
    fn new(id: &'static str, title: &'static str) -> Self {
        Criterion { id, title, passed: 0, failed: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, outcome: Result<bool>) {
        let label = label.into();
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => self.failed.push(label),
            Err(e) => self.failed.push(format!("{label}: error: {e}")),
        }
    }

    /// Equality check that reports both sides on mismatch.
    fn same<T: PartialEq + std::fmt::Display>(&mut self, label: impl Into<String>, got: Result<T>, want: T) {
        let label = label.into();
        match got {
            Ok(g) if g == want => self.passed += 1,
            Ok(g) => self.failed.push(format!("{label}: computed {g}, expected {want}")),
            Err(e) => self.failed.push(format!("{label}: error: {e}")),
        }
    }

    fn finish(self, summary: &mut Vec<(&'static str, bool)>) {
        let total = self.passed + self.failed.len();
        let ok = self.failed.is_empty();
        println!(
            "{} [{}] {}: {}/{} checks, tolerance exact",
            if ok { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.passed,
            total
        );
        for f in &self.failed {
            println!("    FAIL {f}");
        }
        summary.push((self.id, ok));
    }
}

fn factorials(len: usize) -> Vec<Q> {
    (0..len as u64).map(factorial_q).collect()
}

/// `c * a^shift * sum_i coeffs[i] a^i`
fn in_a(c: i64, shift: usize, coeffs: &[i64]) -> UniPoly {
    let mut v = vec![q(0); shift];
    v.extend(coeffs.iter().map(|x| q(c) * q(*x)));
    UniPoly::new("a", v)
}

fn same_poly(a: &UniPoly, b: &UniPoly) -> bool {
    a.coeffs() == b.coeffs()
}

fn uni_text(p: &UniPoly) -> String {
    let parts: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != q(0))
        .map(|(i, c)| format!("{c}*a^{i}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn poly_from(vs: &Vars, scale: i64, terms: &[(i64, &[u32])]) -> MultiPoly {
    MultiPoly::from_terms(vs, terms.iter().map(|(c, e)| (e.to_vec(), q(scale * c))))
}

fn oracle_equivalence(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("1", "fast path equals the permutation-sum oracle");
    let fams = vec![
        SequenceFamily::Factorial,
        SequenceFamily::GammaShifted(0),
        SequenceFamily::GammaShifted(1),
        SequenceFamily::GammaShifted(2),
        SequenceFamily::GammaShifted(3),
        SequenceFamily::Catalan,
        SequenceFamily::CentralBinomial,
        SequenceFamily::TwoNOverN,
        SequenceFamily::Hilbert,
        SequenceFamily::HilbertShifted(qf(1, 2)),
        SequenceFamily::InverseFactorial,
        SequenceFamily::Bell(Some(q(2))),
        SequenceFamily::Bell(None),
        SequenceFamily::PochhammerRatio(qf(1, 2), q(2)),
        SequenceFamily::PochhammerRatio(q(1), q(3)),
    ];
    for fam in &fams {
        for n in 1..=4 {
            for k in 1..=2 {
                for r in 0..=2 {
                    let label = format!("{fam} n={n} k={k} r={r}");
                    let len = 2 * k * (n - 1) + r + 1;
                    let outcome = fam.moments(len).and_then(|m| match m {
                        FamilyMoments::Rational(s) => {
                            let fast = hankel_fast(&s, n, k, r)?;
                            let oracle = det_even(&HyperTensor::hankel(&s, 2 * k, n, r)?, k)?;
                            Ok(fast == oracle)
                        }
                        FamilyMoments::Poly(s) => {
                            let fast = hankel_fast(&s, n, k, r)?;
                            let oracle = det_even(&HyperTensor::hankel(&s, 2 * k, n, r)?, k)?;
                            Ok(same_poly(&fast, &oracle))
                        }
                    });
                    c.check(label, outcome);
                }
            }
        }
    }
    c.finish(summary);
}

fn factorial_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("2", "factorial moments, two by two and order four");
    let fact = MomentSequence::new(factorials(24));
    for k in 1..=5usize {
        let want = factorial_q(2 * k as u64) / q(2);
        c.same(format!("D_2^({k})(n!)"), hankel_fast(&fact, 2, k, 0), want);
    }
    let mu = MomentFunctional::new(factorials(24));
    for n in 1..=3usize {
        let want: Q = (0..2 * n as u64).map(factorial_q).product();
        c.same(format!("order 4 fast n={n}"), hankel_fast(&fact, n, 2, 0), want.clone());
        let pf = monic_from_moments(&mu, 2 * n).and_then(|fam| det4_via_pfaffian(&fact, &fam, n, 0));
        c.same(format!("order 4 Pfaffian n={n}"), pf, want);
    }
    c.finish(summary);
}

fn selberg_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("3", "closed forms from Selberg-type integrals");
    let cases: Vec<(SequenceFamily, usize)> = vec![
        (SequenceFamily::Factorial, 2),
        (SequenceFamily::GammaShifted(0), 0),
        (SequenceFamily::GammaShifted(1), 0),
        (SequenceFamily::GammaShifted(2), 0),
        (SequenceFamily::GammaShifted(3), 0),
        (SequenceFamily::Catalan, 2),
        (SequenceFamily::CentralBinomial, 0),
        (SequenceFamily::TwoNOverN, 0),
        (SequenceFamily::Hilbert, 2),
        (SequenceFamily::InverseFactorial, 0),
    ];
    for (fam, max_r) in cases {
        for n in 1..=4 {
            for k in 1..=2 {
                for r in 0..=max_r {
                    let outcome = closed_form_hankel(&fam, n, k, r).and_then(|closed| {
                        let rational = matches!(&closed, Value::Scalar(s) if s.is_rational());
                        Ok(rational && closed == hankel_family(&fam, n, k, r)?)
                    });
                    c.check(format!("{fam} n={n} k={k} r={r}"), outcome);
                }
            }
        }
    }
    c.finish(summary);
}

fn bell_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("4", "Bell polynomial suite");
    let bell = MomentSequence::new(bell_polys(40));
    let printed: Vec<(usize, usize, UniPoly)> = vec![
        (2, 2, in_a(1, 1, &[1, 6])),
        (3, 2, in_a(8, 3, &[1, 24, 45, 90])),
        (4, 2, in_a(1728, 6, &[1, 60, 360, 2080, 2415, 2100, 2100])),
        (2, 3, in_a(1, 1, &[1, 30, 60])),
        (3, 3, in_a(32, 3, &[1, 240, 3285, 16650, 61425, 56700, 37800])),
        (2, 4, in_a(1, 1, &[1, 126, 840, 840])),
        (
            3,
            4,
            in_a(
                128,
                3,
                &[1, 2184, 134505, 1952370, 22027950, 99542520, 189552825, 246673350, 130977000, 43659000],
            ),
        ),
    ];
    for (n, k, want) in &printed {
        check_uni(&mut c, format!("D_{n}^({k})(b(a))"), hankel_fast(&bell, *n, *k, 0), want);
    }

    let table: [[UniPoly; 3]; 4] = [
        [in_a(1, 0, &[1]), in_a(1, 1, &[1]), in_a(1, 1, &[1, 1])],
        [in_a(1, 1, &[1]), in_a(1, 3, &[1]), in_a(1, 3, &[2, 2, 1])],
        [in_a(2, 3, &[1]), in_a(2, 6, &[1]), in_a(2, 6, &[6, 6, 3, 1])],
        [in_a(12, 6, &[1]), in_a(12, 10, &[1]), in_a(12, 10, &[24, 24, 12, 4, 1])],
    ];
    for (i, row) in table.iter().enumerate() {
        for (r, want) in row.iter().enumerate() {
            let n = i + 1;
            check_uni(&mut c, format!("shifted D_({n};{r})^(1)"), hankel_fast(&bell, n, 1, r), want);
        }
    }

    let rows: [&[i64]; 6] = [
        &[1],
        &[1, 6],
        &[1, 30, 60],
        &[1, 126, 840, 840],
        &[1, 510, 8820, 25200, 150120],
        &[1, 2046, 84480, 526680, 831600, 332640],
    ];
    c.same(
        "triangle row k=5 last entry 15120".to_string(),
        bell_triangle(5).map(|t| Q::from(t[4].clone())),
        q(15120),
    );
    for (i, row) in rows.iter().enumerate() {
        let k = i + 1;
        let want: Vec<num_bigint::BigInt> = row.iter().map(|x| (*x).into()).collect();
        for (route, got) in [("apolar", bell_triangle(k)), ("generating function", bell_triangle_gf(k))] {
            let label = format!("triangle row k={k} by {route}");
            match got {
                Ok(g) if g == want => c.passed += 1,
                Ok(g) => c.failed.push(format!("{label}: computed {g:?}, expected {want:?}")),
                Err(e) => c.failed.push(format!("{label}: error: {e}")),
            }
        }
        // The row is the coefficient list of D_2^{(k)}(b(a)) / a.
        let row_poly = in_a(1, 1, row);
        check_uni(&mut c, format!("triangle row k={k} against D_2^({k})"), hankel_fast(&bell, 2, k, 0), &row_poly);
    }
    for k in 1..=6usize {
        let tri = bell_triangle(k);
        let diag = tri.as_ref().map(|t| Q::from(t[k - 1].clone())).map_err(Clone::clone);
        let want = factorial_q(2 * k as u64 + 1) / factorial_q(k as u64);
        c.same(format!("triangle diagonal k={k} against (2k+1)!/k!"), diag.clone(), want);
        let want = factorial_q(2 * k as u64 - 1) / factorial_q(k as u64 - 1);
        c.same(format!("triangle diagonal k={k} against (2k-1)!/(k-1)!"), diag, want);
        let second = tri.map(|t| Q::from(t.get(1).cloned().unwrap_or_default()));
        let want = q(2).pow(2 * k as i32 - 1) - q(2);
        c.same(format!("triangle second column k={k} against 2^(2k-1)-2"), second, want);
    }

    for n in 1..=3 {
        for k in 1..=2 {
            for r in 1..=2 {
                let outcome = sequence_transform_check(SequenceTransform::FallingFactorial { r }, n, k)
                    .map(|(l, rh)| same_poly(&l, &rh));
                c.check(format!("falling factorial shift n={n} k={k} r={r}"), outcome);
            }
        }
    }
    c.finish(summary);
}

fn check_uni(c: &mut Criterion, label: String, got: Result<UniPoly>, want: &UniPoly) {
    match got {
        Ok(g) if same_poly(&g, want) => c.passed += 1,
        Ok(g) => c.failed.push(format!("{label}: computed {}, expected {}", uni_text(&g), uni_text(want))),
        Err(e) => c.failed.push(format!("{label}: error: {e}")),
    }
}

fn binomial_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("5", "binomial moments, Krawtchouk and Lawden");
    for top in 1..=3 {
        for n in 1..=3 {
            c.check(format!("binomial product N={top} n={n}"), binomial_hankel_check(top, n).map(|(l, r)| l == r));
        }
    }
    for n in 1..=4 {
        c.check(format!("det X_{n} for Krawtchouk"), krawtchouk_det_x(n).map(|(l, r)| l == r));
    }
    for n in 1..=3 {
        c.check(format!("Lawden n={n} in t"), lawden_check(n).map(|(l, r)| l == r));
        c.check(format!("Lawden n={n} in u"), lawden_check_u(n).map(|(l, r)| l == r));
    }
    for top in 1..=3 {
        for r in 0..=top {
            for n in 1..=2 {
                for k in 1..=2 {
                    let outcome = sequence_transform_check(SequenceTransform::BinomialShift { r, top }, n, k)
                        .map(|(l, rh)| same_poly(&l, &rh));
                    c.check(format!("binomial unshifting N={top} r={r} n={n} k={k}"), outcome);
                }
            }
        }
    }
    c.finish(summary);
}

fn pfaffian_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("6", "Pfaffian route and the Charlier derivative Gram matrix");
    let fact = factorials(24);
    let mu = MomentFunctional::new(fact.clone());
    let seq = MomentSequence::new(fact);
    for n in 1..=3 {
        for r in 0..=1 {
            let outcome = monic_from_moments(&mu, 2 * n).and_then(|fam| {
                let pf = pfaffian(&pprime_gram(&mu, &fam, r, 2 * n)?)?;
                Ok(pf == hankel_fast(&seq, n, 2, r)?)
            });
            c.check(format!("factorial n={n} r={r}"), outcome);
        }
    }
    let bell = bell_polys(24);
    let mu = MomentFunctional::new(bell.clone());
    let seq = MomentSequence::new(bell);
    for n in 1..=3 {
        for r in 0..=1 {
            let outcome = monic_from_moments(&mu, 2 * n).and_then(|fam| {
                let pf = pfaffian(&pprime_gram(&mu, &fam, r, 2 * n)?)?;
                Ok(same_poly(&pf, &hankel_fast(&seq, n, 2, r)?))
            });
            c.check(format!("Bell n={n} r={r}"), outcome);
        }
    }
    match monic_from_moments(&mu, 6) {
        Ok(fam) => {
            for n in 0..=5usize {
                for m in 0..=5usize {
                    // <C_n, C_m'> = (-1)^{m-n+1} a^n m!/(m-n) for m > n, else 0
                    let want = if m > n {
                        let s = if (m - n + 1) % 2 == 0 { q(1) } else { q(-1) };
                        UniPoly::monomial("a", s * factorial_q(m as u64) / q((m - n) as i64), n)
                    } else {
                        UniPoly::zero()
                    };
                    let got = mu.inner(fam.poly(n), &fam.poly(m).derivative());
                    check_uni(&mut c, format!("<C_{n}, C_{m}'>"), got, &want);
                }
            }
        }
        Err(e) => c.failed.push(format!("Charlier family: error: {e}")),
    }
    c.finish(summary);
}

fn turanian_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("7", "Turanians and the Laplacian identity");
    let fams = vec![
        TuranianFamily::Legendre,
        TuranianFamily::Laguerre { alpha: q(0) },
        TuranianFamily::Laguerre { alpha: q(1) },
        TuranianFamily::Laguerre { alpha: q(2) },
        TuranianFamily::Hermite,
        TuranianFamily::Charlier { a: None },
        TuranianFamily::Charlier { a: Some(q(2)) },
        TuranianFamily::Meixner { beta: q(2), gamma: qf(1, 3) },
        TuranianFamily::Krawtchouk { p: qf(1, 3), n: q(10) },
    ];
    for fam in &fams {
        for n in 1..=3 {
            for k in 1..=2 {
                let outcome = TuranianSpec::new(fam.clone(), n, k, 0)
                    .and_then(|s| Ok(turanian_closed_form(&s)? == turanian_bruteforce(&s)?));
                c.check(format!("{fam} n={n} k={k}"), outcome);
            }
        }
    }
    for n in 1..=3 {
        for k in 1..=2 {
            let outcome = TuranianSpec::new(TuranianFamily::Hermite, n, k, 0)
                .and_then(|s| turanian_bruteforce(&s))
                .map(|p| p.total_degree().unwrap_or(0) == 0);
            c.check(format!("Hermite is free of x n={n} k={k}"), outcome);
        }
    }
    for (n, k) in [(2, 1), (2, 2), (3, 1)] {
        c.check(format!("Laplacian n={n} k={k}"), laplacian_power_check(n, k).map(|r| r.all_agree()));
    }
    c.finish(summary);
}

fn random_moments(seed: u64, len: usize) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![q(1)];
    out.extend((1..len).map(|_| Q::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())));
    out
}

fn kaneko_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("8", "Kaneko, Heine, Leclerc and Karlin-Szego identities");
    for n in 1..=2 {
        for r in 1..=2 {
            for a in [q(1), q(2)] {
                for b in [q(1), q(2)] {
                    for k in 1..=2 {
                        for (route, name) in
                            [(JacobiRoute::Operator, "operator"), (JacobiRoute::GramSchmidtPrinted, "gamma = c - 1/2")]
                        {
                            let outcome = kaneko_check(n, r, &a, &b, k, route).map(|(l, rh)| l == rh);
                            c.check(format!("Kaneko {name} n={n} r={r} a={a} b={b} k={k}"), outcome);
                        }
                        for (norm, name) in [(HeineNorm::Derived, "derived"), (HeineNorm::Printed, "stated")] {
                            let outcome = heine_hyperdet_check(n, r, k, &a, &b, norm).map(|(l, rh)| l == rh);
                            c.check(format!("Heine {name} constant n={n} r={r} a={a} b={b} k={k}"), outcome);
                        }
                    }
                }
            }
        }
    }

    let mu = random_moments(7, 24);
    for n in 1..=3 {
        for r in 1..=3 {
            c.check(format!("Leclerc n={n} r={r}"), leclerc_check(&mu, n, r).map(|(l, rh)| l == rh));
            c.check(
                format!("Leclerc Wronskian n={n} r={r}"),
                leclerc_wronskian_check(&mu, n, r).map(|(l, rh)| same_poly(&l, &rh)),
            );
        }
    }

    let bell = bell_polys(30);
    let mu = MomentFunctional::new(bell.clone());
    let seq = MomentSequence::new(bell);
    match monic_from_moments(&mu, 8) {
        Ok(fam) => {
            let want = in_a(1, 3, &[6, 6, 3, 1]);
            let w = wronskian_at(&[fam.poly(3).clone(), fam.poly(4).clone()], &UniPoly::zero());
            check_uni(&mut c, "W(C_3, C_4)(0)".into(), w, &want);
            check_uni(&mut c, "det X_3^(2)".into(), projected_mult_det(&fam, 2, 3), &want);
            let x = [
                [in_a(1, 1, &[1, 1]), in_a(1, 1, &[1, 2]), in_a(1, 2, &[2])],
                [in_a(1, 0, &[1, 2]), in_a(1, 0, &[1, 5, 1]), in_a(1, 1, &[6, 4])],
                [in_a(1, 0, &[1]), in_a(1, 0, &[3, 2]), in_a(1, 0, &[4, 9, 1])],
            ];
            let outcome = ProjectedMultiplication::build(&fam, 2, 3).map(|pm| {
                (0..3).all(|j| (0..3).all(|i| same_poly(&pm.matrix[j][i], &x[j][i])))
            });
            c.check("X_3^(2) entries", outcome);
            for n in 1..=4usize {
                for r in 0..=2usize {
                    let outcome = (|| -> Result<bool> {
                        let polys: Vec<Poly<UniPoly>> = (n..n + r).map(|j| fam.poly(j).clone()).collect();
                        let w = if r == 0 { UniPoly::constant(q(1)) } else { wronskian_at(&polys, &UniPoly::zero())? };
                        let mut s = Q::from(superfactorial(r));
                        if (n * r) % 2 == 1 {
                            s = -s;
                        }
                        let base = hankel_fast(&seq, n, 1, 0)?;
                        let via = w.mul_ref(&base).scale(&(q(1) / s));
                        Ok(same_poly(&via, &hankel_fast(&seq, n, 1, r)?))
                    })();
                    c.check(format!("shifted Bell through the Wronskian n={n} r={r}"), outcome);
                }
            }
            for n in 1..=4 {
                for r in 1..=2 {
                    let outcome = karlin_szego_check(&mu, n, r).map(|(l, rh): (Poly<UniPoly>, _)| l == rh);
                    c.check(format!("Karlin-Szego n={n} r={r}"), outcome);
                }
            }
        }
        Err(e) => c.failed.push(format!("Charlier family: error: {e}")),
    }
    c.finish(summary);
}

fn schur(n: usize, terms: &[(&[u32], i64)]) -> SymExpansion {
    SymExpansion::new(Basis::Schur, n, terms.iter().map(|(p, c)| (Partition::new(p.to_vec()), q(*c))))
        .expect("valid expansion")
}

fn symfun_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("9", "symmetric function expansions");
    let cases: Vec<(usize, usize, SymExpansion)> = vec![
        (2, 2, schur(2, &[(&[3, 1], -1), (&[2, 2], 3)])),
        (3, 2, schur(3, &[(&[6, 4, 2], -1), (&[6, 3, 3], 3), (&[5, 5, 2], 3), (&[5, 4, 3], -6), (&[4, 4, 4], 15)])),
        (2, 3, schur(2, &[(&[5, 1], -1), (&[4, 2], 5), (&[3, 3], -10)])),
        (
            3,
            3,
            schur(
                3,
                &[
                    (&[10, 6, 2], -1),
                    (&[10, 5, 3], 5),
                    (&[10, 4, 4], -10),
                    (&[9, 7, 2], 5),
                    (&[9, 6, 3], -20),
                    (&[9, 5, 4], 25),
                    (&[8, 8, 2], -10),
                    (&[8, 7, 3], 25),
                    (&[8, 6, 4], 15),
                    (&[8, 5, 5], -100),
                    (&[7, 7, 4], -100),
                    (&[7, 6, 5], 160),
                    (&[6, 6, 6], -280),
                ],
            ),
        ),
        (2, 4, schur(2, &[(&[7, 1], -1), (&[6, 2], 7), (&[5, 3], -21), (&[4, 4], 35)])),
    ];
    for (n, k, want) in cases {
        c.check(format!("Schur expansion n={n} k={k}"), hankel_hyperdet_schur(n, k).map(|r| r.schur == want));
    }
    for n in 1..=3 {
        for k in 1..=3 {
            let rep = hankel_hyperdet_schur(n, k);
            match rep {
                Ok(r) => {
                    c.check(format!("all forms agree n={n} k={k}"), r.all_agree());
                    c.check(format!("det(p_(i+j-1)) form n={n} k={k}"), Ok(r.power_sum == r.schur));
                    c.check(format!("det(p_(n-i+j)) form n={n} k={k}"), Ok(r.power_sum_printed == r.schur));
                }
                Err(e) => c.failed.push(format!("n={n} k={k}: error: {e}")),
            }
        }
    }
    for k in 1..=5usize {
        match ubiquitous_identities(UbiquitousCase::Fibonacci { k }) {
            Ok(r) => {
                let five = UniPoly::constant(q(5).pow(k as i32 - 1));
                c.check(format!("Fibonacci k={k} equals 5^(k-1)"), Ok(same_poly(&r.lhs, &five)));
                c.check(format!("Fibonacci k={k} stated form"), Ok(same_poly(&r.lhs, &r.printed)));
            }
            Err(e) => c.failed.push(format!("Fibonacci k={k}: error: {e}")),
        }
    }
    for m in 1..=8usize {
        match ubiquitous_identities(UbiquitousCase::ChebyshevU { m }) {
            Ok(r) => {
                c.check(format!("Chebyshev m={m} derived form"), Ok(same_poly(&r.lhs, &r.derived)));
                c.check(format!("Chebyshev m={m} stated form"), Ok(same_poly(&r.lhs, &r.printed)));
            }
            Err(e) => c.failed.push(format!("Chebyshev m={m}: error: {e}")),
        }
    }
    c.finish(summary);
}

fn r_polynomial(c: &mut Criterion, label: &str, p_len: usize, q_len: usize, n: usize, k: usize, want: impl Fn(&Vars) -> MultiPoly) {
    let (p, qc) = hypergeom_symbols(p_len, q_len);
    let vs = p.iter().chain(qc.iter()).next().map(|x| x.vars().clone()).expect("symbols");
    let want = want(&vs);
    match hypergeom_r_extract(&p, &qc, n, k) {
        Ok(g) if g == want => c.passed += 1,
        Ok(g) => {
            let diff = g.sub_ref(&want);
            c.failed.push(format!("{label}: computed minus expected has {} terms", diff.len()));
        }
        Err(e) => c.failed.push(format!("{label}: error: {e}")),
    }
}

fn appendix_suite(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("10", "Pochhammer ratios, R-polynomials and pseudo-hyperdeterminants");
    for n in 1..=3 {
        for b in 2..=4i64 {
            for a in 1..b {
                for k in 1..=2 {
                    let outcome = appendix_a_consistency(n, &q(a), &q(b), k).map(|r| r.all_agree());
                    c.check(format!("(a)_m/(b)_m routes n={n} a={a} b={b} k={k}"), outcome);
                }
            }
        }
    }

    r_polynomial(&mut c, "R_2^(1)(a0,a1,a2; b0,b1)", 3, 2, 2, 1, |vs| {
        poly_from(vs, 1, &[(-1, &[1, 0, 0, 0, 1]), (1, &[0, 1, 0, 1, 0]), (3, &[0, 0, 1, 1, 0]), (2, &[0, 0, 1, 0, 1])])
    });
    let r22 = |a0a1b1: &'static [u32]| {
        move |vs: &Vars| {
            poly_from(
                vs,
                6,
                &[
                    (-2, &[1, 1, 0, 1, 1]),
                    (-10, &[1, 0, 1, 1, 1]),
                    (15, &[0, 1, 1, 1, 1]),
                    (-1, a0a1b1),
                    (-15, &[1, 0, 1, 0, 2]),
                    (9, &[0, 1, 1, 2, 0]),
                    (1, &[2, 0, 0, 0, 2]),
                    (1, &[0, 2, 0, 2, 0]),
                    (20, &[0, 0, 2, 2, 0]),
                    (24, &[0, 0, 2, 0, 2]),
                    (1, &[0, 2, 0, 1, 1]),
                    (50, &[0, 0, 2, 1, 1]),
                ],
            )
        }
    };
    r_polynomial(&mut c, "R_2^(2)(a0,a1,a2; b0,b1) as stated", 3, 2, 2, 2, r22(&[1, 1, 0, 0, 1]));
    r_polynomial(&mut c, "R_2^(2)(a0,a1,a2; b0,b1) with a0*a1*b1^2", 3, 2, 2, 2, r22(&[1, 1, 0, 0, 2]));
    r_polynomial(&mut c, "R_2^(2)(a0..a3;)", 4, 0, 2, 2, |vs| {
        poly_from(
            vs,
            6,
            &[
                (1, &[0, 2, 0, 0]),
                (9, &[0, 1, 1, 0]),
                (20, &[0, 0, 2, 0]),
                (1, &[1, 0, 0, 1]),
                (35, &[0, 1, 0, 1]),
                (150, &[0, 0, 1, 1]),
                (274, &[0, 0, 0, 2]),
            ],
        )
    });
    r_polynomial(&mut c, "R_2^(2)(; b0..b3)", 0, 4, 2, 2, |vs| {
        poly_from(
            vs,
            -6,
            &[
                (1, &[1, 0, 0, 1]),
                (-1, &[0, 2, 0, 0]),
                (-11, &[0, 1, 1, 0]),
                (-45, &[0, 1, 0, 1]),
                (-30, &[0, 0, 2, 0]),
                (-250, &[0, 0, 1, 1]),
                (-524, &[0, 0, 0, 2]),
            ],
        )
    });
    for k in 1..=3usize {
        // prod_{j=k+2}^{2k+1} (a1 + a2 j)
        let prod = |vs: &Vars| {
            (k + 2..=2 * k + 1).fold(MultiPoly::constant_in(vs, q(1)), |acc, j| {
                acc.mul_ref(&MultiPoly::var(vs, 1).add_ref(&MultiPoly::var(vs, 2).scale(&q(j as i64))))
            })
        };
        let stated = factorial_q(2 * k as u64 + 1) / factorial_q(k as u64);
        let derived = factorial_q(2 * k as u64 - 1) / factorial_q(k as u64 - 1);
        r_polynomial(&mut c, &format!("R_2^({k})(a,b,c;1) with (2k+1)!/k!"), 3, 0, 2, k, |vs| prod(vs).scale(&stated));
        r_polynomial(&mut c, &format!("R_2^({k})(a,b,c;1) with (2k-1)!/(k-1)!"), 3, 0, 2, k, |vs| prod(vs).scale(&derived));
    }
    if std::env::var_os("HYPERDET_SKIP_SLOW").is_some() {
        println!("    SKIP R_3^(2)(a0,a1,a2;) (HYPERDET_SKIP_SLOW is set)");
    } else {
        r_polynomial(&mut c, "R_3^(2)(a0,a1,a2;)", 3, 0, 3, 2, |vs| {
            poly_from(
                vs,
                16,
                &[
                    (94251, &[1, 3, 2]),
                    (5525, &[2, 2, 2]),
                    (48, &[3, 1, 2]),
                    (1853066, &[1, 1, 4]),
                    (603101, &[1, 2, 3]),
                    (25518, &[2, 1, 3]),
                    (7123, &[1, 4, 1]),
                    (522, &[2, 3, 1]),
                    (3278390, &[0, 3, 3]),
                    (15303958, &[0, 2, 4]),
                    (384, &[3, 0, 3]),
                    (41544, &[2, 0, 4]),
                    (211, &[1, 5, 0]),
                    (19, &[2, 4, 0]),
                    (592, &[0, 6, 0]),
                    (37115136, &[0, 0, 6]),
                    (2178696, &[1, 0, 5]),
                    (37277876, &[0, 1, 5]),
                    (385834, &[0, 4, 2]),
                    (23654, &[0, 5, 1]),
                ],
            )
        });
    }

    let mut pseudo = vec![];
    for s in 0..=3 {
        pseudo.push(PseudoCase::Hilbert { s });
        pseudo.push(PseudoCase::Factorial { s });
        pseudo.push(PseudoCase::GammaRatio { a: qf(1, 2), b: q(2), s });
        pseudo.push(PseudoCase::GammaRatio { a: q(1), b: q(3), s });
        for m in 0..=3 {
            pseudo.push(PseudoCase::FactorialTwo { m, s });
        }
    }
    for case in &pseudo {
        for n in 1..=3 {
            if case.pattern(n).is_err() {
                continue;
            }
            for k in 1..=2 {
                let outcome = pseudo_closed_form(case, n, k).and_then(|cf| Ok(cf == pseudo_bruteforce(case, n, k)?));
                c.check(format!("{case:?} n={n} k={k}"), outcome);
            }
        }
    }
    c.finish(summary);
}

fn performance(summary: &mut Vec<(&'static str, bool)>) {
    let mut c = Criterion::new("perf", "D_5^(2)(n!) through the fast path within 10 s");
    let fact = MomentSequence::new(factorials(20));
    let start = Instant::now();
    let v = hankel_fast(&fact, 5, 2, 0);
    let took = start.elapsed();
    let want: Q = (0..10u64).map(factorial_q).product();
    c.same("value", v, want);
    println!("    D_5^(2)(n!) took {:.3} s", took.as_secs_f64());
    c.check("time", Ok(took < Duration::from_secs(10)));
    c.finish(summary);
}

fn main() -> ExitCode {
    let mut summary = Vec::new();
    let start = Instant::now();
    oracle_equivalence(&mut summary);
    factorial_suite(&mut summary);
    selberg_suite(&mut summary);
    bell_suite(&mut summary);
    binomial_suite(&mut summary);
    pfaffian_suite(&mut summary);
    turanian_suite(&mut summary);
    kaneko_suite(&mut summary);
    symfun_suite(&mut summary);
    appendix_suite(&mut summary);
    performance(&mut summary);
    let failed: Vec<&str> = summary.iter().filter(|(_, ok)| !ok).map(|(id, _)| *id).collect();
    println!(
        "acceptance: {} of {} criteria passed in {:.1} s",
        summary.len() - failed.len(),
        summary.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
