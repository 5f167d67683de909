use num_bigint::BigInt;

use super::family::{classical_family, ClassicalTag};
use super::projected::projected_mult_det;
use crate::exact::{
    binomial, factorial, factorial_q, q, qf, stirling, vars, MultiPoly, RationalFunction,
    Ring, StirlingKind, UniPoly, Q,
};
use crate::hyperdet::{hankel_fast, MomentSequence};
use crate::{Error, Result};

/// Bell (Touchard) polynomials `b_0..b_{count-1}` in `a`.
pub fn bell_polys(count: usize) -> Vec<UniPoly> {
    // b_{n+1} = a sum_j binom(n,j) b_j
    let mut out: Vec<UniPoly> = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(UniPoly::from_ints("a", &[1]));
    let a = UniPoly::var("a");
    for n in 0..count.saturating_sub(1) {
        let mut s = UniPoly::zero();
        for (j, b) in out.iter().enumerate() {
            s = s.add_ref(&b.scale(&Q::from(binomial(n as u64, j as u64))));
        }
        out.push(a.mul_ref(&s).with_var("a"));
    }
    out
}

pub fn bell_moments(count: usize) -> MomentSequence<UniPoly> {
    MomentSequence::tagged(bell_polys(count), "bell")
}

/// Row `k` of the triangle: coefficients of `a^1..a^k` in `D_2^{(k)}(b(a))`,
/// by the apolar sum.
pub fn bell_triangle(k: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::Domain("triangle rows start at k = 1".into()));
    }
    let d = hankel_fast(&bell_moments(2 * k + 1), 2, k, 0)?;
    row_from_poly(&d, k)
}

/// Same row read off `1/2 exp[a(e^x + e^{-x} - 2)]`.
pub fn bell_triangle_gf(k: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::Domain("triangle rows start at k = 1".into()));
    }
    // series in t = x^2 with coefficients in a
    let g: Vec<UniPoly> = (0..=k)
        .map(|m| {
            if m == 0 {
                UniPoly::zero()
            } else {
                UniPoly::constant(q(2) / factorial_q(2 * m as u64))
            }
        })
        .collect();
    let mul = |x: &[UniPoly], y: &[UniPoly]| -> Vec<UniPoly> {
        let mut z = vec![UniPoly::zero(); k + 1];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate().take(k + 1 - i) {
                z[i + j] = z[i + j].add_ref(&xi.mul_ref(yj));
            }
        }
        z
    };
    let a = UniPoly::var("a");
    let ag: Vec<UniPoly> = g.iter().map(|c| c.mul_ref(&a)).collect();
    let mut term = vec![UniPoly::zero(); k + 1];
    term[0] = UniPoly::one();
    let mut sum = term.clone();
    for j in 1..=k {
        term = mul(&term, &ag)
            .into_iter()
            .map(|c| c.scale(&qf(1, j as i64)))
            .collect();
        for (s, t) in sum.iter_mut().zip(&term) {
            *s = s.add_ref(t);
        }
    }
    let d = sum[k].scale(&(factorial_q(2 * k as u64) / q(2)));
    row_from_poly(&d.with_var("a"), k)
}

fn row_from_poly(d: &UniPoly, k: usize) -> Result<Vec<BigInt>> {
    if !d.coeff(0).is_zero() || d.degree().unwrap_or(0) > k {
        return Err(Error::Domain(format!("unexpected D_2 shape: {d}")));
    }
    (1..=k)
        .map(|j| {
            let c = d.coeff(j);
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Domain(format!("non-integer triangle entry {c}")))
            }
        })
        .collect()
}

/// Closed form of `<C_n, C_m'>` for monic Charlier polynomials.
pub fn charlier_pprime_closed(n: usize, m: usize) -> UniPoly {
    if m <= n {
        return UniPoly::zero();
    }
    let sign = if (m - n + 1) % 2 == 0 { q(1) } else { q(-1) };
    let c = sign * factorial_q(m as u64) / q((m - n) as i64);
    UniPoly::monomial("a", c, n)
}

/// Moment transforms compared against the untransformed sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceTransform {
    /// `c'_m = sum_j s(r,j) b_{m+j}(a)`.
    FallingFactorial { r: usize },
    /// Insertion of `(s)_r / r!` into the binomial moments with parameter `top`.
    BinomialShift { r: usize, top: usize },
}

/// Both sides of the transform identity: for the falling factorial,
/// `D_n^{(k)}(c')` and `a^{nr} D_n^{(k)}(b)`; for the binomial shift,
/// `d_n^{(k)}(r;N)` and `binom(N,r)^n u^{nr} d_n^{(k)}(0;N-r)` in `u = e^{-t}`.
pub fn sequence_transform_check(
    case: SequenceTransform,
    n: usize,
    k: usize,
) -> Result<(UniPoly, UniPoly)> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let len = 2 * k * (n - 1) + 1;
    match case {
        SequenceTransform::FallingFactorial { r } => {
            let b = bell_polys(len + r);
            let s: Vec<Q> = (0..=r)
                .map(|j| Q::from(stirling(StirlingKind::First, r, j).expect("j <= r")))
                .collect();
            let shifted: Vec<UniPoly> = (0..len)
                .map(|m| {
                    s.iter().enumerate().fold(UniPoly::zero(), |acc, (j, sj)| {
                        acc.add_ref(&b[m + j].scale(sj))
                    })
                })
                .collect();
            let lhs = hankel_fast(&MomentSequence::new(shifted), n, k, 0)?;
            let base = hankel_fast(&MomentSequence::new(b[..len].to_vec()), n, k, 0)?;
            let rhs = UniPoly::monomial("a", Q::one(), n * r).mul_ref(&base);
            Ok((lhs.with_var("a"), rhs.with_var("a")))
        }
        SequenceTransform::BinomialShift { r, top } => {
            if r > top {
                return Err(Error::Domain(format!("shift {r} exceeds N = {top}")));
            }
            let lhs = hankel_fast(&MomentSequence::new(shifted_binomial(r, top, len)), n, k, 0)?;
            let base = hankel_fast(&MomentSequence::new(shifted_binomial(0, top - r, len)), n, k, 0)?;
            let c = Q::from(binomial(top as u64, r as u64)).pow(n as i32);
            let rhs = UniPoly::monomial("u", c, n * r).mul_ref(&base);
            Ok((lhs.with_var("u"), rhs.with_var("u")))
        }
    }
}

/// `a'_m = sum_j (-j)^m (-1)^r binom(j,r) binom(N,j) (-u)^j`.
fn shifted_binomial(r: usize, top: usize, len: usize) -> Vec<UniPoly> {
    (0..len)
        .map(|m| {
            let coeffs: Vec<Q> = (0..=top)
                .map(|j| {
                    let mut c = Q::from(binomial(j as u64, r as u64) * binomial(top as u64, j as u64));
                    c *= q(-(j as i64)).pow(m as i32);
                    if (r + j) % 2 == 1 {
                        c = -c;
                    }
                    c
                })
                .collect();
            UniPoly::new("u", coeffs)
        })
        .collect()
}

/// Binomial-distribution moments `c_m(u) = sum_j j^m binom(N,j) u^j`.
pub fn binomial_moments(top: usize, len: usize) -> Vec<UniPoly> {
    (0..len)
        .map(|m| {
            let coeffs: Vec<Q> = (0..=top)
                .map(|j| q(j as i64).pow(m as i32) * Q::from(binomial(top as u64, j as u64)))
                .collect();
            UniPoly::new("u", coeffs)
        })
        .collect()
}

/// `D_n^{(1)}` of the binomial moments and the product formula, as rational
/// functions of `u`.
pub fn binomial_hankel_check(top: usize, n: usize) -> Result<(RationalFunction, RationalFunction)> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let u_vars = vars(&["u"]);
    let d = hankel_fast(&MomentSequence::new(binomial_moments(top, 2 * n - 1)), n, 1, 0)?;
    let lhs = RationalFunction::from_poly(MultiPoly::from_unipoly(&d, &u_vars, 0));
    let u = MultiPoly::var(&u_vars, 0);
    let one_u = u.add_ref(&MultiPoly::constant_in(&u_vars, q(1)));
    let mut c = Q::one();
    for j in 0..n {
        c *= factorial_q(j as u64) * crate::exact::pochhammer(&q(-(top as i64)), j);
    }
    let num = u.neg_ref().pow((n * (n - 1) / 2) as u32).scale(&c);
    // denominator (1+u)^{n(n-1-N)}
    let e = n as i64 * (n as i64 - 1 - top as i64);
    let rhs = if e >= 0 {
        RationalFunction::new(num, one_u.pow(e as u32))
    } else {
        RationalFunction::from_poly(num.mul_ref(&one_u.pow((-e) as u32)))
    };
    Ok((lhs, rhs))
}

/// `det(X_n)` for Krawtchouk polynomials with symbolic `N`, `p`, and the
/// falling factorial `N(N-1)..(N-n+1) p^n`.
pub fn krawtchouk_det_x(n: usize) -> Result<(MultiPoly, MultiPoly)> {
    let v = vars(&["N", "p"]);
    let big_n = MultiPoly::var(&v, 0);
    let p = MultiPoly::var(&v, 1);
    let fam = classical_family(&ClassicalTag::Krawtchouk { p: p.clone(), n: big_n.clone() }, n)?;
    let lhs = projected_mult_det(&fam, 1, n)?;
    let mut rhs = p.pow(n as u32);
    for i in 0..n {
        rhs = rhs.mul_ref(&big_n.sub_ref(&MultiPoly::constant(q(i as i64))));
    }
    Ok((lhs, rhs))
}

/// `det(X^{(2)}_n)` for Krawtchouk with `N = -1` as a polynomial in `p`,
/// against `(n!)^2 p^n (p^{n+1} + (-1)^n (1-p)^{n+1})`.
pub fn lawden_check(n: usize) -> Result<(MultiPoly, MultiPoly)> {
    let v = vars(&["p"]);
    let p = MultiPoly::var(&v, 0);
    let fam = classical_family(
        &ClassicalTag::Krawtchouk { p: p.clone(), n: MultiPoly::constant(q(-1)) },
        n + 1,
    )?;
    let lhs = projected_mult_det(&fam, 2, n)?;
    let one_p = MultiPoly::constant(q(1)).sub_ref(&p);
    let mut tail = one_p.pow(n as u32 + 1);
    if n % 2 == 1 {
        tail = tail.neg_ref();
    }
    let nf = Q::from(factorial(n as u64));
    let rhs = p
        .pow(n as u32)
        .mul_ref(&p.pow(n as u32 + 1).add_ref(&tail))
        .scale(&(nf.clone() * nf));
    Ok((lhs, rhs))
}

/// The Lawden determinant in `u = e^t`: the computed polynomial in `p` with
/// `p = u/(1+u)` substituted, against
/// `(n!)^2 u^n (u^{n+1} - (-1)^{n+1}) / (1+u)^{2n+1}`.
pub fn lawden_check_u(n: usize) -> Result<(RationalFunction, RationalFunction)> {
    let (in_p, _) = lawden_check(n)?;
    let v = vars(&["u"]);
    let u = MultiPoly::var(&v, 0);
    let one_u = u.add_ref(&MultiPoly::constant_in(&v, q(1)));
    let p = RationalFunction::new(u.clone(), one_u.clone());
    let mut lhs = RationalFunction::zero();
    let mut pk = RationalFunction::one();
    for d in 0..=in_p.degree_in(0) {
        let c = in_p.coeff(&[d]);
        if !c.is_zero() {
            lhs = lhs.add_ref(&pk.scale(&c));
        }
        pk = pk.mul_ref(&p);
    }
    let nf = Q::from(factorial(n as u64));
    let mut tail = MultiPoly::constant_in(&v, q(1));
    if n % 2 == 1 {
        tail = tail.neg_ref();
    }
    // u^{n+1} - (-1)^{n+1}
    let num = u
        .pow(n as u32)
        .mul_ref(&u.pow(n as u32 + 1).add_ref(&tail))
        .scale(&(nf.clone() * nf));
    let rhs = RationalFunction::new(num, one_u.pow(2 * n as u32 + 1));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::functional::{monic_from_moments, MomentFunctional};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_bell_polys() {
        let b = bell_polys(4);
        assert_eq!(b[2], UniPoly::from_ints("a", &[0, 1, 1]));
        assert_eq!(b[3], UniPoly::from_ints("a", &[0, 1, 3, 1]));
    }

    #[test]
    fn triangle_rows_both_routes() {
        assert_eq!(bell_triangle(2).unwrap(), ints(&[1, 6]));
        assert_eq!(bell_triangle(4).unwrap(), ints(&[1, 126, 840, 840]));
        for k in 1..=5 {
            assert_eq!(bell_triangle(k).unwrap(), bell_triangle_gf(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn charlier_derivative_products() {
        let mu = MomentFunctional::new(bell_polys(14));
        let f = monic_from_moments(&mu, 5).unwrap();
        for n in 0..=5 {
            for m in 0..=5 {
                let v = mu.inner(f.poly(n), &f.poly(m).derivative()).unwrap();
                assert_eq!(v, charlier_pprime_closed(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn transforms_small() {
        let (l, r) = sequence_transform_check(SequenceTransform::FallingFactorial { r: 1 }, 2, 1).unwrap();
        assert_eq!(l, UniPoly::from_ints("a", &[0, 0, 0, 1]));
        assert_eq!(l, r);
        let (l, r) =
            sequence_transform_check(SequenceTransform::BinomialShift { r: 1, top: 2 }, 1, 1).unwrap();
        assert_eq!(l, UniPoly::from_ints("u", &[0, 2, -2]));
        assert_eq!(l, r);
    }

    #[test]
    fn binomial_suite() {
        for top in 1..=3 {
            for n in 1..=3 {
                let (l, r) = binomial_hankel_check(top, n).unwrap();
                assert_eq!(l, r, "N={top} n={n}");
            }
        }
        for n in 1..=3 {
            let (l, r) = krawtchouk_det_x(n).unwrap();
            assert_eq!(l, r);
            let (l, r) = lawden_check(n).unwrap();
            assert_eq!(l, r);
            let (l, r) = lawden_check_u(n).unwrap();
            assert_eq!(l, r);
        }
    }
}
