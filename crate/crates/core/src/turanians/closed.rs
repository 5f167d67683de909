use num_bigint::BigInt;

use super::family::{TuranianFamily, TuranianSpec};
use crate::exact::{
    binomial, double_factorial, factorial, pochhammer, q, MultiPoly, Poly, Ring, Vars, Q,
};
use crate::kaneko::{jacobi_rect, kaneko_lhs_diagonal, JacobiRoute};
use crate::orthopoly::{monic_from_moments, superfactorial, wronskian, MomentFunctional};
use crate::selberg::{selberg_value, SelbergParams};
use crate::{Error, Result};

/// Evaluation strategy for a Turanian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuranianRoute {
    /// Product formula, `r = 0` only.
    Product,
    /// Legendre only: symmetric Jacobi polynomial at the diagonal point.
    Jacobi,
    /// `k = 1` only: Wronskian of the underlying orthogonal polynomials.
    Wronskian,
    /// Expansion of `Delta^{2k} prod (t_i - y)^r` against the one-dimensional measure.
    Integral,
}

/// `u` or, when `u` is a square root, `u^2`.
enum Scale {
    Linear(MultiPoly),
    Square(MultiPoly),
}

impl Scale {
    fn pow(&self, e: usize) -> Option<MultiPoly> {
        match self {
            Scale::Linear(u) => Some(u.pow(e as u32)),
            Scale::Square(u2) if e % 2 == 0 => Some(u2.pow((e / 2) as u32)),
            Scale::Square(_) => None,
        }
    }
}

/// `c_m = int (s + u t)^m dmu(t)`, with `mu` given by its moments.
struct AffineRep {
    s: MultiPoly,
    u: Scale,
    mu: Vec<MultiPoly>,
}

fn qc(vs: &Vars, v: Q) -> MultiPoly {
    MultiPoly::constant_in(vs, v)
}

fn poch_poly(base: &MultiPoly, m: usize) -> MultiPoly {
    let vs = base.vars().clone();
    (0..m).fold(qc(&vs, q(1)), |acc, i| acc.mul_ref(&base.add_ref(&qc(&vs, q(i as i64)))))
}

fn affine_rep(family: &TuranianFamily, len: usize) -> Result<AffineRep> {
    let vs = family.vars();
    let x = MultiPoly::var(&vs, 0);
    let one = qc(&vs, q(1));
    let rep = match family {
        TuranianFamily::Legendre => AffineRep {
            s: x.clone(),
            u: Scale::Square(x.mul_ref(&x).sub_ref(&one)),
            mu: (0..len)
                .map(|j| {
                    if j % 2 == 1 {
                        qc(&vs, q(0))
                    } else {
                        let v = Q::from_integer(binomial(j as u64, (j / 2) as u64))
                            / Q::from_integer(BigInt::from(1) << j);
                        qc(&vs, v)
                    }
                })
                .collect(),
        },
        TuranianFamily::Laguerre { alpha } => AffineRep {
            s: one.clone(),
            u: Scale::Linear(x.neg_ref()),
            mu: (0..len).map(|j| qc(&vs, q(1) / pochhammer(&(alpha + q(1)), j))).collect(),
        },
        TuranianFamily::Hermite => AffineRep {
            s: x.clone(),
            u: Scale::Square(qc(&vs, q(-1))),
            mu: (0..len)
                .map(|j| {
                    if j % 2 == 1 {
                        qc(&vs, q(0))
                    } else {
                        let v = Q::from_integer(double_factorial(j as i64 - 1))
                            / Q::from_integer(BigInt::from(1) << (j / 2));
                        qc(&vs, v)
                    }
                })
                .collect(),
        },
        TuranianFamily::Charlier { a } => {
            let a = match a {
                Some(v) => qc(&vs, v.clone()),
                None => MultiPoly::var(&vs, 1),
            };
            AffineRep {
                s: a.neg_ref(),
                u: Scale::Linear(qc(&vs, q(-1))),
                mu: (0..len).map(|j| poch_poly(&x.neg_ref(), j)).collect(),
            }
        }
        TuranianFamily::Meixner { beta, gamma } => AffineRep {
            s: one.clone(),
            u: Scale::Linear(qc(&vs, q(1) / gamma - q(1))),
            mu: (0..len)
                .map(|j| poch_poly(&x, j).scale(&(q(1) / pochhammer(beta, j))))
                .collect(),
        },
        TuranianFamily::Krawtchouk { p, n } => {
            let mut mu = Vec::with_capacity(len);
            for j in 0..len {
                let d = pochhammer(&-n.clone(), j);
                if d == q(0) {
                    return Err(Error::Domain(format!("(-N)_{j} vanishes for N = {n}")));
                }
                mu.push(poch_poly(&x.neg_ref(), j).scale(&(q(1) / d)));
            }
            AffineRep { s: one.clone(), u: Scale::Linear(qc(&vs, -(q(1) / p))), mu }
        }
    };
    Ok(rep)
}

fn inv_factorial(n: usize) -> Q {
    q(1) / Q::from_integer(factorial(n as u64))
}

fn kfact_pow(k: usize, n: usize) -> Q {
    Q::from_integer(factorial(k as u64).pow(n as u32))
}

fn product_form(spec: &TuranianSpec) -> Result<MultiPoly> {
    let TuranianSpec { family, n, k, .. } = spec;
    let (n, k) = (*n, *k);
    let vs = family.vars();
    let x = MultiPoly::var(&vs, 0);
    let one = qc(&vs, q(1));
    let big = k * n * (n - 1);
    let fact = |m: usize| Q::from_integer(factorial(m as u64));
    let base = inv_factorial(n) / kfact_pow(k, n);
    let out = match family {
        TuranianFamily::Legendre => {
            let s = selberg_value(&SelbergParams::new(n, Q::new(1.into(), 2.into()), Q::new(1.into(), 2.into()), k)?)?;
            if s.pi_half_power() != 2 * n as u32 {
                return Err(Error::PiPowerMismatch(s.pi_half_power(), 2 * n as u32));
            }
            let c = s.coeff() * inv_factorial(n) * Q::from_integer(BigInt::from(1) << big);
            x.mul_ref(&x).sub_ref(&one).pow((big / 2) as u32).scale(&c)
        }
        TuranianFamily::Laguerre { alpha } => {
            let mut c = base;
            if (big / 2) % 2 == 1 {
                c = -c;
            }
            for j in 0..n {
                c *= fact(j * k + k) / pochhammer(&(alpha + q(1)), k * (n + j - 1));
            }
            x.pow(big as u32).scale(&c)
        }
        TuranianFamily::Hermite => {
            let mut c = base;
            for j in 1..=n {
                c *= fact(j * k);
            }
            let half = Q::new((-1).into(), 2.into());
            c *= num_traits::pow::Pow::pow(&half, (big / 2) as u32);
            qc(&vs, c)
        }
        TuranianFamily::Charlier { .. } => {
            let mut acc = one.scale(&base);
            for j in 0..n {
                acc = acc.mul_ref(&poch_poly(&x.neg_ref(), k * j)).scale(&fact(k + k * j));
            }
            acc
        }
        TuranianFamily::Meixner { beta, gamma } => {
            let u = q(1) / gamma - q(1);
            let mut c = inv_factorial(n) * num_traits::pow::Pow::pow(&u, big as u32);
            let mut acc = one.clone();
            let bx = qc(&vs, beta.clone()).sub_ref(&x);
            for j in 0..n {
                c *= fact(j * k + k) / (pochhammer(beta, (n + j - 1) * k) * fact(k));
                acc = acc.mul_ref(&poch_poly(&x, j * k)).mul_ref(&poch_poly(&bx, j * k));
            }
            acc.scale(&c)
        }
        TuranianFamily::Krawtchouk { p, n: big_n } => {
            let mut c = inv_factorial(n) / num_traits::pow::Pow::pow(p, big as u32);
            let mut acc = one.clone();
            let xn = x.sub_ref(&qc(&vs, big_n.clone()));
            for j in 0..n {
                let d = pochhammer(&-big_n.clone(), k * (n + j - 1));
                if d == q(0) {
                    return Err(Error::Domain(format!("(-N)_{} vanishes for N = {big_n}", k * (n + j - 1))));
                }
                c *= fact(j * k + k) / (d * fact(k));
                acc = acc.mul_ref(&poch_poly(&x.neg_ref(), j * k)).mul_ref(&poch_poly(&xn, j * k));
            }
            acc.scale(&c)
        }
    };
    Ok(out)
}

/// `sum_j coeffs[j] (-s)^j u^{deg - j}`; fails on an odd power of a square root
/// with a nonzero coefficient.
fn homogenize(coeffs: &[MultiPoly], s: &MultiPoly, u: &Scale, deg: usize) -> Result<MultiPoly> {
    let vs = s.vars().clone();
    let ms = s.neg_ref();
    let mut acc = MultiPoly::zero_in(&vs);
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let up = u
            .pow(deg - j)
            .ok_or_else(|| Error::Domain("odd power of a square-root scale".into()))?;
        acc = acc.add_ref(&c.embed(&vs).mul_ref(&ms.pow(j as u32)).mul_ref(&up));
    }
    Ok(acc)
}

fn integral_route(spec: &TuranianSpec) -> Result<MultiPoly> {
    let TuranianSpec { family, n, k, r } = spec;
    let rep = affine_rep(family, spec.top() + 1)?;
    let kk = kaneko_lhs_diagonal(&rep.mu, *n, *k, *r)?;
    let inner = homogenize(&kk, &rep.s, &rep.u, n * r)?;
    let lead = rep
        .u
        .pow(k * n * (n - 1))
        .ok_or_else(|| Error::Domain("odd power of a square-root scale".into()))?;
    Ok(inner.mul_ref(&lead).scale(&inv_factorial(*n)))
}

fn wronskian_route(spec: &TuranianSpec) -> Result<MultiPoly> {
    let TuranianSpec { family, n, k, r } = spec;
    if *k != 1 {
        return Err(Error::Unsupported("Wronskian route needs k = 1".into()));
    }
    let base = product_form(&TuranianSpec { r: 0, ..spec.clone() })?;
    if *r == 0 {
        return Ok(base);
    }
    let rep = affine_rep(family, 2 * (n + r) + 1)?;
    let fam = monic_from_moments(&MomentFunctional::new(rep.mu.clone()), n + r)?;
    let ps: Vec<Poly<MultiPoly>> = (*n..n + r).map(|j| fam.poly(j).clone()).collect();
    let w = wronskian(&ps)?;
    let inner = homogenize(w.coeffs(), &rep.s, &rep.u, n * r)?;
    let mut c = q(1) / Q::from_integer(superfactorial(*r));
    if (n * r) % 2 == 1 {
        c = -c;
    }
    Ok(inner.mul_ref(&base).scale(&c))
}

fn jacobi_route(spec: &TuranianSpec) -> Result<MultiPoly> {
    let TuranianSpec { family, n, k, r } = spec;
    if *family != TuranianFamily::Legendre {
        return Err(Error::Unsupported("Jacobi route is for Legendre only".into()));
    }
    let (n, k, r) = (*n, *k, *r);
    let half = Q::new(1.into(), 2.into());
    let p = jacobi_rect(n, r, &half, &half, k, JacobiRoute::Operator)?;
    let uv = crate::exact::vars(&["t"]);
    let t = MultiPoly::var(&uv, 0);
    let diag = if r == 0 { p.embed(&uv) } else { p.substitute_all(&vec![t; r]) }.to_unipoly(0);
    let vs = family.vars();
    let x = MultiPoly::var(&vs, 0);
    let x2m1 = x.mul_ref(&x).sub_ref(&qc(&vs, q(1)));
    let big = k * n * (n - 1);
    let mut acc = MultiPoly::zero_in(&vs);
    for (d, c) in diag.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = big + n * r - d;
        if e % 2 == 1 {
            return Err(Error::Domain("symmetric Jacobi polynomial lost its parity".into()));
        }
        acc = acc.add_ref(&x.pow(d as u32).mul_ref(&x2m1.pow((e / 2) as u32)).scale(c));
    }
    let s = selberg_value(&SelbergParams::new(n, half.clone(), half, k)?)?;
    if s.pi_half_power() != 2 * n as u32 {
        return Err(Error::PiPowerMismatch(s.pi_half_power(), 2 * n as u32));
    }
    let c = s.coeff() * inv_factorial(n) * Q::from_integer(BigInt::from(1) << big);
    Ok(acc.scale(&c))
}

/// `D_{n;r}^{(k)}` by a chosen route.
pub fn turanian_route(spec: &TuranianSpec, route: TuranianRoute) -> Result<MultiPoly> {
    match route {
        TuranianRoute::Product => {
            if spec.r != 0 {
                return Err(Error::Unsupported("product formula needs r = 0".into()));
            }
            product_form(spec)
        }
        TuranianRoute::Jacobi => jacobi_route(spec),
        TuranianRoute::Wronskian => wronskian_route(spec),
        TuranianRoute::Integral => integral_route(spec),
    }
}

/// The route `turanian_closed_form` uses for a spec.
pub fn default_route(spec: &TuranianSpec) -> TuranianRoute {
    match (&spec.family, spec.r, spec.k) {
        (_, 0, _) => TuranianRoute::Product,
        (TuranianFamily::Legendre, _, _) => TuranianRoute::Jacobi,
        (TuranianFamily::Charlier { .. }, _, 1)
        | (TuranianFamily::Meixner { .. }, _, 1)
        | (TuranianFamily::Krawtchouk { .. }, _, 1) => TuranianRoute::Wronskian,
        _ => TuranianRoute::Integral,
    }
}

/// `D_{n;r}^{(k)}` in closed form: products at `r = 0`, otherwise the
/// Jacobi, Wronskian or integral route.
pub fn turanian_closed_form(spec: &TuranianSpec) -> Result<MultiPoly> {
    turanian_route(spec, default_route(spec))
}

#[cfg(test)]
pub(crate) fn affine_moments(family: &TuranianFamily, len: usize) -> Result<Vec<MultiPoly>> {
    let rep = affine_rep(family, len)?;
    (0..len)
        .map(|m| {
            let coeffs: Vec<MultiPoly> = (0..=m)
                .map(|j| rep.mu[j].scale(&Q::from_integer(binomial(m as u64, j as u64))))
                .collect();
            let vs = rep.s.vars().clone();
            let mut acc = MultiPoly::zero_in(&vs);
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let up = rep.u.pow(j).ok_or_else(|| Error::Domain("odd power".into()))?;
                acc = acc.add_ref(&c.mul_ref(&rep.s.pow((m - j) as u32)).mul_ref(&up));
            }
            Ok(acc)
        })
        .collect()
}
