use num_bigint::BigInt;

use super::expand::{kaneko_integrand, kaneko_integrand_diagonal, y_vars};
use super::measure::{PiPoly, SelbergMeasure};
use super::symmetric::{affine_map, jacobi_eigen, sym_orthogonal};
use crate::exact::{
    binomial, factorial, q, qf, vars, MultiPoly, Ring, UniPoly, Vars, Q,
};
use crate::hyperdet::{hankel_fast, MomentSequence};
use crate::orthopoly::{monic_from_moments, superfactorial, wronskian, MomentFunctional};
use crate::selberg::{beta_value, selberg_value, SelbergParams};
use crate::symfun::Partition;
use crate::{Error, Result};

fn pow2(e: i64) -> Q {
    let p = Q::from_integer(BigInt::from(1) << e.unsigned_abs());
    if e < 0 {
        q(1) / p
    } else {
        p
    }
}

fn sign(odd: bool) -> Q {
    if odd {
        q(-1)
    } else {
        q(1)
    }
}

/// `int prod_{i,j} (x_i - y_j) Delta(x)^{2k} prod w(x_i) dx` as a polynomial in `y1..yr`.
pub fn kaneko_lhs(m: &SelbergMeasure, n: usize, r: usize) -> Result<PiPoly> {
    let integrand = kaneko_integrand(n, m.k, r);
    let top = 2 * m.k * n.saturating_sub(1) + r + 1;
    let (mu, p) = m.rational_moments(top)?;
    let yv = y_vars(r);
    let mut terms: Vec<(Vec<u32>, Q)> = Vec::new();
    'outer: for (e, c) in integrand.terms() {
        let mut v = c.clone();
        for &ei in &e[..n] {
            let m = &mu[ei as usize];
            if m.is_zero() {
                continue 'outer;
            }
            v *= m;
        }
        terms.push((e[n..].to_vec(), v));
    }
    Ok(PiPoly::new(MultiPoly::from_terms(&yv, terms), p * n as u32))
}

/// Coefficients in `y` of `mu_n(Delta^{2k} prod_i (x_i - y)^r)` for a moment
/// sequence over any ring.
pub fn kaneko_lhs_diagonal<R: Ring>(moments: &[R], n: usize, k: usize, r: usize) -> Result<Vec<R>> {
    let needed = 2 * k * n.saturating_sub(1) + r + 1;
    if moments.len() < needed {
        return Err(Error::InsufficientMoments { needed, available: moments.len() });
    }
    let integrand = kaneko_integrand_diagonal(n, k, r);
    let mut out = vec![R::zero(); n * r + 1];
    'outer: for (e, c) in integrand.terms() {
        let mut v = R::from_rational(c);
        for &ei in &e[..n] {
            let m = &moments[ei as usize];
            if m.is_zero() {
                continue 'outer;
            }
            v = v.mul_ref(m);
        }
        let d = e[n] as usize;
        out[d] = out[d].add_ref(&v);
    }
    Ok(out)
}

/// How the rectangular symmetric Jacobi polynomial is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiRoute {
    /// Gram–Schmidt against `|Delta|^{2 gamma + 1}` with `gamma = c - 1/2`.
    GramSchmidtPrinted,
    /// Eigenfunction of the Jacobi operator with `|Delta|^{2/c}`.
    Operator,
}

/// `p_{(n^r)}(t)` on `[-1,1]^r` for the weight
/// `prod (1-t_i)^{a/k-1} (1+t_i)^{b/k-1}`, monic in `m_{(n^r)}(t)`, in `y1..yr`.
pub fn jacobi_rect(n: usize, r: usize, a: &Q, b: &Q, k: usize, route: JacobiRoute) -> Result<MultiPoly> {
    if k == 0 {
        return Err(Error::Domain("Kaneko identity needs k >= 1".into()));
    }
    let yv = y_vars(r);
    let kappa = Partition::rectangle(n as u32, r);
    let kq = q(k as i64);
    let z_poly = match route {
        JacobiRoute::GramSchmidtPrinted => {
            let m = SelbergMeasure::jacobi(a / &kq, b / &kq, k)?;
            sym_orthogonal(&m, r, &kappa)?.to_poly(&yv)?
        }
        JacobiRoute::Operator => {
            let alpha = a / &kq - q(1);
            let beta = b / &kq - q(1);
            jacobi_eigen(&alpha, &beta, &qf(1, k as i64), &kappa, &yv)?.to_poly(&yv)?
        }
    };
    // t = 1 - 2z
    let lead = pow2((n * r) as i64) * sign((n * r) % 2 == 1);
    Ok(affine_map(&z_poly, &qf(-1, 2), &qf(1, 2)).scale(&lead))
}

/// Both sides of Kaneko's integral for the Jacobi weight `x^{a-1}(1-x)^{b-1}`:
/// the integral, and `2^{-nr} S_n(a,b,k) p_{(n^r)}(1-2y_1, .., 1-2y_r)`.
pub fn kaneko_check(
    n: usize,
    r: usize,
    a: &Q,
    b: &Q,
    k: usize,
    route: JacobiRoute,
) -> Result<(PiPoly, PiPoly)> {
    let m = SelbergMeasure::jacobi(a.clone(), b.clone(), k)?;
    let lhs = kaneko_lhs(&m, n, r)?;
    let s = selberg_value(&SelbergParams::new(n, a.clone(), b.clone(), k)?)?;
    let p = jacobi_rect(n, r, a, b, k, route)?;
    let rhs = affine_map(&p, &q(-2), &q(1)).scale(&pow2(-((n * r) as i64)));
    Ok((lhs, PiPoly::new(rhs, 0).scale(&s)))
}

/// Normalization constant of the hyperdeterminant form of Kaneko's integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeineNorm {
    /// `2^{kn(n-1) + n(a+b+r-2)} S_n(a,b,k)`.
    Printed,
    /// `2^{kn(n-1) + n(a+b-1)} S_n(a,b,k)`.
    Derived,
}

fn integer_of(x: &Q, what: &str) -> Result<i64> {
    if x.is_integer() && *x > q(0) {
        i64::try_from(x.to_integer()).map_err(|_| Error::Domain(format!("{what} too large")))
    } else {
        Err(Error::Domain(format!("{what} must be a positive integer")))
    }
}

/// `Z p_{(n^r)}(t)` and `n! D_n^{(k)}(c(t))` with
/// `c_m(t) = int_{-1}^{1} x^m prod_j (t_j - x) (1-x)^{a-1} (1+x)^{b-1} dx`, in `y1..yr`.
pub fn heine_hyperdet_check(
    n: usize,
    r: usize,
    k: usize,
    a: &Q,
    b: &Q,
    norm: HeineNorm,
) -> Result<(MultiPoly, MultiPoly)> {
    let ai = integer_of(a, "a")?;
    let bi = integer_of(b, "b")?;
    let s = selberg_value(&SelbergParams::new(n, a.clone(), b.clone(), k)?)?;
    let s = s.as_rational().cloned().ok_or(Error::PiPowerMismatch(s.pi_half_power(), 0))?;
    let (n_i, k_i, r_i) = (n as i64, k as i64, r as i64);
    let e2 = k_i * n_i * (n_i - 1)
        + match norm {
            HeineNorm::Printed => n_i * (ai + bi + r_i - 2),
            HeineNorm::Derived => n_i * (ai + bi - 1),
        };
    let z = pow2(e2) * s;
    let p = jacobi_rect(n, r, a, b, k, JacobiRoute::Operator)?;
    let lhs = p.scale(&z);

    // J_m = int_{-1}^{1} x^m (1-x)^{a-1} (1+x)^{b-1} dx
    let top = 2 * k * n.saturating_sub(1) + r + 1;
    let scale = pow2(ai + bi - 1);
    let mut jm = Vec::with_capacity(top);
    for m in 0..top {
        let mut acc = q(0);
        for i in 0..=m {
            let bv = beta_value(&(b + q(i as i64)), a)?;
            let bv = bv.as_rational().cloned().ok_or(Error::PiPowerMismatch(bv.pi_half_power(), 0))?;
            let t = Q::from_integer(binomial(m as u64, i as u64)) * pow2(i as i64) * bv;
            acc += t * sign((m - i) % 2 == 1);
        }
        jm.push(acc * &scale);
    }
    // prod_j (t_j - x) = sum_i (-x)^i e_{r-i}(t)
    let names: Vec<String> = (1..=r).map(|j| format!("y{j}")).chain(["x".to_string()]).collect();
    let tx = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
    let mut prod = MultiPoly::constant_in(&tx, q(1));
    for j in 0..r {
        prod = prod.mul_ref(&MultiPoly::var(&tx, j).sub_ref(&MultiPoly::var(&tx, r)));
    }
    let yv = y_vars(r);
    let needed = 2 * k * n.saturating_sub(1) + 1;
    let c: Vec<MultiPoly> = (0..needed)
        .map(|m| {
            let terms = prod
                .terms()
                .iter()
                .map(|(e, c)| (e[..r].to_vec(), c * &jm[m + e[r] as usize]));
            MultiPoly::from_terms(&yv, terms)
        })
        .collect();
    let d = hankel_fast(&MomentSequence::new(c), n, k, 0)?;
    let rhs = d.scale(&Q::from_integer(factorial(n as u64)));
    Ok((lhs, rhs))
}

fn functional_measure(moments: &[Q]) -> SelbergMeasure {
    SelbergMeasure::moments(moments.to_vec(), 1)
}

/// Both sides of `mu_n(Delta^2(x) R(y,x)) = mu_n(Delta^2) p^{(1)}_{(n^r)}(y)` for a
/// moment functional, in `y1..yr`.
pub fn leclerc_check(moments: &[Q], n: usize, r: usize) -> Result<(MultiPoly, MultiPoly)> {
    let m = functional_measure(moments);
    let lhs = kaneko_lhs(&m, n, r)?
        .poly
        .scale(&sign((n * r) % 2 == 1));
    let needed = 2 * n.saturating_sub(1) + 1;
    if moments.len() < needed {
        return Err(Error::InsufficientMoments { needed, available: moments.len() });
    }
    let d = hankel_fast(&MomentSequence::new(moments[..needed].to_vec()), n, 1, 0)?;
    let norm = d * Q::from_integer(factorial(n as u64));
    let p = sym_orthogonal(&m, r, &Partition::rectangle(n as u32, r))?.to_poly(&y_vars(r))?;
    Ok((lhs, p.scale(&norm)))
}

/// `p^{(1)}_{(n^r)}(u, .., u)` against `W(p_n, .., p_{n+r-1})(u) / (1! .. (r-1)!)`.
pub fn leclerc_wronskian_check(moments: &[Q], n: usize, r: usize) -> Result<(UniPoly, UniPoly)> {
    if r == 0 {
        return Err(Error::Domain("Wronskian needs r >= 1".into()));
    }
    let m = functional_measure(moments);
    let yv = y_vars(r);
    let p = sym_orthogonal(&m, r, &Partition::rectangle(n as u32, r))?.to_poly(&yv)?;
    let uv: Vars = vars(&["u"]);
    let u = MultiPoly::var(&uv, 0);
    let diag = p.substitute_all(&vec![u; r]).to_unipoly(0).with_var("u");
    let fam = monic_from_moments(&MomentFunctional::new(moments.to_vec()), n + r)?;
    let ps: Vec<UniPoly> = (n..n + r).map(|j| fam.poly(j).clone().with_var("u")).collect();
    let sf = Q::from_integer(superfactorial(r));
    let w = wronskian(&ps)?.map_coeffs(|c| c / &sf).with_var("u");
    Ok((diag, w))
}
