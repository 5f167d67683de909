use super::families::{hankel_family, SequenceFamily};
use super::integrals::{beta_value, selberg_value, SelbergParams};
use crate::exact::{
    factorial_q, gamma_exact, pochhammer, q, vars, ExactScalar, MultiPoly, Ring, Value, Q,
};
use crate::hyperdet::{det_plus_exact, hankel_fast, HyperTensor, MomentSequence};
use crate::{Error, Result};

fn rational_of(v: Value) -> Result<Q> {
    v.as_scalar()
        .and_then(|s| s.as_rational().cloned())
        .ok_or_else(|| Error::Domain("expected a rational value".into()))
}

/// `D_n^{(k)}(c(a,b))` with `c_m = (a)_m/(b)_m`, computed four ways, plus the
/// symmetric point and the Selberg relation.
#[derive(Clone, Debug, PartialEq)]
pub struct AppendixAReport {
    pub direct: Q,
    pub hilbert_route: Q,
    pub inverse_factorial_route: Q,
    pub factorial_route: Q,
    /// `D_n^{(k)}(c(b-a,b))`.
    pub symmetric: Q,
    /// `S_n(a,b-a,k) / (n! B(a,b-a)^n)`.
    pub selberg_route: ExactScalar,
}

impl AppendixAReport {
    pub fn all_agree(&self) -> bool {
        let d = &self.direct;
        *d == self.hilbert_route
            && *d == self.inverse_factorial_route
            && *d == self.factorial_route
            && *d == self.symmetric
            && ExactScalar::rational(d.clone()) == self.selberg_route
    }
}

/// `prod_{m=1}^n (a)_{k(m-1)} (b-a)_{k(m-1)} / (b)_{k(n+m-2)}`.
fn pochhammer_block(n: usize, k: usize, a: &Q, b: &Q) -> Q {
    let ba = b - a;
    (1..=n)
        .map(|m| {
            pochhammer(a, k * (m - 1)) * pochhammer(&ba, k * (m - 1))
                / pochhammer(b, k * (n + m - 2))
        })
        .product()
}

pub fn appendix_a_consistency(n: usize, a: &Q, b: &Q, k: usize) -> Result<AppendixAReport> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    if b <= a || *a <= q(0) {
        return Err(Error::Domain("need 0 < a < b".into()));
    }
    let d = |fam: SequenceFamily| hankel_family(&fam, n, k, 0).and_then(rational_of);
    let direct = d(SequenceFamily::PochhammerRatio(a.clone(), b.clone()))?;
    let symmetric = d(SequenceFamily::PochhammerRatio(b - a, b.clone()))?;
    let h = d(SequenceFamily::Hilbert)?;
    let i = d(SequenceFamily::InverseFactorial)?;
    let f = d(SequenceFamily::Factorial)?;
    let block = pochhammer_block(n, k, a, b);
    let fq = |m: usize| factorial_q(m as u64);

    let hilbert_route = (1..=n)
        .map(|m| fq(1 + k * (m + n - 2)) / fq(k * (m - 1)).pow(2))
        .product::<Q>()
        * &block
        * h;
    let sign = if (k * n * (n - 1) / 2) % 2 == 1 { q(-1) } else { q(1) };
    let inverse_factorial_route =
        sign * (1..=n).map(|m| fq(k * (n + m - 2))).product::<Q>() * &block * i;
    let factorial_route =
        (1..=n).map(|m| q(1) / fq(k * (m - 1))).product::<Q>() * &block * f;

    let ba = b - a;
    let s = selberg_value(&SelbergParams::new(n, a.clone(), ba.clone(), k)?)?;
    let beta = beta_value(a, &ba)?.pow(n as u32);
    let selberg_route = s.checked_div(&beta)?.scale(&(q(1) / fq(n)));

    Ok(AppendixAReport {
        direct,
        hilbert_route,
        inverse_factorial_route,
        factorial_route,
        symmetric,
        selberg_route,
    })
}

/// Symbols `a0..a{p_len-1}` and `b0..b{q_len-1}` sharing one variable list.
pub fn hypergeom_symbols(p_len: usize, q_len: usize) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let names: Vec<String> = (0..p_len)
        .map(|i| format!("a{i}"))
        .chain((0..q_len).map(|i| format!("b{i}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let vs = vars(&refs);
    let ps = (0..p_len).map(|i| MultiPoly::var(&vs, i)).collect();
    let qs = (0..q_len).map(|i| MultiPoly::var(&vs, p_len + i)).collect();
    (ps, qs)
}

fn eval_at(coeffs: &[MultiPoly], j: usize, unit: &MultiPoly) -> MultiPoly {
    if coeffs.is_empty() {
        return unit.clone();
    }
    let mut acc = unit.scale(&q(0));
    let mut pw = q(1);
    for c in coeffs {
        acc = acc.add_ref(&c.scale(&pw));
        pw *= q(j as i64);
    }
    acc
}

fn product_range(coeffs: &[MultiPoly], lo: usize, hi: usize, unit: &MultiPoly) -> MultiPoly {
    (lo..=hi).fold(unit.clone(), |acc, j| acc.mul_ref(&eval_at(coeffs, j, unit)))
}

/// `R_n^{(k)}` for `c_m = prod_{j=1}^m P(j)/Q(j)`, `c_0 = 1`, with
/// `P(x) = sum p_i x^i` and `Q(x) = sum q_i x^i` (empty list means 1).
///
/// Returns `D_n^{(k)}(c) prod_m prod_{j=1}^{k(n+m-1)} Q(j) / prod_m prod_{j=1}^{km} P(j)`.
pub fn hypergeom_r_extract(
    p: &[MultiPoly],
    qc: &[MultiPoly],
    n: usize,
    k: usize,
) -> Result<MultiPoly> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    let vs = p
        .iter()
        .chain(qc.iter())
        .map(|x| x.vars().clone())
        .find(|v| !v.is_empty())
        .unwrap_or_else(|| vars(&[]));
    let lift = |xs: &[MultiPoly]| -> Vec<MultiPoly> { xs.iter().map(|x| x.embed(&vs)).collect() };
    let (p, qc) = (lift(p), lift(qc));
    let unit = MultiPoly::constant_in(&vs, q(1));
    let top = 2 * k * (n - 1);
    for j in 1..=top {
        if eval_at(&qc, j, &unit).is_zero() {
            return Err(Error::Domain(format!("Q vanishes at {j}")));
        }
    }
    // e_m = c_m prod_{j=1}^{top} Q(j), a polynomial
    let e: Vec<MultiPoly> = (0..=top)
        .map(|m| {
            product_range(&p, 1, m, &unit).mul_ref(&product_range(&qc, m + 1, top, &unit))
        })
        .collect();
    let de = hankel_fast(&MomentSequence::new(e), n, k, 0)?;
    let mut num = de;
    let mut den = product_range(&qc, 1, top, &unit).pow(n as u32);
    for m in 0..n {
        num = num.mul_ref(&product_range(&qc, 1, k * (n + m - 1), &unit));
        den = den.mul_ref(&product_range(&p, 1, k * m, &unit));
    }
    if den.is_zero() {
        return Err(Error::Domain("P vanishes inside the prefactor".into()));
    }
    num.try_div(&den)
        .ok_or_else(|| Error::InexactDivision("R-polynomial prefactor".into()))
}

/// Exponent patterns with known pseudo-hyperdeterminant closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoCase {
    /// `c_j = 1/(j+1)`, pattern `(1^s, 0^{n-s})`.
    Hilbert { s: usize },
    /// `c_j = G(a+j)/G(b+j)`, pattern `(1^s, 0^{n-s})`.
    GammaRatio { a: Q, b: Q, s: usize },
    /// `c_j = j!`, pattern `(1^s, 0^{n-s})`.
    Factorial { s: usize },
    /// `c_j = j!`, pattern `(2^m, 1^s, 0^{n-m-s})`.
    FactorialTwo { m: usize, s: usize },
}

impl PseudoCase {
    pub fn pattern(&self, n: usize) -> Result<Vec<usize>> {
        let (twos, ones) = match self {
            PseudoCase::Hilbert { s }
            | PseudoCase::GammaRatio { s, .. }
            | PseudoCase::Factorial { s } => (0, *s),
            PseudoCase::FactorialTwo { m, s } => (*m, *s),
        };
        if twos + ones > n {
            return Err(Error::Domain(format!("pattern longer than n = {n}")));
        }
        let mut v = vec![2; twos];
        v.extend(std::iter::repeat(1).take(ones));
        v.extend(std::iter::repeat(0).take(n - twos - ones));
        Ok(v)
    }

    fn moment(&self, j: usize) -> Result<ExactScalar> {
        Ok(match self {
            PseudoCase::Hilbert { .. } => ExactScalar::rational(q(1) / q(j as i64 + 1)),
            PseudoCase::GammaRatio { a, b, .. } => {
                let jq = q(j as i64);
                gamma_exact(&(a + &jq))?.checked_div(&gamma_exact(&(b + &jq))?)?
            }
            PseudoCase::Factorial { .. } | PseudoCase::FactorialTwo { .. } => {
                ExactScalar::rational(factorial_q(j as u64))
            }
        })
    }
}

/// Closed form of `+D^{(k)}` for the listed cases.
pub fn pseudo_closed_form(case: &PseudoCase, n: usize, k: usize) -> Result<ExactScalar> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    case.pattern(n)?;
    let fq = |m: usize| factorial_q(m as u64);
    let kn = fq(k).pow(n as i32);
    let qi = |m: usize| q(m as i64);
    match case {
        PseudoCase::Hilbert { s } => {
            let mut acc = q(1) / kn;
            for j in 1..=*s {
                acc = acc * qi(1 + (n - j) * k) / qi(2 + (2 * n - j - 1) * k);
            }
            for j in 0..n {
                acc = acc * fq(k * (1 + j)) * fq(k * j).pow(2) / fq(1 + (n + j - 1) * k);
            }
            Ok(ExactScalar::rational(acc))
        }
        PseudoCase::GammaRatio { a, b, s } => {
            let ba = b - a;
            if ba <= q(0) || *a <= q(0) {
                return Err(Error::Domain("need 0 < a < b".into()));
            }
            let mut rat = q(1) / kn;
            for j in 1..=*s {
                rat = rat * (a + qi(k * (n - j))) / (b + qi((2 * n - j - 1) * k));
            }
            let mut num = ExactScalar::rational(rat);
            let mut den = gamma_exact(&ba)?.pow(n as u32);
            for j in 0..n {
                let jk = qi(j * k);
                num = num
                    .scale(&fq(k * (1 + j)))
                    .mul(&gamma_exact(&(a + &jk))?)
                    .mul(&gamma_exact(&(&ba + &jk))?);
                den = den.mul(&gamma_exact(&(b + qi((n + j - 1) * k)))?);
            }
            num.checked_div(&den)
        }
        PseudoCase::Factorial { s } => {
            let mut acc = q(1) / kn;
            for j in 1..=*s {
                acc *= qi(1 + k * (n - j));
            }
            for j in 0..n {
                acc = acc * fq(k * (1 + j)) * fq(k * j);
            }
            Ok(ExactScalar::rational(acc))
        }
        PseudoCase::FactorialTwo { m, s } => {
            let mut acc = q(1) / kn;
            for j in 1..=*m {
                acc *= qi(2 + k * (2 * n - m - s - j));
            }
            for j in 1..=m + s {
                acc *= qi(1 + k * (n - j));
            }
            for j in 0..n {
                acc = acc * fq(k * (1 + j)) * fq(k * j);
            }
            Ok(ExactScalar::rational(acc))
        }
    }
}

/// `+D^{(k)}` of the materialized odd-order tensor.
pub fn pseudo_bruteforce(case: &PseudoCase, n: usize, k: usize) -> Result<ExactScalar> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    let pattern = case.pattern(n)?;
    let len = pattern.iter().copied().max().unwrap_or(0) + 2 * k * (n - 1) + 1;
    let c = (0..len)
        .map(|j| case.moment(j))
        .collect::<Result<Vec<_>>>()?;
    let t = HyperTensor::pseudo_hankel(&MomentSequence::new(c), k, &pattern)?;
    det_plus_exact(&t)
}
