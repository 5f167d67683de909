use std::fmt;

use crate::exact::{gamma_exact, q, qf, ExactScalar, MultiPoly, Ring, Q};
use crate::hyperdet::factor_pi;
use crate::{Error, Result};

/// One-dimensional weight of a Selberg-type measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeasureKind {
    /// `x^{a-1} (1-x)^{b-1}` on `[0,1]`.
    Jacobi { a: Q, b: Q },
    /// `x^{a-1} e^{-x}` on `(0, inf)`.
    Laguerre { a: Q },
    /// `e^{-x^2}` on the real line.
    Hermite,
    /// A formal functional given by its rational moments.
    Moments(Vec<Q>),
}

/// `prod_i w(x_i) |Delta(x)|^{2k} dx` in some number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelbergMeasure {
    pub kind: MeasureKind,
    /// Half the Vandermonde exponent.
    pub k: usize,
}

impl SelbergMeasure {
    pub fn new(kind: MeasureKind, k: usize) -> Result<Self> {
        let half_ok = |x: &Q| *x > q(0) && (x * q(2)).is_integer();
        match &kind {
            MeasureKind::Jacobi { a, b } if !(half_ok(a) && half_ok(b)) => {
                return Err(Error::Domain(
                    "Jacobi parameters must be positive integers or half-integers".into(),
                ))
            }
            MeasureKind::Laguerre { a } if !half_ok(a) => {
                return Err(Error::Domain(
                    "Laguerre parameter must be a positive integer or half-integer".into(),
                ))
            }
            _ => {}
        }
        Ok(SelbergMeasure { kind, k })
    }

    pub fn jacobi(a: Q, b: Q, k: usize) -> Result<Self> {
        Self::new(MeasureKind::Jacobi { a, b }, k)
    }

    pub fn laguerre(a: Q, k: usize) -> Result<Self> {
        Self::new(MeasureKind::Laguerre { a }, k)
    }

    pub fn hermite(k: usize) -> Self {
        SelbergMeasure { kind: MeasureKind::Hermite, k }
    }

    pub fn moments(moments: Vec<Q>, k: usize) -> Self {
        SelbergMeasure { kind: MeasureKind::Moments(moments), k }
    }

    /// `int x^m w(x) dx`.
    pub fn one_dim_moment(&self, m: usize) -> Result<ExactScalar> {
        let mq = q(m as i64);
        match &self.kind {
            MeasureKind::Jacobi { a, b } => gamma_exact(&(a + &mq))?
                .mul(&gamma_exact(b)?)
                .checked_div(&gamma_exact(&(a + b + &mq))?),
            MeasureKind::Laguerre { a } => gamma_exact(&(a + &mq)),
            MeasureKind::Hermite => {
                if m % 2 == 1 {
                    Ok(ExactScalar::zero())
                } else {
                    gamma_exact(&qf(m as i64 + 1, 2))
                }
            }
            MeasureKind::Moments(v) => v
                .get(m)
                .map(|x| ExactScalar::rational(x.clone()))
                .ok_or(Error::InsufficientMoments { needed: m, available: v.len() }),
        }
    }

    /// Moments `0..len` with the common power of pi split off.
    pub fn rational_moments(&self, len: usize) -> Result<(Vec<Q>, u32)> {
        let xs = (0..len)
            .map(|m| self.one_dim_moment(m))
            .collect::<Result<Vec<_>>>()?;
        factor_pi(&xs)
    }
}

/// Rational polynomial times `pi^{m/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiPoly {
    pub poly: MultiPoly,
    pub pi_half_power: u32,
}

impl PiPoly {
    pub fn new(poly: MultiPoly, pi_half_power: u32) -> Self {
        let pi_half_power = if poly.is_zero() { 0 } else { pi_half_power };
        PiPoly { poly, pi_half_power }
    }

    pub fn scale(&self, s: &ExactScalar) -> PiPoly {
        PiPoly::new(self.poly.scale(s.coeff()), self.pi_half_power + s.pi_half_power())
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_half_power {
            0 => write!(f, "{}", self.poly),
            p => write!(f, "pi^({p}/2)*({})", self.poly),
        }
    }
}

/// `int x^e Delta^{2k} prod w` for an exponent vector, via a table of rational moments.
pub(crate) fn monomial_integral(delta_pow: &MultiPoly, mu: &[Q], e: &[u32]) -> Result<Q> {
    let mut acc = q(0);
    for (t, c) in delta_pow.terms() {
        let mut term = c.clone();
        for (ti, ei) in t.iter().zip(e) {
            let idx = (ti + ei) as usize;
            let m = mu
                .get(idx)
                .ok_or(Error::InsufficientMoments { needed: idx, available: mu.len() })?;
            if m.is_zero() {
                term = q(0);
                break;
            }
            term *= m;
        }
        acc += term;
    }
    Ok(acc)
}

/// `int x^e Delta^{2k} prod w` as an exact scalar, in `e.len()` variables.
pub fn measure_moment(m: &SelbergMeasure, e: &[u32]) -> Result<ExactScalar> {
    let r = e.len();
    let delta = super::expand::vandermonde_power_poly(r, m.k);
    let top = e.iter().copied().max().unwrap_or(0) as usize + 2 * m.k * r.saturating_sub(1) + 1;
    let (mu, p) = m.rational_moments(top)?;
    Ok(ExactScalar::new(monomial_integral(&delta, &mu, e)?, p * r as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_moments() {
        let j = SelbergMeasure::jacobi(q(1), q(1), 0).unwrap();
        assert_eq!(measure_moment(&j, &[0]).unwrap(), ExactScalar::one());
        let h = SelbergMeasure::hermite(0);
        assert_eq!(measure_moment(&h, &[2]).unwrap(), ExactScalar::new(qf(1, 2), 1));
        assert!(measure_moment(&h, &[3]).unwrap().is_zero());
        let j1 = SelbergMeasure::jacobi(q(1), q(1), 1).unwrap();
        assert_eq!(measure_moment(&j1, &[0, 0]).unwrap(), ExactScalar::rational(qf(1, 6)));
    }

    #[test]
    fn validation() {
        assert!(SelbergMeasure::jacobi(q(0), q(1), 1).is_err());
        assert!(SelbergMeasure::jacobi(qf(1, 3), q(1), 1).is_err());
        assert!(SelbergMeasure::laguerre(qf(3, 2), 1).is_ok());
    }
}
