use std::fmt;
use std::sync::Arc;

use super::ring::{fmt_q, Ring, Q};
use super::scalar::ExactScalar;
use crate::Result;

/// Dense univariate polynomial over a ring `R` in a named indeterminate.
///
/// Constants may carry an empty name and then combine with any variable.
#[derive(Clone, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
    var: Arc<str>,
}

pub type UniPoly = Poly<Q>;

impl<R: Ring> Poly<R> {
    pub fn new(var: &str, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            var: Arc::from(var),
        }
    }

    pub fn var(name: &str) -> Self {
        Self::new(name, vec![R::zero(), R::one()])
    }

    pub fn constant(c: R) -> Self {
        Self::new("", vec![c])
    }

    pub fn monomial(var: &str, c: R, deg: usize) -> Self {
        let mut v = vec![R::zero(); deg + 1];
        v[deg] = c;
        Self::new(var, v)
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, name: &str) -> Self {
        self.var = Arc::from(name);
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    fn join_var(&self, other: &Self) -> Arc<str> {
        if self.var.is_empty() {
            return other.var.clone();
        }
        if other.var.is_empty() || self.var == other.var {
            return self.var.clone();
        }
        // named constants combine freely; true polynomials must agree
        match (self.degree().unwrap_or(0), other.degree().unwrap_or(0)) {
            (0, _) => other.var.clone(),
            (_, 0) => self.var.clone(),
            _ => panic!(
                "polynomials in different indeterminates: {} and {}",
                self.var, other.var
            ),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_ref(&R::from_int(i as i64)))
            .collect();
        Poly::new(&self.var, coeffs)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// Evaluation at a polynomial, i.e. composition `self(p)`.
    pub fn compose(&self, p: &Poly<R>) -> Poly<R> {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            acc.mul_ref(p).add_ref(&Poly::constant(c.clone()))
        })
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(&self.var, self.coeffs.iter().map(f).collect())
    }

    /// Long division, exact coefficient division required at every step.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let var = self.join_var(d);
        if rem.len() <= dd {
            return Some((Poly::new(&var, vec![]), Poly::new(&var, rem)));
        }
        let mut quo = vec![R::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = rem[i + dd].try_div(&lead)?;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(dc));
            }
            quo[i] = c;
        }
        Some((Poly::new(&var, quo), Poly::new(&var, rem)))
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs != other.coeffs {
            return false;
        }
        self.degree().unwrap_or(0) == 0
            || self.var == other.var
            || self.var.is_empty()
            || other.var.is_empty()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::new("", vec![])
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let var = self.join_var(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => R::zero(),
            })
            .collect();
        Poly::new(&var, coeffs)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let var = self.join_var(other);
        if self.is_zero() || other.is_zero() {
            return Poly::new(&var, vec![]);
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(&var, out)
    }
    fn neg_ref(&self) -> Self {
        Poly::new(&self.var, self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }
    fn from_rational(q: &Q) -> Self {
        Poly::constant(R::from_rational(q))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        let (quo, rem) = self.div_rem(other)?;
        rem.is_zero().then_some(quo)
    }
    fn scale(&self, q: &Q) -> Self {
        Poly::new(&self.var, self.coeffs.iter().map(|c| c.scale(q)).collect())
    }
}

impl UniPoly {
    pub fn from_ints(var: &str, coeffs: &[i64]) -> Self {
        Poly::new(var, coeffs.iter().map(|&c| Q::from_int(c)).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = if self.var.is_empty() { "x" } else { &self.var };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let s = fmt_q(c);
            if !first {
                write!(f, " {} ", if s.starts_with('-') { '-' } else { '+' })?;
            } else if s.starts_with('-') {
                write!(f, "-")?;
            }
            first = false;
            let s = s.trim_start_matches('-');
            match i {
                0 => write!(f, "{s}")?,
                _ => {
                    if s != "1" {
                        write!(f, "{s}*")?;
                    }
                    write!(f, "{var}")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Formal derivative.
pub fn poly_derivative(p: &UniPoly) -> UniPoly {
    p.derivative()
}

/// Horner evaluation at an exact scalar; fails only if pi powers would mix.
pub fn poly_eval(p: &UniPoly, x: &ExactScalar) -> Result<ExactScalar> {
    let mut acc = ExactScalar::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).checked_add(&ExactScalar::rational(c.clone()))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{q, qf};

    #[test]
    fn derivative_and_eval() {
        let p = Poly::new("x", vec![qf(-1, 2), q(0), q(1)]);
        assert_eq!(poly_derivative(&p), UniPoly::from_ints("x", &[0, 2]));
        let r = UniPoly::from_ints("x", &[0, -1, 1]);
        assert_eq!(poly_eval(&r, &ExactScalar::int(3)).unwrap(), ExactScalar::int(6));
        assert!(UniPoly::from_ints("x", &[5]).derivative().is_zero());
    }

    #[test]
    fn eval_mixing_pi_is_an_error() {
        let r = UniPoly::from_ints("x", &[1, 1]);
        assert!(poly_eval(&r, &ExactScalar::pi_power(1)).is_err());
        let m = UniPoly::from_ints("x", &[0, 0, 3]);
        assert_eq!(
            poly_eval(&m, &ExactScalar::pi_power(1)).unwrap(),
            ExactScalar::new(q(3), 2)
        );
    }

    #[test]
    fn exact_division() {
        let a = UniPoly::from_ints("x", &[-1, 0, 1]);
        let b = UniPoly::from_ints("x", &[1, 1]);
        assert_eq!(a.try_div(&b).unwrap(), UniPoly::from_ints("x", &[-1, 1]));
        assert!(b.try_div(&a).is_none());
        assert!(a.try_div(&UniPoly::from_ints("x", &[2, 1])).is_none());
    }

    #[test]
    fn display() {
        let p = UniPoly::from_ints("a", &[0, 1, 6]);
        assert_eq!(p.to_string(), "6*a^2 + a");
    }
}
