use std::collections::BTreeMap;

use super::expansion::{Basis, SymExpansion};
use super::partition::Partition;
use crate::exact::{factorial, q, MultiPoly, Q};
use crate::hyperdet::permutations;
use crate::{Error, Result};

/// Laurent polynomial in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, Q>,
}

impl LaurentPoly {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Vec<i64>, Q)>) -> Result<Self> {
        let mut out = LaurentPoly { n, terms: BTreeMap::new() };
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Domain(format!("exponent vector of length {} in {n} variables", e.len())));
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Vec<i64>, c: Q) {
        let slot = self.terms.entry(e).or_insert_with(|| q(0));
        *slot += c;
        if *slot == q(0) {
            self.terms.retain(|_, v| *v != q(0));
        }
    }

    pub fn from_poly(p: &MultiPoly) -> Self {
        let terms = p
            .terms()
            .iter()
            .map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c.clone()));
        LaurentPoly::new(p.vars().len(), terms).expect("arity")
    }

    pub fn vars_count(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Q> {
        &self.terms
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        if self.n != other.n {
            return Err(Error::Domain("Laurent polynomials in different variable counts".into()));
        }
        let mut out = LaurentPoly { n: self.n, terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// `a_mu = sum_sigma sign(sigma) x^{sigma mu}`.
    pub fn alternant(mu: &[i64]) -> LaurentPoly {
        let n = mu.len();
        let terms = permutations(n).into_iter().map(|(p, odd)| {
            let mut e = vec![0i64; n];
            for (i, &j) in p.iter().enumerate() {
                e[j] = mu[i];
            }
            (e, if odd { q(-1) } else { q(1) })
        });
        LaurentPoly::new(n, terms).expect("arity")
    }

    /// `delta = (n-1, .., 1, 0)`, negated when `negative`.
    pub fn staircase_alternant(n: usize, negative: bool) -> LaurentPoly {
        let d: Vec<i64> = (0..n)
            .map(|i| {
                let v = (n - 1 - i) as i64;
                if negative {
                    -v
                } else {
                    v
                }
            })
            .collect();
        LaurentPoly::alternant(&d)
    }
}

fn stabilizer(v: &[i64]) -> Q {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_default() += 1;
    }
    counts.values().map(|&c| Q::from_integer(factorial(c))).product()
}

/// The linear map `m~_lambda -> h_lambda` for `lambda` in `N^n`, `0` otherwise,
/// where `m~_lambda` sums `x^{sigma lambda}` over all of `S_n`.
pub fn phi_map(f: &LaurentPoly) -> Result<SymExpansion> {
    let mut orbits: BTreeMap<Vec<i64>, (u64, Q)> = BTreeMap::new();
    for (e, c) in &f.terms {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let slot = orbits.entry(sorted).or_insert_with(|| (0, c.clone()));
        if slot.1 != *c {
            return Err(Error::Domain("phi needs a symmetric Laurent polynomial".into()));
        }
        slot.0 += 1;
    }
    let nfact = Q::from_integer(factorial(f.n as u64));
    let mut out = Vec::new();
    for (lam, (count, c)) in orbits {
        let stab = stabilizer(&lam);
        if q(count as i64) * &stab != nfact {
            return Err(Error::Domain("phi needs a symmetric Laurent polynomial".into()));
        }
        if lam.last().is_some_and(|&x| x < 0) {
            continue;
        }
        let parts: Vec<u32> = lam.iter().map(|&x| x as u32).collect();
        out.push((Partition::new(parts), c / stab));
    }
    SymExpansion::new(Basis::H, f.n, out)
}

/// `phi(f a_delta a_{-delta})` and `f` itself, both on the `h` basis.
pub fn phi_identity_check(f: &SymExpansion) -> Result<(SymExpansion, SymExpansion)> {
    let n = f.vars_count();
    let lp = LaurentPoly::from_poly(&f.to_poly()?);
    let prod = lp
        .mul(&LaurentPoly::staircase_alternant(n, false))?
        .mul(&LaurentPoly::staircase_alternant(n, true))?;
    Ok((phi_map(&prod)?, f.convert(Basis::H)?))
}
