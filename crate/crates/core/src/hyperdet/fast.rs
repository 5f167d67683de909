use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::kernels::factor_pi_moments;
use super::tensor::MomentSequence;
use crate::exact::{binomial, factorial, ExactScalar, Ring, Q};
use crate::{Error, Result};

/// One summand of the triangular-matrix expansion: exponents `alpha(M)`
/// (unshifted, in row order) and the integer weight `(-1)^|M| prod binom(2k, m_ij)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelTerm {
    pub alpha: Vec<usize>,
    pub weight: i64,
}

/// Lower-triangle slots `(p, q)`, `p > q`, in row-major order.
fn slots(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for p in 1..n {
        for q in 0..p {
            v.push((p, q));
        }
    }
    v
}

/// `alpha_p = 2k p + sum_{i>p} m_{ip} - sum_{j<p} m_{pj}` (0-based rows).
fn alpha_of(n: usize, k: usize, slots: &[(usize, usize)], m: &[usize], out: &mut [usize]) {
    for (p, a) in out.iter_mut().enumerate().take(n) {
        *a = 2 * k * p;
    }
    for (s, &(p, q)) in slots.iter().enumerate() {
        // m_{pq} with p > q: adds to alpha_q, subtracts from alpha_p
        out[q] += m[s];
        out[p] -= m[s];
    }
}

/// Every summand, one per strictly lower triangular `M`, in odometer order.
pub fn hankel_terms(n: usize, k: usize) -> Vec<HankelTerm> {
    let sl = slots(n);
    let binom: Vec<i64> = (0..=2 * k as u64)
        .map(|j| i64::try_from(binomial(2 * k as u64, j)).unwrap())
        .collect();
    let mut m = vec![0usize; sl.len()];
    let mut out = Vec::new();
    let mut alpha = vec![0usize; n];
    loop {
        alpha_of(n, k, &sl, &m, &mut alpha);
        let total: usize = m.iter().sum();
        let w: i64 = m.iter().map(|&x| binom[x]).product();
        out.push(HankelTerm {
            alpha: alpha.clone(),
            weight: if total % 2 == 1 { -w } else { w },
        });
        if !advance(&mut m, 2 * k, 0) {
            return out;
        }
    }
}

/// Odometer step over slots `from..`, last slot fastest; false when exhausted.
fn advance(m: &mut [usize], max: usize, from: usize) -> bool {
    let mut t = m.len();
    while t > from {
        t -= 1;
        m[t] += 1;
        if m[t] <= max {
            return true;
        }
        m[t] = 0;
    }
    false
}

fn encode(sorted: &[usize], base: u128) -> u128 {
    sorted.iter().fold(0u128, |acc, &a| acc * base + a as u128)
}

fn decode(mut key: u128, n: usize, base: u128) -> Vec<usize> {
    let mut v = vec![0usize; n];
    for slot in v.iter_mut().rev() {
        *slot = (key % base) as usize;
        key /= base;
    }
    v
}

/// Aggregated weights by the multiset of exponents, sorted by key.
pub fn hankel_weights(n: usize, k: usize) -> Result<Vec<(Vec<usize>, BigInt)>> {
    if n <= 1 {
        return Ok(vec![(vec![0; n], BigInt::from(1))]);
    }
    let base = (2 * k * (n - 1) + 1) as u128;
    if (n as f64) * (base as f64).log2() >= 126.0 {
        return Err(Error::Unsupported(format!("hankel_fast with n={n}, k={k}")));
    }
    let sl = slots(n);
    let binom: Vec<i128> = (0..=2 * k as u64)
        .map(|j| i128::try_from(binomial(2 * k as u64, j)).unwrap())
        .collect();
    // split the enumeration on a prefix of slots
    let width = 2 * k + 1;
    let mut prefix_len = 0;
    let mut tasks = 1usize;
    while prefix_len < sl.len() && tasks < 256 {
        prefix_len += 1;
        tasks *= width;
    }
    let parts: Vec<HashMap<u128, i128>> = (0..tasks)
        .into_par_iter()
        .map(|task| {
            let mut m = vec![0usize; sl.len()];
            let mut t = task;
            for slot in (0..prefix_len).rev() {
                m[slot] = t % width;
                t /= width;
            }
            let mut local: HashMap<u128, i128> = HashMap::new();
            let mut alpha = vec![0usize; n];
            loop {
                alpha_of(n, k, &sl, &m, &mut alpha);
                alpha.sort_unstable();
                let mut w: i128 = 1;
                let mut total = 0usize;
                for &x in &m {
                    w *= binom[x];
                    total += x;
                }
                if total % 2 == 1 {
                    w = -w;
                }
                *local.entry(encode(&alpha, base)).or_insert(0) += w;
                if !advance(&mut m, 2 * k, prefix_len) {
                    return local;
                }
            }
        })
        .collect();
    let mut merged: HashMap<u128, i128> = HashMap::new();
    for part in parts {
        for (key, w) in part {
            *merged.entry(key).or_insert(0) += w;
        }
    }
    let mut v: Vec<(u128, i128)> = merged.into_iter().filter(|(_, w)| *w != 0).collect();
    v.sort_unstable();
    Ok(v
        .into_iter()
        .map(|(key, w)| (decode(key, n, base), BigInt::from(w)))
        .collect())
}

/// `D_{n;r}^{(k)}(c)` by the triangular-matrix expansion.
pub fn hankel_fast<R: Ring>(c: &MomentSequence<R>, n: usize, k: usize, r: usize) -> Result<R> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    c.check_len(2 * k * (n - 1) + r)?;
    if n == 1 {
        return Ok(c.get(r).clone());
    }
    let weights = hankel_weights(n, k)?;
    let mut acc = R::zero();
    for (alpha, w) in &weights {
        let mut prod = R::from_bigint(w);
        for &a in alpha {
            prod = prod.mul_ref(c.get(a + r));
        }
        acc = acc.add_ref(&prod);
    }
    Ok(acc.scale(&Q::new(BigInt::from(1), factorial(n as u64))))
}

/// Sums raw terms in the given order (no aggregation), for order-independence checks.
pub fn hankel_from_terms<R: Ring>(
    c: &MomentSequence<R>,
    terms: &[HankelTerm],
    n: usize,
    r: usize,
) -> R {
    let mut acc = R::zero();
    for t in terms {
        let mut prod = R::from_int(t.weight);
        for &a in &t.alpha {
            prod = prod.mul_ref(c.get(a + r));
        }
        acc = acc.add_ref(&prod);
    }
    acc.scale(&Q::new(BigInt::from(1), factorial(n as u64)))
}

/// [`hankel_fast`] over exact scalars sharing one power of pi.
pub fn hankel_fast_exact(
    c: &MomentSequence<ExactScalar>,
    n: usize,
    k: usize,
    r: usize,
) -> Result<ExactScalar> {
    let (qs, p) = factor_pi_moments(c)?;
    let v = hankel_fast(&qs, n, k, r)?;
    Ok(ExactScalar::new(v, p * n as u32))
}
