use super::bruteforce::turanian_bruteforce;
use super::family::{TuranianFamily, TuranianSpec};
use crate::exact::{factorial, Ring, Q};
use crate::kaneko::vandermonde_power_poly;
use crate::{Error, Result};

/// `(sum_j d_j^2)^N Delta^{2k}` at the origin, `N = kn(n-1)/2`, three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianReport {
    /// Repeated differentiation of the expanded polynomial.
    pub direct: Q,
    /// `(-1)^N n! 4^N N! D_n^{(k)}` of the monic Hermite values.
    pub hermite_route: Q,
    /// `2^N N! prod_j (jk)! / k!^n`.
    pub product: Q,
}

impl LaplacianReport {
    pub fn all_agree(&self) -> bool {
        self.direct == self.hermite_route && self.direct == self.product
    }
}

pub fn laplacian_power_check(n: usize, k: usize) -> Result<LaplacianReport> {
    if n == 0 {
        return Err(Error::Domain("Laplacian check needs n >= 1".into()));
    }
    let big = k * n * (n - 1) / 2;
    let mut f = (*vandermonde_power_poly(n, k)).clone();
    for _ in 0..big {
        let mut lap = f.partial(0).partial(0);
        for i in 1..n {
            lap = lap.add_ref(&f.partial(i).partial(i));
        }
        f = lap;
    }
    let direct = f.coeff(&vec![0; n]);

    let fact = |m: usize| Q::from_integer(factorial(m as u64));
    let mut product = fact(big) * Q::from_integer(num_bigint::BigInt::from(1) << big);
    for j in 1..=n {
        product *= fact(j * k);
    }
    product /= Q::from_integer(factorial(k as u64).pow(n as u32));

    let d = turanian_bruteforce(&TuranianSpec::new(TuranianFamily::Hermite, n, k, 0)?)?;
    let d = d
        .as_constant()
        .ok_or_else(|| Error::Domain("Hermite Turanian depends on x".into()))?;
    let mut hermite_route =
        d * fact(n) * fact(big) * Q::from_integer(num_bigint::BigInt::from(1) << (2 * big));
    if big % 2 == 1 {
        hermite_route = -hermite_route;
    }
    Ok(LaplacianReport { direct, hermite_route, product })
}
