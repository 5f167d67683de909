use crate::exact::{binomial, q, Poly, Ring, UniPoly, Q};
use crate::{Error, Result};

/// Alternating convolutions that evaluate through `D_2^{(k)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UbiquitousCase {
    /// `1/2 sum_j (-1)^j binom(m,j) U_j U_{m-j}` in `x`.
    ChebyshevU { m: usize },
    /// `1/2 sum_j (-1)^j binom(2k,j) f_j f_{2k-j}` with `f_0 = f_1 = 1`.
    Fibonacci { k: usize },
}

/// Left side, the stated right side and the right side obtained from
/// `D_2^{(k)}(U) = -[4(x^2-1)]^{k-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct UbiquitousReport {
    pub lhs: UniPoly,
    pub printed: UniPoly,
    pub derived: UniPoly,
}

fn chebyshev_u(len: usize) -> Vec<UniPoly> {
    let x2 = UniPoly::from_ints("x", &[0, 2]);
    let mut u = vec![UniPoly::from_ints("x", &[1]), x2.clone()];
    while u.len() < len {
        let l = u.len();
        let next = x2.mul_ref(&u[l - 1]).sub_ref(&u[l - 2]);
        u.push(next.with_var("x"));
    }
    u.truncate(len);
    u
}

fn alternating_half<R: Ring>(c: &[R], m: usize) -> R {
    let mut acc = R::zero();
    for j in 0..=m {
        let t = c[j].mul_ref(&c[m - j]).mul_ref(&R::from_bigint(&binomial(m as u64, j as u64)));
        acc = if j % 2 == 1 { acc.sub_ref(&t) } else { acc.add_ref(&t) };
    }
    acc.scale(&(q(1) / q(2)))
}

pub fn ubiquitous_identities(case: UbiquitousCase) -> Result<UbiquitousReport> {
    match case {
        UbiquitousCase::ChebyshevU { m } => {
            let lhs = alternating_half(&chebyshev_u(m + 1), m).with_var("x");
            if m % 2 == 1 {
                let z = UniPoly::zero().with_var("x");
                return Ok(UbiquitousReport { lhs, printed: z.clone(), derived: z });
            }
            if m == 0 {
                return Err(Error::Domain("even order m >= 2 needed (exponent m/2 - 1)".into()));
            }
            let e = (m / 2 - 1) as u32;
            let printed = UniPoly::from_ints("x", &[4, 0, -4]).pow(e).with_var("x");
            let derived = UniPoly::from_ints("x", &[-4, 0, 4]).pow(e).neg_ref().with_var("x");
            Ok(UbiquitousReport { lhs, printed, derived })
        }
        UbiquitousCase::Fibonacci { k } => {
            if k == 0 {
                return Err(Error::Domain("Fibonacci identity needs k >= 1".into()));
            }
            let mut f: Vec<Q> = vec![q(1), q(1)];
            while f.len() < 2 * k + 1 {
                let l = f.len();
                f.push(&f[l - 1] + &f[l - 2]);
            }
            let lhs = Poly::new("x", vec![alternating_half(&f, 2 * k)]);
            let five = num_traits::pow::Pow::pow(&q(5), (k - 1) as u32);
            let rhs = Poly::new("x", vec![five]);
            Ok(UbiquitousReport { lhs, printed: rhs.clone(), derived: rhs })
        }
    }
}
