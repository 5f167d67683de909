use std::collections::HashMap;

use super::tensor::{MomentSequence, SkewMatrix};
use crate::exact::Ring;
use crate::orthopoly::{self, MomentFunctional, MonicPolynomialFamily};
use crate::{Error, Result};

/// Pfaffian by expansion along the first remaining row, memoized on the index set.
pub fn pfaffian<R: Ring>(m: &SkewMatrix<R>) -> Result<R> {
    let n = m.size();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    if n > 64 {
        return Err(Error::Unsupported(format!("pfaffian of size {n}")));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(pf_rec(m, full, &mut memo))
}

fn pf_rec<R: Ring>(m: &SkewMatrix<R>, set: u64, memo: &mut HashMap<u64, R>) -> R {
    if set == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = R::zero();
    let mut odd = false;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let e = m.get(i, j);
        if !e.is_zero() {
            let sub = pf_rec(m, rest & !(1u64 << j), memo);
            let t = e.mul_ref(&sub);
            acc = if odd { acc.sub_ref(&t) } else { acc.add_ref(&t) };
        }
        odd = !odd;
    }
    memo.insert(set, acc.clone());
    acc
}

/// `D_{n;r}^{(2)}` as the Pfaffian of the derivative Gram matrix of `2n`
/// monic orthogonal polynomials.
pub fn det4_via_pfaffian<R: Ring>(
    mu: &MomentSequence<R>,
    family: &MonicPolynomialFamily<R>,
    n: usize,
    r: usize,
) -> Result<R> {
    let f = MomentFunctional::new(mu.moments().to_vec());
    orthopoly::check_orthogonal(&f, family, 2 * n)?;
    let m = orthopoly::pprime_gram(&f, family, r, 2 * n)?;
    pfaffian(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial_q, q, Q};
    use crate::hyperdet::kernels::det;

    #[test]
    fn two_by_two() {
        let m = SkewMatrix::from_upper(2, |_, _| q(5));
        assert_eq!(pfaffian(&m).unwrap(), q(5));
        assert_eq!(pfaffian(&SkewMatrix::<Q>::from_upper(0, |_, _| q(0))).unwrap(), q(1));
        assert_eq!(
            pfaffian(&SkewMatrix::from_upper(3, |_, _| q(1))),
            Err(Error::OddSize(3))
        );
    }

    #[test]
    fn factorial_four_by_four() {
        let m = SkewMatrix::from_upper(4, |i, j| {
            let s = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
            s * factorial_q(i as u64) * factorial_q(j as u64)
        });
        assert_eq!(pfaffian(&m).unwrap(), q(12));
        assert_eq!(det(&m.to_dense()), q(144));
    }
}
