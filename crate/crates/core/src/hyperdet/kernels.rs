use std::collections::BTreeMap;

use rayon::prelude::*;

use super::tensor::{HyperTensor, MomentSequence};
use crate::exact::{ExactScalar, Ring, Q};
use crate::{Error, Result};

/// All permutations of `0..n` with their parity (`true` = odd).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permute(&mut p, 0, false, &mut out);
    out
}

fn permute(p: &mut Vec<usize>, start: usize, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
    if start + 1 >= p.len() {
        out.push((p.clone(), odd));
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, odd ^ (i != start), out);
        p.swap(start, i);
    }
}

/// `sum over sigma_1..sigma_{d-1}` of the sign product times
/// `prod_i A[i, sigma_1(i), .., sigma_{d-1}(i)]`.
fn alternating_sum<R: Ring>(a: &HyperTensor<R>) -> R {
    let n = a.dim();
    let d = a.order();
    if d == 1 {
        return crate::exact::ring_product(a.entries().iter().cloned());
    }
    let perms = permutations(n);
    let free = d - 1;
    // stride[t] for slot t+1
    let strides: Vec<usize> = (0..free).map(|t| n.pow((free - 1 - t) as u32)).collect();
    let row_stride = n.pow(free as u32);
    let entries = a.entries();

    let partial = |first: usize| -> R {
        let mut acc = R::zero();
        let mut odo = vec![0usize; free];
        odo[0] = first;
        loop {
            let mut odd = false;
            for &p in &odo {
                odd ^= perms[p].1;
            }
            let mut prod = R::one();
            let mut zero = false;
            for i in 0..n {
                let mut flat = i * row_stride;
                for (t, &p) in odo.iter().enumerate() {
                    flat += perms[p].0[i] * strides[t];
                }
                let e = &entries[flat];
                if e.is_zero() {
                    zero = true;
                    break;
                }
                prod = prod.mul_ref(e);
            }
            if !zero {
                acc = if odd { acc.sub_ref(&prod) } else { acc.add_ref(&prod) };
            }
            // advance slots 1.. (slot 0 fixed to `first`)
            let mut t = free - 1;
            loop {
                if t == 0 {
                    return acc;
                }
                odo[t] += 1;
                if odo[t] < perms.len() {
                    break;
                }
                odo[t] = 0;
                t -= 1;
            }
        }
    };

    let parts: Vec<R> = (0..perms.len()).into_par_iter().map(partial).collect();
    crate::exact::ring_sum(parts)
}

/// `Det_{2k}(A)`, computed with the first permutation fixed to the identity.
pub fn det_even<R: Ring>(a: &HyperTensor<R>, k: usize) -> Result<R> {
    if k == 0 || a.order() != 2 * k {
        return Err(Error::OrderMismatch {
            expected: format!("{}", 2 * k),
            got: a.order(),
        });
    }
    Ok(alternating_sum(a))
}

/// `Det_+(A)` for odd order: the first index is never permuted.
pub fn det_plus<R: Ring>(a: &HyperTensor<R>) -> Result<R> {
    if a.order() < 3 || a.order() % 2 == 0 {
        return Err(Error::OrderMismatch {
            expected: "odd order >= 3".into(),
            got: a.order(),
        });
    }
    Ok(alternating_sum(a))
}

/// `Det_{2k}` of the Toeplitz tensor `T = f(i_1+..+i_k - j_1-..-j_k)`.
pub fn toeplitz_det<R: Ring>(f: &BTreeMap<i64, R>, n: usize, k: usize) -> Result<R> {
    if k == 0 || n == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    let span = (k * (n - 1)) as i64;
    for d in -span..=span {
        if !f.contains_key(&d) {
            return Err(Error::MissingOffset(d));
        }
    }
    let t = HyperTensor::from_fn(2 * k, n, |idx| {
        let up: i64 = idx[..k].iter().map(|&x| x as i64).sum();
        let down: i64 = idx[k..].iter().map(|&x| x as i64).sum();
        f[&(up - down)].clone()
    })?;
    det_even(&t, k)
}

/// Splits off a common power of pi from exact scalars.
pub fn factor_pi(xs: &[ExactScalar]) -> Result<(Vec<Q>, u32)> {
    let mut power: Option<u32> = None;
    for x in xs.iter().filter(|x| !x.is_zero()) {
        match power {
            None => power = Some(x.pi_half_power()),
            Some(p) if p != x.pi_half_power() => {
                return Err(Error::PiPowerMismatch(p, x.pi_half_power()))
            }
            _ => {}
        }
    }
    Ok((
        xs.iter().map(|x| x.coeff().clone()).collect(),
        power.unwrap_or(0),
    ))
}

/// [`det_even`] over exact scalars; entries must share one power of pi.
pub fn det_even_exact(a: &HyperTensor<ExactScalar>, k: usize) -> Result<ExactScalar> {
    let (qs, p) = factor_pi(a.entries())?;
    let t = HyperTensor::new(a.order(), a.dim(), qs)?;
    let v = det_even(&t, k)?;
    Ok(ExactScalar::new(v, p * a.dim() as u32))
}

/// [`det_plus`] over exact scalars.
pub fn det_plus_exact(a: &HyperTensor<ExactScalar>) -> Result<ExactScalar> {
    let (qs, p) = factor_pi(a.entries())?;
    let t = HyperTensor::new(a.order(), a.dim(), qs)?;
    let v = det_plus(&t)?;
    Ok(ExactScalar::new(v, p * a.dim() as u32))
}

/// Exact-scalar moments as rationals plus the common pi power.
pub fn factor_pi_moments(c: &MomentSequence<ExactScalar>) -> Result<(MomentSequence<Q>, u32)> {
    let (qs, p) = factor_pi(c.moments())?;
    Ok((MomentSequence::new(qs), p))
}

/// Fraction-free (Bareiss) determinant over an integral domain.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = R::one();
    for col in 0..n {
        if a[col][col].is_zero() {
            match (col + 1..n).find(|&r| !a[r][col].is_zero()) {
                Some(r) => {
                    a.swap(col, r);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in col + 1..n {
            for j in col + 1..n {
                let v = a[i][j]
                    .mul_ref(&a[col][col])
                    .sub_ref(&a[i][col].mul_ref(&a[col][j]));
                a[i][j] = v
                    .try_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
        }
        prev = a[col][col].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        d.neg_ref()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial_q, q, UniPoly};

    fn hankel_q(c: &[i64], order: usize, n: usize) -> HyperTensor<Q> {
        let seq = MomentSequence::new(c.iter().map(|&x| q(x)).collect());
        HyperTensor::hankel(&seq, order, n, 0).unwrap()
    }

    #[test]
    fn permutation_parity() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.iter().filter(|p| p.1).count(), 3);
    }

    #[test]
    fn det2_small() {
        assert_eq!(det_even(&hankel_q(&[1, 1, 2], 2, 2), 1).unwrap(), q(1));
        assert_eq!(det_even(&hankel_q(&[1, 1, 2, 6, 24], 4, 2), 2).unwrap(), q(12));
    }

    #[test]
    fn det4_bell_n2() {
        let a = UniPoly::var("a");
        let b: Vec<UniPoly> = [
            vec![1],
            vec![0, 1],
            vec![0, 1, 1],
            vec![0, 1, 3, 1],
            vec![0, 1, 7, 6, 1],
        ]
        .iter()
        .map(|c| UniPoly::from_ints("a", c))
        .collect();
        let t = HyperTensor::hankel(&MomentSequence::new(b), 4, 2, 0).unwrap();
        let v = det_even(&t, 2).unwrap();
        assert_eq!(v, a.add_ref(&a.pow(2).scale(&q(6))));
    }

    #[test]
    fn order_mismatch() {
        let t = hankel_q(&[1, 1, 2, 6, 24], 3, 2);
        assert!(det_even(&t, 1).is_err());
        assert!(det_plus(&hankel_q(&[1, 1, 2, 6, 24], 4, 2)).is_err());
    }

    #[test]
    fn plus_with_zero_pattern_is_n_factorial_times_det() {
        let c: Vec<Q> = (0..12).map(|i| Q::new(1.into(), (i + 1).into())).collect();
        let seq = MomentSequence::new(c);
        let p = HyperTensor::pseudo_hankel(&seq, 1, &[0, 0]).unwrap();
        assert_eq!(det_plus(&p).unwrap(), Q::new(1.into(), 6.into()));
        let p = HyperTensor::pseudo_hankel(&seq, 1, &[1, 0]).unwrap();
        assert_eq!(det_plus(&p).unwrap(), Q::new(1.into(), 12.into()));
        let p = HyperTensor::pseudo_hankel(&seq, 2, &[3]).unwrap();
        assert_eq!(det_plus(&p).unwrap(), Q::new(1.into(), 4.into()));
    }

    #[test]
    fn toeplitz_small() {
        let f: BTreeMap<i64, Q> = [(-1, q(2)), (0, q(3)), (1, q(5))].into_iter().collect();
        assert_eq!(toeplitz_det(&f, 2, 1).unwrap(), q(9 - 10));
        let g: BTreeMap<i64, Q> = [(0, q(7))].into_iter().collect();
        assert_eq!(toeplitz_det(&g, 1, 3).unwrap(), q(7));
        assert_eq!(toeplitz_det(&g, 2, 1), Err(Error::MissingOffset(-1)));
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let m: Vec<Vec<Q>> = (0..4)
            .map(|i| (0..4).map(|j| factorial_q((i + j) as u64)).collect())
            .collect();
        let t = HyperTensor::new(2, 4, m.iter().flatten().cloned().collect()).unwrap();
        assert_eq!(det(&m), det_even(&t, 1).unwrap());
        assert_eq!(det(&m), q(144));
    }

    #[test]
    fn exact_scalar_pi_factoring() {
        let c: Vec<ExactScalar> = vec![
            ExactScalar::pi_power(1),
            ExactScalar::zero(),
            ExactScalar::new(Q::new(1.into(), 2.into()), 1),
        ];
        let t = HyperTensor::hankel(&MomentSequence::new(c), 2, 2, 0).unwrap();
        let v = det_even_exact(&t, 1).unwrap();
        assert_eq!(v, ExactScalar::new(Q::new(1.into(), 2.into()), 2));
        let bad = vec![ExactScalar::one(), ExactScalar::pi_power(1), ExactScalar::one()];
        let t = HyperTensor::hankel(&MomentSequence::new(bad), 2, 2, 0).unwrap();
        assert!(det_even_exact(&t, 1).is_err());
    }
}
