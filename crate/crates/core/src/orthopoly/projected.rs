use num_bigint::BigInt;

use super::family::MonicPolynomialFamily;
use super::functional::{monic_from_moments, MomentFunctional};
use crate::exact::{binomial, factorial, Poly, Ring, Q};
use crate::hyperdet::{det, hankel_fast, permutations, MomentSequence};
use crate::{Error, Result};

/// Matrix of `x^r` followed by projection onto `span(P_0..P_{n-1})`;
/// entry `(j, i)` is the coefficient of `P_j` in `x^r P_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectedMultiplication<R> {
    pub r: usize,
    pub n: usize,
    pub matrix: Vec<Vec<R>>,
}

impl<R: Ring> ProjectedMultiplication<R> {
    pub fn build(family: &MonicPolynomialFamily<R>, r: usize, n: usize) -> Result<Self> {
        let needed = (n + r).saturating_sub(1);
        if family.rec_a().len() < needed {
            return Err(Error::Domain(format!(
                "recurrence known to index {}, {} needed",
                family.rec_a().len(),
                needed
            )));
        }
        let (a, b) = (family.rec_a(), family.rec_b());
        let width = n + r;
        let mut matrix = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            let mut v = vec![R::zero(); width + 1];
            v[i] = R::one();
            for _ in 0..r {
                // x P_j = P_{j+1} + A_j P_j + B_j P_{j-1}
                let mut w = vec![R::zero(); width + 1];
                for (j, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    w[j + 1] = w[j + 1].add_ref(c);
                    w[j] = w[j].add_ref(&c.mul_ref(&a[j]));
                    if j > 0 {
                        w[j - 1] = w[j - 1].add_ref(&c.mul_ref(&b[j]));
                    }
                }
                v = w;
            }
            for j in 0..n {
                matrix[j][i] = v[j].clone();
            }
        }
        Ok(ProjectedMultiplication { r, n, matrix })
    }

    /// Entries vanish outside the band `|i - j| <= r`.
    pub fn is_banded(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| i.abs_diff(j) <= self.r || self.matrix[i][j].is_zero())
        })
    }
}

/// `det(X^{(r)}_n)`.
pub fn projected_mult_det<R: Ring>(
    family: &MonicPolynomialFamily<R>,
    r: usize,
    n: usize,
) -> Result<R> {
    if r == 0 {
        return Err(Error::Domain("projected multiplication needs r >= 1".into()));
    }
    Ok(det(&ProjectedMultiplication::build(family, r, n)?.matrix))
}

fn leibniz<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut acc = R::zero();
    for (p, odd) in permutations(n) {
        let mut t = R::one();
        for (i, &j) in p.iter().enumerate() {
            t = t.mul_ref(&m[i][j]);
            if t.is_zero() {
                break;
            }
        }
        acc = if odd { acc.sub_ref(&t) } else { acc.add_ref(&t) };
    }
    acc
}

/// `det(d^i p_j / dx^i)`, rows indexed by derivative order.
pub fn wronskian<R: Ring>(polys: &[Poly<R>]) -> Result<Poly<R>> {
    if polys.is_empty() {
        return Err(Error::Domain("empty Wronskian".into()));
    }
    let m: Vec<Vec<Poly<R>>> = (0..polys.len())
        .map(|i| polys.iter().map(|p| p.nth_derivative(i)).collect())
        .collect();
    Ok(leibniz(&m))
}

/// Wronskian evaluated at a point.
pub fn wronskian_at<R: Ring>(polys: &[Poly<R>], at: &R) -> Result<R> {
    if polys.is_empty() {
        return Err(Error::Domain("empty Wronskian".into()));
    }
    let m: Vec<Vec<R>> = (0..polys.len())
        .map(|i| polys.iter().map(|p| p.nth_derivative(i).eval(at)).collect())
        .collect();
    Ok(leibniz(&m))
}

/// `1! 2! .. (r-1)!`
pub fn superfactorial(r: usize) -> BigInt {
    (1..r).map(|i| factorial(i as u64)).product()
}

/// Both sides of the Wronskian formula for shifted Hankel determinants as
/// polynomials in `y`:
/// `(-1)^{nr} n! det(c_{r+i+j}(y))` with `c_m(y) = mu[(x-y)^m]`, and
/// `n! D_n^{(1)} W(P_n..P_{n+r-1})(y) / (1!..(r-1)!)`.
pub fn karlin_szego_check<R: Ring>(
    mu: &MomentFunctional<R>,
    n: usize,
    r: usize,
) -> Result<(Poly<R>, Poly<R>)> {
    let c = mu.moments();
    let top = 2 * (n - 1) + r;
    if top >= c.len() || 2 * (n + r) > c.len() {
        return Err(Error::InsufficientMoments {
            needed: top.max(2 * (n + r)),
            available: c.len(),
        });
    }
    // c_m(y) = sum_l binom(m,l) c_l (-y)^{m-l}
    let shifted: Vec<Poly<R>> = (0..=top)
        .map(|m| {
            let coeffs: Vec<R> = (0..=m)
                .map(|d| {
                    // coefficient of y^d: binom(m,d) (-1)^d c_{m-d}
                    let b = R::from_bigint(&binomial(m as u64, d as u64));
                    let t = b.mul_ref(&c[m - d]);
                    if d % 2 == 1 {
                        t.neg_ref()
                    } else {
                        t
                    }
                })
                .collect();
            Poly::new("y", coeffs)
        })
        .collect();
    let nfact = R::from_bigint(&factorial(n as u64));
    let hank = hankel_fast(&MomentSequence::new(shifted), n, 1, r)?;
    let mut lhs = hank.map_coeffs(|v| v.mul_ref(&nfact));
    if (n * r) % 2 == 1 {
        lhs = lhs.neg_ref();
    }
    let fam = monic_from_moments(mu, n + r)?;
    let d = hankel_fast(&MomentSequence::new(c.to_vec()), n, 1, 0)?;
    let w = if r == 0 {
        Poly::new("y", vec![R::one()])
    } else {
        let ps: Vec<Poly<R>> = (n..n + r).map(|j| fam.poly(j).clone().with_var("y")).collect();
        wronskian(&ps)?.with_var("y")
    };
    let scale = Q::new(BigInt::from(1), superfactorial(r));
    let factor = nfact.mul_ref(&d);
    let rhs = w.map_coeffs(|v| v.mul_ref(&factor).scale(&scale)).with_var("y");
    Ok((lhs.with_var("y"), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, UniPoly};
    use crate::orthopoly::bell::bell_polys;

    #[test]
    fn simple_wronskians() {
        let one = UniPoly::from_ints("x", &[1]);
        assert_eq!(wronskian(&[one]).unwrap(), UniPoly::from_ints("x", &[1]));
        let x = UniPoly::from_ints("x", &[0, 1]);
        let x2 = UniPoly::from_ints("x", &[0, 0, 1]);
        assert_eq!(wronskian(&[x, x2]).unwrap(), UniPoly::from_ints("x", &[0, 0, 1]));
    }

    #[test]
    fn charlier_wronskian_at_zero() {
        let mu = MomentFunctional::new(bell_polys(12));
        let f = monic_from_moments(&mu, 4).unwrap();
        let w = wronskian_at(&[f.poly(3).clone(), f.poly(4).clone()], &UniPoly::zero()).unwrap();
        assert_eq!(w, UniPoly::from_ints("a", &[0, 0, 0, 6, 6, 3, 1]));
    }

    #[test]
    fn ks_reduced_cases() {
        let mu = MomentFunctional::new((0..10u64).map(|i| crate::exact::factorial_q(i) + q(1)).collect::<Vec<Q>>());
        for (n, r) in [(1, 0), (1, 1), (2, 1), (2, 2)] {
            let (l, r_) = karlin_szego_check(&mu, n, r).unwrap();
            assert_eq!(l, r_, "n={n} r={r}");
        }
    }
}
