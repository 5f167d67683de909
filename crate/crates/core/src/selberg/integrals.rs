use crate::exact::{gamma_exact, q, ExactScalar, Q};
use crate::{Error, Result};

/// Parameters of `S_n(a, b, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelbergParams {
    pub n: usize,
    pub a: Q,
    pub b: Q,
    pub k: usize,
}

impl SelbergParams {
    pub fn new(n: usize, a: Q, b: Q, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("Selberg integral needs n >= 1".into()));
        }
        if a <= q(0) || b <= q(0) {
            return Err(Error::Domain("Selberg parameters must be positive".into()));
        }
        Ok(SelbergParams { n, a, b, k })
    }
}

fn product_ratio(num: Vec<Q>, den: Vec<Q>) -> Result<ExactScalar> {
    let mut top = ExactScalar::one();
    for x in &num {
        top = top.mul(&gamma_exact(x)?);
    }
    let mut bottom = ExactScalar::one();
    for x in &den {
        bottom = bottom.mul(&gamma_exact(x)?);
    }
    top.checked_div(&bottom)
}

/// `S_n(a,b,k) = prod_j G(a+jk) G(b+jk) G((j+1)k+1) / (G(a+b+(n+j-1)k) G(k+1))`.
pub fn selberg_value(p: &SelbergParams) -> Result<ExactScalar> {
    let SelbergParams { n, a, b, k } = p;
    let kq = |m: usize| q((m * k) as i64);
    let mut num = Vec::new();
    let mut den = Vec::new();
    for j in 0..*n {
        num.push(a + kq(j));
        num.push(b + kq(j));
        num.push(kq(j + 1) + q(1));
        den.push(a + b + kq(n + j - 1));
        den.push(q(*k as i64 + 1));
    }
    product_ratio(num, den)
}

/// `LS_n(alpha,k) = prod_j G(1+k+jk) G(alpha+jk) / G(1+k)`.
pub fn laguerre_selberg_value(n: usize, alpha: &Q, k: usize) -> Result<ExactScalar> {
    if n == 0 {
        return Err(Error::Domain("Laguerre-Selberg integral needs n >= 1".into()));
    }
    let mut num = Vec::new();
    let mut den = Vec::new();
    for j in 0..n {
        num.push(q((1 + k + j * k) as i64));
        num.push(alpha + q((j * k) as i64));
        den.push(q(1 + k as i64));
    }
    product_ratio(num, den)
}

/// `B(a,b) = G(a) G(b) / G(a+b)`.
pub fn beta_value(a: &Q, b: &Q) -> Result<ExactScalar> {
    product_ratio(vec![a.clone(), b.clone()], vec![a + b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qf;

    #[test]
    fn small_values() {
        let s = |n, a: Q, b: Q, k| selberg_value(&SelbergParams::new(n, a, b, k).unwrap()).unwrap();
        assert_eq!(s(2, q(1), q(1), 1), ExactScalar::rational(qf(1, 6)));
        assert_eq!(s(2, qf(1, 2), qf(3, 2), 1), ExactScalar::new(qf(1, 32), 4));
        assert_eq!(s(1, q(2), q(3), 4), beta_value(&q(2), &q(3)).unwrap());
        assert_eq!(laguerre_selberg_value(2, &q(1), 1).unwrap(), ExactScalar::int(2));
        assert_eq!(laguerre_selberg_value(1, &qf(1, 2), 3).unwrap(), ExactScalar::new(q(1), 1));
    }

    #[test]
    fn symmetric_in_a_b() {
        for (a, b) in [(q(1), qf(5, 2)), (qf(1, 2), qf(1, 2)), (q(3), q(2))] {
            for n in 1..4 {
                for k in 1..3 {
                    let x = selberg_value(&SelbergParams::new(n, a.clone(), b.clone(), k).unwrap());
                    let y = selberg_value(&SelbergParams::new(n, b.clone(), a.clone(), k).unwrap());
                    assert_eq!(x, y);
                }
            }
        }
    }

    #[test]
    fn domain() {
        assert!(SelbergParams::new(2, q(0), q(1), 1).is_err());
        let p = SelbergParams::new(2, qf(1, 3), q(1), 1).unwrap();
        assert!(selberg_value(&p).is_err());
    }
}
