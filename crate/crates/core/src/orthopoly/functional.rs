use super::family::MonicPolynomialFamily;
use crate::exact::{Poly, Ring};
use crate::hyperdet::SkewMatrix;
use crate::{Error, Result};

/// Linear functional `mu(x^n) = c_n` on polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentFunctional<R> {
    moments: Vec<R>,
}

impl<R: Ring> MomentFunctional<R> {
    pub fn new(moments: Vec<R>) -> Self {
        MomentFunctional { moments }
    }

    pub fn moments(&self) -> &[R] {
        &self.moments
    }

    pub fn apply(&self, p: &Poly<R>) -> Result<R> {
        let mut acc = R::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = self.moments.get(i).ok_or(Error::InsufficientMoments {
                needed: i,
                available: self.moments.len(),
            })?;
            acc = acc.add_ref(&c.mul_ref(m));
        }
        Ok(acc)
    }

    pub fn inner(&self, p: &Poly<R>, q: &Poly<R>) -> Result<R> {
        self.apply(&p.mul_ref(q))
    }
}

/// Gram–Schmidt on `1, x, x^2, ..` giving monic `P_0..P_N`.
pub fn monic_from_moments<R: Ring>(
    mu: &MomentFunctional<R>,
    n_max: usize,
) -> Result<MonicPolynomialFamily<R>> {
    let mut polys: Vec<Poly<R>> = vec![Poly::new("x", vec![R::one()])];
    let mut norms: Vec<R> = Vec::new();
    for m in 1..=n_max {
        let j = m - 1;
        let nj = mu.inner(&polys[j], &polys[j])?;
        if nj.is_zero() {
            return Err(Error::Degenerate(j));
        }
        norms.push(nj);
        let xm = Poly::monomial("x", R::one(), m);
        let mut p = xm.clone();
        for (j, pj) in polys.iter().enumerate() {
            let proj = mu.inner(&xm, pj)?;
            if proj.is_zero() {
                continue;
            }
            let c = proj.try_div(&norms[j]).ok_or_else(|| {
                Error::InexactDivision(format!("Gram-Schmidt coefficient at degree {m}"))
            })?;
            p = p.sub_ref(&pj.map_coeffs(|v| v.mul_ref(&c)));
        }
        polys.push(p.with_var("x"));
    }
    MonicPolynomialFamily::from_polys(polys)
}

/// Squared norms `||P_j||^2` for `j < count`.
pub fn squared_norms<R: Ring>(
    mu: &MomentFunctional<R>,
    family: &MonicPolynomialFamily<R>,
    count: usize,
) -> Result<Vec<R>> {
    (0..count)
        .map(|j| mu.inner(family.poly(j), family.poly(j)))
        .collect()
}

/// Fails with the first nonzero off-diagonal Gram entry among the first `count`.
pub fn check_orthogonal<R: Ring>(
    mu: &MomentFunctional<R>,
    family: &MonicPolynomialFamily<R>,
    count: usize,
) -> Result<()> {
    if family.len() < count {
        return Err(Error::Domain(format!(
            "family has {} polynomials, {count} needed",
            family.len()
        )));
    }
    for i in 0..count {
        for j in i + 1..count {
            if !mu.inner(family.poly(i), family.poly(j))?.is_zero() {
                return Err(Error::NotOrthogonal(i, j));
            }
        }
    }
    Ok(())
}

/// Skew matrix `M_ij = <x^r P_i, P_j'> - <x^r P_j, P_i'>`, `0 <= i, j < size`.
///
/// For `r = 0` only the first term survives above the diagonal.
pub fn pprime_gram<R: Ring>(
    mu: &MomentFunctional<R>,
    family: &MonicPolynomialFamily<R>,
    r: usize,
    size: usize,
) -> Result<SkewMatrix<R>> {
    if family.len() < size {
        return Err(Error::Domain(format!(
            "family has {} polynomials, {size} needed",
            family.len()
        )));
    }
    if size >= 2 {
        let needed = r + 2 * size - 3;
        if needed >= mu.moments().len() {
            return Err(Error::InsufficientMoments {
                needed,
                available: mu.moments().len(),
            });
        }
    }
    let xr = Poly::monomial("x", R::one(), r);
    let shifted: Vec<Poly<R>> = (0..size).map(|i| xr.mul_ref(family.poly(i))).collect();
    let deriv: Vec<Poly<R>> = (0..size).map(|i| family.poly(i).derivative()).collect();
    let mut entries = vec![vec![R::zero(); size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let a = mu.inner(&shifted[i], &deriv[j])?;
            let b = mu.inner(&shifted[j], &deriv[i])?;
            entries[i][j] = a.sub_ref(&b);
        }
    }
    Ok(SkewMatrix::from_upper(size, |i, j| entries[i][j].clone()))
}
