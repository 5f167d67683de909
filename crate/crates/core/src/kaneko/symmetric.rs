use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::expand::vandermonde_power_poly;
use super::measure::{monomial_integral, SelbergMeasure};
use crate::exact::{fmt_q, q, MultiPoly, Ring, Vars, Q};
use crate::symfun::{to_monomial_basis, Partition};
use crate::{Error, Result};

/// Symmetric polynomial in `r` variables on the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSymPoly {
    r: usize,
    coeffs: BTreeMap<Partition, Q>,
}

impl MultiSymPoly {
    pub fn new(r: usize, terms: impl IntoIterator<Item = (Partition, Q)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (p, c) in terms {
            if p.len() > r {
                return Err(Error::PartitionTooLong(p.to_string(), r));
            }
            if c != q(0) {
                *coeffs.entry(p).or_insert_with(|| q(0)) += c;
            }
        }
        coeffs.retain(|_, c| *c != q(0));
        Ok(MultiSymPoly { r, coeffs })
    }

    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        Self::new(p.vars().len(), to_monomial_basis(p)?)
    }

    pub fn vars_count(&self) -> usize {
        self.r
    }

    pub fn coeff(&self, p: &Partition) -> Q {
        self.coeffs.get(p).cloned().unwrap_or_else(|| q(0))
    }

    /// Terms in increasing graded order.
    pub fn terms(&self) -> Vec<(&Partition, &Q)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| a.0.graded_cmp(b.0));
        v
    }

    /// The largest partition in graded order.
    pub fn leading(&self) -> Option<(&Partition, &Q)> {
        self.coeffs.iter().max_by(|a, b| a.0.graded_cmp(b.0))
    }

    pub fn to_poly(&self, vars: &Vars) -> Result<MultiPoly> {
        if vars.len() != self.r {
            return Err(Error::Domain(format!(
                "{} variables given for a polynomial in {}",
                vars.len(),
                self.r
            )));
        }
        let mut acc = MultiPoly::zero_in(vars);
        for (p, c) in &self.coeffs {
            acc = acc.add_ref(&p.monomial(vars)?.scale(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = terms
            .iter()
            .rev()
            .map(|(p, c)| format!("{}*m{}", fmt_q(c), p))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Gram matrix of monomial symmetric functions under a measure.
struct SymInner {
    r: usize,
    delta: std::sync::Arc<MultiPoly>,
    mu: Vec<Q>,
    memo: HashMap<Vec<u32>, Q>,
}

impl SymInner {
    fn new(m: &SelbergMeasure, r: usize, max_weight: u32) -> Result<Self> {
        let top = 2 * max_weight as usize + 2 * m.k * r.saturating_sub(1) + 1;
        let (mu, _) = m.rational_moments(top)?;
        Ok(SymInner { r, delta: vandermonde_power_poly(r, m.k), mu, memo: HashMap::new() })
    }

    fn moment(&mut self, mut e: Vec<u32>) -> Result<Q> {
        e.sort_unstable();
        if let Some(v) = self.memo.get(&e) {
            return Ok(v.clone());
        }
        let v = monomial_integral(&self.delta, &self.mu, &e)?;
        self.memo.insert(e, v.clone());
        Ok(v)
    }

    /// `<m_a, m_b>`; the weight is symmetric, so one orbit representative suffices.
    fn pair(&mut self, a: &Partition, b: &Partition) -> Result<Q> {
        let rep = a.padded(self.r)?;
        let size = q(a.orbit(self.r)?.len() as i64);
        let mut acc = q(0);
        for e in b.orbit(self.r)? {
            let s: Vec<u32> = rep.iter().zip(&e).map(|(x, y)| x + y).collect();
            acc += self.moment(s)?;
        }
        Ok(acc * size)
    }
}

fn basis_upto(target: &Partition, r: usize) -> Vec<Partition> {
    Partition::up_to(target.weight(), r)
        .into_iter()
        .filter(|p| p.graded_cmp(target) != std::cmp::Ordering::Greater)
        .collect()
}

fn run_gram_schmidt(
    m: &SelbergMeasure,
    r: usize,
    basis: &[Partition],
) -> Result<Vec<MultiSymPoly>> {
    let max_w = basis.iter().map(Partition::weight).max().unwrap_or(0);
    let mut inner = SymInner::new(m, r, max_w)?;
    let nb = basis.len();
    let mut g = vec![vec![q(0); nb]; nb];
    for i in 0..nb {
        for j in 0..=i {
            let v = inner.pair(&basis[i], &basis[j])?;
            g[i][j] = v.clone();
            g[j][i] = v;
        }
    }
    // rows of c: coefficients of p_i on m_0..m_i
    let mut c: Vec<Vec<Q>> = Vec::with_capacity(nb);
    let mut norms: Vec<Q> = Vec::with_capacity(nb);
    for i in 0..nb {
        let mut row = vec![q(0); nb];
        row[i] = q(1);
        for j in 0..i {
            let proj: Q = (0..=j).map(|l| &c[j][l] * &g[i][l]).sum();
            if proj == q(0) {
                continue;
            }
            let f = proj / &norms[j];
            for l in 0..=j {
                row[l] -= &f * &c[j][l];
            }
        }
        let norm: Q = (0..=i).map(|l| &row[l] * &g[i][l]).sum();
        if norm == q(0) {
            return Err(Error::Degenerate(i));
        }
        norms.push(norm);
        c.push(row);
    }
    c.into_iter()
        .map(|row| {
            MultiSymPoly::new(r, basis.iter().cloned().zip(row).filter(|(_, v)| *v != q(0)))
        })
        .collect()
}

/// Gram–Schmidt on `m_lambda`, `l(lambda) <= r`, `|lambda| <= degree`, in graded
/// order, against `|Delta|^{2k} prod w` in `r` variables. Each output has
/// leading term `m_lambda`.
pub fn gram_schmidt_sym(
    m: &SelbergMeasure,
    r: usize,
    degree: u32,
) -> Result<Vec<(Partition, MultiSymPoly)>> {
    let basis = Partition::up_to(degree, r);
    let polys = run_gram_schmidt(m, r, &basis)?;
    Ok(basis.into_iter().zip(polys).collect())
}

/// The single Gram–Schmidt polynomial with leading term `m_kappa`.
pub fn sym_orthogonal(m: &SelbergMeasure, r: usize, kappa: &Partition) -> Result<MultiSymPoly> {
    let basis = basis_upto(kappa, r);
    let mut polys = run_gram_schmidt(m, r, &basis)?;
    Ok(polys.pop().expect("basis contains kappa"))
}

/// Symmetric Jacobi polynomial for `prod z_i^alpha (1-z_i)^beta |Delta(z)|^{2 theta}`
/// on `[0,1]^r`, leading term `m_kappa`, as the eigenfunction of
/// `sum_i [z_i(1-z_i) d_i^2 + (alpha+1 - (alpha+beta+2) z_i) d_i]
///  + 2 theta sum_{i<j} (z_i(1-z_i) d_i - z_j(1-z_j) d_j)/(z_i - z_j)`.
pub fn jacobi_eigen(
    alpha: &Q,
    beta: &Q,
    theta: &Q,
    kappa: &Partition,
    vs: &Vars,
) -> Result<MultiSymPoly> {
    let r = vs.len();
    let basis = basis_upto(kappa, r);
    let index: HashMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let one = MultiPoly::constant_in(vs, q(1));
    let zs: Vec<MultiPoly> = (0..r).map(|i| MultiPoly::var(vs, i)).collect();
    let lin_a = one.scale(&(alpha + q(1)));
    let lin_b = alpha + beta + q(2);
    let apply = |f: &MultiPoly| -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero_in(vs);
        let mut grads = Vec::with_capacity(r);
        for i in 0..r {
            let zi = &zs[i];
            let zz = zi.mul_ref(&one.sub_ref(zi));
            let d1 = f.partial(i);
            let d2 = d1.partial(i);
            acc = acc
                .add_ref(&zz.mul_ref(&d2))
                .add_ref(&lin_a.sub_ref(&zi.scale(&lin_b)).mul_ref(&d1));
            grads.push(zz.mul_ref(&d1));
        }
        for i in 0..r {
            for j in i + 1..r {
                let num = grads[i].sub_ref(&grads[j]);
                let den = zs[i].sub_ref(&zs[j]);
                let quo = num.try_div(&den).ok_or_else(|| {
                    Error::InexactDivision("symmetric divided difference".into())
                })?;
                acc = acc.add_ref(&quo.scale(&(theta * q(2))));
            }
        }
        Ok(acc)
    };
    let nb = basis.len();
    let mut d = vec![vec![q(0); nb]; nb];
    for (col, p) in basis.iter().enumerate() {
        let img = apply(&p.monomial(vs)?)?;
        for (lam, c) in to_monomial_basis(&img)? {
            let row = *index.get(&lam).ok_or_else(|| {
                Error::Domain(format!("operator leaves the span below {kappa}: {lam}"))
            })?;
            if row > col {
                return Err(Error::Domain("operator is not triangular".into()));
            }
            d[row][col] = c;
        }
    }
    let top = nb - 1;
    let lambda = d[top][top].clone();
    let mut c = vec![q(0); nb];
    c[top] = q(1);
    for i in (0..top).rev() {
        let rhs: Q = (i + 1..=top).map(|j| &d[i][j] * &c[j]).sum();
        let gap = &lambda - &d[i][i];
        if gap == q(0) {
            if rhs != q(0) {
                return Err(Error::Degenerate(i));
            }
            continue;
        }
        c[i] = rhs / gap;
    }
    MultiSymPoly::new(r, basis.into_iter().zip(c))
}

/// Substitutes `v -> scale * v + shift` in every variable.
pub fn affine_map(p: &MultiPoly, scale: &Q, shift: &Q) -> MultiPoly {
    let vs = p.vars().clone();
    let one = MultiPoly::constant_in(&vs, q(1));
    let images: Vec<MultiPoly> = (0..vs.len())
        .map(|i| MultiPoly::var(&vs, i).scale(scale).add_ref(&one.scale(shift)))
        .collect();
    p.substitute_all(&images)
}
