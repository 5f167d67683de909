use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::partition::{to_monomial_basis, Partition};
use crate::exact::{fmt_q, q, vars, MultiPoly, Ring, Vars, Q};
use crate::hyperdet::permutations;
use crate::{Error, Result};

/// Bases of the symmetric polynomials in `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Schur,
    /// Complete homogeneous `h_lambda`.
    H,
    /// Elementary `e_lambda`, parts at most `n`.
    E,
    /// Power sums `p_lambda`, parts at most `n`.
    P,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
        }
    }

    /// True when partitions are bounded in length (rather than in part size) by `n`.
    fn bounds_length(self) -> bool {
        matches!(self, Basis::Monomial | Basis::Schur | Basis::H)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" | "monomial" => Ok(Basis::Monomial),
            "s" | "schur" => Ok(Basis::Schur),
            "h" | "complete" => Ok(Basis::H),
            "e" | "elementary" => Ok(Basis::E),
            "p" | "power" => Ok(Basis::P),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// `x1..xn`.
pub fn sym_vars(n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    vars(&names.iter().map(String::as_str).collect::<Vec<_>>())
}

/// A symmetric polynomial in `n` variables on one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    basis: Basis,
    n: usize,
    coeffs: BTreeMap<Partition, Q>,
}

impl SymExpansion {
    pub fn new(basis: Basis, n: usize, terms: impl IntoIterator<Item = (Partition, Q)>) -> Result<Self> {
        let mut coeffs: BTreeMap<Partition, Q> = BTreeMap::new();
        for (p, c) in terms {
            let fits = if basis.bounds_length() {
                p.len() <= n
            } else {
                p.parts().first().map_or(true, |&t| t as usize <= n)
            };
            if !fits {
                return Err(Error::PartitionTooLong(p.to_string(), n));
            }
            *coeffs.entry(p).or_insert_with(|| q(0)) += c;
        }
        coeffs.retain(|_, c| *c != q(0));
        Ok(SymExpansion { basis, n, coeffs })
    }

    pub fn zero(basis: Basis, n: usize) -> Self {
        SymExpansion { basis, n, coeffs: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn vars_count(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, p: &Partition) -> Q {
        self.coeffs.get(p).cloned().unwrap_or_else(|| q(0))
    }

    /// Terms with partitions in decreasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        SymExpansion::new(self.basis, self.n, self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)))
            .expect("same shape")
    }

    pub fn to_poly(&self) -> Result<MultiPoly> {
        let vs = sym_vars(self.n);
        let mut acc = MultiPoly::zero_in(&vs);
        for (lam, c) in &self.coeffs {
            acc = acc.add_ref(&basis_poly(self.basis, lam, &vs)?.scale(c));
        }
        Ok(acc)
    }

    /// Expands a symmetric polynomial (in `n` variables) on `basis`.
    pub fn from_poly(p: &MultiPoly, basis: Basis) -> Result<Self> {
        let n = p.vars().len();
        match basis {
            Basis::Monomial => SymExpansion::new(basis, n, to_monomial_basis(p)?),
            Basis::Schur => schur_from_poly(p),
            Basis::H => Ok(jacobi_trudi(&schur_from_poly(p)?)),
            Basis::E => SymExpansion::new(basis, n, e_from_poly(p)?),
            Basis::P => p_from_e(&SymExpansion::new(Basis::E, n, e_from_poly(p)?)?),
        }
    }

    /// Exact change of basis.
    pub fn convert(&self, target: Basis) -> Result<Self> {
        if self.basis == target {
            return Ok(self.clone());
        }
        if self.basis == Basis::Schur && target == Basis::H {
            return Ok(jacobi_trudi(self));
        }
        SymExpansion::from_poly(&self.to_poly()?, target)
    }

    /// Image under `h_m -> c_m` (Schur and `h` bases); needs `c_0 = 1`.
    pub fn specialize_h(&self, c: &[Q]) -> Result<Q> {
        if c.first() != Some(&q(1)) {
            return Err(Error::Domain("specialization needs c_0 = 1".into()));
        }
        let h = match self.basis {
            Basis::H => self.clone(),
            Basis::Schur => jacobi_trudi(self),
            other => return Err(Error::Unsupported(format!("specialization from the {other} basis"))),
        };
        let mut acc = q(0);
        for (lam, v) in &h.coeffs {
            let mut t = v.clone();
            for &part in lam.parts() {
                let m = c
                    .get(part as usize)
                    .ok_or(Error::InsufficientMoments { needed: part as usize, available: c.len() })?;
                t *= m;
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (lam, c)) in self.terms().enumerate() {
            let neg = *c < q(0);
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != q(1) {
                write!(f, "{}*", fmt_q(&mag))?;
            }
            write!(f, "{sym}{lam}")?;
        }
        Ok(())
    }
}

/// `a_mu = det(x_j^{mu_i})`.
pub fn alternant(mu: &[u32], vs: &Vars) -> MultiPoly {
    let terms = permutations(mu.len()).into_iter().map(|(p, odd)| {
        let mut e = vec![0u32; mu.len()];
        for (i, &j) in p.iter().enumerate() {
            e[j] = mu[i];
        }
        (e, if odd { q(-1) } else { q(1) })
    });
    MultiPoly::from_terms(vs, terms)
}

fn staircase(n: usize) -> Vec<u32> {
    (0..n).map(|i| (n - 1 - i) as u32).collect()
}

/// `s_lambda = a_{lambda+delta} / a_delta` in `vs.len()` variables.
pub fn schur_poly(lam: &Partition, vs: &Vars) -> Result<MultiPoly> {
    let n = vs.len();
    let num = alternant(&lam.plus_staircase(n)?, vs);
    let den = alternant(&staircase(n), vs);
    num.try_div(&den)
        .ok_or_else(|| Error::InexactDivision(format!("bialternant for {lam}")))
}

fn h_poly(m: u32, vs: &Vars) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero_in(vs);
    for mu in Partition::all_of(m, vs.len()) {
        acc = acc.add_ref(&mu.monomial(vs)?);
    }
    Ok(acc)
}

fn basis_poly(basis: Basis, lam: &Partition, vs: &Vars) -> Result<MultiPoly> {
    let n = vs.len();
    let one = MultiPoly::constant_in(vs, q(1));
    match basis {
        Basis::Monomial => lam.monomial(vs),
        Basis::Schur => schur_poly(lam, vs),
        Basis::H => lam.parts().iter().try_fold(one, |acc, &m| Ok(acc.mul_ref(&h_poly(m, vs)?))),
        Basis::E => lam.parts().iter().try_fold(one, |acc, &m| {
            if m as usize > n {
                return Err(Error::PartitionTooLong(lam.to_string(), n));
            }
            Ok(acc.mul_ref(&Partition::rectangle(1, m as usize).monomial(vs)?))
        }),
        Basis::P => lam
            .parts()
            .iter()
            .try_fold(one, |acc, &m| Ok(acc.mul_ref(&Partition::new(vec![m]).monomial(vs)?))),
    }
}

fn schur_from_poly(p: &MultiPoly) -> Result<SymExpansion> {
    let n = p.vars().len();
    to_monomial_basis(p)?;
    let anti = p.mul_ref(&alternant(&staircase(n), p.vars()));
    let delta = staircase(n);
    let mut terms = Vec::new();
    for (e, c) in anti.terms() {
        if e.windows(2).all(|w| w[0] > w[1]) {
            let lam: Vec<u32> = e.iter().zip(&delta).map(|(a, d)| a - d).collect();
            terms.push((Partition::new(lam), c.clone()));
        }
    }
    SymExpansion::new(Basis::Schur, n, terms)
}

/// `s_lambda = det(h_{lambda_i - i + j})`, expanded formally.
fn jacobi_trudi(s: &SymExpansion) -> SymExpansion {
    let mut out: BTreeMap<Partition, Q> = BTreeMap::new();
    for (lam, c) in &s.coeffs {
        let l = lam.len();
        let parts = lam.parts();
        'perm: for (p, odd) in permutations(l) {
            let mut idx = Vec::with_capacity(l);
            for (i, &j) in p.iter().enumerate() {
                let v = parts[i] as i64 - i as i64 + j as i64;
                if v < 0 {
                    continue 'perm;
                }
                idx.push(v as u32);
            }
            let t = if odd { -c.clone() } else { c.clone() };
            *out.entry(Partition::new(idx)).or_insert_with(|| q(0)) += t;
        }
    }
    SymExpansion::new(Basis::H, s.n, out).expect("Jacobi-Trudi keeps the length")
}

fn e_from_poly(p: &MultiPoly) -> Result<Vec<(Partition, Q)>> {
    let vs = p.vars().clone();
    to_monomial_basis(p)?;
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some((e, c)) = rest.terms().iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let lam = Partition::new(e).conjugate();
        let basis = basis_poly(Basis::E, &lam, &vs)?;
        rest = rest.sub_ref(&basis.scale(&c));
        out.push((lam, c));
    }
    Ok(out)
}

/// Rewrites an `e`-expansion through Newton's identities.
fn p_from_e(e: &SymExpansion) -> Result<SymExpansion> {
    let n = e.n;
    let names: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let pv = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
    // e_i = (1/i) sum_{j=1}^{i} (-1)^{j-1} e_{i-j} p_j
    let mut es: Vec<MultiPoly> = vec![MultiPoly::constant_in(&pv, q(1))];
    for i in 1..=n {
        let mut acc = MultiPoly::zero_in(&pv);
        for j in 1..=i {
            let t = es[i - j].mul_ref(&MultiPoly::var(&pv, j - 1));
            acc = if j % 2 == 1 { acc.add_ref(&t) } else { acc.sub_ref(&t) };
        }
        es.push(acc.scale(&(q(1) / q(i as i64))));
    }
    let mut total = MultiPoly::zero_in(&pv);
    for (lam, c) in &e.coeffs {
        let t = lam
            .parts()
            .iter()
            .fold(MultiPoly::constant_in(&pv, q(1)), |acc, &m| acc.mul_ref(&es[m as usize]));
        total = total.add_ref(&t.scale(c));
    }
    let terms = total.terms().iter().map(|(ex, c)| {
        let parts: Vec<u32> = ex
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat((i + 1) as u32).take(k as usize))
            .collect();
        (Partition::new(parts), c.clone())
    });
    SymExpansion::new(Basis::P, n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qf;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn schur_examples() {
        let s22 = SymExpansion::new(Basis::Schur, 2, [(part(&[2, 2]), q(1))]).unwrap();
        let m = s22.convert(Basis::Monomial).unwrap();
        assert_eq!(m, SymExpansion::new(Basis::Monomial, 2, [(part(&[2, 2]), q(1))]).unwrap());
        let f = SymExpansion::new(Basis::Monomial, 2, [(part(&[3, 1]), q(-1)), (part(&[2, 2]), q(2))]).unwrap();
        let s = f.convert(Basis::Schur).unwrap();
        assert_eq!(s.to_string(), "-s(3,1) + 3*s(2,2)");
        assert!(SymExpansion::new(Basis::Schur, 2, [(part(&[1, 1, 1]), q(1))]).is_err());
    }

    #[test]
    fn round_trips() {
        let f = SymExpansion::new(
            Basis::Monomial,
            3,
            [(part(&[3, 1]), q(2)), (part(&[2, 1, 1]), qf(-1, 3)), (part(&[4]), q(5)), (part(&[2, 2]), q(1))],
        )
        .unwrap();
        for b in [Basis::Schur, Basis::H, Basis::E, Basis::P] {
            let g = f.convert(b).unwrap();
            assert_eq!(g.convert(Basis::Monomial).unwrap(), f, "{b}");
        }
        let s = f.convert(Basis::Schur).unwrap();
        assert_eq!(s.convert(Basis::H).unwrap().convert(Basis::Schur).unwrap(), s);
    }

    #[test]
    fn small_bases() {
        let vs = sym_vars(2);
        let h2 = basis_poly(Basis::H, &part(&[2]), &vs).unwrap();
        let s2 = schur_poly(&part(&[2]), &vs).unwrap();
        assert_eq!(h2, s2);
        let e = SymExpansion::from_poly(&Partition::new(vec![1, 1]).monomial(&vs).unwrap(), Basis::P).unwrap();
        // x1 x2 = (p1^2 - p2)/2
        assert_eq!(e.coeff(&part(&[1, 1])), qf(1, 2));
        assert_eq!(e.coeff(&part(&[2])), qf(-1, 2));
    }
}
