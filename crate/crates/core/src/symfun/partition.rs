use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::exact::{MultiPoly, Ring, Vars, Q};
use crate::{Error, Result};

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Rectangle `(n^r)`.
    pub fn rectangle(n: u32, r: usize) -> Self {
        Partition::new(vec![n; r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::PartitionTooLong(self.to_string(), n));
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// `lambda + (n-1, .., 1, 0)`.
    pub fn plus_staircase(&self, n: usize) -> Result<Vec<u32>> {
        Ok(self
            .padded(n)?
            .into_iter()
            .enumerate()
            .map(|(i, p)| p + (n - 1 - i) as u32)
            .collect())
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Order by weight, then lexicographically; for equal weight `(1^m)` comes first.
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub fn dominates(&self, other: &Self) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Partitions of `m` with at most `max_len` parts, in lexicographic order.
    pub fn all_of(m: u32, max_len: usize) -> Vec<Partition> {
        fn rec(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in 1..=max_part.min(rest) {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, max_len, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every partition with at most `max_len` parts and weight at most `max_weight`,
    /// sorted by [`Partition::graded_cmp`].
    pub fn up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_weight).flat_map(|m| Partition::all_of(m, max_len)).collect()
    }

    /// Distinct permutations of the padded parts.
    pub fn orbit(&self, n: usize) -> Result<Vec<Vec<u32>>> {
        let mut v = self.padded(n)?;
        v.sort_unstable();
        let mut out = vec![v.clone()];
        while next_permutation(&mut v) {
            out.push(v.clone());
        }
        Ok(out)
    }

    /// `m_lambda(x_1..x_n)`.
    pub fn monomial(&self, vars: &Vars) -> Result<MultiPoly> {
        let n = vars.len();
        Ok(MultiPoly::from_terms(
            vars,
            self.orbit(n)?.into_iter().map(|e| (e, Q::from_integer(1.into()))),
        ))
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `3 1` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad partition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

/// Coefficients of a symmetric polynomial on the monomial basis, read off the
/// weakly decreasing exponent vectors. Fails if the input is not symmetric.
pub fn to_monomial_basis(p: &MultiPoly) -> Result<Vec<(Partition, Q)>> {
    let n = p.vars().len();
    let mut out = Vec::new();
    for (e, c) in p.terms() {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            out.push((Partition::new(e.clone()), c.clone()));
        }
    }
    let mut back = MultiPoly::zero_in(p.vars());
    for (lam, c) in &out {
        back = back.add_ref(&lam.monomial(p.vars())?.scale(c));
    }
    if back != *p {
        return Err(Error::Domain(format!("polynomial in {n} variables is not symmetric")));
    }
    out.sort_by(|a, b| a.0.graded_cmp(&b.0));
    Ok(out)
}
