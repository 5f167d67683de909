use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use super::poly::UniPoly;
use super::ring::{fmt_q, Ring, Q};

/// Declared, ordered variable list of a [`MultiPoly`].
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect()
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Exponent tuples have one slot per declared variable. Constants built
/// without a variable list promote to any list; otherwise arithmetic between
/// different lists panics.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Q>,
}

fn no_vars() -> Vars {
    Arc::from(Vec::<String>::new())
}

impl MultiPoly {
    pub fn zero_in(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        MultiPoly {
            vars: no_vars(),
            terms,
        }
    }

    pub fn constant_in(vars: &Vars, c: Q) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: Q) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The `i`-th variable of `vars`.
    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Q::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::var(vars, i)
    }

    /// Single-variable shorthand.
    pub fn symbol(name: &str) -> Self {
        Self::var(&vars(&[name]), 0)
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn from_unipoly(p: &UniPoly, vars: &Vars, i: usize) -> Self {
        Self::from_terms(
            vars,
            p.coeffs().iter().enumerate().map(|(d, c)| {
                let mut e = vec![0; vars.len()];
                e[i] = d as u32;
                (e, c.clone())
            }),
        )
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Re-expresses the polynomial over a larger list containing every own variable.
    pub fn embed(&self, target: &Vars) -> Self {
        if Arc::ptr_eq(&self.vars, target) || self.vars[..] == target[..] {
            return MultiPoly {
                vars: target.clone(),
                terms: self.terms.clone(),
            };
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .unwrap_or_else(|| panic!("variable {v} missing from target list"))
            })
            .collect();
        let mut out = Self::zero_in(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &x) in e.iter().enumerate() {
                ne[map[k]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    fn join(&self, other: &Self) -> (Self, Self) {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..] {
            return (self.clone(), other.clone());
        }
        if self.vars.is_empty() {
            return (self.embed(&other.vars), other.clone());
        }
        if other.vars.is_empty() {
            return (self.clone(), other.embed(&self.vars));
        }
        panic!(
            "variable lists differ: {:?} vs {:?}",
            self.vars, other.vars
        );
    }

    fn same_vars(&self, other: &Self) -> Option<Vars> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..] {
            Some(self.vars.clone())
        } else {
            None
        }
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.vars.len(), "evaluation arity");
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow::Pow::pow(x, k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `values[i]` for the `i`-th variable; all values must share one list.
    pub fn substitute_all(&self, values: &[MultiPoly]) -> MultiPoly {
        assert_eq!(values.len(), self.vars.len(), "substitution arity");
        let target = values
            .iter()
            .find(|v| !v.vars.is_empty())
            .map(|v| v.vars.clone())
            .unwrap_or_else(no_vars);
        let values: Vec<MultiPoly> = values.iter().map(|v| v.embed(&target)).collect();
        let mut powers: Vec<Vec<MultiPoly>> = values.iter().map(|v| vec![v.clone()]).collect();
        let mut out = MultiPoly::zero_in(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant_in(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() < k as usize {
                    let next = powers[i].last().unwrap().mul_ref(&values[i]);
                    powers[i].push(next);
                }
                t = t.mul_ref(&powers[i][k as usize - 1]);
            }
            out = out.add_ref(&t);
        }
        out
    }

    /// Substitutes one variable, keeping the variable list.
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> MultiPoly {
        let vals: Vec<MultiPoly> = (0..self.vars.len())
            .map(|j| {
                if j == i {
                    value.embed(&self.vars)
                } else {
                    MultiPoly::var(&self.vars, j)
                }
            })
            .collect();
        self.substitute_all(&vals)
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero_in(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * Q::from_integer(e[i].into()));
        }
        out
    }

    /// Univariate view in variable `i`; panics if other variables occur.
    pub fn to_unipoly(&self, i: usize) -> UniPoly {
        let deg = self.degree_in(i) as usize;
        let mut coeffs = vec![Q::zero(); deg + 1];
        for (e, c) in &self.terms {
            assert!(
                e.iter().enumerate().all(|(j, &x)| j == i || x == 0),
                "not univariate in {}",
                self.vars[i]
            );
            coeffs[e[i] as usize] = c.clone();
        }
        UniPoly::new(&self.vars[i], coeffs)
    }

    /// Terms in graded lexicographic order (total degree, then lex), ascending.
    pub fn grlex_terms(&self) -> Vec<(&Vec<u32>, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        v
    }

    pub fn map_coeffs(&self, f: impl Fn(&Q) -> Q) -> MultiPoly {
        MultiPoly::from_terms(&self.vars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Leading term in lex order.
    fn leading(&self) -> Option<(&Vec<u32>, &Q)> {
        self.terms.iter().next_back()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.same_vars(other).is_some() {
            return self.terms == other.terms;
        }
        match (self.as_constant(), other.as_constant()) {
            (Some(a), Some(b)) => a == b,
            _ if self.vars.is_empty() || other.vars.is_empty() => false,
            _ => panic!(
                "comparing polynomials over different variable lists: {:?} vs {:?}",
                self.vars, other.vars
            ),
        }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero_in(&no_vars())
    }
    fn one() -> Self {
        MultiPoly::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let (mut a, b) = self.join(other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let (mut a, b) = self.join(other);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.join(other);
        let mut out = MultiPoly::zero_in(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn from_rational(q: &Q) -> Self {
        MultiPoly::constant(q.clone())
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        let (mut r, d) = self.join(other);
        let (de, dc) = {
            let (e, c) = d.leading()?;
            (e.clone(), c.clone())
        };
        let mut quo = MultiPoly::zero_in(&r.vars);
        while let Some((re, rc)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let tc = rc / &dc;
            for (db, cb) in &d.terms {
                let ne: Vec<u32> = db.iter().zip(&e).map(|(x, y)| x + y).collect();
                r.add_term(ne, -(cb * &tc));
            }
            quo.add_term(e, tc);
        }
        Some(quo)
    }
    fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return MultiPoly::zero_in(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Human-readable form, highest graded-lex term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.grlex_terms().into_iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_q(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::q;

    #[test]
    fn arithmetic_and_division() {
        let v = vars(&["x", "y"]);
        let x = MultiPoly::var(&v, 0);
        let y = MultiPoly::var(&v, 1);
        let a = x.add_ref(&y);
        let b = x.sub_ref(&y);
        let p = a.mul_ref(&b);
        assert_eq!(p, x.pow(2).sub_ref(&y.pow(2)));
        assert_eq!(p.try_div(&a).unwrap(), b);
        assert!(p.try_div(&x).is_none());
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn constants_promote() {
        let x = MultiPoly::symbol("x");
        let two = MultiPoly::constant(q(2));
        assert_eq!(x.add_ref(&two).vars()[..], ["x".to_string()]);
        assert_eq!(two.mul_ref(&two), MultiPoly::constant(q(4)));
    }

    #[test]
    #[should_panic]
    fn mismatched_lists_panic() {
        let _ = MultiPoly::symbol("x").add_ref(&MultiPoly::symbol("y"));
    }

    #[test]
    fn substitution() {
        let v = vars(&["x"]);
        let x = MultiPoly::var(&v, 0);
        let p = x.pow(2).add_ref(&MultiPoly::constant(q(1)));
        let w = vars(&["t"]);
        let t = MultiPoly::var(&w, 0);
        let s = p.substitute_all(&[t.add_ref(&MultiPoly::constant(q(1)))]);
        assert_eq!(s.to_string(), "t^2 + 2*t + 2");
    }
}
