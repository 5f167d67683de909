use std::fmt;
use std::str::FromStr;

use super::integrals::{beta_value, laguerre_selberg_value, selberg_value, SelbergParams};
use crate::exact::{
    binomial, double_factorial, factorial, factorial_q, fmt_q, parse_q, pochhammer, q, qf, vars,
    ExactScalar, MultiPoly, Ring, UniPoly, Value, Q,
};
use crate::hyperdet::{hankel_fast, MomentSequence};
use crate::orthopoly::{bell_polys, wronskian};
use crate::{Error, Result};

/// Named moment sequences with known integral representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceFamily {
    /// `n!`
    Factorial,
    /// `(n + alpha)!`
    GammaShifted(u32),
    /// `binom(2n,n)/(n+1)`
    Catalan,
    /// `binom(2n,n)`
    CentralBinomial,
    /// `(2n)!/n!`
    TwoNOverN,
    /// `1/(n+1)`
    Hilbert,
    /// `1/(n+a+1)`
    HilbertShifted(Q),
    /// `1/n!`
    InverseFactorial,
    /// Bell polynomials `b_n(a)`, symbolic when no value is given.
    Bell(Option<Q>),
    /// `(a)_n/(b)_n`
    PochhammerRatio(Q, Q),
}

/// Moments of a family, rational or polynomial in `a`.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyMoments {
    Rational(MomentSequence<Q>),
    Poly(MomentSequence<UniPoly>),
}

impl SequenceFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SequenceFamily::Factorial => "factorial",
            SequenceFamily::GammaShifted(_) => "gamma_shifted",
            SequenceFamily::Catalan => "catalan",
            SequenceFamily::CentralBinomial => "central_binomial",
            SequenceFamily::TwoNOverN => "two_n_over_n",
            SequenceFamily::Hilbert => "hilbert",
            SequenceFamily::HilbertShifted(_) => "hilbert_shifted",
            SequenceFamily::InverseFactorial => "inverse_factorial",
            SequenceFamily::Bell(_) => "bell",
            SequenceFamily::PochhammerRatio(..) => "pochhammer_ratio",
        }
    }

    /// Moment `c_m` for the rational families.
    pub fn rational_moment(&self, m: usize) -> Result<Q> {
        let mu = m as u64;
        Ok(match self {
            SequenceFamily::Factorial => factorial_q(mu),
            SequenceFamily::GammaShifted(alpha) => factorial_q(mu + *alpha as u64),
            SequenceFamily::Catalan => Q::new(binomial(2 * mu, mu), (mu + 1).into()),
            SequenceFamily::CentralBinomial => Q::from(binomial(2 * mu, mu)),
            SequenceFamily::TwoNOverN => Q::new(factorial(2 * mu), factorial(mu)),
            SequenceFamily::Hilbert => qf(1, m as i64 + 1),
            SequenceFamily::HilbertShifted(a) => {
                let d = a + q(m as i64 + 1);
                if d == q(0) {
                    return Err(Error::Domain("Hilbert moment with zero denominator".into()));
                }
                q(1) / d
            }
            SequenceFamily::InverseFactorial => q(1) / factorial_q(mu),
            SequenceFamily::Bell(Some(a)) => bell_polys(m + 1)[m].eval(a),
            SequenceFamily::Bell(None) => {
                return Err(Error::Domain("symbolic Bell moments are polynomials".into()))
            }
            SequenceFamily::PochhammerRatio(a, b) => {
                let d = pochhammer(b, m);
                if d == q(0) {
                    return Err(Error::Domain("Pochhammer ratio with zero denominator".into()));
                }
                pochhammer(a, m) / d
            }
        })
    }

    /// `c_0..c_{len-1}`.
    pub fn moments(&self, len: usize) -> Result<FamilyMoments> {
        if let SequenceFamily::Bell(None) = self {
            return Ok(FamilyMoments::Poly(MomentSequence::tagged(bell_polys(len), "bell")));
        }
        let c = (0..len)
            .map(|m| self.rational_moment(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyMoments::Rational(MomentSequence::tagged(c, self.to_string())))
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceFamily::GammaShifted(a) => write!(f, "gamma_shifted:{a}"),
            SequenceFamily::HilbertShifted(a) => write!(f, "hilbert_shifted:{}", fmt_q(a)),
            SequenceFamily::Bell(Some(a)) => write!(f, "bell:{}", fmt_q(a)),
            SequenceFamily::PochhammerRatio(a, b) => {
                write!(f, "pochhammer_ratio:{},{}", fmt_q(a), fmt_q(b))
            }
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;

    /// `name` or `name:p1,p2`, with `-` and `_` interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('-', "_");
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.to_string(), p.split(',').map(str::trim).collect::<Vec<_>>()),
            None => (s.clone(), vec![]),
        };
        let rat = |i: usize| -> Result<Q> {
            params
                .get(i)
                .and_then(|p| parse_q(p))
                .ok_or_else(|| Error::Parse(format!("family {name}: parameter {} missing or invalid", i + 1)))
        };
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::Parse(format!("family {name} takes {want} parameter(s)")))
            }
        };
        let fam = match name.as_str() {
            "factorial" => {
                arity(0)?;
                SequenceFamily::Factorial
            }
            "gamma_shifted" => {
                arity(1)?;
                let a = rat(0)?;
                if !a.is_integer() || a < q(0) {
                    return Err(Error::Domain("gamma_shifted needs a nonnegative integer".into()));
                }
                SequenceFamily::GammaShifted(
                    a.to_integer()
                        .try_into()
                        .map_err(|_| Error::Domain("alpha too large".into()))?,
                )
            }
            "catalan" => {
                arity(0)?;
                SequenceFamily::Catalan
            }
            "central_binomial" => {
                arity(0)?;
                SequenceFamily::CentralBinomial
            }
            "two_n_over_n" => {
                arity(0)?;
                SequenceFamily::TwoNOverN
            }
            "hilbert" => {
                arity(0)?;
                SequenceFamily::Hilbert
            }
            "hilbert_shifted" => {
                arity(1)?;
                SequenceFamily::HilbertShifted(rat(0)?)
            }
            "inverse_factorial" => {
                arity(0)?;
                SequenceFamily::InverseFactorial
            }
            "bell" => match params.len() {
                0 => SequenceFamily::Bell(None),
                1 => SequenceFamily::Bell(Some(rat(0)?)),
                _ => return Err(Error::Parse("family bell takes at most 1 parameter".into())),
            },
            "pochhammer_ratio" => {
                arity(2)?;
                SequenceFamily::PochhammerRatio(rat(0)?, rat(1)?)
            }
            _ => return Err(Error::Parse(format!("unknown family {name}"))),
        };
        Ok(fam)
    }
}

fn moments_needed(n: usize, k: usize, r: usize) -> usize {
    2 * k * (n - 1) + r + 1
}

fn poly_value(p: &UniPoly) -> Value {
    Value::Poly(MultiPoly::from_unipoly(p, &vars(&["a"]), 0)).normalized()
}

/// `D_{n;r}^{(k)}` of the family by the fast Hankel kernel.
pub fn hankel_family(family: &SequenceFamily, n: usize, k: usize, r: usize) -> Result<Value> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    match family.moments(moments_needed(n, k, r))? {
        FamilyMoments::Rational(c) => Ok(Value::Scalar(hankel_fast(&c, n, k, r)?.into())),
        FamilyMoments::Poly(c) => Ok(poly_value(&hankel_fast(&c, n, k, r)?)),
    }
}

fn pi_inverse(x: ExactScalar, half_powers: u32) -> Result<ExactScalar> {
    x.checked_div(&ExactScalar::pi_power(half_powers))
}

fn pow2(e: i64) -> Q {
    if e >= 0 {
        q(2).pow(e as i32)
    } else {
        q(1) / q(2).pow((-e) as i32)
    }
}

/// `(1/(n! k!^n)) prod_j (k+jk)! G(alpha+1+jk)`.
fn gamma_family(n: usize, k: usize, alpha: u64) -> Q {
    let mut acc = q(1) / (factorial_q(n as u64) * factorial_q(k as u64).pow(n as i32));
    for j in 0..n as u64 {
        let kk = k as u64;
        acc *= factorial_q(kk + j * kk) * factorial_q(alpha + j * kk);
    }
    acc
}

/// Closed-form `D_{n;r}^{(k)}` of a family.
pub fn closed_form_hankel(family: &SequenceFamily, n: usize, k: usize, r: usize) -> Result<Value> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    let nf = factorial_q(n as u64);
    let half = qf(1, 2);
    let e = (k * n * (n - 1)) as i64;
    let scalar = |x: ExactScalar| Ok(Value::Scalar(x));
    match family {
        SequenceFamily::Factorial => scalar(gamma_family(n, k, r as u64).into()),
        SequenceFamily::GammaShifted(alpha) => {
            scalar(gamma_family(n, k, *alpha as u64 + r as u64).into())
        }
        SequenceFamily::Catalan => {
            let s = selberg_value(&SelbergParams::new(n, q(r as i64) + &half, qf(3, 2), k)?)?;
            let c = pow2(2 * e + (n * (2 * r + 1)) as i64) / &nf;
            scalar(pi_inverse(s.scale(&c), 2 * n as u32)?)
        }
        SequenceFamily::CentralBinomial => {
            let s = selberg_value(&SelbergParams::new(n, q(r as i64) + &half, half.clone(), k)?)?;
            let c = pow2(2 * (e + (n * r) as i64)) / &nf;
            scalar(pi_inverse(s.scale(&c), 2 * n as u32)?)
        }
        SequenceFamily::TwoNOverN => {
            let ls = laguerre_selberg_value(n, &(q(r as i64) + &half), k)?;
            let c = pow2(2 * (n * (k * (n - 1) + r)) as i64) / &nf;
            scalar(pi_inverse(ls.scale(&c), n as u32)?)
        }
        SequenceFamily::Hilbert => {
            closed_form_hankel(&SequenceFamily::HilbertShifted(q(0)), n, k, r)
        }
        SequenceFamily::HilbertShifted(a) => {
            let s = selberg_value(&SelbergParams::new(n, q(1 + r as i64) + a, q(1), k)?)?;
            scalar(s.scale(&(q(1) / &nf)))
        }
        SequenceFamily::InverseFactorial => {
            if r != 0 {
                return Err(Error::Unsupported(
                    "shifted inverse factorials have no closed form".into(),
                ));
            }
            scalar(inverse_factorial_closed(n, k).into())
        }
        SequenceFamily::Bell(a) => {
            if k != 1 {
                return Err(Error::Unsupported(format!(
                    "Bell hyperdeterminants have no closed form for k = {k}"
                )));
            }
            let p = bell_wronskian(n, r)?;
            match a {
                None => Ok(poly_value(&p)),
                Some(v) => scalar(p.eval(v).into()),
            }
        }
        SequenceFamily::PochhammerRatio(a, b) => {
            // c_{m+r} = ((a)_r/(b)_r) (a+r)_m/(b+r)_m
            let pre = (pochhammer(a, r) / pochhammer(b, r)).pow(n as i32);
            let ar = a + q(r as i64);
            let br = b + q(r as i64);
            let s = selberg_value(&SelbergParams::new(n, ar.clone(), &br - &ar, k)?)?;
            let bn = beta_value(&ar, &(&br - &ar))?.pow(n as u32);
            scalar(s.checked_div(&bn)?.scale(&(pre / &nf)))
        }
    }
}

/// `I(k,n) = (-1)^{kn(n-1)/2} (kn)! / (n! k!^n) prod_i (ki)! / (k(n+i-1))!`.
pub fn inverse_factorial_closed(n: usize, k: usize) -> Q {
    let kk = k as u64;
    let nn = n as u64;
    let mut acc = factorial_q(kk * nn) / (factorial_q(nn) * factorial_q(kk).pow(n as i32));
    for i in 0..nn {
        acc = acc * factorial_q(kk * i) / factorial_q(kk * (nn + i - 1));
    }
    if (k * n * (n - 1) / 2) % 2 == 1 {
        acc = -acc;
    }
    acc
}

/// `F(n,k) = (1/(n! k!^n)) prod_j (k+kj)! (kj)!`.
pub fn factorial_closed(n: usize, k: usize) -> Q {
    gamma_family(n, k, 0)
}

/// `H(k,n) = S_n(1,1,k)/n!`.
pub fn hilbert_closed(n: usize, k: usize) -> Result<Q> {
    let s = selberg_value(&SelbergParams::new(n, q(1), q(1), k)?)?;
    s.as_rational()
        .map(|v| v / factorial_q(n as u64))
        .ok_or_else(|| Error::Domain("Hilbert value is not rational".into()))
}

/// `a^{n(n-1)/2} W(b_r, .., b_{r+n-1})(a)`.
pub fn bell_wronskian(n: usize, r: usize) -> Result<UniPoly> {
    let b = bell_polys(r + n);
    let w = wronskian(&b[r..r + n])?;
    Ok(UniPoly::monomial("a", q(1), n * (n - 1) / 2).mul_ref(&w).with_var("a"))
}

/// Product form of the Catalan hyperdeterminant:
/// `2^{kn(n-1)}/(n! k!^n) prod_j (k+kj)! (2kj+1)!! (2kj-1)!! / (1+k(n+j-1))!`.
pub fn catalan_product(n: usize, k: usize) -> Q {
    let mut acc = pow2((k * n * (n - 1)) as i64)
        / (factorial_q(n as u64) * factorial_q(k as u64).pow(n as i32));
    for j in 0..n {
        let kj = (k * j) as i64;
        acc = acc
            * factorial_q((k + k * j) as u64)
            * Q::from(double_factorial(2 * kj + 1) * double_factorial(2 * kj - 1))
            / factorial_q((1 + k * (n + j - 1)) as u64);
    }
    acc
}

/// Product form for `(2n)!/n!`:
/// `2^{3kn(n-1)/2+rn}/(n! k!^n) prod_j (k(1+j))! (2(kj+r)-1)!!`.
pub fn two_n_over_n_product(n: usize, k: usize, r: usize) -> Q {
    let mut acc = pow2((3 * k * n * (n - 1) / 2 + r * n) as i64)
        / (factorial_q(n as u64) * factorial_q(k as u64).pow(n as i32));
    for j in 0..n {
        acc = acc
            * factorial_q((k * (1 + j)) as u64)
            * Q::from(double_factorial(2 * (k * j + r) as i64 - 1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: Value) -> Q {
        v.as_scalar().and_then(|s| s.as_rational().cloned()).expect("rational value")
    }

    #[test]
    fn spot_values() {
        assert_eq!(rat(closed_form_hankel(&SequenceFamily::Factorial, 2, 2, 0).unwrap()), q(12));
        assert_eq!(rat(closed_form_hankel(&SequenceFamily::Hilbert, 2, 1, 0).unwrap()), qf(1, 12));
        assert_eq!(
            rat(closed_form_hankel(&SequenceFamily::InverseFactorial, 2, 2, 0).unwrap()),
            qf(1, 8)
        );
        assert_eq!(rat(closed_form_hankel(&SequenceFamily::Catalan, 2, 1, 0).unwrap()), q(1));
        assert_eq!(rat(hankel_family(&SequenceFamily::Catalan, 2, 2, 0).unwrap()), q(6));
        for k in 1..5 {
            let h = rat(closed_form_hankel(&SequenceFamily::Hilbert, 2, k, 0).unwrap());
            let kk = k as i64;
            assert_eq!(h, qf(1, (2 * kk + 1) * (2 * kk + 2)));
        }
    }

    #[test]
    fn closed_equals_fast_small() {
        let fams = [
            SequenceFamily::Factorial,
            SequenceFamily::GammaShifted(2),
            SequenceFamily::Catalan,
            SequenceFamily::CentralBinomial,
            SequenceFamily::TwoNOverN,
            SequenceFamily::Hilbert,
            SequenceFamily::HilbertShifted(qf(1, 2)),
            SequenceFamily::PochhammerRatio(q(1), qf(7, 2)),
        ];
        for f in &fams {
            for n in 1..=3 {
                for k in 1..=2 {
                    for r in 0..=2 {
                        let a = closed_form_hankel(f, n, k, r).unwrap();
                        let b = hankel_family(f, n, k, r).unwrap();
                        assert_eq!(a, b, "{f} n={n} k={k} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn bell_k1() {
        for n in 1..=4 {
            for r in 0..=2 {
                assert_eq!(
                    closed_form_hankel(&SequenceFamily::Bell(None), n, 1, r).unwrap(),
                    hankel_family(&SequenceFamily::Bell(None), n, 1, r).unwrap()
                );
            }
        }
        assert!(closed_form_hankel(&SequenceFamily::Bell(None), 2, 2, 0).is_err());
    }

    #[test]
    fn product_forms() {
        for n in 1..=4 {
            for k in 1..=2 {
                let c = rat(hankel_family(&SequenceFamily::Catalan, n, k, 0).unwrap());
                assert_eq!(catalan_product(n, k), c);
                for r in 0..=2 {
                    let t = rat(hankel_family(&SequenceFamily::TwoNOverN, n, k, r).unwrap());
                    assert_eq!(two_n_over_n_product(n, k, r), t);
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["factorial", "gamma_shifted:3", "hilbert_shifted:1/2", "bell", "bell:2", "pochhammer_ratio:1,3"] {
            let f: SequenceFamily = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("central-binomial".parse::<SequenceFamily>().is_ok());
        assert!("nope".parse::<SequenceFamily>().is_err());
        assert!("factorial:1".parse::<SequenceFamily>().is_err());
    }
}
