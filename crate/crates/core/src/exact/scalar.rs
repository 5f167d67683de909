use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::{fmt_q, is_half_integer_or_integer, parse_q, q, Q};
use crate::{Error, Result};

/// `coeff * pi^(pi_half_power / 2)`.
///
/// Zero is stored with `pi_half_power = 0` and adds to anything.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    coeff: Q,
    pi_half_power: u32,
}

impl ExactScalar {
    pub fn new(coeff: Q, pi_half_power: u32) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            ExactScalar {
                coeff,
                pi_half_power,
            }
        }
    }

    pub fn rational(coeff: Q) -> Self {
        Self::new(coeff, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::rational(q(n))
    }

    pub fn zero() -> Self {
        ExactScalar {
            coeff: Q::zero(),
            pi_half_power: 0,
        }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `sqrt(pi)^m`.
    pub fn pi_power(m: u32) -> Self {
        Self::new(Q::one(), m)
    }

    pub fn coeff(&self) -> &Q {
        &self.coeff
    }

    pub fn pi_half_power(&self) -> u32 {
        self.pi_half_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.pi_half_power == 0
    }

    /// The rational value, if no power of pi is attached.
    pub fn as_rational(&self) -> Option<&Q> {
        if self.is_rational() {
            Some(&self.coeff)
        } else {
            None
        }
    }

    fn match_power(&self, other: &Self) -> Result<u32> {
        if self.is_zero() {
            Ok(other.pi_half_power)
        } else if other.is_zero() || self.pi_half_power == other.pi_half_power {
            Ok(self.pi_half_power)
        } else {
            Err(Error::PiPowerMismatch(
                self.pi_half_power,
                other.pi_half_power,
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let p = self.match_power(other)?;
        Ok(Self::new(&self.coeff + &other.coeff, p))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let p = self.match_power(other)?;
        Ok(Self::new(&self.coeff - &other.coeff, p))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.coeff * &other.coeff,
            self.pi_half_power + other.pi_half_power,
        )
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(&self.coeff * c, self.pi_half_power)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.coeff, self.pi_half_power)
    }

    /// Division; fails on a zero divisor or when the pi power would go negative.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if other.pi_half_power > self.pi_half_power {
            return Err(Error::Domain(format!(
                "negative power of pi: {} - {}",
                self.pi_half_power, other.pi_half_power
            )));
        }
        Ok(Self::new(
            &self.coeff / &other.coeff,
            self.pi_half_power - other.pi_half_power,
        ))
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let c = num_traits::pow::Pow::pow(&self.coeff, e);
        Self::new(c, self.pi_half_power * e)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_half_power == 0 {
            write!(f, "{}", fmt_q(&self.coeff))
        } else {
            write!(
                f,
                "{}*pi^({}/2)",
                fmt_q(&self.coeff),
                self.pi_half_power
            )
        }
    }
}

impl FromStr for ExactScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an exact scalar: {s:?}"));
        if let Some((c, p)) = s.split_once("*pi^(") {
            let p = p.strip_suffix(')').ok_or_else(bad)?;
            let m = p.strip_suffix("/2").ok_or_else(bad)?;
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            let c = parse_q(c).ok_or_else(bad)?;
            Ok(Self::new(c, m))
        } else {
            Ok(Self::rational(parse_q(s).ok_or_else(bad)?))
        }
    }
}

impl From<Q> for ExactScalar {
    fn from(c: Q) -> Self {
        Self::rational(c)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

pub fn factorial_q(n: u64) -> Q {
    Q::from_integer(factorial(n))
}

/// `n!!` with `(-1)!! = 1` and `0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial of {n}");
    let mut acc = BigInt::one();
    let mut m = n;
    while m > 1 {
        acc *= BigInt::from(m);
        m -= 2;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Rising factorial `(a)_n`.
pub fn pochhammer(a: &Q, n: usize) -> Q {
    let mut acc = Q::one();
    let mut x = a.clone();
    for _ in 0..n {
        acc *= &x;
        x += Q::one();
    }
    acc
}

/// Exact Gamma at positive integers and half-integers.
pub fn gamma_exact(x: &Q) -> Result<ExactScalar> {
    if !x.is_positive() || !is_half_integer_or_integer(x) {
        return Err(Error::Domain(format!("gamma at {}", fmt_q(x))));
    }
    if x.is_integer() {
        let n: u64 = x
            .numer()
            .try_into()
            .map_err(|_| Error::Domain("gamma argument too large".into()))?;
        return Ok(ExactScalar::rational(factorial_q(n - 1)));
    }
    // Gamma(m + 1/2) = (1/2)_m sqrt(pi)
    let m = x.floor();
    let m: usize = m
        .numer()
        .try_into()
        .map_err(|_| Error::Domain("gamma argument too large".into()))?;
    Ok(ExactScalar::new(pochhammer(&Q::new(1.into(), 2.into()), m), 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed numbers of the first kind.
    First,
    Second,
}

/// Stirling numbers by the triangular recurrences.
pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::Index(format!("stirling({n},{k}) with k > n")));
    }
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let left = &row[j - 1];
            let here = row.get(j).cloned().unwrap_or_default();
            next[j] = match kind {
                StirlingKind::First => left - BigInt::from(m - 1) * here,
                StirlingKind::Second => left + BigInt::from(j) * here,
            };
        }
        row = next;
    }
    Ok(row[k].clone())
}
