use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational.
pub type Q = BigRational;

/// Commutative ring with exact division where it exists.
///
/// Kernels in this crate are generic over `Ring`; every concrete value type
/// (rationals, univariate and multivariate polynomials, rational functions)
/// implements it.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(q: &Q) -> Self;
    /// Exact quotient, `None` when `other` does not divide `self`.
    fn try_div(&self, other: &Self) -> Option<Self>;

    fn from_int(i: i64) -> Self {
        Self::from_rational(&Q::from_integer(BigInt::from(i)))
    }

    fn from_bigint(i: &BigInt) -> Self {
        Self::from_rational(&Q::from_integer(i.clone()))
    }

    fn scale(&self, q: &Q) -> Self {
        self.mul_ref(&Self::from_rational(q))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn scale(&self, q: &Q) -> Self {
        self * q
    }
}

/// Sum of an iterator of ring elements.
pub fn ring_sum<R: Ring, I: IntoIterator<Item = R>>(it: I) -> R {
    it.into_iter().fold(R::zero(), |a, b| a.add_ref(&b))
}

/// Product of an iterator of ring elements.
pub fn ring_product<R: Ring, I: IntoIterator<Item = R>>(it: I) -> R {
    it.into_iter().fold(R::one(), |a, b| a.mul_ref(&b))
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` text, integers without denominator.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        Some(Q::new(a, b))
    } else {
        let a: BigInt = s.parse().ok()?;
        Some(Q::from_integer(a))
    }
}

pub(crate) fn is_half_integer_or_integer(x: &Q) -> bool {
    let d = x.denom();
    d.is_one() || *d == BigInt::from(2)
}

