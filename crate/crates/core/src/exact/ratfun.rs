use std::fmt;


use super::multipoly::MultiPoly;
use super::ring::{Ring, Q};

/// Quotient of two multivariate polynomials.
///
/// Normalized so that the denominator's lex-leading coefficient is 1, and
/// collapsed to denominator 1 whenever the division is exact. Equality is by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: MultiPoly::one(),
            };
        }
        if let Some(q) = num.try_div(&den) {
            return RationalFunction {
                num: q,
                den: MultiPoly::one(),
            };
        }
        let lead = den
            .terms()
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::one);
        let inv = Q::one() / lead;
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    /// The polynomial value when the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<MultiPoly> {
        self.num.try_div(&self.den)
    }

    pub fn inv(&self) -> Self {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul_ref(&other.den) == other.num.mul_ref(&self.den)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RationalFunction::new(self.num.add_ref(&o.num), self.den.clone());
        }
        RationalFunction::new(
            self.num.mul_ref(&o.den).add_ref(&o.num.mul_ref(&self.den)),
            self.den.mul_ref(&o.den),
        )
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den))
    }
    fn neg_ref(&self) -> Self {
        RationalFunction {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
    fn from_rational(q: &Q) -> Self {
        Self::from_poly(MultiPoly::constant(q.clone()))
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        Some(self.mul_ref(&o.inv()))
    }
    fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
