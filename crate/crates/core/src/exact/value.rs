use std::fmt;

use super::multipoly::MultiPoly;
use super::scalar::ExactScalar;

/// A scalar-like result: exact scalar or polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(ExactScalar),
    Poly(MultiPoly),
}

impl Value {
    /// Collapses constant polynomials to scalars.
    pub fn normalized(self) -> Value {
        match self {
            Value::Poly(p) => match p.as_constant() {
                Some(c) => Value::Scalar(ExactScalar::rational(c)),
                None => Value::Poly(p),
            },
            s => s,
        }
    }

    pub fn as_scalar(&self) -> Option<&ExactScalar> {
        match self {
            Value::Scalar(s) => Some(s),
            Value::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        match self {
            Value::Poly(p) => Some(p),
            Value::Scalar(_) => None,
        }
    }
}

impl From<ExactScalar> for Value {
    fn from(s: ExactScalar) -> Self {
        Value::Scalar(s)
    }
}

impl From<MultiPoly> for Value {
    fn from(p: MultiPoly) -> Self {
        Value::Poly(p).normalized()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}
