use std::fmt;
use std::str::FromStr;

use crate::exact::{fmt_q, parse_q, q, vars, MultiPoly, Vars, Q};
use crate::orthopoly::ClassicalTag;
use crate::{Error, Result};

/// Orthogonal polynomial families whose values `c_m = Q_m(x)` form the moments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TuranianFamily {
    /// Standard Legendre `P_m`.
    Legendre,
    /// `1F1(-m; alpha+1; x)`.
    Laguerre { alpha: Q },
    /// Monic Hermite.
    Hermite,
    /// Monic Charlier `C_m^{(a)}(x)`; `None` keeps `a` symbolic.
    Charlier { a: Option<Q> },
    /// `M_m(-x; beta, gamma) = 2F1(-m, x; beta; 1 - 1/gamma)`.
    Meixner { beta: Q, gamma: Q },
    /// `K_m(x; p, N) = 2F1(-m, -x; -N; 1/p)`.
    Krawtchouk { p: Q, n: Q },
}

/// A Hankel hyperdeterminant `D_{n;r}^{(k)}` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranianSpec {
    pub family: TuranianFamily,
    pub n: usize,
    pub k: usize,
    pub r: usize,
}

impl TuranianSpec {
    pub fn new(family: TuranianFamily, n: usize, k: usize, r: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Domain("Turanian needs n >= 1 and k >= 1".into()));
        }
        family.validate()?;
        Ok(TuranianSpec { family, n, k, r })
    }

    /// Highest moment index used.
    pub fn top(&self) -> usize {
        2 * self.k * (self.n - 1) + self.r
    }
}

fn non_pole(x: &Q) -> bool {
    !(x.is_integer() && *x <= q(0))
}

impl TuranianFamily {
    pub fn name(&self) -> &'static str {
        match self {
            TuranianFamily::Legendre => "legendre",
            TuranianFamily::Laguerre { .. } => "laguerre",
            TuranianFamily::Hermite => "hermite",
            TuranianFamily::Charlier { .. } => "charlier",
            TuranianFamily::Meixner { .. } => "meixner",
            TuranianFamily::Krawtchouk { .. } => "krawtchouk",
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            TuranianFamily::Laguerre { alpha } if !non_pole(&(alpha + q(1))) => {
                Err(Error::Domain("Laguerre needs alpha + 1 off the nonpositive integers".into()))
            }
            TuranianFamily::Meixner { beta, gamma } => {
                if !non_pole(beta) {
                    Err(Error::Domain("Meixner needs beta off the nonpositive integers".into()))
                } else if *gamma == q(0) || *gamma == q(1) {
                    Err(Error::Domain("Meixner needs gamma not in {0, 1}".into()))
                } else {
                    Ok(())
                }
            }
            TuranianFamily::Krawtchouk { p, .. } if *p == q(0) || *p == q(1) => {
                Err(Error::Domain("Krawtchouk needs p not in {0, 1}".into()))
            }
            _ => Ok(()),
        }
    }

    /// `["x"]`, or `["x", "a"]` for symbolic Charlier.
    pub fn vars(&self) -> Vars {
        match self {
            TuranianFamily::Charlier { a: None } => vars(&["x", "a"]),
            _ => vars(&["x"]),
        }
    }

    pub(crate) fn classical_tag(&self) -> ClassicalTag {
        let c = |v: &Q| MultiPoly::constant(v.clone());
        match self {
            TuranianFamily::Legendre => ClassicalTag::Legendre,
            TuranianFamily::Laguerre { alpha } => ClassicalTag::Laguerre { alpha: c(alpha) },
            TuranianFamily::Hermite => ClassicalTag::Hermite,
            TuranianFamily::Charlier { a } => ClassicalTag::Charlier {
                a: a.as_ref().map(c).unwrap_or_else(|| MultiPoly::symbol("a")),
            },
            TuranianFamily::Meixner { beta, gamma } => {
                ClassicalTag::Meixner { beta: c(beta), gamma: c(gamma) }
            }
            TuranianFamily::Krawtchouk { p, n } => ClassicalTag::Krawtchouk { p: c(p), n: c(n) },
        }
    }

    pub fn is_symbolic_charlier(&self) -> bool {
        matches!(self, TuranianFamily::Charlier { a: None })
    }
}

impl fmt::Display for TuranianFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TuranianFamily::Laguerre { alpha } => write!(f, "laguerre:{}", fmt_q(alpha)),
            TuranianFamily::Charlier { a: Some(a) } => write!(f, "charlier:{}", fmt_q(a)),
            TuranianFamily::Meixner { beta, gamma } => {
                write!(f, "meixner:{},{}", fmt_q(beta), fmt_q(gamma))
            }
            TuranianFamily::Krawtchouk { p, n } => {
                write!(f, "krawtchouk:{},{}", fmt_q(p), fmt_q(n))
            }
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for TuranianFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a)),
            None => (s.trim(), None),
        };
        let params: Vec<Q> = match args {
            Some(a) => a
                .split(',')
                .map(|t| parse_q(t.trim()).ok_or_else(|| Error::Parse(format!("bad number {t:?}"))))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        let arity = |want: &[usize]| {
            if want.contains(&params.len()) {
                Ok(())
            } else {
                Err(Error::Parse(format!("{name} takes {want:?} parameters, got {}", params.len())))
            }
        };
        let fam = match name.to_ascii_lowercase().as_str() {
            "legendre" => {
                arity(&[0])?;
                TuranianFamily::Legendre
            }
            "laguerre" => {
                arity(&[1])?;
                TuranianFamily::Laguerre { alpha: params[0].clone() }
            }
            "hermite" => {
                arity(&[0])?;
                TuranianFamily::Hermite
            }
            "charlier" => {
                arity(&[0, 1])?;
                TuranianFamily::Charlier { a: params.first().cloned() }
            }
            "meixner" => {
                arity(&[2])?;
                TuranianFamily::Meixner { beta: params[0].clone(), gamma: params[1].clone() }
            }
            "krawtchouk" => {
                arity(&[2])?;
                TuranianFamily::Krawtchouk { p: params[0].clone(), n: params[1].clone() }
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        fam.validate()?;
        Ok(fam)
    }
}
