//! JSON encoding under the `hyperdet/1` schema.
//!
//! Scalars are strings in the `p/q` or `p/q*pi^(m/2)` form. Polynomials are
//! objects `{"vars": [...], "terms": {"e1,e2,..": "p/q"}}` with terms listed
//! in descending graded lexicographic order. Key order is fixed, so equal
//! values always encode to identical bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value as Json};

use crate::exact::{fmt_q, vars, ExactScalar, MultiPoly, Poly, RationalFunction, Value, Q};
use crate::hyperdet::{HyperTensor, MomentSequence};
use crate::symfun::{Partition, SymExpansion};
use crate::{Error, Result};

pub const SCHEMA: &str = "hyperdet/1";

pub fn q_json(x: &Q) -> Json {
    Json::String(fmt_q(x))
}

pub fn scalar_json(x: &ExactScalar) -> Json {
    Json::String(x.to_string())
}

fn exponent_key(e: &[u32]) -> String {
    e.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn poly_json(p: &MultiPoly) -> Json {
    let mut terms = Map::new();
    for (e, c) in p.grlex_terms().into_iter().rev() {
        terms.insert(exponent_key(e), q_json(c));
    }
    json!({ "vars": p.vars().to_vec(), "terms": terms })
}

pub fn unipoly_json(p: &Poly<Q>) -> Json {
    let mut terms = Map::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if !num_traits::Zero::is_zero(c) {
            terms.insert(i.to_string(), q_json(c));
        }
    }
    json!({ "vars": [p.var_name()], "terms": terms })
}

pub fn ratfun_json(f: &RationalFunction) -> Json {
    json!({ "numer": poly_json(f.numer()), "denom": poly_json(f.denom()) })
}

/// Constants encode as scalars, everything else as a polynomial object.
pub fn value_json(v: &Value) -> Json {
    match v.clone().normalized() {
        Value::Scalar(s) => scalar_json(&s),
        Value::Poly(p) => poly_json(&p),
    }
}

/// `{"basis": "s", "n": n, "terms": {"(3,1)": "-1", ..}}`, largest partition first.
pub fn expansion_json(e: &SymExpansion) -> Json {
    let mut terms = Map::new();
    for (lam, c) in e.terms() {
        terms.insert(lam.to_string(), q_json(c));
    }
    json!({ "basis": e.basis().symbol(), "n": e.vars_count(), "terms": terms })
}

/// Puts `"schema"` first, then the given fields in order.
pub fn envelope(fields: Map<String, Json>) -> Json {
    let mut m = Map::new();
    m.insert("schema".into(), Json::String(SCHEMA.into()));
    m.extend(fields);
    Json::Object(m)
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::PiPowerMismatch(..) => "pi_power_mismatch",
        Error::Index(_) => "index",
        Error::OrderMismatch { .. } => "order_mismatch",
        Error::InsufficientMoments { .. } => "insufficient_moments",
        Error::MissingOffset(_) => "missing_offset",
        Error::OddSize(_) => "odd_size",
        Error::Degenerate(_) => "degenerate",
        Error::NotOrthogonal(..) => "not_orthogonal",
        Error::Unsupported(_) => "unsupported",
        Error::InexactDivision(_) => "inexact_division",
        Error::PartitionTooLong(..) => "partition_too_long",
        Error::Parse(_) => "parse",
    }
}

pub fn error_json(e: &Error) -> Json {
    let mut m = Map::new();
    m.insert("error".into(), json!({ "kind": error_kind(e), "message": e.to_string() }));
    envelope(m)
}

fn parse_err(what: &str, v: &Json) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

/// Accepts integers and `p/q` or `p/q*pi^(m/2)` strings.
pub fn parse_scalar(v: &Json) -> Result<ExactScalar> {
    match v {
        Json::Number(n) => {
            let i = n.as_i64().ok_or_else(|| parse_err("an integer or exact string", v))?;
            Ok(ExactScalar::int(i))
        }
        Json::String(s) => s.parse(),
        _ => Err(parse_err("an integer or exact string", v)),
    }
}

pub fn parse_rational(v: &Json) -> Result<Q> {
    let s = parse_scalar(v)?;
    s.as_rational().cloned().ok_or(Error::PiPowerMismatch(s.pi_half_power(), 0))
}

/// Inverse of [`poly_json`]; exponent keys must have one entry per variable.
pub fn parse_poly(v: &Json) -> Result<MultiPoly> {
    let obj = v.as_object().ok_or_else(|| parse_err("a polynomial object", v))?;
    let names: Vec<String> = obj
        .get("vars")
        .and_then(Json::as_array)
        .ok_or_else(|| parse_err("a \"vars\" array", v))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| parse_err("a variable name", x)))
        .collect::<Result<_>>()?;
    let vs = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
    let terms = obj
        .get("terms")
        .and_then(Json::as_object)
        .ok_or_else(|| parse_err("a \"terms\" object", v))?;
    let mut out = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        let e: Vec<u32> = if k.trim().is_empty() {
            vec![]
        } else {
            k.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad exponent key {k:?}"))))
                .collect::<Result<_>>()?
        };
        if e.len() != names.len() {
            return Err(Error::Parse(format!("exponent key {k:?} does not match {} variables", names.len())));
        }
        out.push((e, parse_rational(c)?));
    }
    Ok(MultiPoly::from_terms(&vs, out))
}

/// A scalar or a polynomial object.
pub fn parse_value(v: &Json) -> Result<Value> {
    if v.is_object() {
        Ok(Value::from(parse_poly(v)?))
    } else {
        Ok(Value::Scalar(parse_scalar(v)?))
    }
}

/// Homogeneous entries, either all exact scalars or all polynomials over a
/// common variable list.
#[derive(Clone, Debug, PartialEq)]
pub enum Entries {
    Exact(Vec<ExactScalar>),
    Poly(Vec<MultiPoly>),
}

impl Entries {
    pub fn len(&self) -> usize {
        match self {
            Entries::Exact(v) => v.len(),
            Entries::Poly(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Rational entries promote to polynomials when any entry is a polynomial;
/// all polynomial entries are embedded into the union of their variables.
pub fn parse_entries(items: &[Json]) -> Result<Entries> {
    let vals: Vec<Value> = items.iter().map(parse_value).collect::<Result<_>>()?;
    if vals.iter().all(|v| v.as_scalar().is_some()) {
        return Ok(Entries::Exact(vals.into_iter().map(|v| v.as_scalar().cloned().expect("scalar")).collect()));
    }
    let mut names: Vec<String> = vec![];
    for v in &vals {
        if let Some(p) = v.as_poly() {
            for x in p.vars().iter() {
                if !names.contains(x) {
                    names.push(x.clone());
                }
            }
        }
    }
    let vs = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
    let polys = vals
        .into_iter()
        .map(|v| match v {
            Value::Poly(p) => Ok(p.embed(&vs)),
            Value::Scalar(s) => {
                let c = s.as_rational().cloned().ok_or(Error::PiPowerMismatch(s.pi_half_power(), 0))?;
                Ok(MultiPoly::constant_in(&vs, c))
            }
        })
        .collect::<Result<_>>()?;
    Ok(Entries::Poly(polys))
}

fn field_usize(obj: &Map<String, Json>, key: &str, default: Option<usize>) -> Result<usize> {
    match obj.get(key) {
        Some(v) => v
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| parse_err(&format!("a nonnegative integer for \"{key}\""), v)),
        None => default.ok_or_else(|| Error::Parse(format!("missing field \"{key}\""))),
    }
}

fn field_array<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a Vec<Json>> {
    obj.get(key)
        .and_then(Json::as_array)
        .ok_or_else(|| Error::Parse(format!("missing array \"{key}\"")))
}

fn as_object<'a>(v: &'a Json, what: &str) -> Result<&'a Map<String, Json>> {
    v.as_object().ok_or_else(|| parse_err(what, v))
}

/// `{"moments": [...], "n": int, "k": int, "r": int}`; `r` defaults to 0.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelInput {
    pub moments: Entries,
    pub n: usize,
    pub k: usize,
    pub r: usize,
}

pub fn parse_hankel_input(v: &Json) -> Result<HankelInput> {
    let obj = as_object(v, "a Hankel input object")?;
    Ok(HankelInput {
        moments: parse_entries(field_array(obj, "moments")?)?,
        n: field_usize(obj, "n", None)?,
        k: field_usize(obj, "k", None)?,
        r: field_usize(obj, "r", Some(0))?,
    })
}

/// `{"order": 2k, "dim": n, "entries": [...]}` with entries in row-major order.
pub fn parse_tensor(v: &Json) -> Result<(usize, usize, Entries)> {
    let obj = as_object(v, "a tensor object")?;
    let order = field_usize(obj, "order", None)?;
    let dim = field_usize(obj, "dim", None)?;
    let entries = parse_entries(field_array(obj, "entries")?)?;
    let expected = dim.checked_pow(order as u32).ok_or_else(|| Error::Domain("tensor too large".into()))?;
    if entries.len() != expected {
        return Err(Error::Domain(format!("tensor needs {expected} entries, got {}", entries.len())));
    }
    Ok((order, dim, entries))
}

pub fn tensor_json<R: Clone>(t: &HyperTensor<R>, enc: impl Fn(&R) -> Json) -> Json {
    json!({
        "order": t.order(),
        "dim": t.dim(),
        "entries": t.entries().iter().map(enc).collect::<Vec<_>>(),
    })
}

pub fn moments_json<R: Clone>(c: &MomentSequence<R>, enc: impl Fn(&R) -> Json) -> Json {
    Json::Array(c.moments().iter().map(enc).collect())
}

/// `{"f": {"offset": value, ..}, "n": int, "k": int}` for Toeplitz input.
pub fn parse_toeplitz(v: &Json) -> Result<(BTreeMap<i64, Json>, usize, usize)> {
    let obj = as_object(v, "a Toeplitz input object")?;
    let f = obj
        .get("f")
        .and_then(Json::as_object)
        .ok_or_else(|| Error::Parse("missing object \"f\"".into()))?;
    let mut out = BTreeMap::new();
    for (key, val) in f {
        let off: i64 = key.trim().parse().map_err(|_| Error::Parse(format!("bad offset {key:?}")))?;
        out.insert(off, val.clone());
    }
    Ok((out, field_usize(obj, "n", None)?, field_usize(obj, "k", None)?))
}

/// Parses a partition-string key as written by [`expansion_json`].
pub fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

/// Compact, key-order preserving serialization followed by a newline.
pub fn to_line(v: &Json) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_str(s: &str) -> Result<Json> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
