use std::collections::BTreeMap;

use hyperdet_core::exact::{parse_q, vars, ExactScalar, MultiPoly, Poly, UniPoly, Q};
use hyperdet_core::hyperdet::{
    det4_via_pfaffian, det_even, det_even_exact, det_plus, det_plus_exact, hankel_fast,
    hankel_fast_exact, toeplitz_det, HyperTensor, MomentSequence,
};
use hyperdet_core::json::{
    envelope, expansion_json, parse_entries, parse_hankel_input, parse_str, parse_tensor,
    parse_toeplitz, poly_json, q_json, scalar_json, unipoly_json, value_json, Entries,
};
use hyperdet_core::kaneko::{kaneko_check, JacobiRoute, PiPoly};
use hyperdet_core::orthopoly::{
    bell_polys, karlin_szego_check, monic_from_moments, sequence_transform_check, MomentFunctional,
    SequenceTransform,
};
use hyperdet_core::selberg::{
    appendix_a_consistency, closed_form_hankel, hankel_family, pseudo_bruteforce,
    pseudo_closed_form, FamilyMoments, PseudoCase, SequenceFamily,
};
use hyperdet_core::symfun::{
    hankel_hyperdet_schur, ubiquitous_identities, Basis, UbiquitousCase,
};
use hyperdet_core::turanians::{
    turanian_bruteforce, turanian_closed_form, turanian_route, TuranianFamily, TuranianRoute,
    TuranianSpec,
};
use hyperdet_core::{Error, Ring, Value};
use serde_json::{json, Map, Value as Json};

use crate::{Command, IdentityCase, InputArgs, JacobiArg, PseudoArg, RouteArg};

/// Usage problems exit with status 2, everything else with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Named fields, each with its JSON encoding and a plain rendering.
#[derive(Default)]
pub struct Output {
    fields: Vec<(String, Json, String)>,
}

impl Output {
    fn push(&mut self, key: &str, j: Json, text: impl Into<String>) -> &mut Self {
        self.fields.push((key.to_string(), j, text.into()));
        self
    }

    fn value(&mut self, key: &str, v: &Value) -> &mut Self {
        self.push(key, value_json(v), v.to_string())
    }

    fn scalar(&mut self, key: &str, v: &ExactScalar) -> &mut Self {
        self.push(key, scalar_json(v), v.to_string())
    }

    fn rational(&mut self, key: &str, v: &Q) -> &mut Self {
        self.scalar(key, &ExactScalar::rational(v.clone()))
    }

    fn poly(&mut self, key: &str, p: &MultiPoly) -> &mut Self {
        match p.as_constant() {
            Some(c) => self.rational(key, &c),
            None => self.push(key, poly_json(p), p.to_string()),
        }
    }

    fn unipoly(&mut self, key: &str, p: &UniPoly) -> &mut Self {
        if p.degree().unwrap_or(0) == 0 {
            self.rational(key, &p.coeff(0))
        } else {
            self.push(key, unipoly_json(p), p.to_string())
        }
    }

    fn pipoly(&mut self, key: &str, p: &PiPoly) -> &mut Self {
        let inner = match p.poly.as_constant() {
            Some(c) => q_json(&c),
            None => poly_json(&p.poly),
        };
        self.push(key, json!({ "pi_half_power": p.pi_half_power, "poly": inner }), p.to_string())
    }

    fn flag(&mut self, key: &str, b: bool) -> &mut Self {
        self.push(key, Json::Bool(b), b.to_string())
    }

    pub fn to_json(&self) -> Json {
        let mut m = Map::new();
        for (k, j, _) in &self.fields {
            m.insert(k.clone(), j.clone());
        }
        envelope(m)
    }

    /// A lone `value` prints bare; otherwise one `key: value` line per field.
    pub fn to_text(&self) -> String {
        if let [(k, _, t)] = &self.fields[..] {
            if k == "value" {
                return format!("{t}\n");
            }
        }
        self.fields.iter().map(|(k, _, t)| format!("{k}: {t}\n")).collect()
    }
}

fn read_input(input: &InputArgs) -> Res<Json> {
    let text = match (&input.input, &input.json) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(s)) => s.clone(),
        _ => return Err(Failure::Usage("give exactly one of --input or --json".into())),
    };
    Ok(parse_str(&text)?)
}

fn need<T>(v: Option<T>, name: &str) -> Res<T> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn rational_arg(s: &str, name: &str) -> Res<Q> {
    parse_q(s).ok_or_else(|| Failure::Usage(format!("--{name} must be a rational p/q, got {s:?}")))
}

fn exact_to_q(v: Vec<ExactScalar>) -> Res<Vec<Q>> {
    v.into_iter()
        .map(|s| {
            s.as_rational()
                .cloned()
                .ok_or(Failure::Domain(Error::PiPowerMismatch(s.pi_half_power(), 0)))
        })
        .collect()
}

fn check_pair<T: PartialEq>(out: &mut Output, l: &T, r: &T) -> Output {
    out.flag("equal", l == r);
    std::mem::take(out)
}

/// A polynomial in `y` with coefficients in `a`, as one polynomial in `(y, a)`.
fn flatten_bivariate(p: &Poly<UniPoly>) -> MultiPoly {
    let vs = vars(&["y", "a"]);
    let terms = p.coeffs().iter().enumerate().flat_map(|(i, c)| {
        c.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(j, x)| (vec![i as u32, j as u32], x.clone()))
            .collect::<Vec<_>>()
    });
    MultiPoly::from_terms(&vs, terms)
}

pub trait Run {
    fn run(self) -> Res<Output>;
}

impl Run for Command {
    fn run(self) -> Res<Output> {
        let mut out = Output::default();
        match self {
            Command::Det { input } => {
                let (order, dim, entries) = parse_tensor(&read_input(&input)?)?;
                let v = match entries {
                    Entries::Exact(e) => {
                        let t = HyperTensor::new(order, dim, e)?;
                        Value::Scalar(if order % 2 == 0 {
                            det_even_exact(&t, order / 2)?
                        } else {
                            det_plus_exact(&t)?
                        })
                    }
                    Entries::Poly(e) => {
                        let t = HyperTensor::new(order, dim, e)?;
                        Value::from(if order % 2 == 0 { det_even(&t, order / 2)? } else { det_plus(&t)? })
                    }
                };
                out.value("value", &v);
            }
            Command::Hankel { input, family, n, k, r } => {
                let v = match family {
                    Some(tag) => {
                        let fam: SequenceFamily = tag.parse()?;
                        hankel_family(&fam, need(n, "n")?, need(k, "k")?, r.unwrap_or(0))?
                    }
                    None => {
                        let h = parse_hankel_input(&read_input(&input)?)?;
                        let (n, k, r) = (n.unwrap_or(h.n), k.unwrap_or(h.k), r.unwrap_or(h.r));
                        match h.moments {
                            Entries::Exact(c) => {
                                Value::Scalar(hankel_fast_exact(&MomentSequence::new(c), n, k, r)?)
                            }
                            Entries::Poly(c) => Value::from(hankel_fast(&MomentSequence::new(c), n, k, r)?),
                        }
                    }
                };
                out.value("value", &v);
            }
            Command::Toeplitz { input } => {
                let (f, n, k) = parse_toeplitz(&read_input(&input)?)?;
                let offsets: Vec<i64> = f.keys().copied().collect();
                let vals: Vec<Json> = f.into_values().collect();
                let v = match parse_entries(&vals)? {
                    Entries::Exact(e) => {
                        let m: BTreeMap<i64, Q> = offsets.into_iter().zip(exact_to_q(e)?).collect();
                        Value::Scalar(ExactScalar::rational(toeplitz_det(&m, n, k)?))
                    }
                    Entries::Poly(e) => {
                        let m: BTreeMap<i64, MultiPoly> = offsets.into_iter().zip(e).collect();
                        Value::from(toeplitz_det(&m, n, k)?)
                    }
                };
                out.value("value", &v);
            }
            Command::Pfaffian4 { family, n, r } => {
                let fam: SequenceFamily = family.parse()?;
                if n == 0 {
                    return Err(Error::Domain("n must be positive".into()).into());
                }
                let len = 4 * n + r + 2;
                match fam.moments(len)? {
                    FamilyMoments::Rational(mu) => {
                        let polys = monic_from_moments(&MomentFunctional::new(mu.moments().to_vec()), 2 * n)?;
                        let pf = det4_via_pfaffian(&mu, &polys, n, r)?;
                        let hk = hankel_fast(&mu, n, 2, r)?;
                        out.rational("value", &pf).rational("hankel", &hk);
                        return Ok(check_pair(&mut out, &pf, &hk));
                    }
                    FamilyMoments::Poly(mu) => {
                        let polys = monic_from_moments(&MomentFunctional::new(mu.moments().to_vec()), 2 * n)?;
                        let pf = det4_via_pfaffian(&mu, &polys, n, r)?;
                        let hk = hankel_fast(&mu, n, 2, r)?;
                        out.unipoly("value", &pf).unipoly("hankel", &hk);
                        return Ok(check_pair(&mut out, &pf, &hk));
                    }
                }
            }
            Command::ClosedForm { family, n, k, r } => {
                let fam: SequenceFamily = family.parse()?;
                out.value("value", &closed_form_hankel(&fam, n, k, r)?);
            }
            Command::Turanian { family, n, k, r, route, bruteforce } => {
                let fam: TuranianFamily = family.parse()?;
                let spec = TuranianSpec::new(fam, n, k, r)?;
                let closed = match route {
                    None => turanian_closed_form(&spec)?,
                    Some(rt) => turanian_route(
                        &spec,
                        match rt {
                            RouteArg::Product => TuranianRoute::Product,
                            RouteArg::Jacobi => TuranianRoute::Jacobi,
                            RouteArg::Wronskian => TuranianRoute::Wronskian,
                            RouteArg::Integral => TuranianRoute::Integral,
                        },
                    )?,
                };
                out.poly("value", &closed);
                if bruteforce {
                    let b = turanian_bruteforce(&spec)?;
                    out.poly("bruteforce", &b);
                    return Ok(check_pair(&mut out, &closed, &b));
                }
            }
            Command::KanekoCheck { n, r, a, b, k, route } => {
                let (a, b) = (rational_arg(&a, "a")?, rational_arg(&b, "b")?);
                let route = match route {
                    JacobiArg::Printed => JacobiRoute::GramSchmidtPrinted,
                    JacobiArg::Operator => JacobiRoute::Operator,
                };
                let (l, rh) = kaneko_check(n, r, &a, &b, k, route)?;
                out.pipoly("lhs", &l).pipoly("rhs", &rh);
                return Ok(check_pair(&mut out, &l, &rh));
            }
            Command::Schur { n, k, basis } => {
                let basis: Basis = basis.parse()?;
                let rep = hankel_hyperdet_schur(n, k)?;
                let e = rep.schur.convert(basis)?;
                out.push("expansion", expansion_json(&e), e.to_string());
                out.flag("routes_agree", rep.all_agree()?);
            }
            Command::Identity { case, n, k, r, a, b, s, m, big_n, sequence } => {
                return identity(case, IdentityArgs { n, k, r, a, b, s, m, big_n, sequence });
            }
        }
        Ok(out)
    }
}

struct IdentityArgs {
    n: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
    a: Option<String>,
    b: Option<String>,
    s: Option<usize>,
    m: Option<usize>,
    big_n: Option<usize>,
    sequence: Option<PseudoArg>,
}

impl IdentityArgs {
    fn rat(&self, which: &Option<String>, name: &str) -> Res<Q> {
        rational_arg(&need(which.clone(), name)?, name)
    }
}

fn identity(case: IdentityCase, x: IdentityArgs) -> Res<Output> {
    let mut out = Output::default();
    match case {
        IdentityCase::AppendixA => {
            let (a, b) = (x.rat(&x.a, "a")?, x.rat(&x.b, "b")?);
            let rep = appendix_a_consistency(need(x.n, "n")?, &a, &b, need(x.k, "k")?)?;
            out.rational("direct", &rep.direct)
                .rational("hilbert_route", &rep.hilbert_route)
                .rational("inverse_factorial_route", &rep.inverse_factorial_route)
                .rational("factorial_route", &rep.factorial_route)
                .rational("symmetric", &rep.symmetric)
                .scalar("selberg_route", &rep.selberg_route)
                .flag("equal", rep.all_agree());
        }
        IdentityCase::AppendixC => {
            let s = x.s.unwrap_or(0);
            let case = match need(x.sequence, "sequence")? {
                PseudoArg::Hilbert => PseudoCase::Hilbert { s },
                PseudoArg::Factorial => PseudoCase::Factorial { s },
                PseudoArg::FactorialTwo => PseudoCase::FactorialTwo { m: x.m.unwrap_or(0), s },
                PseudoArg::GammaRatio => PseudoCase::GammaRatio { a: x.rat(&x.a, "a")?, b: x.rat(&x.b, "b")?, s },
            };
            let (n, k) = (need(x.n, "n")?, need(x.k, "k")?);
            let closed = pseudo_closed_form(&case, n, k)?;
            let brute = pseudo_bruteforce(&case, n, k)?;
            out.scalar("lhs", &brute).scalar("rhs", &closed);
            return Ok(check_pair(&mut out, &brute, &closed));
        }
        IdentityCase::KzBell => {
            let (n, r) = (need(x.n, "n")?, need(x.r, "r")?);
            if n == 0 {
                return Err(Error::Domain("n must be positive".into()).into());
            }
            let mu = MomentFunctional::new(bell_polys(2 * (n + r) + 1));
            let (l, rh) = karlin_szego_check(&mu, n, r)?;
            out.poly("lhs", &flatten_bivariate(&l))
                .poly("rhs", &flatten_bivariate(&rh))
                .unipoly("rhs_at_zero", &rh.coeff(0));
            return Ok(check_pair(&mut out, &l, &rh));
        }
        IdentityCase::BQ => {
            let case = SequenceTransform::FallingFactorial { r: need(x.r, "r")? };
            let (l, rh) = sequence_transform_check(case, need(x.n, "n")?, need(x.k, "k")?)?;
            out.unipoly("lhs", &l).unipoly("rhs", &rh);
            return Ok(check_pair(&mut out, &l, &rh));
        }
        IdentityCase::Fibonacci => {
            let rep = ubiquitous_identities(UbiquitousCase::Fibonacci { k: need(x.k, "k")? })?;
            out.unipoly("lhs", &rep.lhs).unipoly("rhs", &rep.printed);
            return Ok(check_pair(&mut out, &rep.lhs, &rep.printed));
        }
        IdentityCase::Laplacian => {
            let rep = hyperdet_core::turanians::laplacian_power_check(need(x.n, "n")?, need(x.k, "k")?)?;
            out.rational("direct", &rep.direct)
                .rational("hermite_route", &rep.hermite_route)
                .rational("product", &rep.product)
                .flag("equal", rep.all_agree());
        }
        IdentityCase::BinomialShift => {
            let case = SequenceTransform::BinomialShift { r: need(x.r, "r")?, top: need(x.big_n, "big-n")? };
            let (l, rh) = sequence_transform_check(case, need(x.n, "n")?, need(x.k, "k")?)?;
            out.unipoly("lhs", &l).unipoly("rhs", &rh);
            return Ok(check_pair(&mut out, &l, &rh));
        }
    }
    Ok(out)
}
