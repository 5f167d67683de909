use super::family::{TuranianFamily, TuranianSpec};
use crate::exact::{factorial, pochhammer, q, MultiPoly, Poly, Ring, Vars, Q};
use crate::hyperdet::{hankel_fast, MomentSequence};
use crate::orthopoly::classical_family;
use crate::{Error, Result};

fn to_multi(p: &Poly<MultiPoly>, vs: &Vars) -> MultiPoly {
    let x = MultiPoly::var(vs, 0);
    let mut acc = MultiPoly::zero_in(vs);
    let mut xp = MultiPoly::constant_in(vs, q(1));
    for c in p.coeffs() {
        acc = acc.add_ref(&c.embed(vs).mul_ref(&xp));
        xp = xp.mul_ref(&x);
    }
    acc
}

/// `Q_0(x) .. Q_{len-1}(x)` in the family's normalization, over `family.vars()`.
pub fn family_values(family: &TuranianFamily, len: usize) -> Result<Vec<MultiPoly>> {
    let vs = family.vars();
    let fam = classical_family(&family.classical_tag(), len.saturating_sub(1))?;
    let x = MultiPoly::var(&vs, 0);
    let mut out = Vec::with_capacity(len);
    for m in 0..len {
        let monic = to_multi(fam.poly(m), &vs);
        let mq = m as u64;
        let v = match family {
            TuranianFamily::Legendre => {
                let s = Q::from_integer(factorial(2 * mq))
                    / (Q::from_integer(factorial(mq).pow(2u32)) * Q::from_integer(num_bigint::BigInt::from(1) << m));
                monic.scale(&s)
            }
            TuranianFamily::Laguerre { alpha } => {
                let sign = if m % 2 == 1 { q(-1) } else { q(1) };
                monic.scale(&(sign / pochhammer(&(alpha + q(1)), m)))
            }
            TuranianFamily::Hermite | TuranianFamily::Charlier { .. } => monic,
            TuranianFamily::Meixner { beta, gamma } => {
                let u = q(1) / gamma - q(1);
                let sign = if m % 2 == 1 { q(-1) } else { q(1) };
                let reflected = monic.substitute_all(&[x.neg_ref()]);
                reflected.scale(&(sign * num_traits::pow::Pow::pow(&u, m as u32) / pochhammer(beta, m)))
            }
            TuranianFamily::Krawtchouk { p, n } => {
                let den = pochhammer(&-n.clone(), m) * num_traits::pow::Pow::pow(p, m as u32);
                if den == q(0) {
                    return Err(Error::Domain(format!(
                        "Krawtchouk K_{m} is undefined for N = {n}"
                    )));
                }
                monic.scale(&(q(1) / den))
            }
        };
        out.push(v);
    }
    Ok(out)
}

/// `D_{n;r}^{(k)}` of `c_m = Q_m(x)` by the fast Hankel expansion.
pub fn turanian_bruteforce(spec: &TuranianSpec) -> Result<MultiPoly> {
    let c = family_values(&spec.family, spec.top() + 1)?;
    hankel_fast(&MomentSequence::new(c), spec.n, spec.k, spec.r)
}
