use crate::exact::{q, qf, MultiPoly, Poly, Ring};
use crate::{Error, Result};

/// Monic polynomials `P_0..P_N` with recurrence
/// `x P_i = P_{i+1} + A_i P_i + B_i P_{i-1}` (`B_0 = 0`).
#[derive(Clone, Debug)]
pub struct MonicPolynomialFamily<R> {
    polys: Vec<Poly<R>>,
    a: Vec<R>,
    b: Vec<R>,
}

impl<R: Ring> MonicPolynomialFamily<R> {
    /// Builds `P_0..P_N` from recurrence coefficients `a[0..N]`, `b[0..N]`.
    pub fn from_recurrence(var: &str, a: Vec<R>, b: Vec<R>) -> Self {
        assert_eq!(a.len(), b.len(), "recurrence lengths");
        let x = Poly::<R>::var(var);
        let mut polys = vec![Poly::new(var, vec![R::one()])];
        for i in 0..a.len() {
            let mut next = x.mul_ref(&polys[i]).sub_ref(&polys[i].map_coeffs(|c| c.mul_ref(&a[i])));
            if i > 0 {
                next = next.sub_ref(&polys[i - 1].map_coeffs(|c| c.mul_ref(&b[i])));
            }
            polys.push(next.with_var(var));
        }
        MonicPolynomialFamily { polys, a, b }
    }

    /// Reads the recurrence off a list of monic polynomials.
    pub fn from_polys(polys: Vec<Poly<R>>) -> Result<Self> {
        for (i, p) in polys.iter().enumerate() {
            if p.degree() != Some(i) || !p.is_monic() {
                return Err(Error::Domain(format!("P_{i} is not monic of degree {i}")));
            }
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for i in 0..polys.len().saturating_sub(1) {
            // x P_i - P_{i+1} = A_i P_i + B_i P_{i-1}
            let ai = if i == 0 {
                polys[1].coeff(0).neg_ref()
            } else {
                polys[i].coeff(i - 1).sub_ref(&polys[i + 1].coeff(i))
            };
            let bi = if i == 0 {
                R::zero()
            } else {
                let rest = Poly::<R>::var(polys[i].var_name())
                    .mul_ref(&polys[i])
                    .sub_ref(&polys[i + 1])
                    .sub_ref(&polys[i].map_coeffs(|c| c.mul_ref(&ai)));
                rest.coeff(i - 1)
            };
            a.push(ai);
            b.push(bi);
        }
        let fam = MonicPolynomialFamily { polys, a, b };
        if !fam.recurrence_holds() {
            return Err(Error::Domain("polynomials do not satisfy a three-term recurrence".into()));
        }
        Ok(fam)
    }

    pub fn polys(&self) -> &[Poly<R>] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &Poly<R> {
        &self.polys[i]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn rec_a(&self) -> &[R] {
        &self.a
    }

    pub fn rec_b(&self) -> &[R] {
        &self.b
    }

    /// True when the stored recurrence reproduces the stored list.
    pub fn recurrence_holds(&self) -> bool {
        let var = self.polys[0].var_name().to_string();
        let x = Poly::<R>::var(if var.is_empty() { "x" } else { &var });
        (0..self.a.len()).all(|i| {
            let mut rhs = self.polys[i + 1].add_ref(&self.polys[i].map_coeffs(|c| c.mul_ref(&self.a[i])));
            if i > 0 {
                rhs = rhs.add_ref(&self.polys[i - 1].map_coeffs(|c| c.mul_ref(&self.b[i])));
            }
            x.mul_ref(&self.polys[i]) == rhs
        })
    }
}

impl<R: Ring> PartialEq for MonicPolynomialFamily<R> {
    fn eq(&self, other: &Self) -> bool {
        self.polys == other.polys && self.a == other.a && self.b == other.b
    }
}

/// Classical families with rational or symbolic parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalTag {
    Charlier { a: MultiPoly },
    Laguerre { alpha: MultiPoly },
    Hermite,
    Legendre,
    ChebyshevU,
    Krawtchouk { p: MultiPoly, n: MultiPoly },
    Meixner { beta: MultiPoly, gamma: MultiPoly },
}

/// The monic family `P_0..P_N` from its three-term recurrence.
pub fn classical_family(tag: &ClassicalTag, n_max: usize) -> Result<MonicPolynomialFamily<MultiPoly>> {
    let c = |v: i64| MultiPoly::constant(q(v));
    let mut a = Vec::with_capacity(n_max);
    let mut b = Vec::with_capacity(n_max);
    for i in 0..n_max {
        let iq = c(i as i64);
        let (ai, bi) = match tag {
            ClassicalTag::Charlier { a: par } => (iq.add_ref(par), par.mul_ref(&iq)),
            ClassicalTag::Laguerre { alpha } => (
                c(2 * i as i64 + 1).add_ref(alpha),
                iq.mul_ref(&iq.add_ref(alpha)),
            ),
            ClassicalTag::Hermite => (MultiPoly::zero(), MultiPoly::constant(qf(i as i64, 2))),
            ClassicalTag::Legendre => {
                let ii = (i * i) as i64;
                let den = 4 * ii - 1;
                (MultiPoly::zero(), MultiPoly::constant(qf(ii, den)))
            }
            ClassicalTag::ChebyshevU => (
                MultiPoly::zero(),
                if i == 0 { MultiPoly::zero() } else { MultiPoly::constant(qf(1, 4)) },
            ),
            ClassicalTag::Krawtchouk { p, n } => {
                let one_p = c(1).sub_ref(p);
                (
                    p.mul_ref(&n.sub_ref(&iq)).add_ref(&iq.mul_ref(&one_p)),
                    iq.mul_ref(p)
                        .mul_ref(&one_p)
                        .mul_ref(&n.add_ref(&c(1)).sub_ref(&iq)),
                )
            }
            ClassicalTag::Meixner { beta, gamma } => {
                // x M_i = M_{i+1} + (i + (i+beta) g)/(1-g) M_i + i(i+beta-1) g/(1-g)^2 M_{i-1}
                let g = gamma.as_constant().ok_or_else(|| {
                    Error::Unsupported("Meixner family needs a rational gamma".into())
                })?;
                let one_g = q(1) - &g;
                if one_g == q(0) {
                    return Err(Error::Domain("Meixner gamma = 1".into()));
                }
                let ai = iq
                    .add_ref(&iq.add_ref(beta).scale(&g))
                    .scale(&(q(1) / &one_g));
                let bi = iq
                    .mul_ref(&iq.add_ref(beta).sub_ref(&c(1)))
                    .scale(&(g.clone() / (&one_g * &one_g)));
                (ai, bi)
            }
        };
        a.push(ai);
        b.push(if i == 0 { MultiPoly::zero() } else { bi });
    }
    Ok(MonicPolynomialFamily::from_recurrence("x", a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charlier_low_degrees() {
        let a = MultiPoly::symbol("a");
        let f = classical_family(&ClassicalTag::Charlier { a: a.clone() }, 2).unwrap();
        let c1 = f.poly(1);
        assert_eq!(c1.coeff(0), a.neg_ref());
        let c2 = f.poly(2);
        assert_eq!(c2.coeff(1), a.scale(&q(-2)).sub_ref(&MultiPoly::constant(q(1))));
        assert_eq!(c2.coeff(0), a.pow(2));
        assert!(f.recurrence_holds());
    }

    #[test]
    fn hermite_second() {
        let f = classical_family(&ClassicalTag::Hermite, 3).unwrap();
        assert_eq!(f.poly(2).coeff(0), MultiPoly::constant(qf(-1, 2)));
        assert_eq!(f.poly(3).coeff(1), MultiPoly::constant(qf(-3, 2)));
    }

    #[test]
    fn recurrence_round_trip() {
        let f = classical_family(&ClassicalTag::Legendre, 5).unwrap();
        let g = MonicPolynomialFamily::from_polys(f.polys().to_vec()).unwrap();
        assert_eq!(g.rec_a(), &f.rec_a()[..5]);
        assert_eq!(&g.rec_b()[1..], &f.rec_b()[1..5]);
    }
}
