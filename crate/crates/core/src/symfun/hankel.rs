use super::expansion::{sym_vars, Basis, SymExpansion};
use super::laurent::{phi_map, LaurentPoly};
use super::partition::Partition;
use crate::exact::{q, vars, MultiPoly, Ring, Q};
use crate::hyperdet::{det, hankel_fast, MomentSequence};
use crate::{Error, Result};

fn delta_pow(n: usize, e: u32) -> MultiPoly {
    let vs = sym_vars(n);
    let mut acc = MultiPoly::constant_in(&vs, q(1));
    for i in 0..n {
        for j in i + 1..n {
            acc = acc.mul_ref(&MultiPoly::var(&vs, i).sub_ref(&MultiPoly::var(&vs, j)).pow(e));
        }
    }
    acc
}

/// `Delta(x)^{2k}` in `n` variables on the monomial basis.
pub fn vandermonde_power(n: usize, k: usize) -> Result<SymExpansion> {
    SymExpansion::from_poly(&delta_pow(n, 2 * k as u32), Basis::Monomial)
}

fn sign_n(n: usize) -> Q {
    if (n * (n - 1) / 2) % 2 == 1 {
        q(-1)
    } else {
        q(1)
    }
}

/// Five evaluations of `D_n^{(k)}(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelSchurReport {
    /// `(-1)^{n(n-1)/2} (x_1..x_n)^{n-1} Delta^{2(k-1)}` on the Schur basis.
    pub schur: SymExpansion,
    /// `(-1)^{n(n-1)/2} e_n^{n-k} det(p_{i+j-1})^{k-1}` on the Schur basis.
    pub power_sum: SymExpansion,
    /// `(-1)^{n(n-1)/2} e_n^{n-k} det(p_{n-i+j})^{k-1}` on the Schur basis.
    pub power_sum_printed: SymExpansion,
    /// `phi(Delta^{2k})` on the `h` basis.
    pub phi: SymExpansion,
    /// The hyperdeterminant of the symbols `h_m` on the `h` basis.
    pub hyperdet: SymExpansion,
}

impl HankelSchurReport {
    /// The Schur, power-sum, `phi` and hyperdeterminant forms coincide.
    pub fn all_agree(&self) -> Result<bool> {
        let h = self.schur.convert(Basis::H)?;
        Ok(self.schur == self.power_sum && h == self.phi && h == self.hyperdet)
    }
}

fn power_sum_form(n: usize, k: usize, printed: bool) -> Result<SymExpansion> {
    let vs = sym_vars(n);
    let p = |m: usize| -> Result<MultiPoly> {
        if m == 0 {
            Ok(MultiPoly::constant_in(&vs, q(n as i64)))
        } else {
            Partition::new(vec![m as u32]).monomial(&vs)
        }
    };
    let mut mat = vec![vec![MultiPoly::zero_in(&vs); n]; n];
    for i in 0..n {
        for j in 0..n {
            // 1-based: p_{i+j-1} or p_{n-i+j}
            mat[i][j] = if printed { p(n - 1 - i + j + 1)? } else { p(i + j + 1)? };
        }
    }
    let d = MultiPoly::constant_in(&vs, q(1)).mul_ref(&det(&mat).pow(k as u32 - 1));
    let en = Partition::rectangle(1, n).monomial(&vs)?;
    let body = if k <= n {
        d.mul_ref(&en.pow((n - k) as u32))
    } else {
        d.try_div(&en.pow((k - n) as u32))
            .ok_or_else(|| Error::InexactDivision("e_n power".into()))?
    };
    SymExpansion::from_poly(&body.scale(&sign_n(n)), Basis::Schur)
}

fn hyperdet_of_symbols(n: usize, k: usize) -> Result<SymExpansion> {
    let top = 2 * k * (n - 1);
    let names: Vec<String> = (1..=top.max(1)).map(|i| format!("h{i}")).collect();
    let hv = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
    let mut c = vec![MultiPoly::constant_in(&hv, q(1))];
    c.extend((0..top).map(|i| MultiPoly::var(&hv, i)));
    let d = hankel_fast(&MomentSequence::new(c), n, k, 0)?;
    let terms = d.terms().iter().map(|(ex, v)| {
        let parts: Vec<u32> = ex
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat((i + 1) as u32).take(m as usize))
            .collect();
        (Partition::new(parts), v.clone())
    });
    SymExpansion::new(Basis::H, n, terms)
}

/// `D_n^{(k)}(h)` with `c_m = h_m(x_1..x_n)` through every available route.
pub fn hankel_hyperdet_schur(n: usize, k: usize) -> Result<HankelSchurReport> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("need n >= 1 and k >= 1".into()));
    }
    let vs = sym_vars(n);
    let en = Partition::rectangle(1, n).monomial(&vs)?;
    let body = en.pow((n - 1) as u32).mul_ref(&delta_pow(n, 2 * (k as u32 - 1)));
    let schur = SymExpansion::from_poly(&body.scale(&sign_n(n)), Basis::Schur)?;
    let phi = phi_map(&LaurentPoly::from_poly(&delta_pow(n, 2 * k as u32)))?;
    Ok(HankelSchurReport {
        schur,
        power_sum: power_sum_form(n, k, false)?,
        power_sum_printed: power_sum_form(n, k, true)?,
        phi,
        hyperdet: hyperdet_of_symbols(n, k)?,
    })
}
