use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::exact::{vars, MultiPoly, Ring, Vars};

type Cache = RwLock<HashMap<(usize, usize, usize, bool), Arc<MultiPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(key: (usize, usize, usize, bool), build: impl FnOnce() -> MultiPoly) -> Arc<MultiPoly> {
    if let Some(p) = cache().read().expect("cache poisoned").get(&key) {
        return p.clone();
    }
    let p = Arc::new(build());
    cache()
        .write()
        .expect("cache poisoned")
        .entry(key)
        .or_insert(p)
        .clone()
}

/// `x1..xn`.
pub fn x_vars(n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    vars(&names.iter().map(String::as_str).collect::<Vec<_>>())
}

/// `y1..yr`.
pub fn y_vars(r: usize) -> Vars {
    let names: Vec<String> = (1..=r).map(|i| format!("y{i}")).collect();
    vars(&names.iter().map(String::as_str).collect::<Vec<_>>())
}

fn delta_pow_in(vs: &Vars, n: usize, k: usize) -> MultiPoly {
    let mut acc = MultiPoly::constant_in(vs, crate::exact::q(1));
    for i in 0..n {
        for j in i + 1..n {
            let d = MultiPoly::var(vs, i).sub_ref(&MultiPoly::var(vs, j));
            acc = acc.mul_ref(&d.pow(2 * k as u32));
        }
    }
    acc
}

/// `Delta(x)^{2k}` in `x1..xn`, cached.
pub fn vandermonde_power_poly(n: usize, k: usize) -> Arc<MultiPoly> {
    cached((n, k, 0, false), || delta_pow_in(&x_vars(n), n, k))
}

/// `Delta(x)^{2k} prod_{i,j} (x_i - y_j)` in `x1..xn, y1..yr`, cached.
pub fn kaneko_integrand(n: usize, k: usize, r: usize) -> Arc<MultiPoly> {
    cached((n, k, r, false), || {
        let names: Vec<String> = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=r).map(|j| format!("y{j}")))
            .collect();
        let vs = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
        let mut acc = delta_pow_in(&vs, n, k);
        for i in 0..n {
            for j in 0..r {
                acc = acc.mul_ref(&MultiPoly::var(&vs, i).sub_ref(&MultiPoly::var(&vs, n + j)));
            }
        }
        acc
    })
}

/// `Delta(x)^{2k} prod_i (x_i - y)^r` in `x1..xn, y`, cached.
pub fn kaneko_integrand_diagonal(n: usize, k: usize, r: usize) -> Arc<MultiPoly> {
    cached((n, k, r, true), || {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).chain(["y".to_string()]).collect();
        let vs = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
        let mut acc = delta_pow_in(&vs, n, k);
        for i in 0..n {
            let d = MultiPoly::var(&vs, i).sub_ref(&MultiPoly::var(&vs, n));
            acc = acc.mul_ref(&d.pow(r as u32));
        }
        acc
    })
}
