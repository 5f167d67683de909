use crate::exact::Ring;
use crate::{Error, Result};

/// Dense order-`d`, dimension-`n` tensor, row-major in its indices.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperTensor<R> {
    order: usize,
    dim: usize,
    entries: Vec<R>,
}

impl<R: Clone> HyperTensor<R> {
    pub fn new(order: usize, dim: usize, entries: Vec<R>) -> Result<Self> {
        if order == 0 || dim == 0 {
            return Err(Error::Domain("tensor order and dimension must be positive".into()));
        }
        let count = dim
            .checked_pow(order as u32)
            .ok_or_else(|| Error::Domain("tensor too large".into()))?;
        if entries.len() != count {
            return Err(Error::Domain(format!(
                "expected {count} entries, got {}",
                entries.len()
            )));
        }
        Ok(HyperTensor {
            order,
            dim,
            entries,
        })
    }

    pub fn from_fn(order: usize, dim: usize, f: impl Fn(&[usize]) -> R) -> Result<Self> {
        let count = dim
            .checked_pow(order as u32)
            .ok_or_else(|| Error::Domain("tensor too large".into()))?;
        let mut idx = vec![0usize; order];
        let mut entries = Vec::with_capacity(count);
        for _ in 0..count {
            entries.push(f(&idx));
            for slot in (0..order).rev() {
                idx[slot] += 1;
                if idx[slot] < dim {
                    break;
                }
                idx[slot] = 0;
            }
        }
        Self::new(order, dim, entries)
    }

    /// `A_{i_1..i_d} = c_{i_1+..+i_d+r}`.
    pub fn hankel(c: &MomentSequence<R>, order: usize, dim: usize, r: usize) -> Result<Self> {
        let needed = order * (dim - 1) + r;
        c.check_len(needed)?;
        Self::from_fn(order, dim, |idx| c.get(idx.iter().sum::<usize>() + r).clone())
    }

    /// Odd-order tensor `A_{i, j_1..j_2k} = c_{m_i + j_1 + .. + j_2k}`.
    pub fn pseudo_hankel(c: &MomentSequence<R>, k: usize, m: &[usize]) -> Result<Self> {
        let dim = m.len();
        let order = 2 * k + 1;
        let needed = m.iter().copied().max().unwrap_or(0) + 2 * k * (dim - 1);
        c.check_len(needed)?;
        Self::from_fn(order, dim, |idx| {
            c.get(m[idx[0]] + idx[1..].iter().sum::<usize>()).clone()
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn get(&self, idx: &[usize]) -> &R {
        assert_eq!(idx.len(), self.order);
        let flat = idx.iter().fold(0, |acc, &i| acc * self.dim + i);
        &self.entries[flat]
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&R) -> S) -> HyperTensor<S> {
        HyperTensor {
            order: self.order,
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Moments `c_0..c_m`, optionally tagged with the family they come from.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence<R> {
    moments: Vec<R>,
    tag: Option<String>,
}

impl<R: Clone> MomentSequence<R> {
    pub fn new(moments: Vec<R>) -> Self {
        MomentSequence { moments, tag: None }
    }

    pub fn tagged(moments: Vec<R>, tag: impl Into<String>) -> Self {
        MomentSequence {
            moments,
            tag: Some(tag.into()),
        }
    }

    pub fn from_fn(len: usize, f: impl Fn(usize) -> R) -> Self {
        Self::new((0..len).map(f).collect())
    }

    pub fn moments(&self) -> &[R] {
        &self.moments
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    pub fn get(&self, i: usize) -> &R {
        &self.moments[i]
    }

    /// Fails unless index `needed` is available.
    pub fn check_len(&self, needed: usize) -> Result<()> {
        if needed >= self.moments.len() {
            Err(Error::InsufficientMoments {
                needed,
                available: self.moments.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The sequence `c_{m+r}`.
    pub fn shifted(&self, r: usize) -> Self {
        MomentSequence {
            moments: self.moments.iter().skip(r).cloned().collect(),
            tag: self.tag.clone(),
        }
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&R) -> S) -> MomentSequence<S> {
        MomentSequence {
            moments: self.moments.iter().map(f).collect(),
            tag: self.tag.clone(),
        }
    }
}

/// Skew-symmetric matrix, storing only the strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<R> {
    size: usize,
    upper: Vec<R>,
}

impl<R: Ring> SkewMatrix<R> {
    /// Builds from `f(i, j)` for `i < j`.
    pub fn from_upper(size: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut upper = Vec::with_capacity(size * size.saturating_sub(1) / 2);
        for i in 0..size {
            for j in i + 1..size {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { size, upper }
    }

    /// Validates skew symmetry of a dense square matrix.
    pub fn from_dense(m: &[Vec<R>]) -> Result<Self> {
        let size = m.len();
        for (i, row) in m.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Domain("matrix is not square".into()));
            }
            for j in 0..=i {
                if row[j] != m[j][i].neg_ref() {
                    return Err(Error::Domain(format!("not skew at ({i},{j})")));
                }
            }
        }
        Ok(Self::from_upper(size, |i, j| m[i][j].clone()))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        // rows 0..i contribute (size-1) + (size-2) + .. entries
        i * (2 * self.size - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => R::zero(),
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => self.upper[self.slot(j, i)].neg_ref(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j)).collect())
            .collect()
    }
}
