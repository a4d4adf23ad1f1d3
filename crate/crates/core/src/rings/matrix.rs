//! Dense matrices over any [`Ring`].

use std::fmt;

use super::{dot, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RingMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        Ok(RingMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, entries: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = R::one();
        }
        m
    }

    pub fn column(v: Vec<R>) -> Self {
        let n = v.len();
        RingMatrix { rows: n, cols: 1, entries: v }
    }

    pub fn row_vector(v: Vec<R>) -> Self {
        let n = v.len();
        RingMatrix { rows: 1, cols: n, entries: v }
    }

    pub fn diagonal(d: Vec<R>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.into_iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        RingMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> std::result::Result<S, E>) -> std::result::Result<RingMatrix<S>, E> {
        let entries = self.entries.iter().map(f).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RingMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let ot = o.transpose();
        let mut entries = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            let r = &self.entries[i * self.cols..(i + 1) * self.cols];
            for j in 0..o.cols {
                entries.push(dot(r, &ot.entries[j * ot.cols..(j + 1) * ot.cols]));
            }
        }
        Ok(RingMatrix { rows: self.rows, cols: o.cols, entries })
    }

    fn zip(&self, o: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect();
        Ok(RingMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.sub_ref(b))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
        }
        RingMatrix { rows: idx.len(), cols: self.cols, entries }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        RingMatrix { rows: self.rows, cols: idx.len(), entries }
    }

    pub fn remove_row(&self, r: usize) -> Self {
        let idx: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        self.select_rows(&idx)
    }

    pub fn remove_col(&self, c: usize) -> Self {
        let idx: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select_cols(&idx)
    }

    /// Appends a column on the right.
    pub fn push_col(&self, v: &[R]) -> Result<Self> {
        if v.len() != self.rows {
            return Err(Error::ShapeMismatch("column length".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for (i, vi) in v.iter().enumerate() {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
            entries.push(vi.clone());
        }
        Ok(RingMatrix { rows: self.rows, cols: self.cols + 1, entries })
    }

    /// Appends a row at the bottom.
    pub fn push_row(&self, v: &[R]) -> Result<Self> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch("row length".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(v);
        Ok(RingMatrix { rows: self.rows + 1, cols: self.cols, entries })
    }

    /// Determinant: fraction-free elimination over integral domains with
    /// exact division, memoized cofactor expansion otherwise.
    pub fn det(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("determinant of {}×{}", self.rows, self.cols)));
        }
        if self.rows == 0 {
            return Ok(R::one());
        }
        if R::is_integral_domain() {
            if let Some(d) = self.det_bareiss() {
                return Ok(d);
            }
        }
        Ok(self.det_expansion())
    }

    /// Bareiss elimination; `None` if an exact division fails (which cannot
    /// happen in a genuine integral domain).
    pub fn det_bareiss(&self) -> Option<R> {
        let n = self.rows;
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Some(R::zero());
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = num.exact_div(&prev)?;
                }
                m[i][k] = R::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Some(if negate { -d } else { d })
    }

    /// Division-free cofactor expansion, memoized over column subsets.
    pub fn det_expansion(&self) -> R {
        let n = self.rows;
        assert!(n <= 20, "cofactor expansion limited to n ≤ 20");
        let mut memo: Vec<Option<R>> = vec![None; 1 << n];
        memo[0] = Some(R::one());
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize - 1;
            let mut acc = R::zero();
            let mut above = 0;
            for j in (0..n).rev() {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(k, j);
                if !a.is_zero() {
                    let sub = memo[mask & !(1 << j)].as_ref().unwrap();
                    let t = a.mul_ref(sub);
                    acc = if above % 2 == 0 { acc.add_ref(&t) } else { acc.sub_ref(&t) };
                }
                above += 1;
            }
            memo[mask] = Some(acc);
        }
        memo[(1 << n) - 1].take().unwrap()
    }

    /// Classical adjugate: `adj(M)·M = M·adj(M) = det(M)·I`.
    pub fn adjugate(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("adjugate of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.remove_row(i).remove_col(j).det()?;
                out.set(j, i, if (i + j) % 2 == 0 { minor } else { -minor });
            }
        }
        Ok(out)
    }

    /// Two-sided inverse when the determinant is a unit of the ring.
    pub fn inverse(&self) -> Result<Option<Self>> {
        let d = self.det()?;
        let Some(di) = d.unit_inverse() else { return Ok(None) };
        Ok(Some(self.adjugate()?.scale(&di)))
    }

    /// Permutes rows: row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        self.select_rows(perm)
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        self.select_cols(perm)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMatrix{:?}", self.to_rows())
    }
}
