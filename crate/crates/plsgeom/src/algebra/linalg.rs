//! Dense matrices and row vectors over a finite field.
//!
//! Row-vector, right-action convention throughout: vectors transform as
//! v -> v * M.

use super::field::{Elem, FieldRef};

#[derive(Clone)]
pub struct Matrix {
    pub field: FieldRef,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
impl Eq for Matrix {}

impl std::hash::Hash for Matrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.data.hash(state);
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(field: FieldRef, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: FieldRef, rows: &[Vec<Elem>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        Matrix { field, rows: r, cols: c, data }
    }

    pub fn diag(field: FieldRef, entries: &[Elem]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = entries[i];
        }
        m
    }

    pub fn scalar(field: FieldRef, n: usize, lambda: Elem) -> Self {
        Self::diag(field.clone(), &vec![lambda; n])
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Matrix::zero(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, b)));
                }
            }
        }
        out
    }

    /// v * M for a row vector v.
    pub fn apply_row(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..self.cols {
                let b = self.at(k, j);
                if b != 0 {
                    out[j] = f.add(out[j], f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, lambda: Elem) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, lambda)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Entry-wise Frobenius x -> x^(p^i).
    pub fn frob(&self, i: u32) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.frob(a, i)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field.clone(), self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order; panics if singular. Capped to guard against bugs.
    pub fn order(&self) -> u64 {
        let id = Matrix::identity(self.field.clone(), self.rows);
        let mut acc = self.clone();
        for k in 1..=100_000_000u64 {
            if acc == id {
                return k;
            }
            acc = acc.mul(self);
        }
        panic!("order exceeds cap");
    }

    pub fn det(&self) -> Elem {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det: Elem = 1;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0);
            let Some(pr) = pivot else {
                return 0;
            };
            if pr != col {
                for j in 0..n {
                    m.swap(pr * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[col * n + col];
            det = f.mul(det, pv);
            let inv = f.inv(pv);
            for r in (col + 1)..n {
                let factor = f.mul(m[r * n + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.data.clone();
        let mut inv = Matrix::identity(f.clone(), n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let pv_inv = f.inv(m[col * n + col]);
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], pv_inv);
                inv.data[col * n + j] = f.mul(inv.data[col * n + j], pv_inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let s1 = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s1);
                    let s2 = f.mul(factor, inv.data[col * n + j]);
                    inv.data[r * n + j] = f.sub(inv.data[r * n + j], s2);
                }
            }
        }
        Some(inv)
    }

    /// Row-reduce in place to reduced row echelon form; returns the rank.
    pub fn rref(&mut self) -> usize {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| self.at(r, col) != 0);
            let Some(pr) = pivot else { continue };
            if pr != rank {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(self.at(rank, col));
            for j in 0..cols {
                let v = f.mul(self.at(rank, j), inv);
                self.set(rank, j, v);
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = self.at(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let s = f.mul(factor, self.at(rank, j));
                    let v = f.sub(self.at(r, j), s);
                    self.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref()
    }

    /// Basis of { v : v * self = 0 } (left null space of the row-action).
    pub fn left_nullspace(&self) -> Vec<Vec<Elem>> {
        // left null space of M = null space of M^T acting on column vectors,
        // i.e. row-reduce M^T and read off free columns
        let mt = self.transpose();
        nullspace_rows(&mt)
    }
}

/// Basis of { x (column) : M x = 0 } returned as row vectors x.
pub fn nullspace_rows(m: &Matrix) -> Vec<Vec<Elem>> {
    let f = m.field.clone();
    let mut a = m.clone();
    a.rref();
    let (rows, cols) = (a.rows, a.cols);
    // locate pivot columns
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut r = 0;
    for c in 0..cols {
        if r < rows && a.at(r, c) == 1 && (0..r).all(|rr| a.at(rr, c) == 0) {
            // candidate pivot: confirm this is the leading entry of row r
            let lead = (0..cols).find(|&cc| a.at(r, cc) != 0);
            if lead == Some(c) {
                pivot_of_col[c] = r;
                r += 1;
            }
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0 as Elem; cols];
        v[free] = 1;
        for c in 0..cols {
            let pr = pivot_of_col[c];
            if pr != usize::MAX {
                v[c] = f.neg(a.at(pr, free));
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let m = Matrix::from_rows(f.clone(), &[vec![3, 1], vec![2, 5]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
    }

    #[test]
    fn nullspace_of_singular() {
        let f = Field::new(5, 1, None).unwrap();
        // rank 1 matrix
        let m = Matrix::from_rows(f.clone(), &[vec![1, 2], vec![2, 4]]);
        let ns = nullspace_rows(&m);
        assert_eq!(ns.len(), 1);
        // M x = 0
        let x = &ns[0];
        for r in 0..2 {
            let mut acc = 0;
            for c in 0..2 {
                acc = f.add(acc, f.mul(m.at(r, c), x[c]));
            }
            assert_eq!(acc, 0);
        }
    }

    #[test]
    fn det_multiplicative() {
        let f = Field::new(7, 1, None).unwrap();
        let a = Matrix::from_rows(f.clone(), &[vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]);
        let b = Matrix::from_rows(f.clone(), &[vec![2, 0, 1], vec![1, 1, 1], vec![0, 3, 2]]);
        assert_eq!(a.mul(&b).det(), f.mul(a.det(), b.det()));
    }
}
