//! Vectors of V_n(q) with their canonical integer encoding, and semilinear
//! (affine) maps v -> v^(sigma^f) * A + t.

use super::field::{Elem, FieldRef};
use super::linalg::Matrix;
use crate::error::Error;

/// Canonical encoding: sum coords[i] * q^i.
pub fn encode(field: &FieldRef, coords: &[Elem]) -> u64 {
    let q = field.q as u64;
    let mut out = 0u64;
    for &c in coords.iter().rev() {
        out = out * q + c as u64;
    }
    out
}

pub fn decode(field: &FieldRef, mut x: u64, n: usize) -> Vec<Elem> {
    let q = field.q as u64;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push((x % q) as Elem);
        x /= q;
    }
    debug_assert_eq!(x, 0);
    out
}

pub fn vec_add(field: &FieldRef, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

pub fn vec_sub(field: &FieldRef, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect()
}

pub fn vec_neg(field: &FieldRef, a: &[Elem]) -> Vec<Elem> {
    a.iter().map(|&x| field.neg(x)).collect()
}

pub fn vec_scale(field: &FieldRef, lambda: Elem, a: &[Elem]) -> Vec<Elem> {
    a.iter().map(|&x| field.mul(lambda, x)).collect()
}

/// A semilinear map of V_n(q), possibly with a translation part:
/// v -> v^(sigma^frob) * matrix + translation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemilinearMap {
    pub mat: Matrix,
    pub frob: u32,
    pub trans: Option<Vec<Elem>>,
}

impl SemilinearMap {
    pub fn linear(mat: Matrix) -> Self {
        SemilinearMap { mat, frob: 0, trans: None }
    }

    pub fn semilinear(mat: Matrix, frob: u32) -> Self {
        let e = mat.field.e;
        SemilinearMap { mat, frob: frob % e, trans: None }
    }

    pub fn translation(field: FieldRef, n: usize, t: Vec<Elem>) -> Self {
        SemilinearMap { mat: Matrix::identity(field, n), frob: 0, trans: Some(t) }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        SemilinearMap { mat: Matrix::identity(field, n), frob: 0, trans: None }
    }

    pub fn field(&self) -> &FieldRef {
        &self.mat.field
    }

    pub fn dim(&self) -> usize {
        self.mat.rows
    }

    pub fn is_linear(&self) -> bool {
        self.frob == 0 && self.trans.is_none()
    }

    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>, Error> {
        if v.len() != self.mat.rows {
            return Err(Error::DimensionMismatch);
        }
        let f = self.field();
        let w: Vec<Elem> = v.iter().map(|&x| f.frob(x, self.frob)).collect();
        let mut out = self.mat.apply_row(&w);
        if let Some(t) = &self.trans {
            out = vec_add(f, &out, t);
        }
        Ok(out)
    }

    /// Composition: apply self first, then other.
    /// (A, f) then (B, g) gives (A^(sigma^g) * B, f + g), with translations
    /// carried through.
    pub fn then(&self, other: &SemilinearMap) -> SemilinearMap {
        let f = self.field();
        let e = f.e;
        let mat = self.mat.frob(other.frob).mul(&other.mat);
        let frob = (self.frob + other.frob) % e;
        let trans = {
            let t1 = self.trans.clone();
            let t2 = other.trans.clone();
            match (t1, t2) {
                (None, None) => None,
                (t1, t2) => {
                    let n = self.dim();
                    let t1 = t1.unwrap_or_else(|| vec![0; n]);
                    // t1 passes through `other`'s linear part
                    let t1_img: Vec<Elem> =
                        other.mat.apply_row(&t1.iter().map(|&x| f.frob(x, other.frob)).collect::<Vec<_>>());
                    let t2 = t2.unwrap_or_else(|| vec![0; n]);
                    Some(vec_add(f, &t1_img, &t2))
                }
            }
        };
        SemilinearMap { mat, frob, trans }
    }

    pub fn inverse(&self) -> SemilinearMap {
        let f = self.field().clone();
        let e = f.e;
        let g = (e - self.frob % e) % e;
        let minv = self.mat.inverse().expect("semilinear map must be invertible").frob(g);
        let trans = self.trans.as_ref().map(|t| {
            let tt: Vec<Elem> = t.iter().map(|&x| f.frob(x, g)).collect();
            vec_neg(&f, &minv.apply_row(&tt))
        });
        SemilinearMap { mat: minv, frob: g, trans }
    }
}
