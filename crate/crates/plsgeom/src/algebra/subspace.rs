//! Subspaces of V_n(q) over a subfield F, stored by a reduced echelon basis
//! of the F-coordinatized ambient space.

use super::field::{Elem, FieldRef};
use super::linalg::Matrix;
use crate::error::Error;

/// An F-subspace of V_n(q), where F embeds in GF(q). Vectors are
/// re-coordinatized over F via the basis 1, zeta, ..., zeta^(a-1) of GF(q)
/// (a = [GF(q):F]) and echelonized there.
pub struct Subspace {
    /// The ambient field GF(q).
    pub ambient: FieldRef,
    /// The coefficient subfield F.
    pub subfield: FieldRef,
    pub ambient_dim: usize,
    /// [GF(q) : F]
    pub ext_deg: usize,
    /// Reduced echelon basis over F, rows of length ambient_dim * ext_deg.
    pub basis: Matrix,
    /// decomp[y] = F-coordinates of y in the power basis, packed as a vector.
    decomp: Vec<Vec<Elem>>,
    /// Images of F elements inside GF(q).
    embed: Vec<Elem>,
}

impl Subspace {
    /// F-span of the given ambient vectors.
    pub fn span(
        ambient: &FieldRef,
        subfield: &FieldRef,
        ambient_dim: usize,
        vectors: &[Vec<Elem>],
    ) -> Result<Subspace, Error> {
        if ambient.p != subfield.p || ambient.e % subfield.e != 0 {
            return Err(Error::NotASubfield { sub: subfield.q, ambient: ambient.q });
        }
        let a = (ambient.e / subfield.e) as usize;
        let embed = ambient.embedding_from(subfield);
        // power basis 1, zeta, ..., zeta^(a-1) of GF(q) over F
        let zeta = ambient.zeta();
        let mut pow_basis = Vec::with_capacity(a);
        let mut acc: Elem = 1;
        for _ in 0..a {
            pow_basis.push(acc);
            acc = ambient.mul(acc, zeta);
        }
        // decomposition table: enumerate all F-combinations of the power basis
        let r = subfield.q as u64;
        let total = r.pow(a as u32);
        assert_eq!(total, ambient.q as u64, "power basis must span GF(q) over F");
        let mut decomp: Vec<Option<Vec<Elem>>> = vec![None; ambient.q as usize];
        for k in 0..total {
            let mut coords = Vec::with_capacity(a);
            let mut kk = k;
            for _ in 0..a {
                coords.push((kk % r) as Elem);
                kk /= r;
            }
            let mut val = 0;
            for (i, &c) in coords.iter().enumerate() {
                val = ambient.add(val, ambient.mul(embed[c as usize], pow_basis[i]));
            }
            assert!(decomp[val as usize].is_none(), "power basis not independent over F");
            decomp[val as usize] = Some(coords);
        }
        let decomp: Vec<Vec<Elem>> = decomp.into_iter().map(|o| o.unwrap()).collect();

        let mut sp = Subspace {
            ambient: ambient.clone(),
            subfield: subfield.clone(),
            ambient_dim,
            ext_deg: a,
            basis: Matrix::zero(subfield.clone(), 0, ambient_dim * a),
            decomp,
            embed,
        };
        let rows: Vec<Vec<Elem>> = vectors.iter().map(|v| sp.flatten(v)).collect();
        let mut m = Matrix::from_rows(subfield.clone(), &rows);
        if vectors.is_empty() {
            m = Matrix::zero(subfield.clone(), 0, ambient_dim * a);
        }
        let rank = m.rref();
        let kept: Vec<Vec<Elem>> = (0..rank).map(|r| m.row(r).to_vec()).collect();
        sp.basis = if kept.is_empty() {
            Matrix::zero(subfield.clone(), 0, ambient_dim * a)
        } else {
            Matrix::from_rows(subfield.clone(), &kept)
        };
        Ok(sp)
    }

    /// F-coordinates of an ambient vector (length ambient_dim * ext_deg).
    pub fn flatten(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = Vec::with_capacity(self.ambient_dim * self.ext_deg);
        for &x in v {
            out.extend_from_slice(&self.decomp[x as usize]);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn size(&self) -> u64 {
        (self.subfield.q as u64).pow(self.rank() as u32)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let flat = self.flatten(v);
        // reduce against the echelon basis
        let f = &self.subfield;
        let mut w = flat;
        for r in 0..self.basis.rows {
            let lead = (0..self.basis.cols).find(|&c| self.basis.at(r, c) != 0).unwrap();
            if w[lead] != 0 {
                let factor = w[lead];
                for c in 0..self.basis.cols {
                    let s = f.mul(factor, self.basis.at(r, c));
                    w[c] = f.sub(w[c], s);
                }
            }
        }
        w.iter().all(|&c| c == 0)
    }

    /// All elements of the span as ambient vectors, in F-combination order.
    pub fn enumerate(&self) -> Vec<Vec<Elem>> {
        let r = self.subfield.q as u64;
        let k = self.rank();
        let total = r.pow(k as u32);
        assert!(total <= 1 << 24, "span too large to enumerate");
        // un-flatten helper: power basis values
        let zeta = self.ambient.zeta();
        let mut pow_basis = Vec::with_capacity(self.ext_deg);
        let mut acc: Elem = 1;
        for _ in 0..self.ext_deg {
            pow_basis.push(acc);
            acc = self.ambient.mul(acc, zeta);
        }
        let unflatten = |flat: &[Elem]| -> Vec<Elem> {
            let mut v = Vec::with_capacity(self.ambient_dim);
            for i in 0..self.ambient_dim {
                let mut x = 0;
                for j in 0..self.ext_deg {
                    let c = flat[i * self.ext_deg + j];
                    x = self
                        .ambient
                        .add(x, self.ambient.mul(self.embed[c as usize], pow_basis[j]));
                }
                v.push(x);
            }
            v
        };
        let f = &self.subfield;
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut flat = vec![0 as Elem; self.basis.cols];
            let mut ii = idx;
            for row in 0..k {
                let c = (ii % r) as Elem;
                ii /= r;
                if c != 0 {
                    for j in 0..self.basis.cols {
                        let s = f.mul(c, self.basis.at(row, j));
                        flat[j] = f.add(flat[j], s);
                    }
                }
            }
            out.push(unflatten(&flat));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;

    #[test]
    fn prime_subfield_line_in_v2_9() {
        let f9 = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let f3 = Field::new(3, 1, None).unwrap();
        let u = vec![1, f9.zeta()];
        let sp = Subspace::span(&f9, &f3, 2, &[u.clone()]).unwrap();
        assert_eq!(sp.size(), 3);
        let elems = sp.enumerate();
        assert_eq!(elems.len(), 3);
        assert!(elems.contains(&vec![0, 0]));
        assert!(elems.contains(&u));
        let two_u = vec![2, f9.mul(2, f9.zeta())];
        assert!(elems.contains(&two_u));
        assert!(sp.contains(&two_u));
        assert!(!sp.contains(&[1, 0]));
    }

    #[test]
    fn full_scalar_line() {
        let f9 = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let u = vec![1, f9.zeta()];
        let sp = Subspace::span(&f9, &f9, 2, &[u]).unwrap();
        assert_eq!(sp.size(), 9);
        assert_eq!(sp.enumerate().len(), 9);
    }

    #[test]
    fn empty_span_is_zero() {
        let f9 = Field::new(3, 2, None).unwrap();
        let f3 = Field::new(3, 1, None).unwrap();
        let sp = Subspace::span(&f9, &f3, 2, &[]).unwrap();
        assert_eq!(sp.rank(), 0);
        assert_eq!(sp.size(), 1);
        assert!(sp.contains(&[0, 0]));
        assert!(!sp.contains(&[1, 0]));
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let f4 = Field::new(2, 2, None).unwrap();
        let f2 = Field::new(2, 1, None).unwrap();
        let v1 = vec![1, 2, 3];
        let v2 = vec![2, 1, 0];
        let sp = Subspace::span(&f4, &f2, 3, &[v1, v2]).unwrap();
        let all: std::collections::HashSet<Vec<u32>> = sp.enumerate().into_iter().collect();
        assert_eq!(all.len() as u64, sp.size());
        // exhaustive cross-check over the whole ambient space (4^3 = 64)
        for x in 0..64u64 {
            let v = crate::algebra::semilinear::decode(&f4, x, 3);
            assert_eq!(sp.contains(&v), all.contains(&v));
        }
    }

    #[test]
    fn rejects_non_subfield() {
        let f8 = Field::new(2, 3, None).unwrap();
        let f4 = Field::new(2, 2, None).unwrap();
        assert!(Subspace::span(&f8, &f4, 2, &[]).is_err());
    }
}
