//! The even spin module C+^E of a hyperbolic quadratic space V_2r(q):
//! spinor coordinates on the e_S basis, creation/annihilation vector action,
//! spin-group elements (1 - uv), purity tests, and the pure-spinor census.

use crate::algebra::field::{Elem, FieldRef};
use crate::algebra::linalg::Matrix;
use crate::error::Error;

/// The standard-basis data of the quadratic space W = V_2r(q) of + type:
/// basis e_1..e_r, f_1..f_r with Q(e_i) = Q(f_i) = 0 and f(e_i, f_j) = d_ij.
/// Vectors of W are coordinate rows (a_1..a_r | b_1..b_r).
pub struct CliffordContext {
    pub r: usize,
    pub field: FieldRef,
}

/// An element of C^E with coordinates on the e_S basis, S subsets of
/// {0..r-1} as bitmasks. Both parities are representable; EvenSpinor values
/// live in the even sector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spinor {
    pub coords: Vec<Elem>, // indexed by subset mask, length 2^r
}

impl CliffordContext {
    pub fn new(r: usize, field: FieldRef) -> Self {
        assert!(r >= 1 && r <= 20);
        CliffordContext { r, field }
    }

    pub fn dim_w(&self) -> usize {
        2 * self.r
    }

    /// Q(v) for v = (a | b): sum a_i b_i.
    pub fn quad(&self, v: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.r {
            acc = f.add(acc, f.mul(v[i], v[self.r + i]));
        }
        acc
    }

    /// The polar form f(x, y) = Q(x + y) - Q(x) - Q(y) = sum a_i b'_i + a'_i b_i.
    pub fn bilinear(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.r {
            acc = f.add(acc, f.mul(x[i], y[self.r + i]));
            acc = f.add(acc, f.mul(x[self.r + i], y[i]));
        }
        acc
    }

    pub fn zero_spinor(&self) -> Spinor {
        Spinor { coords: vec![0; 1 << self.r] }
    }

    pub fn basis_spinor(&self, mask: u32) -> Spinor {
        let mut s = self.zero_spinor();
        s.coords[mask as usize] = 1;
        s
    }

    /// Right action of a vector w in W on a spinor: e_i creates (appends with
    /// sign), f_i annihilates (removes with sign). Swaps parity sectors.
    pub fn vector_action(&self, s: &Spinor, w: &[Elem]) -> Spinor {
        assert_eq!(w.len(), 2 * self.r);
        let f = &self.field;
        let mut out = self.zero_spinor();
        for (mask, &c) in s.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..self.r {
                // sign: number of elements of S greater than i
                let above = (mask >> (i + 1)).count_ones();
                let sgn_neg = above % 2 == 1;
                let a = w[i]; // coefficient of e_i
                if a != 0 && mask & (1 << i) == 0 {
                    let t = f.mul(a, c);
                    let t = if sgn_neg { f.neg(t) } else { t };
                    let m2 = mask | (1 << i);
                    out.coords[m2] = f.add(out.coords[m2], t);
                }
                let b = w[self.r + i]; // coefficient of f_i
                if b != 0 && mask & (1 << i) != 0 {
                    let t = f.mul(b, c);
                    let t = if sgn_neg { f.neg(t) } else { t };
                    let m2 = mask & !(1 << i);
                    out.coords[m2] = f.add(out.coords[m2], t);
                }
            }
        }
        out
    }

    /// Action of a word of vectors (left-to-right). An even-length word maps
    /// the even sector to itself.
    pub fn word_action(&self, s: &Spinor, word: &[Vec<Elem>]) -> Result<Spinor, Error> {
        if word.len() % 2 != 0 {
            return Err(Error::OddWordToEvenSpace);
        }
        let mut cur = s.clone();
        for w in word {
            cur = self.vector_action(&cur, w);
        }
        Ok(cur)
    }

    /// The operator s -> s (1 - uv), requiring Q(u) = 0 and f(u, v) = 0 so
    /// that 1 - uv lies in the spin group with inverse 1 + uv.
    pub fn spin_element_action(
        &self,
        s: &Spinor,
        u: &[Elem],
        v: &[Elem],
    ) -> Result<Spinor, Error> {
        if self.quad(u) != 0 || self.bilinear(u, v) != 0 {
            return Err(Error::PreconditionViolated);
        }
        let su = self.vector_action(s, u);
        let suv = self.vector_action(&su, v);
        // s - s*u*v
        let f = &self.field;
        let coords = s
            .coords
            .iter()
            .zip(&suv.coords)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Spinor { coords })
    }

    /// Same with 1 + uv.
    pub fn spin_element_action_plus(&self, s: &Spinor, u: &[Elem], v: &[Elem]) -> Spinor {
        let su = self.vector_action(s, u);
        let suv = self.vector_action(&su, v);
        let f = &self.field;
        let coords = s
            .coords
            .iter()
            .zip(&suv.coords)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Spinor { coords }
    }

    /// The annihilator { v in W : s^v = 0 }, as a row basis. The spinor is
    /// pure iff the annihilator has dimension r; in that case the annihilator
    /// is the represented maximal totally singular subspace.
    pub fn annihilator(&self, s: &Spinor) -> Result<Vec<Vec<Elem>>, Error> {
        if s.coords.iter().all(|&c| c == 0) {
            return Err(Error::ZeroSpinor);
        }
        let n = 2 * self.r;
        let dim = 1 << self.r;
        // rows: images of the 2r basis vectors; kernel of the left action
        let mut rows = Vec::with_capacity(n);
        for j in 0..n {
            let mut w = vec![0 as Elem; n];
            w[j] = 1;
            rows.push(self.vector_action(s, &w).coords);
        }
        let m = Matrix {
            field: self.field.clone(),
            rows: n,
            cols: dim,
            data: rows.concat(),
        };
        Ok(m.left_nullspace())
    }

    pub fn is_pure(&self, s: &Spinor) -> Result<(bool, Option<Vec<Vec<Elem>>>), Error> {
        let ann = self.annihilator(s)?;
        if ann.len() == self.r {
            // the annihilator of a pure spinor is totally singular
            for v in &ann {
                debug_assert_eq!(self.quad(v), 0);
            }
            for i in 0..ann.len() {
                for j in 0..ann.len() {
                    debug_assert_eq!(self.bilinear(&ann[i], &ann[j]), 0);
                }
            }
            Ok((true, Some(ann)))
        } else {
            Ok((false, None))
        }
    }

    /// Closed formula (q-1)(q+1)(q^2+1)...(q^(r-1)+1) for the number of pure
    /// spinors in C+^E.
    pub fn pure_census_formula(&self) -> u128 {
        let q = self.field.q as u128;
        let mut out = q - 1;
        for i in 1..self.r {
            out *= q.pow(i as u32) + 1;
        }
        out
    }

    /// Exhaustive count of pure spinors over all nonzero even spinors.
    pub fn pure_census_exhaustive(&self) -> Result<u128, Error> {
        let q = self.field.q as u64;
        let half_dim = 1u32 << (self.r - 1);
        let total = (q as u128).pow(half_dim);
        if total > 1 << 24 {
            return Err(Error::TooLargeForExhaustive);
        }
        // even masks in order
        let even_masks: Vec<usize> =
            (0..(1usize << self.r)).filter(|m| m.count_ones() % 2 == 0).collect();
        assert_eq!(even_masks.len(), half_dim as usize);
        let mut count: u128 = 0;
        let mut s = self.zero_spinor();
        for idx in 1..total {
            let mut ii = idx;
            for &m in &even_masks {
                s.coords[m] = (ii % q as u128) as Elem;
                ii /= q as u128;
            }
            if self.is_pure(&s)?.0 {
                count += 1;
            }
        }
        Ok(count)
    }

    /// z = prod (e_i + f_i)(f_i - e_i) acts as (-1)^{|S|} on e_S.
    pub fn z_element_word(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let mut word = Vec::new();
        for i in 0..self.r {
            let mut a = vec![0 as Elem; 2 * self.r];
            a[i] = 1;
            a[self.r + i] = 1;
            let mut b = vec![0 as Elem; 2 * self.r];
            b[self.r + i] = 1;
            b[i] = f.neg(1);
            word.push(a);
            word.push(b);
        }
        word
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;

    fn ctx(r: usize, p: u32, e: u32) -> CliffordContext {
        CliffordContext::new(r, Field::new(p, e, None).unwrap())
    }

    fn e_vec(c: &CliffordContext, i: usize) -> Vec<Elem> {
        let mut v = vec![0; 2 * c.r];
        v[i] = 1;
        v
    }
    fn f_vec(c: &CliffordContext, i: usize) -> Vec<Elem> {
        let mut v = vec![0; 2 * c.r];
        v[c.r + i] = 1;
        v
    }

    #[test]
    fn one_is_annihilated_by_all_f() {
        let c = ctx(4, 3, 1);
        let one = c.basis_spinor(0);
        for i in 0..4 {
            let img = c.vector_action(&one, &f_vec(&c, i));
            assert!(img.coords.iter().all(|&x| x == 0), "1^f_{} must vanish", i);
        }
        // and its annihilator is exactly <f_1..f_r>: 1 is pure
        let (pure, m) = c.is_pure(&one).unwrap();
        assert!(pure);
        let m = m.unwrap();
        assert_eq!(m.len(), 4);
        for v in &m {
            assert!(v[..4].iter().all(|&a| a == 0), "annihilator must lie in the f-span");
        }
    }

    #[test]
    fn clifford_relations_on_basis() {
        // acting twice by w gives Q(w) * s; vw + wv acts as f(v,w)
        for (r, p, e) in [(4usize, 2u32, 1u32), (4, 3, 1), (5, 2, 1)] {
            let c = ctx(r, p, e);
            let f = c.field.clone();
            let mut vs = Vec::new();
            // a few representative vectors
            let mut w1 = vec![0; 2 * r];
            w1[0] = 1;
            w1[r] = 1; // e_1 + f_1: Q = 1
            let mut w2 = vec![0; 2 * r];
            w2[1] = 1;
            w2[r] = 1; // e_2 + f_1: Q = 0, f(w1, w2) = 1
            vs.push(w1);
            vs.push(w2);
            for mask in 0..(1u32 << r) {
                let s = c.basis_spinor(mask);
                for w in &vs {
                    let ww = c.vector_action(&c.vector_action(&s, w), w);
                    let expect: Vec<Elem> =
                        s.coords.iter().map(|&x| f.mul(x, c.quad(w))).collect();
                    assert_eq!(ww.coords, expect);
                }
                let vw = c.vector_action(&c.vector_action(&s, &vs[0]), &vs[1]);
                let wv = c.vector_action(&c.vector_action(&s, &vs[1]), &vs[0]);
                let sum: Vec<Elem> =
                    vw.coords.iter().zip(&wv.coords).map(|(&a, &b)| f.add(a, b)).collect();
                let expect: Vec<Elem> = s
                    .coords
                    .iter()
                    .map(|&x| f.mul(x, c.bilinear(&vs[0], &vs[1])))
                    .collect();
                assert_eq!(sum, expect);
            }
        }
    }

    #[test]
    fn z_acts_by_parity_sign() {
        let c = ctx(4, 3, 1);
        let f = c.field.clone();
        let word = c.z_element_word();
        for mask in 0..16u32 {
            let s = c.basis_spinor(mask);
            let img = c.word_action(&s, &word).unwrap();
            let sign = if mask.count_ones() % 2 == 1 { f.neg(1) } else { 1 };
            let expect: Vec<Elem> = s.coords.iter().map(|&x| f.mul(x, sign)).collect();
            assert_eq!(img.coords, expect);
        }
    }

    #[test]
    fn spin_element_inverse_identity() {
        // (1 - uv)(1 + uv) = 1 on spinors
        let c = ctx(4, 3, 1);
        let u = e_vec(&c, 0); // Q(u) = 0
        let mut v = e_vec(&c, 1);
        v[c.r + 2] = 2; // e_2 + 2 f_3: f(u, v) = 0
        for mask in [0u32, 0b11, 0b1111, 0b0110] {
            let s = c.basis_spinor(mask);
            let a = c.spin_element_action(&s, &u, &v).unwrap();
            let b = c.spin_element_action_plus(&a, &u, &v);
            assert_eq!(b, s);
        }
    }

    #[test]
    fn spin_element_conjugation_formula() {
        // the conjugation action of 1 - uv on W matches
        // x -> x + f(x,v) u - f(x,u) v - Q(v) f(x,u) u, verified as operators
        // on the spinor module over all basis vectors x and basis spinors
        let c = ctx(4, 3, 1);
        let fld = c.field.clone();
        let u = {
            let mut u = e_vec(&c, 0);
            u[c.r + 1] = 2; // e_1 + 2 f_2, Q = 0
            u
        };
        let v = {
            // v = e_2 + f_1 + e_3 + f_3: f(u, v) = 1 + 2 = 0 over GF(3), Q(v) = 1
            let mut v = e_vec(&c, 1);
            v[c.r] = 1;
            v[2] = 1;
            v[c.r + 2] = 1;
            v
        };
        assert_eq!(c.quad(&u), 0);
        assert_eq!(c.bilinear(&u, &v), 0);
        for xi in 0..(2 * c.r) {
            let mut x = vec![0; 2 * c.r];
            x[xi] = 1;
            // x' per the formula
            let fxv = c.bilinear(&x, &v);
            let fxu = c.bilinear(&x, &u);
            let qv = c.quad(&v);
            let mut xp = x.clone();
            for j in 0..2 * c.r {
                let mut t = fld.mul(fxv, u[j]);
                t = fld.sub(t, fld.mul(fxu, v[j]));
                t = fld.sub(t, fld.mul(fld.mul(qv, fxu), u[j]));
                xp[j] = fld.add(xp[j], t);
            }
            // operator equality on all basis spinors: s^((1+uv) x (1-uv)) = s^(x')
            for mask in 0..(1u32 << c.r) {
                let s = c.basis_spinor(mask);
                let lhs = {
                    let t1 = c.spin_element_action_plus(&s, &u, &v);
                    let t2 = c.vector_action(&t1, &x);
                    c.spin_element_action(&t2, &u, &v).unwrap()
                };
                let rhs = c.vector_action(&s, &xp);
                assert_eq!(lhs, rhs, "mismatch at x index {} mask {:b}", xi, mask);
            }
        }
    }

    #[test]
    fn basis_spinors_are_pure_and_mixed_sum_is_not() {
        let c = ctx(4, 2, 1);
        for mask in 0..16u32 {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            assert!(c.is_pure(&c.basis_spinor(mask)).unwrap().0);
        }
        // 1 + e_{1234} is not pure (dim(M cap M') = 0, not r - 2)
        let mut s = c.basis_spinor(0);
        s.coords[0b1111] = 1;
        assert!(!c.is_pure(&s).unwrap().0);
        // e_empty + e_{12} is pure (dim(M cap M') = r - 2)
        let mut s = c.basis_spinor(0);
        s.coords[0b0011] = 1;
        assert!(c.is_pure(&s).unwrap().0);
    }

    #[test]
    fn census_small() {
        // (r, q) = (4, 2): 135 pure spinors
        let c = ctx(4, 2, 1);
        assert_eq!(c.pure_census_formula(), 135);
        assert_eq!(c.pure_census_exhaustive().unwrap(), 135);
    }
}
