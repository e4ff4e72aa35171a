//! Tensor and exterior-square coordinate machinery, plus fixed spaces of
//! linear generator sets.

use super::field::{Elem, FieldRef};
use super::linalg::{nullspace_rows, Matrix};
use super::semilinear::SemilinearMap;
use crate::error::Error;

/// u (x) w for u in V_2(q), w in V_m(q), as a vector of V_%7B2m%7D(q) with
/// coordinate (i, j) -> i * m + j.
pub fn tensor_encode(field: &FieldRef, u: &[Elem], w: &[Elem]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(u.len() * w.len());
    for &a in u {
        for &b in w {
            out.push(field.mul(a, b));
        }
    }
    out
}

/// A vector of V_2(q) (x) V_m(q) is a simple tensor iff its 2 x m coefficient
/// matrix has rank <= 1.
pub fn is_simple_tensor(field: &FieldRef, v: &[Elem], m: usize) -> bool {
    assert_eq!(v.len() % m, 0);
    let rows = v.len() / m;
    let mat = Matrix {
        field: field.clone(),
        rows,
        cols: m,
        data: v.to_vec(),
    };
    mat.rank() <= 1
}

/// Index of the wedge basis u_i ^ u_j (i < j) in lexicographic order.
pub fn wedge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// The induced action of g on the exterior square, on the wedge basis.
/// (u ^ v)^g = u^g ^ v^g; entry ((i,j),(k,l)) = g[i][k] g[j][l] - g[i][l] g[j][k].
pub fn exterior_square_rep(g: &Matrix) -> Matrix {
    let n = g.rows;
    assert!(n >= 2);
    let f = &g.field;
    let dim = n * (n - 1) / 2;
    let mut out = Matrix::zero(g.field.clone(), dim, dim);
    for i in 0..n {
        for j in (i + 1)..n {
            let r = wedge_index(n, i, j);
            for k in 0..n {
                for l in (k + 1)..n {
                    let c = wedge_index(n, k, l);
                    let a = f.mul(g.at(i, k), g.at(j, l));
                    let b = f.mul(g.at(i, l), g.at(j, k));
                    out.set(r, c, f.sub(a, b));
                }
            }
        }
    }
    out
}

/// The fixed space C_V(<gens>) of a set of linear maps: the intersection of
/// the kernels of g - I, returned as a row basis.
pub fn fixed_space(gens: &[SemilinearMap]) -> Result<Vec<Vec<Elem>>, Error> {
    assert!(!gens.is_empty());
    for g in gens {
        if g.frob != 0 || g.trans.is_some() {
            return Err(Error::SemilinearNotSupported);
        }
    }
    let field = gens[0].field().clone();
    let n = gens[0].dim();
    // stack (g - I)^T column systems: we want v with v * (g - I) = 0 for all g,
    // i.e. (g - I)^T v^T = 0: stack the transposes vertically
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for g in gens {
        let mut d = g.mat.clone();
        for i in 0..n {
            let v = field.sub(d.at(i, i), 1);
            d.set(i, i, v);
        }
        let dt = d.transpose();
        for r in 0..dt.rows {
            rows.push(dt.row(r).to_vec());
        }
    }
    let stacked = Matrix::from_rows(field, &rows);
    Ok(nullspace_rows(&stacked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::semilinear::decode;

    #[test]
    fn simple_tensors_are_simple() {
        let f = Field::new(3, 1, None).unwrap();
        let u = vec![1, 2];
        let w = vec![2, 0, 1];
        let t = tensor_encode(&f, &u, &w);
        assert!(is_simple_tensor(&f, &t, 3));
    }

    #[test]
    fn independent_sum_is_not_simple() {
        let f = Field::new(3, 1, None).unwrap();
        let t1 = tensor_encode(&f, &[1, 0], &[1, 0]);
        let t2 = tensor_encode(&f, &[0, 1], &[0, 1]);
        let sum: Vec<u32> = t1.iter().zip(&t2).map(|(&a, &b)| f.add(a, b)).collect();
        assert!(!is_simple_tensor(&f, &sum, 2));
    }

    #[test]
    fn simple_tensor_count_at_q3_m2() {
        // (q+1)(q^m - 1) = 4 * 8 = 32 nonzero simple tensors, against brute force
        let f = Field::new(3, 1, None).unwrap();
        let mut simple = std::collections::HashSet::new();
        for ux in 0..9u64 {
            for wx in 0..9u64 {
                let u = decode(&f, ux, 2);
                let w = decode(&f, wx, 2);
                let t = tensor_encode(&f, &u, &w);
                if t.iter().any(|&c| c != 0) {
                    simple.insert(t);
                }
            }
        }
        assert_eq!(simple.len(), 32);
        // brute-force agreement of the rank test
        for x in 0..81u64 {
            let v = decode(&f, x, 4);
            let brute = simple.contains(&v) || v.iter().all(|&c| c == 0);
            assert_eq!(is_simple_tensor(&f, &v, 2), brute);
        }
    }

    #[test]
    fn exterior_square_is_homomorphism() {
        let f = Field::new(2, 1, None).unwrap();
        let a = Matrix::from_rows(
            f.clone(),
            &[
                vec![1, 1, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 1, 1, 0],
                vec![0, 1, 0, 1, 0],
                vec![1, 0, 0, 0, 1],
            ],
        );
        let b = Matrix::from_rows(
            f.clone(),
            &[
                vec![0, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 1],
                vec![0, 0, 0, 0, 1],
            ],
        );
        assert_eq!(a.det(), 1);
        assert_eq!(b.det(), 1);
        let ra = exterior_square_rep(&a);
        let rb = exterior_square_rep(&b);
        let rab = exterior_square_rep(&a.mul(&b));
        assert_eq!(ra.mul(&rb), rab);
        // identity -> identity
        let id = Matrix::identity(f.clone(), 5);
        assert_eq!(exterior_square_rep(&id), Matrix::identity(f.clone(), 10));
        // transvection image has determinant 1 (row-reduction oracle)
        let mut t = Matrix::identity(f.clone(), 5);
        t.set(0, 1, 1);
        assert_eq!(exterior_square_rep(&t).det(), 1);
    }

    #[test]
    fn fixed_space_basics() {
        let f = Field::new(3, 1, None).unwrap();
        let id = SemilinearMap::identity(f.clone(), 3);
        let fx = fixed_space(&[id]).unwrap();
        assert_eq!(fx.len(), 3);
        let neg = SemilinearMap::linear(Matrix::scalar(f.clone(), 3, 2));
        let fx = fixed_space(&[neg]).unwrap();
        assert_eq!(fx.len(), 0);
        // cross-check by enumeration on a rotation
        let rot = SemilinearMap::linear(Matrix::from_rows(
            f.clone(),
            &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]],
        ));
        let fx = fixed_space(&[rot.clone()]).unwrap();
        let mut count = 0;
        for x in 0..27u64 {
            let v = decode(&f, x, 3);
            if rot.apply(&v).unwrap() == v {
                count += 1;
            }
        }
        assert_eq!(count, 3u64.pow(fx.len() as u32));
    }
}
