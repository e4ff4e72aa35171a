//! Quaternion-style subgroups of GL_2(q): Q_8, SL_2(3), 2.S4^-, SL_2(5),
//! and small matrix-group utilities (element enumeration, normalizers).

use crate::algebra::field::{Elem, FieldRef};
use crate::algebra::linalg::Matrix;
use crate::algebra::semilinear::SemilinearMap;
use crate::error::Error;
use std::collections::HashSet;

/// Hash-closure enumeration of the group generated by matrices; errors out
/// above the cap.
pub fn enumerate_matrix_group(gens: &[Matrix], cap: usize) -> Result<Vec<Matrix>, Error> {
    let mut seen: HashSet<Matrix> = HashSet::new();
    let n = gens.first().map(|g| g.rows).expect("need at least one generator");
    let id = Matrix::identity(gens[0].field.clone(), n);
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head].clone();
        head += 1;
        for h in gens {
            let gh = g.mul(h);
            if !seen.contains(&gh) {
                if seen.len() >= cap {
                    return Err(Error::DomainTooLarge(cap as u64));
                }
                seen.insert(gh.clone());
                queue.push(gh);
            }
        }
    }
    Ok(queue)
}

/// Same for semilinear maps (matrix, frob) pairs without translations.
pub fn enumerate_semilinear_group(
    gens: &[SemilinearMap],
    cap: usize,
) -> Result<Vec<SemilinearMap>, Error> {
    #[derive(PartialEq, Eq, Hash, Clone)]
    struct Key(Vec<Elem>, u32);
    let field = gens[0].field().clone();
    let n = gens[0].dim();
    let id = SemilinearMap::identity(field, n);
    let key = |g: &SemilinearMap| Key(g.mat.data.clone(), g.frob);
    let mut seen: HashSet<Key> = HashSet::new();
    seen.insert(key(&id));
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head].clone();
        head += 1;
        for h in gens {
            let gh = g.then(h);
            let k = key(&gh);
            if !seen.contains(&k) {
                if seen.len() >= cap {
                    return Err(Error::DomainTooLarge(cap as u64));
                }
                seen.insert(k);
                queue.push(gh);
            }
        }
    }
    Ok(queue)
}

/// Find a, b with a^2 + b^2 = -1 in GF(q) (q odd).
pub fn sum_of_squares_minus_one(f: &FieldRef) -> (Elem, Elem) {
    for a in f.elements() {
        for b in f.elements() {
            let lhs = f.add(f.mul(a, a), f.mul(b, b));
            if lhs == f.neg(1) {
                return (a, b);
            }
        }
    }
    unreachable!("-1 is always a sum of two squares in a finite field")
}

/// Square root in GF(q), if one exists.
pub fn sqrt(f: &FieldRef, x: Elem) -> Option<Elem> {
    if x == 0 {
        return Some(0);
    }
    let k = f.log(x);
    if k % 2 == 0 {
        Some(f.exp(k / 2))
    } else if (f.q - 1) % 2 == 1 {
        // odd group order: everything is a square
        Some(f.pow(x, ((f.q as i64 - 1) + 1) / 2))
    } else {
        None
    }
}

/// The standard quaternion pair i, j in GL_2(q): i = [[a, b], [b, -a]] with
/// a^2 + b^2 = -1, j = [[0, 1], [-1, 0]]; then i^2 = j^2 = -1, ij = -ji.
pub fn quaternion_pair(f: &FieldRef) -> (Matrix, Matrix) {
    let (a, b) = sum_of_squares_minus_one(f);
    let i = Matrix::from_rows(f.clone(), &[vec![a, b], vec![b, f.neg(a)]]);
    let j = Matrix::from_rows(f.clone(), &[vec![0, 1], vec![f.neg(1), 0]]);
    let m1 = Matrix::scalar(f.clone(), 2, f.neg(1));
    debug_assert_eq!(i.mul(&i), m1);
    debug_assert_eq!(j.mul(&j), m1);
    debug_assert_eq!(i.mul(&j), j.mul(&i).scale(f.neg(1)));
    (i, j)
}

/// omega = (-1 + i + j + k) / 2: an order-3 element cyclically permuting
/// i -> j -> k. Together with Q_8 it generates SL_2(3).
pub fn omega_element(f: &FieldRef, i: &Matrix, j: &Matrix) -> Matrix {
    let k = i.mul(j);
    let half = f.inv(2 % f.p);
    let m1 = Matrix::scalar(f.clone(), 2, f.neg(1));
    m1.add(i).add(j).add(&k).scale(half)
}

/// Generators of SL_2(3) <= GL_2(q) for odd q not divisible by 3... (works
/// whenever 2 is invertible, i.e. q odd).
pub fn sl2_3_gens(f: &FieldRef) -> Vec<Matrix> {
    let (i, j) = quaternion_pair(f);
    let w = omega_element(f, &i, &j);
    vec![i, j, w]
}

/// Generators of 2.S4^- = SL_2(3)<r> with r = (i + j)/sqrt(2); needs 2 to be
/// a square in GF(q).
pub fn two_s4_minus_gens(f: &FieldRef) -> Result<Vec<Matrix>, Error> {
    let (i, j) = quaternion_pair(f);
    let w = omega_element(f, &i, &j);
    let s2 = sqrt(f, 2 % f.p).ok_or_else(|| {
        Error::BadFieldParameters("2 must be a square for the 2.S4^- construction".into())
    })?;
    let r = i.add(&j).scale(f.inv(s2));
    Ok(vec![i, j, w, r])
}

/// Generators of SL_2(5) = 2.A5 <= GL_2(q) via the icosian element
/// sigma = (tau + tau^-1 i + j)/2, where tau is a root of x^2 - x - 1
/// (needs 5 to be a square in GF(q)).
pub fn sl2_5_gens(f: &FieldRef) -> Result<Vec<Matrix>, Error> {
    let (i, j) = quaternion_pair(f);
    let w = omega_element(f, &i, &j);
    let s5 = sqrt(f, 5 % f.p).ok_or_else(|| {
        Error::BadFieldParameters("5 must be a square for the SL_2(5) construction".into())
    })?;
    let half = f.inv(2 % f.p);
    let tau = f.mul(f.add(1, s5), half);
    let tau_inv = f.inv(tau);
    // sigma = (tau*1 + tau^-1 * i + 1 * j)/2: norm = (tau^2 + tau^-2 + 1)/4 = 1
    let sigma = Matrix::scalar(f.clone(), 2, tau)
        .add(&i.scale(tau_inv))
        .add(&j)
        .scale(half);
    debug_assert_eq!(sigma.det(), 1);
    Ok(vec![i, j, w, sigma])
}

/// Scalar subgroup generator of order m inside GF(q)^* (m must divide q-1).
pub fn scalar_of_order(f: &FieldRef, n: usize, m: u32) -> Matrix {
    assert_eq!((f.q - 1) % m, 0);
    let lam = f.exp((f.q - 1) / m);
    Matrix::scalar(f.clone(), n, lam)
}

/// All elements of GL_2(p) normalizing the group with the given element set
/// (tested on the generators). Brute-force scan, adequate for p <= 59.
pub fn normalizer_in_gl2(
    f: &FieldRef,
    group_elems: &HashSet<Matrix>,
    gens: &[Matrix],
) -> Vec<Matrix> {
    let mut out = Vec::new();
    // enumerate GL_2(p) by rows
    let q = f.q;
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = f.sub(f.mul(a, d), f.mul(b, c));
                    if det == 0 {
                        continue;
                    }
                    let m = Matrix::from_rows(f.clone(), &[vec![a, b], vec![c, d]]);
                    let mi = m.inverse().unwrap();
                    if gens.iter().all(|g| group_elems.contains(&mi.mul(g).mul(&m))) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;

    #[test]
    fn sl2_3_has_order_24() {
        for p in [5u32, 7, 11, 23] {
            let f = Field::new(p, 1, None).unwrap();
            let g = enumerate_matrix_group(&sl2_3_gens(&f), 100).unwrap();
            assert_eq!(g.len(), 24, "at p = {}", p);
        }
    }

    #[test]
    fn two_s4_minus_has_order_48_and_order4_transposition_lifts() {
        for p in [7u32, 23] {
            let f = Field::new(p, 1, None).unwrap();
            let gens = two_s4_minus_gens(&f).unwrap();
            let g = enumerate_matrix_group(&gens, 100).unwrap();
            assert_eq!(g.len(), 48, "at p = {}", p);
            // r has order 4 (minus type: transpositions lift to order 4)
            assert_eq!(gens[3].order(), 4);
        }
    }

    #[test]
    fn sl2_5_has_order_120() {
        for (p, e) in [(11u32, 1u32), (29, 1), (59, 1), (3, 2), (7, 2)] {
            let f = Field::new(p, e, None).unwrap();
            let g = enumerate_matrix_group(&sl2_5_gens(&f).unwrap(), 300).unwrap();
            assert_eq!(g.len(), 120, "at q = {}", f.q);
        }
    }
}
