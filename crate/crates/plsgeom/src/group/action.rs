//! Matrix/semilinear groups as permutation groups on their vector space.

use crate::algebra::field::{Elem, FieldRef};
use crate::algebra::semilinear::{decode, encode, SemilinearMap};
use crate::error::Error;
use crate::group::perm::{Perm, PermGroup, Point};

pub const FULL_SPACE_CAP: u64 = 1 << 24;

/// The point set V_n(q) with its canonical integer encoding.
#[derive(Clone)]
pub struct VSpace {
    pub field: FieldRef,
    pub n: usize,
    pub size: u64,
}

impl VSpace {
    pub fn new(field: FieldRef, n: usize) -> Self {
        let size = (field.q as u64).pow(n as u32);
        VSpace { field, n, size }
    }

    pub fn encode(&self, v: &[Elem]) -> Point {
        encode(&self.field, v) as Point
    }

    pub fn decode(&self, p: Point) -> Vec<Elem> {
        decode(&self.field, p as u64, self.n)
    }

    pub fn add(&self, a: Point, b: Point) -> Point {
        let va = self.decode(a);
        let vb = self.decode(b);
        self.encode(&crate::algebra::semilinear::vec_add(&self.field, &va, &vb))
    }

    pub fn sub(&self, a: Point, b: Point) -> Point {
        let va = self.decode(a);
        let vb = self.decode(b);
        self.encode(&crate::algebra::semilinear::vec_sub(&self.field, &va, &vb))
    }

    pub fn neg(&self, a: Point) -> Point {
        let va = self.decode(a);
        self.encode(&crate::algebra::semilinear::vec_neg(&self.field, &va))
    }

    /// Scalar multiple by a field element.
    pub fn scale(&self, lambda: Elem, a: Point) -> Point {
        let va = self.decode(a);
        self.encode(&crate::algebra::semilinear::vec_scale(&self.field, lambda, &va))
    }

    /// p-scalar multiple (prime-field scaling) by repeated addition encoding.
    pub fn scale_prime(&self, k: u32, a: Point) -> Point {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.add(acc, a);
        }
        acc
    }
}

/// A matrix-or-semilinear group given by generators of the zero-stabilizer
/// part, with an optional translation component for the affine group V:G_0.
#[derive(Clone)]
pub struct GroupSpec {
    pub space: VSpace,
    pub gens: Vec<SemilinearMap>,
    pub include_translations: bool,
    pub name: Option<String>,
}

impl GroupSpec {
    pub fn new(space: VSpace, gens: Vec<SemilinearMap>, include_translations: bool) -> Self {
        for g in &gens {
            assert_eq!(g.dim(), space.n);
            assert!(g.trans.is_none(), "GroupSpec generators are the zero-stabilizer part");
            assert!(g.mat.inverse().is_some(), "generators must be invertible");
        }
        GroupSpec { space, gens, include_translations, name: None }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    fn gen_to_perm(&self, g: &SemilinearMap) -> Perm {
        let n = self.space.size as usize;
        let mut images = Vec::with_capacity(n);
        for p in 0..n as Point {
            let v = self.space.decode(p);
            let w = g.apply(&v).expect("dimension checked at construction");
            images.push(self.space.encode(&w));
        }
        Perm(images)
    }

    /// The permutation action of G_0 on the full space (the zero vector is a
    /// fixed point of every generator).
    pub fn perm_stabilizer(&self) -> Result<PermGroup, Error> {
        if self.space.size > FULL_SPACE_CAP {
            return Err(Error::DomainTooLarge(self.space.size));
        }
        let gens = self.gens.iter().map(|g| self.gen_to_perm(g)).collect();
        Ok(PermGroup::new(self.space.size as usize, gens))
    }

    /// The permutation action of the full group: G_0 generators plus the
    /// basis translations when translations are included.
    pub fn perm_full(&self) -> Result<PermGroup, Error> {
        if self.space.size > FULL_SPACE_CAP {
            return Err(Error::DomainTooLarge(self.space.size));
        }
        let mut gens: Vec<Perm> = self.gens.iter().map(|g| self.gen_to_perm(g)).collect();
        if self.include_translations {
            let f = &self.space.field;
            // translations by e_i and by zeta*e_i generate the translation group
            for i in 0..self.space.n {
                for &lambda in &[1 as Elem, f.zeta()] {
                    let mut t = vec![0 as Elem; self.space.n];
                    t[i] = lambda;
                    let tr = SemilinearMap::translation(f.clone(), self.space.n, t);
                    gens.push(self.gen_to_perm(&tr));
                    if f.q == 2 {
                        break;
                    }
                }
            }
        }
        Ok(PermGroup::new(self.space.size as usize, gens))
    }

    /// Canonical representatives of projective points: vectors scaled so the
    /// first nonzero coordinate is 1; returns (reps, index-of-rep) and the
    /// permutation group induced on them.
    pub fn perm_projective(&self) -> Result<(Vec<Point>, PermGroup), Error> {
        let f = &self.space.field;
        let mut reps: Vec<Point> = Vec::new();
        let mut rep_index = vec![u32::MAX; self.space.size as usize];
        let canon = |p: Point| -> Point {
            let v = self.space.decode(p);
            let lead = v.iter().find(|&&c| c != 0).copied().expect("nonzero vector");
            let inv = f.inv(lead);
            self.space
                .encode(&v.iter().map(|&c| f.mul(inv, c)).collect::<Vec<_>>())
        };
        for p in 1..self.space.size as Point {
            let c = canon(p);
            if c == p {
                rep_index[p as usize] = reps.len() as u32;
                reps.push(p);
            }
        }
        for p in 1..self.space.size as Point {
            let c = canon(p);
            rep_index[p as usize] = rep_index[c as usize];
        }
        let m = reps.len();
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut images = Vec::with_capacity(m);
            for &r in &reps {
                let v = self.space.decode(r);
                let w = g.apply(&v)?;
                let q = self.space.encode(&w);
                images.push(rep_index[canon(q) as usize]);
            }
            gens.push(Perm(images));
        }
        Ok((reps, PermGroup::new(m, gens)))
    }

    /// Orbit sizes of G_0 on the nonzero vectors, sorted ascending.
    pub fn subdegrees(&self) -> Result<Vec<u64>, Error> {
        let g0 = self.perm_stabilizer()?;
        let nonzero: Vec<Point> = (1..self.space.size as Point).collect();
        let mut sizes: Vec<u64> = crate::group::orbit::orbits_all(g0.degree, &g0.gens, Some(&nonzero))
            .into_iter()
            .map(|o| o.len() as u64)
            .collect();
        sizes.sort_unstable();
        Ok(sizes)
    }
}
