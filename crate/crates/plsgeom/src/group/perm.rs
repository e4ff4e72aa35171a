//! Permutations on 0..n-1 and permutation groups given by generators.
//!
//! Points are u32. x^g = g[x], and composition is left-to-right:
//! mul(g, h)[x] = h[g[x]], matching the right-action convention.

use std::sync::OnceLock;

pub type Point = u32;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(pub Vec<Point>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as Point).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        self.0[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as Point == x)
    }

    /// apply self, then other.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0 as Point; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as Point;
        }
        Perm(inv)
    }

    pub fn from_images(images: Vec<Point>) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            assert!((x as usize) < n && !seen[x as usize], "not a permutation");
            seen[x as usize] = true;
        }
        Perm(images)
    }

    pub fn order(&self) -> u64 {
        // lcm of cycle lengths
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut order: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A permutation group on 0..degree-1 given by generators, with a lazily
/// built stabilizer chain.
pub struct PermGroup {
    pub degree: usize,
    pub gens: Vec<Perm>,
    bsgs: OnceLock<super::schreier::Bsgs>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        for g in &gens {
            assert_eq!(g.degree(), degree);
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup { degree, gens, bsgs: OnceLock::new() }
    }

    pub fn bsgs(&self) -> &super::schreier::Bsgs {
        self.bsgs.get_or_init(|| super::schreier::Bsgs::build(self.degree, &self.gens, &[]))
    }

    /// Stabilizer chain with a preferred initial base.
    pub fn bsgs_with_base(&self, base_hint: &[Point]) -> super::schreier::Bsgs {
        super::schreier::Bsgs::build(self.degree, &self.gens, base_hint)
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.bsgs().contains(g)
    }
}
