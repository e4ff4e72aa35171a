//! Deterministic Schreier-Sims: base and strong generating set with
//! Schreier-vector transversals.

use super::perm::{Perm, Point};

struct Transversal {
    /// sv[p]: 0 = not in orbit, u32::MAX = root, else pool index + 1 of the
    /// generator g with p = prev^g.
    sv: Vec<u32>,
    orbit: Vec<Point>,
}

pub struct Bsgs {
    pub degree: usize,
    pub base: Vec<Point>,
    pool: Vec<Perm>,
    pool_inv: Vec<Perm>,
    /// level_gens[i] = indices of pool elements fixing base[0..i] pointwise.
    level_gens: Vec<Vec<usize>>,
    trans: Vec<Transversal>,
}

impl Bsgs {
    pub fn build(degree: usize, gens: &[Perm], base_hint: &[Point]) -> Bsgs {
        let mut b = Bsgs {
            degree,
            base: Vec::new(),
            pool: Vec::new(),
            pool_inv: Vec::new(),
            level_gens: vec![Vec::new()],
            trans: Vec::new(),
        };
        for &p in base_hint {
            b.push_base_point(p);
        }
        for g in gens {
            if !g.is_identity() {
                b.register(g.clone());
            }
        }
        b.complete();
        b
    }

    fn push_base_point(&mut self, p: Point) {
        self.base.push(p);
        self.trans.push(Transversal { sv: Vec::new(), orbit: Vec::new() });
        self.level_gens.push(Vec::new());
    }

    /// Register a new strong generator at the deepest level it belongs to;
    /// extends the base if it fixes every current base point.
    fn register(&mut self, g: Perm) -> usize {
        let mut lvl = 0;
        while lvl < self.base.len() && g.apply(self.base[lvl]) == self.base[lvl] {
            lvl += 1;
        }
        if lvl == self.base.len() {
            // greedy: take a point in the longest cycle of g, least index on ties
            let n = self.degree;
            let mut seen = vec![false; n];
            let mut best: Option<(usize, Point)> = None;
            for s in 0..n {
                if seen[s] || g.apply(s as Point) == s as Point {
                    continue;
                }
                let mut len = 0usize;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = g.apply(x as Point) as usize;
                    len += 1;
                }
                if best.map_or(true, |(bl, _)| len > bl) {
                    best = Some((len, s as Point));
                }
            }
            let (_, pt) = best.expect("non-identity permutation moves a point");
            self.push_base_point(pt);
        }
        let inv = g.inverse();
        self.pool.push(g);
        self.pool_inv.push(inv);
        let idx = self.pool.len() - 1;
        for t in 0..=lvl {
            self.level_gens[t].push(idx);
        }
        idx
    }

    fn rebuild_transversal(&mut self, lvl: usize) {
        let n = self.degree;
        let root = self.base[lvl];
        let gen_list = self.level_gens[lvl].clone();
        let mut sv = vec![0u32; n];
        sv[root as usize] = u32::MAX;
        let mut orbit = vec![root];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for &gi in &gen_list {
                let q = self.pool[gi].apply(p);
                if sv[q as usize] == 0 && q != root {
                    sv[q as usize] = gi as u32 + 1;
                    orbit.push(q);
                }
            }
        }
        self.trans[lvl] = Transversal { sv, orbit };
    }

    /// Transversal element mapping base[lvl] to p.
    fn trans_elem(&self, lvl: usize, p: Point) -> Perm {
        let t = &self.trans[lvl];
        debug_assert!(t.sv[p as usize] != 0);
        // walk from p to the root collecting generator indices
        let mut path = Vec::new();
        let mut x = p;
        while t.sv[x as usize] != u32::MAX {
            let gi = (t.sv[x as usize] - 1) as usize;
            path.push(gi);
            x = self.pool_inv[gi].apply(x);
        }
        // apply the path root-to-p: reverse order
        let n = self.degree;
        let mut images: Vec<Point> = (0..n as Point).collect();
        for &gi in path.iter().rev() {
            let g = &self.pool[gi];
            for im in images.iter_mut() {
                *im = g.apply(*im);
            }
        }
        Perm(images)
    }

    /// Sift g through levels from `start`; returns the residue and the level
    /// where sifting stopped (== base.len() on success).
    fn strip_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for lvl in start..self.base.len() {
            let b = self.base[lvl];
            let mut p = h.apply(b);
            if self.trans[lvl].sv.is_empty() || self.trans[lvl].sv[p as usize] == 0 {
                return (h, lvl);
            }
            // multiply by inverse transversal steps until b is fixed
            while p != b {
                let gi = (self.trans[lvl].sv[p as usize] - 1) as usize;
                h = h.then(&self.pool_inv[gi]);
                p = h.apply(b);
            }
        }
        (h, self.base.len())
    }

    fn complete(&mut self) {
        if self.base.is_empty() {
            return;
        }
        for lvl in 0..self.base.len() {
            self.rebuild_transversal(lvl);
        }
        let mut i = self.base.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            self.rebuild_transversal(lvl);
            let mut descend = true;
            'points: for oi in 0..self.trans[lvl].orbit.len() {
                let p = self.trans[lvl].orbit[oi];
                let up = self.trans_elem(lvl, p);
                let gen_list = self.level_gens[lvl].clone();
                for gi in gen_list {
                    let q = self.pool[gi].apply(p);
                    let uq_inv = self.trans_elem(lvl, q).inverse();
                    let s = up.then(&self.pool[gi]).then(&uq_inv);
                    if s.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip_from(&s, lvl + 1);
                    if h.is_identity() {
                        continue;
                    }
                    // new strong generator fixing base[0..j]
                    if j == self.base.len() {
                        self.register(h);
                    } else {
                        let inv = h.inverse();
                        self.pool.push(h);
                        self.pool_inv.push(inv);
                        let idx = self.pool.len() - 1;
                        for t in 0..=j {
                            if !self.level_gens[t].contains(&idx) {
                                self.level_gens[t].push(idx);
                            }
                        }
                    }
                    for t in lvl + 1..self.base.len() {
                        self.rebuild_transversal(t);
                    }
                    i = j.min(self.base.len() - 1) as isize;
                    descend = false;
                    break 'points;
                }
            }
            if descend {
                i -= 1;
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.trans.iter().map(|t| t.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.is_identity() {
            return true;
        }
        let (h, lvl) = self.strip_from(g, 0);
        lvl == self.base.len() && h.is_identity()
    }

    /// Strong generators fixing base[0] pointwise: generators of the
    /// stabilizer of base[0] when the chain was built with that base point
    /// first.
    pub fn point_stabilizer_gens(&self) -> Vec<Perm> {
        if self.base.is_empty() {
            return Vec::new();
        }
        if self.level_gens.len() < 2 {
            return Vec::new();
        }
        self.level_gens[1].iter().map(|&gi| self.pool[gi].clone()).collect()
    }

    pub fn fundamental_orbit(&self, lvl: usize) -> &[Point] {
        &self.trans[lvl].orbit
    }

    /// Transversal element of the top level mapping base[0] to p, if p lies
    /// in the fundamental orbit.
    pub fn top_transversal(&self, p: Point) -> Option<Perm> {
        if self.base.is_empty() {
            return None;
        }
        if self.trans[0].sv[p as usize] == 0 && p != self.base[0] {
            return None;
        }
        Some(self.trans_elem(0, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::PermGroup;

    fn cycle(n: usize, pts: &[Point]) -> Perm {
        let mut v: Vec<Point> = (0..n as Point).collect();
        for w in 0..pts.len() {
            v[pts[w] as usize] = pts[(w + 1) % pts.len()];
        }
        Perm(v)
    }

    #[test]
    fn symmetric_group_order() {
        let n = 7;
        let g = PermGroup::new(n, vec![cycle(n, &[0, 1]), cycle(n, &(0..n as Point).collect::<Vec<_>>())]);
        assert_eq!(g.order(), 5040);
    }

    #[test]
    fn alternating_group_membership() {
        let n = 6;
        let a6 = PermGroup::new(
            n,
            vec![cycle(n, &[0, 1, 2]), cycle(n, &[1, 2, 3, 4, 5])],
        );
        assert_eq!(a6.order(), 360);
        assert!(a6.contains(&cycle(n, &[0, 1, 2])));
        assert!(!a6.contains(&cycle(n, &[0, 1])));
    }

    #[test]
    fn m11_order_and_stabilizer() {
        // classical generators: an 11-cycle and (2,6,10,7)(3,9,4,5) on 0-indexed points
        let n = 11;
        let c = cycle(n, &(0..11).collect::<Vec<_>>());
        let t = cycle(n, &[2, 6, 10, 7]).then(&cycle(n, &[3, 9, 4, 5]));
        let m11 = PermGroup::new(n, vec![c, t]);
        // oracle: full closure enumeration by BFS multiplication
        let mut seen = std::collections::HashSet::new();
        let mut queue = vec![Perm::identity(n)];
        seen.insert(queue[0].clone());
        while let Some(g) = queue.pop() {
            for gen in &m11.gens {
                let h = g.then(gen);
                if seen.insert(h.clone()) {
                    queue.push(h);
                }
            }
        }
        assert_eq!(seen.len(), 7920);
        assert_eq!(m11.order(), 7920);
        // orbit-stabilizer at a point
        let chain = m11.bsgs_with_base(&[0]);
        assert_eq!(chain.order(), 7920);
        let stab = PermGroup::new(n, chain.point_stabilizer_gens());
        assert_eq!(stab.order(), 720);
        for g in &stab.gens {
            assert_eq!(g.apply(0), 0);
        }
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(5, vec![]);
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Perm::identity(5)));
    }
}
