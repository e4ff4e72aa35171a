//! Block systems: the subgroup characterization of blocks containing a
//! point, minimal blocks, and the join-lattice census of all blocks.

use super::orbit::Orbit;
use super::perm::{Perm, PermGroup, Point};
use crate::error::Error;
use std::collections::HashMap;

/// Cap on the number of distinct blocks explored by the join closure.
pub const BLOCK_LATTICE_CAP: usize = 10_000;
/// Cap on suborbit sizes for the census.
pub const SUBORBIT_CAP: u64 = 1_000_000;

/// Context for block computations of G acting on the G-orbit of x.
/// Holds stabilizer generators of x and the Schreier data of the orbit.
pub struct BlockContext<'a> {
    pub group: &'a PermGroup,
    pub x: Point,
    pub orbit: Orbit,
    stab_gens: Vec<Perm>,
    gens_inv: Vec<Perm>,
    /// Cache of materialized transversal elements t_y (x -> y).
    tcache: HashMap<Point, usize>,
    tpool: Vec<Perm>,
}

/// One block of the census: its sorted points and the transversal elements
/// (indices into the context pool) that generate it over G_x.
#[derive(Clone)]
pub struct Block {
    pub pts: Vec<Point>,
    tgens: Vec<usize>,
}

pub struct BlockReport {
    pub x: Point,
    pub suborbit_len: usize,
    pub blocks: Vec<Block>,
}

impl<'a> BlockContext<'a> {
    pub fn new(group: &'a PermGroup, x: Point) -> Result<Self, Error> {
        let orbit = Orbit::compute(group.degree, &group.gens, x);
        if orbit.len() as u64 > SUBORBIT_CAP {
            return Err(Error::SuborbitTooLarge(orbit.len() as u64));
        }
        let chain = group.bsgs_with_base(&[x]);
        let stab_gens = chain.point_stabilizer_gens();
        let gens_inv: Vec<Perm> = group.gens.iter().map(|g| g.inverse()).collect();
        Ok(BlockContext {
            group,
            x,
            orbit,
            stab_gens,
            gens_inv,
            tcache: HashMap::new(),
            tpool: Vec::new(),
        })
    }

    fn transversal_idx(&mut self, y: Point) -> usize {
        if let Some(&i) = self.tcache.get(&y) {
            return i;
        }
        let t = self
            .orbit
            .transversal(y, &self.group.gens, &self.gens_inv)
            .expect("y must lie in the orbit of x");
        self.tpool.push(t);
        let i = self.tpool.len() - 1;
        self.tcache.insert(y, i);
        i
    }

    /// Orbit of x under < G_x, t-gens >, i.e. the candidate block.
    fn close(&self, tgens: &[usize]) -> Vec<Point> {
        let mut seen = vec![false; self.group.degree];
        seen[self.x as usize] = true;
        let mut queue = vec![self.x];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.stab_gens {
                let q = g.apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    queue.push(q);
                }
            }
            for &ti in tgens {
                let q = self.tpool[ti].apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    queue.push(q);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// The minimal block of G containing {x, y}: x^<G_x, t_y>.
    pub fn minimal_block(&mut self, y: Point) -> Block {
        let ti = self.transversal_idx(y);
        let pts = self.close(&[ti]);
        Block { pts, tgens: vec![ti] }
    }

    /// The join B1 v B2: the minimal block containing B1 union B2,
    /// computed as x^<H1, H2>.
    pub fn join(&self, b1: &Block, b2: &Block) -> Block {
        let mut tgens = b1.tgens.clone();
        for &t in &b2.tgens {
            if !tgens.contains(&t) {
                tgens.push(t);
            }
        }
        let pts = self.close(&tgens);
        Block { pts, tgens }
    }

    /// Is B a block? Uses the subgroup characterization: B is a block iff
    /// x^< G_x, t_y : y in B > = B.
    pub fn is_block(&mut self, b: &[Point]) -> Result<bool, Error> {
        if !b.contains(&self.x) {
            return Err(Error::PointNotInSet(self.x));
        }
        for &y in b {
            if !self.orbit.contains(y) {
                return Err(Error::PointNotInSet(y));
            }
        }
        let x = self.x;
        let mut tgens: Vec<usize> = Vec::new();
        for &y in b.iter().filter(|&&y| y != x) {
            tgens.push(self.transversal_idx(y));
        }
        let mut sorted = b.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(self.close(&tgens) == sorted)
    }

    /// All blocks of G on the orbit of x that contain x, by closing the
    /// minimal blocks under joins. `size_filter`, when given, keeps only the
    /// listed block sizes in the report (the closure itself is unfiltered).
    /// Trivial blocks (the singleton and the full orbit) are omitted.
    pub fn blocks_containing(&mut self, size_filter: Option<&[usize]>) -> Result<BlockReport, Error> {
        let orbit_members = self.orbit.members.clone();
        let full = orbit_members.len();
        let mut by_key: HashMap<Vec<Point>, Block> = HashMap::new();
        let mut minimal: Vec<Block> = Vec::new();
        for &y in &orbit_members {
            if y == self.x {
                continue;
            }
            let b = self.minimal_block(y);
            if b.pts.len() == full {
                // the full orbit; remember it only as a join absorber
                by_key.entry(b.pts.clone()).or_insert_with(|| b.clone());
                continue;
            }
            if by_key.insert(b.pts.clone(), b.clone()).is_none() {
                minimal.push(b);
            }
        }
        // join closure
        let mut frontier: Vec<Block> = minimal.clone();
        while let Some(b) = frontier.pop() {
            if by_key.len() > BLOCK_LATTICE_CAP {
                return Err(Error::BlockLatticeOverflow(BLOCK_LATTICE_CAP));
            }
            for m in &minimal {
                if m.pts == b.pts {
                    continue;
                }
                // skip if one contains the other (join is the bigger one)
                if is_subset(&m.pts, &b.pts) {
                    continue;
                }
                let j = self.join(&b, m);
                if !by_key.contains_key(&j.pts) {
                    by_key.insert(j.pts.clone(), j.clone());
                    if j.pts.len() < full {
                        frontier.push(j);
                    }
                }
            }
        }
        let mut blocks: Vec<Block> = by_key
            .into_values()
            .filter(|b| b.pts.len() > 1 && b.pts.len() < full)
            .filter(|b| size_filter.map_or(true, |f| f.contains(&b.pts.len())))
            .collect();
        blocks.sort_by(|a, b| (a.pts.len(), &a.pts).cmp(&(b.pts.len(), &b.pts)));
        Ok(BlockReport { x: self.x, suborbit_len: full, blocks })
    }
}

fn is_subset(a: &[Point], b: &[Point]) -> bool {
    // both sorted
    let mut i = 0;
    for &x in a {
        while i < b.len() && b[i] < x {
            i += 1;
        }
        if i == b.len() || b[i] != x {
            return false;
        }
    }
    true
}

/// Brute-force block oracle for small suborbits: every block containing x is
/// a union of G_x-orbits, so test all unions.
pub fn brute_force_blocks(group: &PermGroup, x: Point) -> Vec<Vec<Point>> {
    let orbit = Orbit::compute(group.degree, &group.gens, x);
    assert!(orbit.len() <= 100, "brute force oracle capped at 100 points");
    let chain = group.bsgs_with_base(&[x]);
    let stab_gens = chain.point_stabilizer_gens();
    let sub_orbits = super::orbit::orbits_all(group.degree, &stab_gens, Some(&orbit.members));
    // the orbit of x under G_x is {x} itself plus others; x's own cell first
    let mut cells: Vec<Vec<Point>> = Vec::new();
    let mut x_cell = None;
    for o in sub_orbits {
        if o.contains(&x) {
            x_cell = Some(o);
        } else {
            cells.push(o);
        }
    }
    let x_cell = x_cell.unwrap();
    assert!(cells.len() <= 20, "too many stabilizer orbits for brute force");
    let mut out = Vec::new();
    for mask in 0u64..(1 << cells.len()) {
        let mut b: Vec<Point> = x_cell.clone();
        for (i, cell) in cells.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b.extend_from_slice(cell);
            }
        }
        b.sort_unstable();
        if is_block_direct(group, &b, &orbit) {
            out.push(b);
        }
    }
    out.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    out
}

/// Direct definition check: for every generator-word image (BFS over the
/// set-orbit), B^g = B or disjoint.
fn is_block_direct(group: &PermGroup, b: &[Point], _orbit: &Orbit) -> bool {
    let mut seen = std::collections::HashSet::new();
    let key = |s: &[Point]| s.to_vec();
    let mut queue = vec![b.to_vec()];
    seen.insert(key(b));
    while let Some(cur) = queue.pop() {
        for g in &group.gens {
            let mut img: Vec<Point> = cur.iter().map(|&p| g.apply(p)).collect();
            img.sort_unstable();
            // img must equal b or be disjoint from b
            let inter = intersect_count(&img, b);
            if inter != 0 && img != b {
                return false;
            }
            if seen.insert(key(&img)) {
                queue.push(img);
            }
        }
    }
    true
}

fn intersect_count(a: &[Point], b: &[Point]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, pts: &[Point]) -> Perm {
        let mut v: Vec<Point> = (0..n as Point).collect();
        for w in 0..pts.len() {
            v[pts[w] as usize] = pts[(w + 1) % pts.len()];
        }
        Perm(v)
    }

    #[test]
    fn singleton_and_full_orbit_are_blocks() {
        let n = 6;
        let g = PermGroup::new(n, vec![cycle(n, &[0, 1, 2, 3, 4, 5])]);
        let mut ctx = BlockContext::new(&g, 0).unwrap();
        assert!(ctx.is_block(&[0]).unwrap());
        assert!(ctx.is_block(&[0, 1, 2, 3, 4, 5]).unwrap());
        // C6 on 6 points: blocks through 0 of sizes 2 and 3
        assert!(ctx.is_block(&[0, 3]).unwrap());
        assert!(ctx.is_block(&[0, 2, 4]).unwrap());
        assert!(!ctx.is_block(&[0, 1]).unwrap());
    }

    #[test]
    fn census_matches_brute_force_on_c12() {
        let n = 12;
        let g = PermGroup::new(n, vec![cycle(n, &(0..12).collect::<Vec<_>>())]);
        let mut ctx = BlockContext::new(&g, 0).unwrap();
        let report = ctx.blocks_containing(None).unwrap();
        // nontrivial blocks through 0 of C12 <-> divisors 2,3,4,6
        let sizes: Vec<usize> = report.blocks.iter().map(|b| b.pts.len()).collect();
        assert_eq!(sizes, vec![2, 3, 4, 6]);
        let brute = brute_force_blocks(&g, 0);
        for b in &report.blocks {
            assert!(brute.contains(&b.pts));
        }
        // brute force also finds trivial blocks; nontrivial counts agree
        let brute_nontrivial: Vec<_> = brute.iter().filter(|b| b.len() > 1 && b.len() < 12).collect();
        assert_eq!(brute_nontrivial.len(), report.blocks.len());
    }

    #[test]
    fn symmetric_group_has_no_nontrivial_blocks() {
        let n = 7;
        let g = PermGroup::new(
            n,
            vec![cycle(n, &[0, 1]), cycle(n, &(0..7).collect::<Vec<_>>())],
        );
        let mut ctx = BlockContext::new(&g, 0).unwrap();
        let report = ctx.blocks_containing(None).unwrap();
        assert!(report.blocks.is_empty());
    }

    #[test]
    fn minimal_block_properties() {
        // S4 acting on the 6 unordered pairs: imprimitive with blocks of size 3? no --
        // use D4 on 4 points: blocks {0,2} and {1,3}
        let n = 4;
        let r = cycle(n, &[0, 1, 2, 3]);
        let s = cycle(n, &[1, 3]);
        let g = PermGroup::new(n, vec![r, s]);
        assert_eq!(g.order(), 8);
        let mut ctx = BlockContext::new(&g, 0).unwrap();
        let b = ctx.minimal_block(2);
        assert_eq!(b.pts, vec![0, 2]);
        assert!(ctx.is_block(&b.pts.clone()).unwrap());
        let b1 = ctx.minimal_block(1);
        assert_eq!(b1.pts.len(), 4);
        // brute-force containment: every minimal block is contained in every
        // block containing the pair
        let brute = brute_force_blocks(&g, 0);
        for blk in brute {
            if blk.contains(&2) {
                assert!(super::is_subset(&[0, 2], &blk));
            }
        }
    }
}
