//! Orbits with Schreier vectors and transversal-element recovery.

use super::perm::{Perm, Point};

pub struct Orbit {
    pub seed: Point,
    /// Sorted member list.
    pub members: Vec<Point>,
    /// sv[p]: 0 = not in orbit, u32::MAX = seed, else gen index + 1 with
    /// p = prev^gens[idx].
    sv: Vec<u32>,
}

impl Orbit {
    pub fn compute(degree: usize, gens: &[Perm], seed: Point) -> Orbit {
        let mut sv = vec![0u32; degree];
        sv[seed as usize] = u32::MAX;
        let mut queue = vec![seed];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for (gi, g) in gens.iter().enumerate() {
                let q = g.apply(p);
                if sv[q as usize] == 0 && q != seed {
                    sv[q as usize] = gi as u32 + 1;
                    queue.push(q);
                }
            }
        }
        queue.sort_unstable();
        Orbit { seed, members: queue, sv }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.sv[p as usize] != 0
    }

    /// A word in generator indices carrying the seed to p (seed-to-p order).
    pub fn word_to(&self, p: Point, gens_inv: &[Perm]) -> Option<Vec<usize>> {
        if self.sv[p as usize] == 0 {
            return None;
        }
        let mut path = Vec::new();
        let mut x = p;
        while self.sv[x as usize] != u32::MAX {
            let gi = (self.sv[x as usize] - 1) as usize;
            path.push(gi);
            x = gens_inv[gi].apply(x);
        }
        path.reverse();
        Some(path)
    }

    /// The transversal element mapping the seed to p, as a full permutation.
    pub fn transversal(&self, p: Point, gens: &[Perm], gens_inv: &[Perm]) -> Option<Perm> {
        let word = self.word_to(p, gens_inv)?;
        let n = self.sv.len();
        let mut images: Vec<Point> = (0..n as Point).collect();
        for gi in word {
            for im in images.iter_mut() {
                *im = gens[gi].apply(*im);
            }
        }
        Some(Perm(images))
    }
}

/// Orbit partition of a set of points (or the whole domain); each orbit is a
/// sorted Vec, and orbits are sorted by their least element.
pub fn orbits_all(degree: usize, gens: &[Perm], domain: Option<&[Point]>) -> Vec<Vec<Point>> {
    let mut in_domain = vec![false; degree];
    match domain {
        Some(pts) => {
            for &p in pts {
                in_domain[p as usize] = true;
            }
        }
        None => in_domain.iter_mut().for_each(|b| *b = true),
    }
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for s in 0..degree {
        if !in_domain[s] || seen[s] {
            continue;
        }
        let mut orbit = vec![s as Point];
        seen[s] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in gens {
                let q = g.apply(p) as usize;
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q as Point);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_and_transversal() {
        // C_5 acting on 5 points
        let g = Perm(vec![1, 2, 3, 4, 0]);
        let gens = vec![g];
        let gens_inv: Vec<Perm> = gens.iter().map(|g| g.inverse()).collect();
        let orb = Orbit::compute(5, &gens, 0);
        assert_eq!(orb.members, vec![0, 1, 2, 3, 4]);
        for p in 0..5u32 {
            let t = orb.transversal(p, &gens, &gens_inv).unwrap();
            assert_eq!(t.apply(0), p);
        }
    }

    #[test]
    fn partition_of_domain() {
        let g = Perm(vec![1, 0, 3, 2, 4]);
        let orbs = orbits_all(5, &[g], None);
        assert_eq!(orbs, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }
}
