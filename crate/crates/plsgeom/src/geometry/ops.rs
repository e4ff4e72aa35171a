//! Products, intersections, restrictions, and linear-space splitting.

use super::pls::PartialLinearSpace;
use crate::error::Error;
use crate::group::lines::canonical_line;
use crate::group::{GroupSpec, Point};
use std::collections::{HashMap, HashSet};

/// Cartesian product: points (i, j) -> i + |P1| * j, lines are horizontal
/// copies of L1 and vertical copies of L2.
pub fn cartesian(s1: &PartialLinearSpace, s2: &PartialLinearSpace) -> PartialLinearSpace {
    let n1 = s1.num_points;
    let n2 = s2.num_points;
    let mut lines = Vec::with_capacity(n2 * s1.lines.len() + n1 * s2.lines.len());
    for j in 0..n2 {
        for l in &s1.lines {
            lines.push(l.iter().map(|&x| x + (j * n1) as Point).collect());
        }
    }
    for i in 0..n1 {
        for l in &s2.lines {
            lines.push(l.iter().map(|&y| i as Point + y * n1 as Point).collect());
        }
    }
    PartialLinearSpace::new(s1.p, s1.d + s2.d, n1 * n2, lines)
        .expect("product of valid spaces is valid")
}

/// Invariants of a cartesian product computed compositionally, for products
/// too large to materialize: (points, lines, k, ell, |S(0)|).
pub fn cartesian_invariants(
    s1: &PartialLinearSpace,
    s2: &PartialLinearSpace,
) -> (u128, u128, Option<usize>, Option<usize>, u128) {
    let r1 = s1.check();
    let r2 = s2.check();
    let pts = s1.num_points as u128 * s2.num_points as u128;
    let lines =
        s2.num_points as u128 * s1.lines.len() as u128 + s1.num_points as u128 * s2.lines.len() as u128;
    let k = match (r1.line_size, r2.line_size) {
        (Some(a), Some(b)) if a == b => Some(a),
        _ => None,
    };
    let ell = match (r1.point_size, r2.point_size) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    let s0 = r1.s_of_zero as u128 + r2.s_of_zero as u128;
    (pts, lines, k, ell, s0)
}

/// Intersection: lines are the pairwise intersections of size >= 2,
/// deduplicated.
pub fn intersect(
    s1: &PartialLinearSpace,
    s2: &PartialLinearSpace,
) -> Result<PartialLinearSpace, Error> {
    if s1.num_points != s2.num_points {
        return Err(Error::EmptyIntersection);
    }
    let mut lines: HashSet<Vec<Point>> = HashSet::new();
    // incidence index on s2 to avoid the full quadratic pass
    let inc2 = s2.incidence();
    for l1 in &s1.lines {
        let mut cand: HashMap<usize, usize> = HashMap::new();
        for &p in l1 {
            for &j in &inc2[p as usize] {
                *cand.entry(j).or_insert(0) += 1;
            }
        }
        for (j, count) in cand {
            if count >= 2 {
                let l2: HashSet<Point> = s2.lines[j].iter().copied().collect();
                let inter: Vec<Point> = l1.iter().copied().filter(|p| l2.contains(p)).collect();
                lines.insert(canonical_line(inter));
            }
        }
    }
    PartialLinearSpace::new(s1.p, s1.d, s1.num_points, lines.into_iter().collect())
}

/// Restriction to a point subset: intersect with the one-line space on the
/// subset, then relabel points by their position in the (sorted) subset.
pub fn restrict(s: &PartialLinearSpace, subset: &[Point]) -> Result<PartialLinearSpace, Error> {
    if subset.len() <= 1 {
        return Err(Error::EmptyIntersection);
    }
    let sub = canonical_line(subset.to_vec());
    let pos: HashMap<Point, Point> =
        sub.iter().enumerate().map(|(i, &p)| (p, i as Point)).collect();
    let mut lines = HashSet::new();
    for l in &s.lines {
        let inter: Vec<Point> = l.iter().filter_map(|p| pos.get(p).copied()).collect();
        if inter.len() >= 2 {
            lines.insert(canonical_line(inter));
        }
    }
    PartialLinearSpace::new(s.p, s.d, sub.len(), lines.into_iter().collect())
}

/// Split a linear space into the two line-orbits of the given group. The
/// group must preserve the line set and have exactly two orbits on it; every
/// line must have at least three points.
pub fn split_linear_space(
    ls: &PartialLinearSpace,
    spec: &GroupSpec,
) -> Result<(PartialLinearSpace, PartialLinearSpace), Error> {
    if ls.lines.iter().any(|l| l.len() < 3) {
        return Err(Error::LineSizeTwo);
    }
    let g = spec.perm_full()?;
    let line_index: HashMap<&Vec<Point>, usize> =
        ls.lines.iter().enumerate().map(|(i, l)| (l, i)).collect();
    // orbit partition of the line set under the generators
    let m = ls.lines.len();
    let mut color = vec![usize::MAX; m];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if color[start] != usize::MAX {
            continue;
        }
        let c = orbits.len();
        let mut orbit = vec![start];
        color[start] = c;
        let mut head = 0;
        while head < orbit.len() {
            let li = orbit[head];
            head += 1;
            for gen in &g.gens {
                let img = canonical_line(ls.lines[li].iter().map(|&p| gen.apply(p)).collect());
                match line_index.get(&img) {
                    Some(&j) => {
                        if color[j] == usize::MAX {
                            color[j] = c;
                            orbit.push(j);
                        }
                    }
                    None => return Err(Error::NotInvariant),
                }
            }
        }
        orbits.push(orbit);
    }
    if orbits.len() != 2 {
        return Err(Error::NotTwoOrbits(orbits.len()));
    }
    let take = |idx: &Vec<usize>| -> PartialLinearSpace {
        PartialLinearSpace::new(
            ls.p,
            ls.d,
            ls.num_points,
            idx.iter().map(|&i| ls.lines[i].clone()).collect(),
        )
        .expect("sub-line-set of a valid space")
    };
    Ok((take(&orbits[0]), take(&orbits[1])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_line_space(n: usize) -> PartialLinearSpace {
        PartialLinearSpace::new(3, 1, n, vec![(0..n as Point).collect()]).unwrap()
    }

    #[test]
    fn grid_as_product_of_trivial_spaces() {
        let t = trivial_line_space(3);
        let g = cartesian(&t, &t);
        let rep = g.check();
        assert!(rep.is_proper);
        assert_eq!(g.line_count(), 6);
        assert_eq!(rep.line_size, Some(3));
        assert_eq!(rep.point_size, Some(2));
        // line count formula |P2||L1| + |P1||L2|
        assert_eq!(g.line_count(), 3 * 1 + 3 * 1);
    }

    #[test]
    fn intersect_self_dedups() {
        let t = trivial_line_space(4);
        let i = intersect(&t, &t).unwrap();
        assert_eq!(i.lines, t.lines);
    }

    #[test]
    fn restrict_to_subset() {
        let g = cartesian(&trivial_line_space(3), &trivial_line_space(3));
        // restrict to the first row {0,1,2}
        let r = restrict(&g, &[0, 1, 2]).unwrap();
        assert_eq!(r.num_points, 3);
        assert_eq!(r.lines, vec![vec![0, 1, 2]]);
    }
}
