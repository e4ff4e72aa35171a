//! The partial-linear-space data model and axiom checking.

use crate::error::Error;
use crate::group::lines::{canonical_line, fnv64};
use crate::group::Point;
use std::collections::HashMap;

/// A partial linear space on points 0..num_points-1. Lines are sorted
/// ascending internally and stored in lexicographic order; this is the
/// equality and hashing contract everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialLinearSpace {
    pub num_points: usize,
    pub p: u32,
    pub d: u32,
    pub lines: Vec<Vec<Point>>,
}

#[derive(Debug, Clone)]
pub struct PlsReport {
    pub is_pls: bool,
    pub is_linear_space: bool,
    pub is_graph: bool,
    pub is_proper: bool,
    pub line_size: Option<usize>,
    pub point_size: Option<usize>,
    pub s_of_zero: usize,
    pub line_count: usize,
    /// A pair covered by two lines, when the axiom fails.
    pub violation: Option<(Point, Point, usize, usize)>,
}

impl PartialLinearSpace {
    /// Canonicalize and validate index ranges; lines are deduplicated only by
    /// exact equality (a repeated line is reported as an error).
    pub fn new(
        p: u32,
        d: u32,
        num_points: usize,
        lines: Vec<Vec<Point>>,
    ) -> Result<PartialLinearSpace, Error> {
        let mut ls: Vec<Vec<Point>> = Vec::with_capacity(lines.len());
        for l in lines {
            let c = canonical_line(l);
            if let Some(&mx) = c.last() {
                if mx as usize >= num_points {
                    return Err(Error::PointOutOfRange(mx as u64));
                }
            }
            ls.push(c);
        }
        ls.sort();
        for w in ls.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLine);
            }
        }
        Ok(PartialLinearSpace { num_points, p, d, lines: ls })
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Per-point incidence index: for each point, the indices of the lines
    /// through it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.num_points];
        for (i, l) in self.lines.iter().enumerate() {
            for &pt in l {
                inc[pt as usize].push(i);
            }
        }
        inc
    }

    /// Full report: pairwise-intersection axiom via the per-point incidence
    /// index, linear-space and graph tests, size multisets.
    pub fn check(&self) -> PlsReport {
        let inc = self.incidence();
        let mut violation = None;
        // any two lines through a common point must meet only there
        'outer: for pt in 0..self.num_points {
            let ls = &inc[pt];
            for i in 0..ls.len() {
                for j in (i + 1)..ls.len() {
                    let a = &self.lines[ls[i]];
                    let b = &self.lines[ls[j]];
                    if let Some(other) = second_common_point(a, b, pt as Point) {
                        violation = Some((pt as Point, other, ls[i], ls[j]));
                        break 'outer;
                    }
                }
            }
        }
        let every_line_ge2 = self.lines.iter().all(|l| l.len() >= 2);
        let is_pls = violation.is_none() && every_line_ge2 && !self.lines.is_empty();

        let line_sizes: Vec<usize> = self.lines.iter().map(|l| l.len()).collect();
        let point_sizes: Vec<usize> = inc.iter().map(|v| v.len()).collect();
        let line_size = constant(&line_sizes);
        let point_size = constant(&point_sizes);

        // covered pairs count for the linear-space test
        let covered: usize = self.lines.iter().map(|l| l.len() * (l.len() - 1) / 2).sum();
        let all_pairs = self.num_points * (self.num_points - 1) / 2;
        let is_linear_space = is_pls && covered == all_pairs;
        let is_graph = is_pls && self.lines.iter().all(|l| l.len() == 2);

        let s_of_zero = if self.num_points > 0 { s_of_point(self, &inc, 0).len() } else { 0 };

        PlsReport {
            is_pls,
            is_linear_space,
            is_graph,
            is_proper: is_pls && !is_linear_space && !is_graph,
            line_size,
            point_size,
            s_of_zero,
            line_count: self.lines.len(),
            violation,
        }
    }

    /// The set of points collinear with x.
    pub fn s_of(&self, x: Point) -> Vec<Point> {
        let inc = self.incidence();
        s_of_point(self, &inc, x)
    }

    /// Undirected collinearity edge list.
    pub fn collinearity_graph(&self) -> Vec<(Point, Point)> {
        let mut edges = Vec::new();
        for l in &self.lines {
            for i in 0..l.len() {
                for j in (i + 1)..l.len() {
                    edges.push((l[i], l[j]));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    pub fn hash_lines(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        for l in &self.lines {
            h ^= fnv64(l);
            h = h.wrapping_mul(0x100000001b3);
        }
        h
    }

    /// Counting identities when line- and point-sizes are constant:
    /// |L| * k = numPoints * ell and |S(0)| = ell * (k - 1).
    pub fn counting_identities(&self) -> bool {
        let rep = self.check();
        match (rep.line_size, rep.point_size) {
            (Some(k), Some(l)) => {
                self.lines.len() as u128 * k as u128 == self.num_points as u128 * l as u128
                    && rep.s_of_zero == l * (k - 1)
            }
            _ => false,
        }
    }
}

fn s_of_point(s: &PartialLinearSpace, inc: &[Vec<usize>], x: Point) -> Vec<Point> {
    let mut out = Vec::new();
    for &li in &inc[x as usize] {
        for &p in &s.lines[li] {
            if p != x {
                out.push(p);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn second_common_point(a: &[Point], b: &[Point], at: Point) -> Option<Point> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i] != at {
                    return Some(a[i]);
                }
                i += 1;
                j += 1;
            }
        }
    }
    None
}

fn constant(v: &[usize]) -> Option<usize> {
    let first = *v.first()?;
    v.iter().all(|&x| x == first).then_some(first)
}

/// Brute-force O(|L|^2 k^2) pairwise check, used as an oracle on small
/// instances.
pub fn brute_force_pls_check(s: &PartialLinearSpace) -> bool {
    if s.lines.iter().any(|l| l.len() < 2) || s.lines.is_empty() {
        return false;
    }
    let mut pair_count: HashMap<(Point, Point), usize> = HashMap::new();
    for l in &s.lines {
        for i in 0..l.len() {
            for j in (i + 1)..l.len() {
                *pair_count.entry((l[i], l[j])).or_insert(0) += 1;
            }
        }
    }
    pair_count.values().all(|&c| c <= 1)
}

/// Star-based check for translation-closed line sets given only the lines
/// through 0: valid iff no nonzero point is covered twice by the 0-star.
/// With translation invariance this is equivalent to the full pairwise axiom.
pub fn zero_star_is_partial_linear(zero_lines: &[Vec<Point>]) -> bool {
    let mut seen = std::collections::HashSet::new();
    for l in zero_lines {
        for &p in l {
            if p != 0 && !seen.insert(p) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid3() -> PartialLinearSpace {
        // the 3x3 grid: rows and columns on 9 points
        let mut lines = Vec::new();
        for r in 0..3u32 {
            lines.push(vec![3 * r, 3 * r + 1, 3 * r + 2]);
            lines.push(vec![r, r + 3, r + 6]);
        }
        PartialLinearSpace::new(3, 2, 9, lines).unwrap()
    }

    #[test]
    fn grid_is_proper() {
        let g = grid3();
        let rep = g.check();
        assert!(rep.is_pls && rep.is_proper);
        assert_eq!(rep.line_size, Some(3));
        assert_eq!(rep.point_size, Some(2));
        assert_eq!(rep.s_of_zero, 4);
        assert!(g.counting_identities());
        assert!(brute_force_pls_check(&g));
    }

    #[test]
    fn double_covered_pair_reported() {
        let s = PartialLinearSpace::new(2, 2, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let rep = s.check();
        assert!(!rep.is_pls);
        let (a, b, _, _) = rep.violation.unwrap();
        assert_eq!((a.min(b), a.max(b)), (0, 1));
        assert!(!brute_force_pls_check(&s));
    }

    #[test]
    fn ag23_is_a_linear_space() {
        // AG_2(3): all 12 lines of the affine plane of order 3
        let pts = |a: u32, b: u32| a + 3 * b;
        let mut lines = Vec::new();
        // direction vectors (1,0), (0,1), (1,1), (1,2) through each point
        for (dx, dy) in [(1u32, 0u32), (0, 1), (1, 1), (1, 2)] {
            let mut seen = std::collections::HashSet::new();
            for x in 0..3u32 {
                for y in 0..3u32 {
                    let mut line: Vec<Point> = (0..3u32)
                        .map(|t| pts((x + t * dx) % 3, (y + t * dy) % 3))
                        .collect();
                    line.sort_unstable();
                    seen.insert(line);
                }
            }
            lines.extend(seen);
        }
        let s = PartialLinearSpace::new(3, 2, 9, lines).unwrap();
        let rep = s.check();
        assert!(rep.is_pls && rep.is_linear_space && !rep.is_proper);
        assert_eq!(s.line_count(), 12);
    }

    #[test]
    fn duplicate_line_rejected() {
        assert!(matches!(
            PartialLinearSpace::new(2, 2, 4, vec![vec![0, 1], vec![1, 0]]),
            Err(Error::DuplicateLine)
        ));
    }
}
