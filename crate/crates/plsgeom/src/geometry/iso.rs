//! Automorphism verification and best-effort isomorphism search.

use super::pls::PartialLinearSpace;
use crate::error::Error;
use crate::group::lines::canonical_line;
use crate::group::{Perm, Point};
use std::collections::HashSet;

pub const ISO_SEARCH_CAP: usize = 730;

/// Every generator must map the line set onto itself.
pub fn verify_automorphisms(s: &PartialLinearSpace, gens: &[Perm]) -> bool {
    let set: HashSet<&Vec<Point>> = s.lines.iter().collect();
    for g in gens {
        assert_eq!(g.degree(), s.num_points);
        for l in &s.lines {
            let img = canonical_line(l.iter().map(|&p| g.apply(p)).collect());
            if !set.contains(&img) {
                return false;
            }
        }
    }
    true
}

/// Apply a point map to the whole geometry.
pub fn apply_map(s: &PartialLinearSpace, g: &Perm) -> PartialLinearSpace {
    PartialLinearSpace::new(
        s.p,
        s.d,
        s.num_points,
        s.lines.iter().map(|l| l.iter().map(|&p| g.apply(p)).collect()).collect(),
    )
    .expect("permutation image of a valid space")
}

/// Backtracking isomorphism search guided by collinearity degree and
/// line-size refinement. Returns a certified point bijection or None after
/// exhaustion. Capped at 730 points.
pub fn search_isomorphism(
    s1: &PartialLinearSpace,
    s2: &PartialLinearSpace,
) -> Result<Option<Perm>, Error> {
    if s1.num_points > ISO_SEARCH_CAP {
        return Err(Error::TooLargeForSearch(s1.num_points));
    }
    if s1.num_points != s2.num_points || s1.lines.len() != s2.lines.len() {
        return Ok(None);
    }
    let n = s1.num_points;

    // point invariants: (degree in collinearity graph, sorted line sizes through the point)
    let profile = |s: &PartialLinearSpace| -> Vec<(usize, Vec<usize>)> {
        let inc = s.incidence();
        (0..n)
            .map(|p| {
                let mut sizes: Vec<usize> = inc[p].iter().map(|&li| s.lines[li].len()).collect();
                sizes.sort_unstable();
                (s.s_of(p as Point).len(), sizes)
            })
            .collect()
    };
    let prof1 = profile(s1);
    let prof2 = profile(s2);
    {
        let mut a = prof1.clone();
        let mut b = prof2.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(None);
        }
    }

    let inc1 = s1.incidence();
    let lineset2: HashSet<&Vec<Point>> = s2.lines.iter().collect();

    // order points of s1 by decreasing constraint (more lines first)
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(inc1[p].len()));

    let mut image = vec![u32::MAX; n];
    let mut used = vec![false; n];

    // partial consistency: for every line of s1 fully mapped, its image must be a line of s2;
    // cheaper incremental check: when assigning p, every line through p whose other points
    // are all assigned must map into the line set; lines partially assigned must be
    // extendable -- we only check the full ones plus pair-collinearity.
    struct Ctx<'a> {
        s1: &'a PartialLinearSpace,
        inc1: &'a [Vec<usize>],
        lineset2: &'a HashSet<&'a Vec<Point>>,
        prof1: &'a [(usize, Vec<usize>)],
        prof2: &'a [(usize, Vec<usize>)],
        coll2: Vec<HashSet<Point>>,
    }
    let coll2: Vec<HashSet<Point>> =
        (0..n).map(|p| s2.s_of(p as Point).into_iter().collect()).collect();
    let coll1: Vec<HashSet<Point>> =
        (0..n).map(|p| s1.s_of(p as Point).into_iter().collect()).collect();
    let ctx = Ctx { s1, inc1: &inc1, lineset2: &lineset2, prof1: &prof1, prof2: &prof2, coll2 };

    fn consistent(ctx: &Ctx, image: &[u32], p: usize) -> bool {
        for &li in &ctx.inc1[p] {
            let line = &ctx.s1.lines[li];
            if line.iter().all(|&x| image[x as usize] != u32::MAX) {
                let img = canonical_line(line.iter().map(|&x| image[x as usize]).collect());
                if !ctx.lineset2.contains(&img) {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(
        ctx: &Ctx,
        order: &[usize],
        depth: usize,
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        coll1: &[HashSet<Point>],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        for q in 0..image.len() {
            if used[q] || ctx.prof1[p] != ctx.prof2[q] {
                continue;
            }
            // pairwise collinearity consistency with already-assigned points
            let ok = order[..depth].iter().all(|&r| {
                let qi = image[r] as usize;
                coll1[p].contains(&(r as Point)) == ctx.coll2[qi].contains(&(q as Point))
            });
            if !ok {
                continue;
            }
            image[p] = q as u32;
            used[q] = true;
            if consistent(ctx, image, p)
                && backtrack(ctx, order, depth + 1, image, used, coll1)
            {
                return true;
            }
            image[p] = u32::MAX;
            used[q] = false;
        }
        false
    }

    if backtrack(&ctx, &order, 0, &mut image, &mut used, &coll1) {
        let g = Perm::from_images(image);
        // certify
        debug_assert!(apply_map(s1, &g).lines == s2.lines);
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid3() -> PartialLinearSpace {
        let mut lines = Vec::new();
        for r in 0..3u32 {
            lines.push(vec![3 * r, 3 * r + 1, 3 * r + 2]);
            lines.push(vec![r, r + 3, r + 6]);
        }
        PartialLinearSpace::new(3, 2, 9, lines).unwrap()
    }

    #[test]
    fn identity_is_an_isomorphism() {
        let g = grid3();
        let iso = search_isomorphism(&g, &g).unwrap().unwrap();
        assert_eq!(apply_map(&g, &iso).lines, g.lines);
    }

    #[test]
    fn relabeled_grid_found_isomorphic() {
        let g = grid3();
        // transpose the grid: (i, j) -> (j, i)
        let t = Perm::from_images((0..9u32).map(|p| (p % 3) * 3 + p / 3).collect());
        let h = apply_map(&g, &t);
        assert!(verify_automorphisms(&g, &[t.clone()]));
        let iso = search_isomorphism(&g, &h).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn different_spaces_not_isomorphic() {
        let g = grid3();
        // a path-like graph geometry on 9 points
        let s = PartialLinearSpace::new(3, 2, 9, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(search_isomorphism(&g, &s).unwrap().is_none());
    }
}
