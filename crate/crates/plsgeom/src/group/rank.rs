//! Rank and primitivity of affine permutation groups.

use super::action::GroupSpec;
use super::orbit::orbits_all;
use super::perm::Point;
use crate::error::Error;

pub struct RankReport {
    pub rank: usize,
    pub subdegrees: Vec<u64>,
    /// Defined when rank = 3: primitivity via the subspace criterion.
    pub primitive: Option<bool>,
}

/// Rank = 1 + number of G_0-orbits on V*; for rank 3, the group is primitive
/// iff neither orbit together with 0 is closed under addition and prime-field
/// scaling.
pub fn rank_and_primitivity(spec: &GroupSpec) -> Result<RankReport, Error> {
    assert!(spec.include_translations, "rank is for the affine group V:G_0");
    let g0 = spec.perm_stabilizer()?;
    let nonzero: Vec<Point> = (1..spec.space.size as Point).collect();
    let orbits = orbits_all(g0.degree, &g0.gens, Some(&nonzero));
    let mut subdegrees: Vec<u64> = orbits.iter().map(|o| o.len() as u64).collect();
    subdegrees.sort_unstable();
    let rank = orbits.len() + 1;
    let primitive = if rank == 3 {
        Some(orbits.iter().all(|o| !closed_under_addition(spec, o)))
    } else {
        None
    };
    Ok(RankReport { rank, subdegrees, primitive })
}

/// Is X u {0} an F_p-subspace: closed under addition (prime-field scaling is
/// repeated addition).
fn closed_under_addition(spec: &GroupSpec, x: &[Point]) -> bool {
    let set: std::collections::HashSet<Point> = x.iter().copied().chain(std::iter::once(0)).collect();
    for &a in x {
        for &b in x {
            if !set.contains(&spec.space.add(a, b)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::linalg::Matrix;
    use crate::algebra::semilinear::SemilinearMap;
    use crate::group::action::VSpace;

    #[test]
    fn full_gammal1_9_is_two_transitive() {
        let f = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let space = VSpace::new(f.clone(), 1);
        let zeta = SemilinearMap::linear(Matrix::scalar(f.clone(), 1, f.zeta()));
        let sigma = SemilinearMap::semilinear(Matrix::identity(f.clone(), 1), 1);
        let spec = GroupSpec::new(space, vec![zeta, sigma], true);
        let r = rank_and_primitivity(&spec).unwrap();
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn paley_subgroup_is_rank_3_primitive() {
        // <zeta^2, sigma> on F_9: orbits are squares and non-squares
        let f = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let space = VSpace::new(f.clone(), 1);
        let z2 = SemilinearMap::linear(Matrix::scalar(f.clone(), 1, f.exp(2)));
        let sigma = SemilinearMap::semilinear(Matrix::identity(f.clone(), 1), 1);
        let spec = GroupSpec::new(space, vec![z2, sigma], true);
        let r = rank_and_primitivity(&spec).unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.subdegrees, vec![4, 4]);
        assert_eq!(r.primitive, Some(true));
    }
}
