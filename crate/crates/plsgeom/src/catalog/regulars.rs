//! The exceptional sharply 2-transitive groups: subgroups of GL_2(p) regular
//! on V_2(p)^*, one per catalog row, with their normalizer-stabilizer
//! fingerprints.

use super::quaternion::{
    enumerate_matrix_group, normalizer_in_gl2, scalar_of_order, sl2_3_gens, sl2_5_gens,
    two_s4_minus_gens,
};
use crate::algebra::field::{Field, FieldRef};
use crate::algebra::linalg::Matrix;
use crate::error::Error;
use std::collections::HashSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegularName {
    Q8,
    Sl23,
    TwoS4Minus,
    Sl23xC5,
    TwoS4MinusxC11,
    Sl25,
    Sl25xC7,
    Sl25xC29,
}

impl RegularName {
    pub fn parse(s: &str) -> Option<RegularName> {
        Some(match s {
            "Q8" => RegularName::Q8,
            "SL2(3)" => RegularName::Sl23,
            "2S4-" => RegularName::TwoS4Minus,
            "SL2(3)xC5" => RegularName::Sl23xC5,
            "2S4-xC11" => RegularName::TwoS4MinusxC11,
            "SL2(5)" => RegularName::Sl25,
            "SL2(5)xC7" => RegularName::Sl25xC7,
            "SL2(5)xC29" => RegularName::Sl25xC29,
        _ => return None,
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            RegularName::Q8 => "Q8",
            RegularName::Sl23 => "SL2(3)",
            RegularName::TwoS4Minus => "2S4-",
            RegularName::Sl23xC5 => "SL2(3)xC5",
            RegularName::TwoS4MinusxC11 => "2S4-xC11",
            RegularName::Sl25 => "SL2(5)",
            RegularName::Sl25xC7 => "SL2(5)xC7",
            RegularName::Sl25xC29 => "SL2(5)xC29",
        }
    }
}

/// The eight catalog rows: (p, name, |T_u|, T_u abelian, T_u exponent).
pub const ROWS: [(u32, RegularName, usize, bool, u64); 8] = [
    (3, RegularName::Q8, 6, false, 6),
    (5, RegularName::Sl23, 4, true, 4),
    (7, RegularName::TwoS4Minus, 3, true, 3),
    (11, RegularName::Sl23xC5, 2, true, 2),
    (23, RegularName::TwoS4MinusxC11, 1, true, 1),
    (11, RegularName::Sl25, 5, true, 5),
    (29, RegularName::Sl25xC7, 2, true, 2),
    (59, RegularName::Sl25xC29, 1, true, 1),
];

pub struct RegularGroup {
    pub p: u32,
    pub name: RegularName,
    pub field: FieldRef,
    pub gens: Vec<Matrix>,
    /// all elements, canonicalized by sorted data (least-generator ordering)
    pub elements: Vec<Matrix>,
}

fn generators_for(p: u32, name: RegularName) -> Result<(FieldRef, Vec<Matrix>), Error> {
    let f = Field::new(p, 1, None)?;
    let mut gens = match name {
        RegularName::Q8 => {
            let (i, j) = super::quaternion::quaternion_pair(&f);
            vec![i, j]
        }
        RegularName::Sl23 | RegularName::Sl23xC5 => sl2_3_gens(&f),
        RegularName::TwoS4Minus | RegularName::TwoS4MinusxC11 => two_s4_minus_gens(&f)?,
        RegularName::Sl25 | RegularName::Sl25xC7 | RegularName::Sl25xC29 => sl2_5_gens(&f)?,
    };
    match name {
        RegularName::Sl23xC5 => gens.push(scalar_of_order(&f, 2, 5)),
        RegularName::TwoS4MinusxC11 => gens.push(scalar_of_order(&f, 2, 11)),
        RegularName::Sl25xC7 => gens.push(scalar_of_order(&f, 2, 7)),
        RegularName::Sl25xC29 => gens.push(scalar_of_order(&f, 2, 29)),
        _ => {}
    }
    Ok((f, gens))
}

/// Construct and validate a catalog row: the group must be regular on
/// V_2(p)^* (transitive with order p^2 - 1, checked both ways).
pub fn regular_group(p: u32, name: RegularName) -> Result<RegularGroup, Error> {
    if !ROWS.iter().any(|&(rp, rn, ..)| rp == p && rn == name) {
        return Err(Error::UnknownRow(p, name.label().into()));
    }
    let (f, gens) = generators_for(p, name)?;
    let mut elements = enumerate_matrix_group(&gens, 4000)?;
    elements.sort_by(|a, b| a.data.cmp(&b.data));
    let expected = (p * p - 1) as usize;
    if elements.len() != expected {
        return Err(Error::NotRegular);
    }
    // transitivity on V_2(p)^*: the images of x = (1, 0) are pairwise distinct
    // and cover everything (regular <=> transitive of the right order)
    let x = [1u32, 0u32];
    let mut seen = HashSet::new();
    for m in &elements {
        seen.insert(m.apply_row(&x));
    }
    if seen.len() != expected || seen.contains(&vec![0, 0]) {
        return Err(Error::NotRegular);
    }
    Ok(RegularGroup { p, name, field: f, gens, elements })
}

pub struct TuFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: u64,
}

impl RegularGroup {
    /// T = N_{GL_2(p)}(R); T_u for u = (1, 0): order, commutativity, exponent.
    pub fn t_u_fingerprint(&self) -> TuFingerprint {
        let set: HashSet<Matrix> = self.elements.iter().cloned().collect();
        let norm = normalizer_in_gl2(&self.field, &set, &self.gens);
        let u = [1u32, 0];
        let tu: Vec<&Matrix> = norm.iter().filter(|m| m.apply_row(&u) == u).collect();
        let abelian = tu
            .iter()
            .all(|a| tu.iter().all(|b| a.mul(b) == b.mul(a)));
        let exponent = tu
            .iter()
            .map(|m| m.order())
            .fold(1u64, crate::group::perm::lcm);
        TuFingerprint { order: tu.len(), abelian, exponent }
    }

    /// The full normalizer N_{GL_2(p)}(R).
    pub fn normalizer(&self) -> Vec<Matrix> {
        let set: HashSet<Matrix> = self.elements.iter().cloned().collect();
        normalizer_in_gl2(&self.field, &set, &self.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rows_are_regular() {
        for &(p, name, ..) in ROWS.iter() {
            if p > 23 {
                continue; // the large rows are covered by the acceptance suite
            }
            let r = regular_group(p, name).unwrap();
            assert_eq!(r.elements.len(), (p * p - 1) as usize);
        }
    }

    #[test]
    fn tu_fingerprints_small() {
        // (7, 2S4-): T_u = C3; (11, SL2(5)): T_u = C5
        let r = regular_group(7, RegularName::TwoS4Minus).unwrap();
        let fp = r.t_u_fingerprint();
        assert_eq!((fp.order, fp.abelian, fp.exponent), (3, true, 3));
        let r = regular_group(11, RegularName::Sl25).unwrap();
        let fp = r.t_u_fingerprint();
        assert_eq!((fp.order, fp.abelian, fp.exponent), (5, true, 5));
        let r = regular_group(3, RegularName::Q8).unwrap();
        let fp = r.t_u_fingerprint();
        assert_eq!((fp.order, fp.abelian, fp.exponent), (6, false, 6));
    }
}
