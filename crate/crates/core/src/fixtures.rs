//! Presentation and homomorphism fixtures shipped with the crate.
//!
//! The raw text lives in the workspace-level `fixtures/` directory and is
//! compiled in, so both the library and the CLI can resolve the files by
//! bare name without touching the filesystem.

use crate::presentation::{GroupHom, GroupPresentation};
use crate::Result;

/// 24-generator, 24-relator Wirtinger presentation of `G(K_T)`.
pub const KT_WIRTINGER: &str = include_str!("../../../fixtures/kt_wirtinger.pres");
/// Three-generator presentation of `G(K_T)` on `x1, x6, x17`.
pub const KT_SIMPLIFIED: &str = include_str!("../../../fixtures/kt_simplified.pres");
/// Two-generator trefoil presentation.
pub const TREFOIL: &str = include_str!("../../../fixtures/trefoil.pres");
/// Two-generator figure-eight presentation.
pub const FIGURE8: &str = include_str!("../../../fixtures/figure8.pres");
/// Five-generator presentation of `G(J_-1)` on `x2, x10, x19, x22, x30`.
pub const J_MINUS1: &str = include_str!("../../../fixtures/j_minus1.pres");
/// The homomorphism `f: G(K_T) -> G(trefoil)` with surjectivity witnesses.
pub const F_KT_TO_TREFOIL: &str = include_str!("../../../fixtures/f_kt_to_trefoil.hom");

/// Look up fixture text by file name, e.g. `"trefoil.pres"`.
pub fn builtin(name: &str) -> Option<&'static str> {
    match name {
        "kt_wirtinger.pres" => Some(KT_WIRTINGER),
        "kt_simplified.pres" => Some(KT_SIMPLIFIED),
        "trefoil.pres" => Some(TREFOIL),
        "figure8.pres" => Some(FIGURE8),
        "j_minus1.pres" => Some(J_MINUS1),
        "f_kt_to_trefoil.hom" => Some(F_KT_TO_TREFOIL),
        _ => None,
    }
}

pub const BUILTIN_NAMES: &[&str] = &[
    "kt_wirtinger.pres",
    "kt_simplified.pres",
    "trefoil.pres",
    "figure8.pres",
    "j_minus1.pres",
    "f_kt_to_trefoil.hom",
];

pub fn kt_wirtinger() -> GroupPresentation {
    GroupPresentation::parse(KT_WIRTINGER).expect("builtin fixture parses")
}

pub fn kt_simplified() -> GroupPresentation {
    GroupPresentation::parse(KT_SIMPLIFIED).expect("builtin fixture parses")
}

pub fn trefoil() -> GroupPresentation {
    GroupPresentation::parse(TREFOIL).expect("builtin fixture parses")
}

pub fn figure8() -> GroupPresentation {
    GroupPresentation::parse(FIGURE8).expect("builtin fixture parses")
}

pub fn j_minus1() -> GroupPresentation {
    GroupPresentation::parse(J_MINUS1).expect("builtin fixture parses")
}

pub fn f_kt_to_trefoil() -> Result<GroupHom> {
    GroupHom::parse(F_KT_TO_TREFOIL, &kt_wirtinger(), &trefoil())
}

/// Every shipped knot-group presentation (all meridional).
pub fn knot_presentations() -> Vec<GroupPresentation> {
    vec![kt_wirtinger(), kt_simplified(), trefoil(), figure8(), j_minus1()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse_with_expected_shapes() {
        let kt = kt_wirtinger();
        assert_eq!(kt.gen_count(), 24);
        assert_eq!(kt.relators.len(), 24);
        assert_eq!(kt.meridian, Some(0));

        let kt3 = kt_simplified();
        assert_eq!(kt3.gen_count(), 3);
        assert_eq!(kt3.relators.len(), 2);

        assert_eq!(trefoil().gen_count(), 2);
        assert_eq!(figure8().gen_count(), 2);

        let j = j_minus1();
        assert_eq!(j.gen_count(), 5);
        assert_eq!(j.relators.len(), 4);
    }

    #[test]
    fn all_knot_groups_abelianize_to_z() {
        for g in knot_presentations() {
            assert!(g.abelianization().is_infinite_cyclic(), "{}", g.name);
        }
    }

    #[test]
    fn fixture_round_trips() {
        for g in knot_presentations() {
            let reparsed = GroupPresentation::parse(&g.serialize()).unwrap();
            assert_eq!(g, reparsed);
        }
    }

    #[test]
    fn hom_fixture_parses() {
        let f = f_kt_to_trefoil().unwrap();
        assert_eq!(f.images.len(), 24);
        assert_eq!(f.witnesses.len(), 2);
        // f(x1) = y1 y2 y1^-1 y2 y1^-1
        let expect = f.target.word("y1 y2 y1^-1 y2 y1^-1").unwrap();
        assert_eq!(f.images[0], expect);
    }
}
