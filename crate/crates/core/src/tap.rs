//! The twisted Alexander polynomial of a knot group presentation (numerator
//! and denominator), and the divisibility obstruction to the existence of a
//! meridional epimorphism between two knot groups.
//!
//! For a deficiency-one presentation with `k` generators, the twisted
//! Alexander matrix has `(k-1) x k` blocks `Phi(dr_i/dx_j)`. Deleting the
//! block column of a generator `x_j` with `det Phi(x_j - 1) != 0` yields a
//! square matrix `M_j`; the pair is `(det M_j, det Phi(x_j - 1))`, each well
//! defined up to units of `F_p[t, t^-1]` when all generators are conjugate
//! meridians. Raw Wirtinger input (as many relators as generators) carries
//! one redundant relator; the last one is dropped and recorded.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{Fp, LaurentMatrix, LaurentPoly, Mat2};
use crate::fox::{fox_derivative, phi_evaluate, phi_word};
use crate::presentation::{FreeWord, GroupPresentation};
use crate::reps::{
    enumerate_representations, image_subgroup, EnumOptions, RepList, Representation,
};
use crate::{Error, Result};

/// Numerator and denominator of a twisted Alexander polynomial, in
/// unit-canonical form, together with the relative unit between the two raw
/// determinants.
///
/// Each polynomial is an invariant only up to units `c * t^k`, so both are
/// stored canonically. The raw pair as computed carries one extra piece of
/// data: the unit by which the raw numerator differs from its canonical form
/// *relative to* the denominator's unit. Distinct-pair counting ("how many
/// twisted Alexander polynomials does this knot have over F_p") is done on
/// the pair modulo a single common unit, which keeps that relative unit; two
/// representations can share both canonical polynomials yet differ in how
/// the pair sits together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TapPair {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    /// `(c, k)`: the raw pair equals `(c t^k * numerator, denominator)` up
    /// to one common unit.
    pub pair_unit: (u32, i64),
    /// Generator column deleted from the twisted Alexander matrix.
    pub deleted_column: usize,
    /// Index of the redundant relator dropped from raw Wirtinger input.
    pub dropped_relator: Option<usize>,
}

impl TapPair {
    /// Coefficient-vector form of the canonical polynomials.
    pub fn key(&self) -> (Vec<u32>, Vec<u32>) {
        (self.numerator.canonical_coeff_vec(), self.denominator.canonical_coeff_vec())
    }

    /// Distinctness key for the pair modulo one common unit.
    pub fn joint_key(&self) -> (Vec<u32>, Vec<u32>, (u32, i64)) {
        (
            self.numerator.canonical_coeff_vec(),
            self.denominator.canonical_coeff_vec(),
            self.pair_unit,
        )
    }

    /// The raw-pair numerator normalized by the denominator's unit.
    pub fn numerator_relative(&self) -> LaurentPoly {
        self.numerator.mul_unit(self.pair_unit.0, self.pair_unit.1)
    }

    /// The pair with `t` replaced by `t^-1`, re-normalized.
    pub fn substitute_inverse(&self) -> TapPair {
        let num_rel = self.numerator_relative().substitute_inverse();
        let den = self.denominator.substitute_inverse();
        let (den_c, den_unit) = den.canonicalize_with_unit();
        Self::assemble(num_rel, den_c, den_unit, self.deleted_column, self.dropped_relator)
    }

    /// Build from a pair already normalized by the denominator's unit.
    fn assemble(
        num_rel: LaurentPoly,
        den_canonical: LaurentPoly,
        den_unit: (u32, i64),
        deleted_column: usize,
        dropped_relator: Option<usize>,
    ) -> TapPair {
        let field = den_canonical.field();
        let num_rel = {
            let inv = field.inv(den_unit.0).expect("unit");
            num_rel.mul_unit(inv, -den_unit.1)
        };
        let (num_c, unit) = num_rel.canonicalize_with_unit();
        TapPair {
            numerator: num_c,
            denominator: den_canonical,
            pair_unit: unit,
            deleted_column,
            dropped_relator,
        }
    }
}

impl Serialize for TapPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TapPair", 5)?;
        s.serialize_field("numerator", &self.numerator)?;
        s.serialize_field("denominator", &self.denominator)?;
        s.serialize_field("pair_unit", &self.pair_unit)?;
        s.serialize_field("deleted_column", &self.deleted_column)?;
        s.serialize_field("dropped_relator", &self.dropped_relator)?;
        s.end()
    }
}

/// The relators actually used for the twisted Alexander matrix: deficiency
/// one as-is, raw Wirtinger input with the final relator dropped.
fn working_relators(g: &GroupPresentation) -> Result<(Vec<FreeWord>, Option<usize>)> {
    let k = g.gen_count();
    if g.relators.len() + 1 == k {
        Ok((g.relators.clone(), None))
    } else if g.relators.len() == k && k > 0 {
        let dropped = g.relators.len() - 1;
        Ok((g.relators[..dropped].to_vec(), Some(dropped)))
    } else {
        Err(Error::BadDeficiency { generators: k, relators: g.relators.len() })
    }
}

/// Compute the twisted Alexander pair of `(g, rho)`. `column` selects the
/// deleted generator column; `None` picks the first generator, which is
/// always valid for meridional presentations since `det(I - t rho(x_1))`
/// has constant coefficient 1.
pub fn twisted_alexander(
    g: &GroupPresentation,
    rho: &Representation,
    column: Option<usize>,
) -> Result<TapPair> {
    let k = g.gen_count();
    if rho.images().len() != k {
        return Err(Error::MissingImage(format!(
            "{} images for {} generators",
            rho.images().len(),
            k
        )));
    }
    let (relators, dropped_relator) = working_relators(g)?;
    let j = column.unwrap_or(0);
    if j >= k {
        return Err(Error::UnknownGenerator(format!("column index {j}")));
    }
    let field = rho.field();
    let n = rho.dim();

    // denominator: det Phi(x_j - 1) = det(t rho(x_j) - I)
    let xj = FreeWord::letter(j, 1);
    let den_matrix = phi_word(&xj, rho.images())?
        .add(&LaurentMatrix::identity(field, n).scale(-1, 0))?;
    let den = den_matrix.det();
    if den.is_zero() {
        return Err(Error::ZeroDenominator(j));
    }

    // numerator: det of the block matrix with column j deleted
    let size = n * relators.len();
    let mut m = LaurentMatrix::zero(field, size);
    for (bi, r) in relators.iter().enumerate() {
        let mut bj = 0;
        for col in 0..k {
            if col == j {
                continue;
            }
            let block = phi_evaluate(&fox_derivative(r, col), rho.images())?;
            for a in 0..n {
                for b in 0..n {
                    m.set(bi * n + a, bj * n + b, block.get(a, b).clone());
                }
            }
            bj += 1;
        }
    }
    let num = m.det();

    Ok(TapPair {
        numerator: num.canonicalize(),
        denominator: den.canonicalize(),
        deleted_column: j,
        dropped_relator,
    })
}

/// Outcome of an obstruction sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Some target representation is matched by no source representation:
    /// no meridional epimorphism (or, in plain mode, no epimorphism at all)
    /// can exist.
    Obstructed,
    /// Every target representation is matched. This does NOT prove an
    /// epimorphism exists; the test is only an obstruction.
    NotObstructed,
    /// A resource limit stopped the sweep before a verdict.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObstructionMode {
    /// Theorem-level test for meridional epimorphisms: the denominators must
    /// agree up to units and the target numerator must divide the source
    /// numerator, for some substitution `t -> t^eps`.
    Meridional,
    /// Weaker test for arbitrary epimorphisms, on the fractions
    /// `Delta = Delta^N / Delta^D`, cross-multiplied to stay polynomial.
    Plain,
}

/// Conditions for one source pair against one target pair, per
/// `eps in {1, -1}` (index 0 is `eps = 1`).
#[derive(Debug, Clone, Serialize)]
pub struct SourceRecord {
    /// Index into the source representation list.
    pub rep_index: usize,
    pub pair: TapPair,
    /// Excluded by the image filter (never matches when true).
    pub filtered_out: bool,
    pub denominator_match: [bool; 2],
    pub divides: [bool; 2],
    pub matches: bool,
}

/// Evidence for one target representation.
#[derive(Debug, Clone, Serialize)]
pub struct TargetRecord {
    pub rep_index: usize,
    pub rep: Representation,
    pub pair: TapPair,
    pub sources: Vec<SourceRecord>,
    /// True when no source representation satisfies both conditions for
    /// either substitution: this representation obstructs.
    pub obstructs: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionStats {
    pub source_reps: usize,
    pub target_reps: usize,
    pub distinct_source_pairs: usize,
    pub distinct_target_pairs: usize,
    pub targets_checked: usize,
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub mode: ObstructionMode,
    pub verdict: Verdict,
    pub source_name: String,
    pub target_name: String,
    pub p: u32,
    pub filter_image: bool,
    /// Witness target representations that defeat every source (all of them
    /// in exhaustive mode, otherwise the first).
    pub witnesses: Vec<TargetRecord>,
    /// For NOT_OBSTRUCTED: per target representation, a matching source
    /// representation index and the `eps` that worked.
    pub matches: Vec<(usize, usize, i32)>,
    pub stats: ObstructionStats,
    pub dropped_relator_source: Option<usize>,
    pub dropped_relator_target: Option<usize>,
    pub note: String,
}

impl Serialize for ObstructionReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ObstructionReport", 13)?;
        s.serialize_field("schema", &crate::SCHEMA_VERSION)?;
        s.serialize_field("mode", &self.mode)?;
        s.serialize_field("verdict", &self.verdict)?;
        s.serialize_field("source", &self.source_name)?;
        s.serialize_field("target", &self.target_name)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("filter_image", &self.filter_image)?;
        s.serialize_field("witnesses", &self.witnesses)?;
        s.serialize_field("matches", &self.matches)?;
        s.serialize_field("stats", &self.stats)?;
        s.serialize_field("dropped_relator_source", &self.dropped_relator_source)?;
        s.serialize_field("dropped_relator_target", &self.dropped_relator_target)?;
        s.serialize_field("note", &self.note)?;
        s.end()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ObstructionOptions {
    pub filter_image: bool,
    /// Keep sweeping after the first obstructing target representation.
    pub exhaustive: bool,
    pub node_limit: Option<u64>,
    pub mode: ObstructionMode,
}

impl Default for ObstructionOptions {
    fn default() -> Self {
        ObstructionOptions {
            filter_image: false,
            exhaustive: false,
            node_limit: None,
            mode: ObstructionMode::Meridional,
        }
    }
}

/// Divisibility with the zero cases spelled out: zero divides only zero,
/// and everything divides zero.
fn divides_allowing_zero(d: &LaurentPoly, f: &LaurentPoly) -> Result<bool> {
    if d.is_zero() {
        return Ok(f.is_zero());
    }
    Ok(d.divides(f)?.is_some())
}

fn enumerate_or_inconclusive(
    g: &GroupPresentation,
    p: u32,
    node_limit: Option<u64>,
) -> Result<std::result::Result<RepList, u64>> {
    match enumerate_representations(
        g,
        p,
        EnumOptions { constrain_conjugate: true, node_limit },
    ) {
        Ok(list) => Ok(Ok(list)),
        Err(Error::NodeLimit { visited }) => Ok(Err(visited)),
        Err(e) => Err(e),
    }
}

/// Does the meridian image of `source_rep` land, up to conjugation inside
/// `Im rho'`, on the meridian image of `target_rep`?
fn meridian_conjugate_in_image(
    source: &GroupPresentation,
    source_rep: &Representation,
    target: &GroupPresentation,
    target_rep: &Representation,
    image: &std::collections::BTreeSet<Mat2>,
) -> Result<bool> {
    let p = source_rep.p();
    let sm = Mat2::from_ffmatrix(
        &source_rep.images()[source.meridian.unwrap_or(0)],
    )?;
    let tm = Mat2::from_ffmatrix(
        &target_rep.images()[target.meridian.unwrap_or(0)],
    )?;
    Ok(image.iter().any(|&h| h.mul(sm, p).mul(h.inv_sl(p), p) == tm))
}

/// Run the obstruction sweep of `source -> target` over `SL(2, F_p)`.
///
/// For every target representation `rho'` (up to conjugacy; the polynomial
/// pair is a conjugacy invariant) the sweep looks for a source
/// representation `rho` and `eps in {1, -1}` satisfying the mode's
/// conditions. A target representation defeated by no source is a witness
/// that no (meridional) epimorphism exists.
pub fn meridional_obstruction(
    source: &GroupPresentation,
    target: &GroupPresentation,
    p: u32,
    opts: ObstructionOptions,
) -> Result<ObstructionReport> {
    Fp::new(p)?;
    if !source.is_meridional() {
        return Err(Error::NotMeridional(source.name.clone()));
    }
    if !target.is_meridional() {
        return Err(Error::NotMeridional(target.name.clone()));
    }

    let inconclusive = |visited: u64, which: &str| ObstructionReport {
        mode: opts.mode,
        verdict: Verdict::Inconclusive,
        source_name: source.name.clone(),
        target_name: target.name.clone(),
        p,
        filter_image: opts.filter_image,
        witnesses: vec![],
        matches: vec![],
        stats: ObstructionStats {
            source_reps: 0,
            target_reps: 0,
            distinct_source_pairs: 0,
            distinct_target_pairs: 0,
            targets_checked: 0,
        },
        dropped_relator_source: None,
        dropped_relator_target: None,
        note: format!(
            "representation enumeration of the {which} exceeded the node limit after {visited} nodes"
        ),
    };

    let target_reps = match enumerate_or_inconclusive(target, p, opts.node_limit)? {
        Ok(list) => list,
        Err(visited) => return Ok(inconclusive(visited, "target")),
    };
    let source_reps = match enumerate_or_inconclusive(source, p, opts.node_limit)? {
        Ok(list) => list,
        Err(visited) => return Ok(inconclusive(visited, "source")),
    };

    let source_pairs: Vec<TapPair> = source_reps
        .reps
        .par_iter()
        .map(|r| twisted_alexander(source, r, None))
        .collect::<Result<_>>()?;
    let target_pairs: Vec<TapPair> = target_reps
        .reps
        .par_iter()
        .map(|r| twisted_alexander(target, r, None))
        .collect::<Result<_>>()?;

    let distinct = |pairs: &[TapPair]| {
        let set: std::collections::BTreeSet<_> = pairs.iter().map(|p| p.key()).collect();
        set.len()
    };
    let mut stats = ObstructionStats {
        source_reps: source_reps.count(),
        target_reps: target_reps.count(),
        distinct_source_pairs: distinct(&source_pairs),
        distinct_target_pairs: distinct(&target_pairs),
        targets_checked: 0,
    };

    // source-side data is reused for every target representation
    let source_subs: Vec<TapPair> =
        source_pairs.iter().map(|p| p.substitute_inverse()).collect();

    let mut witnesses = Vec::new();
    let mut matches = Vec::new();
    let mut obstructed = false;

    for (ti, trep) in target_reps.reps.iter().enumerate() {
        stats.targets_checked += 1;
        let tpair = &target_pairs[ti];
        let t_image = if opts.filter_image { Some(image_subgroup(trep)?) } else { None };

        let mut records = Vec::with_capacity(source_pairs.len());
        let mut matched: Option<(usize, i32)> = None;
        for (si, srep) in source_reps.reps.iter().enumerate() {
            let filtered_out = match &t_image {
                None => false,
                Some(img) => {
                    let s_image = image_subgroup(srep)?;
                    s_image != *img
                        || !meridian_conjugate_in_image(source, srep, target, trep, img)?
                }
            };
            let mut den_match = [false; 2];
            let mut divides = [false; 2];
            for (ei, spair) in [&source_pairs[si], &source_subs[si]].into_iter().enumerate()
            {
                match opts.mode {
                    ObstructionMode::Meridional => {
                        den_match[ei] = tpair.denominator == spair.denominator;
                        divides[ei] =
                            divides_allowing_zero(&tpair.numerator, &spair.numerator)?;
                    }
                    ObstructionMode::Plain => {
                        // Delta_target | Delta_source as fractions:
                        // den_source * num_target | num_source * den_target
                        den_match[ei] = true;
                        let lhs = spair.denominator.mul(&tpair.numerator);
                        let rhs = spair.numerator.mul(&tpair.denominator);
                        divides[ei] = divides_allowing_zero(&lhs, &rhs)?;
                    }
                }
            }
            let ok = !filtered_out
                && ((den_match[0] && divides[0]) || (den_match[1] && divides[1]));
            if ok && matched.is_none() {
                let eps = if den_match[0] && divides[0] { 1 } else { -1 };
                matched = Some((si, eps));
            }
            records.push(SourceRecord {
                rep_index: si,
                pair: source_pairs[si].clone(),
                filtered_out,
                denominator_match: den_match,
                divides,
                matches: ok,
            });
        }

        match matched {
            Some((si, eps)) => matches.push((ti, si, eps)),
            None => {
                obstructed = true;
                witnesses.push(TargetRecord {
                    rep_index: ti,
                    rep: trep.clone(),
                    pair: tpair.clone(),
                    sources: records,
                    obstructs: true,
                });
                if !opts.exhaustive {
                    break;
                }
            }
        }
    }

    let verdict = if obstructed { Verdict::Obstructed } else { Verdict::NotObstructed };
    let note = match verdict {
        Verdict::Obstructed => match opts.mode {
            ObstructionMode::Meridional => {
                "no meridional epimorphism of the source group onto the target group exists"
                    .into()
            }
            ObstructionMode::Plain => {
                "no epimorphism of the source group onto the target group exists".into()
            }
        },
        Verdict::NotObstructed => {
            "every target representation is matched; this does NOT prove an epimorphism exists"
                .into()
        }
        Verdict::Inconclusive => unreachable!(),
    };

    Ok(ObstructionReport {
        mode: opts.mode,
        verdict,
        source_name: source.name.clone(),
        target_name: target.name.clone(),
        p,
        filter_image: opts.filter_image,
        witnesses,
        matches,
        stats,
        dropped_relator_source: source_pairs.first().and_then(|p| p.dropped_relator),
        dropped_relator_target: target_pairs.first().and_then(|p| p.dropped_relator),
        note,
    })
}

/// The weaker sweep on the fractions `Delta = Delta^N / Delta^D`, valid
/// against arbitrary (not necessarily meridional) epimorphisms.
pub fn plain_divisibility_check(
    source: &GroupPresentation,
    target: &GroupPresentation,
    p: u32,
    opts: ObstructionOptions,
) -> Result<ObstructionReport> {
    meridional_obstruction(
        source,
        target,
        p,
        ObstructionOptions { mode: ObstructionMode::Plain, ..opts },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FFMatrix;
    use crate::fixtures;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn rep2(field: Fp, ms: &[[i64; 4]]) -> Representation {
        Representation::new(
            field,
            ms.iter().map(|e| FFMatrix::from_i64(field, 2, e).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn trefoil_pair_over_f5() {
        let g = fixtures::trefoil();
        let field = f(5);
        let rho = rep2(field, &[[0, 4, 1, 3], [0, 1, 4, 3]]);
        let pair = twisted_alexander(&g, &rho, None).unwrap();
        assert_eq!(pair.numerator.canonical_coeff_vec(), vec![1, 2, 2, 2, 1]);
        assert_eq!(pair.denominator.canonical_coeff_vec(), vec![1, 2, 1]);
        assert_eq!(pair.deleted_column, 0);
        assert_eq!(pair.dropped_relator, None);
    }

    #[test]
    fn figure_eight_pair_over_f7() {
        let g = fixtures::figure8();
        let field = f(7);
        let rho = rep2(field, &[[0, 4, 5, 2], [1, 0, 3, 1]]);
        assert!(crate::reps::is_representation(rho.images(), &g).unwrap());
        let pair = twisted_alexander(&g, &rho, None).unwrap();
        assert_eq!(pair.numerator.canonical_coeff_vec(), vec![1, 1, 3, 1, 1]);
        assert_eq!(pair.denominator.canonical_coeff_vec(), vec![1, 5, 1]);
    }

    #[test]
    fn kt_simplified_trivial_rep_matches_first_table_row() {
        let g = fixtures::kt_simplified();
        let field = f(5);
        let rho = Representation::trivial(field, 2, 3);
        let pair = twisted_alexander(&g, &rho, None).unwrap();
        assert_eq!(
            pair.numerator.canonical_coeff_vec(),
            vec![1, 1, 0, 4, 4, 4, 0, 1, 1]
        );
        assert_eq!(pair.denominator.canonical_coeff_vec(), vec![1, 3, 1]);
    }

    #[test]
    fn column_choice_changes_nothing_up_to_units() {
        let g = fixtures::trefoil();
        let field = f(5);
        let rho = rep2(field, &[[0, 4, 1, 3], [0, 1, 4, 3]]);
        let a = twisted_alexander(&g, &rho, Some(0)).unwrap();
        let b = twisted_alexander(&g, &rho, Some(1)).unwrap();
        assert_eq!(a.numerator, b.numerator);
        assert_eq!(a.denominator, b.denominator);
    }

    #[test]
    fn raw_wirtinger_input_drops_last_relator() {
        let g = fixtures::kt_wirtinger();
        let field = f(5);
        let rho = Representation::trivial(field, 2, 24);
        let pair = twisted_alexander(&g, &rho, None).unwrap();
        assert_eq!(pair.dropped_relator, Some(23));
        // same knot, same representation class: same polynomials as the
        // 3-generator presentation
        let simplified = fixtures::kt_simplified();
        let pair3 =
            twisted_alexander(&simplified, &Representation::trivial(field, 2, 3), None)
                .unwrap();
        assert_eq!(pair.numerator, pair3.numerator);
        assert_eq!(pair.denominator, pair3.denominator);
    }

    #[test]
    fn denominator_shape_is_quadratic_in_the_meridian_trace() {
        let g = fixtures::trefoil();
        let field = f(5);
        let rho = rep2(field, &[[0, 4, 1, 3], [0, 1, 4, 3]]);
        let pair = twisted_alexander(&g, &rho, None).unwrap();
        // det(t rho(x1) - I) = t^2 - tr(rho(x1)) t + 1
        let tau = rho.images()[0].trace().value as i64;
        let expect = LaurentPoly::from_coeffs(field, &[(2, 1), (1, -tau), (0, 1)]);
        assert_eq!(pair.denominator, expect.canonicalize());
    }

    #[test]
    fn bad_deficiency_is_rejected() {
        let g = GroupPresentation::parse("group g\ngen x y z\nrel x y\nmeridian x").unwrap();
        let rho = Representation::trivial(f(5), 2, 3);
        assert!(matches!(
            twisted_alexander(&g, &rho, None),
            Err(Error::BadDeficiency { .. })
        ));
    }

    #[test]
    fn trefoil_to_itself_is_not_obstructed() {
        let g = fixtures::trefoil();
        let report =
            meridional_obstruction(&g, &g, 5, ObstructionOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::NotObstructed);
        assert_eq!(report.matches.len(), report.stats.target_reps);
        // identity epimorphism: every rho' is matched by itself with eps = 1
        assert!(report.matches.iter().any(|&(ti, si, _)| ti == si));
    }

    #[test]
    fn plain_fraction_of_the_trefoil_representation() {
        // Delta = Delta^N / Delta^D = t^2 + 1 over F5
        let g = fixtures::trefoil();
        let field = f(5);
        let rho = rep2(field, &[[0, 4, 1, 3], [0, 1, 4, 3]]);
        let pair = twisted_alexander(&g, &rho, None).unwrap();
        let q = pair.denominator.divides(&pair.numerator).unwrap().expect("divides");
        assert_eq!(q.canonical_coeff_vec(), vec![1, 0, 1]);
    }
}
