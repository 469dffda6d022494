//! Complete enumeration of `SL(2, F_p)` representations of a finitely
//! presented group, deduplicated up to simultaneous conjugation.
//!
//! The search fixes the image of the first freely chosen generator to a
//! conjugacy-class representative (quotienting out most of the global
//! conjugation action), optionally restricts all other generators to the
//! same class (valid when all generators are mutually conjugate in the
//! group, as for Wirtinger and other meridional presentations), solves
//! conjugation-shaped relators for their determined generator instead of
//! searching it, and checks every other relator at the earliest point all
//! its generators are assigned. The surviving centralizer symmetry is
//! removed by [`canonical_conjugacy_dedupe`].

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::algebra::{conjugacy_partition, sl2_elements, FFMatrix, Fp, Mat2};
use crate::presentation::{FreeWord, GroupPresentation};
use crate::{Error, Result};

/// An assignment of one matrix per generator satisfying all relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    field: Fp,
    images: Vec<FFMatrix>,
}

impl Representation {
    pub fn new(field: Fp, images: Vec<FFMatrix>) -> Result<Self> {
        for m in &images {
            m.field().same(&field)?;
            if m.dim() != images[0].dim() {
                return Err(Error::DimensionMismatch(m.dim(), images[0].dim()));
            }
        }
        Ok(Representation { field, images })
    }

    /// All generators to the identity.
    pub fn trivial(field: Fp, n: usize, gen_count: usize) -> Self {
        Representation { field, images: vec![FFMatrix::identity(field, n); gen_count] }
    }

    pub fn from_mat2(field: Fp, images: &[Mat2]) -> Self {
        Representation { field, images: images.iter().map(|m| m.to_ffmatrix(field)).collect() }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.images.first().map_or(0, |m| m.dim())
    }

    pub fn images(&self) -> &[FFMatrix] {
        &self.images
    }

    pub fn to_mat2(&self) -> Result<Vec<Mat2>> {
        self.images.iter().map(Mat2::from_ffmatrix).collect()
    }

    /// Evaluate a word in the generator images.
    pub fn eval(&self, w: &FreeWord) -> Result<FFMatrix> {
        crate::fox::rho_word(w, &self.images)
    }
}

impl Serialize for Representation {
    /// An ordered list of row-major matrix entry arrays, one per generator.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.images.len()))?;
        for m in &self.images {
            seq.serialize_element(m.entries())?;
        }
        seq.end()
    }
}

/// True iff every relator of `g` evaluates to the identity under the given
/// generator images.
pub fn is_representation(images: &[FFMatrix], g: &GroupPresentation) -> Result<bool> {
    if images.len() != g.gen_count() {
        return Err(Error::MissingImage(format!(
            "{} images supplied for {} generators",
            images.len(),
            g.gen_count()
        )));
    }
    if g.gen_count() == 0 {
        return Ok(true);
    }
    for r in &g.relators {
        if !crate::fox::rho_word(r, images)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Candidate assignments tried.
    pub nodes: u64,
    /// Candidates rejected by a relator check.
    pub prunes: u64,
}

/// Result of an enumeration: pairwise non-conjugate representations in a
/// deterministic order (sorted by their canonical image tuples).
#[derive(Debug, Clone)]
pub struct RepList {
    pub presentation: String,
    pub p: u32,
    pub n: usize,
    pub reps: Vec<Representation>,
    /// Solutions found before conjugacy deduplication.
    pub raw_count: usize,
    pub stats: SearchStats,
}

impl RepList {
    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

impl Serialize for RepList {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RepList", 8)?;
        s.serialize_field("schema", &crate::SCHEMA_VERSION)?;
        s.serialize_field("presentation", &self.presentation)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("count", &self.count())?;
        s.serialize_field("raw_count", &self.raw_count)?;
        s.serialize_field("stats", &self.stats)?;
        s.serialize_field("representations", &self.reps)?;
        s.end()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    /// Restrict all generator images to a single conjugacy class. Only valid
    /// for presentations whose generators are mutually conjugate; requires
    /// the meridional flag.
    pub constrain_conjugate: bool,
    /// Abort with [`Error::NodeLimit`] after this many candidate
    /// assignments.
    pub node_limit: Option<u64>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { constrain_conjugate: true, node_limit: None }
    }
}

type FlatWord = Vec<(usize, bool)>;

#[derive(Debug, Clone)]
enum Step {
    Free { gen: usize },
    /// Relator `u g^e v = 1` solved for `g`.
    Derive { gen: usize, exp: i32, before: FlatWord, after: FlatWord },
}

impl Step {
    fn gen(&self) -> usize {
        match self {
            Step::Free { gen } | Step::Derive { gen, .. } => *gen,
        }
    }
}

#[derive(Debug, Clone)]
struct Plan {
    steps: Vec<Step>,
    /// Relators to verify after each step (all generators assigned there).
    checks: Vec<Vec<FlatWord>>,
}

/// Choose an assignment order. Conjugation-shaped relators determine a
/// generator outright; otherwise prefer to complete the relator with the
/// fewest unassigned generators, which moves the relator checks as early as
/// possible in the tree.
fn build_plan(g: &GroupPresentation) -> Plan {
    let k = g.gen_count();
    let mut assigned = vec![false; k];
    let mut used_for_derive = vec![false; g.relators.len()];
    let mut checked = vec![false; g.relators.len()];
    let mut steps = Vec::with_capacity(k);
    let mut checks = Vec::with_capacity(k);

    while steps.len() < k {
        let mut derive: Option<(usize, usize)> = None;
        for (ri, r) in g.relators.iter().enumerate() {
            if used_for_derive[ri] || checked[ri] || r.is_empty() {
                continue;
            }
            let unassigned: Vec<usize> =
                r.generators_used().into_iter().filter(|&x| !assigned[x]).collect();
            if unassigned.len() == 1 && r.occurrences(unassigned[0]) == 1 {
                derive = Some((ri, unassigned[0]));
                break;
            }
        }

        let step = if let Some((ri, gen)) = derive {
            used_for_derive[ri] = true;
            let r = &g.relators[ri];
            let pos = r
                .letters()
                .iter()
                .position(|&(x, e)| x == gen && e.abs() == 1)
                .expect("single occurrence with unit exponent");
            let (_, exp) = r.letters()[pos];
            let before = FreeWord::reduce(r.letters()[..pos].to_vec()).flatten();
            let after = FreeWord::reduce(r.letters()[pos + 1..].to_vec()).flatten();
            Step::Derive { gen, exp, before, after }
        } else {
            let mut best: Option<(usize, usize)> = None; // (unassigned count, relator)
            for (ri, r) in g.relators.iter().enumerate() {
                let cnt =
                    r.generators_used().into_iter().filter(|&x| !assigned[x]).count();
                if cnt > 0 && best.map_or(true, |(bc, _)| cnt < bc) {
                    best = Some((cnt, ri));
                }
            }
            let gen = match best {
                Some((_, ri)) => g.relators[ri]
                    .generators_used()
                    .into_iter()
                    .filter(|&x| !assigned[x])
                    .min()
                    .unwrap(),
                None => (0..k).find(|&x| !assigned[x]).unwrap(),
            };
            Step::Free { gen }
        };

        assigned[step.gen()] = true;
        let mut now = Vec::new();
        for (ri, r) in g.relators.iter().enumerate() {
            if used_for_derive[ri] || checked[ri] || r.is_empty() {
                continue;
            }
            if r.generators_used().into_iter().all(|x| assigned[x]) {
                checked[ri] = true;
                now.push(r.flatten());
            }
        }
        steps.push(step);
        checks.push(now);
    }
    Plan { steps, checks }
}

#[inline]
fn eval_flat(word: &[(usize, bool)], images: &[Mat2], p: u32) -> Mat2 {
    let mut acc = Mat2::IDENTITY;
    for &(g, invert) in word {
        let m = if invert { images[g].inv_sl(p) } else { images[g] };
        acc = acc.mul(m, p);
    }
    acc
}

struct SearchCtx<'a> {
    p: u32,
    plan: &'a Plan,
    free_candidates: Vec<&'a [Mat2]>,
    counter: &'a AtomicU64,
    prunes: &'a AtomicU64,
    aborted: &'a AtomicBool,
    node_limit: u64,
}

fn search(
    ctx: &SearchCtx<'_>,
    depth: usize,
    free_rank: usize,
    images: &mut Vec<Mat2>,
    out: &mut Vec<Vec<Mat2>>,
) {
    if ctx.aborted.load(Ordering::Relaxed) {
        return;
    }
    if depth == ctx.plan.steps.len() {
        out.push(images.clone());
        return;
    }
    match &ctx.plan.steps[depth] {
        Step::Derive { gen, exp, before, after } => {
            if ctx.counter.fetch_add(1, Ordering::Relaxed) >= ctx.node_limit {
                ctx.aborted.store(true, Ordering::Relaxed);
                return;
            }
            let u = eval_flat(before, images, ctx.p);
            let v = eval_flat(after, images, ctx.p);
            // u g^e v = 1
            let solved = u.inv_sl(ctx.p).mul(v.inv_sl(ctx.p), ctx.p);
            let img = if *exp == 1 { solved } else { solved.inv_sl(ctx.p) };
            images[*gen] = img;
            if ctx.plan.checks[depth]
                .iter()
                .all(|r| eval_flat(r, images, ctx.p) == Mat2::IDENTITY)
            {
                search(ctx, depth + 1, free_rank, images, out);
            } else {
                ctx.prunes.fetch_add(1, Ordering::Relaxed);
            }
        }
        Step::Free { gen } => {
            for &cand in ctx.free_candidates[free_rank] {
                if ctx.counter.fetch_add(1, Ordering::Relaxed) >= ctx.node_limit {
                    ctx.aborted.store(true, Ordering::Relaxed);
                    return;
                }
                images[*gen] = cand;
                if ctx.plan.checks[depth]
                    .iter()
                    .all(|r| eval_flat(r, images, ctx.p) == Mat2::IDENTITY)
                {
                    search(ctx, depth + 1, free_rank + 1, images, out);
                } else {
                    ctx.prunes.fetch_add(1, Ordering::Relaxed);
                }
            }
        }
    }
}

/// Lexicographically least tuple in the simultaneous-conjugation orbit.
fn canonical_tuple(images: &[Mat2], p: u32, group: &[Mat2]) -> Vec<Mat2> {
    let mut best: Option<Vec<Mat2>> = None;
    for &g in group {
        let gi = g.inv_sl(p);
        let tuple: Vec<Mat2> =
            images.iter().map(|&m| g.mul(m, p).mul(gi, p)).collect();
        if best.as_ref().map_or(true, |b| tuple < *b) {
            best = Some(tuple);
        }
    }
    best.unwrap_or_else(|| images.to_vec())
}

/// One representative per simultaneous-conjugacy orbit, each replaced by the
/// lexicographically least image tuple of its orbit, sorted. Only defined
/// for `n = 2`.
pub fn canonical_conjugacy_dedupe(raw: Vec<Representation>) -> Result<Vec<Representation>> {
    let Some(first) = raw.first() else { return Ok(vec![]) };
    let field = first.field();
    let p = field.p();
    for r in &raw {
        r.field().same(&field)?;
        if r.dim() != 2 {
            return Err(Error::Unsupported(format!(
                "conjugacy dedup is implemented for n = 2, got n = {}",
                r.dim()
            )));
        }
    }
    let group = sl2_elements(p)?;
    let tuples: Vec<Vec<Mat2>> = raw.iter().map(|r| r.to_mat2()).collect::<Result<_>>()?;
    let mut canon: Vec<Vec<Mat2>> =
        tuples.iter().map(|t| canonical_tuple(t, p, &group)).collect();
    canon.sort();
    canon.dedup();
    Ok(canon.into_iter().map(|t| Representation::from_mat2(field, &t)).collect())
}

/// Enumerate all representations of `g` into `SL(2, F_p)` up to simultaneous
/// conjugation, in a deterministic order independent of the worker count.
pub fn enumerate_representations(
    g: &GroupPresentation,
    p: u32,
    opts: EnumOptions,
) -> Result<RepList> {
    let field = Fp::new(p)?;
    if opts.constrain_conjugate && !g.is_meridional() {
        return Err(Error::NotMeridional(g.name.clone()));
    }
    let k = g.gen_count();
    if k == 0 {
        return Ok(RepList {
            presentation: g.name.clone(),
            p,
            n: 2,
            reps: vec![Representation::new(field, vec![])?],
            raw_count: 1,
            stats: SearchStats::default(),
        });
    }

    let table = conjugacy_partition(p)?;
    let all_elements = sl2_elements(p)?;
    let plan = build_plan(g);
    let free_steps: Vec<usize> = plan
        .steps
        .iter()
        .enumerate()
        .filter(|(_, s)| matches!(s, Step::Free { .. }))
        .map(|(i, _)| i)
        .collect();

    let counter = AtomicU64::new(0);
    let prunes = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let node_limit = opts.node_limit.unwrap_or(u64::MAX);

    // Top-level split: conjugacy class of the first free generator, then the
    // image of the second free generator. The subtrees are disjoint, so the
    // merge below is a plain concatenation.
    let mut tasks: Vec<(usize, Option<Mat2>)> = Vec::new();
    if free_steps.is_empty() {
        tasks.push((usize::MAX, None));
    } else {
        for ci in 0..table.class_count() {
            if free_steps.len() >= 2 {
                let seconds: &[Mat2] = if opts.constrain_conjugate {
                    table.members(ci)
                } else {
                    &all_elements
                };
                for &m in seconds {
                    tasks.push((ci, Some(m)));
                }
            } else {
                tasks.push((ci, None));
            }
        }
    }

    let run_task = |&(ci, second): &(usize, Option<Mat2>)| -> Vec<Vec<Mat2>> {
        let owned: Vec<Vec<Mat2>> = (0..free_steps.len())
            .map(|rank| {
                if rank == 0 {
                    vec![table.classes()[ci].representative]
                } else if rank == 1 {
                    vec![second.expect("second-level split present")]
                } else if opts.constrain_conjugate {
                    table.members(ci).to_vec()
                } else {
                    all_elements.clone()
                }
            })
            .collect();
        let ctx = SearchCtx {
            p,
            plan: &plan,
            free_candidates: owned.iter().map(|v| v.as_slice()).collect(),
            counter: &counter,
            prunes: &prunes,
            aborted: &aborted,
            node_limit,
        };
        let mut images = vec![Mat2::IDENTITY; k];
        let mut out = Vec::new();
        search(&ctx, 0, 0, &mut images, &mut out);
        out
    };

    let found: Vec<Vec<Vec<Mat2>>> = tasks.par_iter().map(run_task).collect();
    let stats =
        SearchStats { nodes: counter.load(Ordering::Relaxed), prunes: prunes.load(Ordering::Relaxed) };
    if aborted.load(Ordering::Relaxed) {
        return Err(Error::NodeLimit { visited: stats.nodes });
    }

    let raw: Vec<Representation> = found
        .into_iter()
        .flatten()
        .map(|t| Representation::from_mat2(field, &t))
        .collect();
    let raw_count = raw.len();
    let reps = canonical_conjugacy_dedupe(raw)?;

    debug_assert!(reps
        .iter()
        .all(|r| is_representation(r.images(), g).unwrap_or(false)));

    Ok(RepList { presentation: g.name.clone(), p, n: 2, reps, raw_count, stats })
}

/// The subgroup of `SL(2, F_p)` generated by the images of a representation
/// (closure under multiplication).
pub fn image_subgroup(rep: &Representation) -> Result<BTreeSet<Mat2>> {
    let p = rep.p();
    let gens = rep.to_mat2()?;
    let mut set: BTreeSet<Mat2> = BTreeSet::new();
    let mut frontier = vec![Mat2::IDENTITY];
    set.insert(Mat2::IDENTITY);
    while let Some(m) = frontier.pop() {
        for &g in &gens {
            let next = m.mul(g, p);
            if set.insert(next) {
                frontier.push(next);
            }
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn mat(field: Fp, e: [i64; 4]) -> FFMatrix {
        FFMatrix::from_i64(field, 2, &e).unwrap()
    }

    /// Independent oracle for two-generator presentations: filter all pairs,
    /// then partition by brute-force conjugation.
    fn oracle_two_gen_classes(g: &GroupPresentation, p: u32) -> Vec<Vec<Mat2>> {
        assert_eq!(g.gen_count(), 2);
        let field = f(p);
        let elements = sl2_elements(p).unwrap();
        let mut sols = Vec::new();
        for &a in &elements {
            for &b in &elements {
                let images = vec![a.to_ffmatrix(field), b.to_ffmatrix(field)];
                if is_representation(&images, g).unwrap() {
                    sols.push(vec![a, b]);
                }
            }
        }
        let mut canon: Vec<Vec<Mat2>> =
            sols.iter().map(|t| canonical_tuple(t, p, &elements)).collect();
        canon.sort();
        canon.dedup();
        canon
    }

    #[test]
    fn trefoil_f3_matches_naive_oracle() {
        let g = fixtures::trefoil();
        let oracle = oracle_two_gen_classes(&g, 3);

        let constrained =
            enumerate_representations(&g, 3, EnumOptions::default()).unwrap();
        let unconstrained = enumerate_representations(
            &g,
            3,
            EnumOptions { constrain_conjugate: false, node_limit: None },
        )
        .unwrap();

        let got: Vec<Vec<Mat2>> =
            constrained.reps.iter().map(|r| r.to_mat2().unwrap()).collect();
        assert_eq!(got, oracle);
        let got_u: Vec<Vec<Mat2>> =
            unconstrained.reps.iter().map(|r| r.to_mat2().unwrap()).collect();
        assert_eq!(got_u, oracle);
    }

    #[test]
    fn is_representation_examples() {
        let g = fixtures::trefoil();
        let field = f(5);
        // the F5 representation from the braid relation
        let images = vec![mat(field, [0, 4, 1, 3]), mat(field, [0, 1, 4, 3])];
        assert!(is_representation(&images, &g).unwrap());
        // trivial representation always works
        assert!(is_representation(
            Representation::trivial(field, 2, 2).images(),
            &g
        )
        .unwrap());
        // a non-representation
        let images = vec![mat(field, [1, 1, 0, 1]), mat(field, [1, 0, 0, 1])];
        assert!(!is_representation(&images, &g).unwrap());
        // wrong number of images errors
        assert!(is_representation(&[mat(field, [1, 0, 0, 1])], &g).is_err());
    }

    #[test]
    fn trivial_representation_always_appears() {
        for g in [fixtures::trefoil(), fixtures::figure8(), fixtures::kt_simplified()] {
            let list = enumerate_representations(&g, 3, EnumOptions::default()).unwrap();
            let trivial = Representation::trivial(f(3), 2, g.gen_count());
            assert!(
                list.reps.iter().any(|r| r.images() == trivial.images()),
                "{}",
                g.name
            );
        }
    }

    #[test]
    fn dedupe_collapses_conjugates() {
        let field = f(5);
        let a = mat(field, [0, 4, 1, 3]);
        let b = mat(field, [0, 1, 4, 3]);
        let rep = Representation::new(field, vec![a.clone(), b.clone()]).unwrap();
        // singleton stays singleton
        assert_eq!(canonical_conjugacy_dedupe(vec![rep.clone()]).unwrap().len(), 1);

        let u = mat(field, [1, 1, 0, 1]);
        let ui = u.inv().unwrap();
        let conj = Representation::new(
            field,
            vec![
                u.mul(&a).unwrap().mul(&ui).unwrap(),
                u.mul(&b).unwrap().mul(&ui).unwrap(),
            ],
        )
        .unwrap();
        let deduped = canonical_conjugacy_dedupe(vec![rep, conj]).unwrap();
        assert_eq!(deduped.len(), 1);
    }

    #[test]
    fn enumeration_invariant_under_relator_permutation() {
        let mut g = fixtures::j_minus1();
        let baseline = enumerate_representations(&g, 3, EnumOptions::default()).unwrap();
        g.relators.reverse();
        let permuted = enumerate_representations(&g, 3, EnumOptions::default()).unwrap();
        assert_eq!(
            baseline.reps.iter().map(|r| r.images().to_vec()).collect::<Vec<_>>(),
            permuted.reps.iter().map(|r| r.images().to_vec()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn constrained_requires_meridian() {
        let g = GroupPresentation::parse("group c2\ngen x\nrel x^2\n").unwrap();
        assert!(matches!(
            enumerate_representations(&g, 3, EnumOptions::default()),
            Err(Error::NotMeridional(_))
        ));
        // unconstrained works: x^2 = I has exactly the two central solutions
        let list = enumerate_representations(
            &g,
            3,
            EnumOptions { constrain_conjugate: false, node_limit: None },
        )
        .unwrap();
        assert_eq!(list.count(), 2);
    }

    #[test]
    fn node_limit_aborts() {
        let g = fixtures::kt_simplified();
        let err = enumerate_representations(
            &g,
            5,
            EnumOptions { constrain_conjugate: true, node_limit: Some(10) },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NodeLimit { .. }));
    }

    #[test]
    fn image_subgroup_of_trivial_rep() {
        let rep = Representation::trivial(f(5), 2, 2);
        let set = image_subgroup(&rep).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn conjugating_output_lands_in_existing_class() {
        let g = fixtures::trefoil();
        let p = 3;
        let list = enumerate_representations(&g, p, EnumOptions::default()).unwrap();
        let elements = sl2_elements(p).unwrap();
        let canon_set: BTreeSet<Vec<Mat2>> =
            list.reps.iter().map(|r| r.to_mat2().unwrap()).collect();
        for r in &list.reps {
            let t = r.to_mat2().unwrap();
            for &gmat in elements.iter().step_by(5) {
                let conj: Vec<Mat2> =
                    t.iter().map(|&m| m.conjugate_by(gmat, p)).collect();
                let c = canonical_tuple(&conj, p, &elements);
                assert!(canon_set.contains(&c));
            }
        }
    }
}
