//! Free-group words, finitely presented groups, the line-oriented text
//! format, homomorphisms, abelianization via Smith normal form and
//! generator-elimination simplification.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Freely reduced word in free-group generators: a sequence of
/// `(generator index, exponent)` letters with nonzero exponents and distinct
/// adjacent generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct FreeWord {
    letters: Vec<(usize, i32)>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn letter(gen: usize, exp: i32) -> Self {
        FreeWord::reduce(vec![(gen, exp)])
    }

    /// Freely reduce a raw letter sequence.
    pub fn reduce(raw: Vec<(usize, i32)>) -> Self {
        let mut letters: Vec<(usize, i32)> = Vec::with_capacity(raw.len());
        for (g, e) in raw {
            if e == 0 {
                continue;
            }
            match letters.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        letters.pop();
                    }
                }
                _ => letters.push((g, e)),
            }
        }
        FreeWord { letters }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    /// Word length counted with multiplicity (`x^3` contributes 3).
    pub fn length(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut raw = self.letters.clone();
        raw.extend_from_slice(&other.letters);
        FreeWord::reduce(raw)
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, e: i32) -> FreeWord {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = FreeWord::empty();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn exponent_sum_for(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|&&(g, _)| g == gen).map(|&(_, e)| e as i64).sum()
    }

    /// Number of occurrences of `gen` counted with multiplicity.
    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters
            .iter()
            .filter(|&&(g, _)| g == gen)
            .map(|&(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn generators_used(&self) -> BTreeSet<usize> {
        self.letters.iter().map(|&(g, _)| g).collect()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Expand into single-step letters `(gen, inverse?)`.
    pub fn flatten(&self) -> Vec<(usize, bool)> {
        let mut out = Vec::with_capacity(self.length());
        for &(g, e) in &self.letters {
            for _ in 0..e.unsigned_abs() {
                out.push((g, e < 0));
            }
        }
        out
    }

    /// Replace every letter through `f`, then reduce. `f` maps a generator
    /// index to its image word.
    pub fn substitute(&self, f: impl Fn(usize) -> FreeWord) -> FreeWord {
        let mut raw = Vec::new();
        for &(g, e) in &self.letters {
            let img = f(g);
            let img = if e < 0 { img.inv() } else { img };
            for _ in 0..e.unsigned_abs() {
                raw.extend_from_slice(&img.letters);
            }
        }
        FreeWord::reduce(raw)
    }

    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_empty() {
            return String::new();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A finitely presented group with an optional distinguished meridian
/// generator. Presentations carrying a meridian are treated as meridional
/// ("Wirtinger-like"): all generators are assumed mutually conjugate, which
/// the conjugacy-constrained representation search relies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
    pub meridian: Option<usize>,
}

impl GroupPresentation {
    pub fn gen_count(&self) -> usize {
        self.generators.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn is_meridional(&self) -> bool {
        self.meridian.is_some()
    }

    /// Parse the line-oriented presentation format:
    ///
    /// ```text
    /// # comment
    /// group <name>
    /// gen <name> <name> ...
    /// rel <word>
    /// meridian <name>
    /// ```
    ///
    /// where a word is a sequence of tokens `g` or `g^k` with `k` a nonzero
    /// integer.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::new();
        let mut generators: Vec<String> = Vec::new();
        let mut relators = Vec::new();
        let mut meridian = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: ln + 1, msg };
            let (keyword, rest) = match line.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (line, ""),
            };
            match keyword {
                "group" => {
                    if rest.is_empty() {
                        return Err(err("missing group name".into()));
                    }
                    name = rest.to_string();
                }
                "gen" => {
                    for tok in rest.split_whitespace() {
                        if generators.iter().any(|g| g == tok) {
                            return Err(err(format!("duplicate generator name `{tok}`")));
                        }
                        generators.push(tok.to_string());
                    }
                }
                "rel" => {
                    let word = parse_word_tokens(rest, &generators)
                        .map_err(|msg| err(msg))?;
                    relators.push(word);
                }
                "meridian" => {
                    let idx = generators
                        .iter()
                        .position(|g| g == rest)
                        .ok_or_else(|| err(format!("unknown generator `{rest}`")))?;
                    meridian = Some(idx);
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        Ok(GroupPresentation { name, generators, relators, meridian })
    }

    /// Parse a single word in this presentation's generators.
    pub fn word(&self, text: &str) -> Result<FreeWord> {
        parse_word_tokens(text, &self.generators).map_err(|msg| Error::Parse { line: 0, msg })
    }

    /// Serialize back to the text format; `parse(serialize(g)) == g`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("group {}\n", self.name));
        if !self.generators.is_empty() {
            out.push_str(&format!("gen {}\n", self.generators.join(" ")));
        }
        for r in &self.relators {
            out.push_str(&format!("rel {}\n", r.to_text(&self.generators)));
        }
        if let Some(m) = self.meridian {
            out.push_str(&format!("meridian {}\n", self.generators[m]));
        }
        out
    }

    /// Elementary divisors and free rank of the abelianization, from the
    /// Smith normal form of the relator exponent-sum matrix. Knot groups
    /// must come out as free rank 1 with no torsion; this is the fixture
    /// sanity oracle.
    pub fn abelianization(&self) -> Abelianization {
        let rows = self.relators.len();
        let cols = self.gen_count();
        let mut m: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                (0..cols).map(|j| BigInt::from(self.relators[i].exponent_sum_for(j))).collect()
            })
            .collect();
        let divisors = smith_diagonal(&mut m, rows, cols);
        let rank = divisors.iter().filter(|d| !d.is_zero()).count();
        let torsion = divisors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| d.clone())
            .collect();
        Abelianization { torsion, free_rank: cols - rank }
    }

    /// Tietze elimination: repeatedly remove a generator that occurs exactly
    /// once in some relator, substituting its solved expression everywhere.
    /// Relators are scanned shortest-first and the highest-index eligible
    /// generator is eliminated, so the output is deterministic. The meridian
    /// generator is never eliminated. Returns a presentation of an
    /// isomorphic group.
    pub fn simplify(&self) -> GroupPresentation {
        let mut g = self.clone();
        loop {
            g.relators.retain(|r| !r.is_empty());
            let mut order: Vec<usize> = (0..g.relators.len()).collect();
            order.sort_by_key(|&i| (g.relators[i].length(), i));

            let mut choice: Option<(usize, usize)> = None;
            'scan: for &ri in &order {
                let mut best: Option<usize> = None;
                for gen in g.relators[ri].generators_used() {
                    if Some(gen) == g.meridian {
                        continue;
                    }
                    if g.relators[ri].occurrences(gen) == 1 {
                        best = Some(best.map_or(gen, |b| b.max(gen)));
                    }
                }
                if let Some(gen) = best {
                    choice = Some((ri, gen));
                    break 'scan;
                }
            }
            let Some((ri, gen)) = choice else {
                return g;
            };
            g = g.eliminate(ri, gen);
        }
    }

    /// Remove generator `gen`, which occurs exactly once in relator `ri`,
    /// rewriting every other relator.
    fn eliminate(&self, ri: usize, gen: usize) -> GroupPresentation {
        let r = &self.relators[ri];
        let pos = r
            .letters()
            .iter()
            .position(|&(g, e)| g == gen && e.abs() == 1)
            .expect("generator occurs once with exponent +-1");
        let (g0, e0) = r.letters()[pos];
        debug_assert_eq!(g0, gen);
        let before = FreeWord::reduce(r.letters()[..pos].to_vec());
        let after = FreeWord::reduce(r.letters()[pos + 1..].to_vec());
        // before * gen^e0 * after = 1  =>  gen^e0 = before^-1 * after^-1
        let solved = before.inv().mul(&after.inv());
        let replacement = if e0 == 1 { solved } else { solved.inv() };

        let remap: Vec<Option<usize>> = (0..self.gen_count())
            .map(|i| {
                if i == gen {
                    None
                } else if i < gen {
                    Some(i)
                } else {
                    Some(i - 1)
                }
            })
            .collect();
        let sub = |w: &FreeWord| -> FreeWord {
            w.substitute(|g| {
                if g == gen {
                    replacement.clone()
                } else {
                    FreeWord::letter(g, 1)
                }
            })
            .substitute(|g| FreeWord::letter(remap[g].expect("eliminated generator gone"), 1))
        };

        let generators: Vec<String> = self
            .generators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != gen)
            .map(|(_, n)| n.clone())
            .collect();
        let relators: Vec<FreeWord> = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ri)
            .map(|(_, r)| sub(r))
            .filter(|r| !r.is_empty())
            .collect();
        let meridian = self.meridian.map(|m| remap[m].expect("meridian never eliminated"));
        GroupPresentation { name: self.name.clone(), generators, relators, meridian }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    /// Nontrivial elementary divisors (torsion coefficients).
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl Abelianization {
    /// The first homology of any knot group.
    pub fn is_infinite_cyclic(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }
}

fn parse_word_tokens(text: &str, generators: &[String]) -> std::result::Result<FreeWord, String> {
    let mut raw = Vec::new();
    for tok in text.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            None => (tok, 1i32),
            Some((n, e)) => {
                let exp: i32 =
                    e.parse().map_err(|_| format!("malformed exponent in token `{tok}`"))?;
                if exp == 0 {
                    return Err(format!("zero exponent in token `{tok}`"));
                }
                (n, exp)
            }
        };
        let idx = generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| format!("unknown generator `{name}`"))?;
        raw.push((idx, exp));
    }
    Ok(FreeWord::reduce(raw))
}

/// Diagonal of the Smith normal form of an integer matrix (divisors may
/// include zeros for rank deficiency; successive divisibility holds).
fn smith_diagonal(m: &mut Vec<Vec<BigInt>>, rows: usize, cols: usize) -> Vec<BigInt> {
    let n = rows.min(cols);
    let mut divisors = Vec::with_capacity(n);
    let mut top = 0usize;
    while top < n {
        // find a nonzero pivot with minimal absolute value
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if !m[i][j].is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => m[i][j].abs() < m[pi][pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }
        // clear the pivot row and column
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in top + 1..rows {
                if m[i][top].is_zero() {
                    continue;
                }
                let q = &m[i][top] / &m[top][top];
                for j in top..cols {
                    let sub = &q * &m[top][j];
                    m[i][j] -= sub;
                }
                if !m[i][top].is_zero() {
                    // remainder smaller than pivot: swap rows and retry
                    m.swap(top, i);
                    dirty = true;
                }
            }
            for j in top + 1..cols {
                if m[top][j].is_zero() {
                    continue;
                }
                let q = &m[top][j] / &m[top][top];
                for row in m.iter_mut().take(rows).skip(top) {
                    let sub = &q * &row[top];
                    row[j] -= sub;
                }
                if !m[top][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(top, j);
                    }
                    dirty = true;
                }
            }
        }
        // enforce divisibility of later entries by the pivot
        let p = m[top][top].clone();
        let mut fixed = false;
        'outer: for i in top + 1..rows {
            for j in top + 1..cols {
                if !(&m[i][j] % &p).is_zero() {
                    // fold the offending row into the pivot row and restart
                    for jj in top..cols {
                        let add = m[i][jj].clone();
                        m[top][jj] += add;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        divisors.push(p.abs());
        top += 1;
    }
    while divisors.len() < n {
        divisors.push(BigInt::zero());
    }
    divisors
}

/// A homomorphism between presented groups, given by one image word per
/// source generator. Validity (relators mapping to the identity) is checked
/// by the word-problem module, not at construction.
#[derive(Debug, Clone, Serialize)]
pub struct GroupHom {
    pub source: GroupPresentation,
    pub target: GroupPresentation,
    pub images: Vec<FreeWord>,
    /// Optional surjectivity witnesses: `(target generator, source word)`.
    pub witnesses: Vec<(usize, FreeWord)>,
}

impl GroupHom {
    /// Parse the homomorphism format: one `map <src-gen> = <word in target
    /// gens>` line per source generator, plus optional
    /// `witness <target-gen> = <word in source gens>` lines.
    pub fn parse(
        text: &str,
        source: &GroupPresentation,
        target: &GroupPresentation,
    ) -> Result<Self> {
        let mut images: Vec<Option<FreeWord>> = vec![None; source.gen_count()];
        let mut witnesses = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: ln + 1, msg };
            let (keyword, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected `map` or `witness` line".into()))?;
            let (lhs, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err("expected `<gen> = <word>`".into()))?;
            let lhs = lhs.trim();
            match keyword {
                "map" => {
                    let idx = source
                        .gen_index(lhs)
                        .ok_or_else(|| err(format!("unknown source generator `{lhs}`")))?;
                    let word = parse_word_tokens(rhs, &target.generators)
                        .map_err(|msg| err(msg))?;
                    images[idx] = Some(word);
                }
                "witness" => {
                    let idx = target
                        .gen_index(lhs)
                        .ok_or_else(|| err(format!("unknown target generator `{lhs}`")))?;
                    let word = parse_word_tokens(rhs, &source.generators)
                        .map_err(|msg| err(msg))?;
                    witnesses.push((idx, word));
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::MissingImage(source.generators[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupHom { source: source.clone(), target: target.clone(), images, witnesses })
    }

    pub fn identity(g: &GroupPresentation) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.gen_count()).map(|i| FreeWord::letter(i, 1)).collect(),
            witnesses: (0..g.gen_count()).map(|i| (i, FreeWord::letter(i, 1))).collect(),
        }
    }

    /// Apply to a word in the source generators; the result is freely
    /// reduced.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(|g| self.images[g].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        // x1 x2 x2^-1 x3 -> x1 x3
        let w = FreeWord::reduce(vec![(0, 1), (1, 1), (1, -1), (2, 1)]);
        assert_eq!(w.letters(), &[(0, 1), (2, 1)]);
        // empty stays empty
        assert!(FreeWord::reduce(vec![]).is_empty());
        // x x x^-1 x^-1 x -> x
        let w = FreeWord::reduce(vec![(0, 1), (0, 1), (0, -1), (0, -1), (0, 1)]);
        assert_eq!(w.letters(), &[(0, 1)]);
        // cascading cancellation across letters
        let w = FreeWord::reduce(vec![(0, 2), (1, 1), (1, -1), (0, -2), (2, 1)]);
        assert_eq!(w.letters(), &[(2, 1)]);
    }

    #[test]
    fn reduce_is_idempotent_and_short() {
        let raw = vec![(0, 3), (1, -2), (1, 2), (0, -3), (2, 1), (2, 1)];
        let w = FreeWord::reduce(raw.clone());
        let again = FreeWord::reduce(w.letters().to_vec());
        assert_eq!(w, again);
        assert!(w.length() <= raw.iter().map(|&(_, e): &(usize, i32)| e.unsigned_abs() as usize).sum());
    }

    #[test]
    fn word_algebra() {
        let a = FreeWord::letter(0, 1);
        let b = FreeWord::letter(1, 1);
        let w = a.mul(&b).mul(&a.inv());
        assert_eq!(w.inv().mul(&w), FreeWord::empty());
        assert_eq!(w.pow(0), FreeWord::empty());
        assert_eq!(w.pow(-2), w.inv().mul(&w.inv()));
        assert_eq!(w.exponent_sum(), 1);
        assert_eq!(w.exponent_sum_for(0), 0);
    }

    fn trefoil() -> GroupPresentation {
        GroupPresentation::parse(
            "group trefoil\ngen y1 y2\nrel y1 y2 y1 y2^-1 y1^-1 y2^-1\nmeridian y1\n",
        )
        .unwrap()
    }

    #[test]
    fn parse_and_round_trip() {
        let g = trefoil();
        assert_eq!(g.name, "trefoil");
        assert_eq!(g.gen_count(), 2);
        assert_eq!(g.relators.len(), 1);
        assert_eq!(g.meridian, Some(0));
        let reparsed = GroupPresentation::parse(&g.serialize()).unwrap();
        assert_eq!(g, reparsed);
    }

    #[test]
    fn parse_errors() {
        let err = GroupPresentation::parse("gen x\nrel x y").unwrap_err();
        assert!(err.to_string().contains("unknown generator `y`"), "{err}");
        assert!(GroupPresentation::parse("gen x x").is_err());
        assert!(GroupPresentation::parse("gen x\nrel x^0").is_err());
        assert!(GroupPresentation::parse("gen x\nrel x^q").is_err());
        assert!(GroupPresentation::parse("gen x\nmeridian z").is_err());
        assert!(GroupPresentation::parse("bogus x").is_err());
    }

    #[test]
    fn abelianization_examples() {
        // trefoil: Z
        assert!(trefoil().abelianization().is_infinite_cyclic());
        // <x | x^2>: Z/2
        let g = GroupPresentation::parse("group c2\ngen x\nrel x^2\n").unwrap();
        let ab = g.abelianization();
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(2)]);
        // free group of rank 2
        let g = GroupPresentation::parse("group f2\ngen x y\n").unwrap();
        assert_eq!(g.abelianization().free_rank, 2);
        // Z/2 x Z/4 via a non-diagonal matrix
        let g = GroupPresentation::parse("group t\ngen x y\nrel x^2 y^2\nrel y^4\n").unwrap();
        let ab = g.abelianization();
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn simplify_leaves_trefoil_alone() {
        let g = trefoil();
        // both generators appear three times in the relator
        assert_eq!(g.simplify(), g);
    }

    #[test]
    fn simplify_eliminates_a_conjugation_relator() {
        // <a, b, c | c a c^-1 b^-1, ...>: b is solvable
        let g = GroupPresentation::parse(
            "group g\ngen a b c\nrel c a c^-1 b^-1\nrel a b a^-1 c^-1\nmeridian a\n",
        )
        .unwrap();
        let s = g.simplify();
        assert!(s.gen_count() < 3);
        assert_eq!(s.meridian, Some(s.gen_index("a").unwrap()));
        assert_eq!(s.abelianization(), g.abelianization());
    }

    #[test]
    fn hom_parse_and_apply() {
        let g = trefoil();
        let h = GroupHom::parse(
            "map y1 = y2\nmap y2 = y1\nwitness y1 = y2\n",
            &g,
            &g,
        )
        .unwrap();
        let w = g.word("y1 y2^-1").unwrap();
        assert_eq!(h.apply(&w), g.word("y2 y1^-1").unwrap());
        // homomorphism property on free words
        let u = g.word("y1 y2 y1").unwrap();
        let v = g.word("y1^-1 y2").unwrap();
        assert_eq!(h.apply(&u.mul(&v)), h.apply(&u).mul(&h.apply(&v)));
        // inverses are respected
        assert_eq!(h.apply(&u.inv()), h.apply(&u).inv());
        // identity homomorphism fixes words
        let id = GroupHom::identity(&g);
        assert_eq!(id.apply(&u), u);
    }

    #[test]
    fn hom_parse_requires_every_image() {
        let g = trefoil();
        assert!(matches!(
            GroupHom::parse("map y1 = y2\n", &g, &g),
            Err(Error::MissingImage(_))
        ));
    }
}
