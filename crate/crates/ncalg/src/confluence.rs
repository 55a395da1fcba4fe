//! Local-confluence certification and PBW dimension counts.

use std::collections::BTreeMap;
use std::sync::Arc;

use qiso_scalars::Coeff;

use crate::error::NcError;
use crate::linalg::rank;
use crate::mono::{Gen, Mono, Word};
use crate::presentation::{add_term, Algebra};

#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub rules: (usize, usize),
    pub joins: bool,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub pairs: Vec<CriticalPair>,
    /// Words up to the bound on which every one-step rewrite was compared.
    pub words_checked: usize,
    pub ambiguous_words_failed: usize,
    pub rules_decrease: bool,
}

impl ConfluenceReport {
    pub fn ok(&self) -> bool {
        self.rules_decrease && self.ambiguous_words_failed == 0 && self.pairs.iter().all(|p| p.joins)
    }
}

fn normalize_comb<C: Coeff>(alg: &Algebra<C>, comb: Vec<(Word, C)>) -> BTreeMap<Mono, C> {
    let mut acc = BTreeMap::new();
    for (w, c) in comb {
        for (m, c2) in alg.normalize_word(&w).iter() {
            add_term(&mut acc, m.clone(), c.mul_ref(c2));
        }
    }
    acc
}

fn redexes<C: Coeff>(alg: &Algebra<C>, w: &[Gen]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        for (ri, r) in alg.pres.rules.iter().enumerate() {
            if w[i..].starts_with(&r.lhs) {
                out.push((i, ri));
            }
        }
    }
    out
}

/// Two one-step rewrites of `w` have the same normal form.
fn joins<C: Coeff>(alg: &Algebra<C>, w: &[Gen], a: (usize, usize), b: (usize, usize)) -> bool {
    normalize_comb(alg, alg.rewrite_at(w, a.0, a.1)) == normalize_comb(alg, alg.rewrite_at(w, b.0, b.1))
}

/// Enumerate overlaps and inclusions of rule left sides (length ≤ bound),
/// and additionally compare all one-step rewrites of every word up to the
/// bound.
pub fn confluence_check<C: Coeff>(alg: &Arc<Algebra<C>>, bound: usize) -> ConfluenceReport {
    let rules = &alg.pres.rules;
    let mut pairs = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        for (j, r2) in rules.iter().enumerate() {
            let (l1, l2) = (&r1.lhs, &r2.lhs);
            // suffix of l1 = prefix of l2
            for k in 1..l1.len().min(l2.len() + 1) {
                if l1[l1.len() - k..] == l2[..k] {
                    let mut w: Word = l1.clone();
                    w.extend_from_slice(&l2[k..]);
                    if w.len() <= bound {
                        let ok = joins(alg, &w, (0, i), (l1.len() - k, j));
                        pairs.push(CriticalPair { word: w, rules: (i, j), joins: ok });
                    }
                }
            }
            // l2 strictly inside l1
            if i != j && l2.len() < l1.len() {
                for p in 0..=l1.len() - l2.len() {
                    if l1[p..p + l2.len()] == l2[..] {
                        let ok = joins(alg, l1, (0, i), (p, j));
                        pairs.push(CriticalPair { word: l1.clone(), rules: (i, j), joins: ok });
                    }
                }
            }
        }
    }
    let mut words_checked = 0;
    let mut failed = 0;
    for w in all_words(alg.ngens(), bound) {
        let rs = redexes(alg, &w);
        if rs.len() < 2 {
            continue;
        }
        words_checked += 1;
        if rs.windows(2).any(|p| !joins(alg, &w, p[0], p[1])) {
            failed += 1;
        }
    }
    ConfluenceReport { pairs, words_checked, ambiguous_words_failed: failed, rules_decrease: alg.pres.rules_decrease() }
}

/// All words of length ≤ n over `g` generators.
pub fn all_words(g: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(layer.len() * g);
        for w in &layer {
            for x in 0..g as Gen {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Star-closure of the rules: for each rule l → r, star(l) and star(r)
/// normalize to the same element.
pub fn star_closed<C: Coeff>(alg: &Arc<Algebra<C>>) -> bool {
    alg.pres.rules.iter().all(|r| {
        let lhs = normalize_comb(alg, vec![(alg.star_word(&r.lhs), C::one())]);
        let rhs = normalize_comb(alg, r.rhs.iter().map(|(m, c)| (alg.star_word(m.letters()), c.clone())).collect());
        lhs == rhs
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwCount {
    pub degree: usize,
    /// Words of length ≤ degree admitted by the declared shape.
    pub shape_count: usize,
    /// Irreducible words of length ≤ degree.
    pub irreducible_count: usize,
    /// Rank of the normal forms of all words of length ≤ degree.
    pub span_rank: usize,
}

impl PbwCount {
    pub fn ok(&self) -> bool {
        self.shape_count == self.irreducible_count && self.irreducible_count == self.span_rank
    }
}

/// Dimension count of the degree-≤d filtration piece, three ways.
pub fn pbw_count<C: Coeff>(alg: &Arc<Algebra<C>>, degree: usize) -> Result<PbwCount, NcError> {
    let words = all_words(alg.ngens(), degree);
    let shape_count = words.iter().filter(|w| (alg.pres.shape)(w)).count();
    let irreducible_count = words.iter().filter(|w| alg.is_normal(w)).count();
    let vecs: Vec<BTreeMap<Mono, C>> = words.iter().map(|w| alg.normalize_word(w).iter().cloned().collect()).collect();
    let span_rank = rank(&vecs)?;
    Ok(PbwCount { degree, shape_count, irreducible_count, span_rank })
}
