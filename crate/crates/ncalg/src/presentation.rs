//! Presented *-algebras with oriented rewrite rules and memoized normal forms.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use parking_lot::RwLock;
use qiso_scalars::Coeff;

use crate::mono::{Gen, Mono, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgKind {
    /// O(SU_μ(2)) on α, α*, γ, γ*.
    Su2,
    /// U_μ(su(2)) on F, K, K⁻¹, E.
    Uq,
    /// Anything else (tests, free algebras).
    Other,
}

#[derive(Clone, Debug)]
pub struct Rule<C> {
    pub lhs: Word,
    pub rhs: Vec<(Mono, C)>,
}

impl<C: Coeff> Rule<C> {
    pub fn new(lhs: &[Gen], rhs: Vec<(&[Gen], C)>) -> Self {
        Rule { lhs: Word::from_slice(lhs), rhs: rhs.into_iter().map(|(w, c)| (Mono::from_slice(w), c)).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation<C> {
    pub name: &'static str,
    pub kind: AlgKind,
    pub gens: Vec<&'static str>,
    /// Involution on generators.
    pub star: Vec<Gen>,
    pub rules: Vec<Rule<C>>,
    /// Generator weights of the termination order: weighted degree, then
    /// length, then lexicographic.
    pub weights: Vec<u32>,
    /// Declared normal-monomial shape.
    pub shape: fn(&[Gen]) -> bool,
}

impl<C: Coeff> Presentation<C> {
    pub fn weight(&self, w: &[Gen]) -> u32 {
        w.iter().map(|&g| self.weights[g as usize]).sum()
    }

    /// The termination order on words.
    pub fn order_cmp(&self, a: &[Gen], b: &[Gen]) -> std::cmp::Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.len().cmp(&b.len())).then_with(|| a.cmp(b))
    }

    /// Every rule's right-hand monomials are strictly below its left side.
    pub fn rules_decrease(&self) -> bool {
        self.rules
            .iter()
            .all(|r| r.rhs.iter().all(|(m, _)| self.order_cmp(m.letters(), &r.lhs).is_lt()))
    }

    /// Every rule is closed under the involution: starring both sides and
    /// normalizing gives the same element; see `confluence::star_closed`.
    pub fn star_of(&self, w: &[Gen]) -> Word {
        w.iter().rev().map(|&g| self.star[g as usize]).collect()
    }

    pub fn gen_index(&self, name: &str) -> Option<Gen> {
        self.gens.iter().position(|g| *g == name).map(|i| i as Gen)
    }
}

type NormalForm<C> = Arc<Vec<(Mono, C)>>;

/// A presentation together with its normal-form memo.
pub struct Algebra<C> {
    pub pres: Presentation<C>,
    /// Rule index for each ordered pair of generators (all rules here have
    /// two-letter left sides; longer ones go to `long_rules`).
    pair_rule: Vec<Option<usize>>,
    long_rules: Vec<usize>,
    memo: RwLock<HashMap<Word, NormalForm<C>>>,
}

impl<C> std::fmt::Debug for Algebra<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({})", self.pres.name)
    }
}

impl<C: Coeff> Algebra<C> {
    pub fn new(pres: Presentation<C>) -> Arc<Self> {
        let n = pres.gens.len();
        let mut pair_rule = vec![None; n * n];
        let mut long_rules = Vec::new();
        for (i, r) in pres.rules.iter().enumerate() {
            if r.lhs.len() == 2 {
                pair_rule[r.lhs[0] as usize * n + r.lhs[1] as usize] = Some(i);
            } else {
                long_rules.push(i);
            }
        }
        Arc::new(Algebra { pres, pair_rule, long_rules, memo: RwLock::new(HashMap::new()) })
    }

    pub fn ngens(&self) -> usize {
        self.pres.gens.len()
    }

    pub fn kind(&self) -> AlgKind {
        self.pres.kind
    }

    pub fn name(&self) -> &'static str {
        self.pres.name
    }

    /// Leftmost rule occurrence: (position, rule index).
    pub fn find_redex(&self, w: &[Gen]) -> Option<(usize, usize)> {
        let n = self.ngens();
        for i in 0..w.len() {
            if i + 1 < w.len() {
                if let Some(r) = self.pair_rule[w[i] as usize * n + w[i + 1] as usize] {
                    return Some((i, r));
                }
            }
            for &r in &self.long_rules {
                if w[i..].starts_with(&self.pres.rules[r].lhs) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[Gen]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Apply one rule at a position, giving a combination of words.
    pub fn rewrite_at(&self, w: &[Gen], pos: usize, rule: usize) -> Vec<(Word, C)> {
        let r = &self.pres.rules[rule];
        r.rhs
            .iter()
            .map(|(m, c)| {
                let mut nw = Word::from_slice(&w[..pos]);
                nw.extend_from_slice(m.letters());
                nw.extend_from_slice(&w[pos + r.lhs.len()..]);
                (nw, c.clone())
            })
            .collect()
    }

    /// Normal form of a word, memoized.
    pub fn normalize_word(&self, w: &[Gen]) -> NormalForm<C> {
        if let Some(v) = self.memo.read().get(w) {
            return v.clone();
        }
        let res: NormalForm<C> = match self.find_redex(w) {
            None => Arc::new(vec![(Mono::from_slice(w), C::one())]),
            Some((pos, rule)) => {
                let mut acc: BTreeMap<Mono, C> = BTreeMap::new();
                for (nw, c) in self.rewrite_at(w, pos, rule) {
                    for (m, c2) in self.normalize_word(&nw).iter() {
                        add_term(&mut acc, m.clone(), c.mul_ref(c2));
                    }
                }
                Arc::new(acc.into_iter().collect())
            }
        };
        self.memo.write().insert(Word::from_slice(w), res.clone());
        res
    }

    pub fn mul_mono(&self, a: &Mono, b: &Mono) -> NormalForm<C> {
        if a.is_one() || b.is_one() {
            let m = if a.is_one() { b.clone() } else { a.clone() };
            return Arc::new(vec![(m, C::one())]);
        }
        self.normalize_word(&a.concat(b))
    }

    /// The involution on a word: reverse and star each letter (unnormalized).
    pub fn star_word(&self, w: &[Gen]) -> Word {
        self.pres.star_of(w)
    }

    /// Irreducible words coincide with the declared shape.
    pub fn shape_matches(&self, w: &[Gen]) -> bool {
        self.is_normal(w) == (self.pres.shape)(w)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn render_mono(&self, m: &Mono) -> String {
        m.render(&self.pres.gens)
    }
}

pub(crate) fn add_term<C: Coeff>(acc: &mut BTreeMap<Mono, C>, m: Mono, c: C) {
    if c.is_zero_coeff() {
        return;
    }
    match acc.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add_ref(&c);
            if s.is_zero_coeff() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}
