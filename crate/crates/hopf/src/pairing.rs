//! The dual pairing and the two actions of U_μ(su(2)) on O(SU_μ(2)).

use std::sync::Arc;

use qiso_ncalg::instances::{A, AS, E, F, G, GS, K, KINV};
use qiso_ncalg::{Gen, Mono, NCPoly, Word};
use qiso_scalars::Coeff;

use crate::error::HopfError;
use crate::structure::QuantumGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// f ▷ x = ⟨f, x₂⟩x₁
    Left,
    /// x ◁ f = ⟨f, x₁⟩x₂
    Right,
}

impl<C: Coeff> QuantumGroup<C> {
    /// ⟨g, x⟩ for a U generator and an O generator.
    pub fn pair_gens(&self, g: Gen, x: Gen) -> C {
        let q = &self.params.q;
        let qi = || self.params.q_pow(-1);
        match (g, x) {
            (K, A) | (KINV, AS) => qi(),
            (K, AS) | (KINV, A) => q.clone(),
            (E, G) => C::one(),
            (F, GS) => -self.params.mu_pow(-1),
            _ => C::zero(),
        }
    }

    /// ⟨g, x₁⋯x_n⟩ for a generator g, through Δ(g).
    fn pair_gen_mono(&self, g: Gen, m: &Mono) -> C {
        let w = m.letters();
        if w.is_empty() {
            return self.counit_mono(1, &Mono::from_slice(&[g]));
        }
        match g {
            K | KINV => w.iter().fold(C::one(), |acc, &x| acc.mul_ref(&self.pair_gens(g, x))),
            // Δ(E) = E⊗K + K⁻¹⊗E, same shape for F
            _ => {
                let mut acc = C::zero();
                for i in 0..w.len() {
                    let mut c = self.pair_gens(g, w[i]);
                    if c.is_zero_coeff() {
                        continue;
                    }
                    for &x in &w[..i] {
                        c = c.mul_ref(&self.pair_gens(KINV, x));
                    }
                    for &x in &w[i + 1..] {
                        c = c.mul_ref(&self.pair_gens(K, x));
                    }
                    acc = acc.add_ref(&c);
                }
                acc
            }
        }
    }

    /// ⟨f, m⟩ for a word f in U and a normal monomial m in O.
    pub fn pair_word_mono(&self, f: &[Gen], m: &Mono) -> C {
        match f.len() {
            0 => self.counit_mono(0, m),
            1 => self.pair_gen_mono(f[0], m),
            _ => {
                // ⟨g f', x⟩ = ⟨g, x₁⟩⟨f', x₂⟩
                let mut acc = C::zero();
                for ((m1, m2), c) in self.coproduct_mono(0, m).terms() {
                    let a = self.pair_gen_mono(f[0], m1);
                    if a.is_zero_coeff() {
                        continue;
                    }
                    let b = self.pair_word_mono(&f[1..], m2);
                    acc = acc.add_ref(&c.mul_ref(&a).mul_ref(&b));
                }
                acc
            }
        }
    }

    pub fn pair(&self, f: &NCPoly<C>, x: &NCPoly<C>) -> Result<C, HopfError> {
        self.expect_uq(f)?;
        self.expect_su2(x)?;
        let mut acc = C::zero();
        for (fm, a) in f.terms() {
            for (xm, b) in x.terms() {
                let p = self.pair_word_mono(fm.letters(), xm);
                acc = acc.add_ref(&a.mul_ref(b).mul_ref(&p));
            }
        }
        Ok(acc)
    }

    /// Generator table on single letters: g acting on x, as a combination
    /// of letters.
    pub fn action_table(&self, side: Side, g: Gen, x: Gen) -> Vec<(Gen, C)> {
        let mu = || self.params.mu.clone();
        let mu_inv = || self.params.mu_pow(-1);
        let q = || self.params.q.clone();
        let qi = || self.params.q_pow(-1);
        let one = C::one;
        let v = |y: Gen, c: C| vec![(y, c)];
        match side {
            Side::Left => match (g, x) {
                (E, A) => v(GS, -mu()),
                (E, G) => v(AS, one()),
                (F, GS) => v(A, -mu_inv()),
                (F, AS) => v(G, one()),
                (K, A) | (K, G) => v(x, qi()),
                (K, AS) | (K, GS) => v(x, q()),
                (KINV, A) | (KINV, G) => v(x, q()),
                (KINV, AS) | (KINV, GS) => v(x, qi()),
                _ => Vec::new(),
            },
            Side::Right => match (g, x) {
                (E, G) => v(A, one()),
                (E, AS) => v(GS, -mu()),
                (F, A) => v(G, one()),
                (F, GS) => v(AS, -mu_inv()),
                (K, A) | (K, GS) => v(x, qi()),
                (K, G) | (K, AS) => v(x, q()),
                (KINV, A) | (KINV, GS) => v(x, q()),
                (KINV, G) | (KINV, AS) => v(x, qi()),
                _ => Vec::new(),
            },
        }
    }

    fn diag(&self, side: Side, g: Gen, x: Gen) -> C {
        self.action_table(side, g, x).first().map(|(_, c)| c.clone()).unwrap_or_else(C::zero)
    }

    /// Single generator on a normal monomial by the twisted Leibniz rule
    /// g(xy) = g₁(x) g₂(y), memoized.
    fn act_gen_mono(&self, side: Side, g: Gen, m: &Mono) -> Arc<NCPoly<C>> {
        let key = (side == Side::Left, g, m.clone());
        if let Some(v) = self.action_memo.read().get(&key) {
            return v.clone();
        }
        let w = m.letters();
        let res = if w.is_empty() {
            NCPoly::constant(&self.su2, self.counit_mono(1, &Mono::from_slice(&[g])))
        } else if g == K || g == KINV {
            let c = w.iter().fold(C::one(), |acc, &x| acc.mul_ref(&self.diag(side, g, x)));
            NCPoly::from_normal_terms(&self.su2, [(m.clone(), c)])
        } else {
            let mut acc = NCPoly::zero(&self.su2);
            for i in 0..w.len() {
                let img = self.action_table(side, g, w[i]);
                if img.is_empty() {
                    continue;
                }
                let mut c = C::one();
                for &x in &w[..i] {
                    c = c.mul_ref(&self.diag(side, KINV, x));
                }
                for &x in &w[i + 1..] {
                    c = c.mul_ref(&self.diag(side, K, x));
                }
                for (y, cy) in img {
                    let mut nw: Word = Word::from_slice(&w[..i]);
                    nw.push(y);
                    nw.extend_from_slice(&w[i + 1..]);
                    acc = &acc + &NCPoly::word(&self.su2, &nw).scale(&c.mul_ref(&cy));
                }
            }
            acc
        };
        let res = Arc::new(res);
        self.action_memo.write().insert(key, res.clone());
        res
    }

    fn act_gen(&self, side: Side, g: Gen, x: &NCPoly<C>) -> NCPoly<C> {
        let mut acc = NCPoly::zero(&self.su2);
        for (m, c) in x.terms() {
            acc = &acc + &self.act_gen_mono(side, g, m).scale(c);
        }
        acc
    }

    /// A word acting through the table: for ▷ the rightmost letter acts
    /// first, for ◁ the leftmost.
    pub fn act_word(&self, side: Side, f: &[Gen], x: &NCPoly<C>) -> NCPoly<C> {
        let mut cur = x.clone();
        match side {
            Side::Left => {
                for &g in f.iter().rev() {
                    cur = self.act_gen(side, g, &cur);
                }
            }
            Side::Right => {
                for &g in f {
                    cur = self.act_gen(side, g, &cur);
                }
            }
        }
        cur
    }

    fn act(&self, side: Side, f: &NCPoly<C>, x: &NCPoly<C>) -> Result<NCPoly<C>, HopfError> {
        self.expect_uq(f)?;
        self.expect_su2(x)?;
        let mut acc = NCPoly::zero(&self.su2);
        for (fm, a) in f.terms() {
            acc = &acc + &self.act_word(side, fm.letters(), x).scale(a);
        }
        Ok(acc)
    }

    /// f ▷ x
    pub fn act_left(&self, f: &NCPoly<C>, x: &NCPoly<C>) -> Result<NCPoly<C>, HopfError> {
        self.act(Side::Left, f, x)
    }

    /// x ◁ f
    pub fn act_right(&self, x: &NCPoly<C>, f: &NCPoly<C>) -> Result<NCPoly<C>, HopfError> {
        self.act(Side::Right, f, x)
    }

    /// The same actions computed from the pairing and Δ(x).
    pub fn act_via_pairing(&self, side: Side, f: &NCPoly<C>, x: &NCPoly<C>) -> Result<NCPoly<C>, HopfError> {
        self.expect_uq(f)?;
        let d = self.coproduct(x)?;
        let mut acc = NCPoly::zero(&self.su2);
        for (fm, a) in f.terms() {
            let part = match side {
                Side::Left => d.contract_right(|m| self.pair_word_mono(fm.letters(), m)),
                Side::Right => d.contract_left(|m| self.pair_word_mono(fm.letters(), m)),
            };
            acc = &acc + &part.scale(a);
        }
        Ok(acc)
    }
}
