//! Coproduct, counit and antipode on both algebras.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use qiso_ncalg::instances::{A, AS, E, F, G, GS, K, KINV};
use qiso_ncalg::{su2, uq, AlgKind, Algebra, Gen, Mono, NCPoly, TensorPoly};
use qiso_scalars::{Coeff, ParamConfig, Params};

use crate::error::HopfError;

/// O(SU_μ(2)) and U_μ(su(2)) sharing one parameter set, with the memo
/// tables of the structure maps.
pub struct QuantumGroup<C: Coeff> {
    pub params: Params<C>,
    pub su2: Arc<Algebra<C>>,
    pub uq: Arc<Algebra<C>>,
    gen_delta_su2: Vec<TensorPoly<C>>,
    gen_delta_uq: Vec<TensorPoly<C>>,
    gen_kappa_su2: Vec<NCPoly<C>>,
    gen_kappa_uq: Vec<NCPoly<C>>,
    delta_memo: [RwLock<HashMap<Mono, Arc<TensorPoly<C>>>>; 2],
    pub(crate) action_memo: RwLock<HashMap<(bool, Gen, Mono), Arc<NCPoly<C>>>>,
}

impl<C: Coeff> std::fmt::Debug for QuantumGroup<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuantumGroup({})", self.params.config)
    }
}

impl<C: Coeff> QuantumGroup<C> {
    pub fn new(cfg: &ParamConfig) -> Result<Arc<Self>, HopfError> {
        Self::from_params(Params::new(cfg)?)
    }

    pub fn from_params(params: Params<C>) -> Result<Arc<Self>, HopfError> {
        let s = su2(&params);
        let u = uq(&params)?;
        let mu = params.mu.clone();
        let mu_inv = params.mu_pow(-1);
        let gs = |g| NCPoly::gen(&s, g);
        let gu = |g| NCPoly::gen(&u, g);
        let ts = TensorPoly::pure;
        // Δ(α) = α⊗α − μγ*⊗γ, Δ(γ) = γ⊗α + α*⊗γ, and their stars
        let d_a = ts(&gs(A), &gs(A)).sub(&ts(&gs(GS), &gs(G)).scale(&mu));
        let d_as = ts(&gs(AS), &gs(AS)).sub(&ts(&gs(G), &gs(GS)).scale(&mu));
        let d_g = ts(&gs(G), &gs(A)).add(&ts(&gs(AS), &gs(G)));
        let d_gs = ts(&gs(GS), &gs(AS)).add(&ts(&gs(A), &gs(GS)));
        let d_e = ts(&gu(E), &gu(K)).add(&ts(&gu(KINV), &gu(E)));
        let d_f = ts(&gu(F), &gu(K)).add(&ts(&gu(KINV), &gu(F)));
        let d_k = ts(&gu(K), &gu(K));
        let d_kinv = ts(&gu(KINV), &gu(KINV));
        let gen_kappa_su2 = vec![gs(AS), gs(A), gs(G).scale(&-mu.clone()), gs(GS).scale(&-mu_inv.clone())];
        let gen_kappa_uq = vec![gu(F).scale(&-mu_inv), gu(KINV), gu(K), gu(E).scale(&-mu)];
        Ok(Arc::new(QuantumGroup {
            gen_delta_su2: vec![d_a, d_as, d_g, d_gs],
            gen_delta_uq: vec![d_f, d_k, d_kinv, d_e],
            gen_kappa_su2,
            gen_kappa_uq,
            params,
            su2: s,
            uq: u,
            delta_memo: [RwLock::new(HashMap::new()), RwLock::new(HashMap::new())],
            action_memo: RwLock::new(HashMap::new()),
        }))
    }

    fn side(&self, alg: &Arc<Algebra<C>>) -> Result<usize, HopfError> {
        if Arc::ptr_eq(alg, &self.su2) {
            Ok(0)
        } else if Arc::ptr_eq(alg, &self.uq) {
            Ok(1)
        } else {
            Err(HopfError::NoHopfData(alg.name()))
        }
    }

    pub fn algebra(&self, kind: AlgKind) -> Option<&Arc<Algebra<C>>> {
        match kind {
            AlgKind::Su2 => Some(&self.su2),
            AlgKind::Uq => Some(&self.uq),
            AlgKind::Other => None,
        }
    }

    pub fn gen_su2(&self, g: Gen) -> NCPoly<C> {
        NCPoly::gen(&self.su2, g)
    }

    pub fn gen_uq(&self, g: Gen) -> NCPoly<C> {
        NCPoly::gen(&self.uq, g)
    }

    pub fn scalar_su2(&self, c: C) -> NCPoly<C> {
        NCPoly::constant(&self.su2, c)
    }

    /// Δ on a normal monomial, memoized; built as the product of the
    /// generator coproducts.
    pub fn coproduct_mono(&self, side: usize, m: &Mono) -> Arc<TensorPoly<C>> {
        if let Some(t) = self.delta_memo[side].read().get(m) {
            return t.clone();
        }
        let alg = if side == 0 { &self.su2 } else { &self.uq };
        let gens = if side == 0 { &self.gen_delta_su2 } else { &self.gen_delta_uq };
        let w = m.letters();
        let t = match w.len() {
            0 => TensorPoly::one(alg, alg),
            1 => gens[w[0] as usize].clone(),
            n => {
                let head = self.coproduct_mono(side, &Mono::from_slice(&w[..n - 1]));
                head.mul(&gens[w[n - 1] as usize])
            }
        };
        let t = Arc::new(t);
        self.delta_memo[side].write().insert(m.clone(), t.clone());
        t
    }

    pub fn coproduct(&self, x: &NCPoly<C>) -> Result<TensorPoly<C>, HopfError> {
        let side = self.side(x.algebra())?;
        let alg = x.algebra();
        let mut acc = TensorPoly::zero(alg, alg);
        for (m, c) in x.terms() {
            acc = acc.add(&self.coproduct_mono(side, m).scale(c));
        }
        Ok(acc)
    }

    /// (Δ ⊗ id) and (id ⊗ Δ) land in a triple tensor; represented as a map
    /// from monomial triples.
    pub fn coassociativity_defect(&self, x: &NCPoly<C>) -> Result<usize, HopfError> {
        use std::collections::BTreeMap;
        let side = self.side(x.algebra())?;
        let d = self.coproduct(x)?;
        let mut left: BTreeMap<(Mono, Mono, Mono), C> = BTreeMap::new();
        let mut right: BTreeMap<(Mono, Mono, Mono), C> = BTreeMap::new();
        let put = |acc: &mut BTreeMap<(Mono, Mono, Mono), C>, k: (Mono, Mono, Mono), c: C| {
            let s = match acc.remove(&k) {
                Some(v) => v.add_ref(&c),
                None => c,
            };
            if !s.is_zero_coeff() {
                acc.insert(k, s);
            }
        };
        for ((m, n), c) in d.terms() {
            for ((m1, m2), c1) in self.coproduct_mono(side, m).terms() {
                put(&mut left, (m1.clone(), m2.clone(), n.clone()), c.mul_ref(c1));
            }
            for ((n1, n2), c2) in self.coproduct_mono(side, n).terms() {
                put(&mut right, (m.clone(), n1.clone(), n2.clone()), c.mul_ref(c2));
            }
        }
        for (k, c) in right {
            put(&mut left, k, -c);
        }
        Ok(left.len())
    }

    fn counit_gen(&self, side: usize, g: Gen) -> C {
        let one = match side {
            0 => g == A || g == AS,
            _ => g == K || g == KINV,
        };
        if one {
            C::one()
        } else {
            C::zero()
        }
    }

    pub fn counit_mono(&self, side: usize, m: &Mono) -> C {
        let mut acc = C::one();
        for &g in m.letters() {
            acc = acc.mul_ref(&self.counit_gen(side, g));
        }
        acc
    }

    pub fn counit(&self, x: &NCPoly<C>) -> Result<C, HopfError> {
        let side = self.side(x.algebra())?;
        let mut acc = C::zero();
        for (m, c) in x.terms() {
            acc = acc.add_ref(&c.mul_ref(&self.counit_mono(side, m)));
        }
        Ok(acc)
    }

    pub fn antipode_mono(&self, side: usize, m: &Mono) -> NCPoly<C> {
        let alg = if side == 0 { &self.su2 } else { &self.uq };
        let gens = if side == 0 { &self.gen_kappa_su2 } else { &self.gen_kappa_uq };
        let mut acc = NCPoly::one(alg);
        for &g in m.letters().iter().rev() {
            acc = &acc * &gens[g as usize];
        }
        acc
    }

    pub fn antipode(&self, x: &NCPoly<C>) -> Result<NCPoly<C>, HopfError> {
        let side = self.side(x.algebra())?;
        let mut acc = NCPoly::zero(x.algebra());
        for (m, c) in x.terms() {
            acc = &acc + &self.antipode_mono(side, m).scale(c);
        }
        Ok(acc)
    }

    /// m(κ ⊗ id)Δ(x) − ε(x)1 and m(id ⊗ κ)Δ(x) − ε(x)1.
    pub fn antipode_defects(&self, x: &NCPoly<C>) -> Result<(NCPoly<C>, NCPoly<C>), HopfError> {
        let side = self.side(x.algebra())?;
        let alg = x.algebra();
        let d = self.coproduct(x)?;
        let eps = NCPoly::constant(alg, self.counit(x)?);
        let id = |m: &Mono| NCPoly::from_normal_terms(alg, [(m.clone(), C::one())]);
        let kap = |m: &Mono| self.antipode_mono(side, m);
        let l = d.map_legs(kap, id, alg, alg).multiply()?;
        let r = d.map_legs(id, kap, alg, alg).multiply()?;
        Ok((&l - &eps, &r - &eps))
    }

    /// (ε ⊗ id)Δ(x) − x and (id ⊗ ε)Δ(x) − x.
    pub fn counit_defects(&self, x: &NCPoly<C>) -> Result<(NCPoly<C>, NCPoly<C>), HopfError> {
        let side = self.side(x.algebra())?;
        let d = self.coproduct(x)?;
        let l = d.contract_left(|m| self.counit_mono(side, m));
        let r = d.contract_right(|m| self.counit_mono(side, m));
        Ok((&l - x, &r - x))
    }
}
