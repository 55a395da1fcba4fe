//! Unnormalized basis vectors ṽ^l_{m,N} = F^{l−m} ▷ (y₁^{l−1/2} u_N) and their levels.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::Mutex;
use qiso_hopf::QuantumGroup;
use qiso_ncalg::instances::{A, AS, E, F, G, GS};
use qiso_ncalg::NCPoly;
use qiso_podles::Sphere;
use qiso_scalars::Coeff;

use crate::error::SpectralError;

/// Doubled indices: 2l, 2m, 2N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VecKey {
    pub l2: i32,
    pub m2: i32,
    pub n2: i32,
}

fn half(x: i32) -> String {
    if x % 2 == 0 {
        format!("{}", x / 2)
    } else {
        format!("{x}/2")
    }
}

impl fmt::Display for VecKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[l={}, m={}, N={}]", half(self.l2), half(self.m2), half(self.n2))
    }
}

#[derive(Clone, Debug)]
pub struct BasisVector<C: Coeff> {
    pub key: VecKey,
    pub payload: NCPoly<C>,
    /// h(ṽ*ṽ)
    pub norm2: C,
}

#[derive(Clone, Debug)]
pub struct LevelBlock<C: Coeff> {
    pub l2: i32,
    /// N = +1/2 first, then N = −1/2; m descending within each.
    pub vectors: Vec<BasisVector<C>>,
    /// gram[i][j] = h(ṽ_i* ṽ_j)
    pub gram: Vec<Vec<C>>,
}

impl<C: Coeff> LevelBlock<C> {
    pub fn keys(&self) -> Vec<VecKey> {
        self.vectors.iter().map(|v| v.key).collect()
    }

    pub fn norms(&self) -> Vec<C> {
        self.vectors.iter().map(|v| v.norm2.clone()).collect()
    }

    pub fn payloads(&self) -> Vec<NCPoly<C>> {
        self.vectors.iter().map(|v| v.payload.clone()).collect()
    }

    pub fn position(&self, key: VecKey) -> Option<usize> {
        self.vectors.iter().position(|v| v.key == key)
    }
}

/// Levels 2l = 1, 3, … up to a guard, built on demand and kept.
pub struct Spectral<C: Coeff> {
    pub qg: Arc<QuantumGroup<C>>,
    pub sphere: Sphere<C>,
    pub max_l2: i32,
    levels: Mutex<BTreeMap<i32, Arc<LevelBlock<C>>>>,
    pub(crate) coreps: Mutex<BTreeMap<i32, Arc<crate::ops::Corep<C>>>>,
}

/// Levels are built up to 2l = 5 so that π-expansions out of 2l = 3 fit.
pub const DEFAULT_MAX_L2: i32 = 5;

/// Highest level the spectral suite verifies by default.
pub const DEFAULT_TOP_L2: i32 = 3;

impl<C: Coeff> Spectral<C> {
    pub fn new(sphere: Sphere<C>, max_l2: i32) -> Self {
        Spectral { qg: sphere.qg.clone(), sphere, max_l2, levels: Mutex::new(BTreeMap::new()), coreps: Mutex::new(BTreeMap::new()) }
    }

    fn w(&self, x: &[u8]) -> NCPoly<C> {
        NCPoly::word(&self.qg.su2, x)
    }

    /// u_j = Π_{i=0}^{2j−1} (α* − μ^{−i} s γ*) for j > 0; u_{−j} = E^{2j} ▷ w_j.
    pub fn u(&self, j2: i32) -> NCPoly<C> {
        let p = &self.qg.params;
        if j2 < 0 {
            let e = vec![E; (-j2) as usize];
            return self.qg.act_word(qiso_hopf::Side::Left, &e, &self.w_j(-j2));
        }
        let mut acc = NCPoly::one(&self.qg.su2);
        for i in 0..j2 {
            let f = &self.w(&[AS]) - &self.w(&[GS]).scale(&(p.mu_pow(-(i as i64)) * self.sphere.s.clone()));
            acc = &acc * &f;
        }
        acc
    }

    /// w_j = Π_{i=1}^{2j} (α − μ^i s γ)
    pub fn w_j(&self, j2: i32) -> NCPoly<C> {
        let p = &self.qg.params;
        let mut acc = NCPoly::one(&self.qg.su2);
        for i in 1..=j2 {
            let f = &self.w(&[A]) - &self.w(&[G]).scale(&(p.mu_pow(i as i64) * self.sphere.s.clone()));
            acc = &acc * &f;
        }
        acc
    }

    /// y₁ = (1+μ⁻²)^{1/2}(c^{1/2}μ²γ*² − μγ*α* − μc^{1/2}α*²)
    pub fn y1(&self) -> Result<NCPoly<C>, SpectralError> {
        let p = &self.qg.params;
        let sg = p.sigma()?;
        let inner = &(&self.w(&[GS, GS]).scale(&(sg.clone() * p.mu_pow(2))) - &self.w(&[GS, AS]).scale(&p.mu))
            - &self.w(&[AS, AS]).scale(&(p.mu.clone() * sg));
        Ok(inner.scale(&(p.r()? * p.mu_pow(-1))))
    }

    pub fn payload(&self, key: VecKey) -> Result<NCPoly<C>, SpectralError> {
        let VecKey { l2, m2, n2 } = key;
        if n2.abs() != 1 || m2.abs() > l2 || (l2 - m2) % 2 != 0 || l2 < 1 {
            return Err(SpectralError::NoSuchVector { l2, m2, n2 });
        }
        let y1 = self.y1()?;
        let mut x = self.u(n2);
        for _ in 0..(l2 - 1) / 2 {
            x = &y1 * &x;
        }
        let f = vec![F; ((l2 - m2) / 2) as usize];
        Ok(self.qg.act_word(qiso_hopf::Side::Left, &f, &x))
    }

    pub fn check_level(&self, l2: i32) -> Result<(), SpectralError> {
        if l2 < 1 || l2 % 2 == 0 || l2 > self.max_l2 {
            return Err(SpectralError::LevelGuard { got: l2, max: self.max_l2 });
        }
        Ok(())
    }

    pub fn level_keys(l2: i32) -> Vec<VecKey> {
        let mut out = Vec::new();
        for n2 in [1, -1] {
            let mut m2 = l2;
            while m2 >= -l2 {
                out.push(VecKey { l2, m2, n2 });
                m2 -= 2;
            }
        }
        out
    }

    /// All 2(2l+1) vectors of a level with their Gram matrix.
    pub fn build_level(&self, l2: i32) -> Result<Arc<LevelBlock<C>>, SpectralError> {
        self.check_level(l2)?;
        if let Some(b) = self.levels.lock().get(&l2) {
            return Ok(b.clone());
        }
        let mut vectors = Vec::new();
        for key in Self::level_keys(l2) {
            let payload = self.payload(key)?;
            let norm2 = self.qg.inner_product(&payload, &payload)?;
            vectors.push(BasisVector { key, payload, norm2 });
        }
        let mut gram = Vec::with_capacity(vectors.len());
        for (i, x) in vectors.iter().enumerate() {
            let mut row = Vec::with_capacity(vectors.len());
            for (j, y) in vectors.iter().enumerate() {
                row.push(if i == j { x.norm2.clone() } else { self.qg.inner_product(&x.payload, &y.payload)? });
            }
            gram.push(row);
        }
        let block = Arc::new(LevelBlock { l2, vectors, gram });
        self.levels.lock().insert(l2, block.clone());
        Ok(block)
    }

    pub fn vector(&self, key: VecKey) -> Result<BasisVector<C>, SpectralError> {
        let b = self.build_level(key.l2)?;
        let i = b.position(key).ok_or(SpectralError::NoSuchVector { l2: key.l2, m2: key.m2, n2: key.n2 })?;
        Ok(b.vectors[i].clone())
    }
}
