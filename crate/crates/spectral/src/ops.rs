//! π-expansions, the corepresentation block of Δ on a level, and the
//! weighted (twisted) trace identities.

use std::sync::Arc;

use qiso_ncalg::{NCPoly, TensorPoly};
use qiso_podles::first_leg_coefficients;
use qiso_scalars::Coeff;

use crate::error::SpectralError;
use crate::level::{LevelBlock, Spectral, VecKey};

#[derive(Clone, Debug)]
pub struct Expansion<C: Coeff> {
    pub source: VecKey,
    /// Nonzero coefficients ⟨ṽ_t, x ṽ_s⟩ / ‖ṽ_t‖² over levels l−1, l, l+1.
    pub coeffs: Vec<(VecKey, C)>,
    /// x ṽ_s minus its projection; zero proves membership in the span.
    pub residual: NCPoly<C>,
}

/// Q with Δ(ṽ_i) = Σ_a ṽ_a ⊗ Q[a][i].
#[derive(Clone, Debug)]
pub struct Corep<C: Coeff> {
    pub l2: i32,
    pub keys: Vec<VecKey>,
    pub q: Vec<Vec<NCPoly<C>>>,
}

impl<C: Coeff> Corep<C> {
    /// Entries joining different N; expected empty, reported rather than assumed.
    pub fn n_offdiagonal(&self) -> Vec<(VecKey, VecKey)> {
        let mut out = Vec::new();
        for (a, ka) in self.keys.iter().enumerate() {
            for (i, ki) in self.keys.iter().enumerate() {
                if ka.n2 != ki.n2 && !self.q[a][i].is_zero() {
                    out.push((*ka, *ki));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.q.iter().flatten().map(NCPoly::degree).max().unwrap_or(0)
    }
}

/// Which side the star goes on in a weighted sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// Σ_a w_a Q_ai Q*_aj
    QQs,
    /// Σ_a w_a Q*_ai Q_aj
    QsQ,
}

impl<C: Coeff> Spectral<C> {
    /// π(x) ṽ_s expanded over the neighbouring levels.
    pub fn pi_expand(&self, x: &NCPoly<C>, source: VecKey) -> Result<Expansion<C>, SpectralError> {
        let src = self.vector(source)?;
        let y = x * &src.payload;
        let mut residual = y.clone();
        let mut coeffs = Vec::new();
        for l2 in [source.l2 - 2, source.l2, source.l2 + 2] {
            if l2 < 1 {
                continue;
            }
            let block = self.build_level(l2)?;
            for v in &block.vectors {
                let c = self.qg.inner_product(&v.payload, &y)? * self.qg.params.inv(&v.norm2)?;
                if !c.is_zero_coeff() {
                    residual = &residual - &v.payload.scale(&c);
                    coeffs.push((v.key, c));
                }
            }
        }
        Ok(Expansion { source, coeffs, residual })
    }

    /// Memoized per level.
    pub fn coaction_block(&self, l2: i32) -> Result<Arc<Corep<C>>, SpectralError> {
        if let Some(c) = self.coreps.lock().get(&l2) {
            return Ok(c.clone());
        }
        let block = self.build_level(l2)?;
        let basis = block.payloads();
        let n = basis.len();
        let mut q = vec![Vec::with_capacity(n); n];
        for v in &basis {
            let col = first_leg_coefficients(&self.qg.coproduct(v)?, &basis)?.ok_or(SpectralError::NotInLevel(l2))?;
            for (a, qa) in col.into_iter().enumerate() {
                q[a].push(qa);
            }
        }
        let corep = Arc::new(Corep { l2, keys: block.keys(), q });
        self.coreps.lock().insert(l2, corep.clone());
        Ok(corep)
    }

    /// Number of (i, j) where Σ_a w_a n_a (Q Q* or Q* Q)_{a;ij} ≠ δ_ij w_i n_i.
    pub fn weighted_defects(&self, block: &LevelBlock<C>, corep: &Corep<C>, w: &[C], order: Order) -> usize {
        let n = block.norms();
        let d = n.len();
        let one = NCPoly::one(&self.qg.su2);
        let stars: Vec<Vec<NCPoly<C>>> = corep.q.iter().map(|row| row.iter().map(NCPoly::star).collect()).collect();
        let mut bad = 0;
        for i in 0..d {
            for j in 0..d {
                let mut acc = NCPoly::zero(&self.qg.su2);
                for a in 0..d {
                    if w[a].is_zero_coeff() {
                        continue;
                    }
                    let t = match order {
                        Order::QQs => &corep.q[a][i] * &stars[a][j],
                        Order::QsQ => &stars[a][i] * &corep.q[a][j],
                    };
                    acc = &acc + &t.scale(&w[a].mul_ref(&n[a]));
                }
                if i == j {
                    acc = &acc - &one.scale(&w[i].mul_ref(&n[i]));
                }
                bad += usize::from(!acc.is_zero());
            }
        }
        bad
    }

    /// Rows: Σ_j n_j⁻¹ Q_ij Q*_kj = δ_ik n_i⁻¹.
    pub fn row_defects(&self, block: &LevelBlock<C>, corep: &Corep<C>) -> Result<usize, SpectralError> {
        let p = &self.qg.params;
        let ninv: Vec<C> = block.norms().iter().map(|x| p.inv(x)).collect::<Result<_, _>>()?;
        let d = ninv.len();
        let one = NCPoly::one(&self.qg.su2);
        let mut bad = 0;
        for i in 0..d {
            for k in 0..d {
                let mut acc = NCPoly::zero(&self.qg.su2);
                for j in 0..d {
                    acc = &acc + &(&corep.q[i][j] * &corep.q[k][j].star()).scale(&ninv[j]);
                }
                if i == k {
                    acc = &acc - &one.scale(&ninv[i]);
                }
                bad += usize::from(!acc.is_zero());
            }
        }
        Ok(bad)
    }

    /// Σ_a w_a ⟨ṽ_a, x ṽ_a⟩/n_a / Σ_a w_a.
    pub fn level_state(&self, l2: i32, x: &NCPoly<C>, w: &[C]) -> Result<C, SpectralError> {
        let block = self.build_level(l2)?;
        let p = &self.qg.params;
        let mut num = C::zero();
        let mut den = C::zero();
        for (v, wa) in block.vectors.iter().zip(w) {
            let diag = self.qg.inner_product(&v.payload, &(x * &v.payload))? * p.inv(&v.norm2)?;
            num = num + wa.mul_ref(&diag);
            den = den + wa.clone();
        }
        Ok(num * p.inv(&den)?)
    }

    /// Δ(ṽ) rebuilt from the block, for residual reports.
    pub fn reassembled(&self, corep: &Corep<C>, i: usize) -> Result<TensorPoly<C>, SpectralError> {
        let block = self.build_level(corep.l2)?;
        let col: Vec<NCPoly<C>> = corep.q.iter().map(|row| row[i].clone()).collect();
        Ok(qiso_podles::reassemble(&block.payloads(), &col).expect("nonempty level"))
    }
}

/// Weight families on a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weights {
    /// μ^{2m}: the eigenvalue of K² ▷ on ṽ^l_{m,N}.
    R,
    /// μ^{−2m} as printed.
    RPrinted,
    /// μ^{2m±1} on N = ±1/2.
    R0,
    /// R₀ restricted to N = +1/2.
    R0Plus,
    /// R₀ restricted to N = −1/2.
    R0Minus,
    /// All ones: the untwisted trace.
    Ones,
}

impl Weights {
    pub fn name(self) -> &'static str {
        match self {
            Weights::R => "R",
            Weights::RPrinted => "R-printed",
            Weights::R0 => "R0",
            Weights::R0Plus => "R0+",
            Weights::R0Minus => "R0-",
            Weights::Ones => "ones",
        }
    }

    pub fn values<C: Coeff>(self, s: &Spectral<C>, keys: &[VecKey]) -> Vec<C> {
        let p = &s.qg.params;
        keys.iter()
            .map(|k| {
                let m = k.m2 as i64;
                let nn = k.n2 as i64;
                match self {
                    Weights::R => p.mu_pow(m),
                    Weights::RPrinted => p.mu_pow(-m),
                    Weights::R0 => p.mu_pow(m + nn),
                    Weights::R0Plus if nn > 0 => p.mu_pow(m + 1),
                    Weights::R0Minus if nn < 0 => p.mu_pow(m - 1),
                    Weights::R0Plus | Weights::R0Minus => C::zero(),
                    Weights::Ones => C::one(),
                }
            })
            .collect()
    }
}
