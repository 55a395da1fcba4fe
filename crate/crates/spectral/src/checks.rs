//! Report lines for the spectral data.

use std::time::Instant;

use qiso_hopf::scalar_check;
use qiso_ncalg::instances::{A, AS, G, GS};
use qiso_ncalg::{poly_vec, rank, solve_in_span, NCPoly};
use qiso_report::Check;
use qiso_scalars::{eval_numeric, BigRational, Coeff, QMode, Scalar};

use crate::error::SpectralError;
use crate::level::{Spectral, VecKey};
use crate::ops::{Order, Weights};

impl<C: Coeff> Spectral<C> {
    pub fn gram_check(&self, l2: i32) -> Result<Check, SpectralError> {
        let start = Instant::now();
        let b = self.build_level(l2)?;
        let mut off = 0;
        for (i, row) in b.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                off += usize::from(i != j && !g.is_zero_coeff());
            }
        }
        let zero_norms = b.vectors.iter().filter(|v| v.norm2.is_zero_coeff()).count();
        Ok(Check::new(format!("spectral.gram.l{l2}"), "<v_i, v_j> = 0 for i != j, <v_i, v_i> != 0", off == 0 && zero_norms == 0)
            .with_residual(off + zero_norms, None)
            .with_note(format!("{} vectors", b.vectors.len()))
            .timed(start))
    }

    /// The four level-1/2 payloads span exactly span{α, γ, α*, γ*}.
    pub fn low_level_span_check(&self) -> Result<Vec<Check>, SpectralError> {
        let start = Instant::now();
        let b = self.build_level(1)?;
        let pay = b.payloads();
        let gens: Vec<NCPoly<C>> = [A, G, AS, GS].iter().map(|&g| NCPoly::gen(&self.qg.su2, g)).collect();
        let mut gens_in = true;
        for g in &gens {
            gens_in &= solve_in_span(g, &pay)?.is_some();
        }
        let mut pay_in = true;
        for x in &pay {
            pay_in &= solve_in_span(x, &gens)?.is_some();
        }
        let rk = rank(&pay.iter().map(poly_vec).collect::<Vec<_>>())?;
        Ok(vec![
            Check::new("spectral.span.gens", "a, g, a*, g* lie in span of the level-1/2 vectors", gens_in).timed(start),
            Check::new("spectral.span.payloads", "level-1/2 vectors lie in span{a, g, a*, g*}", pay_in).timed(start),
            Check::new("spectral.span.dim", "dim span = 4", rk == 4).with_note(format!("rank {rk}")).timed(start),
        ])
    }

    /// Zero residual and the support pattern: A keeps m, B lowers it by 1,
    /// B* raises it by 1; N is kept.
    pub fn pi_checks(&self, l2: i32) -> Result<Vec<Check>, SpectralError> {
        let s = &self.sphere;
        let items = [("1", s.c(C::one()), 0), ("A", s.a.clone(), 0), ("B", s.b.clone(), -2), ("Bstar", s.bs.clone(), 2)];
        let mut out = Vec::new();
        for (name, x, shift) in items {
            let start = Instant::now();
            let mut resid = 0;
            let mut off_support = Vec::new();
            for key in Self::level_keys(l2) {
                let e = self.pi_expand(&x, key)?;
                resid += e.residual.len();
                for (t, _) in &e.coeffs {
                    let ok = t.n2 == key.n2 && t.m2 == key.m2 + shift && (name != "1" || t.l2 == key.l2);
                    if !ok {
                        off_support.push(format!("{key} -> {t}"));
                    }
                }
            }
            out.push(
                Check::new(format!("spectral.pi.{name}.l{l2}"), "pi(x) v lies in the span of levels l-1, l, l+1", resid == 0)
                    .with_residual(resid, None)
                    .timed(start),
            );
            let src = match name {
                "B" => "pi(B) v[l,m,N] in span v[., m-1, N]",
                "Bstar" => "pi(B*) v[l,m,N] in span v[., m+1, N]",
                "A" => "pi(A) v[l,m,N] in span v[., m, N]",
                _ => "pi(1) = identity",
            };
            out.push(
                Check::new(format!("spectral.pi.{name}.support.l{l2}"), src, off_support.is_empty())
                    .with_residual(off_support.len(), (!off_support.is_empty()).then(|| off_support.join("; ")))
                    .timed(start),
            );
        }
        Ok(out)
    }

    /// Corepresentation block, unitarity in weighted form, twisted traces,
    /// the untwisted negative control and the level state.
    pub fn corep_checks(&self, l2: i32) -> Result<Vec<Check>, SpectralError> {
        let start = Instant::now();
        let block = self.build_level(l2)?;
        let corep = self.coaction_block(l2)?;
        let keys = block.keys();
        let offn = corep.n_offdiagonal();
        let mut out = vec![Check::new(format!("spectral.corep.l{l2}"), "Delta(v_i) = sum_a v_a (x) Q_ai", true)
            .with_note(format!("N-offdiagonal entries: {}, max entry degree {}", offn.len(), corep.max_degree()))
            .timed(start)];
        let start = Instant::now();
        let ones = Weights::Ones.values(self, &keys);
        let bad = self.weighted_defects(&block, &corep, &ones, Order::QsQ);
        out.push(
            Check::new(format!("spectral.unitary.cols.l{l2}"), "sum_a n_a Q*_ai Q_aj = delta_ij n_i", bad == 0)
                .with_residual(bad, None)
                .timed(start),
        );
        let start = Instant::now();
        let bad = self.row_defects(&block, &corep)?;
        out.push(
            Check::new(format!("spectral.unitary.rows.l{l2}"), "sum_j Q_ij Q*_kj / n_j = delta_ik / n_i", bad == 0)
                .with_residual(bad, None)
                .timed(start),
        );
        for w in [Weights::R, Weights::R0, Weights::R0Plus, Weights::R0Minus] {
            let start = Instant::now();
            let bad = self.weighted_defects(&block, &corep, &w.values(self, &keys), Order::QQs);
            out.push(
                Check::new(format!("spectral.twisted.{}.l{l2}", w.name()), "sum_a r_a n_a Q_ai Q*_aj = delta_ij r_i n_i", bad == 0)
                    .with_residual(bad, None)
                    .timed(start),
            );
        }
        let start = Instant::now();
        let bad = self.weighted_defects(&block, &corep, &ones, Order::QQs);
        out.push(
            Check::control(format!("spectral.control.untwisted.l{l2}"), "sum_a n_a Q_ai Q*_aj = delta_ij n_i (untwisted trace)", bad > 0)
                .with_residual(bad, None)
                .timed(start),
        );
        out.extend(self.state_checks(l2, Weights::R)?);
        Ok(out)
    }

    pub fn state_checks(&self, l2: i32, w: Weights) -> Result<Vec<Check>, SpectralError> {
        let s = &self.sphere;
        let weights = w.values(self, &Self::level_keys(l2));
        let prefix = if w == Weights::RPrinted { "spectral.printed" } else { "spectral" };
        let mut out = Vec::new();
        for (name, x) in [("1", s.c(C::one())), ("A", s.a.clone()), ("B", s.b.clone())] {
            let start = Instant::now();
            let got = self.level_state(l2, &x, &weights)?;
            let want = self.qg.haar(&x)?;
            out.push(scalar_check(&format!("{prefix}.state.{name}.l{l2}"), "tau_R(x)/tau_R(1) = h(x)", &got, &want, start));
        }
        Ok(out)
    }

    /// D swaps N within (l, m): both partners exist, are orthogonal, and R
    /// has the same eigenvalue on both, so R commutes with D.
    pub fn d_bookkeeping(&self, l2: i32) -> Result<Check, SpectralError> {
        let start = Instant::now();
        let b = self.build_level(l2)?;
        let keys = b.keys();
        let r = Weights::R.values(self, &keys);
        let mut bad = Vec::new();
        for (i, k) in keys.iter().enumerate() {
            if k.n2 < 0 {
                continue;
            }
            let partner = VecKey { n2: -k.n2, ..*k };
            match b.position(partner) {
                None => bad.push(format!("{k}: no partner")),
                Some(j) => {
                    if !b.gram[i][j].is_zero_coeff() {
                        bad.push(format!("{k}: partner not orthogonal"));
                    }
                    if r[i] != r[j] {
                        bad.push(format!("{k}: R differs on partner"));
                    }
                }
            }
        }
        Ok(Check::new(format!("spectral.dirac.l{l2}"), "D v[l,m,+-1/2] = (c1 l + c2) v[l,m,-+1/2]; [D, R] = 0", bad.is_empty())
            .with_residual(bad.len(), (!bad.is_empty()).then(|| bad.join("; ")))
            .timed(start))
    }

    /// The twisted identity and level state with μ^{−2m} as printed.
    pub fn printed_checks(&self, l2: i32) -> Result<Vec<Check>, SpectralError> {
        let start = Instant::now();
        let block = self.build_level(l2)?;
        let corep = self.coaction_block(l2)?;
        let w = Weights::RPrinted.values(self, &block.keys());
        let bad = self.weighted_defects(&block, &corep, &w, Order::QQs);
        let mut out = vec![Check::new(format!("spectral.printed.twisted.R.l{l2}"), "R v[l,m,N] = mu^(-2m) v[l,m,N]", bad == 0)
            .with_residual(bad, None)
            .timed(start)];
        out.extend(self.state_checks(l2, Weights::RPrinted)?.into_iter().filter(|c| !c.id.contains(".state.1.")));
        Ok(out)
    }

    /// Every check for one level. π-expansions need level l + 1 and are
    /// skipped when it is beyond the guard.
    pub fn level_suite(&self, l2: i32) -> Result<Vec<Check>, SpectralError> {
        let mut out = vec![self.gram_check(l2)?];
        if l2 == 1 {
            out.extend(self.low_level_span_check()?);
        }
        if self.check_level(l2 + 2).is_ok() {
            out.extend(self.pi_checks(l2)?);
        }
        out.extend(self.corep_checks(l2)?);
        out.push(self.d_bookkeeping(l2)?);
        Ok(out)
    }
}

impl Spectral<Scalar> {
    /// Levels 1/2 up to `top_l2 / 2`, with positivity and the printed forms.
    /// The π-expansions of the top level need `top_l2 + 2 <= max_l2`.
    pub fn suite(&self, top_l2: i32, printed: bool) -> Result<Vec<Check>, SpectralError> {
        let mut out = Vec::new();
        for l2 in (1..=top_l2).step_by(2) {
            out.extend(self.level_suite(l2)?);
            out.push(self.positivity_check(l2)?);
            if printed {
                out.extend(self.printed_checks(l2)?);
            }
        }
        Ok(out)
    }

    /// Squared norms evaluated at a sample q (the configured one, or 1/2)
    /// with certified interval arithmetic: all strictly positive.
    pub fn positivity_check(&self, l2: i32) -> Result<Check, SpectralError> {
        let start = Instant::now();
        let b = self.build_level(l2)?;
        let q0 = match &self.qg.params.config.q {
            QMode::Rational(q) => q.clone(),
            QMode::Symbolic => BigRational::new(1.into(), 2.into()),
        };
        let mut bad = 0;
        for v in &b.vectors {
            bad += usize::from(eval_numeric(&v.norm2, &q0, 40)?.sign() != Some(1));
        }
        Ok(Check::new(format!("spectral.positive.l{l2}"), "<v, v> > 0", bad == 0)
            .with_residual(bad, None)
            .with_note(format!("evaluated at q = {q0}"))
            .timed(start))
    }
}
