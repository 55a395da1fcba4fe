//! Verification items for the presentations, the Hopf structure, the Haar
//! state and the action tables.

use std::sync::Arc;
use std::time::Instant;

use qiso_ncalg::instances::{A, AS, E, F, G, GS, K, KINV};
use qiso_ncalg::{all_words, confluence_check, pbw_count, star_closed, Algebra, Gen, Mono, NCPoly};
use qiso_report::Check;
use qiso_scalars::Coeff;

use crate::pairing::Side;
use crate::structure::QuantumGroup;

/// Pass iff `diff` normalizes to zero; the residual is kept for reports.
pub fn identity_check<C: Coeff>(id: &str, source: &str, diff: &NCPoly<C>, start: Instant) -> Check {
    let ok = diff.is_zero();
    Check::new(id, source, ok)
        .with_residual(diff.len(), (!ok).then(|| diff.render()))
        .timed(start)
}

pub fn scalar_check<C: Coeff>(id: &str, source: &str, got: &C, want: &C, start: Instant) -> Check {
    let d = got.clone() - want.clone();
    let ok = d.is_zero_coeff();
    Check::new(id, source, ok)
        .with_residual(usize::from(!ok), (!ok).then(|| format!("got {}, expected {}", got.render(), want.render())))
        .timed(start)
}

/// Normal monomials of degree ≤ d.
pub fn normal_monomials<C: Coeff>(alg: &Arc<Algebra<C>>, d: usize) -> Vec<Mono> {
    all_words(alg.ngens(), d).into_iter().filter(|w| alg.is_normal(w)).map(|w| Mono(w)).collect()
}

impl<C: Coeff> QuantumGroup<C> {
    fn ws(&self, w: &[Gen]) -> NCPoly<C> {
        NCPoly::word(&self.su2, w)
    }

    fn wu(&self, w: &[Gen]) -> NCPoly<C> {
        NCPoly::word(&self.uq, w)
    }

    /// The defining relations of O(SU_μ(2)).
    pub fn su2_relation_checks(&self) -> Vec<Check> {
        let mu = self.params.mu.clone();
        let one = NCPoly::one(&self.su2);
        let items: Vec<(&str, &str, NCPoly<C>)> = vec![
            ("su2.unitary1", "a* a + g* g = 1", &(&self.ws(&[AS, A]) + &self.ws(&[GS, G])) - &one),
            ("su2.unitary2", "a a* + mu^2 g g* = 1", &(&self.ws(&[A, AS]) + &self.ws(&[G, GS]).scale(&self.params.mu_pow(2))) - &one),
            ("su2.normal", "g g* = g* g", &self.ws(&[G, GS]) - &self.ws(&[GS, G])),
            ("su2.ga", "mu g a = a g", &self.ws(&[G, A]).scale(&mu) - &self.ws(&[A, G])),
            ("su2.gsa", "mu g* a = a g*", &self.ws(&[GS, A]).scale(&mu) - &self.ws(&[A, GS])),
        ];
        items.into_iter().map(|(id, src, d)| identity_check(id, src, &d, Instant::now())).collect()
    }

    /// The relations and involution facts of U_μ(su(2)).
    pub fn uq_relation_checks(&self) -> Vec<Check> {
        let p = &self.params;
        let one = NCPoly::one(&self.uq);
        let d = (p.mu.clone() - p.mu_pow(-1)).try_inv().expect("mu != 1");
        let g = |x| self.gen_uq(x);
        let items: Vec<(&str, &str, NCPoly<C>)> = vec![
            ("uq.kkinv", "K Kinv = 1", &self.wu(&[K, KINV]) - &one),
            ("uq.kinvk", "Kinv K = 1", &self.wu(&[KINV, K]) - &one),
            ("uq.ke", "K E = mu E K", &self.wu(&[K, E]) - &self.wu(&[E, K]).scale(&p.mu)),
            ("uq.fk", "F K = mu K F", &self.wu(&[F, K]) - &self.wu(&[K, F]).scale(&p.mu)),
            (
                "uq.ef",
                "E F - F E = (mu - mu^-1)^-1 (K^2 - K^-2)",
                &(&self.wu(&[E, F]) - &self.wu(&[F, E])) - &(&self.wu(&[K, K]) - &self.wu(&[KINV, KINV])).scale(&d),
            ),
            ("uq.estar", "E* = F", &g(E).star() - &g(F)),
            ("uq.fstar", "F* = E", &g(F).star() - &g(E)),
            ("uq.kstar", "K* = K", &g(K).star() - &g(K)),
            ("uq.kinvstar", "Kinv* = Kinv", &g(KINV).star() - &g(KINV)),
        ];
        items.into_iter().map(|(id, src, d)| identity_check(id, src, &d, Instant::now())).collect()
    }

    /// Local confluence, termination order, star-closure and PBW counts.
    pub fn rewriting_checks(&self, bound: usize) -> Vec<Check> {
        let mut out = Vec::new();
        for (tag, alg) in [("su2", &self.su2), ("uq", &self.uq)] {
            let t = Instant::now();
            let r = confluence_check(alg, bound);
            let bad = r.pairs.iter().filter(|p| !p.joins).count() + r.ambiguous_words_failed;
            out.push(
                Check::new(format!("{tag}.confluence"), format!("critical pairs to degree {bound}"), r.ok())
                    .with_residual(bad, None)
                    .with_note(format!("{} critical pairs, {} ambiguous words", r.pairs.len(), r.words_checked))
                    .timed(t),
            );
            let t = Instant::now();
            out.push(Check::new(format!("{tag}.star_closed"), "rules closed under the involution", star_closed(alg)).timed(t));
            let t = Instant::now();
            let mut ok = true;
            let mut note = String::new();
            for d in 0..=bound {
                match pbw_count(alg, d) {
                    Ok(c) => {
                        ok &= c.ok();
                        note = format!("degree <= {d}: {} normal monomials", c.shape_count);
                    }
                    Err(_) => ok = false,
                }
            }
            out.push(Check::new(format!("{tag}.pbw"), "normal shape = irreducible words = span rank", ok).with_note(note).timed(t));
        }
        out
    }

    /// Δ, ε and κ respect every rewrite rule, so they are well defined on
    /// the quotient.
    pub fn structure_well_defined_checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for (side, alg) in [(0usize, &self.su2), (1usize, &self.uq)] {
            let t = Instant::now();
            let mut bad = 0;
            for r in &alg.pres.rules {
                // images of the unnormalized sides, generator by generator
                let lhs_word = Mono::from_slice(&r.lhs);
                let d_l = self.coproduct_word(side, &lhs_word);
                let e_l = self.counit_mono(side, &lhs_word);
                let k_l = self.antipode_mono(side, &lhs_word);
                let mut d_r = qiso_ncalg::TensorPoly::zero(alg, alg);
                let mut e_r = C::zero();
                let mut k_r = NCPoly::zero(alg);
                for (m, c) in &r.rhs {
                    d_r = d_r.add(&self.coproduct_word(side, m).scale(c));
                    e_r = e_r.add_ref(&c.mul_ref(&self.counit_mono(side, m)));
                    k_r = &k_r + &self.antipode_mono(side, m).scale(c);
                }
                if !d_l.sub(&d_r).is_zero() || !(e_l - e_r).is_zero_coeff() || !(&k_l - &k_r).is_zero() {
                    bad += 1;
                }
            }
            let tag = if side == 0 { "su2" } else { "uq" };
            out.push(
                Check::new(format!("{tag}.structure_maps_respect_relations"), "Delta, eps, S well defined", bad == 0)
                    .with_residual(bad, None)
                    .timed(t),
            );
        }
        out
    }

    /// Δ of an arbitrary (possibly non-normal) word, as a product of the
    /// generator images.
    fn coproduct_word(&self, side: usize, w: &Mono) -> qiso_ncalg::TensorPoly<C> {
        let alg = if side == 0 { &self.su2 } else { &self.uq };
        let mut acc = qiso_ncalg::TensorPoly::one(alg, alg);
        for &g in w.letters() {
            acc = acc.mul(&self.coproduct_mono(side, &Mono::from_slice(&[g])));
        }
        acc
    }

    /// Coassociativity, counit and antipode axioms on every normal monomial
    /// of degree ≤ d.
    pub fn hopf_axiom_checks(&self, d: usize) -> Vec<Check> {
        let mut out = Vec::new();
        for (tag, alg) in [("su2", &self.su2), ("uq", &self.uq)] {
            let monos = normal_monomials(alg, d);
            let mut fails = [0usize; 3];
            let t = Instant::now();
            for m in &monos {
                let x = NCPoly::from_normal_terms(alg, [(m.clone(), C::one())]);
                if self.coassociativity_defect(&x).map_or(true, |n| n > 0) {
                    fails[0] += 1;
                }
                match self.counit_defects(&x) {
                    Ok((l, r)) if l.is_zero() && r.is_zero() => {}
                    _ => fails[1] += 1,
                }
                match self.antipode_defects(&x) {
                    Ok((l, r)) if l.is_zero() && r.is_zero() => {}
                    _ => fails[2] += 1,
                }
            }
            let n = monos.len();
            for (i, (name, src)) in [
                ("coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta"),
                ("counit", "(eps (x) id) Delta = id = (id (x) eps) Delta"),
                ("antipode", "m (S (x) id) Delta = eps 1 = m (id (x) S) Delta"),
            ]
            .into_iter()
            .enumerate()
            {
                out.push(
                    Check::new(format!("{tag}.{name}"), src, fails[i] == 0)
                        .with_residual(fails[i], None)
                        .with_note(format!("{n} normal monomials of degree <= {d}"))
                        .timed(t),
                );
            }
        }
        out
    }

    /// Left and right invariance of h on every normal monomial of degree ≤ d,
    /// plus h(1) = 1.
    pub fn haar_checks(&self, d: usize) -> Vec<Check> {
        let t = Instant::now();
        let monos = normal_monomials(&self.su2, d);
        let (mut fl, mut fr) = (0, 0);
        for m in &monos {
            let x = NCPoly::from_normal_terms(&self.su2, [(m.clone(), C::one())]);
            let (l, r) = self.haar_defects(&x).expect("su2 element");
            fl += usize::from(!l.is_zero());
            fr += usize::from(!r.is_zero());
        }
        let note = format!("{} normal monomials of degree <= {d}", monos.len());
        let h1 = self.haar(&NCPoly::one(&self.su2)).expect("su2");
        vec![
            scalar_check("haar.unit", "h(1) = 1", &h1, &C::one(), t),
            Check::new("haar.left_invariance", "(id (x) h) Delta(x) = h(x) 1", fl == 0).with_residual(fl, None).with_note(note.clone()).timed(t),
            Check::new("haar.right_invariance", "(h (x) id) Delta(x) = h(x) 1", fr == 0).with_residual(fr, None).with_note(note).timed(t),
        ]
    }

    /// The printed generator values of ▷ and ◁ together with the K⁻¹ values
    /// they imply; each computed by the table route and by the pairing route.
    pub fn action_table_checks(&self) -> Vec<Check> {
        let mu = self.params.mu.clone();
        let q = self.params.q.clone();
        let qi = self.params.q_pow(-1);
        let s = |g: Gen| self.gen_su2(g);
        let zero = NCPoly::zero(&self.su2);
        use Side::{Left, Right};
        // (side, U generator, argument, expected, label); the "(-mu g*)"
        // entries are stated on -mu g* as printed
        let neg_mu_gs = s(GS).scale(&-mu.clone());
        let rows: Vec<(Side, Gen, NCPoly<C>, NCPoly<C>, &str)> = vec![
            (Left, E, s(A), s(GS).scale(&-mu.clone()), "E |> a = -mu g*"),
            (Left, E, s(G), s(AS), "E |> g = a*"),
            (Left, E, s(GS), zero.clone(), "E |> g* = 0"),
            (Left, E, s(AS), zero.clone(), "E |> a* = 0"),
            (Left, F, neg_mu_gs.clone(), s(A), "F |> (-mu g*) = a"),
            (Left, F, s(AS), s(G), "F |> a* = g"),
            (Left, F, s(A), zero.clone(), "F |> a = 0"),
            (Left, F, s(G), zero.clone(), "F |> g = 0"),
            (Left, K, s(A), s(A).scale(&qi), "K |> a = mu^-1/2 a"),
            (Left, K, s(GS), s(GS).scale(&q), "K |> g* = mu^1/2 g*"),
            (Left, K, s(G), s(G).scale(&qi), "K |> g = mu^-1/2 g"),
            (Left, K, s(AS), s(AS).scale(&q), "K |> a* = mu^1/2 a*"),
            (Right, E, s(G), s(A), "g <| E = a"),
            (Right, E, s(AS), s(GS).scale(&-mu.clone()), "a* <| E = -mu g*"),
            (Right, E, s(A), zero.clone(), "a <| E = 0"),
            (Right, E, s(GS), zero.clone(), "g* <| E = 0"),
            (Right, F, s(A), s(G), "a <| F = g"),
            (Right, F, neg_mu_gs, s(AS), "(-mu g*) <| F = a*"),
            (Right, F, s(G), zero.clone(), "g <| F = 0"),
            (Right, F, s(AS), zero.clone(), "a* <| F = 0"),
            (Right, K, s(A), s(A).scale(&qi), "a <| K = mu^-1/2 a"),
            (Right, K, s(GS), s(GS).scale(&qi), "g* <| K = mu^-1/2 g*"),
            (Right, K, s(G), s(G).scale(&q), "g <| K = mu^1/2 g"),
            (Right, K, s(AS), s(AS).scale(&q), "a* <| K = mu^1/2 a*"),
            (Left, KINV, s(A), s(A).scale(&q), "Kinv |> a = mu^1/2 a"),
            (Left, KINV, s(GS), s(GS).scale(&qi), "Kinv |> g* = mu^-1/2 g*"),
            (Left, KINV, s(G), s(G).scale(&q), "Kinv |> g = mu^1/2 g"),
            (Left, KINV, s(AS), s(AS).scale(&qi), "Kinv |> a* = mu^-1/2 a*"),
            (Right, KINV, s(A), s(A).scale(&q), "a <| Kinv = mu^1/2 a"),
            (Right, KINV, s(GS), s(GS).scale(&q), "g* <| Kinv = mu^1/2 g*"),
            (Right, KINV, s(G), s(G).scale(&qi), "g <| Kinv = mu^-1/2 g"),
            (Right, KINV, s(AS), s(AS).scale(&qi), "a* <| Kinv = mu^-1/2 a*"),
        ];
        rows.into_iter()
            .enumerate()
            .map(|(i, (side, g, x, want, label))| {
                let t = Instant::now();
                let f = self.gen_uq(g);
                let by_table = self.act_word(side, &[g], &x);
                let by_pairing = self.act_via_pairing(side, &f, &x).expect("generators");
                let d1 = &by_table - &want;
                let d2 = &by_pairing - &want;
                let ok = d1.is_zero() && d2.is_zero();
                let id = format!("action.{}{:02}", if side == Left { "left" } else { "right" }, i + 1);
                Check::new(id, label, ok)
                    .with_residual(d1.len() + d2.len(), (!ok).then(|| format!("table: {}, pairing: {}", by_table, by_pairing)))
                    .timed(t)
            })
            .collect()
    }

    /// The printed pairing values on generators, evaluated through the
    /// general pairing routine.
    pub fn pairing_checks(&self) -> Vec<Check> {
        let q = self.params.q.clone();
        let qi = self.params.q_pow(-1);
        let rows: Vec<(Gen, NCPoly<C>, C, &str)> = vec![
            (K, self.gen_su2(AS), q.clone(), "<K, a*> = mu^1/2"),
            (KINV, self.gen_su2(A), q.clone(), "<Kinv, a> = mu^1/2"),
            (KINV, self.gen_su2(AS), qi.clone(), "<Kinv, a*> = mu^-1/2"),
            (K, self.gen_su2(A), qi, "<K, a> = mu^-1/2"),
            (E, self.gen_su2(G), C::one(), "<E, g> = 1"),
            (F, self.gen_su2(GS).scale(&-self.params.mu.clone()), C::one(), "<F, -mu g*> = 1"),
        ];
        rows.into_iter()
            .enumerate()
            .map(|(i, (g, x, want, label))| {
                let got = self.pair(&self.gen_uq(g), &x).expect("generators");
                scalar_check(&format!("pairing.{:02}", i + 1), label, &got, &want, Instant::now())
            })
            .collect()
    }
}
