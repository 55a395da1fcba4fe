//! The generators N, M, C, G, L of SO_μ(3) inside O(SU_μ(2)).

use std::sync::Arc;
use std::time::Instant;

use qiso_hopf::{identity_check, QuantumGroup};
use qiso_ncalg::instances::{A, G, GS};
use qiso_ncalg::{Algebra, NCPoly};
use qiso_report::Check;
use qiso_scalars::Coeff;

#[derive(Clone, Debug)]
pub struct So3Generators<C: Coeff> {
    pub n: NCPoly<C>,
    pub m: NCPoly<C>,
    pub c: NCPoly<C>,
    pub g: NCPoly<C>,
    pub l: NCPoly<C>,
}

impl<C: Coeff> So3Generators<C> {
    /// N = γ*γ, M = αγ, C = αγ*, G = γ², L = α²
    pub fn new(qg: &Arc<QuantumGroup<C>>) -> Self {
        Self::from_algebra(&qg.su2)
    }

    pub fn from_algebra(su2: &Arc<Algebra<C>>) -> Self {
        let w = |x: &[u8]| NCPoly::word(su2, x);
        So3Generators { n: w(&[GS, G]), m: w(&[A, G]), c: w(&[A, GS]), g: w(&[G, G]), l: w(&[A, A]) }
    }

    pub fn named(&self, name: &str) -> Option<&NCPoly<C>> {
        Some(match name {
            "N" => &self.n,
            "M" => &self.m,
            "C" => &self.c,
            "G" => &self.g,
            "L" => &self.l,
            _ => return None,
        })
    }
}

/// The defining relations of SO_μ(3) under the substitution above. The
/// chained G*G = GG* = N² gives two lines.
pub fn verify_somu3_presentation<C: Coeff>(qg: &Arc<QuantumGroup<C>>) -> Vec<Check> {
    let p = &qg.params;
    let s = So3Generators::new(qg);
    let (n, m, c, g, l) = (&s.n, &s.m, &s.c, &s.g, &s.l);
    let one = NCPoly::one(&qg.su2);
    let mu = |k: i64| p.mu_pow(k);
    let n2 = n * n;
    let (ls, gs, ms, cs) = (l.star(), g.star(), m.star(), c.star());
    let one_minus = |k: i64| &one - &n.scale(&mu(k));
    let nn = n - &n2;
    let mm = &n.scale(&mu(2)) - &n2.scale(&mu(4));
    let rels: Vec<(&str, &str, NCPoly<C>, NCPoly<C>)> = vec![
        ("so3.lsl", "L* L = (1 - N)(1 - mu^-2 N)", &ls * l, &one_minus(0) * &one_minus(-2)),
        ("so3.lls", "L L* = (1 - mu^2 N)(1 - mu^4 N)", l * &ls, &one_minus(2) * &one_minus(4)),
        ("so3.gsg", "G* G = N^2", &gs * g, n2.clone()),
        ("so3.ggs", "G G* = N^2", g * &gs, n2.clone()),
        ("so3.msm", "M* M = N - N^2", &ms * m, nn.clone()),
        ("so3.mms", "M M* = mu^2 N - mu^4 N^2", m * &ms, mm.clone()),
        ("so3.csc", "C* C = N - N^2", &cs * c, nn),
        ("so3.ccs", "C C* = mu^2 N - mu^4 N^2", c * &cs, mm),
        ("so3.ln", "L N = mu^4 N L", l * n, (n * l).scale(&mu(4))),
        ("so3.gn", "G N = N G", g * n, n * g),
        ("so3.mn", "M N = mu^2 N M", m * n, (n * m).scale(&mu(2))),
        ("so3.cn", "C N = mu^2 N C", c * n, (n * c).scale(&mu(2))),
        ("so3.lg", "L G = mu^4 G L", l * g, (g * l).scale(&mu(4))),
        ("so3.lm", "L M = mu^2 M L", l * m, (m * l).scale(&mu(2))),
        ("so3.mg", "M G = mu^2 G M", m * g, (g * m).scale(&mu(2))),
        ("so3.cm", "C M = M C", c * m, m * c),
        ("so3.lgs", "L G* = mu^4 G* L", l * &gs, (&gs * l).scale(&mu(4))),
        ("so3.m2", "M^2 = mu^-1 L G", m * m, (l * g).scale(&mu(-1))),
        ("so3.msl", "M* L = mu^-1 (1 - N) C", &ms * l, (&one_minus(0) * c).scale(&mu(-1))),
        ("so3.nstar", "N* = N", n.star(), n.clone()),
    ];
    rels.into_iter()
        .map(|(id, src, lhs, rhs)| {
            let start = Instant::now();
            identity_check(id, src, &(&lhs - &rhs), start)
        })
        .collect()
}
