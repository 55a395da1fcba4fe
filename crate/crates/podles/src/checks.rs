//! Report lines for the sphere.

use std::time::Instant;

use qiso_hopf::{identity_check, scalar_check};
use qiso_ncalg::instances::{A, G, K};
use qiso_ncalg::{rank, poly_vec, NCPoly, TensorPoly};
use qiso_report::Check;
use qiso_scalars::Coeff;

use crate::embedding::{Embedding, Sphere};
use crate::error::SphereError;
use crate::haar_a::{haar_poly_in_a, haar_poly_in_a_closed};

impl<C: Coeff> Sphere<C> {
    /// The abstract sphere relations evaluated on the embedded generators.
    /// The constant of the last two x-relations is [2]²t²c for the corrected
    /// embedding and [2]²(1 − t) for the printed one.
    pub fn verify_sphere_presentation(&self) -> Vec<Check> {
        let p = &self.qg.params;
        let t = self.c(p.t.clone());
        let x0t = &self.x0 - &t;
        let two = p.bracket2();
        let k3 = match self.embedding {
            Embedding::Corrected => two.clone() * two.clone() * p.t.clone() * p.t.clone() * p.c.clone(),
            Embedding::Printed => two.clone() * two.clone() * (C::one() - p.t.clone()),
        };
        let k3 = self.c(k3);
        let (xm1, x1) = (&self.xm1, &self.x1);
        let mut out = Vec::new();
        let mut id = |id: &str, src: &str, d: NCPoly<C>| out.push(identity_check(id, src, &d, Instant::now()));
        id("sphere.x1", "x-1 (x0 - t) = mu^2 (x0 - t) x-1", &(xm1 * &x0t) - &(&x0t * xm1).scale(&p.mu_pow(2)));
        id("sphere.x2", "x1 (x0 - t) = mu^-2 (x0 - t) x1", &(x1 * &x0t) - &(&x0t * x1).scale(&p.mu_pow(-2)));
        let lhs3 = &(&(xm1 * x1).scale(&-two.clone()) + &(&(&self.x0.scale(&p.mu_pow(2)) + &t) * &x0t)) - &k3;
        id("sphere.x3", "-[2] x-1 x1 + (mu^2 x0 + t)(x0 - t) = const", lhs3);
        let lhs4 = &(&(x1 * xm1).scale(&-two) + &(&(&self.x0.scale(&p.mu_pow(-2)) + &t) * &x0t)) - &k3;
        id("sphere.x4", "-[2] x1 x-1 + (mu^-2 x0 + t)(x0 - t) = const", lhs4);
        id("sphere.x0star", "x0* = x0", &self.x0.star() - &self.x0);
        id("sphere.xm1star", "x-1* = -mu^-1 x1", &self.xm1.star() + &self.x1.scale(&p.mu_pow(-1)));
        let (a, b, bs) = (&self.a, &self.b, &self.bs);
        let cc = self.c(p.c.clone());
        let a2 = a * a;
        id("sphere.astar", "A* = A", &a.star() - a);
        id("sphere.ab", "A B = mu^-2 B A", &(a * b) - &(b * a).scale(&p.mu_pow(-2)));
        id("sphere.bsb", "B* B = A - A^2 + c", &(bs * b) - &(&(a - &a2) + &cc));
        let rhs = &(&a.scale(&p.mu_pow(2)) - &a2.scale(&p.mu_pow(4))) + &cc;
        id("sphere.bbs", "B B* = mu^2 A - mu^4 A^2 + c", &(b * bs) - &rhs);
        if self.embedding == Embedding::Corrected {
            if let Ok((ca, cb)) = self.closed_forms() {
                id("sphere.aform", "A = g g* + sigma mu^-1 a g* + sigma a* g", a - &ca);
                id("sphere.bform", "B = sigma a^2 + a g - mu sigma g^2", b - &cb);
            }
        }
        out
    }

    /// A and B written directly in α, γ for the corrected embedding.
    pub fn closed_forms(&self) -> Result<(NCPoly<C>, NCPoly<C>), SphereError> {
        use qiso_ncalg::instances::{AS, GS};
        let p = &self.qg.params;
        let sg = p.sigma()?;
        let w = |x: &[u8]| NCPoly::word(&self.qg.su2, x);
        let a = &(&w(&[G, GS]) + &w(&[A, GS]).scale(&(sg.clone() * p.mu_pow(-1)))) + &w(&[AS, G]).scale(&sg);
        let b = &(&w(&[A, A]).scale(&sg) + &w(&[A, G])) - &w(&[G, G]).scale(&(p.mu.clone() * sg));
        Ok((a, b))
    }

    /// X_c is twisted primitive, kills the generators and not γ.
    pub fn xc_checks(&self) -> Result<Vec<Check>, SphereError> {
        let qg = &self.qg;
        let p = &qg.params;
        let mut out = Vec::new();
        let start = Instant::now();
        let k2 = NCPoly::word(&qg.uq, &[K, K]);
        let one = NCPoly::one(&qg.uq);
        let want = TensorPoly::pure(&one, &self.xc).add(&TensorPoly::pure(&self.xc, &k2));
        let d = qg.coproduct(&self.xc)?.sub(&want);
        out.push(
            Check::new("xc.primitive", "Delta(X_c) = 1 (x) X_c + X_c (x) K^2", d.is_zero())
                .with_residual(d.len(), (!d.is_zero()).then(|| d.render()))
                .timed(start),
        );
        for (name, x) in [("one", self.c(C::one())), ("A", self.a.clone()), ("B", self.b.clone()), ("Bstar", self.bs.clone())] {
            let start = Instant::now();
            out.push(identity_check(&format!("xc.kills.{name}"), "x <| X_c = 0 on the sphere", &self.apply_xc(&x)?, start));
        }
        let start = Instant::now();
        let gamma = NCPoly::gen(&qg.su2, G);
        let coef = p.inv(&p.sigma()?)? * p.q.clone() * p.inv(&(p.mu_pow(-1) - p.mu.clone()))? * (C::one() - p.mu.clone());
        let want = &gamma.scale(&coef) + &NCPoly::gen(&qg.su2, A).scale(&p.q_pow(-1));
        out.push(identity_check("xc.gamma", "g <| X_c = c^-1/2 mu^1/2 (mu^-1 - mu)^-1 (1 - mu) g + mu^-1/2 a", &(&self.apply_xc(&gamma)? - &want), start));
        Ok(out)
    }

    /// Every A^kB^l, A^kB*^l with k ≤ k_max, l ≤ l_max is killed by X_c, and
    /// the family is linearly independent.
    pub fn basis_checks(&self, k_max: u32, l_max: u32) -> Result<Vec<Check>, SphereError> {
        let basis = self.sphere_basis(k_max, l_max);
        let mut out = Vec::with_capacity(basis.len() + 1);
        for (label, x) in &basis {
            let start = Instant::now();
            let id = format!("xc.basis.{}", label.replace(' ', ""));
            out.push(identity_check(&id, "A^k B^l <| X_c = 0", &self.apply_xc(x)?, start));
        }
        let start = Instant::now();
        let vecs: Vec<_> = basis.iter().map(|(_, x)| poly_vec(x)).collect();
        let rk = rank(&vecs)?;
        out.push(
            Check::new(format!("basis.independent.k{k_max}l{l_max}"), "A^k, A^k B^l, A^k B*^l independent", rk == basis.len())
                .with_residual(basis.len() - rk, None)
                .with_note(format!("{} elements, rank {rk}", basis.len()))
                .timed(start),
        );
        Ok(out)
    }

    /// h(A) = 1/(1+μ²), h(B) = h(B*) = 0.
    pub fn haar_value_checks(&self) -> Result<Vec<Check>, SphereError> {
        let p = &self.qg.params;
        let items = [
            ("haar.A", "h(A) = 1/(1+mu^2)", &self.a, p.inv(&p.one_plus_mu2())?),
            ("haar.B", "h(B) = 0", &self.b, C::zero()),
            ("haar.Bstar", "h(B*) = 0", &self.bs, C::zero()),
        ];
        let mut out = Vec::new();
        for (id, src, x, want) in items {
            let start = Instant::now();
            out.push(scalar_check(id, src, &self.qg.haar(x)?, &want, start));
        }
        Ok(out)
    }

    /// h(A^k) three ways: the Haar state on the embedded power, the
    /// radical-free recursion and the λ± closed form.
    pub fn haar_a_checks(&self, k_max: usize) -> Result<Vec<Check>, SphereError> {
        let mut out = Vec::new();
        let mut ak = self.c(C::one());
        for k in 0..=k_max {
            let start = Instant::now();
            let mut f = vec![C::zero(); k + 1];
            f[k] = C::one();
            let direct = self.qg.haar(&ak)?;
            let rec = haar_poly_in_a(&self.qg, &f)?;
            out.push(scalar_check(&format!("haar.a{k}"), "h(A^k) = (g+ l+^k + g- l-^k)/(1 - mu^(2k+2))", &direct, &rec, start));
            if let Ok(closed) = haar_poly_in_a_closed(&self.qg, &f) {
                let start = Instant::now();
                out.push(scalar_check(&format!("haar.a{k}.closed"), "g+ = (1 - mu^2) l+ / (l+ - l-)", &closed, &rec, start));
            }
            ak = &ak * &self.a;
        }
        Ok(out)
    }

    /// The common value t²(μ² + c(1+μ²)²)/(1 + μ² + μ⁴) of h(x_i* x_i).
    pub fn norm_value(&self) -> Result<C, SphereError> {
        let p = &self.qg.params;
        let opm = p.one_plus_mu2();
        let num = p.t.clone() * p.t.clone() * (p.mu_pow(2) + p.c.clone() * opm.clone() * opm);
        Ok(num * p.inv(&(C::one() + p.mu_pow(2) + p.mu_pow(4)))?)
    }

    /// Norms of x₋₁, x₀, x₁ through the embedding and through their
    /// reductions to polynomials in A, plus mutual orthogonality.
    pub fn lemma_norm_values(&self) -> Result<Vec<Check>, SphereError> {
        let p = &self.qg.params;
        let value = self.norm_value()?;
        let t2 = p.t.clone() * p.t.clone();
        let opm = p.one_plus_mu2();
        let (c, mu2, mu4) = (p.c.clone(), p.mu_pow(2), p.mu_pow(4));
        // coefficient vectors in 1, A, A²
        let reductions = [
            ("xm1", "x-1* x-1 = t^2 mu^-2 (1+mu^2)(A - A^2 + c)", &self.xm1, {
                let k = t2.clone() * p.mu_pow(-2) * opm.clone();
                vec![k.clone() * c.clone(), k.clone(), -k]
            }),
            ("x0", "x0* x0 = t^2 (1 - (1+mu^2) A)^2", &self.x0, {
                let k = t2.clone();
                vec![k.clone(), -(k.clone() * opm.clone() * C::from_i64(2)), k * opm.clone() * opm.clone()]
            }),
            ("x1", "x1* x1 = t^2 (1+mu^2)(mu^2 A - mu^4 A^2 + c)", &self.x1, {
                let k = t2.clone() * opm.clone();
                vec![k.clone() * c.clone(), k.clone() * mu2, -(k * mu4)]
            }),
        ];
        let mut out = Vec::new();
        let powers = [self.c(C::one()), self.a.clone(), &self.a * &self.a];
        for (name, src, x, f) in reductions {
            let start = Instant::now();
            let xx = &x.star() * x;
            out.push(scalar_check(&format!("norm.{name}.embedded"), "h(x* x) = t^2 (mu^2 + c (1+mu^2)^2)/(1 + mu^2 + mu^4)", &self.qg.haar(&xx)?, &value, start));
            let start = Instant::now();
            let mut red = self.c(C::zero());
            for (fk, ak) in f.iter().zip(&powers) {
                red = &red + &ak.scale(fk);
            }
            out.push(identity_check(&format!("norm.{name}.reduction"), src, &(&xx - &red), start));
            let start = Instant::now();
            out.push(scalar_check(&format!("norm.{name}.in_a"), src, &haar_poly_in_a(&self.qg, &f)?, &value, start));
        }
        for (name, x, y) in [("x0x1", &self.x0, &self.x1), ("xm1x0", &self.xm1, &self.x0), ("xm1x1", &self.xm1, &self.x1)] {
            let start = Instant::now();
            out.push(scalar_check(&format!("norm.orth.{name}"), "x-1, x0, x1 orthogonal under h(x* y)", &self.qg.inner_product(x, y)?, &C::zero(), start));
        }
        Ok(out)
    }
}
