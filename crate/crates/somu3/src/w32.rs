//! W_{3/2} = span{1, A, B, B*, AB, AB*, A², B², B*²} and the h-orthogonal
//! complement W″ of W_{1/2} = span{1, A, B, B*} inside it.

use std::collections::BTreeMap;
use std::time::Instant;

use qiso_ncalg::{kernel, poly_vec, rank, NCPoly, SparseVec};
use qiso_podles::{first_leg_coefficients, Sphere};
use qiso_report::Check;
use qiso_scalars::Coeff;

use crate::error::So3Error;

pub fn w32_basis<C: Coeff>(s: &Sphere<C>) -> Vec<(&'static str, NCPoly<C>)> {
    let (a, b, bs) = (&s.a, &s.b, &s.bs);
    vec![
        ("1", s.c(C::one())),
        ("A", a.clone()),
        ("B", b.clone()),
        ("B*", bs.clone()),
        ("A B", a * b),
        ("A B*", a * bs),
        ("A^2", a * a),
        ("B^2", b * b),
        ("B*^2", bs * bs),
    ]
}

#[derive(Clone, Debug)]
pub struct W32Report {
    pub rank: usize,
    /// Every Δ(w) has first legs in W_{3/2}.
    pub expands: bool,
    pub complement_dim: usize,
    /// W″ + W_{1/2} is all of W_{3/2}.
    pub direct: bool,
    /// Nonzero W_{1/2}-components of Δ(v), v in the W″ basis.
    pub leaks: usize,
}

pub fn w32_decomposition<C: Coeff>(s: &Sphere<C>) -> Result<W32Report, So3Error> {
    let qg = &s.qg;
    let w: Vec<NCPoly<C>> = w32_basis(s).into_iter().map(|(_, x)| x).collect();
    let rk = rank(&w.iter().map(poly_vec).collect::<Vec<_>>())?;
    let mut report = W32Report { rank: rk, expands: false, complement_dim: 0, direct: false, leaks: 0 };
    if rk != w.len() {
        return Ok(report);
    }
    // gram[i][j] = h(w_i* w_j), i < 4
    let mut gram = vec![vec![C::zero(); w.len()]; 4];
    for (i, row) in gram.iter_mut().enumerate() {
        for (j, g) in row.iter_mut().enumerate() {
            *g = qg.inner_product(&w[i], &w[j])?;
        }
    }
    let columns: Vec<SparseVec<usize, C>> = (0..w.len())
        .map(|j| (0..4).filter(|&i| !gram[i][j].is_zero_coeff()).map(|i| (i, gram[i][j].clone())).collect())
        .collect();
    let comp = kernel(&columns)?;
    report.complement_dim = comp.len();
    let mut span: Vec<SparseVec<usize, C>> = (0..4).map(|i| BTreeMap::from([(i, C::one())])).collect();
    span.extend(comp.iter().map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero_coeff()).map(|(i, c)| (i, c.clone())).collect()));
    report.direct = rank(&span)? == w.len();
    // q[j][a]: Δ(w_j) = Σ_a w_a ⊗ q[j][a]
    let mut q = Vec::with_capacity(w.len());
    for x in &w {
        match first_leg_coefficients(&qg.coproduct(x)?, &w)? {
            Some(v) => q.push(v),
            None => return Ok(report),
        }
    }
    report.expands = true;
    let zero = NCPoly::zero(&qg.su2);
    for v in &comp {
        for row in &gram {
            // Σ_a G_ia Σ_j v_j Q_ja
            let mut acc = zero.clone();
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero_coeff() {
                    continue;
                }
                for (a, ga) in row.iter().enumerate() {
                    acc = &acc + &q[j][a].scale(&vj.mul_ref(ga));
                }
            }
            report.leaks += usize::from(!acc.is_zero());
        }
    }
    Ok(report)
}

pub fn w32_decomposition_check<C: Coeff>(s: &Sphere<C>) -> Result<Vec<Check>, So3Error> {
    let start = Instant::now();
    let r = w32_decomposition(s)?;
    let mk = |id: &str, src: &str, ok: bool, note: String| Check::new(id, src, ok).with_note(note).timed(start);
    Ok(vec![
        mk("w32.rank", "1, A, B, B*, A B, A B*, A^2, B^2, B*^2 independent", r.rank == 9, format!("rank {}", r.rank)),
        mk("w32.expand", "Delta(W_3/2) in W_3/2 (x) O(SU)", r.expands, String::new()),
        mk("w32.complement", "dim W'' = 5", r.complement_dim == 5, format!("dimension {}", r.complement_dim)),
        mk("w32.direct", "W'' and W_1/2 intersect trivially", r.direct, String::new()),
        mk("w32.invariant", "Delta(W'') in W'' (x) O(SU)", r.expands && r.leaks == 0, format!("{} leaking components", r.leaks)),
    ])
}
