//! Nondegeneracy report for the radical tower r, sigma, lamp, tau.

use std::collections::BTreeSet;

use crate::error::ScalarError;
use crate::params::Params;
use crate::scalar::{RadKey, Scalar};

#[derive(Clone, Debug)]
pub struct AtomStatus {
    pub name: &'static str,
    pub value: String,
    /// The atom lies in the field generated by the preceding atoms.
    pub collapsed: bool,
}

fn key_of(x: &Scalar) -> Option<RadKey> {
    match x.terms() {
        [(k, _)] => Some(*k),
        _ => None,
    }
}

fn key_mul(a: RadKey, b: RadKey) -> RadKey {
    let g = num_integer::gcd(a.n, b.n);
    RadKey { r: a.r ^ b.r, n: (a.n / g) * (b.n / g) }
}

/// For each atom in tower order, whether it adds a new quadratic extension.
/// Every atom is a single basis key times a base-field element, so the field
/// generated by a set of atoms is spanned by the group their keys generate.
pub fn tower_report(p: &Params<Scalar>) -> Result<Vec<AtomStatus>, ScalarError> {
    let atoms: [(&'static str, Scalar); 4] = [("r", p.r()?), ("sigma", p.sigma()?), ("lamp", p.lamp()?), ("tau", p.tau()?)];
    let mut group: BTreeSet<RadKey> = BTreeSet::from([RadKey::ONE]);
    let mut out = Vec::new();
    for (name, v) in atoms {
        let k = key_of(&v).expect("atom is a single radical");
        let collapsed = group.contains(&k);
        if !collapsed {
            let old: Vec<RadKey> = group.iter().copied().collect();
            for g in old {
                group.insert(key_mul(g, k));
            }
        }
        out.push(AtomStatus { name, value: v.render(), collapsed });
    }
    Ok(out)
}
