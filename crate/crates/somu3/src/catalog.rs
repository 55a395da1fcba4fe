//! Identity catalog over the extracted coefficients, the antipode table and
//! the map onto the SO_μ(3) generators. Entries are expression strings with
//! T1..T4, S1..S4 and N, M, C, G, L bound.

use std::time::Instant;

use qiso_expr::Env;
use qiso_hopf::{identity_check, QuantumGroup};
use qiso_report::Check;
use qiso_scalars::Coeff;

use crate::error::So3Error;
use crate::extract::Coefficients;
use crate::generators::So3Generators;

/// Stable ids and formulas of the T/S identities.
pub const LEMMAS: &[(&str, &str)] = &[
    ("lem3.3a", "T1 = (1-T2)/(1+mu^2)"),
    ("lem3.3b", "S1 = -S2/(1+mu^2)"),
    ("lem3.4c", "T4 = T3*"),
    ("eq5", "S2* S2 + c (1+mu^2)^2 S3* S3 + c (1+mu^2)^2 S4* S4 = (1-T2) (mu^2+T2) - c (1+mu^2)^2 T3 T3* - c (1+mu^2)^2 T3* T3 + c (1+mu^2)^2"),
    ("eq6", "-2 S2* S2 + (1+mu^2) S3* S3 + mu^2 (1+mu^2) S4* S4 = (mu^2+2 T2-1) T2 - mu^2 (1+mu^2) T3 T3* - (1+mu^2) T3* T3"),
    ("eq7", "S2* S2 - S3* S3 - mu^4 S4* S4 = -T2^2 + mu^4 T3 T3* + T3* T3"),
    ("eq8", "S2* S4 + S3* S2 = -(mu^2+T2) T3* + T3* (1-T2)"),
    ("eq9", "S2* S3 + mu^2 S4* S2 = -T2 T3 - mu^2 T3 T2"),
    ("eq10", "S4* S3 = -T3^2"),
    ("eq11", "-S2 (1-T2) + c (1+mu^2)^2 S3 T3* + c (1+mu^2)^2 S4 T3 = -mu^2 (1-T2) S2 + c mu^2 (1+mu^2)^2 T3 S4 + c mu^2 (1+mu^2)^2 T3* S3"),
    ("eq12", "S2 - 2 S2 T2 + (1+mu^2) (mu^2 S3 T3* + S4 T3) = mu^2 S2 - 2 mu^2 T2 S2 + mu^4 (1+mu^2) T3 S4 + mu^2 (1+mu^2) T3* S3"),
    ("eq13", "-S2 T3 + S3 (1-T2) = -mu^2 T3 S2 + mu^2 (1-T2) S3"),
    ("eq14", "-S2 T3* + S4 (1-T2) = mu^2 (1-T2) S4 - mu^2 T3* S2"),
    ("eq15", "S2 T3 + mu^2 S3 T2 = mu^2 (T2 S3 + mu^2 T3 S2)"),
    ("eq16", "S3 T3 = mu^2 T3 S3"),
    ("eq17", "S4 T3* = mu^2 T3* S4"),
    ("eq18", "-S2 S4* - S3 S2* = mu^2 (1+mu^2) T3 - mu^4 (1-T2) T3 - mu^4 T3 (1-T2)"),
    ("eq19", "S2 S4* + mu^2 S3 S2* = -mu^4 T2 T3 - mu^6 T3 T2"),
    ("eq20", "S3 S4* = -mu^4 T3^2"),
    ("eq21", "-2 mu^4 (1+mu^2)^3 T3* T3 + mu^2 (1+mu^2)^2 S3* S3 + mu^4 (1+mu^2)^2 S4 S4* = mu^2 (1+mu^2) T2 (mu^2+2 T2-1) - mu^2 S2 S2* - S2* S2"),
    ("eq22", "mu^4 (1+mu^2)^4 T3* T3 - mu^2 (1+mu^2)^2 S3* S3 - mu^6 (1+mu^2)^2 S4 S4* = -mu^2 (1+mu^2)^2 T2^2 + mu^4 S2 S2* + S2* S2"),
    ("eq23", "mu^2 (1+mu^2)^2 S4 T3 + mu^2 (1+mu^2)^2 T3* S3 = -S2 (mu^2+T2) + (1-T2) S2"),
    ("eq24", "S4 S3 = -S2^2/(mu^2 (1+mu^2)^2)"),
    ("eq25", "-mu^2 (1-T2) T3* + c S2 S3* + c S2* S4 = -mu^4 T3* (1-T2) + c mu^2 S4 S2* + c mu^2 S3* S2"),
    ("eq26", "S3 S2 = mu^2 S2 S3"),
    ("eq27", "S2 S4 = mu^2 S4 S2"),
    ("eq28", "-S2* T3* + (1-T2) S3* = -mu^2 T3* S2* + mu^2 S3* (1-T2)"),
    ("eq29", "-S2 T3* + (1-T2) S4 = mu^2 S4 (1-T2) - mu^2 T3* S2"),
    ("eq30", "S3 S4 = -mu^2 S2^2/(1+mu^2)^2"),
    ("eq31", "-mu^2 (1+mu^2)^2 S4* T3* - mu^2 (1+mu^2)^2 T3 S3* = mu^2 (1+mu^2) S2* - mu^4 S2* (1-T2) - mu^4 (1-T2) S2*"),
    ("eq32", "(1+mu^2)^2 S4* T3* + mu^2 (1+mu^2)^2 T3 S3* = -mu^2 S2* T2 - mu^4 T2 S2*"),
    ("rem3.3", "mu^4 S4 S3 = S3 S4"),
    ("lem3.12", "S2* S2 = (1-T2) (mu^2+T2)"),
    ("eq33", "(1+2 c (1+mu^2)) S2* S2 + c (1+mu^2)^2 (1-mu^2) S4* S4 = (1-T2) (mu^2+T2) - c (1+mu^2) (mu^2+2 T2-1) T2 + c (1+mu^2)^2 (mu^2-1) T3 T3* + c (1+mu^2)^2"),
    ("eq34", "(1+c (1+mu^2)^2) S2* S2 + c (1-mu^4) (1+mu^2)^2 S4* S4 = (1-T2) (mu^2+T2) - c (1+mu^2)^2 T2^2 + c (1+mu^2)^2 (mu^4-1) T3 T3* + c (1+mu^2)^2"),
    ("eq35", "mu^2 (1+mu^2)^2 T3* T3 = (1-T2) (mu^2+T2)"),
    ("eq36", "(1+mu^2)^2 T3 T3* = (1-T2) (1+mu^2 T2)"),
    ("eq37", "S2 S2* = mu^2 (1-T2) (1+mu^2 T2)"),
    ("lem3.13z", "mu^2 (1+mu^2) T3* T3 + T2^2 + (1+mu^2) T3 T3* = 1"),
    ("lem3.14a", "S4* S4 = mu^2 (1-T2)^2/(1+mu^2)^2"),
    ("lem3.14b", "S4 S4* = mu^2 (1-T2)^2/(1+mu^2)^2"),
    ("lem3.15", "mu^2 (1+mu^2)^2 S3* S3 = (mu^2+T2) (mu^2 (1+mu^2) - (1-T2))"),
    ("eq38", "S3* S3 + T3* T3 + T3 T3* + S4* S4 = 1"),
    ("lem3.16", "(1+mu^2)^2 S3 S3* = (1+mu^2 T2) (1+mu^2-mu^4 (1-T2))"),
    ("lem3.16z", "S3 S3* + mu^2 (1+mu^2) T3 T3* + mu^2 S4* S4 = 1"),
    ("lem3.17", "-S2* S3 = (mu^2+T2) T3"),
    ("lem3.18", "S2 (1-T2) = mu^2 (1-T2) S2"),
    ("eq39", "mu^2 (1+mu^2)^2 T3* S3 = -(mu^2+T2) S2"),
    ("eq40", "mu^2 (1+mu^2)^2 T3 S4 = mu^4 (1-T2) S2"),
    ("eq41", "(1+mu^2)^2 S4 T3 = S2 (1-T2)/mu^2"),
    ("eq42", "(1+mu^2)^2 S3 T3* = -S2 (1+mu^2 T2)"),
    ("eq43", "T3 (1-T2) = mu^2 (1-T2) T3"),
    ("eq44", "S3 S4* = mu^4 S4* S3"),
    ("lem3.20", "S4 T2 = T2 S4"),
    ("lem3.21", "T3 S2 = S2 T3"),
    ("lem3.22", "S3 (1-T2) = mu^4 (1-T2) S3"),
    ("eq45", "S3 (1-T2) = -mu^2 T3 S2"),
    ("p3.5a", "S3 S4 = mu^4 S4 S3"),
    ("p3.5b", "S3 S2 = mu^2 S2 S3"),
    ("p3.5c", "S2 S4 = mu^2 S4 S2"),
    ("p3.5d", "S3 S4 = -mu^2 S2^2/(1+mu^2)^2"),
];

/// κ applied to the left entry equals the right entry.
pub const ANTIPODE_TABLE: &[(&str, &str, &str)] = &[
    ("kappa.T2", "T2", "T2"),
    ("kappa.T3", "T3", "S2*/(mu^2 (1+mu^2))"),
    ("kappa.S2", "S2", "mu^2 (1+mu^2) T3*"),
    ("kappa.S3", "S3", "S3*"),
    ("kappa.S4", "S4", "mu^2 S4"),
    ("kappa.T3star", "T3*", "S2/(1+mu^2)"),
    ("kappa.S2star", "S2*", "(1+mu^2) T3"),
    ("kappa.S3star", "S3*", "S3"),
    ("kappa.S4star", "S4*", "mu^-2 S4*"),
];

/// The coefficients against N = γ*γ, M = αγ, C = αγ*, G = γ², L = α².
pub const HOMOMORPHISM: &[(&str, &str)] = &[
    ("hom.M", "S2 = -(1+mu^2) M"),
    ("hom.L", "S3 = L"),
    ("hom.G", "S4 = -mu G"),
    ("hom.N", "1 - T2 = (1+mu^2) N"),
    ("hom.C", "T3 = mu^-1 C"),
];

/// The sign of the right side as printed; the catalog entry above is the
/// corrected one.
pub const PRINTED_EQ24: (&str, &str) = ("eq24", "S4 S3 = -(-S2^2)/(mu^2 (1+mu^2)^2)");

pub fn env<'a, C: Coeff>(qg: &'a QuantumGroup<C>, co: &Coefficients<C>) -> Env<'a, C> {
    let gens = So3Generators::from_algebra(&qg.su2);
    let so3 = ["N", "M", "C", "G", "L"].map(|n| (n.to_string(), gens.named(n).expect("generator").clone()));
    Env::new(&qg.su2, &qg.params).with(co.bindings()).with(so3)
}

/// One report line for `lhs = rhs`.
pub fn identity_line<C: Coeff>(env: &Env<'_, C>, id: &str, formula: &str) -> Result<Check, So3Error> {
    let start = Instant::now();
    let err = |e| So3Error::Catalog { id: id.to_string(), source: e };
    let (l, r) = formula.split_once('=').expect("catalog formulas have one '='");
    let d = &env.eval_str(l).map_err(err)? - &env.eval_str(r).map_err(err)?;
    Ok(identity_check(id, formula, &d, start))
}

/// The selected catalog identities, all of them for `None`.
pub fn relation_suite<C: Coeff>(qg: &QuantumGroup<C>, co: &Coefficients<C>, ids: Option<&[String]>) -> Result<Vec<Check>, So3Error> {
    let env = env(qg, co);
    let chosen: Vec<(&str, &str)> = match ids {
        None => LEMMAS.to_vec(),
        Some(ids) => ids
            .iter()
            .map(|id| LEMMAS.iter().find(|(k, _)| k == id).copied().ok_or_else(|| So3Error::UnknownId(id.clone())))
            .collect::<Result<_, _>>()?,
    };
    chosen.into_iter().map(|(id, f)| identity_line(&env, id, f)).collect()
}

pub fn antipode_table_check<C: Coeff>(qg: &QuantumGroup<C>, co: &Coefficients<C>) -> Result<Vec<Check>, So3Error> {
    let env = env(qg, co);
    let mut out = Vec::new();
    for (id, arg, want) in ANTIPODE_TABLE {
        let start = Instant::now();
        let err = |e| So3Error::Catalog { id: id.to_string(), source: e };
        let got = qg.antipode(&env.eval_str(arg).map_err(err)?)?;
        let d = &got - &env.eval_str(want).map_err(err)?;
        out.push(identity_check(id, &format!("kappa({arg}) = {want}"), &d, start));
    }
    Ok(out)
}

pub fn homomorphism_map_check<C: Coeff>(qg: &QuantumGroup<C>, co: &Coefficients<C>) -> Result<Vec<Check>, So3Error> {
    let env = env(qg, co);
    HOMOMORPHISM.iter().map(|(id, f)| identity_line(&env, id, f)).collect()
}
