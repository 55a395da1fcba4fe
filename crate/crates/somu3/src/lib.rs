//! SO_μ(3) as the even part of O(SU_μ(2)) and the coaction on the sphere.

pub mod catalog;
pub mod error;
pub mod extract;
pub mod generators;
pub mod w32;
pub mod zmatrix;

use std::sync::Arc;
use std::time::Instant;

use qiso_hopf::{Qg, QgBase};
use qiso_podles::{Embedding, ExactSphere, SphereError};
use qiso_report::Check;
use qiso_scalars::{BigRational, ParamConfig, QMode, RatFunc, Scalar};

pub use catalog::{antipode_table_check, homomorphism_map_check, relation_suite, ANTIPODE_TABLE, HOMOMORPHISM, LEMMAS, PRINTED_EQ24};
pub use error::So3Error;
pub use extract::{explicit_values, Coefficients};
pub use generators::{verify_somu3_presentation, So3Generators};
pub use w32::{w32_decomposition, w32_decomposition_check, W32Report};
pub use zmatrix::{z_checks, z_matrix, z_prime, z_unitarity_radical_free, Mat3};

pub type ExactCoefficients = Coefficients<Scalar>;
pub type BaseCoefficients = Coefficients<RatFunc>;

/// Everything the SO_μ(3) checks need for one parameter set. Identity
/// checks run over Q(q) without radicals; Z and the sphere need them.
pub struct So3Bench {
    pub qg: Arc<Qg>,
    pub sphere: ExactSphere,
    pub co: ExactCoefficients,
    pub qgb: Arc<QgBase>,
    pub base: BaseCoefficients,
}

impl So3Bench {
    pub fn new(cfg: &ParamConfig) -> Result<Self, So3Error> {
        let qg = Qg::new(cfg)?;
        let sphere = ExactSphere::new(&qg, Embedding::Corrected)?;
        let co = Coefficients::extract(&sphere)?;
        let qgb = QgBase::new(cfg)?;
        let base = co.to_base(&qgb)?;
        Ok(So3Bench { qg, sphere, co, qgb, base })
    }

    pub fn presentation(&self) -> Vec<Check> {
        verify_somu3_presentation(&self.qgb)
    }

    pub fn extraction(&self) -> Result<Vec<Check>, So3Error> {
        let mut out = extract::extraction_checks(&self.sphere, &self.co)?;
        out.extend(extract::explicit_value_checks(&self.qgb, &self.base)?);
        Ok(out)
    }

    pub fn z(&self) -> Result<Vec<Check>, So3Error> {
        let mut out = z_checks(&self.qg, &self.co)?;
        out.extend(z_unitarity_radical_free(&self.qgb, &self.base)?);
        Ok(out)
    }

    pub fn antipode(&self) -> Result<Vec<Check>, So3Error> {
        antipode_table_check(&self.qgb, &self.base)
    }

    pub fn lemmas(&self, ids: Option<&[String]>) -> Result<Vec<Check>, So3Error> {
        relation_suite(&self.qgb, &self.base, ids)
    }

    pub fn homomorphism(&self) -> Result<Vec<Check>, So3Error> {
        homomorphism_map_check(&self.qgb, &self.base)
    }

    pub fn w32(&self) -> Result<Vec<Check>, So3Error> {
        w32_decomposition_check(&self.sphere)
    }

    /// The S₄S₃ identity with its sign as printed; expected to fail.
    pub fn printed(&self) -> Result<Vec<Check>, So3Error> {
        let env = catalog::env(&self.qgb, &self.base);
        let (id, f) = PRINTED_EQ24;
        Ok(vec![catalog::identity_line(&env, &format!("printed.{id}"), f)?])
    }
}

/// Extracted coefficients coincide term by term for every t in `ts`.
pub fn t_independence(q: &QMode, ts: &[BigRational]) -> Result<Check, So3Error> {
    let start = Instant::now();
    let mut first: Option<ExactCoefficients> = None;
    let mut ok = true;
    for t in ts {
        let cfg = ParamConfig::new(q.clone(), t.clone()).map_err(SphereError::from)?;
        let qg = Qg::new(&cfg)?;
        let co = Coefficients::extract(&ExactSphere::new(&qg, Embedding::Corrected)?)?;
        match &first {
            None => first = Some(co),
            Some(f) => ok &= f.same_terms(&co),
        }
    }
    let ts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
    Ok(Check::new("ts.t_independent", "T1..T4, S1..S4 do not depend on t", ok)
        .with_note(format!("t in {{{}}}", ts.join(", ")))
        .timed(start))
}
