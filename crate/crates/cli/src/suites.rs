//! Named verification suites over one parameter set.

use std::cell::OnceCell;
use std::sync::Arc;

use qiso_hopf::Qg;
use qiso_podles::{Embedding, ExactSphere};
use qiso_report::{Check, SuiteReport};
use qiso_scalars::rat;
use qiso_somu3::{t_independence, So3Bench};
use qiso_spectral::ExactSpectral;

use crate::config::Settings;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Presentations,
    Hopf,
    Actions,
    Podles,
    So3,
    Lemmas,
    Spectral,
    W32,
    Printed,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = ["presentations", "hopf", "actions", "podles", "so3", "lemmas", "spectral", "w32", "printed", "all"];

    /// Everything `all` runs, in order. The printed forms are left out.
    pub const ALL: [Suite; 8] =
        [Suite::Presentations, Suite::Hopf, Suite::Actions, Suite::Podles, Suite::So3, Suite::Lemmas, Suite::Spectral, Suite::W32];

    pub fn from_name(s: &str) -> Result<Suite, CliError> {
        Ok(match s {
            "presentations" => Suite::Presentations,
            "hopf" => Suite::Hopf,
            "actions" => Suite::Actions,
            "podles" => Suite::Podles,
            "so3" => Suite::So3,
            "lemmas" => Suite::Lemmas,
            "spectral" => Suite::Spectral,
            "w32" => Suite::W32,
            "printed" => Suite::Printed,
            "all" => Suite::All,
            _ => return Err(CliError::Usage(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }

    pub fn name(self) -> &'static str {
        Suite::NAMES[self as usize]
    }
}

/// Lazily built objects shared by the suites of one run.
pub struct Workbench {
    pub settings: Settings,
    qg: OnceCell<Arc<Qg>>,
    sphere: OnceCell<ExactSphere>,
    so3: OnceCell<So3Bench>,
    spectral: OnceCell<ExactSpectral>,
}

impl Workbench {
    pub fn new(settings: Settings) -> Result<Self, CliError> {
        settings.validate()?;
        Ok(Workbench { settings, qg: OnceCell::new(), sphere: OnceCell::new(), so3: OnceCell::new(), spectral: OnceCell::new() })
    }

    pub fn qg(&self) -> Result<&Arc<Qg>, CliError> {
        if let Some(q) = self.qg.get() {
            return Ok(q);
        }
        let q = Qg::new(&self.settings.params()?)?;
        Ok(self.qg.get_or_init(|| q))
    }

    pub fn sphere(&self) -> Result<&ExactSphere, CliError> {
        if let Some(s) = self.sphere.get() {
            return Ok(s);
        }
        let s = ExactSphere::new(self.qg()?, Embedding::Corrected)?;
        Ok(self.sphere.get_or_init(|| s))
    }

    pub fn so3(&self) -> Result<&So3Bench, CliError> {
        if let Some(b) = self.so3.get() {
            return Ok(b);
        }
        let b = So3Bench::new(&self.settings.params()?)?;
        Ok(self.so3.get_or_init(|| b))
    }

    pub fn spectral(&self) -> Result<&ExactSpectral, CliError> {
        if let Some(s) = self.spectral.get() {
            return Ok(s);
        }
        let s = ExactSpectral::new(ExactSphere::new(self.qg()?, Embedding::Corrected)?, self.settings.max_l2);
        Ok(self.spectral.get_or_init(|| s))
    }

    /// Run one suite. `only` restricts the lines kept; every requested id
    /// must exist.
    pub fn run(&self, suite: Suite, only: &[String]) -> Result<SuiteReport, CliError> {
        let mut rep = SuiteReport::new(suite.name());
        let lemma_ids = (suite == Suite::Lemmas && !only.is_empty()).then_some(only);
        match suite {
            Suite::All => {
                for s in Suite::ALL {
                    rep.extend(self.run(s, &[])?);
                }
            }
            _ => rep.checks = self.checks(suite, lemma_ids)?,
        }
        if !only.is_empty() {
            if let Some(missing) = only.iter().find(|id| rep.get(id).is_none()) {
                return Err(CliError::Usage(format!("no check {missing:?} in suite {}", suite.name())));
            }
            rep = rep.only(only);
        }
        if self.settings.deterministic {
            for c in &mut rep.checks {
                c.millis = 0;
            }
        }
        Ok(rep)
    }

    fn checks(&self, suite: Suite, lemma_ids: Option<&[String]>) -> Result<Vec<Check>, CliError> {
        let st = &self.settings;
        let mut out = Vec::new();
        match suite {
            Suite::Presentations => {
                let qg = self.qg()?;
                out.extend(qg.su2_relation_checks());
                out.extend(qg.uq_relation_checks());
                out.extend(qg.rewriting_checks(st.confluence_bound));
                out.extend(self.sphere()?.verify_sphere_presentation());
                out.extend(self.so3()?.presentation());
            }
            Suite::Hopf => {
                let qg = self.qg()?;
                out.extend(qg.structure_well_defined_checks());
                out.extend(qg.hopf_axiom_checks(st.hopf_degree));
                out.extend(qg.haar_checks(st.hopf_degree));
            }
            Suite::Actions => {
                let qg = self.qg()?;
                out.extend(qg.action_table_checks());
                out.extend(qg.pairing_checks());
            }
            Suite::Podles => {
                let s = self.sphere()?;
                out.extend(s.xc_checks()?);
                out.extend(s.basis_checks(3, 3)?);
                for d in 0..=qiso_podles::MAX_KERNEL_DEGREE {
                    out.push(s.kernel_dimension_check(d)?);
                }
                out.extend(s.haar_value_checks()?);
                out.extend(s.haar_a_checks(4)?);
                out.extend(s.lemma_norm_values()?);
            }
            Suite::So3 => {
                let b = self.so3()?;
                out.extend(b.extraction()?);
                out.extend(b.z()?);
                out.extend(b.antipode()?);
                out.extend(b.homomorphism()?);
                out.push(t_independence(&st.q, &[rat(1, 2), rat(1, 3), rat(2, 3)])?);
            }
            Suite::Lemmas => out.extend(self.so3()?.lemmas(lemma_ids)?),
            Suite::Spectral => out.extend(self.spectral()?.suite(st.top_l2, false)?),
            Suite::W32 => out.extend(self.so3()?.w32()?),
            Suite::Printed => {
                let printed = ExactSphere::new(self.qg()?, Embedding::Printed)?;
                out.extend(printed.verify_sphere_presentation().into_iter().map(|c| prefixed("printed.", c)));
                out.extend(self.so3()?.printed()?);
                let sp = self.spectral()?;
                for l2 in (1..=st.top_l2).step_by(2) {
                    out.extend(sp.printed_checks(l2)?);
                }
            }
            Suite::All => unreachable!("expanded by run"),
        }
        Ok(out)
    }
}

fn prefixed(p: &str, mut c: Check) -> Check {
    c.id = format!("{p}{}", c.id);
    c
}
