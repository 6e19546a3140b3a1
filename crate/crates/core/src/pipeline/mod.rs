//! Global zeta-functions assembled from local data along a stratification of
//! the hyperplane at infinity.

mod bifurcation;
mod curve;
mod yomdin;

use serde::{Deserialize, Serialize};

use crate::error::{checked, Error, Result};
use crate::euler::chi_projective_space;
use crate::zeta::ZetaFactorization;

pub use bifurcation::{
    atypical_at_infinity, family_stratification, family_zeta_zero, lambda_invariant, FamilyParams,
    FamilyZetaZero,
};
pub use curve::{
    curve_mu, curve_report, curve_zeta, CurveAttestations, CurveComponent, CurveProblem,
    CurveReport, CurveZeta, SingularPoint, Verdict,
};
pub use yomdin::{yomdin_zeta, YomdinPoint, YomdinProblem, YomdinResult};

/// A piece of the hyperplane at infinity on which the local zeta-function is constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub chi: i64,
    pub zeta: ZetaFactorization,
    #[serde(default)]
    pub label: String,
}

impl Stratum {
    pub fn new(label: impl Into<String>, chi: i64, zeta: ZetaFactorization) -> Self {
        Self {
            chi,
            zeta,
            label: label.into(),
        }
    }
}

/// Which local zeta-functions the strata carry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMode {
    /// Monodromy at infinity of the generic fibre.
    #[default]
    Infinite,
    /// Monodromy of the zero level near infinity.
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratificationProblem {
    /// The polynomial lives on `C^(n+1)`; the hyperplane at infinity is `CP^n`.
    pub n: i64,
    pub strata: Vec<Stratum>,
    #[serde(default)]
    pub mode: ZetaMode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombineResult {
    pub zeta: ZetaFactorization,
    /// `sum chi(stratum) * deg zeta(stratum)`; equals `deg zeta`.
    pub chi_total: i64,
    /// `sum chi(stratum)`; `n + 1` for a genuine partition of `CP^n`.
    pub chi_sum: i64,
    pub warnings: Vec<String>,
}

/// `zeta = prod zeta_S^chi(S)` and `chi = sum chi(S) deg zeta_S`.
pub fn combine(p: &StratificationProblem) -> Result<CombineResult> {
    if p.n < 1 {
        return Err(Error::domain(format!("n must be >= 1, got {}", p.n)));
    }
    let expected_sum = chi_projective_space(p.n)?;
    let mut zeta = ZetaFactorization::unit();
    let mut chi_total = 0i64;
    let mut chi_sum = 0i64;
    for stratum in &p.strata {
        zeta = zeta.mul(&stratum.zeta.pow(stratum.chi)?)?;
        let local = checked::mul(stratum.zeta.degree()?, stratum.chi, "combine")?;
        chi_total = checked::add(chi_total, local, "combine")?;
        chi_sum = checked::add(chi_sum, stratum.chi, "combine")?;
    }
    if zeta.degree()? != chi_total {
        return Err(Error::CrossCheck(format!(
            "degree of the product {} differs from the Euler characteristic sum {chi_total}",
            zeta.degree()?
        )));
    }
    let mut warnings = Vec::new();
    if chi_sum != expected_sum {
        warnings.push(format!(
            "strata Euler characteristics sum to {chi_sum}, expected chi(CP^{}) = {expected_sum}",
            p.n
        ));
    }
    Ok(CombineResult {
        zeta,
        chi_total,
        chi_sum,
        warnings,
    })
}
