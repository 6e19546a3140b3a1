use serde::{Deserialize, Serialize};

use super::{combine, StratificationProblem, Stratum, ZetaMode};
use crate::error::{checked, Error, Result};
use crate::euler::{chi_projective_space, chi_yomdin_open_stratum};
use crate::germ::{
    acampo_zeta, check_gap, germ_zeta_inf, milnor_from_zeta, yomdin_point_zeta_inf, AcampoData,
    GermForm,
};
use crate::zeta::ZetaFactorization;

/// A singular point `Q_i` of `{P_d = 0}` with the resolution data of its local equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YomdinPoint {
    pub acampo: AcampoData,
    /// Milnor number of the local equation; derived from `acampo` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<i64>,
}

/// `P = P_d + P_(d-k) + ...` on `C^(n+1)` with `Sing(P_d)` finite and off `{P_(d-k) = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YomdinProblem {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    #[serde(default)]
    pub points: Vec<YomdinPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YomdinResult {
    pub zeta: ZetaFactorization,
    /// Euler characteristic of `CP^n \ {P_d = 0}`.
    pub chi_xi_n: i64,
    pub milnor_numbers: Vec<i64>,
    /// The stratification the second route was combined over.
    pub strata: Vec<Stratum>,
    pub degree: i64,
    /// Number of `n`-spheres in the generic fibre: `(-1)^n (deg zeta - 1)`.
    pub global_milnor: i64,
}

/// Zeta-function at infinity of a Yomdin-at-infinity polynomial.
///
/// Computed from the closed product over the singular points and, separately,
/// by combining the germ zeta-functions of the strata `Xi^n`, `Xi^(n-1)`
/// and the points `Q_i`; disagreement is a [`Error::CrossCheck`].
pub fn yomdin_zeta(p: &YomdinProblem) -> Result<YomdinResult> {
    if p.n < 1 {
        return Err(Error::domain(format!("n must be >= 1, got {}", p.n)));
    }
    check_gap(p.k, p.d)?;
    let gap = p.d - p.k;

    let mut milnor_numbers = Vec::with_capacity(p.points.len());
    for (i, point) in p.points.iter().enumerate() {
        let derived = milnor_from_zeta(&acampo_zeta(&point.acampo)?, p.n)?;
        match point.mu {
            Some(mu) if mu != derived => {
                return Err(Error::Inconsistent(format!(
                    "points[{i}].mu = {mu} but its A'Campo data gives Milnor number {derived}"
                )))
            }
            _ => milnor_numbers.push(derived),
        }
    }
    let s = i64::try_from(p.points.len()).map_err(|_| Error::Overflow("yomdin_zeta"))?;
    let chi_xi_n = chi_yomdin_open_stratum(p.n, p.d, &milnor_numbers)?;

    // closed form over the points
    let mut iterated = ZetaFactorization::unit();
    for point in &p.points {
        let local = acampo_zeta(&point.acampo)?
            .power_transform(p.k)?
            .substitute_power(gap)?;
        iterated = iterated.mul(&local)?;
    }
    let zeta = ZetaFactorization::cyclo_factor(p.d, chi_xi_n)?
        .mul(&ZetaFactorization::cyclo_factor(gap, s)?)?
        .mul(&iterated.inverse()?)?;

    // stratum by stratum
    let chi_divisor = checked::sub(
        checked::sub(chi_projective_space(p.n)?, chi_xi_n, "yomdin_zeta")?,
        s,
        "yomdin_zeta",
    )?;
    let mut strata = vec![
        Stratum::new(
            "Xi^n",
            chi_xi_n,
            germ_zeta_inf(&GermForm::Generic { d: p.d })?,
        ),
        Stratum::new(
            "Xi^(n-1)",
            chi_divisor,
            germ_zeta_inf(&GermForm::SmoothDivisor { d: p.d })?,
        ),
    ];
    for (i, point) in p.points.iter().enumerate() {
        strata.push(Stratum::new(
            format!("Q_{}", i + 1),
            1,
            yomdin_point_zeta_inf(&point.acampo, p.k, p.d)?,
        ));
    }
    let combined = combine(&StratificationProblem {
        n: p.n,
        strata: strata.clone(),
        mode: ZetaMode::Infinite,
    })?;
    if combined.zeta != zeta {
        return Err(Error::CrossCheck(format!(
            "closed form gives {zeta} but the stratification gives {}",
            combined.zeta
        )));
    }

    let degree = zeta.degree()?;
    let reduced = checked::sub(degree, 1, "yomdin_zeta")?;
    let global_milnor = if p.n % 2 == 0 {
        reduced
    } else {
        checked::mul(-1, reduced, "yomdin_zeta")?
    };
    Ok(YomdinResult {
        zeta,
        chi_xi_n,
        milnor_numbers,
        strata,
        degree,
        global_milnor,
    })
}
