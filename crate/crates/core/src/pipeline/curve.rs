//! Polynomials in three variables whose top form defines a (possibly
//! non-reduced) curve `C_1^q_1 + ... + C_r^q_r` in the plane at infinity.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{combine, StratificationProblem, Stratum, ZetaMode};
use crate::error::{checked, Error, Result};
use crate::euler::{chi_reduced_plane_curve, chi_xi1};
use crate::germ::{
    acampo_zeta, check_gap, germ_zeta_inf, yomdin_point_zeta_inf_alt, AcampoData, GermForm,
};
use crate::zeta::ZetaFactorization;

/// An irreducible component `C_j` of `{P_d = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveComponent {
    /// Multiplicity `q_j` in `P_d`.
    pub q: i64,
    /// Degree `d_j`.
    pub deg: i64,
    /// Euler characteristic of `C_j`; a smooth curve of degree `deg` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<i64>,
}

impl CurveComponent {
    pub fn euler_characteristic(&self) -> Result<i64> {
        match self.chi {
            Some(chi) => Ok(chi),
            None => {
                let sq = checked::mul(self.deg, self.deg, "component chi")?;
                checked::sub(
                    checked::mul(3, self.deg, "component chi")?,
                    sq,
                    "component chi",
                )
            }
        }
    }
}

/// A singular point `Q_i` of the reduced curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    /// Milnor number of the reduced curve at `Q_i`.
    pub mu: i64,
    /// Indices of the components passing through `Q_i`.
    pub incident: Vec<usize>,
    /// Resolution data of the non-reduced local equation `g_i` of `{P_d = 0}`.
    pub acampo_g: AcampoData,
}

/// User statements that the genericity conditions hold; they are not verified.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveAttestations {
    /// `{P_(d-k) = 0}` is reduced.
    #[serde(default)]
    pub lower_curve_reduced: bool,
    /// No `Q_i` lies on `{P_(d-k) = 0}`.
    #[serde(default)]
    pub points_off_lower_curve: bool,
    /// Every multiple component meets `{P_(d-k) = 0}` in `d_j (d - k)` distinct points.
    #[serde(default)]
    pub multiple_components_transversal: bool,
}

impl CurveAttestations {
    pub fn all(&self) -> bool {
        self.lower_curve_reduced
            && self.points_off_lower_curve
            && self.multiple_components_transversal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProblem {
    pub d: i64,
    pub k: i64,
    pub components: Vec<CurveComponent>,
    #[serde(default)]
    pub sing_points: Vec<SingularPoint>,
    #[serde(default)]
    pub attestations: CurveAttestations,
}

impl CurveProblem {
    pub fn validate(&self) -> Result<()> {
        check_gap(self.k, self.d)?;
        if self.components.is_empty() {
            return Err(Error::domain(
                "components: at least one component is required",
            ));
        }
        let mut weighted = 0i64;
        for (j, c) in self.components.iter().enumerate() {
            if c.q < 1 {
                return Err(Error::domain(format!(
                    "components[{j}].q must be >= 1, got {}",
                    c.q
                )));
            }
            if c.deg < 1 {
                return Err(Error::domain(format!(
                    "components[{j}].deg must be >= 1, got {}",
                    c.deg
                )));
            }
            weighted = checked::add(weighted, checked::mul(c.q, c.deg, "curve")?, "curve")?;
        }
        if weighted != self.d {
            return Err(Error::domain(format!(
                "components: sum of q_j * deg_j is {weighted}, expected d = {}",
                self.d
            )));
        }
        for (i, point) in self.sing_points.iter().enumerate() {
            if point.incident.is_empty() {
                return Err(Error::domain(format!("sing_points[{i}].incident is empty")));
            }
            let mut sorted = point.incident.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != point.incident.len() {
                return Err(Error::domain(format!(
                    "sing_points[{i}].incident lists a component twice"
                )));
            }
            if let Some(&bad) = point.incident.iter().find(|&&j| j >= self.components.len()) {
                return Err(Error::domain(format!(
                    "sing_points[{i}].incident refers to missing component {bad}"
                )));
            }
        }
        Ok(())
    }

    /// Degree of the reduced curve, `sum d_j`.
    pub fn reduced_degree(&self) -> Result<i64> {
        checked::sum(self.components.iter().map(|c| c.deg), "reduced degree")
    }

    fn milnor_numbers(&self) -> Vec<i64> {
        self.sing_points.iter().map(|p| p.mu).collect()
    }

    fn points_on(&self, j: usize) -> i64 {
        self.sing_points
            .iter()
            .filter(|p| p.incident.contains(&j))
            .count() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveZeta {
    /// Stratum-by-stratum result.
    pub zeta: ZetaFactorization,
    pub strata: Vec<Stratum>,
    /// The aggregated closed product, evaluated independently.
    pub aggregated: ZetaFactorization,
    /// Whether `sum chi(C_j) - sum #incident + s` equals the reduced curve's Euler characteristic.
    pub inclusion_exclusion_holds: bool,
    pub warnings: Vec<String>,
}

/// Zeta-function at infinity, combined over the strata `Xi^2`, `Xi^1_j`,
/// `Lambda^0_j` and `Q_i`, and compared against the aggregated product.
///
/// When the component data satisfies inclusion-exclusion the two must agree
/// (otherwise [`Error::CrossCheck`]); when it does not, any discrepancy is
/// reported as a warning.
pub fn curve_zeta(p: &CurveProblem) -> Result<CurveZeta> {
    p.validate()?;
    let (d, k) = (p.d, p.k);
    let gap = d - k;
    let ctx = "curve_zeta";
    let dtilde = p.reduced_degree()?;
    let mus = p.milnor_numbers();
    let chi_curve = chi_reduced_plane_curve(dtilde, &mus)?;
    let chi_open = checked::sub(3, chi_curve, ctx)?;

    let mut warnings = Vec::new();
    if !p.attestations.all() {
        warnings.push(
            "genericity conditions not all attested: formula output, hypotheses unverified".into(),
        );
    }

    let mut strata = vec![Stratum::new(
        "Xi^2",
        chi_open,
        germ_zeta_inf(&GermForm::Generic { d })?,
    )];
    let mut xi1_chis = Vec::with_capacity(p.components.len());
    for (j, c) in p.components.iter().enumerate() {
        let chi = chi_xi1(c.euler_characteristic()?, c.deg, d, k, p.points_on(j))?;
        xi1_chis.push(chi);
        strata.push(Stratum::new(
            format!("Xi^1_{}", j + 1),
            chi,
            germ_zeta_inf(&GermForm::YomdinLine { m: c.q, k, d })?,
        ));
        strata.push(Stratum::new(
            format!("Lambda^0_{}", j + 1),
            checked::mul(c.deg, gap, ctx)?,
            germ_zeta_inf(&GermForm::TransverseIntersection { q: c.q, k, d })?,
        ));
    }
    for (i, point) in p.sing_points.iter().enumerate() {
        strata.push(Stratum::new(
            format!("Q_{}", i + 1),
            1,
            yomdin_point_zeta_inf_alt(&point.acampo_g, k, d)?,
        ));
    }
    let combined = combine(&StratificationProblem {
        n: 2,
        strata: strata.clone(),
        mode: ZetaMode::Infinite,
    })?;
    warnings.extend(combined.warnings);

    // aggregated closed product
    // exponent of (1 - t^(d-k)): 3 dt - dt^2 - dt (d-k) + sum mu
    let lead_exponent = checked::sub(chi_curve, checked::mul(dtilde, gap, ctx)?, ctx)?;
    let mut aggregated = ZetaFactorization::cyclo_factor(d, chi_open)?;
    aggregated = aggregated.mul(&ZetaFactorization::cyclo_factor(gap, lead_exponent)?)?;
    for (c, &chi) in p.components.iter().zip(&xi1_chis) {
        let g = c.q.gcd(&k);
        let order = checked::mul(c.q, gap, ctx)? / g;
        aggregated = aggregated.mul(&ZetaFactorization::cyclo_factor(
            order,
            checked::mul(-g, chi, ctx)?,
        )?)?;
    }
    for point in &p.sing_points {
        let local = acampo_zeta(&point.acampo_g)?
            .power_transform(k)?
            .substitute_power(gap)?;
        aggregated = aggregated.mul(&local.inverse()?)?;
    }

    let component_chis = checked::sum(
        p.components
            .iter()
            .map(|c| c.euler_characteristic())
            .collect::<Result<Vec<_>>>()?,
        ctx,
    )?;
    let incidences = checked::sum(p.sing_points.iter().map(|q| q.incident.len() as i64), ctx)?;
    let s = p.sing_points.len() as i64;
    let inclusion_exclusion_holds =
        checked::add(checked::sub(component_chis, incidences, ctx)?, s, ctx)? == chi_curve;

    if !inclusion_exclusion_holds {
        warnings.push(format!(
            "component Euler characteristics do not add up to the reduced curve: \
             sum chi(C_j) - incidences + s = {} but chi = {chi_curve}",
            component_chis - incidences + s
        ));
    }
    if combined.zeta != aggregated {
        if inclusion_exclusion_holds {
            return Err(Error::CrossCheck(format!(
                "stratum-wise product {} differs from the aggregated product {aggregated}",
                combined.zeta
            )));
        }
        warnings.push(format!(
            "stratum-wise product {} differs from the aggregated product {aggregated}",
            combined.zeta
        ));
    }

    Ok(CurveZeta {
        zeta: combined.zeta,
        strata,
        aggregated,
        inclusion_exclusion_holds,
        warnings,
    })
}

/// Global Milnor number
/// `(d-1)^3 - k (chi({P_d=0}) + d (2d - dt - 3)) + k^2 (d - dt)`, where `dt`
/// is the degree of the reduced curve.
pub fn curve_mu(p: &CurveProblem) -> Result<i64> {
    p.validate()?;
    let (d, k) = (p.d, p.k);
    let ctx = "curve_mu";
    let dtilde = p.reduced_degree()?;
    let chi_curve = chi_reduced_plane_curve(dtilde, &p.milnor_numbers())?;
    let cube = checked::pow(d - 1, 3, ctx)?;
    let inner = checked::sub(checked::sub(checked::mul(2, d, ctx)?, dtilde, ctx)?, 3, ctx)?;
    let linear = checked::mul(
        k,
        checked::add(chi_curve, checked::mul(d, inner, ctx)?, ctx)?,
        ctx,
    )?;
    let quadratic = checked::mul(checked::mul(k, k, ctx)?, d - dtilde, ctx)?;
    checked::add(checked::sub(cube, linear, ctx)?, quadratic, ctx)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `deg zeta = 1 + mu`, as it must be for a bouquet of 2-spheres.
    Consistent,
    /// The input data cannot describe an actual polynomial of this class.
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    pub zeta: CurveZeta,
    pub degree: i64,
    pub mu: i64,
    pub verdict: Verdict,
    pub hypotheses_attested: bool,
}

pub fn curve_report(p: &CurveProblem) -> Result<CurveReport> {
    let zeta = curve_zeta(p)?;
    let mu = curve_mu(p)?;
    let degree = zeta.zeta.degree()?;
    let verdict = if Some(degree) == mu.checked_add(1) {
        Verdict::Consistent
    } else {
        Verdict::Inconsistent
    };
    Ok(CurveReport {
        zeta,
        degree,
        mu,
        verdict,
        hypotheses_attested: p.attestations.all(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(pairs: &[(i64, i64)]) -> ZetaFactorization {
        ZetaFactorization::from_exponents(pairs.iter().copied()).unwrap()
    }

    /// x^2 y^2 at infinity: two double lines through a node at (0:0:1).
    /// One blow-up turns (xy)^2 into x^4 y1^2; the exceptional line has
    /// multiplicity 4 and meets the two strict transforms, so S_4 = P^1 minus
    /// two points and chi(S_4) = 0.
    fn double_lines(k: i64) -> CurveProblem {
        CurveProblem {
            d: 4,
            k,
            components: vec![
                CurveComponent {
                    q: 2,
                    deg: 1,
                    chi: Some(2),
                },
                CurveComponent {
                    q: 2,
                    deg: 1,
                    chi: Some(2),
                },
            ],
            sing_points: vec![SingularPoint {
                mu: 1,
                incident: vec![0, 1],
                acampo_g: AcampoData::new([(4, 0)]).unwrap(),
            }],
            attestations: CurveAttestations::default(),
        }
    }

    fn cuspidal_cubic() -> CurveProblem {
        CurveProblem {
            d: 3,
            k: 1,
            components: vec![CurveComponent {
                q: 1,
                deg: 3,
                chi: Some(2),
            }],
            sing_points: vec![SingularPoint {
                mu: 2,
                incident: vec![0],
                acampo_g: AcampoData::new([(2, 1), (3, 1), (6, -1)]).unwrap(),
            }],
            attestations: CurveAttestations {
                lower_curve_reduced: true,
                points_off_lower_curve: true,
                multiple_components_transversal: true,
            },
        }
    }

    #[test]
    fn double_lines_plus_linear_term() {
        let r = curve_report(&double_lines(3)).unwrap();
        assert_eq!(r.zeta.zeta, z(&[(1, 1)]));
        assert_eq!(r.zeta.aggregated, r.zeta.zeta);
        assert_eq!(r.mu, 0);
        assert_eq!(r.degree, 1);
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(!r.hypotheses_attested);
    }

    #[test]
    fn double_lines_plus_conic() {
        let r = curve_report(&double_lines(2)).unwrap();
        assert_eq!(r.zeta.zeta, z(&[(2, 3)]));
        assert_eq!(r.mu, 5);
        assert_eq!(r.verdict, Verdict::Consistent);
        let chis: Vec<i64> = r.zeta.strata.iter().map(|s| s.chi).collect();
        // Xi^2, (Xi^1_1, Lambda_1), (Xi^1_2, Lambda_2), Q
        assert_eq!(chis, vec![0, -1, 2, -1, 2, 1]);
    }

    #[test]
    fn cuspidal_cubic_matches_yomdin() {
        let r = curve_report(&cuspidal_cubic()).unwrap();
        assert_eq!(r.zeta.zeta, z(&[(2, 1), (3, 1), (4, -1), (6, -1), (12, 1)]));
        assert_eq!(r.mu, 6);
        assert_eq!(r.degree, 7);
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(r.zeta.warnings.is_empty());
    }

    #[test]
    fn default_component_chi_is_smooth_curve() {
        let c = CurveComponent {
            q: 1,
            deg: 3,
            chi: None,
        };
        assert_eq!(c.euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn inclusion_exclusion_violation_is_reported() {
        let mut p = cuspidal_cubic();
        // a smooth cubic's chi on a cuspidal curve
        p.components[0].chi = None;
        let r = curve_zeta(&p).unwrap();
        assert!(!r.inclusion_exclusion_holds);
        assert!(r.warnings.iter().any(|w| w.contains("do not add up")));
    }

    #[test]
    fn validation_errors() {
        let mut p = double_lines(3);
        p.components[0].q = 1;
        assert!(curve_zeta(&p)
            .unwrap_err()
            .to_string()
            .contains("sum of q_j"));

        let mut p = double_lines(3);
        p.sing_points[0].incident = vec![];
        assert!(curve_zeta(&p).is_err());

        let mut p = double_lines(3);
        p.sing_points[0].incident = vec![0, 5];
        assert!(curve_zeta(&p)
            .unwrap_err()
            .to_string()
            .contains("missing component 5"));

        let mut p = double_lines(3);
        p.k = 4;
        assert!(curve_mu(&p).is_err());
    }
}
