//! Local zeta-functions of meromorphic germs `F/u^d` at points of the
//! hyperplane at infinity.
//!
//! The infinite zeta-function of a germ `(g(y) + u^k)/u^d` is computed from
//! resolution data of `g` in two independent ways: directly from the strata
//! `S_m` ([`yomdin_point_zeta_inf`]) and through the zeta-function of the
//! `k`-th power of the monodromy of `g` ([`yomdin_point_zeta_inf_alt`]).

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{checked, Error, Result};
use crate::zeta::ZetaFactorization;

/// Resolution data of a holomorphic germ `g`: for each `m >= 1`, the Euler
/// characteristic of the part `S_m` of the exceptional divisor along which
/// the lifted germ is locally `y_1^m`.
///
/// Entries with `chi(S_m) = 0` are accepted and dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct AcampoData {
    strata: BTreeMap<u64, i64>,
}

impl AcampoData {
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut strata = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (m, chi) in entries {
            if m < 1 {
                return Err(Error::domain(format!(
                    "A'Campo multiplicity m must be >= 1, got {m}"
                )));
            }
            if !seen.insert(m) {
                return Err(Error::domain(format!(
                    "A'Campo multiplicity m = {m} listed twice"
                )));
            }
            if chi != 0 {
                strata.insert(m as u64, chi);
            }
        }
        Ok(Self { strata })
    }

    /// `(m, chi(S_m))` with nonzero `chi`, ascending in `m`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.strata.iter().map(|(&m, &chi)| (m, chi))
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }
}

impl TryFrom<Vec<(i64, i64)>> for AcampoData {
    type Error = Error;

    fn try_from(entries: Vec<(i64, i64)>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<AcampoData> for Vec<(i64, i64)> {
    fn from(data: AcampoData) -> Self {
        data.iter().map(|(m, chi)| (m as i64, chi)).collect()
    }
}

/// The local shapes of `P` at infinity for which a zeta-function is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GermForm {
    /// `1/u^d`, away from `{P_d = 0}`.
    Generic { d: i64 },
    /// `y_1/u^d`, at smooth points of `{P_d = 0}` off the lower curve.
    SmoothDivisor { d: i64 },
    /// `(y_1^m + u^k)/u^d`, along a component of multiplicity `m`.
    YomdinLine { m: i64, k: i64, d: i64 },
    /// `(y_1^q + u^k y_2)/u^d`, where a multiple component meets the lower curve.
    TransverseIntersection { q: i64, k: i64, d: i64 },
    /// `(y_1^m1 ... y_n^mn + u^k)/u^d` with at least two nonzero `m_i`.
    MixedMonomial { k: i64, d: i64 },
    /// `(g(y) + u^k)/u^d` for a germ `g` given by its resolution data.
    YomdinPoint { acampo: AcampoData, k: i64, d: i64 },
    /// Externally computed zeta-functions.
    Custom {
        zeta_inf: ZetaFactorization,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        zeta_zero: Option<ZetaFactorization>,
    },
}

impl GermForm {
    pub fn name(&self) -> &'static str {
        match self {
            GermForm::Generic { .. } => "generic",
            GermForm::SmoothDivisor { .. } => "smooth_divisor",
            GermForm::YomdinLine { .. } => "yomdin_line",
            GermForm::TransverseIntersection { .. } => "transverse_intersection",
            GermForm::MixedMonomial { .. } => "mixed_monomial",
            GermForm::YomdinPoint { .. } => "yomdin_point",
            GermForm::Custom { .. } => "custom",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            GermForm::Generic { d } | GermForm::SmoothDivisor { d } => check_degree(d),
            GermForm::YomdinLine { m, k, d } => {
                check_positive(m, "m")?;
                check_gap(k, d)
            }
            GermForm::TransverseIntersection { q, k, d } => {
                check_positive(q, "q")?;
                check_gap(k, d)
            }
            GermForm::MixedMonomial { k, d } | GermForm::YomdinPoint { k, d, .. } => {
                check_gap(k, d)
            }
            GermForm::Custom { .. } => Ok(()),
        }
    }
}

fn check_positive(value: i64, name: &str) -> Result<()> {
    if value < 1 {
        return Err(Error::domain(format!("{name} must be >= 1, got {value}")));
    }
    Ok(())
}

fn check_degree(d: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::domain(format!("degree d must be >= 2, got {d}")));
    }
    Ok(())
}

/// `d >= 2` and `1 <= k <= d - 1`.
pub(crate) fn check_gap(k: i64, d: i64) -> Result<()> {
    check_degree(d)?;
    if k < 1 || k >= d {
        return Err(Error::domain(format!(
            "need 1 <= k <= d-1, got k={k}, d={d}"
        )));
    }
    Ok(())
}

/// Zeta-function of the monodromy of `g` from its resolution data:
/// `prod_m (1 - t^m)^chi(S_m)`.
pub fn acampo_zeta(a: &AcampoData) -> Result<ZetaFactorization> {
    ZetaFactorization::from_exponents(a.iter().map(|(m, chi)| (m as i64, chi)))
}

/// Milnor number of an isolated germ in `n` variables from its zeta-function,
/// using `deg zeta = chi(Milnor fibre) = 1 + (-1)^(n-1) mu`.
pub fn milnor_from_zeta(z: &ZetaFactorization, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::domain(format!(
            "number of variables n must be >= 1, got {n}"
        )));
    }
    let reduced = checked::sub(z.degree()?, 1, "milnor_from_zeta")?;
    let mu = if n % 2 == 1 {
        reduced
    } else {
        checked::mul(-1, reduced, "milnor_from_zeta")?
    };
    if mu < 0 {
        return Err(Error::Inconsistent(format!(
            "zeta-function {z} of degree {} gives negative Milnor number {mu} in {n} variables",
            z.degree()?
        )));
    }
    Ok(mu)
}

/// `(1 - t^(d-k))^lead * prod_m (1 - t^(m(d-k)/gcd(m,k)))^(-gcd(m,k) chi(S_m))`.
fn lifted_product(a: &AcampoData, lead: i64, k: i64, d: i64) -> Result<ZetaFactorization> {
    check_gap(k, d)?;
    let gap = d - k;
    let mut pairs = vec![(gap, lead)];
    for (m, chi) in a.iter() {
        let m = i64::try_from(m).map_err(|_| Error::Overflow("yomdin_point_zeta_inf"))?;
        let g = m.gcd(&k);
        let order = checked::mul(m, gap, "yomdin_point_zeta_inf")? / g;
        let exponent = checked::mul(-g, chi, "yomdin_point_zeta_inf")?;
        pairs.push((order, exponent));
    }
    ZetaFactorization::from_exponents(pairs)
}

/// Infinite zeta-function of `(g + u^k)/u^d`, stratum by stratum over the
/// resolution of `g`.
pub fn yomdin_point_zeta_inf(a: &AcampoData, k: i64, d: i64) -> Result<ZetaFactorization> {
    lifted_product(a, 1, k, d)
}

/// Infinite zeta-function of `(g + u^k)/u^d` as
/// `(1 - t^(d-k)) / zeta_g^k(t^(d-k))`, where `zeta_g^k` is the zeta-function
/// of the `k`-th power of the monodromy of `g`.
pub fn yomdin_point_zeta_inf_alt(a: &AcampoData, k: i64, d: i64) -> Result<ZetaFactorization> {
    check_gap(k, d)?;
    let lead = ZetaFactorization::cyclo_factor(d - k, 1)?;
    let iterated = acampo_zeta(a)?
        .power_transform(k)?
        .substitute_power(d - k)?;
    lead.mul(&iterated.inverse()?)
}

/// Infinite zeta-function of the germ lifted to `C_u x X`, where the
/// exceptional divisor of the resolution has Euler characteristic `chi_d`.
pub fn lifted_point_zeta_inf(
    a: &AcampoData,
    chi_d: i64,
    k: i64,
    d: i64,
) -> Result<ZetaFactorization> {
    lifted_product(a, chi_d, k, d)
}

pub fn germ_zeta_inf(g: &GermForm) -> Result<ZetaFactorization> {
    g.validate()?;
    match g {
        GermForm::Generic { d } => ZetaFactorization::cyclo_factor(*d, 1),
        GermForm::SmoothDivisor { .. } | GermForm::TransverseIntersection { .. } => {
            Ok(ZetaFactorization::unit())
        }
        GermForm::YomdinLine { m, k, d } => {
            let gap = d - k;
            let gcd = m.gcd(k);
            let order = checked::mul(*m, gap, "germ_zeta_inf")? / gcd;
            ZetaFactorization::from_exponents([(gap, 1), (order, -gcd)])
        }
        GermForm::MixedMonomial { k, d } => ZetaFactorization::cyclo_factor(d - k, 1),
        GermForm::YomdinPoint { acampo, k, d } => yomdin_point_zeta_inf(acampo, *k, *d),
        GermForm::Custom { zeta_inf, .. } => Ok(zeta_inf.clone()),
    }
}

/// Zero zeta-function; only known for `1/u^d` germs (empty zero Milnor fibre)
/// and for user-supplied values.
pub fn germ_zeta_zero(g: &GermForm) -> Result<ZetaFactorization> {
    g.validate()?;
    match g {
        GermForm::Generic { .. } => Ok(ZetaFactorization::unit()),
        GermForm::Custom {
            zeta_zero: Some(z), ..
        } => Ok(z.clone()),
        other => Err(Error::ZeroZetaUnspecified(other.name())),
    }
}
