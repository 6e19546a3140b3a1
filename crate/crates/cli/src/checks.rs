//! Cross-route assertions run under `--check`. Each returns a short detail
//! string on success and the disagreement on failure.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zeta_infinity::germ::{
    lifted_point_zeta_inf, yomdin_point_zeta_inf, yomdin_point_zeta_inf_alt, AcampoData,
};
use zeta_infinity::perm::{permutation_power, zeta_of_permutation, Permutation};
use zeta_infinity::ZetaFactorization;

pub type CheckResult = Result<String, String>;

/// Largest permutation the oracle will build from a zeta-function.
const ORACLE_POINTS: i64 = 10_000;

fn err(e: zeta_infinity::Error) -> String {
    e.to_string()
}

pub fn round_trip(zetas: &[&ZetaFactorization]) -> CheckResult {
    for z in zetas {
        let text = z.to_string();
        let back = ZetaFactorization::parse(&text).map_err(err)?;
        if &back != *z {
            return Err(format!("`{text}` parses to {back}"));
        }
    }
    Ok(format!("{} value(s)", zetas.len()))
}

/// Stratum route against the power-transform route for one point germ.
pub fn point_routes(a: &AcampoData, k: i64, d: i64) -> Result<(), String> {
    let direct = yomdin_point_zeta_inf(a, k, d).map_err(err)?;
    let via_power = yomdin_point_zeta_inf_alt(a, k, d).map_err(err)?;
    if direct != via_power {
        return Err(format!("k={k}, d={d}: {direct} vs {via_power}"));
    }
    Ok(())
}

/// Lifting identity at a randomly drawn divisor Euler characteristic.
pub fn lifting(a: &AcampoData, k: i64, d: i64, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let chi_d = rng.gen_range(-5..=5);
    let lifted = lifted_point_zeta_inf(a, chi_d, k, d).map_err(err)?;
    let expected = ZetaFactorization::cyclo_factor(d - k, chi_d - 1)
        .and_then(|lead| lead.mul(&yomdin_point_zeta_inf(a, k, d)?))
        .map_err(err)?;
    if lifted != expected {
        return Err(format!("k={k}, d={d}, chi={chi_d}: {lifted} vs {expected}"));
    }
    Ok(())
}

/// Route equality and lifting identity over all gaps `1 <= k < d <= 12`.
pub fn point_grid(a: &AcampoData, rng: &mut ChaCha8Rng) -> CheckResult {
    let mut cases = 0;
    for d in 2..=12 {
        for k in 1..d {
            point_routes(a, k, d)?;
            lifting(a, k, d, rng)?;
            cases += 1;
        }
    }
    Ok(format!("{cases} gaps"))
}

/// The permutation with `a_m` cycles of length `m`, if `z` has one of
/// manageable size.
pub fn permutation_realizing(z: &ZetaFactorization) -> Option<Permutation> {
    let mut lengths = Vec::new();
    let mut points = 0i64;
    for (m, a) in z.iter() {
        if a < 0 {
            return None;
        }
        points = points.checked_add(i64::try_from(m).ok()?.checked_mul(a)?)?;
        if points > ORACLE_POINTS {
            return None;
        }
        lengths.extend(std::iter::repeat_n(m as usize, a as usize));
    }
    Permutation::from_cycle_type(&lengths).ok()
}

/// `power_transform(k)` against the zeta-function of the `k`-th iterate.
pub fn permutation_oracle(p: &Permutation, ks: impl IntoIterator<Item = i64>) -> CheckResult {
    let zeta = zeta_of_permutation(p).map_err(err)?;
    let mut count = 0;
    for k in ks {
        let iterate = zeta_of_permutation(&permutation_power(p, k).map_err(err)?).map_err(err)?;
        let transformed = zeta.power_transform(k).map_err(err)?;
        if iterate != transformed {
            return Err(format!(
                "k={k}: iterate {iterate} vs transform {transformed}"
            ));
        }
        count += 1;
    }
    Ok(format!("{count} iterate(s) on {} points", p.len()))
}

/// Compares two integers computed by different routes.
pub fn equal(what: &str, lhs: i64, rhs: i64) -> CheckResult {
    if lhs == rhs {
        Ok(format!("{what} = {lhs}"))
    } else {
        Err(format!("{what}: {lhs} vs {rhs}"))
    }
}
