//! Closed-form Euler characteristics of the strata at infinity.

use crate::error::{checked, Error, Result};

fn exponent(n: i64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Overflow("Euler characteristic exponent"))
}

/// `chi(CP^n) = n + 1`.
pub fn chi_projective_space(n: i64) -> Result<i64> {
    if n < 0 {
        return Err(Error::domain(format!("dimension n must be >= 0, got {n}")));
    }
    checked::add(n, 1, "chi_projective_space")
}

/// Euler characteristic of a smooth degree-`d` hypersurface in `CP^n`:
/// `(n+1) + ((1-d)^(n+1) - 1) / d`.
pub fn chi_smooth_hypersurface(n: i64, d: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::domain(format!("dimension n must be >= 1, got {n}")));
    }
    if d < 1 {
        return Err(Error::domain(format!("degree d must be >= 1, got {d}")));
    }
    let ctx = "chi_smooth_hypersurface";
    let power = checked::pow(1 - d, exponent(n + 1)?, ctx)?;
    let numer = checked::sub(power, 1, ctx)?;
    // (1-d)^(n+1) == 1 (mod d), so this division is exact.
    assert_eq!(
        numer % d,
        0,
        "non-integral hypersurface Euler characteristic"
    );
    checked::add(n + 1, numer / d, ctx)
}

/// Euler characteristic of the open stratum `CP^n \ {P_d = 0}` of a
/// Yomdin-at-infinity polynomial whose top form has isolated singular points
/// with Milnor numbers `mus`:
/// `(1 - (1-d)^(n+1)) / d + (-1)^(n-1) * sum(mus)`.
pub fn chi_yomdin_open_stratum(n: i64, d: i64, mus: &[i64]) -> Result<i64> {
    if n < 1 {
        return Err(Error::domain(format!("dimension n must be >= 1, got {n}")));
    }
    if d < 2 {
        return Err(Error::domain(format!("degree d must be >= 2, got {d}")));
    }
    let ctx = "chi_yomdin_open_stratum";
    let power = checked::pow(1 - d, exponent(n + 1)?, ctx)?;
    let numer = checked::sub(1, power, ctx)?;
    assert_eq!(
        numer % d,
        0,
        "non-integral open-stratum Euler characteristic"
    );
    let mu_total = checked::sum(mus.iter().copied(), ctx)?;
    let signed = if n % 2 == 1 {
        mu_total
    } else {
        checked::mul(-1, mu_total, ctx)?
    };
    checked::add(numer / d, signed, ctx)
}

/// Euler characteristic of a reduced plane curve of degree `dtilde` whose
/// singular points have Milnor numbers `mus`: `3*dt - dt^2 + sum(mus)`.
pub fn chi_reduced_plane_curve(dtilde: i64, mus: &[i64]) -> Result<i64> {
    if dtilde < 1 {
        return Err(Error::domain(format!(
            "curve degree must be >= 1, got {dtilde}"
        )));
    }
    let ctx = "chi_reduced_plane_curve";
    let sq = checked::mul(dtilde, dtilde, ctx)?;
    let base = checked::sub(checked::mul(3, dtilde, ctx)?, sq, ctx)?;
    checked::add(base, checked::sum(mus.iter().copied(), ctx)?, ctx)
}

/// Euler characteristic of the curve component `C_j` with its intersection
/// points with `{P_(d-k) = 0}` (there are `dj*(d-k)` of them) and its
/// singular points removed.
pub fn chi_xi1(
    chi_component: i64,
    dj: i64,
    d: i64,
    k: i64,
    num_sing_on_component: i64,
) -> Result<i64> {
    if dj < 1 {
        return Err(Error::domain(format!(
            "component degree must be >= 1, got {dj}"
        )));
    }
    if k < 1 || k >= d {
        return Err(Error::domain(format!(
            "need 1 <= k <= d-1, got k={k}, d={d}"
        )));
    }
    if num_sing_on_component < 0 {
        return Err(Error::domain("number of singular points must be >= 0"));
    }
    let ctx = "chi_xi1";
    let removed = checked::mul(dj, d - k, ctx)?;
    checked::sub(
        checked::sub(chi_component, removed, ctx)?,
        num_sing_on_component,
        ctx,
    )
}
