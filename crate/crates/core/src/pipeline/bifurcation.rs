//! Atypical values at infinity from zero zeta-functions.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{StratificationProblem, Stratum, ZetaMode};
use crate::error::{checked, Error, Result};
use crate::zeta::ZetaFactorization;

/// Sufficient test for `0` being atypical at infinity: `zeta0 != 1`.
///
/// `false` is inconclusive, not a proof that the value is typical.
pub fn atypical_at_infinity(zeta0: &ZetaFactorization) -> bool {
    !zeta0.is_unit()
}

/// `lambda_P(0) = (-1)^n deg zeta0` for a polynomial on `C^(n+1)`.
pub fn lambda_invariant(zeta0: &ZetaFactorization, n: i64) -> Result<i64> {
    let degree = zeta0.degree()?;
    if n.rem_euclid(2) == 0 {
        Ok(degree)
    } else {
        checked::mul(-1, degree, "lambda_invariant")
    }
}

/// Exponents of `P = x^a y^b (x^c y^d - z^(c+d)) + z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl FamilyParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)] {
            if v < 1 {
                return Err(Error::domain(format!("{name} must be >= 1, got {v}")));
            }
        }
        if self.determinant()? == 0 {
            return Err(Error::domain(format!(
                "ad - bc must be nonzero, got a={} b={} c={} d={}",
                self.a, self.b, self.c, self.d
            )));
        }
        Ok(())
    }

    /// `ad - bc`.
    pub fn determinant(&self) -> Result<i64> {
        let ctx = "family determinant";
        checked::sub(
            checked::mul(self.a, self.d, ctx)?,
            checked::mul(self.b, self.c, ctx)?,
            ctx,
        )
    }

    /// Total degree `a + b + c + d`.
    pub fn total_degree(&self) -> Result<i64> {
        checked::sum([self.a, self.b, self.c, self.d], "family degree")
    }

    /// The same polynomial with `x` and `y` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            c: self.d,
            d: self.c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyZetaZero {
    pub zeta0: ZetaFactorization,
    /// `gcd(c,d) * gcd(|ad-bc| / gcd(c,d), D - 1)`.
    pub gcd_value: i64,
    pub lambda: i64,
    pub certified_atypical: bool,
    pub total_degree: i64,
}

fn family_gcd(f: &FamilyParams) -> Result<(i64, i64)> {
    let det = f
        .determinant()?
        .checked_abs()
        .ok_or(Error::Overflow("family_zeta_zero"))?;
    let cd = f.c.gcd(&f.d);
    let g = checked::mul(
        cd,
        (det / cd).gcd(&(f.total_degree()? - 1)),
        "family_zeta_zero",
    )?;
    Ok((det, g))
}

/// `zeta0 = (1 - t^(|ad-bc|/G))^G` with the exponent `G` above.
pub fn family_zeta_zero(f: &FamilyParams) -> Result<FamilyZetaZero> {
    f.validate()?;
    let (det, g) = family_gcd(f)?;
    let zeta0 = ZetaFactorization::cyclo_factor(det / g, g)?;
    let lambda = lambda_invariant(&zeta0, 2)?;
    Ok(FamilyZetaZero {
        certified_atypical: atypical_at_infinity(&zeta0),
        zeta0,
        gcd_value: g,
        lambda,
        total_degree: f.total_degree()?,
    })
}

/// Zero-mode stratification of the plane at infinity for the family: the
/// point among `Q_1 = (1:0:0)` and `Q_2 = (0:1:0)` on the side where the
/// determinant is positive carries the nontrivial zero zeta-function, the
/// other point and the rest of the plane carry `1`.
pub fn family_stratification(f: &FamilyParams) -> Result<StratificationProblem> {
    f.validate()?;
    let (det, g) = family_gcd(f)?;
    let local = ZetaFactorization::cyclo_factor(det / g, g)?;
    let (q1, q2) = if f.determinant()? > 0 {
        (local, ZetaFactorization::unit())
    } else {
        (ZetaFactorization::unit(), local)
    };
    Ok(StratificationProblem {
        n: 2,
        strata: vec![
            Stratum::new("Q_1", 1, q1),
            Stratum::new("Q_2", 1, q2),
            Stratum::new("CP^2 minus Q_1, Q_2", 1, ZetaFactorization::unit()),
        ],
        mode: ZetaMode::Zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::combine;

    fn z(pairs: &[(i64, i64)]) -> ZetaFactorization {
        ZetaFactorization::from_exponents(pairs.iter().copied()).unwrap()
    }

    fn fam(a: i64, b: i64, c: i64, d: i64) -> FamilyParams {
        FamilyParams { a, b, c, d }
    }

    #[test]
    fn certificate_is_one_sided() {
        assert!(atypical_at_infinity(&z(&[(3, 1)])));
        assert!(!atypical_at_infinity(&z(&[])));
        assert!(atypical_at_infinity(&z(&[(1, -2)])));
    }

    #[test]
    fn lambda_sign_rule() {
        assert_eq!(lambda_invariant(&z(&[(3, 1)]), 2).unwrap(), 3);
        assert_eq!(lambda_invariant(&z(&[]), 5).unwrap(), 0);
        assert_eq!(lambda_invariant(&z(&[(2, 2)]), 3).unwrap(), -4);
    }

    #[test]
    fn family_examples() {
        let r = family_zeta_zero(&fam(2, 1, 1, 2)).unwrap();
        assert_eq!(r.zeta0, z(&[(3, 1)]));
        assert_eq!((r.gcd_value, r.lambda, r.total_degree), (1, 3, 6));
        assert!(r.certified_atypical);

        let r = family_zeta_zero(&fam(3, 1, 2, 2)).unwrap();
        assert_eq!(r.zeta0, z(&[(2, 2)]));
        assert_eq!((r.gcd_value, r.lambda), (2, 4));

        let r = family_zeta_zero(&fam(1, 2, 2, 1)).unwrap();
        assert_eq!(r.zeta0, z(&[(3, 1)]));
    }

    #[test]
    fn family_rejects_degenerate_parameters() {
        assert!(family_zeta_zero(&fam(1, 1, 1, 1)).is_err());
        assert!(family_zeta_zero(&fam(0, 1, 1, 2)).is_err());
    }

    #[test]
    fn stratification_route_agrees() {
        for f in [
            fam(2, 1, 1, 2),
            fam(3, 1, 2, 2),
            fam(1, 2, 2, 1),
            fam(5, 3, 4, 6),
        ] {
            let combined = combine(&family_stratification(&f).unwrap()).unwrap();
            let closed = family_zeta_zero(&f).unwrap();
            assert_eq!(combined.zeta, closed.zeta0);
            assert_eq!(lambda_invariant(&combined.zeta, 2).unwrap(), closed.lambda);
            assert!(combined.warnings.is_empty());
        }
    }
}
