use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{checked, Error, Result};

/// Dense integer polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `1 - t^m`; for `m = 0` this is the zero polynomial.
    pub fn one_minus_t_pow(m: usize) -> Self {
        let mut coeffs = vec![0; m + 1];
        coeffs[0] += 1;
        coeffs[m] -= 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = checked::mul(a, b, "polynomial product")?;
                out[i + j] = checked::add(out[i + j], prod, "polynomial product")?;
            }
        }
        Ok(Self::new(out))
    }

    /// Horner evaluation in `i128`; `None` on overflow.
    pub fn eval(&self, t: i128) -> Option<i128> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0i128, |acc, &c| acc.checked_mul(t)?.checked_add(c as i128))
    }

    fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }

    fn from_rational(coeffs: &[BigRational]) -> Result<Self> {
        coeffs
            .iter()
            .map(|c| {
                if !c.is_integer() {
                    return Err(Error::CrossCheck(format!(
                        "non-integral coefficient {c} after exact division"
                    )));
                }
                c.to_integer()
                    .to_i64()
                    .ok_or(Error::Overflow("rational function reduction"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers, e.g. `1 - t^2 - t^3 + t^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (i, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / denominator` with integer coefficients.
///
/// The denominator always has constant term `1`, which pins down the
/// representation up to common factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::domain("denominator is the zero polynomial"));
        }
        if denominator.constant_term() != 1 {
            return Err(Error::domain(format!(
                "denominator constant term must be 1, got {}",
                denominator.constant_term()
            )));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.numerator.mul(&other.numerator)?,
            self.denominator.mul(&other.denominator)?,
        )
    }

    /// Cancels the polynomial gcd of numerator and denominator.
    ///
    /// The gcd is computed over the rationals and normalized to constant term
    /// `1`; since it divides a denominator with constant term `1` it is then
    /// integral and both quotients stay in `Z[t]`.
    pub fn reduce(&self) -> Result<Self> {
        if self.numerator.is_zero() {
            return Self::new(IntPolynomial::zero(), IntPolynomial::one());
        }
        let num = self.numerator.to_rational();
        let den = self.denominator.to_rational();
        let mut g = poly_gcd(num.clone(), den.clone());
        let g0 = g[0].clone();
        if g0.is_zero() {
            return Err(Error::CrossCheck(
                "gcd vanishes at t = 0 although the denominator does not".into(),
            ));
        }
        for c in &mut g {
            *c /= g0.clone();
        }
        let (qn, rn) = poly_divrem(&num, &g);
        let (qd, rd) = poly_divrem(&den, &g);
        if !rn.is_empty() || !rd.is_empty() {
            return Err(Error::CrossCheck(
                "gcd does not divide its arguments".into(),
            ));
        }
        Self::new(
            IntPolynomial::from_rational(&qn)?,
            IntPolynomial::from_rational(&qd)?,
        )
    }

    /// Cross-multiplication equality `a/b == c/d`.
    pub fn same_function(&self, other: &Self) -> Result<bool> {
        Ok(self.numerator.mul(&other.denominator)? == other.numerator.mul(&self.denominator)?)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Long division over the rationals. `divisor` must be nonzero.
fn poly_divrem(
    dividend: &[BigRational],
    divisor: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = dividend.to_vec();
    trim(&mut rem);
    let mut divisor = divisor.to_vec();
    trim(&mut divisor);
    let lead = divisor.last().expect("nonzero divisor").clone();
    let dd = divisor.len() - 1;
    if rem.len() < divisor.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd && !rem.is_empty() {
        let shift = rem.len() - 1 - dd;
        let coef = rem.last().unwrap().clone() / lead.clone();
        for (i, d) in divisor.iter().enumerate() {
            rem[shift + i] -= coef.clone() * d;
        }
        quot[shift] = coef;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Monic gcd over the rationals (Euclid). Both inputs nonzero.
fn poly_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().cloned().unwrap_or_else(BigRational::one);
    a.iter().map(|c| c / lead.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ZetaFactorization;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn expand_cusp_by_direct_multiplication() {
        // (1 - t^2)(1 - t^3) = 1 - t^2 - t^3 + t^5
        let cusp = ZetaFactorization::from_exponents([(2, 1), (3, 1), (6, -1)]).unwrap();
        let e = cusp.expand().unwrap();
        assert_eq!(e.numerator(), &poly(&[1, 0, -1, -1, 0, 1]));
        assert_eq!(e.denominator(), &poly(&[1, 0, 0, 0, 0, 0, -1]));
        assert_eq!(e.to_string(), "(1 - t^2 - t^3 + t^5)/(1 - t^6)");
    }

    #[test]
    fn expand_trivial_cases() {
        assert_eq!(ZetaFactorization::unit().expand().unwrap(), rf(&[1], &[1]));
        let one_minus_t = ZetaFactorization::cyclo_factor(1, 1).unwrap();
        assert_eq!(one_minus_t.expand().unwrap(), rf(&[1, -1], &[1]));
    }

    #[test]
    fn reduce_cusp_to_phi6_form() {
        let r = rf(&[1, 0, -1, -1, 0, 1], &[1, 0, 0, 0, 0, 0, -1])
            .reduce()
            .unwrap();
        assert_eq!(r, rf(&[1, -1], &[1, -1, 1]));
    }

    #[test]
    fn reduce_trivial_cases() {
        assert_eq!(rf(&[1, -1], &[1]).reduce().unwrap(), rf(&[1, -1], &[1]));
        assert_eq!(
            rf(&[1, 0, -1], &[1, -1]).reduce().unwrap(),
            rf(&[1, 1], &[1])
        );
        assert_eq!(rf(&[], &[1, -1]).reduce().unwrap(), rf(&[], &[1]));
    }

    #[test]
    fn reduce_keeps_integer_content_of_numerator() {
        // 2(1 - t^2) / (1 - t) = 2 + 2t
        assert_eq!(
            rf(&[2, 0, -2], &[1, -1]).reduce().unwrap(),
            rf(&[2, 2], &[1])
        );
    }

    #[test]
    fn constructor_rejects_bad_denominators() {
        assert!(RationalFunction::new(poly(&[1]), poly(&[])).is_err());
        assert!(RationalFunction::new(poly(&[1]), poly(&[2, 1])).is_err());
    }

    #[test]
    fn display_polynomials() {
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[-1, 2, 0, -3]).to_string(), "-1 + 2*t - 3*t^3");
        assert_eq!(poly(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn eval_horner() {
        assert_eq!(poly(&[1, -1, 1]).eval(2), Some(3));
        assert_eq!(poly(&[]).eval(5), Some(0));
    }
}
