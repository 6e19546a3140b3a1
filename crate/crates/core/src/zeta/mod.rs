//! Zeta-functions in the factored basis `(1 - t^m)`.
//!
//! Every zeta-function handled by this crate is a finite product
//! `prod_m (1 - t^m)^(a_m)`. The factors `1 - t^m` are multiplicatively
//! independent, so the exponent table `m -> a_m` (with zero exponents
//! dropped) is a canonical form and equality of values is equality of tables.

mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{checked, Error, Result};

pub use rational::{IntPolynomial, RationalFunction};

/// A zeta-function `prod_m (1 - t^m)^(a_m)` stored as its exponent table.
///
/// Keys are factor orders `m >= 1`; no stored exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZetaFactorization {
    factors: BTreeMap<u64, i64>,
}

fn to_order(m: i64, what: &str) -> Result<u64> {
    if m < 1 {
        return Err(Error::domain(format!("{what} must be >= 1, got {m}")));
    }
    Ok(m as u64)
}

impl ZetaFactorization {
    /// The constant zeta-function `1`.
    pub fn unit() -> Self {
        Self::default()
    }

    /// The single factor `(1 - t^m)^a`.
    pub fn cyclo_factor(m: i64, a: i64) -> Result<Self> {
        let m = to_order(m, "factor order m")?;
        let mut z = Self::unit();
        z.accumulate(m, a, "cyclo_factor")?;
        Ok(z)
    }

    /// Builds a value from `(m, a_m)` pairs; repeated orders multiply together.
    pub fn from_exponents<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut z = Self::unit();
        for (m, a) in pairs {
            let m = to_order(m, "factor order m")?;
            z.accumulate(m, a, "from_exponents")?;
        }
        Ok(z)
    }

    fn accumulate(&mut self, m: u64, a: i64, ctx: &'static str) -> Result<()> {
        debug_assert!(m >= 1);
        if a == 0 {
            return Ok(());
        }
        let current = self.factors.get(&m).copied().unwrap_or(0);
        let next = checked::add(current, a, ctx)?;
        if next == 0 {
            self.factors.remove(&m);
        } else {
            self.factors.insert(m, next);
        }
        Ok(())
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of `(1 - t^m)`, zero when the factor is absent.
    pub fn exponent(&self, m: u64) -> i64 {
        self.factors.get(&m).copied().unwrap_or(0)
    }

    /// `(m, a_m)` pairs in ascending `m`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&m, &a)| (m, a))
    }

    /// Number of distinct factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, a) in other.iter() {
            out.accumulate(m, a, "mul")?;
        }
        Ok(out)
    }

    /// Raises to an integer power; negative powers invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::unit());
        }
        let factors = self
            .iter()
            .map(|(m, a)| Ok((m, checked::mul(a, e, "pow")?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { factors })
    }

    pub fn inverse(&self) -> Result<Self> {
        self.pow(-1)
    }

    /// `sum_m m * a_m`: the Euler characteristic of the underlying fibre.
    pub fn degree(&self) -> Result<i64> {
        let mut total = 0i64;
        for (m, a) in self.iter() {
            let m = i64::try_from(m).map_err(|_| Error::Overflow("degree"))?;
            total = checked::add(total, checked::mul(m, a, "degree")?, "degree")?;
        }
        Ok(total)
    }

    /// Evaluates at `t^r`: each factor `1 - t^m` becomes `1 - t^(r*m)`.
    pub fn substitute_power(&self, r: i64) -> Result<Self> {
        let r = to_order(r, "substitution power r")?;
        let mut out = Self::unit();
        for (m, a) in self.iter() {
            let rm = m
                .checked_mul(r)
                .filter(|&rm| rm <= i64::MAX as u64)
                .ok_or(Error::Overflow("substitute_power"))?;
            out.accumulate(rm, a, "substitute_power")?;
        }
        Ok(out)
    }

    /// Zeta-function of the `k`-th iterate of a map whose zeta-function is `self`.
    ///
    /// Each `(1 - t^m)^a` becomes `(1 - t^(m/g))^(g*a)` with `g = gcd(k, m)`;
    /// images landing on the same order are multiplied together.
    pub fn power_transform(&self, k: i64) -> Result<Self> {
        let k = to_order(k, "iterate k")?;
        let mut out = Self::unit();
        for (m, a) in self.iter() {
            let g = k.gcd(&m);
            let g_signed = i64::try_from(g).map_err(|_| Error::Overflow("power_transform"))?;
            let exponent = checked::mul(g_signed, a, "power_transform")?;
            out.accumulate(m / g, exponent, "power_transform")?;
        }
        Ok(out)
    }

    /// Multiplies out the product: positive exponents go to the numerator,
    /// negative ones to the denominator. The result is not reduced.
    pub fn expand(&self) -> Result<RationalFunction> {
        let mut numerator = IntPolynomial::one();
        let mut denominator = IntPolynomial::one();
        for (m, a) in self.iter() {
            let m = usize::try_from(m).map_err(|_| Error::Overflow("expand"))?;
            let factor = IntPolynomial::one_minus_t_pow(m);
            let target = if a > 0 {
                &mut numerator
            } else {
                &mut denominator
            };
            for _ in 0..a.unsigned_abs() {
                *target = target.mul(&factor)?;
            }
        }
        RationalFunction::new(numerator, denominator)
    }

    /// Parses the `(1-t^m)^a*...` grammar. The empty string and `1` denote the unit.
    pub fn parse(text: &str) -> Result<Self> {
        ZetaParser::new(text).parse()
    }
}

impl fmt::Display for ZetaFactorization {
    /// `(1-t^2)*(1-t^6)^-1`; the unit formats as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, a)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "(1-t^{m})")?;
            if a != 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ZetaFactorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for ZetaFactorization {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ZetaFactorization {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Self::parse(&text).map_err(serde::de::Error::custom)
    }
}

struct ZetaParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> ZetaParser<'a> {
    fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{token}`")))
        }
    }

    fn integer(&mut self, signed: bool) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if signed && end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits_start = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_start {
            return Err(Error::parse(start, "expected an integer"));
        }
        let value = self.text[start..end]
            .parse::<i64>()
            .map_err(|_| Error::parse(start, "integer out of range"))?;
        self.pos = end;
        Ok(value)
    }

    fn parse(mut self) -> Result<ZetaFactorization> {
        let mut z = ZetaFactorization::unit();
        if self.at_end() {
            return Ok(z);
        }
        if self.rest().trim_end() == "1" {
            return Ok(z);
        }
        loop {
            let term_start = {
                self.skip_ws();
                self.pos
            };
            self.expect("(")?;
            self.expect("1")?;
            self.expect("-")?;
            self.expect("t")?;
            let m = if self.eat("^") {
                self.integer(false)?
            } else {
                1
            };
            self.expect(")")?;
            let a = if self.eat("^") {
                self.integer(true)?
            } else {
                1
            };
            if m < 1 {
                return Err(Error::parse(term_start, "factor order must be >= 1"));
            }
            z.accumulate(m as u64, a, "parse")?;
            if self.at_end() {
                return Ok(z);
            }
            self.expect("*")?;
        }
    }
}
