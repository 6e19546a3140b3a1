//! Sparse multivariate integer polynomials: parsing, printing, and splitting
//! into homogeneous parts.

mod parser;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{checked, Error, Result};

/// Exponent vector, ordered graded-lexicographically (higher total degree first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("monomial product")))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer polynomial in named variables. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    variables: Vec<String>,
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero(variables: &[String]) -> Self {
        Self {
            variables: variables.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(variables: &[String], c: i64) -> Self {
        let mut p = Self::zero(variables);
        if c != 0 {
            p.terms.insert(Monomial(vec![0; variables.len()]), c);
        }
        p
    }

    /// The `index`-th declared variable as a polynomial.
    pub fn variable(variables: &[String], index: usize) -> Self {
        let mut exps = vec![0; variables.len()];
        exps[index] = 1;
        let mut p = Self::zero(variables);
        p.terms.insert(Monomial(exps), 1);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; like terms are added.
    pub fn from_terms<I>(variables: &[String], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        let mut p = Self::zero(variables);
        for (exps, c) in terms {
            if exps.len() != variables.len() {
                return Err(Error::domain(format!(
                    "exponent vector of length {} for {} variables",
                    exps.len(),
                    variables.len()
                )));
            }
            p.add_term(Monomial(exps), c)?;
        }
        Ok(p)
    }

    pub fn parse(text: &str, variables: &[String]) -> Result<Self> {
        parser::parse(text, variables)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next().map(Monomial::total_degree)
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let current = self.terms.get(&m).copied().unwrap_or(0);
        let next = checked::add(current, c, "polynomial sum")?;
        if next == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, next);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            self.variables, other.variables,
            "polynomials over different variables"
        );
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(m, c)| {
                Ok((
                    m.clone(),
                    c.checked_neg().ok_or(Error::Overflow("negation"))?,
                ))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            variables: self.variables.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other);
        let mut out = Self::zero(&self.variables);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb)?, checked::mul(ca, cb, "polynomial product")?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::constant(&self.variables, 1);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Splits into homogeneous components keyed by total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u64, MultiPoly> {
        let mut parts: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        for (m, c) in self.terms() {
            parts
                .entry(m.total_degree())
                .or_insert_with(|| Self::zero(&self.variables))
                .terms
                .insert(m.clone(), c);
        }
        parts
    }

    /// `P = P_d + P_(d-k) + lower terms` with `P_d`, `P_(d-k)` the two
    /// highest nonzero homogeneous parts.
    pub fn top_gap(&self) -> Result<TopGap> {
        let parts = self.homogeneous_parts();
        let mut iter = parts.into_iter().rev();
        match (iter.next(), iter.next()) {
            (Some((d, top)), Some((lower, next))) => Ok(TopGap {
                d,
                k: d - lower,
                top,
                next,
            }),
            _ => Err(Error::domain(
                "no gap: polynomial has fewer than two distinct term degrees",
            )),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// `x^2*y^2 + x`, `-3*x*y - 1`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let abs = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .zip(&self.variables)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The two leading homogeneous parts of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopGap {
    pub d: u64,
    pub k: u64,
    /// `P_d`.
    pub top: MultiPoly,
    /// `P_(d-k)`.
    pub next: MultiPoly,
}
