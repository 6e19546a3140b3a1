//! Zeta-functions of permutations of finite sets.
//!
//! A permutation is the simplest monodromy: a cycle of length `l` acting on
//! `l` points has zeta-function `1 - t^l`. Powers of permutations give a
//! brute-force check of [`ZetaFactorization::power_transform`].

use crate::error::{Error, Result};
use crate::zeta::ZetaFactorization;

/// A bijection of `{0, .., n-1}` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::domain(format!(
                    "image {img} of point {i} is outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::domain(format!("point {img} is hit twice")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Disjoint cycles of the given lengths laid out on consecutive points.
    pub fn from_cycle_type(lengths: &[usize]) -> Result<Self> {
        let mut images = Vec::new();
        for &len in lengths {
            if len == 0 {
                return Err(Error::domain("cycle length must be >= 1"));
            }
            let base = images.len();
            images.extend((0..len).map(|i| base + (i + 1) % len));
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` applied after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Cycle lengths in order of their smallest point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut visited = vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }
}

/// `prod over cycles (1 - t^len)`.
pub fn zeta_of_permutation(p: &Permutation) -> Result<ZetaFactorization> {
    ZetaFactorization::from_exponents(p.cycle_lengths().into_iter().map(|len| (len as i64, 1)))
}

/// `k`-fold composition of `p` with itself, by repeated composition.
pub fn permutation_power(p: &Permutation, k: i64) -> Result<Permutation> {
    if k < 1 {
        return Err(Error::domain(format!("iterate k must be >= 1, got {k}")));
    }
    let mut out = p.clone();
    for _ in 1..k {
        out = p.compose(&out);
    }
    Ok(out)
}
