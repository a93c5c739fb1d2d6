//! Exponent vectors: monomials in a fixed ambient dimension, identified with
//! tuples of non-negative machine integers.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The exponent tuple of a monomial. The ambient dimension is the length of
/// the tuple and is always explicit; nothing is ever inferred from context.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    /// The monomial 1 in `dim` variables.
    pub fn one(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The variable x_index (1-based) in `dim` variables.
    pub fn variable(dim: usize, index: usize) -> Result<Self> {
        if index == 0 || index > dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut v = vec![0; dim];
        v[index - 1] = 1;
        Ok(ExponentVector(v))
    }

    /// Product of distinct variables, e.g. `from_support(5, &[1, 3])` = x1*x3.
    pub fn from_support(dim: usize, vars: &[usize]) -> Result<Self> {
        let mut v = vec![0; dim];
        for &i in vars {
            if i == 0 || i > dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            v[i - 1] = 1;
        }
        Ok(ExponentVector(v))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of x_index (1-based).
    pub fn exponent(&self, index: usize) -> Result<u32> {
        if index == 0 || index > self.dim() {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            });
        }
        Ok(self.0[index - 1])
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables that occur.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_coprime_with(&self, other: &ExponentVector) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0))
    }

    /// Componentwise <=, i.e. self | other as monomials.
    pub fn divides(&self, other: &ExponentVector) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b))
    }

    /// Monomial product (componentwise sum).
    pub fn mul(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.check_dim(other)?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect(),
        ))
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.check_dim(other)?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// Componentwise max(self - other, 0): the generator of (self) : (other).
    pub fn saturating_sub(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.check_dim(other)?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        ))
    }

    /// self^k as a monomial (componentwise scale).
    pub fn pow(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| a * k).collect())
    }

    /// self * x_index (1-based).
    pub fn incremented(&self, index: usize) -> Result<ExponentVector> {
        if index == 0 || index > self.dim() {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            });
        }
        let mut v = self.0.clone();
        v[index - 1] += 1;
        Ok(ExponentVector(v))
    }

    /// Image under x_index -> 1 (1-based): the exponent is zeroed.
    pub fn with_zeroed(&self, index: usize) -> Result<ExponentVector> {
        if index == 0 || index > self.dim() {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            });
        }
        let mut v = self.0.clone();
        v[index - 1] = 0;
        Ok(ExponentVector(v))
    }

    /// Reinterpret in a larger polynomial ring by padding with zeros.
    pub fn extended(&self, new_dim: usize) -> Result<ExponentVector> {
        if new_dim < self.dim() {
            return Err(Error::ShrinkDimension {
                from: self.dim(),
                to: new_dim,
            });
        }
        let mut v = self.0.clone();
        v.resize(new_dim, 0);
        Ok(ExponentVector(v))
    }

    /// Graded lexicographic order: total degree first, then lexicographic on
    /// the coordinate tuple. This is the canonical generator order everywhere.
    pub fn grlex_cmp(&self, other: &ExponentVector) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    fn check_dim(&self, other: &ExponentVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ExponentVector {
    /// Symbolic form with 1-based variables: `x1x2^3x6`, or `1` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
