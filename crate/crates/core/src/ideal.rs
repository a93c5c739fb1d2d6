//! Monomial ideals represented by their unique minimal generating sets.
//!
//! A `MonomialIdeal` stores an antichain of exponent vectors (no generator
//! divides another) sorted in graded lexicographic order, so structural
//! equality is ideal equality. The zero ideal has no generators; the unit
//! ideal is generated by the monomial 1.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Build from an arbitrary finite generating set: duplicates and
    /// non-minimal generators are discarded, the rest sorted canonically.
    pub fn minimalize<T: IntoIterator<Item = ExponentVector>>(dim: usize, raw: T) -> Result<Self> {
        let mut gens: Vec<ExponentVector> = Vec::new();
        for g in raw {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            gens.push(g);
        }
        Ok(MonomialIdeal {
            dim,
            gens: minimal_antichain(gens),
        })
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![] }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![ExponentVector::one(dim)],
        }
    }

    pub fn principal(m: ExponentVector) -> Self {
        MonomialIdeal {
            dim: m.dim(),
            gens: vec![m],
        }
    }

    /// Ideal generated by the listed variables (1-based), e.g. (x1, x4).
    pub fn from_variables(dim: usize, vars: &[usize]) -> Result<Self> {
        let gens = vars
            .iter()
            .map(|&i| ExponentVector::variable(dim, i))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(dim, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Minimal generators in graded lexicographic order.
    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Does the monomial x^a lie in the ideal (i.e. is it divisible by a
    /// generator)?
    pub fn contains_monomial(&self, a: &ExponentVector) -> Result<bool> {
        self.check_dim_vec(a)?;
        for g in &self.gens {
            if g.divides(a)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        Self::minimalize(self.dim, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.mul(h)?);
            }
        }
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_antichain(raw),
        })
    }

    /// k-th power, k >= 1. Generators are enumerated directly as sums of
    /// k-multisets of the minimal generators (not by repeated `product`, which
    /// serves as an independent cross-check in the tests).
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut raw = Vec::new();
        let mut stack: Vec<(usize, u32, ExponentVector)> =
            vec![(0, k, ExponentVector::one(self.dim))];
        // multisets of generator indices in non-decreasing order
        while let Some((start, left, acc)) = stack.pop() {
            if left == 0 {
                raw.push(acc);
                continue;
            }
            for i in start..self.gens.len() {
                stack.push((i, left - 1, acc.mul(&self.gens[i])?));
            }
        }
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_antichain(raw),
        })
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm(h)?);
            }
        }
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_antichain(raw),
        })
    }

    /// I : (m) for a single monomial m, generated by the componentwise
    /// truncated differences (g - m)_+.
    pub fn colon_monomial(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        self.check_dim_vec(m)?;
        let raw = self
            .gens
            .iter()
            .map(|g| g.saturating_sub(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_antichain(raw),
        })
    }

    /// I : J = intersection over generators h of J of I : (h).
    /// J must be nonzero.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal { op: "colon_ideal" });
        }
        let mut acc: Option<MonomialIdeal> = None;
        for h in &other.gens {
            let part = self.colon_monomial(h)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.expect("nonzero ideal has at least one generator"))
    }

    /// Image under the substitution x_index -> 1 (1-based index).
    pub fn substitute_one(&self, index: usize) -> Result<MonomialIdeal> {
        if index == 0 || index > self.dim {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim,
            });
        }
        let raw = self
            .gens
            .iter()
            .map(|g| g.with_zeroed(index))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimal_antichain(raw),
        })
    }

    /// The extension ideal in a polynomial ring with more variables; the
    /// generating set is unchanged apart from zero padding.
    pub fn extended(&self, new_dim: usize) -> Result<MonomialIdeal> {
        if new_dim < self.dim {
            return Err(Error::ShrinkDimension {
                from: self.dim,
                to: new_dim,
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.extended(new_dim))
            .collect::<Result<Vec<_>>>()?;
        // padding preserves divisibility and grlex order
        Ok(MonomialIdeal {
            dim: new_dim,
            gens,
        })
    }

    /// Is other a subset of self (as ideals)?
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other)?;
        for h in &other.gens {
            if !self.contains_monomial(h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Does x^a lie in I^k? Decides whether a = g_{i_1} + ... + g_{i_k} + r
    /// with the g's minimal generators (repetition allowed) and r >= 0, by
    /// depth-first search over generator multisets with memoization.
    pub fn contains_monomial_power(&self, a: &ExponentVector, k: u32) -> Result<bool> {
        self.check_dim_vec(a)?;
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        if self.is_zero() {
            return Ok(false);
        }
        // Generators in descending total degree: large factors first fails
        // fast and keeps the memo table small.
        let mut order: Vec<usize> = (0..self.gens.len()).collect();
        order.sort_by(|&i, &j| {
            self.gens[j]
                .total_degree()
                .cmp(&self.gens[i].total_degree())
                .then_with(|| self.gens[i].coords().cmp(self.gens[j].coords()))
        });
        let gens: Vec<&ExponentVector> = order.iter().map(|&i| &self.gens[i]).collect();
        let min_deg: u64 = gens.iter().map(|g| g.total_degree()).min().unwrap_or(0);
        let mut memo: HashMap<(Vec<u32>, usize, u32), bool> = HashMap::new();
        return Ok(search(a.clone(), 0, k, &gens, min_deg, &mut memo));

        fn search(
            residual: ExponentVector,
            start: usize,
            left: u32,
            gens: &[&ExponentVector],
            min_deg: u64,
            memo: &mut HashMap<(Vec<u32>, usize, u32), bool>,
        ) -> bool {
            if left == 0 {
                return true; // remainder r = residual >= 0 by construction
            }
            if residual.total_degree() < min_deg * left as u64 {
                return false;
            }
            let key = (residual.coords().to_vec(), start, left);
            if let Some(&hit) = memo.get(&key) {
                return hit;
            }
            let mut found = false;
            for i in start..gens.len() {
                if gens[i].divides(&residual).expect("dims equal") {
                    let next = residual.saturating_sub(gens[i]).expect("dims equal");
                    if search(next, i, left - 1, gens, min_deg, memo) {
                        found = true;
                        break;
                    }
                }
            }
            memo.insert(key, found);
            found
        }
    }

    fn check_dim(&self, other: &MonomialIdeal) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    fn check_dim_vec(&self, v: &ExponentVector) -> Result<()> {
        if self.dim != v.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[dim {}] {}", self.dim, self)
    }
}

/// Reduce a generating set to the minimal one: sort by graded lex (so
/// divisors precede multiples), deduplicate, and keep a vector iff no kept
/// vector divides it. Cost is O(input * output), which matters for the large
/// intermediate sets produced by intersections.
fn minimal_antichain(mut raw: Vec<ExponentVector>) -> Vec<ExponentVector> {
    raw.sort_by(|a, b| a.grlex_cmp(b));
    raw.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    'outer: for g in raw {
        for k in &kept {
            if k.divides(&g).expect("uniform dimension") {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    kept
}
