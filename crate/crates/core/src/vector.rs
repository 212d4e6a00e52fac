//! Sparse integer linear combinations over canonical keys.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Finite formal sum `Σ c_k · k` with nonzero `BigInt` coefficients.
///
/// Keys must already be in canonical form; two aliases of one basis element
/// would otherwise be stored as distinct terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVector<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for SparseVector<K> {
    fn default() -> Self {
        SparseVector {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, BigInt::one())
    }

    pub fn term(key: K, coeff: BigInt) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scaled(&self, scale: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, scale);
        out
    }

    /// Linear extension of `f` over the terms of `self`.
    pub fn try_map_linear<L, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<SparseVector<L>, E>,
    ) -> Result<SparseVector<L>, E>
    where
        L: Ord + Clone,
    {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for SparseVector<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + Clone> Add for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn add(self, rhs: Self) -> SparseVector<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn sub(self, rhs: Self) -> SparseVector<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn neg(self) -> SparseVector<K> {
        self.scaled(&-BigInt::one())
    }
}
