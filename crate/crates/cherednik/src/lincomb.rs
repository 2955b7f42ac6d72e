//! Finite formal linear combinations with exact rational coefficients.

use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Q;

/// A finite sum `Σ q_k · k` over keys `k`. Zero coefficients are never stored,
/// so structural equality is equality of vectors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, crate::scalar::one())
    }

    pub fn term(k: K, coef: Q) -> Self {
        let mut v = Self::new();
        v.add_term(k, coef);
        v
    }

    pub fn add_term(&mut self, k: K, coef: Q) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(c) => {
                *c += coef;
                if c.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, coef);
            }
        }
    }

    /// `self += s · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * s);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::new();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn sum(mut self, other: &LinComb<K>) -> Self {
        self.add_assign(other);
        self
    }

    pub fn difference(mut self, other: &LinComb<K>) -> Self {
        self.sub_assign(other);
        self
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

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// The unique term, if there is exactly one.
    pub fn single(&self) -> Option<(&K, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Drops all terms whose key fails `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<L>, E>,
    ) -> Result<LinComb<L>, E> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut v = LinComb::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})·{:?}", crate::scalar::fmt_q(c), k)?;
        }
        Ok(())
    }
}
