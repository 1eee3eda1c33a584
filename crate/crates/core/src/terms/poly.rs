use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Num;

use super::RigMonomial;

/// Coefficient field of the semiring algebra. The order is only used to
/// print signs.
///
/// Any exact field type works; the crate root fixes the default to big
/// rationals. Floating point types satisfy the bound too, which is only
/// sound while coefficients stay small integers.
pub trait Coefficient:
    Num + Neg<Output = Self> + PartialOrd + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Num
        + Neg<Output = T>
        + PartialOrd
        + Clone
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// A finite linear combination of rig monomials with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial<K> {
    terms: BTreeMap<RigMonomial, K>,
}

impl<K> Default for Polynomial<K> {
    fn default() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Coefficient> Polynomial<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: RigMonomial) -> Self {
        Self::term(m, K::one())
    }

    pub fn term(m: RigMonomial, c: K) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `lhs − rhs`, the algebra element of a semiring relation.
    pub fn binomial(lhs: RigMonomial, rhs: RigMonomial) -> Self {
        let mut p = Self::monomial(lhs);
        p.add_term(rhs, -K::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (RigMonomial, K)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
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

    pub fn terms(&self) -> btree_map::Iter<'_, RigMonomial, K> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &RigMonomial> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &RigMonomial) -> Option<&K> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: RigMonomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn remove_term(&mut self, m: &RigMonomial) -> Option<K> {
        self.terms.remove(m)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of `∘`.
    pub fn circ(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.circ(n), a.clone() * b.clone());
            }
        }
        out
    }

    /// Bilinear extension of `·`.
    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.times(n), a.clone() * b.clone());
            }
        }
        out
    }

    /// `∘ m` applied termwise.
    pub fn circ_monomial(&self, m: &RigMonomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, c)| (n.circ(m), c.clone())))
    }

    /// Map each monomial, re-collecting coefficients.
    pub fn map_monomials<F: FnMut(&RigMonomial) -> RigMonomial>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Whether this is `m − m'` for two distinct monomials, in either sign.
    pub fn is_semiring_binomial(&self) -> bool {
        if self.terms.len() != 2 {
            return false;
        }
        let mut cs = self.terms.values();
        let (a, b) = (cs.next().unwrap(), cs.next().unwrap());
        let one = K::one();
        (*a == one && *b == -one.clone()) || (*a == -one.clone() && *b == one)
    }
}

impl<K: Coefficient> Add for Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<K: Coefficient> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: Self) -> Polynomial<K> {
        self.clone() + rhs.clone()
    }
}

impl<K: Coefficient> Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Self {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Coefficient> Sub for Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<K: Coefficient> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: Self) -> Polynomial<K> {
        self.clone() - rhs.clone()
    }
}
