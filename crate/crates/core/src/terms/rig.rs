use std::collections::BTreeSet;

use super::{BaseMonomial, Mode};

/// An element of the free semiring: a multiset of base monomials.
///
/// Stored as a run-length list `(component, multiplicity)` sorted ascending
/// by the structural (degree-lexicographic) order, so equal multisets have
/// identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RigMonomial {
    runs: Vec<(BaseMonomial, u32)>,
}

/// Result of [`RigMonomial::lcm_circ`]: `lcm = m ∘ left_cofactor = n ∘ right_cofactor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcm {
    pub lcm: RigMonomial,
    pub left_cofactor: RigMonomial,
    pub right_cofactor: RigMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measures {
    pub circ_len: usize,
    pub total_degree: usize,
    pub support: BTreeSet<BaseMonomial>,
}

impl RigMonomial {
    /// θ, the empty multiset.
    pub fn theta() -> Self {
        RigMonomial { runs: Vec::new() }
    }

    pub fn singleton(b: BaseMonomial) -> Self {
        RigMonomial { runs: vec![(b, 1)] }
    }

    /// The multiplicative identity `{1}`.
    pub fn one(mode: Mode) -> Self {
        Self::singleton(BaseMonomial::one(mode))
    }

    /// `b ∘ b ∘ ⋯ ∘ b` with `n` copies.
    pub fn circ_power(b: BaseMonomial, n: usize) -> Self {
        if n == 0 {
            return Self::theta();
        }
        RigMonomial {
            runs: vec![(b, n as u32)],
        }
    }

    pub fn from_components<I: IntoIterator<Item = BaseMonomial>>(components: I) -> Self {
        Self::from_weighted(components.into_iter().map(|b| (b, 1)))
    }

    pub fn from_weighted<I: IntoIterator<Item = (BaseMonomial, u32)>>(items: I) -> Self {
        let mut items: Vec<(BaseMonomial, u32)> =
            items.into_iter().filter(|(_, n)| *n > 0).collect();
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let mut runs: Vec<(BaseMonomial, u32)> = Vec::with_capacity(items.len());
        for (b, n) in items {
            match runs.last_mut() {
                Some((last, k)) if *last == b => *k += n,
                _ => runs.push((b, n)),
            }
        }
        RigMonomial { runs }
    }

    pub fn is_theta(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn runs(&self) -> &[(BaseMonomial, u32)] {
        &self.runs
    }

    /// Components in ascending order, repeated by multiplicity.
    pub fn components(&self) -> impl DoubleEndedIterator<Item = &BaseMonomial> + '_ {
        self.runs
            .iter()
            .flat_map(|(b, n)| std::iter::repeat_n(b, *n as usize))
    }

    pub fn distinct(&self) -> impl DoubleEndedIterator<Item = &BaseMonomial> + '_ {
        self.runs.iter().map(|(b, _)| b)
    }

    pub fn multiplicity(&self, b: &BaseMonomial) -> u32 {
        self.runs
            .binary_search_by(|(c, _)| c.cmp(b))
            .map(|i| self.runs[i].1)
            .unwrap_or(0)
    }

    /// `|m|∘`, the number of components counted with multiplicity.
    pub fn circ_len(&self) -> usize {
        self.runs.iter().map(|(_, n)| *n as usize).sum()
    }

    pub fn total_degree(&self) -> usize {
        self.runs
            .iter()
            .map(|(b, n)| b.degree() * *n as usize)
            .sum()
    }

    /// Degree of the largest component, 0 for θ.
    pub fn max_component_degree(&self) -> usize {
        self.runs.iter().map(|(b, _)| b.degree()).max().unwrap_or(0)
    }

    pub fn measures(&self) -> Measures {
        Measures {
            circ_len: self.circ_len(),
            total_degree: self.total_degree(),
            support: self.distinct().cloned().collect(),
        }
    }

    /// The mode of the components, `None` for θ.
    pub fn mode(&self) -> Option<Mode> {
        self.runs.first().map(|(b, _)| b.mode())
    }

    /// Multiset union.
    pub fn circ(&self, other: &RigMonomial) -> RigMonomial {
        if self.is_theta() {
            return other.clone();
        }
        if other.is_theta() {
            return self.clone();
        }
        let mut runs = Vec::with_capacity(self.runs.len() + other.runs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let (a, na) = &self.runs[i];
            let (b, nb) = &other.runs[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    runs.push((a.clone(), *na));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    runs.push((b.clone(), *nb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    runs.push((a.clone(), na + nb));
                    i += 1;
                    j += 1;
                }
            }
        }
        runs.extend_from_slice(&self.runs[i..]);
        runs.extend_from_slice(&other.runs[j..]);
        RigMonomial { runs }
    }

    /// Semiring product: all pairwise component products.
    pub fn times(&self, other: &RigMonomial) -> RigMonomial {
        let mut items = Vec::with_capacity(self.runs.len() * other.runs.len());
        for (a, na) in &self.runs {
            for (b, nb) in &other.runs {
                items.push((a.mul(b), na * nb));
            }
        }
        Self::from_weighted(items)
    }

    /// Apply `c ↦ left · c · right` to every component.
    pub fn sandwich(&self, left: &BaseMonomial, right: &BaseMonomial) -> RigMonomial {
        if left.is_one() && right.is_one() {
            return self.clone();
        }
        Self::from_weighted(self.runs.iter().map(|(c, n)| (c.sandwich(left, right), *n)))
    }

    /// Whether `other` is a sub-multiset of `self`.
    pub fn contains(&self, other: &RigMonomial) -> bool {
        let mut i = 0;
        for (b, nb) in &other.runs {
            while i < self.runs.len() && self.runs[i].0 < *b {
                i += 1;
            }
            match self.runs.get(i) {
                Some((a, na)) if a == b && na >= nb => i += 1,
                _ => return false,
            }
        }
        true
    }

    /// Multiset difference `self − other`, if `other ⊆ self`.
    pub fn difference(&self, other: &RigMonomial) -> Option<RigMonomial> {
        let mut runs = Vec::with_capacity(self.runs.len());
        let mut j = 0;
        for (a, na) in &self.runs {
            if j < other.runs.len() && other.runs[j].0 < *a {
                // `other` has a component absent from `self`
                return None;
            }
            if j < other.runs.len() && other.runs[j].0 == *a {
                let nb = other.runs[j].1;
                if nb > *na {
                    return None;
                }
                if nb < *na {
                    runs.push((a.clone(), na - nb));
                }
                j += 1;
            } else {
                runs.push((a.clone(), *na));
            }
        }
        (j == other.runs.len()).then_some(RigMonomial { runs })
    }

    /// Least common multiple with respect to `∘`: the pointwise maximum of
    /// multiplicities, with both cofactors.
    pub fn lcm_circ(&self, other: &RigMonomial) -> Lcm {
        let lcm = Self::from_weighted(
            self.runs
                .iter()
                .map(|(b, n)| (b.clone(), (*n).max(other.multiplicity(b))))
                .chain(
                    other
                        .runs
                        .iter()
                        .filter(|(b, _)| self.multiplicity(b) == 0)
                        .cloned(),
                ),
        );
        let left_cofactor = lcm.difference(self).expect("lcm contains left operand");
        let right_cofactor = lcm.difference(other).expect("lcm contains right operand");
        Lcm {
            lcm,
            left_cofactor,
            right_cofactor,
        }
    }

    /// Whether the two multisets share a component.
    pub fn shares_component(&self, other: &RigMonomial) -> bool {
        self.distinct().any(|b| other.multiplicity(b) > 0)
    }
}
