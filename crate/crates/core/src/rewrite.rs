//! Occurrence search, elimination of leading terms and normal forms.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ordering::RigOrder;
use crate::terms::{
    monomials_within, BaseMonomial, Coefficient, Mode, Polynomial, RigMonomial, Symbol,
};

/// Default ELT budget per normal form computation.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

/// The substitution `⋆ ↦ (left · ⋆ · right) ∘ pad`.
///
/// Applied to a monomial it multiplies every component on both sides and adds
/// `pad`; applied to θ it yields `pad`. In commutative mode `right` is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    pub left: BaseMonomial,
    pub right: BaseMonomial,
    pub pad: RigMonomial,
}

impl Context {
    pub fn new(left: BaseMonomial, right: BaseMonomial, pad: RigMonomial) -> Self {
        Context { left, right, pad }
    }

    pub fn identity(mode: Mode) -> Self {
        Context {
            left: BaseMonomial::one(mode),
            right: BaseMonomial::one(mode),
            pad: RigMonomial::theta(),
        }
    }

    pub fn apply_monomial(&self, m: &RigMonomial) -> RigMonomial {
        m.sandwich(&self.left, &self.right).circ(&self.pad)
    }

    pub fn apply<K: Coefficient>(&self, f: &Polynomial<K>) -> Polynomial<K> {
        f.map_monomials(|m| self.apply_monomial(m))
    }

    fn ordering_key(&self, other: &Context) -> Ordering {
        self.left
            .cmp(&other.left)
            .then_with(|| self.right.cmp(&other.right))
    }
}

/// A monic relation together with its cached leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation<K> {
    poly: Polynomial<K>,
    leading: RigMonomial,
}

impl<K: Coefficient> Relation<K> {
    /// Normalises `poly` to be monic.
    pub fn new(poly: &Polynomial<K>, order: &RigOrder) -> Result<Self> {
        let poly = order.make_monic(poly)?;
        let leading = order.leading_monomial(&poly)?;
        Ok(Relation { poly, leading })
    }

    pub fn poly(&self) -> &Polynomial<K> {
        &self.poly
    }

    pub fn leading(&self) -> &RigMonomial {
        &self.leading
    }

    /// `s − s̄`.
    pub fn tail(&self) -> Polynomial<K> {
        let mut t = self.poly.clone();
        t.remove_term(&self.leading);
        t
    }
}

/// A match `context[s̄] = m` of relation `relation`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub relation: usize,
    pub context: Context,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep<K> {
    pub coeff: K,
    pub relation: usize,
    pub context: Context,
}

/// The eliminations performed by a normal form computation:
/// `f = Σ coeffᵢ · contextᵢ[sᵢ] + nf(f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace<K> {
    pub steps: Vec<ReductionStep<K>>,
}

impl<K: Coefficient> Default for ReductionTrace<K> {
    fn default() -> Self {
        ReductionTrace { steps: Vec::new() }
    }
}

impl<K: Coefficient> ReductionTrace<K> {
    /// `Σ coeffᵢ · contextᵢ[sᵢ]`.
    pub fn replay(&self, rels: &[Relation<K>]) -> Polynomial<K> {
        self.steps.iter().fold(Polynomial::zero(), |acc, st| {
            acc + st.context.apply(rels[st.relation].poly()).scale(&st.coeff)
        })
    }

    /// Leading monomials `contextᵢ[s̄ᵢ]` of the replayed terms, in step order.
    pub fn step_monomials(&self, rels: &[Relation<K>]) -> Vec<RigMonomial> {
        self.steps
            .iter()
            .map(|st| st.context.apply_monomial(rels[st.relation].leading()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// All contexts `c` with `c[pattern] = m`, ordered by `(left, right)`.
///
/// The search anchors on the greatest component of `pattern`: every
/// component of `m` divisible by it (commutative) or containing it as a
/// factor (words) fixes a candidate `(left, right)`, and the candidate is
/// kept when the whole image `left·pattern·right` is a sub-multiset of `m`.
pub fn match_contexts(m: &RigMonomial, pattern: &RigMonomial, order: &RigOrder) -> Vec<Context> {
    let Some(mode) = pattern.mode().or(m.mode()) else {
        // θ matches θ with the identity context, in either mode
        return vec![Context::identity(Mode::Commutative)];
    };
    if pattern.is_theta() {
        return vec![Context::new(
            BaseMonomial::one(mode),
            BaseMonomial::one(mode),
            m.clone(),
        )];
    }
    let anchor = *order
        .distinct_descending(pattern)
        .first()
        .expect("pattern is not θ");
    let mut out: Vec<Context> = Vec::new();
    let mut consider = |left: BaseMonomial, right: BaseMonomial| {
        let image = pattern.sandwich(&left, &right);
        if let Some(pad) = m.difference(&image) {
            out.push(Context::new(left, right, pad));
        }
    };
    for c in m.distinct() {
        match mode {
            Mode::Commutative => {
                if let Some(a) = c.quotient(anchor) {
                    consider(a, BaseMonomial::one(mode));
                }
            }
            Mode::Noncommutative => {
                for (a, b) in c.factorizations(anchor) {
                    consider(a, b);
                }
            }
        }
    }
    out.sort_by(|a, b| a.ordering_key(b));
    out.dedup();
    out
}

/// All occurrences of leading monomials of `rels` in `m`, ordered by
/// relation index, then by context.
pub fn find_occurrences<K: Coefficient>(
    m: &RigMonomial,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> Vec<Occurrence> {
    rels.iter()
        .enumerate()
        .flat_map(|(i, r)| {
            match_contexts(m, r.leading(), order)
                .into_iter()
                .map(move |context| Occurrence {
                    relation: i,
                    context,
                })
        })
        .collect()
}

/// The first element of [`find_occurrences`], computed lazily.
pub fn first_occurrence<K: Coefficient>(
    m: &RigMonomial,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> Option<Occurrence> {
    rels.iter().enumerate().find_map(|(i, r)| {
        match_contexts(m, r.leading(), order)
            .into_iter()
            .next()
            .map(|context| Occurrence {
                relation: i,
                context,
            })
    })
}

pub fn is_irreducible<K: Coefficient>(
    m: &RigMonomial,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> bool {
    rels.iter()
        .all(|r| match_contexts(m, r.leading(), order).is_empty())
}

/// One elimination of the leading term of `f` by the occurrence `occ`.
pub fn elt<K: Coefficient>(
    f: &Polynomial<K>,
    occ: &Occurrence,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> Result<Polynomial<K>> {
    let (lm, c) = order.leading(f)?;
    let rel = rels.get(occ.relation).ok_or(Error::OccurrenceMismatch)?;
    if occ.context.apply_monomial(rel.leading()) != *lm {
        return Err(Error::OccurrenceMismatch);
    }
    let c = c.clone();
    Ok(f - &occ.context.apply(rel.poly()).scale(&c))
}

/// Eliminate the leading term of `f` with its first occurrence.
pub fn elt_first<K: Coefficient>(
    f: &Polynomial<K>,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> Result<Polynomial<K>> {
    let lm = order.leading_monomial(f)?;
    let occ = first_occurrence(&lm, rels, order).ok_or(Error::Irreducible)?;
    elt(f, &occ, rels, order)
}

/// Full normal form with the default step budget.
pub fn normal_form<K: Coefficient>(
    f: &Polynomial<K>,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> Result<(Polynomial<K>, ReductionTrace<K>)> {
    normal_form_with_budget(f, rels, order, DEFAULT_STEP_BUDGET)
}

/// Reduce every support monomial, greatest first, until all lie in Irr(S).
pub fn normal_form_with_budget<K: Coefficient>(
    f: &Polynomial<K>,
    rels: &[Relation<K>],
    order: &RigOrder,
    budget: usize,
) -> Result<(Polynomial<K>, ReductionTrace<K>)> {
    let mut rest = f.clone();
    let mut nf = Polynomial::zero();
    let mut trace = ReductionTrace::default();
    while let Ok((lm, c)) = order.leading(&rest) {
        let (lm, c) = (lm.clone(), c.clone());
        match first_occurrence(&lm, rels, order) {
            Some(occ) => {
                if trace.steps.len() >= budget {
                    return Err(Error::ReductionBudget(budget));
                }
                let rel = &rels[occ.relation];
                rest = rest - occ.context.apply(rel.poly()).scale(&c);
                trace.steps.push(ReductionStep {
                    coeff: c,
                    relation: occ.relation,
                    context: occ.context,
                });
            }
            None => {
                rest.remove_term(&lm);
                nf.add_term(lm, c);
            }
        }
    }
    Ok((nf, trace))
}

/// Normal form of a single monomial.
pub fn reduce_monomial<K: Coefficient>(
    m: &RigMonomial,
    rels: &[Relation<K>],
    order: &RigOrder,
) -> Result<Polynomial<K>> {
    normal_form(&Polynomial::monomial(m.clone()), rels, order).map(|(nf, _)| nf)
}

/// Irreducible monomials within the bounds, ascending in `order`.
pub fn enum_irr<K: Coefficient>(
    rels: &[Relation<K>],
    mode: Mode,
    symbols: &[Symbol],
    order: &RigOrder,
    max_degree: usize,
    max_len: usize,
) -> Vec<RigMonomial> {
    let mut out: Vec<RigMonomial> = monomials_within(mode, symbols, max_degree, max_len)
        .into_iter()
        .filter(|m| is_irreducible(m, rels, order))
        .collect();
    out.sort_by(|a, b| order.compare(a, b));
    out
}
