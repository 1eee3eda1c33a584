//! Compositions (ambiguities and their S-polynomials) between two relations.
//!
//! Commutative mode pairs every component `u` of `f̄` with every component `v`
//! of `ḡ`, multiplies `f` and `g` by the cofactors of `lcm(u, v)` and closes the
//! two leading monomials up to their `∘`-lcm.
//!
//! Noncommutative mode has two kinds per component pair `(p, q)`:
//! intersections, where a proper suffix of `p` is a proper prefix of `q`
//! (`p = b·o`, `q = o·a`, giving `f·a` against `b·g`), and inclusions, where
//! `p = a·q·b` (giving `f` against `a·g·b`). Placements in which the two
//! words do not overlap at all are not enumerated.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ordering::RigOrder;
use crate::rewrite::{normal_form, Context, Relation};
use crate::terms::{BaseMonomial, Coefficient, Mode, Polynomial, RigMonomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    Intersection,
    Inclusion,
    Commutative,
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::Commutative => "commutative",
        })
    }
}

/// One ambiguity `w` between relations `f_id` and `g_id`, with
/// `spoly = f_context[f] − g_context[g]` and `f_context[f̄] = g_context[ḡ] = w`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionRecord<K> {
    pub f_id: usize,
    pub g_id: usize,
    pub kind: CompositionKind,
    /// Component `p` of `f̄` and `q` of `ḡ` that produced the ambiguity.
    pub site: (BaseMonomial, BaseMonomial),
    pub f_context: Context,
    pub g_context: Context,
    pub ambiguity: RigMonomial,
    pub spoly: Polynomial<K>,
}

impl<K: Coefficient> CompositionRecord<K> {
    /// Recompute the S-polynomial from the stored contexts.
    pub fn replay(&self, f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
        self.f_context.apply(f) - self.g_context.apply(g)
    }
}

/// Records produced for one ordered pair, plus the number of component
/// pairs examined.
#[derive(Debug, Clone)]
pub struct PairCompositions<K> {
    pub records: Vec<CompositionRecord<K>>,
    pub examined: usize,
    /// Ambiguities skipped for exceeding the degree cap.
    pub oversized: usize,
}

/// Outcome of a triviality test.
#[derive(Debug, Clone, PartialEq)]
pub enum Triviality<K> {
    Trivial,
    /// The nonzero normal form that survived reduction.
    Witness(Polynomial<K>),
}

impl<K> Triviality<K> {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Triviality::Trivial)
    }
}

struct Builder<'a, K> {
    f: &'a Relation<K>,
    g: &'a Relation<K>,
    f_id: usize,
    g_id: usize,
    order: &'a RigOrder,
    cap: Option<usize>,
    oversized: usize,
    out: Vec<CompositionRecord<K>>,
}

impl<K: Coefficient> Builder<'_, K> {
    /// Close `f_ctx[f̄]` and `g_ctx[ḡ]` to their lcm and record the S-polynomial.
    fn push(
        &mut self,
        kind: CompositionKind,
        site: (&BaseMonomial, &BaseMonomial),
        (fl, fr): (BaseMonomial, BaseMonomial),
        (gl, gr): (BaseMonomial, BaseMonomial),
    ) {
        let fw = self.f.leading().sandwich(&fl, &fr);
        let gw = self.g.leading().sandwich(&gl, &gr);
        let lcm = fw.lcm_circ(&gw);
        if self
            .cap
            .is_some_and(|cap| lcm.lcm.max_component_degree() > cap)
        {
            self.oversized += 1;
            return;
        }
        let f_context = Context::new(fl, fr, lcm.left_cofactor);
        let g_context = Context::new(gl, gr, lcm.right_cofactor);
        let duplicate = self
            .out
            .iter()
            .any(|r| r.kind == kind && r.f_context == f_context && r.g_context == g_context);
        if duplicate {
            return;
        }
        let spoly = f_context.apply(self.f.poly()) - g_context.apply(self.g.poly());
        if spoly.is_zero() {
            return;
        }
        let below = self
            .order
            .leading(&spoly)
            .map(|(lm, _)| self.order.compare(lm, &lcm.lcm) == Ordering::Less)
            .unwrap_or(true);
        assert!(below, "S-polynomial not below its ambiguity");
        self.out.push(CompositionRecord {
            f_id: self.f_id,
            g_id: self.g_id,
            kind,
            site: (site.0.clone(), site.1.clone()),
            f_context,
            g_context,
            ambiguity: lcm.lcm,
            spoly,
        });
    }
}

/// Compositions of the ordered pair `(f, g)` of monic relations.
pub fn compositions<K: Coefficient>(
    f: &Relation<K>,
    g: &Relation<K>,
    ids: (usize, usize),
    mode: Mode,
    order: &RigOrder,
) -> PairCompositions<K> {
    compositions_within(f, g, ids, mode, order, None)
}

/// Like [`compositions`], but ambiguities whose largest component degree
/// exceeds `cap` are only counted, without building their S-polynomials.
pub fn compositions_within<K: Coefficient>(
    f: &Relation<K>,
    g: &Relation<K>,
    ids: (usize, usize),
    mode: Mode,
    order: &RigOrder,
    cap: Option<usize>,
) -> PairCompositions<K> {
    let mut b = Builder {
        f,
        g,
        f_id: ids.0,
        g_id: ids.1,
        order,
        cap,
        oversized: 0,
        out: Vec::new(),
    };
    let mut examined = 0;
    let one = BaseMonomial::one(mode);
    match mode {
        Mode::Commutative => {
            for u in f.leading().components() {
                for v in g.leading().components() {
                    examined += 1;
                    let l = u.lcm(v);
                    let a = l.quotient(u).expect("lcm is a multiple");
                    let c = l.quotient(v).expect("lcm is a multiple");
                    b.push(
                        CompositionKind::Commutative,
                        (u, v),
                        (a, one.clone()),
                        (c, one.clone()),
                    );
                }
            }
        }
        Mode::Noncommutative => {
            for p in f.leading().distinct() {
                for q in g.leading().distinct() {
                    examined += 1;
                    let (lp, lq) = (p.degree(), q.degree());
                    // proper overlaps: p = b·o, q = o·a with a, b, o nonempty
                    for k in 1..lp.min(lq) {
                        if p.letters()[lp - k..] == q.letters()[..k] {
                            let left = p.slice(0, lp - k);
                            let right = q.slice(k, lq);
                            b.push(
                                CompositionKind::Intersection,
                                (p, q),
                                (one.clone(), right),
                                (left, one.clone()),
                            );
                        }
                    }
                    for (left, right) in p.factorizations(q) {
                        b.push(
                            CompositionKind::Inclusion,
                            (p, q),
                            (one.clone(), one.clone()),
                            (left, right),
                        );
                    }
                }
            }
        }
    }
    PairCompositions {
        records: b.out,
        examined,
        oversized: b.oversized,
    }
}

fn monic_pair<K: Coefficient>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    order: &RigOrder,
) -> Result<(Relation<K>, Relation<K>)> {
    if !order.is_monic(f) || !order.is_monic(g) {
        return Err(Error::NotMonic);
    }
    Ok((Relation::new(f, order)?, Relation::new(g, order)?))
}

/// Commutative compositions of two monic polynomials (ids 0 and 1).
pub fn comm_compositions<K: Coefficient>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    order: &RigOrder,
) -> Result<PairCompositions<K>> {
    let (f, g) = monic_pair(f, g, order)?;
    Ok(compositions(&f, &g, (0, 1), Mode::Commutative, order))
}

/// Intersection and inclusion compositions of two monic polynomials over
/// words (ids 0 and 1).
pub fn nc_compositions<K: Coefficient>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    order: &RigOrder,
) -> Result<PairCompositions<K>> {
    let (f, g) = monic_pair(f, g, order)?;
    Ok(compositions(&f, &g, (0, 1), Mode::Noncommutative, order))
}

/// Whether `h` reduces to zero, given that it lies below the ambiguity `w`.
///
/// A full reduction to zero is an expression `h = Σ αᵢ cᵢ[sᵢ]` whose terms all
/// lie at or below `h̄ < w`, hence a certificate of triviality mod `(S, w)`.
pub fn is_trivial<K: Coefficient>(
    h: &Polynomial<K>,
    rels: &[Relation<K>],
    order: &RigOrder,
    w: &RigMonomial,
) -> Result<Triviality<K>> {
    if h.is_zero() {
        return Ok(Triviality::Trivial);
    }
    let lm = order.leading_monomial(h)?;
    if order.compare(&lm, w) != Ordering::Less {
        return Err(Error::NotBelowAmbiguity);
    }
    let (nf, _) = normal_form(h, rels, order)?;
    if nf.is_zero() {
        Ok(Triviality::Trivial)
    } else {
        Ok(Triviality::Witness(order.make_monic(&nf)?))
    }
}
