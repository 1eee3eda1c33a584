//! Shirshov completion, basis verification, minimalization, autoreduction
//! and the word-problem decision.

use std::collections::BTreeMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::composition::{compositions, compositions_within, CompositionRecord};
use crate::error::{Error, Result};
use crate::ordering::{RigKey, RigOrder};
use crate::rewrite::{self, match_contexts, normal_form, ReductionTrace, Relation};
use crate::terms::{Alphabet, Coefficient, Mode, Polynomial, RigMonomial};

/// A presentation in algebra form: monic relations over an ordered alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct System<K> {
    mode: Mode,
    alphabet: Alphabet,
    order: RigOrder,
    relations: Vec<Relation<K>>,
}

/// Outcome of [`System::verify`].
#[derive(Debug, Clone)]
pub struct Verification<K> {
    pub ok: bool,
    pub examined: usize,
    pub records: Vec<CompositionRecord<K>>,
    /// Non-trivial records with the monic normal form of their S-polynomial.
    pub witnesses: Vec<(CompositionRecord<K>, Polynomial<K>)>,
}

impl<K: Coefficient> System<K> {
    /// Build a system from arbitrary nonzero polynomials; each is made monic.
    pub fn new(
        mode: Mode,
        alphabet: Alphabet,
        order: RigOrder,
        polys: impl IntoIterator<Item = Polynomial<K>>,
    ) -> Result<Self> {
        order.check_mode(mode)?;
        let relations = polys
            .into_iter()
            .map(|p| Relation::new(&p, &order))
            .collect::<Result<Vec<_>>>()?;
        for r in &relations {
            if r.leading().mode().is_some_and(|m| m != mode) {
                return Err(Error::ModeMismatch(format!(
                    "relation over {} monomials in a {mode} system",
                    r.leading().mode().unwrap()
                )));
            }
        }
        Ok(System {
            mode,
            alphabet,
            order,
            relations,
        })
    }

    fn with_relations(&self, relations: Vec<Relation<K>>) -> Self {
        System {
            mode: self.mode,
            alphabet: self.alphabet.clone(),
            order: self.order,
            relations,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &RigOrder {
        &self.order
    }

    pub fn relations(&self) -> &[Relation<K>] {
        &self.relations
    }

    pub fn polys(&self) -> impl Iterator<Item = &Polynomial<K>> + '_ {
        self.relations.iter().map(|r| r.poly())
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial<K>) -> Result<(Polynomial<K>, ReductionTrace<K>)> {
        normal_form(f, &self.relations, &self.order)
    }

    pub fn reduce_monomial(&self, m: &RigMonomial) -> Result<Polynomial<K>> {
        rewrite::reduce_monomial(m, &self.relations, &self.order)
    }

    pub fn is_irreducible(&self, m: &RigMonomial) -> bool {
        rewrite::is_irreducible(m, &self.relations, &self.order)
    }

    /// Irreducible monomials with total degree ≤ `max_degree` and at most
    /// `max_len` components.
    pub fn enum_irr(&self, max_degree: usize, max_len: usize) -> Vec<RigMonomial> {
        let symbols: Vec<_> = self.alphabet.symbols().collect();
        rewrite::enum_irr(
            &self.relations,
            self.mode,
            &symbols,
            &self.order,
            max_degree,
            max_len,
        )
    }

    /// Whether every relation is a semiring relation `m − m′`.
    pub fn is_binomial(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.poly().is_semiring_binomial())
    }

    /// All compositions over ordered pairs of relations, self-pairs included.
    pub fn compositions(&self) -> (Vec<CompositionRecord<K>>, usize) {
        let mut records = Vec::new();
        let mut examined = 0;
        for (i, f) in self.relations.iter().enumerate() {
            for (j, g) in self.relations.iter().enumerate() {
                let pc = compositions(f, g, (i, j), self.mode, &self.order);
                examined += pc.examined;
                records.extend(pc.records);
            }
        }
        (records, examined)
    }

    /// Check that every composition reduces to zero.
    pub fn verify(&self) -> Result<Verification<K>> {
        let (records, examined) = self.compositions();
        let mut witnesses = Vec::new();
        for rec in &records {
            let (nf, _) = self.normal_form(&rec.spoly)?;
            if !nf.is_zero() {
                witnesses.push((rec.clone(), self.order.make_monic(&nf)?));
            }
        }
        Ok(Verification {
            ok: witnesses.is_empty(),
            examined,
            records,
            witnesses,
        })
    }

    /// Drop every relation whose leading monomial contains an occurrence of
    /// another kept relation's leading monomial. Relations are scanned in
    /// ascending order of leading monomial and the first one wins.
    pub fn minimalize(&self) -> Self {
        let mut sorted = self.relations.clone();
        sorted.sort_by(|a, b| self.order.compare(a.leading(), b.leading()));
        let mut kept: Vec<Relation<K>> = Vec::new();
        for r in sorted {
            let covered = kept
                .iter()
                .any(|k| !match_contexts(r.leading(), k.leading(), &self.order).is_empty());
            if !covered {
                kept.push(r);
            }
        }
        self.with_relations(kept)
    }

    /// Replace each relation by its normal form against the others until
    /// nothing changes. Expects a minimal system, so leading terms survive.
    pub fn autoreduce(&self) -> Result<Self> {
        let mut rels = self.relations.clone();
        loop {
            let mut changed = false;
            for i in 0..rels.len() {
                let others: Vec<Relation<K>> = rels
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, r)| r.clone())
                    .collect();
                let (nf, _) = normal_form(rels[i].poly(), &others, &self.order)?;
                if nf != *rels[i].poly() {
                    rels[i] = Relation::new(&nf, &self.order)?;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(self.with_relations(rels))
    }

    /// Minimalize, autoreduce and sort ascending by leading monomial.
    pub fn reduced(&self) -> Result<Self> {
        let mut out = self.minimalize().autoreduce()?;
        out.relations
            .sort_by(|a, b| self.order.compare(a.leading(), b.leading()));
        Ok(out)
    }

    /// Run completion with the given limits.
    pub fn complete(&self, limits: &CompletionLimits) -> Result<CompletionReport<K>> {
        Completion::new(self, limits).run()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompletionLimits {
    /// Ambiguities whose largest component degree exceeds this are not
    /// resolved; skipping one makes the run truncated.
    pub max_ambiguity_degree: usize,
    /// Maximum number of compositions processed.
    pub max_steps: usize,
    /// Seed for breaking ties between ambiguities of equal rank. `None`
    /// processes them in insertion order.
    pub seed: Option<u64>,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_ambiguity_degree: 32,
            max_steps: 100_000,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CompletionStatus {
    Complete,
    Truncated,
}

impl fmt::Display for CompletionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompletionStatus::Complete => "Complete",
            CompletionStatus::Truncated => "Truncated",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CompletionStats {
    /// Component pairs looked at while enumerating compositions.
    pub pairs_examined: usize,
    /// Compositions taken off the worklist and reduced.
    pub compositions_processed: usize,
    pub relations_added: usize,
    pub relations_retired: usize,
    /// Largest component degree among ambiguities that were resolved.
    pub max_ambiguity_degree: usize,
    /// Number of verify-and-resume rounds.
    pub rounds: usize,
    /// Whether every relation ever produced was a ±1 binomial, given
    /// binomial input. `None` when the input was not all binomials.
    pub binomial_closure: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct CompletionReport<K> {
    pub basis: System<K>,
    pub status: CompletionStatus,
    pub stats: CompletionStats,
    pub limits: CompletionLimits,
}

/// Three-valued answer to `u ~ v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Equal,
    Distinct,
    Unknown,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Equal => "EQUAL",
            Decision::Distinct => "DISTINCT",
            Decision::Unknown => "UNKNOWN",
        })
    }
}

impl<K: Coefficient> CompletionReport<K> {
    pub fn is_complete(&self) -> bool {
        self.status == CompletionStatus::Complete
    }

    /// Compare normal forms. Equal normal forms always certify congruence;
    /// different ones prove distinctness only for a complete basis.
    pub fn decide_eq(&self, u: &RigMonomial, v: &RigMonomial) -> Result<Decision> {
        let nu = self.basis.reduce_monomial(u)?;
        let nv = self.basis.reduce_monomial(v)?;
        Ok(if nu == nv {
            Decision::Equal
        } else if self.is_complete() {
            Decision::Distinct
        } else {
            Decision::Unknown
        })
    }
}

/// Free-function form of [`CompletionReport::decide_eq`].
pub fn decide_eq<K: Coefficient>(
    u: &RigMonomial,
    v: &RigMonomial,
    report: &CompletionReport<K>,
) -> Result<Decision> {
    report.decide_eq(u, v)
}

type QueueKey = (RigKey, u64, u64);

struct Completion<'a, K> {
    system: &'a System<K>,
    limits: &'a CompletionLimits,
    rng: Option<StdRng>,
    /// Every relation ever added, indexed by id; retired ones stay for
    /// bookkeeping but are no longer used for reduction.
    slots: Vec<Relation<K>>,
    alive: Vec<bool>,
    active_cache: Option<Vec<Relation<K>>>,
    queue: BTreeMap<QueueKey, CompositionRecord<K>>,
    /// Pairs with ambiguities above the degree cap; they truncate the run
    /// unless one side is retired by the end of the drain.
    oversized: Vec<(usize, usize)>,
    seq: u64,
    truncated: bool,
    binomial_input: bool,
    stats: CompletionStats,
}

impl<'a, K: Coefficient> Completion<'a, K> {
    fn new(system: &'a System<K>, limits: &'a CompletionLimits) -> Self {
        let binomial_input = system.is_binomial();
        Completion {
            system,
            limits,
            rng: limits.seed.map(StdRng::seed_from_u64),
            slots: Vec::new(),
            alive: Vec::new(),
            active_cache: None,
            queue: BTreeMap::new(),
            oversized: Vec::new(),
            seq: 0,
            truncated: false,
            binomial_input,
            stats: CompletionStats {
                binomial_closure: binomial_input.then_some(true),
                ..CompletionStats::default()
            },
        }
    }

    fn order(&self) -> &RigOrder {
        &self.system.order
    }

    fn active(&mut self) -> &[Relation<K>] {
        if self.active_cache.is_none() {
            let rels = self
                .slots
                .iter()
                .zip(&self.alive)
                .filter(|(_, &a)| a)
                .map(|(r, _)| r.clone())
                .collect();
            self.active_cache = Some(rels);
        }
        self.active_cache.as_deref().unwrap()
    }

    fn reduce(&mut self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        let order = *self.order();
        let rels = self.active();
        Ok(normal_form(f, rels, &order)?.0)
    }

    fn enqueue(&mut self, records: Vec<CompositionRecord<K>>) {
        for rec in records {
            let key = self.order().sort_key(&rec.ambiguity);
            let tie = self.rng.as_mut().map_or(0, |r| r.gen());
            self.seq += 1;
            self.queue.insert((key, tie, self.seq), rec);
        }
    }

    fn pair(&mut self, i: usize, j: usize) {
        let pc = compositions_within(
            &self.slots[i],
            &self.slots[j],
            (i, j),
            self.system.mode,
            self.order(),
            Some(self.limits.max_ambiguity_degree),
        );
        self.stats.pairs_examined += pc.examined;
        if pc.oversized > 0 {
            self.oversized.push((i, j));
        }
        self.enqueue(pc.records);
    }

    fn check_binomial(&mut self, p: &Polynomial<K>) {
        if self.binomial_input && !p.is_semiring_binomial() {
            self.stats.binomial_closure = Some(false);
        }
    }

    /// Append a new monic relation, interreduce the others against it and
    /// queue its compositions. Relations whose leading term it rewrites are
    /// retired and their normal forms re-added.
    fn add(&mut self, poly: Polynomial<K>) -> Result<()> {
        let mut pending = vec![poly];
        while let Some(p) = pending.pop() {
            let p = self.reduce(&p)?;
            if p.is_zero() {
                continue;
            }
            let rel = Relation::new(&p, self.order())?;
            self.check_binomial(rel.poly());
            let id = self.slots.len();
            self.slots.push(rel);
            self.alive.push(true);
            self.active_cache = None;
            self.stats.relations_added += 1;

            let new_lead = self.slots[id].leading().clone();
            for k in 0..id {
                if !self.alive[k] {
                    continue;
                }
                let lead = self.slots[k].leading();
                if !match_contexts(lead, &new_lead, self.order()).is_empty() {
                    self.alive[k] = false;
                    self.active_cache = None;
                    self.stats.relations_retired += 1;
                    pending.push(self.slots[k].poly().clone());
                }
            }
            // tails of the survivors against the enlarged set
            for k in 0..id {
                if !self.alive[k] {
                    continue;
                }
                let tail = self.slots[k].tail();
                if tail.is_zero() {
                    continue;
                }
                let reduced = self.reduce(&tail)?;
                if reduced != tail {
                    let lead = self.slots[k].leading().clone();
                    let poly = reduced + Polynomial::monomial(lead);
                    self.check_binomial(&poly);
                    self.slots[k] = Relation::new(&poly, self.order())?;
                    self.active_cache = None;
                }
            }
            if !self.alive[id] {
                continue;
            }
            for k in 0..=id {
                if self.alive[k] {
                    self.pair(id, k);
                    if k != id {
                        self.pair(k, id);
                    }
                }
            }
        }
        Ok(())
    }

    /// Process the worklist until it empties or `max_steps` is reached.
    fn drain(&mut self) -> Result<()> {
        while let Some((_, rec)) = self.queue.pop_first() {
            if !self.alive[rec.f_id] || !self.alive[rec.g_id] {
                continue;
            }
            let degree = rec.ambiguity.max_component_degree();
            if degree > self.limits.max_ambiguity_degree {
                self.truncated = true;
                continue;
            }
            if self.stats.compositions_processed >= self.limits.max_steps {
                self.truncated = true;
                self.queue.clear();
                break;
            }
            self.stats.compositions_processed += 1;
            self.stats.max_ambiguity_degree = self.stats.max_ambiguity_degree.max(degree);
            let h = match self.reduce(&rec.spoly) {
                Ok(h) => h,
                Err(Error::ReductionBudget(_)) => {
                    self.truncated = true;
                    continue;
                }
                Err(e) => return Err(e),
            };
            if !h.is_zero() {
                self.add(h)?;
            }
        }
        if self
            .oversized
            .iter()
            .any(|&(i, j)| self.alive[i] && self.alive[j])
        {
            self.truncated = true;
        }
        Ok(())
    }

    fn snapshot(&mut self) -> System<K> {
        let rels = self.active().to_vec();
        self.system.with_relations(rels)
    }

    fn restart(&mut self, polys: Vec<Polynomial<K>>) -> Result<()> {
        self.slots.clear();
        self.alive.clear();
        self.active_cache = None;
        self.queue.clear();
        self.oversized.clear();
        for p in polys {
            self.add(p)?;
        }
        Ok(())
    }

    fn run(mut self) -> Result<CompletionReport<K>> {
        let input: Vec<Polynomial<K>> = self.system.polys().cloned().collect();
        self.restart(input)?;
        let basis = loop {
            self.stats.rounds += 1;
            self.drain()?;
            let basis = self.snapshot().reduced()?;
            if self.truncated {
                break basis;
            }
            // Pairs involving retired relations were skipped, so confirm the
            // result before calling it complete.
            let check = basis.verify()?;
            self.stats.pairs_examined += check.examined;
            if check.ok {
                break basis;
            }
            let mut polys: Vec<_> = basis.polys().cloned().collect();
            polys.extend(check.witnesses.into_iter().map(|(_, nf)| nf));
            self.restart(polys)?;
        };
        for p in basis.polys() {
            self.check_binomial(p);
        }
        Ok(CompletionReport {
            basis,
            status: if self.truncated {
                CompletionStatus::Truncated
            } else {
                CompletionStatus::Complete
            },
            stats: self.stats,
            limits: *self.limits,
        })
    }
}
