//! Bounded brute-force congruence closure, the ground truth for small cases.
//!
//! The search applies every defining relation, in both directions, at every
//! place it fits. It shares only the monomial arithmetic of [`crate::terms`]
//! with the engine: occurrences are found by trying every divisor or every
//! prefix/suffix split of every component, not by the anchored search used
//! for reduction.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::rewrite::Context;
use crate::terms::{base_monomials, BaseMonomial, Mode, RigMonomial, Symbol};

/// Which degree [`Bounds::max_degree`] limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeMeasure {
    /// Sum of the component degrees.
    #[default]
    Total,
    /// Largest component degree. Needed when every neighbour of a monomial
    /// is heavier in total, as for `x⁷` under `x = 1 ∘ x²`.
    Component,
}

/// Limits on the explored part of a congruence class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_degree: usize,
    pub max_len: usize,
    pub max_expansions: usize,
    pub measure: DegreeMeasure,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_degree: 10,
            max_len: 8,
            max_expansions: 100_000,
            measure: DegreeMeasure::Total,
        }
    }
}

impl Bounds {
    fn degree(&self, m: &RigMonomial) -> usize {
        match self.measure {
            DegreeMeasure::Total => m.total_degree(),
            DegreeMeasure::Component => m.max_component_degree(),
        }
    }

    fn admits(&self, m: &RigMonomial) -> bool {
        self.degree(m) <= self.max_degree && m.circ_len() <= self.max_len
    }

    /// Largest multiplier degree that can still fit next to `m`.
    fn room(&self, m: &RigMonomial) -> usize {
        match self.measure {
            DegreeMeasure::Total => self.max_degree.saturating_sub(m.total_degree()),
            DegreeMeasure::Component => self.max_degree,
        }
    }
}

/// The defining relations of a presentation as plain pairs.
#[derive(Debug, Clone)]
pub struct Rules {
    pub mode: Mode,
    pub symbols: Vec<Symbol>,
    pub pairs: Vec<(RigMonomial, RigMonomial)>,
}

impl Rules {
    pub fn new(mode: Mode, symbols: Vec<Symbol>, pairs: Vec<(RigMonomial, RigMonomial)>) -> Self {
        Rules {
            mode,
            symbols,
            pairs,
        }
    }

    fn sides(&self, relation: usize, forward: bool) -> (&RigMonomial, &RigMonomial) {
        let (l, r) = &self.pairs[relation];
        if forward {
            (l, r)
        } else {
            (r, l)
        }
    }
}

/// One application of relation `relation`: `context[from] ↦ context[to]`,
/// where `forward` means `from` is the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStep {
    pub relation: usize,
    pub forward: bool,
    pub context: Context,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPath {
    pub start: RigMonomial,
    pub steps: Vec<WitnessStep>,
}

impl WitnessPath {
    /// Re-apply every step, checking that each one matches the current
    /// monomial. Returns the visited monomials, or `None` on a mismatch.
    pub fn replay(&self, rules: &Rules) -> Option<Vec<RigMonomial>> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for st in &self.steps {
            if st.relation >= rules.pairs.len() {
                return None;
            }
            let (from, to) = rules.sides(st.relation, st.forward);
            if st.context.apply_monomial(from) != cur {
                return None;
            }
            cur = st.context.apply_monomial(to);
            out.push(cur.clone());
        }
        Some(out)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureOutcome {
    Congruent(WitnessPath),
    /// Not reached within the bounds. This proves nothing.
    NotFoundWithinBounds,
}

impl ClosureOutcome {
    pub fn is_congruent(&self) -> bool {
        matches!(self, ClosureOutcome::Congruent(_))
    }
}

/// Every divisor of a commutative monomial.
fn divisors(b: &BaseMonomial) -> Vec<BaseMonomial> {
    let runs = b.letter_runs();
    let mut out = vec![Vec::new()];
    for (s, n) in runs {
        let mut next = Vec::new();
        for d in &out {
            for k in 0..=n {
                let mut v: Vec<Symbol> = d.clone();
                v.extend(std::iter::repeat_n(s, k));
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|v| BaseMonomial::from_letters(Mode::Commutative, v))
        .collect()
}

/// Candidate `(a, b)` multipliers read off the components of `m`.
fn multipliers(m: &RigMonomial, mode: Mode) -> BTreeSet<(BaseMonomial, BaseMonomial)> {
    let one = BaseMonomial::one(mode);
    let mut out = BTreeSet::new();
    for c in m.distinct() {
        match mode {
            Mode::Commutative => {
                for d in divisors(c) {
                    out.insert((d, one.clone()));
                }
            }
            Mode::Noncommutative => {
                let n = c.degree();
                for i in 0..=n {
                    for j in i..=n {
                        out.insert((c.slice(0, i), c.slice(j, n)));
                    }
                }
            }
        }
    }
    out
}

/// All contexts `c` with `c[side] = m` such that `c[other]` fits the bounds.
fn contexts_for(
    m: &RigMonomial,
    side: &RigMonomial,
    other: &RigMonomial,
    rules: &Rules,
    bounds: &Bounds,
) -> Vec<Context> {
    let mode = rules.mode;
    if side.is_theta() {
        // θ sits in every monomial; the other side may be inserted with any
        // multipliers that keep the result within bounds
        if other.is_theta() {
            return Vec::new();
        }
        let room = bounds.room(m);
        let bases = base_monomials(mode, &rules.symbols, room);
        let one = BaseMonomial::one(mode);
        let mut out = Vec::new();
        for a in &bases {
            let rights: &[BaseMonomial] = match mode {
                Mode::Commutative => std::slice::from_ref(&one),
                Mode::Noncommutative => &bases,
            };
            for b in rights {
                let c = Context::new(a.clone(), b.clone(), m.clone());
                if bounds.admits(&c.apply_monomial(other)) {
                    out.push(c);
                }
            }
        }
        return out;
    }
    multipliers(m, mode)
        .into_iter()
        .filter_map(|(a, b)| {
            let image = side.sandwich(&a, &b);
            m.difference(&image).map(|pad| Context::new(a, b, pad))
        })
        .collect()
}

/// Monomials one relation application away from `m`, within bounds.
pub fn neighbours(
    m: &RigMonomial,
    rules: &Rules,
    bounds: &Bounds,
) -> Vec<(WitnessStep, RigMonomial)> {
    let mut out = Vec::new();
    for relation in 0..rules.pairs.len() {
        for forward in [true, false] {
            let (from, to) = rules.sides(relation, forward);
            for context in contexts_for(m, from, to, rules, bounds) {
                let next = context.apply_monomial(to);
                if bounds.admits(&next) {
                    out.push((
                        WitnessStep {
                            relation,
                            forward,
                            context,
                        },
                        next,
                    ));
                }
            }
        }
    }
    out
}

struct Search {
    parent: HashMap<RigMonomial, Option<(RigMonomial, WitnessStep)>>,
    order: Vec<RigMonomial>,
}

fn bfs(u: &RigMonomial, rules: &Rules, bounds: &Bounds, target: Option<&RigMonomial>) -> Search {
    let mut parent = HashMap::new();
    parent.insert(u.clone(), None);
    let mut order = vec![u.clone()];
    let mut queue = VecDeque::from([u.clone()]);
    let mut expansions = 0;
    if target == Some(u) {
        return Search { parent, order };
    }
    while let Some(m) = queue.pop_front() {
        if expansions >= bounds.max_expansions {
            break;
        }
        expansions += 1;
        for (step, next) in neighbours(&m, rules, bounds) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((m.clone(), step)));
            order.push(next.clone());
            if target == Some(&next) {
                return Search { parent, order };
            }
            queue.push_back(next);
        }
    }
    Search { parent, order }
}

/// Breadth-first search for `v` in the congruence class of `u`.
pub fn closure_eq(
    u: &RigMonomial,
    v: &RigMonomial,
    rules: &Rules,
    bounds: &Bounds,
) -> ClosureOutcome {
    let search = bfs(u, rules, bounds, Some(v));
    if !search.parent.contains_key(v) {
        return ClosureOutcome::NotFoundWithinBounds;
    }
    let mut steps = Vec::new();
    let mut cur = v.clone();
    while let Some(Some((prev, step))) = search.parent.get(&cur) {
        steps.push(step.clone());
        cur = prev.clone();
    }
    steps.reverse();
    ClosureOutcome::Congruent(WitnessPath {
        start: u.clone(),
        steps,
    })
}

/// Everything reachable from `u` within bounds.
pub fn closure_class(u: &RigMonomial, rules: &Rules, bounds: &Bounds) -> BTreeSet<RigMonomial> {
    bfs(u, rules, bounds, None).order.into_iter().collect()
}

/// The congruence of `(ℕ, +, ·)` generated by `pairs`, restricted to
/// `{0, …, bound}`, as a class label per element.
///
/// Additive translation suffices: `a ~ b` gives `ka ~ kb` by adding
/// repeatedly. Chains may climb above `bound`, so the union-find runs on a
/// larger window whose margin covers every Bezout-style detour between the
/// pair differences.
pub fn nat_closure(pairs: &[(u64, u64)], bound: u64) -> Vec<usize> {
    let top = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    let limit = (bound + 2 * top * top + 2 * top + 2) as usize;
    let mut parent: Vec<usize> = (0..=limit).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in pairs {
        let (a, b) = (a as usize, b as usize);
        let hi = a.max(b);
        for k in 0..=(limit - hi) {
            let (x, y) = (find(&mut parent, a + k), find(&mut parent, b + k));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    (0..=bound as usize).map(|x| find(&mut parent, x)).collect()
}
