//! Strategies and property checks shared by the property suites and the
//! acceptance runner.

#![allow(dead_code)]

use std::cmp::Ordering;

use gsrig::frontend::{parse_expr, render_monomial};
use gsrig::presets::preset;
use gsrig::rewrite::{match_contexts, Relation};
use gsrig::terms::monomials_within;
use gsrig::{
    Alphabet, BaseMonomial, CompletionLimits, Context, Mode, Polynomial, QSystem, Rational,
    RigMonomial, RigOrder, Symbol,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub type Check = Result<(), TestCaseError>;

/// Run a property outside the `proptest!` macro, for the acceptance runner.
pub fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Check,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn symbols(n: usize) -> Vec<Symbol> {
    (0..n as u16).map(Symbol).collect()
}

pub fn alphabet(n: usize) -> Alphabet {
    Alphabet::new(["x", "y", "z"].into_iter().take(n)).unwrap()
}

pub fn x(n: usize) -> BaseMonomial {
    BaseMonomial::power_of(Mode::Commutative, Symbol(0), n)
}

/// `x^a ∘ x^b ∘ …` in one commutative variable.
pub fn xs(degrees: &[usize]) -> RigMonomial {
    RigMonomial::from_components(degrees.iter().map(|&d| x(d)))
}

pub fn preset_basis(name: &str) -> QSystem {
    preset(name).unwrap().basis.unwrap().system().unwrap()
}

pub fn preset_defining(name: &str) -> QSystem {
    preset(name).unwrap().presentation.system().unwrap()
}

/// The three (mode, order) pairs the engine supports.
pub fn setting() -> impl Strategy<Value = (Mode, RigOrder)> {
    prop_oneof![
        Just((Mode::Commutative, RigOrder::deg_lex())),
        Just((Mode::Noncommutative, RigOrder::deg_lex())),
        Just((Mode::Noncommutative, RigOrder::deg_rtl_lex())),
    ]
}

pub fn base(mode: Mode, nsyms: usize, max_deg: usize) -> impl Strategy<Value = BaseMonomial> {
    prop::collection::vec(0..nsyms as u16, 0..=max_deg)
        .prop_map(move |v| BaseMonomial::from_letters(mode, v.into_iter().map(Symbol).collect()))
}

pub fn rig(
    mode: Mode,
    nsyms: usize,
    max_deg: usize,
    max_len: usize,
) -> impl Strategy<Value = RigMonomial> {
    prop::collection::vec(base(mode, nsyms, max_deg), 0..=max_len)
        .prop_map(RigMonomial::from_components)
}

pub fn nonempty_rig(
    mode: Mode,
    nsyms: usize,
    max_deg: usize,
    max_len: usize,
) -> impl Strategy<Value = RigMonomial> {
    prop::collection::vec(base(mode, nsyms, max_deg), 1..=max_len.max(1))
        .prop_map(RigMonomial::from_components)
}

pub fn context(
    mode: Mode,
    nsyms: usize,
    max_deg: usize,
    max_len: usize,
) -> impl Strategy<Value = Context> {
    let right = match mode {
        Mode::Commutative => Just(BaseMonomial::one(mode)).boxed(),
        Mode::Noncommutative => base(mode, nsyms, max_deg).boxed(),
    };
    (
        base(mode, nsyms, max_deg),
        right,
        rig(mode, nsyms, max_deg, max_len),
    )
        .prop_map(|(l, r, pad)| Context::new(l, r, pad))
}

pub fn poly(
    mode: Mode,
    nsyms: usize,
    max_deg: usize,
    max_len: usize,
    terms: usize,
) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((rig(mode, nsyms, max_deg, max_len), -3i64..=3), 0..=terms).prop_map(
        |ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(m, c)| (m, Rational::from_integer(c.into()))),
            )
        },
    )
}

/// A setting with three monomials in it.
pub fn order_triple() -> impl Strategy<Value = (RigOrder, [RigMonomial; 3])> {
    setting().prop_flat_map(|(mode, order)| {
        let m = || rig(mode, 2, 4, 4);
        (Just(order), [m(), m(), m()])
    })
}

/// A setting with two monomials and a context.
pub fn order_context() -> impl Strategy<Value = (RigOrder, RigMonomial, RigMonomial, Context)> {
    setting().prop_flat_map(|(mode, order)| {
        (
            Just(order),
            rig(mode, 2, 4, 4),
            rig(mode, 2, 4, 4),
            context(mode, 2, 3, 2),
        )
    })
}

// terms

pub fn circ_laws(a: &RigMonomial, b: &RigMonomial, c: &RigMonomial) -> Check {
    prop_assert_eq!(a.circ(b), b.circ(a));
    prop_assert_eq!(a.circ(b).circ(c), a.circ(&b.circ(c)));
    prop_assert_eq!(a.circ(&RigMonomial::theta()), a.clone());
    prop_assert_eq!(a.circ(b).circ_len(), a.circ_len() + b.circ_len());
    Ok(())
}

pub fn times_laws(mode: Mode, a: &RigMonomial, b: &RigMonomial, c: &RigMonomial) -> Check {
    let one = RigMonomial::one(mode);
    let theta = RigMonomial::theta();
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    prop_assert_eq!(a.times(&one), a.clone());
    prop_assert_eq!(one.times(a), a.clone());
    prop_assert_eq!(a.times(&theta), theta.clone());
    prop_assert_eq!(theta.times(a), theta);
    prop_assert_eq!(a.times(&b.circ(c)), a.times(b).circ(&a.times(c)));
    prop_assert_eq!(b.circ(c).times(a), b.times(a).circ(&c.times(a)));
    if mode == Mode::Commutative {
        prop_assert_eq!(a.times(b), b.times(a));
    }
    Ok(())
}

pub fn canonical_form(items: &[BaseMonomial], shuffled: &[BaseMonomial]) -> Check {
    let a = RigMonomial::from_components(items.iter().cloned());
    prop_assert_eq!(
        RigMonomial::from_components(a.components().cloned()),
        a.clone()
    );
    prop_assert_eq!(RigMonomial::from_components(shuffled.iter().cloned()), a);
    Ok(())
}

pub fn lcm_law(m: &RigMonomial, n: &RigMonomial) -> Check {
    let l = m.lcm_circ(n);
    prop_assert_eq!(m.circ(&l.left_cofactor), l.lcm.clone());
    prop_assert_eq!(n.circ(&l.right_cofactor), l.lcm.clone());
    let shared: usize = m
        .distinct()
        .map(|b| m.multiplicity(b).min(n.multiplicity(b)) as usize)
        .sum();
    prop_assert_eq!(l.lcm.circ_len(), m.circ_len() + n.circ_len() - shared);
    Ok(())
}

pub fn polynomial_laws(f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Check {
    prop_assert_eq!(f + g, g + f);
    prop_assert_eq!(&(f + g) - g, f.clone());
    prop_assert!((f + &(-f.clone())).is_zero());
    prop_assert_eq!(f.circ(g), g.circ(f));
    prop_assert_eq!(f.circ(&g.circ(h)), f.circ(g).circ(h));
    prop_assert_eq!(f.times(&g.times(h)), f.times(g).times(h));
    prop_assert_eq!(f.times(&(g + h)), &f.times(g) + &f.times(h));
    prop_assert_eq!(f.circ(&(g + h)), &f.circ(g) + &f.circ(h));
    Ok(())
}

// ordering

pub fn total_order(order: &RigOrder, [a, b, c]: &[RigMonomial; 3]) -> Check {
    let ab = order.compare(a, b);
    prop_assert_eq!(ab, order.compare(b, a).reverse());
    prop_assert_eq!(ab == Ordering::Equal, a == b);
    if ab != Ordering::Greater && order.compare(b, c) != Ordering::Greater {
        prop_assert_ne!(order.compare(a, c), Ordering::Greater);
    }
    if ab == Ordering::Less && order.compare(b, c) == Ordering::Less {
        prop_assert_eq!(order.compare(a, c), Ordering::Less);
    }
    for m in [a, b, c] {
        if !m.is_theta() {
            prop_assert_eq!(order.compare(&RigMonomial::theta(), m), Ordering::Less);
        }
    }
    // the sort key realises the same order
    prop_assert_eq!(order.sort_key(a).cmp(&order.sort_key(b)), ab);
    Ok(())
}

pub fn context_compatible(
    order: &RigOrder,
    m: &RigMonomial,
    n: &RigMonomial,
    c: &Context,
) -> Check {
    let (hi, lo) = match order.compare(m, n) {
        Ordering::Greater => (m, n),
        Ordering::Less => (n, m),
        Ordering::Equal => return Ok(()),
    };
    prop_assert_eq!(
        order.compare(&c.apply_monomial(hi), &c.apply_monomial(lo)),
        Ordering::Greater,
        "{:?} > {:?} not preserved by {:?}",
        hi,
        lo,
        c
    );
    Ok(())
}

/// `x³ > x ∘ x` must survive `⋆ ↦ x·⋆` (giving `x⁴ > x² ∘ x²`).
pub fn regression_cube_vs_square() -> Check {
    let mut settings = vec![(Mode::Commutative, RigOrder::deg_lex())];
    settings.push((Mode::Noncommutative, RigOrder::deg_lex()));
    settings.push((Mode::Noncommutative, RigOrder::deg_rtl_lex()));
    for (mode, order) in settings {
        let xb = |n| BaseMonomial::power_of(mode, Symbol(0), n);
        let cube = RigMonomial::singleton(xb(3));
        let pair = RigMonomial::circ_power(xb(1), 2);
        prop_assert_eq!(order.compare(&cube, &pair), Ordering::Greater);
        let c = Context::new(xb(1), BaseMonomial::one(mode), RigMonomial::theta());
        let (a, b) = (c.apply_monomial(&cube), c.apply_monomial(&pair));
        prop_assert_eq!(&a, &RigMonomial::singleton(xb(4)));
        prop_assert_eq!(&b, &RigMonomial::circ_power(xb(2), 2));
        prop_assert_eq!(order.compare(&a, &b), Ordering::Greater);
    }
    Ok(())
}

/// A random walk that only ever moves to a smaller monomial inside a finite
/// window stops within the size of the window below its start.
pub fn descending_walk(
    order: &RigOrder,
    mode: Mode,
    start: &RigMonomial,
    picks: &[usize],
) -> Check {
    let window = monomials_within(mode, &symbols(2), 4, 3);
    let below = |m: &RigMonomial| -> Vec<RigMonomial> {
        window
            .iter()
            .filter(|n| order.less(n, m))
            .cloned()
            .collect()
    };
    let limit = below(start).len();
    let mut cur = start.clone();
    let mut steps = 0;
    for &p in picks.iter().cycle().take(limit + 1) {
        let smaller = below(&cur);
        if smaller.is_empty() {
            break;
        }
        cur = smaller[p % smaller.len()].clone();
        steps += 1;
    }
    prop_assert!(steps <= limit);
    prop_assert!(below(&cur).is_empty() || steps < limit + 1);
    Ok(())
}

// rewrite

pub fn trace_identity(system: &QSystem, f: &Polynomial) -> Check {
    let order = system.order();
    let rels = system.relations();
    let (nf, trace) = system
        .normal_form(f)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(f - &trace.replay(rels), nf.clone());
    let (again, t2) = system
        .normal_form(&nf)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&again, &nf);
    prop_assert!(t2.is_empty());
    for m in nf.support() {
        prop_assert!(system.is_irreducible(m));
    }
    if !nf.is_zero() {
        let a = order.leading_monomial(&nf).unwrap();
        let b = order.leading_monomial(f).unwrap();
        prop_assert_ne!(order.compare(&a, &b), Ordering::Greater);
    }
    // each step's leading monomial lies at or below the input's leading term
    if let Ok(top) = order.leading_monomial(f) {
        for m in trace.step_monomials(rels) {
            prop_assert_ne!(order.compare(&m, &top), Ordering::Greater);
        }
    }
    Ok(())
}

/// Steps rewrite the greatest remaining monomial each time, so their leading
/// monomials strictly decrease when the input is a single monomial.
pub fn trace_decreasing(system: &QSystem, m: &RigMonomial) -> Check {
    let order = system.order();
    let (_, trace) = system
        .normal_form(&Polynomial::monomial(m.clone()))
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    let steps = trace.step_monomials(system.relations());
    for w in steps.windows(2) {
        prop_assert_eq!(order.compare(&w[0], &w[1]), Ordering::Greater);
    }
    Ok(())
}

pub fn relation_in_context_reduces(system: &QSystem, which: usize, c: &Context) -> Check {
    let rels = system.relations();
    let r = &rels[which % rels.len()];
    let (nf, _) = system
        .normal_form(&c.apply(r.poly()))
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(nf.is_zero());
    Ok(())
}

// composition

/// A small system of random semiring relations; sides that collide are
/// dropped.
pub fn random_system(
    mode: Mode,
    order: RigOrder,
    pairs: Vec<(RigMonomial, RigMonomial)>,
) -> Option<QSystem> {
    let polys: Vec<Polynomial> = pairs
        .into_iter()
        .filter(|(l, r)| l != r)
        .map(|(l, r)| Polynomial::binomial(l, r))
        .collect();
    if polys.is_empty() {
        return None;
    }
    QSystem::new(mode, alphabet(2), order, polys).ok()
}

pub fn system_strategy(max_rels: usize) -> impl Strategy<Value = Option<QSystem>> {
    prop_oneof![
        Just((Mode::Commutative, RigOrder::deg_lex(), 1usize)),
        Just((Mode::Noncommutative, RigOrder::deg_rtl_lex(), 2usize)),
    ]
    .prop_flat_map(move |(mode, order, n)| {
        let side = move || rig(mode, n, 3, 3);
        (
            Just(mode),
            Just(order),
            prop::collection::vec((side(), side()), 1..=max_rels),
        )
    })
    .prop_map(|(mode, order, pairs)| random_system(mode, order, pairs))
}

pub fn spoly_below_ambiguity(system: &QSystem) -> Check {
    let order = system.order();
    let rels = system.relations();
    let (records, _) = system.compositions();
    for rec in &records {
        prop_assert!(!rec.spoly.is_zero());
        let lm = order.leading_monomial(&rec.spoly).unwrap();
        prop_assert_eq!(order.compare(&lm, &rec.ambiguity), Ordering::Less);
        let (f, g) = (rels[rec.f_id].poly(), rels[rec.g_id].poly());
        prop_assert_eq!(rec.replay(f, g), rec.spoly.clone());
        prop_assert_eq!(
            rec.f_context.apply_monomial(rels[rec.f_id].leading()),
            rec.ambiguity.clone()
        );
        prop_assert_eq!(
            rec.g_context.apply_monomial(rels[rec.g_id].leading()),
            rec.ambiguity.clone()
        );
    }
    if system.mode() == Mode::Commutative {
        for f in rels {
            for g in rels {
                let pc = gsrig::composition::compositions(f, g, (0, 1), Mode::Commutative, order);
                prop_assert_eq!(pc.examined, f.leading().circ_len() * g.leading().circ_len());
            }
        }
    }
    Ok(())
}

// completion

pub fn small_limits() -> CompletionLimits {
    CompletionLimits {
        max_ambiguity_degree: 6,
        max_steps: 400,
        seed: None,
    }
}

pub fn completion_invariants(system: &QSystem) -> Check {
    let report = system
        .complete(&small_limits())
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(report.stats.binomial_closure, Some(true));
    prop_assert!(report.basis.is_binomial());
    if report.is_complete() {
        prop_assert!(report.basis.verify().unwrap().ok);
    }
    reduced_shape(&report.basis)?;
    // every input relation lies in the ideal of the output
    if report.is_complete() {
        for p in system.polys() {
            prop_assert!(report.basis.normal_form(p).unwrap().0.is_zero());
        }
    }
    Ok(())
}

/// Leading monomials are pairwise occurrence-free and every support monomial
/// is irreducible with respect to the other relations.
pub fn reduced_shape(basis: &QSystem) -> Check {
    let order = basis.order();
    let rels = basis.relations();
    for (i, r) in rels.iter().enumerate() {
        let others: Vec<Relation<Rational>> = rels
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, s)| s.clone())
            .collect();
        for s in &others {
            prop_assert!(match_contexts(r.leading(), s.leading(), order).is_empty());
        }
        for m in r.poly().support() {
            prop_assert!(gsrig::rewrite::is_irreducible(m, &others, order));
        }
    }
    Ok(())
}

// frontend

pub fn render_round_trip(mode: Mode, order: &RigOrder, m: &RigMonomial, n: &RigMonomial) -> Check {
    let abc = alphabet(2);
    let (sm, sn) = (
        render_monomial(m, &abc, order),
        render_monomial(n, &abc, order),
    );
    let back =
        parse_expr(&sm, &abc, mode).map_err(|e| TestCaseError::fail(format!("{sm}: {e}")))?;
    prop_assert_eq!(&back, m, "{}", sm);
    prop_assert_eq!(m == n, sm == sn);
    Ok(())
}
