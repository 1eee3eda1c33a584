//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the report is always printed.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use gsrig::frontend::render_basis;
use gsrig::oracle::{closure_eq, nat_closure, Bounds, ClosureOutcome, DegreeMeasure, Rules};
use gsrig::presets::{
    blass_normal_form_map, family_member, gamma_truncation, nat_congruence_generator,
    noetherian_chain_demo, non_noetherian_basis, preset, sigma_check, transport_check, Family,
    IntPoly, ZncLayout,
};
use gsrig::terms::monomials_within;
use gsrig::{
    CompletionLimits, CompletionStatus, Decision, Mode, Polynomial, QReport, QSystem, RigMonomial,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn complete(system: &QSystem, limits: &CompletionLimits) -> QReport {
    system.complete(limits).expect("completion runs")
}

fn sorted_polys(s: &QSystem) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = s.polys().cloned().collect();
    v.sort();
    v
}

fn verify_and_complete(name: &str) -> Outcome {
    let printed = preset_basis(name);
    let v = printed.verify().map_err(|e| e.to_string())?;
    ensure(v.ok, || {
        format!("{} non-trivial compositions", v.witnesses.len())
    })?;
    let report = complete(&preset_defining(name), &CompletionLimits::default());
    ensure(report.is_complete(), || "completion truncated".into())?;
    ensure(
        sorted_polys(&report.basis) == sorted_polys(&printed),
        || format!("completed basis differs:\n{}", render_basis(&report.basis)),
    )
}

fn families_agree(name: &str, family: Family) -> Outcome {
    let basis = preset_basis(name);
    let irr: BTreeSet<RigMonomial> = basis.enum_irr(12, 6).into_iter().collect();
    let members: BTreeSet<RigMonomial> = monomials_within(Mode::Commutative, &symbols(1), 12, 6)
        .into_iter()
        .filter(|m| family_member(m, family))
        .collect();
    let extra: Vec<_> = irr.difference(&members).take(3).collect();
    let missing: Vec<_> = members.difference(&irr).take(3).collect();
    ensure(extra.is_empty() && missing.is_empty(), || {
        format!("irreducible but not in family: {extra:?}; in family but reducible: {missing:?}")
    })?;
    ensure(!irr.is_empty(), || "empty enumeration".into())
}

fn c1() -> Outcome {
    let v = preset_basis("fiore-leinster")
        .verify()
        .map_err(|e| e.to_string())?;
    ensure(v.ok && !v.records.is_empty(), || {
        format!("{} non-trivial", v.witnesses.len())
    })
}

fn c2() -> Outcome {
    let printed = preset_basis("fiore-leinster");
    let report = complete(
        &preset_defining("fiore-leinster"),
        &CompletionLimits::default(),
    );
    ensure(report.status == CompletionStatus::Complete, || {
        "truncated".into()
    })?;
    ensure(
        sorted_polys(&report.basis) == sorted_polys(&printed),
        || render_basis(&report.basis),
    )
}

fn c3() -> Outcome {
    verify_and_complete("blass")
}

fn c4() -> Outcome {
    families_agree("fiore-leinster", Family::FioreLeinster)
}

fn c5() -> Outcome {
    families_agree("blass", Family::BlassGs)
}

fn c6() -> Outcome {
    let report = complete(&preset_defining("blass"), &CompletionLimits::default());
    let gamma = gamma_truncation(4);
    let t = transport_check(&gamma, blass_normal_form_map, &report).map_err(|e| e.to_string())?;
    ensure(t.passed(), || format!("{t:?}"))
}

fn oracle_confirms(name: &str, u: &RigMonomial, v: &RigMonomial) -> Outcome {
    let p = preset(name).unwrap().presentation;
    let rules = Rules::new(p.mode, p.alphabet.symbols().collect(), p.relations);
    let bounds = Bounds {
        max_degree: 9,
        max_len: 8,
        max_expansions: 1_000_000,
        measure: DegreeMeasure::Component,
    };
    let ClosureOutcome::Congruent(path) = closure_eq(u, v, &rules, &bounds) else {
        return Err(format!("{name}: oracle found no path"));
    };
    let visited = path.replay(&rules).ok_or("witness path does not replay")?;
    ensure(visited.last() == Some(v), || {
        "witness path ends elsewhere".into()
    })
}

fn c7() -> Outcome {
    let x = |k: usize| xs(&[k]);
    let blass = complete(&preset_defining("blass"), &CompletionLimits::default());
    let d = blass.decide_eq(&x(7), &x(1)).unwrap();
    ensure(d == Decision::Equal, || format!("x^7 vs x: {d}"))?;
    oracle_confirms("blass", &x(7), &x(1))?;
    for k in 2..=6 {
        let d = blass.decide_eq(&x(k), &x(1)).unwrap();
        ensure(d == Decision::Distinct, || format!("x^{k} vs x: {d}"))?;
    }
    let fl = complete(
        &preset_defining("fiore-leinster"),
        &CompletionLimits::default(),
    );
    let d = fl.decide_eq(&x(5), &x(1)).unwrap();
    ensure(d == Decision::Equal, || {
        format!("fiore-leinster x^5 vs x: {d}")
    })?;
    oracle_confirms("fiore-leinster", &x(5), &x(1))
}

fn random_int_poly(rng: &mut StdRng) -> IntPoly {
    let mut p = IntPoly::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let len = rng.gen_range(0..=3);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
        let c = loop {
            let c = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        p.add_term(word, c);
    }
    p
}

fn c8() -> Outcome {
    let layout = ZncLayout::new(["y", "x"]).unwrap();
    let basis: QSystem = layout.presentation().unwrap().system().unwrap();
    let v = basis.verify().map_err(|e| e.to_string())?;
    ensure(v.ok, || {
        format!("{} non-trivial compositions", v.witnesses.len())
    })?;
    let irr = basis.enum_irr(4, 3);
    let bad: Vec<_> = irr
        .iter()
        .filter(|m| !layout.irr_shape(m))
        .take(3)
        .collect();
    ensure(bad.is_empty(), || {
        format!("off-shape irreducibles: {bad:?}")
    })?;
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..100 {
        let (p, q) = (random_int_poly(&mut rng), random_int_poly(&mut rng));
        let ok = sigma_check(&p, &q, &layout, &basis).map_err(|e| e.to_string())?;
        ensure(ok, || format!("sigma fails on p = {p}, q = {q}"))?;
    }
    Ok(())
}

fn same_partition(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}

fn c9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..50 {
        let pairs: Vec<(u64, u64)> = (0..rng.gen_range(1..=4))
            .map(|_| (rng.gen_range(0..=8), rng.gen_range(0..=8)))
            .collect();
        let g = nat_congruence_generator(&pairs).map_err(|e| format!("{pairs:?}: {e}"))?;
        let single: Vec<(u64, u64)> = g.iter().map(|g| (g.n, g.m)).collect();
        let (a, b) = (nat_closure(&pairs, 16), nat_closure(&single, 16));
        ensure(same_partition(&a, &b), || {
            format!("{pairs:?} vs generator {g:?}")
        })?;
    }
    Ok(())
}

fn c10() -> Outcome {
    let limits = CompletionLimits {
        max_ambiguity_degree: 10,
        ..CompletionLimits::default()
    };
    let report = complete(&preset_defining("non-noetherian"), &limits);
    ensure(report.status == CompletionStatus::Truncated, || {
        "not truncated".into()
    })?;
    let expected: QSystem = non_noetherian_basis(10).system().unwrap();
    ensure(
        sorted_polys(&report.basis) == sorted_polys(&expected),
        || render_basis(&report.basis),
    )?;
    let levels = noetherian_chain_demo(5);
    ensure(levels.len() == 5 && levels.iter().all(|l| l.strict), || {
        format!("{levels:?}")
    })
}

fn c11() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    for name in ["fiore-leinster", "blass", "znc", "nat", "non-noetherian"] {
        let p = preset(name).unwrap();
        // the defining relations plus any printed basis generate the same ideal
        let mut rels = p.presentation.relations.clone();
        if let Some(b) = &p.basis {
            rels.extend(b.relations.iter().cloned());
        }
        let limits = CompletionLimits {
            max_ambiguity_degree: if name == "non-noetherian" { 6 } else { 32 },
            ..CompletionLimits::default()
        };
        let mut outputs = BTreeSet::new();
        for _ in 0..10 {
            rels.shuffle(&mut rng);
            let polys = rels
                .iter()
                .map(|(l, r)| Polynomial::binomial(l.clone(), r.clone()));
            let system = QSystem::new(
                p.presentation.mode,
                p.presentation.alphabet.clone(),
                p.presentation.order,
                polys,
            )
            .map_err(|e| e.to_string())?;
            let run = CompletionLimits {
                seed: Some(rng.gen()),
                ..limits
            };
            outputs.insert(render_basis(&complete(&system, &run).basis));
        }
        ensure(outputs.len() == 1, || {
            format!("{name}: {} distinct bases", outputs.len())
        })?;
    }
    Ok(())
}

fn c12() -> Outcome {
    use proptest::prelude::*;
    regression_cube_vs_square().map_err(|e| e.to_string())?;
    run(10_000, order_triple(), |(o, t)| total_order(&o, &t))?;
    run(10_000, order_context(), |(o, m, n, c)| {
        context_compatible(&o, &m, &n, &c)
    })?;
    let triple = || {
        prop_oneof![Just(Mode::Commutative), Just(Mode::Noncommutative)].prop_flat_map(|mode| {
            let m = || rig(mode, 2, 3, 3);
            (Just(mode), m(), m(), m())
        })
    };
    run(1_000, triple(), |(mode, a, b, c)| {
        circ_laws(&a, &b, &c)?;
        times_laws(mode, &a, &b, &c)?;
        lcm_law(&a, &b)
    })?;
    run(
        300,
        (
            poly(Mode::Commutative, 2, 2, 2, 3),
            poly(Mode::Commutative, 2, 2, 2, 3),
            poly(Mode::Commutative, 2, 2, 2, 3),
        ),
        |(f, g, h)| polynomial_laws(&f, &g, &h),
    )?;
    let (fl, blass, znc) = (
        preset_basis("fiore-leinster"),
        preset_basis("blass"),
        preset_basis("znc"),
    );
    run(200, poly(Mode::Commutative, 1, 7, 4, 4), |f| {
        trace_identity(&fl, &f)?;
        trace_identity(&blass, &f)
    })?;
    run(100, poly(Mode::Noncommutative, 5, 3, 3, 4), |f| {
        trace_identity(&znc, &f)
    })?;
    run(200, system_strategy(3), |s| match s {
        Some(s) => spoly_below_ambiguity(&s),
        None => Ok(()),
    })?;
    run(100, system_strategy(3), |s| match s {
        Some(s) => completion_invariants(&s),
        None => Ok(()),
    })?;
    // binomial closure on every preset completion
    for name in ["fiore-leinster", "blass", "znc", "nat", "non-noetherian"] {
        let limits = CompletionLimits {
            max_ambiguity_degree: 8,
            ..CompletionLimits::default()
        };
        let report = complete(&preset_defining(name), &limits);
        ensure(report.stats.binomial_closure == Some(true), || {
            format!("{name}: binomial closure lost")
        })?;
    }
    Ok(())
}

struct Criterion {
    number: usize,
    label: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            number: 1,
            label: "Fiore-Leinster basis verifies",
            budget: secs(5),
            check: c1,
        },
        Criterion {
            number: 2,
            label: "Fiore-Leinster completion gives the printed basis",
            budget: secs(10),
            check: c2,
        },
        Criterion {
            number: 3,
            label: "Blass basis verifies and completion gives it",
            budget: secs(10),
            check: c3,
        },
        Criterion {
            number: 4,
            label: "Fiore-Leinster irreducibles match the family",
            budget: secs(10),
            check: c4,
        },
        Criterion {
            number: 5,
            label: "Blass irreducibles match the family",
            budget: secs(10),
            check: c5,
        },
        Criterion {
            number: 6,
            label: "Blass normal-form map transports classes",
            budget: secs(20),
            check: c6,
        },
        Criterion {
            number: 7,
            label: "seven trees: x^7 = x, x^k != x for k < 7",
            budget: secs(30),
            check: c7,
        },
        Criterion {
            number: 8,
            label: "integer polynomials: basis, shape, sigma",
            budget: secs(30),
            check: c8,
        },
        Criterion {
            number: 9,
            label: "congruences on N are principal",
            budget: secs(30),
            check: c9,
        },
        Criterion {
            number: 10,
            label: "x + 1 = x truncates with the expected prefix",
            budget: secs(30),
            check: c10,
        },
        Criterion {
            number: 11,
            label: "reduced bases are unique",
            budget: secs(60),
            check: c11,
        },
        Criterion {
            number: 12,
            label: "property suites",
            budget: secs(120),
            check: c12,
        },
    ];
    // keep panics from interleaving with the report
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took <= c.budget, || {
                format!("took {took:.2?}, budget {:?}", c.budget)
            })
        });
        match result {
            Ok(()) => println!("criterion {:>2}: PASS ({took:.2?}) {}", c.number, c.label),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {:>2}: FAIL ({took:.2?}) {}: {why}",
                    c.number, c.label
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
