//! Built-in presentations and the checkers that go with them.
//!
//! * `fiore-leinster`: `Rig[x | x = 1 ∘ x ∘ x²]`.
//! * `blass`: `Rig[x | x = 1 ∘ x²]`.
//! * `znc` / `znc:a,b,…`: the integer polynomial semiring `ℤ⟨X⟩` as a free
//!   semiring on `X`, inverse letters `x'` and an inverse unit `e'`.
//! * `nat`: `Rig[x | x = 1]`, which is `(ℕ, +, ×)`.
//! * `non-noetherian`: `Rig[x | x ∘ 1 = x]`, whose reduced basis is infinite.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use crate::completion::{CompletionLimits, CompletionReport, Decision, System};
use crate::error::{Error, Result};
use crate::frontend::{parse_presentation, render_monomial, Presentation};
use crate::ordering::RigOrder;
use crate::rewrite::{is_irreducible, Relation};
use crate::terms::{Alphabet, BaseMonomial, Coefficient, Mode, Polynomial, RigMonomial, Symbol};

const FIORE_LEINSTER: &str = "\
mode: commutative
vars: x
order: wtlex
rel: x = 1 + x + x^2
";

const FIORE_LEINSTER_BASIS: &str = "\
mode: commutative
vars: x
order: wtlex
rel: x^4 = 1 + 1 + x^2
rel: x + x^3 = 1 + x^2
rel: 1 + x^2 + x = x
rel: 1 + x^2 + x^2 = x^2
rel: 1 + x^2 + x^3 = x^3
";

const BLASS: &str = "\
mode: commutative
vars: x
order: wtlex
rel: x = 1 + x^2
";

const BLASS_BASIS: &str = "\
mode: commutative
vars: x
order: wtlex
rel: 1 + x^2 = x
rel: x + x^4 = 1 + x^3
rel: x^5 = 1 + x^4
rel: 1 + x^3 + x^3 = x^3
rel: 1 + x^3 + x^4 = x^4
";

const NAT: &str = "\
mode: commutative
vars: x
order: wtlex
rel: x = 1
";

const NON_NOETHERIAN: &str = "\
mode: commutative
vars: x
order: wtlex
rel: x + 1 = x
";

/// A named presentation, with the basis claimed for it when one is known.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub presentation: Presentation,
    pub basis: Option<Presentation>,
}

pub const PRESET_NAMES: &[&str] = &["fiore-leinster", "blass", "znc", "nat", "non-noetherian"];

/// Look up a preset by name. `znc` uses generators `y < x`; `znc:a,b,c`
/// takes them in ascending order.
pub fn preset(name: &str) -> Result<Preset> {
    let parsed = |text: &str| parse_presentation(text).expect("built-in presentation parses");
    let (presentation, basis) = match name {
        "fiore-leinster" => (parsed(FIORE_LEINSTER), Some(parsed(FIORE_LEINSTER_BASIS))),
        "blass" => (parsed(BLASS), Some(parsed(BLASS_BASIS))),
        "nat" => {
            let p = parsed(NAT);
            (p.clone(), Some(p))
        }
        "non-noetherian" => (parsed(NON_NOETHERIAN), None),
        "znc" => {
            let p = ZncLayout::new(["y", "x"])?.presentation()?;
            (p.clone(), Some(p))
        }
        other => match other.strip_prefix("znc:") {
            Some(vars) => {
                let names: Vec<&str> = vars.split(',').map(str::trim).collect();
                let p = ZncLayout::new(names)?.presentation()?;
                (p.clone(), Some(p))
            }
            None => return Err(Error::UnknownPreset(other.to_string())),
        },
    };
    Ok(Preset {
        name: name.to_string(),
        presentation,
        basis,
    })
}

fn x_power(n: usize) -> BaseMonomial {
    BaseMonomial::power_of(Mode::Commutative, Symbol(0), n)
}

/// `⊙ (x^d)^∘c` over `(d, c)` pairs, in one variable.
pub fn x_monomial(parts: &[(usize, usize)]) -> RigMonomial {
    RigMonomial::from_weighted(
        parts
            .iter()
            .filter(|&&(_, c)| c > 0)
            .map(|&(d, c)| (x_power(d), c as u32)),
    )
}

/// The first `n` members `{1 ∘ xᵏ = xᵏ : k ≤ n}` of the infinite reduced
/// basis of `non-noetherian`.
pub fn non_noetherian_basis(n: usize) -> Presentation {
    let rels = (1..=n)
        .map(|k| (x_monomial(&[(0, 1), (k, 1)]), x_monomial(&[(k, 1)])))
        .collect();
    Presentation::new(
        Mode::Commutative,
        Alphabet::new(["x"]).unwrap(),
        RigOrder::deg_lex(),
        rels,
    )
    .unwrap()
}

/// Component-degree histogram of a one-variable monomial.
fn histogram(m: &RigMonomial) -> Option<BTreeMap<usize, usize>> {
    let mut h = BTreeMap::new();
    for (b, c) in m.runs() {
        if b.mode() != Mode::Commutative || b.letters().iter().any(|&s| s != Symbol(0)) {
            return None;
        }
        *h.entry(b.degree()).or_insert(0) += *c as usize;
    }
    Some(h)
}

fn support_within(h: &BTreeMap<usize, usize>, allowed: &[usize]) -> bool {
    h.keys().all(|d| allowed.contains(d))
}

fn count(h: &BTreeMap<usize, usize>, d: usize) -> usize {
    h.get(&d).copied().unwrap_or(0)
}

/// Closed-form normal-form families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Irreducibles of the Fiore–Leinster basis:
    /// `1^∘(m+1) ∘ x²`, `1^∘m ∘ x^∘n`, `1^∘m ∘ (x³)^∘n`, `x^∘m ∘ (x²)^∘n`,
    /// `(x²)^∘m ∘ (x³)^∘n`.
    FioreLeinster,
    /// Irreducibles of the Blass basis:
    /// `(1^∘n ∘ x^∘m)·xᵗ` for `t ≤ 3`, `1^∘n ∘ x³`, `1^∘n ∘ (x⁴)^∘m`.
    BlassGs,
    /// Blass's own normal form:
    /// `1^∘n ∘ x² ∘ x⁴`, `1^∘n ∘ (x²)^∘m`, `(x²)^∘m ∘ (x⁴)^∘t`, `1^∘n ∘ (x⁴)^∘t`.
    BlassOriginal,
}

/// Membership in a one-variable family. Monomials in other variables are
/// never members.
pub fn family_member(m: &RigMonomial, fam: Family) -> bool {
    let Some(h) = histogram(m) else {
        return false;
    };
    let within = |allowed: &[usize]| support_within(&h, allowed);
    match fam {
        Family::FioreLeinster => {
            within(&[0, 1])
                || within(&[0, 3])
                || within(&[1, 2])
                || within(&[2, 3])
                || (within(&[0, 2]) && count(&h, 2) <= 1)
        }
        Family::BlassGs => gamma_shape(m).is_some(),
        Family::BlassOriginal => {
            (within(&[0, 2, 4]) && count(&h, 2) == 1 && count(&h, 4) == 1)
                || within(&[0, 2])
                || within(&[2, 4])
                || within(&[0, 4])
        }
    }
}

/// A parameterisation of a member of [`Family::BlassGs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaShape {
    /// `(1^∘n ∘ x^∘m)·xᵗ`
    Shifted { n: usize, m: usize, t: usize },
    /// `1^∘n ∘ x³`
    WithCube { n: usize },
    /// `1^∘n ∘ (x⁴)^∘m`
    WithQuartics { n: usize, m: usize },
}

/// Read off parameters, preferring the shifted form when shapes overlap.
pub fn gamma_shape(u: &RigMonomial) -> Option<GammaShape> {
    let h = histogram(u)?;
    let degrees: Vec<usize> = h.keys().copied().collect();
    match degrees.as_slice() {
        [] => return Some(GammaShape::Shifted { n: 0, m: 0, t: 0 }),
        [d] if *d <= 3 => {
            return Some(GammaShape::Shifted {
                n: count(&h, *d),
                m: 0,
                t: *d,
            })
        }
        [4] => {
            return Some(GammaShape::Shifted {
                n: 0,
                m: count(&h, 4),
                t: 3,
            })
        }
        [a, b] if b == &(a + 1) && *a <= 3 => {
            return Some(GammaShape::Shifted {
                n: count(&h, *a),
                m: count(&h, *b),
                t: *a,
            })
        }
        _ => {}
    }
    if support_within(&h, &[0, 3]) && count(&h, 3) == 1 {
        return Some(GammaShape::WithCube { n: count(&h, 0) });
    }
    if support_within(&h, &[0, 4]) {
        return Some(GammaShape::WithQuartics {
            n: count(&h, 0),
            m: count(&h, 4),
        });
    }
    None
}

impl GammaShape {
    pub fn monomial(&self) -> RigMonomial {
        match *self {
            GammaShape::Shifted { n, m, t } => x_monomial(&[(t, n), (t + 1, m)]),
            GammaShape::WithCube { n } => x_monomial(&[(0, n), (3, 1)]),
            GammaShape::WithQuartics { n, m } => x_monomial(&[(0, n), (4, m)]),
        }
    }
}

/// The bijection from the Blass GS normal forms onto Blass's own normal
/// forms, case by case.
pub fn blass_normal_form_map(u: &RigMonomial) -> Result<RigMonomial> {
    let shape = gamma_shape(u).ok_or_else(|| {
        Error::NotInFamily(render_monomial(
            u,
            &Alphabet::new(["x"]).unwrap(),
            &RigOrder::deg_lex(),
        ))
    })?;
    Ok(match shape {
        GammaShape::Shifted { n, m, t: 0 } => x_monomial(&[(0, n + m), (2, m)]),
        GammaShape::Shifted { n, m, t: 1 } => x_monomial(&[(0, n), (2, n + m)]),
        GammaShape::Shifted { n, m, t: 2 } => x_monomial(&[(2, n + m), (4, m)]),
        GammaShape::Shifted { n, m, .. } => x_monomial(&[(2, n), (4, n + m)]),
        GammaShape::WithCube { n } => x_monomial(&[(0, n), (2, 1), (4, 1)]),
        GammaShape::WithQuartics { n, m } => x_monomial(&[(0, n), (4, m)]),
    })
}

/// Distinct members of [`Family::BlassGs`] with every parameter `≤ max`.
pub fn gamma_truncation(max: usize) -> Vec<RigMonomial> {
    let mut out = BTreeSet::new();
    for n in 0..=max {
        for m in 0..=max {
            for t in 0..=3 {
                out.insert(GammaShape::Shifted { n, m, t }.monomial());
            }
            out.insert(GammaShape::WithQuartics { n, m }.monomial());
        }
        out.insert(GammaShape::WithCube { n }.monomial());
    }
    out.into_iter().collect()
}

/// Result of [`transport_check`], one flag per condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transport {
    pub injective: bool,
    pub congruent: bool,
    pub separated: bool,
}

impl Transport {
    pub fn passed(&self) -> bool {
        self.injective && self.congruent && self.separated
    }
}

/// Check that `map` carries a set of normal forms to a set of normal forms:
/// it must be injective, keep every element in its class, and send distinct
/// elements to provably distinct classes.
pub fn transport_check<K, F>(
    gamma: &[RigMonomial],
    map: F,
    report: &CompletionReport<K>,
) -> Result<Transport>
where
    K: Coefficient,
    F: Fn(&RigMonomial) -> Result<RigMonomial>,
{
    let images = gamma.iter().map(&map).collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<&RigMonomial> = images.iter().collect();
    let injective = distinct.len() == images.len();
    let mut congruent = true;
    for (u, v) in gamma.iter().zip(&images) {
        if report.decide_eq(u, v)? != Decision::Equal {
            congruent = false;
        }
    }
    // distinct normal forms under a complete basis mean distinct classes
    let mut forms: Vec<Polynomial<K>> = Vec::new();
    for v in &distinct {
        let f = report.basis.reduce_monomial(v)?;
        if !forms.contains(&f) {
            forms.push(f);
        }
    }
    let separated = report.is_complete() && forms.len() == distinct.len();
    Ok(Transport {
        injective,
        congruent,
        separated,
    })
}

/// Alphabet layout of the `ℤ⟨X⟩` presentation: `e' < x₁ < x₁' < x₂ < x₂' < …`
/// for generators `x₁ < x₂ < …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZncLayout {
    vars: Vec<String>,
}

impl ZncLayout {
    pub fn new<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::Presentation(
                "znc needs at least one generator".into(),
            ));
        }
        let layout = ZncLayout { vars };
        layout.alphabet()?;
        Ok(layout)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        let mut names = vec!["e'".to_string()];
        for v in &self.vars {
            names.push(v.clone());
            names.push(format!("{v}'"));
        }
        Alphabet::new(names)
    }

    pub fn unit_inverse(&self) -> Symbol {
        Symbol(0)
    }

    pub fn var(&self, k: usize) -> Symbol {
        Symbol((2 * k + 1) as u16)
    }

    pub fn inverse(&self, k: usize) -> Symbol {
        Symbol((2 * k + 2) as u16)
    }

    /// `e'` and every `x'`.
    pub fn is_inverse(&self, s: Symbol) -> bool {
        s.0.is_multiple_of(2)
    }

    fn word(&self, letters: &[Symbol]) -> RigMonomial {
        RigMonomial::singleton(BaseMonomial::from_letters(
            Mode::Noncommutative,
            letters.to_vec(),
        ))
    }

    /// The six relation schemas instantiated over every generator and every
    /// ordered pair of generators, plus `e'e' = 1`.
    pub fn relations(&self) -> Vec<(RigMonomial, RigMonomial)> {
        let n = self.vars.len();
        let e = self.unit_inverse();
        let one = RigMonomial::one(Mode::Noncommutative);
        let theta = RigMonomial::theta();
        let unit = one.clone();
        let mut out = Vec::new();
        for k in 0..n {
            out.push((
                self.word(&[self.var(k)])
                    .circ(&self.word(&[self.inverse(k)])),
                theta.clone(),
            ));
        }
        out.push((unit.circ(&self.word(&[e])), theta));
        for i in 0..n {
            for j in 0..n {
                let (x, xi, y, yi) = (self.var(i), self.inverse(i), self.var(j), self.inverse(j));
                out.push((self.word(&[xi, yi]), self.word(&[x, y])));
                out.push((self.word(&[x, yi]), self.word(&[xi, y])));
            }
        }
        for k in 0..n {
            let (x, xi) = (self.var(k), self.inverse(k));
            out.push((self.word(&[x, e]), self.word(&[xi])));
            out.push((self.word(&[xi, e]), self.word(&[x])));
            out.push((self.word(&[e, x]), self.word(&[xi])));
            out.push((self.word(&[e, xi]), self.word(&[x])));
        }
        // schemas 5 and 6 with the unit in place of x: the composition of
        // 1 ∘ e' = θ with itself forces e'e' = 1
        out.push((self.word(&[e, e]), one));
        out
    }

    pub fn presentation(&self) -> Result<Presentation> {
        Presentation::new(
            Mode::Noncommutative,
            self.alphabet()?,
            RigOrder::deg_rtl_lex(),
            self.relations(),
        )
    }

    /// Whether `m` has the printed irreducible shape: each component is `1`,
    /// `e'`, or a word in which only the first letter may be an inverse.
    pub fn irr_shape(&self, m: &RigMonomial) -> bool {
        m.distinct().all(|w| match w.letters() {
            [] => true,
            [first, rest @ ..] => {
                (rest.is_empty() || *first != self.unit_inverse())
                    && rest.iter().all(|&s| !self.is_inverse(s))
            }
        })
    }

    /// `σ`: a term `c·w` becomes `|c|` copies of `w`, with the first letter
    /// inverted (or `e'` for the empty word) when `c < 0`.
    pub fn sigma(&self, p: &IntPoly) -> RigMonomial {
        let mut parts = Vec::new();
        for (word, &c) in &p.terms {
            let mut letters: Vec<Symbol> = word.iter().map(|&k| self.var(k)).collect();
            if c < 0 {
                match word.first() {
                    Some(&k) => letters[0] = self.inverse(k),
                    None => letters.push(self.unit_inverse()),
                }
            }
            let b = BaseMonomial::from_letters(Mode::Noncommutative, letters);
            parts.push((b, c.unsigned_abs() as u32));
        }
        RigMonomial::from_weighted(parts)
    }
}

/// Integer noncommutative polynomials over generator indices, kept
/// independent of the semiring code so it can serve as a reference.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    terms: BTreeMap<Vec<usize>, i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn term(word: Vec<usize>, c: i64) -> Self {
        let mut p = IntPoly::zero();
        p.add_term(word, c);
        p
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: i64) {
        let e = self.terms.entry(word).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &i64)> {
        self.terms.iter()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (u, &a) in &self.terms {
            for (v, &b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{c}*{w:?}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Check that `σ` respects `×` and `+` on `p, q` modulo `basis`.
pub fn sigma_check<K: Coefficient>(
    p: &IntPoly,
    q: &IntPoly,
    layout: &ZncLayout,
    basis: &System<K>,
) -> Result<bool> {
    let (sp, sq) = (layout.sigma(p), layout.sigma(q));
    let nf = |m: &RigMonomial| basis.reduce_monomial(m);
    let product = nf(&sp.times(&sq))? == nf(&layout.sigma(&(p * q)))?;
    let sum = nf(&sp.circ(&sq))? == nf(&layout.sigma(&(p + q)))?;
    Ok(product && sum)
}

/// The relation `1^∘n = 1^∘m` on ℕ, with `n > m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatPair {
    pub n: u64,
    pub m: u64,
}

impl NatPair {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n <= m {
            return Err(Error::Presentation(format!(
                "expected n > m, got ({n}, {m})"
            )));
        }
        Ok(NatPair { n, m })
    }
}

fn ones(n: u64) -> RigMonomial {
    RigMonomial::circ_power(BaseMonomial::one(Mode::Commutative), n as usize)
}

/// Complete `{x = 1} ∪ {1^∘n = 1^∘m}` and read off the relations besides
/// `x = 1`. Reflexive pairs are ignored; pairs may come in either order.
pub fn nat_congruence_generators<K: Coefficient>(pairs: &[(u64, u64)]) -> Result<Vec<NatPair>> {
    let x = x_monomial(&[(1, 1)]);
    let mut polys = vec![Polynomial::<K>::binomial(x.clone(), ones(1))];
    for &(a, b) in pairs {
        if a != b {
            polys.push(Polynomial::binomial(ones(a.max(b)), ones(a.min(b))));
        }
    }
    let system = System::new(
        Mode::Commutative,
        Alphabet::new(["x"])?,
        RigOrder::deg_lex(),
        polys,
    )?;
    let report = system.complete(&CompletionLimits::default())?;
    if !report.is_complete() {
        return Err(Error::Truncated);
    }
    let mut out = Vec::new();
    for r in report.basis.relations() {
        if *r.leading() == x {
            continue;
        }
        let sides = crate::frontend::relation_sides(r).ok_or(Error::NotBinomial)?;
        out.push(NatPair::new(
            sides.0.circ_len() as u64,
            sides.1.circ_len() as u64,
        )?);
    }
    Ok(out)
}

/// The single generator of the congruence on ℕ generated by `pairs`, or
/// `None` for the identity congruence.
pub fn nat_congruence_generator(pairs: &[(u64, u64)]) -> Result<Option<NatPair>> {
    let gens = nat_congruence_generators::<crate::Rational>(pairs)?;
    match gens.as_slice() {
        [] => Ok(None),
        [g] => Ok(Some(*g)),
        _ => Err(Error::Presentation(format!(
            "{} generators left after completion",
            gens.len()
        ))),
    }
}

/// Evidence that `1 ∘ x^(n+1)` is not in the ideal generated by
/// `1 ∘ x, …, 1 ∘ xⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLevel {
    pub level: usize,
    pub witness: RigMonomial,
    pub strict: bool,
}

/// Check strictness of the ideal chain `I₁ ⊆ I₂ ⊆ …` up to `depth`. Since
/// the generators are monomials forming a minimal basis, membership of a
/// monomial is the existence of an occurrence.
pub fn noetherian_chain_demo(depth: usize) -> Vec<ChainLevel> {
    let order = RigOrder::deg_lex();
    (1..=depth)
        .map(|n| {
            let gens: Vec<Relation<crate::Rational>> = (1..=n)
                .map(|i| {
                    let g = Polynomial::monomial(x_monomial(&[(0, 1), (i, 1)]));
                    Relation::new(&g, &order).expect("nonzero")
                })
                .collect();
            let witness = x_monomial(&[(0, 1), (n + 1, 1)]);
            let strict = is_irreducible(&witness, &gens, &order);
            ChainLevel {
                level: n,
                witness,
                strict,
            }
        })
        .collect()
}


/// Names accepted by [`demo`].
pub const DEMO_NAMES: &[&str] = &[
    "fiore-leinster",
    "blass",
    "seven-trees",
    "transport",
    "znc",
    "nat",
    "non-noetherian",
];

/// One named check of a demo run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoCheck {
    pub label: String,
    pub passed: bool,
}

fn check(label: impl Into<String>, passed: bool) -> DemoCheck {
    DemoCheck {
        label: label.into(),
        passed,
    }
}

fn preset_system(name: &str) -> Result<(System<crate::Rational>, Option<System<crate::Rational>>)> {
    let p = preset(name)?;
    let basis = p.basis.as_ref().map(|b| b.system()).transpose()?;
    Ok((p.presentation.system()?, basis))
}

fn same_relations(a: &System<crate::Rational>, b: &System<crate::Rational>) -> bool {
    let mut x: Vec<_> = a.polys().cloned().collect();
    let mut y: Vec<_> = b.polys().cloned().collect();
    x.sort();
    y.sort();
    x == y
}

/// Run a canned scenario and report each check.
pub fn demo(name: &str) -> Result<Vec<DemoCheck>> {
    let x = |d: usize| x_monomial(&[(d, 1)]);
    let limits = CompletionLimits::default();
    let mut out = Vec::new();
    match name {
        "fiore-leinster" | "blass" => {
            let (defining, basis) = preset_system(name)?;
            let basis = basis.expect("both presets carry a basis");
            out.push(check("printed basis verifies", basis.verify()?.ok));
            let report = defining.complete(&limits)?;
            out.push(check("completion terminates", report.is_complete()));
            out.push(check(
                "completed basis equals the printed basis",
                same_relations(&report.basis, &basis),
            ));
            let (k, fam) = if name == "blass" {
                (7, Family::BlassGs)
            } else {
                (5, Family::FioreLeinster)
            };
            out.push(check(
                format!("x^{k} = x"),
                report.decide_eq(&x(k), &x(1))? == Decision::Equal,
            ));
            let irr = report.basis.enum_irr(8, 4);
            out.push(check(
                "irreducibles match the closed-form family (degree 8, length 4)",
                irr.iter().all(|m| family_member(m, fam)),
            ));
        }
        "seven-trees" => {
            let (defining, _) = preset_system("blass")?;
            let report = defining.complete(&limits)?;
            out.push(check(
                "x^7 = x",
                report.decide_eq(&x(7), &x(1))? == Decision::Equal,
            ));
            for k in 2..=6 {
                out.push(check(
                    format!("x^{k} != x"),
                    report.decide_eq(&x(k), &x(1))? == Decision::Distinct,
                ));
            }
        }
        "transport" => {
            let (defining, _) = preset_system("blass")?;
            let report = defining.complete(&limits)?;
            let gamma = gamma_truncation(4);
            let t = transport_check(&gamma, blass_normal_form_map, &report)?;
            out.push(check("map is injective", t.injective));
            out.push(check(
                "every element is congruent to its image",
                t.congruent,
            ));
            out.push(check("images lie in distinct classes", t.separated));
        }
        "znc" => {
            let layout = ZncLayout::new(["y", "x"])?;
            let basis: System<crate::Rational> = layout.presentation()?.system()?;
            out.push(check("basis verifies", basis.verify()?.ok));
            let irr = basis.enum_irr(3, 2);
            out.push(check(
                "irreducibles have the printed shape (degree 3, length 2)",
                irr.iter().all(|m| layout.irr_shape(m)),
            ));
            let (xs, ys) = (IntPoly::term(vec![1], 1), IntPoly::term(vec![0], 1));
            let p = &xs + &IntPoly::term(vec![0], -1);
            let q = &xs + &ys;
            out.push(check(
                "sigma respects (x - y)(x + y)",
                sigma_check(&p, &q, &layout, &basis)?,
            ));
        }
        "nat" => {
            let g = nat_congruence_generator(&[(4, 2), (5, 2)])?;
            out.push(check(
                "{(4,2), (5,2)} is generated by (3,2)",
                g == Some(NatPair { n: 3, m: 2 }),
            ));
            out.push(check(
                "reflexive pairs generate the identity",
                nat_congruence_generator(&[(2, 2)])?.is_none(),
            ));
        }
        "non-noetherian" => {
            let (defining, _) = preset_system("non-noetherian")?;
            let limits = CompletionLimits {
                max_ambiguity_degree: 6,
                ..limits
            };
            let report = defining.complete(&limits)?;
            out.push(check("completion is truncated", !report.is_complete()));
            let expected = non_noetherian_basis(6).system()?;
            out.push(check(
                "basis is 1 + x^n = x^n for n <= 6",
                same_relations(&report.basis, &expected),
            ));
            for level in noetherian_chain_demo(5) {
                out.push(check(
                    format!("ideal chain strict at level {}", level.level),
                    level.strict,
                ));
            }
        }
        other => return Err(Error::UnknownPreset(other.to_string())),
    }
    Ok(out)
}
