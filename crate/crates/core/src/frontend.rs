//! Presentation files, the semiring expression syntax and canonical printing.
//!
//! ```text
//! mode: commutative
//! vars: x
//! order: wtlex
//! rel: x = 1 + x + x^2
//! ```
//!
//! In expressions `+` is `∘`, juxtaposition or `*` is `·`, `0` is θ and `1` is
//! the empty base monomial. Parenthesised sums are expanded by
//! distributivity, so every expression denotes a single rig monomial.

use std::fmt::Write as _;

use crate::completion::{CompletionReport, System};
use crate::error::{Error, Result};
use crate::ordering::RigOrder;
use crate::rewrite::{Context, ReductionTrace, Relation};
use crate::terms::{Alphabet, BaseMonomial, Coefficient, Mode, Polynomial, RigMonomial};

/// A semiring presentation `Rig⟨X | lhs = rhs, …⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub mode: Mode,
    pub alphabet: Alphabet,
    pub order: RigOrder,
    pub relations: Vec<(RigMonomial, RigMonomial)>,
}

impl Presentation {
    pub fn new(
        mode: Mode,
        alphabet: Alphabet,
        order: RigOrder,
        relations: Vec<(RigMonomial, RigMonomial)>,
    ) -> Result<Self> {
        order.check_mode(mode)?;
        if let Some((l, _)) = relations.iter().find(|(l, r)| l == r) {
            return Err(Error::Presentation(format!(
                "relation `{} = {}` has identical sides",
                render_monomial(l, &alphabet, &order),
                render_monomial(l, &alphabet, &order)
            )));
        }
        Ok(Presentation {
            mode,
            alphabet,
            order,
            relations,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_presentation(text)
    }

    pub fn parse_expr(&self, text: &str) -> Result<RigMonomial> {
        parse_expr(text, &self.alphabet, self.mode)
    }

    /// The algebra system with one binomial `lhs − rhs` per relation.
    pub fn system<K: Coefficient>(&self) -> Result<System<K>> {
        System::new(
            self.mode,
            self.alphabet.clone(),
            self.order,
            self.relations
                .iter()
                .map(|(l, r)| Polynomial::binomial(l.clone(), r.clone())),
        )
    }

    /// Read a binomial basis back as a presentation, leading side first.
    pub fn from_system<K: Coefficient>(system: &System<K>) -> Result<Self> {
        let relations = system
            .relations()
            .iter()
            .map(|r| relation_sides(r).ok_or(Error::NotBinomial))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(
            system.mode(),
            system.alphabet().clone(),
            *system.order(),
            relations,
        )
    }

    pub fn render_monomial(&self, m: &RigMonomial) -> String {
        render_monomial(m, &self.alphabet, &self.order)
    }

    /// The presentation file text.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "mode: {}", self.mode).unwrap();
        writeln!(out, "vars: {}", self.alphabet.names().join(" ")).unwrap();
        writeln!(out, "order: {}", self.order.keyword()).unwrap();
        for (l, r) in &self.relations {
            writeln!(
                out,
                "rel: {} = {}",
                self.render_monomial(l),
                self.render_monomial(r)
            )
            .unwrap();
        }
        out
    }
}

/// `(leading, other)` for a relation `leading − other`.
pub fn relation_sides<K: Coefficient>(r: &Relation<K>) -> Option<(RigMonomial, RigMonomial)> {
    if !r.poly().is_semiring_binomial() {
        return None;
    }
    let other = r.poly().support().find(|m| *m != r.leading())?.clone();
    Some((r.leading().clone(), other))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Nat(u64),
    Plus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '*' | '^' | '(' | ')' => {
                out.push(match c {
                    '+' => Token::Plus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits
                    .parse()
                    .map_err(|_| Error::parse(line, format!("number `{digits}` too large")))?;
                out.push(Token::Nat(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                while i < chars.len() && chars[i] == '\'' {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::parse(
                    line,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    alphabet: &'a Alphabet,
    mode: Mode,
    line: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, msg)
    }

    fn expr(&mut self) -> Result<RigMonomial> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            acc = acc.circ(&self.term()?);
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Ident(_) | Token::Nat(_) | Token::Open)
        )
    }

    fn term(&mut self) -> Result<RigMonomial> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                break;
            }
            acc = acc.times(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RigMonomial> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let n = match self.peek() {
            Some(Token::Nat(n)) => *n,
            _ => return Err(self.err("expected an exponent after `^`")),
        };
        self.pos += 1;
        if n == 0 {
            if base.is_theta() {
                return Err(self.err("`0^0` is undefined"));
            }
            return Ok(RigMonomial::one(self.mode));
        }
        let mut acc = base.clone();
        for _ in 1..n {
            acc = acc.times(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RigMonomial> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of expression"))?;
        self.pos += 1;
        match tok {
            Token::Nat(0) => Ok(RigMonomial::theta()),
            Token::Nat(1) => Ok(RigMonomial::one(self.mode)),
            Token::Nat(n) => Err(self.err(format!(
                "numeral `{n}` is not allowed; write it as a sum of 1s"
            ))),
            Token::Ident(name) => {
                let s = self.alphabet.symbol(&name)?;
                Ok(RigMonomial::singleton(BaseMonomial::letter(self.mode, s)))
            }
            Token::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(self.err(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_expr_at(text: &str, alphabet: &Alphabet, mode: Mode, line: usize) -> Result<RigMonomial> {
    let tokens = tokenize(text, line)?;
    if tokens.is_empty() {
        return Err(Error::parse(line, "empty expression"));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        alphabet,
        mode,
        line,
    };
    let m = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err(format!("unexpected trailing input at token {}", p.pos + 1)));
    }
    Ok(m)
}

/// Parse a semiring expression over `alphabet`.
pub fn parse_expr(text: &str, alphabet: &Alphabet, mode: Mode) -> Result<RigMonomial> {
    parse_expr_at(text, alphabet, mode, 1)
}

/// Parse and validate a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut mode = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order_word: Option<(usize, String)> = None;
    let mut rels: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "mode" => {
                if mode.is_some() {
                    return Err(Error::parse(line, "duplicate `mode` line"));
                }
                mode = Some(match value {
                    "commutative" => Mode::Commutative,
                    "noncommutative" => Mode::Noncommutative,
                    other => return Err(Error::parse(line, format!("unknown mode `{other}`"))),
                });
            }
            "vars" => {
                if vars.is_some() {
                    return Err(Error::parse(line, "duplicate `vars` line"));
                }
                let names: Vec<String> = value
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                for n in &names {
                    let ok = matches!(tokenize(n, line)?.as_slice(), [Token::Ident(t)] if t == n);
                    if !ok {
                        return Err(Error::parse(line, format!("invalid variable name `{n}`")));
                    }
                }
                vars = Some(names);
            }
            "order" => {
                if order_word.is_some() {
                    return Err(Error::parse(line, "duplicate `order` line"));
                }
                order_word = Some((line, value.to_string()));
            }
            "rel" => rels.push((line, value.to_string())),
            other => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }
    let mode = mode.unwrap_or(Mode::Commutative);
    let vars = vars.ok_or_else(|| Error::Presentation("missing `vars` line".into()))?;
    let alphabet = Alphabet::new(vars)?;
    let order = match order_word {
        Some((line, w)) => RigOrder::from_keyword(&w, mode).map_err(|e| match e {
            Error::Presentation(m) => Error::parse(line, m),
            other => other,
        })?,
        None => RigOrder::default_for(mode),
    };
    let mut relations = Vec::new();
    for (line, text) in rels {
        let (l, r) = text
            .split_once('=')
            .ok_or_else(|| Error::parse(line, "relation needs `=`"))?;
        let lhs = parse_expr_at(l, &alphabet, mode, line)?;
        let rhs = parse_expr_at(r, &alphabet, mode, line)?;
        if lhs == rhs {
            return Err(Error::parse(line, "relation has identical sides"));
        }
        relations.push((lhs, rhs));
    }
    Presentation::new(mode, alphabet, order, relations)
}

pub fn render_base(b: &BaseMonomial, alphabet: &Alphabet) -> String {
    if b.is_one() {
        return "1".into();
    }
    b.letter_runs()
        .into_iter()
        .map(|(s, n)| {
            if n == 1 {
                alphabet.name(s).to_string()
            } else {
                format!("{}^{n}", alphabet.name(s))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Components ascending in the base order, joined by ` + `.
pub fn render_monomial(m: &RigMonomial, alphabet: &Alphabet, order: &RigOrder) -> String {
    if m.is_theta() {
        return "0".into();
    }
    let mut comps: Vec<&BaseMonomial> = m.components().collect();
    comps.sort_by(|a, b| order.cmp_base(a, b));
    comps
        .into_iter()
        .map(|b| render_base(b, alphabet))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Terms in descending order as `c [m]`, with unit coefficients omitted.
pub fn render_polynomial<K: Coefficient>(
    p: &Polynomial<K>,
    alphabet: &Alphabet,
    order: &RigOrder,
) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in order.sorted_support(p).into_iter().enumerate() {
        let negative = *c < K::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !magnitude.is_one() {
            write!(out, "{magnitude} ").unwrap();
        }
        write!(out, "[{}]", render_monomial(m, alphabet, order)).unwrap();
    }
    out
}

/// `lhs = rhs` for a binomial relation, `poly = 0` otherwise.
pub fn render_relation<K: Coefficient>(
    r: &Relation<K>,
    alphabet: &Alphabet,
    order: &RigOrder,
) -> String {
    match relation_sides(r) {
        Some((l, o)) => format!(
            "{} = {}",
            render_monomial(&l, alphabet, order),
            render_monomial(&o, alphabet, order)
        ),
        None => format!("{} = 0", render_polynomial(r.poly(), alphabet, order)),
    }
}

/// One numbered line per relation.
pub fn render_basis<K: Coefficient>(system: &System<K>) -> String {
    let mut out = String::new();
    for (i, r) in system.relations().iter().enumerate() {
        writeln!(
            out,
            "#{}: {}",
            i + 1,
            render_relation(r, system.alphabet(), system.order())
        )
        .unwrap();
    }
    out
}

pub fn render_context(
    c: &Context,
    relation: usize,
    alphabet: &Alphabet,
    order: &RigOrder,
) -> String {
    format!(
        "({}) [rel #{}] ({}) + {}",
        render_base(&c.left, alphabet),
        relation + 1,
        render_base(&c.right, alphabet),
        render_monomial(&c.pad, alphabet, order)
    )
}

/// `coeff * (left) [rel #k] (right) + pad`, one line per elimination.
pub fn render_trace<K: Coefficient>(
    t: &ReductionTrace<K>,
    alphabet: &Alphabet,
    order: &RigOrder,
) -> String {
    let mut out = String::new();
    for st in &t.steps {
        writeln!(
            out,
            "{} * {}",
            st.coeff,
            render_context(&st.context, st.relation, alphabet, order)
        )
        .unwrap();
    }
    out
}

/// The report as JSON. Non-binomial relations put the polynomial in `lhs`
/// and `0` in `rhs`.
pub fn report_json<K: Coefficient>(report: &CompletionReport<K>) -> serde_json::Value {
    let sys = &report.basis;
    let basis: Vec<serde_json::Value> = sys
        .relations()
        .iter()
        .map(|r| {
            let (lhs, rhs) = match relation_sides(r) {
                Some((l, o)) => (
                    render_monomial(&l, sys.alphabet(), sys.order()),
                    render_monomial(&o, sys.alphabet(), sys.order()),
                ),
                None => (
                    render_polynomial(r.poly(), sys.alphabet(), sys.order()),
                    "0".to_string(),
                ),
            };
            serde_json::json!({ "lhs": lhs, "rhs": rhs })
        })
        .collect();
    serde_json::json!({
        "status": report.status.to_string(),
        "basis": basis,
        "stats": report.stats,
        "limits": report.limits,
    })
}
