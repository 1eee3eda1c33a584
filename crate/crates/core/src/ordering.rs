//! Monomial orders on rig monomials.
//!
//! A rig monomial is compared by sorting its components in descending base
//! order and comparing the resulting sequences lexicographically, a proper
//! prefix being smaller. For a total base order this is the multiset
//! extension of that order. It makes θ the minimum and is compatible with
//! every context `⋆ ↦ (a·⋆·b) ∘ u`, because `c ↦ a·c·b` is strictly monotone
//! on base monomials and `∘ u` adds the same components to both sides.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::terms::{BaseMonomial, Coefficient, Mode, Polynomial, RigMonomial, Symbol};

/// Order on base monomials. Both are degree-first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    /// Degree, then letters left to right. On commutative monomials this is
    /// degree-then-lex on exponent vectors.
    DegLex,
    /// Degree, then letters right to left. Words only.
    DegRtlLex,
}

/// Multiset extension of a [`BaseOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RigOrder {
    base: BaseOrder,
}

/// Sort key realising a [`RigOrder`] as a plain lexicographic comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RigKey(Vec<(usize, Vec<Symbol>)>);

impl RigOrder {
    pub const fn new(base: BaseOrder) -> Self {
        RigOrder { base }
    }

    pub const fn deg_lex() -> Self {
        Self::new(BaseOrder::DegLex)
    }

    pub const fn deg_rtl_lex() -> Self {
        Self::new(BaseOrder::DegRtlLex)
    }

    pub fn base(&self) -> BaseOrder {
        self.base
    }

    /// Default order for a mode.
    pub fn default_for(mode: Mode) -> Self {
        match mode {
            Mode::Commutative => Self::deg_lex(),
            Mode::Noncommutative => Self::deg_rtl_lex(),
        }
    }

    /// Keyword used in presentation files.
    pub fn keyword(&self) -> &'static str {
        match self.base {
            BaseOrder::DegLex => "wtlex",
            BaseOrder::DegRtlLex => "deglenrlex",
        }
    }

    pub fn from_keyword(word: &str, mode: Mode) -> Result<Self> {
        let order = match word {
            "wtlex" => Self::deg_lex(),
            "deglenrlex" => Self::deg_rtl_lex(),
            other => {
                return Err(Error::Presentation(format!("unknown order `{other}`")));
            }
        };
        order.check_mode(mode)?;
        Ok(order)
    }

    /// Right-to-left comparison is meaningless for commutative monomials.
    pub fn check_mode(&self, mode: Mode) -> Result<()> {
        if self.base == BaseOrder::DegRtlLex && mode == Mode::Commutative {
            return Err(Error::ModeMismatch(
                "order `deglenrlex` needs noncommutative mode".into(),
            ));
        }
        Ok(())
    }

    pub fn cmp_base(&self, a: &BaseMonomial, b: &BaseMonomial) -> Ordering {
        match self.base {
            BaseOrder::DegLex => a.cmp(b),
            BaseOrder::DegRtlLex => a.cmp_deg_rtl(b),
        }
    }

    pub fn compare(&self, m: &RigMonomial, n: &RigMonomial) -> Ordering {
        match self.base {
            // stored runs are already ascending in deg-lex
            BaseOrder::DegLex => m.components().rev().cmp(n.components().rev()),
            BaseOrder::DegRtlLex => {
                let a = self.descending(m);
                let b = self.descending(n);
                a.iter()
                    .zip(b.iter())
                    .map(|(x, y)| x.cmp_deg_rtl(y))
                    .find(|o| o.is_ne())
                    .unwrap_or_else(|| a.len().cmp(&b.len()))
            }
        }
    }

    pub fn less(&self, m: &RigMonomial, n: &RigMonomial) -> bool {
        self.compare(m, n) == Ordering::Less
    }

    /// Components sorted greatest first.
    pub fn descending<'a>(&self, m: &'a RigMonomial) -> Vec<&'a BaseMonomial> {
        let mut v: Vec<&BaseMonomial> = m.components().collect();
        v.sort_by(|a, b| self.cmp_base(b, a));
        v
    }

    /// Distinct components, greatest first.
    pub fn distinct_descending<'a>(&self, m: &'a RigMonomial) -> Vec<&'a BaseMonomial> {
        let mut v: Vec<&BaseMonomial> = m.distinct().collect();
        v.sort_by(|a, b| self.cmp_base(b, a));
        v
    }

    pub fn sort_key(&self, m: &RigMonomial) -> RigKey {
        RigKey(
            self.descending(m)
                .into_iter()
                .map(|b| {
                    let mut letters = b.letters().to_vec();
                    if self.base == BaseOrder::DegRtlLex {
                        letters.reverse();
                    }
                    (b.degree(), letters)
                })
                .collect(),
        )
    }

    /// The greatest monomial of the support with its coefficient.
    pub fn leading<'a, K: Coefficient>(
        &self,
        f: &'a Polynomial<K>,
    ) -> Result<(&'a RigMonomial, &'a K)> {
        f.terms()
            .max_by(|a, b| self.compare(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial<K: Coefficient>(&self, f: &Polynomial<K>) -> Result<RigMonomial> {
        self.leading(f).map(|(m, _)| m.clone())
    }

    pub fn make_monic<K: Coefficient>(&self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        let (_, c) = self.leading(f)?;
        if c.is_one() {
            return Ok(f.clone());
        }
        let inv = K::one() / c.clone();
        Ok(f.scale(&inv))
    }

    pub fn is_monic<K: Coefficient>(&self, f: &Polynomial<K>) -> bool {
        self.leading(f).map(|(_, c)| c.is_one()).unwrap_or(false)
    }

    /// Support of `f`, greatest first.
    pub fn sorted_support<'a, K: Coefficient>(
        &self,
        f: &'a Polynomial<K>,
    ) -> Vec<(&'a RigMonomial, &'a K)> {
        let mut v: Vec<_> = f.terms().collect();
        v.sort_by(|a, b| self.compare(b.0, a.0));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn xp(n: usize) -> BaseMonomial {
        BaseMonomial::power_of(Mode::Commutative, Symbol(0), n)
    }

    fn m(exps: &[usize]) -> RigMonomial {
        RigMonomial::from_components(exps.iter().map(|&e| xp(e)))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    const ORD: RigOrder = RigOrder::deg_lex();

    #[test]
    fn compare_examples() {
        assert_eq!(ORD.compare(&m(&[0, 2]), &m(&[1])), Ordering::Greater);
        assert_eq!(ORD.compare(&m(&[1, 3]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(ORD.compare(&RigMonomial::theta(), &m(&[0])), Ordering::Less);
        assert_eq!(ORD.compare(&m(&[4]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn rtl_lex_leads_inverse_relations() {
        // alphabet ascending: e' < y < y' < x < x'
        let (y, yi, x, xi) = (Symbol(1), Symbol(2), Symbol(3), Symbol(4));
        let w = |l: &[Symbol]| {
            RigMonomial::singleton(BaseMonomial::from_letters(Mode::Noncommutative, l.to_vec()))
        };
        let rtl = RigOrder::deg_rtl_lex();
        assert_eq!(rtl.compare(&w(&[xi, yi]), &w(&[x, y])), Ordering::Greater);
        assert_eq!(rtl.compare(&w(&[x, yi]), &w(&[xi, y])), Ordering::Greater);
        // plain deg-lex would orient the second relation the other way
        assert_eq!(ORD.compare(&w(&[x, yi]), &w(&[xi, y])), Ordering::Less);
    }

    #[test]
    fn leading_and_monic() {
        let f = P::binomial(m(&[0, 2]), m(&[1]));
        let (lm, c) = ORD.leading(&f).unwrap();
        assert_eq!((lm, c), (&m(&[0, 2]), &int(1)));

        let t = P::monomial(RigMonomial::theta());
        assert_eq!(ORD.leading(&t).unwrap().0, &RigMonomial::theta());
        assert_eq!(ORD.leading(&P::zero()), Err(Error::ZeroPolynomial));

        let g = P::binomial(m(&[1]), RigMonomial::theta()).scale(&int(2));
        assert_eq!(
            ORD.make_monic(&g).unwrap(),
            P::binomial(m(&[1]), RigMonomial::theta())
        );
        assert_eq!(ORD.make_monic(&f).unwrap(), f);

        let h = P::binomial(m(&[0, 4]), m(&[5]));
        assert_eq!(
            ORD.make_monic(&h).unwrap(),
            P::binomial(m(&[5]), m(&[0, 4]))
        );
        assert!(ORD.make_monic(&P::zero()).is_err());
    }

    #[test]
    fn context_regression_case() {
        // x³ > x∘x, and after x·⋆: x⁴ > x²∘x²
        assert_eq!(ORD.compare(&m(&[3]), &m(&[1, 1])), Ordering::Greater);
        let x = xp(1);
        let one = xp(0);
        assert_eq!(
            ORD.compare(&m(&[3]).sandwich(&x, &one), &m(&[1, 1]).sandwich(&x, &one)),
            Ordering::Greater
        );
    }

    #[test]
    fn sort_key_agrees_with_compare() {
        let ms = [
            m(&[]),
            m(&[0]),
            m(&[0, 0]),
            m(&[1]),
            m(&[0, 2]),
            m(&[1, 1]),
            m(&[3]),
        ];
        for a in &ms {
            for b in &ms {
                assert_eq!(ORD.compare(a, b), ORD.sort_key(a).cmp(&ORD.sort_key(b)));
            }
        }
    }
}
