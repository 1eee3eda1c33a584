//! Words, commutative monomials, rig monomials and the semiring algebra.
//!
//! A rig monomial is an element of the free (commutative) semiring: a finite
//! multiset of base monomials, where `∘` is multiset union and `·` distributes
//! over it. The empty multiset is θ, the additive identity, which is a
//! monomial in its own right and must not be confused with the zero
//! polynomial of the algebra built on top of it.

mod base;
mod enumerate;
mod poly;
mod rig;

pub use base::BaseMonomial;
pub use enumerate::{base_monomials, monomials_within};
pub use poly::{Coefficient, Polynomial};
pub use rig::{Lcm, Measures, RigMonomial};

use std::fmt;

use crate::error::{Error, Result};

/// Whether base monomials are words (free monoid) or commutative monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Commutative,
    Noncommutative,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Commutative => f.write_str("commutative"),
            Mode::Noncommutative => f.write_str("noncommutative"),
        }
    }
}

/// A generator. The index doubles as its precedence: a larger index is a
/// greater letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Named generators listed in ascending precedence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if out.contains(&name) {
                return Err(Error::Presentation(format!("duplicate variable `{name}`")));
            }
            out.push(name);
        }
        if out.len() > u16::MAX as usize {
            return Err(Error::Presentation("alphabet too large".into()));
        }
        Ok(Alphabet { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u16))
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Symbol(i as u16))
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}
