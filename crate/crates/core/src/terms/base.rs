use std::cmp::Ordering;

use super::{Mode, Symbol};

/// A word over the alphabet, or a commutative monomial.
///
/// Both flavours are stored as a letter sequence. Commutative monomials keep
/// their letters sorted with the greatest symbol first, so `x²y` with `x > y`
/// is `[x, x, y]`; comparing two such sequences lexicographically is the
/// lexicographic order on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseMonomial {
    mode: Mode,
    letters: Vec<Symbol>,
}

impl BaseMonomial {
    /// The empty word, or the commutative monomial with all exponents zero.
    pub fn one(mode: Mode) -> Self {
        BaseMonomial {
            mode,
            letters: Vec::new(),
        }
    }

    pub fn letter(mode: Mode, s: Symbol) -> Self {
        BaseMonomial {
            mode,
            letters: vec![s],
        }
    }

    pub fn from_letters(mode: Mode, mut letters: Vec<Symbol>) -> Self {
        if mode == Mode::Commutative {
            letters.sort_unstable_by(|a, b| b.cmp(a));
        }
        BaseMonomial { mode, letters }
    }

    /// `s^exp` as a single base monomial.
    pub fn power_of(mode: Mode, s: Symbol, exp: usize) -> Self {
        BaseMonomial {
            mode,
            letters: vec![s; exp],
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent of `s` (commutative) or number of occurrences (words).
    pub fn exponent(&self, s: Symbol) -> usize {
        self.letters.iter().filter(|&&l| l == s).count()
    }

    pub fn mul(&self, other: &BaseMonomial) -> BaseMonomial {
        debug_assert_eq!(self.mode, other.mode);
        match self.mode {
            Mode::Noncommutative => {
                let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
                letters.extend_from_slice(&self.letters);
                letters.extend_from_slice(&other.letters);
                BaseMonomial {
                    mode: self.mode,
                    letters,
                }
            }
            Mode::Commutative => {
                let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
                let (mut i, mut j) = (0, 0);
                let (a, b) = (&self.letters, &other.letters);
                while i < a.len() && j < b.len() {
                    if a[i] >= b[j] {
                        letters.push(a[i]);
                        i += 1;
                    } else {
                        letters.push(b[j]);
                        j += 1;
                    }
                }
                letters.extend_from_slice(&a[i..]);
                letters.extend_from_slice(&b[j..]);
                BaseMonomial {
                    mode: self.mode,
                    letters,
                }
            }
        }
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &BaseMonomial, right: &BaseMonomial) -> BaseMonomial {
        if left.is_one() && right.is_one() {
            return self.clone();
        }
        left.mul(self).mul(right)
    }

    /// Commutative quotient `self / divisor`, if `divisor` divides `self`.
    pub fn quotient(&self, divisor: &BaseMonomial) -> Option<BaseMonomial> {
        debug_assert_eq!(self.mode, Mode::Commutative);
        let mut rest = Vec::with_capacity(self.letters.len());
        let mut j = 0;
        for &l in &self.letters {
            if j < divisor.letters.len() && divisor.letters[j] == l {
                j += 1;
            } else if j < divisor.letters.len() && divisor.letters[j] > l {
                // divisor needs a letter that `self` has run past
                return None;
            } else {
                rest.push(l);
            }
        }
        (j == divisor.letters.len()).then_some(BaseMonomial {
            mode: self.mode,
            letters: rest,
        })
    }

    /// Commutative least common multiple.
    pub fn lcm(&self, other: &BaseMonomial) -> BaseMonomial {
        debug_assert_eq!(self.mode, Mode::Commutative);
        let (a, b) = (&self.letters, &other.letters);
        let mut letters = Vec::with_capacity(a.len().max(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) => x.max(y),
                (Some(&x), None) => x,
                (None, Some(&y)) => y,
                (None, None) => unreachable!(),
            };
            let ca = a[i..].iter().take_while(|&&l| l == next).count();
            let cb = b[j..].iter().take_while(|&&l| l == next).count();
            letters.extend(std::iter::repeat_n(next, ca.max(cb)));
            i += ca;
            j += cb;
        }
        BaseMonomial {
            mode: self.mode,
            letters,
        }
    }

    /// Every split `self = a · pattern · b` of a word, in order of position.
    pub fn factorizations(&self, pattern: &BaseMonomial) -> Vec<(BaseMonomial, BaseMonomial)> {
        debug_assert_eq!(self.mode, Mode::Noncommutative);
        let n = self.letters.len();
        let k = pattern.letters.len();
        if k > n {
            return Vec::new();
        }
        (0..=n - k)
            .filter(|&i| self.letters[i..i + k] == pattern.letters[..])
            .map(|i| (self.slice(0, i), self.slice(i + k, n)))
            .collect()
    }

    /// Sub-word `letters[from..to]`.
    pub fn slice(&self, from: usize, to: usize) -> BaseMonomial {
        BaseMonomial {
            mode: self.mode,
            letters: self.letters[from..to].to_vec(),
        }
    }

    /// Runs of equal consecutive letters, used for `x^n` rendering.
    pub fn letter_runs(&self) -> Vec<(Symbol, usize)> {
        let mut runs: Vec<(Symbol, usize)> = Vec::new();
        for &l in &self.letters {
            match runs.last_mut() {
                Some((s, n)) if *s == l => *n += 1,
                _ => runs.push((l, 1)),
            }
        }
        runs
    }

    /// Degree first, then letters compared right to left.
    pub fn cmp_deg_rtl(&self, other: &BaseMonomial) -> Ordering {
        self.mode
            .cmp(&other.mode)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.iter().rev().cmp(other.letters.iter().rev()))
    }
}

/// Structural order: degree, then lexicographic. This is also the
/// degree-lexicographic base order.
impl Ord for BaseMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mode
            .cmp(&other.mode)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for BaseMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
