//! Sparse polynomials: term lists sorted strictly descending in the active
//! order, multiplied through a basis-word oracle.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingSpec};
use crate::words::{self, Alphabet, Letter, OrderSpec, Overlap, Word};

/// How two basis words multiply. Every shipped oracle returns a single monic
/// word, so products never vanish and leading coefficients survive
/// multiplication by words unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MulOracle {
    /// Free associative algebra: products concatenate.
    #[default]
    FreeConcat,
    /// Commutative polynomial ring: basis words are non-decreasing and
    /// products are sorted merges.
    CommutativeMerge,
}

impl MulOracle {
    pub fn in_basis(&self, w: &Word) -> bool {
        match self {
            MulOracle::FreeConcat => true,
            MulOracle::CommutativeMerge => w.is_non_decreasing(),
        }
    }

    pub fn product(&self, a: &Word, b: &Word) -> Word {
        match self {
            MulOracle::FreeConcat => a.concat(b),
            MulOracle::CommutativeMerge => merge_sorted(a.letters(), b.letters()),
        }
    }

    /// `u · w · v`
    pub fn wrap(&self, u: &Word, w: &Word, v: &Word) -> Word {
        match self {
            MulOracle::FreeConcat => w.wrap(u, v),
            MulOracle::CommutativeMerge => {
                let uw = merge_sorted(u.letters(), w.letters());
                merge_sorted(uw.letters(), v.letters())
            }
        }
    }

    /// Every context `(u, v)` with `u · needle · v = haystack`. Under the
    /// commutative oracle all contexts give the same product, so one
    /// representative `(haystack / needle, 1)` is returned.
    pub fn divisors(&self, needle: &Word, haystack: &Word) -> Vec<(Word, Word)> {
        match self {
            MulOracle::FreeConcat => words::factorizations(needle, haystack),
            MulOracle::CommutativeMerge => multiset_quotient(haystack, needle)
                .map(|q| vec![(q, Word::empty())])
                .unwrap_or_default(),
        }
    }

    pub fn divides(&self, needle: &Word, haystack: &Word) -> bool {
        match self {
            MulOracle::FreeConcat => haystack.contains_factor(needle),
            MulOracle::CommutativeMerge => multiset_quotient(haystack, needle).is_some(),
        }
    }

    /// Ambiguities of two leading words. `same_generator` selects the
    /// self-pair convention (mirror placements identified, trivial placement
    /// dropped). Placements where the words do not share a letter are never
    /// returned.
    pub fn overlaps(&self, w: &Word, w2: &Word, same_generator: bool) -> Result<Vec<Overlap>> {
        match self {
            MulOracle::FreeConcat if same_generator => words::overlaps(w, w2),
            MulOracle::FreeConcat => words::overlaps_between(w, w2),
            MulOracle::CommutativeMerge => {
                if w.is_empty() || w2.is_empty() {
                    return Err(Error::EmptyWord);
                }
                if same_generator {
                    return Ok(Vec::new());
                }
                let lcm = multiset_lcm(w, w2);
                if lcm.len() == w.len() + w2.len() {
                    // coprime leading words
                    return Ok(Vec::new());
                }
                Ok(vec![Overlap {
                    u: multiset_quotient(&lcm, w).expect("lcm is a multiple"),
                    v: Word::empty(),
                    u2: multiset_quotient(&lcm, w2).expect("lcm is a multiple"),
                    v2: Word::empty(),
                    ambiguity: lcm,
                }])
            }
        }
    }
}

fn merge_sorted(a: &[Letter], b: &[Letter]) -> Word {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Word::new(out)
}

/// `big / small` as sorted multisets, if `small` divides `big`.
fn multiset_quotient(big: &Word, small: &Word) -> Option<Word> {
    let (a, b) = (big.letters(), small.letters());
    let mut out = Vec::with_capacity(a.len().saturating_sub(b.len()));
    let mut j = 0;
    for &l in a {
        if j < b.len() && b[j] == l {
            j += 1;
        } else if j < b.len() && b[j] < l {
            return None;
        } else {
            out.push(l);
        }
    }
    (j == b.len()).then(|| Word::new(out))
}

fn multiset_lcm(a: &Word, b: &Word) -> Word {
    let (a, b) = (a.letters(), b.letters());
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    Word::new(out)
}

/// The ambient algebra: coefficient ring, basis oracle, order and number of
/// generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub ring: RingSpec,
    pub oracle: MulOracle,
    pub order: OrderSpec,
    pub rank: usize,
}

impl Algebra {
    pub fn free(ring: RingSpec, rank: usize) -> Self {
        Algebra {
            ring,
            oracle: MulOracle::FreeConcat,
            order: OrderSpec::DegLex,
            rank,
        }
    }

    pub fn commutative(ring: RingSpec, rank: usize) -> Self {
        Algebra {
            oracle: MulOracle::CommutativeMerge,
            ..Algebra::free(ring, rank)
        }
    }

    pub fn check_compatible(&self, other: &Algebra) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.oracle != other.oracle || self.order != other.order {
            return Err(Error::OracleMismatch);
        }
        if self.rank != other.rank {
            return Err(Error::AlphabetMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.letters().iter().any(|&l| l as usize >= self.rank) || !self.oracle.in_basis(w) {
            return Err(Error::BasisViolation(format!("{:?}", w.letters())));
        }
        Ok(())
    }

    fn check_coeff(&self, c: &RingElement) -> Result<()> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                c.ring().to_string(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: RingElement,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    algebra: Algebra,
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero(algebra: Algebra) -> Self {
        Poly {
            algebra,
            terms: Vec::new(),
        }
    }

    pub fn constant(algebra: Algebra, c: RingElement) -> Result<Self> {
        Poly::monomial(algebra, c, Word::empty())
    }

    pub fn monomial(algebra: Algebra, c: RingElement, word: Word) -> Result<Self> {
        Poly::normalize(algebra, vec![(c, word)])
    }

    /// Sorts descending, merges like terms and drops zero coefficients.
    pub fn normalize(algebra: Algebra, raw: Vec<(RingElement, Word)>) -> Result<Self> {
        for (c, w) in &raw {
            algebra.check_coeff(c)?;
            algebra.check_word(w)?;
        }
        Ok(Poly::from_raw(algebra, raw))
    }

    pub(crate) fn from_raw(algebra: Algebra, mut raw: Vec<(RingElement, Word)>) -> Self {
        let order = algebra.order;
        raw.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (c, w) in raw {
            match terms.last_mut() {
                Some(t) if t.word == w => t.coeff = &t.coeff + &c,
                _ => terms.push(Term { coeff: c, word: w }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Poly { algebra, terms }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn ring(&self) -> RingSpec {
        self.algebra.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(LC(f), LM(f))`
    pub fn leading(&self) -> Result<(&RingElement, &Word)> {
        self.terms
            .first()
            .map(|t| (&t.coeff, &t.word))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn lm(&self) -> Option<&Word> {
        self.terms.first().map(|t| &t.word)
    }

    pub fn lc(&self) -> Option<&RingElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Longest word length, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.word.len()).max()
    }

    pub fn coefficient_of(&self, w: &Word) -> RingElement {
        self.terms
            .iter()
            .find(|t| &t.word == w)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.algebra.ring.zero())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.algebra.check_compatible(&other.algebra)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.algebra.check_compatible(&other.algebra)?;
        Ok(self.merge(other.terms.iter().map(|t| Term {
            coeff: -&t.coeff,
            word: t.word.clone(),
        })))
    }

    pub fn neg(&self) -> Poly {
        Poly {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    word: t.word.clone(),
                })
                .collect(),
        }
    }

    /// `c · (u · self · v)`, term by term through the oracle.
    pub fn scale(&self, c: &RingElement, u: &Word, v: &Word) -> Result<Poly> {
        self.algebra.check_coeff(c)?;
        self.algebra.check_word(u)?;
        self.algebra.check_word(v)?;
        Ok(self.scale_unchecked(c, u, v))
    }

    pub(crate) fn scale_unchecked(&self, c: &RingElement, u: &Word, v: &Word) -> Poly {
        let oracle = self.algebra.oracle;
        let raw = self
            .terms
            .iter()
            .map(|t| (c * &t.coeff, oracle.wrap(u, &t.word, v)))
            .collect();
        Poly::from_raw(self.algebra, raw)
    }

    /// `self + c · (u · g · v)`
    pub(crate) fn add_scaled(&self, c: &RingElement, u: &Word, g: &Poly, v: &Word) -> Poly {
        let scaled = g.scale_unchecked(c, u, v);
        self.merge(scaled.terms)
    }

    pub fn scalar_mul(&self, c: &RingElement) -> Result<Poly> {
        self.scale(c, &Word::empty(), &Word::empty())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.algebra.check_compatible(&other.algebra)?;
        let oracle = self.algebra.oracle;
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((&a.coeff * &b.coeff, oracle.product(&a.word, &b.word)));
            }
        }
        Ok(Poly::from_raw(self.algebra, raw))
    }

    /// Drops the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    fn merge(&self, other: impl IntoIterator<Item = Term>) -> Poly {
        let order = self.algebra.order;
        let mut out = Vec::with_capacity(self.terms.len());
        let mut left = self.terms.iter().cloned().peekable();
        let mut right = other.into_iter().peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (Some(a), Some(b)) => order.compare(&a.word, &b.word),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(left.next().unwrap()),
                Ordering::Less => out.push(right.next().unwrap()),
                Ordering::Equal => {
                    let a = left.next().unwrap();
                    let b = right.next().unwrap();
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            word: a.word,
                        });
                    }
                }
            }
        }
        Poly {
            algebra: self.algebra,
            terms: out,
        }
    }

    /// Canonical text form, e.g. `2*x y - y x + 1`; zero prints as `0`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let magnitude = if negative { -&t.coeff } else { t.coeff.clone() };
            match (i, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if t.word.is_empty() {
                s.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                s.push_str(&alphabet.format_word(&t.word));
            } else {
                s.push_str(&format!("{}*{}", magnitude, alphabet.format_word(&t.word)));
            }
        }
        s
    }
}
