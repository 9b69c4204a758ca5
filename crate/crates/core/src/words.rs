//! Words over a finite ordered alphabet, the graded-lexicographic order, and
//! the combinatorics of factors and overlaps.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Letter = u32;

/// A finite sequence of generator indices. The empty word is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `u · self · v`
    pub fn wrap(&self, u: &Word, v: &Word) -> Word {
        let mut out = Vec::with_capacity(u.len() + self.len() + v.len());
        out.extend_from_slice(&u.0);
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&v.0);
        Word(out)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn contains_factor(&self, needle: &Word) -> bool {
        occurrences(needle, self).next().is_some()
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[Letter; N]> for Word {
    fn from(v: [Letter; N]) -> Self {
        Word(v.to_vec())
    }
}

/// Ordered, named generators. Index order is the generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if !is_symbol(name) {
                return Err(Error::parse(1, format!("invalid symbol name `{name}`")));
            }
            if index.insert(name.clone(), i as Letter).is_some() {
                return Err(Error::parse(1, format!("duplicate symbol `{name}`")));
            }
        }
        Ok(Alphabet { names, index })
    }

    /// `x1, …, xn`
    pub fn indexed(n: usize) -> Self {
        Alphabet::new((1..=n).map(|i| format!("x{i}"))).expect("generated names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    /// Whitespace-separated names; the empty word prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<&str> = w.letters().iter().map(|&l| self.name(l)).collect();
        parts.join(" ")
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut col = 1;
        for tok in text.split(|c: char| c.is_whitespace() || c == '*') {
            if !tok.is_empty() {
                let l = self
                    .lookup(tok)
                    .ok_or_else(|| Error::parse(col, format!("unknown symbol `{tok}`")))?;
                letters.push(l);
            }
            col += tok.len() + 1;
        }
        Ok(Word(letters))
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Alphabet, &'a Word);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format_word(self.1))
            }
        }
        D(self, w)
    }
}

pub(crate) fn is_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Monomial orderings on words. Any added variant must satisfy both
/// admissibility axioms (see the property suite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderSpec {
    /// Length first, then letters left to right.
    #[default]
    DegLex,
}

impl OrderSpec {
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        match self {
            OrderSpec::DegLex => a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)),
        }
    }
}

/// Start positions of `needle` as a contiguous factor of `haystack`.
pub fn occurrences<'a>(needle: &'a Word, haystack: &'a Word) -> impl Iterator<Item = usize> + 'a {
    let n = needle.len();
    let h = haystack.len();
    (0..(h + 1).saturating_sub(n)).filter(move |&i| haystack.0[i..i + n] == needle.0[..])
}

/// Every `(u, v)` with `u · needle · v = haystack`, left to right.
pub fn factorizations(needle: &Word, haystack: &Word) -> Vec<(Word, Word)> {
    occurrences(needle, haystack)
        .map(|i| {
            (
                haystack.slice(0, i),
                haystack.slice(i + needle.len(), haystack.len()),
            )
        })
        .collect()
}

/// Witness that `u·w·v = u2·w2·v2 = ambiguity` for two source words `w`,
/// `w2` placed so that they touch (proper overlap or inclusion).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub u: Word,
    pub v: Word,
    pub u2: Word,
    pub v2: Word,
    pub ambiguity: Word,
}

impl Overlap {
    fn swapped(&self) -> Overlap {
        Overlap {
            u: self.u2.clone(),
            v: self.v2.clone(),
            u2: self.u.clone(),
            v2: self.v.clone(),
            ambiguity: self.ambiguity.clone(),
        }
    }

    fn is_trivial(&self) -> bool {
        self.u.is_empty() && self.v.is_empty() && self.u2.is_empty() && self.v2.is_empty()
    }
}

/// Overlap ambiguities of `w` and `w2` in the free monoid: proper overlaps in
/// both directions and inclusions in both directions. Disjoint placements are
/// never produced.
///
/// When `w == w2` the pair is treated as a word with itself: mirror images are
/// identified and the trivial placement is dropped. Use
/// [`overlaps_between`] for two distinct generators that happen to share a
/// leading word.
pub fn overlaps(w: &Word, w2: &Word) -> Result<Vec<Overlap>> {
    overlaps_impl(w, w2, w == w2)
}

/// Like [`overlaps`] but never identifies mirror placements and keeps the
/// full-word coincidence of equal words.
pub fn overlaps_between(w: &Word, w2: &Word) -> Result<Vec<Overlap>> {
    overlaps_impl(w, w2, false)
}

fn overlaps_impl(w: &Word, w2: &Word, self_pair: bool) -> Result<Vec<Overlap>> {
    if w.is_empty() || w2.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (a, b) = (w.len(), w2.len());
    let mut out: Vec<Overlap> = Vec::new();
    let mut push = |o: Overlap| {
        if self_pair && o.is_trivial() {
            return;
        }
        if out.contains(&o) || (self_pair && out.contains(&o.swapped())) {
            return;
        }
        out.push(o);
    };

    // suffix of w == prefix of w2
    for k in 1..a.min(b) {
        if w.0[a - k..] == w2.0[..k] {
            push(Overlap {
                u: Word::empty(),
                v: w2.slice(k, b),
                u2: w.slice(0, a - k),
                v2: Word::empty(),
                ambiguity: w.concat(&w2.slice(k, b)),
            });
        }
    }
    // suffix of w2 == prefix of w
    for k in 1..a.min(b) {
        if w2.0[b - k..] == w.0[..k] {
            push(Overlap {
                u: w2.slice(0, b - k),
                v: Word::empty(),
                u2: Word::empty(),
                v2: w.slice(k, a),
                ambiguity: w2.concat(&w.slice(k, a)),
            });
        }
    }
    // w2 inside w
    for (u2, v2) in factorizations(w2, w) {
        push(Overlap {
            u: Word::empty(),
            v: Word::empty(),
            u2,
            v2,
            ambiguity: w.clone(),
        });
    }
    // w inside w2
    for (u, v) in factorizations(w, w2) {
        push(Overlap {
            u,
            v,
            u2: Word::empty(),
            v2: Word::empty(),
            ambiguity: w2.clone(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const X: Letter = 0;
    const Y: Letter = 1;

    fn w(v: &[Letter]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn deglex_compare() {
        let o = OrderSpec::DegLex;
        assert_eq!(o.compare(&w(&[]), &w(&[X])), Ordering::Less);
        assert_eq!(o.compare(&w(&[X, Y]), &w(&[Y, X])), Ordering::Less);
        assert_eq!(o.compare(&w(&[X, X, Y]), &w(&[X, Y])), Ordering::Greater);
        assert_eq!(o.compare(&w(&[Y, X]), &w(&[Y, X])), Ordering::Equal);
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(
            factorizations(&w(&[X]), &w(&[X, Y, X])),
            vec![(w(&[]), w(&[Y, X])), (w(&[X, Y]), w(&[]))]
        );
        assert!(factorizations(&w(&[X, Y]), &w(&[Y, X])).is_empty());
        assert_eq!(
            factorizations(&w(&[X, X]), &w(&[X, X, X])),
            vec![(w(&[]), w(&[X])), (w(&[X]), w(&[]))]
        );
        assert_eq!(factorizations(&w(&[]), &w(&[X, Y])).len(), 3);
        assert!(factorizations(&w(&[X, Y, X]), &w(&[X])).is_empty());
    }

    #[test]
    fn overlap_of_xy_and_yx() {
        let got = overlaps(&w(&[X, Y]), &w(&[Y, X])).unwrap();
        assert_eq!(
            got,
            vec![
                Overlap {
                    u: w(&[]),
                    v: w(&[X]),
                    u2: w(&[X]),
                    v2: w(&[]),
                    ambiguity: w(&[X, Y, X]),
                },
                Overlap {
                    u: w(&[Y]),
                    v: w(&[]),
                    u2: w(&[]),
                    v2: w(&[Y]),
                    ambiguity: w(&[Y, X, Y]),
                },
            ]
        );
    }

    #[test]
    fn self_overlap_of_square() {
        let got = overlaps(&w(&[X, X]), &w(&[X, X])).unwrap();
        assert_eq!(
            got,
            vec![Overlap {
                u: w(&[]),
                v: w(&[X]),
                u2: w(&[X]),
                v2: w(&[]),
                ambiguity: w(&[X, X, X]),
            }]
        );
        // Two generators sharing the leading word xx see both placements
        // and the coincidence.
        assert_eq!(overlaps_between(&w(&[X, X]), &w(&[X, X])).unwrap().len(), 3);
    }

    #[test]
    fn inclusion() {
        let got = overlaps(&w(&[X, Y, X]), &w(&[Y])).unwrap();
        assert_eq!(
            got,
            vec![Overlap {
                u: w(&[]),
                v: w(&[]),
                u2: w(&[X]),
                v2: w(&[X]),
                ambiguity: w(&[X, Y, X]),
            }]
        );
    }

    #[test]
    fn no_self_overlap_for_unbordered_word() {
        assert!(overlaps(&w(&[Y, X]), &w(&[Y, X])).unwrap().is_empty());
    }

    #[test]
    fn empty_words_rejected() {
        assert_eq!(overlaps(&w(&[]), &w(&[X])), Err(Error::EmptyWord));
    }

    #[test]
    fn alphabet_text() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let word = a.parse_word("x y x").unwrap();
        assert_eq!(word, w(&[X, Y, X]));
        assert_eq!(a.format_word(&word), "x y x");
        assert_eq!(a.format_word(&Word::empty()), "1");
        assert_eq!(a.parse_word("1").unwrap(), Word::empty());
        assert!(a.parse_word("x z").is_err());
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert!(Alphabet::new(["x", ""]).is_err());
        assert!(Alphabet::new(["2x"]).is_err());
    }
}
