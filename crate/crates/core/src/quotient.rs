//! Normal words, the free module they span, and the splitting
//! `A = I ⊕ span(normal words)` for a Gröbner basis.

use std::fmt::Write as _;

use crate::critical_pairs::{check_groebner, Verdict};
use crate::division::{divide, GenSet, Strategy, DEFAULT_STEP_BUDGET};
use crate::error::{Error, Result};
use crate::poly::{MulOracle, Poly};
use crate::words::{Alphabet, Letter, Word};

pub fn is_normal(w: &Word, gens: &GenSet) -> bool {
    gens.is_normal_word(w)
}

/// Normal words up to a degree bound, grouped by degree, each group sorted
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pub forbidden_factors: Vec<Word>,
    pub by_degree: Vec<Vec<Word>>,
    pub max_degree: usize,
    /// Whether the generators passed the Buchberger check. When false the
    /// words are only known to be normal for the given set.
    pub verified: bool,
}

impl QuotientBasis {
    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn cumulative(&self) -> Vec<usize> {
        self.counts()
            .iter()
            .scan(0, |acc, c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().sum()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.by_degree.iter().flatten()
    }

    /// `deg d: count - w1, w2, ...` per degree, then a total line.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        if !self.verified {
            out.push_str("# G-normal words (generators not verified as a Gröbner basis)\n");
        }
        for (d, ws) in self.by_degree.iter().enumerate() {
            let listed: Vec<String> = ws.iter().map(|w| alphabet.format_word(w)).collect();
            let _ = writeln!(out, "deg {d}: {} - {}", ws.len(), listed.join(", "));
        }
        let _ = writeln!(out, "total: {}", self.total());
        out
    }
}

fn require_groebner(gens: &GenSet) -> Result<()> {
    let report = check_groebner(gens)?;
    if report.verdict == Verdict::IsGroebner {
        Ok(())
    } else {
        Err(Error::NotAGroebnerBasis {
            failures: report.witnesses.len(),
        })
    }
}

/// Breadth-first enumeration of normal words. A word is only ever extended
/// from a normal word, so for the free oracle only suffixes ending in the new
/// letter need checking; the commutative oracle extends sorted words by
/// letters no smaller than their last.
pub fn enumerate_basis(gens: &GenSet, max_degree: usize, strict: bool) -> Result<QuotientBasis> {
    gens.require_unital()?;
    if strict {
        require_groebner(gens)?;
    }
    let algebra = gens.algebra();
    let forbidden = gens.leading_words();
    let rank = algebra.rank as Letter;

    let mut by_degree: Vec<Vec<Word>> = Vec::with_capacity(max_degree + 1);
    let root = Word::empty();
    by_degree.push(if gens.is_normal_word(&root) {
        vec![root]
    } else {
        Vec::new()
    });
    for _ in 1..=max_degree {
        let prev = by_degree.last().expect("degree 0 present");
        let mut next = Vec::new();
        for w in prev {
            let start = match algebra.oracle {
                MulOracle::FreeConcat => 0,
                MulOracle::CommutativeMerge => w.letters().last().copied().unwrap_or(0),
            };
            for l in start..rank {
                let candidate = w.concat(&Word::letter(l));
                let normal = match algebra.oracle {
                    MulOracle::FreeConcat => !forbidden.iter().any(|f| candidate.ends_with(f)),
                    MulOracle::CommutativeMerge => gens.is_normal_word(&candidate),
                };
                if normal {
                    next.push(candidate);
                }
            }
        }
        by_degree.push(next);
    }
    Ok(QuotientBasis {
        forbidden_factors: forbidden,
        by_degree,
        max_degree,
        verified: strict,
    })
}

/// `(ideal_part, normal_part)` with `f = ideal_part + normal_part`, the
/// ideal part rebuilt from the division steps.
pub fn decompose(f: &Poly, gens: &GenSet, strict: bool) -> Result<(Poly, Poly)> {
    gens.require_unital()?;
    if strict {
        require_groebner(gens)?;
    }
    decompose_with(f, gens, Strategy::FirstMatch)
}

/// [`decompose`] under an explicit strategy, without re-running the
/// Buchberger check.
pub fn decompose_with(f: &Poly, gens: &GenSet, strategy: Strategy) -> Result<(Poly, Poly)> {
    let trace = divide(f, gens, strategy, DEFAULT_STEP_BUDGET)?;
    Ok((trace.ideal_part(gens), trace.remainder))
}
