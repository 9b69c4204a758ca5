//! The division algorithm: rewrite `f` as `r + Σ λ·u·g·v` where no word of
//! `r` is divisible by a leading word of a generator.
//!
//! The choice of divisor at each step is left open by the algorithm itself;
//! [`Strategy`] makes that choice explicit so it can be varied in tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::critical_pairs::{check_groebner, Verdict};
use crate::error::{Error, Result};
use crate::poly::{Algebra, Poly, Term};
use crate::ring::RingElement;
use crate::words::{Alphabet, Word};

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

/// A set of candidate divisors. Construction records whether every leading
/// coefficient is a unit (the unitality certificate); operations that invert
/// leading coefficients refuse uncertified sets.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSet {
    algebra: Algebra,
    gens: Vec<Poly>,
    // first generator whose leading coefficient is not a unit
    non_unit: Option<usize>,
}

impl GenSet {
    pub fn new(algebra: Algebra, gens: Vec<Poly>) -> Result<Self> {
        for g in &gens {
            algebra.check_compatible(g.algebra())?;
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        let non_unit = gens
            .iter()
            .position(|g| !g.lc().expect("nonzero").is_unit());
        Ok(GenSet {
            algebra,
            gens,
            non_unit,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unital(&self) -> bool {
        self.non_unit.is_none()
    }

    /// `Ok` iff every leading coefficient is a unit. With single-word
    /// oracles, `LC(u·g·v) = LC(g)`, so this is the whole unitality
    /// condition.
    pub fn require_unital(&self) -> Result<()> {
        match self.non_unit {
            None => Ok(()),
            Some(index) => Err(Error::NotUnital {
                index,
                coeff: self.gens[index].lc().expect("nonzero").to_string(),
            }),
        }
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.gens
            .iter()
            .map(|g| g.lm().expect("nonzero").clone())
            .collect()
    }

    pub fn with_generator(&self, g: Poly) -> Result<GenSet> {
        let mut gens = self.gens.clone();
        gens.push(g);
        GenSet::new(self.algebra, gens)
    }

    /// True iff no leading word divides `w`.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        let oracle = self.algebra.oracle;
        self.gens
            .iter()
            .all(|g| !oracle.divides(g.lm().expect("nonzero"), w))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Lowest generator index, then leftmost factorization.
    #[default]
    FirstMatch,
    /// Uniformly random among all `(generator, factorization)` matches,
    /// reproducible from the seed.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorMatch {
    pub gen_index: usize,
    pub u: Word,
    pub v: Word,
    pub lambda: RingElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionStep {
    pub lambda: RingElement,
    pub u: Word,
    pub gen_index: usize,
    pub v: Word,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisionTrace {
    pub steps: Vec<DivisionStep>,
    pub remainder: Poly,
    pub peeled_terms: Vec<Term>,
    /// Leading word of every nonzero working polynomial, in order.
    pub lead_history: Vec<Word>,
}

impl DivisionTrace {
    /// `Σ λ·u·g·v` over the recorded steps.
    pub fn ideal_part(&self, gens: &GenSet) -> Poly {
        let mut acc = Poly::zero(*gens.algebra());
        for s in &self.steps {
            acc = acc.add_scaled(&s.lambda, &s.u, &gens.gens()[s.gen_index], &s.v);
        }
        acc
    }

    /// One line per step (`λ ; u ; g<index> ; v`), then the remainder.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut out = format_steps(&self.steps, alphabet);
        out.push_str(&format!("remainder: {}\n", self.remainder.format(alphabet)));
        out
    }
}

pub fn format_steps(steps: &[DivisionStep], alphabet: &Alphabet) -> String {
    let mut out = format!("steps: {}\n", steps.len());
    for s in steps {
        out.push_str(&format!(
            "  {} ; {} ; g{} ; {}\n",
            s.lambda,
            alphabet.format_word(&s.u),
            s.gen_index,
            alphabet.format_word(&s.v)
        ));
    }
    out
}

/// All `(generator, u, v)` with `u·LM(g)·v = w`, generator-major, leftmost
/// first.
fn matches(w: &Word, gens: &GenSet) -> Vec<(usize, Word, Word)> {
    let oracle = gens.algebra.oracle;
    let mut out = Vec::new();
    for (i, g) in gens.gens.iter().enumerate() {
        for (u, v) in oracle.divisors(g.lm().expect("nonzero"), w) {
            out.push((i, u, v));
        }
    }
    out
}

fn first_match(w: &Word, gens: &GenSet) -> Option<(usize, Word, Word)> {
    let oracle = gens.algebra.oracle;
    gens.gens.iter().enumerate().find_map(|(i, g)| {
        oracle
            .divisors(g.lm().expect("nonzero"), w)
            .into_iter()
            .next()
            .map(|(u, v)| (i, u, v))
    })
}

fn witness(f: &Poly, gens: &GenSet, (gen_index, u, v): (usize, Word, Word)) -> DivisorMatch {
    let lc_f = f.lc().expect("nonzero");
    let lc_g = gens.gens[gen_index].lc().expect("nonzero");
    let lambda = lc_f * &lc_g.inv_unit().expect("certified unital");
    DivisorMatch {
        gen_index,
        u,
        v,
        lambda,
    }
}

/// One step of the division loop under [`Strategy::FirstMatch`]: a witness
/// with `λ·LT(u·g·v) = LT(f)`, or `None` if no leading word divides `LM(f)`.
pub fn try_divide_step(f: &Poly, gens: &GenSet) -> Result<Option<DivisorMatch>> {
    gens.require_unital()?;
    gens.algebra.check_compatible(f.algebra())?;
    let lm = f.lm().ok_or(Error::ZeroPolynomial)?;
    Ok(first_match(lm, gens).map(|m| witness(f, gens, m)))
}

pub fn divide(
    f: &Poly,
    gens: &GenSet,
    strategy: Strategy,
    step_budget: usize,
) -> Result<DivisionTrace> {
    gens.require_unital()?;
    gens.algebra.check_compatible(f.algebra())?;
    if step_budget == 0 {
        return Err(Error::PreconditionViolated(
            "step budget must be positive".into(),
        ));
    }
    let mut rng = match strategy {
        Strategy::FirstMatch => None,
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };

    let mut working = f.clone();
    let mut steps = Vec::new();
    let mut peeled = Vec::new();
    let mut lead_history = Vec::new();
    let mut iterations = 0usize;
    while let Some(lm) = working.lm() {
        iterations += 1;
        if iterations > step_budget {
            return Err(Error::BudgetExceeded(step_budget));
        }
        lead_history.push(lm.clone());
        let chosen = match rng.as_mut() {
            None => first_match(lm, gens),
            Some(rng) => {
                let mut all = matches(lm, gens);
                if all.is_empty() {
                    None
                } else {
                    let k = rng.gen_range(0..all.len());
                    Some(all.swap_remove(k))
                }
            }
        };
        match chosen {
            None => {
                peeled.push(working.pop_leading().expect("nonzero"));
            }
            Some(m) => {
                let m = witness(&working, gens, m);
                working = working.add_scaled(&-&m.lambda, &m.u, &gens.gens[m.gen_index], &m.v);
                steps.push(DivisionStep {
                    lambda: m.lambda,
                    u: m.u,
                    gen_index: m.gen_index,
                    v: m.v,
                });
            }
        }
    }
    let remainder = Poly::from_raw(
        *f.algebra(),
        peeled
            .iter()
            .map(|t| (t.coeff.clone(), t.word.clone()))
            .collect(),
    );
    Ok(DivisionTrace {
        steps,
        remainder,
        peeled_terms: peeled,
        lead_history,
    })
}

/// The remainder of `f` under [`Strategy::FirstMatch`]. In strict mode the
/// generator set must first pass the Buchberger check, which makes the
/// remainder independent of the strategy.
pub fn normal_form(f: &Poly, gens: &GenSet, strict: bool) -> Result<Poly> {
    if strict {
        let report = check_groebner(gens)?;
        if report.verdict != Verdict::IsGroebner {
            return Err(Error::NotAGroebnerBasis {
                failures: report.witnesses.len(),
            });
        }
    }
    Ok(divide(f, gens, Strategy::FirstMatch, DEFAULT_STEP_BUDGET)?.remainder)
}
