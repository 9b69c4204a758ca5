//! Ideal membership at a degree bound, decided by exact linear algebra on the
//! span of all products `u·g·v` that fit under the bound. Nothing here uses
//! the division engine.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::division::{format_steps, DivisionStep, GenSet};
use crate::error::{Error, Result};
use crate::lattice::{Integers, Rationals, Residues, Span};
use crate::poly::{Algebra, MulOracle, Poly};
use crate::ring::{RingElement, RingSpec};
use crate::words::{Alphabet, Letter, Word};

/// A spanning product `u·g·v` together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanRow {
    pub gen_index: usize,
    pub u: Word,
    pub v: Word,
    pub value: Poly,
}

/// Products `u·g·v` up to a degree bound. Rows are admitted into the solved
/// span in order; [`build_truncation`] admits all of them at once.
#[derive(Debug, Clone)]
pub struct TruncatedModule {
    gens: GenSet,
    degree_bound: usize,
    rows: Vec<SpanRow>,
    /// Every word occurring in some row, DegLex descending.
    columns: Vec<Word>,
    column_index: HashMap<Word, usize>,
    span: RowSpan,
}

#[derive(Debug, Clone)]
enum RowSpan {
    Rational(Span<Rationals>),
    Integer(Span<Integers>),
    Modular(Span<Residues>),
}

impl RowSpan {
    fn new(ring: RingSpec, cols: usize) -> Self {
        match ring {
            RingSpec::Rationals => RowSpan::Rational(Span::new(Rationals, cols)),
            RingSpec::Integers => RowSpan::Integer(Span::new(Integers, cols)),
            RingSpec::IntegersMod(n) => RowSpan::Modular(Span::new(Residues(n), cols)),
        }
    }

    fn len(&self) -> usize {
        match self {
            RowSpan::Rational(s) => s.len(),
            RowSpan::Integer(s) => s.len(),
            RowSpan::Modular(s) => s.len(),
        }
    }

    fn push(&mut self, row: &[RingElement]) {
        match self {
            RowSpan::Rational(s) => s.push(row.iter().map(to_rational).collect()),
            RowSpan::Integer(s) => s.push(row.iter().map(to_integer).collect()),
            RowSpan::Modular(s) => s.push(row.iter().map(to_residue).collect()),
        }
    }

    fn solve(&self, target: &[RingElement]) -> Option<Vec<RingElement>> {
        match self {
            RowSpan::Rational(s) => {
                let t: Vec<_> = target.iter().map(to_rational).collect();
                Some(s.solve(&t)?.into_iter().map(RingElement::Rat).collect())
            }
            RowSpan::Integer(s) => {
                let t: Vec<_> = target.iter().map(to_integer).collect();
                Some(s.solve(&t)?.into_iter().map(RingElement::Int).collect())
            }
            RowSpan::Modular(s) => {
                let t: Vec<_> = target.iter().map(to_residue).collect();
                let modulus = s.domain().0;
                Some(
                    s.solve(&t)?
                        .into_iter()
                        .map(|value| RingElement::Mod { value, modulus })
                        .collect(),
                )
            }
        }
    }
}

impl TruncatedModule {
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// All candidate rows, admitted or not.
    pub fn rows(&self) -> &[SpanRow] {
        &self.rows
    }

    /// Rows currently in the span.
    pub fn admitted(&self) -> &[SpanRow] {
        &self.rows[..self.span.len()]
    }

    pub fn columns(&self) -> &[Word] {
        &self.columns
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn algebra(&self) -> &Algebra {
        self.gens.algebra()
    }

    /// Coefficient of each column word in row `i`.
    pub fn row_vector(&self, i: usize) -> Vec<RingElement> {
        self.vector_of(&self.rows[i].value)
            .expect("row words are columns")
    }

    /// Admits further rows while their leading word is below `ceiling`.
    /// Rows of a module from [`build_filtration`] arrive in increasing
    /// leading-word order, so the span becomes exactly the products with
    /// leading word below `ceiling`.
    pub fn admit_below(&mut self, ceiling: &Word) {
        let order = self.algebra().order;
        while let Some(row) = self.rows.get(self.span.len()) {
            let lm = row.value.lm().expect("rows are nonzero");
            if !order.compare(lm, ceiling).is_lt() {
                break;
            }
            let v = self.row_vector(self.span.len());
            self.span.push(&v);
        }
    }

    fn admit_all(&mut self) {
        for i in self.span.len()..self.rows.len() {
            let v = self.row_vector(i);
            self.span.push(&v);
        }
    }

    fn vector_of(&self, f: &Poly) -> Option<Vec<RingElement>> {
        let mut out = vec![self.algebra().ring.zero(); self.columns.len()];
        for t in f.terms() {
            out[*self.column_index.get(&t.word)?] = t.coeff.clone();
        }
        Some(out)
    }
}

/// All words of length at most `max_len`, shortest first.
fn words_up_to(rank: usize, max_len: usize, sorted_only: bool) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            let start = if sorted_only {
                w.letters().last().copied().unwrap_or(0)
            } else {
                0
            };
            for l in start..rank as Letter {
                next.push(w.concat(&Word::letter(l)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn contexts(algebra: &Algebra, slack: usize) -> Vec<(Word, Word)> {
    match algebra.oracle {
        MulOracle::FreeConcat => {
            let words = words_up_to(algebra.rank, slack, false);
            let mut out = Vec::new();
            for u in &words {
                for v in &words {
                    if u.len() + v.len() <= slack {
                        out.push((u.clone(), v.clone()));
                    }
                }
            }
            out
        }
        MulOracle::CommutativeMerge => words_up_to(algebra.rank, slack, true)
            .into_iter()
            .map(|u| (u, Word::empty()))
            .collect(),
    }
}

/// Every `u·g·v` with `|u| + deg LM(g) + |v| ≤ bound` whose words all have
/// degree at most `bound`, duplicates dropped (first occurrence kept), in
/// generator-major context order.
pub fn build_truncation(gens: &GenSet, bound: usize) -> Result<TruncatedModule> {
    let mut module = candidates(gens, bound)?;
    module.admit_all();
    Ok(module)
}

/// The same products as [`build_truncation`], sorted by leading word
/// (ties keep generation order) and not yet admitted; see
/// [`TruncatedModule::admit_below`].
pub fn build_filtration(gens: &GenSet, bound: usize) -> Result<TruncatedModule> {
    let mut module = candidates(gens, bound)?;
    let order = module.algebra().order;
    module.rows.sort_by(|a, b| {
        order.compare(
            a.value.lm().expect("nonzero"),
            b.value.lm().expect("nonzero"),
        )
    });
    Ok(module)
}

fn candidates(gens: &GenSet, bound: usize) -> Result<TruncatedModule> {
    let needed = gens
        .gens()
        .iter()
        .filter_map(Poly::degree)
        .max()
        .unwrap_or(0);
    if bound < needed {
        return Err(Error::BoundTooSmall { bound, needed });
    }
    let algebra = *gens.algebra();
    let one = algebra.ring.one();
    let candidates: Vec<Vec<SpanRow>> = gens
        .gens()
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let slack = bound - g.degree().expect("nonzero generator");
            contexts(&algebra, slack)
                .into_iter()
                .map(|(u, v)| SpanRow {
                    gen_index: i,
                    value: g.scale_unchecked(&one, &u, &v),
                    u,
                    v,
                })
                .filter(|r| r.value.degree().is_some_and(|d| d <= bound))
                .collect()
        })
        .collect();

    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for row in candidates.into_iter().flatten() {
        if seen.insert(row.value.clone()) {
            rows.push(row);
        }
    }
    let mut columns: Vec<Word> = rows
        .iter()
        .flat_map(|r| r.value.terms().iter().map(|t| t.word.clone()))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    columns.sort_by(|a, b| algebra.order.compare(b, a));
    let cols = columns.len();
    let column_index = columns
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    Ok(TruncatedModule {
        gens: gens.clone(),
        degree_bound: bound,
        rows,
        columns,
        column_index,
        span: RowSpan::new(algebra.ring, cols),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// `f = Σ λ·u·g·v` over the listed terms.
    Member(Vec<DivisionStep>),
    /// No combination of products within the bound equals `f`.
    NotMemberAtBound,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    /// Witness lines in the division trace layout.
    pub fn format(&self, alphabet: &Alphabet, bound: usize) -> String {
        match self {
            Membership::Member(steps) => format!("member\n{}", format_steps(steps, alphabet)),
            Membership::NotMemberAtBound => {
                format!("not a member at degree bound {bound}\n")
            }
        }
    }
}

/// Expands a witness combination.
pub fn reconstruct(steps: &[DivisionStep], gens: &GenSet) -> Poly {
    let mut acc = Poly::zero(*gens.algebra());
    for s in steps {
        acc = acc.add_scaled(&s.lambda, &s.u, &gens.gens()[s.gen_index], &s.v);
    }
    acc
}

fn to_rational(c: &RingElement) -> BigRational {
    match c {
        RingElement::Rat(q) => q.clone(),
        _ => unreachable!("ring checked"),
    }
}

fn to_integer(c: &RingElement) -> BigInt {
    match c {
        RingElement::Int(z) => z.clone(),
        _ => unreachable!("ring checked"),
    }
}

fn to_residue(c: &RingElement) -> u64 {
    match c {
        RingElement::Mod { value, .. } => *value,
        _ => unreachable!("ring checked"),
    }
}

pub fn is_member(f: &Poly, module: &TruncatedModule) -> Result<Membership> {
    module.algebra().check_compatible(f.algebra())?;
    if let Some(d) = f.degree().filter(|&d| d > module.degree_bound) {
        return Err(Error::PreconditionViolated(format!(
            "degree {d} exceeds bound {}",
            module.degree_bound
        )));
    }
    if f.is_zero() {
        return Ok(Membership::Member(Vec::new()));
    }
    let Some(target) = module.vector_of(f) else {
        return Ok(Membership::NotMemberAtBound);
    };
    let solution = module.span.solve(&target);
    Ok(match solution {
        None => Membership::NotMemberAtBound,
        Some(x) => Membership::Member(
            x.into_iter()
                .zip(module.admitted())
                .filter(|(c, _)| !c.is_zero())
                .map(|(lambda, r)| DivisionStep {
                    lambda,
                    u: r.u.clone(),
                    gen_index: r.gen_index,
                    v: r.v.clone(),
                })
                .collect(),
        ),
    })
}
