//! Lie algebras given by structure constants and their PBW presentations
//! `x_i x_j − x_j x_i − [x_i, x_j]` (for `i > j`) in the free algebra.

use std::collections::BTreeMap;

use crate::critical_pairs::{check_groebner, GBReport, Verdict};
use crate::division::GenSet;
use crate::error::{Error, Result};
use crate::poly::{Algebra, Poly};
use crate::quotient::{enumerate_basis, QuotientBasis};
use crate::ring::{RingElement, RingSpec};
use crate::words::{Alphabet, Letter, Word};

/// Structure constants are stored only for `i > j`; the rest of the bracket
/// follows from antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    ring: RingSpec,
    alphabet: Alphabet,
    brackets: BTreeMap<(usize, usize), Vec<RingElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]` in basis
    /// coordinates.
    pub sum: Vec<RingElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieReport {
    pub antisymmetry_violations: Vec<(usize, usize)>,
    pub jacobi_violations: Vec<JacobiViolation>,
}

impl LieReport {
    pub fn is_ok(&self) -> bool {
        self.antisymmetry_violations.is_empty() && self.jacobi_violations.is_empty()
    }
}

impl LieAlgebra {
    /// The abelian Lie algebra on the given generators.
    pub fn new(ring: RingSpec, alphabet: Alphabet) -> Self {
        LieAlgebra {
            ring,
            alphabet,
            brackets: BTreeMap::new(),
        }
    }

    pub fn abelian(ring: RingSpec, rank: usize) -> Self {
        LieAlgebra::new(ring, Alphabet::indexed(rank))
    }

    /// Basis `e < f < h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
    pub fn sl2(ring: RingSpec) -> Self {
        let mut l = LieAlgebra::new(ring, Alphabet::new(["e", "f", "h"]).expect("valid"));
        let c = |v: [i64; 3]| v.iter().map(|&x| ring.from_i64(x)).collect::<Vec<_>>();
        l.set_bracket(1, 0, c([0, 0, -1])).expect("valid");
        l.set_bracket(2, 0, c([2, 0, 0])).expect("valid");
        l.set_bracket(2, 1, c([0, -2, 0])).expect("valid");
        l
    }

    /// Basis `x < y < z` with `[x,y] = z` and `z` central.
    pub fn heisenberg(ring: RingSpec) -> Self {
        let mut l = LieAlgebra::new(ring, Alphabet::new(["x", "y", "z"]).expect("valid"));
        let coeffs = vec![ring.zero(), ring.zero(), ring.from_i64(-1)];
        l.set_bracket(1, 0, coeffs).expect("valid");
        l
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Stored constants, keyed by `(i, j)` with `i > j`.
    pub fn stored_brackets(&self) -> &BTreeMap<(usize, usize), Vec<RingElement>> {
        &self.brackets
    }

    /// Sets `[x_i, x_j]` for `i > j`.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: Vec<RingElement>) -> Result<()> {
        let n = self.rank();
        if i <= j || i >= n {
            return Err(Error::PreconditionViolated(format!(
                "brackets are given for i > j within rank {n}, got ({i}, {j})"
            )));
        }
        if coeffs.len() != n {
            return Err(Error::PreconditionViolated(format!(
                "bracket needs {n} coefficients, got {}",
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| c.ring() != self.ring) {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                c.ring().to_string(),
            ));
        }
        if coeffs.iter().all(RingElement::is_zero) {
            self.brackets.remove(&(i, j));
        } else {
            self.brackets.insert((i, j), coeffs);
        }
        Ok(())
    }

    /// `[x_i, x_j]` in basis coordinates.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<RingElement> {
        let zero = || vec![self.ring.zero(); self.rank()];
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => zero(),
            std::cmp::Ordering::Greater => self.brackets.get(&(i, j)).cloned().unwrap_or_else(zero),
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(j, i))
                .map(|c| c.iter().map(|x| -x).collect())
                .unwrap_or_else(zero),
        }
    }

    /// `[a, x_k]` for `a` in basis coordinates.
    fn bracket_with(&self, a: &[RingElement], k: usize) -> Vec<RingElement> {
        let mut out = vec![self.ring.zero(); self.rank()];
        for (m, am) in a.iter().enumerate() {
            if am.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.bracket(m, k)) {
                *o = &*o + &(am * &c);
            }
        }
        out
    }
}

pub fn validate_lie(lie: &LieAlgebra) -> LieReport {
    let n = lie.rank();
    let mut report = LieReport::default();
    for i in 0..n {
        for j in 0..n {
            let neg: Vec<RingElement> = lie.bracket(j, i).iter().map(|x| -x).collect();
            if lie.bracket(i, j) != neg {
                report.antisymmetry_violations.push((i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let terms = [
                    lie.bracket_with(&lie.bracket(i, j), k),
                    lie.bracket_with(&lie.bracket(j, k), i),
                    lie.bracket_with(&lie.bracket(k, i), j),
                ];
                let sum: Vec<RingElement> = (0..n)
                    .map(|m| &(&terms[0][m] + &terms[1][m]) + &terms[2][m])
                    .collect();
                if sum.iter().any(|c| !c.is_zero()) {
                    report
                        .jacobi_violations
                        .push(JacobiViolation { i, j, k, sum });
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq)]
pub struct PbwSystem {
    pub lie: LieAlgebra,
    pub gens: GenSet,
}

/// The generators `g_{i,j}` for `i > j`, ordered by `i` then `j`, without
/// checking the Jacobi identity.
pub fn pbw_generators(lie: &LieAlgebra) -> GenSet {
    let n = lie.rank();
    let ring = lie.ring;
    let algebra = Algebra::free(ring, n);
    let mut gens = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 1..n {
        for j in 0..i {
            let (li, lj) = (i as Letter, j as Letter);
            let mut raw = vec![
                (ring.one(), Word::from([li, lj])),
                (-&ring.one(), Word::from([lj, li])),
            ];
            for (k, c) in lie.bracket(i, j).into_iter().enumerate() {
                raw.push((-&c, Word::letter(k as Letter)));
            }
            gens.push(Poly::normalize(algebra, raw).expect("words within rank"));
        }
    }
    GenSet::new(algebra, gens).expect("PBW generators are nonzero")
}

pub fn build_pbw(lie: &LieAlgebra) -> Result<PbwSystem> {
    let report = validate_lie(lie);
    if !report.is_ok() {
        return Err(Error::InvalidLie(report.jacobi_violations));
    }
    Ok(PbwSystem {
        lie: lie.clone(),
        gens: pbw_generators(lie),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PbwReport {
    pub lie: LieReport,
    pub groebner: GBReport,
    pub basis: QuotientBasis,
    /// `C(n + d − 1, d)` for each degree.
    pub expected_counts: Vec<usize>,
    pub all_non_decreasing: bool,
}

impl PbwReport {
    pub fn counts_match(&self) -> bool {
        self.basis.counts() == self.expected_counts
    }

    pub fn passed(&self) -> bool {
        self.lie.is_ok()
            && self.groebner.verdict == Verdict::IsGroebner
            && self.all_non_decreasing
            && self.counts_match()
    }
}

pub fn multiset_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    // C(n + d - 1, d)
    let mut c: usize = 1;
    for t in 0..d {
        c = c * (n + t) / (t + 1);
    }
    c
}

/// Runs the Buchberger check on the PBW generators, enumerates normal words
/// to `max_degree`, and compares them with the non-decreasing words.
pub fn verify_pbw(lie: &LieAlgebra, max_degree: usize) -> Result<PbwReport> {
    let report = validate_lie(lie);
    let gens = pbw_generators(lie);
    let groebner = check_groebner(&gens)?;
    let mut basis = enumerate_basis(&gens, max_degree, false)?;
    basis.verified = groebner.verdict == Verdict::IsGroebner;
    let all_non_decreasing = basis.words().all(Word::is_non_decreasing);
    let expected_counts = (0..=max_degree)
        .map(|d| multiset_count(lie.rank(), d))
        .collect();
    Ok(PbwReport {
        lie: report,
        groebner,
        basis,
        expected_counts,
        all_non_decreasing,
    })
}
