//! S-polynomials over overlap ambiguities, the telescoping identity behind
//! the Buchberger criterion, the criterion itself, and a bounded completion
//! loop.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::division::{divide, DivisionTrace, GenSet, Strategy, DEFAULT_STEP_BUDGET};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingElement;
use crate::words::{Alphabet, Overlap};

#[derive(Debug, Clone, PartialEq)]
pub struct SPoly {
    pub i: usize,
    pub j: usize,
    pub overlap: Overlap,
    pub value: Poly,
}

/// `a_i⁻¹·u·g_i·v − a_j⁻¹·u2·g_j·v2` for the placement in `overlap`.
pub fn s_polynomial(gens: &GenSet, i: usize, j: usize, overlap: &Overlap) -> Result<Poly> {
    gens.require_unital()?;
    let (gi, gj) = (&gens.gens()[i], &gens.gens()[j]);
    let ai = gi.lc().ok_or(Error::ZeroPolynomial)?.inv_unit()?;
    let aj = gj.lc().ok_or(Error::ZeroPolynomial)?.inv_unit()?;
    let left = gi.scale(&ai, &overlap.u, &overlap.v)?;
    let right = gj.scale(&aj, &overlap.u2, &overlap.v2)?;
    left.sub(&right)
}

/// One S-polynomial per ambiguity of every pair `i ≤ j`, sorted ascending by
/// ambiguity word (ties keep pair order).
pub fn s_polynomials(gens: &GenSet) -> Result<Vec<SPoly>> {
    gens.require_unital()?;
    let oracle = gens.algebra().oracle;
    let order = gens.algebra().order;
    let lms = gens.leading_words();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            if lms[i].is_empty() || lms[j].is_empty() {
                // a unit constant generates everything; every S-polynomial
                // with it reduces trivially
                continue;
            }
            for overlap in oracle.overlaps(&lms[i], &lms[j], i == j)? {
                let value = s_polynomial(gens, i, j, &overlap)?;
                out.push(SPoly {
                    i,
                    j,
                    overlap,
                    value,
                });
            }
        }
    }
    out.sort_by(|a, b| order.compare(&a.overlap.ambiguity, &b.overlap.ambiguity));
    Ok(out)
}

/// Writes `Σ c_i·f_i` as `Σ d_k·S_{k,k+1}` where all `f_i` share a leading
/// word, `S_{k,k+1} = a_k⁻¹ f_k − a_{k+1}⁻¹ f_{k+1}` and
/// `d_k = c_1 a_1 + … + c_k a_k`.
///
/// Requires unit leading coefficients `a_i` and `Σ c_i a_i = 0`.
pub fn telescope(fs: &[Poly], cs: &[RingElement]) -> Result<Vec<(RingElement, Poly)>> {
    let bad = |m: &str| Err(Error::PreconditionViolated(m.to_string()));
    if fs.is_empty() || fs.len() != cs.len() {
        return bad("need equally many polynomials and coefficients");
    }
    let algebra = *fs[0].algebra();
    let alpha = fs[0].lm().ok_or(Error::ZeroPolynomial)?;
    let mut inverses = Vec::with_capacity(fs.len());
    let mut partial = algebra.ring.zero();
    let mut partials = Vec::with_capacity(fs.len());
    for (f, c) in fs.iter().zip(cs) {
        algebra.check_compatible(f.algebra())?;
        if c.ring() != algebra.ring {
            return Err(Error::RingMismatch(
                algebra.ring.to_string(),
                c.ring().to_string(),
            ));
        }
        let (a, lm) = f.leading()?;
        if lm != alpha {
            return bad("leading words differ");
        }
        if !a.is_unit() {
            return bad("leading coefficient is not a unit");
        }
        inverses.push(a.inv_unit()?);
        partial = &partial + &(c * a);
        partials.push(partial.clone());
    }
    if !partial.is_zero() {
        return bad("leading terms do not cancel");
    }
    let one = crate::words::Word::empty();
    let mut out = Vec::with_capacity(fs.len() - 1);
    for k in 0..fs.len() - 1 {
        let s = fs[k]
            .scale(&inverses[k], &one, &one)?
            .sub(&fs[k + 1].scale(&inverses[k + 1], &one, &one)?)?;
        out.push((partials[k].clone(), s));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    IsGroebner,
    NotGroebner,
    /// Some division hit its step budget.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GBReport {
    pub verdict: Verdict,
    pub pairs_checked: usize,
    /// Every S-polynomial with a nonzero remainder, with its trace.
    pub witnesses: Vec<(SPoly, DivisionTrace)>,
}

impl GBReport {
    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {:?}", self.verdict);
        let _ = writeln!(out, "pairs checked: {}", self.pairs_checked);
        for (sp, trace) in &self.witnesses {
            let _ = writeln!(
                out,
                "witness: pair ({}, {}) at {}",
                sp.i,
                sp.j,
                alphabet.format_word(&sp.overlap.ambiguity)
            );
            let _ = writeln!(out, "  s-polynomial: {}", sp.value.format(alphabet));
            for line in trace.format(alphabet).lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        out
    }
}

/// Divides every S-polynomial by the set itself (first-match strategy). The
/// set is a Gröbner basis iff every remainder vanishes.
pub fn check_groebner(gens: &GenSet) -> Result<GBReport> {
    let spolys = s_polynomials(gens)?;
    let pairs_checked = spolys.len();
    let results: Vec<Result<(SPoly, DivisionTrace)>> = spolys
        .into_par_iter()
        .map(|sp| {
            let trace = divide(&sp.value, gens, Strategy::FirstMatch, DEFAULT_STEP_BUDGET)?;
            Ok((sp, trace))
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut inconclusive = false;
    for r in results {
        match r {
            Ok((sp, trace)) => {
                if !trace.remainder.is_zero() {
                    witnesses.push((sp, trace));
                }
            }
            Err(Error::BudgetExceeded(_)) => inconclusive = true,
            Err(e) => return Err(e),
        }
    }
    let verdict = if !witnesses.is_empty() {
        Verdict::NotGroebner
    } else if inconclusive {
        Verdict::Inconclusive
    } else {
        Verdict::IsGroebner
    };
    Ok(GBReport {
        verdict,
        pairs_checked,
        witnesses,
    })
}

/// Adjoins monic normal forms of failing S-polynomials whose ambiguity has
/// length at most `max_degree` until none remain.
pub fn complete(gens: &GenSet, max_degree: usize, max_rounds: usize) -> Result<GenSet> {
    gens.require_unital()?;
    let mut current = gens.clone();
    for _ in 0..max_rounds {
        let mut added = false;
        let spolys = s_polynomials(&current)?;
        for sp in spolys
            .into_iter()
            .filter(|sp| sp.overlap.ambiguity.len() <= max_degree)
        {
            let r = divide(
                &sp.value,
                &current,
                Strategy::FirstMatch,
                DEFAULT_STEP_BUDGET,
            )?
            .remainder;
            let Some(lc) = r.lc() else { continue };
            if !lc.is_unit() {
                return Err(Error::NonUnitalRemainder(lc.to_string()));
            }
            let inv = lc.inv_unit()?;
            current = current.with_generator(r.scalar_mul(&inv)?)?;
            added = true;
        }
        if !added {
            return Ok(current);
        }
    }
    Err(Error::RoundsExceeded(max_rounds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Algebra;
    use crate::ring::RingSpec;
    use crate::text::parse_poly;

    fn setup(names: &[&str], ring: RingSpec, gens: &[&str]) -> (Alphabet, GenSet) {
        let a = Alphabet::new(names.iter().copied()).unwrap();
        let alg = Algebra::free(ring, a.len());
        let gens = gens
            .iter()
            .map(|g| parse_poly(g, &a, alg).unwrap())
            .collect();
        (a, GenSet::new(alg, gens).unwrap())
    }

    #[test]
    fn self_overlap_of_square() {
        // y < x
        let (a, g) = setup(&["y", "x"], RingSpec::Integers, &["x x - y"]);
        let sp = s_polynomials(&g).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(a.format_word(&sp[0].overlap.ambiguity), "x x x");
        assert_eq!(sp[0].value.format(&a), "x y - y x");
    }

    #[test]
    fn unbordered_leading_word_has_no_pairs() {
        let (_, g) = setup(&["x1", "x2"], RingSpec::Integers, &["x2 x1 - x1 x2"]);
        assert!(s_polynomials(&g).unwrap().is_empty());
    }

    #[test]
    fn inverse_pair_cancels() {
        let (a, g) = setup(&["x", "y"], RingSpec::Rationals, &["x y - 1", "y x - 1"]);
        let sp = s_polynomials(&g).unwrap();
        let at_xyx = sp
            .iter()
            .find(|s| a.format_word(&s.overlap.ambiguity) == "x y x")
            .unwrap();
        assert!(at_xyx.value.is_zero());
    }

    #[test]
    fn spoly_leading_terms_cancel() {
        let (_, g) = setup(
            &["x", "y", "z"],
            RingSpec::IntegersMod(9),
            &["2*x y x - z", "5*y x - x + 1", "x x - 4*z y"],
        );
        let order = g.algebra().order;
        for sp in s_polynomials(&g).unwrap() {
            let ov = &sp.overlap;
            let lm_i = g.gens()[sp.i].lm().unwrap().wrap(&ov.u, &ov.v);
            let lm_j = g.gens()[sp.j].lm().unwrap().wrap(&ov.u2, &ov.v2);
            assert_eq!(lm_i, ov.ambiguity);
            assert_eq!(lm_j, ov.ambiguity);
            if let Some(lm) = sp.value.lm() {
                assert!(order.compare(lm, &ov.ambiguity).is_lt());
            }
        }
    }

    fn q(p: i64, d: i64) -> RingElement {
        RingElement::Rat(num_rational::BigRational::new(p.into(), d.into()))
    }

    #[test]
    fn telescope_examples() {
        let (a, g) = setup(
            &["x", "y"],
            RingSpec::Rationals,
            &["x + 1", "x - 1", "x", "2*x + 1"],
        );
        let f = g.gens();
        let t = telescope(&f[0..2], &[q(1, 1), q(-1, 1)]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].0, q(1, 1));
        assert_eq!(t[0].1.format(&a), "2");

        let t = telescope(&[f[2].clone(), f[2].clone()], &[q(1, 1), q(-1, 1)]).unwrap();
        assert_eq!(t[0].0, q(1, 1));
        assert!(t[0].1.is_zero());

        let t = telescope(&[f[3].clone(), f[2].clone()], &[q(1, 1), q(-2, 1)]).unwrap();
        assert_eq!(t[0].0, q(2, 1));
        assert_eq!(t[0].1.format(&a), "1/2");
    }

    #[test]
    fn telescope_preconditions() {
        let (_, g) = setup(&["x", "y"], RingSpec::Integers, &["x + 1", "y", "2*x"]);
        let f = g.gens();
        let one = RingSpec::Integers.one();
        let neg = RingSpec::Integers.from_i64(-1);
        assert!(matches!(
            telescope(&[f[0].clone(), f[1].clone()], &[one.clone(), neg.clone()]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            telescope(&[f[0].clone(), f[2].clone()], &[one.clone(), neg.clone()]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            telescope(&[f[0].clone(), f[0].clone()], &[one.clone(), one.clone()]),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn check_examples() {
        let (a, g) = setup(&["y", "x"], RingSpec::Integers, &["x x - y"]);
        let r = check_groebner(&g).unwrap();
        assert_eq!(r.verdict, Verdict::NotGroebner);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].1.remainder.format(&a), "x y - y x");

        let (_, g) = setup(&["x", "y"], RingSpec::Integers, &["2*x"]);
        assert!(matches!(check_groebner(&g), Err(Error::NotUnital { .. })));

        // sl2 with e < f < h
        let (_, g) = setup(
            &["e", "f", "h"],
            RingSpec::Integers,
            &["f e - e f + h", "h e - e h - 2*e", "h f - f h + 2*f"],
        );
        assert_eq!(check_groebner(&g).unwrap().verdict, Verdict::IsGroebner);
    }

    #[test]
    fn completion() {
        let (_, g) = setup(&["x", "y"], RingSpec::Integers, &["y x - x y"]);
        assert_eq!(complete(&g, 4, 5).unwrap(), g);

        let (a, g) = setup(&["y", "x"], RingSpec::Rationals, &["x x - y"]);
        let done = complete(&g, 4, 10).unwrap();
        assert!(done.len() > 1);
        assert_eq!(done.gens()[1].format(&a), "x y - y x");
        // every remaining failure lives above the degree bound
        for (sp, _) in check_groebner(&done).unwrap().witnesses {
            assert!(sp.overlap.ambiguity.len() > 4);
        }

        let (_, g) = setup(&["y", "x"], RingSpec::Integers, &["2*x x - y"]);
        assert!(matches!(complete(&g, 4, 5), Err(Error::NotUnital { .. })));
    }

    #[test]
    fn completion_surfaces_non_unit_remainders() {
        // with x < y the S-polynomial at x x x is 2 x y - 2 y x, led by -2 y x
        let (_, g) = setup(&["x", "y"], RingSpec::Integers, &["x x - 2*y"]);
        assert_eq!(
            complete(&g, 4, 5),
            Err(Error::NonUnitalRemainder("-2".into()))
        );
    }
}
