//! Seeded sample generators for property tests and benchmarks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::division::GenSet;
use crate::pbw::LieAlgebra;
use crate::poly::{Algebra, MulOracle, Poly};
use crate::ring::{RingElement, RingSpec};
use crate::words::{Letter, Word};

/// A word of exactly `len` letters; sorted under the commutative oracle.
pub fn word<R: Rng + ?Sized>(rng: &mut R, algebra: &Algebra, len: usize) -> Word {
    let mut letters: Vec<Letter> = (0..len)
        .map(|_| rng.gen_range(0..algebra.rank as Letter))
        .collect();
    if algebra.oracle == MulOracle::CommutativeMerge {
        letters.sort_unstable();
    }
    Word::new(letters)
}

/// A small element: integers in `[-5, 5]`, fractions with denominators up
/// to 4, or uniform residues.
pub fn element<R: Rng + ?Sized>(rng: &mut R, ring: RingSpec) -> RingElement {
    match ring {
        RingSpec::Integers => ring.from_i64(rng.gen_range(-5..=5)),
        RingSpec::IntegersMod(n) => ring.from_bigint(BigInt::from(rng.gen_range(0..n))),
        RingSpec::Rationals => RingElement::Rat(BigRational::new(
            rng.gen_range(-5..=5).into(),
            rng.gen_range(1..=4).into(),
        )),
    }
}

pub fn unit<R: Rng + ?Sized>(rng: &mut R, ring: RingSpec) -> RingElement {
    loop {
        let c = element(rng, ring);
        if c.is_unit() {
            return c;
        }
    }
}

/// Up to `max_terms` terms with word lengths in `0..=max_degree`.
pub fn poly<R: Rng + ?Sized>(
    rng: &mut R,
    algebra: &Algebra,
    max_degree: usize,
    max_terms: usize,
) -> Poly {
    let n = rng.gen_range(0..=max_terms);
    let raw = (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=max_degree);
            (element(rng, algebra.ring), word(rng, algebra, len))
        })
        .collect();
    Poly::normalize(*algebra, raw).expect("sampled within the algebra")
}

/// A polynomial whose leading word is exactly `lead` with a unit
/// coefficient, plus up to `tail_terms` smaller terms.
pub fn poly_with_lead<R: Rng + ?Sized>(
    rng: &mut R,
    algebra: &Algebra,
    lead: &Word,
    tail_terms: usize,
) -> Poly {
    let mut raw = vec![(unit(rng, algebra.ring), lead.clone())];
    for _ in 0..rng.gen_range(0..=tail_terms) {
        let len = rng.gen_range(0..=lead.len());
        let w = word(rng, algebra, len);
        if algebra.order.compare(&w, lead).is_lt() {
            raw.push((element(rng, algebra.ring), w));
        }
    }
    Poly::normalize(*algebra, raw).expect("sampled within the algebra")
}

/// `Σ c·u·g·v` over up to `max_products` random products of total degree at
/// most `max_degree`.
pub fn ideal_element<R: Rng + ?Sized>(
    rng: &mut R,
    gens: &GenSet,
    max_degree: usize,
    max_products: usize,
) -> Poly {
    let algebra = *gens.algebra();
    let mut acc = Poly::zero(algebra);
    if gens.is_empty() {
        return acc;
    }
    for _ in 0..rng.gen_range(1..=max_products) {
        let i = rng.gen_range(0..gens.len());
        let g = &gens.gens()[i];
        let deg = g.degree().expect("nonzero generator");
        if deg > max_degree {
            continue;
        }
        let slack = rng.gen_range(0..=max_degree - deg);
        let left = match algebra.oracle {
            MulOracle::FreeConcat => rng.gen_range(0..=slack),
            MulOracle::CommutativeMerge => slack,
        };
        let u = word(rng, &algebra, left);
        let v = word(rng, &algebra, slack - left);
        acc = acc.add_scaled(&element(rng, algebra.ring), &u, g, &v);
    }
    acc
}

/// Structure constants for `i > j`, each coefficient zero with probability
/// `sparsity`; antisymmetric by construction.
pub fn lie_algebra<R: Rng + ?Sized>(
    rng: &mut R,
    ring: RingSpec,
    rank: usize,
    sparsity: f64,
) -> LieAlgebra {
    let mut lie = LieAlgebra::abelian(ring, rank);
    for i in 1..rank {
        for j in 0..i {
            let coeffs = (0..rank)
                .map(|_| {
                    if rng.gen_bool(sparsity) {
                        ring.zero()
                    } else {
                        element(rng, ring)
                    }
                })
                .collect();
            lie.set_bracket(i, j, coeffs).expect("in range");
        }
    }
    lie
}
