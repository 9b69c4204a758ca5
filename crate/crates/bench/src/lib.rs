//! Shared inputs for the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unigrob::{pbw_generators, random, Algebra, GenSet, LieAlgebra, Poly, RingSpec, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sl2() -> GenSet {
    pbw_generators(&LieAlgebra::sl2(RingSpec::Integers))
}

/// All degree-two monomials in `n` commuting variables over ℚ.
pub fn square_of_maximal_ideal(n: usize) -> GenSet {
    let algebra = Algebra::commutative(RingSpec::Rationals, n);
    let mut gens = Vec::new();
    for i in 0..n as u32 {
        for j in i..n as u32 {
            let w = Word::new(vec![i, j]);
            gens.push(Poly::monomial(algebra, algebra.ring.one(), w).expect("basis word"));
        }
    }
    GenSet::new(algebra, gens).expect("nonzero generators")
}

/// A random valid Lie algebra's PBW system: structure constants over ℤ/p
/// are resampled until the Jacobi identity holds.
pub fn random_pbw(seed: u64, p: u64, rank: usize) -> GenSet {
    let mut rng = rng(seed);
    loop {
        let lie = random::lie_algebra(&mut rng, RingSpec::IntegersMod(p), rank, 0.8);
        if unigrob::validate_lie(&lie).is_ok() {
            return pbw_generators(&lie);
        }
    }
}

pub fn inputs(gens: &GenSet, seed: u64, count: usize, max_degree: usize) -> Vec<Poly> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random::poly(&mut rng, gens.algebra(), max_degree, 6))
        .collect()
}
