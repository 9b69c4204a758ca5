#![allow(dead_code)]

use unigrob::{
    check_groebner, parse_poly, pbw_generators, Algebra, Alphabet, GenSet, LieAlgebra, Poly,
    RingSpec, Verdict, Word,
};

pub struct Corpus {
    pub name: &'static str,
    pub alphabet: Alphabet,
    pub gens: GenSet,
}

impl Corpus {
    pub fn algebra(&self) -> Algebra {
        *self.gens.algebra()
    }

    pub fn parse(&self, text: &str) -> Poly {
        parse_poly(text, &self.alphabet, self.algebra()).unwrap()
    }
}

pub fn from_text(name: &'static str, names: &[&str], algebra: Algebra, gens: &[&str]) -> Corpus {
    let alphabet = Alphabet::new(names.iter().copied()).unwrap();
    let gens = gens
        .iter()
        .map(|g| parse_poly(g, &alphabet, algebra).unwrap())
        .collect();
    Corpus {
        name,
        alphabet,
        gens: GenSet::new(algebra, gens).unwrap(),
    }
}

/// `{x_i x_j : i ≤ j}` in the commutative algebra on `n` letters over ℚ.
pub fn maximal_square(n: usize) -> Corpus {
    let alphabet = Alphabet::indexed(n);
    let algebra = Algebra::commutative(RingSpec::Rationals, n);
    let mut gens = Vec::new();
    for i in 0..n as u32 {
        for j in i..n as u32 {
            gens.push(Poly::monomial(algebra, algebra.ring.one(), Word::from([i, j])).unwrap());
        }
    }
    Corpus {
        name: "maximal-square/Q",
        alphabet,
        gens: GenSet::new(algebra, gens).unwrap(),
    }
}

pub fn pbw(name: &'static str, lie: &LieAlgebra) -> Corpus {
    Corpus {
        name,
        alphabet: lie.alphabet().clone(),
        gens: pbw_generators(lie),
    }
}

pub fn sl2_z() -> Corpus {
    pbw("sl2/Z", &LieAlgebra::sl2(RingSpec::Integers))
}

/// Gröbner bases used by the randomized suites; each is checked on load.
pub fn verified_corpora() -> Vec<Corpus> {
    let corpora = vec![
        maximal_square(3),
        sl2_z(),
        pbw(
            "heisenberg/Z4",
            &LieAlgebra::heisenberg(RingSpec::IntegersMod(4)),
        ),
        pbw(
            "abelian3/Z6",
            &LieAlgebra::abelian(RingSpec::IntegersMod(6), 3),
        ),
        from_text(
            "xy-1/Z",
            &["x", "y"],
            Algebra::free(RingSpec::Integers, 2),
            &["x y - 1"],
        ),
        from_text(
            "x2-y completed/Z",
            &["y", "x"],
            Algebra::free(RingSpec::Integers, 2),
            &["x x - y", "x y - y x"],
        ),
    ];
    for c in &corpora {
        let report = check_groebner(&c.gens).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::IsGroebner,
            "{} must be a Gröbner basis",
            c.name
        );
    }
    corpora
}
