//! Gröbner bases with unit leading coefficients for two-sided ideals of free
//! associative algebras over ℤ, ℤ/n and ℚ.
//!
//! Polynomials live in an [`Algebra`] fixed by a coefficient ring, a
//! multiplication oracle on words (free concatenation or sorted merge) and
//! the degree-lexicographic order. Division, S-polynomials, the Buchberger
//! check, quotient bases, PBW systems and a bounded membership oracle are
//! built on top.

pub mod critical_pairs;
pub mod division;
pub mod error;
pub mod lattice;
pub mod membership;
pub mod pbw;
pub mod poly;
pub mod quotient;
pub mod random;
pub mod ring;
pub mod text;
pub mod words;

pub use critical_pairs::{
    check_groebner, complete, s_polynomial, s_polynomials, telescope, GBReport, SPoly, Verdict,
};
pub use division::{
    divide, format_steps, normal_form, try_divide_step, DivisionStep, DivisionTrace, DivisorMatch,
    GenSet, Strategy, DEFAULT_STEP_BUDGET,
};
pub use error::{Error, Result};
pub use membership::{
    build_filtration, build_truncation, is_member, reconstruct, Membership, TruncatedModule,
};
pub use pbw::{
    build_pbw, pbw_generators, validate_lie, verify_pbw, LieAlgebra, PbwReport, PbwSystem,
};
pub use poly::{Algebra, MulOracle, Poly, Term};
pub use quotient::{decompose, decompose_with, enumerate_basis, is_normal, QuotientBasis};
pub use ring::{RingElement, RingSpec};
pub use text::parse_poly;
pub use words::{
    factorizations, overlaps, overlaps_between, Alphabet, Letter, OrderSpec, Overlap, Word,
};
