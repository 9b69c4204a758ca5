//! Exact row-span membership over ℚ, ℤ and ℤ/n.
//!
//! Rows are inserted one at a time into an echelon form keyed by pivot
//! column. Each stored row carries the combination of inserted rows it came
//! from, so solutions come back as coefficients on the original rows. Over ℤ
//! pivots are combined through extended gcds (Hermite style); over ℤ/n every
//! pivot is scaled to a divisor of n and its annihilator multiple is inserted
//! as well, which yields a Howell form. No step divides by a non-unit.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::ext_gcd_i128;

/// Arithmetic and pivoting rules for one coefficient domain.
pub trait Domain: Clone + Debug {
    type T: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::T;
    fn one(&self) -> Self::T;
    fn is_zero(&self, a: &Self::T) -> bool;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn neg(&self, a: &Self::T) -> Self::T;
    /// `[s, t, c, d]` with determinant a unit, `c·a + d·b = 0`, and `s·a + t·b`
    /// generating the ideal `(a, b)`.
    fn eliminate(&self, a: &Self::T, b: &Self::T) -> [Self::T; 4];
    /// A unit taking `a` to its canonical associate.
    fn normalizer(&self, a: &Self::T) -> Self::T;
    /// Nonzero `k` with `k·a = 0`, for a normalized pivot `a`.
    fn annihilator(&self, a: &Self::T) -> Option<Self::T>;
    /// `q` with `q·pivot = entry`, if one exists.
    fn quotient(&self, entry: &Self::T, pivot: &Self::T) -> Option<Self::T>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Integers;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residues(pub u64);

impl Domain for Rationals {
    type T = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn eliminate(&self, a: &BigRational, b: &BigRational) -> [BigRational; 4] {
        [self.one(), self.zero(), -(b / a), self.one()]
    }
    fn normalizer(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn annihilator(&self, _: &BigRational) -> Option<BigRational> {
        None
    }
    fn quotient(&self, entry: &BigRational, pivot: &BigRational) -> Option<BigRational> {
        Some(entry / pivot)
    }
}

impl Domain for Integers {
    type T = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn eliminate(&self, a: &BigInt, b: &BigInt) -> [BigInt; 4] {
        let e = a.extended_gcd(b);
        [e.x, e.y, -(b / &e.gcd), a / &e.gcd]
    }
    fn normalizer(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn annihilator(&self, _: &BigInt) -> Option<BigInt> {
        None
    }
    fn quotient(&self, entry: &BigInt, pivot: &BigInt) -> Option<BigInt> {
        let (q, r) = entry.div_rem(pivot);
        r.is_zero().then_some(q)
    }
}

impl Residues {
    fn reduce(&self, a: i128) -> u64 {
        a.rem_euclid(self.0 as i128) as u64
    }
}

impl Domain for Residues {
    type T = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }
    fn eliminate(&self, a: &u64, b: &u64) -> [u64; 4] {
        let (a, b) = (*a as i128, *b as i128);
        let (g, s, t) = ext_gcd_i128(a, b);
        [
            self.reduce(s),
            self.reduce(t),
            self.reduce(-(b / g)),
            self.reduce(a / g),
        ]
    }
    fn normalizer(&self, a: &u64) -> u64 {
        let n = self.0 as i128;
        let (g, s, _) = ext_gcd_i128(*a as i128, n);
        let step = n / g;
        let mut u = s.rem_euclid(n);
        // s is a unit modulo n/g; some lift of it is a unit modulo n
        while (u as u64).gcd(&self.0) != 1 {
            u = (u + step).rem_euclid(n);
        }
        u as u64
    }
    fn annihilator(&self, a: &u64) -> Option<u64> {
        let k = self.0 / a;
        (k != self.0).then_some(k)
    }
    fn quotient(&self, entry: &u64, pivot: &u64) -> Option<u64> {
        entry.is_multiple_of(pivot).then(|| entry / pivot)
    }
}

#[derive(Debug, Clone)]
struct Row<T> {
    data: Vec<T>,
    /// Coefficients on the inserted rows; shorter than the row count means
    /// trailing zeros.
    track: Vec<T>,
}

/// The row span of a matrix, kept in echelon form as rows arrive.
#[derive(Debug, Clone)]
pub struct Span<D: Domain> {
    domain: D,
    cols: usize,
    inserted: usize,
    pivots: BTreeMap<usize, Row<D::T>>,
}

impl<D: Domain> Span<D> {
    pub fn new(domain: D, cols: usize) -> Self {
        Span {
            domain,
            cols,
            inserted: 0,
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_rows(domain: D, rows: &[Vec<D::T>], cols: usize) -> Self {
        let mut span = Span::new(domain, cols);
        for r in rows {
            span.push(r.clone());
        }
        span
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    /// Number of rows inserted so far.
    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn push(&mut self, data: Vec<D::T>) {
        assert_eq!(data.len(), self.cols, "row width");
        let d = &self.domain;
        let mut track = vec![d.zero(); self.inserted + 1];
        track[self.inserted] = d.one();
        self.inserted += 1;
        self.insert(Row { data, track });
    }

    fn combine(&self, a: &D::T, x: &Row<D::T>, b: &D::T, y: &Row<D::T>) -> Row<D::T> {
        let d = &self.domain;
        let lin = |u: &[D::T], v: &[D::T]| -> Vec<D::T> {
            let zero = d.zero();
            (0..u.len().max(v.len()))
                .map(|i| {
                    let p = d.mul(a, u.get(i).unwrap_or(&zero));
                    d.add(&p, &d.mul(b, v.get(i).unwrap_or(&zero)))
                })
                .collect()
        };
        Row {
            data: lin(&x.data, &y.data),
            track: lin(&x.track, &y.track),
        }
    }

    fn scaled(&self, k: &D::T, x: &Row<D::T>) -> Row<D::T> {
        self.combine(k, x, &self.domain.zero(), x)
    }

    fn insert(&mut self, row: Row<D::T>) {
        let mut queue = vec![row];
        while let Some(mut v) = queue.pop() {
            while let Some(c) = v.data.iter().position(|x| !self.domain.is_zero(x)) {
                let (pivot, rest) = match self.pivots.remove(&c) {
                    None => (v, None),
                    Some(p) => {
                        let [s, t, cc, dd] = self.domain.eliminate(&p.data[c], &v.data[c]);
                        (
                            self.combine(&s, &p, &t, &v),
                            Some(self.combine(&cc, &p, &dd, &v)),
                        )
                    }
                };
                let pivot = self.scaled(&self.domain.normalizer(&pivot.data[c]), &pivot);
                if let Some(k) = self.domain.annihilator(&pivot.data[c]) {
                    queue.push(self.scaled(&k, &pivot));
                }
                self.pivots.insert(c, pivot);
                match rest {
                    Some(r) => v = r,
                    None => break,
                }
            }
        }
    }

    /// Coefficients `x` on the inserted rows with `Σ x_i·row_i = target`.
    pub fn solve(&self, target: &[D::T]) -> Option<Vec<D::T>> {
        let d = &self.domain;
        let mut residual = target.to_vec();
        let mut x = vec![d.zero(); self.inserted];
        for (&c, p) in &self.pivots {
            if d.is_zero(&residual[c]) {
                continue;
            }
            let q = d.quotient(&residual[c], &p.data[c])?;
            let minus_q = d.neg(&q);
            for (r, a) in residual.iter_mut().zip(&p.data) {
                *r = d.add(r, &d.mul(&minus_q, a));
            }
            for (xi, t) in x.iter_mut().zip(&p.track) {
                *xi = d.add(xi, &d.mul(&q, t));
            }
        }
        residual.iter().all(|r| d.is_zero(r)).then_some(x)
    }
}

pub fn solve_rational(
    rows: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    Span::from_rows(Rationals, rows, target.len()).solve(target)
}

pub fn solve_integer(rows: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    Span::from_rows(Integers, rows, target.len()).solve(target)
}

pub fn solve_modular(rows: &[Vec<u64>], target: &[u64], n: u64) -> Option<Vec<u64>> {
    let rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x % n).collect())
        .collect();
    let target: Vec<u64> = target.iter().map(|x| x % n).collect();
    Span::from_rows(Residues(n), &rows, target.len()).solve(&target)
}
