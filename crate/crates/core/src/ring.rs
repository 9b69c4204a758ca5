//! Exact coefficient rings: the integers, residues modulo `n`, and the
//! rationals.
//!
//! Elements carry enough of their ring to detect mixing. The engine only
//! ever inverts elements that [`RingElement::is_unit`] accepts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
    Rationals,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Int(BigInt),
    Mod { value: u64, modulus: u64 },
    Rat(BigRational),
}

impl RingSpec {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::PreconditionViolated(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> RingElement {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> RingElement {
        match *self {
            RingSpec::Integers => RingElement::Int(v),
            RingSpec::IntegersMod(n) => {
                let r = v.mod_floor(&BigInt::from(n));
                RingElement::Mod {
                    value: u64::try_from(r).expect("residue fits in u64"),
                    modulus: n,
                }
            }
            RingSpec::Rationals => RingElement::Rat(BigRational::from_integer(v)),
        }
    }

    /// Parses the text encoding of an element: a signed decimal integer, or
    /// `p/q` over the rationals. Residues are reduced modulo `n`.
    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        let text = text.trim();
        let bad = || Error::parse(1, format!("invalid coefficient `{text}` for ring {self}"));
        match self {
            RingSpec::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((p, q)) => (p.trim(), q.trim()),
                    None => (text, "1"),
                };
                let num = BigInt::from_str(num).map_err(|_| bad())?;
                let den = BigInt::from_str(den).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::parse(1, "zero denominator"));
                }
                Ok(RingElement::Rat(BigRational::new(num, den)))
            }
            _ => {
                let v = BigInt::from_str(text).map_err(|_| bad())?;
                Ok(self.from_bigint(v))
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match *self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::IntegersMod(n) => is_prime(n),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
            RingSpec::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            other => {
                let n = other
                    .strip_prefix("Z/")
                    .and_then(|n| n.trim().parse::<u64>().ok())
                    .ok_or_else(|| Error::parse(1, format!("unknown ring `{other}`")))?;
                RingSpec::integers_mod(n).map_err(|e| Error::parse(1, e.to_string()))
            }
        }
    }
}

/// Extended Euclid on signed 128-bit values: returns `(g, s, t)` with
/// `s*a + t*b = g`.
pub(crate) fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

impl RingElement {
    pub fn ring(&self) -> RingSpec {
        match self {
            RingElement::Int(_) => RingSpec::Integers,
            RingElement::Mod { modulus, .. } => RingSpec::IntegersMod(*modulus),
            RingElement::Rat(_) => RingSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(v) => v.is_zero(),
            RingElement::Mod { value, .. } => *value == 0,
            RingElement::Rat(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Int(v) => v.is_one(),
            RingElement::Mod { value, .. } => *value == 1,
            RingElement::Rat(v) => v.is_one(),
        }
    }

    /// True for elements that print with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            RingElement::Int(v) => v.is_negative(),
            RingElement::Mod { .. } => false,
            RingElement::Rat(v) => v.is_negative(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Int(v) => v.abs().is_one(),
            RingElement::Mod { value, modulus } => value.gcd(modulus) == 1,
            RingElement::Rat(v) => !v.is_zero(),
        }
    }

    pub fn inv_unit(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(match self {
            RingElement::Int(v) => RingElement::Int(v.clone()),
            RingElement::Mod { value, modulus } => {
                let (_, s, _) = ext_gcd_i128(*value as i128, *modulus as i128);
                RingElement::Mod {
                    value: s.rem_euclid(*modulus as i128) as u64,
                    modulus: *modulus,
                }
            }
            RingElement::Rat(v) => RingElement::Rat(v.recip()),
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring().to_string(),
                other.ring().to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self * other)
    }

    /// Integer representative (residues lift to `[0, n)`); `None` for a
    /// non-integral rational.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            RingElement::Int(v) => Some(v.clone()),
            RingElement::Mod { value, .. } => Some(BigInt::from(*value)),
            RingElement::Rat(v) if v.is_integer() => Some(v.to_integer()),
            RingElement::Rat(_) => None,
        }
    }
}

// Mixing rings through the operators is a programming error; the checked_*
// methods are the fallible surface.
fn mismatch(a: &RingElement, b: &RingElement) -> ! {
    panic!("ring mismatch: {} vs {}", a.ring(), b.ring())
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a + b),
            (
                RingElement::Mod { value: a, modulus },
                RingElement::Mod {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => RingElement::Mod {
                value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            (RingElement::Rat(a), RingElement::Rat(b)) => RingElement::Rat(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        match self {
            RingElement::Int(a) => RingElement::Int(-a),
            RingElement::Mod { value, modulus } => RingElement::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            RingElement::Rat(a) => RingElement::Rat(-a),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a * b),
            (
                RingElement::Mod { value: a, modulus },
                RingElement::Mod {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => RingElement::Mod {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            (RingElement::Rat(a), RingElement::Rat(b)) => RingElement::Rat(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(v) => write!(f, "{v}"),
            RingElement::Mod { value, .. } => write!(f, "{value}"),
            RingElement::Rat(v) if v.is_integer() => write!(f, "{}", v.numer()),
            RingElement::Rat(v) => write!(f, "{}/{}", v.numer(), v.denom()),
        }
    }
}
