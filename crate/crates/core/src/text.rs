//! Parsing of the polynomial text form.
//!
//! ```text
//! poly   := "0" | term (("+" | "-") term)*
//! term   := ["-"] factor (["*"] factor)*
//! factor := number | symbol ["^" digits]
//! ```
//!
//! Numbers multiply into the coefficient (`p/q` is accepted over the
//! rationals) and symbols multiply into the word through the algebra's
//! oracle, so `y x` under the commutative oracle denotes `x y`.

use crate::error::{Error, Result};
use crate::poly::{Algebra, Poly};
use crate::words::{is_symbol, Alphabet, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => {
                out.push((col, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((col, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((col, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((col, Tok::Caret));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                out.push((col, Tok::Num(chars[start..i].iter().collect())));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                debug_assert!(is_symbol(&name));
                out.push((col, Tok::Ident(name)));
            }
            _ => return Err(Error::parse(col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

pub fn parse_poly(text: &str, alphabet: &Alphabet, algebra: Algebra) -> Result<Poly> {
    if alphabet.len() != algebra.rank {
        return Err(Error::AlphabetMismatch(alphabet.len(), algebra.rank));
    }
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::parse(1, "empty polynomial"));
    }
    let ring = algebra.ring;
    let oracle = algebra.oracle;
    let end_col = text.chars().count() + 1;

    let mut raw = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < toks.len() {
        let mut coeff = ring.one();
        if !first {
            match &toks[pos].1 {
                Tok::Plus => pos += 1,
                Tok::Minus => {
                    coeff = -&coeff;
                    pos += 1;
                }
                _ => return Err(Error::parse(toks[pos].0, "expected `+` or `-`")),
            }
        }
        if first {
            if let Some((_, Tok::Minus)) = toks.get(pos) {
                coeff = -&coeff;
                pos += 1;
            }
        }
        first = false;

        let mut word = Word::empty();
        let mut factors = 0;
        while let Some((col, tok)) = toks.get(pos) {
            match tok {
                Tok::Plus | Tok::Minus => break,
                Tok::Star if factors > 0 => {
                    pos += 1;
                    if !matches!(toks.get(pos), Some((_, Tok::Num(_) | Tok::Ident(_)))) {
                        let c = toks.get(pos).map_or(end_col, |t| t.0);
                        return Err(Error::parse(c, "expected a factor after `*`"));
                    }
                }
                Tok::Num(n) => {
                    let c = ring.parse_element(n).map_err(|e| e.at_line(1, col - 1))?;
                    coeff = &coeff * &c;
                    factors += 1;
                    pos += 1;
                }
                Tok::Ident(name) => {
                    let letter = alphabet
                        .lookup(name)
                        .ok_or_else(|| Error::parse(*col, format!("unknown symbol `{name}`")))?;
                    pos += 1;
                    let mut power = 1usize;
                    if let Some((_, Tok::Caret)) = toks.get(pos) {
                        pos += 1;
                        match toks.get(pos) {
                            Some((_, Tok::Num(n))) if n.chars().all(|c| c.is_ascii_digit()) => {
                                power = n
                                    .parse()
                                    .map_err(|_| Error::parse(toks[pos].0, "exponent too large"))?;
                                pos += 1;
                            }
                            other => {
                                let c = other.map_or(end_col, |t| t.0);
                                return Err(Error::parse(c, "expected an exponent after `^`"));
                            }
                        }
                    }
                    for _ in 0..power {
                        word = oracle.product(&word, &Word::letter(letter));
                    }
                    factors += 1;
                }
                Tok::Star | Tok::Caret => {
                    return Err(Error::parse(*col, "unexpected operator"));
                }
            }
        }
        if factors == 0 {
            let c = toks.get(pos).map_or(end_col, |t| t.0);
            return Err(Error::parse(c, "expected a term"));
        }
        raw.push((coeff, word));
    }
    Poly::normalize(algebra, raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn setup(ring: RingSpec) -> (Alphabet, Algebra) {
        (Alphabet::new(["x", "y"]).unwrap(), Algebra::free(ring, 2))
    }

    #[test]
    fn parses_and_prints() {
        let (a, alg) = setup(RingSpec::Integers);
        for s in ["2*y x - x y - 3*x + 1", "0", "-1", "x x y - 5", "-x"] {
            let f = parse_poly(s, &a, alg).unwrap();
            assert_eq!(f.format(&a), s);
        }
        let f = parse_poly("x^2*y + 2 3 x - x*x*y", &a, alg).unwrap();
        assert_eq!(f.format(&a), "6*x");
    }

    #[test]
    fn rationals_and_residues() {
        let (a, alg) = setup(RingSpec::Rationals);
        assert_eq!(
            parse_poly("1/2*y + 3/6", &a, alg).unwrap().format(&a),
            "1/2*y + 1/2"
        );
        let (a, alg) = setup(RingSpec::IntegersMod(6));
        assert_eq!(parse_poly("x - 1", &a, alg).unwrap().format(&a), "x + 5");
    }

    #[test]
    fn commutative_words_are_sorted() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let alg = Algebra::commutative(RingSpec::Integers, 2);
        assert_eq!(parse_poly("y x - x y", &a, alg).unwrap().format(&a), "0");
    }

    #[test]
    fn diagnostics() {
        let (a, alg) = setup(RingSpec::Integers);
        let err = parse_poly("x + z", &a, alg).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 5,
                message: "unknown symbol `z`".into()
            }
        );
        assert!(matches!(
            parse_poly("x +", &a, alg),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(matches!(
            parse_poly("x # y", &a, alg),
            Err(Error::Parse { column: 3, .. })
        ));
        assert!(parse_poly("1/2*x", &a, alg).is_err());
        assert!(parse_poly("", &a, alg).is_err());
        assert!(parse_poly("x^", &a, alg).is_err());
    }
}
