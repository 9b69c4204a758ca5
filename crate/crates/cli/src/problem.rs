//! The plain-text problem format: one declaration per line, `#` starts a
//! comment.
//!
//! ```text
//! ring Z/4
//! oracle free
//! alphabet x y z
//! gen y x - x y + z
//! lie
//!   rank 3
//!   bracket y x = -z
//! end
//! ```
//!
//! `ring` and `alphabet` precede any `gen` line. A `lie` block replaces the
//! generators with the PBW relations of the bracket table; `rank n` inside it
//! stands in for `alphabet x1 ... xn`.

use std::fmt::Write as _;

use unigrob::{
    parse_poly, pbw_generators, Algebra, Alphabet, Error, GenSet, LieAlgebra, MulOracle, Poly,
    Result, RingSpec,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub ring: RingSpec,
    pub oracle: MulOracle,
    pub alphabet: Alphabet,
    pub gens: Vec<Poly>,
    pub lie: Option<LieAlgebra>,
}

impl Problem {
    pub fn algebra(&self) -> Algebra {
        match self.oracle {
            MulOracle::FreeConcat => Algebra::free(self.ring, self.alphabet.len()),
            MulOracle::CommutativeMerge => Algebra::commutative(self.ring, self.alphabet.len()),
        }
    }

    pub fn gen_set(&self) -> Result<GenSet> {
        match &self.lie {
            Some(lie) => Ok(pbw_generators(lie)),
            None => GenSet::new(self.algebra(), self.gens.clone()),
        }
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        parse_poly(text, &self.alphabet, self.algebra())
    }

    pub fn parse(text: &str) -> Result<Problem> {
        Parser::default().run(text)
    }

    /// Canonical text; `Problem::parse` inverts it.
    pub fn print(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring {}", self.ring);
        let oracle = match self.oracle {
            MulOracle::FreeConcat => "free",
            MulOracle::CommutativeMerge => "commutative",
        };
        let _ = writeln!(out, "oracle {oracle}");
        let _ = writeln!(out, "alphabet {}", self.alphabet.names().join(" "));
        for g in &self.gens {
            let _ = writeln!(out, "gen {}", g.format(&self.alphabet));
        }
        if let Some(lie) = &self.lie {
            out.push_str("lie\n");
            let algebra = self.algebra();
            for (&(i, j), coeffs) in lie.stored_brackets() {
                let raw = coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (c.clone(), unigrob::Word::letter(k as u32)))
                    .collect();
                let rhs = Poly::normalize(algebra, raw).expect("letters within rank");
                let _ = writeln!(
                    out,
                    "  bracket {} {} = {}",
                    self.alphabet.name(i as u32),
                    self.alphabet.name(j as u32),
                    rhs.format(&self.alphabet)
                );
            }
            out.push_str("end\n");
        }
        out
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Default)]
struct Parser {
    ring: Option<RingSpec>,
    oracle: Option<MulOracle>,
    alphabet: Option<Alphabet>,
    gens: Vec<Poly>,
    lie: Option<LieAlgebra>,
    in_lie: Option<usize>,
    bracket_lines: Vec<(usize, usize, String)>,
}

impl Parser {
    fn algebra(&self, line: usize) -> Result<Algebra> {
        let ring = self
            .ring
            .ok_or_else(|| err(line, 1, "`ring` must come first"))?;
        let alphabet = self
            .alphabet
            .as_ref()
            .ok_or_else(|| err(line, 1, "`alphabet` must come first"))?;
        Ok(match self.oracle.unwrap_or(MulOracle::FreeConcat) {
            MulOracle::FreeConcat => Algebra::free(ring, alphabet.len()),
            MulOracle::CommutativeMerge => Algebra::commutative(ring, alphabet.len()),
        })
    }

    fn run(mut self, text: &str) -> Result<Problem> {
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = content.len() - trimmed.len();
            let (keyword, rest) = match trimmed.find(char::is_whitespace) {
                Some(k) => (&trimmed[..k], &trimmed[k..]),
                None => (trimmed.trim_end(), ""),
            };
            let rest_trimmed = rest.trim_start();
            // 1-based column of `rest_trimmed`, counted in characters
            let rest_col = content[..content.len() - rest_trimmed.len()]
                .chars()
                .count()
                + 1;
            let rest_trimmed = rest_trimmed.trim_end();
            let kw_col = content[..indent].chars().count() + 1;
            self.directive(line, kw_col, keyword, rest_col, rest_trimmed)?;
        }
        if let Some(start) = self.in_lie {
            return Err(err(start, 1, "`lie` block is not closed by `end`"));
        }
        let end = last_line.max(1);
        let ring = self
            .ring
            .ok_or_else(|| err(end, 1, "missing `ring` declaration"))?;
        let alphabet = self
            .alphabet
            .clone()
            .ok_or_else(|| err(end, 1, "missing `alphabet` declaration"))?;
        Ok(Problem {
            ring,
            oracle: self.oracle.unwrap_or(MulOracle::FreeConcat),
            alphabet,
            gens: self.gens,
            lie: self.lie,
        })
    }

    fn directive(
        &mut self,
        line: usize,
        kw_col: usize,
        keyword: &str,
        col: usize,
        rest: &str,
    ) -> Result<()> {
        if self.in_lie.is_some() {
            return self.lie_directive(line, kw_col, keyword, col, rest);
        }
        match keyword {
            "ring" => {
                if self.ring.is_some() {
                    return Err(err(line, kw_col, "duplicate `ring` declaration"));
                }
                if !self.gens.is_empty() {
                    return Err(err(line, kw_col, "`ring` must precede generators"));
                }
                self.ring = Some(
                    rest.parse::<RingSpec>()
                        .map_err(|e| e.at_line(line, col - 1))?,
                );
            }
            "oracle" => {
                if self.oracle.is_some() {
                    return Err(err(line, kw_col, "duplicate `oracle` declaration"));
                }
                if !self.gens.is_empty() {
                    return Err(err(line, kw_col, "`oracle` must precede generators"));
                }
                self.oracle = Some(match rest {
                    "free" => MulOracle::FreeConcat,
                    "commutative" => MulOracle::CommutativeMerge,
                    other => {
                        return Err(err(
                            line,
                            col,
                            format!("unknown oracle `{other}` (expected `free` or `commutative`)"),
                        ))
                    }
                });
            }
            "alphabet" => {
                if self.alphabet.is_some() {
                    return Err(err(line, kw_col, "duplicate `alphabet` declaration"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(err(line, col, "`alphabet` needs at least one symbol"));
                }
                self.alphabet = Some(Alphabet::new(names).map_err(|e| e.at_line(line, col - 1))?);
            }
            "gen" => {
                if self.lie.is_some() {
                    return Err(err(
                        line,
                        kw_col,
                        "`gen` cannot be combined with a `lie` block",
                    ));
                }
                let algebra = self.algebra(line)?;
                let alphabet = self.alphabet.as_ref().expect("checked by algebra()");
                let g =
                    parse_poly(rest, alphabet, algebra).map_err(|e| e.at_line(line, col - 1))?;
                if g.is_zero() {
                    return Err(err(line, col, "generator is zero"));
                }
                self.gens.push(g);
            }
            "lie" => {
                if !rest.is_empty() {
                    return Err(err(line, col, "unexpected text after `lie`"));
                }
                if self.lie.is_some() {
                    return Err(err(line, kw_col, "duplicate `lie` block"));
                }
                if !self.gens.is_empty() {
                    return Err(err(
                        line,
                        kw_col,
                        "`lie` cannot be combined with `gen` lines",
                    ));
                }
                if self.oracle == Some(MulOracle::CommutativeMerge) {
                    return Err(err(line, kw_col, "`lie` requires the free oracle"));
                }
                self.in_lie = Some(line);
            }
            "end" => return Err(err(line, kw_col, "`end` without `lie`")),
            other => return Err(err(line, kw_col, format!("unknown directive `{other}`"))),
        }
        Ok(())
    }

    fn lie_directive(
        &mut self,
        line: usize,
        kw_col: usize,
        keyword: &str,
        col: usize,
        rest: &str,
    ) -> Result<()> {
        match keyword {
            "rank" => {
                if !self.bracket_lines.is_empty() {
                    return Err(err(line, kw_col, "`rank` must precede brackets"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| err(line, col, format!("invalid rank `{rest}`")))?;
                match &self.alphabet {
                    Some(a) if a.len() != n => {
                        return Err(err(
                            line,
                            col,
                            format!("rank {n} disagrees with the {}-letter alphabet", a.len()),
                        ))
                    }
                    Some(_) => {}
                    None => self.alphabet = Some(Alphabet::indexed(n)),
                }
            }
            "bracket" => self.bracket_lines.push((line, col, rest.to_string())),
            "end" => {
                if !rest.is_empty() {
                    return Err(err(line, col, "unexpected text after `end`"));
                }
                self.finish_lie(line)?;
            }
            other => {
                return Err(err(
                    line,
                    kw_col,
                    format!("unknown directive `{other}` in `lie` block"),
                ))
            }
        }
        Ok(())
    }

    fn finish_lie(&mut self, end_line: usize) -> Result<()> {
        let start = self.in_lie.take().expect("inside a lie block");
        let ring = self
            .ring
            .ok_or_else(|| err(start, 1, "`ring` must precede `lie`"))?;
        let alphabet = self
            .alphabet
            .clone()
            .ok_or_else(|| err(end_line, 1, "`lie` block needs `alphabet` or `rank`"))?;
        let algebra = Algebra::free(ring, alphabet.len());
        let mut lie = LieAlgebra::new(ring, alphabet.clone());
        let mut seen = std::collections::BTreeSet::new();
        for (line, col, text) in std::mem::take(&mut self.bracket_lines) {
            let Some(eq) = text.find('=') else {
                return Err(err(
                    line,
                    col,
                    "expected `bracket a b = <linear combination>`",
                ));
            };
            let names: Vec<&str> = text[..eq].split_whitespace().collect();
            let [a, b] = names[..] else {
                return Err(err(line, col, "a bracket names exactly two symbols"));
            };
            let letter = |name: &str| {
                alphabet.lookup(name).map(|l| l as usize).ok_or_else(|| {
                    let offset = text.find(name).unwrap_or(0);
                    err(
                        line,
                        col + text[..offset].chars().count(),
                        format!("unknown symbol `{name}`"),
                    )
                })
            };
            let (i, j) = (letter(a)?, letter(b)?);
            if i == j {
                return Err(err(
                    line,
                    col,
                    format!("[{a}, {a}] is zero and cannot be set"),
                ));
            }
            if !seen.insert((i.max(j), i.min(j))) {
                return Err(err(
                    line,
                    col,
                    format!("bracket of `{a}` and `{b}` given twice"),
                ));
            }
            let rhs_text = &text[eq + 1..];
            let rhs_col = col + text[..eq + 1].chars().count();
            let rhs = parse_poly(rhs_text, &alphabet, algebra)
                .map_err(|e| e.at_line(line, rhs_col - 1))?;
            let mut coeffs = vec![ring.zero(); alphabet.len()];
            for t in rhs.terms() {
                if t.word.len() != 1 {
                    let lead = rhs_text.len() - rhs_text.trim_start().len();
                    return Err(err(
                        line,
                        rhs_col + lead,
                        "bracket values are linear in the generators",
                    ));
                }
                coeffs[t.word.letters()[0] as usize] = t.coeff.clone();
            }
            if i < j {
                coeffs = coeffs.iter().map(|c| -c).collect();
            }
            lie.set_bracket(i.max(j), i.min(j), coeffs)
                .map_err(|e| err(line, col, e.to_string()))?;
        }
        self.lie = Some(lie);
        Ok(())
    }
}
