//! The ideal text format and the renderings printed by the command line.
//!
//! ```text
//! n=3
//! x1^2*x3, x2*x3
//! ```
//!
//! Whitespace between tokens is ignored; the header may also end with `;`. The
//! body is `0` for the zero ideal, `1` for the unit ideal (rejected), or a
//! comma-separated list of monomials `x<i>[^<e>]` joined by `*`.

use std::fmt::Write as _;

use hochster_core::invariants::CorollaryCheck;
use hochster_core::{
    hilbert_series, CohomologyTable, DegreePattern, InvariantReport, Monomial, MonomialIdeal,
    MAX_VARIABLES,
};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Pretty,
    Tsv,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Ideal(#[from] hochster_core::Error),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    /// A run of digits; whitespace may precede it but not split it.
    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        let mut seen = false;
        while let Some(c) = self.src[self.pos..].chars().next() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or_else(|| {
                    self.pos = start;
                    self.error("number too large")
                })?;
            self.pos += 1;
            seen = true;
        }
        if seen {
            Ok(value)
        } else {
            Err(self.error("expected a number"))
        }
    }
}

pub fn parse_ideal(src: &str) -> Result<MonomialIdeal, ParseError> {
    let mut cur = Cursor::new(src);
    cur.expect('n')?;
    cur.expect('=')?;
    cur.skip_ws();
    let at_n = cur.pos;
    let n = cur.number()?;
    if n == 0 || n > MAX_VARIABLES as u64 {
        cur.pos = at_n;
        return Err(cur.error(format!("n must be between 1 and {MAX_VARIABLES}")));
    }
    let n = n as usize;
    cur.eat(';');

    let gens = match cur.peek() {
        Some('0') | Some('1') => {
            let literal = cur.number()?;
            match literal {
                0 => Vec::new(),
                1 => return Err(hochster_core::Error::UnitIdeal.into()),
                _ => return Err(cur.error("expected `0`, `1` or a monomial")),
            }
        }
        None => return Err(cur.error("missing generators (use `0` for the zero ideal)")),
        _ => {
            let mut gens = vec![monomial(&mut cur, n)?];
            while cur.eat(',') {
                gens.push(monomial(&mut cur, n)?);
            }
            gens
        }
    };
    if cur.peek().is_some() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(MonomialIdeal::new(n, gens)?)
}

fn monomial(cur: &mut Cursor<'_>, n: usize) -> Result<Monomial, ParseError> {
    let mut exps = vec![0u32; n];
    loop {
        cur.expect('x')?;
        cur.skip_ws();
        let at = cur.pos;
        let i = cur.number()?;
        if i == 0 || i > n as u64 {
            cur.pos = at;
            return Err(cur.error(format!("variable x{i} out of range 1..={n}")));
        }
        let e = if cur.eat('^') {
            cur.skip_ws();
            let at = cur.pos;
            let e = cur.number()?;
            u32::try_from(e).map_err(|_| {
                cur.pos = at;
                cur.error("exponent too large")
            })?
        } else {
            1
        };
        let slot = &mut exps[i as usize - 1];
        *slot = slot
            .checked_add(e)
            .ok_or_else(|| cur.error("exponent too large"))?;
        if !cur.eat('*') {
            break;
        }
    }
    Ok(Monomial::new(exps)?)
}

pub fn write_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (j, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        let _ = write!(out, "x{}", j + 1);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Inverse of [`parse_ideal`]. Generators are listed in descending lex
/// order, so `x1^2` comes before `x1*x2`.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let body = if ideal.is_zero() {
        "0".to_string()
    } else {
        ideal
            .generators()
            .iter()
            .rev()
            .map(write_monomial)
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("n={}\n{}\n", ideal.n(), body)
}

fn keep(max_i: Option<usize>, i: usize) -> bool {
    max_i.is_none_or(|m| i <= m)
}

/// One `H^i: …` line per nonzero module.
pub fn render_series(table: &CohomologyTable, max_i: Option<usize>) -> String {
    let mut out = String::new();
    for i in (0..=table.n()).filter(|&i| keep(max_i, i) && table.is_nonzero_at(i)) {
        let _ = writeln!(out, "H^{i}: {}", hilbert_series(table, i));
    }
    out
}

/// Free variables as a 1-based list, `-` when empty.
fn face_column(p: &DegreePattern) -> String {
    if p.face().is_empty() {
        return "-".to_string();
    }
    p.face()
        .vertices()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `b` with `*` in the free positions.
fn b_column(p: &DegreePattern) -> String {
    p.nonneg()
        .iter()
        .enumerate()
        .map(|(j, b)| {
            if p.face().contains(j) {
                "*".to_string()
            } else {
                b.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Header `i F b coeff`, then one tab-separated row per entry.
pub fn render_table(table: &CohomologyTable, max_i: Option<usize>) -> String {
    let mut out = String::from("i\tF\tb\tcoeff\n");
    for e in table.entries().filter(|e| keep(max_i, e.index)) {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            e.index,
            face_column(e.pattern),
            b_column(e.pattern),
            e.coeff
        );
    }
    out
}

fn check_value(c: &CorollaryCheck) -> String {
    match &c.witness {
        Some((i, p)) => format!("{} (i={i} {p:?})", c.status),
        None => c.status.to_string(),
    }
}

fn opt(v: Option<i64>, none: &str) -> String {
    v.map_or_else(|| none.to_string(), |x| x.to_string())
}

pub fn render_invariants(
    r: &InvariantReport,
    max_i: Option<usize>,
    format: OutputFormat,
) -> String {
    let mut rows: Vec<(String, String)> = vec![
        ("dim".into(), r.dim.to_string()),
        ("depth".into(), r.depth.to_string()),
    ];
    for (i, (a, b)) in
        r.ai.iter()
            .zip(&r.bi)
            .enumerate()
            .filter(|(i, _)| keep(max_i, *i))
    {
        rows.push((format!("a_{i}"), opt(*a, "-inf")));
        rows.push((format!("b_{i}"), b.to_string()));
    }
    rows.push(("generalized_cm".into(), r.generalized_cm.to_string()));
    rows.push((
        "buchsbaum_bound_global".into(),
        r.buchsbaum_bound_global.to_string(),
    ));
    rows.push((
        "buchsbaum_bound_refined".into(),
        opt(r.buchsbaum_bound_refined, "undefined"),
    ));
    rows.push(("reg".into(), opt(r.reg, "-inf")));
    for c in &r.checks {
        rows.push((format!("check {}", c.name), check_value(c)));
    }

    let mut out = String::new();
    match format {
        OutputFormat::Tsv => {
            for (k, v) in rows {
                let _ = writeln!(out, "{k}\t{v}");
            }
        }
        OutputFormat::Pretty => {
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in rows {
                let _ = writeln!(out, "{k:<width$}  {v}");
            }
        }
    }
    out
}
