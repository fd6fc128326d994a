//! A small term language over `&` (meet), postfix `'` (negation), `->`
//! (implication), the constants `0` and `1`, and the variables `x y z w`.
//!
//! ```text
//! equation := expr relation expr
//! relation := "=" | "<=1" | "~=1"
//! expr     := meet ( "->" meet )?
//! meet     := postfix ( "&" postfix )*
//! postfix  := primary ( "'" | "'0" )*
//! primary  := var | "0" | "1" | "(" expr ")"
//! ```
//!
//! `->` does not associate: `x -> y -> z` is rejected, nesting needs
//! parentheses. Negation may be written `x'` or `x'0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ops::{imp_set, neg_set};
use crate::order::{ElemSet, MeetSemilattice};

pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    /// Index into [`VARIABLES`].
    Var(usize),
    Zero,
    One,
    Neg(Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Leq1,
    Approx1,
}

impl Relation {
    pub fn holds(self, s: &MeetSemilattice, lhs: &ElemSet, rhs: &ElemSet) -> bool {
        match self {
            Relation::Equal => lhs == rhs,
            Relation::Leq1 => s.leq1(lhs, rhs),
            Relation::Approx1 => s.approx1(lhs, rhs),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "=",
            Relation::Leq1 => "<=1",
            Relation::Approx1 => "~=1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
    pub relation: Relation,
}

impl Term {
    pub fn uses_one(&self) -> bool {
        match self {
            Term::One => true,
            Term::Var(_) | Term::Zero => false,
            Term::Neg(t) => t.uses_one(),
            Term::Meet(a, b) | Term::Imp(a, b) => a.uses_one() || b.uses_one(),
        }
    }

    fn collect_vars(&self, seen: &mut [bool; 4]) {
        match self {
            Term::Var(v) => seen[*v] = true,
            Term::Zero | Term::One => {}
            Term::Neg(t) => t.collect_vars(seen),
            Term::Meet(a, b) | Term::Imp(a, b) => {
                a.collect_vars(seen);
                b.collect_vars(seen);
            }
        }
    }

    /// Evaluates with every operation lifted to sets. `env[v]` is the value
    /// of variable `v`. Fails only if `1` is used on an unbounded structure.
    pub fn eval(&self, s: &MeetSemilattice, env: &[usize; 4]) -> Result<ElemSet> {
        Ok(match self {
            Term::Var(v) => ElemSet::singleton(env[*v]),
            Term::Zero => ElemSet::singleton(s.bottom()),
            Term::One => ElemSet::singleton(
                s.top()
                    .ok_or_else(|| Error::RequiresBounded("constant 1".into()))?,
            ),
            Term::Neg(t) => neg_set(s, &t.eval(s, env)?)?,
            Term::Meet(a, b) => s.set_meet(&a.eval(s, env)?, &b.eval(s, env)?),
            Term::Imp(a, b) => imp_set(s, &a.eval(s, env)?, &b.eval(s, env)?)?,
        })
    }
}

impl Equation {
    /// Variables occurring in either side, in `x y z w` order.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = [false; 4];
        self.lhs.collect_vars(&mut seen);
        self.rhs.collect_vars(&mut seen);
        (0..4).filter(|&v| seen[v]).collect()
    }

    pub fn uses_one(&self) -> bool {
        self.lhs.uses_one() || self.rhs.uses_one()
    }
}

// Printing: precedence 0 = implication, 1 = meet, 2 = postfix/atoms.
fn write_term(t: &Term, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
    match t {
        Term::Var(v) => write!(f, "{}", VARIABLES[*v]),
        Term::Zero => f.write_str("0"),
        Term::One => f.write_str("1"),
        Term::Neg(inner) => {
            write_term(inner, f, 2)?;
            f.write_str("'")
        }
        Term::Meet(a, b) => {
            if ctx > 1 {
                f.write_str("(")?;
            }
            write_term(a, f, 1)?;
            f.write_str(" & ")?;
            // meet parses left-associatively
            write_term(b, f, 2)?;
            if ctx > 1 {
                f.write_str(")")?;
            }
            Ok(())
        }
        Term::Imp(a, b) => {
            if ctx > 0 {
                f.write_str("(")?;
            }
            write_term(a, f, 1)?;
            f.write_str(" -> ")?;
            write_term(b, f, 1)?;
            if ctx > 0 {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f, 0)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.relation, self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Zero,
    One,
    Prime,
    Amp,
    Arrow,
    LParen,
    RParen,
    Rel(Relation),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |column: usize, message: String| Error::Parse { column, message };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let rest: String = chars[i..].iter().take(3).collect();
        let (tok, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '\'' if chars.get(i + 1) == Some(&'0') => (Tok::Prime, 2),
            '\'' => (Tok::Prime, 1),
            '&' => (Tok::Amp, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '0' => (Tok::Zero, 1),
            '1' => (Tok::One, 1),
            '=' => (Tok::Rel(Relation::Equal), 1),
            '-' if rest.starts_with("->") => (Tok::Arrow, 2),
            '<' if rest == "<=1" => (Tok::Rel(Relation::Leq1), 3),
            '~' if rest == "~=1" => (Tok::Rel(Relation::Approx1), 3),
            c => match VARIABLES.iter().position(|&v| v == c) {
                Some(v) => (Tok::Var(v), 1),
                None => return Err(err(col, format!("unexpected `{c}`"))),
            },
        };
        out.push((col, tok));
        i += width;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(c, _)| c)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Term> {
        let lhs = self.meet()?;
        if self.peek() == Some(Tok::Arrow) {
            self.pos += 1;
            let rhs = self.meet()?;
            if self.peek() == Some(Tok::Arrow) {
                return self.fail("`->` is not associative; add parentheses");
            }
            return Ok(Term::Imp(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Term> {
        let mut acc = self.postfix()?;
        while self.peek() == Some(Tok::Amp) {
            self.pos += 1;
            let rhs = self.postfix()?;
            acc = Term::Meet(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.primary()?;
        while self.peek() == Some(Tok::Prime) {
            self.pos += 1;
            t = Term::Neg(Box::new(t));
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term> {
        let t = match self.peek() {
            Some(Tok::Var(v)) => Term::Var(v),
            Some(Tok::Zero) => Term::Zero,
            Some(Tok::One) => Term::One,
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                return Ok(inner);
            }
            Some(_) => return self.fail("expected a variable, constant or `(`"),
            None => return self.fail("unexpected end of input"),
        };
        self.pos += 1;
        Ok(t)
    }
}

fn parser(src: &str) -> Result<Parser> {
    Ok(Parser {
        toks: tokenize(src)?,
        pos: 0,
        end: src.chars().count() + 1,
    })
}

pub fn parse_term(src: &str) -> Result<Term> {
    let mut p = parser(src)?;
    let t = p.expr()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(t)
}

pub fn parse_equation(src: &str) -> Result<Equation> {
    let mut p = parser(src)?;
    let lhs = p.expr()?;
    let relation = match p.peek() {
        Some(Tok::Rel(r)) => r,
        _ => return p.fail("expected `=`, `<=1` or `~=1`"),
    };
    p.pos += 1;
    let rhs = p.expr()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(Equation { lhs, rhs, relation })
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_term(s)
    }
}

impl FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_equation(s)
    }
}
