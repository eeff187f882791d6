//! Plain-text syntax for polynomials in `x1..xn` with alpha coefficients.
//!
//! Rendering puts every coefficient in parentheses with alpha powers
//! ascending, and lists monomials highest-first:
//!
//! ```text
//! (1 + a)*x1^2 + (2)*x1*x2 + (1 + a)*x2^2
//! ```
//!
//! The parser accepts the full expression grammar (`+ - * / ^`, parentheses),
//! so anything rendered here parses back to an equal polynomial.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::alpha::AlphaRational;
use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly};

/// Coefficient as it appears in a term: `(1 + a)` or `((2)/(1 + a))`.
pub fn render_coeff(c: &AlphaRational) -> String {
    if c.is_integer_poly() {
        format!("({})", c.num().render())
    } else {
        format!("(({})/({}))", c.num().render(), c.den().render())
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", idx + 1)),
            _ => parts.push(format!("x{}^{}", idx + 1, e)),
        }
    }
    parts.join("*")
}

pub fn render_multipoly(f: &MultiPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = f
        .terms_canonical()
        .map(|(m, c)| {
            let coeff = render_coeff(c);
            let mono = render_monomial(m);
            if mono.is_empty() {
                coeff
            } else {
                format!("{}*{}", coeff, mono)
            }
        })
        .collect();
    terms.join(" + ")
}

#[derive(Clone, PartialEq, Debug)]
enum Token {
    Int(BigInt),
    Alpha,
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Token::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Token::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Token::Star);
                i += 1;
            }
            '/' => {
                toks.push(Token::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Token::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Token::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Token::RParen);
                i += 1;
            }
            'a' => {
                toks.push(Token::Alpha);
                i += 1;
            }
            'x' => {
                let start = i + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(Error::Parse(
                        "variable name needs an index, like x1".to_string(),
                    ));
                }
                let k: usize = input[start..end].parse().map_err(|_| {
                    Error::Parse(format!("bad variable index in {:?}", &input[i..end]))
                })?;
                toks.push(Token::Var(k));
                i = end;
            }
            '0'..='9' => {
                let start = i;
                let mut end = i;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let v: BigInt = input[start..end]
                    .parse()
                    .expect("digit run parses as integer");
                toks.push(Token::Int(v));
                i = end;
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected character {:?} at byte {}",
                    c, i
                )))
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, want: &Token) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            other => Err(Error::Parse(format!(
                "expected {:?}, found {:?}",
                want, other
            ))),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let d = self.factor()?;
                    acc = divide_by_scalar(&acc, &d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump().cloned() {
                Some(Token::Int(v)) => {
                    let e = v
                        .to_u32()
                        .ok_or_else(|| Error::Parse(format!("exponent {} out of range", v)))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!(
                    "expected integer exponent after ^, found {:?}",
                    other
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.bump().cloned() {
            Some(Token::Int(v)) => Ok(MultiPoly::constant(self.n, AlphaRational::from_bigint(v))),
            Some(Token::Alpha) => Ok(MultiPoly::constant(self.n, AlphaRational::alpha())),
            Some(Token::Var(k)) => {
                if k == 0 || k > self.n {
                    return Err(Error::Parse(format!(
                        "variable x{} outside x1..x{}",
                        k, self.n
                    )));
                }
                MultiPoly::var(self.n, k)
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.eat(&Token::RParen)?;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("expected a value, found {:?}", other))),
        }
    }
}

/// Division is only defined by polynomials free of `x1..xn`, since the
/// coefficient field is rational functions of alpha, not of the variables.
fn divide_by_scalar(f: &MultiPoly, d: &MultiPoly) -> Result<MultiPoly> {
    if d.is_zero() {
        return Err(Error::Parse("division by zero".to_string()));
    }
    let n = d.num_vars();
    let constant = Monomial::constant(n);
    if d.num_terms() != 1 || d.terms().next().unwrap().0 != &constant {
        return Err(Error::Parse(
            "division by a polynomial in x1..xn is not supported".to_string(),
        ));
    }
    let c = d.coeff(&constant);
    let inv = c
        .inverse()
        .map_err(|_| Error::Parse("division by zero".to_string()))?;
    Ok(f.scale(&inv))
}

/// Parses an expression in `x1..xn` and the parameter `a`.
pub fn parse_multipoly(input: &str, n: usize) -> Result<MultiPoly> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        n,
    };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            toks[p.pos]
        )));
    }
    Ok(out)
}
