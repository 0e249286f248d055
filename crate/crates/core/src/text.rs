//! Text input for fields and polynomials.
//!
//! ```text
//! field   = "GF" "(" int [ "^" int ] [ ";" "modulus" "=" expr ] ")" ;
//! expr    = [ "-" ] term { ( "+" | "-" ) term } ;
//! term    = factor { "*" factor } ;
//! factor  = primary [ "^" int ] ;
//! primary = int | "t" | "x1" | "x2" | "(" expr ")" ;
//! int     = digit { digit } ;
//! ```
//!
//! Products are evaluated in the Ore algebra, so `x1*t` means
//! `sigma1(t)*x1`. The printed form of a polynomial always puts
//! coefficients on the left and parses back to the same value. Inside a
//! modulus only `t` may appear. `GF(q)` with `q` a prime power is read as
//! `GF(p^m)`.

use crate::bivar::BivarOrePoly;
use crate::error::{Error, Result};
use crate::field::{gfp, Automorphism, FieldCtx, FieldElem};
use crate::ore::OrePoly;

const MAX_EXPONENT: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as u64 - '0' as u64))
                    .ok_or_else(|| parse_error(l, col, "integer literal too large"))?;
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Int(value),
                line: l,
                column: col,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars
                .peek()
                .filter(|d| d.is_ascii_alphanumeric() || **d == '_')
            {
                name.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Ident(name),
                line: l,
                column: col,
            });
        } else if "+-*^();=".contains(c) {
            chars.next();
            column += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(parse_error(l, col, format!("unexpected character '{c}'")));
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

/// Target of expression evaluation.
trait Algebra {
    type V: Clone;
    fn int(&self, n: u64) -> Self::V;
    fn var(&self, name: &str) -> Option<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
}

struct Parser<'a, A: Algebra> {
    toks: &'a [Token],
    pos: usize,
    alg: &'a A,
}

impl<'a, A: Algebra> Parser<'a, A> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        parse_error(t.line, t.column, message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err_here(format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err_here("expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<A::V> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = self.alg.neg(&acc);
        }
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.alg.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.alg.add(&acc, &self.alg.neg(&t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<A::V> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = self.alg.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<A::V> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.peek().clone();
        let k = self.int()?;
        if k > MAX_EXPONENT {
            return Err(parse_error(
                at.line,
                at.column,
                format!("exponent above {MAX_EXPONENT}"),
            ));
        }
        let mut acc = self.alg.int(1);
        let mut sq = base;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.alg.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.alg.mul(&sq, &sq);
            }
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<A::V> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(self.alg.int(*n))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                self.alg
                    .var(name)
                    .ok_or_else(|| parse_error(t.line, t.column, format!("unknown name '{name}'")))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::End => Err(self.err_here("unexpected end of input")),
            Tok::Sym(c) => Err(self.err_here(format!("unexpected '{c}'"))),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek().tok {
            Tok::End => Ok(()),
            _ => Err(self.err_here("unexpected trailing input")),
        }
    }
}

/// Integer polynomials in `t` reduced mod `p`, constant first.
struct ModulusAlgebra {
    p: u64,
}

impl Algebra for ModulusAlgebra {
    type V = Vec<u64>;

    fn int(&self, n: u64) -> Vec<u64> {
        vec![n % self.p]
    }

    fn var(&self, name: &str) -> Option<Vec<u64>> {
        (name == "t").then(|| vec![0, 1])
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|&c| (self.p - c) % self.p).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + gfp::mul_mod(x, y, self.p)) % self.p;
            }
        }
        out
    }
}

struct BivarAlgebra<'a> {
    ctx: &'a FieldCtx,
    s1: Automorphism,
    s2: Automorphism,
}

impl BivarAlgebra<'_> {
    fn generator(&self) -> FieldElem {
        if self.ctx.degree() == 1 {
            // t is the root of the linear modulus t + c
            self.ctx.from_int(-(self.ctx.modulus()[0] as i64))
        } else {
            self.ctx.from_coeffs(&[0, 1]).expect("degree at least two")
        }
    }
}

impl Algebra for BivarAlgebra<'_> {
    type V = BivarOrePoly;

    fn int(&self, n: u64) -> BivarOrePoly {
        let c = self.ctx.from_int((n % self.ctx.characteristic()) as i64);
        BivarOrePoly::constant(self.ctx, self.s1, self.s2, c)
    }

    fn var(&self, name: &str) -> Option<BivarOrePoly> {
        match name {
            "t" => Some(BivarOrePoly::constant(
                self.ctx,
                self.s1,
                self.s2,
                self.generator(),
            )),
            "x1" => Some(BivarOrePoly::x1(self.ctx, self.s1, self.s2)),
            "x2" => Some(BivarOrePoly::x2(self.ctx, self.s1, self.s2)),
            _ => None,
        }
    }

    fn add(&self, a: &BivarOrePoly, b: &BivarOrePoly) -> BivarOrePoly {
        a + b
    }

    fn neg(&self, a: &BivarOrePoly) -> BivarOrePoly {
        -a
    }

    fn mul(&self, a: &BivarOrePoly, b: &BivarOrePoly) -> BivarOrePoly {
        a * b
    }
}

/// Splits `q = p^m`; `None` unless `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = *gfp::prime_factors(q).first()?;
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

/// Parses `GF(p)`, `GF(q)`, `GF(p^m)` or `GF(p^m; modulus = ...)`.
pub fn parse_field(src: &str) -> Result<FieldCtx> {
    let toks = lex(src)?;
    let probe = ModulusAlgebra { p: 2 };
    let mut ps = Parser {
        toks: &toks,
        pos: 0,
        alg: &probe,
    };
    match ps.next() {
        Token {
            tok: Tok::Ident(name),
            ..
        } if name == "GF" => {}
        t => return Err(parse_error(t.line, t.column, "expected 'GF'")),
    }
    ps.expect('(')?;
    let base_at = ps.peek().clone();
    let base = ps.int()?;
    let explicit = if ps.eat('^') { Some(ps.int()?) } else { None };
    let (p, m) = match explicit {
        Some(m) => {
            let m = u32::try_from(m)
                .map_err(|_| parse_error(base_at.line, base_at.column, "degree too large"))?;
            (base, Some(m))
        }
        None if gfp::is_prime(base) => (base, None),
        None => {
            let (p, m) = prime_power(base).ok_or_else(|| {
                parse_error(
                    base_at.line,
                    base_at.column,
                    format!("{base} is not a prime power"),
                )
            })?;
            (p, Some(m))
        }
    };
    if !gfp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let modulus = if ps.eat(';') {
        match ps.next() {
            Token {
                tok: Tok::Ident(name),
                ..
            } if name == "modulus" => {}
            t => return Err(parse_error(t.line, t.column, "expected 'modulus'")),
        }
        ps.expect('=')?;
        let alg = ModulusAlgebra { p };
        let mut inner = Parser {
            toks: &toks,
            pos: ps.pos,
            alg: &alg,
        };
        let mut coeffs = inner.expr()?;
        ps.pos = inner.pos;
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Some(coeffs)
    } else {
        None
    };
    ps.expect(')')?;
    ps.finish()?;
    let m = match (m, &modulus) {
        (Some(m), _) => m,
        (None, Some(c)) => (c.len() - 1) as u32,
        (None, None) => 1,
    };
    FieldCtx::new(p, m, modulus.as_deref())
}

/// Parses a polynomial in `t`, `x1`, `x2` over `ctx`.
pub fn parse_bivar(
    src: &str,
    ctx: &FieldCtx,
    s1: Automorphism,
    s2: Automorphism,
) -> Result<BivarOrePoly> {
    if s1.field_degree() != ctx.degree() || s2.field_degree() != ctx.degree() {
        return Err(Error::ContextMismatch);
    }
    let toks = lex(src)?;
    let alg = BivarAlgebra { ctx, s1, s2 };
    let mut ps = Parser {
        toks: &toks,
        pos: 0,
        alg: &alg,
    };
    let v = ps.expr()?;
    ps.finish()?;
    Ok(v)
}

/// Parses a polynomial in `t` and `x1` alone.
pub fn parse_uni(src: &str, ctx: &FieldCtx, sigma: Automorphism) -> Result<OrePoly> {
    let v = parse_bivar(src, ctx, sigma, Automorphism::identity(ctx))?;
    if v.degree_x2().unwrap_or(0) > 0 {
        return Err(parse_error(1, 1, "x2 is not allowed here"));
    }
    Ok(v.coeff_x2(0))
}

/// Parses a field element written in `t`.
pub fn parse_elem(src: &str, ctx: &FieldCtx) -> Result<FieldElem> {
    let id = Automorphism::identity(ctx);
    let v = parse_uni(src, ctx, id)?;
    if v.degree().unwrap_or(0) > 0 {
        return Err(parse_error(1, 1, "x1 is not allowed here"));
    }
    Ok(v.coeff(0))
}
