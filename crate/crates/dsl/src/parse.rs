use std::fmt;

use num_bigint::BigUint;

use crate::ast::Expr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigUint),
    Ident(String),
    Sym(char),
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

pub(crate) struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

pub(crate) fn error_at(text: &str, offset: usize, expected: &[&str], message: String) -> ParseError {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    ParseError { offset, line, column, expected: expected.iter().map(|s| s.to_string()).collect(), message }
}

fn lex(text: &str, start: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = text.as_bytes();
    let mut i = start;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            while i < b.len() && b[i] != b'\n' {
                i += 1;
            }
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if i < b.len() && (b[i].is_ascii_alphabetic() || b[i] == b'_') {
                return Err(error_at(text, i, &["operator"], "implicit multiplication is not allowed; write `*`".into()));
            }
            out.push((Tok::Num(text[s..i].parse().unwrap()), s));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[s..i].to_string()), s));
        } else if "+-*/^()[]{};,".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(error_at(text, i, &[], format!("unexpected character `{ch}`")));
        }
    }
    out.push((Tok::End, b.len()));
    Ok(out)
}

const PRIMARY: &[&str] = &["number", "identifier", "`(`", "`-`"];

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &'a str, start: usize) -> Result<Self, ParseError> {
        Ok(Parser { text, toks: lex(text, start)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(error_at(self.text, self.offset(), expected, format!("unexpected {}", describe(self.peek()))))
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail(&["operator", "end of input"])
        }
    }

    pub(crate) fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let k = self.exponent()?;
        if *self.peek() == Tok::Sym('^') {
            return Err(error_at(self.text, self.offset(), &[], "chained powers need parentheses".into()));
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        match self.peek().clone() {
            Tok::Num(n) => {
                let v: i64 = i64::try_from(n).map_err(|_| error_at(self.text, self.offset(), &[], "integer too large".into()))?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.eat('(') {
            let k = self.int()?;
            self.expect(')')?;
            Ok(k)
        } else {
            self.int()
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => self.fail(&["identifier"]),
        }
    }

    fn pair(&mut self) -> Result<(Box<Expr>, Box<Expr>), ParseError> {
        self.expect('{')?;
        let a = self.expr()?;
        self.expect(';')?;
        let b = self.expr()?;
        self.expect('}')?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(id) => {
                let next = self.peek2().clone();
                let sub = |p: &str| id.strip_prefix(p).filter(|v| !v.is_empty()).map(str::to_string);
                if let (Some(v), Tok::Sym('[')) = (sub("E_"), &next) {
                    self.pos += 2;
                    let e = self.expr()?;
                    self.expect(']')?;
                    return Ok(Expr::E(v, Box::new(e)));
                }
                if let (Some(v), Tok::Sym('(')) = (sub("diff_"), &next) {
                    self.pos += 2;
                    let e = self.expr()?;
                    self.expect(')')?;
                    return Ok(Expr::Diff(v, Box::new(e)));
                }
                if next == Tok::Sym('{') {
                    for (p, make) in [
                        ("odot_", Expr::Join as fn(String, Box<Expr>, Box<Expr>) -> Expr),
                        ("had_", Expr::Hadamard),
                        ("subst_", Expr::Subst),
                    ] {
                        if let Some(v) = sub(p) {
                            self.pos += 1;
                            let (a, b) = self.pair()?;
                            return Ok(make(v, a, b));
                        }
                    }
                }
                self.pos += 1;
                if next != Tok::Sym('(') {
                    return Ok(Expr::Ident(id));
                }
                self.pos += 1;
                match id.as_str() {
                    "sqrt" => {
                        let e = self.expr()?;
                        self.expect(')')?;
                        Ok(Expr::Sqrt(Box::new(e)))
                    }
                    "geomsum" => {
                        let e = self.expr()?;
                        self.expect(',')?;
                        let lo = self.int()?;
                        self.expect(',')?;
                        let hi = self.int()?;
                        self.expect(')')?;
                        Ok(Expr::GeomSum(Box::new(e), lo, hi))
                    }
                    _ => {
                        let mut args = vec![self.name()?];
                        while self.eat(',') {
                            args.push(self.name()?);
                        }
                        self.expect(')')?;
                        Ok(Expr::Call(id, args))
                    }
                }
            }
            _ => self.fail(PRIMARY),
        }
    }
}

/// Parses a bare expression (no preamble).
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text, 0)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}
