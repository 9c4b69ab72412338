//! Integer expressions in the family parameters `p` and `n`.
//!
//! Grammar: `+ - * / ^`, parentheses, integer literals, the variables `p`
//! and `n`, and implicit multiplication (`2p`, `2(2p-1)`, `p(p+1)`).
//! Division must be exact.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Lit(i64),
    P,
    N,
    Neg(Box<Node>),
    Bin(Op, Box<Node>, Box<Node>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// A parsed expression that remembers its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    text: String,
    node: Node,
}

impl Expr {
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            src: text,
        };
        let node = parser.expr()?;
        if parser.pos != tokens.len() {
            return Err(Error::malformed(text, "trailing input"));
        }
        Ok(Expr {
            text: text.split_whitespace().collect(),
            node,
        })
    }

    pub fn constant(v: i64) -> Self {
        Expr {
            text: v.to_string(),
            node: Node::Lit(v),
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn uses_p(&self) -> bool {
        uses(&self.node, &Node::P)
    }

    pub fn uses_n(&self) -> bool {
        uses(&self.node, &Node::N)
    }

    pub fn eval(&self, p: i64, n: i64) -> Result<i64> {
        eval(&self.node, p, n).ok_or_else(|| {
            Error::malformed(
                &self.text,
                format!("not an exact integer at p = {p}, n = {n}"),
            )
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn uses(node: &Node, var: &Node) -> bool {
    match node {
        Node::Lit(_) => false,
        Node::P | Node::N => node == var,
        Node::Neg(a) => uses(a, var),
        Node::Bin(_, a, b) => uses(a, var) || uses(b, var),
    }
}

fn eval(node: &Node, p: i64, n: i64) -> Option<i64> {
    Some(match node {
        Node::Lit(v) => *v,
        Node::P => p,
        Node::N => n,
        Node::Neg(a) => eval(a, p, n)?.checked_neg()?,
        Node::Bin(op, a, b) => {
            let (x, y) = (eval(a, p, n)?, eval(b, p, n)?);
            match op {
                Op::Add => x.checked_add(y)?,
                Op::Sub => x.checked_sub(y)?,
                Op::Mul => x.checked_mul(y)?,
                Op::Div => {
                    if y == 0 || x % y != 0 {
                        return None;
                    }
                    x / y
                }
                Op::Pow => x.checked_pow(u32::try_from(y).ok()?)?,
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    P,
    N,
    Op(char),
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(i64::from(d)))
                        .ok_or_else(|| Error::malformed(text, "literal overflows"))?;
                    chars.next();
                }
                out.push(Tok::Num(v));
            }
            'p' => {
                chars.next();
                out.push(Tok::P);
            }
            'n' => {
                chars.next();
                out.push(Tok::N);
            }
            '+' | '-' | '*' | '/' | '^' => {
                chars.next();
                out.push(Tok::Op(c));
            }
            '(' => {
                chars.next();
                out.push(Tok::Open);
            }
            ')' => {
                chars.next();
                out.push(Tok::Close);
            }
            other => return Err(Error::malformed(text, format!("unexpected `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.tokens.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::malformed(self.src, msg)
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            let op = if c == '+' { Op::Add } else { Op::Sub };
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    Op::Mul
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    Op::Div
                }
                Some(Tok::P | Tok::N | Tok::Open | Tok::Num(_)) => Op::Mul,
                _ => return Ok(lhs),
            };
            let rhs = self.power()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(Node::Bin(Op::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        let tok = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Node::Lit(v)),
            Tok::P => Ok(Node::P),
            Tok::N => Ok(Node::N),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(Tok::Close) {
                    return Err(self.err("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected operator `{c}`"))),
            Tok::Close => Err(self.err("unexpected `)`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, p: i64, n: i64) -> i64 {
        Expr::parse(s).unwrap().eval(p, n).unwrap()
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(ev("2p", 3, 0), 6);
        assert_eq!(ev("2(2p-1)", 3, 0), 10);
        assert_eq!(ev("p(p+1)/2", 4, 0), 10);
        assert_eq!(ev("(2p+n)^2-1", 2, 1), 24);
        assert_eq!(ev("4p+2n-7", 5, 3), 19);
        assert_eq!(ev("-p+3", 2, 0), 1);
        assert_eq!(ev("2^3p", 1, 0), 8);
    }

    #[test]
    fn inexact_division_is_an_error() {
        assert!(Expr::parse("p/2").unwrap().eval(3, 0).is_err());
        assert!(Expr::parse("1/(p-2)").unwrap().eval(2, 0).is_err());
    }

    #[test]
    fn malformed_input() {
        for bad in ["", "2+", "(p", "p)", "x", "2**p"] {
            assert!(Expr::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn variable_usage() {
        let e = Expr::parse("8p+4n-5").unwrap();
        assert!(e.uses_p() && e.uses_n());
        assert!(!Expr::parse("24").unwrap().uses_p());
    }
}
