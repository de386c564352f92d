use crate::error::{Error, Result};
use crate::exprlang::ParamSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Cot,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    pub const ALL: [Func; 8] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Cot,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Cot => "cot",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Pi,
    ImagUnit,
    Coord(usize),
    Ident(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn num(x: f64) -> Self {
        Expr::Num(x)
    }

    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Self {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn call(f: Func, a: Expr) -> Self {
        Expr::Call(f, Box::new(a))
    }

    pub fn neg(a: Expr) -> Self {
        Expr::Neg(Box::new(a))
    }

    /// Replace chart coordinate names by `Coord` and check that every other
    /// identifier is a known parameter.
    pub fn bind(self, chart: &[String; 4], params: &ParamSet) -> Result<Expr> {
        Ok(match self {
            Expr::Ident(name) => {
                if let Some(i) = chart.iter().position(|c| *c == name) {
                    Expr::Coord(i)
                } else if params.get(&name).is_some() {
                    Expr::Ident(name)
                } else {
                    return Err(Error::UnknownIdentifier(name));
                }
            }
            Expr::Neg(a) => Expr::neg(a.bind(chart, params)?),
            Expr::Binary(op, a, b) => Expr::bin(op, a.bind(chart, params)?, b.bind(chart, params)?),
            Expr::Call(f, a) => Expr::call(f, a.bind(chart, params)?),
            other => other,
        })
    }

    pub fn identifiers(&self, out: &mut Vec<String>) {
        match self {
            Expr::Ident(n) => out.push(n.clone()),
            Expr::Neg(a) | Expr::Call(_, a) => a.identifiers(out),
            Expr::Binary(_, a, b) => {
                a.identifiers(out);
                b.identifiers(out);
            }
            _ => {}
        }
    }
}

impl fmt::Display for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        })
    }
}

/// Fully parenthesized form; `parse(e.to_string())` gives back `e`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) if *x < 0.0 => write!(f, "(-{})", -x),
            Expr::Num(x) => write!(f, "{x}"),
            Expr::Pi => f.write_str("pi"),
            Expr::ImagUnit => f.write_str("i"),
            Expr::Coord(i) => write!(f, "x{i}"),
            Expr::Ident(n) => f.write_str(n),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Binary(op, a, b) => write!(f, "({a} {op} {b})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}
