//! A small expression language for tetrad and gauge entries.
//!
//! Grammar, loosest binding first: `+ -`, then `* /`, then unary `-`, then
//! right-associative `^` (so `-x^2` is `-(x^2)` and `2^-1` is allowed).
//! Atoms are numbers, identifiers, `pi`, the imaginary unit `i`, and calls
//! `sin cos tan cot exp ln sqrt abs`. Coordinates are `x0..x3` or the chart
//! names supplied at bind time.
//!
//! ```
//! use tetrad::exprlang::{parse, eval_jet, ParamSet};
//!
//! let e = parse("x1*sin(x2)").unwrap();
//! let j = eval_jet(&e, &[0.0, 2.0, 0.5, 0.0], &ParamSet::default()).unwrap();
//! assert!((j.value.re - 2.0 * 0.5f64.sin()).abs() < 1e-15);
//! assert!((j.grad[2].re - 2.0 * 0.5f64.cos()).abs() < 1e-15);
//! ```

mod ast;
mod eval;
mod lexer;
mod params;
mod parser;

pub use ast::{BinOp, Expr, Func};
pub use eval::{eval_fd, eval_jet, eval_value, Scalar};
pub use params::ParamSet;
pub use parser::parse;

/// Parse and resolve chart coordinate names and parameters in one step.
pub fn parse_bound(src: &str, chart: &[String; 4], params: &ParamSet) -> crate::Result<Expr> {
    parse(src)?.bind(chart, params)
}

/// Evaluate a constant expression such as `pi/3` to a real number.
pub fn eval_constant(src: &str) -> crate::Result<f64> {
    let e = parse(src)?;
    let v = eval_value(&e, &[0.0; 4], &ParamSet::default())?;
    if v.im != 0.0 {
        return Err(crate::Error::Config(format!("`{src}` is not real")));
    }
    Ok(v.re)
}
