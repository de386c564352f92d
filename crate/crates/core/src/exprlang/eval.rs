use super::ast::{BinOp, Expr, Func};
use super::ParamSet;
use crate::algebra::{Jet, Vec4};
use crate::error::{Error, Result};
use num_complex::Complex64 as C64;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Values the evaluator can compute with: plain complex numbers, or jets.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn constant(v: C64) -> Self;
    fn coordinate(i: usize, x: f64) -> Self;
    fn value(&self) -> C64;
    fn has_gradient(&self) -> bool;
    fn apply(self, f: Func) -> Self;
    fn powi(self, n: i32) -> Self;
    fn pow(self, e: Self) -> Self;
}

impl Scalar for C64 {
    fn constant(v: C64) -> Self {
        v
    }
    fn coordinate(_: usize, x: f64) -> Self {
        C64::new(x, 0.0)
    }
    fn value(&self) -> C64 {
        *self
    }
    fn has_gradient(&self) -> bool {
        false
    }
    fn apply(self, f: Func) -> Self {
        match f {
            Func::Sin => self.sin(),
            Func::Cos => self.cos(),
            Func::Tan => self.tan(),
            Func::Cot => self.cos() / self.sin(),
            Func::Exp => self.exp(),
            Func::Ln => self.ln(),
            Func::Sqrt => self.sqrt(),
            Func::Abs => C64::new(self.norm(), 0.0),
        }
    }
    fn powi(self, n: i32) -> Self {
        C64::powi(&self, n)
    }
    fn pow(self, e: Self) -> Self {
        self.powc(e)
    }
}

impl Scalar for Jet {
    fn constant(v: C64) -> Self {
        Jet::constant(v)
    }
    fn coordinate(i: usize, x: f64) -> Self {
        Jet::variable(i, x)
    }
    fn value(&self) -> C64 {
        self.value
    }
    fn has_gradient(&self) -> bool {
        Jet::has_gradient(self)
    }
    fn apply(self, f: Func) -> Self {
        match f {
            Func::Sin => self.sin(),
            Func::Cos => self.cos(),
            Func::Tan => self.tan(),
            Func::Cot => self.cot(),
            Func::Exp => self.exp(),
            Func::Ln => self.ln(),
            Func::Sqrt => self.sqrt(),
            Func::Abs => {
                let n = self.value.norm();
                let mut grad = [C64::new(0.0, 0.0); 4];
                for (k, g) in grad.iter_mut().enumerate() {
                    *g = C64::new((self.value.conj() * self.grad[k]).re / n, 0.0);
                }
                Jet {
                    value: C64::new(n, 0.0),
                    grad,
                }
            }
        }
    }
    fn powi(self, n: i32) -> Self {
        Jet::powi(self, n)
    }
    fn pow(self, e: Self) -> Self {
        Jet::pow(self, e)
    }
}

const NEAR_ZERO: f64 = 1e-14;

fn is_real(z: C64) -> bool {
    z.im.abs() <= 1e-14 * z.re.abs().max(1.0)
}

struct Ctx<'a> {
    point: &'a Vec4,
    params: &'a ParamSet,
}

impl Ctx<'_> {
    fn domain(&self, e: &Expr, reason: &str) -> Error {
        Error::Domain {
            expr: e.to_string(),
            point: *self.point,
            reason: reason.to_string(),
        }
    }

    fn eval<S: Scalar>(&self, e: &Expr) -> Result<S> {
        let out: S = match e {
            Expr::Num(x) => S::constant(C64::new(*x, 0.0)),
            Expr::Pi => S::constant(C64::new(std::f64::consts::PI, 0.0)),
            Expr::ImagUnit => S::constant(C64::new(0.0, 1.0)),
            Expr::Coord(i) => S::coordinate(*i, self.point[*i]),
            Expr::Ident(n) => match self.params.get(n) {
                Some(v) => S::constant(C64::new(v, 0.0)),
                None => return Err(Error::UnknownIdentifier(n.clone())),
            },
            Expr::Neg(a) => -self.eval::<S>(a)?,
            Expr::Binary(op, a, b) => {
                let x = self.eval::<S>(a)?;
                let y = self.eval::<S>(b)?;
                match op {
                    BinOp::Add => x + y,
                    BinOp::Sub => x - y,
                    BinOp::Mul => x * y,
                    BinOp::Div => {
                        if y.value().norm() < NEAR_ZERO {
                            return Err(self.domain(e, "division by zero"));
                        }
                        x / y
                    }
                    BinOp::Pow => self.pow(e, x, y)?,
                }
            }
            Expr::Call(f, a) => {
                let x = self.eval::<S>(a)?;
                self.check_call(e, *f, x)?;
                x.apply(*f)
            }
        };
        let v = out.value();
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(self.domain(e, "non-finite value"));
        }
        Ok(out)
    }

    fn pow<S: Scalar>(&self, e: &Expr, x: S, y: S) -> Result<S> {
        let xv = x.value();
        let yv = y.value();
        if !y.has_gradient() && is_real(yv) && yv.re.fract() == 0.0 && yv.re.abs() <= i32::MAX as f64 {
            let n = yv.re as i32;
            if n < 0 && xv.norm() < NEAR_ZERO {
                return Err(self.domain(e, "zero raised to a negative power"));
            }
            return Ok(x.powi(n));
        }
        if xv.norm() < NEAR_ZERO {
            if !y.has_gradient() && is_real(yv) && yv.re > 0.0 {
                if yv.re < 1.0 && x.has_gradient() {
                    return Err(self.domain(e, "derivative singular at zero base"));
                }
                return Ok(x * S::constant(C64::new(0.0, 0.0)));
            }
            return Err(self.domain(e, "zero base with non-positive or variable exponent"));
        }
        if is_real(xv) && xv.re < 0.0 && is_real(yv) {
            return Err(self.domain(e, "negative base with non-integer exponent"));
        }
        Ok(x.pow(y))
    }

    fn check_call<S: Scalar>(&self, e: &Expr, f: Func, x: S) -> Result<()> {
        let v = x.value();
        match f {
            Func::Sqrt => {
                if is_real(v) && v.re < 0.0 {
                    return Err(self.domain(e, "square root of a negative number"));
                }
                if v.norm() < NEAR_ZERO && x.has_gradient() {
                    return Err(self.domain(e, "derivative of sqrt is singular at zero"));
                }
            }
            Func::Ln => {
                if v.norm() < NEAR_ZERO || (is_real(v) && v.re < 0.0) {
                    return Err(self.domain(e, "logarithm of a non-positive number"));
                }
            }
            Func::Cot => {
                if v.sin().norm() < NEAR_ZERO {
                    return Err(self.domain(e, "cot pole"));
                }
            }
            Func::Tan => {
                if v.cos().norm() < NEAR_ZERO {
                    return Err(self.domain(e, "tan pole"));
                }
            }
            Func::Abs if v.norm() < NEAR_ZERO && x.has_gradient() => {
                return Err(self.domain(e, "derivative of abs is singular at zero"));
            }
            _ => {}
        }
        Ok(())
    }
}

/// Evaluate with exact first derivatives.
pub fn eval_jet(e: &Expr, point: &Vec4, params: &ParamSet) -> Result<Jet> {
    Ctx { point, params }.eval::<Jet>(e)
}

/// Evaluate the value only.
pub fn eval_value(e: &Expr, point: &Vec4, params: &ParamSet) -> Result<C64> {
    Ctx { point, params }.eval::<C64>(e)
}

/// Value plus central-difference partials with one Richardson step.
pub fn eval_fd(e: &Expr, point: &Vec4, params: &ParamSet, h: f64) -> Result<Jet> {
    let value = eval_value(e, point, params)?;
    let mut grad = [C64::new(0.0, 0.0); 4];
    for (k, g) in grad.iter_mut().enumerate() {
        let d = |step: f64| -> Result<C64> {
            let mut p = *point;
            let mut m = *point;
            p[k] += step;
            m[k] -= step;
            Ok((eval_value(e, &p, params)? - eval_value(e, &m, params)?) / (2.0 * step))
        };
        *g = (d(h / 2.0)? * 4.0 - d(h)?) / 3.0;
    }
    Ok(Jet { value, grad })
}
