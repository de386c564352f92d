use num_complex::Complex64 as C64;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// First-order dual number over four coordinates: a complex value and its
/// four partial derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: C64,
    pub grad: [C64; 4],
}

const Z: C64 = C64 { re: 0.0, im: 0.0 };

impl Jet {
    pub fn constant(value: C64) -> Self {
        Jet { value, grad: [Z; 4] }
    }

    pub fn real(x: f64) -> Self {
        Self::constant(C64::new(x, 0.0))
    }

    /// The coordinate `x^i` evaluated at `x`.
    pub fn variable(i: usize, x: f64) -> Self {
        let mut grad = [Z; 4];
        grad[i] = C64::new(1.0, 0.0);
        Jet { value: C64::new(x, 0.0), grad }
    }

    pub fn has_gradient(&self) -> bool {
        self.grad.iter().any(|g| g.norm() != 0.0)
    }

    /// Apply `f` with derivative `df` (both evaluated at the value).
    pub fn chain(self, f: C64, df: C64) -> Self {
        Jet {
            value: f,
            grad: self.grad.map(|g| df * g),
        }
    }

    pub fn scale(self, s: C64) -> Self {
        Jet {
            value: self.value * s,
            grad: self.grad.map(|g| g * s),
        }
    }

    pub fn conj(self) -> Self {
        Jet {
            value: self.value.conj(),
            grad: self.grad.map(|g| g.conj()),
        }
    }

    pub fn recip(self) -> Self {
        let inv = self.value.inv();
        self.chain(inv, -inv * inv)
    }

    pub fn sin(self) -> Self {
        self.chain(self.value.sin(), self.value.cos())
    }

    pub fn cos(self) -> Self {
        self.chain(self.value.cos(), -self.value.sin())
    }

    pub fn tan(self) -> Self {
        let t = self.value.tan();
        self.chain(t, C64::new(1.0, 0.0) + t * t)
    }

    pub fn cot(self) -> Self {
        let t = self.value.cos() / self.value.sin();
        self.chain(t, -(C64::new(1.0, 0.0) + t * t))
    }

    pub fn exp(self) -> Self {
        let e = self.value.exp();
        self.chain(e, e)
    }

    pub fn ln(self) -> Self {
        self.chain(self.value.ln(), self.value.inv())
    }

    pub fn sqrt(self) -> Self {
        let s = self.value.sqrt();
        self.chain(s, 0.5 / s)
    }

    /// Integer power, valid for any base including zero and negative reals.
    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Jet::real(1.0);
        }
        let v = self.value.powi(n);
        let dv = self.value.powi(n - 1) * n as f64;
        self.chain(v, dv)
    }

    /// Principal-branch power with a jet exponent.
    pub fn pow(self, e: Jet) -> Self {
        let v = self.value.powc(e.value);
        let ln = self.value.ln();
        let dbase = e.value * self.value.powc(e.value - 1.0);
        let mut grad = [Z; 4];
        for (k, g) in grad.iter_mut().enumerate() {
            *g = dbase * self.grad[k] + v * ln * e.grad[k];
        }
        Jet { value: v, grad }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut grad = self.grad;
        for k in 0..4 {
            grad[k] += o.grad[k];
        }
        Jet { value: self.value + o.value, grad }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            value: -self.value,
            grad: self.grad.map(|g| -g),
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut grad = [Z; 4];
        for (k, g) in grad.iter_mut().enumerate() {
            *g = self.grad[k] * o.value + self.value * o.grad[k];
        }
        Jet { value: self.value * o.value, grad }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        self * o.recip()
    }
}

impl Mul<C64> for Jet {
    type Output = Jet;
    fn mul(self, s: C64) -> Jet {
        self.scale(s)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        self.scale(C64::new(s, 0.0))
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, s: f64) -> Jet {
        Jet {
            value: self.value + s,
            grad: self.grad,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(f: impl Fn(f64) -> C64, x: f64) -> C64 {
        let h = 1e-5;
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    #[test]
    fn derivatives_match_central_differences() {
        let x0 = 0.7;
        let cases: Vec<(Box<dyn Fn(Jet) -> Jet>, Box<dyn Fn(C64) -> C64>)> = vec![
            (Box::new(|j: Jet| j.sin() * j.exp()), Box::new(|z: C64| z.sin() * z.exp())),
            (Box::new(|j: Jet| j.cot()), Box::new(|z: C64| z.cos() / z.sin())),
            (Box::new(|j: Jet| j.sqrt().ln()), Box::new(|z: C64| z.sqrt().ln())),
            (Box::new(|j: Jet| j.powi(-3)), Box::new(|z: C64| z.powi(-3))),
            (
                Box::new(|j: Jet| j.pow(j.tan())),
                Box::new(|z: C64| z.powc(z.tan())),
            ),
            (Box::new(|j: Jet| j / (j + 2.0)), Box::new(|z: C64| z / (z + 2.0))),
        ];
        for (jf, vf) in cases {
            let j = jf(Jet::variable(1, x0));
            let d = fd(|x| vf(C64::new(x, 0.0)), x0);
            assert!((j.grad[1] - d).norm() < 1e-8, "{:?} vs {:?}", j.grad[1], d);
            assert_eq!(j.grad[0], Z);
        }
    }

    #[test]
    fn powi_at_zero_and_negative_base() {
        let j = Jet::variable(0, -2.0).powi(3);
        assert_eq!(j.value.re, -8.0);
        assert_eq!(j.grad[0].re, 12.0);
        let z = Jet::variable(0, 0.0).powi(2);
        assert_eq!(z.grad[0].re, 0.0);
    }
}
