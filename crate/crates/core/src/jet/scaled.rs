//! Jets that carry a running bound on summand magnitudes.
//!
//! Alongside the Taylor coefficients of `f`, a [`ScaledJet`] keeps a
//! nonnegative jet bounding, coefficient by coefficient, the magnitudes of
//! the terms that were combined to produce each coefficient. The bound feeds
//! [`ToleranceSpec::is_zero`]: a coefficient that came out of a large
//! cancellation is judged against the size of what cancelled, not against its
//! own tiny value.

use std::ops::{Add, Mul, Neg, Sub};

use super::{Jet, JetError};
use crate::tolerance::ToleranceSpec;

#[derive(Clone, Debug, PartialEq)]
pub struct ScaledJet {
    pub value: Jet,
    /// Nonnegative coefficientwise bound on summand magnitudes.
    pub scale: Jet,
}

impl ScaledJet {
    pub fn new(value: Jet, scale: Jet) -> Self {
        ScaledJet { value, scale }
    }

    pub fn constant(c: f64, order: usize) -> Self {
        ScaledJet::new(Jet::constant(c, order), Jet::constant(c.abs(), order))
    }

    pub fn variable(u0: f64, order: usize) -> Self {
        let value = Jet::variable(u0, order);
        let scale = value.abs_coeffs();
        ScaledJet::new(value, scale)
    }

    /// Treats the coefficients of an exact jet as their own scale.
    pub fn exact(value: Jet) -> Self {
        let scale = value.abs_coeffs();
        ScaledJet::new(value, scale)
    }

    pub fn order(&self) -> usize {
        self.value.order().min(self.scale.order())
    }

    pub fn derivative(&self, i: usize) -> f64 {
        self.value.derivative(i)
    }

    pub fn derivative_scale(&self, i: usize) -> f64 {
        self.scale.derivative(i)
    }

    /// Whether the `i`-th derivative is zero under `tol`.
    pub fn derivative_is_zero(&self, i: usize, tol: &ToleranceSpec) -> bool {
        tol.is_zero(self.value.coeff(i), self.scale.coeff(i))
    }

    pub fn deriv(&self) -> ScaledJet {
        ScaledJet::new(self.value.deriv(), self.scale.deriv())
    }

    pub fn truncate(&self, order: usize) -> ScaledJet {
        ScaledJet::new(self.value.truncate(order), self.scale.truncate(order))
    }

    pub fn scale_by(&self, c: f64) -> ScaledJet {
        ScaledJet::new(self.value.scale(c), self.scale.scale(c.abs()))
    }

    /// Scale of `f(g)` from `f(g)` and `f'(g)`: `|f(g)| + |f'(g)| * scale(g)`.
    fn compose(&self, fg: Jet, dfg: &Jet) -> ScaledJet {
        let scale = &fg.abs_coeffs() + &(&dfg.abs_coeffs() * &self.scale);
        ScaledJet::new(fg, scale)
    }

    pub fn try_div_with(&self, other: &ScaledJet, tol: &ToleranceSpec) -> Result<ScaledJet, JetError> {
        let q = self.value.try_div_with(&other.value, tol)?;
        let inv = other.value.recip()?;
        let scale = &(&self.scale + &(&q.abs_coeffs() * &other.scale)) * &inv.abs_coeffs();
        Ok(ScaledJet::new(q, scale))
    }

    pub fn try_div(&self, other: &ScaledJet) -> Result<ScaledJet, JetError> {
        self.try_div_with(other, &ToleranceSpec::default())
    }

    pub fn exp(&self) -> ScaledJet {
        let e = self.value.exp();
        let de = e.clone();
        self.compose(e, &de)
    }

    pub fn ln(&self) -> Result<ScaledJet, JetError> {
        let l = self.value.ln()?;
        let dl = self.value.recip()?;
        Ok(self.compose(l, &dl))
    }

    pub fn sin_cos(&self) -> (ScaledJet, ScaledJet) {
        let (s, c) = self.value.sin_cos();
        let ss = self.compose(s.clone(), &c);
        let cc = self.compose(c, &s);
        (ss, cc)
    }

    pub fn sinh_cosh(&self) -> (ScaledJet, ScaledJet) {
        let (s, c) = self.value.sinh_cosh();
        let ss = self.compose(s.clone(), &c);
        let cc = self.compose(c, &s);
        (ss, cc)
    }

    pub fn sin(&self) -> ScaledJet {
        self.sin_cos().0
    }

    pub fn cos(&self) -> ScaledJet {
        self.sin_cos().1
    }

    pub fn sinh(&self) -> ScaledJet {
        self.sinh_cosh().0
    }

    pub fn cosh(&self) -> ScaledJet {
        self.sinh_cosh().1
    }

    pub fn tanh(&self) -> ScaledJet {
        let t = self.value.tanh();
        let dt = Jet::constant(1.0, t.order()) - &(&t * &t);
        self.compose(t, &dt)
    }

    pub fn sqrt(&self) -> Result<ScaledJet, JetError> {
        let r = self.value.sqrt()?;
        let dr = r.scale(2.0).recip()?;
        Ok(self.compose(r, &dr))
    }

    pub fn abs(&self, tol: &ToleranceSpec) -> Result<ScaledJet, JetError> {
        let a = self.value.abs(tol)?;
        Ok(ScaledJet::new(a, self.scale.clone()))
    }

    pub fn powi(&self, n: i64) -> Result<ScaledJet, JetError> {
        let mut result = ScaledJet::constant(1.0, self.order());
        let mut base = self.clone();
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            ScaledJet::constant(1.0, result.order()).try_div(&result)
        } else {
            Ok(result)
        }
    }

    pub fn pow_jet(&self, exponent: &ScaledJet) -> Result<ScaledJet, JetError> {
        let p = &exponent.value;
        if p.coeffs()[1..].iter().all(|c| *c == 0.0) {
            let pv = p.value();
            if pv.fract() == 0.0 && pv.abs() <= i64::MAX as f64 {
                return self.powi(pv as i64);
            }
            let r = self.value.powf(pv)?;
            let dr = self.value.powf(pv - 1.0)?.scale(pv);
            return Ok(self.compose(r, &dr));
        }
        Ok((exponent * &self.ln()?).exp())
    }
}

impl Add<&ScaledJet> for &ScaledJet {
    type Output = ScaledJet;
    fn add(self, rhs: &ScaledJet) -> ScaledJet {
        ScaledJet::new(&self.value + &rhs.value, &self.scale + &rhs.scale)
    }
}

impl Sub<&ScaledJet> for &ScaledJet {
    type Output = ScaledJet;
    fn sub(self, rhs: &ScaledJet) -> ScaledJet {
        ScaledJet::new(&self.value - &rhs.value, &self.scale + &rhs.scale)
    }
}

impl Mul<&ScaledJet> for &ScaledJet {
    type Output = ScaledJet;
    fn mul(self, rhs: &ScaledJet) -> ScaledJet {
        ScaledJet::new(&self.value * &rhs.value, &self.scale * &rhs.scale)
    }
}

impl Neg for &ScaledJet {
    type Output = ScaledJet;
    fn neg(self) -> ScaledJet {
        ScaledJet::new(-&self.value, self.scale.clone())
    }
}

impl Add for ScaledJet {
    type Output = ScaledJet;
    fn add(self, rhs: ScaledJet) -> ScaledJet {
        &self + &rhs
    }
}

impl Sub for ScaledJet {
    type Output = ScaledJet;
    fn sub(self, rhs: ScaledJet) -> ScaledJet {
        &self - &rhs
    }
}

impl Mul for ScaledJet {
    type Output = ScaledJet;
    fn mul(self, rhs: ScaledJet) -> ScaledJet {
        &self * &rhs
    }
}

impl Neg for ScaledJet {
    type Output = ScaledJet;
    fn neg(self) -> ScaledJet {
        -&self
    }
}
