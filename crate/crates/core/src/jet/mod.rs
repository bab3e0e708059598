//! Truncated Taylor arithmetic.
//!
//! A [`Jet`] of order `K` stores the Taylor coefficients `f⁽ⁱ⁾(u₀)/i!` for
//! `i = 0..=K`. Arithmetic on jets is arithmetic on the underlying functions,
//! truncated at order `K`, so composing jets through a formula yields every
//! derivative of the formula up to `K` without symbolic work.
//!
//! Binary operations between jets of different orders truncate to the smaller
//! order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::tolerance::ToleranceSpec;

mod scaled;

pub use scaled::ScaledJet;

/// Order used throughout the crate: profile-curve derivatives up to the
/// fifth plus one guard order.
pub const DEFAULT_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("division by a jet whose value {lead} is zero within tolerance")]
    DivisionBySingularJet { lead: f64 },
    #[error("{op} is undefined at {value}")]
    Domain { op: &'static str, value: f64 },
}

#[derive(Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// Builds a jet from Taylor coefficients (not raw derivatives).
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet { coeffs }
    }

    pub fn constant(c: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = c;
        Jet { coeffs }
    }

    /// The identity function `u ↦ u` expanded at `u0`.
    pub fn variable(u0: f64, order: usize) -> Self {
        assert!(order >= 1, "a variable jet needs order >= 1");
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = u0;
        coeffs[1] = 1.0;
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Taylor coefficient `i`; zero beyond the order.
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    /// The raw derivative `f⁽ⁱ⁾(u₀) = i! · coeffs[i]`.
    ///
    /// Panics if `i` exceeds the order.
    pub fn derivative(&self, i: usize) -> f64 {
        assert!(i <= self.order(), "derivative {i} exceeds jet order {}", self.order());
        factorial(i) * self.coeffs[i]
    }

    /// Jet of `f'`, one order shorter. An order-0 jet differentiates to zero.
    pub fn deriv(&self) -> Jet {
        if self.order() == 0 {
            return Jet::constant(0.0, 0);
        }
        Jet {
            coeffs: (1..self.coeffs.len()).map(|i| i as f64 * self.coeffs[i]).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Jet {
        let n = (order + 1).min(self.coeffs.len());
        Jet {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| s * c).collect(),
        }
    }

    /// Coefficientwise absolute values.
    pub fn abs_coeffs(&self) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c.abs()).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    fn zip_with(&self, other: &Jet, f: impl Fn(f64, f64) -> f64) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    fn cauchy(&self, other: &Jet) -> Jet {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
            .collect();
        Jet { coeffs }
    }

    /// Quotient, rejecting divisors whose value is zero within `tol.abs`.
    pub fn try_div(&self, other: &Jet) -> Result<Jet, JetError> {
        self.try_div_with(other, &ToleranceSpec::default())
    }

    pub fn try_div_with(&self, other: &Jet, tol: &ToleranceSpec) -> Result<Jet, JetError> {
        let lead = other.coeffs[0];
        if lead.abs() <= tol.abs {
            return Err(JetError::DivisionBySingularJet { lead });
        }
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut q = Vec::with_capacity(n);
        for k in 0..n {
            let acc: f64 = (1..=k).map(|j| other.coeffs[j] * q[k - j]).sum();
            q.push((self.coeffs[k] - acc) / lead);
        }
        Ok(Jet { coeffs: q })
    }

    pub fn recip(&self) -> Result<Jet, JetError> {
        Jet::constant(1.0, self.order()).try_div(self)
    }

    pub fn exp(&self) -> Jet {
        let f = &self.coeffs;
        let mut e = Vec::with_capacity(f.len());
        e.push(f[0].exp());
        for k in 1..f.len() {
            let s: f64 = (1..=k).map(|j| j as f64 * f[j] * e[k - j]).sum();
            e.push(s / k as f64);
        }
        Jet { coeffs: e }
    }

    pub fn ln(&self) -> Result<Jet, JetError> {
        let f = &self.coeffs;
        if f[0] <= 0.0 {
            return Err(JetError::Domain { op: "ln", value: f[0] });
        }
        let mut g = Vec::with_capacity(f.len());
        g.push(f[0].ln());
        for k in 1..f.len() {
            let s: f64 = (1..k).map(|j| j as f64 * g[j] * f[k - j]).sum();
            g.push((f[k] - s / k as f64) / f[0]);
        }
        Ok(Jet { coeffs: g })
    }

    /// Joint recurrence for (sin f, cos f).
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let f = &self.coeffs;
        let mut s = vec![f[0].sin()];
        let mut c = vec![f[0].cos()];
        for k in 1..f.len() {
            let mut sk = 0.0;
            let mut ck = 0.0;
            for j in 1..=k {
                sk += j as f64 * f[j] * c[k - j];
                ck -= j as f64 * f[j] * s[k - j];
            }
            s.push(sk / k as f64);
            c.push(ck / k as f64);
        }
        (Jet { coeffs: s }, Jet { coeffs: c })
    }

    /// Joint recurrence for (sinh f, cosh f).
    pub fn sinh_cosh(&self) -> (Jet, Jet) {
        let f = &self.coeffs;
        let mut s = vec![f[0].sinh()];
        let mut c = vec![f[0].cosh()];
        for k in 1..f.len() {
            let mut sk = 0.0;
            let mut ck = 0.0;
            for j in 1..=k {
                sk += j as f64 * f[j] * c[k - j];
                ck += j as f64 * f[j] * s[k - j];
            }
            s.push(sk / k as f64);
            c.push(ck / k as f64);
        }
        (Jet { coeffs: s }, Jet { coeffs: c })
    }

    pub fn sin(&self) -> Jet {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet {
        self.sin_cos().1
    }

    pub fn sinh(&self) -> Jet {
        self.sinh_cosh().0
    }

    pub fn cosh(&self) -> Jet {
        self.sinh_cosh().1
    }

    pub fn tanh(&self) -> Jet {
        let (s, c) = self.sinh_cosh();
        // cosh >= 1
        s.try_div(&c).expect("cosh never vanishes")
    }

    pub fn sqrt(&self) -> Result<Jet, JetError> {
        let f = &self.coeffs;
        if f[0] <= 0.0 {
            return Err(JetError::Domain {
                op: "sqrt",
                value: f[0],
            });
        }
        let mut r = Vec::with_capacity(f.len());
        r.push(f[0].sqrt());
        for k in 1..f.len() {
            let s: f64 = (1..k).map(|j| r[j] * r[k - j]).sum();
            r.push((f[k] - s) / (2.0 * r[0]));
        }
        Ok(Jet { coeffs: r })
    }

    /// `|f|`, defined only away from zero.
    pub fn abs(&self, tol: &ToleranceSpec) -> Result<Jet, JetError> {
        let v = self.coeffs[0];
        if v.abs() <= tol.abs {
            return Err(JetError::Domain { op: "abs", value: v });
        }
        Ok(if v < 0.0 { -self } else { self.clone() })
    }

    /// Integer power by repeated squaring; negative exponents need an
    /// invertible base.
    pub fn powi(&self, n: i64) -> Result<Jet, JetError> {
        let mut result = Jet::constant(1.0, self.order());
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
            result.recip()
        } else {
            Ok(result)
        }
    }

    /// Real power `exp(p · ln f)`; integral `p` is routed through [`Jet::powi`].
    pub fn powf(&self, p: f64) -> Result<Jet, JetError> {
        if p.fract() == 0.0 && p.abs() <= i64::MAX as f64 {
            return self.powi(p as i64);
        }
        if self.coeffs[0] <= 0.0 {
            return Err(JetError::Domain {
                op: "pow with non-integer exponent",
                value: self.coeffs[0],
            });
        }
        Ok(self.ln()?.scale(p).exp())
    }

    /// General power `exp(g · ln f)` for a non-constant exponent.
    pub fn pow_jet(&self, exponent: &Jet) -> Result<Jet, JetError> {
        if exponent.coeffs[1..].iter().all(|c| *c == 0.0) {
            return self.powf(exponent.value());
        }
        if self.coeffs[0] <= 0.0 {
            return Err(JetError::Domain {
                op: "pow with variable exponent",
                value: self.coeffs[0],
            });
        }
        Ok((exponent * &self.ln()?).exp())
    }
}

pub(crate) fn factorial(i: usize) -> f64 {
    (1..=i).fold(1.0, |acc, k| acc * k as f64)
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet{:?}", self.coeffs)
    }
}

macro_rules! jet_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Jet> for &Jet {
            type Output = Jet;
            fn $method(self, rhs: &Jet) -> Jet {
                let f: fn(&Jet, &Jet) -> Jet = $body;
                f(self, rhs)
            }
        }
        impl $trait<Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: &Jet) -> Jet {
                (&self).$method(rhs)
            }
        }
        impl $trait<Jet> for &Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                self.$method(&rhs)
            }
        }
    };
}

jet_binop!(Add, add, |a, b| a.zip_with(b, |x, y| x + y));
jet_binop!(Sub, sub, |a, b| a.zip_with(b, |x, y| x - y));
jet_binop!(Mul, mul, |a, b| a.cauchy(b));

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul<&Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        rhs.scale(self)
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        rhs.scale(self)
    }
}

impl Add<f64> for &Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        let mut out = self.clone();
        out.coeffs[0] += rhs;
        out
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.coeffs[0] += rhs;
        self
    }
}
