//! Non-lightlike Legendre curves `(γ, ν)` in the Minkowski plane.
//!
//! A curve is given by four expressions: `γ = (x1, x2)` and `ν = (a, b)`,
//! with `a² - b² = δ ∈ {+1, -1}` constant and `⟨γ', ν⟩ = 0`. The dual
//! vector is `μ = (b, a)`, and the curvature pair is
//! `l = δ⟨ν', μ⟩`, `β = δ⟨γ', μ⟩`, so that `ν' = l μ` and `γ' = β μ`.

use serde::Serialize;
use thiserror::Error;

use crate::expr::{parse, EvalError, Expr, ParseError};
use crate::jet::{Jet, ScaledJet};
use crate::tolerance::ToleranceSpec;

pub const DEFAULT_SAMPLES: usize = 257;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LegendreError {
    #[error("u = {u} lies outside the curve domain [{min}, {max}]")]
    OutsideDomain { u: f64, min: f64, max: f64 },
    #[error("invalid domain [{min}, {max}]: need finite u_min < u_max")]
    BadDomain { min: f64, max: f64 },
    #[error("validation needs at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("component `{component}`: {source}")]
    Parse {
        component: &'static str,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("not a non-lightlike Legendre curve: {0}")]
    Invalid(ValidationFailure),
}

/// The first property found violated during validation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Error)]
#[serde(tag = "kind")]
pub enum ValidationFailure {
    #[error("a² - b² = {value} at u = {u} is not ±1")]
    NotInDelta { u: f64, value: f64 },
    #[error("a² - b² = {value} at u = {u} has the opposite sign to δ = {delta}")]
    NonConstantDelta { u: f64, value: f64, delta: i8 },
    #[error("⟨γ', ν⟩ = {residual} at u = {u}")]
    NotLegendre { u: f64, residual: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub samples: usize,
    /// `δ` read from the first sample, if it lies in Δ there.
    pub delta: Option<i8>,
    pub max_delta_residual: f64,
    pub max_tangency_residual: f64,
    pub delta_ok: bool,
    pub tangency_ok: bool,
    pub failure: Option<ValidationFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Jets of `x1, x2, a, b` at one parameter value.
#[derive(Clone, Debug)]
pub struct CurveJets {
    pub x1: ScaledJet,
    pub x2: ScaledJet,
    pub a: ScaledJet,
    pub b: ScaledJet,
}

/// Jets of the curvature pair `(l, β)`.
#[derive(Clone, Debug)]
pub struct CurvatureJets {
    pub l: ScaledJet,
    pub beta: ScaledJet,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LegendreCurve {
    x1: Expr,
    x2: Expr,
    a: Expr,
    b: Expr,
    domain: [f64; 2],
    delta: i8,
}

impl LegendreCurve {
    /// Parses the four components and validates the curve on its domain.
    pub fn parse(
        x1: &str,
        x2: &str,
        a: &str,
        b: &str,
        domain: [f64; 2],
        tol: &ToleranceSpec,
    ) -> Result<Self, LegendreError> {
        let p = |component, src: &str| parse(src).map_err(|source| LegendreError::Parse { component, source });
        Self::new(p("x1", x1)?, p("x2", x2)?, p("a", a)?, p("b", b)?, domain, tol)
    }

    pub fn new(
        x1: Expr,
        x2: Expr,
        a: Expr,
        b: Expr,
        domain: [f64; 2],
        tol: &ToleranceSpec,
    ) -> Result<Self, LegendreError> {
        let mut curve = Self::new_unchecked(x1, x2, a, b, domain, 1)?;
        let report = curve.validate(DEFAULT_SAMPLES, tol)?;
        if let Some(failure) = report.failure {
            return Err(LegendreError::Invalid(failure));
        }
        curve.delta = report.delta.expect("a passing report carries δ");
        Ok(curve)
    }

    /// Builds a curve with the stated `δ` without sampling it.
    pub fn new_unchecked(
        x1: Expr,
        x2: Expr,
        a: Expr,
        b: Expr,
        domain: [f64; 2],
        delta: i8,
    ) -> Result<Self, LegendreError> {
        let [min, max] = domain;
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(LegendreError::BadDomain { min, max });
        }
        Ok(LegendreCurve {
            x1,
            x2,
            a,
            b,
            domain,
            delta: if delta < 0 { -1 } else { 1 },
        })
    }

    pub fn x1(&self) -> &Expr {
        &self.x1
    }

    pub fn x2(&self) -> &Expr {
        &self.x2
    }

    pub fn a(&self) -> &Expr {
        &self.a
    }

    pub fn b(&self) -> &Expr {
        &self.b
    }

    pub fn domain(&self) -> [f64; 2] {
        self.domain
    }

    pub fn delta(&self) -> i8 {
        self.delta
    }

    pub fn delta_f64(&self) -> f64 {
        f64::from(self.delta)
    }

    pub fn check_domain(&self, u: f64) -> Result<(), LegendreError> {
        let [min, max] = self.domain;
        if (min..=max).contains(&u) {
            Ok(())
        } else {
            Err(LegendreError::OutsideDomain { u, min, max })
        }
    }

    /// Jets of the four components at `u0`.
    pub fn jets(&self, u0: f64, order: usize, tol: &ToleranceSpec) -> Result<CurveJets, LegendreError> {
        self.check_domain(u0)?;
        Ok(CurveJets {
            x1: self.x1.eval_scaled(u0, order, tol)?,
            x2: self.x2.eval_scaled(u0, order, tol)?,
            a: self.a.eval_scaled(u0, order, tol)?,
            b: self.b.eval_scaled(u0, order, tol)?,
        })
    }

    /// Jets of `μ = (b, a)`.
    pub fn mu(&self, u0: f64, order: usize) -> Result<(Jet, Jet), LegendreError> {
        self.check_domain(u0)?;
        Ok((self.b.eval_jet(u0, order)?, self.a.eval_jet(u0, order)?))
    }

    /// Jets of `l` and `β` of the given order; the components are expanded
    /// one order higher.
    pub fn curvature(&self, u0: f64, order: usize, tol: &ToleranceSpec) -> Result<CurvatureJets, LegendreError> {
        let j = self.jets(u0, order + 1, tol)?;
        Ok(curvature_from_jets(&j, self.delta_f64()))
    }

    /// Largest absolute defect in `a' = l b`, `b' = l a`, `x1' = β b`,
    /// `x2' = β a` at `u0`.
    pub fn frenet_residual(&self, u0: f64, tol: &ToleranceSpec) -> Result<f64, LegendreError> {
        let j = self.jets(u0, 1, tol)?;
        let k = curvature_from_jets(&j, self.delta_f64());
        let (l, beta) = (k.l.value.value(), k.beta.value.value());
        let (a, b) = (j.a.value.value(), j.b.value.value());
        let d = |s: &ScaledJet| s.derivative(1);
        Ok([
            d(&j.a) - l * b,
            d(&j.b) - l * a,
            d(&j.x1) - beta * b,
            d(&j.x2) - beta * a,
        ]
        .into_iter()
        .fold(0.0, |m, r| m.max(r.abs())))
    }

    /// Samples `n_samples` uniform grid points and the midpoints between
    /// them, checking Δ-membership with constant sign and tangency.
    pub fn validate(&self, n_samples: usize, tol: &ToleranceSpec) -> Result<ValidationReport, LegendreError> {
        if n_samples < 2 {
            return Err(LegendreError::TooFewSamples(n_samples));
        }
        let [min, max] = self.domain;
        let points = 2 * n_samples - 1;
        let step = (max - min) / (points - 1) as f64;

        let mut report = ValidationReport {
            samples: points,
            delta: None,
            max_delta_residual: 0.0,
            max_tangency_residual: 0.0,
            delta_ok: true,
            tangency_ok: true,
            failure: None,
        };
        let mut sign = 0.0;
        let (mut sign_change, mut off_delta, mut not_tangent) = (None, None, None);
        for k in 0..points {
            let u = if k == points - 1 { max } else { min + k as f64 * step };
            let j = self.jets(u, 1, tol)?;
            let (a, b) = (j.a.value.value(), j.b.value.value());
            let d = a * a - b * b;
            let d_scale = a * a + b * b;
            if k == 0 {
                sign = if d < 0.0 { -1.0 } else { 1.0 };
                if tol.is_zero(d - sign, d_scale) {
                    report.delta = Some(sign as i8);
                }
            }
            let residual = (d - sign).abs();
            report.max_delta_residual = report.max_delta_residual.max(residual);
            if !tol.is_zero(residual, d_scale) {
                report.delta_ok = false;
                if d * sign < 0.0 {
                    sign_change.get_or_insert(ValidationFailure::NonConstantDelta {
                        u,
                        value: d,
                        delta: sign as i8,
                    });
                } else {
                    off_delta.get_or_insert(ValidationFailure::NotInDelta { u, value: d });
                }
            }

            // ⟨γ', ν⟩ = -x1' a + x2' b
            let tangency = -j.x1.derivative(1) * a + j.x2.derivative(1) * b;
            let t_scale = (j.x1.derivative_scale(1) * a).abs() + (j.x2.derivative_scale(1) * b).abs();
            report.max_tangency_residual = report.max_tangency_residual.max(tangency.abs());
            if !tol.is_zero(tangency, t_scale) {
                report.tangency_ok = false;
                not_tangent.get_or_insert(ValidationFailure::NotLegendre { u, residual: tangency });
            }
        }
        report.failure = sign_change.or(off_delta).or(not_tangent);
        Ok(report)
    }
}

/// `l = δ(-a' b + b' a)` and `β = δ(-x1' b + x2' a)`.
pub fn curvature_from_jets(j: &CurveJets, delta: f64) -> CurvatureJets {
    let (da, db) = (j.a.deriv(), j.b.deriv());
    let (dx1, dx2) = (j.x1.deriv(), j.x2.deriv());
    let order = da.order();
    let (a, b) = (j.a.truncate(order), j.b.truncate(order));
    let l = (&(&db * &a) - &(&da * &b)).scale_by(delta);
    let beta = (&(&dx2 * &a) - &(&dx1 * &b)).scale_by(delta);
    CurvatureJets { l, beta }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tol() -> ToleranceSpec {
        ToleranceSpec::default()
    }

    fn spacelike_screw() -> LegendreCurve {
        LegendreCurve::parse(
            "u*cosh(u)-sinh(u)",
            "u*sinh(u)-cosh(u)+1",
            "cosh(u)",
            "sinh(u)",
            [-2.0, 2.0],
            &tol(),
        )
        .unwrap()
    }

    fn timelike_screw() -> LegendreCurve {
        LegendreCurve::parse("u^2/2", "u^3/3", "u/sqrt(1-u^2)", "1/sqrt(1-u^2)", [-0.9, 0.9], &tol()).unwrap()
    }

    #[test]
    fn screw_curves_validate() {
        assert_eq!(spacelike_screw().delta(), 1);
        assert_eq!(timelike_screw().delta(), -1);
        let report = timelike_screw().validate(DEFAULT_SAMPLES, &tol()).unwrap();
        assert!(report.passed());
        assert_eq!(report.samples, 513);
    }

    #[test]
    fn lightlike_normal_rejected() {
        let err = LegendreCurve::parse("u", "u", "1", "1", [0.0, 1.0], &tol()).unwrap_err();
        assert!(matches!(
            err,
            LegendreError::Invalid(ValidationFailure::NotInDelta { .. })
        ));
    }

    #[test]
    fn sign_change_rejected() {
        // a² - b² = -2 sinh u changes sign at 0
        let err = LegendreCurve::parse("0", "0", "cosh(u)", "sinh(u)+1", [-1.0, 1.0], &tol()).unwrap_err();
        assert!(matches!(
            err,
            LegendreError::Invalid(ValidationFailure::NonConstantDelta { .. })
        ));
    }

    #[test]
    fn tangency_failure_rejected() {
        let err = LegendreCurve::parse("u", "0", "1", "0", [0.0, 1.0], &tol()).unwrap_err();
        assert!(matches!(
            err,
            LegendreError::Invalid(ValidationFailure::NotLegendre { .. })
        ));
    }

    #[test]
    fn curvature_of_screw_curves() {
        let c = spacelike_screw();
        for u in [-1.5, 0.0, 0.3, 1.9] {
            let k = c.curvature(u, 6, &tol()).unwrap();
            assert_relative_eq!(k.l.value.value(), 1.0, max_relative = 1e-13);
            assert!(k.l.value.coeffs()[1..].iter().all(|x| x.abs() < 1e-12));
            assert_relative_eq!(k.beta.value.value(), u, epsilon = 1e-13);
            assert_relative_eq!(k.beta.derivative(1), 1.0, max_relative = 1e-12);
        }
        let k = timelike_screw().curvature(0.0, 6, &tol()).unwrap();
        assert_relative_eq!(k.l.value.value(), 1.0);
        assert_eq!(k.beta.value.value(), 0.0);
        assert_relative_eq!(k.beta.derivative(1), 1.0);
        // β = u sqrt(1 - u²), l = 1/(1 - u²)
        let k = timelike_screw().curvature(0.5, 3, &tol()).unwrap();
        assert_relative_eq!(k.beta.value.value(), 0.5 * 0.75f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(k.l.value.value(), 1.0 / 0.75, max_relative = 1e-14);
    }

    #[test]
    fn constant_gamma_and_nu() {
        let c = LegendreCurve::parse("0", "0", "cosh(u)", "sinh(u)", [-1.0, 1.0], &tol()).unwrap();
        let k = c.curvature(0.4, 4, &tol()).unwrap();
        assert!(k.beta.value.coeffs().iter().all(|x| *x == 0.0));
        assert_relative_eq!(k.l.value.value(), 1.0, max_relative = 1e-14);

        let c = LegendreCurve::parse("u", "0", "0", "1", [-1.0, 1.0], &tol()).unwrap();
        let k = c.curvature(0.2, 4, &tol()).unwrap();
        assert!(k.l.value.coeffs().iter().all(|x| *x == 0.0));
    }

    #[test]
    fn mu_and_identities() {
        let c = spacelike_screw();
        let (mb, ma) = c.mu(0.0, 3).unwrap();
        assert_eq!((mb.value(), ma.value()), (0.0, 1.0));
        for u in [-1.0, 0.25, 1.75] {
            let (b, a) = c.mu(u, 0).unwrap();
            let (a, b) = (a.value(), b.value());
            let delta = c.delta_f64();
            // ⟨μ, μ⟩ = δ, ⟨ν, ν⟩ = -δ, ⟨ν, μ⟩ = 0
            assert_relative_eq!(-b * b + a * a, delta, max_relative = 1e-12);
            assert_relative_eq!(-a * a + b * b, -delta, max_relative = 1e-12);
            assert_eq!(-a * b + b * a, 0.0);
            assert!(c.frenet_residual(u, &tol()).unwrap() < 1e-12);
        }
    }

    #[test]
    fn frenet_detects_corruption() {
        let c = LegendreCurve::new_unchecked(
            parse("u*cosh(u)-sinh(u)").unwrap(),
            parse("u*sinh(u)-cosh(u)+1").unwrap(),
            parse("cosh(u)").unwrap(),
            parse("sinh(u)+0.1").unwrap(),
            [-2.0, 2.0],
            1,
        )
        .unwrap();
        assert!(c.frenet_residual(0.7, &tol()).unwrap() > 0.05);
    }

    #[test]
    fn domain_is_enforced() {
        let c = timelike_screw();
        assert!(matches!(
            c.curvature(0.95, 2, &tol()),
            Err(LegendreError::OutsideDomain { .. })
        ));
        assert!(c.curvature(0.9, 2, &tol()).is_ok());
        assert!(LegendreCurve::new_unchecked(Expr::Var, Expr::Var, Expr::Var, Expr::Var, [1.0, 1.0], 1).is_err());
    }
}
