//! Helicoidal surfaces swept by a Legendre curve under a screw motion.
//!
//! With profile `γ = (x1, x2)`, pitch `λ ≠ 0` and `(s, c) = (sin v, cos v)`,
//! `(sh, ch) = (sinh v, cosh v)`:
//!
//! ```text
//! type 1:  r1(u, v) = (x1 + λv, x2 s, x2 c)      circular rotation about the x-axis
//! type 2:  r2(u, v) = (x1 ch, x1 sh, x2 + λv)    hyperbolic rotation about the z-axis
//! ```
//!
//! When `δ = 1` both carry a lightcone frame `(ℓ⁺, ℓ⁻, t)` with
//! `⟨ℓ±, ℓ±⟩ = 0`, `⟨ℓ⁺, ℓ⁻⟩ = -2` and `t = -½ ℓ⁺ ∧ ℓ⁻`. Dependence on `u`
//! goes through jets of the curve; dependence on `v` is differentiated by
//! hand.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::legendre::{curvature_from_jets, LegendreCurve, LegendreError};
use crate::minkowski::{pseudo_dot3, pseudo_wedge, CausalCharacter, Vec3M};
use crate::tolerance::ToleranceSpec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HelicoidError {
    #[error("the pitch λ must be nonzero and finite, got {0}")]
    BadPitch(f64),
    #[error(transparent)]
    Curve(#[from] LegendreError),
    #[error("lightcone frames exist only when δ = 1; this curve has δ = {delta}")]
    DeltaNotOne { delta: i8 },
    #[error("non-finite surface value at (u, v) = ({u}, {v})")]
    NonFinite { u: f64, v: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    Type1,
    Type2,
}

impl SurfaceKind {
    pub fn number(self) -> u8 {
        match self {
            SurfaceKind::Type1 => 1,
            SurfaceKind::Type2 => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<SurfaceKind> {
        match n {
            1 => Some(SurfaceKind::Type1),
            2 => Some(SurfaceKind::Type2),
            _ => None,
        }
    }
}

/// Why a parameter value is singular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SingularReason {
    /// `β(u0) = 0`.
    BetaZero,
    /// `a = x2 = 0` for type 1, `b = x1 = 0` for type 2.
    ProfileAxisZero,
}

/// Causal character of the surface at a point, or `Degenerate` at a
/// singular point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointCausality {
    Spacelike,
    Timelike,
    Lightlike,
    Degenerate,
}

impl PointCausality {
    pub fn as_str(self) -> &'static str {
        match self {
            PointCausality::Spacelike => "spacelike",
            PointCausality::Timelike => "timelike",
            PointCausality::Lightlike => "lightlike",
            PointCausality::Degenerate => "degenerate",
        }
    }
}

impl From<CausalCharacter> for PointCausality {
    fn from(c: CausalCharacter) -> Self {
        match c {
            CausalCharacter::Spacelike => PointCausality::Spacelike,
            CausalCharacter::Timelike => PointCausality::Timelike,
            CausalCharacter::Lightlike => PointCausality::Lightlike,
        }
    }
}

impl std::fmt::Display for PointCausality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LightconeFrame {
    pub lplus: Vec3M,
    pub lminus: Vec3M,
    pub t: Vec3M,
}

impl LightconeFrame {
    /// Defects in `⟨ℓ⁺,ℓ⁺⟩ = 0`, `⟨ℓ⁻,ℓ⁻⟩ = 0`, `⟨ℓ⁺,ℓ⁻⟩ = -2`, `⟨t,t⟩ = 1`
    /// and `t = -½ ℓ⁺ ∧ ℓ⁻` (Euclidean norm of the difference).
    pub fn identity_residuals(&self) -> [f64; 5] {
        let w = -0.5 * pseudo_wedge(self.lplus, self.lminus);
        [
            pseudo_dot3(self.lplus, self.lplus).abs(),
            pseudo_dot3(self.lminus, self.lminus).abs(),
            (pseudo_dot3(self.lplus, self.lminus) + 2.0).abs(),
            (pseudo_dot3(self.t, self.t) - 1.0).abs(),
            (w - self.t).euclidean_norm(),
        ]
    }
}

/// A frame together with its partial derivatives in `u` and `v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameDerivatives {
    pub frame: LightconeFrame,
    pub du: LightconeFrame,
    pub dv: LightconeFrame,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct BasicInvariants {
    pub a1: f64,
    pub b1: f64,
    pub c1: f64,
    pub a2: f64,
    pub b2: f64,
    pub c2: f64,
    pub e1: f64,
    pub f1: f64,
    pub g1: f64,
    pub e2: f64,
    pub f2: f64,
    pub g2: f64,
}

impl BasicInvariants {
    pub fn to_array(&self) -> [f64; 12] {
        [
            self.a1, self.b1, self.c1, self.a2, self.b2, self.c2, self.e1, self.f1, self.g1, self.e2, self.f2, self.g2,
        ]
    }

    pub const NAMES: [&'static str; 12] = ["a1", "b1", "c1", "a2", "b2", "c2", "e1", "f1", "g1", "e2", "f2", "g2"];

    pub fn max_abs_difference(&self, other: &BasicInvariants) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }
}

/// Euclidean norms of the defects in the six frame equations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct FrameResiduals {
    pub lplus_u: f64,
    pub lminus_u: f64,
    pub t_u: f64,
    pub lplus_v: f64,
    pub lminus_v: f64,
    pub t_v: f64,
}

impl FrameResiduals {
    pub fn to_array(&self) -> [f64; 6] {
        [
            self.lplus_u,
            self.lminus_u,
            self.t_u,
            self.lplus_v,
            self.lminus_v,
            self.t_v,
        ]
    }

    pub fn max(&self) -> f64 {
        self.to_array().into_iter().fold(0.0, f64::max)
    }

    /// Residuals of a frame and its derivatives against the frame equations
    /// with coefficients `inv`.
    pub fn of(fd: &FrameDerivatives, inv: &BasicInvariants) -> FrameResiduals {
        let LightconeFrame { lplus, lminus, t } = fd.frame;
        let r = |d: Vec3M, expected: Vec3M| (d - expected).euclidean_norm();
        FrameResiduals {
            lplus_u: r(fd.du.lplus, inv.e1 * lplus + (2.0 * inv.g1) * t),
            lminus_u: r(fd.du.lminus, -inv.e1 * lminus + (2.0 * inv.f1) * t),
            t_u: r(fd.du.t, inv.f1 * lplus + inv.g1 * lminus),
            lplus_v: r(fd.dv.lplus, inv.e2 * lplus + (2.0 * inv.g2) * t),
            lminus_v: r(fd.dv.lminus, -inv.e2 * lminus + (2.0 * inv.f2) * t),
            t_v: r(fd.dv.t, inv.f2 * lplus + inv.g2 * lminus),
        }
    }
}

/// `r_u ∧ r_v = α ℓ⁺ + β̃ ℓ⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WedgeDecomposition {
    pub alpha: f64,
    pub beta: f64,
    /// Euclidean norm of `r_u ∧ r_v - α ℓ⁺ - β̃ ℓ⁻`.
    pub residual: f64,
}

/// Curve quantities at one parameter value, with the first derivatives of
/// the components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointData {
    pub x1: f64,
    pub x2: f64,
    pub a: f64,
    pub b: f64,
    pub dx1: f64,
    pub dx2: f64,
    pub da: f64,
    pub db: f64,
    pub l: f64,
    pub beta: f64,
    /// Summand-magnitude bounds of `x1, x2, a, b, β` for zero tests.
    pub x1_scale: f64,
    pub x2_scale: f64,
    pub a_scale: f64,
    pub b_scale: f64,
    pub beta_scale: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HelicoidalSurface {
    curve: LegendreCurve,
    lambda: f64,
    kind: SurfaceKind,
}

fn vec3(x: f64, y: f64, z: f64, u: f64, v: f64) -> Result<Vec3M, HelicoidError> {
    Vec3M::new(x, y, z).map_err(|_| HelicoidError::NonFinite { u, v })
}

impl HelicoidalSurface {
    pub fn new(curve: LegendreCurve, lambda: f64, kind: SurfaceKind) -> Result<Self, HelicoidError> {
        if lambda == 0.0 || !lambda.is_finite() {
            return Err(HelicoidError::BadPitch(lambda));
        }
        Ok(HelicoidalSurface { curve, lambda, kind })
    }

    pub fn curve(&self) -> &LegendreCurve {
        &self.curve
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn point_data(&self, u: f64) -> Result<PointData, HelicoidError> {
        let tol = ToleranceSpec::default();
        let j = self.curve.jets(u, 1, &tol)?;
        let k = curvature_from_jets(&j, self.curve.delta_f64());
        Ok(PointData {
            x1: j.x1.value.value(),
            x2: j.x2.value.value(),
            a: j.a.value.value(),
            b: j.b.value.value(),
            dx1: j.x1.derivative(1),
            dx2: j.x2.derivative(1),
            da: j.a.derivative(1),
            db: j.b.derivative(1),
            l: k.l.value.value(),
            beta: k.beta.value.value(),
            x1_scale: j.x1.scale.value(),
            x2_scale: j.x2.scale.value(),
            a_scale: j.a.scale.value(),
            b_scale: j.b.scale.value(),
            beta_scale: k.beta.scale.value(),
        })
    }

    /// Surface point; only `x1` and `x2` are evaluated.
    pub fn eval(&self, u: f64, v: f64) -> Result<Vec3M, HelicoidError> {
        self.curve.check_domain(u)?;
        let x1 = self.curve.x1().eval(u).map_err(LegendreError::from)?;
        let x2 = self.curve.x2().eval(u).map_err(LegendreError::from)?;
        let lam = self.lambda;
        match self.kind {
            SurfaceKind::Type1 => vec3(x1 + lam * v, x2 * v.sin(), x2 * v.cos(), u, v),
            SurfaceKind::Type2 => vec3(x1 * v.cosh(), x1 * v.sinh(), x2 + lam * v, u, v),
        }
    }

    /// `(r_u, r_v)` from the closed forms in `β, a, b, x1, x2`.
    pub fn partials(&self, u: f64, v: f64) -> Result<(Vec3M, Vec3M), HelicoidError> {
        let p = self.point_data(u)?;
        let lam = self.lambda;
        match self.kind {
            SurfaceKind::Type1 => {
                let (s, c) = v.sin_cos();
                Ok((
                    vec3(p.beta * p.b, p.beta * p.a * s, p.beta * p.a * c, u, v)?,
                    vec3(lam, p.x2 * c, -p.x2 * s, u, v)?,
                ))
            }
            SurfaceKind::Type2 => {
                let (sh, ch) = (v.sinh(), v.cosh());
                Ok((
                    vec3(p.beta * p.b * ch, p.beta * p.b * sh, p.beta * p.a, u, v)?,
                    vec3(p.x1 * sh, p.x1 * ch, lam, u, v)?,
                ))
            }
        }
    }

    /// `(r_u, r_v)` by differentiating the surface map directly: `u` through
    /// jets of `x1, x2`, `v` by hand.
    pub fn partials_via_jets(&self, u: f64, v: f64) -> Result<(Vec3M, Vec3M), HelicoidError> {
        self.curve.check_domain(u)?;
        let dx1 = self.curve.x1().eval_jet(u, 1).map_err(LegendreError::from)?;
        let dx2 = self.curve.x2().eval_jet(u, 1).map_err(LegendreError::from)?;
        let (x1, x2) = (dx1.value(), dx2.value());
        let (dx1, dx2) = (dx1.derivative(1), dx2.derivative(1));
        let lam = self.lambda;
        match self.kind {
            SurfaceKind::Type1 => {
                let (s, c) = v.sin_cos();
                Ok((vec3(dx1, dx2 * s, dx2 * c, u, v)?, vec3(lam, x2 * c, -x2 * s, u, v)?))
            }
            SurfaceKind::Type2 => {
                let (sh, ch) = (v.sinh(), v.cosh());
                Ok((vec3(dx1 * ch, dx1 * sh, dx2, u, v)?, vec3(x1 * sh, x1 * ch, lam, u, v)?))
            }
        }
    }

    /// `N = r_u ∧ r_v` from the closed-form partials.
    pub fn normal(&self, u: f64, v: f64) -> Result<Vec3M, HelicoidError> {
        let (ru, rv) = self.partials(u, v)?;
        Ok(pseudo_wedge(ru, rv))
    }

    /// The expanded expression for `N`.
    pub fn normal_closed_form(&self, u: f64, v: f64) -> Result<Vec3M, HelicoidError> {
        let p = self.point_data(u)?;
        let lam = self.lambda;
        let n = match self.kind {
            SurfaceKind::Type1 => {
                let (s, c) = v.sin_cos();
                [
                    p.a * p.x2,
                    p.b * p.x2 * s + lam * p.a * c,
                    p.b * p.x2 * c - lam * p.a * s,
                ]
            }
            SurfaceKind::Type2 => {
                let (sh, ch) = (v.sinh(), v.cosh());
                [
                    p.a * p.x1 * ch - lam * p.b * sh,
                    p.a * p.x1 * sh - lam * p.b * ch,
                    p.b * p.x1,
                ]
            }
        };
        vec3(p.beta * n[0], p.beta * n[1], p.beta * n[2], u, v)
    }

    /// `λ²a² - δx2²` (type 1) or `λ²b² - δx1²` (type 2), with its scale.
    pub fn causal_discriminant(&self, p: &PointData) -> (f64, f64) {
        let lam2 = self.lambda * self.lambda;
        let delta = self.curve.delta_f64();
        let (n, x) = match self.kind {
            SurfaceKind::Type1 => (p.a, p.x2),
            SurfaceKind::Type2 => (p.b, p.x1),
        };
        (lam2 * n * n - delta * x * x, lam2 * n * n + x * x)
    }

    fn singular_reasons_at(&self, p: &PointData, tol: &ToleranceSpec) -> BTreeSet<SingularReason> {
        let mut reasons = BTreeSet::new();
        if tol.is_zero(p.beta, p.beta_scale) {
            reasons.insert(SingularReason::BetaZero);
        }
        let axis = match self.kind {
            SurfaceKind::Type1 => tol.is_zero(p.a, p.a_scale) && tol.is_zero(p.x2, p.x2_scale),
            SurfaceKind::Type2 => tol.is_zero(p.b, p.b_scale) && tol.is_zero(p.x1, p.x1_scale),
        };
        if axis {
            reasons.insert(SingularReason::ProfileAxisZero);
        }
        reasons
    }

    /// Reasons `u0` is singular; empty when it is regular. Singularity does
    /// not depend on `v`.
    pub fn is_singular(&self, u0: f64, tol: &ToleranceSpec) -> Result<BTreeSet<SingularReason>, HelicoidError> {
        let p = self.point_data(u0)?;
        Ok(self.singular_reasons_at(&p, tol))
    }

    /// Causal character of the surface at `(u0, v)`; the sign of the
    /// discriminant does not depend on `v`.
    pub fn causal_character_at(&self, u0: f64, _v: f64, tol: &ToleranceSpec) -> Result<PointCausality, HelicoidError> {
        let p = self.point_data(u0)?;
        Ok(self.causality_from(&p, tol))
    }

    pub(crate) fn causality_from(&self, p: &PointData, tol: &ToleranceSpec) -> PointCausality {
        if !self.singular_reasons_at(p, tol).is_empty() {
            return PointCausality::Degenerate;
        }
        let (d, scale) = self.causal_discriminant(p);
        if tol.is_zero(d, scale) {
            PointCausality::Lightlike
        } else if d < 0.0 {
            PointCausality::Spacelike
        } else {
            PointCausality::Timelike
        }
    }

    fn require_delta_one(&self) -> Result<(), HelicoidError> {
        match self.curve.delta() {
            1 => Ok(()),
            delta => Err(HelicoidError::DeltaNotOne { delta }),
        }
    }

    fn frame_from(&self, p: &PointData, v: f64) -> LightconeFrame {
        let (a, b) = (p.a, p.b);
        match self.kind {
            SurfaceKind::Type1 => {
                let (s, c) = v.sin_cos();
                LightconeFrame {
                    lplus: Vec3M::raw(a, b * s + c, b * c - s),
                    lminus: Vec3M::raw(a, b * s - c, b * c + s),
                    t: Vec3M::raw(b, a * s, a * c),
                }
            }
            SurfaceKind::Type2 => {
                let (sh, ch) = (v.sinh(), v.cosh());
                LightconeFrame {
                    lplus: Vec3M::raw(a * ch + sh, a * sh + ch, b),
                    lminus: Vec3M::raw(a * ch - sh, a * sh - ch, b),
                    t: Vec3M::raw(b * ch, b * sh, a),
                }
            }
        }
    }

    pub fn lightcone_frame(&self, u0: f64, v: f64) -> Result<LightconeFrame, HelicoidError> {
        self.require_delta_one()?;
        let p = self.point_data(u0)?;
        Ok(self.frame_from(&p, v))
    }

    /// The frame and its partials: `u` through jets of `a, b`, `v` by hand.
    pub fn frame_derivatives(&self, u0: f64, v: f64) -> Result<FrameDerivatives, HelicoidError> {
        self.require_delta_one()?;
        let p = self.point_data(u0)?;
        let frame = self.frame_from(&p, v);
        let (a, b, da, db) = (p.a, p.b, p.da, p.db);
        let (du, dv) = match self.kind {
            SurfaceKind::Type1 => {
                let (s, c) = v.sin_cos();
                (
                    LightconeFrame {
                        lplus: Vec3M::raw(da, db * s, db * c),
                        lminus: Vec3M::raw(da, db * s, db * c),
                        t: Vec3M::raw(db, da * s, da * c),
                    },
                    LightconeFrame {
                        lplus: Vec3M::raw(0.0, b * c - s, -b * s - c),
                        lminus: Vec3M::raw(0.0, b * c + s, -b * s + c),
                        t: Vec3M::raw(0.0, a * c, -a * s),
                    },
                )
            }
            SurfaceKind::Type2 => {
                let (sh, ch) = (v.sinh(), v.cosh());
                (
                    LightconeFrame {
                        lplus: Vec3M::raw(da * ch, da * sh, db),
                        lminus: Vec3M::raw(da * ch, da * sh, db),
                        t: Vec3M::raw(db * ch, db * sh, da),
                    },
                    LightconeFrame {
                        lplus: Vec3M::raw(a * sh + ch, a * ch + sh, 0.0),
                        lminus: Vec3M::raw(a * sh - ch, a * ch - sh, 0.0),
                        t: Vec3M::raw(b * sh, b * ch, 0.0),
                    },
                )
            }
        };
        Ok(FrameDerivatives { frame, du, dv })
    }

    /// Coefficients `(α, β̃)` with `r_u ∧ r_v = α ℓ⁺ + β̃ ℓ⁻`; the residual is
    /// measured against the normal built from the directly differentiated
    /// surface map.
    pub fn wedge_decomposition(&self, u0: f64, v: f64) -> Result<WedgeDecomposition, HelicoidError> {
        self.require_delta_one()?;
        let p = self.point_data(u0)?;
        let lam = self.lambda;
        let (alpha, beta) = match self.kind {
            SurfaceKind::Type1 => (p.beta * (p.x2 + lam * p.a) / 2.0, p.beta * (p.x2 - lam * p.a) / 2.0),
            SurfaceKind::Type2 => (p.beta * (p.x1 - lam * p.b) / 2.0, p.beta * (p.x1 + lam * p.b) / 2.0),
        };
        let frame = self.frame_from(&p, v);
        let (ru, rv) = self.partials_via_jets(u0, v)?;
        let n = pseudo_wedge(ru, rv);
        let residual = (n - alpha * frame.lplus - beta * frame.lminus).euclidean_norm();
        Ok(WedgeDecomposition { alpha, beta, residual })
    }

    /// The twelve invariants from their inner-product definitions, using the
    /// directly differentiated surface map and frame.
    pub fn basic_invariants(&self, u0: f64, v: f64) -> Result<BasicInvariants, HelicoidError> {
        let fd = self.frame_derivatives(u0, v)?;
        let (xu, xv) = self.partials_via_jets(u0, v)?;
        let LightconeFrame { lplus, lminus, t } = fd.frame;
        let h = |x: Vec3M, y: Vec3M| -0.5 * pseudo_dot3(x, y);
        Ok(BasicInvariants {
            a1: h(xu, lminus),
            b1: h(xu, lplus),
            c1: pseudo_dot3(xu, t),
            a2: h(xv, lminus),
            b2: h(xv, lplus),
            c2: pseudo_dot3(xv, t),
            e1: h(fd.du.lplus, lminus),
            f1: h(fd.du.t, lminus),
            g1: h(fd.du.t, lplus),
            e2: h(fd.dv.lplus, lminus),
            f2: h(fd.dv.t, lminus),
            g2: h(fd.dv.t, lplus),
        })
    }

    /// The twelve invariants in closed form; they do not depend on `v`.
    pub fn basic_invariants_closed_form(&self, u0: f64) -> Result<BasicInvariants, HelicoidError> {
        self.require_delta_one()?;
        let p = self.point_data(u0)?;
        let lam = self.lambda;
        let half_l = p.l / 2.0;
        Ok(match self.kind {
            SurfaceKind::Type1 => BasicInvariants {
                a1: 0.0,
                b1: 0.0,
                c1: p.beta,
                a2: (lam * p.a + p.x2) / 2.0,
                b2: (lam * p.a - p.x2) / 2.0,
                c2: -lam * p.b,
                e1: 0.0,
                f1: half_l,
                g1: half_l,
                e2: p.b,
                f2: p.a / 2.0,
                g2: -p.a / 2.0,
            },
            SurfaceKind::Type2 => BasicInvariants {
                a1: 0.0,
                b1: 0.0,
                c1: p.beta,
                a2: (-lam * p.b + p.x1) / 2.0,
                b2: (-lam * p.b - p.x1) / 2.0,
                c2: lam * p.a,
                e1: 0.0,
                f1: half_l,
                g1: half_l,
                e2: p.a,
                f2: p.b / 2.0,
                g2: -p.b / 2.0,
            },
        })
    }

    /// Defects of the six frame equations with the closed-form invariants.
    pub fn frame_residuals(&self, u0: f64, v: f64) -> Result<FrameResiduals, HelicoidError> {
        let fd = self.frame_derivatives(u0, v)?;
        let inv = self.basic_invariants_closed_form(u0)?;
        Ok(FrameResiduals::of(&fd, &inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_2;

    fn tol() -> ToleranceSpec {
        ToleranceSpec::default()
    }

    fn spacelike_screw(kind: SurfaceKind) -> HelicoidalSurface {
        let c = LegendreCurve::parse(
            "u*cosh(u)-sinh(u)",
            "u*sinh(u)-cosh(u)+1",
            "cosh(u)",
            "sinh(u)",
            [-2.0, 2.0],
            &tol(),
        )
        .unwrap();
        HelicoidalSurface::new(c, 1.0, kind).unwrap()
    }

    /// The timelike screw curve on the closed parameter interval, where `ν`
    /// itself blows up at the endpoints.
    fn timelike_screw_closed() -> HelicoidalSurface {
        let e = |s| parse(s).unwrap();
        let c = LegendreCurve::new_unchecked(
            e("u^2/2"),
            e("u^3/3"),
            e("u/sqrt(1-u^2)"),
            e("1/sqrt(1-u^2)"),
            [-1.0, 1.0],
            -1,
        )
        .unwrap();
        HelicoidalSurface::new(c, 1.0, SurfaceKind::Type2).unwrap()
    }

    fn close(x: Vec3M, y: [f64; 3], eps: f64) {
        for i in 0..3 {
            assert!((x[i] - y[i]).abs() <= eps, "{x} vs {y:?}");
        }
    }

    #[test]
    fn pitch_must_be_nonzero() {
        let s = spacelike_screw(SurfaceKind::Type1);
        assert!(matches!(
            HelicoidalSurface::new(s.curve().clone(), 0.0, SurfaceKind::Type1),
            Err(HelicoidError::BadPitch(_))
        ));
    }

    #[test]
    fn evaluation() {
        let s = spacelike_screw(SurfaceKind::Type1);
        close(s.eval(0.0, FRAC_PI_2).unwrap(), [FRAC_PI_2, 0.0, 0.0], 1e-15);
        let u: f64 = 0.8;
        let p = s.eval(u, 0.0).unwrap();
        close(p, [u * u.cosh() - u.sinh(), 0.0, u * u.sinh() - u.cosh() + 1.0], 1e-15);

        let s = timelike_screw_closed();
        close(s.eval(1.0, 0.0).unwrap(), [0.5, 0.0, 1.0 / 3.0], 1e-15);
    }

    #[test]
    fn partials_at_closed_interval_endpoints() {
        let s = spacelike_screw(SurfaceKind::Type1);
        let (ru, rv) = s.partials(0.0, 0.4).unwrap();
        assert_eq!(ru.max_abs(), 0.0);
        close(rv, [1.0, 0.0, 0.0], 0.0);

        let s = timelike_screw_closed();
        let (ru, _) = s.partials_via_jets(1.0, 0.0).unwrap();
        close(ru, [1.0, 0.0, 1.0], 1e-15);
        let n = pseudo_wedge(ru, s.partials_via_jets(1.0, 0.0).unwrap().1);
        close(n, [0.5, -1.0, 0.5], 1e-15);
    }

    #[test]
    fn closed_forms_match_direct_derivatives() {
        for s in [spacelike_screw(SurfaceKind::Type1), spacelike_screw(SurfaceKind::Type2)] {
            for (u, v) in [(-1.7, 0.3), (0.2, -2.5), (1.1, 1.0)] {
                let (ru, rv) = s.partials(u, v).unwrap();
                let (ju, jv) = s.partials_via_jets(u, v).unwrap();
                close(ru, ju.to_array(), 1e-12 * ju.max_abs().max(1.0));
                close(rv, jv.to_array(), 1e-12 * jv.max_abs().max(1.0));
                let n = s.normal(u, v).unwrap();
                close(
                    n,
                    s.normal_closed_form(u, v).unwrap().to_array(),
                    1e-12 * n.max_abs().max(1.0),
                );
            }
        }
    }

    #[test]
    fn singular_points() {
        let s = spacelike_screw(SurfaceKind::Type1);
        assert_eq!(
            s.is_singular(0.0, &tol()).unwrap(),
            BTreeSet::from([SingularReason::BetaZero])
        );
        assert!(s.is_singular(1.0, &tol()).unwrap().is_empty());
        assert_eq!(
            s.causal_character_at(0.0, 0.0, &tol()).unwrap(),
            PointCausality::Degenerate
        );
    }

    #[test]
    fn causal_character_from_discriminant() {
        // δ = 1, a = 1, x2 = 0: discriminant λ² > 0
        let s = spacelike_screw(SurfaceKind::Type1);
        let p = s.point_data(1e-3).unwrap();
        assert!(s.causal_discriminant(&p).0 > 0.0);
        assert_eq!(
            s.causal_character_at(1e-3, 0.0, &tol()).unwrap(),
            PointCausality::Timelike
        );
    }

    #[test]
    fn frame_at_origin() {
        let s = spacelike_screw(SurfaceKind::Type1);
        let f = s.lightcone_frame(0.0, 0.0).unwrap();
        close(f.lplus, [1.0, 1.0, 0.0], 0.0);
        close(f.lminus, [1.0, -1.0, 0.0], 0.0);
        close(f.t, [0.0, 0.0, 1.0], 0.0);
        assert!(f.identity_residuals().iter().all(|r| *r < 1e-15));
    }

    #[test]
    fn frames_need_delta_one() {
        let s = timelike_screw_closed();
        assert!(matches!(
            s.lightcone_frame(0.0, 0.0),
            Err(HelicoidError::DeltaNotOne { delta: -1 })
        ));
        assert!(s.basic_invariants(0.0, 0.0).is_err());
        assert!(s.frame_residuals(0.0, 0.0).is_err());
    }

    #[test]
    fn invariants_and_decomposition() {
        for kind in [SurfaceKind::Type1, SurfaceKind::Type2] {
            let s = spacelike_screw(kind);
            for (u, v) in [(1.0, 0.0), (-0.6, 1.3), (1.9, -0.8)] {
                let inv = s.basic_invariants(u, v).unwrap();
                let closed = s.basic_invariants_closed_form(u).unwrap();
                assert!(inv.max_abs_difference(&closed) < 1e-10, "{kind:?} {inv:?} {closed:?}");
                assert!(s.frame_residuals(u, v).unwrap().max() < 1e-10);
                let w = s.wedge_decomposition(u, v).unwrap();
                assert!(w.residual < 1e-10);
            }
        }
        let s = spacelike_screw(SurfaceKind::Type1);
        assert_relative_eq!(s.basic_invariants(1.0, 0.0).unwrap().c1, 1.0, max_relative = 1e-12);
        let w = s.wedge_decomposition(0.0, 0.7).unwrap();
        assert_eq!((w.alpha, w.beta), (0.0, 0.0));
    }

    #[test]
    fn perturbed_frame_fails_equations() {
        let s = spacelike_screw(SurfaceKind::Type1);
        let mut fd = s.frame_derivatives(0.5, 0.3).unwrap();
        let inv = s.basic_invariants_closed_form(0.5).unwrap();
        for f in [&mut fd.frame, &mut fd.du, &mut fd.dv] {
            f.lplus = 1.01 * f.lplus;
        }
        assert!(fd.frame.identity_residuals()[2] > 1e-3);
        assert!(FrameResiduals::of(&fd, &inv).max() > 1e-3);
    }
}
