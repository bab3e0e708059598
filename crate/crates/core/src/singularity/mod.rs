//! Singular points of helicoidal surfaces and their cuspidal-edge types.
//!
//! The screw motion is undone by a change of coordinates that turns the
//! surface into a cylinder over a plane curve, so the surface has an
//! `(i, j)`-cuspidal edge at `(u0, v)` exactly when that curve has an
//! `(i, j)`-cusp at `u0`:
//!
//! ```text
//! type 1:  γ1(u) = x2 (cos(x1/λ), sin(x1/λ))
//! type 2:  γ2(u) = x1 (cosh(x2/λ), sinh(x2/λ))
//! ```
//!
//! Each singular point is classified twice. The fast path reads the type off
//! `β, β', l, l'` and the normal component (`a` for type 1, `b` for type 2)
//! when the profile coordinate (`x2`, resp. `x1`) vanishes; otherwise it
//! classifies `γ` itself, which is diffeomorphic to `γ1` (resp. `γ2`) there.
//! The oracle path applies the determinant criteria to jets of `γ1`/`γ2`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::helicoid::{HelicoidError, HelicoidalSurface, SingularReason, SurfaceKind};
use crate::jet::{ScaledJet, DEFAULT_ORDER};
use crate::legendre::LegendreError;
use crate::tolerance::ToleranceSpec;

mod cusp;
pub mod tables;

pub use cusp::{classify_cusp, CurveDerivatives, CuspType};
pub use tables::TableInputs;

pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SingularityError {
    #[error(transparent)]
    Surface(#[from] HelicoidError),
    #[error("u0 = {0} is not a singular point")]
    NotSingular(f64),
    #[error("the sweep grid needs at least {MIN_GRID} points, got {0}")]
    GridTooSmall(usize),
    #[error("β vanishes on [{0}, {1}]; singular points are not isolated")]
    NotIsolated(f64, f64),
}

impl From<LegendreError> for SingularityError {
    fn from(e: LegendreError) -> Self {
        SingularityError::Surface(HelicoidError::Curve(e))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularPoint {
    pub u0: f64,
    pub reasons: BTreeSet<SingularReason>,
}

/// A local minimum of `|f|` close to zero without a sign change: a possible
/// root of even multiplicity, reported but not classified.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SuspectedTangentRoot {
    pub u: f64,
    /// Which function: `"beta"`, `"a"` or `"b"`.
    pub function: &'static str,
    pub abs_value: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SingularSweep {
    pub points: Vec<SingularPoint>,
    pub suspects: Vec<SuspectedTangentRoot>,
}

/// Which case of the classification theorems applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremScope {
    /// `β = 0` and the normal component is zero: `(3,5)` iff `β' l ≠ 0`.
    BetaAndNormalZero,
    /// `β = 0`, normal component nonzero: `(2,5)` iff `β' l ≠ 0`.
    BetaZeroNormalNonzero,
    /// `β ≠ 0`, normal component zero: `(2,3)` iff `l ≠ 0`, `(3,4)` iff
    /// `l = 0` and `l' ≠ 0`.
    NormalZeroBetaNonzero,
    /// The profile coordinate is nonzero; the profile curve is classified
    /// directly.
    OutsideTheoremScope,
}

impl TheoremScope {
    /// Types that cannot occur in this case.
    pub fn excluded(self) -> &'static [CuspType] {
        match self {
            TheoremScope::BetaAndNormalZero => &[CuspType::Cusp23, CuspType::Cusp25, CuspType::Cusp34],
            TheoremScope::BetaZeroNormalNonzero => &[CuspType::Cusp23, CuspType::Cusp34, CuspType::Cusp35],
            TheoremScope::NormalZeroBetaNonzero => &[CuspType::Cusp25, CuspType::Cusp35],
            TheoremScope::OutsideTheoremScope => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityReport {
    pub u0: f64,
    pub reasons: BTreeSet<SingularReason>,
    pub scope: TheoremScope,
    /// Tested scalars keyed by name: `x2`/`x1`, `a`/`b`, `beta`, `beta'`,
    /// `l`, `l'`, `beta'*l`.
    pub conditions: BTreeMap<String, f64>,
    pub classification_fast: CuspType,
    pub classification_oracle: CuspType,
    pub agree: bool,
    /// The oracle type is not among the types excluded by the scope.
    pub exclusion_respected: bool,
    pub verified: bool,
    /// `γ1⁽ⁱ⁾` (resp. `γ2⁽ⁱ⁾`) for `i = 1..=5` from the oracle.
    pub oracle_derivatives: [[f64; 2]; 5],
}

impl SingularityReport {
    /// The declared type at `(u0, v)` for every `v`; the oracle decides.
    pub fn cusp_type(&self) -> CuspType {
        self.classification_oracle
    }
}

/// `β`, the normal component and the profile coordinate at `u`.
fn axis_values(s: &HelicoidalSurface, u: f64) -> Result<[f64; 3], SingularityError> {
    let p = s.point_data(u)?;
    Ok(match s.kind() {
        SurfaceKind::Type1 => [p.beta, p.a, p.x2],
        SurfaceKind::Type2 => [p.beta, p.b, p.x1],
    })
}

/// Bisects a sign change of `f` on `[lo, hi]` down to adjacent floats.
fn bisect<F>(f: &F, mut lo: f64, mut hi: f64, mut flo: f64) -> Result<f64, SingularityError>
where
    F: Fn(f64) -> Result<f64, SingularityError>,
{
    let mut fhi = f(hi)?;
    loop {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            return Ok(if flo.abs() <= fhi.abs() { lo } else { hi });
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
}

/// Golden-section search for a minimum of `|f|` on `[lo, hi]`.
fn minimize_abs<F>(f: &F, mut lo: f64, mut hi: f64) -> Result<(f64, f64), SingularityError>
where
    F: Fn(f64) -> Result<f64, SingularityError>,
{
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - g * (hi - lo);
    let mut d = lo + g * (hi - lo);
    let (mut fc, mut fd) = (f(c)?.abs(), f(d)?.abs());
    for _ in 0..200 {
        if (hi - lo).abs() <= 1e-14 * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c)?.abs();
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d)?.abs();
        }
    }
    Ok(if fc < fd { (c, fc) } else { (d, fd) })
}

struct RootScan {
    roots: Vec<f64>,
    suspects: Vec<SuspectedTangentRoot>,
    /// Grid cells on which `f` vanishes at both ends.
    flat: Vec<(f64, f64)>,
}

/// Sign-change roots of `f` on a grid, plus suspected tangent roots.
fn scan_roots<F>(
    f: &F,
    grid: &[f64],
    values: &[f64],
    name: &'static str,
    tol: &ToleranceSpec,
) -> Result<RootScan, SingularityError>
where
    F: Fn(f64) -> Result<f64, SingularityError>,
{
    let mut scan = RootScan {
        roots: Vec::new(),
        suspects: Vec::new(),
        flat: Vec::new(),
    };
    let n = grid.len();
    for k in 0..n {
        if values[k] == 0.0 {
            if k + 1 < n && values[k + 1] == 0.0 {
                scan.flat.push((grid[k], grid[k + 1]));
            }
            scan.roots.push(grid[k]);
            continue;
        }
        if k + 1 < n && values[k + 1] != 0.0 && (values[k] < 0.0) != (values[k + 1] < 0.0) {
            scan.roots.push(bisect(f, grid[k], grid[k + 1], values[k])?);
        }
        if k > 0 && k + 1 < n {
            let (l, m, r) = (values[k - 1], values[k], values[k + 1]);
            let same_sign = (l < 0.0) == (m < 0.0) && (m < 0.0) == (r < 0.0) && l != 0.0 && r != 0.0;
            if same_sign && m.abs() <= l.abs() && m.abs() <= r.abs() {
                let (u, v) = minimize_abs(f, grid[k - 1], grid[k + 1])?;
                if v <= tol.abs.sqrt() {
                    scan.suspects.push(SuspectedTangentRoot {
                        u,
                        function: name,
                        abs_value: v,
                    });
                }
            }
        }
    }
    Ok(scan)
}

fn overlapping(x: &[(f64, f64)], y: &[(f64, f64)]) -> Option<(f64, f64)> {
    x.iter().find(|c| y.contains(c)).copied()
}

/// All singular parameters in the curve domain, sorted.
///
/// Roots of `β`, of the normal component and of the profile coordinate are
/// bracketed by sign changes on a uniform grid of `grid_n` points and
/// bisected to adjacent floats; the last two count only where both vanish.
/// Roots closer than `1e-9` are merged.
pub fn find_singular_points(
    s: &HelicoidalSurface,
    grid_n: usize,
    tol: &ToleranceSpec,
) -> Result<SingularSweep, SingularityError> {
    if grid_n < MIN_GRID {
        return Err(SingularityError::GridTooSmall(grid_n));
    }
    let [min, max] = s.curve().domain();
    let step = (max - min) / (grid_n - 1) as f64;
    let grid: Vec<f64> = (0..grid_n)
        .map(|k| if k == grid_n - 1 { max } else { min + k as f64 * step })
        .collect();
    let samples: Vec<[f64; 3]> = grid
        .par_iter()
        .map(|&u| axis_values(s, u))
        .collect::<Result<_, SingularityError>>()?;
    let column = |i: usize| samples.iter().map(|p| p[i]).collect::<Vec<f64>>();

    let (normal_name, profile_name) = match s.kind() {
        SurfaceKind::Type1 => ("a", "x2"),
        SurfaceKind::Type2 => ("b", "x1"),
    };
    let beta_f = |u| Ok(axis_values(s, u)?[0]);
    let normal_f = |u| Ok(axis_values(s, u)?[1]);
    let profile_f = |u| Ok(axis_values(s, u)?[2]);
    let beta = scan_roots(&beta_f, &grid, &column(0), "beta", tol)?;
    if let Some((lo, hi)) = beta.flat.first() {
        return Err(SingularityError::NotIsolated(*lo, *hi));
    }
    let normal = scan_roots(&normal_f, &grid, &column(1), normal_name, tol)?;
    let profile = scan_roots(&profile_f, &grid, &column(2), profile_name, tol)?;
    if let Some((lo, hi)) = overlapping(&normal.flat, &profile.flat) {
        return Err(SingularityError::NotIsolated(lo, hi));
    }

    let mut suspects = beta.suspects;
    let near_zero = |x: f64| x.abs() <= tol.abs.sqrt();
    for sus in normal.suspects.into_iter().chain(profile.suspects) {
        let [_, n, x] = axis_values(s, sus.u)?;
        if near_zero(n) && near_zero(x) {
            suspects.push(sus);
        }
    }

    let mut candidates: Vec<(f64, SingularReason)> =
        beta.roots.into_iter().map(|u| (u, SingularReason::BetaZero)).collect();
    for u in normal.roots.into_iter().chain(profile.roots) {
        if s.is_singular(u, tol)?.contains(&SingularReason::ProfileAxisZero) {
            candidates.push((u, SingularReason::ProfileAxisZero));
        }
    }
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut points: Vec<SingularPoint> = Vec::new();
    for (u, reason) in candidates {
        match points.last_mut() {
            Some(last) if (u - last.u0).abs() <= 1e-9 => {
                last.reasons.insert(reason);
            }
            _ => points.push(SingularPoint {
                u0: u,
                reasons: BTreeSet::from([reason]),
            }),
        }
    }
    for p in &mut points {
        p.reasons.extend(s.is_singular(p.u0, tol)?);
    }
    suspects.retain(|sus| points.iter().all(|p| (p.u0 - sus.u).abs() > 1e-6));
    suspects.sort_by(|x, y| x.u.total_cmp(&y.u));
    Ok(SingularSweep { points, suspects })
}

/// Jets of the untwisted profile curve `γ1` (type 1) or `γ2` (type 2),
/// computed directly from `x1`, `x2`.
pub fn profile_curve_jet(
    s: &HelicoidalSurface,
    u0: f64,
    order: usize,
    tol: &ToleranceSpec,
) -> Result<(ScaledJet, ScaledJet), SingularityError> {
    let j = s.curve().jets(u0, order, tol)?;
    let inv_lambda = 1.0 / s.lambda();
    Ok(match s.kind() {
        SurfaceKind::Type1 => {
            let (sin, cos) = j.x1.scale_by(inv_lambda).sin_cos();
            (&j.x2 * &cos, &j.x2 * &sin)
        }
        SurfaceKind::Type2 => {
            let (sinh, cosh) = j.x2.scale_by(inv_lambda).sinh_cosh();
            (&j.x1 * &cosh, &j.x1 * &sinh)
        }
    })
}

fn derivatives_of(x: &ScaledJet, y: &ScaledJet) -> CurveDerivatives {
    let mut derivs = [[0.0; 2]; 5];
    let mut scales = [[0.0; 2]; 5];
    for i in 1..=5 {
        derivs[i - 1] = [x.derivative(i), y.derivative(i)];
        scales[i - 1] = [x.derivative_scale(i), y.derivative_scale(i)];
    }
    CurveDerivatives { derivs, scales }
}

/// `γ1⁽ⁱ⁾` or `γ2⁽ⁱ⁾`, `i = 1..=5`, from the oracle jets.
pub fn oracle_derivatives(
    s: &HelicoidalSurface,
    u0: f64,
    tol: &ToleranceSpec,
) -> Result<CurveDerivatives, SingularityError> {
    let (x, y) = profile_curve_jet(s, u0, DEFAULT_ORDER, tol)?;
    Ok(derivatives_of(&x, &y))
}

/// The coefficient table at one point together with the rotation angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProfileCoeffs {
    pub kind: SurfaceKind,
    /// `(A_i, B_i)` for type 1, `(C_i, D_i)` for type 2.
    pub coeffs: [[f64; 2]; 5],
    /// `x1/λ` for type 1, `x2/λ` for type 2.
    pub angle: f64,
}

impl ProfileCoeffs {
    /// `γ1⁽ⁱ⁾` or `γ2⁽ⁱ⁾` assembled from the table, `i = 1..=5`.
    pub fn derivative(&self, i: usize) -> [f64; 2] {
        let [p, q] = self.coeffs[i - 1];
        match self.kind {
            SurfaceKind::Type1 => {
                let (s, c) = self.angle.sin_cos();
                [p * c + q * s, -q * c + p * s]
            }
            SurfaceKind::Type2 => {
                let (sh, ch) = (self.angle.sinh(), self.angle.cosh());
                [p * ch + q * sh, q * ch + p * sh]
            }
        }
    }

    /// Sign relating curve determinants to coefficient determinants.
    pub fn det_sign(&self) -> f64 {
        match self.kind {
            SurfaceKind::Type1 => -1.0,
            SurfaceKind::Type2 => 1.0,
        }
    }
}

pub fn table_inputs(
    s: &HelicoidalSurface,
    u0: f64,
    tol: &ToleranceSpec,
) -> Result<(TableInputs, f64), SingularityError> {
    let c = s.curve();
    let j = c.jets(u0, 5, tol)?;
    let k = crate::legendre::curvature_from_jets(&j, c.delta_f64());
    let d = |x: &ScaledJet, i| x.derivative(i);
    let (x, angle) = match s.kind() {
        SurfaceKind::Type1 => (j.x2.value.value(), j.x1.value.value() / s.lambda()),
        SurfaceKind::Type2 => (j.x1.value.value(), j.x2.value.value() / s.lambda()),
    };
    let inputs = TableInputs {
        a: j.a.value.value(),
        b: j.b.value.value(),
        beta: [0, 1, 2, 3, 4].map(|i| d(&k.beta, i)),
        l: [0, 1, 2, 3].map(|i| d(&k.l, i)),
        x,
        lambda: s.lambda(),
    };
    Ok((inputs, angle))
}

pub fn profile_coeffs(s: &HelicoidalSurface, u0: f64, tol: &ToleranceSpec) -> Result<ProfileCoeffs, SingularityError> {
    let (inputs, angle) = table_inputs(s, u0, tol)?;
    let coeffs = match s.kind() {
        SurfaceKind::Type1 => tables::type1_coeffs(&inputs),
        SurfaceKind::Type2 => tables::type2_coeffs(&inputs),
    };
    Ok(ProfileCoeffs {
        kind: s.kind(),
        coeffs,
        angle,
    })
}

fn stack_magnitude(d: &CurveDerivatives, t: &ProfileCoeffs) -> f64 {
    (1..=5)
        .map(|i| {
            let [x, y] = d.get(i);
            let [p, q] = t.derivative(i);
            x.hypot(y).max(p.hypot(q))
        })
        .fold(0.0, f64::max)
}

/// Largest `|det(γ⁽ⁱ⁾, γ⁽ʲ⁾) ∓ det[[P_i, Q_i], [P_j, Q_j]]|` over
/// `i, j = 1..=5`, relative to the squared derivative-stack magnitude. The
/// curve derivatives come from the oracle, the coefficients from the table.
pub fn det_identity_check(s: &HelicoidalSurface, u0: f64, tol: &ToleranceSpec) -> Result<f64, SingularityError> {
    let d = oracle_derivatives(s, u0, tol)?;
    let t = profile_coeffs(s, u0, tol)?;
    let m = stack_magnitude(&d, &t);
    if m == 0.0 {
        return Ok(0.0);
    }
    let mut worst: f64 = 0.0;
    for i in 1..=5 {
        for j in 1..=5 {
            let (g, h) = (d.get(i), d.get(j));
            let (p, q) = (t.coeffs[i - 1], t.coeffs[j - 1]);
            let lhs = g[0] * h[1] - g[1] * h[0];
            let rhs = t.det_sign() * (p[0] * q[1] - p[1] * q[0]);
            worst = worst.max((lhs - rhs).abs() / (m * m));
        }
    }
    Ok(worst)
}

/// Largest `‖γ⁽ⁱ⁾_table - γ⁽ⁱ⁾_oracle‖`, `i = 1..=5`, relative to the
/// derivative-stack magnitude.
pub fn table_oracle_check(s: &HelicoidalSurface, u0: f64, tol: &ToleranceSpec) -> Result<f64, SingularityError> {
    let d = oracle_derivatives(s, u0, tol)?;
    let t = profile_coeffs(s, u0, tol)?;
    let m = stack_magnitude(&d, &t);
    if m == 0.0 {
        return Ok(0.0);
    }
    Ok((1..=5)
        .map(|i| {
            let [x, y] = d.get(i);
            let [p, q] = t.derivative(i);
            (x - p).hypot(y - q) / m
        })
        .fold(0.0, f64::max))
}

/// Classifies the singular point `u0` by both paths.
pub fn classify_cuspidal_edge(
    s: &HelicoidalSurface,
    u0: f64,
    tol: &ToleranceSpec,
) -> Result<SingularityReport, SingularityError> {
    let reasons = s.is_singular(u0, tol)?;
    if reasons.is_empty() {
        return Err(SingularityError::NotSingular(u0));
    }
    let c = s.curve();
    let j = c.jets(u0, DEFAULT_ORDER, tol)?;
    let k = crate::legendre::curvature_from_jets(&j, c.delta_f64());
    let (x_name, x, n_name, n) = match s.kind() {
        SurfaceKind::Type1 => ("x2", &j.x2, "a", &j.a),
        SurfaceKind::Type2 => ("x1", &j.x1, "b", &j.b),
    };
    let zero = |jet: &ScaledJet, i: usize| jet.derivative_is_zero(i, tol);

    let beta = &k.beta;
    let beta1_l = beta.derivative(1) * k.l.value.value();
    let beta1_l_scale = beta.derivative_scale(1) * k.l.scale.value();

    let mut conditions = BTreeMap::new();
    conditions.insert(x_name.to_string(), x.value.value());
    conditions.insert(n_name.to_string(), n.value.value());
    conditions.insert("beta".to_string(), beta.value.value());
    conditions.insert("beta'".to_string(), beta.derivative(1));
    conditions.insert("l".to_string(), k.l.value.value());
    conditions.insert("l'".to_string(), k.l.derivative(1));
    conditions.insert("beta'*l".to_string(), beta1_l);

    let scope = if !zero(x, 0) {
        TheoremScope::OutsideTheoremScope
    } else {
        match (zero(beta, 0), zero(n, 0)) {
            (true, true) => TheoremScope::BetaAndNormalZero,
            (true, false) => TheoremScope::BetaZeroNormalNonzero,
            (false, true) => TheoremScope::NormalZeroBetaNonzero,
            (false, false) => return Err(SingularityError::NotSingular(u0)),
        }
    };

    let classification_fast = match scope {
        TheoremScope::BetaAndNormalZero | TheoremScope::BetaZeroNormalNonzero => {
            if tol.is_nonzero(beta1_l, beta1_l_scale) {
                if scope == TheoremScope::BetaAndNormalZero {
                    CuspType::Cusp35
                } else {
                    CuspType::Cusp25
                }
            } else {
                CuspType::Unclassified
            }
        }
        TheoremScope::NormalZeroBetaNonzero => {
            if !zero(&k.l, 0) {
                CuspType::Cusp23
            } else if !zero(&k.l, 1) {
                CuspType::Cusp34
            } else {
                CuspType::Unclassified
            }
        }
        TheoremScope::OutsideTheoremScope => classify_cusp(&derivatives_of(&j.x1, &j.x2), tol),
    };

    let oracle = oracle_derivatives(s, u0, tol)?;
    let classification_oracle = classify_cusp(&oracle, tol);
    let agree = classification_fast == classification_oracle;
    let exclusion_respected = !scope.excluded().contains(&classification_oracle);
    Ok(SingularityReport {
        u0,
        reasons,
        scope,
        conditions,
        classification_fast,
        classification_oracle,
        agree,
        exclusion_respected,
        verified: agree && exclusion_respected,
        oracle_derivatives: oracle.derivs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::legendre::LegendreCurve;
    use approx::assert_relative_eq;

    fn tol() -> ToleranceSpec {
        ToleranceSpec::default()
    }

    fn surface(x1: &str, x2: &str, a: &str, b: &str, domain: [f64; 2], kind: SurfaceKind) -> HelicoidalSurface {
        let c = LegendreCurve::parse(x1, x2, a, b, domain, &tol()).unwrap();
        HelicoidalSurface::new(c, 1.0, kind).unwrap()
    }

    fn spacelike_screw(kind: SurfaceKind) -> HelicoidalSurface {
        surface(
            "u*cosh(u)-sinh(u)",
            "u*sinh(u)-cosh(u)+1",
            "cosh(u)",
            "sinh(u)",
            [-2.0, 2.0],
            kind,
        )
    }

    fn timelike_screw(kind: SurfaceKind) -> HelicoidalSurface {
        surface("u^2/2", "u^3/3", "u/sqrt(1-u^2)", "1/sqrt(1-u^2)", [-0.9, 0.9], kind)
    }

    #[test]
    fn sweep_finds_origin() {
        let s = spacelike_screw(SurfaceKind::Type1);
        let sweep = find_singular_points(&s, 64, &tol()).unwrap();
        assert_eq!(sweep.points.len(), 1);
        assert!(sweep.points[0].u0.abs() < 1e-12);
        assert_eq!(sweep.points[0].reasons, BTreeSet::from([SingularReason::BetaZero]));
        assert!(sweep.suspects.is_empty());

        let sweep = find_singular_points(&timelike_screw(SurfaceKind::Type2), 64, &tol()).unwrap();
        assert_eq!(sweep.points.len(), 1);
        assert!(sweep.points[0].u0.abs() < 1e-12);
    }

    #[test]
    fn sweep_reports_tangent_root() {
        // β = δ(-x1' b + x2' a) = u² with ν = (0, 1)
        let s = surface("-u^3/3", "1", "0", "1", [-1.0, 1.3], SurfaceKind::Type2);
        let sweep = find_singular_points(&s, 32, &tol()).unwrap();
        assert!(sweep.points.is_empty());
        assert_eq!(sweep.suspects.len(), 1);
        assert!(sweep.suspects[0].u.abs() < 1e-5);
    }

    #[test]
    fn grid_minimum() {
        let s = spacelike_screw(SurfaceKind::Type1);
        assert!(matches!(
            find_singular_points(&s, 8, &tol()),
            Err(SingularityError::GridTooSmall(8))
        ));
    }

    #[test]
    fn screw_examples_classify() {
        let r = classify_cuspidal_edge(&spacelike_screw(SurfaceKind::Type1), 0.0, &tol()).unwrap();
        assert_eq!(r.scope, TheoremScope::BetaZeroNormalNonzero);
        assert_eq!(r.classification_fast, CuspType::Cusp25);
        assert!(r.verified);
        assert_eq!(r.conditions["a"], 1.0);
        assert_relative_eq!(r.conditions["beta'*l"], 1.0, max_relative = 1e-14);

        let r = classify_cuspidal_edge(&timelike_screw(SurfaceKind::Type2), 0.0, &tol()).unwrap();
        assert_eq!(r.classification_oracle, CuspType::Cusp25);
        assert!(r.verified);
        assert_eq!(r.conditions["b"], 1.0);

        // the same curves swept the other way fall into the first case
        let r = classify_cuspidal_edge(&spacelike_screw(SurfaceKind::Type2), 0.0, &tol()).unwrap();
        assert_eq!(r.scope, TheoremScope::BetaAndNormalZero);
        assert_eq!(r.cusp_type(), CuspType::Cusp35);
        assert!(r.verified);
        let r = classify_cuspidal_edge(&timelike_screw(SurfaceKind::Type1), 0.0, &tol()).unwrap();
        assert_eq!(r.cusp_type(), CuspType::Cusp35);
        assert!(r.verified);
    }

    #[test]
    fn regular_point_rejected() {
        let s = spacelike_screw(SurfaceKind::Type1);
        assert!(matches!(
            classify_cuspidal_edge(&s, 0.5, &tol()),
            Err(SingularityError::NotSingular(_))
        ));
    }

    #[test]
    fn table_values_at_origin() {
        let t = profile_coeffs(&spacelike_screw(SurfaceKind::Type1), 0.0, &tol()).unwrap();
        assert_relative_eq!(t.coeffs[1][0], 1.0, max_relative = 1e-15);
        assert_eq!(t.coeffs[1][1], 0.0);
        assert_eq!(t.coeffs[2][0], 0.0);
        assert_eq!(t.coeffs[3][1], 0.0);
        let t = profile_coeffs(&timelike_screw(SurfaceKind::Type2), 0.0, &tol()).unwrap();
        assert_relative_eq!(t.coeffs[1][0], 1.0, max_relative = 1e-15);
        assert_eq!(t.coeffs[1][1], 0.0);
    }

    #[test]
    fn identities_hold() {
        for s in [spacelike_screw(SurfaceKind::Type1), spacelike_screw(SurfaceKind::Type2)] {
            for u in [-1.3, 0.0, 0.7] {
                assert!(det_identity_check(&s, u, &tol()).unwrap() < 1e-12);
                assert!(table_oracle_check(&s, u, &tol()).unwrap() < 1e-12);
            }
        }
        for s in [timelike_screw(SurfaceKind::Type1), timelike_screw(SurfaceKind::Type2)] {
            for u in [-0.5, 0.0, 0.5] {
                assert!(det_identity_check(&s, u, &tol()).unwrap() < 1e-12);
                assert!(table_oracle_check(&s, u, &tol()).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn constructed_theorem_cases() {
        let s = surface(
            "u*sinh(u)-cosh(u)+1",
            "u*cosh(u)-sinh(u)",
            "sinh(u)",
            "cosh(u)",
            [-1.5, 1.5],
            SurfaceKind::Type1,
        );
        let sweep = find_singular_points(&s, 64, &tol()).unwrap();
        assert_eq!(sweep.points.len(), 1);
        assert_eq!(
            sweep.points[0].reasons,
            BTreeSet::from([SingularReason::BetaZero, SingularReason::ProfileAxisZero])
        );
        let r = classify_cuspidal_edge(&s, sweep.points[0].u0, &tol()).unwrap();
        assert_eq!(r.scope, TheoremScope::BetaAndNormalZero);
        assert_eq!(
            (r.classification_fast, r.classification_oracle),
            (CuspType::Cusp35, CuspType::Cusp35)
        );

        let s = surface(
            "sinh(u)",
            "cosh(u)-1",
            "sinh(u)",
            "cosh(u)",
            [-1.5, 1.5],
            SurfaceKind::Type1,
        );
        let sweep = find_singular_points(&s, 64, &tol()).unwrap();
        assert_eq!(sweep.points.len(), 1);
        assert_eq!(
            sweep.points[0].reasons,
            BTreeSet::from([SingularReason::ProfileAxisZero])
        );
        assert!(sweep.suspects.is_empty());
        let r = classify_cuspidal_edge(&s, sweep.points[0].u0, &tol()).unwrap();
        assert_eq!(r.scope, TheoremScope::NormalZeroBetaNonzero);
        assert_eq!(
            (r.classification_fast, r.classification_oracle),
            (CuspType::Cusp23, CuspType::Cusp23)
        );
    }

    #[test]
    fn vanishing_normal_component_is_not_an_error() {
        // ν = (0, 1): a ≡ 0, so type 1 is singular exactly where x2 = 0
        let s = surface("u", "0.5", "0", "1", [-1.0, 1.0], SurfaceKind::Type1);
        assert!(find_singular_points(&s, 32, &tol()).unwrap().points.is_empty());
        let s = surface("u", "0", "0", "1", [-1.0, 1.0], SurfaceKind::Type1);
        assert!(matches!(
            find_singular_points(&s, 32, &tol()),
            Err(SingularityError::NotIsolated(..))
        ));
    }

    #[test]
    fn singular_point_off_the_axis() {
        // γ = (u²/2, 1 + u³/3) keeps x2 away from 0 near the cusp
        let s = surface(
            "u^2/2",
            "1 + u^3/3",
            "u/sqrt(1-u^2)",
            "1/sqrt(1-u^2)",
            [-0.5, 0.5],
            SurfaceKind::Type1,
        );
        let r = classify_cuspidal_edge(&s, 0.0, &tol()).unwrap();
        assert_eq!(r.scope, TheoremScope::OutsideTheoremScope);
        assert_eq!(r.classification_fast, CuspType::Cusp23);
        assert!(r.verified);
    }
}
