//! Determinant criteria for `(i, j)`-cusps of plane curves.
//!
//! A plane curve with `γ'(u0) = 0` has at `u0`
//!
//! ```text
//! (2,3)  iff  det(γ'', γ''') ≠ 0
//! (2,5)  iff  γ'' ≠ 0, γ''' = k γ'', det(γ'', 3γ⁽⁵⁾ - 10k γ⁽⁴⁾) ≠ 0
//! (3,4)  iff  γ'' = 0, det(γ''', γ⁽⁴⁾) ≠ 0
//! (3,5)  iff  γ'' = 0, det(γ''', γ⁽⁴⁾) = 0, det(γ''', γ⁽⁵⁾) ≠ 0
//! ```
//!
//! Every zero test goes through [`ToleranceSpec`] with the summand scale of
//! the quantity tested.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::tolerance::ToleranceSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspType {
    Cusp23,
    Cusp25,
    Cusp34,
    Cusp35,
    RegularPoint,
    Unclassified,
}

impl CuspType {
    /// The `(i, j)` pair of a cusp.
    pub fn indices(self) -> Option<(u8, u8)> {
        match self {
            CuspType::Cusp23 => Some((2, 3)),
            CuspType::Cusp25 => Some((2, 5)),
            CuspType::Cusp34 => Some((3, 4)),
            CuspType::Cusp35 => Some((3, 5)),
            CuspType::RegularPoint | CuspType::Unclassified => None,
        }
    }

    /// Name of the corresponding surface singularity, e.g.
    /// `(2,5)-cuspidal-edge`.
    pub fn edge_label(self) -> String {
        match self.indices() {
            Some((i, j)) => format!("({i},{j})-cuspidal-edge"),
            None if self == CuspType::RegularPoint => "regular".into(),
            None => "unclassified".into(),
        }
    }
}

impl fmt::Display for CuspType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.indices() {
            Some((i, j)) => write!(f, "({i},{j})-cusp"),
            None if *self == CuspType::RegularPoint => f.write_str("regular"),
            None => f.write_str("unclassified"),
        }
    }
}

impl Serialize for CuspType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Derivatives `γ⁽¹⁾, …, γ⁽⁵⁾` at one point with componentwise scales.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurveDerivatives {
    pub derivs: [[f64; 2]; 5],
    pub scales: [[f64; 2]; 5],
}

impl CurveDerivatives {
    /// Uses the magnitudes of the derivatives as their scales.
    pub fn exact(derivs: [[f64; 2]; 5]) -> Self {
        CurveDerivatives {
            derivs,
            scales: derivs.map(|d| d.map(f64::abs)),
        }
    }

    /// `γ⁽ⁱ⁾` for `i = 1..=5`.
    pub fn get(&self, i: usize) -> [f64; 2] {
        self.derivs[i - 1]
    }

    fn scale(&self, i: usize) -> [f64; 2] {
        self.scales[i - 1]
    }

    fn is_zero_vector(&self, i: usize, tol: &ToleranceSpec) -> bool {
        let (d, s) = (self.get(i), self.scale(i));
        tol.is_zero(d[0], s[0]) && tol.is_zero(d[1], s[1])
    }

    /// `det(γ⁽ⁱ⁾, γ⁽ʲ⁾)` and its scale.
    fn det(&self, i: usize, j: usize) -> (f64, f64) {
        let (p, q) = (self.get(i), self.get(j));
        let (sp, sq) = (self.scale(i), self.scale(j));
        (p[0] * q[1] - p[1] * q[0], sp[0] * sq[1] + sp[1] * sq[0])
    }
}

pub fn classify_cusp(d: &CurveDerivatives, tol: &ToleranceSpec) -> CuspType {
    if !d.is_zero_vector(1, tol) {
        return CuspType::RegularPoint;
    }
    let (det23, s23) = d.det(2, 3);
    if tol.is_nonzero(det23, s23) {
        return CuspType::Cusp23;
    }
    if !d.is_zero_vector(2, tol) {
        let (g2, g3, g4, g5) = (d.get(2), d.get(3), d.get(4), d.get(5));
        let k = (g3[0] * g2[0] + g3[1] * g2[1]) / (g2[0] * g2[0] + g2[1] * g2[1]);
        let residual = ((g3[0] - k * g2[0]).powi(2) + (g3[1] - k * g2[1]).powi(2)).sqrt();
        let s3 = d.scale(3);
        let s2 = d.scale(2);
        let residual_scale = s3[0].hypot(s3[1]) + k.abs() * s2[0].hypot(s2[1]);
        if !tol.is_zero(residual, residual_scale) {
            return CuspType::Unclassified;
        }
        let w = [3.0 * g5[0] - 10.0 * k * g4[0], 3.0 * g5[1] - 10.0 * k * g4[1]];
        let (s4, s5) = (d.scale(4), d.scale(5));
        let ws = [
            3.0 * s5[0] + 10.0 * k.abs() * s4[0],
            3.0 * s5[1] + 10.0 * k.abs() * s4[1],
        ];
        let det = g2[0] * w[1] - g2[1] * w[0];
        let det_scale = s2[0] * ws[1] + s2[1] * ws[0];
        return if tol.is_nonzero(det, det_scale) {
            CuspType::Cusp25
        } else {
            CuspType::Unclassified
        };
    }
    let (det34, s34) = d.det(3, 4);
    if tol.is_nonzero(det34, s34) {
        return CuspType::Cusp34;
    }
    let (det35, s35) = d.det(3, 5);
    if tol.is_nonzero(det35, s35) {
        return CuspType::Cusp35;
    }
    CuspType::Unclassified
}
