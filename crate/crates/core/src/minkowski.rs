//! Lorentzian linear algebra in ℝ³₁ and ℝ²₁.
//!
//! The pseudo inner product has signature (−,+,+) in three dimensions and
//! (−,+) in the plane; the first coordinate is the timelike one.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tolerance::ToleranceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("vector component {index} is not finite ({value})")]
pub struct NonFiniteComponent {
    pub index: usize,
    pub value: f64,
}

/// A vector of Minkowski 3-space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3M {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// A vector of the Minkowski plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2M {
    pub x1: f64,
    pub x2: f64,
}

fn check_finite(components: &[f64]) -> Result<(), NonFiniteComponent> {
    match components.iter().position(|c| !c.is_finite()) {
        Some(index) => Err(NonFiniteComponent {
            index,
            value: components[index],
        }),
        None => Ok(()),
    }
}

impl Vec3M {
    pub const ZERO: Vec3M = Vec3M::raw(0.0, 0.0, 0.0);

    /// Builds a vector, rejecting NaN and infinite components.
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self, NonFiniteComponent> {
        check_finite(&[x1, x2, x3])?;
        Ok(Vec3M::raw(x1, x2, x3))
    }

    pub(crate) const fn raw(x1: f64, x2: f64, x3: f64) -> Self {
        Vec3M { x1, x2, x3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// ⟨x, y⟩ = −x₁y₁ + x₂y₂ + x₃y₃.
    #[inline]
    pub fn dot(self, other: Vec3M) -> f64 {
        pseudo_dot3(self, other)
    }

    #[inline]
    pub fn wedge(self, other: Vec3M) -> Vec3M {
        pseudo_wedge(self, other)
    }

    /// Euclidean length, used for residual norms.
    pub fn euclidean_norm(self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    pub fn max_abs(self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }
}

impl Vec2M {
    pub fn new(x1: f64, x2: f64) -> Result<Self, NonFiniteComponent> {
        check_finite(&[x1, x2])?;
        Ok(Vec2M::raw(x1, x2))
    }

    pub(crate) const fn raw(x1: f64, x2: f64) -> Self {
        Vec2M { x1, x2 }
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.x1, self.x2]
    }

    #[inline]
    pub fn dot(self, other: Vec2M) -> f64 {
        pseudo_dot2(self, other)
    }

    pub fn euclidean_norm(self) -> f64 {
        self.x1.hypot(self.x2)
    }
}

impl From<[f64; 3]> for Vec3M {
    fn from(a: [f64; 3]) -> Self {
        Vec3M::raw(a[0], a[1], a[2])
    }
}

impl From<Vec3M> for [f64; 3] {
    fn from(v: Vec3M) -> Self {
        v.to_array()
    }
}

impl From<[f64; 2]> for Vec2M {
    fn from(a: [f64; 2]) -> Self {
        Vec2M::raw(a[0], a[1])
    }
}

impl From<Vec2M> for [f64; 2] {
    fn from(v: Vec2M) -> Self {
        v.to_array()
    }
}

impl Index<usize> for Vec3M {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x1,
            1 => &self.x2,
            2 => &self.x3,
            _ => panic!("Vec3M index {i} out of range"),
        }
    }
}

impl Add for Vec3M {
    type Output = Vec3M;
    fn add(self, o: Vec3M) -> Vec3M {
        Vec3M::raw(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl Sub for Vec3M {
    type Output = Vec3M;
    fn sub(self, o: Vec3M) -> Vec3M {
        Vec3M::raw(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for Vec3M {
    type Output = Vec3M;
    fn neg(self) -> Vec3M {
        Vec3M::raw(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<Vec3M> for f64 {
    type Output = Vec3M;
    fn mul(self, v: Vec3M) -> Vec3M {
        Vec3M::raw(self * v.x1, self * v.x2, self * v.x3)
    }
}

impl Add for Vec2M {
    type Output = Vec2M;
    fn add(self, o: Vec2M) -> Vec2M {
        Vec2M::raw(self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl Sub for Vec2M {
    type Output = Vec2M;
    fn sub(self, o: Vec2M) -> Vec2M {
        Vec2M::raw(self.x1 - o.x1, self.x2 - o.x2)
    }
}

impl Mul<Vec2M> for f64 {
    type Output = Vec2M;
    fn mul(self, v: Vec2M) -> Vec2M {
        Vec2M::raw(self * v.x1, self * v.x2)
    }
}

impl fmt::Display for Vec3M {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

pub fn pseudo_dot3(x: Vec3M, y: Vec3M) -> f64 {
    -x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3
}

pub fn pseudo_dot2(x: Vec2M, y: Vec2M) -> f64 {
    -x.x1 * y.x1 + x.x2 * y.x2
}

/// Cofactor expansion of the determinant with top row (−e₁, e₂, e₃).
pub fn pseudo_wedge(x: Vec3M, y: Vec3M) -> Vec3M {
    Vec3M::raw(
        -(x.x2 * y.x3 - x.x3 * y.x2),
        -(x.x1 * y.x3 - x.x3 * y.x1),
        x.x1 * y.x2 - x.x2 * y.x1,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
}

impl fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Lightlike => "lightlike",
        })
    }
}

/// Vectors with a Lorentzian quadratic form.
pub trait PseudoNorm: Copy {
    /// ⟨x, x⟩.
    fn pseudo_norm_sq(self) -> f64;
    /// Sum of the magnitudes of the squared components entering ⟨x, x⟩.
    fn quadratic_scale(self) -> f64;
    fn is_zero_vector(self, tol: &ToleranceSpec) -> bool;
}

impl PseudoNorm for Vec3M {
    fn pseudo_norm_sq(self) -> f64 {
        pseudo_dot3(self, self)
    }
    fn quadratic_scale(self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }
    fn is_zero_vector(self, tol: &ToleranceSpec) -> bool {
        self.max_abs() <= tol.abs
    }
}

impl PseudoNorm for Vec2M {
    fn pseudo_norm_sq(self) -> f64 {
        pseudo_dot2(self, self)
    }
    fn quadratic_scale(self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2
    }
    fn is_zero_vector(self, tol: &ToleranceSpec) -> bool {
        self.x1.abs().max(self.x2.abs()) <= tol.abs
    }
}

/// Causal character of `x`. The zero vector counts as spacelike.
pub fn causal_character<V: PseudoNorm>(x: V, tol: &ToleranceSpec) -> CausalCharacter {
    if x.is_zero_vector(tol) {
        return CausalCharacter::Spacelike;
    }
    let q = x.pseudo_norm_sq();
    if tol.is_zero(q, x.quadratic_scale()) {
        CausalCharacter::Lightlike
    } else if q > 0.0 {
        CausalCharacter::Spacelike
    } else {
        CausalCharacter::Timelike
    }
}

/// Which branch of Δ = S¹₁ ∪ H¹ a plane vector lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaMembership {
    /// ⟨v, v⟩ = 1.
    S11,
    /// ⟨v, v⟩ = −1.
    H1,
    None,
}

pub fn delta_membership(v: Vec2M, tol: &ToleranceSpec) -> DeltaMembership {
    let q = pseudo_dot2(v, v);
    let scale = v.quadratic_scale().max(1.0);
    if tol.is_zero(q - 1.0, scale) {
        DeltaMembership::S11
    } else if tol.is_zero(q + 1.0, scale) {
        DeltaMembership::H1
    } else {
        DeltaMembership::None
    }
}
