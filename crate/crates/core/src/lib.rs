//! Helicoidal surfaces of non-lightlike Legendre curves in Minkowski 3-space.
//!
//! A profile curve with unit normal in the Minkowski plane is swept by a
//! screw motion into a surface. The crate computes the surface, its
//! lightcone frame and basic invariants, finds its singular points and
//! classifies each cuspidal edge by two independent methods.
//!
//! ```
//! use frontal_helicoid::helicoid::{HelicoidalSurface, SurfaceKind};
//! use frontal_helicoid::legendre::LegendreCurve;
//! use frontal_helicoid::singularity::{classify_cuspidal_edge, CuspType};
//! use frontal_helicoid::ToleranceSpec;
//!
//! let tol = ToleranceSpec::default();
//! let curve = LegendreCurve::parse("u^2/2", "u^3/3", "u/sqrt(1 - u^2)", "1/sqrt(1 - u^2)", [-0.9, 0.9], &tol)?;
//! let surface = HelicoidalSurface::new(curve, 1.0, SurfaceKind::Type2)?;
//! let report = classify_cuspidal_edge(&surface, 0.0, &tol)?;
//! assert_eq!(report.cusp_type(), CuspType::Cusp25);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod expr;
pub mod helicoid;
pub mod jet;
pub mod legendre;
pub mod meshio;
pub mod minkowski;
pub mod singularity;
pub mod tolerance;

pub use tolerance::ToleranceSpec;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/minkowski.md")]
    mod minkowski {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    mod expressions {}
    #[doc = include_str!("../../../book/src/legendre.md")]
    mod legendre {}
    #[doc = include_str!("../../../book/src/helicoids.md")]
    mod helicoids {}
    #[doc = include_str!("../../../book/src/singularities.md")]
    mod singularities {}
    #[doc = include_str!("../../../book/src/meshes.md")]
    mod meshes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
