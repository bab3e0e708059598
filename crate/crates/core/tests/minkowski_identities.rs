use frontal_helicoid::minkowski::{causal_character, pseudo_dot3, pseudo_wedge, Vec3M};
use frontal_helicoid::ToleranceSpec;
use proptest::prelude::*;

fn vec3() -> impl Strategy<Value = Vec3M> {
    [-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64].prop_map(Vec3M::from)
}

proptest! {
    /// `⟨x∧y, x∧y⟩ = ⟨x,y⟩² - ⟨x,x⟩⟨y,y⟩`.
    #[test]
    fn lagrange_identity(x in vec3(), y in vec3()) {
        let w = pseudo_wedge(x, y);
        let lhs = pseudo_dot3(w, w);
        let rhs = pseudo_dot3(x, y).powi(2) - pseudo_dot3(x, x) * pseudo_dot3(y, y);
        let scale = (x.euclidean_norm() * y.euclidean_norm()).powi(2).max(1.0);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
    }

    /// `⟨x∧y, z⟩ = det(x, y, z)`.
    #[test]
    fn wedge_is_a_determinant(x in vec3(), y in vec3(), z in vec3()) {
        let det = x.x1 * (y.x2 * z.x3 - y.x3 * z.x2) - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1)
            + x.x3 * (y.x1 * z.x2 - y.x2 * z.x1);
        let scale = x.euclidean_norm() * y.euclidean_norm() * z.euclidean_norm();
        prop_assert!((pseudo_dot3(pseudo_wedge(x, y), z) - det).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn boosts_preserve_causal_character(x in vec3(), t in -2.0..2.0f64) {
        let (s, c) = (t.sinh(), t.cosh());
        let y = Vec3M::new(c * x.x1 + s * x.x2, s * x.x1 + c * x.x2, x.x3).unwrap();
        let tol = ToleranceSpec::new(1e-9, 1e-9);
        let (cx, cy) = (causal_character(x, &tol), causal_character(y, &tol));
        prop_assume!(pseudo_dot3(x, x).abs() > 1e-6);
        prop_assert_eq!(cx, cy);
        prop_assert!((pseudo_dot3(x, x) - pseudo_dot3(y, y)).abs() <= 1e-9 * y.euclidean_norm().powi(2).max(1.0));
    }
}
