use frontal_helicoid::expr::parse;
use frontal_helicoid::singularity::{classify_cusp, CurveDerivatives, CuspType};
use frontal_helicoid::ToleranceSpec;
use proptest::prelude::*;

/// Derivatives at 0 of `M (φ(u)^i, φ(u)^j)` with `φ(u) = c u + d u²`.
fn germ(i: u32, j: u32, c: f64, d: f64, m: [[f64; 2]; 2]) -> CurveDerivatives {
    let tol = ToleranceSpec::default();
    let phi = format!("(({c})*u + ({d})*u^2)");
    let comp = |r: [f64; 2]| format!("({})*{phi}^{i} + ({})*{phi}^{j}", r[0], r[1]);
    let x = parse(&comp(m[0])).unwrap().eval_scaled(0.0, 5, &tol).unwrap();
    let y = parse(&comp(m[1])).unwrap().eval_scaled(0.0, 5, &tol).unwrap();
    let mut out = CurveDerivatives::exact([[0.0; 2]; 5]);
    for k in 1..=5 {
        out.derivs[k - 1] = [x.derivative(k), y.derivative(k)];
        out.scales[k - 1] = [x.derivative_scale(k), y.derivative_scale(k)];
    }
    out
}

fn nonzero() -> impl Strategy<Value = f64> {
    prop_oneof![0.3..3.0f64, -3.0..-0.3f64]
}

fn linear_map() -> impl Strategy<Value = [[f64; 2]; 2]> {
    [[-2.0..2.0f64, -2.0..2.0f64], [-2.0..2.0f64, -2.0..2.0f64]]
        .prop_filter("invertible", |m| (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() > 0.1)
}

fn model() -> impl Strategy<Value = ((u32, u32), CuspType)> {
    prop_oneof![
        Just(((2, 3), CuspType::Cusp23)),
        Just(((2, 5), CuspType::Cusp25)),
        Just(((3, 4), CuspType::Cusp34)),
        Just(((3, 5), CuspType::Cusp35)),
        Just(((1, 2), CuspType::RegularPoint)),
    ]
}

proptest! {
    /// The type of a germ is unchanged by reparameterization and by
    /// invertible linear maps of the plane.
    #[test]
    fn stable_under_reparameterization(((i, j), expected) in model(), c in nonzero(), d in -1.0..1.0f64, m in linear_map()) {
        prop_assert_eq!(classify_cusp(&germ(i, j, c, d, m), &ToleranceSpec::default()), expected);
    }
}
