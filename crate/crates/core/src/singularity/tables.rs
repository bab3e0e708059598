//! Closed forms for the derivatives of the untwisted profile curves.
//!
//! Type 1 rotates the profile by `θ = x1/λ` and type 2 boosts it by
//! `φ = x2/λ`:
//!
//! ```text
//! γ1⁽ⁱ⁾ = (A_i cos θ + B_i sin θ, -B_i cos θ + A_i sin θ)
//! γ2⁽ⁱ⁾ = (C_i cosh φ + D_i sinh φ, D_i cosh φ + C_i sinh φ)
//! ```
//!
//! The coefficients are polynomials in `a, b`, the derivatives of `β` up to
//! the fourth and of `l` up to the third, the profile coordinate `x` (`x2`
//! for type 1, `x1` for type 2) and `1/λ`, written out one term per line.
//! Tests check them against direct jet differentiation.

/// Curve quantities at one parameter value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableInputs {
    pub a: f64,
    pub b: f64,
    /// `β` and its first four derivatives.
    pub beta: [f64; 5],
    /// `l` and its first three derivatives.
    pub l: [f64; 4],
    /// `x2` for type 1, `x1` for type 2.
    pub x: f64,
    pub lambda: f64,
}

/// `(A_i, B_i)` for `i = 1..=5`.
#[rustfmt::skip]
pub fn type1_coeffs(t: &TableInputs) -> [[f64; 2]; 5] {
    let TableInputs { a, b, x, lambda: lam, .. } = *t;
    let [be, be1, be2, be3, be4] = t.beta;
    let [l, l1, l2, l3] = t.l;
    let a1 = a * be;
    let b1 = -b * be * x / lam;
    let a2 = a * be1
        + b * be * l
        - b.powi(2) * be.powi(2) * x / lam.powi(2);
    let b2 = -b * be1 * x / lam
        - 2.0 * a * b * be.powi(2) / lam
        - a * be * l * x / lam;
    let a3 = a * be2
        + 2.0 * b * be1 * l
        + b * be * l1
        + a * be * l.powi(2)
        - 3.0 * a * b.powi(2) * be.powi(3) / lam.powi(2)
        - 3.0 * b.powi(2) * be * be1 * x / lam.powi(2)
        - 3.0 * a * b * be.powi(2) * l * x / lam.powi(2);
    let b3 = -3.0 * a.powi(2) * be.powi(2) * l / lam
        - 3.0 * b.powi(2) * be.powi(2) * l / lam
        + b.powi(3) * be.powi(3) * x / lam.powi(3)
        - b * be2 * x / lam
        - 6.0 * a * b * be * be1 / lam
        - 2.0 * a * be1 * l * x / lam
        - a * be * l1 * x / lam
        - b * be * l.powi(2) * x / lam;
    let a4 = a * be3
        + 3.0 * b * be1 * l1
        + 3.0 * b * be2 * l
        + b * be * l2
        + 3.0 * a * be1 * l.powi(2)
        + b * be * l.powi(3)
        - 3.0 * b.powi(2) * be1.powi(2) * x / lam.powi(2)
        + b.powi(4) * be.powi(4) * x / lam.powi(4)
        + 3.0 * a * be * l * l1
        - 6.0 * b.powi(3) * be.powi(3) * l / lam.powi(2)
        - 3.0 * a.powi(2) * be.powi(2) * l.powi(2) * x / lam.powi(2)
        - 4.0 * b.powi(2) * be.powi(2) * l.powi(2) * x / lam.powi(2)
        - 4.0 * b.powi(2) * be * be2 * x / lam.powi(2)
        - 18.0 * a * b.powi(2) * be.powi(2) * be1 / lam.powi(2)
        - 12.0 * a.powi(2) * b * be.powi(3) * l / lam.powi(2)
        - 4.0 * a * b * be.powi(2) * l1 * x / lam.powi(2)
        - 14.0 * a * b * be * be1 * l * x / lam.powi(2);
    let b4 = -4.0 * a.powi(2) * be.powi(2) * l1 / lam
        - 4.0 * b.powi(2) * be.powi(2) * l1 / lam
        - b * be3 * x / lam
        - 6.0 * a * b * be1.powi(2) / lam
        + 4.0 * a * b.powi(3) * be.powi(4) / lam.powi(3)
        - 8.0 * a * b * be * be2 / lam
        - 3.0 * a * be1 * l1 * x / lam
        - 3.0 * a * be2 * l * x / lam
        - a * be * l2 * x / lam
        - 14.0 * a.powi(2) * be * be1 * l / lam
        - 14.0 * b.powi(2) * be * be1 * l / lam
        - a * be * l.powi(3) * x / lam
        - 3.0 * b * be1 * l.powi(2) * x / lam
        - 14.0 * a * b * be.powi(2) * l.powi(2) / lam
        + 6.0 * b.powi(3) * be.powi(2) * be1 * x / lam.powi(3)
        - 3.0 * b * be * l * l1 * x / lam
        + 6.0 * a * b.powi(2) * be.powi(3) * l * x / lam.powi(3);
    let a5 = a * be4
        + 4.0 * b * be1 * l2
        + 6.0 * b * be2 * l1
        + 4.0 * b * be3 * l
        + b * be * l3
        + 6.0 * a * be2 * l.powi(2)
        + 3.0 * a * be * l1.powi(2)
        + a * be * l.powi(4)
        + 4.0 * b * be1 * l.powi(3)
        + 12.0 * a * be1 * l * l1
        + 4.0 * a * be * l * l2
        - 15.0 * a.powi(3) * be.powi(3) * l.powi(2) / lam.powi(2)
        + 6.0 * b * be * l.powi(2) * l1
        + 5.0 * a * b.powi(4) * be.powi(5) / lam.powi(4)
        - 10.0 * b.powi(3) * be.powi(3) * l1 / lam.powi(2)
        - 60.0 * a * b.powi(2) * be.powi(3) * l.powi(2) / lam.powi(2)
        - 10.0 * b.powi(2) * be1 * be2 * x / lam.powi(2)
        - 5.0 * b.powi(2) * be * be3 * x / lam.powi(2)
        - 45.0 * a * b.powi(2) * be * be1.powi(2) / lam.powi(2)
        - 30.0 * a * b.powi(2) * be.powi(2) * be2 / lam.powi(2)
        - 20.0 * a.powi(2) * b * be.powi(3) * l1 / lam.powi(2)
        - 50.0 * b.powi(3) * be.powi(2) * be1 * l / lam.powi(2)
        + 10.0 * b.powi(4) * be.powi(3) * be1 * x / lam.powi(4)
        - 20.0 * a * b * be1.powi(2) * l * x / lam.powi(2)
        - 5.0 * a * b * be.powi(2) * l2 * x / lam.powi(2)
        - 100.0 * a.powi(2) * b * be.powi(2) * be1 * l / lam.powi(2)
        - 15.0 * a * b * be.powi(2) * l.powi(3) * x / lam.powi(2)
        + 10.0 * a * b.powi(3) * be.powi(4) * l * x / lam.powi(4)
        - 20.0 * a.powi(2) * be * be1 * l.powi(2) * x / lam.powi(2)
        - 25.0 * b.powi(2) * be * be1 * l.powi(2) * x / lam.powi(2)
        - 10.0 * a.powi(2) * be.powi(2) * l * l1 * x / lam.powi(2)
        - 15.0 * b.powi(2) * be.powi(2) * l * l1 * x / lam.powi(2)
        - 25.0 * a * b * be * be1 * l1 * x / lam.powi(2)
        - 25.0 * a * b * be * be2 * l * x / lam.powi(2);
    let b5 = -20.0 * a.powi(2) * be1.powi(2) * l / lam
        - 5.0 * a.powi(2) * be.powi(2) * l2 / lam
        - 20.0 * b.powi(2) * be1.powi(2) * l / lam
        - 5.0 * b.powi(2) * be.powi(2) * l2 / lam
        + 10.0 * b.powi(4) * be.powi(4) * l / lam.powi(3)
        - b.powi(5) * be.powi(5) * x / lam.powi(5)
        - b * be4 * x / lam
        - 15.0 * a.powi(2) * be.powi(2) * l.powi(3) / lam
        - 15.0 * b.powi(2) * be.powi(2) * l.powi(3) / lam
        - 20.0 * a * b * be1 * be2 / lam
        - 10.0 * a * b * be * be3 / lam
        - 4.0 * a * be1 * l2 * x / lam
        - 6.0 * a * be2 * l1 * x / lam
        - 4.0 * a * be3 * l * x / lam
        - a * be * l3 * x / lam
        + 30.0 * a.powi(2) * b.powi(2) * be.powi(4) * l / lam.powi(3)
        + 10.0 * b.powi(3) * be.powi(3) * l.powi(2) * x / lam.powi(3)
        - 25.0 * a.powi(2) * be * be1 * l1 / lam
        - 25.0 * a.powi(2) * be * be2 * l / lam
        - 25.0 * b.powi(2) * be * be1 * l1 / lam
        - 25.0 * b.powi(2) * be * be2 * l / lam
        - 4.0 * a * be1 * l.powi(3) * x / lam
        - 6.0 * b * be2 * l.powi(2) * x / lam
        - 3.0 * b * be * l1.powi(2) * x / lam
        - b * be * l.powi(4) * x / lam
        + 40.0 * a * b.powi(3) * be.powi(3) * be1 / lam.powi(3)
        + 15.0 * b.powi(3) * be * be1.powi(2) * x / lam.powi(3)
        + 10.0 * b.powi(3) * be.powi(2) * be2 * x / lam.powi(3)
        - 12.0 * b * be1 * l * l1 * x / lam
        - 4.0 * b * be * l * l2 * x / lam
        + 15.0 * a.powi(2) * b * be.powi(3) * l.powi(2) * x / lam.powi(3)
        - 90.0 * a * b * be * be1 * l.powi(2) / lam
        - 50.0 * a * b * be.powi(2) * l * l1 / lam
        - 6.0 * a * be * l.powi(2) * l1 * x / lam
        + 10.0 * a * b.powi(2) * be.powi(3) * l1 * x / lam.powi(3)
        + 50.0 * a * b.powi(2) * be.powi(2) * be1 * l * x / lam.powi(3);
    [[a1, b1], [a2, b2], [a3, b3], [a4, b4], [a5, b5]]
}

/// `(C_i, D_i)` for `i = 1..=5`.
#[rustfmt::skip]
pub fn type2_coeffs(t: &TableInputs) -> [[f64; 2]; 5] {
    let TableInputs { a, b, x, lambda: lam, .. } = *t;
    let [be, be1, be2, be3, be4] = t.beta;
    let [l, l1, l2, l3] = t.l;
    let c1 = b * be;
    let d1 = a * be * x / lam;
    let c2 = b * be1
        + a * be * l
        + a.powi(2) * be.powi(2) * x / lam.powi(2);
    let d2 = 2.0 * a * b * be.powi(2) / lam
        + a * be1 * x / lam
        + b * be * l * x / lam;
    let c3 = b * be2
        + b * be * l.powi(2)
        + 2.0 * a * be1 * l
        + a * be * l1
        + 3.0 * a.powi(2) * b * be.powi(3) / lam.powi(2)
        + 3.0 * a.powi(2) * be * be1 * x / lam.powi(2)
        + 3.0 * a * b * be.powi(2) * l * x / lam.powi(2);
    let d3 = 3.0 * a.powi(2) * be.powi(2) * l / lam
        + 3.0 * b.powi(2) * be.powi(2) * l / lam
        + a.powi(3) * be.powi(3) * x / lam.powi(3)
        + a * be2 * x / lam
        + a * be * l.powi(2) * x / lam
        + 6.0 * a * b * be * be1 / lam
        + 2.0 * b * be1 * l * x / lam
        + b * be * l1 * x / lam;
    let c4 = b * be3
        + a * be * l.powi(3)
        + 3.0 * b * be1 * l.powi(2)
        + 3.0 * a * be1 * l1
        + 3.0 * a * be2 * l
        + a * be * l2
        + 6.0 * a.powi(3) * be.powi(3) * l / lam.powi(2)
        + 3.0 * a.powi(2) * be1.powi(2) * x / lam.powi(2)
        + a.powi(4) * be.powi(4) * x / lam.powi(4)
        + 3.0 * b * be * l * l1
        + 18.0 * a.powi(2) * b * be.powi(2) * be1 / lam.powi(2)
        + 12.0 * a * b.powi(2) * be.powi(3) * l / lam.powi(2)
        + 4.0 * a.powi(2) * be.powi(2) * l.powi(2) * x / lam.powi(2)
        + 3.0 * b.powi(2) * be.powi(2) * l.powi(2) * x / lam.powi(2)
        + 4.0 * a.powi(2) * be * be2 * x / lam.powi(2)
        + 4.0 * a * b * be.powi(2) * l1 * x / lam.powi(2)
        + 14.0 * a * b * be * be1 * l * x / lam.powi(2);
    let d4 = 6.0 * a * b * be1.powi(2) / lam
        + 4.0 * a.powi(3) * b * be.powi(4) / lam.powi(3)
        + 4.0 * a.powi(2) * be.powi(2) * l1 / lam
        + 4.0 * b.powi(2) * be.powi(2) * l1 / lam
        + a * be3 * x / lam
        + 3.0 * a * be1 * l.powi(2) * x / lam
        + b * be * l.powi(3) * x / lam
        + 14.0 * a * b * be.powi(2) * l.powi(2) / lam
        + 6.0 * a.powi(3) * be.powi(2) * be1 * x / lam.powi(3)
        + 8.0 * a * b * be * be2 / lam
        + 3.0 * b * be1 * l1 * x / lam
        + 3.0 * b * be2 * l * x / lam
        + b * be * l2 * x / lam
        + 14.0 * a.powi(2) * be * be1 * l / lam
        + 14.0 * b.powi(2) * be * be1 * l / lam
        + 6.0 * a.powi(2) * b * be.powi(3) * l * x / lam.powi(3)
        + 3.0 * a * be * l * l1 * x / lam;
    let c5 = b * be4
        + 4.0 * a * be1 * l.powi(3)
        + 6.0 * b * be2 * l.powi(2)
        + 3.0 * b * be * l1.powi(2)
        + b * be * l.powi(4)
        + 4.0 * a * be1 * l2
        + 6.0 * a * be2 * l1
        + 4.0 * a * be3 * l
        + a * be * l3
        + 6.0 * a * be * l.powi(2) * l1
        + 5.0 * a.powi(4) * b * be.powi(5) / lam.powi(4)
        + 10.0 * a.powi(3) * be.powi(3) * l1 / lam.powi(2)
        + 12.0 * b * be1 * l * l1
        + 4.0 * b * be * l * l2
        + 15.0 * b.powi(3) * be.powi(3) * l.powi(2) / lam.powi(2)
        + 45.0 * a.powi(2) * b * be * be1.powi(2) / lam.powi(2)
        + 30.0 * a.powi(2) * b * be.powi(2) * be2 / lam.powi(2)
        + 20.0 * a * b.powi(2) * be.powi(3) * l1 / lam.powi(2)
        + 50.0 * a.powi(3) * be.powi(2) * be1 * l / lam.powi(2)
        + 10.0 * a.powi(4) * be.powi(3) * be1 * x / lam.powi(4)
        + 60.0 * a.powi(2) * b * be.powi(3) * l.powi(2) / lam.powi(2)
        + 10.0 * a.powi(2) * be1 * be2 * x / lam.powi(2)
        + 5.0 * a.powi(2) * be * be3 * x / lam.powi(2)
        + 100.0 * a * b.powi(2) * be.powi(2) * be1 * l / lam.powi(2)
        + 15.0 * a * b * be.powi(2) * l.powi(3) * x / lam.powi(2)
        + 10.0 * a.powi(3) * b * be.powi(4) * l * x / lam.powi(4)
        + 25.0 * a.powi(2) * be * be1 * l.powi(2) * x / lam.powi(2)
        + 20.0 * b.powi(2) * be * be1 * l.powi(2) * x / lam.powi(2)
        + 15.0 * a.powi(2) * be.powi(2) * l * l1 * x / lam.powi(2)
        + 10.0 * b.powi(2) * be.powi(2) * l * l1 * x / lam.powi(2)
        + 20.0 * a * b * be1.powi(2) * l * x / lam.powi(2)
        + 5.0 * a * b * be.powi(2) * l2 * x / lam.powi(2)
        + 25.0 * a * b * be * be1 * l1 * x / lam.powi(2)
        + 25.0 * a * b * be * be2 * l * x / lam.powi(2);
    let d5 = 20.0 * a.powi(2) * be1.powi(2) * l / lam
        + 5.0 * a.powi(2) * be.powi(2) * l2 / lam
        + 10.0 * a.powi(4) * be.powi(4) * l / lam.powi(3)
        + 20.0 * b.powi(2) * be1.powi(2) * l / lam
        + 5.0 * b.powi(2) * be.powi(2) * l2 / lam
        + a.powi(5) * be.powi(5) * x / lam.powi(5)
        + a * be4 * x / lam
        + 15.0 * a.powi(2) * be.powi(2) * l.powi(3) / lam
        + 15.0 * b.powi(2) * be.powi(2) * l.powi(3) / lam
        + 6.0 * a * be2 * l.powi(2) * x / lam
        + 3.0 * a * be * l1.powi(2) * x / lam
        + a * be * l.powi(4) * x / lam
        + 4.0 * b * be1 * l.powi(3) * x / lam
        + 40.0 * a.powi(3) * b * be.powi(3) * be1 / lam.powi(3)
        + 15.0 * a.powi(3) * be * be1.powi(2) * x / lam.powi(3)
        + 10.0 * a.powi(3) * be.powi(2) * be2 * x / lam.powi(3)
        + 20.0 * a * b * be1 * be2 / lam
        + 10.0 * a * b * be * be3 / lam
        + 4.0 * b * be1 * l2 * x / lam
        + 6.0 * b * be2 * l1 * x / lam
        + 4.0 * b * be3 * l * x / lam
        + b * be * l3 * x / lam
        + 30.0 * a.powi(2) * b.powi(2) * be.powi(4) * l / lam.powi(3)
        + 10.0 * a.powi(3) * be.powi(3) * l.powi(2) * x / lam.powi(3)
        + 25.0 * a.powi(2) * be * be1 * l1 / lam
        + 25.0 * a.powi(2) * be * be2 * l / lam
        + 25.0 * b.powi(2) * be * be1 * l1 / lam
        + 25.0 * b.powi(2) * be * be2 * l / lam
        + 10.0 * a.powi(2) * b * be.powi(3) * l1 * x / lam.powi(3)
        + 12.0 * a * be1 * l * l1 * x / lam
        + 4.0 * a * be * l * l2 * x / lam
        + 15.0 * a * b.powi(2) * be.powi(3) * l.powi(2) * x / lam.powi(3)
        + 90.0 * a * b * be * be1 * l.powi(2) / lam
        + 50.0 * a * b * be.powi(2) * l * l1 / lam
        + 6.0 * b * be * l.powi(2) * l1 * x / lam
        + 50.0 * a.powi(2) * b * be.powi(2) * be1 * l * x / lam.powi(3);
    [[c1, d1], [c2, d2], [c3, d3], [c4, d4], [c5, d5]]
}
