//! Hyperbolic triangle solvers: laws of sines and cosines, right-triangle
//! relations, angle defect. Curvature is fixed at −1, matching the disk
//! metric, so a triangle's area equals its angle defect.

use std::f64::consts::PI;
use thiserror::Error;

/// Slack allowed on arccos/arccosh arguments before a violation is an error.
const CLAMP_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum TrigError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no such triangle: {0}")]
    NoSuchTriangle(String),
}

/// Sides a, b, c (hyperbolic lengths) with opposite angles alpha, beta, gamma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

fn check_angle(name: &str, v: f64) -> Result<(), TrigError> {
    if !v.is_finite() || v <= 0.0 || v >= PI {
        return Err(TrigError::Domain(format!("angle {name} = {v} not in (0, pi)")));
    }
    Ok(())
}

fn check_side(name: &str, v: f64) -> Result<(), TrigError> {
    if !v.is_finite() || v <= 0.0 {
        return Err(TrigError::Domain(format!("side {name} = {v} must be positive")));
    }
    Ok(())
}

fn acosh_clamped(x: f64) -> f64 {
    x.max(1.0).acosh()
}

/// Side opposite `alpha` from the three angles, by the second law of
/// cosines: cosh a = (cos α + cos β·cos γ)/(sin β·sin γ).
pub fn side_from_angles(alpha: f64, beta: f64, gamma: f64) -> Result<f64, TrigError> {
    check_angle("alpha", alpha)?;
    check_angle("beta", beta)?;
    check_angle("gamma", gamma)?;
    // the boundary itself is the Euclidean limit; CLAMP_TOL absorbs the
    // rounding of sums like pi/3 + pi/3 + pi/3
    if alpha + beta + gamma >= PI - CLAMP_TOL {
        return Err(TrigError::NoSuchTriangle(format!(
            "angle sum {} is not below pi",
            alpha + beta + gamma
        )));
    }
    let cosh_a = (alpha.cos() + beta.cos() * gamma.cos()) / (beta.sin() * gamma.sin());
    Ok(acosh_clamped(cosh_a))
}

/// Third side from two sides and the included angle (first law of cosines
/// with the minus sign: cosh c = cosh a·cosh b − sinh a·sinh b·cos γ).
///
/// Evaluated in the identical half-angle form
/// c = 2·arsinh √(sinh²((a−b)/2) + sinh a·sinh b·sin²(γ/2)),
/// which stays accurate down to the γ→0 limit c = |a−b|.
pub fn side_from_sides_angle(a: f64, b: f64, gamma: f64) -> Result<f64, TrigError> {
    check_side("a", a)?;
    check_side("b", b)?;
    if !gamma.is_finite() || !(0.0..=PI).contains(&gamma) {
        return Err(TrigError::Domain(format!("angle gamma = {gamma} not in [0, pi]")));
    }
    let half_diff = ((a - b) / 2.0).sinh();
    let half_sin = (gamma / 2.0).sin();
    let s = half_diff * half_diff + a.sinh() * b.sinh() * half_sin * half_sin;
    Ok(2.0 * s.sqrt().asinh())
}

/// Angle opposite `c` from the three sides (first law of cosines inverted).
pub fn angle_from_sides(a: f64, b: f64, c: f64) -> Result<f64, TrigError> {
    check_side("a", a)?;
    check_side("b", b)?;
    check_side("c", c)?;
    let cos_gamma = (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh());
    if cos_gamma.abs() > 1.0 + CLAMP_TOL {
        return Err(TrigError::NoSuchTriangle(format!(
            "sides ({a}, {b}, {c}) violate the triangle inequality"
        )));
    }
    Ok(cos_gamma.clamp(-1.0, 1.0).acos())
}

/// Side opposite `beta` by the law of sines: sinh b = sinh a·sin β/sin α.
pub fn side_from_sines(a: f64, alpha: f64, beta: f64) -> Result<f64, TrigError> {
    check_side("a", a)?;
    check_angle("alpha", alpha)?;
    check_angle("beta", beta)?;
    if alpha.sin() == 0.0 {
        return Err(TrigError::Domain("sin(alpha) vanishes".into()));
    }
    Ok((a.sinh() * beta.sin() / alpha.sin()).asinh())
}

/// Solve the right triangle with angles α, π/2, γ:
/// cosh a = cos α/sin γ, cosh b = cot α·cot γ, cosh c = cos γ/sin α.
/// The hypotenuse b satisfies cosh b = cosh a·cosh c (Pythagoras).
pub fn right_triangle_solve(alpha: f64, gamma: f64) -> Result<Triangle, TrigError> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(TrigError::Domain(format!("angle alpha = {alpha} must be positive")));
    }
    if !gamma.is_finite() || gamma <= 0.0 {
        return Err(TrigError::Domain(format!("angle gamma = {gamma} must be positive")));
    }
    if alpha + gamma >= PI / 2.0 - CLAMP_TOL {
        return Err(TrigError::NoSuchTriangle(format!(
            "alpha + gamma = {} is not below pi/2",
            alpha + gamma
        )));
    }
    let a = acosh_clamped(alpha.cos() / gamma.sin());
    let b = acosh_clamped(alpha.cos() * gamma.cos() / (alpha.sin() * gamma.sin()));
    let c = acosh_clamped(gamma.cos() / alpha.sin());
    Ok(Triangle {
        a,
        b,
        c,
        alpha,
        beta: PI / 2.0,
        gamma,
    })
}

/// Angle defect π − α − β − γ, the triangle's area at curvature −1.
pub fn defect(alpha: f64, beta: f64, gamma: f64) -> Result<f64, TrigError> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if !v.is_finite() || v < 0.0 {
            return Err(TrigError::Domain(format!("angle {name} = {v} must be nonnegative")));
        }
    }
    let sum = alpha + beta + gamma;
    if sum >= PI {
        return Err(TrigError::NoSuchTriangle(format!(
            "angle sum {sum} is not below pi"
        )));
    }
    Ok(PI - sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    #[test]
    fn side_from_angles_right_cases() {
        // cosh a = cos(pi/4)/sin(pi/8) = 1.847759065
        let a = side_from_angles(PI / 4.0, PI / 2.0, PI / 8.0).unwrap();
        assert!(close(a.cosh(), 1.847759065, 1e-9));
        assert!(close(a, 1.224226224, 1e-9));
        // cosh a = cot(pi/8) = 2.414213562
        let a = side_from_angles(PI / 8.0, PI / 2.0, PI / 8.0).unwrap();
        assert!(close(a.cosh(), 2.414213562, 1e-9));
        assert!(close(a, 1.528570919, 1e-9));
    }

    #[test]
    fn side_from_angles_euclidean_limit() {
        assert!(matches!(
            side_from_angles(PI / 3.0, PI / 3.0, PI / 3.0),
            Err(TrigError::NoSuchTriangle(_))
        ));
        assert!(matches!(
            side_from_angles(-0.1, PI / 3.0, PI / 3.0),
            Err(TrigError::Domain(_))
        ));
    }

    #[test]
    fn sas_pythagoras_case() {
        // arccosh(cosh² 1) = 1.513374007
        let c = side_from_sides_angle(1.0, 1.0, PI / 2.0).unwrap();
        assert!(close(c, 1.513374007, 1e-9));
        assert!(close(c.cosh(), 1.0_f64.cosh().powi(2), 1e-12));
    }

    #[test]
    fn sas_degenerate_angles() {
        assert_eq!(side_from_sides_angle(1.0, 1.0, 0.0).unwrap(), 0.0);
        assert!(close(side_from_sides_angle(1.3, 0.4, 0.0).unwrap(), 0.9, 1e-12));
        assert!(close(side_from_sides_angle(1.0, 1.0, PI).unwrap(), 2.0, 1e-12));
        assert!(matches!(
            side_from_sides_angle(-1.0, 1.0, 0.3),
            Err(TrigError::Domain(_))
        ));
    }

    #[test]
    fn angle_from_sides_examples() {
        let c = side_from_sides_angle(1.0, 1.0, PI / 2.0).unwrap();
        assert!(close(angle_from_sides(1.0, 1.0, c).unwrap(), PI / 2.0, 1e-10));
        // equilateral: all three extractions agree
        let (a, b, cc) = (0.8, 0.8, 0.8);
        let g1 = angle_from_sides(a, b, cc).unwrap();
        let g2 = angle_from_sides(b, cc, a).unwrap();
        let g3 = angle_from_sides(cc, a, b).unwrap();
        assert!(close(g1, g2, 1e-12) && close(g2, g3, 1e-12));
        assert!(matches!(
            angle_from_sides(1.0, 1.0, 2.5),
            Err(TrigError::NoSuchTriangle(_))
        ));
    }

    #[test]
    fn law_of_sines_examples() {
        // matches right_triangle_solve(pi/4, pi/8): hypotenuse from leg
        let a = side_from_angles(PI / 4.0, PI / 2.0, PI / 8.0).unwrap();
        let b = side_from_sines(a, PI / 4.0, PI / 2.0).unwrap();
        assert!(close(b, 1.528570919, 1e-9));
        assert!(close(side_from_sines(0.7, 0.5, 0.5).unwrap(), 0.7, 1e-12));
        assert!(side_from_sines(1e-12, 0.4, 0.9).unwrap() < 1e-10);
        assert!(matches!(
            side_from_sines(1.0, PI, 0.5),
            Err(TrigError::Domain(_))
        ));
    }

    #[test]
    fn right_triangle_octagon_cases() {
        // alpha = pi/3, gamma = pi/8: cosh b = cot(pi/3)·cot(pi/8) = 1.393846850
        let t = right_triangle_solve(PI / 3.0, PI / 8.0).unwrap();
        assert!(close(t.b.cosh(), 1.393846850, 1e-9));
        assert!(close(t.b, 0.860706304, 1e-9));
        // alpha = pi/4: cosh b = cot(pi/8); tanh(b/2) is the octagon's x1
        let t = right_triangle_solve(PI / 4.0, PI / 8.0).unwrap();
        assert!(close(t.b.cosh(), 2.414213562, 1e-9));
        assert!(close(t.b, 1.528570919, 1e-9));
        assert!(close((t.b / 2.0).tanh(), 0.643594, 1e-5));
    }

    #[test]
    fn right_triangle_euclidean_boundary() {
        assert!(matches!(
            right_triangle_solve(PI / 4.0, PI / 4.0),
            Err(TrigError::NoSuchTriangle(_))
        ));
    }

    #[test]
    fn right_triangle_satisfies_pythagoras_and_sines() {
        let t = right_triangle_solve(0.3, 0.7).unwrap();
        assert!(close(t.b.cosh(), t.a.cosh() * t.c.cosh(), 1e-10));
        let r1 = t.a.sinh() / t.alpha.sin();
        let r2 = t.b.sinh() / t.beta.sin();
        let r3 = t.c.sinh() / t.gamma.sin();
        assert!(close(r1, r2, 1e-10) && close(r2, r3, 1e-10));
    }

    #[test]
    fn second_law_round_trip() {
        let t = right_triangle_solve(0.52, 0.31).unwrap();
        assert!(close(side_from_angles(t.alpha, t.beta, t.gamma).unwrap(), t.a, 1e-9));
        assert!(close(side_from_angles(t.beta, t.gamma, t.alpha).unwrap(), t.b, 1e-9));
        assert!(close(side_from_angles(t.gamma, t.alpha, t.beta).unwrap(), t.c, 1e-9));
    }

    #[test]
    fn defect_examples() {
        let d = defect(PI / 2.0, PI / 4.0, PI / 8.0).unwrap();
        assert!(close(d, PI / 8.0, 1e-15));
        assert!(matches!(
            defect(PI / 2.0, PI / 4.0, PI / 4.0),
            Err(TrigError::NoSuchTriangle(_))
        ));
        // ideal triangle limit
        assert!(close(defect(0.0, 0.0, 0.0).unwrap(), PI, 1e-15));
        assert!(matches!(defect(-0.1, 0.2, 0.2), Err(TrigError::Domain(_))));
    }
}
