//! Core Poincaré-disk primitives: points, distances, geodesics, angles,
//! reflections and rotations.
//!
//! The model lives on the open unit disk x² + y² < 1 with metric
//! ds² = 4(dx² + dy²)/(1 − x² − y²)². Geodesics are diameters or circular
//! arcs orthogonal to the boundary circle (the absolute).

use crate::geom::Vec2;
use thiserror::Error;

/// Euclidean separation below which two points are treated as coincident.
pub const COINCIDENCE_TOL: f64 = 1e-12;

/// Arc radius above which a geodesic is degraded to a diameter. Above ~1e3
/// the rounding of radius² alone exceeds the 1e-9 orthogonality budget, so
/// such arcs are indistinguishable from straight lines at working precision.
const DIAMETER_RADIUS_CUTOFF: f64 = 1e3;

/// Incidence tolerance used by [`angle_at`].
const INCIDENCE_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum DiskError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: the two points coincide")]
    DegenerateInput,
    #[error("point does not lie on the geodesic")]
    NotIncident,
}

/// A point of the open unit disk, in Euclidean model coordinates.
///
/// Validated on construction; every operation may assume x² + y² < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    x: f64,
    y: f64,
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Result<Self, DiskError> {
        if !x.is_finite() || !y.is_finite() || x * x + y * y >= 1.0 {
            return Err(DiskError::Domain(format!(
                "({x}, {y}) is not strictly inside the unit disk"
            )));
        }
        Ok(Self { x, y })
    }

    /// Construction without the disk check, for results of model isometries
    /// which preserve the disk exactly.
    pub(crate) fn new_unchecked(x: f64, y: f64) -> Self {
        debug_assert!(x * x + y * y < 1.0);
        Self { x, y }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn vec(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }
}

/// A hyperbolic line: a diameter of the disk, or a circular arc meeting the
/// absolute at right angles (center² = radius² + 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    Diameter { direction: Vec2 },
    Arc { center: Vec2, radius: f64 },
}

impl Geodesic {
    /// Signed incidence defect of `p`: zero when p lies on the geodesic.
    fn incidence(&self, p: &HPoint) -> f64 {
        match self {
            Geodesic::Diameter { direction } => p.vec().cross(*direction),
            Geodesic::Arc { center, radius } => (p.vec() - *center).norm() - radius,
        }
    }

    pub fn contains(&self, p: &HPoint, tol: f64) -> bool {
        self.incidence(p).abs() < tol
    }

    /// Unit tangent at `p` (sign unresolved: the opposite vector is equally valid).
    fn tangent_line(&self, p: &HPoint) -> Vec2 {
        match self {
            Geodesic::Diameter { direction } => *direction,
            Geodesic::Arc { center, .. } => (p.vec() - *center).perp().normalized(),
        }
    }
}

/// Hyperbolic distance from the origin to (x, 0): b = ln((1+x)/(1−x)).
pub fn radial_distance(x: f64) -> Result<f64, DiskError> {
    if !(0.0..1.0).contains(&x) {
        return Err(DiskError::Domain(format!("radial coordinate {x} not in [0, 1)")));
    }
    Ok(2.0 * x.atanh())
}

/// Inverse of [`radial_distance`]: the point (tanh(d/2), 0) at hyperbolic
/// distance d from the origin along the positive x-axis.
pub fn radial_point(d: f64) -> Result<HPoint, DiskError> {
    if !d.is_finite() || d < 0.0 {
        return Err(DiskError::Domain(format!("radial length {d} is negative")));
    }
    Ok(HPoint::new_unchecked((d / 2.0).tanh(), 0.0))
}

/// z·conj(w) as a complex product on coordinate pairs.
fn mul_conj(z: Vec2, w: Vec2) -> Vec2 {
    Vec2::new(z.x * w.x + z.y * w.y, z.y * w.x - z.x * w.y)
}

/// Hyperbolic distance, logarithmic form:
/// d(z,w) = ln((|1−z·conj(w)| + |z−w|)/(|1−z·conj(w)| − |z−w|)).
pub fn hdist(z: &HPoint, w: &HPoint) -> f64 {
    let num = (z.vec() - w.vec()).norm();
    let den = (Vec2::new(1.0, 0.0) - mul_conj(z.vec(), w.vec())).norm();
    ((den + num) / (den - num)).ln()
}

/// Hyperbolic distance, tanh form: d = 2·artanh(|z−w|/|1−z·conj(w)|).
///
/// Algebraically identical to [`hdist`]; kept as an independent route for
/// cross-checking the two printed formulas.
pub fn hdist_tanh(z: &HPoint, w: &HPoint) -> f64 {
    let num = (z.vec() - w.vec()).norm();
    let den = (Vec2::new(1.0, 0.0) - mul_conj(z.vec(), w.vec())).norm();
    2.0 * (num / den).atanh()
}

/// The unique geodesic through two distinct points.
///
/// If p, q and the origin are collinear the result is a diameter; otherwise
/// an arc whose center c solves 2c·p = |p|²+1, 2c·q = |q|²+1 (equivalently
/// |c|² = r² + 1, orthogonality to the absolute).
pub fn geodesic_through(p: &HPoint, q: &HPoint) -> Result<Geodesic, DiskError> {
    let pv = p.vec();
    let qv = q.vec();
    if (pv - qv).norm() < COINCIDENCE_TOL {
        return Err(DiskError::DegenerateInput);
    }
    let det = 4.0 * pv.cross(qv);
    if det != 0.0 {
        let bp = pv.norm_sq() + 1.0;
        let bq = qv.norm_sq() + 1.0;
        let center = Vec2::new(
            (bp * 2.0 * qv.y - bq * 2.0 * pv.y) / det,
            (2.0 * pv.x * bq - 2.0 * qv.x * bp) / det,
        );
        let radius_sq = center.norm_sq() - 1.0;
        if radius_sq > 0.0 {
            let radius = radius_sq.sqrt();
            if radius <= DIAMETER_RADIUS_CUTOFF {
                return Ok(Geodesic::Arc { center, radius });
            }
        }
    }
    Ok(Geodesic::Diameter {
        direction: canonical_direction(qv - pv),
    })
}

/// Diameter directions are normalized into the right half-plane (x > 0, or
/// x = 0 and y > 0) so equal lines compare equal.
fn canonical_direction(v: Vec2) -> Vec2 {
    let u = v.normalized();
    if u.x < 0.0 || (u.x == 0.0 && u.y < 0.0) {
        -u
    } else {
        u
    }
}

/// Angle between two geodesics at a common point, in [0, π].
///
/// The disk model is conformal, so this is the Euclidean angle of the
/// tangents at `p`. For two arcs the crossing angle
/// cos θ = (d² − r₁² − r₂²)/(2r₁r₂) is used, which opens away from both
/// centers; at a vertex of a polygon whose edges bulge toward the interior
/// this is the interior angle. Identical geodesics yield 0.
pub fn angle_at(p: &HPoint, g1: &Geodesic, g2: &Geodesic) -> Result<f64, DiskError> {
    if !g1.contains(p, INCIDENCE_TOL) || !g2.contains(p, INCIDENCE_TOL) {
        return Err(DiskError::NotIncident);
    }
    match (g1, g2) {
        (Geodesic::Arc { center: c1, radius: r1 }, Geodesic::Arc { center: c2, radius: r2 }) => {
            if (*c1 - *c2).norm() < COINCIDENCE_TOL && (r1 - r2).abs() < COINCIDENCE_TOL {
                return Ok(0.0);
            }
            let d_sq = (*c1 - *c2).norm_sq();
            let cos_theta = (d_sq - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
            Ok(cos_theta.clamp(-1.0, 1.0).acos())
        }
        (Geodesic::Diameter { direction: u1 }, Geodesic::Diameter { direction: u2 }) => {
            Ok(u1.cross(*u2).abs().atan2(u1.dot(*u2)))
        }
        _ => {
            // Mixed case: the sector choice is not meaningful without an
            // orientation, so report the acute angle between tangent lines.
            let t1 = g1.tangent_line(p);
            let t2 = g2.tangent_line(p);
            Ok(t1.dot(t2).abs().clamp(0.0, 1.0).acos())
        }
    }
}

/// Hyperbolic reflection across a geodesic: a Euclidean mirror for a
/// diameter, circle inversion z ↦ c + r²·(z−c)/|z−c|² for an arc.
pub fn reflect(p: &HPoint, g: &Geodesic) -> HPoint {
    let pv = p.vec();
    let image = match g {
        Geodesic::Diameter { direction } => *direction * (2.0 * pv.dot(*direction)) - pv,
        Geodesic::Arc { center, radius } => {
            let d = pv - *center;
            *center + d * (radius * radius / d.norm_sq())
        }
    };
    HPoint::new_unchecked(image.x, image.y)
}

/// Euclidean rotation about the origin, an isometry of the model.
pub fn rotate(p: &HPoint, theta: f64) -> HPoint {
    let v = p.vec().rotated(theta);
    HPoint::new_unchecked(v.x, v.y)
}

/// z/w as a complex quotient.
fn cdiv(z: Vec2, w: Vec2) -> Vec2 {
    let d = w.norm_sq();
    Vec2::new((z.x * w.x + z.y * w.y) / d, (z.y * w.x - z.x * w.y) / d)
}

/// Hyperbolic midpoint of the segment from `p` to `q`.
///
/// Translates `p` to the origin with w = (z − p)/(1 − conj(p)·z), halves the
/// radial distance there, and maps back.
pub fn midpoint(p: &HPoint, q: &HPoint) -> HPoint {
    let one = Vec2::new(1.0, 0.0);
    let pv = p.vec();
    let qv = q.vec();
    let w = cdiv(qv - pv, one - mul_conj(qv, pv));
    let r = w.norm();
    if r < COINCIDENCE_TOL {
        return *p;
    }
    let half = (r.atanh() / 2.0).tanh();
    let m = w * (half / r);
    let back = cdiv(m + pv, one + mul_conj(m, pv));
    HPoint::new_unchecked(back.x, back.y)
}

/// Unit tangent at `p` of the geodesic through `p` and `q`, oriented toward `q`.
///
/// Used to measure corner angles of tiles, where the two edges give the
/// orientation that [`angle_at`] alone cannot know.
pub fn tangent_toward(p: &HPoint, q: &HPoint) -> Result<Vec2, DiskError> {
    let chord = q.vec() - p.vec();
    let t = match geodesic_through(p, q)? {
        Geodesic::Diameter { direction } => direction,
        Geodesic::Arc { center, .. } => (p.vec() - center).perp().normalized(),
    };
    Ok(if t.dot(chord) >= 0.0 { t } else { -t })
}
