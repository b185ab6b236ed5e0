//! Regular p-gons centered at the origin of the disk, parameterized by the
//! half interior angle α. The construction reduces to the right triangle
//! O–Q₁–P₁ with angles (α, π/2, π/p): cosh b = cot α·cot(π/p) gives the
//! circumradius, cosh a = cos α/sin(π/p) the inradius, and the remaining
//! vertices and edge midpoints follow by rotation.

use crate::disk::{radial_point, rotate, HPoint};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PolygonError {
    #[error("no such polygon: {0}")]
    NoSuchPolygon(String),
}

/// A regular p-gon given by its side count and half interior angle.
///
/// Hyperbolic existence requires α + π/p < π/2 (equivalently a positive
/// defect for the generating right triangle).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularPolygonSpec {
    sides: u32,
    half_angle: f64,
}

impl RegularPolygonSpec {
    pub fn new(sides: u32, half_angle: f64) -> Result<Self, PolygonError> {
        if sides < 3 {
            return Err(PolygonError::NoSuchPolygon(format!(
                "{sides} sides; a polygon needs at least 3"
            )));
        }
        if !half_angle.is_finite() || half_angle <= 0.0 {
            return Err(PolygonError::NoSuchPolygon(format!(
                "half interior angle {half_angle} must be positive"
            )));
        }
        if half_angle + PI / sides as f64 >= PI / 2.0 {
            return Err(PolygonError::NoSuchPolygon(format!(
                "half interior angle {half_angle} too large for {sides} sides \
                 (need alpha + pi/p < pi/2)"
            )));
        }
        Ok(Self { sides, half_angle })
    }

    pub fn sides(&self) -> u32 {
        self.sides
    }

    pub fn half_angle(&self) -> f64 {
        self.half_angle
    }
}

/// Vertices P₁..P_p, edge midpoints Q₁..Q_p and the two radii of a regular
/// polygon. Vertex 1 lies on the positive x-axis; indexing runs
/// counterclockwise, with Qᵢ the midpoint of edge PᵢPᵢ₊₁.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonGeometry {
    pub vertices: Vec<HPoint>,
    pub midpoints: Vec<HPoint>,
    pub circumradius: f64,
    pub inradius: f64,
}

/// Hyperbolic inradius a and circumradius b:
/// a = arccosh(cos α/sin(π/p)), b = arccosh(cot α·cot(π/p)).
pub fn regular_polygon_radii(spec: &RegularPolygonSpec) -> (f64, f64) {
    let alpha = spec.half_angle();
    let corner = PI / spec.sides() as f64;
    let inradius = (alpha.cos() / corner.sin()).max(1.0).acosh();
    let circumradius = (alpha.cos() * corner.cos() / (alpha.sin() * corner.sin()))
        .max(1.0)
        .acosh();
    (inradius, circumradius)
}

/// Full coordinates: P₁ = (tanh(b/2), 0), Pₖ = rotate(P₁, 2π(k−1)/p),
/// Q₁ = rotate((tanh(a/2), 0), π/p), Qₖ by the same step.
pub fn regular_polygon_geometry(spec: &RegularPolygonSpec) -> PolygonGeometry {
    let p = spec.sides();
    let (inradius, circumradius) = regular_polygon_radii(spec);
    let step = 2.0 * PI / p as f64;
    let first_vertex = radial_point(circumradius).expect("radii are nonnegative");
    let first_mid_axis = radial_point(inradius).expect("radii are nonnegative");
    let vertices = (0..p)
        .map(|k| rotate(&first_vertex, step * k as f64))
        .collect();
    let midpoints = (0..p)
        .map(|k| rotate(&first_mid_axis, PI / p as f64 + step * k as f64))
        .collect();
    PolygonGeometry {
        vertices,
        midpoints,
        circumradius,
        inradius,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::{angle_at, geodesic_through, hdist, HPoint};
    use crate::trig::angle_from_sides;

    fn octagon(alpha: f64) -> PolygonGeometry {
        regular_polygon_geometry(&RegularPolygonSpec::new(8, alpha).unwrap())
    }

    /// Reference octagon coordinates (x1, u, v, x2) for four interior angles.
    const REFERENCE_CASES: [(f64, [f64; 4]); 4] = [
        (3.0, [0.405616, 0.336816, 0.139514, 0.286814]),
        (4.0, [0.643594, 0.504081, 0.208797, 0.45509]),
        (6.0, [0.783591, 0.574794, 0.238087, 0.554082]),
        (8.0, [0.840896, 0.594604, 0.246293, 0.594604]),
    ];

    #[test]
    fn octagon_radii_for_alpha_pi_3() {
        let spec = RegularPolygonSpec::new(8, PI / 3.0).unwrap();
        let (a, b) = regular_polygon_radii(&spec);
        // direct evaluation: arccosh(cos(pi/3)/sin(pi/8)), arccosh(cot(pi/3)cot(pi/8))
        assert!((a - 0.764285460).abs() < 1e-9);
        assert!((b - 0.860706304).abs() < 1e-9);
        assert!(a < b);
        // Euclidean radii match the printed coordinates
        assert!(((b / 2.0).tanh() - 0.405616).abs() < 1e-5);
        assert!(((a / 2.0).tanh() - 0.364567).abs() < 1e-5);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(matches!(
            RegularPolygonSpec::new(8, PI / 2.0),
            Err(PolygonError::NoSuchPolygon(_))
        ));
        assert!(matches!(
            RegularPolygonSpec::new(2, 0.3),
            Err(PolygonError::NoSuchPolygon(_))
        ));
        assert!(matches!(
            RegularPolygonSpec::new(8, 0.0),
            Err(PolygonError::NoSuchPolygon(_))
        ));
    }

    #[test]
    fn degenerate_limit_shrinks_to_a_point() {
        let spec = RegularPolygonSpec::new(8, 3.0 * PI / 8.0 - 1e-9).unwrap();
        let (_, b) = regular_polygon_radii(&spec);
        assert!(b < 1e-3, "circumradius {b} should collapse near the boundary");
    }

    #[test]
    fn reference_coordinate_cases() {
        for (denom, [x1, u, v, x2]) in REFERENCE_CASES {
            let g = octagon(PI / denom);
            let p1 = g.vertices[0];
            let q1 = g.midpoints[0];
            let p2 = g.vertices[1];
            assert!((p1.x() - x1).abs() < 1e-5, "alpha=pi/{denom}: x1");
            assert!(p1.y().abs() < 1e-12, "alpha=pi/{denom}: y1");
            assert!((q1.x() - u).abs() < 1e-5, "alpha=pi/{denom}: u");
            assert!((q1.y() - v).abs() < 1e-5, "alpha=pi/{denom}: v");
            assert!((p2.x() - x2).abs() < 1e-5, "alpha=pi/{denom}: x2");
            assert!((p2.y() - x2).abs() < 1e-5, "alpha=pi/{denom}: y2");
        }
    }

    #[test]
    fn equal_radii_and_sides() {
        let g = octagon(PI / 3.0);
        let side = hdist(&g.vertices[0], &g.vertices[1]);
        for i in 0..8 {
            assert!((hdist(&HPoint::ORIGIN, &g.vertices[i]) - g.circumradius).abs() < 1e-10);
            assert!((hdist(&HPoint::ORIGIN, &g.midpoints[i]) - g.inradius).abs() < 1e-10);
            let s = hdist(&g.vertices[i], &g.vertices[(i + 1) % 8]);
            assert!((s - side).abs() < 1e-10);
        }
    }

    #[test]
    fn midpoints_bisect_edges() {
        let g = octagon(PI / 4.0);
        for i in 0..8 {
            let p = g.vertices[i];
            let q = g.midpoints[i];
            let r = g.vertices[(i + 1) % 8];
            assert!((hdist(&p, &q) - hdist(&q, &r)).abs() < 1e-10);
            let edge = geodesic_through(&p, &r).unwrap();
            assert!(edge.contains(&q, 1e-9));
        }
    }

    #[test]
    fn interior_angles_equal_twice_alpha() {
        for (denom, _) in REFERENCE_CASES {
            let alpha = PI / denom;
            let g = octagon(alpha);
            for i in 0..8 {
                let prev = g.vertices[(i + 7) % 8];
                let here = g.vertices[i];
                let next = g.vertices[(i + 1) % 8];
                let e1 = geodesic_through(&here, &next).unwrap();
                let e2 = geodesic_through(&prev, &here).unwrap();
                let angle = angle_at(&here, &e1, &e2).unwrap();
                assert!(
                    (angle - 2.0 * alpha).abs() < 1e-9,
                    "alpha=pi/{denom}, vertex {i}: {angle} vs {}",
                    2.0 * alpha
                );
            }
        }
    }

    #[test]
    fn dihedral_symmetry_of_vertex_set() {
        let g = octagon(PI / 6.0);
        let step = 2.0 * PI / 8.0;
        for v in &g.vertices {
            let rv = rotate(v, step);
            let hit = g
                .vertices
                .iter()
                .any(|w| (w.x() - rv.x()).abs() < 1e-12 && (w.y() - rv.y()).abs() < 1e-12);
            assert!(hit, "rotated vertex {rv:?} missing");
            let mirrored = HPoint::new(v.x(), -v.y()).unwrap();
            let hit = g
                .vertices
                .iter()
                .any(|w| (w.x() - mirrored.x()).abs() < 1e-12 && (w.y() - mirrored.y()).abs() < 1e-12);
            assert!(hit, "mirrored vertex {mirrored:?} missing");
        }
    }

    #[test]
    fn right_triangle_decomposition() {
        // O–Q1–P1 has angles (pi/p at O, pi/2 at Q1, alpha at P1)
        for p in [3u32, 5, 8, 12] {
            let alpha = 0.7 * (PI / 2.0 - PI / p as f64);
            let spec = RegularPolygonSpec::new(p, alpha).unwrap();
            let g = regular_polygon_geometry(&spec);
            let a = hdist(&HPoint::ORIGIN, &g.midpoints[0]);
            let b = hdist(&HPoint::ORIGIN, &g.vertices[0]);
            let c = hdist(&g.midpoints[0], &g.vertices[0]);
            assert!((angle_from_sides(a, c, b).unwrap() - PI / 2.0).abs() < 1e-9);
            assert!((angle_from_sides(a, b, c).unwrap() - PI / p as f64).abs() < 1e-9);
            assert!((angle_from_sides(b, c, a).unwrap() - alpha).abs() < 1e-9);
        }
    }

    #[test]
    fn circumradius_decreases_in_alpha() {
        let mut last = f64::INFINITY;
        for i in 1..30 {
            let alpha = i as f64 * (3.0 * PI / 8.0) / 30.0;
            let (_, b) = regular_polygon_radii(&RegularPolygonSpec::new(8, alpha).unwrap());
            assert!(b < last, "circumradius not decreasing at alpha={alpha}");
            last = b;
        }
    }
}
