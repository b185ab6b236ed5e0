//! SVG and JSON output. Geodesic edges are drawn as circular arcs through
//! vertex–midpoint–vertex triples; every emitted number is printed with a
//! fixed precision so output is byte-stable across runs.

use crate::disk::HPoint;
use crate::geom::Vec2;
use crate::polygon::{PolygonGeometry, RegularPolygonSpec};
use crate::tiling::Tiling;
use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use thiserror::Error;

/// Determinant threshold below which three points count as collinear.
const COLLINEAR_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum RenderError {
    #[error("collinear or coincident points do not determine a circle")]
    Collinear,
    #[error("domain error: {0}")]
    Domain(String),
}

/// A Euclidean circle in model coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclCircle {
    pub center: Vec2,
    pub radius: f64,
}

/// Stroke attributes; `width: None` defers to [`RenderOptions::stroke_width`].
#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub color: String,
    pub width: Option<f64>,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            color: "black".to_string(),
            width: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Primitive {
    /// The boundary circle of the model.
    AbsoluteCircle { style: Style },
    /// Arc of `circle` from `from` to `to`, swept through `through`.
    GeodesicArc {
        circle: EuclCircle,
        from: Vec2,
        to: Vec2,
        through: Vec2,
        style: Style,
    },
    /// Straight chord, used for edges lying on a diameter.
    Segment { from: Vec2, to: Vec2, style: Style },
    Dot { at: Vec2, style: Style },
}

/// Ordered renderable primitives. A new scene already contains the absolute.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub primitives: Vec<Primitive>,
}

impl Scene {
    pub fn new() -> Self {
        Scene {
            primitives: vec![Primitive::AbsoluteCircle {
                style: Style::default(),
            }],
        }
    }

    pub fn push(&mut self, primitive: Primitive) {
        self.primitives.push(primitive);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub size_px: u32,
    pub margin: f64,
    pub stroke_width: f64,
    /// Decimal places for pixel coordinates.
    pub precision: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            size_px: 800,
            margin: 20.0,
            stroke_width: 1.0,
            precision: 6,
        }
    }
}

/// Center and radius of the circle through three points, by the
/// perpendicular-bisector (circumcenter) formula.
pub fn circle_through(a: Vec2, b: Vec2, c: Vec2) -> Result<EuclCircle, RenderError> {
    let det = 2.0 * ((b - a).cross(c - a));
    if det.abs() <= COLLINEAR_TOL {
        return Err(RenderError::Collinear);
    }
    let (na, nb, nc) = (a.norm_sq(), b.norm_sq(), c.norm_sq());
    let center = Vec2::new(
        (na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / det,
        (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / det,
    );
    Ok(EuclCircle {
        center,
        radius: (a - center).norm(),
    })
}

/// Edge primitive through vertex–midpoint–vertex. Triples collinear with
/// each other lie on a diameter and fall back to a straight segment.
pub fn edge_arc(p: &HPoint, mid: &HPoint, q: &HPoint) -> Result<Primitive, RenderError> {
    edge_arc_styled(p, mid, q, Style::default())
}

pub fn edge_arc_styled(
    p: &HPoint,
    mid: &HPoint,
    q: &HPoint,
    style: Style,
) -> Result<Primitive, RenderError> {
    let (pv, mv, qv) = (p.vec(), mid.vec(), q.vec());
    if (pv - qv).norm() < COLLINEAR_TOL
        || (pv - mv).norm() < COLLINEAR_TOL
        || (qv - mv).norm() < COLLINEAR_TOL
    {
        return Err(RenderError::Domain("edge points are not distinct".into()));
    }
    let geodesic = crate::disk::geodesic_through(p, q)
        .map_err(|e| RenderError::Domain(e.to_string()))?;
    if !geodesic.contains(mid, 1e-6) {
        return Err(RenderError::Domain(
            "midpoint does not lie on the edge geodesic".into(),
        ));
    }
    match circle_through(pv, mv, qv) {
        Ok(circle) => Ok(Primitive::GeodesicArc {
            circle,
            from: pv,
            to: qv,
            through: mv,
            style,
        }),
        Err(RenderError::Collinear) => Ok(Primitive::Segment {
            from: pv,
            to: qv,
            style,
        }),
        Err(e) => Err(e),
    }
}

/// Sweep selection: whether the arc from `from` to `to` that passes through
/// `through` runs counterclockwise, and whether it spans more than π.
pub fn arc_flags(circle: &EuclCircle, from: Vec2, to: Vec2, through: Vec2) -> (bool, bool) {
    let a0 = (from - circle.center).angle();
    let ccw_to = ((to - circle.center).angle() - a0).rem_euclid(TAU);
    let ccw_mid = ((through - circle.center).angle() - a0).rem_euclid(TAU);
    let ccw = ccw_mid <= ccw_to;
    let span = if ccw { ccw_to } else { TAU - ccw_to };
    (ccw, span > PI)
}

/// Build the polygon's eight (or p) edge arcs over a fresh scene.
pub fn polygon_scene(geometry: &PolygonGeometry, style: &Style) -> Result<Scene, RenderError> {
    let mut scene = Scene::new();
    let p = geometry.vertices.len();
    for i in 0..p {
        scene.push(edge_arc_styled(
            &geometry.vertices[i],
            &geometry.midpoints[i],
            &geometry.vertices[(i + 1) % p],
            style.clone(),
        )?);
    }
    Ok(scene)
}

/// Edges of every tile, with edges shared by adjacent tiles drawn once.
pub fn tiling_scene(tiling: &Tiling, style: &Style) -> Result<Scene, RenderError> {
    let mut scene = Scene::new();
    let mut seen = std::collections::HashSet::new();
    let quantum = 1e-7;
    let key = |v: &HPoint| ((v.x() / quantum).round() as i64, (v.y() / quantum).round() as i64);
    for tile in &tiling.tiles {
        let p = tile.vertices.len();
        for i in 0..p {
            let a = &tile.vertices[i];
            let b = &tile.vertices[(i + 1) % p];
            let (ka, kb) = (key(a), key(b));
            let edge_key = if ka <= kb { (ka, kb) } else { (kb, ka) };
            if seen.insert(edge_key) {
                scene.push(edge_arc_styled(a, &tile.midpoints[i], b, style.clone())?);
            }
        }
    }
    Ok(scene)
}

fn write_px(out: &mut String, v: f64, precision: usize) {
    let _ = write!(out, "{v:.precision$}");
}

/// Serialize a scene as an SVG 1.1 document. Model coordinates [−1,1]² map
/// affinely onto the viewport with the y-axis flipped (model +y is up).
pub fn render_svg(scene: &Scene, options: &RenderOptions) -> Result<String, RenderError> {
    if options.size_px == 0 {
        return Err(RenderError::Domain("size_px must be positive".into()));
    }
    let size = options.size_px as f64;
    let scale = (size - 2.0 * options.margin) / 2.0;
    if scale.is_nan() || scale <= 0.0 {
        return Err(RenderError::Domain(format!(
            "margin {} leaves no drawing area in {} px",
            options.margin, options.size_px
        )));
    }
    let prec = options.precision;
    let to_px = |v: Vec2| -> (f64, f64) {
        (
            options.margin + (v.x + 1.0) * scale,
            options.margin + (1.0 - v.y) * scale,
        )
    };
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        options.size_px
    );
    for primitive in &scene.primitives {
        match primitive {
            Primitive::AbsoluteCircle { style } => {
                let (cx, cy) = to_px(Vec2::ZERO);
                let w = style.width.unwrap_or(options.stroke_width);
                out.push_str("<circle cx=\"");
                write_px(&mut out, cx, prec);
                out.push_str("\" cy=\"");
                write_px(&mut out, cy, prec);
                out.push_str("\" r=\"");
                write_px(&mut out, scale, prec);
                let _ = writeln!(
                    out,
                    "\" fill=\"none\" stroke=\"{}\" stroke-width=\"{w:.prec$}\"/>",
                    style.color
                );
            }
            Primitive::GeodesicArc {
                circle,
                from,
                to,
                through,
                style,
            } => {
                let (x1, y1) = to_px(*from);
                let (x2, y2) = to_px(*to);
                let r = circle.radius * scale;
                let (ccw, large) = arc_flags(circle, *from, *to, *through);
                // the y-flip reverses orientation: a model-cw sweep runs in
                // SVG's positive-angle direction
                let sweep = if ccw { 0 } else { 1 };
                let large = if large { 1 } else { 0 };
                let w = style.width.unwrap_or(options.stroke_width);
                out.push_str("<path d=\"M ");
                write_px(&mut out, x1, prec);
                out.push(' ');
                write_px(&mut out, y1, prec);
                out.push_str(" A ");
                write_px(&mut out, r, prec);
                out.push(' ');
                write_px(&mut out, r, prec);
                let _ = write!(out, " 0 {large} {sweep} ");
                write_px(&mut out, x2, prec);
                out.push(' ');
                write_px(&mut out, y2, prec);
                let _ = writeln!(
                    out,
                    "\" fill=\"none\" stroke=\"{}\" stroke-width=\"{w:.prec$}\"/>",
                    style.color
                );
            }
            Primitive::Segment { from, to, style } => {
                let (x1, y1) = to_px(*from);
                let (x2, y2) = to_px(*to);
                let w = style.width.unwrap_or(options.stroke_width);
                out.push_str("<line x1=\"");
                write_px(&mut out, x1, prec);
                out.push_str("\" y1=\"");
                write_px(&mut out, y1, prec);
                out.push_str("\" x2=\"");
                write_px(&mut out, x2, prec);
                out.push_str("\" y2=\"");
                write_px(&mut out, y2, prec);
                let _ = writeln!(
                    out,
                    "\" stroke=\"{}\" stroke-width=\"{w:.prec$}\"/>",
                    style.color
                );
            }
            Primitive::Dot { at, style } => {
                let (cx, cy) = to_px(*at);
                let w = style.width.unwrap_or(options.stroke_width);
                out.push_str("<circle cx=\"");
                write_px(&mut out, cx, prec);
                out.push_str("\" cy=\"");
                write_px(&mut out, cy, prec);
                let _ = writeln!(
                    out,
                    "\" r=\"{:.prec$}\" fill=\"{}\" stroke=\"none\"/>",
                    2.0 * w,
                    style.color
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Format with 9 significant digits; magnitudes below 1e−12 collapse to 0.
pub fn sig9(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(8 - exponent);
    let rounded = (x * factor).round() / factor;
    format!("{rounded}")
}

fn points_json(points: &[HPoint]) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|p| format!("[{},{}]", sig9(p.x()), sig9(p.y())))
        .collect();
    format!("[{}]", coords.join(","))
}

/// JSON record of a polygon: p, alpha, vertices, midpoints, circumradius,
/// inradius, with 9-significant-digit numbers and fixed key order.
pub fn export_polygon_json(spec: &RegularPolygonSpec, geometry: &PolygonGeometry) -> String {
    format!(
        "{{\"p\":{},\"alpha\":{},\"vertices\":{},\"midpoints\":{},\"circumradius\":{},\"inradius\":{}}}\n",
        spec.sides(),
        sig9(spec.half_angle()),
        points_json(&geometry.vertices),
        points_json(&geometry.midpoints),
        sig9(geometry.circumradius),
        sig9(geometry.inradius),
    )
}

/// JSON record of a tiling: the polygon fields for the base tile plus q,
/// depth and the tile list.
pub fn export_tiling_json(tiling: &Tiling) -> String {
    let base = &tiling.tiles[0];
    let radii = crate::polygon::regular_polygon_radii(&tiling.spec);
    let tiles: Vec<String> = tiling
        .tiles
        .iter()
        .map(|t| {
            format!(
                "{{\"generation\":{},\"center\":[{},{}],\"vertices\":{},\"midpoints\":{}}}",
                t.generation,
                sig9(t.center.x()),
                sig9(t.center.y()),
                points_json(&t.vertices),
                points_json(&t.midpoints),
            )
        })
        .collect();
    format!(
        "{{\"p\":{},\"alpha\":{},\"vertices\":{},\"midpoints\":{},\"circumradius\":{},\"inradius\":{},\"q\":{},\"depth\":{},\"tiles\":[{}]}}\n",
        tiling.spec.sides(),
        sig9(tiling.spec.half_angle()),
        points_json(&base.vertices),
        points_json(&base.midpoints),
        sig9(radii.1),
        sig9(radii.0),
        tiling.q,
        tiling.depth,
        tiles.join(","),
    )
}
