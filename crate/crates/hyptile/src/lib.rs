//! A toolkit for plane hyperbolic geometry in the Poincaré disk model:
//! distances and geodesics, triangle solvers, regular polygons built from
//! closed-form trigonometric relations, {p,q} tilings generated by edge
//! reflections, and SVG/JSON output.
//!
//! The layout follows the pipeline: [`disk`] holds the model primitives,
//! [`trig`] the triangle relations, [`polygon`] the regular p-gon
//! construction, [`tiling`] the reflection closure, [`render`] the output
//! formats.

pub mod disk;
pub mod geom;
pub mod polygon;
pub mod render;
pub mod tiling;
pub mod trig;

pub use disk::{
    angle_at, geodesic_through, hdist, hdist_tanh, midpoint, radial_distance, radial_point,
    reflect, rotate, tangent_toward, DiskError, Geodesic, HPoint,
};
pub use geom::Vec2;
pub use polygon::{
    regular_polygon_geometry, regular_polygon_radii, PolygonError, PolygonGeometry,
    RegularPolygonSpec,
};
pub use render::{
    circle_through, edge_arc, export_polygon_json, export_tiling_json, polygon_scene, render_svg,
    tiling_scene, EuclCircle, Primitive, RenderError, RenderOptions, Scene, Style,
};
pub use tiling::{
    generate_tiling, generate_tiling_with_cap, reflect_polygon, vertex_order, Tile, TileKey,
    Tiling, TilingError,
};
pub use trig::{
    angle_from_sides, defect, right_triangle_solve, side_from_angles, side_from_sides_angle,
    side_from_sines, Triangle, TrigError,
};
