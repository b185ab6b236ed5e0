//! Edge-to-edge {p,q} tilings of the disk, generated by reflecting a base
//! regular polygon across its edge geodesics breadth-first. A tiling exists
//! when q = π/α copies meet at each vertex for an integer q ≥ 3.

use crate::disk::{geodesic_through, reflect, DiskError, HPoint};
use crate::polygon::{regular_polygon_geometry, PolygonError, RegularPolygonSpec};
use std::collections::HashSet;
use thiserror::Error;

/// Default cap on the reflection depth; counts grow exponentially and
/// deeper tiles shrink below drawing scale.
pub const DEFAULT_DEPTH_CAP: u32 = 6;

/// Quantization step for tile identity: centers of distinct tiles are
/// separated by far more than this, accumulated reflection error by far less.
const KEY_QUANTUM: f64 = 1e-7;

#[derive(Debug, Error, PartialEq)]
pub enum TilingError {
    #[error(transparent)]
    NoSuchPolygon(#[from] PolygonError),
    #[error("tiling mismatch: {0}")]
    TilingMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// Canonical tile identifier: the tile center quantized to the key grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TileKey(i64, i64);

impl TileKey {
    fn of(center: &HPoint) -> Self {
        TileKey(
            (center.x() / KEY_QUANTUM).round() as i64,
            (center.y() / KEY_QUANTUM).round() as i64,
        )
    }
}

/// One polygon of the tiling: the images of the base vertices, edge
/// midpoints and center under a composition of edge reflections.
#[derive(Debug, Clone, PartialEq)]
pub struct Tile {
    pub vertices: Vec<HPoint>,
    pub midpoints: Vec<HPoint>,
    pub center: HPoint,
    pub generation: u32,
}

impl Tile {
    pub fn key(&self) -> TileKey {
        TileKey::of(&self.center)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tiling {
    pub spec: RegularPolygonSpec,
    /// Number of tiles meeting at each vertex.
    pub q: u32,
    pub depth: u32,
    pub tiles: Vec<Tile>,
}

fn base_tile(spec: &RegularPolygonSpec) -> Tile {
    let geometry = regular_polygon_geometry(spec);
    Tile {
        vertices: geometry.vertices,
        midpoints: geometry.midpoints,
        center: HPoint::ORIGIN,
        generation: 0,
    }
}

/// Mirror a tile across one of its edges. The shared edge is fixed
/// pointwise, so reflecting back across the same index returns the
/// original tile.
pub fn reflect_polygon(tile: &Tile, edge_index: usize) -> Result<Tile, TilingError> {
    let p = tile.vertices.len();
    if edge_index >= p {
        return Err(TilingError::Domain(format!(
            "edge index {edge_index} out of range for a {p}-gon"
        )));
    }
    let va = &tile.vertices[edge_index];
    let vb = &tile.vertices[(edge_index + 1) % p];
    let mirror = geodesic_through(va, vb).map_err(|e| match e {
        DiskError::DegenerateInput => {
            TilingError::Domain("tile edge endpoints coincide".to_string())
        }
        other => TilingError::Domain(other.to_string()),
    })?;
    Ok(Tile {
        vertices: tile.vertices.iter().map(|v| reflect(v, &mirror)).collect(),
        midpoints: tile.midpoints.iter().map(|m| reflect(m, &mirror)).collect(),
        center: reflect(&tile.center, &mirror),
        generation: tile.generation + 1,
    })
}

/// Vertex count q of the tiling, requiring 2π/(2α) to be an integer ≥ 3.
pub fn vertex_order(spec: &RegularPolygonSpec) -> Result<u32, TilingError> {
    let q_real = std::f64::consts::PI / spec.half_angle();
    let q = q_real.round();
    if (q_real - q).abs() > 1e-9 || q < 3.0 {
        return Err(TilingError::TilingMismatch(format!(
            "2pi is not an integer multiple (>= 3) of the interior angle: pi/alpha = {q_real}"
        )));
    }
    Ok(q as u32)
}

/// Breadth-first closure of edge reflections up to `depth` generations,
/// deduplicated by quantized tile centers. Generation 0 is the base polygon.
pub fn generate_tiling(spec: &RegularPolygonSpec, depth: u32) -> Result<Tiling, TilingError> {
    generate_tiling_with_cap(spec, depth, DEFAULT_DEPTH_CAP)
}

/// As [`generate_tiling`], with an explicit depth cap.
pub fn generate_tiling_with_cap(
    spec: &RegularPolygonSpec,
    depth: u32,
    cap: u32,
) -> Result<Tiling, TilingError> {
    let q = vertex_order(spec)?;
    if depth > cap {
        return Err(TilingError::Domain(format!(
            "depth {depth} exceeds the cap of {cap}"
        )));
    }
    let p = spec.sides() as usize;
    let base = base_tile(spec);
    let mut seen: HashSet<TileKey> = HashSet::new();
    seen.insert(base.key());
    let mut tiles = vec![base];
    let mut frontier_start = 0;
    for _ in 1..=depth {
        let frontier_end = tiles.len();
        for i in frontier_start..frontier_end {
            for edge in 0..p {
                let image = reflect_polygon(&tiles[i], edge)?;
                if seen.insert(image.key()) {
                    tiles.push(image);
                }
            }
        }
        frontier_start = frontier_end;
    }
    Ok(Tiling {
        spec: *spec,
        q,
        depth,
        tiles,
    })
}
