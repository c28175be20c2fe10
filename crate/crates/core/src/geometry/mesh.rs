//! The global unit triangulation of an integer surface and its vertex
//! 4-coloring by Eisenstein residues.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use super::develop::RealizedSurface;
use super::realize::PolygonChain;
use super::tiling::UnitTriangle;
use crate::emg::{EdgeIx, PolygonColor, VertexIx};
use crate::grid::{GridPoint, Q};

/// Identity of a triangulation vertex on the surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexKey {
    /// A vertex of the polygon decomposition (a face of the blue graph).
    Surface(usize),
    /// Integer point at distance `t` from the start of a blue edge.
    OnEdge(EdgeIx, #[serde(serialize_with = "crate::json::ser_z")] BigInt),
    /// Point strictly inside a polygon.
    Interior(VertexIx, GridPoint),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum EdgeKey {
    Boundary(EdgeIx, BigInt),
    Interior(VertexIx, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshVertex {
    pub key: VertexKey,
    /// Folded image.
    pub image: GridPoint,
    pub degree: usize,
    pub color: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshEdge {
    pub ends: [usize; 2],
    pub triangles: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshTriangle {
    pub vertices: [usize; 3],
    pub edges: [usize; 3],
    pub color: PolygonColor,
    pub polygon: VertexIx,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredTriangulation {
    pub vertices: Vec<MeshVertex>,
    pub edges: Vec<MeshEdge>,
    pub triangles: Vec<MeshTriangle>,
}

impl ColoredTriangulation {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Degree → number of vertices.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in &self.vertices {
            *h.entry(v.degree).or_default() += 1;
        }
        h
    }

    /// Six vertices of degree 4, all others of degree 6.
    pub fn has_octahedral_degrees(&self) -> bool {
        let h = self.degree_histogram();
        h.get(&4) == Some(&6) && h.keys().all(|d| *d == 4 || *d == 6)
    }

    /// `(black, white)` triangle counts around each vertex.
    pub fn incidence_counts(&self) -> Vec<(usize, usize)> {
        let mut c = vec![(0, 0); self.vertices.len()];
        for t in &self.triangles {
            for &v in &t.vertices {
                match t.color {
                    PolygonColor::Black => c[v].0 += 1,
                    PolygonColor::White => c[v].1 += 1,
                }
            }
        }
        c
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeshError {
    #[error("point {point} of polygon {polygon} maps to {key:?}, already placed at {existing}")]
    Inconsistent {
        polygon: VertexIx,
        point: Box<GridPoint>,
        key: Box<VertexKey>,
        existing: Box<GridPoint>,
    },
    #[error("edge {a}-{b} lies in {count} triangles")]
    NotManifold { a: usize, b: usize, count: usize },
    #[error("Euler characteristic {0}, expected 2")]
    Euler(i64),
    #[error("degree histogram {0:?}, expected six 4s and the rest 6s")]
    Degrees(BTreeMap<usize, usize>),
    #[error("polygon {polygon} has {found} tiles, expected one list per polygon")]
    TileCount { polygon: usize, found: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("vertex {vertex} has folded image {image}, not an Eisenstein integer")]
    NotEisenstein { vertex: usize, image: Box<GridPoint> },
    #[error("edge {a}-{b} joins two vertices of color {color}")]
    Improper { a: usize, b: usize, color: u8 },
    #[error("vertex {vertex} has {black} black and {white} white triangles")]
    Balance { vertex: usize, black: usize, white: usize },
}

/// Parameter of `p` along side `i` of a chain, when `p` lies on that side.
fn side_param(c: &PolygonChain, i: usize, p: &GridPoint) -> Option<Q> {
    let a = &c.points[i];
    let u = c.sides[i].direction.unit();
    let d = p - a;
    let t = if u.x != Q::from_integer(0.into()) {
        &d.x / &u.x
    } else {
        &d.y / &u.y
    };
    if u.scale(&t) != d {
        return None;
    }
    let zero = Q::from_integer(0.into());
    (t >= zero && t <= c.sides[i].length).then_some(t)
}

fn vertex_key(c: &PolygonChain, p: &GridPoint) -> VertexKey {
    for i in 0..c.len() {
        if let Some(t) = side_param(c, i, p) {
            let s = &c.sides[i];
            if t == Q::from_integer(0.into()) {
                return VertexKey::Surface(s.start_face);
            }
            if t == s.length {
                return VertexKey::Surface(s.end_face);
            }
            return VertexKey::OnEdge(s.edge, t.to_integer());
        }
    }
    VertexKey::Interior(c.polygon, p.clone())
}

fn edge_key(c: &PolygonChain, p: &GridPoint, q: &GridPoint, a: usize, b: usize) -> EdgeKey {
    for i in 0..c.len() {
        if let (Some(tp), Some(tq)) = (side_param(c, i, p), side_param(c, i, q)) {
            let diff = &tp - &tq;
            if diff == Q::from_integer(1.into()) || diff == Q::from_integer((-1).into()) {
                let lo = if tp < tq { tp } else { tq };
                return EdgeKey::Boundary(c.sides[i].edge, lo.to_integer());
            }
        }
    }
    EdgeKey::Interior(c.polygon, a.min(b), a.max(b))
}

/// Identifies unit-triangle vertices along glued edges and checks that the
/// result is a closed triangulated sphere with octahedral degree sequence.
pub fn build_triangulation(
    surface: &RealizedSurface,
    tilings: &[Vec<UnitTriangle>],
) -> Result<ColoredTriangulation, MeshError> {
    if tilings.len() != surface.polygons.len() {
        return Err(MeshError::TileCount {
            polygon: surface.polygons.len(),
            found: tilings.len(),
        });
    }
    let mut index: HashMap<VertexKey, usize> = HashMap::new();
    let mut vertices: Vec<MeshVertex> = Vec::new();
    let mut edge_index: HashMap<EdgeKey, usize> = HashMap::new();
    let mut edges: Vec<MeshEdge> = Vec::new();
    let mut triangles = Vec::new();

    for (c, tiles) in surface.polygons.iter().zip(tilings) {
        for tri in tiles {
            let mut vs = [0usize; 3];
            for (slot, p) in tri.vertices.iter().enumerate() {
                let key = vertex_key(c, p);
                let ix = match index.get(&key) {
                    Some(&ix) => {
                        if vertices[ix].image != *p {
                            return Err(MeshError::Inconsistent {
                                polygon: c.polygon,
                                point: Box::new(p.clone()),
                                key: Box::new(key),
                                existing: Box::new(vertices[ix].image.clone()),
                            });
                        }
                        ix
                    }
                    None => {
                        vertices.push(MeshVertex {
                            key: key.clone(),
                            image: p.clone(),
                            degree: 0,
                            color: None,
                        });
                        index.insert(key, vertices.len() - 1);
                        vertices.len() - 1
                    }
                };
                vs[slot] = ix;
            }
            let t = triangles.len();
            let mut es = [0usize; 3];
            for k in 0..3 {
                let (a, b) = (vs[k], vs[(k + 1) % 3]);
                let key = edge_key(c, &tri.vertices[k], &tri.vertices[(k + 1) % 3], a, b);
                let ix = *edge_index.entry(key).or_insert_with(|| {
                    edges.push(MeshEdge {
                        ends: [a.min(b), a.max(b)],
                        triangles: Vec::new(),
                    });
                    edges.len() - 1
                });
                edges[ix].triangles.push(t);
                es[k] = ix;
            }
            triangles.push(MeshTriangle {
                vertices: vs,
                edges: es,
                color: c.color,
                polygon: c.polygon,
            });
        }
    }

    for e in &edges {
        if e.triangles.len() != 2 {
            return Err(MeshError::NotManifold {
                a: e.ends[0],
                b: e.ends[1],
                count: e.triangles.len(),
            });
        }
        for &v in &e.ends {
            vertices[v].degree += 1;
        }
    }
    let t = ColoredTriangulation {
        vertices,
        edges,
        triangles,
    };
    let chi = t.euler_characteristic();
    if chi != 2 {
        return Err(MeshError::Euler(chi));
    }
    if !t.has_octahedral_degrees() {
        return Err(MeshError::Degrees(t.degree_histogram()));
    }
    Ok(t)
}

/// Colors every vertex by the class of its folded image in `Eis / 2·Eis`,
/// then checks properness and the black/white balance mod 3.
pub fn four_color(t: &ColoredTriangulation) -> Result<ColoredTriangulation, ColorError> {
    let mut out = t.clone();
    for (i, v) in out.vertices.iter_mut().enumerate() {
        v.color = Some(v.image.residue_class().ok_or_else(|| ColorError::NotEisenstein {
            vertex: i,
            image: Box::new(v.image.clone()),
        })?);
    }
    for e in &out.edges {
        let (a, b) = (e.ends[0], e.ends[1]);
        if out.vertices[a].color == out.vertices[b].color {
            return Err(ColorError::Improper {
                a,
                b,
                color: out.vertices[a].color.unwrap(),
            });
        }
    }
    for (vertex, (black, white)) in out.incidence_counts().into_iter().enumerate() {
        if (black as i64 - white as i64).rem_euclid(3) != 0 {
            return Err(ColorError::Balance { vertex, black, white });
        }
    }
    Ok(out)
}
