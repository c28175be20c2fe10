//! Enhanced multigraphs: the red/blue embedded planar multigraph dual to a
//! nice coloring.
//!
//! Every polygon of the coloring is a vertex; every polygon side is a blue
//! edge; every quadrilateral face of the blue graph carries one red edge that
//! marks the side joining the two acute corners at the corresponding surface
//! vertex. The embedding is given by a rotation system: for each vertex, the
//! counterclockwise cyclic order of its darts (edge ends).

mod faces;
mod parse;
mod validate;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use faces::{trace_faces, EdgeFilter, Face, FaceKind, FaceSet};
pub use parse::{parse_emg, render_emg};
pub use validate::{validate_plausible, Counts, Finding, Rule, Severity, ValidationReport};

/// Index of a vertex in [`EnhancedMultigraph::vertices`].
pub type VertexIx = usize;
/// Index of an edge in [`EnhancedMultigraph::edges`].
pub type EdgeIx = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolygonColor {
    Black,
    White,
}

impl PolygonColor {
    pub fn opposite(self) -> Self {
        match self {
            PolygonColor::Black => PolygonColor::White,
            PolygonColor::White => PolygonColor::Black,
        }
    }

    /// +1 for white, -1 for black.
    pub fn sign(self) -> i64 {
        match self {
            PolygonColor::White => 1,
            PolygonColor::Black => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Blue,
    Red,
}

/// One end of an edge. `end` is 0 for the first endpoint, 1 for the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeIx,
    pub end: u8,
}

impl Dart {
    pub fn new(edge: EdgeIx, end: u8) -> Self {
        debug_assert!(end < 2);
        Dart { edge, end }
    }

    pub fn twin(self) -> Dart {
        Dart {
            edge: self.edge,
            end: 1 - self.end,
        }
    }

    /// Dense index `2 * edge + end`.
    pub fn index(self) -> usize {
        2 * self.edge + self.end as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: u32,
    pub color: PolygonColor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: u32,
    pub ends: [VertexIx; 2],
    pub color: EdgeColor,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unknown vertex {id}")]
    UnknownVertex { line: usize, id: u32 },
    #[error("line {line}: unknown edge {id}")]
    UnknownEdge { line: usize, id: u32 },
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(u32),
    #[error("dart {edge}:{end} appears more than once in the rotation system")]
    DuplicateDart { edge: u32, end: u8 },
    #[error("dart {edge}:{end} is missing from the rotation system")]
    MissingDart { edge: u32, end: u8 },
    #[error("dart {edge}:{end} is listed at vertex {found} but belongs to vertex {expected}")]
    DartAtWrongVertex {
        edge: u32,
        end: u8,
        expected: u32,
        found: u32,
    },
    #[error("rotation for vertex {0} given more than once")]
    DuplicateRotation(u32),
}

/// An embedded planar red/blue multigraph with a rotation system.
///
/// Vertices and edges are stored densely in ascending id order; ids from the
/// input file are kept for presentation. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnhancedMultigraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    rotations: Vec<Vec<Dart>>,
    position: Vec<usize>,
    blue_edges: Vec<EdgeIx>,
    blue_column: Vec<Option<usize>>,
}

impl EnhancedMultigraph {
    /// Builds a graph from dense parts. Darts must each appear exactly once,
    /// at the vertex they are incident to.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>, rotations: Vec<Vec<Dart>>) -> Result<Self, GraphError> {
        let mut seen_ids = HashMap::new();
        for v in &vertices {
            if seen_ids.insert(v.id, ()).is_some() {
                return Err(GraphError::DuplicateVertex(v.id));
            }
        }
        let mut seen_ids = HashMap::new();
        for e in &edges {
            if seen_ids.insert(e.id, ()).is_some() {
                return Err(GraphError::DuplicateEdge(e.id));
            }
        }
        assert_eq!(rotations.len(), vertices.len());
        for e in &edges {
            for &end in &e.ends {
                assert!(end < vertices.len(), "edge endpoint out of range");
            }
        }

        let mut position = vec![usize::MAX; 2 * edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, d) in rot.iter().enumerate() {
                let edge = edges.get(d.edge).ok_or(GraphError::UnknownEdge {
                    line: 0,
                    id: d.edge as u32,
                })?;
                if position[d.index()] != usize::MAX {
                    return Err(GraphError::DuplicateDart {
                        edge: edge.id,
                        end: d.end,
                    });
                }
                let expected = edge.ends[d.end as usize];
                if expected != v {
                    return Err(GraphError::DartAtWrongVertex {
                        edge: edge.id,
                        end: d.end,
                        expected: vertices[expected].id,
                        found: vertices[v].id,
                    });
                }
                position[d.index()] = i;
            }
        }
        for (i, p) in position.iter().enumerate() {
            if *p == usize::MAX {
                return Err(GraphError::MissingDart {
                    edge: edges[i / 2].id,
                    end: (i % 2) as u8,
                });
            }
        }

        let mut blue_edges = Vec::new();
        let mut blue_column = vec![None; edges.len()];
        for (ix, e) in edges.iter().enumerate() {
            if e.color == EdgeColor::Blue {
                blue_column[ix] = Some(blue_edges.len());
                blue_edges.push(ix);
            }
        }

        Ok(EnhancedMultigraph {
            vertices,
            edges,
            rotations,
            position,
            blue_edges,
            blue_column,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, v: VertexIx) -> &Vertex {
        &self.vertices[v]
    }

    pub fn edge(&self, e: EdgeIx) -> &Edge {
        &self.edges[e]
    }

    pub fn color(&self, v: VertexIx) -> PolygonColor {
        self.vertices[v].color
    }

    pub fn edge_color(&self, e: EdgeIx) -> EdgeColor {
        self.edges[e].color
    }

    pub fn is_blue(&self, e: EdgeIx) -> bool {
        self.edges[e].color == EdgeColor::Blue
    }

    /// Counterclockwise rotation at `v`, starting at the first listed dart.
    pub fn rotation(&self, v: VertexIx) -> &[Dart] {
        &self.rotations[v]
    }

    /// The vertex a dart is attached to.
    pub fn tail(&self, d: Dart) -> VertexIx {
        self.edges[d.edge].ends[d.end as usize]
    }

    /// The vertex at the other end of a dart's edge.
    pub fn head(&self, d: Dart) -> VertexIx {
        self.tail(d.twin())
    }

    /// Position of `d` within the rotation of its tail.
    pub fn position(&self, d: Dart) -> usize {
        self.position[d.index()]
    }

    pub fn degree(&self, v: VertexIx) -> usize {
        self.rotations[v].len()
    }

    pub fn blue_degree(&self, v: VertexIx) -> usize {
        self.rotations[v].iter().filter(|d| self.is_blue(d.edge)).count()
    }

    /// Next dart counterclockwise from `d` among darts accepted by `filter`.
    /// `d` itself need not be accepted. Returns `None` if no dart at the
    /// vertex passes the filter.
    pub fn next_ccw(&self, d: Dart, filter: EdgeFilter) -> Option<Dart> {
        let rot = &self.rotations[self.tail(d)];
        let start = self.position(d);
        (1..=rot.len())
            .map(|k| rot[(start + k) % rot.len()])
            .find(|x| filter.accepts(self.edge_color(x.edge)))
    }

    /// Previous dart (clockwise neighbour) of `d` among filtered darts.
    pub fn prev_ccw(&self, d: Dart, filter: EdgeFilter) -> Option<Dart> {
        let rot = &self.rotations[self.tail(d)];
        let n = rot.len();
        let start = self.position(d);
        (1..=n)
            .map(|k| rot[(start + n - k) % n])
            .find(|x| filter.accepts(self.edge_color(x.edge)))
    }

    /// Blue edges in ascending index order; column order of the shape system.
    pub fn blue_edges(&self) -> &[EdgeIx] {
        &self.blue_edges
    }

    pub fn num_blue_edges(&self) -> usize {
        self.blue_edges.len()
    }

    /// Shape-system column of a blue edge.
    pub fn blue_column(&self, e: EdgeIx) -> Option<usize> {
        self.blue_column[e]
    }

    pub fn red_edges(&self) -> impl Iterator<Item = EdgeIx> + '_ {
        (0..self.edges.len()).filter(|&e| !self.is_blue(e))
    }

    pub fn vertex_by_id(&self, id: u32) -> Option<VertexIx> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_by_id(&self, id: u32) -> Option<EdgeIx> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Returns a copy with one edge removed; rotations drop its darts and
    /// edges after it are re-indexed. Ids are preserved.
    pub fn without_edge(&self, e: EdgeIx) -> EnhancedMultigraph {
        let shift = |x: EdgeIx| if x > e { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != e)
            .map(|(_, x)| x.clone())
            .collect();
        let rotations = self
            .rotations
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|d| d.edge != e)
                    .map(|d| Dart::new(shift(d.edge), d.end))
                    .collect()
            })
            .collect();
        EnhancedMultigraph::new(self.vertices.clone(), edges, rotations)
            .expect("removing an edge keeps the rotation system well formed")
    }

    /// Returns a copy with new vertex colors.
    pub fn with_colors(&self, colors: &[PolygonColor]) -> EnhancedMultigraph {
        let mut g = self.clone();
        for (v, c) in g.vertices.iter_mut().zip(colors) {
            v.color = *c;
        }
        g
    }

    /// Returns a copy with the rotation at `v` replaced. The new rotation must
    /// hold the same darts.
    pub fn with_rotation(&self, v: VertexIx, rotation: Vec<Dart>) -> Result<Self, GraphError> {
        let mut rotations = self.rotations.clone();
        rotations[v] = rotation;
        EnhancedMultigraph::new(self.vertices.clone(), self.edges.clone(), rotations)
    }
}

/// Incremental construction of an embedded multigraph. Used by generators.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    colors: Vec<PolygonColor>,
    edges: Vec<([VertexIx; 2], EdgeColor)>,
    rotations: Vec<Vec<Dart>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, color: PolygonColor) -> VertexIx {
        self.colors.push(color);
        self.rotations.push(Vec::new());
        self.colors.len() - 1
    }

    /// Adds an edge without placing its darts in any rotation.
    pub fn add_edge(&mut self, a: VertexIx, b: VertexIx, color: EdgeColor) -> EdgeIx {
        self.edges.push(([a, b], color));
        self.edges.len() - 1
    }

    pub fn set_color(&mut self, v: VertexIx, color: PolygonColor) {
        self.colors[v] = color;
    }

    pub fn tail(&self, d: Dart) -> VertexIx {
        self.edges[d.edge].0[d.end as usize]
    }

    pub fn push_dart(&mut self, d: Dart) {
        let v = self.tail(d);
        self.rotations[v].push(d);
    }

    /// Inserts `new` immediately before (clockwise of) `anchor`.
    pub fn insert_before(&mut self, anchor: Dart, new: Dart) {
        let v = self.tail(anchor);
        let rot = &mut self.rotations[v];
        let i = rot.iter().position(|x| *x == anchor).expect("anchor dart placed");
        rot.insert(i, new);
    }

    /// Inserts `new` immediately after (counterclockwise of) `anchor`.
    pub fn insert_after(&mut self, anchor: Dart, new: Dart) {
        let v = self.tail(anchor);
        let rot = &mut self.rotations[v];
        let i = rot.iter().position(|x| *x == anchor).expect("anchor dart placed");
        rot.insert(i + 1, new);
    }

    pub fn edge_ends(&self, e: EdgeIx) -> [VertexIx; 2] {
        self.edges[e].0
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Ids equal indices.
    pub fn build(&self) -> Result<EnhancedMultigraph, GraphError> {
        let vertices = self
            .colors
            .iter()
            .enumerate()
            .map(|(i, c)| Vertex {
                id: i as u32,
                color: *c,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, (ends, color))| Edge {
                id: i as u32,
                ends: *ends,
                color: *color,
            })
            .collect();
        EnhancedMultigraph::new(vertices, edges, self.rotations.clone())
    }
}
