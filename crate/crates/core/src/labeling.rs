//! Corner types, side slots and direction labels.
//!
//! Each polygon is read off its vertex in the multigraph: the blue darts in
//! rotation order are its sides, and the gap between consecutive blue darts is
//! a corner. A red dart in the gap makes the corner acute (exterior turn 2π/3),
//! an empty gap makes it obtuse (exterior turn π/3).
//!
//! Direction labels `L(e) ∈ Z/6` give every blue edge a direction `ω^L(e)`
//! shared by both polygons on it. Walking the rotation of a white polygon the
//! label increases by the exterior turn of each corner; walking a black one it
//! decreases.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::emg::{Dart, EdgeFilter, EdgeIx, EnhancedMultigraph, PolygonColor, VertexIx};
use crate::grid::Direction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerKind {
    Acute,
    Obtuse,
}

impl CornerKind {
    /// Exterior turn in units of π/3.
    pub fn exterior(self) -> u8 {
        match self {
            CornerKind::Acute => 2,
            CornerKind::Obtuse => 1,
        }
    }
}

/// One polygon's sides and corners in rotation order. `corners[j]` lies
/// between `sides[j]` and `sides[j + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonBoundary {
    pub vertex: VertexIx,
    pub color: PolygonColor,
    pub sides: Vec<Dart>,
    pub corners: Vec<CornerKind>,
    /// Cumulative exterior turn from the slot-0 side, per side.
    pub slots: Vec<u8>,
}

impl PolygonBoundary {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    /// Corner preceding side `j` in rotation order.
    pub fn corner_before(&self, j: usize) -> CornerKind {
        let k = self.sides.len();
        self.corners[(j + k - 1) % k]
    }

    pub fn acute_count(&self) -> usize {
        self.corners.iter().filter(|c| **c == CornerKind::Acute).count()
    }

    /// Side index of an edge, if the edge is a side of this polygon. For a
    /// blue loop the first occurrence is returned.
    pub fn side_of(&self, e: EdgeIx) -> Option<usize> {
        self.sides.iter().position(|d| d.edge == e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeedFlag {
    pub vertex: VertexIx,
    pub edge: EdgeIx,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("vertex {vertex} has {count} red edge ends in one corner")]
    StackedCorner { vertex: u32, count: usize },
    #[error("vertex {0} has no blue edges")]
    NoSides(u32),
    #[error("polygon {vertex}: exterior turns sum to {sum}·π/3, expected 6·π/3")]
    TurnSum { vertex: u32, sum: u32 },
    #[error("seed edge {edge} is not a blue side of vertex {vertex}")]
    BadSeed { vertex: u32, edge: u32 },
    #[error("holonomy: edge {edge} receives labels {first} and {second}")]
    Holonomy {
        edge: u32,
        first: Direction,
        second: Direction,
    },
    #[error("blue edge {0} is not reachable from the seed")]
    Unreached(u32),
}

/// Sides, corner types and slots of every polygon.
pub fn polygon_boundaries(g: &EnhancedMultigraph) -> Result<Vec<PolygonBoundary>, LabelError> {
    (0..g.num_vertices()).map(|v| polygon_boundary(g, v)).collect()
}

pub fn polygon_boundary(g: &EnhancedMultigraph, v: VertexIx) -> Result<PolygonBoundary, LabelError> {
    let vid = g.vertex(v).id;
    let sides: Vec<Dart> = g.rotation(v).iter().copied().filter(|d| g.is_blue(d.edge)).collect();
    if sides.is_empty() {
        return Err(LabelError::NoSides(vid));
    }
    let corners: Vec<CornerKind> = sides
        .iter()
        .map(|&d| {
            let next = g.next_ccw(d, EdgeFilter::BLUE).expect("blue dart present");
            let rot = g.rotation(v);
            let n = rot.len();
            let (a, b) = (g.position(d), g.position(next));
            let gap = if b > a { b - a - 1 } else { b + n - a - 1 };
            match gap {
                0 => Ok(CornerKind::Obtuse),
                1 => Ok(CornerKind::Acute),
                count => Err(LabelError::StackedCorner { vertex: vid, count }),
            }
        })
        .collect::<Result<_, _>>()?;
    let sum: u32 = corners.iter().map(|c| c.exterior() as u32).sum();
    if sum != 6 {
        return Err(LabelError::TurnSum { vertex: vid, sum });
    }
    let k = sides.len();
    let acute = |j: usize| corners[j % k] == CornerKind::Acute;
    let start = (0..k)
        .find(|&j| acute(j + k - 1) && acute(j))
        .or_else(|| (0..k).find(|&j| acute(j + k - 1)))
        .unwrap_or(0);
    let mut slots = vec![0u8; k];
    let mut s = 0u8;
    for i in 0..k {
        let j = (start + i) % k;
        slots[j] = s % 6;
        s += corners[j].exterior();
    }
    Ok(PolygonBoundary {
        vertex: v,
        color: g.color(v),
        sides,
        corners,
        slots,
    })
}

/// A direction for every blue edge; `None` for red edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    pub seed: SeedFlag,
    labels: Vec<Option<Direction>>,
}

impl LabelMap {
    pub fn get(&self, e: EdgeIx) -> Option<Direction> {
        self.labels[e]
    }

    /// Label of a blue edge. Panics on red edges.
    pub fn label(&self, e: EdgeIx) -> Direction {
        self.labels[e].expect("blue edge label")
    }

    /// Labels composed with a global rotation `ω^k`.
    pub fn rotated(&self, k: i64) -> LabelMap {
        LabelMap {
            seed: self.seed,
            labels: self.labels.iter().map(|l| l.map(|d| d.rotate(k))).collect(),
        }
    }
}

/// Label of side `j + step` given the label of side `j`, walking the rotation.
fn propagate(b: &PolygonBoundary, j: usize, lj: Direction) -> Vec<Direction> {
    let k = b.sides.len();
    let sigma = b.color.sign();
    let mut out = vec![lj; k];
    let mut cur = lj;
    for i in 1..k {
        let prev = (j + i - 1) % k;
        cur = cur.rotate(sigma * b.corners[prev].exterior() as i64);
        out[(j + i) % k] = cur;
    }
    out
}

/// Labels every blue edge, with `L(seed.edge) = 0`, by breadth-first search
/// over polygons.
pub fn assign_labels(
    g: &EnhancedMultigraph,
    boundaries: &[PolygonBoundary],
    seed: SeedFlag,
) -> Result<LabelMap, LabelError> {
    let seed_side = boundaries[seed.vertex].side_of(seed.edge).ok_or(LabelError::BadSeed {
        vertex: g.vertex(seed.vertex).id,
        edge: g.edge(seed.edge).id,
    })?;
    let mut labels: Vec<Option<Direction>> = vec![None; g.num_edges()];
    let mut visited = vec![false; g.num_vertices()];
    let mut queue = VecDeque::new();
    queue.push_back((seed.vertex, seed_side, Direction::new(0)));
    visited[seed.vertex] = true;
    while let Some((v, j, lj)) = queue.pop_front() {
        let b = &boundaries[v];
        let ls = propagate(b, j, lj);
        for (i, d) in b.sides.iter().enumerate() {
            let e = d.edge;
            match labels[e] {
                Some(prev) if prev != ls[i] => {
                    return Err(LabelError::Holonomy {
                        edge: g.edge(e).id,
                        first: prev,
                        second: ls[i],
                    })
                }
                Some(_) => {}
                None => labels[e] = Some(ls[i]),
            }
            let u = g.head(*d);
            if !visited[u] {
                visited[u] = true;
                let side = boundaries[u]
                    .sides
                    .iter()
                    .position(|x| *x == d.twin())
                    .expect("twin of a blue side is a blue side");
                queue.push_back((u, side, ls[i]));
            }
        }
    }
    for &e in g.blue_edges() {
        if labels[e].is_none() {
            return Err(LabelError::Unreached(g.edge(e).id));
        }
    }
    Ok(LabelMap { seed, labels })
}
