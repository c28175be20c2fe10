use num_traits::{Signed, Zero};
use serde::Serialize;

use super::GeometryError;
use crate::emg::{trace_faces, Dart, EdgeFilter, EdgeIx, EnhancedMultigraph, FaceSet, PolygonColor, VertexIx};
use crate::grid::{Direction, GridPoint, Q};
use crate::labeling::{CornerKind, LabelMap, PolygonBoundary};

/// One side of a polygon in folded traversal order. Every side runs from the
/// surface vertex `start_face` to `end_face` (faces of the blue graph).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainSide {
    pub edge: EdgeIx,
    pub direction: Direction,
    #[serde(serialize_with = "crate::json::ser_q")]
    pub length: Q,
    pub start_face: usize,
    pub end_face: usize,
}

/// A polygon as a closed chain in the folded plane, traversed
/// counterclockwise. `points[i]` is the start of `sides[i]`; `angles[i]` is
/// the interior angle there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonChain {
    pub polygon: VertexIx,
    pub color: PolygonColor,
    pub sides: Vec<ChainSide>,
    pub points: Vec<GridPoint>,
    pub angles: Vec<CornerKind>,
}

impl PolygonChain {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn end_point(&self, i: usize) -> &GridPoint {
        &self.points[(i + 1) % self.points.len()]
    }

    pub fn side_of(&self, e: EdgeIx) -> Option<usize> {
        self.sides.iter().position(|s| s.edge == e)
    }

    /// Image under `z ↦ ω^r·z + t`.
    pub fn transformed(&self, r: i64, t: &GridPoint) -> PolygonChain {
        let rot = Direction::new(r);
        PolygonChain {
            polygon: self.polygon,
            color: self.color,
            sides: self
                .sides
                .iter()
                .map(|s| ChainSide {
                    direction: s.direction.rotate(r),
                    ..s.clone()
                })
                .collect(),
            points: self.points.iter().map(|p| &p.rotate(rot) + t).collect(),
            angles: self.angles.clone(),
        }
    }

    /// Sum of `length · direction` over the sides.
    pub fn closure(&self) -> GridPoint {
        self.sides.iter().fold(GridPoint::origin(), |acc, s| {
            &acc + &s.direction.unit().scale(&s.length)
        })
    }
}

/// Folded traversal order of a polygon's sides, as `(dart, index of the
/// corner at the start of the side)`. White polygons follow the rotation,
/// black ones run against it; either way the folded chain turns left.
pub(crate) fn traversal(b: &PolygonBoundary) -> Vec<(Dart, usize)> {
    let k = b.sides.len();
    match b.color {
        PolygonColor::White => (0..k).map(|j| (b.sides[j], (j + k - 1) % k)).collect(),
        PolygonColor::Black => (0..k).map(|i| (k - i) % k).map(|j| (b.sides[j], j)).collect(),
    }
}

/// Face of the surface vertex where a traversed side starts.
pub(crate) fn start_face(g: &EnhancedMultigraph, faces: &FaceSet, color: PolygonColor, d: Dart) -> usize {
    let corner = match color {
        PolygonColor::White => d,
        PolygonColor::Black => g.next_ccw(d, EdgeFilter::BLUE).expect("blue dart"),
    };
    faces.face_of(corner).expect("blue dart has a face")
}

/// Lays out every polygon in its own chart with its first traversed side
/// starting at the origin, and checks that each chain closes.
pub fn realize_polygons(
    g: &EnhancedMultigraph,
    boundaries: &[PolygonBoundary],
    labels: &LabelMap,
    lengths: &[Q],
) -> Result<Vec<PolygonChain>, GeometryError> {
    let faces = trace_faces(g, EdgeFilter::BLUE);
    for (c, l) in lengths.iter().enumerate() {
        if !l.is_positive() {
            return Err(GeometryError::NonPositive {
                edge: g.edge(g.blue_edges()[c]).id,
            });
        }
    }
    boundaries
        .iter()
        .map(|b| {
            let order = traversal(b);
            let mut sides = Vec::with_capacity(order.len());
            let mut angles = Vec::with_capacity(order.len());
            for (d, corner) in &order {
                let col = g.blue_column(d.edge).expect("side is blue");
                sides.push(ChainSide {
                    edge: d.edge,
                    direction: labels.label(d.edge),
                    length: lengths[col].clone(),
                    start_face: start_face(g, &faces, b.color, *d),
                    end_face: 0,
                });
                angles.push(b.corners[*corner]);
            }
            let k = sides.len();
            for i in 0..k {
                sides[i].end_face = sides[(i + 1) % k].start_face;
            }
            let mut points = Vec::with_capacity(k);
            let mut p = GridPoint::origin();
            for s in &sides {
                points.push(p.clone());
                p = &p + &s.direction.unit().scale(&s.length);
            }
            let chain = PolygonChain {
                polygon: b.vertex,
                color: b.color,
                sides,
                points,
                angles,
            };
            if !(p.x.is_zero() && p.y.is_zero()) {
                return Err(GeometryError::Closure {
                    polygon: g.vertex(b.vertex).id,
                    gap: Box::new(p),
                });
            }
            Ok(chain)
        })
        .collect()
}
