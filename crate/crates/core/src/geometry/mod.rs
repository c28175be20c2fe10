//! Exact realization of side-length vectors as flat surfaces.
//!
//! All coordinates live in `Q(ω)` via [`GridPoint`]. The folded picture puts
//! every polygon in the plane with its boundary counterclockwise and sides in
//! the labelled directions; black polygons are reflected relative to the true
//! surface. The net picture undoes the reflection and uses proper isometries
//! only.

mod develop;
mod mesh;
mod net;
mod realize;
mod tiling;

use thiserror::Error;

pub use develop::{
    cone_point_coordinates, develop_surface, dual_tree, BaseFlag, DualTree, Gluing, RealizedSurface, SurfaceVertex,
    TreeChoice, VertexKind,
};
pub use mesh::{
    build_triangulation, four_color, ColorError, ColoredTriangulation, MeshEdge, MeshError, MeshTriangle, MeshVertex,
    VertexKey,
};
pub use net::{develop_net, NetLayout, NetPolygon};
pub use realize::{realize_polygons, ChainSide, PolygonChain};
pub use tiling::{triarea, unit_triangulate, TilingError, TriangleOrientation, UnitTriangle};

use crate::grid::GridPoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("edge {edge} has non-positive length")]
    NonPositive { edge: u32 },
    #[error("polygon {polygon} does not close: boundary ends at {gap}")]
    Closure { polygon: u32, gap: Box<GridPoint> },
    #[error("angle check fails at surface vertex {vertex}: {detail}")]
    Angle { vertex: usize, detail: String },
    #[error("gluing mismatch along edge {edge}: {detail}")]
    Gluing { edge: u32, detail: String },
    #[error("edge {edge} does not leave the chosen vertex of polygon {polygon}")]
    BadBaseFlag { polygon: u32, edge: u32 },
    #[error("the blue graph is disconnected")]
    Disconnected,
}
