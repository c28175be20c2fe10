//! Exact combinatorics and geometry of nice colorings of flat cone octahedra.
//!
//! The pipeline runs from an enhanced multigraph (the combinatorial type of a
//! coloring) to the cone of its side-length vectors, its integer points, the
//! unit-triangulated surface with its vertex 4-coloring, and the quadratic
//! form counting triangles.

pub mod cli;
pub mod cone;
pub mod emg;
pub mod families;
pub mod geometry;
pub mod grid;
pub mod json;
pub mod labeling;
pub mod linalg;
pub mod pipeline;
pub mod qform;
pub mod report;
pub mod shapesys;
pub mod svg;
