//! The cone of nonnegative solutions of the shape system, in kernel
//! coordinates, with its extreme rays and integer points.

mod lattice;
mod rays;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

pub use lattice::{
    enumerate_lattice_points, lattice_basis, EnumerationError, LatticeBasis, LatticeEnumeration, LatticePoint,
};
pub use rays::extreme_rays;

use crate::linalg::{mat_vec_z, primitive, transpose, ZMatrix};
use crate::shapesys::KernelBasis;

/// Default node budget for lattice enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `{x : B·x ≥ 0}` with `B` of size `m × d`. Row `i` of `B` expresses edge
/// coordinate `i` in the kernel basis, cleared to a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeDescription {
    #[serde(serialize_with = "crate::json::ser_zmatrix")]
    pub inequalities: ZMatrix,
    pub dimension: usize,
    #[serde(serialize_with = "crate::json::ser_zmatrix")]
    pub extreme_rays: ZMatrix,
    /// Integer basis of `ker B`; empty when the cone is pointed.
    #[serde(serialize_with = "crate::json::ser_zmatrix")]
    pub lineality: ZMatrix,
    pub has_positive_point: bool,
    pub rays_computed: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("inequality matrix has no rows")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
}

impl ConeDescription {
    /// Cone with the given inequality rows and no rays yet.
    pub fn from_inequalities(b: ZMatrix, dimension: usize) -> Result<Self, ConeError> {
        if b.is_empty() {
            return Err(ConeError::Empty);
        }
        for (row, r) in b.iter().enumerate() {
            if r.len() != dimension {
                return Err(ConeError::Ragged {
                    row,
                    found: r.len(),
                    expected: dimension,
                });
            }
        }
        Ok(ConeDescription {
            inequalities: b,
            dimension,
            extreme_rays: Vec::new(),
            lineality: Vec::new(),
            has_positive_point: false,
            rays_computed: false,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.inequalities.len()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        mat_vec_z(&self.inequalities, x).iter().all(|v| !v.is_negative())
    }

    pub fn strictly_inside(&self, x: &[BigInt]) -> bool {
        mat_vec_z(&self.inequalities, x).iter().all(|v| v.is_positive())
    }
}

/// `B` with `B[i][j] = kernel_j[i]`, rows made primitive.
pub fn restrict_to_kernel(k: &KernelBasis) -> ConeDescription {
    let d = k.dimension();
    let b: ZMatrix = transpose(&k.vectors, k.ncols)
        .into_iter()
        .map(|r| primitive(&r))
        .collect();
    ConeDescription::from_inequalities(b, d).expect("kernel basis with at least one column")
}
