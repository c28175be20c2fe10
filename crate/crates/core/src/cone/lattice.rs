//! Integer points of the solution space and their enumeration in a box.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use super::ConeDescription;
use crate::linalg::{
    dot_q, hermite_normal_form, independent_rows, integer_kernel, inverse_q, mat_vec_q, pivot_columns, solve_q, to_q,
    transpose, QMatrix, ZMatrix,
};
use crate::shapesys::KernelBasis;

/// A lattice in edge coordinates together with the coordinate system it is
/// measured against (the kernel basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    /// Hermite normal form rows, each of length `E_b`.
    pub basis: ZMatrix,
    /// Kernel basis rows the cone's inequalities are written in.
    pub coordinates: ZMatrix,
    /// `basis[i] = Σ_j to_kernel[i][j] · coordinates[j]`.
    pub to_kernel: QMatrix,
    /// `coordinates[i] = Σ_j from_kernel[i][j] · basis[j]`.
    pub from_kernel: QMatrix,
}

impl LatticeBasis {
    /// Lattice generated by `generators`, measured against `coordinates`.
    /// Both must span the same rational subspace.
    pub fn from_generators(generators: &ZMatrix, coordinates: &ZMatrix, ncols: usize) -> Self {
        let basis = hermite_normal_form(generators, ncols);
        let to_kernel: QMatrix = basis
            .iter()
            .map(|b| coords_in(coordinates, b, ncols).expect("lattice vector in span of coordinates"))
            .collect();
        let from_kernel = if to_kernel.len() == coordinates.len() {
            inverse_q(&to_kernel).unwrap_or_default()
        } else {
            Vec::new()
        };
        LatticeBasis {
            basis,
            coordinates: coordinates.clone(),
            to_kernel,
            from_kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ncols(&self) -> usize {
        self.coordinates.first().map_or(0, |r| r.len())
    }

    /// `Σ c_i basis_i`.
    pub fn point(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ncols()];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    /// Kernel coordinates of the lattice point with the given coefficients.
    pub fn kernel_coords(&self, coeffs: &[BigInt]) -> Vec<BigRational> {
        let d = self.coordinates.len();
        let mut out = vec![BigRational::zero(); d];
        for (c, row) in coeffs.iter().zip(&self.to_kernel) {
            let cq = BigRational::from_integer(c.clone());
            for (o, t) in out.iter_mut().zip(row) {
                *o += &cq * t;
            }
        }
        out
    }

    /// Lattice coefficients of an edge vector, if it lies in the lattice.
    pub fn lattice_coords(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = coords_in(&self.basis, x, self.ncols())?;
        c.iter().map(|v| v.is_integer().then(|| v.to_integer())).collect()
    }
}

/// Coefficients of `x` in the basis given by the rows of `rows`, when `x` lies
/// in their span.
fn coords_in(rows: &ZMatrix, x: &[BigInt], ncols: usize) -> Option<Vec<BigRational>> {
    let d = rows.len();
    if d == 0 {
        return x.iter().all(|v| v.is_zero()).then(Vec::new);
    }
    let cols = transpose(rows, ncols);
    let qcols = to_q(&cols);
    let pick = independent_rows(&qcols, d);
    if pick.len() < d {
        return None;
    }
    let square: QMatrix = pick.iter().map(|&i| qcols[i].clone()).collect();
    let rhs: Vec<BigRational> = pick.iter().map(|&i| BigRational::from_integer(x[i].clone())).collect();
    let c = solve_q(&square, &rhs)?;
    let back = mat_vec_q(&qcols, &c);
    let ok = back
        .iter()
        .zip(x)
        .all(|(a, b)| *a == BigRational::from_integer(b.clone()));
    ok.then_some(c)
}

/// Saturated basis of `span(k) ∩ Z^E_b`, in Hermite normal form.
pub fn lattice_basis(k: &KernelBasis) -> LatticeBasis {
    let m = k.ncols;
    let complement = integer_kernel(&k.vectors, m);
    let generators = if complement.is_empty() {
        (0..m)
            .map(|i| (0..m).map(|j| BigInt::from(i32::from(i == j))).collect())
            .collect()
    } else {
        integer_kernel(&complement, m)
    };
    LatticeBasis::from_generators(&generators, &k.vectors, m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePoint {
    #[serde(serialize_with = "crate::json::ser_zvec")]
    pub lengths: Vec<BigInt>,
    #[serde(serialize_with = "crate::json::ser_zvec")]
    pub lattice_coords: Vec<BigInt>,
    #[serde(serialize_with = "crate::json::ser_qvec")]
    pub kernel_coords: Vec<BigRational>,
    pub strictly_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeEnumeration {
    pub bound: u64,
    pub points: Vec<LatticePoint>,
    pub nodes_visited: u64,
}

impl LatticeEnumeration {
    pub fn positive(&self) -> impl Iterator<Item = &LatticePoint> {
        self.points.iter().filter(|p| p.strictly_positive)
    }

    pub fn boundary(&self) -> impl Iterator<Item = &LatticePoint> {
        self.points.iter().filter(|p| !p.strictly_positive)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("lattice enumeration exceeded the budget of {budget} candidates ({found} points found so far); raise --budget or lower --max-len")]
    BudgetExceeded {
        budget: u64,
        found: usize,
        partial: Vec<LatticePoint>,
    },
}

/// All lattice points with every edge coordinate in `[0, bound]` that satisfy
/// the cone inequalities, sorted by edge vector.
pub fn enumerate_lattice_points(
    cd: &ConeDescription,
    lb: &LatticeBasis,
    bound: u64,
    budget: u64,
) -> Result<LatticeEnumeration, EnumerationError> {
    let h = &lb.basis;
    let m = lb.ncols();
    let pivots = pivot_columns(h);
    let r = h.len();
    let bound_z = BigInt::from(bound);
    let mut state = Search {
        h,
        pivots: &pivots,
        m,
        bound: &bound_z,
        budget,
        visited: 0,
        found: Vec::new(),
        exceeded: false,
    };
    let mut coeffs = Vec::with_capacity(r);
    let partial = vec![BigInt::zero(); m];
    state.recurse(&mut coeffs, &partial);

    let mut points: Vec<LatticePoint> = state
        .found
        .into_iter()
        .filter_map(|(c, x)| {
            let kernel_coords = lb.kernel_coords(&c);
            let in_cone = to_q(&cd.inequalities)
                .iter()
                .all(|row| !dot_q(row, &kernel_coords).is_negative());
            in_cone.then(|| LatticePoint {
                strictly_positive: x.iter().all(|v| v.is_positive()),
                lengths: x,
                lattice_coords: c,
                kernel_coords,
            })
        })
        .collect();
    points.sort_by(|a, b| a.lengths.cmp(&b.lengths));
    if state.exceeded {
        return Err(EnumerationError::BudgetExceeded {
            budget,
            found: points.len(),
            partial: points,
        });
    }
    Ok(LatticeEnumeration {
        bound,
        points,
        nodes_visited: state.visited,
    })
}

struct Search<'a> {
    h: &'a ZMatrix,
    pivots: &'a [usize],
    m: usize,
    bound: &'a BigInt,
    budget: u64,
    visited: u64,
    found: Vec<(Vec<BigInt>, Vec<BigInt>)>,
    exceeded: bool,
}

impl Search<'_> {
    fn in_range(&self, v: &BigInt) -> bool {
        !v.is_negative() && v <= self.bound
    }

    fn recurse(&mut self, coeffs: &mut Vec<BigInt>, partial: &[BigInt]) {
        if self.exceeded {
            return;
        }
        let i = coeffs.len();
        if i == self.h.len() {
            if partial.iter().all(|v| self.in_range(v)) {
                self.found.push((coeffs.clone(), partial.to_vec()));
            }
            return;
        }
        let p = self.pivots[i];
        let hp = &self.h[i][p];
        let lo = (-&partial[p]).div_ceil(hp);
        let hi = (self.bound - &partial[p]).div_floor(hp);
        let next_pivot = self.pivots.get(i + 1).copied().unwrap_or(self.m);
        let mut c = lo;
        while c <= hi {
            self.visited += 1;
            if self.visited > self.budget {
                self.exceeded = true;
                return;
            }
            let next: Vec<BigInt> = partial.iter().zip(&self.h[i]).map(|(a, b)| a + &c * b).collect();
            if (p..next_pivot).all(|j| self.in_range(&next[j])) {
                coeffs.push(c.clone());
                self.recurse(coeffs, &next);
                coeffs.pop();
            }
            c += 1;
        }
    }
}
