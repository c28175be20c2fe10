//! The linear system whose positive solutions are the side lengths of a nice
//! coloring.
//!
//! Each polygon contributes two integer rows over the blue edges: the real
//! part and the scaled imaginary part of `σ·Σ ℓ(e)·ω^L(e)`, where `σ` is +1
//! for white polygons and -1 for black ones. Columns are the blue edges in
//! ascending index order.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::emg::{EdgeIx, EnhancedMultigraph, VertexIx};
use crate::labeling::LabelMap;
use crate::linalg::{integerize, nullspace_q, rank_bareiss, rank_q, to_q, ZMatrix};
use crate::report::{Check, CheckList};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowPart {
    Re,
    Im,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RowOrigin {
    pub polygon: VertexIx,
    pub part: RowPart,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeSystem {
    pub matrix: ZMatrix,
    pub row_origin: Vec<RowOrigin>,
    /// Blue edge of each column.
    pub columns: Vec<EdgeIx>,
}

impl ShapeSystem {
    pub fn num_rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        rank_q(&to_q(&self.matrix), self.num_cols())
    }

    /// Sum of all rows.
    pub fn row_sum(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.num_cols()];
        for r in &self.matrix {
            for (o, x) in out.iter_mut().zip(r) {
                *o += x;
            }
        }
        out
    }

    /// Is `S·v = 0`?
    pub fn annihilates(&self, v: &[BigInt]) -> bool {
        self.matrix
            .iter()
            .all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<BigInt>().is_zero())
    }
}

pub fn build_shape_system(g: &EnhancedMultigraph, labels: &LabelMap) -> ShapeSystem {
    let m = g.num_blue_edges();
    let mut matrix = Vec::with_capacity(2 * g.num_vertices());
    let mut row_origin = Vec::with_capacity(2 * g.num_vertices());
    for v in 0..g.num_vertices() {
        let sigma = g.color(v).sign();
        let mut re = vec![0i64; m];
        let mut im = vec![0i64; m];
        for d in g.rotation(v) {
            let Some(c) = g.blue_column(d.edge) else { continue };
            let l = labels.label(d.edge);
            re[c] += sigma * l.twice_re();
            im[c] += sigma * l.scaled_im();
        }
        for (part, row) in [(RowPart::Re, re), (RowPart::Im, im)] {
            matrix.push(row.into_iter().map(BigInt::from).collect());
            row_origin.push(RowOrigin { polygon: v, part });
        }
    }
    ShapeSystem {
        matrix,
        row_origin,
        columns: g.blue_edges().to_vec(),
    }
}

/// Basis of `ker S` as primitive integer vectors, in canonical order: one
/// vector per non-pivot column of the reduced row echelon form, positive at
/// that column and zero at the other non-pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<BigInt>>,
    pub ncols: usize,
    pub rank: usize,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// `Σ c_i v_i`.
    pub fn combine(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ncols];
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        out
    }
}

pub fn kernel_basis(s: &ShapeSystem) -> KernelBasis {
    let n = s.num_cols();
    let qm = to_q(&s.matrix);
    let (_, pivots) = crate::linalg::rref(&qm, n);
    let vectors = nullspace_q(&qm, n).iter().map(|v| integerize(v)).collect();
    KernelBasis {
        vectors,
        ncols: n,
        rank: pivots.len(),
    }
}

/// Row sums vanish, rank is `E_blue - 4` by two independent eliminations, and
/// the kernel is 4-dimensional.
pub fn check_lemmas(s: &ShapeSystem, k: &KernelBasis) -> CheckList {
    let n = s.num_cols();
    let mut checks = CheckList::default();
    let total = s.row_sum();
    checks.push(Check::new(
        "rows-sum-to-zero",
        total.iter().all(Zero::is_zero),
        "the sum of all constraint rows is the zero vector",
    ));
    let expected = n.saturating_sub(4);
    let r1 = rank_q(&to_q(&s.matrix), n);
    let r2 = rank_bareiss(&s.matrix, n);
    checks.push(Check::new(
        "rank",
        r1 == expected && r2 == expected,
        format!("rank {r1} (rref), {r2} (bareiss), expected {expected}"),
    ));
    checks.push(Check::new(
        "kernel-dimension",
        k.dimension() == 4,
        format!("kernel dimension {}", k.dimension()),
    ));
    checks.push(Check::new(
        "kernel-in-kernel",
        k.vectors.iter().all(|v| s.annihilates(v)),
        "S·v = 0 for every basis vector",
    ));
    checks
}
