//! The integral quadratic form counting unit triangles.
//!
//! A polygon with slot lengths `ℓ_0..ℓ_5` (zero at acute corners) has value
//! `2·Σ ℓ_i ℓ_{i+1} + Σ ℓ_i ℓ_{i+2}`, three times its area in unit triangles.
//! Forms are stored as integer Gram matrices `M` with zero diagonal and
//! evaluated as `Q(ℓ) = ½·ℓᵀMℓ`, which keeps every entry integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::emg::EnhancedMultigraph;
use crate::labeling::PolygonBoundary;
use crate::linalg::{to_q, QMatrix, ZMatrix};
use crate::report::{Check, CheckList};
use crate::shapesys::KernelBasis;

/// Gram matrix of the six-slot form.
pub fn slot_matrix() -> [[i64; 6]; 6] {
    let mut m = [[0i64; 6]; 6];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = match (i as i64 - j as i64).rem_euclid(6) {
                1 | 5 => 2,
                2 | 4 => 1,
                _ => 0,
            };
        }
    }
    m
}

/// `2·Σ ℓ_i ℓ_{i+1} + Σ ℓ_i ℓ_{i+2}`, indices mod 6.
pub fn slot_value(l: &[BigInt; 6]) -> BigInt {
    let mut v = BigInt::zero();
    for i in 0..6 {
        v += BigInt::from(2) * &l[i] * &l[(i + 1) % 6];
        v += &l[i] * &l[(i + 2) % 6];
    }
    v
}

/// One polygon's form on blue-edge columns. `entries[(a, b)]` lists Gram
/// contributions `M[a][b]` between columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonForm {
    pub polygon: usize,
    pub columns: Vec<usize>,
    #[serde(serialize_with = "crate::json::ser_zmatrix")]
    pub matrix: ZMatrix,
}

impl PolygonForm {
    /// `½·xᵀMx` where `x` is indexed by blue column.
    pub fn value(&self, lengths: &[BigInt]) -> BigInt {
        let x: Vec<&BigInt> = self.columns.iter().map(|&c| &lengths[c]).collect();
        half_form(&self.matrix, &x)
    }
}

fn half_form(m: &ZMatrix, x: &[&BigInt]) -> BigInt {
    let mut v = BigInt::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            v += a * x[i] * x[j];
        }
    }
    v / 2
}

pub fn polygon_form(g: &EnhancedMultigraph, b: &PolygonBoundary) -> PolygonForm {
    let m = slot_matrix();
    let mut columns: Vec<usize> = b
        .sides
        .iter()
        .map(|d| g.blue_column(d.edge).expect("blue side"))
        .collect();
    columns.sort();
    columns.dedup();
    let pos = |c: usize| columns.iter().position(|&x| x == c).unwrap();
    let n = columns.len();
    let mut matrix = vec![vec![BigInt::zero(); n]; n];
    for (i, di) in b.sides.iter().enumerate() {
        for (j, dj) in b.sides.iter().enumerate() {
            let a = pos(g.blue_column(di.edge).unwrap());
            let c = pos(g.blue_column(dj.edge).unwrap());
            matrix[a][c] += m[b.slots[i] as usize][b.slots[j] as usize];
        }
    }
    PolygonForm {
        polygon: b.vertex,
        columns,
        matrix,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_conjectured(&self) -> bool {
        (self.positive, self.negative, self.zero) == (1, 3, 0)
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticForm {
    /// Gram matrix on blue-edge columns; `Q(V) = ½·VᵀGV`.
    #[serde(serialize_with = "crate::json::ser_zmatrix")]
    pub global: ZMatrix,
    /// `K·G·Kᵀ` for the kernel basis rows `K`.
    #[serde(serialize_with = "ser_opt_qmatrix")]
    pub restricted: Option<QMatrix>,
    pub signature: Option<Signature>,
}

fn ser_opt_qmatrix<S: serde::Serializer>(m: &Option<QMatrix>, s: S) -> Result<S::Ok, S::Error> {
    match m {
        Some(m) => crate::json::ser_qmatrix(m, s),
        None => s.serialize_none(),
    }
}

impl QuadraticForm {
    pub fn value(&self, v: &[BigInt]) -> BigInt {
        let x: Vec<&BigInt> = v.iter().collect();
        half_form(&self.global, &x)
    }
}

pub fn assemble_form(g: &EnhancedMultigraph, boundaries: &[PolygonBoundary]) -> QuadraticForm {
    let n = g.num_blue_edges();
    let mut global = vec![vec![BigInt::zero(); n]; n];
    for b in boundaries {
        let f = polygon_form(g, b);
        for (i, &ci) in f.columns.iter().enumerate() {
            for (j, &cj) in f.columns.iter().enumerate() {
                global[ci][cj] += &f.matrix[i][j];
            }
        }
    }
    QuadraticForm {
        global,
        restricted: None,
        signature: None,
    }
}

/// `R = K·G·Kᵀ` for the rows of `basis`.
pub fn congruence(global: &ZMatrix, basis: &[Vec<BigInt>]) -> QMatrix {
    let kq = to_q(basis);
    let gq = to_q(global);
    let d = kq.len();
    let gk: QMatrix = kq
        .iter()
        .map(|k| {
            gq.iter()
                .map(|row| row.iter().zip(k).fold(BigRational::zero(), |a, (x, y)| a + x * y))
                .collect()
        })
        .collect();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    kq[i]
                        .iter()
                        .zip(&gk[j])
                        .fold(BigRational::zero(), |a, (x, y)| a + x * y)
                })
                .collect()
        })
        .collect()
}

pub fn restrict_form(q: &QuadraticForm, k: &KernelBasis) -> QuadraticForm {
    let r = congruence(&q.global, &k.vectors);
    let s = signature(&r);
    QuadraticForm {
        global: q.global.clone(),
        restricted: Some(r),
        signature: Some(s),
    }
}

/// Inertia of a symmetric rational matrix by symmetric Gaussian elimination.
/// When every remaining diagonal entry vanishes, `e_i ← e_i + e_j` for some
/// nonzero `a_ij` creates the pivot `2·a_ij`.
pub fn signature(m: &QMatrix) -> Signature {
    let mut a: QMatrix = m.to_vec();
    let n = a.len();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !alive.is_empty() {
        let pivot = alive.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = alive
                    .iter()
                    .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else {
                    sig.zero += alive.len();
                    break;
                };
                let row_j = a[j].clone();
                for (x, y) in a[i].iter_mut().zip(&row_j) {
                    *x += y;
                }
                for r in a.iter_mut() {
                    let v = r[j].clone();
                    r[i] += v;
                }
                i
            }
        };
        let pv = a[p][p].clone();
        if pv.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        alive.retain(|&x| x != p);
        let row_p = a[p].clone();
        for &i in &alive {
            let f = &a[i][p] / &pv;
            if f.is_zero() {
                continue;
            }
            for &j in &alive {
                let v = &f * &row_p[j];
                a[i][j] -= v;
            }
            a[i][p] = BigRational::zero();
        }
        for &i in &alive {
            a[p][i] = BigRational::zero();
        }
    }
    sig
}

/// `Q(V,V) = 3·#triangles` and `Q(V,V) = 3·Σ triarea`.
pub fn verify_triangle_identity(
    q: &QuadraticForm,
    v: &[BigInt],
    triangle_count: usize,
    triarea_sum: &BigRational,
) -> CheckList {
    let value = q.value(v);
    let mut checks = CheckList::default();
    let three_t = BigInt::from(3 * triangle_count);
    checks.push(Check::new(
        "form-counts-triangles",
        value == three_t,
        format!("Q(V,V) = {value}, 3·#triangles = {three_t}"),
    ));
    let three_a = triarea_sum * BigRational::from_integer(BigInt::from(3));
    checks.push(Check::new(
        "form-equals-area",
        BigRational::from_integer(value.clone()) == three_a,
        format!("Q(V,V) = {value}, 3·Σ triarea = {three_a}"),
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::q;

    #[test]
    fn slot_form_normalization() {
        let ones: [BigInt; 6] = std::array::from_fn(|_| BigInt::from(1));
        assert_eq!(slot_value(&ones), BigInt::from(18));
        let m = slot_matrix();
        let total: i64 = m.iter().flatten().sum();
        assert_eq!(total / 2, 18);
    }

    #[test]
    fn signature_examples() {
        let d = |v: &[i64]| -> QMatrix {
            (0..v.len())
                .map(|i| (0..v.len()).map(|j| if i == j { q(v[i]) } else { q(0) }).collect())
                .collect()
        };
        let s = signature(&d(&[1, -1, -1, -1]));
        assert!(s.is_conjectured());
        assert_eq!(
            signature(&d(&[0, 0])),
            Signature {
                positive: 0,
                negative: 0,
                zero: 2
            }
        );
        let hyperbolic = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(
            signature(&hyperbolic),
            Signature {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
    }
}
