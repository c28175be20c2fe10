//! Exact dense linear algebra over Q and Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;
pub type ZMatrix = Vec<Vec<BigInt>>;

pub fn to_q(m: &[Vec<BigInt>]) -> QMatrix {
    m.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

pub fn zmat(rows: &[&[i64]]) -> ZMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn dot_z(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_q(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn mat_vec_z(m: &ZMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|r| dot_z(r, v)).collect()
}

pub fn mat_vec_q(m: &QMatrix, v: &[BigRational]) -> Vec<BigRational> {
    m.iter().map(|r| dot_q(r, v)).collect()
}

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref(m: &QMatrix, ncols: usize) -> (QMatrix, Vec<usize>) {
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(pivots.len());
    (a, pivots)
}

pub fn rank_q(m: &QMatrix, ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Rank by fraction-free Bareiss elimination; independent of [`rref`].
pub fn rank_bareiss(m: &ZMatrix, ncols: usize) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..ncols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators with the positive lcm, then makes the result primitive.
pub fn integerize(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    primitive(&ints)
}

/// Nullspace basis from the RREF: one vector per free column, with 1 at that
/// column and 0 at the other free columns.
pub fn nullspace_q(m: &QMatrix, ncols: usize) -> Vec<Vec<BigRational>> {
    let (r, pivots) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square rational matrix, or `None` when singular.
pub fn inverse_q(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let aug: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve_q(m: &QMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let inv = inverse_q(m)?;
    Some(mat_vec_q(&inv, b))
}

/// Indices of a maximal set of linearly independent rows, chosen greedily in
/// order.
pub fn independent_rows(m: &QMatrix, ncols: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: QMatrix = Vec::new();
    for (i, row) in m.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(row.clone());
        if rank_q(&trial, ncols) > basis.len() {
            basis = rref(&trial, ncols).0;
            chosen.push(i);
        }
    }
    chosen
}

/// Saturated integer kernel basis of an integer matrix: a basis of
/// `{x ∈ Z^n : m x = 0}`, computed by unimodular column operations.
pub fn integer_kernel(m: &ZMatrix, ncols: usize) -> Vec<Vec<BigInt>> {
    // Track A·U with U unimodular; columns of U beyond the rank span the kernel.
    let rows = m.len();
    let mut a = m.to_vec();
    let mut u: ZMatrix = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut col = 0;
    for r in 0..rows {
        if col == ncols {
            break;
        }
        loop {
            // Bring the smallest nonzero entry of row r (columns >= col) to col.
            let nz: Vec<usize> = (col..ncols).filter(|&j| !a[r][j].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| a[r][j].abs()).unwrap();
            swap_cols(&mut a, &mut u, col, p);
            let mut done = true;
            for j in col + 1..ncols {
                if a[r][j].is_zero() {
                    continue;
                }
                let qt = a[r][j].div_floor(&a[r][col]);
                add_col_multiple(&mut a, &mut u, j, col, &-qt);
                if !a[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                col += 1;
                break;
            }
        }
    }
    (col..ncols)
        .map(|j| (0..ncols).map(|i| u[i][j].clone()).collect())
        .collect()
}

fn swap_cols(a: &mut ZMatrix, u: &mut ZMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in a.iter_mut() {
        r.swap(i, j);
    }
    for r in u.iter_mut() {
        r.swap(i, j);
    }
}

/// column `dst += k * column src`
fn add_col_multiple(a: &mut ZMatrix, u: &mut ZMatrix, dst: usize, src: usize, k: &BigInt) {
    for r in a.iter_mut() {
        let v = &r[src] * k;
        r[dst] += v;
    }
    for r in u.iter_mut() {
        let v = &r[src] * k;
        r[dst] += v;
    }
}

/// Row Hermite normal form of the lattice spanned by the given rows: rows in
/// echelon form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &ZMatrix, ncols: usize) -> ZMatrix {
    let mut a = rows.to_vec();
    let mut out_row = 0;
    for c in 0..ncols {
        if out_row == a.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (out_row..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(out_row, p);
            if a[out_row][c].is_negative() {
                for x in a[out_row].iter_mut() {
                    *x = -x.clone();
                }
            }
            let mut done = true;
            for i in out_row + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let qt = a[i][c].div_floor(&a[out_row][c]);
                let pr = a[out_row].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= &qt * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if out_row < a.len() && !a[out_row][c].is_zero() {
            let pr = a[out_row].clone();
            for row in a.iter_mut().take(out_row) {
                let qt = row[c].div_floor(&pr[c]);
                if !qt.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pr) {
                        *x -= &qt * y;
                    }
                }
            }
            out_row += 1;
        }
    }
    a.truncate(out_row);
    a
}

/// Leading nonzero column of each row.
pub fn pivot_columns(rows: &ZMatrix) -> Vec<usize> {
    rows.iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_agrees() {
        let m = zmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_q(&to_q(&m), 3), 2);
        assert_eq!(rank_bareiss(&m, 3), 2);
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // x + 2y + 3z = 0 over Z has a basis of determinant-1 sublattice.
        let m = zmat(&[&[2, 4, 6]]);
        let k = integer_kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot_z(&m[0], v).is_zero());
        }
        let h = hermite_normal_form(&k, 3);
        // The kernel lattice contains (-2,1,0) and (-3,0,1), index 1.
        assert_eq!(h, zmat(&[&[1, 1, -1], &[0, 3, -2]]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = to_q(&zmat(&[&[2, 1], &[1, 1]]));
        let inv = inverse_q(&m).unwrap();
        assert_eq!(inv, to_q(&zmat(&[&[1, -1], &[-1, 2]])));
        assert!(inverse_q(&to_q(&zmat(&[&[1, 2], &[2, 4]]))).is_none());
    }
}
