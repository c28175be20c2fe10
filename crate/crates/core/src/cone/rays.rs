//! Double description method in exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{ConeDescription, ConeError};
use crate::linalg::{
    hermite_normal_form, independent_rows, integer_kernel, integerize, inverse_q, mat_vec_z, primitive, rank_q, to_q,
    transpose, ZMatrix,
};

/// Fills in extreme rays, lineality and the positivity flag.
///
/// When `B` has a kernel the cone contains lines; rays are then computed for
/// the pointed part inside the row space of `B` and the lineality basis is
/// reported separately.
pub fn extreme_rays(cd: &ConeDescription) -> Result<ConeDescription, ConeError> {
    if cd.inequalities.is_empty() {
        return Err(ConeError::Empty);
    }
    let d = cd.dimension;
    let b = &cd.inequalities;
    let lineality = if d == 0 {
        Vec::new()
    } else {
        hermite_normal_form(&integer_kernel(b, d), d)
    };

    let rays = if lineality.is_empty() {
        pointed_rays(b, d)
    } else {
        // Parametrize the row space: x = Wᵀ y.
        let w: ZMatrix = independent_rows(&to_q(b), d)
            .into_iter()
            .map(|i| b[i].clone())
            .collect();
        let r = w.len();
        if r == 0 {
            Vec::new()
        } else {
            let wt = transpose(&w, d);
            let reduced: ZMatrix = b
                .iter()
                .map(|row| (0..r).map(|j| (0..d).map(|k| &row[k] * &wt[k][j]).sum()).collect())
                .collect();
            pointed_rays(&reduced, r)
                .into_iter()
                .map(|y| primitive(&mat_vec_z(&wt, &y)))
                .collect()
        }
    };
    let mut rays = rays;
    rays.sort();
    rays.dedup();

    let has_positive_point = !rays.is_empty() && {
        let mut sum = vec![BigInt::zero(); d];
        for r in &rays {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += x;
            }
        }
        cd.strictly_inside(&sum)
    };

    Ok(ConeDescription {
        inequalities: cd.inequalities.clone(),
        dimension: d,
        extreme_rays: rays,
        lineality,
        has_positive_point,
        rays_computed: true,
    })
}

struct Ray {
    v: Vec<BigInt>,
    /// Evaluations against every row of `B`.
    s: Vec<BigInt>,
}

impl Ray {
    fn new(b: &ZMatrix, v: Vec<BigInt>) -> Ray {
        let v = primitive(&v);
        let s = mat_vec_z(b, &v);
        Ray { v, s }
    }
}

/// Rays of `{x : B x ≥ 0}` for `B` of full column rank `d`.
fn pointed_rays(b: &ZMatrix, d: usize) -> Vec<Vec<BigInt>> {
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by(|&i, &j| {
        let nz = |r: &Vec<BigInt>| r.iter().filter(|x| !x.is_zero()).count();
        nz(&b[i]).cmp(&nz(&b[j])).then_with(|| b[i].cmp(&b[j])).then(i.cmp(&j))
    });
    let sorted: ZMatrix = order.iter().map(|&i| b[i].clone()).collect();
    let initial = independent_rows(&to_q(&sorted), d);
    debug_assert_eq!(initial.len(), d);

    let base: Vec<Vec<BigRational>> = initial.iter().map(|&i| to_q(&[sorted[i].clone()]).remove(0)).collect();
    let inv = inverse_q(&base).expect("independent rows");
    let inv_cols = transpose(&inv, d);
    let mut rays: Vec<Ray> = inv_cols.iter().map(|c| Ray::new(b, integerize(c))).collect();

    let mut processed: Vec<usize> = initial.iter().map(|&i| order[i]).collect();
    let rest: Vec<usize> = (0..sorted.len())
        .filter(|i| !initial.contains(i))
        .map(|i| order[i])
        .collect();

    for row in rest {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in rays {
            if r.s[row].is_positive() {
                pos.push(r);
            } else if r.s[row].is_negative() {
                neg.push(r);
            } else {
                zero.push(r);
            }
        }
        let mut next = Vec::new();
        for p in &pos {
            for n in &neg {
                if adjacent(b, &processed, p, n, d) {
                    let a = &p.s[row];
                    let c = -&n.s[row];
                    let v: Vec<BigInt> = p.v.iter().zip(&n.v).map(|(x, y)| &c * x + a * y).collect();
                    next.push(Ray::new(b, v));
                }
            }
        }
        next.extend(pos);
        next.extend(zero);
        next.sort_by(|x, y| x.v.cmp(&y.v));
        next.dedup_by(|x, y| x.v == y.v);
        rays = next;
        processed.push(row);
    }
    rays.into_iter().map(|r| r.v).collect()
}

/// Algebraic adjacency test: the rows active at both rays have rank `d - 2`.
fn adjacent(b: &ZMatrix, processed: &[usize], p: &Ray, n: &Ray, d: usize) -> bool {
    if d < 2 {
        return false;
    }
    let common: ZMatrix = processed
        .iter()
        .filter(|&&i| p.s[i].is_zero() && n.s[i].is_zero())
        .map(|&i| b[i].clone())
        .collect();
    if common.len() < d - 2 {
        return false;
    }
    rank_q(&to_q(&common), d) == d - 2
}
