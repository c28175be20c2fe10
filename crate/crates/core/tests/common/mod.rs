//! Brute-force oracles shared by the integration tests. They use their own
//! small rational elimination rather than the library's.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

pub fn zv(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn zm(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| zv(r)).collect()
}

/// Reduced row echelon form; returns pivot columns.
#[allow(clippy::needless_range_loop)]
fn echelon(a: &mut [Vec<Q>]) -> Vec<usize> {
    let n = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = Q::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..n {
                    let t = &f * &a[row][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    echelon(&mut a).len()
}

/// Null space of `rows` (each of length `d`) when it is one-dimensional.
fn null_line(rows: &[Vec<i64>], d: usize) -> Option<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let piv = echelon(&mut a);
    if piv.len() != d - 1 {
        return None;
    }
    let free = (0..d).find(|c| !piv.contains(c))?;
    let mut v = vec![Q::zero(); d];
    v[free] = Q::one();
    for (i, &p) in piv.iter().enumerate() {
        v[p] = -a[i][free].clone();
    }
    Some(v)
}

pub fn primitive_q(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
    let z: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = z.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    if g.is_zero() {
        z
    } else {
        z.into_iter().map(|x| x / &g).collect()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Extreme rays of a pointed cone `{y : B·y ≥ 0}` by trying every set of
/// `d - 1` rows as the active set.
pub fn oracle_rays(b: &[Vec<i64>], d: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    if d == 1 {
        for s in [1i64, -1] {
            if b.iter().all(|r| r[0] * s >= 0) {
                out.push(zv(&[s]));
            }
        }
        return out;
    }
    for set in subsets(b.len(), d - 1) {
        let rows: Vec<Vec<i64>> = set.iter().map(|&i| b[i].clone()).collect();
        let Some(v) = null_line(&rows, d) else { continue };
        for s in [1i64, -1] {
            let w: Vec<Q> = v.iter().map(|x| x * qi(s)).collect();
            let ok = b.iter().all(|r| {
                let dot = r.iter().zip(&w).fold(Q::zero(), |a, (x, y)| a + qi(*x) * y);
                !dot.is_negative()
            });
            if ok {
                let p = primitive_q(&w);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out
}

/// Points `x = B·y`, `y` integer, with `0 ≤ x ≤ bound`, by scanning the full
/// box of an independent set of `d` coordinates of `x` and solving for `y`.
pub fn oracle_lattice(b: &[Vec<i64>], d: usize, bound: i64) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::new();
    for (i, r) in b.iter().enumerate() {
        let mut cand: Vec<Vec<i64>> = rows.iter().map(|&j: &usize| b[j].clone()).collect();
        cand.push(r.clone());
        if rank(&cand) > rows.len() {
            rows.push(i);
        }
        if rows.len() == d {
            break;
        }
    }
    assert_eq!(rows.len(), d, "oracle needs full column rank");
    let mut out = Vec::new();
    let total = (bound + 1).pow(d as u32);
    for code in 0..total {
        let mut c = code;
        let xi: Vec<i64> = (0..d)
            .map(|_| {
                let v = c % (bound + 1);
                c /= bound + 1;
                v
            })
            .collect();
        // Solve B_I · y = x_I.
        let mut a: Vec<Vec<Q>> = rows
            .iter()
            .zip(&xi)
            .map(|(&i, &x)| b[i].iter().map(|&e| qi(e)).chain([qi(x)]).collect())
            .collect();
        echelon(&mut a);
        let y: Vec<Q> = (0..d).map(|i| a[i][d].clone()).collect();
        if !y.iter().all(|v| v.is_integer()) {
            continue;
        }
        let x: Vec<Q> = b
            .iter()
            .map(|r| r.iter().zip(&y).fold(Q::zero(), |s, (e, v)| s + qi(*e) * v))
            .collect();
        if x.iter().all(|v| !v.is_negative() && *v <= qi(bound)) {
            out.push(x.iter().map(|v| v.to_integer()).collect());
        }
    }
    out.sort();
    out
}

/// Random inequality system with `d ≤ 4`, `d ≤ m ≤ 12`, entries in [-3, 3],
/// of full column rank.
pub fn random_system(rng: &mut ChaCha8Rng) -> (Vec<Vec<i64>>, usize) {
    loop {
        let d = rng.random_range(1..=4usize);
        let m = rng.random_range(d..=12usize);
        let b: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..d).map(|_| rng.random_range(-3..=3)).collect())
            .collect();
        if rank(&b) == d {
            return (b, d);
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
