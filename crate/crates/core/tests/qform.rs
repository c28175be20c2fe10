use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use octacolor::families::{gen_spiral, load_bundled};
use octacolor::labeling::polygon_boundaries;
use octacolor::linalg::{to_q, QMatrix};
use octacolor::pipeline::Instance;
use octacolor::qform::{
    assemble_form, congruence, polygon_form, restrict_form, signature, slot_matrix, slot_value, Signature,
};
use octacolor::shapesys::KernelBasis;
use proptest::prelude::*;

fn arr(v: [i64; 6]) -> [BigInt; 6] {
    v.map(BigInt::from)
}

fn qm(rows: &[Vec<i64>]) -> QMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

fn sig(p: usize, n: usize, z: usize) -> Signature {
    Signature {
        positive: p,
        negative: n,
        zero: z,
    }
}

/// Cyclic Jacobi eigenvalue iteration in floating point.
#[allow(clippy::needless_range_loop)]
fn eigen_signature(m: &QMatrix) -> Signature {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap()).collect())
        .collect();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let scale = a.iter().flatten().fold(1.0f64, |x, y| x.max(y.abs()));
    let tol = 1e-9 * scale;
    let mut s = sig(0, 0, 0);
    for (i, row) in a.iter().enumerate() {
        if row[i] > tol {
            s.positive += 1;
        } else if row[i] < -tol {
            s.negative += 1;
        } else {
            s.zero += 1;
        }
    }
    s
}

#[test]
fn slot_values_of_small_polygons() {
    assert_eq!(slot_value(&arr([1; 6])), BigInt::from(18));
    for s in 1..6 {
        assert_eq!(slot_value(&arr([s, 0, s, 0, s, 0])), BigInt::from(3 * s * s));
    }
    for (a, b) in [(1, 2), (3, 5), (4, 1)] {
        assert_eq!(slot_value(&arr([a, b, 0, a, b, 0])), BigInt::from(6 * a * b));
    }
    let m = slot_matrix();
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row[i], 0);
        assert_eq!(row.iter().sum::<i64>(), 6);
    }
}

#[test]
fn slot_value_is_cyclic_and_reflection_invariant() {
    let l = [3, 1, 4, 1, 5, 9];
    let base = slot_value(&arr(l));
    for r in 0..6 {
        let mut rot = l;
        rot.rotate_left(r);
        assert_eq!(slot_value(&arr(rot)), base);
        rot.reverse();
        assert_eq!(slot_value(&arr(rot)), base);
    }
}

#[test]
fn doubled_hexagon_form_is_twice_one_hexagon() {
    let g = load_bundled("doubled-hexagon").unwrap();
    let bs = polygon_boundaries(&g).unwrap();
    let q = assemble_form(&g, &bs);
    let f0 = polygon_form(&g, &bs[0]);
    let f1 = polygon_form(&g, &bs[1]);
    assert_eq!(f0.columns, f1.columns);
    assert_eq!(f0.columns.len(), 6);
    let ones = vec![BigInt::from(1); 6];
    assert_eq!(f0.value(&ones), BigInt::from(18));
    assert_eq!(q.value(&ones), BigInt::from(36));
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(q.global[i][j], &f0.matrix[i][j] + &f1.matrix[i][j]);
        }
    }
}

#[test]
fn restriction_to_full_and_line() {
    let g = gen_spiral(3).unwrap();
    let bs = polygon_boundaries(&g).unwrap();
    let q = assemble_form(&g, &bs);
    let n = g.num_blue_edges();
    let id: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let full = restrict_form(
        &q,
        &KernelBasis {
            vectors: id,
            ncols: n,
            rank: 0,
        },
    );
    assert_eq!(full.restricted.unwrap(), to_q(&q.global));
    let inst = Instance::prepare("s", g, None).unwrap();
    let v = inst.kernel.vectors[0].clone();
    let line = congruence(&q.global, std::slice::from_ref(&v));
    assert_eq!(line, vec![vec![BigRational::from_integer(q.value(&v) * 2)]]);
}

#[test]
fn signature_examples() {
    assert_eq!(signature(&qm(&[vec![0, 1], vec![1, 0]])), sig(1, 1, 0));
    assert_eq!(signature(&qm(&[vec![0, 0], vec![0, 0]])), sig(0, 0, 2));
    assert_eq!(
        signature(&qm(&[vec![2, 0, 0], vec![0, -3, 0], vec![0, 0, 0]])),
        sig(1, 1, 1)
    );
    assert_eq!(signature(&qm(&[vec![1, 1], vec![1, 1]])), sig(1, 0, 1));
    let m = slot_matrix().iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    assert_eq!(signature(&qm(&m)), eigen_signature(&qm(&m)));
}

#[test]
fn spiral_signatures_agree_with_eigenvalues() {
    for k in 3..=8 {
        let inst = Instance::prepare("s", gen_spiral(k).unwrap(), None).unwrap();
        let r = inst.form.restricted.as_ref().unwrap();
        assert_eq!(inst.signature(), eigen_signature(r));
        assert_eq!(inst.signature(), inst.signature_in_lattice_basis());
    }
}

fn unimodular(ops: &[(usize, usize, i64)], n: usize) -> Vec<Vec<BigInt>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let rj = u[j].clone();
        for (x, y) in u[i].iter_mut().zip(&rj) {
            *x += c * y;
        }
    }
    u.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signature_is_a_congruence_invariant(
        n in 1usize..6,
        entries in prop::collection::vec(-4i64..5, 36),
        ops in prop::collection::vec((0usize..6, 0usize..6, -2i64..3), 0..8),
    ) {
        let mut g = vec![vec![BigInt::from(0); n]; n];
        for i in 0..n {
            for j in i..n {
                let x = BigInt::from(entries[i * 6 + j]);
                g[i][j] = x.clone();
                g[j][i] = x;
            }
        }
        let s = signature(&to_q(&g));
        prop_assert_eq!(s, eigen_signature(&to_q(&g)));
        prop_assert_eq!(s.positive + s.negative + s.zero, n);
        let u = unimodular(&ops, n);
        prop_assert_eq!(signature(&congruence(&g, &u)), s);
    }

    #[test]
    fn slot_value_matches_gram_matrix(l in prop::array::uniform6(-10i64..10)) {
        let m = slot_matrix();
        let mut twice = 0i64;
        for i in 0..6 {
            for j in 0..6 {
                twice += m[i][j] * l[i] * l[j];
            }
        }
        prop_assert_eq!(slot_value(&arr(l)), BigInt::from(twice / 2));
    }
}
