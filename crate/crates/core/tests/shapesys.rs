use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use octacolor::emg::EnhancedMultigraph;
use octacolor::families::{bundled_names, gen_spiral, load_bundled};
use octacolor::labeling::{assign_labels, polygon_boundaries, LabelMap, SeedFlag};
use octacolor::shapesys::{build_shape_system, check_lemmas, kernel_basis, RowPart, ShapeSystem};
use proptest::prelude::*;

fn labeled(g: &EnhancedMultigraph) -> LabelMap {
    let bs = polygon_boundaries(g).unwrap();
    let seed = SeedFlag {
        vertex: 0,
        edge: bs[0].sides[0].edge,
    };
    assign_labels(g, &bs, seed).unwrap()
}

fn system(g: &EnhancedMultigraph) -> ShapeSystem {
    build_shape_system(g, &labeled(g))
}

fn z(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn hexagon_rows_match_closure_vectors() {
    let g = load_bundled("doubled-hexagon").unwrap();
    let s = system(&g);
    let bs = polygon_boundaries(&g).unwrap();
    // Columns in slot order of the white hexagon.
    let order: Vec<usize> = bs[0].sides.iter().map(|d| g.blue_column(d.edge).unwrap()).collect();
    let row = |part| {
        let i = s
            .row_origin
            .iter()
            .position(|o| o.polygon == 0 && o.part == part)
            .unwrap();
        order.iter().map(|&c| s.matrix[i][c].clone()).collect::<Vec<_>>()
    };
    let (re, im) = (row(RowPart::Re), row(RowPart::Im));
    let v1: Vec<BigInt> = re.iter().zip(&im).map(|(a, b)| (a + b) / 2).collect();
    assert_eq!(v1, z(&[1, 1, 0, -1, -1, 0]));
    assert_eq!(im, z(&[0, 1, 1, 0, -1, -1]));
}

#[test]
fn entries_and_column_support() {
    for k in 3..=6 {
        let g = gen_spiral(k).unwrap();
        let s = system(&g);
        assert_eq!(s.num_rows(), 2 * g.num_vertices());
        assert_eq!(s.num_cols(), g.num_blue_edges());
        for (c, &e) in s.columns.iter().enumerate() {
            let ends = g.edge(e).ends;
            for (r, o) in s.row_origin.iter().enumerate() {
                let x = &s.matrix[r][c];
                assert!(x.magnitude() <= &2u32.into());
                if !ends.contains(&o.polygon) {
                    assert!(x.is_zero());
                }
            }
        }
    }
}

/// Setting the missing slots of the hexagon closure to zero: a trapezoid with
/// slots {0,2,3,4} has `ℓ0 = ℓ3 + ℓ4` and `ℓ2 = ℓ4`.
#[test]
fn trapezoid_constraints_by_substitution() {
    let mut seen = 0;
    for k in 3..=6 {
        let g = gen_spiral(k).unwrap();
        let s = system(&g);
        let kb = kernel_basis(&s);
        for b in polygon_boundaries(&g).unwrap() {
            let mut sl = b.slots.clone();
            sl.sort();
            if sl != [0, 2, 3, 4] {
                continue;
            }
            seen += 1;
            let at = |slot: u8| {
                let j = b.slots.iter().position(|&x| x == slot).unwrap();
                g.blue_column(b.sides[j].edge).unwrap()
            };
            for v in &kb.vectors {
                assert_eq!(v[at(0)], &v[at(3)] + &v[at(4)]);
                assert_eq!(v[at(2)], v[at(4)]);
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn dependency_and_rank_laws() {
    let mut gs: Vec<_> = (3..=8).map(|k| gen_spiral(k).unwrap()).collect();
    gs.extend(bundled_names().into_iter().map(|n| load_bundled(n).unwrap()));
    for g in gs {
        let s = system(&g);
        assert!(s.row_sum().iter().all(Zero::is_zero));
        let kb = kernel_basis(&s);
        assert_eq!(kb.rank + kb.dimension(), s.num_cols());
        let checks = check_lemmas(&s, &kb);
        assert!(checks.all_passed(), "{checks}");
    }
    let s4 = system(&gen_spiral(4).unwrap());
    let k4 = kernel_basis(&s4);
    assert_eq!((k4.rank, k4.dimension()), (14, 4));
}

#[test]
fn degenerate_systems() {
    let zero = ShapeSystem {
        matrix: vec![z(&[0, 0, 0])],
        row_origin: Vec::new(),
        columns: vec![0, 1, 2],
    };
    let k = kernel_basis(&zero);
    assert_eq!((k.rank, k.dimension()), (0, 3));
    let full = ShapeSystem {
        matrix: vec![z(&[1, 2, 0, 0]), z(&[0, 1, 0, 0]), z(&[0, 0, 2, -1]), z(&[0, 0, 1, 1])],
        row_origin: Vec::new(),
        columns: vec![0, 1, 2, 3],
    };
    let k = kernel_basis(&full);
    assert_eq!((k.rank, k.dimension()), (4, 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_combinations_are_exact(k in 3usize..8, c in prop::collection::vec((-20i64..20, 1i64..7), 4)) {
        let g = gen_spiral(k).unwrap();
        let s = system(&g);
        let kb = kernel_basis(&s);
        let mut v = vec![BigRational::zero(); s.num_cols()];
        for ((n, d), b) in c.iter().zip(&kb.vectors) {
            let coef = BigRational::new((*n).into(), (*d).into());
            for (x, y) in v.iter_mut().zip(b) {
                *x += &coef * BigRational::from_integer(y.clone());
            }
        }
        for row in &s.matrix {
            let dot = row.iter().zip(&v).fold(BigRational::zero(), |a, (r, x)| a + BigRational::from_integer(r.clone()) * x);
            prop_assert!(dot.is_zero());
        }
    }
}
