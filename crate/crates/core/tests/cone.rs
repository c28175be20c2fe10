mod common;

use common::{oracle_lattice, oracle_rays, random_system, rng, zm, zv};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use octacolor::cone::{
    enumerate_lattice_points, extreme_rays, lattice_basis, restrict_to_kernel, ConeDescription, EnumerationError,
    LatticeBasis,
};
use octacolor::families::gen_spiral;
use octacolor::pipeline::Instance;
use octacolor::shapesys::KernelBasis;
use proptest::prelude::*;

fn rays_of(b: &[Vec<i64>], d: usize) -> ConeDescription {
    extreme_rays(&ConeDescription::from_inequalities(zm(b), d).unwrap()).unwrap()
}

fn kernel(vectors: &[Vec<i64>], ncols: usize) -> KernelBasis {
    KernelBasis {
        vectors: zm(vectors),
        ncols,
        rank: ncols - vectors.len(),
    }
}

fn image_lattice(b: &[Vec<i64>], d: usize) -> LatticeBasis {
    let m = b.len();
    let cols: Vec<Vec<i64>> = (0..d).map(|j| b.iter().map(|r| r[j]).collect()).collect();
    LatticeBasis::from_generators(&zm(&cols), &zm(&cols), m)
}

#[test]
fn small_cones() {
    let q = rays_of(&[vec![1, 0], vec![0, 1]], 2);
    assert_eq!(q.extreme_rays, zm(&[vec![0, 1], vec![1, 0]]));
    assert!(q.has_positive_point);
    let w = rays_of(&[vec![1, 0], vec![0, 1], vec![-1, 1]], 2);
    assert_eq!(w.extreme_rays, zm(&[vec![0, 1], vec![1, 1]]));
    let h = rays_of(&[vec![1, 0]], 2);
    assert_eq!(h.lineality.len(), 1);
    assert_eq!(h.extreme_rays, zm(&[vec![1, 0]]));
}

#[test]
fn restriction_shapes() {
    let k = kernel(
        &[
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1],
        ],
        6,
    );
    let cd = restrict_to_kernel(&k);
    assert_eq!(cd.inequalities.len(), 6);
    for row in &cd.inequalities {
        let nz: Vec<_> = row.iter().filter(|x| !x.is_zero()).collect();
        assert!(nz.len() <= 1 && nz.iter().all(|x| **x == BigInt::from(1)));
    }
    let one = restrict_to_kernel(&kernel(&[vec![2, 4, 6]], 3));
    assert_eq!(one.dimension, 1);
    assert!(one.inequalities.iter().all(|r| r[0].is_positive()));
}

#[test]
fn lattice_basis_saturates() {
    let lb = lattice_basis(&kernel(&[vec![1, 1]], 2));
    assert_eq!(lb.basis, zm(&[vec![1, 1]]));
    let lb = lattice_basis(&kernel(&[vec![1, 0, 1], vec![0, 2, 0]], 3));
    assert_eq!(lb.basis, zm(&[vec![1, 0, 1], vec![0, 1, 0]]));
    assert_eq!(lb.lattice_coords(&zv(&[3, 5, 3])), Some(zv(&[3, 5])));
    assert_eq!(lb.lattice_coords(&zv(&[3, 5, 4])), None);
}

#[test]
fn first_quadrant_points() {
    let k = kernel(&[vec![1, 0], vec![0, 1]], 2);
    let cd = extreme_rays(&restrict_to_kernel(&k)).unwrap();
    let lb = lattice_basis(&k);
    let e = enumerate_lattice_points(&cd, &lb, 2, 1000).unwrap();
    assert_eq!(e.points.len(), 9);
    assert_eq!(e.positive().count(), 4);
    let e0 = enumerate_lattice_points(&cd, &lb, 0, 1000).unwrap();
    assert_eq!(e0.points.len(), 1);
    assert!(e0.points[0].lengths.iter().all(|x| x.is_zero()));
}

#[test]
fn spiral_cone_facts() {
    let inst = Instance::prepare("s", gen_spiral(3).unwrap(), None).unwrap();
    assert_eq!(inst.cone.inequalities.len(), 14);
    assert_eq!(inst.cone.dimension, 4);
    assert_eq!(inst.lattice.rank(), 4);
    for b in &inst.lattice.basis {
        assert!(inst.system.annihilates(b));
    }
    // Integer kernel vectors are integer combinations of the lattice basis.
    for v in &inst.kernel.vectors {
        assert!(inst.lattice.lattice_coords(v).is_some());
    }
    // Extreme rays, as edge vectors, are lattice points of the cone.
    for r in &inst.cone.extreme_rays {
        let x = inst.kernel.combine(r);
        assert!(x.iter().all(|v| !v.is_negative()));
        assert!(
            inst.lattice.lattice_coords(&x).is_some() || {
                // A primitive kernel-coordinate ray may need scaling to be integral.
                let lcm: BigInt = (1..=12).map(BigInt::from).fold(BigInt::from(1), num_integer::lcm);
                let y: Vec<BigInt> = x.iter().map(|v| v * &lcm).collect();
                inst.lattice.lattice_coords(&y).is_some()
            }
        );
    }
    let e = inst.enumerate(3, 1_000_000).unwrap();
    assert_eq!(inst.cone.has_positive_point, e.positive().count() > 0);
    for p in &e.points {
        assert!(inst.system.annihilates(&p.lengths));
        assert!(p.lengths.iter().all(|v| !v.is_negative() && *v <= BigInt::from(3)));
    }
}

#[test]
fn budget_is_reported_with_partial_result() {
    let inst = Instance::prepare("s", gen_spiral(3).unwrap(), None).unwrap();
    match inst.enumerate(6, 50) {
        Err(EnumerationError::BudgetExceeded { budget, found, partial }) => {
            assert_eq!(budget, 50);
            assert_eq!(found, partial.len());
        }
        other => panic!("expected budget error, got {other:?}"),
    }
}

#[test]
fn agrees_with_oracles_on_fixed_seeds() {
    let mut r = rng(7);
    for _ in 0..20 {
        let (b, d) = random_system(&mut r);
        let cd = rays_of(&b, d);
        assert_eq!(cd.extreme_rays, oracle_rays(&b, d), "B = {b:?}");
        let lb = image_lattice(&b, d);
        let got: Vec<_> = enumerate_lattice_points(&cd, &lb, 2, 10_000_000)
            .unwrap()
            .points
            .into_iter()
            .map(|p| p.lengths)
            .collect();
        assert_eq!(got, oracle_lattice(&b, d, 2), "B = {b:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rays_lie_in_cone_and_sum_test_matches(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (b, d) = random_system(&mut r);
        let cd = rays_of(&b, d);
        for ray in &cd.extreme_rays {
            prop_assert!(cd.contains(ray));
        }
        let interior = cd.extreme_rays.iter().fold(vec![BigInt::from(0); d], |a, x| {
            a.iter().zip(x).map(|(p, q)| p + q).collect()
        });
        prop_assert_eq!(cd.has_positive_point, !cd.extreme_rays.is_empty() && cd.strictly_inside(&interior));
    }

    #[test]
    fn enumeration_matches_box_scan(seed in any::<u64>(), bound in 0i64..3) {
        let mut r = rng(seed);
        let (b, d) = random_system(&mut r);
        let cd = rays_of(&b, d);
        let got: Vec<_> = enumerate_lattice_points(&cd, &image_lattice(&b, d), bound as u64, 10_000_000)
            .unwrap()
            .points
            .into_iter()
            .map(|p| p.lengths)
            .collect();
        prop_assert_eq!(got, oracle_lattice(&b, d, bound));
    }
}
