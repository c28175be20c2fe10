use octacolor::emg::{render_emg, validate_plausible};
use octacolor::families::{bundled_names, gen_spiral, isomorphic, load_bundled, FamilyError, FamilySpec};
use octacolor::pipeline::Instance;

#[test]
fn small_spiral_counts() {
    let c = validate_plausible(&gen_spiral(3).unwrap()).counts;
    assert_eq!((c.vertices, c.blue_edges, c.red_edges), (6, 14, 4));
    let r = validate_plausible(&gen_spiral(4).unwrap());
    assert!(r.plausible);
    assert_eq!((r.counts.vertices, r.counts.blue_edges), (8, 18));
    // Every vertex has degree 6, so red edges make up the rest.
    assert_eq!(r.counts.red_edges, (6 * 8 - 2 * 18) / 2);
}

#[test]
fn below_minimum_is_an_error() {
    assert!(matches!(gen_spiral(2), Err(FamilyError::TooSmall(2))));
}

#[test]
fn bundled_files_are_plausible() {
    for name in bundled_names() {
        let g = load_bundled(name).unwrap();
        assert!(validate_plausible(&g).plausible, "{name}");
    }
    assert!(isomorphic(&load_bundled("spiral-6").unwrap(), &gen_spiral(3).unwrap()));
    assert!(isomorphic(&load_bundled("spiral-8").unwrap(), &gen_spiral(4).unwrap()));
    assert!(!isomorphic(&load_bundled("spiral-6").unwrap(), &gen_spiral(4).unwrap()));
    let err = load_bundled("no-such").unwrap_err();
    assert!(matches!(err, FamilyError::UnknownBundled(_)));
    assert!(err.to_string().contains("spiral-6"));
}

#[test]
fn generation_is_deterministic() {
    for k in 3..=9 {
        let a = render_emg(&gen_spiral(k).unwrap());
        let b = render_emg(&FamilySpec::spiral(k).generate().unwrap());
        assert_eq!(a, b);
        assert_eq!(FamilySpec::spiral(k).name(), format!("spiral-{}", 2 * k));
    }
}

#[test]
fn spirals_carry_positive_solutions() {
    for k in 3..=8 {
        let g = gen_spiral(k).unwrap();
        assert_eq!(g.num_vertices(), 2 * k);
        let inst = Instance::prepare(FamilySpec::spiral(k).name(), g, None).unwrap();
        assert_eq!(inst.kernel.dimension(), 4);
        assert!(inst.cone.has_positive_point, "k = {k}");
    }
}
