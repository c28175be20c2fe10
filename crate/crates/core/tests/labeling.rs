use octacolor::emg::{Dart, EdgeColor, EnhancedMultigraph, GraphBuilder, PolygonColor};
use octacolor::families::{gen_spiral, load_bundled};
use octacolor::labeling::{assign_labels, polygon_boundaries, polygon_boundary, CornerKind, LabelError, SeedFlag};
use proptest::prelude::*;

fn seed0(g: &EnhancedMultigraph) -> SeedFlag {
    let b = polygon_boundary(g, 0).unwrap();
    SeedFlag {
        vertex: 0,
        edge: b.sides[0].edge,
    }
}

#[test]
fn hexagon_boundary_and_labels() {
    let g = load_bundled("doubled-hexagon").unwrap();
    let b = polygon_boundary(&g, 0).unwrap();
    assert_eq!(b.sides.len(), 6);
    assert!(b.corners.iter().all(|c| *c == CornerKind::Obtuse));
    assert_eq!(b.slots, vec![0, 1, 2, 3, 4, 5]);
    let bs = polygon_boundaries(&g).unwrap();
    let l = assign_labels(&g, &bs, seed0(&g)).unwrap();
    let exps: Vec<u8> = b.sides.iter().map(|d| l.label(d.edge).exponent()).collect();
    assert_eq!(exps, vec![0, 1, 2, 3, 4, 5]);
}

#[test]
fn triangle_boundary() {
    let mut gb = GraphBuilder::new();
    let w = gb.add_vertex(PolygonColor::White);
    let k = gb.add_vertex(PolygonColor::Black);
    let mut es = Vec::new();
    for i in 0..6 {
        let c = if i % 2 == 0 { EdgeColor::Blue } else { EdgeColor::Red };
        es.push(gb.add_edge(w, k, c));
    }
    for &e in &es {
        gb.push_dart(Dart::new(e, 0));
    }
    for &e in es.iter().rev() {
        gb.push_dart(Dart::new(e, 1));
    }
    let g = gb.build().unwrap();
    let b = polygon_boundary(&g, 0).unwrap();
    assert_eq!(b.sides.len(), 3);
    assert_eq!(b.acute_count(), 3);
    let mut slots = b.slots.clone();
    slots.sort();
    assert_eq!(slots, vec![0, 2, 4]);
}

#[test]
fn trapezoid_slots() {
    let g = gen_spiral(3).unwrap();
    let bs = polygon_boundaries(&g).unwrap();
    let trap = bs
        .iter()
        .find(|b| {
            let k = b.sides.len();
            k == 4 && (0..k).any(|j| b.corner_before(j) == CornerKind::Acute && b.corners[j] == CornerKind::Acute)
        })
        .expect("a trapezoid");
    let mut slots = trap.slots.clone();
    slots.sort();
    assert_eq!(slots, vec![0, 2, 3, 4]);
    // The long side sits between the two acute corners and takes slot 0.
    let long = (0..4)
        .find(|&j| trap.corner_before(j) == CornerKind::Acute && trap.corners[j] == CornerKind::Acute)
        .unwrap();
    assert_eq!(trap.slots[long], 0);
}

#[test]
fn boundary_counting_laws() {
    for k in 3..=8 {
        let g = gen_spiral(k).unwrap();
        for b in polygon_boundaries(&g).unwrap() {
            let n = b.sides.len();
            assert_eq!(n + b.acute_count(), 6);
            let angle: usize = b
                .corners
                .iter()
                .map(|c| if *c == CornerKind::Acute { 1 } else { 2 })
                .sum();
            assert_eq!(angle, 3 * (n - 2));
            let mut s = b.slots.clone();
            s.sort();
            s.dedup();
            assert_eq!(s.len(), n);
        }
    }
}

/// Each polygon's consecutive labels turn by its exterior angles, with the
/// sign of its color, and the total turning is one full turn.
#[test]
fn labels_turn_by_exterior_angles() {
    for k in 3..=8 {
        let g = gen_spiral(k).unwrap();
        let bs = polygon_boundaries(&g).unwrap();
        let l = assign_labels(&g, &bs, seed0(&g)).unwrap();
        for b in &bs {
            let n = b.sides.len();
            let sigma = if b.color == PolygonColor::White { 1 } else { -1 };
            let mut total = 0i64;
            for j in 0..n {
                let a = l.label(b.sides[j].edge).exponent() as i64;
                let c = l.label(b.sides[(j + 1) % n].edge).exponent() as i64;
                let turn = b.corners[j].exterior() as i64;
                assert_eq!((c - a - sigma * turn).rem_euclid(6), 0);
                total += turn;
            }
            assert_eq!(total, 6);
        }
    }
}

#[test]
fn moved_red_dart_gives_holonomy() {
    let g = gen_spiral(3).unwrap();
    let mut holonomy = 0;
    for v in 0..g.num_vertices() {
        let rot = g.rotation(v).to_vec();
        for i in 0..rot.len() {
            if g.is_blue(rot[i].edge) {
                continue;
            }
            let mut m = rot.clone();
            let j = (i + 1) % m.len();
            m.swap(i, j);
            let h = g.with_rotation(v, m).unwrap();
            let Ok(bs) = polygon_boundaries(&h) else { continue };
            if let Err(LabelError::Holonomy { .. }) = assign_labels(&h, &bs, seed0(&h)) {
                holonomy += 1;
            }
        }
    }
    assert!(holonomy > 0);
}

#[test]
fn bad_seed_is_rejected() {
    let g = gen_spiral(3).unwrap();
    let bs = polygon_boundaries(&g).unwrap();
    let foreign = g
        .blue_edges()
        .iter()
        .copied()
        .find(|&e| bs[0].side_of(e).is_none())
        .unwrap();
    let r = assign_labels(
        &g,
        &bs,
        SeedFlag {
            vertex: 0,
            edge: foreign,
        },
    );
    assert!(matches!(r, Err(LabelError::BadSeed { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Any other seed flag changes every label by the same constant.
    #[test]
    fn reseeding_is_a_global_rotation(k in 3usize..8, v_pick in 0usize..100, s_pick in 0usize..6) {
        let g = gen_spiral(k).unwrap();
        let bs = polygon_boundaries(&g).unwrap();
        let base = assign_labels(&g, &bs, seed0(&g)).unwrap();
        let v = v_pick % g.num_vertices();
        let e = bs[v].sides[s_pick % bs[v].sides.len()].edge;
        let other = assign_labels(&g, &bs, SeedFlag { vertex: v, edge: e }).unwrap();
        prop_assert_eq!(other.label(e).exponent(), 0);
        let shift = |x: usize| (other.label(x).exponent() as i64 - base.label(x).exponent() as i64).rem_euclid(6);
        let s0 = shift(g.blue_edges()[0]);
        for &x in g.blue_edges() {
            prop_assert_eq!(shift(x), s0);
        }
    }
}
