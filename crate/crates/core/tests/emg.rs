use octacolor::emg::{
    parse_emg, render_emg, trace_faces, validate_plausible, Dart, EdgeFilter, EnhancedMultigraph, FaceKind, GraphError,
    PolygonColor, Rule,
};
use octacolor::families::{bundled_names, gen_spiral, load_bundled};
use proptest::prelude::*;

fn instances() -> Vec<EnhancedMultigraph> {
    let mut v: Vec<_> = (3..=6).map(|k| gen_spiral(k).unwrap()).collect();
    v.extend(bundled_names().into_iter().map(|n| load_bundled(n).unwrap()));
    v
}

#[test]
fn render_parse_round_trip() {
    for g in instances() {
        let text = render_emg(&g);
        let h = parse_emg(&text).unwrap();
        assert_eq!(h, g);
        assert_eq!(render_emg(&h), text);
    }
}

#[test]
fn spiral_counts() {
    let r = validate_plausible(&gen_spiral(3).unwrap());
    assert!(r.plausible, "{:?}", r.findings);
    let c = r.counts;
    assert_eq!((c.vertices, c.blue_edges, c.red_edges), (6, 14, 4));
    assert_eq!((c.bigons, c.quadrilaterals, c.other_faces), (6, 4, 0));
}

#[test]
fn faces_partition_darts() {
    for g in instances() {
        for filter in [EdgeFilter::BLUE, EdgeFilter::ALL] {
            let fs = trace_faces(&g, filter);
            let mut seen = std::collections::HashSet::new();
            for f in &fs.faces {
                for d in &f.darts {
                    assert!(seen.insert(*d), "dart {d:?} in two faces");
                }
            }
            let expected: usize = (0..g.num_edges()).filter(|&e| filter.accepts(g.edge_color(e))).count() * 2;
            assert_eq!(seen.len(), expected);
            assert_eq!(fs.euler_characteristic(&g), 2);
        }
    }
}

#[test]
fn doubled_hexagon_is_six_bigons() {
    let g = load_bundled("doubled-hexagon").unwrap();
    let fs = trace_faces(&g, EdgeFilter::BLUE);
    assert_eq!(fs.len(), 6);
    assert!(fs.faces.iter().all(|f| f.kind == FaceKind::Bigon));
    assert!(validate_plausible(&g).plausible);
}

#[test]
fn removing_a_red_edge_is_reported() {
    let g = gen_spiral(3).unwrap();
    let r = g.red_edges().next().unwrap();
    let report = validate_plausible(&g.without_edge(r));
    assert!(!report.plausible);
    assert!(report.violates(Rule::Degree));
    assert!(report.violates(Rule::RedParallel));
}

#[test]
fn recoloring_breaks_bipartiteness() {
    let g = gen_spiral(3).unwrap();
    let colors = vec![PolygonColor::White; g.num_vertices()];
    let report = validate_plausible(&g.with_colors(&colors));
    assert!(report.violates(Rule::Bipartite));
}

#[test]
fn moving_a_red_dart_is_reported() {
    let g = gen_spiral(3).unwrap();
    let r = g.red_edges().next().unwrap();
    let v = g.tail(Dart::new(r, 0));
    let mut rot = g.rotation(v).to_vec();
    let i = rot.iter().position(|d| *d == Dart::new(r, 0)).unwrap();
    let d = rot.remove(i);
    rot.insert((i + 2) % (rot.len() + 1), d);
    let h = g.with_rotation(v, rot).unwrap();
    assert!(!validate_plausible(&h).plausible);
}

#[test]
fn parse_errors_carry_positions() {
    match parse_emg("vertex 0 W\nvertex 1 Q\n") {
        Err(GraphError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 10)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_emg("vertex 0 W\nedge 0 0 7 blue\n"),
        Err(GraphError::UnknownVertex { .. })
    ));
    assert!(matches!(
        parse_emg("vertex 0 W\nvertex 1 B\nedge 0 0 1 blue\nrot 0 0:0\n"),
        Err(GraphError::MissingDart { .. })
    ));
}

#[test]
fn plausible_iff_no_errors() {
    let g = gen_spiral(4).unwrap();
    let mutants = [
        g.clone(),
        g.without_edge(0),
        g.without_edge(g.red_edges().next().unwrap()),
    ];
    for m in mutants {
        let r = validate_plausible(&m);
        assert_eq!(r.plausible, r.findings.is_empty());
    }
}

/// Rotates every vertex's rotation to start at an arbitrary dart and permutes
/// ids; nothing combinatorial should change.
fn shuffled(g: &EnhancedMultigraph, shifts: &[usize], id_offset: u32) -> EnhancedMultigraph {
    let mut text = String::new();
    for v in g.vertices() {
        let c = if v.color == PolygonColor::White { "W" } else { "B" };
        text.push_str(&format!("vertex {} {c}\n", v.id * 7 % 101 + id_offset));
    }
    for e in g.edges() {
        let c = if e.color == octacolor::emg::EdgeColor::Blue {
            "blue"
        } else {
            "red"
        };
        let [a, b] = e.ends;
        text.push_str(&format!(
            "edge {} {} {} {c}\n",
            e.id * 11 % 211 + id_offset,
            g.vertex(a).id * 7 % 101 + id_offset,
            g.vertex(b).id * 7 % 101 + id_offset
        ));
    }
    for v in 0..g.num_vertices() {
        let rot = g.rotation(v);
        let s = shifts[v % shifts.len()] % rot.len();
        let darts: Vec<String> = rot[s..]
            .iter()
            .chain(&rot[..s])
            .map(|d| format!("{}:{}", g.edge(d.edge).id * 11 % 211 + id_offset, d.end))
            .collect();
        text.push_str(&format!(
            "rot {} {}\n",
            g.vertex(v).id * 7 % 101 + id_offset,
            darts.join(" ")
        ));
    }
    parse_emg(&text).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relabeling_preserves_validation(k in 3usize..7, shifts in prop::collection::vec(0usize..6, 1..8), off in 0u32..50) {
        let g = gen_spiral(k).unwrap();
        let h = shuffled(&g, &shifts, off);
        let (rg, rh) = (validate_plausible(&g), validate_plausible(&h));
        prop_assert!(rh.plausible);
        prop_assert_eq!(rg.counts, rh.counts);
        prop_assert_eq!(trace_faces(&h, EdgeFilter::BLUE).euler_characteristic(&h), 2);
        prop_assert!(octacolor::families::isomorphic(&g, &h));
    }

    #[test]
    fn euler_law_on_generated(k in 3usize..12) {
        let g = gen_spiral(k).unwrap();
        prop_assert_eq!(g.num_blue_edges() as i64 - 2 * g.num_vertices() as i64, 2);
        for v in 0..g.num_vertices() {
            prop_assert_eq!(g.degree(v), 6);
        }
    }
}
