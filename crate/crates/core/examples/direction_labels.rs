//! Corner types, slots and direction labels of every polygon.
use octacolor::families::gen_spiral;
use octacolor::labeling::{assign_labels, polygon_boundaries, CornerKind, SeedFlag};

fn main() {
    let g = gen_spiral(3).unwrap();
    let bs = polygon_boundaries(&g).unwrap();
    let seed = SeedFlag {
        vertex: 0,
        edge: bs[0].sides[0].edge,
    };
    let labels = assign_labels(&g, &bs, seed).unwrap();
    for b in &bs {
        let corners: String = b
            .corners
            .iter()
            .map(|c| if *c == CornerKind::Acute { 'A' } else { 'O' })
            .collect();
        let exps: Vec<u8> = b.sides.iter().map(|d| labels.label(d.edge).exponent()).collect();
        println!(
            "polygon {} ({:?}, {}-gon): corners {corners}, slots {:?}, labels ω^{exps:?}",
            g.vertex(b.vertex).id,
            b.color,
            b.sides.len(),
            b.slots
        );
    }
}
