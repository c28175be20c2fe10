//! Parse an enhanced multigraph, check the plausibility axioms, then break it.
use octacolor::emg::{parse_emg, render_emg, validate_plausible, PolygonColor};
use octacolor::families::gen_spiral;

fn main() {
    let text = render_emg(&gen_spiral(3).unwrap());
    println!("{text}");
    let g = parse_emg(&text).unwrap();
    let r = validate_plausible(&g);
    let c = &r.counts;
    println!(
        "plausible {}: V={} E_b={} E_red={} bigons={} quads={}",
        r.plausible, c.vertices, c.blue_edges, c.red_edges, c.bigons, c.quadrilaterals
    );

    let all_white = vec![PolygonColor::White; g.num_vertices()];
    let bad = validate_plausible(&g.with_colors(&all_white));
    println!("after recoloring: plausible {}", bad.plausible);
    for f in &bad.findings {
        println!("  {:?}: {}", f.rule, f.message);
    }
}
