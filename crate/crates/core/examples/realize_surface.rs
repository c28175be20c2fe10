//! Realize the smallest positive point as a flat cone sphere and lay out its net.
use octacolor::families::gen_spiral;
use octacolor::geometry::{cone_point_coordinates, TreeChoice};
use octacolor::pipeline::Instance;

fn main() {
    let inst = Instance::prepare("spiral", gen_spiral(3).unwrap(), None).unwrap();
    let e = inst.enumerate(3, 1_000_000).unwrap();
    let v = &e.positive().next().unwrap().lengths;
    let r = inst.realize(v, None, TreeChoice::Bfs).unwrap();
    println!("base flag {:?}", r.surface.base);
    for (i, c) in r.surface.polygons.iter().enumerate() {
        let pts: Vec<String> = c.points.iter().map(|p| p.to_string()).collect();
        println!("polygon {i} ({:?}): {}", c.color, pts.join(" → "));
    }
    println!("cone points:");
    for p in cone_point_coordinates(&r.surface) {
        println!("  {p}");
    }
    println!(
        "net: {} tree edges, glued exactly: {}, overlapping pairs {:?}",
        r.net.tree_edges.len(),
        r.net.tree_edges_coincide(&r.surface),
        r.net.overlaps
    );
    print!("{}", r.checks(&inst, &[1, 2, 3]));
}
