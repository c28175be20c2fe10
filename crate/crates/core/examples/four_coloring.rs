//! The unit triangulation of a realized point and its 4-coloring by residues.
use std::collections::BTreeMap;

use octacolor::families::gen_spiral;
use octacolor::geometry::TreeChoice;
use octacolor::pipeline::{brute_force_improper, Instance};

fn main() {
    let inst = Instance::prepare("spiral", gen_spiral(3).unwrap(), None).unwrap();
    let e = inst.enumerate(3, 1_000_000).unwrap();
    for p in e.positive().take(3) {
        let r = inst.realize(&p.lengths, None, TreeChoice::Bfs).unwrap();
        let t = &r.triangulation;
        let mut classes: BTreeMap<u8, usize> = BTreeMap::new();
        for v in &t.vertices {
            *classes.entry(v.color.unwrap()).or_default() += 1;
        }
        println!(
            "{:?}: {} vertices, {} triangles, degrees {:?}, colors {:?}, improper pairs {}",
            p.lengths.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            t.vertices.len(),
            t.triangles.len(),
            t.degree_histogram(),
            classes,
            brute_force_improper(t)
        );
        let balance: Vec<String> = t.incidence_counts().iter().map(|(b, w)| format!("{b}/{w}")).collect();
        println!("  black/white triangles per vertex: {}", balance.join(" "));
    }
}
