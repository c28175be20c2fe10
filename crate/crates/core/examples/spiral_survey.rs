//! Rank, cone and signature across the spiral family.
use std::time::Instant;

use octacolor::families::{gen_spiral, FamilySpec};
use octacolor::pipeline::Instance;

fn main() {
    println!(
        "{:>3} {:>4} {:>4} {:>5} {:>4} {:>5} {:>9} {:>8}",
        "k", "V", "E_b", "rank", "dim", "rays", "signature", "ms"
    );
    for k in 3..=10 {
        let start = Instant::now();
        let inst = Instance::prepare(FamilySpec::spiral(k).name(), gen_spiral(k).unwrap(), None).unwrap();
        let sig = inst.signature();
        println!(
            "{k:>3} {:>4} {:>4} {:>5} {:>4} {:>5} {:>9} {:>8}",
            inst.graph.num_vertices(),
            inst.graph.num_blue_edges(),
            inst.kernel.rank,
            inst.kernel.dimension(),
            inst.cone.extreme_rays.len(),
            sig.to_string(),
            start.elapsed().as_millis()
        );
    }
}
