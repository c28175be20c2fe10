//! Integer points of the cone with bounded edge lengths.
use octacolor::families::gen_spiral;
use octacolor::pipeline::Instance;

fn main() {
    let max_len: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let inst = Instance::prepare("spiral", gen_spiral(3).unwrap(), None).unwrap();
    println!("lattice basis (Hermite normal form):");
    for b in &inst.lattice.basis {
        println!("  {b:?}");
    }
    let e = inst.enumerate(max_len, 10_000_000).unwrap();
    println!(
        "{} points with lengths ≤ {max_len}, {} strictly positive, {} nodes",
        e.points.len(),
        e.positive().count(),
        e.nodes_visited
    );
    for p in e.positive() {
        let l: Vec<String> = p.lengths.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", l.join(","));
    }
}
