//! The shape system of a spiral instance: size, rank and an integer kernel basis.
use octacolor::families::gen_spiral;
use octacolor::pipeline::Instance;
use octacolor::shapesys::check_lemmas;

fn main() {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let inst = Instance::prepare("spiral", gen_spiral(k).unwrap(), None).unwrap();
    let s = &inst.system;
    println!(
        "{} rows × {} columns, rank {}, kernel dimension {}",
        s.num_rows(),
        s.num_cols(),
        inst.kernel.rank,
        inst.kernel.dimension()
    );
    for row in &s.matrix {
        let r: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        println!("  [{}]", r.join(" "));
    }
    println!("kernel basis:");
    for v in &inst.kernel.vectors {
        println!("  {v:?}");
    }
    print!("{}", check_lemmas(s, &inst.kernel));
}
