//! Extreme rays of the positive cone, in kernel coordinates and as edge lengths.
use octacolor::families::gen_spiral;
use octacolor::pipeline::Instance;

fn main() {
    let inst = Instance::prepare("spiral", gen_spiral(3).unwrap(), None).unwrap();
    let cone = &inst.cone;
    println!(
        "dimension {}, {} inequalities, {} extreme rays, lineality {}, strictly positive point: {}",
        cone.dimension,
        cone.inequalities.len(),
        cone.extreme_rays.len(),
        cone.lineality.len(),
        cone.has_positive_point
    );
    for r in &cone.extreme_rays {
        println!("  {r:?} -> lengths {:?}", inst.kernel.combine(r));
    }
}
