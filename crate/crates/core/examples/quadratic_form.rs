//! The triangle-counting form on the kernel and its signature.
use num_bigint::BigInt;
use octacolor::families::gen_spiral;
use octacolor::pipeline::Instance;
use octacolor::qform::slot_value;

fn main() {
    println!("unit hexagon: {}", slot_value(&[1, 1, 1, 1, 1, 1].map(BigInt::from)));
    println!(
        "triangle of side 4: {}",
        slot_value(&[4, 0, 4, 0, 4, 0].map(BigInt::from))
    );
    let inst = Instance::prepare("spiral", gen_spiral(3).unwrap(), None).unwrap();
    println!("restricted form:");
    for row in inst.form.restricted.as_ref().unwrap() {
        let r: Vec<String> = row.iter().map(|x| format!("{x:>5}")).collect();
        println!("  {}", r.join(" "));
    }
    println!(
        "signature {} (lattice basis {})",
        inst.signature(),
        inst.signature_in_lattice_basis()
    );
    let e = inst.enumerate(3, 1_000_000).unwrap();
    for p in e.positive() {
        println!("  Q = {:>3} at {:?}", inst.form.value(&p.lengths), p.lattice_coords);
    }
}
