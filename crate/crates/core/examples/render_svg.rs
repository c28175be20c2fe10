//! Write the net of a realized point as SVG, with triangles, vertex colors and
//! the dual graph.
use octacolor::families::gen_spiral;
use octacolor::geometry::TreeChoice;
use octacolor::pipeline::Instance;
use octacolor::svg::{RenderOptions, SvgScene};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "spiral-6.svg".into());
    let inst = Instance::prepare("spiral", gen_spiral(3).unwrap(), None).unwrap();
    let e = inst.enumerate(3, 1_000_000).unwrap();
    let r = inst
        .realize(&e.positive().next().unwrap().lengths, None, TreeChoice::Bfs)
        .unwrap();
    let opts = RenderOptions {
        triangles: true,
        vertex_colors: true,
        overlay_dual: true,
    };
    std::fs::write(&path, SvgScene::from_realization(&inst, &r, opts).render()).unwrap();
    println!("wrote {path}");
}
