//! Deterministic SVG output for nets, triangle grids and vertex colorings.
//!
//! Exact points are converted to floats only here; `y` is multiplied by √3.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::emg::{trace_faces, EdgeFilter, PolygonColor};
use crate::grid::GridPoint;
use crate::pipeline::{Instance, Realization};

pub const WHITE: &str = "#FFFFFF";
pub const BLACK: &str = "#202020";
pub const VERTEX_COLORS: [&str; 4] = ["#E6194B", "#3CB44B", "#4363D8", "#F58231"];
const BLUE: &str = "#1F77FF";
const RED: &str = "#D62728";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub triangles: bool,
    pub vertex_colors: bool,
    pub overlay_dual: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SvgPolygon {
    pub points: Vec<GridPoint>,
    pub color: PolygonColor,
}

/// A dual-graph edge drawn as one path with one or two pieces.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPath {
    pub edge_id: u32,
    pub red: bool,
    pub pieces: Vec<Vec<GridPoint>>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SvgScene {
    pub polygons: Vec<SvgPolygon>,
    pub triangles: Vec<SvgPolygon>,
    pub dots: Vec<(GridPoint, u8)>,
    pub dual: Vec<DualPath>,
}

fn centroid(points: &[GridPoint]) -> GridPoint {
    let n = points.len() as i64;
    let sum = points.iter().fold(GridPoint::origin(), |a, p| &a + p);
    sum.scale(&crate::grid::q_frac(1, n))
}

fn midpoint(a: &GridPoint, b: &GridPoint) -> GridPoint {
    (a + b).scale(&crate::grid::q_frac(1, 2))
}

impl SvgScene {
    /// The net of a realization, with optional layers.
    pub fn from_realization(inst: &Instance, r: &Realization, opts: RenderOptions) -> SvgScene {
        let net = &r.net;
        let mut scene = SvgScene {
            polygons: net
                .polygons
                .iter()
                .map(|p| SvgPolygon {
                    points: p.points.clone(),
                    color: p.color,
                })
                .collect(),
            ..SvgScene::default()
        };
        if opts.triangles || opts.vertex_colors {
            let mut k = 0;
            let mut dots: BTreeMap<GridPoint, u8> = BTreeMap::new();
            for (p, tiles) in net.polygons.iter().zip(&r.tilings) {
                for tile in tiles {
                    let pts: Vec<GridPoint> = tile.vertices.iter().map(|z| p.map(z)).collect();
                    let mt = &r.triangulation.triangles[k];
                    for (z, &v) in pts.iter().zip(&mt.vertices) {
                        if let Some(c) = r.triangulation.vertices[v].color {
                            dots.insert(z.clone(), c);
                        }
                    }
                    if opts.triangles {
                        scene.triangles.push(SvgPolygon {
                            points: pts,
                            color: p.color,
                        });
                    }
                    k += 1;
                }
            }
            if opts.vertex_colors {
                scene.dots = dots.into_iter().collect();
            }
        }
        if opts.overlay_dual {
            scene.dual = dual_paths(inst, r);
        }
        scene
    }

    pub fn render(&self) -> String {
        let all: Vec<(f64, f64)> = self
            .polygons
            .iter()
            .chain(&self.triangles)
            .flat_map(|p| p.points.iter())
            .chain(self.dots.iter().map(|(p, _)| p))
            .map(to_svg)
            .collect();
        let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
        if let Some(&(x, y)) = all.first() {
            (x0, y0, x1, y1) = (x, y, x, y);
            for &(x, y) in &all {
                x0 = x0.min(x);
                y0 = y0.min(y);
                x1 = x1.max(x);
                y1 = y1.max(y);
            }
        }
        let (w, h) = ((x1 - x0).max(1e-9), (y1 - y0).max(1e-9));
        let pad = 0.05 * w.max(h);
        let stroke = 0.01 * w.max(h);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
            f(x0 - pad),
            f(y0 - pad),
            f(w + 2.0 * pad),
            f(h + 2.0 * pad),
            f(800.0),
            f(800.0 * (h + 2.0 * pad) / (w + 2.0 * pad)),
        );
        for p in &self.polygons {
            let _ = writeln!(
                s,
                r#"<polygon class="face" points="{}" fill="{}" stroke="{}" stroke-width="{}"/>"#,
                points_attr(&p.points),
                fill(p.color),
                BLACK,
                f(stroke),
            );
        }
        for t in &self.triangles {
            let line = match t.color {
                PolygonColor::White => "#A0A0A0",
                PolygonColor::Black => "#707070",
            };
            let _ = writeln!(
                s,
                r#"<polygon class="tri" points="{}" fill="{}" stroke="{}" stroke-width="{}"/>"#,
                points_attr(&t.points),
                fill(t.color),
                line,
                f(stroke * 0.5),
            );
        }
        for d in &self.dual {
            let mut path = String::new();
            for piece in &d.pieces {
                for (i, p) in piece.iter().enumerate() {
                    let (x, y) = to_svg(p);
                    let _ = write!(path, "{}{} {} ", if i == 0 { "M" } else { "L" }, f(x), f(y));
                }
            }
            let _ = writeln!(
                s,
                r#"<path class="{}" data-edge="{}" d="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
                if d.red { "dual-red" } else { "dual-blue" },
                d.edge_id,
                path.trim_end(),
                if d.red { RED } else { BLUE },
                f(stroke),
            );
        }
        for (p, c) in &self.dots {
            let (x, y) = to_svg(p);
            let _ = writeln!(
                s,
                r#"<circle class="vertex" cx="{}" cy="{}" r="{}" fill="{}"/>"#,
                f(x),
                f(y),
                f(stroke * 2.5),
                VERTEX_COLORS[*c as usize % 4],
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

/// Blue edges run from polygon centroid to the midpoint of the shared side
/// on each side; red edges from centroid to the corner at the quadrilateral
/// they sit in.
fn dual_paths(inst: &Instance, r: &Realization) -> Vec<DualPath> {
    let g = &inst.graph;
    let net = &r.net;
    let chains = &r.surface.polygons;
    let cent: Vec<GridPoint> = net.polygons.iter().map(|p| centroid(&p.points)).collect();
    let mut out = Vec::new();
    for &e in g.blue_edges() {
        let [a, b] = g.edge(e).ends;
        let piece = |p: usize| {
            let i = chains[p].side_of(e).expect("side");
            let pts = &net.polygons[p].points;
            let m = midpoint(&pts[i], &pts[(i + 1) % pts.len()]);
            (cent[p].clone(), m)
        };
        let (ca, ma) = piece(a);
        let (cb, mb) = piece(b);
        let pieces = if ma == mb {
            vec![vec![ca, ma, cb]]
        } else {
            vec![vec![ca, ma], vec![cb, mb]]
        };
        out.push(DualPath {
            edge_id: g.edge(e).id,
            red: false,
            pieces,
        });
    }
    let faces = trace_faces(g, EdgeFilter::BLUE);
    for (f, face) in faces.faces.iter().enumerate() {
        for &e in &face.reds {
            let pieces = g
                .edge(e)
                .ends
                .iter()
                .filter_map(|&p| {
                    let i = chains[p].sides.iter().position(|s| s.start_face == f)?;
                    Some(vec![cent[p].clone(), net.polygons[p].points[i].clone()])
                })
                .collect();
            out.push(DualPath {
                edge_id: g.edge(e).id,
                red: true,
                pieces,
            });
        }
    }
    out
}

fn fill(c: PolygonColor) -> &'static str {
    match c {
        PolygonColor::White => WHITE,
        PolygonColor::Black => BLACK,
    }
}

fn to_svg(p: &GridPoint) -> (f64, f64) {
    let (x, y) = p.to_f64();
    (x, -y)
}

fn f(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn points_attr(pts: &[GridPoint]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = to_svg(p);
            format!("{},{}", f(x), f(y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}
