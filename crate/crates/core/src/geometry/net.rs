//! A flat net of the surface: polygons laid edge to edge in the plane by
//! orientation-preserving isometries along the dual spanning tree.

use serde::Serialize;

use super::develop::RealizedSurface;
use crate::emg::{EdgeIx, PolygonColor, VertexIx};
use crate::grid::{Direction, GridPoint, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetPolygon {
    pub polygon: VertexIx,
    pub color: PolygonColor,
    /// Vertices in traversal order of the folded chain.
    pub points: Vec<GridPoint>,
    /// Net position is `ω^rotation · z + translation` applied to the true
    /// chart (the folded chart, conjugated for black polygons).
    pub rotation: u8,
    pub translation: GridPoint,
}

impl NetPolygon {
    /// Net position of a point given in the polygon's placed folded chart.
    pub fn map(&self, z: &GridPoint) -> GridPoint {
        &true_chart(z, self.color).rotate(Direction::new(self.rotation as i64)) + &self.translation
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetLayout {
    pub polygons: Vec<NetPolygon>,
    pub tree_edges: Vec<EdgeIx>,
    /// Pairs of polygons whose interiors overlap in the layout.
    pub overlaps: Vec<(VertexIx, VertexIx)>,
}

impl NetLayout {
    /// Do the two sides of every tree edge coincide as point sets?
    pub fn tree_edges_coincide(&self, surface: &RealizedSurface) -> bool {
        self.tree_edges.iter().all(|&e| {
            let g = surface
                .gluings
                .iter()
                .find(|x| x.edge == e)
                .expect("gluing for tree edge");
            let seg = |p: VertexIx| {
                let c = &surface.polygons[p];
                let i = c.side_of(e).expect("side");
                let n = c.len();
                let pts = &self.polygons[p].points;
                (pts[i].clone(), pts[(i + 1) % n].clone())
            };
            let (a, b) = seg(g.white);
            let (c, d) = seg(g.black);
            (a == c && b == d) || (a == d && b == c)
        })
    }
}

fn true_chart(p: &GridPoint, color: PolygonColor) -> GridPoint {
    match color {
        PolygonColor::White => p.clone(),
        PolygonColor::Black => p.conj(),
    }
}

fn true_direction(d: Direction, color: PolygonColor) -> Direction {
    match color {
        PolygonColor::White => d,
        PolygonColor::Black => Direction::new(-(d.exponent() as i64)),
    }
}

/// Lays out the polygons along the surface's dual tree.
pub fn develop_net(surface: &RealizedSurface) -> NetLayout {
    let n = surface.polygons.len();
    let mut placed: Vec<Option<NetPolygon>> = vec![None; n];
    let tree = &surface.tree;
    let place = |p: VertexIx, r: i64, t: &GridPoint| {
        let c = &surface.polygons[p];
        NetPolygon {
            polygon: p,
            color: c.color,
            points: c
                .points
                .iter()
                .map(|x| &true_chart(x, c.color).rotate(Direction::new(r)) + t)
                .collect(),
            rotation: Direction::new(r).exponent(),
            translation: t.clone(),
        }
    };
    placed[tree.root] = Some(place(tree.root, 0, &GridPoint::origin()));
    let mut tree_edges = Vec::new();
    for &q in &tree.order[1..] {
        let (p, e) = tree.parent[q].expect("parent");
        tree_edges.push(e);
        let pp = placed[p].as_ref().expect("parent placed");
        let cp = &surface.polygons[p];
        let cq = &surface.polygons[q];
        let ip = cp.side_of(e).expect("side");
        let iq = cq.side_of(e).expect("side");
        let dir_p = true_direction(cp.sides[ip].direction, cp.color).rotate(pp.rotation as i64);
        let dir_q = true_direction(cq.sides[iq].direction, cq.color);
        let r = dir_p.exponent() as i64 - dir_q.exponent() as i64;
        let start_q = true_chart(&cq.points[iq], cq.color).rotate(Direction::new(r));
        let t = &pp.points[ip] - &start_q;
        placed[q] = Some(place(q, r, &t));
    }
    let polygons: Vec<NetPolygon> = placed.into_iter().map(|p| p.expect("placed")).collect();

    let mut overlaps = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if interiors_overlap(&polygons[a].points, &polygons[b].points) {
                overlaps.push((a, b));
            }
        }
    }
    tree_edges.sort();
    NetLayout {
        polygons,
        tree_edges,
        overlaps,
    }
}

/// Separating-axis test for convex polygons whose sides are parallel to the
/// sixth roots of unity. The three axes are normal to `1`, `ω` and `ω²`.
fn interiors_overlap(a: &[GridPoint], b: &[GridPoint]) -> bool {
    let axes: [fn(&GridPoint) -> Q; 3] = [|p| p.y.clone(), |p| &p.y - &p.x, |p| &p.x + &p.y];
    axes.iter().all(|f| {
        let (amin, amax) = range(a, f);
        let (bmin, bmax) = range(b, f);
        amin < bmax && bmin < amax
    })
}

fn range(pts: &[GridPoint], f: &fn(&GridPoint) -> Q) -> (Q, Q) {
    let vals: Vec<Q> = pts.iter().map(f).collect();
    let min = vals.iter().min().unwrap().clone();
    let max = vals.iter().max().unwrap().clone();
    (min, max)
}
