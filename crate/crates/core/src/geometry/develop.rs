use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::realize::PolygonChain;
use super::GeometryError;
use crate::emg::{trace_faces, EdgeFilter, EdgeIx, EnhancedMultigraph, FaceKind, PolygonColor, VertexIx};
use crate::grid::GridPoint;
use crate::labeling::CornerKind;

/// Normalization of the folded picture: surface vertex `vertex` (a face of
/// the blue graph) goes to the origin and side `edge` of `polygon`, which
/// starts there, points along the positive real axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BaseFlag {
    pub vertex: usize,
    pub polygon: VertexIx,
    pub edge: EdgeIx,
}

impl BaseFlag {
    /// First cone vertex in face order, its white polygon, and the side of
    /// that polygon leaving it.
    pub fn default_for(g: &EnhancedMultigraph) -> Option<BaseFlag> {
        let faces = trace_faces(g, EdgeFilter::BLUE);
        let (vertex, face) = faces
            .faces
            .iter()
            .enumerate()
            .find(|(_, f)| f.kind == FaceKind::Bigon)?;
        let d = face
            .darts
            .iter()
            .find(|d| g.color(g.tail(**d)) == PolygonColor::White)?;
        Some(BaseFlag {
            vertex,
            polygon: g.tail(*d),
            edge: d.edge,
        })
    }

    /// Flag at the start of side `edge` of `polygon` in its folded traversal.
    pub fn at_side(chains: &[PolygonChain], polygon: VertexIx, edge: EdgeIx) -> Option<BaseFlag> {
        let c = &chains[polygon];
        let i = c.side_of(edge)?;
        Some(BaseFlag {
            vertex: c.sides[i].start_face,
            polygon,
            edge,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeChoice {
    /// Breadth-first search in rotation order.
    Bfs,
    /// Uniformly shuffled Kruskal tree from a seed.
    Random(u64),
}

/// Spanning tree of the blue graph, rooted at a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualTree {
    pub root: VertexIx,
    /// `(parent polygon, connecting edge)` for every non-root polygon.
    pub parent: Vec<Option<(VertexIx, EdgeIx)>>,
    /// Polygons in an order where parents precede children.
    pub order: Vec<VertexIx>,
}

impl DualTree {
    pub fn contains_edge(&self, e: EdgeIx) -> bool {
        self.parent.iter().any(|p| matches!(p, Some((_, x)) if *x == e))
    }
}

pub fn dual_tree(g: &EnhancedMultigraph, root: VertexIx, choice: TreeChoice) -> DualTree {
    let n = g.num_vertices();
    let allowed: Vec<bool> = match choice {
        TreeChoice::Bfs => vec![true; g.num_edges()],
        TreeChoice::Random(seed) => {
            let mut edges: Vec<EdgeIx> = g.blue_edges().to_vec();
            edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let mut uf: Vec<usize> = (0..n).collect();
            fn find(uf: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while uf[r] != r {
                    r = uf[r];
                }
                let mut y = x;
                while uf[y] != r {
                    let nx = uf[y];
                    uf[y] = r;
                    y = nx;
                }
                r
            }
            let mut keep = vec![false; g.num_edges()];
            for e in edges {
                let [a, b] = g.edge(e).ends;
                let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
                if ra != rb {
                    uf[ra] = rb;
                    keep[e] = true;
                }
            }
            keep
        }
    };
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = vec![root];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for d in g.rotation(v) {
            if !g.is_blue(d.edge) || !allowed[d.edge] {
                continue;
            }
            let u = g.head(*d);
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some((v, d.edge));
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    DualTree { root, parent, order }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Cone,
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceVertex {
    pub face: usize,
    pub kind: VertexKind,
    /// Folded image.
    pub image: GridPoint,
    /// Incident polygon corners.
    pub corners: Vec<(VertexIx, CornerKind)>,
}

/// How a blue edge's two sides meet. In the folded picture both polygons
/// traverse the edge in the same direction, so the gluing is the identity on
/// `start → end`; in the true picture the black side is reflected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub edge: EdgeIx,
    pub white: VertexIx,
    pub black: VertexIx,
    pub start: GridPoint,
    pub end: GridPoint,
    pub in_tree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizedSurface {
    pub base: BaseFlag,
    /// Global rotation exponent applied to the labels.
    pub rotation: u8,
    pub tree: DualTree,
    /// Placed folded chains, indexed by polygon.
    pub polygons: Vec<PolygonChain>,
    /// Surface vertices, indexed by blue face.
    pub vertices: Vec<SurfaceVertex>,
    pub gluings: Vec<Gluing>,
}

impl RealizedSurface {
    pub fn folded_images(&self) -> Vec<GridPoint> {
        self.vertices.iter().map(|v| v.image.clone()).collect()
    }

    pub fn cone_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Cone)
            .map(|v| v.face)
            .collect()
    }

    pub fn regular_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Regular)
            .map(|v| v.face)
            .collect()
    }
}

fn units(c: CornerKind) -> u32 {
    match c {
        CornerKind::Acute => 1,
        CornerKind::Obtuse => 2,
    }
}

/// Places the polygon chains in the folded plane along a dual spanning tree
/// and checks every gluing and every vertex angle.
pub fn develop_surface(
    g: &EnhancedMultigraph,
    chains: &[PolygonChain],
    base: BaseFlag,
    choice: TreeChoice,
) -> Result<RealizedSurface, GeometryError> {
    let faces = trace_faces(g, EdgeFilter::BLUE);
    let nf = faces.len();

    let mut corners: Vec<Vec<(VertexIx, CornerKind)>> = vec![Vec::new(); nf];
    for c in chains {
        for (s, a) in c.sides.iter().zip(&c.angles) {
            corners[s.start_face].push((c.polygon, *a));
        }
    }
    for (f, cs) in corners.iter().enumerate() {
        let white: u32 = cs
            .iter()
            .filter(|(p, _)| g.color(*p) == PolygonColor::White)
            .map(|(_, a)| units(*a))
            .sum();
        let black: u32 = cs
            .iter()
            .filter(|(p, _)| g.color(*p) == PolygonColor::Black)
            .map(|(_, a)| units(*a))
            .sum();
        let ok = match cs.len() {
            2 => cs.iter().all(|(_, a)| *a == CornerKind::Obtuse),
            4 => white == 3 && black == 3,
            _ => false,
        };
        if !ok {
            return Err(GeometryError::Angle {
                vertex: f,
                detail: format!(
                    "{} corners, white angle {}·π/3, black angle {}·π/3",
                    cs.len(),
                    white,
                    black
                ),
            });
        }
    }

    let base_chain = &chains[base.polygon];
    let bi = base_chain.side_of(base.edge).ok_or(GeometryError::BadBaseFlag {
        polygon: g.vertex(base.polygon).id,
        edge: g.edge(base.edge).id,
    })?;
    if base_chain.sides[bi].start_face != base.vertex {
        return Err(GeometryError::BadBaseFlag {
            polygon: g.vertex(base.polygon).id,
            edge: g.edge(base.edge).id,
        });
    }
    let rotation = (6 - base_chain.sides[bi].direction.exponent()) % 6;
    let r = rotation as i64;

    let tree = dual_tree(g, base.polygon, choice);
    if tree.order.len() != g.num_vertices() {
        return Err(GeometryError::Disconnected);
    }
    let mut placed: Vec<Option<PolygonChain>> = vec![None; chains.len()];
    let root = base_chain.transformed(r, &GridPoint::origin());
    let shift = -&root.points[bi];
    placed[base.polygon] = Some(root.transformed(0, &shift));
    for &q in &tree.order[1..] {
        let (p, e) = tree.parent[q].expect("non-root has a parent");
        let pp = placed[p].as_ref().expect("parent placed first");
        let rq = chains[q].transformed(r, &GridPoint::origin());
        let ip = pp.side_of(e).expect("tree edge is a side of the parent");
        let iq = rq.side_of(e).expect("tree edge is a side of the child");
        let t = &pp.points[ip] - &rq.points[iq];
        placed[q] = Some(rq.transformed(0, &t));
    }
    let polygons: Vec<PolygonChain> = placed.into_iter().map(|p| p.expect("all placed")).collect();

    let mut gluings = Vec::with_capacity(g.num_blue_edges());
    for &e in g.blue_edges() {
        let [a, b] = g.edge(e).ends;
        let (w, k) = if g.color(a) == PolygonColor::White {
            (a, b)
        } else {
            (b, a)
        };
        let (pw, pk) = (&polygons[w], &polygons[k]);
        let (iw, ik) = (pw.side_of(e).expect("side"), pk.side_of(e).expect("side"));
        let (sw, ew) = (&pw.points[iw], pw.end_point(iw));
        let (sk, ek) = (&pk.points[ik], pk.end_point(ik));
        if sw != sk || ew != ek {
            return Err(GeometryError::Gluing {
                edge: g.edge(e).id,
                detail: format!("white side {sw} → {ew}, black side {sk} → {ek}"),
            });
        }
        gluings.push(Gluing {
            edge: e,
            white: w,
            black: k,
            start: sw.clone(),
            end: ew.clone(),
            in_tree: tree.contains_edge(e),
        });
    }

    let mut images: Vec<Option<GridPoint>> = vec![None; nf];
    for c in &polygons {
        for (s, p) in c.sides.iter().zip(&c.points) {
            match &images[s.start_face] {
                None => images[s.start_face] = Some(p.clone()),
                Some(q) if q != p => {
                    return Err(GeometryError::Gluing {
                        edge: g.edge(s.edge).id,
                        detail: format!("vertex {} lands at {q} and {p}", s.start_face),
                    })
                }
                Some(_) => {}
            }
        }
    }
    let vertices = (0..nf)
        .map(|f| SurfaceVertex {
            face: f,
            kind: if corners[f].len() == 2 {
                VertexKind::Cone
            } else {
                VertexKind::Regular
            },
            image: images[f].clone().expect("every face has a corner"),
            corners: corners[f].clone(),
        })
        .collect();

    Ok(RealizedSurface {
        base,
        rotation,
        tree,
        polygons,
        vertices,
        gluings,
    })
}

/// Folded images of the cone points, in face order. The folded image does not
/// depend on the path used to reach a point, so one lift per point suffices.
pub fn cone_point_coordinates(surface: &RealizedSurface) -> Vec<GridPoint> {
    surface
        .vertices
        .iter()
        .filter(|v| v.kind == VertexKind::Cone)
        .map(|v| v.image.clone())
        .collect()
}
