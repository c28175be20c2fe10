//! Instance generators and bundled data files.
//!
//! The spiral family grows a quadrangulation of the sphere one vertex at a
//! time, always splitting the current outer square so that the squares stack
//! in a spiral. Double red edges are then laid along a path that skips every
//! other edge, and six parallel blue copies bring every vertex to degree 6.

use serde::Serialize;
use thiserror::Error;

use crate::emg::{
    parse_emg, trace_faces, validate_plausible, Dart, EdgeColor, EdgeFilter, EnhancedMultigraph, GraphBuilder,
    GraphError, PolygonColor, VertexIx,
};
use crate::labeling::{assign_labels, polygon_boundaries, SeedFlag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Spiral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub k: usize,
}

impl FamilySpec {
    pub fn spiral(k: usize) -> Self {
        FamilySpec {
            family: Family::Spiral,
            k,
        }
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Spiral => format!("spiral-{}", 2 * self.k),
        }
    }

    pub fn generate(&self) -> Result<EnhancedMultigraph, FamilyError> {
        match self.family {
            Family::Spiral => gen_spiral(self.k),
        }
    }
}

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("spiral parameter k = {0} is below the minimum 3")]
    TooSmall(usize),
    #[error("spiral k = {k}: {reason}")]
    Construction { k: usize, reason: String },
    #[error("no bundled instance named `{0}` (known: {known})", known = BUNDLED.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "))]
    UnknownBundled(String),
    #[error("bundled instance `{name}` does not parse: {source}")]
    BadBundled { name: String, source: GraphError },
}

const BUNDLED: &[(&str, &str)] = &[
    ("spiral-6", include_str!("../data/spiral-6.emg")),
    ("spiral-8", include_str!("../data/spiral-8.emg")),
    ("doubled-hexagon", include_str!("../data/doubled-hexagon.emg")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

pub fn load_bundled(name: &str) -> Result<EnhancedMultigraph, FamilyError> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| FamilyError::UnknownBundled(name.to_string()))?;
    parse_emg(text).map_err(|source| FamilyError::BadBundled {
        name: name.to_string(),
        source,
    })
}

fn construction(k: usize, reason: impl Into<String>) -> FamilyError {
    FamilyError::Construction {
        k,
        reason: reason.into(),
    }
}

/// Spiral stacking of squares on `n = 2k` vertices, as a blue-only builder.
fn spiral_quadrangulation(n: usize) -> Result<GraphBuilder, GraphError> {
    let mut b = GraphBuilder::new();
    for _ in 0..4 {
        b.add_vertex(PolygonColor::White);
    }
    let es: Vec<_> = (0..4).map(|i| b.add_edge(i, (i + 1) % 4, EdgeColor::Blue)).collect();
    for i in 0..4 {
        b.push_dart(Dart::new(es[i], 0));
        b.push_dart(Dart::new(es[(i + 3) % 4], 1));
    }
    let mut outer = trace_faces(&b.build()?, EdgeFilter::BLUE).faces[0].darts.clone();
    let mut last: Option<VertexIx> = None;
    for t in 4..n {
        let tails: Vec<VertexIx> = outer.iter().map(|d| b.tail(*d)).collect();
        let i = match last {
            Some(l) if tails.contains(&l) => tails.iter().position(|&x| x == l).unwrap(),
            _ => tails
                .iter()
                .position(|&x| x == 1)
                .expect("vertex 1 on the first outer face"),
        };
        let x = b.add_vertex(PolygonColor::White);
        let d0 = outer[i];
        let d2 = outer[(i + 2) % 4];
        let e0 = b.add_edge(x, b.tail(d0), EdgeColor::Blue);
        let e2 = b.add_edge(x, b.tail(d2), EdgeColor::Blue);
        b.insert_before(d0, Dart::new(e0, 1));
        b.insert_before(d2, Dart::new(e2, 1));
        b.push_dart(Dart::new(e0, 0));
        b.push_dart(Dart::new(e2, 0));
        let g = b.build()?;
        let faces = trace_faces(&g, EdgeFilter::BLUE);
        outer = faces
            .faces
            .iter()
            .filter(|f| f.darts.contains(&Dart::new(e0, 0)) || f.darts.contains(&Dart::new(e2, 0)))
            .find(|f| f.darts.iter().any(|d| g.tail(*d) == t - 2))
            .expect("new outer face")
            .darts
            .clone();
        last = Some(x);
    }
    Ok(b)
}

fn edge_between(b: &GraphBuilder, x: VertexIx, y: VertexIx) -> Option<usize> {
    (0..b.num_edges()).find(|&e| {
        let [p, q] = b.edge_ends(e);
        (p == x && q == y) || (p == y && q == x)
    })
}

/// The spiral instance on `2k` polygons.
pub fn gen_spiral(k: usize) -> Result<EnhancedMultigraph, FamilyError> {
    if k < 3 {
        return Err(FamilyError::TooSmall(k));
    }
    let n = 2 * k;
    let graph_err = |e: GraphError| construction(k, e.to_string());
    let mut b = spiral_quadrangulation(n).map_err(graph_err)?;
    let base_edges = b.num_edges();

    let mut path = vec![(0, 1)];
    path.extend((2..k).map(|j| (2 * j + 1, 2 * j - 2)));
    let path: Vec<usize> = path
        .iter()
        .map(|&(x, y)| edge_between(&b, x, y).ok_or_else(|| construction(k, format!("no edge {x}-{y}"))))
        .collect::<Result<_, _>>()?;

    let copies = [(0, 1), (2, 3), (3, 0), (n - 2, n - 3), (n - 1, n - 2), (n - 1, n - 2)];
    let mut origin: Vec<usize> = (0..base_edges).collect();
    for &(x, y) in &copies {
        let e = edge_between(&b, x, y).ok_or_else(|| construction(k, format!("no edge {x}-{y}")))?;
        let [p, q] = b.edge_ends(e);
        let c = b.add_edge(p, q, EdgeColor::Blue);
        b.insert_after(Dart::new(e, 0), Dart::new(c, 0));
        b.insert_before(Dart::new(e, 1), Dart::new(c, 1));
        origin.push(e);
    }

    let faces = trace_faces(&b.build().map_err(graph_err)?, EdgeFilter::BLUE);
    for f in faces.faces.iter().filter(|f| f.len() == 4) {
        let marked: Vec<Dart> = f
            .darts
            .iter()
            .copied()
            .filter(|d| path.contains(&origin[d.edge]))
            .collect();
        let [d] = marked.as_slice() else {
            return Err(construction(
                k,
                format!("a square face has {} path edges, expected 1", marked.len()),
            ));
        };
        let v = b.tail(*d);
        let u = b.tail(d.twin());
        let r = b.add_edge(v, u, EdgeColor::Red);
        b.insert_before(*d, Dart::new(r, 0));
        b.insert_after(d.twin(), Dart::new(r, 1));
    }

    let colors =
        two_color(&b.build().map_err(graph_err)?).ok_or_else(|| construction(k, "blue graph is not bipartite"))?;
    for (v, c) in colors.into_iter().enumerate() {
        b.set_color(v, c);
    }
    let g = b.build().map_err(graph_err)?;

    let report = validate_plausible(&g);
    if !report.plausible {
        let msgs: Vec<String> = report.findings.iter().map(|f| f.message.clone()).collect();
        return Err(construction(k, format!("not plausible: {}", msgs.join("; "))));
    }
    let boundaries = polygon_boundaries(&g).map_err(|e| construction(k, e.to_string()))?;
    let seed = SeedFlag {
        vertex: 0,
        edge: boundaries[0].sides[0].edge,
    };
    assign_labels(&g, &boundaries, seed).map_err(|e| construction(k, e.to_string()))?;
    Ok(g)
}

/// Two-coloring of the blue graph with vertex 0 white.
fn two_color(g: &EnhancedMultigraph) -> Option<Vec<PolygonColor>> {
    let mut color: Vec<Option<PolygonColor>> = vec![None; g.num_vertices()];
    for s in 0..g.num_vertices() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(PolygonColor::White);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let cv = color[v].unwrap();
            for d in g.rotation(v) {
                if !g.is_blue(d.edge) {
                    continue;
                }
                let u = g.head(*d);
                match color[u] {
                    None => {
                        color[u] = Some(cv.opposite());
                        stack.push(u);
                    }
                    Some(cu) if cu == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    color.into_iter().collect()
}

/// Orientation-preserving isomorphism test for rotation systems, respecting
/// vertex and edge colors.
pub fn isomorphic(a: &EnhancedMultigraph, b: &EnhancedMultigraph) -> bool {
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return false;
    }
    if a.num_edges() == 0 {
        return a.num_vertices() <= 1;
    }
    let start = Dart::new(0, 0);
    (0..b.num_edges()).any(|e| (0..2).any(|end| try_map(a, b, start, Dart::new(e, end))))
}

fn try_map(a: &EnhancedMultigraph, b: &EnhancedMultigraph, sa: Dart, sb: Dart) -> bool {
    let mut dart_map: Vec<Option<Dart>> = vec![None; 2 * a.num_edges()];
    let mut vertex_map: Vec<Option<VertexIx>> = vec![None; a.num_vertices()];
    let mut stack = vec![(sa, sb)];
    while let Some((da, db)) = stack.pop() {
        match dart_map[da.index()] {
            Some(x) if x == db => continue,
            Some(_) => return false,
            None => {}
        }
        if a.edge_color(da.edge) != b.edge_color(db.edge) {
            return false;
        }
        let (va, vb) = (a.tail(da), b.tail(db));
        if a.color(va) != b.color(vb) || a.degree(va) != b.degree(vb) {
            return false;
        }
        match vertex_map[va] {
            Some(x) if x != vb => return false,
            _ => vertex_map[va] = Some(vb),
        }
        dart_map[da.index()] = Some(db);
        stack.push((da.twin(), db.twin()));
        stack.push((
            a.next_ccw(da, EdgeFilter::ALL).unwrap(),
            b.next_ccw(db, EdgeFilter::ALL).unwrap(),
        ));
    }
    let mut seen = vec![false; 2 * b.num_edges()];
    for d in dart_map.iter() {
        let Some(d) = d else { return false };
        if std::mem::replace(&mut seen[d.index()], true) {
            return false;
        }
    }
    true
}
