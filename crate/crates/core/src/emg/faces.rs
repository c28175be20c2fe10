use serde::Serialize;

use super::{Dart, EdgeColor, EdgeIx, EnhancedMultigraph};

/// Which edge colors take part in a traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeFilter {
    pub blue: bool,
    pub red: bool,
}

impl EdgeFilter {
    pub const BLUE: EdgeFilter = EdgeFilter { blue: true, red: false };
    pub const ALL: EdgeFilter = EdgeFilter { blue: true, red: true };

    pub fn accepts(self, c: EdgeColor) -> bool {
        match c {
            EdgeColor::Blue => self.blue,
            EdgeColor::Red => self.red,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Bigon,
    Quadrilateral,
    Other,
}

/// A face as a cyclic dart sequence. Consecutive darts `d`, `d'` satisfy
/// `d' = next_ccw(twin(d))`; the face owns the corner just clockwise of each
/// of its darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    pub kind: FaceKind,
    /// Red edges with both ends inside corners of this face.
    pub reds: Vec<EdgeIx>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// The red edge of a quadrilateral, when exactly one is present.
    pub fn red_edge(&self) -> Option<EdgeIx> {
        match (self.kind, self.reds.as_slice()) {
            (FaceKind::Quadrilateral, [r]) => Some(*r),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub filter: EdgeFilter,
    pub faces: Vec<Face>,
    face_of_dart: Vec<Option<usize>>,
    /// Red edges whose two ends fall into different faces (or no face).
    pub stray_reds: Vec<EdgeIx>,
}

impl FaceSet {
    /// Face containing the corner just clockwise of `d`. For a dart rejected
    /// by the filter, `None`.
    pub fn face_of(&self, d: Dart) -> Option<usize> {
        self.face_of_dart[d.index()]
    }

    /// Face containing the corner in which a dart of any color sits, found by
    /// the next filtered dart counterclockwise.
    pub fn corner_face(&self, g: &EnhancedMultigraph, d: Dart) -> Option<usize> {
        if self.filter.accepts(g.edge_color(d.edge)) {
            return self.face_of(d);
        }
        g.next_ccw(d, self.filter).and_then(|x| self.face_of(x))
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn count(&self, kind: FaceKind) -> usize {
        self.faces.iter().filter(|f| f.kind == kind).count()
    }

    /// `V - E + F` over all vertices and the filtered edges.
    pub fn euler_characteristic(&self, g: &EnhancedMultigraph) -> i64 {
        let e = g.edges().iter().filter(|e| self.filter.accepts(e.color)).count() as i64;
        g.num_vertices() as i64 - e + self.faces.len() as i64
    }
}

/// Traces the faces of the sub-embedding on the filtered edges. Faces are
/// numbered in order of their smallest dart index.
pub fn trace_faces(g: &EnhancedMultigraph, filter: EdgeFilter) -> FaceSet {
    let mut face_of_dart = vec![None; 2 * g.num_edges()];
    let mut faces = Vec::new();
    for e in 0..g.num_edges() {
        if !filter.accepts(g.edge_color(e)) {
            continue;
        }
        for end in 0..2 {
            let start = Dart::new(e, end);
            if face_of_dart[start.index()].is_some() {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of_dart[d.index()] = Some(id);
                darts.push(d);
                d = g
                    .next_ccw(d.twin(), filter)
                    .expect("a filtered dart's head has a filtered dart");
                if d == start {
                    break;
                }
            }
            let kind = match darts.len() {
                2 => FaceKind::Bigon,
                4 => FaceKind::Quadrilateral,
                _ => FaceKind::Other,
            };
            faces.push(Face {
                darts,
                kind,
                reds: Vec::new(),
            });
        }
    }

    let mut set = FaceSet {
        filter,
        faces,
        face_of_dart,
        stray_reds: Vec::new(),
    };
    if !filter.red {
        for r in g.red_edges() {
            let a = set.corner_face(g, Dart::new(r, 0));
            let b = set.corner_face(g, Dart::new(r, 1));
            match (a, b) {
                (Some(x), Some(y)) if x == y => set.faces[x].reds.push(r),
                _ => set.stray_reds.push(r),
            }
        }
    }
    set
}
