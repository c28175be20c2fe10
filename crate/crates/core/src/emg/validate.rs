use std::collections::HashMap;

use serde::Serialize;

use super::{trace_faces, Dart, EdgeFilter, EnhancedMultigraph, FaceKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Total degree 6 at every vertex.
    Degree,
    /// Blue faces: six bigons, all others quadrilaterals.
    BlueFaces,
    /// One red edge per blue quadrilateral, parallel to a side of it.
    RedParallel,
    /// `E_blue - 2V = 2`, and the blue embedding is spherical.
    Euler,
    /// Every blue edge joins a black and a white vertex.
    Bipartite,
    /// A vertex of blue degree k carries 6 - k red edge ends.
    RedCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub rule: Rule,
    pub severity: Severity,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub vertices: usize,
    pub blue_edges: usize,
    pub red_edges: usize,
    pub bigons: usize,
    pub quadrilaterals: usize,
    pub other_faces: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub plausible: bool,
    pub findings: Vec<Finding>,
    pub counts: Counts,
}

impl ValidationReport {
    pub fn violates(&self, rule: Rule) -> bool {
        self.findings
            .iter()
            .any(|f| f.rule == rule && f.severity == Severity::Error)
    }
}

/// Checks every plausibility rule and collects all findings.
pub fn validate_plausible(g: &EnhancedMultigraph) -> ValidationReport {
    let mut findings = Vec::new();
    let mut err = |rule, message: String| {
        findings.push(Finding {
            rule,
            severity: Severity::Error,
            message,
        })
    };
    let vid = |v: usize| g.vertex(v).id;
    let eid = |e: usize| g.edge(e).id;

    for v in 0..g.num_vertices() {
        if g.degree(v) != 6 {
            err(Rule::Degree, format!("vertex {} has degree {}", vid(v), g.degree(v)));
        }
    }

    let faces = trace_faces(g, EdgeFilter::BLUE);
    let counts = Counts {
        vertices: g.num_vertices(),
        blue_edges: g.num_blue_edges(),
        red_edges: g.num_edges() - g.num_blue_edges(),
        bigons: faces.count(FaceKind::Bigon),
        quadrilaterals: faces.count(FaceKind::Quadrilateral),
        other_faces: faces.count(FaceKind::Other),
    };
    if counts.bigons != 6 {
        err(Rule::BlueFaces, format!("{} blue bigons, expected 6", counts.bigons));
    }
    for (i, f) in faces.faces.iter().enumerate() {
        if f.kind == FaceKind::Other {
            err(Rule::BlueFaces, format!("blue face {} has {} sides", i, f.len()));
        }
    }

    // Red darts stacked in one blue corner.
    let mut per_corner: HashMap<Dart, usize> = HashMap::new();
    for r in g.red_edges() {
        for end in 0..2 {
            if let Some(c) = g.next_ccw(Dart::new(r, end), EdgeFilter::BLUE) {
                *per_corner.entry(c).or_default() += 1;
            }
        }
    }
    let mut stacked: Vec<_> = per_corner.into_iter().filter(|(_, n)| *n > 1).collect();
    stacked.sort();
    for (c, n) in stacked {
        err(
            Rule::RedParallel,
            format!(
                "{} red edge ends share the corner before dart {}:{} at vertex {}",
                n,
                eid(c.edge),
                c.end,
                vid(g.tail(c))
            ),
        );
    }
    for &r in &faces.stray_reds {
        err(
            Rule::RedParallel,
            format!("red edge {} crosses between blue faces", eid(r)),
        );
    }
    for (i, f) in faces.faces.iter().enumerate() {
        match f.kind {
            FaceKind::Quadrilateral if f.reds.len() != 1 => err(
                Rule::RedParallel,
                format!("blue quadrilateral {} contains {} red edges", i, f.reds.len()),
            ),
            FaceKind::Bigon | FaceKind::Other if !f.reds.is_empty() => err(
                Rule::RedParallel,
                format!("blue face {} of length {} contains a red edge", i, f.len()),
            ),
            _ => {}
        }
        for &r in &f.reds {
            if !red_is_parallel(g, r) {
                err(
                    Rule::RedParallel,
                    format!("red edge {} is not parallel to a side of its face", eid(r)),
                );
            }
        }
    }

    let lhs = counts.blue_edges as i64 - 2 * counts.vertices as i64;
    if lhs != 2 {
        err(Rule::Euler, format!("E_blue - 2V = {lhs}, expected 2"));
    }
    let chi = faces.euler_characteristic(g);
    if chi != 2 {
        err(Rule::Euler, format!("blue embedding has Euler characteristic {chi}"));
    }

    for &e in g.blue_edges() {
        let [a, b] = g.edge(e).ends;
        if g.color(a) == g.color(b) {
            err(
                Rule::Bipartite,
                format!("blue edge {} joins two {:?} vertices", eid(e), g.color(a)),
            );
        }
    }

    for v in 0..g.num_vertices() {
        let k = g.blue_degree(v);
        let reds = g.degree(v) - k;
        if k > 6 || reds != 6 - k {
            err(
                Rule::RedCount,
                format!("vertex {} has blue degree {} and {} red ends", vid(v), k, reds),
            );
        }
    }

    ValidationReport {
        plausible: findings.is_empty(),
        findings,
        counts,
    }
}

/// A red edge `r` is parallel to blue dart `d` when it sits immediately on one
/// side of `d` at one end and immediately on the matching side of `twin(d)` at
/// the other end.
fn red_is_parallel(g: &EnhancedMultigraph, r: usize) -> bool {
    let r0 = Dart::new(r, 0);
    let r1 = Dart::new(r, 1);
    let (Some(n0), Some(p0), Some(n1), Some(p1)) = (
        g.next_ccw(r0, EdgeFilter::ALL),
        g.prev_ccw(r0, EdgeFilter::ALL),
        g.next_ccw(r1, EdgeFilter::ALL),
        g.prev_ccw(r1, EdgeFilter::ALL),
    ) else {
        return false;
    };
    let blue = |d: Dart| g.is_blue(d.edge);
    (blue(n0) && p1 == n0.twin()) || (blue(p0) && n1 == p0.twin())
}
