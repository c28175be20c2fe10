//! One instance through every stage: validation, labels, shape system, cone,
//! lattice, realization and the quadratic form.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::cone::{
    enumerate_lattice_points, extreme_rays, lattice_basis, restrict_to_kernel, ConeDescription, ConeError,
    EnumerationError, LatticeBasis, LatticeEnumeration,
};
use crate::emg::{validate_plausible, EnhancedMultigraph, ValidationReport};
use crate::geometry::{
    build_triangulation, develop_net, develop_surface, four_color, realize_polygons, triarea, unit_triangulate,
    BaseFlag, ColorError, ColoredTriangulation, GeometryError, MeshError, NetLayout, PolygonChain, RealizedSurface,
    TilingError, TreeChoice, UnitTriangle,
};
use crate::grid::Q;
use crate::labeling::{assign_labels, polygon_boundaries, LabelError, LabelMap, PolygonBoundary, SeedFlag};
use crate::qform::{
    assemble_form, congruence, restrict_form, signature, verify_triangle_identity, QuadraticForm, Signature,
};
use crate::report::{Check, CheckList};
use crate::shapesys::{build_shape_system, check_lemmas, kernel_basis, KernelBasis, ShapeSystem};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("graph is not plausible: {}", .0.findings.iter().map(|f| f.message.as_str()).collect::<Vec<_>>().join("; "))]
    NotPlausible(Box<ValidationReport>),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("polygon {polygon}: {source}")]
    Tiling { polygon: u32, source: TilingError },
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error("length vector has {found} entries, expected {expected}")]
    Length { found: usize, expected: usize },
    #[error("length vector is not in the solution space")]
    NotASolution,
}

/// Everything that depends only on the combinatorics.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: EnhancedMultigraph,
    pub validation: ValidationReport,
    pub boundaries: Vec<PolygonBoundary>,
    pub labels: LabelMap,
    pub system: ShapeSystem,
    pub kernel: KernelBasis,
    pub cone: ConeDescription,
    pub lattice: LatticeBasis,
    pub form: QuadraticForm,
}

/// Default label seed: the polygon and edge of the default base flag, so the
/// folded picture needs no extra rotation.
pub fn default_seed(g: &EnhancedMultigraph, boundaries: &[PolygonBoundary]) -> Option<SeedFlag> {
    if let Some(b) = BaseFlag::default_for(g) {
        return Some(SeedFlag {
            vertex: b.polygon,
            edge: b.edge,
        });
    }
    let b = boundaries.first()?;
    Some(SeedFlag {
        vertex: b.vertex,
        edge: b.sides.first()?.edge,
    })
}

impl Instance {
    pub fn prepare(
        name: impl Into<String>,
        graph: EnhancedMultigraph,
        seed: Option<SeedFlag>,
    ) -> Result<Self, PipelineError> {
        let validation = validate_plausible(&graph);
        if !validation.plausible {
            return Err(PipelineError::NotPlausible(Box::new(validation)));
        }
        let boundaries = polygon_boundaries(&graph)?;
        let seed = match seed {
            Some(s) => s,
            None => default_seed(&graph, &boundaries).ok_or(LabelError::NoSides(0))?,
        };
        let labels = assign_labels(&graph, &boundaries, seed)?;
        let system = build_shape_system(&graph, &labels);
        let kernel = kernel_basis(&system);
        let cone = extreme_rays(&restrict_to_kernel(&kernel))?;
        let lattice = lattice_basis(&kernel);
        let form = restrict_form(&assemble_form(&graph, &boundaries), &kernel);
        Ok(Instance {
            name: name.into(),
            graph,
            validation,
            boundaries,
            labels,
            system,
            kernel,
            cone,
            lattice,
            form,
        })
    }

    pub fn signature(&self) -> Signature {
        self.form.signature.expect("restricted form")
    }

    /// Signature recomputed in the Hermite basis of the integer lattice.
    pub fn signature_in_lattice_basis(&self) -> Signature {
        signature(&congruence(&self.form.global, &self.lattice.basis))
    }

    pub fn enumerate(&self, max_len: u64, budget: u64) -> Result<LatticeEnumeration, EnumerationError> {
        enumerate_lattice_points(&self.cone, &self.lattice, max_len, budget)
    }

    /// Folded surface for a positive rational length vector.
    pub fn develop(
        &self,
        lengths: &[Q],
        base: Option<BaseFlag>,
        tree: TreeChoice,
    ) -> Result<(Vec<PolygonChain>, RealizedSurface), PipelineError> {
        let expected = self.graph.num_blue_edges();
        if lengths.len() != expected {
            return Err(PipelineError::Length {
                found: lengths.len(),
                expected,
            });
        }
        let chains = realize_polygons(&self.graph, &self.boundaries, &self.labels, lengths)?;
        let base = match base {
            Some(b) => b,
            None => default_base(&self.graph, &chains)?,
        };
        let surface = develop_surface(&self.graph, &chains, base, tree)?;
        Ok((chains, surface))
    }

    /// Full realization of a strictly positive integer point.
    pub fn realize(
        &self,
        lengths: &[BigInt],
        base: Option<BaseFlag>,
        tree: TreeChoice,
    ) -> Result<Realization, PipelineError> {
        if lengths.len() == self.graph.num_blue_edges() && !self.system.annihilates(lengths) {
            return Err(PipelineError::NotASolution);
        }
        let q: Vec<Q> = lengths.iter().map(|x| Q::from_integer(x.clone())).collect();
        let (_, surface) = self.develop(&q, base, tree)?;
        let mut tilings: Vec<Vec<UnitTriangle>> = Vec::with_capacity(surface.polygons.len());
        for c in &surface.polygons {
            let t = unit_triangulate(c).map_err(|source| PipelineError::Tiling {
                polygon: self.graph.vertex(c.polygon).id,
                source,
            })?;
            tilings.push(t);
        }
        let mesh = build_triangulation(&surface, &tilings)?;
        let triangulation = four_color(&mesh)?;
        let net = develop_net(&surface);
        let triarea_sum = surface
            .polygons
            .iter()
            .map(triarea)
            .fold(BigRational::zero(), |a, b| a + b);
        Ok(Realization {
            lengths: lengths.to_vec(),
            form_value: self.form.value(lengths),
            triangle_count: triangulation.triangles.len(),
            triarea_sum,
            surface,
            tilings,
            triangulation,
            net,
        })
    }
}

/// `BaseFlag::default_for`, or the first side of the first white polygon.
fn default_base(g: &EnhancedMultigraph, chains: &[PolygonChain]) -> Result<BaseFlag, PipelineError> {
    if let Some(b) = BaseFlag::default_for(g) {
        return Ok(b);
    }
    let c = chains
        .iter()
        .find(|c| c.color == crate::emg::PolygonColor::White)
        .ok_or(GeometryError::Disconnected)?;
    Ok(BaseFlag::at_side(chains, c.polygon, c.sides[0].edge).expect("side of its own chain"))
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    #[serde(serialize_with = "crate::json::ser_zvec")]
    pub lengths: Vec<BigInt>,
    #[serde(serialize_with = "crate::json::ser_z")]
    pub form_value: BigInt,
    pub triangle_count: usize,
    #[serde(serialize_with = "crate::json::ser_q")]
    pub triarea_sum: Q,
    pub surface: RealizedSurface,
    #[serde(skip)]
    pub tilings: Vec<Vec<UnitTriangle>>,
    pub triangulation: ColoredTriangulation,
    pub net: NetLayout,
}

impl Realization {
    /// Invariant checks for this realization. `trees` extra random spanning
    /// trees are used to recheck the folded images.
    pub fn checks(&self, inst: &Instance, trees: &[u64]) -> CheckList {
        let mut c = CheckList::default();
        let cones = self.surface.cone_vertices().len();
        c.push(Check::new(
            "six-cone-vertices",
            cones == 6,
            format!("{cones} cone vertices"),
        ));
        let t = &self.triangulation;
        c.push(Check::new(
            "euler",
            t.euler_characteristic() == 2,
            format!("V - E + F = {}", t.euler_characteristic()),
        ));
        c.push(Check::new(
            "degrees",
            t.has_octahedral_degrees(),
            format!("degree histogram {:?}", t.degree_histogram()),
        ));
        let improper = brute_force_improper(t);
        c.push(Check::new(
            "coloring-proper",
            improper == 0,
            format!("{improper} monochromatic adjacent pairs"),
        ));
        let unbalanced = t
            .incidence_counts()
            .iter()
            .filter(|(b, w)| (*b as i64 - *w as i64).rem_euclid(3) != 0)
            .count();
        c.push(Check::new(
            "mod-3-balance",
            unbalanced == 0,
            format!("{unbalanced} vertices with black ≢ white mod 3"),
        ));
        c.extend(verify_triangle_identity(
            &inst.form,
            &self.lengths,
            self.triangle_count,
            &self.triarea_sum,
        ));
        c.push(Check::new(
            "net-tree-edges",
            self.net.tree_edges_coincide(&self.surface),
            format!("{} overlapping polygon pairs (permitted)", self.net.overlaps.len()),
        ));
        let base = self.surface.base;
        let images = self.surface.folded_images();
        let mut mismatched = Vec::new();
        for &seed in trees {
            let q: Vec<Q> = self.lengths.iter().map(|x| Q::from_integer(x.clone())).collect();
            match inst.develop(&q, Some(base), TreeChoice::Random(seed)) {
                Ok((_, s)) if s.folded_images() == images => {}
                _ => mismatched.push(seed),
            }
        }
        c.push(Check::new(
            "folding-map-well-defined",
            mismatched.is_empty(),
            format!("{} random trees, mismatched seeds {:?}", trees.len(), mismatched),
        ));
        c
    }
}

/// Adjacent vertex pairs with equal color, found by scanning every triangle
/// side rather than the edge list.
pub fn brute_force_improper(t: &ColoredTriangulation) -> usize {
    let mut bad = 0;
    for tri in &t.triangles {
        for k in 0..3 {
            let (a, b) = (tri.vertices[k], tri.vertices[(k + 1) % 3]);
            let (ca, cb) = (t.vertices[a].color, t.vertices[b].color);
            if ca.is_none() || ca == cb {
                bad += 1;
            }
        }
    }
    bad
}

#[derive(Clone, Debug, Serialize)]
pub struct PointSummary {
    #[serde(serialize_with = "crate::json::ser_zvec")]
    pub lengths: Vec<BigInt>,
    pub ok: bool,
    pub error: Option<String>,
    pub degree_histogram: Vec<(usize, usize)>,
    pub triangle_count: usize,
    pub four_coloring: bool,
    pub mod3_balance: bool,
    #[serde(serialize_with = "crate::json::ser_z")]
    pub form_value: BigInt,
    pub checks: CheckList,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub name: String,
    pub vertices: usize,
    pub blue_edges: usize,
    pub red_edges: usize,
    pub validation: ValidationReport,
    pub rank: usize,
    pub dimension: usize,
    pub cone: ConeDescription,
    pub max_len: u64,
    pub lattice_points: usize,
    pub positive_points: usize,
    pub points: Vec<PointSummary>,
    pub signature: Signature,
    pub signature_conjecture_holds: bool,
    pub checks: CheckList,
    /// Informational findings that are not failures.
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.checks.all_passed() && self.points.iter().all(|p| p.ok)
    }
}

pub struct CheckOptions {
    pub max_len: u64,
    pub budget: u64,
    /// Strictly positive points realized in full.
    pub sample: usize,
    /// Random spanning trees per realized point.
    pub trees: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_len: 3,
            budget: crate::cone::DEFAULT_BUDGET,
            sample: 3,
            trees: 2,
        }
    }
}

/// Every invariant suite of every stage on one instance.
pub fn run_check(inst: &Instance, opts: &CheckOptions) -> Result<PipelineReport, PipelineError> {
    let start = Instant::now();
    let g = &inst.graph;
    let mut checks = CheckList::default();
    let counts = &inst.validation.counts;
    let (v, eb) = (counts.vertices as i64, counts.blue_edges as i64);
    checks.push(Check::new(
        "plausible",
        inst.validation.plausible,
        "validation has no errors",
    ));
    checks.push(Check::new(
        "euler-law",
        eb - 2 * v == 2,
        format!("E_b - 2V = {}", eb - 2 * v),
    ));
    checks.extend(check_lemmas(&inst.system, &inst.kernel));
    checks.push(Check::new(
        "lattice-in-kernel",
        inst.lattice.basis.iter().all(|b| inst.system.annihilates(b)),
        format!("{} lattice basis vectors", inst.lattice.rank()),
    ));
    let rays_ok = inst.cone.extreme_rays.iter().all(|r| inst.cone.contains(r));
    checks.push(Check::new(
        "rays-in-cone",
        rays_ok,
        format!("{} extreme rays", inst.cone.extreme_rays.len()),
    ));
    checks.push(Check::new(
        "positive-solution",
        inst.cone.has_positive_point,
        "B·Σ rays > 0 in every coordinate",
    ));
    let sig = inst.signature();
    let sig2 = inst.signature_in_lattice_basis();
    checks.push(Check::new(
        "signature-basis-independent",
        sig == sig2,
        format!("kernel basis {sig}, lattice basis {sig2}"),
    ));
    let mut notes = Vec::new();
    if !sig.is_conjectured() {
        notes.push(format!(
            "restricted form has signature {sig}, the conjectured value is (1,3,0)"
        ));
    }
    if sig.zero == 0 {
        notes.push("restricted form is non-degenerate".to_string());
    }
    if !inst.cone.lineality.is_empty() {
        notes.push(format!(
            "cone has a lineality space of dimension {}",
            inst.cone.lineality.len()
        ));
    }

    let enumeration = inst.enumerate(opts.max_len, opts.budget)?;
    let positive: Vec<_> = enumeration.positive().collect();
    checks.push(Check::new(
        "positive-lattice-point",
        !positive.is_empty() || !inst.cone.has_positive_point,
        format!(
            "{} strictly positive points with lengths ≤ {}",
            positive.len(),
            opts.max_len
        ),
    ));
    let seeds: Vec<u64> = (1..=opts.trees as u64).collect();
    let points = positive
        .iter()
        .take(opts.sample)
        .map(|p| summarize(inst, &p.lengths, &seeds))
        .collect();

    Ok(PipelineReport {
        name: inst.name.clone(),
        vertices: g.num_vertices(),
        blue_edges: g.num_blue_edges(),
        red_edges: counts.red_edges,
        validation: inst.validation.clone(),
        rank: inst.kernel.rank,
        dimension: inst.kernel.dimension(),
        cone: inst.cone.clone(),
        max_len: opts.max_len,
        lattice_points: enumeration.points.len(),
        positive_points: positive.len(),
        points,
        signature: sig,
        signature_conjecture_holds: sig.is_conjectured(),
        checks,
        notes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn summarize(inst: &Instance, lengths: &[BigInt], trees: &[u64]) -> PointSummary {
    match inst.realize(lengths, None, TreeChoice::Bfs) {
        Ok(r) => {
            let checks = r.checks(inst, trees);
            let passed = |n: &str| checks.iter().any(|c| c.name == n && c.passed);
            PointSummary {
                lengths: lengths.to_vec(),
                ok: checks.all_passed(),
                error: None,
                degree_histogram: r.triangulation.degree_histogram().into_iter().collect(),
                triangle_count: r.triangle_count,
                four_coloring: passed("coloring-proper"),
                mod3_balance: passed("mod-3-balance"),
                form_value: r.form_value.clone(),
                checks,
            }
        }
        Err(e) => PointSummary {
            lengths: lengths.to_vec(),
            ok: false,
            error: Some(e.to_string()),
            degree_histogram: Vec::new(),
            triangle_count: 0,
            four_coloring: false,
            mod3_balance: false,
            form_value: inst.form.value(lengths),
            checks: CheckList::default(),
        },
    }
}
