//! Command-line front end. Exit status 0 on success, 1 when an invariant
//! fails (the report is still written), 2 on bad input.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::emg::{parse_emg, render_emg, validate_plausible, EnhancedMultigraph};
use crate::families::{gen_spiral, load_bundled};
use crate::geometry::TreeChoice;
use crate::json::{qmatrix, zmatrix, zvec};
use crate::labeling::SeedFlag;
use crate::pipeline::{run_check, CheckOptions, Instance, PipelineError};
use crate::svg::{RenderOptions, SvgScene};

#[derive(Parser, Debug)]
#[command(
    name = "octacolor",
    version,
    about = "Nice colorings of flat cone octahedra, exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// EMG file, or `bundled:NAME`.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_parser = ["spiral"])]
    pub family: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Label seed as `vertex-id:edge-id`.
    #[arg(long = "seed-flag")]
    pub seed_flag: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit JSON instead of text where both exist.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Search {
    #[arg(long = "max-len", default_value_t = 3)]
    pub max_len: u64,
    #[arg(long, default_value_t = crate::cone::DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the plausibility axioms.
    Validate {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Direction exponent of every blue edge.
    Labels {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Shape system, rank and kernel basis.
    Solve {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Cone inequalities, extreme rays and lineality.
    Rays {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Lattice points of the cone with all lengths at most --max-len.
    Lattice {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        out: Output,
    },
    /// Realize one point as a surface with its colored triangulation.
    Realize {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        search: Search,
        /// Index into the strictly positive lattice points, or a comma
        /// separated length vector by ascending blue edge id.
        #[arg(long, default_value = "0")]
        point: String,
        #[command(flatten)]
        out: Output,
    },
    /// Global and restricted form, signature and conjecture verdict.
    Qform {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Every invariant suite on one instance.
    Check {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        search: Search,
        /// Positive points realized in full.
        #[arg(long, default_value_t = 3)]
        sample: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Write a generated instance as an EMG file.
    Gen {
        #[arg(long, value_parser = ["spiral"])]
        family: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the pipeline over a range of family members.
    Survey {
        #[arg(long, value_parser = ["spiral"])]
        family: String,
        /// `A..B`, inclusive.
        #[arg(long = "k-range")]
        k_range: String,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        out: Output,
    },
    /// SVG of the net of one realized point.
    Render {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        search: Search,
        #[arg(long, default_value = "0")]
        point: String,
        #[arg(long)]
        triangles: bool,
        #[arg(long = "vertex-colors")]
        vertex_colors: bool,
        #[arg(long = "overlay-dual")]
        overlay_dual: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status plus message for the user.
#[derive(Debug)]
pub enum Failure {
    Invariant(String),
    Input(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Enumeration(_) | PipelineError::Length { .. } | PipelineError::NotASolution => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// Parses arguments and runs; returns the process exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            let (Failure::Invariant(m) | Failure::Input(m)) = &f;
            eprintln!("error: {m}");
            f.code()
        }
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => {
            write_atomic(p, text.as_bytes()).map_err(|e| input_err(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn load_graph(src: &Source) -> Result<(String, EnhancedMultigraph), Failure> {
    match (&src.input, &src.family) {
        (Some(input), None) => {
            if let Some(name) = input.strip_prefix("bundled:") {
                return Ok((name.to_string(), load_bundled(name).map_err(input_err)?));
            }
            let text = std::fs::read_to_string(input).map_err(|e| input_err(format!("cannot read {input}: {e}")))?;
            let g = parse_emg(&text).map_err(|e| input_err(format!("{input}: {e}")))?;
            let name = Path::new(input)
                .file_stem()
                .map_or_else(|| input.clone(), |s| s.to_string_lossy().into_owned());
            Ok((name, g))
        }
        (None, Some(_)) => {
            let k = src.k.ok_or_else(|| input_err("--family needs --k"))?;
            let g = gen_spiral(k).map_err(input_err)?;
            Ok((format!("spiral-{}", 2 * k), g))
        }
        (Some(_), Some(_)) => Err(input_err("give either --input or --family, not both")),
        (None, None) => Err(input_err("no instance: pass --input FILE or --family spiral --k N")),
    }
}

fn seed_flag(g: &EnhancedMultigraph, s: &Option<String>) -> Result<Option<SeedFlag>, Failure> {
    let Some(s) = s else { return Ok(None) };
    let bad = || input_err(format!("--seed-flag expects vertex-id:edge-id, got {s:?}"));
    let (v, e) = s.split_once(':').ok_or_else(bad)?;
    let v: u32 = v.trim().parse().map_err(|_| bad())?;
    let e: u32 = e.trim().parse().map_err(|_| bad())?;
    let vertex = g
        .vertex_by_id(v)
        .ok_or_else(|| input_err(format!("no vertex with id {v}")))?;
    let edge = g
        .edge_by_id(e)
        .ok_or_else(|| input_err(format!("no edge with id {e}")))?;
    Ok(Some(SeedFlag { vertex, edge }))
}

fn instance(src: &Source) -> Result<Instance, Failure> {
    let (name, g) = load_graph(src)?;
    let seed = seed_flag(&g, &src.seed_flag)?;
    Ok(Instance::prepare(name, g, seed)?)
}

fn select_point(inst: &Instance, point: &str, search: &Search) -> Result<Vec<BigInt>, Failure> {
    if point.contains(',') {
        let v: Result<Vec<BigInt>, _> = point.split(',').map(|x| x.trim().parse::<BigInt>()).collect();
        return v.map_err(|_| input_err(format!("--point {point:?} is not a comma separated integer vector")));
    }
    let ix: usize = point
        .trim()
        .parse()
        .map_err(|_| input_err(format!("--point expects an index or a comma vector, got {point:?}")))?;
    let e = inst
        .enumerate(search.max_len, search.budget)
        .map_err(PipelineError::from)?;
    let pos: Vec<_> = e.positive().collect();
    pos.get(ix).map(|p| p.lengths.clone()).ok_or_else(|| {
        input_err(format!(
            "--point {ix}: only {} strictly positive points with lengths ≤ {}; raise --max-len",
            pos.len(),
            search.max_len
        ))
    })
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Validate { src, out } => {
            let (_, g) = load_graph(&src)?;
            let report = validate_plausible(&g);
            let text = if out.json {
                to_json(&report)
            } else {
                let mut t = format!(
                    "plausible: {}\nV = {}, E_b = {}, E_red = {}, bigons = {}, quadrilaterals = {}\n",
                    report.plausible,
                    report.counts.vertices,
                    report.counts.blue_edges,
                    report.counts.red_edges,
                    report.counts.bigons,
                    report.counts.quadrilaterals
                );
                for f in &report.findings {
                    t.push_str(&format!(
                        "{:?} [{}] {}\n",
                        f.severity,
                        serde_json::to_value(f.rule).unwrap().as_str().unwrap_or(""),
                        f.message
                    ));
                }
                t
            };
            emit(out.out.as_deref(), &text)?;
            if report.plausible {
                Ok(())
            } else {
                Err(Failure::Invariant(format!("{} findings", report.findings.len())))
            }
        }
        Command::Labels { src, out } => {
            let inst = instance(&src)?;
            let g = &inst.graph;
            let labels: serde_json::Map<String, Value> = g
                .blue_edges()
                .iter()
                .map(|&e| (g.edge(e).id.to_string(), json!(inst.labels.label(e).exponent())))
                .collect();
            let seed = inst.labels.seed;
            let v = json!({
                "seed": { "vertex": g.vertex(seed.vertex).id, "edge": g.edge(seed.edge).id },
                "labels": labels,
            });
            emit(out.out.as_deref(), &to_json(&v))
        }
        Command::Solve { src, out } => {
            let inst = instance(&src)?;
            let g = &inst.graph;
            let v = json!({
                "columns": inst.system.columns.iter().map(|&e| g.edge(e).id).collect::<Vec<_>>(),
                "rows": inst.system.row_origin.iter().map(|o| json!({"polygon": g.vertex(o.polygon).id, "part": o.part})).collect::<Vec<_>>(),
                "matrix": zmatrix(&inst.system.matrix),
                "rank": inst.kernel.rank,
                "dimension": inst.kernel.dimension(),
                "kernel_basis": zmatrix(&inst.kernel.vectors),
                "checks": crate::shapesys::check_lemmas(&inst.system, &inst.kernel),
            });
            emit(out.out.as_deref(), &to_json(&v))
        }
        Command::Rays { src, out } => {
            let inst = instance(&src)?;
            let v = json!({
                "cone": inst.cone,
                "lattice_basis": zmatrix(&inst.lattice.basis),
            });
            emit(out.out.as_deref(), &to_json(&v))
        }
        Command::Lattice { src, search, out } => {
            let inst = instance(&src)?;
            let e = inst
                .enumerate(search.max_len, search.budget)
                .map_err(PipelineError::from)?;
            let v = json!({
                "max_len": search.max_len,
                "count": e.points.len(),
                "positive": e.positive().count(),
                "nodes_visited": e.nodes_visited,
                "points": e.points,
            });
            emit(out.out.as_deref(), &to_json(&v))
        }
        Command::Realize {
            src,
            search,
            point,
            out,
        } => {
            let inst = instance(&src)?;
            let lengths = select_point(&inst, &point, &search)?;
            let r = inst.realize(&lengths, None, TreeChoice::Bfs)?;
            let checks = r.checks(&inst, &[1, 2]);
            let v = json!({ "realization": r, "checks": checks });
            emit(out.out.as_deref(), &to_json(&v))?;
            if checks.all_passed() {
                Ok(())
            } else {
                Err(Failure::Invariant(
                    checks.failures().map(|c| c.to_string()).collect::<Vec<_>>().join("; "),
                ))
            }
        }
        Command::Qform { src, out } => {
            let inst = instance(&src)?;
            let sig = inst.signature();
            let v = json!({
                "global": zmatrix(&inst.form.global),
                "kernel_basis": zmatrix(&inst.kernel.vectors),
                "restricted": qmatrix(inst.form.restricted.as_ref().expect("restricted")),
                "signature": sig,
                "signature_in_lattice_basis": inst.signature_in_lattice_basis(),
                "non_degenerate": sig.zero == 0,
                "signature_conjecture_holds": sig.is_conjectured(),
            });
            emit(out.out.as_deref(), &to_json(&v))
        }
        Command::Check {
            src,
            search,
            sample,
            out,
        } => {
            let inst = instance(&src)?;
            let opts = CheckOptions {
                max_len: search.max_len,
                budget: search.budget,
                sample,
                trees: 5,
            };
            let report = run_check(&inst, &opts)?;
            let text = if out.json {
                to_json(&report)
            } else {
                let mut t = format!(
                    "{}: V = {}, E_b = {}, rank {}, dimension {}, signature {}{}\n",
                    report.name,
                    report.vertices,
                    report.blue_edges,
                    report.rank,
                    report.dimension,
                    report.signature,
                    if report.signature_conjecture_holds {
                        ""
                    } else {
                        " (conjecture violated)"
                    }
                );
                t.push_str(&report.checks.to_string());
                for p in &report.points {
                    let l: Vec<String> = p.lengths.iter().map(|x| x.to_string()).collect();
                    t.push_str(&format!(
                        "point [{}]: {} triangles, Q = {}\n",
                        l.join(","),
                        p.triangle_count,
                        p.form_value
                    ));
                    if let Some(e) = &p.error {
                        t.push_str(&format!("FAIL realization: {e}\n"));
                    }
                    t.push_str(&p.checks.to_string());
                }
                for n in &report.notes {
                    t.push_str(&format!("note: {n}\n"));
                }
                t.push_str(if report.passed() { "PASS\n" } else { "FAIL\n" });
                t
            };
            emit(out.out.as_deref(), &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Invariant("some checks failed".into()))
            }
        }
        Command::Gen { family: _, k, out } => {
            let g = gen_spiral(k).map_err(input_err)?;
            let text = format!("# spiral k={k}\n{}", render_emg(&g));
            emit(out.as_deref(), &text)
        }
        Command::Survey {
            family: _,
            k_range,
            search,
            out,
        } => {
            let (a, b) = k_range
                .split_once("..")
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
                .ok_or_else(|| input_err(format!("--k-range expects A..B, got {k_range:?}")))?;
            let rows: Vec<Value> = (a..=b).into_par_iter().map(|k| survey_row(k, &search)).collect();
            let failed = rows.iter().filter(|r| r["ok"] != json!(true)).count();
            emit(
                out.out.as_deref(),
                &to_json(&json!({ "family": "spiral", "instances": rows })),
            )?;
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Invariant(format!("{failed} instances failed")))
            }
        }
        Command::Render {
            src,
            search,
            point,
            triangles,
            vertex_colors,
            overlay_dual,
            out,
        } => {
            let inst = instance(&src)?;
            let lengths = select_point(&inst, &point, &search)?;
            let r = inst.realize(&lengths, None, TreeChoice::Bfs)?;
            let opts = RenderOptions {
                triangles,
                vertex_colors,
                overlay_dual,
            };
            emit(out.as_deref(), &SvgScene::from_realization(&inst, &r, opts).render())
        }
    }
}

fn survey_row(k: usize, search: &Search) -> Value {
    let start = Instant::now();
    let name = format!("spiral-{}", 2 * k);
    let inst = match gen_spiral(k)
        .map_err(|e| e.to_string())
        .and_then(|g| Instance::prepare(&name, g, None).map_err(|e| e.to_string()))
    {
        Ok(i) => i,
        Err(e) => return json!({ "k": k, "name": name, "ok": false, "error": e }),
    };
    let opts = CheckOptions {
        max_len: search.max_len,
        budget: search.budget,
        sample: 1,
        trees: 2,
    };
    match run_check(&inst, &opts) {
        Ok(r) => json!({
            "k": k,
            "name": name,
            "ok": r.passed(),
            "vertices": r.vertices,
            "blue_edges": r.blue_edges,
            "rank": r.rank,
            "dimension": r.dimension,
            "extreme_rays": r.cone.extreme_rays.len(),
            "has_positive_point": r.cone.has_positive_point,
            "positive_points": r.positive_points,
            "smallest_positive_point": r.points.first().map(|p| zvec(&p.lengths)),
            "signature": r.signature,
            "signature_conjecture_holds": r.signature_conjecture_holds,
            "failed_checks": r.checks.failures().map(|c| c.name.clone()).collect::<Vec<_>>(),
            "elapsed_ms": start.elapsed().as_millis() as u64,
        }),
        Err(e) => json!({ "k": k, "name": name, "ok": false, "error": e.to_string() }),
    }
}
