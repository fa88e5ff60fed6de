//! Command-line surface over the arcat engines: algebra inspection,
//! translate and almost-split-sequence queries, mesh-window queries,
//! and the cover/envelope machinery over subcategory files.
//!
//! Exit codes: 0 on success, 2 when an input document or literal is
//! malformed, 1 when a well-formed computation refuses (the error
//! record on stderr carries the stable error code either way).

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arcat::algebra::BoundQuiverAlgebra;
use arcat::approx::{
    is_strong_cover, minimize, nu_via_approx, precover, proper_diagnostics, subcategory,
    LinearCategory, MeshEngine, Realization,
};
use arcat::artrans::{ar_quiver, ar_sequence, default_dimension_cap, tau};
use arcat::decomp::decompose;
use arcat::io::{
    algebra_from_json, labels_from_json, parse_vertex, parse_window, representation_from_json,
    representation_to_json, ObjectLabel,
};
use arcat::mesh::{build_mesh, label_slice, MeshCategory, MeshVertex, SliceLabeling};
use arcat::nakayama::nakayama_of_projective;
use arcat::quiver::linear_an;
use arcat::rep::Representation;
use arcat::{Error, Result};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser)]
#[command(name = "arcat", version, about = "Auslander-Reiten translates two ways: \
module categories of bound quiver algebras, and covers in a mesh model")]
struct Cli {
    /// Output format (dot only where a graph is being emitted)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Summand bound for quiver knitting (overrides AR_APPROX_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect a bound quiver algebra file
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Module-category computations over an algebra file
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Mesh-window queries
    Mesh {
        #[command(subcommand)]
        cmd: MeshCmd,
    },
    /// Covers, the induced projective-injective correspondence, and
    /// diagnostics over a subcategory file
    Subcat {
        #[command(subcommand)]
        cmd: SubcatCmd,
    },
    /// Run the embedded two-vertex showcase end to end and print every
    /// cross-check
    Demo,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Summarize vertices, arrows, relations, and the indecomposable
    /// projectives and injectives
    Info { file: String },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// The Auslander-Reiten translate of a module
    Tau { file: String, module: String },
    /// The almost split sequence ending in a module
    ArSeq { file: String, module: String },
    /// Knit the whole Auslander-Reiten quiver
    ArQuiver {
        file: String,
        /// Emit DOT (same as --format dot)
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum MeshCmd {
    /// Build a mesh window and print its shape
    Build {
        #[arg(long)]
        n: usize,
        /// Window bounds written lo..hi
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// The hom-space dimension between two vertices
    Hom {
        #[arg(allow_hyphen_values = true)]
        v1: String,
        #[arg(allow_hyphen_values = true)]
        v2: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
    },
    /// The Serre image of a vertex
    Serre {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
    },
}

#[derive(Subcommand)]
enum SubcatCmd {
    /// Minimized cover of a target by the subcategory
    Cover {
        subfile: String,
        target: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
    },
    /// The projective-to-injective correspondence read off strong
    /// covers of Serre shifts
    Nu {
        subfile: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
    },
    /// Hom-vanishing, projectives/injectives, and the two "enough"
    /// flags
    Diagnostics {
        subfile: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let record = serde_json::json!({
                "error": { "code": e.code(), "message": e.to_string() }
            });
            eprintln!("{record}");
            if matches!(e, Error::Malformed { .. }) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Malformed {
        reason: format!("cannot read `{path}`: {e}"),
    })
}

fn load_algebra(path: &str) -> Result<BoundQuiverAlgebra> {
    algebra_from_json(&read_file(path)?)
}

/// A module argument is a composition-series name, an inline JSON
/// object, or a path to a representation JSON file.
fn resolve_module(alg: &BoundQuiverAlgebra, arg: &str) -> Result<Representation> {
    let t = arg.trim();
    if t.starts_with('{') {
        representation_from_json(alg, t)
    } else if t.ends_with(".json") {
        representation_from_json(alg, &read_file(t)?)
    } else {
        alg.module_by_name(t)
    }
}

fn display_name(alg: &BoundQuiverAlgebra, m: &Representation) -> String {
    if m.is_zero() {
        "0".to_string()
    } else {
        alg.module_name(m)
    }
}

fn mesh_context(n: usize, window: &str) -> Result<MeshCategory> {
    build_mesh(n, parse_window(window)?)
}

/// Resolve subcategory entries against the mesh, labeling the standard
/// slice only when some entry is a module name.
fn resolve_entries(
    mc: &MeshCategory,
    entries: &[ObjectLabel],
) -> Result<(Vec<MeshVertex>, Option<SliceLabeling>)> {
    let labeling = if entries.iter().any(|e| matches!(e, ObjectLabel::Name(_))) {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(mc.n()))?;
        Some(label_slice(mc, &alg)?)
    } else {
        None
    };
    let mut verts = Vec::new();
    for entry in entries {
        verts.push(match entry {
            ObjectLabel::Coord(v) => *v,
            ObjectLabel::Name(name) => {
                let l = labeling.as_ref().expect("labeling built for names");
                l.names
                    .iter()
                    .position(|n| n == name)
                    .map(|k| l.vertices[k])
                    .ok_or_else(|| Error::Malformed {
                        reason: format!("`{name}` names no module on the labeled slice"),
                    })?
            }
        });
    }
    Ok((verts, labeling))
}

fn parse_target(arg: &str) -> ObjectLabel {
    match parse_vertex(arg) {
        Ok(v) => ObjectLabel::Coord(v),
        Err(_) => ObjectLabel::Name(arg.to_string()),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Cmd::Algebra { cmd } => match cmd {
            AlgebraCmd::Info { file } => algebra_info(&file, cli.format),
        },
        Cmd::Module { cmd } => match cmd {
            ModuleCmd::Tau { file, module } => module_tau(&file, &module, cli.format),
            ModuleCmd::ArSeq { file, module } => module_ar_seq(&file, &module, cli.format),
            ModuleCmd::ArQuiver { file, dot } => {
                let format = if dot { Format::Dot } else { cli.format };
                module_ar_quiver(&file, format, cli.cap)
            }
        },
        Cmd::Mesh { cmd } => match cmd {
            MeshCmd::Build { n, window } => mesh_build(n, &window, cli.format),
            MeshCmd::Hom { v1, v2, n, window } => mesh_hom(&v1, &v2, n, &window, cli.format),
            MeshCmd::Serre { v, n, window } => mesh_serre(&v, n, &window, cli.format),
        },
        Cmd::Subcat { cmd } => match cmd {
            SubcatCmd::Cover {
                subfile,
                target,
                n,
                window,
            } => subcat_cover(&subfile, &target, n, &window, cli.format),
            SubcatCmd::Nu { subfile, n, window } => subcat_nu(&subfile, n, &window, cli.format),
            SubcatCmd::Diagnostics { subfile, n, window } => {
                subcat_diagnostics(&subfile, n, &window, cli.format)
            }
        },
        Cmd::Demo => demo(cli.format),
    }
}

fn refuse_dot(format: Format) -> Result<()> {
    if matches!(format, Format::Dot) {
        return Err(Error::Malformed {
            reason: "this command has no graph output; use --format text or json".into(),
        });
    }
    Ok(())
}

fn algebra_info(file: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let alg = load_algebra(file)?;
    let q = alg.quiver();
    let nv = q.vertex_count();
    let mut projectives = Vec::new();
    let mut injectives = Vec::new();
    for v in 0..nv {
        projectives.push(alg.projective(v)?);
        injectives.push(alg.injective(v)?);
    }
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "vertices": (0..nv).map(|v| q.vertex_label(v)).collect::<Vec<_>>(),
                "arrows": q.arrows().iter().map(|a| serde_json::json!({
                    "name": a.name,
                    "from": q.vertex_label(a.source),
                    "to": q.vertex_label(a.target),
                })).collect::<Vec<_>>(),
                "relation_count": alg.relations().len(),
                "dimension": alg.dim(),
                "projectives": projectives.iter().map(|p| serde_json::json!({
                    "name": alg.module_name(p), "dims": p.dims(),
                })).collect::<Vec<_>>(),
                "injectives": injectives.iter().map(|i| serde_json::json!({
                    "name": alg.module_name(i), "dims": i.dims(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => {
            let labels: Vec<&str> = (0..nv).map(|v| q.vertex_label(v)).collect();
            println!("vertices ({nv}): {}", labels.join(" "));
            let arrows: Vec<String> = q
                .arrows()
                .iter()
                .map(|a| {
                    format!(
                        "{}: {} -> {}",
                        a.name,
                        q.vertex_label(a.source),
                        q.vertex_label(a.target)
                    )
                })
                .collect();
            println!("arrows ({}): {}", arrows.len(), arrows.join("; "));
            println!("relations: {}", alg.relations().len());
            println!("dimension: {}", alg.dim());
            for v in 0..nv {
                println!(
                    "P({}) = {}  dims {:?}",
                    q.vertex_label(v),
                    alg.module_name(&projectives[v]),
                    projectives[v].dims()
                );
            }
            for v in 0..nv {
                println!(
                    "I({}) = {}  dims {:?}",
                    q.vertex_label(v),
                    alg.module_name(&injectives[v]),
                    injectives[v].dims()
                );
            }
        }
    }
    Ok(())
}

fn module_tau(file: &str, module: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let alg = load_algebra(file)?;
    let m = resolve_module(&alg, module)?;
    let t = tau(&alg, &m)?;
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "input": display_name(&alg, &m),
                "tau": display_name(&alg, &t),
                "dims": t.dims(),
                "module": representation_to_json(&alg, &t),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => println!(
            "tau({}) = {}  dims {:?}",
            display_name(&alg, &m),
            display_name(&alg, &t),
            t.dims()
        ),
    }
    Ok(())
}

fn module_ar_seq(file: &str, module: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let alg = load_algebra(file)?;
    let m = resolve_module(&alg, module)?;
    let seq = ar_sequence(&alg, &m)?;
    let middle = decompose(&alg, &seq.middle)?;
    let middle_names: Vec<String> = middle
        .summands
        .iter()
        .map(|s| display_name(&alg, s))
        .collect();
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "left": display_name(&alg, &seq.left),
                "middle": middle_names,
                "right": display_name(&alg, &seq.right),
                "dims": {
                    "left": seq.left.dims(),
                    "middle": seq.middle.dims(),
                    "right": seq.right.dims(),
                },
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => println!(
            "0 -> {} -> {} -> {} -> 0",
            display_name(&alg, &seq.left),
            middle_names.join(" + "),
            display_name(&alg, &seq.right)
        ),
    }
    Ok(())
}

fn module_ar_quiver(file: &str, format: Format, cap: Option<usize>) -> Result<()> {
    let alg = load_algebra(file)?;
    let ar = ar_quiver(&alg, cap.unwrap_or_else(default_dimension_cap))?;
    match format {
        Format::Dot => println!("{}", ar.to_dot()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&ar.to_json()).expect("serializable")
        ),
        Format::Text => {
            println!("indecomposables: {}", ar.modules.len());
            for (k, name) in ar.names.iter().enumerate() {
                println!("  {k}: {}  dims {:?}", name, ar.modules[k].dims());
            }
            println!("arrows:");
            for &(s, t, mult) in &ar.arrows {
                let times = if mult > 1 {
                    format!("  x{mult}")
                } else {
                    String::new()
                };
                println!("  {} -> {}{times}", ar.names[s], ar.names[t]);
            }
            println!("translation:");
            for (k, t) in ar.translation.iter().enumerate() {
                if let Some(t) = t {
                    println!("  tau({}) = {}", ar.names[k], ar.names[*t]);
                }
            }
        }
    }
    Ok(())
}

fn mesh_build(n: usize, window: &str, format: Format) -> Result<()> {
    let mc = mesh_context(n, window)?;
    match format {
        Format::Dot => println!("{}", mc.to_dot(None)),
        Format::Json => {
            let doc = serde_json::json!({
                "n": mc.n(),
                "window": [mc.window().0, mc.window().1],
                "usable": [mc.usable_range().0, mc.usable_range().1],
                "vertex_count": mc.usable_vertices().len(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            let (lo, hi) = mc.usable_range();
            println!(
                "mesh A_{} on window [{}, {}]; usable i in [{lo}, {hi}]; {} usable vertices",
                mc.n(),
                mc.window().0,
                mc.window().1,
                mc.usable_vertices().len()
            );
        }
    }
    Ok(())
}

fn mesh_hom(v1: &str, v2: &str, n: usize, window: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let mc = mesh_context(n, window)?;
    let x = parse_vertex(v1)?;
    let y = parse_vertex(v2)?;
    let d = mc.hom_dim(x, y)?;
    match format {
        Format::Json => println!("{}", serde_json::json!({ "dim": d })),
        _ => println!("dim hom({x}, {y}) = {d}"),
    }
    Ok(())
}

fn mesh_serre(v: &str, n: usize, window: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let mc = mesh_context(n, window)?;
    let x = parse_vertex(v)?;
    let s = mc.serre(x)?;
    match format {
        Format::Json => println!("{}", serde_json::json!({ "serre": [s.i, s.j] })),
        _ => println!("S{x} = {s}"),
    }
    Ok(())
}

/// Shared setup for the subcat commands: mesh, resolved generators,
/// engine labeling.
struct SubcatContext {
    mc: MeshCategory,
    verts: Vec<MeshVertex>,
    labeling: Option<SliceLabeling>,
}

fn subcat_context(subfile: &str, extra: Option<&str>, n: usize, window: &str) -> Result<SubcatContext> {
    let mut entries = labels_from_json(&read_file(subfile)?)?;
    if let Some(t) = extra {
        entries.push(parse_target(t));
    }
    let mc = mesh_context(n, window)?;
    let (mut verts, labeling) = resolve_entries(&mc, &entries)?;
    if extra.is_some() {
        verts.pop();
    }
    Ok(SubcatContext { mc, verts, labeling })
}

fn subcat_cover(subfile: &str, target: &str, n: usize, window: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let ctx = subcat_context(subfile, Some(target), n, window)?;
    let engine = match &ctx.labeling {
        Some(l) => MeshEngine::with_labels(&ctx.mc, l),
        None => MeshEngine::new(&ctx.mc),
    };
    let (tv, _) = resolve_entries(&ctx.mc, &[parse_target(target)]).map(|(v, _)| (v[0], ()))?;
    let sub = subcategory(&engine, ctx.verts.clone())?;
    let cover = minimize(&engine, &sub, &precover(&engine, &sub, tv)?)?;
    let strong = is_strong_cover(&engine, &sub, &cover)?;
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "target": engine.label(tv),
                "summands": cover.summands.iter().map(|&v| engine.label(v)).collect::<Vec<_>>(),
                "strong": strong,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => {
            let src = if cover.summands.is_empty() {
                "0".to_string()
            } else {
                cover
                    .summands
                    .iter()
                    .map(|&v| engine.label(v))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            println!("cover of {}: source {src}; strong: {strong}", engine.label(tv));
        }
    }
    Ok(())
}

fn subcat_nu(subfile: &str, n: usize, window: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let ctx = subcat_context(subfile, None, n, window)?;
    let engine = match &ctx.labeling {
        Some(l) => MeshEngine::with_labels(&ctx.mc, l),
        None => MeshEngine::new(&ctx.mc),
    };
    let sub = subcategory(&engine, ctx.verts.clone())?;
    let table = nu_via_approx(&engine, &sub)?;
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "nu": table.projectives.iter().zip(&table.images).map(|(&p, imgs)| {
                    serde_json::json!({
                        "projective": engine.label(p),
                        "image": imgs.iter().map(|&v| engine.label(v)).collect::<Vec<_>>(),
                    })
                }).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => {
            for (k, &p) in table.projectives.iter().enumerate() {
                let image: Vec<String> =
                    table.images[k].iter().map(|&v| engine.label(v)).collect();
                println!("nu({}) = {}", engine.label(p), image.join(" + "));
            }
        }
    }
    Ok(())
}

fn subcat_diagnostics(subfile: &str, n: usize, window: &str, format: Format) -> Result<()> {
    refuse_dot(format)?;
    let ctx = subcat_context(subfile, None, n, window)?;
    let engine = match &ctx.labeling {
        Some(l) => MeshEngine::with_labels(&ctx.mc, l),
        None => MeshEngine::new(&ctx.mc),
    };
    let sub = subcategory(&engine, ctx.verts.clone())?;
    let report = proper_diagnostics(&engine, &sub)?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json(&engine)).expect("serializable")
        ),
        _ => print!("{}", report.render(&engine)),
    }
    Ok(())
}

fn demo(format: Format) -> Result<()> {
    refuse_dot(format)?;
    let mc = build_mesh(3, (-6, 6))?;
    let a3 = BoundQuiverAlgebra::path_algebra(linear_an(3))?;
    let labels = label_slice(&mc, &a3)?;
    let engine = MeshEngine::with_labels(&mc, &labels);

    let at = |name: &str| -> MeshVertex {
        let k = labels
            .names
            .iter()
            .position(|n| n == name)
            .expect("slice module");
        labels.vertices[k]
    };
    let (one, p21, s2) = (at("1"), at("2/1"), at("2"));
    let sub = subcategory(&engine, vec![one, p21, s2])?;

    // the strong cover of the Serre image of the small projective
    let s1 = mc.serre(one)?;
    let cover = minimize(&engine, &sub, &precover(&engine, &sub, s1)?)?;
    let strong = is_strong_cover(&engine, &sub, &cover)?;
    let cover_src: Vec<String> = cover.summands.iter().map(|&v| engine.label(v)).collect();

    // the correspondence read off covers, against the classical functor
    // of the two-vertex algebra
    let table = nu_via_approx(&engine, &sub)?;
    let a2 = BoundQuiverAlgebra::path_algebra(linear_an(2))?;
    let mut nu_lines = Vec::new();
    let mut classical = Vec::new();
    let mut nu_agree = true;
    for (k, &p) in table.projectives.iter().enumerate() {
        let image: Vec<String> = table.images[k].iter().map(|&v| engine.label(v)).collect();
        nu_lines.push(format!("nu({}) = {}", engine.label(p), image.join(" + ")));
        // the generator labels double as kA2 module names
        let pm = a2.module_by_name(&engine.label(p))?;
        let ni = nakayama_of_projective(&a2, &pm)?;
        let classical_name = a2.module_name(&ni.rep);
        nu_agree &= image.len() == 1 && image[0] == classical_name;
        classical.push(format!(
            "N(P = {}) = {}",
            engine.label(p),
            classical_name
        ));
    }

    // the translate, classically and as a cover
    let real = Realization::new(
        &mc,
        &a2,
        vec![
            (a2.module_by_name("1")?, one),
            (a2.module_by_name("2/1")?, p21),
            (a2.module_by_name("2")?, s2),
        ],
    )?;
    let (translate, tcover, tau_agree) =
        arcat::approx::tau_as_cover(&mc, &sub, &real, s2)?;
    let tcover_src: Vec<String> = tcover.summands.iter().map(|&v| engine.label(v)).collect();

    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "mesh": { "n": 3, "window": [-6, 6] },
                "slice": labels.names.iter().zip(&labels.vertices)
                    .map(|(n, v)| serde_json::json!({ "name": n, "vertex": [v.i, v.j] }))
                    .collect::<Vec<_>>(),
                "subcategory": ["1", "2/1", "2"],
                "serre_of_1": engine.label(s1),
                "cover_of_serre_1": { "source": cover_src, "strong": strong },
                "nu": table.projectives.iter().zip(&table.images).map(|(&p, imgs)| {
                    serde_json::json!({
                        "projective": engine.label(p),
                        "image": imgs.iter().map(|&v| engine.label(v)).collect::<Vec<_>>(),
                    })
                }).collect::<Vec<_>>(),
                "classical_agreement": nu_agree,
                "tau_of_2": a2.module_name(&translate),
                "tau_cover_source": tcover_src,
                "tau_agreement": tau_agree,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => {
            println!("mesh: A_3 on window [-6, 6]");
            let mut slice: Vec<(MeshVertex, &String)> = labels
                .vertices
                .iter()
                .copied()
                .zip(labels.names.iter())
                .collect();
            slice.sort_by_key(|&(v, _)| (v.i, v.j));
            let slice_line: Vec<String> = slice
                .iter()
                .map(|(v, n)| format!("{n} = {v}"))
                .collect();
            println!("slice: {}", slice_line.join(", "));
            println!("subcategory: add{{1, 2/1, 2}}");
            println!("S(1) = {} = {}", s1, engine.label(s1));
            println!(
                "cover of {}: source {}; strong: {strong}",
                engine.label(s1),
                cover_src.join(" + ")
            );
            for line in &nu_lines {
                println!("{line}");
            }
            println!(
                "classical functor of the embedded algebra: {}; agreement: {nu_agree}",
                classical.join(", ")
            );
            println!(
                "tau(2) = {} classically; cover source {}; agreement: {tau_agree}",
                a2.module_name(&translate),
                tcover_src.join(" + ")
            );
        }
    }
    Ok(())
}
