//! Command-line front end: load permutation groups from JSON files, run the
//! coset-graph and map constructions, export graphs and maps, and run the
//! named verification suites.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 on
//! validation errors (with a machine-readable error JSON on stdout).

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rotamap::catalog;
use rotamap::cosetgraph::{base_graph, build_coset_graph, mu_extenders, CosetGraph};
use rotamap::exec::Mode;
use rotamap::export::{cycle_json, graph_dot, graph_json, map_json, GroupFile};
use rotamap::group::{Group, DEFAULT_CAP};
use rotamap::maps::{
    biro_map, classify_vertex_rotary, reg_map, rota_map, validate_flag_regular_triple, CombMap,
};
use rotamap::perm::Perm;
use rotamap::rotary::validate_rotary_pair;
use rotamap::verify;

#[derive(Parser)]
#[command(
    name = "rotamap",
    version,
    about = "Arc-transitive coset graphs and their vertex-rotary map embeddings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct GroupInput {
    /// Group file (JSON); read from stdin when omitted or "-"
    #[arg(long = "group")]
    group: Option<PathBuf>,
    /// Element-count cap for closures (ROTAMAP_CAP overrides the default)
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct TripleSelect {
    /// Generator names for the vertex stabiliser H, comma-separated
    #[arg(long = "H", value_delimiter = ',', required = true)]
    h: Vec<String>,
    /// Generator names for the edge stabiliser J, comma-separated
    #[arg(long = "J", value_delimiter = ',', required = true)]
    j: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapChoice {
    Rotamap,
    Biromap,
    Regmap,
}

#[derive(Subcommand)]
enum Command {
    /// Build the coset graph Cos(G,H,J) and report its parameters
    BuildGraph {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        select: TripleSelect,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the simple base graph Cos(G,H,L)
    BaseGraph {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        select: TripleSelect,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate the arc-transitive extenders obtained by shrinking J
    Extenders {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        select: TripleSelect,
    },
    /// Build the rotary map of a pair a,z
    Rotamap {
        #[command(flatten)]
        input: GroupInput,
        /// Names of the pair elements, e.g. a,z
        #[arg(long, value_delimiter = ',', required = true)]
        pair: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the bi-rotary map of a pair a,z
    Biromap {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, value_delimiter = ',', required = true)]
        pair: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the flag-regular map of a triple x,y,z
    Regmap {
        #[command(flatten)]
        input: GroupInput,
        /// Names of the triple elements, e.g. x,y,z
        #[arg(long, value_delimiter = ',', required = true)]
        triple: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify a constructed map against a rotary pair
    Classify {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, value_delimiter = ',', required = true)]
        pair: Vec<String>,
        /// Which construction to classify
        #[arg(long = "map", value_enum, default_value = "rotamap")]
        map: MapChoice,
        /// Triple names, required with --map regmap
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<String>>,
    },
    /// Surface certificate, Euler characteristic, orientability, kernels
    Check {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long = "map", value_enum, default_value = "rotamap")]
        map: MapChoice,
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<String>>,
    },
    /// Emit a catalog entry as a group file
    Catalog {
        #[command(subcommand)]
        entry: CatalogCommand,
    },
    /// Run a named verification suite (all suites when omitted)
    Verify {
        /// Suite name; see --list
        suite: Option<String>,
        /// List available suites
        #[arg(long)]
        list: bool,
        /// Run suite items sequentially instead of in parallel
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Petersen-graph form over the alternating group
    PetersenA5,
    /// Petersen-graph form over the symmetric group
    PetersenS5,
    /// Hypercube family with groups A, X, Y
    Hypercube {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: usize,
    },
    /// Complete-bipartite family
    Knn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: usize,
    },
    /// The triple cover of A6 with its two rotary pairs
    ThreeA6,
    /// S3 x Z_lambda with a non-trivial core
    CoreExample {
        #[arg(long)]
        lambda: usize,
    },
}

struct AppError {
    kind: &'static str,
    message: String,
}

impl AppError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        AppError {
            kind,
            message: message.into(),
        }
    }
}

macro_rules! impl_from_error {
    ($ty:ty, $kind_fn:expr) => {
        impl From<$ty> for AppError {
            fn from(e: $ty) -> Self {
                AppError {
                    kind: $kind_fn(&e),
                    message: e.to_string(),
                }
            }
        }
    };
}

impl_from_error!(rotamap::GroupError, |e: &rotamap::GroupError| match e {
    rotamap::GroupError::CapExceeded { .. } => "CapExceeded",
    rotamap::GroupError::NotASubgroup => "NotASubgroup",
    _ => "GroupError",
});
impl_from_error!(rotamap::GraphError, |e: &rotamap::GraphError| match e {
    rotamap::GraphError::BadIndex { .. } => "BadIndex",
    rotamap::GraphError::HEqualsG => "HEqualsG",
    rotamap::GraphError::GInH => "GInH",
    rotamap::GraphError::NotArcTransitive => "NotArcTransitive",
    rotamap::GraphError::SearchCapExceeded { .. } => "SearchCapExceeded",
    rotamap::GraphError::Group(rotamap::GroupError::CapExceeded { .. }) => "CapExceeded",
    _ => "GraphError",
});
impl_from_error!(rotamap::RotaryError, |e: &rotamap::RotaryError| match e {
    rotamap::RotaryError::ZNotInvolution => "ZNotInvolution",
    rotamap::RotaryError::ZInsideA => "ZInsideA",
    rotamap::RotaryError::DegenerateGraph => "DegenerateGraph",
    _ => "RotaryError",
});
impl_from_error!(rotamap::TripleError, |_: &rotamap::TripleError| {
    "InvalidTriple"
});
impl_from_error!(rotamap::MapError, |e: &rotamap::MapError| match e {
    rotamap::MapError::DegenerateGraph
    | rotamap::MapError::Rotary(rotamap::RotaryError::DegenerateGraph) => "DegenerateGraph",
    rotamap::MapError::FewFaces => "FewFaces",
    rotamap::MapError::NotASurface(_) => "NotASurface",
    rotamap::MapError::LabelMismatch => "LabelMismatch",
    rotamap::MapError::InconsistentAction => "InconsistentAction",
    _ => "MapError",
});
impl_from_error!(rotamap::CatalogError, |e: &rotamap::CatalogError| match e {
    rotamap::CatalogError::BadParams(_) => "BadParams",
    rotamap::CatalogError::IllDefined(_) => "IllDefined",
    _ => "CatalogError",
});
impl_from_error!(serde_json::Error, |_: &serde_json::Error| "ParseError");
impl_from_error!(std::io::Error, |_: &std::io::Error| "IoError");

fn cap_from(input: &GroupInput) -> usize {
    input
        .cap
        .or_else(|| {
            std::env::var("ROTAMAP_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_CAP)
}

struct LoadedGroup {
    group: Group,
    named: BTreeMap<String, Perm>,
}

fn load_group(input: &GroupInput) -> Result<LoadedGroup, AppError> {
    let text = match &input.group {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let file = GroupFile::parse(&text)?;
    let named = file.named_perms()?;
    let gens: Vec<Perm> = named.values().cloned().collect();
    let group = Group::generated_with_cap(file.degree, &gens, cap_from(input))?;
    Ok(LoadedGroup { group, named })
}

fn pick<'a>(loaded: &'a LoadedGroup, name: &str) -> Result<&'a Perm, AppError> {
    loaded.named.get(name).ok_or_else(|| {
        AppError::new(
            "UnknownName",
            format!("no element named '{name}' in the group file"),
        )
    })
}

fn subgroup_from(loaded: &LoadedGroup, names: &[String], cap: usize) -> Result<Group, AppError> {
    let gens: Vec<Perm> = names
        .iter()
        .map(|n| pick(loaded, n).cloned())
        .collect::<Result<_, _>>()?;
    Ok(Group::generated_with_cap(
        loaded.group.degree(),
        &gens,
        cap,
    )?)
}

fn pair_names(names: &[String]) -> Result<(&str, &str), AppError> {
    match names {
        [a, z] => Ok((a, z)),
        _ => Err(AppError::new(
            "ParseError",
            "--pair expects exactly two names, e.g. a,z",
        )),
    }
}

fn triple_names(names: &[String]) -> Result<(&str, &str, &str), AppError> {
    match names {
        [x, y, z] => Ok((x, y, z)),
        _ => Err(AppError::new(
            "ParseError",
            "--triple expects exactly three names, e.g. x,y,z",
        )),
    }
}

fn graph_payload(cg: &CosetGraph) -> serde_json::Value {
    let g = &cg.graph;
    let order = cg.ambient.order();
    let h_order = cg.vspace.subgroup().order();
    let j_order = cg.espace.subgroup().order();
    json!({
        "graph": graph_json(g),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "k": cg.params.k,
        "lambda": cg.params.lambda,
        "connected": cg.params.connected,
        "cross_checks": {
            "vertices_times_h_order": g.vertex_count() * h_order == order,
            "edges_times_j_order": g.edge_count() * j_order == order,
            "incidences_per_vertex_is_k_lambda": (0..g.vertex_count())
                .all(|v| g.incident_edges(v).len() == cg.params.k * cg.params.lambda),
            "counted_regularity_matches": g.regularity() == Some((cg.params.k, cg.params.lambda)),
        },
    })
}

fn emit_graph(cg: &CosetGraph, format: Format, name: &str) -> Result<(), AppError> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&graph_payload(cg))?),
        Format::Dot => print!("{}", graph_dot(&cg.graph, name)),
    }
    Ok(())
}

fn emit_map(map: &CombMap, format: Format, name: &str) -> Result<(), AppError> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&map_json(map)?)?),
        Format::Dot => print!("{}", graph_dot(map.graph(), name)),
    }
    Ok(())
}

fn build_map(
    loaded: &LoadedGroup,
    choice: MapChoice,
    pair: Option<&[String]>,
    triple: Option<&[String]>,
) -> Result<CombMap, AppError> {
    match choice {
        MapChoice::Rotamap | MapChoice::Biromap => {
            let names = pair.ok_or_else(|| {
                AppError::new("ParseError", "--pair is required for this construction")
            })?;
            let (a, z) = pair_names(names)?;
            let rp = validate_rotary_pair(pick(loaded, a)?, pick(loaded, z)?)?;
            Ok(match choice {
                MapChoice::Rotamap => rota_map(&rp)?,
                _ => biro_map(&rp)?,
            })
        }
        MapChoice::Regmap => {
            let names = triple
                .ok_or_else(|| AppError::new("ParseError", "--triple is required for regmap"))?;
            let (x, y, z) = triple_names(names)?;
            let t =
                validate_flag_regular_triple(pick(loaded, x)?, pick(loaded, y)?, pick(loaded, z)?)?;
            Ok(reg_map(&t)?)
        }
    }
}

fn run(cli: Cli) -> Result<u8, AppError> {
    match cli.command {
        Command::BuildGraph {
            input,
            select,
            format,
        } => {
            let cap = cap_from(&input);
            let loaded = load_group(&input)?;
            let h = subgroup_from(&loaded, &select.h, cap)?;
            let j = subgroup_from(&loaded, &select.j, cap)?;
            let cg = build_coset_graph(&loaded.group, &h, &j)?;
            emit_graph(&cg, format, "coset-graph")?;
        }
        Command::BaseGraph {
            input,
            select,
            format,
        } => {
            let cap = cap_from(&input);
            let loaded = load_group(&input)?;
            let h = subgroup_from(&loaded, &select.h, cap)?;
            let j = subgroup_from(&loaded, &select.j, cap)?;
            let cg = base_graph(&loaded.group, &h, &j)?;
            emit_graph(&cg, format, "base-graph")?;
        }
        Command::Extenders { input, select } => {
            let cap = cap_from(&input);
            let loaded = load_group(&input)?;
            let h = subgroup_from(&loaded, &select.h, cap)?;
            let j = subgroup_from(&loaded, &select.j, cap)?;
            let exts = mu_extenders(&loaded.group, &h, &j)?;
            let items: Vec<serde_json::Value> = exts
                .iter()
                .map(|(sub, mu)| {
                    let cg = build_coset_graph(&loaded.group, &h, sub)?;
                    Ok(json!({
                        "mu": mu,
                        "subgroup_order": sub.order(),
                        "generators": sub
                            .generators()
                            .iter()
                            .map(|p| p.cycle_string())
                            .collect::<Vec<_>>(),
                        "vertices": cg.graph.vertex_count(),
                        "edges": cg.graph.edge_count(),
                        "lambda": cg.params.lambda,
                    }))
                })
                .collect::<Result<_, AppError>>()?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "extenders": items }))?
            );
        }
        Command::Rotamap {
            input,
            pair,
            format,
        } => {
            let loaded = load_group(&input)?;
            let map = build_map(&loaded, MapChoice::Rotamap, Some(&pair), None)?;
            emit_map(&map, format, "rotamap")?;
        }
        Command::Biromap {
            input,
            pair,
            format,
        } => {
            let loaded = load_group(&input)?;
            let map = build_map(&loaded, MapChoice::Biromap, Some(&pair), None)?;
            emit_map(&map, format, "biromap")?;
        }
        Command::Regmap {
            input,
            triple,
            format,
        } => {
            let loaded = load_group(&input)?;
            let map = build_map(&loaded, MapChoice::Regmap, None, Some(&triple))?;
            emit_map(&map, format, "regmap")?;
        }
        Command::Classify {
            input,
            pair,
            map,
            triple,
        } => {
            let loaded = load_group(&input)?;
            let built = build_map(&loaded, map, Some(&pair), triple.as_deref())?;
            let (a, z) = pair_names(&pair)?;
            let rp = validate_rotary_pair(pick(&loaded, a)?, pick(&loaded, z)?)?;
            let kind = classify_vertex_rotary(&built, &rp)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "kind": format!("{kind:?}"),
                    "type_label": kind.type_label(),
                    "construction": built.meta.kind_name(),
                }))?
            );
        }
        Command::Check {
            input,
            map,
            pair,
            triple,
        } => {
            let loaded = load_group(&input)?;
            let built = build_map(&loaded, map, pair.as_deref(), triple.as_deref())?;
            let (chi, flags) = built.surface_check()?;
            let orientable = built.orientability()?;
            let (gv, gvf, circular) = built.map_kernels()?;
            let base = &built.faces[0].boundary;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "vertices": built.graph().vertex_count(),
                    "edges": built.graph().edge_count(),
                    "faces": built.face_count(),
                    "face_length": built.face_length(),
                    "chi": chi,
                    "flags": flags,
                    "orientable": orientable,
                    "circular": circular,
                    "vertex_kernel_order": gv.order(),
                    "vertex_face_kernel_order": gvf.order(),
                    "base_boundary": cycle_json(base, built.graph()),
                    "cross_checks": {
                        "flags_equal_four_edges": flags == 4 * built.graph().edge_count(),
                        "chi_formula": chi == built.graph().vertex_count() as i64
                            - built.graph().edge_count() as i64
                            + built.face_count() as i64,
                    },
                }))?
            );
        }
        Command::Catalog { entry } => {
            let entry = match entry {
                CatalogCommand::PetersenA5 => catalog::petersen(catalog::PetersenVariant::A5)?,
                CatalogCommand::PetersenS5 => catalog::petersen(catalog::PetersenVariant::S5)?,
                CatalogCommand::Hypercube { n, lambda } => catalog::hypercube(n, lambda)?,
                CatalogCommand::Knn { n, lambda } => catalog::knn(n, lambda)?,
                CatalogCommand::ThreeA6 => catalog::three_a6()?,
                CatalogCommand::CoreExample { lambda } => catalog::core_example(lambda)?,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&GroupFile::from_entry(&entry))?
            );
        }
        Command::Verify {
            suite,
            list,
            sequential,
        } => {
            if list {
                for name in verify::SUITES {
                    println!("{name}");
                }
                return Ok(0);
            }
            let mode = if sequential {
                Mode::Sequential
            } else {
                Mode::Parallel
            };
            let reports = match suite {
                Some(name) => vec![verify::run_suite(&name, mode).ok_or_else(|| {
                    AppError::new("UnknownName", format!("no suite named '{name}'"))
                })?],
                None => verify::run_all(mode),
            };
            let mut all_pass = true;
            for report in &reports {
                print!("{}", report.render());
                all_pass &= report.passed();
            }
            if !all_pass {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            println!(
                "{}",
                serde_json::json!({
                    "error": { "kind": e.kind, "message": e.message }
                })
            );
            ExitCode::from(2)
        }
    }
}
