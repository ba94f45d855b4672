//! Command-line front end: solving, brute-force reference answers, gadget
//! generation, decomposition utilities, and corpus benchmarks.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 resource refusal.
//! All machine-readable output is byte-stable across reruns: timings go to
//! stderr and the `elapsed_ms` field is pinned to zero in artifacts.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lbcut::decomp::{
    heuristic_decomposition, parse_td, validate_decomposition, write_td, TreeDecomposition,
};
use lbcut::dp::{solve_mlbmc, SolveOptions, Solution, DEFAULT_LEAF_CAP, DEFAULT_TABLE_CAP};
use lbcut::hardgen::{
    and_compose, butte_graph, butte_path_decomposition, highland_graph,
    highland_path_decomposition, random_multicolor_instance, reduce_clique_to_mlbc,
    reduction_path_decomposition, ridge_set_for_clique,
};
use lbcut::instance::{
    load_graph_file, load_instance_file, read_text, save_graph_file, save_instance_file,
    verify_cut, write_text, CutInstance,
};
use lbcut::oracle::{brute_force_mlbmc, find_multicolor_clique, DEFAULT_ORACLE_CAP};
use lbcut::{Edge, Error, Graph, Result, VertexId};

#[derive(Parser)]
#[command(name = "lbcut", version, about = "Exact length-bounded cut toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum cut forcing dist(s, t) > L, by dynamic programming.
    Solve(SolveArgs),
    /// Minimum cut meeting per-pair distance bounds from an instance file.
    Multicut(MulticutArgs),
    /// Brute-force reference answer (small graphs only).
    Oracle(OracleArgs),
    /// Instance and gadget generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Tree decomposition utilities.
    #[command(subcommand)]
    Td(TdCommand),
    /// Check a decomposition or a cut witness.
    Validate(ValidateArgs),
    /// Solve every instance in a corpus directory and tabulate.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolverKnobs {
    /// Cap on projected table entries per node.
    #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
    table_cap: u128,
    /// Cap on edges owned by a single leaf.
    #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
    leaf_cap: usize,
    /// Worker threads (output is identical for any value).
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl SolverKnobs {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            table_cap: self.table_cap,
            leaf_cap: self.leaf_cap,
            threads: self.threads,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Graph in .gr format.
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 's', long = "source")]
    s: VertexId,
    #[arg(short = 't', long = "sink")]
    t: VertexId,
    /// Paths of at most this many edges are cut.
    #[arg(short = 'L', long = "limit")]
    l: u32,
    /// Tree decomposition to use instead of the built-in heuristic.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Re-verify the cut by breadth-first search before printing.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result JSON here as well.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    knobs: SolverKnobs,
}

#[derive(Args)]
struct MulticutArgs {
    /// Instance JSON (terminals, per-pair bounds, graph file reference).
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    td: Option<PathBuf>,
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    knobs: SolverKnobs,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, conflicts_with = "instance")]
    graph: Option<PathBuf>,
    #[arg(short = 's', long = "source", requires = "graph")]
    s: Option<VertexId>,
    #[arg(short = 't', long = "sink", requires = "graph")]
    t: Option<VertexId>,
    #[arg(short = 'L', long = "limit", requires = "graph")]
    l: Option<u32>,
    /// Instance JSON instead of --graph/-s/-t/-L.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Refuse graphs with more edges than this.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Single butte: h shortcuts, q ridgeways, terminals 1 and 2.
    Butte {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value = "butte")]
        name: String,
        /// Also write the width-3 path decomposition.
        #[arg(long)]
        td: bool,
    },
    /// Highland: x low buttes and the given high-butte heights.
    Highland {
        #[arg(long)]
        x: usize,
        /// Comma-separated heights, each in [x^4, x^4 + x - 1].
        #[arg(long, value_delimiter = ',', required = true)]
        heights: Vec<usize>,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value = "highland")]
        name: String,
        #[arg(long)]
        td: bool,
    },
    /// Clique-encoding cut instance from a random multicolor instance.
    Reduction {
        /// Colors.
        #[arg(long)]
        k: usize,
        /// Vertices per color class.
        #[arg(long)]
        n: usize,
        /// Cross edges per color pair.
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Force a clique, and write its ridge set as a cut witness.
        #[arg(long)]
        plant: bool,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value = "reduction")]
        name: String,
        #[arg(long)]
        td: bool,
    },
    /// Glue two-terminal instances: sources to 1, sinks to 2.
    Compose {
        /// Graph file, optionally with terminals, as path[:s:t] (default 1:2).
        #[arg(long, required = true)]
        part: Vec<String>,
        /// Length bound stored in the emitted instance.
        #[arg(short = 'L', long = "limit")]
        l: u32,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value = "composed")]
        name: String,
    },
    /// Random multicolor clique instance as JSON.
    Mcc {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        plant: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum TdCommand {
    /// Min-degree heuristic decomposition of a graph.
    Compute {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a decomposition against its graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
}

#[derive(Args)]
struct ValidateArgs {
    /// Graph whose decomposition is being checked (with --td).
    #[arg(long, requires = "td")]
    graph: Option<PathBuf>,
    #[arg(long)]
    td: Option<PathBuf>,
    /// Instance whose cut witness is being checked (with --cut).
    #[arg(long, requires = "cut")]
    instance: Option<PathBuf>,
    /// Cut JSON: {"edges": [[u, v], ...]} or a result file with "cut".
    #[arg(long)]
    cut: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory of instance JSON files.
    #[arg(long)]
    corpus: PathBuf,
    /// Skip the oracle column beyond this many edges.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Write the machine-readable report here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    knobs: SolverKnobs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Multicut(args) => cmd_multicut(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Td(args) => cmd_td(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn edge_list_json(cut: &[Edge]) -> Value {
    Value::Array(cut.iter().map(|e| json!([e.u, e.v])).collect())
}

/// `elapsed_ms` is pinned to zero so reruns produce identical bytes; the
/// real timing goes to stderr.
fn solution_json(sol: &Solution, checked: Option<bool>) -> Value {
    let mut obj = json!({
        "size": sol.size,
        "cut": edge_list_json(&sol.cut),
        "root_vector": {
            "support": sol.root_vector.support(),
            "lim": sol.root_vector.lim(),
            "entries": sol.root_vector.entries(),
        },
        "stats": {
            "nodes": sol.stats.nodes,
            "table_entries": sol.stats.table_entries,
            "elapsed_ms": 0,
            "width": sol.stats.width,
        },
    });
    if let Some(ok) = checked {
        obj["check"] = Value::Bool(ok);
    }
    obj
}

fn print_json(value: &Value, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("json");
    text.push('\n');
    if let Some(path) = out {
        write_text(path, &text)?;
    }
    print!("{text}");
    Ok(())
}

fn report_solution(
    sol: &Solution,
    inst: &CutInstance,
    check: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<()> {
    let checked = if check {
        Some(verify_cut(inst, &sol.cut)?)
    } else {
        None
    };
    if checked == Some(false) {
        return Err(Error::structural("returned cut fails re-verification"));
    }
    eprintln!(
        "solved in {} ms ({} nodes, {} table entries)",
        sol.stats.elapsed_ms, sol.stats.nodes, sol.stats.table_entries
    );
    let value = solution_json(sol, checked);
    match format {
        Format::Json => print_json(&value, out)?,
        Format::Text => {
            if let Some(path) = out {
                let mut text = serde_json::to_string_pretty(&value).expect("json");
                text.push('\n');
                write_text(path, &text)?;
            }
            println!("size: {}", sol.size);
            let edges: Vec<String> = sol.cut.iter().map(|e| format!("({},{})", e.u, e.v)).collect();
            println!("cut: {}", edges.join(" "));
            println!(
                "nodes: {}  table entries: {}  width: {}",
                sol.stats.nodes, sol.stats.table_entries, sol.stats.width
            );
            if let Some(ok) = checked {
                println!("check: {}", if ok { "ok" } else { "FAILED" });
            }
        }
    }
    Ok(())
}

fn load_td_arg(td: &Option<PathBuf>) -> Result<Option<TreeDecomposition>> {
    match td {
        None => Ok(None),
        Some(path) => Ok(Some(parse_td(&read_text(path)?)?)),
    }
}

fn cmd_solve(args: SolveArgs) -> Result<()> {
    let graph = load_graph_file(&args.graph)?;
    let inst = CutInstance::single_pair(graph, args.s, args.t, args.l)?;
    let td = load_td_arg(&args.td)?;
    let sol = solve_mlbmc(&inst, td.as_ref(), &args.knobs.options())?;
    report_solution(&sol, &inst, args.check, args.format, args.out.as_deref())
}

fn cmd_multicut(args: MulticutArgs) -> Result<()> {
    let inst = load_instance_file(&args.instance)?;
    let td = load_td_arg(&args.td)?;
    let sol = solve_mlbmc(&inst, td.as_ref(), &args.knobs.options())?;
    report_solution(&sol, &inst, args.check, args.format, args.out.as_deref())
}

fn cmd_oracle(args: OracleArgs) -> Result<()> {
    let inst = match (&args.instance, &args.graph) {
        (Some(path), None) => load_instance_file(path)?,
        (None, Some(path)) => {
            let graph = load_graph_file(path)?;
            let (s, t, l) = match (args.s, args.t, args.l) {
                (Some(s), Some(t), Some(l)) => (s, t, l),
                _ => return Err(Error::argument("oracle needs -s, -t and -L with --graph")),
            };
            CutInstance::single_pair(graph, s, t, l)?
        }
        _ => return Err(Error::argument("oracle needs --graph or --instance")),
    };
    let (size, cut) = brute_force_mlbmc(&inst, args.cap)?;
    let value = json!({ "size": size, "cut": edge_list_json(&cut) });
    match args.format {
        Format::Json => print_json(&value, args.out.as_deref())?,
        Format::Text => {
            if let Some(path) = &args.out {
                let mut text = serde_json::to_string_pretty(&value).expect("json");
                text.push('\n');
                write_text(path, &text)?;
            }
            println!("size: {size}");
            let edges: Vec<String> = cut.iter().map(|e| format!("({},{})", e.u, e.v)).collect();
            println!("cut: {}", edges.join(" "));
        }
    }
    Ok(())
}

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn write_bundle(
    dir: &Path,
    name: &str,
    graph: &Graph,
    inst: &CutInstance,
    td: Option<&TreeDecomposition>,
) -> Result<()> {
    ensure_dir(dir)?;
    let graph_file = format!("{name}.gr");
    save_graph_file(&dir.join(&graph_file), graph)?;
    save_instance_file(&dir.join(format!("{name}.instance.json")), inst, &graph_file)?;
    if let Some(td) = td {
        let violations = validate_decomposition(graph, td);
        assert!(violations.is_empty(), "generated decomposition is valid");
        write_text(&dir.join(format!("{name}.td")), &write_td(td))?;
    }
    Ok(())
}

fn parse_part(spec: &str) -> Result<(PathBuf, VertexId, VertexId)> {
    let fields: Vec<&str> = spec.rsplitn(3, ':').collect();
    match fields.len() {
        3 => {
            let (t, s, path) = (fields[0], fields[1], fields[2]);
            let parse = |x: &str| {
                x.parse::<VertexId>()
                    .map_err(|_| Error::argument(format!("bad terminal '{x}' in part '{spec}'")))
            };
            Ok((PathBuf::from(path), parse(s)?, parse(t)?))
        }
        2 => Err(Error::argument(format!(
            "part '{spec}' needs both terminals: path or path:s:t"
        ))),
        _ => Ok((PathBuf::from(spec), 1, 2)),
    }
}

fn cmd_gen(command: GenCommand) -> Result<()> {
    match command {
        GenCommand::Butte {
            h,
            q,
            out_dir,
            name,
            td,
        } => {
            let (graph, butte) = butte_graph(h, q)?;
            // Every shortcut must lose an edge, so the optimum is h.
            let inst = CutInstance::single_pair(graph.clone(), 1, 2, h as u32 + 1)?;
            let decomposition = if td {
                Some(butte_path_decomposition(&graph, &butte)?)
            } else {
                None
            };
            write_bundle(&out_dir, &name, &graph, &inst, decomposition.as_ref())?;
            println!(
                "butte h={h} q={q}: {} vertices, {} edges, L={}",
                graph.n(),
                graph.m(),
                h + 1
            );
        }
        GenCommand::Highland {
            x,
            heights,
            out_dir,
            name,
            td,
        } => {
            let (graph, hl) = highland_graph(x, &heights)?;
            let l = (2 * hl.z() + x.pow(4) + x * x + x - 1) as u32;
            let inst = CutInstance::single_pair(graph.clone(), 1, 2, l)?;
            let decomposition = if td {
                Some(highland_path_decomposition(&graph, &hl)?)
            } else {
                None
            };
            write_bundle(&out_dir, &name, &graph, &inst, decomposition.as_ref())?;
            println!(
                "highland x={x} y={}: {} vertices, {} edges, L={l}",
                heights.len(),
                graph.n(),
                graph.m()
            );
        }
        GenCommand::Reduction {
            k,
            n,
            m,
            seed,
            plant,
            out_dir,
            name,
            td,
        } => {
            let mcc = random_multicolor_instance(k, n, m, plant, seed)?;
            let out = reduce_clique_to_mlbc(&mcc)?;
            let inst = CutInstance::single_pair(out.graph.clone(), out.s, out.t, out.l)?;
            let decomposition = if td {
                Some(reduction_path_decomposition(&out)?)
            } else {
                None
            };
            write_bundle(&out_dir, &name, &out.graph, &inst, decomposition.as_ref())?;
            write_text(&out_dir.join(format!("{name}.mcc.json")), &mcc.to_json())?;
            if plant {
                let clique = find_multicolor_clique(&mcc, 1 << 40)?
                    .expect("a planted instance contains a clique");
                let witness = ridge_set_for_clique(&out, &clique)?;
                let value = json!({
                    "budget": out.budget,
                    "size": witness.len(),
                    "clique": clique,
                    "edges": edge_list_json(&witness),
                });
                let mut text = serde_json::to_string_pretty(&value).expect("json");
                text.push('\n');
                write_text(&out_dir.join(format!("{name}.witness.json")), &text)?;
            }
            println!(
                "reduction k={k} n={n} m={m}: {} vertices, {} edges, L={}, budget={}",
                out.graph.n(),
                out.graph.m(),
                out.l,
                out.budget
            );
        }
        GenCommand::Compose {
            part,
            l,
            out_dir,
            name,
        } => {
            let mut parts = Vec::with_capacity(part.len());
            for spec in &part {
                let (path, s, t) = parse_part(spec)?;
                parts.push((load_graph_file(&path)?, s, t));
            }
            let comp = and_compose(&parts)?;
            let inst = CutInstance::single_pair(comp.graph.clone(), comp.s, comp.t, l)?;
            write_bundle(&out_dir, &name, &comp.graph, &inst, Some(&comp.decomposition))?;
            println!(
                "composed {} parts: {} vertices, {} edges, width {}",
                parts.len(),
                comp.graph.n(),
                comp.graph.m(),
                comp.decomposition.width()
            );
        }
        GenCommand::Mcc {
            k,
            n,
            m,
            seed,
            plant,
            out,
        } => {
            let mcc = random_multicolor_instance(k, n, m, plant, seed)?;
            if let Some(dir) = out.parent() {
                if !dir.as_os_str().is_empty() {
                    ensure_dir(dir)?;
                }
            }
            write_text(&out, &mcc.to_json())?;
            println!("mcc k={k} n={n} m={m} seed={seed} plant={plant}");
        }
    }
    Ok(())
}

fn cmd_td(command: TdCommand) -> Result<()> {
    match command {
        TdCommand::Compute { graph, out } => {
            let g = load_graph_file(&graph)?;
            let td = heuristic_decomposition(&g);
            write_text(&out, &write_td(&td))?;
            println!("width: {}  bags: {}", td.width(), td.bag_count());
        }
        TdCommand::Validate { graph, td } => {
            let g = load_graph_file(&graph)?;
            let decomposition = parse_td(&read_text(&td)?)?;
            report_violations(&g, &decomposition)?;
        }
    }
    Ok(())
}

fn report_violations(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    let violations = validate_decomposition(g, td);
    if violations.is_empty() {
        println!("ok: width {} over {} bags", td.width(), td.bag_count());
        Ok(())
    } else {
        let listing: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        Err(Error::argument(format!(
            "decomposition invalid:\n  {}",
            listing.join("\n  ")
        )))
    }
}

fn parse_cut_file(path: &Path) -> Result<Vec<Edge>> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::parse(e.line(), format!("cut json: {e}")))?;
    let list = value
        .get("edges")
        .or_else(|| value.get("cut"))
        .or(Some(&value))
        .filter(|v| v.is_array())
        .ok_or_else(|| Error::argument("cut json needs an \"edges\" or \"cut\" array"))?;
    let mut cut = Vec::new();
    for (i, pair) in list.as_array().unwrap().iter().enumerate() {
        let ends = pair.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
            Error::argument(format!("cut entry {i} is not a two-element array"))
        })?;
        let u = ends[0].as_u64();
        let v = ends[1].as_u64();
        match (u, v) {
            (Some(u), Some(v)) if u != v && u >= 1 && v >= 1 => {
                cut.push(Edge::new(u as VertexId, v as VertexId));
            }
            _ => return Err(Error::argument(format!("cut entry {i} is not an edge"))),
        }
    }
    Ok(cut)
}

fn cmd_validate(args: ValidateArgs) -> Result<()> {
    match (&args.graph, &args.td, &args.instance, &args.cut) {
        (Some(graph), Some(td), None, None) => {
            let g = load_graph_file(graph)?;
            let decomposition = parse_td(&read_text(td)?)?;
            report_violations(&g, &decomposition)
        }
        (None, None, Some(instance), Some(cut)) => {
            let inst = load_instance_file(instance)?;
            let edges = parse_cut_file(cut)?;
            for e in &edges {
                if !inst.graph.contains(*e) {
                    return Err(Error::argument(format!("cut edge {e} is not in the graph")));
                }
            }
            if verify_cut(&inst, &edges)? {
                println!("ok: cut of size {} satisfies every bound", edges.len());
                Ok(())
            } else {
                Err(Error::argument(format!(
                    "cut of size {} leaves a terminal pair too close",
                    edges.len()
                )))
            }
        }
        _ => Err(Error::argument(
            "validate needs either --graph with --td, or --instance with --cut",
        )),
    }
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(&args.corpus)
        .map_err(|e| Error::io(&args.corpus, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension().map_or(false, |ext| ext == "json")
                && p.file_name()
                    .map_or(false, |f| !f.to_string_lossy().ends_with(".mcc.json"))
        })
        .collect();
    files.sort();

    let opts = args.knobs.options();
    let mut rows = Vec::new();
    println!(
        "{:<28} {:>5} {:>5} {:>5} {:>4} {:>12} {:>6} {:>8} {:>9}",
        "instance", "n", "m", "width", "lim", "entries", "ms", "size", "oracle"
    );
    for path in &files {
        let label = path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let mut row = BTreeMap::new();
        row.insert("file".to_string(), json!(label.clone()));
        match bench_one(path, &opts, args.oracle_cap) {
            Ok((inst, sol, agreement)) => {
                let agree_str = match agreement {
                    Some(true) => "agree",
                    Some(false) => "DISAGREE",
                    None => "-",
                };
                println!(
                    "{:<28} {:>5} {:>5} {:>5} {:>4} {:>12} {:>6} {:>8} {:>9}",
                    label,
                    inst.graph.n(),
                    inst.graph.m(),
                    sol.stats.width,
                    inst.lim,
                    sol.stats.table_entries,
                    sol.stats.elapsed_ms,
                    sol.size,
                    agree_str
                );
                row.insert("n".into(), json!(inst.graph.n()));
                row.insert("m".into(), json!(inst.graph.m()));
                row.insert("width".into(), json!(sol.stats.width));
                row.insert("lim".into(), json!(inst.lim));
                row.insert("table_entries".into(), json!(sol.stats.table_entries));
                row.insert("size".into(), json!(sol.size));
                row.insert("agreement".into(), json!(agreement));
            }
            Err(e) => {
                println!("{label:<28} failed: {e}");
                row.insert("error".into(), json!(e.to_string()));
            }
        }
        rows.push(Value::Object(row.into_iter().collect()));
    }
    let report = json!({ "rows": rows });
    if let Some(out) = &args.out {
        let mut text = serde_json::to_string_pretty(&report).expect("json");
        text.push('\n');
        write_text(out, &text)?;
    }
    Ok(())
}

fn bench_one(
    path: &Path,
    opts: &SolveOptions,
    oracle_cap: usize,
) -> Result<(CutInstance, Solution, Option<bool>)> {
    let inst = load_instance_file(path)?;
    let sol = solve_mlbmc(&inst, None, opts)?;
    let agreement = if inst.graph.m() <= oracle_cap {
        let (oracle_size, _) = brute_force_mlbmc(&inst, oracle_cap)?;
        Some(oracle_size == sol.size)
    } else {
        None
    };
    Ok((inst, sol, agreement))
}
