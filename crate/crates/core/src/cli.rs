//! The `reflexive-forge` command line: per-object queries, construction checks
//! and the census sweep, reported as JSON (or plain tables with `--text`).
//!
//! Exit codes: 0 when the verdict holds, 1 when it fails, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::complexes::{format_face, is_flag, stable_set_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::census::perfect_graphs;
use crate::graphs::{chromatic_number, clique_number, find_odd_antihole, find_odd_hole, is_perfect, Graph};
use crate::polytopes::{
    find_obstruction, is_fano, is_gorenstein_fano, is_smooth, is_terminal, merge_polytope,
    verify_obstruction_facet, VPolytope,
};
use crate::toric::{
    buchberger, exists_squarefree_revlex_z_smallest, harmony_violation, initial_ideal, is_compressed,
    standard_monomials_match_fibers, toric_ideal_generators, triangulation_from_initial_ideal, verify_theorem1,
    Configuration, InitialTriangulation, MonomialIdeal, MonomialOrder, DEFAULT_DEGREE_BOUND, Z_SMALLEST_LIMIT,
};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "REFLEXIVE_FORGE_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".rf-cache";

#[derive(Debug, Parser)]
#[command(name = "reflexive-forge", version, about = "Reflexive polytopes from pairs of perfect graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub text: bool,

    /// Print the JSON report (the default).
    #[arg(long, global = true)]
    pub json: bool,

    /// Highest total degree checked by the fiber oracle.
    #[arg(long, global = true, default_value_t = 4)]
    pub degree_bound: u32,

    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Perfection of a graph, with an odd hole or antihole when it fails.
    Perfect {
        #[arg(long)]
        graph: PathBuf,
    },
    /// The stable set complex of a graph.
    StableComplex {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Whether two configurations are of harmony.
    Harmony(PairArgs),
    /// Reduced Gröbner basis of a toric ideal.
    ToricGb(ConfigArgs),
    /// Initial ideal, squarefreeness and the induced triangulation.
    Initial(ConfigArgs),
    /// Compressedness, by facet widths and by order enumeration.
    Compressed {
        #[arg(long)]
        config: PathBuf,
    },
    /// Reflexivity, terminality and smoothness of a merged polytope.
    MergeCheck(MergeArgs),
    /// The squarefree initial ideal of a merged configuration, built and recomputed.
    Theorem1(PairArgs),
    /// A certificate that the merged polytope of a complex with itself is not reflexive.
    Obstruction(ObjectArgs),
    /// Perfect graphs on `d` vertices and the reflexivity of their pairs.
    Census {
        #[arg(long)]
        d: usize,
        /// Check polytopes for d >= 5 as well.
        #[arg(long)]
        deep: bool,
        /// Allow d = 7.
        #[arg(long)]
        n7: bool,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub b: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Variables separated by commas, smallest first (`z,x2,x1`), or
    /// written out with `<` or `>`.
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct MergeArgs {
    #[arg(long, required_unless_present = "c1", conflicts_with = "c1")]
    pub g1: Option<PathBuf>,
    #[arg(long, required_unless_present = "c2", conflicts_with = "c2")]
    pub g2: Option<PathBuf>,
    /// Complex file instead of a graph for the first factor.
    #[arg(long)]
    pub c1: Option<PathBuf>,
    #[arg(long)]
    pub c2: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ObjectArgs {
    #[arg(long, required_unless_present = "complex", conflicts_with = "complex")]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub complex: Option<PathBuf>,
}

/// The outcome of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    /// A boolean, or a value for purely computational commands.
    pub verdict: Value,
    pub certificates: Value,
    pub elapsed_ms: u64,
}

impl Report {
    /// Exit status: 1 only for a `false` verdict.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Value::Bool(false) => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command   {}\n", self.command));
        out.push_str(&format!("verdict   {}\n", scalar(&self.verdict)));
        out.push_str(&format!("elapsed   {} ms\n", self.elapsed_ms));
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "certificates", &self.certificates);
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn section(out: &mut String, title: &str, v: &Value) {
    out.push_str(&format!("\n[{title}]\n"));
    let Value::Object(map) = v else {
        out.push_str(&format!("{}\n", scalar(v)));
        return;
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in map {
        match v {
            Value::Array(rows) if rows.iter().any(|r| r.is_object()) => {
                out.push_str(&format!("{k}:\n"));
                table(out, rows);
            }
            Value::Array(rows) if rows.iter().any(|r| r.is_array()) => {
                out.push_str(&format!("{k}:\n"));
                for r in rows {
                    out.push_str(&format!("  {}\n", scalar(r)));
                }
            }
            _ => out.push_str(&format!("{k:width$}  {}\n", scalar(v))),
        }
    }
}

fn table(out: &mut String, rows: &[Value]) {
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| r.get(c).map(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = (0..columns.len())
        .map(|i| cells.iter().map(|r| r[i].len()).chain([columns[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |vals: Vec<&str>| -> String {
        let parts: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:w$}")).collect();
        format!("  {}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(columns.iter().map(String::as_str).collect()));
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

/// Parses arguments, runs the command and prints the report; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let out = if cli.text {
                report.to_text()
            } else {
                report.to_json() + "\n"
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().write_all(out.as_bytes());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs the parsed command, consulting the cache unless `--no-cache` is given.
pub fn execute(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let (name, inputs) = describe(cli)?;
    let cache = (!cli.no_cache).then(Cache::from_env);
    let key = cache_key(name, &inputs, cli.degree_bound);
    if let Some(hit) = cache.as_ref().and_then(|c| c.load(name, &key)) {
        if hit.command == name && hit.inputs == inputs {
            return Ok(Report {
                elapsed_ms: elapsed(start),
                ..hit
            });
        }
    }
    let (verdict, certificates) = dispatch(cli, &inputs)?;
    let report = Report {
        command: name.to_string(),
        inputs,
        verdict,
        certificates,
        elapsed_ms: elapsed(start),
    };
    if let Some(c) = &cache {
        c.store(name, &key, &report);
    }
    Ok(report)
}

fn elapsed(start: Instant) -> u64 {
    start.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    SimplicialComplex::parse(&read(path)?)
}

fn load_config(path: &Path) -> Result<Configuration> {
    Configuration::parse(&read(path)?)
}

fn graph_input(g: &Graph) -> Value {
    json!(g.to_json())
}

fn complex_input(c: &SimplicialComplex) -> Value {
    json!({ "d": c.vertex_count(), "facets": facet_lists(c) })
}

fn config_input(c: &Configuration) -> Value {
    json!(c.to_text())
}

fn facet_lists(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    c.facets()
        .into_iter()
        .map(|f| (0..c.vertex_count()).filter(|&i| f >> i & 1 == 1).map(|i| i + 1).collect())
        .collect()
}

/// Command name and the parsed inputs echoed in the report; also the cache key material.
fn describe(cli: &Cli) -> Result<(&'static str, Value)> {
    Ok(match &cli.command {
        Command::Perfect { graph } => ("perfect", json!({ "graph": graph_input(&load_graph(graph)?) })),
        Command::StableComplex { graph } => ("stable-complex", json!({ "graph": graph_input(&load_graph(graph)?) })),
        Command::Harmony(p) => (
            "harmony",
            json!({ "a": config_input(&load_config(&p.a)?), "b": config_input(&load_config(&p.b)?) }),
        ),
        Command::ToricGb(c) | Command::Initial(c) => {
            let name = if matches!(cli.command, Command::ToricGb(_)) { "toric-gb" } else { "initial" };
            let config = load_config(&c.config)?;
            let order = order_for(&config, c.order.as_deref())?;
            (
                name,
                json!({ "config": config_input(&config), "order": order.format(&config.var_names()) }),
            )
        }
        Command::Compressed { config } => ("compressed", json!({ "config": config_input(&load_config(config)?) })),
        Command::MergeCheck(m) => {
            let (d1, d2) = merge_factors(m)?;
            ("merge-check", json!({ "delta": complex_input(&d1), "delta_prime": complex_input(&d2) }))
        }
        Command::Theorem1(p) => (
            "theorem1",
            json!({ "a": config_input(&load_config(&p.a)?), "b": config_input(&load_config(&p.b)?) }),
        ),
        Command::Obstruction(o) => ("obstruction", json!({ "complex": complex_input(&object_complex(o)?) })),
        Command::Census { d, deep, n7 } => {
            let limit = if *n7 { 7 } else { 6 };
            if !(2..=limit).contains(d) {
                return Err(Error::InvalidInput(format!(
                    "census needs 2 <= d <= {limit} (d = 7 with --n7), got {d}"
                )));
            }
            ("census", json!({ "d": d, "deep": *deep || *d <= 4 }))
        }
    })
}

fn merge_factors(m: &MergeArgs) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let factor = |g: &Option<PathBuf>, c: &Option<PathBuf>| -> Result<SimplicialComplex> {
        match (g, c) {
            (Some(g), _) => Ok(stable_set_complex(&load_graph(g)?)),
            (None, Some(c)) => load_complex(c),
            (None, None) => Err(Error::InvalidInput("missing factor".into())),
        }
    };
    Ok((factor(&m.g1, &m.c1)?, factor(&m.g2, &m.c2)?))
}

fn object_complex(o: &ObjectArgs) -> Result<SimplicialComplex> {
    match (&o.graph, &o.complex) {
        (Some(g), _) => Ok(stable_set_complex(&load_graph(g)?)),
        (None, Some(c)) => load_complex(c),
        (None, None) => Err(Error::InvalidInput("give --graph or --complex".into())),
    }
}

/// The given order, or the natural one with `z` (if present) smallest.
fn order_for(c: &Configuration, order: Option<&str>) -> Result<MonomialOrder> {
    match order {
        Some(s) => MonomialOrder::parse(s, &c.var_names()),
        None => Ok(match c.zero_index() {
            Some(z) => MonomialOrder::with_smallest(c.len(), z),
            None => MonomialOrder::natural(c.len()),
        }),
    }
}

fn dispatch(cli: &Cli, inputs: &Value) -> Result<(Value, Value)> {
    match &cli.command {
        Command::Perfect { graph } => perfect(&load_graph(graph)?),
        Command::StableComplex { graph } => stable_complex(&load_graph(graph)?),
        Command::Harmony(p) => harmony(&load_config(&p.a)?, &load_config(&p.b)?),
        Command::ToricGb(c) => {
            let config = load_config(&c.config)?;
            toric_gb(&config, &order_for(&config, c.order.as_deref())?, cli.degree_bound)
        }
        Command::Initial(c) => {
            let config = load_config(&c.config)?;
            initial(&config, &order_for(&config, c.order.as_deref())?, cli.degree_bound)
        }
        Command::Compressed { config } => compressed(&load_config(config)?),
        Command::MergeCheck(m) => {
            let (d1, d2) = merge_factors(m)?;
            merge_check(&d1, &d2)
        }
        Command::Theorem1(p) => theorem1(&load_config(&p.a)?, &load_config(&p.b)?, cli.degree_bound),
        Command::Obstruction(o) => obstruction(&object_complex(o)?),
        Command::Census { d, .. } => census(*d, inputs["deep"].as_bool().unwrap_or(false)),
    }
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn perfect(g: &Graph) -> Result<(Value, Value)> {
    let hole = find_odd_hole(g);
    let antihole = if hole.is_none() { find_odd_antihole(g) } else { None };
    Ok((
        json!(is_perfect(g)),
        json!({
            "clique_number": clique_number(g),
            "chromatic_number": chromatic_number(g),
            "odd_hole": hole.as_deref().map(one_based),
            "odd_antihole": antihole.as_deref().map(one_based),
        }),
    ))
}

fn stable_complex(g: &Graph) -> Result<(Value, Value)> {
    let s = stable_set_complex(g);
    let faces: Vec<String> = s.faces().iter().map(|&f| format_face(f)).collect();
    Ok((
        json!(facet_lists(&s)),
        json!({
            "faces": faces,
            "face_count": s.faces().len(),
            "flag": is_flag(&s).is_some(),
            "text": s.to_text(),
        }),
    ))
}

fn harmony(a: &Configuration, b: &Configuration) -> Result<(Value, Value)> {
    let witness = harmony_violation(a, b);
    Ok((json!(witness.is_none()), json!({ "witness": witness })))
}

fn fiber_oracle(c: &Configuration, ideal: &MonomialIdeal, degree: u32) -> Result<Value> {
    let check = standard_monomials_match_fibers(c, ideal, degree, DEFAULT_DEGREE_BOUND)?;
    Ok(json!(check))
}

fn toric_gb(c: &Configuration, order: &MonomialOrder, degree: u32) -> Result<(Value, Value)> {
    let names = c.var_names();
    let gens = toric_ideal_generators(c);
    let gb = buchberger(&gens, order);
    let ini = initial_ideal(&gb);
    let basis: Vec<String> = gb.elements().iter().map(|b| b.format(&names)).collect();
    Ok((
        json!(basis),
        json!({
            "order": order.format(&names),
            "generators": gens.iter().map(|b| b.format(&names)).collect::<Vec<_>>(),
            "initial_ideal": ini.format(&names),
            "squarefree": ini.is_squarefree(),
            "fiber_check": fiber_oracle(c, &ini, degree)?,
        }),
    ))
}

fn triangulation_value(c: &Configuration, t: &InitialTriangulation) -> Value {
    let names = c.var_names();
    let simplices: Vec<Vec<&str>> = t
        .triangulation
        .simplices
        .iter()
        .map(|s| s.iter().map(|&i| names[i].as_str()).collect())
        .collect();
    json!({
        "simplices": simplices,
        "unimodular": t.unimodular,
        "quadratic": t.quadratic,
        "all_contain_zero": t.all_contain_zero,
        "volume": t.volume.to_string(),
    })
}

fn initial(c: &Configuration, order: &MonomialOrder, degree: u32) -> Result<(Value, Value)> {
    let names = c.var_names();
    let gb = buchberger(&toric_ideal_generators(c), order);
    let ini = initial_ideal(&gb);
    let triangulation = if ini.is_squarefree() {
        Some(triangulation_value(c, &triangulation_from_initial_ideal(c, &ini)?))
    } else {
        None
    };
    Ok((
        json!(ini.is_squarefree()),
        json!({
            "order": order.format(&names),
            "initial_ideal": ini.format(&names),
            "triangulation": triangulation,
            "fiber_check": fiber_oracle(c, &ini, degree)?,
        }),
    ))
}

fn compressed(c: &Configuration) -> Result<(Value, Value)> {
    let report = is_compressed(c)?;
    let z_smallest = if c.has_zero_column() && c.nonzero_count() <= Z_SMALLEST_LIMIT {
        Some(exists_squarefree_revlex_z_smallest(c)?.map(|o| o.format(&c.var_names())))
    } else {
        None
    };
    Ok((
        json!(report.compressed),
        json!({
            "facet_widths_one": report.facet_widths_one,
            "all_orders_squarefree": report.enumeration,
            "squarefree_order_with_z_smallest": z_smallest,
        }),
    ))
}

fn obstruction_value(p: &VPolytope, delta: &SimplicialComplex) -> Result<Option<Value>> {
    let Some(found) = find_obstruction(delta) else {
        return Ok(None);
    };
    let check = verify_obstruction_facet(p, found.obstruction, &found.vertices)?;
    Ok(Some(json!({
        "obstruction": found.obstruction,
        "vertices": one_based(&found.vertices),
        "check": check,
    })))
}

fn merge_check(d1: &SimplicialComplex, d2: &SimplicialComplex) -> Result<(Value, Value)> {
    let p = merge_polytope(d1, d2)?;
    let fano = is_fano(&p);
    let (gorenstein, facets, terminal, smooth) = if fano {
        let g = is_gorenstein_fano(&p)?;
        (g.gorenstein, g.facets, is_terminal(&p)?, is_smooth(&p)?)
    } else {
        (false, Vec::new(), false, false)
    };
    // the merged polytope of (Δ', Δ) is the negative of that of (Δ, Δ')
    let obstructions = if gorenstein {
        json!(null)
    } else {
        let q = merge_polytope(d2, d1)?;
        json!({ "delta": obstruction_value(&p, d1)?, "delta_prime": obstruction_value(&q, d2)? })
    };
    let vertices: Vec<Vec<i64>> = p.vertices.iter().map(|v| v.to_i64().expect("fits in i64")).collect();
    Ok((
        json!(fano && gorenstein),
        json!({
            "vertex_count": vertices.len(),
            "vertices": vertices,
            "fano": fano,
            "gorenstein": gorenstein,
            "terminal": terminal,
            "smooth": smooth,
            "facets": facets,
            "obstructions": obstructions,
        }),
    ))
}

fn theorem1(a: &Configuration, b: &Configuration, degree: u32) -> Result<(Value, Value)> {
    let v = verify_theorem1(a, b)?;
    let merged = &v.construction.merged;
    let names = merged.var_names();
    let pairs: Vec<String> = v
        .construction
        .pairs
        .iter()
        .map(|&(i, j)| format!("x{}*y{}", i + 1, j + 1))
        .collect();
    let triangulation = if v.squarefree {
        Some(triangulation_value(merged, &triangulation_from_initial_ideal(merged, &v.computed)?))
    } else {
        None
    };
    let fibers = standard_monomials_match_fibers(merged, &v.computed, degree, DEFAULT_DEGREE_BOUND)?;
    Ok((
        json!(v.holds() && fibers.ok()),
        json!({
            "merged": merged.to_text(),
            "order": v.construction.order.format(&names),
            "pairs": pairs,
            "constructed": v.construction.monomials.format(&names),
            "computed": v.computed.format(&names),
            "matches": v.matches,
            "squarefree": v.squarefree,
            "triangulation": triangulation,
            "fiber_check": fibers,
        }),
    ))
}

fn obstruction(delta: &SimplicialComplex) -> Result<(Value, Value)> {
    let p = merge_polytope(delta, delta)?;
    let found = obstruction_value(&p, delta)?;
    let certified = found
        .as_ref()
        .is_some_and(|f| f["check"]["certified"].as_bool() == Some(true));
    Ok((json!(certified), json!({ "found": found })))
}

#[derive(Serialize)]
struct PairOutcome {
    g1: String,
    g2: String,
    fano: bool,
    gorenstein: bool,
    terminal: bool,
}

fn census(d: usize, deep: bool) -> Result<(Value, Value)> {
    let graphs: Vec<Graph> = perfect_graphs(d)?.iter().map(|c| c.to_graph()).collect();
    let k = graphs.len();
    let mut certs = json!({
        "perfect_graphs": k,
        "pairs": k * (k + 1) / 2,
        "graphs": graphs.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    });
    if !deep {
        certs["checked"] = json!(0);
        return Ok((json!(true), certs));
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<PairOutcome> {
            let p = merge_polytope(&stable_set_complex(&graphs[i]), &stable_set_complex(&graphs[j]))?;
            let fano = is_fano(&p);
            Ok(PairOutcome {
                g1: graphs[i].to_string(),
                g2: graphs[j].to_string(),
                fano,
                gorenstein: fano && is_gorenstein_fano(&p)?.gorenstein,
                terminal: fano && is_terminal(&p)?,
            })
        })
        .collect::<Result<_>>()?;
    let good = outcomes.iter().filter(|o| o.gorenstein && o.terminal).count();
    let failures: Vec<&PairOutcome> = outcomes.iter().filter(|o| !(o.gorenstein && o.terminal)).collect();
    certs["checked"] = json!(outcomes.len());
    certs["gorenstein_fano_and_terminal"] = json!(good);
    certs["failures"] = json!(failures);
    Ok((json!(failures.is_empty()), certs))
}

fn cache_key(command: &str, inputs: &Value, degree_bound: u32) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update([0]);
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.update([0]);
    h.update(degree_bound.to_le_bytes());
    h.update(inputs.to_string().as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// One JSON report per command and input hash. Unreadable entries are ignored
/// and write failures are silent.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn from_env() -> Cache {
        Cache::new(std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR), PathBuf::from))
    }

    fn path(&self, command: &str, key: &str) -> PathBuf {
        self.dir.join(format!("{command}-{key}.json"))
    }

    pub fn load(&self, command: &str, key: &str) -> Option<Report> {
        let text = fs::read_to_string(self.path(command, key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, command: &str, key: &str, report: &Report) {
        if fs::create_dir_all(&self.dir).is_ok() {
            let _ = fs::write(self.path(command, key), report.to_json());
        }
    }
}
