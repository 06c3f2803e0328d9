//! The `corona` command line.
//!
//! Exit codes: 0 success, 1 a `verify` run produced FAIL reports, 2 bad
//! usage or input, 3 a search cap was exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::geodesic::{geodetic_number, k_geodetic_number, GeodesicIndex};
use crate::graph::{
    corona, encode_graph6, parse_edge_list, parse_graph6, parse_graph6_lines, write_edge_list,
    Graph, VertexSet,
};
use crate::harness::{
    census_graphs, parse_range, run_corpus, write_jsonl, Arity, CensusKind, CheckConfig,
    CorpusSpec, Plan, RunConfig, TheoremId,
};
use crate::steiner::{steiner_distance, steiner_hull, steiner_number};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "corona", version, about = "Geodetic and Steiner invariants of corona product graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute invariants of one graph.
    Compute(ComputeArgs),
    /// Build the corona product G ⊙ H.
    Corona(CoronaArgs),
    /// Check a theorem over a corpus, streaming JSON Lines reports.
    Verify(VerifyArgs),
    /// Tabulate g, g2, s and the diameter over the connected census of one order.
    Census(CensusArgs),
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long, value_name = "STR")]
    pub g6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long, value_name = "PATH")]
    pub g6_file: Option<PathBuf>,
    /// File in `n m` + `u v` edge-list format.
    #[arg(long, value_name = "PATH")]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Override the geodetic and Steiner search caps.
    #[arg(long, value_name = "INT", value_parser = clap::value_parser!(u64).range(1..=62))]
    pub max_n: Option<u64>,
    /// Worker threads.
    #[arg(long, value_name = "INT", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub parallel: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    G,
    G2,
    Gk,
    S,
    Diameter,
    Extreme,
    Interval,
    SteinerDistance,
    SteinerHull,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Measures to compute.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "g", value_name = "NAME[,NAME...]")]
    pub measure: Vec<Measure>,
    /// `k` for the `gk` measure.
    #[arg(long, value_name = "INT")]
    pub k: Option<u32>,
    /// Vertex set for `interval` (exactly two vertices), `steiner-distance` and `steiner-hull`.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub set: Vec<usize>,
    /// Emit one JSON object instead of text.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductFormat {
    Edges,
    G6,
}

#[derive(Debug, Args)]
pub struct CoronaArgs {
    /// G as graph6.
    #[arg(long, value_name = "STR", conflicts_with = "edges")]
    pub g6: Option<String>,
    /// G as an edge-list file.
    #[arg(long, value_name = "PATH")]
    pub edges: Option<PathBuf>,
    /// H as graph6.
    #[arg(long, value_name = "STR", conflicts_with = "h_edges")]
    pub h_g6: Option<String>,
    /// H as an edge-list file.
    #[arg(long, value_name = "PATH")]
    pub h_edges: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edges")]
    pub format: ProductFormat,
    /// Write the layout JSON here.
    #[arg(long, value_name = "PATH")]
    pub layout_out: Option<PathBuf>,
    /// Emit product and layout as one JSON object.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Theorem identifier, e.g. GEO_CORONA_EQ.
    #[arg(long, value_name = "ID")]
    pub theorem: String,
    /// Corpus for G (or for the only graph): `FAMILY:A..B`, `all-connected:A..B`, `all:A..B`, `file:PATH`.
    #[arg(long, value_name = "SPEC")]
    pub family_g: Option<String>,
    /// Corpus for H.
    #[arg(long, value_name = "SPEC")]
    pub family_h: Option<String>,
    /// Random corpus `n=N,p=P,count=C`; stands in for H in pair theorems.
    #[arg(long, value_name = "n=N,p=P,count=C")]
    pub random: Option<String>,
    #[arg(long, value_name = "U64")]
    pub seed: Option<u64>,
    /// Parameter range for the wheel and fan theorems.
    #[arg(long, value_name = "A..B")]
    pub range: Option<String>,
    /// Pendant count for PENDANT_COROLLARY.
    #[arg(long, value_name = "INT", default_value_t = 2)]
    pub k: usize,
    #[command(flatten)]
    pub input: GraphInput,
    /// Accepted for symmetry with the other commands; output is always JSON Lines.
    #[arg(long)]
    pub json: bool,
    /// Record wall-clock times (output is then no longer reproducible).
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Graph order.
    #[arg(long, value_name = "INT")]
    pub order: usize,
    /// Emit JSON Lines rows instead of a table.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub caps: Caps,
}

/// A failure that ends a command with the given exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        Exit(code, e.to_string())
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit(EXIT_USAGE, format!("io error: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a, out),
        Command::Corona(a) => corona_cmd(&a, out, err),
        Command::Verify(a) => verify(&a, out),
        Command::Census(a) => census(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "corona: {msg}");
            code
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Exit> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(input: &GraphInput) -> Result<Option<Graph>, Exit> {
    if let Some(s) = &input.g6 {
        return Ok(Some(parse_graph6(s)?));
    }
    if let Some(path) = &input.g6_file {
        let text = read(path)?;
        let (line, g) = parse_graph6_lines(&text)
            .into_iter()
            .next()
            .ok_or_else(|| usage(format!("{}: no graphs", path.display())))?;
        return g
            .map(Some)
            .map_err(|e| usage(format!("{}:{line}: {e}", path.display())));
    }
    if let Some(path) = &input.edges {
        let g = parse_edge_list(&read(path)?)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(Some(g));
    }
    Ok(None)
}

fn options(caps: &Caps, parallel_search: bool) -> CheckConfig {
    let mut cfg = CheckConfig::default();
    if let Some(n) = caps.max_n {
        cfg.geodetic = cfg.geodetic.with_cap(n as usize);
        cfg.steiner = cfg.steiner.with_cap(n as usize);
    }
    let par = parallel_search && caps.parallel > 1;
    cfg.geodetic = cfg.geodetic.with_parallel(par);
    cfg.steiner = cfg.steiner.with_parallel(par);
    cfg
}

fn with_pool<T: Send>(threads: u64, f: impl FnOnce() -> T + Send) -> Result<T, Exit> {
    if threads <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads as usize)
        .build()
        .map_err(|e| usage(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Serialize)]
struct Computed {
    instance: BTreeMap<&'static str, serde_json::Value>,
    computed: BTreeMap<&'static str, i64>,
    witness: BTreeMap<&'static str, Vec<usize>>,
}

fn measure_name(m: Measure) -> &'static str {
    match m {
        Measure::G => "g",
        Measure::G2 => "g2",
        Measure::Gk => "gk",
        Measure::S => "s",
        Measure::Diameter => "diameter",
        Measure::Extreme => "extreme",
        Measure::Interval => "interval",
        Measure::SteinerDistance => "steiner-distance",
        Measure::SteinerHull => "steiner-hull",
    }
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let g = read_graph(&a.input)?.ok_or_else(|| usage("compute needs --g6, --g6-file or --edges"))?;
    let cfg = options(&a.caps, true);
    let set = || -> Result<VertexSet, Exit> {
        if a.set.is_empty() {
            return Err(usage("this measure needs --set"));
        }
        Ok(VertexSet::from_vertices(g.order(), a.set.iter().copied())?)
    };
    let mut res = Computed {
        instance: [
            ("g6", json!(encode_graph6(&g)?)),
            ("n", json!(g.order())),
            ("m", json!(g.size())),
        ]
        .into_iter()
        .collect(),
        computed: BTreeMap::new(),
        witness: BTreeMap::new(),
    };
    for &m in &a.measure {
        let name = measure_name(m);
        let (value, witness): (Option<i64>, Option<Vec<usize>>) = match m {
            Measure::G => {
                let r = with_pool(a.caps.parallel, || geodetic_number(&g, &cfg.geodetic))??;
                (Some(r.value as i64), Some(r.witness.to_vec()))
            }
            Measure::G2 | Measure::Gk => {
                let k = match m {
                    Measure::G2 => 2,
                    _ => a.k.ok_or_else(|| usage("gk needs --k"))?,
                };
                if m == Measure::Gk {
                    res.instance.insert("k", json!(k));
                }
                let r = with_pool(a.caps.parallel, || k_geodetic_number(&g, k, &cfg.geodetic))??;
                (Some(r.value as i64), Some(r.witness.to_vec()))
            }
            Measure::S => {
                let r = with_pool(a.caps.parallel, || steiner_number(&g, &cfg.steiner))??;
                (Some(r.value as i64), Some(r.witness.to_vec()))
            }
            Measure::Diameter => {
                let d = g.diameter().ok_or_else(|| usage("diameter of a disconnected graph"))?;
                (Some(d as i64), None)
            }
            Measure::Extreme => {
                let e = g.extreme_vertices();
                (Some(e.len() as i64), Some(e.to_vec()))
            }
            Measure::Interval => {
                let w = set()?;
                let [u, v] = w.to_vec()[..] else {
                    return Err(usage("interval needs --set with exactly two vertices"));
                };
                let index = GeodesicIndex::new(&g)?;
                let i = VertexSet::from_mask(g.order(), index.interval_mask(u, v));
                (Some(i.len() as i64), Some(i.to_vec()))
            }
            Measure::SteinerDistance => {
                let w = set()?;
                if !g.is_connected() {
                    return Err(usage("Steiner distance needs a connected graph"));
                }
                (Some(steiner_distance(&g, &w)? as i64), None)
            }
            Measure::SteinerHull => {
                let w = set()?;
                if !g.is_connected() {
                    return Err(usage("Steiner hull needs a connected graph"));
                }
                let h = steiner_hull(&g, &w)?;
                (Some(h.len() as i64), Some(h.to_vec()))
            }
        };
        if matches!(m, Measure::Interval | Measure::SteinerDistance | Measure::SteinerHull) {
            res.instance.insert("set", json!(a.set));
        }
        if let Some(v) = value {
            res.computed.insert(name, v);
        }
        if let Some(w) = witness {
            res.witness.insert(name, w);
        }
    }
    if a.json {
        serde_json::to_writer(&mut *out, &res).map_err(|e| usage(e.to_string()))?;
        writeln!(out)?;
    } else {
        for &m in &a.measure {
            let name = measure_name(m);
            let value = res.computed[name];
            match res.witness.get(name) {
                Some(w) => writeln!(out, "{name} = {value} {}", VertexSet::from_vertices(g.order(), w.iter().copied())?)?,
                None => writeln!(out, "{name} = {value}")?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn corona_cmd(a: &CoronaArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Exit> {
    let one = |g6: &Option<String>, edges: &Option<PathBuf>, which: &str| -> Result<Graph, Exit> {
        if let Some(s) = g6 {
            return Ok(parse_graph6(s)?);
        }
        if let Some(p) = edges {
            return parse_edge_list(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display())));
        }
        Err(usage(format!("missing {which}")))
    };
    let g = one(&a.g6, &a.edges, "G (--g6 or --edges)")?;
    let h = one(&a.h_g6, &a.h_edges, "H (--h-g6 or --h-edges)")?;
    let (p, layout) = corona(&g, &h)?;
    let layout_json = serde_json::to_string(&layout).map_err(|e| usage(e.to_string()))?;
    if let Some(path) = &a.layout_out {
        std::fs::write(path, format!("{layout_json}\n"))
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if a.json {
        let obj = json!({
            "g6": encode_graph6(&p)?,
            "order": p.order(),
            "size": p.size(),
            "layout": layout,
        });
        writeln!(out, "{obj}")?;
        return Ok(EXIT_OK);
    }
    match a.format {
        ProductFormat::Edges => {
            writeln!(out, "# layout {layout_json}")?;
            write!(out, "{}", write_edge_list(&p))?;
        }
        ProductFormat::G6 => {
            writeln!(out, "{}", encode_graph6(&p)?)?;
            if a.layout_out.is_none() {
                writeln!(err, "{layout_json}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_random(s: &str, seed: Option<u64>) -> Result<CorpusSpec, Exit> {
    let seed = seed.ok_or_else(|| usage("--random needs --seed"))?;
    let (mut n, mut p, mut count) = (None, None, None);
    for part in s.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("bad --random part {part:?}")))?;
        let bad = || usage(format!("bad --random value {part:?}"));
        match key.trim() {
            "n" => n = Some(value.trim().parse::<usize>().map_err(|_| bad())?),
            "p" => p = Some(value.trim().parse::<f64>().map_err(|_| bad())?),
            "count" => count = Some(value.trim().parse::<usize>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    let missing = |k: &str| usage(format!("--random needs {k}="));
    Ok(CorpusSpec::Random {
        order: n.ok_or_else(|| missing("n"))?,
        p: p.ok_or_else(|| missing("p"))?,
        count: count.ok_or_else(|| missing("count"))?,
        seed,
    })
}

fn explicit_corpus(input: &GraphInput) -> Result<Option<CorpusSpec>, Exit> {
    if let Some(path) = &input.g6_file {
        if !path.exists() {
            return Err(usage(format!("{}: no such file", path.display())));
        }
        return Ok(Some(CorpusSpec::File(path.clone())));
    }
    Ok(read_graph(input)?.map(|g| CorpusSpec::Graphs(vec![g])))
}

fn spec(s: &str) -> Result<CorpusSpec, Exit> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

fn plan(a: &VerifyArgs, theorem: TheoremId) -> Result<Plan, Exit> {
    let random = a.random.as_deref().map(|r| parse_random(r, a.seed)).transpose()?;
    let explicit = explicit_corpus(&a.input)?;
    let family_g = a.family_g.as_deref().map(spec).transpose()?;
    let family_h = a.family_h.as_deref().map(spec).transpose()?;
    Ok(match theorem.arity() {
        Arity::Order => {
            let r = a.range.as_deref().ok_or_else(|| usage(format!("{theorem} needs --range A..B")))?;
            Plan::Orders(parse_range(r)?)
        }
        Arity::Single => {
            let sources: Vec<CorpusSpec> = [family_g, explicit, random].into_iter().flatten().collect();
            match <[CorpusSpec; 1]>::try_from(sources) {
                Ok([s]) => Plan::Single(s),
                Err(_) => {
                    return Err(usage(format!(
                        "{theorem} needs exactly one of --family-g, --g6/--g6-file/--edges, --random"
                    )))
                }
            }
        }
        Arity::Pair => {
            let g = match (family_g, explicit) {
                (Some(s), None) | (None, Some(s)) => s,
                _ => return Err(usage(format!("{theorem} needs G from --family-g or --g6/--g6-file/--edges"))),
            };
            let h = match (family_h, random) {
                (Some(s), None) | (None, Some(s)) => s,
                _ => return Err(usage(format!("{theorem} needs H from exactly one of --family-h, --random"))),
            };
            Plan::Pair { g, h }
        }
    })
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let theorem: TheoremId = a.theorem.parse()?;
    let plan = plan(a, theorem)?;
    let mut check = options(&a.caps, false);
    check.timing = a.timing;
    let cfg = RunConfig {
        check,
        k: a.k,
        threads: a.caps.parallel as usize,
    };
    let reports = run_corpus(theorem, &plan, &cfg)?;
    let summary = write_jsonl(out, &reports)?;
    Ok(if summary.fail == 0 { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct CensusRow {
    g6: String,
    n: usize,
    m: usize,
    diameter: u32,
    g: usize,
    g2: usize,
    s: usize,
    g_le_s: bool,
}

fn census(a: &CensusArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let graphs = census_graphs(CensusKind::Connected, a.order).map_err(|e| usage(e.to_string()))?;
    let cfg = options(&a.caps, false);
    let row = |g: &Graph| -> Result<CensusRow, Error> {
        let gv = geodetic_number(g, &cfg.geodetic)?.value;
        let sv = steiner_number(g, &cfg.steiner)?.value;
        Ok(CensusRow {
            g6: encode_graph6(g)?,
            n: g.order(),
            m: g.size(),
            diameter: g.diameter().expect("census graphs are connected"),
            g: gv,
            g2: k_geodetic_number(g, 2, &cfg.geodetic)?.value,
            s: sv,
            g_le_s: gv <= sv,
        })
    };
    let rows = with_pool(a.caps.parallel, || {
        use rayon::prelude::*;
        graphs.par_iter().map(row).collect::<Result<Vec<_>, Error>>()
    })??;
    if a.json {
        for r in &rows {
            serde_json::to_writer(&mut *out, r).map_err(|e| usage(e.to_string()))?;
            writeln!(out)?;
        }
    } else {
        writeln!(out, "{:<12} {:>3} {:>3} {:>4} {:>3} {:>3} {:>3}  g<=s", "g6", "n", "m", "diam", "g", "g2", "s")?;
        for r in &rows {
            writeln!(
                out,
                "{:<12} {:>3} {:>3} {:>4} {:>3} {:>3} {:>3}  {}",
                r.g6,
                r.n,
                r.m,
                r.diameter,
                r.g,
                r.g2,
                r.s,
                if r.g_le_s { "yes" } else { "no" }
            )?;
        }
    }
    Ok(EXIT_OK)
}
