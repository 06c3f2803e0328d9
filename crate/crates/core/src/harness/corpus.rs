//! Graph corpora and corpus runs.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::{check, input_report, Subject};
use super::{Arity, CheckConfig, TheoremId, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::{
    complete, cycle, empty, encode_graph6, fan, parse_graph6_lines, path, random_connected_gnp,
    star, wheel, Graph,
};

/// Environment variable that points the census loader at a directory of
/// `connected_<n>.g6` / `all_<n>.g6` files instead of the built-in copies.
pub const CENSUS_DIR_ENV: &str = "CORONA_CENSUS_DIR";

const EMBEDDED_CONNECTED: [&str; 7] = [
    include_str!("../../data/census/connected_1.g6"),
    include_str!("../../data/census/connected_2.g6"),
    include_str!("../../data/census/connected_3.g6"),
    include_str!("../../data/census/connected_4.g6"),
    include_str!("../../data/census/connected_5.g6"),
    include_str!("../../data/census/connected_6.g6"),
    include_str!("../../data/census/connected_7.g6"),
];

const EMBEDDED_ALL: [&str; 7] = [
    include_str!("../../data/census/all_1.g6"),
    include_str!("../../data/census/all_2.g6"),
    include_str!("../../data/census/all_3.g6"),
    include_str!("../../data/census/all_4.g6"),
    include_str!("../../data/census/all_5.g6"),
    include_str!("../../data/census/all_6.g6"),
    include_str!("../../data/census/all_7.g6"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusKind {
    Connected,
    All,
}

impl CensusKind {
    fn file_name(self, order: usize) -> String {
        match self {
            CensusKind::Connected => format!("connected_{order}.g6"),
            CensusKind::All => format!("all_{order}.g6"),
        }
    }
}

/// Every graph of the given order up to isomorphism, from the census.
pub fn census_graphs(kind: CensusKind, order: usize) -> Result<Vec<Graph>> {
    let text = census_text(kind, order)?;
    parse_graph6_lines(&text)
        .into_iter()
        .map(|(line, g)| {
            g.map_err(|e| Error::Io(format!("census {} line {line}: {e}", kind.file_name(order))))
        })
        .collect()
}

fn census_text(kind: CensusKind, order: usize) -> Result<String> {
    if let Some(dir) = std::env::var_os(CENSUS_DIR_ENV) {
        let file = Path::new(&dir).join(kind.file_name(order));
        return std::fs::read_to_string(&file)
            .map_err(|e| Error::Io(format!("census file {}: {e}", file.display())));
    }
    let table = match kind {
        CensusKind::Connected => &EMBEDDED_CONNECTED,
        CensusKind::All => &EMBEDDED_ALL,
    };
    order
        .checked_sub(1)
        .and_then(|i| table.get(i))
        .map(|s| s.to_string())
        .ok_or_else(|| Error::Io(format!("no census for order {order} (available: 1..7)")))
}

/// Named graph families indexed by one parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    Wheel,
    Fan,
}

impl Family {
    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            Family::Path => path(n),
            Family::Cycle => cycle(n),
            Family::Complete => complete(n),
            Family::Empty => empty(n),
            Family::Star => star(n),
            Family::Wheel => wheel(n),
            Family::Fan => fan(n),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Fan => "fan",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "empty" => Family::Empty,
            "star" => Family::Star,
            "wheel" => Family::Wheel,
            "fan" => Family::Fan,
            _ => return Err(Error::domain(format!("unknown graph family {s:?}"))),
        })
    }
}

/// Parses `A..B` (inclusive) or a single `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::domain(format!("bad range {s:?}, expected A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

/// A source of graphs.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSpec {
    /// The census for each order in range.
    Exhaustive {
        orders: RangeInclusive<usize>,
        connected_only: bool,
    },
    /// `count` connected `G(order, p)` graphs from a ChaCha8 stream seeded by `seed`.
    Random {
        order: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    /// One graph6 string per line.
    File(PathBuf),
    Family {
        family: Family,
        orders: RangeInclusive<usize>,
    },
    Graphs(Vec<Graph>),
}

impl FromStr for CorpusSpec {
    type Err = Error;

    /// `all-connected:A..B`, `all:A..B`, `file:PATH` or `FAMILY:A..B`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("bad corpus {s:?}, expected KIND:ARG")))?;
        Ok(match kind.to_ascii_lowercase().as_str() {
            "all-connected" | "connected" => CorpusSpec::Exhaustive {
                orders: parse_range(arg)?,
                connected_only: true,
            },
            "all" => CorpusSpec::Exhaustive {
                orders: parse_range(arg)?,
                connected_only: false,
            },
            "file" => CorpusSpec::File(PathBuf::from(arg)),
            family => CorpusSpec::Family {
                family: family.parse()?,
                orders: parse_range(arg)?,
            },
        })
    }
}

/// One corpus entry: a graph, or an input that could not be turned into one.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusItem {
    Graph(Graph),
    Invalid { source: String, message: String },
}

impl CorpusItem {
    fn source(&self) -> String {
        match self {
            CorpusItem::Graph(g) => encode_graph6(g).expect("orders are capped at 62"),
            CorpusItem::Invalid { source, .. } => source.clone(),
        }
    }
}

impl CorpusSpec {
    /// Materializes the corpus in canonical order. Only an unreadable source
    /// (missing file or census) is an error; bad entries become
    /// [`CorpusItem::Invalid`].
    pub fn items(&self) -> Result<Vec<CorpusItem>> {
        Ok(match self {
            CorpusSpec::Exhaustive {
                orders,
                connected_only,
            } => {
                let kind = if *connected_only {
                    CensusKind::Connected
                } else {
                    CensusKind::All
                };
                let mut out = Vec::new();
                for n in orders.clone() {
                    out.extend(census_graphs(kind, n)?.into_iter().map(CorpusItem::Graph));
                }
                out
            }
            CorpusSpec::Random {
                order,
                p,
                count,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| random_connected_gnp(*order, *p, &mut rng).map(CorpusItem::Graph))
                    .collect::<Result<_>>()?
            }
            CorpusSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let lines: Vec<&str> = text.lines().collect();
                parse_graph6_lines(&text)
                    .into_iter()
                    .map(|(line, g)| match g {
                        Ok(g) => CorpusItem::Graph(g),
                        Err(e) => CorpusItem::Invalid {
                            source: lines[line - 1].trim().to_string(),
                            message: format!("{}:{line}: {e}", path.display()),
                        },
                    })
                    .collect()
            }
            CorpusSpec::Family { family, orders } => orders
                .clone()
                .map(|n| match family.build(n) {
                    Ok(g) => CorpusItem::Graph(g),
                    Err(e) => CorpusItem::Invalid {
                        source: format!("{family}:{n}"),
                        message: e.to_string(),
                    },
                })
                .collect(),
            CorpusSpec::Graphs(gs) => gs.iter().cloned().map(CorpusItem::Graph).collect(),
        })
    }
}

/// What a run iterates over, matching the theorem's arity.
#[derive(Debug, Clone, PartialEq)]
pub enum Plan {
    Single(CorpusSpec),
    /// Every `(G, H)` with `G` in the outer and `H` in the inner loop.
    Pair { g: CorpusSpec, h: CorpusSpec },
    Orders(RangeInclusive<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub check: CheckConfig,
    /// Pendant count for `PENDANT_COROLLARY`.
    pub k: usize,
    /// Worker threads for independent instances; 1 runs inline.
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            check: CheckConfig::default(),
            k: 2,
            threads: 1,
        }
    }
}

enum Job {
    Run(Subject),
    Invalid { sources: Vec<String>, message: String },
}

/// Runs `theorem` on every instance of `plan`, reports in canonical order
/// whatever the thread count.
pub fn run_corpus(theorem: TheoremId, plan: &Plan, cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let jobs = jobs(theorem, plan)?;
    let run = |job: &Job| match job {
        Job::Run(subject) => check(theorem, subject, cfg.k, &cfg.check),
        Job::Invalid { sources, message } => input_report(theorem, sources.clone(), message, &cfg.check),
    };
    if cfg.threads <= 1 {
        return Ok(jobs.iter().map(run).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
    Ok(pool.install(|| jobs.par_iter().map(run).collect()))
}

fn jobs(theorem: TheoremId, plan: &Plan) -> Result<Vec<Job>> {
    let mismatch = || {
        Error::domain(format!(
            "{theorem} expects a {:?} instance source",
            theorem.arity()
        ))
    };
    Ok(match (theorem.arity(), plan) {
        (Arity::Single, Plan::Single(spec)) => spec
            .items()?
            .into_iter()
            .map(|item| match item {
                CorpusItem::Graph(g) => Job::Run(Subject::Single(g)),
                CorpusItem::Invalid { source, message } => Job::Invalid {
                    sources: vec![source],
                    message,
                },
            })
            .collect(),
        (Arity::Pair, Plan::Pair { g, h }) => {
            let gs = g.items()?;
            let hs = h.items()?;
            let mut out = Vec::with_capacity(gs.len() * hs.len());
            for a in &gs {
                for b in &hs {
                    out.push(match (a, b) {
                        (CorpusItem::Graph(x), CorpusItem::Graph(y)) => {
                            Job::Run(Subject::Pair(x.clone(), y.clone()))
                        }
                        (CorpusItem::Invalid { message, .. }, _)
                        | (_, CorpusItem::Invalid { message, .. }) => Job::Invalid {
                            sources: vec![a.source(), b.source()],
                            message: message.clone(),
                        },
                    });
                }
            }
            out
        }
        (Arity::Order, Plan::Orders(range)) => {
            range.clone().map(|n| Job::Run(Subject::Order(n))).collect()
        }
        _ => return Err(mismatch()),
    })
}
