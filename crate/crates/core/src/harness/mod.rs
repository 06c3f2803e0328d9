//! Executable checks of the closed-form geodetic and Steiner results for
//! corona products, each producing a [`VerificationReport`].

mod checks;
mod corpus;

pub use checks::*;
pub use corpus::{
    census_graphs, parse_range, run_corpus, CensusKind, CorpusItem, CorpusSpec, Family, Plan,
    RunConfig, CENSUS_DIR_ENV,
};

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::search::SearchOptions;

macro_rules! theorem_ids {
    ($($id:ident => $arity:ident),* $(,)?) => {
        /// One checker per claim.
        #[allow(non_camel_case_types, clippy::upper_case_acronyms)]
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        pub enum TheoremId {
            $($id),*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$id),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$id => stringify!($id)),*
                }
            }

            /// What one instance of this theorem is made of.
            pub fn arity(self) -> Arity {
                match self {
                    $(TheoremId::$id => Arity::$arity),*
                }
            }
        }
    };
}

theorem_ids! {
    GEO_KN => Single,
    CORONA_GEO_STRUCT => Pair,
    GEO_K1_LB => Single,
    EXTREME_IN_GEODETIC => Single,
    GEO_BOUNDS => Pair,
    GEO_CORONA_EQ => Pair,
    WHEEL_GEO => Order,
    FAN_GEO => Order,
    CORONA_CYCLE_PATH => Pair,
    G2_EQUIV => Single,
    G2_CORONA_EQUIV => Pair,
    DIAM2_GEO_EQ => Pair,
    PENDANT_COROLLARY => Pair,
    GEO_LOWER_MINUS1 => Pair,
    STEINER_KN => Single,
    STEINER_CORONA_STRUCT => Pair,
    STEINER_K1_LB => Single,
    STEINER_CORONA_EQ => Pair,
    WHEEL_STEINER => Order,
    FAN_STEINER => Order,
    STEINER_K1_IFF_DIAM2 => Single,
    DIAM2_STEINER_GEODETIC => Single,
    DIAM2_G_LE_S => Single,
    CORONA_G_LE_S => Pair,
}

/// Shape of a theorem instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    /// One graph.
    Single,
    /// Corona factors `(G, H)`.
    Pair,
    /// A family parameter `n` (wheels and fans).
    Order,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    PASS,
    FAIL,
    SKIPPED,
}

/// The checked instance in re-ingestible form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Instance {
    pub g6: Vec<String>,
    pub params: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub instance: Instance,
    pub computed: BTreeMap<String, i64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<usize>>>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn value(&self, name: &str) -> Option<i64> {
        self.computed.get(name).copied()
    }
}

/// Search caps and timing for the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub geodetic: SearchOptions,
    pub steiner: SearchOptions,
    /// Record wall-clock time in `elapsed_ms`. Off by default so that report
    /// streams are byte-for-byte reproducible.
    pub timing: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            geodetic: SearchOptions::geodetic(),
            steiner: SearchOptions::steiner(),
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.verdict {
                Verdict::PASS => s.pass += 1,
                Verdict::FAIL => s.fail += 1,
                Verdict::SKIPPED => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Serialize)]
struct SummaryLine {
    summary: Summary,
}

/// One JSON object per report, then the summary line.
pub fn write_jsonl<W: Write + ?Sized>(out: &mut W, reports: &[VerificationReport]) -> io::Result<Summary> {
    for r in reports {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    let summary = Summary::of(reports);
    serde_json::to_writer(&mut *out, &SummaryLine { summary })?;
    out.write_all(b"\n")?;
    Ok(summary)
}
