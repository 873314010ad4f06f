use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::broom::RainbowCertificate;
use crate::colored::ColoredGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The checked statement holds on the searched space, or the requested
    /// value was determined.
    Holds,
    /// A counterexample was found; the report carries it.
    Fails,
    /// The whole space was searched and nothing was found.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Coloring {
        graph: ColoredGraph,
    },
    Certificate {
        graph: ColoredGraph,
        certificate: RainbowCertificate,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub nodes_explored: u64,
    pub colorings_enumerated: u64,
    pub graphs_examined: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, u64>,
}

impl Counters {
    pub fn absorb(&mut self, other: &Counters) {
        self.nodes_explored += other.nodes_explored;
        self.colorings_enumerated += other.colorings_enumerated;
        self.graphs_examined += other.graphs_examined;
        for (key, v) in &other.extra {
            *self.extra.entry(key.clone()).or_default() += v;
        }
    }

    pub fn bump(&mut self, key: &str, by: u64) {
        *self.extra.entry(key.to_owned()).or_default() += by;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub instance: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub counters: Counters,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl SearchReport {
    pub(crate) fn new(instance: impl Into<String>, verdict: Verdict) -> Self {
        SearchReport {
            instance: instance.into(),
            verdict,
            value: None,
            witness: None,
            counters: Counters::default(),
            seed: None,
            notes: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub(crate) fn timed(mut self, elapsed: Duration) -> Self {
        self.wall_time_ms = Some(elapsed.as_secs_f64() * 1e3);
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Shell status: 0 for holds or a computed value, 1 for a counterexample.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Holds => 0,
            Verdict::Fails | Verdict::Exhausted => 1,
        }
    }
}
