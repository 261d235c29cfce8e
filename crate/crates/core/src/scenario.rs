//! Scenario ingestion/generation and the placement pipeline: constrained
//! coverage circle, UAV waypoint at its center, per-node link statistics.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::channel::{link_stats, ChannelParams, LinkStats, LosParams, Waypoint3};
use crate::cmec::{constrained_mec, CmecError, ConstrainedResult, WeightedPoint};
use crate::geom::Tolerance;
use crate::mec::Seed;

/// One sensor node as it appears in the scenario file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodeSpec {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

/// A full evaluation scenario: nodes, coverage capacity, UAV altitude, and
/// the channel/tolerance constants. Optional file sections take defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub nodes: Vec<NodeSpec>,
    pub capacity: usize,
    pub altitude: f64,
    #[serde(default)]
    pub los: LosParams,
    #[serde(default)]
    pub channel: ChannelParams,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub tolerance: Option<Tolerance>,
}

fn default_seed() -> u64 {
    0
}

impl Scenario {
    pub fn weighted_points(&self) -> Vec<WeightedPoint> {
        self.nodes.iter().map(|n| WeightedPoint::new(n.x, n.y, n.w)).collect()
    }

    /// Explicit tolerance if the file set one, else scale-derived defaults.
    pub fn tolerance(&self) -> Tolerance {
        self.tolerance.unwrap_or_else(|| {
            let scale = self
                .nodes
                .iter()
                .map(|n| n.x.abs().max(n.y.abs()))
                .fold(1.0_f64, f64::max);
            Tolerance::for_scale(scale)
        })
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        let field = |name: &str, reason: &str| {
            Err(ScenarioError::InvalidField {
                field: name.to_string(),
                reason: reason.to_string(),
            })
        };
        if self.nodes.len() < 2 {
            return field("nodes", "at least 2 nodes are required");
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if !n.x.is_finite() || !n.y.is_finite() {
                return field(&format!("nodes[{i}]"), "coordinates must be finite");
            }
            if !n.w.is_finite() || n.w < 0.0 {
                return field(&format!("nodes[{i}].w"), "weight must be finite and nonnegative");
            }
        }
        if self.capacity < 2 {
            return field("capacity", "capacity must be at least 2");
        }
        if !self.altitude.is_finite() || self.altitude <= 0.0 {
            return field("altitude", "altitude must be positive and finite");
        }
        if !(self.los.a > 0.0 && self.los.a.is_finite()) {
            return field("los.a", "must be positive and finite");
        }
        if !(self.los.b > 0.0 && self.los.b.is_finite()) {
            return field("los.b", "must be positive and finite");
        }
        if !(self.channel.beta0 > 0.0 && self.channel.beta0.is_finite()) {
            return field("channel.beta0", "must be positive and finite");
        }
        if !(self.channel.alpha_los >= 1.0 && self.channel.alpha_los.is_finite()) {
            return field("channel.alpha_los", "must be >= 1 and finite");
        }
        if !(self.channel.alpha_nlos >= self.channel.alpha_los && self.channel.alpha_nlos.is_finite()) {
            return field("channel.alpha_nlos", "must be >= alpha_los and finite");
        }
        if !(self.channel.mu > 0.0 && self.channel.mu <= 1.0) {
            return field("channel.mu", "must be in (0, 1]");
        }
        if let Some(t) = &self.tolerance {
            if !(t.eps_contain >= 0.0 && t.eps_contain.is_finite()) {
                return field("tolerance.eps_contain", "must be nonnegative and finite");
            }
            if !(t.eps_degenerate > 0.0 && t.eps_degenerate.is_finite()) {
                return field("tolerance.eps_degenerate", "must be positive and finite");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("malformed scenario JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scenario field `{field}`: {reason}")]
    InvalidField { field: String, reason: String },
    #[error("cannot read scenario file: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Algorithm(#[from] CmecError),
}

/// JSON report in input-node order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub circle: CircleOut,
    pub selected: Vec<usize>,
    pub weight_sum: f64,
    pub waypoint: Waypoint3,
    pub per_node: Vec<NodeReport>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleOut {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodeReport {
    pub index: usize,
    pub selected: bool,
    pub distance: f64,
    pub elevation_deg: f64,
    pub p_los: f64,
    pub h_los: f64,
    pub h_nlos: f64,
    pub h_expected: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub min_expected_gain: f64,
    pub mean_expected_gain: f64,
}

pub fn load_scenario(path: &Path) -> Result<Scenario, ScenarioError> {
    let text = std::fs::read_to_string(path)?;
    parse_scenario(&text)
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let scenario: Scenario = serde_json::from_str(text).map_err(|e| ScenarioError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    scenario.validate()?;
    Ok(scenario)
}

pub fn save_scenario(scenario: &Scenario, path: &Path) -> Result<(), std::io::Error> {
    std::fs::write(path, scenario_to_json(scenario))
}

pub fn scenario_to_json(scenario: &Scenario) -> String {
    let mut s = serde_json::to_string_pretty(scenario).expect("scenario serializes");
    s.push('\n');
    s
}

/// Random scenario: `count` nodes uniform in [0, extent]^2 with weights
/// uniform in [0, 1], fully determined by `seed`.
pub fn generate_scenario(count: usize, capacity: usize, extent: f64, seed: Seed) -> Scenario {
    assert!(count >= 2, "a scenario needs at least 2 nodes");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let nodes = (0..count)
        .map(|_| NodeSpec {
            x: rng.random_range(0.0..extent),
            y: rng.random_range(0.0..extent),
            w: rng.random_range(0.0..1.0),
        })
        .collect();
    Scenario {
        nodes,
        capacity: capacity.max(2),
        altitude: 100.0,
        los: LosParams::default(),
        channel: ChannelParams::default(),
        seed: seed.0,
        tolerance: Some(Tolerance::for_scale(extent.max(1.0))),
    }
}

/// Run the full pipeline: constrained coverage circle over the weighted
/// nodes, UAV waypoint above its center, link statistics for every node.
pub fn run_pipeline(scenario: &Scenario) -> Result<Report, PipelineError> {
    let tol = scenario.tolerance();
    let points = scenario.weighted_points();
    let capacity = scenario.capacity.min(points.len());
    let constrained: ConstrainedResult =
        constrained_mec(&points, capacity, Seed(scenario.seed), &tol)?;

    let waypoint = Waypoint3::new(
        constrained.circle.center.x,
        constrained.circle.center.y,
        scenario.altitude,
    );

    let per_node: Vec<NodeReport> = points
        .iter()
        .enumerate()
        .map(|(i, wp)| {
            let stats: LinkStats = link_stats(&waypoint, &wp.point, &scenario.los, &scenario.channel);
            NodeReport {
                index: i,
                selected: constrained.selected.contains(&i),
                distance: stats.distance,
                elevation_deg: stats.elevation_deg,
                p_los: stats.p_los,
                h_los: stats.h_los,
                h_nlos: stats.h_nlos,
                h_expected: stats.h_expected,
            }
        })
        .collect();

    let selected_gains: Vec<f64> = per_node
        .iter()
        .filter(|n| n.selected)
        .map(|n| n.h_expected)
        .collect();
    let summary = Summary {
        min_expected_gain: selected_gains.iter().copied().fold(f64::INFINITY, f64::min),
        mean_expected_gain: selected_gains.iter().sum::<f64>() / selected_gains.len() as f64,
    };

    Ok(Report {
        circle: CircleOut {
            cx: constrained.circle.center.x,
            cy: constrained.circle.center.y,
            r: constrained.circle.radius,
        },
        selected: constrained.selected.clone(),
        weight_sum: constrained.weight_sum,
        waypoint,
        per_node,
        summary,
    })
}

pub fn report_to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}
