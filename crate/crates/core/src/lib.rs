//! Constrained smallest-enclosing-circle UAV placement over weighted sensor
//! nodes, evaluated under a probabilistic LoS air-to-ground channel.

pub mod channel;
pub mod cmec;
pub mod geom;
pub mod mec;
pub mod scenario;
pub mod svg;

pub use channel::{ChannelParams, LinkStats, LosParams, Waypoint3};
pub use cmec::{ConstrainedResult, WeightedPoint};
pub use geom::{Circle, Point2, Tolerance};
pub use mec::{MecResult, Seed};
pub use scenario::{Report, Scenario};
