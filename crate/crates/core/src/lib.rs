//! Goal-conditioned object importance estimation for intersection driving
//! scenes, end to end at desk scale.
//!
//! The pipeline: synthetic intersection scenarios stand in for recorded
//! drives ([`scenario`]), per-frame boxes are corrupted and re-associated
//! into tracklet proposals ([`tracklets`]), per-object feature sequences are
//! assembled together with the ego vehicle's path-curvature goal encoding
//! ([`features`], [`path_geometry`]), a recurrent classifier scores each
//! proposal ([`model`]), and ranked proposals are measured with per-goal
//! average precision plus a brake-fusion experiment ([`evaluation`],
//! [`pipeline`]).

pub mod dataset;
pub mod evaluation;
pub mod features;
pub mod geom;
pub mod model;
pub mod path_geometry;
pub mod pipeline;
pub mod scenario;
pub mod textio;
pub mod tracklets;

/// One distance unit in meters: path points and CAN records are sampled per
/// distance unit.
pub const DISTANCE_UNIT_M: f64 = 1.0 / 3.6;

/// Default input clip length in frames.
pub const DEFAULT_CLIP_LEN: usize = 30;

/// Default goal-encoding horizon in distance units.
pub const DEFAULT_HORIZON: usize = 40;

/// Simulation and annotation frame rate in Hz.
pub const FRAME_RATE: f64 = 30.0;
