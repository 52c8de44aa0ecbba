//! Planned-path goal geometry: vehicle-centric path representation, signed
//! inverse radius of curvature, and the per-distance-unit IR profile that
//! encodes where the ego vehicle is going.
//!
//! Sign convention throughout: negative on left turns, positive on right
//! turns, zero on straights. Curvature values are in inverse distance units
//! (one distance unit is 1/3.6 meters).

use crate::geom::Vec2;
use crate::DISTANCE_UNIT_M;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PathError {
    #[error("path too short: need {needed} points/records, have {have}")]
    PathTooShort { needed: usize, have: usize },
    #[error("degenerate polyline: consecutive points coincide at index {0}")]
    DegeneratePolyline(usize),
    #[error("index {index} lacks a stencil neighbor (valid range 1..={max})")]
    IndexOutOfStencil { index: usize, max: usize },
    #[error("local x-parametrization degenerates at index {0}")]
    VerticalTangent(usize),
    #[error("velocity <= 0 at record {0}")]
    ZeroVelocity(usize),
}

/// A planned path in the vehicle-centric frame at one time step: the first
/// point is the vehicle position, +y is forward, +x is to the right, and
/// consecutive points are `spacing` distance units apart along the arc.
#[derive(Debug, Clone, PartialEq)]
pub struct PlannedPath {
    /// Sampled points in meters, vehicle-centric.
    pub points: Vec<Vec2>,
    /// Arc-length gap between consecutive points, in distance units.
    pub spacing: f64,
}

impl PlannedPath {
    /// Number of points required to evaluate an IR profile of horizon `l`.
    pub fn points_needed(horizon: usize) -> usize {
        horizon + 3
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The goal encoding: `values[l-1]` is the signed inverse radius of
/// curvature of the planned path at the next `l` distance units, for
/// `l = 1..=horizon`.
#[derive(Debug, Clone, PartialEq)]
pub struct IrProfile {
    pub values: Vec<f64>,
}

impl IrProfile {
    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    pub fn zeros(horizon: usize) -> Self {
        Self {
            values: vec![0.0; horizon],
        }
    }
}

/// One CAN-style record per distance unit ahead of the current position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanRecord {
    /// Degrees per second; negative when turning left.
    pub yaw_rate_deg_s: f64,
    /// Kilometers per hour; must stay positive.
    pub velocity_kmh: f64,
}

/// Yaw-rate/velocity trace indexed per distance unit: `records[l-1]` holds
/// the state at the next `l` distance units.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CanTrace {
    pub records: Vec<CanRecord>,
}

/// Resample a world-frame waypoint polyline (meters) at uniform arc-length
/// steps of `spacing` distance units and normalize into the vehicle-centric
/// frame: first point at the origin, initial direction mapped to +y.
pub fn resample_by_arclength(waypoints: &[Vec2], spacing: f64) -> Result<PlannedPath, PathError> {
    if waypoints.len() < 2 {
        return Err(PathError::PathTooShort {
            needed: 2,
            have: waypoints.len(),
        });
    }
    assert!(spacing > 0.0, "spacing must be positive");
    let step_m = spacing * DISTANCE_UNIT_M;

    let mut seg_lens = Vec::with_capacity(waypoints.len() - 1);
    for (i, pair) in waypoints.windows(2).enumerate() {
        let len = pair[1].dist(pair[0]);
        if len <= 0.0 {
            return Err(PathError::DegeneratePolyline(i));
        }
        seg_lens.push(len);
    }
    let total: f64 = seg_lens.iter().sum();
    let count = ((total / step_m) + 1e-9).floor() as usize + 1;
    if count < 2 {
        return Err(PathError::PathTooShort { needed: 2, have: 1 });
    }

    // Arc walk: emit a point every step_m meters along the polyline.
    let mut resampled = Vec::with_capacity(count);
    let mut seg = 0usize;
    let mut seg_start_arc = 0.0;
    for k in 0..count {
        let target = (k as f64 * step_m).min(total);
        while seg + 1 < seg_lens.len() && seg_start_arc + seg_lens[seg] < target - 1e-12 {
            seg_start_arc += seg_lens[seg];
            seg += 1;
        }
        let t = ((target - seg_start_arc) / seg_lens[seg]).clamp(0.0, 1.0);
        let a = waypoints[seg];
        let b = waypoints[seg + 1];
        resampled.push(a.add(b.sub(a).scale(t)));
    }

    // Vehicle frame: translate to the first point, rotate the initial
    // direction onto +y (so +x points to the vehicle's right).
    let origin = resampled[0];
    let d0 = waypoints[1].sub(waypoints[0]);
    let forward = d0.scale(1.0 / d0.norm());
    let right = Vec2::new(forward.y, -forward.x);
    let points = resampled
        .iter()
        .map(|p| {
            let v = p.sub(origin);
            Vec2::new(v.dot(right), v.dot(forward))
        })
        .collect();

    Ok(PlannedPath { points, spacing })
}

/// Signed curvature at `path.points[index]` in inverse distance units:
/// positive for right turns, negative for left turns, exactly zero when the
/// three stencil points are collinear.
///
/// The three-point stencil is rotated into a local frame whose x-axis is the
/// chord through the outer points, then differentiated as a parabola; this
/// keeps the y(x) parametrization well conditioned regardless of path
/// direction.
pub fn signed_curvature(path: &PlannedPath, index: usize) -> Result<f64, PathError> {
    let n = path.points.len();
    if index == 0 || index + 1 >= n {
        return Err(PathError::IndexOutOfStencil {
            index,
            max: n.saturating_sub(2),
        });
    }
    let p1 = path.points[index - 1];
    let p2 = path.points[index];
    let p3 = path.points[index + 1];

    // Collinear stencil short-circuit keeps straight segments exactly zero.
    let area2 = p2.sub(p1).cross(p3.sub(p1));
    if area2.abs() / 2.0 < 1e-12 {
        return Ok(0.0);
    }

    let chord = p3.sub(p1);
    let chord_len = chord.norm();
    if chord_len < 1e-12 {
        return Err(PathError::VerticalTangent(index));
    }
    let t = chord.scale(1.0 / chord_len);
    let nrm = Vec2::new(-t.y, t.x);
    let mid = p2.sub(p1);
    let x2 = mid.dot(t);
    let y2 = mid.dot(nrm);
    if x2 <= 0.0 || x2 >= chord_len {
        return Err(PathError::VerticalTangent(index));
    }

    // Parabola through (0,0), (x2,y2), (chord_len,0).
    let a = y2 / (x2 * (x2 - chord_len));
    let slope = a * (2.0 * x2 - chord_len);
    let kappa_ccw = 2.0 * a / (1.0 + slope * slope).powf(1.5);

    // Counterclockwise bending is a left turn, which must come out negative.
    Ok(-kappa_ccw * DISTANCE_UNIT_M)
}

/// IR profile of a planned path: entry `l` is the signed curvature at the
/// point `l` distance units ahead, `l = 1..=horizon`.
pub fn ir_profile_from_path(path: &PlannedPath, horizon: usize) -> Result<IrProfile, PathError> {
    let needed = PlannedPath::points_needed(horizon);
    let max_index = (horizon as f64 / path.spacing).round() as usize;
    if path.points.len() < needed || max_index + 2 > path.points.len() {
        return Err(PathError::PathTooShort {
            needed,
            have: path.points.len(),
        });
    }
    let mut values = Vec::with_capacity(horizon);
    for l in 1..=horizon {
        let index = (l as f64 / path.spacing).round() as usize;
        values.push(signed_curvature(path, index)?);
    }
    Ok(IrProfile { values })
}

/// Offline IR approximation from CAN data: `alpha * yaw_rate / velocity`
/// per distance unit, mixing degrees per second over kilometers per hour as
/// the convention demands.
pub fn ir_profile_from_can(
    trace: &CanTrace,
    alpha: f64,
    horizon: usize,
) -> Result<IrProfile, PathError> {
    if trace.records.len() < horizon {
        return Err(PathError::PathTooShort {
            needed: horizon,
            have: trace.records.len(),
        });
    }
    let mut values = Vec::with_capacity(horizon);
    for (i, rec) in trace.records[..horizon].iter().enumerate() {
        if rec.velocity_kmh <= 0.0 {
            return Err(PathError::ZeroVelocity(i));
        }
        values.push(alpha * rec.yaw_rate_deg_s / rec.velocity_kmh);
    }
    Ok(IrProfile { values })
}
