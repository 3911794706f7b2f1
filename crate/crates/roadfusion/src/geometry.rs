//! Planar metric computations over geographic coordinates.
//!
//! Everything downstream measures in meters on a city-scale extent, so all
//! distances go through a single equirectangular projection anchored at a
//! reference latitude ([`LocalFrame`]). Within a ~10 km box at |lat| <= 60°
//! the projection error against the great-circle distance stays below 0.5%,
//! which is far below GPS noise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mean Earth radius in meters.
pub const EARTH_RADIUS_M: f64 = 6_371_000.0;

/// A WGS-style coordinate pair in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeoPoint {
    pub lat: f64,
    pub lon: f64,
}

impl GeoPoint {
    pub fn new(lat: f64, lon: f64) -> Result<Self> {
        if !lat.is_finite() || !lon.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "non-finite coordinate ({lat}, {lon})"
            )));
        }
        if !(-90.0..=90.0).contains(&lat) || !(-180.0..=180.0).contains(&lon) {
            return Err(Error::InvalidArgument(format!(
                "coordinate out of range ({lat}, {lon})"
            )));
        }
        Ok(GeoPoint { lat, lon })
    }
}

/// A point in the projected plane, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub fn distance(&self, other: &PlanarPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Equirectangular projection frame: x = R·λ·cos(ref_lat), y = R·φ.
///
/// The reference latitude should sit near the data's mean latitude; the
/// constructor rejects |ref_lat| >= 89° where the cosine degenerates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalFrame {
    ref_lat: f64,
    cos_ref: f64,
}

impl LocalFrame {
    pub fn new(ref_lat: f64) -> Result<Self> {
        if !ref_lat.is_finite() || ref_lat.abs() >= 89.0 {
            return Err(Error::InvalidArgument(format!(
                "reference latitude {ref_lat} outside (-89, 89)"
            )));
        }
        Ok(LocalFrame {
            ref_lat,
            cos_ref: ref_lat.to_radians().cos(),
        })
    }

    /// Frame anchored at the mean latitude of `points` (0° when empty).
    pub fn for_points<I: IntoIterator<Item = GeoPoint>>(points: I) -> Self {
        let mut sum = 0.0;
        let mut n = 0u64;
        for p in points {
            sum += p.lat;
            n += 1;
        }
        let ref_lat = if n == 0 { 0.0 } else { sum / n as f64 };
        // Mean of valid latitudes is always in range.
        LocalFrame::new(ref_lat.clamp(-88.0, 88.0)).expect("mean latitude in range")
    }

    pub fn ref_lat(&self) -> f64 {
        self.ref_lat
    }

    pub fn project(&self, p: GeoPoint) -> PlanarPoint {
        PlanarPoint {
            x: EARTH_RADIUS_M * p.lon.to_radians() * self.cos_ref,
            y: EARTH_RADIUS_M * p.lat.to_radians(),
        }
    }

    pub fn unproject(&self, p: PlanarPoint) -> GeoPoint {
        GeoPoint {
            lat: (p.y / EARTH_RADIUS_M).to_degrees(),
            lon: (p.x / (EARTH_RADIUS_M * self.cos_ref)).to_degrees(),
        }
    }

    /// Great-circle-equivalent distance between two coordinates in meters.
    pub fn distance(&self, a: GeoPoint, b: GeoPoint) -> f64 {
        self.project(a).distance(&self.project(b))
    }
}

/// An ordered, non-empty sequence of coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    points: Vec<GeoPoint>,
}

impl Polyline {
    pub fn new(points: Vec<GeoPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("empty polyline".into()));
        }
        Ok(Polyline { points })
    }

    pub fn points(&self) -> &[GeoPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Distance from `u` to the closest point of segment `ab` in the projected
/// plane. Segments that collapse under projection are treated as points.
pub fn point_to_segment(u: GeoPoint, a: GeoPoint, b: GeoPoint, frame: &LocalFrame) -> f64 {
    let pu = frame.project(u);
    let pa = frame.project(a);
    let pb = frame.project(b);
    planar_point_to_segment(pu, pa, pb)
}

pub(crate) fn planar_point_to_segment(u: PlanarPoint, a: PlanarPoint, b: PlanarPoint) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len_sq = dx * dx + dy * dy;
    if len_sq == 0.0 {
        return u.distance(&a);
    }
    let t = (((u.x - a.x) * dx + (u.y - a.y) * dy) / len_sq).clamp(0.0, 1.0);
    let foot = PlanarPoint {
        x: a.x + t * dx,
        y: a.y + t * dy,
    };
    u.distance(&foot)
}

/// Minimum distance between a point and a path: the min over the path's
/// segments (or its sole vertex).
pub fn point_to_path(u: GeoPoint, p: &Polyline, frame: &LocalFrame) -> f64 {
    let pts = p.points();
    if pts.len() == 1 {
        return frame.distance(u, pts[0]);
    }
    pts.windows(2)
        .map(|w| point_to_segment(u, w[0], w[1], frame))
        .fold(f64::INFINITY, f64::min)
}

/// Path distance between two polylines: the smaller of the two directed
/// max-deviation values, where the max ranges over a polyline's vertices
/// and the inner distance is the full point-to-path distance.
///
/// Vertex evaluation is exact for graph-derived paths (straight edges):
/// a deviating segment always exposes at least one deviating endpoint.
pub fn path_distance(p0: &Polyline, p1: &Polyline, frame: &LocalFrame) -> f64 {
    let d01 = directed_deviation(p0, p1, frame);
    let d10 = directed_deviation(p1, p0, frame);
    d01.min(d10)
}

fn directed_deviation(from: &Polyline, to: &Polyline, frame: &LocalFrame) -> f64 {
    from.points()
        .iter()
        .map(|&u| point_to_path(u, to, frame))
        .fold(0.0, f64::max)
}

/// Sum of projected segment lengths; 0 for a single point.
pub fn polyline_length(p: &Polyline, frame: &LocalFrame) -> f64 {
    p.points()
        .windows(2)
        .map(|w| frame.distance(w[0], w[1]))
        .sum()
}

/// Clockwise angle from north of the vector `a -> b`, in [0, 360).
/// Returns `None` when the points coincide after projection.
pub fn bearing(a: GeoPoint, b: GeoPoint, frame: &LocalFrame) -> Option<f64> {
    let pa = frame.project(a);
    let pb = frame.project(b);
    let dx = pb.x - pa.x;
    let dy = pb.y - pa.y;
    if dx == 0.0 && dy == 0.0 {
        return None;
    }
    let deg = dx.atan2(dy).to_degrees();
    Some(deg.rem_euclid(360.0))
}

/// Absolute angular difference between two headings, in [0, 180].
pub fn angle_diff_deg(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(360.0);
    d.min(360.0 - d)
}
