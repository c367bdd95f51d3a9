//! Exact planar geometry: points, intervals, polygons and the predicates
//! everything else is built on.

mod hull;
mod interval;
mod point;
mod polygon;
mod predicates;

pub use hull::convex_hull;
pub use interval::{Interval, IntervalSet};
pub use point::Point2;
pub use polygon::{point_in_polygon, ConvexPolygon, Location, Polygon};
pub use predicates::{
    on_segment, orient2d, point_line_distance_sq, point_segment_distance_sq, segments_cross_properly,
    segments_intersect, signed_area2,
};
