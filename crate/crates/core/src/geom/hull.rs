use super::predicates::orient2d;
use super::{ConvexPolygon, Point2};
use crate::error::{Error, Result};

/// Convex hull by Andrew's monotone chain with exact turns. Collinear
/// boundary points are not kept as vertices.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexPolygon> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
    }

    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && orient2d(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orient2d(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("all points are collinear".into()));
    }
    Ok(ConvexPolygon::from_hull_unchecked(lower))
}
