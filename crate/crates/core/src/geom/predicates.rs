//! Exact predicates and squared distances.

use std::cmp::Ordering;

use super::Point2;
use crate::rational::Rational;

/// Sign of `(b - a) x (c - a)`: `1` for a left turn, `-1` for a right turn,
/// `0` when collinear.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> i32 {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// `p` lies on the closed segment `ab` (which may be degenerate).
pub fn on_segment(p: &Point2, a: &Point2, b: &Point2) -> bool {
    orient2d(a, b, p) == 0 && in_box(p, a, b)
}

fn in_box(p: &Point2, a: &Point2, b: &Point2) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let o1 = orient2d(a, b, c);
    let o2 = orient2d(a, b, d);
    let o3 = orient2d(c, d, a);
    let o4 = orient2d(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && in_box(c, a, b))
        || (o2 == 0 && in_box(d, a, b))
        || (o3 == 0 && in_box(a, c, d))
        || (o4 == 0 && in_box(b, c, d))
}

/// The relative interiors of `ab` and `cd` cross at a single point
/// (a transversal crossing, no touching or overlap).
pub fn segments_cross_properly(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    orient2d(a, b, c) * orient2d(a, b, d) < 0 && orient2d(c, d, a) * orient2d(c, d, b) < 0
}

/// Exact squared distance from `p` to the closed segment `ab`.
pub fn point_segment_distance_sq(p: &Point2, a: &Point2, b: &Point2) -> Rational {
    let ab = b - a;
    let ap = p - a;
    let len_sq = ab.norm_sq();
    if len_sq.is_zero() {
        return ap.norm_sq();
    }
    let t = ap.dot(&ab);
    if t.signum() <= 0 {
        return ap.norm_sq();
    }
    if t >= len_sq {
        return (p - b).norm_sq();
    }
    let c = ab.cross(&ap);
    &(&c * &c) / &len_sq
}

/// Exact squared distance from `p` to the full line through `origin` with
/// nonzero direction `dir`.
pub fn point_line_distance_sq(p: &Point2, origin: &Point2, dir: &Point2) -> Rational {
    let c = dir.cross(&(p - origin));
    &(&c * &c) / &dir.norm_sq()
}

/// Twice the signed area of the polygon with the given vertex cycle.
pub fn signed_area2(vertices: &[Point2]) -> Rational {
    let n = vertices.len();
    (0..n)
        .map(|i| vertices[i].cross(&vertices[(i + 1) % n]))
        .sum()
}
