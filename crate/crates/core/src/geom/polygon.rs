use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::predicates::{on_segment, orient2d, segments_intersect, signed_area2};
use super::Point2;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Simple polygon with counterclockwise vertices and no three consecutive
/// collinear vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

/// Where a point sits relative to a closed polygonal region.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

impl Polygon {
    /// Validates and normalizes a vertex cycle: repeated and collinear
    /// vertices are dropped, then orientation and simplicity are checked.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let vertices = drop_collinear(vertices);
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon("fewer than 3 non-collinear vertices".into()));
        }
        if signed_area2(&vertices).signum() <= 0 {
            return Err(Error::InvalidPolygon("vertices are not counterclockwise".into()));
        }
        let poly = Polygon { vertices };
        if let Some((i, j)) = poly.first_self_intersection() {
            return Err(Error::InvalidPolygon(format!("edges {i} and {j} intersect")));
        }
        Ok(poly)
    }

    pub(crate) fn new_unchecked(vertices: Vec<Point2>) -> Self {
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(start, end)` pairs, in order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2, &Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> Rational {
        signed_area2(&self.vertices) / Rational::from_int(2)
    }

    pub fn translated(&self, t: &Point2) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|v| v + t).collect() }
    }

    /// `(min corner, max corner)` of the axis-aligned bounding box.
    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            if v.x < lo.x {
                lo.x = v.x.clone();
            }
            if v.y < lo.y {
                lo.y = v.y.clone();
            }
            if v.x > hi.x {
                hi.x = v.x.clone();
            }
            if v.y > hi.y {
                hi.y = v.y.clone();
            }
        }
        (lo, hi)
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            orient2d(&self.vertices[i], &self.vertices[(i + 1) % n], &self.vertices[(i + 2) % n]) > 0
        })
    }

    pub fn locate(&self, p: &Point2) -> Location {
        point_in_polygon(p, self)
    }

    fn first_self_intersection(&self) -> Option<(usize, usize)> {
        let n = self.vertices.len();
        for i in 0..n {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let (c, d) = (&self.vertices[j], &self.vertices[(j + 1) % n]);
                if segments_intersect(a, b, c, d) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

fn drop_collinear(mut vertices: Vec<Point2>) -> Vec<Point2> {
    vertices.dedup();
    while vertices.len() > 1 && vertices.first() == vertices.last() {
        vertices.pop();
    }
    loop {
        let n = vertices.len();
        if n < 3 {
            return vertices;
        }
        let drop = (0..n).find(|&i| {
            orient2d(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n]) == 0
        });
        match drop {
            Some(i) => {
                vertices.remove(i);
            }
            None => return vertices,
        }
    }
}

/// Exact classification of `p` against the closed region bounded by `poly`.
pub fn point_in_polygon(p: &Point2, poly: &Polygon) -> Location {
    let mut inside = false;
    for (a, b) in poly.edges() {
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        let a_above = a.y > p.y;
        let b_above = b.y > p.y;
        if a_above != b_above {
            // the edge straddles the horizontal through p; count it when the
            // crossing lies to the right of p
            let o = orient2d(a, b, p);
            if (b_above && o > 0) || (!b_above && o < 0) {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

impl Serialize for Polygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vertices = Vec::<Point2>::deserialize(deserializer)?;
        Polygon::new(vertices).map_err(serde::de::Error::custom)
    }
}

/// Convex polygon: a [`Polygon`] whose every vertex is a strict left turn.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct ConvexPolygon(Polygon);

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let poly = Polygon::new(vertices)?;
        ConvexPolygon::try_from(poly)
    }

    pub fn as_polygon(&self) -> &Polygon {
        &self.0
    }

    pub fn into_polygon(self) -> Polygon {
        self.0
    }

    pub fn vertices(&self) -> &[Point2] {
        self.0.vertices()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_hull_unchecked(vertices: Vec<Point2>) -> Self {
        ConvexPolygon(Polygon::new_unchecked(vertices))
    }
}

impl TryFrom<Polygon> for ConvexPolygon {
    type Error = Error;

    fn try_from(poly: Polygon) -> Result<Self> {
        if !poly.is_convex() {
            return Err(Error::InvalidPolygon("polygon is not convex".into()));
        }
        Ok(ConvexPolygon(poly))
    }
}

impl<'de> Deserialize<'de> for ConvexPolygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let poly = Polygon::deserialize(deserializer)?;
        ConvexPolygon::try_from(poly).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn unit_square() -> Polygon {
        Polygon::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap()
    }

    #[test]
    fn locate_examples() {
        let sq = unit_square();
        let half = Rational::frac(1, 2);
        assert_eq!(sq.locate(&Point2::new(half.clone(), half.clone())), Location::Inside);
        assert_eq!(sq.locate(&Point2::new(Rational::zero(), half)), Location::Boundary);
        assert_eq!(sq.locate(&p(2, 0)), Location::Outside);
        assert_eq!(sq.locate(&p(1, 1)), Location::Boundary);
        assert_eq!(sq.locate(&p(-1, 0)), Location::Outside);
    }

    #[test]
    fn normalization() {
        // collinear midpoint and a repeated closing vertex are dropped
        let poly = Polygon::new(vec![p(0, 0), p(1, 0), p(2, 0), p(2, 2), p(0, 2), p(0, 0)]).unwrap();
        assert_eq!(poly.len(), 4);
        assert_eq!(poly.area(), Rational::from_int(4));
    }

    #[test]
    fn rejects_bad_polygons() {
        // clockwise
        assert!(Polygon::new(vec![p(0, 0), p(0, 1), p(1, 1), p(1, 0)]).is_err());
        // bow tie: net area zero
        assert!(Polygon::new(vec![p(0, 0), p(2, 2), p(2, 0), p(0, 2)]).is_err());
        // self-touching: a vertex on a non-adjacent edge
        assert!(Polygon::new(vec![p(0, 0), p(4, 0), p(4, 4), p(2, 0), p(0, 4)]).is_err());
        // all collinear
        assert!(Polygon::new(vec![p(0, 0), p(1, 1), p(2, 2)]).is_err());
    }

    #[test]
    fn concave_is_not_convex() {
        let l_shape =
            Polygon::new(vec![p(0, 0), p(2, 0), p(2, 1), p(1, 1), p(1, 2), p(0, 2)]).unwrap();
        assert!(!l_shape.is_convex());
        assert!(ConvexPolygon::try_from(l_shape).is_err());
        assert!(ConvexPolygon::try_from(unit_square()).is_ok());
    }
}
