//! Containment under translation: the comb gadget that lifts SegContPnt to
//! simple polygons, the exact fixed-translation containment predicate, a
//! finite candidate solver for simple polygons and a 2-D linear-programming
//! solver for convex ones.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{on_segment, orient2d, point_in_polygon, ConvexPolygon, Location, Point2, Polygon};
use crate::linear::SegContPntInstance;
use crate::rational::Rational;

/// Width given to each (possibly degenerate) tooth of a comb.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CombParams {
    pub tooth_width: Rational,
}

impl CombParams {
    /// A quarter of the smallest gap between consecutive intervals of `Q`
    /// or consecutive distinct points of `P` (1 when there is no gap).
    pub fn default_for(inst: &SegContPntInstance) -> CombParams {
        let gap = min_gap(inst).unwrap_or_else(|| Rational::from_int(4));
        CombParams { tooth_width: gap / Rational::from_int(4) }
    }
}

fn sorted_points(inst: &SegContPntInstance) -> Vec<Rational> {
    let mut pts = inst.p().to_vec();
    pts.sort();
    pts.dedup();
    pts
}

fn min_gap(inst: &SegContPntInstance) -> Option<Rational> {
    let pts = sorted_points(inst);
    let p_gap = pts.windows(2).map(|w| &w[1] - &w[0]).min();
    match (p_gap, inst.q().min_gap()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

/// A translation `(u, v)` placing the inner polygon inside the outer one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct PlacementWitness {
    pub t: Point2,
}

/// `COMB(S) = S x [0, 1] ∪ I(S) x [-1, 0]` for sorted disjoint intervals
/// of positive length.
fn comb(teeth: &[(Rational, Rational)]) -> Result<Polygon> {
    let (first, last) = match (teeth.first(), teeth.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::DegenerateInput("comb of an empty set".into())),
    };
    let one = Rational::one();
    let zero = Rational::zero();
    let minus_one = -Rational::one();
    let mut vertices = vec![
        Point2::new(first.0.clone(), minus_one.clone()),
        Point2::new(last.1.clone(), minus_one),
    ];
    for k in (0..teeth.len()).rev() {
        let (lo, hi) = &teeth[k];
        vertices.push(Point2::new(hi.clone(), one.clone()));
        vertices.push(Point2::new(lo.clone(), one.clone()));
        if k > 0 {
            vertices.push(Point2::new(lo.clone(), zero.clone()));
            vertices.push(Point2::new(teeth[k - 1].1.clone(), zero.clone()));
        }
    }
    Polygon::new(vertices)
}

/// The comb of an interval set, without fattening. Every interval must have
/// positive length.
pub fn comb_of_intervals(s: &crate::geom::IntervalSet) -> Result<Polygon> {
    if s.iter().any(|iv| iv.is_point()) {
        return Err(Error::DegenerateInput("comb teeth must have positive width".into()));
    }
    let teeth: Vec<_> = s.iter().map(|iv| (iv.lo().clone(), iv.hi().clone())).collect();
    comb(&teeth)
}

/// Builds `(C_A, C_B)`: each point `x` of `P` becomes the tooth `[x, x + w]`
/// and each interval `[l, r]` of `Q` becomes `[l, r + w]`. Since
/// `[p + u, p + u + w] ⊆ [l, r + w]` iff `l <= p + u <= r`, the combs admit
/// the same horizontal shifts as the 1-D instance.
pub fn build_comb_pair(inst: &SegContPntInstance, params: &CombParams) -> Result<(Polygon, Polygon)> {
    let w = &params.tooth_width;
    if w.signum() <= 0 {
        return Err(Error::InvalidFattening(format!("width {w} is not positive")));
    }
    if let Some(gap) = min_gap(inst) {
        if w * &Rational::from_int(2) >= gap {
            return Err(Error::InvalidFattening(format!(
                "width {w} is not below half the minimum gap {gap}"
            )));
        }
    }
    let a_teeth: Vec<_> = sorted_points(inst).into_iter().map(|x| (x.clone(), &x + w)).collect();
    let b_teeth: Vec<_> = inst.q().iter().map(|iv| (iv.lo().clone(), iv.hi() + w)).collect();
    Ok((comb(&a_teeth)?, comb(&b_teeth)?))
}

/// Closed containment `P + t ⊆ Q`.
///
/// For a simple `Q` this holds iff the boundary of `P + t` lies in `Q`. Each
/// edge of `P + t` is cut at every point where it meets an edge of `Q`;
/// between cuts the edge cannot cross the boundary of `Q`, so testing the
/// cut points and the midpoints between them decides it exactly.
pub fn polygon_contains_at(p: &Polygon, t: &Point2, q: &Polygon) -> bool {
    let moved = p.translated(t);
    if moved.vertices().iter().any(|v| point_in_polygon(v, q) == Location::Outside) {
        return false;
    }
    let inside = moved.edges().all(|(a, b)| edge_inside(a, b, q));
    inside
}

fn edge_inside(a: &Point2, b: &Point2, q: &Polygon) -> bool {
    let dir = b - a;
    let len_sq = dir.norm_sq();
    let mut cuts: Vec<Rational> = vec![Rational::zero(), Rational::one()];
    for (c, d) in q.edges() {
        let oc = orient2d(a, b, c);
        let od = orient2d(a, b, d);
        if oc == 0 && od == 0 {
            // collinear: the overlap is bounded by projections of c and d
            for e in [c, d] {
                let s = (e - a).dot(&dir) / &len_sq;
                if s.signum() > 0 && s < Rational::one() {
                    cuts.push(s);
                }
            }
            continue;
        }
        if oc * od > 0 {
            continue;
        }
        let oa = orient2d(c, d, a);
        let ob = orient2d(c, d, b);
        if oa * ob > 0 {
            continue;
        }
        let e = d - c;
        let denom = dir.cross(&e);
        if denom.is_zero() {
            continue;
        }
        let s = (c - a).cross(&e) / denom;
        if s.signum() > 0 && s < Rational::one() {
            cuts.push(s);
        }
    }
    cuts.sort();
    cuts.dedup();
    let at = |s: &Rational| a + &dir.scale(s);
    for w in cuts.windows(2) {
        let mid = at(&w[0].midpoint(&w[1]));
        if point_in_polygon(&mid, q) == Location::Outside {
            return false;
        }
        let cut = at(&w[1]);
        if point_in_polygon(&cut, q) == Location::Outside {
            return false;
        }
    }
    true
}

/// The line `normal . t = rhs` in translation space, with the normal
/// scaled so its first nonzero coordinate is 1 (parallel lines then share
/// the normal exactly).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct ContactLine {
    normal: (Rational, Rational),
    rhs: Rational,
}

/// Translations `t` for which `vertex + t` lies on the line through `a`
/// with direction `dir`: `cross(dir, vertex + t - a) = 0`.
fn contact_line(dir: &Point2, a: &Point2, vertex: &Point2) -> ContactLine {
    let (nx, ny) = (-&dir.y, dir.x.clone());
    let rhs = dir.cross(&(a - vertex));
    let scale = if !nx.is_zero() { nx.clone() } else { ny.clone() };
    ContactLine { normal: (&nx / &scale, &ny / &scale), rhs: rhs / scale }
}

fn intersect(l1: &ContactLine, l2: &ContactLine) -> Option<Point2> {
    let (a1, b1) = &l1.normal;
    let (a2, b2) = &l2.normal;
    let det = a1 * b2 - b1 * a2;
    if det.is_zero() {
        return None;
    }
    let x = (&l1.rhs * b2 - b1 * &l2.rhs) / &det;
    let y = (a1 * &l2.rhs - &l1.rhs * a2) / det;
    Some(Point2::new(x, y))
}

/// Box of translations that keep the bounding box of `P` inside that of
/// `Q`; a necessary condition for containment.
fn translation_box(p: &Polygon, q: &Polygon) -> Option<(Point2, Point2)> {
    let (plo, phi) = p.bbox();
    let (qlo, qhi) = q.bbox();
    let lo = &qlo - &plo;
    let hi = &qhi - &phi;
    (lo.x <= hi.x && lo.y <= hi.y).then_some((lo, hi))
}

fn in_box(t: &Point2, lo: &Point2, hi: &Point2) -> bool {
    lo.x <= t.x && t.x <= hi.x && lo.y <= t.y && t.y <= hi.y
}

/// Lexicographically smallest translation `t` with `P + t ⊆ Q`.
///
/// The feasible set is closed and bounded; at its lexicographic minimum
/// two non-parallel contact constraints are tight (a vertex of one polygon
/// on the supporting line of an edge of the other). All such line
/// intersections and all vertex-to-vertex translations are enumerated,
/// filtered by the bounding-box condition and tested in increasing order.
pub fn solve_polycont(p: &Polygon, q: &Polygon) -> Option<PlacementWitness> {
    if p.area() > q.area() {
        return None;
    }
    let (lo, hi) = translation_box(p, q)?;

    let mut groups: HashMap<(Rational, Rational), BTreeSet<Rational>> = HashMap::new();
    let mut add = |line: ContactLine| {
        groups.entry(line.normal).or_default().insert(line.rhs);
    };
    for (c, d) in q.edges() {
        let dir = d - c;
        for v in p.vertices() {
            add(contact_line(&dir, c, v));
        }
    }
    for (a, b) in p.edges() {
        let dir = b - a;
        for w in q.vertices() {
            // w on the line through a + t: cross(dir, w - a - t) = 0
            let flipped = contact_line(&dir, a, w);
            add(ContactLine { normal: flipped.normal, rhs: -flipped.rhs });
        }
    }

    let lines: Vec<Vec<ContactLine>> = groups
        .into_iter()
        .map(|(normal, rhss)| rhss.into_iter().map(|rhs| ContactLine { normal: normal.clone(), rhs }).collect())
        .collect();
    let mut candidates: BTreeSet<Point2> = BTreeSet::new();
    for (gi, g1) in lines.iter().enumerate() {
        for g2 in &lines[gi + 1..] {
            for l1 in g1 {
                for l2 in g2 {
                    if let Some(t) = intersect(l1, l2) {
                        if in_box(&t, &lo, &hi) {
                            candidates.insert(t);
                        }
                    }
                }
            }
        }
    }
    for v in p.vertices() {
        for w in q.vertices() {
            let t = w - v;
            if in_box(&t, &lo, &hi) {
                candidates.insert(t);
            }
        }
    }
    candidates
        .into_iter()
        .find(|t| polygon_contains_at(p, t, q))
        .map(|t| PlacementWitness { t })
}

/// Half-plane `normal . t >= rhs` in translation space.
#[derive(Clone, Debug)]
struct HalfPlane {
    normal: Point2,
    rhs: Rational,
}

impl HalfPlane {
    fn holds(&self, t: &Point2) -> bool {
        self.normal.dot(t) >= self.rhs
    }
}

/// Lexicographically smallest translation with `P + t ⊆ Q` for convex
/// polygons.
///
/// For each edge of `Q` with direction `u` starting at `c`, containment of
/// every vertex reads `cross(u, t) >= cross(u, c) - min_p cross(u, p)`. The
/// minimizing vertex of `P` advances monotonically as the edges of `Q` turn
/// counterclockwise, so all bounds cost O(n + m). The resulting 2-D
/// feasibility problem (plus the implied bounding-box constraints) is
/// solved by randomized incremental linear programming with a fixed seed,
/// in expected linear time.
pub fn solve_cpct(p: &ConvexPolygon, q: &ConvexPolygon) -> Option<PlacementWitness> {
    let (lo, hi) = translation_box(p.as_polygon(), q.as_polygon())?;
    let pv = p.vertices();
    let n = pv.len();

    let mut constraints: Vec<HalfPlane> = Vec::with_capacity(q.len());
    let mut cursor: Option<usize> = None;
    for (c, d) in q.as_polygon().edges() {
        let u = d - c;
        let value = |i: usize| u.cross(&pv[i]);
        let mut best = match cursor {
            Some(i) => i,
            None => (0..n).min_by(|&i, &j| value(i).cmp(&value(j))).expect("non-empty"),
        };
        let mut steps = 0;
        while steps < n && value((best + 1) % n) < value(best) {
            best = (best + 1) % n;
            steps += 1;
        }
        cursor = Some(best);
        constraints.push(HalfPlane {
            normal: Point2::new(-&u.y, u.x.clone()),
            rhs: u.cross(c) - value(best),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    constraints.shuffle(&mut rng);
    lexmin_lp(&constraints, &lo, &hi).map(|t| PlacementWitness { t })
}

/// Seidel-style incremental LP minimizing `(x, y)` lexicographically over
/// the box `[lo, hi]` intersected with the half-planes.
fn lexmin_lp(constraints: &[HalfPlane], lo: &Point2, hi: &Point2) -> Option<Point2> {
    let one = Rational::one();
    let zero = Rational::zero();
    let mut active: Vec<HalfPlane> = vec![
        HalfPlane { normal: Point2::new(one.clone(), zero.clone()), rhs: lo.x.clone() },
        HalfPlane { normal: Point2::new(-&one, zero.clone()), rhs: -&hi.x },
        HalfPlane { normal: Point2::new(zero.clone(), one.clone()), rhs: lo.y.clone() },
        HalfPlane { normal: Point2::new(zero, -&one), rhs: -&hi.y },
    ];
    let mut opt = lo.clone();
    for h in constraints {
        if !h.holds(&opt) {
            opt = lexmin_on_line(h, &active)?;
        }
        active.push(h.clone());
    }
    Some(opt)
}

fn lexmin_on_line(line: &HalfPlane, others: &[HalfPlane]) -> Option<Point2> {
    let a = &line.normal;
    let origin = a.scale(&(&line.rhs / &a.norm_sq()));
    let dir = Point2::new(a.y.clone(), -&a.x);
    let mut s_lo: Option<Rational> = None;
    let mut s_hi: Option<Rational> = None;
    for h in others {
        let rate = h.normal.dot(&dir);
        let slack = &h.rhs - &h.normal.dot(&origin);
        match rate.signum() {
            0 => {
                if slack.signum() > 0 {
                    return None;
                }
            }
            1 => {
                let s = slack / rate;
                if s_lo.as_ref().is_none_or(|cur| &s > cur) {
                    s_lo = Some(s);
                }
            }
            _ => {
                let s = slack / rate;
                if s_hi.as_ref().is_none_or(|cur| &s < cur) {
                    s_hi = Some(s);
                }
            }
        }
    }
    if let (Some(l), Some(h)) = (&s_lo, &s_hi) {
        if l > h {
            return None;
        }
    }
    let prefer_low = match dir.x.signum() {
        0 => dir.y.signum() > 0,
        sign => sign > 0,
    };
    let s = if prefer_low { s_lo? } else { s_hi? };
    Some(&origin + &dir.scale(&s))
}

/// `true` iff every vertex of `P + t` is inside or on a convex `Q`
/// (equivalent to containment for convex `Q`).
pub fn convex_contains_at(p: &ConvexPolygon, t: &Point2, q: &ConvexPolygon) -> bool {
    p.vertices().iter().all(|v| {
        let moved = v + t;
        q.as_polygon().edges().all(|(c, d)| orient2d(c, d, &moved) >= 0 || on_segment(&moved, c, d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Interval, IntervalSet};

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn r(x: i64) -> Rational {
        Rational::from_int(x)
    }

    fn square(side: i64) -> Polygon {
        Polygon::new(vec![p(0, 0), p(side, 0), p(side, side), p(0, side)]).unwrap()
    }

    #[test]
    fn comb_vertices() {
        let s = IntervalSet::new(vec![Interval::new(r(0), r(1)).unwrap(), Interval::new(r(2), r(3)).unwrap()])
            .unwrap();
        let c = comb_of_intervals(&s).unwrap();
        assert_eq!(
            c.vertices(),
            &[p(0, -1), p(3, -1), p(3, 1), p(2, 1), p(2, 0), p(1, 0), p(1, 1), p(0, 1)]
        );
        let (lo, hi) = c.bbox();
        assert_eq!(&hi.y - &lo.y, r(2));
    }

    #[test]
    fn comb_pair_containment() {
        let inst = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(10), r(11)])).unwrap();
        let params = CombParams { tooth_width: Rational::frac(1, 4) };
        let (ca, cb) = build_comb_pair(&inst, &params).unwrap();
        assert!(polygon_contains_at(&ca, &p(10, 0), &cb));
        assert!(!polygon_contains_at(&ca, &Point2::new(r(10), Rational::frac(1, 8)), &cb));
        let w = solve_polycont(&ca, &cb).unwrap();
        assert_eq!(w.t, p(10, 0));
    }

    #[test]
    fn fattening_bounds() {
        let inst = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(10), r(11)])).unwrap();
        assert_eq!(CombParams::default_for(&inst).tooth_width, Rational::frac(1, 4));
        let too_wide = CombParams { tooth_width: Rational::frac(1, 2) };
        assert!(matches!(build_comb_pair(&inst, &too_wide), Err(Error::InvalidFattening(_))));
        let zero = CombParams { tooth_width: Rational::zero() };
        assert!(matches!(build_comb_pair(&inst, &zero), Err(Error::InvalidFattening(_))));
    }

    #[test]
    fn fixed_translation_examples() {
        let unit = square(1);
        let big = square(2);
        assert!(polygon_contains_at(&unit, &p(0, 0), &big));
        assert!(!polygon_contains_at(&unit, &Point2::new(Rational::frac(3, 2), r(0)), &big));
        assert!(polygon_contains_at(&big, &p(0, 0), &big));
        assert!(!polygon_contains_at(&big, &p(0, 0), &unit));
    }

    #[test]
    fn edge_leaving_through_a_notch() {
        // a U shape: a bar across the opening is not contained even though
        // all of its vertices are
        let u = Polygon::new(vec![p(0, 0), p(3, 0), p(3, 3), p(2, 3), p(2, 1), p(1, 1), p(1, 3), p(0, 3)])
            .unwrap();
        let bar = Polygon::new(vec![p(0, 0), p(3, 0), p(3, 1), p(0, 1)]).unwrap();
        assert!(polygon_contains_at(&bar, &p(0, 0), &u));
        assert!(!polygon_contains_at(&bar, &p(0, 2), &u));
        let w = solve_polycont(&bar, &u).unwrap();
        assert_eq!(w.t, p(0, 0));
    }

    #[test]
    fn larger_area_is_rejected() {
        let tri = Polygon::new(vec![p(0, 0), p(4, 0), p(0, 4)]).unwrap();
        let small = Polygon::new(vec![p(0, 0), p(2, 0), p(0, 2)]).unwrap();
        assert_eq!(solve_polycont(&tri, &small), None);
        assert!(solve_polycont(&small, &tri).is_some());
    }

    #[test]
    fn cpct_examples() {
        let unit = ConvexPolygon::try_from(square(1)).unwrap();
        let big = ConvexPolygon::try_from(square(2)).unwrap();
        let w = solve_cpct(&unit, &big).unwrap();
        assert_eq!(w.t, p(0, 0));
        assert!(convex_contains_at(&unit, &w.t, &big));
        assert_eq!(solve_cpct(&big, &unit), None);
        assert_eq!(solve_polycont(unit.as_polygon(), big.as_polygon()).unwrap(), w);
    }

    #[test]
    fn cpct_exact_fit_single_point() {
        let tri = ConvexPolygon::new(vec![p(0, 0), p(4, 0), p(0, 4)]).unwrap();
        let shifted = ConvexPolygon::new(vec![p(5, 7), p(9, 7), p(5, 11)]).unwrap();
        let w = solve_cpct(&tri, &shifted).unwrap();
        assert_eq!(w.t, p(5, 7));
        assert_eq!(solve_polycont(tri.as_polygon(), shifted.as_polygon()).unwrap().t, p(5, 7));
    }
}
