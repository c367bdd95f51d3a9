//! Containment under rotation about the origin.
//!
//! Interval sets in `[0, 1]` are wrapped onto a short arc of the unit circle
//! by `f(x) = (sin(x/100), cos(x/100))` and closed into convex wedges with
//! apex at the origin. Rotating one wedge inside another then mirrors
//! translating one interval set inside another.
//!
//! Angles are measured clockwise from the positive `y` axis, so `f(x)` sits
//! at angle `x / 100` and a clockwise rotation by `theta` corresponds to the
//! 1-D shift `v = 100 theta`. Rotation events are transcendental; the solver
//! works in `f64` with an explicit angular margin and a three-valued
//! verdict.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Interval, IntervalSet};
use crate::linear::SegContPntInstance;
use crate::rational::Rational;

/// Interval preimages in `[0, 1]` of a set of arcs on the unit circle.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "IntervalSet", into = "IntervalSet")]
pub struct ArcSet {
    preimages: IntervalSet,
}

impl ArcSet {
    pub fn new(preimages: IntervalSet) -> Result<Self> {
        let hull = preimages
            .hull()
            .ok_or_else(|| Error::InvalidInstance("arc set is empty".into()))?;
        if hull.lo().signum() < 0 || hull.hi() > &Rational::one() {
            return Err(Error::InvalidInstance(format!(
                "arc preimages [{}, {}] leave [0, 1]",
                hull.lo(),
                hull.hi()
            )));
        }
        Ok(ArcSet { preimages })
    }

    pub fn from_points(points: &[Rational]) -> Result<Self> {
        ArcSet::new(IntervalSet::from_points(points))
    }

    pub fn preimages(&self) -> &IntervalSet {
        &self.preimages
    }

    /// Endpoints `(l, r)` of every arc on the circle.
    pub fn arcs(&self) -> Vec<((f64, f64), (f64, f64))> {
        self.preimages.iter().map(|iv| (circle_map(iv.lo()), circle_map(iv.hi()))).collect()
    }

    /// Angular length of the arc spanned by the whole set.
    pub fn span(&self) -> f64 {
        let hull = self.preimages.hull().expect("non-empty");
        (hull.len() / Rational::from_int(100)).to_f64()
    }
}

impl TryFrom<IntervalSet> for ArcSet {
    type Error = Error;

    fn try_from(value: IntervalSet) -> Result<Self> {
        ArcSet::new(value)
    }
}

impl From<ArcSet> for IntervalSet {
    fn from(value: ArcSet) -> Self {
        value.preimages
    }
}

/// `f(x) = (sin(x/100), cos(x/100))`.
pub fn circle_map(x: &Rational) -> (f64, f64) {
    let angle = angle_of(x);
    (angle.sin(), angle.cos())
}

fn angle_of(x: &Rational) -> f64 {
    (x / &Rational::from_int(100)).to_f64()
}

/// Half the angle between preimages `a <= b`, computed from the exact
/// difference so tiny gaps keep full relative precision.
fn half_angle(a: &Rational, b: &Rational) -> f64 {
    ((b - a) / Rational::from_int(200)).to_f64()
}

fn mid_angle(a: &Rational, b: &Rational) -> f64 {
    ((a + b) / Rational::from_int(200)).to_f64()
}

/// `1 - cos(x)` without cancellation.
fn one_minus_cos(x: f64) -> f64 {
    let s = (x / 2.0).sin();
    2.0 * s * s
}

/// Vertex at angle `psi` and distance `1 + excess` from the origin; the
/// origin itself has `excess = -1`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct PolarVertex {
    psi: f64,
    excess: f64,
}

impl PolarVertex {
    fn rho(&self) -> f64 {
        1.0 + self.excess
    }

    fn cartesian(&self) -> (f64, f64) {
        let rho = self.rho();
        (rho * self.psi.sin(), rho * self.psi.cos())
    }
}

/// Supporting line `{p : n(mu) . p = 1 - defect}` of an edge, where
/// `n(mu)` is the outward unit normal at angle `mu`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct EdgeLine {
    mu: f64,
    defect: f64,
}

impl EdgeLine {
    fn offset(&self) -> f64 {
        1.0 - self.defect
    }
}

/// `W(S)`: convex hull of the origin, the arc endpoints and, for each arc of
/// positive length, the meeting point of the tangents at its endpoints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WedgeRepr", into = "WedgeRepr")]
pub struct WedgePolygon {
    vertices: Vec<(f64, f64)>,
    provenance: ArcSet,
    polar: Vec<PolarVertex>,
    edges: Vec<EdgeLine>,
}

#[derive(Serialize, Deserialize)]
struct WedgeRepr {
    vertices: Vec<(f64, f64)>,
    provenance: ArcSet,
}

impl TryFrom<WedgeRepr> for WedgePolygon {
    type Error = Error;

    fn try_from(value: WedgeRepr) -> Result<Self> {
        build_wedge(&value.provenance)
    }
}

impl From<WedgePolygon> for WedgeRepr {
    fn from(value: WedgePolygon) -> Self {
        WedgeRepr { vertices: value.vertices, provenance: value.provenance }
    }
}

impl WedgePolygon {
    /// Vertices in counterclockwise order, starting at the origin.
    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    pub fn provenance(&self) -> &ArcSet {
        &self.provenance
    }

    /// Angular length of the defining arc.
    pub fn width(&self) -> f64 {
        self.provenance.span()
    }

    /// Largest distance from the origin to a vertex.
    pub fn length(&self) -> f64 {
        self.polar.iter().map(PolarVertex::rho).fold(0.0, f64::max)
    }
}

/// Builds `W(S)` after sorting along the circle. A set whose arcs collapse
/// to a single point is rejected: its hull is a segment.
pub fn build_wedge(arcs: &ArcSet) -> Result<WedgePolygon> {
    let ivs = arcs.preimages().intervals();
    let hull = arcs.preimages().hull().expect("non-empty");
    if hull.is_point() {
        return Err(Error::DegenerateInput("all arcs meet in a single point; the wedge is a segment".into()));
    }

    // walk the boundary clockwise from the origin
    let mut polar = vec![PolarVertex { psi: 0.0, excess: -1.0 }];
    let mut edges = vec![EdgeLine { mu: angle_of(hull.lo()) - FRAC_PI_2, defect: 1.0 }];
    for (k, iv) in ivs.iter().enumerate() {
        if k > 0 {
            let prev = ivs[k - 1].hi();
            edges.push(EdgeLine { mu: mid_angle(prev, iv.lo()), defect: one_minus_cos(half_angle(prev, iv.lo())) });
        }
        polar.push(PolarVertex { psi: angle_of(iv.lo()), excess: 0.0 });
        if !iv.is_point() {
            let hw = half_angle(iv.lo(), iv.hi());
            edges.push(EdgeLine { mu: angle_of(iv.lo()), defect: 0.0 });
            polar.push(PolarVertex { psi: mid_angle(iv.lo(), iv.hi()), excess: one_minus_cos(hw) / hw.cos() });
            edges.push(EdgeLine { mu: angle_of(iv.hi()), defect: 0.0 });
            polar.push(PolarVertex { psi: angle_of(iv.hi()), excess: 0.0 });
        }
    }
    edges.push(EdgeLine { mu: angle_of(hull.hi()) + FRAC_PI_2, defect: 1.0 });

    let mut vertices: Vec<(f64, f64)> = vec![(0.0, 0.0)];
    vertices.extend(polar[1..].iter().rev().map(PolarVertex::cartesian));
    Ok(WedgePolygon { vertices, provenance: arcs.clone(), polar, edges })
}

/// Exact rational map `x -> scale x + offset` squeezing every number of the
/// instance into `[0.45, 0.55]`.
pub fn squeeze_params(inst: &SegContPntInstance) -> (Rational, Rational) {
    let lo = inst.numbers().min().expect("non-empty").clone();
    let hi = inst.numbers().max().expect("non-empty").clone();
    if lo == hi {
        return (Rational::one(), Rational::frac(1, 2) - lo);
    }
    let scale = Rational::frac(1, 10) / (&hi - &lo);
    let offset = Rational::frac(9, 20) - &scale * &lo;
    (scale, offset)
}

/// Squeezes the instance into `[0.45, 0.55]` and adds the sentinels: the
/// points `0.1`, `0.9` on the point side and the intervals `[0, 0.2]`,
/// `[0.8, 1]` on the interval side. The sentinels pin any solution shift to
/// `[-0.1, 0.1]`, where only the squeezed parts can interact, so the answer
/// is unchanged and feasible shifts scale by the squeeze factor.
pub fn pad_and_normalize(inst: &SegContPntInstance) -> SegContPntInstance {
    let (scale, offset) = squeeze_params(inst);
    let squeezed = inst.affine(&scale, &offset);
    let mut p = vec![Rational::frac(1, 10)];
    p.extend(squeezed.p().iter().cloned());
    p.push(Rational::frac(9, 10));
    let mut q = vec![
        Interval::new(Rational::zero(), Rational::frac(1, 5)).expect("ordered"),
        Interval::new(Rational::frac(4, 5), Rational::one()).expect("ordered"),
    ];
    q.extend(squeezed.q().iter().cloned());
    let q = IntervalSet::new(q).expect("sentinels are disjoint from [0.45, 0.55]");
    SegContPntInstance::new(p, q).expect("non-empty")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Answer {
    Yes,
    No,
    Uncertain,
}

/// Outcome of a floating-point rotation search.
///
/// `margin` is an angular distance in radians: for `Yes` the distance from
/// the witness to the nearest infeasible angle, for `No` how far every
/// forbidden arc can shrink before a feasible angle appears. An exactly
/// certified witness reports an infinite margin.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct RotationVerdict {
    pub answer: Answer,
    pub witness_angle: Option<f64>,
    pub margin: f64,
}

/// Open arc of rotation angles `(center - half, center + half)`.
#[derive(Clone, Copy, Debug)]
struct ForbiddenArc {
    center: f64,
    half: f64,
}

/// Clockwise rotations `theta` that push vertex `v` strictly beyond edge
/// line `e`: `rho cos(psi + theta - mu) > h`, an open arc of half-width
/// `acos(h / rho)` around `mu - psi`.
fn forbidden_arc(v: &PolarVertex, e: &EdgeLine) -> Option<ForbiddenArc> {
    let h = e.offset();
    let rho = v.rho();
    // rho - h without cancellation
    let gap = v.excess + e.defect;
    if gap <= 0.0 || rho <= 0.0 {
        return None;
    }
    let half = (gap * (rho + h)).sqrt().atan2(h);
    Some(ForbiddenArc { center: e.mu - v.psi, half })
}

fn forbidden_arcs(wa: &WedgePolygon, wb: &WedgePolygon) -> Vec<ForbiddenArc> {
    wa.polar
        .iter()
        .flat_map(|v| wb.edges.iter().filter_map(move |e| forbidden_arc(v, e)))
        .collect()
}

/// Maximal closed angle intervals (of positive length) not covered by any
/// arc shrunk by `shrink` on both sides. A gap through `pi` is reported with
/// its end beyond `pi`.
fn coverage_gaps(arcs: &[ForbiddenArc], shrink: f64) -> Vec<(f64, f64)> {
    let two_pi = 2.0 * PI;
    let mut pieces: Vec<(f64, f64)> = Vec::with_capacity(arcs.len() + 4);
    for arc in arcs {
        let half = arc.half - shrink;
        if half <= 0.0 {
            continue;
        }
        if half >= PI {
            return Vec::new();
        }
        let lo = (arc.center - half + PI).rem_euclid(two_pi) - PI;
        let hi = lo + 2.0 * half;
        if hi > PI {
            pieces.push((lo, PI));
            pieces.push((-PI, hi - two_pi));
        } else {
            pieces.push((lo, hi));
        }
    }
    pieces.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut gaps = Vec::new();
    let mut reach = -PI;
    for (lo, hi) in pieces {
        if lo > reach {
            gaps.push((reach, lo));
        }
        reach = reach.max(hi);
    }
    if reach < PI {
        match gaps.first() {
            Some(&(start, end)) if start == -PI => {
                gaps[0] = (reach, end + two_pi);
            }
            _ => gaps.push((reach, PI)),
        }
    }
    gaps
}

fn normalize_angle(theta: f64) -> f64 {
    let t = (theta + PI).rem_euclid(2.0 * PI) - PI;
    if t == -PI {
        PI
    } else {
        t
    }
}

/// Feasible clockwise rotation angles, as closed intervals of positive
/// length, computed in floating point.
pub fn feasible_angles(wa: &WedgePolygon, wb: &WedgePolygon) -> Vec<(f64, f64)> {
    coverage_gaps(&forbidden_arcs(wa, wb), 0.0)
}

/// Exact test for the zero rotation: `W(A) ⊆ W(B)` iff every arc of `A`
/// lies in an arc of `B`, since both hulls are monotone in their arcs and
/// arc endpoints outside `B` fall outside `W(B)`.
fn identity_fits(wa: &WedgePolygon, wb: &WedgePolygon) -> bool {
    let b = wb.provenance.preimages();
    wa.provenance
        .preimages()
        .iter()
        .all(|iv| b.iter().any(|outer| outer.contains_interval(iv)))
}

/// Angular sweep for a clockwise rotation `theta` with `R(theta) W_A ⊆ W_B`.
///
/// Since both wedges are convex, containment is equivalent to every vertex
/// of `W_A` lying behind every edge line of `W_B`; each (vertex, edge) pair
/// forbids one open arc of angles bounded by the two event roots. The
/// complement of the union is the feasible set. A feasible interval longer
/// than `2 tol` yields `Yes` at its midpoint; if the union still covers the
/// circle after shrinking every arc by `tol` the answer is `No`; otherwise
/// `Uncertain`. The zero rotation is checked exactly first.
pub fn solve_rotation(wa: &WedgePolygon, wb: &WedgePolygon, tol: f64) -> RotationVerdict {
    let arcs = forbidden_arcs(wa, wb);
    let gaps = coverage_gaps(&arcs, 0.0);
    let widest = gaps.iter().copied().max_by(|a, b| (a.1 - a.0).total_cmp(&(b.1 - b.0)));

    if identity_fits(wa, wb) {
        return RotationVerdict { answer: Answer::Yes, witness_angle: Some(0.0), margin: f64::INFINITY };
    }
    if let Some((lo, hi)) = widest {
        let half = (hi - lo) / 2.0;
        if half > tol {
            return RotationVerdict {
                answer: Answer::Yes,
                witness_angle: Some(normalize_angle(lo + half)),
                margin: half,
            };
        }
    }
    if coverage_gaps(&arcs, tol).is_empty() {
        // largest shrink that keeps the circle covered
        let (mut covered, mut open) = (tol, FRAC_PI_2);
        for _ in 0..60 {
            let mid = 0.5 * (covered + open);
            if coverage_gaps(&arcs, mid).is_empty() {
                covered = mid;
            } else {
                open = mid;
            }
        }
        return RotationVerdict { answer: Answer::No, witness_angle: None, margin: covered };
    }
    RotationVerdict {
        answer: Answer::Uncertain,
        witness_angle: None,
        margin: widest.map_or(0.0, |(lo, hi)| (hi - lo) / 2.0),
    }
}

/// Independent fixed-angle check in Cartesian coordinates: rotates the
/// vertices of `W_A` clockwise by `theta` and requires each to be within
/// `tol` behind every edge line of `W_B`.
pub fn contains_rotated(wa: &WedgePolygon, wb: &WedgePolygon, theta: f64, tol: f64) -> bool {
    let (s, c) = theta.sin_cos();
    wa.vertices.iter().all(|&(x, y)| {
        let (rx, ry) = (x * c + y * s, -x * s + y * c);
        wb.edges.iter().all(|e| {
            let (ns, nc) = e.mu.sin_cos();
            rx * ns + ry * nc - e.offset() <= tol
        })
    })
}

fn has_point_sentinels(arcs: &ArcSet) -> bool {
    let ivs = arcs.preimages().intervals();
    ivs.len() >= 2
        && ivs[0] == Interval::point(Rational::frac(1, 10))
        && ivs[ivs.len() - 1] == Interval::point(Rational::frac(9, 10))
}

fn has_interval_sentinels(arcs: &ArcSet) -> bool {
    let ivs = arcs.preimages().intervals();
    ivs.len() >= 2
        && ivs[0] == Interval::new(Rational::zero(), Rational::frac(1, 5)).expect("ordered")
        && ivs[ivs.len() - 1] == Interval::new(Rational::frac(4, 5), Rational::one()).expect("ordered")
}

/// Rules out a placement of `W_A` turned by roughly half a turn, with its
/// wide end inside the apex region of `W_B`. The wide end of `W_A` is a
/// chord of length `2 sin(w_A / 2)`; the opening of `W_B` only reaches that
/// width at distance `sin(w_A / 2) / tan(w_B / 2)` from its apex, and the
/// rest of `W_A` then sticks out past the far end of `W_B`.
pub fn flip_excluded(wa: &WedgePolygon, wb: &WedgePolygon) -> bool {
    let half_a = wa.width() / 2.0;
    let half_b = wb.width() / 2.0;
    let depth = half_a.sin() / half_b.tan();
    depth + half_a.cos() > wb.length()
}

/// Rigid-motion containment for wedges produced by the reduction. Any
/// placement is a rotation about the origin once the flipped case is
/// excluded, so this checks that case and then runs [`solve_rotation`].
pub fn solve_rigid(wa: &WedgePolygon, wb: &WedgePolygon, tol: f64) -> Result<RotationVerdict> {
    if !has_point_sentinels(wa.provenance()) || !has_interval_sentinels(wb.provenance()) {
        return Err(Error::ProvenanceRequired(
            "rigid-motion solving needs wedges built from padded instances".into(),
        ));
    }
    if !flip_excluded(wa, wb) {
        return Ok(RotationVerdict { answer: Answer::Uncertain, witness_angle: None, margin: 0.0 });
    }
    Ok(solve_rotation(wa, wb, tol))
}

/// Wedge pair for a padded instance: points on the `A` side, intervals on
/// the `B` side.
pub fn wedges_for(padded: &SegContPntInstance) -> Result<(WedgePolygon, WedgePolygon)> {
    let a = build_wedge(&ArcSet::from_points(padded.p())?)?;
    let b = build_wedge(&ArcSet::new(padded.q().clone())?)?;
    Ok((a, b))
}
