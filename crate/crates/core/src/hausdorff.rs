//! Hausdorff distance between sets of segments and lines, the separation
//! bound for 1-D point/interval instances, the four-line gadget and a
//! Lipschitz branch-and-bound certificate for thresholds under translation.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{point_line_distance_sq, point_segment_distance_sq, Point2};
use crate::linear::SegContPntInstance;
use crate::rational::{max_denominator, Rational};

/// A closed segment (possibly a single point) or a full line.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Element {
    Segment { a: Point2, b: Point2 },
    Line { point: Point2, dir: Point2 },
}

impl Element {
    pub fn point(p: Point2) -> Element {
        Element::Segment { a: p.clone(), b: p }
    }

    pub fn horizontal_line(y: Rational) -> Element {
        Element::Line { point: Point2::new(Rational::zero(), y), dir: Point2::from_ints(1, 0) }
    }

    /// Exact squared distance from `p` to the element.
    pub fn distance_sq(&self, p: &Point2) -> Rational {
        match self {
            Element::Segment { a, b } => point_segment_distance_sq(p, a, b),
            Element::Line { point, dir } => point_line_distance_sq(p, point, dir),
        }
    }
}

/// Non-empty list of elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Element>", into = "Vec<Element>")]
pub struct SegmentSet {
    elements: Vec<Element>,
}

impl SegmentSet {
    pub fn new(elements: Vec<Element>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidInstance("segment set is empty".into()));
        }
        if elements.iter().any(|e| matches!(e, Element::Line { dir, .. } if dir.norm_sq().is_zero())) {
            return Err(Error::InvalidInstance("line with zero direction".into()));
        }
        Ok(SegmentSet { elements })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Exact distance-squared from a point to the nearest element.
    pub fn distance_sq(&self, p: &Point2) -> Rational {
        self.elements.iter().map(|e| e.distance_sq(p)).min().expect("non-empty")
    }
}

impl TryFrom<Vec<Element>> for SegmentSet {
    type Error = Error;

    fn try_from(value: Vec<Element>) -> Result<Self> {
        SegmentSet::new(value)
    }
}

impl From<SegmentSet> for Vec<Element> {
    fn from(value: SegmentSet) -> Self {
        value.elements
    }
}

/// `epsilon = 1 / (2 m_max^4)` for the largest denominator `m_max`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeparationBound {
    #[serde(with = "bigint_text")]
    pub m_max: BigInt,
    pub epsilon: Rational,
}

impl SeparationBound {
    pub fn from_denominator(m_max: BigInt) -> SeparationBound {
        let m4 = m_max.pow(4u32);
        let epsilon = Rational::new(1, m4 * 2).expect("m_max >= 1");
        SeparationBound { m_max, epsilon }
    }
}

mod bigint_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Lower and upper bounds on a minimum over translations.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct DistanceBounds {
    pub lower: f64,
    pub upper: f64,
    pub certified: bool,
    /// translation at which `upper` was evaluated
    pub at: (f64, f64),
}

/// A float distance together with a bound on its evaluation error.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct Distance {
    pub value: f64,
    pub error: f64,
}

type V = (f64, f64);

fn sub(a: V, b: V) -> V {
    (a.0 - b.0, a.1 - b.1)
}

fn dot(a: V, b: V) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

#[derive(Clone, Copy, Debug)]
enum FElem {
    Seg { a: V, b: V },
    Line { p: V, n: V },
}

impl FElem {
    fn shifted(self, t: V) -> FElem {
        match self {
            FElem::Seg { a, b } => FElem::Seg { a: (a.0 + t.0, a.1 + t.1), b: (b.0 + t.0, b.1 + t.1) },
            FElem::Line { p, n } => FElem::Line { p: (p.0 + t.0, p.1 + t.1), n },
        }
    }

    fn dist(&self, x: V) -> f64 {
        match *self {
            FElem::Seg { a, b } => {
                let d = sub(b, a);
                let len = dot(d, d);
                let w = sub(x, a);
                let s = if len == 0.0 { 0.0 } else { (dot(w, d) / len).clamp(0.0, 1.0) };
                (w.0 - s * d.0).hypot(w.1 - s * d.1)
            }
            FElem::Line { p, n } => dot(sub(x, p), n).abs(),
        }
    }
}

fn to_v(p: &Point2) -> V {
    let [x, y] = p.to_f64();
    (x, y)
}

fn to_felem(e: &Element) -> FElem {
    match e {
        Element::Segment { a, b } => FElem::Seg { a: to_v(a), b: to_v(b) },
        Element::Line { point, dir } => {
            let d = to_v(dir);
            let len = d.0.hypot(d.1);
            FElem::Line { p: to_v(point), n: (-d.1 / len, d.0 / len) }
        }
    }
}

/// `q(s) = a s^2 + b s + c`.
#[derive(Clone, Copy)]
struct Quad(f64, f64, f64);

fn push_roots(q: Quad, out: &mut Vec<f64>) {
    let Quad(a, b, c) = q;
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return;
    }
    if a.abs() <= 1e-14 * scale {
        if b != 0.0 {
            out.push(-c / b);
        }
        return;
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        // a near-tangency still marks a candidate maximum
        out.push(-b / (2.0 * a));
        return;
    }
    let root = disc.sqrt();
    let q = -0.5 * (b + b.signum() * root);
    if q != 0.0 {
        out.push(q / a);
        out.push(c / q);
    } else {
        out.push(-b / (2.0 * a));
    }
}

/// Directed distance from a moving segment `a + s (b - a)`, `s in [0, 1]`,
/// to `targets`. The distance to each target is piecewise quadratic (in
/// squared form) and convex in `s`, so the maximum of their lower envelope
/// sits at `s = 0`, `s = 1` or where two pieces cross. Candidates are all
/// pairwise crossings of the pieces plus the perpendicular-foot
/// breakpoints.
fn segment_to_set(a: V, b: V, targets: &[FElem]) -> f64 {
    let d = sub(b, a);
    let min_dist = |s: f64| {
        let x = (a.0 + s * d.0, a.1 + s * d.1);
        targets.iter().map(|t| t.dist(x)).fold(f64::INFINITY, f64::min)
    };
    if d == (0.0, 0.0) {
        return min_dist(0.0);
    }
    let mut pieces: Vec<Quad> = Vec::new();
    let mut cands: Vec<f64> = vec![0.0, 1.0];
    let point_piece = |x: V| {
        let w = sub(a, x);
        Quad(dot(d, d), 2.0 * dot(d, w), dot(w, w))
    };
    let line_piece = |p: V, n: V| {
        let h = dot(sub(a, p), n);
        let k = dot(d, n);
        Quad(k * k, 2.0 * h * k, h * h)
    };
    for t in targets {
        match *t {
            FElem::Seg { a: ta, b: tb } => {
                pieces.push(point_piece(ta));
                let td = sub(tb, ta);
                let len = dot(td, td);
                if len > 0.0 {
                    pieces.push(point_piece(tb));
                    let tl = len.sqrt();
                    pieces.push(line_piece(ta, (-td.1 / tl, td.0 / tl)));
                    let rate = dot(d, td);
                    if rate != 0.0 {
                        let base = dot(sub(a, ta), td);
                        cands.push(-base / rate);
                        cands.push((len - base) / rate);
                    }
                }
            }
            FElem::Line { p, n } => pieces.push(line_piece(p, n)),
        }
    }
    for (i, p) in pieces.iter().enumerate() {
        for q in &pieces[i + 1..] {
            push_roots(Quad(p.0 - q.0, p.1 - q.1, p.2 - q.2), &mut cands);
        }
    }
    cands
        .into_iter()
        .filter(|s| (0.0..=1.0).contains(s))
        .map(min_dist)
        .fold(0.0, f64::max)
}

/// Float form of a pair of sets with the exact parallel-line relation
/// precomputed; evaluates distances for arbitrary translations of `A`.
struct Evaluator {
    a: Vec<FElem>,
    b: Vec<FElem>,
    /// for each line of `A`, indices of parallel lines of `B`
    a_parallel: Vec<Option<Vec<usize>>>,
    /// for each line of `B`, indices of parallel lines of `A`
    b_parallel: Vec<Option<Vec<usize>>>,
    scale: f64,
}

fn parallel_table(from: &SegmentSet, to: &SegmentSet) -> Vec<Option<Vec<usize>>> {
    from.elements()
        .iter()
        .map(|e| match e {
            Element::Line { dir, .. } => Some(
                to.elements()
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| matches!(f, Element::Line { dir: g, .. } if dir.cross(g).is_zero()))
                    .map(|(j, _)| j)
                    .collect(),
            ),
            Element::Segment { .. } => None,
        })
        .collect()
}

impl Evaluator {
    fn new(a: &SegmentSet, b: &SegmentSet) -> Evaluator {
        let fa: Vec<FElem> = a.elements().iter().map(to_felem).collect();
        let fb: Vec<FElem> = b.elements().iter().map(to_felem).collect();
        let scale = fa
            .iter()
            .chain(&fb)
            .flat_map(|e| match *e {
                FElem::Seg { a, b } => [a.0, a.1, b.0, b.1],
                FElem::Line { p, .. } => [p.0, p.1, 0.0, 0.0],
            })
            .fold(0.0f64, |m, x| m.max(x.abs()));
        Evaluator { a: fa, b: fb, a_parallel: parallel_table(a, b), b_parallel: parallel_table(b, a), scale }
    }

    fn error(&self, t: V) -> f64 {
        256.0 * f64::EPSILON * (1.0 + self.scale + t.0.abs() + t.1.abs())
    }

    fn directed(from: &[FElem], parallel: &[Option<Vec<usize>>], to: &[FElem]) -> f64 {
        let mut worst = 0.0f64;
        for (e, par) in from.iter().zip(parallel) {
            let d = match (*e, par) {
                (FElem::Seg { a, b }, _) => segment_to_set(a, b, to),
                (FElem::Line { p, .. }, Some(idx)) => {
                    idx.iter().map(|&j| to[j].dist(p)).fold(f64::INFINITY, f64::min)
                }
                (FElem::Line { .. }, None) => unreachable!("lines carry a parallel table"),
            };
            worst = worst.max(d);
        }
        worst
    }

    /// `δ'(A + t, B)`.
    fn forward(&self, t: V) -> f64 {
        let moved: Vec<FElem> = self.a.iter().map(|e| e.shifted(t)).collect();
        Self::directed(&moved, &self.a_parallel, &self.b)
    }

    /// `δ'(B, A + t)`.
    fn backward(&self, t: V) -> f64 {
        let moved: Vec<FElem> = self.a.iter().map(|e| e.shifted(t)).collect();
        Self::directed(&self.b, &self.b_parallel, &moved)
    }

    fn symmetric(&self, t: V) -> f64 {
        let forward = self.forward(t);
        if forward.is_infinite() {
            return forward;
        }
        forward.max(self.backward(t))
    }
}

/// `δ'(A, B) = max_{a in A} min_{b in B} |a - b|`. A line of `A` is at
/// finite distance only from parallel lines of `B`; otherwise the value is
/// infinite.
pub fn directed_hausdorff(a: &SegmentSet, b: &SegmentSet) -> Distance {
    let ev = Evaluator::new(a, b);
    Distance { value: ev.forward((0.0, 0.0)), error: ev.error((0.0, 0.0)) }
}

/// `δ(A, B) = max(δ'(A, B), δ'(B, A))`.
pub fn hausdorff(a: &SegmentSet, b: &SegmentSet) -> Distance {
    hausdorff_at(a, b, (0.0, 0.0))
}

/// `δ(A + t, B)`.
pub fn hausdorff_at(a: &SegmentSet, b: &SegmentSet, t: (f64, f64)) -> Distance {
    let ev = Evaluator::new(a, b);
    Distance { value: ev.symmetric(t), error: 2.0 * ev.error(t) }
}

/// `δ'(A + t, B)`.
pub fn directed_hausdorff_at(a: &SegmentSet, b: &SegmentSet, t: (f64, f64)) -> Distance {
    let ev = Evaluator::new(a, b);
    Distance { value: ev.forward(t), error: ev.error(t) }
}

/// Largest denominator `M` over all points and interval endpoints and
/// `epsilon = 1 / (2 M^4)`.
pub fn compute_epsilon(inst: &SegContPntInstance) -> SeparationBound {
    let m = max_denominator(inst.numbers());
    SeparationBound::from_denominator(if m < BigInt::one() { BigInt::one() } else { m })
}

/// `A = P ∪ {y = 0.8 eps} ∪ {y = -0.8 eps}` and
/// `B = Q ∪ {y = 1.6 eps} ∪ {y = -1.6 eps}` with everything from the
/// instance placed on the x axis, for `eps` from [`compute_epsilon`].
pub fn reduce_to_hausdorff(inst: &SegContPntInstance) -> (SegmentSet, SegmentSet, SeparationBound) {
    let bound = compute_epsilon(inst);
    let (a, b) = hausdorff_gadget(inst, &bound.epsilon);
    (a, b, bound)
}

/// The same gadget for any `0 < eps` not above the instance's separation
/// bound; the argument only needs the 1-D gap to be at least `eps`.
pub fn hausdorff_gadget(inst: &SegContPntInstance, eps: &Rational) -> (SegmentSet, SegmentSet) {
    let at = |k: i64| Rational::frac(k, 5) * eps;
    let on_axis = |x: &Rational| Point2::new(x.clone(), Rational::zero());
    let mut a: Vec<Element> = inst.p().iter().map(|x| Element::point(on_axis(x))).collect();
    a.push(Element::horizontal_line(at(4)));
    a.push(Element::horizontal_line(at(-4)));
    let mut b: Vec<Element> =
        inst.q().iter().map(|iv| Element::Segment { a: on_axis(iv.lo()), b: on_axis(iv.hi()) }).collect();
    b.push(Element::horizontal_line(at(8)));
    b.push(Element::horizontal_line(at(-8)));
    (SegmentSet::new(a).expect("non-empty"), SegmentSet::new(b).expect("non-empty"))
}

/// The points of an instance and its intervals as sets on the x axis.
pub fn embed_on_axis(inst: &SegContPntInstance) -> (SegmentSet, SegmentSet) {
    let on_axis = |x: &Rational| Point2::new(x.clone(), Rational::zero());
    let a = inst.p().iter().map(|x| Element::point(on_axis(x))).collect();
    let b = inst.q().iter().map(|iv| Element::Segment { a: on_axis(iv.lo()), b: on_axis(iv.hi()) }).collect();
    (SegmentSet::new(a).expect("non-empty"), SegmentSet::new(b).expect("non-empty"))
}

/// Translations searched by [`certify_threshold`], with an analytic lower
/// bound on the distance for every translation outside the box.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct SearchBox {
    pub u: (f64, f64),
    pub v: (f64, f64),
    pub outside_bound: f64,
}

fn x_range(inst: &SegContPntInstance) -> (f64, f64) {
    let pmin = inst.p().iter().min().expect("non-empty").to_f64();
    let pmax = inst.p().iter().max().expect("non-empty").to_f64();
    let hull = inst.q().hull().expect("non-empty");
    (hull.lo().to_f64() - pmax - 1.0, hull.hi().to_f64() - pmin + 1.0)
}

fn segment_x_extent(s: &SegmentSet) -> Option<(f64, f64)> {
    s.elements()
        .iter()
        .filter_map(|e| match e {
            Element::Segment { a, b } => Some((a.x.clone().min(b.x.clone()), a.x.clone().max(b.x.clone()))),
            Element::Line { .. } => None,
        })
        .reduce(|x, y| (x.0.min(y.0), x.1.max(y.1)))
        .map(|(lo, hi)| (lo.to_f64(), hi.to_f64()))
}

/// Box for the four-line gadget. For `|v| > 0.3 eps` the line `y = -1.6 eps`
/// of `B` is more than `1.1 eps` from both lines of `A + t`, and for `u`
/// outside the x-range every point of `P + t` is more than 1 from `Q`, so
/// its distance to `B` is at least `1.3 eps` (the lines) once `|v| <= 0.3
/// eps` (with `eps <= 1/2`).
pub fn gadget_search_box(inst: &SegContPntInstance, eps: f64) -> SearchBox {
    SearchBox { u: x_range(inst), v: (-0.3 * eps, 0.3 * eps), outside_bound: 1.1 * eps }
}

/// [`gadget_search_box`] recovered from the gadget sets themselves (the
/// segments of `A` and `B` are the embedded instance).
pub fn gadget_search_box_for_sets(a: &SegmentSet, b: &SegmentSet, eps: f64) -> Result<SearchBox> {
    let missing = || Error::InvalidInstance("gadget sets need segments on both sides".into());
    let (pmin, pmax) = segment_x_extent(a).ok_or_else(missing)?;
    let (qmin, qmax) = segment_x_extent(b).ok_or_else(missing)?;
    Ok(SearchBox { u: (qmin - pmax - 1.0, qmax - pmin + 1.0), v: (-0.3 * eps, 0.3 * eps), outside_bound: 1.1 * eps })
}

/// Box for the one-sided distance of `P + t` to `Q` on the axis: a
/// vertical offset `|v| >= eps` alone forces distance `eps`.
pub fn one_sided_search_box(inst: &SegContPntInstance, eps: f64) -> SearchBox {
    SearchBox { u: x_range(inst), v: (-eps, eps), outside_bound: eps.min(1.0) }
}

#[derive(Clone, Copy, Debug)]
struct Cell {
    lower: f64,
    cu: f64,
    cv: f64,
    hu: f64,
    hv: f64,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    // min-heap on the lower bound, ties broken by position for determinism
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .lower
            .total_cmp(&self.lower)
            .then_with(|| other.cu.total_cmp(&self.cu))
            .then_with(|| other.cv.total_cmp(&self.cv))
    }
}

/// Branch-and-bound over translations of a 1-Lipschitz objective.
///
/// Each cell is evaluated at its centre; `value - half diagonal` bounds the
/// objective on the whole cell. Cells whose bound is below `threshold` are
/// split until their sides reach `grid_step`, lowest bound first. The search
/// stops as soon as the bound of every open cell reaches `threshold` or a
/// translation with value below `threshold` is found.
fn branch_and_bound(
    objective: impl Fn(V) -> (f64, f64),
    threshold: f64,
    search: &SearchBox,
    grid_step: f64,
    cell_limit: usize,
) -> Result<(DistanceBounds, V)> {
    if grid_step.is_nan() || grid_step <= 0.0 || search.u.0 > search.u.1 || search.v.0 > search.v.1 {
        return Err(Error::InvalidInstance("search box or grid step is invalid".into()));
    }
    let width = search.u.1 - search.u.0;
    let height = search.v.1 - search.v.0;
    let side = height.max(grid_step);
    let nu = (width / side).ceil().max(1.0) as usize;
    let nv = (height / side).ceil().max(1.0) as usize;
    if nu.saturating_mul(nv) > cell_limit {
        return Err(Error::BudgetExceeded(format!("{} initial cells exceed the limit {cell_limit}", nu * nv)));
    }

    let mut evaluations = 0usize;
    let mut best = (f64::INFINITY, (0.0, 0.0));
    let mut eval_cell = |cu: f64, cv: f64, hu: f64, hv: f64, best: &mut (f64, V)| -> Result<Cell> {
        evaluations += 1;
        if evaluations > cell_limit {
            return Err(Error::BudgetExceeded(format!("more than {cell_limit} cells evaluated")));
        }
        let (value, err) = objective((cu, cv));
        if value + err < best.0 {
            *best = (value + err, (cu, cv));
        }
        Ok(Cell { lower: value - err - hu.hypot(hv), cu, cv, hu, hv })
    };

    let (hu0, hv0) = (width / nu as f64 / 2.0, height / nv as f64 / 2.0);
    let mut heap = BinaryHeap::new();
    for i in 0..nu {
        for j in 0..nv {
            let cu = search.u.0 + (2 * i + 1) as f64 * hu0;
            let cv = search.v.0 + (2 * j + 1) as f64 * hv0;
            heap.push(eval_cell(cu, cv, hu0, hv0, &mut best)?);
        }
    }

    let mut settled = f64::INFINITY;
    while let Some(cell) = heap.peek().copied() {
        if cell.lower >= threshold || best.0 < threshold {
            break;
        }
        heap.pop();
        if 2.0 * cell.hu.max(cell.hv) <= grid_step {
            settled = settled.min(cell.lower);
            continue;
        }
        let split_u = cell.hu >= cell.hv;
        let (hu, hv) = if split_u { (cell.hu / 2.0, cell.hv) } else { (cell.hu, cell.hv / 2.0) };
        for sign in [-1.0, 1.0] {
            let (cu, cv) =
                if split_u { (cell.cu + sign * hu, cell.cv) } else { (cell.cu, cell.cv + sign * hv) };
            heap.push(eval_cell(cu, cv, hu, hv, &mut best)?);
        }
    }
    let open = heap.peek().map_or(f64::INFINITY, |c| c.lower);
    let lower = settled.min(open).min(search.outside_bound).max(0.0);
    Ok((DistanceBounds { lower, upper: best.0, certified: true, at: best.1 }, best.1))
}

/// Certified comparison of `d_H(A, B) = min_t δ(A + t, B)` with `eps`.
///
/// `upper` is the smallest evaluated `δ` (plus its float error); `lower` is
/// a rigorous lower bound on `δ` over the search box from the 1-Lipschitz
/// property of `t -> δ(A + t, B)`, capped by the box's analytic bound for
/// the outside. Refinement is adaptive and stops once the comparison with
/// `eps` is settled, so `lower` is only tight near `eps`.
pub fn certify_threshold(
    a: &SegmentSet,
    b: &SegmentSet,
    eps: f64,
    search: &SearchBox,
    grid_step: f64,
    cell_limit: usize,
) -> Result<DistanceBounds> {
    let ev = Evaluator::new(a, b);
    branch_and_bound(|t| (ev.symmetric(t), 2.0 * ev.error(t)), eps, search, grid_step, cell_limit).map(|r| r.0)
}

/// [`certify_threshold`] for the one-sided distance `d_H'(A, B)`.
pub fn certify_directed_threshold(
    a: &SegmentSet,
    b: &SegmentSet,
    eps: f64,
    search: &SearchBox,
    grid_step: f64,
    cell_limit: usize,
) -> Result<DistanceBounds> {
    let ev = Evaluator::new(a, b);
    branch_and_bound(|t| (ev.forward(t), ev.error(t)), eps, search, grid_step, cell_limit).map(|r| r.0)
}

/// Approximate `argmin_t δ(A + t, B)`: a coarse grid over the box of
/// translations aligning the two bounding boxes, then a compass search
/// with diagonal moves and step halving. `budget` caps evaluations.
///
/// For sets without lines any translation within `U` of the optimum value
/// keeps the bounding boxes within `U` of each other, so a Lipschitz grid
/// over the aligned box grown by `U` gives a certified lower bound; with
/// lines the bounds are reported uncertified.
pub fn min_hausdorff_translation(
    a: &SegmentSet,
    b: &SegmentSet,
    budget: usize,
) -> Result<((f64, f64), f64, DistanceBounds)> {
    const GRID: usize = 16;
    if budget < 2 * GRID * GRID {
        return Err(Error::BudgetExceeded(format!("budget {budget} is below the {} grid probes", 2 * GRID * GRID)));
    }
    let ev = Evaluator::new(a, b);
    let (alo, ahi) = bbox(&ev.a);
    let (blo, bhi) = bbox(&ev.b);
    let lo = ((blo.0 - alo.0).min(bhi.0 - ahi.0), (blo.1 - alo.1).min(bhi.1 - ahi.1));
    let hi = ((blo.0 - alo.0).max(bhi.0 - ahi.0), (blo.1 - alo.1).max(bhi.1 - ahi.1));

    let used = std::cell::Cell::new(0usize);
    let eval = |t: V| {
        used.set(used.get() + 1);
        ev.symmetric(t)
    };
    let grid = |lo: V, hi: V| -> Vec<(V, V)> {
        let h = ((hi.0 - lo.0) / GRID as f64 / 2.0, (hi.1 - lo.1) / GRID as f64 / 2.0);
        (0..GRID * GRID)
            .map(|k| {
                let (i, j) = (k / GRID, k % GRID);
                ((lo.0 + (2 * i + 1) as f64 * h.0, lo.1 + (2 * j + 1) as f64 * h.1), h)
            })
            .collect()
    };

    let mut best = (f64::INFINITY, (0.0, 0.0));
    let mut step = ((hi.0 - lo.0) / GRID as f64).max((hi.1 - lo.1) / GRID as f64).max(1e-3);
    for (t, _) in grid(lo, hi) {
        let value = eval(t);
        if value < best.0 {
            best = (value, t);
        }
    }
    const DIRS: [V; 8] =
        [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
    let descent_budget = budget - GRID * GRID;
    while step > 1e-13 * (1.0 + best.1 .0.abs() + best.1 .1.abs()) && used.get() + DIRS.len() <= descent_budget {
        let mut moved = false;
        for d in DIRS {
            let t = (best.1 .0 + step * d.0, best.1 .1 + step * d.1);
            let value = eval(t);
            if value < best.0 {
                best = (value, t);
                moved = true;
            }
        }
        if !moved {
            step /= 2.0;
        }
    }

    let (value, t) = best;
    let has_lines = ev.a.iter().chain(&ev.b).any(|e| matches!(e, FElem::Line { .. }));
    let error = 2.0 * ev.error(t);
    let bounds = if has_lines || !value.is_finite() {
        DistanceBounds { lower: 0.0, upper: value + error, certified: false, at: t }
    } else {
        let grow = value + error;
        let (glo, ghi) = ((lo.0 - grow, lo.1 - grow), (hi.0 + grow, hi.1 + grow));
        let lower = grid(glo, ghi)
            .into_iter()
            .map(|(c, h)| ev.symmetric(c) - 2.0 * ev.error(c) - h.0.hypot(h.1))
            .fold(f64::INFINITY, f64::min)
            .max(0.0)
            .min(value);
        DistanceBounds { lower, upper: value + error, certified: true, at: t }
    };
    Ok((t, value, bounds))
}

fn bbox(elems: &[FElem]) -> (V, V) {
    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for e in elems {
        let pts: &[V] = match e {
            FElem::Seg { a, b } => &[*a, *b],
            FElem::Line { p, .. } => std::slice::from_ref(p),
        };
        for p in pts {
            lo = (lo.0.min(p.0), lo.1.min(p.1));
            hi = (hi.0.max(p.0), hi.1.max(p.1));
        }
    }
    (lo, hi)
}

/// Exact one-sided distance on the line: `max_p dist(p + u, Q)`.
pub fn directed_distance_1d(inst: &SegContPntInstance, u: &Rational) -> Rational {
    inst.p()
        .iter()
        .map(|p| inst.q().distance_to(&(p + u)).expect("non-empty"))
        .max()
        .expect("non-empty")
}

/// Exact `d_H'(P, Q) = min_u max_p dist(p + u, Q)` with a minimizing `u`.
///
/// Each `u -> dist(p + u, Q)` is piecewise linear with slopes `±1` and
/// breakpoints at `e - p` for endpoints `e` of `Q`; the minimum of their
/// upper envelope is at a breakpoint or where a falling piece of one point
/// meets a rising piece of another, i.e. at `u = (e1 + e2 - p1 - p2) / 2`.
/// Returns the smallest minimizing candidate.
pub fn min_directed_distance_1d(inst: &SegContPntInstance) -> (Rational, Rational) {
    let mut ends: Vec<&Rational> = inst.q().endpoints().collect();
    ends.sort();
    ends.dedup();
    let mut pts: Vec<&Rational> = inst.p().iter().collect();
    pts.sort();
    pts.dedup();
    let mut sums: Vec<Rational> = Vec::new();
    for (i, e1) in ends.iter().enumerate() {
        for e2 in &ends[i..] {
            sums.push(*e1 + *e2);
        }
    }
    let mut psums: Vec<Rational> = Vec::new();
    for (i, p1) in pts.iter().enumerate() {
        for p2 in &pts[i..] {
            psums.push(*p1 + *p2);
        }
    }
    let half = Rational::frac(1, 2);
    let mut cands: Vec<Rational> = Vec::with_capacity(sums.len() * psums.len());
    for e in &sums {
        cands.extend(psums.iter().map(|p| &(e - p) * &half));
    }
    cands.sort();
    cands.dedup();
    cands
        .into_iter()
        .map(|u| (directed_distance_1d(inst, &u), u))
        .min()
        .map(|(d, u)| (u, d))
        .expect("non-empty")
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

    fn set(elems: Vec<Element>) -> SegmentSet {
        SegmentSet::new(elems).unwrap()
    }

    #[test]
    fn directed_examples() {
        let x_axis = set(vec![Element::horizontal_line(r(0))]);
        assert_eq!(directed_hausdorff(&set(vec![Element::point(p(0, 0))]), &x_axis).value, 0.0);
        let seg = set(vec![Element::Segment { a: p(0, 1), b: p(2, 1) }]);
        assert_eq!(directed_hausdorff(&seg, &x_axis).value, 1.0);
        let long = set(vec![Element::Segment { a: p(0, 0), b: p(4, 0) }]);
        let ends = set(vec![Element::point(p(0, 0)), Element::point(p(4, 0))]);
        assert!((directed_hausdorff(&long, &ends).value - 2.0).abs() < 1e-12);
        assert_eq!(directed_hausdorff(&ends, &long).value, 0.0);
        assert!(directed_hausdorff(&x_axis, &ends).value.is_infinite());
    }

    #[test]
    fn symmetric_examples() {
        let a = set(vec![Element::point(p(0, 0))]);
        let b = set(vec![Element::point(p(3, 4))]);
        assert_eq!(hausdorff(&a, &b).value, 5.0);
        assert_eq!(hausdorff(&a, &a).value, 0.0);
    }

    #[test]
    fn epsilon_examples() {
        let inst = SegContPntInstance::new(
            vec![Rational::frac(1, 2)],
            IntervalSet::new(vec![Interval::new(Rational::frac(1, 4), r(1)).unwrap()]).unwrap(),
        )
        .unwrap();
        let bound = compute_epsilon(&inst);
        assert_eq!(bound.m_max, BigInt::from(4));
        assert_eq!(bound.epsilon, Rational::frac(1, 512));
        let ints = SegContPntInstance::new(vec![r(0)], IntervalSet::from_points(&[r(3)])).unwrap();
        assert_eq!(compute_epsilon(&ints).epsilon, Rational::frac(1, 2));
    }

    #[test]
    fn gadget_lines() {
        let inst = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(0), r(1)])).unwrap();
        let (a, b, bound) = reduce_to_hausdorff(&inst);
        let eps = bound.epsilon.to_f64();
        let lines_b = set(b.elements()[2..].to_vec());
        let lines_a = set(a.elements()[2..].to_vec());
        assert!((directed_hausdorff(&lines_b, &lines_a).value - 0.8 * eps).abs() < 1e-15);
        assert!(hausdorff(&a, &b).value <= 0.8 * eps + 1e-12);
    }

    #[test]
    fn one_dimensional_distance() {
        // {0, 1} against {0}: best shift -1/2 at distance 1/2
        let inst = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(0)])).unwrap();
        assert_eq!(min_directed_distance_1d(&inst), (Rational::frac(-1, 2), Rational::frac(1, 2)));
        let yes = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(5), r(6)])).unwrap();
        assert_eq!(min_directed_distance_1d(&yes), (r(5), r(0)));
    }

    #[test]
    fn certification_examples() {
        let eps = 1.0 / 32.0;
        let no = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(0)])).unwrap();
        let (a, b) = hausdorff_gadget(&no, &Rational::frac(1, 32));
        let bounds = certify_threshold(&a, &b, eps, &gadget_search_box(&no, eps), eps / 4.0, 1_000_000).unwrap();
        assert!(bounds.lower >= eps, "{bounds:?}");

        let yes = SegContPntInstance::new(vec![r(0), r(1)], IntervalSet::from_points(&[r(0), r(1)])).unwrap();
        let (a, b) = hausdorff_gadget(&yes, &Rational::frac(1, 32));
        let bounds = certify_threshold(&a, &b, eps, &gadget_search_box(&yes, eps), eps / 4.0, 1_000_000).unwrap();
        assert!(bounds.upper < eps);

        assert!(matches!(
            certify_threshold(&a, &b, eps, &gadget_search_box(&yes, eps), eps / 4.0, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn self_match_under_translation() {
        let base = vec![p(0, 0), p(2, 1), p(-1, 3)];
        let a = set(base.iter().map(|q| Element::point(q + &p(3, 4))).collect());
        let b = set(base.into_iter().map(Element::point).collect());
        let (t, value, bounds) = min_hausdorff_translation(&a, &b, 100_000).unwrap();
        assert!((t.0 + 3.0).abs() < 1e-9 && (t.1 + 4.0).abs() < 1e-9, "{t:?}");
        assert!(value < 1e-9);
        assert!(bounds.certified && bounds.lower <= value);
    }

    #[test]
    fn json_tags() {
        let s = set(vec![Element::horizontal_line(r(1)), Element::point(p(0, 0))]);
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains("\"kind\":\"line\"") && text.contains("\"kind\":\"segment\""));
        assert_eq!(serde_json::from_str::<SegmentSet>(&text).unwrap(), s);
    }
}
