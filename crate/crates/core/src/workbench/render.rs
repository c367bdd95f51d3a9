use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::geom::Polygon;
use crate::hausdorff::{Element, SegmentSet};
use crate::rational::Rational;
use crate::rotation::WedgePolygon;

/// Figures that can be drawn.
#[derive(Clone, Debug)]
pub enum RenderObject {
    Comb(Polygon),
    CombPair(Polygon, Polygon),
    WedgePair(WedgePolygon, WedgePolygon),
    HausdorffGadget { a: SegmentSet, b: SegmentSet, eps: Rational },
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const PAD: f64 = 20.0;
const COLORS: [&str; 2] = ["#1f5fbf", "#c23b22"];

/// Maps a data box onto the canvas, each axis scaled independently so thin
/// gadgets stay visible.
struct Frame {
    lo: (f64, f64),
    hi: (f64, f64),
}

impl Frame {
    fn around(points: impl IntoIterator<Item = (f64, f64)>) -> Frame {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let grow = |lo: f64, hi: f64| {
            let span = hi - lo;
            let m = if span > 0.0 { span * 0.05 } else { lo.abs().max(1.0) * 0.05 };
            (lo - m, hi + m)
        };
        let (x0, x1) = grow(lo.0, hi.0);
        let (y0, y1) = grow(lo.1, hi.1);
        Frame { lo: (x0, y0), hi: (x1, y1) }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let px = PAD + (x - self.lo.0) / (self.hi.0 - self.lo.0) * (WIDTH - 2.0 * PAD);
        let py = PAD + (self.hi.1 - y) / (self.hi.1 - self.lo.1) * (HEIGHT - 2.0 * PAD);
        (px, py)
    }
}

fn path(frame: &Frame, pts: &[(f64, f64)], color: &str, class: &str) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = frame.map(*p);
        let _ = write!(d, "{}{x:.3} {y:.3} ", if i == 0 { "M" } else { "L" });
    }
    format!(
        "  <path class=\"{class}\" d=\"{d}Z\" fill=\"{color}\" fill-opacity=\"0.25\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
    )
}

fn polygon_points(p: &Polygon) -> Vec<(f64, f64)> {
    p.vertices().iter().map(|v| (v.x.to_f64(), v.y.to_f64())).collect()
}

fn document(body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n"
    )
}

fn gadget_body(a: &SegmentSet, b: &SegmentSet, eps: &Rational) -> String {
    let e = eps.to_f64();
    let mut xs: Vec<(f64, f64)> = vec![(0.0, -2.0 * e), (0.0, 2.0 * e)];
    for set in [a, b] {
        for el in set.elements() {
            match el {
                Element::Segment { a, b } => {
                    xs.push((a.x.to_f64(), a.y.to_f64()));
                    xs.push((b.x.to_f64(), b.y.to_f64()));
                }
                Element::Line { point, .. } => xs.push((point.x.to_f64(), point.y.to_f64())),
            }
        }
    }
    let frame = Frame::around(xs);
    let mut body = String::new();
    for (set, color) in [(a, COLORS[0]), (b, COLORS[1])] {
        for el in set.elements() {
            match el {
                Element::Segment { a, b } if a == b => {
                    let (x, y) = frame.map((a.x.to_f64(), a.y.to_f64()));
                    let _ = writeln!(body, "  <circle class=\"point\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"{color}\"/>");
                }
                Element::Segment { a, b } => {
                    let (x1, y1) = frame.map((a.x.to_f64(), a.y.to_f64()));
                    let (x2, y2) = frame.map((b.x.to_f64(), b.y.to_f64()));
                    let _ = writeln!(
                        body,
                        "  <line class=\"segment\" x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{color}\" stroke-width=\"3\"/>"
                    );
                }
                Element::Line { point, dir } => {
                    // clip to the visible x range (lines of the gadget are horizontal)
                    let (dx, dy) = (dir.x.to_f64(), dir.y.to_f64());
                    let (px, py) = (point.x.to_f64(), point.y.to_f64());
                    let at = |x: f64| if dx == 0.0 { (px, frame.lo.1 + (x - frame.lo.0)) } else { (x, py + (x - px) * dy / dx) };
                    let (x1, y1) = frame.map(at(frame.lo.0));
                    let (x2, y2) = frame.map(at(frame.hi.0));
                    let _ = writeln!(
                        body,
                        "  <line class=\"gadget-line\" data-y=\"{py:e}\" x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{color}\" stroke-dasharray=\"6 3\"/>"
                    );
                }
            }
        }
    }
    body
}

/// Standalone SVG 1.1 document for `object`.
pub fn svg_string(object: &RenderObject) -> String {
    let body = match object {
        RenderObject::Comb(p) => {
            let pts = polygon_points(p);
            path(&Frame::around(pts.iter().copied()), &pts, COLORS[1], "polygon")
        }
        RenderObject::CombPair(a, b) => {
            let (pa, pb) = (polygon_points(a), polygon_points(b));
            let frame = Frame::around(pa.iter().chain(&pb).copied());
            path(&frame, &pb, COLORS[1], "polygon") + &path(&frame, &pa, COLORS[0], "polygon")
        }
        RenderObject::WedgePair(a, b) => {
            let frame = Frame::around(a.vertices().iter().chain(b.vertices()).copied());
            path(&frame, b.vertices(), COLORS[1], "wedge") + &path(&frame, a.vertices(), COLORS[0], "wedge")
        }
        RenderObject::HausdorffGadget { a, b, eps } => gadget_body(a, b, eps),
    };
    document(&body)
}

pub fn render_svg(object: &RenderObject, path: &Path) -> Result<()> {
    std::fs::write(path, svg_string(object))?;
    Ok(())
}
