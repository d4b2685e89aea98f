use std::fmt::Write;

use transcover::{Point, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// The cover itself, solid.
    Cover,
    /// Reference outlines such as the symmetrized hull, dashed.
    Hull,
    /// Input figures at their placed positions.
    Figure,
    /// Figures that failed a containment check.
    Miss,
}

impl Style {
    fn attrs(self, stroke: f64, num: &impl Fn(f64) -> String) -> String {
        let (color, extra) = match self {
            Style::Cover => ("#000000", String::new()),
            Style::Hull => ("#777777", format!(" stroke-dasharray=\"{} {}\"", num(3.0 * stroke), num(2.0 * stroke))),
            Style::Figure => ("#1f5fbf", String::new()),
            Style::Miss => ("#c0392b", String::new()),
        };
        format!("fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"{extra}", num(stroke))
    }
}

#[derive(Clone, Debug, Default)]
pub struct Scene {
    polygons: Vec<(Vec<Point>, Style)>,
    segments: Vec<(Segment, Style)>,
    circles: Vec<(Point, f64, Style)>,
}

impl Scene {
    pub fn polygon(&mut self, pts: &[Point], style: Style) {
        self.polygons.push((pts.to_vec(), style));
    }

    pub fn segment(&mut self, s: Segment, style: Style) {
        self.segments.push((s, style));
    }

    pub fn circle(&mut self, c: Point, r: f64, style: Style) {
        self.circles.push((c, r, style));
    }

    fn bounds(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut add = |p: Point| {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        };
        self.polygons.iter().flat_map(|(v, _)| v.iter()).for_each(|&p| add(p));
        self.segments.iter().for_each(|(s, _)| {
            add(s.a);
            add(s.b);
        });
        self.circles.iter().for_each(|&(c, r, _)| {
            add(c - Point::new(r, r));
            add(c + Point::new(r, r));
        });
        if !lo.x.is_finite() {
            return (Point::new(-1.0, -1.0), Point::new(1.0, 1.0));
        }
        (lo, hi)
    }

    /// Renders with the y axis pointing up, a 5% margin and strokes at 0.5%
    /// of the larger extent.
    pub fn render(&self) -> String {
        let (lo, hi) = self.bounds();
        let extent = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let margin = 0.05 * extent;
        let stroke = 0.005 * extent;
        let num = |x: f64| fmt(x, extent);
        let (x0, y0) = (lo.x - margin, -hi.y - margin);
        let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
        let mut out = String::new();
        writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
            num(x0),
            num(y0),
            num(w),
            num(h)
        )
        .unwrap();
        for (pts, style) in &self.polygons {
            let coords: Vec<String> = pts.iter().map(|p| format!("{},{}", num(p.x), num(-p.y))).collect();
            let tag = if pts.len() > 2 { "polygon" } else { "polyline" };
            writeln!(out, "  <{tag} points=\"{}\" {}/>", coords.join(" "), style.attrs(stroke, &num)).unwrap();
        }
        for &(c, r, style) in &self.circles {
            writeln!(out, "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>", num(c.x), num(-c.y), num(r), style.attrs(stroke, &num))
                .unwrap();
        }
        for (s, style) in &self.segments {
            writeln!(
                out,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-linecap=\"round\" {}/>",
                num(s.a.x),
                num(-s.a.y),
                num(s.b.x),
                num(-s.b.y),
                style.attrs(stroke, &num)
            )
            .unwrap();
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Formats to 12 significant digits, snapping values that vanish at the
/// drawing's scale to zero.
fn fmt(x: f64, extent: f64) -> String {
    let r = crate::round12(x);
    if r.abs() <= 1e-12 * extent {
        "0".into()
    } else {
        r.to_string()
    }
}
