//! Smallest enclosing affine-regular hexagon of a centrally symmetric
//! polygon, and the triangle whose Minkowski symmetrization it is.
//!
//! A hexagon centred at the origin is cut out by two strips `S1`, `S2`
//! (the parallelogram `Q = A B A° B°`) and a third strip whose sides `UV`,
//! `U°V°` are parallel to `BB°` at half its length. Hexagon vertices are
//! `B, U, V, B°, U°, V°` counter-clockwise, with `U = (B - A) / 2` and
//! `V = -(A + B) / 2`, so `|H| = 3|Q| / 4`.

use std::f64::consts::PI;

use crate::geom::{convex_hull, ConvexPolygon, Direction, Point, SymmetricPolygon};
use crate::{Error, Result};

/// The region `{ x : |<n, x>| <= c }`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Strip {
    normal: Point,
    half_width: f64,
}

impl Strip {
    /// `normal` is normalized; it must be finite and nonzero, and
    /// `half_width` positive.
    pub fn new(normal: Point, half_width: f64) -> Result<Self> {
        let len = normal.norm();
        if !normal.is_finite() || len == 0.0 {
            return Err(Error::InvalidStrip("normal must be finite and nonzero"));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidStrip("half-width must be positive"));
        }
        Ok(Strip {
            normal: normal / len,
            half_width,
        })
    }

    pub fn from_angle(angle: f64, half_width: f64) -> Result<Self> {
        Strip::new(Direction::new(angle).unit(), half_width)
    }

    pub fn normal(&self) -> Point {
        self.normal
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        p.dot(self.normal).abs() <= self.half_width + tol
    }
}

/// Affine-regular hexagon centred at the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineHexagon {
    b: Point,
    u: Point,
    v: Point,
    s1: Strip,
    s2: Strip,
}

impl AffineHexagon {
    /// `[B, U, V, B°, U°, V°]`, counter-clockwise.
    pub fn vertices(&self) -> [Point; 6] {
        [self.b, self.u, self.v, -self.b, -self.u, -self.v]
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn u(&self) -> Point {
        self.u
    }

    pub fn v(&self) -> Point {
        self.v
    }

    /// Parallelogram corner `A` cut off by the third strip.
    pub fn corner_a(&self) -> Point {
        self.b - self.u * 2.0
    }

    pub fn strips(&self) -> (Strip, Strip) {
        (self.s1, self.s2)
    }

    /// The strip supporting sides `UV` and `U°V°`.
    pub fn strip3(&self) -> Strip {
        let n = self.b.perp().normalized();
        Strip {
            normal: n,
            half_width: n.dot(self.u),
        }
    }

    /// `[A, B, A°, B°]`, counter-clockwise.
    pub fn parallelogram(&self) -> [Point; 4] {
        let a = self.corner_a();
        [a, self.b, -a, -self.b]
    }

    pub fn parallelogram_area(&self) -> f64 {
        shoelace(&self.parallelogram())
    }

    pub fn area(&self) -> f64 {
        shoelace(&self.vertices())
    }

    pub fn polygon(&self) -> ConvexPolygon {
        ConvexPolygon::from_ccw_unchecked(self.vertices().to_vec())
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.s1.contains(p, tol) && self.s2.contains(p, tol) && self.strip3().contains(p, tol)
    }
}

fn shoelace(v: &[Point]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>()
}

/// A triangle with counter-clockwise vertices; collinear triangles carry
/// the degenerate flag.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    pub vertices: [Point; 3],
    pub degenerate: bool,
}

impl Triangle {
    /// Orders the vertices counter-clockwise.
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        let o = (b - a).cross(c - a);
        let scale = (b - a).norm2().max((c - a).norm2()).max((c - b).norm2());
        let degenerate = o.abs() <= 1e-12 * scale;
        let vertices = if o < 0.0 { [a, c, b] } else { [a, b, c] };
        Triangle {
            vertices,
            degenerate,
        }
    }

    pub fn area(&self) -> f64 {
        if self.degenerate {
            return 0.0;
        }
        let [a, b, c] = self.vertices;
        0.5 * (b - a).cross(c - a).abs()
    }

    pub fn polygon(&self) -> ConvexPolygon {
        convex_hull(&self.vertices).expect("finite vertices")
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.polygon().contains(p, tol)
    }
}

/// Hexagon generated by two strips: `B` is where the upper side of `s1`
/// meets the side of `s2` that follows it counter-clockwise.
pub fn hexagon_from_strips(s1: &Strip, s2: &Strip) -> Result<AffineHexagon> {
    let (n1, c1) = (s1.normal, s1.half_width);
    let (mut n2, c2) = (s2.normal, s2.half_width);
    let mut det = n1.cross(n2);
    if det.abs() <= 1e-9_f64.sin() {
        return Err(Error::DegenerateStripPair);
    }
    if det < 0.0 {
        n2 = -n2;
        det = -det;
    }
    let b = (-n2.perp() * c1 + n1.perp() * c2) / det;
    let u = n1.perp() * (c2 / det);
    Ok(AffineHexagon {
        b,
        u,
        v: u - b,
        s1: *s1,
        s2: Strip {
            normal: n2,
            half_width: c2,
        },
    })
}

/// Triangle `T` with `(T - T) / 2 = H`: vertex `k` is two thirds of the sum
/// of hexagon vertices `2k - 1` and `2k`.
pub fn triangle_from_hexagon(h: &AffineHexagon) -> Triangle {
    let v = h.vertices();
    let t = |i: usize| (v[i] + v[i + 1]) * (2.0 / 3.0);
    Triangle::new(t(0), t(2), t(4))
}

/// Circumscribed hexagon for one edge of the sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeHexagon {
    /// Edge of `P` supported by `S1`.
    pub edge: usize,
    /// Unwrapped outward-normal angle of the `S2` side `BU`.
    pub angle: f64,
    pub hexagon: AffineHexagon,
}

/// The hexagon circumscribed to `p` whose first strip supports edge `i`.
pub fn circumscribe_for_edge(p: &SymmetricPolygon, i: usize) -> Result<AffineHexagon> {
    let cal = Calipers::new(p)?;
    let half = cal.m / 2;
    if i >= half {
        return Err(Error::EdgeIndex { index: i, half });
    }
    let mut st = cal.fresh_state(i);
    Ok(cal.solve_edge(i, &mut st).hexagon)
}

/// Circumscribed hexagons for edges `0..n` of a `2n`-gon, computed by one
/// rotating-calipers sweep.
pub fn circumscribed_sweep(p: &SymmetricPolygon) -> Result<Vec<EdgeHexagon>> {
    let cal = Calipers::new(p)?;
    let half = cal.m / 2;
    let mut st = cal.fresh_state(0);
    let mut out = Vec::with_capacity(half);
    for i in 0..half {
        out.push(cal.solve_edge(i, &mut st));
    }
    Ok(out)
}

/// Smallest-area affine-regular hexagon containing `p`, with the edge of
/// `p` its first strip supports. Ties go to the lowest edge index.
pub fn min_affine_hexagon(p: &SymmetricPolygon) -> Result<(AffineHexagon, usize)> {
    let sweep = circumscribed_sweep(p)?;
    let mut best: Option<(f64, usize)> = None;
    for (k, e) in sweep.iter().enumerate() {
        let a = e.hexagon.area();
        match best {
            Some((b, _)) if a >= b - 1e-12 * b => {}
            _ => best = Some((a, k)),
        }
    }
    let (_, k) = best.expect("at least one edge");
    Ok((sweep[k].hexagon, sweep[k].edge))
}

struct SweepState {
    /// Lower end of the `S2` angle range still to be scanned.
    beta: f64,
    /// Vertex touched by `S2`; unbounded index.
    q: usize,
    /// Vertex supporting a tangent parallel to `UV`; unbounded index,
    /// offset so it can step backwards.
    r: usize,
}

/// `sin` of the angle between the strips below which `S2` counts as
/// coinciding with `S1`.
const DET_EPS: f64 = 1e-12;

/// Fixed data for one edge: `S1` is `<n1, x> = c1` with outward-normal
/// angle `alpha`.
#[derive(Clone, Copy)]
struct EdgeFrame {
    n1: Point,
    c1: f64,
    alpha: f64,
}

struct Calipers<'a> {
    v: &'a [Point],
    m: usize,
    /// Unwrapped outward-normal angles of edges `0..m`.
    phi: Vec<f64>,
    scale: f64,
}

impl<'a> Calipers<'a> {
    fn new(p: &'a SymmetricPolygon) -> Result<Self> {
        if p.is_degenerate() {
            return Err(Error::NoPlanarHexagon);
        }
        let v = p.vertices();
        let m = v.len();
        let normal = |j: usize| {
            let e = v[(j + 1) % m] - v[j];
            Point::new(e.y, -e.x)
        };
        let mut phi = Vec::with_capacity(m);
        let n0 = normal(0);
        phi.push(n0.y.atan2(n0.x));
        for j in 1..m {
            let (a, b) = (normal(j - 1), normal(j));
            phi.push(phi[j - 1] + a.cross(b).atan2(a.dot(b)));
        }
        Ok(Calipers {
            v,
            m,
            phi,
            scale: p.polygon().scale(),
        })
    }

    #[inline]
    fn vert(&self, j: usize) -> Point {
        self.v[j % self.m]
    }

    /// Unwrapped normal angle of edge `j` (unbounded index).
    fn edge_angle(&self, j: usize) -> f64 {
        self.phi[j % self.m] + 2.0 * PI * (j / self.m) as f64
    }

    fn frame(&self, i: usize) -> EdgeFrame {
        let e = self.vert(i + 1) - self.vert(i);
        let n1 = Point::new(e.y, -e.x).normalized();
        EdgeFrame {
            n1,
            c1: n1.dot(self.vert(i)),
            alpha: self.edge_angle(i),
        }
    }

    fn fresh_state(&self, i: usize) -> SweepState {
        SweepState {
            beta: self.edge_angle(i),
            q: i + 1,
            r: 8 * self.m,
        }
    }

    /// Moves `r` to a vertex maximizing `<n, v>`; the dot product is
    /// unimodal along a convex polygon.
    fn climb(&self, r: &mut usize, n: Point) {
        while n.dot(self.vert(*r + 1) - self.vert(*r)) > 0.0 {
            *r += 1;
        }
        while n.dot(self.vert(*r - 1) - self.vert(*r)) > 0.0 {
            *r -= 1;
        }
        if *r < 2 * self.m {
            *r += 4 * self.m;
        }
    }

    /// `B * det`, `U * det` and `det` for an `S2` normal `w` (any length).
    /// All three are linear in `w`.
    #[inline]
    fn homogeneous(&self, f: &EdgeFrame, q: Point, w: Point) -> (Point, Point, f64) {
        let c2 = w.dot(q);
        let bh = -w.perp() * f.c1 + f.n1.perp() * c2;
        let uh = f.n1.perp() * c2;
        (bh, uh, f.n1.cross(w))
    }

    /// Signed gap `<n3, U> - h_P(n3)` of the `UV` side; positive while `UV`
    /// is clear of `P`. Updates `r` to the supporting vertex.
    fn gap(&self, f: &EdgeFrame, q: usize, r: &mut usize, beta: f64) -> f64 {
        let w = Direction::new(beta).unit();
        let (bh, uh, det) = self.homogeneous(f, self.vert(q), w);
        // just past S1, B tends to q while U runs off to infinity
        if det <= DET_EPS {
            return f64::INFINITY;
        }
        let n3 = bh.perp().normalized();
        self.climb(r, n3);
        (n3.dot(uh) / det) - n3.dot(self.vert(*r))
    }

    fn n3_at(&self, f: &EdgeFrame, q: usize, beta: f64) -> Point {
        let w = Direction::new(beta).unit();
        let (bh, _, det) = self.homogeneous(f, self.vert(q), w);
        if det <= DET_EPS {
            // S2 has just left S1: B sits at q
            self.vert(q).perp().normalized()
        } else {
            bh.perp().normalized()
        }
    }

    /// First angle in `(lo, hi]` at which `n3` reaches the normal of edge
    /// `(r, r + 1)`.
    fn r_event(&self, f: &EdgeFrame, q: usize, r: usize, lo: f64, hi: f64) -> Option<f64> {
        let e = self.vert(r + 1) - self.vert(r);
        let qv = self.vert(q);
        let lin = |w: Point| self.homogeneous(f, qv, w).0.cross(e);
        let (pc, sc) = (lin(Point::new(1.0, 0.0)), lin(Point::new(0.0, 1.0)));
        if pc == 0.0 && sc == 0.0 {
            return None;
        }
        let root = (-pc).atan2(sc);
        // B vanishes at the start of an edge when q lies on S1, which is
        // not an event
        let mut b = lift(root, lo);
        if b <= lo + DET_EPS {
            b += PI;
        }
        while b <= hi {
            let (bh, _, _) = self.homogeneous(f, qv, Direction::new(b).unit());
            if bh.dot(e) < 0.0 {
                return Some(b);
            }
            b += PI;
        }
        None
    }

    /// Angles in `[lo, hi]` where `r` lies on line `UV` for the current `q`.
    fn root_candidates(&self, f: &EdgeFrame, q: usize, r: usize, lo: f64, hi: f64) -> Vec<f64> {
        let (qv, rv) = (self.vert(q), self.vert(r));
        let quad = |w: Point| {
            let (bh, uh, det) = self.homogeneous(f, qv, w);
            bh.cross(rv * det - uh)
        };
        let a = quad(Point::new(1.0, 0.0));
        let d = quad(Point::new(0.0, 1.0));
        let b = quad(Point::new(1.0, 1.0)) - a - d;
        // F = (a + d)/2 + (a - d)/2 cos 2t + b/2 sin 2t
        let (x, y) = (0.5 * (a - d), 0.5 * b);
        let amp = x.hypot(y);
        let mag = a.abs() + b.abs() + d.abs();
        if amp <= 1e-15 * mag || mag == 0.0 {
            return Vec::new();
        }
        let k = -0.5 * (a + d) / amp;
        if k.abs() > 1.0 + 1e-12 {
            return Vec::new();
        }
        let gamma = y.atan2(x);
        let ac = k.clamp(-1.0, 1.0).acos();
        let eps = 1e-12;
        let mut out: Vec<f64> = [0.5 * (gamma + ac), 0.5 * (gamma - ac)]
            .iter()
            .map(|&t| lift(t, lo - eps))
            .filter(|&t| t <= hi + eps && t > f.alpha + eps && t < f.alpha + PI - eps)
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    /// Root of the gap in `[lo, hi]`, given `gap(lo) > 0 >= gap(hi)`.
    fn bisect(&self, f: &EdgeFrame, q: usize, r: &mut usize, mut lo: f64, mut hi: f64) -> f64 {
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if self.gap(f, q, r, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn build(&self, f: &EdgeFrame, q: usize, beta: f64, edge: usize) -> EdgeHexagon {
        let n2 = Direction::new(beta).unit();
        let s1 = Strip {
            normal: f.n1,
            half_width: f.c1,
        };
        let s2 = Strip {
            normal: n2,
            half_width: n2.dot(self.vert(q)),
        };
        let hexagon = hexagon_from_strips(&s1, &s2).expect("S2 is rotated strictly inside (0, pi)");
        EdgeHexagon {
            edge,
            angle: beta,
            hexagon,
        }
    }

    /// Rotates `S2` counter-clockwise from `st.beta` until side `UV`
    /// touches `P`, advancing `q` and `r` through their events.
    fn solve_edge(&self, i: usize, st: &mut SweepState) -> EdgeHexagon {
        let f = self.frame(i);
        let beta_max = f.alpha + PI;
        let tol = 1e-11 * self.scale;
        let mut lo = st.beta.max(f.alpha);
        if st.q < i + 1 {
            st.q = i + 1;
        }
        while self.edge_angle(st.q) <= lo {
            st.q += 1;
        }
        let n3 = self.n3_at(&f, st.q, lo);
        self.climb(&mut st.r, n3);
        if lo > f.alpha && self.gap(&f, st.q, &mut st.r, lo) < -tol {
            // the carried angle overshot this edge's root; restart the edge
            *st = self.fresh_state(i);
            st.r = 8 * self.m;
            lo = f.alpha;
            self.climb(&mut st.r, self.n3_at(&f, st.q, lo));
        }

        for _ in 0..4 * self.m + 16 {
            let hi_q = self.edge_angle(st.q).min(beta_max);
            let r_ev = self.r_event(&f, st.q, st.r, lo, hi_q);
            let hi = r_ev.unwrap_or(hi_q);
            let mut r_hi = st.r;
            let g_hi = if hi >= beta_max { -1.0 } else { self.gap(&f, st.q, &mut r_hi, hi) };
            if g_hi <= 0.0 {
                let beta = self.root_in(&f, st, lo, hi);
                st.beta = beta;
                return self.build(&f, st.q, beta, i);
            }
            match r_ev {
                Some(b) => {
                    st.r += 1;
                    lo = b;
                }
                None => {
                    st.q += 1;
                    lo = hi_q;
                }
            }
            while self.edge_angle(st.q) <= lo {
                st.q += 1;
            }
        }
        // event bookkeeping failed to converge; fall back to plain bisection
        let mut q = i + 1;
        let mut r = st.r;
        let mut lo = f.alpha;
        let mut hi = beta_max;
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            q = self.support_q(q.max(i + 1), mid);
            if self.gap(&f, q, &mut r, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let beta = 0.5 * (lo + hi);
        let q = self.support_q(i + 1, beta);
        *st = SweepState { beta, q, r };
        self.build(&f, q, beta, i)
    }

    fn support_q(&self, mut q: usize, beta: f64) -> usize {
        while self.edge_angle(q) < beta {
            q += 1;
        }
        while q > 0 && self.edge_angle(q - 1) > beta {
            q -= 1;
        }
        q
    }

    /// Closed-form root within one event interval, with bisection as backup.
    fn root_in(&self, f: &EdgeFrame, st: &mut SweepState, lo: f64, hi: f64) -> f64 {
        let tol = 1e-10 * self.scale;
        for beta in self.root_candidates(f, st.q, st.r, lo, hi) {
            let beta = beta.clamp(lo.max(f.alpha + 1e-15), hi);
            let mut r = st.r;
            let g = self.gap(f, st.q, &mut r, beta);
            if g.abs() <= tol {
                st.r = r;
                return beta;
            }
        }
        let lo = if lo <= f.alpha { f.alpha + 1e-15 } else { lo };
        self.bisect(f, st.q, &mut st.r, lo, hi)
    }
}

/// Smallest `t + k*pi` that is `>= lo`.
fn lift(t: f64, lo: f64) -> f64 {
    t + PI * ((lo - t) / PI).ceil()
}
