use std::cmp::Ordering;

use super::{coord_scale, orient, Direction, Point, COLLINEAR_TOL};
use crate::{Error, Result};

/// Dimension of a convex polygon after normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    Point,
    Segment,
    Polygon,
}

/// A convex polygon with counter-clockwise, strictly convex vertices.
///
/// One vertex encodes a point and two vertices a segment; both are valid
/// values and report themselves through [`ConvexPolygon::degeneracy`].
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Convex hull of `points`.
    pub fn new(points: &[Point]) -> Result<Self> {
        convex_hull(points)
    }

    /// Wraps vertices that are already counter-clockwise and strictly convex.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        debug_assert!(!vertices.is_empty());
        ConvexPolygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex `i` modulo the vertex count.
    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    pub fn degeneracy(&self) -> Degeneracy {
        match self.vertices.len() {
            1 => Degeneracy::Point,
            2 => Degeneracy::Segment,
            _ => Degeneracy::Polygon,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.degeneracy() != Degeneracy::Polygon
    }

    /// Shoelace area; zero for points and segments.
    pub fn area(&self) -> f64 {
        if self.is_degenerate() {
            return 0.0;
        }
        let o = self.vertices[0];
        let s: f64 = self
            .vertices
            .windows(2)
            .skip(1)
            .map(|w| (w[0] - o).cross(w[1] - o))
            .sum();
        0.5 * s
    }

    /// Boundary length. A segment is traversed twice, so its perimeter is
    /// twice its length.
    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        if n == 1 {
            return 0.0;
        }
        (0..n).map(|i| self.vertex(i).dist(self.vertex(i + 1))).sum()
    }

    /// Support function `h(u) = max <v, u>` over vertices.
    pub fn support(&self, u: Direction) -> f64 {
        self.support_vec(u.unit())
    }

    /// Support value for an arbitrary (not necessarily unit) vector.
    pub fn support_vec(&self, u: Point) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Index of a vertex attaining the support value in direction `u`.
    pub fn support_index(&self, u: Point) -> usize {
        let mut best = 0;
        let mut val = f64::NEG_INFINITY;
        for (i, v) in self.vertices.iter().enumerate() {
            let d = v.dot(u);
            if d > val {
                val = d;
                best = i;
            }
        }
        best
    }

    /// Length of the projection on a line of slope `theta`.
    pub fn width(&self, theta: f64) -> f64 {
        let u = Direction::new(theta).unit();
        self.support_vec(u) + self.support_vec(-u)
    }

    /// Edge `i` as the vector from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Point {
        self.vertex(i + 1) - self.vertex(i)
    }

    /// Unit outward normals of all edges (proper polygons only).
    pub fn outward_normals(&self) -> Vec<Point> {
        (0..self.len())
            .map(|i| {
                let e = self.edge(i);
                Point::new(e.y, -e.x).normalized()
            })
            .collect()
    }

    /// Unit normals whose half-planes cut out the polygon, also for
    /// degenerate polygons (a segment uses its direction and its normal,
    /// a point the coordinate axes).
    pub fn facet_normals(&self) -> Vec<Point> {
        match self.degeneracy() {
            Degeneracy::Polygon => self.outward_normals(),
            Degeneracy::Segment => {
                let d = self.edge(0).normalized();
                vec![d, d.perp(), -d, -d.perp()]
            }
            Degeneracy::Point => vec![
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0),
                Point::new(-1.0, 0.0),
                Point::new(0.0, -1.0),
            ],
        }
    }

    /// Largest absolute coordinate, used to scale tolerances.
    pub fn scale(&self) -> f64 {
        coord_scale(&self.vertices)
    }

    /// Diameter by rotating calipers over antipodal vertex pairs.
    pub fn diameter(&self) -> f64 {
        let n = self.len();
        match n {
            1 => 0.0,
            2 => self.vertices[0].dist(self.vertices[1]),
            _ => {
                let mut best: f64 = 0.0;
                let mut j = 1;
                for i in 0..n {
                    let (a, b) = (self.vertex(i), self.vertex(i + 1));
                    while orient(a, b, self.vertex(j + 1)) > orient(a, b, self.vertex(j)) {
                        j += 1;
                    }
                    best = best.max(a.dist(self.vertex(j))).max(b.dist(self.vertex(j)));
                }
                best
            }
        }
    }

    /// Whether `p` lies in the polygon, allowing `tol` of slack.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.facet_normals().iter().all(|&n| p.dot(n) <= self.support_vec(n) + tol)
    }

    pub fn translate(&self, t: Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + t).collect(),
        }
    }

    /// Rotation about the origin; rotation preserves orientation and convexity.
    pub fn rotate(&self, angle: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| v.rotate(angle)).collect(),
        }
    }

    pub fn vertex_mean(&self) -> Point {
        let s = self.vertices.iter().fold(Point::ORIGIN, |a, &v| a + v);
        s / self.len() as f64
    }
}

fn lex_yx(a: &Point, b: &Point) -> Ordering {
    let c = |s: f64, t: f64| s.partial_cmp(&t).unwrap_or(Ordering::Equal);
    c(a.y, b.y).then(c(a.x, b.x))
}

/// Convex hull by Andrew's monotone chain, O(n log n).
///
/// Collinear and duplicate points are dropped; the result starts at the
/// lowest (then leftmost) vertex.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let scale = coord_scale(points);
    let eps = COLLINEAR_TOL * scale * scale;

    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() == 1 {
        return Ok(ConvexPolygon::from_ccw_unchecked(pts));
    }

    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= eps {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= eps {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(ConvexPolygon::from_ccw_unchecked(normalize_ccw(hull, eps)))
}

/// Removes (cyclically) vertices that are collinear with their neighbours
/// or coincide, then rotates so the lowest-leftmost vertex comes first.
pub(crate) fn normalize_ccw(mut v: Vec<Point>, eps: f64) -> Vec<Point> {
    loop {
        let n = v.len();
        if n < 3 {
            break;
        }
        let flat = |i: usize| orient(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) <= eps;
        // prefer dropping a vertex that sits between its neighbours
        let between = |i: usize| (v[(i + n - 1) % n] - v[i]).dot(v[(i + 1) % n] - v[i]) <= 0.0;
        let bad = (0..n)
            .find(|&i| flat(i) && between(i))
            .or_else(|| (0..n).find(|&i| flat(i)));
        match bad {
            Some(i) => {
                v.remove(i);
            }
            None => break,
        }
    }
    if v.len() == 2 && v[0] == v[1] {
        v.pop();
    }
    if v.len() == 2 {
        // a segment: keep the endpoints, dropping any interior survivors
        v.sort_by(lex_yx);
    }
    if let Some(start) = (0..v.len()).min_by(|&i, &j| lex_yx(&v[i], &v[j])) {
        v.rotate_left(start);
    }
    v
}

/// Angular order of edge vectors, measured counter-clockwise from +x in `[0, 2pi)`.
fn angle_cmp(a: Point, b: Point) -> Ordering {
    let half = |p: Point| if p.y > 0.0 || (p.y == 0.0 && p.x > 0.0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.0_f64.total_cmp(&a.cross(b)))
}

/// Minkowski symmetrization `(P - P) / 2`, built by merging the edge
/// sequences of `P` and `-P` in angular order (linear in the vertex count).
pub fn minkowski_symmetrize(p: &ConvexPolygon) -> SymmetricPolygon {
    let v = p.vertices();
    if p.is_degenerate() {
        let pts: Vec<Point> = v
            .iter()
            .flat_map(|&a| v.iter().map(move |&b| (a - b) * 0.5))
            .collect();
        return SymmetricPolygon::from_points(&pts).expect("finite nonempty input");
    }
    let m = v.len();
    let lo = (0..m).min_by(|&i, &j| lex_yx(&v[i], &v[j])).unwrap();
    let hi = (0..m).max_by(|&i, &j| lex_yx(&v[i], &v[j])).unwrap();
    let e = |i: usize| v[(i + 1) % m] - v[i % m];

    let mut out = Vec::with_capacity(2 * m);
    let mut cur = v[lo] - v[hi];
    let (mut i, mut j) = (0, 0);
    while i < m || j < m {
        out.push(cur);
        let a = (i < m).then(|| e(lo + i));
        let b = (j < m).then(|| -e(hi + j));
        let step = match (a, b) {
            (Some(a), Some(b)) => match angle_cmp(a, b) {
                Ordering::Less => {
                    i += 1;
                    a
                }
                Ordering::Greater => {
                    j += 1;
                    b
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    a + b
                }
            },
            (Some(a), None) => {
                i += 1;
                a
            }
            (None, Some(b)) => {
                j += 1;
                b
            }
            (None, None) => unreachable!(),
        };
        cur = cur + step;
    }
    let half: Vec<Point> = out.into_iter().map(|q| q * 0.5).collect();
    let scale = coord_scale(&half);
    let eps = COLLINEAR_TOL * scale * scale;
    SymmetricPolygon::from_hull(normalize_ccw(half, eps))
}

/// A convex polygon centrally symmetric about the origin: vertex `i + n`
/// is exactly the negation of vertex `i`, where `2n` is the vertex count.
///
/// A centred segment has two vertices and the origin alone has one.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPolygon {
    poly: ConvexPolygon,
}

impl SymmetricPolygon {
    /// Hull of `points` together with their negations.
    pub fn from_points(points: &[Point]) -> Result<Self> {
        let mut all = Vec::with_capacity(2 * points.len());
        all.extend_from_slice(points);
        all.extend(points.iter().map(|&p| -p));
        let hull = convex_hull(&all)?;
        Ok(Self::from_hull(hull.vertices))
    }

    /// Symmetric polygon from a counter-clockwise hull that is symmetric up
    /// to rounding. Antipodal vertex pairs are averaged.
    pub(crate) fn from_hull(h: Vec<Point>) -> Self {
        let m = h.len();
        let vertices = match m {
            0 | 1 => vec![Point::ORIGIN],
            2 => {
                let w = (h[0] - h[1]) * 0.5;
                let w = if lex_yx(&w, &-w) == Ordering::Less { w } else { -w };
                vec![w, -w]
            }
            _ => {
                let lo = (0..m).min_by(|&i, &j| lex_yx(&h[i], &h[j])).unwrap();
                let hi = (0..m).max_by(|&i, &j| lex_yx(&h[i], &h[j])).unwrap();
                let k = (hi + m - lo) % m;
                let first: Vec<Point> = if 2 * k == m {
                    (0..k).map(|t| (h[(lo + t) % m] - h[(lo + t + k) % m]) * 0.5).collect()
                } else {
                    (0..k).map(|t| h[(lo + t) % m]).collect()
                };
                let mut v = first.clone();
                v.extend(first.iter().map(|&p| -p));
                v
            }
        };
        SymmetricPolygon {
            poly: ConvexPolygon::from_ccw_unchecked(vertices),
        }
    }

    /// Accepts a polygon already symmetric about the origin (within `tol`
    /// relative to its scale).
    pub fn try_from_polygon(p: &ConvexPolygon, tol: f64) -> Result<Self> {
        let s = Self::from_hull(p.vertices().to_vec());
        let scale = p.scale();
        let ok = p.len() == s.poly.len()
            && p
                .vertices()
                .iter()
                .all(|&v| s.poly.vertices().iter().any(|&w| v.dist(w) <= tol * scale));
        if ok {
            Ok(s)
        } else {
            Err(Error::NotSymmetric)
        }
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.poly
    }

    pub fn into_polygon(self) -> ConvexPolygon {
        self.poly
    }

    pub fn vertices(&self) -> &[Point] {
        self.poly.vertices()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of antipodal vertex pairs (`n` for a `2n`-gon).
    pub fn half_len(&self) -> usize {
        self.poly.len() / 2
    }

    pub fn is_degenerate(&self) -> bool {
        self.poly.is_degenerate()
    }

    pub fn area(&self) -> f64 {
        self.poly.area()
    }

    pub fn width(&self, theta: f64) -> f64 {
        self.poly.width(theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&p| p.into()).collect()
    }

    fn unit_square() -> ConvexPolygon {
        convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap()
    }

    #[test]
    fn hull_drops_interior_point() {
        let h = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.25, 0.25)])).unwrap();
        assert_eq!(h.vertices(), &pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])[..]);
    }

    #[test]
    fn hull_of_collinear_points_is_segment() {
        let h = convex_hull(&pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)])).unwrap();
        assert_eq!(h.degeneracy(), Degeneracy::Segment);
        assert_eq!(h.vertices(), &pts(&[(0.0, 0.0), (2.0, 2.0)])[..]);
        assert_eq!(h.area(), 0.0);
    }

    #[test]
    fn hull_errors() {
        assert_eq!(convex_hull(&[]), Err(Error::EmptyPointSet));
        assert_eq!(convex_hull(&[Point::new(f64::INFINITY, 0.0)]), Err(Error::NonFinite));
        let one = convex_hull(&pts(&[(2.0, 3.0), (2.0, 3.0)])).unwrap();
        assert_eq!(one.degeneracy(), Degeneracy::Point);
    }

    #[test]
    fn square_measures() {
        let sq = unit_square();
        assert_eq!(sq.area(), 1.0);
        assert_eq!(sq.perimeter(), 4.0);
        assert_eq!(sq.support(Direction::new(0.0)), 1.0);
        assert!((sq.support(Direction::new(FRAC_PI_4)) - SQRT_2).abs() < 1e-15);
        assert!((sq.width(FRAC_PI_4) - SQRT_2).abs() < 1e-15);
        assert!((sq.diameter() - SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn regular_hexagon_area() {
        let v: Vec<Point> = (0..6).map(|k| Direction::new(k as f64 * PI / 3.0).unit()).collect();
        let h = convex_hull(&v).unwrap();
        assert!((h.area() - 3.0 * 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn segment_measures() {
        let s = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0)])).unwrap();
        assert_eq!(s.area(), 0.0);
        assert_eq!(s.perimeter(), 2.0);
        assert_eq!(s.width(0.0), 1.0);
        assert!(s.width(PI / 2.0).abs() < 1e-16);
    }

    #[test]
    fn symmetrize_triangle_gives_hexagon() {
        let t = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)])).unwrap();
        let s = minkowski_symmetrize(&t);
        assert_eq!(s.len(), 6);
        assert!((s.area() - 3.0 * 3f64.sqrt() / 8.0).abs() < 1e-15);
        for i in 0..3 {
            assert_eq!(s.vertices()[i + 3], -s.vertices()[i]);
        }
    }

    #[test]
    fn symmetrize_segment() {
        let s = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0)])).unwrap();
        let m = minkowski_symmetrize(&s);
        assert_eq!(m.vertices(), &pts(&[(-0.5, 0.0), (0.5, 0.0)])[..]);
    }

    #[test]
    fn symmetrize_square_is_centred_square() {
        let m = minkowski_symmetrize(&unit_square());
        assert_eq!(m.len(), 4);
        assert!((m.area() - 1.0).abs() < 1e-15);
        assert!(m.polygon().contains(Point::new(0.5, 0.5), 1e-12));
    }

    #[test]
    fn symmetric_from_asymmetric_polygon_rejected() {
        assert_eq!(SymmetricPolygon::try_from_polygon(&unit_square(), 1e-9), Err(Error::NotSymmetric));
        let c = unit_square().translate(Point::new(-0.5, -0.5));
        assert!(SymmetricPolygon::try_from_polygon(&c, 1e-9).is_ok());
    }
}
