//! Planar convex geometry: points, segments, convex polygons, width and
//! support functions, Minkowski symmetrization, enclosing disks and
//! containment under translation.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Div, Mul, Neg, Sub};

mod chord;
mod disk;
mod polygon;

pub use chord::{fits_in_translate, longest_chord};
pub use disk::{smallest_enclosing_disk, smallest_enclosing_disk_seeded};
pub use polygon::{convex_hull, minkowski_symmetrize, ConvexPolygon, Degeneracy, SymmetricPolygon};

/// Relative tolerance for area and length comparisons.
pub const REL_TOL: f64 = 1e-9;

/// Collinearity threshold, multiplied by the squared coordinate scale.
pub const COLLINEAR_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    /// Rotation by +90 degrees.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn normalized(self) -> Point {
        self / self.norm()
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    #[inline]
    fn div(self, k: f64) -> Point {
        Point::new(self.x / k, self.y / k)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Orientation of the triple `(a, b, c)`: positive when counter-clockwise.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Largest absolute coordinate over `points`, never below 1e-300.
pub(crate) fn coord_scale(points: &[Point]) -> f64 {
    points
        .iter()
        .fold(0.0_f64, |m, p| m.max(p.max_abs()))
        .max(1e-300)
}

/// A closed line segment. Zero-length segments are allowed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn try_new(a: Point, b: Point) -> crate::Result<Self> {
        if a.is_finite() && b.is_finite() {
            Ok(Segment { a, b })
        } else {
            Err(crate::Error::NonFinite)
        }
    }

    /// Segment of the given length centred at `center` with direction angle `theta`.
    pub fn centered(center: Point, length: f64, theta: f64) -> Self {
        let h = Direction::new(theta).unit() * (length / 2.0);
        Segment::new(center - h, center + h)
    }

    pub fn vector(&self) -> Point {
        self.b - self.a
    }

    pub fn length(&self) -> f64 {
        self.vector().norm()
    }

    pub fn midpoint(&self) -> Point {
        (self.a + self.b) * 0.5
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    /// Direction angle in `[0, pi)`; 0 for a zero-length segment.
    pub fn angle(&self) -> f64 {
        let v = self.vector();
        if v == Point::ORIGIN {
            return 0.0;
        }
        let t = v.y.atan2(v.x);
        let t = t.rem_euclid(PI);
        if t >= PI {
            0.0
        } else {
            t
        }
    }

    /// Length of the projection on a line of slope `theta`.
    pub fn width(&self, theta: f64) -> f64 {
        self.vector().dot(Direction::new(theta).unit()).abs()
    }

    pub fn translate(&self, t: Point) -> Segment {
        Segment::new(self.a + t, self.b + t)
    }
}

/// An angle canonicalized to `[0, 2pi)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Direction(f64);

impl Direction {
    pub fn new(theta: f64) -> Self {
        let t = theta.rem_euclid(TAU);
        // rem_euclid can round up to exactly TAU for tiny negative inputs
        Direction(if t >= TAU { 0.0 } else { t })
    }

    pub fn from_vector(v: Point) -> Self {
        Direction::new(v.y.atan2(v.x))
    }

    pub fn angle(self) -> f64 {
        self.0
    }

    pub fn unit(self) -> Point {
        let (s, c) = self.0.sin_cos();
        Point::new(c, s)
    }

    pub fn opposite(self) -> Self {
        Direction::new(self.0 + PI)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Disk { center, radius }
    }

    pub fn perimeter(&self) -> f64 {
        TAU * self.radius
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        p.dist(self.center) <= self.radius + tol
    }

    /// Regular `m`-gon whose edges are tangent to the disk, so it contains the disk.
    pub fn circumscribed_polygon(&self, m: usize) -> ConvexPolygon {
        let r = self.radius / (PI / m as f64).cos();
        let pts: Vec<Point> = (0..m)
            .map(|k| self.center + Direction::new(TAU * k as f64 / m as f64).unit() * r)
            .collect();
        ConvexPolygon::from_ccw_unchecked(pts)
    }

    /// Regular `m`-gon with vertices on the circle.
    pub fn inscribed_polygon(&self, m: usize) -> ConvexPolygon {
        let pts: Vec<Point> = (0..m)
            .map(|k| self.center + Direction::new(TAU * k as f64 / m as f64).unit() * self.radius)
            .collect();
        ConvexPolygon::from_ccw_unchecked(pts)
    }
}
