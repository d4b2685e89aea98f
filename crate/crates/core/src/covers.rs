//! Cover constructions: minimum-area triangles for segment families,
//! minimum-perimeter covers, keyhole disks with their certificates, and
//! rectangle covers.

use std::f64::consts::TAU;

use crate::geom::{
    convex_hull, fits_in_translate, longest_chord, smallest_enclosing_disk, ConvexPolygon, Direction, Disk,
    Point, Segment, SymmetricPolygon,
};
use crate::hexagon::{min_affine_hexagon, triangle_from_hexagon, Triangle};
use crate::{Error, Result};

/// A minimum-area triangle together with a translation placing each input
/// segment inside it.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub triangle: Triangle,
    pub area: f64,
    pub placements: Vec<Point>,
    pub degenerate: bool,
}

/// Centres every segment at the origin and takes the hull.
pub fn symmetrized_hull(segments: &[Segment]) -> Result<SymmetricPolygon> {
    if segments.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut pts = Vec::with_capacity(segments.len());
    for s in segments {
        if !s.a.is_finite() || !s.b.is_finite() {
            return Err(Error::NonFinite);
        }
        pts.push(s.vector() * 0.5);
    }
    SymmetricPolygon::from_points(&pts)
}

/// Minimum-area convex translation cover of a segment family.
///
/// The optimum is the triangle whose symmetrization is the smallest
/// affine-regular hexagon around the symmetrized hull. A family of parallel
/// segments yields the longest one as a zero-area triangle.
pub fn min_area_cover(segments: &[Segment]) -> Result<CoverResult> {
    let hull = symmetrized_hull(segments)?;
    if hull.is_degenerate() {
        let w = hull.vertices()[0];
        let triangle = Triangle::new(-w, Point::ORIGIN, w);
        let placements = segments.iter().map(|s| -s.midpoint()).collect();
        return Ok(CoverResult {
            triangle,
            area: 0.0,
            placements,
            degenerate: true,
        });
    }
    let (hex, _) = min_affine_hexagon(&hull)?;
    let triangle = triangle_from_hexagon(&hex);
    let poly = triangle.polygon();
    let placements = segments.iter().map(|s| chord_placement(&poly, s)).collect();
    Ok(CoverResult {
        area: triangle.area(),
        triangle,
        placements,
        degenerate: false,
    })
}

/// Translation moving `s` onto the middle of the longest parallel chord of `k`.
fn chord_placement(k: &ConvexPolygon, s: &Segment) -> Point {
    if s.is_degenerate() {
        return k.vertex_mean() - s.a;
    }
    longest_chord(k, s.angle()).midpoint() - s.midpoint()
}

/// A member of a family for perimeter covers: a centrally symmetric polygon
/// or a segment, each symmetric about its own centre.
#[derive(Clone, Debug)]
pub enum Figure {
    Polygon(ConvexPolygon),
    Segment(Segment),
}

/// Minimum-perimeter convex translation cover: the hull of the family with
/// all centres moved to the origin.
pub fn min_perimeter_cover(figures: &[Figure]) -> Result<ConvexPolygon> {
    if figures.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut pts = Vec::new();
    for f in figures {
        match f {
            Figure::Segment(s) => {
                let h = s.vector() * 0.5;
                pts.extend([h, -h]);
            }
            Figure::Polygon(p) => {
                let centred = p.translate(-p.vertex_mean());
                let tol = 1e-9 * centred.scale().max(f64::MIN_POSITIVE);
                let sym = SymmetricPolygon::try_from_polygon(&centred, tol)?;
                pts.extend_from_slice(sym.vertices());
            }
        }
    }
    convex_hull(&pts)
}

/// Smallest-perimeter translation cover for all rotated copies of `g`.
pub fn keyhole_disk(g: &ConvexPolygon) -> Disk {
    smallest_enclosing_disk(g.vertices()).expect("polygons have at least one finite vertex")
}

/// Angles `(j + 1/2) 2 pi / m` used for rotation screening and quadrature.
pub fn sample_angles(m: usize) -> impl Iterator<Item = f64> {
    (0..m).map(move |j| (j as f64 + 0.5) * TAU / m as f64)
}

/// Checks that `k` contains a translate of `g` rotated by each sampled
/// angle; fails with the first angle that does not fit.
pub fn rotation_screening(g: &ConvexPolygon, k: &ConvexPolygon, m: usize) -> Result<()> {
    for angle in sample_angles(m) {
        if fits_in_translate(&g.rotate(angle), k).is_none() {
            return Err(Error::RotationContainment { angle });
        }
    }
    Ok(())
}

/// Lower-bound certificate for the perimeter of a cover of all rotations of
/// an acute triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct KeyholeCertificate {
    /// Barycentric coordinates of the circumcentre.
    pub alphas: [f64; 3],
    /// Polar angles of the vertices seen from the circumcentre.
    pub deltas: [f64; 3],
    pub radius: f64,
    /// Midpoint quadrature of the weighted support integral.
    pub value: f64,
    /// Smallest integrand sample; at least `radius` when screening passes.
    pub min_integrand: f64,
    pub samples: usize,
}

impl KeyholeCertificate {
    /// The perimeter lower bound `2 pi R`.
    pub fn bound(&self) -> f64 {
        TAU * self.radius
    }
}

/// Certifies `perimeter(K) >= 2 pi R` for a cover `k` of the rotations of the
/// acute triangle `g`.
///
/// With `alpha` the circumcentre's barycentric coordinates the weighted unit
/// vectors towards the vertices cancel, so for every rotation that fits the
/// weighted support sum is at least `R`. Integrating over the circle gives
/// the perimeter on the left and `2 pi R` on the right.
pub fn keyhole_certificate(g: &Triangle, k: &ConvexPolygon, m: usize) -> Result<KeyholeCertificate> {
    if m < 4 {
        return Err(Error::InvalidArgument(format!("sample count {m} < 4")));
    }
    let v = g.vertices;
    let total = (v[1] - v[0]).cross(v[2] - v[0]);
    if g.degenerate || total <= 0.0 {
        return Err(Error::NotAcute);
    }
    let disk = crate::geom::smallest_enclosing_disk(&v)?;
    let c = circumcenter(v[0], v[1], v[2]);
    let alphas = [0, 1, 2].map(|i| (v[(i + 1) % 3] - c).cross(v[(i + 2) % 3] - c) / total);
    // a right angle puts the circumcentre on an edge: that is the diameter case
    if alphas.iter().any(|&a| a <= 1e-12) {
        return Err(Error::NotAcute);
    }
    let deltas = v.map(|p| Direction::from_vector(p - c).angle());

    rotation_screening(&g.polygon(), k, m)?;

    let mut value = 0.0;
    let mut min_integrand = f64::INFINITY;
    for theta in sample_angles(m) {
        let f: f64 = (0..3)
            .map(|i| alphas[i] * k.support(Direction::new(theta + deltas[i])))
            .sum();
        value += f;
        min_integrand = min_integrand.min(f);
    }
    value *= TAU / m as f64;
    Ok(KeyholeCertificate {
        alphas,
        deltas,
        radius: disk.radius,
        value,
        min_integrand,
        samples: m,
    })
}

fn circumcenter(a: Point, b: Point, c: Point) -> Point {
    let (ab, ac) = (b - a, c - a);
    let d = 2.0 * ab.cross(ac);
    let off = Point::new(
        ac.y * ab.norm2() - ab.y * ac.norm2(),
        ab.x * ac.norm2() - ac.x * ab.norm2(),
    ) / d;
    a + off
}

/// An axis-parallel rectangle; only its extents matter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    w: f64,
    h: f64,
}

impl Rect {
    pub fn new(w: f64, h: f64) -> Result<Self> {
        if !(w.is_finite() && h.is_finite()) {
            return Err(Error::NonFinite);
        }
        if w <= 0.0 || h <= 0.0 {
            return Err(Error::InvalidArgument(format!("rectangle extents must be positive, got {w} x {h}")));
        }
        Ok(Rect { w, h })
    }

    pub fn width(&self) -> f64 {
        self.w
    }

    pub fn height(&self) -> f64 {
        self.h
    }
}

/// Minimum-area translation cover of axis-parallel rectangles: the hull with
/// every bottom-left corner at the origin.
pub fn rect_cover(rects: &[Rect]) -> Result<ConvexPolygon> {
    if rects.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut pts = vec![Point::ORIGIN];
    for r in rects {
        pts.extend([Point::new(r.w, 0.0), Point::new(r.w, r.h), Point::new(0.0, r.h)]);
    }
    convex_hull(&pts)
}

/// Outcome for one segment of [`verify_cover`].
#[derive(Clone, Debug, PartialEq)]
pub struct SegmentVerdict {
    pub fits: bool,
    /// Translation placing the segment inside the cover, when it fits.
    pub placement: Option<Point>,
    /// Largest excess of the segment's width over the cover's width.
    pub width_excess: f64,
    /// Longest chord of the cover parallel to the segment.
    pub chord: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverReport {
    pub verdicts: Vec<SegmentVerdict>,
    pub tolerance: f64,
}

impl CoverReport {
    pub fn all_fit(&self) -> bool {
        self.verdicts.iter().all(|v| v.fits)
    }
}

/// Decides for each segment whether a translate fits in `k`, twice.
///
/// The width test compares `|<n, b - a>|` with the width of `k` across every
/// edge normal `n` of `k`, which is containment of the centred segment in
/// the symmetrization of `k`. The chord test places the segment on the
/// longest parallel chord and checks both endpoints. Disagreement is an
/// error.
pub fn verify_cover(k: &ConvexPolygon, segments: &[Segment]) -> Result<CoverReport> {
    let seg_scale = segments.iter().map(|s| s.vector().max_abs()).fold(0.0, f64::max);
    let tol = 1e-9 * k.scale().max(seg_scale).max(1e-300);
    let normals = k.facet_normals();
    let mut verdicts = Vec::with_capacity(segments.len());
    for (index, s) in segments.iter().enumerate() {
        let d = s.vector();
        let width_excess = normals
            .iter()
            .map(|&n| d.dot(n).abs() - k.width(Direction::from_vector(n).angle()))
            .fold(f64::NEG_INFINITY, f64::max);
        let by_width = width_excess <= tol;

        let chord = if s.is_degenerate() {
            0.0
        } else {
            longest_chord(k, s.angle()).length()
        };
        let t = chord_placement(k, s);
        let placed = s.translate(t);
        let by_chord = chord >= s.length() - tol && k.contains(placed.a, tol) && k.contains(placed.b, tol);

        if by_width != by_chord {
            return Err(Error::MethodDisagreement {
                index,
                by_width,
                by_chord,
            });
        }
        verdicts.push(SegmentVerdict {
            fits: by_width,
            placement: by_width.then_some(t),
            width_excess,
            chord,
        });
    }
    Ok(CoverReport { verdicts, tolerance: tol })
}
