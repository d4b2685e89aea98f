//! Brute-force baselines and instance generators.
//!
//! Nothing here calls into the hexagon sweep: the sampling oracles build
//! hexagons and triangles from their own parametrizations so they can
//! check the fast pipeline independently.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Direction, Point, Segment, SymmetricPolygon};
use crate::hexagon::{AffineHexagon, Strip, Triangle};
use crate::{Error, Result};

const REFINE_ROUNDS: usize = 3;
const REFINE_FACTOR: usize = 8;
const REFINE_SEEDS: usize = 8;
const MAX_RECENTRES: usize = 64;
const PROFILE_SEEDS: usize = 2;
const PROFILE_STEP: f64 = 1e-10;

/// `n` seeded points uniform in `[-1, 1]^2`, together with their negations,
/// hulled into a symmetric polygon.
pub fn random_symmetric_polygon(n: usize, seed: u64) -> Result<SymmetricPolygon> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 points, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Point> = (0..n)
        .map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    SymmetricPolygon::from_points(&pts)
}

/// `n` seeded segments with midpoints in `[-1, 1]^2`, lengths in `(0, 1]` and
/// uniform directions.
pub fn random_segments(n: usize, seed: u64) -> Vec<Segment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let len = 1.0 - rng.gen_range(0.0..1.0);
            Segment::centered(c, len, rng.gen_range(0.0..PI))
        })
        .collect()
}

/// Hexagon `{X, Y, Y - X, -X, -Y, X - Y}`: the image of the regular hexagon
/// under the linear map sending `(1, 0)` to `X` and `(1/2, sqrt 3/2)` to `Y`.
/// Sides `XY` and `Y(Y - X)` lie on `<n1, x> = c1` and `<n2, x> = c2`.
fn hexagon_by_map(n1: Point, c1: f64, n2: Point, c2: f64) -> Option<[Point; 6]> {
    let t2 = n2.perp();
    let k = n1.dot(t2);
    let det = n1.cross(n2);
    if k.abs() < 1e-12 || det.abs() < 1e-12 {
        return None;
    }
    let x = t2 * (c1 / k);
    let y = Point::new(c1 * n2.y - c2 * n1.y, c2 * n1.x - c1 * n2.x) / det;
    Some([x, y, y - x, -x, -y, x - y])
}

fn abs_area(v: &[Point]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>().abs()
}

struct HexSampler<'a> {
    pts: &'a [Point],
}

impl HexSampler<'_> {
    fn support(&self, u: Point) -> f64 {
        self.pts.iter().map(|p| p.dot(u)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Area of the hexagon with side normals at `alpha` and `alpha + delta`
    /// pushed onto `P`, then scaled up until it contains `P`.
    fn area(&self, alpha: f64, delta: f64) -> Option<(f64, [Point; 6])> {
        let (n1, n2) = (Direction::new(alpha).unit(), Direction::new(alpha + delta).unit());
        let (c1, c2) = (self.support(n1), self.support(n2));
        self.area_with(n1, c1, n2, c2)
    }

    fn area_with(&self, n1: Point, c1: f64, n2: Point, c2: f64) -> Option<(f64, [Point; 6])> {
        let hex = hexagon_by_map(n1, c1, n2, c2)?;
        let y = hex[1];
        let n3 = y.perp().normalized();
        let c3 = n3.dot(hex[0]).abs();
        if c3 < 1e-12 {
            return None;
        }
        let gauge = self
            .pts
            .iter()
            .map(|p| p.dot(n3).abs() / c3)
            .fold(1.0_f64, f64::max);
        let hex = hex.map(|v| v * gauge);
        Some((abs_area(&hex), hex))
    }

    /// Best hexagon with first normal `alpha`, over second-angle cells
    /// already sorted by area.
    fn profile(&self, alpha: f64, cells: &[(f64, f64)], step: f64) -> Option<(f64, f64, [Point; 6])> {
        let mut best: Option<(f64, f64, [Point; 6])> = None;
        for &(_, d0) in cells.iter().take(PROFILE_SEEDS) {
            let mut local = self.area(alpha, d0).map(|(a, hex)| (a, d0, hex));
            let mut h = step;
            while h > PROFILE_STEP {
                let fine = h / REFINE_FACTOR as f64;
                let r = REFINE_FACTOR as i32;
                for _ in 0..MAX_RECENTRES {
                    let Some((_, centre, _)) = local else { break };
                    for dd in -r..=r {
                        let d = centre + fine * dd as f64;
                        if d <= 0.0 || d >= PI {
                            continue;
                        }
                        if let Some((a, hex)) = self.area(alpha, d) {
                            if local.is_none_or(|l| a < l.0) {
                                local = Some((a, d, hex));
                            }
                        }
                    }
                    if local.map(|l| l.1) == Some(centre) {
                        break;
                    }
                }
                h = fine;
            }
            if let Some(l) = local {
                if best.is_none_or(|b| l.0 < b.0) {
                    best = Some(l);
                }
            }
        }
        best
    }
}

/// Smallest enclosing affine-regular hexagon found by a `k x k` grid over
/// the normal angles of the first two strips. For each first angle the
/// second is refined by local subdivision until the step drops below
/// `1e-10`; the best first angles then get three rounds of factor-8
/// subdivision. Converges to the optimum from above.
pub fn min_hexagon_sampling(p: &SymmetricPolygon, k: usize) -> Result<AffineHexagon> {
    if p.is_degenerate() {
        return Err(Error::NoPlanarHexagon);
    }
    if k < 16 {
        return Err(Error::InvalidArgument(format!("grid resolution {k} < 16")));
    }
    let s = HexSampler { pts: p.vertices() };
    let step = PI / k as f64;
    // supports on the half-step grid, shared by the coarse pass
    let h: Vec<f64> = (0..4 * k)
        .map(|i| s.support(Direction::new(0.5 * step * i as f64).unit()))
        .collect();

    let mut rows: Vec<(f64, f64, f64, [Point; 6])> = Vec::with_capacity(k);
    for i in 0..k {
        let alpha = step * i as f64;
        let n1 = Direction::new(alpha).unit();
        let mut cells: Vec<(f64, f64)> = (0..k)
            .filter_map(|j| {
                let delta = step * (j as f64 + 0.5);
                let n2 = Direction::new(alpha + delta).unit();
                let c2 = h[(2 * i + 2 * j + 1) % (4 * k)];
                s.area_with(n1, h[2 * i], n2, c2).map(|(a, _)| (a, delta))
            })
            .collect();
        cells.sort_by(|x, y| x.0.total_cmp(&y.0));
        if let Some((a, delta, hex)) = s.profile(alpha, &cells, step) {
            rows.push((a, alpha, delta, hex));
        }
    }
    rows.sort_by(|x, y| x.0.total_cmp(&y.0));
    rows.truncate(REFINE_SEEDS);

    let mut best: Option<(f64, [Point; 6])> = None;
    for &(a0, alpha0, delta0, hex0) in &rows {
        let mut local = (a0, alpha0, delta0, hex0);
        let mut h = step;
        for _ in 0..REFINE_ROUNDS {
            let fine = h / REFINE_FACTOR as f64;
            let r = REFINE_FACTOR as i32;
            for _ in 0..MAX_RECENTRES {
                let centre = local.1;
                for da in -r..=r {
                    let alpha = centre + fine * da as f64;
                    // the valley moves with alpha; start from the current
                    // second angle with a window of one coarse cell
                    if let Some((a, delta, hex)) = s.profile(alpha, &[(0.0, local.2)], step) {
                        if a < local.0 {
                            local = (a, alpha, delta, hex);
                        }
                    }
                }
                if local.1 == centre {
                    break;
                }
            }
            h = fine;
        }
        if best.is_none_or(|b| local.0 < b.0) {
            best = Some((local.0, local.3));
        }
    }
    let (_, hex) = best.ok_or(Error::NoPlanarHexagon)?;
    hexagon_from_vertices(&hex)
}

/// Re-expresses `{X, Y, Y - X, ...}` as an [`AffineHexagon`] through its
/// first two side strips.
fn hexagon_from_vertices(hex: &[Point; 6]) -> Result<AffineHexagon> {
    let (x, y) = (hex[0], hex[1]);
    let side = |a: Point, b: Point| {
        let n = (b - a).perp();
        let n = if n.dot(a) < 0.0 { -n } else { n };
        let n = n.normalized();
        Strip::new(n, n.dot(a))
    };
    crate::hexagon::hexagon_from_strips(&side(x, y)?, &side(y, y - x)?)
}

/// Intersection length of the line `v + t d` with a triangle.
fn line_through_triangle(tri: &[Point; 3], normals: &[Point; 3], offsets: &[f64; 3], v: Point, d: Point) -> f64 {
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for j in 0..3 {
        let (nd, slack) = (normals[j].dot(d), offsets[j] - normals[j].dot(v));
        if nd.abs() < 1e-15 {
            if slack < -1e-12 {
                return 0.0;
            }
        } else if nd > 0.0 {
            hi = hi.min(slack / nd);
        } else {
            lo = lo.max(slack / nd);
        }
    }
    let _ = tri;
    (hi - lo).max(0.0)
}

struct TriSampler<'a> {
    segs: &'a [(f64, Point)],
}

impl TriSampler<'_> {
    /// Triangle with outward normals at `t1 < t2 < t3`, tangent to the unit
    /// circle and scaled by the smallest factor that fits every segment.
    fn area(&self, t1: f64, t2: f64, t3: f64) -> Option<(f64, [Point; 3])> {
        let gaps = [t2 - t1, t3 - t2, t1 + TAU - t3];
        if gaps.iter().any(|&g| g <= 1e-9 || g >= PI - 1e-9) {
            return None;
        }
        let normals = [t1, t2, t3].map(|t| Direction::new(t).unit());
        let meet = |a: Point, b: Point| {
            let det = a.cross(b);
            Point::new(b.y - a.y, a.x - b.x) / det
        };
        let tri = [
            meet(normals[2], normals[0]),
            meet(normals[0], normals[1]),
            meet(normals[1], normals[2]),
        ];
        let ones = [1.0; 3];
        let mut scale: f64 = 0.0;
        for &(len, d) in self.segs {
            let chord = tri
                .iter()
                .map(|&v| line_through_triangle(&tri, &normals, &ones, v, d))
                .fold(0.0, f64::max);
            if chord <= 0.0 {
                return None;
            }
            scale = scale.max(len / chord);
        }
        let scaled = tri.map(|v| v * scale);
        Some((abs_area(&scaled), scaled))
    }
}

/// Minimum-area covering triangle found by a grid over the three edge
/// normal angles (step `2 pi / k`), each triangle shrunk until every
/// segment just fits along its longest parallel chord, then locally refined.
pub fn min_triangle_sampling(segments: &[Segment], k: usize) -> Result<Triangle> {
    if segments.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if k < 6 {
        return Err(Error::InvalidArgument(format!("grid resolution {k} < 6")));
    }
    let segs: Vec<(f64, Point)> = segments
        .iter()
        .filter(|s| !s.is_degenerate())
        .map(|s| (s.length(), s.vector().normalized()))
        .collect();
    if segs.is_empty() {
        let p = segments[0].a;
        return Ok(Triangle::new(p, p, p));
    }
    let s = TriSampler { segs: &segs };
    let step = TAU / k as f64;
    let mut cells: Vec<(f64, [f64; 3])> = Vec::new();
    // the first normal ranges over one third of the circle: relabelling the
    // edges cyclically covers the rest
    for i in 0..k.div_ceil(3) {
        for a in 1..k {
            for b in 1..k {
                if a + b >= k {
                    break;
                }
                let t1 = step * i as f64;
                let t = [t1, t1 + step * a as f64, t1 + step * (a + b) as f64];
                if let Some((area, _)) = s.area(t[0], t[1], t[2]) {
                    cells.push((area, t));
                }
            }
        }
    }
    cells.sort_by(|x, y| x.0.total_cmp(&y.0));
    cells.truncate(REFINE_SEEDS);

    let mut best: Option<(f64, [Point; 3])> = None;
    for &(_, t0) in &cells {
        let mut t = t0;
        let mut local = s.area(t[0], t[1], t[2]);
        let mut h = step;
        for _ in 0..REFINE_ROUNDS {
            let fine = h / REFINE_FACTOR as f64;
            let r = REFINE_FACTOR as i32;
            for _ in 0..MAX_RECENTRES {
                let c = t;
                for d0 in -r..=r {
                    for d1 in -r..=r {
                        for d2 in -r..=r {
                            let cand = [
                                c[0] + fine * d0 as f64,
                                c[1] + fine * d1 as f64,
                                c[2] + fine * d2 as f64,
                            ];
                            if let Some(v) = s.area(cand[0], cand[1], cand[2]) {
                                if local.is_none_or(|l| v.0 < l.0) {
                                    local = Some(v);
                                    t = cand;
                                }
                            }
                        }
                    }
                }
                if c == t {
                    break;
                }
            }
            h = fine;
        }
        if let Some(l) = local {
            if best.is_none_or(|b| l.0 < b.0) {
                best = Some(l);
            }
        }
    }
    let (_, tri) = best.ok_or(Error::EmptyFamily)?;
    Ok(Triangle::new(tri[0], tri[1], tri[2]))
}

/// Ground truth of an arc-emptiness instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcClass {
    /// Arc `k`, the open arc of polar angles `(k pi/3n, (k+1) pi/3n)`, holds no point.
    SomeArcEmpty { arc: usize },
    AllArcsOccupied,
}

/// Polygon built from the regular `6n`-gon and six rotated copies of the
/// given arc points, with its classification and the reference area
/// `2 sqrt 3 cos^2(pi / 6n)` of the regular hexagon circumscribing the `6n`-gon.
#[derive(Clone, Debug)]
pub struct LowerBoundInstance {
    pub n: usize,
    pub points: Vec<Point>,
    pub polygon: SymmetricPolygon,
    pub class: ArcClass,
    pub reference_area: f64,
}

impl LowerBoundInstance {
    /// The long diagonals of the polygon, as segments through the origin.
    pub fn diagonals(&self) -> Vec<Segment> {
        let v = self.polygon.vertices();
        v[..v.len() / 2].iter().map(|&p| Segment::new(-p, p)).collect()
    }
}

/// Builds the instance for `n` arcs; every point must lie on the unit
/// circle with polar angle in `[0, pi/3)`.
pub fn lowerbound_instance(n: usize, points: &[Point]) -> Result<LowerBoundInstance> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let width = PI / (3 * n) as f64;
    let mut angles = Vec::with_capacity(points.len());
    for p in points {
        let t = p.y.atan2(p.x);
        let on_circle = (p.norm() - 1.0).abs() <= 1e-9;
        if !p.is_finite() || !on_circle || !(-1e-12..PI / 3.0).contains(&t) {
            return Err(Error::PointOffArc { x: p.x, y: p.y });
        }
        angles.push(t.max(0.0));
    }
    let mut verts: Vec<Point> = (1..=6 * n).map(|k| Direction::new(k as f64 * width).unit()).collect();
    for &t in &angles {
        for j in 0..6 {
            verts.push(Direction::new(t + j as f64 * PI / 3.0).unit());
        }
    }
    let polygon = SymmetricPolygon::from_points(&verts)?;
    let eps = 1e-12;
    let empty = (0..n).find(|&k| {
        let (lo, hi) = (k as f64 * width, (k + 1) as f64 * width);
        !angles.iter().any(|&t| t > lo + eps && t < hi - eps)
    });
    let class = match empty {
        Some(arc) => ArcClass::SomeArcEmpty { arc },
        None => ArcClass::AllArcsOccupied,
    };
    Ok(LowerBoundInstance {
        n,
        points: points.to_vec(),
        polygon,
        class,
        reference_area: 2.0 * 3f64.sqrt() * (PI / (6 * n) as f64).cos().powi(2),
    })
}

/// Seeded arc points for `n` arcs. With `all_occupied` every arc receives a
/// point; otherwise one random arc is left empty. Points keep a tenth of the
/// arc width away from arc ends.
pub fn lowerbound_points(n: usize, all_occupied: bool, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = PI / (3 * n) as f64;
    let skip = if all_occupied { None } else { Some(rng.gen_range(0..n)) };
    let mut pts = Vec::new();
    for k in 0..n {
        if Some(k) == skip {
            continue;
        }
        let count = if all_occupied { rng.gen_range(1..=2) } else { rng.gen_range(0..=2) };
        for _ in 0..count {
            let t = (k as f64 + rng.gen_range(0.1..0.9)) * width;
            pts.push(Direction::new(t).unit());
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular(m: usize) -> SymmetricPolygon {
        let pts: Vec<Point> = (0..m).map(|k| Direction::new(TAU * k as f64 / m as f64).unit()).collect();
        SymmetricPolygon::from_points(&pts).unwrap()
    }

    #[test]
    fn sampled_regular_hexagon() {
        let h = min_hexagon_sampling(&regular(6), 256).unwrap();
        let target = 3.0 * 3f64.sqrt() / 2.0;
        assert!(h.area() >= target - 1e-12);
        assert!((h.area() - target) / target < 1e-4, "{}", h.area());
    }

    #[test]
    fn sampled_regular_twelve_gon() {
        let h = min_hexagon_sampling(&regular(12), 256).unwrap();
        let target = 2.0 * 3f64.sqrt() * (PI / 12.0).cos().powi(2);
        assert!(h.area() >= target - 1e-12);
        assert!((h.area() - target) / target < 1e-4, "{}", h.area());
    }

    #[test]
    fn sampled_hexagon_contains_polygon() {
        let p = random_symmetric_polygon(10, 3).unwrap();
        let h = min_hexagon_sampling(&p, 64).unwrap();
        for &v in p.vertices() {
            assert!(h.contains(v, 1e-9));
        }
    }

    #[test]
    fn sampled_triangle_for_three_directions() {
        let segs: Vec<Segment> = (0..3).map(|k| Segment::centered(Point::ORIGIN, 1.0, k as f64 * PI / 3.0)).collect();
        let t = min_triangle_sampling(&segs, 180).unwrap();
        assert!((t.area() - 3f64.sqrt() / 4.0).abs() < 1e-3, "{}", t.area());
    }

    #[test]
    fn sampled_triangle_single_segment() {
        let segs = [Segment::centered(Point::ORIGIN, 1.0, 0.4)];
        let t = min_triangle_sampling(&segs, 36).unwrap();
        assert!(t.area() < 1e-3, "{}", t.area());
    }

    #[test]
    fn random_polygon_properties() {
        let p = random_symmetric_polygon(4, 0).unwrap();
        let h = p.half_len();
        for i in 0..h {
            assert_eq!(p.vertices()[i + h], -p.vertices()[i]);
        }
        assert!(random_symmetric_polygon(1, 0).is_err());
        for seed in 0..20 {
            let q = random_symmetric_polygon(2, seed).unwrap();
            assert!(q.len() == 4 || q.is_degenerate());
        }
    }

    #[test]
    fn lowerbound_classification() {
        let a = lowerbound_instance(2, &[Direction::new(0.9 * PI / 12.0).unit()]).unwrap();
        assert_eq!(a.class, ArcClass::SomeArcEmpty { arc: 1 });
        assert_eq!(a.polygon.len(), 18);
        let b = lowerbound_instance(2, &[Direction::new(PI / 12.0).unit(), Direction::new(PI / 4.0).unit()]).unwrap();
        assert_eq!(b.class, ArcClass::AllArcsOccupied);
        let c = lowerbound_instance(2, &[Direction::new(PI / 24.0).unit(), Direction::new(PI / 8.0).unit()]).unwrap();
        assert_eq!(c.class, ArcClass::SomeArcEmpty { arc: 1 });
        let d = lowerbound_instance(1, &[]).unwrap();
        assert_eq!(d.polygon.len(), 6);
        assert!(lowerbound_instance(2, &[Point::new(0.0, 1.0)]).is_err());
        assert!(lowerbound_instance(2, &[Point::new(0.5, 0.0)]).is_err());
    }

    #[test]
    fn lowerbound_generator_matches_class() {
        for seed in 0..20 {
            let p = lowerbound_points(4, true, seed);
            assert_eq!(lowerbound_instance(4, &p).unwrap().class, ArcClass::AllArcsOccupied);
            let q = lowerbound_points(4, false, seed);
            assert!(matches!(lowerbound_instance(4, &q).unwrap().class, ArcClass::SomeArcEmpty { .. }));
        }
    }
}
