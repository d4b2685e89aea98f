use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{coord_scale, Disk, Point};
use crate::{Error, Result};

/// Smallest enclosing disk with the default shuffle seed 0.
pub fn smallest_enclosing_disk(points: &[Point]) -> Result<Disk> {
    smallest_enclosing_disk_seeded(points, 0)
}

/// Smallest enclosing disk by the randomized incremental (move-to-front)
/// algorithm, expected O(n). The shuffle is driven by `seed`, so results
/// are reproducible.
pub fn smallest_enclosing_disk_seeded(points: &[Point], seed: u64) -> Result<Disk> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let tol = 1e-12 * coord_scale(points);
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut d = Disk::new(pts[0], 0.0);
    for i in 1..pts.len() {
        if d.contains(pts[i], tol) {
            continue;
        }
        d = Disk::new(pts[i], 0.0);
        for j in 0..i {
            if d.contains(pts[j], tol) {
                continue;
            }
            d = disk2(pts[i], pts[j]);
            for k in 0..j {
                if !d.contains(pts[k], tol) {
                    d = disk3(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    Ok(d)
}

fn disk2(a: Point, b: Point) -> Disk {
    let c = (a + b) * 0.5;
    Disk::new(c, c.dist(a).max(c.dist(b)))
}

/// Circumcircle of three points; nearly collinear triples fall back to the
/// widest pair.
pub(crate) fn disk3(a: Point, b: Point, c: Point) -> Disk {
    let (ab, ac) = (b - a, c - a);
    let det = 2.0 * ab.cross(ac);
    let scale = ab.norm2().max(ac.norm2()).max((c - b).norm2());
    if det.abs() <= 1e-14 * scale {
        let cands = [disk2(a, b), disk2(a, c), disk2(b, c)];
        return cands
            .into_iter()
            .max_by(|x, y| x.radius.total_cmp(&y.radius))
            .unwrap();
    }
    let off = Point::new(
        ac.y * ab.norm2() - ab.y * ac.norm2(),
        ab.x * ac.norm2() - ac.x * ab.norm2(),
    ) / det;
    let center = a + off;
    let r = center.dist(a).max(center.dist(b)).max(center.dist(c));
    Disk::new(center, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points() {
        let d = smallest_enclosing_disk(&[Point::new(0.0, 0.0), Point::new(2.0, 0.0)]).unwrap();
        assert_eq!(d.center, Point::new(1.0, 0.0));
        assert_eq!(d.radius, 1.0);
    }

    #[test]
    fn equilateral_triangle() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 3f64.sqrt() / 2.0),
        ];
        let d = smallest_enclosing_disk(&pts).unwrap();
        assert!((d.radius - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn obtuse_triangle_uses_longest_side() {
        let pts = [Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(1.0, 1.0)];
        let d = smallest_enclosing_disk(&pts).unwrap();
        assert_eq!(d.center, Point::new(2.0, 0.0));
        assert_eq!(d.radius, 2.0);
    }

    #[test]
    fn empty_is_error() {
        assert_eq!(smallest_enclosing_disk(&[]), Err(Error::EmptyPointSet));
    }

    #[test]
    fn collinear_triple() {
        let d = disk3(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(3.0, 0.0));
        assert_eq!(d.radius, 1.5);
    }
}
