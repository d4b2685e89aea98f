use super::{ConvexPolygon, Degeneracy, Direction, Point, Segment};

/// A longest chord of `p` parallel to direction `theta`, oriented along
/// `u_theta`.
///
/// Chord length is concave in the offset, so the maximum sits at a vertex
/// offset. Both boundary chains are walked once with two pointers.
pub fn longest_chord(p: &ConvexPolygon, theta: f64) -> Segment {
    let d = Direction::new(theta).unit();
    let nrm = d.perp();
    let v = p.vertices();
    match p.degeneracy() {
        Degeneracy::Point => Segment::new(v[0], v[0]),
        Degeneracy::Segment => {
            let e = v[1] - v[0];
            if e.cross(d).abs() <= 1e-12 * e.norm() {
                if e.dot(d) >= 0.0 {
                    Segment::new(v[0], v[1])
                } else {
                    Segment::new(v[1], v[0])
                }
            } else {
                Segment::new(v[0], v[0])
            }
        }
        Degeneracy::Polygon => {
            let n = v.len();
            // (along, offset) coordinates in the frame (d, nrm)
            let c: Vec<(f64, f64)> = v.iter().map(|&q| (q.dot(d), q.dot(nrm))).collect();
            let low = |i: usize, j: usize| c[i].1.total_cmp(&c[j].1).then(c[i].0.total_cmp(&c[j].0));
            let i0 = (0..n).min_by(|&i, &j| low(i, j)).unwrap();
            let i1 = (0..n)
                .min_by(|&i, &j| c[j].1.total_cmp(&c[i].1).then(c[i].0.total_cmp(&c[j].0)))
                .unwrap();
            let right: Vec<(f64, f64)> = {
                let k = (i1 + n - i0) % n;
                (0..=k).map(|t| c[(i0 + t) % n]).collect()
            };
            let left: Vec<(f64, f64)> = {
                let k = (i0 + n - i1) % n;
                let mut l: Vec<(f64, f64)> = (0..=k).map(|t| c[(i1 + t) % n]).collect();
                l.reverse();
                l
            };

            let (mut pr, mut pl) = (0usize, 0usize);
            let (mut ir, mut il) = (0usize, 0usize);
            let mut best = (f64::NEG_INFINITY, 0.0, 0.0, 0.0);
            while ir < right.len() || il < left.len() {
                let take_right = il >= left.len() || (ir < right.len() && right[ir].1 <= left[il].1);
                let b = if take_right {
                    ir += 1;
                    right[ir - 1].1
                } else {
                    il += 1;
                    left[il - 1].1
                };
                let ar = chain_at(&right, &mut pr, b, true);
                let al = chain_at(&left, &mut pl, b, false);
                if ar - al > best.0 {
                    best = (ar - al, al, ar, b);
                }
            }
            let (_, al, ar, b) = best;
            Segment::new(d * al + nrm * b, d * ar + nrm * b)
        }
    }
}

/// Along-coordinate of a monotone chain at offset `b`; flat pieces resolve
/// to their extreme end.
fn chain_at(chain: &[(f64, f64)], ptr: &mut usize, b: f64, take_max: bool) -> f64 {
    if chain.len() == 1 {
        return chain[0].0;
    }
    while *ptr + 2 < chain.len() && chain[*ptr + 1].1 <= b {
        *ptr += 1;
    }
    let (a0, b0) = chain[*ptr];
    let (a1, b1) = chain[*ptr + 1];
    if b1 <= b0 {
        return if take_max { a0.max(a1) } else { a0.min(a1) };
    }
    let t = ((b - b0) / (b1 - b0)).clamp(0.0, 1.0);
    a0 + t * (a1 - a0)
}

/// A translation `t` with `g + t` contained in `k`, if one exists.
///
/// Containment is the system `<t, n> <= h_K(n) - h_G(n)` over the facet
/// normals `n` of `k`; the feasible set is clipped out of a bounding box
/// and its vertex mean returned.
pub fn fits_in_translate(g: &ConvexPolygon, k: &ConvexPolygon) -> Option<Point> {
    let scale = g.scale().max(k.scale());
    let slack = 1e-10 * scale;
    let m = 4.0 * scale + 1.0;
    let mut region = vec![
        Point::new(-m, -m),
        Point::new(m, -m),
        Point::new(m, m),
        Point::new(-m, m),
    ];
    for n in k.facet_normals() {
        let rhs = k.support_vec(n) - g.support_vec(n) + slack;
        region = clip(&region, n, rhs);
        if region.is_empty() {
            return None;
        }
    }
    let s = region.iter().fold(Point::ORIGIN, |a, &p| a + p);
    Some(s / region.len() as f64)
}

/// Sutherland-Hodgman clip of a convex polygon against `<x, n> <= c`.
fn clip(poly: &[Point], n: Point, c: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    let len = poly.len();
    for i in 0..len {
        let (p, q) = (poly[i], poly[(i + 1) % len]);
        let (fp, fq) = (p.dot(n) - c, q.dot(n) - c);
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            out.push(p + (q - p) * (fp / (fp - fq)));
        }
    }
    out
}
