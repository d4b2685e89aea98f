//! End-to-end acceptance checks, one line of output per criterion.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transcover::covers::{
    keyhole_certificate, keyhole_disk, min_area_cover, min_perimeter_cover, rect_cover, rotation_screening,
    verify_cover, Figure, Rect,
};
use transcover::geom::convex_hull;
use transcover::hexagon::{circumscribed_sweep, min_affine_hexagon, triangle_from_hexagon};
use transcover::oracle::{
    lowerbound_instance, lowerbound_points, min_hexagon_sampling, min_triangle_sampling, random_segments,
    random_symmetric_polygon, ArcClass,
};
use transcover::{ConvexPolygon, Point, Segment, Triangle};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fan(n: usize) -> Vec<Segment> {
    (0..n)
        .map(|k| Segment::centered(Point::ORIGIN, 1.0, k as f64 * PI / n as f64))
        .collect()
}

fn fan_limit() -> Outcome {
    let start = Instant::now();
    let mut prev = 0.0;
    for n in [3, 6, 12, 24, 48, 96] {
        let r = min_area_cover(&fan(n)).map_err(|e| e.to_string())?;
        let want = (PI / (2 * n) as f64).cos().powi(2) / 3f64.sqrt();
        ensure((r.area - want).abs() <= 1e-9 * want, || format!("n={n}: {} vs {want}", r.area))?;
        ensure(r.area > prev && r.area < 1.0 / 3f64.sqrt(), || format!("n={n}: not increasing"))?;
        prev = r.area;
    }
    let elapsed = start.elapsed();
    for n in [3, 6] {
        let r = min_area_cover(&fan(n)).unwrap();
        let s = min_triangle_sampling(&fan(n), 180).map_err(|e| e.to_string())?;
        ensure(s.area() >= r.area - 1e-9 && s.area() - r.area < 1e-3, || {
            format!("n={n}: sampler {} vs {}", s.area(), r.area)
        })?;
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("n=96 area {prev:.12}, {elapsed:.2?}"))
}

fn equilateral() -> Outcome {
    let segs = fan(3);
    let r = min_area_cover(&segs).map_err(|e| e.to_string())?;
    let want = 3f64.sqrt() / 4.0;
    ensure((r.area - want).abs() <= 1e-9, || format!("area {}", r.area))?;
    let v = r.triangle.vertices;
    for (s, &p) in segs.iter().zip(&r.placements) {
        let q = s.translate(p);
        let side = (0..3).any(|i| {
            let (a, b) = (v[i], v[(i + 1) % 3]);
            (q.a.dist(a) < 1e-9 && q.b.dist(b) < 1e-9) || (q.a.dist(b) < 1e-9 && q.b.dist(a) < 1e-9)
        });
        ensure(side, || format!("segment {s:?} placed at {q:?} is not a side"))?;
    }
    Ok(format!("area {:.12}", r.area))
}

fn hexagon_optimality() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for seed in 0..200u64 {
        let p = random_symmetric_polygon(2 + seed as usize % 31, 1000 + seed).map_err(|e| e.to_string())?;
        if p.is_degenerate() {
            continue;
        }
        let (h, _) = min_affine_hexagon(&p).map_err(|e| e.to_string())?;
        let s = min_hexagon_sampling(&p, 256).map_err(|e| e.to_string())?;
        let rel = (s.area() - h.area()).abs() / h.area();
        worst = worst.max(rel);
        ensure(rel <= 1e-5, || format!("seed {seed}: relative gap {rel:e}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("worst relative gap {worst:.2e}, {elapsed:.2?}"))
}

fn structural_identities() -> Outcome {
    let mut count = 0;
    for seed in 0..200u64 {
        let p = random_symmetric_polygon(2 + seed as usize % 31, 1000 + seed).map_err(|e| e.to_string())?;
        if p.is_degenerate() {
            continue;
        }
        for e in circumscribed_sweep(&p).map_err(|e| e.to_string())? {
            let h = e.hexagon;
            ensure((h.area() - 0.75 * h.parallelogram_area()).abs() <= 1e-12 * h.area(), || {
                format!("seed {seed} edge {}: |H| {} vs |Q| {}", e.edge, h.area(), h.parallelogram_area())
            })?;
            let t = triangle_from_hexagon(&h);
            let sym = transcover::geom::minkowski_symmetrize(&t.polygon());
            ensure((sym.area() - 1.5 * t.area()).abs() <= 1e-9 * sym.area(), || {
                format!("seed {seed} edge {}: |T-T|/2 {} vs |T| {}", e.edge, sym.area(), t.area())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} hexagons and triangles"))
}

fn dichotomy() -> Outcome {
    let mut min_excess = f64::INFINITY;
    let mut max_equal = 0.0f64;
    for n in [2, 4, 8] {
        for all in [false, true] {
            for seed in 0..100 {
                let inst = lowerbound_instance(n, &lowerbound_points(n, all, seed)).map_err(|e| e.to_string())?;
                let r = min_area_cover(&inst.diagonals()).map_err(|e| e.to_string())?;
                let area = 1.5 * r.area;
                let reference = inst.reference_area;
                let predicted = if area > reference + 1e-9 {
                    ArcClass::AllArcsOccupied
                } else {
                    ensure((area - reference).abs() <= 1e-9 * reference, || {
                        format!("n={n} seed {seed}: area {area} below reference {reference}")
                    })?;
                    max_equal = max_equal.max((area - reference).abs() / reference);
                    inst.class
                };
                ensure(matches!(predicted, ArcClass::AllArcsOccupied) == all, || {
                    format!("n={n} seed {seed}: area {area} vs {reference}, class {:?}", inst.class)
                })?;
                if all {
                    min_excess = min_excess.min(area - reference);
                }
            }
        }
    }
    Ok(format!("max equality gap {max_equal:.1e}, min excess {min_excess:.2e}"))
}

fn keyholes() -> Outcome {
    let seg = ConvexPolygon::new(&[Point::new(0.0, 0.0), Point::new(1.0, 0.0)]).map_err(|e| e.to_string())?;
    let d = keyhole_disk(&seg);
    ensure(d.radius == 0.5, || format!("segment radius {}", d.radius))?;
    let k = d.circumscribed_polygon(720);
    rotation_screening(&seg, &k, 360).map_err(|e| e.to_string())?;
    ensure(k.perimeter() >= TAU * d.radius, || "segment cover perimeter".into())?;

    let tri = Triangle::new(Point::ORIGIN, Point::new(1.0, 0.0), Point::new(0.5, 3f64.sqrt() / 2.0));
    let d = keyhole_disk(&tri.polygon());
    ensure((d.radius - 1.0 / 3f64.sqrt()).abs() <= 1e-12, || format!("triangle radius {}", d.radius))?;
    let k = d.circumscribed_polygon(720);
    let c = keyhole_certificate(&tri, &k, 360).map_err(|e| e.to_string())?;
    ensure(c.value >= c.bound() - 1e-3 * c.radius, || format!("certificate {} vs {}", c.value, c.bound()))?;
    Ok(format!("certificate {:.9} vs 2 pi R {:.9}", c.value, c.bound()))
}

fn perimeter_covers() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for seed in 0..100u64 {
        let mut figs = Vec::new();
        for j in 0..rng.gen_range(1..6) {
            let shift = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            if rng.gen_bool(0.5) {
                let p = random_symmetric_polygon(rng.gen_range(2..8), 100 * seed + j).map_err(|e| e.to_string())?;
                figs.push(Figure::Polygon(p.polygon().translate(shift)));
            } else {
                figs.push(Figure::Segment(Segment::centered(shift, rng.gen_range(0.1..3.0), rng.gen_range(0.0..PI))));
            }
        }
        let c = min_perimeter_cover(&figs).map_err(|e| e.to_string())?;
        for j in 0..720 {
            let t = j as f64 * PI / 720.0;
            let want = figs
                .iter()
                .map(|f| match f {
                    Figure::Polygon(p) => p.width(t),
                    Figure::Segment(s) => s.width(t),
                })
                .fold(0.0, f64::max);
            ensure((c.width(t) - want).abs() <= 1e-9, || format!("seed {seed} angle {t}: {} vs {want}", c.width(t)))?;
        }
    }
    let cross = fan(2);
    let best = min_perimeter_cover(&[Figure::Segment(cross[0]), Figure::Segment(cross[1])])
        .map_err(|e| e.to_string())?
        .perimeter();
    ensure((best - 2.0 * 2f64.sqrt()).abs() <= 1e-9, || format!("cross perimeter {best}"))?;
    let mut grid_min = f64::INFINITY;
    for i in 0..100 {
        for j in 0..100 {
            let q = cross[1].translate(Point::new(-1.0 + i as f64 * 0.02, -1.0 + j as f64 * 0.02));
            let hull = convex_hull(&[cross[0].a, cross[0].b, q.a, q.b]).map_err(|e| e.to_string())?;
            grid_min = grid_min.min(hull.perimeter());
        }
    }
    ensure(grid_min >= best - 1e-12, || format!("grid found {grid_min} < {best}"))?;
    Ok(format!("cross perimeter {best:.12}, grid minimum {grid_min:.12}"))
}

fn rectangles() -> Outcome {
    let rects = [Rect::new(1.0, 2.0).unwrap(), Rect::new(2.0, 1.0).unwrap()];
    let best = rect_cover(&rects).map_err(|e| e.to_string())?.area();
    ensure((best - 3.5).abs() <= 1e-12, || format!("area {best}"))?;
    let first = [Point::ORIGIN, Point::new(1.0, 0.0), Point::new(1.0, 2.0), Point::new(0.0, 2.0)];
    let mut grid_min = f64::INFINITY;
    for i in 0..=400 {
        for j in 0..=400 {
            let t = Point::new(-2.0 + i as f64 * 0.01, -2.0 + j as f64 * 0.01);
            let mut pts = first.to_vec();
            pts.extend([t, t + Point::new(2.0, 0.0), t + Point::new(2.0, 1.0), t + Point::new(0.0, 1.0)]);
            grid_min = grid_min.min(convex_hull(&pts).map_err(|e| e.to_string())?.area());
        }
    }
    ensure(grid_min >= best - 1e-12, || format!("grid found {grid_min} < {best}"))?;
    Ok(format!("area {best}, grid minimum {grid_min}"))
}

fn timed_cover(n: usize) -> Result<Duration, String> {
    let segs = random_segments(n, n as u64);
    let mut best = Duration::MAX;
    for _ in 0..3 {
        let start = Instant::now();
        let r = min_area_cover(&segs).map_err(|e| e.to_string())?;
        best = best.min(start.elapsed());
        std::hint::black_box(&r);
    }
    let r = min_area_cover(&segs).unwrap();
    let ok = verify_cover(&r.triangle.polygon(), &segs).map_err(|e| e.to_string())?.all_fit();
    ensure(ok, || format!("n={n}: cover does not verify"))?;
    Ok(best)
}

fn scaling() -> Outcome {
    let small = timed_cover(10_000)?;
    let large = timed_cover(100_000)?;
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    ensure(small < Duration::from_secs(5) && large < Duration::from_secs(5), || {
        format!("{small:?} / {large:?}")
    })?;
    ensure(ratio < 15.0, || format!("ratio {ratio:.1}"))?;
    Ok(format!("1e4: {small:.2?}, 1e5: {large:.2?}, ratio {ratio:.1}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fan limit", fan_limit),
        ("equilateral instance", equilateral),
        ("hexagon optimality", hexagon_optimality),
        ("structural identities", structural_identities),
        ("lower-bound dichotomy", dichotomy),
        ("keyholes", keyholes),
        ("perimeter covers", perimeter_covers),
        ("rectangle cover", rectangles),
        ("scaling", scaling),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
