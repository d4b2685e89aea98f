//! Command-line front end: reads a family from a file, computes the cover for
//! the chosen mode, re-checks it and reports JSON and optionally SVG.

pub mod input;
pub mod svg;

use std::f64::consts::TAU;
use std::path::PathBuf;
use std::time::Instant;

use serde_json::{json, Map, Value};
use transcover::covers::{
    keyhole_certificate, min_area_cover, min_perimeter_cover, rect_cover, rotation_screening, symmetrized_hull,
    verify_cover, Figure, Rect,
};
use transcover::geom::{convex_hull, smallest_enclosing_disk_seeded};
use transcover::hexagon::{min_affine_hexagon, triangle_from_hexagon};
use transcover::oracle::{lowerbound_instance, ArcClass};
use transcover::{ConvexPolygon, Direction, Point, Segment, SymmetricPolygon, Triangle};

pub use input::{parse_input, Format, Input};
use svg::{Scene, Style};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VERIFY: u8 = 2;

/// Sides of the polygon standing in for a disk in containment checks.
const DISK_SIDES: usize = 720;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("cannot write {0}: {1}")]
    Output(String, std::io::Error),
    #[error("line {line}, field {field}: {message}")]
    Parse { line: usize, field: usize, message: String },
    #[error("{at}: {message}")]
    Json { at: String, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Geometry(#[from] transcover::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Area,
    Perimeter,
    Keyhole,
    Hexagon,
    Rect,
    Verify,
    Lowerbound,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Area => "area",
            Mode::Perimeter => "perimeter",
            Mode::Keyhole => "keyhole",
            Mode::Hexagon => "hexagon",
            Mode::Rect => "rect",
            Mode::Verify => "verify",
            Mode::Lowerbound => "lowerbound",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub input: PathBuf,
    pub format: Format,
    /// Angles in input and output are in degrees rather than radians.
    pub degrees: bool,
    pub samples: usize,
    pub seed: u64,
    /// Relative tolerance of the self-checks, scaled by the input's extent.
    pub tolerance: f64,
    /// Arc count for `lowerbound` when the input does not give one.
    pub n: Option<usize>,
    pub svg: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(mode: Mode, input: impl Into<PathBuf>) -> Self {
        let input = input.into();
        let format = Format::guess(&input);
        RunConfig {
            mode,
            input,
            format,
            degrees: false,
            samples: 360,
            seed: 0,
            tolerance: 1e-9,
            n: None,
            svg: None,
            json: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.samples < 4 {
            return Err(CliError::Invalid(format!("samples must be at least 4, got {}", self.samples)));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Invalid(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        Ok(())
    }

    fn angle_out(&self, rad: f64) -> Value {
        num(if self.degrees { rad.to_degrees() } else { rad })
    }

    fn angle_in(&self, a: f64) -> f64 {
        if self.degrees {
            a.to_radians()
        } else {
            a
        }
    }
}

impl Format {
    /// `.json` files are JSON, anything else text.
    pub fn guess(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Text,
        }
    }
}

/// Result of one mode before output: the JSON report (without timing),
/// whether the self-check passed, and the figure.
pub struct Report {
    pub json: Map<String, Value>,
    pub verified: bool,
    pub scene: Scene,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round12(x)).map_or(Value::Null, Value::Number)
}

fn pt(p: Point) -> Value {
    json!([num(p.x), num(p.y)])
}

fn pts(v: &[Point]) -> Value {
    Value::Array(v.iter().map(|&p| pt(p)).collect())
}

fn scale_of(input: &Input) -> f64 {
    let mut s = 0f64;
    for seg in &input.segments {
        s = s.max(seg.a.max_abs()).max(seg.b.max_abs());
    }
    for p in input.polygons.iter().flatten() {
        s = s.max(p.max_abs());
    }
    for q in &input.pairs {
        s = s.max(q[0].abs()).max(q[1].abs());
    }
    s.max(1.0)
}

fn only(input: &Input, mode: Mode, segments: bool, polygons: bool, pairs: bool) -> Result<(), CliError> {
    let stray = (!segments && !input.segments.is_empty())
        || (!polygons && !input.polygons.is_empty())
        || (!pairs && !input.pairs.is_empty())
        || (mode != Mode::Lowerbound && !input.angles.is_empty());
    if stray {
        let mut want = Vec::new();
        if segments {
            want.push("segments");
        }
        if polygons {
            want.push("polygons");
        }
        if pairs {
            want.push(if mode == Mode::Rect { "rectangles" } else { "points" });
        }
        return Err(CliError::Invalid(format!("{} mode expects {}", mode.name(), want.join(" and "))));
    }
    Ok(())
}

/// Runs one mode on parsed input.
pub fn evaluate(config: &RunConfig, input: &Input) -> Result<Report, CliError> {
    config.validate()?;
    let tol = config.tolerance * scale_of(input);
    let mut scene = Scene::default();
    let mut out = Map::new();
    out.insert("mode".into(), json!(config.mode.name()));
    out.insert("tolerance".into(), json!({"relative": num(config.tolerance), "absolute": num(tol)}));
    let verified = match config.mode {
        Mode::Area => area(input, tol, &mut out, &mut scene)?,
        Mode::Perimeter => perimeter(input, tol, &mut out, &mut scene)?,
        Mode::Keyhole => keyhole(config, input, tol, &mut out, &mut scene)?,
        Mode::Hexagon => hexagon(config, input, tol, &mut out, &mut scene)?,
        Mode::Rect => rect(input, tol, &mut out, &mut scene)?,
        Mode::Verify => verify(input, tol, &mut out, &mut scene)?,
        Mode::Lowerbound => lowerbound(config, input, &mut out, &mut scene)?,
    };
    out.insert("verified".into(), json!(verified));
    Ok(Report { json: out, verified, scene })
}

fn area(input: &Input, tol: f64, out: &mut Map<String, Value>, scene: &mut Scene) -> Result<bool, CliError> {
    only(input, Mode::Area, true, false, false)?;
    let segs = &input.segments;
    let r = min_area_cover(segs)?;
    let hull = symmetrized_hull(segs)?;
    let t = r.triangle.polygon();
    let placed: Vec<Segment> = segs.iter().zip(&r.placements).map(|(s, &p)| s.translate(p)).collect();
    let inside = placed.iter().all(|s| t.contains(s.a, tol) && t.contains(s.b, tol));
    let ok = inside && verify_cover(&t, segs)?.all_fit();

    out.insert("objective".into(), json!("area"));
    out.insert("value".into(), num(r.area));
    out.insert("geometry".into(), json!({"type": "triangle", "vertices": pts(&r.triangle.vertices)}));
    out.insert("symmetrized_hull".into(), pts(hull.vertices()));
    out.insert("placements".into(), pts(&r.placements));
    out.insert("degenerate".into(), json!(r.degenerate));
    scene.polygon(hull.vertices(), Style::Hull);
    scene.polygon(&r.triangle.vertices, Style::Cover);
    for s in placed {
        scene.segment(s, Style::Figure);
    }
    Ok(ok)
}

fn perimeter(input: &Input, tol: f64, out: &mut Map<String, Value>, scene: &mut Scene) -> Result<bool, CliError> {
    only(input, Mode::Perimeter, true, true, false)?;
    let mut figures = Vec::new();
    let mut placements = Vec::new();
    let mut placed = Vec::new();
    for s in &input.segments {
        figures.push(Figure::Segment(*s));
        placements.push(-s.midpoint());
        placed.push(vec![s.a - s.midpoint(), s.b - s.midpoint()]);
    }
    for p in &input.polygons {
        let poly = ConvexPolygon::new(p)?;
        let c = poly.vertex_mean();
        placements.push(-c);
        placed.push(poly.translate(-c).vertices().to_vec());
        figures.push(Figure::Polygon(poly));
    }
    let cover = min_perimeter_cover(&figures)?;
    let ok = placed.iter().flatten().all(|&p| cover.contains(p, tol));

    out.insert("objective".into(), json!("perimeter"));
    out.insert("value".into(), num(cover.perimeter()));
    out.insert("geometry".into(), json!({"type": "polygon", "vertices": pts(cover.vertices())}));
    out.insert("placements".into(), pts(&placements));
    scene.polygon(cover.vertices(), Style::Cover);
    for f in placed {
        scene.polygon(&f, Style::Figure);
    }
    Ok(ok)
}

fn keyhole(
    config: &RunConfig,
    input: &Input,
    tol: f64,
    out: &mut Map<String, Value>,
    scene: &mut Scene,
) -> Result<bool, CliError> {
    only(input, Mode::Keyhole, true, true, false)?;
    let mut all: Vec<Point> = input.segments.iter().flat_map(|s| [s.a, s.b]).collect();
    all.extend(input.polygons.iter().flatten());
    let g = convex_hull(&all)?;
    let d = smallest_enclosing_disk_seeded(g.vertices(), config.seed)?;
    let g = g.translate(-d.center);
    let disk = transcover::Disk::new(Point::ORIGIN, d.radius);
    let k = disk.circumscribed_polygon(DISK_SIDES);
    let mut ok = g.vertices().iter().all(|&v| disk.contains(v, tol));
    let screening = match rotation_screening(&g, &k, config.samples) {
        Ok(()) => json!({"passed": true, "samples": config.samples}),
        Err(transcover::Error::RotationContainment { angle }) => {
            ok = false;
            json!({"passed": false, "samples": config.samples, "failed_angle": config.angle_out(angle)})
        }
        Err(e) => return Err(e.into()),
    };
    let certificate = if g.len() == 3 {
        let v = g.vertices();
        match keyhole_certificate(&Triangle::new(v[0], v[1], v[2]), &k, config.samples) {
            Ok(c) => {
                ok &= c.value >= c.bound() - 1e-3 * c.radius;
                json!({
                    "alphas": c.alphas.map(num),
                    "deltas": c.deltas.map(|a| config.angle_out(a)),
                    "value": num(c.value),
                    "bound": num(c.bound()),
                    "min_integrand": num(c.min_integrand),
                })
            }
            Err(transcover::Error::NotAcute) => Value::Null,
            Err(e) => return Err(e.into()),
        }
    } else {
        Value::Null
    };

    out.insert("objective".into(), json!("perimeter"));
    out.insert("value".into(), num(TAU * d.radius));
    out.insert(
        "geometry".into(),
        json!({"type": "disk", "center": pt(Point::ORIGIN), "radius": num(d.radius), "figure": pts(g.vertices())}),
    );
    out.insert("placements".into(), json!([pt(-d.center)]));
    out.insert("screening".into(), screening);
    out.insert("certificate".into(), certificate);
    scene.circle(Point::ORIGIN, d.radius, Style::Cover);
    scene.polygon(g.vertices(), Style::Figure);
    Ok(ok)
}

fn hexagon(
    config: &RunConfig,
    input: &Input,
    tol: f64,
    out: &mut Map<String, Value>,
    scene: &mut Scene,
) -> Result<bool, CliError> {
    only(input, Mode::Hexagon, true, true, false)?;
    let (p, shift) = match (input.polygons.as_slice(), input.segments.is_empty()) {
        ([poly], true) => {
            let poly = ConvexPolygon::new(poly)?;
            let c = poly.vertex_mean();
            let centred = poly.translate(-c);
            let sym = SymmetricPolygon::try_from_polygon(&centred, 1e-9 * centred.scale().max(f64::MIN_POSITIVE))?;
            (sym, -c)
        }
        ([], false) => (symmetrized_hull(&input.segments)?, Point::ORIGIN),
        _ => return Err(CliError::Invalid("hexagon mode expects one polygon or a set of segments".into())),
    };
    let (h, edge) = min_affine_hexagon(&p)?;
    let t = triangle_from_hexagon(&h);
    let (s1, s2) = h.strips();
    let normals: Vec<Value> = [s1, s2, h.strip3()]
        .iter()
        .map(|s| config.angle_out(Direction::from_vector(s.normal()).angle()))
        .collect();
    let ok = p.vertices().iter().all(|&v| h.contains(v, tol))
        && (h.area() - 0.75 * h.parallelogram_area()).abs() <= 1e-12 * h.area();

    out.insert("objective".into(), json!("area"));
    out.insert("value".into(), num(h.area()));
    out.insert(
        "geometry".into(),
        json!({
            "type": "hexagon",
            "vertices": pts(&h.vertices()),
            "parallelogram_area": num(h.parallelogram_area()),
            "strip_normals": normals,
            "edge": edge,
            "triangle": pts(&t.vertices),
        }),
    );
    out.insert("placements".into(), json!([pt(shift)]));
    scene.polygon(p.vertices(), Style::Figure);
    scene.polygon(&t.vertices, Style::Hull);
    scene.polygon(&h.vertices(), Style::Cover);
    Ok(ok)
}

fn rect(input: &Input, tol: f64, out: &mut Map<String, Value>, scene: &mut Scene) -> Result<bool, CliError> {
    only(input, Mode::Rect, false, false, true)?;
    let rects = input.pairs.iter().map(|&[w, h]| Rect::new(w, h)).collect::<Result<Vec<_>, _>>()?;
    let cover = rect_cover(&rects)?;
    let corners = |r: &Rect| {
        [Point::ORIGIN, Point::new(r.width(), 0.0), Point::new(r.width(), r.height()), Point::new(0.0, r.height())]
    };
    let ok = rects.iter().flat_map(corners).all(|p| cover.contains(p, tol));

    out.insert("objective".into(), json!("area"));
    out.insert("value".into(), num(cover.area()));
    out.insert("geometry".into(), json!({"type": "polygon", "vertices": pts(cover.vertices())}));
    out.insert("placements".into(), pts(&vec![Point::ORIGIN; rects.len()]));
    scene.polygon(cover.vertices(), Style::Cover);
    for r in &rects {
        scene.polygon(&corners(r), Style::Figure);
    }
    Ok(ok)
}

fn verify(input: &Input, tol: f64, out: &mut Map<String, Value>, scene: &mut Scene) -> Result<bool, CliError> {
    only(input, Mode::Verify, true, true, false)?;
    let [k] = input.polygons.as_slice() else {
        return Err(CliError::Invalid("verify mode expects exactly one polygon and a set of segments".into()));
    };
    let k = ConvexPolygon::new(k)?;
    let rep = verify_cover(&k, &input.segments)?;
    let mut ok = rep.all_fit();
    let mut verdicts = Vec::new();
    for (s, v) in input.segments.iter().zip(&rep.verdicts) {
        match v.placement {
            Some(p) => {
                let q = s.translate(p);
                ok &= k.contains(q.a, tol) && k.contains(q.b, tol);
                scene.segment(q, Style::Figure);
            }
            None => scene.segment(*s, Style::Miss),
        }
        verdicts.push(json!({
            "fits": v.fits,
            "placement": v.placement.map_or(Value::Null, pt),
            "width_excess": num(v.width_excess),
            "chord": num(v.chord),
        }));
    }
    out.insert("objective".into(), json!("containment"));
    out.insert("value".into(), json!(rep.all_fit()));
    out.insert("geometry".into(), json!({"type": "polygon", "vertices": pts(k.vertices())}));
    out.insert(
        "placements".into(),
        Value::Array(rep.verdicts.iter().map(|v| v.placement.map_or(Value::Null, pt)).collect()),
    );
    out.insert("verdicts".into(), Value::Array(verdicts));
    scene.polygon(k.vertices(), Style::Cover);
    Ok(ok)
}

fn class_json(c: ArcClass) -> Value {
    match c {
        ArcClass::SomeArcEmpty { arc } => json!({"kind": "some_arc_empty", "arc": arc}),
        ArcClass::AllArcsOccupied => json!({"kind": "all_arcs_occupied"}),
    }
}

fn lowerbound(
    config: &RunConfig,
    input: &Input,
    out: &mut Map<String, Value>,
    scene: &mut Scene,
) -> Result<bool, CliError> {
    only(input, Mode::Lowerbound, false, false, true)?;
    let n = config
        .n
        .or(input.n)
        .ok_or_else(|| CliError::Invalid("lowerbound mode needs an arc count (--n or \"n\" in JSON)".into()))?;
    let mut points: Vec<Point> = input.pairs.iter().map(|&[x, y]| Point::new(x, y)).collect();
    points.extend(input.angles.iter().map(|&a| Direction::new(config.angle_in(a)).unit()));
    let inst = lowerbound_instance(n, &points)?;
    let r = min_area_cover(&inst.diagonals())?;
    let area = 1.5 * r.area;
    let reference = inst.reference_area;
    let margin = config.tolerance * reference;
    let predicted = if area > reference + margin {
        Some(ArcClass::AllArcsOccupied)
    } else if (area - reference).abs() <= margin {
        Some(inst.class).filter(|c| matches!(c, ArcClass::SomeArcEmpty { .. }))
    } else {
        None
    };
    let ok = matches!(
        (predicted, inst.class),
        (Some(ArcClass::AllArcsOccupied), ArcClass::AllArcsOccupied)
            | (Some(ArcClass::SomeArcEmpty { .. }), ArcClass::SomeArcEmpty { .. })
    );
    let hexagon = transcover::geom::minkowski_symmetrize(&r.triangle.polygon());

    out.insert("objective".into(), json!("area"));
    out.insert("value".into(), num(area));
    out.insert("reference_area".into(), num(reference));
    out.insert("class".into(), class_json(inst.class));
    out.insert(
        "predicted".into(),
        predicted.map_or(json!({"kind": "inconclusive"}), |c| json!({"kind": class_json(c)["kind"]})),
    );
    out.insert(
        "geometry".into(),
        json!({
            "type": "hexagon",
            "vertices": pts(hexagon.vertices()),
            "polygon": pts(inst.polygon.vertices()),
            "triangle": pts(&r.triangle.vertices),
        }),
    );
    out.insert("placements".into(), pts(&r.placements));
    scene.polygon(inst.polygon.vertices(), Style::Figure);
    scene.polygon(hexagon.vertices(), Style::Cover);
    scene.polygon(&r.triangle.vertices, Style::Hull);
    Ok(ok)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Output(path.display().to_string(), e))
}

/// Parses, evaluates and writes outputs. JSON goes to the `json` path when
/// set and to the returned stdout otherwise.
pub fn run(config: &RunConfig) -> RunOutput {
    let mut res = RunOutput { status: EXIT_OK, stdout: String::new(), stderr: String::new() };
    let start = Instant::now();
    let report = parse_input(&config.input, config.format).and_then(|input| evaluate(config, &input));
    let mut report = match report {
        Ok(r) => r,
        Err(e) => {
            res.status = EXIT_INPUT;
            res.stderr = format!("error: {}: {e}\n", config.input.display());
            return res;
        }
    };
    report.json.insert("timing_ms".into(), num(start.elapsed().as_secs_f64() * 1e3));
    let text = serde_json::to_string_pretty(&Value::Object(report.json)).expect("JSON values serialize") + "\n";
    let written = match &config.json {
        Some(p) => write_file(p, &text),
        None => {
            res.stdout = text;
            Ok(())
        }
    }
    .and_then(|()| config.svg.as_ref().map_or(Ok(()), |p| write_file(p, &report.scene.render())));
    if let Err(e) = written {
        res.status = EXIT_INPUT;
        res.stderr = format!("error: {e}\n");
    } else if !report.verified {
        res.status = EXIT_VERIFY;
        res.stderr = format!("error: {}: self-check failed\n", config.input.display());
    }
    res
}
