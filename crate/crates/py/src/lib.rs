//! Python bindings for transcover.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use transcover::covers::{self, Figure, Rect};
use transcover::{geom, hexagon, ConvexPolygon, Point, SymmetricPolygon};

type Xy = (f64, f64);

fn err(e: transcover::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn xy(p: Point) -> Xy {
    (p.x, p.y)
}

fn xys(v: &[Point]) -> Vec<Xy> {
    v.iter().map(|&p| xy(p)).collect()
}

fn points(v: &[Xy]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

/// A line segment between two points.
#[pyclass(module = "transcover_py", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct Segment(transcover::Segment);

#[pymethods]
impl Segment {
    #[new]
    fn new(a: Xy, b: Xy) -> Self {
        Segment(transcover::Segment::new(Point::new(a.0, a.1), Point::new(b.0, b.1)))
    }

    /// Segment of `length` centred at `center` with direction angle `theta`.
    #[staticmethod]
    fn centered(center: Xy, length: f64, theta: f64) -> Self {
        Segment(transcover::Segment::centered(Point::new(center.0, center.1), length, theta))
    }

    #[getter]
    fn a(&self) -> Xy {
        xy(self.0.a)
    }

    #[getter]
    fn b(&self) -> Xy {
        xy(self.0.b)
    }

    fn length(&self) -> f64 {
        self.0.length()
    }

    fn width(&self, theta: f64) -> f64 {
        self.0.width(theta)
    }

    fn __repr__(&self) -> String {
        format!("Segment(({}, {}), ({}, {}))", self.0.a.x, self.0.a.y, self.0.b.x, self.0.b.y)
    }
}

/// A segment given either as a `Segment` or as `(x1, y1, x2, y2)`.
#[derive(FromPyObject)]
enum SegmentLike {
    Seg(Segment),
    Tuple(f64, f64, f64, f64),
}

impl SegmentLike {
    fn get(&self) -> transcover::Segment {
        match *self {
            SegmentLike::Seg(s) => s.0,
            SegmentLike::Tuple(a, b, c, d) => transcover::Segment::new(Point::new(a, b), Point::new(c, d)),
        }
    }
}

fn segments(v: &[SegmentLike]) -> Vec<transcover::Segment> {
    v.iter().map(SegmentLike::get).collect()
}

/// A convex polygon with counter-clockwise vertices.
#[pyclass(module = "transcover_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct Polygon(ConvexPolygon);

#[pymethods]
impl Polygon {
    /// Convex hull of the given points.
    #[new]
    fn new(points: Vec<Xy>) -> PyResult<Self> {
        geom::convex_hull(&crate::points(&points)).map(Polygon).map_err(err)
    }

    #[getter]
    fn vertices(&self) -> Vec<Xy> {
        xys(self.0.vertices())
    }

    fn area(&self) -> f64 {
        self.0.area()
    }

    fn perimeter(&self) -> f64 {
        self.0.perimeter()
    }

    /// Extent of the polygon along the unit vector at angle `theta`.
    fn width(&self, theta: f64) -> f64 {
        self.0.width(theta)
    }

    #[pyo3(signature = (point, tol = 0.0))]
    fn contains(&self, point: Xy, tol: f64) -> bool {
        self.0.contains(Point::new(point.0, point.1), tol)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Polygon({:?})", self.vertices())
    }
}

/// Minimum-area triangle cover of a segment family.
#[pyclass(module = "transcover_py", frozen, get_all)]
pub struct Cover {
    /// Triangle vertices.
    triangle: Vec<Xy>,
    area: f64,
    /// Translation applied to each input segment.
    placements: Vec<Xy>,
    /// True when the family is collinear and the triangle flattens to a segment.
    degenerate: bool,
}

#[pymethods]
impl Cover {
    fn polygon(&self) -> PyResult<Polygon> {
        Polygon::new(self.triangle.clone())
    }

    fn __repr__(&self) -> String {
        format!("Cover(area={}, triangle={:?})", self.area, self.triangle)
    }
}

/// Affine-regular hexagon circumscribed about a centrally symmetric polygon.
#[pyclass(module = "transcover_py", frozen, get_all)]
pub struct Hexagon {
    vertices: Vec<Xy>,
    area: f64,
    parallelogram_area: f64,
    /// Index of the polygon edge lying on the first side.
    edge: usize,
    /// Triangle whose central symmetrization is this hexagon.
    triangle: Vec<Xy>,
}

#[pymethods]
impl Hexagon {
    fn __repr__(&self) -> String {
        format!("Hexagon(area={}, edge={})", self.area, self.edge)
    }
}

#[pyfunction]
fn min_area_cover(segments: Vec<SegmentLike>) -> PyResult<Cover> {
    let r = covers::min_area_cover(&crate::segments(&segments)).map_err(err)?;
    Ok(Cover {
        triangle: xys(&r.triangle.vertices),
        area: r.area,
        placements: xys(&r.placements),
        degenerate: r.degenerate,
    })
}

#[pyfunction]
fn symmetrized_hull(segments: Vec<SegmentLike>) -> PyResult<Polygon> {
    covers::symmetrized_hull(&crate::segments(&segments))
        .map(|h| Polygon(h.into_polygon()))
        .map_err(err)
}

/// Minimum-area hexagon around a centrally symmetric polygon given by its
/// vertices; the polygon must be symmetric about the origin.
#[pyfunction]
fn min_affine_hexagon(points: Vec<Xy>) -> PyResult<Hexagon> {
    let p = SymmetricPolygon::from_points(&crate::points(&points)).map_err(err)?;
    let (h, edge) = hexagon::min_affine_hexagon(&p).map_err(err)?;
    Ok(Hexagon {
        vertices: xys(&h.vertices()),
        area: h.area(),
        parallelogram_area: h.parallelogram_area(),
        edge,
        triangle: xys(&hexagon::triangle_from_hexagon(&h).vertices),
    })
}

/// Minimum-perimeter cover of centrally symmetric polygons and segments.
#[pyfunction]
#[pyo3(signature = (polygons = Vec::new(), segments = Vec::new()))]
fn min_perimeter_cover(polygons: Vec<Polygon>, segments: Vec<SegmentLike>) -> PyResult<Polygon> {
    let mut figures: Vec<Figure> = polygons.into_iter().map(|p| Figure::Polygon(p.0)).collect();
    figures.extend(crate::segments(&segments).into_iter().map(Figure::Segment));
    covers::min_perimeter_cover(&figures).map(Polygon).map_err(err)
}

/// Smallest disk holding every rotation of the figure: `(center, radius)`.
#[pyfunction]
fn keyhole_disk(figure: &Polygon) -> (Xy, f64) {
    let d = covers::keyhole_disk(&figure.0);
    (xy(d.center), d.radius)
}

/// Minimum-area cover of axis-parallel rectangles given as `(w, h)`.
#[pyfunction]
fn rect_cover(rects: Vec<Xy>) -> PyResult<Polygon> {
    let rects = rects.into_iter().map(|(w, h)| Rect::new(w, h)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    covers::rect_cover(&rects).map(Polygon).map_err(err)
}

/// For each segment, the translation placing it inside `k`, or `None`.
#[pyfunction]
fn verify_cover(k: &Polygon, segments: Vec<SegmentLike>) -> PyResult<Vec<Option<Xy>>> {
    let rep = covers::verify_cover(&k.0, &crate::segments(&segments)).map_err(err)?;
    Ok(rep.verdicts.iter().map(|v| v.placement.map(xy)).collect())
}

#[pymodule]
fn transcover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Segment>()?;
    m.add_class::<Polygon>()?;
    m.add_class::<Cover>()?;
    m.add_class::<Hexagon>()?;
    m.add_function(wrap_pyfunction!(min_area_cover, m)?)?;
    m.add_function(wrap_pyfunction!(symmetrized_hull, m)?)?;
    m.add_function(wrap_pyfunction!(min_affine_hexagon, m)?)?;
    m.add_function(wrap_pyfunction!(min_perimeter_cover, m)?)?;
    m.add_function(wrap_pyfunction!(keyhole_disk, m)?)?;
    m.add_function(wrap_pyfunction!(rect_cover, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cover, m)?)?;
    Ok(())
}
