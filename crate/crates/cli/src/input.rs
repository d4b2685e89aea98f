use std::path::Path;

use serde_json::Value;
use transcover::{Point, Segment};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Everything an input file can hold. Text lines with two numbers and the
/// JSON `rects` or `points` arrays land in `pairs`; the mode decides whether
/// they are rectangle extents or arc points.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Input {
    pub segments: Vec<Segment>,
    pub polygons: Vec<Vec<Point>>,
    pub pairs: Vec<[f64; 2]>,
    /// Polar angles of arc points, in the unit of the input.
    pub angles: Vec<f64>,
    pub n: Option<usize>,
}

impl Input {
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty() && self.polygons.is_empty() && self.pairs.is_empty() && self.angles.is_empty()
    }
}

pub fn parse_input(path: &Path, format: Format) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    match format {
        Format::Text => parse_text(&text),
        Format::Json => parse_json(&text),
    }
}

/// One object per line: `x1 y1 x2 y2` is a segment, two numbers a rectangle
/// or arc point, one number an arc-point angle, and an even count of six or
/// more a polygon. Blank lines and `#` comments are skipped.
pub fn parse_text(text: &str) -> Result<Input, CliError> {
    let mut input = Input::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut nums = Vec::new();
        for (j, tok) in body.split_whitespace().enumerate() {
            let field = j + 1;
            let v: f64 = tok.parse().map_err(|_| CliError::Parse {
                line,
                field,
                message: format!("invalid number '{tok}'"),
            })?;
            if !v.is_finite() {
                return Err(CliError::Parse { line, field, message: format!("non-finite value '{tok}'") });
            }
            nums.push(v);
        }
        match nums.len() {
            0 => {}
            1 => input.angles.push(nums[0]),
            2 => input.pairs.push([nums[0], nums[1]]),
            4 => input.segments.push(Segment::new(Point::new(nums[0], nums[1]), Point::new(nums[2], nums[3]))),
            k if k >= 6 && k % 2 == 0 => input.polygons.push(nums.chunks(2).map(|c| Point::new(c[0], c[1])).collect()),
            k => {
                return Err(CliError::Parse {
                    line,
                    field: k,
                    message: format!("expected 1, 2, 4 or an even count of at least 6 numbers, found {k}"),
                })
            }
        }
    }
    Ok(input)
}

pub fn parse_json(text: &str) -> Result<Input, CliError> {
    let root: Value = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        field: e.column(),
        message: e.to_string(),
    })?;
    let obj = root.as_object().ok_or_else(|| json_err("$", "expected a top-level object"))?;
    let mut input = Input::default();
    for (key, val) in obj {
        match key.as_str() {
            "segments" => {
                for (i, s) in array(val, "segments")?.iter().enumerate() {
                    let at = format!("segments[{i}]");
                    let c = numbers(s, &at)?;
                    if c.len() != 4 {
                        return Err(json_err(&at, "expected [x1, y1, x2, y2]"));
                    }
                    input.segments.push(Segment::new(Point::new(c[0], c[1]), Point::new(c[2], c[3])));
                }
            }
            "polygons" => {
                for (i, p) in array(val, "polygons")?.iter().enumerate() {
                    let at = format!("polygons[{i}]");
                    let pts = array(p, &at)?
                        .iter()
                        .enumerate()
                        .map(|(j, v)| pair(v, &format!("{at}[{j}]")).map(|[x, y]| Point::new(x, y)))
                        .collect::<Result<_, _>>()?;
                    input.polygons.push(pts);
                }
            }
            "rects" | "points" => {
                for (i, v) in array(val, key)?.iter().enumerate() {
                    let at = format!("{key}[{i}]");
                    match v.as_f64() {
                        Some(t) if key == "points" => input.angles.push(finite(t, &at)?),
                        _ => input.pairs.push(pair(v, &at)?),
                    }
                }
            }
            "n" => {
                let n = val.as_u64().filter(|&n| n > 0).ok_or_else(|| json_err("n", "expected a positive integer"))?;
                input.n = Some(n as usize);
            }
            other => return Err(json_err(other, "unknown key")),
        }
    }
    Ok(input)
}

fn json_err(at: &str, message: &str) -> CliError {
    CliError::Json { at: at.to_string(), message: message.to_string() }
}

fn array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| json_err(at, "expected an array"))
}

fn finite(v: f64, at: &str) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(json_err(at, "non-finite value"))
    }
}

fn numbers(v: &Value, at: &str) -> Result<Vec<f64>, CliError> {
    array(v, at)?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let at = format!("{at}[{i}]");
            x.as_f64().ok_or_else(|| json_err(&at, "expected a number")).and_then(|x| finite(x, &at))
        })
        .collect()
}

fn pair(v: &Value, at: &str) -> Result<[f64; 2], CliError> {
    match numbers(v, at)?[..] {
        [x, y] => Ok([x, y]),
        _ => Err(json_err(at, "expected [x, y]")),
    }
}
