//! Reading and writing configurations.
//!
//! Text format (UTF-8, `#` starts a comment):
//!
//! ```text
//! affine 2            # or: projective 2
//! origin 0            # optional: index of the origin point
//! origin-point 1/2 0  # optional alternative: an origin that is not a point
//! weight 3 5/2        # optional, repeatable; unlisted weights are 1
//! expect f1_off 7     # optional statistics to validate
//! 0 1
//! 1 -1
//! ```
//!
//! Affine rows have `d` coordinates and are lifted to `(1, x)`; projective rows
//! have `d + 1`. The JSON form carries the same content:
//! `{"mode": "affine", "dim": 2, "origin": 0, "weights": ["1", "5/2"],
//! "points": [["0", "1"], ["1", "-1"]]}`; numbers may be JSON numbers or
//! strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::One;
use serde_json::{json, Value};

use crate::config::{Config, Origin};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Affine,
    Projective,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Affine => "affine",
            Mode::Projective => "projective",
        }
    }
}

/// A parsed file: the configuration plus any `expect` lines.
#[derive(Clone, Debug)]
pub struct Document {
    pub config: Config,
    pub expectations: BTreeMap<String, i64>,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn make_point(mode: Mode, d: usize, coords: Vec<Scalar>, line: usize) -> Result<Point> {
    let want = match mode {
        Mode::Affine => d,
        Mode::Projective => d + 1,
    };
    if coords.len() != want {
        return Err(perr(
            line,
            format!("expected {want} coordinates, found {}", coords.len()),
        ));
    }
    match mode {
        Mode::Affine => Ok(Point::affine(coords)),
        Mode::Projective => Point::new(coords).map_err(|e| perr(line, e.to_string())),
    }
}

fn parse_coords<'a>(fields: impl Iterator<Item = &'a str>, line: usize) -> Result<Vec<Scalar>> {
    fields
        .map(|f| scalar::parse(f).map_err(|m| perr(line, m)))
        .collect()
}

fn assemble(
    d: usize,
    points: Vec<Point>,
    origin: Option<Origin>,
    weights: BTreeMap<usize, (Scalar, usize)>,
    line_of_point: &[usize],
) -> Result<Config> {
    let n = points.len();
    let mut config = Config::new(d, points).map_err(|e| match e {
        Error::DuplicatePoint { second, .. } => perr(line_of_point[second], e.to_string()),
        other => other,
    })?;
    if let Some(o) = origin {
        config = config.with_origin(o)?;
    }
    if !weights.is_empty() {
        let mut w = vec![Scalar::one(); n];
        for (i, (v, line)) in weights {
            if i >= n {
                return Err(perr(
                    line,
                    format!("weight for point {i}, but only {n} points"),
                ));
            }
            w[i] = v;
        }
        config = config.with_weights(w)?;
    }
    Ok(config)
}

/// Parses the text format.
pub fn parse_text(text: &str) -> Result<Document> {
    let mut header: Option<(Mode, usize)> = None;
    let mut points = Vec::new();
    let mut point_lines = Vec::new();
    let mut origin_index: Option<(usize, usize)> = None;
    let mut origin_point: Option<(Vec<Scalar>, usize)> = None;
    let mut weights = BTreeMap::new();
    let mut expectations = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let mut fields = body.split_whitespace();
        let first = fields.next().unwrap();
        let Some((mode, d)) = header else {
            let mode = match first {
                "affine" => Mode::Affine,
                "projective" => Mode::Projective,
                _ => {
                    return Err(perr(
                        line,
                        "expected header `affine <d>` or `projective <d>`",
                    ))
                }
            };
            let d = fields
                .next()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| perr(line, "header needs a dimension"))?;
            if fields.next().is_some() {
                return Err(perr(line, "trailing text after header"));
            }
            if mode == Mode::Affine && d == 0 {
                return Err(perr(line, "affine dimension must be at least 1"));
            }
            header = Some((mode, d));
            continue;
        };
        match first {
            "origin" => {
                let i = fields
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| perr(line, "origin needs a point index"))?;
                origin_index = Some((i, line));
            }
            "origin-point" => {
                origin_point = Some((parse_coords(fields, line)?, line));
            }
            "weight" => {
                let i = fields
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| perr(line, "weight needs a point index"))?;
                let w = fields
                    .next()
                    .ok_or_else(|| perr(line, "weight needs a value"))
                    .and_then(|s| scalar::parse(s).map_err(|m| perr(line, m)))?;
                if fields.next().is_some() {
                    return Err(perr(line, "trailing text after weight"));
                }
                weights.insert(i, (w, line));
            }
            "expect" => {
                let name = fields
                    .next()
                    .ok_or_else(|| perr(line, "expect needs a statistic name"))?;
                let v = fields
                    .next()
                    .and_then(|s| s.parse::<i64>().ok())
                    .ok_or_else(|| perr(line, "expect needs an integer value"))?;
                expectations.insert(name.to_string(), v);
            }
            _ => {
                let coords = parse_coords(body.split_whitespace(), line)?;
                points.push(make_point(mode, d, coords, line)?);
                point_lines.push(line);
            }
        }
    }
    let (mode, d) = header.ok_or_else(|| perr(1, "missing header"))?;
    let origin = match (origin_index, origin_point) {
        (Some(_), Some((_, line))) => return Err(perr(line, "both origin and origin-point given")),
        (Some((i, line)), None) => {
            if i >= points.len() {
                return Err(perr(line, format!("origin {i} out of range")));
            }
            Some(Origin::Index(i))
        }
        (None, Some((coords, line))) => Some(Origin::Point(make_point(mode, d, coords, line)?)),
        (None, None) => None,
    };
    let config = assemble(d, points, origin, weights, &point_lines)?;
    Ok(Document {
        config,
        expectations,
    })
}

fn json_scalar(v: &Value, what: &str) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(perr(0, format!("{what}: expected a number or string"))),
    };
    scalar::parse(&text).map_err(|m| perr(0, format!("{what}: {m}")))
}

fn json_coords(v: &Value, what: &str) -> Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| perr(0, format!("{what}: expected an array")))?
        .iter()
        .map(|x| json_scalar(x, what))
        .collect()
}

/// Parses the JSON form. Errors report line 0.
pub fn parse_json(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| perr(e.line(), e.to_string()))?;
    let mode = match v.get("mode").and_then(Value::as_str) {
        Some("affine") => Mode::Affine,
        Some("projective") => Mode::Projective,
        _ => return Err(perr(0, "`mode` must be \"affine\" or \"projective\"")),
    };
    let d = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| perr(0, "`dim` must be a non-negative integer"))? as usize;
    let mut points = Vec::new();
    for (i, row) in v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| perr(0, "`points` must be an array"))?
        .iter()
        .enumerate()
    {
        let coords = json_coords(row, &format!("point {i}"))?;
        points.push(make_point(mode, d, coords, 0)?);
    }
    let origin = match v.get("origin") {
        None | Some(Value::Null) => None,
        Some(Value::Number(n)) => Some(Origin::Index(
            n.as_u64()
                .ok_or_else(|| perr(0, "`origin` index must be non-negative"))?
                as usize,
        )),
        Some(arr @ Value::Array(_)) => Some(Origin::Point(make_point(
            mode,
            d,
            json_coords(arr, "origin")?,
            0,
        )?)),
        Some(_) => return Err(perr(0, "`origin` must be an index or a coordinate array")),
    };
    if let Some(Origin::Index(i)) = origin {
        if i >= points.len() {
            return Err(perr(0, format!("origin {i} out of range")));
        }
    }
    let mut weights = BTreeMap::new();
    match v.get("weights") {
        None | Some(Value::Null) => {}
        Some(Value::Array(ws)) => {
            if ws.len() != points.len() {
                return Err(perr(0, "`weights` needs one entry per point"));
            }
            for (i, w) in ws.iter().enumerate() {
                weights.insert(i, (json_scalar(w, "weight")?, 0));
            }
        }
        Some(_) => return Err(perr(0, "`weights` must be an array")),
    }
    let mut expectations = BTreeMap::new();
    if let Some(Value::Object(ex)) = v.get("expect") {
        for (k, val) in ex {
            let x = val
                .as_i64()
                .ok_or_else(|| perr(0, format!("expectation {k} must be an integer")))?;
            expectations.insert(k.clone(), x);
        }
    }
    let lines = vec![0; points.len()];
    let config = assemble(d, points, origin, weights, &lines)?;
    Ok(Document {
        config,
        expectations,
    })
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_document(text: &str) -> Result<Document> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn load_document(path: impl AsRef<Path>) -> Result<Document> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_json(&text)
    } else {
        parse_document(&text)
    }
}

pub fn load_config(path: impl AsRef<Path>) -> Result<Config> {
    load_document(path).map(|d| d.config)
}

fn mode_of(config: &Config) -> Mode {
    let all_affine = config.points().iter().all(|p| p.to_affine().is_some())
        && config
            .origin_point()
            .is_none_or(|o| o.to_affine().is_some());
    if all_affine && config.ambient_dim() > 0 {
        Mode::Affine
    } else {
        Mode::Projective
    }
}

fn row(mode: Mode, p: &Point) -> Vec<String> {
    let c = match mode {
        Mode::Affine => p.to_affine().unwrap(),
        Mode::Projective => p.coords(),
    };
    c.iter().map(scalar::format).collect()
}

/// Writes the text format; affine whenever every point is affine.
pub fn to_text(config: &Config) -> String {
    let mode = mode_of(config);
    let mut out = format!("{} {}\n", mode.name(), config.ambient_dim());
    match config.origin() {
        Some(Origin::Index(i)) => writeln!(out, "origin {i}").unwrap(),
        Some(Origin::Point(p)) => writeln!(out, "origin-point {}", row(mode, p).join(" ")).unwrap(),
        None => {}
    }
    if let Some(ws) = config.weights() {
        for (i, w) in ws.iter().enumerate() {
            if !w.is_one() {
                writeln!(out, "weight {i} {}", scalar::format(w)).unwrap();
            }
        }
    }
    for p in config.points() {
        writeln!(out, "{}", row(mode, p).join(" ")).unwrap();
    }
    out
}

pub fn to_json(config: &Config) -> Value {
    let mode = mode_of(config);
    let origin = match config.origin() {
        Some(Origin::Index(i)) => json!(i),
        Some(Origin::Point(p)) => json!(row(mode, p)),
        None => Value::Null,
    };
    let weights = config.weights().map_or(Value::Null, |ws| {
        json!(ws.iter().map(scalar::format).collect::<Vec<_>>())
    });
    json!({
        "mode": mode.name(),
        "dim": config.ambient_dim(),
        "origin": origin,
        "weights": weights,
        "points": config.points().iter().map(|p| row(mode, p)).collect::<Vec<_>>(),
    })
}

/// Writes text, or JSON when the path ends in `.json`.
pub fn save_config(config: &Config, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = if path.extension().is_some_and(|e| e == "json") {
        let mut s = serde_json::to_string_pretty(&to_json(config)).unwrap();
        s.push('\n');
        s
    } else {
        to_text(config)
    };
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
