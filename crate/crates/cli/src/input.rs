//! Curve files: a versioned JSON list of control polygons.
//!
//! Numbers may be strings (`"3/4"`, `"-2"`, `"0.75"`, `"1e-3"`) or JSON
//! numbers; both are read from their literal text, so nothing passes
//! through floating point.

use std::path::Path;

use ratcubic::{int, parse_scalar, ControlPolygon, Point2, Scalar};
use serde_json::{json, Value};

use crate::error::CliError;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: Option<String>,
    pub polygon: ControlPolygon,
}

impl Curve {
    pub fn label(&self, index: usize) -> String {
        match &self.name {
            Some(n) => format!("curve {index} ({n})"),
            None => format!("curve {index}"),
        }
    }
}

/// One entry per curve in file order; a malformed curve does not spoil its
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFile {
    pub version: u64,
    pub curves: Vec<Result<Curve, CliError>>,
}

fn field(path: &str, message: impl Into<String>) -> CliError {
    CliError::Field {
        path: path.to_string(),
        message: message.into(),
    }
}

fn scalar(v: &Value, path: &str) -> Result<Scalar, CliError> {
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) => n.to_string(),
        other => return Err(field(path, format!("expected a number, found {other}"))),
    };
    parse_scalar(&text).map_err(|e| field(path, e.to_string()))
}

fn array<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a [Value], CliError> {
    let a = v
        .as_array()
        .ok_or_else(|| field(path, "expected an array"))?;
    if a.len() != len {
        return Err(field(path, format!("expected {len} entries, found {}", a.len())));
    }
    Ok(a)
}

fn curve(v: &Value, path: &str) -> Result<Curve, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| field(path, "expected an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "name" | "points" | "weights") {
            return Err(field(&format!("{path}.{key}"), "unknown field"));
        }
    }
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(field(&format!("{path}.name"), "expected a string")),
    };
    let pp = format!("{path}.points");
    let raw = obj.get("points").ok_or_else(|| field(&pp, "missing"))?;
    let raw = array(raw, &pp, 4)?;
    let mut points = Vec::with_capacity(4);
    for (i, p) in raw.iter().enumerate() {
        let at = format!("{pp}[{i}]");
        let xy = array(p, &at, 2)?;
        points.push(Point2::new(
            scalar(&xy[0], &format!("{at}[0]"))?,
            scalar(&xy[1], &format!("{at}[1]"))?,
        ));
    }
    let weights = match obj.get("weights") {
        None => std::array::from_fn(|_| int(1)),
        Some(w) => {
            let wp = format!("{path}.weights");
            let w = array(w, &wp, 4)?;
            let mut out = Vec::with_capacity(4);
            for (i, x) in w.iter().enumerate() {
                out.push(scalar(x, &format!("{wp}[{i}]"))?);
            }
            out.try_into().expect("four weights")
        }
    };
    Ok(Curve {
        name,
        polygon: ControlPolygon::new(points.try_into().expect("four points"), weights),
    })
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<CurveFile, CliError> {
        let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
        let obj = doc
            .as_object()
            .ok_or_else(|| field("$", "expected an object"))?;
        let version = obj
            .get("version")
            .ok_or_else(|| field("version", "missing"))?
            .as_u64()
            .ok_or_else(|| field("version", "expected an integer"))?;
        if version != FORMAT_VERSION {
            return Err(field("version", format!("unsupported version {version}")));
        }
        let curves = obj
            .get("curves")
            .ok_or_else(|| field("curves", "missing"))?
            .as_array()
            .ok_or_else(|| field("curves", "expected an array"))?;
        Ok(CurveFile {
            version,
            curves: curves
                .iter()
                .enumerate()
                .map(|(i, c)| curve(c, &format!("curves[{i}]")))
                .collect(),
        })
    }

    pub fn read(path: &Path) -> Result<CurveFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        CurveFile::parse(&text)
    }

    pub fn from_curves(curves: Vec<Curve>) -> CurveFile {
        CurveFile {
            version: FORMAT_VERSION,
            curves: curves.into_iter().map(Ok).collect(),
        }
    }

    /// Writes every well-formed curve back out with exact rational strings.
    pub fn to_json(&self) -> String {
        let curves: Vec<Value> = self
            .curves
            .iter()
            .filter_map(|c| c.as_ref().ok())
            .map(|c| {
                let p = &c.polygon;
                let mut v = json!({
                    "points": p.points.iter().map(|q| json!([q.x.to_string(), q.y.to_string()])).collect::<Vec<_>>(),
                    "weights": p.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                });
                if let Some(n) = &c.name {
                    v["name"] = json!(n);
                }
                v
            })
            .collect();
        let doc = json!({ "version": self.version, "curves": curves });
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratcubic::ratio;

    #[test]
    fn strings_and_numbers() {
        let f = CurveFile::parse(
            r#"{"version":1,"curves":[{"points":[[0,"0"],["1/3",1],[0.75,"1e-1"],[1,0]],"weights":[1,"2","0.5",1]}]}"#,
        )
        .unwrap();
        let c = f.curves[0].as_ref().unwrap();
        assert_eq!(c.polygon.points[1].x, ratio(1, 3));
        assert_eq!(c.polygon.points[2].x, ratio(3, 4));
        assert_eq!(c.polygon.points[2].y, ratio(1, 10));
        assert_eq!(c.polygon.weights[2], ratio(1, 2));
    }

    #[test]
    fn bad_weight_names_its_field() {
        let f = CurveFile::parse(
            r#"{"version":1,"curves":[{"points":[[0,0],[0,1],[1,1],[1,0]],"weights":[1,"1/0",1,1]}]}"#,
        )
        .unwrap();
        let e = f.curves[0].as_ref().unwrap_err().to_string();
        assert!(e.contains("curves[0].weights[1]"), "{e}");
    }

    #[test]
    fn missing_points_and_wrong_counts() {
        let f = CurveFile::parse(r#"{"version":1,"curves":[{"weights":[1,1,1,1]},{"points":[[0,0]]}]}"#).unwrap();
        assert!(f.curves[0].as_ref().unwrap_err().to_string().contains("curves[0].points"));
        assert!(f.curves[1].as_ref().unwrap_err().to_string().contains("expected 4"));
        assert!(CurveFile::parse(r#"{"version":2,"curves":[]}"#).is_err());
        assert!(CurveFile::parse("not json").is_err());
    }

    #[test]
    fn weights_default_to_one() {
        let f = CurveFile::parse(r#"{"version":1,"curves":[{"name":"sq","points":[[0,0],[0,1],[1,1],[1,0]]}]}"#)
            .unwrap();
        let c = f.curves[0].as_ref().unwrap();
        assert_eq!(c.polygon.weights, std::array::from_fn(|_| int(1)));
        assert_eq!(c.label(0), "curve 0 (sq)");
    }
}
