//! Exact convex realizations: open intervals on the line and closed segments
//! in the plane, the codes they realize, and canonical forms read off a
//! cover.

mod intervals;
mod rational;
mod segments;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::code::Code;
use crate::error::{Error, Result};

pub use intervals::{
    cc_m_intervals, cf_from_intervals, code_of_intervals, Ambient, Interval, IntervalCover,
    CF_FROM_INTERVALS_MAX,
};
pub use rational::{format_rational, int, parse_rational, ratio, Rational};
pub use segments::{code_of_segments, cr_k_polygon, Point, Segment, SegmentCover};

/// A cover of either kind, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cover {
    Intervals(IntervalCover),
    Segments(SegmentCover),
}

impl Cover {
    pub fn code(&self) -> Code {
        match self {
            Cover::Intervals(u) => code_of_intervals(u),
            Cover::Segments(u) => code_of_segments(u),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Cover::Intervals(u) => u.n(),
            Cover::Segments(u) => u.k(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CoverJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidCover(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json(&self) -> CoverJson {
        match self {
            Cover::Intervals(u) => CoverJson {
                kind: "intervals".into(),
                ambient: match u.ambient() {
                    Ambient::WholeLine => "line".into(),
                    Ambient::Union => "union".into(),
                },
                sets: u
                    .intervals()
                    .iter()
                    .map(|iv| Value::from(vec![format_rational(iv.lo()), format_rational(iv.hi())]))
                    .collect(),
            },
            Cover::Segments(u) => CoverJson {
                kind: "segments".into(),
                ambient: "union".into(),
                sets: u
                    .segments()
                    .iter()
                    .map(|s| {
                        let p = |p: &Point| {
                            Value::from(vec![format_rational(&p.x), format_rational(&p.y)])
                        };
                        Value::from(vec![p(s.a()), p(s.b())])
                    })
                    .collect(),
            },
        }
    }
}

/// `{"kind": "intervals"|"segments", "ambient": "line"|"union", "sets": [...]}`
/// with rationals written as `"p/q"` strings (plain JSON integers are also
/// accepted). Interval sets are `[a, b]`; segment sets are `[[x, y], [x, y]]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverJson {
    pub kind: String,
    #[serde(default = "default_ambient")]
    pub ambient: String,
    pub sets: Vec<Value>,
}

fn default_ambient() -> String {
    "union".into()
}

fn rational_of(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(int(n.as_i64().unwrap())),
        _ => Err(Error::InvalidCover(format!("expected a rational, got {v}"))),
    }
}

fn pair_of(v: &Value) -> Result<(&Value, &Value)> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok((a, b)),
        _ => Err(Error::InvalidCover(format!("expected a pair, got {v}"))),
    }
}

impl TryFrom<CoverJson> for Cover {
    type Error = Error;

    fn try_from(raw: CoverJson) -> Result<Self> {
        match raw.kind.as_str() {
            "intervals" => {
                let ambient = match raw.ambient.as_str() {
                    "line" => Ambient::WholeLine,
                    "union" => Ambient::Union,
                    other => return Err(Error::InvalidCover(format!("unknown ambient {other:?}"))),
                };
                let intervals = raw
                    .sets
                    .iter()
                    .map(|s| {
                        let (a, b) = pair_of(s)?;
                        Interval::new(rational_of(a)?, rational_of(b)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Cover::Intervals(IntervalCover::new(intervals, ambient)?))
            }
            "segments" => {
                if raw.ambient != "union" {
                    return Err(Error::InvalidCover(
                        "segment covers use the union as ambient".into(),
                    ));
                }
                let point = |v: &Value| -> Result<Point> {
                    let (x, y) = pair_of(v)?;
                    Ok(Point::new(rational_of(x)?, rational_of(y)?))
                };
                let ends = raw
                    .sets
                    .iter()
                    .map(|s| {
                        let (a, b) = pair_of(s)?;
                        Ok((point(a)?, point(b)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Cover::Segments(SegmentCover::new(ends)?))
            }
            other => Err(Error::InvalidCover(format!("unknown cover kind {other:?}"))),
        }
    }
}
