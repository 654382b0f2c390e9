//! Configuration files and built-in named configurations.
//!
//! A configuration file is a JSON document
//! `{"points": [{"x": ["1","0"], "y": ["1","1/2"], "m": 2}, ...]}`
//! where every coordinate is a decimal integer or `p/q` rational string,
//! arbitrary precision.

use fatpoints_core::geometry::{make_config, normalize_point, FatPointConfig};
use fatpoints_core::presets;
use fatpoints_core::Scalar;
use num::bigint::BigInt;
use num::rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct ConfigFile {
    pub points: Vec<PointEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PointEntry {
    pub x: [String; 2],
    pub y: [String; 2],
    pub m: u32,
}

/// Parse a decimal integer or "p/q" string into an exact rational scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar, String> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("invalid integer {t:?}: {e}"))
    };
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_int(num)?;
        let den = parse_int(den)?;
        if den == BigInt::from(0) {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Scalar::from_rational(BigRational::new(num, den)))
    } else {
        Ok(Scalar::from_rational(BigRational::from_integer(parse_int(
            s,
        )?)))
    }
}

fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<ConfigFile, String> {
        serde_json::from_str(text).map_err(|e| format!("malformed config file: {e}"))
    }

    pub fn to_config(&self) -> Result<FatPointConfig, String> {
        let mut points = Vec::with_capacity(self.points.len());
        let mut mults = Vec::with_capacity(self.points.len());
        for (idx, entry) in self.points.iter().enumerate() {
            let field = |what: &str, r: Result<Scalar, String>| {
                r.map_err(|e| format!("point {idx}, field {what}: {e}"))
            };
            let p = normalize_point(
                (
                    field("x[0]", parse_scalar(&entry.x[0]))?,
                    field("x[1]", parse_scalar(&entry.x[1]))?,
                ),
                (
                    field("y[0]", parse_scalar(&entry.y[0]))?,
                    field("y[1]", parse_scalar(&entry.y[1]))?,
                ),
            )
            .map_err(|e| format!("point {idx}: {e}"))?;
            points.push(p);
            mults.push(entry.m);
        }
        make_config(points, mults).map_err(|e| e.to_string())
    }

    pub fn from_config(z: &FatPointConfig) -> ConfigFile {
        ConfigFile {
            points: z
                .iter()
                .map(|(p, m)| PointEntry {
                    x: [scalar_string(p.x.u()), scalar_string(p.x.v())],
                    y: [scalar_string(p.y.u()), scalar_string(p.y.v())],
                    m,
                })
                .collect(),
        }
    }
}

/// Resolve a --config argument: a built-in name first, then a file path.
///
/// Built-in names: `example-2.9`, `example-3.final`, `grid-A-B`,
/// `grid-minus-point-A`.
pub fn resolve_config(arg: &str) -> Result<FatPointConfig, String> {
    if let Some(cfg) = named_config(arg)? {
        return Ok(cfg);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| format!("cannot read config file {arg:?}: {e}"))?;
    ConfigFile::parse(&text)?.to_config()
}

fn named_config(name: &str) -> Result<Option<FatPointConfig>, String> {
    match name {
        "example-2.9" => return Ok(Some(presets::staircase_four())),
        "example-3.final" => return Ok(Some(presets::zigzag_six())),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("grid-minus-point-") {
        let a: u32 = rest
            .parse()
            .map_err(|_| format!("invalid grid size in {name:?}"))?;
        if a < 2 {
            return Err(format!("grid-minus-point needs a >= 2, got {a}"));
        }
        return Ok(Some(presets::grid_minus_point_config(a)));
    }
    if let Some(rest) = name.strip_prefix("grid-") {
        if let Some((a, b)) = rest.split_once('-') {
            if let (Ok(a), Ok(b)) = (a.parse::<u32>(), b.parse::<u32>()) {
                if a == 0 || b == 0 {
                    return Err("grid sizes must be positive".into());
                }
                return Ok(Some(presets::grid_config(a, b)));
            }
        }
        return Err(format!("invalid grid name {name:?}, expected grid-A-B"));
    }
    Ok(None)
}
