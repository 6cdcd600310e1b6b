//! Plane and curve inputs shared by the subcommands.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use clap::Args;
use digitop::{Coord, DigitalPlane, JordanCurve, PlaneSpec, Topology};

/// Marks an error caused by the caller's input (exit code 2).
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn bad_input(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

/// A plane given either as JSON (file path or inline text) or by flags.
#[derive(Args, Debug, Clone)]
pub struct PlaneArgs {
    /// Plane JSON, inline or as a file path.
    #[arg(long, alias = "plane-file", conflicts_with_all = ["width", "height"])]
    pub plane: Option<String>,
    #[arg(long)]
    pub width: Option<usize>,
    #[arg(long)]
    pub height: Option<usize>,
    #[arg(long, default_value = "khalimsky")]
    pub topology: Topology,
    /// Parity of closed columns.
    #[arg(long, default_value_t = 0)]
    pub x_parity: u8,
    /// Parity of closed rows.
    #[arg(long, default_value_t = 0)]
    pub y_parity: u8,
    /// Parity of `i + j` at closed Marcus-Wyse points.
    #[arg(long, default_value_t = 0)]
    pub mw_parity: u8,
}

impl PlaneArgs {
    pub fn spec(&self) -> Result<PlaneSpec> {
        if let Some(src) = &self.plane {
            return parse_json(&read_source(src)?, "plane");
        }
        let (Some(width), Some(height)) = (self.width, self.height) else {
            return Err(bad_input("give --plane or both --width and --height"));
        };
        Ok(PlaneSpec {
            width,
            height,
            topology: self.topology,
            x_closed_parity: self.x_parity,
            y_closed_parity: self.y_parity,
            mw_closed_parity: self.mw_parity,
        })
    }

    pub fn build(&self) -> Result<DigitalPlane> {
        Ok(DigitalPlane::new(self.spec()?)?)
    }
}

/// Inline JSON when the text starts with `{`, otherwise a file path.
fn read_source(src: &str) -> Result<String> {
    if src.trim_start().starts_with('{') {
        Ok(src.to_owned())
    } else {
        fs::read_to_string(src).with_context(|| format!("reading {src}"))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| bad_input(format!("malformed {what} JSON: {e}")))
}

/// Raw curve file, before the Jordan curve check.
#[derive(serde::Deserialize)]
pub struct RawCurve {
    pub plane: PlaneSpec,
    pub points: Vec<Coord>,
}

pub fn read_raw_curve(path: &Path) -> Result<RawCurve> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_json(&text, "curve")
}

/// Loads a curve file and checks it is a Jordan curve of its plane.
pub fn read_curve(path: &Path) -> Result<(DigitalPlane, JordanCurve)> {
    let raw = read_raw_curve(path)?;
    let plane = DigitalPlane::new(raw.plane)?;
    let curve = JordanCurve::new(&plane, &raw.points)?;
    Ok((plane, curve))
}

/// Parses `i,j`.
pub fn parse_coord(s: &str) -> std::result::Result<Coord, String> {
    let (i, j) = s.split_once(',').ok_or_else(|| format!("expected i,j, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<i32>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Coord(num(i)?, num(j)?))
}
