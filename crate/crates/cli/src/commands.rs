use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use digitop::acceptance;
use digitop::curve_space::{build_poset, count_grid_cycles, enumerate_curves};
use digitop::homotopy::{minimalize, morph};
use digitop::jordan::{is_jordan_curve, lemma_checks};
use digitop::paths::{distance, geodesics};
use digitop::{Coord, DigitalPlane, Exec, JordanCurve, PointId, Subspace};
use serde::Serialize;
use serde_json::json;

use crate::input::{bad_input, parse_coord, read_curve, read_raw_curve, PlaneArgs};

/// Digital Jordan curves on Khalimsky and Marcus-Wyse planes.
#[derive(Parser, Debug)]
#[command(name = "digitop", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Plane inspection.
    Plane {
        #[command(subcommand)]
        action: PlaneAction,
    },
    /// Lists every Jordan curve of a plane.
    Enumerate {
        #[command(flatten)]
        plane: PlaneArgs,
        #[arg(long, value_enum, default_value_t = EnumerateFormat::Count)]
        format: EnumerateFormat,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Hasse diagram of the curve space as DOT.
    Hasse {
        #[command(flatten)]
        plane: PlaneArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Validity and structural report for a curve file.
    Check { curve: PathBuf },
    /// Interior and exterior point lists.
    Interior { curve: PathBuf },
    /// ASCII picture of a curve and its interior.
    Render { curve: PathBuf },
    /// Shortest-path distance, optionally inside a curve.
    Distance(PairArgs),
    /// Every shortest arc between two points.
    Geodesics(PairArgs),
    /// Shrinks a curve down to a minimal one.
    Minimalize {
        curve: PathBuf,
        #[arg(long, value_parser = parse_coord)]
        basepoint: Option<Coord>,
    },
    /// Fence of comparable curves joining two curves.
    Morph {
        from: PathBuf,
        to: PathBuf,
        #[arg(long, value_enum)]
        render: Option<RenderFormat>,
    },
    /// Number of simple cycles in the n x n grid graph (n <= 5).
    GridCycles { n: usize },
    /// Runs the acceptance suite and prints a pass/fail table.
    Verify {
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum PlaneAction {
    /// Prints the point classification grid, top row first.
    Info {
        #[command(flatten)]
        plane: PlaneArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EnumerateFormat {
    Count,
    Json,
    Report,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RenderFormat {
    Ascii,
}

#[derive(clap::Args, Debug)]
pub struct PairArgs {
    #[command(flatten)]
    plane: PlaneArgs,
    #[arg(long, value_parser = parse_coord)]
    from: Coord,
    #[arg(long, value_parser = parse_coord)]
    to: Coord,
    /// Measure inside the points of this curve.
    #[arg(long)]
    within: Option<PathBuf>,
}

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Plane {
            action: PlaneAction::Info { plane },
        } => {
            print!("{}", plane.build()?.ascii_grid());
        }
        Command::Enumerate {
            plane,
            format,
            sequential,
        } => {
            let plane = plane.build()?;
            let curves = enumerate_curves(&plane)?;
            match format {
                EnumerateFormat::Count => print_json(&json!({ "count": curves.len() }))?,
                EnumerateFormat::Json => print_json(&build_poset(&plane, curves, exec(sequential))?.dump())?,
                EnumerateFormat::Report => print_json(&build_poset(&plane, curves, exec(sequential))?.report())?,
            }
        }
        Command::Hasse { plane, out, sequential } => {
            let plane = plane.build()?;
            let poset = build_poset(&plane, enumerate_curves(&plane)?, exec(sequential))?;
            let dot = poset.to_dot();
            match out {
                Some(path) => fs::write(&path, dot).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{dot}"),
            }
        }
        Command::Check { curve } => return check(curve),
        Command::Interior { curve } => {
            let (plane, curve) = read_curve(&curve)?;
            print_json(&curve.regions(&plane)?)?;
        }
        Command::Render { curve } => {
            let (plane, curve) = read_curve(&curve)?;
            print!("{}", curve.render(&plane)?);
        }
        Command::Distance(args) => {
            let (plane, members) = pair_space(&args)?;
            let sub = Subspace::new(plane.space(), members)?;
            let (x, y) = pair_ids(&plane, &sub, &args)?;
            print_json(&json!({ "distance": distance(&sub, x, y)? }))?;
        }
        Command::Geodesics(args) => {
            let (plane, members) = pair_space(&args)?;
            let sub = Subspace::new(plane.space(), members)?;
            let (x, y) = pair_ids(&plane, &sub, &args)?;
            let arcs: Vec<Vec<Coord>> = geodesics(&sub, x, y)?
                .arcs
                .iter()
                .map(|arc| arc.iter().map(|&id| plane.coord(id)).collect())
                .collect();
            print_json(&arcs)?;
        }
        Command::Minimalize { curve, basepoint } => {
            let (plane, curve) = read_curve(&curve)?;
            print_json(&minimalize(&plane, &curve, basepoint)?.fence)?;
        }
        Command::Morph { from, to, render } => {
            let (plane, a) = read_curve(&from)?;
            let (_, b) = read_curve(&to)?;
            let fence = morph(&plane, &a, &b)?;
            match render {
                None => print_json(&fence)?,
                Some(RenderFormat::Ascii) => {
                    let frames = fence
                        .curves()
                        .iter()
                        .map(|c| c.render(&plane))
                        .collect::<digitop::Result<Vec<String>>>()?;
                    print!("{}", frames.join("\n"));
                }
            }
        }
        Command::GridCycles { n } => {
            print_json(&json!({ "count": count_grid_cycles(n, Exec::Parallel)? }))?;
        }
        Command::Verify { sequential } => {
            let outcomes = acceptance::run_all(exec(sequential));
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.ok()).count();
            println!("{} passed, {failed} failed", outcomes.len() - failed);
            return Ok(u8::from(failed > 0));
        }
    }
    Ok(0)
}

/// Exit 0 when the curve is valid and every structural check holds, 2 when
/// the input is not a Jordan curve, 1 when a check fails.
fn check(path: PathBuf) -> Result<u8> {
    let raw = read_raw_curve(&path)?;
    let plane = DigitalPlane::new(raw.plane)?;
    for &c in &raw.points {
        plane.id(c)?;
    }
    if !is_jordan_curve(&plane, &raw.points) {
        let reason = JordanCurve::new(&plane, &raw.points)
            .err()
            .map(|e| e.to_string())
            .unwrap_or_default();
        print_json(&json!({ "valid": false, "reason": reason }))?;
        return Ok(2);
    }
    let curve = JordanCurve::new(&plane, &raw.points)?;
    let report = lemma_checks(&plane, &curve)?;
    let holds = report.all_hold();
    print_json(&json!({ "valid": true, "all_hold": holds, "report": report }))?;
    Ok(if holds { 0 } else { 1 })
}

/// The plane and the member ids the distance is measured in.
fn pair_space(args: &PairArgs) -> Result<(DigitalPlane, Vec<PointId>)> {
    match &args.within {
        Some(path) => {
            let (plane, curve) = read_curve(path)?;
            if (args.plane.plane.is_some() || args.plane.width.is_some()) && args.plane.spec()? != *plane.spec() {
                return Err(bad_input("--within curve lies on a different plane"));
            }
            let ids = curve.ids();
            Ok((plane, ids))
        }
        None => {
            let plane = args.plane.build()?;
            let ids = plane.space().points().collect();
            Ok((plane, ids))
        }
    }
}

fn pair_ids(plane: &DigitalPlane, sub: &Subspace<'_>, args: &PairArgs) -> Result<(PointId, PointId)> {
    let id = |c: Coord| -> Result<PointId> {
        let id = plane.id(c)?;
        if !sub.contains(id) {
            return Err(bad_input(format!("point {c} is not in the measured set")));
        }
        Ok(id)
    };
    Ok((id(args.from)?, id(args.to)?))
}
