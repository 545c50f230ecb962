//! `kiss4d`: kissing configurations on S³ from the command line.
//!
//! Exit status: 0 on success, 1 when the input is well formed but fails a
//! domain check (not kissing, not unit norm, impossible signature), 2 on
//! usage or parse errors.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use kiss4d_core::config::{
    antipodal_pairs, group_into_circles, irreducible_signature, signature, verify_kissing,
};
use kiss4d_core::cover::{build_cover_graph, classify_signature, enumerate_admissible_graphs};
use kiss4d_core::geometry::hopf_project;
use kiss4d_core::io::{
    emit_document, parse_document, project_orthographic, ConfigDocument, EdgeList, Plane,
};
use kiss4d_core::search::maximin_optimize;
use kiss4d_core::{CatalogId, Configuration, SearchParams, GROUPING_TOL, KISSING_TOL};

const TOL_ENV: &str = "KISS4D_TOL";

#[derive(Parser)]
#[command(
    name = "kiss4d",
    version,
    about = "Kissing configurations on S³ via the Hopf fibration"
)]
struct Cli {
    /// Kissing tolerance. Falls back to the document's own value, then
    /// KISS4D_TOL, then 1e-9.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a catalog configuration as a document.
    Catalog {
        /// 24cell, 3x6, 16x1, 6x2+4x1 or cohn-woo-22
        id: String,
        /// Emit the fibered form when the entry has one.
        #[arg(long)]
        fibered: bool,
    },
    /// Check pairwise chords ≥ 1 − tol.
    Verify { file: String },
    /// Group points into Hopf circles and print the signature.
    Signature { file: String },
    /// Signature after a generic rotation.
    Reduce {
        file: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Attach the cover graph on unpaired points to the document.
    CoverGraph { file: String },
    /// Decide whether N pairs plus n singletons can kiss.
    Classify { pairs: usize, singles: usize },
    /// List triangle-free graphs on n vertices up to isomorphism.
    Enumerate {
        n: usize,
        /// Keep regular graphs of this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Maximin search for M points.
    Search {
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        hops: Option<usize>,
    },
    /// Orthographic projection onto a coordinate plane.
    Project {
        file: String,
        #[arg(long, default_value = "x1x2")]
        plane: Plane,
        #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
        out: PlotFormat,
    },
    /// Hopf coordinates of each point (s2), or the lifted point list (s3).
    Fiber {
        file: String,
        #[arg(long, value_enum)]
        to: FiberTarget,
        /// Print angles in degrees (s2 only).
        #[arg(long)]
        degrees: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Svg,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FiberTarget {
    S2,
    S3,
}

/// Bad input: maps to exit status 2.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(InputError(msg.into()))
}

fn read_source(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_error(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn read_document(path: &str) -> Result<ConfigDocument> {
    let text = read_source(path)?;
    parse_document(&text).map_err(|e| input_error(format!("{path}: {e}")))
}

fn env_tolerance() -> Result<Option<f64>> {
    match std::env::var(TOL_ENV) {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t >= 0.0)
            .map(Some)
            .ok_or_else(|| input_error(format!("{TOL_ENV}={v} is not a non-negative number"))),
        Err(_) => Ok(None),
    }
}

struct Ctx {
    tol: Option<f64>,
}

impl Ctx {
    fn tolerance(&self, doc: Option<&ConfigDocument>) -> Result<f64> {
        if let Some(t) = self.tol {
            if !(t.is_finite() && t >= 0.0) {
                return Err(input_error(format!(
                    "--tol {t} is not a non-negative number"
                )));
            }
            return Ok(t);
        }
        if let Some(t) = doc.and_then(ConfigDocument::tolerance) {
            return Ok(t);
        }
        Ok(env_tolerance()?.unwrap_or(KISSING_TOL))
    }

    fn load(&self, path: &str) -> Result<(ConfigDocument, Configuration, f64)> {
        let doc = read_document(path)?;
        let tol = self.tolerance(Some(&doc))?;
        let c = doc
            .to_configuration()
            .with_context(|| format!("{path}: invalid configuration"))?;
        Ok((doc, c, tol))
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Ctx { tol: cli.tol };
    let mut out = String::new();
    let code = dispatch(cli.command, &ctx, &mut out)?;
    io::stdout().lock().write_all(out.as_bytes())?;
    Ok(code)
}

/// Runs one command, appending its data output to `out`.
fn dispatch(command: Command, ctx: &Ctx, out: &mut String) -> Result<ExitCode> {
    let code = match command {
        Command::Catalog { id, fibered } => {
            let id: CatalogId = id.parse().map_err(|e| input_error(format!("{e}")))?;
            let doc = match (fibered, id.fibered()) {
                (true, Some(f)) => ConfigDocument::from_fibered(&f, Some(id.as_str())),
                (true, None) => {
                    return Err(input_error(format!(
                        "catalog entry {id} has no fibered form"
                    )))
                }
                (false, _) => ConfigDocument::from_configuration(&id.build(), Some(id.as_str())),
            };
            out.push_str(&emit_document(&doc));
            ExitCode::SUCCESS
        }
        Command::Verify { file } => {
            let (_, c, tol) = ctx.load(&file)?;
            let r = verify_kissing(&c, tol);
            let _ = writeln!(out, "points: {}", c.len());
            let _ = writeln!(out, "tolerance: {tol:e}");
            let _ = writeln!(out, "kissing: {}", if r.is_kissing { "yes" } else { "no" });
            let _ = writeln!(out, "min distance: {}", r.min_distance);
            if let Some((i, j)) = r.argmin_pair {
                let _ = writeln!(out, "closest pair: {i} {j}");
            }
            let _ = writeln!(
                out,
                "antipodal pairs: {}",
                antipodal_pairs(&c, KISSING_TOL).len()
            );
            let _ = writeln!(out, "violations: {}", r.violations.len());
            for ((i, j), d) in &r.violations {
                let _ = writeln!(out, "  {i} {j} {d}");
            }
            if r.is_kissing {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Signature { file } => {
            let (_, c, _) = ctx.load(&file)?;
            let f = group_into_circles(&c, GROUPING_TOL)?;
            let _ = writeln!(out, "{}", signature(&f));
            ExitCode::SUCCESS
        }
        Command::Reduce { file, seed } => {
            let (_, c, _) = ctx.load(&file)?;
            let _ = writeln!(out, "{}", irreducible_signature(&c, seed)?);
            ExitCode::SUCCESS
        }
        Command::CoverGraph { file } => {
            let (doc, c, tol) = ctx.load(&file)?;
            let g = build_cover_graph(&c, tol)?;
            let mut doc = match doc {
                ConfigDocument::Points(_) => doc,
                ConfigDocument::Fibered(ref d) => {
                    ConfigDocument::from_configuration(&c, d.name.as_deref())
                }
            };
            if let ConfigDocument::Points(d) = &mut doc {
                d.cover_graph = Some(EdgeList::from(&g));
            }
            out.push_str(&emit_document(&doc));
            eprintln!("cover graph: {g}");
            ExitCode::SUCCESS
        }
        Command::Classify { pairs, singles } => {
            let v = classify_signature(pairs, singles)?;
            out.push_str(&v.render());
            ExitCode::SUCCESS
        }
        Command::Enumerate { n, degree } => {
            let graphs =
                enumerate_admissible_graphs(n, degree).map_err(|e| input_error(e.to_string()))?;
            for g in &graphs {
                let _ = writeln!(out, "{g}");
            }
            let _ = writeln!(out, "total {}", graphs.len());
            ExitCode::SUCCESS
        }
        Command::Search {
            points,
            restarts,
            seed,
            hops,
        } => {
            let mut p = SearchParams {
                restarts,
                seed,
                ..SearchParams::with_points(points)
            };
            if let Some(h) = hops {
                p.hops = h;
            }
            p.validate().map_err(|e| input_error(e.to_string()))?;
            let r = maximin_optimize(&p)?;
            let name = format!("search-{points}-seed-{seed}");
            out.push_str(&emit_document(&ConfigDocument::from_configuration(
                &r.configuration,
                Some(&name),
            )));
            eprintln!(
                "min distance {} (restart {})",
                r.min_distance, r.restart_index
            );
            ExitCode::SUCCESS
        }
        Command::Project {
            file,
            plane,
            out: format,
        } => {
            let (_, c, _) = ctx.load(&file)?;
            let plot = project_orthographic(&c, plane)?;
            out.push_str(&match format {
                PlotFormat::Svg => plot.to_svg(),
                PlotFormat::Csv => plot.to_csv(),
            });
            ExitCode::SUCCESS
        }
        Command::Fiber { file, to, degrees } => {
            let (doc, c, _) = ctx.load(&file)?;
            match to {
                FiberTarget::S2 => {
                    let unit = if degrees { "deg" } else { "rad" };
                    let conv = |x: f64| if degrees { x.to_degrees() } else { x };
                    let _ = writeln!(out, "index,alpha_{unit},phi_{unit},theta_{unit}");
                    for (i, p) in c.points().iter().enumerate() {
                        let base = hopf_project(p)?;
                        let theta = fiber_angle_of(p, &base);
                        let _ = writeln!(
                            out,
                            "{i},{},{},{}",
                            conv(base.alpha()),
                            conv(base.phi()),
                            conv(theta)
                        );
                    }
                }
                FiberTarget::S3 => {
                    if degrees {
                        return Err(input_error("--degrees applies to --to s2 only"));
                    }
                    out.push_str(&emit_document(&ConfigDocument::from_configuration(
                        &c,
                        doc.name(),
                    )));
                }
            }
            ExitCode::SUCCESS
        }
    };
    Ok(code)
}

/// θ with `p = lift(base, θ)`.
fn fiber_angle_of(p: &kiss4d_core::R4Point, base: &kiss4d_core::S2Point) -> f64 {
    use kiss4d_core::geometry::hopf_lift;
    use kiss4d_core::FiberAngle;
    let q = hopf_lift(base, FiberAngle::new(0.0));
    let h = p.w() * q.w().conj() + p.z() * q.z().conj();
    FiberAngle::new(h.im.atan2(h.re)).radians()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<InputError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
