//! Configuration documents and orthographic projection plots.
//!
//! Documents are single JSON objects tagged by `format`:
//!
//! ```json
//! { "format": "kiss4d-v1", "name": "24cell", "count": 24, "points": [[1.0, 0.0, 0.0, 0.0], ...] }
//! { "format": "kiss4d-fibered-v1", "count": 18,
//!   "circles": [ { "alpha": 1.5707963267948966, "phi": 0.0, "thetas": [0.0, 1.0471975511965976, ...] }, ... ] }
//! ```
//!
//! Angles are radians. A points document may carry a cover graph as an edge
//! list over point indices.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{circle_membership, Configuration, FiberCircle, FiberedConfiguration};
use crate::cover::CoverGraph;
use crate::geometry::{chord_s3, hopf_lift, hopf_project, FiberAngle, R4Point, S2Point};
use crate::GROUPING_TOL;

pub const POINTS_FORMAT: &str = "kiss4d-v1";
pub const FIBERED_FORMAT: &str = "kiss4d-fibered-v1";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: declared count {declared} but found {actual}")]
    CountMismatch {
        field: String,
        declared: usize,
        actual: usize,
    },
    #[error("field `{field}`: value is not finite")]
    NonFinite { field: String },
    #[error("field `{field}`: {message}")]
    Invalid { field: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeList {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&CoverGraph> for EdgeList {
    fn from(g: &CoverGraph) -> Self {
        Self {
            vertices: g.vertices().to_vec(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl EdgeList {
    pub fn to_graph(&self) -> crate::Result<CoverGraph> {
        CoverGraph::new(
            self.vertices.clone(),
            self.edges.iter().map(|e| (e[0], e[1])),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub count: usize,
    pub points: Vec<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover_graph: Option<EdgeList>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleEntry {
    pub alpha: f64,
    pub phi: f64,
    pub thetas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberedDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Total number of points over all circles.
    pub count: usize,
    pub circles: Vec<CircleEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "format")]
pub enum ConfigDocument {
    #[serde(rename = "kiss4d-v1")]
    Points(PointsDocument),
    #[serde(rename = "kiss4d-fibered-v1")]
    Fibered(FiberedDocument),
}

fn finite(field: impl FnOnce() -> String, v: f64) -> Result<(), DocumentError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(DocumentError::NonFinite { field: field() })
    }
}

impl ConfigDocument {
    pub fn from_configuration(c: &Configuration, name: Option<&str>) -> Self {
        ConfigDocument::Points(PointsDocument {
            name: name.map(str::to_owned),
            tolerance: None,
            count: c.len(),
            points: c.points().iter().map(R4Point::coords).collect(),
            cover_graph: None,
        })
    }

    pub fn from_fibered(f: &FiberedConfiguration, name: Option<&str>) -> Self {
        ConfigDocument::Fibered(FiberedDocument {
            name: name.map(str::to_owned),
            tolerance: None,
            count: f.point_count(),
            circles: f
                .circles
                .iter()
                .map(|c| CircleEntry {
                    alpha: c.base.alpha(),
                    phi: c.base.phi(),
                    thetas: c.angles.iter().map(FiberAngle::radians).collect(),
                })
                .collect(),
        })
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            ConfigDocument::Points(d) => d.name.as_deref(),
            ConfigDocument::Fibered(d) => d.name.as_deref(),
        }
    }

    pub fn tolerance(&self) -> Option<f64> {
        match self {
            ConfigDocument::Points(d) => d.tolerance,
            ConfigDocument::Fibered(d) => d.tolerance,
        }
    }

    /// Checks declared counts and finiteness.
    pub fn validate(&self) -> Result<(), DocumentError> {
        match self {
            ConfigDocument::Points(d) => {
                if d.count != d.points.len() {
                    return Err(DocumentError::CountMismatch {
                        field: "points".into(),
                        declared: d.count,
                        actual: d.points.len(),
                    });
                }
                for (i, p) in d.points.iter().enumerate() {
                    for (k, v) in p.iter().enumerate() {
                        finite(|| format!("points[{i}][{k}]"), *v)?;
                    }
                }
                if let Some(t) = d.tolerance {
                    finite(|| "tolerance".into(), t)?;
                }
                if let Some(g) = &d.cover_graph {
                    g.to_graph().map_err(|e| DocumentError::Invalid {
                        field: "cover_graph".into(),
                        message: e.to_string(),
                    })?;
                    if let Some(&v) = g.vertices.iter().find(|&&v| v >= d.points.len()) {
                        return Err(DocumentError::Invalid {
                            field: "cover_graph.vertices".into(),
                            message: format!("vertex {v} is not a point index"),
                        });
                    }
                }
            }
            ConfigDocument::Fibered(d) => {
                let actual: usize = d.circles.iter().map(|c| c.thetas.len()).sum();
                if d.count != actual {
                    return Err(DocumentError::CountMismatch {
                        field: "circles[*].thetas".into(),
                        declared: d.count,
                        actual,
                    });
                }
                for (i, c) in d.circles.iter().enumerate() {
                    finite(|| format!("circles[{i}].alpha"), c.alpha)?;
                    finite(|| format!("circles[{i}].phi"), c.phi)?;
                    if c.thetas.is_empty() {
                        return Err(DocumentError::Invalid {
                            field: format!("circles[{i}].thetas"),
                            message: "a circle needs at least one angle".into(),
                        });
                    }
                    for (k, t) in c.thetas.iter().enumerate() {
                        finite(|| format!("circles[{i}].thetas[{k}]"), *t)?;
                    }
                }
                if let Some(t) = d.tolerance {
                    finite(|| "tolerance".into(), t)?;
                }
            }
        }
        Ok(())
    }

    pub fn fibered(&self) -> Option<FiberedConfiguration> {
        match self {
            ConfigDocument::Points(_) => None,
            ConfigDocument::Fibered(d) => Some(FiberedConfiguration::new(
                d.circles
                    .iter()
                    .map(|c| {
                        FiberCircle::new(
                            S2Point::from_polar(c.alpha, c.phi),
                            c.thetas.iter().map(|&t| FiberAngle::new(t)).collect(),
                        )
                    })
                    .collect(),
            )),
        }
    }

    /// Point configuration; fibered documents are lifted. Enforces unit norm
    /// and distinctness.
    pub fn to_configuration(&self) -> crate::Result<Configuration> {
        match self {
            ConfigDocument::Points(d) => {
                Configuration::new(d.points.iter().map(|&p| R4Point(p)).collect())
            }
            ConfigDocument::Fibered(_) => self.fibered().expect("fibered").to_configuration(),
        }
    }
}

/// Flat mirror of both formats. Deserialized directly so that serde keeps
/// line and column positions in its errors.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format: String,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    tolerance: Option<f64>,
    count: usize,
    #[serde(default)]
    points: Option<Vec<[f64; 4]>>,
    #[serde(default)]
    circles: Option<Vec<CircleEntry>>,
    #[serde(default)]
    cover_graph: Option<EdgeList>,
}

fn missing(field: &str, format: &str) -> DocumentError {
    DocumentError::Invalid {
        field: field.into(),
        message: format!("required by format `{format}`"),
    }
}

fn not_allowed(field: &str, format: &str) -> DocumentError {
    DocumentError::Invalid {
        field: field.into(),
        message: format!("not allowed in format `{format}`"),
    }
}

pub fn parse_document(text: &str) -> Result<ConfigDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let doc = match raw.format.as_str() {
        POINTS_FORMAT => {
            if raw.circles.is_some() {
                return Err(not_allowed("circles", POINTS_FORMAT));
            }
            ConfigDocument::Points(PointsDocument {
                name: raw.name,
                tolerance: raw.tolerance,
                count: raw.count,
                points: raw.points.ok_or_else(|| missing("points", POINTS_FORMAT))?,
                cover_graph: raw.cover_graph,
            })
        }
        FIBERED_FORMAT => {
            if raw.points.is_some() {
                return Err(not_allowed("points", FIBERED_FORMAT));
            }
            if raw.cover_graph.is_some() {
                return Err(not_allowed("cover_graph", FIBERED_FORMAT));
            }
            ConfigDocument::Fibered(FiberedDocument {
                name: raw.name,
                tolerance: raw.tolerance,
                count: raw.count,
                circles: raw
                    .circles
                    .ok_or_else(|| missing("circles", FIBERED_FORMAT))?,
            })
        }
        other => {
            return Err(DocumentError::Invalid {
                field: "format".into(),
                message: format!(
                    "unknown format `{other}` (expected {POINTS_FORMAT} or {FIBERED_FORMAT})"
                ),
            })
        }
    };
    doc.validate()?;
    Ok(doc)
}

/// Pretty JSON with a trailing newline. Floats use the shortest representation
/// that parses back to the same bits.
pub fn emit_document(doc: &ConfigDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// A coordinate plane `(xᵢ, xⱼ)` of R⁴, `i < j`, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Plane(usize, usize);

impl Plane {
    pub fn new(i: usize, j: usize) -> Option<Self> {
        (i < j && j < 4).then_some(Self(i, j))
    }

    pub fn axes(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    fn project(&self, p: &R4Point) -> [f64; 2] {
        [p.0[self.0], p.0[self.1]]
    }
}

impl Default for Plane {
    fn default() -> Self {
        Self(0, 1)
    }
}

impl FromStr for Plane {
    type Err = String;

    /// Accepts `x1x2`, `x1x3`, … `x3x4`.
    fn from_str(s: &str) -> Result<Self, String> {
        let b = s.as_bytes();
        let digit = |c: u8| (b'1'..=b'4').contains(&c).then(|| usize::from(c - b'1'));
        if b.len() == 4 && b[0] == b'x' && b[2] == b'x' {
            if let (Some(i), Some(j)) = (digit(b[1]), digit(b[3])) {
                if let Some(p) = Plane::new(i, j) {
                    return Ok(p);
                }
            }
        }
        Err(format!(
            "invalid plane `{s}` (expected one of x1x2, x1x3, x1x4, x2x3, x2x4, x3x4)"
        ))
    }
}

/// Contact band for drawing nearest-neighbour edges.
pub const NEIGHBOR_BAND: (f64, f64) = (1.0 - 1e-9, 1.0 + 1e-6);

const OUTLINE_SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectionPlot {
    pub vertices: Vec<[f64; 2]>,
    /// Point indices of each circle, in fiber-angle order.
    pub circles: Vec<Vec<usize>>,
    pub circle_edges: Vec<(usize, usize)>,
    pub neighbor_edges: Vec<(usize, usize)>,
    /// Projection of each circle's full fiber.
    pub outlines: Vec<Vec<[f64; 2]>>,
}

/// Orthographic projection onto a coordinate plane, with same-circle and
/// nearest-neighbour edges.
pub fn project_orthographic(c: &Configuration, plane: Plane) -> crate::Result<ProjectionPlot> {
    let pts = c.points();
    let vertices = pts.iter().map(|p| plane.project(p)).collect();
    let mut circles = circle_membership(c, GROUPING_TOL)?;
    let mut circle_edges = Vec::new();
    let mut outlines = Vec::new();
    for members in circles.iter_mut() {
        let base = hopf_project(&pts[members[0]])?;
        let q = hopf_lift(&base, FiberAngle::new(0.0));
        let phase = |p: &R4Point| {
            let h = p.w() * q.w().conj() + p.z() * q.z().conj();
            FiberAngle::new(h.im.atan2(h.re)).radians()
        };
        members.sort_by(|&a, &b| phase(&pts[a]).total_cmp(&phase(&pts[b])));
        match members.len() {
            0 | 1 => {}
            2 => circle_edges.push((members[0].min(members[1]), members[0].max(members[1]))),
            m => {
                for k in 0..m {
                    let (a, b) = (members[k], members[(k + 1) % m]);
                    circle_edges.push((a.min(b), a.max(b)));
                }
            }
        }
        outlines.push(
            (0..=OUTLINE_SAMPLES)
                .map(|k| {
                    let t =
                        FiberAngle::new(k as f64 * std::f64::consts::TAU / OUTLINE_SAMPLES as f64);
                    plane.project(&hopf_lift(&base, t))
                })
                .collect(),
        );
    }
    let mut neighbor_edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = chord_s3(&pts[i], &pts[j]);
            if d >= NEIGHBOR_BAND.0 && d <= NEIGHBOR_BAND.1 {
                neighbor_edges.push((i, j));
            }
        }
    }
    Ok(ProjectionPlot {
        vertices,
        circles,
        circle_edges,
        neighbor_edges,
        outlines,
    })
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#e377c2", "#8c564b",
];

impl ProjectionPlot {
    pub const CSV_HEADER: &'static str = "kind,a,b,u,v";

    /// One row per vertex, edge and outline sample under [`Self::CSV_HEADER`].
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for (i, [u, v]) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "vertex,{i},,{u},{v}");
        }
        for (a, b) in &self.circle_edges {
            let _ = writeln!(out, "circle_edge,{a},{b},,");
        }
        for (a, b) in &self.neighbor_edges {
            let _ = writeln!(out, "neighbor_edge,{a},{b},,");
        }
        for (c, line) in self.outlines.iter().enumerate() {
            for (k, [u, v]) in line.iter().enumerate() {
                let _ = writeln!(out, "outline,{c},{k},{u},{v}");
            }
        }
        out
    }

    /// Two panels: circles with their fiber outlines on the left, nearest
    /// neighbours on the right.
    pub fn to_svg(&self) -> String {
        let mut circle_of = vec![0usize; self.vertices.len()];
        for (c, members) in self.circles.iter().enumerate() {
            for &m in members {
                circle_of[m] = c;
            }
        }
        let colour = |c: usize| PALETTE[c % PALETTE.len()];
        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        s.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" viewBox=\"-1.1 -1.1 4.4 2.2\">\n",
        );
        // left panel
        s.push_str("<g id=\"circles\" transform=\"scale(1,-1)\">\n");
        for line in &self.outlines {
            let pts: Vec<String> = line.iter().map(|[u, v]| format!("{u:.6},{v:.6}")).collect();
            let _ = writeln!(
                s,
                "<polyline points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.005\"/>",
                pts.join(" ")
            );
        }
        for &(a, b) in &self.circle_edges {
            let ([x1, y1], [x2, y2]) = (self.vertices[a], self.vertices[b]);
            let _ = writeln!(
                s,
                "<line x1=\"{x1:.6}\" y1=\"{y1:.6}\" x2=\"{x2:.6}\" y2=\"{y2:.6}\" stroke=\"{}\" stroke-width=\"0.01\"/>",
                colour(circle_of[a])
            );
        }
        for (i, [u, v]) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                s,
                "<circle cx=\"{u:.6}\" cy=\"{v:.6}\" r=\"0.025\" fill=\"{}\"/>",
                colour(circle_of[i])
            );
        }
        s.push_str("</g>\n");
        // right panel
        s.push_str("<g id=\"neighbors\" transform=\"translate(2.2,0) scale(1,-1)\">\n");
        for &(a, b) in &self.neighbor_edges {
            let ([x1, y1], [x2, y2]) = (self.vertices[a], self.vertices[b]);
            let _ = writeln!(
                s,
                "<line x1=\"{x1:.6}\" y1=\"{y1:.6}\" x2=\"{x2:.6}\" y2=\"{y2:.6}\" stroke=\"#333333\" stroke-width=\"0.006\"/>"
            );
        }
        for [u, v] in &self.vertices {
            let _ = writeln!(
                s,
                "<circle cx=\"{u:.6}\" cy=\"{v:.6}\" r=\"0.025\" fill=\"#000000\"/>"
            );
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}
