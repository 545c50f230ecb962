//! The cover relation among unpaired points and the arguments built on it.
//!
//! A point `p` covers `q` when the antipode `−p` would sit closer than chord 1
//! to `q`, i.e. when `|p + q| < 1`. The relation is symmetric, and two points
//! that both cover a third cannot cover each other, so covering graphs are
//! triangle-free. The moves [`transform_t1`], [`transform_t2`] and
//! [`transform_t3`] turn a configuration with unpaired points into one with
//! more antipodal pairs; [`classify_signature`] replays those moves over every
//! admissible covering graph to rule out signatures.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::config::{add_antipode, antipodal_pairs, singletons, verify_kissing, Configuration};
use crate::geometry::{chord_s3, R4Point};
use crate::{Error, Result, KISSING_TOL};

/// Largest vertex count [`enumerate_admissible_graphs`] accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Whether placing `−p1` would break kissing with `p2`.
///
/// Requires `p1` and `p2` to kiss (chord ≥ `1 − tol`). Evaluated as
/// `|p1 + p2| < 1 − tol`, which is symmetric in its arguments.
pub fn covers(p1: &R4Point, p2: &R4Point, tol: f64) -> Result<bool> {
    let d = chord_s3(p1, p2);
    if d < 1.0 - tol {
        return Err(Error::Precondition(format!(
            "covers() needs kissing points, chord is {d}"
        )));
    }
    let sum = R4Point(std::array::from_fn(|k| p1.0[k] + p2.0[k]));
    Ok(sum.norm() < 1.0 - tol)
}

/// A simple graph whose vertices are point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoverGraph {
    vertices: Vec<usize>,
    /// Sorted, each `(a, b)` with `a < b`.
    edges: Vec<(usize, usize)>,
}

impl CoverGraph {
    pub fn new(
        vertices: Vec<usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let vset: BTreeSet<usize> = vertices.iter().copied().collect();
        if vset.len() != vertices.len() {
            return Err(Error::Precondition("repeated vertex".into()));
        }
        let mut eset = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Precondition(format!("loop at {a}")));
            }
            if !vset.contains(&a) || !vset.contains(&b) {
                return Err(Error::Precondition(format!(
                    "edge ({a}, {b}) leaves the vertex set"
                )));
            }
            if !eset.insert((a.min(b), a.max(b))) {
                return Err(Error::Precondition(format!("repeated edge ({a}, {b})")));
            }
        }
        Ok(Self {
            vertices,
            edges: eset.into_iter().collect(),
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// First triangle found, if any.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for &(a, b) in &self.edges {
            for c in self.neighbors(a) {
                if c != b && self.has_edge(b, c) {
                    let mut t = [a, b, c];
                    t.sort_unstable();
                    return Some((t[0], t[1], t[2]));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    fn from_small(g: &SmallGraph) -> Self {
        let mut edges = Vec::new();
        for a in 0..g.n {
            for b in a + 1..g.n {
                if g.adj[a] & (1 << b) != 0 {
                    edges.push((a, b));
                }
            }
        }
        Self {
            vertices: (0..g.n).collect(),
            edges,
        }
    }
}

impl fmt::Display for CoverGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{} vertices [{}]", self.vertices.len(), edges.join(" "))
    }
}

/// Cover graph on the unpaired points of a kissing configuration.
pub fn build_cover_graph(c: &Configuration, tol: f64) -> Result<CoverGraph> {
    let report = verify_kissing(c, tol);
    if !report.is_kissing {
        return Err(Error::NotKissing {
            min_distance: report.min_distance,
        });
    }
    let vertices = singletons(c, KISSING_TOL);
    let mut edges = Vec::new();
    for (k, &a) in vertices.iter().enumerate() {
        for &b in &vertices[k + 1..] {
            if covers(&c.points()[a], &c.points()[b], tol)? {
                edges.push((a, b));
            }
        }
    }
    let g = CoverGraph::new(vertices, edges)?;
    if let Some(t) = g.find_triangle() {
        return Err(Error::Inconsistency(format!(
            "cover graph has triangle {t:?}, contradicting antitransitivity"
        )));
    }
    Ok(g)
}

/// Graph on at most 8 vertices as adjacency bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct SmallGraph {
    n: usize,
    adj: [u8; MAX_ENUMERATION_VERTICES],
}

impl SmallGraph {
    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Upper-triangle adjacency bits in the vertex order `perm`.
    fn code_for(&self, perm: &[usize]) -> u32 {
        let mut code = 0u32;
        let mut bit = 0;
        for i in 0..self.n {
            let row = self.adj[perm[i]];
            for &pj in &perm[i + 1..self.n] {
                code = (code << 1) | u32::from(row >> pj & 1);
                bit += 1;
            }
        }
        debug_assert!(bit <= 28);
        code
    }

    /// Canonical code: minimum adjacency code over all vertex orders that list
    /// vertices by refinement class (degree, then sorted neighbour degrees).
    /// Those classes are isomorphism invariants, so isomorphic graphs share
    /// the code and the code determines the graph.
    fn canonical(&self) -> u32 {
        let colour = |v: usize| {
            let mut nd: Vec<u32> = (0..self.n)
                .filter(|&u| self.adj[v] >> u & 1 == 1)
                .map(|u| self.degree(u))
                .collect();
            nd.sort_unstable();
            (self.degree(v), nd)
        };
        let mut verts: Vec<(_, usize)> = (0..self.n).map(|v| (colour(v), v)).collect();
        verts.sort();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (k, (c, v)) in verts.iter().enumerate() {
            if k > 0 && verts[k - 1].0 == *c {
                classes.last_mut().expect("nonempty").push(*v);
            } else {
                classes.push(vec![*v]);
            }
        }
        let mut best = u32::MAX;
        let mut perm = Vec::with_capacity(self.n);
        search_orders(&classes, 0, &mut perm, &mut |p| {
            best = best.min(self.code_for(p))
        });
        best
    }

    fn from_code(n: usize, code: u32) -> Self {
        let mut adj = [0u8; MAX_ENUMERATION_VERTICES];
        let total = n * n.saturating_sub(1) / 2;
        let mut bit = total;
        for i in 0..n {
            for j in i + 1..n {
                bit -= 1;
                if code >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Self { n, adj }
    }
}

/// Calls `f` on every concatenation of permutations of the classes.
fn search_orders(
    classes: &[Vec<usize>],
    k: usize,
    prefix: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if k == classes.len() {
        f(prefix);
        return;
    }
    let mut class = classes[k].clone();
    permute(&mut class, 0, &mut |p| {
        let len = prefix.len();
        prefix.extend_from_slice(p);
        search_orders(classes, k + 1, prefix, f);
        prefix.truncate(len);
    });
}

fn permute(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Triangle-free graphs on `n` vertices up to isomorphism, codes ascending.
fn triangle_free_codes(n: usize) -> Vec<u32> {
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    for k in 1..n {
        // extend every graph on k vertices by a vertex joined to an independent set
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = SmallGraph::from_code(k, code);
            for subset in 0u16..(1 << k) {
                let s = subset as u8;
                let independent = (0..k).all(|v| s >> v & 1 == 0 || g.adj[v] & s == 0);
                if !independent {
                    continue;
                }
                let mut h = SmallGraph {
                    n: k + 1,
                    adj: g.adj,
                };
                h.adj[k] = s;
                for v in 0..k {
                    if s >> v & 1 == 1 {
                        h.adj[v] |= 1 << k;
                    }
                }
                next.insert(h.canonical());
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![0];
    }
    level.into_iter().collect()
}

/// Every triangle-free simple graph on `n ≤ 8` vertices, one per isomorphism
/// class, optionally restricted to graphs whose every vertex has `degree`.
///
/// Graphs come out sorted by edge count, then canonical code.
pub fn enumerate_admissible_graphs(n: usize, degree: Option<usize>) -> Result<Vec<CoverGraph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut graphs: Vec<SmallGraph> = triangle_free_codes(n)
        .into_iter()
        .map(|code| SmallGraph::from_code(n, code))
        .filter(|g| degree.is_none_or(|d| (0..n).all(|v| g.degree(v) as usize == d)))
        .collect();
    graphs.sort_by_key(|g| {
        let edges: u32 = (0..n).map(|v| g.degree(v)).sum::<u32>() / 2;
        (edges, g.canonical())
    });
    Ok(graphs.iter().map(CoverGraph::from_small).collect())
}

fn check_vertex(g: &CoverGraph, v: usize) -> Result<()> {
    if !g.vertices().contains(&v) {
        return Err(Error::Precondition(format!(
            "{v} is not a vertex of the cover graph"
        )));
    }
    Ok(())
}

fn verified(c: Configuration, what: &str) -> Result<Configuration> {
    let r = verify_kissing(&c, KISSING_TOL);
    if !r.is_kissing {
        return Err(Error::Inconsistency(format!(
            "{what} produced a non-kissing configuration (min distance {})",
            r.min_distance
        )));
    }
    Ok(c)
}

/// Unbonded singleton `v`: add its antipode.
pub fn transform_t1(c: &Configuration, g: &CoverGraph, v: usize) -> Result<Configuration> {
    check_vertex(g, v)?;
    let d = g.degree(v);
    if d != 0 {
        return Err(Error::Precondition(format!(
            "T1 needs degree 0, vertex {v} has {d}"
        )));
    }
    verified(add_antipode(c, v)?, "T1")
}

/// Singleton `v` with one bond: remove its neighbour, then add its antipode.
pub fn transform_t2(c: &Configuration, g: &CoverGraph, v: usize) -> Result<Configuration> {
    check_vertex(g, v)?;
    let nb = g.neighbors(v);
    if nb.len() != 1 {
        return Err(Error::Precondition(format!(
            "T2 needs degree 1, vertex {v} has {}",
            nb.len()
        )));
    }
    let kept_index = if nb[0] < v { v - 1 } else { v };
    let reduced = c.without(&nb);
    verified(add_antipode(&reduced, kept_index)?, "T2")
}

/// Singleton `v` bonded to exactly half of the `n` singletons: drop every
/// singleton outside `cov(v)` (including `v`) and add the antipode of every
/// singleton in `cov(v)`, leaving only antipodal pairs.
pub fn transform_t3(c: &Configuration, g: &CoverGraph, v: usize) -> Result<Configuration> {
    check_vertex(g, v)?;
    let n = g.vertex_count();
    if !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "T3 needs an even singleton count, got {n}"
        )));
    }
    let cov = g.neighbors(v);
    if cov.len() != n / 2 {
        return Err(Error::Precondition(format!(
            "T3 needs degree {} at vertex {v}, got {}",
            n / 2,
            cov.len()
        )));
    }
    let dropped: Vec<usize> = g
        .vertices()
        .iter()
        .copied()
        .filter(|u| !cov.contains(u))
        .collect();
    let kept: Vec<R4Point> = c
        .points()
        .iter()
        .enumerate()
        .filter(|(i, _)| !dropped.contains(i))
        .map(|(_, p)| *p)
        .collect();
    let anti: Vec<R4Point> = cov.iter().map(|&u| -c.points()[u]).collect();
    let result = Configuration::new(kept.into_iter().chain(anti).collect())?;
    let result = verified(result, "T3")?;
    if antipodal_pairs(&result, KISSING_TOL).len() * 2 != result.len() {
        return Err(Error::Inconsistency("T3 left unpaired points".into()));
    }
    Ok(result)
}

// ---------------------------------------------------------------------------
// Signature classification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    /// Ruled out; the chain ends in an axiom violation for every case.
    Impossible,
    /// 12×2: the 24-cell, by the uniqueness axiom.
    UniqueByAxiom,
    /// The rules do not settle it.
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Impossible => "Impossible",
            Status::UniqueByAxiom => "Unique (24-cell)",
            Status::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// Axiom: at most 24 points kiss a central sphere in four dimensions.
    KissingNumber,
    /// Axiom: the only 12×2 kissing configuration is the 24-cell.
    Uniqueness12,
    /// Dropping a singleton keeps a configuration kissing.
    Subset,
    /// Case analysis over the admissible cover graphs.
    CaseSplit,
    Case,
    T1,
    T2,
    T3,
    /// Two complementary independent classes, each completed to pairs.
    BipartiteSplit,
    /// A case no rule closes.
    Open,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::KissingNumber => "axiom:kissing-number",
            Rule::Uniqueness12 => "axiom:unique-12x2",
            Rule::Subset => "subset",
            Rule::CaseSplit => "cases",
            Rule::Case => "case",
            Rule::T1 => "T1",
            Rule::T2 => "T2",
            Rule::T3 => "T3",
            Rule::BipartiteSplit => "split",
            Rule::Open => "open",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub depth: usize,
    pub rule: Rule,
    /// `(pairs, singletons)` the step is about.
    pub state: (usize, usize),
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pairs: usize,
    pub singles: usize,
    pub status: Status,
    pub chain: Vec<Step>,
}

impl Verdict {
    /// Chain rendered one step per line, indented by depth.
    pub fn render(&self) -> String {
        let mut out = format!("{}x2+{}x1: {}\n", self.pairs, self.singles, self.status);
        for s in &self.chain {
            out.push_str(&format!(
                "{}[{}] {}\n",
                "  ".repeat(s.depth + 1),
                s.rule,
                s.detail
            ));
        }
        out
    }
}

const MAX_PAIRS: usize = 12;

struct Engine {
    memo: HashMap<(usize, usize), Option<Vec<Step>>>,
    graphs: HashMap<usize, Vec<CoverGraph>>,
}

fn step(depth: usize, rule: Rule, state: (usize, usize), detail: String) -> Step {
    Step {
        depth,
        rule,
        state,
        detail,
    }
}

fn nested(chain: &[Step], depth: usize) -> impl Iterator<Item = Step> + '_ {
    chain.iter().map(move |s| Step {
        depth: s.depth + depth,
        ..s.clone()
    })
}

fn fmt_set(vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// A balanced split of the vertices into two independent sets.
fn balanced_bipartition(g: &CoverGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 0 || !n.is_multiple_of(2) {
        return None;
    }
    let vs = g.vertices();
    let independent = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| !g.has_edge(a, b)))
    };
    // vertex 0 always in the first class
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 || mask.count_ones() as usize != n / 2 {
            continue;
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&k| mask >> k & 1 == 1);
        let a: Vec<usize> = a.into_iter().map(|k| vs[k]).collect();
        let b: Vec<usize> = b.into_iter().map(|k| vs[k]).collect();
        if independent(&a) && independent(&b) {
            return Some((a, b));
        }
    }
    None
}

impl Engine {
    fn new() -> Self {
        Self {
            memo: HashMap::new(),
            graphs: HashMap::new(),
        }
    }

    fn graphs(&mut self, n: usize) -> Vec<CoverGraph> {
        self.graphs
            .entry(n)
            .or_insert_with(|| enumerate_admissible_graphs(n, None).expect("n checked"))
            .clone()
    }

    /// A chain showing `pairs×2 + singles×1` cannot be kissing, if the rules find one.
    fn refute(&mut self, pairs: usize, singles: usize) -> Option<Vec<Step>> {
        if let Some(hit) = self.memo.get(&(pairs, singles)) {
            return hit.clone();
        }
        let result = self.refute_uncached(pairs, singles);
        self.memo.insert((pairs, singles), result.clone());
        result
    }

    fn refute_uncached(&mut self, pairs: usize, singles: usize) -> Option<Vec<Step>> {
        let state = (pairs, singles);
        let total = 2 * pairs + singles;
        if total > 24 {
            return Some(vec![step(
                0,
                Rule::KissingNumber,
                state,
                format!("{pairs}x2+{singles}x1 has {total} points, more than 24"),
            )]);
        }
        if singles == 0 {
            return None;
        }
        if let Some(sub) = self.refute(pairs, singles - 1) {
            let mut chain = vec![step(
                0,
                Rule::Subset,
                state,
                format!(
                    "dropping one singleton leaves a kissing {pairs}x2+{}x1",
                    singles - 1
                ),
            )];
            chain.extend(nested(&sub, 1));
            return Some(chain);
        }
        if singles > MAX_ENUMERATION_VERTICES {
            return None;
        }
        let graphs = self.graphs(singles);
        let mut chain = vec![step(
            0,
            Rule::CaseSplit,
            state,
            format!(
                "{} admissible cover graphs on {singles} singletons",
                graphs.len()
            ),
        )];
        for (k, g) in graphs.iter().enumerate() {
            let case = self.close_case(pairs, singles, g)?;
            chain.push(step(1, Rule::Case, state, format!("graph #{k}: {g}")));
            chain.extend(nested(&case, 2));
        }
        Some(chain)
    }

    /// A closing argument for one cover graph.
    fn close_case(&mut self, pairs: usize, singles: usize, g: &CoverGraph) -> Option<Vec<Step>> {
        let state = (pairs, singles);
        for &v in g.vertices() {
            if g.degree(v) == 0 {
                if let Some(sub) = self.refute(pairs + 1, singles - 1) {
                    let mut chain = vec![step(
                        0,
                        Rule::T1,
                        state,
                        format!(
                            "singleton {v} has no bonds: add its antipode -> {}x2+{}x1",
                            pairs + 1,
                            singles - 1
                        ),
                    )];
                    chain.extend(nested(&sub, 1));
                    return Some(chain);
                }
            }
        }
        for &v in g.vertices() {
            let nb = g.neighbors(v);
            if nb.len() == 1 {
                if let Some(sub) = self.refute(pairs + 1, singles - 2) {
                    let mut chain = vec![step(
                        0,
                        Rule::T2,
                        state,
                        format!(
                            "singleton {v} has one bond ({}): remove it, add the antipode of {v} -> {}x2+{}x1",
                            nb[0],
                            pairs + 1,
                            singles - 2
                        ),
                    )];
                    chain.extend(nested(&sub, 1));
                    return Some(chain);
                }
            }
        }
        if pairs + singles / 2 == MAX_PAIRS {
            if let Some((a, b)) = balanced_bipartition(g) {
                return Some(vec![
                    step(
                        0,
                        Rule::BipartiteSplit,
                        state,
                        format!(
                            "independent classes {} and {}: removing either and adding antipodes to the other gives two different 12x2",
                            fmt_set(&a),
                            fmt_set(&b)
                        ),
                    ),
                    step(
                        0,
                        Rule::Uniqueness12,
                        (MAX_PAIRS, 0),
                        "two different 12x2 configurations contradict uniqueness of the 24-cell".into(),
                    ),
                ]);
            }
        }
        for &v in g.vertices() {
            let k = g.degree(v);
            if k == 0 {
                continue;
            }
            let reached = pairs + k;
            let removed = singles - k;
            let t3 = step(
                0,
                Rule::T3,
                state,
                format!(
                    "singleton {v} covers {}: remove the {removed} singletons outside its cover set, add antipodes of the cover set -> {reached}x2",
                    fmt_set(&g.neighbors(v))
                ),
            );
            if reached > MAX_PAIRS {
                return Some(vec![
                    t3,
                    step(
                        0,
                        Rule::KissingNumber,
                        (reached, 0),
                        format!("{reached}x2 has {} points, more than 24", 2 * reached),
                    ),
                ]);
            }
            if reached == MAX_PAIRS {
                return Some(vec![
                    t3,
                    step(
                        0,
                        Rule::Uniqueness12,
                        (MAX_PAIRS, 0),
                        format!(
                            "the 12x2 must be the 24-cell, which has no room for the {removed} removed singleton(s)"
                        ),
                    ),
                ]);
            }
        }
        None
    }

    fn open_cases(&mut self, pairs: usize, singles: usize) -> Vec<Step> {
        let state = (pairs, singles);
        if singles > MAX_ENUMERATION_VERTICES {
            return vec![step(
                0,
                Rule::Open,
                state,
                format!(
                    "{singles} singletons exceed the {MAX_ENUMERATION_VERTICES}-vertex case analysis"
                ),
            )];
        }
        let graphs = self.graphs(singles);
        let mut chain = vec![step(
            0,
            Rule::CaseSplit,
            state,
            format!(
                "{} admissible cover graphs on {singles} singletons",
                graphs.len()
            ),
        )];
        for (k, g) in graphs.iter().enumerate() {
            if self.close_case(pairs, singles, g).is_none() {
                chain.push(step(
                    1,
                    Rule::Open,
                    state,
                    format!("graph #{k} not closed: {g}"),
                ));
            }
        }
        chain
    }
}

/// Replays the covering-graph arguments for `pairs×2 + singles×1`.
///
/// Axioms: at most 24 points kiss; every 12×2 is the 24-cell. Rules: drop a
/// singleton; T1/T2 on degree-0/degree-1 singletons; T3 on a singleton of any
/// degree `k` (keep its cover set, completed to pairs: `(pairs + k)×2`); and a
/// split into two independent halves completed separately.
pub fn classify_signature(pairs: usize, singles: usize) -> Result<Verdict> {
    if 2 * pairs + singles > 24 {
        return Err(Error::ExceedsKissingNumber { pairs, singles });
    }
    if pairs == MAX_PAIRS && singles == 0 {
        return Ok(Verdict {
            pairs,
            singles,
            status: Status::UniqueByAxiom,
            chain: vec![step(
                0,
                Rule::Uniqueness12,
                (pairs, singles),
                "the only 12x2 kissing configuration is the 24-cell".into(),
            )],
        });
    }
    let mut engine = Engine::new();
    Ok(match engine.refute(pairs, singles) {
        Some(chain) => Verdict {
            pairs,
            singles,
            status: Status::Impossible,
            chain,
        },
        None => Verdict {
            pairs,
            singles,
            status: Status::Unknown,
            chain: if singles == 0 {
                vec![]
            } else {
                engine.open_cases(pairs, singles)
            },
        },
    })
}
