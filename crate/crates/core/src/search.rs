//! Numerical search for point sets on S³ with large minimum separation.
//!
//! Each restart runs two phases in ambient R⁴, re-normalizing every point after
//! each step:
//!
//! 1. Repulsion: minimize `Σ_{i<j} 1/dᵢⱼ^s` by projected gradient descent with a
//!    backtracking step, accepting only steps that do not raise the energy.
//! 2. Maximin refinement: ascend the soft minimum
//!    `−(1/β)·ln Σ exp(−β·(dᵢⱼ − d_min))`, accepting only steps that do not
//!    lower the exact minimum distance, and raising `β` when steps stall.
//!
//! After that, each restart hops: it perturbs its best state with Gaussian
//! noise, runs both phases again and keeps the result if the minimum distance
//! went up.
//!
//! Restarts run in parallel. Each derives its own seed from the master seed,
//! and the best restart is chosen by exact minimum distance with ties going to
//! the lowest restart index, so serial and parallel runs agree.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{verify_kissing, Configuration};
use crate::geometry::R4Point;
use crate::{Error, Result, KISSING_TOL};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    pub point_count: usize,
    pub restarts: usize,
    pub seed: u64,
    pub repulsion_exponent: f64,
    pub descent_steps: usize,
    /// Initial largest per-point displacement of a step.
    pub step_size: f64,
    pub maximin_refine_steps: usize,
    /// Perturb-and-reoptimize rounds per restart after the first descent.
    pub hops: usize,
    /// Standard deviation of the per-coordinate noise applied by a hop.
    pub hop_noise: f64,
    /// Record `(step, min_distance)` along the way.
    pub record_trajectory: bool,
}

impl Default for SearchParams {
    fn default() -> Self {
        Self {
            point_count: 24,
            restarts: 20,
            seed: 0,
            repulsion_exponent: 12.0,
            descent_steps: 2000,
            step_size: 0.05,
            maximin_refine_steps: 3000,
            hops: 30,
            hop_noise: 0.3,
            record_trajectory: false,
        }
    }
}

impl SearchParams {
    pub fn with_points(point_count: usize) -> Self {
        Self {
            point_count,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Precondition(format!("search parameter {what}")));
        if self.point_count < 2 {
            return bad("point_count must be at least 2");
        }
        if self.restarts < 1 {
            return bad("restarts must be at least 1");
        }
        if !(self.repulsion_exponent > 0.0 && self.repulsion_exponent.is_finite()) {
            return bad("repulsion_exponent must be positive");
        }
        if !(self.step_size > 0.0 && self.step_size.is_finite()) {
            return bad("step_size must be positive");
        }
        if !(self.hop_noise > 0.0 && self.hop_noise.is_finite()) {
            return bad("hop_noise must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub configuration: Configuration,
    /// Exact minimum pairwise chord of `configuration`.
    pub min_distance: f64,
    pub restart_index: usize,
    pub trajectory: Option<Vec<(usize, f64)>>,
}

type State = Vec<[f64; 4]>;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for restart `index` of a run seeded with `master`.
pub fn restart_seed(master: u64, index: usize) -> u64 {
    splitmix64(master ^ splitmix64(index as u64 + 1))
}

fn normalize(x: [f64; 4]) -> [f64; 4] {
    let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.map(|v| v / n)
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> State {
    (0..n)
        .map(|_| loop {
            let x: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut *rng));
            if x.iter().map(|v| v * v).sum::<f64>() > 1e-12 {
                break normalize(x);
            }
        })
        .collect()
}

fn diff(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    std::array::from_fn(|k| a[k] - b[k])
}

fn norm(a: &[f64; 4]) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn min_distance(x: &State) -> f64 {
    let mut best = 2.0f64;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            best = best.min(norm(&diff(&x[i], &x[j])));
        }
    }
    best
}

/// Riesz energy `Σ_{i<j} |xᵢ − xⱼ|^(−s)`.
pub fn repulsion_energy(x: &[[f64; 4]], s: f64) -> f64 {
    let mut e = 0.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            e += norm(&diff(&x[i], &x[j])).powf(-s);
        }
    }
    e
}

/// Ambient gradient of [`repulsion_energy`].
pub fn repulsion_gradient(x: &[[f64; 4]], s: f64) -> Vec<[f64; 4]> {
    let mut g = vec![[0.0; 4]; x.len()];
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let d = diff(&x[i], &x[j]);
            let r = norm(&d);
            let coef = -s * r.powf(-s - 2.0);
            for k in 0..4 {
                g[i][k] += coef * d[k];
                g[j][k] -= coef * d[k];
            }
        }
    }
    g
}

/// Removes the radial part of each gradient row; returns the largest row norm.
fn project_tangent(x: &State, g: &mut [[f64; 4]]) -> f64 {
    let mut gmax = 0.0f64;
    for (xi, gi) in x.iter().zip(g.iter_mut()) {
        let radial: f64 = (0..4).map(|k| xi[k] * gi[k]).sum();
        for k in 0..4 {
            gi[k] -= radial * xi[k];
        }
        gmax = gmax.max(norm(gi));
    }
    gmax
}

fn step_along(x: &State, dir: &[[f64; 4]], scale: f64) -> State {
    x.iter()
        .zip(dir)
        .map(|(xi, di)| normalize(std::array::from_fn(|k| xi[k] + scale * di[k])))
        .collect()
}

/// Phase 1. Returns the final state; energy never increases between accepted steps.
fn descend(mut x: State, p: &SearchParams, log: &mut Option<Vec<(usize, f64)>>) -> State {
    let s = p.repulsion_exponent;
    let mut energy = repulsion_energy(&x, s);
    let mut eta = p.step_size;
    for step in 0..p.descent_steps {
        let mut g = repulsion_gradient(&x, s);
        let gmax = project_tangent(&x, &mut g);
        if gmax < 1e-300 {
            break;
        }
        let mut accepted = false;
        while eta > 1e-12 {
            let trial = step_along(&x, &g, -eta / gmax);
            let e = repulsion_energy(&trial, s);
            if e <= energy {
                x = trial;
                energy = e;
                eta = (eta * 1.2).min(0.5);
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if let Some(t) = log.as_mut() {
            if step % 50 == 0 {
                t.push((step, min_distance(&x)));
            }
        }
        if !accepted {
            break;
        }
    }
    x
}

/// Gradient of the soft minimum of pairwise distances at inverse temperature `beta`.
fn soft_min_gradient(x: &State, beta: f64) -> Vec<[f64; 4]> {
    let n = x.len();
    let mut dists = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            dists.push(norm(&diff(&x[i], &x[j])));
        }
    }
    let dmin = dists.iter().copied().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = dists.iter().map(|d| (-beta * (d - dmin)).exp()).collect();
    let z: f64 = weights.iter().sum();
    let mut g = vec![[0.0; 4]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            let w = weights[k] / z;
            if w > 1e-300 {
                let d = diff(&x[i], &x[j]);
                let r = dists[k];
                for c in 0..4 {
                    g[i][c] += w * d[c] / r;
                    g[j][c] -= w * d[c] / r;
                }
            }
            k += 1;
        }
    }
    g
}

/// Phase 2. The exact minimum distance never decreases between accepted steps.
fn refine(mut x: State, p: &SearchParams, log: &mut Option<Vec<(usize, f64)>>) -> State {
    let mut current = min_distance(&x);
    let mut beta = 50.0;
    let mut eta = p.step_size * 0.1;
    for step in 0..p.maximin_refine_steps {
        let mut g = soft_min_gradient(&x, beta);
        let gmax = project_tangent(&x, &mut g);
        if gmax < 1e-300 {
            break;
        }
        let trial = step_along(&x, &g, eta / gmax);
        let m = min_distance(&trial);
        if m >= current {
            x = trial;
            current = m;
            eta = (eta * 1.2).min(0.05);
        } else {
            eta *= 0.5;
            if eta < 1e-10 {
                if beta >= 1e6 {
                    break;
                }
                beta *= 2.0;
                eta = p.step_size * 0.01;
            }
        }
        if let Some(t) = log.as_mut() {
            if step % 50 == 0 {
                t.push((p.descent_steps + step, current));
            }
        }
    }
    x
}

const MAX_INIT_RETRIES: usize = 8;

fn run_restart(p: &SearchParams, index: usize) -> Result<SearchResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(p.seed, index));
    let mut x = random_state(&mut rng, p.point_count);
    let mut tries = 0;
    while !repulsion_energy(&x, p.repulsion_exponent).is_finite() {
        tries += 1;
        if tries > MAX_INIT_RETRIES {
            return Err(Error::Search(format!(
                "restart {index}: non-finite energy after {MAX_INIT_RETRIES} resamples"
            )));
        }
        x = random_state(&mut rng, p.point_count);
    }
    let mut log = p.record_trajectory.then(Vec::new);
    let mut x = refine(descend(x, p, &mut log), p, &mut log);
    let mut best = min_distance(&x);
    for _ in 0..p.hops {
        let kicked: State = x
            .iter()
            .map(|xi| {
                normalize(std::array::from_fn(|k| {
                    let noise: f64 = StandardNormal.sample(&mut rng);
                    xi[k] + p.hop_noise * noise
                }))
            })
            .collect();
        let y = refine(descend(kicked, p, &mut None), p, &mut None);
        let m = min_distance(&y);
        if m > best {
            x = y;
            best = m;
        }
    }
    let configuration = Configuration::new(x.into_iter().map(R4Point).collect())
        .map_err(|e| Error::Search(format!("restart {index}: {e}")))?;
    let min_distance = verify_kissing(&configuration, KISSING_TOL).min_distance;
    Ok(SearchResult {
        configuration,
        min_distance,
        restart_index: index,
        trajectory: log,
    })
}

/// Runs every restart and keeps the one with the largest exact minimum distance.
pub fn maximin_optimize(params: &SearchParams) -> Result<SearchResult> {
    params.validate()?;
    let results: Vec<Result<SearchResult>> = (0..params.restarts)
        .into_par_iter()
        .map(|i| run_restart(params, i))
        .collect();
    let mut best: Option<SearchResult> = None;
    for r in results {
        let r = r?;
        if best
            .as_ref()
            .is_none_or(|b| r.min_distance > b.min_distance)
        {
            best = Some(r);
        }
    }
    Ok(best.expect("at least one restart"))
}

/// Energy terms that involve point `i`; its derivative in `x[i]` equals that
/// of the full energy.
fn point_energy(x: &[[f64; 4]], i: usize, s: f64) -> f64 {
    x.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, xj)| norm(&diff(&x[i], xj)).powf(-s))
        .sum()
}

/// Largest relative component error of the analytic repulsion gradient
/// against central finite differences (step 1e-6) at a random unit-norm state.
/// Components below 1e-8 of the largest one are compared against that floor.
pub fn gradient_check(params: &SearchParams, probe_seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(probe_seed);
    let x = random_state(&mut rng, params.point_count.max(2));
    let s = params.repulsion_exponent;
    let analytic = repulsion_gradient(&x, s);
    let scale = analytic
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let h = 1e-6;
    let mut worst = 0.0f64;
    let mut probe = x.clone();
    for i in 0..x.len() {
        for k in 0..4 {
            probe[i][k] = x[i][k] + h;
            let up = point_energy(&probe, i, s);
            probe[i][k] = x[i][k] - h;
            let down = point_energy(&probe, i, s);
            probe[i][k] = x[i][k];
            let fd = (up - down) / (2.0 * h);
            let a = analytic[i][k];
            let denom = a.abs().max(fd.abs()).max(1e-8 * scale);
            worst = worst.max((a - fd).abs() / denom);
        }
    }
    worst
}
