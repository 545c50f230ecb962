//! Configurations of contact points, their circle structure under the Hopf map,
//! and the operations that preserve or probe kissing.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::Matrix4;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::geometry::{
    chord_s2, chord_s3, fiber_distance, hopf_lift, hopf_project, FiberAngle, R4Point, S2Point,
};
use crate::{Error, Result, GROUPING_TOL, UNIT_NORM_TOL};

/// Minimum chord between two distinct points of a configuration.
pub const DUPLICATE_TOL: f64 = 1e-9;

/// An ordered set of unit vectors in R⁴.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Configuration {
    points: Vec<R4Point>,
}

impl Configuration {
    /// Validates unit norm (within [`UNIT_NORM_TOL`]) and distinctness.
    pub fn new(points: Vec<R4Point>) -> Result<Self> {
        Self::with_norm_tolerance(points, UNIT_NORM_TOL)
    }

    pub fn with_norm_tolerance(points: Vec<R4Point>, norm_tol: f64) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            p.check_unit(norm_tol).map_err(|e| match e {
                Error::NotUnitNorm { deviation, .. } => Error::NotUnitNorm {
                    index: Some(i),
                    deviation,
                },
                other => other,
            })?;
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if chord_s3(&points[i], &points[j]) <= DUPLICATE_TOL {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn points(&self) -> &[R4Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<R4Point> {
        self.points
    }

    /// Copy without the points at `indices`.
    pub fn without(&self, indices: &[usize]) -> Self {
        let points = self
            .points
            .iter()
            .enumerate()
            .filter(|(i, _)| !indices.contains(i))
            .map(|(_, p)| *p)
            .collect();
        Self { points }
    }

    /// Every pairwise chord, in `(i, j)` order with `i < j`.
    pub fn pair_distances(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        let n = self.points.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).map(move |j| ((i, j), chord_s3(&self.points[i], &self.points[j])))
        })
    }

    /// True when the point sets agree up to order within `tol`.
    pub fn same_point_set(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .points
                .iter()
                .all(|p| other.points.iter().any(|q| chord_s3(p, q) <= tol))
            && other
                .points
                .iter()
                .all(|p| self.points.iter().any(|q| chord_s3(p, q) <= tol))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub is_kissing: bool,
    /// Exact minimum chord over all pairs; 2 when there are fewer than two points.
    pub min_distance: f64,
    pub argmin_pair: Option<(usize, usize)>,
    pub violations: Vec<((usize, usize), f64)>,
}

/// Checks every pair for chord ≥ `1 − tol`.
pub fn verify_kissing(c: &Configuration, tol: f64) -> VerificationReport {
    let mut min_distance = 2.0;
    let mut argmin_pair = None;
    let mut violations = Vec::new();
    for (pair, d) in c.pair_distances() {
        if argmin_pair.is_none() || d < min_distance {
            min_distance = d;
            argmin_pair = Some(pair);
        }
        if d < 1.0 - tol {
            violations.push((pair, d));
        }
    }
    VerificationReport {
        is_kissing: violations.is_empty(),
        min_distance,
        argmin_pair,
        violations,
    }
}

/// One circle of a fibered configuration: a base point on S² and the fiber
/// angles of the configuration points over it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberCircle {
    pub base: S2Point,
    pub angles: Vec<FiberAngle>,
}

impl FiberCircle {
    pub fn new(base: S2Point, angles: Vec<FiberAngle>) -> Self {
        Self { base, angles }
    }

    pub fn lift(&self) -> impl Iterator<Item = R4Point> + '_ {
        self.angles.iter().map(move |&t| hopf_lift(&self.base, t))
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FiberedConfiguration {
    pub circles: Vec<FiberCircle>,
}

impl FiberedConfiguration {
    pub fn new(circles: Vec<FiberCircle>) -> Self {
        Self { circles }
    }

    pub fn point_count(&self) -> usize {
        self.circles.iter().map(|c| c.angles.len()).sum()
    }

    /// Lifts every circle, circle by circle, angle by angle.
    pub fn lift_points(&self) -> Vec<R4Point> {
        self.circles.iter().flat_map(|c| c.lift()).collect()
    }

    pub fn to_configuration(&self) -> Result<Configuration> {
        Configuration::new(self.lift_points())
    }

    /// `(circle, angle)` pairs in lift order.
    pub fn fiber_points(&self) -> Vec<(S2Point, FiberAngle)> {
        self.circles
            .iter()
            .flat_map(|c| c.angles.iter().map(move |&t| (c.base, t)))
            .collect()
    }

    /// Pairwise distances computed from base points and angles alone.
    pub fn pair_fiber_distances(&self) -> Vec<f64> {
        let pts = self.fiber_points();
        let mut out = Vec::with_capacity(pts.len() * pts.len().saturating_sub(1) / 2);
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                out.push(fiber_distance(&pts[i].0, pts[i].1, &pts[j].0, pts[j].1));
            }
        }
        out
    }
}

/// Indices of the points on each circle, circles in order of first appearance.
///
/// A point joins a circle when its projection lies within `tol` (S² chord) of
/// that circle's first projected point.
pub fn circle_membership(c: &Configuration, tol: f64) -> Result<Vec<Vec<usize>>> {
    let mut centers: Vec<S2Point> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, p) in c.points().iter().enumerate() {
        let s = hopf_project(p).map_err(|_| Error::NotUnitNorm {
            index: Some(i),
            deviation: p.norm_deviation(),
        })?;
        let hits: Vec<usize> = centers
            .iter()
            .enumerate()
            .filter(|(_, center)| chord_s2(center, &s) <= tol)
            .map(|(k, _)| k)
            .collect();
        match hits.as_slice() {
            [] => {
                centers.push(s);
                members.push(vec![i]);
            }
            [k] => members[*k].push(i),
            _ => return Err(Error::GroupingAmbiguity(i)),
        }
    }
    Ok(members)
}

/// Fiber phase of `p` relative to the θ = 0 point over `base`.
fn fiber_phase(p: &R4Point, base: &S2Point) -> FiberAngle {
    let q = hopf_lift(base, FiberAngle::new(0.0));
    let h = p.w() * q.w().conj() + p.z() * q.z().conj();
    FiberAngle::new(h.im.atan2(h.re))
}

/// Groups points sharing a Hopf fiber into circles.
pub fn group_into_circles(c: &Configuration, tol: f64) -> Result<FiberedConfiguration> {
    let members = circle_membership(c, tol)?;
    let circles = members
        .into_iter()
        .map(|idx| {
            let base = hopf_project(&c.points()[idx[0]]).expect("validated by membership");
            let angles = idx
                .iter()
                .map(|&i| fiber_phase(&c.points()[i], &base))
                .collect();
            FiberCircle::new(base, angles)
        })
        .collect();
    Ok(FiberedConfiguration::new(circles))
}

/// Multiset of circle sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Signature {
    /// circle size → number of circles of that size
    pub counts: BTreeMap<usize, usize>,
    pub total: usize,
}

impl Signature {
    pub fn from_counts(pairs: &[(usize, usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(size, count) in pairs {
            if count > 0 {
                *counts.entry(size).or_insert(0) += count;
            }
        }
        let total = counts.iter().map(|(s, c)| s * c).sum();
        Self { counts, total }
    }

    pub fn count_of(&self, size: usize) -> usize {
        self.counts.get(&size).copied().unwrap_or(0)
    }
}

impl fmt::Display for Signature {
    /// `6x4`, `6x2+4x1`; the empty signature prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .counts
            .iter()
            .rev()
            .map(|(size, count)| format!("{count}x{size}"))
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

pub fn signature(f: &FiberedConfiguration) -> Signature {
    let sizes: Vec<(usize, usize)> = f.circles.iter().map(|c| (c.angles.len(), 1)).collect();
    Signature::from_counts(&sizes)
}

/// Unordered index pairs `(i, j)` with `pⱼ ≈ −pᵢ`; each index used at most once.
pub fn antipodal_pairs(c: &Configuration, tol: f64) -> Vec<(usize, usize)> {
    let n = c.len();
    let mut used = vec![false; n];
    let mut pairs = Vec::new();
    for i in 0..n {
        if used[i] {
            continue;
        }
        let anti = -c.points()[i];
        if let Some(j) = (i + 1..n).find(|&j| !used[j] && chord_s3(&anti, &c.points()[j]) <= tol) {
            used[i] = true;
            used[j] = true;
            pairs.push((i, j));
        }
    }
    pairs
}

/// Indices with no antipodal partner.
pub fn singletons(c: &Configuration, tol: f64) -> Vec<usize> {
    let pairs = antipodal_pairs(c, tol);
    let mut paired = vec![false; c.len()];
    for (i, j) in pairs {
        paired[i] = true;
        paired[j] = true;
    }
    (0..c.len()).filter(|&i| !paired[i]).collect()
}

/// A proper rotation of R⁴.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation4 {
    m: [[f64; 4]; 4],
}

impl Rotation4 {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { m }
    }

    /// Accepts `m` if it is orthogonal with determinant +1 within 1e-10.
    pub fn from_matrix(m: [[f64; 4]; 4]) -> Result<Self> {
        let r = Self { m };
        let (orth, det) = (r.orthogonality_error(), r.determinant());
        if orth > 1e-10 || (det - 1.0).abs() > 1e-10 {
            return Err(Error::Precondition(format!(
                "not a rotation (|RᵀR − I| = {orth:e}, det = {det})"
            )));
        }
        Ok(r)
    }

    /// Haar-distributed rotation from a seeded Gaussian sample, orthonormalized
    /// by QR with the sign convention that makes the factorization unique.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let sample: Matrix4<f64> = Matrix4::from_fn(|_, _| StandardNormal.sample(&mut rng));
            let qr = sample.qr();
            let r = qr.r();
            if (0..4).any(|i| r[(i, i)].abs() < 1e-8) {
                continue;
            }
            let mut q = qr.q();
            for j in 0..4 {
                if r[(j, j)] < 0.0 {
                    q.column_mut(j).neg_mut();
                }
            }
            if q.determinant() < 0.0 {
                q.column_mut(0).neg_mut();
            }
            let mut m = [[0.0; 4]; 4];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = q[(i, j)];
                }
            }
            return Self { m };
        }
    }

    pub fn matrix(&self) -> [[f64; 4]; 4] {
        self.m
    }

    pub fn apply(&self, p: &R4Point) -> R4Point {
        let x = p.coords();
        R4Point(std::array::from_fn(|i| {
            (0..4).map(|j| self.m[i][j] * x[j]).sum()
        }))
    }

    /// Max-entry deviation of RᵀR from the identity.
    pub fn orthogonality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let v: f64 = (0..4).map(|k| self.m[k][i] * self.m[k][j]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }

    pub fn determinant(&self) -> f64 {
        Matrix4::from_fn(|i, j| self.m[i][j]).determinant()
    }
}

pub fn apply_rotation(c: &Configuration, r: &Rotation4) -> Configuration {
    Configuration {
        points: c.points().iter().map(|p| r.apply(p)).collect(),
    }
}

/// Seeds used for the three generic rotations behind [`irreducible_signature`].
fn rotation_seeds(seed: u64) -> [u64; 3] {
    [
        seed,
        seed ^ 0x9E37_79B9_7F4A_7C15,
        seed.wrapping_add(0xD1B5_4A32_D192_ED03),
    ]
}

/// Signature after a generic rotation, where only antipodal points share a
/// circle. The grouping is repeated for three seeds and must agree.
pub fn irreducible_signature(c: &Configuration, seed: u64) -> Result<Signature> {
    let mut found: Option<Signature> = None;
    for s in rotation_seeds(seed) {
        let rotated = apply_rotation(c, &Rotation4::random(s));
        let sig = match group_into_circles(&rotated, GROUPING_TOL) {
            Ok(f) => signature(&f),
            Err(Error::GroupingAmbiguity(_)) => return Err(Error::NonGenericRotation),
            Err(e) => return Err(e),
        };
        match &found {
            None => found = Some(sig),
            Some(prev) if *prev != sig => return Err(Error::NonGenericRotation),
            Some(_) => {}
        }
    }
    Ok(found.unwrap_or_default())
}

/// Adds the same constant to every fiber angle.
pub fn shift_all_angles(f: &FiberedConfiguration, shift: f64) -> FiberedConfiguration {
    FiberedConfiguration::new(
        f.circles
            .iter()
            .map(|c| FiberCircle::new(c.base, c.angles.iter().map(|t| t.shifted(shift)).collect()))
            .collect(),
    )
}

/// Appends `−pᵢ`. Kissing is not re-checked here.
pub fn add_antipode(c: &Configuration, i: usize) -> Result<Configuration> {
    let p = *c.points().get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        len: c.len(),
    })?;
    let anti = -p;
    if let Some(j) = c
        .points()
        .iter()
        .position(|q| chord_s3(q, &anti) <= DUPLICATE_TOL)
    {
        return Err(Error::DuplicatePoint(j, c.len()));
    }
    let mut points = c.points().to_vec();
    points.push(anti);
    Ok(Configuration { points })
}

/// Outcome of placing the antipode of an unpaired point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtensionReport {
    pub singleton: usize,
    /// The antipode kisses every point that has an antipodal partner.
    pub kisses_paired: bool,
    /// The antipode kisses every other unpaired point.
    pub kisses_singletons: bool,
    pub min_to_paired: f64,
    pub min_to_singletons: f64,
    /// Other unpaired points within chord `1 − tol` of the antipode.
    pub blocking_singletons: Vec<usize>,
}

/// Splits the kissing test for `−p_singleton` into the paired and unpaired parts.
pub fn antipode_extension_check(
    c: &Configuration,
    singleton: usize,
    tol: f64,
) -> Result<ExtensionReport> {
    if singleton >= c.len() {
        return Err(Error::IndexOutOfRange {
            index: singleton,
            len: c.len(),
        });
    }
    let report = verify_kissing(c, tol);
    if !report.is_kissing {
        return Err(Error::NotKissing {
            min_distance: report.min_distance,
        });
    }
    let pairs = antipodal_pairs(c, crate::KISSING_TOL);
    let mut paired = vec![false; c.len()];
    for &(i, j) in &pairs {
        paired[i] = true;
        paired[j] = true;
    }
    if paired[singleton] {
        return Err(Error::Precondition(format!(
            "point {singleton} has an antipodal partner"
        )));
    }
    let anti = -c.points()[singleton];
    let (mut min_to_paired, mut min_to_singletons) = (2.0f64, 2.0f64);
    let mut blocking_singletons = Vec::new();
    for (k, q) in c.points().iter().enumerate() {
        if k == singleton {
            continue;
        }
        let d = chord_s3(&anti, q);
        if paired[k] {
            min_to_paired = min_to_paired.min(d);
        } else {
            min_to_singletons = min_to_singletons.min(d);
            if d < 1.0 - tol {
                blocking_singletons.push(k);
            }
        }
    }
    Ok(ExtensionReport {
        singleton,
        kisses_paired: min_to_paired >= 1.0 - tol,
        kisses_singletons: blocking_singletons.is_empty(),
        min_to_paired,
        min_to_singletons,
        blocking_singletons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::KISSING_TOL;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn e(i: usize) -> R4Point {
        let mut x = [0.0; 4];
        x[i] = 1.0;
        R4Point(x)
    }

    /// Unit vector at angle `deg` in the x1–x2 plane.
    fn planar(deg: f64) -> R4Point {
        let r = deg.to_radians();
        R4Point::new(r.cos(), r.sin(), 0.0, 0.0)
    }

    #[test]
    fn configuration_rejects_bad_points() {
        let err = Configuration::new(vec![e(0), R4Point::new(0.5, 0.0, 0.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotUnitNorm { index: Some(1), .. }));
        assert_eq!(
            Configuration::new(vec![e(0), e(1), e(0)]).unwrap_err(),
            Error::DuplicatePoint(0, 2)
        );
    }

    #[test]
    fn verify_small_cases() {
        let one = Configuration::new(vec![e(0)]).unwrap();
        let r = verify_kissing(&one, KISSING_TOL);
        assert!(r.is_kissing);
        assert_eq!(r.min_distance, 2.0);
        assert_eq!(r.argmin_pair, None);

        // chord 0.5 ⇔ angle 2·asin(1/4)
        let deg = (2.0 * 0.25f64.asin()).to_degrees();
        let two = Configuration::new(vec![planar(0.0), planar(deg)]).unwrap();
        let r = verify_kissing(&two, KISSING_TOL);
        assert!(!r.is_kissing);
        assert_eq!(r.violations.len(), 1);
        assert!((r.min_distance - 0.5).abs() < 1e-12);
        assert_eq!(r.argmin_pair, Some((0, 1)));
    }

    #[test]
    fn kissing_tolerance_boundary() {
        let c = Configuration::new(vec![planar(0.0), planar(60.0)]).unwrap();
        assert!(verify_kissing(&c, KISSING_TOL).is_kissing);
        let c = Configuration::new(vec![planar(0.0), planar(59.9)]).unwrap();
        assert!(!verify_kissing(&c, KISSING_TOL).is_kissing);
    }

    #[test]
    fn single_point_groups_into_one_circle() {
        let c = Configuration::new(vec![planar(37.0)]).unwrap();
        let f = group_into_circles(&c, GROUPING_TOL).unwrap();
        assert_eq!(signature(&f), Signature::from_counts(&[(1, 1)]));
        let back = f.lift_points();
        assert!(chord_s3(&back[0], &c.points()[0]) < 1e-12);
    }

    #[test]
    fn grouping_recovers_angles() {
        let base = S2Point::from_polar(1.2, 4.0);
        let f = FiberedConfiguration::new(vec![FiberCircle::new(
            base,
            vec![
                FiberAngle::new(0.3),
                FiberAngle::new(0.3 + FRAC_PI_2),
                FiberAngle::new(PI),
            ],
        )]);
        let c = f.to_configuration().unwrap();
        let g = group_into_circles(&c, GROUPING_TOL).unwrap();
        assert_eq!(g.circles.len(), 1);
        for (a, b) in f.circles[0].angles.iter().zip(&g.circles[0].angles) {
            assert!((a.radians() - b.radians()).abs() < 1e-12);
        }
    }

    #[test]
    fn grouping_ambiguity_is_reported() {
        // three projections on a line: 0 and 2 are 1.6 tol apart, 1 sits between
        let tol = 1e-3;
        let mk = |alpha: f64| hopf_lift(&S2Point::from_polar(alpha, 0.0), FiberAngle::new(0.0));
        let c =
            Configuration::new(vec![mk(1.0), mk(1.0 + 1.6 * tol), mk(1.0 + 0.8 * tol)]).unwrap();
        assert_eq!(
            group_into_circles(&c, tol),
            Err(Error::GroupingAmbiguity(2))
        );
    }

    #[test]
    fn signature_display() {
        assert_eq!(Signature::from_counts(&[(4, 6)]).to_string(), "6x4");
        assert_eq!(
            Signature::from_counts(&[(2, 6), (1, 4)]).to_string(),
            "6x2+4x1"
        );
        assert_eq!(Signature::default().to_string(), "0");
        assert_eq!(Signature::from_counts(&[(6, 1), (2, 8)]).total, 22);
        assert_eq!(signature(&FiberedConfiguration::default()).total, 0);
    }

    #[test]
    fn antipodal_pairs_basic() {
        let c = Configuration::new(vec![e(0), e(1), -e(0), planar(45.0)]).unwrap();
        assert_eq!(antipodal_pairs(&c, 1e-9), vec![(0, 2)]);
        assert_eq!(singletons(&c, 1e-9), vec![1, 3]);
    }

    #[test]
    fn random_rotation_properties() {
        let r1 = Rotation4::random(1);
        assert!(r1.orthogonality_error() < 1e-10);
        assert!((r1.determinant() - 1.0).abs() < 1e-10);
        assert_eq!(r1, Rotation4::random(1));
        let r2 = Rotation4::random(2);
        let diff = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| (r1.matrix()[i][j] - r2.matrix()[i][j]).abs())
            .fold(0.0, f64::max);
        assert!(diff > 1e-3);
        assert!(Rotation4::from_matrix(r1.matrix()).is_ok());
        let mut bad = r1.matrix();
        bad[0] = bad[0].map(|v| -v);
        assert!(Rotation4::from_matrix(bad).is_err());
    }

    #[test]
    fn identity_rotation_is_noop() {
        let c = Configuration::new(vec![e(0), planar(70.0)]).unwrap();
        assert_eq!(apply_rotation(&c, &Rotation4::identity()), c);
    }

    #[test]
    fn rotation_keeps_antipodes() {
        let p = R4Point::normalized([0.3, -0.1, 0.7, 0.2]).unwrap();
        let c = Configuration::new(vec![p, -p]).unwrap();
        for seed in 0..20 {
            let rc = apply_rotation(&c, &Rotation4::random(seed));
            assert_eq!(antipodal_pairs(&rc, 1e-9), vec![(0, 1)]);
        }
    }

    #[test]
    fn shift_by_zero_and_full_turn() {
        let f = FiberedConfiguration::new(vec![FiberCircle::new(
            S2Point::from_polar(0.4, 0.1),
            vec![FiberAngle::new(0.0), FiberAngle::new(FRAC_PI_3 * 2.0)],
        )]);
        assert_eq!(shift_all_angles(&f, 0.0), f);
        let g = shift_all_angles(&f, std::f64::consts::TAU);
        for (a, b) in f.lift_points().iter().zip(g.lift_points().iter()) {
            assert!(chord_s3(a, b) < 1e-12);
        }
    }

    #[test]
    fn add_antipode_cases() {
        let c = Configuration::new(vec![planar(10.0)]).unwrap();
        let d = add_antipode(&c, 0).unwrap();
        assert_eq!(d.len(), 2);
        assert!((chord_s3(&d.points()[0], &d.points()[1]) - 2.0).abs() < 1e-15);
        assert!(verify_kissing(&d, KISSING_TOL).is_kissing);
        assert!(matches!(
            add_antipode(&d, 0),
            Err(Error::DuplicatePoint(1, 2))
        ));
        assert_eq!(
            add_antipode(&c, 3),
            Err(Error::IndexOutOfRange { index: 3, len: 1 })
        );
    }

    #[test]
    fn extension_check_splits_paired_and_unpaired() {
        // Two unpaired points on one circle with −p₁ at chord 0.9 from p₂:
        // chord(−p₁, p₂) = 2·cos(Δθ/2) on a shared fiber.
        let base = S2Point::from_polar(0.9, 2.0);
        let gap = 2.0 * 0.45f64.acos();
        let p1 = hopf_lift(&base, FiberAngle::new(0.0));
        let p2 = hopf_lift(&base, FiberAngle::new(gap));
        let c = Configuration::new(vec![p1, p2]).unwrap();
        assert!((chord_s3(&-p1, &p2) - 0.9).abs() < 1e-12);
        let r = antipode_extension_check(&c, 0, KISSING_TOL).unwrap();
        assert!(r.kisses_paired);
        assert!(!r.kisses_singletons);
        assert_eq!(r.blocking_singletons, vec![1]);
        assert!((r.min_to_singletons - 0.9).abs() < 1e-12);
    }

    #[test]
    fn extension_check_preconditions() {
        let bad = Configuration::new(vec![planar(0.0), planar(30.0)]).unwrap();
        assert!(matches!(
            antipode_extension_check(&bad, 0, KISSING_TOL),
            Err(Error::NotKissing { .. })
        ));
        let paired = Configuration::new(vec![e(0), -e(0), e(1)]).unwrap();
        assert!(matches!(
            antipode_extension_check(&paired, 0, KISSING_TOL),
            Err(Error::Precondition(_))
        ));
        assert!(
            antipode_extension_check(&paired, 2, KISSING_TOL)
                .unwrap()
                .kisses_paired
        );
    }
}
