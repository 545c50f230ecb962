//! Hopf projection and lift, chord distances and the fiber-distance formula.
//!
//! Complex-pair convention, used everywhere in the crate:
//! `z = x1 + i·x2`, `w = x3 + i·x4`. The projection is
//! `(w, z) ↦ (a, t) = (2·w·z̄, |z|² − |w|²)` and the fiber over a base point
//! `(α, φ)` is `θ ↦ (e^{iθ}·sin(α/2)·e^{iφ}, e^{iθ}·cos(α/2))`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::Neg;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result, PROJECTION_NORM_TOL};

/// A point of R⁴, normally on the unit sphere S³.
///
/// The type does not enforce unit norm so that raw input can be carried to the
/// place where it is validated; see [`R4Point::check_unit`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct R4Point(pub [f64; 4]);

impl R4Point {
    pub const fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self([x1, x2, x3, x4])
    }

    /// Builds `(w, z)` in the crate's complex-pair convention.
    pub fn from_complex_pair(w: Complex64, z: Complex64) -> Self {
        Self([z.re, z.im, w.re, w.im])
    }

    /// Scales `x` to unit length. Returns `None` for the zero vector.
    pub fn normalized(x: [f64; 4]) -> Option<Self> {
        let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        (n > 0.0 && n.is_finite()).then(|| Self(x.map(|v| v / n)))
    }

    pub fn coords(&self) -> [f64; 4] {
        self.0
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.0[0], self.0[1])
    }

    pub fn w(&self) -> Complex64 {
        Complex64::new(self.0[2], self.0[3])
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_deviation(&self) -> f64 {
        (self.norm() - 1.0).abs()
    }

    pub fn check_unit(&self, tol: f64) -> Result<()> {
        let deviation = self.norm_deviation();
        if deviation > tol || !deviation.is_finite() {
            return Err(Error::NotUnitNorm {
                index: None,
                deviation,
            });
        }
        Ok(())
    }
}

impl Neg for R4Point {
    type Output = Self;

    fn neg(self) -> Self {
        Self(self.0.map(|v| -v))
    }
}

/// A point of S² in polar form: `alpha` ∈ [0, π] from the north pole,
/// `phi` ∈ [0, 2π) azimuth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct S2Point {
    alpha: f64,
    phi: f64,
}

impl S2Point {
    pub const NORTH: Self = Self {
        alpha: 0.0,
        phi: 0.0,
    };
    pub const SOUTH: Self = Self {
        alpha: PI,
        phi: 0.0,
    };

    /// Canonicalizes arbitrary polar angles onto `alpha ∈ [0, π]`, `phi ∈ [0, 2π)`.
    pub fn from_polar(alpha: f64, phi: f64) -> Self {
        let mut alpha = alpha.rem_euclid(TAU);
        let mut phi = phi;
        if alpha > PI {
            alpha = TAU - alpha;
            phi += PI;
        }
        Self {
            alpha,
            phi: wrap_tau(phi),
        }
    }

    /// From the complex-real view `(a, t)` with `|a|² + t² = 1`.
    pub fn from_complex_real(a: Complex64, t: f64) -> Self {
        let alpha = a.norm().atan2(t);
        let phi = if a.norm() == 0.0 {
            0.0
        } else {
            a.im.atan2(a.re)
        };
        Self::from_polar(alpha, phi)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `(a, t) = (sin α·e^{iφ}, cos α)`.
    pub fn complex_real(&self) -> (Complex64, f64) {
        (
            Complex64::from_polar(self.alpha.sin(), self.phi),
            self.alpha.cos(),
        )
    }

    /// Embedding in R³ as `(Re a, Im a, t)`.
    pub fn to_r3(&self) -> [f64; 3] {
        let (a, t) = self.complex_real();
        [a.re, a.im, t]
    }

    pub fn antipode(&self) -> Self {
        Self::from_polar(PI - self.alpha, self.phi + PI)
    }
}

/// Position along a Hopf fiber, kept modulo 2π in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiberAngle(f64);

impl FiberAngle {
    pub fn new(theta: f64) -> Self {
        Self(wrap_tau(theta))
    }

    pub fn from_degrees(deg: f64) -> Self {
        Self::new(deg.to_radians())
    }

    pub fn radians(&self) -> f64 {
        self.0
    }

    pub fn shifted(&self, by: f64) -> Self {
        Self::new(self.0 + by)
    }
}

impl fmt::Display for FiberAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The fiber offset Φᵢⱼ between two circles, in `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiOffset {
    value: f64,
    cos: f64,
    sin: f64,
}

impl PhiOffset {
    pub fn value(&self) -> f64 {
        self.value
    }

    /// The normalized `(cos Φ, sin Φ)` pair the offset was built from.
    pub fn cos_sin(&self) -> (f64, f64) {
        (self.cos, self.sin)
    }
}

/// Wraps into `[0, 2π)`.
pub fn wrap_tau(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Wraps into `(-π, π]`.
pub fn wrap_pi(x: f64) -> f64 {
    let r = wrap_tau(x);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Hopf projection S³ → S².
pub fn hopf_project(p: &R4Point) -> Result<S2Point> {
    p.check_unit(PROJECTION_NORM_TOL)?;
    let (w, z) = (p.w(), p.z());
    let a = 2.0 * w * z.conj();
    let t = z.norm_sqr() - w.norm_sqr();
    Ok(S2Point::from_complex_real(a, t))
}

/// Point at fiber angle `theta` over the circle `c`.
///
/// Uses the half-angle form, which stays regular at the south pole where the
/// `(a, t)` form divides by `√(1 + t) = 0`.
pub fn hopf_lift(c: &S2Point, theta: FiberAngle) -> R4Point {
    let half = c.alpha / 2.0;
    let rot = Complex64::from_polar(1.0, theta.0);
    let w = rot * Complex64::from_polar(half.sin(), c.phi);
    let z = rot * half.cos();
    R4Point::from_complex_pair(w, z)
}

/// Euclidean chord between two points of S², in `[0, 2]`.
pub fn chord_s2(ci: &S2Point, cj: &S2Point) -> f64 {
    let (a, b) = (ci.to_r3(), cj.to_r3());
    let d = (0..3).map(|k| (a[k] - b[k]).powi(2)).sum::<f64>().sqrt();
    d.min(2.0)
}

/// Euclidean chord between two points of R⁴.
pub fn chord_s3(p: &R4Point, q: &R4Point) -> f64 {
    p.0.iter()
        .zip(q.0.iter())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Unnormalized `(cos Φ, sin Φ)` components; their common scale is `√(4 − d₂²)/2`.
fn offset_components(ci: &S2Point, cj: &S2Point) -> (f64, f64) {
    let (si, co_i) = (ci.alpha / 2.0).sin_cos();
    let (sj, co_j) = (cj.alpha / 2.0).sin_cos();
    let dphi = cj.phi - ci.phi;
    let re = dphi.cos() * si * sj + co_i * co_j;
    let im = dphi.sin() * si * sj;
    (re, im)
}

/// The fiber offset Φᵢⱼ between circles `ci` and `cj`.
pub fn phi_offset(ci: &S2Point, cj: &S2Point) -> Result<PhiOffset> {
    let d2 = chord_s2(ci, cj);
    let scale = (4.0 - d2 * d2).max(0.0).sqrt();
    let (re, im) = offset_components(ci, cj);
    // re² + im² = (4 − d₂²)/4, so both vanish together at d₂ = 2.
    let modulus = re.hypot(im);
    if scale < 1e-12 || modulus < 1e-12 {
        return Err(Error::UndefinedOffset);
    }
    let mut value = im.atan2(re);
    if value <= -PI {
        value = PI;
    }
    Ok(PhiOffset {
        value,
        cos: 2.0 * re / scale,
        sin: 2.0 * im / scale,
    })
}

/// Chord distance on S³ between `(ci, ti)` and `(cj, tj)` from base-point data:
/// `d₃² = 2 − √(4 − d₂²)·cos(θⱼ − θᵢ + Φᵢⱼ)`.
///
/// Antipodal base circles fall back to the direct lift.
pub fn fiber_distance(ci: &S2Point, ti: FiberAngle, cj: &S2Point, tj: FiberAngle) -> f64 {
    match phi_offset(ci, cj) {
        Ok(offset) => {
            let d2 = chord_s2(ci, cj);
            let amp = (4.0 - d2 * d2).max(0.0).sqrt();
            let sq = 2.0 - amp * (tj.0 - ti.0 + offset.value).cos();
            sq.max(0.0).sqrt()
        }
        Err(_) => chord_s3(&hopf_lift(ci, ti), &hopf_lift(cj, tj)),
    }
}

/// Minimum fiber separation `|θⱼ − θᵢ + Φᵢⱼ|` for kissing between circles at
/// chord `d2`. `None` means every pair of points on the two circles kisses.
pub fn theta_min(d2: f64) -> Result<Option<f64>> {
    if !(0.0..=2.0).contains(&d2) {
        return Err(Error::OutOfRange {
            name: "d2",
            value: d2,
            lo: 0.0,
            hi: 2.0,
        });
    }
    if d2 > 3f64.sqrt() {
        return Ok(None);
    }
    let arg = 1.0 / (4.0 - d2 * d2).sqrt();
    Ok(Some(arg.min(1.0).acos()))
}

/// Largest S² chord between the circles of two S³ points at chord `d3`.
pub fn d2_max(d3: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&d3) {
        return Err(Error::OutOfRange {
            name: "d3",
            value: d3,
            lo: 0.0,
            hi: 2.0,
        });
    }
    let u = d3 * d3 - 2.0;
    Ok((4.0 - u * u).max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, SQRT_2};

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn project_poles_and_equator() {
        let north = hopf_project(&R4Point::new(1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_close(chord_s2(&north, &S2Point::NORTH), 0.0, 1e-15);

        let south = hopf_project(&R4Point::new(0.0, 0.0, 1.0, 0.0)).unwrap();
        assert_close(chord_s2(&south, &S2Point::SOUTH), 0.0, 1e-15);

        let eq = hopf_project(&R4Point::new(FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0)).unwrap();
        let (a, t) = eq.complex_real();
        assert_close(a.re, 1.0, 1e-15);
        assert_close(a.im, 0.0, 1e-15);
        assert_close(t, 0.0, 1e-15);
        assert_close(a.norm_sqr() + t * t, 1.0, 1e-12);
    }

    #[test]
    fn project_rejects_non_unit() {
        let err = hopf_project(&R4Point::new(0.5, 0.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotUnitNorm { .. }));
        assert!(hopf_project(&R4Point::new(1.0 + 1e-10, 0.0, 0.0, 0.0)).is_ok());
    }

    #[test]
    fn lift_examples() {
        let p = hopf_lift(&S2Point::NORTH, FiberAngle::new(0.0));
        assert_eq!(p.coords(), [1.0, 0.0, 0.0, 0.0]);

        let eq = S2Point::from_polar(FRAC_PI_2, 0.0);
        let p = hopf_lift(&eq, FiberAngle::new(0.0));
        assert_close(p.w().re, FRAC_1_SQRT_2, 1e-15);
        assert_close(p.z().re, FRAC_1_SQRT_2, 1e-15);
        let back = hopf_project(&p).unwrap();
        assert_close(chord_s2(&back, &eq), 0.0, 1e-9);

        let p = hopf_lift(&S2Point::SOUTH, FiberAngle::new(0.0));
        assert_close(p.w().re, 1.0, 1e-15);
        assert_close(p.z().norm(), 0.0, 1e-15);
    }

    #[test]
    fn chord_examples() {
        let c = S2Point::from_polar(1.0, 2.0);
        assert_close(chord_s2(&c, &c), 0.0, 1e-12);
        assert_close(chord_s2(&c, &c.antipode()), 2.0, 1e-12);
        let eq = S2Point::from_polar(FRAC_PI_2, 0.3);
        assert_close(chord_s2(&S2Point::NORTH, &eq), SQRT_2, 1e-15);

        let p = R4Point::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(chord_s3(&p, &p), 0.0);
        assert_eq!(chord_s3(&p, &-p), 2.0);
        assert_close(
            chord_s3(&p, &R4Point::new(0.0, 1.0, 0.0, 0.0)),
            SQRT_2,
            1e-15,
        );
    }

    #[test]
    fn offset_vanishes_at_north_pole_and_on_diagonal() {
        for &(a, f) in &[(0.3, 1.0), (2.9, 5.0), (FRAC_PI_2, 0.0)] {
            let cj = S2Point::from_polar(a, f);
            assert_close(
                phi_offset(&S2Point::NORTH, &cj).unwrap().value(),
                0.0,
                1e-15,
            );
            let o = phi_offset(&cj, &cj).unwrap();
            assert_close(o.value(), 0.0, 1e-15);
            let (c, s) = o.cos_sin();
            assert_close(c * c + s * s, 1.0, 1e-12);
        }
    }

    #[test]
    fn offset_undefined_for_antipodal_circles() {
        let c = S2Point::from_polar(1.1, 0.4);
        assert_eq!(phi_offset(&c, &c.antipode()), Err(Error::UndefinedOffset));
        // the distance still falls back to the direct lift
        let (t1, t2) = (FiberAngle::new(0.2), FiberAngle::new(1.3));
        let direct = chord_s3(&hopf_lift(&c, t1), &hopf_lift(&c.antipode(), t2));
        assert_close(fiber_distance(&c, t1, &c.antipode(), t2), direct, 1e-12);
        assert_close(direct, SQRT_2, 1e-12);
    }

    #[test]
    fn fiber_distance_examples() {
        let c = S2Point::from_polar(0.7, 1.9);
        let d = fiber_distance(&c, FiberAngle::new(0.4), &c, FiberAngle::new(0.4 + PI));
        assert_close(d, 2.0, 1e-12);
        let d = fiber_distance(
            &c,
            FiberAngle::new(0.4),
            &c,
            FiberAngle::new(0.4 + FRAC_PI_3),
        );
        assert_close(d, 1.0, 1e-12);
        // (w, z) = (0, 1) against (√2/2, √2/2): chord² = (1 − √2/2)² + 1/2 = 2 − √2
        let eq = S2Point::from_polar(FRAC_PI_2, 0.0);
        let d = fiber_distance(
            &S2Point::NORTH,
            FiberAngle::new(0.0),
            &eq,
            FiberAngle::new(0.0),
        );
        assert_close(d, (2.0 - SQRT_2).sqrt(), 1e-12);
        assert_close(d, 0.765_366_864_730_179_8, 1e-12);
    }

    #[test]
    fn theta_min_examples() {
        assert_close(theta_min(0.0).unwrap().unwrap(), FRAC_PI_3, 1e-15);
        assert_close(theta_min(SQRT_2).unwrap().unwrap(), FRAC_PI_4, 1e-15);
        assert_eq!(theta_min(1.9).unwrap(), None);
        assert!(theta_min(-0.1).is_err());
        assert!(theta_min(2.1).is_err());
    }

    #[test]
    fn d2_max_examples() {
        assert_close(d2_max(SQRT_2).unwrap(), 2.0, 1e-15);
        assert_close(d2_max(2.0).unwrap(), 0.0, 1e-15);
        assert_close(d2_max(0.0).unwrap(), 0.0, 1e-15);
        assert!(d2_max(2.5).is_err());
    }

    #[test]
    fn polar_canonicalization() {
        let c = S2Point::from_polar(-0.5, 0.0);
        assert_close(c.alpha(), 0.5, 1e-15);
        assert_close(c.phi(), PI, 1e-15);
        let c = S2Point::from_polar(0.5, -0.25);
        assert_close(c.phi(), TAU - 0.25, 1e-15);
        assert_close(wrap_pi(-PI), PI, 0.0);
        assert_eq!(FiberAngle::new(TAU).radians(), 0.0);
    }
}
