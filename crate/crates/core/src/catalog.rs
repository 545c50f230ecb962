//! Named configurations, each built from explicit coordinates or fiber data.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::config::{
    antipodal_pairs, verify_kissing, Configuration, FiberCircle, FiberedConfiguration,
};
use crate::geometry::{FiberAngle, R4Point, S2Point};
use crate::{Error, KISSING_TOL};

/// Stable identifiers for catalog entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogId {
    TwentyFourCell,
    ThreeBySix,
    SixteenByOne,
    SixByTwoFourByOne,
    CohnWoo,
}

impl CatalogId {
    pub const ALL: [CatalogId; 5] = [
        CatalogId::TwentyFourCell,
        CatalogId::ThreeBySix,
        CatalogId::SixteenByOne,
        CatalogId::SixByTwoFourByOne,
        CatalogId::CohnWoo,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CatalogId::TwentyFourCell => "24cell",
            CatalogId::ThreeBySix => "3x6",
            CatalogId::SixteenByOne => "16x1",
            CatalogId::SixByTwoFourByOne => "6x2+4x1",
            CatalogId::CohnWoo => "cohn-woo-22",
        }
    }

    /// The configuration for this entry. The Cohn–Woo entry yields the
    /// reconstructed candidate whatever its status; use [`make_cohn_woo`] to
    /// see the status.
    pub fn build(&self) -> Configuration {
        match self {
            CatalogId::TwentyFourCell => make_24cell(),
            CatalogId::ThreeBySix => make_3x6(),
            CatalogId::SixteenByOne => make_16x1(),
            CatalogId::SixByTwoFourByOne => make_6x2_4x1(),
            CatalogId::CohnWoo => make_cohn_woo().configuration,
        }
    }

    /// Fiber layout the entry is constructed from, when it has one.
    pub fn fibered(&self) -> Option<FiberedConfiguration> {
        match self {
            CatalogId::TwentyFourCell => None,
            CatalogId::ThreeBySix => Some(fibered_3x6()),
            CatalogId::SixteenByOne => Some(fibered_16x1()),
            CatalogId::SixByTwoFourByOne => Some(fibered_6x2_4x1()),
            CatalogId::CohnWoo => Some(make_cohn_woo().fibered),
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CatalogId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown catalog entry `{s}` (expected one of: 24cell, 3x6, 16x1, 6x2+4x1, cohn-woo-22)"
                ))
            })
    }
}

/// ±eₖ together with (±½, ±½, ±½, ±½).
pub fn make_24cell() -> Configuration {
    let mut points = Vec::with_capacity(24);
    for k in 0..4 {
        for sign in [1.0, -1.0] {
            let mut x = [0.0; 4];
            x[k] = sign;
            points.push(R4Point(x));
        }
    }
    for bits in 0..16u32 {
        let x = std::array::from_fn(|k| if bits & (1 << k) == 0 { 0.5 } else { -0.5 });
        points.push(R4Point(x));
    }
    Configuration::new(points).expect("24-cell points are unit and distinct")
}

fn equator_circles(angles: &[FiberAngle]) -> Vec<FiberCircle> {
    (0..3)
        .map(|k| {
            FiberCircle::new(
                S2Point::from_polar(FRAC_PI_2, k as f64 * TAU / 3.0),
                angles.to_vec(),
            )
        })
        .collect()
}

pub fn fibered_3x6() -> FiberedConfiguration {
    let angles: Vec<_> = (0..6)
        .map(|k| FiberAngle::new(k as f64 * FRAC_PI_3))
        .collect();
    FiberedConfiguration::new(equator_circles(&angles))
}

/// Three equatorial circles 120° apart carrying six points each.
pub fn make_3x6() -> Configuration {
    fibered_3x6()
        .to_configuration()
        .expect("3x6 lift is unit and distinct")
}

fn with_pole(mut circles: Vec<FiberCircle>) -> FiberedConfiguration {
    circles.push(FiberCircle::new(
        S2Point::NORTH,
        vec![FiberAngle::from_degrees(300.0)],
    ));
    FiberedConfiguration::new(circles)
}

pub fn fibered_16x1() -> FiberedConfiguration {
    let angles: Vec<_> = [0.0, 61.0, 122.0, 185.0, 250.0]
        .into_iter()
        .map(FiberAngle::from_degrees)
        .collect();
    with_pole(equator_circles(&angles))
}

/// The 3×5+1×1 layout with fiber angles 0°, 61°, 122°, 185°, 250° on the
/// equator and 300° at the pole. No two points are antipodal.
pub fn make_16x1() -> Configuration {
    fibered_16x1()
        .to_configuration()
        .expect("16x1 lift is unit and distinct")
}

pub fn fibered_6x2_4x1() -> FiberedConfiguration {
    let angles: Vec<_> = (0..5)
        .map(|n| FiberAngle::new(n as f64 * FRAC_PI_3))
        .collect();
    with_pole(equator_circles(&angles))
}

/// The same layout with equatorial angles n·π/3, n = 0..4.
pub fn make_6x2_4x1() -> Configuration {
    fibered_6x2_4x1()
        .to_configuration()
        .expect("6x2+4x1 lift is unit and distinct")
}

/// One printed line of Cohn–Woo fiber data: base points `(a, t)` and the fiber
/// angles placed on every one of them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiberLine {
    pub bases: Vec<(Complex64, f64)>,
    pub angles: Vec<f64>,
}

/// The fiber data as printed, inconsistencies included.
pub fn cohn_woo_printed() -> Vec<FiberLine> {
    let r = 3f64.sqrt() / 2.0;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    vec![
        FiberLine {
            bases: vec![(c(0.0, 0.0), 0.0)],
            angles: (1..=6).map(|n| (n as f64 - 0.5) * FRAC_PI_3).collect(),
        },
        FiberLine {
            bases: vec![(c(0.0, r), -0.5), (c(0.0, -r), -0.5)],
            angles: vec![FRAC_PI_2, 3.0 * FRAC_PI_2],
        },
        FiberLine {
            bases: vec![(c(r, 0.0), -0.5), (c(-r, 0.0), -0.5)],
            angles: vec![FRAC_PI_2, 3.0 * FRAC_PI_2],
        },
        FiberLine {
            bases: [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)]
                .into_iter()
                .map(|(sr, si)| (c(sr * 2.0 / 3.0, si * 2.0 / 3.0), -0.5))
                .collect(),
            angles: vec![0.0, FRAC_PI_2],
        },
    ]
}

/// A repair of the printed data, tried in order until one verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RepairHypothesis {
    /// First line on the north pole; fourth-line bases rescaled to modulus
    /// √3/2 at t = −1/2; fourth-line angles {0, π}.
    PoleRescaledHalfTurn,
    /// First line on the north pole; fourth-line bases kept at ±2/3 ± 2i/3
    /// with t = −1/3, which puts them on S² exactly; fourth-line angles {0, π}.
    PoleThirdLatitudeHalfTurn,
}

impl RepairHypothesis {
    pub const ALL: [RepairHypothesis; 2] = [
        RepairHypothesis::PoleRescaledHalfTurn,
        RepairHypothesis::PoleThirdLatitudeHalfTurn,
    ];

    pub fn describe(&self) -> &'static str {
        match self {
            RepairHypothesis::PoleRescaledHalfTurn => {
                "line 1 at the north pole; line 4 bases rescaled to |a| = sqrt(3)/2, t = -1/2; line 4 angles {0, pi}"
            }
            RepairHypothesis::PoleThirdLatitudeHalfTurn => {
                "line 1 at the north pole; line 4 bases kept, t = -1/3; line 4 angles {0, pi}"
            }
        }
    }

    fn apply(&self, mut lines: Vec<FiberLine>) -> Vec<FiberLine> {
        lines[0].bases = vec![(Complex64::new(0.0, 0.0), 1.0)];
        let r = 3f64.sqrt() / 2.0;
        for (a, t) in lines[3].bases.iter_mut() {
            match self {
                RepairHypothesis::PoleRescaledHalfTurn => {
                    *a = Complex64::from_polar(r, a.arg());
                    *t = -0.5;
                }
                RepairHypothesis::PoleThirdLatitudeHalfTurn => *t = -1.0 / 3.0,
            }
        }
        lines[3].angles = vec![0.0, PI];
        lines
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrintedDefect {
    /// 1-based line of the printed data.
    pub line: usize,
    pub description: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepairAttempt {
    pub hypothesis: RepairHypothesis,
    pub point_count: usize,
    pub antipodal_pairs: usize,
    pub min_distance: f64,
    pub violations: Vec<((usize, usize), f64)>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ReconstructionStatus {
    Verified(RepairHypothesis),
    /// No hypothesis passed the gate; every attempt is in `attempts`.
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CohnWooReconstruction {
    pub status: ReconstructionStatus,
    /// The verified candidate, or the last attempted one on failure.
    #[serde(skip)]
    pub configuration: Configuration,
    #[serde(skip)]
    pub fibered: FiberedConfiguration,
    pub attempts: Vec<RepairAttempt>,
    pub printed_defects: Vec<PrintedDefect>,
    /// Antipodal pairs when the printed angle sets are used on unit-norm bases.
    pub printed_angle_pairs: usize,
}

pub const COHN_WOO_POINTS: usize = 22;
pub const COHN_WOO_PAIRS: usize = 11;

fn lines_to_fibered(lines: &[FiberLine]) -> FiberedConfiguration {
    let circles = lines
        .iter()
        .flat_map(|line| {
            line.bases.iter().map(|&(a, t)| {
                FiberCircle::new(
                    S2Point::from_complex_real(a, t),
                    line.angles.iter().map(|&th| FiberAngle::new(th)).collect(),
                )
            })
        })
        .collect();
    FiberedConfiguration::new(circles)
}

fn printed_defects(lines: &[FiberLine]) -> Vec<PrintedDefect> {
    let mut out = Vec::new();
    for (k, line) in lines.iter().enumerate() {
        for &(a, t) in &line.bases {
            let norm = a.norm_sqr() + t * t;
            if (norm - 1.0).abs() > 1e-12 {
                out.push(PrintedDefect {
                    line: k + 1,
                    description: format!(
                        "base a = {}{:+}i, t = {t}: |a|^2 + t^2 = {norm} instead of 1",
                        a.re, a.im
                    ),
                    value: norm,
                });
                break;
            }
        }
    }
    out
}

fn attempt(
    hypothesis: RepairHypothesis,
    fibered: &FiberedConfiguration,
) -> (RepairAttempt, Configuration) {
    let c = fibered
        .to_configuration()
        .expect("repaired bases are unit and distinct");
    let report = verify_kissing(&c, KISSING_TOL);
    let pairs = antipodal_pairs(&c, KISSING_TOL).len();
    let verified = report.is_kissing && c.len() == COHN_WOO_POINTS && pairs == COHN_WOO_PAIRS;
    (
        RepairAttempt {
            hypothesis,
            point_count: c.len(),
            antipodal_pairs: pairs,
            min_distance: report.min_distance,
            violations: report.violations,
            verified,
        },
        c,
    )
}

/// Rebuilds the 22-point Cohn–Woo configuration from its printed fiber data.
///
/// The printed data does not lie on S² as given, so each [`RepairHypothesis`]
/// is tried in turn; one is accepted only if its candidate verifies as kissing
/// with 22 points and 11 antipodal pairs. The printed defects are reported
/// regardless of the outcome.
pub fn make_cohn_woo() -> CohnWooReconstruction {
    let printed = cohn_woo_printed();
    let printed_defects = printed_defects(&printed);

    // Printed angle sets on the first repair's unit-norm bases.
    let mut printed_angles = RepairHypothesis::PoleRescaledHalfTurn.apply(printed.clone());
    printed_angles[3].angles = printed[3].angles.clone();
    let printed_angle_pairs = antipodal_pairs(
        &Configuration::new(lines_to_fibered(&printed_angles).lift_points())
            .expect("unit-norm bases"),
        KISSING_TOL,
    )
    .len();

    let mut attempts = Vec::new();
    let mut last = None;
    for hypothesis in RepairHypothesis::ALL {
        let fibered = lines_to_fibered(&hypothesis.apply(printed.clone()));
        let (record, configuration) = attempt(hypothesis, &fibered);
        let verified = record.verified;
        attempts.push(record);
        if verified {
            return CohnWooReconstruction {
                status: ReconstructionStatus::Verified(hypothesis),
                configuration,
                fibered,
                attempts,
                printed_defects,
                printed_angle_pairs,
            };
        }
        last = Some((configuration, fibered));
    }
    let (configuration, fibered) = last.expect("at least one hypothesis");
    CohnWooReconstruction {
        status: ReconstructionStatus::Failed,
        configuration,
        fibered,
        attempts,
        printed_defects,
        printed_angle_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{group_into_circles, signature, Signature};
    use crate::geometry::chord_s3;
    use crate::GROUPING_TOL;

    #[test]
    fn ids_round_trip() {
        for id in CatalogId::ALL {
            assert_eq!(id.as_str().parse::<CatalogId>().unwrap(), id);
        }
        assert!("25cell".parse::<CatalogId>().is_err());
    }

    #[test]
    fn twenty_four_cell_counts() {
        let c = make_24cell();
        assert_eq!(c.len(), 24);
        let r = verify_kissing(&c, KISSING_TOL);
        assert!(r.is_kissing);
        assert!((r.min_distance - 1.0).abs() < 1e-12);
        // closed under negation
        for p in c.points() {
            assert!(c.points().iter().any(|q| chord_s3(q, &-*p) < 1e-12));
        }
    }

    #[test]
    fn twenty_four_cell_contact_degree() {
        let c = make_24cell();
        let mut degree = [0; 24];
        let mut contacts = 0;
        for ((i, j), d) in c.pair_distances() {
            if (d - 1.0).abs() < 1e-9 {
                degree[i] += 1;
                degree[j] += 1;
                contacts += 1;
            }
        }
        assert!(degree.iter().all(|&d| d == 8));
        assert_eq!(contacts, 96);
    }

    #[test]
    fn three_by_six_layout() {
        let f = fibered_3x6();
        assert_eq!(signature(&f), Signature::from_counts(&[(6, 3)]));
        let d = crate::geometry::chord_s2(&f.circles[0].base, &f.circles[1].base);
        assert!((d - 3f64.sqrt()).abs() < 1e-12);
        let c = make_3x6();
        assert!(verify_kissing(&c, KISSING_TOL).is_kissing);
        assert_eq!(antipodal_pairs(&c, KISSING_TOL).len(), 9);
    }

    #[test]
    fn sixteen_point_entries() {
        let c = make_16x1();
        assert_eq!(c.len(), 16);
        assert!(verify_kissing(&c, KISSING_TOL).is_kissing);
        assert!(antipodal_pairs(&c, KISSING_TOL).is_empty());

        let c = make_6x2_4x1();
        assert_eq!(c.len(), 16);
        let r = verify_kissing(&c, KISSING_TOL);
        assert!(r.is_kissing);
        assert!((r.min_distance - 1.0).abs() < 1e-12);
        assert_eq!(antipodal_pairs(&c, KISSING_TOL).len(), 6);
    }

    #[test]
    fn sixteen_by_one_angle_gaps() {
        let deg = [0.0, 61.0, 122.0, 185.0, 250.0];
        let min_gap = (0..deg.len())
            .map(|i| {
                let next = if i + 1 < deg.len() {
                    deg[i + 1]
                } else {
                    deg[0] + 360.0
                };
                next - deg[i]
            })
            .fold(f64::INFINITY, f64::min);
        assert_eq!(min_gap, 61.0);
        assert!(min_gap.to_radians() >= crate::geometry::theta_min(0.0).unwrap().unwrap());
    }

    #[test]
    fn cohn_woo_printed_defects() {
        let r = make_cohn_woo();
        let lines: Vec<usize> = r.printed_defects.iter().map(|d| d.line).collect();
        assert_eq!(lines, vec![1, 4]);
        assert_eq!(r.printed_defects[0].value, 0.0);
        assert!((r.printed_defects[1].value - 41.0 / 36.0).abs() < 1e-15);
        assert_eq!(r.printed_angle_pairs, 7);
    }

    #[test]
    fn cohn_woo_reconstruction() {
        let r = make_cohn_woo();
        assert_eq!(r.attempts.len(), 2);
        assert!(!r.attempts[0].verified);
        assert!(!r.attempts[0].violations.is_empty());
        assert_eq!(
            r.status,
            ReconstructionStatus::Verified(RepairHypothesis::PoleThirdLatitudeHalfTurn)
        );
        assert_eq!(r.configuration.len(), COHN_WOO_POINTS);
        assert_eq!(
            antipodal_pairs(&r.configuration, KISSING_TOL).len(),
            COHN_WOO_PAIRS
        );
        let v = verify_kissing(&r.configuration, KISSING_TOL);
        assert!(v.is_kissing);
        assert!((v.min_distance - 1.0).abs() < 1e-12);
        // as laid out: one circle of six plus eight of two
        assert_eq!(
            signature(&r.fibered),
            Signature::from_counts(&[(6, 1), (2, 8)])
        );
        let grouped = group_into_circles(&r.configuration, GROUPING_TOL).unwrap();
        assert_eq!(signature(&grouped), signature(&r.fibered));
    }

    #[test]
    fn constructions_are_bit_stable() {
        for id in CatalogId::ALL {
            assert_eq!(id.build(), id.build());
        }
    }
}
