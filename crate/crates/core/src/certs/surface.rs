//! Surface-method exclusion of a stratum curve `C`.
//!
//! Take a general surface `T ∈ |mA - C|`. Adjunction along `C` gives
//!
//! ```text
//! deg(K_C + Diff) = (K_T + C) C = (K_X + T) C + C^2_T,   K_X + T ~ (m - 1) A,
//! ```
//!
//! so `C^2_T = -2 + deg Diff - (m - 1) deg C`. Where `C` has index `k` in `T`
//! the different has coefficient `(k - 1)/k`.
//!
//! * Single curve: the mobile part `(1/n)L ~ A|_T - C` is nef on `T`, but
//!   `(A|_T - C)^2 = m A^3 - 2 deg C + C^2_T`. A negative value excludes `C`.
//! * Curve pair: `A|_T = C + C'` with `C'` a twin of `C`. A negative
//!   `C'^2_T` forces `C'` into the centre set too, and then
//!   `deg C + deg C' > A^3` contradicts the degree bound.
//!
//! The index of `C` in `T` at a coordinate point is taken to be the weight of
//! that coordinate, so the different is summed over the surviving weights
//! above one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::family_db::{FamilyDb, FamilyRecord};
use crate::rational::Rational;
use crate::wps::{stratum_degree, StratumCurve};

/// `Σ (k - 1)/k` over the indices `k >= 2`.
pub fn different_total(indices: &[i64]) -> Rational {
    indices
        .iter()
        .map(|&k| {
            assert!(k >= 2, "different index must be at least 2, got {k}");
            Rational::new(k - 1, k)
        })
        .sum()
}

/// `C^2_T = -2 + Diff - (m - 1) deg C`.
pub fn curve_self_intersection(m: i64, deg_c: Rational, diff_total: Rational) -> Rational {
    assert!(m >= 1, "surface multiple must be positive");
    Rational::integer(-2) + diff_total - deg_c * (m - 1)
}

/// `(A|_T - C)^2_T = m A^3 - 2 deg C + C^2_T`.
pub fn surface_exclusion_value(
    m: i64,
    a_cube: Rational,
    deg_c: Rational,
    c2t: Rational,
) -> Rational {
    assert!(m >= 1, "surface multiple must be positive");
    a_cube * m - deg_c * 2 + c2t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCurveCheck {
    /// `C'^2_T < 0`, so `(1 - α)^2 C'^2_T >= 0` forces `α = 1`.
    pub forces_alpha_one: bool,
    /// `deg C + deg C' > A^3`.
    pub degree_contradiction: bool,
}

impl TwoCurveCheck {
    pub fn valid(&self) -> bool {
        self.forces_alpha_one && self.degree_contradiction
    }
}

pub fn two_curve_certificate(
    a_cube: Rational,
    deg_c: Rational,
    deg_c_prime: Rational,
    c_prime_sq: Rational,
) -> TwoCurveCheck {
    assert!(
        deg_c.is_positive() && deg_c_prime.is_positive(),
        "curve degrees must be positive"
    );
    TwoCurveCheck {
        forces_alpha_one: c_prime_sq.is_negative(),
        degree_contradiction: deg_c + deg_c_prime > a_cube,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceMethod {
    /// Tag `41`: the mobile part has negative self-intersection.
    SingleCurve,
    /// Tag `42`: `T` cuts `A` into `C + C'`.
    CurvePair,
}

impl SurfaceMethod {
    pub fn tag(self) -> &'static str {
        match self {
            SurfaceMethod::SingleCurve => "41",
            SurfaceMethod::CurvePair => "42",
        }
    }
}

impl fmt::Display for SurfaceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SurfaceMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<SurfaceMethod, String> {
        match s.trim() {
            "41" => Ok(SurfaceMethod::SingleCurve),
            "42" => Ok(SurfaceMethod::CurvePair),
            other => Err(format!(
                "unknown surface method {other:?} (expected 41 or 42)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceOutcome {
    SingleCurve {
        exclusion_value: Rational,
        /// The value is exactly zero: no contradiction.
        boundary: bool,
    },
    CurvePair {
        deg_c_prime: Rational,
        c_prime_sq: Rational,
        forces_alpha_one: bool,
        degree_contradiction: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCertificate {
    pub family: i64,
    pub curve: StratumCurve,
    pub m: i64,
    pub method: SurfaceMethod,
    pub a_cube: Rational,
    pub deg_c: Rational,
    pub diff_indices: Vec<i64>,
    pub diff_total: Rational,
    pub c2t: Rational,
    pub outcome: SurfaceOutcome,
}

/// Indices of the stratum curve in `T` at its coordinate points.
pub fn stratum_diff_indices(curve: &StratumCurve) -> Vec<i64> {
    curve
        .surviving_weights()
        .into_iter()
        .filter(|&w| w > 1)
        .collect()
}

impl SurfaceCertificate {
    /// Runs the pipeline for a stratum curve on `f` with `T ∈ |mA - C|`.
    pub fn compute(
        f: &FamilyRecord,
        curve: StratumCurve,
        m: i64,
        method: SurfaceMethod,
    ) -> SurfaceCertificate {
        let deg_c = stratum_degree(&curve);
        let diff_indices = stratum_diff_indices(&curve);
        let diff_total = different_total(&diff_indices);
        let c2t = curve_self_intersection(m, deg_c, diff_total);
        let outcome = match method {
            SurfaceMethod::SingleCurve => {
                let exclusion_value = surface_exclusion_value(m, f.a_cube, deg_c, c2t);
                SurfaceOutcome::SingleCurve {
                    exclusion_value,
                    boundary: exclusion_value.is_zero(),
                }
            }
            SurfaceMethod::CurvePair => {
                // C' is carried to C by a coordinate change, so it has the
                // same degree and self-intersection.
                let check = two_curve_certificate(f.a_cube, deg_c, deg_c, c2t);
                SurfaceOutcome::CurvePair {
                    deg_c_prime: deg_c,
                    c_prime_sq: c2t,
                    forces_alpha_one: check.forces_alpha_one,
                    degree_contradiction: check.degree_contradiction,
                }
            }
        };
        SurfaceCertificate {
            family: f.number,
            curve,
            m,
            method,
            a_cube: f.a_cube,
            deg_c,
            diff_indices,
            diff_total,
            c2t,
            outcome,
        }
    }

    pub fn valid(&self) -> bool {
        match self.outcome {
            SurfaceOutcome::SingleCurve {
                exclusion_value, ..
            } => exclusion_value.is_negative(),
            SurfaceOutcome::CurvePair {
                forces_alpha_one,
                degree_contradiction,
                ..
            } => forces_alpha_one && degree_contradiction,
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(
            self.outcome,
            SurfaceOutcome::SingleCurve { boundary: true, .. }
        )
    }

    /// Recomputes the certificate from the family table and checks that every
    /// stored value matches and the certificate is valid.
    pub fn revalidate(&self, db: &FamilyDb) -> bool {
        let Ok(f) = db.get(self.family) else {
            return false;
        };
        if self.m < 1 {
            return false;
        }
        let Some(curve) = StratumCurve::new(&f.weights, self.curve.vanishing()) else {
            return false;
        };
        let fresh = SurfaceCertificate::compute(f, curve, self.m, self.method);
        fresh == *self && fresh.valid()
    }

    /// One-line summary with all intermediate values.
    pub fn summary(&self) -> String {
        let head = format!(
            "family {} curve {:?} |{}A - C| method {}: A^3 = {}, deg C = {}, Diff = {}, C²_T = {}",
            self.family,
            self.curve.vanishing(),
            self.m,
            self.method,
            self.a_cube,
            self.deg_c,
            self.diff_total,
            self.c2t
        );
        match &self.outcome {
            SurfaceOutcome::SingleCurve {
                exclusion_value,
                boundary,
            } => format!(
                "{head}, value = {exclusion_value}{}",
                if *boundary { " (boundary)" } else { "" }
            ),
            SurfaceOutcome::CurvePair {
                deg_c_prime,
                c_prime_sq,
                forces_alpha_one,
                degree_contradiction,
            } => format!(
                "{head}, deg C' = {deg_c_prime}, C'²_T = {c_prime_sq}, alpha forced = {forces_alpha_one}, deg C + deg C' > A^3 = {degree_contradiction}"
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn different_examples() {
        assert_eq!(different_total(&[5]), r(4, 5));
        assert_eq!(different_total(&[]), Rational::ZERO);
        assert_eq!(different_total(&[2, 3]), r(7, 6));
    }

    #[test]
    #[should_panic(expected = "at least 2")]
    fn different_rejects_index_one() {
        different_total(&[1]);
    }

    #[test]
    fn self_intersection_examples() {
        assert_eq!(curve_self_intersection(4, r(1, 5), r(4, 5)), r(-9, 5));
        assert_eq!(curve_self_intersection(2, r(1, 5), r(4, 5)), r(-7, 5));
        for q in [r(1, 7), r(3, 2), r(5, 1)] {
            assert_eq!(curve_self_intersection(1, q, Rational::ZERO), r(-2, 1));
        }
    }

    #[test]
    fn exclusion_value_examples() {
        assert_eq!(
            surface_exclusion_value(4, r(13, 60), r(1, 5), r(-9, 5)),
            r(-4, 3)
        );
        assert_eq!(
            surface_exclusion_value(2, r(2, 3), r(1, 3), r(-5, 3)),
            r(-1, 1)
        );
        let (m, a3, q) = (3, r(2, 7), r(1, 4));
        let c = q * 2 - a3 * m;
        assert_eq!(surface_exclusion_value(m, a3, q, c), Rational::ZERO);
    }

    #[test]
    fn two_curve_examples() {
        let c = two_curve_certificate(r(1, 5), r(1, 5), r(1, 5), r(-7, 5));
        assert!(c.forces_alpha_one && c.degree_contradiction && c.valid());
        let c = two_curve_certificate(r(1, 1), r(1, 4), r(1, 4), r(-1, 1));
        assert!(c.forces_alpha_one);
        assert!(!c.degree_contradiction);
        assert!(!c.valid());
    }

    #[test]
    fn family_20_chain() {
        let db = FamilyDb::shipped();
        let f = db.get(20).unwrap();
        let curve = StratumCurve::new(&f.weights, [0, 2, 3]).unwrap();
        let cert = SurfaceCertificate::compute(f, curve, 4, SurfaceMethod::SingleCurve);
        assert_eq!(cert.diff_indices, vec![5]);
        assert_eq!(cert.diff_total, r(4, 5));
        assert_eq!(cert.c2t, r(-9, 5));
        assert_eq!(
            cert.outcome,
            SurfaceOutcome::SingleCurve {
                exclusion_value: r(-4, 3),
                boundary: false
            }
        );
        assert!(cert.valid());
        assert!(cert.revalidate(&db));
    }

    #[test]
    fn boundary_is_invalid_and_flagged() {
        let db = FamilyDb::shipped();
        let f = *db.get(20).unwrap();
        // Choose A^3 so that m A^3 - 2/5 - 9/5 = 0 with m = 4.
        let tuned = FamilyRecord {
            a_cube: r(11, 20),
            ..f
        };
        let curve = StratumCurve::new(&f.weights, [0, 2, 3]).unwrap();
        let cert = SurfaceCertificate::compute(&tuned, curve, 4, SurfaceMethod::SingleCurve);
        assert!(cert.is_boundary());
        assert!(!cert.valid());
    }

    #[test]
    fn method_tags_parse() {
        assert_eq!(
            "41".parse::<SurfaceMethod>().unwrap(),
            SurfaceMethod::SingleCurve
        );
        assert_eq!(
            "42".parse::<SurfaceMethod>().unwrap(),
            SurfaceMethod::CurvePair
        );
        assert!("43".parse::<SurfaceMethod>().is_err());
    }
}
