//! Low-degree curve bounds on `X_d ⊂ P(1, a1, a2, a3, a4)`.
//!
//! Every family falls into one of three cases according to how many
//! independent degree-one forms it carries. For each case this module
//! evaluates the numeric hypotheses that rule out curves of degree at most
//! `A^3`:
//!
//! * the projection bound for `a1 > 1` (curves not contracted by the
//!   projection away from `P4`), together with its point-case comparisons
//!   and the shared-factor variant for `gcd(a1, a2) > 1`;
//! * the pencil bound for `a1 = 1 < a2`;
//! * the contracted-curve bound, plus the divisibility certificate showing
//!   the contracted locus avoids the singular points of the base;
//! * the integrality filter for `a2 = 1`.
//!
//! Nothing here consults a list of expected exceptions. The exception lists
//! fall out of the weights alone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LemmaError;
use crate::family_db::{FamilyDb, FamilyRecord};
use crate::rational::Rational;
use crate::wps::{coordinate_point_on_x, hcf};

/// Which case a family falls in, by the dimension of `|O_X(1)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// `a1 > 1`: `|O(1)|` is the single divisor `x0 = 0`.
    NoPencil,
    /// `a1 = 1 < a2`: `|O(1)|` is the pencil spanned by `x0, x1`.
    Pencil,
    /// `a1 = a2 = 1`: at least a net of degree-one forms.
    Net,
}

impl CaseTag {
    pub fn describe(self) -> &'static str {
        match self {
            CaseTag::NoPencil => "a1 > 1",
            CaseTag::Pencil => "a1 = 1 < a2",
            CaseTag::Net => "a1 = a2 = 1",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

pub fn classify_case(f: &FamilyRecord) -> CaseTag {
    let w = &f.weights;
    if w.a1() > 1 {
        CaseTag::NoPencil
    } else if w.a2() > 1 {
        CaseTag::Pencil
    } else {
        CaseTag::Net
    }
}

fn require_case(f: &FamilyRecord, expected: CaseTag) -> Result<(), LemmaError> {
    let actual = classify_case(f);
    if actual == expected {
        Ok(())
    } else {
        Err(LemmaError::WrongCase {
            number: f.number,
            expected: expected.describe(),
            actual: actual.describe(),
        })
    }
}

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("integer overflow in weight product")
}

/// Any curve of degree above `A^3` is excluded outright, so the bound is
/// just `A^3`.
pub fn degree_bound(f: &FamilyRecord) -> Rational {
    f.a_cube
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProjectionStatus {
    /// `d < a1 a4`: no generality assumption needed.
    Strong,
    /// `a1 a4 <= d < a2 a4`: needs `{x = y = 0} ∩ X` irreducible.
    Weak,
    /// `d >= a2 a4`: the bound does not apply as stated.
    Fails,
}

/// One point case from the projection argument: the image curve `C'` is a
/// fibre over a point of `P(1, a1, a2)` and has the given degree. Its
/// existence is contradictory when that degree exceeds `A^3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCase {
    pub locus: String,
    pub curve_degree: Rational,
    pub a_cube: Rational,
    pub contradiction: bool,
}

impl PointCase {
    fn new(locus: &str, curve_degree: Rational, a_cube: Rational) -> PointCase {
        PointCase {
            locus: locus.to_string(),
            curve_degree,
            a_cube,
            contradiction: curve_degree > a_cube,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionPointCases {
    /// `{y = z = 0}`: degree `1/a3`.
    pub first: PointCase,
    /// `{y^a2 + z^a1 = x = 0}`: degree `1/a3` when `gcd(a1, a2) = 1`.
    pub second: PointCase,
    /// `{x = z = 0}`: degree `1/(a1 a3)`, equivalently `a2 a4 > d`.
    pub third: PointCase,
    /// `{x = y = 0}` under the strong hypothesis: degree `1/(a2 a3)`,
    /// equivalently `a1 a4 > d`.
    pub fourth_strong: PointCase,
    /// `{x = y = 0}` under the weak hypothesis: the whole section
    /// `{x = y = 0} ∩ X` has degree `a1 A^3`, larger than `A^3` iff `a1 > 1`.
    pub fourth_weak: PointCase,
}

impl ProjectionPointCases {
    pub fn all(&self) -> [&PointCase; 5] {
        [
            &self.first,
            &self.second,
            &self.third,
            &self.fourth_strong,
            &self.fourth_weak,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionVerdict {
    pub number: i64,
    pub status: ProjectionStatus,
    pub d: i64,
    pub a1a4: i64,
    pub a2a4: i64,
    pub point_cases: ProjectionPointCases,
}

pub fn projection_point_cases(f: &FamilyRecord) -> Result<ProjectionPointCases, LemmaError> {
    require_case(f, CaseTag::NoPencil)?;
    let w = &f.weights;
    let a = f.a_cube;
    let inv = |n: i64| Rational::new(1, n);
    Ok(ProjectionPointCases {
        first: PointCase::new("{y = z = 0}", inv(w.a3()), a),
        second: PointCase::new("{y^a2 + z^a1 = x = 0}", inv(w.a3()), a),
        third: PointCase::new("{x = z = 0}", inv(mul(w.a1(), w.a3())), a),
        fourth_strong: PointCase::new("{x = y = 0}, strong", inv(mul(w.a2(), w.a3())), a),
        fourth_weak: PointCase::new("{x = y = 0} ∩ X, weak", a * w.a1(), a),
    })
}

pub fn projection_verdict(f: &FamilyRecord) -> Result<ProjectionVerdict, LemmaError> {
    let point_cases = projection_point_cases(f)?;
    let w = &f.weights;
    let a1a4 = mul(w.a1(), w.a4());
    let a2a4 = mul(w.a2(), w.a4());
    let status = if f.d < a1a4 {
        ProjectionStatus::Strong
    } else if f.d < a2a4 {
        ProjectionStatus::Weak
    } else {
        ProjectionStatus::Fails
    };
    Ok(ProjectionVerdict {
        number: f.number,
        status,
        d: f.d,
        a1a4,
        a2a4,
        point_cases,
    })
}

/// When `gcd(a1, a2) > 1` the second point case becomes a curve of degree
/// `1/(a3 gcd(a1, a2))`; it must still exceed `A^3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharedFactorCheck {
    pub number: i64,
    pub gcd: i64,
    pub value: Rational,
    pub a_cube: Rational,
    pub applies: bool,
}

pub fn shared_factor_check(f: &FamilyRecord) -> Result<SharedFactorCheck, LemmaError> {
    let w = &f.weights;
    let g = hcf(w.a1(), w.a2());
    if g <= 1 {
        return Err(LemmaError::CoprimeLeadingWeights { number: f.number });
    }
    let value = Rational::new(1, mul(w.a3(), g));
    Ok(SharedFactorCheck {
        number: f.number,
        gcd: g,
        value,
        a_cube: f.a_cube,
        applies: value > f.a_cube,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PencilVerdict {
    pub number: i64,
    pub d: i64,
    pub a2a4: i64,
    /// `d < a2 a4`.
    pub applies: bool,
}

pub fn pencil_verdict(f: &FamilyRecord) -> Result<PencilVerdict, LemmaError> {
    require_case(f, CaseTag::Pencil)?;
    let a2a4 = mul(f.weights.a2(), f.weights.a4());
    Ok(PencilVerdict {
        number: f.number,
        d: f.d,
        a2a4,
        applies: f.d < a2a4,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ContractedOutcome {
    /// `P4 ∉ X`, so the projection from `P4` is a finite morphism.
    NoContractedCurves,
    /// `P4 ∈ X` but `d < a1 a2 a3`, so contracted curves are too long.
    DegreeBound,
    /// `P4 ∈ X` and `d >= a1 a2 a3`.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractedVerdict {
    pub number: i64,
    pub p4_on_x: bool,
    pub d: i64,
    pub a1a2a3: i64,
    pub outcome: ContractedOutcome,
}

impl ContractedVerdict {
    pub fn safe(&self) -> bool {
        self.outcome != ContractedOutcome::Unresolved
    }
}

pub fn contracted_verdict(f: &FamilyRecord) -> ContractedVerdict {
    let w = &f.weights;
    let a1a2a3 = mul(mul(w.a1(), w.a2()), w.a3());
    let p4_on_x = coordinate_point_on_x(f.d, w, 4);
    let outcome = if !p4_on_x {
        ContractedOutcome::NoContractedCurves
    } else if f.d < a1a2a3 {
        ContractedOutcome::DegreeBound
    } else {
        ContractedOutcome::Unresolved
    };
    ContractedVerdict {
        number: f.number,
        p4_on_x,
        d: f.d,
        a1a2a3,
        outcome,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedWeightCheck {
    pub index: usize,
    pub weight: i64,
    pub divides_d_minus_a4: bool,
    pub divides_d: bool,
}

/// Shows that the base locus `Z = {a = b = 0}` of the contracted curves
/// misses the singular points of `P(a0', a1', a2')`: each reduced weight
/// above one divides `d - a4` or `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityCertificate {
    pub number: i64,
    /// Index `j` of the tangent monomial `x_j x4^2`.
    pub j: usize,
    pub checks: Vec<ReducedWeightCheck>,
}

/// Indices `j ∈ {1, 2, 3}` with `a_j + 2 a4 = d`.
pub fn tangent_indices(f: &FamilyRecord) -> Vec<usize> {
    let w = &f.weights;
    (1..=3)
        .filter(|&j| w.get(j) + mul(2, w.a4()) == f.d)
        .collect()
}

pub fn contracted_divisibility_certificate(
    f: &FamilyRecord,
    j: usize,
) -> Result<DivisibilityCertificate, LemmaError> {
    if j > 3 {
        return Err(LemmaError::IndexOutOfRange {
            number: f.number,
            j,
        });
    }
    let w = &f.weights;
    let lhs = w.get(j) + mul(2, w.a4());
    if lhs != f.d {
        return Err(LemmaError::NotTangentIndex {
            number: f.number,
            j,
            lhs,
            d: f.d,
        });
    }
    let d_minus_a4 = f.d - w.a4();
    let mut checks = Vec::new();
    for index in (0..4).filter(|&i| i != j) {
        let weight = w.get(index);
        if weight <= 1 {
            continue;
        }
        let check = ReducedWeightCheck {
            index,
            weight,
            divides_d_minus_a4: d_minus_a4 % weight == 0,
            divides_d: f.d % weight == 0,
        };
        if !check.divides_d_minus_a4 && !check.divides_d {
            return Err(LemmaError::DivisibilityViolated {
                number: f.number,
                weight,
                d_minus_a4,
                d: f.d,
            });
        }
        checks.push(check);
    }
    Ok(DivisibilityCertificate {
        number: f.number,
        j,
        checks,
    })
}

/// Certificates for every tangent index of the family.
pub fn contracted_divisibility_certificates(
    f: &FamilyRecord,
) -> Result<Vec<DivisibilityCertificate>, LemmaError> {
    tangent_indices(f)
        .into_iter()
        .map(|j| contracted_divisibility_certificate(f, j))
        .collect()
}

/// For `a2 = 1`, a curve not contained in some `{l = l' = 0}` has integral
/// degree, so `A^3 < 1` excludes it immediately.
pub fn integer_degree_filter(f: &FamilyRecord) -> Result<bool, LemmaError> {
    require_case(f, CaseTag::Net)?;
    Ok(f.a_cube < Rational::ONE)
}

/// The exception lists, derived from weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedLists {
    pub projection_strong: Vec<i64>,
    pub projection_weak: Vec<i64>,
    pub projection_fails: Vec<i64>,
    pub pencil_exceptions: Vec<i64>,
    pub contracted_unresolved: Vec<i64>,
    pub shared_factor: Vec<i64>,
}

impl DerivedLists {
    pub fn named(&self) -> [(&'static str, &Vec<i64>); 6] {
        [
            ("projection_strong", &self.projection_strong),
            ("projection_weak", &self.projection_weak),
            ("projection_fails", &self.projection_fails),
            ("pencil_exceptions", &self.pencil_exceptions),
            ("contracted_unresolved", &self.contracted_unresolved),
            ("shared_factor", &self.shared_factor),
        ]
    }
}

pub fn derive_lists(db: &FamilyDb) -> DerivedLists {
    let mut lists = DerivedLists {
        projection_strong: Vec::new(),
        projection_weak: Vec::new(),
        projection_fails: Vec::new(),
        pencil_exceptions: Vec::new(),
        contracted_unresolved: Vec::new(),
        shared_factor: Vec::new(),
    };
    for f in db.iter() {
        match classify_case(f) {
            CaseTag::NoPencil => {
                let v = projection_verdict(f).expect("case checked");
                match v.status {
                    ProjectionStatus::Strong => lists.projection_strong.push(f.number),
                    ProjectionStatus::Weak => lists.projection_weak.push(f.number),
                    ProjectionStatus::Fails => lists.projection_fails.push(f.number),
                }
            }
            CaseTag::Pencil => {
                if !pencil_verdict(f).expect("case checked").applies {
                    lists.pencil_exceptions.push(f.number);
                }
            }
            CaseTag::Net => {}
        }
        if !contracted_verdict(f).safe() {
            lists.contracted_unresolved.push(f.number);
        }
        if hcf(f.weights.a1(), f.weights.a2()) > 1 {
            lists.shared_factor.push(f.number);
        }
    }
    lists
}

/// Sorted symmetric difference of two family lists.
pub fn symmetric_difference(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .copied()
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
