//! Degree comparisons for the `a1 > 1` families outside the projection bound.
//!
//! For these families the low-degree argument needs extra generality
//! assumptions on `X` (irreducibility of `{x = y = 0} ∩ X`, and no line
//! joining two singular strata lying on `X`). Only the degree comparisons
//! are computed here; the assumptions themselves are taken as given.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::family_db::{FamilyDb, FamilyRecord};
use crate::lemmas::{classify_case, projection_verdict, CaseTag, ProjectionStatus};
use crate::rational::Rational;
use crate::wps::hcf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Greater,
    Equal,
    Less,
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Relation {
        match o {
            Ordering::Greater => Relation::Greater,
            Ordering::Equal => Relation::Equal,
            Ordering::Less => Relation::Less,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Greater => ">",
            Relation::Equal => "=",
            Relation::Less => "<",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeComparison {
    pub label: String,
    pub degree: Rational,
    /// Relation of `degree` to `A^3`.
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub number: i64,
    pub a_cube: Rational,
    /// Image of `C` in `P(1, a1, a2)` is a curve: degree at least `1/(a1 a2)`.
    pub image_curve: DegreeComparison,
    /// `{y = z = 0}`: `deg C' = 1/a3`.
    pub first_point: DegreeComparison,
    /// `{x = y^a2 + z^a1 = 0}`: `deg C' = 1/(a3 gcd(a1, a2))`.
    pub second_point: DegreeComparison,
    /// `{x = z = 0}`: `deg C' = 1/(a1 a3)`.
    pub third_point: DegreeComparison,
    /// `{x = y = 0} ∩ X`: degree `a1 A^3`.
    pub section: DegreeComparison,
}

impl ExtensionReport {
    pub fn comparisons(&self) -> [&DegreeComparison; 5] {
        [
            &self.image_curve,
            &self.first_point,
            &self.second_point,
            &self.third_point,
            &self.section,
        ]
    }
}

fn compare(label: &str, degree: Rational, a_cube: Rational) -> DegreeComparison {
    DegreeComparison {
        label: label.to_string(),
        degree,
        relation: degree.cmp(&a_cube).into(),
    }
}

pub fn extension_report(f: &FamilyRecord) -> ExtensionReport {
    let w = &f.weights;
    let a = f.a_cube;
    let inv = |n: i64| Rational::new(1, n);
    ExtensionReport {
        number: f.number,
        a_cube: a,
        image_curve: compare("image curve in P(1,a1,a2)", inv(w.a1() * w.a2()), a),
        first_point: compare("{y = z = 0}", inv(w.a3()), a),
        second_point: compare(
            "{x = y^a2 + z^a1 = 0}",
            inv(w.a3() * hcf(w.a1(), w.a2())),
            a,
        ),
        third_point: compare("{x = z = 0}", inv(w.a1() * w.a3()), a),
        section: compare("{x = y = 0} ∩ X", a * w.a1(), a),
    }
}

/// Reports for every `a1 > 1` family where the projection bound fails.
pub fn projection_extension_checks(db: &FamilyDb) -> Vec<ExtensionReport> {
    db.iter()
        .filter(|f| classify_case(f) == CaseTag::NoPencil)
        .filter(|f| projection_verdict(f).expect("case checked").status == ProjectionStatus::Fails)
        .map(extension_report)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_the_failing_families() {
        let db = FamilyDb::shipped();
        let numbers: Vec<i64> = projection_extension_checks(&db)
            .iter()
            .map(|r| r.number)
            .collect();
        assert_eq!(numbers, vec![18, 19, 22, 27, 28]);
    }

    #[test]
    fn family_19_comparisons() {
        let db = FamilyDb::shipped();
        let r = extension_report(db.get(19).unwrap());
        assert_eq!(r.a_cube, Rational::new(1, 6));
        assert_eq!(r.image_curve.degree, Rational::new(1, 6));
        assert_eq!(r.image_curve.relation, Relation::Equal);
        assert_eq!(r.first_point.degree, Rational::new(1, 3));
        assert_eq!(r.first_point.relation, Relation::Greater);
        assert_eq!(r.second_point.relation, Relation::Greater);
        assert_eq!(r.third_point.relation, Relation::Equal);
        assert_eq!(r.section.degree, Rational::new(1, 3));
        assert_eq!(r.section.relation, Relation::Greater);
    }

    #[test]
    fn family_22_comparisons() {
        // P(1,2,2,3,7), d = 14, A^3 = 1/6.
        let db = FamilyDb::shipped();
        let r = extension_report(db.get(22).unwrap());
        assert_eq!(r.a_cube, Rational::new(1, 6));
        assert_eq!(
            (r.image_curve.degree, r.image_curve.relation),
            (Rational::new(1, 4), Relation::Greater)
        );
        assert_eq!(
            (r.first_point.degree, r.first_point.relation),
            (Rational::new(1, 3), Relation::Greater)
        );
        assert_eq!(
            (r.second_point.degree, r.second_point.relation),
            (Rational::new(1, 6), Relation::Equal)
        );
        assert_eq!(
            (r.third_point.degree, r.third_point.relation),
            (Rational::new(1, 6), Relation::Equal)
        );
        assert_eq!(
            (r.section.degree, r.section.relation),
            (Rational::new(1, 3), Relation::Greater)
        );
    }
}
