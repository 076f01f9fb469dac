//! Per-family coverage audit.
//!
//! Every family has two curve classes to dispose of: curves contracted by the
//! projection from `P4`, and all other low-degree curves (for `a1 = 1`, those
//! not already inside `{x0 = x1 = 0}`). Each class must be assigned at least
//! one verified route. Steps that rest on geometry the engine cannot check
//! are attached as annotations rather than assumed silently.

use std::fmt;

use serde::Serialize;

use crate::certs::extension::{extension_report, ExtensionReport};
use crate::certs::surface::SurfaceCertificate;
use crate::certs::table::{certify_row, BoundTag, SurfaceRow};
use crate::certs::test_class::{certify_net_curves, TestClassCertificate};
use crate::family_db::{FamilyDb, FamilyRecord};
use crate::lemmas::{
    classify_case, contracted_divisibility_certificates, contracted_verdict, integer_degree_filter,
    pencil_verdict, projection_verdict, shared_factor_check, CaseTag, ContractedVerdict,
    DivisibilityCertificate, PencilVerdict, ProjectionStatus, SharedFactorCheck,
};
use crate::rational::Rational;
use crate::wps::hcf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveClass {
    /// Curves not contracted by the projection from `P4`.
    Residual,
    /// Curves contracted by the projection from `P4`.
    Contracted,
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveClass::Residual => "residual",
            CurveClass::Contracted => "contracted",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnnotationKind {
    /// The curves lie in `{l = l' = 0}` by an explicit equation argument.
    GeometricContainment,
    /// The route needs `X` general in a sense not checked numerically.
    GeneralityAssumption,
    /// The index of `C` in `T` is taken to be the surviving weight.
    DiffIndexAssumption,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Annotation {
    pub kind: AnnotationKind,
    pub note: String,
}

impl Annotation {
    fn new(kind: AnnotationKind, note: &str) -> Annotation {
        Annotation {
            kind,
            note: note.to_string(),
        }
    }
}

/// A verified step, carrying the values it was decided on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    ProjectionBound {
        status: ProjectionStatus,
        d: i64,
        a1a4: i64,
        a2a4: i64,
    },
    SharedFactor(SharedFactorCheck),
    ProjectionExtension(ExtensionReport),
    PencilBound(PencilVerdict),
    ContractedBound(ContractedVerdict),
    Divisibility {
        certificates: Vec<DivisibilityCertificate>,
    },
    SurfaceRows {
        certificates: Vec<SurfaceCertificate>,
    },
    TestClass(TestClassCertificate),
    IntegerDegree {
        a_cube: Rational,
    },
    GeometricContainment,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::ProjectionBound { .. } => "projection_bound",
            Route::SharedFactor(_) => "shared_factor",
            Route::ProjectionExtension(_) => "projection_extension",
            Route::PencilBound(_) => "pencil_bound",
            Route::ContractedBound(_) => "contracted_bound",
            Route::Divisibility { .. } => "divisibility",
            Route::SurfaceRows { .. } => "surface_rows",
            Route::TestClass(_) => "test_class",
            Route::IntegerDegree { .. } => "integer_degree",
            Route::GeometricContainment => "geometric_containment",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteEntry {
    pub curve_class: CurveClass,
    /// Empty when no route disposes of the class.
    pub routes: Vec<Route>,
    pub annotations: Vec<Annotation>,
}

impl RouteEntry {
    pub fn covered(&self) -> bool {
        !self.routes.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoverageStatus {
    Covered,
    Gap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCoverage {
    pub number: i64,
    pub case: CaseTag,
    pub entries: Vec<RouteEntry>,
    pub status: CoverageStatus,
    pub missing: Vec<CurveClass>,
}

impl FamilyCoverage {
    pub fn annotations(&self) -> impl Iterator<Item = &Annotation> {
        self.entries.iter().flat_map(|e| e.annotations.iter())
    }

    pub fn has_annotation(&self, kind: AnnotationKind) -> bool {
        self.annotations().any(|a| a.kind == kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub families: Vec<FamilyCoverage>,
    pub covered: usize,
    pub gaps: usize,
}

impl CoverageReport {
    pub fn get(&self, number: i64) -> Option<&FamilyCoverage> {
        self.families.iter().find(|f| f.number == number)
    }

    pub fn all_covered(&self) -> bool {
        self.gaps == 0
    }
}

const DIFF_NOTE: &str = "index of C in T at each coordinate point taken equal to its weight";

struct Inputs<'a> {
    rows: &'a [SurfaceRow],
    /// Verified certificates, aligned with `rows`; `None` if the row failed.
    row_certs: Vec<Option<SurfaceCertificate>>,
    net_certs: Vec<TestClassCertificate>,
}

impl Inputs<'_> {
    fn surface_certs(&self, family: i64, tag: BoundTag) -> Option<Vec<SurfaceCertificate>> {
        let matching: Vec<usize> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.family == family && r.fails.contains(&tag))
            .map(|(i, _)| i)
            .collect();
        if matching.is_empty() {
            return None;
        }
        matching
            .into_iter()
            .map(|i| self.row_certs[i].clone())
            .collect()
    }
}

fn residual_entry(f: &FamilyRecord, inputs: &Inputs<'_>) -> RouteEntry {
    let mut routes = Vec::new();
    let mut annotations = Vec::new();
    match classify_case(f) {
        CaseTag::NoPencil => {
            let v = projection_verdict(f).expect("case checked");
            match v.status {
                ProjectionStatus::Strong | ProjectionStatus::Weak => {
                    let shared = (hcf(f.weights.a1(), f.weights.a2()) > 1)
                        .then(|| shared_factor_check(f).expect("gcd checked"));
                    if shared.as_ref().is_none_or(|c| c.applies) {
                        routes.push(Route::ProjectionBound {
                            status: v.status,
                            d: v.d,
                            a1a4: v.a1a4,
                            a2a4: v.a2a4,
                        });
                        if let Some(c) = shared {
                            routes.push(Route::SharedFactor(c));
                        }
                        if v.status == ProjectionStatus::Weak {
                            annotations.push(Annotation::new(
                                AnnotationKind::GeneralityAssumption,
                                "{x = y = 0} ∩ X irreducible for general X",
                            ));
                        }
                    }
                }
                ProjectionStatus::Fails => {
                    routes.push(Route::ProjectionExtension(extension_report(f)));
                    annotations.push(Annotation::new(
                        AnnotationKind::GeneralityAssumption,
                        "extension needs {x = y = 0} ∩ X irreducible and no joining line of singular points on X; not checked",
                    ));
                }
            }
        }
        CaseTag::Pencil => {
            let v = pencil_verdict(f).expect("case checked");
            if v.applies {
                routes.push(Route::PencilBound(v));
            } else if let Some(certificates) = inputs.surface_certs(f.number, BoundTag::Pencil) {
                routes.push(Route::SurfaceRows { certificates });
                annotations.push(Annotation::new(
                    AnnotationKind::DiffIndexAssumption,
                    DIFF_NOTE,
                ));
            }
        }
        CaseTag::Net => {
            if integer_degree_filter(f).expect("case checked") {
                routes.push(Route::IntegerDegree { a_cube: f.a_cube });
            } else if let Some(c) = inputs.net_certs.iter().find(|c| c.family == f.number) {
                routes.push(Route::TestClass(c.clone()));
            }
        }
    }
    RouteEntry {
        curve_class: CurveClass::Residual,
        routes,
        annotations,
    }
}

fn contracted_entry(f: &FamilyRecord, inputs: &Inputs<'_>) -> RouteEntry {
    let mut routes = Vec::new();
    let mut annotations = Vec::new();
    let verdict = contracted_verdict(f);
    if verdict.safe() {
        routes.push(Route::ContractedBound(verdict));
    } else {
        let divisibility = contracted_divisibility_certificates(f)
            .ok()
            .filter(|c| !c.is_empty());
        match (divisibility, classify_case(f)) {
            (Some(certificates), CaseTag::Net) => {
                routes.push(Route::Divisibility { certificates });
                routes.push(Route::GeometricContainment);
                annotations.push(Annotation::new(
                    AnnotationKind::GeometricContainment,
                    "contracted curves lie in {x1 = x2 = 0} ∩ X after a coordinate change; geometric containment, out of scope",
                ));
            }
            (Some(certificates), _) => {
                if let Some(surface) = inputs.surface_certs(f.number, BoundTag::Contracted) {
                    routes.push(Route::Divisibility { certificates });
                    routes.push(Route::SurfaceRows {
                        certificates: surface,
                    });
                    annotations.push(Annotation::new(
                        AnnotationKind::DiffIndexAssumption,
                        DIFF_NOTE,
                    ));
                }
            }
            (None, _) => {}
        }
    }
    RouteEntry {
        curve_class: CurveClass::Contracted,
        routes,
        annotations,
    }
}

/// Assembles the audit from the family table and the surface-method rows.
/// Rows that fail to certify are simply unavailable as routes.
pub fn build_coverage(db: &FamilyDb, rows: &[SurfaceRow]) -> CoverageReport {
    let inputs = Inputs {
        rows,
        row_certs: rows
            .iter()
            .enumerate()
            .map(|(i, r)| certify_row(db, i, r).ok())
            .collect(),
        net_certs: certify_net_curves(db).unwrap_or_default(),
    };
    let families: Vec<FamilyCoverage> = db
        .iter()
        .map(|f| {
            let entries = vec![residual_entry(f, &inputs), contracted_entry(f, &inputs)];
            let missing: Vec<CurveClass> = entries
                .iter()
                .filter(|e| !e.covered())
                .map(|e| e.curve_class)
                .collect();
            FamilyCoverage {
                number: f.number,
                case: classify_case(f),
                status: if missing.is_empty() {
                    CoverageStatus::Covered
                } else {
                    CoverageStatus::Gap
                },
                entries,
                missing,
            }
        })
        .collect();
    let covered = families
        .iter()
        .filter(|f| f.status == CoverageStatus::Covered)
        .count();
    CoverageReport {
        gaps: families.len() - covered,
        covered,
        families,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certs::table::shipped_table;

    fn report() -> CoverageReport {
        build_coverage(&FamilyDb::shipped(), &shipped_table())
    }

    fn route_names(f: &FamilyCoverage, class: CurveClass) -> Vec<&'static str> {
        f.entries
            .iter()
            .find(|e| e.curve_class == class)
            .unwrap()
            .routes
            .iter()
            .map(Route::name)
            .collect()
    }

    #[test]
    fn shipped_data_is_fully_covered() {
        let r = report();
        assert_eq!((r.covered, r.gaps), (95, 0));
    }

    #[test]
    fn family_75_routes() {
        let r = report();
        let f = r.get(75).unwrap();
        assert_eq!(
            route_names(f, CurveClass::Residual),
            vec!["projection_bound"]
        );
        assert_eq!(
            route_names(f, CurveClass::Contracted),
            vec!["contracted_bound"]
        );
        assert!(f.annotations().next().is_none());
    }

    #[test]
    fn family_20_routes() {
        let r = report();
        let f = r.get(20).unwrap();
        assert_eq!(route_names(f, CurveClass::Residual), vec!["pencil_bound"]);
        assert_eq!(
            route_names(f, CurveClass::Contracted),
            vec!["divisibility", "surface_rows"]
        );
        let contracted = &f.entries[1];
        match &contracted.routes[1] {
            Route::SurfaceRows { certificates } => {
                assert_eq!(certificates.len(), 1);
                assert_eq!(certificates[0].m, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn family_2_carries_containment_annotation() {
        let r = report();
        let f = r.get(2).unwrap();
        assert_eq!(f.status, CoverageStatus::Covered);
        assert!(f.has_annotation(AnnotationKind::GeometricContainment));
    }

    #[test]
    fn missing_rows_leave_gaps() {
        let db = FamilyDb::shipped();
        let rows: Vec<SurfaceRow> = shipped_table()
            .into_iter()
            .filter(|r| r.family != 20)
            .collect();
        let r = build_coverage(&db, &rows);
        assert_eq!(r.gaps, 1);
        let f = r.get(20).unwrap();
        assert_eq!(f.status, CoverageStatus::Gap);
        assert_eq!(f.missing, vec![CurveClass::Contracted]);
    }

    #[test]
    fn failing_rows_are_not_used() {
        let db = FamilyDb::shipped();
        let mut rows = shipped_table();
        // value = m (A^3 - deg C) - deg C - 2 + Diff = 100/60 - 7/5 > 0
        for r in rows.iter_mut().filter(|r| r.family == 20) {
            r.m = 100;
        }
        let report = build_coverage(&db, &rows);
        assert_eq!(report.get(20).unwrap().status, CoverageStatus::Gap);
    }
}
