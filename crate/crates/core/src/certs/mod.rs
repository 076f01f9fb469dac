//! Numeric exclusion certificates.

pub mod extension;
pub mod surface;
pub mod table;
pub mod test_class;

pub use extension::{extension_report, projection_extension_checks, ExtensionReport, Relation};
pub use surface::{
    curve_self_intersection, different_total, surface_exclusion_value, two_curve_certificate,
    SurfaceCertificate, SurfaceMethod, SurfaceOutcome, TwoCurveCheck,
};
pub use table::{
    check_table, parse_table, shipped_table, verify_surface_table, BoundTag, SurfaceRow,
    TableReport, SHIPPED_TABLE_TSV,
};
pub use test_class::{
    certify_net_curves, test_class_value, test_class_value_expanded, TestClassCertificate,
    NET_CURVES,
};
