//! Exact-arithmetic verification of curve exclusion on the famous 95
//! families of Fano 3-fold weighted hypersurfaces.
//!
//! The crate re-derives, from the weights alone, every numeric step used to
//! exclude low-degree curves as canonical centres:
//!
//! * [`wps`]: degrees and coordinate points in `P(1, a1, a2, a3, a4)`;
//! * [`family_db`]: the validated table of the 95 families;
//! * [`lemmas`]: case division, degree bounds and divisibility certificates;
//! * [`certs`]: test-class and surface-method certificates;
//! * [`audit`]: the per-family coverage ledger.
//!
//! All arithmetic is on [`Rational`], an exact `i64` fraction that panics on
//! overflow.

pub mod audit;
pub mod certs;
pub mod error;
pub mod family_db;
pub mod lemmas;
pub mod rational;
pub mod wps;

pub use audit::{build_coverage, CoverageReport, CoverageStatus, CurveClass};
pub use certs::{SurfaceCertificate, SurfaceMethod, SurfaceRow, TestClassCertificate};
pub use error::{CertError, FamilyDbError, LemmaError, TableError, WeightsError};
pub use family_db::{FamilyDb, FamilyRecord};
pub use lemmas::{CaseTag, DerivedLists};
pub use rational::Rational;
pub use wps::{StratumCurve, Weights};
