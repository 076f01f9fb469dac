//! The table of curves excluded by surface methods.
//!
//! Row format, one per line, `#` for comments:
//!
//! ```text
//! family<TAB>vanishing<TAB>fails<TAB>method<TAB>m
//! ```
//!
//! `vanishing` lists three coordinate indices (`0,2,3` is `{x0 = y = z = 0}`
//! on `P(1,1,3,4,5)`); `fails` lists the bounds the family escapes, from
//! `proj`, `pencil` and `contracted`; `method` is `41` (single curve) or `42`
//! (curve pair); `m` is the multiple in `|mA - C|`.
//!
//! The `fails` column is not trusted: it is compared against the verdicts
//! derived from the weights.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certs::surface::{SurfaceCertificate, SurfaceMethod};
use crate::error::TableError;
use crate::family_db::{FamilyDb, FamilyRecord};
use crate::lemmas::{
    classify_case, contracted_verdict, pencil_verdict, projection_verdict, CaseTag,
    ProjectionStatus,
};
use crate::wps::StratumCurve;

pub const SHIPPED_TABLE_TSV: &str = include_str!("../../data/surface_rows.tsv");

/// A low-degree bound that a family fails to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundTag {
    /// Projection bound for `a1 > 1` (`d >= a2 a4`).
    Projection,
    /// Pencil bound for `a1 = 1 < a2` (`d >= a2 a4`).
    Pencil,
    /// Contracted-curve bound (`P4 ∈ X` and `d >= a1 a2 a3`).
    Contracted,
}

impl BoundTag {
    pub fn tag(self) -> &'static str {
        match self {
            BoundTag::Projection => "proj",
            BoundTag::Pencil => "pencil",
            BoundTag::Contracted => "contracted",
        }
    }
}

impl fmt::Display for BoundTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BoundTag {
    type Err = String;

    fn from_str(s: &str) -> Result<BoundTag, String> {
        match s.trim() {
            "proj" => Ok(BoundTag::Projection),
            "pencil" => Ok(BoundTag::Pencil),
            "contracted" => Ok(BoundTag::Contracted),
            other => Err(format!("unknown bound tag {other:?}")),
        }
    }
}

fn join_tags(tags: &[BoundTag]) -> String {
    tags.iter().map(|t| t.tag()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceRow {
    pub family: i64,
    pub vanishing: [usize; 3],
    /// Sorted and deduplicated.
    pub fails: Vec<BoundTag>,
    pub method: SurfaceMethod,
    pub m: i64,
}

impl SurfaceRow {
    pub fn to_tsv_line(&self) -> String {
        let v = self.vanishing;
        format!(
            "{}\t{},{},{}\t{}\t{}\t{}",
            self.family,
            v[0],
            v[1],
            v[2],
            join_tags(&self.fails),
            self.method,
            self.m
        )
    }
}

fn parse_row(line_no: usize, line: &str) -> Result<SurfaceRow, TableError> {
    let err = |message: String| TableError::Parse {
        line: line_no,
        message,
    };
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 5 {
        return Err(err(format!(
            "expected 5 tab-separated fields, found {}",
            fields.len()
        )));
    }
    let family: i64 = fields[0]
        .trim()
        .parse()
        .map_err(|_| err(format!("bad family number {:?}", fields[0])))?;
    let idx: Vec<usize> = fields[1]
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| err(format!("bad coordinate list {:?}", fields[1])))?;
    let mut vanishing: [usize; 3] = idx.as_slice().try_into().map_err(|_| {
        err(format!(
            "need exactly three coordinates, got {:?}",
            fields[1]
        ))
    })?;
    vanishing.sort_unstable();
    if vanishing[2] > 4 || vanishing[0] == vanishing[1] || vanishing[1] == vanishing[2] {
        return Err(err(format!(
            "coordinates must be three distinct indices in 0..=4, got {:?}",
            fields[1]
        )));
    }
    let mut fails: Vec<BoundTag> = fields[2]
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    fails.sort_unstable();
    fails.dedup();
    let method: SurfaceMethod = fields[3].parse().map_err(err)?;
    let m: i64 = fields[4]
        .trim()
        .parse()
        .map_err(|_| err(format!("bad multiple {:?}", fields[4])))?;
    if m < 1 {
        return Err(err(format!("multiple must be positive, got {m}")));
    }
    Ok(SurfaceRow {
        family,
        vanishing,
        fails,
        method,
        m,
    })
}

pub fn parse_table(text: &str) -> Result<Vec<SurfaceRow>, TableError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
        .map(|(n, l)| parse_row(n, l))
        .collect()
}

pub fn shipped_table() -> Vec<SurfaceRow> {
    parse_table(SHIPPED_TABLE_TSV).expect("shipped table parses")
}

/// Bounds the family fails, derived from its weights.
pub fn derived_fails(f: &FamilyRecord) -> Vec<BoundTag> {
    let mut out = Vec::new();
    match classify_case(f) {
        CaseTag::NoPencil => {
            if projection_verdict(f).expect("case checked").status == ProjectionStatus::Fails {
                out.push(BoundTag::Projection);
            }
        }
        CaseTag::Pencil => {
            if !pencil_verdict(f).expect("case checked").applies {
                out.push(BoundTag::Pencil);
            }
        }
        CaseTag::Net => {}
    }
    if !contracted_verdict(f).safe() {
        out.push(BoundTag::Contracted);
    }
    out
}

/// Verifies one row. `row_index` is zero-based and used only for messages.
pub fn certify_row(
    db: &FamilyDb,
    row_index: usize,
    row: &SurfaceRow,
) -> Result<SurfaceCertificate, TableError> {
    let row_no = row_index + 1;
    let f = db.get(row.family).map_err(|_| TableError::UnknownFamily {
        row: row_no,
        family: row.family,
    })?;
    let derived = derived_fails(f);
    if derived != row.fails {
        return Err(TableError::FailsMismatch {
            row: row_no,
            family: row.family,
            listed: join_tags(&row.fails),
            derived: join_tags(&derived),
        });
    }
    let curve = StratumCurve::new(&f.weights, row.vanishing)
        .expect("vanishing indices validated at parse time");
    let cert = SurfaceCertificate::compute(f, curve, row.m, row.method);
    if !cert.valid() {
        return Err(TableError::InvalidCertificate {
            row: row_no,
            family: row.family,
            detail: cert.summary(),
        });
    }
    Ok(cert)
}

/// Certificates for every row that verifies, plus the failures, in row order.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub certificates: Vec<SurfaceCertificate>,
    pub failures: Vec<TableError>,
}

impl TableReport {
    pub fn into_result(self) -> Result<Vec<SurfaceCertificate>, TableError> {
        if self.failures.is_empty() {
            Ok(self.certificates)
        } else {
            Err(TableError::Rows(self.failures))
        }
    }
}

pub fn check_table(db: &FamilyDb, rows: &[SurfaceRow]) -> TableReport {
    let mut report = TableReport {
        certificates: Vec::with_capacity(rows.len()),
        failures: Vec::new(),
    };
    for (i, row) in rows.iter().enumerate() {
        match certify_row(db, i, row) {
            Ok(c) => report.certificates.push(c),
            Err(e) => report.failures.push(e),
        }
    }
    report
}

/// Verifies every row, failing if any row does not certify.
pub fn verify_surface_table(
    db: &FamilyDb,
    rows: &[SurfaceRow],
) -> Result<Vec<SurfaceCertificate>, TableError> {
    check_table(db, rows).into_result()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certs::surface::SurfaceOutcome;
    use crate::rational::Rational;

    #[test]
    fn parses_rows() {
        let row = parse_row(1, "20\t3,0,2\tcontracted\t41\t4").unwrap();
        assert_eq!(row.vanishing, [0, 2, 3]);
        assert_eq!(row.fails, vec![BoundTag::Contracted]);
        assert_eq!(row.method, SurfaceMethod::SingleCurve);
        assert_eq!(row.to_tsv_line(), "20\t0,2,3\tcontracted\t41\t4");
    }

    #[test]
    fn rejects_malformed_rows() {
        for bad in [
            "20\t0,2\tcontracted\t41\t4",
            "20\t0,2,2\tcontracted\t41\t4",
            "20\t0,2,5\tcontracted\t41\t4",
            "20\t0,2,3\tlemma\t41\t4",
            "20\t0,2,3\tcontracted\t43\t4",
            "20\t0,2,3\tcontracted\t41\t0",
            "20\t0,2,3\tcontracted\t41",
        ] {
            assert!(
                matches!(parse_row(7, bad), Err(TableError::Parse { line: 7, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn shipped_rows_certify() {
        let db = FamilyDb::shipped();
        let rows = shipped_table();
        assert_eq!(rows.len(), 21);
        let certs = verify_surface_table(&db, &rows).unwrap();
        assert_eq!(certs.len(), 21);
    }

    #[test]
    fn row_examples() {
        let db = FamilyDb::shipped();
        let c = certify_row(
            &db,
            0,
            &parse_row(1, "20\t0,2,3\tcontracted\t41\t4").unwrap(),
        )
        .unwrap();
        assert!(matches!(
            c.outcome,
            SurfaceOutcome::SingleCurve { exclusion_value, .. } if exclusion_value == Rational::new(-4, 3)
        ));
        let c = certify_row(&db, 0, &parse_row(1, "29\t0,2,4\tpencil\t42\t2").unwrap()).unwrap();
        assert!(c.valid());
        let c = certify_row(
            &db,
            0,
            &parse_row(1, "46\t1,2,3\tcontracted\t41\t7").unwrap(),
        )
        .unwrap();
        assert!(c.valid());
    }

    #[test]
    fn fails_column_is_cross_checked() {
        let db = FamilyDb::shipped();
        let row = parse_row(1, "20\t0,2,3\tpencil\t41\t4").unwrap();
        assert!(matches!(
            certify_row(&db, 4, &row),
            Err(TableError::FailsMismatch {
                row: 5,
                family: 20,
                ..
            })
        ));
    }

    #[test]
    fn failing_certificate_is_reported_with_values() {
        let db = FamilyDb::shipped();
        // value = m (A^3 - deg C) - deg C - 2 + Diff = 100/60 - 7/5 > 0
        let row = parse_row(1, "20\t0,2,3\tcontracted\t41\t100").unwrap();
        let err = certify_row(&db, 0, &row).unwrap_err();
        match err {
            TableError::InvalidCertificate { detail, .. } => {
                assert!(detail.contains("C²_T"), "{detail}");
            }
            other => panic!("unexpected {other:?}"),
        }
        let report = check_table(&db, &[row]);
        assert_eq!(report.failures.len(), 1);
        assert!(report.into_result().is_err());
    }

    #[test]
    fn unknown_family() {
        let db = FamilyDb::shipped();
        let row = parse_row(1, "96\t0,2,3\tcontracted\t41\t4").unwrap();
        assert_eq!(
            certify_row(&db, 0, &row).unwrap_err(),
            TableError::UnknownFamily { row: 1, family: 96 }
        );
    }
}
