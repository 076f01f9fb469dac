//! The famous 95 families of quasismooth anticanonical Fano 3-fold
//! hypersurfaces `X_d ⊂ P(1, a1, a2, a3, a4)`, numbered in the standard
//! Fletcher–Reid order.
//!
//! The table is read from a tab-separated file:
//!
//! ```text
//! number<TAB>d<TAB>a0<TAB>a1<TAB>a2<TAB>a3<TAB>a4
//! ```
//!
//! Lines starting with `#` are comments. Exactly 95 data lines are expected,
//! ascending by number from 1.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::FamilyDbError;
use crate::rational::Rational;
use crate::wps::{anticanonical_cube, Weights};

pub const FAMILY_COUNT: usize = 95;

/// The shipped family table.
pub const SHIPPED_FAMILIES_TSV: &str = include_str!("../data/families.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub number: i64,
    pub d: i64,
    pub weights: Weights,
    pub a_cube: Rational,
}

impl FamilyRecord {
    /// Validates and builds a record, computing the cached `A^3`.
    pub fn new(number: i64, d: i64, weights: [i64; 5]) -> Result<FamilyRecord, FamilyDbError> {
        let invalid = |violation: String| FamilyDbError::Validation { number, violation };
        if !(1..=FAMILY_COUNT as i64).contains(&number) {
            return Err(invalid(format!("family number {number} outside 1..=95")));
        }
        if d < 1 {
            return Err(invalid(format!("degree d = {d} must be positive")));
        }
        let weights = Weights::new(weights).map_err(|e| invalid(e.to_string()))?;
        let sum = weights.anticanonical_degree();
        if d != sum {
            return Err(invalid(format!(
                "d = Σaᵢ violated: d = {d} but a1 + a2 + a3 + a4 = {sum}"
            )));
        }
        Ok(FamilyRecord {
            number,
            d,
            weights,
            a_cube: anticanonical_cube(d, &weights),
        })
    }

    pub fn to_tsv_line(&self) -> String {
        let a = self.weights.as_array();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.number, self.d, a[0], a[1], a[2], a[3], a[4]
        )
    }
}

/// An immutable, validated table of the 95 families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDb {
    records: Vec<FamilyRecord>,
}

fn parse_line(line_no: usize, line: &str) -> Result<FamilyRecord, FamilyDbError> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 7 {
        return Err(FamilyDbError::Parse {
            line: line_no,
            message: format!("expected 7 tab-separated fields, found {}", fields.len()),
        });
    }
    let mut values = [0i64; 7];
    for (slot, field) in values.iter_mut().zip(&fields) {
        *slot = field.trim().parse().map_err(|_| FamilyDbError::Parse {
            line: line_no,
            message: format!("not an integer: {field:?}"),
        })?;
    }
    FamilyRecord::new(
        values[0],
        values[1],
        [values[2], values[3], values[4], values[5], values[6]],
    )
}

/// Parses and validates a family table.
pub fn load_families(text: &str) -> Result<Vec<FamilyRecord>, FamilyDbError> {
    let mut records = Vec::with_capacity(FAMILY_COUNT);
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let record = parse_line(idx + 1, line)?;
        let expected = records.len() as i64 + 1;
        if record.number != expected {
            return Err(FamilyDbError::Validation {
                number: record.number,
                violation: format!(
                    "out of order on line {}: expected family {expected}",
                    idx + 1
                ),
            });
        }
        records.push(record);
    }
    if records.len() != FAMILY_COUNT {
        return Err(FamilyDbError::Count(records.len()));
    }
    Ok(records)
}

impl FamilyDb {
    pub fn from_tsv(text: &str) -> Result<FamilyDb, FamilyDbError> {
        load_families(text).map(|records| FamilyDb { records })
    }

    pub fn from_reader<R: Read>(mut reader: R) -> Result<FamilyDb, FamilyDbError> {
        let mut text = String::new();
        reader
            .read_to_string(&mut text)
            .map_err(|e| FamilyDbError::Io(e.to_string()))?;
        FamilyDb::from_tsv(&text)
    }

    /// The table compiled into the crate.
    pub fn shipped() -> FamilyDb {
        FamilyDb::from_tsv(SHIPPED_FAMILIES_TSV).expect("shipped family table is valid")
    }

    pub fn get(&self, number: i64) -> Result<&FamilyRecord, FamilyDbError> {
        if (1..=FAMILY_COUNT as i64).contains(&number) {
            Ok(&self.records[(number - 1) as usize])
        } else {
            Err(FamilyDbError::NotFound(number))
        }
    }

    pub fn records(&self) -> &[FamilyRecord] {
        &self.records
    }

    pub fn iter(&self) -> impl Iterator<Item = &FamilyRecord> {
        self.records.iter()
    }

    /// Canonical TSV: one line per family, no comments.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_tsv_line());
            out.push('\n');
        }
        out
    }
}
