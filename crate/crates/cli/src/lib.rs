//! The `audit` command line: loads the family and surface-row tables,
//! re-derives the exception lists, runs every certificate and assembles the
//! coverage audit.
//!
//! All logic lives here so it can be driven from tests; `main` only parses
//! arguments and prints.

use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fano95::audit::{CoverageReport, FamilyCoverage, Route};
use fano95::certs::{check_table, parse_table, TestClassCertificate, NET_CURVES};
use fano95::lemmas::{derive_lists, symmetric_difference, DerivedLists};
use fano95::{build_coverage, FamilyDb, FamilyRecord, Rational, SurfaceCertificate, SurfaceRow};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

pub const DATA_DIR_VAR: &str = "AUDIT_DATA_DIR";

/// Expected exception lists. The classifier never reads these; they are only
/// compared against its output.
pub const EXPECTED_LISTS: [(&str, &[i64]); 6] = [
    (
        "projection_strong",
        &[
            40, 45, 57, 58, 60, 61, 66, 68, 69, 74, 75, 76, 78, 79, 80, 81, 83, 84, 85, 86, 87, 90,
            91, 92, 93, 94, 95,
        ],
    ),
    (
        "projection_weak",
        &[
            23, 32, 33, 37, 38, 39, 42, 43, 44, 48, 49, 52, 55, 56, 59, 63, 64, 65, 72, 73, 77, 89,
        ],
    ),
    ("projection_fails", &[18, 19, 22, 27, 28]),
    (
        "pencil_exceptions",
        &[7, 9, 11, 12, 13, 15, 16, 17, 21, 24, 29, 34],
    ),
    (
        "contracted_unresolved",
        &[2, 5, 7, 8, 12, 13, 16, 18, 20, 24, 25, 26, 46],
    ),
    ("shared_factor", &[18, 22, 28, 43, 52, 59, 69, 73, 81]),
];

#[derive(Debug, Parser)]
#[command(
    name = "audit",
    version,
    about = "Verify curve exclusion on the 95 Fano hypersurface families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load the family table and check every record.
    Validate(FamilyArgs),
    /// Derive the exception lists and compare them with the expected ones.
    Lists(ListsArgs),
    /// Run the test-class and surface-method certificates.
    Certify(TableArgs),
    /// Lists, certificates and the per-family coverage audit.
    Full(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Family table; defaults to $AUDIT_DATA_DIR/families.tsv.
    #[arg(long)]
    pub families: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ListsArgs {
    #[command(flatten)]
    pub families: FamilyArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub families: FamilyArgs,
    /// Surface-method rows; defaults to $AUDIT_DATA_DIR/surface_rows.tsv.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: String) -> Outcome {
        Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListMismatch {
    pub list: String,
    pub symmetric_difference: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSet {
    pub test_class: Vec<TestClassCertificate>,
    pub surface: Vec<SurfaceCertificate>,
}

/// Top-level JSON document of `audit full`.
#[derive(Debug, Serialize)]
pub struct FullReport<'a> {
    pub families: &'a [FamilyRecord],
    pub certificates: &'a CertificateSet,
    pub lists: &'a DerivedLists,
    pub coverage: &'a [FamilyCoverage],
}

fn resolve(explicit: &Option<PathBuf>, file: &str, flag: &str) -> Result<PathBuf, String> {
    if let Some(p) = explicit {
        return Ok(p.clone());
    }
    match env::var_os(DATA_DIR_VAR) {
        Some(dir) if !dir.is_empty() => Ok(Path::new(&dir).join(file)),
        _ => Err(format!("no {flag} given and {DATA_DIR_VAR} is not set")),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_db(args: &FamilyArgs) -> Result<FamilyDb, String> {
    let path = resolve(&args.families, "families.tsv", "--families")?;
    let text = read(&path)?;
    FamilyDb::from_tsv(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_rows(args: &TableArgs) -> Result<Vec<SurfaceRow>, String> {
    let path = resolve(&args.table, "surface_rows.tsv", "--table")?;
    let text = read(&path)?;
    parse_table(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn list_mismatches(lists: &DerivedLists) -> Vec<ListMismatch> {
    lists
        .named()
        .into_iter()
        .zip(EXPECTED_LISTS)
        .filter_map(|((name, got), (expected_name, expected))| {
            debug_assert_eq!(name, expected_name);
            let diff = symmetric_difference(got, expected);
            (!diff.is_empty()).then(|| ListMismatch {
                list: name.to_string(),
                symmetric_difference: diff,
            })
        })
        .collect()
}

/// Every test-class certificate, valid or not, with a message per failure.
pub fn test_class_certificates(db: &FamilyDb) -> (Vec<TestClassCertificate>, Vec<String>) {
    let mut certs = Vec::new();
    let mut failures = Vec::new();
    for c in &NET_CURVES {
        let f = match db.get(c.family) {
            Ok(f) => f,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        let cert = TestClassCertificate::new(
            c.family,
            c.b,
            f.a_cube,
            Rational::new(c.deg_c.0, c.deg_c.1),
            c.p_a,
        );
        if !cert.valid() {
            failures.push(format!(
                "test-class certificate for family {} is not negative: MB² = {}",
                c.family, cert.value
            ));
        }
        certs.push(cert);
    }
    (certs, failures)
}

/// All certificates plus the failure messages, in family then row order.
pub fn certify(db: &FamilyDb, rows: &[SurfaceRow]) -> (CertificateSet, Vec<String>) {
    let (test_class, mut failures) = test_class_certificates(db);
    let report = check_table(db, rows);
    failures.extend(report.failures.iter().map(|e| e.to_string()));
    (
        CertificateSet {
            test_class,
            surface: report.certificates,
        },
        failures,
    )
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn write_lists(out: &mut String, lists: &DerivedLists) {
    for (name, xs) in lists.named() {
        let _ = writeln!(out, "{name}: {}", join(xs));
    }
}

fn write_mismatches(err: &mut String, mismatches: &[ListMismatch]) {
    for m in mismatches {
        let _ = writeln!(
            err,
            "list {} mismatch: symmetric difference {}",
            m.list,
            join(&m.symmetric_difference)
        );
    }
}

pub fn test_class_line(c: &TestClassCertificate) -> String {
    format!(
        "family {}: M = {}A - E, A³ = {}, deg C = {}, p_a = {}: MB² = {}",
        c.family, c.b, c.a_cube, c.deg_c, c.p_a, c.value
    )
}

fn write_certificates(out: &mut String, certs: &CertificateSet) {
    let _ = writeln!(out, "test-class certificates:");
    for c in &certs.test_class {
        let _ = writeln!(out, "  {}", test_class_line(c));
    }
    let _ = writeln!(out, "surface certificates:");
    for c in &certs.surface {
        let _ = writeln!(out, "  {}", c.summary());
    }
}

fn route_names(routes: &[Route]) -> String {
    if routes.is_empty() {
        "none".to_string()
    } else {
        routes
            .iter()
            .map(Route::name)
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn write_coverage(out: &mut String, report: &CoverageReport) {
    for f in &report.families {
        let _ = write!(out, "family {} [{}]: {:?}", f.number, f.case, f.status);
        for e in &f.entries {
            let _ = write!(out, "; {}: {}", e.curve_class, route_names(&e.routes));
        }
        out.push('\n');
        for a in f.annotations() {
            let _ = writeln!(out, "  note ({:?}): {}", a.kind, a.note);
        }
    }
    let _ = writeln!(out, "covered: {}, gaps: {}", report.covered, report.gaps);
}

pub fn cmd_validate(args: &FamilyArgs) -> Outcome {
    match load_db(args) {
        Ok(db) => Outcome {
            code: EXIT_OK,
            stdout: format!("ok: {} families validated\n", db.records().len()),
            stderr: String::new(),
        },
        Err(e) => Outcome::input_error(e),
    }
}

pub fn cmd_lists(args: &ListsArgs) -> Outcome {
    let db = match load_db(&args.families) {
        Ok(db) => db,
        Err(e) => return Outcome::input_error(e),
    };
    let lists = derive_lists(&db);
    let mismatches = list_mismatches(&lists);
    let mut out = Outcome::default();
    match args.format {
        Format::Text => write_lists(&mut out.stdout, &lists),
        Format::Json => out.stdout = to_json(&lists),
    }
    write_mismatches(&mut out.stderr, &mismatches);
    if !mismatches.is_empty() {
        out.code = EXIT_CHECK_FAILED;
    }
    out
}

fn load_both(args: &TableArgs) -> Result<(FamilyDb, Vec<SurfaceRow>), Outcome> {
    let db = load_db(&args.families).map_err(Outcome::input_error)?;
    let rows = load_rows(args).map_err(Outcome::input_error)?;
    Ok((db, rows))
}

pub fn cmd_certify(args: &TableArgs) -> Outcome {
    let (db, rows) = match load_both(args) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let (certs, failures) = certify(&db, &rows);
    let mut out = Outcome::default();
    match args.format {
        Format::Text => write_certificates(&mut out.stdout, &certs),
        Format::Json => out.stdout = to_json(&serde_json::json!({ "certificates": certs })),
    }
    for f in &failures {
        let _ = writeln!(out.stderr, "certificate failure: {f}");
    }
    if !failures.is_empty() {
        out.code = EXIT_CHECK_FAILED;
    }
    out
}

pub fn cmd_full(args: &TableArgs) -> Outcome {
    let (db, rows) = match load_both(args) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let lists = derive_lists(&db);
    let mismatches = list_mismatches(&lists);
    let (certs, failures) = certify(&db, &rows);
    let coverage = build_coverage(&db, &rows);
    let mut out = Outcome::default();
    match args.format {
        Format::Text => {
            let s = &mut out.stdout;
            let _ = writeln!(s, "families: {} validated", db.records().len());
            write_lists(s, &lists);
            write_certificates(s, &certs);
            write_coverage(s, &coverage);
        }
        Format::Json => {
            out.stdout = to_json(&FullReport {
                families: db.records(),
                certificates: &certs,
                lists: &lists,
                coverage: &coverage.families,
            })
        }
    }
    write_mismatches(&mut out.stderr, &mismatches);
    for f in &failures {
        let _ = writeln!(out.stderr, "certificate failure: {f}");
    }
    for f in coverage.families.iter().filter(|f| !f.missing.is_empty()) {
        let missing: Vec<String> = f.missing.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out.stderr,
            "gap: family {} has no route for {} curves",
            f.number,
            missing.join(", ")
        );
    }
    if !mismatches.is_empty() || !failures.is_empty() || !coverage.all_covered() {
        out.code = EXIT_CHECK_FAILED;
    }
    out
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate(a) => cmd_validate(a),
        Command::Lists(a) => cmd_lists(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Full(a) => cmd_full(a),
    }
}
