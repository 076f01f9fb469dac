use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fano95::certs::{parse_table, shipped_table, verify_surface_table, SHIPPED_TABLE_TSV};
use fano95::family_db::SHIPPED_FAMILIES_TSV;
use fano95::lemmas::derive_lists;
use fano95::{build_coverage, FamilyDb};

fn load(c: &mut Criterion) {
    c.bench_function("load_families", |b| {
        b.iter(|| FamilyDb::from_tsv(black_box(SHIPPED_FAMILIES_TSV)).unwrap())
    });
    c.bench_function("parse_table", |b| {
        b.iter(|| parse_table(black_box(SHIPPED_TABLE_TSV)).unwrap())
    });
}

fn verify(c: &mut Criterion) {
    let db = FamilyDb::shipped();
    let rows = shipped_table();
    c.bench_function("derive_lists", |b| b.iter(|| derive_lists(black_box(&db))));
    c.bench_function("verify_surface_table", |b| {
        b.iter(|| verify_surface_table(black_box(&db), black_box(&rows)).unwrap())
    });
    c.bench_function("build_coverage", |b| {
        b.iter(|| build_coverage(black_box(&db), black_box(&rows)))
    });
}

criterion_group!(benches, load, verify);
criterion_main!(benches);
