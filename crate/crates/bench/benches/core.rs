use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use srep_bench::{chamber_points, instances};
use srep_core::cayley;
use srep_core::ferus::{self, ScanGrid};
use srep_core::orbits;
use srep_core::pairdb::PairDb;
use srep_core::report::{self, Table1Grid};
use srep_core::{Family, RootSystem, RootSystemType};

fn root_systems(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for family in [Family::E8, Family::F4, Family::BC] {
        let t = RootSystemType::new(family, family.fixed_rank().unwrap_or(8)).unwrap();
        group.bench_function(t.to_string(), |b| {
            b.iter(|| RootSystem::build(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let pairs = instances(4, 2);
    let points: Vec<_> = pairs.iter().map(|p| (p, chamber_points(p, 32))).collect();
    c.bench_function("classify/database", |b| {
        b.iter(|| {
            for (pair, hs) in &points {
                for h in hs {
                    black_box(orbits::classify(pair, h).unwrap());
                }
            }
        })
    });
}

fn tables(c: &mut Criterion) {
    let db = PairDb::embedded().unwrap();
    c.bench_function("table1/numeric", |b| {
        b.iter(|| report::table1_numeric(&db, &Table1Grid::default()).unwrap())
    });
    c.bench_function("table1/check", |b| {
        b.iter(|| report::check_table1(&db, report::EXPECTED_TABLE1).unwrap())
    });
    let mut group = c.benchmark_group("ferus");
    group.sample_size(10);
    group.bench_function("scan", |b| {
        b.iter(|| ferus::equality_scan(&db, ScanGrid::default()).unwrap())
    });
    group.bench_function("numbers", |b| {
        b.iter(|| (1..=4096).map(ferus::ferus_number).sum::<u64>())
    });
    group.finish();
}

fn appendix(c: &mut Criterion) {
    let mut group = c.benchmark_group("appendix");
    for family in cayley::APPENDIX_ALGEBRAS {
        group.bench_function(family.to_string(), |b| {
            b.iter(|| cayley::appendix(black_box(family)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, root_systems, classification, tables, appendix);
criterion_main!(benches);
