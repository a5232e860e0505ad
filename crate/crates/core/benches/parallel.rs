use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hsc_core::algebra::{catalog, cyclic};
use hsc_core::eval::formula_valid;
use hsc_core::jankov::{in_sh, jankov_formula};
use hsc_core::morphisms::{find_homs, HomMode};
use hsc_core::par::Exec;
use hsc_core::quasivariety::{primitive, totally_non_projective, QvarHandle};
use hsc_core::Budgets;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn primitivity(c: &mut Criterion) {
    let mut g = c.benchmark_group("primitive-cyclic-11");
    g.sample_size(10);
    let b = cyclic(11).unwrap();
    for (label, exec) in MODES {
        let q = QvarHandle::new(b.clone(), Budgets::default().with_exec(exec)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(label), &q, |bench, q| {
            bench.iter(|| black_box(primitive(q).unwrap().verdict))
        });
    }
    g.finish();
}

fn power_witness(c: &mut Criterion) {
    let mut g = c.benchmark_group("tnp-c7p");
    g.sample_size(10);
    let a = catalog("C7p").unwrap();
    for (label, exec) in MODES {
        let budgets = Budgets::default().with_exec(exec);
        g.bench_with_input(BenchmarkId::from_parameter(label), &budgets, |bench, budgets| {
            bench.iter(|| black_box(totally_non_projective(&a, budgets).unwrap().verdict))
        });
    }
    g.finish();
}

fn homomorphisms(c: &mut Criterion) {
    let mut g = c.benchmark_group("homs-c16-c16");
    let a = catalog("C16").unwrap();
    for (label, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(label), |bench| {
            bench.iter(|| black_box(find_homs(&a, &a, HomMode::All, usize::MAX, exec).homs.len()))
        });
    }
    g.finish();
}

fn valuation_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("jankov-c7p-in-c12p");
    g.sample_size(10);
    let a = catalog("C7p").unwrap();
    let b = catalog("C12p").unwrap();
    let x = jankov_formula(&a).unwrap();
    for (label, exec) in MODES {
        let budgets = Budgets::default().with_exec(exec);
        g.bench_with_input(BenchmarkId::from_parameter(label), &budgets, |bench, budgets| {
            bench.iter(|| {
                let valid = formula_valid(&b, &x.formula, budgets).unwrap().is_valid();
                black_box((valid, in_sh(&a, &b, budgets).unwrap().verdict))
            })
        });
    }
    g.finish();
}

criterion_group!(benches, primitivity, power_witness, homomorphisms, valuation_sweep);
criterion_main!(benches);
