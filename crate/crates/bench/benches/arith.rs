use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hopfsuper::{Cyclo, Matrix};

fn cyclo(c: &mut Criterion) {
    let a = Cyclo::zeta(8, 1) + Cyclo::from_ratio(3, 7);
    let b = Cyclo::zeta(8, 3) - Cyclo::from_ratio(1, 2);
    c.bench_function("cyclo mul Q(zeta8)", |z| z.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("cyclo inv Q(zeta8)", |z| z.iter(|| black_box(&a).inv().unwrap()));
    let p = Cyclo::zeta(24, 5) + Cyclo::from_int(2);
    c.bench_function("cyclo pow Q(zeta24)", |z| z.iter(|| black_box(&p).pow(12)));
}

fn hilbert_like(n: usize) -> Matrix {
    let rows: Vec<Vec<Cyclo>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Cyclo::from_ratio(1, (i + j + 1) as i64) + Cyclo::zeta(8, ((i * j) % 8) as i64))
                .collect()
        })
        .collect();
    Matrix::from_rows(&rows)
}

fn linalg(c: &mut Criterion) {
    let m = hilbert_like(8);
    c.bench_function("det 8x8 over Q(zeta8)", |z| z.iter(|| black_box(&m).det()));
    c.bench_function("inverse 8x8 over Q(zeta8)", |z| z.iter(|| black_box(&m).inverse()));
}

criterion_group!(benches, cyclo, linalg);
criterion_main!(benches);
