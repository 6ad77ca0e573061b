use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hopfsuper::analysis::fingerprint;
use hopfsuper::characters::hopf_characters;
use hopfsuper::hopf::verify_axioms;
use hopfsuper::presentation::{builtin_spec, builtin_spec_source, Compiled};
use hopfsuper::superdata::{admissible_data, coinvariant_superalgebra};

fn compile(c: &mut Criterion) {
    let src = builtin_spec_source("H8").unwrap().unwrap();
    c.bench_function("compile H8", |z| z.iter(|| Compiled::from_source(black_box(&src)).unwrap()));
    let src = builtin_spec_source("H16(zeta4)").unwrap().unwrap();
    c.bench_function("compile H16", |z| z.iter(|| Compiled::from_source(black_box(&src)).unwrap()));
}

fn analysis(c: &mut Criterion) {
    let h8 = builtin_spec("H8").unwrap();
    let a4 = builtin_spec("A4(zeta4)").unwrap();
    c.bench_function("axioms H8", |z| z.iter(|| verify_axioms(black_box(&h8))));
    c.bench_function("characters H8", |z| z.iter(|| hopf_characters(black_box(&h8)).unwrap()));
    c.bench_function("fingerprint A4", |z| z.iter(|| fingerprint(black_box(&a4)).unwrap()));
}

fn superdata(c: &mut Criterion) {
    let h8 = builtin_spec("H8").unwrap();
    c.bench_function("admissible data H8", |z| z.iter(|| admissible_data(black_box(&h8)).unwrap()));
    let d = admissible_data(&h8).unwrap().into_iter().find(|d| d.is_super()).unwrap();
    c.bench_function("coinvariant H8", |z| z.iter(|| coinvariant_superalgebra(black_box(&h8), &d).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = compile, analysis, superdata
}
criterion_main!(benches);
