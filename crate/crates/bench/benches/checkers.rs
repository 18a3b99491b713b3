use criterion::{criterion_group, criterion_main, Criterion};
use hopfpi::brace::{check_brace, opposite_brace};
use hopfpi::braiding::{braiding_c, check_braid_equation};
use hopfpi::enumerate::enumerate_group_rb;
use hopfpi::gallery::{gallery_algebra, gallery_group};
use hopfpi::hopf::check_hopf_pi_algebra;
use hopfpi::post_hopf::{check_post_hopf, post_hopf_from_brace};
use hopfpi::rota_baxter::{antipode_rb, brace_from_rb, check_rb};
use hopfpi::Field;

fn algebra(key: &str) -> hopfpi::HopfPiAlgebra {
    gallery_algebra(Field::Rational, key).expect("gallery key")
}

fn hopf(c: &mut Criterion) {
    for key in ["Q8/klein", "D4/reflection", "S3/sign"] {
        let h = algebra(key);
        c.bench_function(&format!("check_hopf_pi_algebra {key}"), |b| b.iter(|| check_hopf_pi_algebra(&h)));
    }
}

fn brace(c: &mut Criterion) {
    let b = opposite_brace(&algebra("S3/sign")).unwrap();
    c.bench_function("check_brace S3/sign opposite", |bn| bn.iter(|| check_brace(&b)));
    let p = post_hopf_from_brace(&b).unwrap();
    c.bench_function("check_post_hopf S3/sign conjugation", |bn| {
        bn.iter(|| check_post_hopf(p.base(), p.triangle()).unwrap())
    });
    let family = braiding_c(&b).unwrap();
    let g = b.group().size();
    let triples: Vec<_> = (0..g).flat_map(|x| (0..g).flat_map(move |y| (0..g).map(move |z| (x, y, z)))).collect();
    c.bench_function("braid equation S3/sign opposite", |bn| {
        bn.iter(|| check_braid_equation(b.dot(), &family, &triples))
    });
}

fn rota_baxter(c: &mut Criterion) {
    let h = algebra("S3/sign");
    let rb = antipode_rb(&h).unwrap();
    c.bench_function("check_rb S3/sign antipode", |bn| bn.iter(|| check_rb(&h, rb.operator()).unwrap()));
    c.bench_function("brace_from_rb S3/sign antipode", |bn| bn.iter(|| brace_from_rb(&rb).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    for (group, grading) in [("V4", "trivial"), ("Z4", "mod2")] {
        let g = gallery_group(group).unwrap();
        let deg = g.gradings.into_iter().find(|gr| gr.name == grading).unwrap().hom;
        c.bench_function(&format!("enumerate_group_rb {group}/{grading}"), |bn| {
            bn.iter(|| enumerate_group_rb(&deg, u128::MAX).unwrap())
        });
    }
}

criterion_group!(benches, hopf, brace, rota_baxter, enumeration);
criterion_main!(benches);
