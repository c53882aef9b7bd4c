use criterion::{black_box, criterion_group, criterion_main, Criterion};

use omega_core::hilbert::{hilbert_function, hilbert_series_numerator};
use omega_core::kaehler::{kaehler_hilbert_function, top_form_hilbert_function};
use omega_core::scheme::{fat_scheme_ideal_by_intersection, hilbert_function_by_interpolation};
use omega_core::verify::random_schemes;
use omega_core::{FatPointScheme, Ideal};

fn grid() -> FatPointScheme {
    FatPointScheme::from_integers(
        2,
        &[&[1, 0, 0], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1], &[1, 2, 0], &[1, 2, 1], &[1, 3, 0], &[1, 3, 1]],
        &[1, 2, 1, 2, 2, 1, 5, 1],
    )
    .unwrap()
}

fn groebner(c: &mut Criterion) {
    let w = grid();
    let x = w.support().ideal();
    let y = w.slimming().ideal();
    c.bench_function("groebner/product", |b| {
        b.iter(|| {
            let p = Ideal::new(3, x.product(&y).unwrap().generators().to_vec()).unwrap();
            black_box(p.groebner_basis().len())
        })
    });
    c.bench_function("groebner/intersection", |b| b.iter(|| black_box(fat_scheme_ideal_by_intersection(&w.support()))));
}

fn hilbert(c: &mut Criterion) {
    let w = grid();
    let leads = w.ideal().groebner_basis().leading_monomials();
    c.bench_function("hilbert/numerator", |b| b.iter(|| black_box(hilbert_series_numerator(&leads, 3))));
    c.bench_function("hilbert/interpolation", |b| b.iter(|| black_box(hilbert_function_by_interpolation(&w))));
    let fresh = || Ideal::new(3, w.ideal().generators().to_vec()).unwrap();
    c.bench_function("hilbert/ideal", |b| b.iter(|| black_box(hilbert_function(&fresh()).unwrap())));
}

fn kaehler(c: &mut Criterion) {
    let w = grid();
    let mut group = c.benchmark_group("kaehler");
    group.sample_size(10);
    group.bench_function("two_forms", |b| b.iter(|| black_box(kaehler_hilbert_function(&w, 2).unwrap())));
    group.bench_function("top_forms_presentation", |b| b.iter(|| black_box(kaehler_hilbert_function(&w, 3).unwrap())));
    group.bench_function("top_forms_jacobian", |b| b.iter(|| black_box(top_form_hilbert_function(&w).unwrap())));
    let sample = random_schemes(11, 5);
    group.bench_function("random_one_forms", |b| {
        b.iter(|| {
            for s in &sample {
                black_box(kaehler_hilbert_function(s, 1).unwrap());
            }
        })
    });
    group.finish();
}

criterion_group!(benches, groebner, hilbert, kaehler);
criterion_main!(benches);
