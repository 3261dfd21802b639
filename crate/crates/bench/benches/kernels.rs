use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use cmw_core::generate::{campaign, GeneratorParams};
use cmw_core::homalg::ext_module;
use cmw_core::ideal::groebner_basis;
use cmw_core::invariants::canonical_module;
use cmw_core::resolve::{clear_resolution_cache, free_resolution};
use cmw_core::{PolyRingDesc, PresentedModule, QuotientRing, RingTag, StatementId};

fn xyzw() -> Arc<PolyRingDesc> {
    PolyRingDesc::rational(&["x", "y", "z", "w"])
}

fn gb(c: &mut Criterion) {
    let d = xyzw();
    let v: Vec<_> = (0..4).map(|i| d.var(i)).collect();
    // Twisted cubic plus a quadric: a few S-pair rounds, nothing degenerate.
    let gens = vec![
        d.sub(&d.mul(&v[0], &v[2]), &d.mul(&v[1], &v[1])),
        d.sub(&d.mul(&v[1], &v[3]), &d.mul(&v[2], &v[2])),
        d.sub(&d.mul(&v[0], &v[3]), &d.mul(&v[1], &v[2])),
        d.add(&d.mul(&v[0], &v[0]), &d.mul(&v[3], &v[3])),
    ];
    c.bench_function("groebner/twisted-cubic+quadric", |b| {
        b.iter(|| groebner_basis(&d, black_box(&gens)).unwrap())
    });
}

fn resolution(c: &mut Criterion) {
    let d = xyzw();
    let s = QuotientRing::polynomial(d.clone());
    let v: Vec<_> = (0..4).map(|i| d.var(i)).collect();
    let quads: Vec<_> = (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).map(|(i, j)| d.mul(&v[i], &v[j])).collect();
    let m = PresentedModule::cyclic(s, &quads).unwrap();
    c.bench_function("resolution/m^2 over k[x,y,z,w]", |b| {
        b.iter(|| {
            clear_resolution_cache();
            free_resolution(black_box(&m), RingTag::Ambient, usize::MAX).unwrap()
        })
    });
    let h = QuotientRing::new(d.clone(), &[d.mul(&v[0], &v[1])]).unwrap();
    let x = PresentedModule::cyclic(h, &[v[0].clone()]).unwrap();
    c.bench_function("resolution/periodic to 12", |b| {
        b.iter(|| {
            clear_resolution_cache();
            free_resolution(black_box(&x), RingTag::Quotient, 12).unwrap()
        })
    });
}

fn ext(c: &mut Criterion) {
    let d = PolyRingDesc::rational(&["x", "y", "z"]);
    let v: Vec<_> = (0..3).map(|i| d.var(i)).collect();
    let r = QuotientRing::new(d.clone(), &[d.sub(&d.mul(&v[0], &v[2]), &d.mul(&v[1], &v[1]))]).unwrap();
    let m = PresentedModule::cyclic(r.clone(), &[v[0].clone(), v[1].clone()]).unwrap();
    let k = PresentedModule::residue_field(r.clone());
    c.bench_function("ext/Ext^3(M, k) over a quadric cone", |b| {
        b.iter(|| {
            clear_resolution_cache();
            ext_module(3, black_box(&m), &k, 8).unwrap()
        })
    });
    c.bench_function("canonical/quadric cone", |b| {
        b.iter(|| {
            clear_resolution_cache();
            canonical_module(black_box(&r)).unwrap()
        })
    });
}

fn campaigns(c: &mut Criterion) {
    let params = GeneratorParams { seed: 11, ..Default::default() };
    let mut g = c.benchmark_group("campaign");
    g.sample_size(10);
    g.bench_function("all statements x 10", |b| {
        b.iter(|| {
            clear_resolution_cache();
            campaign(&StatementId::ALL, black_box(&params), 10, 10).unwrap()
        })
    });
    g.finish();
}

criterion_group!(benches, gb, resolution, ext, campaigns);
criterion_main!(benches);
