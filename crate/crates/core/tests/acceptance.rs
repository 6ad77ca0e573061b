//! Acceptance battery. One PASS/FAIL line per criterion, exact arithmetic
//! throughout. Criteria listed in `KNOWN_RED` are expected to fail; the run
//! fails if the set of red criteria differs from it.

use std::collections::BTreeSet;
use std::time::Instant;

use hopfsuper::analysis::{
    antipode_spectrum, bosonization_pairing, distinguish, fingerprint, pairing_from_generators,
    search_isomorphism, verify_isomorphism, verify_isomorphism_images, verify_pairing, Distinction, SEARCH_FUEL,
};
use hopfsuper::characters::{complete_characters, grouplikes, GrouplikeMode};
use hopfsuper::hopf::{
    dual, hit_left, hit_right, skew_primitives, tensor_product, verify_axioms, HopfSuperData,
};
use hopfsuper::linalg::{vec_add, vec_scale, vec_sub, Subspace};
use hopfsuper::presentation::{builtin_names, builtin_spec, builtin_spec_source, Compiled};
use hopfsuper::superdata::{
    admissible_data, aeg_basis, aeg_superize, bosonize, canonical_datum, coinvariant_inclusion,
    coinvariant_superalgebra, conjugation_identity, orbit_classes, projector_report, super_data,
    verify_bosonization_roundtrip, SuperDatum,
};
use hopfsuper::{Cyclo, Matrix, Report, Tensor, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sub-checks that fail as stated. Each one has a corrected sibling check in
/// the same criterion that passes.
///
/// * 5: the image of `s` fails `c² = 1`; `s ↦ -ζ4z²#σ` works.
/// * 6: no Hopf pairing of `A4(-zeta4)` has `<z,z> = zeta4`; `zeta8` works.
/// * 7: the images fail `yz = -½w` and `z² = ½(x-1)`; the odd images need
///   `√-3/2`, so the isomorphism is checked over `Q(ζ24)` with `y ↦ x2+½x4`.
const KNOWN_RED: &[(usize, &[&str])] = &[
    (5, &["H8* ≅ bosonize(A4(zeta4)) via c ↦ x²#σ, s ↦ -ζ4(x²-z²)#σ, h ↦ x#e - ζ4 z#σ"]),
    (6, &["A4(-zeta4) self-pairing with <x,x>=<x,z>=<z,x>=0, <z,z>=zeta4"]),
    (7, &["A6 ≅ coinvariant at (ξ,α3) via x ↦ x1-½x3, y ↦ x2-½x4, z ↦ w1, w ↦ w2"]),
];

struct Criterion {
    n: usize,
    title: &'static str,
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new(n: usize, title: &'static str) -> Self {
        Criterion { n, title, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    fn report(&mut self, name: impl Into<String>, r: &Report) {
        let name = name.into();
        if !r.passed() {
            eprintln!("    {}: {}", name, r.summary());
        }
        self.check(name, r.passed());
    }

    fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect()
    }
}

fn spec(s: &str) -> HopfSuperData {
    builtin_spec(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn comp(s: &str) -> Compiled {
    Compiled::from_source(&builtin_spec_source(s).unwrap().unwrap()).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn el(c: &Compiled, e: &str) -> Vector {
    c.element(e).unwrap_or_else(|err| panic!("{e}: {err}"))
}

fn z(n: u32, k: i64) -> Cyclo {
    Cyclo::zeta(n, k)
}

fn int(k: i64) -> Cyclo {
    Cyclo::from_int(k)
}

fn half() -> Cyclo {
    Cyclo::from_ratio(1, 2)
}

fn dot(a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
    hopfsuper::linalg::dot(a, b)
}

/// Coordinates of `v ∈ A` in the coinvariant basis given by `inc`.
fn coords(inc: &Matrix, v: &[Cyclo]) -> Option<Vector> {
    inc.solve(v).filter(|c| inc.mul_vec(c) == v)
}

fn images(inc: &Matrix, vs: &[Vector]) -> Option<Vec<Vector>> {
    vs.iter().map(|v| coords(inc, v)).collect()
}

fn iso_by_images(src: &Compiled, dst: &HopfSuperData, imgs: Option<Vec<Vector>>) -> bool {
    match imgs {
        Some(imgs) => match verify_isomorphism_images(src, dst, &imgs) {
            Ok(r) => {
                if !r.passed() {
                    eprintln!("    {} → {}: {}", src.hopf.name, dst.name, r.summary());
                }
                r.passed()
            }
            Err(e) => {
                eprintln!("    {} → {}: {}", src.hopf.name, dst.name, e);
                false
            }
        },
        None => false,
    }
}

fn even_builtins() -> Vec<HopfSuperData> {
    builtin_names().iter().map(|n| spec(n)).filter(|h| h.is_purely_even()).collect()
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "axiom certification of the builtin catalogue");
    let names = builtin_names();
    c.check(format!("catalogue has {} instances (>= 20)", names.len()), names.len() >= 20);
    for n in &names {
        match builtin_spec(n) {
            Ok(h) => c.report(format!("{n} axioms"), &verify_axioms(&h)),
            Err(e) => {
                eprintln!("    {n}: {e}");
                c.check(format!("{n} builds"), false);
            }
        }
    }
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "dimension 2: the super-forms of H4");
    let h4c = comp("H4_sweedler");
    let h4 = &h4c.hopf;
    let sd = super_data(h4).unwrap();
    c.check("SD(H4) has exactly one element", sd.len() == 1);
    let b = coinvariant_superalgebra(h4, &sd[0]).unwrap();
    c.check("coinvariant has dimension 2 with one odd vector", b.dim == 2 && b.odd_dim() == 1);
    let inc = coinvariant_inclusion(h4, &sd[0]);
    c.check(
        "Lambda(z) ≅ coinvariant via z ↦ x",
        iso_by_images(&comp("Lambda1"), &b, images(&inc, &[el(&h4c, "x")])),
    );
    c
}

/// Names `(g, α)` of a datum of `A_{C2×C2}` as in `("c", 1)`.
fn name_c2c2(a: &Compiled, d: &SuperDatum) -> (String, usize) {
    let g = ["c", "d", "c*d"].iter().find(|g| el(a, g) == d.g).map(|g| g.replace('*', "")).unwrap_or("?".into());
    let vc = dot(&d.alpha, &el(a, "c"));
    let vd = dot(&d.alpha, &el(a, "d"));
    let k = match (vc == int(-1), vd == int(-1)) {
        (true, false) => 1,
        (false, true) => 2,
        (true, true) => 3,
        _ => 0,
    };
    (g, k)
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "dimension 4 pointed: super-forms of A_C2 and A_C2xC2");

    let ac = comp("A_C2");
    let sd = super_data(&ac.hopf).unwrap();
    c.check("SD(A_C2) has exactly one element", sd.len() == 1);
    let b = coinvariant_superalgebra(&ac.hopf, &sd[0]).unwrap();
    let inc = coinvariant_inclusion(&ac.hopf, &sd[0]);
    c.check(
        "Lambda(z1,z2) ≅ coinvariant via z1 ↦ x, z2 ↦ y",
        iso_by_images(&comp("Lambda2"), &b, images(&inc, &[el(&ac, "x"), el(&ac, "y")])),
    );

    let a = comp("A_C2xC2");
    let ad = admissible_data(&a.hopf).unwrap();
    let sd: Vec<SuperDatum> = ad.iter().filter(|d| d.is_super()).cloned().collect();
    let ad_names: BTreeSet<_> = ad.iter().map(|d| name_c2c2(&a, d)).collect();
    let sd_names: BTreeSet<_> = sd.iter().map(|d| name_c2c2(&a, d)).collect();
    let expect_ad: BTreeSet<_> =
        [("c", 1), ("cd", 1), ("d", 2), ("cd", 2), ("c", 3), ("d", 3)].iter().map(|(g, k)| (g.to_string(), *k)).collect();
    let expect_sd: BTreeSet<_> = [("c", 1), ("c", 3), ("d", 3)].iter().map(|(g, k)| (g.to_string(), *k)).collect();
    c.check("|AD(A_C2xC2)| = 6", ad.len() == 6);
    c.check("|SD(A_C2xC2)| = 3", sd.len() == 3);
    c.check("AD(A_C2xC2) = {(c,α1),(cd,α1),(d,α2),(cd,α2),(c,α3),(d,α3)}", ad_names == expect_ad);
    c.check("SD(A_C2xC2) = {(c,α1),(c,α3),(d,α3)}", sd_names == expect_sd);

    let find = |g: &str, k: usize| sd.iter().find(|d| name_c2c2(&a, d) == (g.to_string(), k)).cloned();
    let mut forms = Vec::new();
    // The assignments g ↦ d, g ↦ cd, z ↦ x land on H4_4, H4_2, H4_3 in this
    // order: x anticommutes with d and commutes with cd.
    for (target, g, k, gimg) in [("H4_4", "c", 1, "d"), ("H4_2", "c", 3, "c*d"), ("H4_3", "d", 3, "c*d")] {
        let Some(d) = find(g, k) else {
            c.check(format!("datum ({g},α{k}) present"), false);
            continue;
        };
        let b = coinvariant_superalgebra(&a.hopf, &d).unwrap();
        let inc = coinvariant_inclusion(&a.hopf, &d);
        let ok = iso_by_images(&comp(target), &b, images(&inc, &[el(&a, gimg), el(&a, "x")]));
        c.check(format!("{target} ≅ coinvariant at ({g},α{k}) via g ↦ {gimg}, z ↦ x"), ok);
        forms.push(b);
    }
    let mut distinct = forms.len() == 3;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            distinct &= matches!(distinguish(&forms[i], &forms[j]).unwrap(), Distinction::DistinctBy(_));
        }
    }
    c.check("the three super-forms are pairwise non-isomorphic", distinct);

    let t = tensor_product(&spec("kZ2"), &spec("Lambda1")).unwrap();
    // σ⊗1 at index 1·2+0, 1⊗z at index 0·2+1
    let imgs = vec![hopfsuper::linalg::unit_vec(4, 2), hopfsuper::linalg::unit_vec(4, 1)];
    c.check("H4_2 ≅ kZ2 ⊗ Lambda(z) via g ↦ σ⊗1, z ↦ 1⊗z", iso_by_images(&comp("H4_2"), &t, Some(imgs)));
    c
}

/// `(g, s)` for a datum `(g, α_s)` of `H8`.
fn name_h8(a: &Compiled, d: &SuperDatum) -> (String, i64) {
    let g = ["X", "Y"].iter().find(|g| el(a, g) == d.g).map(|g| g.to_string()).unwrap_or("?".into());
    let x = dot(&d.alpha, &el(a, "X"));
    let y = dot(&d.alpha, &el(a, "Y"));
    let zz = dot(&d.alpha, &el(a, "Z"));
    let s = if x != int(-1) || y != int(-1) {
        0
    } else if zz == z(4, 1) {
        1
    } else if zz == -z(4, 1) {
        -1
    } else {
        0
    };
    (g, s)
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "dimension 4 semisimple: super-forms of H8");
    let a = comp("H8");
    let h = &a.hopf;
    let ad = admissible_data(h).unwrap();
    let names: Vec<_> = ad.iter().map(|d| name_h8(&a, d)).collect();
    let set: BTreeSet<_> = names.iter().cloned().collect();
    let expect: BTreeSet<_> = [("X", 1), ("X", -1), ("Y", 1), ("Y", -1)].iter().map(|(g, s)| (g.to_string(), *s)).collect();
    c.check("|AD(H8)| = 4", ad.len() == 4);
    c.check("AD(H8) = {(X,α±),(Y,α±)}", set == expect);
    c.check("AD(H8) = SD(H8)", ad.iter().all(|d| d.is_super()));

    let phi = a.extend_generator_images(h, &[el(&a, "X"), el(&a, "Y"), el(&a, "X*Y*Z")]).unwrap();
    let psi =
        a.extend_generator_images(h, &[el(&a, "Y"), el(&a, "X"), el(&a, "1/2*(1 + X + Y - X*Y)*Z")]).unwrap();
    let autos = vec![Matrix::identity(h.dim), phi.clone(), psi.clone(), psi.mul(&phi)];
    match orbit_classes(h, &ad, &autos) {
        Ok(classes) => {
            let named: BTreeSet<BTreeSet<_>> =
                classes.iter().map(|cl| cl.iter().map(|&i| names[i].clone()).collect()).collect();
            let expect: BTreeSet<BTreeSet<_>> = [[("X", 1), ("Y", -1)], [("X", -1), ("Y", 1)]]
                .iter()
                .map(|cl| cl.iter().map(|(g, s)| (g.to_string(), *s)).collect())
                .collect();
            c.check("two orbits under {id, φ, ψ, ψφ}", classes.len() == 2);
            c.check("orbits are {(X,α+),(Y,α-)} and {(X,α-),(Y,α+)}", named == expect);
        }
        Err(e) => {
            eprintln!("    orbits: {e}");
            c.check("orbit computation", false);
        }
    }

    let d = ad.iter().find(|d| name_h8(&a, d) == ("X".into(), 1)).unwrap();
    let b = coinvariant_superalgebra(h, d).unwrap();
    let inc = coinvariant_inclusion(h, d);
    let gv = el(&a, "X*Y");
    let vv = el(&a, "(1 - zeta4)/4*(Z + zeta4*X*Z + zeta4*Y*Z + X*Y*Z)");
    let wv = el(&a, "(zeta8 - zeta8^3)/4*(Z - zeta4*X*Z + zeta4*Y*Z - X*Y*Z)");
    match images(&inc, &[gv, vv, wv]) {
        Some(gvw) => {
            let (g, v, w) = (&gvw[0], &gvw[1], &gvw[2]);
            let one = b.one();
            let zero = b.zero();
            c.check("g, v even and w odd", b.parity_of(g) == Some(0) && b.parity_of(v) == Some(0) && b.parity_of(w) == Some(1));
            c.check("g² = 1", b.mul(g, g) == one);
            c.check("gv = v", b.mul(g, v) == *v);
            c.check("gw = -w", b.mul(g, w) == vec_scale(&int(-1), w));
            c.check("vw = wv = 0", b.mul(v, w) == zero && b.mul(w, v) == zero);
            c.check("v² = ½(1+g)", b.mul(v, v) == vec_scale(&half(), &vec_add(&one, g)));
            c.check("w² = ½(1-g)", b.mul(w, w) == vec_scale(&half(), &vec_sub(&one, g)));
            c.check(
                "Δ(v) = v⊗v - ζ4 w⊗w",
                b.comul(v) == Tensor::simple(v, v).sub(&Tensor::simple(w, w).scale(&z(4, 1))),
            );
            c.check("Δ(w) = v⊗w + w⊗v", b.comul(w) == Tensor::simple(v, w).add(&Tensor::simple(w, v)));
            c.check(
                "A4(-zeta4) ≅ coinvariant at (X,α+) via x ↦ v, z ↦ w",
                iso_by_images(&comp("A4(-zeta4)"), &b, Some(vec![v.clone(), w.clone()])),
            );
        }
        None => c.check("g, v, w lie in the coinvariant at (X,α+)", false),
    }

    let (p, m) = (spec("A4(zeta4)"), spec("A4(-zeta4)"));
    let sp = antipode_spectrum(&p).unwrap().eigenvalues;
    let sm = antipode_spectrum(&m).unwrap().eigenvalues;
    let sorted = |mut v: Vec<Cyclo>| {
        v.sort_by(|a, b| a.canonical_cmp(b));
        v
    };
    c.check("spectrum of S on A4(zeta4) is {1,1,1,-ζ4}", sorted(sp) == sorted(vec![int(1), int(1), int(1), -z(4, 1)]));
    c.check("spectrum of S on A4(-zeta4) is {1,1,1,ζ4}", sorted(sm) == sorted(vec![int(1), int(1), int(1), z(4, 1)]));
    c.check(
        "A4(zeta4) and A4(-zeta4) distinguished by the antipode spectrum",
        distinguish(&p, &m).unwrap() == Distinction::DistinctBy("antipode_spectrum"),
    );
    c
}

/// `v # σⁱ` inside the bosonization of a `d`-dimensional superalgebra.
fn smash(v: &[Cyclo], i: usize) -> Vector {
    let d = v.len();
    let mut out = vec![Cyclo::zero(); 2 * d];
    out[i * d..(i + 1) * d].clone_from_slice(v);
    out
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "bosonization round trips");
    for n in builtin_names() {
        let a = spec(&n);
        if a.is_purely_even() {
            let ad = admissible_data(&a).unwrap();
            for d in &ad {
                let r = verify_bosonization_roundtrip(&a, d).unwrap();
                let kind = if d.is_super() { "super-datum" } else { "admissible datum" };
                c.report(format!("{n}: round trip at {kind} {}", d.describe(&a)), &r);
            }
        } else {
            let b = bosonize(&a).unwrap();
            let d = canonical_datum(&a, &b.hopf);
            let back = coinvariant_superalgebra(&b.hopf, &d).unwrap();
            c.check(format!("{n}: coinvariant of the bosonization at (1#σ, ε⊗sign) is identical"), back.same_structure(&a));
        }
    }
    let a4 = comp("A4(zeta4)");
    let b = bosonize(&a4.hopf).unwrap().hopf;
    let imgs = vec![
        smash(&el(&a4, "x^2"), 1),
        smash(&el(&a4, "-zeta4*(x^2 - z^2)"), 1),
        vec_sub(&smash(&el(&a4, "x"), 0), &smash(&el(&a4, "zeta4*z"), 1)),
    ];
    c.check(
        "H8* ≅ bosonize(A4(zeta4)) via c ↦ x²#σ, s ↦ -ζ4(x²-z²)#σ, h ↦ x#e - ζ4 z#σ",
        iso_by_images(&comp("H8_star"), &b, Some(imgs)),
    );
    let imgs = vec![
        smash(&el(&a4, "x^2"), 1),
        smash(&el(&a4, "-zeta4*z^2"), 1),
        vec_sub(&smash(&el(&a4, "x"), 0), &smash(&el(&a4, "zeta4*z"), 1)),
    ];
    c.check(
        "H8* ≅ bosonize(A4(zeta4)) via c ↦ x²#σ, s ↦ -ζ4z²#σ, h ↦ x#e - ζ4 z#σ",
        iso_by_images(&comp("H8_star"), &b, Some(imgs)),
    );
    c
}

fn diag(vals: &[Cyclo]) -> Matrix {
    let n = vals.len();
    let mut m = Matrix::zeros(n, n);
    for (i, v) in vals.iter().enumerate() {
        m.set(i, i, v.clone());
    }
    m
}

fn generator_pairing(k: &str, h: &str, gens: &Matrix) -> Report {
    let (k, h) = (comp(k), comp(h));
    match pairing_from_generators(&k, &h, gens) {
        Ok(p) => verify_pairing(&k.hopf, &h.hopf, &p),
        Err(e) => {
            let mut r = Report::new("pairing");
            r.fail("extension", e.to_string());
            r
        }
    }
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "dualities: explicit pairings and dual tables");
    let gz = diag(&[int(-1), int(1)]);
    c.report("H4_2 self-pairing with <g,g>=-1, <z,z>=1", &generator_pairing("H4_2", "H4_2", &gz));
    c.report("H4_3 × H4_4 pairing with <g,g>=-1, <z,z>=1", &generator_pairing("H4_3", "H4_4", &gz));
    let a4 = diag(&[int(0), z(4, 1)]);
    c.report(
        "A4(-zeta4) self-pairing with <x,x>=<x,z>=<z,x>=0, <z,z>=zeta4",
        &generator_pairing("A4(-zeta4)", "A4(-zeta4)", &a4),
    );
    let a4_fixed = diag(&[int(0), z(8, 1)]);
    c.report(
        "A4(-zeta4) <z,z> = zeta8 is a Hopf pairing",
        &generator_pairing("A4(-zeta4)", "A4(-zeta4)", &a4_fixed),
    );
    // builtin K8(ζ) carries the opposite sign of ζ to the table's labelling
    for (zs, omega) in [("-zeta4", z(8, 3)), ("zeta4", z(8, 1))] {
        let t = Matrix::from_rows(&[
            vec![int(1), int(-1), int(0), int(0)],
            vec![int(-1), int(0), int(0), int(0)],
            vec![int(0), int(0), omega.clone(), int(0)],
            vec![int(0), int(0), int(0), int(1)],
        ]);
        let k = format!("K8({zs},0,1)");
        let h = format!("K8({zs},1,0)");
        c.report(format!("{k} × {h} pairing table with ω = {omega}"), &generator_pairing(&k, &h, &t));
    }

    let d = dual(&spec("A4(-zeta4)")).unwrap();
    // basis 1*, x*, (x²)*, z*
    let e = |i: usize| d.basis(i);
    let zero = d.zero();
    let mut table: Vec<Vec<Vector>> = vec![vec![zero.clone(); 4]; 4];
    table[0][0] = vec_add(&e(0), &e(2));
    table[0][2] = vec_scale(&int(-1), &e(2));
    table[2][0] = vec_scale(&int(-1), &e(2));
    table[1][1] = e(1);
    table[1][3] = e(3);
    table[2][2] = vec_scale(&int(2), &e(2));
    table[3][1] = e(3);
    table[3][3] = vec_scale(&-z(4, 1), &e(1));
    let mut ok = true;
    for i in 0..4 {
        for j in 0..4 {
            if d.mul(&e(i), &e(j)) != table[i][j] {
                eprintln!("    dual table: {} · {}", d.labels[i], d.labels[j]);
                ok = false;
            }
        }
    }
    c.check("multiplication table of dual(A4(-zeta4)) entry for entry", ok);

    for n in builtin_names() {
        let (k, h, p) = bosonization_pairing(&spec(&n)).unwrap();
        c.report(format!("{n}: pairing of bosonize(dual) with bosonize"), &verify_pairing(&k, &h, &p));
    }
    c
}

/// `(g, α)` for a datum of `A_plus`, with `g ∈ {ξ, sgn, ξsgn}` and `α ∈ {1,2,3}`.
fn name_aplus(a: &Compiled, d: &SuperDatum) -> (String, usize) {
    let sgn = "(pe - p1 - p2 + p12 + p21 - p121)";
    let gs = [("ξ", "xi".to_string()), ("sgn", sgn.to_string()), ("ξsgn", format!("xi*{sgn}"))];
    let g = gs.iter().find(|(_, e)| el(a, e) == d.g).map(|(n, _)| n.to_string()).unwrap_or("?".into());
    let key = (dot(&d.alpha, &el(a, "xi")), dot(&d.alpha, &el(a, "pe")), dot(&d.alpha, &el(a, "p1")));
    let k = if key == (int(1), int(0), int(1)) {
        1
    } else if key == (int(-1), int(1), int(0)) {
        2
    } else if key == (int(-1), int(0), int(1)) {
        3
    } else {
        0
    };
    (g, k)
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "dimension 6 semisimple: A6 from kS3 and from A_plus");

    let ks = comp("kS3");
    let h = &ks.hopf;
    let s1 = el(&ks, "s1");
    let conj = Matrix::from_cols(&(0..h.dim).map(|i| h.mul(&h.mul(&s1, &h.basis(i)), &s1)).collect::<Vec<_>>(), h.dim);
    let (basis, _) = aeg_basis(h, &conj);
    let inc = Matrix::from_cols(&basis, h.dim);
    let aeg = aeg_superize(h, &s1).unwrap();
    let listed = ["1", "s1", "1/2*(s1*s2 + s2*s1)", "1/2*(s2 + s1*s2*s1)", "1/2*(s1*s2 - s2*s1)", "1/2*(s2 - s1*s2*s1)"];
    match images(&inc, &listed.iter().map(|e| el(&ks, e)).collect::<Vec<_>>()) {
        Some(p) => {
            let comb = |k: &[i64; 6]| -> Vector {
                let mut v = aeg.zero();
                for (i, x) in k.iter().enumerate() {
                    hopfsuper::linalg::add_scaled(&mut v, &Cyclo::from_ratio(*x, 2), &p[i]);
                }
                v
            };
            // twice the coefficients on e, c, x, y, z, w
            let t: [[[i64; 6]; 6]; 6] = [
                [[2, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0], [0, 0, 2, 0, 0, 0], [0, 0, 0, 2, 0, 0], [0, 0, 0, 0, 2, 0], [0, 0, 0, 0, 0, 2]],
                [[0, 2, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0], [0, 0, 0, 2, 0, 0], [0, 0, 2, 0, 0, 0], [0, 0, 0, 0, 0, 2], [0, 0, 0, 0, 2, 0]],
                [[0, 0, 2, 0, 0, 0], [0, 0, 0, 2, 0, 0], [1, 0, 1, 0, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 0, 0, -1, 0], [0, 0, 0, 0, 0, -1]],
                [[0, 0, 0, 2, 0, 0], [0, 0, 2, 0, 0, 0], [0, 1, 0, 1, 0, 0], [1, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, -1], [0, 0, 0, 0, -1, 0]],
                [[0, 0, 0, 0, 2, 0], [0, 0, 0, 0, 0, -2], [0, 0, 0, 0, -1, 0], [0, 0, 0, 0, 0, 1], [-1, 0, 1, 0, 0, 0], [0, 1, 0, -1, 0, 0]],
                [[0, 0, 0, 0, 0, 2], [0, 0, 0, 0, -2, 0], [0, 0, 0, 0, 0, -1], [0, 0, 0, 0, 1, 0], [0, -1, 0, 1, 0, 0], [1, 0, -1, 0, 0, 0]],
            ];
            let mut ok = true;
            for i in 0..6 {
                for j in 0..6 {
                    if aeg.mul(&p[i], &p[j]) != comb(&t[i][j]) {
                        eprintln!("    AEG table entry ({i},{j})");
                        ok = false;
                    }
                }
            }
            c.check("multiplication table on e, c, x, y, z, w", ok);
            let par: Vec<_> = p.iter().map(|v| aeg.parity_of(v)).collect();
            c.check("e, c, x, y even and z, w odd", par == [Some(0), Some(0), Some(0), Some(0), Some(1), Some(1)]);
            let (x, y, zz, w) = (&p[2], &p[3], &p[4], &p[5]);
            let tt = Tensor::simple;
            c.check("Δ(e), Δ(c) group-like", (0..2).all(|i| aeg.comul(&p[i]) == tt(&p[i], &p[i])));
            c.check("Δ(x) = x⊗x - w⊗z", aeg.comul(x) == tt(x, x).sub(&tt(w, zz)));
            c.check("Δ(y) = y⊗y - z⊗w", aeg.comul(y) == tt(y, y).sub(&tt(zz, w)));
            c.check("Δ(z) = z⊗x + y⊗z", aeg.comul(zz) == tt(zz, x).add(&tt(y, zz)));
            c.check("Δ(w) = w⊗y + x⊗w", aeg.comul(w) == tt(w, y).add(&tt(x, w)));
            c.check("S(z) = -w, S(w) = z", aeg.s(zz) == vec_scale(&int(-1), w) && aeg.s(w) == *zz);
        }
        None => c.check("listed basis lies in the AEG basis span", false),
    }

    let a6 = comp("A6");
    let gl = grouplikes(&a6.hopf, GrouplikeMode::EvenHomogeneous).unwrap();
    let expect: BTreeSet<String> = [el(&a6, "1"), el(&a6, "x*y + z*w")].iter().map(|v| format!("{v:?}")).collect();
    let got: BTreeSet<String> = gl.elements.iter().map(|v| format!("{v:?}")).collect();
    c.check("G(A6) = {1, xy+zw}", got == expect);

    let ap = comp("A_plus");
    let a = &ap.hopf;
    let ad = admissible_data(a).unwrap();
    let names: Vec<_> = ad.iter().map(|d| name_aplus(&ap, d)).collect();
    let set: BTreeSet<_> = names.iter().cloned().collect();
    let expect: BTreeSet<_> = [("ξ", 2), ("ξ", 3), ("sgn", 1), ("sgn", 3), ("ξsgn", 1), ("ξsgn", 2)]
        .iter()
        .map(|(g, k)| (g.to_string(), *k))
        .collect();
    c.check("AD(A_plus) = {(ξ,α2),(ξ,α3),(sgn,α1),(sgn,α3),(ξsgn,α1),(ξsgn,α2)}", set == expect);
    let sd: Vec<SuperDatum> = ad.iter().filter(|d| d.is_super()).cloned().collect();
    let sd_set: BTreeSet<_> = sd.iter().map(|d| name_aplus(&ap, d)).collect();
    let expect_sd: BTreeSet<_> = [("ξ", 3), ("ξsgn", 1)].iter().map(|(g, k)| (g.to_string(), *k)).collect();
    c.check("SD(A_plus) = {(ξ,α3),(ξsgn,α1)}", sd_set == expect_sd);
    for d in &ad {
        let (g, k) = name_aplus(&ap, d);
        if g == "sgn" {
            c.check(format!("(sgn,α{k}) rejected: sgn is central"), !d.certificates.g_noncentral && !d.is_super());
        }
    }
    if let Some(d) = ad.iter().find(|d| name_aplus(&ap, d) == ("ξ".into(), 2)) {
        let s2 = el(&ap, "p2");
        let lhs = a.mul(&a.mul(&d.g, &s2), &d.g);
        let rhs = hit_right(a, &hit_left(a, &d.alpha, &s2), &d.alpha);
        c.check("ξ s2* ξ = (s1s2s1)*", lhs == el(&ap, "p121"));
        c.check("α2⇀s2*↼α2 = s2*", rhs == s2);
        c.check(
            "(ξ,α2) rejected by the conjugation identity",
            conjugation_identity(a, &d.g, &d.alpha).is_some() && !d.is_super(),
        );
    } else {
        c.check("(ξ,α2) present", false);
    }

    let sgn = "(pe - p1 - p2 + p12 + p21 - p121)";
    let mut gens: Vec<Vector> = ["pe", "p1", "p2", "p12", "p21", "p121"].iter().map(|g| el(&ap, g)).collect();
    gens.push(el(&ap, &format!("xi*{sgn}")));
    match ap.extend_generator_images(a, &gens) {
        Ok(phi) => match orbit_classes(a, &sd, &[phi]) {
            Ok(cl) => c.check("SD(A_plus) is a single orbit under ξ ↦ ξsgn", cl.len() == 1),
            Err(e) => {
                eprintln!("    {e}");
                c.check("SD(A_plus) orbit computation", false);
            }
        },
        Err(e) => {
            eprintln!("    {e}");
            c.check("ξ ↦ ξsgn extends to an algebra map", false);
        }
    }

    if let Some(d) = sd.iter().find(|d| name_aplus(&ap, d) == ("ξ".into(), 3)) {
        let b = coinvariant_superalgebra(a, d).unwrap();
        let inc = coinvariant_inclusion(a, d);
        let x1 = "(pe + p1)";
        let x2 = "(pe - p1)*xi";
        let x3 = "(p2 + p12 + p21 + p121)";
        let x4 = "(p2 - p12 - p21 + p121)*xi";
        let w1 = "p2 - p12 + p21 - p121";
        let w2 = "(p2 + p12 - p21 - p121)*xi";
        let imgs = [format!("{x1} - 1/2*{x3}"), format!("{x2} - 1/2*{x4}"), w1.to_string(), w2.to_string()];
        let imgs: Vec<Vector> = imgs.iter().map(|e| el(&ap, e)).collect();
        c.check(
            "A6 ≅ coinvariant at (ξ,α3) via x ↦ x1-½x3, y ↦ x2-½x4, z ↦ w1, w ↦ w2",
            iso_by_images(&a6, &b, images(&inc, &imgs)),
        );
    } else {
        c.check("(ξ,α3) present", false);
    }

    // over Q(ζ24): the odd generators need the scalar √-3/2 = ζ3 + ½
    let ap24 = Compiled::from_source_over(&builtin_spec_source("A_plus").unwrap().unwrap(), 24).unwrap();
    let a6_24 = Compiled::from_source_over(&builtin_spec_source("A6").unwrap().unwrap(), 24).unwrap();
    let sd24 = super_data(&ap24.hopf).unwrap();
    if let Some(d) = sd24.iter().find(|d| name_aplus(&ap24, d) == ("ξ".into(), 3)) {
        let b = coinvariant_superalgebra(&ap24.hopf, d).unwrap();
        let inc = coinvariant_inclusion(&ap24.hopf, d);
        let imgs = [
            "(pe + p1) - 1/2*(p2 + p12 + p21 + p121)",
            "(pe - p1)*xi + 1/2*(p2 - p12 - p21 + p121)*xi",
            "(zeta3 + 1/2)*(p2 - p12 + p21 - p121)",
            "(zeta3 + 1/2)*(p2 + p12 - p21 - p121)*xi",
        ];
        let imgs: Vec<Vector> = imgs.iter().map(|e| el(&ap24, e)).collect();
        c.check(
            "A6 ≅ coinvariant at (ξ,α3) over Q(ζ24) via x ↦ x1-½x3, y ↦ x2+½x4, z ↦ √-3/2·w1, w ↦ √-3/2·w2",
            iso_by_images(&a6_24, &b, images(&inc, &imgs)),
        );
    } else {
        c.check("(ξ,α3) present over Q(ζ24)", false);
    }
    c
}

fn k8_names() -> Vec<String> {
    let mut out = Vec::new();
    for zs in ["zeta4", "-zeta4"] {
        for e in 0..2 {
            for h in 0..2 {
                out.push(format!("K8({zs},{e},{h})"));
            }
        }
    }
    out
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "dimension 8 non-semisimple non-pointed: K8 family");
    let names = k8_names();
    let k8: Vec<HopfSuperData> = names.iter().map(|n| spec(n)).collect();
    let prints: Vec<_> = k8.iter().map(|h| fingerprint(h).unwrap()).collect();

    let mut hit = BTreeSet::new();
    for zs in ["zeta4", "-zeta4"] {
        let name = format!("H16({zs})");
        let ac = comp(&name);
        let a = ac.hopf.clone();
        let ad = admissible_data(&a).unwrap();
        c.check(format!("|AD({name})| = 4"), ad.len() == 4);
        c.check(format!("AD({name}) = SD({name})"), ad.iter().all(|d| d.is_super()));
        for d in &ad {
            let b = coinvariant_superalgebra(&a, d).unwrap();
            let f = fingerprint(&b).unwrap();
            let m: Vec<usize> = (0..8).filter(|&i| prints[i] == f).collect();
            let label = format!("{name} at {}", d.describe(&a));
            if m.len() != 1 {
                c.check(format!("{label}: a unique K8 with the same fingerprint"), false);
                continue;
            }
            let s = if dot(&d.alpha, &el(&ac, "Z")) == z(4, 1) { "zeta4" } else { "-zeta4" };
            let imgs = [
                "X*Y".to_string(),
                format!("(1 - {s})/4*(Z + {s}*X*Z + {s}*Y*Z + X*Y*Z)"),
                format!("(zeta8 - zeta8^3)/4*(Z - {s}*X*Z + {s}*Y*Z - X*Y*Z)"),
                "T".to_string(),
            ];
            let inc = coinvariant_inclusion(&a, d);
            let vs: Vec<Vector> = imgs.iter().map(|e| el(&ac, e)).collect();
            c.check(
                format!("{label} ≅ {} by witness", names[m[0]]),
                iso_by_images(&comp(&names[m[0]]), &b, images(&inc, &vs)),
            );
            hit.insert(m[0]);
        }
    }
    c.check("the eight coinvariants exhaust the K8 family", hit.len() == 8);

    let mut all = true;
    for i in 0..8 {
        for j in i + 1..8 {
            if !matches!(distinguish(&k8[i], &k8[j]).unwrap(), Distinction::DistinctBy(_)) {
                eprintln!("    {} vs {} inconclusive", names[i], names[j]);
                all = false;
            }
        }
    }
    c.check("all 28 pairs certified distinct by fingerprint", all);

    for (zs, omega) in [("-zeta4", z(8, 3)), ("zeta4", z(8, 1))] {
        let t = Matrix::from_rows(&[
            vec![int(1), int(-1), int(0), int(0)],
            vec![int(-1), int(0), int(0), int(0)],
            vec![int(0), int(0), omega.clone(), int(0)],
            vec![int(0), int(0), int(0), int(1)],
        ]);
        c.report(
            format!("K8({zs},0,1) × K8({zs},1,0) pairing"),
            &generator_pairing(&format!("K8({zs},0,1)"), &format!("K8({zs},1,0)"), &t),
        );
    }

    for n in ["K8(zeta4,0,0)", "K8(zeta4,1,1)", "K8(-zeta4,0,0)", "K8(-zeta4,1,1)"] {
        let h = spec(n);
        let d = dual(&h).unwrap();
        c.check(format!("{n} and its dual share a fingerprint"), fingerprint(&h).unwrap() == fingerprint(&d).unwrap());
        let out = search_isomorphism(&comp(n), &d, SEARCH_FUEL).unwrap();
        let ok = out.witness.as_ref().is_some_and(|w| verify_isomorphism(&h, &d, w).passed());
        c.check(format!("{n} self-dual by witness"), ok);
    }
    c
}

fn has_z2_factor(f: &[u64]) -> bool {
    f.iter().any(|d| d % 4 == 2)
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "negative and structural properties");
    for n in ["kZ2", "kZ4", "kZ2xZ2", "kS3", "dual_kS3"] {
        c.check(format!("SD({n}) = ∅"), super_data(&spec(n)).unwrap().is_empty());
    }

    let a4 = comp("A4(-zeta4)");
    let g = el(&a4, "x + zeta8^3*z");
    let un = grouplikes(&a4.hopf, GrouplikeMode::Unrestricted).unwrap();
    let ev = grouplikes(&a4.hopf, GrouplikeMode::EvenHomogeneous).unwrap();
    c.check("x + ζ8³z is found by the unrestricted solver", un.index_of(&g).is_some());
    c.check("x + ζ8³z is not homogeneous", a4.hopf.parity_of(&g).is_none());
    c.check("x + ζ8³z is excluded from G(A4(-zeta4))", ev.index_of(&g).is_none());
    let expect: BTreeSet<String> = [el(&a4, "1"), el(&a4, "x^2 - z^2")].iter().map(|v| format!("{v:?}")).collect();
    let got: BTreeSet<String> = ev.elements.iter().map(|v| format!("{v:?}")).collect();
    c.check("G(A4(-zeta4)) = {1, x²-z²}", got == expect);

    for a in even_builtins() {
        if super_data(&a).unwrap().is_empty() {
            continue;
        }
        let gl = grouplikes(&a, GrouplikeMode::EvenHomogeneous).unwrap();
        c.check(format!("{}: even dimension", a.name), a.dim % 2 == 0);
        let inv = gl.group.as_ref().and_then(|g| g.invariant_factors());
        c.check(
            format!("{}: G abelian with a Z2 direct factor ({inv:?})", a.name),
            inv.as_deref().is_some_and(has_z2_factor),
        );
    }
    c
}

fn random_cyclo(rng: &mut ChaCha8Rng) -> Cyclo {
    let mut x = Cyclo::zero();
    for k in 0..4 {
        let q = Cyclo::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7));
        x += &(q * z(8, k));
    }
    x
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| Cyclo::from_int(rng.gen_range(-3..=3))).collect()
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "property suites");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    let mut ok = true;
    for _ in 0..200 {
        let (a, b, d) = (random_cyclo(&mut rng), random_cyclo(&mut rng), random_cyclo(&mut rng));
        ok &= &(&a * &b) * &d == &a * &(&b * &d);
        ok &= &a * &b == &b * &a;
        ok &= &a * &(&b + &d) == &(&a * &b) + &(&a * &d);
        ok &= &(&a + &b) + &d == &a + &(&b + &d);
        ok &= &a + &(-&a) == Cyclo::zero();
        if !a.is_zero() {
            ok &= (&a * &a.inv().unwrap()).is_one();
        }
    }
    c.check("field axioms on 200 random samples of Q(ζ8)", ok);

    let mut hits = true;
    let mut proj = true;
    for n in builtin_names() {
        let h = spec(&n);
        let chars = complete_characters(&h).unwrap();
        for _ in 0..3 {
            let a = random_vector(&mut rng, h.dim);
            let al = &chars[rng.gen_range(0..chars.len())].values;
            let be = &chars[rng.gen_range(0..chars.len())].values;
            hits &= hit_left(&h, al, &hit_right(&h, &a, be)) == hit_right(&h, &hit_left(&h, al, &a), be);
        }
        if h.is_purely_even() {
            for d in admissible_data(&h).unwrap() {
                let r = projector_report(&h, &d);
                if !r.passed() {
                    eprintln!("    {n}: {}", r.summary());
                }
                proj &= r.passed();
            }
        }
    }
    c.check("α⇀(a↼β) = (α⇀a)↼β on random elements of every builtin", hits);
    c.check("coinvariant projector idempotent with image the fixed space, for every admissible datum", proj);

    let mut skew = true;
    for n in builtin_names() {
        let h = spec(&n);
        for g in grouplikes(&h, GrouplikeMode::EvenHomogeneous).unwrap().elements {
            let sp = Subspace::spanned_by(h.dim, &skew_primitives(&h, &g).unwrap().all());
            if !sp.contains(&vec_sub(&h.unit, &g)) {
                eprintln!("    {n}: 1-g missing for g = {}", h.fmt_elem(&g));
                skew = false;
            }
        }
    }
    c.check("1-g is (g,1)-skew-primitive for every group-like g of every builtin", skew);
    c
}

fn main() {
    let runs: [fn() -> Criterion; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let start = Instant::now();
    let mut red = Vec::new();
    for run in runs {
        let t = Instant::now();
        let c = run();
        let failed = c.failed();
        let ok = failed.is_empty();
        println!(
            "{} [{}] {} ({} checks, {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            c.n,
            c.title,
            c.checks.len(),
            t.elapsed().as_secs_f64()
        );
        for f in &failed {
            println!("       failed: {f}");
        }
        if !ok {
            red.push((c.n, failed.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
        }
    }
    println!("battery finished in {:.1}s", start.elapsed().as_secs_f64());
    let expected: Vec<(usize, Vec<String>)> =
        KNOWN_RED.iter().map(|(n, f)| (*n, f.iter().map(|s| s.to_string()).collect())).collect();
    if red != expected {
        println!("unexpected set of failing criteria: {red:?} (expected {expected:?})");
        std::process::exit(1);
    }
}
