use hopfsuper::cyclo::{find_roots, phi};
use hopfsuper::hopf::{dual, isomorphism_report, tensor_product, verify_axioms};
use hopfsuper::presentation::builtin_spec;
use hopfsuper::{Cyclo, HopfSuperData, Matrix, UniPoly};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

const CONDUCTORS: [u32; 4] = [4, 8, 12, 24];

fn elem(n: u32) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n as usize).prop_map(move |cs| {
        cs.into_iter()
            .enumerate()
            .fold(Cyclo::zero(), |acc, (k, (p, q))| acc + Cyclo::from_ratio(p, q) * Cyclo::zeta(n, k as i64))
    })
}

fn field_and_elems(k: usize) -> impl Strategy<Value = (u32, Vec<Cyclo>)> {
    elems_over(&CONDUCTORS, k)
}

fn elems_over(ns: &[u32], k: usize) -> impl Strategy<Value = (u32, Vec<Cyclo>)> {
    prop::sample::select(ns.to_vec())
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(elem(n), k)))
}

/// Complex value at `ζ_n = exp(2πi/n)`, from power-basis coordinates.
fn numeric(a: &Cyclo, n: u32) -> (f64, f64) {
    let c: Vec<BigRational> = a.coeffs_in(n).unwrap();
    let t = 2.0 * std::f64::consts::PI / n as f64;
    c.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, q)| {
        let q = q.to_f64().unwrap();
        (re + q * (t * k as f64).cos(), im + q * (t * k as f64).sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((n, v) in field_and_elems(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a + &(-a), Cyclo::zero());
        prop_assert!(a.coeffs_in(n).unwrap().len() == phi(n));
    }

    #[test]
    fn inverse_is_two_sided((_n, v) in field_and_elems(1)) {
        let a = &v[0];
        prop_assume!(!a.is_zero());
        let ai = a.inv().unwrap();
        prop_assert!((a * &ai).is_one());
    }

    #[test]
    fn product_agrees_with_complex_evaluation((n, v) in field_and_elems(2)) {
        let (a, b) = (&v[0], &v[1]);
        let (x, y) = (numeric(a, n), numeric(b, n));
        let want = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        prop_assert!(close(numeric(&(a * b), n), want));
    }

    #[test]
    fn embedding_is_a_homomorphism((_n, v) in prop::collection::vec(elem(4), 2).prop_map(|v| (4u32, v))) {
        let (a, b) = (&v[0], &v[1]);
        let e = |x: &Cyclo| x.embed(24).unwrap();
        prop_assert_eq!(e(&(a * b)), e(a) * e(b));
        prop_assert!(close(numeric(a, 4), numeric(&e(a), 24)));
    }

    #[test]
    fn galois_is_a_homomorphism((n, v) in field_and_elems(2), k in prop::sample::select(vec![1u32, 5, 7, 11])) {
        prop_assume!(k < n && gcd(k, n) == 1);
        let (a, b) = (&v[0], &v[1]);
        let g = |x: &Cyclo| x.galois(n, k).unwrap();
        prop_assert_eq!(g(&(a * b)), g(a) * g(b));
        prop_assert_eq!(g(&(a + b)), g(a) + g(b));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn planted_roots_are_found((n, v) in elems_over(&[4, 8], 3)) {
        let f = v.iter().fold(UniPoly::constant(Cyclo::one()), |f, r| f.mul(&UniPoly::linear(r)));
        let rs = find_roots(&f, n, 1_000_000).unwrap();
        prop_assert!(rs.complete);
        for r in &v {
            prop_assert!(rs.roots.contains(r));
        }
        prop_assert!(rs.roots.iter().all(|r| f.eval(r).is_zero()));
    }

    #[test]
    fn determinant_is_multiplicative((_n, v) in elems_over(&[4, 8, 12], 18)) {
        let a = Matrix::from_rows(&v[..9].chunks(3).map(|r| r.to_vec()).collect::<Vec<_>>());
        let b = Matrix::from_rows(&v[9..].chunks(3).map(|r| r.to_vec()).collect::<Vec<_>>());
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        match a.inverse() {
            Some(ai) => prop_assert!(a.mul(&ai).is_identity()),
            None => prop_assert!(a.det().is_zero()),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn catalogue(name: &str) -> HopfSuperData {
    builtin_spec(name).unwrap()
}

/// The identity matrix is a Hopf isomorphism `a → b`.
fn same_structure(a: &HopfSuperData, b: &HopfSuperData) {
    assert_eq!(a.parity, b.parity, "{}", a.name);
    let r = isomorphism_report(a, b, &Matrix::identity(a.dim));
    assert!(r.passed(), "{}: {}", a.name, r.summary());
}

#[test]
fn double_dual_restores_structure() {
    for n in ["H4_sweedler", "A4(zeta4)", "H8", "K8(-zeta4,1,0)"] {
        let h = catalogue(n);
        let dd = dual(&dual(&h).unwrap()).unwrap();
        same_structure(&h, &dd);
    }
}

#[test]
fn json_round_trip_preserves_structure() {
    for n in ["Lambda2", "A_plus", "A6", "H16(zeta4)"] {
        let h = catalogue(n);
        let back = HopfSuperData::from_json_str(&h.to_json_string().unwrap()).unwrap();
        same_structure(&h, &back);
    }
}

#[test]
fn super_tensor_products_satisfy_axioms() {
    for (a, b) in [("Lambda1", "Lambda1"), ("A4(-zeta4)", "kZ2"), ("H4_3", "Lambda1")] {
        let t = tensor_product(&catalogue(a), &catalogue(b)).unwrap();
        let r = verify_axioms(&t);
        assert!(r.passed(), "{a} ⊗ {b}: {}", r.summary());
        assert_eq!(t.odd_dim(), {
            let (x, y) = (catalogue(a), catalogue(b));
            x.odd_dim() * (y.dim - y.odd_dim()) + (x.dim - x.odd_dim()) * y.odd_dim()
        });
    }
}
