use proptest::prelude::*;

use etap::clifford::{build_clifford_rep, Signature, Variant};
use etap::linalg::{kernel, symmetric_signature, Matrix};
use etap::prolong::GradedLieAlgebra;
use etap::spinforms::{homogeneous_forms, FormContext, FormInvariants};
use etap::{Field, Gaussian, Rational, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(rational(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

fn symmetric(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    matrix(n, n).prop_map(|m| m.add(&m.transpose()))
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (rational(), rational()).prop_map(|(a, b)| Gaussian::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let k = kernel(&m);
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        (s, p) in (1usize..5).prop_flat_map(|n| (symmetric(n), matrix(n, n)))
    ) {
        prop_assume!(!p.determinant().is_zero());
        let moved = p.transpose().mul(&s).mul(&p);
        prop_assert_eq!(symmetric_signature(&moved).unwrap(), symmetric_signature(&s).unwrap());
        let (a, b, z) = symmetric_signature(&s).unwrap();
        prop_assert_eq!(a + b, s.rank());
        prop_assert_eq!(a + b + z, s.rows());
    }

    #[test]
    fn scalar_text_round_trip(x in gaussian(), y in rational()) {
        prop_assert_eq!(x.to_string().parse::<Gaussian>().unwrap(), x);
        prop_assert_eq!(y.to_string().parse::<Rational>().unwrap(), y);
    }

    #[test]
    fn gaussian_inverse(x in gaussian()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.clone() * x.inv(), Gaussian::one());
    }
}

const SIGS: [(usize, usize); 6] = [(3, 0), (2, 1), (3, 1), (1, 3), (2, 2), (4, 0)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn homogeneous_forms_have_their_invariants(
        k in 0..SIGS.len(),
        tau in prop::bool::ANY,
        sigma in prop::bool::ANY,
        coeffs in proptest::collection::vec(-3i64..=3, 4),
    ) {
        let (p, q) = SIGS[k];
        let (tau, sigma) = (if tau { 1i8 } else { -1 }, if sigma { 1i8 } else { -1 });
        let rep = build_clifford_rep::<Rational>(Signature::real(p, q), Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let basis = homogeneous_forms(&ctx, FormInvariants::new(tau, sigma, None));
        let mut b = Matrix::<Rational>::zeros(ctx.dim(), ctx.dim());
        for (m, c) in basis.iter().zip(&coeffs) {
            b = b.add(&m.scale(&Rational::from_i64(*c)));
        }
        prop_assert_eq!(b.transpose(), b.scale(&Rational::from_i64(sigma as i64)));
        for g in &rep.gammas {
            prop_assert_eq!(g.transpose().mul(&b), b.mul(g).scale(&Rational::from_i64(tau as i64)));
        }
    }

    #[test]
    fn structure_constants_round_trip(k in 0..SIGS.len()) {
        let (p, q) = SIGS[k];
        let spec = etap::cli::CaseSpec::new(Signature::real(p, q));
        let g = etap::cli::build_case::<Rational>(&spec).unwrap().algebra;
        let back = GradedLieAlgebra::from_structure_constants(
            g.field,
            g.dims.clone(),
            g.labels.clone(),
            g.provenance.clone(),
            g.truncated,
            g.structure_constants(),
        ).unwrap();
        prop_assert!(back == g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Brackets of homogeneous elements land in the sum of the degrees, and the
    /// Jacobi identity holds on random triples.
    #[test]
    fn random_brackets_respect_grading_and_jacobi(
        seed in proptest::collection::vec(-2i64..=2, 3 * 21),
    ) {
        let spec = etap::cli::CaseSpec::new(Signature::real(3, 0));
        let g = etap::cli::build_case::<Rational>(&spec).unwrap().algebra;
        let n = g.dim();
        prop_assert_eq!(n, 21);
        let vec_of = |k: usize| -> Vec<Rational> { (0..n).map(|i| Rational::from_i64(seed[k * n + i])).collect() };
        let (x, y, z) = (vec_of(0), vec_of(1), vec_of(2));
        let jac = {
            let a = g.bracket(&x, &g.bracket(&y, &z));
            let b = g.bracket(&y, &g.bracket(&z, &x));
            let c = g.bracket(&z, &g.bracket(&x, &y));
            a.iter().zip(&b).zip(&c).map(|((a, b), c)| a.clone() + b.clone() + c.clone()).collect::<Vec<_>>()
        };
        prop_assert!(jac.iter().all(|v| v.is_zero()));
        for dp in -2i32..=2 {
            for dq in -2i32..=2 {
                let proj = |v: &[Rational], d: i32| -> Vec<Rational> {
                    let r = g.range(d);
                    (0..n).map(|i| if r.contains(&i) { v[i].clone() } else { Rational::zero() }).collect()
                };
                let br = g.bracket(&proj(&x, dp), &proj(&y, dq));
                let target = dp + dq;
                for (i, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        prop_assert_eq!(g.degree_of(i), target);
                    }
                }
            }
        }
    }
}
