//! Property tests for the algebraic invariants.

use borromean::algebra::{equal_up_to_unit, hamilton_cayley_check, Exp, LaurentPoly, Mat2, Mat2L};
use borromean::charvar::{
    classify, cover_t3, delta, mk_d, mk_h, mk_k, mk_p, realize_x4, rng_from_seed, sample_component, solve_theta,
    x4_lambda, CharacterTuple, ComponentLabel, KappaBranch, Representation,
};
use borromean::tap::{is_unit_match, phi, phi_word, tap_fox, tap_fox_wirtinger, wirtinger_images};
use borromean::words::{fox_derivative, parse_word, FreeWord, GroupRingElem, Letter, Presentation};
use borromean::{Complex64 as C, Tolerance};
use proptest::prelude::*;

type P = LaurentPoly<f64>;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn complex(r: f64) -> impl Strategy<Value = C> {
    (-r..r, -r..r).prop_map(|(a, b)| C::new(a, b))
}

fn poly() -> impl Strategy<Value = P> {
    prop::collection::vec(([-2i32..=2, -2i32..=2, -2i32..=2], complex(2.0)), 1..6)
        .prop_map(|terms| P::from_terms(terms.into_iter().map(|(e, c): (Exp, C)| (e, c))))
        .prop_filter("nonzero", |p| p.max_abs() > 0.1)
}

fn sl2() -> impl Strategy<Value = Mat2<f64>> {
    (complex(2.0), complex(2.0), complex(2.0))
        .prop_filter("invertible corner", |(a, _, _)| a.norm() > 0.3)
        .prop_map(|(a, b, c)| Mat2::new(a, b, c, (1.0 + b * c) / a))
}

/// Unimodular matrix with entries at most 3, for conjugating samples.
fn conjugator() -> impl Strategy<Value = Mat2<f64>> {
    sl2().prop_filter("bounded", |g| g.max_norm() <= 3.0)
}

fn mat2l() -> impl Strategy<Value = Mat2L<f64>> {
    (poly(), poly(), poly(), poly()).prop_map(|(a, b, c, d)| Mat2L::new(a, b, c, d))
}

fn word(max_gen: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=max_gen, any::<bool>()), 0..=max_len)
        .prop_map(|ls| FreeWord::from_letters(ls.into_iter().map(|(g, inv)| Letter::new(g, inv))))
}

fn rel_close(a: &P, b: &P, eps: f64) -> bool {
    (a - b).max_abs() <= eps * a.max_abs().max(b.max_abs()).max(1.0)
}

fn x_minus_one(x: &Mat2<f64>, j: usize) -> Mat2L<f64> {
    let mut e = [0; 3];
    e[j - 1] = 1;
    &Mat2L::monomial_times(x, e) - &Mat2L::identity()
}

proptest! {
    #[test]
    fn laurent_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert!(rel_close(&(&(&p + &q) * &r), &(&(&p * &r) + &(&q * &r)), 1e-12));
        prop_assert!(rel_close(&(&p * &q), &(&q * &p), 1e-12));
    }

    #[test]
    fn det_is_multiplicative(a in mat2l(), b in mat2l()) {
        prop_assert!(rel_close(&(&a * &b).det(), &(&a.det() * &b.det()), 1e-10));
    }

    #[test]
    fn unit_equality_is_reflexive_and_symmetric(p in poly(), shift in [-3i32..=3, -3i32..=3, -3i32..=3], c in complex(3.0)) {
        prop_assume!(c.norm() > 0.1);
        prop_assert!(equal_up_to_unit(&p, &p, &tol()).equal);
        let q = p.shift(shift).scale(c);
        let pq = equal_up_to_unit(&p, &q, &tol());
        let qp = equal_up_to_unit(&q, &p, &tol());
        prop_assert!(pq.equal && qp.equal);
        prop_assert_eq!(pq.unit, qp.unit.map(|k| -k));
        prop_assert!((pq.scale * qp.scale - 1.0).norm() < 1e-9);
    }

    #[test]
    fn hamilton_cayley(m in sl2()) {
        prop_assert!(hamilton_cayley_check(&m) <= 1e-12);
    }

    #[test]
    fn parse_round_trip(w in word(6, 40)) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn fundamental_fox_identity(r in word(3, 12), x in [sl2(), sl2(), sl2()]) {
        let sigma = [1, 2, 3];
        let lhs = (1..=3).fold(Mat2L::zero(), |acc, j| {
            &acc + &(&phi(&fox_derivative(&r, j), &x, &sigma) * &x_minus_one(&x[j - 1], j))
        });
        let rhs = &phi_word(&r, &x, &sigma) - &Mat2L::identity();
        prop_assert!(lhs.dist(&rhs) <= 1e-8 * rhs.max_abs().max(1.0));
    }

    #[test]
    fn fox_product_rule(u in word(3, 10), v in word(3, 10), j in 1usize..=3, x in [sl2(), sl2(), sl2()]) {
        let sigma = [1, 2, 3];
        let lhs = phi(&fox_derivative(&(&u * &v), j), &x, &sigma);
        let rhs = &phi(&fox_derivative(&u, j), &x, &sigma)
            + &(&phi_word(&u, &x, &sigma) * &phi(&fox_derivative(&v, j), &x, &sigma));
        prop_assert!(lhs.dist(&rhs) <= 1e-8 * rhs.max_abs().max(1.0));
    }

    #[test]
    fn f3_identity_is_universal(x in [sl2(), sl2(), sl2()]) {
        prop_assert!(CharacterTuple::from_matrices(&x).f3_residual().norm() <= 1e-8);
    }

    #[test]
    fn h_and_k_products(t in complex(2.0), lambda in complex(2.0), mu in complex(2.0), alpha in complex(2.0)) {
        prop_assume!(lambda.norm() > 0.2 && (lambda + 1.0).norm() > 0.2 && mu.norm() > 0.2 && t.norm() > 0.2);
        if let (Ok(a), Ok(b)) = (mk_h(t, lambda, mu), mk_h(t, lambda, -mu / lambda)) {
            prop_assert!((a * b).dist(&mk_d(lambda).unwrap()) <= 1e-12);
        }
        let k = mk_k(t, alpha).unwrap() * mk_k(t, alpha - t).unwrap();
        prop_assert!(k.dist(&-mk_p(C::new(1.0, 0.0))) <= 1e-12);
    }

    #[test]
    fn theta_cover_round_trip(t in [complex(2.5), complex(2.5), complex(2.5)]) {
        let Ok(roots) = solve_theta(t[0], t[1], t[2], &tol()) else { return Ok(()) };
        for th in roots {
            let Ok((a, b)) = cover_t3(t[0], t[1], th, &tol()) else { continue };
            let d = [a, b].iter().map(|r| (r - t[2]).norm().min((r + t[2]).norm())).fold(f64::INFINITY, f64::min);
            prop_assert!(d <= 1e-9 * t[2].norm().max(1.0));
        }
    }

    #[test]
    fn lambda_minus_one_construction(t1 in complex(2.5), t2 in complex(2.5)) {
        prop_assume!(t1.norm() > 0.3 && t2.norm() > 0.3);
        let one = C::new(1.0, 0.0);
        let theta = (one - 4.0 / (t1 * t1) - 4.0 / (t2 * t2)).sqrt();
        let beta = (theta - 1.0) * t2 * 0.5;
        let x = [mk_k(t1, C::new(0.0, 0.0)).unwrap(), mk_k(t2, beta).unwrap(), mk_p(theta * 0.5)];
        let rep = Representation::new(x, ComponentLabel::Custom);
        let scale = x.iter().map(|m| m.max_norm()).fold(1.0, f64::max).powi(4);
        prop_assert!(rep.relation_residuals().iter().all(|r| *r <= 1e-12 * scale));
        let c = rep.character();
        prop_assert!((c.t3 - 2.0).norm() < 1e-12);
        prop_assert!((c.t12 - (theta + 1.0) / 2.0 * c.t1 * c.t2).norm() <= 1e-9 * scale);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classify_contains_realizer_label(seed in any::<u64>(), n in 0usize..13) {
        let label = ComponentLabel::all()[n];
        let rep = sample_component(&mut rng_from_seed(seed), label, &tol()).unwrap();
        let r = classify(&rep.character(), &tol()).unwrap();
        prop_assert!(r.labels.contains(&label), "{:?} not in {:?}", label, r.labels);
    }

    #[test]
    fn conjugation_invariance(seed in any::<u64>(), n in 0usize..13, g in conjugator()) {
        let rep = sample_component(&mut rng_from_seed(seed), ComponentLabel::all()[n], &tol()).unwrap();
        let conj = rep.conjugate_by(&g);
        prop_assert!(conj.character().dist(&rep.character()) <= 1e-9);
        let loose = Tolerance { abs: 1e-7, ..tol() };
        let (a, b) = (tap_fox(&rep, 3, &loose).unwrap(), tap_fox(&conj, 3, &loose).unwrap());
        prop_assert!(is_unit_match(&a.compare(&b, &loose), 1e-7));
    }

    #[test]
    fn column_independence(seed in any::<u64>(), n in 0usize..13) {
        let rep = sample_component(&mut rng_from_seed(seed), ComponentLabel::all()[n], &tol()).unwrap();
        let fox: Vec<_> = (1..=3).map(|v| tap_fox(&rep, v, &tol()).unwrap()).collect();
        prop_assert!(is_unit_match(&fox[0].compare(&fox[1], &tol()), 1e-7));
        prop_assert!(is_unit_match(&fox[0].compare(&fox[2], &tol()), 1e-7));
    }

    #[test]
    fn wirtinger_presentation(seed in any::<u64>(), n in 0usize..13, v in 1usize..=6) {
        let rep = sample_component(&mut rng_from_seed(seed), ComponentLabel::all()[n], &tol()).unwrap();
        let y = wirtinger_images(&rep.matrices());
        let p = Presentation::borromean_wirtinger();
        let omitted = Presentation::borromean_wirtinger_omitted();
        for r in p.relators().iter().chain([&omitted]) {
            prop_assert!(r.eval(&y).dist(&Mat2::identity()) <= 1e-9);
        }
        let a = tap_fox(&rep, 1, &tol()).unwrap();
        let b = tap_fox_wirtinger(&rep, v, &tol()).unwrap();
        prop_assert!(is_unit_match(&a.compare(&b, &tol()), 1e-7));
    }

    #[test]
    fn x4_internal_consistency(seed in any::<u64>()) {
        let rep = sample_component(&mut rng_from_seed(seed), ComponentLabel::X4, &tol()).unwrap();
        let p = |k: &str| rep.params[k];
        let (t1, t2, t3, theta, kappa) = (p("t1"), p("t2"), p("t3"), p("theta"), p("kappa"));
        let lambda = x4_lambda(kappa, theta, t3);
        let one = C::new(1.0, 0.0);
        let nu = (one - lambda.inv()) / (one + (kappa * kappa).inv()) * t1 * t2 / delta(t1, lambda);
        let (Ok(x1), Ok(x2)) = (mk_h(t1, lambda, one), mk_h(t2, lambda, nu)) else { return Ok(()) };
        let h = Representation::new([x1, x2, mk_d(kappa).unwrap()], ComponentLabel::Custom);
        let scale = h.matrices().iter().map(|m| m.max_norm()).fold(1.0, f64::max).powi(4);
        prop_assert!(h.relation_residuals().iter().all(|r| *r <= 1e-12 * scale));
        prop_assert!(h.character().dist(&rep.character()) <= 1e-9 * scale);
        let other = realize_x4(t1, t2, t3, theta, KappaBranch::Other, &tol());
        let principal = realize_x4(t1, t2, t3, theta, KappaBranch::Principal, &tol());
        if let (Ok(a), Ok(b)) = (other, principal) {
            prop_assert!(a.character().dist(&b.character()) <= 1e-9);
        }
    }
}

#[test]
fn m3_regression() {
    let rep = sample_component(&mut rng_from_seed(11), ComponentLabel::X4, &tol()).unwrap();
    let x = rep.matrices();
    let m = Presentation::borromean().jacobian().delete_column(3).unwrap();
    let paper = borromean::tap::m3_paper_entries();
    for i in 0..2 {
        for j in 0..2 {
            let d = phi(&m[i][j], &x, &[1, 2, 3]).dist(&phi(&paper[i][j], &x, &[1, 2, 3]));
            assert!(d < 1e-9, "({i},{j}): {d}");
        }
    }
    let one = GroupRingElem::one();
    assert_eq!(phi(&one, &x, &[1, 2, 3]), Mat2L::identity());
}
