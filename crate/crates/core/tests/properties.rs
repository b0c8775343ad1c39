use num_complex::Complex64;
use proptest::prelude::*;

use sl2char::chars::{
    character_of_pair, classify_real_character, construct_pair, hermitian_form,
    is_positive_definite, CharacterF2, RealCharClass,
};
use sl2char::fricke::{fn_to_traces, h1z2_action, member_s11, FnCoords, S11Verdict};
use sl2char::hypgeom::{axes_inner_formula, minkowski_inner, real_normal_form};
use sl2char::mat2::{evaluate_word, hat, sym2, sym2_form, Mat2};
use sl2char::polyring::{f2_vars, rat, Monomial, Polynomial};
use sl2char::random::{random_unimodular, trial_rng};
use sl2char::tracepoly::{kappa_value, trace_poly_f2};
use sl2char::words::Word;

fn signed_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let letter = (1..=rank as i32, any::<bool>()).prop_map(|(i, inv)| if inv { -i } else { i });
    prop::collection::vec(letter, 0..=max_len)
        .prop_map(move |l| Word::from_signed(rank, &l).unwrap())
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    let term = (0u32..3, 0u32..3, 0u32..3, -5i64..=5);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let v = f2_vars();
        terms
            .into_iter()
            .fold(Polynomial::zero(&v), |acc, (a, b, c, k)| {
                &acc + &Polynomial::monomial(&v, Monomial(vec![a, b, c]), rat(k))
            })
    })
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_idempotent_and_inverse_cancels(w in signed_word(3, 12)) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert!(w.multiply(&w.inverse()).unwrap().is_identity());
        let (core, conj) = r.cyclic_reduce();
        prop_assert!(core.is_cyclically_reduced());
        let back = conj.multiply(&core).unwrap().multiply(&conj.inverse()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn multiplication_is_associative(a in signed_word(2, 6), b in signed_word(2, 6), d in signed_word(2, 6)) {
        let l = a.multiply(&b).unwrap().multiply(&d).unwrap();
        let r = a.multiply(&b.multiply(&d).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn polynomial_ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
        let pt = [rat(2), rat(-3), rat(1) / rat(5)];
        prop_assert_eq!((&p * &q).evaluate(&pt), p.evaluate(&pt) * q.evaluate(&pt));
    }

    #[test]
    fn polynomial_json_round_trip(p in small_poly()) {
        prop_assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn trace_polynomial_matches_matrices(w in signed_word(2, 10), seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let g = [random_unimodular(&mut rng), random_unimodular(&mut rng)];
        let ch = character_of_pair(&g[0], &g[1]);
        let f = trace_poly_f2(&w).unwrap();
        let t = evaluate_word(&w, &g).unwrap().trace();
        let v = f.evaluate(&ch.as_array());
        prop_assert!((v - t).norm() <= 1e-8 * (1.0 + t.norm()));
    }

    #[test]
    fn trace_polynomial_is_a_class_function(w in signed_word(2, 10), k in 0usize..10) {
        let f = trace_poly_f2(&w).unwrap();
        let l = w.letters();
        let rotated = if l.is_empty() { w.clone() } else {
            let k = k % l.len();
            let mut r = l[k..].to_vec();
            r.extend_from_slice(&l[..k]);
            Word::from_letters(2, r).unwrap()
        };
        prop_assert_eq!(trace_poly_f2(&rotated).unwrap(), f.clone());
        prop_assert_eq!(trace_poly_f2(&w.inverse()).unwrap(), f);
    }

    #[test]
    fn conjugate_pairs_share_characters(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 1);
        let (a, b, h) = (random_unimodular(&mut rng), random_unimodular(&mut rng), random_unimodular(&mut rng));
        let hi = h.inverse().unwrap();
        let ca = &(&h * &a) * &hi;
        let cb = &(&h * &b) * &hi;
        let d = character_of_pair(&a, &b).distance(&character_of_pair(&ca, &cb));
        prop_assert!(d <= 1e-10 * (1.0 + h.norm_max().powi(2) * a.norm_max().max(b.norm_max()).powi(2)));
    }

    #[test]
    fn normal_form_round_trip(x in -5.0..5.0f64, y in -5.0..5.0f64, z in -5.0..5.0f64, xi in -5.0..5.0f64) {
        let ch = CharacterF2::new(Complex64::new(x, xi), c(y), Complex64::new(z, -xi));
        let (a, b) = construct_pair(&ch);
        prop_assert!(character_of_pair(&a, &b).distance(&ch) <= 1e-10 * (1.0 + ch.x.norm() + ch.z.norm()));
    }

    #[test]
    fn sign_action_preserves_kappa_and_fricke(x in -8.0..8.0f64, y in -8.0..8.0f64, z in -8.0..8.0f64) {
        let k = kappa_value(x, y, z);
        let base = member_s11(x, y, z).verdict != S11Verdict::Nonmember;
        for t in h1z2_action(x, y, z) {
            prop_assert_eq!(kappa_value(t[0], t[1], t[2]), k);
            prop_assert_eq!(member_s11(t[0], t[1], t[2]).verdict != S11Verdict::Nonmember, base);
        }
    }

    #[test]
    fn symmetric_square_preserves_its_form(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 2);
        let m = random_unimodular(&mut rng);
        let s = sym2(&m);
        let j = sym2_form::<Complex64>();
        let moved = &(&s.transpose() * &j) * &s;
        prop_assert!(moved.distance(&j) <= 1e-9 * (1.0 + m.norm_max().powi(4)));
    }

    #[test]
    fn traceless_inner_product_is_minus_det(a in -5.0..5.0f64, b in -5.0..5.0f64, d in -5.0..5.0f64) {
        let v = Mat2::new(a, b, d, -a);
        prop_assert!((minkowski_inner(&v, &v) + v.det()).abs() <= 1e-12 * (1.0 + a * a + b.abs() * d.abs()));
    }

    #[test]
    fn axes_inner_product_formula(x in 2.1..9.0f64, y in 2.1..9.0f64, z in -9.0..9.0f64, sx in any::<bool>(), sy in any::<bool>()) {
        let x = if sx { -x } else { x };
        let y = if sy { -y } else { y };
        if let Ok((a, b)) = real_normal_form(x, y, z) {
            let (ha, hb) = (hat(&a).unwrap(), hat(&b).unwrap());
            let (aa, ab) = (minkowski_inner(&ha, &ha), minkowski_inner(&ha, &hb));
            prop_assert!((aa - 1.0).abs() <= 1e-9);
            let expected = axes_inner_formula(x, y, z);
            prop_assert!((ab - expected).abs() <= 1e-8 * (1.0 + expected.abs()));
        }
    }

    #[test]
    fn fenchel_nielsen_lands_in_the_slice(l in 0.1..5.0f64, tau in -3.0..3.0f64, b in 0.0..4.0f64) {
        let (x, y, z) = fn_to_traces(&FnCoords::new(l, tau, b).unwrap());
        let k = kappa_value(x, y, z);
        prop_assert!((k + 2.0 * (b / 2.0).cosh()).abs() <= 1e-9 * (1.0 + x * x + y * y + z * z));
        prop_assert_eq!(member_s11(x, y, z).verdict, S11Verdict::MemberSlice);
    }

    #[test]
    fn compact_characters_have_definite_forms(x in -1.99..1.99f64, y in -1.99..1.99f64, z in -1.99..1.99f64) {
        if classify_real_character(x, y, z) == RealCharClass::Su2FixedPoint {
            let h = hermitian_form(x, y, z).unwrap();
            let d = h.det().re;
            prop_assert!((d - (2.0 - kappa_value(x, y, z))).abs() <= 1e-9);
            prop_assert!(d > 0.0 && is_positive_definite(&h));
        }
    }
}
