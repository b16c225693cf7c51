use gl2q::fusion::{
    relabel_automorphism, semiring_product, tensor_generic, GenericLabel, SemiringElement,
};
use gl2q::invariants::{invariant_report, verify_galois_pair};
use gl2q::ncpoly::{Generator, NCPoly, Word};
use gl2q::quantum::{build_appendix_system, build_gabcd};
use gl2q::rewrite::{
    normal_form, normal_form_by, Chooser, IdealBasis, ReductionSystem, DEFAULT_BOUND,
    DEFAULT_FUEL,
};
use gl2q::scalar::{a_q, Scalar, ScalarMatrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn q() -> Scalar {
    Scalar::param("q")
}

/// `Σ c_k q^k` for `k < coeffs.len()`.
fn poly_in_q(coeffs: &[i64]) -> Scalar {
    let mut s = Scalar::zero();
    let mut pw = Scalar::one();
    for c in coeffs {
        s = s.add(&pw.mul(&Scalar::from_int(*c)));
        pw = pw.mul(&q());
    }
    s
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (
        prop::collection::vec(-4i64..=4, 1..4),
        prop::collection::vec(-3i64..=3, 1..3),
        any::<bool>(),
    )
        .prop_filter_map("zero denominator", |(n, d, gauss)| {
            let den = poly_in_q(&d);
            if den.is_zero() {
                return None;
            }
            let mut s = poly_in_q(&n).checked_div(&den).ok()?;
            if gauss {
                s = s.add(&Scalar::i().mul(&Scalar::from_int(n[0])));
            }
            Some(s)
        })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Scalar::from_ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    (1i64..=9, 1i64..=6, any::<bool>())
        .prop_map(|(n, d, neg)| Scalar::from_ratio(if neg { -n } else { n }, d))
}

fn matrix(n: usize) -> impl Strategy<Value = ScalarMatrix> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| {
        ScalarMatrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()).unwrap()
    })
}

fn invertible(n: usize) -> impl Strategy<Value = ScalarMatrix> {
    matrix(n).prop_filter("singular", |m| m.is_invertible())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn scalar_print_parse_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn trace_is_cyclic(m in matrix(3), n in matrix(3)) {
        prop_assert_eq!(m.mul(&n).unwrap().trace().unwrap(), n.mul(&m).unwrap().trace().unwrap());
    }

    #[test]
    fn inverse_is_two_sided(m in invertible(3)) {
        let mi = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&mi).unwrap(), ScalarMatrix::identity(3));
        prop_assert_eq!(mi.mul(&m).unwrap(), ScalarMatrix::identity(3));
    }
}

fn letters() -> Vec<Generator> {
    let mut g = vec![Generator::d_inv(), Generator::d()];
    for i in 1..=2 {
        for j in 1..=2 {
            g.push(Generator::x(i, j));
        }
    }
    g
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..6usize, 0..=max)
        .prop_map(|ix| Word::from_letters(ix.into_iter().map(|i| letters()[i])))
}

fn word_without_dinv(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..6usize, 0..=max)
        .prop_map(|ix| Word::from_letters(ix.into_iter().map(|i| letters()[i])))
}

fn ncpoly(max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word_without_dinv(max_len), -3i64..=3, any::<bool>()), 0..4).prop_map(
        |ts| {
            NCPoly::from_terms(ts.into_iter().map(|(w, c, with_q)| {
                let c = Scalar::from_int(c);
                (w, if with_q { c.mul(&q()) } else { c })
            }))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn word_order_is_monomial(u in word(3), v in word(3), a in word(2), b in word(2)) {
        prop_assume!(u != v);
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        prop_assert!(a.concat(&lo).concat(&b) < a.concat(&hi).concat(&b));
    }

    #[test]
    fn ring_axioms(p in ncpoly(2), r in ncpoly(2), s in ncpoly(2)) {
        prop_assert_eq!(p.mul(&r).mul(&s), p.mul(&r.mul(&s)));
        prop_assert_eq!(p.mul(&r.add(&s)), p.mul(&r).add(&p.mul(&s)));
        prop_assert_eq!(p.add(&r).mul(&s), p.mul(&s).add(&r.mul(&s)));
        prop_assert_eq!(p.mul(&NCPoly::one()), p.clone());
        prop_assert!(p.sub(&p).is_zero());
    }
}

/// The normalized system of `ℳ(A_q, A_q | A_p, A_{q²/p})`.
fn appendix() -> &'static ReductionSystem {
    static SYS: OnceLock<ReductionSystem> = OnceLock::new();
    SYS.get_or_init(|| {
        let p = Scalar::param("p");
        let p2 = q().mul(&q()).checked_div(&p).unwrap();
        build_appendix_system(&q(), &a_q(&p), &a_q(&p2)).unwrap()
    })
}

struct Seeded(ChaCha8Rng);

impl Chooser for Seeded {
    fn pick(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normal_form_is_strategy_independent(p in ncpoly(4), seed in any::<u64>()) {
        let sys = appendix();
        let det = normal_form(&p, sys).unwrap().poly;
        let mut ch = Seeded(ChaCha8Rng::seed_from_u64(seed));
        let rnd = normal_form_by(&p, sys, &mut ch, DEFAULT_FUEL).unwrap();
        prop_assert_eq!(det, rnd);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_multiplicative(p in ncpoly(2), r in ncpoly(2)) {
        let sys = appendix();
        let np = normal_form(&p, sys).unwrap().poly;
        let nr = normal_form(&r, sys).unwrap().poly;
        prop_assert_eq!(normal_form(&np, sys).unwrap().poly, np.clone());
        prop_assert_eq!(
            normal_form(&p.mul(&r), sys).unwrap().poly,
            normal_form(&np.mul(&nr), sys).unwrap().poly
        );
    }
}

fn glabel(max_n: u32) -> impl Strategy<Value = GenericLabel> {
    (0..=max_n, -5i64..=5).prop_map(|(n, e)| GenericLabel::new(n, e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fusion_dimension_is_multiplicative(a in glabel(20), b in glabel(20)) {
        prop_assert_eq!(tensor_generic(a, b).dim(), (a.n as u64 + 1) * (b.n as u64 + 1));
    }

    #[test]
    fn fusion_is_associative_and_commutative(a in glabel(8), b in glabel(8), c in glabel(8)) {
        let (x, y, z) = (SemiringElement::simple(a), SemiringElement::simple(b), SemiringElement::simple(c));
        prop_assert_eq!(
            semiring_product(&semiring_product(&x, &y), &z),
            semiring_product(&x, &semiring_product(&y, &z))
        );
        prop_assert_eq!(semiring_product(&x, &y), semiring_product(&y, &x));
    }

    #[test]
    fn relabel_is_an_automorphism(a in glabel(10), b in glabel(10)) {
        let (x, y) = (SemiringElement::simple(a), SemiringElement::simple(b));
        let f = |s: &SemiringElement<GenericLabel>| relabel_automorphism(-1, s).unwrap();
        prop_assert_eq!(f(&semiring_product(&x, &y)), semiring_product(&f(&x), &f(&y)));
        prop_assert_eq!(f(&x.add(&y)), f(&x).add(&f(&y)));
        prop_assert_eq!(f(&f(&x)), x);
    }
}

fn congruent(p: &ScalarMatrix, m: &ScalarMatrix) -> ScalarMatrix {
    ScalarMatrix::product(&[&p.transpose(), m, p]).unwrap()
}

fn inverse_congruent(p: &ScalarMatrix, m: &ScalarMatrix) -> ScalarMatrix {
    let pi = p.inverse().unwrap();
    ScalarMatrix::product(&[&pi, m, &pi.transpose()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn kappa_is_invariant_under_hopf_isomorphisms(p in invertible(2), qm in invertible(2)) {
        let a = a_q(&Scalar::from_int(2));
        let k = invariant_report(&a, &a).unwrap().kappa;
        let k1 = invariant_report(&congruent(&p, &a), &inverse_congruent(&p, &a)).unwrap().kappa;
        let ai = a.inverse().unwrap();
        let k2 = invariant_report(&congruent(&qm, &ai), &inverse_congruent(&qm, &ai)).unwrap().kappa;
        prop_assert!(k.is_some());
        prop_assert_eq!(&k, &k1);
        prop_assert_eq!(&k, &k2);
    }

    #[test]
    fn scale_law(
        p in nonzero_rational(),
        r in nonzero_rational(),
        alpha in nonzero_rational(),
        beta in nonzero_rational(),
    ) {
        let (a, b) = (a_q(&p), a_q(&r));
        let base = invariant_report(&a, &b).unwrap();
        let scaled = invariant_report(&a.scalar_mul(&alpha), &b.scalar_mul(&beta)).unwrap();
        let ab = alpha.mul(&beta);
        prop_assert_eq!(scaled.lambda.unwrap(), base.lambda.unwrap().mul(&ab).mul(&ab));
        prop_assert_eq!(scaled.mu, base.mu.mul(&ab));
        prop_assert_eq!(scaled.kappa, base.kappa);
    }

    #[test]
    fn galois_pair_is_reflexive(a in invertible(2), b in invertible(2)) {
        let r = invariant_report(&a, &b).unwrap();
        let v = verify_galois_pair(&a, &b, &a, &b).unwrap();
        prop_assert_eq!(v.pass, r.condition_ok);
    }

    #[test]
    fn galois_pair_reflexive_on_a_q(p in nonzero_rational(), r in nonzero_rational()) {
        let (a, b) = (a_q(&p), a_q(&r));
        prop_assert!(verify_galois_pair(&a, &b, &a, &b).unwrap().pass);
    }
}

/// Raw relations of `𝒢(A_q,A_q|A_p,A_{q²/p})` and the normalized rules
/// generate the same ideal.
#[test]
fn normalized_rules_and_raw_relations_cross_membership() {
    let p = Scalar::param("p");
    let p2 = q().mul(&q()).checked_div(&p).unwrap();
    let (aq, c, d) = (a_q(&q()), a_q(&p), a_q(&p2));
    let raw = build_gabcd(&aq, &aq, &c, &d, false).unwrap().relations;
    let sys = appendix();
    let mut from_rules = IdealBasis::from_confluent(sys);
    for r in &raw {
        assert!(from_rules.member(r, DEFAULT_BOUND).unwrap().is_verified(), "{r}");
    }
    let mut from_raw = IdealBasis::new(&raw, 4).unwrap();
    for rule in sys.rules() {
        let rel = rule.as_relation();
        assert!(from_raw.member(&rel, DEFAULT_BOUND).unwrap().is_verified(), "{rel}");
    }
}
