//! Randomized checks of the algebraic laws the library rests on: free-group
//! word algebra, monomial orders, exact polynomial arithmetic, trace
//! reduction invariances, and Groebner membership arithmetic.

use charscheme::groebner::{self, Budget};
use charscheme::ideal::{character_ideal, RelatorMode};
use charscheme::poly::{Monomial, MonomialOrder, Polynomial, TraceRing};
use charscheme::presentation::{parse_presentation, parse_word, Letter, Word};
use charscheme::trace::TraceReducer;
use charscheme::{GroebnerBasis, Ideal};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use std::cmp::Ordering;
use std::sync::{Arc, LazyLock};

fn words(num_gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..num_gens, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
}

fn monomials(nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..=5, nvars).prop_map(Monomial::from_exps)
}

fn rationals() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// Polynomials with a handful of small terms over a fixed-arity ring.
fn polys(ring: &'static LazyLock<Arc<TraceRing>>) -> impl Strategy<Value = Polynomial> {
    let nvars = ring.num_vars();
    prop::collection::vec((monomials(nvars), rationals()), 0..=4)
        .prop_map(|terms| Polynomial::from_terms(ring, terms))
}

fn points(nvars: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(rationals(), nvars)
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop::sample::select(vec![MonomialOrder::grevlex(), MonomialOrder::lex()])
}

static RING2: LazyLock<Arc<TraceRing>> = LazyLock::new(|| TraceRing::for_rank(2));
static GEN_NAMES3: LazyLock<Vec<String>> =
    LazyLock::new(|| TraceRing::for_rank(3).gen_names().to_vec());

proptest! {
    /// Words form a group: double inverse is the identity map and a word
    /// times its inverse freely reduces to the empty word.
    #[test]
    fn word_inverse_laws(w in words(3, 8)) {
        prop_assert_eq!(&w.inverse().inverse(), &w);
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    /// Printing a word and parsing it back is the identity.
    #[test]
    fn word_display_roundtrip(w in words(3, 8)) {
        let text = w.display(&GEN_NAMES3);
        prop_assert_eq!(parse_word(&text, &GEN_NAMES3).unwrap(), w);
    }

    /// Cyclic reduction never grows a word and leaves nothing to cancel
    /// across the wrap-around.
    #[test]
    fn cyclic_reduction_shrinks_and_terminates(w in words(3, 8)) {
        let c = w.cyclically_reduce();
        prop_assert!(c.len() <= w.len());
        if let (Some(first), Some(last)) = (c.letters().first(), c.letters().last()) {
            prop_assert!(!(first.gen == last.gen && first.inverse != last.inverse));
        }
    }

    /// Monomial orders are total orders: antisymmetric, transitive, equal
    /// only on equal monomials.
    #[test]
    fn monomial_orders_are_total(
        order in orders(),
        a in monomials(7),
        b in monomials(7),
        c in monomials(7),
    ) {
        prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
        prop_assert_eq!(order.cmp(&a, &b) == Ordering::Equal, a == b);
        if order.cmp(&a, &b) != Ordering::Greater && order.cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(order.cmp(&a, &c), Ordering::Greater);
        }
    }

    /// Monomial orders are multiplicative and have 1 as their minimum.
    #[test]
    fn monomial_orders_respect_multiplication(
        order in orders(),
        a in monomials(7),
        b in monomials(7),
        c in monomials(7),
    ) {
        prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), order.cmp(&a, &b));
        prop_assert_ne!(order.cmp(&Monomial::one(7), &a), Ordering::Greater);
    }

    /// Polynomial arithmetic satisfies the commutative ring axioms, with
    /// structural equality of canonical forms.
    #[test]
    fn polynomial_ring_axioms(
        f in polys(&RING2),
        g in polys(&RING2),
        h in polys(&RING2),
    ) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.sub(&f), Polynomial::zero(&RING2));
    }

    /// Evaluation at a rational point is a ring homomorphism.
    #[test]
    fn evaluation_is_a_homomorphism(
        f in polys(&RING2),
        g in polys(&RING2),
        p in points(3),
    ) {
        prop_assert_eq!(f.add(&g).eval_rational(&p), f.eval_rational(&p) + g.eval_rational(&p));
        prop_assert_eq!(f.mul(&g).eval_rational(&p), f.eval_rational(&p) * g.eval_rational(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Traces are class functions: invariant under conjugation, rotation,
    /// and inversion of the word.
    #[test]
    fn trace_reduction_invariances(w in words(3, 6), u in words(3, 3), k in 0usize..6) {
        let reducer = TraceReducer::new(&TraceRing::for_rank(3));
        let t = reducer.reduce(&w);
        prop_assert_eq!(&reducer.reduce(&u.concat(&w).concat(&u.inverse())), &t);
        prop_assert_eq!(&reducer.reduce(&w.inverse()), &t);
        if !w.is_empty() {
            prop_assert_eq!(&reducer.reduce(&w.rotate(k % w.len())), &t);
        }
    }

    /// The product identity t_u*t_v = t_uv + t_{u^-1 v}: exact in rank 2,
    /// modulo the fundamental relation in rank 3.
    #[test]
    fn trace_product_identity(u in words(3, 5), v in words(3, 5)) {
        for rank in [2usize, 3] {
            let reducer = TraceReducer::new(&TraceRing::for_rank(rank));
            let cap = |w: &Word| {
                Word::from_letters(
                    w.letters().iter().map(|l| Letter::new(l.gen % rank, l.inverse)),
                )
            };
            let (u, v) = (cap(&u), cap(&v));
            let lhs = reducer.reduce(&u).mul(&reducer.reduce(&v));
            let rhs = reducer.reduce(&u.concat(&v)).add(&reducer.reduce(&u.inverse().concat(&v)));
            prop_assert!(reducer.equal_as_trace(&lhs, &rhs));
        }
    }

    /// The relator-difference generators satisfy both recursion identities
    /// used to prove the word tower stabilizes.
    #[test]
    fn theta_recursions(alpha in words(2, 4), beta in words(2, 4), r in words(2, 5)) {
        let reducer = TraceReducer::new(&RING2);
        let one_step = reducer
            .reduce(&alpha)
            .mul(&reducer.theta(&Word::empty(), &r))
            .sub(&reducer.theta(&alpha.inverse(), &r));
        prop_assert_eq!(reducer.theta(&alpha, &r), one_step);
        let two_step = reducer
            .reduce(&alpha)
            .mul(&reducer.theta(&beta, &r))
            .sub(&reducer.theta(&alpha.inverse().concat(&beta), &r));
        prop_assert_eq!(reducer.theta(&alpha.concat(&beta), &r), two_step);
    }

    /// The reduced trace of a word never exceeds the word's length in total
    /// degree.
    #[test]
    fn trace_degree_bound(w in words(3, 8)) {
        let reducer = TraceReducer::new(&TraceRing::for_rank(3));
        prop_assert!(reducer.reduce(&w).total_degree() <= w.len() as u32);
    }

    /// Symbolic reduction agrees with direct matrix traces at random exact
    /// representations.
    #[test]
    fn reduction_matches_matrix_traces(seed in any::<u64>(), w in words(3, 6)) {
        let ring = TraceRing::for_rank(3);
        let reducer = TraceReducer::new(&ring);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let rep = charscheme::oracle::random_representation(&mut rng, 3);
        prop_assert!(charscheme::oracle::check_reduction(&rep, &w, &reducer.reduce(&w)));
    }
}

static TREFOIL: LazyLock<(Ideal, Arc<GroebnerBasis>)> = LazyLock::new(|| {
    let p = parse_presentation("gens: a b\nrel: b a b = a b a").unwrap();
    let ideal = character_ideal(&p, RelatorMode::Pair);
    let gb = ideal.groebner(&MonomialOrder::grevlex(), &Budget::default()).unwrap();
    (ideal, gb)
});

static INTERSECTION: LazyLock<(Ideal, Ideal, Ideal)> = LazyLock::new(|| {
    let f = |s| charscheme::poly::parse_polynomial(s, &RING2).unwrap();
    let i = Ideal::new(&RING2, vec![f("t_a - 2"), f("t_b^2 - t_ab")]);
    let j = Ideal::new(&RING2, vec![f("t_ab + t_a*t_b")]);
    let both = groebner::intersect(&i, &j, &Budget::default()).unwrap();
    (i, j, both)
});

/// A random element of the ideal: generators combined with the given
/// multiplier polynomials, cycling if there are more multipliers.
fn combination(ideal: &Ideal, multipliers: &[Polynomial]) -> Polynomial {
    let gens = ideal.gens();
    let mut acc = Polynomial::zero(ideal.ring());
    for (k, h) in multipliers.iter().enumerate() {
        acc = acc.add(&h.mul(&gens[k % gens.len()]));
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Normal forms are idempotent and membership is closed under addition
    /// and multiplication by arbitrary ring elements.
    #[test]
    fn groebner_membership_arithmetic(
        hs in prop::collection::vec(polys(&RING2), 1..=3),
        h in polys(&RING2),
    ) {
        let (ideal, gb) = &*TREFOIL;
        let nf = gb.normal_form(&h);
        prop_assert_eq!(&gb.normal_form(&nf), &nf);
        let f = combination(ideal, &hs);
        prop_assert!(gb.normal_form(&f).is_zero());
        prop_assert!(gb.normal_form(&f.add(&combination(ideal, &[h.clone()]))).is_zero());
        prop_assert!(gb.normal_form(&h.mul(&f)).is_zero());
    }

    /// Products of generators land in the intersection, and elements of the
    /// intersection lie in both ideals.
    #[test]
    fn intersection_sandwich(hs in prop::collection::vec(polys(&RING2), 1..=3)) {
        let (i, j, both) = &*INTERSECTION;
        let budget = Budget::default();
        let order = MonomialOrder::grevlex();
        let both_gb = both.groebner(&order, &budget).unwrap();
        for fi in i.gens() {
            for gj in j.gens() {
                prop_assert!(both_gb.normal_form(&fi.mul(gj)).is_zero());
            }
        }
        let member = combination(both, &hs);
        prop_assert!(i.groebner(&order, &budget).unwrap().normal_form(&member).is_zero());
        prop_assert!(j.groebner(&order, &budget).unwrap().normal_form(&member).is_zero());
    }
}
