//! Rewriting word traces into basic trace coordinates.
//!
//! Every trace function of a free-group word is a polynomial in the single,
//! pair, and triple traces. [`TraceReducer::reduce`] computes that
//! polynomial by structural recursion:
//!
//! 1. canonicalize the word (trace functions are invariant under cyclic
//!    rotation and inversion),
//! 2. eliminate inverse letters with t_{x^-1 b} = t_x*t_b - t_{xb},
//! 3. collapse squares with the Cayley-Hamilton rule
//!    t_{x^2 v} = t_x*t_{xv} - t_v (cyclic adjacency counts),
//! 4. split longer square-free positive words with the four-letter product
//!    expansion (`2*t_abcd = ...`),
//! 5. read off base cases of length <= 3, rewriting an out-of-order triple
//!    through the two-triple sum p.
//!
//! Each step strictly reduces (inverse count, length), so the recursion
//! terminates; results are memoized per canonical form.

use crate::poly::{builtin, MonomialOrder, Polynomial, TraceRing};
use crate::presentation::Word;
use num_rational::BigRational;
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

/// Canonical representative of the set of words sharing a trace function:
/// cyclically reduce, then choose between the word and its inverse (fewer
/// inverse letters first, ties lexicographically), then take the smallest
/// rotation.
///
/// Preferring the side with fewer inverse letters is what makes the
/// reduction's inverse-elimination step strictly decrease the inverse count
/// through re-canonicalization.
pub fn canonical_form(w: &Word) -> Word {
    let c = w.cyclically_reduce();
    if c.is_empty() {
        return c;
    }
    let min_rotation = |v: &Word| (0..v.len()).map(|k| v.rotate(k)).min().unwrap();
    let fwd = min_rotation(&c);
    let bwd = min_rotation(&c.inverse());
    match fwd.inverse_count().cmp(&bwd.inverse_count()) {
        std::cmp::Ordering::Less => fwd,
        std::cmp::Ordering::Greater => bwd,
        std::cmp::Ordering::Equal => fwd.min(bwd),
    }
}

/// Trace rewriter with a per-instance memo table.
///
/// Not `Sync`: concurrent computations should each own a reducer.
pub struct TraceReducer {
    ring: Arc<TraceRing>,
    memo: RefCell<HashMap<Word, Polynomial>>,
}

impl TraceReducer {
    /// The ring must carry the trace variables for every generator index
    /// appearing in reduced words (and must have no auxiliary variables).
    pub fn new(ring: &Arc<TraceRing>) -> Self {
        assert!(
            !ring.vars().iter().any(|v| matches!(v, crate::poly::TraceVar::Aux(_))),
            "trace reduction needs a plain trace ring without auxiliaries"
        );
        TraceReducer { ring: ring.clone(), memo: RefCell::new(HashMap::new()) }
    }

    pub fn ring(&self) -> &Arc<TraceRing> {
        &self.ring
    }

    /// The trace of `w` as a polynomial in basic trace coordinates.
    pub fn reduce(&self, w: &Word) -> Polynomial {
        let c = canonical_form(w);
        if let Some(hit) = self.memo.borrow().get(&c) {
            return hit.clone();
        }
        let result = self.compute(&c);
        self.memo.borrow_mut().insert(c, result.clone());
        result
    }

    fn compute(&self, c: &Word) -> Polynomial {
        let ring = &self.ring;
        let letters = c.letters();
        let l = letters.len();
        if l == 0 {
            return Polynomial::from_int(ring, 2);
        }
        if l == 1 {
            return Polynomial::var(ring, ring.single(letters[0].gen));
        }
        if let Some(k) = letters.iter().position(|x| x.inverse) {
            // rotate x^-1 to the front: t_{x^-1 b} = t_x*t_b - t_{xb}
            let w = c.rotate(k);
            let x = w.letters()[0].gen;
            let beta = Word::from_letters(w.letters()[1..].iter().copied());
            let xbeta = Word::generator(x).concat(&beta);
            let tx = Polynomial::var(ring, ring.single(x));
            return tx.mul(&self.reduce(&beta)).sub(&self.reduce(&xbeta));
        }
        if let Some(k) = (0..l).find(|&i| letters[i].gen == letters[(i + 1) % l].gen) {
            // rotate the square to the front: t_{x^2 v} = t_x*t_{xv} - t_v
            let w = c.rotate(k);
            let x = w.letters()[0].gen;
            let v = Word::from_letters(w.letters()[2..].iter().copied());
            let xv = Word::generator(x).concat(&v);
            let tx = Polynomial::var(ring, ring.single(x));
            return tx.mul(&self.reduce(&xv)).sub(&self.reduce(&v));
        }
        // positive and square-free from here on
        if l == 2 {
            return Polynomial::var(ring, ring.pair(letters[0].gen, letters[1].gen));
        }
        if l == 3 {
            let (i, x, y) = (letters[0].gen, letters[1].gen, letters[2].gen);
            if x < y {
                return Polynomial::var(ring, ring.triple(i, x, y));
            }
            // t_{iyx} + t_{ixy} = p(i,x,y)
            return builtin::triple_trace_sum(ring, i, y, x)
                .sub(&Polynomial::var(ring, ring.triple(i, y, x)));
        }
        // 2*t_abcd expansion with a, b, c the first three letters
        let a = Word::from_letters([letters[0]]);
        let b = Word::from_letters([letters[1]]);
        let cc = Word::from_letters([letters[2]]);
        let d = Word::from_letters(letters[3..].iter().copied());
        let t = |parts: &[&Word]| {
            let mut w = Word::empty();
            for p in parts {
                w = w.concat(p);
            }
            self.reduce(&w)
        };
        let (ta, tb, tc, td) = (t(&[&a]), t(&[&b]), t(&[&cc]), t(&[&d]));
        let (tab, tad, tbc, tcd) =
            (t(&[&a, &b]), t(&[&a, &d]), t(&[&b, &cc]), t(&[&cc, &d]));
        let (tac, tbd) = (t(&[&a, &cc]), t(&[&b, &d]));
        let (tabc, tabd, tacd, tbcd) = (
            t(&[&a, &b, &cc]),
            t(&[&a, &b, &d]),
            t(&[&a, &cc, &d]),
            t(&[&b, &cc, &d]),
        );
        let sum = ta
            .mul(&tb)
            .mul(&tc)
            .mul(&td)
            .sub(&tc.mul(&td).mul(&tab))
            .sub(&tb.mul(&tc).mul(&tad))
            .sub(&ta.mul(&td).mul(&tbc))
            .sub(&ta.mul(&tb).mul(&tcd))
            .add(&tad.mul(&tbc))
            .sub(&tac.mul(&tbd))
            .add(&tab.mul(&tcd))
            .add(&td.mul(&tabc))
            .add(&tc.mul(&tabd))
            .add(&tb.mul(&tacd))
            .add(&ta.mul(&tbcd));
        sum.scale(&BigRational::new(1.into(), 2.into()))
    }

    /// Theta(alpha, beta) = t_{alpha beta} - t_alpha, the ideal generator
    /// attached to a relator word beta and a stabilizing word alpha.
    pub fn theta(&self, alpha: &Word, beta: &Word) -> Polynomial {
        self.reduce(&alpha.concat(beta)).sub(&self.reduce(alpha))
    }

    /// The defining relations of the trace ring: the fundamental relation F
    /// for rank 3, nothing for rank <= 2. For rank >= 4 the relations are
    /// not generated here; exact comparisons are conservative.
    pub fn ring_relations(&self) -> Vec<Polynomial> {
        if self.ring.arity() == 3 {
            vec![builtin::fundamental_relation(&self.ring, 0, 1, 2)]
        } else {
            Vec::new()
        }
    }

    /// Equality of two polynomials as trace functions: exact in rank <= 2,
    /// modulo the fundamental relation in rank 3.
    pub fn equal_as_trace(&self, p: &Polynomial, q: &Polynomial) -> bool {
        let d = p.sub(q);
        if d.is_zero() {
            return true;
        }
        let rels = self.ring_relations();
        if rels.is_empty() {
            return false;
        }
        crate::groebner::reduce_full(&d, &rels, &MonomialOrder::grevlex()).is_zero()
    }

    /// Self-test of the four-letter product expansion on arbitrary words:
    /// compares 2*t_{abcd} against the expansion's right-hand side, both
    /// routed through [`reduce`](Self::reduce).
    pub fn vogt_holds(&self, a: &Word, b: &Word, c: &Word, d: &Word) -> bool {
        let abcd = a.concat(b).concat(&c.concat(d));
        let lhs = self.reduce(&abcd).scale(&BigRational::from_integer(2.into()));
        let t = |w: &Word| self.reduce(w);
        let (ta, tb, tc, td) = (t(a), t(b), t(c), t(d));
        let tab = t(&a.concat(b));
        let tad = t(&a.concat(d));
        let tbc = t(&b.concat(c));
        let tcd = t(&c.concat(d));
        let tac = t(&a.concat(c));
        let tbd = t(&b.concat(d));
        let tabc = t(&a.concat(b).concat(c));
        let tabd = t(&a.concat(b).concat(d));
        let tacd = t(&a.concat(c).concat(d));
        let tbcd = t(&b.concat(c).concat(d));
        let rhs = ta
            .mul(&tb)
            .mul(&tc)
            .mul(&td)
            .sub(&tc.mul(&td).mul(&tab))
            .sub(&tb.mul(&tc).mul(&tad))
            .sub(&ta.mul(&td).mul(&tbc))
            .sub(&ta.mul(&tb).mul(&tcd))
            .add(&tad.mul(&tbc))
            .sub(&tac.mul(&tbd))
            .add(&tab.mul(&tcd))
            .add(&td.mul(&tabc))
            .add(&tc.mul(&tabd))
            .add(&tb.mul(&tacd))
            .add(&ta.mul(&tbcd));
        self.equal_as_trace(&lhs, &rhs)
    }
}
