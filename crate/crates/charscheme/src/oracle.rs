//! Numeric cross-checks over exact Gaussian rational SL2 matrices.
//!
//! Every symbolic claim in this crate reduces to polynomial identities in
//! traces, so evaluating both sides on concrete unimodular matrices is an
//! independent oracle: a trace reduction is correct iff it matches the
//! directly computed trace on every representation, and rational matrices
//! already separate distinct polynomials. No floating point is involved.

use crate::poly::{Polynomial, TraceRing, TraceVar};
use crate::presentation::Word;
use num_rational::BigRational;
use rand::Rng;
use std::fmt;
use std::sync::Arc;

/// A 2x2 matrix over the Gaussian rationals with determinant one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Matrix {
    pub a: crate::gaussian::GaussianRational,
    pub b: crate::gaussian::GaussianRational,
    pub c: crate::gaussian::GaussianRational,
    pub d: crate::gaussian::GaussianRational,
}

use crate::gaussian::GaussianRational as G;

impl Sl2Matrix {
    /// Builds a matrix, checking the determinant is one.
    pub fn new(a: G, b: G, c: G, d: G) -> Self {
        let det = &(&a * &d) - &(&b * &c);
        assert_eq!(det, G::one(), "matrix determinant must be 1");
        Sl2Matrix { a, b, c, d }
    }

    pub fn identity() -> Self {
        Sl2Matrix { a: G::one(), b: G::zero(), c: G::zero(), d: G::one() }
    }

    pub fn mul(&self, other: &Sl2Matrix) -> Sl2Matrix {
        Sl2Matrix {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
        }
    }

    /// The inverse; for determinant one this is the adjugate.
    pub fn inverse(&self) -> Sl2Matrix {
        Sl2Matrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn trace(&self) -> G {
        &self.a + &self.d
    }

    /// The traceless part as the coordinate triple (x, y, z) of
    /// [[x, y], [z, -x]].
    pub fn traceless(&self) -> [G; 3] {
        let tr = self.trace();
        let two = BigRational::from_integer(2.into());
        let half_tr = G::new(tr.re / &two, tr.im / &two);
        [&self.a - &half_tr, self.b.clone(), self.c.clone()]
    }
}

impl fmt::Display for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A random determinant-one matrix with small rational entries: numerators
/// up to 8 in absolute value, denominators up to 4, top-left entry nonzero
/// so the last entry (1 + bc) / a stays rational.
pub fn random_sl2<R: Rng>(rng: &mut R) -> Sl2Matrix {
    let mut small = |allow_zero: bool| loop {
        let num: i64 = rng.gen_range(-8..=8);
        let den: i64 = rng.gen_range(1..=4);
        if allow_zero || num != 0 {
            return G::ratio(num, den);
        }
    };
    let a = small(false);
    let b = small(true);
    let c = small(true);
    let d = &(&G::one() + &(&b * &c)) * &a.inv();
    Sl2Matrix::new(a, b, c, d)
}

/// A tuple of independent random matrices, one per generator.
pub fn random_representation<R: Rng>(rng: &mut R, num_gens: usize) -> Vec<Sl2Matrix> {
    (0..num_gens).map(|_| random_sl2(rng)).collect()
}

/// Evaluates a word through the representation.
pub fn evaluate_word(rep: &[Sl2Matrix], w: &Word) -> Sl2Matrix {
    let mut acc = Sl2Matrix::identity();
    for l in w.letters() {
        let m = &rep[l.gen];
        let factor = if l.inverse { m.inverse() } else { m.clone() };
        acc = acc.mul(&factor);
    }
    acc
}

pub fn trace_of(rep: &[Sl2Matrix], w: &Word) -> G {
    evaluate_word(rep, w).trace()
}

/// The point in trace coordinates determined by the representation: one
/// value per ring variable. The ring must be free of auxiliaries.
pub fn trace_point(rep: &[Sl2Matrix], ring: &Arc<TraceRing>) -> Vec<G> {
    assert_eq!(rep.len(), ring.arity(), "representation arity mismatch");
    ring.vars()
        .iter()
        .map(|v| match v {
            TraceVar::Single(i) => rep[*i].trace(),
            TraceVar::Pair(i, j) => rep[*i].mul(&rep[*j]).trace(),
            TraceVar::Triple(i, j, k) => rep[*i].mul(&rep[*j]).mul(&rep[*k]).trace(),
            TraceVar::Aux(name) => panic!("trace point undefined for auxiliary {name}"),
        })
        .collect()
}

/// Checks a claimed trace polynomial for `w` against the directly computed
/// trace on one representation.
pub fn check_reduction(rep: &[Sl2Matrix], w: &Word, reduced: &Polynomial) -> bool {
    let point = trace_point(rep, reduced.ring());
    reduced.eval(&point) == trace_of(rep, w)
}

/// Rank of a list of coordinate triples over the Gaussian rationals, by
/// exact elimination.
fn rank3(rows: &[[G; 3]]) -> usize {
    let mut rows: Vec<[G; 3]> = rows.to_vec();
    let mut rank = 0;
    for col in 0..3 {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..3 {
                let sub = &rows[rank][c] * &factor;
                rows[r][c] = &rows[r][c] - &sub;
            }
        }
        rank += 1;
        if rank == 3 {
            break;
        }
    }
    rank
}

/// Seeded fuzz run: `count` random words over `num_gens` generators, each
/// reduced symbolically and cross-checked against the direct matrix trace
/// at a random representation. Returns the failing words (empty on a
/// clean run).
pub fn fuzz_reduction(seed: u64, count: usize, num_gens: usize, max_len: usize) -> Vec<Word> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let ring = TraceRing::for_rank(num_gens);
    let reducer = crate::trace::TraceReducer::new(&ring);
    let mut failures = Vec::new();
    for _ in 0..count {
        let w = crate::presentation::random_word(&mut rng, num_gens, max_len);
        let reduced = reducer.reduce(&w);
        let rep = random_representation(&mut rng, num_gens);
        if !check_reduction(&rep, &w, &reduced) {
            failures.push(w);
        }
    }
    failures
}

/// Certifies irreducibility: evaluates all freely reduced words up to
/// `depth` plus their pairwise products, and tests whether the traceless
/// parts span the full three-dimensional space. Rank three means the
/// matrix algebra generated by the image is everything, so no common
/// eigenvector exists; lower rank means no certificate at this depth (and
/// for genuinely reducible representations the rank stays below three at
/// every depth).
///
/// The span test is equivalent to searching the same pool for a triple
/// (A, B, C) with tr(ABC) != tr(ACB): that difference is twice the
/// determinant of the traceless parts of A, B, C, so some triple
/// separates the two trace orderings exactly when the traceless parts
/// reach rank three. The pairwise products matter: a quaternion-style
/// image has generator traceless parts spanning only two dimensions,
/// and the witness triple needs a length-two word.
pub fn is_simple(rep: &[Sl2Matrix], depth: usize) -> bool {
    let words = crate::ideal::reduced_words(rep.len(), depth);
    let values: Vec<Sl2Matrix> = words.iter().map(|w| evaluate_word(rep, w)).collect();
    let mut rows: Vec<[G; 3]> = values.iter().map(Sl2Matrix::traceless).collect();
    for (i, v) in values.iter().enumerate() {
        for w in &values[i..] {
            rows.push(v.mul(w).traceless());
        }
    }
    rank3(&rows) == 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Letter;
    use crate::trace::TraceReducer;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn word(letters: &[(usize, bool)]) -> Word {
        Word::from_letters(letters.iter().map(|&(g, inv)| Letter::new(g, inv)))
    }

    #[test]
    fn random_matrices_are_unimodular_and_reproducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ms: Vec<Sl2Matrix> = (0..50).map(|_| random_sl2(&mut rng)).collect();
        for m in &ms {
            let det = &(&m.a * &m.d) - &(&m.b * &m.c);
            assert_eq!(det, G::one());
        }
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let ms2: Vec<Sl2Matrix> = (0..50).map(|_| random_sl2(&mut rng2)).collect();
        assert_eq!(ms, ms2);
    }

    #[test]
    fn inverse_and_word_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rep = random_representation(&mut rng, 2);
        for m in &rep {
            assert_eq!(m.mul(&m.inverse()), Sl2Matrix::identity());
        }
        let w1 = word(&[(0, false), (1, false)]);
        let w2 = word(&[(1, true), (0, false)]);
        let prod = evaluate_word(&rep, &w1).mul(&evaluate_word(&rep, &w2));
        assert_eq!(prod, evaluate_word(&rep, &w1.concat(&w2)));
        // trace is conjugation invariant
        let g = random_sl2(&mut rng);
        let m = evaluate_word(&rep, &w1);
        assert_eq!(g.mul(&m).mul(&g.inverse()).trace(), m.trace());
    }

    #[test]
    fn trace_point_matches_variables() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let rep = random_representation(&mut rng, 3);
        let ring = TraceRing::for_rank(3);
        let point = trace_point(&rep, &ring);
        let pair_bc = Polynomial::var(&ring, ring.pair(1, 2));
        assert_eq!(pair_bc.eval(&point), rep[1].mul(&rep[2]).trace());
        let triple = Polynomial::var(&ring, ring.triple(0, 1, 2));
        assert_eq!(triple.eval(&point), rep[0].mul(&rep[1]).mul(&rep[2]).trace());
    }

    #[test]
    fn reductions_agree_with_direct_traces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=3usize {
            let ring = TraceRing::for_rank(n);
            let reducer = TraceReducer::new(&ring);
            for _ in 0..40 {
                let w = crate::presentation::random_word(&mut rng, n, 7);
                let reduced = reducer.reduce(&w);
                let rep = random_representation(&mut rng, n);
                assert!(check_reduction(&rep, &w, &reduced), "word {w:?}");
            }
        }
    }

    #[test]
    fn binary_dihedral_representation_is_simple_at_depth_one() {
        // a -> identity, b -> diag(i, -i), c -> antidiagonal (i, i)
        let rep = vec![
            Sl2Matrix::identity(),
            Sl2Matrix::new(G::i(), G::zero(), G::zero(), -&G::i()),
            Sl2Matrix::new(G::zero(), G::i(), G::i(), G::zero()),
        ];
        assert!(is_simple(&rep, 1));
    }

    #[test]
    fn diagonal_representation_is_never_simple() {
        let diag = |x: G| {
            let inv = x.inv();
            Sl2Matrix::new(x, G::zero(), G::zero(), inv)
        };
        let rep = vec![diag(G::from_int(2)), diag(G::from_int(3))];
        assert!(!is_simple(&rep, 3));
    }

    #[test]
    fn scalar_representation_is_not_simple() {
        let rep = vec![Sl2Matrix::identity(), Sl2Matrix::identity()];
        assert!(!is_simple(&rep, 2));
    }
}
