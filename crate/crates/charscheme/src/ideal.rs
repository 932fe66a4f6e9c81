//! Character ideals of finitely presented groups in trace coordinates.
//!
//! `character_ideal` realizes the presentation of the trace ring of a
//! group as a quotient of the free-group trace ring: one generator per
//! relator and per test word w drawn from the identity, the generators,
//! and the ascending generator pairs. In relator mode the generator is
//! t_{w r} - t_w for the one-word relator r; in pair mode it is
//! t_{w v} - t_{w u} for the relator written as u = v. Both modes
//! generate the same ideal. The ideal tower `partial_ideal` uses all
//! freely reduced test words up to a length bound instead; at length two
//! the tower reaches the full ideal, and `partial_ideal_i1` is the
//! classic length-one stage.
//!
//! Convention for three-generator rings: every constructed ideal includes
//! the fundamental trace relation, since a triple trace coordinate is only
//! determined up to it. Rings with four or more generators carry trace
//! relations beyond the basic coordinates that this toolkit does not
//! enumerate, so their ideals are flagged relative.

use crate::groebner::{self, Budget, GroebnerBasis, GroebnerError};
use crate::poly::{builtin, parse_polynomial, MonomialOrder, Polynomial, PolyParseError, TraceRing};
use crate::presentation::{Letter, Presentation, Word};
use crate::trace::TraceReducer;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

/// A finitely generated ideal in a trace ring, with cached Groebner bases
/// per monomial order. Generators are kept normalized, deduplicated, and
/// nonzero.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<TraceRing>,
    gens: Vec<Polynomial>,
    relative: bool,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            relative: self.relative,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl PartialEq for Ideal {
    /// Syntactic equality of the normalized generator lists; use
    /// `groebner::equal` for equality as ideals.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Ideal {
    pub fn new(ring: &Arc<TraceRing>, gens: Vec<Polynomial>) -> Ideal {
        let mut cleaned: Vec<Polynomial> = Vec::new();
        for g in gens {
            let n = g.normalized();
            if !n.is_zero() && !cleaned.contains(&n) {
                cleaned.push(n);
            }
        }
        Ideal {
            ring: ring.clone(),
            gens: cleaned,
            relative: false,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Flags the ideal as relative to an ambient coordinate ring whose own
    /// relations are not included (generator count four or more).
    pub fn mark_relative(mut self) -> Self {
        self.relative = true;
        self
    }

    pub fn ring(&self) -> &Arc<TraceRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_relative(&self) -> bool {
        self.relative
    }

    /// The reduced Groebner basis under `order`, computed once per order
    /// and cached.
    pub fn groebner(
        &self,
        order: &MonomialOrder,
        budget: &Budget,
    ) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner::buchberger(&self.ring, &self.gens, order, budget)?);
        self.cache.lock().unwrap().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    /// Serializes as ring variable names plus generator texts. The ring is
    /// recoverable because basic trace coordinates have a fixed layout.
    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.var_names(),
            "generators": self.gens.iter().map(|g| g.to_string()).collect::<Vec<String>>(),
        })
    }

    /// Inverse of `to_json`. The relative flag is re-derived from the
    /// generator count.
    pub fn from_json(v: &Value) -> Result<Ideal, IdealJsonError> {
        let names: Vec<String> = v
            .get("ring")
            .and_then(Value::as_array)
            .ok_or_else(|| IdealJsonError::Shape("missing ring array".into()))?
            .iter()
            .map(|s| {
                s.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| IdealJsonError::Shape("ring entries must be strings".into()))
            })
            .collect::<Result<_, _>>()?;
        // the variable count n(n^2+5)/6 determines the generator count n
        let arity = (1..=names.len())
            .find(|n| n * (n * n + 5) / 6 == names.len())
            .ok_or_else(|| {
                IdealJsonError::Layout(format!(
                    "{} variables is not a basic coordinate layout",
                    names.len()
                ))
            })?;
        let gen_names: Vec<String> = names[..arity]
            .iter()
            .map(|n| {
                n.strip_prefix("t_")
                    .map(str::to_string)
                    .ok_or_else(|| IdealJsonError::Layout(format!("variable {n} lacks t_ prefix")))
            })
            .collect::<Result<_, _>>()?;
        let ring = TraceRing::new(gen_names);
        if ring.var_names() != names.as_slice() {
            return Err(IdealJsonError::Layout(
                "variable names do not match the basic coordinate layout".into(),
            ));
        }
        let gens: Vec<Polynomial> = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| IdealJsonError::Shape("missing generators array".into()))?
            .iter()
            .map(|s| {
                let text = s
                    .as_str()
                    .ok_or_else(|| IdealJsonError::Shape("generators must be strings".into()))?;
                parse_polynomial(text, &ring)
                    .map_err(|err| IdealJsonError::Poly { text: text.to_string(), err })
            })
            .collect::<Result<_, _>>()?;
        let ideal = Ideal::new(&ring, gens);
        Ok(if arity >= 4 { ideal.mark_relative() } else { ideal })
    }
}

#[derive(Debug, Error)]
pub enum IdealJsonError {
    #[error("malformed ideal document: {0}")]
    Shape(String),
    #[error("ring layout mismatch: {0}")]
    Layout(String),
    #[error("bad polynomial {text:?}: {err}")]
    Poly { text: String, err: PolyParseError },
}

/// The trace ring on a presentation's generators.
pub fn trace_ring_of(p: &Presentation) -> Arc<TraceRing> {
    TraceRing::new(p.generators.clone())
}

/// Test words of the relator-difference presentation: the identity, each
/// generator, and each ascending generator pair.
fn stage_two_words(n: usize) -> Vec<Word> {
    let mut words = vec![Word::empty()];
    for i in 0..n {
        words.push(Word::generator(i));
    }
    for j in 0..n {
        for k in (j + 1)..n {
            words.push(Word::generator(j).concat(&Word::generator(k)));
        }
    }
    words
}

/// All freely reduced words of length at most `max_len`, shortest first,
/// in a deterministic order.
pub fn reduced_words(num_gens: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for gen in 0..num_gens {
                for inverse in [false, true] {
                    let letter = Letter::new(gen, inverse);
                    if w.letters().last().copied() == Some(letter.inverted()) {
                        continue;
                    }
                    let mut letters = w.letters().to_vec();
                    letters.push(letter);
                    let cand = Word::from_letters(letters);
                    next.push(cand.clone());
                    out.push(cand);
                }
            }
        }
        frontier = next;
    }
    out
}

/// How a relator u = v enters the difference generators: collapsed into
/// the one-word form r = u^-1 v, or kept as the two sides of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelatorMode {
    Relator,
    Pair,
}

/// One generator per relator and test word w: t_{w r} - t_w in relator
/// mode, t_{w v} - t_{w u} in pair mode.
fn difference_generators(
    p: &Presentation,
    ring: &Arc<TraceRing>,
    words: &[Word],
    mode: RelatorMode,
) -> Vec<Polynomial> {
    let reducer = TraceReducer::new(ring);
    let mut gens = Vec::new();
    for rel in &p.relators {
        let (lhs, rhs) = match mode {
            RelatorMode::Relator => (Word::empty(), rel.word()),
            RelatorMode::Pair => (rel.lhs.clone(), rel.rhs.clone()),
        };
        for w in words {
            let moved = reducer.reduce(&w.concat(&rhs));
            let fixed = reducer.reduce(&w.concat(&lhs));
            gens.push(moved.sub(&fixed));
        }
    }
    gens
}

fn finish(ring: Arc<TraceRing>, mut gens: Vec<Polynomial>, rank: usize) -> Ideal {
    if rank == 3 {
        gens.push(builtin::fundamental_relation(&ring, 0, 1, 2));
    }
    let ideal = Ideal::new(&ring, gens);
    if rank >= 4 {
        ideal.mark_relative()
    } else {
        ideal
    }
}

/// The full character ideal of a presentation.
pub fn character_ideal(p: &Presentation, mode: RelatorMode) -> Ideal {
    let ring = trace_ring_of(p);
    let gens = difference_generators(p, &ring, &stage_two_words(p.rank()), mode);
    finish(ring, gens, p.rank())
}

/// Stage `max_len` of the ideal tower: one-word relator differences over
/// all test words up to that length. Stage two equals the full character
/// ideal.
pub fn partial_ideal(p: &Presentation, max_len: usize) -> Ideal {
    let ring = trace_ring_of(p);
    let gens =
        difference_generators(p, &ring, &reduced_words(p.rank(), max_len), RelatorMode::Relator);
    finish(ring, gens, p.rank())
}

/// The classic stage-one ideal: only the identity and single-generator
/// test words, in relator mode.
pub fn partial_ideal_i1(p: &Presentation) -> Ideal {
    let ring = trace_ring_of(p);
    let mut words = vec![Word::empty()];
    for i in 0..p.rank() {
        words.push(Word::generator(i));
    }
    let gens = difference_generators(p, &ring, &words, RelatorMode::Relator);
    finish(ring, gens, p.rank())
}

/// The ideal cutting out characters of rank-`beta` representations with
/// commuting images: pair relations f, triple relations g (one per
/// distinguished index), triple eliminators, and quadruple relations h
/// (one per pairing split).
pub fn abelian_ideal(beta: usize) -> Ideal {
    assert!(beta >= 1, "abelian_ideal needs at least one generator");
    let ring = TraceRing::for_rank(beta);
    let n = beta;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            gens.push(builtin::commuting_pair_relation(&ring, i, j));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                gens.push(builtin::commuting_triple_relation(&ring, i, j, k));
                gens.push(builtin::commuting_triple_relation(&ring, j, i, k));
                gens.push(builtin::commuting_triple_relation(&ring, k, i, j));
                gens.push(builtin::triple_eliminator(&ring, i, j, k));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for l in (k + 1)..n {
                    gens.push(builtin::commuting_quad_relation(&ring, i, j, k, l));
                    gens.push(builtin::commuting_quad_relation(&ring, i, j, l, k));
                    gens.push(builtin::commuting_quad_relation(&ring, i, k, l, j));
                }
            }
        }
    }
    finish(ring, gens, n)
}

/// The non-simple locus of a presentation: characters of representations
/// that factor through the abelianization, via the character ideal of the
/// abelianized presentation.
pub fn nonsimple_ideal(p: &Presentation) -> Ideal {
    character_ideal(&p.abelianize(), RelatorMode::Pair)
}
