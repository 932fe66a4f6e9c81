//! Exact Groebner bases over the rationals and the ideal operations built
//! on them.
//!
//! Buchberger's algorithm with normal selection (smallest lcm degree
//! first), the product and chain criteria for pair pruning, and full
//! autoreduction, so every computed basis is the unique reduced basis of
//! its ideal under its order. Budgets bound the total degree, the number of
//! processed S-pairs, and wall-clock time; exceeding one is a typed error,
//! never a wrong answer.
//!
//! Derived operations: membership and normal forms, intersection (one
//! auxiliary variable, elimination order), ideal quotient (exact division
//! of the intersection with each principal ideal), radical membership (one
//! auxiliary inverting variable), equality, and vector-space dimension of
//! the quotient ring by staircase counting.

use crate::ideal::Ideal;
use crate::poly::{grevlex_cmp, Coef, Monomial, MonomialOrder, OrderKind, Polynomial, TraceRing};
use num_traits::{One, Signed, Zero};
use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Resource limits for basis computations. The deadline is absolute so one
/// budget can cover a multi-step computation.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_degree: u32,
    pub max_pairs: u64,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    /// Degree 60, two million pairs, and a deadline only if the
    /// `CHARSCHEME_TIMEOUT_SECS` environment variable is set.
    fn default() -> Self {
        let deadline = std::env::var("CHARSCHEME_TIMEOUT_SECS")
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
            .map(|secs| Instant::now() + Duration::from_secs(secs));
        Budget { max_degree: 60, max_pairs: 2_000_000, deadline }
    }
}

impl Budget {
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }

    fn check_time(&self) -> Result<(), GroebnerError> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(GroebnerError::Timeout);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("degree budget exceeded: degree {reached} over limit {limit}")]
    DegreeExceeded { reached: u32, limit: u32 },
    #[error("pair budget exceeded: limit {limit}")]
    PairsExceeded { limit: u64 },
    #[error("time budget exceeded")]
    Timeout,
}

impl GroebnerError {
    /// All current variants are resource exhaustion; kept as a method so
    /// callers can distinguish budget stops from real failures.
    pub fn is_budget(&self) -> bool {
        true
    }
}

/// A reduced Groebner basis: integer-primitive generators with positive
/// leading coefficients under the basis order, sorted ascending by leading
/// monomial. Reduced bases are unique per ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<TraceRing>,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<TraceRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn contains_one(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    /// The unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce_full(f, &self.polys, &self.order)
    }
}

// term list sorted strictly descending under the active order
type Terms = Vec<(Monomial, Coef)>;

fn sorted_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut terms: Terms = p.terms().to_vec();
    if !(order.kind == OrderKind::GrevLex && order.permutation.is_none()) {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    terms
}

/// `a + c * m * b` for term lists sorted descending under `order`.
fn axpy(
    a: &[(Monomial, Coef)],
    b: &[(Monomial, Coef)],
    c: &Coef,
    m: Option<&Monomial>,
    order: &MonomialOrder,
) -> Terms {
    let scaled: Terms = b
        .iter()
        .map(|(mm, cc)| {
            let mono = match m {
                Some(shift) => mm.mul(shift),
                None => mm.clone(),
            };
            (mono, c * cc)
        })
        .collect();
    let mut out: Terms = Vec::with_capacity(a.len() + scaled.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < scaled.len() {
        match order.cmp(&a[i].0, &scaled[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(scaled[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let sum = &a[i].1 + &scaled[j].1;
                if !sum.is_zero() {
                    out.push((scaled[j].0.clone(), sum));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(scaled[j..].iter().cloned());
    out
}

/// Rescales in place to integer coefficients with content 1 and a positive
/// leading coefficient.
fn primitive_terms(terms: &mut Terms) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if terms.is_empty() {
        return;
    }
    let mut den_lcm = BigInt::one();
    for (_, c) in terms.iter() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for (_, c) in terms.iter() {
        num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
    }
    let mut scale = Coef::new(den_lcm, num_gcd);
    if (&terms[0].1 * &scale).is_negative() {
        scale = -scale;
    }
    for (_, c) in terms.iter_mut() {
        *c *= &scale;
    }
}

/// Full reduction of `f` by `basis` under `order`: repeatedly cancels the
/// head term against the first basis element whose leading monomial divides
/// it, and moves irreducible heads to the remainder. The result is the
/// unique normal form when `basis` is a Groebner basis.
pub fn reduce_full(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let divisors: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted_terms(g, order))
        .collect();
    let rest = sorted_terms(f, order);
    let (out, _) = reduce_terms(rest, &divisors, order, false, u32::MAX, None).unwrap();
    Polynomial::from_terms(f.ring(), out)
}

/// Core reduction on term lists. Empty divisor entries are skipped. When
/// `rescale` is set the working polynomial is re-normalized periodically
/// (valid when only the ideal class of the result matters, not its exact
/// scaling).
fn reduce_terms(
    mut rest: Terms,
    divisors: &[Terms],
    order: &MonomialOrder,
    rescale: bool,
    max_degree: u32,
    budget: Option<&Budget>,
) -> Result<(Terms, bool), GroebnerError> {
    let mut out: Terms = Vec::new();
    let mut steps: u32 = 0;
    let mut reduced_any = false;
    'outer: while let Some((lm, lc)) = rest.first().cloned() {
        if lm.deg() > max_degree {
            return Err(GroebnerError::DegreeExceeded { reached: lm.deg(), limit: max_degree });
        }
        steps = steps.wrapping_add(1);
        if steps % 256 == 0 {
            if let Some(b) = budget {
                b.check_time()?;
            }
        }
        for g in divisors {
            if g.is_empty() {
                continue;
            }
            let (glm, glc) = (&g[0].0, &g[0].1);
            if glm.divides(&lm) {
                let shift = glm.try_div(&lm).unwrap();
                let scale = -(&lc / glc);
                rest = axpy(&rest, g, &scale, Some(&shift), order);
                reduced_any = true;
                if rescale && steps % 64 == 0 {
                    primitive_terms(&mut rest);
                }
                continue 'outer;
            }
        }
        out.push(rest.remove(0));
    }
    Ok((out, reduced_any))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn scale_shift(terms: &[(Monomial, Coef)], c: &Coef, m: &Monomial) -> Terms {
    terms.iter().map(|(mm, cc)| (mm.mul(m), c * cc)).collect()
}

fn push_pairs(
    upto: usize,
    heap: &mut BinaryHeap<Reverse<(u32, Vec<u16>, usize, usize)>>,
    pending: &mut HashSet<(usize, usize)>,
    basis: &[Terms],
) {
    for i in 0..upto {
        let lcm = basis[i][0].0.lcm(&basis[upto][0].0);
        heap.push(Reverse((lcm.deg(), lcm.exps().to_vec(), i, upto)));
        pending.insert((i, upto));
    }
}

/// Buchberger's algorithm. Returns the reduced Groebner basis of the ideal
/// generated by `gens` under `order`.
pub fn buchberger(
    ring: &Arc<TraceRing>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut terms = sorted_terms(g, order);
        primitive_terms(&mut terms);
        if !basis.contains(&terms) {
            basis.push(terms);
        }
    }
    // pending pairs keyed by (lcm degree, lcm, i, j): normal selection
    let mut heap: BinaryHeap<Reverse<(u32, Vec<u16>, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for k in 1..basis.len() {
        push_pairs(k, &mut heap, &mut pending, &basis);
    }
    let mut pairs_done: u64 = 0;
    while let Some(Reverse((_, _, i, j))) = heap.pop() {
        pending.remove(&(i, j));
        budget.check_time()?;
        let lcm = basis[i][0].0.lcm(&basis[j][0].0);
        // product criterion: coprime heads give an S-polynomial that
        // already reduces to zero
        if basis[i][0].0.coprime(&basis[j][0].0) {
            continue;
        }
        // chain criterion: a third head divides the lcm and both its pairs
        // with i and j are settled
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }
        pairs_done += 1;
        if pairs_done > budget.max_pairs {
            return Err(GroebnerError::PairsExceeded { limit: budget.max_pairs });
        }
        if lcm.deg() > budget.max_degree {
            return Err(GroebnerError::DegreeExceeded {
                reached: lcm.deg(),
                limit: budget.max_degree,
            });
        }
        // S-polynomial; the scaled heads cancel exactly
        let shift_i = basis[i][0].0.try_div(&lcm).unwrap();
        let shift_j = basis[j][0].0.try_div(&lcm).unwrap();
        let lead_i = scale_shift(&basis[i], &basis[i][0].1.recip(), &shift_i);
        let spoly = axpy(&lead_i, &basis[j], &-basis[j][0].1.recip(), Some(&shift_j), order);
        let (mut reduced, _) =
            reduce_terms(spoly, &basis, order, true, budget.max_degree, Some(budget))?;
        if reduced.is_empty() {
            continue;
        }
        primitive_terms(&mut reduced);
        basis.push(reduced);
        push_pairs(basis.len() - 1, &mut heap, &mut pending, &basis);
    }
    Ok(autoreduce(ring, basis, order))
}

/// Minimalizes and tail-reduces a basis, yielding the unique reduced
/// Groebner basis.
fn autoreduce(ring: &Arc<TraceRing>, basis: Vec<Terms>, order: &MonomialOrder) -> GroebnerBasis {
    // minimal: drop any element whose head another head divides
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms> = Vec::new();
    for g in sorted {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    // tail-reduce each element against the others; the taken slot is empty
    // and skipped by the reducer
    for idx in 0..minimal.len() {
        let current = std::mem::take(&mut minimal[idx]);
        let (mut reduced, _) =
            reduce_terms(current, &minimal, order, true, u32::MAX, None).unwrap();
        primitive_terms(&mut reduced);
        minimal[idx] = reduced;
    }
    minimal.retain(|g| !g.is_empty());
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let polys = minimal
        .into_iter()
        .map(|terms| Polynomial::from_terms(ring, terms))
        .collect();
    GroebnerBasis { ring: ring.clone(), order: order.clone(), polys }
}

/// Membership test via the cached default-order basis.
pub fn member(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
    let gb = ideal.groebner(&MonomialOrder::grevlex(), budget)?;
    Ok(gb.normal_form(f).is_zero())
}

/// I ∩ J by eliminating one auxiliary: the intersection is the y-free part
/// of a basis of y*I + (1-y)*J under an order that ranks y first.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal, GroebnerError> {
    assert_eq!(a.ring(), b.ring(), "ideal intersection needs a common ring");
    let base = a.ring();
    let ext = base.with_aux_prepended("y");
    let y = Monomial::var(ext.num_vars(), 0, 1);
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in a.gens() {
        gens.push(f.insert_vars(&ext, 0, 1).mul_monomial(&y));
    }
    for g in b.gens() {
        let lifted = g.insert_vars(&ext, 0, 1);
        gens.push(lifted.sub(&lifted.mul_monomial(&y)));
    }
    let gb = buchberger(&ext, &gens, &MonomialOrder::elimination(1), budget)?;
    let kept: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter_map(|p| p.remove_vars(base, 0, 1))
        .collect();
    Ok(Ideal::new(base, kept))
}

/// Exact division `f / g`; panics if the division leaves a remainder
/// (callers only divide elements of the principal ideal (g)).
fn divide_exact(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let order = MonomialOrder::grevlex();
    let gterms = sorted_terms(g, &order);
    let (glm, glc) = (gterms[0].0.clone(), gterms[0].1.clone());
    let mut quotient: Terms = Vec::new();
    let mut rest = sorted_terms(f, &order);
    while let Some((lm, lc)) = rest.first().cloned() {
        let shift = glm
            .try_div(&lm)
            .expect("internal error: non-exact division in ideal quotient");
        let coef = &lc / &glc;
        quotient.push((shift.clone(), coef.clone()));
        rest = axpy(&rest, &gterms, &-coef, Some(&shift), &order);
    }
    Polynomial::from_terms(f.ring(), quotient)
}

/// The ideal quotient (I : J) = { f | f*J ⊆ I }, computed as the
/// intersection over generators g of J of (I ∩ (g)) / g.
///
/// Two refinements keep the fold from stalling on a hard generator.
/// First, once the accumulator A multiplies some remaining g into I
/// (f*g reduces to zero for every generator f of A), the factor (I : g)
/// contains A and cannot cut it, so g is dropped without being computed;
/// when every generator is processed or dropped this way the accumulator
/// is exactly (I : J). Second, generators are attempted cheapest first
/// under per-attempt time and pair allowances that grow geometrically,
/// so an expensive elimination is only ever run to completion after the
/// cheap ones had a chance to certify it away.
///
/// The generators of the result are the reduced default-order basis, so
/// the output does not depend on which factors were certified away.
pub fn quotient(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal, GroebnerError> {
    assert_eq!(a.ring(), b.ring(), "ideal quotient needs a common ring");
    let ring = a.ring();
    let order = MonomialOrder::grevlex();
    let mut retryable: Vec<&Polynomial> = b.gens().iter().filter(|g| !g.is_zero()).collect();
    if retryable.is_empty() {
        // J = (0): every f satisfies f*0 ⊆ I
        return Ok(Ideal::new(ring, vec![Polynomial::one(ring)]));
    }
    retryable.sort_by(|x, y| {
        (x.total_degree(), x.num_terms())
            .cmp(&(y.total_degree(), y.num_terms()))
            .then_with(|| order.cmp(x.leading(&order).0, y.leading(&order).0))
    });
    // a Groebner generating set keeps the auxiliary eliminations tame
    let a_gb = a.groebner(&order, budget)?;
    let a_seeded = Ideal::new(ring, a_gb.polys().to_vec());
    let mut blocked: Vec<(&Polynomial, GroebnerError)> = Vec::new();
    let mut acc: Option<Ideal> = None;
    let mut slice_pairs: u64 = 4096;
    let mut slice_time = Duration::from_millis(250);
    loop {
        if let Some(acc_ideal) = &acc {
            let absorbed = |g: &Polynomial| {
                acc_ideal.gens().iter().all(|f| a_gb.normal_form(&f.mul(g)).is_zero())
            };
            retryable.retain(|g| !absorbed(g));
            blocked.retain(|(g, _)| !absorbed(*g));
        }
        if retryable.is_empty() {
            match blocked.first() {
                None => break,
                Some((_, e)) => return Err(*e),
            }
        }
        let full_pairs = slice_pairs >= budget.max_pairs;
        let slice_deadline = Instant::now() + slice_time;
        let sub = Budget {
            max_degree: budget.max_degree,
            max_pairs: slice_pairs.min(budget.max_pairs),
            deadline: Some(budget.deadline.map_or(slice_deadline, |d| d.min(slice_deadline))),
        };
        let mut deferred: Vec<&Polynomial> = Vec::new();
        let mut progressed = false;
        for g in std::mem::take(&mut retryable) {
            let cap = match intersect(&a_seeded, &Ideal::new(ring, vec![g.clone()]), &sub) {
                Ok(cap) => cap,
                Err(GroebnerError::Timeout) => {
                    budget.check_time()?;
                    deferred.push(g);
                    continue;
                }
                Err(e @ GroebnerError::DegreeExceeded { .. }) => {
                    // a larger pair allowance cannot cure a degree stop
                    blocked.push((g, e));
                    continue;
                }
                Err(e) => {
                    if full_pairs {
                        blocked.push((g, e));
                    } else {
                        deferred.push(g);
                    }
                    continue;
                }
            };
            let divided: Vec<Polynomial> =
                cap.gens().iter().map(|w| divide_exact(w, g)).collect();
            let quot_g = Ideal::new(ring, divided);
            acc = Some(match acc.take() {
                None => quot_g,
                Some(prev) => intersect(&prev, &quot_g, budget)?,
            });
            progressed = true;
        }
        retryable = deferred;
        if !progressed {
            slice_pairs = slice_pairs.saturating_mul(8);
            slice_time = slice_time.saturating_mul(4);
        }
    }
    let result = acc.expect("at least one generator was processed");
    let canonical = result.groebner(&order, budget)?;
    Ok(Ideal::new(ring, canonical.polys().to_vec()))
}

/// Radical membership: f ∈ √I iff 1 ∈ I + (1 - y*f) in the extended ring.
pub fn radical_member(
    f: &Polynomial,
    ideal: &Ideal,
    budget: &Budget,
) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    let base = ideal.ring();
    let ext = base.with_aux_prepended("y");
    let y = Monomial::var(ext.num_vars(), 0, 1);
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.insert_vars(&ext, 0, 1))
        .collect();
    let lifted = f.insert_vars(&ext, 0, 1);
    gens.push(Polynomial::one(&ext).sub(&lifted.mul_monomial(&y)));
    let gb = buchberger(&ext, &gens, &MonomialOrder::grevlex(), budget)?;
    Ok(gb.contains_one())
}

/// J ⊆ I.
pub fn contains(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
    let gb = a.groebner(&MonomialOrder::grevlex(), budget)?;
    Ok(b.gens().iter().all(|g| gb.normal_form(g).is_zero()))
}

/// Equality as ideals (mutual containment of generators).
pub fn equal(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
    Ok(contains(a, b, budget)? && contains(b, a, budget)?)
}

/// Dimension of the quotient ring as a rational vector space: the number
/// of monomials outside the leading-term staircase. `None` when infinite.
pub fn vector_space_dimension(
    ideal: &Ideal,
    budget: &Budget,
) -> Result<Option<u64>, GroebnerError> {
    let order = MonomialOrder::grevlex();
    let gb = ideal.groebner(&order, budget)?;
    if gb.contains_one() {
        return Ok(Some(0));
    }
    let n = ideal.ring().num_vars();
    let lms: Vec<Monomial> = gb
        .polys()
        .iter()
        .map(|p| p.leading(&order).0.clone())
        .collect();
    // a finite staircase needs a pure power of every variable
    let mut bounds: Vec<Option<u16>> = vec![None; n];
    for lm in &lms {
        for i in 0..n {
            if lm.deg() > 0 && lm.exp(i) as u32 == lm.deg() {
                let e = lm.exp(i);
                bounds[i] = Some(bounds[i].map_or(e, |prev: u16| prev.min(e)));
            }
        }
    }
    let bounds: Vec<u16> = match bounds.into_iter().collect::<Option<Vec<_>>>() {
        Some(b) => b,
        None => return Ok(None),
    };
    let mut count: u64 = 0;
    let mut exps = vec![0u16; n];
    count_standard(&mut exps, 0, &bounds, &lms, &mut count);
    Ok(Some(count))
}

/// Depth-first count of staircase monomials, pruning a subtree as soon as
/// some leading monomial supported on the assigned variables divides the
/// current prefix.
fn count_standard(
    exps: &mut Vec<u16>,
    var: usize,
    bounds: &[u16],
    lms: &[Monomial],
    count: &mut u64,
) {
    let n = exps.len();
    let blocked = lms.iter().any(|lm| {
        (0..var).all(|i| lm.exp(i) <= exps[i]) && (var..n).all(|i| lm.exp(i) == 0)
    });
    if blocked {
        return;
    }
    if var == n {
        *count += 1;
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        count_standard(exps, var + 1, bounds, lms, count);
    }
    exps[var] = 0;
}

/// Searches candidate polynomials (and their pairwise products) up to
/// `max_degree` for an f in √I but not in I: a certificate that I is not
/// radical. Returns the first hit in a deterministic order.
pub fn nonradical_witness(
    ideal: &Ideal,
    candidates: &[Polynomial],
    max_degree: u32,
    budget: &Budget,
) -> Result<Option<Polynomial>, GroebnerError> {
    let push = |p: Polynomial, pool: &mut Vec<Polynomial>| {
        if !p.is_zero() && p.total_degree() <= max_degree {
            let n = p.normalized();
            if !pool.contains(&n) {
                pool.push(n);
            }
        }
    };
    let mut pool: Vec<Polynomial> = Vec::new();
    for c in candidates {
        push(c.clone(), &mut pool);
    }
    let singles = pool.clone();
    for (i, f) in singles.iter().enumerate() {
        for g in &singles[i..] {
            push(f.mul(g), &mut pool);
        }
    }
    pool.sort_by(|a, b| {
        (a.total_degree(), a.num_terms())
            .cmp(&(b.total_degree(), b.num_terms()))
            .then_with(|| grevlex_cmp(&a.terms()[0].0, &b.terms()[0].0))
    });
    for f in &pool {
        if !member(f, ideal, budget)? && radical_member(f, ideal, budget)? {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}
