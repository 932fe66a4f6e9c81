//! Sparse multivariate polynomials over the rationals, in trace rings.
//!
//! Terms are kept strictly descending under grevlex with no zero
//! coefficients, so structural equality is polynomial equality. Monomial
//! orders other than the storage order are applied on demand (the Groebner
//! engine re-sorts working copies).

pub mod builtin;
mod monomial;
mod parse;
mod ring;

pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::{parse_polynomial, PolyParseError};
pub use ring::{TraceRing, TraceVar};

use crate::gaussian::GaussianRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub type Coef = BigRational;

pub(crate) use monomial::grevlex_cmp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<TraceRing>,
    terms: Vec<(Monomial, Coef)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<TraceRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<TraceRing>) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn constant(ring: &Arc<TraceRing>, c: Coef) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.num_vars()), c));
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_int(ring: &Arc<TraceRing>, n: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(ring: &Arc<TraceRing>, idx: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.num_vars(), idx, 1), BigRational::one())],
        }
    }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<TraceRing>, mut raw: Vec<(Monomial, Coef)>) -> Self {
        raw.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Coef)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<TraceRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coef)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
    }

    /// Leading term under the given order. Panics on zero.
    pub fn leading(&self, order: &MonomialOrder) -> (&Monomial, &Coef) {
        debug_assert!(!self.is_zero());
        if order.kind == OrderKind::GrevLex && order.permutation.is_none() {
            let (m, c) = &self.terms[0];
            return (m, c);
        }
        let (m, c) = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .unwrap();
        (m, c)
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomial ring mismatch: {:?} vs {:?}",
            self.ring.var_names(),
            other.ring.var_names()
        );
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, &BigRational::one(), None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, &-BigRational::one(), None)
    }

    /// `self + c * m * other`, the merge primitive behind reduction steps.
    pub fn add_scaled(
        &self,
        other: &Polynomial,
        c: &Coef,
        m: Option<&Monomial>,
    ) -> Polynomial {
        self.assert_same_ring(other);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let scaled: Vec<(Monomial, Coef)> = other
            .terms
            .iter()
            .map(|(mm, cc)| {
                let mono = match m {
                    Some(shift) => mm.mul(shift),
                    None => mm.clone(),
                };
                (mono, c * cc)
            })
            .collect();
        let mut out: Vec<(Monomial, Coef)> =
            Vec::with_capacity(self.terms.len() + scaled.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < scaled.len() {
            match grevlex_cmp(&self.terms[i].0, &scaled[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(scaled[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let sum = &self.terms[i].1 + &scaled[j].1;
                    if !sum.is_zero() {
                        out.push((scaled[j].0.clone(), sum));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(scaled[j..].iter().cloned());
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Coef> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(existing) => *existing += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_terms(&self.ring, acc.into_iter().collect())
    }

    pub fn scale(&self, c: &Coef) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, c)| (mm.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Integer-primitive form with positive leading coefficient (grevlex):
    /// the canonical generator normalization.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if (&self.terms[0].1 * &scale).is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.ring.num_vars(), "evaluation point arity mismatch");
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = GaussianRational::from_rational(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = &term * &gaussian_pow(&point[i], e);
                }
            }
            acc += &term;
        }
        acc
    }

    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ring.num_vars(), "evaluation point arity mismatch");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Re-homes the polynomial into a ring extended by `count` variables at
    /// position `at`.
    pub fn insert_vars(&self, new_ring: &Arc<TraceRing>, at: usize, count: usize) -> Polynomial {
        assert_eq!(new_ring.num_vars(), self.ring.num_vars() + count);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.insert_vars(at, count), c.clone()))
            .collect();
        Polynomial { ring: new_ring.clone(), terms }
    }

    /// Drops `count` variables at position `at`; `None` if any term uses
    /// them.
    pub fn remove_vars(
        &self,
        new_ring: &Arc<TraceRing>,
        at: usize,
        count: usize,
    ) -> Option<Polynomial> {
        assert_eq!(new_ring.num_vars() + count, self.ring.num_vars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.remove_vars(at, count)?, c.clone()));
        }
        Some(Polynomial { ring: new_ring.clone(), terms })
    }

    /// Same polynomial in a ring with identical layout but renamed
    /// generators.
    pub fn renamed(&self, new_ring: &Arc<TraceRing>) -> Polynomial {
        assert_eq!(new_ring.num_vars(), self.ring.num_vars());
        Polynomial { ring: new_ring.clone(), terms: self.terms.clone() }
    }

    /// Text form with terms sorted descending under `order`.
    pub fn to_text(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<&(Monomial, Coef)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = String::new();
        for (idx, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            // later ring variables first: a word trace times a generator
            // trace reads t_ab*t_a, the way the recursion produces it
            for (i, &e) in m.exps().iter().enumerate().rev() {
                if e == 1 {
                    factors.push(self.ring.var_name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(i), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn gaussian_pow(base: &GaussianRational, e: u16) -> GaussianRational {
    let mut acc = GaussianRational::one();
    let mut sq = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&MonomialOrder::grevlex()))
    }
}
