//! Exponent-vector monomials and monomial orders.

use std::cmp::Ordering;

/// A power product, stored as one exponent per ring variable.
///
/// Invariant: `deg` is always the sum of `exps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, idx: usize, exp: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = exp;
        Monomial { exps, deg: exp as u32 }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when self divides other.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exps(exps)
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Inserts `count` zero exponents starting at position `at`.
    pub fn insert_vars(&self, at: usize, count: usize) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat(0).take(count));
        exps.extend_from_slice(&self.exps[at..]);
        Monomial { exps, deg: self.deg }
    }

    /// Removes `count` exponents starting at `at`; `None` if any is nonzero.
    pub fn remove_vars(&self, at: usize, count: usize) -> Option<Monomial> {
        if self.exps[at..at + count].iter().any(|&e| e != 0) {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len() - count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend_from_slice(&self.exps[at + count..]);
        Some(Monomial { exps, deg: self.deg })
    }
}

/// Graded reverse lexicographic comparison with variable priority
/// `x_0 > x_1 > ...`; ties in total degree go to the monomial whose
/// rightmost differing exponent is smaller.
pub(crate) fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.exps.len()).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp_slice(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Block order eliminating the first `block` variables: lex on the
    /// leading block, then grevlex on the remainder.
    Elimination { block: usize },
}

/// A monomial order: an order kind plus an optional variable priority
/// permutation (`permutation[0]` is the most significant variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub permutation: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, permutation: None }
    }

    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, permutation: None }
    }

    pub fn elimination(block: usize) -> Self {
        MonomialOrder { kind: OrderKind::Elimination { block }, permutation: None }
    }

    pub fn with_permutation(mut self, permutation: Vec<usize>) -> Self {
        self.permutation = Some(permutation);
        self
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.permutation {
            None => self.cmp_slices(a.exps(), b.exps(), Some((a.deg, b.deg))),
            Some(p) => {
                let pa: Vec<u16> = p.iter().map(|&i| a.exps[i]).collect();
                let pb: Vec<u16> = p.iter().map(|&i| b.exps[i]).collect();
                self.cmp_slices(&pa, &pb, Some((a.deg, b.deg)))
            }
        }
    }

    fn cmp_slices(&self, a: &[u16], b: &[u16], degs: Option<(u32, u32)>) -> Ordering {
        match self.kind {
            OrderKind::Lex => lex_cmp(a, b),
            OrderKind::GrevLex => match degs {
                Some((da, db)) if da != db => da.cmp(&db),
                _ => grevlex_cmp_slice(a, b),
            },
            OrderKind::Elimination { block } => {
                match lex_cmp(&a[..block], &b[..block]) {
                    Ordering::Equal => grevlex_cmp_slice(&a[block..], &b[block..]),
                    ord => ord,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert!(!a.divides(&b));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert_eq!(m(&[1, 0, 0]).try_div(&a), Some(m(&[1, 0, 1])));
        assert_eq!(b.try_div(&a), None);
        assert!(m(&[0, 2, 0]).coprime(&m(&[1, 0, 3])));
        assert!(!a.coprime(&b));
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::lex();
        // x0 > x1^5
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::grevlex();
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // same degree: x0^2 x2 < x0 x1^2 (rightmost difference favors x1^2)
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[1, 2, 0])), Ordering::Less);
        // classic: x0 x2 < x1^2
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_order() {
        let o = MonomialOrder::elimination(1);
        // any power of x0 beats anything without x0
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // x0-free monomials compare by grevlex on the tail
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 2])), Ordering::Less);
    }

    #[test]
    fn permuted_order() {
        // priority x1 > x0 under lex
        let o = MonomialOrder::lex().with_permutation(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[5, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let monos = [m(&[0, 0]), m(&[1, 0]), m(&[0, 1]), m(&[2, 1]), m(&[1, 2])];
        for o in [MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1)] {
            for a in &monos {
                for b in &monos {
                    assert_eq!(o.cmp(a, b), o.cmp(b, a).reverse());
                    // multiplicativity
                    let c = m(&[1, 1]);
                    assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), o.cmp(a, b));
                    // 1 is minimal
                    if !a.is_one() {
                        assert_eq!(o.cmp(a, &Monomial::one(2)), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn insert_and_remove_vars() {
        let a = m(&[2, 3]);
        let lifted = a.insert_vars(0, 1);
        assert_eq!(lifted, m(&[0, 2, 3]));
        assert_eq!(lifted.remove_vars(0, 1), Some(a.clone()));
        assert_eq!(m(&[1, 2, 3]).remove_vars(0, 1), None);
        assert_eq!(a.insert_vars(2, 1), m(&[2, 3, 0]));
    }
}
