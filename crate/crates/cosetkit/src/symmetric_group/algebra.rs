//! The exact group algebra of the symmetric group.
//!
//! Elements are finite rational linear combinations of permutations, stored
//! sparsely with no zero coefficients. Multiplication is convolution with
//! the composition convention `(sigma . tau)(x) = sigma(tau(x))`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symmetric_group::partition::Tableau;
use crate::symmetric_group::perm::Perm;

/// An element of the group algebra of `S_n` over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Perm, Rational>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The identity permutation with coefficient 1.
    pub fn one(n: usize) -> Self {
        AlgebraElement::from_perm(Perm::identity(n))
    }

    pub fn from_perm(p: Perm) -> Self {
        let n = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, Rational::one());
        AlgebraElement { n, terms }
    }

    /// `r` times the identity.
    pub fn scalar(n: usize, r: Rational) -> Self {
        AlgebraElement::one(n).scale(&r)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rational)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of(&self, p: &Perm) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, p: Perm, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, other.n, "mixed group algebras");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> AlgebraElement {
        if r.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * r)).collect(),
        }
    }

    /// Convolution product.
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, other.n, "mixed group algebras");
        let mut out = AlgebraElement::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.insert(p.compose(q), a * b);
            }
        }
        out
    }

    /// Left multiplication by a single permutation.
    pub fn mul_perm_left(&self, p: &Perm) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (p.compose(q), c.clone()))
                .collect(),
        }
    }

    /// Right multiplication by a single permutation.
    pub fn mul_perm_right(&self, p: &Perm) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (q.compose(p), c.clone()))
                .collect(),
        }
    }

    /// Dense coefficient vector relative to a fixed ordering of `S_n`.
    pub fn to_dense(&self, index: &PermIndex) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); index.len()];
        for (p, c) in &self.terms {
            v[index.index_of(p)] = c.clone();
        }
        v
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*{p}")?;
        }
        Ok(())
    }
}

/// A fixed enumeration of `S_n`, mapping permutations to dense indices.
pub struct PermIndex {
    perms: Vec<Perm>,
    lookup: std::collections::HashMap<Perm, usize>,
}

impl PermIndex {
    pub fn new(n: usize) -> Self {
        let perms = Perm::all(n);
        let lookup = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        PermIndex { perms, lookup }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.lookup[p]
    }
}

/// Row symmetrizer `a_t`, signed column sum `b_t`, and Young symmetrizer
/// `c_t = b_t . a_t` of a tableau.
pub fn young_symmetrizer(t: &Tableau) -> (AlgebraElement, AlgebraElement, AlgebraElement) {
    let n = t.n();
    let mut a = AlgebraElement::zero(n);
    for sigma in t.row_group() {
        a.insert(sigma, Rational::one());
    }
    let mut b = AlgebraElement::zero(n);
    for sigma in t.column_group() {
        let sign = Rational::int(sigma.sign());
        b.insert(sigma, sign);
    }
    let c = b.mul(&a);
    (a, b, c)
}

/// Generators of the two-sided ideal cutting the group algebra down to its
/// two-row blocks: `(s_i + s_{i+1} + s_{i+1} s_i s_{i+1})(same - 3)` for
/// each adjacent index `i` with `i+1` still a generator. Empty for `n <= 2`.
pub fn j_ideal_generators(n: usize) -> Vec<AlgebraElement> {
    if n <= 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..n - 2 {
        let si = AlgebraElement::from_perm(Perm::adjacent(n, i));
        let si1 = AlgebraElement::from_perm(Perm::adjacent(n, i + 1));
        let braid = AlgebraElement::from_perm(
            Perm::adjacent(n, i + 1)
                .compose(&Perm::adjacent(n, i))
                .compose(&Perm::adjacent(n, i + 1)),
        );
        let e = si.add(&si1).add(&braid);
        let g = e.mul(&e.sub(&AlgebraElement::scalar(n, Rational::int(3))));
        out.push(g);
    }
    out
}

/// The signed sum over all permutations of the given points (fixing
/// everything else): the antisymmetrizer of the embedded symmetric group
/// on `points` inside `S_n`. Points must be distinct and below `n`.
pub fn embedded_antisymmetrizer(n: usize, points: &[usize]) -> Result<AlgebraElement> {
    if points.iter().any(|&p| p >= n) {
        return Err(Error::BadIndex(format!(
            "antisymmetrizer point out of range for S_{n}: {points:?}"
        )));
    }
    let distinct: std::collections::BTreeSet<usize> = points.iter().copied().collect();
    if distinct.len() != points.len() {
        return Err(Error::BadIndex(format!(
            "antisymmetrizer points must be distinct: {points:?}"
        )));
    }
    let mut out = AlgebraElement::zero(n);
    for sigma in Perm::all(points.len()) {
        let mut images: Vec<usize> = (0..n).collect();
        for (local, &point) in points.iter().enumerate() {
            images[point] = points[sigma.apply(local)];
        }
        let embedded = Perm::from_images(images)?;
        let signed = AlgebraElement::from_perm(embedded)
            .scale(&Rational::int(sigma.sign()));
        out = out.add(&signed);
    }
    Ok(out)
}
