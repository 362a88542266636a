//! Truncated exact power series in `q`, optionally with Laurent-polynomial
//! coefficients in a second variable `z`.
//!
//! # Conventions
//!
//! - A series is a rational `offset` (the exponent of its first tracked
//!   coefficient) plus a dense run of coefficients: entry `i` is the
//!   coefficient of `q^(offset + i)`. Everything below the offset is zero by
//!   construction; everything from `offset + len` up is *unknown* (truncated).
//! - Fractional exponents (`q^{1/16}`, `q^{1/8}`, ...) live only in the
//!   offset; per-term exponents are always integers. Two series can be added
//!   only when their offsets differ by an integer.
//! - The truncation order is explicit and propagates as the *minimum* under
//!   multiplication; no operation silently extends precision.
//! - Coefficients of two-variable series are Laurent polynomials in `z`
//!   stored as (lowest exponent, dense coefficient run); the z-supports that
//!   occur here are contiguous or nearly so, so dense runs are cheap.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Coefficient ring for [`Series`]: exact, with enough structure for
/// truncated-series arithmetic.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiply by a scalar rational.
    fn scale_ref(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, when one exists in the coefficient ring.
    fn try_invert(&self) -> Option<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_ref(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// A Laurent polynomial in `z` with exact rational coefficients.
///
/// Canonical form: the zero polynomial stores an empty run; otherwise the
/// first and last stored coefficients are nonzero, and `low` is the exponent
/// of the first one.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    /// The monomial `c · z^k`.
    pub fn term(c: Rational, k: i64) -> Self {
        let mut p = LaurentPoly { low: k, coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::term(c, 0)
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, Rational)]) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p = p.add_ref(&LaurentPoly::term(c.clone(), *k));
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^k` (zero outside the stored run).
    pub fn get(&self, k: i64) -> Rational {
        if self.coeffs.is_empty() || k < self.low {
            return Rational::zero();
        }
        let i = (k - self.low) as usize;
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest and highest exponents with nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some((self.low, self.low + self.coeffs.len() as i64 - 1))
        }
    }

    /// Iterate over (exponent, coefficient) pairs with nonzero coefficient.
    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c))
    }

    /// Specialize `z -> 1` (sum of all coefficients).
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// True when the polynomial is invariant under `z <-> z^{-1}`.
    pub fn is_symmetric(&self) -> bool {
        match self.support() {
            None => true,
            Some((lo, hi)) => (lo..=hi).all(|k| self.get(k) == self.get(-k)),
        }
    }

    /// True when `p(z^{-1}) = -p(z)`.
    pub fn is_antisymmetric(&self) -> bool {
        match self.support() {
            None => true,
            Some((lo, hi)) => (lo..=hi).all(|k| self.get(k) == -self.get(-k)),
        }
    }

    /// Exact division by `(z - z^{-1})`.
    ///
    /// Defined exactly on antisymmetric polynomials; any remainder is an
    /// error. The quotient is reconstructed top-down from
    /// `f_k = g_{k-1} - g_{k+1}` and then verified by re-multiplication.
    pub fn div_z_minus_zinv(&self) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (lo, hi) = self.support().expect("nonzero");
        let mut g = LaurentPoly {
            low: lo + 1,
            coeffs: vec![Rational::zero(); (hi - lo - 1).max(0) as usize],
        };
        // g_{k-1} = f_k + g_{k+1}, marching k from hi down to lo + 1.
        for k in (lo + 1..=hi).rev() {
            let val = self.get(k) + g.get(k + 1);
            let idx = (k - 1 - g.low) as usize;
            if let Some(slot) = g.coeffs.get_mut(idx) {
                *slot = val;
            } else if !val.is_zero() {
                return Err(Error::NumericalInconsistency(
                    "division by (z - 1/z) leaves a remainder".into(),
                ));
            }
        }
        g.trim();
        let back = g.mul_ref(&LaurentPoly::from_terms(&[
            (1, Rational::one()),
            (-1, Rational::int(-1)),
        ]));
        if back != *self {
            return Err(Error::NumericalInconsistency(
                "division by (z - 1/z) leaves a remainder".into(),
            ));
        }
        Ok(g)
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.is_zero()
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let hi = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let mut coeffs = Vec::with_capacity((hi - low) as usize);
        for k in low..hi {
            coeffs.push(self.get(k) + other.get(k));
        }
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let low = self.low + other.low;
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn scale_ref(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Laurent polynomials are units exactly when they are a single monomial.
    fn try_invert(&self) -> Option<Self> {
        let (lo, hi) = self.support()?;
        if lo != hi {
            return None;
        }
        Some(LaurentPoly::term(self.get(lo).recip(), -lo))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A truncated series with exact coefficients: entry `i` is the coefficient
/// of `q^(offset + i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<C: Coeff> {
    offset: Rational,
    coeffs: Vec<C>,
}

/// One-variable series with rational coefficients.
pub type QSeries = Series<Rational>;

/// Series whose coefficients are Laurent polynomials in `z`.
pub type TwoVarSeries = Series<LaurentPoly>;

impl<C: Coeff> Series<C> {
    /// The zero series tracked up to `q^(offset + order)` inclusive.
    pub fn zero(offset: Rational, order: usize) -> Self {
        Series {
            offset,
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// Series from explicit coefficients; `coeffs` must be nonempty.
    pub fn from_coeffs(offset: Rational, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one tracked coefficient");
        Series { offset, coeffs }
    }

    /// The constant 1 tracked up to `q^order`.
    pub fn one(order: usize) -> Self
    where
        C: From<Rational>,
    {
        let mut s = Series::zero(Rational::zero(), order);
        s.coeffs[0] = C::from(Rational::one());
        s
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Highest tracked exponent relative to the offset.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient at relative index `i` (panics past the truncation).
    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    /// Overwrite the coefficient at relative index `i`.
    pub fn set_coeff(&mut self, i: usize, value: C) {
        self.coeffs[i] = value;
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `q^e`, if `e` lies within this series' knowledge:
    /// returns zero for exponents below the offset or off the integer grid,
    /// and `None` past the truncation bound.
    pub fn known_coeff(&self, e: &Rational) -> Option<C> {
        let rel = e - &self.offset;
        let upper = &self.offset + &Rational::int(self.coeffs.len() as i64);
        if *e >= upper {
            return None;
        }
        match rel.to_i64() {
            Some(i) if i >= 0 => Some(self.coeffs[i as usize].clone()),
            _ => Some(C::zero()),
        }
    }

    /// First nonzero coefficient as (absolute exponent, coefficient).
    pub fn leading(&self) -> Option<(Rational, &C)> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| (&self.offset + &Rational::int(i as i64), &self.coeffs[i]))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Replace the offset (used to re-normalize characters after exact
    /// bookkeeping; the caller asserts the intended value separately).
    pub fn with_offset(mut self, offset: Rational) -> Self {
        self.offset = offset;
        self
    }

    /// Shift the whole series by `q^delta`.
    pub fn shifted(mut self, delta: &Rational) -> Self {
        self.offset = &self.offset + delta;
        self
    }

    /// Drop coefficients past relative order `order`.
    pub fn truncated(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Series {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scale_ref(r)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(C::neg_ref).collect(),
        }
    }

    /// Sum; offsets must differ by an integer. The result is tracked on the
    /// common knowledge window (min offset up to the smaller truncation bound).
    pub fn add(&self, other: &Self) -> Result<Self> {
        let diff = &self.offset - &other.offset;
        if !diff.is_integer() {
            return Err(Error::IncompatibleOffset(
                self.offset.to_string(),
                other.offset.to_string(),
            ));
        }
        let offset = if self.offset <= other.offset {
            self.offset.clone()
        } else {
            other.offset.clone()
        };
        let upper_self = &self.offset + &Rational::int(self.coeffs.len() as i64);
        let upper_other = &other.offset + &Rational::int(other.coeffs.len() as i64);
        let upper = upper_self.min(upper_other);
        let len = (&upper - &offset)
            .to_i64()
            .expect("integer-aligned offsets give an integer window length");
        let shift_a = (&self.offset - &offset).to_i64().unwrap();
        let shift_b = (&other.offset - &offset).to_i64().unwrap();
        let mut coeffs = Vec::with_capacity(len as usize);
        for i in 0..len {
            let a = if i >= shift_a && ((i - shift_a) as usize) < self.coeffs.len() {
                self.coeffs[(i - shift_a) as usize].clone()
            } else {
                C::zero()
            };
            let b = if i >= shift_b && ((i - shift_b) as usize) < other.coeffs.len() {
                other.coeffs[(i - shift_b) as usize].clone()
            } else {
                C::zero()
            };
            coeffs.push(a.add_ref(&b));
        }
        Ok(Series { offset, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product; offsets add, truncation order is the minimum of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Series {
            offset: &self.offset + &other.offset,
            coeffs,
        }
    }

    /// `self^k` (k ≥ 0), at the truncation order of `self`.
    pub fn pow(&self, k: usize) -> Self
    where
        C: From<Rational>,
    {
        let mut acc = Series::one(self.order());
        acc.offset = Rational::zero();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse to the truncation order.
    ///
    /// The leading tracked coefficient must be a unit of the coefficient ring
    /// (nonzero rational; single monomial in the Laurent case).
    pub fn invert_unit(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let inv0 = a0.try_invert().ok_or_else(|| {
            Error::NotAUnit(format!(
                "leading coefficient {a0:?} at exponent {} is not invertible",
                self.offset
            ))
        })?;
        let len = self.coeffs.len();
        let mut coeffs = vec![C::zero(); len];
        coeffs[0] = inv0.clone();
        for d in 1..len {
            let mut acc = C::zero();
            for e in 1..=d {
                if self.coeffs[e].is_zero() {
                    continue;
                }
                acc = acc.add_ref(&self.coeffs[e].mul_ref(&coeffs[d - e]));
            }
            coeffs[d] = inv0.mul_ref(&acc).neg_ref();
        }
        Ok(Series {
            offset: -&self.offset,
            coeffs,
        })
    }

    /// First position where the two series disagree on their common knowledge
    /// window, as (absolute q-exponent, self coefficient, other coefficient).
    pub fn first_difference(&self, other: &Self) -> Result<Option<(Rational, C, C)>> {
        let diff = &self.offset - &other.offset;
        if !diff.is_integer() {
            return Err(Error::IncompatibleOffset(
                self.offset.to_string(),
                other.offset.to_string(),
            ));
        }
        let lower = self.offset.clone().min(other.offset.clone());
        let upper_self = &self.offset + &Rational::int(self.coeffs.len() as i64);
        let upper_other = &other.offset + &Rational::int(other.coeffs.len() as i64);
        let upper = upper_self.min(upper_other);
        let len = (&upper - &lower).to_i64().unwrap_or(0).max(0);
        for i in 0..len {
            let e = &lower + &Rational::int(i);
            let a = self.known_coeff(&e).unwrap_or_else(C::zero);
            let b = other.known_coeff(&e).unwrap_or_else(C::zero);
            if a != b {
                return Ok(Some((e, a, b)));
            }
        }
        Ok(None)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(r: Rational) -> Self {
        LaurentPoly::constant(r)
    }
}

impl QSeries {
    /// Lift to a two-variable series with z-constant coefficients.
    pub fn lift_to_two_var(&self) -> TwoVarSeries {
        Series {
            offset: self.offset.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| LaurentPoly::constant(c.clone()))
                .collect(),
        }
    }
}

impl TwoVarSeries {
    /// Specialize `z -> 1`, collapsing to a one-variable series.
    pub fn specialize_z_to_one(&self) -> QSeries {
        Series {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(LaurentPoly::eval_at_one).collect(),
        }
    }

    /// True when every coefficient is invariant under `z <-> z^{-1}`.
    pub fn is_z_symmetric(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_symmetric)
    }
}

/// The truncated Euler product `phi(q) = prod_{n>=1} (1 - q^n)`.
pub fn euler_product(order: usize) -> QSeries {
    let mut p = QSeries::one(order);
    for n in 1..=order {
        let mut factor = QSeries::zero(Rational::zero(), order);
        factor.coeffs[0] = Rational::one();
        factor.coeffs[n] = Rational::int(-1);
        p = p.mul(&factor);
    }
    p
}

/// `1/phi(q)`: the partition-number generating series, truncated.
pub fn euler_inverse(order: usize) -> QSeries {
    euler_product(order)
        .invert_unit()
        .expect("euler product has leading coefficient 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn qs(offset: Rational, ints: &[i64]) -> QSeries {
        QSeries::from_coeffs(offset, ints.iter().map(|&n| Rational::int(n)).collect())
    }

    /// Brute-force partition count, the independent oracle for euler_inverse.
    fn partitions(n: usize, max_part: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max_part.min(n))
            .map(|p| partitions(n - p, p))
            .sum()
    }

    #[test]
    fn euler_inverse_counts_partitions() {
        let s = euler_inverse(12);
        for (i, c) in s.coeffs().iter().enumerate() {
            assert_eq!(
                c,
                &Rational::int(partitions(i, i.max(1)) as i64),
                "partition count mismatch at q^{i}"
            );
        }
        // Spot values: 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42.
        assert_eq!(s.coeff(10), &Rational::int(42));
    }

    #[test]
    fn euler_product_has_pentagonal_signs() {
        // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
        let p = euler_product(26);
        let mut expected = vec![0i64; 27];
        for k in -4i64..=4 {
            let e = k * (3 * k - 1) / 2;
            if (0..=26).contains(&e) {
                expected[e as usize] += if k % 2 == 0 { 1 } else { -1 };
            }
        }
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(p.coeff(i), &Rational::int(*want), "pentagonal sign at q^{i}");
        }
    }

    #[test]
    fn geometric_series_inverse() {
        let one_minus_q = qs(Rational::zero(), &[1, -1, 0, 0, 0, 0]);
        let inv = one_minus_q.invert_unit().unwrap();
        assert_eq!(inv, qs(Rational::zero(), &[1, 1, 1, 1, 1, 1]));
        let one = QSeries::one(5);
        assert_eq!(one.invert_unit().unwrap(), one);
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = qs(rat(1, 16), &[2, 3, -1, 5, 0, 7]);
        let inv = a.invert_unit().unwrap();
        let left = a.mul(&inv);
        let right = inv.mul(&a);
        assert_eq!(left, QSeries::one(5));
        assert_eq!(right, QSeries::one(5));
    }

    #[test]
    fn non_unit_is_rejected() {
        let a = qs(Rational::zero(), &[0, 1, 1]);
        assert!(matches!(a.invert_unit(), Err(Error::NotAUnit(_))));
        let two_var = TwoVarSeries::from_coeffs(
            Rational::zero(),
            vec![LaurentPoly::from_terms(&[(0, rat(1, 1)), (2, rat(1, 1))])],
        );
        assert!(matches!(two_var.invert_unit(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn offset_alignment() {
        let a = qs(rat(1, 2), &[1, 1]);
        let b = qs(rat(3, 2), &[4, 5]);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, qs(rat(1, 2), &[1, 5]));

        let c = qs(rat(1, 16), &[1]);
        assert!(matches!(a.add(&c), Err(Error::IncompatibleOffset(_, _))));
    }

    #[test]
    fn mul_truncates_to_min_order_and_adds_offsets() {
        let a = qs(rat(1, 2), &[1, 1, 1, 1, 1]);
        let b = qs(rat(1, 2), &[1, 2]);
        let prod = a.mul(&b);
        assert_eq!(prod.offset(), &Rational::int(1));
        assert_eq!(prod.order(), 1);
        assert_eq!(prod, qs(Rational::int(1), &[1, 3]));
    }

    #[test]
    fn ring_axioms_on_fixed_small_series() {
        // Associativity and distributivity, exact, order <= 10.
        let xs = [
            qs(Rational::zero(), &[1, 4, -2, 0, 3, 1, 1, 1, 9, -5, 2]),
            qs(Rational::int(1), &[2, 0, 0, 1, -1, 7, 0, 2, 2, -3, 4]),
            qs(Rational::int(-1), &[5, 1, 1, -6, 2, 0, 1, 0, 8, 1, -2]),
        ];
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        let lhs = a.mul(&b.add(c).unwrap());
        let rhs = a.mul(b).add(&a.mul(c)).unwrap();
        assert_eq!(lhs.first_difference(&rhs).unwrap(), None);
        assert_eq!(
            a.add(b).unwrap().add(c).unwrap(),
            a.add(&b.add(c).unwrap()).unwrap()
        );
    }

    #[test]
    fn laurent_division_by_z_minus_zinv() {
        // (z^3 - z^-3) / (z - z^-1) = z^2 + 1 + z^-2.
        let f = LaurentPoly::from_terms(&[(3, rat(1, 1)), (-3, rat(-1, 1))]);
        let g = f.div_z_minus_zinv().unwrap();
        assert_eq!(
            g,
            LaurentPoly::from_terms(&[(2, rat(1, 1)), (0, rat(1, 1)), (-2, rat(1, 1))])
        );
        // A symmetric polynomial is not divisible.
        let bad = LaurentPoly::from_terms(&[(1, rat(1, 1)), (-1, rat(1, 1))]);
        assert!(bad.div_z_minus_zinv().is_err());
    }

    #[test]
    fn laurent_symmetry_predicates() {
        let sym = LaurentPoly::from_terms(&[(2, rat(1, 1)), (0, rat(5, 1)), (-2, rat(1, 1))]);
        assert!(sym.is_symmetric() && !sym.is_antisymmetric());
        let anti = LaurentPoly::from_terms(&[(1, rat(2, 1)), (-1, rat(-2, 1))]);
        assert!(anti.is_antisymmetric() && !anti.is_symmetric());
    }

    #[test]
    fn two_var_round_trip() {
        let q = qs(rat(1, 8), &[1, 2, 3]);
        let lifted = q.lift_to_two_var();
        assert_eq!(lifted.specialize_z_to_one(), q);
        assert!(lifted.is_z_symmetric());
    }

    #[test]
    fn leading_and_known_coeff() {
        let s = qs(rat(1, 2), &[0, 0, 7, 1]);
        let (e, c) = s.leading().unwrap();
        assert_eq!(e, rat(5, 2));
        assert_eq!(c, &Rational::int(7));
        assert_eq!(s.known_coeff(&rat(1, 4)), Some(Rational::zero()));
        assert_eq!(s.known_coeff(&rat(-7, 2)), Some(Rational::zero()));
        assert_eq!(s.known_coeff(&rat(9, 2)), None);
    }
}
