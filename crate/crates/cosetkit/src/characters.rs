//! Exact two-variable characters: lattice characters, affine sl2 characters
//! via the Weyl–Kac theta quotient, the recursive coset characters of the
//! commutant modules, and the coefficientwise verification of the branching
//! decomposition.
//!
//! All characters here are graded dimensions `q^h (dim_0 + dim_1 q + ...)`
//! with no modular anomaly shift, so both sides of a decomposition identity
//! are directly comparable as graded vector spaces. Two-variable series carry
//! the sl2-weight grading in `z` (a Laurent polynomial per `q`-power).

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minimal_model::{minimal_character, MinimalLabel};
use crate::rational::{rat, Rational};
use crate::series::{euler_inverse, LaurentPoly, QSeries, TwoVarSeries};

/// Label of an integrable highest-weight module of affine sl2:
/// level `k >= 1` and highest weight `0 <= lambda <= k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AffineLabel {
    level: i64,
    lambda: i64,
}

impl AffineLabel {
    pub fn new(level: i64, lambda: i64) -> Result<Self> {
        if level < 1 {
            return Err(Error::BadLabel(format!("level must be >= 1, got {level}")));
        }
        if lambda < 0 || lambda > level {
            return Err(Error::BadLabel(format!(
                "highest weight must lie in [0, {level}], got {lambda}"
            )));
        }
        Ok(AffineLabel { level, lambda })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    /// Lowest conformal weight `lambda(lambda+2) / (4(level+2))`.
    pub fn weight(&self) -> Rational {
        rat(self.lambda * (self.lambda + 2), 4 * (self.level + 2))
    }

    /// Central charge `3 level / (level + 2)`.
    pub fn central_charge(&self) -> Rational {
        rat(3 * self.level, self.level + 2)
    }
}

/// Label of a coset (commutant) module character: `letters` lattice copies,
/// a bit-vector of that length, and `0 <= k <= letters` with
/// `|delta'| == k (mod 2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetLabel {
    letters: usize,
    delta_prime: Vec<u8>,
    k: usize,
}

impl CosetLabel {
    pub fn new(letters: usize, delta_prime: &[u8], k: usize) -> Result<Self> {
        if letters < 1 {
            return Err(Error::BadLabel(format!(
                "need at least one letter, got {letters}"
            )));
        }
        if delta_prime.len() != letters {
            return Err(Error::BadLabel(format!(
                "delta' must have length {letters}, got {}",
                delta_prime.len()
            )));
        }
        if delta_prime.iter().any(|&b| b > 1) {
            return Err(Error::BadLabel("delta' entries must be bits".into()));
        }
        if k > letters {
            return Err(Error::BadLabel(format!(
                "need 0 <= k <= {letters}, got {k}"
            )));
        }
        let weight: usize = delta_prime.iter().map(|&b| b as usize).sum();
        if weight % 2 != k % 2 {
            return Err(Error::BadLabel(format!(
                "parity violation: |delta'| = {weight} vs k = {k}"
            )));
        }
        Ok(CosetLabel {
            letters,
            delta_prime: delta_prime.to_vec(),
            k,
        })
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn delta_prime(&self) -> &[u8] {
        &self.delta_prime
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The isomorphic partner `(delta' + 1^m, m - k)`.
    pub fn partner(&self) -> CosetLabel {
        CosetLabel {
            letters: self.letters,
            delta_prime: self.delta_prime.iter().map(|&b| 1 - b).collect(),
            k: self.letters - self.k,
        }
    }
}

/// The theta function `Theta_{m, kappa}(q, z) = sum_{j in Z + m/(2 kappa)}
/// q^{kappa j^2} z^{2 kappa j}`, truncated `order` integer steps above its
/// base exponent `m^2 / (4 kappa)`.
fn theta(m_tilde: i64, kappa: i64, order: usize) -> TwoVarSeries {
    let offset = rat(m_tilde * m_tilde, 4 * kappa);
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    let reach = order as i64 + m_tilde.abs() + 2;
    for i in -reach..=reach {
        // Exponent kappa j^2 with j = i + m/(2 kappa), relative to the base.
        let degree = kappa * i * i + m_tilde * i;
        if (0..=order as i64).contains(&degree) {
            let z_power = 2 * kappa * i + m_tilde;
            let bump = LaurentPoly::term(Rational::one(), z_power);
            let slot = degree as usize;
            let updated = match coeffs[slot].is_zero() {
                true => bump,
                false => poly_add(&coeffs[slot], &bump),
            };
            coeffs[slot] = updated;
        }
    }
    TwoVarSeries::from_coeffs(offset, coeffs)
}

fn poly_add(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut terms: Vec<(i64, Rational)> = a.iter_terms().map(|(k, c)| (k, c.clone())).collect();
    for (k, c) in b.iter_terms() {
        terms.push((k, c.clone()));
    }
    LaurentPoly::from_terms(&terms)
}

/// The unit part of the affine denominator:
/// `prod_{n >= 1} (1 - q^n)(1 - z^2 q^n)(1 - z^{-2} q^n)`, constant term 1.
fn denominator_unit(order: usize) -> TwoVarSeries {
    let mut product = TwoVarSeries::one(order);
    for n in 1..=order {
        for z_power in [0i64, 2, -2] {
            let mut factor = TwoVarSeries::one(order);
            factor.set_coeff(n, LaurentPoly::term(Rational::int(-1), z_power));
            product = product.mul(&factor).truncated(order);
        }
    }
    product
}

/// Divide each q-coefficient exactly by `z - z^{-1}`.
fn divide_z_antisymmetric(series: &TwoVarSeries) -> Result<TwoVarSeries> {
    let mut coeffs = Vec::with_capacity(series.order() + 1);
    for i in 0..=series.order() {
        coeffs.push(series.coeff(i).div_z_minus_zinv()?);
    }
    Ok(TwoVarSeries::from_coeffs(series.offset().clone(), coeffs))
}

/// Character of one lattice copy with shift bit `bit`: the sum over
/// `v in bit/2 + Z` of `q^{v^2} z^{2v}` (theta part only).
fn single_lattice_theta(bit: u8, order: usize) -> TwoVarSeries {
    // v = x + bit/2, exponent v^2 = (x^2 + bit x) + bit/4.
    theta(bit as i64, 1, order)
}

/// Exact two-variable character of `m` lattice copies with shift vector
/// `delta'`: the theta sum over the shifted lattice times the oscillator
/// contribution `euler_inverse^m`.
pub fn lattice_character(m: usize, delta_prime: &[u8], order: usize) -> Result<TwoVarSeries> {
    if m < 1 || delta_prime.len() != m {
        return Err(Error::BadLabel(format!(
            "need a shift bit per copy: m = {m}, got {} bits",
            delta_prime.len()
        )));
    }
    if delta_prime.iter().any(|&b| b > 1) {
        return Err(Error::BadLabel("shift entries must be bits".into()));
    }
    let mut series = single_lattice_theta(delta_prime[0], order);
    for &bit in &delta_prime[1..] {
        series = series.mul(&single_lattice_theta(bit, order)).truncated(order);
    }
    let oscillators = euler_inverse(order).lift_to_two_var().pow(m);
    Ok(series.mul(&oscillators).truncated(order))
}

/// Exact two-variable character of the integrable affine sl2 module, via the
/// Weyl–Kac quotient: numerator `Theta_{lambda+1, k+2} - Theta_{-lambda-1, k+2}`,
/// denominator `q^{1/8} (z - z^{-1}) prod (1-q^n)(1-z^2 q^n)(1-z^{-2} q^n)`.
///
/// The result is normalized as a graded dimension: leading exponent exactly
/// the lowest conformal weight, leading coefficient the full sl2-multiplet
/// `z^lambda + z^{lambda-2} + ... + z^{-lambda}`; any deviation is a
/// `NumericalInconsistency`.
pub fn affine_character(label: &AffineLabel, order: usize) -> Result<TwoVarSeries> {
    let kappa = label.level() + 2;
    let lambda = label.lambda();
    let numerator = theta(lambda + 1, kappa, order).sub(&theta(-lambda - 1, kappa, order))?;
    let quotient = divide_z_antisymmetric(&numerator)?;
    let unit_inverse = denominator_unit(order).invert_unit()?;
    let assembled = quotient.mul(&unit_inverse).truncated(order);
    // Remove q^{1/8} and the modular anomaly in one exact shift.
    let shift = &label.central_charge() * &rat(1, 24) - rat(1, 8);
    let series = assembled.shifted(&shift);
    let expected_multiplet = LaurentPoly::from_terms(
        &(-lambda..=lambda)
            .step_by(2)
            .map(|p| (p, Rational::one()))
            .collect::<Vec<_>>(),
    );
    if *series.offset() != label.weight() || *series.coeff(0) != expected_multiplet {
        return Err(Error::NumericalInconsistency(format!(
            "affine character for level {} weight {} does not start with its \
             lowest multiplet at the expected exponent",
            label.level(),
            label.lambda()
        )));
    }
    Ok(series)
}

/// Exact graded dimension of the coset module `M^{delta'}(k)` on `m`
/// letters, through the branching recursion
/// `ch M^{delta'}(k) = sum_{k'} ch M^{dbar'}(k') * ch L(c_{m-1}, h_{k'+1, k+1})`
/// with `dbar'` the first `m-1` bits and `k'` running over `[0, m-1]` with
/// `k' == |dbar'| (mod 2)`; one letter is the free-fermion pair of sectors.
pub fn coset_character(label: &CosetLabel, order: usize) -> Result<QSeries> {
    let mut memo = HashMap::new();
    coset_recursion(label.delta_prime(), label.k(), order, &mut memo)
}

fn coset_recursion(
    delta_prime: &[u8],
    k: usize,
    order: usize,
    memo: &mut HashMap<(Vec<u8>, usize), QSeries>,
) -> Result<QSeries> {
    let key = (delta_prime.to_vec(), k);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let m = delta_prime.len();
    let result = if m == 1 {
        if k <= 1 && k % 2 == delta_prime[0] as usize % 2 {
            QSeries::one(order)
        } else {
            QSeries::zero(Rational::zero(), order)
        }
    } else {
        let reduced = &delta_prime[..m - 1];
        let parity: usize = reduced.iter().map(|&b| b as usize).sum::<usize>() % 2;
        let mut acc: Option<QSeries> = None;
        for k_prime in 0..=m - 1 {
            if k_prime % 2 != parity {
                continue;
            }
            let branch = coset_recursion(reduced, k_prime, order, memo)?;
            let virasoro = minimal_character(
                &MinimalLabel::new((m - 1) as i64, k_prime as i64 + 1, k as i64 + 1)?,
                order,
            );
            let term = branch.mul(&virasoro).truncated(order);
            acc = Some(match acc {
                None => term,
                Some(sum) => sum.add(&term)?,
            });
        }
        acc.expect("each parity class below m is nonempty")
    };
    memo.insert(key, result.clone());
    Ok(result)
}

/// Leading exponent and coefficient of a coset character: the lowest
/// conformal weight and the dimension of the lowest-weight space. Errors
/// with `Inconclusive` if the character vanishes to the given order, and
/// with `NumericalInconsistency` if the leading coefficient is not a
/// positive integer.
pub fn leading_data(label: &CosetLabel, order: usize) -> Result<(Rational, u64)> {
    let series = coset_character(label, order)?;
    let Some((exponent, coefficient)) = series.leading() else {
        return Err(Error::Inconclusive(format!(
            "coset character vanishes to order {order}"
        )));
    };
    let dim = coefficient
        .to_i64()
        .filter(|&d| d > 0)
        .ok_or_else(|| {
            Error::NumericalInconsistency(format!(
                "leading coefficient {coefficient} is not a positive integer"
            ))
        })?;
    Ok((exponent, dim as u64))
}

/// Leading data of one branching summand, for reports.
#[derive(Clone, Debug, Serialize)]
pub struct SummandReport {
    pub k: usize,
    pub affine_weight: Rational,
    pub coset_weight: Rational,
    pub coset_leading_dim: u64,
}

/// Location and values of the first coefficient disagreement.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub q_power: Rational,
    pub z_power: i64,
    pub lattice: Rational,
    pub decomposition: Rational,
}

/// Outcome of one decomposition verification.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub letters: usize,
    pub delta: String,
    pub order: usize,
    pub holds: bool,
    pub summands: Vec<SummandReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

/// Verify, exactly and coefficientwise in both variables, that the lattice
/// character of `m` copies with shift `delta'` equals the sum over sectors
/// `k == |delta'| (mod 2)` of affine character (level `m`, weight `k`) times
/// the coset character `M^{delta'}(k)`, to the given order.
pub fn verify_decomposition(
    m: usize,
    delta_prime: &[u8],
    order: usize,
) -> Result<DecompositionReport> {
    if m < 2 {
        return Err(Error::BadIndex(format!("need at least two copies, got {m}")));
    }
    if order < 1 {
        return Err(Error::BadIndex("order must be positive".into()));
    }
    let lattice = lattice_character(m, delta_prime, order)?;
    let parity: usize = delta_prime.iter().map(|&b| b as usize).sum::<usize>() % 2;
    let mut sum: Option<TwoVarSeries> = None;
    let mut summands = Vec::new();
    for k in 0..=m {
        if k % 2 != parity {
            continue;
        }
        let affine_label = AffineLabel::new(m as i64, k as i64)?;
        let affine = affine_character(&affine_label, order)?;
        let coset_label = CosetLabel::new(m, delta_prime, k)?;
        let coset = coset_character(&coset_label, order)?;
        let (coset_weight, coset_leading_dim) = leading_data(&coset_label, order)?;
        summands.push(SummandReport {
            k,
            affine_weight: affine_label.weight(),
            coset_weight,
            coset_leading_dim,
        });
        let term = affine.mul(&coset.lift_to_two_var()).truncated(order);
        sum = Some(match sum {
            None => term,
            Some(acc) => acc.add(&term)?,
        });
    }
    let sum = sum.expect("the parity class of |delta'| is nonempty in [0, m]");
    let difference = lattice.first_difference(&sum)?;
    let mismatch = difference.map(|(q_power, left, right)| {
        let (z_power, lattice_value, decomposition_value) = poly_first_difference(&left, &right);
        Mismatch {
            q_power,
            z_power,
            lattice: lattice_value,
            decomposition: decomposition_value,
        }
    });
    Ok(DecompositionReport {
        letters: m,
        delta: delta_prime.iter().map(|b| (b'0' + b) as char).collect(),
        order,
        holds: mismatch.is_none(),
        summands,
        mismatch,
    })
}

/// First z-power where two Laurent polynomials differ, with both values.
fn poly_first_difference(a: &LaurentPoly, b: &LaurentPoly) -> (i64, Rational, Rational) {
    let mut powers: Vec<i64> = a
        .iter_terms()
        .map(|(k, _)| k)
        .chain(b.iter_terms().map(|(k, _)| k))
        .collect();
    powers.sort_unstable();
    powers.dedup();
    for k in powers {
        let left = a.get(k);
        let right = b.get(k);
        if left != right {
            return (k, left, right);
        }
    }
    unreachable!("called only on polynomials known to differ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_character_single_copy() {
        let ch = lattice_character(1, &[0], 8).unwrap();
        assert_eq!(*ch.offset(), Rational::zero());
        // Vacuum coefficient 1 at z^0.
        assert_eq!(*ch.coeff(0), LaurentPoly::one());
        // Level one: the oscillator state plus e^{±alpha}.
        let level_one = ch.coeff(1);
        assert_eq!(level_one.get(0), Rational::one());
        assert_eq!(level_one.get(2), Rational::one());
        assert_eq!(level_one.get(-2), Rational::one());
        assert_eq!(level_one.eval_at_one(), Rational::int(3));

        let shifted = lattice_character(1, &[1], 8).unwrap();
        assert_eq!(*shifted.offset(), rat(1, 4));
        let lead = shifted.coeff(0);
        assert_eq!(lead.get(1), Rational::one());
        assert_eq!(lead.get(-1), Rational::one());
    }

    #[test]
    fn lattice_characters_are_z_symmetric_with_natural_coefficients() {
        for m in 1..=3usize {
            for mask in 0u8..(1 << m) {
                let bits: Vec<u8> = (0..m).map(|i| (mask >> i) & 1).collect();
                let ch = lattice_character(m, &bits, 6).unwrap();
                assert!(ch.is_z_symmetric());
                for i in 0..=ch.order() {
                    for (_, c) in ch.coeff(i).iter_terms() {
                        assert!(c.is_integer() && !c.is_negative());
                    }
                }
            }
        }
    }

    #[test]
    fn affine_level_one_matches_the_lattice() {
        for lambda in 0..=1i64 {
            let affine = affine_character(&AffineLabel::new(1, lambda).unwrap(), 10).unwrap();
            let lattice = lattice_character(1, &[lambda as u8], 10).unwrap();
            assert_eq!(
                affine.first_difference(&lattice).unwrap(),
                None,
                "level-one affine character differs from the lattice realization"
            );
        }
    }

    #[test]
    fn affine_leading_multiplets_and_integrality() {
        for level in 1..=3i64 {
            for lambda in 0..=level {
                let label = AffineLabel::new(level, lambda).unwrap();
                let ch = affine_character(&label, 8).unwrap();
                assert_eq!(*ch.offset(), label.weight());
                assert!(ch.is_z_symmetric());
                for i in 0..=ch.order() {
                    for (_, c) in ch.coeff(i).iter_terms() {
                        assert!(
                            c.is_integer() && !c.is_negative(),
                            "negative or fractional multiplicity in affine character"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn denominator_identity() {
        // Sum side: Theta_{1,2} - Theta_{-1,2}.
        let order = 20;
        let sum_side = theta(1, 2, order).sub(&theta(-1, 2, order)).unwrap();
        // Product side: (z - z^{-1}) prod (1-q^n)(1-z^2 q^n)(1-z^{-2} q^n),
        // shifted by the base exponent 1/8.
        let bracket = TwoVarSeries::from_coeffs(
            Rational::zero(),
            {
                let mut coeffs = vec![LaurentPoly::zero(); order + 1];
                coeffs[0] = LaurentPoly::from_terms(&[
                    (1, Rational::one()),
                    (-1, Rational::int(-1)),
                ]);
                coeffs
            },
        );
        let product_side = bracket
            .mul(&denominator_unit(order))
            .truncated(order)
            .shifted(&rat(1, 8));
        assert_eq!(sum_side.first_difference(&product_side).unwrap(), None);
    }

    #[test]
    fn coset_base_cases_and_small_examples() {
        // Two letters: the free-fermion-pair branching gives the three
        // minimal model characters of central charge 1/2.
        let vacuum = coset_character(&CosetLabel::new(2, &[0, 0], 0).unwrap(), 12).unwrap();
        let expected = minimal_character(&MinimalLabel::new(1, 1, 1).unwrap(), 12);
        assert_eq!(vacuum.first_difference(&expected).unwrap(), None);

        let energy = coset_character(&CosetLabel::new(2, &[0, 0], 2).unwrap(), 12).unwrap();
        let expected = minimal_character(&MinimalLabel::new(1, 1, 3).unwrap(), 12);
        assert_eq!(*energy.offset(), rat(1, 2));
        assert_eq!(energy.first_difference(&expected).unwrap(), None);

        let spin = coset_character(&CosetLabel::new(2, &[1, 0], 1).unwrap(), 12).unwrap();
        let expected = minimal_character(&MinimalLabel::new(1, 2, 2).unwrap(), 12);
        assert_eq!(*spin.offset(), rat(1, 16));
        assert_eq!(spin.first_difference(&expected).unwrap(), None);
    }

    #[test]
    fn leading_data_examples() {
        assert_eq!(
            leading_data(&CosetLabel::new(2, &[0, 0], 0).unwrap(), 8).unwrap(),
            (Rational::zero(), 1)
        );
        assert_eq!(
            leading_data(&CosetLabel::new(4, &[0; 4], 2).unwrap(), 8).unwrap(),
            (rat(2, 3), 3)
        );
        assert_eq!(
            leading_data(&CosetLabel::new(4, &[0; 4], 4).unwrap(), 8).unwrap(),
            (Rational::int(1), 2)
        );
    }

    #[test]
    fn isomorphic_labels_share_characters() {
        for m in 2..=4usize {
            for mask in 0u8..(1 << m) {
                let bits: Vec<u8> = (0..m).map(|i| (mask >> i) & 1).collect();
                for k in 0..=m {
                    let Ok(label) = CosetLabel::new(m, &bits, k) else {
                        continue;
                    };
                    let partner = label.partner();
                    let a = coset_character(&label, 10).unwrap();
                    let b = coset_character(&partner, 10).unwrap();
                    assert_eq!(
                        a.first_difference(&b).unwrap(),
                        None,
                        "isomorphic labels with different characters at m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn coset_coefficients_are_natural_numbers() {
        for m in 2..=4usize {
            for mask in 0u8..(1 << m) {
                let bits: Vec<u8> = (0..m).map(|i| (mask >> i) & 1).collect();
                for k in 0..=m {
                    let Ok(label) = CosetLabel::new(m, &bits, k) else {
                        continue;
                    };
                    let ch = coset_character(&label, 10).unwrap();
                    for i in 0..=ch.order() {
                        let c = ch.coeff(i);
                        assert!(c.is_integer() && !c.is_negative());
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_holds_for_small_cases() {
        let report = verify_decomposition(2, &[0, 0], 12).unwrap();
        assert!(report.holds, "mismatch: {:?}", report.mismatch);
        assert_eq!(report.summands.len(), 2);

        let report = verify_decomposition(2, &[1, 0], 12).unwrap();
        assert!(report.holds, "mismatch: {:?}", report.mismatch);

        let report = verify_decomposition(3, &[0, 0, 0], 10).unwrap();
        assert!(report.holds, "mismatch: {:?}", report.mismatch);
        assert_eq!(report.summands.len(), 2);
    }

    #[test]
    fn leading_data_matches_the_classifier() {
        use crate::classifier::{
            lowest_conformal_weight, specht_block_data, ModuleLabel,
        };
        for m in 2..=4usize {
            let n = m - 1;
            for mask in 0u8..(1 << m) {
                let bits: Vec<u8> = (0..m).map(|i| (mask >> i) & 1).collect();
                for k in 0..=m {
                    let Ok(label) = ModuleLabel::new(n, &bits, k) else {
                        continue;
                    };
                    let coset = CosetLabel::new(m, &bits, k).unwrap();
                    let (weight, dim) = leading_data(&coset, 10).unwrap();
                    assert_eq!(
                        weight,
                        lowest_conformal_weight(&label),
                        "weight mismatch for {label}"
                    );
                    let (_, partition) = specht_block_data(&label);
                    assert_eq!(
                        dim,
                        partition.specht_dimension(),
                        "dimension mismatch for {label}"
                    );
                }
            }
        }
    }

    #[test]
    fn bad_labels_are_rejected() {
        assert!(matches!(
            CosetLabel::new(3, &[1, 0, 0], 0),
            Err(Error::BadLabel(_))
        ));
        assert!(matches!(
            CosetLabel::new(3, &[0, 0], 0),
            Err(Error::BadLabel(_))
        ));
        assert!(matches!(
            AffineLabel::new(2, 3),
            Err(Error::BadLabel(_))
        ));
        assert!(matches!(
            verify_decomposition(1, &[0], 10),
            Err(Error::BadIndex(_))
        ));
    }
}
