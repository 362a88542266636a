//! Virasoro minimal-model data for the unitary discrete series.
//!
//! # Conventions
//!
//! - The series index `m >= 1` fixes the model with central charge
//!   `c_m = 1 - 6/((m+2)(m+3))`; writing `p = m+2`, `p' = m+3`, the Kac
//!   labels are `1 <= r <= m+1`, `1 <= s <= m+2` with conformal weight
//!   `h_{r,s} = ((r p' - s p)^2 - 1) / (4 p p')`.
//! - `(r, s)` and `(m+2-r, m+3-s)` name the same irreducible module;
//!   [`MinimalLabel`] canonicalizes to the lexicographically smaller pair.
//! - A fusion dimension is decided by the admissible-triple criterion
//!   (ranges, odd sums with upper bounds, strict triangle inequalities),
//!   scanned over Kac representatives so the answer depends only on the
//!   modules, not on which representative the caller passed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::series::{euler_inverse, QSeries};

/// A Kac label `(r, s)` in the series-`m` minimal model, stored canonically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct MinimalLabel {
    m: i64,
    r: i64,
    s: i64,
}

fn check_m(m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::BadIndex(format!("series index m = {m} must be >= 1")));
    }
    Ok(())
}

fn check_pair(m: i64, (r, s): (i64, i64)) -> Result<()> {
    check_m(m)?;
    if !(1..=m + 1).contains(&r) || !(1..=m + 2).contains(&s) {
        return Err(Error::BadIndex(format!(
            "Kac label ({r},{s}) out of range for m = {m}: need 1 <= r <= {}, 1 <= s <= {}",
            m + 1,
            m + 2
        )));
    }
    Ok(())
}

/// The Kac reflection `(r, s) -> (m+2-r, m+3-s)` fixing the module.
fn kac_flip(m: i64, (r, s): (i64, i64)) -> (i64, i64) {
    (m + 2 - r, m + 3 - s)
}

impl MinimalLabel {
    /// Build a label, canonicalizing under the Kac reflection.
    pub fn new(m: i64, r: i64, s: i64) -> Result<Self> {
        check_pair(m, (r, s))?;
        let flipped = kac_flip(m, (r, s));
        let (r, s) = if flipped < (r, s) { flipped } else { (r, s) };
        Ok(MinimalLabel { m, r, s })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn pair(&self) -> (i64, i64) {
        (self.r, self.s)
    }

    pub fn weight(&self) -> Rational {
        weight_rs(self.m, self.r, self.s)
    }

    pub fn is_vacuum(&self) -> bool {
        (self.r, self.s) == (1, 1)
    }
}

impl std::fmt::Display for MinimalLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// Central charge `c_m = 1 - 6/((m+2)(m+3))`, always in (0, 1).
pub fn central_charge(m: i64) -> Result<Rational> {
    check_m(m)?;
    Ok(Rational::one() - &rat(6, (m + 2) * (m + 3)))
}

fn weight_rs(m: i64, r: i64, s: i64) -> Rational {
    let p = m + 2;
    let pp = m + 3;
    let num = (r * pp - s * p).pow(2) - 1;
    rat(num, 4 * p * pp)
}

/// Conformal weight `h_{r,s}` of a (canonicalized) label.
pub fn conformal_weight(label: &MinimalLabel) -> Rational {
    label.weight()
}

/// All canonical labels of the series-`m` model, sorted; there are
/// `(m+1)(m+2)/2` of them.
pub fn enumerate_labels(m: i64) -> Result<Vec<MinimalLabel>> {
    check_m(m)?;
    let mut out = Vec::new();
    for r in 1..=m + 1 {
        for s in 1..=m + 2 {
            if kac_flip(m, (r, s)) >= (r, s) {
                out.push(MinimalLabel { m, r, s });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The admissible-triple criterion on three explicit representatives,
/// ordered (source, source, output).
///
/// Conditions, all required: each pair in range; `r + r' + r'' <= 2m+3` and
/// odd; `s + s' + s'' <= 2m+5` and odd; strict triangle inequalities among
/// `(r, r', r'')` and among `(s, s', s'')`.
pub fn is_admissible(
    m: i64,
    a: (i64, i64),
    b: (i64, i64),
    c: (i64, i64),
) -> Result<bool> {
    check_pair(m, a)?;
    check_pair(m, b)?;
    check_pair(m, c)?;
    let (r, s) = a;
    let (r1, s1) = b;
    let (r2, s2) = c;
    let rsum = r + r1 + r2;
    let ssum = s + s1 + s2;
    Ok(rsum <= 2 * m + 3
        && ssum <= 2 * m + 5
        && rsum % 2 == 1
        && ssum % 2 == 1
        && r < r1 + r2
        && r1 < r + r2
        && r2 < r + r1
        && s < s1 + s2
        && s1 < s + s2
        && s2 < s + s1)
}

/// Fusion dimension `N_{b,c}^a` (output listed first), always 0 or 1.
///
/// Equals 1 exactly when some choice of Kac representatives for the three
/// modules makes `(b, c, a)` an admissible triple; scanning representatives
/// makes the result independent of which representative each argument uses.
pub fn fusion_dim(m: i64, a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Result<u8> {
    check_pair(m, a)?;
    check_pair(m, b)?;
    check_pair(m, c)?;
    for fa in [a, kac_flip(m, a)] {
        for fb in [b, kac_flip(m, b)] {
            for fc in [c, kac_flip(m, c)] {
                if is_admissible(m, fb, fc, fa)? {
                    return Ok(1);
                }
            }
        }
    }
    Ok(0)
}

/// Fusion dimension on canonical labels.
pub fn fusion_dim_labels(a: &MinimalLabel, b: &MinimalLabel, c: &MinimalLabel) -> Result<u8> {
    if a.m != b.m || a.m != c.m {
        return Err(Error::BadIndex(format!(
            "fusion needs one model: got m = {}, {}, {}",
            a.m, b.m, c.m
        )));
    }
    fusion_dim(a.m, a.pair(), b.pair(), c.pair())
}

/// Vanishing of the s-sector fusion
/// `I(L(c_n, h_{2p+1, 2l1+1}); L(c_n, h_{2k+1, 1}), L(c_n, h_{2l+1, 2l2+1}))`
/// for `l1 != l2`; evaluates the generic fusion dimension rather than
/// special-casing, so the vanishing is *checked*, not assumed.
pub fn s_sector_fusion_vanishes(
    n: i64,
    k: i64,
    l: i64,
    p: i64,
    l1: i64,
    l2: i64,
) -> Result<bool> {
    check_m(n)?;
    for (name, v, hi) in [
        ("2k", 2 * k, n),
        ("2l", 2 * l, n),
        ("2p", 2 * p, n),
        ("2l1", 2 * l1, n + 1),
        ("2l2", 2 * l2, n + 1),
    ] {
        if v < 0 || v > hi {
            return Err(Error::BadIndex(format!(
                "{name} = {v} outside [0, {hi}] for n = {n}"
            )));
        }
    }
    let dim = fusion_dim(
        n,
        (2 * p + 1, 2 * l1 + 1),
        (2 * k + 1, 1),
        (2 * l + 1, 2 * l2 + 1),
    )?;
    Ok(dim == 0)
}

/// Fusion dimension of a tensor-product intertwiner: the product of the
/// per-factor dimensions.
pub fn tensor_fusion_dim(dims: &[u64]) -> u64 {
    dims.iter().product()
}

/// Character of `L(c_m, h_{r,s})` as a truncated series with offset
/// `h_{r,s}`: the alternating sum over the singular-vector lattice divided
/// by `phi(q)`.
///
/// With `p = m+2`, `p' = m+3`, `A = r p' - s p`, `B = r p' + s p`, the
/// numerator is `sum_{k in Z} (q^{p p' k^2 + k A} - q^{p p' k^2 + k B + r s})`;
/// every exponent is a non-negative integer, so the truncated series is
/// exact to the requested order.
pub fn minimal_character(label: &MinimalLabel, order: usize) -> QSeries {
    let (m, r, s) = (label.m, label.r, label.s);
    let p = m + 2;
    let pp = m + 3;
    let a = r * pp - s * p;
    let b = r * pp + s * p;
    let mut numerator = QSeries::zero(Rational::zero(), order);
    let mut add_at = |e: i64, sign: i64| {
        debug_assert!(e >= 0, "singular-vector exponent must be non-negative");
        if e <= order as i64 {
            let slot = numerator.coeff(e as usize) + &Rational::int(sign);
            numerator.set_coeff(e as usize, slot);
        }
    };
    let window = order as i64 + 2;
    for k in -window..=window {
        add_at(p * pp * k * k + k * a, 1);
        add_at(p * pp * k * k + k * b + r * s, -1);
    }
    numerator.mul(&euler_inverse(order)).shifted(&label.weight())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(m: i64, r: i64, s: i64) -> MinimalLabel {
        MinimalLabel::new(m, r, s).unwrap()
    }

    #[test]
    fn central_charges() {
        assert_eq!(central_charge(1).unwrap(), rat(1, 2));
        assert_eq!(central_charge(2).unwrap(), rat(7, 10));
        assert_eq!(central_charge(3).unwrap(), rat(4, 5));
        assert!(matches!(central_charge(0), Err(Error::BadIndex(_))));
        for m in 1..=30 {
            let c = central_charge(m).unwrap();
            assert!(c.is_positive() && c < Rational::one());
        }
    }

    #[test]
    fn conformal_weights_match_known_values() {
        assert_eq!(lab(1, 1, 1).weight(), Rational::zero());
        assert_eq!(lab(1, 2, 2).weight(), rat(1, 16));
        assert_eq!(lab(1, 2, 1).weight(), rat(1, 2));
        assert_eq!(lab(1, 1, 3).weight(), rat(1, 2));
        assert_eq!(lab(2, 3, 1).weight(), rat(3, 2));
        assert_eq!(lab(2, 2, 2).weight(), rat(3, 80));
        assert_eq!(lab(2, 2, 1).weight(), rat(7, 16));
        assert_eq!(lab(2, 1, 2).weight(), rat(1, 10));
        assert_eq!(lab(2, 1, 3).weight(), rat(3, 5));
        for m in 1..=8 {
            assert_eq!(lab(m, 1, 1).weight(), Rational::zero(), "vacuum weight");
        }
    }

    #[test]
    fn labels_canonicalize_under_kac_reflection() {
        // (2,1) and (1,3) are the same m=1 module; the smaller pair wins.
        assert_eq!(lab(1, 2, 1), lab(1, 1, 3));
        assert_eq!(lab(1, 2, 1).pair(), (1, 3));
        assert_eq!(lab(2, 3, 1).pair(), (1, 4));
        assert!(MinimalLabel::new(1, 3, 1).is_err());
        assert!(MinimalLabel::new(1, 1, 4).is_err());
        assert!(MinimalLabel::new(0, 1, 1).is_err());
    }

    #[test]
    fn weight_symmetry_and_injectivity_up_to_reflection() {
        for m in 1..=8 {
            let mut all = Vec::new();
            for r in 1..=m + 1 {
                for s in 1..=m + 2 {
                    let (fr, fs) = super::kac_flip(m, (r, s));
                    assert_eq!(
                        weight_rs(m, r, s),
                        weight_rs(m, fr, fs),
                        "weight symmetry fails at m={m} (r,s)=({r},{s})"
                    );
                    all.push(((r, s), weight_rs(m, r, s)));
                }
            }
            for (pq, h1) in &all {
                for (rs, h2) in &all {
                    if h1 == h2 {
                        assert!(
                            pq == rs || *pq == super::kac_flip(m, *rs),
                            "distinct modules share weight {h1} at m={m}: {pq:?} vs {rs:?}"
                        );
                    }
                }
            }
            // Maximal weight sits at (1, m+2) and its reflection (m+1, 1).
            let hmax = weight_rs(m, 1, m + 2);
            for ((r, s), h) in &all {
                if (*r, *s) != (1, m + 2) && (*r, *s) != (m + 1, 1) {
                    assert!(h < &hmax, "h_{{{r},{s}}} not below h_{{1,{}}}", m + 2);
                }
            }
        }
    }

    #[test]
    fn label_count_is_triangular() {
        for m in 1..=8 {
            let labels = enumerate_labels(m).unwrap();
            assert_eq!(labels.len() as i64, (m + 1) * (m + 2) / 2);
        }
    }

    #[test]
    fn admissibility_spot_checks() {
        assert!(is_admissible(1, (2, 2), (2, 2), (1, 1)).unwrap());
        assert!(!is_admissible(1, (2, 2), (2, 2), (2, 2)).unwrap());
        assert!(is_admissible(2, (1, 1), (1, 1), (1, 1)).unwrap());
        assert!(matches!(
            is_admissible(1, (3, 1), (1, 1), (1, 1)),
            Err(Error::BadIndex(_))
        ));
    }

    #[test]
    fn ising_fusion_dimensions() {
        // Output first: N(out; src, src). h labels: 0=(1,1), 1/2=(1,3), 1/16=(1,2).
        let zero = (1, 1);
        let half = (1, 3);
        let sixteenth = (1, 2);
        assert_eq!(fusion_dim(1, zero, half, half).unwrap(), 1);
        assert_eq!(fusion_dim(1, half, half, half).unwrap(), 0);
        assert_eq!(fusion_dim(1, sixteenth, half, half).unwrap(), 0);
        assert_eq!(fusion_dim(1, sixteenth, half, sixteenth).unwrap(), 1);
        assert_eq!(fusion_dim(1, zero, half, sixteenth).unwrap(), 0);
        assert_eq!(fusion_dim(1, half, half, sixteenth).unwrap(), 0);
        assert_eq!(fusion_dim(1, zero, sixteenth, sixteenth).unwrap(), 1);
        assert_eq!(fusion_dim(1, half, sixteenth, sixteenth).unwrap(), 1);
        assert_eq!(fusion_dim(1, sixteenth, sixteenth, sixteenth).unwrap(), 0);
    }

    #[test]
    fn fusion_is_representative_independent() {
        for m in 1..=3 {
            let reps = |pair: (i64, i64)| [pair, super::kac_flip(m, pair)];
            for a in enumerate_labels(m).unwrap() {
                for b in enumerate_labels(m).unwrap() {
                    for c in enumerate_labels(m).unwrap() {
                        let base = fusion_dim(m, a.pair(), b.pair(), c.pair()).unwrap();
                        for ra in reps(a.pair()) {
                            for rb in reps(b.pair()) {
                                for rc in reps(c.pair()) {
                                    assert_eq!(
                                        fusion_dim(m, ra, rb, rc).unwrap(),
                                        base,
                                        "representative dependence at m={m} {ra:?} {rb:?} {rc:?}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fusion_source_symmetry_and_vacuum_identity() {
        for m in 1..=3 {
            let labels = enumerate_labels(m).unwrap();
            for a in &labels {
                for b in &labels {
                    for c in &labels {
                        assert_eq!(
                            fusion_dim_labels(a, b, c).unwrap(),
                            fusion_dim_labels(a, c, b).unwrap(),
                            "source symmetry fails at m={m}"
                        );
                    }
                    let with_vacuum =
                        fusion_dim(m, a.pair(), (1, 1), b.pair()).unwrap();
                    assert_eq!(
                        with_vacuum,
                        u8::from(a == b),
                        "vacuum fusion must be the identity at m={m}: {a} x vac -> {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn s_sector_vanishing_inside_parameter_box() {
        assert!(s_sector_fusion_vanishes(2, 0, 0, 0, 0, 1).unwrap());
        for n in 1..=4i64 {
            for k in 0..=n / 2 {
                for l in 0..=n / 2 {
                    for p in 0..=n / 2 {
                        for l1 in 0..=(n + 1) / 2 {
                            for l2 in 0..=(n + 1) / 2 {
                                if l1 == l2 {
                                    continue;
                                }
                                assert!(
                                    s_sector_fusion_vanishes(n, k, l, p, l1, l2).unwrap(),
                                    "fusion fails to vanish: n={n} k={k} l={l} p={p} l1={l1} l2={l2}"
                                );
                            }
                        }
                    }
                }
            }
        }
        assert!(matches!(
            s_sector_fusion_vanishes(2, 2, 0, 0, 0, 1),
            Err(Error::BadIndex(_))
        ));
    }

    #[test]
    fn tensor_fusion_multiplies() {
        assert_eq!(tensor_fusion_dim(&[1, 1]), 1);
        assert_eq!(tensor_fusion_dim(&[1, 0]), 0);
        assert_eq!(tensor_fusion_dim(&[1; 7]), 1);
        assert_eq!(tensor_fusion_dim(&[]), 1);
    }

    /// Brute-force count of partitions of `n` into parts >= 2: the graded
    /// dimension of a generic-weight vacuum Verma quotient below the first
    /// nontrivial singular vector.
    fn partitions_min_part(n: i64, min: i64) -> i64 {
        if n == 0 {
            return 1;
        }
        if n < min {
            return 0;
        }
        (min..=n).map(|p| partitions_min_part(n - p, p)).sum()
    }

    #[test]
    fn ising_vacuum_character() {
        let ch = minimal_character(&lab(1, 1, 1), 6);
        assert_eq!(ch.offset(), &Rational::zero());
        let want = [1, 0, 1, 1, 2, 2, 3];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(ch.coeff(i), &Rational::int(*w), "L(1/2,0) dim at level {i}");
        }
    }

    #[test]
    fn ising_sixteenth_character_matches_odd_fermion_product() {
        // Graded dimensions of L(1/2, 1/16) are the coefficients of
        // prod_{n>=1} (1 + q^n): partitions into distinct parts.
        let order = 14;
        let ch = minimal_character(&lab(1, 2, 2), order);
        assert_eq!(ch.offset(), &rat(1, 16));
        let mut distinct = QSeries::one(order);
        for n in 1..=order {
            let mut f = QSeries::zero(Rational::zero(), order);
            f.set_coeff(0, Rational::one());
            f.set_coeff(n, Rational::one());
            distinct = distinct.mul(&f);
        }
        for i in 0..=order {
            assert_eq!(ch.coeff(i), distinct.coeff(i), "1/16 sector at level {i}");
        }
    }

    #[test]
    fn tricritical_vacuum_counts_partitions_into_parts_ge_2() {
        // For L(7/10, 0) the second singular vector sits at level 12, so up
        // to level 11 the graded dimension is the generic-vacuum count.
        let ch = minimal_character(&lab(2, 1, 1), 11);
        for i in 0..=11 {
            assert_eq!(
                ch.coeff(i),
                &Rational::int(partitions_min_part(i as i64, 2)),
                "L(7/10,0) dim at level {i}"
            );
        }
    }

    #[test]
    fn characters_have_nonnegative_integer_coefficients() {
        for m in 1..=4 {
            for label in enumerate_labels(m).unwrap() {
                let ch = minimal_character(&label, 16);
                assert_eq!(ch.offset(), &label.weight());
                assert_eq!(ch.coeff(0), &Rational::one(), "leading coefficient of {label}");
                for (i, c) in ch.coeffs().iter().enumerate() {
                    assert!(
                        c.is_integer() && !c.is_negative(),
                        "bad coefficient {c} at level {i} of ch {label} (m={m})"
                    );
                }
            }
        }
    }
}
