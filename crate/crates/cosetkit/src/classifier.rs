//! Enumeration and labeling of the irreducible modules of the commutant
//! algebra: canonical labels, module types, lowest-weight eigenvalue tables,
//! and lowest conformal weights, cross-checked against an independent
//! lattice minimization oracle.
//!
//! # Labels
//!
//! A module label is a pair `(delta', k)` with `delta'` a bit-vector of
//! length `n+1` and `0 <= k <= n+1`, subject to `|delta'| == k (mod 2)`.
//! Labels come in isomorphic pairs under the free involution
//! `(delta', k) <-> (delta' + 1^{n+1}, n+1-k)`; the canonical representative
//! is the one the classification presents directly: for `n` even the label
//! with `k` even, for `n` odd the label whose trailing extension bit is zero
//! (equivalently, the weight of the first `n` bits is congruent to `k`
//! mod 2).

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::symmetric_group::Partition;

/// Label of an irreducible module of the commutant at rank `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleLabel {
    n: usize,
    delta_prime: Vec<u8>,
    k: usize,
}

impl ModuleLabel {
    /// Validate and build a label. Requires `n >= 1`, `delta'` of length
    /// `n+1` over {0,1}, `0 <= k <= n+1`, and the parity constraint
    /// `|delta'| == k (mod 2)`.
    pub fn new(n: usize, delta_prime: &[u8], k: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadLabel(format!("need n >= 1, got {n}")));
        }
        if delta_prime.len() != n + 1 {
            return Err(Error::BadLabel(format!(
                "delta' must have length {}, got {}",
                n + 1,
                delta_prime.len()
            )));
        }
        if delta_prime.iter().any(|&b| b > 1) {
            return Err(Error::BadLabel("delta' entries must be bits".into()));
        }
        if k > n + 1 {
            return Err(Error::BadLabel(format!(
                "need 0 <= k <= {}, got {k}",
                n + 1
            )));
        }
        let weight: usize = delta_prime.iter().map(|&b| b as usize).sum();
        if weight % 2 != k % 2 {
            return Err(Error::BadLabel(format!(
                "parity violation: |delta'| = {weight} vs k = {k}"
            )));
        }
        Ok(ModuleLabel {
            n,
            delta_prime: delta_prime.to_vec(),
            k,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta_prime(&self) -> &[u8] {
        &self.delta_prime
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Indices `i` with `delta'_i = 1`.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.n).filter(|&i| self.delta_prime[i] == 1).collect()
    }

    /// The isomorphic partner `(delta' + 1^{n+1}, n+1-k)`.
    pub fn partner(&self) -> ModuleLabel {
        ModuleLabel {
            n: self.n,
            delta_prime: self.delta_prime.iter().map(|&b| 1 - b).collect(),
            k: self.n + 1 - self.k,
        }
    }

    /// Whether this label is the canonical representative of its pair.
    pub fn is_canonical(&self) -> bool {
        if self.n % 2 == 0 {
            self.k % 2 == 0
        } else {
            self.delta_prime[self.n] == 0
        }
    }

    /// The canonical representative of this label's isomorphism class.
    pub fn canonicalize(&self) -> ModuleLabel {
        if self.is_canonical() {
            self.clone()
        } else {
            self.partner()
        }
    }

    /// The bits as a string, e.g. `"1100"`.
    pub fn delta_string(&self) -> String {
        self.delta_prime.iter().map(|b| (b'0' + b) as char).collect()
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{}({})", self.delta_string(), self.k)
    }
}

impl PartialOrd for ModuleLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ModuleLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.delta_prime, self.k, self.n).cmp(&(&other.delta_prime, other.k, other.n))
    }
}

impl Serialize for ModuleLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ModuleLabel", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("delta", &self.delta_string())?;
        s.serialize_field("k", &self.k)?;
        s.end()
    }
}

/// Canonicalizing constructor: validates `(delta', k)` and returns the
/// canonical representative of its isomorphism class.
pub fn canonical_label(n: usize, delta_prime: &[u8], k: usize) -> Result<ModuleLabel> {
    Ok(ModuleLabel::new(n, delta_prime, k)?.canonicalize())
}

/// All canonical labels at rank `n >= 2`, sorted lexicographically on
/// `(delta', k)`. The count is `2^{n-1} (n+2)`; the involution is checked
/// to be fixed-point-free and the canonicalization to be a bijection onto
/// the returned set.
pub fn enumerate_modules(n: usize) -> Result<Vec<ModuleLabel>> {
    if n < 2 {
        return Err(Error::BadIndex(format!("need n >= 2, got {n}")));
    }
    let mut canonical = std::collections::BTreeSet::new();
    let mut total_valid = 0usize;
    for mask in 0u64..(1 << (n + 1)) {
        let bits: Vec<u8> = (0..=n).map(|i| ((mask >> i) & 1) as u8).collect();
        for k in 0..=n + 1 {
            let Ok(label) = ModuleLabel::new(n, &bits, k) else {
                continue;
            };
            total_valid += 1;
            if label.partner() == label {
                return Err(Error::TheoryViolation(format!(
                    "label {label} is a fixed point of the involution"
                )));
            }
            if label.is_canonical() == label.partner().is_canonical() {
                return Err(Error::TheoryViolation(format!(
                    "label {label} and its partner are not distinguished canonically"
                )));
            }
            if label.is_canonical() && !canonical.insert(label.clone()) {
                return Err(Error::TheoryViolation(format!(
                    "duplicate canonical label {label}"
                )));
            }
        }
    }
    let expected = (1usize << (n - 1)) * (n + 2);
    if canonical.len() != expected || total_valid != 2 * expected {
        return Err(Error::TheoryViolation(format!(
            "expected {expected} canonical labels at n = {n}, found {} \
             (of {total_valid} valid pairs)",
            canonical.len()
        )));
    }
    Ok(canonical.into_iter().collect())
}

/// Module type: type I when the support is empty or full (every pair
/// eigenvalue satisfies the quadratic), type II otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleType {
    TypeI,
    TypeII,
}

impl fmt::Display for ModuleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleType::TypeI => write!(f, "I"),
            ModuleType::TypeII => write!(f, "II"),
        }
    }
}

impl Serialize for ModuleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

pub fn type_of(label: &ModuleLabel) -> ModuleType {
    let support_size = label.support().len();
    if support_size == 0 || support_size == label.n() + 1 {
        ModuleType::TypeI
    } else {
        ModuleType::TypeII
    }
}

/// One entry of a lowest-weight eigenvalue table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TableEntry {
    Scalar(Rational),
    /// The pair acts through the two-row Specht module on `block`.
    Specht {
        block: Vec<usize>,
        partition: Partition,
    },
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableEntry::Scalar(r) => write!(f, "{r}"),
            TableEntry::Specht { partition, .. } => {
                write!(f, "specht(")?;
                for (i, p) in partition.parts().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The action of every `w^{ij}` on the lowest-weight space of a module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenvalueTable {
    n: usize,
    support: Vec<usize>,
    entries: BTreeMap<(usize, usize), TableEntry>,
}

impl EigenvalueTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&TableEntry> {
        self.entries.get(&(i.min(j), i.max(j)))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &TableEntry)> {
        self.entries.iter()
    }

    /// Number of cross pairs (scalar 1/16 entries).
    pub fn cross_pairs(&self) -> usize {
        let sixteenth = rat(1, 16);
        self.entries
            .values()
            .filter(|e| matches!(e, TableEntry::Scalar(s) if *s == sixteenth))
            .count()
    }
}

/// The block designated to carry the Specht action, with its two-row
/// partition: the support when `k` is below the support size, the
/// complement otherwise, with `t = |k - N| / 2` boxes in the second row.
pub fn specht_block_data(label: &ModuleLabel) -> (Vec<usize>, Partition) {
    let support = label.support();
    let n_sup = support.len();
    let k = label.k();
    let (block, t) = if k < n_sup {
        (support, (n_sup - k) / 2)
    } else {
        let complement: Vec<usize> = (0..=label.n())
            .filter(|&i| label.delta_prime()[i] == 0)
            .collect();
        (complement, (k - n_sup) / 2)
    };
    let m = block.len();
    let partition = if m == 0 {
        Partition::empty()
    } else if t == 0 {
        Partition::new(vec![m]).expect("single row is a valid partition")
    } else {
        Partition::new(vec![m - t, t]).expect("two-row shape is valid: t <= m/2")
    };
    (block, partition)
}

/// The lowest-weight eigenvalue table of a module: cross pairs are 1/16,
/// pairs inside the non-designated block are 0, and pairs inside the
/// designated block act through the two-row Specht module (recorded as a
/// forced scalar when that module is one-dimensional: 0 for a single row,
/// 1/2 for a single column of two boxes).
pub fn eigenvalue_table(label: &ModuleLabel) -> EigenvalueTable {
    let n = label.n();
    let support = label.support();
    let in_support: Vec<bool> = (0..=n).map(|i| label.delta_prime()[i] == 1).collect();
    let (block, partition) = specht_block_data(label);
    let in_block: Vec<bool> = {
        let mut v = vec![false; n + 1];
        for &i in &block {
            v[i] = true;
        }
        v
    };
    let forced_scalar = if partition.specht_dimension() == 1 {
        Some(if partition.len() == 2 {
            rat(1, 2)
        } else {
            Rational::zero()
        })
    } else {
        None
    };
    let mut entries = BTreeMap::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let entry = if in_support[i] != in_support[j] {
                TableEntry::Scalar(rat(1, 16))
            } else if in_block[i] && in_block[j] {
                match &forced_scalar {
                    Some(s) => TableEntry::Scalar(s.clone()),
                    None => TableEntry::Specht {
                        block: block.clone(),
                        partition: partition.clone(),
                    },
                }
            } else {
                TableEntry::Scalar(Rational::zero())
            };
            entries.insert((i, j), entry);
        }
    }
    EigenvalueTable {
        n,
        support,
        entries,
    }
}

/// Lowest conformal weight by the closed formula
/// `(4/(n+3)) [ cross/16 + (C(m,2) - content_sum(lambda)) / 4 ]`
/// with `(m, lambda)` the designated block's size and partition.
pub fn lowest_conformal_weight(label: &ModuleLabel) -> Rational {
    let n = label.n();
    let support_size = label.support().len();
    let cross = support_size * (n + 1 - support_size);
    let (block, partition) = specht_block_data(label);
    let m = block.len() as i64;
    let pairs_in_block = rat(m * (m - 1) / 2, 1);
    let block_term = &(&pairs_in_block - &partition.content_sum()) * &rat(1, 4);
    let cross_term = rat(cross as i64, 16);
    &rat(4, n as i64 + 3) * &(&cross_term + &block_term)
}

/// Independent oracle for the lowest conformal weight: exact minimization
/// of the lattice norm over vectors `v` with `v_i` in `delta'_i/2 + Z` and
/// sl2-weight `2 sum v_i = k`, inside a box `|v_i - delta'_i/2| <= B` that
/// doubles until the minimum is stable over two consecutive rounds; the
/// affine sector weight `k(k+2)/(4(n+3))` is then subtracted.
pub fn lattice_lowest_weight_oracle(label: &ModuleLabel) -> Result<Rational> {
    let mut bound: i64 = 3;
    let mut previous: Option<i64> = None;
    for _ in 0..8 {
        let current = lattice_box_min(label, bound);
        if let (Some(p), Some(c)) = (previous, current) {
            if p == c {
                let n = label.n() as i64;
                let k = label.k() as i64;
                let norm = rat(c, 4);
                return Ok(&norm - &rat(k * (k + 2), 4 * (n + 3)));
            }
        }
        previous = current;
        bound *= 2;
    }
    Err(Error::SearchExhausted(format!(
        "lattice minimum did not stabilize for {label}"
    )))
}

/// Minimum of `sum (2 v_i)^2` over the box, for sl2-weight exactly `k`.
/// Works in doubled coordinates `u_i = 2 v_i = delta'_i + 2 x_i`,
/// `|x_i| <= bound`, via dynamic programming on the partial sum.
fn lattice_box_min(label: &ModuleLabel, bound: i64) -> Option<i64> {
    let coords = label.n() as i64 + 1;
    let max_abs_sum = coords * (2 * bound + 1);
    let size = (2 * max_abs_sum + 1) as usize;
    let offset = max_abs_sum;
    let mut best: Vec<Option<i64>> = vec![None; size];
    best[offset as usize] = Some(0);
    for &bit in label.delta_prime() {
        let mut next: Vec<Option<i64>> = vec![None; size];
        for (slot, entry) in best.iter().enumerate() {
            let Some(norm) = entry else { continue };
            let partial = slot as i64 - offset;
            for x in -bound..=bound {
                let u = bit as i64 + 2 * x;
                let sum = partial + u;
                if sum.abs() > max_abs_sum {
                    continue;
                }
                let candidate = norm + u * u;
                let target = &mut next[(sum + offset) as usize];
                if target.is_none() || target.unwrap() > candidate {
                    *target = Some(candidate);
                }
            }
        }
        best = next;
    }
    let k = label.k() as i64;
    if k.abs() > max_abs_sum {
        return None;
    }
    best[(k + offset) as usize]
}

/// One row of the classification report.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleRow {
    pub label: ModuleLabel,
    pub module_type: ModuleType,
    pub lowest_weight: Rational,
    pub lowest_space_dim: u64,
    pub specht_block: Vec<usize>,
    pub specht_partition: Partition,
    pub cross_pairs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_weight: Option<Rational>,
}

/// The full classification table at rank `n`, one row per canonical label.
/// With `oracle` set, every row's closed-form lowest weight is cross-checked
/// against the lattice oracle; a mismatch is a `TheoryViolation`.
pub fn module_report(n: usize, oracle: bool) -> Result<Vec<ModuleRow>> {
    if n < 2 {
        return Err(Error::BadIndex(format!("need n >= 2, got {n}")));
    }
    if n > 12 {
        return Err(Error::SizeLimit(format!(
            "classification report capped at n = 12, got {n}"
        )));
    }
    if oracle && n > 8 {
        return Err(Error::SizeLimit(format!(
            "oracle cross-check capped at n = 8, got {n}"
        )));
    }
    let mut rows = Vec::new();
    for label in enumerate_modules(n)? {
        let table = eigenvalue_table(&label);
        let (block, partition) = specht_block_data(&label);
        let weight = lowest_conformal_weight(&label);
        let oracle_weight = if oracle {
            let value = lattice_lowest_weight_oracle(&label)?;
            if value != weight {
                return Err(Error::TheoryViolation(format!(
                    "lowest-weight mismatch for {label}: formula {weight}, oracle {value}"
                )));
            }
            Some(value)
        } else {
            None
        };
        rows.push(ModuleRow {
            module_type: type_of(&label),
            lowest_weight: weight,
            lowest_space_dim: partition.specht_dimension(),
            specht_block: block,
            specht_partition: partition,
            cross_pairs: table.cross_pairs(),
            oracle_weight,
            label,
        });
    }
    Ok(rows)
}
