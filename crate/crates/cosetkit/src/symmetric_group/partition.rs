//! Integer partitions, Young diagrams, and tableaux.
//!
//! Boxes are addressed as `(row, col)`, both 0-based, rows left-aligned.
//! Tableau entries are `0..N-1` internally (display adds 1), so permutations
//! act on entries directly.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symmetric_group::perm::Perm;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadIndex(format!("zero part in partition {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadIndex(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// All box coordinates in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// `sum over boxes (col - row)`, the eigenvalue of the sum of all
    /// transpositions on the Specht module of this shape.
    pub fn content_sum(&self) -> Rational {
        let total: i64 = self
            .boxes()
            .map(|(r, c)| c as i64 - r as i64)
            .sum();
        Rational::int(total)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn specht_dimension(&self) -> u64 {
        if self.is_empty() {
            return 1;
        }
        let conj = self.conjugate();
        let mut numerator = 1u128;
        let mut denominator = 1u128;
        for (k, (r, c)) in self.boxes().enumerate() {
            numerator *= (k + 1) as u128;
            let hook = (self.parts[r] - c) + (conj.parts[c] - r) - 1;
            denominator *= hook as u128;
        }
        u64::try_from(numerator / denominator).expect("dimension fits in u64")
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                prefix.push(p);
                rec(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// The two-row (or one-row) shapes `(n-k, k)` for `0 <= k <= n/2`.
    pub fn two_row_shapes(n: usize) -> Vec<Partition> {
        (0..=n / 2)
            .map(|k| {
                if k == 0 {
                    Partition { parts: vec![n] }
                } else {
                    Partition {
                        parts: vec![n - k, k],
                    }
                }
            })
            .collect()
    }
}

macro_rules! fmt_parts {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(")?;
            for (i, p) in self.parts.iter().enumerate() {
                write!(f, "{}{}", if i > 0 { "," } else { "" }, p)?;
            }
            write!(f, ")")
        }
    };
}

impl fmt::Display for Partition {
    fmt_parts!();
}

impl fmt::Debug for Partition {
    fmt_parts!();
}

/// A filled Young diagram: entry `rows[r][c]` is the number in box `(r, c)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Build from rows, checking shape agreement and that the entries are a
    /// permutation of `0..N-1`.
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.n();
        if rows.len() != shape.len()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(row, &len)| row.len() != len)
        {
            return Err(Error::BadIndex(format!(
                "filling does not match shape {shape}: {rows:?}"
            )));
        }
        let mut seen = vec![false; n];
        for &e in rows.iter().flatten() {
            if e >= n || seen[e] {
                return Err(Error::BadIndex(format!(
                    "entries must be a permutation of 0..{n}: {rows:?}"
                )));
            }
            seen[e] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// The fixed tableau `t^lambda`: numbers placed top-down in each column,
    /// starting from the first column.
    pub fn canonical(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut next = 0;
        for (c, &height) in conj.parts().iter().enumerate() {
            for r in 0..height {
                rows[r][c] = next;
                next += 1;
            }
        }
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Box coordinates of an entry.
    pub fn position_of(&self, entry: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return (r, c);
            }
        }
        panic!("entry {entry} not in tableau");
    }

    /// Content `col - row` of the box holding `entry`.
    pub fn content_of(&self, entry: usize) -> i64 {
        let (r, c) = self.position_of(entry);
        c as i64 - r as i64
    }

    /// Relabel entries through a permutation: entry `e` becomes `sigma(e)`.
    pub fn relabel(&self, sigma: &Perm) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&e| sigma.apply(e)).collect())
                .collect(),
        }
    }

    /// Swap two entry values in place (relabel by a transposition).
    pub fn swap_entries(&self, a: usize, b: usize) -> Tableau {
        self.relabel(&Perm::transposition(self.n(), a, b))
    }

    /// Rows increase left to right and columns increase top to bottom.
    pub fn is_standard(&self) -> bool {
        let row_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let conj = self.shape.conjugate();
        let col_ok = conj.parts().iter().enumerate().all(|(c, &height)| {
            (1..height).all(|r| self.rows[r - 1][c] < self.rows[r][c])
        });
        row_ok && col_ok
    }

    /// All standard tableaux of a shape, in a fixed deterministic order
    /// (each number placed as high as possible first).
    pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
        let n = shape.n();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![usize::MAX; len]).collect();
        // Place 0..n-1 in increasing order; each next number goes into a box
        // whose left and upper neighbors are already filled.
        fn rec(
            shape: &Partition,
            rows: &mut Vec<Vec<usize>>,
            next: usize,
            n: usize,
            out: &mut Vec<Tableau>,
        ) {
            if next == n {
                out.push(Tableau {
                    shape: shape.clone(),
                    rows: rows.clone(),
                });
                return;
            }
            for r in 0..shape.len() {
                // First empty box in row r.
                let Some(c) = rows[r].iter().position(|&e| e == usize::MAX) else {
                    continue;
                };
                let left_ok = c == 0 || rows[r][c - 1] != usize::MAX;
                let up_ok = r == 0 || rows[r - 1][c] != usize::MAX;
                if left_ok && up_ok {
                    rows[r][c] = next;
                    rec(shape, rows, next + 1, n, out);
                    rows[r][c] = usize::MAX;
                }
            }
        }
        rec(shape, &mut rows, 0, n, &mut out);
        out
    }

    /// All `sigma` permuting entries within each row (the row group `R_t`).
    pub fn row_group(&self) -> Vec<Perm> {
        self.block_group(&self.rows)
    }

    /// All `sigma` permuting entries within each column (`C_t`).
    pub fn column_group(&self) -> Vec<Perm> {
        let conj = self.shape.conjugate();
        let cols: Vec<Vec<usize>> = conj
            .parts()
            .iter()
            .enumerate()
            .map(|(c, &height)| (0..height).map(|r| self.rows[r][c]).collect())
            .collect();
        self.block_group(&cols)
    }

    /// Entries of each column, top-down; the generating order used for
    /// Coxeter lengths inside the column group.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let conj = self.shape.conjugate();
        conj.parts()
            .iter()
            .enumerate()
            .map(|(c, &height)| (0..height).map(|r| self.rows[r][c]).collect())
            .collect()
    }

    /// All permutations moving entries only within the given blocks.
    fn block_group(&self, blocks: &[Vec<usize>]) -> Vec<Perm> {
        let n = self.n();
        let mut result = vec![Perm::identity(n)];
        for block in blocks {
            if block.len() <= 1 {
                continue;
            }
            let mut extended = Vec::with_capacity(result.len() * factorial(block.len()));
            for sub in Perm::all(block.len()) {
                // sigma maps block[i] -> block[sub(i)], fixes the rest.
                let mut images: Vec<usize> = (0..n).collect();
                for (i, &e) in block.iter().enumerate() {
                    images[e] = block[sub.apply(i)];
                }
                let sigma = Perm::from_images(images).expect("block permutation");
                for base in &result {
                    extended.push(sigma.compose(base));
                }
            }
            result = extended;
        }
        result.sort();
        result
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, e) in row.iter().enumerate() {
                write!(f, "{}{}", if j > 0 { " " } else { "" }, e + 1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation_and_conjugate() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert_eq!(part(&[4, 2, 1]).conjugate(), part(&[3, 2, 1, 1]));
        assert_eq!(part(&[4, 2, 1]).conjugate().conjugate(), part(&[4, 2, 1]));
        assert_eq!(part(&[3, 3]).n(), 6);
        assert_eq!(part(&[3, 3]).len(), 2);
    }

    #[test]
    fn hook_lengths_match_brute_force_counts() {
        for n in 1..=7 {
            for shape in Partition::all_of(n) {
                let brute = Tableau::standard_tableaux(&shape).len() as u64;
                assert_eq!(
                    shape.specht_dimension(),
                    brute,
                    "hook formula disagrees with enumeration for {shape}"
                );
            }
        }
        assert_eq!(part(&[3, 1]).specht_dimension(), 3);
        assert_eq!(part(&[2, 2]).specht_dimension(), 2);
        assert_eq!(part(&[5]).specht_dimension(), 1);
    }

    #[test]
    fn dimensions_square_sum_to_group_order() {
        // sum of (dim S^lambda)^2 over all partitions = N!.
        for n in 1..=8 {
            let total: u64 = Partition::all_of(n)
                .iter()
                .map(|s| s.specht_dimension().pow(2))
                .sum();
            assert_eq!(total, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn content_sums() {
        assert_eq!(part(&[4]).content_sum(), Rational::int(6));
        assert_eq!(part(&[2, 2]).content_sum(), Rational::int(0));
        assert_eq!(part(&[1, 1, 1]).content_sum(), Rational::int(-3));
        assert_eq!(part(&[3, 1]).content_sum(), Rational::int(2));
    }

    #[test]
    fn canonical_tableau_fills_columns_top_down() {
        // Shape (3,2): columns are (1,2), (3,4), (5) 1-based, i.e.
        //   1 3 5
        //   2 4
        let t = Tableau::canonical(&part(&[3, 2]));
        assert_eq!(t.rows(), &[vec![0, 2, 4], vec![1, 3]]);
        assert!(t.is_standard());
        assert_eq!(t.to_string(), "1 3 5 / 2 4");
        let u = Tableau::canonical(&part(&[2, 1, 1]));
        assert_eq!(u.rows(), &[vec![0, 3], vec![1], vec![2]]);
    }

    #[test]
    fn row_and_column_groups_have_the_right_size() {
        let t = Tableau::canonical(&part(&[3, 2]));
        assert_eq!(t.row_group().len(), 12); // 3! * 2!
        assert_eq!(t.column_group().len(), 4); // 2! * 2! * 1!
        for sigma in t.column_group() {
            // Column entries must map within their column.
            for col in t.columns() {
                for &e in &col {
                    assert!(col.contains(&sigma.apply(e)));
                }
            }
        }
    }

    #[test]
    fn standard_tableaux_are_standard_and_distinct() {
        let shape = part(&[3, 2, 1]);
        let all = Tableau::standard_tableaux(&shape);
        assert_eq!(all.len() as u64, shape.specht_dimension());
        for t in &all {
            assert!(t.is_standard());
        }
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn two_row_shapes_enumeration() {
        let shapes = Partition::two_row_shapes(6);
        assert_eq!(
            shapes,
            vec![part(&[6]), part(&[5, 1]), part(&[4, 2]), part(&[3, 3])]
        );
        assert_eq!(Partition::two_row_shapes(7).len(), 4);
    }

    #[test]
    fn contents_and_positions() {
        let t = Tableau::canonical(&part(&[2, 2]));
        // Filling: 1 3 / 2 4 (1-based display).
        assert_eq!(t.position_of(0), (0, 0));
        assert_eq!(t.position_of(1), (1, 0));
        assert_eq!(t.content_of(2), 1);
        assert_eq!(t.content_of(1), -1);
        let swapped = t.swap_entries(1, 2);
        assert_eq!(swapped.rows(), &[vec![0, 1], vec![2, 3]]);
    }
}
