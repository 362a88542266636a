//! Permutations of `{0, .., n-1}` in one-line notation.
//!
//! Composition is right-to-left: `(sigma.compose(&tau))(x) = sigma(tau(x))`.
//! Display uses 1-based cycle notation, `(1 2)(3 4)` style, matching the
//! usual convention for symmetric-group computations.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored by its images: `images[x]` is the image of `x`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Build from images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::BadIndex(format!(
                    "not a bijection on 0..{n}: images {images:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition `(a b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a < n && b < n && a != b, "transposition needs distinct points");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    /// The adjacent transposition swapping `i` and `i+1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        Perm::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self . other`, acting as `self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    /// Parity sign: +1 for even, -1 for odd.
    pub fn sign(&self) -> i64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Cycle type as a weakly decreasing list of cycle lengths (including
    /// fixed points).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// A word in adjacent transpositions whose composition (left to right,
    /// as `s_{w[0]} . s_{w[1]} . ...`) equals `self`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        let mut recorded = Vec::new();
        loop {
            let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) else {
                break;
            };
            v.swap(i, i + 1);
            recorded.push(i);
        }
        // identity = self . s_{r1} . s_{r2} . ..., hence
        // self = s_{rk} . ... . s_{r1}.
        recorded.reverse();
        recorded
    }

    /// All permutations of degree `n`, in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: current.clone(),
            });
            // Next lexicographic permutation.
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let n = self.degree();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", x + 1)?;
                x = self.images[x];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_to_left() {
        // sigma = (1 2), tau = (2 3) as 1-based cycles; check sigma.tau (1) = sigma(1) ... :
        // tau(0) = 0, sigma(0) = 1 so (sigma.tau)(0) = 1.
        let sigma = Perm::adjacent(3, 0);
        let tau = Perm::adjacent(3, 1);
        let st = sigma.compose(&tau);
        assert_eq!(st.apply(0), 1);
        assert_eq!(st.apply(1), 2);
        assert_eq!(st.apply(2), 0);
        // (1 2)(2 3) = (1 2 3) in cycle notation with this convention.
        assert_eq!(st.to_string(), "(1 2 3)");
    }

    #[test]
    fn inverse_and_sign() {
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(p.sign() * p.inverse().sign(), 1);
        }
        assert_eq!(Perm::adjacent(4, 1).sign(), -1);
        assert_eq!(Perm::identity(4).sign(), 1);
        let three_cycle = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(three_cycle.sign(), 1);
        assert_eq!(three_cycle.cycle_type(), vec![3]);
    }

    #[test]
    fn all_has_size_factorial_and_is_sorted() {
        let all = Perm::all(5);
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
    }

    #[test]
    fn adjacent_words_recompose() {
        for p in Perm::all(5) {
            let word = p.adjacent_word();
            let mut acc = Perm::identity(5);
            for &i in &word {
                acc = acc.compose(&Perm::adjacent(5, i));
            }
            assert_eq!(acc, p, "word decomposition failed for {p}");
            assert_eq!(p.sign(), if word.len() % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn degree_two_transpositions_reject_bad_input() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![1, 2, 3]).is_err());
    }
}
