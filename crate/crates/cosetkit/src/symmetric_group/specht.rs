//! Specht modules in Young's seminormal form, with exact rational matrices.
//!
//! The basis is the set of standard tableaux of the shape, in the fixed
//! order produced by `Tableau::standard_tableaux`. For the adjacent
//! transposition swapping entries `k` and `k+1` acting on the basis vector
//! of a standard tableau `T`:
//!
//! - same row:    `v_T -> v_T`
//! - same column: `v_T -> -v_T`
//! - otherwise, with `d = content_T(k+1) - content_T(k)` and `T' = T` with
//!   the two entries swapped (again standard):
//!   `v_T -> (1/d) v_T + v_{T'}` if `d > 0`, and
//!   `v_T -> (1/d) v_T + (1 - 1/d^2) v_{T'}` if `d < 0`.
//!
//! These matrices square to the identity and satisfy the braid and
//! commutation relations; both facts are checked by tests rather than
//! assumed.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rational::{rat, Rational};
use crate::symmetric_group::algebra::AlgebraElement;
use crate::symmetric_group::partition::{Partition, Tableau};
use crate::symmetric_group::perm::Perm;

/// A Specht module with precomputed generator matrices.
pub struct SpechtModule {
    shape: Partition,
    basis: Vec<Tableau>,
    generators: Vec<Mat>,
}

impl SpechtModule {
    /// Build the module for a shape of `n >= 1` boxes.
    pub fn new(shape: &Partition) -> Result<Self> {
        let n = shape.n();
        if n == 0 {
            return Err(Error::BadIndex("empty shape has no Specht module".into()));
        }
        let basis = Tableau::standard_tableaux(shape);
        let lookup: HashMap<Vec<Vec<usize>>, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.rows().to_vec(), i))
            .collect();
        let dim = basis.len();
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for k in 0..n.saturating_sub(1) {
            // Matrix of the transposition swapping entries k and k+1;
            // column j holds the image of basis vector j.
            let mut m = Mat::zero(dim, dim);
            for (j, t) in basis.iter().enumerate() {
                let (rk, ck) = t.position_of(k);
                let (rk1, ck1) = t.position_of(k + 1);
                if rk == rk1 {
                    m[(j, j)] = Rational::one();
                } else if ck == ck1 {
                    m[(j, j)] = Rational::int(-1);
                } else {
                    let d = ck1 as i64 - rk1 as i64 - (ck as i64 - rk as i64);
                    let swapped = t.swap_entries(k, k + 1);
                    debug_assert!(swapped.is_standard());
                    let jp = lookup[&swapped.rows().to_vec()];
                    m[(j, j)] = rat(1, d);
                    m[(jp, j)] = if d > 0 {
                        Rational::one()
                    } else {
                        Rational::one() - &rat(1, d * d)
                    };
                }
            }
            generators.push(m);
        }
        Ok(SpechtModule {
            shape: shape.clone(),
            basis,
            generators,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    /// Matrices of the adjacent transpositions, index `i` swapping entries
    /// `i` and `i+1`.
    pub fn generator_matrices(&self) -> &[Mat] {
        &self.generators
    }

    /// Matrix of an arbitrary permutation, through a word in adjacent
    /// transpositions.
    pub fn matrix_of_perm(&self, p: &Perm) -> Mat {
        let mut acc = Mat::identity(self.dim());
        for &i in &p.adjacent_word() {
            acc = acc.mul(&self.generators[i]);
        }
        acc
    }

    /// Matrix of a group-algebra element.
    pub fn matrix_of_element(&self, x: &AlgebraElement) -> Mat {
        let mut acc = Mat::zero(self.dim(), self.dim());
        for (p, c) in x.terms() {
            acc = acc.add(&self.matrix_of_perm(p).scale(c));
        }
        acc
    }

    /// Trace of a permutation's matrix (the character value on its class).
    pub fn character(&self, p: &Perm) -> Rational {
        self.matrix_of_perm(p).trace()
    }
}

/// Generator matrices for a shape, one per adjacent transposition.
pub fn specht_matrices(shape: &Partition) -> Result<Vec<Mat>> {
    Ok(SpechtModule::new(shape)?.generator_matrices().to_vec())
}
