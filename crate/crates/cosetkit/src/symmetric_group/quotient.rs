//! The quotient of the group algebra by the two-sided ideal `J^N`, realized
//! through its two-row matrix blocks.
//!
//! Rather than row-reducing the regular representation (dimension `N!^2`),
//! the quotient is certified by an evaluation map: send the group algebra
//! into the direct sum of endomorphism algebras of the two-row Specht
//! modules, check that every ideal generator maps to zero, and check that
//! the map is onto (rank equals the sum of squared block dimensions). The
//! two facts together identify the quotient with the block algebra.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::rational::Rational;
use crate::symmetric_group::algebra::{AlgebraElement, PermIndex};
use crate::symmetric_group::partition::Partition;
use crate::symmetric_group::perm::Perm;
use crate::symmetric_group::specht::SpechtModule;

/// One matrix block of the semisimple quotient.
#[derive(Clone, Serialize)]
pub struct SemisimpleBlock {
    pub shape: Partition,
    pub dim: u64,
}

/// Certified block structure of the quotient algebra.
#[derive(Clone, Serialize)]
pub struct SemisimpleReport {
    pub n: usize,
    pub blocks: Vec<SemisimpleBlock>,
    pub total_dim: u64,
}

/// Build and certify the two-row block decomposition for `1 <= n <= 7`.
///
/// Errors with `TheoryViolation` if an ideal generator fails to annihilate
/// every block or if the evaluation map fails to be onto.
pub fn build_tn(n: usize) -> Result<SemisimpleReport> {
    if n < 1 {
        return Err(Error::BadIndex("need n >= 1".into()));
    }
    if n > 7 {
        return Err(Error::SizeLimit(format!(
            "build_tn supports n <= 7, got {n}"
        )));
    }
    let shapes = Partition::two_row_shapes(n);
    let modules: Vec<SpechtModule> = shapes
        .iter()
        .map(SpechtModule::new)
        .collect::<Result<_>>()?;

    for (gi, g) in crate::symmetric_group::algebra::j_ideal_generators(n)
        .iter()
        .enumerate()
    {
        for m in &modules {
            if !m.matrix_of_element(g).is_zero() {
                return Err(Error::TheoryViolation(format!(
                    "ideal generator {gi} acts nonzero on the two-row block {}",
                    m.shape()
                )));
            }
        }
    }

    let target: usize = modules.iter().map(|m| m.dim() * m.dim()).sum();
    let mut space = RowSpace::new(target);
    'outer: for p in Perm::all(n) {
        let mut row = Vec::with_capacity(target);
        for m in &modules {
            let mat = m.matrix_of_perm(&p);
            for r in 0..m.dim() {
                row.extend(mat.row(r).iter().cloned());
            }
        }
        space.insert(row);
        if space.rank() == target {
            break 'outer;
        }
    }
    if space.rank() < target {
        return Err(Error::TheoryViolation(format!(
            "evaluation map has rank {} < {target}: quotient is smaller than the block algebra",
            space.rank()
        )));
    }

    let blocks = modules
        .iter()
        .map(|m| SemisimpleBlock {
            shape: m.shape().clone(),
            dim: m.dim() as u64,
        })
        .collect();
    Ok(SemisimpleReport {
        n,
        blocks,
        total_dim: target as u64,
    })
}

/// The linear span of a two-sided ideal given by generators, closed under
/// left and right multiplication; supports exact membership tests.
pub struct IdealSpan {
    index: PermIndex,
    space: RowSpace,
}

impl IdealSpan {
    /// Close the generator span under the group action. Guarded to `n <= 6`
    /// because the ambient dimension is `n!`.
    pub fn new(n: usize, generators: &[AlgebraElement]) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadIndex("need n >= 1".into()));
        }
        if n > 6 {
            return Err(Error::SizeLimit(format!(
                "ideal span supports n <= 6, got {n}"
            )));
        }
        for g in generators {
            if g.degree() != n {
                return Err(Error::BadIndex(format!(
                    "generator degree {} does not match n = {n}",
                    g.degree()
                )));
            }
        }
        let index = PermIndex::new(n);
        let order = index.len();
        // Index maps for multiplication by each adjacent transposition.
        let mut left_maps = Vec::new();
        let mut right_maps = Vec::new();
        for k in 0..n.saturating_sub(1) {
            let s = Perm::adjacent(n, k);
            let mut left = vec![0usize; order];
            let mut right = vec![0usize; order];
            for (i, p) in index.perms().iter().enumerate() {
                left[i] = index.index_of(&s.compose(p));
                right[i] = index.index_of(&p.compose(&s));
            }
            left_maps.push(left);
            right_maps.push(right);
        }

        let mut space = RowSpace::new(order);
        let mut queue: VecDeque<Vec<Rational>> = VecDeque::new();
        for g in generators {
            let v = g.to_dense(&index);
            if space.insert(v.clone()) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for maps in [&left_maps, &right_maps] {
                for map in maps {
                    let mut w = vec![Rational::zero(); order];
                    for (i, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            w[map[i]] = c.clone();
                        }
                    }
                    if space.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(IdealSpan { index, space })
    }

    /// Dimension of the ideal as a linear subspace.
    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.space.contains(&x.to_dense(&self.index))
    }
}

/// Exact membership of `x` in the two-sided ideal generated by `generators`.
pub fn two_sided_ideal_membership(
    x: &AlgebraElement,
    generators: &[AlgebraElement],
) -> Result<bool> {
    let span = IdealSpan::new(x.degree(), generators)?;
    Ok(span.contains(x))
}
