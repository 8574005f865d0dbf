//! Real roots fixed by simple reflections, and transitivity diagnostics.
//!
//! `w_i β = β` exactly when `β·A_(i) = 0`. A zero entry `a_ij = 0` makes
//! `w_i` fix `α_j`, so an incomplete Dynkin diagram rules out a simply
//! transitive action.

use crate::dynkin::{is_complete, Skeleton};
use crate::error::{Error, Result};
use crate::gcm::GeneralizedCartanMatrix;
use crate::orbits::generate_real_roots;
use crate::roots::{pairing, RootVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedRootReport {
    /// `(root, i)` with `w_i root = root`, sorted by root then index.
    pub pairs: Vec<(RootVector, usize)>,
    pub searched_bound: u64,
}

pub fn fixed_roots(a: &GeneralizedCartanMatrix, bound: u64) -> Result<FixedRootReport> {
    let set = generate_real_roots(a, bound)?;
    let pairs = set
        .roots
        .iter()
        .flat_map(|r| {
            (0..a.rank())
                .filter(|&i| pairing(a, r, i) == 0)
                .map(|i| (r.clone(), i))
        })
        .collect();
    Ok(FixedRootReport {
        pairs,
        searched_bound: bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitivityReport {
    /// The skeleton is connected, so W is transitive on real roots.
    pub transitive: bool,
    /// The Dynkin diagram is complete. Necessary for a simply transitive
    /// action, not sufficient.
    pub simply_transitive_possible: bool,
    /// Some generated root within the bound is fixed by a simple reflection.
    pub fixed_roots_found: bool,
}

pub fn transitivity_report(a: &GeneralizedCartanMatrix, bound: u64) -> Result<TransitivityReport> {
    Ok(TransitivityReport {
        transitive: Skeleton::new(a).is_connected(),
        simply_transitive_possible: is_complete(a).complete,
        fixed_roots_found: !fixed_roots(a, bound)?.pairs.is_empty(),
    })
}

/// Simple reflections fixing β, which must be a generated real root within
/// the bound. These generate only the simple part of the stabilizer.
pub fn stabilizer_generators(
    a: &GeneralizedCartanMatrix,
    beta: &RootVector,
    bound: u64,
) -> Result<Vec<usize>> {
    if beta.dim() != a.rank() {
        return Err(Error::DimensionMismatch {
            expected: a.rank(),
            got: beta.dim(),
        });
    }
    if !generate_real_roots(a, bound)?.contains(beta) {
        return Err(Error::NotARoot);
    }
    Ok((0..a.rank())
        .filter(|&i| pairing(a, beta, i) == 0)
        .collect())
}
