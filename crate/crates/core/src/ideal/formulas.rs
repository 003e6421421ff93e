//! Closed-form canonical forms of the complete and cyclic families.

use super::canonical::CanonicalForm;
use crate::code::full_mask;
use crate::error::{Error, Result};

/// `{x_i(1 − x_j) : 1 ≤ j < i ≤ m − 1}` on `m − 1` neurons.
pub fn cf_cc_formula(m: usize) -> Result<CanonicalForm> {
    if m < 3 {
        return Err(Error::Family(format!(
            "cc canonical form needs m >= 3, got {m}"
        )));
    }
    let n = m - 1;
    let pairs = (1..=n)
        .flat_map(|i| (1..i).map(move |j| (1u64 << (i - 1), 1u64 << (j - 1))))
        .collect();
    Ok(CanonicalForm::from_pairs(n, pairs))
}

/// `∏(1 − x_i)` together with `x_i x_j` for every cyclically non-adjacent
/// pair; for `k = 3` there is no such pair and `x1x2x3` takes its place.
pub fn cf_cr_formula(k: usize) -> Result<CanonicalForm> {
    if k < 3 {
        return Err(Error::Family(format!(
            "cr canonical form needs k >= 3, got {k}"
        )));
    }
    let mut pairs = vec![(0u64, full_mask(k))];
    if k == 3 {
        pairs.push((0b111, 0));
    } else {
        for i in 1..=k {
            for j in 1..i {
                let gap = (i - j) % k;
                if gap != 1 && gap != k - 1 {
                    pairs.push((1u64 << (i - 1) | 1u64 << (j - 1), 0));
                }
            }
        }
    }
    Ok(CanonicalForm::from_pairs(k, pairs))
}
