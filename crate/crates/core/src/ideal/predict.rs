//! Canonical form of the image of an elementary code map, predicted from the
//! canonical form of the source without recomputing it from the image code.

use super::canonical::{prune_multiples, CanonicalForm};
use crate::code::{delete_from_mask, permute_mask, ElementaryMapSpec};
use crate::error::{Error, Result};

/// Transforms `cf` according to the rule for `spec`:
///
/// * permutation: relabel both factor sets by γ;
/// * trivial on / off neuron: add `1 − x_{n+1}` / `x_{n+1}`;
/// * duplicate `i`: add copies of the elements divisible by `x_i` or `1 − x_i`
///   with neuron `i` renamed to `n + 1`, plus `x_i(1 − x_{n+1})` and
///   `x_{n+1}(1 − x_i)`, then drop multiples;
/// * delete `i`: keep the elements not involving neuron `i`, with higher
///   neurons shifted down.
///
/// There is no rule for inclusion, which is rejected.
pub fn predict_cf(cf: &CanonicalForm, spec: &ElementaryMapSpec) -> Result<CanonicalForm> {
    if matches!(spec, ElementaryMapSpec::Inclusion(_)) {
        return Err(Error::UnsupportedPrediction);
    }
    let n = cf.n();
    spec.validate_for(n)?;
    let elems = cf.elements().iter().map(|e| (e.plus(), e.minus()));
    let pairs: Vec<(u64, u64)> = match spec {
        ElementaryMapSpec::Permutation(g) => elems
            .map(|(p, m)| (permute_mask(p, g), permute_mask(m, g)))
            .collect(),
        ElementaryMapSpec::AddTrivialOn => elems.chain([(0, 1u64 << n)]).collect(),
        ElementaryMapSpec::AddTrivialOff => elems.chain([(1u64 << n, 0)]).collect(),
        ElementaryMapSpec::Duplicate(i) => {
            let old = 1u64 << (i - 1);
            let new = 1u64 << n;
            let mut out: Vec<(u64, u64)> = elems.collect();
            let renamed: Vec<(u64, u64)> = out
                .iter()
                .filter_map(|&(p, m)| {
                    if p & old != 0 {
                        Some((p & !old | new, m))
                    } else if m & old != 0 {
                        Some((p, m & !old | new))
                    } else {
                        None
                    }
                })
                .collect();
            out.extend(renamed);
            out.push((old, new));
            out.push((new, old));
            prune_multiples(out)
        }
        ElementaryMapSpec::Delete(i) => {
            let bit = 1u64 << (i - 1);
            elems
                .filter(|&(p, m)| (p | m) & bit == 0)
                .map(|(p, m)| (delete_from_mask(p, *i), delete_from_mask(m, *i)))
                .collect()
        }
        ElementaryMapSpec::Inclusion(_) => unreachable!(),
    };
    Ok(CanonicalForm::from_pairs(spec.target_neurons(n), pairs))
}
