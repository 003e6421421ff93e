//! General relationship complex `GR(C)` and graph `G(C)`.
//!
//! A product of factors drawn from `{x_i, 1 − x_i : i ∈ σ}` is either zero or
//! a pseudo-monomial with support inside `σ`, and every such pseudo-monomial
//! arises this way. So `σ ∈ GR(C)` iff no element of the canonical form has
//! its support inside `σ`.

use super::CodeGraph;
use crate::code::{full_mask, maximal_masks, neurons, Codeword, SimplicialComplex};
use crate::ideal::CanonicalForm;

fn minimal_supports(cf: &CanonicalForm) -> Vec<u64> {
    let mut s: Vec<u64> = cf.elements().iter().map(|e| e.support()).collect();
    s.sort_by_key(|m| (m.count_ones(), *m));
    s.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in s {
        if !out.iter().any(|&k| k & !m == 0) {
            out.push(m);
        }
    }
    out
}

/// Maximal sets in `[n]` containing no element of `supports`.
fn maximal_free_sets(n: usize, supports: &[u64]) -> Vec<u64> {
    fn blocked(set: u64, supports: &[u64]) -> bool {
        supports.iter().any(|&s| s & !set == 0)
    }

    fn walk(j: usize, n: usize, set: u64, supports: &[u64], out: &mut Vec<u64>) {
        if j == n {
            let maximal = (0..n).all(|k| set >> k & 1 == 1 || blocked(set | 1 << k, supports));
            if maximal {
                out.push(set);
            }
            return;
        }
        let bit = 1u64 << j;
        if !blocked(set | bit, supports) {
            walk(j + 1, n, set | bit, supports, out);
        }
        // Leaving j out only pays off if some support through j can still be
        // completed by the current set and the neurons not yet decided.
        let reachable = set | (full_mask(n) & !full_mask(j));
        if supports
            .iter()
            .any(|&s| s & bit != 0 && s & !reachable == 0)
        {
            walk(j + 1, n, set, supports, out);
        }
    }

    let mut out = Vec::new();
    walk(0, n, 0, supports, &mut out);
    maximal_masks(&out)
}

/// `GR(C)` computed from supports, returned by facets.
pub fn gr_complex(cf: &CanonicalForm) -> SimplicialComplex {
    let n = cf.n();
    let supports = minimal_supports(cf);
    let facets: Vec<Codeword> = maximal_free_sets(n, &supports)
        .into_iter()
        .map(|m| Codeword::new(n, m).expect("facet lies in [n]"))
        .collect();
    SimplicialComplex::generated_by(n, &facets)
}

/// Membership in `GR(C)` straight from the definition: enumerate every
/// `Γ ⊆ {x_i, 1 − x_i : i ∈ σ}`, multiply, and look the product up in `cf`.
/// Exponential in `|σ|` (`4^|σ|` subsets); meant for checking small cases.
pub fn gr_complex_by_products(cf: &CanonicalForm, sigma: &Codeword) -> bool {
    let idx: Vec<usize> = neurons(sigma.bits()).collect();
    let factors: Vec<(u64, u64)> = idx
        .iter()
        .flat_map(|&i| [(1u64 << (i - 1), 0u64), (0u64, 1u64 << (i - 1))])
        .collect();
    assert!(factors.len() < 32, "Γ enumeration is limited to |σ| < 16");
    (0u64..1 << factors.len()).all(|gamma| {
        let (mut p, mut m) = (0u64, 0u64);
        for (k, &(fp, fm)) in factors.iter().enumerate() {
            if gamma >> k & 1 == 1 {
                p |= fp;
                m |= fm;
            }
        }
        // zero products and the constant 1 are never in a canonical form
        p & m != 0
            || (p | m) == 0
            || !cf
                .elements()
                .iter()
                .any(|e| e.plus() == p && e.minus() == m)
    })
}

/// `G(C)`: the 1-skeleton of `GR(C)` on neuron labels. Every 0-face is a
/// vertex, including isolated ones.
pub fn grg(cf: &CanonicalForm) -> CodeGraph<usize> {
    let supports = minimal_supports(cf);
    let free = |set: u64| !supports.iter().any(|&s| s & !set == 0);
    let vertices: Vec<usize> = (1..=cf.n()).filter(|&i| free(1u64 << (i - 1))).collect();
    CodeGraph::from_predicate(vertices, |&i, &j| free(1u64 << (i - 1) | 1u64 << (j - 1)))
}
