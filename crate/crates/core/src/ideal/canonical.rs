//! Canonical forms of neural ideals.
//!
//! The neural ideal of a code `C` is generated by the indicators `ρ_v` of the
//! non-codewords. Its canonical form is the set of divisibility-minimal
//! pseudo-monomials in the ideal, computed here three ways:
//!
//! * [`canonical_form`]: fold the codewords in one at a time, multiplying the
//!   running set by the generators `x_j − c_j` of each point ideal and pruning
//!   zeros and multiples after every step.
//! * [`canonical_form_naive`]: expand the whole product of point ideals at
//!   once and prune at the end (exponential in the code size).
//! * [`canonical_form_oracle`]: enumerate all `3^n` pseudo-monomials and keep
//!   the minimal ones that vanish on every codeword.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::{parse_factors, MonomialJson, PseudoMonomial};
use crate::code::{check_n, full_mask, Code, Codeword};
use crate::error::{Error, Result};

/// Largest `n` accepted by the `3^n` oracle.
pub const ORACLE_MAX_NEURONS: usize = 12;

/// Largest number of raw products the naive expansion will materialize.
pub const NAIVE_MAX_PRODUCTS: u64 = 1 << 22;

/// A set of pseudo-monomials on `n` variables, kept in canonical order.
///
/// Values produced by [`canonical_form`] are always minimal (no element
/// divides another). Hand-built sets need not be; see [`Self::is_minimal`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    n: usize,
    elements: Vec<PseudoMonomial>,
}

impl CanonicalForm {
    pub fn from_elements<I: IntoIterator<Item = PseudoMonomial>>(
        n: usize,
        elements: I,
    ) -> Result<Self> {
        check_n(n)?;
        let mut v = Vec::new();
        for e in elements {
            if e.is_one() {
                return Err(Error::Parse(
                    "the constant 1 cannot appear in a canonical form".into(),
                ));
            }
            if (e.support() & !full_mask(n)) != 0 {
                return Err(Error::NeuronIndex {
                    index: 64 - e.support().leading_zeros() as usize,
                    max: n,
                });
            }
            v.push(e.widen(n));
        }
        v.sort();
        v.dedup();
        Ok(Self { n, elements: v })
    }

    /// Keeps only the divisibility-minimal elements.
    pub fn minimal<I: IntoIterator<Item = PseudoMonomial>>(n: usize, elements: I) -> Result<Self> {
        let mut cf = Self::from_elements(n, elements)?;
        let pairs = prune_multiples(cf.elements.iter().map(|e| (e.plus(), e.minus())).collect());
        cf.elements = pairs
            .into_iter()
            .map(|(p, m)| PseudoMonomial::from_raw(n, p, m))
            .collect();
        cf.elements.sort();
        Ok(cf)
    }

    pub(crate) fn from_pairs(n: usize, pairs: Vec<(u64, u64)>) -> Self {
        let mut elements: Vec<PseudoMonomial> = pairs
            .into_iter()
            .map(|(p, m)| PseudoMonomial::from_raw(n, p, m))
            .collect();
        elements.sort();
        elements.dedup();
        Self { n, elements }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[PseudoMonomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, f: &PseudoMonomial) -> bool {
        self.elements
            .iter()
            .any(|e| e.plus() == f.plus() && e.minus() == f.minus())
    }

    pub fn is_minimal(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, a)| {
            self.elements
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.divides(b))
        })
    }

    pub fn to_json(&self) -> CanonicalFormJson {
        CanonicalFormJson {
            n: Some(self.n),
            cf: self.elements.iter().map(|e| e.to_json()).collect(),
        }
    }

    /// Parses the JSON form, or a text list like `x1*x2, x2*(1-x4)`.
    /// Without an explicit `n` the largest index mentioned is used.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        let (n_json, pairs) = if trimmed.starts_with('{') && trimmed.contains('"') {
            let j: CanonicalFormJson = serde_json::from_str(trimmed)
                .map_err(|e| Error::Parse(format!("canonical form JSON: {e}")))?;
            let mut pairs = Vec::new();
            for m in &j.cf {
                let (p, q) = (mask_of(&m.plus)?, mask_of(&m.minus)?);
                pairs.push((p, q));
            }
            (j.n, pairs)
        } else {
            let body = trimmed.trim_start_matches('{').trim_end_matches('}');
            let pairs = body
                .split([',', ';', '\n'])
                .filter(|s| !s.trim().is_empty())
                .map(parse_factors)
                .collect::<Result<Vec<_>>>()?;
            (None, pairs)
        };
        let max_seen = pairs
            .iter()
            .map(|(p, m)| 64 - (p | m).leading_zeros() as usize)
            .max()
            .unwrap_or(0);
        let n = n.or(n_json).unwrap_or(max_seen.max(1));
        let elements = pairs
            .into_iter()
            .map(|(p, m)| PseudoMonomial::new(n, p, m))
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(n, elements)
    }
}

fn mask_of(v: &[usize]) -> Result<u64> {
    let mut m = 0u64;
    for &i in v {
        if i == 0 || i > 64 {
            return Err(Error::NeuronIndex { index: i, max: 64 });
        }
        m |= 1 << (i - 1);
    }
    Ok(m)
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CF(n={}, {self})", self.n)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalFormJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    pub cf: Vec<MonomialJson>,
}

/// Removes duplicates and every element that is a multiple of another.
pub(crate) fn prune_multiples(mut v: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
    v.sort_by_key(|&(p, m)| ((p | m).count_ones(), p, m));
    v.dedup();
    let mut kept: Vec<(u64, u64)> = Vec::with_capacity(v.len());
    for (p, m) in v {
        if !kept.iter().any(|&(kp, km)| kp & !p == 0 && km & !m == 0) {
            kept.push((p, m));
        }
    }
    kept
}

/// Generators of the point ideal of `c`: `x_j` for `j ∉ c`, `1 − x_j` for `j ∈ c`.
fn point_generators(n: usize, c: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..n).map(move |j| {
        let bit = 1u64 << j;
        if c & bit != 0 {
            (0, bit)
        } else {
            (bit, 0)
        }
    })
}

/// Incremental canonical form.
pub fn canonical_form(c: &Code) -> CanonicalForm {
    let n = c.n();
    let mut words = c.masks();
    let first = words.next().expect("codes are nonempty");
    let mut current: Vec<(u64, u64)> = point_generators(n, first).collect();
    for w in words {
        let mut next: Vec<(u64, u64)> = Vec::with_capacity(current.len() * 2);
        let mut seen: HashSet<(u64, u64)> = HashSet::new();
        for &(p, m) in &current {
            for (gp, gm) in point_generators(n, w) {
                let (np, nm) = (p | gp, m | gm);
                if np & nm == 0 && seen.insert((np, nm)) {
                    next.push((np, nm));
                }
            }
        }
        current = prune_multiples(next);
    }
    CanonicalForm::from_pairs(n, current)
}

/// Expands every product `∏_i (x_{τ(i)} − c_{iτ(i)})` over all `τ: [m] → [n]`,
/// then drops zeros and multiples.
pub fn canonical_form_naive(c: &Code) -> Result<CanonicalForm> {
    let n = c.n();
    let m = c.len();
    let total = (n as u64)
        .checked_pow(m as u32)
        .filter(|&t| t <= NAIVE_MAX_PRODUCTS);
    let Some(total) = total else {
        return Err(Error::TooLarge {
            what: "naive product expansion (codewords)",
            n: m,
            max: max_naive_words(n),
        });
    };
    let words: Vec<u64> = c.masks().collect();
    let mut products: HashSet<(u64, u64)> = HashSet::new();
    for idx in 0..total {
        let mut rest = idx;
        let (mut p, mut q) = (0u64, 0u64);
        for &w in &words {
            let j = (rest % n as u64) as usize;
            rest /= n as u64;
            let bit = 1u64 << j;
            if w & bit != 0 {
                q |= bit;
            } else {
                p |= bit;
            }
        }
        if p & q == 0 {
            products.insert((p, q));
        }
    }
    Ok(CanonicalForm::from_pairs(
        n,
        prune_multiples(products.into_iter().collect()),
    ))
}

fn max_naive_words(n: usize) -> usize {
    let mut m = 0usize;
    while (n as u64)
        .checked_pow(m as u32 + 1)
        .is_some_and(|t| t <= NAIVE_MAX_PRODUCTS)
    {
        m += 1;
    }
    m
}

/// Brute force over all `3^n − 1` nonconstant pseudo-monomials.
///
/// Pseudo-monomials that vanish on `C` form an up-set under divisibility, so
/// an element of the set is minimal iff dropping any single factor leaves it.
pub fn canonical_form_oracle(c: &Code) -> Result<CanonicalForm> {
    let n = c.n();
    if n > ORACLE_MAX_NEURONS {
        return Err(Error::TooLarge {
            what: "canonical form oracle",
            n,
            max: ORACLE_MAX_NEURONS,
        });
    }
    let words: Vec<u64> = c.masks().collect();
    let vanishes = |p: u64, m: u64| words.iter().all(|&w| !(p & !w == 0 && m & w == 0));
    let mut out = Vec::new();
    let total = 3u64.pow(n as u32);
    for code in 1..total {
        let (mut p, mut m, mut r) = (0u64, 0u64, code);
        for j in 0..n {
            match r % 3 {
                1 => p |= 1 << j,
                2 => m |= 1 << j,
                _ => {}
            }
            r /= 3;
        }
        if !vanishes(p, m) {
            continue;
        }
        let support = p | m;
        let minimal = (0..n).filter(|j| support >> j & 1 == 1).all(|j| {
            let bit = 1u64 << j;
            !vanishes(p & !bit, m & !bit)
        });
        if minimal {
            out.push((p, m));
        }
    }
    Ok(CanonicalForm::from_pairs(n, out))
}

/// Every element vanishes on `c`, and every non-codeword indicator is
/// divisible by some element. Enumerates `2^n` points, so `n <= 20`.
pub fn generates_neural_ideal(cf: &CanonicalForm, c: &Code) -> Result<bool> {
    let n = c.n();
    if n > 20 {
        return Err(Error::TooLarge {
            what: "neural ideal generation check",
            n,
            max: 20,
        });
    }
    let vanish = cf
        .elements()
        .iter()
        .all(|e| c.masks().all(|w| !e.eval_mask(w)));
    let covers = (0..1u64 << n).all(|v| {
        c.contains_mask(v) || {
            let rho = super::monomial::rho(&Codeword::from_raw(n, v));
            cf.elements().iter().any(|e| e.divides(&rho))
        }
    });
    Ok(vanish && covers)
}
