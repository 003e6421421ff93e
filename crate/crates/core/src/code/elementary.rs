//! The elementary code maps: permutation, adding a trivial neuron (always on
//! or always off), duplicating a neuron, deleting a neuron, and inclusion.

use std::fmt;

use super::codeword::{check_n, full_mask, neurons, Code, Codeword};
use super::morphism::CodeMap;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryMapSpec {
    /// `gamma[j - 1]` is the new label of neuron `j` (1-based).
    Permutation(Vec<usize>),
    AddTrivialOn,
    AddTrivialOff,
    /// Appends neuron `n + 1` as a copy of the given neuron.
    Duplicate(usize),
    /// Removes the given neuron; higher neurons shift down by one.
    Delete(usize),
    Inclusion(Code),
}

impl fmt::Display for ElementaryMapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Permutation(g) => {
                let s: Vec<String> = g.iter().map(|i| i.to_string()).collect();
                write!(f, "--permute \"{}\"", s.join(","))
            }
            Self::AddTrivialOn => f.write_str("--add-on"),
            Self::AddTrivialOff => f.write_str("--add-off"),
            Self::Duplicate(i) => write!(f, "--duplicate {i}"),
            Self::Delete(i) => write!(f, "--delete {i}"),
            Self::Inclusion(c) => write!(f, "--include \"{}\"", c.to_text()),
        }
    }
}

/// Relabels the neurons of `mask` by `gamma` (1-based images).
pub(crate) fn permute_mask(mask: u64, gamma: &[usize]) -> u64 {
    neurons(mask).fold(0u64, |acc, j| acc | 1 << (gamma[j - 1] - 1))
}

/// Drops neuron `i` and shifts the neurons above it down by one.
pub(crate) fn delete_from_mask(mask: u64, i: usize) -> u64 {
    let low = mask & full_mask(i - 1);
    let high = if i >= 64 { 0 } else { mask >> i };
    low | high << (i - 1)
}

impl ElementaryMapSpec {
    /// Neuron count after applying the map to a code on `n` neurons.
    pub fn target_neurons(&self, n: usize) -> usize {
        match self {
            Self::Permutation(_) | Self::Inclusion(_) => n,
            Self::AddTrivialOn | Self::AddTrivialOff | Self::Duplicate(_) => n + 1,
            Self::Delete(_) => n - 1,
        }
    }

    pub fn validate(&self, c: &Code) -> Result<()> {
        self.validate_for(c.n())?;
        if let Self::Inclusion(target) = self {
            if let Some(w) = c.words().iter().find(|w| !target.contains(w)) {
                return Err(Error::InvalidSpec(format!(
                    "inclusion target does not contain {w}"
                )));
            }
        }
        Ok(())
    }

    /// Checks everything that depends only on the neuron count.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        match self {
            Self::Permutation(g) => {
                if g.len() != n {
                    return Err(Error::InvalidSpec(format!(
                        "permutation has {} entries, code has {n} neurons",
                        g.len()
                    )));
                }
                let mut seen = vec![false; n];
                for &x in g {
                    if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                        return Err(Error::InvalidSpec(format!(
                            "{g:?} is not a bijection on [{n}]"
                        )));
                    }
                }
            }
            Self::AddTrivialOn | Self::AddTrivialOff => check_n(n + 1)?,
            Self::Duplicate(i) => {
                check_n(n + 1)?;
                if *i == 0 || *i > n {
                    return Err(Error::InvalidSpec(format!(
                        "duplicate index {i} outside 1..={n}"
                    )));
                }
            }
            Self::Delete(i) => {
                if *i == 0 || *i > n {
                    return Err(Error::InvalidSpec(format!(
                        "delete index {i} outside 1..={n}"
                    )));
                }
                if n == 1 {
                    return Err(Error::InvalidSpec("cannot delete the only neuron".into()));
                }
            }
            Self::Inclusion(target) => {
                if target.n() != n {
                    return Err(Error::InvalidSpec(format!(
                        "inclusion target has {} neurons, code has {n}",
                        target.n()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of one codeword mask; the spec must already be validated.
    pub(crate) fn map_mask(&self, n: usize, mask: u64) -> u64 {
        match self {
            Self::Permutation(g) => permute_mask(mask, g),
            Self::AddTrivialOn => mask | 1 << n,
            Self::AddTrivialOff | Self::Inclusion(_) => mask,
            Self::Duplicate(i) => mask | (mask >> (i - 1) & 1) << n,
            Self::Delete(i) => delete_from_mask(mask, *i),
        }
    }
}

/// Applies an elementary map. Returns the codomain code and the induced map;
/// for every variant except inclusion the codomain equals the image.
pub fn apply_elementary_map(c: &Code, spec: &ElementaryMapSpec) -> Result<(Code, CodeMap)> {
    spec.validate(c)?;
    let n = c.n();
    let m = spec.target_neurons(n);
    let images: Vec<Codeword> = c
        .masks()
        .map(|w| Codeword::from_raw(m, spec.map_mask(n, w)))
        .collect();
    let codomain = match spec {
        ElementaryMapSpec::Inclusion(target) => target.clone(),
        _ => Code::from_words(m, images.iter().copied())?,
    };
    let map = CodeMap::new(c.clone(), codomain.clone(), images)?;
    Ok((codomain, map))
}
