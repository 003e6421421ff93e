use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported neuron count.
pub const MAX_NEURONS: usize = 64;

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the 1-based neuron indices set in `mask`, ascending.
pub fn neurons(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        }
    })
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_NEURONS).contains(&n) {
        Ok(())
    } else {
        Err(Error::NeuronCount(n))
    }
}

/// A subset of `[n]`, stored as a bit mask where neuron `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Codeword {
    n: u8,
    bits: u64,
}

impl Codeword {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        check_n(n)?;
        if bits & !full_mask(n) != 0 {
            let index = 64 - bits.leading_zeros() as usize;
            return Err(Error::NeuronIndex { index, max: n });
        }
        Ok(Self { n: n as u8, bits })
    }

    /// Caller guarantees `1 <= n <= 64` and that `bits` fits in `n` bits.
    pub(crate) fn from_raw(n: usize, bits: u64) -> Self {
        debug_assert!(check_n(n).is_ok() && bits & !full_mask(n) == 0);
        Self { n: n as u8, bits }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn from_neurons<I: IntoIterator<Item = usize>>(n: usize, neurons: I) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u64;
        for i in neurons {
            if i == 0 || i > n {
                return Err(Error::NeuronIndex { index: i, max: n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Self { n: n as u8, bits })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, neuron: usize) -> bool {
        neuron >= 1 && neuron <= self.n() && self.bits >> (neuron - 1) & 1 == 1
    }

    pub fn is_subset(&self, other: &Codeword) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_strict_subset(&self, other: &Codeword) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    pub fn neurons(&self) -> Vec<usize> {
        neurons(self.bits).collect()
    }
}

/// Display order: cardinality first, then numeric mask.
impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.bits.count_ones(), self.bits).cmp(&(
            other.n,
            other.bits.count_ones(),
            other.bits,
        ))
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in neurons(self.bits).enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A nonempty set of distinct codewords on a common neuron count.
///
/// Words are kept sorted by (cardinality, mask) and deduplicated, so two
/// codes compare equal exactly when they hold the same set of codewords.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    words: Vec<Codeword>,
}

impl Code {
    pub fn from_masks<I: IntoIterator<Item = u64>>(n: usize, masks: I) -> Result<Self> {
        check_n(n)?;
        let words = masks
            .into_iter()
            .map(|m| Codeword::new(n, m))
            .collect::<Result<Vec<_>>>()?;
        Self::from_words(n, words)
    }

    pub fn from_words<I: IntoIterator<Item = Codeword>>(n: usize, words: I) -> Result<Self> {
        check_n(n)?;
        let mut words: Vec<Codeword> = words.into_iter().collect();
        if let Some(w) = words.iter().find(|w| w.n() != n) {
            return Err(Error::NeuronCountMismatch {
                expected: n,
                found: w.n(),
            });
        }
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        words.sort();
        words.dedup();
        Ok(Self { n, words })
    }

    /// Builds a code from lists of 1-based neuron indices.
    pub fn from_lists<I, J>(n: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let words = lists
            .into_iter()
            .map(|l| Codeword::from_neurons(n, l))
            .collect::<Result<Vec<_>>>()?;
        Self::from_words(n, words)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false: codes are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().map(|w| w.bits())
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.words.iter().any(|w| w.bits() == mask)
    }

    pub fn index_of(&self, w: &Codeword) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    pub fn codeword(&self, mask: u64) -> Result<Codeword> {
        Codeword::new(self.n, mask)
    }

    /// Every pair of codewords is comparable under inclusion.
    pub fn is_complete(&self) -> bool {
        self.first_incomparable_pair().is_none()
    }

    /// Code text that parses back to this code, with an `n=` header when
    /// the top neurons are silent.
    pub fn to_text(&self) -> String {
        let used = self.words.iter().fold(0u64, |acc, w| acc | w.bits());
        let top = 64 - used.leading_zeros() as usize;
        if top == self.n {
            self.to_string()
        } else {
            format!("n={};{self}", self.n)
        }
    }

    pub(crate) fn first_incomparable_pair(&self) -> Option<(Codeword, Codeword)> {
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                if !a.is_subset(b) && !b.is_subset(a) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.words.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {})", self.n, self)
    }
}

/// JSON shape `{"n": 3, "words": [[], [1, 2]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeJson {
    pub n: usize,
    pub words: Vec<Vec<usize>>,
}

impl From<&Code> for CodeJson {
    fn from(c: &Code) -> Self {
        Self {
            n: c.n,
            words: c.words.iter().map(|w| w.neurons()).collect(),
        }
    }
}

impl TryFrom<CodeJson> for Code {
    type Error = Error;

    fn try_from(j: CodeJson) -> Result<Self> {
        Code::from_lists(j.n, j.words)
    }
}

impl Serialize for Code {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Code {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CodeJson::deserialize(d)?;
        Code::try_from(j).map_err(serde::de::Error::custom)
    }
}
