use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{check_n, full_mask, neurons, Codeword};
use crate::error::{Error, Result};

/// `∏_{i∈plus} x_i · ∏_{j∈minus} (1 − x_j)` over the Boolean ring on `n`
/// variables. `plus` and `minus` are disjoint; both empty is the constant 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PseudoMonomial {
    n: u8,
    plus: u64,
    minus: u64,
}

impl PseudoMonomial {
    pub fn new(n: usize, plus: u64, minus: u64) -> Result<Self> {
        check_n(n)?;
        let stray = (plus | minus) & !full_mask(n);
        if stray != 0 {
            return Err(Error::NeuronIndex {
                index: stray.trailing_zeros() as usize + 1,
                max: n,
            });
        }
        if plus & minus != 0 {
            return Err(Error::Parse(format!(
                "x{0} and (1-x{0}) in one pseudo-monomial",
                (plus & minus).trailing_zeros() + 1
            )));
        }
        Ok(Self {
            n: n as u8,
            plus,
            minus,
        })
    }

    pub(crate) fn from_raw(n: usize, plus: u64, minus: u64) -> Self {
        debug_assert!(plus & minus == 0 && (plus | minus) & !full_mask(n) == 0);
        Self {
            n: n as u8,
            plus,
            minus,
        }
    }

    pub fn from_neurons(n: usize, plus: &[usize], minus: &[usize]) -> Result<Self> {
        let p = Codeword::from_neurons(n, plus.iter().copied())?;
        let m = Codeword::from_neurons(n, minus.iter().copied())?;
        Self::new(n, p.bits(), m.bits())
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn plus(&self) -> u64 {
        self.plus
    }

    pub fn minus(&self) -> u64 {
        self.minus
    }

    /// Neurons that appear in either role.
    pub fn support(&self) -> u64 {
        self.plus | self.minus
    }

    pub fn degree(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_one(&self) -> bool {
        self.support() == 0
    }

    /// Value at the point with on-set `c`: 1 iff `plus ⊆ c` and `minus ∩ c = ∅`.
    pub fn eval(&self, c: &Codeword) -> bool {
        self.eval_mask(c.bits())
    }

    pub fn eval_mask(&self, c: u64) -> bool {
        self.plus & !c == 0 && self.minus & c == 0
    }

    /// `self | other`: both role sets are contained in the other's.
    pub fn divides(&self, other: &PseudoMonomial) -> bool {
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    /// Product under `x_i² = x_i` and `x_i(1 − x_i) = 0`; `None` is zero.
    pub fn multiply(&self, other: &PseudoMonomial) -> Option<PseudoMonomial> {
        let plus = self.plus | other.plus;
        let minus = self.minus | other.minus;
        (plus & minus == 0).then(|| Self {
            n: self.n.max(other.n),
            plus,
            minus,
        })
    }

    /// Same factors viewed on a different number of variables.
    pub(crate) fn widen(&self, n: usize) -> Self {
        Self::from_raw(n, self.plus, self.minus)
    }

    pub fn to_json(&self) -> MonomialJson {
        MonomialJson {
            plus: neurons(self.plus).collect(),
            minus: neurons(self.minus).collect(),
        }
    }
}

/// `ρ_v = ∏_{i∈v} x_i ∏_{j∉v} (1 − x_j)`, the indicator of the point `v`.
pub fn rho(v: &Codeword) -> PseudoMonomial {
    PseudoMonomial::from_raw(v.n(), v.bits(), full_mask(v.n()) & !v.bits())
}

/// Canonical order: degree, then plus mask, then minus mask.
impl Ord for PseudoMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.degree(), self.plus, self.minus).cmp(&(
            other.n,
            other.degree(),
            other.plus,
            other.minus,
        ))
    }
}

impl PartialOrd for PseudoMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `x1*x3*(1-x2)`: positive factors first, each group ascending.
impl fmt::Display for PseudoMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let factors = neurons(self.plus)
            .map(|i| format!("x{i}"))
            .chain(neurons(self.minus).map(|j| format!("(1-x{j})")));
        for (k, s) in factors.enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(&s)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PseudoMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

/// Parses `x1*(1-x2)*x3` (whitespace and `·` also accepted as separators).
/// Returns the role masks; the caller fixes `n`.
pub(crate) fn parse_factors(text: &str) -> Result<(u64, u64)> {
    let cleaned: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty pseudo-monomial".into()));
    }
    let (mut plus, mut minus) = (0u64, 0u64);
    for factor in cleaned.split(['*', '·']) {
        let (neg, var) = match factor.strip_prefix("(1-").and_then(|r| r.strip_suffix(')')) {
            Some(v) => (true, v),
            None => (false, factor),
        };
        let idx: usize = var
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
        if idx == 0 || idx > 64 {
            return Err(Error::NeuronIndex {
                index: idx,
                max: 64,
            });
        }
        let bit = 1u64 << (idx - 1);
        if neg {
            minus |= bit;
        } else {
            plus |= bit;
        }
    }
    Ok((plus, minus))
}
