//! Open-interval covers of the real line and the codes they realize.

use super::rational::{int, midpoint, Rational};
use crate::code::{check_n, Code};
use crate::error::{Error, Result};
use crate::ideal::{prune_multiples, CanonicalForm};

/// Largest cover size accepted by [`cf_from_intervals`].
pub const CF_FROM_INTERVALS_MAX: usize = 12;

/// The stimulus space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// All of ℝ.
    WholeLine,
    /// The union of the cover's sets.
    Union,
}

/// The open interval `(lo, hi)` with `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidCover(format!(
                "interval ({lo}, {hi}) is empty"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCover {
    intervals: Vec<Interval>,
    ambient: Ambient,
}

impl IntervalCover {
    pub fn new(intervals: Vec<Interval>, ambient: Ambient) -> Result<Self> {
        check_n(intervals.len())
            .map_err(|_| Error::InvalidCover(format!("{} sets, need 1..=64", intervals.len())))?;
        Ok(Self { intervals, ambient })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Multiplies every endpoint by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        if factor <= &int(0) {
            return Err(Error::InvalidCover("scale factor must be positive".into()));
        }
        let intervals = self
            .intervals
            .iter()
            .map(|iv| Interval::new(&iv.lo * factor, &iv.hi * factor))
            .collect::<Result<Vec<_>>>()?;
        Self::new(intervals, self.ambient)
    }

    fn mask_at(&self, x: &Rational) -> u64 {
        self.intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.contains(x))
            .fold(0u64, |acc, (k, _)| acc | 1 << k)
    }
}

/// Open intervals `(i, m)` for `i = 1..m−1` on the whole line.
pub fn cc_m_intervals(m: usize) -> Result<IntervalCover> {
    if m < 2 {
        return Err(Error::Family(format!(
            "interval realization needs m >= 2, got {m}"
        )));
    }
    let intervals = (1..m)
        .map(|i| Interval::new(int(i as i64), int(m as i64)))
        .collect::<Result<Vec<_>>>()?;
    IntervalCover::new(intervals, Ambient::WholeLine)
}

/// The code realized by the cover. The membership pattern is constant on
/// each cell of the endpoint arrangement, so it is sampled at every endpoint,
/// between consecutive endpoints, and beyond both ends.
pub fn code_of_intervals(u: &IntervalCover) -> Code {
    let mut ends: Vec<Rational> = u
        .intervals
        .iter()
        .flat_map(|iv| [iv.lo.clone(), iv.hi.clone()])
        .collect();
    ends.sort();
    ends.dedup();
    let mut samples: Vec<Rational> = Vec::with_capacity(2 * ends.len() + 1);
    samples.push(&ends[0] - int(1));
    for (k, e) in ends.iter().enumerate() {
        samples.push(e.clone());
        if let Some(next) = ends.get(k + 1) {
            samples.push(midpoint(e, next));
        }
    }
    samples.push(&ends[ends.len() - 1] + int(1));

    let masks = samples
        .iter()
        .map(|x| u.mask_at(x))
        .filter(|&m| m != 0 || u.ambient == Ambient::WholeLine);
    Code::from_masks(u.n(), masks).expect("a nonempty interval covers a point")
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// Disjoint open intervals, sorted; the union of a family of open intervals.
type OpenSet = Vec<(Bound, Bound)>;

/// Merges only on strict overlap: `(0,1) ∪ (1,2)` stays two components
/// because the point 1 is missing.
fn merge(mut parts: Vec<(Bound, Bound)>) -> OpenSet {
    parts.sort();
    let mut out: OpenSet = Vec::with_capacity(parts.len());
    for (lo, hi) in parts {
        match out.last_mut() {
            Some((_, last_hi)) if lo < *last_hi => {
                if hi > *last_hi {
                    *last_hi = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    out
}

fn contained(inner: &OpenSet, outer: &OpenSet) -> bool {
    inner
        .iter()
        .all(|(lo, hi)| outer.iter().any(|(olo, ohi)| olo <= lo && hi <= ohi))
}

fn finite(iv: &Interval) -> (Bound, Bound) {
    (Bound::Finite(iv.lo.clone()), Bound::Finite(iv.hi.clone()))
}

/// Canonical form read off the cover itself: with `U_∅ = X`,
/// `x_σ ∏_{i∈τ}(1 − x_i)` lies in the neural ideal iff `U_σ ⊆ ⋃_{i∈τ} U_i`.
/// The three generator families are
///
/// * `x_σ` with `U_σ = ∅`,
/// * `x_σ ∏_{τ}(1 − x_i)` with `σ, τ ≠ ∅`, `U_σ ≠ ∅`, `⋃_τ U_i ≠ X` and
///   `U_σ ⊆ ⋃_τ U_i`,
/// * `∏_{τ}(1 − x_i)` with `X ⊆ ⋃_τ U_i`,
///
/// and the canonical form is the set of minimal members of their union.
pub fn cf_from_intervals(u: &IntervalCover) -> Result<CanonicalForm> {
    let n = u.n();
    if n > CF_FROM_INTERVALS_MAX {
        return Err(Error::TooLarge {
            what: "canonical form from intervals",
            n,
            max: CF_FROM_INTERVALS_MAX,
        });
    }
    let size = 1usize << n;

    // U_σ for σ ≠ ∅ as a single open interval, or None when empty.
    let mut meet: Vec<Option<(Rational, Rational)>> = vec![None; size];
    for sigma in 1..size {
        let low = sigma.trailing_zeros() as usize;
        let iv = &u.intervals[low];
        let rest = sigma & (sigma - 1);
        meet[sigma] = if rest == 0 {
            Some((iv.lo.clone(), iv.hi.clone()))
        } else {
            meet[rest].as_ref().and_then(|(a, b)| {
                let lo = a.max(&iv.lo).clone();
                let hi = b.min(&iv.hi).clone();
                (lo < hi).then_some((lo, hi))
            })
        };
    }
    let joins: Vec<OpenSet> = (0..size)
        .map(|tau| {
            merge(
                (0..n)
                    .filter(|i| tau >> i & 1 == 1)
                    .map(|i| finite(&u.intervals[i]))
                    .collect(),
            )
        })
        .collect();
    let space: OpenSet = match u.ambient {
        Ambient::WholeLine => vec![(Bound::NegInf, Bound::PosInf)],
        Ambient::Union => joins[size - 1].clone(),
    };
    let covers_space: Vec<bool> = joins.iter().map(|j| contained(&space, j)).collect();

    let mut found: Vec<(u64, u64)> = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for sigma in 0..size {
        let rest = (size - 1) & !sigma;
        // every τ ⊆ [n] \ σ, including ∅
        let mut tau = rest;
        loop {
            let keep = match (sigma == 0, tau == 0) {
                (true, true) => false,
                (false, true) => meet[sigma].is_none(),
                (true, false) => covers_space[tau],
                (false, false) => match &meet[sigma] {
                    Some((a, b)) => {
                        let piece = vec![(Bound::Finite(a.clone()), Bound::Finite(b.clone()))];
                        !covers_space[tau] && contained(&piece, &joins[tau])
                    }
                    None => false,
                },
            };
            if keep {
                found.push((sigma as u64, tau as u64));
            }
            if tau == 0 {
                break;
            }
            tau = (tau - 1) & rest;
        }
    }
    Ok(CanonicalForm::from_pairs(n, prune_multiples(found)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{cc_family, parse_code};
    use crate::ideal::canonical_form;
    use crate::realize::rational::ratio;

    fn cover(ivs: &[(i64, i64)], ambient: Ambient) -> IntervalCover {
        IntervalCover::new(
            ivs.iter()
                .map(|&(a, b)| Interval::new(int(a), int(b)).unwrap())
                .collect(),
            ambient,
        )
        .unwrap()
    }

    #[test]
    fn chain_realization() {
        assert_eq!(
            code_of_intervals(&cc_m_intervals(3).unwrap()),
            parse_code("n=2;{};1;12").unwrap()
        );
        assert_eq!(
            code_of_intervals(&cc_m_intervals(2).unwrap()),
            parse_code("{};1").unwrap()
        );
        assert_eq!(
            code_of_intervals(&cc_m_intervals(6).unwrap()),
            cc_family(6).unwrap()
        );
        assert!(cc_m_intervals(1).is_err());
    }

    #[test]
    fn single_interval_on_line() {
        assert_eq!(
            code_of_intervals(&cover(&[(0, 1)], Ambient::WholeLine)),
            parse_code("{};1").unwrap()
        );
        assert_eq!(
            code_of_intervals(&cover(&[(0, 1)], Ambient::Union)),
            parse_code("1").unwrap()
        );
    }

    #[test]
    fn overlapping_pair_in_union() {
        let u = cover(&[(0, 2), (1, 3)], Ambient::Union);
        assert_eq!(code_of_intervals(&u), parse_code("1;12;2").unwrap());
    }

    #[test]
    fn touching_intervals_leave_a_gap() {
        let u = cover(&[(0, 1), (1, 2)], Ambient::WholeLine);
        assert_eq!(code_of_intervals(&u), parse_code("{};1;2").unwrap());
        let cf = cf_from_intervals(&u).unwrap();
        assert_eq!(cf, canonical_form(&code_of_intervals(&u)));
        let v = cover(&[(0, 1), (1, 2), (0, 2)], Ambient::Union);
        // the point 1 is only in U3, so U3 is not covered by U1 ∪ U2
        assert_eq!(
            cf_from_intervals(&v).unwrap(),
            canonical_form(&code_of_intervals(&v))
        );
    }

    #[test]
    fn interval_form_matches_code_form() {
        assert_eq!(
            cf_from_intervals(&cc_m_intervals(3).unwrap())
                .unwrap()
                .to_string(),
            "{x2*(1-x1)}"
        );
        let five = cf_from_intervals(&cc_m_intervals(5).unwrap()).unwrap();
        assert_eq!(five, canonical_form(&cc_family(5).unwrap()));
        assert_eq!(five.len(), 6);
    }

    #[test]
    fn disjoint_sets_give_product() {
        let u = cover(&[(0, 1), (2, 3)], Ambient::WholeLine);
        let cf = cf_from_intervals(&u).unwrap();
        assert_eq!(cf.to_string(), "{x1*x2}");
        assert_eq!(cf, canonical_form(&code_of_intervals(&u)));
    }

    #[test]
    fn union_ambient_has_covering_generator() {
        let u = cover(&[(0, 2), (1, 3)], Ambient::Union);
        let cf = cf_from_intervals(&u).unwrap();
        assert_eq!(cf.to_string(), "{(1-x1)*(1-x2)}");
    }

    #[test]
    fn scaling_keeps_code() {
        let u = cover(&[(0, 2), (1, 3), (3, 5)], Ambient::WholeLine);
        let s = u.scaled(&ratio(7, 3)).unwrap();
        assert_eq!(code_of_intervals(&u), code_of_intervals(&s));
        assert!(u.scaled(&int(0)).is_err());
    }

    #[test]
    fn bad_intervals() {
        assert!(Interval::new(int(1), int(1)).is_err());
        assert!(IntervalCover::new(vec![], Ambient::Union).is_err());
        let big = IntervalCover::new(
            (0..13)
                .map(|i| Interval::new(int(i), int(i + 1)).unwrap())
                .collect(),
            Ambient::Union,
        )
        .unwrap();
        assert!(matches!(
            cf_from_intervals(&big),
            Err(Error::TooLarge { .. })
        ));
    }
}
