//! Exhaustive and seeded random sweeps that check the structural results on
//! many small codes at once.
//!
//! Random inputs are drawn sequentially from a seeded ChaCha stream before
//! any work is spread over threads, and outcomes are reduced in input
//! order, so a report depends only on the parameters.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{
    apply_elementary_map, cc_family, complete_iso, cr_family, full_mask, union_closure_condition,
    Code, ElementaryMapSpec,
};
use crate::error::{Error, Result};
use crate::graph::{bitset_connected, bitset_diameter, ccg_bitsets, grg};
use crate::ideal::{canonical_form, cf_cc_formula, cf_cr_formula, predict_cf};
use crate::realize::{
    cc_m_intervals, cf_from_intervals, code_of_intervals, code_of_segments, cr_k_polygon, ratio,
    Ambient, Cover, Interval, IntervalCover,
};

pub const DEFAULT_SEED: u64 = 2024;

/// Largest `n` for which every code on `n` neurons can be listed.
pub const EXHAUSTIVE_MAX_NEURONS: usize = 4;

/// Largest `n` for the complete-code enumeration.
pub const COMPLETE_MAX_NEURONS: usize = 6;

/// Largest number of codewords in a random code.
pub const RANDOM_MAX_WORDS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Parity,
    UnionClosure,
    PreserveConnected,
    PreserveComplete,
    CompleteIso,
    CfTheorems,
    GrgFamilies,
    Realizations,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Parity,
        Suite::UnionClosure,
        Suite::PreserveConnected,
        Suite::PreserveComplete,
        Suite::CompleteIso,
        Suite::CfTheorems,
        Suite::GrgFamilies,
        Suite::Realizations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Parity => "parity",
            Suite::UnionClosure => "union-closure",
            Suite::PreserveConnected => "preserve-connected",
            Suite::PreserveComplete => "preserve-complete",
            Suite::CompleteIso => "complete-iso",
            Suite::CfTheorems => "cf-theorems",
            Suite::GrgFamilies => "grg-families",
            Suite::Realizations => "realizations",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepParams {
    /// Neuron count (exhaustive sweeps) or largest neuron count (sampling).
    pub n: usize,
    pub exhaustive: bool,
    /// Random inputs per check.
    pub samples: usize,
    pub seed: u64,
    /// Largest family parameter for the family suites.
    pub max: usize,
}

impl Default for SweepParams {
    fn default() -> Self {
        Self {
            n: 3,
            exhaustive: false,
            samples: 200,
            seed: DEFAULT_SEED,
            max: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// A command line reproducing the failing case.
    pub command: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub scanned: u64,
    /// Inputs satisfying the hypothesis, for implications.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub premises: Option<u64>,
    pub violations: u64,
    /// The first violation in input order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

enum Outcome {
    Vacuous,
    Held,
    Violated(Counterexample),
}

fn outcome(
    premise: bool,
    holds: impl FnOnce() -> bool,
    cx: impl FnOnce() -> Counterexample,
) -> Outcome {
    if !premise {
        Outcome::Vacuous
    } else if holds() {
        Outcome::Held
    } else {
        Outcome::Violated(cx())
    }
}

fn tally(name: &str, implication: bool, outcomes: Vec<Outcome>) -> Check {
    let mut check = Check {
        name: name.to_string(),
        scanned: outcomes.len() as u64,
        premises: implication.then_some(0),
        violations: 0,
        counterexample: None,
    };
    for o in outcomes {
        match o {
            Outcome::Vacuous => {}
            Outcome::Held => {
                if let Some(p) = check.premises.as_mut() {
                    *p += 1;
                }
            }
            Outcome::Violated(cx) => {
                if let Some(p) = check.premises.as_mut() {
                    *p += 1;
                }
                check.violations += 1;
                check.counterexample.get_or_insert(cx);
            }
        }
    }
    check
}

fn quoted(c: &Code) -> String {
    format!("\"{}\"", c.to_text())
}

fn map_command(c: &Code, spec: &ElementaryMapSpec) -> String {
    format!("neurocode map {spec} {}", quoted(c))
}

/// The code whose codewords are the set bits of `index` read as masks.
pub fn code_from_index(n: usize, index: u64) -> Code {
    Code::from_masks(n, (0..1u64 << n).filter(|m| index >> m & 1 == 1)).expect("nonzero index")
}

/// A random code on `n` neurons with between 1 and [`RANDOM_MAX_WORDS`]
/// codewords.
pub fn random_code<R: Rng>(rng: &mut R, n: usize) -> Code {
    let space = 1u64 << n.min(63);
    let k = rng.random_range(1..=RANDOM_MAX_WORDS.min(space as usize));
    let masks: Vec<u64> = (0..k)
        .map(|_| rng.random_range(0..space) & full_mask(n))
        .collect();
    Code::from_masks(n, masks).expect("at least one word")
}

/// A random chain `σ1 ⊊ ... ⊊ σm` on `n` neurons.
pub fn random_chain<R: Rng>(rng: &mut R, n: usize) -> Code {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut masks = Vec::new();
    let mut cur = 0u64;
    let start = rng.random_range(0..=n);
    for &i in &order[..start] {
        cur |= 1 << i;
    }
    masks.push(cur);
    for &i in &order[start..] {
        cur |= 1 << i;
        if rng.random_bool(0.5) {
            masks.push(cur);
        }
    }
    Code::from_masks(n, masks).expect("at least one word")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Permutation,
    AddTrivialOn,
    AddTrivialOff,
    Duplicate,
    Delete,
    Inclusion,
}

impl MapKind {
    pub const PREDICTABLE: [MapKind; 5] = [
        MapKind::Permutation,
        MapKind::AddTrivialOn,
        MapKind::AddTrivialOff,
        MapKind::Duplicate,
        MapKind::Delete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Permutation => "permutation",
            MapKind::AddTrivialOn => "add-on",
            MapKind::AddTrivialOff => "add-off",
            MapKind::Duplicate => "duplicate",
            MapKind::Delete => "delete",
            MapKind::Inclusion => "inclusion",
        }
    }
}

/// A random elementary map of the given kind for `c`. Delete needs `n ≥ 2`.
pub fn random_spec<R: Rng>(rng: &mut R, kind: MapKind, c: &Code) -> ElementaryMapSpec {
    let n = c.n();
    match kind {
        MapKind::Permutation => {
            let mut g: Vec<usize> = (1..=n).collect();
            g.shuffle(rng);
            ElementaryMapSpec::Permutation(g)
        }
        MapKind::AddTrivialOn => ElementaryMapSpec::AddTrivialOn,
        MapKind::AddTrivialOff => ElementaryMapSpec::AddTrivialOff,
        MapKind::Duplicate => ElementaryMapSpec::Duplicate(rng.random_range(1..=n)),
        MapKind::Delete => ElementaryMapSpec::Delete(rng.random_range(1..=n)),
        MapKind::Inclusion => {
            let extra = random_code(rng, n);
            let target = Code::from_masks(n, c.masks().chain(extra.masks())).expect("nonempty");
            ElementaryMapSpec::Inclusion(target)
        }
    }
}

fn random_pair<R: Rng>(rng: &mut R, c: &Code) -> ElementaryMapSpec {
    let kinds: &[MapKind] = if c.n() >= 2 {
        &[
            MapKind::Permutation,
            MapKind::AddTrivialOn,
            MapKind::AddTrivialOff,
            MapKind::Duplicate,
            MapKind::Delete,
            MapKind::Inclusion,
        ]
    } else {
        &[
            MapKind::Permutation,
            MapKind::AddTrivialOn,
            MapKind::AddTrivialOff,
            MapKind::Duplicate,
            MapKind::Inclusion,
        ]
    };
    let kind = kinds[rng.random_range(0..kinds.len())];
    random_spec(rng, kind, c)
}

/// Every complete code (nonempty chain of subsets) on exactly `n` neurons.
pub fn complete_codes(n: usize) -> Vec<Code> {
    fn extend(n: usize, chain: &mut Vec<u64>, out: &mut Vec<Code>) {
        out.push(Code::from_masks(n, chain.iter().copied()).expect("nonempty chain"));
        let top = *chain.last().unwrap();
        let free = full_mask(n) & !top;
        // nonempty submasks of the unused neurons
        let mut add = free;
        while add != 0 {
            chain.push(top | add);
            extend(n, chain, out);
            chain.pop();
            add = (add - 1) & free;
        }
    }
    let mut out = Vec::new();
    for start in 0..1u64 << n {
        let mut chain = vec![start];
        extend(n, &mut chain, &mut out);
    }
    out
}

fn sweep_codes(params: &SweepParams) -> Result<Vec<Code>> {
    let n = params.n;
    if n == 0 {
        return Err(Error::NeuronCount(0));
    }
    if params.exhaustive {
        if n > EXHAUSTIVE_MAX_NEURONS {
            return Err(Error::TooLarge {
                what: "exhaustive sweep",
                n,
                max: EXHAUSTIVE_MAX_NEURONS,
            });
        }
        let total = (1u64 << (1u64 << n)) - 1;
        Ok((1..=total)
            .into_par_iter()
            .map(|i| code_from_index(n, i))
            .collect())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        Ok((0..params.samples)
            .map(|_| random_code(&mut rng, n))
            .collect())
    }
}

fn parity(params: &SweepParams) -> Result<Vec<Check>> {
    let codes = sweep_codes(params)?;
    let outcomes = codes
        .par_iter()
        .map(|c| {
            let words: Vec<u64> = c.masks().collect();
            let adj = ccg_bitsets(&words);
            let two_regular = adj.iter().all(|a| a.count_ones() == 2);
            outcome(
                bitset_connected(&adj) && two_regular && c.len() > 3,
                || c.len() % 2 == 0,
                || Counterexample {
                    command: format!("neurocode graph ccg {}", quoted(c)),
                    detail: format!("connected 2-regular CCG on {} codewords", c.len()),
                },
            )
        })
        .collect();
    Ok(vec![tally("parity", true, outcomes)])
}

fn union_closure(params: &SweepParams) -> Result<Vec<Check>> {
    let codes = sweep_codes(params)?;
    let outcomes = codes
        .par_iter()
        .map(|c| {
            let words: Vec<u64> = c.masks().collect();
            let adj = ccg_bitsets(&words);
            let diameter = bitset_diameter(&adj);
            outcome(
                union_closure_condition(c),
                || matches!(diameter, Some(d) if d <= 2),
                || Counterexample {
                    command: format!("neurocode graph ccg {}", quoted(c)),
                    detail: match diameter {
                        Some(d) => format!("diameter {d}"),
                        None => "disconnected".into(),
                    },
                },
            )
        })
        .collect();
    Ok(vec![tally("union-closure", true, outcomes)])
}

fn random_pairs(params: &SweepParams, chains: bool) -> Result<Vec<(Code, ElementaryMapSpec)>> {
    if params.n == 0 || params.n > 63 {
        return Err(Error::NeuronCount(params.n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    Ok((0..params.samples)
        .map(|_| {
            let n = rng.random_range(1..=params.n);
            let c = if chains && rng.random_bool(0.5) {
                random_chain(&mut rng, n)
            } else {
                random_code(&mut rng, n)
            };
            let spec = random_pair(&mut rng, &c);
            (c, spec)
        })
        .collect())
}

fn preserve(params: &SweepParams, complete: bool) -> Result<Vec<Check>> {
    let pairs = random_pairs(params, complete)?;
    let results: Vec<(Outcome, Outcome)> = pairs
        .par_iter()
        .map(|(c, spec)| {
            let (_, f) = apply_elementary_map(c, spec).expect("random specs are valid");
            let image = f.image_code();
            let cx = |detail: &str| Counterexample {
                command: map_command(c, spec),
                detail: detail.to_string(),
            };
            let morphism = outcome(
                true,
                || f.is_morphism(),
                || cx("induced map is not a morphism"),
            );
            let kept = if complete {
                outcome(
                    c.is_complete(),
                    || image.is_complete(),
                    || cx("image is not complete"),
                )
            } else {
                let connected =
                    |x: &Code| bitset_connected(&ccg_bitsets(&x.masks().collect::<Vec<_>>()));
                outcome(
                    connected(c),
                    || connected(&image),
                    || cx("image CCG is disconnected"),
                )
            };
            (kept, morphism)
        })
        .collect();
    let (kept, morphism): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let name = if complete {
        "complete-image"
    } else {
        "connected-image"
    };
    Ok(vec![
        tally(name, true, kept),
        tally("elementary-is-morphism", false, morphism),
    ])
}

fn complete_iso_sweep(params: &SweepParams) -> Result<Vec<Check>> {
    if params.n == 0 || params.n > COMPLETE_MAX_NEURONS {
        return Err(Error::TooLarge {
            what: "complete code enumeration",
            n: params.n,
            max: COMPLETE_MAX_NEURONS,
        });
    }
    let codes: Vec<Code> = (1..=params.n).flat_map(complete_codes).collect();
    let outcomes = codes
        .par_iter()
        .map(|c| {
            let cx = |detail: String| Counterexample {
                command: format!("neurocode graph ccg {}", quoted(c)),
                detail,
            };
            match complete_iso(c) {
                Err(e) => Outcome::Violated(cx(e.to_string())),
                Ok(f) => {
                    let onto = cc_family(c.len()).expect("nonempty");
                    if f.codomain() != &onto {
                        Outcome::Violated(cx(format!(
                            "codomain {} is not the chain code",
                            f.codomain()
                        )))
                    } else if !f.is_isomorphism() {
                        Outcome::Violated(cx("map or its inverse is not a morphism".into()))
                    } else {
                        Outcome::Held
                    }
                }
            }
        })
        .collect();
    Ok(vec![tally("complete-iso", false, outcomes)])
}

fn cf_theorems(params: &SweepParams) -> Result<Vec<Check>> {
    if params.n < 2 || params.n > 16 {
        return Err(Error::InvalidSpec(format!(
            "cf-theorems needs 2 <= n <= 16, got {}",
            params.n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut checks = Vec::new();
    for kind in MapKind::PREDICTABLE {
        let cases: Vec<(Code, ElementaryMapSpec)> = (0..params.samples)
            .map(|_| {
                let n = rng.random_range(2..=params.n);
                let c = random_code(&mut rng, n);
                let spec = random_spec(&mut rng, kind, &c);
                (c, spec)
            })
            .collect();
        let outcomes = cases
            .par_iter()
            .map(|(c, spec)| {
                let (image, _) = apply_elementary_map(c, spec).expect("random specs are valid");
                let predicted = predict_cf(&canonical_form(c), spec).expect("predictable kind");
                let computed = canonical_form(&image);
                outcome(
                    true,
                    || predicted == computed,
                    || Counterexample {
                        command: map_command(c, spec),
                        detail: format!("predicted {predicted}, computed {computed}"),
                    },
                )
            })
            .collect();
        checks.push(tally(kind.name(), false, outcomes));
    }
    Ok(checks)
}

fn grg_families(params: &SweepParams) -> Result<Vec<Check>> {
    let max = params.max;
    if !(4..=64).contains(&max) {
        return Err(Error::Family(format!(
            "grg-families needs 4 <= max <= 64, got {max}"
        )));
    }
    let fam = |prefix: &str, k: usize, cmd: &str, detail: String| Counterexample {
        command: format!("neurocode {cmd} --family {prefix}:{k}"),
        detail,
    };
    let cc_formula = (3..=max)
        .map(|m| {
            let code = cc_family(m).expect("m >= 3");
            let (want, got) = (cf_cc_formula(m).expect("m >= 3"), canonical_form(&code));
            outcome(
                true,
                || want == got,
                || fam("cc", m, "cf", format!("formula {want}, computed {got}")),
            )
        })
        .collect();
    let cr_formula = (3..=max)
        .map(|k| {
            let code = cr_family(k).expect("k >= 3");
            let (want, got) = (cf_cr_formula(k).expect("k >= 3"), canonical_form(&code));
            outcome(
                true,
                || want == got,
                || fam("cr", k, "cf", format!("formula {want}, computed {got}")),
            )
        })
        .collect();
    let cc_grg = (3..=max)
        .map(|m| {
            let g = grg(&canonical_form(&cc_family(m).expect("m >= 3")));
            outcome(
                true,
                || g.vertex_count() == m - 1 && g.edge_count() == 0,
                || {
                    fam(
                        "cc",
                        m,
                        "graph grg",
                        format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
                    )
                },
            )
        })
        .collect();
    let cr_grg = (4..=max)
        .map(|k| {
            let g = grg(&canonical_form(&cr_family(k).expect("k >= 4")));
            outcome(
                true,
                || g.vertex_count() == k && g.is_connected() && g.is_regular(2),
                || fam("cr", k, "graph grg", format!("{g:?}")),
            )
        })
        .collect();
    Ok(vec![
        tally("cc-formula", false, cc_formula),
        tally("cr-formula", false, cr_formula),
        tally("cc-grg", false, cc_grg),
        tally("cr-grg", false, cr_grg),
    ])
}

/// Largest neuron count for random interval covers.
pub const RANDOM_COVER_MAX: usize = 6;

/// A random open-interval cover with 1..=`max_n` intervals whose endpoints
/// are small rationals.
pub fn random_interval_cover<R: Rng>(rng: &mut R, max_n: usize) -> IntervalCover {
    let n = rng.random_range(1..=max_n);
    let point = |rng: &mut R| ratio(rng.random_range(-12..=12), rng.random_range(1..=3));
    let intervals = (0..n)
        .map(|_| loop {
            let (a, b) = (point(rng), point(rng));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                break Interval::new(lo, hi).expect("lo < hi");
            }
        })
        .collect();
    let ambient = if rng.random_bool(0.5) {
        Ambient::WholeLine
    } else {
        Ambient::Union
    };
    IntervalCover::new(intervals, ambient).expect("1..=max_n intervals")
}

fn realizations(params: &SweepParams) -> Result<Vec<Check>> {
    let max = params.max;
    if !(3..=64).contains(&max) {
        return Err(Error::Family(format!(
            "realizations needs 3 <= max <= 64, got {max}"
        )));
    }
    let intervals = (2..=max)
        .into_par_iter()
        .map(|m| {
            let got = code_of_intervals(&cc_m_intervals(m).expect("m >= 2"));
            let want = cc_family(m).expect("m >= 2");
            outcome(
                true,
                || got == want,
                || Counterexample {
                    command: format!("neurocode realize --family cc:{m}"),
                    detail: format!("realized {got}"),
                },
            )
        })
        .collect();
    let segments = (3..=max)
        .into_par_iter()
        .map(|k| {
            let got = code_of_segments(&cr_k_polygon(k).expect("k >= 3"));
            let want = cr_family(k).expect("k >= 3");
            outcome(
                true,
                || got == want,
                || Counterexample {
                    command: format!("neurocode realize --family cr:{k}"),
                    detail: format!("realized {got}"),
                },
            )
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let covers: Vec<(IntervalCover, i64, i64)> = (0..params.samples)
        .map(|_| {
            let u = random_interval_cover(&mut rng, RANDOM_COVER_MAX);
            (u, rng.random_range(1..=9), rng.random_range(1..=9))
        })
        .collect();
    let cover_command = |u: &IntervalCover| {
        let json =
            serde_json::to_string(&Cover::Intervals(u.clone()).to_json()).expect("plain json");
        format!("neurocode realize --cf '{json}'")
    };
    let (cf_checks, scale_checks): (Vec<Outcome>, Vec<Outcome>) = covers
        .par_iter()
        .map(|(u, p, q)| {
            let code = code_of_intervals(u);
            let from_cover = cf_from_intervals(u).expect("small cover");
            let from_code = canonical_form(&code);
            let cf = outcome(
                true,
                || from_cover == from_code,
                || Counterexample {
                    command: cover_command(u),
                    detail: format!("from cover {from_cover}, from code {from_code}"),
                },
            );
            let scaled = u.scaled(&ratio(*p, *q)).expect("positive factor");
            let scale = outcome(
                true,
                || code_of_intervals(&scaled) == code,
                || Counterexample {
                    command: cover_command(u),
                    detail: format!("scaling by {p}/{q} changes the code"),
                },
            );
            (cf, scale)
        })
        .unzip();
    let polygon = cr_k_polygon(max.min(12)).expect("k >= 3");
    let polygon_scaled = vec![outcome(
        true,
        || {
            code_of_segments(&polygon)
                == code_of_segments(&polygon.scaled(&ratio(3, 7)).expect("positive"))
        },
        || Counterexample {
            command: format!("neurocode realize --family cr:{}", max.min(12)),
            detail: "scaling the polygon changes the code".into(),
        },
    )];
    Ok(vec![
        tally("cc-intervals", false, intervals),
        tally("cr-segments", false, segments),
        tally("interval-cf", false, cf_checks),
        tally("interval-scaling", false, scale_checks),
        tally("segment-scaling", false, polygon_scaled),
    ])
}

/// Runs one suite.
pub fn run_suite(suite: Suite, params: &SweepParams) -> Result<SweepReport> {
    let checks = match suite {
        Suite::Parity => parity(params)?,
        Suite::UnionClosure => union_closure(params)?,
        Suite::PreserveConnected => preserve(params, false)?,
        Suite::PreserveComplete => preserve(params, true)?,
        Suite::CompleteIso => complete_iso_sweep(params)?,
        Suite::CfTheorems => cf_theorems(params)?,
        Suite::GrgFamilies => grg_families(params)?,
        Suite::Realizations => realizations(params)?,
    };
    Ok(SweepReport {
        suite: suite.name().to_string(),
        checks,
    })
}
