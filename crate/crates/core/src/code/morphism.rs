//! Trunks and trunk-preserving code maps.
//!
//! A code map is a morphism when the preimage of every trunk of the codomain
//! is a trunk of the domain. It suffices to check the simple trunks `Tk(i)`.

use std::fmt;

use super::codeword::{full_mask, Code, Codeword};
use crate::error::{Error, Result};

/// `Tk_C(sigma)`: the codewords of `c` containing `sigma`.
pub fn trunk(c: &Code, sigma: &Codeword) -> Vec<Codeword> {
    c.words()
        .iter()
        .copied()
        .filter(|w| sigma.is_subset(w))
        .collect()
}

fn trunk_mask_of(words: &[u64], sigma: u64) -> u64 {
    words
        .iter()
        .enumerate()
        .filter(|(_, &w)| sigma & !w == 0)
        .fold(0u64, |acc, (k, _)| acc | 1 << k)
}

/// `s` is a trunk iff it is empty or equal to `Tk(∩s)`: if `s = Tk(σ)` then
/// `σ ⊆ ∩s`, hence `Tk(∩s) ⊆ s ⊆ Tk(∩s)`.
pub fn is_trunk(c: &Code, s: &[Codeword]) -> Result<bool> {
    for w in s {
        if w.n() != c.n() {
            return Err(Error::NeuronCountMismatch {
                expected: c.n(),
                found: w.n(),
            });
        }
        if !c.contains(w) {
            return Err(Error::NotInCode(w.to_string()));
        }
    }
    let mut set: Vec<Codeword> = s.to_vec();
    set.sort();
    set.dedup();
    if set.is_empty() {
        return Ok(true);
    }
    let meet = set.iter().fold(full_mask(c.n()), |acc, w| acc & w.bits());
    Ok(trunk(c, &Codeword::from_raw(c.n(), meet)) == set)
}

/// Same decision on index sets: `members` is a bitset over `words`.
pub(crate) fn is_trunk_indexed(words: &[u64], n: usize, members: u64) -> bool {
    if members == 0 {
        return true;
    }
    let meet = words
        .iter()
        .enumerate()
        .filter(|(k, _)| members >> k & 1 == 1)
        .fold(full_mask(n), |acc, (_, &w)| acc & w);
    trunk_mask_of(words, meet) == members
}

/// A total function from the codewords of `domain` to codewords of `codomain`.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeMap {
    domain: Code,
    codomain: Code,
    /// `images[k]` is the image of `domain.words()[k]`.
    images: Vec<Codeword>,
}

impl CodeMap {
    pub fn new(domain: Code, codomain: Code, images: Vec<Codeword>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::InvalidMap(format!(
                "{} images for {} domain codewords",
                images.len(),
                domain.len()
            )));
        }
        if let Some(w) = images.iter().find(|w| !codomain.contains(w)) {
            return Err(Error::InvalidMap(format!(
                "image {w} is not in the codomain"
            )));
        }
        Ok(Self {
            domain,
            codomain,
            images,
        })
    }

    pub fn from_fn<F: FnMut(&Codeword) -> Codeword>(
        domain: Code,
        codomain: Code,
        f: F,
    ) -> Result<Self> {
        let images = domain.words().iter().map(f).collect();
        Self::new(domain, codomain, images)
    }

    /// Builds a map from explicit `(source, target)` pairs; every domain
    /// codeword must appear exactly once.
    pub fn from_pairs(
        domain: Code,
        codomain: Code,
        pairs: &[(Codeword, Codeword)],
    ) -> Result<Self> {
        let mut images: Vec<Option<Codeword>> = vec![None; domain.len()];
        for (src, dst) in pairs {
            let k = domain
                .index_of(src)
                .ok_or_else(|| Error::InvalidMap(format!("{src} is not in the domain")))?;
            if images[k].replace(*dst).is_some() {
                return Err(Error::InvalidMap(format!("{src} is assigned twice")));
            }
        }
        let images = images
            .into_iter()
            .zip(domain.words())
            .map(|(img, w)| img.ok_or_else(|| Error::InvalidMap(format!("{w} has no image"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, images)
    }

    pub fn identity(c: &Code) -> Self {
        Self {
            domain: c.clone(),
            codomain: c.clone(),
            images: c.words().to_vec(),
        }
    }

    pub fn domain(&self) -> &Code {
        &self.domain
    }

    pub fn codomain(&self) -> &Code {
        &self.codomain
    }

    pub fn images(&self) -> &[Codeword] {
        &self.images
    }

    pub fn apply(&self, w: &Codeword) -> Option<Codeword> {
        self.domain.index_of(w).map(|k| self.images[k])
    }

    /// `f(C)` as a code on the codomain's neurons.
    pub fn image_code(&self) -> Code {
        Code::from_words(self.codomain.n(), self.images.iter().copied())
            .expect("image of a nonempty code is nonempty")
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Codeword, Codeword)> + '_ {
        self.domain
            .words()
            .iter()
            .copied()
            .zip(self.images.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<Codeword> = self.images.clone();
        seen.sort();
        seen.dedup();
        seen.len() == self.images.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.images.len() == self.codomain.len()
    }

    pub fn inverse(&self) -> Option<CodeMap> {
        if !self.is_bijective() {
            return None;
        }
        let pairs: Vec<(Codeword, Codeword)> = self.pairs().map(|(a, b)| (b, a)).collect();
        CodeMap::from_pairs(self.codomain.clone(), self.domain.clone(), &pairs).ok()
    }

    /// Preimage of `Tk_D(i)` as a bitset over domain word indices.
    fn simple_trunk_preimage(&self, neuron: usize) -> u64 {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, w)| w.contains(neuron))
            .fold(0u64, |acc, (k, _)| acc | 1 << k)
    }

    /// True iff every simple-trunk preimage is a trunk of the domain.
    pub fn is_morphism(&self) -> bool {
        if self.domain.len() > 64 {
            return self.is_morphism_wide();
        }
        let words: Vec<u64> = self.domain.masks().collect();
        (1..=self.codomain.n())
            .all(|i| is_trunk_indexed(&words, self.domain.n(), self.simple_trunk_preimage(i)))
    }

    fn is_morphism_wide(&self) -> bool {
        (1..=self.codomain.n()).all(|i| {
            let pre: Vec<Codeword> = self
                .pairs()
                .filter(|(_, b)| b.contains(i))
                .map(|(a, _)| a)
                .collect();
            is_trunk(&self.domain, &pre).expect("preimage lies in the domain")
        })
    }

    /// Bijective, and both the map and its inverse are morphisms.
    pub fn is_isomorphism(&self) -> bool {
        match self.inverse() {
            Some(inv) => self.is_morphism() && inv.is_morphism(),
            None => false,
        }
    }

    /// `c1 ⊆ c2` implies `f(c1) ⊆ f(c2)`.
    pub fn check_monotone(&self) -> bool {
        let pairs: Vec<(Codeword, Codeword)> = self.pairs().collect();
        pairs.iter().all(|(a1, b1)| {
            pairs
                .iter()
                .all(|(a2, b2)| !a1.is_subset(a2) || b1.is_subset(b2))
        })
    }
}

impl fmt::Debug for CodeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeMap[")?;
        for (k, (a, b)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        write!(f, "]")
    }
}

pub fn is_morphism(f: &CodeMap) -> bool {
    f.is_morphism()
}

pub fn is_isomorphism(f: &CodeMap) -> bool {
    f.is_isomorphism()
}

pub fn check_monotone(f: &CodeMap) -> bool {
    f.check_monotone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    fn w(n: usize, v: &[usize]) -> Codeword {
        Codeword::from_neurons(n, v.iter().copied()).unwrap()
    }

    /// Decides trunk-ness by trying every sigma ⊆ [n].
    fn is_trunk_by_enumeration(c: &Code, s: &[Codeword]) -> bool {
        let mut set = s.to_vec();
        set.sort();
        set.dedup();
        set.is_empty()
            || (0..1u64 << c.n())
                .any(|sigma| trunk(c, &Codeword::new(c.n(), sigma).unwrap()) == set)
    }

    #[test]
    fn trunk_examples() {
        let c = parse_code("{};{1};{1,2}").unwrap();
        assert_eq!(trunk(&c, &w(2, &[1])), vec![w(2, &[1]), w(2, &[1, 2])]);
        assert_eq!(trunk(&c, &w(2, &[])), c.words().to_vec());
    }

    #[test]
    fn is_trunk_examples() {
        let c = parse_code("{};{1};{1,2}").unwrap();
        assert!(is_trunk(&c, &[w(2, &[1]), w(2, &[1, 2])]).unwrap());
        assert!(!is_trunk(&c, &[w(2, &[]), w(2, &[1, 2])]).unwrap());
        assert!(is_trunk(&c, &[]).unwrap());
        assert!(matches!(
            is_trunk(&c, &[w(2, &[2])]),
            Err(Error::NotInCode(_))
        ));
    }

    #[test]
    fn intersection_rule_matches_enumeration_on_three_neurons() {
        for code_bits in 1u64..256 {
            let c = Code::from_masks(3, (0..8).filter(|m| code_bits >> m & 1 == 1)).unwrap();
            let k = c.len();
            for subset in 0u64..1 << k {
                let s: Vec<Codeword> = (0..k)
                    .filter(|i| subset >> i & 1 == 1)
                    .map(|i| c.words()[i])
                    .collect();
                assert_eq!(
                    is_trunk(&c, &s).unwrap(),
                    is_trunk_by_enumeration(&c, &s),
                    "{c} {s:?}"
                );
            }
        }
    }

    #[test]
    fn deleting_a_neuron_is_a_morphism() {
        let dom = parse_code("1;3;12").unwrap();
        let cod = parse_code("n=2;{};1;12").unwrap();
        let f = CodeMap::from_fn(dom, cod, |x| Codeword::new(2, x.bits() & 0b11).unwrap()).unwrap();
        assert!(f.is_morphism());
        assert!(!f.is_isomorphism());
    }

    #[test]
    fn morphism_negative_case() {
        let dom = parse_code("1;2;12").unwrap();
        let cod = parse_code("1;2").unwrap();
        // the preimage of Tk(2) is {2}, but Tk(2) = {2, 12} in the domain
        let left = CodeMap::from_pairs(
            dom.clone(),
            cod.clone(),
            &[
                (w(2, &[1]), w(2, &[1])),
                (w(2, &[2]), w(2, &[2])),
                (w(2, &[1, 2]), w(2, &[1])),
            ],
        )
        .unwrap();
        assert!(!left.is_morphism());
        let bad = CodeMap::from_pairs(
            dom,
            cod,
            &[
                (w(2, &[1]), w(2, &[1])),
                (w(2, &[2]), w(2, &[2])),
                (w(2, &[1, 2]), w(2, &[2])),
            ],
        )
        .unwrap();
        assert!(!bad.is_morphism());
    }

    #[test]
    fn collapsing_to_top_is_a_morphism() {
        let dom = parse_code("1;2").unwrap();
        let cod = parse_code("{};12").unwrap();
        let f = CodeMap::from_pairs(
            dom.clone(),
            cod.clone(),
            &[(w(2, &[1]), w(2, &[1, 2])), (w(2, &[2]), w(2, &[]))],
        )
        .unwrap();
        assert!(f.is_morphism());
        let g = CodeMap::from_fn(dom, cod, |_| w(2, &[1, 2])).unwrap();
        assert!(g.is_morphism());
    }

    #[test]
    fn identity_is_isomorphism() {
        let c = parse_code("13;125;1235;1245").unwrap();
        let id = CodeMap::identity(&c);
        assert!(id.is_morphism() && id.is_isomorphism() && id.check_monotone());
    }

    #[test]
    fn remark_isomorphism_to_chain() {
        let dom = parse_code("12;123;1234").unwrap();
        let cod = parse_code("n=4;{};1;12").unwrap();
        let f = CodeMap::from_pairs(
            dom,
            cod,
            &[
                (w(4, &[1, 2]), w(4, &[])),
                (w(4, &[1, 2, 3]), w(4, &[1])),
                (w(4, &[1, 2, 3, 4]), w(4, &[1, 2])),
            ],
        )
        .unwrap();
        assert!(f.is_isomorphism());
    }

    #[test]
    fn non_injective_is_not_isomorphism() {
        let dom = parse_code("1;2").unwrap();
        let cod = parse_code("1;2").unwrap();
        let f = CodeMap::from_fn(dom, cod, |_| w(2, &[1])).unwrap();
        assert!(!f.is_isomorphism());
        assert!(f.check_monotone());
    }

    #[test]
    fn monotonicity_can_fail() {
        let dom = parse_code("1;12").unwrap();
        let cod = parse_code("1;2").unwrap();
        let f = CodeMap::from_pairs(
            dom,
            cod,
            &[(w(2, &[1]), w(2, &[2])), (w(2, &[1, 2]), w(2, &[1]))],
        )
        .unwrap();
        assert!(!f.check_monotone());
        assert!(!f.is_morphism());
    }

    #[test]
    fn invalid_maps_rejected() {
        let dom = parse_code("1;2").unwrap();
        let cod = parse_code("1").unwrap();
        assert!(CodeMap::new(dom.clone(), cod.clone(), vec![w(1, &[1])]).is_err());
        assert!(CodeMap::from_pairs(dom, cod, &[(w(2, &[1]), w(1, &[1]))]).is_err());
    }

    #[test]
    fn morphisms_are_monotone_exhaustively_on_small_codes() {
        // all maps between all pairs of codes on two neurons, plus codomains on one neuron
        let codes = |n: usize| -> Vec<Code> {
            (1u64..1 << (1 << n))
                .map(|bits| {
                    Code::from_masks(n, (0..1u64 << n).filter(|m| bits >> m & 1 == 1)).unwrap()
                })
                .collect()
        };
        let mut checked = 0;
        for dn in 1..=2 {
            for cn in 1..=2 {
                for dom in codes(dn) {
                    for cod in codes(cn) {
                        let k = dom.len();
                        let total = cod.len().pow(k as u32);
                        for idx in 0..total {
                            let mut r = idx;
                            let images = (0..k)
                                .map(|_| {
                                    let img = cod.words()[r % cod.len()];
                                    r /= cod.len();
                                    img
                                })
                                .collect();
                            let f = CodeMap::new(dom.clone(), cod.clone(), images).unwrap();
                            if f.is_morphism() {
                                assert!(f.check_monotone(), "{f:?}");
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 1000);
    }
}
