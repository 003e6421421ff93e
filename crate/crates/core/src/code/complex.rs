use serde::Serialize;

use super::codeword::{Code, Codeword};

/// A simplicial complex on `[n]` stored by its facets. A set is a face iff it
/// is contained in some facet, so downward closure holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Codeword>,
}

/// Inclusion-maximal masks of `masks`, deduplicated.
pub(crate) fn maximal_masks(masks: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = masks.to_vec();
    sorted.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    sorted.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in sorted {
        if !out.iter().any(|&f| m & !f == 0) {
            out.push(m);
        }
    }
    out
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal generators are dropped.
    pub fn generated_by(n: usize, faces: &[Codeword]) -> Self {
        let masks: Vec<u64> = faces.iter().map(|f| f.bits()).collect();
        let mut facets: Vec<Codeword> = maximal_masks(&masks)
            .into_iter()
            .map(|m| Codeword::from_raw(n, m))
            .collect();
        facets.sort();
        Self { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Codeword] {
        &self.facets
    }

    pub fn contains(&self, face: &Codeword) -> bool {
        self.contains_mask(face.bits())
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|f| mask & !f.bits() == 0)
    }

    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            n: self.n,
            facets: self.facets.iter().map(|f| f.neurons()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// Δ(C): every subset of some codeword.
pub fn simplicial_complex(c: &Code) -> SimplicialComplex {
    SimplicialComplex::generated_by(c.n(), c.words())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    fn word(n: usize, v: &[usize]) -> Codeword {
        Codeword::from_neurons(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn chain_code_has_single_facet() {
        let d = simplicial_complex(&parse_code("{};{1};{1,2}").unwrap());
        assert_eq!(d.facets(), &[word(2, &[1, 2])]);
    }

    #[test]
    fn membership_is_downward_closed() {
        let d = simplicial_complex(&parse_code("1;2;13;123").unwrap());
        assert_eq!(d.facets(), &[word(3, &[1, 2, 3])]);
        assert!(d.contains(&word(3, &[2, 3])));
        assert!(d.contains(&word(3, &[])));
    }

    #[test]
    fn two_facets() {
        let d = simplicial_complex(&parse_code("13;125;1235;1245").unwrap());
        assert_eq!(
            d.facets(),
            &[word(5, &[1, 2, 3, 5]), word(5, &[1, 2, 4, 5])]
        );
        assert!(!d.contains(&word(5, &[1, 2, 3, 4, 5])));
        assert!(d.contains(&word(5, &[3, 5])));
        assert_eq!(d.dimension(), 3);
    }
}
