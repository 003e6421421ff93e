use super::codeword::{full_mask, Code, Codeword};
use super::complex::simplicial_complex;
use super::morphism::CodeMap;
use crate::error::{Error, Result};

/// The complete code with `m` codewords: `{∅, 1, 12, ..., 12⋯(m−1)}` on
/// `max(m − 1, 1)` neurons.
pub fn cc_family(m: usize) -> Result<Code> {
    if m < 1 {
        return Err(Error::Family(format!("cc needs m >= 1, got {m}")));
    }
    let n = (m - 1).max(1);
    Code::from_masks(n, (0..m).map(full_mask))
}

/// The cyclic code on `k` neurons: all singletons and all cyclically
/// consecutive pairs.
pub fn cr_family(k: usize) -> Result<Code> {
    if k < 3 {
        return Err(Error::Family(format!("cr needs k >= 3, got {k}")));
    }
    let singles = (0..k).map(|i| 1u64 << i);
    let pairs = (0..k).map(|i| 1u64 << i | 1u64 << ((i + 1) % k));
    Code::from_masks(k, singles.chain(pairs))
}

/// The isomorphism from a complete code onto `cc_family(|C|)`: sort the
/// chain `σ1 ⊊ ... ⊊ σm` and send `σi` to `{1, ..., i−1}`.
pub fn complete_iso(c: &Code) -> Result<CodeMap> {
    if let Some((a, b)) = c.first_incomparable_pair() {
        return Err(Error::NotComplete(a.to_string(), b.to_string()));
    }
    // (cardinality, mask) order is a linear extension of inclusion, so the
    // stored order already is the chain order.
    let target = cc_family(c.len())?;
    let images = (0..c.len())
        .map(|i| Codeword::from_raw(target.n(), full_mask(i)))
        .collect();
    CodeMap::new(c.clone(), target, images)
}

/// Every pairwise union of codewords lies in Δ(C).
pub fn union_closure_condition(c: &Code) -> bool {
    let delta = simplicial_complex(c);
    let words: Vec<u64> = c.masks().collect();
    words
        .iter()
        .enumerate()
        .all(|(i, &a)| words[i + 1..].iter().all(|&b| delta.contains_mask(a | b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    #[test]
    fn cc_examples() {
        assert_eq!(cc_family(3).unwrap(), parse_code("{};1;12").unwrap());
        assert_eq!(cc_family(1).unwrap(), parse_code("{}").unwrap());
        assert_eq!(cc_family(4).unwrap(), parse_code("{};1;12;123").unwrap());
        assert_eq!(cc_family(2).unwrap(), parse_code("{};1").unwrap());
        assert!(cc_family(0).is_err());
    }

    #[test]
    fn cr_examples() {
        assert_eq!(
            cr_family(4).unwrap(),
            parse_code("1;2;3;4;12;23;34;14").unwrap()
        );
        assert_eq!(cr_family(3).unwrap(), parse_code("1;2;3;12;23;13").unwrap());
        assert_eq!(
            cr_family(5).unwrap(),
            parse_code("1;2;3;4;5;12;23;34;45;15").unwrap()
        );
        assert_eq!(cr_family(7).unwrap().len(), 14);
        assert!(cr_family(2).is_err());
    }

    #[test]
    fn complete_iso_example() {
        let c = parse_code("12;123;1234").unwrap();
        let f = complete_iso(&c).unwrap();
        let shown: Vec<String> = f.pairs().map(|(a, b)| format!("{a}->{b}")).collect();
        assert_eq!(shown, ["{1,2}->{}", "{1,2,3}->{1}", "{1,2,3,4}->{1,2}"]);
        assert!(f.is_isomorphism());
    }

    #[test]
    fn complete_iso_fixed_point() {
        let c = cc_family(5).unwrap();
        let f = complete_iso(&c).unwrap();
        assert!(f.pairs().all(|(a, b)| a == b));
    }

    #[test]
    fn complete_iso_rejects_incomparable() {
        assert!(matches!(
            complete_iso(&parse_code("1;2").unwrap()),
            Err(Error::NotComplete(_, _))
        ));
    }

    #[test]
    fn union_closure_examples() {
        assert!(union_closure_condition(&parse_code("1;2;13;123").unwrap()));
        assert!(!union_closure_condition(
            &parse_code("13;125;1235;1245").unwrap()
        ));
        assert!(union_closure_condition(&parse_code("25").unwrap()));
    }
}
