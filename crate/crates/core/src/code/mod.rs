//! Codewords, codes, simplicial complexes of codes, trunks, morphisms and
//! the elementary code maps.

mod codeword;
mod complex;
mod elementary;
mod families;
mod morphism;
mod parse;

pub use codeword::{full_mask, neurons, Code, CodeJson, Codeword, MAX_NEURONS};
pub use complex::{simplicial_complex, ComplexJson, SimplicialComplex};
pub use elementary::{apply_elementary_map, ElementaryMapSpec};
pub use families::{cc_family, complete_iso, cr_family, union_closure_condition};
pub use morphism::{check_monotone, is_isomorphism, is_morphism, is_trunk, trunk, CodeMap};
pub use parse::parse_code;

pub(crate) use codeword::check_n;
pub(crate) use complex::maximal_masks;
pub(crate) use elementary::{delete_from_mask, permute_mask};
