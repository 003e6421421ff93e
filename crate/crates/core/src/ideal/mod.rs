//! Pseudo-monomials over the Boolean ring, neural ideals and their
//! canonical forms.

mod canonical;
mod formulas;
mod monomial;
mod predict;

pub use canonical::{
    canonical_form, canonical_form_naive, canonical_form_oracle, generates_neural_ideal,
    CanonicalForm, CanonicalFormJson, NAIVE_MAX_PRODUCTS, ORACLE_MAX_NEURONS,
};
pub use formulas::{cf_cc_formula, cf_cr_formula};
pub use monomial::{rho, MonomialJson, PseudoMonomial};
pub use predict::predict_cf;

pub(crate) use canonical::prune_multiples;

pub fn eval(f: &PseudoMonomial, c: &crate::code::Codeword) -> bool {
    f.eval(c)
}

pub fn divides(f: &PseudoMonomial, g: &PseudoMonomial) -> bool {
    f.divides(g)
}

pub fn multiply(f: &PseudoMonomial, g: &PseudoMonomial) -> Option<PseudoMonomial> {
    f.multiply(g)
}
