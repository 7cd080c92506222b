//! Wedge bases, cochain storage, evaluation and sign bookkeeping.

pub mod cochain;
pub mod combinat;
pub mod graded;

pub use cochain::{unit, wedge_weights, Cochain, CochainSpace, Domain, Module};
pub use combinat::{
    binomial, comb_rank, koszul_sign, perm_parity, signed_rank, sort_with_sign, splits, unshuffles,
    wedge_basis,
};
pub use graded::{end_space, vec_space, Carrier, GradedElement};

/// Values of `c` on basis tuples agree with its stored coefficients.
pub fn evaluate(c: &Cochain, args: &[Vec<crate::exactlin::Rational>]) -> crate::error::Result<Vec<crate::exactlin::Rational>> {
    c.evaluate(args)
}
