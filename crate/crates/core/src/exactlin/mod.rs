//! Exact rational linear algebra.

mod matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use rational::{fmt_rational, parse_rational, q, qi, Rational};
pub use subspace::Subspace;

/// Reduced row echelon form together with the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.rref()
}

/// Basis of the null space of `m`, as a subspace of `Q^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    Subspace::from_independent(m.kernel())
}

/// Basis of the column space of `m`.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::from_independent(m.image())
}

/// One solution of `m x = b` (free variables set to zero), if any.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    m.solve(b)
}

pub fn complement(s: &Subspace) -> Subspace {
    s.complement()
}

pub fn orth_complement(s: &Subspace) -> Subspace {
    s.orth_complement()
}

/// Sum, intersection and whether `b` is contained in `a`.
pub fn subspace_ops(a: &Subspace, b: &Subspace) -> (Subspace, Subspace, bool) {
    (a.sum(b), a.intersection(b), a.contains(b))
}
