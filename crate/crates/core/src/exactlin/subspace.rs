use super::matrix::Matrix;
use super::rational::Rational;
use num_traits::{One, Zero};

/// A linear subspace of `Q^ambient`, stored as a matrix whose columns form a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of the columns of `m`; dependent columns are dropped.
    pub fn span(m: &Matrix) -> Self {
        Subspace { ambient: m.rows(), basis: m.image() }
    }

    pub fn span_vectors(ambient: usize, vs: &[Vec<Rational>]) -> Self {
        Self::span(&Matrix::from_cols(ambient, vs))
    }

    /// Caller guarantees the columns are independent.
    pub fn from_independent(m: Matrix) -> Self {
        Subspace { ambient: m.rows(), basis: m }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        let mut m = Matrix::zeros(ambient, idx.len());
        for (t, &i) in idx.iter().enumerate() {
            m.set(i, t, Rational::one());
        }
        Subspace { ambient, basis: m }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vector(&self, a: usize) -> Vec<Rational> {
        self.basis.col(a)
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.columns()
    }

    /// Coordinates of `v` in this basis, or `None` when `v` lies outside.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if self.dim() == 0 {
            return if v.iter().all(|x| x.is_zero()) { Some(vec![]) } else { None };
        }
        self.basis.solve(v)
    }

    pub fn contains_vec(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if other.dim() == 0 {
            return true;
        }
        self.basis.hstack(&other.basis).rank() == self.dim()
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Subspace::span(&self.basis.hstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let k = self.basis.hstack(&other.basis.neg()).kernel();
        let top = k.row_range(0, self.dim());
        Subspace::span(&self.basis.mul(&top))
    }

    /// Completion of the pivot coordinates of the basis by the remaining standard vectors.
    pub fn complement(&self) -> Subspace {
        let piv = self.basis.transpose().rref().1;
        let rest: Vec<usize> = (0..self.ambient).filter(|i| !piv.contains(i)).collect();
        Subspace::coordinate(self.ambient, &rest)
    }

    /// Orthogonal complement for the standard dot product.
    pub fn orth_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        Subspace::from_independent(self.basis.transpose().kernel())
    }

    /// True when `self ⊕ other` is the whole ambient space.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        self.dim() + other.dim() == self.ambient
            && self.basis.hstack(&other.basis).rank() == self.ambient
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::qi;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn complements() {
        let s = Subspace::coordinate(3, &[2]);
        assert_eq!(s.complement(), Subspace::coordinate(3, &[0, 1]));
        assert_eq!(Subspace::full(3).complement().dim(), 0);
        let s = Subspace::span_vectors(3, &[v(&[1, 1, 0])]);
        assert_eq!(s.complement(), Subspace::coordinate(3, &[1, 2]));
        let s = Subspace::span_vectors(2, &[v(&[1, 1])]);
        assert!(s.orth_complement().same_as(&Subspace::span_vectors(2, &[v(&[1, -1])])));
        assert!(Subspace::zero(2).orth_complement().same_as(&Subspace::full(2)));
    }

    #[test]
    fn sums_and_intersections() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::coordinate(3, &[1, 2]);
        assert!(a.sum(&b).same_as(&Subspace::full(3)));
        assert!(a.intersection(&b).same_as(&Subspace::coordinate(3, &[1])));
        assert!(!a.contains(&b));
        assert!(a.contains(&a));
        let e1 = Subspace::coordinate(3, &[0]);
        let e2 = Subspace::coordinate(3, &[1]);
        assert_eq!(e1.intersection(&e2).dim(), 0);
    }
}
