use crate::exactlin::{Matrix, Rational};
use num_traits::Zero;

/// A bounded cochain complex in coordinates: `diffs[k]: Q^{dims[k]} → Q^{dims[k+1]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    pub dims: Vec<usize>,
    pub diffs: Vec<Matrix>,
}

impl CochainComplex {
    pub fn new(dims: Vec<usize>, diffs: Vec<Matrix>) -> Self {
        assert_eq!(diffs.len() + 1, dims.len(), "one differential between consecutive degrees");
        for (k, d) in diffs.iter().enumerate() {
            assert_eq!((d.rows(), d.cols()), (dims[k + 1], dims[k]), "differential {k} has the wrong shape");
        }
        CochainComplex { dims, diffs }
    }

    /// Highest degree with a space.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// Truncated shift: degree `j` holds degree `j+1`, with differential `−d`.
    pub fn shift(&self) -> CochainComplex {
        CochainComplex {
            dims: self.dims[1..].to_vec(),
            diffs: self.diffs[1..].iter().map(Matrix::neg).collect(),
        }
    }

    /// First degree `k` with `d_{k+1} d_k ≠ 0`, if any.
    pub fn square_defect(&self) -> Option<usize> {
        (0..self.diffs.len().saturating_sub(1)).find(|&k| !self.diffs[k + 1].mul(&self.diffs[k]).is_zero())
    }

    /// Cohomology in degrees `0..=max`; needs `diffs[max]`.
    pub fn cohomology(&self, max: usize) -> Vec<DegreeCohomology> {
        assert!(max < self.diffs.len(), "complex is too short for degree {max}");
        (0..=max).map(|k| self.cohomology_at(k)).collect()
    }

    pub fn cohomology_at(&self, k: usize) -> DegreeCohomology {
        let z = self.diffs[k].kernel();
        let b = if k == 0 { Matrix::zeros(self.dims[0], 0) } else { self.diffs[k - 1].image() };
        DegreeCohomology::new(self.dims[k], z, b)
    }
}

/// `Z^k`, `B^k` and representatives of `H^k = Z^k / B^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCohomology {
    pub dim_c: usize,
    pub z: Matrix,
    pub b: Matrix,
    /// Columns of `Z` completing a basis of `B` to a basis of `Z`.
    pub reps: Matrix,
    frame: Matrix,
}

impl DegreeCohomology {
    pub fn new(dim_c: usize, z: Matrix, b: Matrix) -> Self {
        let both = b.hstack(&z);
        let (_, piv) = both.rref();
        let chosen: Vec<usize> = piv.iter().filter(|&&p| p >= b.cols()).map(|&p| p - b.cols()).collect();
        let reps = z.select_cols(&chosen);
        let frame = b.hstack(&reps);
        DegreeCohomology { dim_c, z, b, reps, frame }
    }

    pub fn dim_z(&self) -> usize {
        self.z.cols()
    }

    pub fn dim_b(&self) -> usize {
        self.b.cols()
    }

    pub fn dim_h(&self) -> usize {
        self.reps.cols()
    }

    /// Coordinates of the class of the cocycle `v` along the representatives.
    pub fn class_coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if self.frame.cols() == 0 {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        let x = self.frame.solve(v)?;
        Some(x[self.dim_b()..].to_vec())
    }

    pub fn is_coboundary(&self, v: &[Rational]) -> bool {
        self.class_coords(v).is_some_and(|c| c.iter().all(|x| x.is_zero()))
    }
}

/// Matrix of the map induced on cohomology by a cochain map `f` in one degree.
pub fn induced_map(src: &DegreeCohomology, dst: &DegreeCohomology, f: &Matrix) -> Option<Matrix> {
    let mut m = Matrix::zeros(dst.dim_h(), src.dim_h());
    for j in 0..src.dim_h() {
        let y = f.mul_vec(&src.reps.col(j));
        let c = dst.class_coords(&y)?;
        for (i, x) in c.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    Some(m)
}

/// True when `dst.d ∘ f_k = f_{k+1} ∘ src.d` for every degree where both sides exist.
pub fn is_chain_map(src: &CochainComplex, dst: &CochainComplex, f: &[Matrix]) -> Option<usize> {
    let top = src.diffs.len().min(dst.diffs.len()).min(f.len().saturating_sub(1));
    (0..top).find(|&k| dst.diffs[k].mul(&f[k]) != f[k + 1].mul(&src.diffs[k]))
}

/// A short exact sequence `0 → A → B → C → 0` of complexes in coordinates.
#[derive(Clone, Debug)]
pub struct Ses {
    pub a: CochainComplex,
    pub b: CochainComplex,
    pub c: CochainComplex,
    pub inc: Vec<Matrix>,
    pub proj: Vec<Matrix>,
}

/// Result of a connecting-map evaluation.
#[derive(Clone, Debug)]
pub struct Connecting {
    /// Cocycle in `A^{k+1}` representing `∂[c]`.
    pub cocycle: Vec<Rational>,
    /// Whether a second lift produced the same class.
    pub lift_independent: bool,
}

impl Ses {
    /// Degreewise exactness and the chain-map property of both maps.
    pub fn check(&self) -> Result<(), String> {
        let top = self.b.top();
        for k in 0..=top {
            let (i, p) = (&self.inc[k], &self.proj[k]);
            if !p.mul(i).is_zero() {
                return Err(format!("proj ∘ inc ≠ 0 in degree {k}"));
            }
            if i.rank() != self.a.dims[k] {
                return Err(format!("inclusion not injective in degree {k}"));
            }
            if p.rank() != self.c.dims[k] {
                return Err(format!("projection not surjective in degree {k}"));
            }
            if self.a.dims[k] + self.c.dims[k] != self.b.dims[k] {
                return Err(format!("dimensions do not add up in degree {k}"));
            }
        }
        if let Some(k) = is_chain_map(&self.a, &self.b, &self.inc) {
            return Err(format!("inclusion is not a chain map in degree {k}"));
        }
        if let Some(k) = is_chain_map(&self.b, &self.c, &self.proj) {
            return Err(format!("projection is not a chain map in degree {k}"));
        }
        Ok(())
    }

    /// Zig-zag: lift `c` to `B^k`, apply `d`, pull back to `A^{k+1}`.
    pub fn connecting(&self, k: usize, c: &[Rational], ha_next: &DegreeCohomology) -> Result<Connecting, String> {
        if !self.c.diffs[k].mul_vec(c).iter().all(|x| x.is_zero()) {
            return Err(format!("element of C^{k} is not closed"));
        }
        let zig = |lift: &[Rational]| -> Result<Vec<Rational>, String> {
            let db = self.b.diffs[k].mul_vec(lift);
            self.inc[k + 1].solve(&db).ok_or_else(|| "d(lift) is not in the image of A".to_string())
        };
        let lift = self.proj[k].solve(c).ok_or("element has no lift")?;
        let a = zig(&lift)?;
        let mut lift_independent = true;
        if self.a.dims[k] > 0 {
            let shift: Vec<Rational> = self.inc[k].col(0);
            let alt: Vec<Rational> = lift.iter().zip(&shift).map(|(x, y)| x + y).collect();
            let a2 = zig(&alt)?;
            lift_independent = ha_next.class_coords(&a) == ha_next.class_coords(&a2);
        }
        Ok(Connecting { cocycle: a, lift_independent })
    }

    /// Matrix of `∂: H^k(C) → H^{k+1}(A)` on representatives.
    pub fn connecting_matrix(
        &self,
        k: usize,
        hc: &DegreeCohomology,
        ha_next: &DegreeCohomology,
    ) -> Result<Matrix, String> {
        let mut m = Matrix::zeros(ha_next.dim_h(), hc.dim_h());
        for j in 0..hc.dim_h() {
            let r = self.connecting(k, &hc.reps.col(j), ha_next)?;
            if !r.lift_independent {
                return Err(format!("connecting map depends on the lift in degree {k}"));
            }
            let c = ha_next.class_coords(&r.cocycle).ok_or("connecting image is not a cocycle")?;
            for (i, x) in c.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }
}

/// One map in a long exact sequence, with the node it starts from.
#[derive(Clone, Debug)]
pub struct LesMap {
    pub label: String,
    pub matrix: Matrix,
}

/// The long exact sequence of a [`Ses`] through `H^max(C) → H^{max+1}(A)`.
#[derive(Clone, Debug)]
pub struct LongExact {
    pub ha: Vec<DegreeCohomology>,
    pub hb: Vec<DegreeCohomology>,
    pub hc: Vec<DegreeCohomology>,
    /// `f_k, g_k, ∂_k` for each degree.
    pub maps: Vec<[LesMap; 3]>,
}

impl LongExact {
    pub fn build(ses: &Ses, max: usize) -> Result<LongExact, String> {
        let ha = ses.a.cohomology(max + 1);
        let hb = ses.b.cohomology(max);
        let hc = ses.c.cohomology(max);
        let mut maps = Vec::new();
        for k in 0..=max {
            let f = induced_map(&ha[k], &hb[k], &ses.inc[k]).ok_or("H(inc) failed")?;
            let g = induced_map(&hb[k], &hc[k], &ses.proj[k]).ok_or("H(proj) failed")?;
            let d = ses.connecting_matrix(k, &hc[k], &ha[k + 1])?;
            maps.push([
                LesMap { label: format!("H^{k}(A)→H^{k}(B)"), matrix: f },
                LesMap { label: format!("H^{k}(B)→H^{k}(C)"), matrix: g },
                LesMap { label: format!("H^{k}(C)→H^{}(A)", k + 1), matrix: d },
            ]);
        }
        Ok(LongExact { ha, hb, hc, maps })
    }

    /// Nodes where `im = ker` fails, as `(label, dim im, dim ker)`.
    pub fn defects(&self) -> Vec<(String, usize, usize)> {
        let mut out = Vec::new();
        let mut prev: Option<&Matrix> = None;
        let mut nodes: Vec<(String, &Matrix)> = Vec::new();
        for (k, m) in self.maps.iter().enumerate() {
            nodes.push((format!("H^{k}(A)"), &m[0].matrix));
            nodes.push((format!("H^{k}(B)"), &m[1].matrix));
            nodes.push((format!("H^{k}(C)"), &m[2].matrix));
        }
        for (label, next) in nodes {
            let ker_dim = next.cols() - next.rank();
            let (im_dim, composite_zero) = match prev {
                None => (0, true),
                Some(p) => (p.rank(), next.mul(p).is_zero()),
            };
            if !composite_zero || im_dim != ker_dim {
                out.push((label, im_dim, ker_dim));
            }
            prev = Some(next);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::qi;

    #[test]
    fn cohomology_of_a_simple_complex() {
        let d0 = Matrix::from_i64(&[&[1], &[0]]);
        let d1 = Matrix::from_i64(&[&[0, 0]]);
        let c = CochainComplex::new(vec![1, 2, 1], vec![d0, d1]);
        assert_eq!(c.square_defect(), None);
        let h = c.cohomology(1);
        assert_eq!(h[0].dim_h(), 0);
        assert_eq!(h[1].dim_h(), 1);
        assert_eq!(h[1].class_coords(&[qi(5), qi(2)]), Some(vec![qi(2)]));
        assert!(h[1].is_coboundary(&[qi(3), qi(0)]));
    }
}
