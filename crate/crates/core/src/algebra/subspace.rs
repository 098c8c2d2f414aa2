use crate::kernel::{FieldSpec, Matrix, Scalar};

/// A linear subspace of `k^n`, stored by the nonzero rows of its reduced
/// row echelon form. Two equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let m = Matrix::from_rows(field, ambient_dim, vectors);
        Self::from_matrix_rows(&m)
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let rk = m.rref_kernel();
        let rows: Vec<Vec<Scalar>> = (0..rk.rank).map(|i| rk.rref.row(i)).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), &rows),
            pivots: rk.pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn column_span(m: &Matrix) -> Self {
        Self::from_matrix_rows(&m.transpose())
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, &[])
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::from_matrix_rows(&Matrix::identity(field, ambient_dim))
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Echelon basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtract the echelon rows so that every pivot coordinate becomes zero.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = &out[j] - &(&c * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::from_matrix_rows(&self.basis.vstack(&other.basis))
    }

    pub fn with_vectors(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let extra = Matrix::from_rows(self.field(), self.ambient_dim, vectors);
        Self::from_matrix_rows(&self.basis.vstack(&extra))
    }

    /// The annihilator in the dual space: all functionals vanishing here.
    pub fn annihilator(&self) -> Subspace {
        let k = self.basis.kernel();
        Self::column_span(&k)
    }

    /// Image of this subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vecs: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Subspace::span(self.field(), map.rows(), &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(F5, 3, &[vec![F5.from_u64(2), F5.from_u64(4), F5.zero()]]);
        let b = Subspace::span(F5, 3, &[vec![F5.one(), F5.from_u64(2), F5.zero()]]);
        assert_eq!(a, b);
        assert!(a.contains(&[F5.from_u64(3), F5.one(), F5.zero()]));
        assert!(!a.contains(&[F5.one(), F5.zero(), F5.zero()]));
        assert_eq!(a.annihilator().dim(), 2);
        assert_eq!(
            a.coordinates(&[F5.from_u64(3), F5.one(), F5.zero()]),
            Some(vec![F5.from_u64(3)])
        );
    }
}
