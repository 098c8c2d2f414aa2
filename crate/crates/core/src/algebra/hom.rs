use super::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::kernel::{Matrix, Scalar};

/// A linear map between algebras; column `j` is the image of the source's `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    source: FinDimAlgebra,
    target: FinDimAlgebra,
    matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub unital: bool,
    pub multiplicative: bool,
    /// First `(i, j)` with `f(b_i b_j) ≠ f(b_i) f(b_j)`.
    pub witness: Option<(usize, usize)>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.unital && self.multiplicative
    }
}

impl AlgebraHom {
    /// Wrap a matrix without checking the homomorphism laws.
    pub fn new_unchecked(
        source: FinDimAlgebra,
        target: FinDimAlgebra,
        matrix: Matrix,
    ) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::InvalidInput(format!(
                "homomorphism matrix has shape {:?}, expected ({}, {})",
                matrix.shape(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraHom {
            source,
            target,
            matrix,
        })
    }

    /// Wrap a matrix and require the homomorphism laws.
    pub fn new(source: FinDimAlgebra, target: FinDimAlgebra, matrix: Matrix) -> Result<Self> {
        let f = Self::new_unchecked(source, target, matrix)?;
        let report = f.check();
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "not an algebra homomorphism: {report:?}"
            )));
        }
        Ok(f)
    }

    /// Build from the images of the source basis vectors.
    pub fn from_images(
        source: FinDimAlgebra,
        target: FinDimAlgebra,
        images: &[Vec<Scalar>],
    ) -> Result<Self> {
        let m = Matrix::from_columns(source.field(), target.dim(), images);
        Self::new(source, target, m)
    }

    pub fn identity(a: &FinDimAlgebra) -> Self {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.field(), a.dim()),
        }
    }

    pub fn source(&self) -> &FinDimAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FinDimAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn check(&self) -> HomReport {
        let unital = self.apply(self.source.unit()) == self.target.unit();
        let n = self.source.dim();
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.matrix.column(i)).collect();
        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(&self.source.basis_product(i, j));
                let rhs = self.target.multiply(&images[i], &images[j]);
                if lhs != rhs {
                    witness = Some((i, j));
                    break 'outer;
                }
            }
        }
        HomReport {
            unital,
            multiplicative: witness.is_none(),
            witness,
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraHom) -> Result<AlgebraHom> {
        if !self.target.same_structure(&other.source) {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        Ok(AlgebraHom {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mul(&self.matrix),
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.rank() == self.source.dim()
    }
}
