use super::{dualize_algebra, dualize_coalgebra, FinDimCoalgebra};
use crate::algebra::AlgebraHom;
use crate::error::{Error, Result};
use crate::kernel::{Matrix, Scalar};

/// A linear map between coalgebras; column `j` is the image of the source's `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraHom {
    source: FinDimCoalgebra,
    target: FinDimCoalgebra,
    matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraHomReport {
    pub counital: bool,
    pub comultiplicative: bool,
    /// First source basis index where `Δ f ≠ (f⊗f) Δ`.
    pub witness: Option<usize>,
}

impl CoalgebraHomReport {
    pub fn passed(&self) -> bool {
        self.counital && self.comultiplicative
    }
}

impl CoalgebraHom {
    pub fn new_unchecked(
        source: FinDimCoalgebra,
        target: FinDimCoalgebra,
        matrix: Matrix,
    ) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::InvalidInput(format!(
                "coalgebra map has shape {:?}, expected ({}, {})",
                matrix.shape(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(CoalgebraHom {
            source,
            target,
            matrix,
        })
    }

    pub fn new(source: FinDimCoalgebra, target: FinDimCoalgebra, matrix: Matrix) -> Result<Self> {
        let f = Self::new_unchecked(source, target, matrix)?;
        let report = f.check();
        if !report.passed() {
            return Err(Error::NotACoalgebraMap(format!("{report:?}")));
        }
        Ok(f)
    }

    pub fn identity(c: &FinDimCoalgebra) -> Self {
        CoalgebraHom {
            source: c.clone(),
            target: c.clone(),
            matrix: Matrix::identity(c.field(), c.dim()),
        }
    }

    /// The map sending `b_i` of `source` to `b_i` of `target`; used for
    /// towers whose levels extend each other's bases.
    pub fn prefix_inclusion(source: &FinDimCoalgebra, target: &FinDimCoalgebra) -> Result<Self> {
        let field = source.field();
        let mut m = Matrix::zeros(field, target.dim(), source.dim());
        for i in 0..source.dim().min(target.dim()) {
            m.set(i, i, field.one());
        }
        Self::new_unchecked(source.clone(), target.clone(), m)
    }

    pub fn source(&self) -> &FinDimCoalgebra {
        &self.source
    }

    pub fn target(&self) -> &FinDimCoalgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn check(&self) -> CoalgebraHomReport {
        let counital = self.target.counit_matrix().mul(&self.matrix) == self.source.counit_matrix();
        let ff = self.matrix.kron(&self.matrix);
        let mut witness = None;
        for r in 0..self.source.dim() {
            let lhs = self.target.comultiply(&self.matrix.column(r));
            let rhs = ff.apply(&self.source.comul_matrix().column(r));
            if lhs != rhs {
                witness = Some(r);
                break;
            }
        }
        CoalgebraHomReport {
            counital,
            comultiplicative: witness.is_none(),
            witness,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CoalgebraHom) -> Result<CoalgebraHom> {
        if !self.target.same_structure(&other.source) {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        Ok(CoalgebraHom {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mul(&self.matrix),
        })
    }

    /// `f°: B* -> A*` for an algebra map `f: A -> B`, as the transposed matrix.
    pub fn dual_of(f: &AlgebraHom) -> Result<CoalgebraHom> {
        Self::new_unchecked(
            dualize_algebra(f.target())?,
            dualize_algebra(f.source())?,
            f.matrix().transpose(),
        )
    }

    /// The transpose of a coalgebra map, as an algebra map of convolution algebras.
    pub fn dual(&self) -> Result<AlgebraHom> {
        AlgebraHom::new_unchecked(
            dualize_coalgebra(&self.target)?,
            dualize_coalgebra(&self.source)?,
            self.matrix.transpose(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinDimAlgebra;
    use crate::kernel::FieldSpec;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn transpose_of_algebra_map_is_coalgebra_map() {
        let a = FinDimAlgebra::truncated_power(F5, "t", 3);
        let m2 = FinDimAlgebra::matrix_algebra(F5, 2);
        let f = AlgebraHom::from_images(
            a,
            m2.clone(),
            &[m2.unit().to_vec(), m2.basis_vector(1), vec![F5.zero(); 4]],
        )
        .unwrap();
        let g = CoalgebraHom::dual_of(&f).unwrap();
        assert!(g.check().passed());
        assert!(g.dual().unwrap().check().passed());
    }

    #[test]
    fn non_coalgebra_map_is_rejected() {
        let c = FinDimCoalgebra::tensor_product(
            &dualize_algebra(&FinDimAlgebra::truncated_power(F5, "t", 2)).unwrap(),
            &dualize_algebra(&FinDimAlgebra::diagonal(F5, 1)).unwrap(),
        );
        let mut m = Matrix::identity(F5, 2);
        m.set(0, 1, F5.one());
        let err = CoalgebraHom::new(c.clone(), c, m).unwrap_err();
        assert!(matches!(err, Error::NotACoalgebraMap(_)));
    }
}
