//! Grouplikes, the coradical and its filtration.

use super::{dualize_coalgebra_unchecked, CoalgebraHom, FinDimCoalgebra};
use crate::algebra::{AlgebraHom, Subspace};
use crate::error::{Error, Result};
use crate::kernel::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoradicalReport {
    pub preserved: bool,
    /// An element of the target's coradical whose image leaves the source's.
    pub witness: Option<Vec<Scalar>>,
}

impl FinDimCoalgebra {
    /// The nonzero `x` with `Δx = x⊗x`, read off as the one-dimensional
    /// characters of the convolution algebra.
    pub fn grouplikes(&self) -> Result<Vec<Vec<Scalar>>> {
        let dual = dualize_coalgebra_unchecked(self);
        Ok(dual
            .one_dim_characters()?
            .into_iter()
            .map(|c| c.values)
            .collect())
    }

    pub fn is_grouplike(&self, x: &[Scalar]) -> bool {
        if x.iter().all(Scalar::is_zero) {
            return false;
        }
        let xx: Vec<Scalar> = x
            .iter()
            .flat_map(|a| x.iter().map(move |b| a * b))
            .collect();
        self.comultiply(x) == xx
    }

    /// The sum of the simple subcoalgebras: the annihilator of the radical
    /// of the convolution algebra.
    pub fn coradical(&self) -> Result<Subspace> {
        Ok(dualize_coalgebra_unchecked(self).radical()?.annihilator())
    }

    /// `C_0 ⊆ C_1 ⊆ … ⊆ C`, with `C_n = Δ⁻¹(C ⊗ C_{n-1} + C_0 ⊗ C)`.
    ///
    /// The preimage is cut out by `(C_0 ⊗ C_{n-1})^⊥ = C_0^⊥ ⊗ C_{n-1}^⊥`.
    pub fn coradical_filtration(&self) -> Result<Vec<Subspace>> {
        let n = self.dim();
        let field = self.field();
        let c0 = self.coradical()?;
        let c0_perp = c0.annihilator().basis_vectors();
        let mut levels = vec![c0];
        while !levels.last().unwrap().is_full() {
            let prev_perp = levels.last().unwrap().annihilator().basis_vectors();
            let mut rows = Vec::with_capacity(c0_perp.len() * prev_perp.len());
            for f in &c0_perp {
                for g in &prev_perp {
                    let fg: Vec<Scalar> = f
                        .iter()
                        .flat_map(|a| g.iter().map(move |b| a * b))
                        .collect();
                    rows.push(
                        Matrix::row_vector(field, &fg)
                            .mul(self.comul_matrix())
                            .row(0),
                    );
                }
            }
            let next = Subspace::column_span(&Matrix::from_rows(field, n, &rows).kernel());
            if next == *levels.last().unwrap() {
                return Err(Error::InvalidInput("coradical filtration stalled".into()));
            }
            levels.push(next);
        }
        Ok(levels)
    }
}

/// Whether `f°: B* -> A*` maps the coradical of `B*` into that of `A*`.
pub fn coradical_preserved(f: &AlgebraHom) -> Result<CoradicalReport> {
    let dual = CoalgebraHom::dual_of(f)?;
    let target_corad = dual.source().coradical()?;
    let source_corad = dual.target().coradical()?;
    for v in target_corad.basis_vectors() {
        let image = dual.apply(&v);
        if !source_corad.contains(&image) {
            return Ok(CoradicalReport {
                preserved: false,
                witness: Some(image),
            });
        }
    }
    Ok(CoradicalReport {
        preserved: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinDimAlgebra;
    use crate::coalgebra::{construct_coalgebra, dualize_algebra, CoalgebraKind};
    use crate::kernel::FieldSpec;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    fn span(c: &FinDimCoalgebra, idx: &[usize]) -> Subspace {
        Subspace::span(
            c.field(),
            c.dim(),
            &idx.iter().map(|&i| c.basis_vector(i)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn triangular_grouplikes_and_filtration() {
        let t = construct_coalgebra(&CoalgebraKind::Triangular { n: 2 }, F5).unwrap();
        // basis E11, E12, E22
        assert_eq!(
            t.grouplikes().unwrap(),
            vec![t.basis_vector(2), t.basis_vector(0)]
        );
        let f = t.coradical_filtration().unwrap();
        assert_eq!(f, vec![span(&t, &[0, 2]), Subspace::full(F5, 3)]);
    }

    #[test]
    fn comatrix_is_cosemisimple_without_grouplikes() {
        let m = construct_coalgebra(&CoalgebraKind::Comatrix { d: 2 }, F5).unwrap();
        assert!(m.grouplikes().unwrap().is_empty());
        assert_eq!(
            m.coradical_filtration().unwrap(),
            vec![Subspace::full(F5, 4)]
        );
    }

    #[test]
    fn grouplike_set_returns_its_elements() {
        let elements = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        let c = construct_coalgebra(&CoalgebraKind::Grouplike { elements }, F5).unwrap();
        let mut g = c.grouplikes().unwrap();
        g.sort();
        let mut expected: Vec<_> = (0..3).map(|i| c.basis_vector(i)).collect();
        expected.sort();
        assert_eq!(g, expected);
        assert_eq!(
            dualize_coalgebra_unchecked(&c),
            FinDimAlgebra::diagonal(F5, 3).with_labels(c.labels().to_vec())
        );
    }

    #[test]
    fn divided_power_filtration() {
        for m in 1..=4 {
            let c = construct_coalgebra(&CoalgebraKind::DividedPower { m }, F5).unwrap();
            let f = c.coradical_filtration().unwrap();
            assert_eq!(f.len(), m);
            for (i, level) in f.iter().enumerate() {
                assert_eq!(*level, span(&c, &(0..=i).collect::<Vec<_>>()));
            }
        }
    }

    #[test]
    fn line_dist_grouplikes() {
        let points = vec![(F5.zero(), 2), (F5.one(), 1)];
        let c = construct_coalgebra(&CoalgebraKind::LineDist { points }, F5).unwrap();
        assert_eq!(c.dim(), 3);
        let mut g = c.grouplikes().unwrap();
        g.sort();
        let mut expected = vec![c.basis_vector(0), c.basis_vector(2)];
        expected.sort();
        assert_eq!(g, expected);
    }

    #[test]
    fn t_to_e12_breaks_coradical() {
        let a = FinDimAlgebra::truncated_power(F5, "t", 3);
        let m2 = FinDimAlgebra::matrix_algebra(F5, 2);
        let f = AlgebraHom::from_images(
            a,
            m2.clone(),
            &[m2.unit().to_vec(), m2.basis_vector(1), vec![F5.zero(); 4]],
        )
        .unwrap();
        let r = coradical_preserved(&f).unwrap();
        assert!(!r.preserved);
        assert!(r.witness.is_some());
        assert!(
            coradical_preserved(&AlgebraHom::identity(&m2))
                .unwrap()
                .preserved
        );
    }

    #[test]
    fn commutative_semisimple_target_preserves() {
        // k[t]/(t^2) -> k×k, t -> 0 is a unital algebra map onto a semisimple target
        let a = FinDimAlgebra::truncated_power(F5, "t", 2);
        let b = FinDimAlgebra::diagonal(F5, 2);
        let f = AlgebraHom::from_images(a, b.clone(), &[b.unit().to_vec(), vec![F5.zero(); 2]])
            .unwrap();
        assert!(coradical_preserved(&f).unwrap().preserved);
    }

    #[test]
    fn grouplikes_have_counit_one() {
        let c = dualize_algebra(&FinDimAlgebra::cyclic_group_algebra(F5, "g", 4)).unwrap();
        let g = c.grouplikes().unwrap();
        assert_eq!(g.len(), 4);
        for x in &g {
            assert!(c.is_grouplike(x));
            assert!(c.epsilon(x).is_one());
        }
    }
}
