use std::collections::BTreeMap;

use super::field_and_root;
use crate::algebra::Subspace;
use crate::error::Result;
use crate::kernel::{Matrix, Scalar};

/// `x ↦ X`, `y ↦ Y` with `YX = q·XY`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub q: Scalar,
    pub dim: usize,
    pub x: Matrix,
    pub y: Matrix,
}

impl Irrep {
    /// `YX == q·XY`.
    pub fn satisfies_relation(&self) -> bool {
        self.y.mul(&self.x) == self.x.mul(&self.y).scale(&self.q)
    }

    /// Dimension of the span of `X^i Y^j`, `i, j < n` (with `n = dim`); it is
    /// `dim²` exactly when the representation is onto the matrix algebra.
    pub fn image_dim(&self) -> usize {
        let field = self.q.field();
        let mut rows = Vec::new();
        let mut xi = Matrix::identity(field, self.dim);
        for _ in 0..self.dim {
            let mut m = xi.clone();
            for _ in 0..self.dim {
                rows.push(m.entries().to_vec());
                m = m.mul(&self.y);
            }
            xi = xi.mul(&self.x);
        }
        Subspace::span(field, self.dim * self.dim, &rows).dim()
    }

    /// `X^i Y^j` for a monomial `x^i y^j`.
    pub fn monomial(&self, i: usize, j: usize) -> Matrix {
        self.x.pow(i as u64).mul(&self.y.pow(j as u64))
    }
}

/// The representation at `(α, β)`: one-dimensional on the axes, otherwise
/// `X = αD`, `Y = βP` with `D = diag(1, q, …, q^{n-1})` and `P` the cyclic shift.
pub fn irrep(n: u64, p: u64, alpha: &Scalar, beta: &Scalar) -> Result<Irrep> {
    let (field, q) = field_and_root(n, p)?;
    if alpha.field() != field || beta.field() != field {
        return Err(crate::Error::BadParams("α and β must lie in GF(p)".into()));
    }
    if alpha.is_zero() || beta.is_zero() {
        return Ok(Irrep {
            alpha: alpha.clone(),
            beta: beta.clone(),
            q,
            dim: 1,
            x: Matrix::from_rows(field, 1, &[vec![alpha.clone()]]),
            y: Matrix::from_rows(field, 1, &[vec![beta.clone()]]),
        });
    }
    let n = n as usize;
    let mut d = Matrix::zeros(field, n, n);
    let mut shift = Matrix::zeros(field, n, n);
    for i in 0..n {
        d.set(i, i, q.pow(i as u64));
        shift.set(i, (i + 1) % n, field.one());
    }
    Ok(Irrep {
        alpha: alpha.clone(),
        beta: beta.clone(),
        q,
        dim: n,
        x: d.scale(alpha),
        y: shift.scale(beta),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepClassification {
    /// Points `(α, β)` with `αβ = 0`.
    pub one_dim: usize,
    /// Classes of `n`-dimensional irreps, keyed by `(αⁿ, βⁿ)`.
    pub n_dim_classes: usize,
    /// The lexicographically least `(α, β)` of each class, sorted.
    pub class_reps: Vec<(Scalar, Scalar)>,
}

pub fn irrep_classify(n: u64, p: u64) -> Result<IrrepClassification> {
    let (field, _) = field_and_root(n, p)?;
    let elements = field.elements().expect("finite field");
    let mut one_dim = 0;
    let mut classes: BTreeMap<(Scalar, Scalar), (Scalar, Scalar)> = BTreeMap::new();
    for a in &elements {
        for b in &elements {
            if a.is_zero() || b.is_zero() {
                one_dim += 1;
                continue;
            }
            // elements come in ascending order, so the first point seen is least
            classes
                .entry((a.pow(n), b.pow(n)))
                .or_insert_with(|| (a.clone(), b.clone()));
        }
    }
    let mut class_reps: Vec<(Scalar, Scalar)> = classes.into_values().collect();
    class_reps.sort();
    Ok(IrrepClassification {
        one_dim,
        n_dim_classes: class_reps.len(),
        class_reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraHom;
    use crate::kernel::FieldSpec;
    use crate::qplane::{oq_truncation, QPlaneKind};

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn two_dimensional_irrep_at_one_one() {
        let r = irrep(2, 5, &F5.one(), &F5.one()).unwrap();
        assert_eq!(r.x, Matrix::from_i64(F5, &[&[1, 0], &[0, 4]]));
        assert_eq!(r.y, Matrix::from_i64(F5, &[&[0, 1], &[1, 0]]));
        assert!(r.satisfies_relation());
        assert_eq!(r.image_dim(), 4);
    }

    #[test]
    fn axis_points_give_characters() {
        let r = irrep(2, 5, &F5.from_u64(2), &F5.zero()).unwrap();
        assert_eq!(r.dim, 1);
        assert_eq!(r.x.get(0, 0), &F5.from_u64(2));
        let o = irrep(2, 5, &F5.zero(), &F5.zero()).unwrap();
        assert!(o.x.is_zero() && o.y.is_zero());
    }

    #[test]
    fn classification_counts() {
        let c = irrep_classify(2, 5).unwrap();
        assert_eq!((c.one_dim, c.n_dim_classes), (9, 4));
        assert!(c.class_reps.contains(&(F5.one(), F5.one())));
        // V(4, 4) lands in the class of V(1, 1)
        assert_eq!(F5.from_u64(4).pow(2), F5.one());
        let c1 = irrep_classify(1, 5).unwrap();
        assert_eq!((c1.one_dim, c1.n_dim_classes), (9, 16));
        let c13 = irrep_classify(2, 13).unwrap();
        assert_eq!((c13.one_dim, c13.n_dim_classes), (25, 36));
    }

    #[test]
    fn irreps_are_faithful_on_their_fiber() {
        for n in [2u64, 4] {
            for a in 1..5 {
                for b in 1..5 {
                    let (alpha, beta) = (F5.from_u64(a), F5.from_u64(b));
                    let r = irrep(n, 5, &alpha, &beta).unwrap();
                    let fiber = oq_truncation(
                        n,
                        5,
                        QPlaneKind::CentralFiber {
                            c: alpha.pow(n),
                            d: beta.pow(n),
                        },
                    )
                    .unwrap();
                    let nu = n as usize;
                    let images: Vec<Vec<Scalar>> = (0..nu * nu)
                        .map(|k| r.monomial(k / nu, k % nu).entries().to_vec())
                        .collect();
                    let target = crate::algebra::FinDimAlgebra::matrix_algebra(F5, nu);
                    let f =
                        AlgebraHom::from_images(fiber.algebra.clone(), target, &images).unwrap();
                    assert!(f.is_bijective());
                }
            }
        }
    }
}
