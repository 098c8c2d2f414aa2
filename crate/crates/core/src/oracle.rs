//! Exhaustive searches over small finite fields, used as independent checks
//! on the linear-algebra answers.

use crate::coalgebra::FinDimCoalgebra;
use crate::kernel::{FieldSpec, Matrix, Scalar};
use crate::qplane::Irrep;

/// Every vector of `GF(p)^dim`, in lexicographic order.
fn all_vectors(field: FieldSpec, dim: usize) -> Vec<Vec<Scalar>> {
    let elements = field.elements().expect("finite field");
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                elements.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// All nonzero `x` with `Δx = x ⊗ x`, found by trying every vector.
pub fn grouplikes_by_enumeration(c: &FinDimCoalgebra) -> Vec<Vec<Scalar>> {
    let n = c.dim();
    let field = c.field();
    all_vectors(field, n)
        .into_iter()
        .filter(|x| !x.iter().all(Scalar::is_zero))
        .filter(|x| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let lhs =
                        (0..n).fold(field.zero(), |acc, r| &acc + &(&x[r] * c.coeff(r, i, j)));
                    lhs == &x[i] * &x[j]
                })
            })
        })
        .collect()
}

/// Every invertible `d × d` matrix over a finite field.
pub fn invertible_matrices(field: FieldSpec, d: usize) -> Vec<Matrix> {
    all_vectors(field, d * d)
        .into_iter()
        .map(|e| Matrix::from_entries(field, d, d, e))
        .filter(|m| m.rank() == d)
        .collect()
}

/// Is there an invertible `T` with `T X₁ = X₂ T` and `T Y₁ = Y₂ T`?
pub fn intertwined(r1: &Irrep, r2: &Irrep, candidates: &[Matrix]) -> bool {
    r1.dim == r2.dim
        && candidates
            .iter()
            .any(|t| t.mul(&r1.x) == r2.x.mul(t) && t.mul(&r1.y) == r2.y.mul(t))
}

/// Partition `reps` into isomorphism classes by exhaustive intertwiner search;
/// each class is a sorted list of indices into `reps`.
pub fn classes_by_intertwiners(reps: &[Irrep], candidates: &[Matrix]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (k, r) in reps.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|cl| intertwined(&reps[cl[0]], r, candidates))
        {
            Some(cl) => cl.push(k),
            None => classes.push(vec![k]),
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{construct_coalgebra, CoalgebraKind};
    use crate::qplane::irrep;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn gl2_over_f5_has_480_elements() {
        assert_eq!(invertible_matrices(F5, 2).len(), 480);
    }

    #[test]
    fn grouplikes_of_a_group_coalgebra() {
        let c = construct_coalgebra(
            &CoalgebraKind::Grouplike {
                elements: vec!["a".into(), "b".into(), "c".into()],
            },
            F5,
        )
        .unwrap();
        assert_eq!(grouplikes_by_enumeration(&c).len(), 3);
    }

    #[test]
    fn same_class_iff_same_powers() {
        let gl2 = invertible_matrices(F5, 2);
        let a = irrep(2, 5, &F5.one(), &F5.one()).unwrap();
        let b = irrep(2, 5, &F5.from_u64(4), &F5.one()).unwrap();
        let c = irrep(2, 5, &F5.from_u64(2), &F5.one()).unwrap();
        assert!(intertwined(&a, &b, &gl2));
        assert!(!intertwined(&a, &c, &gl2));
    }
}
