//! Finite-dimensional coalgebras and their duality with algebras.

mod hom;
mod named;
mod structure;
mod tower;

pub use hom::{CoalgebraHom, CoalgebraHomReport};
pub use named::{construct_coalgebra, CoalgebraKind, Quiver};
pub use structure::{coradical_preserved, CoradicalReport};
pub use tower::DualTower;

use crate::algebra::{FinDimAlgebra, UnitWitness};
use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, Matrix, Scalar};

/// A coalgebra on basis `b_0..b_{n-1}` with `Δ(b_r) = Σ D_r^{ij} b_i ⊗ b_j`
/// and `ε(b_r) = e_r`.
///
/// `Δ` is stored as its `n² × n` matrix: column `r` holds `Δ(b_r)` in the
/// tensor basis `b_i ⊗ b_j ↦ i*n + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinDimCoalgebra {
    field: FieldSpec,
    labels: Vec<String>,
    comul: Matrix,
    counit: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraReport {
    pub coassociative: bool,
    pub counital: bool,
    /// First `(r, i, j, k)` where `(Δ⊗id)Δ(b_r)` and `(id⊗Δ)Δ(b_r)` differ
    /// at `b_i ⊗ b_j ⊗ b_k`.
    pub coassociativity_witness: Option<(usize, usize, usize, usize)>,
    /// `Left` is `(ε⊗id)Δ`, `Right` is `(id⊗ε)Δ`; `index` is the basis
    /// element, `coord` the wrong coordinate.
    pub counit_witness: Option<UnitWitness>,
}

impl CoalgebraReport {
    pub fn passed(&self) -> bool {
        self.coassociative && self.counital
    }
}

impl FinDimCoalgebra {
    /// Build from raw parts; only shapes are checked.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        comul: Matrix,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if comul.shape() != (n * n, n) {
            return Err(Error::InvalidInput(format!(
                "comultiplication has shape {:?}, expected ({}, {n})",
                comul.shape(),
                n * n
            )));
        }
        if counit.len() != n {
            return Err(Error::InvalidInput(format!(
                "counit has length {}, expected {n}",
                counit.len()
            )));
        }
        if comul.field() != field || counit.iter().any(|e| e.field() != field) {
            return Err(Error::InvalidInput("scalars from a different field".into()));
        }
        Ok(FinDimCoalgebra {
            field,
            labels,
            comul,
            counit,
        })
    }

    /// Build from a rule giving `Δ(b_r)` as `(i, j, coefficient)` terms.
    pub fn from_terms(
        field: FieldSpec,
        labels: Vec<String>,
        terms: impl Fn(usize) -> Vec<(usize, usize, Scalar)>,
        counit: Vec<Scalar>,
    ) -> Self {
        let n = labels.len();
        let mut comul = Matrix::zeros(field, n * n, n);
        for r in 0..n {
            for (i, j, c) in terms(r) {
                comul.add_to(i * n + j, r, &c);
            }
        }
        FinDimCoalgebra::new(field, labels, comul, counit).expect("shapes are consistent")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    /// The `n² × n` matrix of `Δ`.
    pub fn comul_matrix(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// The counit as a `1 × n` matrix.
    pub fn counit_matrix(&self) -> Matrix {
        Matrix::row_vector(self.field, &self.counit)
    }

    pub fn coeff(&self, r: usize, i: usize, j: usize) -> &Scalar {
        self.comul.get(i * self.dim() + j, r)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// `Δ(x)` in the tensor basis.
    pub fn comultiply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.comul.apply(x)
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        self.counit
            .iter()
            .zip(x)
            .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// Nonzero terms `(i, j, D_r^{ij})` of `Δ(b_r)`.
    pub fn terms(&self, r: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.coeff(r, i, j);
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// Coassociativity and counit laws, with the first failing index reported.
    pub fn validate(&self) -> CoalgebraReport {
        let n = self.dim();
        let zero = self.field.zero();
        let mut coassociativity_witness = None;
        'outer: for r in 0..n {
            let mut left = vec![zero.clone(); n * n * n];
            let mut right = vec![zero.clone(); n * n * n];
            for (i, j, c) in self.terms(r) {
                for (a, b, d) in self.terms(i) {
                    let idx = (a * n + b) * n + j;
                    left[idx] = &left[idx] + &(&c * &d);
                }
                for (a, b, d) in self.terms(j) {
                    let idx = (i * n + a) * n + b;
                    right[idx] = &right[idx] + &(&c * &d);
                }
            }
            if let Some(t) = (0..n * n * n).find(|&t| left[t] != right[t]) {
                coassociativity_witness = Some((r, t / (n * n), (t / n) % n, t % n));
                break 'outer;
            }
        }
        let mut counit_witness = None;
        'counit: for r in 0..n {
            let mut left = vec![zero.clone(); n];
            let mut right = vec![zero.clone(); n];
            for (i, j, c) in self.terms(r) {
                left[j] = &left[j] + &(&c * &self.counit[i]);
                right[i] = &right[i] + &(&c * &self.counit[j]);
            }
            let e = self.basis_vector(r);
            for t in 0..n {
                if left[t] != e[t] {
                    counit_witness = Some(UnitWitness::Left { index: r, coord: t });
                    break 'counit;
                }
                if right[t] != e[t] {
                    counit_witness = Some(UnitWitness::Right { index: r, coord: t });
                    break 'counit;
                }
            }
        }
        CoalgebraReport {
            coassociative: coassociativity_witness.is_none(),
            counital: counit_witness.is_none(),
            coassociativity_witness,
            counit_witness,
        }
    }

    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::InvalidInput(format!(
                "coalgebra axioms fail: {report:?}"
            )))
        }
    }

    /// Equality of field, comultiplication and counit, ignoring labels.
    pub fn same_structure(&self, other: &FinDimCoalgebra) -> bool {
        self.field == other.field && self.comul == other.comul && self.counit == other.counit
    }

    /// `C ⊗ D` with `Δ = (id⊗τ⊗id)(Δ_C⊗Δ_D)` and `ε = ε_C⊗ε_D`.
    pub fn tensor_product(c: &FinDimCoalgebra, d: &FinDimCoalgebra) -> Self {
        let (nc, nd) = (c.dim(), d.dim());
        let field = c.field();
        let labels = c
            .labels
            .iter()
            .flat_map(|x| d.labels.iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        let counit = c
            .counit
            .iter()
            .flat_map(|x| d.counit.iter().map(move |y| x * y))
            .collect();
        let n = nc * nd;
        FinDimCoalgebra::from_terms(
            field,
            labels,
            |r| {
                let (rc, rd) = (r / nd, r % nd);
                let mut out = Vec::new();
                for (i, j, a) in c.terms(rc) {
                    for (k, l, b) in d.terms(rd) {
                        out.push((i * nd + k, j * nd + l, &a * &b));
                    }
                }
                debug_assert!(out.iter().all(|t| t.0 < n && t.1 < n));
                out
            },
            counit,
        )
    }
}

/// The linear dual of an algebra: `Δ(b^r) = Σ c_{ij}^r b^i ⊗ b^j`,
/// `ε(b^r) = u_r`. Labels carry over unchanged.
pub fn dualize_algebra(a: &FinDimAlgebra) -> Result<FinDimCoalgebra> {
    let report = a.validate();
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "algebra axioms fail: {report:?}"
        )));
    }
    Ok(dualize_algebra_unchecked(a))
}

pub(crate) fn dualize_algebra_unchecked(a: &FinDimAlgebra) -> FinDimCoalgebra {
    FinDimCoalgebra::new(
        a.field(),
        a.labels().to_vec(),
        a.mul_matrix().transpose(),
        a.unit().to_vec(),
    )
    .expect("transposed shapes agree")
}

/// The convolution algebra of a coalgebra: `c_{ij}^r = D_r^{ij}`, unit `ε`.
pub fn dualize_coalgebra(c: &FinDimCoalgebra) -> Result<FinDimAlgebra> {
    let report = c.validate();
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "coalgebra axioms fail: {report:?}"
        )));
    }
    Ok(dualize_coalgebra_unchecked(c))
}

pub(crate) fn dualize_coalgebra_unchecked(c: &FinDimCoalgebra) -> FinDimAlgebra {
    FinDimAlgebra::new(
        c.field(),
        c.labels().to_vec(),
        c.comul_matrix().transpose(),
        c.counit().to_vec(),
    )
    .expect("transposed shapes agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Poly;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    fn s(v: i64) -> Scalar {
        F5.from_i64(v)
    }

    #[test]
    fn comatrix_from_matrix_algebra() {
        let c = dualize_algebra(&FinDimAlgebra::matrix_algebra(F5, 2)).unwrap();
        assert!(c.validate().passed());
        // Δ(E^{ij}) = Σ_r E^{ir} ⊗ E^{rj}, index i*2 + j
        for i in 0..2 {
            for j in 0..2 {
                let mut expected: Vec<(usize, usize, Scalar)> =
                    (0..2).map(|r| (i * 2 + r, r * 2 + j, s(1))).collect();
                expected.sort();
                assert_eq!(c.terms(i * 2 + j), expected);
                assert_eq!(c.counit()[i * 2 + j], s((i == j) as i64));
            }
        }
    }

    #[test]
    fn dual_numbers() {
        let a = FinDimAlgebra::truncated_power(F5, "ε", 2);
        let c = dualize_algebra(&a).unwrap();
        assert_eq!(c.terms(1), vec![(0, 1, s(1)), (1, 0, s(1))]);
        assert_eq!(c.terms(0), vec![(0, 0, s(1))]);
    }

    #[test]
    fn cyclic_group_of_order_two() {
        let a = FinDimAlgebra::truncated_polynomial("g", &Poly::from_i64(F5, &[-1, 0, 1])).unwrap();
        let c = dualize_algebra(&a).unwrap();
        assert_eq!(c.terms(0), vec![(0, 0, s(1)), (1, 1, s(1))]);
        assert_eq!(c.terms(1), vec![(0, 1, s(1)), (1, 0, s(1))]);
    }

    #[test]
    fn perturbed_comatrix_fails_coassociativity() {
        let c = dualize_algebra(&FinDimAlgebra::matrix_algebra(F5, 2)).unwrap();
        let mut comul = c.comul_matrix().clone();
        comul.set(1, 0, s(1));
        let bad =
            FinDimCoalgebra::new(F5, c.labels().to_vec(), comul, c.counit().to_vec()).unwrap();
        let r = bad.validate();
        assert!(!r.coassociative);
        assert!(r.coassociativity_witness.is_some());
    }

    #[test]
    fn zero_counit_fails() {
        let c = dualize_algebra(&FinDimAlgebra::matrix_algebra(F5, 2)).unwrap();
        let bad = FinDimCoalgebra::new(
            F5,
            c.labels().to_vec(),
            c.comul_matrix().clone(),
            vec![s(0); 4],
        )
        .unwrap();
        let r = bad.validate();
        assert!(r.coassociative && !r.counital);
        assert_eq!(
            r.counit_witness,
            Some(UnitWitness::Left { index: 0, coord: 0 })
        );
    }

    #[test]
    fn round_trip_is_identity() {
        for a in [
            FinDimAlgebra::matrix_algebra(F5, 3),
            FinDimAlgebra::upper_triangular(FieldSpec::Rationals, 3),
            FinDimAlgebra::cyclic_group_algebra(F5, "g", 4),
        ] {
            let c = dualize_algebra(&a).unwrap();
            assert_eq!(dualize_coalgebra(&c).unwrap(), a);
            assert_eq!(dualize_algebra(&dualize_coalgebra(&c).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn tensor_product_dualizes_tensor_product() {
        let a = FinDimAlgebra::truncated_power(F5, "t", 2);
        let b = FinDimAlgebra::cyclic_group_algebra(F5, "g", 2);
        let lhs = dualize_algebra(&FinDimAlgebra::tensor_product(&a, &b)).unwrap();
        let rhs = FinDimCoalgebra::tensor_product(
            &dualize_algebra(&a).unwrap(),
            &dualize_algebra(&b).unwrap(),
        );
        assert!(lhs.same_structure(&rhs));
    }
}
