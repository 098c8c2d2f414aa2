//! Ideals, quotients, the radical, characters and semisimple structure.

use super::{AlgebraHom, FinDimAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::kernel::{factor_over_field, FieldSpec, Matrix, Scalar};

/// An algebra map to the base field, as its row of values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let field = self.values[0].field();
        self.values
            .iter()
            .zip(x)
            .fold(field.zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

/// Radical dimension plus `(dim, center-dim)` of each simple factor of the
/// semisimple quotient, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemisimpleProfile {
    pub radical_dim: usize,
    pub factors: Vec<(usize, usize)>,
}

impl SemisimpleProfile {
    /// Radical zero and a single central simple factor of dimension `d²`.
    pub fn is_full_matrix_algebra(&self, d: usize) -> bool {
        self.radical_dim == 0 && self.factors == [(d * d, 1)]
    }

    pub fn total_dim(&self) -> usize {
        self.radical_dim + self.factors.iter().map(|f| f.0).sum::<usize>()
    }
}

impl FinDimAlgebra {
    fn check_radical_precondition(&self) -> Result<()> {
        match self.field() {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::PrimeField(p) => {
                if p as usize > self.dim() {
                    Ok(())
                } else {
                    Err(Error::CharacteristicTooSmall { p, dim: self.dim() })
                }
            }
        }
    }

    /// Smallest two-sided ideal containing `generators`, by saturation.
    pub fn ideal_closure(&self, generators: &[Vec<Scalar>]) -> Subspace {
        let n = self.dim();
        let mut ideal = Subspace::span(self.field(), n, generators);
        let left: Vec<Matrix> = (0..n)
            .map(|i| self.left_mul_matrix(&self.basis_vector(i)))
            .collect();
        let right: Vec<Matrix> = (0..n)
            .map(|i| self.right_mul_matrix(&self.basis_vector(i)))
            .collect();
        loop {
            let basis = ideal.basis_vectors();
            let mut new = Vec::with_capacity(2 * n * basis.len());
            for v in &basis {
                for i in 0..n {
                    new.push(left[i].apply(v));
                    new.push(right[i].apply(v));
                }
            }
            let next = ideal.with_vectors(&new);
            if next.dim() == ideal.dim() {
                return ideal;
            }
            ideal = next;
        }
    }

    /// Span of all products `u v` with `u ∈ left`, `v ∈ right`.
    pub fn subspace_product(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut prods = Vec::new();
        for u in left.basis_vectors() {
            for v in right.basis_vectors() {
                prods.push(self.multiply(&u, &v));
            }
        }
        Subspace::span(self.field(), self.dim(), &prods)
    }

    /// True when the powers of `ideal` reach zero within `dim` steps.
    pub fn is_nilpotent(&self, ideal: &Subspace) -> bool {
        let mut power = ideal.clone();
        for _ in 0..=self.dim() {
            if power.is_zero() {
                return true;
            }
            power = self.subspace_product(&power, ideal);
        }
        power.is_zero()
    }

    /// Quotient by a proper two-sided ideal. The quotient basis is the set of
    /// non-pivot coordinates of the ideal's echelon basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(FinDimAlgebra, AlgebraHom)> {
        let n = self.dim();
        if ideal.ambient_dim() != n {
            return Err(Error::InvalidInput(
                "ideal lives in a different space".into(),
            ));
        }
        if self.ideal_closure(&ideal.basis_vectors()) != *ideal {
            return Err(Error::NotAnIdeal);
        }
        if ideal.contains(self.unit()) {
            return Err(Error::ImproperIdeal);
        }
        let complement: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
        let m = complement.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let proj_cols: Vec<Vec<Scalar>> = (0..n).map(|j| project(&self.basis_vector(j))).collect();
        let proj = Matrix::from_columns(self.field(), m, &proj_cols);
        let labels = complement
            .iter()
            .map(|&c| self.labels()[c].clone())
            .collect();
        let quotient = FinDimAlgebra::from_fn(
            self.field(),
            labels,
            |a, b| project(&self.basis_product(complement[a], complement[b])),
            project(self.unit()),
        );
        let report = quotient.validate();
        debug_assert!(report.passed(), "quotient must inherit the algebra axioms");
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "quotient fails validation: {report:?}"
            )));
        }
        let hom = AlgebraHom::new_unchecked(self.clone(), quotient.clone(), proj)?;
        Ok((quotient, hom))
    }

    /// Jacobson radical as the iterated kernel of the trace form
    /// `(x, y) -> tr(L_x L_y)`. Needs characteristic 0 or `p > dim`.
    pub fn radical(&self) -> Result<Subspace> {
        self.check_radical_precondition()?;
        let n = self.dim();
        let field = self.field();
        let traces: Vec<Scalar> = (0..n)
            .map(|s| (0..n).fold(field.zero(), |acc, k| &acc + self.coeff(s, k, k)))
            .collect();
        let form = |x: &[Scalar], y: &[Scalar]| -> Scalar {
            let xy = self.multiply(x, y);
            xy.iter()
                .zip(&traces)
                .fold(field.zero(), |acc, (a, t)| &acc + &(a * t))
        };
        let mut current = Subspace::full(field, n);
        loop {
            let basis = current.basis_vectors();
            if basis.is_empty() {
                return Ok(current);
            }
            // Gram matrix on the current subspace; its kernel is the next stage.
            let gram_rows: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|y| basis.iter().map(|x| form(x, y)).collect())
                .collect();
            let gram = Matrix::from_rows(field, basis.len(), &gram_rows);
            let kernel = gram.kernel();
            let vecs: Vec<Vec<Scalar>> = kernel
                .column_vectors()
                .iter()
                .map(|coords| {
                    let mut v = vec![field.zero(); n];
                    for (c, b) in coords.iter().zip(&basis) {
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi = &*vi + &(c * bi);
                        }
                    }
                    v
                })
                .collect();
            let next = Subspace::span(field, n, &vecs);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// The center `{z : z b = b z for all b}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let field = self.field();
        // row (i, r), column k: c_{ki}^r - c_{ik}^r
        let mut m = Matrix::zeros(field, n * n, n);
        for i in 0..n {
            for r in 0..n {
                for k in 0..n {
                    let v = self.coeff(k, i, r) - self.coeff(i, k, r);
                    if !v.is_zero() {
                        m.set(i * n + r, k, v);
                    }
                }
            }
        }
        Subspace::column_span(&m.kernel())
    }

    /// The algebra structure on a subspace closed under multiplication and
    /// containing the unit, in the subspace's echelon coordinates.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<FinDimAlgebra> {
        let basis = sub.basis_vectors();
        let unit = sub
            .coordinates(self.unit())
            .ok_or_else(|| Error::InvalidInput("subspace does not contain the unit".into()))?;
        let mut products = Vec::with_capacity(basis.len() * basis.len());
        for x in &basis {
            for y in &basis {
                products.push(
                    sub.coordinates(&self.multiply(x, y))
                        .ok_or_else(|| Error::InvalidInput("subspace is not closed".into()))?,
                );
            }
        }
        let m = basis.len();
        let labels = super::default_labels("z", m);
        Ok(FinDimAlgebra::from_fn(
            self.field(),
            labels,
            |i, j| products[i * m + j].clone(),
            unit,
        ))
    }

    /// Primitive idempotents of a commutative semisimple algebra.
    ///
    /// Over GF(p) the splitting elements come from the fixed space of the
    /// Frobenius `z -> z^p`, which is spanned by the primitive idempotents.
    /// Over Q every basis element is used and each minimal polynomial must
    /// split into linear factors.
    pub(crate) fn primitive_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        let n = self.dim();
        let field = self.field();
        let generators: Vec<Vec<Scalar>> = match field {
            FieldSpec::PrimeField(p) => {
                let cols: Vec<Vec<Scalar>> = (0..n)
                    .map(|k| self.power(&self.basis_vector(k), p))
                    .collect();
                let frob = Matrix::from_columns(field, n, &cols);
                frob.sub(&Matrix::identity(field, n))
                    .kernel()
                    .column_vectors()
            }
            FieldSpec::Rationals => (0..n).map(|k| self.basis_vector(k)).collect(),
        };
        let mut idempotents = vec![self.unit().to_vec()];
        for z in &generators {
            let mut next = Vec::with_capacity(idempotents.len());
            for e in &idempotents {
                let w = self.multiply(z, e);
                let mp = self.minimal_polynomial_in(&w, e);
                let fac = factor_over_field(&mp)?;
                if !fac.splits_linearly() {
                    return Err(Error::NotSplit(mp.to_string()));
                }
                if fac.factors.iter().any(|(_, m)| *m > 1) {
                    return Err(Error::InvalidInput("algebra is not semisimple".into()));
                }
                let roots = fac.linear_roots();
                if roots.len() == 1 {
                    next.push(e.clone());
                    continue;
                }
                for (k, lk) in roots.iter().enumerate() {
                    let mut acc = e.clone();
                    for (l, ll) in roots.iter().enumerate() {
                        if l == k {
                            continue;
                        }
                        let shifted: Vec<Scalar> =
                            w.iter().zip(e).map(|(wi, ei)| wi - &(ll * ei)).collect();
                        let scale = (lk - ll).inv().expect("distinct roots");
                        let factor: Vec<Scalar> = shifted.iter().map(|s| s * &scale).collect();
                        acc = self.multiply(&acc, &factor);
                    }
                    next.push(acc);
                }
            }
            idempotents = next;
        }
        Ok(idempotents)
    }

    /// All algebra maps to the base field, sorted by their value rows.
    pub fn one_dim_characters(&self) -> Result<Vec<Character>> {
        let radical = self.radical()?;
        let (semisimple, p1) = self.quotient(&radical)?;
        let n = semisimple.dim();
        let mut commutators = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let a = semisimple.basis_product(i, j);
                let b = semisimple.basis_product(j, i);
                commutators.push(a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<_>>());
            }
        }
        let comm_ideal = semisimple.ideal_closure(&commutators);
        if comm_ideal.contains(semisimple.unit()) {
            return Ok(Vec::new());
        }
        let (abelian, p2) = semisimple.quotient(&comm_ideal)?;
        let projection = p2.matrix().mul(p1.matrix());
        let mut chars = Vec::new();
        for e in abelian.primitive_idempotents()? {
            let images: Vec<Vec<Scalar>> = (0..abelian.dim())
                .map(|k| abelian.multiply(&abelian.basis_vector(k), &e))
                .collect();
            if Subspace::span(abelian.field(), abelian.dim(), &images).dim() != 1 {
                continue;
            }
            let pivot = e
                .iter()
                .position(|x| !x.is_zero())
                .expect("idempotent is nonzero");
            let inv = e[pivot].inv().unwrap();
            let on_abelian: Vec<Scalar> = images.iter().map(|v| &v[pivot] * &inv).collect();
            let row = Matrix::row_vector(abelian.field(), &on_abelian).mul(&projection);
            chars.push(Character { values: row.row(0) });
        }
        chars.sort();
        Ok(chars)
    }

    /// Radical dimension and the `(dim, center-dim)` pairs of the simple
    /// factors of the semisimple quotient.
    pub fn semisimple_profile(&self) -> Result<SemisimpleProfile> {
        let radical = self.radical()?;
        let (semisimple, _) = self.quotient(&radical)?;
        let mut factors = semisimple.simple_factor_dims()?;
        factors.sort();
        Ok(SemisimpleProfile {
            radical_dim: radical.dim(),
            factors,
        })
    }

    /// `(dim, center-dim)` of each block, for a semisimple algebra.
    pub(crate) fn simple_factor_dims(&self) -> Result<Vec<(usize, usize)>> {
        let center = self.center();
        let zalg = self.subalgebra(&center)?;
        let zbasis = center.basis_vectors();
        let n = self.dim();
        let mut out = Vec::new();
        for coords in zalg.primitive_idempotents()? {
            let mut e = vec![self.field().zero(); n];
            for (c, b) in coords.iter().zip(&zbasis) {
                for (ei, bi) in e.iter_mut().zip(b) {
                    *ei = &*ei + &(c * bi);
                }
            }
            let block: Vec<Vec<Scalar>> = (0..n)
                .map(|k| self.multiply(&e, &self.basis_vector(k)))
                .collect();
            let zblock: Vec<Vec<Scalar>> = zbasis.iter().map(|z| self.multiply(&e, z)).collect();
            out.push((
                Subspace::span(self.field(), n, &block).dim(),
                Subspace::span(self.field(), n, &zblock).dim(),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Poly;

    const F5: FieldSpec = FieldSpec::PrimeField(5);
    const Q: FieldSpec = FieldSpec::Rationals;

    fn e(a: &FinDimAlgebra, i: usize) -> Vec<Scalar> {
        a.basis_vector(i)
    }

    #[test]
    fn ideal_closure_examples() {
        let m2 = FinDimAlgebra::matrix_algebra(F5, 2);
        assert!(m2.ideal_closure(&[e(&m2, 1)]).is_full());
        let dual_numbers = FinDimAlgebra::truncated_power(F5, "e", 2);
        let i = dual_numbers.ideal_closure(&[e(&dual_numbers, 1)]);
        assert_eq!(i, Subspace::span(F5, 2, &[e(&dual_numbers, 1)]));
    }

    #[test]
    fn quotient_of_truncated_power() {
        let a = FinDimAlgebra::truncated_power(F5, "t", 3);
        let ideal = a.ideal_closure(&[e(&a, 2)]);
        let (q, proj) = a.quotient(&ideal).unwrap();
        assert!(q.same_structure(&FinDimAlgebra::truncated_power(F5, "e", 2)));
        assert!(proj.check().passed());
    }

    #[test]
    fn quotient_of_triangular_by_radical() {
        let t2 = FinDimAlgebra::upper_triangular(F5, 2);
        let rad = t2.radical().unwrap();
        assert_eq!(rad, Subspace::span(F5, 3, &[e(&t2, 1)]));
        let (q, _) = t2.quotient(&rad).unwrap();
        assert!(q.same_structure(&FinDimAlgebra::diagonal(F5, 2)));
    }

    #[test]
    fn quotient_errors() {
        let a = FinDimAlgebra::truncated_power(F5, "t", 3);
        // span(t) alone is not closed: t * t = t^2
        let not_ideal = Subspace::span(F5, 3, &[e(&a, 1)]);
        assert_eq!(a.quotient(&not_ideal).unwrap_err(), Error::NotAnIdeal);
        assert_eq!(
            a.quotient(&Subspace::full(F5, 3)).unwrap_err(),
            Error::ImproperIdeal
        );
    }

    #[test]
    fn radicals() {
        assert!(FinDimAlgebra::matrix_algebra(F5, 2)
            .radical()
            .unwrap()
            .is_zero());
        let d = FinDimAlgebra::truncated_power(F5, "e", 2);
        assert_eq!(d.radical().unwrap().dim(), 1);
        let big = FinDimAlgebra::truncated_power(F5, "t", 5);
        assert_eq!(
            big.radical(),
            Err(Error::CharacteristicTooSmall { p: 5, dim: 5 })
        );
        let q = FinDimAlgebra::upper_triangular(Q, 3);
        assert_eq!(q.radical().unwrap().dim(), 3);
    }

    #[test]
    fn characters_examples() {
        assert!(FinDimAlgebra::matrix_algebra(F5, 2)
            .one_dim_characters()
            .unwrap()
            .is_empty());
        let a = FinDimAlgebra::cyclic_group_algebra(F5, "t", 2);
        let chars = a.one_dim_characters().unwrap();
        let values: Vec<Vec<Scalar>> = chars.into_iter().map(|c| c.values).collect();
        assert_eq!(
            values,
            vec![vec![F5.one(), F5.one()], vec![F5.one(), F5.from_u64(4)]]
        );
        let d = FinDimAlgebra::truncated_power(F5, "e", 2);
        let chars = d.one_dim_characters().unwrap();
        assert_eq!(
            chars,
            vec![Character {
                values: vec![F5.one(), F5.zero()]
            }]
        );
    }

    #[test]
    fn characters_over_q_need_splitting() {
        let split =
            FinDimAlgebra::truncated_polynomial("t", &Poly::from_i64(Q, &[-1, 0, 1])).unwrap();
        assert_eq!(split.one_dim_characters().unwrap().len(), 2);
        let nonsplit =
            FinDimAlgebra::truncated_polynomial("t", &Poly::from_i64(Q, &[1, 0, 1])).unwrap();
        assert!(matches!(
            nonsplit.one_dim_characters(),
            Err(Error::NotSplit(_))
        ));
    }

    #[test]
    fn profiles() {
        let m2 = FinDimAlgebra::matrix_algebra(F5, 2);
        assert_eq!(
            m2.semisimple_profile().unwrap(),
            SemisimpleProfile {
                radical_dim: 0,
                factors: vec![(4, 1)]
            }
        );
        let t2 = FinDimAlgebra::upper_triangular(F5, 2);
        assert_eq!(
            t2.semisimple_profile().unwrap(),
            SemisimpleProfile {
                radical_dim: 1,
                factors: vec![(1, 1), (1, 1)]
            }
        );
        // GF(5)[t]/(t^2 - 2) is the field GF(25)
        let f25 =
            FinDimAlgebra::truncated_polynomial("t", &Poly::from_i64(F5, &[-2, 0, 1])).unwrap();
        assert_eq!(
            f25.semisimple_profile().unwrap(),
            SemisimpleProfile {
                radical_dim: 0,
                factors: vec![(2, 2)]
            }
        );
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        let m3 = FinDimAlgebra::matrix_algebra(Q, 3);
        assert_eq!(m3.center(), Subspace::span(Q, 9, &[m3.unit().to_vec()]));
    }

    #[test]
    fn radical_quotient_is_semisimple_and_radical_nilpotent() {
        let algebras = [
            FinDimAlgebra::upper_triangular(FieldSpec::PrimeField(7), 3),
            FinDimAlgebra::truncated_power(F5, "t", 4),
            FinDimAlgebra::tensor_product(
                &FinDimAlgebra::upper_triangular(FieldSpec::PrimeField(11), 2),
                &FinDimAlgebra::truncated_power(FieldSpec::PrimeField(11), "s", 2),
            ),
        ];
        for a in algebras {
            let rad = a.radical().unwrap();
            assert!(a.is_nilpotent(&rad));
            let (q, _) = a.quotient(&rad).unwrap();
            assert!(q.radical().unwrap().is_zero());
            let profile = a.semisimple_profile().unwrap();
            assert_eq!(profile.total_dim(), a.dim());
            for ch in a.one_dim_characters().unwrap() {
                for v in rad.basis_vectors() {
                    assert!(ch.eval(&v).is_zero());
                }
            }
        }
    }
}
