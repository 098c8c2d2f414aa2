//! Finite-dimensional associative unital algebras given by structure constants.

mod hom;
mod structure;
mod subspace;

pub use hom::{AlgebraHom, HomReport};
pub use structure::{Character, SemisimpleProfile};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, Matrix, Poly, Scalar};

/// An algebra on basis `b_0..b_{n-1}` with `b_i b_j = Σ_r c_{ij}^r b_r` and
/// `1 = Σ_r u_r b_r`.
///
/// The multiplication is stored as the `n × n²` matrix of `m: A⊗A -> A`, so
/// `c_{ij}^r` sits at row `r`, column `i*n + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinDimAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    mul: Matrix,
    unit: Vec<Scalar>,
}

/// Which unit law failed, and where.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitWitness {
    /// `Σ_i u_i c_{ij}^r ≠ δ_{jr}` at `(j, r)`.
    Left { index: usize, coord: usize },
    /// `Σ_j u_j c_{ij}^r ≠ δ_{ir}` at `(i, r)`.
    Right { index: usize, coord: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub associative: bool,
    pub unital: bool,
    /// First `(i, j, k, t)` where `(b_i b_j) b_k` and `b_i (b_j b_k)` differ in coordinate `t`.
    pub associativity_witness: Option<(usize, usize, usize, usize)>,
    pub unit_witness: Option<UnitWitness>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associative && self.unital
    }
}

pub(crate) fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn power_label(var: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn unit_label(d: usize, i: usize, j: usize) -> String {
    if d < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{},{}", i + 1, j + 1)
    }
}

impl FinDimAlgebra {
    /// Build from raw parts; only shapes are checked here, the axioms are
    /// the job of [`FinDimAlgebra::validate`].
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mul: Matrix,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if mul.shape() != (n, n * n) {
            return Err(Error::InvalidInput(format!(
                "multiplication has shape {:?}, expected ({n}, {})",
                mul.shape(),
                n * n
            )));
        }
        if unit.len() != n {
            return Err(Error::InvalidInput(format!(
                "unit has length {}, expected {n}",
                unit.len()
            )));
        }
        if mul.field() != field || unit.iter().any(|u| u.field() != field) {
            return Err(Error::InvalidInput("scalars from a different field".into()));
        }
        Ok(FinDimAlgebra {
            field,
            labels,
            mul,
            unit,
        })
    }

    /// Build from a product rule on basis indices.
    pub fn from_fn(
        field: FieldSpec,
        labels: Vec<String>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Self {
        let n = labels.len();
        let mut mul = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                assert_eq!(v.len(), n);
                for (r, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        mul.set(r, i * n + j, c);
                    }
                }
            }
        }
        FinDimAlgebra::new(field, labels, mul, unit).expect("shapes are consistent")
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

    /// The `n × n²` matrix of the multiplication map.
    pub fn mul_matrix(&self) -> &Matrix {
        &self.mul
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// The unit map `k -> A` as an `n × 1` matrix.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column_vector(self.field, &self.unit)
    }

    pub fn coeff(&self, i: usize, j: usize, r: usize) -> &Scalar {
        self.mul.get(r, i * self.dim() + j)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mul.column(i * self.dim() + j)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let col = i * n + j;
                for (r, o) in out.iter_mut().enumerate() {
                    let c = self.mul.get(r, col);
                    if !c.is_zero() {
                        *o = &*o + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `y -> x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| self.multiply(x, &self.basis_vector(k)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of right multiplication `y -> y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| self.multiply(&self.basis_vector(k), x))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    pub fn power(&self, x: &[Scalar], k: u64) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Associativity and unit laws, with the first failing index reported.
    pub fn validate(&self) -> AlgebraReport {
        let n = self.dim();
        let mut associativity_witness = None;
        // nonzero entries of each column b_s b_k of the multiplication matrix
        let columns: Vec<Vec<(usize, &Scalar)>> = (0..n * n)
            .map(|c| {
                (0..n)
                    .map(|t| (t, self.mul.get(t, c)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let combine = |coeffs: &[(usize, &Scalar)], col: &dyn Fn(usize) -> usize| {
            let mut out = vec![self.field.zero(); n];
            for &(s, c) in coeffs {
                for &(t, v) in &columns[col(s)] {
                    out[t] = &out[t] + &(c * v);
                }
            }
            out
        };
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // (b_i b_j) b_k against b_i (b_j b_k)
                    let lhs = combine(&columns[i * n + j], &|s| s * n + k);
                    let rhs = combine(&columns[j * n + k], &|s| i * n + s);
                    if let Some(t) = (0..n).find(|&t| lhs[t] != rhs[t]) {
                        associativity_witness = Some((i, j, k, t));
                        break 'outer;
                    }
                }
            }
        }
        let mut unit_witness = None;
        'unit: for j in 0..n {
            let left = self.multiply(&self.unit, &self.basis_vector(j));
            let right = self.multiply(&self.basis_vector(j), &self.unit);
            let e = self.basis_vector(j);
            for r in 0..n {
                if left[r] != e[r] {
                    unit_witness = Some(UnitWitness::Left { index: j, coord: r });
                    break 'unit;
                }
                if right[r] != e[r] {
                    unit_witness = Some(UnitWitness::Right { index: j, coord: r });
                    break 'unit;
                }
            }
        }
        AlgebraReport {
            associative: associativity_witness.is_none(),
            unital: unit_witness.is_none(),
            associativity_witness,
            unit_witness,
        }
    }

    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::InvalidInput(format!(
                "algebra axioms fail: {report:?}"
            )))
        }
    }

    /// Equality of field, multiplication and unit, ignoring labels.
    pub fn same_structure(&self, other: &FinDimAlgebra) -> bool {
        self.field == other.field && self.mul == other.mul && self.unit == other.unit
    }

    /// Minimal polynomial of `x` inside the corner with identity `one`
    /// (pass the algebra unit for the usual minimal polynomial).
    pub fn minimal_polynomial_in(&self, x: &[Scalar], one: &[Scalar]) -> Poly {
        let mut powers: Vec<Vec<Scalar>> = vec![one.to_vec()];
        loop {
            let next = self.multiply(powers.last().unwrap(), x);
            let basis = Matrix::from_columns(self.field, self.dim(), &powers);
            if let Some(coeffs) = basis.solve(&next) {
                let mut c: Vec<Scalar> = coeffs.iter().map(|a| -a).collect();
                c.push(self.field.one());
                return Poly::new(self.field, c);
            }
            powers.push(next);
        }
    }

    pub fn minimal_polynomial(&self, x: &[Scalar]) -> Poly {
        self.minimal_polynomial_in(x, &self.unit.clone())
    }

    // --- named algebras -------------------------------------------------

    /// The full matrix algebra `M_d` on matrix units `E_{ij}` (index `i*d + j`).
    pub fn matrix_algebra(field: FieldSpec, d: usize) -> Self {
        let n = d * d;
        let labels = (0..n).map(|k| unit_label(d, k / d, k % d)).collect();
        let mut unit = vec![field.zero(); n];
        for i in 0..d {
            unit[i * d + i] = field.one();
        }
        FinDimAlgebra::from_fn(
            field,
            labels,
            |a, b| {
                let mut v = vec![field.zero(); n];
                let (i, j) = (a / d, a % d);
                let (k, l) = (b / d, b % d);
                if j == k {
                    v[i * d + l] = field.one();
                }
                v
            },
            unit,
        )
    }

    /// Upper triangular `n × n` matrices, basis `E_{ij}` with `i ≤ j` in
    /// lexicographic order.
    pub fn upper_triangular(field: FieldSpec, n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
        let labels = pairs.iter().map(|&(i, j)| unit_label(n, i, j)).collect();
        let dim = pairs.len();
        let mut unit = vec![field.zero(); dim];
        for i in 0..n {
            unit[index(i, i).unwrap()] = field.one();
        }
        FinDimAlgebra::from_fn(
            field,
            labels,
            |a, b| {
                let mut v = vec![field.zero(); dim];
                let (i, j) = pairs[a];
                let (k, l) = pairs[b];
                if j == k {
                    v[index(i, l).unwrap()] = field.one();
                }
                v
            },
            unit,
        )
    }

    /// `k[var]/(f)` for a monic `f` of positive degree, basis `1, var, var^2, …`.
    pub fn truncated_polynomial(var: &str, f: &Poly) -> Result<Self> {
        let field = f.field();
        let n = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::BadParams("modulus must have positive degree".into())),
        };
        if !f.leading().is_one() {
            return Err(Error::BadParams("modulus must be monic".into()));
        }
        let labels = (0..n).map(|k| power_label(var, k)).collect();
        let mut powers: Vec<Poly> = Vec::with_capacity(2 * n);
        let mut cur = Poly::one(field);
        for _ in 0..2 * n - 1 {
            powers.push(cur.rem(f));
            cur = cur.mul(&Poly::t(field));
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Ok(FinDimAlgebra::from_fn(
            field,
            labels,
            |i, j| (0..n).map(|r| powers[i + j].coeff(r)).collect(),
            unit,
        ))
    }

    /// `k[t]/(t^n)`.
    pub fn truncated_power(field: FieldSpec, var: &str, n: usize) -> Self {
        let mut c = vec![field.zero(); n + 1];
        c[n] = field.one();
        Self::truncated_polynomial(var, &Poly::new(field, c)).expect("monic of positive degree")
    }

    /// The group algebra of the cyclic group of order `m`, basis `1, g, …, g^{m-1}`.
    pub fn cyclic_group_algebra(field: FieldSpec, var: &str, m: usize) -> Self {
        let mut c = vec![field.zero(); m + 1];
        c[0] = field.from_i64(-1);
        c[m] = field.one();
        Self::truncated_polynomial(var, &Poly::new(field, c)).expect("monic of positive degree")
    }

    /// `k^m` with orthogonal idempotent basis.
    pub fn diagonal(field: FieldSpec, m: usize) -> Self {
        FinDimAlgebra::from_fn(
            field,
            default_labels("e", m),
            |i, j| {
                let mut v = vec![field.zero(); m];
                if i == j {
                    v[i] = field.one();
                }
                v
            },
            vec![field.one(); m],
        )
    }

    /// Plain tensor product algebra on the `A⊗B` basis (index `i*dim_b + j`).
    pub fn tensor_product(a: &FinDimAlgebra, b: &FinDimAlgebra) -> Self {
        let field = a.field;
        let nb = b.dim();
        let labels = a
            .labels
            .iter()
            .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        let unit =
            Matrix::column_vector(field, &a.unit).kron(&Matrix::column_vector(field, &b.unit));
        FinDimAlgebra::from_fn(
            field,
            labels,
            |p, q| {
                let (i1, j1) = (p / nb, p % nb);
                let (i2, j2) = (q / nb, q % nb);
                let x = Matrix::column_vector(field, &a.basis_product(i1, i2));
                let y = Matrix::column_vector(field, &b.basis_product(j1, j2));
                x.kron(&y).column(0)
            },
            unit.column(0),
        )
    }
}
