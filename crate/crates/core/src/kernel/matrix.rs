//! Dense matrices over an exact field.
//!
//! A matrix is read as a linear map: column `j` holds the image of the
//! `j`-th basis vector. Tensor products of basis vectors use the row-major
//! composite index `(i, j) -> i * dim_right + j` throughout the crate.

use std::fmt;

use super::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Output of [`Matrix::rref_kernel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefKernel {
    pub rref: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
    /// Columns span the null space, one per free variable.
    pub kernel: Matrix,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must be rows * cols"
        );
        debug_assert!(entries.iter().all(|e| e.field() == field));
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend(r.iter().cloned());
        }
        Matrix::from_entries(field, rows.len(), cols, entries)
    }

    /// Integer-valued convenience constructor.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Self {
        Matrix::from_entries(field, v.len(), 1, v.to_vec())
    }

    pub fn row_vector(field: FieldSpec, v: &[Scalar]) -> Self {
        Matrix::from_entries(field, 1, v.len(), v.to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let idx = i * self.cols + j;
        self.entries[idx] = &self.entries[idx] + v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product `self * rhs`. Panics on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        assert_eq!(self.field, rhs.field);
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Matrix::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        Matrix::from_entries(self.field, self.rows, self.cols, entries)
    }

    /// Kronecker product; entry `(i*rb + k, j*cb + l)` is `a[i,j] * b[k,l]`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        assert_eq!(self.field, b.field);
        let (ra, ca) = self.shape();
        let (rb, cb) = b.shape();
        let mut out = Matrix::zeros(self.field, ra * rb, ca * cb);
        for i in 0..ra {
            for j in 0..ca {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let y = b.get(k, l);
                        if !y.is_zero() {
                            out.set(i * rb + k, j * cb + l, x * y);
                        }
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of a list of factors, left factor major.
    pub fn kron_all(factors: &[&Matrix]) -> Matrix {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, m| acc.kron(m))
    }

    /// Permutation matrix of the tensor swap `V ⊗ W -> W ⊗ V`.
    pub fn swap(field: FieldSpec, dim_v: usize, dim_w: usize) -> Matrix {
        let mut m = Matrix::zeros(field, dim_w * dim_v, dim_v * dim_w);
        for i in 0..dim_v {
            for j in 0..dim_w {
                m.set(j * dim_v + i, i * dim_w + j, field.one());
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::from_entries(self.field, self.rows + other.rows, self.cols, entries)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        self.transpose().vstack(&other.transpose()).transpose()
    }

    /// Reduced row echelon form, pivot columns, rank and a kernel basis in
    /// free-variable normal form.
    pub fn rref_kernel(&self) -> RrefKernel {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        let mut kernel = Matrix::zeros(m.field, m.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            kernel.set(f, k, m.field.one());
            for (pr, &pc) in pivots.iter().enumerate() {
                kernel.set(pc, k, -m.get(pr, f));
            }
        }
        RrefKernel {
            rref: m,
            pivots,
            rank,
            kernel,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref_kernel().rank
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> Matrix {
        let rk = self.rref_kernel();
        let rows: Vec<Vec<Scalar>> = (0..rk.rank).map(|i| rk.rref.row(i)).collect();
        Matrix::from_rows(self.field, self.cols, &rows)
    }

    /// Basis of the null space as column vectors.
    pub fn kernel(&self) -> Matrix {
        self.rref_kernel().kernel
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let rk = aug.rref_kernel();
        if rk.pivots.iter().take(n).copied().ne(0..n) || rk.rank < n {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, rk.rref.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Some solution `x` of `self * x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::column_vector(self.field, b));
        let rk = aug.rref_kernel();
        if rk.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in rk.pivots.iter().enumerate() {
            x[c] = rk.rref.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn pow(&self, exp: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const F5: FieldSpec = FieldSpec::PrimeField(5);
    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_has_full_rank() {
        let rk = Matrix::identity(Q, 3).rref_kernel();
        assert_eq!(rk.rank, 3);
        assert_eq!(rk.kernel.cols(), 0);
        assert_eq!(rk.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn dependent_rows_over_q() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let rk = m.rref_kernel();
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel, Matrix::from_i64(Q, &[&[-2], &[1]]));
        assert_eq!(rk.rref, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn zero_matrix_kernel() {
        let rk = Matrix::zeros(Q, 2, 3).rref_kernel();
        assert_eq!(rk.rank, 0);
        assert_eq!(rk.kernel, Matrix::identity(Q, 3));
    }

    #[test]
    fn kron_shapes_and_index_convention() {
        let i2 = Matrix::identity(F5, 2);
        assert_eq!(i2.kron(&i2), Matrix::identity(F5, 4));
        let a = Matrix::zeros(F5, 2, 3);
        let b = Matrix::zeros(F5, 4, 5);
        assert_eq!(a.kron(&b).shape(), (8, 15));
        let e11 = Matrix::from_i64(F5, &[&[1, 0], &[0, 0]]);
        let k = e11.kron(&e11);
        let mut expected = Matrix::zeros(F5, 4, 4);
        expected.set(0, 0, F5.one());
        assert_eq!(k, expected);
    }

    #[test]
    fn swap_moves_tensor_legs() {
        // e_1 ⊗ f_2 in V⊗W (dims 2, 3) has index 1*3+2 = 5; it maps to f_2 ⊗ e_1 = 2*2+1 = 5.
        let s = Matrix::swap(F5, 2, 3);
        assert!(s.get(5, 5).is_one());
        // e_0 ⊗ f_1 = 1 maps to f_1 ⊗ e_0 = 2
        assert!(s.get(2, 1).is_one());
        assert_eq!(s.mul(&Matrix::swap(F5, 3, 2)), Matrix::identity(F5, 6));
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&[Q.from_i64(3), Q.from_i64(2)]).unwrap();
        assert_eq!(x, vec![Q.from_i64(1), Q.from_i64(1)]);
        let sing = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(sing.solve(&[Q.from_i64(1), Q.from_i64(0)]).is_none());
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u64..5, r * c).prop_map(move |v| {
                Matrix::from_entries(F5, r, c, v.into_iter().map(|x| F5.from_u64(x)).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(4)) {
            let once = m.rref_kernel();
            let twice = once.rref.rref_kernel();
            prop_assert_eq!(&twice.rref, &once.rref);
            prop_assert_eq!(once.rank + once.kernel.cols(), m.cols());
            prop_assert!(m.mul(&once.kernel).is_zero());
        }

        #[test]
        fn kron_is_associative(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn kron_is_multiplicative(a in small_matrix(3), b in small_matrix(3)) {
            // (A⊗B)(A^T⊗B^T) = (AA^T)⊗(BB^T)
            let lhs = a.kron(&b).mul(&a.transpose().kron(&b.transpose()));
            let rhs = a.mul(&a.transpose()).kron(&b.mul(&b.transpose()));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
