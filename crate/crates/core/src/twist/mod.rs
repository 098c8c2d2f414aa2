//! Twisting and cotwisting maps, twisted tensor products and crossed
//! product coalgebras and bialgebras.
//!
//! Composite indices are row-major with the left factor major, so in
//! `B⊗A` the vector `b_j ⊗ a_i` has index `j*dim A + i`.

mod bialgebra;
mod corpus;

pub use bialgebra::{
    crossed_bialgebra, klein_four_instance, solve_cotwist, sweedler_antipode, sweedler_instance,
    verify_crossed_bialgebra_duality, Bialgebra, BialgebraReport, CrossedInstance, CrossedReport,
};
pub use corpus::{corpus_pool, run_twist_corpus, CorpusTally};

use crate::algebra::{AlgebraHom, FinDimAlgebra};
use crate::coalgebra::{dualize_algebra, FinDimCoalgebra};
use crate::error::{Error, Result};
use crate::kernel::Matrix;

/// `ρ: B⊗A -> A⊗B`, rows indexed by `A⊗B`, columns by `B⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingMap {
    a: FinDimAlgebra,
    b: FinDimAlgebra,
    matrix: Matrix,
}

/// `φ: C⊗D -> D⊗C`, rows indexed by `D⊗C`, columns by `C⊗D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotwistingMap {
    c: FinDimCoalgebra,
    d: FinDimCoalgebra,
    matrix: Matrix,
}

/// The first entry where the two sides of a law differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawWitness {
    pub law: &'static str,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistReport {
    pub normal: bool,
    pub multiplicative: bool,
    pub normal_witness: Option<LawWitness>,
    pub multiplicative_witness: Option<LawWitness>,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.normal && self.multiplicative
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotwistReport {
    pub conormal: bool,
    pub comultiplicative: bool,
    pub conormal_witness: Option<LawWitness>,
    pub comultiplicative_witness: Option<LawWitness>,
}

impl CotwistReport {
    pub fn passed(&self) -> bool {
        self.conormal && self.comultiplicative
    }
}

/// Where `(A #_ρ B)*` and the crossed coalgebra on `A*⊗B*` first differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityWitness {
    Comul { row: usize, col: usize },
    Counit(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub equal: bool,
    pub witness: Option<DualityWitness>,
}

fn first_difference(lhs: &Matrix, rhs: &Matrix) -> Option<(usize, usize)> {
    assert_eq!(lhs.shape(), rhs.shape());
    let cols = lhs.cols();
    lhs.entries()
        .iter()
        .zip(rhs.entries())
        .position(|(x, y)| x != y)
        .map(|k| (k / cols, k % cols))
}

/// Compare the two sides of each named law, stopping at the first failure.
fn first_failing_law(laws: &[(&'static str, Matrix, Matrix)]) -> Option<LawWitness> {
    laws.iter().find_map(|(law, lhs, rhs)| {
        first_difference(lhs, rhs).map(|(row, col)| LawWitness { law, row, col })
    })
}

impl TwistingMap {
    pub fn new(a: FinDimAlgebra, b: FinDimAlgebra, matrix: Matrix) -> Result<Self> {
        let n = a.dim() * b.dim();
        if matrix.shape() != (n, n) {
            return Err(Error::InvalidInput(format!(
                "twisting map has shape {:?}, expected ({n}, {n})",
                matrix.shape()
            )));
        }
        Ok(TwistingMap { a, b, matrix })
    }

    /// The tensor swap `σ(b⊗a) = a⊗b`.
    pub fn swap(a: &FinDimAlgebra, b: &FinDimAlgebra) -> Self {
        let m = Matrix::swap(a.field(), b.dim(), a.dim());
        TwistingMap {
            a: a.clone(),
            b: b.clone(),
            matrix: m,
        }
    }

    pub fn a(&self) -> &FinDimAlgebra {
        &self.a
    }

    pub fn b(&self) -> &FinDimAlgebra {
        &self.b
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Normality and the two multiplicativity identities, as matrix equations.
    pub fn check(&self) -> TwistReport {
        let field = self.a.field();
        let (ia, ib) = (
            Matrix::identity(field, self.a.dim()),
            Matrix::identity(field, self.b.dim()),
        );
        let (ea, eb) = (self.a.unit_matrix(), self.b.unit_matrix());
        let (ma, mb) = (self.a.mul_matrix(), self.b.mul_matrix());
        let rho = &self.matrix;
        let normal_witness = first_failing_law(&[
            ("unit-of-b", rho.mul(&eb.kron(&ia)), ia.kron(&eb)),
            ("unit-of-a", rho.mul(&ib.kron(&ea)), ea.kron(&ib)),
        ]);
        let multiplicative_witness = first_failing_law(&[
            (
                "multiplication-of-a",
                rho.mul(&ib.kron(ma)),
                ma.kron(&ib).mul(&ia.kron(rho)).mul(&rho.kron(&ia)),
            ),
            (
                "multiplication-of-b",
                rho.mul(&mb.kron(&ia)),
                ia.kron(mb).mul(&rho.kron(&ib)).mul(&ib.kron(rho)),
            ),
        ]);
        TwistReport {
            normal: normal_witness.is_none(),
            multiplicative: multiplicative_witness.is_none(),
            normal_witness,
            multiplicative_witness,
        }
    }

    /// `m_ρ = (m_A⊗m_B)(id⊗ρ⊗id)` with unit `1⊗1`, without checking `ρ`.
    pub fn product_unchecked(&self) -> FinDimAlgebra {
        let field = self.a.field();
        let (ia, ib) = (
            Matrix::identity(field, self.a.dim()),
            Matrix::identity(field, self.b.dim()),
        );
        let mul = self
            .a
            .mul_matrix()
            .kron(self.b.mul_matrix())
            .mul(&Matrix::kron_all(&[&ia, &self.matrix, &ib]));
        let unit = self.a.unit_matrix().kron(&self.b.unit_matrix()).column(0);
        let labels = self
            .a
            .labels()
            .iter()
            .flat_map(|x| self.b.labels().iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        FinDimAlgebra::new(field, labels, mul, unit).expect("shapes are consistent")
    }
}

impl CotwistingMap {
    pub fn new(c: FinDimCoalgebra, d: FinDimCoalgebra, matrix: Matrix) -> Result<Self> {
        let n = c.dim() * d.dim();
        if matrix.shape() != (n, n) {
            return Err(Error::InvalidInput(format!(
                "cotwisting map has shape {:?}, expected ({n}, {n})",
                matrix.shape()
            )));
        }
        Ok(CotwistingMap { c, d, matrix })
    }

    /// The tensor swap `c⊗d -> d⊗c`.
    pub fn swap(c: &FinDimCoalgebra, d: &FinDimCoalgebra) -> Self {
        let m = Matrix::swap(c.field(), c.dim(), d.dim());
        CotwistingMap {
            c: c.clone(),
            d: d.clone(),
            matrix: m,
        }
    }

    pub fn c(&self) -> &FinDimCoalgebra {
        &self.c
    }

    pub fn d(&self) -> &FinDimCoalgebra {
        &self.d
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn check(&self) -> CotwistReport {
        let field = self.c.field();
        let (ic, id) = (
            Matrix::identity(field, self.c.dim()),
            Matrix::identity(field, self.d.dim()),
        );
        let (ec, ed) = (self.c.counit_matrix(), self.d.counit_matrix());
        let (dc, dd) = (self.c.comul_matrix(), self.d.comul_matrix());
        let phi = &self.matrix;
        let conormal_witness = first_failing_law(&[
            ("counit-of-d", ed.kron(&ic).mul(phi), ic.kron(&ed)),
            ("counit-of-c", id.kron(&ec).mul(phi), ec.kron(&id)),
        ]);
        let comultiplicative_witness = first_failing_law(&[
            (
                "comultiplication-of-c",
                id.kron(dc).mul(phi),
                phi.kron(&ic).mul(&ic.kron(phi)).mul(&dc.kron(&id)),
            ),
            (
                "comultiplication-of-d",
                dd.kron(&ic).mul(phi),
                id.kron(phi).mul(&phi.kron(&id)).mul(&ic.kron(dd)),
            ),
        ]);
        CotwistReport {
            conormal: conormal_witness.is_none(),
            comultiplicative: comultiplicative_witness.is_none(),
            conormal_witness,
            comultiplicative_witness,
        }
    }

    /// `Δ_φ = (id⊗φ⊗id)(Δ_C⊗Δ_D)` with counit `ε_C⊗ε_D`, without checking `φ`.
    pub fn coproduct_unchecked(&self) -> FinDimCoalgebra {
        let field = self.c.field();
        let (ic, id) = (
            Matrix::identity(field, self.c.dim()),
            Matrix::identity(field, self.d.dim()),
        );
        let comul = Matrix::kron_all(&[&ic, &self.matrix, &id])
            .mul(&self.c.comul_matrix().kron(self.d.comul_matrix()));
        let counit = self.c.counit_matrix().kron(&self.d.counit_matrix()).row(0);
        let labels = self
            .c
            .labels()
            .iter()
            .flat_map(|x| self.d.labels().iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        FinDimCoalgebra::new(field, labels, comul, counit).expect("shapes are consistent")
    }
}

pub fn check_twisting_map(rho: &TwistingMap) -> TwistReport {
    rho.check()
}

pub fn check_cotwisting_map(phi: &CotwistingMap) -> CotwistReport {
    phi.check()
}

fn require_twist(rho: &TwistingMap) -> Result<()> {
    let report = rho.check();
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidTwist(format!("{report:?}")))
    }
}

fn require_cotwist(phi: &CotwistingMap) -> Result<()> {
    let report = phi.check();
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidCotwist(format!("{report:?}")))
    }
}

/// `A #_ρ B`; refused unless `ρ` is normal and multiplicative.
pub fn twisted_product(rho: &TwistingMap) -> Result<FinDimAlgebra> {
    require_twist(rho)?;
    Ok(rho.product_unchecked())
}

/// The crossed product coalgebra of `φ`; refused unless `φ` passes its check.
pub fn crossed_coalgebra(phi: &CotwistingMap) -> Result<FinDimCoalgebra> {
    require_cotwist(phi)?;
    Ok(phi.coproduct_unchecked())
}

/// `ρ°: A*⊗B* -> B*⊗A*`, which on the fixed bases is just `ρ` transposed.
pub fn dual_cotwist(rho: &TwistingMap) -> Result<CotwistingMap> {
    require_twist(rho)?;
    Ok(dual_cotwist_unchecked(rho))
}

pub(crate) fn dual_cotwist_unchecked(rho: &TwistingMap) -> CotwistingMap {
    CotwistingMap {
        c: crate::coalgebra::dualize_algebra_unchecked(&rho.a),
        d: crate::coalgebra::dualize_algebra_unchecked(&rho.b),
        matrix: rho.matrix.transpose(),
    }
}

/// `(A #_ρ B)*` against the crossed coalgebra of `ρ°`, entrywise.
pub fn verify_twisted_duality(rho: &TwistingMap) -> Result<DualityReport> {
    let lhs = dualize_algebra(&twisted_product(rho)?)?;
    let rhs = crossed_coalgebra(&dual_cotwist(rho)?)?;
    let witness = match first_difference(lhs.comul_matrix(), rhs.comul_matrix()) {
        Some((row, col)) => Some(DualityWitness::Comul { row, col }),
        None => lhs
            .counit()
            .iter()
            .zip(rhs.counit())
            .position(|(x, y)| x != y)
            .map(DualityWitness::Counit),
    };
    Ok(DualityReport {
        equal: witness.is_none(),
        witness,
    })
}

/// `ρ(t^i ⊗ a) = θ^i(a) ⊗ t^i` for `B = k[t]/(t^N)`; the truncated Ore extension.
pub fn ore_twist(a: &FinDimAlgebra, theta: &AlgebraHom, n: usize) -> Result<TwistingMap> {
    if n == 0 {
        return Err(Error::BadParams(
            "truncation order must be at least 1".into(),
        ));
    }
    if !theta.source().same_structure(a) || !theta.target().same_structure(a) {
        return Err(Error::NotAnAutomorphism(
            "θ is not an endomorphism of a".into(),
        ));
    }
    let report = theta.check();
    if !report.passed() {
        return Err(Error::NotAnAutomorphism(format!("{report:?}")));
    }
    if !theta.is_bijective() {
        return Err(Error::NotAnAutomorphism("θ is not bijective".into()));
    }
    let field = a.field();
    let da = a.dim();
    let b = FinDimAlgebra::truncated_power(field, "t", n);
    let mut m = Matrix::zeros(field, da * n, n * da);
    let mut power = Matrix::identity(field, da);
    for i in 0..n {
        for j in 0..da {
            for k in 0..da {
                let v = power.get(k, j);
                if !v.is_zero() {
                    m.set(k * n + i, i * da + j, v.clone());
                }
            }
        }
        power = theta.matrix().mul(&power);
    }
    TwistingMap::new(a.clone(), b, m)
}

/// `ρ(h⊗a) = Σ h₍₁₎·a ⊗ h₍₂₎` for a module algebra `A` over the bialgebra `H`;
/// `action` is the `dim A × (dim H · dim A)` matrix of `h⊗a -> h·a`.
pub fn smash_twist(h: &Bialgebra, a: &FinDimAlgebra, action: &Matrix) -> Result<TwistingMap> {
    let (dh, da) = (h.dim(), a.dim());
    if action.shape() != (da, dh * da) {
        return Err(Error::InvalidInput(format!(
            "action has shape {:?}, expected ({da}, {})",
            action.shape(),
            dh * da
        )));
    }
    let field = a.field();
    let (ih, ia) = (Matrix::identity(field, dh), Matrix::identity(field, da));
    let comul = h.coalgebra().comul_matrix();
    let swap_ha = Matrix::swap(field, dh, da);
    let laws = [
        (
            "action-respects-products",
            action.mul(&ih.kron(a.mul_matrix())),
            a.mul_matrix()
                .mul(&action.kron(action))
                .mul(&Matrix::kron_all(&[&ih, &swap_ha, &ia]))
                .mul(&Matrix::kron_all(&[comul, &ia, &ia])),
        ),
        (
            "action-respects-unit",
            action.mul(&ih.kron(&a.unit_matrix())),
            a.unit_matrix().mul(&h.coalgebra().counit_matrix()),
        ),
        (
            "action-associative",
            action.mul(&h.algebra().mul_matrix().kron(&ia)),
            action.mul(&ih.kron(action)),
        ),
        (
            "unit-acts-trivially",
            action.mul(&h.algebra().unit_matrix().kron(&ia)),
            ia.clone(),
        ),
    ];
    if let Some(w) = first_failing_law(&laws) {
        return Err(Error::NotAModuleAlgebra(format!(
            "{} fails at ({}, {})",
            w.law, w.row, w.col
        )));
    }
    let m = action
        .kron(&ih)
        .mul(&ih.kron(&swap_ha))
        .mul(&comul.kron(&ia));
    TwistingMap::new(a.clone(), h.algebra().clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{construct_coalgebra, CoalgebraKind};
    use crate::kernel::{FieldSpec, Poly, Scalar};

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    fn s(v: i64) -> Scalar {
        F5.from_i64(v)
    }

    fn x2_minus_1() -> FinDimAlgebra {
        FinDimAlgebra::truncated_polynomial("x", &Poly::from_i64(F5, &[-1, 0, 1])).unwrap()
    }

    fn negation(a: &FinDimAlgebra) -> AlgebraHom {
        AlgebraHom::from_images(
            a.clone(),
            a.clone(),
            &[a.basis_vector(0), vec![s(0), s(-1)]],
        )
        .unwrap()
    }

    /// `ρ(t^i ⊗ x^j) = (-1)^{ij} x^j ⊗ t^i`, written out directly.
    fn ore_rho() -> TwistingMap {
        let a = x2_minus_1();
        let b = FinDimAlgebra::truncated_power(F5, "t", 2);
        let mut m = Matrix::zeros(F5, 4, 4);
        for i in 0..2 {
            for j in 0..2 {
                m.set(j * 2 + i, i * 2 + j, s(if i * j == 1 { -1 } else { 1 }));
            }
        }
        TwistingMap::new(a, b, m).unwrap()
    }

    #[test]
    fn swap_is_a_twist_and_gives_the_tensor_product() {
        let a = FinDimAlgebra::upper_triangular(F5, 2);
        let b = x2_minus_1();
        let sigma = TwistingMap::swap(&a, &b);
        assert!(sigma.check().passed());
        assert_eq!(
            twisted_product(&sigma).unwrap(),
            FinDimAlgebra::tensor_product(&a, &b)
        );
        let phi = dual_cotwist(&sigma).unwrap();
        assert_eq!(
            phi,
            CotwistingMap::swap(&dualize_algebra(&a).unwrap(), &dualize_algebra(&b).unwrap())
        );
        assert!(verify_twisted_duality(&sigma).unwrap().equal);
    }

    #[test]
    fn ore_style_twist() {
        let rho = ore_rho();
        assert!(rho.check().passed());
        let p = twisted_product(&rho).unwrap();
        assert!(p.validate().passed());
        // basis x^i ⊗ t^j at i*2 + j: 0 = 1, 1 = t, 2 = x, 3 = xt
        let (t, x) = (p.basis_vector(1), p.basis_vector(2));
        let tx = p.multiply(&t, &x);
        let xt = p.multiply(&x, &t);
        assert_eq!(tx, xt.iter().map(|v| -v).collect::<Vec<_>>());
        assert_eq!(p.multiply(&x, &x), p.unit().to_vec());
        assert_eq!(p.multiply(&t, &t), vec![s(0); 4]);
        assert_eq!(
            ore_twist(&x2_minus_1(), &negation(&x2_minus_1()), 2).unwrap(),
            rho
        );
        let phi = dual_cotwist(&rho).unwrap();
        assert!(phi.check().passed());
        assert_eq!(phi.matrix(), &rho.matrix().transpose());
        assert!(verify_twisted_duality(&rho).unwrap().equal);
    }

    #[test]
    fn perturbed_swap_fails_multiplicativity() {
        let a = x2_minus_1();
        let b = FinDimAlgebra::truncated_power(F5, "t", 2);
        let mut m = TwistingMap::swap(&a, &b).matrix().clone();
        // b_1 ⊗ a_1 -> a_1 ⊗ b_1 + 2 a_1 ⊗ b_1
        m.set(3, 3, s(3));
        let rho = TwistingMap::new(a, b, m).unwrap();
        let r = rho.check();
        assert!(r.normal && !r.multiplicative);
        assert!(r.multiplicative_witness.is_some());
        assert!(matches!(twisted_product(&rho), Err(Error::InvalidTwist(_))));
    }

    #[test]
    fn perturbed_cotwist_swap_fails_conormality() {
        let c = construct_coalgebra(&CoalgebraKind::DividedPower { m: 2 }, F5).unwrap();
        let mut m = CotwistingMap::swap(&c, &c).matrix().clone();
        m.set(1, 0, s(1));
        let phi = CotwistingMap::new(c.clone(), c, m).unwrap();
        let r = phi.check();
        assert!(!r.conormal);
        assert!(matches!(
            crossed_coalgebra(&phi),
            Err(Error::InvalidCotwist(_))
        ));
    }

    #[test]
    fn swap_cotwist_gives_the_tensor_coalgebra() {
        let c = construct_coalgebra(&CoalgebraKind::DividedPower { m: 2 }, F5).unwrap();
        let phi = CotwistingMap::swap(&c, &c);
        assert!(phi.check().passed());
        let cc = crossed_coalgebra(&phi).unwrap();
        assert_eq!(cc, FinDimCoalgebra::tensor_product(&c, &c));
        // first-order neighbourhood of the origin in the plane: one grouplike
        assert_eq!(cc.grouplikes().unwrap(), vec![cc.basis_vector(0)]);
    }

    #[test]
    fn ore_twist_of_order_four() {
        let a = FinDimAlgebra::cyclic_group_algebra(F5, "x", 4);
        // x -> 2x, 2 has order 4 mod 5
        let images: Vec<Vec<Scalar>> = (0..4)
            .map(|k| {
                let mut v = vec![s(0); 4];
                v[k] = F5.from_u64(2).pow(k as u64);
                v
            })
            .collect();
        let theta = AlgebraHom::from_images(a.clone(), a.clone(), &images).unwrap();
        for n in 1..=4 {
            let rho = ore_twist(&a, &theta, n).unwrap();
            assert!(rho.check().passed(), "N = {n}");
            assert!(verify_twisted_duality(&rho).unwrap().equal);
        }
        assert_eq!(
            ore_twist(&a, &AlgebraHom::identity(&a), 3).unwrap(),
            TwistingMap::swap(&a, &FinDimAlgebra::truncated_power(F5, "t", 3))
        );
    }

    #[test]
    fn ore_twist_rejects_non_automorphisms() {
        let a = FinDimAlgebra::truncated_power(F5, "x", 2);
        // x -> 0 is an algebra map but not bijective
        let f =
            AlgebraHom::from_images(a.clone(), a.clone(), &[a.basis_vector(0), vec![s(0), s(0)]])
                .unwrap();
        assert!(matches!(
            ore_twist(&a, &f, 2),
            Err(Error::NotAnAutomorphism(_))
        ));
    }

    #[test]
    fn smash_twist_of_sign_action() {
        let h = Bialgebra::group_algebra(F5, 2).unwrap();
        let a = FinDimAlgebra::truncated_power(F5, "x", 2);
        // action column h*2 + a: g·1 = 1, g·x = -x
        let action = Matrix::from_i64(F5, &[&[1, 0, 1, 0], &[0, 1, 0, -1]]);
        let rho = smash_twist(&h, &a, &action).unwrap();
        assert!(rho.check().passed());
        // g⊗x is column 1*2 + 1 = 3; x⊗g is row 1*2 + 1 = 3
        assert_eq!(rho.matrix().get(3, 3), &s(-1));
        let p = twisted_product(&rho).unwrap();
        // basis x^i ⊗ g^j at i*2 + j: 1 = g, 2 = x
        let (g, x) = (p.basis_vector(1), p.basis_vector(2));
        assert_eq!(
            p.multiply(&g, &x),
            p.multiply(&x, &g).iter().map(|v| -v).collect::<Vec<_>>()
        );

        let trivial = Matrix::from_i64(F5, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(
            smash_twist(&h, &a, &trivial).unwrap(),
            TwistingMap::swap(&a, h.algebra())
        );

        let bad = Matrix::from_i64(F5, &[&[1, 0, 1, 0], &[0, 1, 0, 2]]);
        assert!(matches!(
            smash_twist(&h, &a, &bad),
            Err(Error::NotAModuleAlgebra(_))
        ));
    }
}
