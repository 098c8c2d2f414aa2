use super::{
    crossed_coalgebra, dual_cotwist_unchecked, first_difference, ore_twist, twisted_product,
    CotwistingMap, TwistingMap,
};
use crate::algebra::{AlgebraHom, FinDimAlgebra};
use crate::coalgebra::{
    construct_coalgebra, dualize_algebra, dualize_coalgebra, CoalgebraKind, FinDimCoalgebra,
};
use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, Matrix, Scalar};

/// An algebra and a coalgebra on one basis, with an optional antipode.
///
/// Nothing beyond shapes is enforced on construction, so the same type also
/// carries the components of a crossed product; [`Bialgebra::validate`]
/// checks the compatibility axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    alg: FinDimAlgebra,
    coalg: FinDimCoalgebra,
    antipode: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraReport {
    pub algebra: bool,
    pub coalgebra: bool,
    /// `Δ(xy) = Δ(x)Δ(y)`.
    pub comul_multiplicative: bool,
    /// `Δ(1) = 1⊗1`.
    pub comul_unital: bool,
    pub counit_multiplicative: bool,
    pub counit_unital: bool,
    /// Present only when an antipode was supplied.
    pub antipode: Option<bool>,
    pub witness: Option<String>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.algebra
            && self.coalgebra
            && self.comul_multiplicative
            && self.comul_unital
            && self.counit_multiplicative
            && self.counit_unital
            && self.antipode != Some(false)
    }
}

impl Bialgebra {
    pub fn new(
        alg: FinDimAlgebra,
        coalg: FinDimCoalgebra,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = alg.dim();
        if coalg.dim() != n || coalg.field() != alg.field() {
            return Err(Error::InvalidInput(
                "algebra and coalgebra live on different spaces".into(),
            ));
        }
        if let Some(s) = &antipode {
            if s.shape() != (n, n) {
                return Err(Error::InvalidInput(format!(
                    "antipode has shape {:?}, expected ({n}, {n})",
                    s.shape()
                )));
            }
        }
        let coalg = coalg.with_labels(alg.labels().to_vec());
        Ok(Bialgebra {
            alg,
            coalg,
            antipode,
        })
    }

    /// The group algebra of `Z/m`: group elements are grouplike, `S(g) = g⁻¹`.
    pub fn group_algebra(field: FieldSpec, m: usize) -> Result<Self> {
        let alg = FinDimAlgebra::cyclic_group_algebra(field, "g", m);
        let coalg = construct_coalgebra(
            &CoalgebraKind::Grouplike {
                elements: alg.labels().to_vec(),
            },
            field,
        )?;
        let mut s = Matrix::zeros(field, m, m);
        for k in 0..m {
            s.set((m - k) % m, k, field.one());
        }
        Bialgebra::new(alg, coalg, Some(s))
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.alg
    }

    pub fn coalgebra(&self) -> &FinDimCoalgebra {
        &self.coalg
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn with_antipode(mut self, s: Matrix) -> Result<Self> {
        let n = self.dim();
        if s.shape() != (n, n) {
            return Err(Error::InvalidInput(format!(
                "antipode has shape {:?}, expected ({n}, {n})",
                s.shape()
            )));
        }
        self.antipode = Some(s);
        Ok(self)
    }

    /// Product in `H⊗H` of two tensors.
    fn tensor_square_product(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let field = self.alg.field();
        let mut out = vec![field.zero(); n * n];
        for (p, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                let left = self.alg.basis_product(p / n, q / n);
                let right = self.alg.basis_product(p % n, q % n);
                for (i, l) in left.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                    let c = &ab * l;
                    for (j, r) in right.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                        out[i * n + j] = &out[i * n + j] + &(&c * r);
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> BialgebraReport {
        let n = self.dim();
        let field = self.alg.field();
        let algebra = self.alg.validate().passed();
        let coalgebra = self.coalg.validate().passed();
        let mut witness = None;

        let mut comul_multiplicative = true;
        let mut counit_multiplicative = true;
        'outer: for i in 0..n {
            for j in 0..n {
                let prod = self.alg.basis_product(i, j);
                let lhs = self.coalg.comultiply(&prod);
                let rhs = self.tensor_square_product(
                    &self.coalg.comul_matrix().column(i),
                    &self.coalg.comul_matrix().column(j),
                );
                if comul_multiplicative && lhs != rhs {
                    comul_multiplicative = false;
                    witness.get_or_insert_with(|| format!("Δ(b{i} b{j}) ≠ Δ(b{i})Δ(b{j})"));
                }
                let e = self.coalg.epsilon(&prod);
                if counit_multiplicative && e != &self.coalg.counit()[i] * &self.coalg.counit()[j] {
                    counit_multiplicative = false;
                    witness.get_or_insert_with(|| format!("ε(b{i} b{j}) ≠ ε(b{i})ε(b{j})"));
                }
                if !comul_multiplicative && !counit_multiplicative {
                    break 'outer;
                }
            }
        }
        let unit = self.alg.unit();
        let comul_unital = self.coalg.comultiply(unit)
            == unit
                .iter()
                .flat_map(|a| unit.iter().map(move |b| a * b))
                .collect::<Vec<_>>();
        if !comul_unital {
            witness.get_or_insert_with(|| "Δ(1) ≠ 1⊗1".into());
        }
        let counit_unital = self.coalg.epsilon(unit).is_one();
        if !counit_unital {
            witness.get_or_insert_with(|| "ε(1) ≠ 1".into());
        }
        let antipode = self.antipode.as_ref().map(|s| {
            let id = Matrix::identity(field, n);
            let target = self.alg.unit_matrix().mul(&self.coalg.counit_matrix());
            let left = self
                .alg
                .mul_matrix()
                .mul(&s.kron(&id))
                .mul(self.coalg.comul_matrix());
            let right = self
                .alg
                .mul_matrix()
                .mul(&id.kron(s))
                .mul(self.coalg.comul_matrix());
            for (side, m) in [("left", &left), ("right", &right)] {
                if let Some((row, col)) = first_difference(m, &target) {
                    witness.get_or_insert_with(|| {
                        format!("{side} antipode law fails at ({row}, {col})")
                    });
                    return false;
                }
            }
            true
        });
        BialgebraReport {
            algebra,
            coalgebra,
            comul_multiplicative,
            comul_unital,
            counit_multiplicative,
            counit_unital,
            antipode,
            witness,
        }
    }

    /// The dual bialgebra: convolution algebra of the coalgebra and dual
    /// coalgebra of the algebra, antipode transposed.
    pub fn dual(&self) -> Result<Bialgebra> {
        let report = self.validate();
        if !report.passed() {
            return Err(Error::InvalidBialgebra(format!("{report:?}")));
        }
        Bialgebra::new(
            dualize_coalgebra(&self.coalg)?,
            dualize_algebra(&self.alg)?,
            self.antipode.as_ref().map(Matrix::transpose),
        )
    }

    /// Same structure maps and antipode, labels ignored.
    pub fn same_structure(&self, other: &Bialgebra) -> bool {
        self.alg.same_structure(&other.alg)
            && self.coalg.same_structure(&other.coalg)
            && self.antipode == other.antipode
    }

    /// The pair `(algebra dual, coalgebra dual)` without checking any axiom;
    /// used for crossed-product components that are not bialgebras.
    fn dual_components(&self) -> Result<Bialgebra> {
        Bialgebra::new(
            dualize_coalgebra(&self.coalg)?,
            dualize_algebra(&self.alg)?,
            None,
        )
    }
}

/// `A #_ρ^φ B`: the twisted product algebra and crossed coalgebra on `A⊗B`.
pub fn crossed_bialgebra(rho: &TwistingMap, phi: &CotwistingMap) -> Result<Bialgebra> {
    Bialgebra::new(twisted_product(rho)?, crossed_coalgebra(phi)?, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedReport {
    pub is_bialgebra: bool,
    pub duality_holds: bool,
    pub bialgebra_report: BialgebraReport,
}

/// Assemble `H = A #_ρ^φ B`, validate it, and compare its dual with
/// `A° #_{φ°}^{ρ°} B°`: the transposed `φ` twists the dual algebras and the
/// transposed `ρ` cotwists the dual coalgebras.
pub fn verify_crossed_bialgebra_duality(
    a: &Bialgebra,
    b: &Bialgebra,
    rho: &TwistingMap,
    phi: &CotwistingMap,
) -> Result<CrossedReport> {
    if !rho.a().same_structure(a.algebra()) || !rho.b().same_structure(b.algebra()) {
        return Err(Error::InvalidInput(
            "ρ does not act on the given algebras".into(),
        ));
    }
    if !phi.c().same_structure(a.coalgebra()) || !phi.d().same_structure(b.coalgebra()) {
        return Err(Error::InvalidInput(
            "φ does not act on the given coalgebras".into(),
        ));
    }
    let h = crossed_bialgebra(rho, phi)?;
    let bialgebra_report = h.validate();
    let is_bialgebra = bialgebra_report.passed();
    let duality_holds = if is_bialgebra {
        let (ad, bd) = (a.dual_components()?, b.dual_components()?);
        let rho_dual = TwistingMap::new(
            ad.algebra().clone(),
            bd.algebra().clone(),
            phi.matrix().transpose(),
        )?;
        let phi_dual = dual_cotwist_unchecked(rho);
        debug_assert!(
            phi_dual.c().same_structure(ad.coalgebra())
                && phi_dual.d().same_structure(bd.coalgebra())
        );
        let assembled = crossed_bialgebra(&rho_dual, &phi_dual)?;
        h.dual()?.same_structure(&assembled)
    } else {
        false
    };
    Ok(CrossedReport {
        is_bialgebra,
        duality_holds,
        bialgebra_report,
    })
}

/// The cotwist whose crossed coalgebra on `C⊗D` is `target`, found by
/// solving the linear system `Δ_φ = Δ_target` in the entries of `φ`.
pub fn solve_cotwist(
    c: &FinDimCoalgebra,
    d: &FinDimCoalgebra,
    target: &FinDimCoalgebra,
) -> Result<CotwistingMap> {
    let field = c.field();
    let n = c.dim() * d.dim();
    if target.dim() != n {
        return Err(Error::InvalidInput(format!(
            "target has dimension {}, expected {n}",
            target.dim()
        )));
    }
    let expected_counit = c.counit_matrix().kron(&d.counit_matrix()).row(0);
    if target.counit() != expected_counit.as_slice() {
        return Err(Error::InvalidCotwist("target counit is not ε_C⊗ε_D".into()));
    }
    let (ic, id) = (
        Matrix::identity(field, c.dim()),
        Matrix::identity(field, d.dim()),
    );
    let split = c.comul_matrix().kron(d.comul_matrix());
    // one column per entry of φ: the comultiplication it contributes
    let mut columns = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let mut e = Matrix::zeros(field, n, n);
            e.set(u, v, field.one());
            columns.push(
                Matrix::kron_all(&[&ic, &e, &id])
                    .mul(&split)
                    .entries()
                    .to_vec(),
            );
        }
    }
    let system = Matrix::from_columns(field, n * n * n, &columns);
    let solution = system
        .solve(target.comul_matrix().entries())
        .ok_or_else(|| {
            Error::InvalidCotwist("no cotwist realizes the target comultiplication".into())
        })?;
    let phi = CotwistingMap::new(
        c.clone(),
        d.clone(),
        Matrix::from_entries(field, n, n, solution),
    )?;
    let report = phi.check();
    if !report.passed() {
        return Err(Error::InvalidCotwist(format!(
            "solved map fails its check: {report:?}"
        )));
    }
    Ok(phi)
}

/// Components and twists of a crossed product bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedInstance {
    pub a: Bialgebra,
    pub b: Bialgebra,
    pub rho: TwistingMap,
    pub phi: CotwistingMap,
}

impl CrossedInstance {
    pub fn assemble(&self) -> Result<Bialgebra> {
        crossed_bialgebra(&self.rho, &self.phi)
    }

    pub fn verify(&self) -> Result<CrossedReport> {
        verify_crossed_bialgebra_duality(&self.a, &self.b, &self.rho, &self.phi)
    }
}

/// Sweedler's four-dimensional algebra `⟨g, x | g² = 1, x² = 0, xg = -gx⟩`
/// as `k[Z/2] #_ρ^φ k[x]/(x²)`, on the basis `1, x, g, gx`.
///
/// `ρ(x⊗g) = -g⊗x`, and `φ` is solved from `Δ(x) = x⊗g + 1⊗x`,
/// `Δ(g) = g⊗g`; the antipode is `S(x) = gx`, `S(gx) = -x`.
pub fn sweedler_instance(field: FieldSpec) -> Result<CrossedInstance> {
    if field.characteristic() == 2 {
        return Err(Error::BadParams(
            "Sweedler's algebra needs characteristic ≠ 2".into(),
        ));
    }
    let a = Bialgebra::group_algebra(field, 2)?;
    let b_alg = FinDimAlgebra::truncated_power(field, "x", 2);
    let b_coalg = construct_coalgebra(&CoalgebraKind::DividedPower { m: 2 }, field)?;
    let b = Bialgebra::new(b_alg, b_coalg, None)?;
    let g = a.algebra();
    let neg = AlgebraHom::from_images(
        g.clone(),
        g.clone(),
        &[g.basis_vector(0), vec![field.zero(), -field.one()]],
    )?;
    let rho = ore_twist(g, &neg, 2)?;
    let rho = TwistingMap::new(g.clone(), b.algebra().clone(), rho.matrix().clone())?;

    // basis of A⊗B: 0 = 1, 1 = x, 2 = g, 3 = gx
    let one = field.one();
    let target = FinDimCoalgebra::from_terms(
        field,
        vec!["1".into(), "x".into(), "g".into(), "gx".into()],
        |r| match r {
            0 => vec![(0, 0, one.clone())],
            1 => vec![(1, 2, one.clone()), (0, 1, one.clone())],
            2 => vec![(2, 2, one.clone())],
            _ => vec![(3, 0, one.clone()), (2, 3, one.clone())],
        },
        vec![one.clone(), field.zero(), one.clone(), field.zero()],
    );
    let phi = solve_cotwist(a.coalgebra(), b.coalgebra(), &target)?;
    Ok(CrossedInstance { a, b, rho, phi })
}

/// The antipode of Sweedler's algebra on the basis `1, x, g, gx`.
pub fn sweedler_antipode(field: FieldSpec) -> Matrix {
    Matrix::from_i64(
        field,
        &[&[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0], &[0, 1, 0, 0]],
    )
}

/// `k[Z/2 × Z/2]` as a crossed product of two copies of `k[Z/2]` with
/// both twists the tensor swap.
pub fn klein_four_instance(field: FieldSpec) -> Result<CrossedInstance> {
    let a = Bialgebra::group_algebra(field, 2)?;
    let b = a.clone();
    let rho = TwistingMap::swap(a.algebra(), b.algebra());
    let phi = CotwistingMap::swap(a.coalgebra(), b.coalgebra());
    Ok(CrossedInstance { a, b, rho, phi })
}

#[cfg(test)]
mod tests {
    use super::*;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn group_bialgebra_and_its_dual() {
        let h = Bialgebra::group_algebra(F5, 2).unwrap();
        assert!(h.validate().passed());
        let d = h.dual().unwrap();
        assert!(d.validate().passed());
        // the characters g -> ±1 become the grouplikes of the dual
        let g = d.coalgebra().grouplikes().unwrap();
        assert_eq!(
            g,
            vec![vec![F5.one(), F5.one()], vec![F5.one(), F5.from_i64(-1)]]
        );
        assert_eq!(d.dual().unwrap(), h);
    }

    #[test]
    fn primitive_square_zero_is_not_a_bialgebra() {
        let alg = FinDimAlgebra::truncated_power(F5, "x", 2);
        let coalg = construct_coalgebra(&CoalgebraKind::DividedPower { m: 2 }, F5).unwrap();
        let r = Bialgebra::new(alg, coalg, None).unwrap().validate();
        assert!(r.algebra && r.coalgebra);
        assert!(!r.comul_multiplicative);
        assert!(!r.passed());
    }

    #[test]
    fn sweedler_crossed_product() {
        let inst = sweedler_instance(F5).unwrap();
        // the solved cotwist: 1⊗1 -> 1⊗1, g⊗1 -> 1⊗g, 1⊗x -> x⊗g, g⊗x -> x⊗1
        // (C⊗D index c*2 + d; D⊗C index d*2 + c)
        let expected = Matrix::from_i64(
            F5,
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]],
        );
        assert_eq!(inst.phi.matrix(), &expected);
        let h = inst.assemble().unwrap();
        let x = h.algebra().basis_vector(1);
        let g = h.algebra().basis_vector(2);
        let gx = h.algebra().multiply(&g, &x);
        assert_eq!(gx, h.algebra().basis_vector(3));
        let xg = h.algebra().multiply(&x, &g);
        assert_eq!(xg, gx.iter().map(|v| -v).collect::<Vec<_>>());
        let r = inst.verify().unwrap();
        assert!(r.is_bialgebra && r.duality_holds, "{r:?}");

        let with_s = h.with_antipode(sweedler_antipode(F5)).unwrap();
        assert_eq!(with_s.validate().antipode, Some(true));
        let dual = with_s.dual().unwrap();
        assert!(dual.validate().passed());
    }

    #[test]
    fn klein_four_factorization() {
        let inst = klein_four_instance(F5).unwrap();
        let h = inst.assemble().unwrap();
        let group = FinDimAlgebra::tensor_product(inst.a.algebra(), inst.b.algebra());
        assert!(h.algebra().same_structure(&group));
        assert_eq!(h.coalgebra().grouplikes().unwrap().len(), 4);
        let r = inst.verify().unwrap();
        assert!(r.is_bialgebra && r.duality_holds);
    }

    #[test]
    fn unreachable_target_is_reported() {
        let a = Bialgebra::group_algebra(F5, 2).unwrap();
        let b = construct_coalgebra(&CoalgebraKind::DividedPower { m: 2 }, F5).unwrap();
        // Δ(x) = x⊗1 + g⊗x needs an A-leg of g on the left, which Δ_φ never produces
        let one = F5.one();
        let target = FinDimCoalgebra::from_terms(
            F5,
            vec!["1".into(), "x".into(), "g".into(), "gx".into()],
            |r| match r {
                0 => vec![(0, 0, one.clone())],
                1 => vec![(1, 0, one.clone()), (2, 1, one.clone())],
                2 => vec![(2, 2, one.clone())],
                _ => vec![(3, 2, one.clone()), (0, 3, one.clone())],
            },
            vec![one.clone(), F5.zero(), one.clone(), F5.zero()],
        );
        assert!(matches!(
            solve_cotwist(a.coalgebra(), &b, &target),
            Err(Error::InvalidCotwist(_))
        ));
    }
}
