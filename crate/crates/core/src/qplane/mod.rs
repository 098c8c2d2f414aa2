//! The quantum plane `k⟨x, y⟩ / (yx − q·xy)` at a primitive `n`th root of
//! unity `q` in GF(p), through its finite-dimensional quotients.

mod census;
mod irrep;

pub use census::{
    azumaya_census, azumaya_point_invariants, local_matrix_oracle, CensusAggregate, CensusReport,
    FiberRecord, PointInvariants,
};
pub use irrep::{irrep, irrep_classify, Irrep, IrrepClassification};

use crate::algebra::FinDimAlgebra;
use crate::coalgebra::{dualize_algebra_unchecked, CoalgebraHom, DualTower};
use crate::error::{Error, Result};
use crate::kernel::{primitive_root_of_unity, FieldSpec, Matrix, Scalar};
use crate::twist::TwistingMap;

/// `[m]_q = 1 + q + … + q^{m-1}`.
pub fn q_number(m: u64, q: &Scalar) -> Scalar {
    let field = q.field();
    let mut acc = field.zero();
    let mut power = field.one();
    for _ in 0..m {
        acc = &acc + &power;
        power = &power * q;
    }
    acc
}

/// Which quotient of the quantum plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QPlaneKind {
    /// `x^a = y^b = 0`; basis `x^i y^j` with `i < a`, `j < b`.
    Box { a: usize, b: usize },
    /// `x^n = c`, `y^n = d`; basis `x^i y^j` with `i, j < n`.
    CentralFiber { c: Scalar, d: Scalar },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPlaneTrunc {
    pub n: u64,
    pub p: u64,
    pub q: Scalar,
    pub kind: QPlaneKind,
    pub algebra: FinDimAlgebra,
}

pub(crate) fn monomial_label(i: usize, j: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let s = format!("{}{}", part("x", i), part("y", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// The field GF(p) and the smallest primitive `n`th root of unity in it.
pub(crate) fn field_and_root(n: u64, p: u64) -> Result<(FieldSpec, Scalar)> {
    if n == 0 {
        return Err(Error::BadParams(
            "root-of-unity order must be positive".into(),
        ));
    }
    let field = FieldSpec::prime(p)?;
    let q = primitive_root_of_unity(field, n)?;
    Ok((field, q))
}

/// Monomial algebra on `x^i y^j` (`i < ra`, `j < rb`, index `i*rb + j`) with
/// `(x^{i1} y^{j1})(x^{i2} y^{j2}) = q^{j1 i2} x^{i1+i2} y^{j1+j2}`, and
/// overflowing exponents handled by `reduce(e) -> Option<(e', factor)>`.
fn monomial_algebra(
    field: FieldSpec,
    q: &Scalar,
    ra: usize,
    rb: usize,
    reduce_x: impl Fn(usize) -> Option<(usize, Scalar)>,
    reduce_y: impl Fn(usize) -> Option<(usize, Scalar)>,
) -> FinDimAlgebra {
    let dim = ra * rb;
    let labels = (0..ra)
        .flat_map(|i| (0..rb).map(move |j| monomial_label(i, j)))
        .collect();
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    FinDimAlgebra::from_fn(
        field,
        labels,
        |s, t| {
            let (i1, j1, i2, j2) = (s / rb, s % rb, t / rb, t % rb);
            let mut out = vec![field.zero(); dim];
            if let (Some((i, fx)), Some((j, fy))) = (reduce_x(i1 + i2), reduce_y(j1 + j2)) {
                out[i * rb + j] = &(&q.pow((j1 * i2) as u64) * &fx) * &fy;
            }
            out
        },
        unit,
    )
}

pub fn oq_truncation(n: u64, p: u64, kind: QPlaneKind) -> Result<QPlaneTrunc> {
    let (field, q) = field_and_root(n, p)?;
    let one = field.one();
    let algebra = match &kind {
        QPlaneKind::Box { a, b } => {
            if *a == 0 || *b == 0 {
                return Err(Error::BadParams("box sides must be at least 1".into()));
            }
            let (a, b) = (*a, *b);
            monomial_algebra(
                field,
                &q,
                a,
                b,
                |e| (e < a).then(|| (e, one.clone())),
                |e| (e < b).then(|| (e, one.clone())),
            )
        }
        QPlaneKind::CentralFiber { c, d } => {
            if c.field() != field || d.field() != field {
                return Err(Error::BadParams(
                    "central parameters must lie in GF(p)".into(),
                ));
            }
            let n = n as usize;
            monomial_algebra(
                field,
                &q,
                n,
                n,
                |e| Some((e % n, c.pow((e / n) as u64))),
                |e| Some((e % n, d.pow((e / n) as u64))),
            )
        }
    };
    debug_assert!(algebra.validate().passed());
    Ok(QPlaneTrunc {
        n,
        p,
        q,
        kind,
        algebra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTwistReport {
    /// `ρ_q(y^i ⊗ x^j) = q^{ij} x^j ⊗ y^i` on `k[x]/(x^a)`, `k[y]/(y^b)`.
    pub rho: TwistingMap,
    /// `τ_q(y^s ⊗ x^r) = [r̄ s̄]_q x^r ⊗ y^s` for nonzero residues mod `n`, else 0.
    pub tau: Matrix,
    /// `ρ_q = σ − (1 − q) τ_q` entrywise.
    pub identity_holds: bool,
    pub twist_passes: bool,
}

/// Split `ρ_q` into the swap and the graded correction `τ_q`.
pub fn qtwist_decomposition(n: u64, p: u64, a: usize, b: usize) -> Result<QTwistReport> {
    let (field, q) = field_and_root(n, p)?;
    let nu = n as usize;
    if a == 0 || b == 0 || !a.is_multiple_of(nu) || !b.is_multiple_of(nu) {
        return Err(Error::GradingIncompatible { n, a, b });
    }
    let x_alg = FinDimAlgebra::truncated_power(field, "x", a);
    let y_alg = FinDimAlgebra::truncated_power(field, "y", b);
    let mut rho = Matrix::zeros(field, a * b, b * a);
    let mut tau = Matrix::zeros(field, a * b, b * a);
    for s in 0..b {
        for r in 0..a {
            let (row, col) = (r * b + s, s * a + r);
            rho.set(row, col, q.pow((r * s) as u64));
            let (rr, sr) = (r % nu, s % nu);
            if rr != 0 && sr != 0 {
                tau.set(row, col, q_number((rr * sr) as u64, &q));
            }
        }
    }
    let rho = TwistingMap::new(x_alg.clone(), y_alg.clone(), rho)?;
    let sigma = TwistingMap::swap(&x_alg, &y_alg);
    let rebuilt = sigma.matrix().sub(&tau.scale(&(&field.one() - &q)));
    Ok(QTwistReport {
        identity_holds: &rebuilt == rho.matrix(),
        twist_passes: rho.check().passed(),
        rho,
        tau,
    })
}

/// Duals of `box(1, b) ↠ … ↠ box(levels, b)` quotients, as a tower of prefix
/// inclusions (the monomials with `i < a` come first in `box(a + 1, b)`).
pub fn box_tower(n: u64, p: u64, b: usize, levels: usize) -> Result<DualTower> {
    if levels == 0 {
        return Err(Error::BadParams("a tower needs at least one level".into()));
    }
    let coalgebras = (1..=levels)
        .map(|a| {
            oq_truncation(n, p, QPlaneKind::Box { a, b })
                .map(|t| dualize_algebra_unchecked(&t.algebra))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut it = coalgebras.into_iter();
    let mut tower = DualTower::new(it.next().unwrap());
    for next in it {
        let inc = CoalgebraHom::prefix_inclusion(tower.top(), &next)?;
        tower = tower.extend(next, inc)?;
    }
    Ok(tower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::{twisted_product, verify_twisted_duality};

    #[test]
    fn q_numbers() {
        let f5 = FieldSpec::PrimeField(5);
        let f7 = FieldSpec::PrimeField(7);
        assert_eq!(q_number(3, &f5.one()), f5.from_u64(3));
        assert_eq!(q_number(2, &f5.from_i64(-1)), f5.zero());
        assert_eq!(q_number(3, &f7.from_u64(2)), f7.zero());
        assert_eq!(q_number(0, &f7.from_u64(2)), f7.zero());
    }

    #[test]
    fn box_two_two() {
        let t = oq_truncation(2, 5, QPlaneKind::Box { a: 2, b: 2 }).unwrap();
        assert_eq!(t.algebra.dim(), 4);
        assert_eq!(t.algebra.labels(), &["1", "y", "x", "xy"]);
        // y·x = 4·xy
        let yx = t.algebra.basis_product(1, 2);
        assert_eq!(
            yx,
            vec![
                t.q.field().zero(),
                t.q.field().zero(),
                t.q.field().zero(),
                t.q.field().from_u64(4)
            ]
        );
        assert_eq!(t.algebra.basis_product(2, 1), t.algebra.basis_vector(3));
    }

    #[test]
    fn central_fibers() {
        let f = FieldSpec::PrimeField(5);
        let t = oq_truncation(
            2,
            5,
            QPlaneKind::CentralFiber {
                c: f.one(),
                d: f.one(),
            },
        )
        .unwrap();
        assert_eq!(t.algebra.dim(), 4);
        assert_eq!(t.algebra.basis_product(2, 2), t.algebra.unit().to_vec());
        let origin = oq_truncation(
            2,
            5,
            QPlaneKind::CentralFiber {
                c: f.zero(),
                d: f.zero(),
            },
        )
        .unwrap();
        let bx = oq_truncation(2, 5, QPlaneKind::Box { a: 2, b: 2 }).unwrap();
        assert_eq!(origin.algebra, bx.algebra);
    }

    #[test]
    fn unavailable_order() {
        assert!(matches!(
            oq_truncation(3, 5, QPlaneKind::Box { a: 1, b: 1 }),
            Err(Error::OrderUnavailable { .. })
        ));
        assert!(matches!(
            oq_truncation(2, 6, QPlaneKind::Box { a: 1, b: 1 }),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn qtwist_identity_and_product() {
        for (n, p, a, b) in [
            (2, 5, 2, 2),
            (2, 5, 4, 4),
            (2, 5, 2, 4),
            (4, 5, 4, 4),
            (3, 7, 3, 6),
            (1, 5, 3, 2),
        ] {
            let r = qtwist_decomposition(n, p, a, b).unwrap();
            assert!(r.identity_holds && r.twist_passes, "{n} {p} {a} {b}");
            let prod = twisted_product(&r.rho).unwrap();
            let bx = oq_truncation(n, p, QPlaneKind::Box { a, b }).unwrap();
            assert!(prod.same_structure(&bx.algebra));
            assert!(verify_twisted_duality(&r.rho).unwrap().equal);
        }
        // n = 2, p = 5: ρ(y⊗x) = 4 x⊗y; τ has [1]_q = 1 there
        let r = qtwist_decomposition(2, 5, 2, 2).unwrap();
        let f = FieldSpec::PrimeField(5);
        assert_eq!(r.rho.matrix().get(3, 3), &f.from_u64(4));
        assert_eq!(r.tau.get(3, 3), &f.one());
        // q = 1: τ vanishes and ρ is the swap
        let r1 = qtwist_decomposition(1, 5, 2, 2).unwrap();
        assert!(r1.tau.is_zero());
        assert_eq!(r1.rho, TwistingMap::swap(r1.rho.a(), r1.rho.b()));
    }

    #[test]
    fn grading_must_descend() {
        assert_eq!(
            qtwist_decomposition(2, 5, 3, 2).unwrap_err(),
            Error::GradingIncompatible { n: 2, a: 3, b: 2 }
        );
    }

    #[test]
    fn box_tower_is_valid() {
        let t = box_tower(2, 5, 2, 4).unwrap();
        assert_eq!(t.levels().len(), 4);
        assert_eq!(t.top().dim(), 8);
    }
}
