//! Fiber-by-fiber census of the central quotients `x^n = c`, `y^n = d`, and
//! the first-order neighbourhood of an Azumaya point.

use rayon::prelude::*;

use super::{field_and_root, monomial_label, oq_truncation, QPlaneKind};
use crate::algebra::{FinDimAlgebra, SemisimpleProfile, Subspace};
use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberRecord {
    pub c: Scalar,
    pub d: Scalar,
    /// The fiber is `M_n(k)`.
    pub azumaya: bool,
    pub profile: SemisimpleProfile,
    /// Number of algebra maps from the fiber to GF(p).
    pub characters: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusAggregate {
    pub azumaya_fibers: usize,
    /// Fibers with `cd = 0`.
    pub axis_fibers: usize,
    /// Characters summed over the axis fibers.
    pub rational_axis_points: usize,
    /// Off-axis fibers with `c` and `d` both `n`th powers: each carries one
    /// orbit of rational points `(α, β)`.
    pub rational_orbit_classes: usize,
    /// Simple factors of axis fibers whose center is bigger than GF(p).
    pub nonsplit_axis_factors: usize,
    /// Every fiber is Azumaya exactly when `cd ≠ 0`.
    pub locus_identity: bool,
    /// Largest simple-factor dimension over all fibers.
    pub max_factor_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: u64,
    pub p: u64,
    /// In `(c, d)` lexicographic order.
    pub fibers: Vec<FiberRecord>,
    pub aggregate: CensusAggregate,
}

fn is_nth_power(x: &Scalar, n: u64, p: u64) -> bool {
    x.pow((p - 1) / n).is_one()
}

fn fiber_record(n: u64, p: u64, c: &Scalar, d: &Scalar) -> Result<FiberRecord> {
    let t = oq_truncation(
        n,
        p,
        QPlaneKind::CentralFiber {
            c: c.clone(),
            d: d.clone(),
        },
    )?;
    let profile = t.algebra.semisimple_profile()?;
    let characters = t.algebra.one_dim_characters()?.len();
    Ok(FiberRecord {
        c: c.clone(),
        d: d.clone(),
        azumaya: profile.is_full_matrix_algebra(n as usize),
        profile,
        characters,
    })
}

/// Profile every central fiber over GF(p)²; needs `n | p − 1` and `p > n²`.
pub fn azumaya_census(n: u64, p: u64) -> Result<CensusReport> {
    let (field, _) = field_and_root(n, p)?;
    if p <= n * n {
        return Err(Error::CharacteristicTooSmall {
            p,
            dim: (n * n) as usize,
        });
    }
    let elements = field.elements().expect("finite field");
    let points: Vec<(Scalar, Scalar)> = elements
        .iter()
        .flat_map(|c| elements.iter().map(move |d| (c.clone(), d.clone())))
        .collect();
    let fibers = points
        .par_iter()
        .map(|(c, d)| fiber_record(n, p, c, d))
        .collect::<Result<Vec<_>>>()?;

    let mut agg = CensusAggregate {
        locus_identity: true,
        ..Default::default()
    };
    for f in &fibers {
        let on_axis = f.c.is_zero() || f.d.is_zero();
        agg.azumaya_fibers += f.azumaya as usize;
        agg.locus_identity &= f.azumaya != on_axis;
        agg.max_factor_dim = agg
            .max_factor_dim
            .max(f.profile.factors.iter().map(|x| x.0).max().unwrap_or(0));
        if on_axis {
            agg.axis_fibers += 1;
            agg.rational_axis_points += f.characters;
            agg.nonsplit_axis_factors += f.profile.factors.iter().filter(|x| x.1 > 1).count();
        } else if is_nth_power(&f.c, n, p) && is_nth_power(&f.d, n, p) {
            agg.rational_orbit_classes += 1;
        }
    }
    Ok(CensusReport {
        n,
        p,
        fibers,
        aggregate: agg,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointInvariants {
    pub total_dim: usize,
    pub radical_dim: usize,
    pub radical_square_zero: bool,
    /// Profile of the quotient by the radical.
    pub top_profile: Vec<(usize, usize)>,
    pub center_dim: usize,
    /// The nilpotent ideal used as the radical has a semisimple quotient.
    pub radical_certified: bool,
}

/// Multiplication in `k[u, v]/(u, v)²` on coordinates `(1, u, v)`.
fn local_mul(a: &[Scalar; 3], b: &[Scalar; 3]) -> [Scalar; 3] {
    [
        &a[0] * &b[0],
        &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
        &(&a[0] * &b[2]) + &(&a[2] * &b[0]),
    ]
}

fn local_basis(field: FieldSpec, w: usize) -> [Scalar; 3] {
    let mut v = [field.zero(), field.zero(), field.zero()];
    v[w] = field.one();
    v
}

/// `R / R𝔪²` for `𝔪 = (x^n − c, y^n − d)`, on the basis `x^i y^j w` with
/// `i, j < n` and `w ∈ {1, u, v}`, `u = x^n − c`, `v = y^n − d` central.
fn point_neighbourhood(
    n: usize,
    field: FieldSpec,
    q: &Scalar,
    c: &Scalar,
    d: &Scalar,
) -> FinDimAlgebra {
    let dim = 3 * n * n;
    let labels = (0..n * n)
        .flat_map(|m| {
            let base = monomial_label(m / n, m % n);
            ["", "u", "v"]
                .into_iter()
                .map(move |w| match (base.as_str(), w) {
                    (b, "") => b.to_string(),
                    ("1", w) => w.to_string(),
                    (b, w) => format!("{b}{w}"),
                })
        })
        .collect();
    // x^n = c + u, y^n = d + v
    let x_wrap = [c.clone(), field.one(), field.zero()];
    let y_wrap = [d.clone(), field.zero(), field.one()];
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    FinDimAlgebra::from_fn(
        field,
        labels,
        |s, t| {
            let (m1, w1, m2, w2) = (s / 3, s % 3, t / 3, t % 3);
            let (i1, j1, i2, j2) = (m1 / n, m1 % n, m2 / n, m2 % n);
            let mut central = local_mul(&local_basis(field, w1), &local_basis(field, w2));
            if i1 + i2 >= n {
                central = local_mul(&central, &x_wrap);
            }
            if j1 + j2 >= n {
                central = local_mul(&central, &y_wrap);
            }
            let coeff = q.pow((j1 * i2) as u64);
            let m = ((i1 + i2) % n) * n + (j1 + j2) % n;
            let mut out = vec![field.zero(); dim];
            for (w, v) in central.iter().enumerate() {
                out[m * 3 + w] = &coeff * v;
            }
            out
        },
        unit,
    )
}

fn measure(a: &FinDimAlgebra, radical: &Subspace) -> Result<PointInvariants> {
    let (top, _) = a.quotient(radical)?;
    let top = top.semisimple_profile()?;
    Ok(PointInvariants {
        total_dim: a.dim(),
        radical_dim: radical.dim(),
        radical_square_zero: a.subspace_product(radical, radical).is_zero(),
        radical_certified: top.radical_dim == 0 && a.is_nilpotent(radical),
        top_profile: top.factors,
        center_dim: a.center().dim(),
    })
}

/// Invariants of `R/R𝔪²` at an Azumaya point `cd ≠ 0`.
///
/// The algebra has dimension `3n²`, so the trace form needs `p > 3n²`;
/// instead the ideal generated by `u, v` is shown to be nilpotent with a
/// semisimple quotient, which makes it the radical. Only the quotient, of
/// dimension `n²`, needs `p > n²`.
pub fn azumaya_point_invariants(n: u64, p: u64, c: &Scalar, d: &Scalar) -> Result<PointInvariants> {
    let (field, q) = field_and_root(n, p)?;
    if c.field() != field || d.field() != field {
        return Err(Error::BadParams(
            "central parameters must lie in GF(p)".into(),
        ));
    }
    if c.is_zero() || d.is_zero() {
        return Err(Error::NotAzumaya {
            c: c.residue().unwrap_or(0),
            d: d.residue().unwrap_or(0),
        });
    }
    if p <= n * n {
        return Err(Error::CharacteristicTooSmall {
            p,
            dim: (n * n) as usize,
        });
    }
    let n = n as usize;
    let a = point_neighbourhood(n, field, &q, c, d);
    debug_assert!(a.validate().passed());
    let (u, v) = (a.basis_vector(1), a.basis_vector(2));
    let radical = a.ideal_closure(&[u, v]);
    measure(&a, &radical)
}

/// `M_n(k[u, v]/(u, v)²)` written down directly, with its radical
/// `M_n ⊗ (u, v)` known by construction.
pub fn local_matrix_oracle(n: usize, field: FieldSpec) -> Result<PointInvariants> {
    let dim = 3 * n * n;
    let labels = (0..dim)
        .map(|k| {
            format!(
                "E{}{}·{}",
                k / 3 / n + 1,
                k / 3 % n + 1,
                ["1", "u", "v"][k % 3]
            )
        })
        .collect();
    let mut unit = vec![field.zero(); dim];
    for i in 0..n {
        unit[(i * n + i) * 3] = field.one();
    }
    let a = FinDimAlgebra::from_fn(
        field,
        labels,
        |s, t| {
            let (e1, w1, e2, w2) = (s / 3, s % 3, t / 3, t % 3);
            let mut out = vec![field.zero(); dim];
            // E_ij E_kl = δ_jk E_il; u² = uv = v² = 0
            if e1 % n == e2 / n && (w1 == 0 || w2 == 0) {
                out[((e1 / n) * n + e2 % n) * 3 + w1.max(w2)] = field.one();
            }
            out
        },
        unit,
    );
    let nilpotent: Vec<_> = (0..dim)
        .filter(|k| k % 3 != 0)
        .map(|k| a.basis_vector(k))
        .collect();
    let radical = Subspace::span(field, dim, &nilpotent);
    if a.ideal_closure(&nilpotent) != radical {
        return Err(Error::InvalidInput("M_n ⊗ (u, v) is not an ideal".into()));
    }
    measure(&a, &radical)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_two_five() {
        let r = azumaya_census(2, 5).unwrap();
        let a = &r.aggregate;
        assert_eq!(
            (
                a.azumaya_fibers,
                a.axis_fibers,
                a.rational_axis_points,
                a.rational_orbit_classes,
                a.nonsplit_axis_factors
            ),
            (16, 9, 9, 4, 4)
        );
        assert!(a.locus_identity);
        assert_eq!(a.max_factor_dim, 4);
        for f in r.fibers.iter().filter(|f| f.azumaya) {
            assert_eq!(
                f.profile,
                SemisimpleProfile {
                    radical_dim: 0,
                    factors: vec![(4, 1)]
                }
            );
        }
        let coords: Vec<_> = r
            .fibers
            .iter()
            .map(|f| (f.c.clone(), f.d.clone()))
            .collect();
        let mut sorted = coords.clone();
        sorted.sort();
        assert_eq!(coords, sorted);
    }

    #[test]
    fn census_commutative_case() {
        let r = azumaya_census(1, 3).unwrap();
        for f in &r.fibers {
            assert_eq!(
                f.profile,
                SemisimpleProfile {
                    radical_dim: 0,
                    factors: vec![(1, 1)]
                }
            );
        }
        // for n = 1 the axes are Azumaya too
        assert!(!r.aggregate.locus_identity);
    }

    #[test]
    fn census_preconditions() {
        assert!(matches!(
            azumaya_census(3, 5),
            Err(Error::OrderUnavailable { .. })
        ));
        assert!(matches!(
            azumaya_census(2, 3),
            Err(Error::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn point_invariants_match_the_oracle() {
        let f5 = FieldSpec::PrimeField(5);
        let r = azumaya_point_invariants(2, 5, &f5.one(), &f5.one()).unwrap();
        let expected = PointInvariants {
            total_dim: 12,
            radical_dim: 8,
            radical_square_zero: true,
            top_profile: vec![(4, 1)],
            center_dim: 3,
            radical_certified: true,
        };
        assert_eq!(r, expected);
        assert_eq!(local_matrix_oracle(2, f5).unwrap(), expected);
        let f13 = FieldSpec::PrimeField(13);
        assert_eq!(
            azumaya_point_invariants(2, 13, &f13.one(), &f13.one()).unwrap(),
            expected
        );
        assert_eq!(
            azumaya_point_invariants(2, 13, &f13.from_u64(2), &f13.from_u64(5)).unwrap(),
            expected
        );
    }

    #[test]
    fn point_on_an_axis_is_rejected() {
        let f5 = FieldSpec::PrimeField(5);
        assert_eq!(
            azumaya_point_invariants(2, 5, &f5.one(), &f5.zero()).unwrap_err(),
            Error::NotAzumaya { c: 1, d: 0 }
        );
    }
}
