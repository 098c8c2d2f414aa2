//! Canonical JSON forms for every domain value.
//!
//! Composite indices are row-major with the left factor major: the basis
//! element `b_i ⊗ b_j` of `V ⊗ W` sits at `i·dim W + j`. Sparse structure
//! constants are written as sorted triples, dense matrices as arrays of rows,
//! and objects come out with sorted keys, so equal values encode to equal bytes.

use serde_json::{json, Map, Value};

use crate::algebra::{FinDimAlgebra, SemisimpleProfile};
use crate::coalgebra::{CoalgebraHom, DualTower, FinDimCoalgebra};
use crate::error::{Error, Result};
use crate::kernel::{format_rational, parse_rational, FieldSpec, Matrix, Scalar};
use crate::qplane::{CensusAggregate, CensusReport, FiberRecord, PointInvariants};
use crate::twist::{CotwistingMap, TwistingMap};

fn mismatch(what: impl Into<String>) -> Error {
    Error::SchemaMismatch(what.into())
}

fn field_of<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| mismatch(format!("expected an object holding {key:?}")))?
        .get(key)
        .ok_or_else(|| mismatch(format!("missing key {key:?}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| mismatch(format!("{what} must be an array")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| mismatch(format!("{what} must be a non-negative integer")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| mismatch(format!("{what} must be a non-negative integer")))
}

fn as_bool(v: &Value, what: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| mismatch(format!("{what} must be a boolean")))
}

/// Reject keys outside `allowed`, so foreign documents do not decode silently.
fn exact_keys(v: &Value, allowed: &[&str], what: &str) -> Result<()> {
    let obj = v
        .as_object()
        .ok_or_else(|| mismatch(format!("{what} must be an object")))?;
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(mismatch(format!("unexpected key {k:?} in {what}"))),
        None => Ok(()),
    }
}

pub fn encode_field(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Rationals => json!({ "kind": "rationals" }),
        FieldSpec::PrimeField(p) => json!({ "kind": "prime-field", "p": p }),
    }
}

pub fn decode_field(v: &Value) -> Result<FieldSpec> {
    match field_of(v, "kind")?.as_str() {
        Some("rationals") => {
            exact_keys(v, &["kind"], "field")?;
            Ok(FieldSpec::Rationals)
        }
        Some("prime-field") => {
            exact_keys(v, &["kind", "p"], "field")?;
            let p = as_u64(field_of(v, "p")?, "p")?;
            FieldSpec::prime(p).map_err(|_| mismatch(format!("{p} is not prime")))
        }
        _ => Err(mismatch("unknown field kind")),
    }
}

/// Rationals as `"num/den"` strings, residues as integers in `[0, p)`.
pub fn encode_scalar(s: &Scalar) -> Value {
    match s.as_rational() {
        Some(r) => Value::String(format_rational(r)),
        None => json!(s.residue().expect("residue")),
    }
}

pub fn decode_scalar(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match field {
        FieldSpec::Rationals => {
            let s = v
                .as_str()
                .ok_or_else(|| mismatch("rationals are encoded as \"num/den\" strings"))?;
            parse_rational(s)
        }
        FieldSpec::PrimeField(p) => match v.as_u64() {
            Some(x) if x < p => Ok(field.from_u64(x)),
            _ => Err(mismatch(format!("residues are integers in [0, {p})"))),
        },
    }
}

fn encode_vec(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(encode_scalar).collect())
}

fn decode_vec(field: FieldSpec, v: &Value, what: &str) -> Result<Vec<Scalar>> {
    as_array(v, what)?
        .iter()
        .map(|x| decode_scalar(field, x))
        .collect()
}

pub fn encode_matrix(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| encode_vec(r)).collect())
}

pub fn decode_matrix(field: FieldSpec, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let rs = as_array(v, "matrix")?;
    if rs.len() != rows {
        return Err(mismatch(format!(
            "matrix has {} rows, expected {rows}",
            rs.len()
        )));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for r in rs {
        let row = decode_vec(field, r, "matrix row")?;
        if row.len() != cols {
            return Err(mismatch(format!(
                "matrix row has {} entries, expected {cols}",
                row.len()
            )));
        }
        entries.extend(row);
    }
    Ok(Matrix::from_entries(field, rows, cols, entries))
}

fn decode_labels(v: &Value, dim: usize) -> Result<Vec<String>> {
    let labels = as_array(v, "labels")?
        .iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| mismatch("labels must be strings"))
        })
        .collect::<Result<Vec<_>>>()?;
    if labels.len() != dim {
        return Err(mismatch(format!(
            "{} labels for dimension {dim}",
            labels.len()
        )));
    }
    Ok(labels)
}

/// Triples `[a, b, c, s]` with `s ≠ 0` addressing `(row, col)` through `place`.
fn decode_sparse(
    field: FieldSpec,
    v: &Value,
    dim: usize,
    rows: usize,
    cols: usize,
    place: impl Fn(usize, usize, usize) -> (usize, usize),
) -> Result<Matrix> {
    let mut m = Matrix::zeros(field, rows, cols);
    let mut last: Option<(usize, usize, usize)> = None;
    for t in as_array(v, "structure constants")? {
        let t = as_array(t, "triple")?;
        if t.len() != 4 {
            return Err(mismatch("sparse entries have the form [i, j, k, scalar]"));
        }
        let idx = (
            as_usize(&t[0], "index")?,
            as_usize(&t[1], "index")?,
            as_usize(&t[2], "index")?,
        );
        if idx.0 >= dim || idx.1 >= dim || idx.2 >= dim {
            return Err(mismatch(format!(
                "index {idx:?} out of range for dimension {dim}"
            )));
        }
        if last.is_some_and(|l| l >= idx) {
            return Err(mismatch("sparse entries must be strictly sorted"));
        }
        last = Some(idx);
        let s = decode_scalar(field, &t[3])?;
        if s.is_zero() {
            return Err(mismatch("sparse entries must be nonzero"));
        }
        let (r, c) = place(idx.0, idx.1, idx.2);
        m.set(r, c, s);
    }
    Ok(m)
}

pub fn encode_algebra(a: &FinDimAlgebra) -> Value {
    let n = a.dim();
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                let s = a.mul_matrix().get(r, i * n + j);
                if !s.is_zero() {
                    mul.push(json!([i, j, r, encode_scalar(s)]));
                }
            }
        }
    }
    json!({
        "field": encode_field(a.field()),
        "dim": n,
        "labels": a.labels(),
        "mul": mul,
        "unit": encode_vec(a.unit()),
    })
}

/// Decode and validate; a document whose constants are not associative and
/// unital is rejected.
pub fn decode_algebra(v: &Value) -> Result<FinDimAlgebra> {
    exact_keys(v, &["field", "dim", "labels", "mul", "unit"], "algebra")?;
    let field = decode_field(field_of(v, "field")?)?;
    let n = as_usize(field_of(v, "dim")?, "dim")?;
    let labels = decode_labels(field_of(v, "labels")?, n)?;
    let mul = decode_sparse(field, field_of(v, "mul")?, n, n, n * n, |i, j, r| {
        (r, i * n + j)
    })?;
    let unit = decode_vec(field, field_of(v, "unit")?, "unit")?;
    let a = FinDimAlgebra::new(field, labels, mul, unit).map_err(|e| mismatch(e.to_string()))?;
    a.validated()
}

pub fn encode_coalgebra(c: &FinDimCoalgebra) -> Value {
    let n = c.dim();
    let mut comul = Vec::new();
    for r in 0..n {
        for i in 0..n {
            for j in 0..n {
                let s = c.coeff(r, i, j);
                if !s.is_zero() {
                    comul.push(json!([r, i, j, encode_scalar(s)]));
                }
            }
        }
    }
    json!({
        "field": encode_field(c.field()),
        "dim": n,
        "labels": c.labels(),
        "comul": comul,
        "counit": encode_vec(c.counit()),
    })
}

pub fn decode_coalgebra(v: &Value) -> Result<FinDimCoalgebra> {
    exact_keys(
        v,
        &["field", "dim", "labels", "comul", "counit"],
        "coalgebra",
    )?;
    let field = decode_field(field_of(v, "field")?)?;
    let n = as_usize(field_of(v, "dim")?, "dim")?;
    let labels = decode_labels(field_of(v, "labels")?, n)?;
    let comul = decode_sparse(field, field_of(v, "comul")?, n, n * n, n, |r, i, j| {
        (i * n + j, r)
    })?;
    let counit = decode_vec(field, field_of(v, "counit")?, "counit")?;
    let c =
        FinDimCoalgebra::new(field, labels, comul, counit).map_err(|e| mismatch(e.to_string()))?;
    c.validated()
}

pub fn encode_tower(t: &DualTower) -> Value {
    json!({
        "levels": t.levels().iter().map(encode_coalgebra).collect::<Vec<_>>(),
        "inclusions": t.inclusions().iter().map(|f| encode_matrix(f.matrix())).collect::<Vec<_>>(),
    })
}

pub fn decode_tower(v: &Value) -> Result<DualTower> {
    exact_keys(v, &["levels", "inclusions"], "tower")?;
    let levels = as_array(field_of(v, "levels")?, "levels")?
        .iter()
        .map(decode_coalgebra)
        .collect::<Result<Vec<_>>>()?;
    let inclusions = as_array(field_of(v, "inclusions")?, "inclusions")?;
    if levels.is_empty() || inclusions.len() + 1 != levels.len() {
        return Err(mismatch(
            "a tower has one inclusion fewer than its (nonempty) levels",
        ));
    }
    let mut it = levels.into_iter();
    let mut tower = DualTower::new(it.next().expect("nonempty"));
    for (next, m) in it.zip(inclusions) {
        let m = decode_matrix(next.field(), m, next.dim(), tower.top().dim())?;
        let f = CoalgebraHom::new_unchecked(tower.top().clone(), next.clone(), m)?;
        tower = tower.extend(next, f)?;
    }
    Ok(tower)
}

/// `ρ: B ⊗ A → A ⊗ B`; rows index `A ⊗ B`, columns `B ⊗ A`.
pub fn encode_twist(rho: &TwistingMap) -> Value {
    json!({ "a": encode_algebra(rho.a()), "b": encode_algebra(rho.b()), "matrix": encode_matrix(rho.matrix()) })
}

/// Decodes any correctly shaped map; whether it satisfies the axioms is
/// left to the caller.
pub fn decode_twist(v: &Value) -> Result<TwistingMap> {
    exact_keys(v, &["a", "b", "matrix"], "twisting map")?;
    let a = decode_algebra(field_of(v, "a")?)?;
    let b = decode_algebra(field_of(v, "b")?)?;
    let n = a.dim() * b.dim();
    let m = decode_matrix(a.field(), field_of(v, "matrix")?, n, n)?;
    TwistingMap::new(a, b, m)
}

/// `φ: C ⊗ D → D ⊗ C`, stored under the same keys as a twisting map.
pub fn encode_cotwist(phi: &CotwistingMap) -> Value {
    json!({ "a": encode_coalgebra(phi.c()), "b": encode_coalgebra(phi.d()), "matrix": encode_matrix(phi.matrix()) })
}

pub fn decode_cotwist(v: &Value) -> Result<CotwistingMap> {
    exact_keys(v, &["a", "b", "matrix"], "cotwisting map")?;
    let c = decode_coalgebra(field_of(v, "a")?)?;
    let d = decode_coalgebra(field_of(v, "b")?)?;
    let n = c.dim() * d.dim();
    let m = decode_matrix(c.field(), field_of(v, "matrix")?, n, n)?;
    CotwistingMap::new(c, d, m)
}

fn encode_profile(p: &SemisimpleProfile) -> Value {
    json!({ "radical_dim": p.radical_dim, "factors": p.factors })
}

fn decode_pairs(v: &Value) -> Result<Vec<(usize, usize)>> {
    as_array(v, "factors")?
        .iter()
        .map(|f| match f.as_array().map(Vec::as_slice) {
            Some([d, z]) => Ok((
                as_usize(d, "factor dimension")?,
                as_usize(z, "center dimension")?,
            )),
            _ => Err(mismatch("factors are [dim, center_dim] pairs")),
        })
        .collect()
}

fn decode_profile(v: &Value) -> Result<SemisimpleProfile> {
    exact_keys(v, &["radical_dim", "factors"], "profile")?;
    Ok(SemisimpleProfile {
        radical_dim: as_usize(field_of(v, "radical_dim")?, "radical_dim")?,
        factors: decode_pairs(field_of(v, "factors")?)?,
    })
}

const AGGREGATE_KEYS: [&str; 7] = [
    "azumaya_fibers",
    "axis_fibers",
    "rational_axis_points",
    "rational_orbit_classes",
    "nonsplit_axis_factors",
    "locus_identity",
    "max_factor_dim",
];

pub fn encode_census(r: &CensusReport) -> Value {
    let a = &r.aggregate;
    let fibers: Vec<Value> = r
        .fibers
        .iter()
        .map(|f| {
            json!({
                "c": encode_scalar(&f.c),
                "d": encode_scalar(&f.d),
                "azumaya": f.azumaya,
                "profile": encode_profile(&f.profile),
                "characters": f.characters,
            })
        })
        .collect();
    json!({
        "n": r.n,
        "p": r.p,
        "fibers": fibers,
        "aggregate": {
            "azumaya_fibers": a.azumaya_fibers,
            "axis_fibers": a.axis_fibers,
            "rational_axis_points": a.rational_axis_points,
            "rational_orbit_classes": a.rational_orbit_classes,
            "nonsplit_axis_factors": a.nonsplit_axis_factors,
            "locus_identity": a.locus_identity,
            "max_factor_dim": a.max_factor_dim,
        },
    })
}

pub fn decode_census(v: &Value) -> Result<CensusReport> {
    exact_keys(v, &["n", "p", "fibers", "aggregate"], "census")?;
    let n = as_u64(field_of(v, "n")?, "n")?;
    let p = as_u64(field_of(v, "p")?, "p")?;
    let field = FieldSpec::prime(p).map_err(|_| mismatch(format!("{p} is not prime")))?;
    let fibers = as_array(field_of(v, "fibers")?, "fibers")?
        .iter()
        .map(|f| {
            exact_keys(f, &["c", "d", "azumaya", "profile", "characters"], "fiber")?;
            Ok(FiberRecord {
                c: decode_scalar(field, field_of(f, "c")?)?,
                d: decode_scalar(field, field_of(f, "d")?)?,
                azumaya: as_bool(field_of(f, "azumaya")?, "azumaya")?,
                profile: decode_profile(field_of(f, "profile")?)?,
                characters: as_usize(field_of(f, "characters")?, "characters")?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let a = field_of(v, "aggregate")?;
    exact_keys(a, &AGGREGATE_KEYS, "aggregate")?;
    let count = |k: &str| as_usize(field_of(a, k)?, k);
    let aggregate = CensusAggregate {
        azumaya_fibers: count("azumaya_fibers")?,
        axis_fibers: count("axis_fibers")?,
        rational_axis_points: count("rational_axis_points")?,
        rational_orbit_classes: count("rational_orbit_classes")?,
        nonsplit_axis_factors: count("nonsplit_axis_factors")?,
        locus_identity: as_bool(field_of(a, "locus_identity")?, "locus_identity")?,
        max_factor_dim: count("max_factor_dim")?,
    };
    Ok(CensusReport {
        n,
        p,
        fibers,
        aggregate,
    })
}

/// One row per fiber: `c,d,azumaya,radical_dim,factors,characters`, with the
/// factors written as `dim:center` joined by `;`.
pub fn census_csv(r: &CensusReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["c", "d", "azumaya", "radical_dim", "factors", "characters"])
        .expect("in-memory write");
    for f in &r.fibers {
        let factors: Vec<String> = f
            .profile
            .factors
            .iter()
            .map(|(d, z)| format!("{d}:{z}"))
            .collect();
        w.write_record([
            f.c.to_string(),
            f.d.to_string(),
            f.azumaya.to_string(),
            f.profile.radical_dim.to_string(),
            factors.join(";"),
            f.characters.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

pub fn encode_point(p: &PointInvariants) -> Value {
    json!({
        "total_dim": p.total_dim,
        "radical_dim": p.radical_dim,
        "radical_square_zero": p.radical_square_zero,
        "top_profile": p.top_profile,
        "center_dim": p.center_dim,
        "radical_certified": p.radical_certified,
    })
}

pub fn decode_point(v: &Value) -> Result<PointInvariants> {
    exact_keys(
        v,
        &[
            "total_dim",
            "radical_dim",
            "radical_square_zero",
            "top_profile",
            "center_dim",
            "radical_certified",
        ],
        "point invariants",
    )?;
    Ok(PointInvariants {
        total_dim: as_usize(field_of(v, "total_dim")?, "total_dim")?,
        radical_dim: as_usize(field_of(v, "radical_dim")?, "radical_dim")?,
        radical_square_zero: as_bool(field_of(v, "radical_square_zero")?, "radical_square_zero")?,
        top_profile: decode_pairs(field_of(v, "top_profile")?)?,
        center_dim: as_usize(field_of(v, "center_dim")?, "center_dim")?,
        radical_certified: as_bool(field_of(v, "radical_certified")?, "radical_certified")?,
    })
}

/// Parse text into a JSON value, reporting malformed text as a schema mismatch.
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| mismatch(format!("malformed JSON: {e}")))
}

/// Pretty, key-sorted rendering with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Rebuild an object with only the given keys, in sorted order.
pub fn pick(v: &Value, keys: &[&str]) -> Value {
    let mut m = Map::new();
    for k in keys {
        if let Some(x) = v.get(*k) {
            m.insert((*k).to_string(), x.clone());
        }
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{construct_coalgebra, CoalgebraKind};
    use crate::qplane::azumaya_census;
    use crate::twist::sweedler_instance;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn scalars() {
        let q = FieldSpec::Rationals;
        let half = q.from_ratio(-1, 2).unwrap();
        assert_eq!(encode_scalar(&half), json!("-1/2"));
        assert_eq!(encode_scalar(&q.from_i64(3)), json!("3/1"));
        assert_eq!(
            decode_scalar(q, &json!("6/-4")).unwrap(),
            q.from_ratio(-3, 2).unwrap()
        );
        assert_eq!(encode_scalar(&F5.from_i64(-1)), json!(4));
        assert!(decode_scalar(F5, &json!(5)).is_err());
        assert!(decode_scalar(q, &json!(3)).is_err());
        assert!(decode_scalar(q, &json!("1/0")).is_err());
    }

    #[test]
    fn matrix_algebra_round_trip() {
        let m2 = FinDimAlgebra::matrix_algebra(F5, 2);
        let v = encode_algebra(&m2);
        assert_eq!(v["mul"][0], json!([0, 0, 0, 1]));
        let back = decode_algebra(&parse(&render(&v)).unwrap()).unwrap();
        assert_eq!(back, m2);
        assert_eq!(render(&encode_algebra(&back)), render(&v));
    }

    #[test]
    fn rational_coalgebra_round_trip() {
        let c = construct_coalgebra(
            &CoalgebraKind::LineDist {
                points: vec![(FieldSpec::Rationals.from_ratio(1, 3).unwrap(), 2)],
            },
            FieldSpec::Rationals,
        )
        .unwrap();
        assert_eq!(decode_coalgebra(&encode_coalgebra(&c)).unwrap(), c);
    }

    #[test]
    fn tower_round_trip() {
        let t = DualTower::divided_power_chain(F5, 3).unwrap();
        let v = encode_tower(&t);
        assert_eq!(decode_tower(&v).unwrap(), t);
    }

    #[test]
    fn census_round_trip() {
        let r = azumaya_census(2, 5).unwrap();
        let v = encode_census(&r);
        assert_eq!(v["aggregate"]["azumaya_fibers"], json!(16));
        assert_eq!(decode_census(&v).unwrap(), r);
        let csv = census_csv(&r);
        assert_eq!(csv.lines().count(), 26);
        assert!(csv.contains("\n1,1,true,0,4:1,0\n"));
    }

    #[test]
    fn twists_round_trip() {
        let inst = sweedler_instance(F5).unwrap();
        assert_eq!(decode_twist(&encode_twist(&inst.rho)).unwrap(), inst.rho);
        assert_eq!(
            decode_cotwist(&encode_cotwist(&inst.phi)).unwrap(),
            inst.phi
        );
    }

    #[test]
    fn foreign_documents_are_rejected() {
        let good = encode_algebra(&FinDimAlgebra::truncated_power(F5, "t", 2));
        let mut extra = good.clone();
        extra["comul"] = json!([]);
        let mut unsorted = good.clone();
        unsorted["mul"] = json!([[0, 1, 1, 1], [0, 0, 0, 1], [1, 0, 1, 1]]);
        let mut broken = good.clone();
        broken["unit"] = json!([0, 1]);
        for doc in [
            json!(null),
            json!({"kind": "algebra"}),
            extra,
            unsorted,
            broken,
        ] {
            assert!(
                matches!(
                    decode_algebra(&doc),
                    Err(Error::SchemaMismatch(_) | Error::InvalidInput(_))
                ),
                "{doc}"
            );
        }
        assert!(matches!(parse("{"), Err(Error::SchemaMismatch(_))));
    }
}
