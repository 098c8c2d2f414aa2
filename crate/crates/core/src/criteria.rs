//! The acceptance matrix: eight end-to-end checks with runtime budgets,
//! shared by the test suite and `findual selftest`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::algebra::{AlgebraHom, FinDimAlgebra};
use crate::coalgebra::{
    construct_coalgebra, coradical_preserved, dualize_algebra, dualize_coalgebra, CoalgebraKind,
    FinDimCoalgebra, Quiver,
};
use crate::error::Result;
use crate::kernel::{FieldSpec, Matrix, Scalar};
use crate::oracle::{classes_by_intertwiners, grouplikes_by_enumeration, invertible_matrices};
use crate::qplane::{
    azumaya_census, azumaya_point_invariants, irrep, irrep_classify, local_matrix_oracle,
    oq_truncation, qtwist_decomposition, PointInvariants, QPlaneKind,
};
use crate::twist::{
    corpus_pool, run_twist_corpus, sweedler_instance, verify_twisted_duality, Bialgebra,
    TwistingMap,
};

const F5: FieldSpec = FieldSpec::PrimeField(5);

/// Seed of the random twisting-map corpus.
pub const CORPUS_SEED: u64 = 7;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub budget: Duration,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn ok(&self) -> bool {
        self.passed && self.elapsed < self.budget
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({} ms, budget {} ms): {}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_millis(),
            self.budget.as_millis(),
            self.detail
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

const CRITERIA: [(u8, &str, u64, Check); 8] = [
    (1, "dualization round trip", 1000, dualization_round_trip),
    (
        2,
        "twisting axioms match the twisted product",
        10_000,
        twist_equivalence,
    ),
    (3, "twisted duality at finite level", 1000, twisted_duality),
    (4, "quantum-plane census", 10_000, qplane_census),
    (5, "Azumaya point invariants", 1000, azumaya_point),
    (6, "irreducible representations", 5000, irreps),
    (7, "grouplikes and coradicals", 10_000, coradical_machinery),
    (8, "crossed bialgebra duality", 1000, crossed_bialgebra),
];

pub fn criterion_ids() -> Vec<u8> {
    CRITERIA.iter().map(|c| c.0).collect()
}

pub fn run_criterion(id: u8) -> Option<CriterionOutcome> {
    let &(id, name, budget_ms, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(CriterionOutcome {
        id,
        name,
        passed,
        elapsed: start.elapsed(),
        budget: Duration::from_millis(budget_ms),
        detail,
    })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    criterion_ids()
        .into_iter()
        .filter_map(run_criterion)
        .collect()
}

pub fn test_quivers() -> Vec<Quiver> {
    let mut qs: Vec<Quiver> = (1..=5).map(Quiver::linear).collect();
    qs.extend([
        Quiver::new(3, vec![]),
        Quiver::new(2, vec![(0, 1), (0, 1)]),
        Quiver::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]),
        Quiver::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]),
        Quiver::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (1, 4)]),
    ]);
    qs
}

/// Every named coalgebra in the test range over `field`.
pub fn named_coalgebras(field: FieldSpec) -> Result<Vec<FinDimCoalgebra>> {
    let mut kinds: Vec<CoalgebraKind> = Vec::new();
    kinds.extend((1..=3).map(|d| CoalgebraKind::Comatrix { d }));
    kinds.extend((1..=3).map(|n| CoalgebraKind::Triangular { n }));
    kinds.extend(test_quivers().into_iter().map(CoalgebraKind::Path));
    kinds.extend((1..=5).map(|k| CoalgebraKind::Grouplike {
        elements: (1..=k).map(|i| format!("g{i}")).collect(),
    }));
    kinds.extend((1..=5).map(|m| CoalgebraKind::DividedPower { m }));
    let s = |v: i64| field.from_i64(v);
    for points in [
        vec![(s(0), 1)],
        vec![(s(1), 2), (s(3), 1)],
        vec![(s(-1), 1), (s(0), 1), (s(2), 2)],
    ] {
        kinds.push(CoalgebraKind::LineDist { points });
    }
    kinds
        .iter()
        .map(|k| construct_coalgebra(k, field))
        .collect()
}

/// Quantum-plane truncations of dimension at most 16 for a few `(n, p)`.
pub fn qplane_algebras() -> Result<Vec<FinDimAlgebra>> {
    let mut out = Vec::new();
    for (n, p) in [(1u64, 5u64), (2, 5), (4, 5), (3, 7), (2, 13)] {
        for a in 1..=16 {
            for b in 1..=16 / a {
                out.push(oq_truncation(n, p, QPlaneKind::Box { a, b })?.algebra);
            }
        }
        let field = FieldSpec::PrimeField(p);
        for c in field.elements().expect("finite") {
            for d in field.elements().expect("finite") {
                out.push(
                    oq_truncation(n, p, QPlaneKind::CentralFiber { c: c.clone(), d })?.algebra,
                );
            }
        }
    }
    Ok(out)
}

fn dualization_round_trip() -> Result<(bool, String)> {
    let mut coalgebras = named_coalgebras(FieldSpec::Rationals)?;
    coalgebras.extend(named_coalgebras(F5)?);
    let algebras = qplane_algebras()?;
    let mut bad = Vec::new();
    for c in &coalgebras {
        if &dualize_algebra(&dualize_coalgebra(c)?)? != c {
            bad.push(format!("{:?}", c.labels()));
        }
    }
    for a in &algebras {
        if &dualize_coalgebra(&dualize_algebra(a)?)? != a {
            bad.push(format!("{:?}", a.labels()));
        }
    }
    Ok((
        bad.is_empty(),
        format!(
            "{} coalgebras, {} algebras, {} mismatches",
            coalgebras.len(),
            algebras.len(),
            bad.len()
        ),
    ))
}

fn twist_equivalence() -> Result<(bool, String)> {
    let t = run_twist_corpus(CORPUS_SEED, 500);
    Ok((
        t.equivalence_failures.is_empty() && t.axiom_duality_failures.is_empty(),
        format!(
            "{} maps, {} twisting, {} discrepancies, {} axiom-duality failures",
            t.trials,
            t.passing,
            t.equivalence_failures.len(),
            t.axiom_duality_failures.len()
        ),
    ))
}

fn twisted_duality() -> Result<(bool, String)> {
    let pool = corpus_pool();
    let mut maps: Vec<TwistingMap> = pool
        .iter()
        .flat_map(|a| pool.iter().map(move |b| TwistingMap::swap(a, b)))
        .collect();
    maps.push(sweedler_instance(F5)?.rho);
    maps.push(qtwist_decomposition(2, 5, 2, 2)?.rho);
    maps.push(qtwist_decomposition(2, 5, 4, 4)?.rho);
    let mut equal = 0;
    for rho in &maps {
        equal += verify_twisted_duality(rho)?.equal as usize;
    }
    Ok((
        equal == maps.len(),
        format!(
            "{equal}/{} maps dualize to their crossed coalgebra",
            maps.len()
        ),
    ))
}

fn qplane_census() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, p, expected) in [(2, 5, [16, 9, 9, 4, 4]), (2, 13, [144, 25, 25, 36, 12])] {
        let start = Instant::now();
        let r = azumaya_census(n, p)?;
        let elapsed = start.elapsed();
        let a = &r.aggregate;
        let got = [
            a.azumaya_fibers,
            a.axis_fibers,
            a.rational_axis_points,
            a.rational_orbit_classes,
            a.nonsplit_axis_factors,
        ];
        let profiles = r
            .fibers
            .iter()
            .filter(|f| f.azumaya)
            .all(|f| f.profile.is_full_matrix_algebra(n as usize));
        let this = got == expected
            && profiles
            && a.locus_identity
            && a.max_factor_dim == (n * n) as usize
            && a.rational_axis_points as u64 == 2 * p - 1
            && elapsed < Duration::from_secs(5);
        ok &= this;
        parts.push(format!("(n={n}, p={p}) {got:?}"));
    }
    Ok((ok, parts.join("; ")))
}

pub fn expected_point_invariants() -> PointInvariants {
    PointInvariants {
        total_dim: 12,
        radical_dim: 8,
        radical_square_zero: true,
        top_profile: vec![(4, 1)],
        center_dim: 3,
        radical_certified: true,
    }
}

fn azumaya_point() -> Result<(bool, String)> {
    let got = azumaya_point_invariants(2, 5, &F5.one(), &F5.one())?;
    let oracle = local_matrix_oracle(2, F5)?;
    Ok((
        got == expected_point_invariants() && got == oracle,
        format!(
            "total {}, radical {}, radical² = 0: {}, top {:?}, center {}; oracle agrees: {}",
            got.total_dim,
            got.radical_dim,
            got.radical_square_zero,
            got.top_profile,
            got.center_dim,
            got == oracle
        ),
    ))
}

fn irreps() -> Result<(bool, String)> {
    let units: Vec<Scalar> = (1..5).map(|v| F5.from_u64(v)).collect();
    let mut reps = Vec::new();
    for a in &units {
        for b in &units {
            reps.push(irrep(2, 5, a, b)?);
        }
    }
    let four = F5.from_u64(4);
    let well_formed = reps.iter().all(|r| {
        r.q == four
            && r.satisfies_relation()
            && r.image_dim() == 4
            && r.x.pow(2) == Matrix::identity(F5, 2).scale(&r.alpha.pow(2))
            && r.y.pow(2) == Matrix::identity(F5, 2).scale(&r.beta.pow(2))
    });
    let gl2 = invertible_matrices(F5, 2);
    let classes = classes_by_intertwiners(&reps, &gl2);
    let key = |k: usize| (reps[k].alpha.pow(2), reps[k].beta.pow(2));
    let mut by_powers: BTreeMap<(Scalar, Scalar), Vec<usize>> = BTreeMap::new();
    for k in 0..reps.len() {
        by_powers.entry(key(k)).or_default().push(k);
    }
    let mut expected: Vec<Vec<usize>> = by_powers.into_values().collect();
    let mut found = classes.clone();
    expected.sort();
    found.sort();
    let classified = irrep_classify(2, 5)?.n_dim_classes;
    Ok((
        well_formed && gl2.len() == 480 && found == expected && classified == found.len(),
        format!(
            "16 irreps well formed: {well_formed}; {} intertwiner classes over {} candidates, {} classes by (α², β²)",
            found.len(),
            gl2.len(),
            expected.len()
        ),
    ))
}

/// Coalgebras over GF(5) of dimension at most 4 used for the grouplike check.
pub fn small_coalgebras() -> Result<Vec<FinDimCoalgebra>> {
    let mut out: Vec<FinDimCoalgebra> = named_coalgebras(F5)?
        .into_iter()
        .filter(|c| c.dim() <= 4)
        .collect();
    for a in corpus_pool() {
        out.push(dualize_algebra(&a)?);
    }
    for a in qplane_algebras()?
        .into_iter()
        .filter(|a| a.dim() <= 4 && a.field() == F5)
    {
        out.push(dualize_algebra(&a)?);
    }
    for m in 1..=4 {
        out.push(Bialgebra::group_algebra(F5, m)?.coalgebra().clone());
    }
    Ok(out)
}

/// All algebra maps from a corpus algebra into `k^m`, `m ≤ 3`.
pub fn maps_into_split_targets() -> Result<Vec<AlgebraHom>> {
    let mut out = Vec::new();
    for a in corpus_pool() {
        let chars = a.one_dim_characters()?;
        for m in 1..=3usize {
            let target = FinDimAlgebra::diagonal(F5, m);
            let mut choices: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..m {
                choices = choices
                    .into_iter()
                    .flat_map(|c| (0..chars.len()).map(move |k| [c.clone(), vec![k]].concat()))
                    .collect();
            }
            for choice in choices {
                let images: Vec<Vec<Scalar>> = (0..a.dim())
                    .map(|i| choice.iter().map(|&k| chars[k].values[i].clone()).collect())
                    .collect();
                out.push(AlgebraHom::from_images(a.clone(), target.clone(), &images)?);
            }
        }
    }
    Ok(out)
}

fn coradical_machinery() -> Result<(bool, String)> {
    let examples = small_coalgebras()?;
    let mut mismatched = 0;
    for c in &examples {
        let mut fast = c.grouplikes()?;
        fast.sort();
        mismatched += (fast != grouplikes_by_enumeration(c)) as usize;
    }
    let t = FinDimAlgebra::truncated_power(F5, "t", 2);
    let m2 = FinDimAlgebra::matrix_algebra(F5, 2);
    let e12 = AlgebraHom::from_images(t, m2.clone(), &[m2.unit().to_vec(), m2.basis_vector(1)])?;
    let counterexample = !coradical_preserved(&e12)?.preserved;
    let positives = maps_into_split_targets()?;
    let mut preserved = 0;
    for f in &positives {
        preserved += coradical_preserved(f)?.preserved as usize;
    }
    Ok((
        mismatched == 0 && counterexample && preserved == positives.len(),
        format!(
            "grouplikes agree on {}/{} coalgebras; t ↦ E12 breaks the coradical: {counterexample}; {preserved}/{} maps into k^m preserve it",
            examples.len() - mismatched,
            examples.len(),
            positives.len()
        ),
    ))
}

fn crossed_bialgebra() -> Result<(bool, String)> {
    let r = sweedler_instance(F5)?.verify()?;
    Ok((
        r.is_bialgebra && r.duality_holds,
        format!(
            "bialgebra: {}, dual is the crossed product of the duals: {}",
            r.is_bialgebra, r.duality_holds
        ),
    ))
}
