//! A seeded random corpus of candidate twisting maps over GF(5), used to
//! check that the axioms on `ρ` match the behaviour of `m_ρ` and that
//! dualization preserves everything.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{dual_cotwist_unchecked, verify_twisted_duality, TwistingMap};
use crate::algebra::FinDimAlgebra;
use crate::kernel::{FieldSpec, Poly};

const F5: FieldSpec = FieldSpec::PrimeField(5);

/// Outcome counts; the failure lists hold trial indices and should be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusTally {
    pub trials: usize,
    /// Trials where `ρ` is normal and multiplicative.
    pub passing: usize,
    /// The axioms on `ρ` disagree with associativity and unitality of `m_ρ`.
    pub equivalence_failures: Vec<usize>,
    /// Normality or multiplicativity of `ρ` disagrees with the co-version for `ρᵀ`.
    pub axiom_duality_failures: Vec<usize>,
    /// A passing `ρ` whose twisted product does not dualize to the crossed coalgebra.
    pub twisted_duality_failures: Vec<usize>,
}

impl CorpusTally {
    pub fn clean(&self) -> bool {
        self.equivalence_failures.is_empty()
            && self.axiom_duality_failures.is_empty()
            && self.twisted_duality_failures.is_empty()
    }
}

/// Algebras of dimension at most 3; in all but the diagonal ones the unit is `b_0`.
pub fn corpus_pool() -> Vec<FinDimAlgebra> {
    vec![
        FinDimAlgebra::diagonal(F5, 1),
        FinDimAlgebra::truncated_power(F5, "t", 2),
        FinDimAlgebra::truncated_power(F5, "t", 3),
        FinDimAlgebra::cyclic_group_algebra(F5, "g", 2),
        FinDimAlgebra::cyclic_group_algebra(F5, "g", 3),
        FinDimAlgebra::truncated_polynomial("u", &Poly::from_i64(F5, &[-2, 0, 1])).expect("monic"),
        FinDimAlgebra::diagonal(F5, 2),
        FinDimAlgebra::diagonal(F5, 3),
        FinDimAlgebra::upper_triangular(F5, 2),
    ]
}

fn nonzero(rng: &mut ChaCha8Rng) -> crate::kernel::Scalar {
    F5.from_u64(rng.gen_range(1..5))
}

/// `σ` plus one of: graded rescaling `b_j⊗a_i -> λ^{ij} a_i⊗b_j`, random
/// rescaling or a sparse perturbation (both away from the unit rows and
/// columns), or a perturbation anywhere.
fn sample(rng: &mut ChaCha8Rng, pool: &[FinDimAlgebra]) -> TwistingMap {
    let a = pool.choose(rng).unwrap().clone();
    let b = pool.choose(rng).unwrap().clone();
    let (da, db) = (a.dim(), b.dim());
    let mut m = TwistingMap::swap(&a, &b).matrix().clone();
    let col = |j: usize, i: usize| j * da + i;
    let row = |i: usize, j: usize| i * db + j;
    match rng.gen_range(0..4) {
        0 => {
            let lambda = nonzero(rng);
            for j in 1..db {
                for i in 1..da {
                    m.set(row(i, j), col(j, i), lambda.pow((i * j) as u64));
                }
            }
        }
        1 => {
            for j in 1..db {
                for i in 1..da {
                    if rng.gen_bool(0.5) {
                        m.set(row(i, j), col(j, i), nonzero(rng));
                    }
                }
            }
        }
        2 => {
            if da > 1 && db > 1 {
                for _ in 0..rng.gen_range(1..=2) {
                    let (j, i) = (rng.gen_range(1..db), rng.gen_range(1..da));
                    let (k, l) = (rng.gen_range(1..da), rng.gen_range(1..db));
                    m.add_to(row(k, l), col(j, i), &nonzero(rng));
                }
            }
        }
        _ => {
            let n = da * db;
            m.add_to(rng.gen_range(0..n), rng.gen_range(0..n), &nonzero(rng));
        }
    }
    TwistingMap::new(a, b, m).expect("square of the right size")
}

struct Trial {
    passing: bool,
    equivalent: bool,
    axioms_dualize: bool,
    duality: bool,
}

fn run_trial(seed: u64, index: usize, pool: &[FinDimAlgebra]) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let rho = sample(&mut rng, pool);
    let report = rho.check();
    let raw = rho.product_unchecked().validate();
    let dual = dual_cotwist_unchecked(&rho).check();
    let passing = report.passed();
    let duality = !passing
        || verify_twisted_duality(&rho)
            .map(|r| r.equal)
            .unwrap_or(false);
    Trial {
        passing,
        equivalent: passing == raw.passed(),
        axioms_dualize: report.normal == dual.conormal
            && report.multiplicative == dual.comultiplicative,
        duality,
    }
}

/// Run `trials` seeded samples in parallel; results are merged in trial order.
pub fn run_twist_corpus(seed: u64, trials: usize) -> CorpusTally {
    let pool = corpus_pool();
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|k| run_trial(seed, k, &pool))
        .collect();
    let mut tally = CorpusTally {
        trials,
        ..Default::default()
    };
    for (k, t) in results.iter().enumerate() {
        tally.passing += t.passing as usize;
        if !t.equivalent {
            tally.equivalence_failures.push(k);
        }
        if !t.axioms_dualize {
            tally.axiom_duality_failures.push(k);
        }
        if !t.duality {
            tally.twisted_duality_failures.push(k);
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_mixes_passing_and_failing_cases() {
        let tally = run_twist_corpus(7, 120);
        assert!(tally.clean(), "{tally:?}");
        assert!(tally.passing > 10 && tally.passing < 110, "{tally:?}");
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(run_twist_corpus(3, 40), run_twist_corpus(3, 40));
    }
}
