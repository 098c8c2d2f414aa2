use std::collections::{BTreeSet, HashMap};

use super::{dualize_algebra_unchecked, FinDimCoalgebra};
use crate::algebra::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, Scalar};

/// A finite directed graph; arrow `k` runs from `arrows[k].0` to `arrows[k].1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Self {
        Quiver { vertices, arrows }
    }

    /// `0 -> 1 -> … -> n-1`.
    pub fn linear(n: usize) -> Self {
        Quiver {
            vertices: n,
            arrows: (1..n).map(|v| (v - 1, v)).collect(),
        }
    }

    /// Kahn's algorithm; on a cycle, reports the smallest vertex left over.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indegree = vec![0usize; self.vertices];
        for &(s, t) in &self.arrows {
            if s >= self.vertices || t >= self.vertices {
                return Err(Error::BadParams(format!(
                    "arrow ({s}, {t}) leaves the {} vertices",
                    self.vertices
                )));
            }
            indegree[t] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.vertices).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertices);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        if order.len() < self.vertices {
            let stuck = (0..self.vertices).find(|v| !order.contains(v)).unwrap();
            return Err(Error::CyclicQuiver(stuck));
        }
        Ok(order)
    }

    /// All paths, trivial ones included, as `(source, target, arrows)`,
    /// sorted in that order.
    pub fn paths(&self) -> Result<Vec<(usize, usize, Vec<usize>)>> {
        self.topological_order()?;
        let mut out = Vec::new();
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            (0..self.vertices).map(|v| (v, v, Vec::new())).collect();
        while let Some((s, t, arrows)) = stack.pop() {
            for (k, &(from, to)) in self.arrows.iter().enumerate() {
                if from == t {
                    let mut next = arrows.clone();
                    next.push(k);
                    stack.push((s, to, next));
                }
            }
            out.push((s, t, arrows));
        }
        out.sort();
        Ok(out)
    }
}

/// The named coalgebra families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoalgebraKind {
    /// `𝕄^d`, dual of `M_d`, on `E11, E12, …`.
    Comatrix { d: usize },
    /// Dual of the upper triangular matrices, on `Eij` with `i ≤ j`.
    Triangular { n: usize },
    /// Paths split at every vertex: `Δ(p) = Σ p' ⊗ p''` over `p = p' p''`.
    Path(Quiver),
    /// The linearized set: every element is grouplike.
    Grouplike { elements: Vec<String> },
    /// `Δ(ε_r) = Σ_{i+j=r} ε_i ⊗ ε_j` for `r < m`, dual of `k[t]/(t^m)`.
    DividedPower { m: usize },
    /// Distributions on the line supported at the given points, one
    /// divided-power block of the given multiplicity per point.
    LineDist { points: Vec<(Scalar, usize)> },
}

fn divided_power_terms(offset: usize, r: usize, one: &Scalar) -> Vec<(usize, usize, Scalar)> {
    (0..=r)
        .map(|i| (offset + i, offset + r - i, one.clone()))
        .collect()
}

pub fn construct_coalgebra(kind: &CoalgebraKind, field: FieldSpec) -> Result<FinDimCoalgebra> {
    let one = field.one();
    let c = match kind {
        CoalgebraKind::Comatrix { d } => {
            if *d == 0 {
                return Err(Error::BadParams("comatrix needs d ≥ 1".into()));
            }
            dualize_algebra_unchecked(&FinDimAlgebra::matrix_algebra(field, *d))
        }
        CoalgebraKind::Triangular { n } => {
            if *n == 0 {
                return Err(Error::BadParams("triangular needs n ≥ 1".into()));
            }
            dualize_algebra_unchecked(&FinDimAlgebra::upper_triangular(field, *n))
        }
        CoalgebraKind::Path(q) => {
            let paths = q.paths()?;
            if paths.is_empty() {
                return Err(Error::BadParams("quiver has no vertices".into()));
            }
            let index: HashMap<(usize, &[usize]), usize> = paths
                .iter()
                .enumerate()
                .map(|(k, (s, _, a))| ((*s, a.as_slice()), k))
                .collect();
            let labels = paths
                .iter()
                .map(|(s, _, a)| {
                    if a.is_empty() {
                        format!("e{s}")
                    } else {
                        a.iter().map(|k| format!("a{k}")).collect::<String>()
                    }
                })
                .collect();
            let counit = paths
                .iter()
                .map(|(_, _, a)| {
                    if a.is_empty() {
                        one.clone()
                    } else {
                        field.zero()
                    }
                })
                .collect();
            FinDimCoalgebra::from_terms(
                field,
                labels,
                |r| {
                    let (s, t, arrows) = &paths[r];
                    (0..=arrows.len())
                        .map(|cut| {
                            // vertex where the initial segment ends
                            let v = if cut == 0 {
                                *s
                            } else {
                                q.arrows[arrows[cut - 1]].1
                            };
                            let head = index[&(*s, &arrows[..cut])];
                            let tail = index[&(v, &arrows[cut..])];
                            debug_assert!(cut < arrows.len() || v == *t);
                            (head, tail, one.clone())
                        })
                        .collect()
                },
                counit,
            )
        }
        CoalgebraKind::Grouplike { elements } => {
            let distinct: BTreeSet<&String> = elements.iter().collect();
            if elements.is_empty() || distinct.len() != elements.len() {
                return Err(Error::BadParams(
                    "grouplike needs a nonempty set of distinct labels".into(),
                ));
            }
            FinDimCoalgebra::from_terms(
                field,
                elements.clone(),
                |r| vec![(r, r, one.clone())],
                vec![one.clone(); elements.len()],
            )
        }
        CoalgebraKind::DividedPower { m } => {
            if *m == 0 {
                return Err(Error::BadParams("divided power needs m ≥ 1".into()));
            }
            let mut counit = vec![field.zero(); *m];
            counit[0] = one.clone();
            FinDimCoalgebra::from_terms(
                field,
                (0..*m).map(|i| format!("ε{i}")).collect(),
                |r| divided_power_terms(0, r, &one),
                counit,
            )
        }
        CoalgebraKind::LineDist { points } => {
            if points.is_empty() {
                return Err(Error::BadParams(
                    "line distributions need at least one point".into(),
                ));
            }
            let mut pts = points.clone();
            pts.sort();
            if pts.iter().any(|(l, k)| *k == 0 || l.field() != field) {
                return Err(Error::BadParams(
                    "points need positive multiplicity and must lie in the field".into(),
                ));
            }
            if pts.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::BadParams("repeated point".into()));
            }
            let mut labels = Vec::new();
            let mut block = Vec::new();
            let mut counit = Vec::new();
            for (lambda, mult) in &pts {
                let offset = labels.len();
                for i in 0..*mult {
                    labels.push(format!("ε_{lambda}^({i})"));
                    block.push((offset, i));
                    counit.push(if i == 0 { one.clone() } else { field.zero() });
                }
            }
            FinDimCoalgebra::from_terms(
                field,
                labels,
                |r| divided_power_terms(block[r].0, block[r].1, &one),
                counit,
            )
        }
    };
    debug_assert!(c.validate().passed());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn divided_power_three() {
        let c = construct_coalgebra(&CoalgebraKind::DividedPower { m: 3 }, F5).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(
            c.terms(2),
            vec![(0, 2, F5.one()), (1, 1, F5.one()), (2, 0, F5.one())]
        );
        assert_eq!(c.counit(), &[F5.one(), F5.zero(), F5.zero()]);
    }

    #[test]
    fn path_on_a2_is_triangular_two() {
        let p = construct_coalgebra(&CoalgebraKind::Path(Quiver::linear(2)), F5).unwrap();
        let t = construct_coalgebra(&CoalgebraKind::Triangular { n: 2 }, F5).unwrap();
        assert!(p.same_structure(&t));
        assert_eq!(p.labels(), &["e0", "a0", "e1"]);
    }

    #[test]
    fn path_on_linear_quiver_is_triangular() {
        for n in 1..=4 {
            let p = construct_coalgebra(&CoalgebraKind::Path(Quiver::linear(n)), F5).unwrap();
            let t = construct_coalgebra(&CoalgebraKind::Triangular { n }, F5).unwrap();
            assert!(p.same_structure(&t), "n = {n}");
        }
    }

    #[test]
    fn cyclic_quiver_is_rejected() {
        let q = Quiver::new(3, vec![(0, 1), (1, 2), (2, 1)]);
        assert_eq!(
            construct_coalgebra(&CoalgebraKind::Path(q), F5).unwrap_err(),
            Error::CyclicQuiver(1)
        );
        let loop_q = Quiver::new(1, vec![(0, 0)]);
        assert!(matches!(
            construct_coalgebra(&CoalgebraKind::Path(loop_q), F5),
            Err(Error::CyclicQuiver(0))
        ));
    }

    #[test]
    fn kronecker_quiver_paths() {
        let q = Quiver::new(2, vec![(0, 1), (0, 1)]);
        let c = construct_coalgebra(&CoalgebraKind::Path(q), F5).unwrap();
        assert_eq!(c.labels(), &["e0", "a0", "a1", "e1"]);
        assert!(c.validate().passed());
    }

    #[test]
    fn line_dist_blocks() {
        let pts = vec![(F5.from_u64(1), 1), (F5.zero(), 2)];
        let c = construct_coalgebra(&CoalgebraKind::LineDist { points: pts }, F5).unwrap();
        assert_eq!(c.labels(), &["ε_0^(0)", "ε_0^(1)", "ε_1^(0)"]);
        assert_eq!(c.terms(1), vec![(0, 1, F5.one()), (1, 0, F5.one())]);
        assert_eq!(c.terms(2), vec![(2, 2, F5.one())]);
    }

    #[test]
    fn bad_params() {
        assert!(matches!(
            construct_coalgebra(&CoalgebraKind::DividedPower { m: 0 }, F5),
            Err(Error::BadParams(_))
        ));
        let dup = CoalgebraKind::Grouplike {
            elements: vec!["x".into(), "x".into()],
        };
        assert!(matches!(
            construct_coalgebra(&dup, F5),
            Err(Error::BadParams(_))
        ));
        let rep = CoalgebraKind::LineDist {
            points: vec![(F5.zero(), 1), (F5.zero(), 2)],
        };
        assert!(matches!(
            construct_coalgebra(&rep, F5),
            Err(Error::BadParams(_))
        ));
    }
}
