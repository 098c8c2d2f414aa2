use super::{construct_coalgebra, CoalgebraHom, CoalgebraKind, FinDimCoalgebra};
use crate::error::{Error, Result};
use crate::kernel::{FieldSpec, Scalar};

/// A chain `C_0 ↪ C_1 ↪ …` of coalgebras whose union approximates a finite
/// dual. Each level's labels extend the previous level's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTower {
    levels: Vec<FinDimCoalgebra>,
    inclusions: Vec<CoalgebraHom>,
}

impl DualTower {
    pub fn new(base: FinDimCoalgebra) -> Self {
        DualTower {
            levels: vec![base],
            inclusions: Vec::new(),
        }
    }

    pub fn levels(&self) -> &[FinDimCoalgebra] {
        &self.levels
    }

    pub fn inclusions(&self) -> &[CoalgebraHom] {
        &self.inclusions
    }

    pub fn top(&self) -> &FinDimCoalgebra {
        self.levels.last().expect("a tower has a base")
    }

    /// Append `next` along `inclusion`, which must be an injective coalgebra
    /// map out of the current top level.
    pub fn extend(&self, next: FinDimCoalgebra, inclusion: CoalgebraHom) -> Result<DualTower> {
        let top = self.top();
        if inclusion.source() != top || !inclusion.target().same_structure(&next) {
            return Err(Error::InvalidInput(
                "inclusion does not connect the top level to the new one".into(),
            ));
        }
        let report = inclusion.check();
        if !report.passed() {
            return Err(Error::NotACoalgebraMap(format!("{report:?}")));
        }
        if !inclusion.is_injective() {
            return Err(Error::NotInjective);
        }
        if !next.labels().starts_with(top.labels()) {
            return Err(Error::BadParams(
                "new level's labels do not extend the old ones".into(),
            ));
        }
        let mut out = self.clone();
        out.levels.push(next);
        out.inclusions.push(inclusion);
        Ok(out)
    }

    /// Build a tower from coalgebras whose bases extend one another,
    /// using the prefix inclusions.
    pub fn from_prefix_chain(levels: Vec<FinDimCoalgebra>) -> Result<DualTower> {
        let mut it = levels.into_iter();
        let mut tower = DualTower::new(
            it.next()
                .ok_or_else(|| Error::BadParams("empty tower".into()))?,
        );
        for next in it {
            let inc = CoalgebraHom::prefix_inclusion(tower.top(), &next)?;
            tower = tower.extend(next, inc)?;
        }
        Ok(tower)
    }

    /// `divided_power(1) ↪ … ↪ divided_power(m)`: the duals of `k[t]/(t^i)`.
    pub fn divided_power_chain(field: FieldSpec, m: usize) -> Result<DualTower> {
        let levels = (1..=m)
            .map(|i| construct_coalgebra(&CoalgebraKind::DividedPower { m: i }, field))
            .collect::<Result<Vec<_>>>()?;
        Self::from_prefix_chain(levels)
    }

    /// Line distributions adjoining one point per level; points are sorted
    /// so that every level's basis extends the previous one.
    pub fn line_dist_chain(field: FieldSpec, points: &[(Scalar, usize)]) -> Result<DualTower> {
        let mut pts = points.to_vec();
        pts.sort();
        let levels = (1..=pts.len())
            .map(|k| {
                construct_coalgebra(
                    &CoalgebraKind::LineDist {
                        points: pts[..k].to_vec(),
                    },
                    field,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_prefix_chain(levels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Matrix;

    const F5: FieldSpec = FieldSpec::PrimeField(5);

    #[test]
    fn divided_power_tower() {
        let t = DualTower::divided_power_chain(F5, 3).unwrap();
        assert_eq!(t.levels().len(), 3);
        assert_eq!(t.top().dim(), 3);
    }

    #[test]
    fn line_dist_tower_adjoins_a_point() {
        let t = DualTower::line_dist_chain(F5, &[(F5.zero(), 1), (F5.one(), 1)]).unwrap();
        assert_eq!(t.levels().len(), 2);
        assert_eq!(t.top().labels(), &["ε_0^(0)", "ε_1^(0)"]);
    }

    #[test]
    fn rejects_bad_inclusions() {
        let d1 = construct_coalgebra(&CoalgebraKind::DividedPower { m: 1 }, F5).unwrap();
        let d2 = construct_coalgebra(&CoalgebraKind::DividedPower { m: 2 }, F5).unwrap();
        let tower = DualTower::new(d1.clone());
        // ε0 -> ε1 is not counital
        let mut m = Matrix::zeros(F5, 2, 1);
        m.set(1, 0, F5.one());
        let bad = CoalgebraHom::new_unchecked(d1.clone(), d2.clone(), m).unwrap();
        assert!(matches!(
            tower.extend(d2.clone(), bad),
            Err(Error::NotACoalgebraMap(_))
        ));
        let zero =
            CoalgebraHom::new_unchecked(d1.clone(), d2.clone(), Matrix::zeros(F5, 2, 1)).unwrap();
        assert!(matches!(
            tower.extend(d2.clone(), zero),
            Err(Error::NotACoalgebraMap(_))
        ));
        // an injective map that is not a coalgebra map at all
        let d3 = construct_coalgebra(&CoalgebraKind::DividedPower { m: 3 }, F5).unwrap();
        let t2 = DualTower::divided_power_chain(F5, 2).unwrap();
        let mut swap = Matrix::zeros(F5, 3, 2);
        swap.set(0, 0, F5.one());
        swap.set(2, 1, F5.one());
        let inc = CoalgebraHom::new_unchecked(d2, d3.clone(), swap).unwrap();
        assert!(matches!(
            t2.extend(d3, inc),
            Err(Error::NotACoalgebraMap(_))
        ));
    }

    #[test]
    fn non_injective_coalgebra_map_is_rejected() {
        let g2 = construct_coalgebra(
            &CoalgebraKind::Grouplike {
                elements: vec!["x".into(), "y".into()],
            },
            F5,
        )
        .unwrap();
        let g3 = construct_coalgebra(
            &CoalgebraKind::Grouplike {
                elements: vec!["x".into(), "y".into(), "z".into()],
            },
            F5,
        )
        .unwrap();
        // both points to x
        let mut m = Matrix::zeros(F5, 3, 2);
        m.set(0, 0, F5.one());
        m.set(0, 1, F5.one());
        let f = CoalgebraHom::new_unchecked(g2.clone(), g3.clone(), m).unwrap();
        assert_eq!(
            DualTower::new(g2).extend(g3, f).unwrap_err(),
            Error::NotInjective
        );
    }
}
