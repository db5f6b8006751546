//! Factories for group algebras, bicrossed products, twists and the smash coproduct.

pub mod bicrossed;
pub mod catalog;
pub mod smash;
pub mod twist;

use thiserror::Error;

use crate::cyclo::CycNum;
use crate::groups::{FiniteGroup, GroupError};
use crate::hopf::{HopfAlgebra, HopfError};
use crate::linalg::Matrix;

pub use bicrossed::{BicrossedData, CocycleCondition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("action is not a group automorphism")]
    ActionNotAutomorphism,
    #[error("action does not square to the identity")]
    ActionOrderNotTwo,
    #[error("invalid cocycle: {condition} fails at {detail}")]
    InvalidCocycle { condition: CocycleCondition, detail: String },
    #[error("data has wrong size: {0}")]
    DimensionMismatch(String),
    #[error("unknown catalog name {0}")]
    UnknownName(String),
    #[error("elements do not form a Klein four-group: {0}")]
    NotKleinSubgroup(String),
    #[error("twist element is not invertible")]
    NotInvertible,
    #[error("twist element is not counit-normalized")]
    NotNormalized,
    #[error("twisted comultiplication is not coassociative")]
    CoassociativityFails,
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub(crate) fn idx3(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

/// kG with the group elements as basis.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let mut mult = vec![CycNum::zero(); n * n * n];
    let mut comult = vec![CycNum::zero(); n * n * n];
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            mult[idx3(n, a, b, g.mul(a, b))] = CycNum::one();
        }
        comult[idx3(n, a, a, a)] = CycNum::one();
        antipode.set(g.inv(a), a, CycNum::one());
    }
    let mut unit = vec![CycNum::zero(); n];
    unit[g.identity()] = CycNum::one();
    HopfAlgebra::new(g.labels.clone(), mult, unit, comult, vec![CycNum::one(); n], antipode)
        .expect("group algebra dimensions")
}

/// k^G with the point masses e_g as basis.
pub fn dual_group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let mut mult = vec![CycNum::zero(); n * n * n];
    let mut comult = vec![CycNum::zero(); n * n * n];
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        mult[idx3(n, a, a, a)] = CycNum::one();
        for h in 0..n {
            comult[idx3(n, a, h, g.mul(g.inv(h), a))] = CycNum::one();
        }
        antipode.set(g.inv(a), a, CycNum::one());
    }
    let mut counit = vec![CycNum::zero(); n];
    counit[g.identity()] = CycNum::one();
    let basis = g.labels.iter().map(|l| format!("e_{{{l}}}")).collect();
    HopfAlgebra::new(basis, mult, vec![CycNum::one(); n], comult, counit, antipode).expect("dual group algebra dimensions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{c, q};
    use crate::groups::{self, c4xc2_index};
    use crate::linalg;

    #[test]
    fn group_algebras_pass_axioms() {
        for name in ["C2", "C4xC2", "D8", "Q8", "G5"] {
            let g = groups::by_name(name).unwrap();
            let h = group_algebra(&g);
            assert!(h.verify_axioms().all_passed(), "{name}");
            assert!(h.is_cocommutative());
            assert_eq!(h.is_commutative(), g.table.is_abelian());
            assert_eq!(h.find_grouplikes_count_bound().unwrap(), g.order());
            let d = dual_group_algebra(&g);
            assert!(d.verify_axioms().all_passed(), "{name} dual");
            assert!(d.is_commutative());
            assert_eq!(d.is_cocommutative(), g.table.is_abelian());
        }
    }

    #[test]
    fn idempotent_formula_matches_point_masses() {
        // e_pq = 1/8 (sum_k (i^p x)^k)(1 + (-1)^q y) inside k(C4 x C2)
        let g = groups::c4xc2();
        let kg = group_algebra(&g);
        let cols: Vec<Vec<CycNum>> = (0..8)
            .map(|idx| {
                let (p, qq) = ((idx / 2) as i64, (idx % 2) as i64);
                let mut v = vec![CycNum::zero(); 8];
                for k in 0..4 {
                    for l in 0..2 {
                        let coef = &(&CycNum::i_pow(p * k) * &CycNum::sign(qq * l)) * &q(1, 8);
                        v[c4xc2_index(k, l)] += &coef;
                    }
                }
                v
            })
            .collect();
        let sum = cols.iter().fold(vec![CycNum::zero(); 8], |acc, v| linalg::vec_add(&acc, v));
        assert_eq!(sum, kg.unit().to_vec());
        let p = Matrix::from_columns(&cols);
        let labels = (0..8).map(|i| format!("e{i}")).collect();
        let changed = kg.change_basis(&p, labels).unwrap();
        assert_eq!(changed, dual_group_algebra(&g));
        assert_eq!(changed.counit()[0], c(1));
    }
}
