//! The smash coproduct kQ8 #^α kC2, with α_g swapping the generators a and b of Q8.

use super::catalog::Curated;
use super::{group_algebra, idx3, ConstructionError};
use crate::cyclo::CycNum;
use crate::groups::{self, xy_index};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::rep::{RepError, Representation};

/// Basis index of a^p b^q # g^k.
pub fn smash_index(p: i64, q: i64, k: usize) -> usize {
    xy_index(p, q) * 2 + k
}

/// kQ8 ⊗ kC2 as an algebra with Δ(x#δ_{g^k}) = Σ_{r+t=k} (x#δ_{g^r}) ⊗ (α_{g^r}(x)#δ_{g^t}).
pub fn smash_coproduct_q8() -> Result<HopfAlgebra, ConstructionError> {
    let q8 = groups::q8();
    let alg = group_algebra(&q8).tensor_product(&group_algebra(&groups::cyclic(2)));
    let n = alg.dim();
    let (a, b) = (xy_index(1, 0), xy_index(0, 1));
    let t = &q8.table;
    // α_g(a^p b^q) = b^p a^q
    let alpha: Vec<usize> = (0..8)
        .map(|e| {
            let (p, q) = ((e % 4) as i64, (e / 4) as i64);
            t.mul(t.pow(b, p), t.pow(a, q))
        })
        .collect();
    if !q8.is_automorphism(&alpha) {
        return Err(ConstructionError::ActionNotAutomorphism);
    }
    let half = CycNum::from_ratio(1, 2);
    // x # δ_{g^r} in the basis {x#1, x#g}
    let delta_elem = |x: usize, r: usize| -> Vec<(usize, CycNum)> {
        let s = if r == 0 { half.clone() } else { -half.clone() };
        vec![(x * 2, half.clone()), (x * 2 + 1, s)]
    };
    let mut comult = vec![CycNum::zero(); n * n * n];
    for x in 0..8 {
        for k in 0..2 {
            // Δ(x#δ_{g^k})
            let mut terms: Vec<(usize, usize, CycNum)> = Vec::new();
            for r in 0..2 {
                let tt = (k + 2 - r) % 2;
                let y = if r == 0 { x } else { alpha[x] };
                for (i, ci) in delta_elem(x, r) {
                    for (j, cj) in delta_elem(y, tt) {
                        terms.push((i, j, &ci * &cj));
                    }
                }
            }
            // x#1 = x#δ₁ + x#δ_g, x#g = x#δ₁ − x#δ_g
            for basis_k in 0..2 {
                let sign = if basis_k == 1 && k == 1 { -CycNum::one() } else { CycNum::one() };
                for (i, j, c) in &terms {
                    comult[idx3(n, x * 2 + basis_k, *i, *j)] += &(c * &sign);
                }
            }
        }
    }
    let labels = (0..n).map(|i| format!("{}#{}", q8.labels[i / 2], if i % 2 == 0 { "1" } else { "g" })).collect();
    Ok(HopfAlgebra::from_bialgebra(
        labels,
        alg.mult_tensor().to_vec(),
        alg.unit().to_vec(),
        comult,
        alg.counit().to_vec(),
    )?)
}

/// Grouplike generators a²#1, 1#g; characters χ, φ; the irreps π₁, π₂ differing on g.
pub fn smash_curated(h: &HopfAlgebra) -> Result<Curated, RepError> {
    let a = h.basis_vec(smash_index(1, 0, 0));
    let b = h.basis_vec(smash_index(0, 1, 0));
    let g = h.basis_vec(smash_index(0, 0, 1));
    let (z, o, i) = (CycNum::zero(), CycNum::one(), CycNum::i());
    let s = |v: i64| Matrix::scalar(1, &CycNum::from_int(v));
    let chi = Representation::from_generators(h, "chi", &[(a.clone(), s(-1)), (b.clone(), s(1)), (g.clone(), s(-1))])?;
    let phi = Representation::from_generators(h, "phi", &[(a.clone(), s(-1)), (b.clone(), s(1)), (g.clone(), s(1))])?;
    let pa = Matrix::diag(&[i.clone(), -i]);
    let pb = Matrix::from_rows(vec![vec![z.clone(), o.clone()], vec![-o, z]]);
    let pi = |label: &str, sign: i64| {
        Representation::from_generators(
            h,
            label,
            &[(a.clone(), pa.clone()), (b.clone(), pb.clone()), (g.clone(), Matrix::identity(2).scale(&CycNum::from_int(sign)))],
        )
    };
    Ok(Curated {
        grouplike_generators: vec![h.basis_vec(smash_index(2, 0, 0)), g.clone()],
        characters: vec![chi, phi],
        irreps: vec![pi("pi1", 1)?, pi("pi2", -1)?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_of_a_matches_closed_form() {
        let h = smash_coproduct_q8().unwrap();
        let n = h.dim();
        let a1 = smash_index(1, 0, 0);
        let ag = smash_index(1, 0, 1);
        let b1 = smash_index(0, 1, 0);
        let d = h.coproduct(&h.basis_vec(a1));
        let mut expect = vec![CycNum::zero(); n * n];
        let half = CycNum::from_ratio(1, 2);
        expect[a1 * n + a1] = half.clone();
        expect[ag * n + a1] = half.clone();
        expect[a1 * n + b1] = half.clone();
        expect[ag * n + b1] = -half;
        assert_eq!(d, expect);
        let one = h.one();
        assert_eq!(h.coproduct(&one), one.iter().flat_map(|x| one.iter().map(move |y| x * y)).collect::<Vec<_>>());
    }
}
