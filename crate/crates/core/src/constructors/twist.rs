//! Twists Δ_J(h) = J Δ(h) J⁻¹ by an invertible J ∈ H ⊗ H, the 2-cocycle test ∂₂(J) = 1,
//! and the specific twist J_ω supported on a Klein four-subgroup.

use std::collections::BTreeMap;

use super::{group_algebra, ConstructionError};
use crate::cyclo::CycNum;
use crate::groups::{self, FiniteGroup};
use crate::hopf::HopfAlgebra;
use crate::linalg::SparseSystem;

/// An invertible, counit-normalized element of H ⊗ H, stored as n² coordinates j*n+k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistElement {
    pub tensor: Vec<CycNum>,
    pub inverse: Vec<CycNum>,
}

/// 1 ⊗ 1 in H ⊗ H.
fn one2(h: &HopfAlgebra) -> Vec<CycNum> {
    outer(h.unit(), h.unit())
}

fn outer(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

impl TwistElement {
    /// Invert J in H ⊗ H and check normalization.
    pub fn new(h: &HopfAlgebra, tensor: Vec<CycNum>) -> Result<Self, ConstructionError> {
        let n = h.dim();
        if tensor.len() != n * n {
            return Err(ConstructionError::DimensionMismatch("twist element".into()));
        }
        let alg = h.algebra();
        // J X = 1 ⊗ 1 with X unknown
        let mut rows: BTreeMap<usize, BTreeMap<usize, CycNum>> = BTreeMap::new();
        for (ab, cj) in tensor.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (a, b) = (ab / n, ab % n);
            for c in 0..n {
                let left = alg.basis_product(a, c);
                for d in 0..n {
                    let right = alg.basis_product(b, d);
                    for (p, u) in left {
                        let cu = cj * u;
                        for (q, v) in right {
                            *rows.entry(p * n + q).or_default().entry(c * n + d).or_insert_with(CycNum::zero) +=
                                &(&cu * v);
                        }
                    }
                }
            }
        }
        let target = one2(h);
        let mut sys = SparseSystem::new(n * n);
        for (r, t) in target.iter().enumerate() {
            sys.add_equation(rows.remove(&r).unwrap_or_default(), t.clone());
        }
        let inverse = sys.solve_unique().map_err(|_| ConstructionError::NotInvertible)?;
        if h.tensor_mul(&inverse, &tensor) != target {
            return Err(ConstructionError::NotInvertible);
        }
        let j = TwistElement { tensor, inverse };
        if !j.is_normalized(h) {
            return Err(ConstructionError::NotNormalized);
        }
        Ok(j)
    }

    pub fn identity(h: &HopfAlgebra) -> Self {
        let t = one2(h);
        TwistElement { tensor: t.clone(), inverse: t }
    }

    /// (ε ⊗ id)J = 1 = (id ⊗ ε)J.
    pub fn is_normalized(&self, h: &HopfAlgebra) -> bool {
        let n = h.dim();
        let eps = h.counit();
        let mut left = vec![CycNum::zero(); n];
        let mut right = vec![CycNum::zero(); n];
        for (ab, c) in self.tensor.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (a, b) = (ab / n, ab % n);
            left[b] += &(c * &eps[a]);
            right[a] += &(c * &eps[b]);
        }
        left == h.unit() && right == h.unit()
    }

    /// ∂₂(J) = (id⊗Δ)(J⁻¹)(1⊗J⁻¹)(J⊗1)(Δ⊗id)(J) in H ⊗ H ⊗ H.
    pub fn boundary(&self, h: &HopfAlgebra) -> Vec<CycNum> {
        let u = h.unit();
        let a = h.delta_right(&self.inverse);
        let b = outer(u, &self.inverse);
        let c = outer(&self.tensor, u);
        let d = h.delta_left(&self.tensor);
        let ab = h.tensor3_mul(&a, &b);
        let abc = h.tensor3_mul(&ab, &c);
        h.tensor3_mul(&abc, &d)
    }

    pub fn is_two_cocycle(&self, h: &HopfAlgebra) -> bool {
        self.boundary(h) == outer(&one2(h), h.unit())
    }

    /// ∂₂(J) commutes with (Δ⊗id)Δ(h) for every basis element.
    pub fn is_pseudo_cocycle(&self, h: &HopfAlgebra) -> bool {
        let d = self.boundary(h);
        (0..h.dim()).all(|i| {
            let dd = h.delta_left(&h.coproduct(&h.basis_vec(i)));
            h.tensor3_mul(&d, &dd) == h.tensor3_mul(&dd, &d)
        })
    }
}

/// (H, Δ_J): same algebra and counit, comultiplication conjugated by J, antipode re-solved.
pub fn twist(h: &HopfAlgebra, j: &TwistElement) -> Result<HopfAlgebra, ConstructionError> {
    let n = h.dim();
    let mut comult = vec![CycNum::zero(); n * n * n];
    for i in 0..n {
        let d = h.coproduct(&h.basis_vec(i));
        let dj = h.tensor_mul(&h.tensor_mul(&j.tensor, &d), &j.inverse);
        comult[i * n * n..(i + 1) * n * n].clone_from_slice(&dj);
    }
    let out = HopfAlgebra::from_bialgebra_unchecked(
        h.basis_labels().to_vec(),
        h.mult_tensor().to_vec(),
        h.unit().to_vec(),
        comult,
        h.counit().to_vec(),
    )?;
    let coassoc = out.verify_axioms();
    if coassoc.get("coassociativity").is_some_and(|c| !c.passed) {
        return Err(ConstructionError::CoassociativityFails);
    }
    Ok(out)
}

/// δ₁, δ_c, δ_b, δ_cb: the primitive idempotents of k{1, c, b, cb}.
fn klein_idempotents(h: &HopfAlgebra, c: &[CycNum], b: &[CycNum]) -> Vec<Vec<CycNum>> {
    let cb = h.mul(c, b);
    let one = h.one();
    let signs = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]];
    signs
        .iter()
        .map(|[sc, sb, scb]| {
            (0..h.dim())
                .map(|k| {
                    let v = &(&(&one[k] + &(&c[k] * &CycNum::from_int(*sc))) + &(&b[k] * &CycNum::from_int(*sb)))
                        + &(&cb[k] * &CycNum::from_int(*scb));
                    &v * &CycNum::from_ratio(1, 4)
                })
                .collect()
        })
        .collect()
}

fn check_klein(h: &HopfAlgebra, c: &[CycNum], b: &[CycNum]) -> Result<(), ConstructionError> {
    let one = h.one();
    let cb = h.mul(c, b);
    let distinct = [&one, &c.to_vec(), &b.to_vec(), &cb];
    let ok = h.mul(c, c) == one
        && h.mul(b, b) == one
        && cb == h.mul(b, c)
        && (0..4).all(|x| (0..4).all(|y| x == y || distinct[x] != distinct[y]));
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::NotKleinSubgroup("c² = b² = 1, cb = bc, four distinct elements required".into()))
    }
}

/// J_ω = Σ w(x, y) δ_x ⊗ δ_y with w ∈ {1, ±i} on the idempotents of {1, c, b, cb}.
pub fn build_j_omega(h: &HopfAlgebra, c: &[CycNum], b: &[CycNum]) -> Result<TwistElement, ConstructionError> {
    check_klein(h, c, b)?;
    let d = klein_idempotents(h, c, b);
    let (o, i, mi) = (CycNum::one(), CycNum::i(), -CycNum::i());
    let w = [
        [o.clone(), o.clone(), o.clone(), o.clone()],
        [o.clone(), o.clone(), i.clone(), mi.clone()],
        [o.clone(), mi.clone(), o.clone(), i.clone()],
        [o.clone(), i, mi, o],
    ];
    let n = h.dim();
    let mut t = vec![CycNum::zero(); n * n];
    for x in 0..4 {
        for y in 0..4 {
            let term = outer(&d[x], &d[y]);
            for (k, v) in term.iter().enumerate() {
                if !v.is_zero() {
                    t[k] += &(v * &w[x][y]);
                }
            }
        }
    }
    TwistElement::new(h, t)
}

/// The same J_ω expanded over the group elements 1, c, b, cb with coefficients in {5, 1, −1 ± 2i}/8.
pub fn j_omega_expanded(h: &HopfAlgebra, c: &[CycNum], b: &[CycNum]) -> Result<Vec<CycNum>, ConstructionError> {
    check_klein(h, c, b)?;
    let elems = [h.one(), c.to_vec(), b.to_vec(), h.mul(c, b)];
    let p = |re: i64, im: i64| &CycNum::from_int(re) + &(&CycNum::i() * &CycNum::from_int(im));
    // coefficient of elems[x] ⊗ elems[y], times 8
    let coef = [
        [p(5, 0), p(1, 0), p(1, 0), p(1, 0)],
        [p(1, 0), p(1, 0), p(-1, 2), p(-1, -2)],
        [p(1, 0), p(-1, -2), p(1, 0), p(-1, 2)],
        [p(1, 0), p(-1, 2), p(-1, -2), p(1, 0)],
    ];
    let n = h.dim();
    let mut t = vec![CycNum::zero(); n * n];
    for x in 0..4 {
        for y in 0..4 {
            let s = &coef[x][y] * &CycNum::from_ratio(1, 8);
            for (k, v) in outer(&elems[x], &elems[y]).iter().enumerate() {
                if !v.is_zero() {
                    t[k] += &(v * &s);
                }
            }
        }
    }
    Ok(t)
}

/// A group algebra hosting J_ω on {1, c, b, cb}.
#[derive(Debug, Clone)]
pub struct TwistHost {
    pub name: &'static str,
    pub group: FiniteGroup,
    pub c: usize,
    pub b: usize,
}

/// k(D8×C2) with c, b; kD16 and kG2 with c = a⁴ and b.
pub fn twist_hosts() -> Result<Vec<TwistHost>, ConstructionError> {
    let find = |g: &FiniteGroup, l: &str| {
        g.index_of(l).ok_or_else(|| ConstructionError::NotKleinSubgroup(format!("{} has no element {l}", g.name)))
    };
    let mut out = Vec::new();
    for (name, gi, c) in [("k(D8xC2)", 8, "c"), ("kD16", 3, "a^4"), ("kG2", 2, "a^4")] {
        let g = groups::order16(gi)?;
        let (ci, bi) = (find(&g, c)?, find(&g, "b")?);
        out.push(TwistHost { name, group: g, c: ci, b: bi });
    }
    Ok(out)
}

impl TwistHost {
    pub fn algebra(&self) -> HopfAlgebra {
        group_algebra(&self.group)
    }

    pub fn j_omega(&self, h: &HopfAlgebra) -> Result<TwistElement, ConstructionError> {
        build_j_omega(h, &h.basis_vec(self.c), &h.basis_vec(self.b))
    }

    /// (kG)_J.
    pub fn twisted(&self) -> Result<(HopfAlgebra, TwistElement), ConstructionError> {
        let h = self.algebra();
        let j = self.j_omega(&h)?;
        Ok((twist(&h, &j)?, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::group_algebra;

    #[test]
    fn identity_twist_changes_nothing() {
        let h = group_algebra(&groups::c2xc2());
        let j = TwistElement::identity(&h);
        assert!(j.is_two_cocycle(&h));
        assert_eq!(twist(&h, &j).unwrap(), h);
    }

    #[test]
    fn j_omega_in_klein_group() {
        let h = group_algebra(&groups::c2xc2());
        let (c, b) = (h.basis_vec(1), h.basis_vec(2));
        let j = build_j_omega(&h, &c, &b).unwrap();
        assert!(j.is_normalized(&h));
        assert!(j.is_two_cocycle(&h));
        assert_eq!(j.tensor, j_omega_expanded(&h, &c, &b).unwrap());
        // coefficient of b ⊗ c in the group-element form is (−1−2i)/8
        let n = h.dim();
        let expect = &(&CycNum::from_int(-1) + &(&CycNum::i() * &CycNum::from_int(-2))) * &CycNum::from_ratio(1, 8);
        assert_eq!(j.tensor[2 * n + 1], expect);
    }

    #[test]
    fn non_klein_elements_are_rejected() {
        let h = group_algebra(&groups::cyclic(4));
        let g = h.basis_vec(1);
        assert!(matches!(build_j_omega(&h, &g, &g), Err(ConstructionError::NotKleinSubgroup(_))));
    }
}
