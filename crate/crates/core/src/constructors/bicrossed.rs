//! Bicrossed products k^G #_{σ,θ} kC2 on the basis {e_g, e_g t̄}.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{idx3, ConstructionError};
use crate::cyclo::CycNum;
use crate::groups::FiniteGroup;
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::rep::Representation;

/// Which defining condition of the cocycle data fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CocycleCondition {
    /// θ(1, g) = θ(g, 1) = 1.
    ThetaNormalized,
    /// θ(a, b) θ(ab, c) = θ(b, c) θ(a, bc).
    ThetaCocycle,
    /// ε(v) = c_1 = 1.
    SigmaNormalized,
    /// v is a unit: every c_g is nonzero.
    SigmaUnit,
    /// t ⇀ v = v: c_{f(g)} = c_g.
    SigmaActionInvariant,
    /// Δ(t̄²) = Δ(t̄)²: c_{ab} = θ(a, b) θ(f(a), f(b)) c_a c_b.
    Bialgebra,
}

impl fmt::Display for CocycleCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CocycleCondition::ThetaNormalized => "theta normalized",
            CocycleCondition::ThetaCocycle => "theta 2-cocycle",
            CocycleCondition::SigmaNormalized => "sigma normalized",
            CocycleCondition::SigmaUnit => "sigma is a unit",
            CocycleCondition::SigmaActionInvariant => "sigma invariant under the action",
            CocycleCondition::Bialgebra => "bialgebra compatibility",
        };
        f.write_str(s)
    }
}

/// Matched-pair data for K = k^G extended by kC2 = <t>.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicrossedData {
    pub group: FiniteGroup,
    /// f_t as a permutation of group elements; t̄ e_g = e_{f(g)} t̄.
    pub action: Vec<usize>,
    /// v = σ(t, t) = Σ c_g e_g.
    pub sigma: Vec<CycNum>,
    /// θ(t) = Σ θ[a][b] e_a ⊗ e_b.
    pub theta: Vec<Vec<CycNum>>,
}

impl BicrossedData {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn dim(&self) -> usize {
        2 * self.order()
    }

    /// Basis index of e_g t̄^r.
    pub fn index(&self, g: usize, r: usize) -> usize {
        r * self.order() + g
    }

    /// Σ_g w(g) e_g t̄^r as a coordinate vector.
    pub fn element(&self, r: usize, w: impl Fn(usize) -> CycNum) -> Vec<CycNum> {
        let m = self.order();
        let mut v = vec![CycNum::zero(); 2 * m];
        for g in 0..m {
            v[self.index(g, r)] = w(g);
        }
        v
    }

    pub fn tbar(&self) -> Vec<CycNum> {
        self.element(1, |_| CycNum::one())
    }

    fn check_sizes(&self) -> Result<(), ConstructionError> {
        let m = self.order();
        if self.action.len() != m || self.sigma.len() != m || self.theta.len() != m || self.theta.iter().any(|r| r.len() != m) {
            return Err(ConstructionError::DimensionMismatch("bicrossed data".into()));
        }
        Ok(())
    }

    /// The first violated condition, if any.
    pub fn check_conditions(&self) -> Result<(), ConstructionError> {
        self.check_sizes()?;
        let g = &self.group;
        let m = g.order();
        let f = &self.action;
        if !g.is_automorphism(f) {
            return Err(ConstructionError::ActionNotAutomorphism);
        }
        if (0..m).any(|a| f[f[a]] != a) {
            return Err(ConstructionError::ActionOrderNotTwo);
        }
        let fail = |condition, detail: String| Err(ConstructionError::InvalidCocycle { condition, detail });
        let e = g.identity();
        let th = &self.theta;
        for a in 0..m {
            if !th[e][a].is_one() || !th[a][e].is_one() {
                return fail(CocycleCondition::ThetaNormalized, g.labels[a].clone());
            }
        }
        for a in 0..m {
            for b in 0..m {
                for cc in 0..m {
                    let lhs = &th[a][b] * &th[g.mul(a, b)][cc];
                    let rhs = &th[b][cc] * &th[a][g.mul(b, cc)];
                    if lhs != rhs {
                        return fail(
                            CocycleCondition::ThetaCocycle,
                            format!("({}, {}, {})", g.labels[a], g.labels[b], g.labels[cc]),
                        );
                    }
                }
            }
        }
        let c = &self.sigma;
        if !c[e].is_one() {
            return fail(CocycleCondition::SigmaNormalized, format!("c_1 = {}", c[e]));
        }
        if let Some(a) = (0..m).find(|&a| c[a].is_zero()) {
            return fail(CocycleCondition::SigmaUnit, g.labels[a].clone());
        }
        if let Some(a) = (0..m).find(|&a| c[f[a]] != c[a]) {
            return fail(CocycleCondition::SigmaActionInvariant, g.labels[a].clone());
        }
        for a in 0..m {
            for b in 0..m {
                let rhs = &(&(&th[a][b] * &th[f[a]][f[b]]) * &c[a]) * &c[b];
                if c[g.mul(a, b)] != rhs {
                    return fail(CocycleCondition::Bialgebra, format!("({}, {})", g.labels[a], g.labels[b]));
                }
            }
        }
        Ok(())
    }

    /// Validate, then build.
    pub fn build(&self) -> Result<HopfAlgebra, ConstructionError> {
        self.check_conditions()?;
        let (basis, mult, unit, comult, counit) = self.tensors();
        Ok(HopfAlgebra::from_bialgebra(basis, mult, unit, comult, counit)?)
    }

    /// Build the structure maps without checking any condition; the antipode is
    /// left zero when the antipode equations have no unique solution.
    pub fn build_unchecked(&self) -> Result<HopfAlgebra, ConstructionError> {
        self.check_sizes()?;
        let (basis, mult, unit, comult, counit) = self.tensors();
        Ok(HopfAlgebra::from_bialgebra_unchecked(basis, mult, unit, comult, counit)?)
    }

    #[allow(clippy::type_complexity)]
    fn tensors(&self) -> (Vec<String>, Vec<CycNum>, Vec<CycNum>, Vec<CycNum>, Vec<CycNum>) {
        let g = &self.group;
        let m = g.order();
        let n = 2 * m;
        let mut basis = Vec::with_capacity(n);
        for r in 0..2 {
            for a in 0..m {
                let l = &g.labels[a];
                basis.push(if r == 0 { format!("e_{{{l}}}") } else { format!("e_{{{l}}}*tbar") });
            }
        }
        let mut mult = vec![CycNum::zero(); n * n * n];
        for r in 0..2 {
            for s in 0..2 {
                for a in 0..m {
                    for b in 0..m {
                        let fb = if r == 1 { self.action[b] } else { b };
                        if a != fb {
                            continue;
                        }
                        let coef = if r == 1 && s == 1 { self.sigma[a].clone() } else { CycNum::one() };
                        mult[idx3(n, self.index(a, r), self.index(b, s), self.index(a, (r + s) % 2))] = coef;
                    }
                }
            }
        }
        let mut comult = vec![CycNum::zero(); n * n * n];
        for r in 0..2 {
            for a in 0..m {
                for b in 0..m {
                    let coef = if r == 1 { self.theta[a][b].clone() } else { CycNum::one() };
                    comult[idx3(n, self.index(g.mul(a, b), r), self.index(a, r), self.index(b, r))] = coef;
                }
            }
        }
        let mut unit = vec![CycNum::zero(); n];
        for a in 0..m {
            unit[self.index(a, 0)] = CycNum::one();
        }
        let mut counit = vec![CycNum::zero(); n];
        counit[self.index(g.identity(), 0)] = CycNum::one();
        counit[self.index(g.identity(), 1)] = CycNum::one();
        (basis, mult, unit, comult, counit)
    }

    /// Restriction to an f-stable subgroup N; for a character g of G this is H/(g-1)H with N = ker g.
    pub fn restrict(&self, elems: &[usize], name: &str) -> Result<BicrossedData, ConstructionError> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        let sub = self.group.subgroup(&sorted, name)?;
        let pos = |a: usize| sorted.iter().position(|&x| x == a);
        let action = sorted
            .iter()
            .map(|&a| pos(self.action[a]).ok_or(ConstructionError::ActionNotAutomorphism))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BicrossedData {
            group: sub,
            action,
            sigma: sorted.iter().map(|&a| self.sigma[a].clone()).collect(),
            theta: sorted.iter().map(|&a| sorted.iter().map(|&b| self.theta[a][b].clone()).collect()).collect(),
        })
    }

    fn theta_exponents(&self) -> Option<Vec<Vec<i64>>> {
        self.theta.iter().map(|row| row.iter().map(|x| x.root_exponent()).collect()).collect()
    }

    /// All grouplikes: characters of G in K and the twisted characters times t̄.
    pub fn grouplikes(&self) -> Vec<Vec<CycNum>> {
        let m = self.order();
        let zero = vec![vec![0i64; m]; m];
        let mut out: Vec<Vec<CycNum>> = twisted_characters(&self.group, &zero)
            .into_iter()
            .map(|w| self.element(0, |g| CycNum::root_of_unity(w[g])))
            .collect();
        if let Some(th) = self.theta_exponents() {
            out.extend(
                twisted_characters(&self.group, &th)
                    .into_iter()
                    .map(|w| self.element(1, |g| CycNum::root_of_unity(w[g]))),
            );
        }
        out
    }

    /// Characters of H: a point g fixed by f and λ with λ² = c_g; returns (g, λ).
    pub fn character_points(&self) -> Vec<(usize, CycNum)> {
        let mut out = Vec::new();
        for g in 0..self.order() {
            if self.action[g] != g {
                continue;
            }
            if let Some(e) = self.sigma[g].root_exponent() {
                if e % 2 == 0 {
                    out.push((g, CycNum::root_of_unity(e / 2)));
                    out.push((g, CycNum::root_of_unity(e / 2 + 8)));
                }
            }
        }
        out
    }

    /// The character e_h ↦ δ_{h,g}, t̄ ↦ λ.
    pub fn character(&self, g: usize, lambda: &CycNum, label: &str) -> Representation {
        let images = (0..self.dim())
            .map(|i| {
                let (h, r) = (i % self.order(), i / self.order());
                let v = if h != g {
                    CycNum::zero()
                } else if r == 0 {
                    CycNum::one()
                } else {
                    lambda.clone()
                };
                Matrix::from_rows(vec![vec![v]])
            })
            .collect();
        Representation::new(label, images)
    }

    /// Two-dimensional irrep on the orbit {g, f(g)} with t̄ ↦ [[0, c_g], [1, 0]].
    pub fn orbit_irrep(&self, g: usize, label: &str) -> Representation {
        let fg = self.action[g];
        let t = Matrix::from_rows(vec![vec![CycNum::zero(), self.sigma[g].clone()], vec![CycNum::one(), CycNum::zero()]]);
        let images = (0..self.dim())
            .map(|i| {
                let (h, r) = (i % self.order(), i / self.order());
                let mut p = Matrix::zeros(2, 2);
                if h == g {
                    p.set(0, 0, CycNum::one());
                }
                if h == fg {
                    p.set(1, 1, CycNum::one());
                }
                if r == 0 {
                    p
                } else {
                    p.mm(&t)
                }
            })
            .collect();
        Representation::new(label, images)
    }

    /// All irreducible representations: characters first, then one per free orbit.
    pub fn irreps(&self) -> Vec<Representation> {
        let mut out: Vec<Representation> = self
            .character_points()
            .iter()
            .enumerate()
            .map(|(k, (g, l))| self.character(*g, l, &format!("chi{k}")))
            .collect();
        let mut seen = vec![false; self.order()];
        let mut k = 0;
        for g in 0..self.order() {
            let fg = self.action[g];
            if fg == g || seen[g] {
                continue;
            }
            seen[g] = true;
            seen[fg] = true;
            k += 1;
            out.push(self.orbit_irrep(g, &format!("pi{k}")));
        }
        out
    }
}

/// All w: G → Z/16 with w(1) = 0 and w(ab) + tau(a, b) = w(a) + w(b), i.e. ζ^w is a
/// θ-twisted character for θ = ζ^tau. Search over generator values, propagated along the table.
pub fn twisted_characters(g: &FiniteGroup, tau: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = g.order();
    let gens = &g.generators;
    let k = gens.len();
    let mut out = Vec::new();
    let total = 16usize.pow(k as u32);
    for code in 0..total {
        let vals: Vec<i64> = (0..k).map(|j| ((code / 16usize.pow(j as u32)) % 16) as i64).collect();
        if let Some(w) = propagate(g, tau, &vals) {
            out.push(w);
        }
    }
    let _ = m;
    out
}

fn propagate(g: &FiniteGroup, tau: &[Vec<i64>], gen_vals: &[i64]) -> Option<Vec<i64>> {
    let m = g.order();
    let e = g.identity();
    let mut w: Vec<Option<i64>> = vec![None; m];
    w[e] = Some(0);
    let mut queue = VecDeque::from([e]);
    while let Some(a) = queue.pop_front() {
        for (j, &s) in g.generators.iter().enumerate() {
            let b = g.mul(a, s);
            let val = (w[a].unwrap() + gen_vals[j] - tau[a][s]).rem_euclid(16);
            match w[b] {
                None => {
                    w[b] = Some(val);
                    queue.push_back(b);
                }
                Some(x) if x != val => return None,
                _ => {}
            }
        }
    }
    let w: Vec<i64> = w.into_iter().collect::<Option<Vec<_>>>()?;
    for a in 0..m {
        for b in 0..m {
            if (w[g.mul(a, b)] + tau[a][b] - w[a] - w[b]).rem_euclid(16) != 0 {
                return None;
            }
        }
    }
    Some(w)
}

/// Every σ(t, t) with values in the 16th roots of unity that satisfies all conditions for the
/// given group, action and θ. Complete over Q(ζ16): the bialgebra condition forces each c_g
/// to be a root of unity.
pub fn solve_cocycles(group: &FiniteGroup, action: &[usize], theta: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    let m = group.order();
    let th: Option<Vec<Vec<i64>>> = theta.iter().map(|r| r.iter().map(|x| x.root_exponent()).collect()).collect();
    let Some(th) = th else { return Vec::new() };
    // c_{ab} = θ(a,b) θ(fa,fb) c_a c_b  <=>  w(ab) + tau(a,b) = w(a) + w(b) with tau = -(...)
    let tau: Vec<Vec<i64>> =
        (0..m).map(|a| (0..m).map(|b| -(th[a][b] + th[action[a]][action[b]])).collect()).collect();
    twisted_characters(group, &tau)
        .into_iter()
        .filter(|w| (0..m).all(|a| w[action[a]] == w[a]))
        .map(|w| w.into_iter().map(CycNum::root_of_unity).collect::<Vec<_>>())
        .filter(|sigma| {
            let data = BicrossedData {
                group: group.clone(),
                action: action.to_vec(),
                sigma: sigma.clone(),
                theta: theta.to_vec(),
            };
            data.check_conditions().is_ok()
        })
        .collect()
}
