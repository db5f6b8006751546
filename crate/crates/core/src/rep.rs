//! Finite-dimensional representations: verification, intertwiners, complete irrep
//! sets, central idempotents and tensor-product decomposition.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::hopf::{extend_multiplicatively, CheckResult, HopfAlgebra, HopfError, Report};
use crate::linalg::{self, LinalgError, Matrix};
use crate::spectral;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("representation {0} has images of the wrong size")]
    DimensionMismatch(String),
    #[error("representation {label} is not an algebra map: {detail}")]
    NotAlgebraMap { label: String, detail: String },
    #[error("representation {0} is reducible")]
    Reducible(String),
    #[error("representations {0} and {1} are equivalent")]
    Equivalent(String, String),
    #[error("sum of squared degrees is {sum}, expected {dim}")]
    DegreeSumMismatch { sum: usize, dim: usize },
    #[error("multiplicity of {z} in {x}⊗{y} is {value}, not a natural number")]
    NonIntegerMultiplicity { x: String, y: String, z: String, value: String },
    #[error("idempotent check failed: {0}")]
    Idempotents(String),
    #[error("algebra splitting failed: {0}")]
    Splitting(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// π: H → End(V), stored as the image of each basis element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub label: String,
    pub images: Vec<Matrix>,
}

impl Representation {
    pub fn new(label: &str, images: Vec<Matrix>) -> Self {
        Representation { label: label.to_string(), images }
    }

    pub fn degree(&self) -> usize {
        self.images.first().map_or(0, |m| m.rows())
    }

    /// π(v) for v in basis coordinates.
    pub fn of_element(&self, v: &[CycNum]) -> Matrix {
        let d = self.degree();
        let mut out = Matrix::zeros(d, d);
        for (x, m) in v.iter().zip(&self.images) {
            if !x.is_zero() {
                out.add_scaled(m, x);
            }
        }
        out
    }

    /// Extend images of algebra generators multiplicatively.
    pub fn from_generators(h: &HopfAlgebra, label: &str, gens: &[(Vec<CycNum>, Matrix)]) -> Result<Self, RepError> {
        let d = gens.first().map_or(1, |(_, m)| m.rows());
        let images = extend_multiplicatively(
            h.algebra(),
            gens,
            Matrix::identity(d),
            |a: &Matrix, b: &Matrix| a.mm(b),
            |terms: &[(CycNum, &Matrix)]| {
                let mut out = Matrix::zeros(d, d);
                for (c, m) in terms {
                    out.add_scaled(m, c);
                }
                out
            },
        )?;
        Ok(Representation::new(label, images))
    }

    /// One-dimensional representation from its values on the basis.
    pub fn from_character(label: &str, values: &[CycNum]) -> Self {
        Representation::new(label, values.iter().map(|v| Matrix::from_rows(vec![vec![v.clone()]])).collect())
    }

    /// Values on the basis of a one-dimensional representation; as an element of H* this is a grouplike.
    pub fn character_values(&self) -> Option<Vec<CycNum>> {
        (self.degree() == 1).then(|| self.images.iter().map(|m| m.get(0, 0).clone()).collect())
    }

    /// The character b ↦ tr π(b).
    pub fn trace_character(&self) -> Vec<CycNum> {
        self.images.iter().map(Matrix::trace).collect()
    }

    pub fn trivial(h: &HopfAlgebra) -> Self {
        Representation::from_character("1", h.counit())
    }

    pub fn regular(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        Representation::new("regular", (0..n).map(|i| h.algebra().left_matrix(&h.basis_vec(i))).collect())
    }

    pub fn direct_sum(&self, other: &Representation) -> Self {
        Representation::new(
            &format!("{}⊕{}", self.label, other.label),
            self.images.iter().zip(&other.images).map(|(a, b)| a.direct_sum(b)).collect(),
        )
    }

    /// (π_a ⊗ π_b) ∘ Δ.
    pub fn tensor(h: &HopfAlgebra, a: &Representation, b: &Representation) -> Self {
        let (da, db) = (a.degree(), b.degree());
        let images = (0..h.dim())
            .map(|i| {
                let mut out = Matrix::zeros(da * db, da * db);
                for (j, k, c) in &h.sparse_coproduct()[i] {
                    out.add_scaled(&a.images[*j].kron(&b.images[*k]), c);
                }
                out
            })
            .collect();
        Representation::new(&format!("{}⊗{}", a.label, b.label), images)
    }

    /// π*(b) = π(S(b))ᵀ.
    pub fn dual(&self, h: &HopfAlgebra) -> Self {
        let images =
            (0..h.dim()).map(|i| self.of_element(&h.antipode().column(i)).transpose()).collect();
        Representation::new(&format!("{}*", self.label), images)
    }

    /// Conjugate by an invertible matrix: P⁻¹ π P.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self, RepError> {
        let pi = p.inverse()?;
        Ok(Representation::new(&self.label, self.images.iter().map(|m| pi.mm(m).mm(p)).collect()))
    }

    /// π(1) = I and π(b_i) π(b_j) = π(b_i b_j).
    pub fn verify(&self, h: &HopfAlgebra) -> Result<(), RepError> {
        let n = h.dim();
        let d = self.degree();
        if self.images.len() != n || self.images.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(RepError::DimensionMismatch(self.label.clone()));
        }
        let fail = |detail: String| RepError::NotAlgebraMap { label: self.label.clone(), detail };
        if !self.of_element(h.unit()).is_identity() {
            return Err(fail("unit".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.images[i].mm(&self.images[j]);
                let rhs = self.of_element(&h.mul(&h.basis_vec(i), &h.basis_vec(j)));
                if lhs != rhs {
                    return Err(fail(format!("{} * {}", h.basis_labels()[i], h.basis_labels()[j])));
                }
            }
        }
        Ok(())
    }
}

/// dim Hom_H(a, b).
pub fn intertwiner_dimension(a: &Representation, b: &Representation) -> usize {
    let (d1, d2) = (a.degree(), b.degree());
    let nvars = d1 * d2;
    let mut rows = Vec::new();
    for (pa, pb) in a.images.iter().zip(&b.images) {
        // unknown M (d2 × d1), entry (r, c) at r*d1 + c; equation M pa = pb M
        for r in 0..d2 {
            for c in 0..d1 {
                let mut row = vec![CycNum::zero(); nvars];
                for k in 0..d1 {
                    row[r * d1 + k] += pa.get(k, c);
                }
                for k in 0..d2 {
                    row[k * d1 + c] -= pb.get(r, k);
                }
                if !linalg::is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return nvars;
    }
    nvars - linalg::rank_of(&rows)
}

/// A verified complete set of irreducible representations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepSet {
    pub irreps: Vec<Representation>,
    /// Primitive central idempotents, aligned with `irreps`.
    pub idempotents: Vec<Vec<CycNum>>,
}

impl IrrepSet {
    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(Representation::degree).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.irreps.iter().map(|r| r.label.clone()).collect()
    }

    /// Characters of H, i.e. grouplikes of H*, in dual-basis coordinates.
    pub fn characters(&self) -> Vec<Vec<CycNum>> {
        self.irreps.iter().filter_map(Representation::character_values).collect()
    }

    /// Multiplicity of each irrep in `rho`, read off from tr ρ(e_z) = m_z d_z.
    pub fn multiplicities(&self, rho: &Representation) -> Result<Vec<usize>, RepError> {
        self.irreps
            .iter()
            .zip(&self.idempotents)
            .map(|(z, e)| {
                let t = rho.of_element(e).trace();
                let m = t.to_rational().map(|r| r / num_rational::BigRational::from_integer((z.degree() as i64).into()));
                match m {
                    Some(m) if m.is_integer() && m >= num_rational::BigRational::from_integer(0.into()) => {
                        Ok(m.to_integer().try_into().unwrap_or(usize::MAX))
                    }
                    _ => Err(RepError::NonIntegerMultiplicity {
                        x: rho.label.clone(),
                        y: String::new(),
                        z: z.label.clone(),
                        value: t.to_string(),
                    }),
                }
            })
            .collect()
    }

    /// Index of the irrep isomorphic to the given irreducible representation.
    pub fn identify(&self, rho: &Representation) -> Result<usize, RepError> {
        let m = self.multiplicities(rho)?;
        match m.iter().enumerate().filter(|(_, &x)| x > 0).collect::<Vec<_>>().as_slice() {
            [(i, 1)] => Ok(*i),
            _ => Err(RepError::Reducible(rho.label.clone())),
        }
    }
}

/// Check that the given representations are irreducible, pairwise inequivalent and
/// exhaust H (Σ d² = dim H), then compute the central idempotents.
pub fn verify_irrep_set(h: &HopfAlgebra, reps: &[Representation]) -> Result<IrrepSet, RepError> {
    for r in reps {
        r.verify(h)?;
        if intertwiner_dimension(r, r) != 1 {
            return Err(RepError::Reducible(r.label.clone()));
        }
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if reps[i].degree() == reps[j].degree() && intertwiner_dimension(&reps[i], &reps[j]) != 0 {
                return Err(RepError::Equivalent(reps[i].label.clone(), reps[j].label.clone()));
            }
        }
    }
    let sum: usize = reps.iter().map(|r| r.degree() * r.degree()).sum();
    if sum != h.dim() {
        return Err(RepError::DegreeSumMismatch { sum, dim: h.dim() });
    }
    let idempotents = central_idempotents(h, reps)?;
    Ok(IrrepSet { irreps: reps.to_vec(), idempotents })
}

/// e_i with π_j(e_i) = δ_ij I, from the Wedderburn isomorphism H ≅ ⊕ End(V_j).
pub fn central_idempotents(h: &HopfAlgebra, reps: &[Representation]) -> Result<Vec<Vec<CycNum>>, RepError> {
    let n = h.dim();
    let mut rows: Vec<Vec<CycNum>> = Vec::new();
    let mut block_of_row = Vec::new();
    let mut diag_row = Vec::new();
    for (j, r) in reps.iter().enumerate() {
        let d = r.degree();
        for a in 0..d {
            for b in 0..d {
                rows.push((0..n).map(|k| r.images[k].get(a, b).clone()).collect());
                block_of_row.push(j);
                diag_row.push(a == b);
            }
        }
    }
    if rows.len() != n {
        return Err(RepError::DegreeSumMismatch { sum: rows.len(), dim: n });
    }
    let w = Matrix::from_rows(rows);
    let mut rhs = Matrix::zeros(n, reps.len());
    for (row, (&j, &dg)) in block_of_row.iter().zip(&diag_row).enumerate() {
        if dg {
            rhs.set(row, j, CycNum::one());
        }
    }
    let sol = w.solve(&rhs)?;
    let es: Vec<Vec<CycNum>> = (0..reps.len()).map(|j| sol.column(j)).collect();
    let mut total = vec![CycNum::zero(); n];
    for (i, e) in es.iter().enumerate() {
        if !h.is_central(e) {
            return Err(RepError::Idempotents(format!("e_{} not central", reps[i].label)));
        }
        for (j, f) in es.iter().enumerate() {
            let p = h.mul(e, f);
            let expect = if i == j { e.clone() } else { vec![CycNum::zero(); n] };
            if p != expect {
                return Err(RepError::Idempotents(format!("e_{} e_{}", reps[i].label, reps[j].label)));
            }
        }
        total = linalg::vec_add(&total, e);
    }
    if total != h.one() {
        return Err(RepError::Idempotents("sum is not 1".into()));
    }
    Ok(es)
}

/// Decompose a module by intertwiner dimensions; an oracle independent of the idempotents.
pub fn decompose_module_oracle(rho: &Representation, irreps: &[Representation]) -> Vec<usize> {
    irreps.iter().map(|z| intertwiner_dimension(z, rho)).collect()
}

/// Check report for an irrep set against a claimed set of degrees.
pub fn irrep_report(h: &HopfAlgebra, reps: &[Representation]) -> Report {
    let check = match verify_irrep_set(h, reps) {
        Ok(_) => CheckResult::pass("complete irreducible set"),
        Err(e) => CheckResult::fail("complete irreducible set", e.to_string()),
    };
    Report { checks: vec![check] }
}

/// Split a semisimple Hopf algebra whose simple blocks have degree at most 2 into
/// irreducible representations, using only its structure constants.
pub fn split_semisimple(h: &HopfAlgebra) -> Result<Vec<Representation>, RepError> {
    splitter::split(h)
}

mod splitter {
    use super::*;

    fn candidate_values() -> Vec<CycNum> {
        let mut s: Vec<CycNum> = (0..16).map(CycNum::root_of_unity).collect();
        s.push(CycNum::zero());
        s
    }

    /// Normalized two-sided integral: hΛ = ε(h)Λ, ε(Λ) = 1.
    fn integral(h: &HopfAlgebra) -> Result<Vec<CycNum>, RepError> {
        let n = h.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            let l = h.algebra().left_matrix(&h.basis_vec(i));
            let m = l.sub(&Matrix::scalar(n, &h.counit()[i]));
            rows.extend(m.to_rows());
        }
        let null = Matrix::from_rows(rows).nullspace();
        if null.len() != 1 {
            return Err(RepError::Splitting(format!("integral space has dimension {}", null.len())));
        }
        let eps = h.counit_of(&null[0]);
        if eps.is_zero() {
            return Err(RepError::Splitting("not semisimple".into()));
        }
        Ok(linalg::vec_scale(&null[0], &eps.inv().map_err(|e| RepError::Splitting(e.to_string()))?))
    }

    /// Λ_(1) u S(Λ_(2)); acts on V as tr(u|V)/dim(V) times a scalar normalization.
    fn average(h: &HopfAlgebra, delta_l: &[CycNum], u: &[CycNum]) -> Vec<CycNum> {
        let n = h.dim();
        let mut out = vec![CycNum::zero(); n];
        for j in 0..n {
            let mut right = vec![CycNum::zero(); n];
            let mut any = false;
            for k in 0..n {
                let c = &delta_l[j * n + k];
                if !c.is_zero() {
                    any = true;
                    right = linalg::vec_add(&right, &linalg::vec_scale(&h.antipode().column(k), c));
                }
            }
            if any {
                let v = h.mul(&h.mul(&h.basis_vec(j), u), &right);
                out = linalg::vec_add(&out, &v);
            }
        }
        out
    }

    /// Coordinates of v in the given basis (columns of `b`).
    fn coords(b: &Matrix, v: &[CycNum]) -> Result<Vec<CycNum>, RepError> {
        let rhs = Matrix::from_columns(&[v.to_vec()]);
        Ok(b.solve(&rhs)?.column(0))
    }

    /// Eigenvalues from `cands` of a diagonalizable operator, with eigenspaces.
    fn eigenspaces(m: &Matrix, cands: &[CycNum]) -> Vec<(CycNum, Vec<Vec<CycNum>>)> {
        let r = m.rows();
        let mut out = Vec::new();
        let mut found = 0;
        for l in cands {
            let null = m.sub(&Matrix::scalar(r, l)).nullspace();
            if !null.is_empty() {
                found += null.len();
                out.push((l.clone(), null));
                if found == r {
                    break;
                }
            }
        }
        out
    }

    pub(super) fn split(h: &HopfAlgebra) -> Result<Vec<Representation>, RepError> {
        let n = h.dim();
        let lam = integral(h)?;
        let delta_l = h.coproduct(&lam);
        let center = h.algebra().center();
        let zb = Matrix::from_columns(&center);
        let r = center.len();
        let base = candidate_values();
        let mut cands = base.clone();
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let avg = linalg::vec_scale(&[&base[i] + &base[j]], &CycNum::from_ratio(1, 2)).remove(0);
                if !cands.contains(&avg) {
                    cands.push(avg);
                }
            }
        }
        // joint refinement of Z into one-dimensional common eigenspaces
        let mut parts: Vec<Matrix> = vec![Matrix::identity(r)];
        for k in 0..n {
            if parts.len() == r {
                break;
            }
            let c = average(h, &delta_l, &h.basis_vec(k));
            let cols = center
                .iter()
                .map(|z| coords(&zb, &h.mul(&c, z)))
                .collect::<Result<Vec<_>, _>>()?;
            let mz = Matrix::from_columns(&cols);
            let mut next = Vec::new();
            for w in parts {
                if w.cols() == 1 {
                    next.push(w);
                    continue;
                }
                // operator restricted to span(w): solve w X = mz w
                let img = mz.mm(&w);
                let restricted = w.solve(&img)?;
                let mut spaces = eigenspaces(&restricted, &cands);
                if spaces.iter().map(|(_, v)| v.len()).sum::<usize>() != w.cols() {
                    let exact = spectral::exact_eigenvalues(&restricted)
                        .map_err(|e| RepError::Splitting(format!("central element: {e}")))?;
                    spaces = eigenspaces(&restricted, &exact);
                }
                if spaces.iter().map(|(_, v)| v.len()).sum::<usize>() != w.cols() {
                    return Err(RepError::Splitting("central element is not diagonalizable over the field".into()));
                }
                for (_, vs) in spaces {
                    let sub: Vec<Vec<CycNum>> = vs.iter().map(|v| w.apply(v)).collect();
                    next.push(Matrix::from_columns(&sub));
                }
            }
            parts = next;
        }
        if parts.len() != r {
            return Err(RepError::Splitting("central elements do not separate blocks".into()));
        }
        let mut reps = Vec::new();
        for (bi, w) in parts.iter().enumerate() {
            let z = zb.apply(&w.column(0));
            // normalize z to an idempotent: z² = λ z
            let z2 = h.mul(&z, &z);
            let piv = z.iter().position(|x| !x.is_zero()).ok_or_else(|| RepError::Splitting("zero".into()))?;
            let lamb = z2[piv].div(&z[piv]).map_err(|e| RepError::Splitting(e.to_string()))?;
            let e = linalg::vec_scale(&z, &lamb.inv().map_err(|e| RepError::Splitting(e.to_string()))?);
            reps.push(block_rep(h, &e, &format!("V{bi}"))?);
        }
        Ok(reps)
    }

    fn block_rep(h: &HopfAlgebra, e: &[CycNum], label: &str) -> Result<Representation, RepError> {
        let n = h.dim();
        let block = linalg::span_basis(&(0..n).map(|i| h.mul(&h.basis_vec(i), e)).collect::<Vec<_>>());
        match block.len() {
            1 => {
                let piv = e.iter().position(|x| !x.is_zero()).unwrap_or(0);
                let vals = (0..n)
                    .map(|i| h.mul(&h.basis_vec(i), e)[piv].div(&e[piv]))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|x| RepError::Splitting(x.to_string()))?;
                Ok(Representation::from_character(label, &vals))
            }
            4 => {
                let bm = Matrix::from_columns(&block);
                let cands = candidate_values();
                for k in 0..n {
                    let u = h.mul(&h.basis_vec(k), e);
                    let cols = block.iter().map(|v| coords(&bm, &h.mul(&u, v))).collect::<Result<Vec<_>, _>>()?;
                    let lm = Matrix::from_columns(&cols);
                    let mut spaces = eigenspaces(&lm, &cands);
                    if spaces.iter().map(|(_, v)| v.len()).sum::<usize>() != 4 {
                        if let Ok(exact) = spectral::exact_eigenvalues(&lm) {
                            spaces = eigenspaces(&lm, &exact);
                        }
                    }
                    if spaces.len() != 2 || spaces.iter().any(|(_, v)| v.len() != 2) {
                        continue;
                    }
                    let (l1, l2) = (&spaces[0].0, &spaces[1].0);
                    let diff = (l1 - l2).inv().map_err(|x| RepError::Splitting(x.to_string()))?;
                    let p = linalg::vec_scale(&linalg::vec_sub(&u, &linalg::vec_scale(e, l2)), &diff);
                    if h.mul(&p, &p) != p {
                        continue;
                    }
                    let module = linalg::span_basis(&(0..n).map(|i| h.mul(&h.basis_vec(i), &p)).collect::<Vec<_>>());
                    if module.len() != 2 {
                        continue;
                    }
                    let mb = Matrix::from_columns(&module);
                    let images = (0..n)
                        .map(|i| {
                            let cols = module
                                .iter()
                                .map(|v| coords(&mb, &h.mul(&h.basis_vec(i), v)))
                                .collect::<Result<Vec<_>, _>>()?;
                            Ok(Matrix::from_columns(&cols))
                        })
                        .collect::<Result<Vec<_>, RepError>>()?;
                    return Ok(Representation::new(label, images));
                }
                Err(RepError::Splitting(format!("no separating probe for block {label}")))
            }
            d => Err(RepError::Splitting(format!("block of dimension {d} not supported"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::group_algebra;
    use crate::groups;

    #[test]
    fn regular_rep_of_kc2_decomposes() {
        let h = group_algebra(&groups::cyclic(2));
        let reps = split_semisimple(&h).unwrap();
        assert_eq!(reps.len(), 2);
        let set = verify_irrep_set(&h, &reps).unwrap();
        let reg = Representation::regular(&h);
        assert_eq!(set.multiplicities(&reg).unwrap(), vec![1, 1]);
        assert_eq!(decompose_module_oracle(&reg, &set.irreps), vec![1, 1]);
    }

    #[test]
    fn splitter_finds_d8_irreps() {
        let h = group_algebra(&groups::d8());
        let reps = split_semisimple(&h).unwrap();
        let set = verify_irrep_set(&h, &reps).unwrap();
        let mut d = set.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 1, 1, 2]);
        let two = set.irreps.iter().find(|r| r.degree() == 2).unwrap();
        let sq = Representation::tensor(&h, two, two);
        let mut m = set.multiplicities(&sq).unwrap();
        assert_eq!(m, decompose_module_oracle(&sq, &set.irreps));
        m.sort_unstable();
        assert_eq!(m, vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn reducible_and_equivalent_are_rejected() {
        let h = group_algebra(&groups::cyclic(2));
        let t = Representation::trivial(&h);
        assert!(matches!(verify_irrep_set(&h, &[t.direct_sum(&t)]), Err(RepError::Reducible(_))));
        assert!(matches!(verify_irrep_set(&h, &[t.clone(), t]), Err(RepError::Equivalent(..))));
    }

    #[test]
    fn dual_of_trivial_is_trivial() {
        let h = group_algebra(&groups::q8());
        let t = Representation::trivial(&h);
        assert_eq!(intertwiner_dimension(&t.dual(&h), &t), 1);
    }
}
