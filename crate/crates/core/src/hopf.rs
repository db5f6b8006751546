//! Finite-dimensional Hopf algebras as structure-constant tensors over Q(z16).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::groups::{GroupError, GroupTable};
use crate::linalg::{self, LinalgError, Matrix, SparseSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("element is not central")]
    NotCentral,
    #[error("element is not a grouplike involution different from 1")]
    NotInvolution,
    #[error("claimed element {0} is not grouplike")]
    NotGrouplike(usize),
    #[error("claimed grouplikes are not distinct and linearly independent")]
    Dependent,
    #[error("claimed grouplikes are not closed under {0}")]
    NotClosed(String),
    #[error("found {found} grouplikes but the count bound is {bound}")]
    IncompleteSet { found: usize, bound: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("json: {0}")]
    Json(String),
}

/// Outcome of one named exact check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(name: &str) -> Self {
        CheckResult { name: name.to_string(), passed: true, detail: None }
    }

    pub fn fail(name: &str, detail: String) -> Self {
        CheckResult { name: name.to_string(), passed: false, detail: Some(detail) }
    }

    fn from_first_failure(name: &str, failure: Option<String>) -> Self {
        match failure {
            None => Self::pass(name),
            Some(d) => Self::fail(name, d),
        }
    }
}

/// A list of named checks.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "{status} {} ({d})", c.name)?,
                None => writeln!(f, "{status} {}", c.name)?,
            }
        }
        Ok(())
    }
}

pub type SparseVec = Vec<(usize, CycNum)>;

pub fn sparse_of(v: &[CycNum]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Structure constants of an associative algebra: b_i b_j = sum_k c[i][j][k] b_k.
#[derive(Clone)]
pub struct AlgebraTensor {
    n: usize,
    entries: Vec<SparseVec>,
    unit: Vec<CycNum>,
}

impl AlgebraTensor {
    pub fn from_dense(n: usize, dense: &[CycNum], unit: Vec<CycNum>) -> Self {
        let entries = (0..n * n).map(|ij| sparse_of(&dense[ij * n..(ij + 1) * n])).collect();
        AlgebraTensor { n, entries, unit }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> &[CycNum] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
        let n = self.n;
        let mut out = vec![CycNum::zero(); n];
        let sb = sparse_of(b);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in &sb {
                let xy = x * y;
                for (k, c) in &self.entries[i * n + j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    /// Basis element b_i times a vector.
    pub fn mul_basis_left(&self, i: usize, b: &[CycNum]) -> Vec<CycNum> {
        let n = self.n;
        let mut out = vec![CycNum::zero(); n];
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (k, c) in &self.entries[i * n + j] {
                out[*k] += &(y * c);
            }
        }
        out
    }

    pub fn mul_basis_right(&self, a: &[CycNum], j: usize) -> Vec<CycNum> {
        let n = self.n;
        let mut out = vec![CycNum::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.entries[i * n + j] {
                out[*k] += &(x * c);
            }
        }
        out
    }

    /// Matrix of left multiplication by a.
    pub fn left_matrix(&self, a: &[CycNum]) -> Matrix {
        let cols: Vec<Vec<CycNum>> = (0..self.n).map(|j| self.mul(a, &linalg::unit_vec(self.n, j))).collect();
        Matrix::from_columns(&cols)
    }

    /// Trace of left multiplication by each basis element.
    pub fn regular_traces(&self) -> Vec<CycNum> {
        (0..self.n)
            .map(|k| {
                let mut t = CycNum::zero();
                for l in 0..self.n {
                    for (m, c) in &self.entries[k * self.n + l] {
                        if *m == l {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// Gram matrix of the trace form tr(L_{b_i b_j}).
    pub fn trace_form(&self) -> Matrix {
        let tr = self.regular_traces();
        let mut g = Matrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut s = CycNum::zero();
                for (k, c) in &self.entries[i * self.n + j] {
                    s += &(c * &tr[*k]);
                }
                g.set(i, j, s);
            }
        }
        g
    }

    pub fn is_semisimple(&self) -> bool {
        self.trace_form().rank() == self.n
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_central(&self, z: &[CycNum]) -> bool {
        (0..self.n).all(|i| {
            let e = linalg::unit_vec(self.n, i);
            self.mul(z, &e) == self.mul(&e, z)
        })
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vec<CycNum>> {
        let n = self.n;
        // rows: for each basis b_i and output coordinate k, sum_j z_j (c[j][i][k] - c[i][j][k]) = 0
        let mut rows = Vec::new();
        for i in 0..n {
            let mut block = vec![vec![CycNum::zero(); n]; n];
            for j in 0..n {
                for (k, c) in self.basis_product(j, i) {
                    block[*k][j] += c;
                }
                for (k, c) in self.basis_product(i, j) {
                    block[*k][j] -= c;
                }
            }
            rows.extend(block.into_iter().filter(|r| !linalg::is_zero_vec(r)));
        }
        if rows.is_empty() {
            return (0..n).map(|i| linalg::unit_vec(n, i)).collect();
        }
        Matrix::from_rows(rows).nullspace()
    }

    /// dim A / <[A, A]>, the two-sided ideal generated by commutators.
    pub fn abelianization_dim(&self) -> usize {
        let n = self.n;
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![CycNum::zero(); n];
                for (k, c) in self.basis_product(i, j) {
                    v[*k] += c;
                }
                for (k, c) in self.basis_product(j, i) {
                    v[*k] -= c;
                }
                if !linalg::is_zero_vec(&v) {
                    gens.push(v);
                }
            }
        }
        let mut basis = linalg::span_basis(&gens);
        loop {
            let mut cand = basis.clone();
            for v in &basis {
                for k in 0..n {
                    cand.push(self.mul_basis_left(k, v));
                    cand.push(self.mul_basis_right(v, k));
                }
            }
            let next = linalg::span_basis(&cand);
            if next.len() == basis.len() {
                break;
            }
            basis = next;
        }
        n - basis.len()
    }
}

/// Comultiplication tensor in sparse form: Δb_i = sum c b_j ⊗ b_k.
pub type SparseCoproduct = Vec<Vec<(usize, usize, CycNum)>>;

struct SparseCache {
    alg: AlgebraTensor,
    comult: SparseCoproduct,
}

/// A finite-dimensional Hopf algebra given by structure constants.
pub struct HopfAlgebra {
    dim: usize,
    basis: Vec<String>,
    mult: Vec<CycNum>,
    unit: Vec<CycNum>,
    comult: Vec<CycNum>,
    counit: Vec<CycNum>,
    antipode: Matrix,
    cache: OnceLock<Arc<SparseCache>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra {
            dim: self.dim,
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            cache: self.cache.clone(),
        }
    }
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra(dim {}, basis {:?})", self.dim, self.basis)
    }
}

fn idx3(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

impl HopfAlgebra {
    /// Assemble from all structure maps; checks only dimensions.
    pub fn new(
        basis: Vec<String>,
        mult: Vec<CycNum>,
        unit: Vec<CycNum>,
        comult: Vec<CycNum>,
        counit: Vec<CycNum>,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let n = basis.len();
        let ok = n > 0
            && mult.len() == n * n * n
            && comult.len() == n * n * n
            && unit.len() == n
            && counit.len() == n
            && antipode.rows() == n
            && antipode.cols() == n;
        if !ok {
            return Err(HopfError::DimensionMismatch(format!("inconsistent tensor sizes for dimension {n}")));
        }
        Ok(HopfAlgebra { dim: n, basis, mult, unit, comult, counit, antipode, cache: OnceLock::new() })
    }

    /// Assemble from the bialgebra maps and solve for the antipode.
    pub fn from_bialgebra(
        basis: Vec<String>,
        mult: Vec<CycNum>,
        unit: Vec<CycNum>,
        comult: Vec<CycNum>,
        counit: Vec<CycNum>,
    ) -> Result<Self, HopfError> {
        let n = basis.len();
        let mut h = Self::new(basis, mult, unit, comult, counit, Matrix::zeros(n, n))?;
        h.antipode = h.solve_antipode()?;
        Ok(h)
    }

    /// Like `from_bialgebra`, but keeps a zero antipode when none exists.
    pub fn from_bialgebra_unchecked(
        basis: Vec<String>,
        mult: Vec<CycNum>,
        unit: Vec<CycNum>,
        comult: Vec<CycNum>,
        counit: Vec<CycNum>,
    ) -> Result<Self, HopfError> {
        let n = basis.len();
        let mut h = Self::new(basis, mult, unit, comult, counit, Matrix::zeros(n, n))?;
        if let Ok(s) = h.solve_antipode() {
            h.antipode = s;
        }
        Ok(h)
    }

    fn cache(&self) -> &SparseCache {
        self.cache.get_or_init(|| {
            let n = self.dim;
            let alg = AlgebraTensor::from_dense(n, &self.mult, self.unit.clone());
            let comult = (0..n)
                .map(|i| {
                    let mut v = Vec::new();
                    for j in 0..n {
                        for k in 0..n {
                            let c = &self.comult[idx3(n, i, j, k)];
                            if !c.is_zero() {
                                v.push((j, k, c.clone()));
                            }
                        }
                    }
                    v
                })
                .collect();
            Arc::new(SparseCache { alg, comult })
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn set_basis_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim);
        self.basis = labels;
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &CycNum {
        &self.mult[idx3(self.dim, i, j, k)]
    }

    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &CycNum {
        &self.comult[idx3(self.dim, i, j, k)]
    }

    pub fn mult_tensor(&self) -> &[CycNum] {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &[CycNum] {
        &self.comult
    }

    pub fn unit(&self) -> &[CycNum] {
        &self.unit
    }

    pub fn counit(&self) -> &[CycNum] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn algebra(&self) -> &AlgebraTensor {
        &self.cache().alg
    }

    pub fn sparse_coproduct(&self) -> &SparseCoproduct {
        &self.cache().comult
    }

    /// The algebra H* with product dual to Δ.
    pub fn dual_algebra(&self) -> AlgebraTensor {
        let n = self.dim;
        let mut dense = vec![CycNum::zero(); n * n * n];
        for (k, terms) in self.sparse_coproduct().iter().enumerate() {
            for (i, j, c) in terms {
                dense[idx3(n, *i, *j, k)] = c.clone();
            }
        }
        AlgebraTensor::from_dense(n, &dense, self.counit.clone())
    }

    pub fn basis_vec(&self, i: usize) -> Vec<CycNum> {
        linalg::unit_vec(self.dim, i)
    }

    pub fn one(&self) -> Vec<CycNum> {
        self.unit.clone()
    }

    pub fn mul(&self, a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
        self.algebra().mul(a, b)
    }

    pub fn counit_of(&self, a: &[CycNum]) -> CycNum {
        linalg::dot(&self.counit, a)
    }

    pub fn antipode_of(&self, a: &[CycNum]) -> Vec<CycNum> {
        self.antipode.apply(a)
    }

    /// Δ(a) as a dense n^2 vector indexed j * n + k.
    pub fn coproduct(&self, a: &[CycNum]) -> Vec<CycNum> {
        let n = self.dim;
        let mut out = vec![CycNum::zero(); n * n];
        let cp = self.sparse_coproduct();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &cp[i] {
                out[j * n + k] += &(x * c);
            }
        }
        out
    }

    /// Product in H ⊗ H of dense n^2 vectors.
    pub fn tensor_mul(&self, x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
        let n = self.dim;
        let alg = self.algebra();
        let sx = sparse_of(x);
        let sy = sparse_of(y);
        let mut out = vec![CycNum::zero(); n * n];
        for (ab, cx) in &sx {
            let (a, b) = (ab / n, ab % n);
            for (cd, cy) in &sy {
                let (c, d) = (cd / n, cd % n);
                let left = alg.basis_product(a, c);
                if left.is_empty() {
                    continue;
                }
                let right = alg.basis_product(b, d);
                if right.is_empty() {
                    continue;
                }
                let coef = cx * cy;
                for (p, u) in left {
                    let cu = &coef * u;
                    for (q, v) in right {
                        out[p * n + q] += &(&cu * v);
                    }
                }
            }
        }
        out
    }

    /// Product in H ⊗ H ⊗ H of dense n^3 vectors.
    pub fn tensor3_mul(&self, x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
        let n = self.dim;
        let alg = self.algebra();
        let sx = sparse_of(x);
        let sy = sparse_of(y);
        let mut out = vec![CycNum::zero(); n * n * n];
        for (abc, cx) in &sx {
            let (a, b, c) = (abc / (n * n), (abc / n) % n, abc % n);
            for (def, cy) in &sy {
                let (d, e, f) = (def / (n * n), (def / n) % n, def % n);
                let p1 = alg.basis_product(a, d);
                let p2 = alg.basis_product(b, e);
                let p3 = alg.basis_product(c, f);
                if p1.is_empty() || p2.is_empty() || p3.is_empty() {
                    continue;
                }
                let coef = cx * cy;
                for (p, u) in p1 {
                    let cu = &coef * u;
                    for (q, v) in p2 {
                        let cuv = &cu * v;
                        for (r, w) in p3 {
                            out[(p * n + q) * n + r] += &(&cuv * w);
                        }
                    }
                }
            }
        }
        out
    }

    /// (Δ ⊗ id)(x) for x in H ⊗ H.
    pub fn delta_left(&self, x: &[CycNum]) -> Vec<CycNum> {
        let n = self.dim;
        let cp = self.sparse_coproduct();
        let mut out = vec![CycNum::zero(); n * n * n];
        for (ab, cx) in sparse_of(x) {
            let (a, b) = (ab / n, ab % n);
            for (j, k, c) in &cp[a] {
                out[(j * n + k) * n + b] += &(&cx * c);
            }
        }
        out
    }

    /// (id ⊗ Δ)(x) for x in H ⊗ H.
    pub fn delta_right(&self, x: &[CycNum]) -> Vec<CycNum> {
        let n = self.dim;
        let cp = self.sparse_coproduct();
        let mut out = vec![CycNum::zero(); n * n * n];
        for (ab, cx) in sparse_of(x) {
            let (a, b) = (ab / n, ab % n);
            for (j, k, c) in &cp[b] {
                out[(a * n + j) * n + k] += &(&cx * c);
            }
        }
        out
    }

    pub fn is_grouplike(&self, g: &[CycNum]) -> bool {
        let n = self.dim;
        if !self.counit_of(g).is_one() {
            return false;
        }
        let d = self.coproduct(g);
        (0..n).all(|j| (0..n).all(|k| d[j * n + k] == &g[j] * &g[k]))
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra().is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (j + 1..n).all(|k| self.comult_coeff(i, j, k) == self.comult_coeff(i, k, j))))
    }

    /// Antipode by convolution powers of id, falling back to a sparse linear solve.
    fn solve_antipode(&self) -> Result<Matrix, HopfError> {
        let n = self.dim;
        let cp = self.sparse_coproduct();
        let alg = self.algebra();
        let target: Vec<Vec<CycNum>> = (0..n).map(|i| linalg::vec_scale(&self.unit, &self.counit[i])).collect();
        // p[i] = id^{*k}(b_i)
        let mut prev: Vec<Vec<CycNum>> = (0..n).map(|i| linalg::unit_vec(n, i)).collect();
        for _k in 2..=64 {
            let next: Vec<Vec<CycNum>> = (0..n)
                .map(|i| {
                    let mut out = vec![CycNum::zero(); n];
                    for (j, kk, c) in &cp[i] {
                        let v = alg.mul_basis_right(&prev[*j], *kk);
                        for (l, x) in v.iter().enumerate() {
                            if !x.is_zero() {
                                out[l] += &(x * c);
                            }
                        }
                    }
                    out
                })
                .collect();
            if next == target {
                return Ok(Matrix::from_columns(&prev));
            }
            prev = next;
        }
        self.solve_antipode_linear()
    }

    fn solve_antipode_linear(&self) -> Result<Matrix, HopfError> {
        let n = self.dim;
        let cp = self.sparse_coproduct();
        let alg = self.algebra();
        // unknown S[m][j] at index m * n + j; equation (i, l)
        let mut sys = SparseSystem::new(n * n);
        for i in 0..n {
            let mut rows: Vec<BTreeMap<usize, CycNum>> = vec![BTreeMap::new(); n];
            for (j, k, c) in &cp[i] {
                for m in 0..n {
                    for (l, d) in alg.basis_product(m, *k) {
                        let e = rows[*l].entry(m * n + j).or_insert_with(CycNum::zero);
                        *e += &(c * d);
                    }
                }
            }
            for (l, row) in rows.into_iter().enumerate() {
                sys.add_equation(row, &self.counit[i] * &self.unit[l]);
            }
        }
        let x = sys.solve_unique().map_err(|e| HopfError::NoAntipode(e.to_string()))?;
        let mut s = Matrix::zeros(n, n);
        for m in 0..n {
            for j in 0..n {
                s.set(m, j, x[m * n + j].clone());
            }
        }
        Ok(s)
    }

    /// The seven axiom checks, each reporting the first failing basis index.
    pub fn verify_axioms(&self) -> Report {
        let n = self.dim;
        let alg = self.algebra();
        let cp = self.sparse_coproduct();
        let e = |i: usize| linalg::unit_vec(n, i);
        let basis_mul = |i: usize, j: usize| -> Vec<CycNum> {
            let mut v = vec![CycNum::zero(); n];
            for (k, c) in alg.basis_product(i, j) {
                v[*k] = c.clone();
            }
            v
        };

        let assoc = (0..n * n).into_par_iter().find_map_first(|ij| {
            let (i, j) = (ij / n, ij % n);
            let bij = basis_mul(i, j);
            for k in 0..n {
                let lhs = alg.mul_basis_right(&bij, k);
                let rhs = alg.mul_basis_left(i, &basis_mul(j, k));
                if lhs != rhs {
                    return Some(format!("(b{i} b{j}) b{k}"));
                }
            }
            None
        });

        let unit = (0..n).find_map(|j| {
            let ej = e(j);
            (alg.mul(&self.unit, &ej) != ej || alg.mul(&ej, &self.unit) != ej).then(|| format!("b{j}"))
        });

        let coassoc = (0..n).into_par_iter().find_map_first(|i| {
            let d = self.coproduct(&e(i));
            (self.delta_left(&d) != self.delta_right(&d)).then(|| format!("b{i}"))
        });

        let counit = (0..n).find_map(|i| {
            let mut left = vec![CycNum::zero(); n];
            let mut right = vec![CycNum::zero(); n];
            for (j, k, c) in &cp[i] {
                left[*k] += &(&self.counit[*j] * c);
                right[*j] += &(&self.counit[*k] * c);
            }
            let ei = e(i);
            (left != ei || right != ei).then(|| format!("b{i}"))
        });

        let deltas: Vec<Vec<CycNum>> = (0..n).map(|i| self.coproduct(&e(i))).collect();
        let delta_unit = {
            let one_one: Vec<CycNum> =
                (0..n * n).map(|jk| &self.unit[jk / n] * &self.unit[jk % n]).collect();
            (self.coproduct(&self.unit) != one_one).then(|| "Δ(1)".to_string())
        };
        let delta_mult = delta_unit.or_else(|| {
            (0..n * n).into_par_iter().find_map_first(|ij| {
                let (i, j) = (ij / n, ij % n);
                let lhs = self.coproduct(&basis_mul(i, j));
                let rhs = self.tensor_mul(&deltas[i], &deltas[j]);
                (lhs != rhs).then(|| format!("Δ(b{i} b{j})"))
            })
        });

        let eps_mult = (!self.counit_of(&self.unit).is_one()).then(|| "ε(1)".to_string()).or_else(|| {
            (0..n * n).find_map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let lhs = self.counit_of(&basis_mul(i, j));
                (lhs != &self.counit[i] * &self.counit[j]).then(|| format!("ε(b{i} b{j})"))
            })
        });

        let antipode = (0..n).find_map(|i| {
            let mut left = vec![CycNum::zero(); n];
            let mut right = vec![CycNum::zero(); n];
            for (j, k, c) in &cp[i] {
                let sj = self.antipode.column(*j);
                let sk = self.antipode.column(*k);
                let l = alg.mul_basis_right(&sj, *k);
                let r = alg.mul_basis_left(*j, &sk);
                for t in 0..n {
                    if !l[t].is_zero() {
                        left[t] += &(&l[t] * c);
                    }
                    if !r[t].is_zero() {
                        right[t] += &(&r[t] * c);
                    }
                }
            }
            let target = linalg::vec_scale(&self.unit, &self.counit[i]);
            (left != target || right != target).then(|| format!("b{i}"))
        });

        Report {
            checks: vec![
                CheckResult::from_first_failure("associativity", assoc),
                CheckResult::from_first_failure("unit", unit),
                CheckResult::from_first_failure("coassociativity", coassoc),
                CheckResult::from_first_failure("counit", counit),
                CheckResult::from_first_failure("comultiplication is an algebra map", delta_mult),
                CheckResult::from_first_failure("counit is an algebra map", eps_mult),
                CheckResult::from_first_failure("antipode", antipode),
            ],
        }
    }

    /// H* with dual basis.
    pub fn dual_hopf(&self) -> HopfAlgebra {
        let n = self.dim;
        let mut mult = vec![CycNum::zero(); n * n * n];
        let mut comult = vec![CycNum::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &self.comult[idx3(n, k, i, j)];
                    if !c.is_zero() {
                        mult[idx3(n, i, j, k)] = c.clone();
                    }
                    let m = &self.mult[idx3(n, j, k, i)];
                    if !m.is_zero() {
                        comult[idx3(n, i, j, k)] = m.clone();
                    }
                }
            }
        }
        let basis = self.basis.iter().map(|b| dual_label(b)).collect();
        HopfAlgebra::new(basis, mult, self.counit.clone(), comult, self.unit.clone(), self.antipode.transpose())
            .expect("dual dimensions")
    }

    /// A ⊗ B with basis (a, b) at index a * dim(B) + b.
    pub fn tensor_product(&self, other: &HopfAlgebra) -> HopfAlgebra {
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut mult = vec![CycNum::zero(); n * n * n];
        let mut comult = vec![CycNum::zero(); n * n * n];
        let (aa, ab) = (self.algebra(), other.algebra());
        for a in 0..na {
            for c in 0..na {
                for (p, u) in aa.basis_product(a, c) {
                    for b in 0..nb {
                        for d in 0..nb {
                            for (q, v) in ab.basis_product(b, d) {
                                mult[idx3(n, a * nb + b, c * nb + d, p * nb + q)] = u * v;
                            }
                        }
                    }
                }
            }
        }
        let (ca, cb) = (self.sparse_coproduct(), other.sparse_coproduct());
        for a in 0..na {
            for b in 0..nb {
                for (j1, k1, u) in &ca[a] {
                    for (j2, k2, v) in &cb[b] {
                        comult[idx3(n, a * nb + b, j1 * nb + j2, k1 * nb + k2)] = u * v;
                    }
                }
            }
        }
        let kron = |x: &[CycNum], y: &[CycNum]| -> Vec<CycNum> {
            x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
        };
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        HopfAlgebra::new(
            basis,
            mult,
            kron(&self.unit, &other.unit),
            comult,
            kron(&self.counit, &other.counit),
            self.antipode.kron(&other.antipode),
        )
        .expect("tensor dimensions")
    }

    /// Rewrite in the basis whose j-th element is column j of `p` (old coordinates).
    pub fn change_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<HopfAlgebra, HopfError> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n || labels.len() != n {
            return Err(HopfError::DimensionMismatch("change of basis".into()));
        }
        let pinv = p.inverse()?;
        let cols: Vec<Vec<CycNum>> = (0..n).map(|j| p.column(j)).collect();
        let mut mult = vec![CycNum::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = pinv.apply(&self.mul(&cols[i], &cols[j]));
                for (k, x) in prod.into_iter().enumerate() {
                    mult[idx3(n, i, j, k)] = x;
                }
            }
        }
        let mut comult = vec![CycNum::zero(); n * n * n];
        for (i, ci) in cols.iter().enumerate() {
            let d = self.coproduct(ci);
            let dm = Matrix::from_rows((0..n).map(|r| d[r * n..(r + 1) * n].to_vec()).collect());
            let t = pinv.mm(&dm).mm(&pinv.transpose());
            for j in 0..n {
                for k in 0..n {
                    comult[idx3(n, i, j, k)] = t.get(j, k).clone();
                }
            }
        }
        let counit = cols.iter().map(|c| self.counit_of(c)).collect();
        let unit = pinv.apply(&self.unit);
        let antipode = pinv.mm(&self.antipode).mm(p);
        HopfAlgebra::new(labels, mult, unit, comult, counit, antipode)
    }

    /// Nondegeneracy of the trace form of the algebra (semisimplicity in characteristic 0).
    pub fn trace_form_certificate(&self) -> bool {
        self.algebra().is_semisimple()
    }

    /// Upper bound for |G(H)|: dim of the abelianization of the dual algebra.
    pub fn find_grouplikes_count_bound(&self) -> Result<usize, HopfError> {
        let dual = self.dual_algebra();
        if !dual.is_semisimple() {
            return Err(HopfError::Precondition("dual algebra is not semisimple".into()));
        }
        Ok(dual.abelianization_dim())
    }

    /// Verify a claimed complete set of grouplikes and return its multiplication table.
    pub fn verify_grouplike_set(&self, claimed: &[Vec<CycNum>]) -> Result<GroupTable, HopfError> {
        let n = self.dim;
        for (idx, g) in claimed.iter().enumerate() {
            if g.len() != n || !self.is_grouplike(g) {
                return Err(HopfError::NotGrouplike(idx));
            }
            if self.mul(&self.antipode_of(g), g) != self.unit {
                return Err(HopfError::NotGrouplike(idx));
            }
        }
        if linalg::rank_of(claimed) != claimed.len() {
            return Err(HopfError::Dependent);
        }
        let index: HashMap<&Vec<CycNum>, usize> = claimed.iter().enumerate().map(|(i, g)| (g, i)).collect();
        if !index.contains_key(&self.unit) {
            return Err(HopfError::NotClosed("identity".into()));
        }
        let mut table = vec![vec![0; claimed.len()]; claimed.len()];
        for (a, ga) in claimed.iter().enumerate() {
            for (b, gb) in claimed.iter().enumerate() {
                let p = self.mul(ga, gb);
                table[a][b] = *index.get(&p).ok_or_else(|| HopfError::NotClosed("multiplication".into()))?;
            }
            if !index.contains_key(&self.antipode_of(ga)) {
                return Err(HopfError::NotClosed("inverse".into()));
            }
        }
        let bound = self.find_grouplikes_count_bound()?;
        if claimed.len() != bound {
            return Err(HopfError::IncompleteSet { found: claimed.len(), bound });
        }
        Ok(GroupTable::new(table)?)
    }

    /// Close a list of grouplikes under multiplication.
    pub fn generate_grouplikes(&self, gens: &[Vec<CycNum>]) -> Result<Vec<Vec<CycNum>>, HopfError> {
        let mut elems = vec![self.unit.clone()];
        let mut seen: HashMap<Vec<CycNum>, ()> = HashMap::new();
        seen.insert(self.unit.clone(), ());
        let mut idx = 0;
        while idx < elems.len() {
            for g in gens {
                let p = self.mul(&elems[idx], g);
                if !seen.contains_key(&p) {
                    if elems.len() >= 4 * self.dim {
                        return Err(HopfError::NotClosed("generated set exceeds any grouplike bound".into()));
                    }
                    seen.insert(p.clone(), ());
                    elems.push(p);
                }
            }
            idx += 1;
        }
        Ok(elems)
    }

    pub fn is_central(&self, z: &[CycNum]) -> bool {
        self.algebra().is_central(z)
    }

    /// H/(g-1)H for a central grouplike involution g, with the projection.
    pub fn quotient_by_central_grouplike(&self, g: &[CycNum]) -> Result<(HopfAlgebra, HopfMorphism), HopfError> {
        let n = self.dim;
        if !self.is_grouplike(g) || *g == self.unit[..] || self.mul(g, g) != self.unit {
            return Err(HopfError::NotInvolution);
        }
        if !self.is_central(g) {
            return Err(HopfError::NotCentral);
        }
        let gm1 = linalg::vec_sub(g, &self.unit);
        let gens: Vec<Vec<CycNum>> = (0..n).map(|i| self.algebra().mul_basis_right(&gm1, i)).collect();
        let ideal = Matrix::from_rows(gens);
        let (r, pivots) = ideal.rref();
        let survivors: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let m = survivors.len();
        let pos: HashMap<usize, usize> = survivors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut proj = Matrix::zeros(m, n);
        for (i, &c) in survivors.iter().enumerate() {
            proj.set(i, c, CycNum::one());
        }
        for (row, &p) in pivots.iter().enumerate() {
            for &c in &survivors {
                let x = r.get(row, c);
                if !x.is_zero() {
                    proj.set(pos[&c], p, -x);
                }
            }
        }
        let lift = |i: usize| linalg::unit_vec(n, survivors[i]);
        let mut mult = vec![CycNum::zero(); m * m * m];
        for i in 0..m {
            for j in 0..m {
                let p = proj.apply(&self.mul(&lift(i), &lift(j)));
                for (k, x) in p.into_iter().enumerate() {
                    mult[idx3(m, i, j, k)] = x;
                }
            }
        }
        let mut comult = vec![CycNum::zero(); m * m * m];
        for i in 0..m {
            let d = self.coproduct(&lift(i));
            let dm = Matrix::from_rows((0..n).map(|r| d[r * n..(r + 1) * n].to_vec()).collect());
            let t = proj.mm(&dm).mm(&proj.transpose());
            for j in 0..m {
                for k in 0..m {
                    comult[idx3(m, i, j, k)] = t.get(j, k).clone();
                }
            }
        }
        let counit = (0..m).map(|i| self.counit[survivors[i]].clone()).collect();
        let unit = proj.apply(&self.unit);
        let lift_m = Matrix::from_columns(&(0..m).map(lift).collect::<Vec<_>>());
        let antipode = proj.mm(&self.antipode).mm(&lift_m);
        let basis = survivors.iter().map(|&c| format!("[{}]", self.basis[c])).collect();
        let q = HopfAlgebra::new(basis, mult, unit, comult, counit, antipode)?;
        Ok((q, HopfMorphism { matrix: proj }))
    }

    /// Closure of a subspace under product, coproduct, unit, antipode, and its commutativity.
    pub fn subspace_report(&self, span: &[Vec<CycNum>]) -> Report {
        let n = self.dim;
        let basis = linalg::span_basis(span);
        let r = basis.len();
        let contains = |v: &[CycNum]| -> bool {
            let mut all = basis.clone();
            all.push(v.to_vec());
            linalg::rank_of(&all) == r
        };
        let mut unit_ok = contains(&self.unit);
        let mut mult_ok = None;
        let mut comm_ok = None;
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let p = self.mul(x, y);
                if mult_ok.is_none() && !contains(&p) {
                    mult_ok = Some(format!("product of span vectors {a},{b}"));
                }
                if comm_ok.is_none() && p != self.mul(y, x) {
                    comm_ok = Some(format!("span vectors {a},{b} do not commute"));
                }
            }
        }
        let mut delta_ok = None;
        for (a, x) in basis.iter().enumerate() {
            let d = self.coproduct(x);
            let rows: Vec<Vec<CycNum>> = (0..n).map(|j| d[j * n..(j + 1) * n].to_vec()).collect();
            let cols: Vec<Vec<CycNum>> = (0..n).map(|k| (0..n).map(|j| d[j * n + k].clone()).collect()).collect();
            if !rows.iter().chain(cols.iter()).all(|v| linalg::is_zero_vec(v) || contains(v)) {
                delta_ok = Some(format!("coproduct of span vector {a}"));
                break;
            }
        }
        let mut s_ok = None;
        for (a, x) in basis.iter().enumerate() {
            if !contains(&self.antipode_of(x)) {
                s_ok = Some(format!("antipode of span vector {a}"));
                break;
            }
        }
        if r == 0 {
            unit_ok = false;
        }
        Report {
            checks: vec![
                if unit_ok { CheckResult::pass("contains unit") } else { CheckResult::fail("contains unit", "1 not in span".into()) },
                CheckResult::from_first_failure("closed under product", mult_ok),
                CheckResult::from_first_failure("closed under coproduct", delta_ok),
                CheckResult::from_first_failure("closed under antipode", s_ok),
                CheckResult::from_first_failure("commutative", comm_ok),
            ],
        }
    }

    pub fn to_json(&self) -> HopfJson {
        let n = self.dim;
        HopfJson {
            dim: n,
            basis: self.basis.clone(),
            mult: (0..n).map(|i| (0..n).map(|j| self.mult[idx3(n, i, j, 0)..idx3(n, i, j, 0) + n].to_vec()).collect()).collect(),
            comult: (0..n).map(|i| (0..n).map(|j| self.comult[idx3(n, i, j, 0)..idx3(n, i, j, 0) + n].to_vec()).collect()).collect(),
            counit: self.counit.clone(),
            unit: self.unit.clone(),
            antipode: (0..n).map(|j| self.antipode.column(j)).collect(),
        }
    }

    pub fn from_json(j: &HopfJson) -> Result<HopfAlgebra, HopfError> {
        let n = j.dim;
        let bad = || HopfError::Json("inconsistent dimensions".into());
        if j.mult.len() != n || j.comult.len() != n || j.antipode.len() != n {
            return Err(bad());
        }
        let flat = |t: &Vec<Vec<Vec<CycNum>>>| -> Result<Vec<CycNum>, HopfError> {
            let mut out = Vec::with_capacity(n * n * n);
            for a in t {
                if a.len() != n {
                    return Err(bad());
                }
                for b in a {
                    if b.len() != n {
                        return Err(bad());
                    }
                    out.extend(b.iter().cloned());
                }
            }
            Ok(out)
        };
        if j.antipode.iter().any(|c| c.len() != n) {
            return Err(bad());
        }
        HopfAlgebra::new(
            j.basis.clone(),
            flat(&j.mult)?,
            j.unit.clone(),
            flat(&j.comult)?,
            j.counit.clone(),
            Matrix::from_columns(&j.antipode),
        )
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<HopfAlgebra, HopfError> {
        let j: HopfJson = serde_json::from_str(s).map_err(|e| HopfError::Json(e.to_string()))?;
        Self::from_json(&j)
    }
}

fn dual_label(b: &str) -> String {
    match b.strip_suffix('*').and_then(|s| s.strip_prefix('(')).and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("({b})*"),
    }
}

/// On-disk form of a Hopf algebra. `mult[i][j]` and `comult[i][j]` are coordinate
/// vectors; `antipode[j]` holds the coordinates of S(b_j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<CycNum>>>,
    pub comult: Vec<Vec<Vec<CycNum>>>,
    pub counit: Vec<CycNum>,
    pub unit: Vec<CycNum>,
    pub antipode: Vec<Vec<CycNum>>,
}

/// A linear map between Hopf algebras; column j is the image of source basis element j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfMorphism {
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn identity(n: usize) -> Self {
        HopfMorphism { matrix: Matrix::identity(n) }
    }

    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        self.matrix.apply(v)
    }

    /// Exact checks of every structure map, plus bijectivity when `iso` is claimed.
    pub fn verify(&self, src: &HopfAlgebra, tgt: &HopfAlgebra, iso: bool) -> Report {
        let (ns, nt) = (src.dim(), tgt.dim());
        if self.matrix.rows() != nt || self.matrix.cols() != ns {
            return Report { checks: vec![CheckResult::fail("dimensions", format!("{}x{}", self.matrix.rows(), self.matrix.cols()))] };
        }
        let img: Vec<Vec<CycNum>> = (0..ns).map(|j| self.matrix.column(j)).collect();
        let mult = (0..ns * ns).into_par_iter().find_map_first(|ij| {
            let (i, j) = (ij / ns, ij % ns);
            let lhs = self.apply(&src.mul(&src.basis_vec(i), &src.basis_vec(j)));
            (lhs != tgt.mul(&img[i], &img[j])).then(|| format!("b{i} b{j}"))
        });
        let unit = (self.apply(src.unit()) != tgt.unit()).then(|| "1".to_string());
        let delta = (0..ns).into_par_iter().find_map_first(|i| {
            let lhs = tgt.coproduct(&img[i]);
            let d = src.coproduct(&src.basis_vec(i));
            let dm = Matrix::from_rows((0..ns).map(|r| d[r * ns..(r + 1) * ns].to_vec()).collect());
            let t = self.matrix.mm(&dm).mm(&self.matrix.transpose());
            let rhs: Vec<CycNum> = t.data().to_vec();
            (lhs != rhs).then(|| format!("b{i}"))
        });
        let counit = (0..ns).find_map(|i| (tgt.counit_of(&img[i]) != src.counit()[i]).then(|| format!("b{i}")));
        let antipode = (0..ns).find_map(|i| {
            let lhs = self.apply(&src.antipode_of(&src.basis_vec(i)));
            (lhs != tgt.antipode_of(&img[i])).then(|| format!("b{i}"))
        });
        let mut checks = vec![
            CheckResult::from_first_failure("multiplication", mult),
            CheckResult::from_first_failure("unit", unit),
            CheckResult::from_first_failure("comultiplication", delta),
            CheckResult::from_first_failure("counit", counit),
            CheckResult::from_first_failure("antipode", antipode),
        ];
        if iso {
            let rank = self.matrix.rank();
            checks.push(if ns == nt && rank == ns {
                CheckResult::pass("bijective")
            } else {
                CheckResult::fail("bijective", format!("rank {rank}, dims {ns} -> {nt}"))
            });
        }
        Report { checks }
    }
}

/// Extend an assignment on generators multiplicatively to all of `h`.
///
/// `gens` are pairs (element of h, image); `mul` multiplies images. Words are
/// built breadth-first by right multiplication until they span h, then the image
/// of each basis element is read off by inverting the word matrix.
pub fn extend_multiplicatively<T, M, L>(
    h: &AlgebraTensor,
    gens: &[(Vec<CycNum>, T)],
    one: T,
    mul: M,
    lincomb: L,
) -> Result<Vec<T>, HopfError>
where
    T: Clone,
    M: Fn(&T, &T) -> T,
    L: Fn(&[(CycNum, &T)]) -> T,
{
    let n = h.dim();
    let mut words: Vec<(Vec<CycNum>, T)> = vec![(h.unit().to_vec(), one)];
    let mut basis_rows: Vec<Vec<CycNum>> = vec![h.unit().to_vec()];
    let mut chosen: Vec<usize> = vec![0];
    let mut idx = 0;
    while idx < words.len() && chosen.len() < n {
        let (wv, wt) = words[idx].clone();
        for (gv, gt) in gens {
            let v = h.mul(&wv, gv);
            let t = mul(&wt, gt);
            let mut trial = basis_rows.clone();
            trial.push(v.clone());
            if linalg::rank_of(&trial) > basis_rows.len() {
                basis_rows.push(v.clone());
                chosen.push(words.len());
                words.push((v, t));
                if chosen.len() == n {
                    break;
                }
            }
        }
        idx += 1;
    }
    if chosen.len() < n {
        return Err(HopfError::Precondition("generators do not generate the algebra".into()));
    }
    // basis element b_k = sum_w inv[w][k] word_w
    let w = Matrix::from_columns(&basis_rows);
    let inv = w.inverse()?;
    Ok((0..n)
        .map(|k| {
            let terms: Vec<(CycNum, &T)> = (0..n)
                .filter(|&r| !inv.get(r, k).is_zero())
                .map(|r| (inv.get(r, k).clone(), &words[chosen[r]].1))
                .collect();
            lincomb(&terms)
        })
        .collect())
}

pub fn group_label_of_table(t: &GroupTable) -> Result<crate::groups::GroupLabel, HopfError> {
    Ok(t.identify()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::c;

    fn kc2() -> HopfAlgebra {
        // basis 1, g
        let n = 2;
        let mut mult = vec![CycNum::zero(); 8];
        let mut comult = vec![CycNum::zero(); 8];
        for i in 0..2 {
            for j in 0..2 {
                mult[idx3(n, i, j, (i + j) % 2)] = c(1);
            }
            comult[idx3(n, i, i, i)] = c(1);
        }
        HopfAlgebra::from_bialgebra(vec!["1".into(), "g".into()], mult, vec![c(1), c(0)], comult, vec![c(1), c(1)])
            .unwrap()
    }

    #[test]
    fn kc2_axioms_and_invariants() {
        let h = kc2();
        assert!(h.verify_axioms().all_passed());
        assert!(h.trace_form_certificate());
        assert_eq!(h.algebra().trace_form().det().unwrap(), c(4));
        assert_eq!(h.find_grouplikes_count_bound().unwrap(), 2);
        assert!(h.is_commutative() && h.is_cocommutative());
        let d = h.dual_hopf();
        assert!(d.verify_axioms().all_passed());
        assert_eq!(d.dual_hopf(), h);
        assert_eq!(d.dual_hopf().basis_labels(), h.basis_labels());
    }

    #[test]
    fn truncated_polynomial_is_not_semisimple() {
        // k[x]/(x^2), basis 1, x
        let n = 2;
        let mut mult = vec![CycNum::zero(); 8];
        mult[idx3(n, 0, 0, 0)] = c(1);
        mult[idx3(n, 0, 1, 1)] = c(1);
        mult[idx3(n, 1, 0, 1)] = c(1);
        let a = AlgebraTensor::from_dense(2, &mult, vec![c(1), c(0)]);
        assert!(!a.is_semisimple());
        assert_eq!(a.abelianization_dim(), 2);
    }

    #[test]
    fn tensor_square_has_four_grouplikes() {
        let h = kc2().tensor_product(&kc2());
        assert!(h.verify_axioms().all_passed());
        let gl: Vec<Vec<CycNum>> = (0..4).map(|i| linalg::unit_vec(4, i)).collect();
        let t = h.verify_grouplike_set(&gl).unwrap();
        assert_eq!(t.identify().unwrap(), crate::groups::GroupLabel::C2xC2);
    }

    #[test]
    fn json_roundtrip() {
        let h = kc2();
        let s = h.to_json_string();
        assert!(s.find("\"dim\"").unwrap() < s.find("\"basis\"").unwrap());
        assert_eq!(HopfAlgebra::from_json_str(&s).unwrap(), h);
    }

    #[test]
    fn incomplete_grouplike_set_is_rejected() {
        let h = kc2();
        let err = h.verify_grouplike_set(&[linalg::unit_vec(2, 0)]).unwrap_err();
        assert_eq!(err, HopfError::IncompleteSet { found: 1, bound: 2 });
        assert_eq!(h.verify_grouplike_set(&[vec![c(1), c(1)]]).unwrap_err(), HopfError::NotGrouplike(0));
    }

    #[test]
    fn quotient_of_kc2() {
        let h = kc2();
        let (q, p) = h.quotient_by_central_grouplike(&linalg::unit_vec(2, 1)).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.verify_axioms().all_passed());
        assert!(p.verify(&h, &q, false).all_passed());
        assert_eq!(h.quotient_by_central_grouplike(h.unit()).unwrap_err(), HopfError::NotInvolution);
    }
}
