//! Dense and sparse exact linear algebra over Q(z16).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::CycNum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system is underdetermined ({free} free unknowns)")]
    Underdetermined { free: usize },
}

/// Dense row-major matrix; serialized as a list of rows.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<CycNum>>", into = "Vec<Vec<CycNum>>")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl TryFrom<Vec<Vec<CycNum>>> for Matrix {
    type Error = LinalgError;

    fn try_from(rows: Vec<Vec<CycNum>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix::from_rows(rows))
    }
}

impl From<Matrix> for Vec<Vec<CycNum>> {
    fn from(m: Matrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![CycNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, CycNum::one());
        }
        m
    }

    pub fn scalar(n: usize, s: &CycNum) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| CycNum::from_int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<CycNum>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn diag(entries: &[CycNum]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        self.data[r * self.cols + c] = v;
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut CycNum {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[CycNum] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<CycNum> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[CycNum] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let x = self.get(i, j);
                if i == j { x.is_one() } else { x.is_zero() }
            }))
    }

    /// Some(s) when the matrix equals s times the identity.
    pub fn as_scalar(&self) -> Option<CycNum> {
        if !self.is_square() {
            return None;
        }
        let s = if self.rows == 0 { CycNum::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                let ok = if i == j { *x == s } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    *out.get_mut(i, j) += &p;
                }
            }
        }
        Ok(out)
    }

    /// Product of square matrices of equal size; panics on mismatch.
    pub fn mm(&self, other: &Matrix) -> Matrix {
        self.mul(other).expect("matrix dimensions")
    }

    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add dims");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sub dims");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &CycNum) -> Matrix {
        let data = self.data.iter().map(|a| if a.is_zero() { a.clone() } else { a * s }).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add_scaled(&mut self, other: &Matrix, s: &CycNum) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add dims");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(b * s);
            }
        }
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Kronecker product, (A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l].
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    /// Direct sum (block diagonal).
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        let data = rows.into_iter().flatten().collect();
        (Matrix { rows: self.rows, cols: self.cols, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        echelon_rank(&mut rows, self.cols)
    }

    /// Basis of {v : A v = 0}.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let (r, pivots) = self.rref();
        nullspace_from_rref(&r, &pivots)
    }

    /// Solve A X = B; returns a particular solution with free unknowns set to zero.
    pub fn solve_any(&self, b: &Matrix) -> Result<Matrix, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::DimensionMismatch(format!("solve rows {} vs {}", self.rows, b.rows)));
        }
        let n = self.cols;
        let mut rows: Vec<Vec<CycNum>> = (0..self.rows)
            .map(|i| self.row(i).iter().chain(b.row(i).iter()).cloned().collect())
            .collect();
        let pivots = rref_rows(&mut rows, n);
        for row in rows.iter().skip(pivots.len()) {
            if row[n..].iter().any(|x| !x.is_zero()) {
                return Err(LinalgError::Inconsistent);
            }
        }
        let mut x = Matrix::zeros(n, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, rows[r][n + j].clone());
            }
        }
        Ok(x)
    }

    /// Solve A X = B requiring a unique solution.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix, LinalgError> {
        let rank = self.rank();
        if rank < self.cols {
            return Err(LinalgError::Underdetermined { free: self.cols - rank });
        }
        self.solve_any(b)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch("inverse of non-square matrix".into()));
        }
        self.solve(&Matrix::identity(self.rows)).map_err(|e| match e {
            LinalgError::Underdetermined { .. } => LinalgError::Singular,
            other => other,
        })
    }

    pub fn det(&self) -> Result<CycNum, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch("det of non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut det = CycNum::one();
        for col in 0..n {
            let Some(p) = pick_pivot(&rows, col, col) else {
                return Ok(CycNum::zero());
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pv = rows[col][col].clone();
            det = &det * &pv;
            let inv = pv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = &rows[r][col] * &inv;
                let (top, bot) = rows.split_at_mut(r);
                sub_scaled(&mut bot[0], &top[col], &f, col);
            }
        }
        Ok(det)
    }
}

/// Pivot row choice: the nonzero candidate with the fewest nonzero entries.
fn pick_pivot(rows: &[Vec<CycNum>], col: usize, start: usize) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in rows.iter().enumerate().skip(start) {
        if row[col].is_zero() {
            continue;
        }
        let weight = row.iter().filter(|x| !x.is_zero()).count();
        if best.is_none_or(|(_, w)| weight < w) {
            best = Some((r, weight));
        }
    }
    best.map(|(r, _)| r)
}

fn sub_scaled(target: &mut [CycNum], src: &[CycNum], f: &CycNum, from: usize) {
    for k in from..target.len() {
        if src[k].is_zero() {
            continue;
        }
        let t = &src[k] * f;
        target[k] -= &t;
    }
}

/// In-place RREF over the first `ncols` columns (extra columns are carried along).
fn rref_rows(rows: &mut [Vec<CycNum>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = pick_pivot(rows, col, r) else { continue };
        rows.swap(p, r);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        let width = rows[r].len();
        for k in col..width {
            if !rows[r][k].is_zero() {
                rows[r][k] = &rows[r][k] * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            sub_scaled(row, &pivot_row, &f, col);
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn echelon_rank(rows: &mut [Vec<CycNum>], ncols: usize) -> usize {
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = pick_pivot(rows, col, r) else { continue };
        rows.swap(p, r);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            sub_scaled(row, &pivot_row, &f, col);
        }
        r += 1;
    }
    r
}

fn nullspace_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<CycNum>> {
    let n = r.cols();
    let is_pivot: Vec<bool> = (0..n).map(|c| pivots.contains(&c)).collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![CycNum::zero(); n];
        v[free] = CycNum::one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = r.get(row, free);
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of a list of vectors.
pub fn rank_of(vectors: &[Vec<CycNum>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].len();
    let mut rows = vectors.to_vec();
    echelon_rank(&mut rows, n)
}

/// Row-reduced basis of the span of the given vectors.
pub fn span_basis(vectors: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let n = vectors[0].len();
    let mut rows = vectors.to_vec();
    let pivots = rref_rows(&mut rows, n);
    rows.truncate(pivots.len());
    rows
}

pub fn dot(a: &[CycNum], b: &[CycNum]) -> CycNum {
    let mut acc = CycNum::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn vec_add(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[CycNum], s: &CycNum) -> Vec<CycNum> {
    a.iter().map(|x| if x.is_zero() { x.clone() } else { x * s }).collect()
}

pub fn is_zero_vec(a: &[CycNum]) -> bool {
    a.iter().all(CycNum::is_zero)
}

pub fn unit_vec(n: usize, i: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(); n];
    v[i] = CycNum::one();
    v
}

/// Incremental sparse Gaussian elimination for large sparse systems.
///
/// Equations are rows over `nvars` unknowns plus one right-hand side.
#[derive(Default)]
pub struct SparseSystem {
    nvars: usize,
    // pivot column -> normalized row (pivot coefficient 1), rhs
    pivots: HashMap<usize, (BTreeMap<usize, CycNum>, CycNum)>,
    inconsistent: bool,
}

impl SparseSystem {
    pub fn new(nvars: usize) -> Self {
        SparseSystem { nvars, pivots: HashMap::new(), inconsistent: false }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Add the equation sum_j row[j] x_j = rhs.
    pub fn add_equation(&mut self, row: BTreeMap<usize, CycNum>, rhs: CycNum) {
        let mut row: BTreeMap<usize, CycNum> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let mut rhs = rhs;
        // Reduce against existing pivots until no pivot column remains.
        loop {
            let hit = row.keys().find(|k| self.pivots.contains_key(k)).copied();
            let Some(col) = hit else { break };
            let f = row.remove(&col).expect("present");
            let (prow, prhs) = &self.pivots[&col];
            for (k, v) in prow {
                if *k == col {
                    continue;
                }
                let t = v * &f;
                let e = row.entry(*k).or_insert_with(CycNum::zero);
                *e -= &t;
                if e.is_zero() {
                    row.remove(k);
                }
            }
            rhs -= &(prhs * &f);
        }
        if row.is_empty() {
            if !rhs.is_zero() {
                self.inconsistent = true;
            }
            return;
        }
        let (&col, pv) = row.iter().next().expect("nonempty");
        let inv = pv.inv().expect("nonzero");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        rhs = &rhs * &inv;
        // Eliminate this column from existing pivot rows to keep them reduced.
        let new_row = row;
        for (prow, prhs) in self.pivots.values_mut() {
            let Some(f) = prow.remove(&col) else { continue };
            for (k, v) in &new_row {
                if *k == col {
                    continue;
                }
                let t = v * &f;
                let e = prow.entry(*k).or_insert_with(CycNum::zero);
                *e -= &t;
                if e.is_zero() {
                    prow.remove(k);
                }
            }
            *prhs -= &(&rhs * &f);
        }
        let mut stored = new_row;
        stored.insert(col, CycNum::one());
        self.pivots.insert(col, (stored, rhs));
    }

    /// The unique solution, failing if inconsistent or underdetermined.
    pub fn solve_unique(&self) -> Result<Vec<CycNum>, LinalgError> {
        if self.inconsistent {
            return Err(LinalgError::Inconsistent);
        }
        if self.pivots.len() < self.nvars {
            return Err(LinalgError::Underdetermined { free: self.nvars - self.pivots.len() });
        }
        let mut x = vec![CycNum::zero(); self.nvars];
        for (&col, (row, rhs)) in &self.pivots {
            debug_assert_eq!(row.len(), 1);
            x[col] = rhs.clone();
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{c, zeta};
    use proptest::prelude::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&m.apply(&ns[0])));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_rows(vec![vec![c(1), zeta(1)], vec![zeta(3), c(2)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mm(&inv).is_identity());
        let d = m.det().unwrap();
        assert_eq!(d, &c(2) - &(&zeta(1) * &zeta(3)));
        let sing = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
        assert!(sing.det().unwrap().is_zero());
    }

    #[test]
    fn solve_systems() {
        let a = Matrix::from_int_rows(&[&[2, 1], &[1, 3]]);
        let b = Matrix::from_int_rows(&[&[3], &[4]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mm(&x), b);
        let a2 = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        let b2 = Matrix::from_int_rows(&[&[1], &[2]]);
        assert_eq!(a2.solve_any(&b2), Err(LinalgError::Inconsistent));
    }

    #[test]
    fn kron_trace() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = Matrix::identity(3);
        let k = a.kron(&b);
        assert_eq!(k.trace(), c(15));
        assert_eq!(k.rows(), 6);
    }

    #[test]
    fn sparse_matches_dense() {
        let a = Matrix::from_rows(vec![
            vec![c(1), c(0), zeta(2)],
            vec![c(0), c(3), c(1)],
            vec![zeta(4), c(1), c(0)],
        ]);
        let b = vec![c(1), c(2), c(3)];
        let mut sys = SparseSystem::new(3);
        for i in 0..3 {
            let row = (0..3).map(|j| (j, a.get(i, j).clone())).collect();
            sys.add_equation(row, b[i].clone());
        }
        let x = sys.solve_unique().unwrap();
        assert_eq!(a.apply(&x), b);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        prop::collection::vec(-2i64..=2, 9).prop_map(|v| {
            Matrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| c(x)).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.nullspace().len(), 3);
            for v in m.nullspace() {
                prop_assert!(is_zero_vec(&m.apply(&v)));
            }
        }

        #[test]
        fn det_multiplicative(a in small_matrix(), b in small_matrix()) {
            prop_assert_eq!(a.mm(&b).det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        }
    }
}
