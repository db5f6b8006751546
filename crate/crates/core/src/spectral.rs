//! Eigenvalues in Q(ζ16) of exact matrices, located numerically in the four complex
//! embeddings and then reconstructed and verified exactly.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cyclo::{CycNum, DEG};
use crate::linalg::{LinalgError, Matrix};

/// Exact polynomial over Q(ζ16), lowest degree first.
type Poly = Vec<CycNum>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(CycNum::is_zero) {
        p.pop();
    }
    p
}

/// det(xI − M) by Faddeev–LeVerrier.
pub fn characteristic_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut coeffs = vec![CycNum::zero(); n + 1];
    coeffs[n] = CycNum::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
        let shifted = mk.add(&Matrix::scalar(n, &coeffs[n - k + 1]));
        mk = m.mm(&shifted);
        coeffs[n - k] = &(-mk.trace()) * &CycNum::from_ratio(1, k as i64);
    }
    coeffs
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * &CycNum::from_int(k as i64)).collect())
}

fn div_rem(a: &Poly, b: &Poly) -> Result<(Poly, Poly), LinalgError> {
    let b = trim(b.clone());
    let lead = b.last().cloned().unwrap_or_else(CycNum::zero).inv().map_err(|_| LinalgError::Singular)?;
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return Ok((vec![CycNum::zero()], r));
    }
    let mut q = vec![CycNum::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") * &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bc);
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
        if r.is_empty() {
            r.push(CycNum::zero());
        }
    }
    Ok((q, r))
}

fn is_zero_poly(p: &Poly) -> bool {
    p.iter().all(CycNum::is_zero)
}

fn gcd(a: &Poly, b: &Poly) -> Result<Poly, LinalgError> {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !is_zero_poly(&y) {
        let (_, r) = div_rem(&x, &y)?;
        x = y;
        y = r;
    }
    Ok(x)
}

fn eval(p: &Poly, x: &CycNum) -> CycNum {
    p.iter().rev().fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
}

/// The value of z under ζ ↦ exp(2πi j/16).
fn embed(z: &CycNum, j: i64) -> Complex64 {
    z.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let ang = 2.0 * std::f64::consts::PI * (j * k as i64) as f64 / 16.0;
            Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), ang)
        })
        .sum()
}

/// Roots of a monic squarefree complex polynomial by Durand–Kerner, polished by Newton steps.
fn numeric_roots(p: &[Complex64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    let lead = p[n];
    let monic: Vec<Complex64> = p.iter().map(|c| c / lead).collect();
    let ev = |x: Complex64| monic.iter().rev().fold(Complex64::zero(), |acc, c| acc * x + c);
    let dev = |x: Complex64| {
        monic.iter().enumerate().skip(1).rev().fold(Complex64::zero(), |acc, (k, c)| acc * x + c * k as f64)
    };
    let radius = 1.0 + monic.iter().take(n).map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius * 0.9, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = ev(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let d = dev(*r);
            if d.norm() > 0.0 {
                *r -= ev(*r) / d;
            }
        }
    }
    z
}

/// Best rational approximation with denominator at most `max_den`, if within `tol`.
fn rationalize(x: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = a as i64;
        let (h2, k2) = (ai.checked_mul(h1)?.checked_add(h0)?, ai.checked_mul(k1)?.checked_add(k0)?);
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() < tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = y - a;
        if frac.abs() < 1e-300 {
            break;
        }
        y = 1.0 / frac;
    }
    ((x - h1 as f64 / k1 as f64).abs() < tol && k1 != 0).then(|| BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

/// Solve the real 8×8 system taking coefficients to their values at ζ, ζ³, ζ⁵, ζ⁷.
fn coefficient_solver() -> Vec<Vec<f64>> {
    let js = [1i64, 3, 5, 7];
    let mut a = vec![vec![0.0; 2 * DEG]; DEG];
    for (r, &j) in js.iter().enumerate() {
        for k in 0..DEG {
            let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j * k as i64) as f64 / 16.0);
            a[2 * r][k] = w.re;
            a[2 * r + 1][k] = w.im;
        }
    }
    // augment with identity and reduce
    for (i, row) in a.iter_mut().enumerate() {
        row[DEG + i] = 1.0;
    }
    for c in 0..DEG {
        let p = (c..DEG).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).expect("rows");
        a.swap(c, p);
        let d = a[c][c];
        for v in a[c].iter_mut() {
            *v /= d;
        }
        for r in 0..DEG {
            if r != c {
                let f = a[r][c];
                if f != 0.0 {
                    let pivot = a[c].clone();
                    for (v, pv) in a[r].iter_mut().zip(pivot) {
                        *v -= f * pv;
                    }
                }
            }
        }
    }
    a.into_iter().map(|row| row[DEG..].to_vec()).collect()
}

/// Distinct eigenvalues of `m` lying in Q(ζ16). Fails unless every root of the characteristic
/// polynomial is found in the field.
pub fn exact_eigenvalues(m: &Matrix) -> Result<Vec<CycNum>, LinalgError> {
    let p = characteristic_polynomial(m);
    let g = gcd(&p, &derivative(&p))?;
    let (q, _) = div_rem(&p, &g)?;
    let q = trim(q);
    let deg = q.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let js = [1i64, 3, 5, 7];
    let roots: Vec<Vec<Complex64>> =
        js.iter().map(|&j| numeric_roots(&q.iter().map(|c| embed(c, j)).collect::<Vec<_>>())).collect();
    let inv = coefficient_solver();
    let mut found: Vec<CycNum> = Vec::new();
    for r1 in &roots[0] {
        'search: for r3 in &roots[1] {
            for r5 in &roots[2] {
                for r7 in &roots[3] {
                    let v = [r1.re, r1.im, r3.re, r3.im, r5.re, r5.im, r7.re, r7.im];
                    let mut coeffs: [BigRational; DEG] = Default::default();
                    let mut ok = true;
                    for (k, c) in coeffs.iter_mut().enumerate() {
                        let x: f64 = inv[k].iter().zip(&v).map(|(a, b)| a * b).sum();
                        match rationalize(x, 1 << 14, 1e-8) {
                            Some(r) => *c = r,
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let lam = CycNum::from_coeffs(coeffs);
                    if eval(&q, &lam).is_zero() {
                        if !found.contains(&lam) {
                            found.push(lam);
                        }
                        break 'search;
                    }
                }
            }
        }
    }
    if found.len() == deg {
        Ok(found)
    } else {
        Err(LinalgError::DimensionMismatch(format!("{} of {deg} eigenvalues lie in the field", found.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_rotation() {
        // [[0,-1],[1,0]] has x² + 1
        let m = Matrix::from_rows(vec![vec![CycNum::zero(), -CycNum::one()], vec![CycNum::one(), CycNum::zero()]]);
        assert_eq!(characteristic_polynomial(&m), vec![CycNum::one(), CycNum::zero(), CycNum::one()]);
    }

    #[test]
    fn recovers_irregular_eigenvalues() {
        let a = &CycNum::from_ratio(3, 8) + &CycNum::root_of_unity(3);
        let b = &CycNum::from_ratio(-1, 4) * &(&CycNum::root_of_unity(1) + &CycNum::root_of_unity(6));
        let d = Matrix::diag(&[a.clone(), b.clone(), a.clone(), CycNum::zero()]);
        // conjugate by a unipotent matrix to hide the diagonal
        let mut p = Matrix::identity(4);
        p.set(0, 1, CycNum::from_int(2));
        p.set(2, 3, CycNum::i());
        p.set(1, 3, CycNum::from_ratio(1, 3));
        let m = p.mm(&d).mm(&p.inverse().unwrap());
        let mut ev = exact_eigenvalues(&m).unwrap();
        assert_eq!(ev.len(), 3);
        for x in [&a, &b, &CycNum::zero()] {
            let pos = ev.iter().position(|y| y == x).expect("eigenvalue");
            ev.remove(pos);
        }
    }

    #[test]
    fn irrational_eigenvalues_are_reported() {
        // x² - 3 has no root in Q(ζ16)
        let m = Matrix::from_rows(vec![vec![CycNum::zero(), CycNum::from_int(3)], vec![CycNum::one(), CycNum::zero()]]);
        assert!(exact_eigenvalues(&m).is_err());
    }
}
