//! Exact arithmetic in Q(z) with z a primitive 16th root of unity, z^8 = -1.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Degree of Q(z16) over Q.
pub const DEG: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse cyclotomic number {0:?}")]
    Parse(String),
}

/// c0 + c1 z + ... + c7 z^7, always reduced modulo z^8 + 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    coeffs: [BigRational; DEG],
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { coeffs: Default::default() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = BigRational::from_integer(BigInt::from(n));
        c
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = BigRational::new(BigInt::from(n), BigInt::from(d));
        c
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_coeffs(coeffs: [BigRational; DEG]) -> Self {
        CycNum { coeffs }
    }

    /// Build from small integer numerators over a common denominator.
    pub fn from_small(nums: [i64; DEG], den: i64) -> Self {
        let d = BigInt::from(den);
        let coeffs = nums.map(|n| BigRational::new(BigInt::from(n), d.clone()));
        CycNum { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational; DEG] {
        &self.coeffs
    }

    /// z^(k mod 16).
    pub fn root_of_unity(k: i64) -> Self {
        let k = k.rem_euclid(16) as usize;
        let mut c = Self::zero();
        if k < DEG {
            c.coeffs[k] = BigRational::one();
        } else {
            c.coeffs[k - DEG] = -BigRational::one();
        }
        c
    }

    /// The imaginary unit z^4.
    pub fn i() -> Self {
        Self::root_of_unity(4)
    }

    /// The primitive 8th root z^2.
    pub fn omega() -> Self {
        Self::root_of_unity(2)
    }

    /// Power of i, i^k.
    pub fn i_pow(k: i64) -> Self {
        Self::root_of_unity(4 * k.rem_euclid(4))
    }

    /// (-1)^k.
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            Self::from_int(-1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Rational part if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Exponent k with self = z^k, if self is a 16th root of unity.
    pub fn root_exponent(&self) -> Option<i64> {
        let nz: Vec<usize> = (0..DEG).filter(|&k| !self.coeffs[k].is_zero()).collect();
        if nz.len() != 1 {
            return None;
        }
        let k = nz[0];
        let c = &self.coeffs[k];
        if c.is_one() {
            Some(k as i64)
        } else if (-c).is_one() {
            Some(k as i64 + 8)
        } else {
            None
        }
    }

    /// Field automorphism z -> z^(-1), complex conjugation under the standard embedding.
    pub fn conj(&self) -> Self {
        self.galois(15)
    }

    /// Galois automorphism z -> z^k for odd k.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(2) == 1, "galois exponent must be odd");
        let mut out = Self::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.add_scaled_root(c, (j as i64) * k);
        }
        out
    }

    fn add_scaled_root(&mut self, c: &BigRational, k: i64) {
        let k = k.rem_euclid(16) as usize;
        if k < DEG {
            self.coeffs[k] += c;
        } else {
            self.coeffs[k - DEG] -= c;
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= r;
        }
        out
    }

    /// Multiplication-by-self matrix over Q: column j holds self * z^j.
    fn mult_matrix(&self) -> [[BigRational; DEG]; DEG] {
        let mut m: [[BigRational; DEG]; DEG] = Default::default();
        for j in 0..DEG {
            let p = self * &Self::root_of_unity(j as i64);
            for i in 0..DEG {
                m[i][j] = p.coeffs[i].clone();
            }
        }
        m
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // Solve M x = e_0 by Gauss-Jordan over Q.
        let mut m = self.mult_matrix();
        let mut rhs: [BigRational; DEG] = Default::default();
        rhs[0] = BigRational::one();
        for col in 0..DEG {
            let piv = (col..DEG)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(CycloError::DivisionByZero)?;
            m.swap(piv, col);
            rhs.swap(piv, col);
            let inv = m[col][col].recip();
            for k in col..DEG {
                m[col][k] *= &inv;
            }
            rhs[col] *= &inv;
            for r in 0..DEG {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for k in col..DEG {
                    let t = &m[col][k] * &f;
                    m[r][k] -= t;
                }
                let t = &rhs[col] * &f;
                rhs[r] -= t;
            }
        }
        Ok(CycNum { coeffs: rhs })
    }

    pub fn div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i64) -> Result<Self, CycloError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order when self is a root of unity.
    pub fn root_order(&self) -> Option<u32> {
        let k = self.root_exponent()?;
        Some(16 / gcd(k as u32, 16))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(mut self, rhs: CycNum) -> CycNum {
        self += &rhs;
        self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(mut self, rhs: CycNum) -> CycNum {
        self -= &rhs;
        self
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let mut out = CycNum::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                if i + j < DEG {
                    out.coeffs[i + j] += p;
                } else {
                    out.coeffs[i + j - DEG] -= p;
                }
            }
        }
        out
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in self.coeffs.iter_mut() {
            if !c.is_zero() {
                *c = -c.clone();
            }
        }
        self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "z16".to_string(),
                _ => format!("z16^{k}"),
            };
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn parse_term(t: &str) -> Option<(BigRational, i64)> {
    let t = t.trim();
    if let Some(pos) = t.find("z16") {
        let (coef, var) = t.split_at(pos);
        let coef = coef.trim().trim_end_matches('*').trim();
        let c = if coef.is_empty() { BigRational::one() } else { parse_rational(coef)? };
        let rest = &var[3..];
        let k = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.trim().parse().ok()?
        };
        Some((c, k))
    } else {
        Some((parse_rational(t)?, 0))
    }
}

impl FromStr for CycNum {
    type Err = CycloError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CycloError::Parse(s.to_string());
        let src = s.trim();
        if src.is_empty() {
            return Err(err());
        }
        // Split into signed terms at top-level + and -.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in src.chars() {
            if (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.trim().is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut out = CycNum::zero();
        for (neg, t) in terms {
            let (c, k) = parse_term(&t).ok_or_else(err)?;
            let c = if neg { -c } else { c };
            out.add_scaled_root(&c, k);
        }
        Ok(out)
    }
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand constructors used throughout the catalog data.
pub fn c(n: i64) -> CycNum {
    CycNum::from_int(n)
}

pub fn q(n: i64, d: i64) -> CycNum {
    CycNum::from_ratio(n, d)
}

pub fn zeta(k: i64) -> CycNum {
    CycNum::root_of_unity(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn z_times_z7_is_minus_one() {
        assert_eq!(&zeta(1) * &zeta(7), c(-1));
    }

    #[test]
    fn i_squared() {
        let i = CycNum::i();
        assert_eq!(&i * &i, c(-1));
    }

    #[test]
    fn half_one_plus_i_times_half_one_minus_i() {
        let i = CycNum::i();
        let a = (&c(1) + &i).scale(&BigRational::new(1.into(), 2.into()));
        let b = (&c(1) - &i).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(&a * &b, q(1, 2));
    }

    #[test]
    fn inverses() {
        assert_eq!(c(1).inv().unwrap(), c(1));
        assert_eq!(zeta(1).inv().unwrap(), -zeta(7));
        let i = CycNum::i();
        let expect = (&c(1) - &i).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!((&c(1) + &i).inv().unwrap(), expect);
        assert_eq!(CycNum::zero().inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(zeta(4), CycNum::i());
        let w = CycNum::omega();
        assert_eq!(w.pow(8).unwrap(), c(1));
        assert_eq!(w.pow(4).unwrap(), c(-1));
        assert_eq!(zeta(16), c(1));
        assert_eq!(zeta(0), c(1));
        assert_eq!(zeta(-1), zeta(15));
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycNum::i().conj(), -CycNum::i());
        assert_eq!(q(3, 7).conj(), q(3, 7));
        assert_eq!(CycNum::omega().conj(), CycNum::omega().pow(7).unwrap());
    }

    #[test]
    fn text_format() {
        let x = &q(1, 2) - &CycNum::i().scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(x.to_string(), "1/2 - 1/2*z16^4");
        assert_eq!(zeta(1).to_string(), "z16");
        assert_eq!((-zeta(3)).to_string(), "-z16^3");
        assert_eq!(CycNum::zero().to_string(), "0");
        assert_eq!("1/2 - 1/2*z16^4".parse::<CycNum>().unwrap(), x);
        assert_eq!("-z16 + 3*z16^2".parse::<CycNum>().unwrap(), &(-zeta(1)) + &c(3).mul(zeta(2)));
        assert_eq!("z16^12".parse::<CycNum>().unwrap(), zeta(12));
        assert!("z17".parse::<CycNum>().is_err());
    }

    #[test]
    fn orders() {
        for k in 0..16i64 {
            let expect = 16 / gcd(k as u32, 16);
            assert_eq!(zeta(k).root_order(), Some(expect));
            assert_eq!(zeta(k).pow(expect as i64).unwrap(), c(1));
        }
    }

    fn small() -> impl Strategy<Value = CycNum> {
        (prop::array::uniform8(-4i64..=4), 1i64..=3).prop_map(|(n, d)| CycNum::from_small(n, d))
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(a in small()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inv().unwrap(), c(1));
        }

        #[test]
        fn ring_axioms(a in small(), b in small(), d in small()) {
            prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn text_roundtrip(a in small()) {
            prop_assert_eq!(a.to_string().parse::<CycNum>().unwrap(), a);
        }

        #[test]
        fn galois_is_ring_map(a in small(), b in small(), k in 0i64..8) {
            let k = 2 * k + 1;
            prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        }
    }
}
