//! Fusion rings: Grothendieck rings of semisimple Hopf algebras, their identities,
//! isomorphism search, hereditary subrings and the seven reference structures.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::CycNum;
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::rep::{decompose_module_oracle, IrrepSet, RepError, Representation};

/// Basic elements with degrees, structure constants m(z, x•y) = table[x][y][z], and involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub unit: usize,
    pub involution: Vec<usize>,
    pub table: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasicJson {
    pub label: String,
    pub degree: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FusionJson {
    pub basics: Vec<BasicJson>,
    pub unit: usize,
    pub involution: Vec<usize>,
    pub table: Vec<Vec<Vec<u32>>>,
}

impl FusionRing {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self, z: usize, x: usize, y: usize) -> u32 {
        self.table[x][y][z]
    }

    /// Σ deg(x) [x], the class of the regular representation.
    pub fn marked_element(&self) -> Vec<usize> {
        self.degrees.clone()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.rank();
        (0..n).all(|x| (0..n).all(|y| self.table[x][y] == self.table[y][x]))
    }

    /// Indices of degree-one basics, i.e. the characters.
    pub fn characters(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.degrees[i] == 1).collect()
    }

    /// Single basic z with x•y = z, if the product is a basic.
    pub fn product_basic(&self, x: usize, y: usize) -> Option<usize> {
        let row = &self.table[x][y];
        let nz: Vec<usize> = (0..self.rank()).filter(|&z| row[z] != 0).collect();
        match nz.as_slice() {
            [z] if row[*z] == 1 => Some(*z),
            _ => None,
        }
    }

    /// All violations of the multiplicity identities, the involution axioms and associativity.
    pub fn identity_violations(&self) -> Vec<String> {
        let n = self.rank();
        let s = &self.involution;
        let mut out = Vec::new();
        for x in 0..n {
            if s[s[x]] != x {
                out.push(format!("involution not of order 2 at {}", self.labels[x]));
            }
            if self.degrees[s[x]] != self.degrees[x] {
                out.push(format!("marked element not fixed at {}", self.labels[x]));
            }
            for y in 0..n {
                let deg: usize = (0..n).map(|z| self.m(z, x, y) as usize * self.degrees[z]).sum();
                if deg != self.degrees[x] * self.degrees[y] {
                    out.push(format!("degree identity fails for {}•{}", self.labels[x], self.labels[y]));
                }
                let unit_mult = self.m(self.unit, x, s[y]);
                if unit_mult != u32::from(x == y) {
                    out.push(format!("m(1, {}•{}*) = {unit_mult}", self.labels[x], self.labels[y]));
                }
                for z in 0..n {
                    if self.m(z, x, y) != self.m(s[x], y, s[z]) {
                        out.push(format!("Frobenius reciprocity fails at ({}, {}, {})", self.labels[x], self.labels[y], self.labels[z]));
                    }
                    if self.m(z, x, y) != self.m(s[z], s[y], s[x]) {
                        out.push(format!("involution not anti-multiplicative at ({}, {}, {})", self.labels[x], self.labels[y], self.labels[z]));
                    }
                }
            }
        }
        if self.table[self.unit].iter().enumerate().any(|(y, row)| (0..n).any(|z| row[z] != u32::from(y == z))) {
            out.push("unit is not a left identity".into());
        }
        for x in 0..n {
            for y in 0..n {
                for w in 0..n {
                    for t in 0..n {
                        let l: u32 = (0..n).map(|z| self.m(z, x, y) * self.m(t, z, w)).sum();
                        let r: u32 = (0..n).map(|z| self.m(z, y, w) * self.m(t, x, z)).sum();
                        if l != r {
                            out.push(format!("not associative at ({}, {}, {})", self.labels[x], self.labels[y], self.labels[w]));
                        }
                    }
                }
            }
        }
        out
    }

    /// Dimension of the center of K₀ ⊗ Q.
    pub fn center_rank(&self) -> usize {
        let n = self.rank();
        let mut rows = Vec::new();
        for y in 0..n {
            for z in 0..n {
                rows.push(
                    (0..n)
                        .map(|x| CycNum::from_int(self.m(z, x, y) as i64 - self.m(z, y, x) as i64))
                        .collect::<Vec<_>>(),
                );
            }
        }
        n - Matrix::from_rows(rows).rank()
    }

    /// All subsets containing the unit, closed under the involution and under products,
    /// as (members, Σ deg²).
    pub fn hereditary_subrings(&self) -> Vec<(Vec<usize>, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << self.unit) == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let inside = |z: usize| mask & (1 << z) != 0;
            let closed = members.iter().all(|&x| inside(self.involution[x]))
                && members
                    .iter()
                    .all(|&x| members.iter().all(|&y| (0..n).all(|z| self.m(z, x, y) == 0 || inside(z))));
            if closed {
                let dim = members.iter().map(|&i| self.degrees[i] * self.degrees[i]).sum();
                out.push((members, dim));
            }
        }
        out
    }

    /// Decomposition of x•y as "a + 2b + ...".
    pub fn product_string(&self, x: usize, y: usize) -> String {
        let parts: Vec<String> = (0..self.rank())
            .filter(|&z| self.m(z, x, y) > 0)
            .map(|z| match self.m(z, x, y) {
                1 => self.labels[z].clone(),
                k => format!("{k}{}", self.labels[z]),
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self) -> FusionJson {
        FusionJson {
            basics: self
                .labels
                .iter()
                .zip(&self.degrees)
                .map(|(l, d)| BasicJson { label: l.clone(), degree: *d })
                .collect(),
            unit: self.unit,
            involution: self.involution.clone(),
            table: self.table.clone(),
        }
    }

    /// Markdown table of all products and the involution.
    pub fn to_markdown(&self) -> String {
        let n = self.rank();
        let mut s = String::from("| • |");
        for y in 0..n {
            s.push_str(&format!(" {} |", self.labels[y]));
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(n));
        s.push('\n');
        for x in 0..n {
            s.push_str(&format!("| **{}** |", self.labels[x]));
            for y in 0..n {
                s.push_str(&format!(" {} |", self.product_string(x, y)));
            }
            s.push('\n');
        }
        s.push_str("\nInvolution: ");
        let inv: Vec<String> =
            (0..n).map(|x| format!("{}* = {}", self.labels[x], self.labels[self.involution[x]])).collect();
        s.push_str(&inv.join(", "));
        s.push('\n');
        s
    }
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        for x in 0..n {
            for y in x..n {
                writeln!(f, "{} • {} = {}", self.labels[x], self.labels[y], self.product_string(x, y))?;
            }
        }
        let inv: Vec<String> =
            (0..n).map(|x| format!("{}* = {}", self.labels[x], self.labels[self.involution[x]])).collect();
        writeln!(f, "{}", inv.join(", "))
    }
}

/// A degree-, unit- and involution-preserving bijection φ with m_B(φz, φx•φy) = m_A(z, x•y).
pub fn fusion_isomorphic(a: &FusionRing, b: &FusionRing) -> Option<Vec<usize>> {
    let n = a.rank();
    if n != b.rank() {
        return None;
    }
    let mut da = a.degrees.clone();
    let mut db = b.degrees.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    // unit first, then by degree
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (x != a.unit, a.degrees[x], x));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn consistent(a: &FusionRing, b: &FusionRing, map: &[usize], x: usize) -> bool {
    let n = a.rank();
    let ax = a.involution[x];
    if map[ax] != usize::MAX && b.involution[map[x]] != map[ax] {
        return false;
    }
    let assigned: Vec<usize> = (0..n).filter(|&i| map[i] != usize::MAX).collect();
    for &u in &assigned {
        for &v in &assigned {
            for &w in &assigned {
                if u != x && v != x && w != x {
                    continue;
                }
                if a.m(w, u, v) != b.m(map[w], map[u], map[v]) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(a: &FusionRing, b: &FusionRing, order: &[usize], k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for t in 0..b.rank() {
        if used[t] || b.degrees[t] != a.degrees[x] || ((x == a.unit) != (t == b.unit)) {
            continue;
        }
        map[x] = t;
        used[t] = true;
        if consistent(a, b, map, x) && search(a, b, order, k + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[t] = false;
    }
    false
}

/// Outcome of computing K₀ from an irrep set.
#[derive(Debug, Clone)]
pub struct FusionComputation {
    pub ring: FusionRing,
    /// Number of product pairs on which the trace and intertwiner methods agree.
    pub oracle_agreements: usize,
    pub pairs: usize,
}

/// K₀(H) from a complete irrep set: x•y decomposed by idempotent traces, cross-checked
/// by intertwiner dimensions; involution from dual representations.
pub fn fusion_coefficients(h: &HopfAlgebra, set: &IrrepSet) -> Result<FusionComputation, RepError> {
    let n = set.irreps.len();
    let unit = set.identify(&Representation::trivial(h))?;
    let mut table = vec![vec![vec![0u32; n]; n]; n];
    let mut agree = 0;
    for x in 0..n {
        for y in 0..n {
            let rho = Representation::tensor(h, &set.irreps[x], &set.irreps[y]);
            let m = set.multiplicities(&rho)?;
            if decompose_module_oracle(&rho, &set.irreps) == m {
                agree += 1;
            }
            for z in 0..n {
                table[x][y][z] = m[z] as u32;
            }
        }
    }
    let involution =
        set.irreps.iter().map(|r| set.identify(&r.dual(h))).collect::<Result<Vec<_>, _>>()?;
    Ok(FusionComputation {
        ring: FusionRing { labels: set.labels(), degrees: set.degrees(), unit, involution, table },
        oracle_agreements: agree,
        pairs: n * n,
    })
}

/// The seven reference structures, with characters and 2-dim basics as curated data.
pub mod reference {
    use super::FusionRing;

    pub const LABELS: [&str; 7] = ["K5.1", "K5.2", "K5.3", "K5.4", "K5.5", "K6.3", "K6.4"];

    struct CharGroup {
        labels: Vec<String>,
        mul: Box<dyn Fn(usize, usize) -> usize>,
        inv: Box<dyn Fn(usize) -> usize>,
    }

    fn word(parts: &[(&str, usize)]) -> String {
        let s: String = parts
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    /// χ^a φ^b ψ^c at index a + 2b + 4c.
    fn c2_cubed() -> CharGroup {
        CharGroup {
            labels: (0..8).map(|i| word(&[("χ", i & 1), ("φ", (i >> 1) & 1), ("ψ", (i >> 2) & 1)])).collect(),
            mul: Box::new(|a, b| a ^ b),
            inv: Box::new(|a| a),
        }
    }

    /// χ^a φ^b at index a + 4b, χ of order 4.
    fn c4_c2() -> CharGroup {
        CharGroup {
            labels: (0..8).map(|i| word(&[("χ", i % 4), ("φ", i / 4)])).collect(),
            mul: Box::new(|a, b| (a % 4 + b % 4) % 4 + 4 * ((a / 4 + b / 4) % 2)),
            inv: Box::new(|a| (4 - a % 4) % 4 + 4 * (a / 4)),
        }
    }

    /// χ^a φ^b at index a + 4b with φχ = χ⁻¹φ.
    fn d8() -> CharGroup {
        let mul = |x: usize, y: usize| {
            let (a, b, c, d) = (x % 4, x / 4, y % 4, y / 4);
            let p = if b == 0 { a + c } else { a + 4 - c } % 4;
            p + 4 * ((b + d) % 2)
        };
        CharGroup {
            labels: (0..8).map(|i| word(&[("χ", i % 4), ("φ", i / 4)])).collect(),
            mul: Box::new(mul),
            inv: Box::new(move |x| (0..8).find(|&y| mul(x, y) == 0).unwrap_or(0)),
        }
    }

    /// χ^a φ^b at index a + 2b.
    fn c2_c2() -> CharGroup {
        CharGroup {
            labels: (0..4).map(|i| word(&[("χ", i & 1), ("φ", i >> 1)])).collect(),
            mul: Box::new(|a, b| a ^ b),
            inv: Box::new(|a| a),
        }
    }

    /// Assemble a ring: characters, π's with χ•π_k = π_{swap(χ,k)} = π_k•χ, π-products
    /// as lists of basic indices (characters first, then π's), and π duals.
    fn assemble(
        g: CharGroup,
        npi: usize,
        swap: impl Fn(usize, usize) -> usize,
        pipi: impl Fn(usize, usize) -> Vec<usize>,
        pi_dual: &[usize],
    ) -> FusionRing {
        let nc = g.labels.len();
        let n = nc + npi;
        let mut table = vec![vec![vec![0u32; n]; n]; n];
        for a in 0..nc {
            for b in 0..nc {
                table[a][b][(g.mul)(a, b)] = 1;
            }
            for k in 0..npi {
                table[a][nc + k][nc + swap(a, k)] = 1;
                table[nc + k][a][nc + swap(a, k)] = 1;
            }
        }
        for k in 0..npi {
            for l in 0..npi {
                for z in pipi(k, l) {
                    table[nc + k][nc + l][z] += 1;
                }
            }
        }
        let mut labels = g.labels.clone();
        labels.extend((1..=npi).map(|k| format!("π{k}")));
        let mut degrees = vec![1; nc];
        degrees.extend(std::iter::repeat_n(2, npi));
        let mut involution: Vec<usize> = (0..nc).map(|a| (g.inv)(a)).collect();
        involution.extend(pi_dual.iter().map(|&k| nc + k));
        FusionRing { labels, degrees, unit: 0, involution, table }
    }

    /// Characters fixing the π's for |G(H*)| = 8: those with even χ-exponent.
    fn fixers8(g: &CharGroup, fix: impl Fn(usize) -> bool) -> (Vec<usize>, Vec<usize>) {
        (0..g.labels.len()).partition(|&a| fix(a))
    }

    fn eight(g: CharGroup, fix: impl Fn(usize) -> bool + Copy, square_is_fixers: bool, dual_swap: bool) -> FusionRing {
        let (fixers, movers) = fixers8(&g, fix);
        let (sq, cross) = if square_is_fixers { (fixers, movers) } else { (movers, fixers) };
        assemble(
            g,
            2,
            move |a, k| if fix(a) { k } else { 1 - k },
            move |k, l| if k == l { sq.clone() } else { cross.clone() },
            if dual_swap { &[1, 0] } else { &[0, 1] },
        )
    }

    fn four(pi13: Vec<usize>, pi11: Vec<usize>, dual: &[usize]) -> FusionRing {
        // basics: 1, χ, φ, χφ, π1, π2, π3 at 0..7; χ swaps π1 and π3
        assemble(
            c2_c2(),
            3,
            |a, k| if a & 1 == 1 && k != 1 { 2 - k } else { k },
            move |k, l| match (k, l) {
                (1, 1) => vec![0, 1, 2, 3],
                (0, 1) | (1, 0) | (1, 2) | (2, 1) => vec![4, 6],
                (0, 2) | (2, 0) => pi13.clone(),
                _ => pi11.clone(),
            },
            dual,
        )
    }

    /// Reference ring by label.
    pub fn ring(label: &str) -> Option<FusionRing> {
        let odd_chi = |a: usize| a & 1 == 0;
        let even_pow = |a: usize| a.is_multiple_of(2);
        Some(match label {
            "K5.1" => eight(c2_cubed(), odd_chi, true, false),
            "K5.2" => eight(c2_cubed(), odd_chi, false, true),
            "K5.3" => eight(c4_c2(), even_pow, true, false),
            "K5.4" => eight(c4_c2(), even_pow, false, true),
            "K5.5" => eight(d8(), even_pow, true, false),
            // π1•π3 = χ + χφ + π2, π1² = π3² = 1 + φ + π2
            "K6.3" => four(vec![1, 3, 5], vec![0, 2, 5], &[0, 1, 2]),
            // π1•π3 = 1 + φ + π2, π1² = π3² = χ + χφ + π2
            "K6.4" => four(vec![0, 2, 5], vec![1, 3, 5], &[2, 1, 0]),
            _ => return None,
        })
    }

    pub fn all() -> Vec<(&'static str, FusionRing)> {
        LABELS.iter().map(|l| (*l, ring(l).expect("reference label"))).collect()
    }
}

/// Label of the reference structure isomorphic to `r`, if any.
pub fn identify_reference(r: &FusionRing) -> Option<&'static str> {
    reference::all().into_iter().find(|(_, refr)| fusion_isomorphic(r, refr).is_some()).map(|(l, _)| l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn references_satisfy_identities_and_are_distinct() {
        let all = reference::all();
        for (l, r) in &all {
            assert!(r.identity_violations().is_empty(), "{l}: {:?}", r.identity_violations());
        }
        for i in 0..all.len() {
            for j in 0..all.len() {
                assert_eq!(fusion_isomorphic(&all[i].1, &all[j].1).is_some(), i == j, "{} {}", all[i].0, all[j].0);
            }
        }
    }

    #[test]
    fn only_k55_is_noncommutative_with_center_seven() {
        for (l, r) in reference::all() {
            assert_eq!(r.is_commutative(), l != "K5.5");
            let expect = if l == "K5.5" { 7 } else { r.rank() };
            assert_eq!(r.center_rank(), expect, "{l}");
        }
    }

    #[test]
    fn k55_has_three_proper_hereditary_subrings_of_dimension_eight() {
        let r = reference::ring("K5.5").unwrap();
        let eights = r.hereditary_subrings().into_iter().filter(|(_, d)| *d == 8).count();
        assert_eq!(eights, 3);
        for (l, r) in reference::all() {
            assert!(r.hereditary_subrings().iter().all(|(_, d)| *d != 6), "{l}");
        }
    }

    #[test]
    fn broken_ring_is_reported() {
        let mut r = reference::ring("K5.3").unwrap();
        r.involution.swap(8, 9);
        assert!(!r.identity_violations().is_empty());
    }
}
