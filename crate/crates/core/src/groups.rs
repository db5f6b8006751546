//! Finite groups as explicit multiplication tables, with the small-group catalog.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unsupported order {0} for identification")]
    UnsupportedOrder(usize),
    #[error("presentation relation {0} fails in group {1}")]
    RelationFails(String, String),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
}

/// Isomorphism class labels for groups of order at most 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum GroupLabel {
    C1,
    C2,
    C4,
    C2xC2,
    C8,
    C4xC2,
    C2xC2xC2,
    D8,
    Q8,
}

impl GroupLabel {
    pub fn is_cyclic(self) -> bool {
        matches!(self, GroupLabel::C1 | GroupLabel::C2 | GroupLabel::C4 | GroupLabel::C8)
    }

    pub fn order(self) -> usize {
        match self {
            GroupLabel::C1 => 1,
            GroupLabel::C2 => 2,
            GroupLabel::C4 | GroupLabel::C2xC2 => 4,
            _ => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupLabel::C1 => "C1",
            GroupLabel::C2 => "C2",
            GroupLabel::C4 => "C4",
            GroupLabel::C2xC2 => "C2xC2",
            GroupLabel::C8 => "C8",
            GroupLabel::C4xC2 => "C4xC2",
            GroupLabel::C2xC2xC2 => "C2xC2xC2",
            GroupLabel::D8 => "D8",
            GroupLabel::Q8 => "Q8",
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A verified group multiplication table on {0, .., n-1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(GroupError::NotAGroup("table is not square or has out-of-range entries".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(GroupError::NotAGroup(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(GroupTable { table, identity })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("inverse exists")
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn involution_count(&self) -> usize {
        (0..self.order()).filter(|&a| self.element_order(a) == 2).count()
    }

    pub fn max_element_order(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).max().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.max_element_order() == self.order()
    }

    /// Isomorphism class among the groups of order at most 8 that occur here.
    pub fn identify(&self) -> Result<GroupLabel, GroupError> {
        let n = self.order();
        let m = self.max_element_order();
        let label = match (n, self.is_abelian()) {
            (1, _) => GroupLabel::C1,
            (2, _) => GroupLabel::C2,
            (4, _) if m == 4 => GroupLabel::C4,
            (4, _) => GroupLabel::C2xC2,
            (8, true) => match m {
                8 => GroupLabel::C8,
                4 => GroupLabel::C4xC2,
                _ => GroupLabel::C2xC2xC2,
            },
            (8, false) => match self.involution_count() {
                5 => GroupLabel::D8,
                1 => GroupLabel::Q8,
                k => return Err(GroupError::NotAGroup(format!("order 8 nonabelian with {k} involutions"))),
            },
            _ => return Err(GroupError::UnsupportedOrder(n)),
        };
        Ok(label)
    }

    /// Smallest subgroup containing the given elements.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut elems = vec![self.identity];
        let mut idx = 0;
        while idx < elems.len() {
            let x = elems[idx];
            for &g in gens {
                let y = self.mul(x, g);
                if !elems.contains(&y) {
                    elems.push(y);
                }
            }
            idx += 1;
        }
        elems.sort_unstable();
        elems
    }
}

/// A word in the generators: pairs (generator index, exponent).
pub type Word = Vec<(usize, i64)>;

/// A finite group with labelled elements and a generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: GroupTable,
    pub generators: Vec<usize>,
    pub generator_names: Vec<String>,
}

impl FiniteGroup {
    /// Build from an explicit element list and a closed multiplication rule.
    pub fn from_rule<T, M, L>(
        name: &str,
        elems: Vec<T>,
        mul: M,
        label: L,
        generators: &[T],
        generator_names: &[&str],
    ) -> Result<Self, GroupError>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let index: HashMap<T, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != elems.len() {
            return Err(GroupError::NotAGroup(format!("{name}: duplicate elements")));
        }
        let mut table = vec![vec![0; elems.len()]; elems.len()];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let p = mul(a, b);
                table[i][j] = *index
                    .get(&p)
                    .ok_or_else(|| GroupError::NotAGroup(format!("{name}: product not closed")))?;
            }
        }
        let table = GroupTable::new(table)?;
        let generators = generators
            .iter()
            .map(|g| index.get(g).copied().ok_or_else(|| GroupError::NotAGroup(format!("{name}: bad generator"))))
            .collect::<Result<Vec<_>, _>>()?;
        let g = FiniteGroup {
            name: name.to_string(),
            labels: elems.iter().map(label).collect(),
            table,
            generators,
            generator_names: generator_names.iter().map(|s| s.to_string()).collect(),
        };
        if g.table.generated(&g.generators).len() != g.order() {
            return Err(GroupError::NotAGroup(format!("{name}: generators do not generate")));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.table.inv(a)
    }

    pub fn identity(&self) -> usize {
        self.table.identity()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn eval_word(&self, w: &[(usize, i64)]) -> usize {
        w.iter().fold(self.identity(), |acc, &(g, e)| self.mul(acc, self.table.pow(self.generators[g], e)))
    }

    /// Check each relation lhs = rhs of a presentation.
    pub fn check_relations(&self, rels: &[(Word, Word)]) -> Result<(), GroupError> {
        for (l, r) in rels {
            if self.eval_word(l) != self.eval_word(r) {
                return Err(GroupError::RelationFails(self.word_string(l, r), self.name.clone()));
            }
        }
        Ok(())
    }

    fn word_string(&self, l: &[(usize, i64)], r: &[(usize, i64)]) -> String {
        let show = |w: &[(usize, i64)]| {
            if w.is_empty() {
                return "1".to_string();
            }
            w.iter().map(|&(g, e)| format!("{}^{}", self.generator_names[g], e)).collect::<Vec<_>>().join(" ")
        };
        format!("{} = {}", show(l), show(r))
    }

    /// Automorphism check for a permutation of elements.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.order();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|a| (0..n).all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b])))
    }

    /// The subgroup on `elems` (kept in the given order), with a greedy generating set.
    pub fn subgroup(&self, elems: &[usize], name: &str) -> Result<FiniteGroup, GroupError> {
        let mut gens: Vec<usize> = Vec::new();
        for &e in elems {
            let mut cand = gens.clone();
            cand.push(e);
            if self.table.generated(&gens).len() < self.table.generated(&cand).len() {
                gens = cand;
            }
        }
        let gen_names: Vec<String> = gens.iter().map(|&g| self.labels[g].clone()).collect();
        let gen_refs: Vec<&str> = gen_names.iter().map(|s| s.as_str()).collect();
        FiniteGroup::from_rule(
            name,
            elems.to_vec(),
            |a, b| self.mul(*a, *b),
            |a| self.labels[*a].clone(),
            &gens,
            &gen_refs,
        )
    }

    /// Direct product, elements (a, b) indexed a * |other| + b.
    pub fn direct_product(&self, other: &FiniteGroup, name: &str) -> Result<FiniteGroup, GroupError> {
        let elems: Vec<(usize, usize)> =
            (0..self.order()).flat_map(|a| (0..other.order()).map(move |b| (a, b))).collect();
        let mut gens: Vec<(usize, usize)> = self.generators.iter().map(|&g| (g, other.identity())).collect();
        gens.extend(other.generators.iter().map(|&g| (self.identity(), g)));
        let mut names: Vec<String> = self.generator_names.clone();
        names.extend(other.generator_names.iter().cloned());
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        FiniteGroup::from_rule(
            name,
            elems,
            |x, y| (self.mul(x.0, y.0), other.mul(x.1, y.1)),
            |x| format!("({},{})", self.labels[x.0], other.labels[x.1]),
            &gens,
            &name_refs,
        )
    }
}

fn monomial(parts: &[(&str, i64)]) -> String {
    let s: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if s.is_empty() {
        "1".to_string()
    } else {
        s.join("")
    }
}

fn rel(l: &[(usize, i64)], r: &[(usize, i64)]) -> (Word, Word) {
    (l.to_vec(), r.to_vec())
}

pub fn cyclic(n: i64) -> FiniteGroup {
    let name = format!("C{n}");
    let g = FiniteGroup::from_rule(
        &name,
        (0..n).collect(),
        |a, b| (a + b) % n,
        |a| monomial(&[("g", *a)]),
        &[1 % n.max(1)],
        &["g"],
    )
    .expect("cyclic group");
    g.check_relations(&[rel(&[(0, n)], &[])]).expect("cyclic relation");
    g
}

/// C4 x C2 with elements (p mod 4, q mod 2) written x^p y^q.
pub fn c4xc2() -> FiniteGroup {
    let elems: Vec<(i64, i64)> = (0..4).flat_map(|p| (0..2).map(move |q| (p, q))).collect();
    let g = FiniteGroup::from_rule(
        "C4xC2",
        elems,
        |a, b| ((a.0 + b.0) % 4, (a.1 + b.1) % 2),
        |a| monomial(&[("x", a.0), ("y", a.1)]),
        &[(1, 0), (0, 1)],
        &["x", "y"],
    )
    .expect("C4xC2");
    g.check_relations(&[
        rel(&[(0, 4)], &[]),
        rel(&[(1, 2)], &[]),
        rel(&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]),
    ])
    .expect("C4xC2 relations");
    g
}

/// C2 x C2 x C2 with elements (p, q, r) written x^p y^q z^r.
pub fn c2cubed() -> FiniteGroup {
    let elems: Vec<(i64, i64, i64)> =
        (0..2).flat_map(|p| (0..2).flat_map(move |q| (0..2).map(move |r| (p, q, r)))).collect();
    let g = FiniteGroup::from_rule(
        "C2xC2xC2",
        elems,
        |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % 2, (a.2 + b.2) % 2),
        |a| monomial(&[("x", a.0), ("y", a.1), ("z", a.2)]),
        &[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        &["x", "y", "z"],
    )
    .expect("C2^3");
    g.check_relations(&[rel(&[(0, 2)], &[]), rel(&[(1, 2)], &[]), rel(&[(2, 2)], &[])])
        .expect("C2^3 relations");
    g
}

pub fn c2xc2() -> FiniteGroup {
    let elems: Vec<(i64, i64)> = (0..2).flat_map(|p| (0..2).map(move |q| (p, q))).collect();
    FiniteGroup::from_rule(
        "C2xC2",
        elems,
        |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % 2),
        |a| monomial(&[("x", a.0), ("y", a.1)]),
        &[(1, 0), (0, 1)],
        &["x", "y"],
    )
    .expect("C2xC2")
}

/// Groups with normal form a^p b^q, b a b^-1 = a^r and b^{ob} = a^s.
fn metacyclic(name: &str, na: i64, nb: i64, r: i64, s: i64) -> FiniteGroup {
    let elems: Vec<(i64, i64)> = (0..nb).flat_map(|q| (0..na).map(move |p| (p, q))).collect();
    let rpow = |q: i64| (0..q).fold(1i64, |acc, _| (acc * r).rem_euclid(na));
    FiniteGroup::from_rule(
        name,
        elems,
        |x, y| {
            let mut p = x.0 + rpow(x.1) * y.0;
            let mut q = x.1 + y.1;
            if q >= nb {
                q -= nb;
                p += s;
            }
            (p.rem_euclid(na), q)
        },
        |x| monomial(&[("a", x.0), ("b", x.1)]),
        &[(1, 0), (0, 1)],
        &["a", "b"],
    )
    .expect("metacyclic group")
}

/// D8 = <x, y : x^4 = y^2 = 1, y x = x^-1 y>, elements x^p y^q.
pub fn d8() -> FiniteGroup {
    let mut g = metacyclic("D8", 4, 2, -1, 0);
    g.generator_names = vec!["x".into(), "y".into()];
    g.labels = (0..2).flat_map(|q| (0..4).map(move |p| monomial(&[("x", p), ("y", q)]))).collect();
    g.check_relations(&[
        rel(&[(0, 4)], &[]),
        rel(&[(1, 2)], &[]),
        rel(&[(1, 1), (0, 1)], &[(0, -1), (1, 1)]),
    ])
    .expect("D8 relations");
    g
}

/// Q8 = <x, y : x^4 = 1, y^2 = x^2, y x = x^-1 y>, elements x^p y^q.
pub fn q8() -> FiniteGroup {
    let mut g = metacyclic("Q8", 4, 2, -1, 2);
    g.generator_names = vec!["x".into(), "y".into()];
    g.labels = (0..2).flat_map(|q| (0..4).map(move |p| monomial(&[("x", p), ("y", q)]))).collect();
    g.check_relations(&[
        rel(&[(0, 4)], &[]),
        rel(&[(1, 2)], &[(0, 2)]),
        rel(&[(1, 1), (0, 1)], &[(0, -1), (1, 1)]),
    ])
    .expect("Q8 relations");
    g
}

/// Element (p, q) of D8 or Q8 as stored by `d8`/`q8`.
pub fn xy_index(p: i64, q: i64) -> usize {
    (q.rem_euclid(2) * 4 + p.rem_euclid(4)) as usize
}

/// Element (p, q) of C4xC2 as stored by `c4xc2`.
pub fn c4xc2_index(p: i64, q: i64) -> usize {
    (p.rem_euclid(4) * 2 + q.rem_euclid(2)) as usize
}

/// Element (p, q, r) of C2^3 as stored by `c2cubed`.
pub fn c2cubed_index(p: i64, q: i64, r: i64) -> usize {
    (p.rem_euclid(2) * 4 + q.rem_euclid(2) * 2 + r.rem_euclid(2)) as usize
}

/// The nine nonabelian groups of order 16, indexed 1..=9.
pub fn order16(i: usize) -> Result<FiniteGroup, GroupError> {
    let (a, b, c) = (0usize, 1usize, 2usize);
    let g = match i {
        1 => {
            let g = metacyclic("G1", 8, 2, 5, 0);
            g.check_relations(&[rel(&[(a, 8)], &[]), rel(&[(b, 2)], &[]), rel(&[(b, 1), (a, 1)], &[(a, 5), (b, 1)])])?;
            g
        }
        2 => {
            let g = metacyclic("G2", 8, 2, 3, 0);
            g.check_relations(&[rel(&[(a, 8)], &[]), rel(&[(b, 2)], &[]), rel(&[(b, 1), (a, 1)], &[(a, 3), (b, 1)])])?;
            g
        }
        3 => {
            let g = metacyclic("G3", 8, 2, -1, 0);
            g.check_relations(&[rel(&[(a, 8)], &[]), rel(&[(b, 2)], &[]), rel(&[(b, 1), (a, 1)], &[(a, -1), (b, 1)])])?;
            g
        }
        4 => {
            let g = metacyclic("G4", 8, 2, -1, 4);
            g.check_relations(&[rel(&[(a, 8)], &[]), rel(&[(b, 2)], &[(a, 4)]), rel(&[(b, 1), (a, 1)], &[(a, -1), (b, 1)])])?;
            g
        }
        5 => {
            let g = metacyclic("G5", 4, 4, -1, 0);
            g.check_relations(&[rel(&[(a, 4)], &[]), rel(&[(b, 4)], &[]), rel(&[(b, 1), (a, 1)], &[(a, -1), (b, 1)])])?;
            g
        }
        6 => {
            // c central, b a b = a c
            let g = abc_group("G6", |x, y| {
                ((x.0 + y.0).rem_euclid(4), (x.1 + y.1) % 2, (x.2 + y.2 + x.1 * y.0).rem_euclid(2))
            });
            g.check_relations(&[
                rel(&[(a, 4)], &[]),
                rel(&[(b, 2)], &[]),
                rel(&[(c, 2)], &[]),
                rel(&[(b, 1), (a, 1), (b, 1)], &[(a, 1), (c, 1)]),
                rel(&[(c, 1), (a, 1)], &[(a, 1), (c, 1)]),
                rel(&[(c, 1), (b, 1)], &[(b, 1), (c, 1)]),
            ])?;
            g
        }
        7 => {
            // a, b commute; c a c = a^-1; c b c = a^2 b
            let g = abc_group("G7", |x, y| {
                let s = if x.2 == 0 { 1 } else { -1 };
                ((x.0 + s * y.0 + 2 * x.2 * y.1).rem_euclid(4), (x.1 + y.1) % 2, (x.2 + y.2) % 2)
            });
            g.check_relations(&[
                rel(&[(a, 4)], &[]),
                rel(&[(b, 2)], &[]),
                rel(&[(c, 2)], &[]),
                rel(&[(c, 1), (b, 1), (c, 1)], &[(a, 2), (b, 1)]),
                rel(&[(a, 1), (b, 1)], &[(b, 1), (a, 1)]),
                rel(&[(c, 1), (a, 1), (c, 1)], &[(a, -1)]),
            ])?;
            g
        }
        8 | 9 => {
            let s = if i == 8 { 0 } else { 2 };
            let name = if i == 8 { "G8" } else { "G9" };
            let g = abc_group(name, move |x, y| {
                let sign = if x.1 == 0 { 1 } else { -1 };
                let mut p = x.0 + sign * y.0;
                let mut q = x.1 + y.1;
                if q >= 2 {
                    q -= 2;
                    p += s;
                }
                (p.rem_euclid(4), q, (x.2 + y.2) % 2)
            });
            let b2 = if i == 8 { vec![] } else { vec![(a, 2)] };
            g.check_relations(&[
                rel(&[(a, 4)], &[]),
                rel(&[(b, 2)], &b2),
                rel(&[(c, 2)], &[]),
                rel(&[(b, 1), (a, 1)], &[(a, -1), (b, 1)]),
                rel(&[(c, 1), (a, 1)], &[(a, 1), (c, 1)]),
                rel(&[(c, 1), (b, 1)], &[(b, 1), (c, 1)]),
            ])?;
            g
        }
        _ => return Err(GroupError::UnknownName(format!("G{i}"))),
    };
    Ok(g)
}

/// Groups of order 16 with normal form a^p b^q c^r, p mod 4, q, r mod 2.
fn abc_group<M: Fn(&(i64, i64, i64), &(i64, i64, i64)) -> (i64, i64, i64)>(name: &str, mul: M) -> FiniteGroup {
    let elems: Vec<(i64, i64, i64)> =
        (0..2).flat_map(|r| (0..2).flat_map(move |q| (0..4).map(move |p| (p, q, r)))).collect();
    FiniteGroup::from_rule(
        name,
        elems,
        mul,
        |x| monomial(&[("a", x.0), ("b", x.1), ("c", x.2)]),
        &[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        &["a", "b", "c"],
    )
    .expect("order 16 group")
}

/// Look up a group by name: C1, C2, C4, C8, C2xC2, C4xC2, C2xC2xC2, D8, Q8, G1..G9, D16, Q16.
pub fn by_name(name: &str) -> Result<FiniteGroup, GroupError> {
    match name {
        "C1" => Ok(cyclic(1)),
        "C2" => Ok(cyclic(2)),
        "C4" => Ok(cyclic(4)),
        "C8" => Ok(cyclic(8)),
        "C2xC2" => Ok(c2xc2()),
        "C4xC2" => Ok(c4xc2()),
        "C2xC2xC2" => Ok(c2cubed()),
        "D8" => Ok(d8()),
        "Q8" => Ok(q8()),
        "D16" => order16(3),
        "Q16" => order16(4),
        _ => {
            if let Some(i) = name.strip_prefix('G').and_then(|s| s.parse::<usize>().ok()) {
                order16(i)
            } else {
                Err(GroupError::UnknownName(name.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identify_small() {
        assert_eq!(cyclic(2).table.identify().unwrap(), GroupLabel::C2);
        assert_eq!(cyclic(4).table.identify().unwrap(), GroupLabel::C4);
        assert_eq!(c2xc2().table.identify().unwrap(), GroupLabel::C2xC2);
        assert_eq!(c4xc2().table.identify().unwrap(), GroupLabel::C4xC2);
        assert_eq!(c2cubed().table.identify().unwrap(), GroupLabel::C2xC2xC2);
        assert_eq!(cyclic(8).table.identify().unwrap(), GroupLabel::C8);
        assert_eq!(d8().table.identify().unwrap(), GroupLabel::D8);
        assert_eq!(q8().table.identify().unwrap(), GroupLabel::Q8);
    }

    #[test]
    fn order16_groups_are_distinct_and_nonabelian() {
        let mut profiles = Vec::new();
        for i in 1..=9 {
            let g = order16(i).unwrap();
            assert_eq!(g.order(), 16);
            assert!(!g.table.is_abelian());
            assert_eq!(g.table.identify(), Err(GroupError::UnsupportedOrder(16)));
            let mut orders: Vec<usize> = (0..16).map(|x| g.table.element_order(x)).collect();
            orders.sort_unstable();
            let mut center: Vec<usize> = (0..16)
                .filter(|&x| (0..16).all(|y| g.mul(x, y) == g.mul(y, x)))
                .map(|x| g.table.element_order(x))
                .collect();
            center.sort_unstable();
            let mut squares: Vec<usize> = (0..16).map(|x| g.mul(x, x)).collect();
            squares.sort_unstable();
            squares.dedup();
            profiles.push((orders, center, squares.len()));
        }
        let max8 = profiles.iter().filter(|(o, _, _)| o.contains(&8)).count();
        assert_eq!(max8, 4, "exactly the first four have exponent 8");
        profiles.sort();
        profiles.dedup();
        assert_eq!(profiles.len(), 9);
    }

    #[test]
    fn wrong_relation_is_detected() {
        let g = d8();
        let bad = g.check_relations(&[rel(&[(0, 2)], &[])]);
        assert!(matches!(bad, Err(GroupError::RelationFails(_, _))));
    }

    #[test]
    fn not_a_group() {
        assert!(GroupTable::new(vec![vec![0, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn automorphism_check() {
        let g = c4xc2();
        let perm: Vec<usize> = (0..8)
            .map(|k| {
                let (p, q) = ((k / 2) as i64, (k % 2) as i64);
                c4xc2_index(p + 2 * q, q)
            })
            .collect();
        assert!(g.is_automorphism(&perm));
    }
}
