//! Invariant profiles (G(H), G(H*), Wedderburn degrees, K₀) and the sixteen-row table.

pub mod checks;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructors::catalog::{self, Curated};
use crate::constructors::ConstructionError;
use crate::cyclo::CycNum;
use crate::fusion::{fusion_coefficients, identify_reference, FusionComputation};
use crate::groups::{GroupError, GroupLabel};
use crate::hopf::{CheckResult, HopfAlgebra, HopfError, Report};
use crate::rep::{intertwiner_dimension, split_semisimple, verify_irrep_set, IrrepSet, RepError, Representation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("row {row}: {field} computed {computed}, expected {expected}")]
    RowMismatch { row: usize, field: String, computed: String, expected: String },
    #[error("fusion ring matches no reference structure")]
    UnknownK0,
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Degree multiset of the simple blocks, as (degree, multiplicity) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wedderburn(pub Vec<(usize, usize)>);

impl Wedderburn {
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in degrees {
            *m.entry(d).or_default() += 1;
        }
        Wedderburn(m.into_iter().collect())
    }

    pub fn count(&self, degree: usize) -> usize {
        self.0.iter().find(|(d, _)| *d == degree).map_or(0, |(_, c)| *c)
    }
}

impl fmt::Display for Wedderburn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, c)| format!("{d}^{c}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub group_h: GroupLabel,
    pub group_hdual: GroupLabel,
    pub wedderburn: Wedderburn,
    pub k0_label: String,
}

impl InvariantProfile {
    /// With degrees at most 2 and dimension 16, the number of characters fixes the block degrees.
    pub fn is_consistent(&self) -> bool {
        let chars = self.wedderburn.count(1);
        chars == self.group_hdual.order() && chars + 4 * self.wedderburn.count(2) == 16
    }
}

impl fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G(H)={} G(H*)={} blocks={} K0={}",
            self.group_h.name(),
            self.group_hdual.name(),
            self.wedderburn,
            self.k0_label
        )
    }
}

/// A profile together with the verified data it was computed from.
#[derive(Debug, Clone)]
pub struct ProfileDetails {
    pub profile: InvariantProfile,
    pub grouplikes: Vec<Vec<CycNum>>,
    pub characters: Vec<Vec<CycNum>>,
    pub irreps: IrrepSet,
    pub fusion: FusionComputation,
}

/// Profile from a claimed complete grouplike set and a claimed complete irrep set; both claims are verified.
pub fn profile_with(
    h: &HopfAlgebra,
    grouplikes: Vec<Vec<CycNum>>,
    irreps: Vec<Representation>,
) -> Result<ProfileDetails, ClassifyError> {
    let group_h = h.verify_grouplike_set(&grouplikes)?.identify()?;
    let set = verify_irrep_set(h, &irreps)?;
    let characters = set.characters();
    let group_hdual = h.dual_hopf().verify_grouplike_set(&characters)?.identify()?;
    let fusion = fusion_coefficients(h, &set)?;
    let k0 = identify_reference(&fusion.ring).ok_or(ClassifyError::UnknownK0)?;
    Ok(ProfileDetails {
        profile: InvariantProfile {
            group_h,
            group_hdual,
            wedderburn: Wedderburn::from_degrees(&set.degrees()),
            k0_label: k0.to_string(),
        },
        grouplikes,
        characters,
        irreps: set,
        fusion,
    })
}

/// Close a set of characters under tensor product. Labels record exponents, e.g. `chi^2phi`.
pub fn close_characters(h: &HopfAlgebra, gens: &[Representation]) -> Vec<Representation> {
    let mut out = vec![Representation::trivial(h)];
    out[0].label = "1".into();
    let mut exps: Vec<Vec<usize>> = vec![vec![0; gens.len()]];
    let mut idx = 0;
    while idx < out.len() {
        for (k, g) in gens.iter().enumerate() {
            let p = Representation::tensor(h, &out[idx], g);
            if !out.iter().any(|r| r.images == p.images) {
                let mut e = exps[idx].clone();
                e[k] += 1;
                let label: String = gens
                    .iter()
                    .zip(&e)
                    .map(|(g, &n)| match n {
                        0 => String::new(),
                        1 => g.label.clone(),
                        n => format!("{}^{n}", g.label),
                    })
                    .collect();
                out.push(Representation::new(&label, p.images));
                exps.push(e);
            }
        }
        idx += 1;
    }
    out
}

/// Characters plus the orbits of the given 2-dim irreps under χ ⊗ −, pairwise inequivalent.
pub fn expand_irreps(h: &HopfAlgebra, chars: &[Representation], twos: &[Representation]) -> Vec<Representation> {
    let mut out: Vec<Representation> = chars.to_vec();
    for pi in twos {
        for chi in chars {
            let p = Representation::tensor(h, chi, pi);
            if !out.iter().any(|r| r.degree() == 2 && intertwiner_dimension(r, &p) != 0) {
                let label = if chi.label == "1" { pi.label.clone() } else { format!("{}{}", chi.label, pi.label) };
                out.push(Representation::new(&label, p.images));
            }
        }
    }
    out
}

/// Profile from the curated generator data of a catalog entry.
pub fn profile_curated(h: &HopfAlgebra, cur: &Curated) -> Result<ProfileDetails, ClassifyError> {
    let grouplikes = h.generate_grouplikes(&cur.grouplike_generators)?;
    let chars = close_characters(h, &cur.characters);
    let irreps = expand_irreps(h, &chars, &cur.irreps);
    profile_with(h, grouplikes, irreps)
}

/// Profile from structure constants alone: irreps of H and of H* by splitting, grouplikes of H
/// as the characters of H*.
pub fn profile_generic(h: &HopfAlgebra) -> Result<ProfileDetails, ClassifyError> {
    let irreps = split_semisimple(h)?;
    let dual = h.dual_hopf();
    let grouplikes = split_semisimple(&dual)?.iter().filter_map(Representation::character_values).collect();
    profile_with(h, grouplikes, irreps)
}

/// Profile of a catalog entry by name.
pub fn profile_entry(name: &str) -> Result<ProfileDetails, ClassifyError> {
    let h = catalog::build(name)?;
    let cur = catalog::curated(name, &h)?;
    profile_curated(&h, &cur)
}

/// How a table row's algebra is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowSource {
    Entry(&'static str),
    Dual(&'static str),
}

impl RowSource {
    pub fn build(self) -> Result<HopfAlgebra, ClassifyError> {
        Ok(match self {
            RowSource::Entry(n) => catalog::build(n)?,
            RowSource::Dual(n) => catalog::build(n)?.dual_hopf(),
        })
    }

    pub fn display(self) -> String {
        match self {
            RowSource::Entry(n) => catalog::display_name(n).unwrap_or(n).to_string(),
            RowSource::Dual(n) => format!("({})*", catalog::display_name(n).unwrap_or(n)),
        }
    }

    /// Entry profile from curated data; a dual row takes its grouplikes from the entry's curated
    /// characters and its irreps from splitting.
    pub fn profile(self) -> Result<ProfileDetails, ClassifyError> {
        match self {
            RowSource::Entry(n) => profile_entry(n),
            RowSource::Dual(n) => {
                let h = catalog::build(n)?;
                let cur = catalog::curated(n, &h)?;
                let grouplikes: Vec<Vec<CycNum>> = close_characters(&h, &cur.characters)
                    .iter()
                    .filter_map(Representation::character_values)
                    .collect();
                let dual = h.dual_hopf();
                let irreps = split_semisimple(&dual)?;
                profile_with(&dual, grouplikes, irreps)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectedRow {
    pub row: usize,
    pub source: RowSource,
    pub group_h: GroupLabel,
    pub group_hdual: GroupLabel,
    pub k0_label: &'static str,
    /// Triangularity as recorded in the catalog; reported, not verified.
    pub notes: &'static str,
}

/// The sixteen expected rows.
pub fn expected_rows() -> Vec<ExpectedRow> {
    use GroupLabel::*;
    use RowSource::*;
    let r = |row, source, group_h, group_hdual, k0_label, notes| ExpectedRow {
        row,
        source,
        group_h,
        group_hdual,
        k0_label,
        notes,
    };
    vec![
        r(1, Entry("Hd-+"), C2xC2xC2, C2xC2xC2, "K5.1", "not triangular"),
        r(2, Entry("Hd++"), C2xC2xC2, C2xC2xC2, "K5.1", "triangular"),
        r(3, Dual("Hc1"), C2xC2xC2, C4xC2, "K5.3", ""),
        r(4, Dual("Hb1"), C2xC2xC2, C4xC2, "K5.3", ""),
        r(5, Entry("Hc1"), C4xC2, C2xC2xC2, "K5.2", ""),
        r(6, Entry("Hb1"), C4xC2, C2xC2xC2, "K5.1", ""),
        r(7, Entry("Hc0"), C4xC2, C4xC2, "K5.4", ""),
        r(8, Entry("Ha1"), C4xC2, C4xC2, "K5.3", ""),
        r(9, Entry("Hay"), C4xC2, C4xC2, "K5.3", ""),
        r(10, Entry("Hby"), C4xC2, C4xC2, "K5.3", ""),
        r(11, Entry("Hbx2y"), C4xC2, C4xC2, "K5.3", ""),
        r(12, Entry("HC1"), D8, C2xC2, "K6.3", "triangular"),
        r(13, Entry("HE"), D8, C2xC2, "K6.4", "triangular"),
        r(14, Entry("HB1"), C2xC2, D8, "K5.5", ""),
        r(15, Entry("HBX"), C2xC2, D8, "K5.5", ""),
        r(16, Entry("HC1s"), C2xC2, C2xC2, "K6.3", "not triangular"),
    ]
}

/// Row pairs whose algebras are dual to each other.
pub const DUALITY_PAIRS: [(usize, usize); 4] = [(3, 5), (4, 6), (12, 14), (13, 15)];
/// Rows whose invariants are symmetric under duality.
pub const SELF_DUAL_ROWS: [usize; 4] = [1, 2, 7, 16];

#[derive(Debug, Clone, Serialize)]
pub struct RowResult {
    pub row: usize,
    pub algebra: String,
    pub expected: ExpectedRow,
    pub computed: Option<InvariantProfile>,
    pub errors: Vec<String>,
    #[serde(skip)]
    pub details: Option<ProfileDetails>,
}

impl RowResult {
    pub fn passed(&self) -> bool {
        self.errors.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Report {
    pub rows: Vec<RowResult>,
    pub duality: Report,
    /// Sets of rows sharing all three tabulated invariants.
    pub coincidences: Vec<Vec<usize>>,
}

impl Table1Report {
    pub fn rows_passed(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }

    pub fn passed(&self) -> bool {
        self.rows_passed() == self.rows.len() && self.duality.all_passed()
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| No. | Example | G(H) | G(H*) | K0(H) | Notes | Check |\n|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let (gh, ghd, k0) = match &r.computed {
                Some(p) => (p.group_h.name().to_string(), p.group_hdual.name().to_string(), p.k0_label.clone()),
                None => ("?".into(), "?".into(), "?".into()),
            };
            let status = if r.passed() { "ok".to_string() } else { format!("FAIL: {}", r.errors.join("; ")) };
            s += &format!("| {} | {} | {} | {} | {} | {} | {} |\n", r.row, r.algebra, gh, ghd, k0, r.expected.notes, status);
        }
        s += "\n";
        for c in &self.duality.checks {
            s += &format!("- {}: {}\n", c.name, if c.passed { "ok" } else { c.detail.as_deref().unwrap_or("failed") });
        }
        for c in &self.coincidences {
            let rows: Vec<String> = c.iter().map(|r| r.to_string()).collect();
            s += &format!("- rows {} are not separated by these invariants\n", rows.join(", "));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let p = r.computed.as_ref().map_or("?".to_string(), |p| p.to_string());
            let status = if r.passed() { "ok".to_string() } else { format!("FAIL {}", r.errors.join("; ")) };
            s += &format!("{:>2} {:<14} {} {}\n", r.row, r.algebra, p, status);
        }
        for c in &self.duality.checks {
            s += &format!("{} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name);
        }
        for c in &self.coincidences {
            s += &format!("not separated: rows {c:?}\n");
        }
        s
    }
}

fn compare(row: usize, p: &InvariantProfile, e: &ExpectedRow) -> Vec<ClassifyError> {
    let mut out = Vec::new();
    let mut push = |field: &str, c: String, x: String| {
        if c != x {
            out.push(ClassifyError::RowMismatch { row, field: field.into(), computed: c, expected: x });
        }
    };
    push("G(H)", p.group_h.name().into(), e.group_h.name().into());
    push("G(H*)", p.group_hdual.name().into(), e.group_hdual.name().into());
    push("K0", p.k0_label.clone(), e.k0_label.into());
    if !p.is_consistent() {
        out.push(ClassifyError::RowMismatch {
            row,
            field: "blocks".into(),
            computed: p.wedderburn.to_string(),
            expected: format!("{} characters", p.group_hdual.order()),
        });
    }
    out
}

fn dual_profile(source: RowSource) -> Result<InvariantProfile, ClassifyError> {
    Ok(profile_generic(&source.build()?.dual_hopf())?.profile)
}

/// Compute every row, compare with the expected values, and check the duality relations by invariants.
pub fn reproduce_table1() -> Table1Report {
    let expected = expected_rows();
    let rows: Vec<RowResult> = expected
        .par_iter()
        .map(|e| {
            let res = e.source.profile();
            let (computed, details, errors) = match res {
                Ok(d) => {
                    let errs = compare(e.row, &d.profile, e).iter().map(|x| x.to_string()).collect();
                    (Some(d.profile.clone()), Some(d), errs)
                }
                Err(err) => (None, None, vec![err.to_string()]),
            };
            RowResult { row: e.row, algebra: e.source.display(), expected: e.clone(), computed, errors, details }
        })
        .collect();
    let source = |r: usize| expected[r - 1].source;
    let computed = |r: usize| rows[r - 1].computed.clone();
    let mut jobs: Vec<(String, usize, usize)> = Vec::new();
    for (a, b) in DUALITY_PAIRS {
        jobs.push((format!("dual of row {a} matches row {b}"), a, b));
        jobs.push((format!("dual of row {b} matches row {a}"), b, a));
    }
    for r in SELF_DUAL_ROWS {
        jobs.push((format!("dual of row {r} matches row {r}"), r, r));
    }
    let checks = jobs
        .par_iter()
        .map(|(name, a, b)| match (dual_profile(source(*a)), computed(*b)) {
            (Ok(p), Some(q)) if p == q => CheckResult::pass(name),
            (Ok(p), Some(q)) => CheckResult::fail(name, format!("{p} vs {q}")),
            (Err(e), _) => CheckResult::fail(name, e.to_string()),
            (_, None) => CheckResult::fail(name, "row not computed".into()),
        })
        .collect();
    let mut groups: BTreeMap<(String, String, String), Vec<usize>> = BTreeMap::new();
    for r in &rows {
        if let Some(p) = &r.computed {
            groups
                .entry((p.group_h.name().into(), p.group_hdual.name().into(), p.k0_label.clone()))
                .or_default()
                .push(r.row);
        }
    }
    let mut coincidences: Vec<Vec<usize>> = groups.into_values().filter(|v| v.len() > 1).collect();
    coincidences.sort();
    Table1Report { rows, duality: Report { checks }, coincidences }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedderburn_display() {
        let w = Wedderburn::from_degrees(&[1, 1, 2, 1, 2]);
        assert_eq!(w.to_string(), "(1^3,2^2)");
        assert_eq!(w.count(2), 2);
    }

    #[test]
    fn curated_profile_of_hc0() {
        let d = profile_entry("Hc0").unwrap();
        assert_eq!(d.profile.group_h, GroupLabel::C4xC2);
        assert_eq!(d.profile.group_hdual, GroupLabel::C4xC2);
        assert_eq!(d.profile.k0_label, "K5.4");
        assert_eq!(d.profile.wedderburn, Wedderburn(vec![(1, 8), (2, 2)]));
    }

    #[test]
    fn generic_profile_agrees_with_curated_for_he() {
        let h = catalog::build("HE").unwrap();
        let g = profile_generic(&h).unwrap();
        let c = profile_entry("HE").unwrap();
        assert_eq!(g.profile, c.profile);
        assert_eq!(c.profile.k0_label, "K6.4");
    }

    #[test]
    fn table1_reproduces_with_duality() {
        let t = reproduce_table1();
        assert!(t.passed(), "{}", t.to_text());
        assert_eq!(t.coincidences, vec![vec![1, 2], vec![3, 4], vec![8, 9, 10, 11], vec![14, 15]]);
    }
}
