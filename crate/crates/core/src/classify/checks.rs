//! Verification suites over the whole catalog: axioms, group K₀ identifications, fusion
//! identities, cocycle derivations, explicit isomorphisms, quotients, structural statements,
//! character dichotomies, twists and the smash coproduct.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{expected_rows, profile_curated, profile_generic, ClassifyError, ExpectedRow, InvariantProfile, Table1Report};
use crate::constructors::bicrossed::{solve_cocycles, BicrossedData, CocycleCondition};
use crate::constructors::catalog::{self, c2cubed_pqr, c4xc2_pq, xy_pq, Family, NAMES};
use crate::constructors::smash::{smash_coproduct_q8, smash_curated};
use crate::constructors::twist::{j_omega_expanded, twist_hosts};
use crate::constructors::{dual_group_algebra, group_algebra, ConstructionError};
use crate::cyclo::CycNum;
use crate::fusion::{fusion_coefficients, fusion_isomorphic, identify_reference, reference, FusionComputation, FusionRing};
use crate::groups::{self, c2cubed_index, c4xc2_index, xy_index, GroupLabel};
use crate::hopf::{extend_multiplicatively, CheckResult, HopfAlgebra, HopfMorphism, Report};
use crate::linalg::{self, Matrix};
use crate::rep::{intertwiner_dimension, split_semisimple, verify_irrep_set, Representation};

fn check(name: &str, ok: bool, detail: impl FnOnce() -> String) -> CheckResult {
    if ok {
        CheckResult::pass(name)
    } else {
        CheckResult::fail(name, detail())
    }
}

fn from_result<T>(name: &str, r: Result<T, impl ToString>, ok: impl FnOnce(T) -> Result<(), String>) -> CheckResult {
    match r.map_err(|e| e.to_string()).and_then(ok) {
        Ok(()) => CheckResult::pass(name),
        Err(e) => CheckResult::fail(name, e),
    }
}

fn prefixed(prefix: &str, r: Report) -> Vec<CheckResult> {
    r.checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}: {}", c.name);
            c
        })
        .collect()
}

/// Every algebra the suites are run on, by name.
pub fn all_algebras() -> Result<Vec<(String, HopfAlgebra)>, ClassifyError> {
    let mut out: Vec<(String, HopfAlgebra)> = Vec::new();
    for name in NAMES {
        out.push((name.to_string(), catalog::build(name)?));
    }
    for host in twist_hosts()? {
        let (h, _) = host.twisted()?;
        out.push((format!("{}_J", host.name), h));
    }
    out.push(("kQ8#kC2".into(), smash_coproduct_q8()?));
    let mut groups_list = vec![groups::cyclic(2), groups::c2xc2(), groups::c4xc2(), groups::c2cubed(), groups::d8(), groups::q8()];
    for i in 1..=9 {
        groups_list.push(groups::order16(i)?);
    }
    for g in groups_list {
        out.push((format!("k{}", g.name), group_algebra(&g)));
        out.push((format!("k^{}", g.name), dual_group_algebra(&g)));
    }
    Ok(out)
}

/// The Hopf axioms, exactly, on every algebra of `all_algebras`.
pub fn axiom_suite() -> Result<Vec<(String, Report)>, ClassifyError> {
    let algs = all_algebras()?;
    Ok(algs.into_par_iter().map(|(n, h)| (n, h.verify_axioms())).collect())
}

/// K₀ of a group algebra kG_i.
#[derive(Debug, Clone)]
pub struct GroupFusion {
    pub group: String,
    pub label: Option<&'static str>,
    pub computation: FusionComputation,
}

/// Expected K₀ of kG₁ … kG₉.
pub const GROUP_K0: [(usize, &str); 9] = [
    (1, "K5.4"),
    (2, "K6.4"),
    (3, "K6.3"),
    (4, "K6.3"),
    (5, "K5.3"),
    (6, "K5.3"),
    (7, "K5.2"),
    (8, "K5.1"),
    (9, "K5.1"),
];

pub fn group_fusion_rings() -> Result<Vec<GroupFusion>, ClassifyError> {
    (1..=9)
        .into_par_iter()
        .map(|i| {
            let g = groups::order16(i)?;
            let h = group_algebra(&g);
            let set = verify_irrep_set(&h, &split_semisimple(&h)?)?;
            let computation = fusion_coefficients(&h, &set)?;
            Ok(GroupFusion { group: g.name.clone(), label: identify_reference(&computation.ring), computation })
        })
        .collect()
}

/// Seven pairwise distinct references, and the nine groups landing on exactly six of them as expected.
pub fn group_fusion_checks(rings: &[GroupFusion]) -> Report {
    let refs = reference::all();
    let mut checks = Vec::new();
    let mut bad = Vec::new();
    for (i, (la, a)) in refs.iter().enumerate() {
        for (lb, b) in refs.iter().skip(i + 1) {
            if fusion_isomorphic(a, b).is_some() {
                bad.push(format!("{la} ≅ {lb}"));
            }
        }
    }
    checks.push(check("seven reference K0 rings pairwise non-isomorphic", refs.len() == 7 && bad.is_empty(), || {
        bad.join(", ")
    }));
    for (i, expect) in GROUP_K0 {
        let name = format!("K0(kG{i}) = {expect}");
        let got = rings.iter().find(|r| r.group == format!("G{i}")).and_then(|r| r.label);
        checks.push(check(&name, got == Some(expect), || format!("computed {got:?}")));
    }
    let distinct: BTreeSet<&str> = rings.iter().filter_map(|r| r.label).collect();
    checks.push(check("group algebras realise exactly six K0 rings", distinct.len() == 6 && rings.len() == 9, || {
        format!("{distinct:?}")
    }));
    Report { checks }
}

/// Identities of the fusion axioms and agreement of the two multiplicity algorithms.
pub fn fusion_identity_checks(rings: &[(String, &FusionComputation)]) -> Report {
    let mut checks = Vec::new();
    for (name, c) in rings {
        let v = c.ring.identity_violations();
        checks.push(check(&format!("{name}: fusion identities"), v.is_empty(), || v.join("; ")));
        checks.push(check(&format!("{name}: trace and intertwiner multiplicities agree"), c.oracle_agreements == c.pairs, || {
            format!("{}/{}", c.oracle_agreements, c.pairs)
        }));
    }
    Report { checks }
}

fn condition_of(r: Result<(), ConstructionError>) -> Option<CocycleCondition> {
    match r {
        Err(ConstructionError::InvalidCocycle { condition, .. }) => Some(condition),
        _ => None,
    }
}

/// The σ solver on case a, the eight admissible (ξ, σ) pairs of Case C, and rejection of broken tuples.
pub fn cocycle_derivation_checks() -> Report {
    let mut checks = Vec::new();
    let base = catalog::case_a(0, 0);
    let solved: HashSet<Vec<CycNum>> = solve_cocycles(&base.group, &base.action, &base.theta).into_iter().collect();
    let expect: HashSet<Vec<CycNum>> =
        [(0, 0), (1, 0), (0, 1), (1, 1)].iter().map(|&(k, l)| catalog::case_a(k, l).sigma).collect();
    checks.push(check("case a: admissible sigma(t,t) are 1, x^2, y, x^2 y", solved == expect, || {
        format!("{} solutions", solved.len())
    }));

    let mut pairs = Vec::new();
    for xi in 0..16 {
        for k in 0..8 {
            if catalog::case_big_c_raw(xi, k).check_conditions().is_ok() {
                pairs.push((xi, k));
            }
        }
    }
    let expect_pairs: Vec<(i64, i64)> = {
        let mut v: Vec<(i64, i64)> = (0..8i64).map(|k| ((-4 * k).rem_euclid(16), k)).collect();
        v.sort();
        v
    };
    checks.push(check("Case C: exactly eight admissible (xi, sigma_k), with xi = omega^(-2k)", pairs == expect_pairs, || {
        format!("{pairs:?}")
    }));

    let mut broken: Vec<(&str, BicrossedData, CocycleCondition)> = Vec::new();
    let mut d = base.clone();
    d.theta[0][1] = -CycNum::one();
    broken.push(("theta(1, g) = -1", d, CocycleCondition::ThetaNormalized));
    let mut d = base.clone();
    let (gx, gy) = (c4xc2_index(1, 0), c4xc2_index(0, 1));
    d.theta[gx][gy] = CycNum::i();
    broken.push(("theta changed at one pair", d, CocycleCondition::ThetaCocycle));
    let mut d = base.clone();
    d.sigma = vec![-CycNum::one(); 8];
    broken.push(("c_1 = -1", d, CocycleCondition::SigmaNormalized));
    let mut d = base.clone();
    d.sigma[gy] = CycNum::zero();
    broken.push(("c_y = 0", d, CocycleCondition::SigmaUnit));
    let mut d = base.clone();
    d.sigma = (0..8).map(|g| CycNum::i_pow(-c4xc2_pq(g).0)).collect();
    broken.push(("sigma = x", d, CocycleCondition::SigmaActionInvariant));
    let mut d = base.clone();
    d.sigma = (0..8).map(|g| CycNum::sign(c4xc2_pq(g).0 * c4xc2_pq(g).1)).collect();
    broken.push(("sigma = (-1)^(pq)", d, CocycleCondition::Bialgebra));
    for (label, d, cond) in broken {
        let got = condition_of(d.check_conditions());
        checks.push(check(&format!("rejects {label} with {cond}"), got == Some(cond), || format!("got {got:?}")));
    }
    Report { checks }
}

/// A map of bicrossed products: e_g ↦ e_{perm(g)}, t̄ ↦ Σ w(g) e_g t̄ (w on target points).
pub fn bicrossed_map(
    src: &BicrossedData,
    tgt: &BicrossedData,
    perm: impl Fn(usize) -> usize,
    w: impl Fn(usize) -> CycNum,
) -> Result<(HopfAlgebra, HopfAlgebra, HopfMorphism), ClassifyError> {
    let (hs, ht) = (src.build()?, tgt.build()?);
    let delta = |d: &BicrossedData, g: usize| d.element(0, |h| if h == g { CycNum::one() } else { CycNum::zero() });
    let mut gens: Vec<(Vec<CycNum>, Vec<CycNum>)> = (0..src.order()).map(|g| (delta(src, g), delta(tgt, perm(g)))).collect();
    gens.push((src.tbar(), tgt.element(1, w)));
    let images = extend_multiplicatively(
        hs.algebra(),
        &gens,
        ht.one(),
        |a, b| ht.mul(a, b),
        |terms| {
            let mut v = vec![CycNum::zero(); ht.dim()];
            for (c, t) in terms {
                v = linalg::vec_add(&v, &linalg::vec_scale(t, c));
            }
            v
        },
    )?;
    Ok((hs, ht, HopfMorphism { matrix: Matrix::from_columns(&images) }))
}

/// One explicit isomorphism between catalog parameters.
#[derive(Debug, Clone, Serialize)]
pub struct IsoResult {
    pub family: String,
    pub name: String,
    pub report: Report,
}

impl IsoResult {
    pub fn passed(&self) -> bool {
        self.report.all_passed()
    }
}

fn iso(
    family: &str,
    name: String,
    src: BicrossedData,
    tgt: BicrossedData,
    perm: impl Fn(usize) -> usize,
    w: impl Fn(usize) -> CycNum,
) -> IsoResult {
    let report = match bicrossed_map(&src, &tgt, perm, w) {
        Ok((hs, ht, f)) => f.verify(&hs, &ht, true),
        Err(e) => Report { checks: vec![CheckResult::fail("construction", e.to_string())] },
    };
    IsoResult { family: family.into(), name, report }
}

/// The explicit parameter-changing isomorphisms of every family.
pub fn explicit_isomorphisms() -> Vec<IsoResult> {
    let mut out = Vec::new();
    let id = |g: usize| g;
    let x_c4 = |g: usize| CycNum::i_pow(-c4xc2_pq(g).0);
    for (k, l) in [(0, 0), (0, 1)] {
        out.push(iso(
            "case a f",
            format!("H_a(x^{}y^{}) -> H_a(x^{}y^{})", 2 * k, l, 2 * (1 - k), 1 - l),
            catalog::case_a(k, l),
            catalog::case_a(1 - k, 1 - l),
            id,
            x_c4,
        ));
    }
    out.push(iso(
        "case b f",
        "H_b(1) -> H_b(x^2)".into(),
        catalog::case_b(0, 0),
        catalog::case_b(1, 0),
        |g| {
            let (r, s) = c4xc2_pq(g);
            c4xc2_index(r, r + s)
        },
        |g| CycNum::i_pow(c4xc2_pq(g).0 * c4xc2_pq(g).0),
    ));
    for k in [0, 1] {
        out.push(iso(
            "case c f",
            format!("H_c(sigma_{}) -> H_c(sigma_{k}), t -> y t", k + 2),
            catalog::case_c(k + 2),
            catalog::case_c(k),
            id,
            |g| CycNum::sign(c4xc2_pq(g).1),
        ));
        out.push(iso(
            "case c f",
            format!("H_c(sigma_{}) -> H_c(sigma_{k}), t -> x^2 y t", k + 2),
            catalog::case_c(k + 2),
            catalog::case_c(k),
            id,
            |g| CycNum::sign(c4xc2_pq(g).0 + c4xc2_pq(g).1),
        ));
    }
    for tau in [1, -1] {
        for (xi1, xi2) in [(1, -1), (-1, -1)] {
            out.push(iso(
                "case d f",
                format!("H_d({xi1},{xi2},{tau},-1) -> H_d({xi1},{xi2},{tau},1)"),
                catalog::case_d(xi1, xi2, tau, -1),
                catalog::case_d(xi1, xi2, tau, 1),
                id,
                |g| CycNum::sign(c2cubed_pqr(g).0),
            ));
        }
        out.push(iso(
            "case d f'",
            format!("H_d(-1,-1,{tau},1) -> H_d(-1,1,{tau},1)"),
            catalog::case_d(-1, -1, tau, 1),
            catalog::case_d(-1, 1, tau, 1),
            |g| {
                let (p, q, r) = c2cubed_pqr(g);
                c2cubed_index(p + r, q + r, r)
            },
            |g| {
                let (_, q, r) = c2cubed_pqr(g);
                &CycNum::i_pow(r * r) * &CycNum::sign(q * r)
            },
        ));
    }
    for (k, l) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        out.push(iso(
            "Case B f",
            format!("H_B(xi, X^{k}Y^{l}) -> H_B(-xi, X^{k}Y^{l})"),
            catalog::case_big_b(4, k, l),
            catalog::case_big_b(12, k, l),
            id,
            |g| CycNum::i_pow(xy_pq(g).0),
        ));
    }
    for k in [0, 1] {
        out.push(iso(
            "Case B f'",
            format!("H_B(X^{k}Y) -> H_B(X^{k})"),
            catalog::case_big_b(4, k, 1),
            catalog::case_big_b(4, k, 0),
            |g| {
                let (r, s) = xy_pq(g);
                xy_index(r + 2 * s, s)
            },
            |g| CycNum::i_pow(xy_pq(g).1),
        ));
    }
    for k in [0, 1] {
        out.push(iso(
            "Case C f",
            format!("H_C(sigma_{}) -> H_C(sigma_{k})", k + 2),
            catalog::case_big_c(k + 2),
            catalog::case_big_c(k),
            id,
            |g| CycNum::i_pow(xy_pq(g).0),
        ));
    }
    out.push(iso(
        "Case E f",
        "H_E(sigma_0) -> H_E(sigma_1)".into(),
        catalog::case_big_e(0),
        catalog::case_big_e(1),
        id,
        |g| {
            let (p, q) = xy_pq(g);
            CycNum::i_pow(p + q * q)
        },
    ));
    out
}

/// Central grouplike quotients of H_{B:1} and H_{B:X}, and H8 ⊗ kC2 against row 1.
pub fn quotient_checks(row1: Option<&InvariantProfile>) -> Report {
    let mut checks = Vec::new();
    let mut h8: Option<HopfAlgebra> = None;
    for name in ["HB1", "HBX"] {
        let data = catalog::data(name).expect("catalog entry");
        let h = data.build().expect("catalog entry builds");
        let by_y: fn(i64, i64) -> i64 = |_, q| q;
        let by_xy: fn(i64, i64) -> i64 = |p, q| p + q;
        for (glabel, sign) in [("Y", by_y), ("XY", by_xy)] {
            let g = data.element(0, |x| CycNum::sign(sign(xy_pq(x).0, xy_pq(x).1)));
            let ker: Vec<usize> = (0..8).filter(|&x| sign(xy_pq(x).0, xy_pq(x).1).rem_euclid(2) == 0).collect();
            let label = format!("{name}/({glabel}-1)");
            let res = h.quotient_by_central_grouplike(&g).map_err(ClassifyError::from).and_then(|(q, proj)| {
                let r = data.restrict(&ker, &format!("ker {glabel}"))?;
                Ok((q, proj, r.clone(), r.build()?))
            });
            let (q, proj, rdata, rh) = match res {
                Ok(x) => x,
                Err(e) => {
                    checks.push(CheckResult::fail(&label, e.to_string()));
                    continue;
                }
            };
            checks.extend(prefixed(&format!("{label} projection"), proj.verify(&h, &q, false)));
            let same = q.mult_tensor() == rh.mult_tensor()
                && q.comult_tensor() == rh.comult_tensor()
                && q.unit() == rh.unit()
                && q.counit() == rh.counit();
            checks.push(check(&format!("{label} equals the restriction to ker {glabel}"), same, || "tensors differ".into()));
            if glabel == "Y" {
                let expect = if name == "HB1" { GroupLabel::D8 } else { GroupLabel::Q8 };
                checks.push(check(&format!("{label} is cocommutative"), q.is_cocommutative(), || "not cocommutative".into()));
                checks.push(from_result(
                    &format!("{label}: G = {}", expect.name()),
                    q.verify_grouplike_set(&rdata.grouplikes()).and_then(|t| Ok(t.identify()?)),
                    |l| if l == expect { Ok(()) } else { Err(format!("got {}", l.name())) },
                ));
            } else {
                checks.push(check(
                    &format!("{label} is neither commutative nor cocommutative"),
                    !q.is_commutative() && !q.is_cocommutative(),
                    || "trivial quotient".into(),
                ));
                if h8.is_none() {
                    h8 = Some(q);
                }
            }
        }
    }
    if let Some(h8) = h8 {
        let t = h8.tensor_product(&group_algebra(&groups::cyclic(2)));
        checks.push(from_result("H8 (x) kC2 has the invariants of row 1", profile_generic(&t), |p| match row1 {
            Some(r) if *r == p.profile => Ok(()),
            Some(r) => Err(format!("{} vs {}", p.profile, r)),
            None => Err("row 1 not computed".into()),
        }));
    }
    Report { checks }
}

/// G(H) never cyclic; the span of K is a commutative sub-Hopf algebra of dimension 8; K0 shapes.
pub fn theorem_instance_checks(table: &Table1Report) -> Report {
    let mut checks = Vec::new();
    for name in NAMES {
        let data = catalog::data(name).expect("catalog entry");
        let h = data.build().expect("catalog entry builds");
        checks.push(from_result(
            &format!("{name}: G(H) not cyclic"),
            h.verify_grouplike_set(&data.grouplikes()).and_then(|t| Ok(t.identify()?)),
            |l| if l.is_cyclic() { Err(l.name().to_string()) } else { Ok(()) },
        ));
        let span: Vec<Vec<CycNum>> = (0..data.order()).map(|i| h.basis_vec(i)).collect();
        let rep = h.subspace_report(&span);
        checks.push(check(&format!("{name}: K is a commutative 8-dim sub-Hopf algebra"), rep.all_passed(), || {
            rep.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", ")
        }));
    }
    for r in &table.rows {
        let name = format!("row {}: G(H) not cyclic", r.row);
        checks.push(check(&name, r.computed.as_ref().is_some_and(|p| !p.group_h.is_cyclic()), || "cyclic or missing".into()));
    }
    let k55 = reference::ring("K5.5").expect("reference");
    checks.push(check("K5.5: 10 basics, center of rank 7", k55.rank() == 10 && k55.center_rank() == 7, || {
        format!("rank {}, center {}", k55.rank(), k55.center_rank())
    }));
    for r in &table.rows {
        let Some(d) = &r.details else { continue };
        let ring = &d.fusion.ring;
        let chars = ring.characters().len();
        let ok = if ring.is_commutative() {
            (chars == 8 && ring.rank() == 10) || (chars == 4 && ring.rank() == 7)
        } else {
            ring.rank() == 10 && ring.center_rank() == 7 && d.profile.k0_label == "K5.5"
        };
        checks.push(check(&format!("row {}: K0 shape", r.row), ok, || {
            format!("rank {}, center {}, commutative {}", ring.rank(), ring.center_rank(), ring.is_commutative())
        }));
    }
    Report { checks }
}

/// Character dichotomies and the absence of 6-dimensional quotients in one fusion ring.
pub fn ring_property_checks(name: &str, ring: &FusionRing) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    let chars = ring.characters();
    let twos: Vec<usize> = (0..ring.rank()).filter(|&x| ring.degrees[x] == 2).collect();
    let image = |c: usize, p: usize| ring.product_basic(c, p);
    if chars.len() == 8 {
        let mut swaps = 0;
        let mut ok = twos.len() == 2;
        if ok {
            let (p1, p2) = (twos[0], twos[1]);
            for &c in &chars {
                match (image(c, p1), image(c, p2)) {
                    (Some(a), Some(b)) if a == p1 && b == p2 => {}
                    (Some(a), Some(b)) if a == p2 && b == p1 => swaps += 1,
                    _ => ok = false,
                }
            }
        }
        checks.push(check(&format!("{name}: each character fixes or swaps both 2-dim irreps, half swap"), ok && swaps == 4, || {
            format!("{swaps} swaps")
        }));
    } else if chars.len() == 4 {
        let fixed: Vec<usize> = twos.iter().copied().filter(|&p| chars.iter().all(|&c| image(c, p) == Some(p))).collect();
        let ok = match fixed.as_slice() {
            [p2] => {
                let d = ring.involution[*p2];
                (0..ring.rank()).all(|z| ring.m(z, *p2, d) == u32::from(chars.contains(&z)))
            }
            _ => false,
        };
        checks.push(check(&format!("{name}: all characters fix pi2 and pi2 pi2* is the sum of characters"), ok, || {
            format!("fixed 2-dim basics {fixed:?}")
        }));
    } else {
        checks.push(CheckResult::fail(&format!("{name}: character count"), format!("{}", chars.len())));
    }
    let six: Vec<_> = ring.hereditary_subrings().into_iter().filter(|(_, d)| *d == 6).collect();
    checks.push(check(&format!("{name}: no hereditary subring of dimension 6"), six.is_empty(), || format!("{six:?}")));
    checks
}

pub fn derivation_property_checks(table: &Table1Report) -> Report {
    let mut checks = Vec::new();
    for r in &table.rows {
        match &r.details {
            Some(d) => checks.extend(ring_property_checks(&format!("row {}", r.row), &d.fusion.ring)),
            None => checks.push(CheckResult::fail(&format!("row {}", r.row), "not computed".into())),
        }
    }
    Report { checks }
}

fn row(n: usize) -> ExpectedRow {
    expected_rows().into_iter().find(|r| r.row == n).expect("row")
}

fn matches_row(p: &InvariantProfile, e: &ExpectedRow) -> Result<(), String> {
    if p.group_h == e.group_h && p.group_hdual == e.group_hdual && p.k0_label == e.k0_label {
        Ok(())
    } else {
        Err(format!("{p} vs row {}", e.row))
    }
}

/// Result of the twist and smash coproduct suite, with the fusion computations it produced.
#[derive(Debug, Clone)]
pub struct TwistSuite {
    pub report: Report,
    pub fusion: Vec<(String, FusionComputation)>,
}

/// J_ω in the three hosts, the twisted algebras against rows 2, 12, 13, the smash coproduct against row 15.
pub fn twist_and_smash_checks() -> Result<TwistSuite, ClassifyError> {
    let mut checks = Vec::new();
    let mut fusion = Vec::new();
    let rows = [2, 12, 13];
    for (host, rown) in twist_hosts()?.into_iter().zip(rows) {
        let h = host.algebra();
        let j = host.j_omega(&h)?;
        let n = host.name;
        let c = h.basis_vec(host.c);
        let b = h.basis_vec(host.b);
        checks.push(check(&format!("{n}: J is a 2-cocycle"), j.is_two_cocycle(&h), || "boundary is not 1".into()));
        checks.push(check(&format!("{n}: J matches its group-element expansion"), j_omega_expanded(&h, &c, &b)? == j.tensor, || {
            "expansions differ".into()
        }));
        let (t, _) = host.twisted()?;
        checks.extend(prefixed(&format!("{n}_J axioms"), t.verify_axioms()));
        checks.push(check(&format!("{n}_J is not cocommutative"), !t.is_cocommutative(), || "cocommutative".into()));
        let g = &host.group;
        let named = |l: &str| g.index_of(l).map(|i| t.basis_vec(i));
        let gens: Option<Vec<Vec<CycNum>>> = match n {
            "k(D8xC2)" => ["a^2", "b", "c"].iter().map(|l| named(l)).collect(),
            "kD16" => {
                let half = CycNum::from_ratio(1, 2);
                let mut gg = vec![CycNum::zero(); t.dim()];
                for (l, s) in [("a^2", -1), ("a^2b", 1), ("a^6", 1), ("a^6b", 1)] {
                    if let Some(i) = g.index_of(l) {
                        gg[i] = &half * &CycNum::from_int(s);
                    }
                }
                named("b").map(|b| vec![gg, b])
            }
            _ => None,
        };
        if let Some(gens) = gens {
            let expect = if n == "kD16" { GroupLabel::D8 } else { GroupLabel::C2xC2xC2 };
            checks.push(from_result(
                &format!("{n}_J: the given grouplikes generate G(H) = {}", expect.name()),
                t.generate_grouplikes(&gens).and_then(|all| Ok(t.verify_grouplike_set(&all)?.identify()?)),
                |l| if l == expect { Ok(()) } else { Err(l.name().to_string()) },
            ));
        }
        let p = profile_generic(&t)?;
        checks.push(from_result(&format!("{n}_J has the invariants of row {rown}"), Ok::<_, String>(&p.profile), |pp| {
            matches_row(pp, &row(rown))
        }));
        fusion.push((format!("{n}_J"), p.fusion));
    }
    let s = smash_coproduct_q8()?;
    checks.extend(prefixed("kQ8#kC2 axioms", s.verify_axioms()));
    let cur = smash_curated(&s)?;
    let p = profile_curated(&s, &cur)?;
    checks.push(from_result("kQ8#kC2 has the invariants of row 15", Ok::<_, String>(&p.profile), |pp| matches_row(pp, &row(15))));
    let g = profile_generic(&s)?;
    checks.push(check("kQ8#kC2: curated and split profiles agree", g.profile == p.profile, || format!("{} vs {}", g.profile, p.profile)));
    fusion.push(("kQ8#kC2".into(), p.fusion));
    Ok(TwistSuite { report: Report { checks }, fusion })
}

/// Curated generator data against the data derived from the cocycles, the choice of √ω in
/// H_{C:σ₁}, and the sign of t̄ in the case b representations.
pub fn curation_cross_checks() -> Report {
    let mut checks = Vec::new();
    for name in NAMES {
        let data = catalog::data(name).expect("catalog entry");
        let h = data.build().expect("catalog entry builds");
        let cur = match catalog::curated(name, &h) {
            Ok(c) => c,
            Err(e) => {
                checks.push(CheckResult::fail(&format!("{name}: curated data"), e.to_string()));
                continue;
            }
        };
        let gl: HashSet<Vec<CycNum>> = h.generate_grouplikes(&cur.grouplike_generators).unwrap_or_default().into_iter().collect();
        let derived: HashSet<Vec<CycNum>> = data.grouplikes().into_iter().collect();
        checks.push(check(&format!("{name}: curated grouplikes equal derived grouplikes"), gl == derived, || {
            format!("{} curated, {} derived", gl.len(), derived.len())
        }));
        let chars = super::close_characters(&h, &cur.characters);
        let curated = super::expand_irreps(&h, &chars, &cur.irreps);
        let res = verify_irrep_set(&h, &data.irreps()).map_err(|e| e.to_string()).and_then(|set| {
            let mut hit = vec![0usize; set.irreps.len()];
            for r in &curated {
                hit[set.identify(r).map_err(|e| e.to_string())?] += 1;
            }
            if hit.iter().all(|&x| x == 1) {
                Ok(())
            } else {
                Err(format!("hits {hit:?}"))
            }
        });
        checks.push(from_result(&format!("{name}: curated irreps match derived irreps"), Ok::<_, String>(res), |r| r));
    }

    // the other square root of omega in pi1 of H_{C:σ₁}
    let data = catalog::data("HC1s").expect("catalog entry");
    let h = data.build().expect("catalog entry builds");
    let res = catalog::curated("HC1s", &h).map_err(|e| e.to_string()).and_then(|cur| {
        let pi1 = cur.irreps.iter().find(|r| r.label == "pi1").ok_or("pi1")?.clone();
        let alt_root = CycNum::root_of_unity(9);
        let t = Matrix::from_rows(vec![vec![CycNum::zero(), alt_root.clone()], vec![alt_root, CycNum::zero()]]);
        let mut gens: Vec<(Vec<CycNum>, Matrix)> = (0..8)
            .map(|g| {
                let v = data.element(0, |x| if x == g { CycNum::one() } else { CycNum::zero() });
                (v.clone(), pi1.of_element(&v))
            })
            .collect();
        gens.push((data.tbar(), t));
        let alt = Representation::from_generators(&h, "pi1'", &gens).map_err(|e| e.to_string())?;
        alt.verify(&h).map_err(|e| e.to_string())?;
        if intertwiner_dimension(&alt, &pi1) == 1 {
            Ok(())
        } else {
            Err("inequivalent".into())
        }
    });
    checks.push(from_result("H_C(sigma_1): the other square root of omega gives an equivalent pi1", Ok::<_, String>(res), |r| r));

    // only one sign of t̄ is admissible in the case b representation
    for (name, good) in [("Hb1", 1), ("Hby", 1), ("Hbx2y", -1)] {
        let data = catalog::data(name).expect("catalog entry");
        let h = data.build().expect("catalog entry builds");
        let gens = catalog::generators(&data, Family::C4xC2);
        let get = |n: &str| gens.iter().find(|(g, _)| *g == n).map(|(_, v)| v.clone()).expect("generator");
        let (z, o, i) = (CycNum::zero(), CycNum::one(), CycNum::i());
        let y_img = Matrix::identity(2);
        let try_sign = |s: i64| {
            let t = Matrix::from_rows(vec![vec![z.clone(), CycNum::from_int(s)], vec![o.clone(), z.clone()]]);
            Representation::from_generators(
                &h,
                "pi",
                &[(get("x"), Matrix::diag(&[i.clone(), -i.clone()])), (get("y"), y_img.clone()), (get("t"), t)],
            )
            .and_then(|r| r.verify(&h).map(|_| r))
            .is_ok()
        };
        checks.push(check(&format!("{name}: t -> [[0,{good}],[1,0]] is a representation, the opposite sign is not"), try_sign(good) && !try_sign(-good), || {
            format!("sign {good}: {}, sign {}: {}", try_sign(good), -good, try_sign(-good))
        }));
    }
    Report { checks }
}

/// Everything the `checks` command runs, given a computed table.
pub fn all_suites(table: &Table1Report) -> Result<Vec<(String, Report)>, ClassifyError> {
    let mut out = Vec::new();
    let axioms = axiom_suite()?;
    out.push(("axioms".into(), Report { checks: axioms.into_iter().flat_map(|(n, r)| prefixed(&n, r)).collect() }));
    let groups = group_fusion_rings()?;
    out.push(("group K0".into(), group_fusion_checks(&groups)));
    let ts = twist_and_smash_checks()?;
    let mut rings: Vec<(String, &FusionComputation)> = Vec::new();
    for r in &table.rows {
        if let Some(d) = &r.details {
            rings.push((format!("row {}", r.row), &d.fusion));
        }
    }
    for g in &groups {
        rings.push((format!("k{}", g.group), &g.computation));
    }
    for (n, f) in &ts.fusion {
        rings.push((n.clone(), f));
    }
    out.push(("fusion identities".into(), fusion_identity_checks(&rings)));
    out.push(("cocycles".into(), cocycle_derivation_checks()));
    let isos = explicit_isomorphisms();
    out.push((
        "isomorphisms".into(),
        Report { checks: isos.into_iter().flat_map(|r| prefixed(&format!("{} {}", r.family, r.name), r.report)).collect() },
    ));
    let row1 = table.rows.first().and_then(|r| r.computed.as_ref());
    out.push(("quotients".into(), quotient_checks(row1)));
    out.push(("structure".into(), theorem_instance_checks(table)));
    out.push(("properties".into(), derivation_property_checks(table)));
    out.push(("twists".into(), ts.report));
    out.push(("curation".into(), curation_cross_checks()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_report(r: &Report) {
        let f: Vec<String> = r.failures().iter().map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default())).collect();
        assert!(f.is_empty(), "{}", f.join("\n"));
    }

    #[test]
    fn cocycle_derivations() {
        assert_report(&cocycle_derivation_checks());
    }

    #[test]
    fn isomorphism_families() {
        let f: Vec<String> = explicit_isomorphisms()
            .iter()
            .filter(|r| !r.passed())
            .map(|r| format!("{} {}: {:?}", r.family, r.name, r.report.failures()))
            .collect();
        assert!(f.is_empty(), "{}", f.join("\n"));
    }

    #[test]
    fn quotients() {
        assert_report(&quotient_checks(Some(&super::super::profile_entry("Hd-+").unwrap().profile)));
    }

    #[test]
    fn curation() {
        assert_report(&curation_cross_checks());
    }

    #[test]
    fn twists_and_smash() {
        assert_report(&twist_and_smash_checks().unwrap().report);
    }

    #[test]
    fn group_rings() {
        let rings = group_fusion_rings().unwrap();
        assert_report(&group_fusion_checks(&rings));
    }
}
