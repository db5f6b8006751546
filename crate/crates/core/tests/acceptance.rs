use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hopf16_core::classify::checks::{
    axiom_suite, cocycle_derivation_checks, derivation_property_checks, explicit_isomorphisms,
    fusion_identity_checks, group_fusion_checks, group_fusion_rings, quotient_checks, theorem_instance_checks,
    twist_and_smash_checks,
};
use hopf16_core::classify::reproduce_table1;
use hopf16_core::fusion::FusionComputation;
use hopf16_core::hopf::Report;

// Runs without the libtest harness so the per-criterion lines are always printed.

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn from_report(r: &Report) -> Self {
        Outcome {
            failures: r
                .failures()
                .iter()
                .map(|c| format!("{}: {}", c.name, c.detail.as_deref().unwrap_or("failed")))
                .collect(),
        }
    }
}

fn record(results: &mut Vec<(usize, bool)>, n: usize, title: &str, checks: usize, out: Outcome) {
    let ok = out.failures.is_empty();
    println!("criterion {n}: {} {title} ({checks} checks)", if ok { "PASS" } else { "FAIL" });
    for f in &out.failures {
        println!("    {f}");
    }
    results.push((n, ok));
}

fn main() -> std::process::ExitCode {
    let mut results = Vec::new();

    // 1
    let start = Instant::now();
    let axioms = axiom_suite().expect("algebras build");
    let elapsed = start.elapsed();
    let mut failures: Vec<String> = axioms
        .iter()
        .flat_map(|(n, r)| Outcome::from_report(r).failures.into_iter().map(move |f| format!("{n}: {f}")))
        .collect();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}"));
    }
    let count = axioms.iter().map(|(_, r)| r.checks.len()).sum();
    record(&mut results, 1, &format!("axiom suite on {} algebras in {elapsed:.1?}", axioms.len()), count, Outcome { failures });

    // 2
    let table = reproduce_table1();
    let mut failures: Vec<String> =
        table.rows.iter().filter(|r| !r.passed()).map(|r| format!("row {}: {}", r.row, r.errors.join("; "))).collect();
    failures.extend(Outcome::from_report(&table.duality).failures);
    if table.rows_passed() != 16 {
        failures.push(format!("{}/16 rows", table.rows_passed()));
    }
    record(&mut results, 2, "16-row classification table with duality pairings", 16 + table.duality.checks.len(), Outcome { failures });

    // 3
    let groups = group_fusion_rings().expect("group fusion rings");
    let r = group_fusion_checks(&groups);
    let labels: BTreeSet<&str> = groups.iter().filter_map(|g| g.label).collect();
    let mut out = Outcome::from_report(&r);
    if labels.len() != 6 {
        out.failures.push(format!("groups reach {} references", labels.len()));
    }
    record(&mut results, 3, "seven references, nine groups onto six", r.checks.len(), out);

    // 4
    let ts = twist_and_smash_checks().expect("twists build");
    let mut rings: Vec<(String, &FusionComputation)> = Vec::new();
    for row in &table.rows {
        if let Some(d) = &row.details {
            rings.push((format!("row {}", row.row), &d.fusion));
        }
    }
    for g in &groups {
        rings.push((format!("k{}", g.group), &g.computation));
    }
    for (n, f) in &ts.fusion {
        rings.push((n.clone(), f));
    }
    let r = fusion_identity_checks(&rings);
    let pairs: usize = rings.iter().map(|(_, f)| f.pairs).sum();
    let agree: usize = rings.iter().map(|(_, f)| f.oracle_agreements).sum();
    let mut out = Outcome::from_report(&r);
    if rings.len() < 16 + 9 + 4 || pairs != agree {
        out.failures.push(format!("{} rings, {agree}/{pairs} pairs agree", rings.len()));
    }
    record(&mut results, 4, &format!("fusion identities on {} rings, {agree}/{pairs} pairs agree", rings.len()), r.checks.len(), out);

    // 5
    let r = cocycle_derivation_checks();
    record(&mut results, 5, "cocycle derivations", r.checks.len(), Outcome::from_report(&r));

    // 6
    let isos = explicit_isomorphisms();
    let families: BTreeSet<String> = isos.iter().map(|i| i.family.clone()).collect();
    let expected = ["case a f", "case b f", "case c f", "case d f", "case d f'", "Case B f", "Case B f'", "Case C f", "Case E f"];
    let mut failures: Vec<String> =
        isos.iter().filter(|i| !i.passed()).map(|i| format!("{} {}", i.family, i.name)).collect();
    for f in expected {
        if !families.contains(f) {
            failures.push(format!("missing family {f}"));
        }
    }
    record(&mut results, 6, &format!("{} explicit isomorphisms in {} families", isos.len(), families.len()), isos.len(), Outcome { failures });

    // 7
    let row1 = table.rows.first().and_then(|r| r.computed.as_ref());
    let r = quotient_checks(row1);
    record(&mut results, 7, "central grouplike quotients", r.checks.len(), Outcome::from_report(&r));

    // 8
    let r = theorem_instance_checks(&table);
    record(&mut results, 8, "structural statements on instances", r.checks.len(), Outcome::from_report(&r));

    // 9
    let r = derivation_property_checks(&table);
    record(&mut results, 9, "character action and hereditary subring properties", r.checks.len(), Outcome::from_report(&r));

    // 10
    record(&mut results, 10, "twists and smash coproduct", ts.report.checks.len(), Outcome::from_report(&ts.report));

    let failed: Vec<usize> = results.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    println!("acceptance: {}/{} criteria pass", results.len() - failed.len(), results.len());
    if failed.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
