//! Acceptance suite: runs every criterion of the verification program and
//! prints one PASS/FAIL line per criterion.
//!
//! Criteria 1-8 are the sections of the built-in `verify-paper` suite at
//! their stated tolerances (all checks are exact); criterion 9 is output
//! determinism: two independent runs must render byte-identical reports.

use qdp_core::caps::Caps;
use qdp_core::report::Verdict;
use qdp_core::verify::{verify_paper, Scope};

struct Criterion {
    number: usize,
    section: &'static str,
    title: &'static str,
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, section: "constructors", title: "constructor orders and presentation relations" },
    Criterion { number: 2, section: "lemma-2.1", title: "rank-two family structure at p = 5" },
    Criterion { number: 3, section: "theorem-1.1", title: "involves iff p'-involves on the Qd(5) family" },
    Criterion { number: 4, section: "example-2.2", title: "the order-648 cover end to end" },
    Criterion { number: 5, section: "example-2.3", title: "the order-48 double cover" },
    Criterion { number: 6, section: "fusion", title: "fusion-control oracle agreement and Burnside cross-check" },
    Criterion { number: 7, section: "stellmacher", title: "sandwich witnesses on the Qd-free corpus" },
    Criterion { number: 8, section: "characters", title: "reciprocity, effectiveness and fusion-respect" },
];

#[test]
fn acceptance() {
    let caps = Caps::default();
    let report = verify_paper(&Scope::All, &caps, None);

    let mut all_ok = true;
    for criterion in CRITERIA {
        let checks: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.section == criterion.section)
            .collect();
        let failed: Vec<_> = checks
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .collect();
        let skipped = checks.iter().filter(|c| c.verdict == Verdict::Skipped).count();
        let ok = !checks.is_empty() && failed.is_empty() && skipped == 0;
        println!(
            "criterion {}: {} - {} ({} checks)",
            criterion.number,
            if ok { "PASS" } else { "FAIL" },
            criterion.title,
            checks.len()
        );
        for f in failed {
            println!("    failed: {}/{} witness: {}", f.section, f.id, f.witness);
        }
        all_ok &= ok;
    }

    // criterion 9: determinism, two full runs byte-identical in both formats
    let second = verify_paper(&Scope::All, &caps, None);
    let deterministic = report.render_json_lines() == second.render_json_lines()
        && report.render_text() == second.render_text();
    println!(
        "criterion 9: {} - byte-identical reports across runs",
        if deterministic { "PASS" } else { "FAIL" }
    );
    all_ok &= deterministic;

    assert!(all_ok, "acceptance criteria failed; see lines above");
}
