//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! `--slow` (or `VVKIT_SLOW=1`) adds the extra seeds and the larger cases.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use vvkit::repro::{conjecture_experiment, run_claim, ClaimStatus, ReproOptions};

struct Outcome {
    ok: bool,
    note: String,
}

fn claims(ids: &[&str], opts: &ReproOptions) -> Outcome {
    let mut failed = Vec::new();
    for id in ids {
        match run_claim(id, opts) {
            Ok(r) if r.status == ClaimStatus::Pass => {}
            Ok(r) => failed.push(format!("{id}: {}", r.failed_checks().join("; "))),
            Err(e) => failed.push(format!("{id}: error {e}")),
        }
    }
    Outcome {
        ok: failed.is_empty(),
        note: if failed.is_empty() {
            ids.join(" + ")
        } else {
            failed.join(" | ")
        },
    }
}

fn props() -> Outcome {
    use common::*;
    let runs: [(&str, Check); 6] = [
        ("gb canonicity x100", gb_canonicity(100, 11)),
        ("hilbert function x100", hilbert_function_oracle(100, 12)),
        ("membership x100", membership_oracle(100, 13)),
        ("containments x40", ideal_containments(40, 14)),
        ("euler x100", euler_identity(100, 15)),
        ("coordinate changes x5", projective_invariance(5, 16)),
    ];
    let failed: Vec<String> = runs
        .iter()
        .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")))
        .collect();
    Outcome {
        ok: failed.is_empty(),
        note: if failed.is_empty() {
            runs.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
        } else {
            failed.join(" | ")
        },
    }
}

fn conjecture() -> Outcome {
    match conjecture_experiment(6, 1, 3) {
        Ok(trials) => {
            let held = trials.iter().filter(|t| t.contains_m_2d_minus_2).count();
            Outcome {
                ok: true,
                note: format!("experimental: m^10 ⊆ I in {held}/{} trials", trials.len()),
            }
        }
        Err(e) => Outcome {
            ok: false,
            note: format!("error {e}"),
        },
    }
}

fn main() -> ExitCode {
    let slow = std::env::args().any(|a| a == "--slow")
        || std::env::var("VVKIT_SLOW").is_ok_and(|v| v == "1");
    let opts = ReproOptions { slow };
    let min = |m: u64| Some(Duration::from_secs(60 * m));

    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Option<Duration>, &str, Run)> = vec![
        ("AC1", Some(Duration::from_secs(5)), "", Box::new(|| claims(&["R15b"], &opts))),
        ("AC2", min(1), "", Box::new(|| claims(&["T22-claim"], &opts))),
        (
            "AC3",
            min(10),
            "E checked as y^(2s-8)G + yz^(2s-3); the printed minus sign gives an element outside J",
            Box::new(|| claims(&["T23"], &opts)),
        ),
        (
            "AC4",
            min(30),
            "generator uses (-1)^s e y and the witness tail f(0,1) yz^(3s-14); printed forms are outside J at s = 9",
            Box::new(|| claims(&["T24"], &opts)),
        ),
        ("AC5", min(10), "", Box::new(|| claims(&["P41"], &opts))),
        ("AC6", min(45), "", Box::new(|| claims(&["P44", "P44-w"], &opts))),
        ("AC7", min(2), "", Box::new(|| claims(&["P42"], &opts))),
        ("AC8", min(10), "", Box::new(|| claims(&["P43", "P43-d4", "P43-d5"], &opts))),
        ("AC9", min(5), "", Box::new(|| claims(&["ATFN"], &opts))),
        ("AC10", min(5), "", Box::new(props)),
        ("AC11", None, "", Box::new(conjecture)),
    ];

    let mut all_ok = true;
    for (id, budget, remark, run) in &criteria {
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if let Some(b) = budget {
            if took > *b {
                out.ok = false;
                out.note = format!("{} (over budget of {}s)", out.note, b.as_secs());
            }
        }
        all_ok &= out.ok;
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        let remark = if remark.is_empty() {
            String::new()
        } else {
            format!(" [{remark}]")
        };
        println!(
            "{id} {verdict} {:.2}s {}{remark}",
            took.as_secs_f64(),
            out.note
        );
    }
    if slow {
        println!("(slow mode)");
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
