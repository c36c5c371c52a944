//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Seeds default to 7 and follow `DEHNFORGE_SEED` when set.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dehnforge::filling::{alg5_fill, area_upper_bound, default_k};
use dehnforge::harness::{
    alternation_suite, balanced_subword_suite, fit_records, p_removal_suite,
    preferred_form_suite, rng_from_seed, survey_records, FamilyKind, SuiteResult,
};
use dehnforge::oracle::{brute_area, enumerate_null_homotopic};
use dehnforge::presentation::relators;
use dehnforge::rewriting::Filler;
use rand::Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(r: SuiteResult) -> Outcome {
    Outcome {
        ok: r.ok(),
        detail: r.to_string(),
    }
}

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let out = f();
    let took = t.elapsed();
    let ok = out.ok && took <= limit;
    println!(
        "{} {id} {name}: {} [{:.1}s, limit {}s]",
        if ok { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn certify_family(family: FamilyKind, seed: u64) -> Outcome {
    let mut rng = rng_from_seed(seed ^ family as u64);
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let target = rng.gen_range(8..=512);
        let w = family.word_for_length(target, seed.wrapping_add(i));
        let n = w.len() as u64;
        let verdict = alg5_fill(&w, None).map_err(|e| e.to_string()).and_then(|r| {
            let replay = r.trace.validate().map_err(|e| e.to_string())?;
            if !replay.end.is_empty() {
                return Err(format!("trace ends at {}", replay.end));
            }
            let k = default_k(n).map_err(|e| e.to_string())?;
            let bound = area_upper_bound(n, k).map_err(|e| e.to_string())?;
            if replay.cost as u128 > bound {
                return Err(format!("cost {} above {bound}", replay.cost));
            }
            Ok(replay.cost as f64 / bound as f64)
        });
        match verdict {
            Ok(ratio) => worst = worst.max(ratio),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: format!(
            "{}: 200 words, {} failures, max cost/bound {worst:.2e}{}",
            family.name(),
            failures.len(),
            failures.first().map(|f| format!(", first {f}")).unwrap_or_default()
        ),
    }
}

fn oracle_cross_check() -> Outcome {
    let mut problems = Vec::new();
    for rel in relators() {
        let r = brute_area(rel, 12, 4);
        if r.area != Some(1) || r.exhausted {
            problems.push(format!("relator {rel}: {:?} exhausted={}", r.area, r.exhausted));
        }
    }
    let words = match enumerate_null_homotopic(6, false) {
        Ok(w) => w,
        Err(e) => {
            return Outcome {
                ok: false,
                detail: e.to_string(),
            }
        }
    };
    let mut exact = 0;
    for w in &words {
        let r = brute_area(w, 12, 6);
        let Some(area) = r.area else {
            problems.push(format!("{w}: no area within caps"));
            continue;
        };
        exact += !r.exhausted as usize;
        match r.witness.map(|t| t.validate()) {
            Some(Ok(rep)) if rep.end.is_empty() && rep.cost == area => {}
            _ => problems.push(format!("{w}: witness does not certify {area}")),
        }
        match alg5_fill(w, None) {
            Ok(f) if area <= f.cost => {}
            Ok(f) => problems.push(format!("{w}: oracle {area} above fill {}", f.cost)),
            Err(e) => problems.push(format!("{w}: {e}")),
        }
    }
    Outcome {
        ok: problems.is_empty(),
        detail: format!(
            "10 relators at area 1, exact; {} enumerated words, {exact} exact, {} capped upper bounds{}",
            words.len(),
            words.len() - exact,
            problems.first().map(|p| format!("; first problem {p}")).unwrap_or_default()
        ),
    }
}

fn growth(seed: u64) -> Outcome {
    let limit = 7.0 / 3.0 + 0.2;
    match survey_records(FamilyKind::Hnn, 64, 1024, 1, seed).and_then(|rows| {
        let certified = rows.iter().all(|r| r.cost as u128 <= r.bound && r.len_final == 0);
        Ok((fit_records(&rows)?, certified))
    }) {
        Ok((fit, certified)) => Outcome {
            ok: certified && fit.slope <= limit,
            detail: format!("hnn slope {:.3} (limit {limit:.3}), rows certified={certified}", fit.slope),
        },
        Err(e) => Outcome {
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn mutation(seed: u64) -> Outcome {
    let r = preferred_form_suite(seed, 1000, 60, Filler::AcInv);
    Outcome {
        ok: r.counterexample.is_some(),
        detail: format!("literal (ac⁻¹)^κ filler: {r}"),
    }
}

fn main() -> ExitCode {
    let seed = std::env::var("DEHNFORGE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let secs = Duration::from_secs;
    let results = [
        run(1, "preferred form", secs(60), || {
            suite(preferred_form_suite(seed, 1000, 60, Filler::CaInv))
        }),
        run(2, "to alternating", secs(60), || suite(alternation_suite(seed, 1000, 60))),
        run(3, "P with alternating subwords removed", secs(600), || {
            suite(p_removal_suite(seed, 1000, 60))
        }),
        run(4, "balanced existence", secs(120), || {
            suite(balanced_subword_suite(seed, 500, 200))
        }),
        run(5, "theorem certificate", secs(600), || {
            let outs: Vec<Outcome> =
                FamilyKind::ALL.iter().map(|&f| certify_family(f, seed)).collect();
            Outcome {
                ok: outs.iter().all(|o| o.ok),
                detail: outs.iter().map(|o| o.detail.as_str()).collect::<Vec<_>>().join("; "),
            }
        }),
        run(6, "oracle cross-validation", secs(300), oracle_cross_check),
        run(7, "growth exponent", secs(900), || growth(seed)),
        run(8, "mutation sensitivity", secs(600), || mutation(seed)),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
