//! Seeded property suites over the rewriting procedures.

use std::fmt;

use rand::Rng;

use super::gen::{
    gen_random_null_homotopic, random_balanced, random_marked_balanced, random_with_alternating,
    random_word, random_zero_sum_word, rng_from_seed,
};
use crate::filling::alg5_fill;
use crate::group::{equal_in_s, eliminate_pinches, is_balanced, project_normal_form};
use crate::metrics::{insertion_count, metric_p, metric_q, metric_r, sign_repeats};
use crate::rewriting::{
    alg1_preferred, alg3_alternate, alg3_states, alg4_balanced_to_preferred,
    alternation_cost_bound, alternation_growth_bound, find_balanced_subword, preferred_form,
    recognize_preferred, Filler,
};
use crate::word::{Base, Generator, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    /// First failing input and the check it failed.
    pub counterexample: Option<(String, String)>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: passed={} failed={}", self.name, self.passed, self.failed)?;
        if let Some((word, reason)) = &self.counterexample {
            write!(f, " counterexample={word:?} ({reason})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub suites: Vec<SuiteResult>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

struct Tally {
    result: SuiteResult,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            result: SuiteResult {
                name,
                passed: 0,
                failed: 0,
                counterexample: None,
            },
        }
    }

    fn record(&mut self, input: &dyn fmt::Display, outcome: Check) {
        match outcome {
            Ok(()) => self.result.passed += 1,
            Err(reason) => {
                self.result.failed += 1;
                self.result
                    .counterexample
                    .get_or_insert_with(|| (input.to_string(), reason));
            }
        }
    }
}

fn seeded(seed: u64, salt: u64) -> rand_chacha::ChaCha8Rng {
    rng_from_seed(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Every zero-sum s-free word of length 0 or 2.
fn short_zero_sum_words() -> Vec<Word> {
    let letters: Vec<Generator> = Generator::all().filter(|g| !g.is_s()).collect();
    let mut out = vec![Word::empty()];
    for &x in &letters {
        for &y in &letters {
            if x.sign != y.sign {
                out.push(Word::from(vec![x, y]));
            }
        }
    }
    out
}

fn check_preferred(u: &Word, filler: Filler) -> Check {
    let (v, d) = preferred_form(u, filler).map_err(|e| e.to_string())?;
    ensure(v.is_alternating(), || format!("output {v} is not alternating"))?;
    ensure(equal_in_s(u, &v), || format!("output {v} differs from the input in S"))?;
    ensure(v.len() <= 3 * u.len(), || format!("output {v} longer than 3l(u)"))?;
    ensure(d.assemble_with(filler) == v, || "decomposition does not assemble".into())?;
    let out = alg1_preferred(u).map_err(|e| e.to_string())?;
    let replay = out.trace.validate().map_err(|e| e.to_string())?;
    ensure(replay.end == out.v, || "trace does not end at the output".into())?;
    let l = u.len() as u64;
    ensure(replay.cost <= 10 * l * l, || format!("cost {} above 10l(u)^2", replay.cost))?;
    let kept: Word = out
        .v
        .iter()
        .zip(&out.inserted)
        .filter(|(_, &i)| !i)
        .map(|(g, _)| *g)
        .collect();
    let nf = project_normal_form(u).expect("s-free");
    ensure(kept == nf.ab_part.concat(&nf.cd_part), || {
        "deleting inserted letters does not give the reduced product form".into()
    })?;
    ensure(recognize_preferred(&out.v).is_some(), || "output not recognised as preferred".into())
}

/// Preferred-form construction: length, cost, alternation and equality.
pub fn preferred_form_suite(seed: u64, trials: u64, max_len: usize, filler: Filler) -> SuiteResult {
    let mut t = Tally::new("preferred-form");
    for u in short_zero_sum_words() {
        t.record(&u, check_preferred(&u, filler));
    }
    let mut rng = seeded(seed, 1);
    for _ in 0..trials {
        let u = random_zero_sum_word(&mut rng, max_len);
        t.record(&u, check_preferred(&u, filler));
    }
    t.result
}

pub fn check_alternation(tau: &Word) -> Check {
    let out = alg3_alternate(tau).map_err(|e| e.to_string())?;
    let replay = out.trace.validate().map_err(|e| e.to_string())?;
    let hat = &out.word;
    ensure(replay.end == *hat, || "trace does not end at the output".into())?;
    ensure(hat.is_alternating(), || format!("output {hat} is not alternating"))?;
    ensure(
        project_normal_form(hat).ok() == project_normal_form(tau).ok(),
        || format!("output {hat} differs in the product group"),
    )?;
    ensure(hat.len() >= tau.len(), || "output shorter than input".into())?;
    let (p, q, r) = (metric_p(tau).unwrap(), metric_q(tau), metric_r(tau));
    ensure(metric_q(hat) == q, || format!("Q changed from {q} to {}", metric_q(hat)))?;
    let growth = (hat.len() - tau.len()) as u64;
    let gb = alternation_growth_bound(p, q, r);
    ensure(growth <= gb, || format!("growth {growth} above {gb}"))?;
    let cb = alternation_cost_bound(tau.len() as u64, q, r);
    ensure(replay.cost <= cb, || format!("cost {} above {cb}", replay.cost))?;
    let kept: Word = hat
        .iter()
        .zip(&out.inserted)
        .filter(|(_, &i)| !i)
        .map(|(g, _)| *g)
        .collect();
    ensure(kept == *tau, || "deleting inserted letters does not give the input".into())?;
    let target = project_normal_form(tau).ok();
    for st in alg3_states(tau).map_err(|e| e.to_string())? {
        let joined = st.alpha.concat(&st.delta.word()).concat(&st.beta);
        ensure(project_normal_form(&joined).ok() == target, || {
            format!("intermediate {joined} differs in the product group")
        })?;
    }
    Ok(())
}

/// Left-to-right alternation: all length, Q and cost bounds.
pub fn alternation_suite(seed: u64, trials: u64, max_len: usize) -> SuiteResult {
    let mut t = Tally::new("alternation");
    let mut rng = seeded(seed, 2);
    for _ in 0..trials {
        let tau = random_zero_sum_word(&mut rng, max_len);
        t.record(&tau, check_alternation(&tau));
    }
    t.result
}

fn check_p_removal(tau: &Word, marks: &[crate::word::Interval]) -> Check {
    ensure(insertion_count(tau) == sign_repeats(tau), || {
        "insertion simulation disagrees with the sign-repeat count".into()
    })?;
    let mut keep = vec![true; tau.len()];
    for iv in marks {
        keep[iv.range()].iter_mut().for_each(|k| *k = false);
    }
    let bar: Word = tau.iter().zip(&keep).filter(|(_, &k)| k).map(|(g, _)| *g).collect();
    ensure(insertion_count(&bar) == sign_repeats(&bar), || {
        "insertion simulation disagrees on the reduced word".into()
    })?;
    let (p, p_bar) = (metric_p(tau).unwrap(), metric_p(&bar).unwrap());
    let limit = p_bar + 2 * marks.len() as u64;
    ensure(p <= limit, || format!("P = {p} above {limit}"))
}

/// Removing `p` alternating subwords lowers P by at most `2p`.
pub fn p_removal_suite(seed: u64, trials: u64, max_len: usize) -> SuiteResult {
    let mut t = Tally::new("p-removal");
    let mut rng = seeded(seed, 3);
    for _ in 0..trials {
        let (tau, marks) = random_with_alternating(&mut rng, max_len);
        t.record(&tau, check_p_removal(&tau, &marks));
    }
    t.result
}

pub fn check_balanced_subword(mu: &Word) -> Check {
    for k in 4..=mu.len() {
        let iv = find_balanced_subword(mu, k).map_err(|e| format!("k={k}: {e}"))?;
        let u = &mu[iv.range()];
        ensure(is_balanced(u), || format!("k={k}: {iv} not balanced"))?;
        ensure(2 * u.len() >= k && u.len() <= k, || {
            format!("k={k}: {iv} has length {}", u.len())
        })?;
    }
    Ok(())
}

/// Balanced subwords of every size between `k/2` and `k`.
pub fn balanced_subword_suite(seed: u64, trials: u64, max_len: usize) -> SuiteResult {
    let mut t = Tally::new("balanced-subword");
    let mut rng = seeded(seed, 4);
    for _ in 0..trials {
        let len = rng.gen_range(4..=max_len.max(4));
        let mu = random_balanced(&mut rng, len);
        t.record(&mu, check_balanced_subword(&mu));
    }
    t.result
}

/// A word with a balanced subword is balanced iff the word with that
/// subword cut out is.
pub fn balanced_splice_suite(seed: u64, trials: u64, max_len: usize) -> SuiteResult {
    let mut t = Tally::new("balanced-splice");
    let mut rng = seeded(seed, 5);
    for _ in 0..trials {
        let outer = if rng.gen_bool(0.5) {
            let len = rng.gen_range(0..=max_len);
            random_balanced(&mut rng, len)
        } else {
            let len = rng.gen_range(0..=max_len / 2);
            random_word(&mut rng, len, true)
        };
        let len = rng.gen_range(0..=max_len);
        let inner = random_balanced(&mut rng, len);
        let cut = rng.gen_range(0..=outer.len());
        let whole = outer.slice(0..cut).concat(&inner).concat(&outer.slice(cut..outer.len()));
        t.record(
            &whole,
            ensure(is_balanced(&whole) == is_balanced(&outer), || {
                format!("splicing {inner} into {outer} changed balance")
            }),
        );
    }
    t.result
}

/// Balanced words are exactly the zero-sum words of the base group that
/// commute with `s`.
pub fn centraliser_suite(seed: u64, trials: u64, max_len: usize) -> SuiteResult {
    let mut t = Tally::new("centraliser");
    let mut rng = seeded(seed, 6);
    let s = Word::from(vec![Generator::new(Base::S, Sign::Pos)]);
    for _ in 0..trials {
        let len = rng.gen_range(0..=max_len);
        let mut u = random_balanced(&mut rng, len);
        if rng.gen_bool(0.5) {
            let (len, with_s) = (rng.gen_range(1..=3), rng.gen_bool(0.3));
            let extra = random_word(&mut rng, len, with_s);
            let at = rng.gen_range(0..=u.len());
            u = u.slice(0..at).concat(&extra).concat(&u.slice(at..u.len()));
        }
        let in_base = eliminate_pinches(&u).is_complete();
        let commutes = equal_in_s(&s.concat(&u), &u.concat(&s));
        let claim = in_base && commutes;
        t.record(
            &u,
            ensure(claim == is_balanced(&u), || {
                format!("base={in_base} commutes={commutes} balanced={}", is_balanced(&u))
            }),
        );
    }
    t.result
}

fn check_balanced_to_preferred(u: &Word, marks: &[crate::word::Interval]) -> Check {
    let out = alg4_balanced_to_preferred(u, marks).map_err(|e| e.to_string())?;
    let replay = out.trace.validate().map_err(|e| e.to_string())?;
    ensure(replay.end == out.v, || "trace does not end at the output".into())?;
    ensure(equal_in_s(u, &out.v), || "output differs in S".into())?;
    ensure(out.decomposition.assemble() == out.v, || "decomposition mismatch".into())?;
    ensure(recognize_preferred(&out.v).is_some(), || "output not preferred".into())?;
    ensure(replay.cost <= out.stats.bound, || {
        format!("cost {} above {}", replay.cost, out.stats.bound)
    })
}

/// Balanced words with marked preferred subwords: equality, preferred
/// output and the cost bound.
pub fn balanced_to_preferred_suite(seed: u64, trials: u64, max_len: usize) -> SuiteResult {
    let mut t = Tally::new("balanced-to-preferred");
    let mut rng = seeded(seed, 7);
    for _ in 0..trials {
        let free = rng.gen_range(2..=max_len.max(2));
        let marks = rng.gen_range(0..=3);
        let (u, ivs) = random_marked_balanced(&mut rng, free, marks, 12);
        if u.len() < 2 {
            continue;
        }
        t.record(&u, check_balanced_to_preferred(&u, &ivs));
    }
    t.result
}

pub fn check_fill(w: &Word) -> Check {
    let r = alg5_fill(w, None).map_err(|e| e.to_string())?;
    let replay = r.trace.validate().map_err(|e| e.to_string())?;
    ensure(replay.end.is_empty(), || "trace does not end at the empty word".into())?;
    ensure(replay.cost == r.cost, || "reported cost differs from replay".into())?;
    if r.n >= 4 {
        ensure(replay.cost as u128 <= r.bound, || {
            format!("cost {} above bound {}", replay.cost, r.bound)
        })?;
        ensure(r.rounds * r.k <= 2 * r.n, || format!("{} rounds with k={}", r.rounds, r.k))?;
        ensure(r.max_len <= 3 * r.n, || format!("intermediate length {}", r.max_len))?;
    }
    let mut prev = (w.s_count(), 0);
    for (i, h) in r.history.iter().enumerate() {
        ensure(h.marks_valid, || format!("round {i}: a mark is not preferred"))?;
        ensure(h.s_letters <= prev.0, || format!("round {i}: s letters went up"))?;
        ensure(h.marks <= prev.1 + 1, || format!("round {i}: marks rose by more than one"))?;
        prev = (h.s_letters, h.marks);
    }
    ensure(r.history.is_empty() || prev.0 == 0, || "s letters remain after the last round".into())?;
    Ok(())
}

/// End-to-end fills of random null-homotopic words.
pub fn fill_suite(seed: u64, trials: u64, max_conjugates: usize) -> SuiteResult {
    let mut t = Tally::new("fill");
    let mut rng = seeded(seed, 8);
    for _ in 0..trials {
        let m = rng.gen_range(1..=max_conjugates.max(1));
        let l = rng.gen_range(0..=3);
        let w = gen_random_null_homotopic(rng.gen(), m, l);
        t.record(&w, check_fill(&w));
    }
    t.result
}

pub fn check_lemmas(trials: u64, seed: u64) -> LemmaReport {
    check_lemmas_with(trials, seed, Filler::CaInv)
}

/// All suites; `filler` selects the block used by the preferred-form suite.
pub fn check_lemmas_with(trials: u64, seed: u64, filler: Filler) -> LemmaReport {
    LemmaReport {
        suites: vec![
            preferred_form_suite(seed, trials, 60, filler),
            alternation_suite(seed, trials, 60),
            p_removal_suite(seed, trials, 60),
            balanced_subword_suite(seed, trials, 60),
            balanced_splice_suite(seed, trials, 30),
            centraliser_suite(seed, trials, 30),
            balanced_to_preferred_suite(seed, trials, 30),
            fill_suite(seed, trials, 6),
        ],
    }
}
