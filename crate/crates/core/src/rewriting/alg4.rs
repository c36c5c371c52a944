//! Conversion of a balanced word into preferred alternating form by
//! removing its `s` letters pinch by pinch.

use super::{
    alg1_preferred, alg3_alternate, balanced_cost_bound, recognize_preferred, shuffle_s_through,
    PreferredDecomposition, RewriteError,
};
use crate::group::{find_pinch, is_balanced};
use crate::trace::{Trace, TraceBuilder};
use crate::word::{Interval, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alg4Stats {
    pub cost: u64,
    /// `ℓ(u)`.
    pub m: u64,
    /// Number of letters of `u` outside the marks.
    pub k: u64,
    /// Number of marks.
    pub p: u64,
    /// `80k³ + 75k²p + 16m²`.
    pub bound: u64,
    /// Number of pinches removed.
    pub pinches: u64,
}

#[derive(Debug, Clone)]
pub struct Alg4Output {
    pub v: Word,
    pub decomposition: PreferredDecomposition,
    pub trace: Trace,
    pub stats: Alg4Stats,
}

struct PinchStep {
    /// Offset of `τ` in the word with every `s` deleted.
    offset: usize,
    tau: Word,
    trace: Trace,
}

/// `marks` are 1-based intervals of `u`, disjoint, each spelling a word in
/// preferred alternating form.
pub fn alg4_balanced_to_preferred(u: &Word, marks: &[Interval]) -> Result<Alg4Output, RewriteError> {
    if u.len() < 2 {
        return Err(RewriteError::PreconditionViolated(
            "input shorter than 2".into(),
        ));
    }
    if !is_balanced(u) {
        return Err(RewriteError::NotBalanced);
    }
    let mut sorted: Vec<(usize, Interval)> = marks.iter().copied().enumerate().collect();
    sorted.sort_by_key(|&(_, iv)| iv.start);
    let mut covered = 0;
    let mut last_end = 0;
    for &(index, iv) in &sorted {
        if iv.start <= last_end || iv.end > u.len() {
            return Err(RewriteError::PreconditionViolated(format!(
                "mark {iv} overlaps another or leaves the word"
            )));
        }
        if recognize_preferred(&u[iv.range()]).is_none() {
            return Err(RewriteError::MarkNotPreferred { index });
        }
        covered += iv.len();
        last_end = iv.end;
    }

    let mut b = TraceBuilder::new(u.clone());
    let mut steps: Vec<PinchStep> = Vec::new();
    // Steps A and B.
    while let Some(pinch) = find_pinch(b.current()) {
        let open = pinch.open - 1;
        let s_sign = b.current()[open].sign;
        let tau = Word::from(b.current()[pinch.inner()].to_vec());
        let alt = alg3_alternate(&tau)?;
        b.splice(open + 1, &alt.trace, &alt.word);
        let shuffle = shuffle_s_through(&alt.word, s_sign)?;
        let mut moved = alt.word.letters().to_vec();
        moved.push(shuffle.start[0]);
        b.splice(open, &shuffle, &moved);
        let s_pos = open + alt.word.len();
        b.free_reduce_range(s_pos, s_pos + 2);
        let s_before = b.current()[..open].iter().filter(|g| g.is_s()).count();
        steps.push(PinchStep {
            offset: open - s_before,
            tau,
            trace: alt.trace,
        });
    }
    debug_assert!(b.current().iter().all(|g| !g.is_s()));
    // Step C: undo every alternation, most recent first.
    for step in steps.iter().rev() {
        let back = step.trace.invert().expect("alternation traces replay");
        b.splice(step.offset, &back, &step.tau);
    }
    // Step D.
    let u_bar = Word::from(b.current().to_vec());
    debug_assert_eq!(u_bar, u.delete_bases(&[crate::word::Base::S]));
    let out = alg1_preferred(&u_bar)?;
    let end = out.v.clone();
    b.splice(0, &out.trace, &end);
    let (trace, v) = b.finish();

    let m = u.len() as u64;
    let k = (u.len() - covered) as u64;
    let p = marks.len() as u64;
    let stats = Alg4Stats {
        cost: trace.cost(),
        m,
        k,
        p,
        bound: balanced_cost_bound(k, p, m),
        pinches: steps.len() as u64,
    };
    Ok(Alg4Output {
        v,
        decomposition: out.decomposition,
        trace,
        stats,
    })
}
