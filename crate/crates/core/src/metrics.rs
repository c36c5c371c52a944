//! The quantities `P`, `Q` and `R` that bound the left-to-right
//! alternation procedure.

use crate::group::GroupError;
use crate::word::{Base, Generator, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricsReport {
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

/// All three metrics; `p` is absent from the report when the word has `s`.
pub fn metrics(w: &[Generator]) -> (Option<u64>, u64, u64) {
    (metric_p(w).ok(), metric_q(w), metric_r(w))
}

/// Number of `a^±1` letters inserted by the insertion-only alternation
/// pass. Computed twice, by simulation and by counting sign repeats; the
/// two must agree.
pub fn metric_p(w: &[Generator]) -> Result<u64, GroupError> {
    if w.iter().any(|g| g.is_s()) {
        return Err(GroupError::SContained);
    }
    let simulated = insertion_count(w);
    let closed = sign_repeats(w);
    debug_assert_eq!(simulated, closed, "P simulation disagrees with closed form");
    Ok(closed)
}

/// Runs the insertion pass and counts insertions. The output word itself is
/// not kept.
pub(crate) fn insertion_count(w: &[Generator]) -> u64 {
    let mut alpha: Vec<Generator> = Vec::with_capacity(2 * w.len());
    let mut inserted = 0;
    for &x in w {
        let even = alpha.len().is_multiple_of(2);
        match (even, x.sign) {
            (true, Sign::Neg) => {
                alpha.push(Generator::pos(Base::A));
                inserted += 1;
            }
            (false, Sign::Pos) => {
                alpha.push(Generator::neg(Base::A));
                inserted += 1;
            }
            _ => {}
        }
        alpha.push(x);
    }
    inserted
}

/// `Σ d_i`: the first letter counts when negative, every later letter
/// counts when its sign repeats the previous one.
pub(crate) fn sign_repeats(w: &[Generator]) -> u64 {
    let mut prev = Sign::Neg;
    let mut count = 0;
    for g in w {
        if g.sign == prev {
            count += 1;
        }
        prev = g.sign;
    }
    count
}

/// Number of `b`/`d` alternations.
///
/// After deleting `a`, `c`, `s`, the remainder splits into `t` maximal
/// single-type blocks. `Q = ⌈t/2⌉` when the first block is a `b` block and
/// `⌈(t+1)/2⌉` when it is a `d` block; `Q = 0` when `t = 0`.
pub fn metric_q(w: &[Generator]) -> u64 {
    let mut blocks = 0u64;
    let mut first: Option<Base> = None;
    let mut last: Option<Base> = None;
    for g in w.iter().filter(|g| matches!(g.base, Base::B | Base::D)) {
        if last != Some(g.base) {
            blocks += 1;
            last = Some(g.base);
            first.get_or_insert(g.base);
        }
    }
    match first {
        None => 0,
        Some(Base::B) => blocks.div_ceil(2),
        Some(_) => (blocks + 1).div_ceil(2),
    }
}

/// Largest `|exponent sum|` over all suffixes, the empty suffix included.
pub fn metric_r(w: &[Generator]) -> u64 {
    let mut sum = 0i64;
    let mut best = 0u64;
    for g in w.iter().rev() {
        sum += g.exponent();
        best = best.max(sum.unsigned_abs());
    }
    best
}
