//! The end-to-end filler: a certified trace from any null-homotopic word to
//! the empty word, with its cost certificate.

use thiserror::Error;

use crate::group::is_null_homotopic;
use crate::rewriting::{
    alg4_balanced_to_preferred, find_balanced_subword, product_shuffle, recognize_preferred,
    PreferredDecomposition, RewriteError,
};
use crate::trace::{Trace, TraceBuilder};
use crate::word::{Interval, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillError {
    #[error("word is not null-homotopic")]
    NotNullHomotopic,
    #[error("k = {k} outside [4, {n}]")]
    KOutOfRange { k: usize, n: usize },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

/// A word together with marked subwords known to be in preferred form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedWord {
    pub word: Word,
    /// Sorted, disjoint, 1-based.
    pub marks: Vec<(Interval, PreferredDecomposition)>,
}

impl MarkedWord {
    pub fn unmarked(word: Word) -> Self {
        MarkedWord {
            word,
            marks: Vec::new(),
        }
    }

    /// `marked[i]` when 0-based position `i` lies in a mark.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.word.len()];
        for (iv, _) in &self.marks {
            m[iv.range()].iter_mut().for_each(|x| *x = true);
        }
        m
    }

    pub fn unmarked_len(&self) -> usize {
        self.word.len() - self.marks.iter().map(|(iv, _)| iv.len()).sum::<usize>()
    }
}

#[derive(Debug, Clone)]
pub struct FillReport {
    pub trace: Trace,
    pub cost: u64,
    pub k: usize,
    pub n: usize,
    pub rounds: usize,
    pub bound: u128,
    /// Longest intermediate word `w_i`.
    pub max_len: usize,
    /// Largest number of marks present at once.
    pub max_marks: usize,
    /// State after each round.
    pub history: Vec<RoundSummary>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundSummary {
    pub len: usize,
    pub s_letters: usize,
    pub marks: usize,
    /// Every mark is s-free and in preferred alternating form.
    pub marks_valid: bool,
}

impl RoundSummary {
    fn of(state: &MarkedWord) -> Self {
        let marks_valid = state.marks.iter().all(|(iv, d)| {
            let seg = &state.word[iv.range()];
            seg.iter().all(|g| !g.is_s())
                && d.assemble().letters() == seg
                && recognize_preferred(seg).is_some()
        });
        RoundSummary {
            len: state.word.len(),
            s_letters: state.word.s_count(),
            marks: state.marks.len(),
            marks_valid,
        }
    }
}

/// `⌈160nk² + 309n² + 288n³/k⌉`, exact.
pub fn area_upper_bound(n: u64, k: u64) -> Result<u128, FillError> {
    if k < 4 || k > n {
        return Err(FillError::KOutOfRange {
            k: k as usize,
            n: n as usize,
        });
    }
    let (n, k) = (n as u128, k as u128);
    let numerator = 160 * n * k * k * k + 309 * n * n * k + 288 * n * n * n;
    Ok(numerator.div_ceil(k))
}

/// `min(n, max(4, ⌈n^{2/3}⌉))`.
pub fn default_k(n: u64) -> Result<u64, FillError> {
    if n < 4 {
        return Err(FillError::KOutOfRange {
            k: 4,
            n: n as usize,
        });
    }
    let n2 = (n as u128) * (n as u128);
    let mut k = (n2 as f64).cbrt() as u128;
    while k * k * k < n2 {
        k += 1;
    }
    while k > 0 && (k - 1).pow(3) >= n2 {
        k -= 1;
    }
    Ok((k as u64).clamp(4, n))
}

/// Words shorter than 4 carry no relator, so a null-homotopic one freely
/// reduces to the empty word.
pub fn fill_small(w: &Word) -> Result<FillReport, FillError> {
    if !is_null_homotopic(w) {
        return Err(FillError::NotNullHomotopic);
    }
    let mut b = TraceBuilder::new(w.clone());
    let len = w.len();
    b.free_reduce_range(0, len);
    let (trace, end) = b.finish();
    if !end.is_empty() {
        return Err(FillError::NotNullHomotopic);
    }
    Ok(FillReport {
        trace,
        cost: 0,
        k: 0,
        n: len,
        rounds: 0,
        bound: 0,
        max_len: len,
        max_marks: 0,
        history: Vec::new(),
    })
}

pub fn alg5_fill(w: &Word, k: Option<usize>) -> Result<FillReport, FillError> {
    let n = w.len();
    if !is_null_homotopic(w) {
        return Err(FillError::NotNullHomotopic);
    }
    let k = match k {
        Some(k) if k < 4 || k > n => return Err(FillError::KOutOfRange { k, n }),
        Some(k) => k,
        None if n < 4 => return fill_small(w),
        None => default_k(n as u64)? as usize,
    };
    let bound = area_upper_bound(n as u64, k as u64)?;

    let mut b = TraceBuilder::new(w.clone());
    let mut state = MarkedWord::unmarked(w.clone());
    let mut rounds = 0;
    let mut max_len = n;
    let mut max_marks = 0;
    let mut history = Vec::new();
    while state.unmarked_len() > 0 {
        let (lo, hi) = choose_subword(&state, k)?;
        let u = state.word.slice(lo..hi);
        let inner: Vec<Interval> = state
            .marks
            .iter()
            .filter(|(iv, _)| iv.start > lo && iv.end <= hi)
            .map(|(iv, _)| Interval::new(iv.start - lo, iv.end - lo))
            .collect();
        let out = alg4_balanced_to_preferred(&u, &inner)?;
        b.splice(lo, &out.trace, &out.v);

        let shift = out.v.len() as isize - u.len() as isize;
        let mut marks = Vec::with_capacity(state.marks.len() + 1);
        for (iv, d) in state.marks.drain(..) {
            if iv.end <= lo {
                marks.push((iv, d));
            } else if iv.start > hi {
                let start = (iv.start as isize + shift) as usize;
                let end = (iv.end as isize + shift) as usize;
                marks.push((Interval::new(start, end), d));
            }
        }
        if !out.v.is_empty() {
            marks.push((Interval::from_range(lo..lo + out.v.len()), out.decomposition));
        }
        marks.sort_by_key(|(iv, _)| iv.start);
        state = MarkedWord {
            word: Word::from(b.current().to_vec()),
            marks,
        };
        rounds += 1;
        max_len = max_len.max(state.word.len());
        max_marks = max_marks.max(state.marks.len());
        history.push(RoundSummary::of(&state));
    }
    let tail = product_shuffle(&state.word)?;
    b.splice(0, &tail, &[]);
    let (trace, _) = b.finish();
    Ok(FillReport {
        cost: trace.cost(),
        trace,
        k,
        n,
        rounds,
        bound,
        max_len,
        max_marks,
        history,
    })
}

/// The 0-based half-open span of `u` in step (i).
fn choose_subword(state: &MarkedWord, k: usize) -> Result<(usize, usize), FillError> {
    let len = state.word.len();
    let mask = state.mask();
    let positions: Vec<usize> = (0..len).filter(|&i| !mask[i]).collect();
    if positions.len() <= k {
        return Ok((0, len));
    }
    let w_bar: Vec<_> = positions.iter().map(|&i| state.word[i]).collect();
    let iv = find_balanced_subword(&w_bar, k)?;
    let r = iv.range();
    let (mut lo, mut hi) = (positions[r.start], positions[r.end - 1] + 1);
    while lo > 0 && mask[lo - 1] {
        lo -= 1;
    }
    while hi < len && mask[hi] {
        hi += 1;
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn bound_examples() {
        assert_eq!(area_upper_bound(8, 4), Ok(77120));
        for n in [4u64, 5, 9, 17] {
            let n128 = n as u128;
            assert_eq!(
                area_upper_bound(n, n).unwrap(),
                160 * n128.pow(3) + 309 * n128 * n128 + 288 * n128 * n128
            );
        }
        assert!(area_upper_bound(8, 3).is_err());
        assert_eq!(area_upper_bound(4, 4), Ok(19792));
        // 160·6·16 + 309·36 + 288·216/4
        assert_eq!(area_upper_bound(6, 4), Ok(15360 + 11124 + 15552));
        // 288·1000/7 is not an integer; the ceiling is taken once, at the end.
        assert_eq!(area_upper_bound(10, 7), Ok(78400 + 30900 + 41143));
    }

    #[test]
    fn default_k_examples() {
        assert_eq!(default_k(8), Ok(4));
        assert_eq!(default_k(1000), Ok(100));
        assert_eq!(default_k(4), Ok(4));
        assert_eq!(default_k(27), Ok(9));
        assert_eq!(default_k(28), Ok(10));
        assert!(default_k(3).is_err());
    }

    #[test]
    fn fill_examples() {
        let r = alg5_fill(&w("ACac"), Some(4)).unwrap();
        assert_eq!(r.trace.validate().unwrap().end, Word::empty());
        assert!(r.cost >= 1 && (r.cost as u128) <= r.bound);
        assert_eq!(r.bound, 19792);

        let r = alg5_fill(&w("saBSbA"), None).unwrap();
        assert_eq!(r.k, 4);
        assert_eq!(r.trace.validate().unwrap().end, Word::empty());
        assert!((r.cost as u128) <= area_upper_bound(6, 4).unwrap());

        assert_eq!(alg5_fill(&w("ab"), None).unwrap_err(), FillError::NotNullHomotopic);
        assert!(matches!(alg5_fill(&w("ACac"), Some(5)), Err(FillError::KOutOfRange { .. })));
    }

    #[test]
    fn small_words() {
        for text in ["", "aA", "sS", "Aa"] {
            let r = fill_small(&w(text)).unwrap();
            assert_eq!(r.cost, 0);
            assert_eq!(r.trace.validate().unwrap().end, Word::empty());
            let r = alg5_fill(&w(text), None).unwrap();
            assert_eq!(r.cost, 0);
        }
        assert!(fill_small(&w("ab")).is_err());
    }

    #[test]
    fn longer_words_use_several_rounds() {
        let word = w("AAAACCCCaaaacccc");
        let r = alg5_fill(&word, Some(4)).unwrap();
        assert_eq!(r.trace.validate().unwrap().end, Word::empty());
        assert!(r.rounds > 1);
        assert!(r.rounds * 4 <= 2 * word.len());
        assert!(r.max_len <= 3 * word.len());
        assert!((r.cost as u128) <= r.bound);
    }
}
