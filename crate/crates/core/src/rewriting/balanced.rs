//! Locating a balanced subword of prescribed size inside a balanced word.

use super::RewriteError;
use crate::group::{eliminate_pinches, is_balanced};
use crate::word::{Generator, Interval};

/// A balanced subword `u` of `mu` with `k/2 ≤ ℓ(u) ≤ k`, found by splitting
/// `mu = x α y β` with `α` balanced and descending into `xαy`, `β` or `α`.
pub fn find_balanced_subword(mu: &[Generator], k: usize) -> Result<Interval, RewriteError> {
    if !is_balanced(mu) {
        return Err(RewriteError::NotBalanced);
    }
    if mu.len() < 4 || k < 4 || k > mu.len() {
        return Err(RewriteError::PreconditionViolated(format!(
            "need 4 <= k <= length, got k={k}, length={}",
            mu.len()
        )));
    }
    let mut partner = vec![usize::MAX; mu.len()];
    for (i, j) in eliminate_pinches(mu).pairs {
        partner[i] = j;
        partner[j] = i;
    }
    let (mut lo, mut hi) = (0, mu.len());
    loop {
        let len = hi - lo;
        if len == k {
            return Ok(Interval::from_range(lo..hi));
        }
        let y = split_point(mu, &partner, lo);
        let head = y + 1 - lo;
        let tail = hi - y - 1;
        if tail > 0 {
            if head >= k {
                hi = y + 1;
            } else if tail >= k {
                lo = y + 1;
            } else if 2 * head >= k {
                return Ok(Interval::from_range(lo..y + 1));
            } else {
                return Ok(Interval::from_range(y + 1..hi));
            }
        } else {
            let inner = (lo + 1, y);
            if inner.1 - inner.0 >= k {
                (lo, hi) = inner;
            } else {
                return Ok(Interval::from_range(inner.0..inner.1));
            }
        }
    }
}

/// Index of the letter `y` closing `x α y` where `x = mu[lo]`.
fn split_point(mu: &[Generator], partner: &[usize], lo: usize) -> usize {
    if mu[lo].is_s() {
        return partner[lo];
    }
    let mut counter = 0i64;
    let mut i = lo;
    loop {
        if mu[i].is_s() {
            i = partner[i];
        } else {
            counter += mu[i].exponent();
            if counter == 0 {
                return i;
            }
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(find_balanced_subword(&w("abAB"), 4), Ok(Interval::new(1, 4)));
        assert_eq!(find_balanced_subword(&w("abABcdCD"), 4), Ok(Interval::new(1, 4)));
        assert_eq!(find_balanced_subword(&w("sSsSsSsS"), 5), Ok(Interval::new(5, 8)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(find_balanced_subword(&w("abAB"), 3).is_err());
        assert!(find_balanced_subword(&w("abAB"), 5).is_err());
        assert_eq!(find_balanced_subword(&w("ab"), 4), Err(RewriteError::NotBalanced));
    }

    #[test]
    fn every_k_on_a_nested_word() {
        let mu = w("asbDSAcsaASCbSdDsB");
        assert!(is_balanced(&mu));
        for k in 4..=mu.len() {
            let iv = find_balanced_subword(&mu, k).unwrap();
            assert!(is_balanced(&mu[iv.range()]), "k={k}");
            assert!(2 * iv.len() >= k && iv.len() <= k, "k={k} got {iv}");
        }
    }
}
