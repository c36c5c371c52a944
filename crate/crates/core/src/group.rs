//! Decision procedures for the group.
//!
//! The group is an HNN extension of `F(a,b) × F(c,d)` whose stable letter
//! `s` commutes with every zero-exponent-sum element. Britton's lemma then
//! says a word with `s` letters lies in the base group only if it contains
//! a pinch `s^±1 τ s^∓1` with `τ` s-free of exponent sum zero. Removing the
//! two `s` letters of a pinch does not change the element, so repeated pinch
//! removal decides membership in the base group; the product normal form
//! finishes the word problem.

use thiserror::Error;

use crate::word::{free_reduce_letters, Generator, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("word contains the stable letter s")]
    SContained,
}

/// Freely reduced components of an element of `F(a,b) × F(c,d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductNormalForm {
    pub ab_part: Word,
    pub cd_part: Word,
}

impl ProductNormalForm {
    pub fn is_trivial(&self) -> bool {
        self.ab_part.is_empty() && self.cd_part.is_empty()
    }
}

pub fn project_normal_form(w: &[Generator]) -> Result<ProductNormalForm, GroupError> {
    if w.iter().any(|g| g.is_s()) {
        return Err(GroupError::SContained);
    }
    Ok(project_unchecked(w.iter().copied()))
}

fn project_unchecked(letters: impl Iterator<Item = Generator>) -> ProductNormalForm {
    let (ab, cd): (Vec<Generator>, Vec<Generator>) = letters.partition(|g| g.base.is_ab());
    ProductNormalForm {
        ab_part: Word::from(free_reduce_letters(&ab)),
        cd_part: Word::from(free_reduce_letters(&cd)),
    }
}

/// A pinch `s^±1 τ s^∓1`, 1-based positions of its two `s` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pinch {
    pub open: usize,
    pub close: usize,
}

impl Pinch {
    /// 0-based range of the enclosed word `τ`.
    pub fn inner(&self) -> std::ops::Range<usize> {
        self.open..self.close - 1
    }
}

/// The pinch with the smallest closing position.
pub fn find_pinch(w: &[Generator]) -> Option<Pinch> {
    let mut prev: Option<(usize, Sign)> = None;
    let mut sum = 0i64;
    for (i, g) in w.iter().enumerate() {
        if g.is_s() {
            if let Some((j, sign)) = prev {
                if sign != g.sign && sum == 0 {
                    return Some(Pinch {
                        open: j + 1,
                        close: i + 1,
                    });
                }
            }
            prev = Some((i, g.sign));
            sum = 0;
        } else {
            sum += g.exponent();
        }
    }
    None
}

/// Outcome of pinch elimination: the matched `s` pairs (0-based) and
/// whether every `s` letter was matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinchElimination {
    pub pairs: Vec<(usize, usize)>,
    pub unmatched: usize,
}

impl PinchElimination {
    pub fn is_complete(&self) -> bool {
        self.unmatched == 0
    }
}

/// Single left-to-right pass equivalent to repeatedly removing the pinch
/// returned by [`find_pinch`]. Each open `s` carries the exponent sum of the
/// s-free letters seen since it, with removed pinches contributing zero.
pub fn eliminate_pinches(w: &[Generator]) -> PinchElimination {
    let mut stack: Vec<(usize, Sign, i64)> = Vec::new();
    let mut pairs = Vec::new();
    for (i, g) in w.iter().enumerate() {
        if g.is_s() {
            match stack.last() {
                Some(&(j, sign, 0)) if sign != g.sign => {
                    stack.pop();
                    pairs.push((j, i));
                }
                _ => stack.push((i, g.sign, 0)),
            }
        } else if let Some(top) = stack.last_mut() {
            top.2 += g.exponent();
        }
    }
    PinchElimination {
        pairs,
        unmatched: stack.len(),
    }
}

pub fn is_balanced(w: &[Generator]) -> bool {
    crate::word::exponent_sum(w) == 0 && eliminate_pinches(w).is_complete()
}

pub fn is_null_homotopic(w: &[Generator]) -> bool {
    if !eliminate_pinches(w).is_complete() {
        return false;
    }
    // With every s paired off, the element is the s-deleted word.
    project_unchecked(w.iter().copied().filter(|g| !g.is_s())).is_trivial()
}

pub fn equal_in_s(u: &[Generator], v: &[Generator]) -> bool {
    let mut w = u.to_vec();
    w.extend(v.iter().rev().map(|g| g.inverse()));
    is_null_homotopic(&w)
}
