//! Certified rewriting procedures. Each returns its output word together
//! with a [`Trace`](crate::trace::Trace) that replays from input to output.

mod alg1;
mod alg3;
mod alg4;
mod balanced;
mod shuffle;

use thiserror::Error;

use crate::presentation::lookup_form;
use crate::trace::{Move, Trace, TraceBuilder};
use crate::word::{Generator, Word};

pub use alg1::{
    alg1_preferred, preferred_form, recognize_preferred, Alg1Output, Filler, PreferredDecomposition,
};
pub use alg3::{alg3_alternate, alg3_states, Alg3Output, Alg3State, Carried, Family};
pub use alg4::{alg4_balanced_to_preferred, Alg4Output, Alg4Stats};
pub use balanced::find_balanced_subword;
pub use shuffle::{product_shuffle, shuffle_s_through};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("word is not alternating")]
    NotAlternating,
    #[error("word is not balanced")]
    NotBalanced,
    #[error("mark {index} is not a preferred alternating subword")]
    MarkNotPreferred { index: usize },
}

/// Upper bound on the alternation cost: `(R+2)ℓ + 2(R+2)²·max(Q,1)`.
pub fn alternation_cost_bound(len: u64, q: u64, r: u64) -> u64 {
    (r + 2) * len + 2 * (r + 2) * (r + 2) * q.max(1)
}

/// Upper bound on the alternation length growth: `P + 4(R+1)·max(Q,1)`.
pub fn alternation_growth_bound(p: u64, q: u64, r: u64) -> u64 {
    p + 4 * (r + 1) * q.max(1)
}

/// `80k³ + 75k²p + 16m²`.
pub fn balanced_cost_bound(k: u64, p: u64, m: u64) -> u64 {
    80 * k.pow(3) + 75 * k * k * p + 16 * m * m
}

/// Moves every `a^±1, b^±1` to the front by adjacent commutator swaps, then
/// freely reduces both halves. Ends at `ab_part · cd_part` of the product
/// normal form. `w` must be s-free.
pub(crate) fn product_form_trace(w: &[Generator]) -> (Trace, Word) {
    let mut b = TraceBuilder::new(Word::from(w.to_vec()));
    let mut placed = 0;
    for j in 0..w.len() {
        if b.current()[j].base.is_ab() {
            for p in (placed..j).rev() {
                let cur = b.current();
                let swapped = [cur[p + 1], cur[p]];
                swap_commuting(&mut b, p, swapped);
            }
            placed += 1;
        }
    }
    let total = b.current().len();
    b.free_reduce_range(0, placed);
    let ab_len = b.current().len() - (total - placed);
    let end = b.current().len();
    b.free_reduce_range(ab_len, end);
    b.finish()
}

fn swap_commuting(b: &mut TraceBuilder, p: usize, swapped: [Generator; 2]) {
    let cur = b.current();
    let key = [cur[p], cur[p + 1], swapped[1].inverse(), swapped[0].inverse()];
    let form = lookup_form(&key).expect("a/b letters commute with c/d letters");
    b.push(Move::ApplyRelator {
        pos: p + 1,
        form,
        split: 2,
    });
}

/// A trace from `x` to `y`, two s-free words equal in `F(a,b) × F(c,d)`,
/// through their common product form. Costs the number of `c/d`-before-`a/b`
/// letter pairs in `x` plus the same count in `y`.
pub(crate) fn product_rewrite(x: &[Generator], y: &[Generator]) -> Trace {
    let (to_form, form_x) = product_form_trace(x);
    let (from_y, form_y) = product_form_trace(y);
    assert_eq!(form_x, form_y, "product rewrite between unequal elements");
    let back = from_y.invert().expect("product form traces replay");
    let mut moves = to_form.moves;
    moves.extend(back.moves);
    Trace::new(Word::from(x.to_vec()), moves)
}

/// Number of `c/d` letters standing before an `a/b` letter: the cost of
/// [`product_form_trace`].
#[cfg(test)]
pub(crate) fn crossing_count(w: &[Generator]) -> u64 {
    let mut cd_seen = 0u64;
    let mut total = 0;
    for g in w {
        if g.base.is_cd() {
            cd_seen += 1;
        } else if g.base.is_ab() {
            total += cd_seen;
        }
    }
    total
}
