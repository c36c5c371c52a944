//! Left-to-right conversion of a zero-exponent-sum s-free word into an
//! alternating word, carrying a power of `a` or `c` through the word.

use super::{product_rewrite, RewriteError};
use crate::trace::{Trace, TraceBuilder};
use crate::word::{exponent_sum, Base, Generator, Sign, Word};

const A: Generator = Generator::pos(Base::A);
const A_INV: Generator = Generator::neg(Base::A);
const C: Generator = Generator::pos(Base::C);
const C_INV: Generator = Generator::neg(Base::C);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    C,
}

impl Family {
    fn base(self) -> Base {
        match self {
            Family::A => Base::A,
            Family::C => Base::C,
        }
    }

    fn other(self) -> Family {
        match self {
            Family::A => Family::C,
            Family::C => Family::A,
        }
    }
}

/// The carried power `Δ`, either `a^r` or `c^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Carried {
    pub family: Family,
    pub r: i64,
}

impl Carried {
    pub const EMPTY: Carried = Carried {
        family: Family::A,
        r: 0,
    };

    pub fn word(&self) -> Word {
        let base = self.family.base();
        let g = if self.r >= 0 {
            Generator::pos(base)
        } else {
            Generator::neg(base)
        };
        Word::from(vec![g; self.r.unsigned_abs() as usize])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg3State {
    pub alpha: Word,
    pub delta: Carried,
    pub beta: Word,
}

#[derive(Debug, Clone)]
pub struct Alg3Output {
    pub word: Word,
    pub trace: Trace,
    /// Case label `(family case 1-4, subcase 1-4)` of every step.
    pub cases: Vec<(u8, u8)>,
    /// `inserted[i]` when `word[i]` does not come from the input.
    pub inserted: Vec<bool>,
}

/// `(x y)^r` with negative powers read as `(y⁻¹ x⁻¹)^|r|`.
fn pair_power(x: Generator, y: Generator, r: i64, out: &mut Vec<Generator>) {
    let block = if r >= 0 {
        [x, y]
    } else {
        [y.inverse(), x.inverse()]
    };
    for _ in 0..r.unsigned_abs() {
        out.extend(block);
    }
}

struct Step {
    emitted: Vec<Generator>,
    /// Index of the consumed letter inside `emitted`.
    original: usize,
    next: Carried,
    case: (u8, u8),
}

/// One transition, written for the `a` family; the `c` family runs the same
/// table after interchanging `a ↔ c`, `b ↔ d`.
fn step(odd: bool, delta: Carried, x: Generator) -> Step {
    let swap = delta.family == Family::C;
    let xs = if swap { x.swap_factors() } else { x };
    let r = delta.r;
    let is_b = xs.base == Base::B;
    let mut e = Vec::new();
    let (r_next, flips, sub) = match (odd, xs.sign, is_b) {
        (false, Sign::Pos, false) => {
            e.push(xs);
            (r, false, 1)
        }
        (false, Sign::Pos, true) => {
            pair_power(A, C_INV, r, &mut e);
            e.push(xs);
            (r, true, 2)
        }
        (false, Sign::Neg, false) => {
            e.extend([A, xs]);
            (r - 1, false, 3)
        }
        (false, Sign::Neg, true) => {
            pair_power(A, C_INV, r, &mut e);
            e.extend([C, xs]);
            (r - 1, true, 4)
        }
        (true, Sign::Pos, false) => {
            e.extend([A_INV, xs]);
            (r + 1, false, 1)
        }
        (true, Sign::Pos, true) => {
            pair_power(C_INV, A, r, &mut e);
            e.extend([C_INV, xs]);
            (r + 1, true, 2)
        }
        (true, Sign::Neg, false) => {
            e.push(xs);
            (r, false, 3)
        }
        (true, Sign::Neg, true) => {
            pair_power(C_INV, A, r, &mut e);
            e.push(xs);
            (r, true, 4)
        }
    };
    let original = e.len() - 1;
    if swap {
        for g in &mut e {
            *g = g.swap_factors();
        }
    }
    let family = if flips {
        delta.family.other()
    } else {
        delta.family
    };
    let next = if r_next == 0 {
        Carried::EMPTY
    } else {
        Carried {
            family,
            r: r_next,
        }
    };
    let case = match (delta.family, odd) {
        (Family::A, false) => 1,
        (Family::A, true) => 2,
        (Family::C, false) => 3,
        (Family::C, true) => 4,
    };
    Step {
        emitted: e,
        original,
        next,
        case: (case, sub),
    }
}

fn check_input(tau: &[Generator]) -> Result<(), RewriteError> {
    if tau.iter().any(|g| g.is_s()) {
        return Err(RewriteError::PreconditionViolated("input contains s".into()));
    }
    if exponent_sum(tau) != 0 {
        return Err(RewriteError::PreconditionViolated(
            "input has nonzero exponent sum".into(),
        ));
    }
    Ok(())
}

/// Every intermediate `α_i Δ_i β_i`, `i = 0..=ℓ(τ)`.
pub fn alg3_states(tau: &[Generator]) -> Result<Vec<Alg3State>, RewriteError> {
    check_input(tau)?;
    let mut alpha: Vec<Generator> = Vec::new();
    let mut delta = Carried::EMPTY;
    let mut states = Vec::with_capacity(tau.len() + 1);
    for i in 0..=tau.len() {
        states.push(Alg3State {
            alpha: Word::from(alpha.clone()),
            delta,
            beta: Word::from(tau[i..].to_vec()),
        });
        if i < tau.len() {
            let s = step(alpha.len() % 2 == 1, delta, tau[i]);
            alpha.extend(s.emitted);
            delta = s.next;
        }
    }
    Ok(states)
}

pub fn alg3_alternate(tau: &[Generator]) -> Result<Alg3Output, RewriteError> {
    check_input(tau)?;
    let mut b = TraceBuilder::new(Word::from(tau.to_vec()));
    let mut alpha_len = 0;
    let mut delta = Carried::EMPTY;
    let mut cases = Vec::with_capacity(tau.len());
    let mut inserted = Vec::with_capacity(2 * tau.len());
    for &x in tau {
        let s = step(alpha_len % 2 == 1, delta, x);
        let before = delta.word().concat(&Word::from(vec![x]));
        let mut after = s.emitted.clone();
        after.extend(s.next.word().iter());
        if before.letters() != after.as_slice() {
            let t = product_rewrite(&before, &after);
            b.splice(alpha_len, &t, &after);
        }
        inserted.extend((0..s.emitted.len()).map(|i| i != s.original));
        alpha_len += s.emitted.len();
        delta = s.next;
        cases.push(s.case);
    }
    // A leftover a⁻¹ or c⁻¹ completes an odd α.
    inserted.extend(std::iter::repeat_n(true, delta.r.unsigned_abs() as usize));
    let (trace, word) = b.finish();
    debug_assert!(word.is_alternating(), "alternation failed on {}", trace.start);
    Ok(Alg3Output {
        word,
        trace,
        cases,
        inserted,
    })
}
