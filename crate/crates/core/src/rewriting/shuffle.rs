//! Moving `s^±1` across an alternating word, and reducing an s-free
//! null-homotopic word to the empty word.

use super::{product_form_trace, RewriteError};
use crate::group::is_null_homotopic;
use crate::presentation::lookup_form;
use crate::trace::{Move, Trace};
use crate::word::{Base, Generator, Sign, Word};

/// A trace from `s^±1 · τ̂` to `τ̂ · s^±1`. Each block `x y⁻¹` with `x ≠ y`
/// costs one relator; blocks `x x⁻¹` are crossed by free moves.
pub fn shuffle_s_through(tau_hat: &[Generator], s_sign: Sign) -> Result<Trace, RewriteError> {
    if !crate::word::is_alternating(tau_hat) {
        return Err(RewriteError::NotAlternating);
    }
    let s = Generator::new(Base::S, s_sign);
    let mut start = Vec::with_capacity(tau_hat.len() + 1);
    start.push(s);
    start.extend_from_slice(tau_hat);
    let mut moves = Vec::new();
    for (i, block) in tau_hat.chunks(2).enumerate() {
        let (x, y_inv) = (block[0], block[1]);
        // The s letter sits at 1-based position 2i+1.
        let pos = 2 * i + 1;
        if x.is_inverse_of(y_inv) {
            moves.push(Move::FreeReduce { pos: pos + 1 });
            moves.push(Move::FreeExpand { pos, letter: x });
        } else {
            let key = [s, x, y_inv, s.inverse(), y_inv.inverse(), x.inverse()];
            let form = lookup_form(&key).expect("s commutes with x y⁻¹");
            moves.push(Move::ApplyRelator {
                pos,
                form,
                split: 3,
            });
        }
    }
    Ok(Trace::new(Word::from(start), moves))
}

/// A trace from `w` to the empty word: commute every `a/b` letter to the
/// front, then freely reduce.
pub fn product_shuffle(w: &[Generator]) -> Result<Trace, RewriteError> {
    if w.iter().any(|g| g.is_s()) {
        return Err(RewriteError::PreconditionViolated("input contains s".into()));
    }
    if !is_null_homotopic(w) {
        return Err(RewriteError::PreconditionViolated(
            "input is not null-homotopic".into(),
        ));
    }
    let (trace, end) = product_form_trace(w);
    debug_assert!(end.is_empty());
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn shuffle_examples() {
        let t = shuffle_s_through(&Word::empty(), Sign::Pos).unwrap();
        assert!(t.moves.is_empty());

        let t = shuffle_s_through(&w("bD"), Sign::Pos).unwrap();
        let replay = t.validate().unwrap();
        assert_eq!(replay.end, w("bDs"));
        assert_eq!(replay.cost, 1);
        match t.moves[0] {
            Move::ApplyRelator { form, .. } => assert_eq!(form.id, 8),
            _ => unreachable!(),
        }

        let t = shuffle_s_through(&w("aA"), Sign::Pos).unwrap();
        assert_eq!(t.validate().unwrap(), crate::trace::Replay { end: w("aAs"), cost: 0 });

        assert_eq!(
            shuffle_s_through(&w("ab"), Sign::Pos),
            Err(RewriteError::NotAlternating)
        );
    }

    #[test]
    fn shuffle_covers_every_block() {
        let letters: Vec<Generator> = Generator::all().filter(|g| !g.is_s()).collect();
        let pos: Vec<Generator> = letters.iter().copied().filter(|g| g.sign == Sign::Pos).collect();
        let mut tau = Vec::new();
        for &x in &pos {
            for &y in &pos {
                tau.extend([x, y.inverse()]);
            }
        }
        for sign in [Sign::Pos, Sign::Neg] {
            let t = shuffle_s_through(&tau, sign).unwrap();
            let replay = t.validate().unwrap();
            let mut expect = tau.clone();
            expect.push(Generator::new(Base::S, sign));
            assert_eq!(replay.end, Word::from(expect));
            assert_eq!(replay.cost, 12);
        }
    }

    #[test]
    fn product_shuffle_examples() {
        assert!(product_shuffle(&Word::empty()).unwrap().moves.is_empty());
        let t = product_shuffle(&w("abBA")).unwrap();
        assert_eq!(t.validate().unwrap(), crate::trace::Replay { end: Word::empty(), cost: 0 });
        let t = product_shuffle(&w("ACac")).unwrap();
        assert_eq!(t.validate().unwrap(), crate::trace::Replay { end: Word::empty(), cost: 1 });
        assert!(product_shuffle(&w("ab")).is_err());
    }
}
