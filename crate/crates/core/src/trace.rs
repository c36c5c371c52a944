//! Rewriting traces: a start word plus a list of moves.
//!
//! Three moves exist: free reduction, free expansion, and relator
//! application. Only relator applications are counted by [`Trace::cost`].
//! Positions are 1-based, matching the line format
//!
//! ```text
//! <start word>
//! F <pos>
//! E <pos> <letter>
//! R <pos> <id> <rot> <inv:0|1> <split>
//! ```
//!
//! Traces keep only the moves; intermediate words are regenerated on replay.

use std::fmt::Write as _;

use thiserror::Error;

use crate::presentation::{RelatorForm, RELATOR_COUNT};
use crate::word::{invert_letters, Generator, Word};

/// One rewriting step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Deletes letters `pos, pos+1`, which must be mutually inverse.
    FreeReduce { pos: usize },
    /// Inserts `letter letter⁻¹` so that `letter` lands at `pos`.
    FreeExpand { pos: usize, letter: Generator },
    /// With `ρ` the chosen relator form written `ρ = u·v⁻¹`, `u` its first
    /// `split` letters, replaces the occurrence of `u` at `pos` by `v`.
    ApplyRelator {
        pos: usize,
        form: RelatorForm,
        split: u8,
    },
}

impl Move {
    pub fn is_relator(&self) -> bool {
        matches!(self, Move::ApplyRelator { .. })
    }

    pub fn pos(&self) -> usize {
        match *self {
            Move::FreeReduce { pos } | Move::FreeExpand { pos, .. } | Move::ApplyRelator { pos, .. } => {
                pos
            }
        }
    }

    fn shifted(self, by: usize) -> Move {
        match self {
            Move::FreeReduce { pos } => Move::FreeReduce { pos: pos + by },
            Move::FreeExpand { pos, letter } => Move::FreeExpand { pos: pos + by, letter },
            Move::ApplyRelator { pos, form, split } => Move::ApplyRelator {
                pos: pos + by,
                form,
                split,
            },
        }
    }

    /// Applies the move to `word` in place.
    pub fn apply(&self, word: &mut Vec<Generator>) -> Result<(), String> {
        match *self {
            Move::FreeReduce { pos } => {
                if pos == 0 || pos + 1 > word.len() {
                    return Err(format!("position {pos} out of range for length {}", word.len()));
                }
                if !word[pos - 1].is_inverse_of(word[pos]) {
                    return Err("not an inverse pair".into());
                }
                word.drain(pos - 1..pos + 1);
            }
            Move::FreeExpand { pos, letter } => {
                if pos == 0 || pos > word.len() + 1 {
                    return Err(format!("position {pos} out of range for length {}", word.len()));
                }
                word.splice(pos - 1..pos - 1, [letter, letter.inverse()]);
            }
            Move::ApplyRelator { pos, form, split } => {
                if (form.id as usize) >= RELATOR_COUNT || !form.is_valid() {
                    return Err(format!(
                        "no relator form id={} rot={}",
                        form.id, form.rotation
                    ));
                }
                let rho = form.word();
                let split = split as usize;
                if split > rho.len() {
                    return Err(format!("split {split} exceeds relator length {}", rho.len()));
                }
                let (u, v_bar) = rho.split_at(split);
                if pos == 0 || pos - 1 + u.len() > word.len() {
                    return Err(format!("position {pos} out of range for length {}", word.len()));
                }
                let at = pos - 1;
                if word[at..at + u.len()] != *u {
                    return Err("subword does not match relator prefix".into());
                }
                let v = invert_letters(v_bar);
                if u.len() == v.len() {
                    word[at..at + u.len()].copy_from_slice(&v);
                } else {
                    word.splice(at..at + u.len(), v);
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("illegal move at index {index}: {reason}")]
    IllegalMove { index: usize, reason: String },
    #[error("trace endpoints do not match: {left} vs {right}")]
    EndpointMismatch { left: Word, right: Word },
    #[error("trace file line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Result of replaying a trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub end: Word,
    pub cost: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub start: Word,
    pub moves: Vec<Move>,
}

impl Trace {
    pub fn new(start: Word, moves: Vec<Move>) -> Self {
        Trace { start, moves }
    }

    /// The empty trace at `start`.
    pub fn identity(start: Word) -> Self {
        Trace {
            start,
            moves: Vec::new(),
        }
    }

    /// Number of relator applications.
    pub fn cost(&self) -> u64 {
        self.moves.iter().filter(|m| m.is_relator()).count() as u64
    }

    /// Replays every move, checking legality, and returns the final word.
    pub fn validate(&self) -> Result<Replay, TraceError> {
        let mut word = self.start.letters().to_vec();
        let mut cost = 0;
        for (index, m) in self.moves.iter().enumerate() {
            m.apply(&mut word)
                .map_err(|reason| TraceError::IllegalMove { index, reason })?;
            cost += m.is_relator() as u64;
        }
        Ok(Replay {
            end: Word::from(word),
            cost,
        })
    }

    pub fn compose(&self, next: &Trace) -> Result<Trace, TraceError> {
        let end = self.validate()?.end;
        if end != next.start {
            return Err(TraceError::EndpointMismatch {
                left: end,
                right: next.start.clone(),
            });
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&next.moves);
        Ok(Trace::new(self.start.clone(), moves))
    }

    /// A trace from this trace's end back to its start with the same cost.
    pub fn invert(&self) -> Result<Trace, TraceError> {
        let mut word = self.start.letters().to_vec();
        let mut inverse = Vec::with_capacity(self.moves.len());
        for (index, m) in self.moves.iter().enumerate() {
            let back = match *m {
                Move::FreeReduce { pos } => {
                    let letter = *pos
                        .checked_sub(1)
                        .and_then(|i| word.get(i))
                        .ok_or_else(|| TraceError::IllegalMove {
                        index,
                        reason: format!("position {pos} out of range"),
                    })?;
                    Move::FreeExpand { pos, letter }
                }
                Move::FreeExpand { pos, .. } => Move::FreeReduce { pos },
                Move::ApplyRelator { pos, form, split } => Move::ApplyRelator {
                    pos,
                    form: form.inverse(),
                    split: form.len() as u8 - split,
                },
            };
            m.apply(&mut word)
                .map_err(|reason| TraceError::IllegalMove { index, reason })?;
            inverse.push(back);
        }
        inverse.reverse();
        Ok(Trace::new(Word::from(word), inverse))
    }

    /// The same rewriting performed inside `prefix · _ · suffix`.
    pub fn embed(&self, prefix: &Word, suffix: &Word) -> Trace {
        let start = prefix.concat(&self.start).concat(suffix);
        let moves = self.moves.iter().map(|m| m.shifted(prefix.len())).collect();
        Trace::new(start, moves)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.start.to_string());
        out.push('\n');
        for m in &self.moves {
            match *m {
                Move::FreeReduce { pos } => writeln!(out, "F {pos}"),
                Move::FreeExpand { pos, letter } => writeln!(out, "E {pos} {letter}"),
                Move::ApplyRelator { pos, form, split } => writeln!(
                    out,
                    "R {pos} {} {} {} {split}",
                    form.id, form.rotation, form.inverted as u8
                ),
            }
            .expect("writing to a String");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Trace, TraceError> {
        let mut lines = text.lines();
        let first = lines.next().unwrap_or("");
        let start = Word::parse(first.trim_end_matches('\r')).map_err(|e| TraceError::Parse {
            line: 1,
            reason: e.to_string(),
        })?;
        let mut moves = Vec::new();
        for (i, raw) in lines.enumerate() {
            let line = i + 2;
            let fields: Vec<&str> = raw.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let err = |reason: String| TraceError::Parse { line, reason };
            let num = |s: &str| -> Result<usize, TraceError> {
                s.parse::<usize>()
                    .map_err(|_| err(format!("expected a number, found {s:?}")))
            };
            let m = match (fields[0], fields.len()) {
                ("F", 2) => Move::FreeReduce { pos: num(fields[1])? },
                ("E", 3) => {
                    let mut chars = fields[2].chars();
                    let letter = match (chars.next().and_then(Generator::from_char), chars.next()) {
                        (Some(g), None) => g,
                        _ => return Err(err(format!("bad letter {:?}", fields[2]))),
                    };
                    Move::FreeExpand {
                        pos: num(fields[1])?,
                        letter,
                    }
                }
                ("R", 6) => {
                    let inverted = match fields[4] {
                        "0" => false,
                        "1" => true,
                        other => return Err(err(format!("bad inversion flag {other:?}"))),
                    };
                    let small = |s: &str| -> Result<u8, TraceError> {
                        u8::try_from(num(s)?).map_err(|_| err(format!("value {s} too large")))
                    };
                    Move::ApplyRelator {
                        pos: num(fields[1])?,
                        form: RelatorForm {
                            id: small(fields[2])?,
                            rotation: small(fields[3])?,
                            inverted,
                        },
                        split: small(fields[5])?,
                    }
                }
                _ => return Err(err(format!("unrecognised move {raw:?}"))),
            };
            moves.push(m);
        }
        Ok(Trace::new(start, moves))
    }
}

pub fn validate_trace(t: &Trace) -> Result<Replay, TraceError> {
    t.validate()
}

pub fn compose_traces(t1: &Trace, t2: &Trace) -> Result<Trace, TraceError> {
    t1.compose(t2)
}

pub fn invert_trace(t: &Trace) -> Result<Trace, TraceError> {
    t.invert()
}

pub fn embed_trace(t: &Trace, prefix: &Word, suffix: &Word) -> Trace {
    t.embed(prefix, suffix)
}

/// Records moves against a live copy of the word so that later moves can be
/// positioned relative to it.
#[derive(Debug, Clone)]
pub(crate) struct TraceBuilder {
    start: Word,
    current: Vec<Generator>,
    moves: Vec<Move>,
}

impl TraceBuilder {
    pub fn new(start: Word) -> Self {
        let current = start.letters().to_vec();
        TraceBuilder {
            start,
            current,
            moves: Vec::new(),
        }
    }

    pub fn current(&self) -> &[Generator] {
        &self.current
    }

    pub fn push(&mut self, m: Move) {
        if let Err(reason) = m.apply(&mut self.current) {
            panic!("builder produced an illegal move {m:?}: {reason}");
        }
        self.moves.push(m);
    }

    /// Replaces `current[at..at+u_len]` by `v` with one relator application.
    #[cfg(test)]
    pub fn replace(&mut self, at: usize, u_len: usize, v: &[Generator]) {
        let mut key = self.current[at..at + u_len].to_vec();
        key.extend(invert_letters(v));
        let form = crate::presentation::lookup_form(&key)
            .unwrap_or_else(|| panic!("{} is not a relator form", Word::from(key.clone())));
        self.push(Move::ApplyRelator {
            pos: at + 1,
            form,
            split: u_len as u8,
        });
    }

    /// Freely reduces `current[lo..hi]`, leaving the rest untouched.
    pub fn free_reduce_range(&mut self, lo: usize, hi: usize) {
        let mut stack: Vec<Generator> = Vec::with_capacity(hi - lo);
        let segment = self.current[lo..hi].to_vec();
        for g in segment {
            match stack.last() {
                Some(&top) if top.is_inverse_of(g) => {
                    self.moves.push(Move::FreeReduce {
                        pos: lo + stack.len(),
                    });
                    stack.pop();
                }
                _ => stack.push(g),
            }
        }
        self.current.splice(lo..hi, stack);
    }

    /// Appends `t`, applied to the subword starting at 0-based `at`.
    /// `end` must be the result of replaying `t`.
    pub fn splice(&mut self, at: usize, t: &Trace, end: &[Generator]) {
        let len = t.start.len();
        debug_assert_eq!(&self.current[at..at + len], t.start.letters());
        self.moves.extend(t.moves.iter().map(|m| m.shifted(at)));
        self.current.splice(at..at + len, end.iter().copied());
    }

    pub fn finish(self) -> (Trace, Word) {
        (Trace::new(self.start, self.moves), Word::from(self.current))
    }
}
