//! Brute-force Dehn area of short words.
//!
//! States are freely reduced words. One edge inserts a relator form at some
//! position and freely reduces; every such edge costs one. Edges are not
//! symmetric: an insertion can cancel past the relator, and undoing that
//! needs a conjugate of a relator. So the search runs forward only, breadth
//! first from the input.
//!
//! A word is one edge from the empty word exactly when its cyclic reduction
//! is a relator form, so the last layer is never generated. A length cap
//! keeps the state space finite; the result is marked exact only when no
//! path through an over-long state could be cheaper.

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::group::is_null_homotopic;
use crate::presentation::{all_forms, RelatorForm};
use crate::trace::{Move, Trace, TraceBuilder};
use crate::word::{free_reduce_letters, Generator, Word};

/// Longest state the packed representation holds.
pub const MAX_STATE_LEN: usize = 31;
/// Largest `max_len` accepted by [`enumerate_null_homotopic`] unless forced.
pub const ENUMERATION_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration up to length {0} is too large (cap {ENUMERATION_CAP})")]
    CapTooLarge(usize),
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub area: Option<u64>,
    /// Some cap may have hidden a cheaper path, or stopped the search.
    pub exhausted: bool,
    pub states_explored: u64,
    /// A trace from the input to the empty word of cost `area`.
    pub witness: Option<Trace>,
}

type Key = u128;

fn code(g: Generator) -> u8 {
    Generator::all().position(|h| h == g).unwrap() as u8 + 1
}

#[cfg(test)]
fn decode(c: u8) -> Generator {
    Generator::all().nth(c as usize - 1).unwrap()
}

fn inverse_code(c: u8) -> u8 {
    if c % 2 == 1 {
        c + 1
    } else {
        c - 1
    }
}

fn pack(letters: &[u8]) -> Key {
    letters
        .iter()
        .fold(0u128, |acc, &c| (acc << 4) | c as u128)
}

fn unpack(mut key: Key) -> Vec<u8> {
    let mut out = Vec::new();
    while key != 0 {
        out.push((key & 0xf) as u8);
        key >>= 4;
    }
    out.reverse();
    out
}

/// Freely reduces `prefix · middle · suffix` into `out`.
fn reduce_into(out: &mut Vec<u8>, parts: [&[u8]; 3]) {
    out.clear();
    for part in parts {
        for &c in part {
            if out.last() == Some(&inverse_code(c)) {
                out.pop();
            } else {
                out.push(c);
            }
        }
    }
}

struct Forms {
    forms: Vec<RelatorForm>,
    codes: Vec<Vec<u8>>,
    index: FxHashMap<Vec<u8>, usize>,
}

impl Forms {
    fn new() -> Self {
        let mut forms = all_forms().to_vec();
        forms.sort_by_key(|f| (f.id, f.rotation, f.inverted));
        let codes: Vec<Vec<u8>> = forms
            .iter()
            .map(|f| f.word().iter().map(|&g| code(g)).collect())
            .collect();
        let index = codes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Forms {
            forms,
            codes,
            index,
        }
    }

    /// Every neighbour of `x` in tie-break order.
    fn for_each_neighbour(&self, x: &[u8], mut f: impl FnMut(usize, usize, &[u8])) {
        let mut buf = Vec::with_capacity(x.len() + 8);
        for pos in 0..=x.len() {
            for (fi, rho) in self.codes.iter().enumerate() {
                reduce_into(&mut buf, [&x[..pos], rho, &x[pos..]]);
                f(pos, fi, &buf);
            }
        }
    }

    /// The insertion `(pos, form)` taking `x` to the empty word, if `x` is
    /// `g σ g⁻¹` for a relator form `σ`.
    fn last_edge(&self, x: &[u8]) -> Option<(usize, RelatorForm)> {
        let n = x.len();
        let mut i = 0;
        while 2 * i + 1 < n && x[i] == inverse_code(x[n - 1 - i]) {
            i += 1;
        }
        let fi = *self.index.get(&x[i..n - i])?;
        Some((n - i, self.forms[fi].inverse()))
    }
}

/// `(parent, insertion position, form index)`; the root is its own parent.
type Parent = (Key, u16, u16);

/// Minimum number of relator insertions taking `w` to the empty word,
/// searched within the caps. Words that are not null-homotopic are answered
/// at once without searching.
pub fn brute_area(w: &Word, max_len: usize, max_cost: u64) -> OracleResult {
    if !is_null_homotopic(w) {
        return OracleResult {
            area: None,
            exhausted: false,
            states_explored: 0,
            witness: None,
        };
    }
    search_area(w, max_len, max_cost)
}

/// The search behind [`brute_area`], run whatever the input.
pub fn search_area(w: &Word, max_len: usize, max_cost: u64) -> OracleResult {
    let max_len = max_len.min(MAX_STATE_LEN);
    let reduced: Vec<u8> = free_reduce_letters(w).iter().map(|&g| code(g)).collect();
    let mut b = TraceBuilder::new(w.clone());
    b.free_reduce_range(0, w.len());
    if reduced.is_empty() {
        let (trace, _) = b.finish();
        return OracleResult {
            area: Some(0),
            exhausted: false,
            states_explored: 1,
            witness: Some(trace),
        };
    }
    let unreached = |exhausted, states| OracleResult {
        area: None,
        exhausted,
        states_explored: states,
        witness: None,
    };
    if reduced.len() > max_len {
        return unreached(true, 0);
    }
    let forms = Forms::new();
    let root = pack(&reduced);
    let mut visited: FxHashMap<Key, Parent> = FxHashMap::default();
    visited.insert(root, (root, 0, 0));
    let mut frontier = vec![root];
    // Cheapest cost any path through an over-long state could have.
    let mut escape: Option<u64> = None;
    let mut depth = 0u64;
    while depth < max_cost {
        let hit = frontier
            .iter()
            .find_map(|&k| forms.last_edge(&unpack(k)).map(|step| (k, step)));
        if let Some((node, step)) = hit {
            let area = depth + 1;
            let witness = build_witness(b, &forms, &visited, node, step);
            return OracleResult {
                area: Some(area),
                exhausted: escape.is_some_and(|e| e < area),
                states_explored: visited.len() as u64,
                witness: Some(witness),
            };
        }
        if depth + 1 == max_cost {
            break;
        }
        let mut next = Vec::new();
        for &key in &frontier {
            let x = unpack(key);
            forms.for_each_neighbour(&x, |pos, fi, nb| {
                if nb.len() > max_len {
                    let rest = if forms.last_edge(nb).is_some() { 1 } else { 2 };
                    let cost = depth + 1 + rest;
                    escape = Some(escape.map_or(cost, |e| e.min(cost)));
                    return;
                }
                let nk = pack(nb);
                visited.entry(nk).or_insert_with(|| {
                    next.push(nk);
                    (key, pos as u16, fi as u16)
                });
            });
        }
        frontier = next;
        depth += 1;
        if frontier.is_empty() {
            return unreached(escape.is_some(), visited.len() as u64);
        }
    }
    unreached(true, visited.len() as u64)
}

fn push_insertion(b: &mut TraceBuilder, pos: usize, form: RelatorForm) {
    b.push(Move::ApplyRelator {
        pos: pos + 1,
        form: form.inverse(),
        split: 0,
    });
    let len = b.current().len();
    b.free_reduce_range(0, len);
}

fn build_witness(
    mut b: TraceBuilder,
    forms: &Forms,
    visited: &FxHashMap<Key, Parent>,
    node: Key,
    last: (usize, RelatorForm),
) -> Trace {
    let mut edges = Vec::new();
    let mut k = node;
    loop {
        let (parent, pos, fi) = visited[&k];
        if parent == k {
            break;
        }
        edges.push((pos as usize, forms.forms[fi as usize]));
        k = parent;
    }
    for &(pos, form) in edges.iter().rev() {
        push_insertion(&mut b, pos, form);
    }
    push_insertion(&mut b, last.0, last.1);
    let (trace, end) = b.finish();
    debug_assert!(end.is_empty());
    trace
}

/// Freely reduced null-homotopic words of length at most `max_len`, in
/// lexicographic order of their text.
pub fn enumerate_null_homotopic(max_len: usize, force: bool) -> Result<Vec<Word>, OracleError> {
    if max_len > ENUMERATION_CAP && !force {
        return Err(OracleError::CapTooLarge(max_len));
    }
    let mut alphabet: Vec<Generator> = Generator::all().collect();
    alphabet.sort_by_key(|g| g.to_char());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(max_len);
    enumerate_rec(&alphabet, max_len, &mut cur, &mut out);
    Ok(out)
}

fn enumerate_rec(alphabet: &[Generator], max_len: usize, cur: &mut Vec<Generator>, out: &mut Vec<Word>) {
    if is_null_homotopic(cur) {
        out.push(Word::from(cur.clone()));
    }
    if cur.len() == max_len {
        return;
    }
    for &g in alphabet {
        if cur.last().is_some_and(|&l| l.is_inverse_of(g)) {
            continue;
        }
        cur.push(g);
        enumerate_rec(alphabet, max_len, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::relators;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn packing_round_trips() {
        let letters: Vec<u8> = w("aSdsDBc").iter().map(|&g| code(g)).collect();
        assert_eq!(unpack(pack(&letters)), letters);
        assert_eq!(decode(code(Generator::from_char('D').unwrap())).to_char(), 'D');
    }

    #[test]
    fn trivial_words() {
        let r = brute_area(&w("aA"), 10, 4);
        assert_eq!(r.area, Some(0));
        assert!(!r.exhausted);
        let r = brute_area(&w("ab"), 10, 4);
        assert_eq!(r.area, None);
        assert!(!r.exhausted);
    }

    #[test]
    fn relators_have_area_one() {
        for rel in relators() {
            let r = brute_area(rel, 8, 3);
            assert_eq!(r.area, Some(1), "{rel}");
            assert!(!r.exhausted);
            let replay = r.witness.unwrap().validate().unwrap();
            assert_eq!(replay.end, Word::empty());
            assert_eq!(replay.cost, 1);
        }
    }

    #[test]
    fn commutator_of_a_with_cd() {
        let r = brute_area(&w("ADCacd"), 10, 4);
        assert_eq!(r.area, Some(2));
        assert!(!r.exhausted);
        assert_eq!(r.witness.unwrap().validate().unwrap().cost, 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_null_homotopic(0, false).unwrap(), vec![Word::empty()]);
        assert_eq!(enumerate_null_homotopic(3, false).unwrap(), vec![Word::empty()]);
        let four = enumerate_null_homotopic(4, false).unwrap();
        assert_eq!(four.len(), 33);
        let texts: Vec<String> = four.iter().map(|w| w.to_string()).collect();
        let mut sorted = texts.clone();
        sorted.sort();
        assert_eq!(texts, sorted);
        assert!(matches!(enumerate_null_homotopic(7, false), Err(OracleError::CapTooLarge(7))));
    }
}
