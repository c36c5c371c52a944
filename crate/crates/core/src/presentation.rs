//! The fixed presentation
//! `⟨a,b,c,d,s | [a,c],[a,d],[b,c],[b,d], sᵃ=sᵇ=sᶜ=sᵈ⟩` and lookups from
//! cyclic relator words back to `(id, rotation, inverted)` triples.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::word::{invert_letters, Generator, Word};

pub const RELATOR_COUNT: usize = 10;

/// Relator texts, ids 0–9. The ids are part of the trace file format.
pub const RELATOR_TEXT: [&str; RELATOR_COUNT] = [
    "ACac", "ADad", "BCbc", "BDbd", "AsaBSb", "AsaCSc", "AsaDSd", "BsbCSc", "BsbDSd", "CscDSd",
];

/// A relator chosen up to cyclic rotation and inversion.
///
/// The word it denotes is `rotate_left(relator[id], rotation)`, inverted
/// afterwards when `inverted` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelatorForm {
    pub id: u8,
    pub rotation: u8,
    pub inverted: bool,
}

impl RelatorForm {
    pub fn len(&self) -> usize {
        relator(self.id as usize).len()
    }

    pub fn is_valid(&self) -> bool {
        (self.id as usize) < RELATOR_COUNT && (self.rotation as usize) < self.len()
    }

    pub fn word(&self) -> &'static [Generator] {
        &table().forms[form_index(self.id, self.rotation, self.inverted)]
    }

    /// The form denoting the inverse word.
    pub fn inverse(&self) -> RelatorForm {
        RelatorForm {
            inverted: !self.inverted,
            ..*self
        }
    }
}

struct Table {
    relators: Vec<Word>,
    forms: Vec<Vec<Generator>>,
    lookup: HashMap<Vec<Generator>, RelatorForm>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let relators: Vec<Word> = RELATOR_TEXT
            .iter()
            .map(|t| Word::parse(t).expect("relator text"))
            .collect();
        let mut forms = vec![Vec::new(); RELATOR_COUNT * 12];
        let mut lookup = HashMap::new();
        for (id, r) in relators.iter().enumerate() {
            for rot in 0..r.len() {
                let mut rotated = r.letters()[rot..].to_vec();
                rotated.extend_from_slice(&r.letters()[..rot]);
                for inverted in [false, true] {
                    let form = RelatorForm {
                        id: id as u8,
                        rotation: rot as u8,
                        inverted,
                    };
                    let word = if inverted {
                        invert_letters(&rotated)
                    } else {
                        rotated.clone()
                    };
                    // Ascending (id, rotation), forward before inverted: first one wins.
                    lookup.entry(word.clone()).or_insert(form);
                    forms[form_index(form.id, form.rotation, form.inverted)] = word;
                }
            }
        }
        Table {
            relators,
            forms,
            lookup,
        }
    })
}

fn form_index(id: u8, rotation: u8, inverted: bool) -> usize {
    id as usize * 12 + rotation as usize * 2 + inverted as usize
}

pub fn relator(id: usize) -> &'static Word {
    &table().relators[id]
}

pub fn relators() -> &'static [Word] {
    &table().relators
}

/// Finds a relator form spelling exactly `letters`, if any.
pub fn lookup_form(letters: &[Generator]) -> Option<RelatorForm> {
    table().lookup.get(letters).copied()
}

/// Every distinct cyclic conjugate of every relator and its inverse, in
/// ascending `(id, rotation)` order with the forward form first.
pub fn all_forms() -> &'static [RelatorForm] {
    static FORMS: OnceLock<Vec<RelatorForm>> = OnceLock::new();
    FORMS.get_or_init(|| {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (id, r) in relators().iter().enumerate() {
            for rotation in 0..r.len() {
                for inverted in [false, true] {
                    let f = RelatorForm {
                        id: id as u8,
                        rotation: rotation as u8,
                        inverted,
                    };
                    if seen.insert(f.word().to_vec()) {
                        out.push(f);
                    }
                }
            }
        }
        out
    })
}
