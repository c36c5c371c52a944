//! Seeded word generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HarnessError;
use crate::presentation::{relator, RELATOR_COUNT};
use crate::rewriting::{preferred_form, Filler};
use crate::word::{Base, Generator, Interval, Sign, Word};

/// The generator behind every seeded routine in the crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_letters() -> Vec<Generator> {
    Generator::all().collect()
}

pub fn random_letter(rng: &mut impl Rng, with_s: bool) -> Generator {
    let n = if with_s { 10 } else { 8 };
    Generator::all().nth(rng.gen_range(0..n)).unwrap()
}

fn random_signed(rng: &mut impl Rng, sign: Sign) -> Generator {
    let base = [Base::A, Base::B, Base::C, Base::D][rng.gen_range(0..4)];
    Generator::new(base, sign)
}

/// Uniform word of length `len`, not necessarily freely reduced.
pub fn random_word(rng: &mut impl Rng, len: usize, with_s: bool) -> Word {
    (0..len).map(|_| random_letter(rng, with_s)).collect()
}

/// An s-free word of exponent sum zero and even length at most `max_len`.
/// Half the time the signs are shuffled uniformly; otherwise they come in
/// runs, which produces larger suffix sums.
pub fn random_zero_sum_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let half = rng.gen_range(0..=max_len / 2);
    let mut signs: Vec<Sign> = std::iter::repeat_n(Sign::Pos, half)
        .chain(std::iter::repeat_n(Sign::Neg, half))
        .collect();
    if rng.gen_bool(0.5) {
        signs.shuffle(rng);
    } else {
        let mut runs: Vec<Vec<Sign>> = Vec::new();
        let (mut pos, mut neg) = (half, half);
        while pos + neg > 0 {
            let sign = if neg == 0 || (pos > 0 && rng.gen_bool(0.5)) {
                Sign::Pos
            } else {
                Sign::Neg
            };
            let left = if sign == Sign::Pos { &mut pos } else { &mut neg };
            let run = rng.gen_range(1..=*left);
            *left -= run;
            runs.push(vec![sign; run]);
        }
        signs = runs.concat();
    }
    signs.into_iter().map(|s| random_signed(rng, s)).collect()
}

/// A random alternating word with `pairs` blocks `x y⁻¹`.
pub fn random_alternating(rng: &mut impl Rng, pairs: usize) -> Word {
    (0..pairs)
        .flat_map(|_| [Sign::Pos, Sign::Neg])
        .collect::<Vec<_>>()
        .into_iter()
        .map(|s| random_signed(rng, s))
        .collect()
}

/// A balanced word of exactly `len` letters (`len` rounded down to even),
/// assembled from concatenations, `x α y` wrappings and pinches `s^±1 α s^∓1`.
pub fn random_balanced(rng: &mut impl Rng, len: usize) -> Word {
    let mut out = Vec::with_capacity(len);
    balanced_into(rng, len - len % 2, &mut out);
    Word::from(out)
}

fn balanced_into(rng: &mut impl Rng, len: usize, out: &mut Vec<Generator>) {
    if len == 0 {
        return;
    }
    let choice = rng.gen_range(0..10);
    if len >= 4 && choice >= 6 {
        let left = 2 * rng.gen_range(1..len / 2);
        balanced_into(rng, left, out);
        balanced_into(rng, len - left, out);
    } else if choice < 3 {
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        out.push(Generator::new(Base::S, sign));
        balanced_into(rng, len - 2, out);
        out.push(Generator::new(Base::S, sign.flip()));
    } else {
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        out.push(random_signed(rng, sign));
        balanced_into(rng, len - 2, out);
        out.push(random_signed(rng, sign.flip()));
    }
}

/// A word `τ` built from random s-free segments and `p` alternating
/// segments, with the 1-based positions of the alternating ones.
pub fn random_with_alternating(rng: &mut impl Rng, max_len: usize) -> (Word, Vec<Interval>) {
    let mut letters = Vec::new();
    let mut marks = Vec::new();
    while letters.len() < max_len {
        let room = max_len - letters.len();
        if rng.gen_bool(0.4) && room >= 2 {
            let pairs = rng.gen_range(1..=(room / 2).min(6));
            let start = letters.len();
            letters.extend(random_alternating(rng, pairs).iter());
            marks.push(Interval::from_range(start..letters.len()));
        } else {
            let len = rng.gen_range(0..=room.min(6));
            letters.extend((0..len).map(|_| random_letter(rng, false)));
            if len == 0 && rng.gen_bool(0.3) {
                break;
            }
        }
    }
    (Word::from(letters), marks)
}

/// A balanced word with some preferred alternating subwords spliced in at
/// random, with the spliced positions.
pub fn random_marked_balanced(
    rng: &mut impl Rng,
    free_len: usize,
    marks: usize,
    mark_len: usize,
) -> (Word, Vec<Interval>) {
    let base = random_balanced(rng, free_len);
    let mut cuts: Vec<usize> = (0..marks).map(|_| rng.gen_range(0..=base.len())).collect();
    cuts.sort_unstable();
    let mut letters = Vec::new();
    let mut intervals = Vec::new();
    let mut prev = 0;
    for cut in cuts {
        letters.extend_from_slice(&base[prev..cut]);
        prev = cut;
        let u = random_zero_sum_word(rng, mark_len);
        let (v, _) = preferred_form(&u, Filler::CaInv).expect("zero-sum input");
        if v.is_empty() {
            continue;
        }
        let start = letters.len();
        letters.extend(v.iter());
        intervals.push(Interval::from_range(start..letters.len()));
    }
    letters.extend_from_slice(&base[prev..]);
    (Word::from(letters), intervals)
}

/// `free_reduce(∏ u_j r_j^±1 u_j⁻¹)` over `m` conjugates with `u_j` of
/// length `l`.
pub fn gen_random_null_homotopic(seed: u64, m: usize, l: usize) -> Word {
    let mut rng = rng_from_seed(seed);
    let letters = all_letters();
    let mut out = Vec::new();
    for _ in 0..m {
        let u: Word = (0..l).map(|_| *letters.choose(&mut rng).unwrap()).collect();
        let r = relator(rng.gen_range(0..RELATOR_COUNT));
        let r = if rng.gen_bool(0.5) { r.clone() } else { r.inverse() };
        out.extend(u.iter());
        out.extend(r.iter());
        out.extend(u.inverse().iter());
    }
    Word::from(out).free_reduce()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Commutator,
    Hnn,
    Random,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [FamilyKind::Commutator, FamilyKind::Hnn, FamilyKind::Random];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Commutator => "commutator",
            FamilyKind::Hnn => "hnn",
            FamilyKind::Random => "random",
        }
    }

    pub fn parse(name: &str) -> Result<Self, HarnessError> {
        FamilyKind::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| HarnessError::UnknownFamily(name.to_string()))
    }

    /// The family member of parameter `n`.
    pub fn word(self, n: usize) -> Word {
        let p = |c: char| Generator::from_char(c).unwrap();
        match self {
            FamilyKind::Commutator => {
                let mut v = Vec::with_capacity(4 * n);
                for c in ['A', 'C', 'a', 'c'] {
                    v.extend(std::iter::repeat_n(p(c), n));
                }
                Word::from(v)
            }
            FamilyKind::Hnn => {
                let mut v = vec![p('S')];
                for _ in 0..n {
                    v.extend([p('b'), p('A')]);
                }
                v.push(p('s'));
                for _ in 0..n {
                    v.extend([p('a'), p('B')]);
                }
                Word::from(v)
            }
            FamilyKind::Random => gen_random_null_homotopic(n as u64, n, 2),
        }
    }

    /// A member of length at most `target` (at least one conjugate or
    /// repetition), drawing on `seed` where the family is random.
    pub fn word_for_length(self, target: usize, seed: u64) -> Word {
        match self {
            FamilyKind::Commutator => self.word((target / 4).max(1)),
            FamilyKind::Hnn => self.word((target.saturating_sub(2) / 4).max(1)),
            FamilyKind::Random => {
                let mixed = seed ^ ((target as u64) << 32);
                gen_random_null_homotopic(mixed, (target / 10).max(1), 2)
            }
        }
    }
}

pub fn gen_family(name: &str, n: usize) -> Result<Word, HarnessError> {
    Ok(FamilyKind::parse(name)?.word(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_balanced, is_null_homotopic};
    use crate::rewriting::recognize_preferred;

    #[test]
    fn family_examples() {
        assert_eq!(gen_family("commutator", 1).unwrap().to_string(), "ACac");
        let hnn = gen_family("hnn", 1).unwrap();
        assert_eq!(hnn.to_string(), "SbAsaB");
        assert!(is_null_homotopic(&hnn));
        assert!(matches!(gen_family("nope", 1), Err(HarnessError::UnknownFamily(_))));
        for n in 1..6 {
            for f in FamilyKind::ALL {
                assert!(is_null_homotopic(&f.word(n)), "{} {n}", f.name());
            }
        }
    }

    #[test]
    fn random_null_homotopic_words() {
        for seed in 0..200 {
            let w = gen_random_null_homotopic(seed, 3, 2);
            assert!(is_null_homotopic(&w));
            assert!(w.len() <= 3 * (2 * 2 + 6));
            assert_eq!(w, gen_random_null_homotopic(seed, 3, 2));
        }
        let w = gen_random_null_homotopic(5, 1, 0);
        assert!(w.len() == 4 || w.len() == 6);
    }

    #[test]
    fn balanced_and_marked_generators() {
        let mut rng = rng_from_seed(3);
        for len in 0..40 {
            let w = random_balanced(&mut rng, len);
            assert_eq!(w.len(), len - len % 2);
            assert!(is_balanced(&w), "{w}");
            let (w, marks) = random_marked_balanced(&mut rng, len, 3, 8);
            assert!(is_balanced(&w), "{w}");
            for iv in marks {
                assert!(recognize_preferred(&w[iv.range()]).is_some());
            }
            let z = random_zero_sum_word(&mut rng, len);
            assert_eq!(z.exponent_sum(), 0);
            assert!(z.len() <= len);
        }
    }

    #[test]
    fn alternating_segments() {
        let mut rng = rng_from_seed(9);
        for _ in 0..100 {
            let (w, marks) = random_with_alternating(&mut rng, 40);
            assert!(w.len() <= 40);
            for iv in marks {
                assert!(w[iv.range()].len() % 2 == 0);
                assert!(crate::word::is_alternating(&w[iv.range()]));
            }
        }
    }
}
