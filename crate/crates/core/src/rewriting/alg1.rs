//! Conversion of a zero-exponent-sum s-free word into preferred alternating
//! form `μ̄ · filler^κ · λ̄`.

use super::{product_rewrite, RewriteError};
use crate::group::project_normal_form;
use crate::trace::Trace;
use crate::word::{exponent_sum, Base, Generator, Sign, Word};

const A: Generator = Generator::pos(Base::A);
const A_INV: Generator = Generator::neg(Base::A);
const C: Generator = Generator::pos(Base::C);
const C_INV: Generator = Generator::neg(Base::C);

/// The block repeated between `μ̄` and `λ̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Filler {
    /// `(c a⁻¹)^κ`. Preserves the group element.
    #[default]
    CaInv,
    /// `(a c⁻¹)^κ`. Does not preserve the element once `κ ≠ 0`; kept so the
    /// test suites can be run against it.
    AcInv,
}

impl Filler {
    fn block(self, kappa: i64) -> [Generator; 2] {
        match (self, kappa > 0) {
            (Filler::CaInv, true) => [C, A_INV],
            (Filler::CaInv, false) => [A, C_INV],
            (Filler::AcInv, true) => [A, C_INV],
            (Filler::AcInv, false) => [C, A_INV],
        }
    }

    pub fn word(self, kappa: i64) -> Word {
        Word::from(self.block(kappa).repeat(kappa.unsigned_abs() as usize))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreferredDecomposition {
    pub mu_bar: Word,
    pub kappa: i64,
    pub lambda_bar: Word,
}

impl PreferredDecomposition {
    pub fn assemble(&self) -> Word {
        self.assemble_with(Filler::CaInv)
    }

    pub fn assemble_with(&self, filler: Filler) -> Word {
        self.mu_bar
            .concat(&filler.word(self.kappa))
            .concat(&self.lambda_bar)
    }

    /// `μ`: the `a/b` letters of `μ̄`.
    pub fn mu(&self) -> Word {
        self.mu_bar.iter().copied().filter(|g| g.base != Base::C).collect()
    }

    /// `λ`: the `c/d` letters of `λ̄`.
    pub fn lambda(&self) -> Word {
        self.lambda_bar.iter().copied().filter(|g| g.base != Base::A).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Alg1Output {
    pub v: Word,
    pub decomposition: PreferredDecomposition,
    pub trace: Trace,
    /// `inserted[i]` when `v[i]` is a letter added by the interspersing or
    /// filler steps. The remaining letters spell `μλ`.
    pub inserted: Vec<bool>,
}

fn intersperse(letters: &[Generator], partner: Generator) -> (Vec<Generator>, Vec<bool>) {
    let mut out = Vec::with_capacity(2 * letters.len());
    let mut mask = Vec::with_capacity(2 * letters.len());
    for &x in letters {
        match x.sign {
            Sign::Pos => {
                out.extend([x, partner.inverse()]);
                mask.extend([false, true]);
            }
            Sign::Neg => {
                out.extend([partner, x]);
                mask.extend([true, false]);
            }
        }
    }
    (out, mask)
}

fn check_input(u: &[Generator]) -> Result<(), RewriteError> {
    if u.iter().any(|g| g.is_s()) {
        return Err(RewriteError::PreconditionViolated("input contains s".into()));
    }
    if exponent_sum(u) != 0 {
        return Err(RewriteError::PreconditionViolated(
            "input has nonzero exponent sum".into(),
        ));
    }
    Ok(())
}

fn build(u: &[Generator], filler: Filler) -> (Word, PreferredDecomposition, Vec<bool>) {
    let nf = project_normal_form(u).expect("checked s-free");
    let (mu_bar, mut mask) = intersperse(&nf.ab_part, C);
    let (lambda_bar, lambda_mask) = intersperse(&nf.cd_part, A);
    let kappa = nf.ab_part.exponent_sum();
    let decomposition = PreferredDecomposition {
        mu_bar: Word::from(mu_bar),
        kappa,
        lambda_bar: Word::from(lambda_bar),
    };
    mask.extend(std::iter::repeat_n(true, 2 * kappa.unsigned_abs() as usize));
    mask.extend(lambda_mask);
    (decomposition.assemble_with(filler), decomposition, mask)
}

/// The word Algorithm I would output with the given filler, without a trace.
pub fn preferred_form(
    u: &[Generator],
    filler: Filler,
) -> Result<(Word, PreferredDecomposition), RewriteError> {
    check_input(u)?;
    let (v, d, _) = build(u, filler);
    Ok((v, d))
}

pub fn alg1_preferred(u: &[Generator]) -> Result<Alg1Output, RewriteError> {
    check_input(u)?;
    let (v, decomposition, inserted) = build(u, Filler::CaInv);
    let trace = product_rewrite(u, &v);
    Ok(Alg1Output {
        v,
        decomposition,
        trace,
        inserted,
    })
}

/// Classification of a two-letter block of a candidate preferred word.
#[derive(Clone, Copy)]
struct Pair {
    /// The `μ` letter if the block can sit in `μ̄`.
    mu: Option<Generator>,
    /// The `λ` letter if the block can sit in `λ̄`.
    lambda: Option<Generator>,
    filler_pos: bool,
    filler_neg: bool,
}

fn classify(x: Generator, y: Generator) -> Pair {
    let mu = match (x, y) {
        (x, C_INV) if x.base.is_ab() && x.sign == Sign::Pos => Some(x),
        (C, y) if y.base.is_ab() && y.sign == Sign::Neg => Some(y),
        _ => None,
    };
    let lambda = match (x, y) {
        (x, A_INV) if x.base.is_cd() && x.sign == Sign::Pos => Some(x),
        (A, y) if y.base.is_cd() && y.sign == Sign::Neg => Some(y),
        _ => None,
    };
    Pair {
        mu,
        lambda,
        filler_pos: (x, y) == (C, A_INV),
        filler_neg: (x, y) == (A, C_INV),
    }
}

/// Recovers a decomposition `μ̄ · (c a⁻¹)^κ · λ̄` of `v` with `μ`, `λ`
/// freely reduced and `κ = exp(μ) = -exp(λ)`, if one exists. When several
/// exist the one with the shortest `μ̄` is returned.
pub fn recognize_preferred(v: &[Generator]) -> Option<PreferredDecomposition> {
    if !v.len().is_multiple_of(2) || v.iter().any(|g| g.is_s()) {
        return None;
    }
    let pairs: Vec<Pair> = v.chunks(2).map(|p| classify(p[0], p[1])).collect();
    let n = pairs.len();

    // Longest prefix usable as μ̄, with μ freely reduced.
    let mut mu_ok = 0;
    let mut mu_exp = vec![0i64; n + 1];
    while mu_ok < n {
        let Some(g) = pairs[mu_ok].mu else { break };
        if mu_ok > 0 && pairs[mu_ok - 1].mu.unwrap().is_inverse_of(g) {
            break;
        }
        mu_exp[mu_ok + 1] = mu_exp[mu_ok] + g.exponent();
        mu_ok += 1;
    }
    // Shortest suffix start usable as λ̄, with λ freely reduced.
    let mut lambda_from = n;
    let mut lambda_exp = vec![0i64; n + 1];
    while lambda_from > 0 {
        let Some(g) = pairs[lambda_from - 1].lambda else { break };
        if lambda_from < n && pairs[lambda_from].lambda.unwrap().is_inverse_of(g) {
            break;
        }
        lambda_exp[lambda_from - 1] = lambda_exp[lambda_from] + g.exponent();
        lambda_from -= 1;
    }
    // Runs of filler blocks starting at each index.
    let mut run_pos = vec![0usize; n + 1];
    let mut run_neg = vec![0usize; n + 1];
    for i in (0..n).rev() {
        run_pos[i] = if pairs[i].filler_pos { run_pos[i + 1] + 1 } else { 0 };
        run_neg[i] = if pairs[i].filler_neg { run_neg[i + 1] + 1 } else { 0 };
    }

    for m in 0..=mu_ok {
        let kappa = mu_exp[m];
        let f = kappa.unsigned_abs() as usize;
        let run = if kappa > 0 { run_pos[m] } else { run_neg[m] };
        if f > run || m + f < lambda_from {
            continue;
        }
        let l = m + f;
        if lambda_exp[l] != -kappa {
            continue;
        }
        return Some(PreferredDecomposition {
            mu_bar: Word::from(v[..2 * m].to_vec()),
            kappa,
            lambda_bar: Word::from(v[2 * l..].to_vec()),
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::equal_in_s;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        let out = alg1_preferred(&Word::empty()).unwrap();
        assert_eq!(out.v, Word::empty());
        assert_eq!(out.decomposition.kappa, 0);
        assert_eq!(out.trace.cost(), 0);

        let out = alg1_preferred(&w("bD")).unwrap();
        assert_eq!(out.v, w("bCcAaD"));
        assert_eq!(out.decomposition.mu_bar, w("bC"));
        assert_eq!(out.decomposition.kappa, 1);
        assert_eq!(out.decomposition.lambda_bar, w("aD"));

        let out = alg1_preferred(&w("cdCD")).unwrap();
        assert_eq!(out.v, w("cAdAaCaD"));
        assert_eq!(out.decomposition.kappa, 0);
        assert_eq!(out.decomposition.mu_bar, Word::empty());
    }

    #[test]
    fn trace_replays_to_output() {
        for text in ["bD", "cdCD", "aBcD", "dCbaAB", "ccDDaBbA", "AAcc"] {
            let out = alg1_preferred(&w(text)).unwrap();
            let replay = out.trace.validate().unwrap();
            assert_eq!(replay.end, out.v, "{text}");
            assert!(out.v.is_alternating());
            assert!(equal_in_s(&w(text), &out.v));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(alg1_preferred(&w("ab")).is_err());
        assert!(alg1_preferred(&w("sS")).is_err());
    }

    #[test]
    fn literal_filler_breaks_equality() {
        let (v, _) = preferred_form(&w("bD"), Filler::AcInv).unwrap();
        assert!(v.is_alternating());
        assert!(!equal_in_s(&w("bD"), &v));
    }

    #[test]
    fn inserted_mask_recovers_product_form() {
        let out = alg1_preferred(&w("dCbaAB")).unwrap();
        let kept: Word = out
            .v
            .iter()
            .zip(&out.inserted)
            .filter(|(_, &ins)| !ins)
            .map(|(g, _)| *g)
            .collect();
        let nf = project_normal_form(&w("dCbaAB")).unwrap();
        assert_eq!(kept, nf.ab_part.concat(&nf.cd_part));
    }

    #[test]
    fn recognizer_accepts_outputs() {
        for text in ["", "bD", "cdCD", "aBcD", "dCbaAB", "aaCC", "CCaa", "bbDD"] {
            let out = alg1_preferred(&w(text)).unwrap();
            let d = recognize_preferred(&out.v).unwrap_or_else(|| panic!("{text}"));
            assert_eq!(d.assemble(), out.v);
            assert_eq!(d.mu().concat(&d.lambda()), out.decomposition.mu().concat(&out.decomposition.lambda()));
        }
    }

    #[test]
    fn recognizer_rejects_other_words() {
        for text in ["a", "aB", "bCbC", "bCaC", "aDaD", "sS", "bCBc"] {
            assert!(recognize_preferred(&w(text)).is_none(), "{text}");
        }
    }
}
