//! Combing pure mixed braids: the canonical decomposition of an element of
//! `P_{m,n}` into one free-group factor per moving strand.
//!
//! For each strand `j` from `m+1` to `m+n`, the factor `V_j` is a word in
//! the two-strand loops `a_{1,j} .. a_{j-1,j}`, which generate a free group
//! (strand `j` walking around the strands below it). The factors multiply
//! back to the input: `V_{m+1} V_{m+2} ... V_{m+n} = w`, and since freely
//! reduced words in a free group are unique, equal braids comb to
//! letter-identical forms. That makes combing a second, structurally very
//! different decision procedure for equality of pure mixed braids, used
//! here to cross-check the normal-form oracle.
//!
//! The combing loop peels the top strand: delete strand `j` from the
//! current braid to get `d`, re-read `d` on `j` strands (strand `j`
//! straight), and split off the kernel part `K_j = d^{-1} w`, which moves
//! only strand `j` and is converted to loop letters by a single scan.

use std::collections::BTreeSet;
use std::fmt;

use crate::braid::{ArtinGen, BraidWord, Sign};
use crate::garside;
use crate::mixed::{self, expand_pure_gen, MixedContext};
use crate::{Error, Result};

/// One letter `a_{i,j}^(sign)` of a combed factor; the strand `j` is the
/// factor's strand and is not repeated per letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorLetter {
    pub i: usize,
    pub sign: Sign,
}

impl FactorLetter {
    pub fn new(i: usize, sign: Sign) -> FactorLetter {
        FactorLetter { i, sign }
    }

    pub fn inverse(self) -> FactorLetter {
        FactorLetter {
            i: self.i,
            sign: self.sign.flip(),
        }
    }
}

/// The factor of one moving strand: a freely reduced word over
/// `a_{1,strand} .. a_{strand-1,strand}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandFactor {
    pub strand: usize,
    pub word: Vec<FactorLetter>,
}

impl fmt::Display for StrandFactor {
    /// `V4 = a[1,4] a[2,4]^-1`; an empty factor prints as `V4 = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{} =", self.strand)?;
        if self.word.is_empty() {
            return write!(f, " 1");
        }
        for lt in &self.word {
            write!(f, " a[{},{}]", lt.i, self.strand)?;
            if lt.sign == Sign::Neg {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// The combed form of a pure mixed braid: factors for strands `m+1` through
/// `m+n`, in that order, multiplying back to the source braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombedForm {
    ctx: MixedContext,
    factors: Vec<StrandFactor>,
}

impl CombedForm {
    pub fn ctx(&self) -> MixedContext {
        self.ctx
    }

    /// Factors in multiplication order, one per moving strand.
    pub fn factors(&self) -> &[StrandFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.iter().all(|f| f.word.is_empty())
    }
}

impl fmt::Display for CombedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, factor) in self.factors.iter().enumerate() {
            if t > 0 {
                writeln!(f)?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

fn push_reduced(word: &mut Vec<ArtinGen>, g: ArtinGen) {
    match word.last() {
        Some(&top) if top.index == g.index && top.sign != g.sign => {
            word.pop();
        }
        _ => word.push(g),
    }
}

fn push_factor_reduced(word: &mut Vec<FactorLetter>, lt: FactorLetter) {
    match word.last() {
        Some(&top) if top.i == lt.i && top.sign != lt.sign => {
            word.pop();
        }
        _ => word.push(lt),
    }
}

/// Image of the loop letter `x_t = a_{t,j}` under conjugation by a single
/// crossing of the strands below `j`: `sigma_k x sigma_k^-1` for a positive
/// crossing, `sigma_k^-1 x sigma_k` for a negative one. The image is again
/// a word in the loops; every other generator is fixed:
///
/// - `sigma_k x_k sigma_k^-1 = x_{k+1}`
/// - `sigma_k x_{k+1} sigma_k^-1 = x_{k+1}^-1 x_k x_{k+1}`
/// - `sigma_k^-1 x_k sigma_k = x_k x_{k+1} x_k^-1`
/// - `sigma_k^-1 x_{k+1} sigma_k = x_k`
fn conj_letter(g: ArtinGen, lt: FactorLetter) -> Vec<FactorLetter> {
    let k = g.index;
    let (t, s) = (lt.i, lt.sign);
    match g.sign {
        Sign::Pos => {
            if t == k {
                vec![FactorLetter::new(k + 1, s)]
            } else if t == k + 1 {
                vec![
                    FactorLetter::new(k + 1, Sign::Neg),
                    FactorLetter::new(k, s),
                    FactorLetter::new(k + 1, Sign::Pos),
                ]
            } else {
                vec![lt]
            }
        }
        Sign::Neg => {
            if t == k + 1 {
                vec![FactorLetter::new(k, s)]
            } else if t == k {
                vec![
                    FactorLetter::new(k, Sign::Pos),
                    FactorLetter::new(k + 1, s),
                    FactorLetter::new(k, Sign::Neg),
                ]
            } else {
                vec![lt]
            }
        }
    }
}

/// Conjugates a loop word by a braid word `r` on the strands below `j`:
/// computes the loop word of `r w r^-1`, freely reduced. The first letter
/// of `r` is the outermost conjugator, so the fold starts from the last.
fn conj_by_word(r: &[ArtinGen], seed: FactorLetter) -> Vec<FactorLetter> {
    let mut word = vec![seed];
    for &g in r.iter().rev() {
        let mut next = Vec::with_capacity(word.len());
        for &lt in &word {
            for image in conj_letter(g, lt) {
                push_factor_reduced(&mut next, image);
            }
        }
        word = next;
    }
    word
}

/// Converts a braid that moves only its top strand into the freely reduced
/// loop word it spells in the free group on `a_{1,j} .. a_{j-1,j}`.
///
/// `k` must be declared on exactly `j` strands, be pure, and become trivial
/// when strand `j` is deleted; otherwise this fails with a kernel error.
///
/// The scan tracks the position `p` of strand `j`. Crossings away from `p`
/// accumulate in a residual word `r` on the lower strands (a crossing above
/// `p` slides down one index on its way past the straight tail of strand
/// `j`); a crossing at `p` that starts or closes a loop emits the loop
/// letter conjugated by the residual accumulated so far. At the end the
/// residual must be the trivial braid, which is checked with the oracle.
pub fn extract_kernel_word(k: &BraidWord, j: usize) -> Result<Vec<FactorLetter>> {
    if k.strands() != j {
        return Err(Error::StrandMismatch {
            left: k.strands(),
            right: j,
        });
    }
    let mut p = j;
    let mut r: Vec<ArtinGen> = Vec::new();
    let mut out: Vec<FactorLetter> = Vec::new();
    for &g in k.letters() {
        let idx = g.index;
        if idx + 2 <= p {
            push_reduced(&mut r, g);
        } else if idx >= p + 1 {
            push_reduced(&mut r, ArtinGen::new(idx - 1, g.sign));
        } else if idx == p {
            // Crossing at (p, p+1). A positive crossing closes the loop
            // a_{p,j}; a negative one just moves the strand up.
            if g.sign == Sign::Pos {
                for lt in conj_by_word(&r, FactorLetter::new(p, Sign::Pos)) {
                    push_factor_reduced(&mut out, lt);
                }
            }
            p += 1;
        } else {
            // idx == p - 1: crossing at (p-1, p). A negative crossing opens
            // the loop a_{p-1,j} inverted; a positive one moves down.
            if g.sign == Sign::Neg {
                for lt in conj_by_word(&r, FactorLetter::new(p - 1, Sign::Neg)) {
                    push_factor_reduced(&mut out, lt);
                }
            }
            p -= 1;
        }
    }
    if p != j {
        return Err(Error::KernelNotLocal);
    }
    if !r.is_empty() {
        let residual = BraidWord::new(j - 1, r).expect("indices below j - 1");
        if !garside::is_trivial(&residual) {
            return Err(Error::KernelNotLocal);
        }
    }
    Ok(out)
}

/// Combs a pure mixed braid into its canonical factors, top strand first,
/// emitting factors in ascending strand order.
pub fn comb(w: &BraidWord, ctx: MixedContext) -> Result<CombedForm> {
    if w.strands() != ctx.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: ctx.strands(),
        });
    }
    if !mixed::is_pure_member(w, ctx)? {
        return Err(Error::NotAPureMember);
    }
    let mut current = w.free_reduce();
    let mut factors: Vec<StrandFactor> = Vec::with_capacity(ctx.moving());
    for j in (ctx.fixed() + 1..=ctx.strands()).rev() {
        let kept: BTreeSet<usize> = (1..j).collect();
        let d = current.delete_strands(&kept)?.free_reduce();
        let lifted = d.shift_embed(0, j)?;
        let kernel = lifted.inverse().concat(&current)?.free_reduce();
        let word = extract_kernel_word(&kernel, j)?;
        factors.push(StrandFactor { strand: j, word });
        current = d;
    }
    factors.reverse();
    Ok(CombedForm { ctx, factors })
}

/// Multiplies the factors back out into a braid word on `m + n` strands.
pub fn combed_to_word(c: &CombedForm) -> BraidWord {
    let n = c.ctx().strands();
    let mut out = BraidWord::identity(n);
    for factor in c.factors() {
        for lt in &factor.word {
            let loop_word =
                expand_pure_gen(lt.i, factor.strand, n, lt.sign).expect("letters are in range");
            out = out.concat(&loop_word).expect("same strand count");
        }
    }
    out
}

/// Decides equality of two pure mixed braids by combing both and comparing
/// factors letter for letter. Agrees with [`garside::equal`] but shares no
/// machinery with it beyond free reduction.
pub fn equal_via_combing(w1: &BraidWord, w2: &BraidWord, ctx: MixedContext) -> Result<bool> {
    Ok(comb(w1, ctx)? == comb(w2, ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equal;

    fn word(strands: usize, letters: &[(usize, i8)]) -> BraidWord {
        BraidWord::from_signed(strands, letters).unwrap()
    }

    fn ctx(m: usize, n: usize) -> MixedContext {
        MixedContext::new(m, n).unwrap()
    }

    /// Spell a loop word on `j` strands.
    fn expand_factors(letters: &[FactorLetter], j: usize) -> BraidWord {
        let mut out = BraidWord::identity(j);
        for lt in letters {
            out = out
                .concat(&expand_pure_gen(lt.i, j, j, lt.sign).unwrap())
                .unwrap();
        }
        out
    }

    #[test]
    fn conjugation_table_agrees_with_the_oracle() {
        // The letter maps must realize honest conjugation: the expansion of
        // conj_letter(g, x) equals g . expand(x) . g^-1 in the group.
        for j in 2..=5usize {
            for k in 1..j.saturating_sub(1) {
                for t in 1..j {
                    for gs in [Sign::Pos, Sign::Neg] {
                        for s in [Sign::Pos, Sign::Neg] {
                            let g = ArtinGen::new(k, gs);
                            let image = conj_letter(g, FactorLetter::new(t, s));
                            let lhs = expand_factors(&image, j);
                            let conj = BraidWord::new(j, vec![g]).unwrap();
                            let rhs = conj
                                .concat(&expand_pure_gen(t, j, j, s).unwrap())
                                .unwrap()
                                .concat(&conj.inverse())
                                .unwrap();
                            assert!(
                                equal(&lhs, &rhs).unwrap(),
                                "table wrong at j={j} k={k} t={t} {gs:?} {s:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_by_words_agrees_with_the_oracle() {
        let words: [&[(usize, i8)]; 4] = [
            &[(1, 1)],
            &[(1, 1), (2, -1)],
            &[(2, 1), (1, 1), (2, 1)],
            &[(1, -1), (2, 1), (1, -1), (2, -1)],
        ];
        let j = 4;
        for letters in words {
            let r = word(j - 1, letters);
            let lifted = r.shift_embed(0, j).unwrap();
            for t in 1..j {
                let image = conj_by_word(r.letters(), FactorLetter::new(t, Sign::Pos));
                let lhs = expand_factors(&image, j);
                let rhs = lifted
                    .concat(&expand_pure_gen(t, j, j, Sign::Pos).unwrap())
                    .unwrap()
                    .concat(&lifted.inverse())
                    .unwrap();
                assert!(equal(&lhs, &rhs).unwrap(), "conj by {r} at t={t}");
            }
        }
    }

    #[test]
    fn kernel_word_of_loop_generators() {
        assert_eq!(
            extract_kernel_word(&BraidWord::identity(3), 3).unwrap(),
            vec![]
        );
        for (i, j) in [(1, 2), (1, 3), (2, 3), (2, 5), (4, 5)] {
            for s in [Sign::Pos, Sign::Neg] {
                let k = expand_pure_gen(i, j, j, s).unwrap();
                assert_eq!(
                    extract_kernel_word(&k, j).unwrap(),
                    vec![FactorLetter::new(i, s)],
                    "a_({i},{j})^{s:?}"
                );
            }
        }
    }

    #[test]
    fn kernel_word_of_a_product_of_loops() {
        let k = expand_pure_gen(1, 3, 3, Sign::Pos)
            .unwrap()
            .concat(&expand_pure_gen(2, 3, 3, Sign::Pos).unwrap())
            .unwrap();
        assert_eq!(
            extract_kernel_word(&k, 3).unwrap(),
            vec![FactorLetter::new(1, Sign::Pos), FactorLetter::new(2, Sign::Pos)]
        );
    }

    #[test]
    fn kernel_word_with_a_residual_conjugator() {
        // s1 s2 s2 s1^-1 loops strand 3 around both lower strands after a
        // crossing; the scan must conjugate the emitted letter by s1.
        let k = word(3, &[(1, 1), (2, 1), (2, 1), (1, -1)]);
        let got = extract_kernel_word(&k, 3).unwrap();
        assert_eq!(
            got,
            vec![
                FactorLetter::new(2, Sign::Neg),
                FactorLetter::new(1, Sign::Pos),
                FactorLetter::new(2, Sign::Pos),
            ]
        );
        assert!(equal(&expand_factors(&got, 3), &k).unwrap());
    }

    #[test]
    fn kernel_word_is_freely_reduced_and_faithful() {
        let samples = [
            word(3, &[(2, 1), (1, 1), (1, 1), (2, -1), (2, 1), (1, -1), (1, -1), (2, -1)]),
            word(4, &[(3, 1), (2, 1), (1, -1), (1, -1), (2, -1), (3, -1)]),
            word(2, &[(1, 1), (1, 1), (1, 1), (1, 1)]),
        ];
        for k in samples {
            let j = k.strands();
            let got = extract_kernel_word(&k, j).unwrap();
            for pair in got.windows(2) {
                assert!(
                    !(pair[0].i == pair[1].i && pair[0].sign != pair[1].sign),
                    "not freely reduced"
                );
            }
            assert!(equal(&expand_factors(&got, j), &k).unwrap());
        }
    }

    #[test]
    fn kernel_extraction_rejects_bad_input() {
        // Not pure: the strand ends elsewhere.
        assert_eq!(
            extract_kernel_word(&word(2, &[(1, 1)]), 2),
            Err(Error::KernelNotLocal)
        );
        // Pure, but the lower strands braid among themselves.
        assert_eq!(
            extract_kernel_word(&word(3, &[(1, 1), (1, 1)]), 3),
            Err(Error::KernelNotLocal)
        );
        // Declared strand count must match.
        assert!(matches!(
            extract_kernel_word(&word(3, &[]), 4),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn combing_the_identity_and_single_generators() {
        let c = ctx(2, 2);
        let form = comb(&BraidWord::identity(4), c).unwrap();
        assert!(form.is_identity());
        assert_eq!(form.factors().len(), 2);
        assert_eq!(form.factors()[0].strand, 3);
        assert_eq!(form.factors()[1].strand, 4);

        let form = comb(&expand_pure_gen(1, 3, 4, Sign::Pos).unwrap(), c).unwrap();
        assert_eq!(form.factors()[0].word, vec![FactorLetter::new(1, Sign::Pos)]);
        assert!(form.factors()[1].word.is_empty());
    }

    #[test]
    fn combing_an_ordered_product_reads_off_factors() {
        let c = ctx(1, 2);
        let w = expand_pure_gen(1, 2, 3, Sign::Pos)
            .unwrap()
            .concat(&expand_pure_gen(1, 3, 3, Sign::Pos).unwrap())
            .unwrap();
        let form = comb(&w, c).unwrap();
        assert_eq!(form.factors()[0].strand, 2);
        assert_eq!(form.factors()[0].word, vec![FactorLetter::new(1, Sign::Pos)]);
        assert_eq!(form.factors()[1].strand, 3);
        assert_eq!(form.factors()[1].word, vec![FactorLetter::new(1, Sign::Pos)]);
        assert!(equal(&combed_to_word(&form), &w).unwrap());
    }

    #[test]
    fn combing_rejects_non_pure_words() {
        let c = ctx(2, 2);
        assert_eq!(comb(&word(4, &[(3, 1)]), c), Err(Error::NotAPureMember));
        assert_eq!(comb(&word(4, &[(1, 1)]), c), Err(Error::NotAPureMember));
        assert!(matches!(
            comb(&word(3, &[]), c),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn round_trip_through_the_oracle() {
        let c = ctx(2, 2);
        let samples = [
            expand_pure_gen(2, 3, 4, Sign::Neg).unwrap(),
            expand_pure_gen(1, 4, 4, Sign::Pos)
                .unwrap()
                .concat(&expand_pure_gen(2, 3, 4, Sign::Pos).unwrap())
                .unwrap(),
            // A pure member written with raw crossings: s3^2 conjugated.
            word(4, &[(3, 1), (3, 1)]),
            word(4, &[(2, 1), (3, 1), (3, 1), (2, -1)]),
        ];
        for w in samples {
            let form = comb(&w, c).unwrap();
            for factor in form.factors() {
                for lt in &factor.word {
                    assert!(lt.i < factor.strand, "factor letter out of range");
                }
            }
            assert!(equal(&combed_to_word(&form), &w).unwrap(), "round trip {w}");
        }
    }

    #[test]
    fn equal_words_comb_identically() {
        let c = ctx(2, 2);
        let w = word(4, &[(2, 1), (3, 1), (3, 1), (2, -1)]);
        // A different word for the same element, via the normal form.
        let w2 = crate::garside::left_normal_form(&w).to_word();
        assert_ne!(w, w2);
        assert!(equal(&w, &w2).unwrap());
        assert_eq!(comb(&w, c).unwrap(), comb(&w2, c).unwrap());
        assert!(equal_via_combing(&w, &w2, c).unwrap());
    }

    #[test]
    fn distinct_loops_comb_differently() {
        let c = ctx(2, 1);
        let a1 = expand_pure_gen(1, 3, 3, Sign::Pos).unwrap();
        let a2 = expand_pure_gen(2, 3, 3, Sign::Pos).unwrap();
        assert!(!equal_via_combing(&a1, &a2, c).unwrap());
        assert!(!equal(&a1, &a2).unwrap());
    }

    #[test]
    fn trailing_kernel_factors_do_not_disturb_lower_ones() {
        let c = ctx(2, 2);
        let w = word(4, &[(2, 1), (3, 1), (3, 1), (2, -1)]);
        let tail = expand_pure_gen(2, 4, 4, Sign::Neg).unwrap();
        let wt = w.concat(&tail).unwrap();
        let a = comb(&w, c).unwrap();
        let b = comb(&wt, c).unwrap();
        assert_eq!(a.factors()[0], b.factors()[0]);
        assert_ne!(a.factors()[1], b.factors()[1]);
    }

    #[test]
    fn display_of_combed_forms() {
        let c = ctx(1, 2);
        let w = expand_pure_gen(1, 2, 3, Sign::Pos)
            .unwrap()
            .concat(&expand_pure_gen(1, 3, 3, Sign::Neg).unwrap())
            .unwrap();
        let form = comb(&w, c).unwrap();
        assert_eq!(form.to_string(), "V2 = a[1,2]\nV3 = a[1,3]^-1");
        let e = comb(&BraidWord::identity(3), c).unwrap();
        assert_eq!(e.to_string(), "V2 = 1\nV3 = 1");
    }
}
