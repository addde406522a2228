//! Coset splitting.
//!
//! Fix a braid `B` on the first `m` strands. The braids on `m + n` strands
//! that keep the first `m` strands setwise invariant and whose induced
//! subbraid on those strands equals `B` form a right coset of the mixed
//! braid group: every such `A` factors as `A = alpha . iota(B)` with `alpha`
//! a mixed braid and `iota(B)` the embedding of `B` that leaves the last `n`
//! strands untouched.
//!
//! The factorization is computed algebraically as `alpha = A . iota(B)^-1`
//! and certified through the Garside oracle; it does not rely on drawing the
//! strands apart. Composition is bottom to top throughout, so `concat(alpha,
//! iota(B))` means "alpha first, then B", matching the picture of `B` glued
//! on top of the mixed part.

use std::collections::BTreeSet;

use crate::braid::BraidWord;
use crate::garside;
use crate::mixed::{self, MixedContext};
use crate::{Error, Result};

/// An opaque braid on the fixed strands: the subbraid every element of the
/// coset must induce on strands `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedBraid {
    word: BraidWord,
}

impl FixedBraid {
    pub fn new(word: BraidWord) -> FixedBraid {
        FixedBraid { word }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    fn check(&self, ctx: MixedContext) -> Result<()> {
        if self.word.strands() != ctx.fixed() {
            return Err(Error::StrandMismatch {
                left: self.word.strands(),
                right: ctx.fixed(),
            });
        }
        Ok(())
    }
}

/// Places the fixed braid on strands `1..=m` of the ambient group, leaving
/// the moving strands straight.
pub fn embed_fixed(b: &FixedBraid, ctx: MixedContext) -> Result<BraidWord> {
    b.check(ctx)?;
    b.word.shift_embed(0, ctx.strands())
}

/// True iff `a`'s permutation keeps `{1..m}` setwise invariant and the
/// subbraid induced on those strands equals `b` in the group on `m` strands.
pub fn is_in_coset(a: &BraidWord, b: &FixedBraid, ctx: MixedContext) -> Result<bool> {
    b.check(ctx)?;
    if a.strands() != ctx.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: ctx.strands(),
        });
    }
    let m = ctx.fixed();
    let perm = a.permutation();
    if (1..=m).any(|p| perm.apply(p) > m) {
        return Ok(false);
    }
    let kept: BTreeSet<usize> = (1..=m).collect();
    let induced = a.delete_strands(&kept)?;
    garside::equal(&induced, &b.word)
}

/// Splits a coset element as `a = alpha . iota(b)` and returns the mixed
/// part `alpha`. Fails with [`Error::NotInCoset`] when `a` does not induce
/// `b` on the fixed strands.
pub fn split(a: &BraidWord, b: &FixedBraid, ctx: MixedContext) -> Result<BraidWord> {
    if !is_in_coset(a, b, ctx)? {
        return Err(Error::NotInCoset);
    }
    let alpha = a.concat(&embed_fixed(b, ctx)?.inverse())?.free_reduce();
    debug_assert!(mixed::is_member(&alpha, ctx).unwrap_or(false));
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Sign;
    use crate::mixed::{expand_mixed, is_member, MixedGen, MixedWord};

    fn ctx22() -> MixedContext {
        MixedContext::new(2, 2).unwrap()
    }

    fn fixed(letters: &[(usize, i8)], m: usize) -> FixedBraid {
        FixedBraid::new(BraidWord::from_signed(m, letters).unwrap())
    }

    #[test]
    fn embedding_keeps_the_word_and_straightens_moving_strands() {
        let ctx = ctx22();
        let empty = fixed(&[], 2);
        assert!(embed_fixed(&empty, ctx).unwrap().is_empty());

        let b = fixed(&[(1, 1)], 2);
        let emb = embed_fixed(&b, ctx).unwrap();
        assert_eq!(emb.strands(), 4);
        assert_eq!(format!("{emb}"), "s1");

        let twisted = fixed(&[(1, 1), (1, 1), (1, -1)], 2);
        let perm = embed_fixed(&twisted, ctx).unwrap().permutation();
        for p in 3..=4 {
            assert_eq!(perm.apply(p), p);
        }
    }

    #[test]
    fn embedding_rejects_wrong_strand_count() {
        let b = fixed(&[(1, 1)], 3);
        assert_eq!(
            embed_fixed(&b, ctx22()),
            Err(Error::StrandMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn membership_in_the_coset() {
        let ctx = ctx22();
        let b = fixed(&[(1, 1), (1, 1)], 2);
        let emb = embed_fixed(&b, ctx).unwrap();

        // The embedded braid itself: mixed part trivial.
        assert!(is_in_coset(&emb, &b, ctx).unwrap());

        // A mixed braid stacked below keeps the induced subbraid intact.
        let g = MixedWord::new(
            ctx,
            vec![
                MixedGen::Loop { i: 1, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Neg },
                MixedGen::Pure { i: 2, j: 4, sign: Sign::Pos },
            ],
        )
        .unwrap();
        let a = expand_mixed(&g).concat(&emb).unwrap();
        assert!(is_in_coset(&a, &b, ctx).unwrap());

        // A different fixed braid is a different coset.
        let other = fixed(&[(1, 1)], 2);
        assert!(!is_in_coset(&emb, &other, ctx).unwrap());
        assert!(!is_in_coset(&a, &other, ctx).unwrap());

        // Crossing a fixed strand with a moving one leaves the coset union.
        let stray = BraidWord::from_signed(4, &[(2, 1)]).unwrap();
        assert!(!is_in_coset(&stray, &fixed(&[], 2), ctx).unwrap());
    }

    #[test]
    fn split_round_trips() {
        let ctx = ctx22();
        let b = fixed(&[(1, -1), (1, -1), (1, -1)], 2);
        let emb = embed_fixed(&b, ctx).unwrap();

        let g = MixedWord::new(
            ctx,
            vec![
                MixedGen::Pure { i: 1, j: 3, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Loop { i: 2, sign: Sign::Neg },
            ],
        )
        .unwrap();
        let expanded = expand_mixed(&g);
        let a = expanded.concat(&emb).unwrap();

        let alpha = split(&a, &b, ctx).unwrap();
        assert!(is_member(&alpha, ctx).unwrap());
        assert!(garside::equal(&alpha, &expanded).unwrap());
        let rebuilt = alpha.concat(&emb).unwrap();
        assert!(garside::equal(&rebuilt, &a).unwrap());

        // Trivial mixed part.
        let alpha = split(&emb, &b, ctx).unwrap();
        assert!(garside::is_trivial(&alpha));

        // Empty fixed braid: the coset is the mixed braid group itself.
        let e = fixed(&[], 2);
        let alpha = split(&expanded, &e, ctx).unwrap();
        assert!(garside::equal(&alpha, &expanded).unwrap());
    }

    #[test]
    fn split_refuses_outside_braids() {
        let ctx = ctx22();
        let b = fixed(&[(1, 1)], 2);
        // Induced subbraid is empty, not sigma_1.
        let a = BraidWord::from_signed(4, &[(3, 1)]).unwrap();
        assert_eq!(split(&a, &b, ctx), Err(Error::NotInCoset));
    }

    #[test]
    fn coset_elements_differ_by_members() {
        let ctx = ctx22();
        let b = fixed(&[(1, 1), (1, 1)], 2);
        let emb = embed_fixed(&b, ctx).unwrap();
        let words = [
            vec![MixedGen::Loop { i: 1, sign: Sign::Pos }],
            vec![
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Pure { i: 1, j: 4, sign: Sign::Neg },
            ],
            vec![
                MixedGen::Pure { i: 2, j: 3, sign: Sign::Pos },
                MixedGen::Loop { i: 2, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Neg },
            ],
        ];
        let elements: Vec<BraidWord> = words
            .iter()
            .map(|ls| {
                expand_mixed(&MixedWord::new(ctx, ls.clone()).unwrap())
                    .concat(&emb)
                    .unwrap()
            })
            .collect();
        for a1 in &elements {
            for a2 in &elements {
                let quotient = a1.concat(&a2.inverse()).unwrap();
                assert!(is_member(&quotient, ctx).unwrap());
            }
        }
    }

    #[test]
    fn deletion_is_a_homomorphism_on_the_stabilizer() {
        let kept: BTreeSet<usize> = (1..=2).collect();
        let stab = [
            BraidWord::from_signed(4, &[(1, 1), (3, -1)]).unwrap(),
            BraidWord::from_signed(4, &[(2, 1), (2, 1), (1, -1)]).unwrap(),
            BraidWord::from_signed(4, &[(3, 1), (2, -1), (2, -1), (1, 1)]).unwrap(),
        ];
        for u in &stab {
            assert!((1..=2).all(|p| u.permutation().apply(p) <= 2));
            for w in &stab {
                let whole = u.concat(w).unwrap().delete_strands(&kept).unwrap();
                let parts = u
                    .delete_strands(&kept)
                    .unwrap()
                    .concat(&w.delete_strands(&kept).unwrap())
                    .unwrap();
                assert!(garside::equal(&whole, &parts).unwrap());
            }
        }
    }
}
