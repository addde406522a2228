//! Mixed braid groups `B_{m,n}`: the first `m` strands are fixed (deleting
//! the last `n` strands must leave the identity braid), the last `n` are
//! moving.
//!
//! The group is generated by the loop generators `a_1 .. a_m` (strand `m+1`
//! looping around one fixed strand) together with the crossings
//! `sigma_1 .. sigma_{n-1}` of adjacent moving strands. Words over that
//! alphabet, optionally extended by general two-strand loops `a_{i,j}`, are
//! [`MixedWord`]s; [`expand_mixed`] turns them into plain braid words on
//! `m + n` strands.

use std::fmt;

use crate::braid::{ArtinGen, BraidWord, Permutation, Sign};
use crate::garside;
use crate::{Error, Result};

/// Which spelling of the two-strand loop `a_{ij}` to produce.
///
/// Both describe strand `j` looping around strand `i`; they are equal in
/// the group. `TwistLow` puts the double crossing at index `i` (this is the
/// canonical form used by every expansion in this crate), `TwistHigh` puts
/// it at index `j - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PureGenForm {
    TwistLow,
    TwistHigh,
}

/// The braid word of the two-strand loop generator `a_{ij}^(sign)` on `n`
/// strands, in the requested spelling:
///
/// - `TwistLow`:  `s_{j-1} .. s_{i+1} s_i^(±2) s_{i+1}^-1 .. s_{j-1}^-1`
/// - `TwistHigh`: `s_i^-1 .. s_{j-2}^-1 s_{j-1}^(±2) s_{j-2} .. s_i`
///
/// Requires `1 <= i < j <= n`. For `j = i + 1` both reduce to `s_i^(±2)`.
pub fn expand_pure_gen_form(
    i: usize,
    j: usize,
    n: usize,
    sign: Sign,
    form: PureGenForm,
) -> Result<BraidWord> {
    if i < 1 || i >= j || j > n {
        return Err(Error::BadPureGen { i, j, strands: n });
    }
    let mut letters = Vec::with_capacity(2 * (j - i));
    match form {
        PureGenForm::TwistLow => {
            for k in (i + 1..j).rev() {
                letters.push(ArtinGen::new(k, Sign::Pos));
            }
            letters.push(ArtinGen::new(i, sign));
            letters.push(ArtinGen::new(i, sign));
            for k in i + 1..j {
                letters.push(ArtinGen::new(k, Sign::Neg));
            }
        }
        PureGenForm::TwistHigh => {
            for k in i..j - 1 {
                letters.push(ArtinGen::new(k, Sign::Neg));
            }
            letters.push(ArtinGen::new(j - 1, sign));
            letters.push(ArtinGen::new(j - 1, sign));
            for k in (i..j - 1).rev() {
                letters.push(ArtinGen::new(k, Sign::Pos));
            }
        }
    }
    BraidWord::new(n, letters)
}

/// The canonical (`TwistLow`) spelling of `a_{ij}^(sign)` on `n` strands.
pub fn expand_pure_gen(i: usize, j: usize, n: usize, sign: Sign) -> Result<BraidWord> {
    expand_pure_gen_form(i, j, n, sign, PureGenForm::TwistLow)
}

/// The pair `(m, n)`: `m` fixed strands below, `n` moving strands on top,
/// ambient braid group on `m + n` strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixedContext {
    m: usize,
    n: usize,
}

impl MixedContext {
    pub fn new(m: usize, n: usize) -> Result<MixedContext> {
        if m < 1 || n < 1 {
            return Err(Error::BadContext { m, n });
        }
        Ok(MixedContext { m, n })
    }

    pub fn fixed(&self) -> usize {
        self.m
    }

    pub fn moving(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> usize {
        self.m + self.n
    }
}

/// One letter of a mixed word. `Loop` and `Cross` form the irredundant
/// alphabet; `Pure` letters are general two-strand loops, allowed so that
/// relation catalogs can be written down directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixedGen {
    /// `a_i^(sign)`: strand `m+1` loops around fixed strand `i`, `1 <= i <= m`.
    Loop { i: usize, sign: Sign },
    /// `sigma_k^(sign)` in moving-strand numbering: crosses moving strands
    /// `k` and `k+1`, i.e. ambient strands `m+k` and `m+k+1`; `1 <= k <= n-1`.
    Cross { k: usize, sign: Sign },
    /// `a_{ij}^(sign)` with `1 <= i < j` and `m+1 <= j <= m+n` (ambient
    /// numbering): strand `j` loops around strand `i`.
    Pure { i: usize, j: usize, sign: Sign },
}

impl MixedGen {
    pub fn sign(&self) -> Sign {
        match *self {
            MixedGen::Loop { sign, .. }
            | MixedGen::Cross { sign, .. }
            | MixedGen::Pure { sign, .. } => sign,
        }
    }

    pub fn inverse(self) -> MixedGen {
        match self {
            MixedGen::Loop { i, sign } => MixedGen::Loop { i, sign: sign.flip() },
            MixedGen::Cross { k, sign } => MixedGen::Cross { k, sign: sign.flip() },
            MixedGen::Pure { i, j, sign } => MixedGen::Pure { i, j, sign: sign.flip() },
        }
    }

    fn validate(&self, ctx: MixedContext) -> Result<()> {
        let (m, n) = (ctx.fixed(), ctx.moving());
        let bad = |detail: String| Error::BadMixedGen { m, n, detail };
        match *self {
            MixedGen::Loop { i, .. } => {
                if i < 1 || i > m {
                    return Err(bad(format!("loop generator a{i} needs 1 <= {i} <= {m}")));
                }
            }
            MixedGen::Cross { k, .. } => {
                if k < 1 || k + 1 > n {
                    return Err(bad(format!("crossing s{k} needs 1 <= {k} <= {}", n.saturating_sub(1))));
                }
            }
            MixedGen::Pure { i, j, .. } => {
                if i < 1 || i >= j || j < m + 1 || j > m + n {
                    return Err(bad(format!(
                        "pure generator a[{i},{j}] needs 1 <= i < j and {} <= j <= {}",
                        m + 1,
                        m + n
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MixedGen {
    /// The word grammar: `a2`, `s1^-1`, `a[1,4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MixedGen::Loop { i, sign } => {
                write!(f, "a{i}")?;
                if sign == Sign::Neg {
                    write!(f, "^-1")?;
                }
            }
            MixedGen::Cross { k, sign } => {
                write!(f, "s{k}")?;
                if sign == Sign::Neg {
                    write!(f, "^-1")?;
                }
            }
            MixedGen::Pure { i, j, sign } => {
                write!(f, "a[{i},{j}]")?;
                if sign == Sign::Neg {
                    write!(f, "^-1")?;
                }
            }
        }
        Ok(())
    }
}

/// A word over the mixed generator alphabet, bound to a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedWord {
    ctx: MixedContext,
    letters: Vec<MixedGen>,
}

impl MixedWord {
    pub fn identity(ctx: MixedContext) -> MixedWord {
        MixedWord {
            ctx,
            letters: Vec::new(),
        }
    }

    /// Builds a word, validating every letter against the context.
    pub fn new(ctx: MixedContext, letters: Vec<MixedGen>) -> Result<MixedWord> {
        for g in &letters {
            g.validate(ctx)?;
        }
        Ok(MixedWord { ctx, letters })
    }

    pub fn ctx(&self) -> MixedContext {
        self.ctx
    }

    pub fn letters(&self) -> &[MixedGen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> MixedWord {
        MixedWord {
            ctx: self.ctx,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &MixedWord) -> Result<MixedWord> {
        if self.ctx != other.ctx {
            return Err(Error::StrandMismatch {
                left: self.ctx.strands(),
                right: other.ctx.strands(),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(MixedWord {
            ctx: self.ctx,
            letters,
        })
    }

    /// Whether the word uses only the irredundant alphabet (no `Pure`
    /// letters).
    pub fn is_irredundant(&self) -> bool {
        self.letters
            .iter()
            .all(|g| !matches!(g, MixedGen::Pure { .. }))
    }

    /// Shorthand for [`expand_mixed`].
    pub fn expand(&self) -> BraidWord {
        expand_mixed(self)
    }
}

impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, g) in self.letters.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Expands a mixed word into an Artin word on `m + n` strands:
/// `a_i` becomes the loop of strand `m+1` around strand `i`, `sigma_k`
/// becomes the ambient crossing `s_{m+k}`, and `a_{ij}` becomes the
/// canonical two-strand loop word.
pub fn expand_mixed(w: &MixedWord) -> BraidWord {
    let ctx = w.ctx();
    let n = ctx.strands();
    let mut out = BraidWord::identity(n);
    for g in w.letters() {
        let piece = match *g {
            MixedGen::Loop { i, sign } => {
                expand_pure_gen(i, ctx.fixed() + 1, n, sign).expect("validated letter")
            }
            MixedGen::Cross { k, sign } => {
                BraidWord::new(n, vec![ArtinGen::new(ctx.fixed() + k, sign)])
                    .expect("validated letter")
            }
            MixedGen::Pure { i, j, sign } => {
                expand_pure_gen(i, j, n, sign).expect("validated letter")
            }
        };
        out = out.concat(&piece).expect("same strand count");
    }
    out
}

/// Writes the mixed two-strand loop `a_{ij}` (fixed `i`, moving `j`) over
/// the irredundant alphabet by conjugating the loop generator `a_i` with
/// crossings: `s_{j-m-1} .. s_1 a_i s_1^-1 .. s_{j-m-1}^-1`. The expansion
/// of the result equals the canonical loop word letter for letter.
pub fn express_aij_irredundant(i: usize, j: usize, ctx: MixedContext) -> Result<MixedWord> {
    let (m, n) = (ctx.fixed(), ctx.moving());
    if i < 1 || i > m || j < m + 1 || j > m + n {
        return Err(Error::BadPureGen {
            i,
            j,
            strands: ctx.strands(),
        });
    }
    let mut letters = Vec::new();
    for k in (1..j - m).rev() {
        letters.push(MixedGen::Cross { k, sign: Sign::Pos });
    }
    letters.push(MixedGen::Loop { i, sign: Sign::Pos });
    for k in 1..j - m {
        letters.push(MixedGen::Cross { k, sign: Sign::Neg });
    }
    MixedWord::new(ctx, letters)
}

/// Writes the two-strand loop `a_{ij}` of two moving strands
/// (`m+1 <= i < j <= m+n`) over crossings alone:
/// `s_{j-m-1} .. s_{i-m+1} s_{i-m}^2 s_{i-m+1}^-1 .. s_{j-m-1}^-1`.
/// The expansion equals the canonical loop word letter for letter.
pub fn express_moving_aij(i: usize, j: usize, ctx: MixedContext) -> Result<MixedWord> {
    let (m, n) = (ctx.fixed(), ctx.moving());
    if i < m + 1 || i >= j || j > m + n {
        return Err(Error::BadPureGen {
            i,
            j,
            strands: ctx.strands(),
        });
    }
    let (ri, rj) = (i - m, j - m);
    let mut letters = Vec::new();
    for k in (ri + 1..rj).rev() {
        letters.push(MixedGen::Cross { k, sign: Sign::Pos });
    }
    letters.push(MixedGen::Cross { k: ri, sign: Sign::Pos });
    letters.push(MixedGen::Cross { k: ri, sign: Sign::Pos });
    for k in ri + 1..rj {
        letters.push(MixedGen::Cross { k, sign: Sign::Neg });
    }
    MixedWord::new(ctx, letters)
}

/// Membership in `B_{m,n}`: the word's permutation must fix every strand in
/// `1..=m`, and deleting the moving strands must leave the trivial braid.
pub fn is_member(w: &BraidWord, ctx: MixedContext) -> Result<bool> {
    if w.strands() != ctx.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: ctx.strands(),
        });
    }
    let perm = w.permutation();
    if (1..=ctx.fixed()).any(|p| perm.apply(p) != p) {
        return Ok(false);
    }
    let kept = (1..=ctx.fixed()).collect();
    let fixed_part = w.delete_strands(&kept).expect("pointwise fixed set");
    Ok(garside::is_trivial(&fixed_part))
}

/// Membership in the pure subgroup `P_{m,n}`: a member whose permutation is
/// trivial on all strands.
pub fn is_pure_member(w: &BraidWord, ctx: MixedContext) -> Result<bool> {
    Ok(is_member(w, ctx)? && w.permutation().is_identity())
}

/// The permutation a member induces on the moving strands, renumbered to
/// `1..=n`. This is the quotient map onto the symmetric group whose kernel
/// is exactly the pure subgroup.
pub fn moving_permutation(w: &BraidWord, ctx: MixedContext) -> Result<Permutation> {
    if !is_member(w, ctx)? {
        return Err(Error::NotAMember);
    }
    let perm = w.permutation();
    let m = ctx.fixed();
    let images: Vec<usize> = (1..=ctx.moving()).map(|q| perm.apply(q + m) - m).collect();
    Permutation::from_one_line(&images)
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

    #[test]
    fn pure_gen_base_case_is_a_double_crossing() {
        let w = expand_pure_gen_form(1, 2, 2, Sign::Pos, PureGenForm::TwistHigh).unwrap();
        assert_eq!(w, word(2, &[(1, 1), (1, 1)]));
        let w = expand_pure_gen(1, 2, 2, Sign::Pos).unwrap();
        assert_eq!(w, word(2, &[(1, 1), (1, 1)]));
        let w = expand_pure_gen(2, 3, 5, Sign::Neg).unwrap();
        assert_eq!(w, word(5, &[(2, -1), (2, -1)]));
    }

    #[test]
    fn pure_gen_canonical_spelling() {
        let w = expand_pure_gen(1, 3, 3, Sign::Pos).unwrap();
        assert_eq!(w, word(3, &[(2, 1), (1, 1), (1, 1), (2, -1)]));
        // Negative sign inverts only the central square.
        let w = expand_pure_gen(1, 3, 3, Sign::Neg).unwrap();
        assert_eq!(w, word(3, &[(2, 1), (1, -1), (1, -1), (2, -1)]));
        assert!(equal(
            &w,
            &expand_pure_gen(1, 3, 3, Sign::Pos).unwrap().inverse()
        )
        .unwrap());
    }

    #[test]
    fn pure_gen_high_spelling() {
        let w = expand_pure_gen_form(1, 3, 3, Sign::Pos, PureGenForm::TwistHigh).unwrap();
        assert_eq!(w, word(3, &[(1, -1), (2, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn the_two_spellings_agree() {
        for n in 2..=6 {
            for i in 1..n {
                for j in i + 1..=n {
                    for sign in [Sign::Pos, Sign::Neg] {
                        let low = expand_pure_gen_form(i, j, n, sign, PureGenForm::TwistLow)
                            .unwrap();
                        let high = expand_pure_gen_form(i, j, n, sign, PureGenForm::TwistHigh)
                            .unwrap();
                        assert!(
                            equal(&low, &high).unwrap(),
                            "spellings differ for a_({i},{j}) on {n} strands"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pure_gens_are_pure() {
        for (i, j, n) in [(1, 3, 3), (2, 4, 5), (1, 2, 2)] {
            let w = expand_pure_gen(i, j, n, Sign::Pos).unwrap();
            assert!(w.permutation().is_identity());
        }
    }

    #[test]
    fn pure_gen_rejects_bad_indices() {
        assert!(expand_pure_gen(0, 2, 3, Sign::Pos).is_err());
        assert!(expand_pure_gen(2, 2, 3, Sign::Pos).is_err());
        assert!(expand_pure_gen(1, 4, 3, Sign::Pos).is_err());
    }

    #[test]
    fn deleting_the_moving_strand_trivializes_a_loop() {
        let w = expand_pure_gen(1, 3, 3, Sign::Pos).unwrap();
        let kept = [1, 2].into_iter().collect();
        let d = w.delete_strands(&kept).unwrap();
        assert!(d.is_empty());
    }

    #[test]
    fn context_validation() {
        assert!(MixedContext::new(0, 2).is_err());
        assert!(MixedContext::new(2, 0).is_err());
        assert_eq!(ctx(2, 3).strands(), 5);
    }

    #[test]
    fn letter_validation_against_context() {
        let c = ctx(2, 2);
        assert!(MixedWord::new(c, vec![MixedGen::Loop { i: 3, sign: Sign::Pos }]).is_err());
        assert!(MixedWord::new(c, vec![MixedGen::Cross { k: 2, sign: Sign::Pos }]).is_err());
        assert!(MixedWord::new(c, vec![MixedGen::Pure { i: 1, j: 2, sign: Sign::Pos }]).is_err());
        assert!(MixedWord::new(c, vec![MixedGen::Pure { i: 1, j: 4, sign: Sign::Pos }]).is_ok());
        // n = 1 leaves no crossing alphabet at all.
        assert!(MixedWord::new(ctx(2, 1), vec![MixedGen::Cross { k: 1, sign: Sign::Pos }]).is_err());
    }

    #[test]
    fn expansion_examples() {
        let c = ctx(2, 2);
        let w = MixedWord::new(c, vec![MixedGen::Loop { i: 1, sign: Sign::Pos }]).unwrap();
        assert_eq!(w.expand(), word(4, &[(2, 1), (1, 1), (1, 1), (2, -1)]));

        let w = MixedWord::new(c, vec![MixedGen::Cross { k: 1, sign: Sign::Pos }]).unwrap();
        assert_eq!(w.expand(), word(4, &[(3, 1)]));

        let c = ctx(1, 2);
        let w = MixedWord::new(
            c,
            vec![
                MixedGen::Loop { i: 1, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
            ],
        )
        .unwrap();
        assert_eq!(w.expand(), word(3, &[(1, 1), (1, 1), (2, 1)]));
        assert!(is_member(&w.expand(), c).unwrap());
    }

    #[test]
    fn irredundant_expression_of_mixed_loops() {
        let c = ctx(2, 3);
        let w = express_aij_irredundant(1, 3, c).unwrap();
        assert_eq!(w.letters(), &[MixedGen::Loop { i: 1, sign: Sign::Pos }]);

        let w = express_aij_irredundant(1, 4, c).unwrap();
        assert_eq!(
            w.letters(),
            &[
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Loop { i: 1, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Neg },
            ]
        );

        let w = express_aij_irredundant(2, 5, c).unwrap();
        assert_eq!(
            w.letters(),
            &[
                MixedGen::Cross { k: 2, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Loop { i: 2, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Neg },
                MixedGen::Cross { k: 2, sign: Sign::Neg },
            ]
        );
        // The expansion agrees with the direct loop word letter for letter.
        assert_eq!(w.expand(), expand_pure_gen(2, 5, 5, Sign::Pos).unwrap());
        assert!(w.is_irredundant());

        assert!(express_aij_irredundant(3, 4, c).is_err());
        assert!(express_aij_irredundant(1, 2, c).is_err());
    }

    #[test]
    fn crossing_expression_of_moving_loops() {
        let c = ctx(2, 3);
        let w = express_moving_aij(3, 4, c).unwrap();
        assert_eq!(
            w.letters(),
            &[
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
            ]
        );

        let w = express_moving_aij(3, 5, c).unwrap();
        assert_eq!(
            w.letters(),
            &[
                MixedGen::Cross { k: 2, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Cross { k: 2, sign: Sign::Neg },
            ]
        );
        assert_eq!(w.expand(), expand_pure_gen(3, 5, 5, Sign::Pos).unwrap());

        let w = express_moving_aij(4, 5, c).unwrap();
        assert_eq!(
            w.letters(),
            &[
                MixedGen::Cross { k: 2, sign: Sign::Pos },
                MixedGen::Cross { k: 2, sign: Sign::Pos },
            ]
        );

        assert!(express_moving_aij(2, 4, c).is_err());
    }

    #[test]
    fn membership_examples() {
        let c = ctx(2, 2);
        assert!(!is_member(&word(4, &[(1, 1)]), c).unwrap());
        assert!(!is_member(&word(4, &[(2, 1)]), c).unwrap());
        assert!(is_member(&word(4, &[(3, 1)]), c).unwrap());
        assert!(is_member(&BraidWord::identity(4), c).unwrap());
        assert!(is_member(&word(4, &[]), c).unwrap());
        assert!(is_member(&expand_pure_gen(1, 3, 4, Sign::Neg).unwrap(), c).unwrap());
        // Fixed strands may not braid among themselves even if they return
        // to place: s1^2 is pure on strands {1,2} but not trivial.
        assert!(!is_member(&word(4, &[(1, 1), (1, 1)]), c).unwrap());
        assert!(is_member(&word(3, &[(1, 1)]), c).is_err());
    }

    #[test]
    fn pure_membership_examples() {
        let c = ctx(2, 2);
        assert!(is_pure_member(&expand_pure_gen(1, 3, 4, Sign::Pos).unwrap(), c).unwrap());
        assert!(!is_pure_member(&word(4, &[(3, 1)]), c).unwrap());
        assert!(is_pure_member(&BraidWord::identity(4), c).unwrap());
        // Pure in the ambient group but not a member.
        assert!(!is_pure_member(&word(4, &[(1, 1), (1, 1)]), c).unwrap());
    }

    #[test]
    fn membership_is_closed_under_concatenation() {
        let c = ctx(2, 2);
        let u = expand_pure_gen(1, 3, 4, Sign::Pos).unwrap();
        let v = word(4, &[(3, 1)]);
        assert!(is_member(&u.concat(&v).unwrap(), c).unwrap());
        assert!(is_member(&u.inverse().concat(&v).unwrap(), c).unwrap());
        assert!(is_pure_member(
            &u.concat(&v).unwrap().concat(&v.concat(&u).unwrap().inverse()).unwrap(),
            c
        )
        .unwrap());
    }

    #[test]
    fn moving_permutation_is_the_quotient_map() {
        let c = ctx(2, 2);
        let w = word(4, &[(3, 1)]);
        assert_eq!(moving_permutation(&w, c).unwrap().one_line(), vec![2, 1]);

        let c = ctx(1, 3);
        let w = word(4, &[(2, 1), (3, 1)]);
        assert_eq!(
            moving_permutation(&w, c).unwrap().one_line(),
            vec![3, 1, 2]
        );

        // Pure members sit in the kernel.
        let w = expand_pure_gen(1, 2, 4, Sign::Pos).unwrap();
        assert!(moving_permutation(&w, c).unwrap().is_identity());

        // And it is a homomorphism.
        let u = word(4, &[(2, 1), (3, -1)]);
        let v = word(4, &[(3, 1), (2, 1)]);
        let pu = moving_permutation(&u, c).unwrap();
        let pv = moving_permutation(&v, c).unwrap();
        let puv = moving_permutation(&u.concat(&v).unwrap(), c).unwrap();
        assert_eq!(puv, pu.then(&pv));

        assert_eq!(
            moving_permutation(&word(4, &[(1, 1)]), c),
            Err(Error::NotAMember)
        );
    }

    #[test]
    fn display_of_mixed_words() {
        let c = ctx(2, 2);
        let w = MixedWord::new(
            c,
            vec![
                MixedGen::Loop { i: 2, sign: Sign::Neg },
                MixedGen::Cross { k: 1, sign: Sign::Pos },
                MixedGen::Pure { i: 1, j: 4, sign: Sign::Neg },
            ],
        )
        .unwrap();
        assert_eq!(w.to_string(), "a2^-1 s1 a[1,4]^-1");
        assert!(!w.is_irredundant());
        assert_eq!(w.inverse().to_string(), "a[1,4] s1^-1 a2");
    }
}
