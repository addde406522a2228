// Seeded word generators shared by the integration test targets. Not every
// target uses every helper.
#![allow(dead_code)]

use mixedbraid::{ArtinGen, BraidWord, MixedContext, MixedGen, MixedWord, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Uniform random Artin word of exactly `len` letters on `strands` strands.
pub fn random_artin_word(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2);
    let letters = (0..len)
        .map(|_| ArtinGen::new(rng.gen_range(1..strands), random_sign(rng)))
        .collect();
    BraidWord::new(strands, letters).expect("indices in range")
}

/// Random letter of the mixed alphabet: a loop around a fixed strand, a
/// crossing of adjacent moving strands, or a two-strand loop.
pub fn random_mixed_gen(rng: &mut ChaCha8Rng, ctx: MixedContext) -> MixedGen {
    let (m, n) = (ctx.fixed(), ctx.moving());
    let sign = random_sign(rng);
    let kinds = if n >= 2 { 3 } else { 2 };
    match rng.gen_range(0..kinds) {
        0 => MixedGen::Loop { i: rng.gen_range(1..=m), sign },
        1 => {
            let j = rng.gen_range(m + 1..=m + n);
            let i = rng.gen_range(1..j);
            MixedGen::Pure { i, j, sign }
        }
        _ => MixedGen::Cross { k: rng.gen_range(1..n), sign },
    }
}

/// Random mixed word of exactly `len` letters.
pub fn random_mixed_word(rng: &mut ChaCha8Rng, ctx: MixedContext, len: usize) -> MixedWord {
    let letters = (0..len).map(|_| random_mixed_gen(rng, ctx)).collect();
    MixedWord::new(ctx, letters).expect("letters validated by construction")
}

/// Random product of two-strand loops whose Artin expansion stays within
/// `budget` letters. Every output is a pure element of the mixed group.
pub fn random_pure_word(rng: &mut ChaCha8Rng, ctx: MixedContext, budget: usize) -> BraidWord {
    let (m, n) = (ctx.fixed(), ctx.moving());
    let mut word = BraidWord::identity(ctx.strands());
    loop {
        let j = rng.gen_range(m + 1..=m + n);
        let i = rng.gen_range(1..j);
        let gen = MixedGen::Pure { i, j, sign: random_sign(rng) };
        let piece = MixedWord::new(ctx, vec![gen]).expect("valid loop").expand();
        if word.len() + piece.len() > budget {
            return word;
        }
        word = word.concat(&piece).expect("same strand count");
    }
}
