//! Computational tools for mixed braid groups.
//!
//! A braid on `m + n` strands is a *mixed braid* (an element of `B_{m,n}`)
//! when deleting its last `n` strands leaves the identity braid on the first
//! `m` strands: the first `m` strands are "fixed", the last `n` are "moving".
//! These groups turn up when one studies links in complements of closed
//! braids, in handlebodies and in 3-manifolds. This crate implements the
//! algebra needed to compute in them:
//!
//! - [`braid`]: braid words, permutations, free reduction, strand deletion
//!   and embedding;
//! - [`garside`]: the left-greedy (Garside) normal form, a complete solution
//!   of the word problem used as the equality oracle everywhere else;
//! - [`burau`]: the integral Burau matrices (`t = -1`), an independent
//!   necessary condition for equality used to cross-check the oracle;
//! - [`mixed`]: the generators of `B_{m,n}` and of its pure subgroup
//!   `P_{m,n}`, their expansions into Artin generators, and membership tests;
//! - [`combing`]: the combed normal form of a pure mixed braid, one free
//!   factor per moving strand;
//! - [`presentations`]: the relation catalog for the presentations of
//!   `P_{m,n}` and `B_{m,n}`, with an instantiator and a verification
//!   harness, plus generator/relation counting;
//! - [`coset`]: splitting an element of a coset `B_{m,n} * (B_m x 1_n)` into
//!   its mixed part and its fixed part;
//! - [`cli`]: the word grammar and the command-line front end (see the
//!   `mixedbraid` binary and the `examples/` directory).
//!
//! Conventions (fixed once, used everywhere): strand positions are 1-based;
//! words compose bottom to top, so the first letter of a word acts first;
//! `Permutation` maps the bottom endpoint of a strand to its top endpoint.

pub mod braid;
pub mod burau;
pub mod cli;
pub mod combing;
pub mod coset;
pub mod garside;
pub mod mixed;
pub mod presentations;

pub use braid::{ArtinGen, BraidWord, Permutation, Sign};
pub use combing::CombedForm;
pub use coset::FixedBraid;
pub use garside::NormalForm;
pub use mixed::{MixedContext, MixedGen, MixedWord};
pub use presentations::{FamilyId, RelationFamily, RelationInstance, VerificationReport};

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("not a permutation of 1..={n}: {reason}")]
    BadPermutation { n: usize, reason: String },
    #[error("kept strand set must be a non-empty subset of 1..={strands}")]
    BadKeptSet { strands: usize },
    #[error("kept strand set is not invariant under the braid's permutation")]
    KeptSetNotInvariant,
    #[error("shifted index {index}+{offset} does not fit in {new_strands} strands")]
    ShiftOutOfRange {
        index: usize,
        offset: usize,
        new_strands: usize,
    },
    #[error("invalid pure generator a_({i},{j}) on {strands} strands")]
    BadPureGen { i: usize, j: usize, strands: usize },
    #[error("invalid mixed context: need m >= 1 and n >= 1, got m={m}, n={n}")]
    BadContext { m: usize, n: usize },
    #[error("invalid generator for B_({m},{n}): {detail}")]
    BadMixedGen { m: usize, n: usize, detail: String },
    #[error("braid is not an element of the mixed braid group")]
    NotAMember,
    #[error("braid is not a pure element of the mixed braid group")]
    NotAPureMember,
    #[error("braid does not lie in the kernel for the given strand")]
    KernelNotLocal,
    #[error("braid does not lie in the coset determined by the fixed braid")]
    NotInCoset,
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
