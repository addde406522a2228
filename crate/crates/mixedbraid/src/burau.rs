//! Integral Burau matrices: the (unreduced) Burau representation evaluated
//! at `t = -1`, with arbitrary-precision integer entries.
//!
//! The matrix of a word depends only on the braid it represents, so unequal
//! matrices prove two words distinct. The converse fails in general, which
//! is why this module is a cross-check for [`crate::garside`], not a
//! replacement: agreement of the two on random pairs is strong evidence
//! that neither is miscomputed.

use num_bigint::BigInt;

use crate::braid::{BraidWord, Sign};
use crate::{Error, Result};

/// A dense `n x n` integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl BurauMatrix {
    fn identity(n: usize) -> BurauMatrix {
        let mut entries = vec![BigInt::from(0); n * n];
        for d in 0..n {
            entries[d * n + d] = BigInt::from(1);
        }
        BurauMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[(row - 1) * self.n + (col - 1)]
    }

    fn is_identity(&self) -> bool {
        *self == BurauMatrix::identity(self.n)
    }
}

/// The Burau matrix at `t = -1` of a braid word.
///
/// A positive `sigma_i` acts on the plane of coordinates `(i, i + 1)` by
/// `[[2, -1], [1, 0]]`, its inverse by `[[0, 1], [-1, 2]]`. Multiplying the
/// running product on the right by a generator only rewrites columns `i`
/// and `i + 1`, so each letter costs one pass over two columns.
pub fn burau_matrix(w: &BraidWord) -> BurauMatrix {
    let n = w.strands();
    let mut m = BurauMatrix::identity(n);
    for g in w.letters() {
        let i = g.index - 1;
        for row in 0..n {
            let a = m.entries[row * n + i].clone();
            let b = m.entries[row * n + i + 1].clone();
            let (a2, b2) = match g.sign {
                // col_i' = 2 col_i + col_{i+1}, col_{i+1}' = -col_i
                Sign::Pos => (&a * 2 + &b, -a),
                // col_i' = -col_{i+1}, col_{i+1}' = col_i + 2 col_{i+1}
                Sign::Neg => (-&b, a + b * 2),
            };
            m.entries[row * n + i] = a2;
            m.entries[row * n + i + 1] = b2;
        }
    }
    m
}

/// Compares two words through their Burau matrices. `false` proves the
/// braids distinct; `true` means the invariant cannot tell them apart.
pub fn burau_agree(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(burau_matrix(u) == burau_matrix(v))
}

/// `true` when the matrix of `w` is the identity, a necessary condition
/// for `w` to be the trivial braid.
pub fn burau_trivial(w: &BraidWord) -> bool {
    burau_matrix(w).is_identity()
}
