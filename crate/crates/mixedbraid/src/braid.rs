//! Braid words and strand permutations.
//!
//! A [`BraidWord`] is a declared strand count together with a sequence of
//! signed Artin generators. Nothing here knows about group equality; words
//! are compared as elements via [`crate::garside`].
//!
//! Composition order: `concat(u, v)` stacks `v` on top of `u`, so in any
//! word the first letter acts first. The generator `sigma_i` crosses the
//! strands currently at positions `i` and `i+1` (positions are 1-based).

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Sign of a generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A signed Artin generator `sigma_index^(±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinGen {
    pub index: usize,
    pub sign: Sign,
}

impl ArtinGen {
    pub fn new(index: usize, sign: Sign) -> ArtinGen {
        ArtinGen { index, sign }
    }

    pub fn inverse(self) -> ArtinGen {
        ArtinGen {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<ArtinGen>,
}

impl BraidWord {
    /// An empty word (the identity braid) on `strands` strands.
    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds a word, checking that every generator index fits the strand
    /// count (`1 <= index <= strands - 1`).
    pub fn new(strands: usize, letters: Vec<ArtinGen>) -> Result<BraidWord> {
        assert!(strands >= 1, "a braid needs at least one strand");
        for g in &letters {
            if g.index < 1 || g.index > strands.saturating_sub(1) {
                return Err(Error::GeneratorOutOfRange {
                    index: g.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Convenience constructor from `(index, sign)` pairs where the sign is
    /// `+1` or `-1`.
    pub fn from_signed(strands: usize, letters: &[(usize, i8)]) -> Result<BraidWord> {
        let letters = letters
            .iter()
            .map(|&(index, s)| ArtinGen {
                index,
                sign: if s >= 0 { Sign::Pos } else { Sign::Neg },
            })
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[ArtinGen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent inverse pairs until none remain. The result is the
    /// same group element; the scan is a single pass with a stack, so the
    /// output length never exceeds the input length.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<ArtinGen> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match out.last() {
                Some(&top) if top.index == g.index && top.sign != g.sign => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The inverse word: letters reversed, signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Stacks `other` on top of `self`. Both words must be declared on the
    /// same number of strands.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The permutation induced on strand endpoints: bottom position to top
    /// position. Signs do not matter here.
    pub fn permutation(&self) -> Permutation {
        // at[p] = which bottom strand is currently at position p (0-based).
        let n = self.strands;
        let mut at: Vec<usize> = (0..n).collect();
        for g in &self.letters {
            at.swap(g.index - 1, g.index);
        }
        let mut map = vec![0usize; n];
        for (pos, &bottom) in at.iter().enumerate() {
            map[bottom] = pos;
        }
        Permutation { map }
    }

    /// Deletes every strand whose bottom position is not in `kept`, tracing
    /// positions through the word. Crossings between two surviving strands
    /// survive (reindexed); all others are dropped. The braid's permutation
    /// must map `kept` to itself as a set.
    pub fn delete_strands(&self, kept: &BTreeSet<usize>) -> Result<BraidWord> {
        let n = self.strands;
        if kept.is_empty() || kept.iter().any(|&p| p < 1 || p > n) {
            return Err(Error::BadKeptSet { strands: n });
        }
        let perm = self.permutation();
        let image: BTreeSet<usize> = kept.iter().map(|&p| perm.apply(p)).collect();
        if image != *kept {
            return Err(Error::KeptSetNotInvariant);
        }

        // occupied[p] says whether the strand currently at position p+1 is kept.
        let mut occupied: Vec<bool> = (1..=n).map(|p| kept.contains(&p)).collect();
        let mut letters = Vec::new();
        for g in &self.letters {
            let lo = g.index - 1;
            if occupied[lo] && occupied[lo + 1] {
                // New index = rank of the lower position among kept positions.
                let rank = occupied[..=lo].iter().filter(|&&b| b).count();
                letters.push(ArtinGen {
                    index: rank,
                    sign: g.sign,
                });
            }
            occupied.swap(lo, lo + 1);
        }
        Ok(BraidWord {
            strands: kept.len(),
            letters,
        })
    }

    /// Re-declares the word on `new_strands` strands, adding `offset` to
    /// every generator index. `shift_embed(w, 0, n)` embeds on the first
    /// strands; a positive offset pushes the word to the upper strands.
    pub fn shift_embed(&self, offset: usize, new_strands: usize) -> Result<BraidWord> {
        assert!(new_strands >= 1, "a braid needs at least one strand");
        let mut letters = Vec::with_capacity(self.letters.len());
        for g in &self.letters {
            let index = g.index + offset;
            if index > new_strands.saturating_sub(1) {
                return Err(Error::ShiftOutOfRange {
                    index: g.index,
                    offset,
                    new_strands,
                });
            }
            letters.push(ArtinGen {
                index,
                sign: g.sign,
            });
        }
        Ok(BraidWord {
            strands: new_strands,
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    /// Prints in the word grammar used by the CLI: `s1 s2^-1`. The identity
    /// prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, g) in self.letters.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            match g.sign {
                Sign::Pos => write!(f, "s{}", g.index)?,
                Sign::Neg => write!(f, "s{}^-1", g.index)?,
            }
        }
        Ok(())
    }
}

/// A permutation of `1..=n`, stored as images. `apply(p)` is the top
/// endpoint of the strand entering at bottom position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // map[p] = image of position p, everything 0-based internally.
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The transposition swapping positions `i` and `i+1` (1-based `i`).
    pub fn transposition(n: usize, i: usize) -> Result<Permutation> {
        if i < 1 || i + 1 > n {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                strands: n,
            });
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i - 1, i);
        Ok(Permutation { map })
    }

    /// Builds a permutation from its one-line notation `[pi(1), ..., pi(n)]`
    /// with 1-based values.
    pub fn from_one_line(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v > n {
                return Err(Error::BadPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[v - 1] {
                return Err(Error::BadPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            map: images.iter().map(|&v| v - 1).collect(),
        })
    }

    /// One-line notation with 1-based values.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based position `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.map[p - 1] + 1
    }

    /// `a.then(b)` applies `a` first: `(a.then(b)).apply(p) = b.apply(a.apply(p))`.
    /// This matches word concatenation: `concat(u, v).permutation() =
    /// u.permutation().then(&v.permutation())`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.map.len(), next.map.len());
        Permutation {
            map: self.map.iter().map(|&v| next.map[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0usize; self.map.len()];
        for (p, &v) in self.map.iter().enumerate() {
            map[v] = p;
        }
        Permutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// Number of inversions: pairs crossing in the associated positive
    /// permutation braid.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for a in 0..self.map.len() {
            for b in a + 1..self.map.len() {
                if self.map[a] > self.map[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub(crate) fn map_slice(&self) -> &[usize] {
        &self.map
    }

    pub(crate) fn swap_entries(&mut self, a: usize, b: usize) {
        self.map.swap(a, b);
    }

    pub(crate) fn from_map(map: Vec<usize>) -> Permutation {
        Permutation { map }
    }
}
