//! Left-greedy normal forms for braid words, and the word problem built on
//! them.
//!
//! Every braid is written uniquely as `Delta^k A_1 ... A_l` where `Delta` is
//! the positive half twist, each `A_t` is a simple braid (a positive braid
//! where any two strands cross at most once, identified with its
//! permutation), no `A_t` is trivial or the half twist, and each adjacent
//! pair is left-weighted. Two words are equal in the group exactly when
//! these forms coincide, which is what [`equal`] checks.

use std::fmt;

use crate::braid::{ArtinGen, BraidWord, Permutation, Sign};
use crate::{Error, Result};

/// The normal form `Delta^k A_1 ... A_l` of a braid on `strands` strands.
/// Simple factors are stored as their permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent of the half twist in front.
    pub fn delta_power(&self) -> i64 {
        self.delta
    }

    /// The simple factors, in order of application (first factor acts
    /// first, right after the half twists).
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Number of simple factors (the canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    /// Rebuilds a braid word spelling out this normal form: half twists
    /// first, then each simple factor as its minimal positive word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut out = BraidWord::identity(n);
        if self.delta != 0 {
            let d = delta_word(n);
            let block = if self.delta > 0 { d } else { d.inverse() };
            for _ in 0..self.delta.unsigned_abs() {
                out = out.concat(&block).expect("same strand count");
            }
        }
        for f in &self.factors {
            out = out
                .concat(&permutation_braid_word(f))
                .expect("same strand count");
        }
        out
    }
}

impl fmt::Display for NormalForm {
    /// `D^k . [a b c] . [d e f]` with one-line permutations; the trivial
    /// form prints as `D^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta)?;
        for p in &self.factors {
            let images: Vec<String> = p.one_line().iter().map(|v| v.to_string()).collect();
            write!(f, " . [{}]", images.join(" "))?;
        }
        Ok(())
    }
}

/// Permutation of the positive half twist: `p` goes to `n + 1 - p`.
pub(crate) fn delta_perm(n: usize) -> Permutation {
    Permutation::from_map((0..n).map(|p| n - 1 - p).collect())
}

/// Conjugation by the half twist on a simple factor's permutation:
/// `tau(a)(p) = n + 1 - a(n + 1 - p)`. An involution.
pub(crate) fn tau(a: &Permutation) -> Permutation {
    let n = a.n();
    let m = a.map_slice();
    Permutation::from_map((0..n).map(|p| n - 1 - m[n - 1 - p]).collect())
}

/// Descents of the permutation: positions `i` with `a(i) > a(i + 1)`,
/// 1-based. For a simple braid these are exactly the generators that
/// left-divide it (the starting set).
fn descents(a: &Permutation) -> Vec<bool> {
    let m = a.map_slice();
    let n = a.n();
    let mut d = vec![false; n.saturating_sub(1)];
    for i in 0..n.saturating_sub(1) {
        d[i] = m[i] > m[i + 1];
    }
    d
}

fn starting_set(a: &Permutation) -> Vec<bool> {
    descents(a)
}

/// Generators that right-divide the simple braid: descents of the inverse.
fn finishing_set(a: &Permutation) -> Vec<bool> {
    descents(&a.inverse())
}

/// Moves every generator that can legally cross from the head of `right`
/// into the tail of `left`, keeping both simple. Afterwards the pair is
/// left-weighted. Returns whether anything moved.
fn make_left_weighted(left: &mut Permutation, right: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let s = starting_set(right);
        let f = finishing_set(left);
        let Some(i0) = s
            .iter()
            .zip(f.iter())
            .position(|(&in_s, &in_f)| in_s && !in_f)
        else {
            return moved;
        };
        // Transfer sigma_{i0+1}: left gains it on the right (swap the two
        // values i0 and i0+1), right loses it at the front (swap entries).
        let li = left.inverse();
        let a = li.map_slice()[i0];
        let b = li.map_slice()[i0 + 1];
        left.swap_entries(a, b);
        right.swap_entries(i0, i0 + 1);
        moved = true;
    }
}

/// Spells a permutation as the minimal positive braid word realizing it:
/// repeatedly peel the smallest descent. Length equals the inversion count.
pub fn permutation_braid_word(p: &Permutation) -> BraidWord {
    let n = p.n();
    let mut rest = p.clone();
    let mut letters = Vec::with_capacity(p.inversions());
    loop {
        let d = descents(&rest);
        let Some(i0) = d.iter().position(|&b| b) else {
            break;
        };
        letters.push(ArtinGen::new(i0 + 1, Sign::Pos));
        rest.swap_entries(i0, i0 + 1);
    }
    BraidWord::new(n, letters).expect("indices stay in range")
}

/// The positive half twist on `n` strands as a word, e.g. `s1 s2 s1` for
/// three strands.
pub fn delta_word(n: usize) -> BraidWord {
    permutation_braid_word(&delta_perm(n))
}

/// Computes the left-greedy normal form of a word.
pub fn left_normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let w = w.free_reduce();
    let mut delta: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());
    for g in w.letters() {
        match g.sign {
            Sign::Pos => {
                factors.push(Permutation::transposition(n, g.index).expect("validated"));
            }
            Sign::Neg => {
                // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pushing the
                // Delta^-1 to the front twists every factor already there.
                delta -= 1;
                for f in factors.iter_mut() {
                    *f = tau(f);
                }
                let d = delta_perm(n);
                let t = Permutation::transposition(n, g.index).expect("validated");
                factors.push(d.then(&t));
            }
        }
    }
    normalize(n, delta, factors)
}

/// Restores the three normal-form invariants: no trivial factors, no half
/// twist factors (absorbed into the exponent), adjacent pairs
/// left-weighted. Runs sweeps to a fixpoint.
fn normalize(n: usize, mut delta: i64, mut factors: Vec<Permutation>) -> NormalForm {
    let half_twist = delta_perm(n);
    loop {
        factors.retain(|f| !f.is_identity());

        // A factor equal to the half twist migrates to the front, twisting
        // everything it passes.
        let mut absorbed = false;
        let mut t = 0;
        while t < factors.len() {
            if factors[t] == half_twist {
                factors.remove(t);
                delta += 1;
                for f in factors[..t].iter_mut() {
                    *f = tau(f);
                }
                absorbed = true;
            } else {
                t += 1;
            }
        }

        let mut moved = false;
        for t in (1..factors.len()).rev() {
            let (head, tail) = factors.split_at_mut(t);
            moved |= make_left_weighted(&mut head[t - 1], &mut tail[0]);
        }

        if !absorbed && !moved && factors.iter().all(|f| !f.is_identity()) {
            return NormalForm {
                strands: n,
                delta,
                factors,
            };
        }
    }
}

/// Decides whether two words represent the same braid. The words must be
/// declared on the same number of strands.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(left_normal_form(u) == left_normal_form(v))
}

/// Decides whether a word represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    left_normal_form(w).is_trivial()
}
