//! Relation catalog for `B_{m,n}` and a verification harness.
//!
//! Every defining relation the crate knows about is stored as *data*: a
//! template whose letters carry affine index expressions, together with the
//! side conditions under which the relation is asserted. Instantiating a
//! family for a concrete context enumerates all index tuples satisfying the
//! conditions, expands both sides to plain braid words, and checks them with
//! the Garside oracle. The harness certifies identities; it never trusts the
//! catalog.
//!
//! Families fall into groups:
//!
//! * `P1..P4`: relations among the pure loops `a[i,j]` alone.
//! * `M1..M5`: how a crossing conjugates a pure loop, split by the position
//!   of the crossing relative to the loop's strands.
//! * `S1..S3`: braid relations among the moving crossings and the squaring
//!   rule `sigma_k^2 = a[k,k+1]`.
//! * `PP1..PP4`, `MP1..MP3`: the same material restated after dropping the
//!   loops that are expressible through crossings.
//! * `R1..R4`: the relation set over the alphabet of fixed-strand loops
//!   `a[i,j]` (`i <= m`) plus crossings.
//! * `I1..I3`: the relation set over the irredundant alphabet `a[1,m+1] ..
//!   a[m,m+1]` plus crossings.
//! * `F1..F5`: the final presentation after relabeling `a_i = a[i,m+1]` and
//!   numbering crossings relative to the moving strands.
//!
//! Inside templates and reports, `a[i,j]` indices and crossing indices are
//! ambient strand numbers (so the moving crossings are `sigma_{m+1} ..
//! sigma_{m+n-1}`), except in the `F*` families whose schemas are stated in
//! moving-strand numbering; their templates shift by `m` internally.
//!
//! Index tuples that satisfy a family's stated conditions but name a symbol
//! outside the generator alphabet (this happens where the case split
//! degenerates, e.g. `M3` when `j = i+1`) are not silently dropped: they are
//! recorded as [`SkippedTuple`]s with the violated condition spelled out.

use std::fmt;

use crate::braid::Sign;
use crate::garside;
use crate::mixed::{MixedContext, MixedGen, MixedWord};
use crate::Result;

/// Identifier of a relation family, in catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    P1,
    P2,
    P3,
    P4,
    M1,
    M2,
    M3,
    M4,
    M5,
    S1,
    S2,
    S3,
    PP1,
    PP2,
    PP3,
    PP4,
    MP1,
    MP2,
    MP3,
    R1,
    R2,
    R3,
    R4,
    I1,
    I2,
    I3,
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl FamilyId {
    /// All family ids, in catalog order.
    pub const ALL: [FamilyId; 31] = [
        FamilyId::P1,
        FamilyId::P2,
        FamilyId::P3,
        FamilyId::P4,
        FamilyId::M1,
        FamilyId::M2,
        FamilyId::M3,
        FamilyId::M4,
        FamilyId::M5,
        FamilyId::S1,
        FamilyId::S2,
        FamilyId::S3,
        FamilyId::PP1,
        FamilyId::PP2,
        FamilyId::PP3,
        FamilyId::PP4,
        FamilyId::MP1,
        FamilyId::MP2,
        FamilyId::MP3,
        FamilyId::R1,
        FamilyId::R2,
        FamilyId::R3,
        FamilyId::R4,
        FamilyId::I1,
        FamilyId::I2,
        FamilyId::I3,
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P1 => "P1",
            FamilyId::P2 => "P2",
            FamilyId::P3 => "P3",
            FamilyId::P4 => "P4",
            FamilyId::M1 => "M1",
            FamilyId::M2 => "M2",
            FamilyId::M3 => "M3",
            FamilyId::M4 => "M4",
            FamilyId::M5 => "M5",
            FamilyId::S1 => "S1",
            FamilyId::S2 => "S2",
            FamilyId::S3 => "S3",
            FamilyId::PP1 => "PP1",
            FamilyId::PP2 => "PP2",
            FamilyId::PP3 => "PP3",
            FamilyId::PP4 => "PP4",
            FamilyId::MP1 => "MP1",
            FamilyId::MP2 => "MP2",
            FamilyId::MP3 => "MP3",
            FamilyId::R1 => "R1",
            FamilyId::R2 => "R2",
            FamilyId::R3 => "R3",
            FamilyId::R4 => "R4",
            FamilyId::I1 => "I1",
            FamilyId::I2 => "I2",
            FamilyId::I3 => "I3",
            FamilyId::F1 => "F1",
            FamilyId::F2 => "F2",
            FamilyId::F3 => "F3",
            FamilyId::F4 => "F4",
            FamilyId::F5 => "F5",
        }
    }

    /// Case-insensitive lookup by name.
    pub fn parse(s: &str) -> Option<FamilyId> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Affine index expression `var + c + cm*m + cn*n` (each part optional).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Ix {
    var: Option<usize>,
    c: i64,
    cm: i64,
    cn: i64,
}

impl Ix {
    fn eval(&self, m: i64, n: i64, vals: &[i64]) -> i64 {
        self.var.map_or(0, |v| vals[v]) + self.c + self.cm * m + self.cn * n
    }

    fn plus(self, d: i64) -> Ix {
        Ix { c: self.c + d, ..self }
    }
}

fn v(i: usize) -> Ix {
    Ix { var: Some(i), c: 0, cm: 0, cn: 0 }
}

/// `var + m`: lifts a moving-strand index to ambient numbering.
fn vm(i: usize) -> Ix {
    Ix { var: Some(i), c: 0, cm: 1, cn: 0 }
}

fn lit(c: i64) -> Ix {
    Ix { var: None, c, cm: 0, cn: 0 }
}

fn m_off(c: i64) -> Ix {
    Ix { var: None, c, cm: 1, cn: 0 }
}

fn n_off(c: i64) -> Ix {
    Ix { var: None, c, cm: 0, cn: 1 }
}

fn mn_off(c: i64) -> Ix {
    Ix { var: None, c, cm: 1, cn: 1 }
}

/// `lhs < rhs` when `strict`, else `lhs <= rhs`.
#[derive(Debug, Clone, Copy)]
struct Constraint {
    lhs: Ix,
    rhs: Ix,
    strict: bool,
}

impl Constraint {
    fn holds(&self, m: i64, n: i64, vals: &[i64]) -> bool {
        let a = self.lhs.eval(m, n, vals);
        let b = self.rhs.eval(m, n, vals);
        if self.strict {
            a < b
        } else {
            a <= b
        }
    }
}

fn lt(lhs: Ix, rhs: Ix) -> Constraint {
    Constraint { lhs, rhs, strict: true }
}

fn le(lhs: Ix, rhs: Ix) -> Constraint {
    Constraint { lhs, rhs, strict: false }
}

/// Sign attached to a template letter: fixed, or one of the family's
/// independent sign variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SignSlot {
    Plus,
    Minus,
    Var(usize),
}

impl SignSlot {
    fn resolve(self, signs: &[Sign]) -> Sign {
        match self {
            SignSlot::Plus => Sign::Pos,
            SignSlot::Minus => Sign::Neg,
            SignSlot::Var(k) => signs[k],
        }
    }
}

/// Template letter: a pure loop `a[i,j]` or an ambient crossing.
#[derive(Debug, Clone, Copy)]
enum TSym {
    A(Ix, Ix, SignSlot),
    S(Ix, SignSlot),
}

fn ag(i: Ix, j: Ix, sign: SignSlot) -> TSym {
    TSym::A(i, j, sign)
}

fn cr(k: Ix, sign: SignSlot) -> TSym {
    TSym::S(k, sign)
}

/// One relation family: a pair of template words plus side conditions.
///
/// `always` is a conjunction applied to every tuple (the stated conditions
/// and the generator-domain conditions together); `cases`, when nonempty, is
/// a disjunction of alternative conjunctions of which at least one must hold.
#[derive(Debug, Clone)]
pub struct RelationFamily {
    pub id: FamilyId,
    /// One-line relation scheme with its side conditions.
    pub schema: &'static str,
    var_names: &'static [&'static str],
    sign_vars: usize,
    always: Vec<Constraint>,
    cases: Vec<Vec<Constraint>>,
    lhs: Vec<TSym>,
    rhs: Vec<TSym>,
}

/// A fully indexed relation: both sides are words over the mixed alphabet
/// bound to the same context, so verification is oracle equality of their
/// expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: FamilyId,
    /// Variable bindings in declaration order.
    pub bindings: Vec<(&'static str, usize)>,
    /// Values of the sign variables, all-plus combination first.
    pub signs: Vec<Sign>,
    pub lhs: MixedWord,
    pub rhs: MixedWord,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.family)?;
        for (t, (name, val)) in self.bindings.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}={val}")?;
        }
        for sign in &self.signs {
            write!(f, ",{}", if *sign == Sign::Pos { "+" } else { "-" })?;
        }
        write!(f, "]: {} = {}", self.lhs, self.rhs)
    }
}

/// A tuple that met the stated side conditions but named a symbol outside
/// the generator alphabet; kept so degenerate corners stay visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedTuple {
    pub bindings: Vec<(&'static str, usize)>,
    pub reason: String,
}

/// Result of instantiating one family in one context.
#[derive(Debug, Clone)]
pub struct Instantiation {
    pub instances: Vec<RelationInstance>,
    pub skipped: Vec<SkippedTuple>,
}

/// Per-family verification outcome. `index_tuples` counts admitted index
/// tuples; `instances` counts sign-expanded checks actually run.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub id: FamilyId,
    pub schema: &'static str,
    pub index_tuples: usize,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: Vec<SkippedTuple>,
    /// The failing instances themselves, for diagnosis; empty on a pass.
    pub failures: Vec<RelationInstance>,
}

/// Aggregated verification outcome over a set of families.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub m: usize,
    pub n: usize,
    pub families: Vec<FamilyReport>,
    pub all_passed: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "relation families at m={}, n={}", self.m, self.n)?;
        let mut instances = 0;
        let mut skipped = 0;
        for fam in &self.families {
            instances += fam.instances;
            skipped += fam.skipped.len();
            write!(
                f,
                "  {:<4} tuples {:>4}  instances {:>4}  passed {:>4}  failed {:>2}",
                fam.id.name(),
                fam.index_tuples,
                fam.instances,
                fam.passed,
                fam.failed
            )?;
            if !fam.skipped.is_empty() {
                write!(f, "  skipped {}", fam.skipped.len())?;
            }
            writeln!(f)?;
            for inst in &fam.failures {
                writeln!(f, "       FAILED {inst}")?;
            }
        }
        if self.all_passed {
            write!(f, "all families passed ({instances} instances, {skipped} degenerate tuples skipped)")
        } else {
            write!(f, "FAILURES PRESENT ({instances} instances checked)")
        }
    }
}

/// Builds the full catalog, in [`FamilyId::ALL`] order.
pub fn catalog() -> Vec<RelationFamily> {
    use SignSlot::{Minus as MI, Plus as PL};
    const E: SignSlot = SignSlot::Var(0);
    const F: SignSlot = SignSlot::Var(1);

    let mut fams = Vec::new();

    // P1..P4: relations among pure loops. Vars are ambient strand indices;
    // second indices of loop pairs stay on moving strands.
    {
        let (i, j, r, s) = (0, 1, 2, 3);
        fams.push(RelationFamily {
            id: FamilyId::P1,
            schema: "a[i,j]^-1 a[r,s] a[i,j] = a[r,s]  for i<j<r<s or r<i<j<s",
            var_names: &["i", "j", "r", "s"],
            sign_vars: 0,
            always: vec![
                lt(v(i), v(j)),
                lt(v(r), v(s)),
                le(m_off(1), v(j)),
                le(v(j), mn_off(0)),
                le(m_off(1), v(s)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![vec![lt(v(j), v(r))], vec![lt(v(r), v(i)), lt(v(j), v(s))]],
            lhs: vec![ag(v(i), v(j), MI), ag(v(r), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![ag(v(r), v(s), PL)],
        });
    }
    {
        let (i, j, s) = (0, 1, 2);
        fams.push(RelationFamily {
            id: FamilyId::P2,
            schema: "a[i,j]^-1 a[j,s] a[i,j] = a[i,s] a[j,s] a[i,s]^-1  for i<j<s",
            var_names: &["i", "j", "s"],
            sign_vars: 0,
            always: vec![
                lt(v(i), v(j)),
                lt(v(j), v(s)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), MI), ag(v(j), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![ag(v(i), v(s), PL), ag(v(j), v(s), PL), ag(v(i), v(s), MI)],
        });
        fams.push(RelationFamily {
            id: FamilyId::P3,
            schema: "a[i,j]^-1 a[i,s] a[i,j] = a[i,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1  for i<j<s",
            var_names: &["i", "j", "s"],
            sign_vars: 0,
            always: vec![
                lt(v(i), v(j)),
                lt(v(j), v(s)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), MI), ag(v(i), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![
                ag(v(i), v(s), PL),
                ag(v(j), v(s), PL),
                ag(v(i), v(s), PL),
                ag(v(j), v(s), MI),
                ag(v(i), v(s), MI),
            ],
        });
    }
    {
        let (i, r, j, s) = (0, 1, 2, 3);
        fams.push(RelationFamily {
            id: FamilyId::P4,
            schema: "a[i,j]^-1 a[r,s] a[i,j] = a[i,s] a[j,s] a[i,s]^-1 a[j,s]^-1 a[r,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1  for i<r<j<s",
            var_names: &["i", "r", "j", "s"],
            sign_vars: 0,
            always: vec![
                lt(v(i), v(r)),
                lt(v(r), v(j)),
                lt(v(j), v(s)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), MI), ag(v(r), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![
                ag(v(i), v(s), PL),
                ag(v(j), v(s), PL),
                ag(v(i), v(s), MI),
                ag(v(j), v(s), MI),
                ag(v(r), v(s), PL),
                ag(v(j), v(s), PL),
                ag(v(i), v(s), PL),
                ag(v(j), v(s), MI),
                ag(v(i), v(s), MI),
            ],
        });
    }

    // M1..M5: crossing/loop conjugation, by position of the crossing. The
    // crossing index is either a free variable (M1) or pinned to the loop
    // indices (M2..M5).
    {
        let (k, i, j) = (0, 1, 2);
        fams.push(RelationFamily {
            id: FamilyId::M1,
            schema: "sigma_k^-1 a[i,j]^e sigma_k = a[i,j]^e  for k<=i-2 or i+1<=k<=j-2 or k>=j+1",
            var_names: &["k", "i", "j"],
            sign_vars: 1,
            always: vec![
                le(m_off(1), v(k)),
                le(v(k), mn_off(-1)),
                lt(v(i), v(j)),
                le(m_off(1), v(j)),
                le(v(j), mn_off(0)),
            ],
            cases: vec![
                vec![le(v(k), v(i).plus(-2))],
                vec![le(v(i).plus(1), v(k)), le(v(k), v(j).plus(-2))],
                vec![le(v(j).plus(1), v(k))],
            ],
            lhs: vec![cr(v(k), MI), ag(v(i), v(j), E), cr(v(k), PL)],
            rhs: vec![ag(v(i), v(j), E)],
        });
    }
    {
        let (i, j) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::M2,
            schema: "sigma_{i-1}^-1 a[i,j]^e sigma_{i-1} = a[i-1,j]^e",
            var_names: &["i", "j"],
            sign_vars: 1,
            always: vec![
                le(m_off(1), v(i).plus(-1)),
                le(v(i).plus(-1), mn_off(-1)),
                lt(v(i), v(j)),
                le(v(j), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![cr(v(i).plus(-1), MI), ag(v(i), v(j), E), cr(v(i).plus(-1), PL)],
            rhs: vec![ag(v(i).plus(-1), v(j), E)],
        });
        fams.push(RelationFamily {
            id: FamilyId::M3,
            schema: "sigma_i^-1 a[i,j]^e sigma_i = a[i,j] a[i+1,j]^e a[i,j]^-1",
            var_names: &["i", "j"],
            sign_vars: 1,
            always: vec![
                le(m_off(1), v(i)),
                le(v(i), mn_off(-1)),
                lt(v(i), v(j)),
                le(v(j), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![cr(v(i), MI), ag(v(i), v(j), E), cr(v(i), PL)],
            rhs: vec![ag(v(i), v(j), PL), ag(v(i).plus(1), v(j), E), ag(v(i), v(j), MI)],
        });
        fams.push(RelationFamily {
            id: FamilyId::M4,
            schema: "sigma_{j-1}^-1 a[i,j]^e sigma_{j-1} = a[i,j-1]^e",
            var_names: &["i", "j"],
            sign_vars: 1,
            always: vec![
                le(lit(1), v(i)),
                lt(v(i), v(j)),
                le(m_off(1), v(j).plus(-1)),
                le(v(j).plus(-1), mn_off(-1)),
            ],
            cases: vec![],
            lhs: vec![cr(v(j).plus(-1), MI), ag(v(i), v(j), E), cr(v(j).plus(-1), PL)],
            rhs: vec![ag(v(i), v(j).plus(-1), E)],
        });
        fams.push(RelationFamily {
            id: FamilyId::M5,
            schema: "sigma_j^-1 a[i,j]^e sigma_j = a[i,j] a[i,j+1]^e a[i,j]^-1",
            var_names: &["i", "j"],
            sign_vars: 1,
            always: vec![
                le(lit(1), v(i)),
                lt(v(i), v(j)),
                le(m_off(1), v(j)),
                le(v(j), mn_off(-1)),
            ],
            cases: vec![],
            lhs: vec![cr(v(j), MI), ag(v(i), v(j), E), cr(v(j), PL)],
            rhs: vec![ag(v(i), v(j), PL), ag(v(i), v(j).plus(1), E), ag(v(i), v(j), MI)],
        });
    }

    // S1..S3: the moving crossings braid among themselves, and their squares
    // are the adjacent loops. Commutations are listed once per unordered
    // pair (l >= k+2).
    {
        let (k, l) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::S1,
            schema: "sigma_k sigma_l = sigma_l sigma_k  for l>=k+2 (both crossings moving)",
            var_names: &["k", "l"],
            sign_vars: 0,
            always: vec![le(m_off(1), v(k)), le(v(k).plus(2), v(l)), le(v(l), mn_off(-1))],
            cases: vec![],
            lhs: vec![cr(v(k), PL), cr(v(l), PL)],
            rhs: vec![cr(v(l), PL), cr(v(k), PL)],
        });
    }
    {
        let k = 0;
        fams.push(RelationFamily {
            id: FamilyId::S2,
            schema: "sigma_k sigma_{k+1} sigma_k = sigma_{k+1} sigma_k sigma_{k+1}  for m+1<=k<=m+n-2",
            var_names: &["k"],
            sign_vars: 0,
            always: vec![le(m_off(1), v(k)), le(v(k), mn_off(-2))],
            cases: vec![],
            lhs: vec![cr(v(k), PL), cr(v(k).plus(1), PL), cr(v(k), PL)],
            rhs: vec![cr(v(k).plus(1), PL), cr(v(k), PL), cr(v(k).plus(1), PL)],
        });
        fams.push(RelationFamily {
            id: FamilyId::S3,
            schema: "sigma_k^2 = a[k,k+1]  for m+1<=k<=m+n-1",
            var_names: &["k"],
            sign_vars: 0,
            always: vec![le(m_off(1), v(k)), le(v(k), mn_off(-1))],
            cases: vec![],
            lhs: vec![cr(v(k), PL), cr(v(k), PL)],
            rhs: vec![ag(v(k), v(k).plus(1), PL)],
        });
    }

    // PP1..PP4: the pure-loop relations that survive once loops with a
    // moving first strand are expressible through crossings; first indices
    // of the conjugating pair are pinned to fixed strands.
    {
        let (i, j, r, s) = (0, 1, 2, 3);
        fams.push(RelationFamily {
            id: FamilyId::PP1,
            schema: "a[i,j] a[r,s] = a[r,s] a[i,j]  for r<i<j<s, i<=m, r<=m",
            var_names: &["i", "j", "r", "s"],
            sign_vars: 0,
            always: vec![
                lt(v(r), v(i)),
                le(v(i), m_off(0)),
                lt(v(i), v(j)),
                lt(v(j), v(s)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), PL), ag(v(r), v(s), PL)],
            rhs: vec![ag(v(r), v(s), PL), ag(v(i), v(j), PL)],
        });
    }
    {
        let (i, j, s) = (0, 1, 2);
        fams.push(RelationFamily {
            id: FamilyId::PP2,
            schema: "a[i,j]^-1 a[j,s] a[i,j] = a[i,s] a[j,s] a[i,s]^-1  for i<j<s, i<=m",
            var_names: &["i", "j", "s"],
            sign_vars: 0,
            always: vec![
                le(v(i), m_off(0)),
                lt(v(i), v(j)),
                lt(v(j), v(s)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), MI), ag(v(j), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![ag(v(i), v(s), PL), ag(v(j), v(s), PL), ag(v(i), v(s), MI)],
        });
        fams.push(RelationFamily {
            id: FamilyId::PP3,
            schema: "a[i,j]^-1 a[i,s] a[i,j] = a[i,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1  for i<j<s, i<=m",
            var_names: &["i", "j", "s"],
            sign_vars: 0,
            always: vec![
                le(v(i), m_off(0)),
                lt(v(i), v(j)),
                lt(v(j), v(s)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), MI), ag(v(i), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![
                ag(v(i), v(s), PL),
                ag(v(j), v(s), PL),
                ag(v(i), v(s), PL),
                ag(v(j), v(s), MI),
                ag(v(i), v(s), MI),
            ],
        });
    }
    {
        let (i, r, j, s) = (0, 1, 2, 3);
        fams.push(RelationFamily {
            id: FamilyId::PP4,
            schema: "a[i,j]^-1 a[r,s] a[i,j] = a[i,s] a[j,s] a[i,s]^-1 a[j,s]^-1 a[r,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1  for i<r<j<s, i<=m, r<=m+n-1",
            var_names: &["i", "r", "j", "s"],
            sign_vars: 0,
            always: vec![
                le(v(i), m_off(0)),
                lt(v(i), v(r)),
                lt(v(r), v(j)),
                lt(v(j), v(s)),
                le(v(r), mn_off(-1)),
                le(m_off(1), v(j)),
                le(v(s), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), MI), ag(v(r), v(s), PL), ag(v(i), v(j), PL)],
            rhs: vec![
                ag(v(i), v(s), PL),
                ag(v(j), v(s), PL),
                ag(v(i), v(s), MI),
                ag(v(j), v(s), MI),
                ag(v(r), v(s), PL),
                ag(v(j), v(s), PL),
                ag(v(i), v(s), PL),
                ag(v(j), v(s), MI),
                ag(v(i), v(s), MI),
            ],
        });
    }

    // MP1..MP3 and R1..R3 share templates: conjugation of a fixed-strand
    // loop by a crossing, a distant crossing fixing it, the adjacent one
    // shifting it, and the overlapping one conjugating it. R4 adds the
    // nested commutation that replaces PP1 over the reduced alphabet.
    let conj_fixed = |id, schema| {
        let (k, i, j) = (0, 1, 2);
        RelationFamily {
            id,
            schema,
            var_names: &["k", "i", "j"],
            sign_vars: 1,
            always: vec![
                le(m_off(1), v(k)),
                le(v(k), mn_off(-1)),
                le(lit(1), v(i)),
                le(v(i), m_off(0)),
                le(m_off(1), v(j)),
                le(v(j), mn_off(0)),
            ],
            cases: vec![vec![le(v(k), v(j).plus(-2))], vec![le(v(j).plus(1), v(k))]],
            lhs: vec![cr(v(k), MI), ag(v(i), v(j), E), cr(v(k), PL)],
            rhs: vec![ag(v(i), v(j), E)],
        }
    };
    let shift_fixed = |id, schema| {
        let (i, j) = (0, 1);
        RelationFamily {
            id,
            schema,
            var_names: &["i", "j"],
            sign_vars: 1,
            always: vec![
                le(lit(1), v(i)),
                le(v(i), m_off(0)),
                le(m_off(2), v(j)),
                le(v(j), mn_off(0)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), E)],
            rhs: vec![cr(v(j).plus(-1), PL), ag(v(i), v(j).plus(-1), E), cr(v(j).plus(-1), MI)],
        }
    };
    let overlap_fixed = |id, schema| {
        let (i, j) = (0, 1);
        RelationFamily {
            id,
            schema,
            var_names: &["i", "j"],
            sign_vars: 1,
            always: vec![
                le(lit(1), v(i)),
                le(v(i), m_off(0)),
                le(m_off(1), v(j)),
                le(v(j), mn_off(-1)),
            ],
            cases: vec![],
            lhs: vec![cr(v(j), MI), ag(v(i), v(j), E), cr(v(j), PL)],
            rhs: vec![ag(v(i), v(j), PL), ag(v(i), v(j).plus(1), E), ag(v(i), v(j), MI)],
        }
    };

    fams.push(conj_fixed(
        FamilyId::MP1,
        "sigma_k^-1 a[i,j]^e sigma_k = a[i,j]^e  for k<=j-2 or k>=j+1, i<=m",
    ));
    fams.push(shift_fixed(
        FamilyId::MP2,
        "a[i,j]^e = sigma_{j-1} a[i,j-1]^e sigma_{j-1}^-1  for i<=m, j>=m+2",
    ));
    fams.push(overlap_fixed(
        FamilyId::MP3,
        "sigma_j^-1 a[i,j]^e sigma_j = a[i,j] a[i,j+1]^e a[i,j]^-1  for i<=m",
    ));
    fams.push(conj_fixed(
        FamilyId::R1,
        "sigma_k^-1 a[i,j]^e sigma_k = a[i,j]^e  for k<=j-2 or k>=j+1 (reduced alphabet)",
    ));
    fams.push(shift_fixed(
        FamilyId::R2,
        "a[i,j]^e = sigma_{j-1} a[i,j-1]^e sigma_{j-1}^-1  (reduced alphabet)",
    ));
    fams.push(overlap_fixed(
        FamilyId::R3,
        "sigma_j^-1 a[i,j]^e sigma_j = a[i,j] a[i,j+1]^e a[i,j]^-1  (reduced alphabet)",
    ));
    {
        let (i, j, r) = (0, 1, 2);
        fams.push(RelationFamily {
            id: FamilyId::R4,
            schema: "a[i,j]^e a[r,j+1]^f = a[r,j+1]^f a[i,j]^e  for r<i<=m",
            var_names: &["i", "j", "r"],
            sign_vars: 2,
            always: vec![
                lt(v(r), v(i)),
                le(v(i), m_off(0)),
                le(m_off(1), v(j)),
                le(v(j), mn_off(-1)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), v(j), E), ag(v(r), v(j).plus(1), F)],
            rhs: vec![ag(v(r), v(j).plus(1), F), ag(v(i), v(j), E)],
        });
    }

    // I1..I3: everything over the irredundant alphabet a[1,m+1]..a[m,m+1]
    // plus the moving crossings.
    {
        let (k, i) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::I1,
            schema: "sigma_k^-1 a[i,m+1]^e sigma_k = a[i,m+1]^e  for k>=m+2",
            var_names: &["k", "i"],
            sign_vars: 1,
            always: vec![
                le(m_off(2), v(k)),
                le(v(k), mn_off(-1)),
                le(lit(1), v(i)),
                le(v(i), m_off(0)),
            ],
            cases: vec![],
            lhs: vec![cr(v(k), MI), ag(v(i), m_off(1), E), cr(v(k), PL)],
            rhs: vec![ag(v(i), m_off(1), E)],
        });
    }
    {
        let i = 0;
        fams.push(RelationFamily {
            id: FamilyId::I2,
            schema: "a[i,m+1]^e sigma_{m+1} a[i,m+1] sigma_{m+1} = sigma_{m+1} a[i,m+1] sigma_{m+1} a[i,m+1]^e",
            var_names: &["i"],
            sign_vars: 1,
            always: vec![le(lit(1), v(i)), le(v(i), m_off(0)), le(m_off(1), mn_off(-1))],
            cases: vec![],
            lhs: vec![
                ag(v(i), m_off(1), E),
                cr(m_off(1), PL),
                ag(v(i), m_off(1), PL),
                cr(m_off(1), PL),
            ],
            rhs: vec![
                cr(m_off(1), PL),
                ag(v(i), m_off(1), PL),
                cr(m_off(1), PL),
                ag(v(i), m_off(1), E),
            ],
        });
    }
    {
        let (i, r) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::I3,
            schema: "a[i,m+1]^e (sigma_{m+1} a[r,m+1]^f sigma_{m+1}^-1) = (sigma_{m+1} a[r,m+1]^f sigma_{m+1}^-1) a[i,m+1]^e  for r<i",
            var_names: &["i", "r"],
            sign_vars: 2,
            always: vec![lt(v(r), v(i)), le(v(i), m_off(0)), le(m_off(1), mn_off(-1))],
            cases: vec![],
            lhs: vec![
                ag(v(i), m_off(1), E),
                cr(m_off(1), PL),
                ag(v(r), m_off(1), F),
                cr(m_off(1), MI),
            ],
            rhs: vec![
                cr(m_off(1), PL),
                ag(v(r), m_off(1), F),
                cr(m_off(1), MI),
                ag(v(i), m_off(1), E),
            ],
        });
    }

    // F1..F5: the final presentation, stated in moving-strand numbering
    // (a_i = a[i,m+1], sigma_k = crossing of moving strands k, k+1).
    {
        let (k, l) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::F1,
            schema: "sigma_k sigma_l = sigma_l sigma_k  for l>=k+2 (moving numbering)",
            var_names: &["k", "l"],
            sign_vars: 0,
            always: vec![le(lit(1), v(k)), le(v(k).plus(2), v(l)), le(v(l), n_off(-1))],
            cases: vec![],
            lhs: vec![cr(vm(k), PL), cr(vm(l), PL)],
            rhs: vec![cr(vm(l), PL), cr(vm(k), PL)],
        });
    }
    {
        let k = 0;
        fams.push(RelationFamily {
            id: FamilyId::F2,
            schema: "sigma_k sigma_{k+1} sigma_k = sigma_{k+1} sigma_k sigma_{k+1}  for 1<=k<=n-1 (moving numbering)",
            var_names: &["k"],
            sign_vars: 0,
            always: vec![le(lit(1), v(k)), le(v(k), n_off(-1))],
            cases: vec![],
            lhs: vec![cr(vm(k), PL), cr(vm(k).plus(1), PL), cr(vm(k), PL)],
            rhs: vec![cr(vm(k).plus(1), PL), cr(vm(k), PL), cr(vm(k).plus(1), PL)],
        });
    }
    {
        let (i, k) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::F3,
            schema: "a_i sigma_k = sigma_k a_i  for k>=2 (moving numbering)",
            var_names: &["i", "k"],
            sign_vars: 0,
            always: vec![
                le(lit(1), v(i)),
                le(v(i), m_off(0)),
                le(lit(2), v(k)),
                le(v(k), n_off(-1)),
            ],
            cases: vec![],
            lhs: vec![ag(v(i), m_off(1), PL), cr(vm(k), PL)],
            rhs: vec![cr(vm(k), PL), ag(v(i), m_off(1), PL)],
        });
    }
    {
        let i = 0;
        fams.push(RelationFamily {
            id: FamilyId::F4,
            schema: "a_i sigma_1 a_i sigma_1 = sigma_1 a_i sigma_1 a_i  (moving numbering)",
            var_names: &["i"],
            sign_vars: 0,
            always: vec![le(lit(1), v(i)), le(v(i), m_off(0)), le(m_off(1), mn_off(-1))],
            cases: vec![],
            lhs: vec![
                ag(v(i), m_off(1), PL),
                cr(m_off(1), PL),
                ag(v(i), m_off(1), PL),
                cr(m_off(1), PL),
            ],
            rhs: vec![
                cr(m_off(1), PL),
                ag(v(i), m_off(1), PL),
                cr(m_off(1), PL),
                ag(v(i), m_off(1), PL),
            ],
        });
    }
    {
        let (i, r) = (0, 1);
        fams.push(RelationFamily {
            id: FamilyId::F5,
            schema: "a_i (sigma_1 a_r sigma_1^-1) = (sigma_1 a_r sigma_1^-1) a_i  for r<i (moving numbering)",
            var_names: &["i", "r"],
            sign_vars: 0,
            always: vec![lt(v(r), v(i)), le(v(i), m_off(0)), le(m_off(1), mn_off(-1))],
            cases: vec![],
            lhs: vec![
                ag(v(i), m_off(1), PL),
                cr(m_off(1), PL),
                ag(v(r), m_off(1), PL),
                cr(m_off(1), MI),
            ],
            rhs: vec![
                cr(m_off(1), PL),
                ag(v(r), m_off(1), PL),
                cr(m_off(1), MI),
                ag(v(i), m_off(1), PL),
            ],
        });
    }

    debug_assert_eq!(
        fams.iter().map(|f| f.id).collect::<Vec<_>>(),
        FamilyId::ALL.to_vec()
    );
    fams
}

/// Looks up a single family by id.
pub fn family(id: FamilyId) -> RelationFamily {
    catalog()
        .into_iter()
        .find(|f| f.id == id)
        .expect("every id is in the catalog")
}

/// Resolves a template into mixed letters for one tuple and sign choice.
/// Errors carry the human-readable reason a symbol left the alphabet.
fn resolve_side(
    side: &[TSym],
    ctx: MixedContext,
    vals: &[i64],
    signs: &[Sign],
) -> std::result::Result<Vec<MixedGen>, String> {
    let m = ctx.fixed() as i64;
    let n = ctx.moving() as i64;
    let total = m + n;
    let mut letters = Vec::with_capacity(side.len());
    for sym in side {
        match *sym {
            TSym::A(iexp, jexp, slot) => {
                let iv = iexp.eval(m, n, vals);
                let jv = jexp.eval(m, n, vals);
                if iv < 1 || iv >= jv || jv < m + 1 || jv > total {
                    return Err(format!(
                        "a[{iv},{jv}] is outside the alphabet (needs 1 <= i < j and {} <= j <= {total})",
                        m + 1
                    ));
                }
                letters.push(MixedGen::Pure {
                    i: iv as usize,
                    j: jv as usize,
                    sign: slot.resolve(signs),
                });
            }
            TSym::S(kexp, slot) => {
                let kv = kexp.eval(m, n, vals);
                if kv < m + 1 || kv > total - 1 {
                    return Err(format!(
                        "ambient crossing index {kv} is outside the alphabet (moving crossings are {}..={})",
                        m + 1,
                        total - 1
                    ));
                }
                letters.push(MixedGen::Cross {
                    k: (kv - m) as usize,
                    sign: slot.resolve(signs),
                });
            }
        }
    }
    Ok(letters)
}

/// Enumerates every index tuple admitted by the family's conditions in the
/// given context, in lexicographic order of the declared variables, and
/// expands each over all sign-variable combinations (all-plus first).
pub fn instantiate(fam: &RelationFamily, ctx: MixedContext) -> Instantiation {
    let m = ctx.fixed() as i64;
    let n = ctx.moving() as i64;
    let total = ctx.strands() as i64;
    let nvars = fam.var_names.len();

    let mut instances = Vec::new();
    let mut skipped = Vec::new();

    // Odometer over tuples in 1..=total per variable; conditions trim.
    let mut vals = vec![1i64; nvars];
    'tuples: loop {
        let admitted = fam.always.iter().all(|c| c.holds(m, n, &vals))
            && (fam.cases.is_empty()
                || fam.cases.iter().any(|case| case.iter().all(|c| c.holds(m, n, &vals))));
        if admitted {
            let bindings: Vec<(&'static str, usize)> = fam
                .var_names
                .iter()
                .zip(&vals)
                .map(|(name, val)| (*name, *val as usize))
                .collect();
            // Well-formedness is sign-independent; probe with all-plus.
            let probe = vec![Sign::Pos; fam.sign_vars];
            let ok = resolve_side(&fam.lhs, ctx, &vals, &probe)
                .and_then(|_| resolve_side(&fam.rhs, ctx, &vals, &probe));
            match ok {
                Err(reason) => skipped.push(SkippedTuple { bindings, reason }),
                Ok(_) => {
                    for combo in 0u32..(1 << fam.sign_vars) {
                        let signs: Vec<Sign> = (0..fam.sign_vars)
                            .map(|b| if combo >> b & 1 == 0 { Sign::Pos } else { Sign::Neg })
                            .collect();
                        let lhs = resolve_side(&fam.lhs, ctx, &vals, &signs)
                            .expect("well-formedness is sign-independent");
                        let rhs = resolve_side(&fam.rhs, ctx, &vals, &signs)
                            .expect("well-formedness is sign-independent");
                        instances.push(RelationInstance {
                            family: fam.id,
                            bindings: bindings.clone(),
                            signs,
                            lhs: MixedWord::new(ctx, lhs).expect("resolved letters are validated"),
                            rhs: MixedWord::new(ctx, rhs).expect("resolved letters are validated"),
                        });
                    }
                }
            }
        }
        // Advance the odometer, least-significant variable last.
        for pos in (0..nvars).rev() {
            vals[pos] += 1;
            if vals[pos] <= total {
                continue 'tuples;
            }
            vals[pos] = 1;
        }
        break;
    }

    Instantiation { instances, skipped }
}

/// Checks one instance against the Garside oracle.
pub fn verify_instance(inst: &RelationInstance) -> Result<bool> {
    garside::equal(&inst.lhs.expand(), &inst.rhs.expand())
}

/// Instantiates and verifies one family.
pub fn verify_family(fam: &RelationFamily, ctx: MixedContext) -> FamilyReport {
    let Instantiation { instances, skipped } = instantiate(fam, ctx);
    let signs_per_tuple = 1usize << fam.sign_vars;
    let index_tuples = instances.len() / signs_per_tuple;
    let mut passed = 0;
    let mut failed = 0;
    let mut failures = Vec::new();
    let total = instances.len();
    for inst in instances {
        let ok = verify_instance(&inst).expect("both sides live in the same ambient group");
        if ok {
            passed += 1;
        } else {
            failed += 1;
            failures.push(inst);
        }
    }
    FamilyReport {
        id: fam.id,
        schema: fam.schema,
        index_tuples,
        instances: total,
        passed,
        failed,
        skipped,
        failures,
    }
}

/// Verifies the given families (in catalog order) and aggregates a report.
pub fn verify_families(ctx: MixedContext, ids: &[FamilyId]) -> VerificationReport {
    let mut wanted: Vec<FamilyId> = ids.to_vec();
    wanted.sort();
    wanted.dedup();
    let families: Vec<FamilyReport> = catalog()
        .iter()
        .filter(|f| wanted.contains(&f.id))
        .map(|f| verify_family(f, ctx))
        .collect();
    let all_passed = families.iter().all(|f| f.failed == 0);
    VerificationReport {
        m: ctx.fixed(),
        n: ctx.moving(),
        families,
        all_passed,
    }
}

/// Verifies the entire catalog.
pub fn verify_all(ctx: MixedContext) -> VerificationReport {
    verify_families(ctx, &FamilyId::ALL)
}

/// Number of loop generators `a[i,j]` with `1 <= i < j`, `m+1 <= j <= m+n`:
/// the closed form `n(n+2m-1)/2`.
pub fn count_generators(m: usize, n: usize) -> u64 {
    let (m, n) = (m as u128, n as u128);
    (n * (n + 2 * m - 1) / 2) as u64
}

/// The loop generator pairs themselves, lexicographic by (j, i).
pub fn enumerate_generators(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for j in m + 1..=m + n {
        for i in 1..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Closed form for the number of pure-loop relations:
/// `sum_{t=m-1}^{m+n-2} t(t+1)^2 / 2  -  (m-1) m n (n+2m-1) / 4`.
pub fn count_pure_relations(m: usize, n: usize) -> u64 {
    let (m, n) = (m as u128, n as u128);
    let sum: u128 = (m - 1..=m + n - 2).map(|t| t * (t + 1) * (t + 1)).sum();
    (sum / 2 - (m - 1) * m * n * (n + 2 * m - 1) / 4) as u64
}

/// Relation count of the full pure braid group on `n` strands:
/// `sum_{t=1}^{n-2} t(t+1)^2 / 2`.
pub fn artin_pure_relation_count(n: usize) -> u64 {
    let n = n as u128;
    if n < 2 {
        return 0;
    }
    let sum: u128 = (1..=n - 2).map(|t| t * (t + 1) * (t + 1)).sum();
    (sum / 2) as u64
}

/// Index-tuple count of the enumerated pure-loop families P1..P4; reported
/// next to [`count_pure_relations`] rather than asserted equal, since the
/// closed form does not pin an instance-counting convention.
pub fn pure_relation_tuple_count(ctx: MixedContext) -> u64 {
    [FamilyId::P1, FamilyId::P2, FamilyId::P3, FamilyId::P4]
        .iter()
        .map(|id| {
            let fam = family(*id);
            let inst = instantiate(&fam, ctx);
            (inst.instances.len() >> fam.sign_vars) as u64
        })
        .sum()
}
