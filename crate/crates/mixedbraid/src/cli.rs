//! Word grammar and command-line front end.
//!
//! The grammar is ASCII and whitespace-separated: `s<k>` is a crossing,
//! `a<i>` a loop around fixed strand `i` (mixed context only), `a[<i>,<j>]`
//! a two-strand loop, and the suffix `^-1` inverts a letter. `#` starts a
//! comment running to the end of the line. In plain mode (`--strands N`)
//! crossing indices are the usual Artin generators; in mixed mode
//! (`--m M --n N`) crossing indices count moving strands, so `s1` crosses
//! ambient strands `m+1` and `m+2`.
//!
//! Subcommands: `nf`, `eq`, `perm`, `member`, `comb`, `expand`, `split`,
//! `verify`, `count`. Every command prints human-readable text by default
//! and a frozen JSON schema under `--json`. Exit codes: 0 for success or a
//! positive answer, 1 for an honest negative (unequal words, failed
//! membership, failed verification, coset mismatch), 2 for usage or parse
//! errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::braid::{ArtinGen, BraidWord, Sign};
use crate::combing::{self, CombedForm};
use crate::coset::{self, FixedBraid};
use crate::garside::{self, NormalForm};
use crate::mixed::{self, MixedContext, MixedGen, MixedWord};
use crate::presentations::{self, FamilyId, VerificationReport};
use crate::{Error, Result};

/// Captured outcome of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "mixedbraid",
    version,
    about = "Compute in mixed braid groups: normal forms, combing, presentations, coset splitting"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// Word context: plain braid group or mixed group.
#[derive(Args)]
struct ModeArgs {
    /// Strand count; words use Artin crossings s1..s{N-1}
    #[arg(long, conflicts_with_all = ["m", "n"], value_name = "N")]
    strands: Option<usize>,
    /// Fixed strand count of a mixed context (with --n)
    #[arg(long, requires = "n", value_name = "M")]
    m: Option<usize>,
    /// Moving strand count of a mixed context (with --m)
    #[arg(long, requires = "m", value_name = "N")]
    n: Option<usize>,
}

/// Mixed context only.
#[derive(Args)]
struct CtxArgs {
    /// Fixed strand count
    #[arg(long, value_name = "M")]
    m: usize,
    /// Moving strand count
    #[arg(long, value_name = "N")]
    n: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Left-greedy normal form of a word
    Nf {
        #[command(flatten)]
        mode: ModeArgs,
        /// Emit the frozen JSON schema instead of text
        #[arg(long)]
        json: bool,
        word: String,
    },
    /// Decide equality of two words (exit 1 when they differ)
    Eq {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long)]
        json: bool,
        word1: String,
        word2: String,
    },
    /// Induced permutation, bottom endpoints to top endpoints
    Perm {
        #[command(flatten)]
        mode: ModeArgs,
        /// Report the permutation of the moving strands only (mixed mode)
        #[arg(long)]
        moving: bool,
        #[arg(long)]
        json: bool,
        word: String,
    },
    /// Test whether an Artin word lies in the mixed braid group
    Member {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Require a pure element: every strand returns to its position
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        json: bool,
        word: String,
    },
    /// Combed form of a pure mixed braid, one factor per moving strand
    Comb {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Read the word in the mixed grammar instead of Artin crossings
        #[arg(long)]
        mixed: bool,
        #[arg(long)]
        json: bool,
        word: String,
    },
    /// Expand a mixed word into Artin crossings
    Expand {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        json: bool,
        /// Print sigma glyphs in human output
        #[arg(long)]
        unicode: bool,
        word: String,
    },
    /// Split coset elements A into (mixed part) . (embedded fixed braid)
    Split {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        json: bool,
        /// Print sigma glyphs in human output
        #[arg(long)]
        unicode: bool,
        /// File of coset elements on m+n strands, one word per line
        #[arg(value_name = "ELEMENTS_FILE")]
        file_a: PathBuf,
        /// File holding the fixed braid on m strands (one word)
        #[arg(value_name = "FIXED_FILE")]
        file_b: PathBuf,
    },
    /// Check relation families against the word-problem oracle
    Verify {
        #[command(flatten)]
        ctx: CtxArgs,
        /// `all` or a comma-separated list of family names (e.g. P1,M3,F5)
        #[arg(long, default_value = "all")]
        families: String,
        #[arg(long)]
        json: bool,
    },
    /// Generator and relation counts: closed forms next to enumerations
    Count {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI on `args` (without the program name) and captures output.
pub fn run<I, S>(args: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("mixedbraid")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return if err.use_stderr() {
                CliOutput { code, stdout: String::new(), stderr: rendered }
            } else {
                CliOutput { code, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok((stdout, code)) => CliOutput { code, stdout, stderr: String::new() },
        Err((code, message)) => CliOutput {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

type CmdResult = std::result::Result<(String, i32), (i32, String)>;

/// Usage and parse problems exit 2; domain-level failures exit 1.
fn code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::BadContext { .. } => 2,
        _ => 1,
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, (i32, String)> {
    r.map_err(|e| (code_for(&e), e.to_string()))
}

enum Mode {
    Artin(usize),
    Mixed(MixedContext),
}

fn resolve_mode(args: &ModeArgs) -> std::result::Result<Mode, (i32, String)> {
    match (args.strands, args.m, args.n) {
        (Some(s), None, None) => {
            if s == 0 {
                Err((2, "--strands must be at least 1".into()))
            } else {
                Ok(Mode::Artin(s))
            }
        }
        (None, Some(m), Some(n)) => Ok(Mode::Mixed(lift(MixedContext::new(m, n))?)),
        _ => Err((2, "specify either --strands N or both --m M and --n N".into())),
    }
}

/// Parses a word in the declared mode and hands back its Artin expansion.
fn word_in_mode(text: &str, mode: &Mode) -> std::result::Result<BraidWord, (i32, String)> {
    match mode {
        Mode::Artin(strands) => lift(parse_artin_word(text, *strands)),
        Mode::Mixed(ctx) => Ok(lift(parse_mixed_word(text, *ctx))?.expand()),
    }
}

fn json_line(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON output is total");
    s.push('\n');
    s
}

/// Swaps the `s` of crossing tokens for a sigma glyph; human output only.
fn sigma_glyphs(word: &str) -> String {
    word.split(' ')
        .map(|tok| match tok.strip_prefix('s') {
            Some(rest) => format!("\u{03c3}{rest}"),
            None => tok.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Nf { mode, json, word } => {
            let mode = resolve_mode(&mode)?;
            let nf = garside::left_normal_form(&word_in_mode(&word, &mode)?);
            if json {
                Ok((json_line(&nf_json(&nf)), 0))
            } else {
                Ok((format!("{nf}\n"), 0))
            }
        }
        Cmd::Eq { mode, json, word1, word2 } => {
            let mode = resolve_mode(&mode)?;
            let u = word_in_mode(&word1, &mode)?;
            let v = word_in_mode(&word2, &mode)?;
            let equal = lift(garside::equal(&u, &v))?;
            let code = if equal { 0 } else { 1 };
            if json {
                Ok((json_line(&json!({ "equal": equal })), code))
            } else {
                Ok((format!("{}\n", if equal { "equal" } else { "not equal" }), code))
            }
        }
        Cmd::Perm { mode, moving, json, word } => {
            let mode = resolve_mode(&mode)?;
            let expanded = word_in_mode(&word, &mode)?;
            let perm = match (&mode, moving) {
                (Mode::Artin(_), true) => {
                    return Err((2, "--moving needs a mixed context (--m/--n)".into()))
                }
                (Mode::Mixed(ctx), true) => lift(mixed::moving_permutation(&expanded, *ctx))?,
                (_, false) => expanded.permutation(),
            };
            let images = perm.one_line();
            if json {
                Ok((json_line(&json!({ "strands": perm.n(), "images": images })), 0))
            } else {
                let text: Vec<String> = images.iter().map(|v| v.to_string()).collect();
                Ok((format!("{}\n", text.join(" ")), 0))
            }
        }
        Cmd::Member { ctx, pure, json, word } => {
            let ctx = lift(MixedContext::new(ctx.m, ctx.n))?;
            let w = lift(parse_artin_word(&word, ctx.strands()))?;
            let member = if pure {
                lift(mixed::is_pure_member(&w, ctx))?
            } else {
                lift(mixed::is_member(&w, ctx))?
            };
            let code = if member { 0 } else { 1 };
            if json {
                Ok((json_line(&json!({ "member": member })), code))
            } else {
                let text = match (pure, member) {
                    (false, true) => "member",
                    (false, false) => "not a member",
                    (true, true) => "pure member",
                    (true, false) => "not a pure member",
                };
                Ok((format!("{text}\n"), code))
            }
        }
        Cmd::Comb { ctx, mixed: mixed_grammar, json, word } => {
            let ctx = lift(MixedContext::new(ctx.m, ctx.n))?;
            let w = if mixed_grammar {
                lift(parse_mixed_word(&word, ctx))?.expand()
            } else {
                lift(parse_artin_word(&word, ctx.strands()))?
            };
            let combed = lift(combing::comb(&w, ctx))?;
            if json {
                Ok((json_line(&comb_json(&combed)), 0))
            } else {
                Ok((format!("{combed}\n"), 0))
            }
        }
        Cmd::Expand { ctx, json, unicode, word } => {
            let ctx = lift(MixedContext::new(ctx.m, ctx.n))?;
            let expanded = lift(parse_mixed_word(&word, ctx))?.expand();
            let text = format!("{expanded}");
            if json {
                Ok((json_line(&json!({ "strands": expanded.strands(), "word": text })), 0))
            } else if unicode {
                Ok((format!("{}\n", sigma_glyphs(&text)), 0))
            } else {
                Ok((format!("{text}\n"), 0))
            }
        }
        Cmd::Split { ctx, json, unicode, file_a, file_b } => {
            let ctx = lift(MixedContext::new(ctx.m, ctx.n))?;
            let elements = read_words(&file_a, ctx.strands())?;
            if elements.is_empty() {
                return Err((2, format!("{}: no words found", file_a.display())));
            }
            let fixed_words = read_words(&file_b, ctx.fixed())?;
            let fixed = match fixed_words.len() {
                0 => FixedBraid::new(BraidWord::identity(ctx.fixed())),
                1 => FixedBraid::new(fixed_words.into_iter().next().expect("one word")),
                more => {
                    return Err((
                        2,
                        format!("{}: expected one fixed braid, found {more}", file_b.display()),
                    ))
                }
            };
            let mut alphas = Vec::with_capacity(elements.len());
            for (idx, a) in elements.iter().enumerate() {
                let alpha = coset::split(a, &fixed, ctx)
                    .map_err(|e| (code_for(&e), format!("word {}: {e}", idx + 1)))?;
                alphas.push(format!("{alpha}"));
            }
            if json {
                let value = json!({
                    "m": ctx.fixed(),
                    "n": ctx.moving(),
                    "fixed": format!("{}", fixed.word()),
                    "alphas": alphas,
                });
                Ok((json_line(&value), 0))
            } else {
                let mut out = String::new();
                for alpha in &alphas {
                    if unicode {
                        out.push_str(&sigma_glyphs(alpha));
                    } else {
                        out.push_str(alpha);
                    }
                    out.push('\n');
                }
                Ok((out, 0))
            }
        }
        Cmd::Verify { ctx, families, json } => {
            let ctx = lift(MixedContext::new(ctx.m, ctx.n))?;
            let ids = parse_families(&families)?;
            let report = presentations::verify_families(ctx, &ids);
            let code = if report.all_passed { 0 } else { 1 };
            if json {
                Ok((json_line(&verify_json(&report)), code))
            } else {
                Ok((format!("{report}\n"), code))
            }
        }
        Cmd::Count { ctx, json } => {
            let ctx = lift(MixedContext::new(ctx.m, ctx.n))?;
            let (m, n) = (ctx.fixed(), ctx.moving());
            let gen_closed = presentations::count_generators(m, n);
            let gen_enum = presentations::enumerate_generators(m, n).len() as u64;
            let rel_closed = presentations::count_pure_relations(m, n);
            let rel_tuples = presentations::pure_relation_tuple_count(ctx);
            if json {
                let value = json!({
                    "m": m,
                    "n": n,
                    "generators": { "closed_form": gen_closed, "enumerated": gen_enum },
                    "pure_relations": { "closed_form": rel_closed, "p_family_tuples": rel_tuples },
                });
                Ok((json_line(&value), 0))
            } else {
                Ok((
                    format!(
                        "generators: closed form {gen_closed}, enumerated {gen_enum}\n\
                         pure relations: closed form {rel_closed}, P-family index tuples {rel_tuples}\n"
                    ),
                    0,
                ))
            }
        }
    }
}

fn parse_families(spec: &str) -> std::result::Result<Vec<FamilyId>, (i32, String)> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(FamilyId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for part in spec.split(',') {
        match FamilyId::parse(part) {
            Some(id) => ids.push(id),
            None => {
                let names: Vec<&str> = FamilyId::ALL.iter().map(|id| id.name()).collect();
                return Err((
                    2,
                    format!(
                        "unknown relation family `{}` (choose from: all, {})",
                        part.trim(),
                        names.join(", ")
                    ),
                ));
            }
        }
    }
    Ok(ids)
}

/// Reads one Artin word per non-empty line; `#` comments and blank lines
/// are skipped. Parse errors carry the file's own line numbers.
fn read_words(path: &Path, strands: usize) -> std::result::Result<Vec<BraidWord>, (i32, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (2, format!("cannot read {}: {e}", path.display())))?;
    let mut words = Vec::new();
    for (li, line) in text.lines().enumerate() {
        if tokenize(line).is_empty() {
            continue;
        }
        let word = parse_artin_word(line, strands).map_err(|e| {
            let shifted = match e {
                Error::Parse { col, message, .. } => Error::Parse { line: li + 1, col, message },
                other => other,
            };
            (code_for(&shifted), format!("{}: {shifted}", path.display()))
        })?;
        words.push(word);
    }
    Ok(words)
}

fn nf_json(nf: &NormalForm) -> Value {
    let factors: Vec<Vec<usize>> = nf.factors().iter().map(|p| p.one_line()).collect();
    json!({
        "strands": nf.strands(),
        "delta_power": nf.delta_power(),
        "factors": factors,
    })
}

fn comb_json(c: &CombedForm) -> Value {
    let factors: Vec<Value> = c
        .factors()
        .iter()
        .map(|f| {
            let word: Vec<Value> = f
                .word
                .iter()
                .map(|lt| json!({ "i": lt.i, "j": f.strand, "sign": lt.sign.as_i8() }))
                .collect();
            json!({ "strand": f.strand, "word": word })
        })
        .collect();
    json!({ "m": c.ctx().fixed(), "n": c.ctx().moving(), "factors": factors })
}

fn verify_json(report: &VerificationReport) -> Value {
    let families: Vec<Value> = report
        .families
        .iter()
        .map(|f| {
            let skipped: Vec<Value> = f
                .skipped
                .iter()
                .map(|s| {
                    let bindings: serde_json::Map<String, Value> = s
                        .bindings
                        .iter()
                        .map(|(name, val)| (name.to_string(), json!(val)))
                        .collect();
                    json!({ "bindings": bindings, "reason": s.reason })
                })
                .collect();
            json!({
                "id": f.id.name(),
                "description": f.schema,
                "index_tuples": f.index_tuples,
                "instances": f.instances,
                "passed": f.passed,
                "failed": f.failed,
                "skipped": skipped,
            })
        })
        .collect();
    json!({
        "m": report.m,
        "n": report.n,
        "all_passed": report.all_passed,
        "families": families,
    })
}

/// One token with its 1-based position.
struct Tok<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn tokenize(text: &str) -> Vec<Tok<'_>> {
    let mut toks = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = &raw[..raw.find('#').unwrap_or(raw.len())];
        let mut start: Option<usize> = None;
        for (bi, ch) in line.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    toks.push(Tok { line: li + 1, col: s + 1, text: &line[s..bi] });
                }
            } else if start.is_none() {
                start = Some(bi);
            }
        }
        if let Some(s) = start {
            toks.push(Tok { line: li + 1, col: s + 1, text: &line[s..] });
        }
    }
    toks
}

enum RawKind {
    Cross(usize),
    Loop(usize),
    Pair(usize, usize),
}

fn perr<T>(tok: &Tok<'_>, message: String) -> Result<T> {
    Err(Error::Parse { line: tok.line, col: tok.col, message })
}

fn parse_index(tok: &Tok<'_>, digits: &str, what: &str) -> Result<usize> {
    match digits.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => perr(tok, format!("{what} index must be a positive integer, got `{digits}`")),
    }
}

fn parse_token(tok: &Tok<'_>) -> Result<(RawKind, Sign)> {
    let (core, sign) = match tok.text.find('^') {
        None => (tok.text, Sign::Pos),
        Some(at) => {
            let (head, tail) = tok.text.split_at(at);
            if tail == "^-1" {
                (head, Sign::Neg)
            } else {
                return perr(tok, format!("unsupported exponent `{tail}` (only `^-1`)"));
            }
        }
    };
    let kind = if let Some(rest) = core.strip_prefix("a[") {
        let Some(inner) = rest.strip_suffix(']') else {
            return perr(tok, format!("malformed pair token `{core}` (expected `a[i,j]`)"));
        };
        let Some((si, sj)) = inner.split_once(',') else {
            return perr(tok, format!("malformed pair token `{core}` (expected `a[i,j]`)"));
        };
        RawKind::Pair(parse_index(tok, si, "loop")?, parse_index(tok, sj, "loop")?)
    } else if let Some(rest) = core.strip_prefix('s') {
        RawKind::Cross(parse_index(tok, rest, "crossing")?)
    } else if let Some(rest) = core.strip_prefix('a') {
        RawKind::Loop(parse_index(tok, rest, "loop")?)
    } else {
        return perr(tok, format!("unknown token `{}`", tok.text));
    };
    Ok((kind, sign))
}

/// Parses a word of Artin crossings on the given strand count.
pub fn parse_artin_word(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in tokenize(text) {
        let (kind, sign) = parse_token(&tok)?;
        match kind {
            RawKind::Cross(k) => {
                if strands < 2 || k > strands - 1 {
                    return perr(
                        &tok,
                        format!("crossing index {k} out of range (1..={} on {strands} strands)",
                            strands.saturating_sub(1)),
                    );
                }
                letters.push(ArtinGen::new(k, sign));
            }
            RawKind::Loop(_) | RawKind::Pair(_, _) => {
                return perr(
                    &tok,
                    "loop generators need a mixed context (use --m/--n)".to_string(),
                );
            }
        }
    }
    BraidWord::new(strands, letters)
}

/// Parses a word in the mixed grammar: crossings count moving strands,
/// `a<i>` loops fixed strand `i` around all moving strands, `a[<i>,<j>]`
/// is a two-strand loop in ambient numbering.
pub fn parse_mixed_word(text: &str, ctx: MixedContext) -> Result<MixedWord> {
    let (m, n) = (ctx.fixed(), ctx.moving());
    let mut letters = Vec::new();
    for tok in tokenize(text) {
        let (kind, sign) = parse_token(&tok)?;
        match kind {
            RawKind::Cross(k) => {
                if n < 2 || k > n - 1 {
                    return perr(
                        &tok,
                        format!("crossing index {k} out of range (moving crossings are s1..s{})",
                            n.saturating_sub(1)),
                    );
                }
                letters.push(MixedGen::Cross { k, sign });
            }
            RawKind::Loop(i) => {
                if i > m {
                    return perr(
                        &tok,
                        format!("loop index {i} out of range (fixed strands are 1..={m})"),
                    );
                }
                letters.push(MixedGen::Loop { i, sign });
            }
            RawKind::Pair(i, j) => {
                if i >= j || j < m + 1 || j > m + n {
                    return perr(
                        &tok,
                        format!(
                            "pure generator a[{i},{j}] out of range (need 1 <= i < j and {} <= j <= {})",
                            m + 1,
                            m + n
                        ),
                    );
                }
                letters.push(MixedGen::Pure { i, j, sign });
            }
        }
    }
    MixedWord::new(ctx, letters)
}
