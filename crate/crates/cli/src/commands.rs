use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use skew_cyclic::codec::{Codec, CollisionPolicy, Message};
use skew_cyclic::factorization::{enumerate_factor_pairs_of, table1_report};
use skew_cyclic::serial::{CodeDoc, CtxDoc, DecodeReport, FormDoc, MessageDoc, PolyDoc};
use skew_cyclic::{parse_poly, Codeword, Error, GeneratorForm, RingContext, SkewCyclicCode, SkewPoly};

use crate::reports::{self, AnalyzeReport, EncodeReport, FactorReport, MatrixComparison, PairRow, ReceivedDoc};
use crate::{selftest, Cli, CliError, CodeInput, Command, Format, Policy};

pub type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Factor {
            d1,
            level,
            target,
            table1,
        } => factor(cli, *d1, *level, target.as_deref(), *table1),
        Command::Analyze { code, require_distance } => {
            let (ctx, n, gens) = load_code(cli, code)?;
            let report = analyze(ctx, n, &gens, cli.guard, *require_distance)?;
            emit(cli, &report, || report.render_text(cli.descending))
        }
        Command::Encode { code, message, part } => {
            let (form, n) = load_form(cli, code)?;
            let msg = match message {
                Some(path) => read_json::<MessageDoc>(path)?.to_message(&form)?,
                None => parse_message(&form, part)?,
            };
            let (report, word) = encode(&form, n, &msg)?;
            emit(cli, &report, || report.render_text(&word, cli.descending))
        }
        Command::Decode {
            code,
            received,
            word,
            max_weight,
            policy,
            message_out,
        } => {
            let (form, n) = load_form(cli, code)?;
            let ctx = form.ctx();
            let poly = match (received, word) {
                (Some(path), _) => read_json::<ReceivedDoc>(path)?.poly().clone(),
                (None, Some(text)) => PolyDoc::Text(text.clone()),
                (None, None) => return Err(CliError::Input("decode needs --received or --word".into())),
            };
            let received = poly.to_codeword(ctx, n)?;
            let (report, corrected) = decode(&form, n, &received, *max_weight, *policy, cli.guard)?;
            if let Some(path) = message_out {
                write_file(path, &to_json(&report.message))?;
            }
            emit(cli, &report, || {
                reports::render_decode(&report, &corrected, cli.descending)
            })
        }
        Command::Selftest { fixtures } => selftest::run(cli.guard, fixtures.as_deref()),
    }
}

fn emit<T: Serialize>(cli: &Cli, report: &T, text: impl FnOnce() -> String) -> CliResult<String> {
    Ok(match cli.format {
        Format::Json => to_json(report),
        Format::Text => text(),
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn warn_if_binary(ctx: &RingContext) {
    if ctx.p() == 2 {
        eprintln!("warning: p = 2 forces theta to be the identity; codes are ordinary cyclic codes");
    }
}

fn ring_from_flags(cli: &Cli) -> CliResult<RingContext> {
    let (Some(p), Some(k), Some(s)) = (cli.p, cli.k, cli.s) else {
        return Err(CliError::Input("--p, --k and --s are required".into()));
    };
    let ctx = RingContext::new(p, k, s)?;
    warn_if_binary(&ctx);
    Ok(ctx)
}

/// Flags given alongside a code file must agree with it.
fn check_flags(cli: &Cli, doc: &CodeDoc) -> CliResult<()> {
    let clashes = [
        ("p", cli.p.is_some_and(|p| p != doc.ctx.p)),
        ("k", cli.k.is_some_and(|k| k != doc.ctx.k)),
        ("s", cli.s.is_some_and(|s| s != doc.ctx.s)),
        ("n", cli.n.is_some_and(|n| n != doc.n)),
    ];
    match clashes.iter().find(|(_, clash)| *clash) {
        Some((name, _)) => Err(CliError::Input(format!("--{name} disagrees with the code file"))),
        None => Ok(()),
    }
}

fn load_doc(cli: &Cli, input: &CodeInput) -> CliResult<CodeDoc> {
    match &input.code {
        Some(path) => {
            let doc: CodeDoc = read_json(path)?;
            check_flags(cli, &doc)?;
            warn_if_binary(&doc.ctx.to_ctx()?);
            Ok(doc)
        }
        None => {
            if input.gen.is_empty() {
                return Err(CliError::Input("give --code FILE or at least one --gen".into()));
            }
            let ctx = ring_from_flags(cli)?;
            let n = cli.n.ok_or_else(|| CliError::Input("--n is required".into()))?;
            Ok(CodeDoc {
                ctx: CtxDoc::from_ctx(&ctx),
                n,
                generators: input.gen.iter().map(|g| PolyDoc::Text(g.clone())).collect(),
                form: None,
                stats: None,
            })
        }
    }
}

fn load_code(cli: &Cli, input: &CodeInput) -> CliResult<(RingContext, usize, Vec<SkewPoly>)> {
    let doc = load_doc(cli, input)?;
    let (ctx, gens) = doc.generators()?;
    Ok((ctx, doc.n, gens))
}

fn load_form(cli: &Cli, input: &CodeInput) -> CliResult<(GeneratorForm, usize)> {
    let doc = load_doc(cli, input)?;
    Ok((doc.resolve_form()?, doc.n))
}

fn parse_message(form: &GeneratorForm, parts: &[String]) -> CliResult<Message> {
    let ctx = form.ctx();
    let parts = parts.iter().map(|p| parse_poly(ctx, p)).collect::<Result<_, _>>()?;
    Ok(Message::new(parts))
}

fn factor(cli: &Cli, d1: Option<usize>, level: Option<usize>, target: Option<&str>, table1: bool) -> CliResult<String> {
    if table1 {
        let ctx = RingContext::new(cli.p.unwrap_or(5), cli.k.unwrap_or(3), cli.s.unwrap_or(4))?;
        let report = table1_report(ctx, cli.guard)?;
        return emit(cli, &report, || report.render_text());
    }
    let ctx = ring_from_flags(cli)?;
    let level = level.unwrap_or(ctx.k());
    let ring = ctx.with_level(level)?;
    let target = match (target, cli.n) {
        (Some(text), _) => parse_poly(ring, text)?,
        (None, Some(n)) => SkewPoly::x_pow_minus_one(ring, n),
        (None, None) => return Err(CliError::Input("factor needs --n or --target".into())),
    };
    let d1 = d1.ok_or_else(|| CliError::Input("--d1 is required".into()))?;
    let n = cli.n.or(target.degree()).unwrap_or(0);
    let pairs = enumerate_factor_pairs_of(&target, d1, cli.guard)?;
    let code_stats = |f: &SkewPoly| -> CliResult<_> {
        let g = f.to_level(ctx.k())?.mul_u_pow(ctx.k() - level);
        Ok(SkewCyclicCode::from_generators(ctx, n, &[g])?
            .with_guard(cli.guard)
            .stats()?)
    };
    let mut rows = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        rows.push(PairRow {
            f1: pair.f1.to_string(),
            f2: pair.f2.to_string(),
            codes: vec![code_stats(&pair.f1)?, code_stats(&pair.f2)?],
        });
    }
    let report = FactorReport {
        ctx: CtxDoc::from_ctx(&ctx),
        level,
        target: target.to_string(),
        d1,
        distinct_left: pairs.iter().map(|p| &p.f1).collect::<HashSet<_>>().len(),
        distinct_right: pairs.iter().map(|p| &p.f2).collect::<HashSet<_>>().len(),
        pairs: rows,
    };
    emit(cli, &report, || report.render_text())
}

pub fn analyze(
    ctx: RingContext,
    n: usize,
    gens: &[SkewPoly],
    guard: u64,
    require_distance: bool,
) -> CliResult<AnalyzeReport> {
    let code = SkewCyclicCode::from_generators(ctx, n, gens)?.with_guard(guard);
    // keeps the given generators when they already have a generator shape
    let form = GeneratorForm::resolve(ctx, n, gens)?;
    let mut notes = Vec::new();
    let min_distance = match code.min_distance() {
        Ok(d) => Some(d),
        Err(Error::GuardExceeded { required, guard }) if !require_distance => {
            notes.push(format!(
                "minimum distance skipped: {required} codewords exceed the guard of {guard}"
            ));
            None
        }
        Err(e) => return Err(e.into()),
    };
    let generator_matrix = MatrixComparison::new(&form.generator_matrix(n)?, &form.untwisted_generator_matrix(n)?);
    if !generator_matrix.differing_rows.is_empty() {
        notes.push(format!(
            "G rows {:?} differ from plain shifts of their generator: theta acts on shifted coefficients",
            generator_matrix.differing_rows
        ));
    }
    let parity_check = match &form {
        GeneratorForm::CaseII { .. } => {
            let h = MatrixComparison::new(&form.parity_check_display(n)?, &form.untwisted_parity_check(n)?);
            if !h.differing_rows.is_empty() {
                notes.push(format!(
                    "H rows {:?} differ from plain shifts of the first row",
                    h.differing_rows
                ));
            }
            Some(h)
        }
        _ => None,
    };
    if form.is_extended_shape() {
        notes.push("the code needs more than the two-generator shapes".into());
    }
    Ok(AnalyzeReport {
        ctx: CtxDoc::from_ctx(&ctx),
        n,
        form: FormDoc::from_form(&form),
        rank: form.rank(n)?,
        cardinality: code.size().to_string(),
        gamma: form
            .minimal_generating_set(n)?
            .iter()
            .map(|w| reports::row_strings(w.entries()))
            .collect(),
        generator_matrix,
        parity_check,
        min_distance,
        notes,
    })
}

pub fn encode(form: &GeneratorForm, n: usize, msg: &Message) -> CliResult<(EncodeReport, Codeword)> {
    let ctx = form.ctx();
    let word = Codec::new(form.clone(), n)?.encode(msg)?;
    let report = EncodeReport {
        ctx: CtxDoc::from_ctx(&ctx),
        n,
        codeword: PolyDoc::text(&word.to_poly(ctx)),
        vector: reports::row_strings(word.entries()),
    };
    Ok((report, word))
}

pub fn decode(
    form: &GeneratorForm,
    n: usize,
    received: &Codeword,
    max_weight: usize,
    policy: Policy,
    guard: u64,
) -> CliResult<(DecodeReport, Codeword)> {
    let codec = Codec::new(form.clone(), n)?;
    let policy = match policy {
        Policy::Strict => CollisionPolicy::Strict,
        Policy::CosetLeader => CollisionPolicy::CosetLeader,
    };
    let table = codec.build_table(max_weight, policy, guard)?;
    let outcome = codec.decode(received, &table)?;
    Ok((DecodeReport::from_outcome(form, &outcome), outcome.corrected))
}
